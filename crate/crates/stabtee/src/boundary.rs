//! Half-plane analysis: bulk stabilizers, boundary gauge operators and their
//! primary/secondary split.
//!
//! The half-plane `y ≥ 0` is modelled by a strip of width `w`, periodic in `x`,
//! covering `−D ≤ y < H`. Generator translates lying fully inside the strip
//! stand in for the infinite plane; everything below `y = 0` is traced out.
//! The lower half-plane is handled by reflecting the code in `y`.

use std::collections::HashMap;

use serde::Serialize;
use thiserror::Error;

use crate::code::{normalize_generator, CodeSpec};
use crate::entropy::combine;
use crate::fp_linalg::{Echelon, FpMatrix};
use crate::groebner::{buchberger, GroebnerBasis, GroebnerError, ModuleStyle, ModuleVector, MonomialOrder, TermOrder};
use crate::lattice::Geometry;
use crate::laurent::{LaurentPoly, Monomial};
use crate::pauli::{instantiate_entries, symplectic_dual, syndrome, PauliVector, SyndromeVector};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundaryError {
    #[error("operator leaves the probe strip: {0}")]
    SupportViolation(String),
    #[error("operator does not commute with the bulk stabilizers")]
    NotGauge,
    #[error("strip width {width} below the minimum {min}")]
    WidthTooSmall { width: usize, min: usize },
    #[error("{0}")]
    NoConvergence(String),
    #[error("no creating operator up to box side {searched}; the bound is {bound}")]
    Inconclusive { searched: i64, bound: i64 },
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Upper,
    Lower,
}

impl std::str::FromStr for Side {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "upper" => Ok(Side::Upper),
            "lower" => Ok(Side::Lower),
            _ => Err(format!("unknown side '{s}'")),
        }
    }
}

/// Lemma-4 style height: `8r³q⁴ + 5r + 3h`.
pub fn gauge_height_bound(code: &CodeSpec, h: i64) -> i64 {
    let r = code.range();
    let q = code.q as i64;
    8 * r.pow(3) * q.pow(4) + 5 * r + 3 * h
}

/// Side of the square that must hold a creating operator: `2r' + 8r³q⁴ + 2r`.
pub fn anyon_box_bound(code: &CodeSpec, r_prime: i64) -> i64 {
    let r = code.range();
    let q = code.q as i64;
    2 * r_prime + 8 * r.pow(3) * q.pow(4) + 2 * r
}

/// `2(r + q)⁴`, the range allowed for bulk stabilizer generators.
pub fn bulk_range_bound(code: &CodeSpec) -> i64 {
    2 * (code.range() + code.q as i64).pow(4)
}

#[derive(Clone, Debug)]
pub struct HalfPlaneContext {
    pub code: CodeSpec,
    pub side: Side,
    /// Period of the strip along the boundary.
    pub width: usize,
    /// Operators are probed in `0 ≤ y < probe_height` (mirrored for the lower side).
    pub probe_height: i64,
    /// Translates reach up to `y < analysis_height`.
    pub analysis_height: i64,
    /// Translates reach down to `y ≥ −depth`.
    pub depth: i64,
    /// Ascending component ranks for the bulk Gröbner basis.
    pub positions: Vec<usize>,
    oriented: CodeSpec,
}

impl HalfPlaneContext {
    pub fn new(code: &CodeSpec, side: Side, width: usize, probe_height: i64) -> Result<Self, BoundaryError> {
        let r = code.range();
        let min = (2 * r) as usize;
        if width < min {
            return Err(BoundaryError::WidthTooSmall { width, min });
        }
        let oriented = match side {
            Side::Upper => code.clone(),
            Side::Lower => code.reflect_y(),
        };
        let probe_height = probe_height.max(1);
        Ok(HalfPlaneContext {
            code: code.clone(),
            side,
            width,
            probe_height,
            analysis_height: probe_height + 4 * r,
            depth: 2 * r,
            positions: (0..2 * code.q).collect(),
            oriented,
        })
    }

    pub fn with_heights(mut self, analysis_height: i64, depth: i64) -> Self {
        self.analysis_height = analysis_height.max(self.probe_height + 1);
        self.depth = depth.max(1);
        self
    }

    pub fn with_positions(mut self, positions: Vec<usize>) -> Self {
        self.positions = positions;
        self
    }

    /// The code as seen from its bulk: reflected for the lower side.
    pub fn oriented(&self) -> &CodeSpec {
        &self.oriented
    }

    fn to_oriented(&self, op: &PauliVector) -> PauliVector {
        match self.side {
            Side::Upper => op.clone(),
            Side::Lower => op.reflect_y(),
        }
    }

    fn from_oriented(&self, op: &PauliVector) -> PauliVector {
        self.to_oriented(op)
    }

    fn strip(&self) -> Strip {
        Strip::new(&self.oriented, self.width, self.probe_height, self.analysis_height, self.depth)
    }
}

/// Reduced basis under the anti-lexicographic TOP order of the oriented code:
/// its translates lying in `y ≥ 0` span every bulk stabilizer.
pub fn bulk_stabilizer_basis(ctx: &HalfPlaneContext) -> Result<GroebnerBasis, BoundaryError> {
    let gens: Vec<ModuleVector> = ctx.oriented.generators.iter().map(ModuleVector::from_pauli).collect();
    let order = TermOrder::with_positions(MonomialOrder::AntiLexY, ModuleStyle::Top, &ctx.positions)?;
    Ok(buchberger(&gens, &order)?)
}

/// Bulk basis elements as normalized operators in the code's own frame.
pub fn bulk_generators(ctx: &HalfPlaneContext) -> Result<Vec<PauliVector>, BoundaryError> {
    let gb = bulk_stabilizer_basis(ctx)?;
    gb.elements
        .iter()
        .map(|g| {
            let v = g.to_pauli().ok_or_else(|| BoundaryError::Shape("odd module rank".into()))?;
            Ok(normalize_generator(&ctx.from_oriented(&v)))
        })
        .collect()
}

/// Translates of the oriented code inside a periodic strip.
struct Strip {
    p: u32,
    q: usize,
    w: usize,
    h: i64,
    top: i64,
    depth: i64,
    geom: Geometry,
    rows: Vec<Vec<(usize, u32)>>,
    tops: Vec<i64>,
}

impl Strip {
    fn new(code: &CodeSpec, w: usize, h: i64, top: i64, depth: i64) -> Self {
        let geom = Geometry::torus(w, (top + depth) as usize);
        let mut rows = Vec::new();
        let mut tops = Vec::new();
        for g in &code.generators {
            let b = g.support_box().expect("nonzero generator");
            for ty in (-depth - b.ymin)..(top - b.ymax) {
                for tx in 0..w as i64 {
                    let t = g.shift(Monomial::new(tx, ty));
                    rows.push(instantiate_entries(&t, &geom).expect("torus holds everything"));
                    tops.push(ty + b.ymax);
                }
            }
        }
        Strip { p: code.p, q: code.q, w, h, top, depth, geom, rows, tops }
    }

    /// Columns for `0 ≤ y < h` come first: `[0, n(h))`.
    fn n(&self, h: i64) -> usize {
        2 * self.q * self.w * h as usize
    }

    fn cols(&self) -> usize {
        self.n(self.top + self.depth)
    }

    fn below_zero(&self, c: usize) -> bool {
        c >= self.n(self.top)
    }

    /// Span of the rows restricted to `keep`, intersected with vectors vanishing off `inside`.
    fn supported(&self, keep: impl Fn(usize) -> bool, inside: impl Fn(usize) -> bool) -> Vec<Vec<(usize, u32)>> {
        let restricted: Vec<Vec<(usize, u32)>> =
            self.rows.iter().map(|r| r.iter().copied().filter(|&(c, _)| keep(c)).collect()).collect();
        let mut ech = Echelon::with_tracking(self.p, self.cols());
        for r in &restricted {
            let off: Vec<(usize, u32)> = r.iter().copied().filter(|&(c, _)| !inside(c)).collect();
            ech.insert(&off);
        }
        let mut span = Echelon::new(self.p, self.cols());
        let mut out = Vec::new();
        for k in ech.kernel_entries() {
            let v = combine(self.p, &restricted, &k);
            if span.insert(&v) {
                out.push(v);
            }
        }
        out
    }

    /// Bulk stabilizers: combinations of whole translates vanishing below `y = 0`.
    fn bulk(&self) -> Vec<Vec<(usize, u32)>> {
        self.supported(|_| true, |c| !self.below_zero(c))
    }

    /// Bulk stabilizers inside the probe strip.
    fn bulk_in_probe(&self) -> Vec<Vec<(usize, u32)>> {
        let nh = self.n(self.h);
        self.supported(|_| true, |c| c < nh)
    }

    /// Truncated translates combined into vectors inside the probe strip.
    fn primary(&self) -> Vec<Vec<(usize, u32)>> {
        let nh = self.n(self.h);
        self.supported(|c| !self.below_zero(c), |c| c < nh)
    }

    /// Dual rows of the bulk stabilizers cut to the probe strip.
    fn gauge_constraints(&self, bulk: &[Vec<(usize, u32)>]) -> Vec<Vec<(usize, u32)>> {
        let nh = self.n(self.h);
        bulk.iter()
            .map(|b| {
                let cut: Vec<(usize, u32)> = b.iter().copied().filter(|&(c, _)| c < nh).collect();
                symplectic_dual(self.p, self.q, &cut)
            })
            .filter(|r| !r.is_empty())
            .collect()
    }

    fn gauge_basis(&self, bulk: &[Vec<(usize, u32)>]) -> Vec<Vec<(usize, u32)>> {
        let nh = self.n(self.h);
        let cons = self.gauge_constraints(bulk);
        let mut m = FpMatrix::zeros(self.p, cons.len(), nh).expect("prime modulus");
        for (i, r) in cons.iter().enumerate() {
            for &(c, v) in r {
                m.set(i, c, v);
            }
        }
        m.kernel_basis()
            .into_iter()
            .map(|v| v.into_iter().enumerate().filter(|e| e.1 != 0).collect())
            .collect()
    }

    fn entries(&self, op: &PauliVector) -> Result<Vec<(usize, u32)>, BoundaryError> {
        for (x, y) in op.support_sites() {
            let _ = x;
            if y < 0 || y >= self.h {
                return Err(BoundaryError::SupportViolation(format!("site y = {y} outside [0, {})", self.h)));
            }
        }
        instantiate_entries(op, &self.geom).map_err(|e| BoundaryError::Shape(e.to_string()))
    }

    fn to_pauli(&self, entries: &[(usize, u32)]) -> PauliVector {
        let width = 2 * self.q;
        let mut v = PauliVector::zero(self.p, self.q);
        for &(c, val) in entries {
            let (x, y) = self.geom.site_coords(c / width);
            let y = if y >= self.top { y - (self.top + self.depth) } else { y };
            v.comp_mut(c % width).add_term(Monomial::new(x, y), val as i64);
        }
        v
    }
}

fn pair_entries(p: u32, q: usize, u: &[(usize, u32)], v: &[(usize, u32)]) -> u32 {
    let width = 2 * q;
    let vmap: HashMap<usize, u32> = v.iter().copied().collect();
    let p64 = p as u64;
    let mut acc = 0u64;
    for &(c, a) in u {
        let (site, i) = (c / width, c % width);
        if i < q {
            if let Some(&b) = vmap.get(&(site * width + q + i)) {
                acc += a as u64 * b as u64;
            }
        } else if let Some(&b) = vmap.get(&(site * width + i - q)) {
            acc += (p64 - a as u64) * b as u64;
        }
        acc %= p64;
    }
    acc as u32
}

/// True iff `op`, supported in the probe strip, commutes with every bulk stabilizer.
pub fn is_boundary_gauge(ctx: &HalfPlaneContext, op: &PauliVector) -> Result<bool, BoundaryError> {
    let strip = ctx.strip();
    let v = strip.entries(&ctx.to_oriented(op))?;
    Ok(strip.bulk().iter().all(|b| pair_entries(strip.p, strip.q, b, &v) == 0))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BgoClass {
    Bulk,
    Primary,
    Secondary,
}

pub fn classify_bgo(ctx: &HalfPlaneContext, op: &PauliVector) -> Result<BgoClass, BoundaryError> {
    let strip = ctx.strip();
    let v = strip.entries(&ctx.to_oriented(op))?;
    if strip.bulk().iter().any(|b| pair_entries(strip.p, strip.q, b, &v) != 0) {
        return Err(BoundaryError::NotGauge);
    }
    let cols = strip.cols();
    let mut bulk = Echelon::new(strip.p, cols);
    for b in strip.bulk_in_probe() {
        bulk.insert(&b);
    }
    if bulk.contains(&v) {
        return Ok(BgoClass::Bulk);
    }
    let mut prim = Echelon::new(strip.p, cols);
    for b in strip.primary() {
        prim.insert(&b);
    }
    Ok(if prim.contains(&v) { BgoClass::Primary } else { BgoClass::Secondary })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BgoReport {
    pub side: Side,
    pub width: usize,
    pub probe_height: i64,
    pub analysis_height: i64,
    pub depth: i64,
    /// Boundary gauge operators inside the probe strip.
    pub gauge_dim: usize,
    /// Of those, the span of truncated stabilizers.
    pub primary_dim: usize,
    /// Of those, bulk stabilizers.
    pub bulk_dim: usize,
    pub secondary_dim: usize,
    /// One operator per secondary class, in the code's own frame.
    #[serde(skip)]
    pub representatives: Vec<PauliVector>,
}

pub fn bgo_report(ctx: &HalfPlaneContext) -> BgoReport {
    let strip = ctx.strip();
    let bulk = strip.bulk();
    let gauge = strip.gauge_basis(&bulk);
    let primary = strip.primary();
    let bulk_dim = strip.bulk_in_probe().len();
    let mut ech = Echelon::new(strip.p, strip.cols());
    for v in &primary {
        ech.insert(v);
    }
    let representatives: Vec<PauliVector> = gauge
        .iter()
        .filter(|g| ech.insert(g))
        .map(|g| ctx.from_oriented(&strip.to_pauli(g)))
        .collect();
    BgoReport {
        side: ctx.side,
        width: ctx.width,
        probe_height: ctx.probe_height,
        analysis_height: ctx.analysis_height,
        depth: ctx.depth,
        gauge_dim: gauge.len(),
        primary_dim: primary.len(),
        bulk_dim,
        secondary_dim: representatives.len(),
        representatives,
    }
}

pub const MAX_STRIP_DOUBLINGS: u32 = 3;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SecondaryCount {
    pub side: Side,
    pub count: usize,
    pub widths: (usize, usize),
    pub probe_height: i64,
    pub analysis_height: i64,
    pub depth: i64,
}

/// Two consecutive primes at least `max(2r, 5)`.
pub fn strip_widths(code: &CodeSpec) -> (usize, usize) {
    let is_p = |n: usize| n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0);
    let mut a = (2 * code.range() as usize).max(5);
    while !is_p(a) {
        a += 1;
    }
    let mut b = a + 1;
    while !is_p(b) {
        b += 1;
    }
    (a, b)
}

/// Number of independent secondary boundary gauge operators on one side.
///
/// Counted at two coprime strip widths; probe, analysis height and depth are
/// doubled together until both widths give the same value twice in a row.
pub fn secondary_bgo_dimension(code: &CodeSpec, side: Side) -> Result<SecondaryCount, BoundaryError> {
    let r = code.range();
    let (w1, w2) = strip_widths(code);
    let count = |w: usize, h: i64, top: i64, depth: i64| -> Result<usize, BoundaryError> {
        let ctx = HalfPlaneContext::new(code, side, w, h)?.with_heights(top, depth);
        Ok(bgo_report(&ctx).secondary_dim)
    };
    let (mut h, mut top, mut depth) = (r, 4 * r, 2 * r);
    let mut prev = (count(w1, h, top, depth)?, count(w2, h, top, depth)?);
    for _ in 0..MAX_STRIP_DOUBLINGS {
        let next = (count(w1, 2 * h, 2 * top, 2 * depth)?, count(w2, 2 * h, 2 * top, 2 * depth)?);
        if next == prev && prev.0 == prev.1 {
            return Ok(SecondaryCount { side, count: prev.0, widths: (w1, w2), probe_height: h, analysis_height: top, depth });
        }
        h *= 2;
        top *= 2;
        depth *= 2;
        prev = next;
    }
    Err(BoundaryError::NoConvergence(format!(
        "secondary count unstable up to probe height {h} (widths {w1}, {w2}: {} vs {})",
        prev.0, prev.1
    )))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HeightReport {
    /// Height `h` of the operator, at least the range.
    pub op_height: i64,
    /// Largest `y` any factor may need according to the bound.
    pub bound: i64,
    /// Smallest top of the factors that works, if found below the searched height.
    pub minimal_top: Option<i64>,
    pub searched: i64,
    pub within_bound: bool,
}

/// Finds the lowest window top for a decomposition of `op` into bulk and truncated generators.
pub fn verify_height_bound(ctx: &HalfPlaneContext, op: &PauliVector) -> Result<HeightReport, BoundaryError> {
    let oriented = ctx.to_oriented(op);
    let r = ctx.code.range();
    let y_top = oriented.support_sites().iter().map(|s| s.1).max().unwrap_or(0);
    let h = (y_top + 1).max(r);
    let bound = gauge_height_bound(&ctx.code, h);
    let searched = bound.min(ctx.analysis_height.max(h + 1));
    let strip = Strip::new(&ctx.oriented, ctx.width, h, searched, ctx.depth);
    let v = strip.entries(&oriented)?;
    if strip.bulk().iter().any(|b| pair_entries(strip.p, strip.q, b, &v) != 0) {
        return Err(BoundaryError::NotGauge);
    }
    let mut order: Vec<usize> = (0..strip.rows.len()).collect();
    order.sort_by_key(|&i| strip.tops[i]);
    let mut ech = Echelon::new(strip.p, strip.cols());
    let mut minimal_top = None;
    let mut k = 0;
    while k < order.len() {
        let level = strip.tops[order[k]];
        while k < order.len() && strip.tops[order[k]] == level {
            let row: Vec<(usize, u32)> =
                strip.rows[order[k]].iter().copied().filter(|&(c, _)| !strip.below_zero(c)).collect();
            ech.insert(&row);
            k += 1;
        }
        if ech.contains(&v) {
            minimal_top = Some(level);
            break;
        }
    }
    Ok(HeightReport { op_height: h, bound, minimal_top, searched, within_bound: minimal_top.is_some_and(|t| t <= bound) })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnyonSolution {
    pub operator: PauliVector,
    /// Side of the concentric square that held the operator.
    pub box_side: i64,
    pub bound: i64,
}

pub const MAX_ANYON_BOX: i64 = 96;

/// Syndrome columns of unit Paulis on `sites`, indexed through `anchor_index`.
fn unit_syndromes(
    code: &CodeSpec,
    sites: &[(i64, i64)],
    anchor_index: impl Fn(i64, i64) -> Option<usize>,
) -> Vec<Vec<(usize, u32)>> {
    let (q, n_s, p) = (code.q, code.n_s(), code.p);
    let mut cols = Vec::with_capacity(sites.len() * 2 * q);
    for &(x, y) in sites {
        for c in 0..2 * q {
            let mut entries: HashMap<usize, u32> = HashMap::new();
            let partner = if c < q { q + c } else { c - q };
            for (mu, g) in code.generators.iter().enumerate() {
                for (m, k) in g.comp(partner).terms() {
                    let Some(a) = anchor_index(x - m.xexp, y - m.yexp) else { continue };
                    let val = if c < q { (p - k) % p } else { k };
                    let e = entries.entry(a * n_s + mu).or_insert(0);
                    *e = (*e + val) % p;
                }
            }
            let mut v: Vec<(usize, u32)> = entries.into_iter().filter(|e| e.1 != 0).collect();
            v.sort_unstable();
            cols.push(v);
        }
    }
    cols
}

fn target(alpha: &SyndromeVector, n_s: usize, anchor_index: impl Fn(i64, i64) -> Option<usize>) -> Option<Vec<(usize, u32)>> {
    let p = alpha.p();
    let mut acc: HashMap<usize, u32> = HashMap::new();
    for (mu, c) in alpha.comps().iter().enumerate() {
        for (m, k) in c.terms() {
            let a = anchor_index(m.xexp, m.yexp)?;
            let e = acc.entry(a * n_s + mu).or_insert(0);
            *e = (*e + k) % p;
        }
    }
    let mut v: Vec<(usize, u32)> = acc.into_iter().filter(|e| e.1 != 0).collect();
    v.sort_unstable();
    Some(v)
}

/// Solves `Σ c_j col_j = t`; returns the coefficients per column.
fn solve_columns(p: u32, rows: usize, cols: &[Vec<(usize, u32)>], t: &[(usize, u32)]) -> Option<Vec<(usize, u32)>> {
    let mut ech = Echelon::with_tracking(p, rows);
    for c in cols {
        ech.insert(c);
    }
    ech.express(t)
}

/// True when the wrapped syndrome has no creating operator on an `n × n` torus.
fn torus_obstruction(code: &CodeSpec, alpha: &SyndromeVector, n: usize) -> bool {
    let ni = n as i64;
    let index = |x: i64, y: i64| Some((y.rem_euclid(ni) * ni + x.rem_euclid(ni)) as usize);
    let sites: Vec<(i64, i64)> = (0..ni).flat_map(|y| (0..ni).map(move |x| (x, y))).collect();
    let cols = unit_syndromes(code, &sites, index);
    let t = target(alpha, code.n_s(), index).expect("torus wraps everything");
    solve_columns(code.p, n * n * code.n_s(), &cols, &t).is_none()
}

/// A finitely supported operator with syndrome `alpha`, or `None` when `alpha`
/// is a nontrivial anyon.
///
/// Nontriviality is certified on a torus: a finite creating operator would
/// wrap onto any torus. Otherwise concentric squares grow up to the size bound.
pub fn solve_trivial_anyon(code: &CodeSpec, alpha: &SyndromeVector) -> Result<Option<AnyonSolution>, BoundaryError> {
    if alpha.len() != code.n_s() || alpha.p() != code.p {
        return Err(BoundaryError::Shape(format!("syndrome needs {} components", code.n_s())));
    }
    let r = code.range();
    let Some(b) = alpha.support_box() else {
        return Ok(Some(AnyonSolution { operator: PauliVector::zero(code.p, code.q), box_side: 0, bound: anyon_box_bound(code, 0) }));
    };
    let r_prime = (b.xmax - b.xmin).max(b.ymax - b.ymin) + 1;
    let bound = anyon_box_bound(code, r_prime);
    let n0 = (r_prime + 2 * r) as usize;
    if [n0, n0 + 1].iter().any(|&n| torus_obstruction(code, alpha, n)) {
        return Ok(None);
    }
    let (lx, ly) = code.extents();
    let mut side = r_prime + 2 * r;
    loop {
        let side_now = side.min(bound);
        let pad = (side_now - r_prime) / 2;
        let (x0, y0) = (b.xmin - pad, b.ymin - pad);
        let (ax0, ay0) = (x0 - lx, y0 - ly);
        let aw = side_now + lx;
        let index = |x: i64, y: i64| {
            let (dx, dy) = (x - ax0, y - ay0);
            (dx >= 0 && dy >= 0 && dx < aw && dy < side_now + ly).then(|| (dy * aw + dx) as usize)
        };
        let sites: Vec<(i64, i64)> =
            (y0..y0 + side_now).flat_map(|y| (x0..x0 + side_now).map(move |x| (x, y))).collect();
        let cols = unit_syndromes(code, &sites, index);
        let rows = (aw * (side_now + ly)) as usize * code.n_s();
        if let Some(t) = target(alpha, code.n_s(), index) {
            if let Some(coeffs) = solve_columns(code.p, rows, &cols, &t) {
                let width = 2 * code.q;
                let mut v = PauliVector::zero(code.p, code.q);
                for (j, c) in coeffs {
                    let (x, y) = sites[j / width];
                    v.comp_mut(j % width).add_term(Monomial::new(x, y), c as i64);
                }
                let check = syndrome(code, &v).map_err(|e| BoundaryError::Shape(e.to_string()))?;
                if check != *alpha {
                    return Err(BoundaryError::Shape("creating operator failed verification".into()));
                }
                return Ok(Some(AnyonSolution { operator: v, box_side: side_now, bound }));
            }
        }
        if side_now >= bound {
            return Ok(None);
        }
        if side_now >= MAX_ANYON_BOX {
            return Err(BoundaryError::Inconclusive { searched: side_now, bound });
        }
        side = (2 * side).min(MAX_ANYON_BOX.max(side + 1));
    }
}

/// `α` as a syndrome vector with unit coefficients at the given anchors.
pub fn syndrome_at(code: &CodeSpec, violations: &[(usize, i64, i64)]) -> SyndromeVector {
    let mut comps = vec![LaurentPoly::zero(code.p); code.n_s()];
    for &(mu, x, y) in violations {
        comps[mu].add_term(Monomial::new(x, y), 1);
    }
    SyndromeVector::new(code.p, comps).expect("matching modulus")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::{shifted_toric, toric};

    #[test]
    fn toric_has_no_secondary_operators() {
        let c = toric();
        for side in [Side::Upper, Side::Lower] {
            assert_eq!(secondary_bgo_dimension(&c, side).unwrap().count, 0);
        }
    }

    #[test]
    fn shifted_toric_has_one_per_side() {
        let c = shifted_toric(1);
        for side in [Side::Upper, Side::Lower] {
            assert_eq!(secondary_bgo_dimension(&c, side).unwrap().count, 1);
        }
    }

    #[test]
    fn single_star_violation_is_nontrivial() {
        let c = toric();
        let alpha = syndrome_at(&c, &[(0, 3, 3)]);
        assert_eq!(solve_trivial_anyon(&c, &alpha).unwrap(), None);
    }

    #[test]
    fn zero_syndrome_needs_nothing() {
        let c = toric();
        let sol = solve_trivial_anyon(&c, &SyndromeVector::zero(2, 2)).unwrap().unwrap();
        assert!(sol.operator.is_zero());
    }
}
