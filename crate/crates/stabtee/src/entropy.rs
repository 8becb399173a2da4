//! Entanglement entropies of translation-invariant stabilizer states.
//!
//! Every count goes through ranks over Z_p, so dependent generator translates
//! (common on small tori) are handled without special cases.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::code::CodeSpec;
use crate::fp_linalg::{is_prime, smith_normal_form, Echelon, IntMatrix};
use crate::lattice::{
    concave_partition, enumerate_generators, rectangular_partition, Geometry, Partition, PartitionStyle, Rect,
    Region,
};
use crate::laurent::Monomial;
use crate::pauli::{compose, instantiate_entries, SyndromeVector};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EntropyError {
    #[error("geometry too small: generator translate at ({x}, {y}) leaves the open patch")]
    GeometryTooSmall { x: i64, y: i64 },
    #[error("input is not a pure stabilizer state: {0}")]
    NotPure(String),
    #[error("operator support leaves A∪B∪C")]
    SupportViolation,
    #[error("no convergence: {0}")]
    NoConvergence(String),
    #[error("shape mismatch: {0}")]
    Shape(String),
}

/// Exact entropy in units of `log p`, stored as a count of halves.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct EntropyValue {
    pub halves: i64,
}

impl EntropyValue {
    pub const ZERO: EntropyValue = EntropyValue { halves: 0 };

    pub fn from_halves(halves: i64) -> Self {
        EntropyValue { halves }
    }

    pub fn from_dits(dits: i64) -> Self {
        EntropyValue { halves: 2 * dits }
    }

    pub fn is_integer(&self) -> bool {
        self.halves % 2 == 0
    }

    /// Exact rendering: `3`, `5/2`, `-1/2`.
    pub fn to_rational_string(&self) -> String {
        if self.halves % 2 == 0 {
            (self.halves / 2).to_string()
        } else {
            format!("{}/2", self.halves)
        }
    }

    pub fn minus(self, other: EntropyValue) -> EntropyValue {
        EntropyValue { halves: self.halves - other.halves }
    }
}

impl fmt::Display for EntropyValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_rational_string())
    }
}

/// Pure-state entropy for composite `d`: `½·log_d(product of factors)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CompositeEntropy {
    pub d: u64,
    /// `d / gcd(d, λ_j)` for each Smith invariant `λ_j`, trivial factors dropped.
    pub factors: Vec<u64>,
}

impl CompositeEntropy {
    pub fn product(&self) -> BigInt {
        self.factors.iter().fold(BigInt::one(), |acc, &f| acc * f)
    }

    /// Value in halves of a dit when the product is a power of `d`.
    pub fn as_halves(&self) -> Option<i64> {
        let mut n = self.product();
        let d = BigInt::from(self.d);
        let mut k = 0;
        while n > BigInt::one() {
            let (q, r) = n.div_rem(&d);
            if !r.is_zero() {
                return None;
            }
            n = q;
            k += 1;
        }
        Some(k)
    }
}

/// Generator rows over a finite geometry, ready for repeated region counts.
pub struct GroupCounter {
    p: u32,
    q: usize,
    geom: Geometry,
    cols: usize,
    rows: Vec<Vec<(usize, u32)>>,
    rank_all: usize,
}

impl GroupCounter {
    /// All translates meeting `window`; each must fit the geometry.
    pub fn new(code: &CodeSpec, geom: Geometry, window: &Region) -> Result<Self, EntropyError> {
        let translates = enumerate_generators(code, &geom, window);
        GroupCounter::from_translates(code, geom, &translates)
    }

    /// Only translates lying entirely inside an open geometry.
    pub fn fully_inside(code: &CodeSpec, geom: Geometry) -> Result<Self, EntropyError> {
        let all = Region { rects: vec![Rect::new(
            geom.x0,
            geom.x0 + geom.extent_x as i64,
            geom.y0,
            geom.y0 + geom.extent_y as i64,
        )] };
        let translates: Vec<(Monomial, usize)> = enumerate_generators(code, &geom, &all)
            .into_iter()
            .filter(|(t, mu)| {
                code.generators[*mu]
                    .support_sites()
                    .iter()
                    .all(|&(x, y)| geom.site_index(x + t.xexp, y + t.yexp).is_some())
            })
            .collect();
        GroupCounter::from_translates(code, geom, &translates)
    }

    pub fn from_translates(code: &CodeSpec, geom: Geometry, translates: &[(Monomial, usize)]) -> Result<Self, EntropyError> {
        let mut rows = Vec::with_capacity(translates.len());
        for (t, mu) in translates {
            let g = code.generators[*mu].shift(*t);
            let row = instantiate_entries(&g, &geom).map_err(|_| EntropyError::GeometryTooSmall { x: t.xexp, y: t.yexp })?;
            rows.push(row);
        }
        let cols = 2 * code.q * geom.num_sites();
        let rank_all = rank_of(code.p, cols, rows.iter().map(|r| r.as_slice()));
        Ok(GroupCounter { p: code.p, q: code.q, geom, cols, rows, rank_all })
    }

    pub fn rank(&self) -> usize {
        self.rank_all
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<(usize, u32)>] {
        &self.rows
    }

    pub fn geometry(&self) -> &Geometry {
        &self.geom
    }

    fn site_mask(&self, region: &Region) -> Vec<bool> {
        let mut mask = vec![false; self.geom.num_sites()];
        for (x, y) in region.sites() {
            if let Some(i) = self.geom.site_index(x, y) {
                mask[i] = true;
            }
        }
        mask
    }

    /// `log_p |J_R|`: dimension of the span supported inside `region`.
    pub fn log_group_size(&self, region: &Region) -> usize {
        let mask = self.site_mask(region);
        let width = 2 * self.q;
        let outside: Vec<Vec<(usize, u32)>> = self
            .rows
            .iter()
            .map(|r| r.iter().copied().filter(|&(c, _)| !mask[c / width]).collect())
            .collect();
        self.rank_all - rank_of(self.p, self.cols, outside.iter().map(|r| r.as_slice()))
    }

    /// Basis of the part of the span supported inside `region`.
    pub fn supported_basis(&self, region: &Region) -> Vec<Vec<(usize, u32)>> {
        let mask = self.site_mask(region);
        let width = 2 * self.q;
        let mut ech = Echelon::with_tracking(self.p, self.cols);
        for r in &self.rows {
            let outside: Vec<(usize, u32)> = r.iter().copied().filter(|&(c, _)| !mask[c / width]).collect();
            ech.insert(&outside);
        }
        let mut out = Vec::new();
        let mut span = Echelon::new(self.p, self.cols);
        for k in ech.kernel_entries() {
            let v = combine(self.p, &self.rows, &k);
            if span.insert(&v) {
                out.push(v);
            }
        }
        out
    }

    /// Columns of the span restricted to `region`: `dim π_R(span)`.
    pub fn projected_rank(&self, region: &Region) -> usize {
        let mask = self.site_mask(region);
        let width = 2 * self.q;
        let inside: Vec<Vec<(usize, u32)>> = self
            .rows
            .iter()
            .map(|r| r.iter().copied().filter(|&(c, _)| mask[c / width]).collect())
            .collect();
        rank_of(self.p, self.cols, inside.iter().map(|r| r.as_slice()))
    }

    pub fn qudits_in(&self, region: &Region) -> usize {
        self.q * self.site_mask(region).iter().filter(|&&b| b).count()
    }
}

pub(crate) fn combine(p: u32, rows: &[Vec<(usize, u32)>], coeffs: &[(usize, u32)]) -> Vec<(usize, u32)> {
    let mut acc = std::collections::BTreeMap::<usize, u64>::new();
    for &(i, c) in coeffs {
        for &(col, v) in &rows[i] {
            let e = acc.entry(col).or_insert(0);
            *e = (*e + c as u64 * v as u64) % p as u64;
        }
    }
    acc.into_iter().filter(|e| e.1 != 0).map(|(k, v)| (k, v as u32)).collect()
}

pub(crate) fn rank_of<'a>(p: u32, cols: usize, rows: impl Iterator<Item = &'a [(usize, u32)]>) -> usize {
    let mut e = Echelon::new(p, cols);
    for r in rows {
        e.insert(r);
    }
    e.rank()
}

/// Open patch holding every generator translate that meets `rect`.
pub fn plane_around(code: &CodeSpec, rect: Rect) -> Geometry {
    let (lx, ly) = code.extents();
    Geometry::plane(
        rect.x1 - lx,
        rect.y1 - ly,
        (rect.x2 - rect.x1 + 2 * lx) as usize,
        (rect.y2 - rect.y1 + 2 * ly) as usize,
    )
}

/// `m_R = log_p |J_R|` using every generator translate that meets `R ⊕ β`.
pub fn log_group_size(code: &CodeSpec, geom: &Geometry, region: &Region, beta: i64) -> Result<usize, EntropyError> {
    let Some(bound) = region.bounding_rect() else {
        return Ok(0);
    };
    let window = Region { rects: vec![bound.grow(beta)] };
    let counter = GroupCounter::new(code, *geom, &window)?;
    Ok(counter.log_group_size(region))
}

/// `S(ρ_R) = q·|R| − m_R` for the maximally mixed stabilizer state.
pub fn entropy_region(code: &CodeSpec, geom: &Geometry, region: &Region, beta: i64) -> Result<EntropyValue, EntropyError> {
    let Some(bound) = region.bounding_rect() else {
        return Ok(EntropyValue::ZERO);
    };
    let window = Region { rects: vec![bound.grow(beta)] };
    let counter = GroupCounter::new(code, *geom, &window)?;
    let m = counter.log_group_size(region) as i64;
    Ok(EntropyValue::from_dits(counter.qudits_in(region) as i64 - m))
}

fn check_pure(p: u32, n: usize, gens: &[Vec<u32>]) -> Result<(), EntropyError> {
    if gens.len() != n {
        return Err(EntropyError::NotPure(format!("{} generators for {} qudits", gens.len(), n)));
    }
    for (i, g) in gens.iter().enumerate() {
        if g.len() != 2 * n {
            return Err(EntropyError::Shape(format!("generator {i} has length {}, expected {}", g.len(), 2 * n)));
        }
    }
    let mut e = Echelon::new(p, 2 * n);
    for g in gens {
        if !e.insert_dense(g) {
            return Err(EntropyError::NotPure("generators are dependent".into()));
        }
    }
    for a in gens {
        for b in gens {
            if crate::pauli::finite_pair(p, 1, &interleave(a, n), &interleave(b, n)) != 0 {
                return Err(EntropyError::NotPure("generators do not commute".into()));
            }
        }
    }
    Ok(())
}

/// `[x_0..x_{n-1}, z_0..z_{n-1}]` to per-qudit `(x_i, z_i)` layout.
fn interleave(g: &[u32], n: usize) -> Vec<u32> {
    (0..n).flat_map(|i| [g[i], g[n + i]]).collect()
}

/// Entropy of qudits `region` for the pure state stabilized by `gens`.
///
/// Each generator is `[x_0..x_{n-1}, z_0..z_{n-1}]`; the result is
/// `½·rank_p(M^A)` with `M^A_jk` the symplectic product of `g_j` restricted to
/// A with `g_k`.
pub fn entropy_pure(p: u32, gens: &[Vec<u32>], region: &[usize]) -> Result<EntropyValue, EntropyError> {
    let n = gens.len();
    check_pure(p, n, gens)?;
    let m = truncated_products(n, gens, region, |a, b| {
        ((a as u64 * b as u64) % p as u64) as i64
    });
    let rows: Vec<Vec<(usize, u32)>> = m
        .iter()
        .map(|r| r.iter().enumerate().filter(|e| e.1.rem_euclid(p as i64) != 0).map(|(c, &v)| (c, v.rem_euclid(p as i64) as u32)).collect())
        .collect();
    let r = rank_of(p, n, rows.iter().map(|r| r.as_slice()));
    Ok(EntropyValue::from_halves(r as i64))
}

fn truncated_products(n: usize, gens: &[Vec<u32>], region: &[usize], mul: impl Fn(u32, u32) -> i64) -> Vec<Vec<i64>> {
    let inside: BTreeSet<usize> = region.iter().copied().collect();
    let mut m = vec![vec![0i64; n]; n];
    for (j, gj) in gens.iter().enumerate() {
        for (k, gk) in gens.iter().enumerate() {
            let mut acc = 0i64;
            for &i in &inside {
                acc += mul(gj[i], gk[n + i]) - mul(gj[n + i], gk[i]);
            }
            m[j][k] = acc;
        }
    }
    m
}

/// Pure-state entropy over Z_d for any modulus `d ≥ 2` via Smith normal form.
pub fn entropy_pure_composite(d: u64, gens: &[Vec<i64>], region: &[usize]) -> Result<CompositeEntropy, EntropyError> {
    let n = gens.len();
    for (i, g) in gens.iter().enumerate() {
        if g.len() != 2 * n {
            return Err(EntropyError::Shape(format!("generator {i} has length {}, expected {}", g.len(), 2 * n)));
        }
    }
    if d < 2 {
        return Err(EntropyError::Shape("modulus must be at least 2".into()));
    }
    if is_prime(d as u32) && d < u32::MAX as u64 {
        let p = d as u32;
        let gp: Vec<Vec<u32>> = gens.iter().map(|g| g.iter().map(|&v| v.rem_euclid(d as i64) as u32).collect()).collect();
        check_pure(p, n, &gp)?;
    }
    let gu: Vec<Vec<u32>> = gens.iter().map(|g| g.iter().map(|&v| v.rem_euclid(d as i64) as u32).collect()).collect();
    let m = truncated_products(n, &gu, region, |a, b| a as i64 * b as i64);
    let im = IntMatrix::from_rows(&m).expect("square");
    let (diag, _, _) = smith_normal_form(&im);
    let dd = BigInt::from(d);
    let mut factors = Vec::new();
    for j in 0..n {
        let lambda = diag.get(j, j).clone();
        let g = lambda.gcd(&dd);
        let f = &dd / &g;
        if f > BigInt::one() {
            factors.push(u64::try_from(f).expect("fits"));
        }
    }
    Ok(CompositeEntropy { d, factors })
}

/// The four counts entering `γ = ½(m_ABC + m_B − m_AB − m_BC)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GammaCounts {
    pub m_abc: usize,
    pub m_b: usize,
    pub m_ab: usize,
    pub m_bc: usize,
}

impl GammaCounts {
    pub fn gamma(&self) -> EntropyValue {
        EntropyValue::from_halves(self.m_abc as i64 + self.m_b as i64 - self.m_ab as i64 - self.m_bc as i64)
    }
}

pub fn gamma_counts(code: &CodeSpec, partition: &Partition, beta: i64) -> Result<GammaCounts, EntropyError> {
    let window = partition.frame.grow(beta);
    let geom = plane_around(code, window);
    let counter = GroupCounter::new(code, geom, &Region { rects: vec![window] })?;
    let (a, b, c) = (&partition.a, &partition.b, &partition.c);
    let regions = [Region::union(&[a, b, c]), b.clone(), Region::union(&[a, b]), Region::union(&[b, c])];
    let m: Vec<usize> = regions.par_iter().map(|r| counter.log_group_size(r)).collect();
    Ok(GammaCounts { m_abc: m[0], m_b: m[1], m_ab: m[2], m_bc: m[3] })
}

/// Levin-Wen `γ` with the exterior truncated at buffer `beta`.
pub fn levin_wen_gamma(code: &CodeSpec, partition: &Partition, beta: i64) -> Result<EntropyValue, EntropyError> {
    Ok(gamma_counts(code, partition, beta)?.gamma())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "kind", content = "value")]
pub enum BufferPolicy {
    /// Start at `2r` and double until two consecutive buffers agree.
    Auto,
    Fixed(i64),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GammaResult {
    pub gamma: EntropyValue,
    pub l: i64,
    pub beta: i64,
    pub counts: GammaCounts,
}

pub const MAX_BUFFER_DOUBLINGS: u32 = 4;

pub fn partition_for(style: PartitionStyle, l: i64) -> Partition {
    match style {
        PartitionStyle::Rectangular => rectangular_partition(l),
        PartitionStyle::Concave => concave_partition(l),
    }
}

/// `γ` at fixed `L` under a buffer policy.
pub fn gamma_at(code: &CodeSpec, style: PartitionStyle, l: i64, policy: BufferPolicy) -> Result<GammaResult, EntropyError> {
    let partition = partition_for(style, l);
    match policy {
        BufferPolicy::Fixed(beta) => {
            let counts = gamma_counts(code, &partition, beta)?;
            Ok(GammaResult { gamma: counts.gamma(), l, beta, counts })
        }
        BufferPolicy::Auto => {
            let mut beta = 2 * code.range();
            let mut prev = gamma_counts(code, &partition, beta)?;
            for _ in 0..MAX_BUFFER_DOUBLINGS {
                let next = gamma_counts(code, &partition, 2 * beta)?;
                if next == prev {
                    return Ok(GammaResult { gamma: prev.gamma(), l, beta, counts: prev });
                }
                beta *= 2;
                prev = next;
            }
            Err(EntropyError::NoConvergence(format!("buffer did not stabilize at L={l} up to beta={beta}")))
        }
    }
}

/// Smallest `L` of the analytic guarantee: `32r³q⁴ + 2r⁴ + 27r + 1`.
pub fn strict_min_l(code: &CodeSpec) -> i64 {
    let r = code.range();
    let q = code.q as i64;
    32 * r.pow(3) * q.pow(4) + 2 * r.pow(4) + 27 * r + 1
}

/// Smallest `L ≥ l_min` with `γ(L) = γ(L+1)`, searched up to `l_max`.
pub fn gamma_auto(code: &CodeSpec, style: PartitionStyle, l_min: Option<i64>, l_max: i64) -> Result<GammaResult, EntropyError> {
    let mut l = l_min.unwrap_or_else(|| code.range().max(2));
    let mut prev = gamma_at(code, style, l, BufferPolicy::Auto)?;
    while l < l_max {
        let next = gamma_at(code, style, l + 1, BufferPolicy::Auto)?;
        if next.gamma == prev.gamma {
            return Ok(prev);
        }
        l += 1;
        prev = next;
    }
    Err(EntropyError::NoConvergence(format!("gamma did not settle for L up to {l_max}")))
}

/// Spurious part `γ_rect − γ_concave` at the same `L`.
pub fn stee(code: &CodeSpec, l: i64, policy: BufferPolicy) -> Result<EntropyValue, EntropyError> {
    let rect = gamma_at(code, PartitionStyle::Rectangular, l, policy)?;
    let conc = gamma_at(code, PartitionStyle::Concave, l, policy)?;
    Ok(rect.gamma.minus(conc.gamma))
}

/// True iff `w(θ)` lies in the span of `J_AB ∪ J_BC`.
pub fn is_divisible(code: &CodeSpec, theta: &SyndromeVector, partition: &Partition, beta: i64) -> Result<bool, EntropyError> {
    let w = compose(theta, code).map_err(|e| EntropyError::Shape(e.to_string()))?;
    let (a, b, c) = (&partition.a, &partition.b, &partition.c);
    let abc = Region::union(&[a, b, c]);
    if w.support_sites().iter().any(|&(x, y)| !abc.contains(x, y)) {
        return Err(EntropyError::SupportViolation);
    }
    let window = partition.frame.grow(beta);
    let geom = plane_around(code, window);
    let counter = GroupCounter::new(code, geom, &Region { rects: vec![window] })?;
    let cols = 2 * code.q * geom.num_sites();
    let mut span = Echelon::new(code.p, cols);
    for v in counter.supported_basis(&Region::union(&[a, b])) {
        span.insert(&v);
    }
    for v in counter.supported_basis(&Region::union(&[b, c])) {
        span.insert(&v);
    }
    let target = instantiate_entries(&w, &geom).map_err(|e| EntropyError::Shape(e.to_string()))?;
    Ok(span.contains(&target))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CylinderPoint {
    pub l: usize,
    pub s_a: EntropyValue,
    pub k: usize,
    pub half_length: i64,
}

/// `½·I(A:B)` across one cut of a cylinder of circumference `l`, half-length `t`.
///
/// This counts the loop operators winding around the cylinder as unfixed, so it
/// exceeds [`cylinder_entropy_at`] by half the number of independent loops.
/// The window `[−t, t)` keeps every generator translate lying inside it;
/// the value is `½·I(A:B) = ½(m_window − m_A − m_B)` for `A = [0, t)`.
pub fn cylinder_mutual_information_at(code: &CodeSpec, l: usize, t: i64) -> Result<EntropyValue, EntropyError> {
    let geom = Geometry::cylinder(-t, 2 * t as usize, l);
    let counter = GroupCounter::fully_inside(code, geom)?;
    let a = Region::rect(0, t, 0, l as i64);
    let b = Region::rect(-t, 0, 0, l as i64);
    let (m_a, m_b) = rayon::join(|| counter.log_group_size(&a), || counter.log_group_size(&b));
    Ok(EntropyValue::from_halves(counter.rank() as i64 - m_a as i64 - m_b as i64))
}

/// Single-cut entropy of the loop-fixed pure state on a cylinder.
///
/// For the band `A = [0, t)` around a cylinder of circumference `l`, the pure
/// state whose stabilizer group also contains every loop operator winding
/// around the cylinder has `S_A = dim π_A(J) − q·|A|`, where `π_A(J)` is
/// spanned by the restrictions to A of all generator translates meeting A.
/// The band has two identical cuts, so one cut carries half of it.
pub fn cylinder_entropy_at(code: &CodeSpec, l: usize, t: i64) -> Result<EntropyValue, EntropyError> {
    let (lx, _) = code.extents();
    let geom = Geometry::cylinder(-lx, (t + 2 * lx) as usize, l);
    let band = Region::rect(0, t, 0, l as i64);
    let counter = GroupCounter::new(code, geom, &band)?;
    let s_band = counter.projected_rank(&band) as i64 - counter.qudits_in(&band) as i64;
    Ok(EntropyValue::from_halves(s_band))
}

pub const MAX_HALF_LENGTH_DOUBLINGS: u32 = 5;

/// Cylinder entropy with the half-length doubled until two sizes agree.
pub fn cylinder_entropy(code: &CodeSpec, l: usize) -> Result<(EntropyValue, i64), EntropyError> {
    let mut t = 2 * code.range();
    let mut prev = cylinder_entropy_at(code, l, t)?;
    for _ in 0..MAX_HALF_LENGTH_DOUBLINGS {
        let next = cylinder_entropy_at(code, l, 2 * t)?;
        if next == prev {
            return Ok((prev, t));
        }
        t *= 2;
        prev = next;
    }
    Err(EntropyError::NoConvergence(format!("cylinder entropy at l={l} unstable up to T={t}")))
}

/// `k = q·lx·ly − rank` of all generator translates on the torus.
pub fn torus_logical_dimension(code: &CodeSpec, lx: usize, ly: usize) -> usize {
    let geom = Geometry::torus(lx, ly);
    let translates: Vec<(Monomial, usize)> = (0..ly as i64)
        .flat_map(|y| (0..lx as i64).flat_map(move |x| (0..code.n_s()).map(move |mu| (Monomial::new(x, y), mu))))
        .collect();
    let counter = GroupCounter::from_translates(code, geom, &translates).expect("torus always fits");
    code.q * lx * ly - counter.rank()
}

/// `(l, S_A(l), k(l))` for each circumference, torus length `lx` along x.
pub fn scan_cylinder(code: &CodeSpec, ls: &[usize], lx: usize) -> Result<Vec<CylinderPoint>, EntropyError> {
    ls.par_iter()
        .map(|&l| {
            let (s_a, half_length) = cylinder_entropy(code, l)?;
            let k = torus_logical_dimension(code, lx, l);
            Ok(CylinderPoint { l, s_a, k, half_length })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::{toric, trivial};

    #[test]
    fn entropy_value_rendering() {
        assert_eq!(EntropyValue::from_halves(5).to_string(), "5/2");
        assert_eq!(EntropyValue::from_dits(3).to_string(), "3");
    }

    #[test]
    fn bell_pair_entropy() {
        let xx = vec![1, 1, 0, 0];
        let zz = vec![0, 0, 1, 1];
        assert_eq!(entropy_pure(2, &[xx, zz], &[0]).unwrap(), EntropyValue::from_dits(1));
        let z1 = vec![0, 0, 1, 0];
        let z2 = vec![0, 0, 0, 1];
        assert_eq!(entropy_pure(2, &[z1, z2], &[0]).unwrap(), EntropyValue::ZERO);
        assert!(entropy_pure(2, &[vec![0, 0, 1, 0]], &[0]).is_err());
    }

    #[test]
    fn trivial_code_counts_sites() {
        let code = trivial();
        let region = Region::rect(0, 3, 0, 2);
        let geom = plane_around(&code, region.bounding_rect().unwrap().grow(2));
        assert_eq!(log_group_size(&code, &geom, &region, 2).unwrap(), 6);
        assert_eq!(log_group_size(&code, &geom, &Region::empty(), 2).unwrap(), 0);
        assert_eq!(entropy_region(&code, &geom, &region, 2).unwrap(), EntropyValue::ZERO);
    }

    #[test]
    fn toric_torus_has_two_logicals() {
        assert_eq!(torus_logical_dimension(&toric(), 4, 4), 2);
    }
}
