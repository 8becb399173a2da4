//! Gröbner bases of submodules of `Z_p[x, y]^m`.
//!
//! Inputs are Laurent vectors; each is moved into the first quadrant by a
//! monomial shift before any division happens. The anti-lexicographic order
//! in `y` is not a well-order on polynomials, so it is computed by reflecting
//! `y`, running under [`MonomialOrder::LexYX`], and reflecting back.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::fp_linalg::{inv_mod, is_prime};
use crate::laurent::{LaurentError, LaurentPoly, Monomial};
use crate::pauli::PauliVector;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroebnerError {
    #[error("leading term of the zero vector")]
    ZeroVector,
    #[error("modulus {0} is not prime")]
    NotPrime(u32),
    #[error("vectors of rank {0} and {1} mixed")]
    RankMismatch(usize, usize),
    #[error("modulus {0} and {1} mixed")]
    ModulusMismatch(u32, u32),
    #[error("negative exponent in {0}; shift the vector first")]
    NotPolynomial(String),
    #[error("position order must be a permutation of 0..{0}")]
    BadPriority(usize),
    #[error(transparent)]
    Laurent(#[from] LaurentError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MonomialOrder {
    /// Compare `x` exponents first.
    LexXY,
    /// Compare `y` exponents first; the height-controlling order.
    LexYX,
    /// Total degree, then `LexXY`.
    GrLex,
    /// Lower `y` is larger; ties broken by larger `x`.
    AntiLexY,
}

impl MonomialOrder {
    pub fn cmp(self, a: Monomial, b: Monomial) -> Ordering {
        match self {
            MonomialOrder::LexXY => (a.xexp, a.yexp).cmp(&(b.xexp, b.yexp)),
            MonomialOrder::LexYX => (a.yexp, a.xexp).cmp(&(b.yexp, b.xexp)),
            MonomialOrder::GrLex => (a.xexp + a.yexp, a.xexp, a.yexp).cmp(&(b.xexp + b.yexp, b.xexp, b.yexp)),
            MonomialOrder::AntiLexY => (-a.yexp, a.xexp).cmp(&(-b.yexp, b.xexp)),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            MonomialOrder::LexXY => "lex-xy",
            MonomialOrder::LexYX => "lex-yx",
            MonomialOrder::GrLex => "grlex",
            MonomialOrder::AntiLexY => "anti-lex-y",
        }
    }
}

impl std::str::FromStr for MonomialOrder {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "lex-xy" | "lex" => Ok(MonomialOrder::LexXY),
            "lex-yx" => Ok(MonomialOrder::LexYX),
            "grlex" => Ok(MonomialOrder::GrLex),
            "anti-lex-y" => Ok(MonomialOrder::AntiLexY),
            _ => Err(format!("unknown monomial order '{s}'")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ModuleStyle {
    Top,
    Pot,
}

/// Module term order: a monomial order, a tie-break style and a ranking of
/// the components (`priority[i]` larger means component `i` is larger).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermOrder {
    pub monomial: MonomialOrder,
    pub style: ModuleStyle,
    pub priority: Vec<usize>,
}

impl TermOrder {
    /// Components ranked by index, component `rank - 1` largest.
    pub fn new(monomial: MonomialOrder, style: ModuleStyle, rank: usize) -> Self {
        TermOrder { monomial, style, priority: (0..rank).collect() }
    }

    /// `ascending` lists the components from smallest to largest.
    pub fn with_positions(monomial: MonomialOrder, style: ModuleStyle, ascending: &[usize]) -> Result<Self, GroebnerError> {
        let m = ascending.len();
        let mut priority = vec![usize::MAX; m];
        for (rank, &c) in ascending.iter().enumerate() {
            if c >= m || priority[c] != usize::MAX {
                return Err(GroebnerError::BadPriority(m));
            }
            priority[c] = rank;
        }
        Ok(TermOrder { monomial, style, priority })
    }

    pub fn rank(&self) -> usize {
        self.priority.len()
    }

    pub fn cmp(&self, a: (usize, Monomial), b: (usize, Monomial)) -> Ordering {
        let by_pos = self.priority[a.0].cmp(&self.priority[b.0]);
        let by_mono = self.monomial.cmp(a.1, b.1);
        match self.style {
            ModuleStyle::Top => by_mono.then(by_pos),
            ModuleStyle::Pot => by_pos.then(by_mono),
        }
    }

    fn reflected(&self) -> TermOrder {
        let monomial = match self.monomial {
            MonomialOrder::AntiLexY => MonomialOrder::LexYX,
            other => other,
        };
        TermOrder { monomial, style: self.style, priority: self.priority.clone() }
    }
}

/// An element of `R^m` with Laurent components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleVector {
    p: u32,
    comps: Vec<LaurentPoly>,
}

impl ModuleVector {
    pub fn zero(p: u32, rank: usize) -> Self {
        ModuleVector { p, comps: vec![LaurentPoly::zero(p); rank] }
    }

    pub fn new(p: u32, comps: Vec<LaurentPoly>) -> Result<Self, GroebnerError> {
        if let Some(c) = comps.iter().find(|c| c.p() != p) {
            return Err(GroebnerError::ModulusMismatch(p, c.p()));
        }
        Ok(ModuleVector { p, comps })
    }

    pub fn parse(p: u32, comps: &[&str]) -> Result<Self, GroebnerError> {
        let comps = comps.iter().map(|s| LaurentPoly::parse(p, s)).collect::<Result<Vec<_>, _>>()?;
        ModuleVector::new(p, comps)
    }

    pub fn from_pauli(v: &PauliVector) -> Self {
        ModuleVector { p: v.p(), comps: v.comps().to_vec() }
    }

    pub fn to_pauli(&self) -> Option<PauliVector> {
        if self.rank() % 2 != 0 {
            return None;
        }
        PauliVector::new(self.p, self.rank() / 2, self.comps.clone()).ok()
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn rank(&self) -> usize {
        self.comps.len()
    }

    pub fn comps(&self) -> &[LaurentPoly] {
        &self.comps
    }

    pub fn comp(&self, i: usize) -> &LaurentPoly {
        &self.comps[i]
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(|c| c.is_zero())
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, Monomial, u32)> + '_ {
        self.comps.iter().enumerate().flat_map(|(i, c)| c.terms().map(move |(m, k)| (i, m, k)))
    }

    pub fn add(&self, other: &ModuleVector) -> ModuleVector {
        let comps = self.comps.iter().zip(&other.comps).map(|(a, b)| a + b).collect();
        ModuleVector { p: self.p, comps }
    }

    pub fn sub(&self, other: &ModuleVector) -> ModuleVector {
        let comps = self.comps.iter().zip(&other.comps).map(|(a, b)| a - b).collect();
        ModuleVector { p: self.p, comps }
    }

    pub fn scale(&self, k: i64) -> ModuleVector {
        ModuleVector { p: self.p, comps: self.comps.iter().map(|c| c.scale(k)).collect() }
    }

    pub fn shift(&self, by: Monomial) -> ModuleVector {
        ModuleVector { p: self.p, comps: self.comps.iter().map(|c| c.shift(by)).collect() }
    }

    pub fn mul_poly(&self, f: &LaurentPoly) -> ModuleVector {
        ModuleVector { p: self.p, comps: self.comps.iter().map(|c| c * f).collect() }
    }

    pub fn reflect_y(&self) -> ModuleVector {
        ModuleVector { p: self.p, comps: self.comps.iter().map(|c| c.reflect_y()).collect() }
    }

    /// Smallest `x` and `y` exponents over all components.
    pub fn min_exponents(&self) -> Option<Monomial> {
        let mut out: Option<Monomial> = None;
        for (_, m, _) in self.terms() {
            out = Some(match out {
                None => m,
                Some(o) => Monomial::new(o.xexp.min(m.xexp), o.yexp.min(m.yexp)),
            });
        }
        out
    }

    pub fn is_polynomial(&self) -> bool {
        self.terms().all(|(_, m, _)| m.xexp >= 0 && m.yexp >= 0)
    }

    /// Largest total degree over the components.
    pub fn degree(&self) -> i64 {
        self.terms().map(|(_, m, _)| m.xexp + m.yexp).max().unwrap_or(0)
    }

    pub fn y_max(&self) -> Option<i64> {
        self.terms().map(|(_, m, _)| m.yexp).max()
    }

    pub fn y_min(&self) -> Option<i64> {
        self.terms().map(|(_, m, _)| m.yexp).min()
    }

    fn add_scaled_shift(&mut self, k: u32, by: Monomial, other: &ModuleVector) {
        for (i, m, c) in other.terms() {
            self.comps[i].add_term(m.times(by), (k as u64 * c as u64 % self.p as u64) as i64);
        }
    }
}

impl fmt::Display for ModuleVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.comps.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// `(component, monomial, coefficient)` of the largest term.
pub fn leading_term(v: &ModuleVector, order: &TermOrder) -> Result<(usize, Monomial, u32), GroebnerError> {
    if v.rank() != order.rank() {
        return Err(GroebnerError::RankMismatch(v.rank(), order.rank()));
    }
    v.terms()
        .max_by(|a, b| order.cmp((a.0, a.1), (b.0, b.1)))
        .ok_or(GroebnerError::ZeroVector)
}

fn lead(v: &ModuleVector, order: &TermOrder) -> Option<(usize, Monomial, u32)> {
    v.terms().max_by(|a, b| order.cmp((a.0, a.1), (b.0, b.1)))
}

fn divides(a: Monomial, b: Monomial) -> bool {
    a.xexp <= b.xexp && a.yexp <= b.yexp
}

fn lcm(a: Monomial, b: Monomial) -> Monomial {
    Monomial::new(a.xexp.max(b.xexp), a.yexp.max(b.yexp))
}

/// S-vector of `u` and `v`; `None` when their leading terms sit in different components.
pub fn s_vector(u: &ModuleVector, v: &ModuleVector, order: &TermOrder) -> Result<Option<ModuleVector>, GroebnerError> {
    let (iu, mu, cu) = leading_term(u, order)?;
    let (iv, mv, cv) = leading_term(v, order)?;
    if iu != iv {
        return Ok(None);
    }
    let p = u.p();
    let m = lcm(mu, mv);
    let mut out = ModuleVector::zero(p, u.rank());
    out.add_scaled_shift(inv_mod(cu, p), m.times(mu.inverse()), u);
    out.add_scaled_shift(p - inv_mod(cv, p), m.times(mv.inverse()), v);
    Ok(Some(out))
}

/// Normal form of `v` together with the quotients `k_i` of `v − nf = Σ k_i·basis[i]`.
pub fn reduce_with_quotients(
    v: &ModuleVector,
    basis: &[ModuleVector],
    order: &TermOrder,
) -> (ModuleVector, Vec<LaurentPoly>) {
    let p = v.p();
    let leads: Vec<(usize, Monomial, u32)> = basis.iter().map(|g| lead(g, order).expect("nonzero basis element")).collect();
    let mut rest = v.clone();
    let mut rem = ModuleVector::zero(p, v.rank());
    let mut quot = vec![LaurentPoly::zero(p); basis.len()];
    while let Some((i, m, c)) = lead(&rest, order) {
        let hit = leads.iter().position(|&(j, lm, _)| j == i && divides(lm, m));
        match hit {
            Some(g) => {
                let (_, lm, lc) = leads[g];
                let k = (c as u64 * inv_mod(lc, p) as u64 % p as u64) as u32;
                let by = m.times(lm.inverse());
                rest.add_scaled_shift(p - k, by, &basis[g]);
                quot[g].add_term(by, k as i64);
            }
            None => {
                rem.comps[i].add_term(m, c as i64);
                rest.comps[i].add_term(m, -(c as i64));
            }
        }
    }
    (rem, quot)
}

/// Normal form of `v` modulo `basis`.
pub fn reduce(v: &ModuleVector, basis: &[ModuleVector], order: &TermOrder) -> ModuleVector {
    reduce_with_quotients(v, basis, order).0
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    pub order: TermOrder,
    /// Reduced basis elements, in the shifted (polynomial) frame, largest leading term first.
    pub elements: Vec<ModuleVector>,
    /// Shift applied to each input before the computation.
    pub input_shifts: Vec<Monomial>,
    /// `coefficients[i][j]`: multiplier of shifted input `j` in `elements[i]`, when tracked.
    pub coefficients: Option<Vec<Vec<LaurentPoly>>>,
    pub reduced: bool,
}

impl GroebnerBasis {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Largest total degree among the elements.
    pub fn degree(&self) -> i64 {
        self.elements.iter().map(|g| g.degree()).max().unwrap_or(0)
    }
}

fn check_inputs(gens: &[ModuleVector], order: &TermOrder) -> Result<u32, GroebnerError> {
    let p = gens.first().map(|g| g.p()).unwrap_or(2);
    if !is_prime(p) {
        return Err(GroebnerError::NotPrime(p));
    }
    for g in gens {
        if g.rank() != order.rank() {
            return Err(GroebnerError::RankMismatch(g.rank(), order.rank()));
        }
        if g.p() != p {
            return Err(GroebnerError::ModulusMismatch(p, g.p()));
        }
    }
    Ok(p)
}

/// Reduced Gröbner basis of the submodule spanned by `gens`.
pub fn buchberger(gens: &[ModuleVector], order: &TermOrder) -> Result<GroebnerBasis, GroebnerError> {
    run(gens, order, false)
}

/// As [`buchberger`], also expressing every element over the shifted inputs.
pub fn buchberger_tracked(gens: &[ModuleVector], order: &TermOrder) -> Result<GroebnerBasis, GroebnerError> {
    run(gens, order, true)
}

fn run(gens: &[ModuleVector], order: &TermOrder, track: bool) -> Result<GroebnerBasis, GroebnerError> {
    let p = check_inputs(gens, order)?;
    if order.monomial == MonomialOrder::AntiLexY {
        let flipped: Vec<ModuleVector> = gens.iter().map(|g| g.reflect_y()).collect();
        let mut gb = run(&flipped, &order.reflected(), track)?;
        gb.order = order.clone();
        gb.elements = gb.elements.iter().map(|g| g.reflect_y()).collect();
        gb.input_shifts = gb.input_shifts.iter().map(|s| Monomial::new(s.xexp, -s.yexp)).collect();
        if let Some(c) = gb.coefficients.as_mut() {
            for row in c.iter_mut() {
                for k in row.iter_mut() {
                    *k = k.reflect_y();
                }
            }
        }
        return Ok(gb);
    }
    let n = gens.len();
    let mut input_shifts = Vec::with_capacity(n);
    let mut basis: Vec<ModuleVector> = Vec::new();
    let mut coeffs: Vec<Vec<LaurentPoly>> = Vec::new();
    for (j, g) in gens.iter().enumerate() {
        let s = g.min_exponents().map(|m| m.inverse()).unwrap_or(Monomial::ONE);
        input_shifts.push(s);
        if g.is_zero() {
            continue;
        }
        basis.push(g.shift(s));
        let mut c = vec![LaurentPoly::zero(p); n];
        c[j] = LaurentPoly::one(p);
        coeffs.push(c);
    }

    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pairs.push((i, j));
        }
    }
    let lcm_degree = |basis: &[ModuleVector], (i, j): (usize, usize)| -> Option<i64> {
        let (ci, mi, _) = lead(&basis[i], order)?;
        let (cj, mj, _) = lead(&basis[j], order)?;
        (ci == cj).then(|| {
            let l = lcm(mi, mj);
            l.xexp + l.yexp
        })
    };
    loop {
        pairs.retain(|&pr| lcm_degree(&basis, pr).is_some());
        let Some(best) = pairs
            .iter()
            .enumerate()
            .min_by_key(|(_, &pr)| (lcm_degree(&basis, pr).unwrap(), pr.1, pr.0))
            .map(|(k, _)| k)
        else {
            break;
        };
        let (i, j) = pairs.swap_remove(best);
        let s = s_vector(&basis[i], &basis[j], order)?.expect("same component");
        let (rem, quot) = reduce_with_quotients(&s, &basis, order);
        if rem.is_zero() {
            continue;
        }
        if track {
            let (_, mi, ci) = lead(&basis[i], order).unwrap();
            let (_, mj, cj) = lead(&basis[j], order).unwrap();
            let m = lcm(mi, mj);
            let ui = LaurentPoly::monomial(p, m.times(mi.inverse()), inv_mod(ci, p) as i64);
            let uj = LaurentPoly::monomial(p, m.times(mj.inverse()), -(inv_mod(cj, p) as i64));
            let mut c = vec![LaurentPoly::zero(p); n];
            for t in 0..n {
                let mut acc = &(&ui * &coeffs[i][t]) + &(&uj * &coeffs[j][t]);
                for (g, k) in quot.iter().enumerate() {
                    if !k.is_zero() {
                        acc = &acc - &(k * &coeffs[g][t]);
                    }
                }
                c[t] = acc;
            }
            coeffs.push(c);
        } else {
            coeffs.push(Vec::new());
        }
        basis.push(rem);
        let new = basis.len() - 1;
        for k in 0..new {
            pairs.push((k, new));
        }
    }

    let (elements, coefficients) = interreduce(basis, coeffs, order, p, track);
    Ok(GroebnerBasis {
        order: order.clone(),
        elements,
        input_shifts,
        coefficients: track.then_some(coefficients),
        reduced: true,
    })
}

fn interreduce(
    basis: Vec<ModuleVector>,
    coeffs: Vec<Vec<LaurentPoly>>,
    order: &TermOrder,
    p: u32,
    track: bool,
) -> (Vec<ModuleVector>, Vec<Vec<LaurentPoly>>) {
    let leads: Vec<(usize, Monomial, u32)> = basis.iter().map(|g| lead(g, order).unwrap()).collect();
    let keep: Vec<usize> = (0..basis.len())
        .filter(|&i| {
            let (ci, mi, _) = leads[i];
            !(0..basis.len()).any(|j| {
                let (cj, mj, _) = leads[j];
                j != i && cj == ci && divides(mj, mi) && (mj != mi || j < i)
            })
        })
        .collect();
    let mut elems: Vec<ModuleVector> = keep.iter().map(|&i| basis[i].clone()).collect();
    let mut cs: Vec<Vec<LaurentPoly>> = keep.iter().map(|&i| coeffs[i].clone()).collect();
    for k in 0..elems.len() {
        let others: Vec<ModuleVector> = elems.iter().enumerate().filter(|(j, _)| *j != k).map(|(_, g)| g.clone()).collect();
        let idx: Vec<usize> = (0..elems.len()).filter(|&j| j != k).collect();
        let (rem, quot) = reduce_with_quotients(&elems[k], &others, order);
        if track {
            let mut c = cs[k].clone();
            for (o, q) in quot.iter().enumerate() {
                if q.is_zero() {
                    continue;
                }
                for (t, ct) in c.iter_mut().enumerate() {
                    *ct = &*ct - &(q * &cs[idx[o]][t]);
                }
            }
            cs[k] = c;
        }
        elems[k] = rem;
    }
    for k in 0..elems.len() {
        let (_, _, lc) = lead(&elems[k], order).unwrap();
        let inv = inv_mod(lc, p) as i64;
        elems[k] = elems[k].scale(inv);
        if track {
            cs[k] = cs[k].iter().map(|c| c.scale(inv)).collect();
        }
    }
    let mut idx: Vec<usize> = (0..elems.len()).collect();
    idx.sort_by(|&a, &b| {
        let la = lead(&elems[a], order).unwrap();
        let lb = lead(&elems[b], order).unwrap();
        order.cmp((lb.0, lb.1), (la.0, la.1))
    });
    let elements = idx.iter().map(|&i| elems[i].clone()).collect();
    let coefficients = if track { idx.iter().map(|&i| cs[i].clone()).collect() } else { Vec::new() };
    (elements, coefficients)
}

/// True iff `v` reduces to zero; `v` must be polynomial in the basis frame.
pub fn membership(v: &ModuleVector, basis: &GroebnerBasis) -> Result<bool, GroebnerError> {
    let (v, elements, order) = frame(v, basis);
    if !v.is_polynomial() {
        return Err(GroebnerError::NotPolynomial(v.to_string()));
    }
    Ok(reduce(&v, &elements, &order).is_zero())
}

/// Normal form of a polynomial `v` with respect to the basis.
pub fn normal_form(v: &ModuleVector, basis: &GroebnerBasis) -> Result<ModuleVector, GroebnerError> {
    let (w, elements, order) = frame(v, basis);
    if !w.is_polynomial() {
        return Err(GroebnerError::NotPolynomial(w.to_string()));
    }
    let nf = reduce(&w, &elements, &order);
    Ok(if basis.order.monomial == MonomialOrder::AntiLexY { nf.reflect_y() } else { nf })
}

/// Quotients of `v` over the basis elements, when `v` lies in the module.
pub fn decompose(v: &ModuleVector, basis: &GroebnerBasis) -> Result<Option<Vec<LaurentPoly>>, GroebnerError> {
    let (w, elements, order) = frame(v, basis);
    if !w.is_polynomial() {
        return Err(GroebnerError::NotPolynomial(w.to_string()));
    }
    let (rem, quot) = reduce_with_quotients(&w, &elements, &order);
    if !rem.is_zero() {
        return Ok(None);
    }
    Ok(Some(if basis.order.monomial == MonomialOrder::AntiLexY {
        quot.iter().map(|k| k.reflect_y()).collect()
    } else {
        quot
    }))
}

fn frame(v: &ModuleVector, basis: &GroebnerBasis) -> (ModuleVector, Vec<ModuleVector>, TermOrder) {
    if basis.order.monomial == MonomialOrder::AntiLexY {
        (
            v.reflect_y(),
            basis.elements.iter().map(|g| g.reflect_y()).collect(),
            basis.order.reflected(),
        )
    } else {
        (v.clone(), basis.elements.clone(), basis.order.clone())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DegreeReport {
    pub input_degree: i64,
    pub basis_degree: i64,
    pub bound: f64,
    pub within: bool,
}

/// Ideal bound `½D²(D+2)²` when the rank is one, module bound `⅛(D+2q)⁴` otherwise.
pub fn check_degree_bound(basis: &GroebnerBasis, d: i64, q: usize) -> DegreeReport {
    let deg = basis.degree();
    let (num, den) = if basis.order.rank() == 1 {
        (d * d * (d + 2) * (d + 2), 2)
    } else {
        ((d + 2 * q as i64).pow(4), 8)
    };
    DegreeReport {
        input_degree: d,
        basis_degree: deg,
        bound: num as f64 / den as f64,
        within: deg * den <= num,
    }
}

/// Largest total degree among the shifted inputs.
pub fn input_degree(gens: &[ModuleVector]) -> i64 {
    gens.iter()
        .map(|g| match g.min_exponents() {
            Some(m) => g.shift(m.inverse()).degree(),
            None => 0,
        })
        .max()
        .unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c4() -> (Vec<ModuleVector>, TermOrder) {
        let s1 = ModuleVector::parse(2, &["1", "x", "x*y", "x^2*y"]).unwrap();
        let s2 = ModuleVector::parse(2, &["x + x*y", "x^2", "y", "x + x*y"]).unwrap();
        let order = TermOrder::with_positions(MonomialOrder::LexYX, ModuleStyle::Top, &[0, 2, 1, 3]).unwrap();
        (vec![s1, s2], order)
    }

    #[test]
    fn leading_terms_of_worked_example() {
        let (g, order) = c4();
        assert_eq!(leading_term(&g[0], &order).unwrap(), (3, Monomial::new(2, 1), 1));
        assert_eq!(leading_term(&g[1], &order).unwrap(), (3, Monomial::new(1, 1), 1));
        assert_eq!(leading_term(&ModuleVector::zero(2, 4), &order), Err(GroebnerError::ZeroVector));
    }

    #[test]
    fn s_vector_of_worked_example() {
        let (g, order) = c4();
        let s = s_vector(&g[0], &g[1], &order).unwrap().unwrap();
        let x = LaurentPoly::x_pow(2, 1);
        assert_eq!(s, g[0].add(&g[1].mul_poly(&x)));
        assert!(s_vector(&g[0], &g[0], &order).unwrap().unwrap().is_zero());
    }

    #[test]
    fn basis_of_worked_example() {
        let (g, order) = c4();
        let gb = buchberger(&g, &order).unwrap();
        let g1 = ModuleVector::parse(2, &["1 + x^2 + x^2*y", "x + x^3", "0", "x^2"]).unwrap();
        assert_eq!(gb.elements, vec![g1, g[1].clone()]);
    }

    #[test]
    fn unit_vectors_stay() {
        let e = vec![ModuleVector::parse(3, &["1", "0"]).unwrap(), ModuleVector::parse(3, &["0", "1"]).unwrap()];
        let order = TermOrder::new(MonomialOrder::GrLex, ModuleStyle::Pot, 2);
        let gb = buchberger(&e, &order).unwrap();
        assert_eq!(gb.elements.len(), 2);
        assert_eq!(gb.degree(), 0);
    }

    #[test]
    fn single_generator_is_made_monic() {
        let g = vec![ModuleVector::parse(5, &["2*x + 3", "y"]).unwrap()];
        let order = TermOrder::new(MonomialOrder::LexXY, ModuleStyle::Top, 2);
        let gb = buchberger(&g, &order).unwrap();
        assert_eq!(gb.elements, vec![g[0].scale(3)]);
    }

    #[test]
    fn ideal_of_two_variables() {
        let g = vec![
            ModuleVector::parse(2, &["x^2 + y"]).unwrap(),
            ModuleVector::parse(2, &["x*y + 1"]).unwrap(),
        ];
        let order = TermOrder::new(MonomialOrder::GrLex, ModuleStyle::Top, 1);
        let gb = buchberger_tracked(&g, &order).unwrap();
        for h in &g {
            assert!(membership(h, &gb).unwrap());
        }
        let coeffs = gb.coefficients.as_ref().unwrap();
        for (e, c) in gb.elements.iter().zip(coeffs) {
            let mut acc = ModuleVector::zero(2, 1);
            for (k, h) in c.iter().zip(&g) {
                acc = acc.add(&h.mul_poly(k));
            }
            assert_eq!(&acc, e);
        }
        let rep = check_degree_bound(&gb, 2, 0);
        assert!(rep.within);
    }

    #[test]
    fn anti_lex_leads_with_lowest_row() {
        let order = TermOrder::new(MonomialOrder::AntiLexY, ModuleStyle::Top, 1);
        let v = ModuleVector::parse(2, &["y^2 + x*y + x^3*y^2"]).unwrap();
        assert_eq!(leading_term(&v, &order).unwrap().1, Monomial::new(1, 1));
    }
}
