//! Translation-invariant Pauli operators as vectors over the Laurent ring.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::code::CodeSpec;
use crate::lattice::Geometry;
use crate::laurent::{LaurentPoly, Monomial, SupportBox, Window};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PauliError {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("support at ({x}, {y}) lies outside the open geometry")]
    OutsideGeometry { x: i64, y: i64 },
}

/// `2q` Laurent components: X part for qudits `0..q`, then Z part.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PauliVector {
    p: u32,
    q: usize,
    comps: Vec<LaurentPoly>,
}

impl PauliVector {
    pub fn zero(p: u32, q: usize) -> Self {
        PauliVector { p, q, comps: vec![LaurentPoly::zero(p); 2 * q] }
    }

    pub fn new(p: u32, q: usize, comps: Vec<LaurentPoly>) -> Result<Self, PauliError> {
        if comps.len() != 2 * q {
            return Err(PauliError::Shape(format!("expected {} components, got {}", 2 * q, comps.len())));
        }
        if comps.iter().any(|c| c.p() != p) {
            return Err(PauliError::Shape("component modulus differs".into()));
        }
        Ok(PauliVector { p, q, comps })
    }

    /// Single-qudit operator `X^xpow Z^zpow` on qudit `qudit` at site `at`.
    pub fn single(p: u32, q: usize, qudit: usize, at: Monomial, xpow: i64, zpow: i64) -> Self {
        let mut v = PauliVector::zero(p, q);
        v.comps[qudit].add_term(at, xpow);
        v.comps[q + qudit].add_term(at, zpow);
        v
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn comps(&self) -> &[LaurentPoly] {
        &self.comps
    }

    pub fn comp(&self, i: usize) -> &LaurentPoly {
        &self.comps[i]
    }

    pub fn comp_mut(&mut self, i: usize) -> &mut LaurentPoly {
        &mut self.comps[i]
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(|c| c.is_zero())
    }

    fn same_shape(&self, other: &PauliVector) -> Result<(), PauliError> {
        if self.p != other.p || self.q != other.q {
            return Err(PauliError::Shape(format!(
                "(p={}, q={}) vs (p={}, q={})",
                self.p, self.q, other.p, other.q
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &PauliVector) -> PauliVector {
        self.same_shape(other).expect("shape mismatch");
        let comps = self.comps.iter().zip(&other.comps).map(|(a, b)| a + b).collect();
        PauliVector { p: self.p, q: self.q, comps }
    }

    pub fn sub(&self, other: &PauliVector) -> PauliVector {
        self.same_shape(other).expect("shape mismatch");
        let comps = self.comps.iter().zip(&other.comps).map(|(a, b)| a - b).collect();
        PauliVector { p: self.p, q: self.q, comps }
    }

    pub fn scale(&self, k: i64) -> PauliVector {
        self.map(|c| c.scale(k))
    }

    /// Multiply every component by the same Laurent polynomial.
    pub fn mul_poly(&self, f: &LaurentPoly) -> PauliVector {
        self.map(|c| c * f)
    }

    pub fn shift(&self, by: Monomial) -> PauliVector {
        self.map(|c| c.shift(by))
    }

    pub fn project(&self, window: &Window) -> PauliVector {
        self.map(|c| c.project(window))
    }

    pub fn reflect_y(&self) -> PauliVector {
        self.map(|c| c.reflect_y())
    }

    pub fn map(&self, f: impl Fn(&LaurentPoly) -> LaurentPoly) -> PauliVector {
        PauliVector { p: self.p, q: self.q, comps: self.comps.iter().map(f).collect() }
    }

    pub fn support_box(&self) -> Option<SupportBox> {
        self.comps.iter().fold(None, |acc, c| SupportBox::merge(acc, c.support_box()))
    }

    /// Distinct sites carrying a nontrivial single-qudit factor.
    pub fn support_sites(&self) -> Vec<(i64, i64)> {
        let mut sites: Vec<(i64, i64)> =
            self.comps.iter().flat_map(|c| c.terms().map(|(m, _)| (m.xexp, m.yexp))).collect();
        sites.sort_by_key(|&(x, y)| (y, x));
        sites.dedup();
        sites
    }

    /// Number of sites with a nontrivial factor.
    pub fn weight(&self) -> usize {
        self.support_sites().len()
    }
}

/// `(x_0, …, x_{q-1} | z_0, …, z_{q-1})`.
impl fmt::Display for PauliVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let part = |cs: &[LaurentPoly]| cs.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", ");
        write!(f, "({} | {})", part(&self.comps[..self.q]), part(&self.comps[self.q..]))
    }
}

/// Element of `R^{n_S}`: a syndrome pattern or a stabilizer coefficient vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SyndromeVector {
    p: u32,
    comps: Vec<LaurentPoly>,
}

impl SyndromeVector {
    pub fn zero(p: u32, n_s: usize) -> Self {
        SyndromeVector { p, comps: vec![LaurentPoly::zero(p); n_s] }
    }

    pub fn new(p: u32, comps: Vec<LaurentPoly>) -> Result<Self, PauliError> {
        if comps.iter().any(|c| c.p() != p) {
            return Err(PauliError::Shape("component modulus differs".into()));
        }
        Ok(SyndromeVector { p, comps })
    }

    pub fn unit(p: u32, n_s: usize, mu: usize) -> Self {
        let mut s = SyndromeVector::zero(p, n_s);
        s.comps[mu] = LaurentPoly::one(p);
        s
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn len(&self) -> usize {
        self.comps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.comps.is_empty()
    }

    pub fn comps(&self) -> &[LaurentPoly] {
        &self.comps
    }

    pub fn comp_mut(&mut self, i: usize) -> &mut LaurentPoly {
        &mut self.comps[i]
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(|c| c.is_zero())
    }

    pub fn support_box(&self) -> Option<SupportBox> {
        self.comps.iter().fold(None, |acc, c| SupportBox::merge(acc, c.support_box()))
    }
}

/// Symplectic pairing `const(ū^T Λ v)`; zero iff the operators commute.
pub fn sympl_pair(u: &PauliVector, v: &PauliVector) -> Result<u32, PauliError> {
    u.same_shape(v)?;
    let p = u.p as u64;
    let q = u.q;
    let mut acc = 0u64;
    for i in 0..q {
        for (m, c) in u.comps[i].terms() {
            acc += c as u64 * v.comps[q + i].coeff(m) as u64;
        }
        for (m, c) in u.comps[q + i].terms() {
            acc += (p - c as u64) * v.comps[i].coeff(m) as u64;
        }
        acc %= p;
    }
    Ok(acc as u32)
}

/// The full pairing polynomial `ū^T Λ v`; its coefficient at `t` is the
/// pairing of `t·u` with `v`.
pub fn pairing_poly(u: &PauliVector, v: &PauliVector) -> Result<LaurentPoly, PauliError> {
    u.same_shape(v)?;
    let q = u.q;
    let mut acc = LaurentPoly::zero(u.p);
    for i in 0..q {
        acc = &acc + &(&u.comps[i].antipode() * &v.comps[q + i]);
        acc = &acc - &(&u.comps[q + i].antipode() * &v.comps[i]);
    }
    Ok(acc)
}

/// Syndrome map: component μ is `Σ_i ḡ^μ_i (Λv)_i`.
pub fn syndrome(code: &CodeSpec, v: &PauliVector) -> Result<SyndromeVector, PauliError> {
    if v.p != code.p || v.q != code.q {
        return Err(PauliError::Shape("operator does not match the code".into()));
    }
    let comps = code.generators.iter().map(|g| pairing_poly(g, v)).collect::<Result<Vec<_>, _>>()?;
    Ok(SyndromeVector { p: code.p, comps })
}

/// The map `w(θ) = Σ_μ θ_μ g^μ`.
pub fn compose(theta: &SyndromeVector, code: &CodeSpec) -> Result<PauliVector, PauliError> {
    if theta.comps.len() != code.generators.len() || theta.p != code.p {
        return Err(PauliError::Shape(format!(
            "expected {} coefficients over Z_{}, got {} over Z_{}",
            code.generators.len(),
            code.p,
            theta.comps.len(),
            theta.p
        )));
    }
    let mut out = PauliVector::zero(code.p, code.q);
    for (t, g) in theta.comps.iter().zip(&code.generators) {
        if !t.is_zero() {
            out = out.add(&g.mul_poly(t));
        }
    }
    Ok(out)
}

/// Sparse finite row: `(column, value)` with column `2q·site + component`.
pub fn instantiate_entries(v: &PauliVector, geom: &Geometry) -> Result<Vec<(usize, u32)>, PauliError> {
    let width = 2 * v.q;
    let mut acc: BTreeMap<usize, u64> = BTreeMap::new();
    for (i, comp) in v.comps.iter().enumerate() {
        for (m, c) in comp.terms() {
            let site = geom
                .site_index(m.xexp, m.yexp)
                .ok_or(PauliError::OutsideGeometry { x: m.xexp, y: m.yexp })?;
            let e = acc.entry(site * width + i).or_insert(0);
            *e = (*e + c as u64) % v.p as u64;
        }
    }
    Ok(acc.into_iter().filter(|e| e.1 != 0).map(|(k, c)| (k, c as u32)).collect())
}

/// Dense finite symplectic vector of length `2q·|sites|`.
pub fn instantiate(v: &PauliVector, geom: &Geometry) -> Result<Vec<u32>, PauliError> {
    let mut out = vec![0; 2 * v.q * geom.num_sites()];
    for (c, val) in instantiate_entries(v, geom)? {
        out[c] = val;
    }
    Ok(out)
}

/// Symplectic product of two finite vectors laid out as in [`instantiate`].
pub fn finite_pair(p: u32, q: usize, u: &[u32], v: &[u32]) -> u32 {
    let width = 2 * q;
    let p64 = p as u64;
    let mut acc = 0u64;
    for (su, sv) in u.chunks(width).zip(v.chunks(width)) {
        for i in 0..q {
            acc += su[i] as u64 * sv[q + i] as u64 + (p64 - su[q + i] as u64 % p64) * sv[i] as u64;
        }
        acc %= p64;
    }
    acc as u32
}

/// Symplectic dual of a sparse row: pairing with it equals the dot product.
pub fn symplectic_dual(p: u32, q: usize, entries: &[(usize, u32)]) -> Vec<(usize, u32)> {
    let width = 2 * q;
    let mut out: Vec<(usize, u32)> = entries
        .iter()
        .map(|&(c, v)| {
            let (site, i) = (c / width, c % width);
            if i < q {
                (site * width + q + i, v)
            } else {
                (site * width + i - q, (p - v) % p)
            }
        })
        .filter(|e| e.1 != 0)
        .collect();
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::builtin;

    #[test]
    fn single_qudit_pairings() {
        let x = PauliVector::single(2, 1, 0, Monomial::ONE, 1, 0);
        let z = PauliVector::single(2, 1, 0, Monomial::ONE, 0, 1);
        let z_far = PauliVector::single(2, 1, 0, Monomial::new(1, 0), 0, 1);
        assert_eq!(sympl_pair(&x, &z).unwrap(), 1);
        assert_eq!(sympl_pair(&x, &z_far).unwrap(), 0);
        let x3 = PauliVector::single(3, 1, 0, Monomial::ONE, 1, 0);
        let z3 = PauliVector::single(3, 1, 0, Monomial::ONE, 0, 1);
        assert_eq!(sympl_pair(&x3, &z3).unwrap(), 1);
        assert_eq!(sympl_pair(&z3, &x3).unwrap(), 2);
    }

    #[test]
    fn compose_unit_gives_generator() {
        let code = builtin("toric").unwrap();
        let theta = SyndromeVector::unit(2, 2, 0);
        assert_eq!(compose(&theta, &code).unwrap(), code.generators[0]);
        assert!(syndrome(&code, &code.generators[1]).unwrap().is_zero());
        assert!(syndrome(&code, &PauliVector::zero(2, 2)).unwrap().is_zero());
    }

    #[test]
    fn dual_turns_pairing_into_dot_product() {
        let u = vec![(0, 1), (3, 2), (5, 1)];
        let v = vec![(2, 1), (1, 2), (4, 2)];
        let dual = symplectic_dual(3, 1, &u);
        let dot: u32 = dual
            .iter()
            .map(|&(c, a)| a * v.iter().find(|e| e.0 == c).map_or(0, |e| e.1))
            .sum::<u32>()
            % 3;
        let mut du = vec![0; 6];
        let mut dv = vec![0; 6];
        for (c, a) in u {
            du[c] = a;
        }
        for (c, a) in v {
            dv[c] = a;
        }
        assert_eq!(dot, finite_pair(3, 1, &du, &dv));
    }
}
