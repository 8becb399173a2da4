//! Laurent polynomials in two variables over Z_p.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::fp_linalg::{inv_mod, is_prime, reduce_i64};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LaurentError {
    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(u32, u32),
    #[error("modulus {0} is not prime")]
    NotPrime(u32),
    #[error("cannot parse polynomial {text:?}: {reason}")]
    Parse { text: String, reason: String },
}

/// A lattice translation `x^xexp y^yexp`.
///
/// Ordered by `(yexp, xexp)`, which is also the serialization order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Monomial {
    pub xexp: i64,
    pub yexp: i64,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { xexp: 0, yexp: 0 };

    pub fn new(xexp: i64, yexp: i64) -> Self {
        Monomial { xexp, yexp }
    }

    pub fn times(self, other: Monomial) -> Monomial {
        Monomial::new(self.xexp + other.xexp, self.yexp + other.yexp)
    }

    pub fn inverse(self) -> Monomial {
        Monomial::new(-self.xexp, -self.yexp)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.yexp, self.xexp).cmp(&(other.yexp, other.xexp))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Half-open projection window; `None` leaves an axis unbounded.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Window {
    pub x: Option<(i64, i64)>,
    pub y: Option<(i64, i64)>,
}

impl Window {
    pub fn x(x1: i64, x2: i64) -> Self {
        Window { x: Some((x1, x2)), y: None }
    }

    pub fn y(y1: i64, y2: i64) -> Self {
        Window { x: None, y: Some((y1, y2)) }
    }

    pub fn xy(x: (i64, i64), y: (i64, i64)) -> Self {
        Window { x: Some(x), y: Some(y) }
    }

    pub fn contains(&self, m: Monomial) -> bool {
        let inside = |b: Option<(i64, i64)>, v: i64| b.is_none_or(|(lo, hi)| lo <= v && v < hi);
        inside(self.x, m.xexp) && inside(self.y, m.yexp)
    }

    pub fn intersect(&self, other: &Window) -> Window {
        let meet = |a: Option<(i64, i64)>, b: Option<(i64, i64)>| match (a, b) {
            (None, b) => b,
            (a, None) => a,
            (Some((a1, a2)), Some((b1, b2))) => Some((a1.max(b1), a2.min(b2))),
        };
        Window { x: meet(self.x, other.x), y: meet(self.y, other.y) }
    }
}

/// Tight bounding box of a support, inclusive on both ends.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SupportBox {
    pub xmin: i64,
    pub xmax: i64,
    pub ymin: i64,
    pub ymax: i64,
}

impl SupportBox {
    pub fn union(self, other: SupportBox) -> SupportBox {
        SupportBox {
            xmin: self.xmin.min(other.xmin),
            xmax: self.xmax.max(other.xmax),
            ymin: self.ymin.min(other.ymin),
            ymax: self.ymax.max(other.ymax),
        }
    }

    pub fn merge(a: Option<SupportBox>, b: Option<SupportBox>) -> Option<SupportBox> {
        match (a, b) {
            (Some(a), Some(b)) => Some(a.union(b)),
            (a, None) => a,
            (None, b) => b,
        }
    }
}

/// Element of Z_p[x^±1, y^±1] with finite support.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    p: u32,
    terms: BTreeMap<Monomial, u32>,
}

impl LaurentPoly {
    pub fn zero(p: u32) -> Self {
        LaurentPoly { p, terms: BTreeMap::new() }
    }

    pub fn one(p: u32) -> Self {
        LaurentPoly::monomial(p, Monomial::ONE, 1)
    }

    pub fn monomial(p: u32, m: Monomial, coeff: i64) -> Self {
        let mut out = LaurentPoly::zero(p);
        out.add_term(m, coeff);
        out
    }

    pub fn x_pow(p: u32, n: i64) -> Self {
        LaurentPoly::monomial(p, Monomial::new(n, 0), 1)
    }

    pub fn y_pow(p: u32, n: i64) -> Self {
        LaurentPoly::monomial(p, Monomial::new(0, n), 1)
    }

    /// Sum of `coeff * x^xexp * y^yexp` over `(xexp, yexp, coeff)` triples.
    pub fn from_terms<I: IntoIterator<Item = (i64, i64, i64)>>(p: u32, terms: I) -> Self {
        let mut out = LaurentPoly::zero(p);
        for (x, y, c) in terms {
            out.add_term(Monomial::new(x, y), c);
        }
        out
    }

    pub fn checked_new(p: u32) -> Result<Self, LaurentError> {
        if is_prime(p) {
            Ok(LaurentPoly::zero(p))
        } else {
            Err(LaurentError::NotPrime(p))
        }
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical `(yexp, xexp)` ascending order.
    pub fn terms(&self) -> impl Iterator<Item = (Monomial, u32)> + '_ {
        self.terms.iter().map(|(m, c)| (*m, *c))
    }

    pub fn coeff(&self, m: Monomial) -> u32 {
        self.terms.get(&m).copied().unwrap_or(0)
    }

    pub fn constant_term(&self) -> u32 {
        self.coeff(Monomial::ONE)
    }

    pub fn add_term(&mut self, m: Monomial, coeff: i64) {
        let c = reduce_i64(coeff, self.p);
        if c == 0 {
            return;
        }
        let entry = self.terms.entry(m).or_insert(0);
        *entry = (*entry + c) % self.p;
        if *entry == 0 {
            self.terms.remove(&m);
        }
    }

    fn check(&self, other: &LaurentPoly) -> Result<(), LaurentError> {
        if self.p == other.p {
            Ok(())
        } else {
            Err(LaurentError::ModulusMismatch(self.p, other.p))
        }
    }

    pub fn checked_add(&self, other: &LaurentPoly) -> Result<LaurentPoly, LaurentError> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(m, c as i64);
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &LaurentPoly) -> Result<LaurentPoly, LaurentError> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(m, -(c as i64));
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &LaurentPoly) -> Result<LaurentPoly, LaurentError> {
        self.check(other)?;
        let p = self.p as u64;
        let mut acc: BTreeMap<Monomial, u64> = BTreeMap::new();
        for (m1, c1) in self.terms() {
            for (m2, c2) in other.terms() {
                let e = acc.entry(m1.times(m2)).or_insert(0);
                *e = (*e + c1 as u64 * c2 as u64) % p;
            }
        }
        let terms = acc.into_iter().filter(|e| e.1 != 0).map(|(m, c)| (m, c as u32)).collect();
        Ok(LaurentPoly { p: self.p, terms })
    }

    pub fn scale(&self, k: i64) -> LaurentPoly {
        let k = reduce_i64(k, self.p) as u64;
        if k == 0 {
            return LaurentPoly::zero(self.p);
        }
        let terms = self.terms().map(|(m, c)| (m, ((c as u64 * k) % self.p as u64) as u32)).collect();
        LaurentPoly { p: self.p, terms }
    }

    /// Multiply by a monomial (translate the support).
    pub fn shift(&self, by: Monomial) -> LaurentPoly {
        let terms = self.terms().map(|(m, c)| (m.times(by), c)).collect();
        LaurentPoly { p: self.p, terms }
    }

    /// The involution `x ↦ x^-1, y ↦ y^-1`.
    pub fn antipode(&self) -> LaurentPoly {
        let terms = self.terms().map(|(m, c)| (m.inverse(), c)).collect();
        LaurentPoly { p: self.p, terms }
    }

    /// The reflection `y ↦ y^-1`.
    pub fn reflect_y(&self) -> LaurentPoly {
        let terms = self.terms().map(|(m, c)| (Monomial::new(m.xexp, -m.yexp), c)).collect();
        LaurentPoly { p: self.p, terms }
    }

    pub fn project(&self, window: &Window) -> LaurentPoly {
        let terms = self.terms().filter(|(m, _)| window.contains(*m)).collect();
        LaurentPoly { p: self.p, terms }
    }

    pub fn support_box(&self) -> Option<SupportBox> {
        let mut it = self.terms.keys();
        let first = it.next()?;
        let mut b = SupportBox { xmin: first.xexp, xmax: first.xexp, ymin: first.yexp, ymax: first.yexp };
        for m in it {
            b = b.union(SupportBox { xmin: m.xexp, xmax: m.xexp, ymin: m.yexp, ymax: m.yexp });
        }
        Some(b)
    }

    /// Make the leading (largest canonical) coefficient one.
    pub fn monic(&self) -> LaurentPoly {
        match self.terms.values().next_back() {
            None => self.clone(),
            Some(&c) => self.scale(inv_mod(c, self.p) as i64),
        }
    }

    /// Parse text such as `x^3 + y + 2*x^-1*y^2`.
    pub fn parse(p: u32, text: &str) -> Result<LaurentPoly, LaurentError> {
        let err = |reason: &str| LaurentError::Parse { text: text.to_string(), reason: reason.to_string() };
        if !is_prime(p) {
            return Err(LaurentError::NotPrime(p));
        }
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(err("empty input"));
        }
        let mut out = LaurentPoly::zero(p);
        let mut chunks: Vec<(i64, String)> = Vec::new();
        let mut sign = 1i64;
        let mut cur = String::new();
        let mut prev: Option<char> = None;
        for ch in compact.chars() {
            let is_separator = (ch == '+' || ch == '-') && !matches!(prev, None | Some('^'));
            if is_separator {
                chunks.push((sign, std::mem::take(&mut cur)));
                sign = if ch == '-' { -1 } else { 1 };
            } else if ch == '-' && prev.is_none() {
                sign = -1;
            } else if ch == '+' && prev.is_none() {
            } else {
                cur.push(ch);
            }
            prev = Some(ch);
        }
        chunks.push((sign, cur));
        for (sign, chunk) in chunks {
            if chunk.is_empty() {
                return Err(err("empty term"));
            }
            let mut coeff = sign;
            let (mut xe, mut ye) = (0i64, 0i64);
            for factor in chunk.split('*') {
                if factor.is_empty() {
                    return Err(err("empty factor"));
                }
                let (base, exp) = match factor.split_once('^') {
                    Some((b, e)) => (b, e.parse::<i64>().map_err(|_| err("bad exponent"))?),
                    None => (factor, 1),
                };
                match base {
                    "x" => xe += exp,
                    "y" => ye += exp,
                    _ => {
                        let v: i64 = base.parse().map_err(|_| err("bad coefficient"))?;
                        if factor.contains('^') {
                            return Err(err("exponent on a coefficient"));
                        }
                        coeff *= v;
                    }
                }
            }
            out.add_term(Monomial::new(xe, ye), coeff);
        }
        Ok(out)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let mut parts = Vec::new();
            if c != 1 || (m.xexp == 0 && m.yexp == 0) {
                parts.push(c.to_string());
            }
            match m.xexp {
                0 => {}
                1 => parts.push("x".to_string()),
                n => parts.push(format!("x^{n}")),
            }
            match m.yexp {
                0 => {}
                1 => parts.push("y".to_string()),
                n => parts.push(format!("y^{n}")),
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_add(rhs).expect("modulus mismatch")
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_sub(rhs).expect("modulus mismatch")
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_mul(rhs).expect("modulus mismatch")
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(-1)
    }
}

pub fn add(a: &LaurentPoly, b: &LaurentPoly) -> Result<LaurentPoly, LaurentError> {
    a.checked_add(b)
}

pub fn mul(a: &LaurentPoly, b: &LaurentPoly) -> Result<LaurentPoly, LaurentError> {
    a.checked_mul(b)
}

pub fn scale(a: &LaurentPoly, k: i64) -> LaurentPoly {
    a.scale(k)
}

pub fn antipode(a: &LaurentPoly) -> LaurentPoly {
    a.antipode()
}

pub fn project(a: &LaurentPoly, window: &Window) -> LaurentPoly {
    a.project(window)
}

pub fn support_box(a: &LaurentPoly) -> Option<SupportBox> {
    a.support_box()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(p: u32, s: &str) -> LaurentPoly {
        LaurentPoly::parse(p, s).unwrap()
    }

    #[test]
    fn ring_examples() {
        assert_eq!(&poly(2, "1+x") * &poly(2, "1+x"), poly(2, "1+x^2"));
        assert_eq!(&poly(2, "x") * &poly(2, "x^-1"), LaurentPoly::one(2));
        let a = poly(3, "1+y");
        assert!((&a.scale(2) + &a).is_zero());
        assert_eq!(poly(2, "x").checked_add(&poly(3, "x")), Err(LaurentError::ModulusMismatch(2, 3)));
    }

    #[test]
    fn antipode_and_projection() {
        assert_eq!(poly(3, "x+2*y").antipode(), poly(3, "x^-1 + 2*y^-1"));
        assert_eq!(LaurentPoly::one(5).antipode(), LaurentPoly::one(5));
        assert_eq!(poly(2, "1+x+x^2").project(&Window::x(1, 2)), poly(2, "x"));
        let upper = Window { x: None, y: Some((0, i64::MAX)) };
        assert_eq!(poly(2, "y^-1 + 1").project(&upper), LaurentPoly::one(2));
    }

    #[test]
    fn support_boxes() {
        let b = poly(2, "1 + x*y^2").support_box().unwrap();
        assert_eq!((b.xmin, b.xmax, b.ymin, b.ymax), (0, 1, 0, 2));
        assert_eq!(LaurentPoly::zero(2).support_box(), None);
        let b = poly(2, "x^-3").support_box().unwrap();
        assert_eq!((b.xmin, b.xmax, b.ymin, b.ymax), (-3, -3, 0, 0));
    }

    #[test]
    fn display_round_trip() {
        let a = poly(5, "3*x^-2*y + 4 - y^2 + x");
        assert_eq!(poly(5, &a.to_string()), a);
        assert_eq!(a.to_string(), "4 + x + 3*x^-2*y + 4*y^2");
    }
}
