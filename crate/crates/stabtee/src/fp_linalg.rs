//! Exact linear algebra over Z_p and Smith normal form over Z.
//!
//! Vectors act on the left: `kernel_basis` returns `{c : c·m = 0}` and `solve`
//! looks for `c` with `c·m = rhs`. Elimination pivots on the leftmost nonzero
//! column using the earliest row that reaches it, so results are reproducible.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("modulus {0} is not prime")]
    NotPrime(u32),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("ragged rows: row {row} has {got} entries, expected {expected}")]
    Ragged { row: usize, expected: usize, got: usize },
}

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n as u64 {
        if n as u64 % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

pub fn inv_mod(a: u32, p: u32) -> u32 {
    debug_assert!(a % p != 0);
    let (mut t, mut new_t) = (0i64, 1i64);
    let (mut r, mut new_r) = (p as i64, (a % p) as i64);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    t.rem_euclid(p as i64) as u32
}

#[inline]
pub fn reduce_i64(v: i64, p: u32) -> u32 {
    v.rem_euclid(p as i64) as u32
}

#[inline]
fn mul_mod(a: u32, b: u32, p: u32) -> u32 {
    ((a as u64 * b as u64) % p as u64) as u32
}

#[derive(Clone, Debug)]
enum Lanes {
    Bits(Vec<u64>),
    Words(Vec<u32>),
}

/// A row stored only over the column span it touches.
///
/// For p = 2 the lanes are bit-packed and `start` is a multiple of 64.
#[derive(Clone, Debug)]
pub(crate) struct SpanRow {
    start: usize,
    lanes: Lanes,
}

impl SpanRow {
    fn empty(p: u32) -> Self {
        let lanes = if p == 2 { Lanes::Bits(Vec::new()) } else { Lanes::Words(Vec::new()) };
        SpanRow { start: 0, lanes }
    }

    fn unit(p: u32, col: usize) -> Self {
        let mut row = SpanRow::empty(p);
        row.add_at(col, 1, p);
        row
    }

    fn from_entries(p: u32, entries: &[(usize, u32)]) -> Self {
        let mut row = SpanRow::empty(p);
        if let (Some(lo), Some(hi)) = (
            entries.iter().map(|e| e.0).min(),
            entries.iter().map(|e| e.0).max(),
        ) {
            row.cover(lo, hi + 1);
            for &(c, v) in entries {
                row.add_at(c, v % p, p);
            }
        }
        row
    }

    fn end(&self) -> usize {
        match &self.lanes {
            Lanes::Bits(w) => self.start + 64 * w.len(),
            Lanes::Words(w) => self.start + w.len(),
        }
    }

    fn is_blank(&self) -> bool {
        match &self.lanes {
            Lanes::Bits(w) => w.is_empty(),
            Lanes::Words(w) => w.is_empty(),
        }
    }

    /// Grow storage so that columns `lo..hi` are addressable.
    fn cover(&mut self, lo: usize, hi: usize) {
        let blank = self.is_blank();
        match &mut self.lanes {
            Lanes::Bits(w) => {
                let lo = lo / 64 * 64;
                let hi = hi.div_ceil(64) * 64;
                if blank {
                    self.start = lo;
                    w.resize((hi - lo) / 64, 0);
                    return;
                }
                if lo < self.start {
                    let extra = (self.start - lo) / 64;
                    w.splice(0..0, std::iter::repeat(0).take(extra));
                    self.start = lo;
                }
                let end = self.start + 64 * w.len();
                if hi > end {
                    w.resize((hi - self.start) / 64, 0);
                }
            }
            Lanes::Words(w) => {
                if blank {
                    self.start = lo;
                    w.resize(hi - lo, 0);
                    return;
                }
                if lo < self.start {
                    let extra = self.start - lo;
                    w.splice(0..0, std::iter::repeat(0).take(extra));
                    self.start = lo;
                }
                let end = self.start + w.len();
                if hi > end {
                    w.resize(hi - self.start, 0);
                }
            }
        }
    }

    fn add_at(&mut self, col: usize, v: u32, p: u32) {
        if v == 0 {
            return;
        }
        self.cover(col, col + 1);
        match &mut self.lanes {
            Lanes::Bits(w) => {
                let off = col - self.start;
                w[off / 64] ^= 1u64 << (off % 64);
            }
            Lanes::Words(w) => {
                let off = col - self.start;
                w[off] = (w[off] + v) % p;
            }
        }
    }

    /// First nonzero column and its value; trims leading blank storage.
    fn lead(&mut self) -> Option<(usize, u32)> {
        match &mut self.lanes {
            Lanes::Bits(w) => {
                let first = w.iter().position(|&x| x != 0);
                match first {
                    None => {
                        w.clear();
                        None
                    }
                    Some(i) => {
                        if i > 0 {
                            w.drain(0..i);
                            self.start += 64 * i;
                        }
                        let last = w.iter().rposition(|&x| x != 0).unwrap();
                        w.truncate(last + 1);
                        Some((self.start + w[0].trailing_zeros() as usize, 1))
                    }
                }
            }
            Lanes::Words(w) => {
                let first = w.iter().position(|&x| x != 0);
                match first {
                    None => {
                        w.clear();
                        None
                    }
                    Some(i) => {
                        if i > 0 {
                            w.drain(0..i);
                            self.start += i;
                        }
                        let last = w.iter().rposition(|&x| x != 0).unwrap();
                        w.truncate(last + 1);
                        Some((self.start, w[0]))
                    }
                }
            }
        }
    }

    /// self -= f * other
    fn sub_scaled(&mut self, f: u32, other: &SpanRow, p: u32) {
        if f == 0 || other.is_blank() {
            return;
        }
        self.cover(other.start, other.end());
        match (&mut self.lanes, &other.lanes) {
            (Lanes::Bits(a), Lanes::Bits(b)) => {
                let off = (other.start - self.start) / 64;
                for (x, y) in a[off..off + b.len()].iter_mut().zip(b) {
                    *x ^= *y;
                }
            }
            (Lanes::Words(a), Lanes::Words(b)) => {
                let off = other.start - self.start;
                let g = p - f;
                for (x, &y) in a[off..off + b.len()].iter_mut().zip(b) {
                    if y != 0 {
                        *x = ((*x as u64 + g as u64 * y as u64) % p as u64) as u32;
                    }
                }
            }
            _ => unreachable!("mixed lane kinds"),
        }
    }

    fn scale(&mut self, f: u32, p: u32) {
        if let Lanes::Words(w) = &mut self.lanes {
            for x in w.iter_mut() {
                *x = mul_mod(*x, f, p);
            }
        }
    }

    pub(crate) fn entries(&self) -> Vec<(usize, u32)> {
        let mut out = Vec::new();
        match &self.lanes {
            Lanes::Bits(w) => {
                for (i, &word) in w.iter().enumerate() {
                    let mut word = word;
                    while word != 0 {
                        let b = word.trailing_zeros() as usize;
                        out.push((self.start + 64 * i + b, 1));
                        word &= word - 1;
                    }
                }
            }
            Lanes::Words(w) => {
                for (i, &v) in w.iter().enumerate() {
                    if v != 0 {
                        out.push((self.start + i, v));
                    }
                }
            }
        }
        out
    }

    fn to_dense(&self, len: usize) -> Vec<u32> {
        let mut out = vec![0; len];
        for (c, v) in self.entries() {
            out[c] = v;
        }
        out
    }
}

/// Incremental row echelon form.
///
/// Rows are inserted one at a time and reduced against the pivots of the rows
/// inserted before them. With `tracking` on, each stored row remembers the
/// combination of inserted rows that produced it, which yields kernels and
/// solutions.
#[derive(Clone, Debug)]
pub struct Echelon {
    p: u32,
    cols: usize,
    pivot_of: Vec<u32>,
    basis: Vec<SpanRow>,
    tracks: Option<Vec<SpanRow>>,
    kernel: Vec<SpanRow>,
    inserted: usize,
}

const NO_PIVOT: u32 = u32::MAX;

impl Echelon {
    pub fn new(p: u32, cols: usize) -> Self {
        Echelon {
            p,
            cols,
            pivot_of: vec![NO_PIVOT; cols],
            basis: Vec::new(),
            tracks: None,
            kernel: Vec::new(),
            inserted: 0,
        }
    }

    pub fn with_tracking(p: u32, cols: usize) -> Self {
        let mut e = Echelon::new(p, cols);
        e.tracks = Some(Vec::new());
        e
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn inserted(&self) -> usize {
        self.inserted
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    fn reduce_row(&self, row: &mut SpanRow, mut track: Option<&mut SpanRow>) -> Option<(usize, u32)> {
        loop {
            let (c, v) = row.lead()?;
            let k = self.pivot_of[c];
            if k == NO_PIVOT {
                return Some((c, v));
            }
            row.sub_scaled(v, &self.basis[k as usize], self.p);
            if let (Some(t), Some(tracks)) = (track.as_deref_mut(), &self.tracks) {
                t.sub_scaled(v, &tracks[k as usize], self.p);
            }
        }
    }

    /// Insert a sparse row; returns true when it raised the rank.
    pub fn insert(&mut self, entries: &[(usize, u32)]) -> bool {
        let p = self.p;
        let mut row = SpanRow::from_entries(p, entries);
        let mut track = self.tracks.as_ref().map(|_| SpanRow::unit(p, self.inserted));
        self.inserted += 1;
        match self.reduce_row(&mut row, track.as_mut()) {
            None => {
                if let Some(t) = track {
                    self.kernel.push(t);
                }
                false
            }
            Some((c, v)) => {
                let inv = inv_mod(v, p);
                row.scale(inv, p);
                self.pivot_of[c] = self.basis.len() as u32;
                self.basis.push(row);
                if let (Some(tracks), Some(mut t)) = (self.tracks.as_mut(), track) {
                    t.scale(inv, p);
                    tracks.push(t);
                }
                true
            }
        }
    }

    pub fn insert_dense(&mut self, row: &[u32]) -> bool {
        let entries: Vec<(usize, u32)> =
            row.iter().enumerate().filter(|e| *e.1 % self.p != 0).map(|(c, &v)| (c, v % self.p)).collect();
        self.insert(&entries)
    }

    /// True when the sparse vector lies in the span of the inserted rows.
    pub fn contains(&self, entries: &[(usize, u32)]) -> bool {
        let mut row = SpanRow::from_entries(self.p, entries);
        self.reduce_row(&mut row, None).is_none()
    }

    /// Coefficients `c` (one per inserted row) with `c·rows = v`, if any.
    ///
    /// Panics when the echelon was built without tracking.
    pub fn express(&self, entries: &[(usize, u32)]) -> Option<Vec<(usize, u32)>> {
        assert!(self.tracks.is_some(), "express requires tracking");
        let p = self.p;
        let mut row = SpanRow::from_entries(p, entries);
        let mut track = SpanRow::empty(p);
        if self.reduce_row(&mut row, Some(&mut track)).is_some() {
            return None;
        }
        let out = track
            .entries()
            .into_iter()
            .map(|(i, v)| (i, (p - v) % p))
            .filter(|e| e.1 != 0)
            .collect();
        Some(out)
    }

    /// Left-kernel vectors collected from rows that reduced to zero.
    pub fn kernel_entries(&self) -> Vec<Vec<(usize, u32)>> {
        self.kernel.iter().map(|k| k.entries()).collect()
    }

    /// Reduced pivot rows, in insertion order of their pivots.
    pub fn basis_entries(&self) -> Vec<Vec<(usize, u32)>> {
        self.basis.iter().map(|b| b.entries()).collect()
    }
}

/// Dense matrix over Z_p.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FpMatrix {
    p: u32,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl FpMatrix {
    pub fn zeros(p: u32, rows: usize, cols: usize) -> Result<Self, LinalgError> {
        if !is_prime(p) {
            return Err(LinalgError::NotPrime(p));
        }
        Ok(FpMatrix { p, rows, cols, data: vec![0; rows * cols] })
    }

    pub fn identity(p: u32, n: usize) -> Result<Self, LinalgError> {
        let mut m = FpMatrix::zeros(p, n, n)?;
        for i in 0..n {
            m.set(i, i, 1);
        }
        Ok(m)
    }

    /// Build from integer rows; entries are reduced mod p.
    pub fn from_rows<R: AsRef<[i64]>>(p: u32, rows: &[R]) -> Result<Self, LinalgError> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut m = FpMatrix::zeros(p, rows.len(), cols)?;
        for (i, r) in rows.iter().enumerate() {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(LinalgError::Ragged { row: i, expected: cols, got: r.len() });
            }
            for (j, &v) in r.iter().enumerate() {
                m.data[i * cols + j] = reduce_i64(v, p);
            }
        }
        Ok(m)
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v % self.p;
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    /// `c·m` for a row vector `c`.
    pub fn left_mul(&self, c: &[u32]) -> Result<Vec<u32>, LinalgError> {
        if c.len() != self.rows {
            return Err(LinalgError::DimensionMismatch { expected: self.rows, got: c.len() });
        }
        let mut out = vec![0u64; self.cols];
        for (i, &ci) in c.iter().enumerate() {
            if ci % self.p == 0 {
                continue;
            }
            for (o, &v) in out.iter_mut().zip(self.row(i)) {
                *o = (*o + ci as u64 * v as u64) % self.p as u64;
            }
        }
        Ok(out.into_iter().map(|v| v as u32).collect())
    }

    fn echelon(&self, tracking: bool) -> Echelon {
        let mut e = if tracking {
            Echelon::with_tracking(self.p, self.cols)
        } else {
            Echelon::new(self.p, self.cols)
        };
        for r in 0..self.rows {
            e.insert_dense(self.row(r));
        }
        e
    }

    pub fn rank(&self) -> usize {
        self.echelon(false).rank()
    }

    pub fn kernel_basis(&self) -> Vec<Vec<u32>> {
        let e = self.echelon(true);
        e.kernel.iter().map(|k| k.to_dense(self.rows)).collect()
    }

    pub fn solve(&self, rhs: &[u32]) -> Result<Option<Vec<u32>>, LinalgError> {
        if rhs.len() != self.cols {
            return Err(LinalgError::DimensionMismatch { expected: self.cols, got: rhs.len() });
        }
        let e = self.echelon(true);
        let entries: Vec<(usize, u32)> =
            rhs.iter().enumerate().filter(|e| *e.1 % self.p != 0).map(|(c, &v)| (c, v % self.p)).collect();
        Ok(e.express(&entries).map(|c| {
            let mut out = vec![0; self.rows];
            for (i, v) in c {
                out[i] = v;
            }
            out
        }))
    }
}

pub fn rank(m: &FpMatrix) -> usize {
    m.rank()
}

pub fn kernel_basis(m: &FpMatrix) -> Vec<Vec<u32>> {
    m.kernel_basis()
}

pub fn solve(m: &FpMatrix, rhs: &[u32]) -> Result<Option<Vec<u32>>, LinalgError> {
    m.solve(rhs)
}

/// Integer matrix with arbitrary-precision entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self, LinalgError> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut m = IntMatrix::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(LinalgError::Ragged { row: i, expected: cols, got: r.len() });
            }
            for (j, &v) in r.iter().enumerate() {
                m.data[i * cols + j] = BigInt::from(v);
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.data[r * self.cols + c] = v;
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::DimensionMismatch { expected: self.cols, got: other.rows });
        }
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Determinant by fraction-free elimination (square matrices only).
    pub fn determinant(&self) -> Result<BigInt, LinalgError> {
        if self.rows != self.cols {
            return Err(LinalgError::DimensionMismatch { expected: self.rows, got: self.cols });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut a = self.data.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            if a[k * n + k].is_zero() {
                match (k + 1..n).find(|&i| !a[i * n + k].is_zero()) {
                    None => return Ok(BigInt::zero()),
                    Some(i) => {
                        for j in 0..n {
                            a.swap(k * n + j, i * n + j);
                        }
                        sign = -sign;
                    }
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[i * n + j] * &a[k * n + k] - &a[i * n + k] * &a[k * n + j];
                    a[i * n + j] = v / &prev;
                }
            }
            prev = a[k * n + k].clone();
        }
        Ok(sign * &a[n * n - 1])
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] += k * row[src]
    fn add_row(&mut self, dst: usize, src: usize, k: &BigInt) {
        for j in 0..self.cols {
            let v = &self.data[src * self.cols + j] * k;
            self.data[dst * self.cols + j] += v;
        }
    }

    /// col[dst] += k * col[src]
    fn add_col(&mut self, dst: usize, src: usize, k: &BigInt) {
        for i in 0..self.rows {
            let v = &self.data[i * self.cols + src] * k;
            self.data[i * self.cols + dst] += v;
        }
    }

    fn negate_row(&mut self, r: usize) {
        for j in 0..self.cols {
            let v = -&self.data[r * self.cols + j];
            self.data[r * self.cols + j] = v;
        }
    }
}

/// Smith normal form: returns `(d, l, r)` with `l·m·r = d`, `l` and `r`
/// unimodular and the diagonal of `d` a nonnegative divisibility chain.
pub fn smith_normal_form(m: &IntMatrix) -> (IntMatrix, IntMatrix, IntMatrix) {
    let (rows, cols) = (m.rows, m.cols);
    let mut d = m.clone();
    let mut l = IntMatrix::identity(rows);
    let mut r = IntMatrix::identity(cols);
    let n = rows.min(cols);
    for t in 0..n {
        loop {
            // smallest nonzero magnitude in the trailing block
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    let v = d.get(i, j);
                    if !v.is_zero() && best.is_none_or(|(bi, bj)| v.abs() < d.get(bi, bj).abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((bi, bj)) = best else {
                return finish_snf(d, l, r);
            };
            d.swap_rows(t, bi);
            l.swap_rows(t, bi);
            d.swap_cols(t, bj);
            r.swap_cols(t, bj);
            let mut clean = true;
            for i in t + 1..rows {
                if d.get(i, t).is_zero() {
                    continue;
                }
                let k = -d.get(i, t).div_floor(d.get(t, t));
                d.add_row(i, t, &k);
                l.add_row(i, t, &k);
                if !d.get(i, t).is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..cols {
                if d.get(t, j).is_zero() {
                    continue;
                }
                let k = -d.get(t, j).div_floor(d.get(t, t));
                d.add_col(j, t, &k);
                r.add_col(j, t, &k);
                if !d.get(t, j).is_zero() {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            // enforce divisibility of the remaining block by the pivot
            let mut offender = None;
            'scan: for i in t + 1..rows {
                for j in t + 1..cols {
                    if !d.get(i, j).is_multiple_of(d.get(t, t)) {
                        offender = Some(i);
                        break 'scan;
                    }
                }
            }
            match offender {
                Some(i) => {
                    let one = BigInt::one();
                    d.add_row(t, i, &one);
                    l.add_row(t, i, &one);
                }
                None => break,
            }
        }
        if d.get(t, t).is_negative() {
            d.negate_row(t);
            l.negate_row(t);
        }
    }
    finish_snf(d, l, r)
}

fn finish_snf(mut d: IntMatrix, mut l: IntMatrix, r: IntMatrix) -> (IntMatrix, IntMatrix, IntMatrix) {
    for t in 0..d.rows.min(d.cols) {
        if d.get(t, t).is_negative() {
            d.negate_row(t);
            l.negate_row(t);
        }
    }
    (d, l, r)
}
