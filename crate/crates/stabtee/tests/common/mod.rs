#![allow(dead_code)]

use std::path::PathBuf;

use stabtee::code::{self, CodeSpec};
use stabtee::entropy::{entropy_pure, EntropyValue};
use stabtee::fp_linalg::{kernel_basis, FpMatrix};

pub fn codes_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../codes")
}

pub fn shipped_file(name: &str) -> CodeSpec {
    code::load(codes_dir().join(format!("{name}.json"))).expect("shipped code loads")
}

pub const FILE_CODES: [&str; 4] = ["cluster2d_paper", "cnot_tc_case1", "cnot_tc_case3", "bb33"];

/// Built-ins plus every code under `codes/`.
pub fn shipped_codes() -> Vec<CodeSpec> {
    let mut out: Vec<CodeSpec> = ["toric", "shifted_toric(1)", "shifted_toric(2)", "shifted_toric(3)", "trivial", "cluster2d"]
        .iter()
        .map(|n| code::builtin(n).unwrap())
        .collect();
    out.extend(FILE_CODES.iter().map(|n| shipped_file(n)));
    out
}

/// Generator translates on an `n × n` torus as bit vectors over Z_2.
///
/// Bit `i·n² + y·n + x` holds component `i` at site `(x, y)`.
pub fn torus_translates(code: &CodeSpec, n: usize) -> Vec<u64> {
    assert_eq!(code.p, 2);
    let sites = n * n;
    assert!(2 * code.q * sites <= 64);
    let mut gens = Vec::new();
    for ty in 0..n as i64 {
        for tx in 0..n as i64 {
            for g in &code.generators {
                let mut bits = 0u64;
                for (i, comp) in g.comps().iter().enumerate() {
                    for (m, c) in comp.terms() {
                        if c % 2 == 1 {
                            let x = (m.xexp + tx).rem_euclid(n as i64) as usize;
                            let y = (m.yexp + ty).rem_euclid(n as i64) as usize;
                            bits ^= 1u64 << (i * sites + y * n + x);
                        }
                    }
                }
                gens.push(bits);
            }
        }
    }
    gens
}

/// All `2^k` products of `part`.
fn products(part: &[u64]) -> Vec<u64> {
    let mut out = vec![0u64; 1 << part.len()];
    for (k, &g) in part.iter().enumerate() {
        let half = 1 << k;
        for j in 0..half {
            out[half + j] = out[j] ^ g;
        }
    }
    out
}

/// Bits of every component lying on a site outside `mask`.
fn outside_bits(sites: usize, lanes: usize, mask: usize) -> u64 {
    let out = !(mask as u64) & ((1u64 << sites) - 1);
    (0..lanes).fold(0, |acc, k| acc | out << (k * sites))
}

/// Exact census of the `2^t` products of all `t` generator translates on a torus.
///
/// The translates are split into two halves whose products are listed; a pair
/// `(a, b)` is the product `a·b`, and it is supported in `R` exactly when `a`
/// and `b` agree outside `R`. Counting matching pairs therefore counts every
/// one of the `2^t` products without forming them one by one.
pub struct Census {
    pub sites: usize,
    pub translates: usize,
    lanes: usize,
    left: Vec<u64>,
    right: Vec<u64>,
}

impl Census {
    pub fn new(code: &CodeSpec, n: usize) -> Census {
        let gens = torus_translates(code, n);
        let t = gens.len();
        Census { sites: n * n, translates: t, lanes: 2 * code.q, left: products(&gens[..t / 2]), right: products(&gens[t / 2..]) }
    }

    /// Number of products whose support lies inside the site mask.
    pub fn count_in(&self, mask: usize) -> u64 {
        let out = outside_bits(self.sites, self.lanes, mask);
        let mut left: Vec<u64> = self.left.iter().map(|v| v & out).collect();
        let mut right: Vec<u64> = self.right.iter().map(|v| v & out).collect();
        left.sort_unstable();
        right.sort_unstable();
        let (mut i, mut j, mut total) = (0, 0, 0u64);
        while i < left.len() && j < right.len() {
            match left[i].cmp(&right[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    let key = left[i];
                    let i0 = i;
                    while i < left.len() && left[i] == key {
                        i += 1;
                    }
                    let j0 = j;
                    while j < right.len() && right[j] == key {
                        j += 1;
                    }
                    total += ((i - i0) * (j - j0)) as u64;
                }
            }
        }
        total
    }

    /// `log_2 |J_R|`: each group element arises `count_in(∅)` times.
    pub fn log_group_size(&self, mask: usize) -> Option<usize> {
        let (c, k) = (self.count_in(mask), self.count_in(0));
        (c % k == 0 && (c / k).is_power_of_two()).then(|| (c / k).trailing_zeros() as usize)
    }
}

/// Histogram of support masks over every product, formed one at a time.
pub fn support_histogram(code: &CodeSpec, n: usize) -> Vec<u64> {
    let gens = torus_translates(code, n);
    let sites = n * n;
    let lanes = 2 * code.q;
    let site_mask = (1u64 << sites) - 1;
    let t = gens.len();
    let (a, b) = (products(&gens[..t / 2]), products(&gens[t / 2..]));
    let mut hist = vec![0u64; 1 << sites];
    for &va in &a {
        for &vb in &b {
            let v = va ^ vb;
            let mut m = 0u64;
            for k in 0..lanes {
                m |= v >> (k * sites);
            }
            hist[(m & site_mask) as usize] += 1;
        }
    }
    hist
}

/// Distinct rectangles `[x, x+w) × [y, y+h)` of an `n × n` torus, as site masks.
pub fn torus_rectangles(n: usize) -> Vec<(usize, usize, usize, usize, usize)> {
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    for h in 1..=n {
        for w in 1..=n {
            for y in 0..n {
                for x in 0..n {
                    let m = torus_rect_mask(n, x, y, w, h);
                    if seen.insert(m) {
                        out.push((x, y, w, h, m));
                    }
                }
            }
        }
    }
    out
}

/// Site mask of the wrapped rectangle `[x, x+w) × [y, y+h)` on an `n × n` torus.
pub fn torus_rect_mask(n: usize, x: usize, y: usize, w: usize, h: usize) -> usize {
    let mut m = 0;
    for dy in 0..h {
        for dx in 0..w {
            m |= 1 << (((y + dy) % n) * n + (x + dx) % n);
        }
    }
    m
}

/// `sub[R]`: number of products supported inside each site mask `R`.
pub fn subset_counts(mut hist: Vec<u64>, sites: usize) -> Vec<u64> {
    for b in 0..sites {
        for m in 0..hist.len() {
            if m >> b & 1 == 1 {
                hist[m] += hist[m ^ (1 << b)];
            }
        }
    }
    hist
}

/// Qubit-level torus generators in `[x_0..x_{n-1}, z_0..z_{n-1}]` layout.
fn torus_rows(code: &CodeSpec, lx: i64, ly: i64) -> Vec<Vec<u32>> {
    let q = code.q;
    let n = q * (lx * ly) as usize;
    let mut rows = Vec::new();
    for ty in 0..ly {
        for tx in 0..lx {
            for g in &code.generators {
                let mut row = vec![0u32; 2 * n];
                for (i, c) in g.comps().iter().enumerate() {
                    for (m, k) in c.terms() {
                        let (x, y) = ((m.xexp + tx).rem_euclid(lx), (m.yexp + ty).rem_euclid(ly));
                        let j = ((y * lx + x) as usize) * q + i % q;
                        let col = if i < q { j } else { n + j };
                        row[col] = (row[col] + k) % code.p;
                    }
                }
                rows.push(row);
            }
        }
    }
    rows
}

/// Greedy independent subset over Z_2.
fn independent(rows: Vec<Vec<u32>>) -> Vec<Vec<u32>> {
    let mut reduced: Vec<(usize, Vec<u32>)> = Vec::new();
    let mut keep = Vec::new();
    for r in rows {
        let mut v = r.clone();
        for (pivot, b) in &reduced {
            if v[*pivot] == 1 {
                v.iter_mut().zip(b).for_each(|(a, b)| *a ^= b);
            }
        }
        if let Some(pivot) = v.iter().position(|&c| c == 1) {
            reduced.push((pivot, v));
            keep.push(r);
        }
    }
    keep
}

/// Entropy of the band `x ∈ [0, t)` in the torus state fixed by stabilizers and every loop in the strip `x ∈ [lx−2, lx)`.
pub fn torus_band_entropy(code: &CodeSpec, lx: i64, ly: i64, t: i64) -> EntropyValue {
    let q = code.q;
    let n = q * (lx * ly) as usize;
    let stab = torus_rows(code, lx, ly);
    let strip: Vec<usize> = (0..ly)
        .flat_map(|y| (lx - 2..lx).flat_map(move |x| (0..q).map(move |i| ((y * lx + x) as usize) * q + i)))
        .collect();
    let vars = 2 * strip.len();
    let pairing: Vec<Vec<i64>> = stab
        .iter()
        .map(|g| {
            let mut row = vec![0i64; vars];
            for (k, &j) in strip.iter().enumerate() {
                row[k] = g[n + j] as i64;
                row[strip.len() + k] = g[j] as i64;
            }
            row
        })
        .collect();
    let columns: Vec<Vec<i64>> = (0..vars).map(|k| pairing.iter().map(|r| r[k]).collect()).collect();
    let m = FpMatrix::from_rows(2, &columns).unwrap();
    let mut all = stab;
    let kernel = kernel_basis(&m);
    let kernel_len = kernel.len();
    for v in kernel {
        let mut row = vec![0u32; 2 * n];
        for (k, &j) in strip.iter().enumerate() {
            row[j] = v[k];
            row[n + j] = v[strip.len() + k];
        }
        all.push(row);
    }
    let gens = independent(all);
    assert_eq!(gens.len(), n, "{kernel_len} centralizer elements");
    let band: Vec<usize> = (0..ly).flat_map(|y| (0..t).flat_map(move |x| (0..q).map(move |i| ((y * lx + x) as usize) * q + i))).collect();
    entropy_pure(2, &gens, &band).unwrap()
}

