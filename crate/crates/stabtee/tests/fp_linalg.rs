use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

use stabtee::fp_linalg::{kernel_basis, rank, smith_normal_form, solve, FpMatrix, IntMatrix};

fn fp(p: u32, rows: &[&[i64]]) -> FpMatrix {
    FpMatrix::from_rows(p, rows).unwrap()
}

#[test]
fn rank_examples() {
    assert_eq!(rank(&fp(2, &[&[1, 1], &[1, 1]])), 1);
    assert_eq!(rank(&fp(3, &[&[1, 2], &[2, 4]])), 1);
    assert_eq!(rank(&FpMatrix::identity(2, 4).unwrap()), 4);
}

#[test]
fn non_prime_modulus_rejected() {
    assert!(FpMatrix::zeros(4, 2, 2).is_err());
}

#[test]
fn kernel_examples() {
    assert_eq!(kernel_basis(&fp(2, &[&[1, 1], &[1, 1]])), vec![vec![1, 1]]);
    assert!(kernel_basis(&FpMatrix::identity(2, 3).unwrap()).is_empty());
    assert!(kernel_basis(&fp(5, &[&[1, 2, 3]])).is_empty());
}

#[test]
fn solve_examples() {
    assert_eq!(solve(&fp(2, &[&[1, 0], &[0, 1]]), &[1, 1]).unwrap(), Some(vec![1, 1]));
    assert_eq!(solve(&fp(2, &[&[1, 1]]), &[1, 0]).unwrap(), None);
    assert_eq!(solve(&fp(3, &[&[2]]), &[1]).unwrap(), Some(vec![2]));
    assert!(solve(&fp(3, &[&[2]]), &[1, 0]).is_err());
}

fn int(rows: &[&[i64]]) -> IntMatrix {
    IntMatrix::from_rows(rows).unwrap()
}

fn diagonal(d: &IntMatrix) -> Vec<BigInt> {
    (0..d.rows().min(d.cols())).map(|i| d.get(i, i).clone()).collect()
}

/// Cofactor expansion along the first row.
fn det(m: &[Vec<BigInt>]) -> BigInt {
    if m.is_empty() {
        return BigInt::from(1);
    }
    let mut acc = BigInt::zero();
    for j in 0..m.len() {
        let minor: Vec<Vec<BigInt>> =
            m[1..].iter().map(|row| row.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, v)| v.clone()).collect()).collect();
        let term = &m[0][j] * det(&minor);
        if j % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// Invariant factors from determinantal divisors: `λ_k = d_k / d_{k-1}`,
/// `d_k` the gcd of all k×k minors.
fn invariant_factors_by_minors(m: &IntMatrix) -> Vec<BigInt> {
    fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
        if k == 0 {
            return vec![vec![]];
        }
        (0..n)
            .flat_map(|last| {
                subsets(last, k - 1).into_iter().map(move |mut s| {
                    s.push(last);
                    s
                })
            })
            .collect()
    }
    let n = m.rows().min(m.cols());
    let mut prev = BigInt::from(1);
    let mut out = Vec::new();
    for k in 1..=n {
        let mut g = BigInt::zero();
        for rs in subsets(m.rows(), k) {
            for cs in subsets(m.cols(), k) {
                let sub: Vec<Vec<BigInt>> = rs.iter().map(|&r| cs.iter().map(|&c| m.get(r, c).clone()).collect()).collect();
                g = g.gcd(&det(&sub));
            }
        }
        if g.is_zero() {
            out.extend(std::iter::repeat_n(BigInt::zero(), n - out.len()));
            break;
        }
        out.push(&g / &prev);
        prev = g;
    }
    out
}

fn check_snf(m: &IntMatrix) {
    let (d, l, r) = smith_normal_form(m);
    assert_eq!(l.mul(m).unwrap().mul(&r).unwrap(), d);
    let dense = |a: &IntMatrix| -> Vec<Vec<BigInt>> { (0..a.rows()).map(|i| (0..a.cols()).map(|j| a.get(i, j).clone()).collect()).collect() };
    assert_eq!(det(&dense(&l)).abs(), BigInt::from(1));
    assert_eq!(det(&dense(&r)).abs(), BigInt::from(1));
    for i in 0..d.rows() {
        for j in 0..d.cols() {
            if i != j {
                assert!(d.get(i, j).is_zero());
            }
        }
    }
    let diag = diagonal(&d);
    for w in diag.windows(2) {
        if !w[1].is_zero() {
            assert!((&w[1] % &w[0]).is_zero(), "{diag:?} is not a divisibility chain");
        } else {
            assert!(w[1].is_zero());
        }
    }
    assert_eq!(diag, invariant_factors_by_minors(m));
}

#[test]
fn snf_examples() {
    let d = |v: &[i64]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
    assert_eq!(diagonal(&smith_normal_form(&int(&[&[2, 0], &[0, 2]])).0), d(&[2, 2]));
    assert_eq!(diagonal(&smith_normal_form(&int(&[&[0]])).0), d(&[0]));
    let m = int(&[&[2, 4], &[6, 8]]);
    assert_eq!(invariant_factors_by_minors(&m), d(&[2, 4]));
    assert_eq!(diagonal(&smith_normal_form(&m).0), d(&[2, 4]));
    check_snf(&m);
}

fn matrix(p: u32) -> impl Strategy<Value = FpMatrix> {
    (1usize..7, 1usize..7).prop_flat_map(move |(r, c)| {
        proptest::collection::vec(0..p as i64, r * c).prop_map(move |v| {
            let rows: Vec<&[i64]> = v.chunks(c).collect();
            FpMatrix::from_rows(p, &rows).unwrap()
        })
    })
}

fn left_mul(m: &FpMatrix, c: &[u32]) -> Vec<u32> {
    m.left_mul(c).unwrap()
}

proptest! {
    #[test]
    fn rank_plus_kernel_is_rows(m in prop_oneof![matrix(2), matrix(3), matrix(5)]) {
        let k = kernel_basis(&m);
        prop_assert_eq!(rank(&m) + k.len(), m.rows());
        for v in &k {
            prop_assert!(left_mul(&m, v).iter().all(|&x| x == 0));
        }
        let mut stacked = FpMatrix::zeros(m.p(), k.len(), m.rows()).unwrap();
        for (i, v) in k.iter().enumerate() {
            for (j, &x) in v.iter().enumerate() {
                stacked.set(i, j, x);
            }
        }
        prop_assert_eq!(rank(&stacked), k.len());
    }

    #[test]
    fn solve_is_consistent(m in prop_oneof![matrix(2), matrix(3), matrix(7)], seed in proptest::collection::vec(0u32..7, 6)) {
        let p = m.p();
        let rhs: Vec<u32> = (0..m.cols()).map(|j| seed[j % seed.len()] % p).collect();
        match solve(&m, &rhs).unwrap() {
            Some(c) => prop_assert_eq!(left_mul(&m, &c), rhs),
            None => {
                let mut ext = FpMatrix::zeros(p, m.rows() + 1, m.cols()).unwrap();
                for i in 0..m.rows() {
                    for j in 0..m.cols() {
                        ext.set(i, j, m.get(i, j));
                    }
                }
                for (j, &x) in rhs.iter().enumerate() {
                    ext.set(m.rows(), j, x);
                }
                prop_assert!(rank(&ext) > rank(&m));
            }
        }
    }

    #[test]
    fn results_are_deterministic(m in matrix(3)) {
        prop_assert_eq!(kernel_basis(&m), kernel_basis(&m.clone()));
        prop_assert_eq!(rank(&m), rank(&m.clone()));
    }

    #[test]
    fn snf_reconstructs(r in 1usize..4, c in 1usize..4, v in proptest::collection::vec(-9i64..10, 9)) {
        let rows: Vec<Vec<i64>> = (0..r).map(|i| (0..c).map(|j| v[i * 3 + j]).collect()).collect();
        check_snf(&IntMatrix::from_rows(&rows).unwrap());
    }
}
