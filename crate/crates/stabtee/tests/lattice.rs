mod common;

use proptest::prelude::*;

use stabtee::lattice::{concave_partition, enumerate_generators, rectangular_partition, Geometry, Partition, Region};
use stabtee::laurent::Monomial;

/// Sites of the concave `B`, straight from the interval formulas.
fn concave_b_sites(l: i64) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    for x in 0..3 * l {
        for y in 0..5 * l {
            let first = (0..3 * l).contains(&x) && ((0..l).contains(&y) || (4 * l..5 * l).contains(&y));
            let second = ((0..l).contains(&x) || (2 * l..3 * l).contains(&x))
                && ((l..2 * l).contains(&y) || (3 * l..4 * l).contains(&y));
            if first || second {
                out.push((x, y));
            }
        }
    }
    out
}

fn regions(p: &Partition) -> [&Region; 4] {
    [&p.a, &p.b, &p.c, &p.d]
}

#[test]
fn concave_unit_sizes() {
    let p = concave_partition(1);
    assert_eq!((p.a.size(), p.c.size(), p.d.size()), (1, 1, 3));
    let b = concave_b_sites(1);
    assert_eq!(b.len(), 10);
    assert_eq!(p.b.sites().into_iter().collect::<Vec<_>>(), {
        let mut s = b.clone();
        s.sort();
        s
    });
}

#[test]
fn concave_corner_belongs_to_d() {
    for l in 1..6 {
        let p = concave_partition(l);
        assert!(p.d.contains(l, l));
        assert_eq!(p.label(l, l), 'D');
    }
}

#[test]
fn rectangular_unit_rendering() {
    assert_eq!(rectangular_partition(1).render_text(), "BBB\nADC\nBBB\n");
    assert_eq!(concave_partition(1).render_text(), "BBB\nBDB\nADC\nBDB\nBBB\n");
    assert!(rectangular_partition(2).render_csv().starts_with("x,y,region\n0,0,B\n"));
}

#[test]
fn rectangular_l2_geometry() {
    let p = rectangular_partition(2);
    assert_eq!(p.d.size(), 4);
    for (x, y) in p.d.sites() {
        assert!((2..4).contains(&x) && (2..4).contains(&y));
    }
}

#[test]
fn d_in_keeps_margin() {
    for l in 2..10 {
        let p = concave_partition(l);
        for ls in 0..l {
            let inner = p.d_in(ls).unwrap();
            for (x, y) in inner.sites() {
                assert!(p.d.contains(x, y));
                for (dx, dy) in [(ls, 0), (-ls, 0), (0, ls), (0, -ls)] {
                    assert!(ls == 0 || p.d.contains(x + dx, y + dy) || !p.d.contains(x + dx.signum() * (ls - 1).max(0), y + dy.signum() * (ls - 1).max(0)));
                }
                assert!(x >= l + ls && x < 2 * l - ls && y >= l + ls && y < 4 * l - ls);
            }
        }
    }
    assert!(rectangular_partition(3).d_in(1).is_none());
}

/// Every translate of every shipped generator touching a window, by exhaustive placement.
fn all_touching(code: &stabtee::code::CodeSpec, window: &Region) -> Vec<(Monomial, usize)> {
    let b = window.bounding_rect().unwrap();
    let mut out = Vec::new();
    for ty in b.y1 - 12..b.y2 + 12 {
        for tx in b.x1 - 12..b.x2 + 12 {
            for (mu, g) in code.generators.iter().enumerate() {
                if g.support_sites().iter().any(|&(x, y)| window.contains(x + tx, y + ty)) {
                    out.push((Monomial::new(tx, ty), mu));
                }
            }
        }
    }
    out.sort_by_key(|(t, mu)| (t.yexp, t.xexp, *mu));
    out
}

#[test]
fn enumerate_generators_is_complete_on_the_plane() {
    for code in common::shipped_codes() {
        let window = Region::rect(0, 3, 1, 4);
        let geom = Geometry::plane(-15, -15, 40, 40);
        assert_eq!(enumerate_generators(&code, &geom, &window), all_touching(&code, &window), "{}", code.name);
    }
}

#[test]
fn enumerate_generators_dedups_on_the_torus() {
    let code = stabtee::code::toric();
    let geom = Geometry::torus(3, 3);
    let all = Region::rect(0, 3, 0, 3);
    assert_eq!(enumerate_generators(&code, &geom, &all).len(), 18);
}

proptest! {
    #[test]
    fn partitions_are_disjoint_and_tile_the_frame(l in 1i64..21) {
        for p in [concave_partition(l), rectangular_partition(l)] {
            let rs = regions(&p);
            for i in 0..4 {
                for j in i + 1..4 {
                    prop_assert!(rs[i].sites().is_disjoint(&rs[j].sites()));
                }
            }
            let total: usize = rs.iter().map(|r| r.size()).sum();
            let f = p.frame;
            prop_assert_eq!(total as i64, (f.x2 - f.x1) * (f.y2 - f.y1));
            prop_assert!(!p.e_contains(f.x1, f.y1));
            prop_assert!(p.e_contains(f.x2, f.y1));
        }
    }

    #[test]
    fn b_separates_a_from_c(l in 1i64..12) {
        for p in [concave_partition(l), rectangular_partition(l)] {
            let gap = p.a.sites().iter().flat_map(|&(ax, ay)| {
                p.c.sites().into_iter().map(move |(cx, cy)| (ax - cx).abs().max((ay - cy).abs()))
            }).min().unwrap();
            prop_assert!(gap > l);
            for code in common::shipped_codes().into_iter().filter(|c| c.range() < l) {
                for (t, mu) in all_touching(&code, &p.a) {
                    let hits_c = code.generators[mu].support_sites().iter().any(|&(x, y)| p.c.contains(x + t.xexp, y + t.yexp));
                    prop_assert!(!hits_c);
                }
            }
        }
    }

    #[test]
    fn concave_b_matches_formula(l in 1i64..8) {
        let mut b = concave_b_sites(l);
        b.sort();
        prop_assert_eq!(concave_partition(l).b.sites().into_iter().collect::<Vec<_>>(), b);
    }
}
