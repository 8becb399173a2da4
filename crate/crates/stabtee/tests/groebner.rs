use proptest::prelude::*;

use stabtee::code;
use stabtee::groebner::{
    buchberger, buchberger_tracked, check_degree_bound, decompose, input_degree, leading_term, membership, normal_form, reduce,
    s_vector, GroebnerBasis, ModuleStyle, ModuleVector, MonomialOrder, TermOrder,
};
use stabtee::laurent::{LaurentPoly, Monomial};

fn c4() -> (Vec<ModuleVector>, TermOrder) {
    let s1 = ModuleVector::parse(2, &["1", "x", "x*y", "x^2*y"]).unwrap();
    let s2 = ModuleVector::parse(2, &["x + x*y", "x^2", "y", "x + x*y"]).unwrap();
    let order = TermOrder::with_positions(MonomialOrder::LexYX, ModuleStyle::Top, &[0, 2, 1, 3]).unwrap();
    (vec![s1, s2], order)
}

/// Buchberger's criterion plus reducedness, checked from the outside.
fn assert_reduced_groebner(gb: &GroebnerBasis) {
    let order = &gb.order;
    let els = &gb.elements;
    for (i, u) in els.iter().enumerate() {
        for v in &els[i + 1..] {
            if let Some(s) = s_vector(u, v, order).unwrap() {
                assert!(reduce(&s, els, order).is_zero(), "S-vector of {u} and {v} does not reduce");
            }
        }
    }
    let leads: Vec<(usize, Monomial, u32)> = els.iter().map(|g| leading_term(g, order).unwrap()).collect();
    for (i, g) in els.iter().enumerate() {
        assert_eq!(leads[i].2, 1, "{g} not monic");
        for (comp, m, _) in g.terms() {
            for (j, &(lc, lm, _)) in leads.iter().enumerate() {
                if i != j && lc == comp {
                    assert!(!(lm.xexp <= m.xexp && lm.yexp <= m.yexp), "{g} has a term divisible by a leading term");
                }
            }
        }
    }
}

#[test]
fn worked_example_basis() {
    let (g, order) = c4();
    let gb = buchberger(&g, &order).unwrap();
    let g1 = ModuleVector::parse(2, &["1 + x^2 + x^2*y", "x + x^3", "0", "x^2"]).unwrap();
    assert_eq!(gb.elements, vec![g1, g[1].clone()]);
    assert_reduced_groebner(&gb);
    let report = check_degree_bound(&gb, input_degree(&g), 2);
    assert_eq!(report.input_degree, 3);
    assert_eq!(report.bound, 300.125);
    assert!(report.within);
}

#[test]
fn worked_example_leading_terms_and_s_vector() {
    let (g, order) = c4();
    assert_eq!(leading_term(&g[0], &order).unwrap(), (3, Monomial::new(2, 1), 1));
    assert_eq!(leading_term(&g[1], &order).unwrap(), (3, Monomial::new(1, 1), 1));
    let s = s_vector(&g[0], &g[1], &order).unwrap().unwrap();
    assert_eq!(s, g[0].add(&g[1].shift(Monomial::new(1, 0))));
    let e1 = ModuleVector::parse(2, &["1", "0", "0", "0"]).unwrap();
    let e2 = ModuleVector::parse(2, &["0", "1", "0", "0"]).unwrap();
    assert_eq!(s_vector(&e1, &e2, &order).unwrap(), None);
}

#[test]
fn order_names_parse() {
    for name in ["lex-xy", "lex-yx", "grlex", "anti-lex-y"] {
        let o: MonomialOrder = name.parse().unwrap();
        assert_eq!(o.name(), name);
    }
    assert!("nope".parse::<MonomialOrder>().is_err());
}

#[test]
fn constants_give_the_unit_module() {
    let gens = vec![
        ModuleVector::parse(3, &["1", "2", "0"]).unwrap(),
        ModuleVector::parse(3, &["0", "1", "1"]).unwrap(),
        ModuleVector::parse(3, &["1", "0", "2"]).unwrap(),
    ];
    assert_eq!(input_degree(&gens), 0);
    let order = TermOrder::new(MonomialOrder::GrLex, ModuleStyle::Pot, 3);
    let gb = buchberger(&gens, &order).unwrap();
    assert_eq!(gb.degree(), 0);
    assert_eq!(gb.len(), 3);
    for i in 0..3 {
        let mut e = vec!["0"; 3];
        e[i] = "1";
        assert!(membership(&ModuleVector::parse(3, &e).unwrap(), &gb).unwrap());
    }
}

#[test]
fn anti_lex_basis_lives_below_the_axis() {
    let (g, _) = c4();
    let order = TermOrder::new(MonomialOrder::AntiLexY, ModuleStyle::Top, 4);
    let gb = buchberger(&g, &order).unwrap();
    for (h, s) in g.iter().zip(&gb.input_shifts) {
        assert_eq!(h.shift(*s).y_max(), Some(0));
        assert!(membership(&h.shift(*s), &gb).unwrap());
        assert!(membership(h, &gb).is_err());
    }
    assert!(gb.elements.iter().all(|e| e.y_max().unwrap() <= 0));
}

fn poly(p: u32) -> impl Strategy<Value = LaurentPoly> {
    proptest::collection::vec((0i64..3, 0i64..3, 1i64..p as i64), 1..4)
        .prop_map(move |t| LaurentPoly::from_terms(p, t))
        .prop_filter("nonzero", |a| !a.is_zero())
}

/// Generators of a random bivariate-bicycle code as rank-4 module vectors.
fn bb_input() -> impl Strategy<Value = Vec<ModuleVector>> {
    prop_oneof![Just(2u32), Just(3u32)]
        .prop_flat_map(|p| (Just(p), poly(p), poly(p)))
        .prop_map(|(p, a, b)| code::bb(p, &a, &b).unwrap().generators.iter().map(ModuleVector::from_pauli).collect())
}

fn order() -> impl Strategy<Value = TermOrder> {
    let mono = prop_oneof![
        Just(MonomialOrder::LexXY),
        Just(MonomialOrder::LexYX),
        Just(MonomialOrder::GrLex),
        Just(MonomialOrder::AntiLexY)
    ];
    let style = prop_oneof![Just(ModuleStyle::Top), Just(ModuleStyle::Pot)];
    (mono, style, Just(vec![0usize, 1, 2, 3]).prop_shuffle())
        .prop_map(|(m, s, pos)| TermOrder::with_positions(m, s, &pos).unwrap())
}

fn sample(gens: &[ModuleVector], coeffs: &[LaurentPoly]) -> ModuleVector {
    gens.iter().zip(coeffs).fold(ModuleVector::zero(gens[0].p(), gens[0].rank()), |acc, (g, c)| acc.add(&g.mul_poly(c)))
}

fn with_p(p: u32, c: &[(i64, i64, i64)]) -> LaurentPoly {
    LaurentPoly::from_terms(p, c.iter().copied())
}

fn coeffs() -> impl Strategy<Value = Vec<Vec<(i64, i64, i64)>>> {
    proptest::collection::vec(proptest::collection::vec((0i64..3, 0i64..3, 0i64..3), 0..3), 2)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn degree_bound_holds_on_random_commuting_inputs(gens in bb_input()) {
        let order = TermOrder::new(MonomialOrder::LexXY, ModuleStyle::Top, 4);
        let gb = buchberger(&gens, &order).unwrap();
        let report = check_degree_bound(&gb, input_degree(&gens), 2);
        prop_assert!(report.within, "{:?}", report);
    }

    #[test]
    fn basis_is_reduced_and_spans_the_inputs(gens in bb_input(), order in order()) {
        let gb = buchberger_tracked(&gens, &order).unwrap();
        if order.monomial != MonomialOrder::AntiLexY {
            assert_reduced_groebner(&gb);
        }
        let cs = gb.coefficients.as_ref().unwrap();
        let shifted: Vec<ModuleVector> = gens.iter().zip(&gb.input_shifts).map(|(g, s)| g.shift(*s)).collect();
        for g in &shifted {
            prop_assert!(membership(g, &gb).unwrap());
        }
        for (e, c) in gb.elements.iter().zip(cs) {
            prop_assert_eq!(&sample(&shifted, c), e);
        }
    }

    #[test]
    fn basis_is_idempotent(gens in bb_input(), order in order()) {
        let gb = buchberger(&gens, &order).unwrap();
        let again = buchberger(&gb.elements, &order).unwrap();
        prop_assert_eq!(again.elements, gb.elements);
    }

    #[test]
    fn normal_form_ignores_reduction_path(gens in bb_input(), raw in coeffs(), extra in proptest::collection::vec((0i64..4, 0i64..4, 0usize..4), 1..4), seed in any::<u64>()) {
        let p = gens[0].p();
        let order = TermOrder::new(MonomialOrder::GrLex, ModuleStyle::Top, 4);
        let gb = buchberger(&gens, &order).unwrap();
        let mut v = sample(&gens, &[with_p(p, &raw[0]), with_p(p, &raw[1])]);
        for (x, y, c) in extra {
            let mut comps: Vec<LaurentPoly> = v.comps().to_vec();
            comps[c].add_term(Monomial::new(x, y), 1);
            v = ModuleVector::new(p, comps).unwrap();
        }
        let nf = reduce(&v, &gb.elements, &order);
        let mut shuffled = gb.elements.clone();
        let n = shuffled.len();
        for i in 0..n {
            let j = (seed.rotate_left(i as u32 * 7) as usize) % n;
            shuffled.swap(i, j);
        }
        let padded: Vec<ModuleVector> = shuffled.iter().cloned().chain(shuffled.iter().map(|g| g.shift(Monomial::new(1, 0)))).collect();
        prop_assert_eq!(&reduce(&v, &shuffled, &order), &nf);
        prop_assert_eq!(&reduce(&v, &padded, &order), &nf);
        prop_assert_eq!(normal_form(&v, &gb).unwrap(), nf);
    }

    #[test]
    fn decomposition_rebuilds_members(gens in bb_input(), raw in coeffs()) {
        let p = gens[0].p();
        let order = TermOrder::new(MonomialOrder::LexYX, ModuleStyle::Top, 4);
        let gb = buchberger(&gens, &order).unwrap();
        let v = sample(&gens, &[with_p(p, &raw[0]), with_p(p, &raw[1])]);
        let quot = decompose(&v, &gb).unwrap().unwrap();
        prop_assert_eq!(sample(&gb.elements, &quot), v.clone());
        let max_y = |w: &ModuleVector| w.y_max().unwrap_or(0);
        for (k, e) in quot.iter().zip(&gb.elements) {
            if !k.is_zero() {
                prop_assert!(max_y(&e.mul_poly(k)) <= max_y(&v).max(gb.elements.iter().map(max_y).max().unwrap()));
            }
        }
    }
}
