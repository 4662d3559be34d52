use std::sync::Arc;

use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::polyring::{MonomialOrder, PolyRing, Polynomial};
use crate::Error;

fn ring(names: &[&str], p: u64) -> Arc<PolyRing> {
    PolyRing::with_characteristic(names, p).unwrap()
}

fn ideal(r: &Arc<PolyRing>, gens: &[&str]) -> Ideal {
    Ideal::parse(r, gens).unwrap()
}

#[test]
fn normal_form_examples() {
    let e = Engine::default();
    let r = ring(&["x", "y"], 0);
    let i = ideal(&r, &["x"]);
    assert_eq!(e.normal_form(&r.parse("x^2 + y").unwrap(), &i).unwrap(), r.parse("y").unwrap());

    let lex = PolyRing::new(&["x", "y"], crate::Field::Rationals, MonomialOrder::Lex).unwrap();
    let j = ideal(&lex, &["x - y^2", "x^2 - y"]);
    let gb = e.groebner(&j, MonomialOrder::Lex).unwrap();
    assert_eq!(gb.normal_form(&lex.parse("y^4").unwrap()).unwrap(), lex.parse("y").unwrap());
    for g in j.generators() {
        assert!(gb.normal_form(g).unwrap().is_zero());
    }
}

#[test]
fn buchberger_examples() {
    let e = Engine::default();
    let r = ring(&["x"], 0);
    let gb = e.groebner(&ideal(&r, &["x - 1"]), MonomialOrder::Grevlex).unwrap();
    assert_eq!(gb.elements(), &[r.parse("x - 1").unwrap()]);

    let lex = PolyRing::new(&["x", "y"], crate::Field::Rationals, MonomialOrder::Lex).unwrap();
    let gb = e
        .groebner(&ideal(&lex, &["x^2 - y", "x*y - 1"]), MonomialOrder::Lex)
        .unwrap();
    let expect = vec![lex.parse("y^3 - 1").unwrap(), lex.parse("x - y^2").unwrap()];
    assert_eq!(gb.elements(), expect.as_slice());
    assert!(gb.is_self_consistent());
    assert!(gb.is_reduced());
}

#[test]
fn unit_and_zero_ideals() {
    let e = Engine::default();
    let r = ring(&["x", "y"], 7);
    assert!(e.is_unit_ideal(&ideal(&r, &["x", "x + 1"])).unwrap());
    let z = Ideal::zero(&r);
    assert!(e.groebner(&z, MonomialOrder::Grevlex).unwrap().is_empty());
    assert_eq!(e.krull_dimension(&z).unwrap(), 2);
    assert!(matches!(
        e.krull_dimension(&ideal(&r, &["1"])),
        Err(Error::ImproperIdeal)
    ));
}

#[test]
fn membership_examples() {
    let e = Engine::default();
    let r = ring(&["x", "y"], 0);
    assert!(!e.ideal_membership(&r.one(), &ideal(&r, &["x"])).unwrap());
    assert!(e
        .ideal_membership(&r.parse("x^2*y").unwrap(), &ideal(&r, &["x^2", "y^3"]))
        .unwrap());
}

#[test]
fn radical_membership_examples() {
    let e = Engine::default();
    let r = ring(&["x", "y"], 0);
    assert!(e.radical_membership(&r.parse("x").unwrap(), &ideal(&r, &["x^2"])).unwrap());
    assert!(!e.radical_membership(&r.parse("y").unwrap(), &ideal(&r, &["x"])).unwrap());
    // independent of the auxiliary variable's name
    let rt = ring(&["t", "x"], 0);
    assert!(e.radical_membership(&rt.parse("t").unwrap(), &ideal(&rt, &["t^3"])).unwrap());
    assert!(!e.radical_membership(&rt.parse("x").unwrap(), &ideal(&rt, &["t"])).unwrap());
}

#[test]
fn ideal_equality_examples() {
    let e = Engine::default();
    let r = ring(&["x", "y"], 0);
    let a = ideal(&r, &["x", "y"]);
    assert!(e.ideal_equal(&a, &a.clone()).unwrap());
    assert!(e.ideal_equal(&a, &ideal(&r, &["x + y", "y"])).unwrap());
    assert!(!e.ideal_equal(&a, &ideal(&r, &["x"])).unwrap());
}

#[test]
fn elimination_examples() {
    let e = Engine::default();
    let r = ring(&["t", "x", "y"], 0);
    let i = ideal(&r, &["x - t", "y - t^2"]);
    let el = e.elimination_ideal(&i, &[1, 2]).unwrap();
    assert!(e.ideal_equal(&el, &ideal(&r, &["y - x^2"])).unwrap());
    for g in el.generators() {
        assert_eq!(g.support() & 1, 0);
        assert!(e.ideal_membership(g, &i).unwrap());
    }
    let none = e.elimination_ideal(&i, &[0, 1, 2]).unwrap();
    assert!(e.ideal_equal(&none, &i).unwrap());
    assert!(e.elimination_ideal(&i, &[5]).is_err());
}

#[test]
fn quotient_examples() {
    let e = Engine::default();
    let r = ring(&["x", "y"], 0);
    let q = e
        .ideal_quotient(&ideal(&r, &["x^2", "x*y"]), &r.parse("x").unwrap())
        .unwrap();
    assert!(e.ideal_equal(&q, &ideal(&r, &["x", "y"])).unwrap());

    let i = ideal(&r, &["x^2 + y", "y^3"]);
    assert!(e.ideal_equal(&e.ideal_quotient(&i, &r.one()).unwrap(), &i).unwrap());

    let q = e
        .ideal_quotient(&ideal(&r, &["x*y"]), &r.parse("y^2").unwrap())
        .unwrap();
    assert!(e.ideal_equal(&q, &ideal(&r, &["x"])).unwrap());

    assert!(e.ideal_quotient(&i, &r.zero()).is_err());
}

#[test]
fn colon_ideal_examples() {
    let e = Engine::default();
    let r = ring(&["x", "y"], 0);
    let i = ideal(&r, &["x^2", "y^2"]);
    let unit = ideal(&r, &["1"]);
    assert!(e.ideal_equal(&e.ideal_colon_ideal(&i, &unit).unwrap(), &i).unwrap());
    let q = e
        .ideal_colon_ideal(&ideal(&r, &["x^2"]), &ideal(&r, &["x"]))
        .unwrap();
    assert!(e.ideal_equal(&q, &ideal(&r, &["x"])).unwrap());
    let q = e.ideal_colon_ideal(&i, &ideal(&r, &["x", "y"])).unwrap();
    assert!(e.ideal_equal(&q, &ideal(&r, &["x^2", "y^2", "x*y"])).unwrap());
    assert!(e.ideal_colon_ideal(&i, &Ideal::zero(&r)).is_err());
}

#[test]
fn intersection_of_monomial_ideals() {
    let e = Engine::default();
    let r = ring(&["x", "y"], 5);
    let m = e
        .ideal_intersection(&ideal(&r, &["x"]), &ideal(&r, &["y"]))
        .unwrap();
    assert!(e.ideal_equal(&m, &ideal(&r, &["x*y"])).unwrap());
}

#[test]
fn dimension_examples() {
    let e = Engine::default();
    let r = ring(&["x", "y"], 0);
    assert_eq!(e.krull_dimension(&ideal(&r, &["x*y"])).unwrap(), 1);
    let r6 = ring(&["a", "b", "c", "d", "e", "f"], 0);
    assert_eq!(e.krull_dimension(&Ideal::zero(&r6)).unwrap(), 6);
    // twisted cubic
    let r4 = ring(&["w", "x", "y", "z"], 0);
    let tc = ideal(&r4, &["x^2 - w*y", "x*y - w*z", "y^2 - x*z"]);
    assert_eq!(e.krull_dimension(&tc).unwrap(), 2);
    assert_eq!(e.codimension(&tc).unwrap(), 2);
}

#[test]
fn dimension_order_independent() {
    let e = Engine::default();
    let r4 = ring(&["w", "x", "y", "z"], 7);
    let tc = ideal(&r4, &["x^2 - w*y", "x*y - w*z", "y^2 - x*z"]);
    let lex = e.groebner(&tc, MonomialOrder::Lex).unwrap();
    assert_eq!(ops::dimension_from_basis(&lex, 4), e.krull_dimension(&tc).unwrap());
}

#[test]
fn budget_exhaustion_is_reported() {
    let e = Engine::new(Budget::default().with_max_pairs(1));
    let r = ring(&["w", "x", "y", "z"], 0);
    let i = ideal(&r, &["x*y - w*z", "y^3 - x*z^2", "w*y^2 - x^2*z", "x^3 - w^2*y"]);
    assert!(matches!(e.groebner(&i, MonomialOrder::Grevlex), Err(Error::BudgetExhausted(_))));
    // nothing was cached for the failed order
    let ok = Engine::default();
    assert!(ok.groebner(&i, MonomialOrder::Grevlex).unwrap().is_self_consistent());
}

#[test]
fn memory_cache_is_shared() {
    let e = Engine::default();
    let r = ring(&["x", "y"], 0);
    let i = ideal(&r, &["x^2 - y", "x*y - 1"]);
    e.groebner(&i, MonomialOrder::Grevlex).unwrap();
    e.groebner(&i, MonomialOrder::Grevlex).unwrap();
    assert_eq!(e.stats().bases_computed(), 1);
    assert_eq!(e.stats().memory_hits(), 1);
}

fn random_ideal(p: u64) -> impl Strategy<Value = (Vec<Polynomial>, u64)> {
    let r = ring(&["x", "y", "z"], p);
    (
        proptest::collection::vec(
            proptest::collection::vec((-3i64..4, proptest::collection::vec(0u32..3, 3)), 1..4),
            1..4,
        ),
        any::<u64>(),
    )
        .prop_map(move |(gens, seed)| {
            let polys = gens
                .into_iter()
                .map(|ts| {
                    let terms = ts
                        .into_iter()
                        .map(|(c, e)| (r.field().from_i64(c), crate::Monomial::from_exponents(&e)))
                        .collect();
                    Polynomial::from_terms(&r, terms)
                })
                .collect();
            (polys, seed)
        })
}

fn check_canonical(gens: Vec<Polynomial>, seed: u64) -> Result<(), TestCaseError> {
    let e = Engine::default();
    let r = gens[0].ring().clone();
    let i = Ideal::new(&r, gens.clone()).unwrap();
    let gb = e.groebner(&i, MonomialOrder::Grevlex).unwrap();
    prop_assert!(gb.is_self_consistent());
    prop_assert!(gb.is_reduced());
    for g in i.generators() {
        prop_assert!(gb.contains(g).unwrap());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut shuffled = gens;
    shuffled.shuffle(&mut rng);
    let field = r.field();
    let scaled: Vec<Polynomial> = shuffled
        .iter()
        .enumerate()
        .map(|(k, g)| g.scale(&field.from_i64(k as i64 + 2)))
        .collect();
    let j = Ideal::new(&r, scaled).unwrap();
    let gb2 = e.groebner(&j, MonomialOrder::Grevlex).unwrap();
    prop_assert_eq!(gb.elements(), gb2.elements());
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]
    #[test]
    fn reduced_basis_is_canonical_q((gens, seed) in random_ideal(0)) {
        check_canonical(gens, seed)?;
    }

    #[test]
    fn reduced_basis_is_canonical_f7((gens, seed) in random_ideal(7)) {
        check_canonical(gens, seed)?;
    }

    #[test]
    fn membership_implies_radical_membership((gens, _seed) in random_ideal(5)) {
        let e = Engine::default();
        let r = gens[0].ring().clone();
        let i = Ideal::new(&r, gens.clone()).unwrap();
        for g in i.generators() {
            prop_assert!(e.ideal_membership(g, &i).unwrap());
            prop_assert!(e.radical_membership(g, &i).unwrap());
        }
    }

    #[test]
    fn quotient_contains_ideal((gens, _seed) in random_ideal(5)) {
        let e = Engine::default();
        let r = gens[0].ring().clone();
        let i = Ideal::new(&r, gens).unwrap();
        let g = r.parse("x + 2*y").unwrap();
        let q = e.ideal_quotient(&i, &g).unwrap();
        prop_assert!(e.contains_ideal(&q, &i).unwrap());
        for h in q.generators() {
            prop_assert!(e.ideal_membership(&(h * &g), &i).unwrap());
        }
    }
}
