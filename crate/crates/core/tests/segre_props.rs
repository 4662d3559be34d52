mod common;

use proptest::prelude::*;
use segrelab::segre::{kernel_by_elimination, seven_generators, z_index, CubicCurve};
use segrelab::{Coefficient, Engine, Ideal, Polynomial};

fn smooth_curve(p: u64, seed: u64) -> CubicCurve {
    common::smooth_cubics(p, 1, seed).pop().unwrap()
}

/// Projective points of the curve over F_p, by exhaustive search.
fn points(c: &CubicCurve) -> Vec<[Coefficient; 3]> {
    let p = c.characteristic();
    let field = c.field();
    let mut out = Vec::new();
    for a in 0..p {
        for b in 0..p {
            for d in 0..p {
                // first nonzero coordinate equal to 1
                let first = [a, b, d].into_iter().find(|&v| v != 0);
                if first != Some(1) {
                    continue;
                }
                let pt = [a, b, d].map(|v| field.from_i64(v as i64));
                if c.polynomial().evaluate(&pt).is_zero() {
                    out.push(pt);
                }
            }
        }
    }
    out
}

fn swap_columns(f: &Polynomial) -> Polynomial {
    let map: Vec<usize> = (0..6).map(|k| if k < 3 { k + 3 } else { k - 3 }).collect();
    f.remap(f.ring(), &map)
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 12, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn kernel_equals_seven_for_random_smooth_cubics(seed in any::<u64>(), pi in 0usize..3) {
        let p = [5, 7, 11][pi];
        let c = smooth_curve(p, seed);
        let engine = Engine::default();
        let kernel = kernel_by_elimination(&engine, &c).unwrap();
        let seven = seven_generators(&c).unwrap();
        prop_assert!(engine.ideal_equal(&kernel, &seven.ideal()).unwrap(), "curve {}", c.polynomial());
    }

    #[test]
    fn euler_quadruple_lies_in_the_ideal(seed in any::<u64>(), pi in 0usize..4) {
        let p = [0, 5, 7, 11][pi];
        let c = smooth_curve(p, seed);
        let engine = Engine::default();
        let pres = seven_generators(&c).unwrap();
        let a = pres.ideal();
        let e = Ideal::new(pres.ring(), pres.euler4().to_vec()).unwrap();
        prop_assert!(engine.contains_ideal(&a, &e).unwrap());
    }

    #[test]
    fn ideal_is_symmetric_under_column_swap(seed in any::<u64>(), pi in 0usize..3) {
        let p = [5, 7, 11][pi];
        let c = smooth_curve(p, seed);
        let engine = Engine::default();
        let pres = seven_generators(&c).unwrap();
        let swapped = Ideal::new(pres.ring(), pres.seven().iter().map(swap_columns).collect()).unwrap();
        prop_assert!(engine.ideal_equal(&pres.ideal(), &swapped).unwrap());
    }

    #[test]
    fn seven_vanish_on_parametrized_points(seed in any::<u64>(), pi in 0usize..3, s0 in 0i64..11, s1 in 0i64..11) {
        let p = [5, 7, 11][pi];
        let c = smooth_curve(p, seed);
        let pres = seven_generators(&c).unwrap();
        let field = c.field();
        let s = [field.from_i64(s0), field.from_i64(s1)];
        let pts = points(&c);
        prop_assert!(!pts.is_empty());
        for pt in pts {
            let mut z = vec![field.zero(); 6];
            for i in 0..3 {
                for t in 0..2 {
                    z[z_index(i, t)] = pt[i].mul(&s[t]);
                }
            }
            for g in pres.seven() {
                prop_assert!(g.evaluate(&z).is_zero(), "{g} at {pt:?} x {s:?}");
            }
        }
    }

    #[test]
    fn scaling_the_cubic_keeps_the_ideal(seed in any::<u64>(), pi in 0usize..4, k in 1i64..10) {
        let p = [0, 5, 7, 11][pi];
        prop_assume!(p == 0 || !(k as u64).is_multiple_of(p));
        let c = smooth_curve(p, seed);
        let scaled = CubicCurve::new(c.polynomial().scale(&c.field().from_i64(k))).unwrap();
        let engine = Engine::default();
        let a = seven_generators(&c).unwrap().ideal();
        let b = seven_generators(&scaled).unwrap().ideal();
        prop_assert!(engine.ideal_equal(&a, &b).unwrap());
    }
}

#[test]
fn points_satisfy_the_cubic_oracle_count() {
    // x^3 + y^3 + z^3 over F_5 has p + 1 points since 5 = 2 mod 3
    let c = CubicCurve::fermat(5).unwrap();
    assert_eq!(points(&c).len(), 6);
    let c = CubicCurve::fermat(11).unwrap();
    assert_eq!(points(&c).len(), 12);
}
