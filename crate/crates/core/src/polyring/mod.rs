//! Exact coefficients, monomials, term orders and multivariate polynomials.

mod coeff;
mod monomial;
mod parse;
mod poly;
mod ring;

pub use coeff::{is_prime, pow_mod, primes_between, Coefficient, Field, MAX_PRIME};
pub use monomial::{Monomial, MonomialOrder, MAX_VARS};
pub use parse::{format_poly, parse_poly};
pub use poly::{ArithOp, Polynomial, Term};
pub(crate) use poly::merge_sub_scaled;
pub use ring::PolyRing;

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::sync::Arc;

    fn xyz(p: u64) -> Arc<PolyRing> {
        PolyRing::with_characteristic(&["x", "y", "z"], p).unwrap()
    }

    #[test]
    fn add_sub_mul_examples() {
        let r = xyz(0);
        let a = r.parse("x + y").unwrap();
        let b = r.parse("x - y").unwrap();
        assert_eq!(a.arith(&b, ArithOp::Add).unwrap(), r.parse("2*x").unwrap());
        assert!(a.arith(&r.zero(), ArithOp::Mul).unwrap().is_zero());

        let r5 = xyz(5);
        let a = r5.parse("x + y").unwrap();
        let b = r5.parse("x - y").unwrap();
        assert_eq!(a.arith(&b, ArithOp::Mul).unwrap(), r5.parse("x^2 - y^2").unwrap());
    }

    #[test]
    fn ring_mismatch_is_an_error() {
        let a = xyz(0).parse("x").unwrap();
        let b = xyz(7).parse("x").unwrap();
        assert!(a.arith(&b, ArithOp::Add).is_err());
    }

    #[test]
    fn derivatives() {
        let r = xyz(0);
        let f = r.parse("x^3 + y^3 + z^3").unwrap();
        assert_eq!(f.partial_derivative(0).unwrap(), r.parse("3*x^2").unwrap());
        assert!(r.integer(7).partial_derivative(0).unwrap().is_zero());
        assert!(xyz(5).parse("x^5").unwrap().partial_derivative(0).unwrap().is_zero());
        assert!(matches!(
            f.partial_derivative(3),
            Err(crate::Error::VariableOutOfRange { index: 3, arity: 3 })
        ));
    }

    #[test]
    fn euler_defect_examples() {
        let r = xyz(0);
        assert!(r.parse("x^3 + y^3 + z^3").unwrap().euler_defect().unwrap().is_zero());
        assert!(xyz(7).parse("x").unwrap().euler_defect().unwrap().is_zero());
        assert!(matches!(
            r.parse("x^2 + y").unwrap().euler_defect(),
            Err(crate::Error::NotHomogeneous)
        ));
    }

    #[test]
    fn coefficient_lookup() {
        let r = xyz(0);
        let f = r.parse("x^2*y").unwrap();
        assert!(f.coefficient_of(&Monomial::from_exponents(&[2, 1, 0])).is_one());
        assert!(f.coefficient_of(&Monomial::from_exponents(&[1, 2, 0])).is_zero());

        // 6!/(2!2!2!) = 90 = 6 mod 7
        let fermat = xyz(7).parse("x^3 + y^3 + z^3").unwrap();
        let c = fermat.pow(6).coefficient_of(&Monomial::from_exponents(&[6, 6, 6]));
        assert_eq!(c.residue(), Some(6));
    }

    #[test]
    fn exact_division() {
        let r = xyz(0);
        let f = r.parse("x^2 - y^2").unwrap();
        assert_eq!(f.div_exact(&r.parse("x - y").unwrap()).unwrap(), r.parse("x + y").unwrap());
        assert!(f.div_exact(&r.parse("x - z").unwrap()).is_none());
    }

    #[test]
    fn normalized_forms() {
        let r = xyz(0);
        let f = r.parse("-2/3*x + 4/9*y").unwrap();
        assert_eq!(f.normalized().to_string(), "3*x - 2*y");
        let g = xyz(7).parse("3*x + y").unwrap();
        assert_eq!(g.normalized().to_string(), "x + 5*y");
    }

    #[test]
    fn frobenius_matches_power() {
        let r = xyz(3);
        let f = r.parse("x + 2*y + z^2").unwrap();
        assert_eq!(f.frobenius_unchecked(9), f.pow(9));
    }

    fn random_cubic(p: u64) -> impl Strategy<Value = Polynomial> {
        proptest::collection::vec(-50i64..50, 10).prop_map(move |cs| {
            let r = xyz(p);
            let exps: Vec<[u32; 3]> = (0..=3u32)
                .flat_map(|a| (0..=3 - a).map(move |b| [a, b, 3 - a - b]))
                .collect();
            let terms = exps
                .iter()
                .zip(cs)
                .map(|(e, c)| (r.field().from_i64(c), Monomial::from_exponents(e)))
                .collect();
            Polynomial::from_terms(&r, terms)
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]
        #[test]
        fn euler_defect_vanishes_q(f in random_cubic(0)) {
            prop_assert!(f.euler_defect().unwrap().is_zero());
        }

        #[test]
        fn euler_defect_vanishes_f5(f in random_cubic(5)) {
            prop_assert!(f.euler_defect().unwrap().is_zero());
        }

        #[test]
        fn euler_defect_vanishes_f7(f in random_cubic(7)) {
            prop_assert!(f.euler_defect().unwrap().is_zero());
        }

        #[test]
        fn euler_defect_vanishes_f11(f in random_cubic(11)) {
            prop_assert!(f.euler_defect().unwrap().is_zero());
        }
    }
}
