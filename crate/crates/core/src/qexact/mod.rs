//! Exact arithmetic in `Q(q^(1/2))`, the subring `A` of functions regular at
//! `q = infinity`, and reduction modulo `q^(-1/2) A`.
//!
//! Everything is stored in the variable `Q = q^(1/2)` so half-integer powers
//! of `q` are integral exponents.

mod laurent;
mod parse;
mod rational;

pub use laurent::HalfLaurent;
pub use rational::{quantum_factorial, quantum_int, QRational};

/// Shorthand for an exact rational coefficient.
pub type Rat = num::BigRational;

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(n.into(), d.into())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use proptest::prelude::*;

    fn p(s: &str) -> QRational {
        s.parse().unwrap()
    }

    /// q - q^-1
    fn q_minus_qinv() -> QRational {
        &QRational::q_pow(1) - &QRational::q_pow(-1)
    }

    #[test]
    fn inverse_cancels() {
        let a = q_minus_qinv();
        assert_eq!(&a * &a.inv().unwrap(), QRational::one());
    }

    #[test]
    fn half_powers_multiply() {
        let h = QRational::q_half_pow(1);
        assert_eq!(&h * &h, QRational::q_pow(1));
    }

    #[test]
    fn common_denominator_addition() {
        let a = p("(Q^4 - 1)/(1 + Q^4)");
        let b = p("2*Q^2/(1 + Q^4)");
        let sum = &a + &b;
        // Oracle: evaluate both sides at Q = 2 and Q = 3 with plain rationals.
        for x in [2i64, 3] {
            let q = rat(x * x, 1);
            let one = rat(1, 1);
            let lhs = (&q * &q - &one) / (&one + &q * &q) + rat(2, 1) * &q / (&one + &q * &q);
            let rhs = (&q * &q + rat(2, 1) * &q - &one) / (&one + &q * &q);
            assert_eq!(lhs, rhs);
            assert_eq!(sum.eval(&rat(x, 1)).unwrap(), lhs);
        }
        assert_eq!(sum, p("(Q^4 + 2*Q^2 - 1)/(Q^4 + 1)"));
        assert_eq!(sum.to_string(), "(Q^4 + 2*Q^2 - 1)/(Q^4 + 1)");
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(
            QRational::one().checked_div(&QRational::zero()),
            Err(Error::DivisionByZero)
        );
        assert_eq!(QRational::zero().inv(), Err(Error::DivisionByZero));
        assert!("1/(Q - Q)".parse::<QRational>().is_err());
    }

    #[test]
    fn quantum_integers() {
        assert_eq!(quantum_int(1), QRational::one());
        assert_eq!(quantum_int(0), QRational::zero());
        assert_eq!(quantum_int(2), p("Q^2 + Q^-2"));
        // Expand (q^3 - q^-3) / (q - q^-1) by field division.
        let num = &QRational::q_pow(3) - &QRational::q_pow(-3);
        let expanded = num.checked_div(&q_minus_qinv()).unwrap();
        assert_eq!(quantum_int(3), expanded);
        assert_eq!(quantum_int(3), p("Q^4 + 1 + Q^-4"));
        assert_eq!(quantum_int(-3), -quantum_int(3));
        assert_eq!(quantum_factorial(3), &quantum_int(3) * &quantum_int(2));
    }

    #[test]
    fn regularity_at_infinity() {
        assert!(p("2*Q^2/(1 + Q^4)").is_regular_at_infinity());
        assert!(!QRational::q_half_pow(1).is_regular_at_infinity());
        let entry = &q_minus_qinv() * &QRational::q_half_pow(-1);
        assert!(!entry.is_regular_at_infinity());
        assert!(QRational::zero().is_regular_at_infinity());
    }

    #[test]
    fn reduction_mod_q_half() {
        assert_eq!(
            p("(Q^4 - 1)/(1 + Q^4)").reduce_mod_qhalf().unwrap(),
            rat(1, 1)
        );
        assert_eq!(p("2*Q^2/(1 + Q^4)").reduce_mod_qhalf().unwrap(), rat(0, 1));
        assert_eq!(QRational::integer(7).reduce_mod_qhalf().unwrap(), rat(7, 1));
        assert!(matches!(
            QRational::q_half_pow(1).reduce_mod_qhalf(),
            Err(Error::NotRegular(_))
        ));
    }

    #[test]
    fn monomial_roots() {
        assert_eq!(
            QRational::q_pow(1).monomial_sqrt().unwrap(),
            QRational::q_half_pow(1)
        );
        assert_eq!(
            QRational::q_pow(-3).monomial_sqrt().unwrap(),
            QRational::q_half_pow(-3)
        );
        assert_eq!(p("4*Q^4").monomial_sqrt().unwrap(), p("2*Q^2"));
        assert!(p("Q^2 + 1").monomial_sqrt().is_err());
        assert!(p("-Q^2").monomial_sqrt().is_err());
        assert!(p("2*Q^2").monomial_sqrt().is_err());
        assert!(QRational::q_half_pow(1).monomial_sqrt().is_err());
    }

    #[test]
    fn canonical_denominator_is_primitive_and_positive() {
        let a = p("(Q + 1)/(-2*Q - 2*Q^3)");
        assert_eq!(a.to_string(), "(-1/2 - 1/2*Q^-1)/(Q^2 + 1)");
        let b = p("(Q^4 - 1)/(Q^2 - 1)");
        assert_eq!(b, p("Q^2 + 1"));
    }

    #[test]
    fn limit_at_q_one() {
        // (q^2 - 1)/(q - 1) -> 2
        let a = p("(Q^4 - 1)/(Q^2 - 1)");
        assert_eq!(a.at_q_one().unwrap(), rat(2, 1));
        assert!(p("1/(Q - 1)").at_q_one().is_err());
    }

    fn small_laurent() -> impl Strategy<Value = HalfLaurent> {
        prop::collection::vec((-4i64..=4, -3i64..=3), 0..4)
            .prop_map(|ts| HalfLaurent::from_terms(ts.into_iter().map(|(e, c)| (e, rat(c, 1)))))
    }

    fn small_qrational() -> impl Strategy<Value = QRational> {
        (small_laurent(), small_laurent()).prop_map(|(n, d)| {
            let d = if d.is_zero() { HalfLaurent::one() } else { d };
            QRational::from_parts(n, d).unwrap()
        })
    }

    fn regular_qrational() -> impl Strategy<Value = QRational> {
        small_qrational().prop_map(|a| {
            if a.is_regular_at_infinity() {
                a
            } else {
                let excess = a.numerator().degree().unwrap() - a.denominator().degree().unwrap();
                &a * &QRational::q_half_pow(-excess)
            }
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn field_axioms(a in small_qrational(), b in small_qrational(), c in small_qrational()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a - &a, QRational::zero());
            if !a.is_zero() {
                prop_assert_eq!(&a * &a.inv().unwrap(), QRational::one());
            }
        }

        #[test]
        fn reduction_is_a_ring_homomorphism(a in regular_qrational(), b in regular_qrational()) {
            let ra = a.reduce_mod_qhalf().unwrap();
            let rb = b.reduce_mod_qhalf().unwrap();
            prop_assert_eq!((&a * &b).reduce_mod_qhalf().unwrap(), &ra * &rb);
            prop_assert_eq!((&a + &b).reduce_mod_qhalf().unwrap(), &ra + &rb);
        }

        #[test]
        fn monomial_sqrt_squares_back(c in 1i64..20, d in 1i64..20, k in -6i64..6) {
            let a = QRational::monomial(rat(c * c, d * d), 2 * k);
            let s = a.monomial_sqrt().unwrap();
            prop_assert_eq!(&s * &s, a);
        }

        #[test]
        fn quantum_int_classical_limit(n in -12i64..12) {
            prop_assert_eq!(quantum_int(n).at_q_one().unwrap(), rat(n, 1));
        }

        #[test]
        fn canonical_string_parses_back(a in small_qrational()) {
            prop_assert_eq!(a.to_string().parse::<QRational>().unwrap(), a);
        }
    }
}
