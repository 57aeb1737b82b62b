//! Pre-lambda structures on the two rings in scope, and the passage
//! between sigma series and Adams operations.
//!
//! For an integer `a` the sigma series is `(1 - t)^(-a)`, with every Adams
//! operation acting as the identity. For a Laurent polynomial
//! `p = sum a_m * m` (integer coefficients required) it is the product
//! `prod (1 - m*t)^(-a_m)`, and the r-th Adams operation is the exponent
//! substitution [`LaurentPoly::adams`]. In both cases
//!
//! ```text
//! sigma_t(a) = exp( sum_(r>=1) Adams_r(a) * t^r / r )
//! ```
//!
//! holds after tensoring with the rationals, and the opposite structure is
//! `lambda_t(a) = sigma_(-t)(a)^(-1)`.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::laurent::{LaurentPoly, Monomial, Rat, VarSet};
use crate::series::TruncatedSeries;

/// An element of one of the two concrete pre-lambda rings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PreLambdaElement {
    /// The ring of integers with `sigma_t(a) = (1 - t)^(-a)`.
    Int(i64),
    /// A Laurent ring with the product-form sigma series.
    Poly(LaurentPoly),
}

impl PreLambdaElement {
    /// The element itself as a Laurent polynomial (integers become
    /// constants over the empty variable set).
    pub fn as_poly(&self) -> LaurentPoly {
        match self {
            PreLambdaElement::Int(a) => {
                LaurentPoly::constant(VarSet::scalar(), Rat::from_integer(BigInt::from(*a)))
            }
            PreLambdaElement::Poly(p) => p.clone(),
        }
    }

    /// The r-th Adams operation: identity on integers, exponent
    /// substitution on polynomials.
    pub fn adams(&self, r: u32) -> Result<LaurentPoly> {
        match self {
            PreLambdaElement::Int(_) => {
                if r == 0 {
                    return Err(Error::AdamsIndex);
                }
                Ok(self.as_poly())
            }
            PreLambdaElement::Poly(p) => p.adams(r),
        }
    }
}

/// The sigma series of an element, to the given order.
///
/// The polynomial case requires integer coefficients; they become the
/// exponents of the geometric factors.
pub fn sigma_series(a: &PreLambdaElement, order: usize) -> Result<TruncatedSeries> {
    match a {
        PreLambdaElement::Int(k) => {
            let one = LaurentPoly::one(VarSet::scalar());
            TruncatedSeries::geometric_factor(&one, *k, order)
        }
        PreLambdaElement::Poly(p) => {
            let vars = p.vars().clone();
            let mut out = TruncatedSeries::one(vars.clone(), order);
            for (m, c) in p.terms() {
                if !c.is_integer() {
                    return Err(Error::NonIntegerCoefficient {
                        monomial: p.monomial_string(m),
                        value: c.to_string(),
                    });
                }
                let unit = LaurentPoly::term(vars.clone(), m.clone(), Rat::from_integer(1.into()));
                let factor = TruncatedSeries::geometric_factor_big(&unit, &c.to_integer(), order)?;
                out = out.mul(&factor)?;
            }
            Ok(out)
        }
    }
}

/// The opposite series `lambda_t(a) = sigma_(-t)(a)^(-1)`.
pub fn lambda_series(a: &PreLambdaElement, order: usize) -> Result<TruncatedSeries> {
    sigma_series(a, order)?.substitute_neg_t().inverse()
}

/// Extract `Adams_1 .. Adams_N` from a series with constant term 1, using
/// the exp/log form: `Adams_r = r * [t^r] log(s)`.
pub fn adams_from_sigma(s: &TruncatedSeries) -> Result<Vec<LaurentPoly>> {
    let log = s.log()?;
    Ok((1..=s.order())
        .map(|r| log.coefficient(r).scale(&crate::laurent::rat(r as i64)))
        .collect())
}

/// Same extraction by the Newton-style recurrence
/// `Adams_n = n*s_n - sum_(r<n) Adams_r * s_(n-r)`, with no logarithm.
///
/// Kept alongside [`adams_from_sigma`] so the two routes can be checked
/// against each other.
pub fn adams_from_sigma_newton(s: &TruncatedSeries) -> Result<Vec<LaurentPoly>> {
    if !s.coefficient(0).is_one() {
        return Err(Error::LogConstantTerm(s.coefficient(0).to_string()));
    }
    let mut psi: Vec<LaurentPoly> = Vec::with_capacity(s.order());
    for n in 1..=s.order() {
        let mut acc = s.coefficient(n).scale(&crate::laurent::rat(n as i64));
        for r in 1..n {
            acc = acc.add_raw(&psi[r - 1].mul_raw(s.coefficient(n - r)).neg());
        }
        psi.push(acc);
    }
    Ok(psi)
}

/// Rebuild the sigma series `exp( sum Adams_r t^r / r )` from the first
/// `order` Adams values; left inverse of [`adams_from_sigma`].
pub fn sigma_from_adams(psi: &[LaurentPoly], order: usize) -> Result<TruncatedSeries> {
    if psi.len() < order {
        return Err(Error::OrderMismatch(psi.len(), order));
    }
    let vars = psi
        .first()
        .map(|p| p.vars().clone())
        .unwrap_or_else(VarSet::scalar);
    let mut arg = TruncatedSeries::zero(vars.clone(), order);
    for r in 1..=order {
        if psi[r - 1].vars() != &vars {
            return Err(Error::VarSetMismatch(
                vars.to_string(),
                psi[r - 1].vars().to_string(),
            ));
        }
        let scaled = psi[r - 1].scale(&Rat::new(BigInt::from(1), BigInt::from(r)));
        arg.set_coefficient(r, scaled);
    }
    arg.exp()
}

/// Convenience: the monomial `m` as a coefficient-1 polynomial over `vars`.
pub fn unit_monomial(vars: &VarSet, m: &Monomial) -> LaurentPoly {
    LaurentPoly::term(vars.clone(), m.clone(), Rat::from_integer(1.into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::{rat, ratio};
    use crate::parse::parse_poly;
    use proptest::prelude::*;

    fn p(s: &str) -> LaurentPoly {
        parse_poly(s, &VarSet::yxz()).unwrap()
    }

    fn poly_el(s: &str) -> PreLambdaElement {
        PreLambdaElement::Poly(p(s))
    }

    #[test]
    fn sigma_of_integers() {
        let s = sigma_series(&PreLambdaElement::Int(2), 3).unwrap();
        assert_eq!(
            s,
            TruncatedSeries::from_rationals(vec![rat(1), rat(2), rat(3), rat(4)])
        );
    }

    #[test]
    fn sigma_of_even_and_odd_lines() {
        let s = sigma_series(&poly_el("y*x"), 2).unwrap();
        assert_eq!(s.coefficient(1), &p("y*x"));
        assert_eq!(s.coefficient(2), &p("y^2*x^2"));

        // A line in odd degree contributes a polynomial factor.
        let s = sigma_series(&poly_el("-x*z"), 2).unwrap();
        assert_eq!(s.coefficient(0), &p("1"));
        assert_eq!(s.coefficient(1), &p("-x*z"));
        assert!(s.coefficient(2).is_zero());
    }

    #[test]
    fn sigma_needs_integer_coefficients() {
        let bad = PreLambdaElement::Poly(LaurentPoly::constant(VarSet::yxz(), ratio(1, 2)));
        assert!(matches!(
            sigma_series(&bad, 2),
            Err(Error::NonIntegerCoefficient { .. })
        ));
    }

    #[test]
    fn sigma_first_coefficient_is_the_element() {
        for el in [poly_el("1 - y*z - x*z + y*x*z^2"), poly_el("3 - 2*x^-1")] {
            let s = sigma_series(&el, 4).unwrap();
            assert!(s.coefficient(0).is_one());
            assert_eq!(s.coefficient(1), &el.as_poly());
        }
    }

    #[test]
    fn lambda_of_a_line() {
        let s = lambda_series(&PreLambdaElement::Int(1), 3).unwrap();
        assert_eq!(
            s,
            TruncatedSeries::from_rationals(vec![rat(1), rat(1), rat(0), rat(0)])
        );
        let s = lambda_series(&poly_el("y*x"), 2).unwrap();
        assert_eq!(s.coefficient(1), &p("y*x"));
        assert!(s.coefficient(2).is_zero());
        // Alternating powers of an odd line never vanish.
        let s = lambda_series(&poly_el("-x*z"), 3).unwrap();
        assert_eq!(s.coefficient(1), &p("-x*z"));
        assert_eq!(s.coefficient(2), &p("x^2*z^2"));
        assert_eq!(s.coefficient(3), &p("-x^3*z^3"));
    }

    #[test]
    fn adams_extraction_int_case() {
        let s = sigma_series(&PreLambdaElement::Int(3), 5).unwrap();
        let psi = adams_from_sigma(&s).unwrap();
        for v in &psi {
            assert_eq!(v.as_constant().unwrap(), rat(3));
        }
    }

    #[test]
    fn adams_extraction_is_substitution() {
        let el = poly_el("y + x");
        let s = sigma_series(&el, 3).unwrap();
        let psi = adams_from_sigma(&s).unwrap();
        for (i, v) in psi.iter().enumerate() {
            assert_eq!(v, &el.as_poly().adams(i as u32 + 1).unwrap());
        }
    }

    #[test]
    fn adams_of_one_plus_t() {
        let mut s = TruncatedSeries::zero(VarSet::scalar(), 3);
        s.set_coefficient(0, LaurentPoly::one(VarSet::scalar()));
        s.set_coefficient(1, LaurentPoly::one(VarSet::scalar()));
        let psi = adams_from_sigma(&s).unwrap();
        let values: Vec<Rat> = psi.iter().map(|v| v.as_constant().unwrap()).collect();
        assert_eq!(values, vec![rat(1), rat(-1), rat(1)]);
    }

    #[test]
    fn adams_requires_unit_constant_term() {
        let s = TruncatedSeries::from_rationals(vec![rat(2), rat(1)]);
        assert!(matches!(adams_from_sigma(&s), Err(Error::LogConstantTerm(_))));
        assert!(matches!(
            adams_from_sigma_newton(&s),
            Err(Error::LogConstantTerm(_))
        ));
    }

    #[test]
    fn sigma_from_adams_cases() {
        let ones = vec![LaurentPoly::one(VarSet::scalar()); 3];
        assert_eq!(
            sigma_from_adams(&ones, 3).unwrap(),
            TruncatedSeries::from_rationals(vec![rat(1), rat(1), rat(1), rat(1)])
        );
        let powers: Vec<LaurentPoly> = (1..=2).map(|r| p("y*x").adams(r).unwrap()).collect();
        let s = sigma_from_adams(&powers, 2).unwrap();
        assert_eq!(s.coefficient(1), &p("y*x"));
        assert_eq!(s.coefficient(2), &p("y^2*x^2"));
        let zeros = vec![LaurentPoly::zero(VarSet::scalar()); 4];
        assert!(sigma_from_adams(&zeros, 4).unwrap().is_one());
        assert!(matches!(
            sigma_from_adams(&ones, 5),
            Err(Error::OrderMismatch(3, 5))
        ));
    }

    fn arb_int_poly() -> impl Strategy<Value = LaurentPoly> {
        proptest::collection::vec(
            (proptest::collection::vec(-2i64..=2, 3), -3i64..=3),
            0..5,
        )
        .prop_map(|terms| {
            LaurentPoly::from_terms(
                VarSet::yxz(),
                terms
                    .into_iter()
                    .map(|(e, n)| (Monomial::from_exps(e), rat(n)))
                    .collect(),
            )
        })
    }

    proptest! {
        #[test]
        fn sigma_is_additive_to_multiplicative(a in arb_int_poly(), b in arb_int_poly()) {
            let sum = PreLambdaElement::Poly(a.add(&b).unwrap());
            let lhs = sigma_series(&sum, 6).unwrap();
            let rhs = sigma_series(&PreLambdaElement::Poly(a), 6).unwrap()
                .mul(&sigma_series(&PreLambdaElement::Poly(b), 6).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn sigma_is_additive_int_case(a in -5i64..=5, b in -5i64..=5) {
            let lhs = sigma_series(&PreLambdaElement::Int(a + b), 8).unwrap();
            let rhs = sigma_series(&PreLambdaElement::Int(a), 8).unwrap()
                .mul(&sigma_series(&PreLambdaElement::Int(b), 8).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn lambda_times_sigma_neg_t(a in arb_int_poly()) {
            let el = PreLambdaElement::Poly(a);
            let lam = lambda_series(&el, 6).unwrap();
            let sig_neg = sigma_series(&el, 6).unwrap().substitute_neg_t();
            prop_assert!(lam.mul(&sig_neg).unwrap().is_one());
        }

        #[test]
        fn adams_roundtrip(a in arb_int_poly()) {
            let s = sigma_series(&PreLambdaElement::Poly(a.clone()), 6).unwrap();
            let psi = adams_from_sigma(&s).unwrap();
            // Both extraction routes agree.
            prop_assert_eq!(&psi, &adams_from_sigma_newton(&s).unwrap());
            // Each extracted value is the exponent substitution.
            for (i, v) in psi.iter().enumerate() {
                prop_assert_eq!(v, &a.adams(i as u32 + 1).unwrap());
            }
            // exp-form reconstruction returns the series.
            prop_assert_eq!(sigma_from_adams(&psi, 6).unwrap(), s);
        }

        // The other composition order: extraction undoes reconstruction on
        // arbitrary rational-coefficient sequences.
        #[test]
        fn extraction_undoes_reconstruction(
            seq in proptest::collection::vec(
                (proptest::collection::vec(-2i64..=2, 3), -6i64..=6, 1i64..=3),
                5,
            )
        ) {
            let psi: Vec<LaurentPoly> = seq
                .into_iter()
                .map(|(e, n, d)| LaurentPoly::term(
                    VarSet::yxz(),
                    Monomial::from_exps(e),
                    crate::laurent::ratio(n, d),
                ))
                .collect();
            let s = sigma_from_adams(&psi, 5).unwrap();
            let back = adams_from_sigma(&s).unwrap();
            prop_assert_eq!(back, psi);
        }
    }
}
