//! Generating series for invariants of symmetric products and
//! configuration spaces.
//!
//! Every series is computed twice, by the product form over monomials and
//! by the exp form over Adams operations, and the two results are
//! hard-asserted equal before anything is returned: a mismatch means a bug
//! and surfaces as [`Error::Consistency`].
//!
//! The `t^n` coefficient of a symmetric-product series is the invariant of
//! the n-th symmetric product; the configuration series packages the
//! invariants of unordered distinct n-tuples, and the signature series has
//! the closed form `(1+t)^((s-chi)/2) / (1-t)^((s+chi)/2)`.

use num_traits::Signed;

use crate::error::{Error, Result};
use crate::laurent::{rat, LaurentPoly, Rat, VarSet};
use crate::prelambda::{sigma_from_adams, sigma_series, PreLambdaElement};
use crate::series::TruncatedSeries;

/// Which invariant a profile carries.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GenusKind {
    /// Hodge-number polynomial in `(y, x, z)`.
    Hodge,
    /// E-polynomial in `(y, x)`.
    E,
    /// chi_y polynomial in `(y)`.
    ChiY,
    /// Poincare polynomial in `(z)`.
    Betti,
    /// Euler characteristic.
    Euler,
    /// Signature together with the Euler characteristic.
    Signature,
}

impl GenusKind {
    pub fn as_str(self) -> &'static str {
        match self {
            GenusKind::Hodge => "hodge",
            GenusKind::E => "e",
            GenusKind::ChiY => "chi_y",
            GenusKind::Betti => "betti",
            GenusKind::Euler => "euler",
            GenusKind::Signature => "signature",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "hodge" => GenusKind::Hodge,
            "e" => GenusKind::E,
            "chi_y" => GenusKind::ChiY,
            "betti" => GenusKind::Betti,
            "euler" => GenusKind::Euler,
            "signature" => GenusKind::Signature,
            _ => return None,
        })
    }

    /// Canonical variable set of the polynomial data, if any.
    pub fn vars(self) -> Option<VarSet> {
        match self {
            GenusKind::Hodge => Some(VarSet::yxz()),
            GenusKind::E => Some(VarSet::yx()),
            GenusKind::ChiY => Some(VarSet::y()),
            GenusKind::Betti => Some(VarSet::z()),
            GenusKind::Euler | GenusKind::Signature => None,
        }
    }
}

impl std::fmt::Display for GenusKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The numerical data of a profile.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GenusData {
    Poly(LaurentPoly),
    Euler(i64),
    Signature { sigma: i64, chi: i64 },
}

/// A named space (or coefficient system on one) reduced to its numerical
/// shadow: the polynomial or numbers a genus formula consumes.
///
/// The compact-support flag is descriptive metadata; the formulas are
/// identical for both conventions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenusProfile {
    pub name: String,
    pub kind: GenusKind,
    pub data: GenusData,
    pub compact_support: bool,
}

impl GenusProfile {
    pub fn new(
        name: impl Into<String>,
        kind: GenusKind,
        data: GenusData,
        compact_support: bool,
    ) -> Result<Self> {
        let name = name.into();
        match (&kind, &data) {
            (GenusKind::Euler, GenusData::Euler(_)) => {}
            (GenusKind::Signature, GenusData::Signature { .. }) => {}
            (k, GenusData::Poly(p)) if k.vars().as_ref() == Some(p.vars()) => {}
            _ => {
                return Err(Error::Profile {
                    name,
                    msg: format!("data does not match kind `{kind}`"),
                })
            }
        }
        Ok(GenusProfile {
            name,
            kind,
            data,
            compact_support,
        })
    }

    /// Convenience constructor for the polynomial kinds.
    pub fn from_poly(
        name: impl Into<String>,
        kind: GenusKind,
        poly: LaurentPoly,
        compact_support: bool,
    ) -> Result<Self> {
        Self::new(name, kind, GenusData::Poly(poly), compact_support)
    }

    pub fn poly(&self) -> Option<&LaurentPoly> {
        match &self.data {
            GenusData::Poly(p) => Some(p),
            _ => None,
        }
    }

    /// Disjoint union of the underlying spaces: data adds.
    pub fn disjoint_union(&self, other: &GenusProfile) -> Result<GenusProfile> {
        if self.kind != other.kind {
            return Err(Error::Profile {
                name: format!("{} + {}", self.name, other.name),
                msg: format!("kinds differ: {} vs {}", self.kind, other.kind),
            });
        }
        let data = match (&self.data, &other.data) {
            (GenusData::Poly(a), GenusData::Poly(b)) => GenusData::Poly(a.add(b)?),
            (GenusData::Euler(a), GenusData::Euler(b)) => GenusData::Euler(a + b),
            (
                GenusData::Signature { sigma: s1, chi: c1 },
                GenusData::Signature { sigma: s2, chi: c2 },
            ) => GenusData::Signature {
                sigma: s1 + s2,
                chi: c1 + c2,
            },
            _ => {
                return Err(Error::Profile {
                    name: format!("{} + {}", self.name, other.name),
                    msg: "data shapes differ".to_string(),
                })
            }
        };
        GenusProfile::new(
            format!("{} + {}", self.name, other.name),
            self.kind,
            data,
            self.compact_support,
        )
    }
}

/// For hodge data the stored coefficient of `y^p x^q z^k` is
/// `(-1)^k h^(p,q,k)`, so it must be an integer of sign `(-1)^k`.
fn check_hodge_signs(p: &LaurentPoly) -> Result<()> {
    let k_index = 2; // (y, x, z)
    for (m, c) in p.terms() {
        if !c.is_integer() {
            return Err(Error::NonIntegerCoefficient {
                monomial: p.monomial_string(m),
                value: c.to_string(),
            });
        }
        let k = m.exps()[k_index];
        let wrong = if k % 2 == 0 {
            c.is_negative()
        } else {
            c.is_positive()
        };
        if wrong {
            return Err(Error::HodgeSign {
                monomial: p.monomial_string(m),
                value: c.to_string(),
            });
        }
    }
    Ok(())
}

/// Shared tail: compare the two routes and check integrality.
fn finish(product: TruncatedSeries, exp_form: TruncatedSeries, what: &str) -> Result<TruncatedSeries> {
    if product != exp_form {
        return Err(Error::Consistency(format!(
            "{what}: product form and exp form disagree"
        )));
    }
    if !product.has_integer_coefficients() {
        return Err(Error::Consistency(format!(
            "{what}: series has a non-integer coefficient"
        )));
    }
    Ok(product)
}

/// The symmetric-product series of a profile: `t^n` carries the invariant
/// of the n-th symmetric product. Signature profiles route to
/// [`signature_series`].
pub fn symmetric_series(profile: &GenusProfile, order: usize) -> Result<TruncatedSeries> {
    match (&profile.kind, &profile.data) {
        (GenusKind::Signature, GenusData::Signature { sigma, chi }) => {
            signature_series(*sigma, *chi, order)
        }
        (GenusKind::Euler, GenusData::Euler(chi)) => {
            let el = PreLambdaElement::Int(*chi);
            let product = sigma_series(&el, order)?;
            let psi = vec![el.as_poly(); order];
            let exp_form = sigma_from_adams(&psi, order)?;
            finish(product, exp_form, "euler symmetric series")
        }
        (kind, GenusData::Poly(p)) => {
            if *kind == GenusKind::Hodge {
                check_hodge_signs(p)?;
            }
            let product = sigma_series(&PreLambdaElement::Poly(p.clone()), order)?;
            // Keep at least Adams_1 so the exp form lives over the same
            // variables even at order 0.
            let psi: Result<Vec<LaurentPoly>> =
                (1..=order.max(1) as u32).map(|r| p.adams(r)).collect();
            let exp_form = sigma_from_adams(&psi?, order)?;
            finish(product, exp_form, "symmetric series")
        }
        _ => unreachable!("profile validated at construction"),
    }
}

/// The configuration-space series: `t^n` carries the invariant of the
/// space of unordered n-tuples of distinct points. Only the hodge, e and
/// chi_y kinds are covered.
pub fn configuration_series(profile: &GenusProfile, order: usize) -> Result<TruncatedSeries> {
    let supported = matches!(profile.kind, GenusKind::Hodge | GenusKind::E | GenusKind::ChiY);
    if !supported {
        return Err(Error::UnsupportedKind {
            kind: profile.kind.to_string(),
            operation: "configuration_series".to_string(),
        });
    }
    let p = profile.poly().expect("validated poly kind");
    if profile.kind == GenusKind::Hodge {
        check_hodge_signs(p)?;
    }
    let vars = p.vars().clone();

    // Product form: prod over terms of (1 + m*t)^(c_m).
    let mut product = TruncatedSeries::one(vars.clone(), order);
    for (m, c) in p.terms() {
        if !c.is_integer() {
            return Err(Error::NonIntegerCoefficient {
                monomial: p.monomial_string(m),
                value: c.to_string(),
            });
        }
        let unit = LaurentPoly::term(vars.clone(), m.clone(), Rat::from_integer(1.into()));
        let factor = TruncatedSeries::geometric_factor_big(&unit, &(-c.to_integer()), order)?
            .substitute_neg_t();
        product = product.mul(&factor)?;
    }

    // Exp form: exp( -sum_r Adams_r * (-t)^r / r ).
    let mut arg = TruncatedSeries::zero(vars, order);
    for r in 1..=order {
        let sign = if r % 2 == 0 { -1 } else { 1 };
        let coeff = p
            .adams(r as u32)?
            .scale(&(rat(sign) / rat(r as i64)));
        arg.set_coefficient(r, coeff);
    }
    let exp_form = arg.exp()?;
    finish(product, exp_form, "configuration series")
}

/// The closed form `(1+t)^((sigma-chi)/2) / (1-t)^((sigma+chi)/2)`.
/// Signature and Euler characteristic must have the same parity.
pub fn signature_series(sigma: i64, chi: i64, order: usize) -> Result<TruncatedSeries> {
    if (sigma - chi).rem_euclid(2) != 0 {
        return Err(Error::ParityMismatch { sigma, chi });
    }
    let one = LaurentPoly::one(VarSet::scalar());
    // (1 + t)^a as (1 - t)^a with t -> -t.
    let plus = TruncatedSeries::geometric_factor(&one, -(sigma - chi) / 2, order)?
        .substitute_neg_t();
    let minus = TruncatedSeries::geometric_factor(&one, (sigma + chi) / 2, order)?;
    let series = plus.mul(&minus)?;
    if !series.has_integer_coefficients() {
        return Err(Error::Consistency(
            "signature series has a non-integer coefficient".to_string(),
        ));
    }
    Ok(series)
}

/// Coefficient of `t^n` in the symmetric-product series: the invariant of
/// the n-th symmetric product itself.
pub fn invariant_of_symmetric_product(profile: &GenusProfile, n: usize) -> Result<LaurentPoly> {
    Ok(symmetric_series(profile, n)?.coefficient(n).clone())
}

/// All the specializations of one hodge profile.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecializationReport {
    /// E-polynomial profile (`z = 1`).
    pub e: GenusProfile,
    /// chi_y profile (`z = 1`, then `x = 1`).
    pub chi_y: GenusProfile,
    /// Poincare-polynomial profile (`y = x = 1`).
    pub betti: GenusProfile,
    /// Euler characteristic (`y = x = z = 1`).
    pub euler: GenusProfile,
    /// Arithmetic genus: chi_y at `y = 0`. Undefined when chi_y has
    /// negative powers of `y`.
    pub arithmetic_genus: Option<i64>,
    /// `(sigma, chi)` profile when the parity condition holds.
    pub signature: Option<GenusProfile>,
}

fn integer_value(p: &LaurentPoly, what: &str) -> Result<i64> {
    let c = p
        .as_constant()
        .filter(|c| c.is_integer())
        .ok_or_else(|| Error::Consistency(format!("{what} is not an integer: {p}")))?;
    i64::try_from(c.to_integer())
        .map_err(|_| Error::Consistency(format!("{what} out of range: {p}")))
}

/// Derive the e, chi_y, betti, euler, arithmetic-genus and signature data
/// from a hodge profile by variable specialization.
pub fn specialization_bridge(profile: &GenusProfile) -> Result<SpecializationReport> {
    if profile.kind != GenusKind::Hodge {
        return Err(Error::UnsupportedKind {
            kind: profile.kind.to_string(),
            operation: "specialization_bridge".to_string(),
        });
    }
    let h = profile.poly().expect("validated poly kind");
    let cs = profile.compact_support;
    let name = &profile.name;

    let e = h.eval_var("z", rat(1))?;
    let chi_y = e.eval_var("x", rat(1))?;
    let betti = h
        .specialize(&[
            ("y", crate::laurent::SpecValue::Rat(rat(1))),
            ("x", crate::laurent::SpecValue::Rat(rat(1))),
        ])?;
    let euler = integer_value(&chi_y.eval_var("y", rat(1))?, "euler characteristic")?;
    let has_negative_y = chi_y.terms().any(|(m, _)| m.exps()[0] < 0);
    let arithmetic_genus = if has_negative_y {
        None
    } else {
        Some(integer_value(&chi_y.eval_var("y", rat(0))?, "arithmetic genus")?)
    };
    let sigma = integer_value(&chi_y.eval_var("y", rat(-1))?, "signature")?;

    let signature = if (sigma - euler).rem_euclid(2) == 0 {
        Some(GenusProfile::new(
            format!("{name}.signature"),
            GenusKind::Signature,
            GenusData::Signature { sigma, chi: euler },
            cs,
        )?)
    } else {
        None
    };

    Ok(SpecializationReport {
        e: GenusProfile::from_poly(format!("{name}.e"), GenusKind::E, e, cs)?,
        chi_y: GenusProfile::from_poly(format!("{name}.chi_y"), GenusKind::ChiY, chi_y, cs)?,
        betti: GenusProfile::from_poly(format!("{name}.betti"), GenusKind::Betti, betti, cs)?,
        euler: GenusProfile::new(
            format!("{name}.euler"),
            GenusKind::Euler,
            GenusData::Euler(euler),
            cs,
        )?,
        arithmetic_genus,
        signature,
    })
}
