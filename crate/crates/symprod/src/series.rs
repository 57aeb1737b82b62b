//! Truncated formal power series in `t` over Laurent-polynomial
//! coefficients.
//!
//! A [`TruncatedSeries`] of order `N` stores the coefficients of
//! `t^0 .. t^N` exactly; all arithmetic is exact modulo `t^(N+1)`. The
//! order and the coefficient variable set travel with the value and are
//! checked on every binary operation, so precision is never lost silently.
//!
//! Rational constants are series over the empty variable set
//! ([`VarSet::scalar`]); there is no separate integer or rational
//! coefficient type.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::laurent::{rat, LaurentPoly, Monomial, Rat, VarSet};

/// Power series in `t` truncated at `t^(order+1)`, with exactly
/// `order + 1` coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    vars: VarSet,
    coeffs: Vec<LaurentPoly>,
}

impl TruncatedSeries {
    pub fn zero(vars: VarSet, order: usize) -> Self {
        let coeffs = (0..=order).map(|_| LaurentPoly::zero(vars.clone())).collect();
        TruncatedSeries { vars, coeffs }
    }

    pub fn one(vars: VarSet, order: usize) -> Self {
        Self::constant(LaurentPoly::one(vars), order)
    }

    /// The series whose constant coefficient is `c0` and all others zero.
    pub fn constant(c0: LaurentPoly, order: usize) -> Self {
        let mut s = Self::zero(c0.vars().clone(), order);
        s.coeffs[0] = c0;
        s
    }

    /// The series `t` itself (requires `order >= 1`).
    pub fn t(vars: VarSet, order: usize) -> Self {
        let mut s = Self::zero(vars.clone(), order);
        if order >= 1 {
            s.coeffs[1] = LaurentPoly::one(vars);
        }
        s
    }

    /// Build from explicit coefficients `c0..cN`; they must share a
    /// variable set.
    pub fn from_coeffs(coeffs: Vec<LaurentPoly>) -> Result<Self> {
        assert!(!coeffs.is_empty(), "a series stores at least c0");
        let vars = coeffs[0].vars().clone();
        for c in &coeffs[1..] {
            if c.vars() != &vars {
                return Err(Error::VarSetMismatch(
                    vars.to_string(),
                    c.vars().to_string(),
                ));
            }
        }
        Ok(TruncatedSeries { vars, coeffs })
    }

    /// Series over the empty variable set from rational coefficients.
    pub fn from_rationals(values: Vec<Rat>) -> Self {
        let vars = VarSet::scalar();
        TruncatedSeries {
            vars: vars.clone(),
            coeffs: values
                .into_iter()
                .map(|v| LaurentPoly::constant(vars.clone(), v))
                .collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn coefficient(&self, k: usize) -> &LaurentPoly {
        &self.coeffs[k]
    }

    pub fn coefficients(&self) -> &[LaurentPoly] {
        &self.coeffs
    }

    pub fn set_coefficient(&mut self, k: usize, c: LaurentPoly) {
        assert_eq!(c.vars(), &self.vars, "coefficient ring mismatch");
        self.coeffs[k] = c;
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    /// True if every coefficient of every power of `t` is an integer.
    pub fn has_integer_coefficients(&self) -> bool {
        self.coeffs.iter().all(|c| c.has_integer_coefficients())
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch(self.order(), other.order()));
        }
        if self.vars != other.vars {
            return Err(Error::VarSetMismatch(
                self.vars.to_string(),
                other.vars.to_string(),
            ));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(TruncatedSeries {
            vars: self.vars.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.add_raw(b))
                .collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(TruncatedSeries {
            vars: self.vars.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.add_raw(&b.neg()))
                .collect(),
        })
    }

    /// Product truncated at `t^(order+1)`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let n = self.order();
        let mut out = Self::zero(self.vars.clone(), n);
        for i in 0..=n {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=(n - i) {
                if other.coeffs[j].is_zero() {
                    continue;
                }
                let prod = self.coeffs[i].mul_raw(&other.coeffs[j]);
                out.coeffs[i + j] = out.coeffs[i + j].add_raw(&prod);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        TruncatedSeries {
            vars: self.vars.clone(),
            coeffs: self.coeffs.iter().map(|p| p.scale(c)).collect(),
        }
    }

    /// Two-sided inverse modulo `t^(order+1)`; the constant term must be
    /// invertible (for Laurent coefficients: a single nonzero term).
    pub fn inverse(&self) -> Result<Self> {
        let c0_inv = self.coeffs[0]
            .inverse()
            .ok_or_else(|| Error::NonInvertibleConstant(self.coeffs[0].to_string()))?;
        let n = self.order();
        let mut inv = Self::zero(self.vars.clone(), n);
        inv.coeffs[0] = c0_inv.clone();
        for k in 1..=n {
            let mut acc = LaurentPoly::zero(self.vars.clone());
            for i in 1..=k {
                if self.coeffs[i].is_zero() {
                    continue;
                }
                acc = acc.add_raw(&self.coeffs[i].mul_raw(&inv.coeffs[k - i]));
            }
            inv.coeffs[k] = c0_inv.mul_raw(&acc).neg();
        }
        Ok(inv)
    }

    /// `exp` of a series with zero constant term, via the recurrence
    /// `n*f_n = sum_k k*a_k*f_(n-k)`.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::ExpConstantTerm(self.coeffs[0].to_string()));
        }
        let n = self.order();
        let mut out = Self::zero(self.vars.clone(), n);
        out.coeffs[0] = LaurentPoly::one(self.vars.clone());
        for m in 1..=n {
            let mut acc = LaurentPoly::zero(self.vars.clone());
            for k in 1..=m {
                if self.coeffs[k].is_zero() {
                    continue;
                }
                let term = self.coeffs[k].scale(&rat(k as i64)).mul_raw(&out.coeffs[m - k]);
                acc = acc.add_raw(&term);
            }
            out.coeffs[m] = acc.scale(&Rat::new(BigInt::one(), BigInt::from(m)));
        }
        Ok(out)
    }

    /// `log` of a series with constant term 1, via
    /// `n*g_n = n*f_n - sum_(k<n) k*g_k*f_(n-k)`.
    pub fn log(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::LogConstantTerm(self.coeffs[0].to_string()));
        }
        let n = self.order();
        let mut out = Self::zero(self.vars.clone(), n);
        for m in 1..=n {
            let mut acc = self.coeffs[m].scale(&rat(m as i64));
            for k in 1..m {
                if out.coeffs[k].is_zero() || self.coeffs[m - k].is_zero() {
                    continue;
                }
                let term = out.coeffs[k].scale(&rat(k as i64)).mul_raw(&self.coeffs[m - k]);
                acc = acc.add_raw(&term.neg());
            }
            out.coeffs[m] = acc.scale(&Rat::new(BigInt::one(), BigInt::from(m)));
        }
        Ok(out)
    }

    /// Formal derivative in `t`, one order lower (shift and scale).
    pub fn derivative(&self) -> Self {
        if self.order() == 0 {
            return Self::zero(self.vars.clone(), 0);
        }
        TruncatedSeries {
            vars: self.vars.clone(),
            coeffs: self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c.scale(&rat(i as i64 + 1)))
                .collect(),
        }
    }

    /// Substitute `t -> -t` (negate odd coefficients).
    pub fn substitute_neg_t(&self) -> Self {
        TruncatedSeries {
            vars: self.vars.clone(),
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { c.neg() } else { c.clone() })
                .collect(),
        }
    }

    /// Truncate (or zero-extend) to a new order.
    pub fn with_order(&self, order: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(order + 1, LaurentPoly::zero(self.vars.clone()));
        coeffs.truncate(order + 1);
        TruncatedSeries {
            vars: self.vars.clone(),
            coeffs,
        }
    }

    /// The binomial factor `(1 - m*t)^(-a)` to the given order, where `m`
    /// must be a single monomial with coefficient 1. Negative `a` yields a
    /// polynomial, e.g. `a = -1` gives `1 - m*t`.
    pub fn geometric_factor(m: &LaurentPoly, a: i64, order: usize) -> Result<Self> {
        Self::geometric_factor_big(m, &BigInt::from(a), order)
    }

    pub(crate) fn geometric_factor_big(m: &LaurentPoly, a: &BigInt, order: usize) -> Result<Self> {
        let unit = m
            .terms()
            .next()
            .filter(|(_, c)| m.num_terms() == 1 && c.is_one())
            .map(|(mono, _)| mono.clone())
            .ok_or_else(|| Error::NotUnitMonomial(m.to_string()))?;
        let vars = m.vars().clone();
        let mut out = Self::zero(vars.clone(), order);
        // c_n = c_(n-1) * (a + n - 1) / n, starting from c_0 = 1; the
        // monomial power rides along.
        let mut coeff = Rat::one();
        let mut mono = Monomial::unit(vars.len());
        out.coeffs[0] = LaurentPoly::one(vars.clone());
        for n in 1..=order {
            coeff *= Rat::new(a + BigInt::from(n as i64 - 1), BigInt::from(n));
            if coeff.is_zero() {
                break;
            }
            mono = Monomial::from_exps(
                mono.exps()
                    .iter()
                    .zip(unit.exps())
                    .map(|(x, y)| x + y)
                    .collect(),
            );
            out.coeffs[n] = LaurentPoly::term(vars.clone(), mono.clone(), coeff.clone());
        }
        Ok(out)
    }

    /// Evaluate every coefficient at a rational value of one variable.
    pub fn map_coefficients<F>(&self, f: F) -> Result<Self>
    where
        F: Fn(&LaurentPoly) -> Result<LaurentPoly>,
    {
        let coeffs: Result<Vec<_>> = self.coeffs.iter().map(f).collect();
        Self::from_coeffs(coeffs?)
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            // Single-term negative coefficients move their sign into the
            // joiner; multi-term coefficients get parentheses.
            let single = c.num_terms() == 1;
            let negative =
                single && c.terms().next().map(|(_, r)| r.is_negative()).unwrap_or(false);
            let body_poly = if negative { c.neg() } else { c.clone() };
            let body = if single {
                body_poly.to_string()
            } else {
                format!("({body_poly})")
            };
            if wrote {
                f.write_str(if negative { " - " } else { " + " })?;
            } else if negative {
                f.write_str("-")?;
            }
            match k {
                0 => write!(f, "{body}")?,
                1 if body_poly.is_one() => write!(f, "t")?,
                1 => write!(f, "{body}*t")?,
                _ if body_poly.is_one() => write!(f, "t^{k}")?,
                _ => write!(f, "{body}*t^{k}")?,
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        write!(f, " + O(t^{})", self.order() + 1)
    }
}

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
