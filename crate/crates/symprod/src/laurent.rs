//! Sparse multivariate Laurent polynomials with exact rational coefficients.
//!
//! A [`LaurentPoly`] is a finitely supported map from monomials (integer
//! exponent vectors over a fixed [`VarSet`], negative exponents allowed) to
//! arbitrary-precision rationals. Zero coefficients are never stored, so
//! equality is structural and printing is deterministic: terms are ordered
//! lexicographically by variable order, then exponent.
//!
//! The one operation here that is more than ring plumbing is
//! [`LaurentPoly::adams`], the substitution `p(x_1, .., x_n) ->
//! p(x_1^r, .., x_n^r)` realizing the r-th Adams operation of the Laurent
//! pre-lambda ring.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar used throughout the crate.
pub type Rat = BigRational;

/// The rational `n`.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// The rational `num/den`.
pub fn ratio(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// An ordered set of distinct variable names, fixed at construction.
///
/// Cheap to clone; two sets are equal iff they list the same names in the
/// same order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VarSet(Arc<Vec<String>>);

impl VarSet {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Self> {
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        for (i, n) in names.iter().enumerate() {
            if n.is_empty() || names[..i].contains(n) {
                return Err(Error::BadVarSet);
            }
        }
        Ok(VarSet(Arc::new(names)))
    }

    /// The empty set: polynomials over it are plain rational constants.
    pub fn scalar() -> Self {
        VarSet(Arc::new(Vec::new()))
    }

    /// The canonical `(y, x, z)` set of Hodge-polynomial data.
    pub fn yxz() -> Self {
        Self::new(&["y", "x", "z"]).unwrap()
    }

    /// The canonical `(y, x)` set of E-polynomial data.
    pub fn yx() -> Self {
        Self::new(&["y", "x"]).unwrap()
    }

    /// The canonical `(y)` set of chi_y data.
    pub fn y() -> Self {
        Self::new(&["y"]).unwrap()
    }

    /// The canonical `(z)` set of Poincare-polynomial data.
    pub fn z() -> Self {
        Self::new(&["z"]).unwrap()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }

    /// Monomial with the given exponents, e.g. `vars.monomial(&[("y", 1), ("x", -1)])`.
    pub fn monomial(&self, exps: &[(&str, i64)]) -> Result<Monomial> {
        let mut m = Monomial::unit(self.len());
        for (name, e) in exps {
            let i = self
                .index_of(name)
                .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
            m.exps[i] += e;
        }
        Ok(m)
    }
}

impl fmt::Debug for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VarSet({})", self.0.join(","))
    }
}

impl fmt::Display for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.join(","))
    }
}

/// Exponent vector relative to a `VarSet`, one (possibly negative) integer
/// per variable. Ordering is lexicographic, which fixes the printing order
/// of terms.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Monomial {
    exps: Vec<i64>,
}

impl Monomial {
    /// The constant monomial `1` (all exponents zero).
    pub fn unit(nvars: usize) -> Self {
        Monomial {
            exps: vec![0; nvars],
        }
    }

    pub fn from_exps(exps: Vec<i64>) -> Self {
        Monomial { exps }
    }

    pub fn exps(&self) -> &[i64] {
        &self.exps
    }

    pub fn is_unit(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    fn pow_scale(&self, r: i64) -> Monomial {
        Monomial {
            exps: self.exps.iter().map(|e| e * r).collect(),
        }
    }

    fn neg_exps(&self) -> Monomial {
        Monomial {
            exps: self.exps.iter().map(|e| -e).collect(),
        }
    }
}

/// A sparse Laurent polynomial: finitely many `monomial -> rational`
/// entries over a shared variable set, with no stored zeros.
#[derive(Clone, PartialEq, Eq)]
pub struct LaurentPoly {
    vars: VarSet,
    terms: BTreeMap<Monomial, Rat>,
}

impl LaurentPoly {
    pub fn zero(vars: VarSet) -> Self {
        LaurentPoly {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(vars: VarSet) -> Self {
        Self::constant(vars, Rat::one())
    }

    pub fn constant(vars: VarSet, c: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::unit(vars.len()), c);
        }
        LaurentPoly { vars, terms }
    }

    /// The polynomial `c * m` for a single monomial.
    pub fn term(vars: VarSet, m: Monomial, c: Rat) -> Self {
        assert_eq!(m.exps.len(), vars.len(), "monomial arity mismatch");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        LaurentPoly { vars, terms }
    }

    /// The variable `name` as a polynomial.
    pub fn variable(vars: VarSet, name: &str) -> Result<Self> {
        let m = vars.monomial(&[(name, 1)])?;
        Ok(Self::term(vars, m, Rat::one()))
    }

    pub fn from_terms(vars: VarSet, entries: Vec<(Monomial, Rat)>) -> Self {
        let mut p = Self::zero(vars);
        for (m, c) in entries {
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: Rat) {
        assert_eq!(m.exps.len(), self.vars.len(), "monomial arity mismatch");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .map(|(m, c)| m.is_unit() && c.is_one())
                .unwrap_or(false)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in the canonical (lexicographic) order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    /// Stored coefficient of `m`, or 0.
    pub fn coefficient(&self, m: &Monomial) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    /// The constant term (coefficient of the unit monomial).
    pub fn constant_term(&self) -> Rat {
        self.coefficient(&Monomial::unit(self.vars.len()))
    }

    /// True if the polynomial is a rational constant, returning it.
    pub fn as_constant(&self) -> Option<Rat> {
        if self.terms.is_empty() {
            return Some(Rat::zero());
        }
        if self.terms.len() == 1 {
            let (m, c) = self.terms.iter().next().unwrap();
            if m.is_unit() {
                return Some(c.clone());
            }
        }
        None
    }

    /// True if every coefficient is an integer.
    pub fn has_integer_coefficients(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    fn check_vars(&self, other: &LaurentPoly) -> Result<()> {
        if self.vars != other.vars {
            return Err(Error::VarSetMismatch(
                self.vars.to_string(),
                other.vars.to_string(),
            ));
        }
        Ok(())
    }

    pub fn add(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.check_vars(other)?;
        Ok(self.add_raw(other))
    }

    pub fn sub(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.check_vars(other)?;
        Ok(self.add_raw(&other.neg()))
    }

    pub fn mul(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.check_vars(other)?;
        Ok(self.mul_raw(other))
    }

    pub(crate) fn add_raw(&self, other: &LaurentPoly) -> LaurentPoly {
        debug_assert_eq!(self.vars, other.vars);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    /// Coefficient convolution with exponent addition.
    pub(crate) fn mul_raw(&self, other: &LaurentPoly) -> LaurentPoly {
        debug_assert_eq!(self.vars, other.vars);
        let mut out = LaurentPoly::zero(self.vars.clone());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    pub fn neg(&self) -> LaurentPoly {
        LaurentPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero(self.vars.clone());
        }
        LaurentPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    /// Multiplicative inverse, defined exactly when the polynomial is a
    /// single term `c * m` with `c != 0`.
    pub fn inverse(&self) -> Option<LaurentPoly> {
        if self.terms.len() != 1 {
            return None;
        }
        let (m, c) = self.terms.iter().next().unwrap();
        Some(LaurentPoly::term(
            self.vars.clone(),
            m.neg_exps(),
            c.recip(),
        ))
    }

    /// The Adams substitution: every exponent multiplied by `r`,
    /// coefficients unchanged. `adams(p, 1) = p`.
    pub fn adams(&self, r: u32) -> Result<LaurentPoly> {
        if r == 0 {
            return Err(Error::AdamsIndex);
        }
        Ok(LaurentPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.pow_scale(r as i64), c.clone()))
                .collect(),
        })
    }

    /// Exact substitution of values for a subset of the variables; the
    /// result lives over the remaining variables in their original order.
    ///
    /// A variable occurring with a negative exponent may only receive a
    /// nonzero rational (or an invertible polynomial).
    pub fn specialize(&self, assignment: &[(&str, SpecValue)]) -> Result<LaurentPoly> {
        // Resolve names once, against the full variable set.
        let mut assigned: Vec<Option<&SpecValue>> = vec![None; self.vars.len()];
        for (name, v) in assignment {
            let i = self
                .vars
                .index_of(name)
                .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
            assigned[i] = Some(v);
        }
        let remaining: Vec<&String> = self
            .vars
            .names()
            .iter()
            .enumerate()
            .filter(|(i, _)| assigned[*i].is_none())
            .map(|(_, n)| n)
            .collect();
        let out_vars = VarSet::new(&remaining)?;

        let mut out = LaurentPoly::zero(out_vars.clone());
        for (m, c) in &self.terms {
            let mut residual = Monomial::unit(out_vars.len());
            let mut factor = LaurentPoly::constant(out_vars.clone(), c.clone());
            let mut out_idx = 0usize;
            for (i, &e) in m.exps.iter().enumerate() {
                match assigned[i] {
                    None => {
                        residual.exps[out_idx] = e;
                        out_idx += 1;
                    }
                    Some(value) => {
                        if e == 0 {
                            continue;
                        }
                        let base: LaurentPoly = match value {
                            SpecValue::Rat(r) => {
                                if r.is_zero() && e < 0 {
                                    return Err(Error::ZeroSubstitution {
                                        var: self.vars.names()[i].clone(),
                                        exp: e,
                                    });
                                }
                                LaurentPoly::constant(out_vars.clone(), r.clone())
                            }
                            SpecValue::Poly(p) => {
                                if p.vars != out_vars {
                                    return Err(Error::VarSetMismatch(
                                        p.vars.to_string(),
                                        out_vars.to_string(),
                                    ));
                                }
                                p.clone()
                            }
                        };
                        let powered = if e >= 0 {
                            base.pow_raw(e as u64)
                        } else {
                            match base.inverse() {
                                Some(inv) => inv.pow_raw((-e) as u64),
                                None => {
                                    return Err(Error::NonInvertibleSubstitution {
                                        var: self.vars.names()[i].clone(),
                                        exp: e,
                                    })
                                }
                            }
                        };
                        factor = factor.mul_raw(&powered);
                    }
                }
            }
            let shifted = LaurentPoly::term(out_vars.clone(), residual, Rat::one());
            out = out.add_raw(&factor.mul_raw(&shifted));
        }
        Ok(out)
    }

    /// Substitute a single rational for one variable.
    pub fn eval_var(&self, name: &str, value: Rat) -> Result<LaurentPoly> {
        self.specialize(&[(name, SpecValue::Rat(value))])
    }

    fn pow_raw(&self, e: u64) -> LaurentPoly {
        let mut out = LaurentPoly::one(self.vars.clone());
        for _ in 0..e {
            out = out.mul_raw(self);
        }
        out
    }

    /// Render a single monomial over this polynomial's variables.
    pub fn monomial_string(&self, m: &Monomial) -> String {
        monomial_string(&self.vars, m)
    }
}

/// Value assignable to a variable in [`LaurentPoly::specialize`].
#[derive(Clone, Debug)]
pub enum SpecValue {
    Rat(Rat),
    /// A polynomial over the *remaining* variables.
    Poly(LaurentPoly),
}

fn monomial_string(vars: &VarSet, m: &Monomial) -> String {
    let mut parts = Vec::new();
    for (name, &e) in vars.names().iter().zip(m.exps()) {
        match e {
            0 => {}
            1 => parts.push(name.clone()),
            _ => parts.push(format!("{name}^{e}")),
        }
    }
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mono = monomial_string(&self.vars, m);
            if mono == "1" {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{abs}*{mono}")?;
            }
        }
        Ok(())
    }
}

// Debug reuses Display so test failures stay readable.
impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
