//! Tri-graded vector spaces by dimension bookkeeping, with Koszul-signed
//! tensor powers.
//!
//! A [`GradedDims`] records `dim` of the `(p,q)`-bigraded piece in
//! cohomological degree `k`. Tensor factors of odd `k`-degree
//! anticommute: swapping degrees `i` and `j` costs `(-1)^(i*j)`. That sign
//! rule is what makes the dimension-counting polynomial (with its
//! `(-z)^k` convention) compatible with the product-form sigma series, and
//! the brute-force symmetric/alternating powers here serve as the
//! independent oracle for the series formulas.
//!
//! Brute force means brute force: the projector rank is accumulated over
//! every permutation in `S_n`, guarded by `dim^n <= 10^6`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::laurent::{LaurentPoly, Monomial, Rat, VarSet};
use crate::symgrp::{class_size, factorial, mn_character, partitions, Functional, Partition};

const BRUTE_GUARD: u128 = 1_000_000;

/// Multidegree `(p, q, k)`.
pub type Degree = (i64, i64, i64);

/// Finitely supported dimensions `(p, q, k) -> dim`, no stored zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GradedDims(BTreeMap<Degree, u64>);

/// As [`GradedDims`] but with integer (virtual) values.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VirtualGradedDims(BTreeMap<Degree, i64>);

#[derive(Serialize, Deserialize)]
struct DimEntry {
    p: i64,
    q: i64,
    k: i64,
    dim: u64,
}

impl GradedDims {
    pub fn new() -> Self {
        GradedDims(BTreeMap::new())
    }

    pub fn from_entries(entries: &[(i64, i64, i64, u64)]) -> Self {
        let mut g = Self::new();
        for &(p, q, k, dim) in entries {
            g.add_dim((p, q, k), dim);
        }
        g
    }

    pub fn add_dim(&mut self, d: Degree, dim: u64) {
        if dim == 0 {
            return;
        }
        *self.0.entry(d).or_insert(0) += dim;
    }

    pub fn dim_at(&self, d: &Degree) -> u64 {
        self.0.get(d).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Degree, &u64)> {
        self.0.iter()
    }

    pub fn total_dim(&self) -> u64 {
        self.0.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Pointwise sum of dimensions (direct sum of spaces).
    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&d, &v) in &other.0 {
            out.add_dim(d, v);
        }
        out
    }

    /// Multidegree convolution (tensor product of spaces).
    pub fn tensor(&self, other: &Self) -> Self {
        let mut out = Self::new();
        for (&(p1, q1, k1), &v1) in &self.0 {
            for (&(p2, q2, k2), &v2) in &other.0 {
                out.add_dim((p1 + p2, q1 + q2, k1 + k2), v1 * v2);
            }
        }
        out
    }

    pub fn tensor_power(&self, n: usize) -> Self {
        let mut out = Self::from_entries(&[(0, 0, 0, 1)]);
        for _ in 0..n {
            out = out.tensor(self);
        }
        out
    }

    /// The signed dimension-counting polynomial
    /// `sum dim * y^p x^q (-z)^k` over `(y, x, z)`.
    pub fn hodge_poly(&self) -> LaurentPoly {
        signed_poly(self.0.iter().map(|(&d, &v)| (d, v as i64)))
    }

    /// JSON form: a list of `{p, q, k, dim}` records.
    pub fn to_json(&self) -> String {
        let entries: Vec<DimEntry> = self
            .0
            .iter()
            .map(|(&(p, q, k), &dim)| DimEntry { p, q, k, dim })
            .collect();
        serde_json::to_string_pretty(&entries).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let entries: Vec<DimEntry> = serde_json::from_str(text).map_err(|e| Error::Parse {
            pos: 0,
            msg: e.to_string(),
        })?;
        let mut g = Self::new();
        for e in entries {
            g.add_dim((e.p, e.q, e.k), e.dim);
        }
        Ok(g)
    }

    fn basis(&self) -> Vec<Degree> {
        let mut basis = Vec::new();
        for (&d, &v) in &self.0 {
            for _ in 0..v {
                basis.push(d);
            }
        }
        basis
    }

    fn guard(&self, n: usize) -> Result<()> {
        let size = (self.total_dim() as u128)
            .checked_pow(n as u32)
            .unwrap_or(u128::MAX);
        if size > BRUTE_GUARD {
            return Err(Error::BruteForceGuard { size });
        }
        Ok(())
    }

    /// Graded rank of the symmetric projector `(1/n!) sum psi_sigma` on
    /// the n-th Koszul-signed tensor power.
    pub fn sym_power_brute(&self, n: usize) -> Result<GradedDims> {
        self.projector_rank(n, false)
    }

    /// Graded rank of the alternating projector
    /// `(1/n!) sum sign(sigma) psi_sigma`.
    pub fn alt_power_brute(&self, n: usize) -> Result<GradedDims> {
        self.projector_rank(n, true)
    }

    fn projector_rank(&self, n: usize, alternating: bool) -> Result<GradedDims> {
        self.guard(n)?;
        let basis = self.basis();
        let mut totals: BTreeMap<Degree, i128> = BTreeMap::new();
        for_each_permutation(n, |sigma| {
            let sign = if alternating {
                permutation_sign(sigma)
            } else {
                1
            };
            accumulate_fixed_traces(&basis, sigma, sign, &mut totals);
        });
        let nf = factorial(n as u64) as i128;
        let mut out = GradedDims::new();
        for (d, total) in totals {
            if total == 0 {
                continue;
            }
            if total % nf != 0 || total < 0 {
                return Err(Error::Consistency(format!(
                    "projector trace {total} at {d:?} is not a rank multiple of {nf}"
                )));
            }
            out.add_dim(d, (total / nf) as u64);
        }
        Ok(out)
    }

    /// Per-multidegree trace of (any representative of) a cycle-type `mu`
    /// permutation acting with Koszul signs on the |mu|-th tensor power.
    /// These are plain integer traces; no `(-z)^k` sign is applied.
    pub fn cycle_trace_by_degree(&self, mu: &Partition) -> Result<BTreeMap<Degree, i64>> {
        let n = mu.size() as usize;
        self.guard(n)?;
        let basis = self.basis();
        let sigma = representative(mu);
        let mut totals: BTreeMap<Degree, i128> = BTreeMap::new();
        accumulate_fixed_traces(&basis, &sigma, 1, &mut totals);
        Ok(totals
            .into_iter()
            .filter(|(_, v)| *v != 0)
            .map(|(d, v)| (d, v as i64))
            .collect())
    }

    /// The signed graded trace of a cycle-type `mu` permutation, reported
    /// via the `(-z)^k` convention. Computed by brute force and checked
    /// against the closed form `prod_i Adams_(mu_i)(hodge_poly)`.
    pub fn cycle_supertrace(&self, mu: &Partition) -> Result<LaurentPoly> {
        let traces = self.cycle_trace_by_degree(mu)?;
        let brute = signed_poly(traces.into_iter());
        let mut closed = LaurentPoly::one(VarSet::yxz());
        let h = self.hodge_poly();
        for &part in mu.parts() {
            closed = closed.mul_raw(&h.adams(part as u32)?);
        }
        if brute != closed {
            return Err(Error::Consistency(format!(
                "cycle supertrace mismatch for {mu}: brute {brute} vs adams product {closed}"
            )));
        }
        Ok(brute)
    }

    /// The power operation attached to a functional on the representation
    /// ring: per multidegree, `sum_mu w_mu * trace(mu)`. For the Sym/Alt
    /// functionals this is the brute-force symmetric/alternating power;
    /// for the Adams functional its signed polynomial is the exponent
    /// substitution.
    pub fn phi_power(&self, phi: &Functional) -> Result<VirtualGradedDims> {
        let n = phi.n();
        let mut acc: BTreeMap<Degree, Rat> = BTreeMap::new();
        for mu in partitions(n) {
            let w = phi.weight(&mu);
            if w == Rat::from_integer(0.into()) {
                continue;
            }
            for (d, t) in self.cycle_trace_by_degree(&mu)? {
                let entry = acc.entry(d).or_insert_with(|| Rat::from_integer(0.into()));
                *entry += &w * Rat::from_integer(t.into());
            }
        }
        let mut out = VirtualGradedDims::new();
        for (d, v) in acc {
            if !v.is_integer() {
                return Err(Error::Consistency(format!(
                    "functional power has non-integer value {v} at {d:?}"
                )));
            }
            let v: i64 = i64::try_from(v.to_integer()).map_err(|_| {
                Error::Consistency("functional power value out of range".to_string())
            })?;
            out.set(d, v);
        }
        Ok(out)
    }

    /// Graded multiplicity of the irreducible indexed by `lambda` in the
    /// n-th tensor power: `(1/n!) sum_mu |C_mu| chi_lambda(mu) trace(mu)`.
    /// Values must come out as nonnegative integers; anything else is a
    /// character or trace bug.
    pub fn schur_multiplicity(&self, lambda: &Partition) -> Result<GradedDims> {
        let n = lambda.size();
        let mut acc: BTreeMap<Degree, i128> = BTreeMap::new();
        for mu in partitions(n) {
            let weight = class_size(&mu) as i128 * mn_character(lambda, &mu)? as i128;
            if weight == 0 {
                continue;
            }
            for (d, t) in self.cycle_trace_by_degree(&mu)? {
                *acc.entry(d).or_insert(0) += weight * t as i128;
            }
        }
        let nf = factorial(n) as i128;
        let mut out = GradedDims::new();
        for (d, total) in acc {
            if total == 0 {
                continue;
            }
            if total % nf != 0 || total < 0 {
                return Err(Error::Consistency(format!(
                    "isotypic multiplicity {total}/{nf} at {d:?} is not a nonnegative integer"
                )));
            }
            out.add_dim(d, (total / nf) as u64);
        }
        Ok(out)
    }
}

impl VirtualGradedDims {
    pub fn new() -> Self {
        VirtualGradedDims(BTreeMap::new())
    }

    pub fn from_entries(entries: &[(i64, i64, i64, i64)]) -> Self {
        let mut g = Self::new();
        for &(p, q, k, v) in entries {
            g.add((p, q, k), v);
        }
        g
    }

    pub fn set(&mut self, d: Degree, v: i64) {
        if v == 0 {
            self.0.remove(&d);
        } else {
            self.0.insert(d, v);
        }
    }

    pub fn add(&mut self, d: Degree, v: i64) {
        let cur = self.0.get(&d).copied().unwrap_or(0) + v;
        self.set(d, cur);
    }

    pub fn value_at(&self, d: &Degree) -> i64 {
        self.0.get(d).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Degree, &i64)> {
        self.0.iter()
    }

    /// The signed dimension-counting polynomial; on virtual classes this
    /// map is an isomorphism onto integer Laurent polynomials.
    pub fn hodge_poly(&self) -> LaurentPoly {
        signed_poly(self.0.iter().map(|(&d, &v)| (d, v)))
    }

    /// Inverse of [`Self::hodge_poly`], reading off `(-1)^k` signs.
    pub fn from_hodge_poly(poly: &LaurentPoly) -> Result<Self> {
        if poly.vars() != &VarSet::yxz() {
            return Err(Error::VarSetMismatch(
                poly.vars().to_string(),
                VarSet::yxz().to_string(),
            ));
        }
        let mut out = Self::new();
        for (m, c) in poly.terms() {
            if !c.is_integer() {
                return Err(Error::NonIntegerCoefficient {
                    monomial: poly.monomial_string(m),
                    value: c.to_string(),
                });
            }
            let [p, q, k] = [m.exps()[0], m.exps()[1], m.exps()[2]];
            let signed: i64 = i64::try_from(c.to_integer()).map_err(|_| {
                Error::NonIntegerCoefficient {
                    monomial: poly.monomial_string(m),
                    value: c.to_string(),
                }
            })?;
            let v = if k % 2 == 0 { signed } else { -signed };
            out.set((p, q, k), v);
        }
        Ok(out)
    }

    /// True if every value is nonnegative, yielding honest dimensions.
    pub fn to_dims(&self) -> Option<GradedDims> {
        let mut out = GradedDims::new();
        for (&d, &v) in &self.0 {
            if v < 0 {
                return None;
            }
            out.add_dim(d, v as u64);
        }
        Some(out)
    }
}

impl From<&GradedDims> for VirtualGradedDims {
    fn from(g: &GradedDims) -> Self {
        let mut out = VirtualGradedDims::new();
        for (&d, &v) in &g.0 {
            out.set(d, v as i64);
        }
        out
    }
}

fn signed_poly(entries: impl Iterator<Item = (Degree, i64)>) -> LaurentPoly {
    let vars = VarSet::yxz();
    LaurentPoly::from_terms(
        vars,
        entries
            .map(|((p, q, k), v)| {
                let sign = if k % 2 == 0 { 1 } else { -1 };
                (
                    Monomial::from_exps(vec![p, q, k]),
                    Rat::from_integer((v * sign).into()),
                )
            })
            .collect(),
    )
}

/// Heap's algorithm, calling `f` on every permutation of `0..n` in
/// one-line notation.
fn for_each_permutation(n: usize, mut f: impl FnMut(&[usize])) {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut stack = vec![0usize; n];
    f(&perm);
    let mut i = 1;
    while i < n {
        if stack[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(stack[i], i);
            }
            f(&perm);
            stack[i] += 1;
            i = 1;
        } else {
            stack[i] = 0;
            i += 1;
        }
    }
}

fn permutation_sign(perm: &[usize]) -> i64 {
    let mut sign = 1i64;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                sign = -sign;
            }
        }
    }
    sign
}

/// Cycles of a permutation in one-line notation.
fn cycles_of(perm: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; perm.len()];
    let mut cycles = Vec::new();
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            cycle.push(i);
            i = perm[i];
        }
        cycles.push(cycle);
    }
    cycles
}

/// A permutation with cycle type `mu`, as consecutive blocks.
fn representative(mu: &Partition) -> Vec<usize> {
    let mut perm = Vec::with_capacity(mu.size() as usize);
    let mut offset = 0usize;
    for &part in mu.parts() {
        let len = part as usize;
        for i in 0..len {
            perm.push(offset + (i + 1) % len);
        }
        offset += len;
    }
    perm
}

/// The Koszul sign of `sigma` acting on a tuple of factors with
/// cohomological degrees `k`: `(-1)` for every inversion of two
/// odd-degree factors.
fn koszul_sign(sigma: &[usize], k: &[i64]) -> i64 {
    let mut odd_inversions = 0usize;
    for i in 0..sigma.len() {
        if k[i] % 2 == 0 {
            continue;
        }
        for j in i + 1..sigma.len() {
            if sigma[i] > sigma[j] && k[j] % 2 != 0 {
                odd_inversions += 1;
            }
        }
    }
    if odd_inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Add the signed trace of `psi_sigma` (times `extra_sign`) to `totals`,
/// one entry per multidegree. Only basis tensors fixed by `sigma`
/// contribute: their index must be constant on each cycle.
fn accumulate_fixed_traces(
    basis: &[Degree],
    sigma: &[usize],
    extra_sign: i64,
    totals: &mut BTreeMap<Degree, i128>,
) {
    let n = sigma.len();
    let cycles = cycles_of(sigma);
    let d = basis.len();
    if n == 0 {
        *totals.entry((0, 0, 0)).or_insert(0) += extra_sign as i128;
        return;
    }
    if d == 0 {
        return;
    }
    // Odometer over one basis choice per cycle.
    let mut choice = vec![0usize; cycles.len()];
    let mut tuple = vec![0usize; n];
    loop {
        for (c, cycle) in cycles.iter().enumerate() {
            for &pos in cycle {
                tuple[pos] = choice[c];
            }
        }
        let mut deg = (0i64, 0i64, 0i64);
        let mut k = Vec::with_capacity(n);
        for &b in &tuple {
            let (p, q, kk) = basis[b];
            deg.0 += p;
            deg.1 += q;
            deg.2 += kk;
            k.push(kk);
        }
        let s = koszul_sign(sigma, &k) * extra_sign;
        *totals.entry(deg).or_insert(0) += s as i128;

        let mut idx = 0;
        loop {
            if idx == choice.len() {
                return;
            }
            choice[idx] += 1;
            if choice[idx] < d {
                break;
            }
            choice[idx] = 0;
            idx += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;
    use crate::prelambda::{lambda_series, sigma_series, PreLambdaElement};
    use crate::symgrp::{functional, FunctionalKind};

    fn p(s: &str) -> LaurentPoly {
        parse_poly(s, &VarSet::yxz()).unwrap()
    }

    fn p1_dims() -> GradedDims {
        GradedDims::from_entries(&[(0, 0, 0, 1), (1, 1, 2, 1)])
    }

    fn odd_line() -> GradedDims {
        GradedDims::from_entries(&[(0, 1, 1, 1)])
    }

    #[test]
    fn hodge_poly_signs() {
        assert_eq!(p1_dims().hodge_poly(), p("1 + y*x*z^2"));
        assert_eq!(odd_line().hodge_poly(), p("-x*z"));
        assert_eq!(GradedDims::new().hodge_poly(), p("0"));
    }

    #[test]
    fn sym_of_lines() {
        let even = GradedDims::from_entries(&[(1, 1, 2, 1)]);
        assert_eq!(
            even.sym_power_brute(3).unwrap(),
            GradedDims::from_entries(&[(3, 3, 6, 1)])
        );
        assert!(odd_line().sym_power_brute(2).unwrap().is_empty());
        assert_eq!(
            odd_line().alt_power_brute(2).unwrap(),
            GradedDims::from_entries(&[(0, 2, 2, 1)])
        );
    }

    #[test]
    fn sym_square_of_p1() {
        assert_eq!(
            p1_dims().sym_power_brute(2).unwrap(),
            GradedDims::from_entries(&[(0, 0, 0, 1), (1, 1, 2, 1), (2, 2, 4, 1)])
        );
    }

    #[test]
    fn zeroth_power_is_the_unit() {
        for v in [GradedDims::new(), p1_dims()] {
            assert_eq!(
                v.sym_power_brute(0).unwrap(),
                GradedDims::from_entries(&[(0, 0, 0, 1)])
            );
            assert_eq!(
                v.alt_power_brute(0).unwrap(),
                GradedDims::from_entries(&[(0, 0, 0, 1)])
            );
        }
    }

    #[test]
    fn guard_rejects_large_inputs() {
        let big = GradedDims::from_entries(&[(0, 0, 0, 40)]);
        assert!(matches!(
            big.sym_power_brute(4),
            Err(Error::BruteForceGuard { .. })
        ));
    }

    #[test]
    fn supertrace_identity_class_is_tensor_power() {
        let v = p1_dims();
        let trace = v.cycle_supertrace(&Partition::new(vec![1, 1])).unwrap();
        assert_eq!(trace, p("(1 + y*x*z^2)*(1 + y*x*z^2)"));
    }

    #[test]
    fn supertrace_mixed_class() {
        let v = p1_dims();
        let trace = v.cycle_supertrace(&Partition::new(vec![2, 1])).unwrap();
        assert_eq!(trace, p("(1 + y^2*x^2*z^4)*(1 + y*x*z^2)"));
    }

    #[test]
    fn supertrace_odd_line_transposition() {
        let trace = odd_line().cycle_supertrace(&Partition::new(vec![2])).unwrap();
        assert_eq!(trace, p("-x^2*z^2"));
    }

    #[test]
    fn phi_power_matches_named_operations() {
        let v = p1_dims();
        let sym = v.phi_power(&functional(FunctionalKind::Sym, 2)).unwrap();
        assert_eq!(
            sym.to_dims().unwrap(),
            v.sym_power_brute(2).unwrap()
        );
        let alt = odd_line()
            .phi_power(&functional(FunctionalKind::Alt, 2))
            .unwrap();
        assert_eq!(alt.to_dims().unwrap(), odd_line().alt_power_brute(2).unwrap());
        let adams = v.phi_power(&functional(FunctionalKind::Adams, 3)).unwrap();
        assert_eq!(adams.hodge_poly(), p("1 + y^3*x^3*z^6"));
    }

    #[test]
    fn schur_multiplicities() {
        // Two even dimensions in degree zero: Sym^2 has dim 3, Alt^2 dim 1.
        let v = GradedDims::from_entries(&[(0, 0, 0, 2)]);
        assert_eq!(
            v.schur_multiplicity(&Partition::new(vec![2])).unwrap(),
            GradedDims::from_entries(&[(0, 0, 0, 3)])
        );
        assert_eq!(
            v.schur_multiplicity(&Partition::new(vec![1, 1])).unwrap(),
            GradedDims::from_entries(&[(0, 0, 0, 1)])
        );
        // Koszul parity swaps the two isotypes on an odd line.
        assert!(odd_line()
            .schur_multiplicity(&Partition::new(vec![2]))
            .unwrap()
            .is_empty());
        assert_eq!(
            odd_line().schur_multiplicity(&Partition::new(vec![1, 1])).unwrap(),
            GradedDims::from_entries(&[(0, 2, 2, 1)])
        );
    }

    #[test]
    fn isotypic_completeness_for_p1() {
        let v = p1_dims();
        let n = 2u64;
        let mut recovered = GradedDims::new();
        for lambda in partitions(n) {
            let dim_lambda = mn_character(&lambda, &Partition::new(vec![1; n as usize])).unwrap();
            let m = v.schur_multiplicity(&lambda).unwrap();
            for (&d, &v) in m.entries() {
                recovered.add_dim(d, v * dim_lambda as u64);
            }
        }
        assert_eq!(recovered, v.tensor_power(n as usize));
    }

    #[test]
    fn oracle_matches_series_on_small_spaces() {
        let spaces = [
            p1_dims(),
            odd_line(),
            GradedDims::from_entries(&[(0, 0, 0, 1), (0, 1, 1, 1), (1, 1, 2, 1)]),
            GradedDims::from_entries(&[(-1, 0, -1, 1), (1, 0, 1, 1)]),
        ];
        for v in &spaces {
            let el = PreLambdaElement::Poly(v.hodge_poly());
            let sig = sigma_series(&el, 4).unwrap();
            let lam = lambda_series(&el, 4).unwrap();
            for n in 0..=4usize {
                assert_eq!(
                    &v.sym_power_brute(n).unwrap().hodge_poly(),
                    sig.coefficient(n),
                    "sym mismatch at n={n}"
                );
                assert_eq!(
                    &v.alt_power_brute(n).unwrap().hodge_poly(),
                    lam.coefficient(n),
                    "alt mismatch at n={n}"
                );
            }
        }
    }

    #[test]
    fn tensor_functor_on_polynomials() {
        let v = p1_dims();
        let w = GradedDims::from_entries(&[(0, 1, 1, 2), (1, 0, 1, 1)]);
        assert_eq!(
            v.tensor(&w).hodge_poly(),
            v.hodge_poly().mul(&w.hodge_poly()).unwrap()
        );
        assert_eq!(
            v.direct_sum(&w).hodge_poly(),
            v.hodge_poly().add(&w.hodge_poly()).unwrap()
        );
    }

    #[test]
    fn json_roundtrip() {
        let v = GradedDims::from_entries(&[(0, 1, 1, 2), (-1, 0, -2, 1)]);
        let back = GradedDims::from_json(&v.to_json()).unwrap();
        assert_eq!(back, v);
    }

    #[test]
    fn virtual_poly_roundtrip() {
        let v = VirtualGradedDims::from_entries(&[(0, 1, 1, -2), (1, 1, 2, 3)]);
        let back = VirtualGradedDims::from_hodge_poly(&v.hodge_poly()).unwrap();
        assert_eq!(back, v);
    }
}
