//! Integer partitions, conjugacy classes of the symmetric group, its
//! irreducible characters via the Murnaghan-Nakayama rule, and the
//! distinguished functionals on the representation ring.
//!
//! Everything is exact. Characters are computed by recursive border-strip
//! removal in the beta-number picture, memoized per top-level call.

use std::collections::BTreeMap;
use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::laurent::Rat;

/// A partition: weakly decreasing positive parts. `Partition::new`
/// sorts; parts must be positive.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Partition(Vec<u64>);

impl Partition {
    pub fn new(mut parts: Vec<u64>) -> Self {
        assert!(parts.iter().all(|&p| p > 0), "parts must be positive");
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u64] {
        &self.0
    }

    /// The integer being partitioned.
    pub fn size(&self) -> u64 {
        self.0.iter().sum()
    }

    pub fn num_parts(&self) -> usize {
        self.0.len()
    }

    /// The sign of any permutation with this cycle type:
    /// `(-1)^(n - #parts)`.
    pub fn permutation_sign(&self) -> i64 {
        if (self.size() - self.num_parts() as u64) % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Part multiplicities as `part -> count`.
    pub fn multiplicities(&self) -> BTreeMap<u64, u64> {
        let mut m = BTreeMap::new();
        for &p in &self.0 {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }
}

impl std::fmt::Display for Partition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// All partitions of `n` in reverse-lexicographic order:
/// `(n)` first, `(1,..,1)` last.
pub fn partitions(n: u64) -> Vec<Partition> {
    fn go(remaining: u64, max_part: u64, prefix: &mut Vec<u64>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        let top = max_part.min(remaining);
        for first in (1..=top).rev() {
            prefix.push(first);
            go(remaining - first, first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n.max(1), &mut Vec::new(), &mut out);
    out
}

/// The centralizer order `z_mu = prod i^(m_i) * m_i!`.
pub fn centralizer_order(mu: &Partition) -> u64 {
    let mut z: u128 = 1;
    for (part, count) in mu.multiplicities() {
        for _ in 0..count {
            z *= part as u128;
        }
        for j in 1..=count {
            z *= j as u128;
        }
    }
    u64::try_from(z).expect("centralizer order overflow")
}

pub fn factorial(n: u64) -> u64 {
    (1..=n as u128).product::<u128>().try_into().expect("factorial overflow")
}

/// The number of permutations with cycle type `mu`: `n! / z_mu`.
pub fn class_size(mu: &Partition) -> u64 {
    factorial(mu.size()) / centralizer_order(mu)
}

/// Irreducible character value `chi_lambda(mu)` by the
/// Murnaghan-Nakayama rule. Both partitions must have the same size.
pub fn mn_character(lambda: &Partition, mu: &Partition) -> Result<i64> {
    if lambda.size() != mu.size() {
        return Err(Error::PartitionSize {
            expected: lambda.size(),
            got: mu.size(),
        });
    }
    let mut memo = HashMap::new();
    Ok(mn_rec(lambda.parts().to_vec(), mu.parts(), 0, &mut memo))
}

// Border strips of size r in the beta-number picture: replace a beta
// number b by b - r (if absent and nonnegative); the strip height is the
// number of beta numbers jumped over.
fn mn_rec(
    lambda: Vec<u64>,
    mu: &[u64],
    mu_idx: usize,
    memo: &mut HashMap<(Vec<u64>, usize), i64>,
) -> i64 {
    if lambda.is_empty() {
        return 1;
    }
    if let Some(&v) = memo.get(&(lambda.clone(), mu_idx)) {
        return v;
    }
    let r = mu[mu_idx];
    let len = lambda.len() as u64;
    let beta: Vec<u64> = lambda
        .iter()
        .enumerate()
        .map(|(i, &p)| p + (len - 1 - i as u64))
        .collect();
    let mut total = 0i64;
    for (i, &b) in beta.iter().enumerate() {
        if b < r {
            continue;
        }
        let target = b - r;
        if beta.contains(&target) {
            continue;
        }
        let jumped = beta.iter().filter(|&&c| target < c && c < b).count();
        let sign = if jumped % 2 == 0 { 1 } else { -1 };
        let mut new_beta = beta.clone();
        new_beta[i] = target;
        new_beta.sort_unstable_by(|a, b| b.cmp(a));
        let m = new_beta.len() as u64;
        let mut new_lambda: Vec<u64> = new_beta
            .iter()
            .enumerate()
            .map(|(j, &c)| c - (m - 1 - j as u64))
            .collect();
        while new_lambda.last() == Some(&0) {
            new_lambda.pop();
        }
        total += sign * mn_rec(new_lambda, mu, mu_idx + 1, memo);
    }
    memo.insert((lambda, mu_idx), total);
    total
}

/// The full character table of `S_n`: rows indexed by `partitions(n)`
/// (irreducibles), columns likewise (classes).
pub fn character_table(n: u64) -> (Vec<Partition>, Vec<Vec<i64>>) {
    let parts = partitions(n);
    let table = parts
        .iter()
        .map(|lambda| {
            parts
                .iter()
                .map(|mu| mn_character(lambda, mu).expect("same size"))
                .collect()
        })
        .collect();
    (parts, table)
}

/// An integer class function on `S_n`, e.g. the character of a
/// representation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFunction {
    n: u64,
    values: BTreeMap<Partition, i64>,
}

impl ClassFunction {
    pub fn new(n: u64, values: BTreeMap<Partition, i64>) -> Result<Self> {
        for mu in values.keys() {
            if mu.size() != n {
                return Err(Error::PartitionSize {
                    expected: n,
                    got: mu.size(),
                });
            }
        }
        Ok(ClassFunction { n, values })
    }

    /// The character of the irreducible indexed by `lambda`.
    pub fn irreducible(lambda: &Partition) -> Self {
        let n = lambda.size();
        let values = partitions(n)
            .into_iter()
            .map(|mu| {
                let v = mn_character(lambda, &mu).expect("same size");
                (mu, v)
            })
            .collect();
        ClassFunction { n, values }
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn value(&self, mu: &Partition) -> i64 {
        self.values.get(mu).copied().unwrap_or(0)
    }
}

/// Which distinguished functional to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FunctionalKind {
    /// Trivial-isotype multiplicity: the symmetric power operation.
    Sym,
    /// Sign-isotype multiplicity: the antisymmetric power operation.
    Alt,
    /// Trace of an n-cycle: the Adams operation.
    Adams,
}

/// A linear functional on the representation ring of `S_n`, stored as
/// class weights: `phi(V) = sum_mu w_mu * chi_V(mu)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Functional {
    n: u64,
    weights: BTreeMap<Partition, Rat>,
}

impl Functional {
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn weight(&self, mu: &Partition) -> Rat {
        self.weights
            .get(mu)
            .cloned()
            .unwrap_or_else(|| Rat::from_integer(0.into()))
    }

    pub fn weights(&self) -> impl Iterator<Item = (&Partition, &Rat)> {
        self.weights.iter()
    }

    /// Apply to a class function (a character): `sum_mu w_mu * chi(mu)`.
    pub fn apply(&self, chi: &ClassFunction) -> Result<Rat> {
        if chi.n() != self.n {
            return Err(Error::PartitionSize {
                expected: self.n,
                got: chi.n(),
            });
        }
        let mut acc = Rat::from_integer(0.into());
        for (mu, w) in &self.weights {
            acc += w * Rat::from_integer(BigInt::from(chi.value(mu)));
        }
        Ok(acc)
    }
}

/// The distinguished functionals of the representation ring:
/// averaging (`Sym`), sign-averaging (`Alt`), and the n-cycle trace
/// (`Adams`). Requires `n >= 1`.
pub fn functional(kind: FunctionalKind, n: u64) -> Functional {
    assert!(n >= 1, "functionals are indexed by n >= 1");
    let nf = Rat::from_integer(BigInt::from(factorial(n)));
    let mut weights = BTreeMap::new();
    match kind {
        FunctionalKind::Sym => {
            for mu in partitions(n) {
                let w = Rat::from_integer(BigInt::from(class_size(&mu))) / nf.clone();
                weights.insert(mu, w);
            }
        }
        FunctionalKind::Alt => {
            for mu in partitions(n) {
                let w = Rat::from_integer(BigInt::from(mu.permutation_sign() * class_size(&mu) as i64))
                    / nf.clone();
                weights.insert(mu, w);
            }
        }
        FunctionalKind::Adams => {
            weights.insert(Partition::new(vec![n]), Rat::one());
        }
    }
    Functional { n, weights }
}
