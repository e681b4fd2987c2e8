use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{VertexSet, MAX_VERTICES};
use crate::scalar::Exponent;

/// A monomial `x_1^{a_1} ⋯ x_n^{a_n}`, stored as its exponent vector.
///
/// The same vector doubles as a vertex cover of some order. Ordering is
/// lexicographic on the exponent vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial<E> {
    exps: Box<[E]>,
    support: VertexSet,
}

fn support_of<E: Exponent>(exps: &[E]) -> VertexSet {
    exps.iter()
        .enumerate()
        .filter(|(_, e)| !e.is_zero())
        .map(|(i, _)| i)
        .collect()
}

impl<E: Exponent> Monomial<E> {
    pub fn new(exps: Vec<E>) -> Result<Self> {
        if exps.len() > MAX_VERTICES {
            return Err(Error::TooManyVertices { n: exps.len(), max: MAX_VERTICES });
        }
        let support = support_of(&exps);
        Ok(Monomial { exps: exps.into_boxed_slice(), support })
    }

    /// Converts a vector of wide integers, checking each entry fits `E`.
    pub fn from_u64s(exps: &[u64]) -> Result<Self> {
        Self::new(exps.iter().map(|&e| E::try_from_u64(e)).collect::<Result<_>>()?)
    }

    /// The unit monomial `1` in `n` variables.
    pub fn one(n: usize) -> Self {
        Monomial { exps: vec![E::zero(); n].into_boxed_slice(), support: VertexSet::EMPTY }
    }

    /// `x_i^e`.
    pub fn pure_power(n: usize, i: usize, e: E) -> Self {
        let mut exps = vec![E::zero(); n];
        exps[i] = e;
        Monomial { support: support_of(&exps), exps: exps.into_boxed_slice() }
    }

    /// The squarefree monomial `∏_{i ∈ s} x_i`.
    pub fn squarefree(n: usize, s: VertexSet) -> Self {
        debug_assert!(s.bound() <= n);
        let exps = (0..n).map(|i| if s.contains(i) { E::one() } else { E::zero() }).collect();
        Monomial { exps, support: s }
    }

    fn from_parts(exps: Box<[E]>) -> Self {
        let support = support_of(&exps);
        Monomial { exps, support }
    }

    #[inline]
    pub fn ambient(&self) -> usize {
        self.exps.len()
    }

    #[inline]
    pub fn exponent(&self, i: usize) -> E {
        self.exps[i]
    }

    #[inline]
    pub fn exponents(&self) -> &[E] {
        &self.exps
    }

    /// Variables with a positive exponent.
    #[inline]
    pub fn support(&self) -> VertexSet {
        self.support
    }

    #[inline]
    pub fn is_one(&self) -> bool {
        self.support.is_empty()
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|e| e.as_u64()).sum()
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= E::one())
    }

    /// True when at most one variable occurs.
    pub fn is_pure_power(&self) -> bool {
        self.support.len() <= 1
    }

    /// `self | other`.
    #[inline]
    pub fn divides(&self, other: &Self) -> bool {
        debug_assert_eq!(self.ambient(), other.ambient());
        self.support.is_subset(other.support)
            && self.support.iter().all(|i| self.exps[i] <= other.exps[i])
    }

    fn zip_with(&self, other: &Self, f: impl Fn(E, E) -> E) -> Self {
        debug_assert_eq!(self.ambient(), other.ambient());
        Self::from_parts(self.exps.iter().zip(other.exps.iter()).map(|(&a, &b)| f(a, b)).collect())
    }

    /// Product; panics on exponent overflow.
    pub fn mul(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a.checked_add(&b).expect("exponent overflow in product"))
    }

    pub fn lcm(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a.max(b))
    }

    pub fn gcd(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a.min(b))
    }

    /// `self / gcd(self, other)`, the generator of `(self) : other`.
    pub fn quotient_by_gcd(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a.saturating_sub(b))
    }

    /// `self / other`, assuming `other | self`.
    pub fn div(&self, other: &Self) -> Self {
        debug_assert!(other.divides(self));
        self.quotient_by_gcd(other)
    }

    /// Copy with the variables in `vars` set to exponent zero.
    pub fn delete_variables(&self, vars: VertexSet) -> Self {
        let mut exps = self.exps.clone();
        for i in vars.intersection(self.support) {
            exps[i] = E::zero();
        }
        Monomial { exps, support: self.support.difference(vars) }
    }

    /// Copy with exponent `e` at variable `i`.
    pub fn with_exponent(&self, i: usize, e: E) -> Self {
        let mut exps = self.exps.clone();
        exps[i] = e;
        Self::from_parts(exps)
    }

    /// Converts to another exponent type.
    pub fn cast<F: Exponent>(&self) -> Result<Monomial<F>> {
        Monomial::from_u64s(&self.exps.iter().map(|e| e.as_u64()).collect::<Vec<_>>())
    }

    /// Human syntax using `names[i]` for variable `i`, e.g. `a^2*c`.
    pub fn format_with(&self, names: &[String]) -> String {
        if self.is_one() {
            return "1".into();
        }
        let mut parts = Vec::with_capacity(self.support.len());
        for i in self.support {
            let e = self.exps[i];
            if e == E::one() {
                parts.push(names[i].clone());
            } else {
                parts.push(format!("{}^{}", names[i], e));
            }
        }
        parts.join("*")
    }
}

impl<E: Ord> Ord for Monomial<E> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.exps.cmp(&other.exps)
    }
}

impl<E: Ord> PartialOrd for Monomial<E> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Variable names `x1, …, xn`.
pub fn default_variable_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}")).collect()
}

impl<E: Exponent> fmt::Display for Monomial<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_with(&default_variable_names(self.ambient())))
    }
}

impl<E: Exponent> fmt::Debug for Monomial<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
