use std::fmt;

use super::Monomial;
use crate::error::{Error, Result};
use crate::graph::VertexSet;
use crate::scalar::Exponent;

/// A monomial ideal of `k[x_1, …, x_n]` held as its minimal generating set,
/// sorted lexicographically.
///
/// No generators is the zero ideal; the single generator `1` is the unit
/// ideal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal<E> {
    n: usize,
    gens: Vec<Monomial<E>>,
}

impl<E: Exponent> MonomialIdeal<E> {
    /// Reduces `gens` to the antichain of divisibility-minimal elements.
    pub fn minimalize<I>(n: usize, gens: I) -> Result<Self>
    where
        I: IntoIterator<Item = Monomial<E>>,
    {
        let gens: Vec<_> = gens.into_iter().collect();
        if let Some(bad) = gens.iter().find(|g| g.ambient() != n) {
            return Err(Error::AmbientMismatch { expected: n, found: bad.ambient() });
        }
        Ok(Self::minimalize_unchecked(n, gens))
    }

    pub(crate) fn minimalize_unchecked(n: usize, mut gens: Vec<Monomial<E>>) -> Self {
        gens.sort_unstable_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
        gens.dedup();
        let mut kept: Vec<Monomial<E>> = Vec::with_capacity(gens.len());
        for g in gens {
            // Everything kept so far has degree ≤ deg(g).
            if !kept.iter().any(|k| k.divides(&g)) {
                kept.push(g);
            }
        }
        kept.sort_unstable();
        MonomialIdeal { n, gens: kept }
    }

    /// Wraps generators already known to form a sorted antichain.
    pub(crate) fn from_sorted_antichain(n: usize, gens: Vec<Monomial<E>>) -> Self {
        debug_assert!(gens.windows(2).all(|w| w[0] < w[1]));
        MonomialIdeal { n, gens }
    }

    pub fn zero(n: usize) -> Self {
        MonomialIdeal { n, gens: Vec::new() }
    }

    pub fn unit(n: usize) -> Self {
        MonomialIdeal { n, gens: vec![Monomial::one(n)] }
    }

    /// The prime ideal generated by the variables in `s` (zero for `s = ∅`).
    pub fn prime(n: usize, s: VertexSet) -> Self {
        let mut gens: Vec<_> = s.iter().map(|i| Monomial::pure_power(n, i, E::one())).collect();
        gens.sort_unstable();
        MonomialIdeal { n, gens }
    }

    #[inline]
    pub fn ambient(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn gens(&self) -> &[Monomial<E>] {
        &self.gens
    }

    /// Number of minimal generators; `is_zero` is the emptiness test.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    /// Errors unless the ideal is proper and nonzero.
    pub fn require_proper_nonzero(&self) -> Result<()> {
        if self.is_zero() {
            Err(Error::DegenerateIdeal("zero"))
        } else if self.is_unit() {
            Err(Error::DegenerateIdeal("unit"))
        } else {
            Ok(())
        }
    }

    fn check_ambient(&self, other: &Self) -> Result<()> {
        if self.n == other.n {
            Ok(())
        } else {
            Err(Error::AmbientMismatch { expected: self.n, found: other.n })
        }
    }

    /// Largest exponent of each variable over the generators.
    pub fn max_exponents(&self) -> Vec<E> {
        let mut out = vec![E::zero(); self.n];
        for g in &self.gens {
            for i in g.support() {
                out[i] = out[i].max(g.exponent(i));
            }
        }
        out
    }

    /// Membership: some generator divides `m`.
    pub fn contains(&self, m: &Monomial<E>) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// `self ⊆ other`.
    pub fn is_subset(&self, other: &Self) -> bool {
        self.gens.iter().all(|g| other.contains(g))
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        Ok(Self::minimalize_unchecked(self.n, self.gens.iter().chain(&other.gens).cloned().collect()))
    }

    pub fn product(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        let gens = self
            .gens
            .iter()
            .flat_map(|g| other.gens.iter().map(move |h| g.mul(h)))
            .collect();
        Ok(Self::minimalize_unchecked(self.n, gens))
    }

    /// `self^s`; `s = 0` gives the unit ideal.
    pub fn power(&self, s: u32) -> Self {
        let mut acc = Self::unit(self.n);
        for _ in 0..s {
            acc = acc.product(self).expect("same ambient");
        }
        acc
    }

    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        let gens = self
            .gens
            .iter()
            .flat_map(|g| other.gens.iter().map(move |h| g.lcm(h)))
            .collect();
        Ok(Self::minimalize_unchecked(self.n, gens))
    }

    /// `self : (m)`.
    pub fn colon_by_monomial(&self, m: &Monomial<E>) -> Result<Self> {
        if m.ambient() != self.n {
            return Err(Error::AmbientMismatch { expected: self.n, found: m.ambient() });
        }
        Ok(Self::minimalize_unchecked(self.n, self.gens.iter().map(|g| g.quotient_by_gcd(m)).collect()))
    }

    /// Converts to another exponent type.
    pub fn cast<F: Exponent>(&self) -> Result<MonomialIdeal<F>> {
        let gens = self.gens.iter().map(Monomial::cast).collect::<Result<Vec<_>>>()?;
        Ok(MonomialIdeal { n: self.n, gens })
    }

    /// `(g_1, g_2, …)` in human syntax with the given variable names.
    pub fn format_with(&self, names: &[String]) -> String {
        let parts: Vec<String> = self.gens.iter().map(|g| g.format_with(names)).collect();
        format!("({})", parts.join(", "))
    }
}

impl<E: Exponent> fmt::Display for MonomialIdeal<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_with(&super::default_variable_names(self.n)))
    }
}

impl<E: Exponent> fmt::Debug for MonomialIdeal<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
