//! Standard pairs, multiplicities and (arithmetic) degree.
//!
//! A pair `(M, Z)` with `supp(M) ∩ Z = ∅` avoids `I` when no monomial of
//! `M·k[Z]` lies in `I`, i.e. when no generator with its `Z`-variables
//! deleted divides `M`. It is standard when it also cannot be enlarged:
//! for every variable `x_i ∉ Z`, moving `x_i` from `M` into the free set
//! gives a pair that meets `I`. Any strictly larger avoiding pair contains
//! one of these one-step enlargements, so the local test is exact.

use std::fmt;

use super::{associated_primes, minimal_primes, Monomial, MonomialIdeal};
use crate::error::Result;
use crate::graph::VertexSet;
use crate::scalar::Exponent;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct StandardPair<E> {
    pub m: Monomial<E>,
    pub z: VertexSet,
}

impl<E: Ord> Ord for StandardPair<E> {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.m.cmp(&other.m).then_with(|| self.z.cmp(&other.z))
    }
}

impl<E: Ord> PartialOrd for StandardPair<E> {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl<E: Exponent> fmt::Debug for StandardPair<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.m, self.z)
    }
}

/// `M·k[Z] ∩ I = ∅`.
pub fn avoids<E: Exponent>(ideal: &MonomialIdeal<E>, m: &Monomial<E>, z: VertexSet) -> bool {
    !ideal.gens().iter().any(|g| {
        g.support()
            .difference(z)
            .iter()
            .all(|i| g.exponent(i) <= m.exponent(i))
    })
}

fn is_standard<E: Exponent>(ideal: &MonomialIdeal<E>, m: &Monomial<E>, z: VertexSet) -> bool {
    if !m.support().is_disjoint(z) || !avoids(ideal, m, z) {
        return false;
    }
    let bound = VertexSet::full(m.ambient()).difference(z);
    bound.iter().all(|i| {
        let freed = z.with(i);
        !avoids(ideal, &m.delete_variables(VertexSet::singleton(i)), freed)
    })
}

/// Standard pairs with second coordinate exactly `z`.
///
/// Exponents of `M` range over `0 ..= max_g(g_i) - 1` on the variables
/// outside `z`: a larger exponent could be traded for freeing `x_i`.
pub fn standard_pairs_at<E: Exponent>(ideal: &MonomialIdeal<E>, z: VertexSet) -> Vec<Monomial<E>> {
    let n = ideal.ambient();
    let caps = ideal.max_exponents();
    let vars: Vec<usize> = VertexSet::full(n).difference(z).iter().collect();
    if vars.iter().any(|&i| caps[i].is_zero()) {
        // x_i never occurs, so freeing it never meets I.
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut current = Monomial::one(n);
    loop {
        if is_standard(ideal, &current, z) {
            out.push(current.clone());
        }
        // odometer over the box ∏ [0, cap_i - 1]
        let mut k = 0;
        loop {
            if k == vars.len() {
                return out;
            }
            let i = vars[k];
            let e = current.exponent(i);
            if e + E::one() < caps[i] {
                current = current.with_exponent(i, e + E::one());
                break;
            }
            current = current.with_exponent(i, E::zero());
            k += 1;
        }
    }
}

/// All standard pairs of a proper nonzero ideal, sorted by `(M, Z)`.
pub fn standard_pairs<E: Exponent>(ideal: &MonomialIdeal<E>) -> Result<Vec<StandardPair<E>>> {
    ideal.require_proper_nonzero()?;
    let n = ideal.ambient();
    let mut out = Vec::new();
    for bits in 0..(1u64 << n) {
        let z = VertexSet::from_bits(bits);
        out.extend(standard_pairs_at(ideal, z).into_iter().map(|m| StandardPair { m, z }));
    }
    out.sort_unstable();
    Ok(out)
}

/// `mult_I(P_Z)`: the number of standard pairs `(·, z)`.
pub fn multiplicity<E: Exponent>(ideal: &MonomialIdeal<E>, z: VertexSet) -> usize {
    standard_pairs_at(ideal, z).len()
}

/// Multiplicity at the monomial prime generated by `support`.
pub fn multiplicity_at_prime<E: Exponent>(ideal: &MonomialIdeal<E>, support: VertexSet) -> usize {
    multiplicity(ideal, VertexSet::full(ideal.ambient()).difference(support))
}

/// Sum of multiplicities over all associated primes.
pub fn arithmetic_degree<E: Exponent>(ideal: &MonomialIdeal<E>) -> Result<u64> {
    Ok(associated_primes(ideal)?
        .iter()
        .map(|p| multiplicity_at_prime(ideal, p.support) as u64)
        .sum())
}

/// Sum of multiplicities over the minimal associated primes.
pub fn degree<E: Exponent>(ideal: &MonomialIdeal<E>) -> Result<u64> {
    Ok(minimal_primes(&associated_primes(ideal)?)
        .iter()
        .map(|p| multiplicity_at_prime(ideal, p.support) as u64)
        .sum())
}
