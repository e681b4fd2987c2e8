//! Irredundant irreducible decomposition and associated primes.

use std::collections::HashSet;
use std::fmt;

use super::{default_variable_names, Monomial, MonomialIdeal};
use crate::error::{Error, Result};
use crate::graph::VertexSet;
use crate::scalar::Exponent;

/// The irreducible ideal `m^a = (x_i^{a_i} : a_i > 0)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IrreducibleComponent<E> {
    exps: Monomial<E>,
}

impl<E: Ord> Ord for IrreducibleComponent<E> {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.exps.cmp(&other.exps)
    }
}

impl<E: Ord> PartialOrd for IrreducibleComponent<E> {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl<E: Exponent> IrreducibleComponent<E> {
    pub fn new(exps: Monomial<E>) -> Result<Self> {
        if exps.is_one() {
            return Err(Error::DegenerateIdeal("zero"));
        }
        Ok(IrreducibleComponent { exps })
    }

    pub fn exponents(&self) -> &Monomial<E> {
        &self.exps
    }

    pub fn ambient(&self) -> usize {
        self.exps.ambient()
    }

    pub fn support(&self) -> VertexSet {
        self.exps.support()
    }

    /// The radical, a monomial prime.
    pub fn radical(&self) -> MonomialPrime {
        MonomialPrime { support: self.support() }
    }

    /// `m ∈ m^a`, i.e. `m_i ≥ a_i > 0` for some `i`.
    pub fn contains(&self, m: &Monomial<E>) -> bool {
        self.support().iter().any(|i| m.exponent(i) >= self.exps.exponent(i))
    }

    /// `self ⊆ other`: every `x_i^{a_i}` lies in `other`.
    pub fn is_contained_in(&self, other: &Self) -> bool {
        let b = &other.exps;
        self.support().is_subset(b.support())
            && self.support().iter().all(|i| b.exponent(i) <= self.exps.exponent(i))
    }

    pub fn to_ideal(&self) -> MonomialIdeal<E> {
        let n = self.ambient();
        let gens = self
            .support()
            .iter()
            .map(|i| Monomial::pure_power(n, i, self.exps.exponent(i)))
            .collect::<Vec<_>>();
        let mut gens = gens;
        gens.sort_unstable();
        MonomialIdeal::from_sorted_antichain(n, gens)
    }

    pub fn format_with(&self, names: &[String]) -> String {
        let n = self.ambient();
        let parts: Vec<String> = self
            .support()
            .iter()
            .map(|i| Monomial::pure_power(n, i, self.exps.exponent(i)).format_with(names))
            .collect();
        format!("({})", parts.join(", "))
    }
}

impl<E: Exponent> fmt::Display for IrreducibleComponent<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_with(&default_variable_names(self.ambient())))
    }
}

impl<E: Exponent> fmt::Debug for IrreducibleComponent<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A monomial prime `(x_i : i ∈ support)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct MonomialPrime {
    pub support: VertexSet,
}

impl MonomialPrime {
    pub fn new(support: VertexSet) -> Result<Self> {
        if support.is_empty() {
            return Err(Error::DegenerateIdeal("zero"));
        }
        Ok(MonomialPrime { support })
    }

    pub fn height(&self) -> usize {
        self.support.len()
    }

    pub fn format_with(&self, names: &[String]) -> String {
        let parts: Vec<&str> = self.support.iter().map(|i| names[i].as_str()).collect();
        format!("({})", parts.join(", "))
    }
}

impl fmt::Display for MonomialPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_with(&default_variable_names(self.support.bound())))
    }
}

/// Irredundant irreducible decomposition `I = m^{a_1} ∩ ⋯ ∩ m^{a_s}`,
/// components in lexicographic order of their exponent vectors.
///
/// Generators are adjoined one at a time. A component `m^a` of the partial
/// ideal that misses the new generator `g` is replaced by `m^a + (x_i^{g_i})`
/// for each `i ∈ supp(g)`; components holding `g` survive unchanged, and the
/// replacements that contain another component are dropped.
pub fn irreducible_decomposition<E: Exponent>(
    ideal: &MonomialIdeal<E>,
) -> Result<Vec<IrreducibleComponent<E>>> {
    ideal.require_proper_nonzero()?;
    let n = ideal.ambient();
    let mut gens = ideal.gens().to_vec();
    gens.sort_by_key(|g| g.degree());
    let mut comps: Vec<Monomial<E>> = Vec::new();
    for (k, g) in gens.iter().enumerate() {
        if k == 0 {
            comps = g.support().iter().map(|i| Monomial::pure_power(n, i, g.exponent(i))).collect();
            continue;
        }
        let (kept, hit): (Vec<_>, Vec<_>) = comps.into_iter().partition(|q| holds(q, g));
        let mut fresh: Vec<Monomial<E>> = hit
            .iter()
            .flat_map(|q| g.support().iter().map(move |i| q.with_exponent(i, g.exponent(i))))
            .collect();
        fresh.sort_unstable();
        fresh.dedup();
        let redundant: Vec<bool> = fresh
            .iter()
            .enumerate()
            .map(|(a, c)| {
                kept.iter().any(|r| inside(r, c))
                    || fresh.iter().enumerate().any(|(b, r)| a != b && inside(r, c))
            })
            .collect();
        comps = kept;
        comps.extend(fresh.into_iter().zip(redundant).filter(|(_, r)| !r).map(|(c, _)| c));
    }
    let mut out: Vec<IrreducibleComponent<E>> = comps.into_iter().map(|exps| IrreducibleComponent { exps }).collect();
    out.sort_unstable();
    Ok(out)
}

/// `g ∈ m^q`.
fn holds<E: Exponent>(q: &Monomial<E>, g: &Monomial<E>) -> bool {
    !q.support().is_disjoint(g.support()) && q.support().iter().any(|i| g.exponent(i) >= q.exponent(i))
}

/// `m^r ⊆ m^c`.
fn inside<E: Exponent>(r: &Monomial<E>, c: &Monomial<E>) -> bool {
    r.support().is_subset(c.support()) && r.support().iter().all(|i| c.exponent(i) <= r.exponent(i))
}

/// The same decomposition by generator splitting, kept as an independent
/// route for cross-checks.
///
/// A generator `g = u·v` with coprime `u = x_i^{g_i}` and `v = g/u` splits
/// the ideal as `(rest + (u)) ∩ (rest + (v))`; once every generator is a pure
/// power the ideal is itself irreducible. Generator sets already expanded
/// are skipped. The leaves intersect to `I`, and the inclusion-minimal ones
/// form the unique irredundant decomposition.
pub fn irreducible_decomposition_by_splitting<E: Exponent>(
    ideal: &MonomialIdeal<E>,
) -> Result<Vec<IrreducibleComponent<E>>> {
    ideal.require_proper_nonzero()?;
    let n = ideal.ambient();
    let mut leaves: HashSet<Monomial<E>> = HashSet::new();
    let mut seen: HashSet<Vec<Monomial<E>>> = HashSet::new();
    let mut stack = vec![ideal.gens().to_vec()];

    while let Some(gens) = stack.pop() {
        let Some((g, var)) = choose_pivot(&gens) else {
            let mut corner = Monomial::one(n);
            for p in &gens {
                let i = p.support().first().expect("proper ideal has no unit generator");
                corner = corner.with_exponent(i, p.exponent(i));
            }
            leaves.insert(corner);
            continue;
        };
        if !seen.insert(gens.clone()) {
            continue;
        }
        let pivot = &gens[g];
        let u = Monomial::pure_power(n, var, pivot.exponent(var));
        let v = pivot.delete_variables(VertexSet::singleton(var));
        for piece in [u, v] {
            stack.push(adjoin(&gens, g, piece));
        }
    }

    Ok(minimal_components(leaves))
}

/// Picks a generator with at least two variables, splitting off the variable
/// it shares with the most other mixed generators.
fn choose_pivot<E: Exponent>(gens: &[Monomial<E>]) -> Option<(usize, usize)> {
    let mut counts = [0u32; 64];
    let mut first = None;
    for (k, g) in gens.iter().enumerate() {
        if g.support().len() >= 2 {
            first.get_or_insert(k);
            for i in g.support() {
                counts[i] += 1;
            }
        }
    }
    let k = first?;
    let var = gens[k].support().iter().max_by_key(|&i| (counts[i], std::cmp::Reverse(i)))?;
    Some((k, var))
}

/// `gens` without `gens[skip]`, plus `piece`, minus the multiples of `piece`.
/// `piece` divides the removed generator, so nothing left divides `piece`.
fn adjoin<E: Exponent>(gens: &[Monomial<E>], skip: usize, piece: Monomial<E>) -> Vec<Monomial<E>> {
    let mut out: Vec<Monomial<E>> = gens
        .iter()
        .enumerate()
        .filter(|&(k, h)| k != skip && !piece.divides(h))
        .map(|(_, h)| h.clone())
        .collect();
    let at = out.binary_search(&piece).unwrap_or_else(|p| p);
    out.insert(at, piece);
    out
}

fn minimal_components<E: Exponent>(leaves: HashSet<Monomial<E>>) -> Vec<IrreducibleComponent<E>> {
    let leaves: Vec<IrreducibleComponent<E>> =
        leaves.into_iter().map(|exps| IrreducibleComponent { exps }).collect();
    let mut kept: Vec<IrreducibleComponent<E>> = leaves
        .iter()
        .filter(|c| !leaves.iter().any(|d| d != *c && d.is_contained_in(c)))
        .cloned()
        .collect();
    kept.sort_unstable();
    kept
}

/// Intersection of the given components as a monomial ideal.
pub fn intersect_components<E: Exponent>(n: usize, components: &[IrreducibleComponent<E>]) -> MonomialIdeal<E> {
    components
        .iter()
        .fold(MonomialIdeal::unit(n), |acc, c| acc.intersect(&c.to_ideal()).expect("same ambient"))
}

/// `Ass(R/I)`: the distinct radicals of the irredundant irreducible
/// components, sorted by support.
pub fn associated_primes<E: Exponent>(ideal: &MonomialIdeal<E>) -> Result<Vec<MonomialPrime>> {
    Ok(primes_of(&irreducible_decomposition(ideal)?))
}

pub fn primes_of<E: Exponent>(components: &[IrreducibleComponent<E>]) -> Vec<MonomialPrime> {
    let mut primes: Vec<MonomialPrime> = components.iter().map(|c| c.radical()).collect();
    primes.sort_unstable();
    primes.dedup();
    primes
}

/// The inclusion-minimal primes among `primes`.
pub fn minimal_primes(primes: &[MonomialPrime]) -> Vec<MonomialPrime> {
    primes
        .iter()
        .filter(|p| !primes.iter().any(|q| q != *p && q.support.is_subset(p.support)))
        .copied()
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(e: &[u8]) -> Monomial<u8> {
        Monomial::new(e.to_vec()).unwrap()
    }

    fn ideal(gens: &[&[u8]]) -> MonomialIdeal<u8> {
        MonomialIdeal::minimalize(gens[0].len(), gens.iter().map(|g| m(g))).unwrap()
    }

    fn exps(cs: &[IrreducibleComponent<u8>]) -> Vec<Vec<u8>> {
        cs.iter().map(|c| c.exponents().exponents().to_vec()).collect()
    }

    #[test]
    fn single_product() {
        let d = irreducible_decomposition(&ideal(&[&[1, 1]])).unwrap();
        assert_eq!(exps(&d), vec![vec![0, 1], vec![1, 0]]);
    }

    #[test]
    fn triangle_square() {
        let c3 = ideal(&[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]]);
        let d = irreducible_decomposition(&c3.power(2)).unwrap();
        let mut got = exps(&d);
        got.sort();
        let mut want = vec![
            vec![2, 1, 0],
            vec![1, 2, 0],
            vec![2, 0, 1],
            vec![1, 0, 2],
            vec![0, 2, 1],
            vec![0, 1, 2],
            vec![2, 2, 2],
        ];
        want.sort();
        assert_eq!(got, want);
        let primes = associated_primes(&c3.power(2)).unwrap();
        assert_eq!(primes.len(), 4);
        assert_eq!(primes.iter().filter(|p| p.height() == 3).count(), 1);
    }

    #[test]
    fn degenerate_inputs() {
        assert_eq!(
            irreducible_decomposition(&MonomialIdeal::<u8>::zero(2)),
            Err(Error::DegenerateIdeal("zero"))
        );
        assert_eq!(
            irreducible_decomposition(&MonomialIdeal::<u8>::unit(2)),
            Err(Error::DegenerateIdeal("unit"))
        );
    }

    #[test]
    fn component_containment() {
        let a = IrreducibleComponent::new(m(&[2, 1, 0])).unwrap();
        let b = IrreducibleComponent::new(m(&[1, 1, 0])).unwrap();
        let c = IrreducibleComponent::new(m(&[2, 0, 0])).unwrap();
        assert!(a.is_contained_in(&b));
        assert!(!b.is_contained_in(&a));
        assert!(c.is_contained_in(&IrreducibleComponent::new(m(&[1, 0, 0])).unwrap()));
        assert!(c.is_contained_in(&a) && !a.is_contained_in(&c));
        assert!(a.contains(&m(&[0, 1, 0])));
        assert!(!a.contains(&m(&[1, 0, 5])));
        assert_eq!(a.to_string(), "(x1^2, x2)");
    }

    fn arb_ideal(n: usize) -> impl Strategy<Value = MonomialIdeal<u8>> {
        prop::collection::vec(prop::collection::vec(0u8..=3, n), 1..7).prop_filter_map(
            "proper nonzero",
            move |gs| {
                let i = MonomialIdeal::minimalize(n, gs.into_iter().map(|g| m(&g))).unwrap();
                (!i.is_unit()).then_some(i)
            },
        )
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn reintersection_and_irredundancy(i in arb_ideal(6)) {
            let d = irreducible_decomposition(&i).unwrap();
            prop_assert_eq!(&intersect_components(6, &d), &i);
            for skip in 0..d.len() {
                let rest: Vec<_> = d.iter().enumerate().filter(|&(k, _)| k != skip).map(|(_, c)| c.clone()).collect();
                prop_assert_ne!(&intersect_components(6, &rest), &i);
            }
        }

        #[test]
        fn splitting_agrees(i in arb_ideal(6)) {
            prop_assert_eq!(irreducible_decomposition(&i).unwrap(), irreducible_decomposition_by_splitting(&i).unwrap());
        }
    }
}
