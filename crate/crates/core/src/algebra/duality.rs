use super::{irreducible_decomposition, IrreducibleComponent, Monomial, MonomialIdeal};
use crate::error::{Error, Result};
use crate::scalar::Exponent;

/// Alexander dual of a squarefree ideal: the intersection, over the minimal
/// generators `g`, of the prime generated by `supp(g)`.
///
/// The zero ideal dualises to the unit ideal and vice versa.
pub fn alexander_dual_squarefree<E: Exponent>(ideal: &MonomialIdeal<E>) -> Result<MonomialIdeal<E>> {
    if !ideal.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    let n = ideal.ambient();
    let mut acc = MonomialIdeal::unit(n);
    for g in ideal.gens() {
        acc = acc.intersect(&MonomialIdeal::prime(n, g.support()))?;
    }
    Ok(acc)
}

/// The exponent `a + 1 - b` on `supp(b)`, zero elsewhere.
fn complement_in_box<E: Exponent>(a: &Monomial<E>, b: &Monomial<E>) -> Result<Monomial<E>> {
    let exps = (0..a.ambient())
        .map(|i| {
            let bi = b.exponent(i);
            if bi.is_zero() {
                Ok(E::zero())
            } else {
                let v = a.exponent(i).as_u64() + 1 - bi.as_u64();
                E::try_from_u64(v)
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Monomial::new(exps)
}

fn check_bound<E: Exponent>(ideal: &MonomialIdeal<E>, a: &Monomial<E>) -> Result<()> {
    if a.ambient() != ideal.ambient() {
        return Err(Error::AmbientMismatch { expected: ideal.ambient(), found: a.ambient() });
    }
    match ideal.gens().iter().find(|g| !g.divides(a)) {
        Some(g) => Err(Error::DualBound { generator: g.to_string() }),
        None => Ok(()),
    }
}

/// Generalized Alexander dual `I^[a]`, read off the irreducible components:
/// each component `m^b` contributes the generator `x^{a+1-b}` (exponent
/// `a_i + 1 - b_i` where `b_i ≥ 1`, zero where `b_i = 0`).
///
/// Every generator of `I` must divide `x^a`.
pub fn generalized_dual<E: Exponent>(ideal: &MonomialIdeal<E>, a: &Monomial<E>) -> Result<MonomialIdeal<E>> {
    check_bound(ideal, a)?;
    if ideal.is_zero() {
        return Ok(MonomialIdeal::unit(ideal.ambient()));
    }
    if ideal.is_unit() {
        return Ok(MonomialIdeal::zero(ideal.ambient()));
    }
    dual_from_components(&irreducible_decomposition(ideal)?, a)
}

/// `I^[a]` from an already computed irredundant decomposition of `I`.
pub fn dual_from_components<E: Exponent>(
    components: &[IrreducibleComponent<E>],
    a: &Monomial<E>,
) -> Result<MonomialIdeal<E>> {
    let gens = components
        .iter()
        .map(|c| complement_in_box(a, c.exponents()))
        .collect::<Result<Vec<_>>>()?;
    MonomialIdeal::minimalize(a.ambient(), gens)
}

/// `I^[a]` computed from the generators instead: the intersection over
/// minimal generators `x^b` of the irreducible ideals `m^{a+1-b}`.
pub fn generalized_dual_by_generators<E: Exponent>(
    ideal: &MonomialIdeal<E>,
    a: &Monomial<E>,
) -> Result<MonomialIdeal<E>> {
    check_bound(ideal, a)?;
    let n = ideal.ambient();
    let mut acc = MonomialIdeal::unit(n);
    for g in ideal.gens() {
        let corner = complement_in_box(a, g)?;
        let mut pieces: Vec<_> =
            corner.support().iter().map(|i| Monomial::pure_power(n, i, corner.exponent(i))).collect();
        pieces.sort_unstable();
        acc = acc.intersect(&MonomialIdeal::from_sorted_antichain(n, pieces))?;
    }
    Ok(acc)
}
