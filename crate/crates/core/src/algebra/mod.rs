//! Monomial ideals in `k[x_1, …, x_n]`: arithmetic, irreducible
//! decomposition, associated primes, Alexander duality and multiplicities.

mod decompose;
mod duality;
mod ideal;
mod monomial;
mod standard_pairs;
pub mod text;

pub use decompose::{
    associated_primes, intersect_components, irreducible_decomposition,
    irreducible_decomposition_by_splitting, minimal_primes, primes_of,
    IrreducibleComponent, MonomialPrime,
};
pub use duality::{
    alexander_dual_squarefree, dual_from_components, generalized_dual, generalized_dual_by_generators,
};
pub use ideal::MonomialIdeal;
pub use monomial::{default_variable_names, Monomial};
pub use standard_pairs::{
    arithmetic_degree, avoids, degree, multiplicity, multiplicity_at_prime, standard_pairs,
    standard_pairs_at, StandardPair,
};
