//! Automorphism groups and equivalence of cyclic combinatorial objects.
//!
//! A combinatorial object on Z_n is cyclic when the complete cycle
//! T: i -> i+1 mod n is one of its automorphisms. This crate classifies the
//! automorphism groups of two such families — cyclic codes over finite
//! fields and circulant (di)graphs — and decides whether two objects on
//! p^m points are equivalent, producing an explicit witness permutation.
//!
//! The interesting lengths are primes and odd prime powers:
//!
//! - At prime length the classification runs a multiplier scan
//!   ([`autgroup::algorithm_a`]) after screening the elementary,
//!   Golay (M_23 / PSL(2,11)) and projective (PGammaL(d,t) via Singer
//!   labelings) exceptional cases, and equivalence reduces to at most
//!   p - 1 multiplier checks.
//! - At length p^m (p odd) the p-Sylow subgroup of the automorphism group
//!   is located by a logarithmic number of probe permutations
//!   ([`autgroup::sylow_probe`]), and equivalence witnesses live in the
//!   polynomial permutation group Q^(I+1) ([`brand`]), which is searched
//!   in a canonical order ([`equivalence::equivalent_prime_power`]).
//!
//! Everything is exact integer / finite-field arithmetic with
//! deterministic tie-breaking, so classifications, witnesses and serialized
//! artifacts are reproducible bit for bit.
//!
//! The `cyclaut` binary exposes the same functionality as a CLI
//! (`classify`, `equiv`, `table2`, `brand`) over JSON descriptors.

pub mod arithmetic;
pub mod autgroup;
pub mod brand;
pub mod codes;
pub mod equivalence;
pub mod error;
pub mod field;
pub mod graphs;
pub mod linalg;
pub mod object;
pub mod perm;
pub mod table;

pub use arithmetic::{
    cyclotomic_cosets, multiplicative_order, order_mod_prime_power,
    projective_length_decompositions, z_invariant, CosetPartition, PrimePowerLength,
};
pub use autgroup::{
    algorithm_a, classify_code, classify_graph, detect_golay, is_projective, singer_labeling,
    sylow_probe, AutClassification, GroupTag, OrderBound, SylowProbe,
};
pub use brand::{polyperm, probe_perm, PolyPerm, QGroup};
pub use codes::{CodeDescriptor, CyclicCode, LinearCode};
pub use equivalence::{
    equivalence_precheck, equivalent, equivalent_prime, equivalent_prime_power, EquivConfig,
    EquivalenceWitness, WitnessPerm,
};
pub use error::{Error, Result};
pub use field::{field, FieldElem, FieldSpec};
pub use graphs::{CirculantGraph, EdgeGraph, GraphDescriptor};
pub use object::CyclicObject;
pub use perm::{affine, complete_cycle, multiplier, AffineMap, Permutation};
