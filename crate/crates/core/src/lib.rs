//! Exact-arithmetic invariants of representations of essentially finite
//! 2-groups in Kapranov–Voevodsky 2-vector spaces.
//!
//! A 2-group is handled through its classifying data `(π₀, π₁, action,
//! α)`; a representation through its classifying quadruple `(n, ρ, β,
//! c)`.  On top of that the crate computes the regular representation,
//! intertwining orbits and intertwining numbers via z-regular conjugacy
//! classes, and the representability invariants of the forgetful
//! 2-functor — all in exact arithmetic over ℚ/ℤ.
//!
//! The data-parallel inner loops (per-orbit cocycle work, equivalence
//! witness searches) run on rayon when the default `parallel` feature is
//! enabled and fall back to sequential execution without it.

pub mod charlat;
pub mod cohom;
mod exec;
pub mod grp;
pub mod intertwine;
pub mod repq;
pub mod samplers;
pub mod snf;
pub mod twogrp;

pub use charlat::{AbelianGroup, Character, Pi1Action, QZ};
pub use cohom::{
    cohomologous, h2_representatives, solve_coboundary, Cochain, EnumLimits, QzCochain,
};
pub use grp::{
    cayley_embedding, centralizer, conjugacy_classes, orbits, FiniteGroup, GSet, Perm, PermRep,
};
pub use intertwine::{
    hom_rank, intertwining_orbits, symmetry_check, torsor_transport, universal_eval,
    universal_roundtrip, zregular_count, HomReport, IntertwineOrbit, OrbitRecord,
};
pub use repq::{
    cocyclic_rep, enumerate_reps, equivalent, permutation_rep, regular_rep, trivial_rep,
    RepQuadruple, ValidationReport,
};
pub use twogrp::TwoGroupData;
