//! Exact symbolic toolkit for the Hopf algebras of codimension-1 transverse
//! symmetry and their cyclic cohomology.
//!
//! The crate provides, over exact rationals only:
//!
//! * canonical PBW-style normal forms for H₁, its Schwarzian quotient,
//!   the σ-covers H₁†(|N), the extended Connes-Kreimer algebra and their
//!   building blocks (`algebra`),
//! * rooted-tree combinatorics: enumeration, simple cuts, grafting
//!   (`trees`),
//! * Hopf-axiom, modular-pair, comodule and SAYD checkers (`hopf`),
//! * standard and coefficient cocyclic modules with their normalized
//!   b/B mixed complexes and a cyclic-cocycle verifier (`cyclic`),
//! * the bicocyclic module of a (co)crossed product, its diagonal, the
//!   Ψ/Ψ⁻¹ cyclic isomorphisms and the Alexander-Whitney map (`bicyclic`),
//! * the Cartan homotopy operators and off-weight contraction (`homotopy`),
//! * truncated spectral-sequence pages, the Cotor computation for the
//!   covers and the AW/Ψ⁻¹ class-transfer pipeline (`pages`),
//! * exact sparse linear algebra over ℚ (`linalg`) and an expression
//!   parser for the CLI surface syntax (`parse`).

pub mod algebra;
pub mod bicyclic;
pub mod cyclic;
pub mod element;
pub mod error;
pub mod genbi;
pub mod homotopy;
pub mod hopf;
pub mod linalg;
pub mod pages;
pub mod parse;
pub mod report;
pub mod sample;
pub mod scalar;
pub mod trees;
pub mod trunc;
pub mod word;

pub use algebra::{Algebra, Character, Coaction, CoactionKind, ModularPair, Weight};
pub use element::{AlgElement, Tensor};
pub use genbi::{GenBicocyclic, GenDiagonal};
pub use error::{Error, Result};
pub use bicyclic::{Bicocyclic, DiagonalModule, TotalCochain};
pub use cyclic::{CocyclicModule, CoeffModule, StandardModule};
pub use homotopy::Coderivation;
pub use hopf::SaydModule;
pub use report::{Report, Status};
pub use linalg::SparseMatrix;
pub use pages::{MembershipOutcome, PageEntry};
pub use scalar::Rational;
pub use trees::{enumerate_trees, Forest, RootedTree};
pub use trunc::{SigmaRange, TruncationSpec};
pub use word::{AlgebraId, Word};
