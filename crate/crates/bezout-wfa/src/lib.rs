//! Exact minimization of weighted finite automata whose weights live in
//! an integral Bézout domain.
//!
//! The crate provides:
//!
//! - [`ring::BezoutRing`], the coefficient contract, with four instances:
//!   arbitrary-precision integers, rationals, rational polynomials and
//!   fractional-power (Puiseux) polynomials;
//! - exact matrix algebra over any such ring ([`matrix`], [`linalg`]):
//!   unimodular stair-form triangularization, module membership with
//!   denominator tracking, back substitution, unimodular inversion, and
//!   independent fraction-field rank/solve oracles;
//! - the automaton model ([`automaton`], [`hankel`]): linear
//!   representations, behavior evaluation, Hadamard product, direct sum,
//!   transposition, and the Hankel-rank minimality oracle;
//! - the reduction pipeline ([`minimize`]): prefix-set computation, left
//!   and right reduction, full minimization, series equivalence with
//!   shortest witnesses, conjugators, and ring-level isomorphism testing;
//! - a JSON document format and everything the `bwfa` command-line tool
//!   needs ([`document`]).
//!
//! All arithmetic is exact; there is no floating point anywhere.

pub mod automaton;
pub mod document;
pub mod fraction;
pub mod hankel;
pub mod linalg;
pub mod matrix;
pub mod minimize;
pub mod poly;
pub mod puiseux;
pub mod ring;
mod textform;

pub use automaton::{Alphabet, AutomatonError, LinearRepresentation, Word};
pub use document::{AutomatonDocument, DocumentError, RingTag};
pub use fraction::Fraction;
pub use hankel::{hankel_rank, HankelBlock};
pub use linalg::{
    gauss2, invert_unimodular, membership, rank_over_fractions, solve_over_fractions,
    solve_stair, triangularize, GaussStep, LinAlgError, MembershipOutcome, StairForm,
};
pub use matrix::Matrix;
pub use minimize::{
    conjugator, distinguishing_word, equivalent, left_reduce, minimize, prefix_set,
    right_reduce, ring_isomorphic, MinimizeError, PrefixSet, PrefixState, StepBudget,
};
pub use poly::Polynomial;
pub use puiseux::PuiseuxPoly;
pub use ring::{BezoutRing, RingError, ScalarParseError};
