//! A computational workbench for operads built from braid groups.
//!
//! The crate provides:
//!
//! * [`perm`] — finite permutations with operadic block composition, the
//!   arity-level shadow of everything else here.
//! * [`braid`] — braid words with a complete decision procedure for the
//!   word problem (handle reduction), an independent free-group oracle
//!   (the faithful action on automorphisms), and the cabling operation
//!   that substitutes a braid into a thickened strand.
//! * [`words`] — parenthesized words with unit markers, their grafting
//!   operad, and braided parenthesized words pairing a word with a braid
//!   on its leaves.
//! * [`groupoid`] — the four operads in groupoids these generate (colored
//!   braids, weak colored braids, parenthesized braids, weak
//!   parenthesized braids), decision procedures for their hom-sets, and
//!   the structure-preserving maps between them.
//! * [`gcrossed`] — grade and twist bookkeeping over a finite group: the
//!   Hurwitz action on grade tuples and the conjugation twists a braid
//!   inflicts on its strands, in the style of braided crossed categories.
//! * [`laws`] — an executable registry of the algebraic laws all of the
//!   above satisfy, with exhaustive small-case tiers, seeded randomized
//!   tiers, shrinking counterexamples, and injectable faults that
//!   demonstrate the suite's sensitivity.
//!
//! Diagrams read bottom to top: `multiply(a, b)` stacks `b` on top of
//! `a`, and the underlying permutation of a braid sends a top position to
//! the bottom strand that arrives there.

pub mod braid;
pub mod error;
pub mod gcrossed;
pub mod groupoid;
pub mod laws;
pub mod perm;
pub mod words;

pub use braid::{BraidWord, FreeGroupEndo, Letter};
pub use error::{Error, Result};
pub use gcrossed::{
    eval_twist_word, evaluate_graded, hurwitz_act, hurwitz_step, signed_undercrossing_counts,
    twist_words, twist_words_with, FiniteGroup, GradedEvaluation, TwistLetter, TwistRecord,
    TwistStyle,
};
pub use groupoid::{
    check_morphism, compose_morphisms_operadic, compose_morphisms_operadic_with,
    compose_morphisms_vertical, forget, forget_morphism, hom, identity_morphism, pi, pi_morphism,
    wcob_compose_objects, wpab_hom, Flavor, GroupoidMorphism, GroupoidObject,
    MorphIndexConvention, WCobObject,
};
pub use laws::{law_names, run_all, run_all_with, run_law, run_law_with, LawCase, LawParams, Verdict};
pub use perm::{all_permutations, Permutation};
pub use words::{OmegaBrElement, ParenWord, Tree};
