//! Word reversing over complemented monoid presentations.
//!
//! A complemented presentation is given by a partial map `f` on pairs of
//! generators; the relations are `a·f(a,b) = b·f(b,a)`. Reversing rewrites
//! signed words by replacing `a⁻¹b` with `f(a,b)·f(b,a)⁻¹` and computes
//! right complements, lcm words, and word-problem answers. The recognizer
//! decides, within explicit budgets, whether such a presentation defines a
//! Garside monoid; on success the finite lattice of simple elements, greedy
//! and mixed normal forms, and the normal-form automata become available.

pub mod automata;
pub mod normalform;
pub mod oracle;
pub mod presentation;
pub mod recognizer;
pub mod reversing;
pub mod structure;
pub mod words;

pub use presentation::{Presentation, PresentationError, PresentationSource, ReversingFunction};
pub use recognizer::{
    Budgets, ClosureResult, CubeOutcome, CubeReport, OmegaResult, RecognitionReport, Verdict,
};
pub use reversing::{EquivResult, Fuel, ReversalOutcome, ReversingGrid, WordOutcome};
pub use structure::{Fraction, GarsideStructure, SimpleId};
pub use words::{Alphabet, Letter, PositiveWord, Sign, SignedWord};
