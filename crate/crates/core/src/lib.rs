//! Detection of off-by-one comparator bugs in Java methods.
//!
//! The pipeline has three stages:
//!
//! 1. **Corpus generation** ([`ast`], [`mutate`]): Java sources are parsed into
//!    method-level ASTs, comparator sites (`<`, `<=`, `>`, `>=`) are located and
//!    classified by their enclosing statement, and each method with at least one
//!    site is emitted twice — unchanged (label 0) and with one randomly chosen
//!    comparator flipped to its off-by-one sibling (label 1).
//! 2. **Encoding** ([`paths`]): each method becomes a bag of at most 200 integer
//!    triples `(terminal, path, terminal)` where the path is the node-kind walk
//!    between two AST leaves through their lowest common ancestor, hashed with
//!    Java's `String.hashCode` and mapped through a frequency-built vocabulary.
//! 3. **Model** ([`model`], [`train`], [`eval`]): embedding lookup, dense tanh
//!    transform, soft-attention pooling and a sigmoid output unit, trained with
//!    manually derived gradients, Adam, and accuracy-based early stopping.

pub mod ast;
pub mod eval;
pub mod model;
pub mod mutate;
pub mod oracle;
pub mod paths;
pub mod rng;
pub mod train;
