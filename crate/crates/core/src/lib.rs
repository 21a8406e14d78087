//! Fully commutative elements of the affine Coxeter groups D̃ₙ₊₂ and B̃ₙ₊₁:
//! normal forms, heaps, star reductions, classification of irreducibles,
//! the decorated Temperley-Lieb diagram calculus and the a-function.

mod bits;
pub mod cli;
pub mod classify;
pub mod coxeter;
pub mod diagram;
pub mod element;
pub mod error;
pub mod harness;
pub mod heap;
pub mod phi;
pub mod star;
pub mod stats;

pub use coxeter::{build_graph, CoxeterGraph, Family, Generator, GraphRef, Word};
pub use element::{cfnf, fc_check, is_fully_commutative, FcCheck, FcElement};
pub use error::{Error, Result};
pub use heap::{heap_of, Heap};
pub use stats::{f_bullet, f_circ, n_value};

pub use star::{
    apply_move, available_moves, reduce_to_irreducible, Mode, Policy, ReductionTrace, Side, StarMove,
};
pub use classify::{
    classify_irreducible_b, classify_irreducible_d, is_weak_zigzag, IrreducibleClassB, IrreducibleClassBStar,
    IrreducibleClassBWeak, IrreducibleClassD,
};
pub use diagram::{
    a_tilde, a_value, compose, diagram_of, has_left_descent_diagrammatic, simple_diagram, DecoratedDiagram,
};
pub use phi::phi;
