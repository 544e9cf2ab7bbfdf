//! Reduced words in simply-laced Coxeter systems: move closures, braid
//! classes and graphs, links and signatures, the median structure of braid
//! graphs, and sweeps that test open conjectures on enumerated instances.

pub mod braid;
pub mod bridge;
pub mod error;
pub mod lab;
pub mod links;
pub mod moves;
pub mod system;
pub mod word;

pub use braid::{
    braid_class, braid_graph, commutation_class, matsumoto_graph, reduced_expressions, BraidClass,
    LabeledBraidGraph, MatsumotoGraph,
};
pub use error::{Error, Result};
pub use links::{
    class_local_support, class_shadows, dimension, is_link, link_factorization, local_support,
    shadows, sigbar_i, sigbar_pair, signature, LinkFactorization, Shadow, Signature,
};
pub use moves::{
    apply_move, enumerate_move_sites, is_reduced, reduce, tits_closure, MoveKind, MoveSite,
};
pub use system::{CoxeterSystem, Family, MoveRules, DEFAULT_NODE_BUDGET};
pub use word::Word;
