//! Finite graphs, (stable) Kneser graphs and the dihedral action on them.

mod circular;
mod colouring;
mod graph;
mod ops;
mod symmetry;

pub use circular::{
    dihedral_act, enumerate_stable_sets, enumerate_subsets, stable_set_count, CircularSet, DihedralElement,
    MAX_MODULUS,
};
pub(crate) use circular::binomial;
pub use colouring::{chromatic_number, colour_with_at_most, vertex_criticality_check, Colouring};
pub use graph::{kneser_graph, stable_kneser_graph, Graph, GraphDocument};
pub use ops::{count_homomorphisms, exponential, exponential_vertex, product, MAX_EXPONENTIAL_VERTICES};
pub use symmetry::{automorphism_group_order, free_action_check, FreenessWitness, MAX_AUTOMORPHISM_VERTICES};
