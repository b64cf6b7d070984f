//! Posets, simplicial complexes, Hom complexes and mod 2 homology.

mod covector_map;
mod hom;
mod poset;
mod simplicial;

pub use covector_map::{
    check_equivariance_combinatorial, covector_to_hom, verify_nerve, CovectorMap, EquivarianceReport, NerveReport,
    MAX_EQUIVARIANCE_MODULUS, MAX_NERVE_VERTICES,
};
pub use hom::{
    estimate_hom_size, hom_poset, looped_one_skeleton, neighbourhood_complex, order_complex, HomPoset, MultiHom,
    MAX_HOM_CELLS,
};
pub use poset::FinitePoset;
pub use simplicial::{
    gf2_rank, gf2_rank_dense, gf2_rank_sparse, z2_betti, FacetDocument, SimplicialComplex, DENSE_COLUMN_LIMIT,
    MAX_FACES,
};
