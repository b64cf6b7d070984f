//! Sign vectors and the alternating oriented matroid `C^{m,k+1}`.

mod alternating;
mod sign;

pub use alternating::{
    act_sign, all_sign_vectors, cocircuit_count, covector_extension_feasible, dihedral_act_sign,
    enumerate_cocircuits, enumerate_covectors, is_cocircuit, is_covector, is_vector, minimal_degree, CovectorList,
    MAX_ENUMERATION_LENGTH,
};
pub use sign::{covector_leq, Sign, SignVector, MAX_SIGN_LENGTH};
