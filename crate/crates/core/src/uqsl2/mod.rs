//! `U_q(sl2)` modules over `Q(q^{1/2})`: irreducibles `V_n`, tensor products, the braiding
//! `flip ∘ R`, its unitarization `flip ∘ R̄` and the reduction to signed crystal commutors.

mod braiding;
mod checks;
mod matrix;
mod module;

pub use braiding::{
    braiding, braiding_matrix, flip, in_frame, inverse_sqrt_matrix, lattice_check_and_reduce,
    r_matrix, reference_v1_braiding, unitarize, unitarized, unitarized_matrix, SignTable,
    Unitarization,
};
pub use checks::{
    cactus_relation_holds, classical_limit, intertwiner_violations, reduced_unitarized,
    unitarized_is_involutive, verify_kt07, yang_baxter_v1, Kt07Mismatch, Kt07Report,
};
pub use matrix::{Frame, QMatrix};
pub use module::{
    highest_weight_vectors, irreducible, tensor_module, tensor_power, Summand, UqModule,
};
