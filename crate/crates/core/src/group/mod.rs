//! The generalized quaternion group `Q_ℓ` and its character theory.

mod character;
mod fpf;
mod quaternion;

pub use character::{
    c_constant, char_value, delta, delta_power, fs_indicator, gamma_trace, inner_product,
    membership, theta, theta_class_function, ClassFunction, IrredLabel, RepRing,
    VirtualCharacter,
};
pub use fpf::{det_i_minus, det_i_minus_summands, gamma_matrix, is_fixed_point_free, FpfRep};
pub use quaternion::{ConjugacyClass, GroupElement, GroupParams, SubgroupId};
