//! Integer matrices: Smith and Hermite normal forms and the prop `Mat(Z)`.

mod engine;
pub mod normal_form;

pub use engine::{
    corel_canonical_z, factor_z, is_epi_z, is_split_mono_z, pullback_z, pushout_z,
    scalar_corel_is_identity_z, PidEngine,
};
