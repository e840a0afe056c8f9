//! The subring `𝔸(G, n) ⊆ A(G≀Σₙ)` spanned by the sets `[(G≀Σₙ)/α(λ)]`,
//! its transfer product, power operations and parks characters.

mod aa;
mod level;
mod parks;

pub use aa::{
    power_op, power_op_basis, power_op_closed_form, power_op_inductive, power_series, AAElement,
};
pub use level::{marks_transfer_product, oracle_transfer_product, Level, OrbitTypeRecord};
pub use parks::{
    from_parks, parks_char, parks_char_basis, parks_power_char, split_weight, ParksVector,
};
