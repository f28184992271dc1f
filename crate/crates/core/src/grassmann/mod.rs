//! Exterior algebra with commutative or enveloping-algebra coefficients,
//! and the 2-form identities behind the minor summation formulae.

pub mod element;
pub mod forms;

pub use element::{grassmann_mul, wedge_sign, GrassmannElement, Mask};
pub use forms::{
    build_forms_commutative, build_forms_uea, check_decomposition, check_eta_anticommute, check_sl2,
    check_theta_powers, check_top_degree, check_trinomial, check_xi_power_commutative, check_xi_power_formula,
    generic_colored, pfaffian_via_top_form, trinomial_rhs, FormCheck, Forms, GeneratorRing, Trinomial,
};
