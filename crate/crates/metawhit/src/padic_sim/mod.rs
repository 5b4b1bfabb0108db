//! Finite-field model of the local computations: `F = F_p(t)` with the
//! `t`-adic valuation, the Iwasawa algorithm along a reduced word, the
//! integrand `f * psi_lambda`, and exact integration over cells.

mod field;
mod integrate;
mod iwasawa;
mod matrix;

pub use field::{FpPoly, LaurentElem};
pub use integrate::{
    cell_measure, cell_representatives, cell_representatives_adaptive, cell_to_crystal_tuple, closed_form_cell,
    containment_probe,
    eval_rational_at, integrate_cell, integrate_cell_f_only, polar_elements, sum_over_representatives, CellEnumeration, CellIntegral,
    ContainmentRow, IntegrationOptions,
};
pub use iwasawa::{
    classify_cell_sl3, coordinates, f_monomial, f_value, f_zeta, from_coordinates, hilbert, iwasawa,
    iwasawa_from_coordinates, psi, psi_lambda, psi_product_formula, step, symbol_exponents, IwasawaResult, Step,
};
pub use matrix::Mat;
