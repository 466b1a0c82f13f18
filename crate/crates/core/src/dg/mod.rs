//! Free graded-commutative differential algebra kernel.
//!
//! Generators are all of degree one. Forms are exact linear combinations of canonical
//! monomials; wedge products carry the Koszul sign of the reordering. Antiderivations
//! are specified by their values on generators and extended by the graded Leibniz rule.
//!
//! # Text rendering
//!
//! ```text
//! form      := "0" | term ( (" + " | " - ") term )*
//! term      := coeff | coeff " " monomial | monomial
//! monomial  := generator ( "^" generator )*
//! generator := "c[" i "|" J "]" | "f[" i "|" J "]" | "dx[" i "]"
//! ```
//!
//! `J` is the sorted lower multiset written as concatenated digits (comma-separated when an
//! index exceeds 9), so `c[1|]` is `c^1` and `c[1|12]` is `c^1_{12}`. Monomials appear in
//! canonical generator order: family (`c < f < dx`), then order, then upper index, then
//! lower indices. A leading `-` negates the first term; a unit coefficient is omitted.

mod form;
mod generator;
mod matrix;
mod tpoly;

pub use form::{Degree, DerivationTable, FnTable, Form, Generator, Monomial};
pub use generator::{sorted_multisets, Family, GenId, IndexList};
pub use matrix::MatrixForm;
pub use tpoly::{integrate_t, lift_t, specialize_t, t_coefficients, TPoly, TPolyForm};
