//! Free-group words, presentations, Fox calculus and cyclic covers.

pub mod cover;
pub mod fox;
pub mod presentation;
pub mod word;

pub use cover::{cyclic_cover_presentation, CoverPresentation};
pub use fox::{evaluate_group_ring, evaluated_jacobian, fox_derivative, fox_jacobian, GroupRingElement, Substitution};
pub use presentation::{Abelianization, Presentation};
pub use word::{Letter, Word};
