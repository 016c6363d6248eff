//! Signatures of twisted doubles from their lens-space covers, and the
//! concordance-order certificates built on them.

pub mod certificate;
pub mod lattice;
pub mod signature;

pub use certificate::{
    independence_certificate, infinite_order_certificate, infinite_order_certificate_with, tau_bound, BoundStep,
    IndependenceCertificate, IndependenceVerdict, OrderCertificate, OrderVerdict, ParityEntry, Relation,
};
pub use lattice::{
    admissible_k, lattice_sigma, lens_modulus, lens_signature, sigma_closed, sigma_for_exponent, sigma_max,
    sigma_min_formula, triangle_points, LensSignatureValue, TrianglePoints,
};
pub use signature::{hermitian_form, seifert_metabolic_check, signature_samples, tristram_levine_signature};
