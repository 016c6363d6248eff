//! Slice obstructions: metabolizers, Fox–Milnor and twisted-polynomial norm tests.

pub mod fox_milnor;
pub mod metabolizer;
pub mod norm;
pub mod order_two;

pub use fox_milnor::{fox_milnor_test, FoxMilnorReport, FoxMilnorVerdict, IrreducibleFactor};
pub use metabolizer::{brute_force_metabolizers, enumerate_metabolizers, Metabolizer, MetabolizerSearch};
pub use norm::{norm_factorization_test, norm_factorization_with, NormCertificate, NormPiece, NormVerdict};
pub use order_two::{
    order_two_report, order_two_report_with, CharacterRecord, MetabolizerRecord, ObstructionReport, OrderTwoOptions,
    OrderTwoVerdict, RecordVerdict,
};
