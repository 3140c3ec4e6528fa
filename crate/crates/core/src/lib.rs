//! powellkit-core: a combinatorial model of the genus-g Heegaard splitting
//! of the 3-sphere, its Goeritz-group move alphabet, and certified
//! factorization engines that rewrite generalized moves into words in the
//! five Powell generators, with machine-checked equality certificates.

pub mod error;
pub mod word;
pub mod surface;
pub mod word_problem;
pub mod screening;
pub mod mapping;
pub mod tablegen;

pub use error::*;
pub use surface::{AtlasCurve, Genus, HomologyClass, Side, StandardAtlas};
pub use word::{Letter, Word};
pub use word_problem::{ConjugacyWitness, SearchBounds, SurfaceGroup};
