//! Counting homomorphisms from surface groups into finite groups, character
//! formulas for those counts, Möbius graph evaluation, and Witten zeta sums
//! for compact Lie groups.

pub mod chartab;
pub mod fingroup;
pub mod format;
pub mod homcount;
pub mod mobius;
pub mod scalar;
pub mod verify;
pub mod words;
pub mod wzeta;

pub use num_complex::Complex64;
pub use num_rational::BigRational;

/// Exact rational scalar.
pub type Rational = BigRational;
/// Class function with exact rational values.
pub type ExactClassFunction = chartab::ClassFunction<Rational>;
/// Class function with `f64` values.
pub type FloatClassFunction = chartab::ClassFunction<f64>;
/// Class function with complex values, e.g. a character.
pub type ComplexClassFunction = chartab::ClassFunction<Complex64>;
