//! Homomorphism counts `|Hom(Π, G)|` and volume distributions for finite
//! groups, by exhaustive enumeration and by character sums.

mod checks;
mod engine;
mod surface;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::chartab::{CharTableError, ClassFunction};
use crate::fingroup::{ConjugacyData, FiniteGroup};
use crate::words::{Presentation, WordError};

pub use checks::{
    ac_invariance_check, convolution_factorization, delta_product_identity_check, random_ac_sequence,
    AcInvarianceReport, DeltaIdentityReport, FactorizationReport,
};
pub use engine::{enumerate, estimate_work, Enumeration, DEFAULT_BUDGET};
pub use surface::{
    surface_distribution_brute, surface_distribution_character, surface_hom_count, surface_hom_count_character,
    surface_presentation, Method, SurfaceKind,
};

#[derive(Debug, thiserror::Error, Clone, PartialEq)]
pub enum HomCountError {
    #[error("enumeration needs about {required} work units, budget is {budget}")]
    BudgetExceeded { required: u128, budget: u64 },
    #[error("volume distribution needs exactly one relator, presentation has {0}")]
    NotSingleRelator(usize),
    #[error("invalid surface: {0}")]
    InvalidSurface(String),
    #[error("character sum is not an integer: {0}")]
    NotIntegral(String),
    #[error("distribution check failed: {0}")]
    DistributionCheck(String),
    #[error(transparent)]
    Character(#[from] CharTableError),
    #[error(transparent)]
    Word(#[from] WordError),
}

/// One irrep's contribution to a character-sum count.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IrrepTerm {
    pub irrep: usize,
    pub dim: u64,
    pub indicator: i64,
    /// exact contribution, rendered as `p` or `p/q`
    pub term: String,
}

/// Result of a homomorphism count.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HomCountReport {
    #[serde(serialize_with = "serialize_biguint")]
    pub count: BigUint,
    pub method: Method,
    pub group: String,
    pub group_order: usize,
    pub presentation: String,
    /// per-irrep terms (character method only)
    pub terms: Vec<IrrepTerm>,
    /// enumeration work performed (brute method only)
    #[serde(serialize_with = "serialize_u128")]
    pub work: u128,
}

pub(crate) fn serialize_biguint<S: serde::Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

pub(crate) fn serialize_u128<S: serde::Serializer>(v: &u128, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

/// Counts assignments `G^k` on which every relator is the identity.
pub fn hom_count_brute(g: &FiniteGroup, p: &Presentation, budget: u64) -> Result<HomCountReport, HomCountError> {
    let e = enumerate(g, p.num_generators(), p.relators(), None, budget)?;
    Ok(HomCountReport {
        count: e.count(),
        method: Method::Brute,
        group: g.name().to_string(),
        group_order: g.order(),
        presentation: p.to_string(),
        terms: Vec::new(),
        work: e.work,
    })
}

/// Fiber sizes `f_q(w) = |q⁻¹(w)|` of the single relator `q`, as a class
/// function. Verifies constancy on classes and total mass `|G|^k`.
pub fn volume_distribution(
    g: &FiniteGroup,
    classes: &ConjugacyData,
    p: &Presentation,
    budget: u64,
) -> Result<ClassFunction<BigRational>, HomCountError> {
    if p.num_relators() != 1 {
        return Err(HomCountError::NotSingleRelator(p.num_relators()));
    }
    let e = enumerate(g, p.num_generators(), &[], Some(&p.relators()[0]), budget)?;
    histogram_to_class_function(g, classes, &e.histogram, p.num_generators())
}

pub(crate) fn histogram_to_class_function(
    g: &FiniteGroup,
    classes: &ConjugacyData,
    histogram: &[BigUint],
    num_vars: usize,
) -> Result<ClassFunction<BigRational>, HomCountError> {
    for x in g.elements() {
        let rep = classes.representative(classes.class_of(x));
        if histogram[x] != histogram[rep] {
            return Err(HomCountError::DistributionCheck(format!(
                "fiber over {} differs from fiber over conjugate {}",
                g.label(x),
                g.label(rep)
            )));
        }
    }
    let mass: BigUint = histogram.iter().sum();
    let expected = BigUint::from(g.order()).pow(num_vars as u32);
    if mass != expected {
        return Err(HomCountError::DistributionCheck(format!(
            "total mass {mass}, expected {expected}"
        )));
    }
    Ok(ClassFunction::new(
        classes
            .representatives()
            .iter()
            .map(|&r| BigRational::from_integer(histogram[r].clone().into()))
            .collect(),
    ))
}

/// Converts an exact rational that must be a nonnegative integer.
pub(crate) fn to_count(v: &BigRational, what: &str) -> Result<BigUint, HomCountError> {
    if !v.is_integer() || v < &BigRational::zero() {
        return Err(HomCountError::NotIntegral(format!("{what} = {v}")));
    }
    v.to_integer()
        .to_biguint()
        .ok_or_else(|| HomCountError::NotIntegral(format!("{what} = {v}")))
}

/// Renders exact class function values as integers where possible.
pub fn class_function_strings(f: &ClassFunction<BigRational>) -> Vec<String> {
    f.values().iter().map(|v| v.to_string()).collect()
}

/// `f64` view of an exact class function, for display.
pub fn class_function_f64(f: &ClassFunction<BigRational>) -> Vec<f64> {
    f.values().iter().map(|v| v.to_f64().unwrap_or(f64::NAN)).collect()
}
