//! Closed surfaces: standard presentations, brute-force counts, and the
//! character-sum formulas
//!
//! ```text
//! |Hom(π₁Σ_g, G)| = |G|^{1-χ} Σ_λ d_λ^χ                         χ = 2 - 2g
//! |Hom(π₁N_k, G)| = |G|^{1-χ} (Σ_{φ=+1} d_λ^χ + Σ_{φ=-1} (-d_λ)^χ)   χ = 2 - k
//! f_g(w) = Σ_λ (|G|/d_λ)^{2g-1} χ_λ(w)
//! h_k(w) = Σ_{φ=+1} (|G|/d_λ)^{k-1} χ_λ(w) - Σ_{φ=-1} (-|G|/d_λ)^{k-1} χ_λ(w)
//! ```
//!
//! where `φ` is the Frobenius–Schur indicator.

use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use super::{hom_count_brute, to_count, volume_distribution, HomCountError, HomCountReport, IrrepTerm};
use crate::chartab::{delta_class_function, CharacterTable, ClassFunction, FsType, ROUNDING_TOLERANCE};
use crate::fingroup::{ConjugacyData, FiniteGroup};
use crate::words::{Letter, Presentation, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Brute,
    Character,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Brute => "brute",
            Method::Character => "character",
        })
    }
}

/// A closed connected surface.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SurfaceKind {
    /// genus `g ≥ 0`
    Orientable { genus: u32 },
    /// cross-cap genus `k ≥ 1`
    NonOrientable { crosscaps: u32 },
}

impl SurfaceKind {
    pub fn orientable(genus: u32) -> Self {
        SurfaceKind::Orientable { genus }
    }

    pub fn non_orientable(crosscaps: u32) -> Result<Self, HomCountError> {
        if crosscaps == 0 {
            return Err(HomCountError::InvalidSurface(
                "cross-cap genus must be at least 1".into(),
            ));
        }
        Ok(SurfaceKind::NonOrientable { crosscaps })
    }

    /// Surface with the given Euler characteristic and orientability.
    pub fn from_euler_characteristic(chi: i64, orientable: bool) -> Result<Self, HomCountError> {
        if orientable {
            if chi > 2 || chi % 2 != 0 {
                return Err(HomCountError::InvalidSurface(format!(
                    "no orientable surface with χ = {chi}"
                )));
            }
            Ok(Self::orientable(((2 - chi) / 2) as u32))
        } else {
            if chi > 1 {
                return Err(HomCountError::InvalidSurface(format!(
                    "no non-orientable surface with χ = {chi}"
                )));
            }
            Self::non_orientable((2 - chi) as u32)
        }
    }

    pub fn euler_characteristic(self) -> i64 {
        match self {
            SurfaceKind::Orientable { genus } => 2 - 2 * genus as i64,
            SurfaceKind::NonOrientable { crosscaps } => 2 - crosscaps as i64,
        }
    }

    pub fn is_orientable(self) -> bool {
        matches!(self, SurfaceKind::Orientable { .. })
    }
}

impl fmt::Display for SurfaceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SurfaceKind::Orientable { genus: 0 } => write!(f, "sphere"),
            SurfaceKind::Orientable { genus } => write!(f, "orientable genus {genus}"),
            SurfaceKind::NonOrientable { crosscaps: 1 } => write!(f, "projective plane"),
            SurfaceKind::NonOrientable { crosscaps } => write!(f, "non-orientable, {crosscaps} cross-caps"),
        }
    }
}

/// `⟨a1, b1, …, ag, bg | Π [ai, bi]⟩` or `⟨a1, …, ak | a1² ⋯ ak²⟩`; the
/// sphere is `⟨ | ⟩`.
pub fn surface_presentation(kind: SurfaceKind) -> Presentation {
    let (names, relator): (Vec<String>, Vec<Letter>) = match kind {
        SurfaceKind::Orientable { genus } => {
            let g = genus as usize;
            let names = (1..=g).flat_map(|i| [format!("a{i}"), format!("b{i}")]).collect();
            let relator = (0..g)
                .flat_map(|i| {
                    let (a, b) = (2 * i, 2 * i + 1);
                    [
                        Letter::new(a, false),
                        Letter::new(b, false),
                        Letter::new(a, true),
                        Letter::new(b, true),
                    ]
                })
                .collect();
            (names, relator)
        }
        SurfaceKind::NonOrientable { crosscaps } => {
            let k = crosscaps as usize;
            let names = (1..=k).map(|i| format!("a{i}")).collect();
            let relator = (0..k).flat_map(|i| [Letter::new(i, false); 2]).collect();
            (names, relator)
        }
    };
    let relators = if relator.is_empty() {
        Vec::new()
    } else {
        vec![Word::reduce(relator)]
    };
    Presentation::new(names, relators).expect("surface presentation is well formed")
}

fn rational_pow(base: &BigRational, exp: i64) -> BigRational {
    if exp >= 0 {
        num_traits::pow(base.clone(), exp as usize)
    } else {
        num_traits::pow(base.recip(), exp.unsigned_abs() as usize)
    }
}

fn int(v: u64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// Exact character-sum count for a surface group.
pub fn surface_hom_count_character(
    g: &FiniteGroup,
    table: &CharacterTable,
    kind: SurfaceKind,
) -> Result<HomCountReport, HomCountError> {
    let chi = kind.euler_characteristic();
    let order = int(table.group_order() as u64);
    let prefactor = rational_pow(&order, 1 - chi);
    let mut total = BigRational::zero();
    let mut terms = Vec::with_capacity(table.num_irreps());
    for l in 0..table.num_irreps() {
        let d = int(table.dim(l));
        let term = match (kind.is_orientable(), table.fs_type(l)) {
            (true, _) => &prefactor * rational_pow(&d, chi),
            (false, FsType::Real) => &prefactor * rational_pow(&d, chi),
            (false, FsType::Quaternionic) => &prefactor * rational_pow(&-d, chi),
            (false, FsType::Complex) => BigRational::zero(),
        };
        total += &term;
        terms.push(IrrepTerm {
            irrep: l,
            dim: table.dim(l),
            indicator: table.indicators()[l],
            term: term.to_string(),
        });
    }
    Ok(HomCountReport {
        count: to_count(&total, "character sum")?,
        method: Method::Character,
        group: g.name().to_string(),
        group_order: g.order(),
        presentation: surface_presentation(kind).to_string(),
        terms,
        work: 0,
    })
}

/// Surface count by the chosen method. The character method needs a table.
pub fn surface_hom_count(
    g: &FiniteGroup,
    table: Option<&CharacterTable>,
    kind: SurfaceKind,
    method: Method,
    budget: u64,
) -> Result<HomCountReport, HomCountError> {
    match method {
        Method::Brute => hom_count_brute(g, &surface_presentation(kind), budget),
        Method::Character => {
            let owned;
            let table = match table {
                Some(t) => t,
                None => {
                    owned = CharacterTable::compute(g)?;
                    &owned
                }
            };
            surface_hom_count_character(g, table, kind)
        }
    }
}

/// Volume distribution of the surface relator by enumeration; the sphere
/// gives the identity delta.
pub fn surface_distribution_brute(
    g: &FiniteGroup,
    classes: &ConjugacyData,
    kind: SurfaceKind,
    budget: u64,
) -> Result<ClassFunction<BigRational>, HomCountError> {
    let p = surface_presentation(kind);
    if p.num_relators() == 0 {
        return Ok(delta_class_function(classes));
    }
    volume_distribution(g, classes, &p, budget)
}

/// Volume distribution of the surface relator from the character
/// expansion. Exact when every character value is an integer; otherwise the
/// complex sum is rounded with a residual gate scaled by the magnitude.
pub fn surface_distribution_character(
    table: &CharacterTable,
    kind: SurfaceKind,
) -> Result<ClassFunction<BigRational>, HomCountError> {
    let order = table.group_order() as u64;
    let r = table.num_irreps();
    // coefficient of χ_λ, as an exact rational
    let coefficients: Vec<BigRational> = (0..r)
        .map(|l| {
            let ratio = BigRational::new(BigInt::from(order), BigInt::from(table.dim(l)));
            match kind {
                SurfaceKind::Orientable { genus } => rational_pow(&ratio, 2 * genus as i64 - 1),
                SurfaceKind::NonOrientable { crosscaps } => {
                    let e = crosscaps as i64 - 1;
                    match table.fs_type(l) {
                        FsType::Real => rational_pow(&ratio, e),
                        FsType::Quaternionic => -rational_pow(&-ratio, e),
                        FsType::Complex => BigRational::zero(),
                    }
                }
            }
        })
        .collect();

    let values: Vec<BigRational> = if table.is_integral() {
        (0..r)
            .map(|c| {
                (0..r).fold(BigRational::zero(), |acc, l| {
                    acc + &coefficients[l] * BigRational::from_integer(BigInt::from(table.value(l, c).re as i64))
                })
            })
            .collect()
    } else {
        let approx: Vec<f64> = coefficients
            .iter()
            .map(|q| num_traits::ToPrimitive::to_f64(q).unwrap_or(f64::NAN))
            .collect();
        (0..r)
            .map(|c| {
                let v: Complex64 = (0..r).map(|l| table.value(l, c) * approx[l]).sum();
                crate::chartab::round_scaled(v, ROUNDING_TOLERANCE)
                    .map(BigRational::from_integer)
                    .map_err(HomCountError::from)
            })
            .collect::<Result<_, _>>()?
    };
    for v in &values {
        if !v.is_integer() {
            return Err(HomCountError::NotIntegral(format!("distribution value {v}")));
        }
    }
    Ok(ClassFunction::new(values))
}
