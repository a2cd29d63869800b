//! Complex character tables, Frobenius–Schur indicators, and the class
//! function algebra in counting-measure normalization (the integral over `G`
//! is the plain sum over its elements).
//!
//! Characters are computed by the Burnside–Dixon route: the class sums span
//! the centre of the group algebra, and the central characters are the joint
//! eigenvectors of left multiplication by class sums. In the orthonormal basis
//! `C_k / √|C_k|` multiplication by `C_j` has adjoint multiplication by the
//! inverse class, so a random combination
//! `Σ ρ_j (A_j + A_jᵀ) + i σ_j (A_j − A_jᵀ)` is Hermitian with simple spectrum
//! and a single Hermitian eigensolve separates all irreducibles.

mod classfn;
mod export;

use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::fingroup::{ConjugacyData, FiniteGroup};

pub(crate) use classfn::round_scaled;
pub use classfn::{
    character_expand, character_function, delta_class_function, eta_class_function, reconstruct, ClassFunction,
};

/// Orthogonality residual accepted when validating a computed table.
pub const ORTHOGONALITY_TOLERANCE: f64 = 1e-9;
/// Residual accepted when rounding a quantity that must be an integer.
pub const ROUNDING_TOLERANCE: f64 = 1e-6;

const SNAP_TOLERANCE: f64 = 1e-10;
const MAX_ATTEMPTS: u64 = 32;

#[derive(Debug, thiserror::Error, Clone, PartialEq)]
pub enum CharTableError {
    #[error("could not separate the irreducible characters after {0} random class-sum combinations")]
    Degenerate(u64),
    #[error("character table failed validation: {what} (residual {residual:e})")]
    Validation { what: String, residual: f64 },
    #[error("value {value} is not within {tolerance:e} of an integer")]
    NotIntegral { value: String, tolerance: f64 },
    #[error("irrep index {0} out of range")]
    NoSuchIrrep(usize),
}

/// Frobenius–Schur type of an irreducible character.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
pub enum FsType {
    /// indicator +1
    Real,
    /// indicator 0
    Complex,
    /// indicator −1
    Quaternionic,
}

impl FsType {
    pub fn indicator(self) -> i64 {
        match self {
            FsType::Real => 1,
            FsType::Complex => 0,
            FsType::Quaternionic => -1,
        }
    }
}

/// Irreducible characters of a finite group.
///
/// Irreps are ordered by ascending dimension, then by descending
/// lexicographic order of the `(re, im)` parts of their values along the
/// class order, so index 0 is the trivial character.
#[derive(Debug, Clone)]
pub struct CharacterTable {
    classes: ConjugacyData,
    characters: Vec<Vec<Complex64>>,
    dims: Vec<u64>,
    fs: Vec<i64>,
}

/// The three Frobenius–Schur classes of irreps, as index lists.
#[derive(Debug, Clone, PartialEq, Eq, Default, serde::Serialize)]
pub struct FsPartition {
    pub real: Vec<usize>,
    pub complex: Vec<usize>,
    pub quaternionic: Vec<usize>,
}

impl CharacterTable {
    pub fn compute(g: &FiniteGroup) -> Result<Self, CharTableError> {
        Self::from_classes(g.conjugacy_classes())
    }

    pub fn from_classes(classes: ConjugacyData) -> Result<Self, CharTableError> {
        let order = classes.group_order();
        let r = classes.num_classes();
        let sizes: Vec<f64> = classes.class_sizes().iter().map(|&s| s as f64).collect();

        let multiplication: Vec<DMatrix<f64>> = (0..r)
            .map(|j| {
                DMatrix::from_fn(r, r, |l, k| {
                    (sizes[l] / sizes[k]).sqrt() * classes.class_coefficient(j, k, l) as f64
                })
            })
            .collect();

        let mut characters = None;
        for attempt in 0..MAX_ATTEMPTS {
            let mut rng = ChaCha8Rng::seed_from_u64(0xc4a2_0000 + attempt);
            let mut h = DMatrix::<Complex64>::zeros(r, r);
            for a in &multiplication {
                let rho: f64 = rng.random_range(-1.0..1.0);
                let sigma: f64 = rng.random_range(-1.0..1.0);
                for l in 0..r {
                    for k in 0..r {
                        let sym = a[(l, k)] + a[(k, l)];
                        let anti = a[(l, k)] - a[(k, l)];
                        h[(l, k)] += Complex64::new(rho * sym, sigma * anti);
                    }
                }
            }
            let eig = SymmetricEigen::new(h);
            let mut values: Vec<f64> = eig.eigenvalues.iter().copied().collect();
            values.sort_by(f64::total_cmp);
            let scale = 1.0 + values.iter().fold(0.0f64, |m, v| m.max(v.abs()));
            let min_gap = values.windows(2).map(|w| w[1] - w[0]).fold(f64::INFINITY, f64::min);
            if r > 1 && min_gap < 1e-6 * scale {
                continue;
            }
            characters = Some(
                (0..r)
                    .map(|col| central_character_to_character(&eig.eigenvectors.column(col), &sizes, order))
                    .collect::<Result<Vec<_>, _>>()?,
            );
            break;
        }
        let mut characters = characters.ok_or(CharTableError::Degenerate(MAX_ATTEMPTS))?;

        characters.sort_by(|a, b| {
            let da = a[0].re.round() as u64;
            let db = b[0].re.round() as u64;
            da.cmp(&db).then_with(|| lex_cmp(b, a))
        });
        let dims: Vec<u64> = characters.iter().map(|c| c[0].re.round() as u64).collect();

        let mut table = Self {
            classes,
            characters,
            dims,
            fs: Vec::new(),
        };
        table.validate()?;
        table.fs = (0..r)
            .map(|l| table.compute_indicator(l))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(table)
    }

    fn compute_indicator(&self, irrep: usize) -> Result<i64, CharTableError> {
        let c = &self.classes;
        let sum: Complex64 = (0..c.num_classes())
            .map(|k| self.characters[irrep][c.square_class(k)] * c.class_size(k) as f64)
            .sum();
        let value = sum / c.group_order() as f64;
        let rounded = round_checked(value)?;
        if !(-1..=1).contains(&rounded) {
            return Err(CharTableError::Validation {
                what: format!("indicator {rounded} of irrep {irrep} outside {{-1, 0, 1}}"),
                residual: (value.re - rounded as f64).abs(),
            });
        }
        Ok(rounded)
    }

    fn validate(&self) -> Result<(), CharTableError> {
        let order = self.classes.group_order();
        let sum_sq: u64 = self.dims.iter().map(|d| d * d).sum();
        if sum_sq != order as u64 {
            return Err(CharTableError::Validation {
                what: format!("Σ dim² = {sum_sq} but |G| = {order}"),
                residual: (sum_sq as f64 - order as f64).abs(),
            });
        }
        let residual = self.orthogonality_residual();
        if residual > ORTHOGONALITY_TOLERANCE {
            return Err(CharTableError::Validation {
                what: "row orthogonality".into(),
                residual,
            });
        }
        for (l, row) in self.characters.iter().enumerate() {
            let d = self.dims[l] as f64;
            if let Some(v) = row.iter().find(|v| v.norm() > d + ORTHOGONALITY_TOLERANCE) {
                return Err(CharTableError::Validation {
                    what: format!("|χ(x)| exceeds dim for irrep {l}"),
                    residual: v.norm() - d,
                });
            }
        }
        Ok(())
    }

    /// Largest deviation of `⟨χ_λ, χ_μ⟩` from `δ_λμ`.
    pub fn orthogonality_residual(&self) -> f64 {
        let r = self.num_irreps();
        let mut worst = 0.0f64;
        for l in 0..r {
            for m in 0..r {
                let ip = self.inner_product(&self.characters[l], &self.characters[m]);
                let target = if l == m { 1.0 } else { 0.0 };
                worst = worst.max((ip - target).norm());
            }
        }
        worst
    }

    /// Largest deviation of `Σ_λ χ_λ(c) conj χ_λ(c')` from
    /// `δ_cc' |G| / |C_c|`.
    pub fn column_orthogonality_residual(&self) -> f64 {
        let r = self.num_irreps();
        let mut worst = 0.0f64;
        for c in 0..r {
            for d in 0..r {
                let s: Complex64 = self.characters.iter().map(|row| row[c] * row[d].conj()).sum();
                let target = if c == d {
                    self.classes.centralizer_order(c) as f64
                } else {
                    0.0
                };
                worst = worst.max((s - target).norm());
            }
        }
        worst
    }

    /// `⟨f, g⟩ = (1/|G|) Σ_x f(x) conj g(x)` for class-indexed values.
    pub fn inner_product(&self, f: &[Complex64], g: &[Complex64]) -> Complex64 {
        let s: Complex64 = (0..self.classes.num_classes())
            .map(|k| f[k] * g[k].conj() * self.classes.class_size(k) as f64)
            .sum();
        s / self.classes.group_order() as f64
    }

    pub fn classes(&self) -> &ConjugacyData {
        &self.classes
    }

    pub fn group_order(&self) -> usize {
        self.classes.group_order()
    }

    pub fn num_irreps(&self) -> usize {
        self.characters.len()
    }

    pub fn character(&self, irrep: usize) -> &[Complex64] {
        &self.characters[irrep]
    }

    pub fn value(&self, irrep: usize, class: usize) -> Complex64 {
        self.characters[irrep][class]
    }

    pub fn dim(&self, irrep: usize) -> u64 {
        self.dims[irrep]
    }

    pub fn dims(&self) -> &[u64] {
        &self.dims
    }

    /// Frobenius–Schur indicator `(1/|G|) Σ_x χ(x²)`, rounded.
    pub fn frobenius_schur_indicator(&self, irrep: usize) -> Result<i64, CharTableError> {
        self.fs.get(irrep).copied().ok_or(CharTableError::NoSuchIrrep(irrep))
    }

    pub fn indicators(&self) -> &[i64] {
        &self.fs
    }

    pub fn fs_type(&self, irrep: usize) -> FsType {
        match self.fs[irrep] {
            1 => FsType::Real,
            0 => FsType::Complex,
            _ => FsType::Quaternionic,
        }
    }

    /// Splits the irreps by indicator +1 / 0 / −1.
    pub fn classify_irreps(&self) -> FsPartition {
        let mut p = FsPartition::default();
        for l in 0..self.num_irreps() {
            match self.fs_type(l) {
                FsType::Real => p.real.push(l),
                FsType::Complex => p.complex.push(l),
                FsType::Quaternionic => p.quaternionic.push(l),
            }
        }
        p
    }

    /// True when every character value is a rational integer.
    pub fn is_integral(&self) -> bool {
        self.characters
            .iter()
            .flatten()
            .all(|v| v.im == 0.0 && v.re == v.re.round())
    }
}

fn central_character_to_character(
    u: &nalgebra::DVectorView<'_, Complex64>,
    sizes: &[f64],
    order: usize,
) -> Result<Vec<Complex64>, CharTableError> {
    // u_k ∝ conj χ(g_k) √|C_k|
    let u0 = u[0];
    if u0.norm() < 1e-12 {
        return Err(CharTableError::Validation {
            what: "eigenvector vanishes on the identity class".into(),
            residual: u0.norm(),
        });
    }
    let ratios: Vec<Complex64> = (0..sizes.len()).map(|k| (u[k] / u0).conj() / sizes[k].sqrt()).collect();
    let norm: f64 = ratios.iter().zip(sizes).map(|(w, s)| w.norm_sqr() * s).sum();
    let dim = (order as f64 / norm).sqrt();
    let rounded = dim.round();
    if (dim - rounded).abs() > ROUNDING_TOLERANCE || rounded < 1.0 {
        return Err(CharTableError::Validation {
            what: format!("irrep dimension {dim} is not a positive integer"),
            residual: (dim - rounded).abs(),
        });
    }
    Ok(ratios.into_iter().map(|w| snap(w * rounded)).collect())
}

fn snap(v: Complex64) -> Complex64 {
    let s = |x: f64| {
        let r = x.round();
        if (x - r).abs() < SNAP_TOLERANCE {
            r + 0.0
        } else {
            x
        }
    };
    Complex64::new(s(v.re), s(v.im))
}

fn lex_cmp(a: &[Complex64], b: &[Complex64]) -> std::cmp::Ordering {
    let key = |x: f64| (x / 1e-9).round() as i64;
    for (x, y) in a.iter().zip(b) {
        let ord = key(x.re).cmp(&key(y.re)).then(key(x.im).cmp(&key(y.im)));
        if ord.is_ne() {
            return ord;
        }
    }
    std::cmp::Ordering::Equal
}

/// Rounds a complex number that must be a real integer, with the
/// [`ROUNDING_TOLERANCE`] residual gate.
pub fn round_checked(value: Complex64) -> Result<i64, CharTableError> {
    let r = value.re.round();
    if (value.re - r).abs() > ROUNDING_TOLERANCE || value.im.abs() > ROUNDING_TOLERANCE {
        return Err(CharTableError::NotIntegral {
            value: format!("{value}"),
            tolerance: ROUNDING_TOLERANCE,
        });
    }
    Ok(r as i64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fingroup::build_group;

    fn table(name: &str) -> CharacterTable {
        CharacterTable::compute(&build_group(name).unwrap()).unwrap()
    }

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    /// FS indicator summed over elements, not through the class power map.
    fn indicator_by_elements(g: &FiniteGroup, t: &CharacterTable, irrep: usize) -> Complex64 {
        let classes = t.classes();
        let s: Complex64 = g
            .elements()
            .map(|x| t.value(irrep, classes.class_of(g.mul(x, x))))
            .sum();
        s / g.order() as f64
    }

    #[test]
    fn z2_table() {
        let t = table("Z2");
        assert_eq!(t.character(0), &[c(1.0), c(1.0)]);
        assert_eq!(t.character(1), &[c(1.0), c(-1.0)]);
        assert_eq!(t.character(1).len(), 2);
    }

    #[test]
    fn s3_table() {
        let t = table("S3");
        assert_eq!(t.dims(), &[1, 1, 2]);
        assert_eq!(t.character(2), &[c(2.0), c(0.0), c(-1.0)]);
        assert_eq!(t.character(0), &[c(1.0), c(1.0), c(1.0)]);
        assert_eq!(t.character(1), &[c(1.0), c(-1.0), c(1.0)]);
        assert_eq!(t.indicators(), &[1, 1, 1]);
        let p = t.classify_irreps();
        assert_eq!(p.real, vec![0, 1, 2]);
        assert!(p.complex.is_empty() && p.quaternionic.is_empty());
    }

    #[test]
    fn q8_table_and_indicators() {
        let g = build_group("Q8").unwrap();
        let t = CharacterTable::compute(&g).unwrap();
        assert_eq!(t.dims(), &[1, 1, 1, 1, 2]);
        assert_eq!(t.frobenius_schur_indicator(4).unwrap(), -1);
        for l in 0..5 {
            let brute = indicator_by_elements(&g, &t, l);
            assert!((brute - t.indicators()[l] as f64).norm() < 1e-12);
        }
        let p = t.classify_irreps();
        assert_eq!(p.real.len(), 4);
        assert_eq!(p.quaternionic, vec![4]);
        assert!(t.frobenius_schur_indicator(5).is_err());
    }

    #[test]
    fn z3_has_complex_pair() {
        let t = table("Z3");
        let p = t.classify_irreps();
        assert_eq!(p.real.len(), 1);
        assert_eq!(p.complex.len(), 2);
        assert_eq!(t.fs_type(p.real[0]), FsType::Real);
        assert!(t.character(p.real[0]).iter().all(|v| *v == c(1.0)));
        assert!(!t.is_integral());
    }

    #[test]
    fn trivial_character_comes_first() {
        for name in ["Z5", "D5", "A4", "S4", "Q8", "Z1"] {
            let t = table(name);
            assert!(t.character(0).iter().all(|v| *v == c(1.0)), "{name}");
            assert_eq!(t.frobenius_schur_indicator(0).unwrap(), 1, "{name}");
        }
    }

    #[test]
    fn orthogonality_and_bounds_on_catalog() {
        for name in [
            "Z1", "Z2", "Z6", "Z12", "S3", "S4", "A4", "A5", "D4", "D5", "D6", "D12", "Q8",
        ] {
            let g = build_group(name).unwrap();
            let t = CharacterTable::compute(&g).unwrap();
            assert_eq!(t.num_irreps(), t.classes().num_classes());
            assert_eq!(t.dims().iter().map(|d| d * d).sum::<u64>(), g.order() as u64);
            assert!(t.orthogonality_residual() < ORTHOGONALITY_TOLERANCE, "{name}");
            assert!(t.column_orthogonality_residual() < ORTHOGONALITY_TOLERANCE, "{name}");
            for l in 0..t.num_irreps() {
                assert_eq!(t.value(l, 0), c(t.dim(l) as f64));
                let brute = indicator_by_elements(&g, &t, l);
                assert!((brute - t.indicators()[l] as f64).norm() < 1e-6, "{name}");
            }
            let p = t.classify_irreps();
            assert_eq!(p.real.len() + p.complex.len() + p.quaternionic.len(), t.num_irreps());
        }
    }

    #[test]
    fn a5_has_irrational_values() {
        let t = table("A5");
        assert_eq!(t.dims(), &[1, 3, 3, 4, 5]);
        let golden = (1.0 + 5f64.sqrt()) / 2.0;
        assert!(t
            .character(1)
            .iter()
            .chain(t.character(2))
            .any(|v| (v.re - golden).abs() < 1e-9));
    }

    #[test]
    fn round_checked_gate() {
        assert_eq!(round_checked(Complex64::new(3.0000000001, 0.0)).unwrap(), 3);
        assert!(round_checked(Complex64::new(3.01, 0.0)).is_err());
        assert!(round_checked(Complex64::new(3.0, 0.1)).is_err());
    }
}
