use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::FromPrimitive;

use super::{round_checked, CharTableError, CharacterTable};
use crate::fingroup::{ConjugacyData, FiniteGroup};
use crate::scalar::Scalar;

/// A function on a finite group that is constant on conjugacy classes,
/// stored as one value per class.
#[derive(Debug, Clone, PartialEq)]
pub struct ClassFunction<T> {
    values: Vec<T>,
}

impl<T: Scalar> ClassFunction<T> {
    pub fn new(values: Vec<T>) -> Self {
        Self { values }
    }

    pub fn zeros(num_classes: usize) -> Self {
        Self {
            values: vec![T::zero(); num_classes],
        }
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn into_values(self) -> Vec<T> {
        self.values
    }

    pub fn value(&self, class: usize) -> &T {
        &self.values[class]
    }

    pub fn at_element(&self, classes: &ConjugacyData, x: usize) -> &T {
        &self.values[classes.class_of(x)]
    }

    /// `(f ∗ g)(x) = Σ_w f(x w⁻¹) g(w)`, computed through class coefficients.
    pub fn convolve(&self, other: &Self, classes: &ConjugacyData) -> Self {
        let r = classes.num_classes();
        let values = (0..r)
            .map(|c| {
                let mut acc = T::zero();
                for a in 0..r {
                    if self.values[a].is_zero() {
                        continue;
                    }
                    for b in 0..r {
                        let n = classes.class_coefficient(a, b, c);
                        if n != 0 {
                            acc = acc + self.values[a].clone() * other.values[b].clone() * T::from_count(n as i64);
                        }
                    }
                }
                acc
            })
            .collect();
        Self { values }
    }

    /// Pointwise sum.
    pub fn plus(&self, other: &Self) -> Self {
        Self {
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }

    /// Pointwise multiple.
    pub fn scaled(&self, k: &T) -> Self {
        self.map(|v| v.clone() * k.clone())
    }

    /// `f ∗ f ∗ … ∗ f` with `n` factors; `n = 0` gives the identity delta.
    pub fn convolution_power(&self, n: usize, classes: &ConjugacyData) -> Self {
        let mut out = delta_class_function(classes);
        for _ in 0..n {
            out = out.convolve(self, classes);
        }
        out
    }

    /// Sum over all group elements: `Σ_c |C_c| f(c)`.
    pub fn total(&self, classes: &ConjugacyData) -> T {
        self.values.iter().enumerate().fold(T::zero(), |acc, (c, v)| {
            acc + v.clone() * T::from_count(classes.class_size(c) as i64)
        })
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> ClassFunction<U> {
        ClassFunction {
            values: self.values.iter().map(f).collect(),
        }
    }

    pub fn to_complex(&self) -> ClassFunction<Complex64> {
        self.map(Scalar::to_complex)
    }
}

impl ClassFunction<Complex64> {
    /// Rounds every value to an integer, failing if any value is further
    /// than `tolerance` (scaled by `max(1, |v|)`) from one.
    pub fn round_to_integers(&self, tolerance: f64) -> Result<ClassFunction<BigRational>, CharTableError> {
        let values = self
            .values
            .iter()
            .map(|v| round_scaled(*v, tolerance).map(BigRational::from_integer))
            .collect::<Result<_, _>>()?;
        Ok(ClassFunction { values })
    }
}

/// Rounds `v` to an integer, accepting residual up to `tolerance·max(1, |v|)`.
pub(crate) fn round_scaled(v: Complex64, tolerance: f64) -> Result<BigInt, CharTableError> {
    let gate = tolerance * v.norm().max(1.0);
    let r = v.re.round();
    if (v.re - r).abs() > gate || v.im.abs() > gate || !r.is_finite() {
        return Err(CharTableError::NotIntegral {
            value: format!("{v}"),
            tolerance: gate,
        });
    }
    Ok(BigInt::from_f64(r).expect("finite"))
}

/// The point mass at the identity: the unit for convolution.
pub fn delta_class_function<T: Scalar>(classes: &ConjugacyData) -> ClassFunction<T> {
    let mut f = ClassFunction::zeros(classes.num_classes());
    f.values[classes.identity_class()] = T::one();
    f
}

/// `η_x`: the centralizer order of `x` on the class of `x`, zero elsewhere.
/// Summed over class representatives these give the counting function of
/// commuting pairs.
pub fn eta_class_function<T: Scalar>(g: &FiniteGroup, classes: &ConjugacyData, x: usize) -> ClassFunction<T> {
    let mut f = ClassFunction::zeros(classes.num_classes());
    f.values[classes.class_of(x)] = T::from_count(g.centralizer_order(x) as i64);
    f
}

/// The character `χ_λ` as a class function.
pub fn character_function(table: &CharacterTable, irrep: usize) -> ClassFunction<Complex64> {
    ClassFunction::new(table.character(irrep).to_vec())
}

/// Coefficients `a_λ = ⟨f, χ_λ⟩ = (1/|G|) Σ_x f(x) conj χ_λ(x)` of `f` in the
/// character basis.
pub fn character_expand<T: Scalar>(table: &CharacterTable, f: &ClassFunction<T>) -> Vec<Complex64> {
    let values: Vec<Complex64> = f.values.iter().map(Scalar::to_complex).collect();
    (0..table.num_irreps())
        .map(|l| table.inner_product(&values, table.character(l)))
        .collect()
}

/// Inverse of [`character_expand`]: `Σ_λ a_λ χ_λ`.
pub fn reconstruct(table: &CharacterTable, coefficients: &[Complex64]) -> ClassFunction<Complex64> {
    let r = table.num_irreps();
    let values = (0..r)
        .map(|c| (0..r).map(|l| coefficients[l] * table.value(l, c)).sum())
        .collect();
    ClassFunction::new(values)
}

impl CharacterTable {
    /// Rounds each coefficient of an expansion to an integer.
    pub fn integral_coefficients(&self, coefficients: &[Complex64]) -> Result<Vec<i64>, CharTableError> {
        coefficients.iter().map(|&a| round_checked(a)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fingroup::build_group;
    use num_traits::{One, Zero};

    fn brute_convolve(g: &FiniteGroup, c: &ConjugacyData, f: &[i64], h: &[i64]) -> Vec<i64> {
        (0..c.num_classes())
            .map(|k| {
                let x = c.representative(k);
                g.elements()
                    .map(|w| f[c.class_of(g.mul(x, g.inv(w)))] * h[c.class_of(w)])
                    .sum()
            })
            .collect()
    }

    #[test]
    fn convolution_matches_element_sum() {
        for name in ["S3", "Q8", "D5", "A4"] {
            let g = build_group(name).unwrap();
            let c = g.conjugacy_classes();
            let r = c.num_classes();
            let f: Vec<i64> = (0..r as i64).map(|i| 2 * i - 1).collect();
            let h: Vec<i64> = (0..r as i64).map(|i| i * i + 1).collect();
            let ff = ClassFunction::new(f.iter().map(|&v| BigRational::from_count(v)).collect());
            let hh = ClassFunction::new(h.iter().map(|&v| BigRational::from_count(v)).collect());
            let got = ff.convolve(&hh, &c);
            let want = brute_convolve(&g, &c, &f, &h);
            assert_eq!(
                got.values(),
                &want.iter().map(|&v| BigRational::from_count(v)).collect::<Vec<_>>()[..]
            );
        }
    }

    #[test]
    fn delta_is_unit() {
        let g = build_group("D4").unwrap();
        let c = g.conjugacy_classes();
        let f = ClassFunction::new(vec![3.0, -1.0, 0.5, 2.0, 7.0]);
        assert_eq!(f.convolve(&delta_class_function(&c), &c), f);
        assert_eq!(delta_class_function::<f64>(&c).convolve(&f, &c), f);
    }

    #[test]
    fn eta_sum_counts_commuting_pairs() {
        let g = build_group("S3").unwrap();
        let c = g.conjugacy_classes();
        let mut total = ClassFunction::<BigRational>::zeros(c.num_classes());
        for &x in c.representatives() {
            total = total.plus(&eta_class_function(&g, &c, x));
        }
        // 18 commuting pairs in S3
        assert_eq!(total.total(&c), BigRational::from_count(18));
    }

    #[test]
    fn expansion_round_trips() {
        let g = build_group("A4").unwrap();
        let t = CharacterTable::compute(&g).unwrap();
        let f = ClassFunction::new(vec![1.0, -2.0, 0.25, 4.0]);
        let a = character_expand(&t, &f);
        let back = reconstruct(&t, &a);
        for (x, y) in back.values().iter().zip(f.values()) {
            assert!((x - y).norm() < 1e-12);
        }
        let chi = character_function(&t, 3);
        let a = character_expand(&t, &chi);
        assert_eq!(t.integral_coefficients(&a).unwrap(), vec![0, 0, 0, 1]);
    }

    #[test]
    fn characters_are_convolution_idempotents_up_to_scale() {
        // χ ∗ χ = (|G| / d) χ
        let g = build_group("S4").unwrap();
        let t = CharacterTable::compute(&g).unwrap();
        let c = t.classes();
        for l in 0..t.num_irreps() {
            let chi = character_function(&t, l);
            let sq = chi.convolve(&chi, c);
            let scale = g.order() as f64 / t.dim(l) as f64;
            for (x, y) in sq.values().iter().zip(chi.values()) {
                assert!((x - y * scale).norm() < 1e-9);
            }
        }
    }

    #[test]
    fn rounding_gate() {
        let f = ClassFunction::new(vec![Complex64::new(2.0 + 1e-9, 0.0), Complex64::new(-5.0, 1e-10)]);
        let r = f.round_to_integers(1e-6).unwrap();
        assert_eq!(r.values()[0], BigRational::from_count(2));
        let bad = ClassFunction::new(vec![Complex64::new(0.5, 0.0)]);
        assert!(bad.round_to_integers(1e-6).is_err());
        assert!(ClassFunction::<BigRational>::zeros(2)
            .values()
            .iter()
            .all(Zero::is_zero));
        assert!(
            delta_class_function::<BigRational>(&build_group("Z2").unwrap().conjugacy_classes()).values()[0].is_one()
        );
    }
}
