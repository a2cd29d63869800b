use super::FiniteGroup;

/// Conjugacy classes of a group: the identity class first, the rest ordered
/// by their minimal element index,
/// together with the data class functions need: inverse and square maps on
/// classes and the class multiplication coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugacyData {
    order: usize,
    class_of: Vec<u32>,
    sizes: Vec<usize>,
    representatives: Vec<usize>,
    inverse_class: Vec<usize>,
    square_class: Vec<usize>,
    // coefficients[(a * r + b) * r + c] = #{(x, y) ∈ C_a × C_b : x y = rep_c}
    coefficients: Vec<u64>,
}

impl ConjugacyData {
    pub fn compute(g: &FiniteGroup) -> Self {
        let n = g.order();
        let mut class_of = vec![u32::MAX; n];
        let mut sizes = Vec::new();
        let mut representatives = Vec::new();
        let sweep = std::iter::once(g.identity()).chain(g.elements());
        for x in sweep {
            if class_of[x] != u32::MAX {
                continue;
            }
            let c = sizes.len() as u32;
            let mut size = 0;
            for y in g.elements() {
                let z = g.conjugate(y, x);
                if class_of[z] == u32::MAX {
                    class_of[z] = c;
                    size += 1;
                }
            }
            sizes.push(size);
            representatives.push(x);
        }
        let r = sizes.len();
        let cls = |x: usize| class_of[x] as usize;
        let inverse_class = representatives.iter().map(|&x| cls(g.inv(x))).collect();
        let square_class = representatives.iter().map(|&x| cls(g.mul(x, x))).collect();
        let mut coefficients = vec![0u64; r * r * r];
        for (c, &rep) in representatives.iter().enumerate() {
            for x in g.elements() {
                let y = g.mul(g.inv(x), rep);
                coefficients[(cls(x) * r + cls(y)) * r + c] += 1;
            }
        }
        Self {
            order: n,
            class_of,
            sizes,
            representatives,
            inverse_class,
            square_class,
            coefficients,
        }
    }

    pub fn group_order(&self) -> usize {
        self.order
    }

    pub fn num_classes(&self) -> usize {
        self.sizes.len()
    }

    pub fn class_of(&self, x: usize) -> usize {
        self.class_of[x] as usize
    }

    pub fn class_sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn class_size(&self, c: usize) -> usize {
        self.sizes[c]
    }

    pub fn representative(&self, c: usize) -> usize {
        self.representatives[c]
    }

    pub fn representatives(&self) -> &[usize] {
        &self.representatives
    }

    /// Order of the centralizer of any element of class `c`.
    pub fn centralizer_order(&self, c: usize) -> usize {
        self.order / self.sizes[c]
    }

    /// Class of `x⁻¹` for `x` in class `c`.
    pub fn inverse_class(&self, c: usize) -> usize {
        self.inverse_class[c]
    }

    /// Class of `x²` for `x` in class `c`.
    pub fn square_class(&self, c: usize) -> usize {
        self.square_class[c]
    }

    /// Number of pairs `(x, y) ∈ C_a × C_b` with `x y` equal to the
    /// representative of class `c`.
    pub fn class_coefficient(&self, a: usize, b: usize, c: usize) -> u64 {
        let r = self.num_classes();
        self.coefficients[(a * r + b) * r + c]
    }

    /// Always 0.
    pub fn identity_class(&self) -> usize {
        0
    }
}

#[cfg(test)]
mod tests {
    use crate::fingroup::build_group;

    #[test]
    fn class_coefficients_count_products() {
        let g = build_group("S3").unwrap();
        let c = g.conjugacy_classes();
        // transposition · transposition = e in 3 ways, = a fixed 3-cycle in 3 ways
        assert_eq!(c.class_coefficient(1, 1, 0), 3);
        assert_eq!(c.class_coefficient(1, 1, 2), 3);
        assert_eq!(c.class_coefficient(1, 1, 1), 0);
        // Σ_c |C_c| coeff(a, b, c) = |C_a| |C_b|
        for a in 0..3 {
            for b in 0..3 {
                let total: u64 = (0..3)
                    .map(|k| c.class_size(k) as u64 * c.class_coefficient(a, b, k))
                    .sum();
                assert_eq!(total, (c.class_size(a) * c.class_size(b)) as u64);
            }
        }
    }

    #[test]
    fn power_maps() {
        let g = build_group("Q8").unwrap();
        let c = g.conjugacy_classes();
        assert_eq!(c.square_class(2), 1);
        assert_eq!(c.square_class(1), 0);
        for k in 0..c.num_classes() {
            assert_eq!(c.inverse_class(k), k);
        }
        let z3 = build_group("Z3").unwrap().conjugacy_classes();
        assert_eq!(z3.inverse_class(1), 2);
    }
}
