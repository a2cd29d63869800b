//! Free-group words, finite presentations, evaluation in finite groups,
//! substitution, and Andrews–Curtis moves.

mod ac;
mod parse;

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::fingroup::FiniteGroup;

pub use ac::{apply_ac_move, inverse_moves, inverse_moves_from, parse_ac_move, AcMove};
pub use parse::{parse_presentation, parse_word, Presentation};

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum WordError {
    #[error("syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),
    #[error("duplicate generator {0:?}")]
    DuplicateGenerator(String),
    #[error("invalid generator name {0:?}")]
    InvalidGeneratorName(String),
    #[error("relator {0} is empty after free reduction")]
    EmptyRelator(usize),
    #[error("relator {relator} uses generator index {generator} but only {count} generators exist")]
    GeneratorOutOfRange {
        relator: usize,
        generator: usize,
        count: usize,
    },
    #[error("invalid move: {0}")]
    InvalidMove(String),
}

/// One letter `a_i^{±1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub generator: usize,
    pub inverted: bool,
}

impl Letter {
    pub fn new(generator: usize, inverted: bool) -> Self {
        Self { generator, inverted }
    }

    pub fn inverse(self) -> Self {
        Self {
            generator: self.generator,
            inverted: !self.inverted,
        }
    }

    /// `+1` or `-1`.
    pub fn exponent(self) -> i64 {
        if self.inverted {
            -1
        } else {
            1
        }
    }
}

/// A freely reduced word in the free group on numbered generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Self(Vec::new())
    }

    /// Freely reduces an arbitrary letter sequence.
    pub fn reduce(letters: impl IntoIterator<Item = Letter>) -> Self {
        let mut out: Vec<Letter> = Vec::new();
        for l in letters {
            if out.last() == Some(&l.inverse()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Self(out)
    }

    /// The single-letter word `a_i`.
    pub fn generator(i: usize) -> Self {
        Self(vec![Letter::new(i, false)])
    }

    /// `a_i^n`, i.e. `|n|` copies of `a_i` or `a_i⁻¹`.
    pub fn generator_power(i: usize, n: i64) -> Self {
        Self(vec![Letter::new(i, n < 0); n.unsigned_abs() as usize])
    }

    /// `x y x⁻¹ y⁻¹`.
    pub fn commutator(x: &Word, y: &Word) -> Self {
        x.concat(y).concat(&x.inverse()).concat(&y.inverse())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> Self {
        Self(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    pub fn concat(&self, other: &Word) -> Self {
        Self::reduce(self.0.iter().chain(&other.0).copied())
    }

    pub fn pow(&self, n: i64) -> Self {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        (0..n.unsigned_abs()).fold(Word::empty(), |acc, _| acc.concat(&base))
    }

    /// `c w c⁻¹`.
    pub fn conjugate_by(&self, c: &Word) -> Self {
        c.concat(self).concat(&c.inverse())
    }

    /// Largest generator index used, if any.
    pub fn max_generator(&self) -> Option<usize> {
        self.0.iter().map(|l| l.generator).max()
    }

    pub fn uses_generator(&self, i: usize) -> bool {
        self.0.iter().any(|l| l.generator == i)
    }

    /// Signed count of generator `i`.
    pub fn exponent_sum(&self, i: usize) -> i64 {
        self.0.iter().filter(|l| l.generator == i).map(|l| l.exponent()).sum()
    }

    /// Renders the word with run-length exponents, e.g. `a^2 b^-1`.
    /// The empty word renders as `1`.
    pub fn display_with<'a>(&'a self, names: &'a [String]) -> impl fmt::Display + 'a {
        WordDisplay { word: self, names }
    }
}

struct WordDisplay<'a> {
    word: &'a Word,
    names: &'a [String],
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return write!(f, "1");
        }
        let letters = self.word.letters();
        let mut i = 0;
        let mut first = true;
        while i < letters.len() {
            let l = letters[i];
            let run = letters[i..].iter().take_while(|&&m| m == l).count();
            if !first {
                write!(f, " ")?;
            }
            first = false;
            let name = self
                .names
                .get(l.generator)
                .cloned()
                .unwrap_or_else(|| format!("x{}", l.generator));
            let n = run as i64 * l.exponent();
            if n == 1 {
                write!(f, "{name}")?;
            } else {
                write!(f, "{name}^{n}")?;
            }
            i += run;
        }
        Ok(())
    }
}

/// `x_{w(1)}^{ε(1)} ⋯ x_{w(ν)}^{ε(ν)}` in `G`; `assignment[i]` is the image of
/// generator `i`.
pub fn evaluate_word(g: &FiniteGroup, w: &Word, assignment: &[usize]) -> usize {
    w.letters().iter().fold(g.identity(), |acc, l| {
        let x = assignment[l.generator];
        g.mul(acc, if l.inverted { g.inv(x) } else { x })
    })
}

/// Replaces generator `i` by `images[i]` and reduces.
pub fn substitute(w: &Word, images: &[Word]) -> Word {
    Word::reduce(w.letters().iter().flat_map(|l| {
        let image = &images[l.generator];
        let letters: Vec<Letter> = if l.inverted { image.inverse().0 } else { image.0.clone() };
        letters
    }))
}

/// Row `i` holds the signed letter counts of `words[i]` over `k` generators.
pub fn exponent_matrix(words: &[Word], k: usize) -> Vec<Vec<i64>> {
    words
        .iter()
        .map(|w| (0..k).map(|j| w.exponent_sum(j)).collect())
        .collect()
}

/// Exact determinant of a square integer matrix (fraction-free Bareiss
/// elimination).
pub fn integer_determinant(m: &[Vec<i64>]) -> BigInt {
    let n = m.len();
    assert!(m.iter().all(|row| row.len() == n), "matrix must be square");
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = m.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fingroup::build_group;

    fn a(i: usize) -> Letter {
        Letter::new(i, false)
    }
    fn ai(i: usize) -> Letter {
        Letter::new(i, true)
    }

    #[test]
    fn reduction_examples() {
        assert_eq!(Word::reduce([a(0), ai(0), a(1)]), Word::generator(1));
        assert!(Word::reduce([a(0), a(1), ai(1), ai(0)]).is_empty());
        let w = Word::reduce([a(0), a(0), ai(1)]);
        assert_eq!(Word::reduce(w.letters().iter().copied()), w);
    }

    #[test]
    fn evaluation_examples() {
        let q8 = build_group("Q8").unwrap();
        // i · i = -1
        assert_eq!(evaluate_word(&q8, &Word::generator_power(0, 2), &[2]), 1);
        let diag = Word::reduce([a(0), ai(1)]);
        for x in q8.elements() {
            assert_eq!(evaluate_word(&q8, &diag, &[x, x]), q8.identity());
        }
        let comm = Word::commutator(&Word::generator(0), &Word::generator(1));
        assert_eq!(evaluate_word(&q8, &comm, &[2, 1]), q8.identity());
        assert_eq!(evaluate_word(&q8, &Word::empty(), &[]), q8.identity());
    }

    #[test]
    fn display_run_lengths() {
        let names: Vec<String> = ["a", "b"].map(String::from).to_vec();
        let w = Word::reduce([a(0), a(0), a(0), ai(1), a(0)]);
        assert_eq!(w.display_with(&names).to_string(), "a^3 b^-1 a");
        assert_eq!(Word::empty().display_with(&names).to_string(), "1");
    }

    #[test]
    fn determinant() {
        assert_eq!(
            integer_determinant(&[vec![1, 1, 1], vec![-2, -1, -1], vec![1, 0, 1]]),
            BigInt::one()
        );
        assert_eq!(integer_determinant(&[vec![0, 1], vec![1, 0]]), BigInt::from(-1));
        assert_eq!(integer_determinant(&[vec![2, 4], vec![1, 2]]), BigInt::zero());
        assert_eq!(
            integer_determinant(&[vec![0, 2, 1], vec![3, 0, 1], vec![1, 1, 1]]),
            BigInt::from(-1)
        );
        assert_eq!(integer_determinant(&[]), BigInt::one());
    }

    #[test]
    fn exponent_rows() {
        let comm = Word::commutator(&Word::generator(0), &Word::generator(1));
        assert_eq!(exponent_matrix(&[comm], 2), vec![vec![0, 0]]);
        assert_eq!(exponent_matrix(&[Word::generator_power(0, 2)], 1), vec![vec![2]]);
    }

    #[test]
    fn power_and_conjugate() {
        let x = Word::reduce([a(0), a(1)]);
        assert_eq!(x.pow(-1), x.inverse());
        assert_eq!(x.pow(0), Word::empty());
        assert_eq!(x.pow(2).len(), 4);
        assert_eq!(
            x.conjugate_by(&Word::generator(0)),
            Word::reduce([a(0), a(0), a(1), ai(0)])
        );
    }
}
