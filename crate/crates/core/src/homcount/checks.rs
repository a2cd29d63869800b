//! Identity checks between counts: convolution factorization, the
//! two-delta identity, and invariance under Andrews–Curtis moves.

use num_bigint::BigUint;
use num_rational::BigRational;
use rand::Rng;
use serde::Serialize;

use super::{hom_count_brute, surface_distribution_brute, HomCountError, SurfaceKind};
use crate::chartab::ClassFunction;
use crate::fingroup::{ConjugacyData, FiniteGroup};
use crate::words::{apply_ac_move, AcMove, Letter, Presentation, Word};

#[derive(Debug, Clone, PartialEq)]
pub struct FactorizationReport {
    pub combined: SurfaceKind,
    /// distribution of the combined surface, by enumeration
    pub direct: ClassFunction<BigRational>,
    /// convolution of the two factor distributions, each by enumeration
    pub convolved: ClassFunction<BigRational>,
    pub equal: bool,
}

/// Compares `f_{a+b}` with `f_a ∗ f_b` (genera or cross-cap counts add; the
/// sphere acts as the identity delta).
pub fn convolution_factorization(
    g: &FiniteGroup,
    classes: &ConjugacyData,
    a: SurfaceKind,
    b: SurfaceKind,
    budget: u64,
) -> Result<FactorizationReport, HomCountError> {
    use SurfaceKind::*;
    let combined = match (a, b) {
        (Orientable { genus: 0 }, other) | (other, Orientable { genus: 0 }) => other,
        (Orientable { genus: x }, Orientable { genus: y }) => SurfaceKind::orientable(x + y),
        (NonOrientable { crosscaps: x }, NonOrientable { crosscaps: y }) => SurfaceKind::non_orientable(x + y)?,
        _ => {
            return Err(HomCountError::InvalidSurface(
                "factorization needs two surfaces of the same orientability".into(),
            ))
        }
    };
    let fa = surface_distribution_brute(g, classes, a, budget)?;
    let fb = surface_distribution_brute(g, classes, b, budget)?;
    let direct = surface_distribution_brute(g, classes, combined, budget)?;
    let convolved = fa.convolve(&fb, classes);
    Ok(FactorizationReport {
        combined,
        equal: direct == convolved,
        direct,
        convolved,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DeltaIdentityReport {
    /// `{(x, y) : x = e, y = e}`
    pub both_identity: Vec<(usize, usize)>,
    /// `{(x, y) : x y = e, y = e}`
    pub product_and_second: Vec<(usize, usize)>,
    pub equal: bool,
}

/// Checks `δ(x)δ(y) = δ(xy)δ(y)` as equality of solution sets in `G × G`.
pub fn delta_product_identity_check(g: &FiniteGroup) -> DeltaIdentityReport {
    let e = g.identity();
    let pairs = || g.elements().flat_map(|x| g.elements().map(move |y| (x, y)));
    let both_identity: Vec<_> = pairs().filter(|&(x, y)| x == e && y == e).collect();
    let product_and_second: Vec<_> = pairs().filter(|&(x, y)| g.mul(x, y) == e && y == e).collect();
    DeltaIdentityReport {
        equal: both_identity == product_and_second,
        both_identity,
        product_and_second,
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AcInvarianceReport {
    /// presentation before any move, then after each applied move
    pub presentations: Vec<String>,
    #[serde(serialize_with = "serialize_counts")]
    pub counts: Vec<BigUint>,
    /// all computed counts are equal
    pub consistent: bool,
    /// why the orbit stopped early, if it did
    pub stopped: Option<String>,
}

fn serialize_counts<S: serde::Serializer>(v: &[BigUint], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|c| c.to_string()))
}

/// Applies `moves` in order, counting homomorphisms after each. A failing
/// move or an over-budget count stops the walk and keeps the partial results.
pub fn ac_invariance_check(g: &FiniteGroup, p: &Presentation, moves: &[AcMove], budget: u64) -> AcInvarianceReport {
    let mut presentations = vec![p.to_string()];
    let mut counts = Vec::new();
    let mut stopped = None;
    let mut current = p.clone();
    match hom_count_brute(g, &current, budget) {
        Ok(r) => counts.push(r.count),
        Err(e) => stopped = Some(e.to_string()),
    }
    if stopped.is_none() {
        for m in moves {
            let next = match apply_ac_move(&current, m) {
                Ok(next) => next,
                Err(e) => {
                    stopped = Some(format!("{}: {e}", m.describe(&current)));
                    break;
                }
            };
            presentations.push(next.to_string());
            match hom_count_brute(g, &next, budget) {
                Ok(r) => counts.push(r.count),
                Err(e) => {
                    stopped = Some(e.to_string());
                    break;
                }
            }
            current = next;
        }
    }
    AcInvarianceReport {
        consistent: counts.windows(2).all(|w| w[0] == w[1]),
        presentations,
        counts,
        stopped,
    }
}

/// A random sequence of `len` valid moves starting at `p`, never exceeding
/// `max_generators` generators. Returns the moves and the final presentation.
pub fn random_ac_sequence<R: Rng>(
    rng: &mut R,
    p: &Presentation,
    len: usize,
    max_generators: usize,
) -> (Vec<AcMove>, Presentation) {
    let mut current = p.clone();
    let mut moves = Vec::with_capacity(len);
    while moves.len() < len {
        let k = current.num_generators();
        let r = current.num_relators();
        let candidate = match rng.random_range(0..6) {
            0 if r >= 2 => AcMove::Swap(rng.random_range(1..r)),
            1 if r >= 1 && k >= 1 => {
                let n = rng.random_range(1..=3);
                let letters = (0..n).map(|_| Letter::new(rng.random_range(0..k), rng.random_bool(0.5)));
                AcMove::Conjugate(Word::reduce(letters))
            }
            2 if r >= 1 => AcMove::Invert,
            3 if r >= 2 => AcMove::Multiply,
            4 if k < max_generators => AcMove::AddGenerator(None),
            5 if k >= 1 => AcMove::DeleteGenerator(rng.random_range(0..k)),
            _ => continue,
        };
        if let Ok(next) = apply_ac_move(&current, &candidate) {
            current = next;
            moves.push(candidate);
        }
        if r == 0 && k == 0 && max_generators == 0 {
            break;
        }
    }
    (moves, current)
}
