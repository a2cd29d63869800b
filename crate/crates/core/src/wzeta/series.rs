//! Truncated sums with certified tails.
//!
//! A decreasing positive series over an arithmetic progression
//! `d = a, a + q, …` with terms `f(d) = d^{-s}` has its tail beyond the
//! cutoff bracketed by `[I, I + f(d₀)]`, `I = ∫_{d₀}^∞ f / q`, where `d₀` is
//! the first omitted term. The estimate uses the midpoint of the bracket.

use rayon::prelude::*;

use super::{Convergence, LieFamily, SeriesResult, WzetaError};
use crate::scalar::{NeumaierSum, Real};

const FIRST_CUTOFF: u64 = 64;
/// Largest single-series cutoff tried before giving up.
const MAX_CUTOFF: u64 = 1 << 27;
/// Largest number of lattice points in an SU(n) box.
const MAX_BOX_TERMS: u64 = 1 << 27;

fn real<T: Real>(x: f64) -> T {
    T::from_f64(x).expect("finite constant")
}

fn rounding<T: Real>(abs_mass: T) -> T {
    real::<T>(8.0) * T::epsilon() * abs_mass
}

/// Partial sum over `d = a, a + q, … ≤ n` and the tail bracket.
struct Progression<T> {
    partial: NeumaierSum<T>,
    abs_mass: T,
    tail_low: T,
    tail_width: T,
}

impl<T: Real> Progression<T> {
    fn sum(a: u64, q: u64, n: u64, s: T) -> Self {
        let mut partial = NeumaierSum::default();
        let mut d = a;
        while d <= n {
            partial.add(T::from_u64(d).unwrap().powf(-s));
            d += q;
        }
        let first = T::from_u64(d).unwrap();
        let tail_low = first.powf(T::one() - s) / (T::from_u64(q).unwrap() * (s - T::one()));
        let abs_mass = partial.value();
        Self {
            partial,
            abs_mass,
            tail_low,
            tail_width: first.powf(-s),
        }
    }

    fn estimate(&self) -> T {
        self.partial.value() + self.tail_low + self.tail_width / real(2.0)
    }
}

/// `ζ(s) = Σ_{d ≥ 1} d^{-s}` truncated at `cutoff`, for real `s > 1`.
fn zeta_at_cutoff<T: Real>(s: T, cutoff: u64) -> SeriesResult<T> {
    let p = Progression::sum(1, 1, cutoff, s);
    SeriesResult {
        value: p.estimate(),
        partial_sum: p.partial.value(),
        cutoff,
        tail_bound: p.tail_width / real(2.0),
        rounding_bound: rounding(p.abs_mass),
        convergence: Convergence::Absolute,
    }
}

/// Doubles the cutoff from [`FIRST_CUTOFF`] until the error bound is at most
/// `tol`.
fn refine<T: Real>(
    tol: T,
    max_cutoff: u64,
    mut at: impl FnMut(u64) -> SeriesResult<T>,
) -> Result<SeriesResult<T>, WzetaError> {
    let mut n = FIRST_CUTOFF;
    loop {
        let r = at(n);
        if r.error_bound() <= tol {
            return Ok(r);
        }
        if r.rounding_bound > tol || n * 2 > max_cutoff {
            return Err(WzetaError::ToleranceNotReached {
                tol: tol.to_f64().unwrap_or(f64::NAN),
                bound: r.error_bound().to_f64().unwrap_or(f64::NAN),
                cutoff: n,
            });
        }
        n *= 2;
    }
}

/// Riemann zeta at real `s > 1`, to within `tol`.
pub fn zeta<T: Real>(s: T, tol: T) -> Result<SeriesResult<T>, WzetaError> {
    if s <= T::one() {
        return Err(WzetaError::Divergent(format!(
            "ζ(s) needs s > 1, got {}",
            s.to_f64().unwrap_or(f64::NAN)
        )));
    }
    refine(tol, MAX_CUTOFF, |n| zeta_at_cutoff(s, n))
}

fn orientable_exponent(family: LieFamily, genus: u32) -> Result<u32, WzetaError> {
    match family {
        LieFamily::Torus(n) => Err(WzetaError::Divergent(format!(
            "every irrep of T^{n} has dimension 1, so the sum has infinitely many terms equal to 1; \
             the volume is |T^{n}|^{{1−χ}} instead"
        ))),
        LieFamily::Su(n) if genus <= 1 => Err(WzetaError::Divergent(format!(
            "Σ (dim λ)^(2−2g) over SU({n}) never converges for g = 0 and g = 1"
        ))),
        LieFamily::Su(_) => Ok(2 * genus - 2),
    }
}

/// `Σ_λ (dim λ)^{2−2g}` truncated at `cutoff`: dimensions `d ≤ cutoff` for
/// SU(2), shifted weights in `[1, cutoff]^{n−1}` for SU(n).
pub fn orientable_series_at_cutoff<T: Real>(
    family: LieFamily,
    genus: u32,
    cutoff: u64,
) -> Result<SeriesResult<T>, WzetaError> {
    let s = orientable_exponent(family, genus)?;
    match family {
        LieFamily::Su(2) => Ok(zeta_at_cutoff(T::from_u32(s).unwrap(), cutoff)),
        LieFamily::Su(n) => Ok(su_box(n as usize - 1, s, cutoff)),
        LieFamily::Torus(_) => unreachable!(),
    }
}

/// Volume ratio `Vol(Hom(π₁(S_g), G)) / Vol(G)^{2g−1}` for a compact
/// family, to within `tol`.
pub fn orientable_volume_ratio<T: Real>(family: LieFamily, genus: u32, tol: T) -> Result<SeriesResult<T>, WzetaError> {
    orientable_exponent(family, genus)?;
    let max_cutoff = match family {
        LieFamily::Su(n) if n > 2 => {
            let rank = n - 1;
            let mut c = FIRST_CUTOFF;
            while (c * 2).checked_pow(rank).is_some_and(|t| t <= MAX_BOX_TERMS) {
                c *= 2;
            }
            c
        }
        _ => MAX_CUTOFF,
    };
    refine(tol, max_cutoff, |c| {
        orientable_series_at_cutoff(family, genus, c).expect("exponent already checked")
    })
}

/// Intervals `[i, j]` of `0..rank`.
fn intervals(rank: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..rank).flat_map(move |i| (i..rank).map(move |j| (i, j)))
}

/// Upper bound on `Σ (dim m)^{-s}` over shifted weights with some coordinate
/// above `cutoff`.
///
/// On the region `m_i > N`, each interval containing `i` has sum at least
/// `m_i`, and every other interval has mean at least the geometric mean of
/// its coordinates. That bounds the term by
/// `K_i m_i^{-s c_i} Π_{l ≠ i} m_l^{-s e_l}`, a product of one-variable
/// series, and the union over `i` covers the complement of the box.
fn su_tail_bound(rank: usize, s: f64, cutoff: u64) -> f64 {
    let n = cutoff as f64 + 1.0;
    let tail = |p: f64| n.powf(-p) + n.powf(1.0 - p) / (p - 1.0);
    let full = |p: f64| 1.0 + 1.0 / (p - 1.0);
    (0..rank)
        .map(|i| {
            let mut k = 1.0;
            let mut c = 0.0;
            let mut e = vec![0.0; rank];
            for (a, b) in intervals(rank) {
                let len = (b - a + 1) as f64;
                if (a..=b).contains(&i) {
                    k *= len.powf(s);
                    c += 1.0;
                } else {
                    for el in &mut e[a..=b] {
                        *el += 1.0 / len;
                    }
                }
            }
            let others: f64 = (0..rank).filter(|&l| l != i).map(|l| full(s * e[l])).product();
            k * tail(s * c) * others
        })
        .sum()
}

/// Weyl dimension of a shifted weight as a float.
fn dim_float<T: Real>(m: &[u64]) -> T {
    let mut d = T::one();
    for i in 0..m.len() {
        let mut s = 0u64;
        for (j, &mj) in m.iter().enumerate().skip(i) {
            s += mj;
            d = d * T::from_u64(s).unwrap() / T::from_usize(j - i + 1).unwrap();
        }
    }
    d
}

fn su_box<T: Real>(rank: usize, s: u32, cutoff: u64) -> SeriesResult<T> {
    let exponent = s as i32;
    // one partial sum per leading coordinate, merged in order
    let rows: Vec<NeumaierSum<T>> = (1..=cutoff)
        .into_par_iter()
        .map(|first| {
            let mut acc = NeumaierSum::default();
            let mut m = vec![1u64; rank];
            m[0] = first;
            loop {
                acc.add(dim_float::<T>(&m).powi(-exponent));
                let mut pos = 1;
                while pos < rank && m[pos] == cutoff {
                    m[pos] = 1;
                    pos += 1;
                }
                if pos >= rank {
                    break;
                }
                m[pos] += 1;
            }
            acc
        })
        .collect();
    let mut total = NeumaierSum::default();
    for r in &rows {
        total.merge(r);
    }
    let partial = total.value();
    let half = T::from_f64(su_tail_bound(rank, f64::from(s), cutoff) / 2.0).unwrap();
    SeriesResult {
        value: partial + half,
        partial_sum: partial,
        cutoff,
        tail_bound: half,
        rounding_bound: rounding(partial),
        convergence: Convergence::Absolute,
    }
}

fn check_crosscaps(k: u32) -> Result<(), WzetaError> {
    if k <= 2 {
        return Err(WzetaError::Divergent(format!(
            "Σ ±d^(2−k) over SU(2) diverges for k = {k}; it needs k ≥ 3"
        )));
    }
    Ok(())
}

/// The SU(2) non-orientable sum `Σ_{odd d} d^{2−k} + (−1)^k Σ_{even d} d^{2−k}`
/// with dimensions up to `cutoff`.
///
/// For `k = 3` the series is summed in natural dimension order
/// `1 − 1/2 + 1/3 − …` and flagged conditional; the estimate is the mean of
/// two consecutive partial sums, which bracket the limit.
pub fn nonorientable_series_at_cutoff<T: Real>(k: u32, cutoff: u64) -> Result<SeriesResult<T>, WzetaError> {
    check_crosscaps(k)?;
    if k == 3 {
        let mut sum = NeumaierSum::default();
        let mut abs_mass = T::zero();
        for d in 1..=cutoff {
            let t = T::one() / T::from_u64(d).unwrap();
            abs_mass = abs_mass + t;
            sum.add(if d % 2 == 1 { t } else { -t });
        }
        let next = T::one() / T::from_u64(cutoff + 1).unwrap();
        let next = if cutoff.is_multiple_of(2) { next } else { -next };
        let half = next / real(2.0);
        return Ok(SeriesResult {
            value: sum.value() + half,
            partial_sum: sum.value(),
            cutoff,
            tail_bound: half.abs(),
            rounding_bound: rounding(abs_mass),
            convergence: Convergence::Conditional,
        });
    }
    let s = T::from_u32(k - 2).unwrap();
    let odd = Progression::sum(1, 2, cutoff, s);
    let even = Progression::sum(2, 2, cutoff, s);
    let sign: T = if k.is_multiple_of(2) { T::one() } else { -T::one() };
    Ok(SeriesResult {
        value: odd.estimate() + sign * even.estimate(),
        partial_sum: odd.partial.value() + sign * even.partial.value(),
        cutoff,
        tail_bound: (odd.tail_width + even.tail_width) / real(2.0),
        rounding_bound: rounding(odd.abs_mass + even.abs_mass),
        convergence: Convergence::Absolute,
    })
}

/// Non-orientable SU(2) volume ratio with `k ≥ 3` cross-caps, to within
/// `tol`.
pub fn nonorientable_volume_ratio_su2<T: Real>(k: u32, tol: T) -> Result<SeriesResult<T>, WzetaError> {
    check_crosscaps(k)?;
    refine(tol, MAX_CUTOFF, |c| {
        nonorientable_series_at_cutoff(k, c).expect("k already checked")
    })
}

/// Closed form of the non-orientable SU(2) sum for `k ≥ 4`: `ζ(k−2)` for even
/// `k`, `(1 − 2^{3−k}) ζ(k−2)` for odd `k`.
pub fn nonorientable_closed_form<T: Real>(k: u32, tol: T) -> Result<SeriesResult<T>, WzetaError> {
    check_crosscaps(k)?;
    if k == 3 {
        return Err(WzetaError::Divergent(
            "k = 3 has no absolutely convergent closed form (ζ(1) diverges)".into(),
        ));
    }
    let z = zeta(T::from_u32(k - 2).unwrap(), tol)?;
    if k.is_multiple_of(2) {
        return Ok(z);
    }
    let factor = T::one() - real::<T>(2.0).powi(3 - k as i32);
    Ok(SeriesResult {
        value: z.value * factor,
        partial_sum: z.partial_sum * factor,
        tail_bound: z.tail_bound * factor,
        rounding_bound: z.rounding_bound * factor + T::epsilon() * z.value,
        ..z
    })
}
