//! Witten zeta sums `Σ_λ (dim λ)^{-s}` over irreducible representations of
//! compact Lie groups, with certified truncation bounds.
//!
//! Orientable genus `g` needs `s = 2g − 2`; the non-orientable SU(2) sum with
//! `k` cross-caps splits by Frobenius–Schur type (odd dimensions real, even
//! dimensions quaternionic):
//! `Σ_{d odd} d^{2−k} + (−1)^k Σ_{d even} d^{2−k}`.

mod series;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use serde::Serialize;

use crate::homcount::SurfaceKind;
use crate::scalar::Real;

pub use series::{
    nonorientable_closed_form, nonorientable_series_at_cutoff, nonorientable_volume_ratio_su2,
    orientable_series_at_cutoff, orientable_volume_ratio, zeta,
};

#[derive(Debug, thiserror::Error, Clone, PartialEq)]
pub enum WzetaError {
    #[error("series diverges: {0}")]
    Divergent(String),
    #[error("invalid family: {0}")]
    InvalidFamily(String),
    #[error("tolerance {tol:e} not reached: bound {bound:e} at cutoff {cutoff}")]
    ToleranceNotReached { tol: f64, bound: f64, cutoff: u64 },
}

/// A compact Lie group family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum LieFamily {
    /// `SU(n)`, `n ≥ 2`
    Su(u32),
    /// `Tⁿ`, `n ≥ 1`
    Torus(u32),
}

impl LieFamily {
    pub fn su(n: u32) -> Result<Self, WzetaError> {
        if n < 2 {
            return Err(WzetaError::InvalidFamily(format!("SU({n}) needs n ≥ 2")));
        }
        Ok(LieFamily::Su(n))
    }

    pub fn torus(n: u32) -> Result<Self, WzetaError> {
        if n < 1 {
            return Err(WzetaError::InvalidFamily("torus dimension must be at least 1".into()));
        }
        Ok(LieFamily::Torus(n))
    }
}

impl fmt::Display for LieFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LieFamily::Su(n) => write!(f, "SU({n})"),
            LieFamily::Torus(n) => write!(f, "T^{n}"),
        }
    }
}

impl FromStr for LieFamily {
    type Err = WzetaError;

    /// `su2`, `su:N`, `torus:N`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim().to_ascii_lowercase();
        let bad = || WzetaError::InvalidFamily(format!("{s:?} (expected su2, su:N or torus:N)"));
        if s == "su2" {
            return Ok(LieFamily::Su(2));
        }
        if let Some(n) = s.strip_prefix("su:") {
            return LieFamily::su(n.parse().map_err(|_| bad())?);
        }
        if let Some(n) = s.strip_prefix("torus:") {
            return LieFamily::torus(n.parse().map_err(|_| bad())?);
        }
        Err(bad())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Convergence {
    Absolute,
    /// Value depends on the summation order; natural dimension order is used.
    Conditional,
}

/// A truncated series with its error bounds.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SeriesResult<T> {
    /// estimate of the full sum
    pub value: T,
    /// sum of the terms up to the cutoff
    pub partial_sum: T,
    pub cutoff: u64,
    /// bound on `|value − limit|` from truncation
    pub tail_bound: T,
    /// bound on accumulated floating-point error
    pub rounding_bound: T,
    pub convergence: Convergence,
}

impl<T: Real> SeriesResult<T> {
    pub fn error_bound(&self) -> T {
        self.tail_bound + self.rounding_bound
    }
}

/// Dimension of the SU(n) irrep with shifted highest weight
/// `m = (m_1, …, m_{n−1})`, all `m_i ≥ 1`:
/// `Π_{i ≤ j} (m_i + … + m_j) / (j − i + 1)`.
pub fn weyl_dimension_su(m: &[u64]) -> BigUint {
    assert!(m.iter().all(|&x| x >= 1), "shifted weights are positive");
    let mut num = BigUint::from(1u32);
    let mut den = BigUint::from(1u32);
    for i in 0..m.len() {
        let mut s = 0u64;
        for (j, &mj) in m.iter().enumerate().skip(i) {
            s += mj;
            num *= s;
            den *= (j - i + 1) as u64;
        }
    }
    let (q, r) = num.div_rem(&den);
    debug_assert!(r == BigUint::from(0u32));
    q
}

/// `|Hom(π₁(S), Tⁿ)| = |Tⁿ|^{1−χ(S)}`; every irrep of the torus is a real
/// character of dimension 1, so `h₁ = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TorusVolume {
    pub n: u32,
    pub euler_characteristic: i64,
    /// exponent `1 − χ` of `|Tⁿ|`
    pub exponent: i64,
    pub h1: i64,
}

pub fn torus_volume(n: u32, surface: SurfaceKind) -> TorusVolume {
    let chi = surface.euler_characteristic();
    TorusVolume {
        n,
        euler_characteristic: chi,
        exponent: 1 - chi,
        h1: 1,
    }
}

impl fmt::Display for TorusVolume {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.exponent {
            0 => write!(f, "1"),
            1 => write!(f, "|T^{}|", self.n),
            e => write!(f, "|T^{}|^{}", self.n, e),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weyl_dimensions() {
        assert_eq!(weyl_dimension_su(&[7]), BigUint::from(7u32));
        assert_eq!(weyl_dimension_su(&[1, 1]), BigUint::from(1u32));
        assert_eq!(weyl_dimension_su(&[2, 1]), BigUint::from(3u32));
        assert_eq!(weyl_dimension_su(&[2, 2]), BigUint::from(8u32));
        assert_eq!(weyl_dimension_su(&[3, 1]), BigUint::from(6u32));
        // SU(4) adjoint: highest weight (1,0,1) → shifted (2,1,2)
        assert_eq!(weyl_dimension_su(&[2, 1, 2]), BigUint::from(15u32));
    }

    /// Symmetric powers `Sym^p C³` and their duals have dimension
    /// `(p+1)(p+2)/2`.
    #[test]
    fn su3_symmetric_powers() {
        for p in 0..20u64 {
            assert_eq!(weyl_dimension_su(&[p + 1, 1]), BigUint::from((p + 1) * (p + 2) / 2));
            assert_eq!(weyl_dimension_su(&[1, p + 1]), BigUint::from((p + 1) * (p + 2) / 2));
        }
    }

    #[test]
    fn families() {
        assert_eq!("su2".parse::<LieFamily>().unwrap(), LieFamily::Su(2));
        assert_eq!("SU:3".parse::<LieFamily>().unwrap(), LieFamily::Su(3));
        assert_eq!("torus:2".parse::<LieFamily>().unwrap(), LieFamily::Torus(2));
        for bad in ["su:1", "torus:0", "sp:2", "su"] {
            assert!(bad.parse::<LieFamily>().is_err(), "{bad}");
        }
    }

    #[test]
    fn torus_examples() {
        let klein = torus_volume(1, SurfaceKind::NonOrientable { crosscaps: 2 });
        assert_eq!((klein.exponent, klein.to_string()), (1, "|T^1|".to_string()));
        assert_eq!(torus_volume(2, SurfaceKind::orientable(1)).exponent, 1);
        let v = torus_volume(3, SurfaceKind::NonOrientable { crosscaps: 3 });
        assert_eq!(v.to_string(), "|T^3|^2");
        assert_eq!(v.h1, 1);
        assert_eq!(torus_volume(1, SurfaceKind::orientable(0)).to_string(), "|T^1|^-1");
    }
}
