use std::fmt;

use super::GroupError;

/// A permutation of `0..degree`, stored as its image list.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<u16>);

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm((0..degree as u16).collect())
    }

    /// Panics unless `images` is a permutation of `0..images.len()`.
    pub fn from_images(images: Vec<u16>) -> Self {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            assert!(!std::mem::replace(&mut seen[i as usize], true), "not a permutation");
        }
        Perm(images)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn image(&self, p: usize) -> usize {
        self.0[p] as usize
    }

    /// Apply `self`, then `other`.
    pub fn then(&self, other: &Perm) -> Perm {
        Perm(self.0.iter().map(|&p| other.0[p as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut out = vec![0u16; self.0.len()];
        for (p, &q) in self.0.iter().enumerate() {
            out[q as usize] = p as u16;
        }
        Perm(out)
    }

    pub fn is_even(&self) -> bool {
        let mut seen = vec![false; self.degree()];
        let mut transpositions = 0;
        for start in 0..self.degree() {
            let mut len = 0;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                p = self.image(p);
                len += 1;
            }
            if len > 0 {
                transpositions += len - 1;
            }
        }
        transpositions % 2 == 0
    }

    /// Parses disjoint-cycle notation with 1-based points, e.g. `(1 2 3)(4 5)`.
    /// `()` is the identity. The result has the given degree.
    pub fn parse_cycles(text: &str, degree: usize) -> Result<Perm, GroupError> {
        let mut images: Vec<u16> = (0..degree as u16).collect();
        for cycle in parse_cycle_lists(text)? {
            for (i, &p) in cycle.iter().enumerate() {
                let q = cycle[(i + 1) % cycle.len()];
                if p > degree || q > degree {
                    return Err(GroupError::Malformed(format!("point out of range in {text:?}")));
                }
                images[p - 1] = (q - 1) as u16;
            }
        }
        Ok(Perm(images))
    }
}

/// Splits `(a b c)(d e)` into point lists, checking points are positive and
/// not repeated.
pub(super) fn parse_cycle_lists(text: &str) -> Result<Vec<Vec<usize>>, GroupError> {
    let text = text.trim();
    let mut cycles = Vec::new();
    let mut used = Vec::new();
    let mut rest = text;
    if rest.is_empty() {
        return Err(GroupError::Malformed("empty permutation".into()));
    }
    while !rest.is_empty() {
        let body = rest
            .strip_prefix('(')
            .ok_or_else(|| GroupError::Malformed(format!("expected '(' in {text:?}")))?;
        let close = body
            .find(')')
            .ok_or_else(|| GroupError::Malformed(format!("unclosed cycle in {text:?}")))?;
        let points = body[..close]
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|s| !s.is_empty())
            .map(|s| match s.parse::<usize>() {
                Ok(p) if p >= 1 => Ok(p),
                _ => Err(GroupError::Malformed(format!("bad point {s:?}"))),
            })
            .collect::<Result<Vec<_>, _>>()?;
        for &p in &points {
            if used.contains(&p) {
                return Err(GroupError::Malformed(format!("point {p} repeated in {text:?}")));
            }
            used.push(p);
        }
        if !points.is_empty() {
            cycles.push(points);
        }
        rest = body[close + 1..].trim_start();
    }
    Ok(cycles)
}

impl fmt::Display for Perm {
    /// 1-based disjoint cycles, `()` for the identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = vec![false; self.degree()];
        let mut any = false;
        for start in 0..self.degree() {
            if seen[start] || self.image(start) == start {
                continue;
            }
            any = true;
            write!(f, "(")?;
            let mut p = start;
            let mut first = true;
            while !seen[p] {
                seen[p] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{}", p + 1)?;
                first = false;
                p = self.image(p);
            }
            write!(f, ")")?;
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}
