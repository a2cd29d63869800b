//! Named groups with fixed element orderings.
//!
//! | name | order | element `i` |
//! |------|-------|-------------|
//! | `Zn` | n | `a^i` |
//! | `Dn` | 2n | `r^i` for `i < n`, then `s r^(i-n)`; `r s = s r⁻¹` |
//! | `Sn` | n! | `i`-th permutation of `0..n` in lexicographic image order |
//! | `An` | n!/2 | `i`-th even permutation in the same order |
//! | `Q8` | 8 | `1, -1, i, -i, j, -j, k, -k` |
//!
//! Permutations compose left to right: `x·y` applies `x` first.

use std::collections::HashMap;

use super::{FiniteGroup, GroupError, Law, Perm};

/// Looks up a catalog group by name, refusing orders above `budget`.
pub fn catalog_group(name: &str, budget: usize) -> Result<FiniteGroup, GroupError> {
    let unknown = || GroupError::UnknownCatalog(name.to_string());
    if name == "Q8" {
        return Ok(quaternion());
    }
    let (kind, digits) = name.split_at(1.min(name.len()));
    let n: usize = digits.parse().map_err(|_| unknown())?;
    if n == 0 {
        return Err(unknown());
    }
    let over = || GroupError::OrderBudgetExceeded { budget };
    match kind {
        "Z" => {
            if n > budget {
                return Err(over());
            }
            let labels = (0..n).map(|i| power_label("a", i)).collect();
            Ok(FiniteGroup::from_law(name.into(), n, 0, Law::Cyclic(n), labels))
        }
        "D" => {
            if 2 * n > budget {
                return Err(over());
            }
            let labels = (0..2 * n)
                .map(|x| {
                    let r = power_label("r", x % n);
                    match (x < n, x % n) {
                        (true, _) => r,
                        (false, 0) => "s".into(),
                        (false, _) => format!("s {r}"),
                    }
                })
                .collect();
            Ok(FiniteGroup::from_law(name.into(), 2 * n, 0, Law::Dihedral(n), labels))
        }
        "S" | "A" => {
            let full = factorial_capped(n, budget.saturating_mul(2) + 1);
            let order = if kind == "A" && n >= 2 { full / 2 } else { full };
            if order > budget {
                return Err(over());
            }
            let perms: Vec<Perm> = lexicographic_perms(n).filter(|p| kind == "S" || p.is_even()).collect();
            Ok(perm_group(name.into(), perms))
        }
        _ => Err(unknown()),
    }
}

/// Catalog names of order at most `max_order`: `Zn`, `Dn` (n ≥ 2), `Sn`
/// (n ≥ 3), `An` (n ≥ 4) and `Q8`. Smaller `Dn`, `Sn`, `An` repeat a cyclic
/// group and are left out.
pub fn catalog_names(max_order: usize) -> Vec<String> {
    let mut names: Vec<String> = (1..=max_order).map(|n| format!("Z{n}")).collect();
    names.extend((2..).take_while(|n| 2 * n <= max_order).map(|n| format!("D{n}")));
    let mut fact = 2;
    for n in 3.. {
        fact *= n;
        if fact / 2 > max_order {
            break;
        }
        if fact <= max_order {
            names.push(format!("S{n}"));
        }
        if n >= 4 {
            names.push(format!("A{n}"));
        }
    }
    if max_order >= 8 {
        names.push("Q8".into());
    }
    names
}

fn power_label(base: &str, i: usize) -> String {
    match i {
        0 => "e".into(),
        1 => base.into(),
        _ => format!("{base}^{i}"),
    }
}

fn factorial_capped(n: usize, cap: usize) -> usize {
    let mut f = 1usize;
    for i in 2..=n {
        f = f.saturating_mul(i);
        if f > cap {
            return cap;
        }
    }
    f
}

fn lexicographic_perms(n: usize) -> impl Iterator<Item = Perm> {
    let mut current: Option<Vec<u16>> = Some((0..n as u16).collect());
    std::iter::from_fn(move || {
        let out = current.clone()?;
        let mut next = out.clone();
        current = next_permutation(&mut next).then_some(next);
        Some(Perm::from_images(out))
    })
}

fn next_permutation(v: &mut [u16]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let Some(i) = (0..v.len() - 1).rev().find(|&i| v[i] < v[i + 1]) else {
        return false;
    };
    let j = (i + 1..v.len()).rev().find(|&j| v[j] > v[i]).expect("exists");
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

/// Wraps an explicit list of permutations (closed under composition, first
/// element the identity) as a group.
pub(super) fn perm_group(name: String, perms: Vec<Perm>) -> FiniteGroup {
    let index: HashMap<Perm, u32> = perms.iter().enumerate().map(|(i, p)| (p.clone(), i as u32)).collect();
    let labels = perms.iter().map(|p| p.to_string()).collect();
    FiniteGroup::from_law(name, perms.len(), 0, Law::Perm { perms, index }, labels)
}

fn quaternion() -> FiniteGroup {
    // element 2u + s is (-1)^s times unit u ∈ {1, i, j, k}
    const UNIT: [[(usize, usize); 4]; 4] = [
        [(0, 0), (1, 0), (2, 0), (3, 0)],
        [(1, 0), (0, 1), (3, 0), (2, 1)],
        [(2, 0), (3, 1), (0, 1), (1, 0)],
        [(3, 0), (2, 0), (1, 1), (0, 1)],
    ];
    let mut table = Vec::with_capacity(64);
    for a in 0..8 {
        for b in 0..8 {
            let (u, s) = UNIT[a / 2][b / 2];
            table.push((2 * u + (s + a % 2 + b % 2) % 2) as u32);
        }
    }
    let labels = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"].map(String::from).to_vec();
    let mut g = FiniteGroup::from_table("Q8", 8, table).expect("Q8 table");
    g.labels = labels;
    g
}
