//! Concrete finite groups on dense element indices.
//!
//! Elements are `0..order`. Groups up to [`TABLE_THRESHOLD`] elements carry a
//! precomputed multiplication table; larger ones multiply on demand through
//! their defining law (permutations or an arithmetic rule).

mod catalog;
mod conjugacy;
mod perm;
mod spec;

use std::collections::HashMap;
use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub use catalog::{catalog_group, catalog_names};
pub use conjugacy::ConjugacyData;
pub use perm::Perm;
pub use spec::{build_group, parse_table_text, GroupBuilder};

/// Groups at or below this order get a full multiplication table.
pub const TABLE_THRESHOLD: usize = 512;

/// Default cap on the order of a group built by closure.
pub const DEFAULT_ORDER_BUDGET: usize = 2000;

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("malformed group spec: {0}")]
    Malformed(String),
    #[error("unknown catalog group {0:?}")]
    UnknownCatalog(String),
    #[error("multiplication table is not a group: {0}")]
    NotAGroup(String),
    #[error("group order exceeds the budget of {budget} elements")]
    OrderBudgetExceeded { budget: usize },
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
}

#[derive(Debug, Clone)]
enum Law {
    Table(Vec<u32>),
    Cyclic(usize),
    Dihedral(usize),
    Perm {
        perms: Vec<Perm>,
        index: HashMap<Perm, u32>,
    },
}

/// An immutable finite group.
#[derive(Debug, Clone)]
pub struct FiniteGroup {
    name: String,
    order: usize,
    identity: usize,
    law: Law,
    inv: Vec<u32>,
    labels: Vec<String>,
}

impl FiniteGroup {
    /// Builds a group from an explicit table (`table[a * n + b] = a·b`) and
    /// checks the group axioms.
    pub fn from_table(name: impl Into<String>, order: usize, table: Vec<u32>) -> Result<Self, GroupError> {
        if order == 0 {
            return Err(GroupError::NotAGroup("empty table".into()));
        }
        if table.len() != order * order {
            return Err(GroupError::NotAGroup(format!(
                "expected {} entries, found {}",
                order * order,
                table.len()
            )));
        }
        if let Some(&bad) = table.iter().find(|&&x| x as usize >= order) {
            return Err(GroupError::NotAGroup(format!("entry {bad} out of range")));
        }
        let mul = |a: usize, b: usize| table[a * order + b] as usize;
        let identity = (0..order)
            .find(|&e| (0..order).all(|x| mul(e, x) == x && mul(x, e) == x))
            .ok_or_else(|| GroupError::NotAGroup("no identity element".into()))?;
        let mut inv = vec![u32::MAX; order];
        for (x, slot) in inv.iter_mut().enumerate() {
            let y = (0..order)
                .find(|&y| mul(x, y) == identity)
                .ok_or_else(|| GroupError::NotAGroup(format!("element {x} has no inverse")))?;
            if mul(y, x) != identity {
                return Err(GroupError::NotAGroup(format!("element {x} has no two-sided inverse")));
            }
            *slot = y as u32;
        }
        check_associative(order, &mul)?;
        let labels = (0..order).map(|i| format!("g{i}")).collect();
        Ok(Self {
            name: name.into(),
            order,
            identity,
            law: Law::Table(table),
            inv,
            labels,
        })
    }

    fn from_law(name: String, order: usize, identity: usize, law: Law, labels: Vec<String>) -> Self {
        let mut g = Self {
            name,
            order,
            identity,
            law,
            inv: Vec::new(),
            labels,
        };
        g.inv = (0..order).map(|x| g.compute_inverse(x) as u32).collect();
        if order <= TABLE_THRESHOLD && !matches!(g.law, Law::Table(_)) {
            let mut table = Vec::with_capacity(order * order);
            for a in 0..order {
                for b in 0..order {
                    table.push(g.mul(a, b) as u32);
                }
            }
            g.law = Law::Table(table);
        }
        g
    }

    fn compute_inverse(&self, x: usize) -> usize {
        match &self.law {
            Law::Cyclic(n) => (n - x) % n,
            Law::Dihedral(n) => {
                if x < *n {
                    (n - x) % n
                } else {
                    x
                }
            }
            Law::Perm { perms, index } => index[&perms[x].inverse()] as usize,
            Law::Table(t) => (0..self.order)
                .find(|&y| t[x * self.order + y] as usize == self.identity)
                .expect("validated table"),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        match &self.law {
            Law::Table(t) => t[a * self.order + b] as usize,
            Law::Cyclic(n) => (a + b) % n,
            // s^f r^i · s^g r^j = s^(f+g) r^((-1)^g i + j)
            Law::Dihedral(n) => {
                let (f, i) = (a / n, a % n);
                let (g, j) = (b / n, b % n);
                let i = if g == 1 { (n - i) % n } else { i };
                ((f + g) % 2) * n + (i + j) % n
            }
            Law::Perm { perms, index } => index[&perms[a].then(&perms[b])] as usize,
        }
    }

    #[inline]
    pub fn inv(&self, x: usize) -> usize {
        self.inv[x] as usize
    }

    /// `y x y⁻¹`.
    #[inline]
    pub fn conjugate(&self, y: usize, x: usize) -> usize {
        self.mul(self.mul(y, x), self.inv(y))
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// The flat multiplication table when one is stored.
    pub fn table(&self) -> Option<&[u32]> {
        match &self.law {
            Law::Table(t) => Some(t),
            _ => None,
        }
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    /// Number of `y` with `y x y⁻¹ = x`.
    pub fn centralizer_order(&self, x: usize) -> usize {
        self.elements().filter(|&y| self.mul(y, x) == self.mul(x, y)).count()
    }

    pub fn conjugacy_classes(&self) -> ConjugacyData {
        ConjugacyData::compute(self)
    }

    pub fn is_abelian(&self) -> bool {
        self.elements()
            .all(|a| (a + 1..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Whitespace-separated table: order header then the `order × order`
    /// matrix, rows indexed by the left factor. Readable by `table:` specs.
    pub fn to_table_text(&self) -> String {
        let mut out = format!("{}\n", self.order);
        for a in self.elements() {
            let row: Vec<String> = self.elements().map(|b| self.mul(a, b).to_string()).collect();
            let _ = writeln!(out, "{}", row.join(" "));
        }
        out
    }

    /// Re-checks the axioms: associativity (exhaustive up to order 60,
    /// sampled above), identity, inverses.
    pub fn validate(&self) -> Result<(), GroupError> {
        let e = self.identity;
        for x in self.elements() {
            if self.mul(e, x) != x || self.mul(x, e) != x {
                return Err(GroupError::NotAGroup(format!("{e} is not an identity for {x}")));
            }
            if self.mul(x, self.inv(x)) != e {
                return Err(GroupError::NotAGroup(format!("bad inverse for {x}")));
            }
        }
        check_associative(self.order, &|a, b| self.mul(a, b))
    }
}

const EXHAUSTIVE_ASSOCIATIVITY_LIMIT: usize = 60;
const ASSOCIATIVITY_SAMPLES: usize = 20_000;

fn check_associative(order: usize, mul: &dyn Fn(usize, usize) -> usize) -> Result<(), GroupError> {
    let check = |a: usize, b: usize, c: usize| {
        if mul(mul(a, b), c) != mul(a, mul(b, c)) {
            Err(GroupError::NotAGroup(format!("({a}·{b})·{c} ≠ {a}·({b}·{c})")))
        } else {
            Ok(())
        }
    };
    if order <= EXHAUSTIVE_ASSOCIATIVITY_LIMIT {
        for a in 0..order {
            for b in 0..order {
                for c in 0..order {
                    check(a, b, c)?;
                }
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_a550c);
        for _ in 0..ASSOCIATIVITY_SAMPLES {
            check(
                rng.random_range(0..order),
                rng.random_range(0..order),
                rng.random_range(0..order),
            )?;
        }
    }
    Ok(())
}
