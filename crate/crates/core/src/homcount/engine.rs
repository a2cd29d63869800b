//! Exhaustive enumeration of assignments `G^k` with relator pruning.
//!
//! Variables are assigned in index order (an odometer). For every word the
//! engine caches the product of its longest prefix that only involves
//! assigned variables, extending it as each variable is fixed; a constraint
//! word is checked as soon as its last variable is assigned, pruning the
//! subtree when it is not the identity. Variables beyond the last one used
//! by any word only contribute a factor `|G|` each.

use num_bigint::BigUint;
use rayon::prelude::*;

use super::HomCountError;
use crate::fingroup::FiniteGroup;
use crate::words::{Letter, Word};

/// Default cap on enumeration work (letter evaluations plus visited nodes).
pub const DEFAULT_BUDGET: u64 = 1_000_000_000;

/// Fiber sizes of the observed word over all assignments satisfying the
/// constraints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Enumeration {
    /// `histogram[w]` = number of satisfying assignments whose observed word
    /// evaluates to element `w` (all mass sits on the identity when nothing
    /// is observed).
    pub histogram: Vec<BigUint>,
    /// Work actually performed.
    pub work: u128,
    /// Upper bound on work that was checked against the budget.
    pub estimated_work: u128,
}

impl Enumeration {
    /// Total number of satisfying assignments.
    pub fn count(&self) -> BigUint {
        self.histogram.iter().sum()
    }
}

struct Plan {
    depth: usize,
    words: usize,
    observed: Option<usize>,
    /// `steps[d]`: letters appended to each word when variable `d` is fixed
    steps: Vec<Vec<(usize, Vec<Letter>)>>,
    /// `checks[d]`: constraint words fully evaluated once variable `d` is fixed
    checks: Vec<Vec<usize>>,
}

impl Plan {
    fn new(constraints: &[Word], observed: Option<&Word>) -> Self {
        let mut all: Vec<&Word> = constraints.iter().filter(|w| !w.is_empty()).collect();
        let n_constraints = all.len();
        let observed_idx = observed.map(|w| {
            all.push(w);
            all.len() - 1
        });
        let depth = all
            .iter()
            .filter_map(|w| w.max_generator())
            .map(|m| m + 1)
            .max()
            .unwrap_or(0);
        let mut steps = vec![Vec::new(); depth];
        let mut checks = vec![Vec::new(); depth];
        for (wi, w) in all.iter().enumerate() {
            let letters = w.letters();
            let mut pos = 0;
            for (d, step) in steps.iter_mut().enumerate() {
                let end = pos + letters[pos..].iter().take_while(|l| l.generator <= d).count();
                if end > pos {
                    step.push((wi, letters[pos..end].to_vec()));
                }
                pos = end;
                if pos == letters.len() {
                    if wi < n_constraints && !letters.is_empty() {
                        checks[d].push(wi);
                    }
                    break;
                }
            }
        }
        Self {
            depth,
            words: all.len(),
            observed: observed_idx,
            steps,
            checks,
        }
    }

    fn estimate(&self, order: usize) -> u128 {
        let mut total: u128 = 0;
        let mut nodes: u128 = 1;
        for step in &self.steps {
            nodes = nodes.saturating_mul(order as u128);
            let letters: u128 = step.iter().map(|(_, l)| l.len() as u128).sum();
            total = total.saturating_add(nodes.saturating_mul(letters + 1));
        }
        total
    }
}

struct Walker<'a> {
    g: &'a FiniteGroup,
    plan: &'a Plan,
    assignment: Vec<usize>,
    partial: Vec<usize>,
    histogram: Vec<u64>,
    work: u64,
}

impl<'a> Walker<'a> {
    fn new(g: &'a FiniteGroup, plan: &'a Plan) -> Self {
        Self {
            g,
            plan,
            assignment: vec![0; plan.depth],
            partial: vec![g.identity(); (plan.depth + 1) * plan.words],
            histogram: vec![0; g.order()],
            work: 0,
        }
    }

    /// Fixes variable `d` to `x`; returns false if a constraint fails.
    fn fix(&mut self, d: usize, x: usize) -> bool {
        let g = self.g;
        let w = self.plan.words;
        self.assignment[d] = x;
        self.partial.copy_within(d * w..(d + 1) * w, (d + 1) * w);
        for (wi, letters) in &self.plan.steps[d] {
            let mut acc = self.partial[(d + 1) * w + wi];
            for l in letters {
                let v = self.assignment[l.generator];
                acc = g.mul(acc, if l.inverted { g.inv(v) } else { v });
            }
            self.work += letters.len() as u64;
            self.partial[(d + 1) * w + wi] = acc;
        }
        self.work += 1;
        let e = g.identity();
        self.plan.checks[d]
            .iter()
            .all(|&wi| self.partial[(d + 1) * w + wi] == e)
    }

    fn visit(&mut self, d: usize) {
        if d == self.plan.depth {
            let value = match self.plan.observed {
                Some(o) => self.partial[d * self.plan.words + o],
                None => self.g.identity(),
            };
            self.histogram[value] += 1;
            return;
        }
        for x in self.g.elements() {
            if self.fix(d, x) {
                self.visit(d + 1);
            }
        }
    }
}

/// Enumerates `x ∈ G^num_vars`, keeping assignments where every constraint
/// evaluates to the identity, and histograms the value of `observed`.
pub fn enumerate(
    g: &FiniteGroup,
    num_vars: usize,
    constraints: &[Word],
    observed: Option<&Word>,
    budget: u64,
) -> Result<Enumeration, HomCountError> {
    let plan = Plan::new(constraints, observed);
    assert!(plan.depth <= num_vars, "word uses a variable beyond num_vars");
    let estimated_work = plan.estimate(g.order());
    if estimated_work > budget as u128 {
        return Err(HomCountError::BudgetExceeded {
            required: estimated_work,
            budget,
        });
    }

    let (histogram, work) = if plan.depth == 0 {
        let mut h = vec![0u64; g.order()];
        h[g.identity()] = 1;
        (h, 0u64)
    } else {
        g.elements()
            .into_par_iter()
            .map(|x| {
                let mut walker = Walker::new(g, &plan);
                if walker.fix(0, x) {
                    walker.visit(1);
                }
                (walker.histogram, walker.work)
            })
            .reduce(
                || (vec![0u64; g.order()], 0u64),
                |(mut a, wa), (b, wb)| {
                    for (x, y) in a.iter_mut().zip(&b) {
                        *x += y;
                    }
                    (a, wa + wb)
                },
            )
    };

    let free = BigUint::from(g.order()).pow((num_vars - plan.depth) as u32);
    Ok(Enumeration {
        histogram: histogram.into_iter().map(|c| BigUint::from(c) * &free).collect(),
        work: work as u128,
        estimated_work,
    })
}

/// Upper bound on the work [`enumerate`] would need.
pub fn estimate_work(g: &FiniteGroup, constraints: &[Word], observed: Option<&Word>) -> u128 {
    Plan::new(constraints, observed).estimate(g.order())
}
