//! Group spec front end: `name` | `perm: (a b c)(d e), ...` | `table: <path>`.

use std::collections::{HashMap, VecDeque};

use super::catalog::{catalog_group, perm_group};
use super::perm::parse_cycle_lists;
use super::{FiniteGroup, GroupError, Perm, DEFAULT_ORDER_BUDGET};

#[derive(Debug, Clone, Copy)]
pub struct GroupBuilder {
    order_budget: usize,
}

impl Default for GroupBuilder {
    fn default() -> Self {
        Self::new()
    }
}

impl GroupBuilder {
    pub fn new() -> Self {
        Self {
            order_budget: DEFAULT_ORDER_BUDGET,
        }
    }

    pub fn order_budget(mut self, budget: usize) -> Self {
        self.order_budget = budget;
        self
    }

    pub fn build(&self, spec: &str) -> Result<FiniteGroup, GroupError> {
        let spec = spec.trim();
        if let Some(rest) = spec.strip_prefix("perm:") {
            self.build_perm(spec, rest)
        } else if let Some(path) = spec.strip_prefix("table:") {
            let path = path.trim();
            let text = std::fs::read_to_string(path).map_err(|e| GroupError::Io {
                path: path.to_string(),
                message: e.to_string(),
            })?;
            let g = parse_table_text(path, &text)?;
            if g.order() > self.order_budget {
                return Err(GroupError::OrderBudgetExceeded {
                    budget: self.order_budget,
                });
            }
            Ok(g)
        } else if spec.is_empty() || spec.contains(char::is_whitespace) {
            Err(GroupError::Malformed(format!("{spec:?}")))
        } else {
            catalog_group(spec, self.order_budget)
        }
    }

    fn build_perm(&self, spec: &str, list: &str) -> Result<FiniteGroup, GroupError> {
        let gens_text = split_top_level(list)?;
        let mut cycle_lists = Vec::new();
        for text in &gens_text {
            cycle_lists.push(parse_cycle_lists(text)?);
        }
        let degree = cycle_lists.iter().flatten().flatten().copied().max().unwrap_or(1);
        if degree > u16::MAX as usize {
            return Err(GroupError::Malformed("too many points".into()));
        }
        let gens = gens_text
            .iter()
            .map(|t| Perm::parse_cycles(t, degree))
            .collect::<Result<Vec<_>, _>>()?;

        let identity = Perm::identity(degree);
        let mut seen: HashMap<Perm, ()> = HashMap::from([(identity.clone(), ())]);
        let mut elements = vec![identity.clone()];
        let mut queue = VecDeque::from([identity]);
        while let Some(x) = queue.pop_front() {
            for s in &gens {
                let y = x.then(s);
                if seen.insert(y.clone(), ()).is_none() {
                    if elements.len() == self.order_budget {
                        return Err(GroupError::OrderBudgetExceeded {
                            budget: self.order_budget,
                        });
                    }
                    elements.push(y.clone());
                    queue.push_back(y);
                }
            }
        }
        Ok(perm_group(spec.to_string(), elements))
    }
}

/// Builds a group from a spec with the default order budget.
pub fn build_group(spec: &str) -> Result<FiniteGroup, GroupError> {
    GroupBuilder::new().build(spec)
}

/// Parses the whitespace-separated table format: order, then `order²`
/// 0-based entries, row = left factor.
pub fn parse_table_text(name: &str, text: &str) -> Result<FiniteGroup, GroupError> {
    let mut tokens = text.split_whitespace().map(|t| {
        t.parse::<u32>()
            .map_err(|_| GroupError::Malformed(format!("bad table entry {t:?}")))
    });
    let order = tokens
        .next()
        .ok_or_else(|| GroupError::Malformed("empty table".into()))?? as usize;
    let entries = tokens.collect::<Result<Vec<_>, _>>()?;
    FiniteGroup::from_table(name, order, entries)
}

fn split_top_level(list: &str) -> Result<Vec<String>, GroupError> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut current = String::new();
    for ch in list.chars() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            _ => {}
        }
        if !(0..=1).contains(&depth) {
            return Err(GroupError::Malformed(format!("unbalanced parentheses in {list:?}")));
        }
        if ch == ',' && depth == 0 {
            out.push(std::mem::take(&mut current));
        } else {
            current.push(ch);
        }
    }
    if depth != 0 {
        return Err(GroupError::Malformed(format!("unbalanced parentheses in {list:?}")));
    }
    out.push(current);
    let out: Vec<String> = out.into_iter().map(|s| s.trim().to_string()).collect();
    if out.iter().any(String::is_empty) {
        return Err(GroupError::Malformed(format!("empty generator in {list:?}")));
    }
    Ok(out)
}
