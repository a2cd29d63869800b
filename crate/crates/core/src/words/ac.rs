//! Andrews–Curtis moves on presentations. All moves act on the first
//! relator `q_1`, except swaps, which bring another relator into first place.

use super::parse::default_names;
use super::{Letter, Presentation, Word, WordError};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum AcMove {
    /// Swap `q_1` with `q_j` (0-based index `j ≥ 1`).
    Swap(usize),
    /// `q_1 → w q_1 w⁻¹`.
    Conjugate(Word),
    /// `q_1 → q_1⁻¹`.
    Invert,
    /// `q_1 → q_1 q_2`.
    Multiply,
    /// Add a generator `a_{k+1}` and the relator `a_{k+1}`; a fresh name is
    /// chosen when none is given.
    AddGenerator(Option<String>),
    /// Delete generator `i` together with a relator equal to `a_i^{±1}`;
    /// `a_i` must occur in no other relator.
    DeleteGenerator(usize),
}

impl AcMove {
    /// Move number 1–6 in the standard list.
    pub fn kind(&self) -> u8 {
        match self {
            AcMove::Swap(_) => 1,
            AcMove::Conjugate(_) => 2,
            AcMove::Invert => 3,
            AcMove::Multiply => 4,
            AcMove::AddGenerator(_) => 5,
            AcMove::DeleteGenerator(_) => 6,
        }
    }

    pub fn describe(&self, p: &Presentation) -> String {
        match self {
            AcMove::Swap(j) => format!("swap q1 q{}", j + 1),
            AcMove::Conjugate(w) => format!("conjugate q1 by {}", p.word_to_string(w)),
            AcMove::Invert => "invert q1".into(),
            AcMove::Multiply => "q1 -> q1 q2".into(),
            AcMove::AddGenerator(Some(name)) => format!("add generator {name}"),
            AcMove::AddGenerator(None) => "add generator".into(),
            AcMove::DeleteGenerator(i) => match p.generator_names().get(*i) {
                Some(name) => format!("delete generator {name}"),
                None => format!("delete generator #{i}"),
            },
        }
    }
}

/// Parses a move: `swap J` (1-based, `J ≥ 2`), `conjugate W`, `invert`,
/// `multiply`, `add [NAME]`, `delete NAME`. Words and names refer to `p`.
pub fn parse_ac_move(text: &str, p: &Presentation) -> Result<AcMove, WordError> {
    let text = text.trim();
    let (head, rest) = text.split_once(char::is_whitespace).unwrap_or((text, ""));
    let rest = rest.trim();
    let bad = |message: String| WordError::InvalidMove(message);
    let no_arg = |m: AcMove| {
        if rest.is_empty() {
            Ok(m)
        } else {
            Err(bad(format!("{head:?} takes no argument")))
        }
    };
    match head.to_ascii_lowercase().as_str() {
        "swap" => {
            let j: usize = rest
                .parse()
                .map_err(|_| bad(format!("swap needs a relator number, got {rest:?}")))?;
            if j < 2 {
                return Err(bad(format!("swap needs a relator number ≥ 2, got {j}")));
            }
            Ok(AcMove::Swap(j - 1))
        }
        "conjugate" | "conj" => Ok(AcMove::Conjugate(p.parse_word(rest)?)),
        "invert" | "inv" => no_arg(AcMove::Invert),
        "multiply" | "mul" => no_arg(AcMove::Multiply),
        "add" => Ok(AcMove::AddGenerator((!rest.is_empty()).then(|| rest.to_string()))),
        "delete" | "del" => p
            .generator_names()
            .iter()
            .position(|n| n == rest)
            .map(AcMove::DeleteGenerator)
            .ok_or_else(|| WordError::UnknownGenerator(rest.to_string())),
        _ => Err(bad(format!(
            "unknown move {head:?} (expected swap, conjugate, invert, multiply, add or delete)"
        ))),
    }
}

fn need_relator(p: &Presentation, count: usize, what: &str) -> Result<(), WordError> {
    if p.num_relators() < count {
        return Err(WordError::InvalidMove(format!(
            "{what} needs at least {count} relator(s), presentation has {}",
            p.num_relators()
        )));
    }
    Ok(())
}

pub fn apply_ac_move(p: &Presentation, m: &AcMove) -> Result<Presentation, WordError> {
    let names = p.generator_names().to_vec();
    let mut relators = p.relators().to_vec();
    match m {
        AcMove::Swap(j) => {
            if *j == 0 || *j >= relators.len() {
                return Err(WordError::InvalidMove(format!(
                    "swap index {} out of range 2..={}",
                    j + 1,
                    relators.len()
                )));
            }
            relators.swap(0, *j);
        }
        AcMove::Conjugate(w) => {
            need_relator(p, 1, "conjugation")?;
            if let Some(g) = w.max_generator().filter(|&g| g >= names.len()) {
                return Err(WordError::InvalidMove(format!(
                    "conjugator uses unknown generator #{g}"
                )));
            }
            relators[0] = relators[0].conjugate_by(w);
        }
        AcMove::Invert => {
            need_relator(p, 1, "inversion")?;
            relators[0] = relators[0].inverse();
        }
        AcMove::Multiply => {
            need_relator(p, 2, "multiplication")?;
            relators[0] = relators[0].concat(&relators[1]);
            if relators[0].is_empty() {
                return Err(WordError::EmptyRelator(0));
            }
        }
        AcMove::AddGenerator(name) => {
            let name = match name {
                Some(n) => n.clone(),
                None => fresh_name(&names),
            };
            let mut names = names;
            names.push(name);
            relators.push(Word::generator(names.len() - 1));
            return Presentation::new(names, relators);
        }
        AcMove::DeleteGenerator(i) => {
            let i = *i;
            if i >= names.len() {
                return Err(WordError::InvalidMove(format!("no generator #{i}")));
            }
            let single = [Word::generator(i), Word::generator(i).inverse()];
            let r = relators
                .iter()
                .position(|w| single.contains(w))
                .ok_or_else(|| WordError::InvalidMove(format!("no relator equal to {}^±1", names[i])))?;
            if relators.iter().enumerate().any(|(s, w)| s != r && w.uses_generator(i)) {
                return Err(WordError::InvalidMove(format!(
                    "generator {} occurs in another relator",
                    names[i]
                )));
            }
            relators.remove(r);
            let relators = relators
                .iter()
                .map(|w| {
                    Word::reduce(w.letters().iter().map(|l| {
                        let g = if l.generator > i { l.generator - 1 } else { l.generator };
                        Letter::new(g, l.inverted)
                    }))
                })
                .collect();
            let mut names = names;
            names.remove(i);
            return Presentation::new(names, relators);
        }
    }
    Presentation::new(names, relators)
}

fn fresh_name(names: &[String]) -> String {
    default_names(names.len() + 27)
        .into_iter()
        .find(|n| !names.contains(n))
        .expect("more candidates than names")
}

/// A move sequence that undoes `m` when applied to `apply_ac_move(p, m)`.
/// Moves 1–4 are undone by moves 1–4; move 5 by move 6. Deleting a
/// generator is not undone here because re-adding appends at the end.
pub fn inverse_moves(m: &AcMove) -> Option<Vec<AcMove>> {
    use AcMove::*;
    Some(match m {
        Swap(j) => vec![Swap(*j)],
        Conjugate(w) => vec![Conjugate(w.inverse())],
        Invert => vec![Invert],
        // (q1 q2, q2) → (q2, q1 q2) → (q2⁻¹, q1 q2) → (q1 q2, q2⁻¹) → (q1, q2⁻¹)
        // → (q2⁻¹, q1) → (q2, q1) → (q1, q2)
        Multiply => vec![Swap(1), Invert, Swap(1), Multiply, Swap(1), Invert, Swap(1)],
        AddGenerator(_) => return None,
        DeleteGenerator(_) => return None,
    })
}

/// Like [`inverse_moves`], but also undoes move 5 given the presentation it
/// was applied to.
pub fn inverse_moves_from(before: &Presentation, m: &AcMove) -> Option<Vec<AcMove>> {
    match m {
        AcMove::AddGenerator(_) => Some(vec![AcMove::DeleteGenerator(before.num_generators())]),
        _ => inverse_moves(m),
    }
}
