//! Presentations and their text syntax.
//!
//! ```text
//! presentation := '<' [gens] ['|' [relators]] '>'
//! gens         := ident (',' ident)*
//! relators     := word (',' word)*
//! word         := atom (('*' | whitespace) atom)*
//! atom         := ident ['^' int] | '[' word ',' word ']' ['^' int]
//!               | '(' word ')' ['^' int] | '1'
//! ```
//!
//! `⟨ ⟩` are accepted in place of `< >`, and `#` starts a comment running to
//! the end of the line.

use std::fmt;
use std::str::FromStr;

use super::{Letter, Word, WordError};

/// A finite presentation `⟨a_1, …, a_k | q_1, …, q_r⟩` with nonempty freely
/// reduced relators.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Presentation {
    generator_names: Vec<String>,
    relators: Vec<Word>,
}

impl Presentation {
    pub fn new(generator_names: Vec<String>, relators: Vec<Word>) -> Result<Self, WordError> {
        for (i, name) in generator_names.iter().enumerate() {
            if !is_identifier(name) {
                return Err(WordError::InvalidGeneratorName(name.clone()));
            }
            if generator_names[..i].contains(name) {
                return Err(WordError::DuplicateGenerator(name.clone()));
            }
        }
        let count = generator_names.len();
        for (r, w) in relators.iter().enumerate() {
            let w = Word::reduce(w.letters().iter().copied());
            if w.is_empty() {
                return Err(WordError::EmptyRelator(r));
            }
            if let Some(generator) = w.max_generator().filter(|&m| m >= count) {
                return Err(WordError::GeneratorOutOfRange {
                    relator: r,
                    generator,
                    count,
                });
            }
        }
        let relators = relators
            .into_iter()
            .map(|w| Word::reduce(w.letters().iter().copied()))
            .collect();
        Ok(Self {
            generator_names,
            relators,
        })
    }

    /// Generators named `a, b, c, …` (then `x26, x27, …`).
    pub fn with_default_names(k: usize, relators: Vec<Word>) -> Result<Self, WordError> {
        Self::new(default_names(k), relators)
    }

    pub fn num_generators(&self) -> usize {
        self.generator_names.len()
    }

    pub fn num_relators(&self) -> usize {
        self.relators.len()
    }

    pub fn generator_names(&self) -> &[String] {
        &self.generator_names
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn word_to_string(&self, w: &Word) -> String {
        w.display_with(&self.generator_names).to_string()
    }

    /// Parses a word over this presentation's generators.
    pub fn parse_word(&self, text: &str) -> Result<Word, WordError> {
        parse_word(text, &self.generator_names)
    }
}

pub(crate) fn default_names(k: usize) -> Vec<String> {
    (0..k)
        .map(|i| {
            if i < 26 {
                char::from(b'a' + i as u8).to_string()
            } else {
                format!("x{i}")
            }
        })
        .collect()
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{} |", self.generator_names.join(", "))?;
        for (i, w) in self.relators.iter().enumerate() {
            let sep = if i == 0 { " " } else { ", " };
            write!(f, "{sep}{}", w.display_with(&self.generator_names))?;
        }
        write!(f, ">")
    }
}

impl FromStr for Presentation {
    type Err = WordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_presentation(s)
    }
}

/// Parses presentation text; see the module docs for the grammar.
pub fn parse_presentation(text: &str) -> Result<Presentation, WordError> {
    let cleaned = strip_comments(text);
    let mut p = Parser::new(&cleaned, Vec::new());
    p.skip_ws();
    p.expect_any(&['<', '⟨'])?;
    p.skip_ws();
    let mut names = Vec::new();
    if !p.at_any(&['|', '>', '⟩']) {
        loop {
            p.skip_ws();
            let name = p.ident().ok_or_else(|| p.syntax("expected generator name"))?;
            if names.contains(&name) {
                return Err(WordError::DuplicateGenerator(name));
            }
            names.push(name);
            p.skip_ws();
            if !p.eat(',') {
                break;
            }
        }
    }
    p.names = names.clone();
    p.skip_ws();
    let mut relators = Vec::new();
    if p.eat('|') {
        p.skip_ws();
        if !p.at_any(&['>', '⟩']) {
            loop {
                p.skip_ws();
                let start = p.pos;
                let w = p.word()?;
                if w.is_empty() {
                    if p.pos == start {
                        return Err(p.syntax("expected relator"));
                    }
                    return Err(WordError::EmptyRelator(relators.len()));
                }
                relators.push(w);
                p.skip_ws();
                if !p.eat(',') {
                    break;
                }
            }
        }
    }
    p.skip_ws();
    p.expect_any(&['>', '⟩'])?;
    p.skip_ws();
    if !p.at_end() {
        return Err(p.syntax("trailing input"));
    }
    Presentation::new(names, relators)
}

/// Parses a word over the given generator names.
pub fn parse_word(text: &str, names: &[String]) -> Result<Word, WordError> {
    let mut p = Parser::new(text, names.to_vec());
    p.skip_ws();
    let w = p.word()?;
    p.skip_ws();
    if !p.at_end() {
        return Err(p.syntax("trailing input"));
    }
    Ok(w)
}

fn strip_comments(text: &str) -> String {
    text.lines()
        .map(|line| match line.find('#') {
            Some(i) => format!("{}{}", &line[..i], " ".repeat(line.len() - i)),
            None => line.to_string(),
        })
        .collect::<Vec<_>>()
        .join("\n")
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
    names: Vec<String>,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str, names: Vec<String>) -> Self {
        Self { text, pos: 0, names }
    }

    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn at_end(&self) -> bool {
        self.pos >= self.text.len()
    }

    fn at_any(&self, set: &[char]) -> bool {
        self.peek().is_some_and(|c| set.contains(&c))
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect_any(&mut self, set: &[char]) -> Result<(), WordError> {
        match self.peek() {
            Some(c) if set.contains(&c) => {
                self.pos += c.len_utf8();
                Ok(())
            }
            _ => Err(self.syntax(&format!("expected {:?}", set[0]))),
        }
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += self.peek().map_or(0, char::len_utf8);
        }
    }

    fn syntax(&self, message: &str) -> WordError {
        let found = match self.peek() {
            Some(c) => format!(", found {c:?}"),
            None => ", found end of input".into(),
        };
        WordError::Syntax {
            position: self.pos,
            message: format!("{message}{found}"),
        }
    }

    fn ident(&mut self) -> Option<String> {
        let rest = &self.text[self.pos..];
        let len = rest
            .char_indices()
            .find(|&(i, c)| !(c.is_ascii_alphabetic() || c == '_' || (i > 0 && c.is_ascii_digit())))
            .map_or(rest.len(), |(i, _)| i);
        if len == 0 {
            return None;
        }
        self.pos += len;
        Some(rest[..len].to_string())
    }

    fn integer(&mut self) -> Result<i64, WordError> {
        let start = self.pos;
        if self.peek() == Some('-') || self.peek() == Some('+') {
            self.pos += 1;
        }
        let digits = self.text[self.pos..].chars().take_while(char::is_ascii_digit).count();
        if digits == 0 {
            return Err(self.syntax("expected integer exponent"));
        }
        self.pos += digits;
        self.text[start..self.pos].parse().map_err(|_| WordError::Syntax {
            position: start,
            message: "exponent out of range".into(),
        })
    }

    fn exponent(&mut self) -> Result<i64, WordError> {
        let save = self.pos;
        self.skip_ws();
        if self.eat('^') {
            self.skip_ws();
            self.integer()
        } else {
            self.pos = save;
            Ok(1)
        }
    }

    fn word(&mut self) -> Result<Word, WordError> {
        let mut letters: Vec<Letter> = Vec::new();
        loop {
            self.skip_ws();
            match self.atom()? {
                Some(w) => letters.extend_from_slice(w.letters()),
                None => break,
            }
            self.skip_ws();
            if self.eat('*') {
                self.skip_ws();
                if self.at_any(&[',', '>', '⟩', ']', ')']) || self.at_end() {
                    return Err(self.syntax("expected atom after '*'"));
                }
            }
        }
        Ok(Word::reduce(letters))
    }

    fn atom(&mut self) -> Result<Option<Word>, WordError> {
        let base = match self.peek() {
            Some('[') => {
                self.pos += 1;
                let x = self.word()?;
                self.skip_ws();
                if !self.eat(',') {
                    return Err(self.syntax("expected ',' in commutator"));
                }
                let y = self.word()?;
                self.skip_ws();
                if !self.eat(']') {
                    return Err(self.syntax("expected ']'"));
                }
                Word::commutator(&x, &y)
            }
            Some('(') => {
                self.pos += 1;
                let w = self.word()?;
                self.skip_ws();
                if !self.eat(')') {
                    return Err(self.syntax("expected ')'"));
                }
                w
            }
            Some('1') => {
                self.pos += 1;
                Word::empty()
            }
            Some(c) if c.is_ascii_alphabetic() || c == '_' => {
                let name = self.ident().expect("identifier start");
                let i = self
                    .names
                    .iter()
                    .position(|n| *n == name)
                    .ok_or(WordError::UnknownGenerator(name))?;
                Word::generator(i)
            }
            _ => return Ok(None),
        };
        let n = self.exponent()?;
        Ok(Some(base.pow(n)))
    }
}
