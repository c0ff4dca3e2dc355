//! Finitely presented groups with peripheral data: words, Fox calculus,
//! abelianization through Smith normal form, and the index-2 kernel of the
//! mod-2 abelianization via Reidemeister–Schreier.

mod fox;
mod parse;
mod schreier;
mod snf;

use std::fmt;

pub use fox::{fox_add, fox_derivative, fox_left_mul, FoxSum};
pub use parse::parse_presentation;
pub use schreier::{
    peripheral_cover_map, reidemeister_schreier_index2, reidemeister_schreier_index2_with, KernelPresentation,
    PERIPHERAL_CHANGE_OF_BASIS,
};
pub use snf::{abelianize, homology, smith_normal_form, Abelianization, SmithForm};

use crate::error::{Error, Result};

/// A freely reduced word; each letter is a generator index with exponent ±1.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<(usize, i8)>,
}

impl Word {
    pub fn identity() -> Self {
        Word::default()
    }

    pub fn generator(g: usize) -> Self {
        Word { letters: vec![(g, 1)] }
    }

    /// Builds a word from letters, freely reducing as it goes.
    /// Exponents other than ±1 are expanded.
    pub fn from_letters(letters: impl IntoIterator<Item = (usize, i64)>) -> Self {
        let mut w = Word::identity();
        for (g, e) in letters {
            let unit = if e < 0 { -1 } else { 1 };
            for _ in 0..e.unsigned_abs() {
                w.push(g, unit);
            }
        }
        w
    }

    fn push(&mut self, g: usize, e: i8) {
        if self.letters.last() == Some(&(g, -e)) {
            self.letters.pop();
        } else {
            self.letters.push((g, e));
        }
    }

    pub fn letters(&self) -> &[(usize, i8)] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Self {
        Word {
            letters: self.letters.iter().rev().map(|&(g, e)| (g, -e)).collect(),
        }
    }

    pub fn mul(&self, other: &Word) -> Self {
        let mut w = self.clone();
        for &(g, e) in &other.letters {
            w.push(g, e);
        }
        w
    }

    pub fn pow(&self, n: i64) -> Self {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        (0..n.unsigned_abs()).fold(Word::identity(), |acc, _| acc.mul(&base))
    }

    /// Prefix of the first `k` letters.
    pub fn prefix(&self, k: usize) -> Self {
        Word {
            letters: self.letters[..k].to_vec(),
        }
    }

    pub fn exponent_sum(&self, g: usize) -> i64 {
        self.letters.iter().filter(|l| l.0 == g).map(|l| l.1 as i64).sum()
    }

    /// Image under a homomorphism to `Z` given by generator values.
    pub fn weight(&self, values: &[i64]) -> i64 {
        self.letters.iter().map(|&(g, e)| values[g] * e as i64).sum()
    }

    pub fn max_generator(&self) -> Option<usize> {
        self.letters.iter().map(|l| l.0).max()
    }

    /// Space-separated tokens; a run `g g g` prints as `g^3`, inverses of
    /// single lowercase letters print uppercase.
    pub fn to_string_with(&self, names: &[String]) -> String {
        if self.is_empty() {
            return "1".into();
        }
        let mut out: Vec<String> = Vec::new();
        let mut i = 0;
        while i < self.letters.len() {
            let (g, e) = self.letters[i];
            let mut j = i;
            while j < self.letters.len() && self.letters[j] == (g, e) {
                j += 1;
            }
            let run = (j - i) as i64 * e as i64;
            out.push(format_power(&names[g], run));
            i = j;
        }
        out.join(" ")
    }
}

fn format_power(name: &str, e: i64) -> String {
    let single_lower = name.len() == 1 && name.chars().all(|c| c.is_ascii_lowercase());
    match e {
        1 => name.to_string(),
        -1 if single_lower => name.to_ascii_uppercase(),
        _ => format!("{name}^{e}"),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum GroupKind {
    SphereKnot,
    QuotientKnot,
    #[default]
    Generic,
}

impl GroupKind {
    pub fn as_str(self) -> &'static str {
        match self {
            GroupKind::SphereKnot => "sphere-knot",
            GroupKind::QuotientKnot => "quotient-knot",
            GroupKind::Generic => "generic",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        match s {
            "sphere-knot" => Some(GroupKind::SphereKnot),
            "quotient-knot" => Some(GroupKind::QuotientKnot),
            "generic" => Some(GroupKind::Generic),
            _ => None,
        }
    }
}

/// Finite presentation with optional peripheral words. For quotient knots
/// the `meridian` slot holds the element α (homology class 1) and the
/// `longitude` slot holds ℓ̄.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupPresentation {
    pub generators: Vec<String>,
    pub relators: Vec<Word>,
    pub meridian: Option<Word>,
    pub longitude: Option<Word>,
    pub kind: GroupKind,
}

impl GroupPresentation {
    pub fn new(generators: Vec<String>, relators: Vec<Word>) -> Result<Self> {
        let g = GroupPresentation {
            generators,
            relators,
            meridian: None,
            longitude: None,
            kind: GroupKind::Generic,
        };
        g.check()?;
        Ok(g)
    }

    pub fn with_peripheral(mut self, meridian: Option<Word>, longitude: Option<Word>) -> Result<Self> {
        self.meridian = meridian;
        self.longitude = longitude;
        self.check()?;
        Ok(self)
    }

    pub fn with_kind(mut self, kind: GroupKind) -> Self {
        self.kind = kind;
        self
    }

    fn check(&self) -> Result<()> {
        let n = self.generators.len();
        if n == 0 {
            return Err(Error::Validation("presentation has no generators".into()));
        }
        let words = self
            .relators
            .iter()
            .chain(self.meridian.iter())
            .chain(self.longitude.iter());
        for w in words {
            if w.max_generator().is_some_and(|g| g >= n) {
                return Err(Error::Validation("word uses an unknown generator".into()));
            }
        }
        Ok(())
    }

    pub fn num_generators(&self) -> usize {
        self.generators.len()
    }

    /// Generators minus relators.
    pub fn deficiency(&self) -> i64 {
        self.generators.len() as i64 - self.relators.len() as i64
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g == name)
    }

    pub fn word_string(&self, w: &Word) -> String {
        w.to_string_with(&self.generators)
    }
}

impl fmt::Display for GroupPresentation {
    /// Prints in the input grammar, so the output re-parses.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "gens: {}", self.generators.join(" "))?;
        if self.relators.is_empty() {
            write!(f, "; rel:")?;
        }
        for r in &self.relators {
            write!(f, "; rel: {}", self.word_string(r))?;
        }
        if let Some(m) = &self.meridian {
            write!(f, "; meridian: {}", self.word_string(m))?;
        }
        if let Some(l) = &self.longitude {
            write!(f, "; longitude: {}", self.word_string(l))?;
        }
        write!(f, "; kind: {}", self.kind.as_str())
    }
}

#[cfg(test)]
mod tests;
