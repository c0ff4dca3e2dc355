//! Presentation grammar:
//! `gens: a b ; rel: a b a B A B ; meridian: a ; longitude: ... ; kind: sphere-knot`.
//!
//! A token is a generator name, its uppercase spelling (the inverse of a
//! lowercase name), either of those followed by `^n`, the identity `1`, or a
//! run of single-letter generators written without spaces (`abAB`).

use super::{GroupKind, GroupPresentation, Word};
use crate::error::{Error, Result};

struct Section<'a> {
    key: &'a str,
    body: &'a str,
    body_offset: usize,
    key_offset: usize,
}

fn sections(text: &str) -> Result<Vec<Section<'_>>> {
    let mut out = Vec::new();
    let mut start = 0;
    for piece in text.split(';') {
        let offset = start;
        start += piece.len() + 1;
        if piece.trim().is_empty() {
            continue;
        }
        let lead = piece.len() - piece.trim_start().len();
        let Some(colon) = piece.find(':') else {
            return Err(Error::parse_at(text, offset + lead, "expected `key: value`"));
        };
        out.push(Section {
            key: piece[..colon].trim(),
            body: &piece[colon + 1..],
            body_offset: offset + colon + 1,
            key_offset: offset + lead,
        });
    }
    Ok(out)
}

fn tokens(body: &str, base: usize) -> impl Iterator<Item = (&str, usize)> {
    let mut pos = 0;
    body.split_whitespace().map(move |tok| {
        let rel = body[pos..].find(tok).unwrap() + pos;
        pos = rel + tok.len();
        (tok, base + rel)
    })
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    chars.next().is_some_and(|c| c.is_ascii_alphabetic()) && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

struct Resolver<'a> {
    names: &'a [String],
}

impl Resolver<'_> {
    fn name(&self, s: &str) -> Option<(usize, i64)> {
        if let Some(i) = self.names.iter().position(|n| n == s) {
            return Some((i, 1));
        }
        self.names
            .iter()
            .position(|n| n.chars().any(|c| c.is_ascii_lowercase()) && n.to_ascii_uppercase() == s)
            .map(|i| (i, -1))
    }

    fn word(&self, text: &str, body: &str, base: usize) -> Result<Word> {
        let mut letters = Vec::new();
        for (tok, at) in tokens(body, base) {
            if tok == "1" {
                continue;
            }
            let (stem, exp) = match tok.split_once('^') {
                Some((s, e)) => {
                    let n: i64 = e
                        .parse()
                        .map_err(|_| Error::parse_at(text, at + s.len() + 1, format!("malformed exponent `{e}`")))?;
                    (s, n)
                }
                None => (tok, 1),
            };
            if let Some((g, sign)) = self.name(stem) {
                letters.push((g, sign * exp));
                continue;
            }
            if exp != 1 || tok.contains('^') || stem.chars().count() == 1 {
                return Err(Error::parse_at(text, at, format!("unknown generator `{stem}`")));
            }
            for (k, c) in stem.char_indices() {
                match self.name(&c.to_string()) {
                    Some(l) => letters.push(l),
                    None => {
                        return Err(Error::parse_at(
                            text,
                            at + k,
                            format!("unknown generator `{c}` in `{stem}`"),
                        ))
                    }
                }
            }
        }
        Ok(Word::from_letters(letters))
    }
}

pub fn parse_presentation(text: &str) -> Result<GroupPresentation> {
    let secs = sections(text)?;
    let mut gens_sec = None;
    for s in &secs {
        if s.key == "gens" {
            if gens_sec.is_some() {
                return Err(Error::parse_at(text, s.key_offset, "duplicate `gens` section"));
            }
            gens_sec = Some(s);
        }
    }
    let gens_sec = gens_sec.ok_or_else(|| Error::parse_at(text, 0, "missing `gens` section"))?;
    let mut names: Vec<String> = Vec::new();
    for (tok, at) in tokens(gens_sec.body, gens_sec.body_offset) {
        if !is_identifier(tok) {
            return Err(Error::parse_at(text, at, format!("invalid generator name `{tok}`")));
        }
        let clash = names.iter().any(|n| {
            n == tok
                || (n.to_ascii_uppercase() == tok && n.as_str() != tok)
                || (tok.to_ascii_uppercase() == *n && n.as_str() != tok)
        });
        if clash {
            return Err(Error::parse_at(
                text,
                at,
                format!("generator `{tok}` duplicates or inverts an earlier one"),
            ));
        }
        names.push(tok.to_string());
    }
    if names.is_empty() {
        return Err(Error::parse_at(text, gens_sec.body_offset, "no generators listed"));
    }
    let resolver = Resolver { names: &names };
    let mut relators = Vec::new();
    let mut rel_sections = 0;
    let mut empty_rel = None;
    let mut meridian = None;
    let mut longitude = None;
    let mut kind = None;
    for s in &secs {
        let set_once = |present: bool| {
            if present {
                Err(Error::parse_at(
                    text,
                    s.key_offset,
                    format!("duplicate `{}` section", s.key),
                ))
            } else {
                Ok(())
            }
        };
        match s.key {
            "gens" => {}
            "rel" => {
                rel_sections += 1;
                if s.body.trim().is_empty() {
                    empty_rel = Some(s.key_offset);
                    continue;
                }
                let w = resolver.word(text, s.body, s.body_offset)?;
                relators.push(w);
            }
            "meridian" => {
                set_once(meridian.is_some())?;
                meridian = Some(resolver.word(text, s.body, s.body_offset)?);
            }
            "longitude" => {
                set_once(longitude.is_some())?;
                longitude = Some(resolver.word(text, s.body, s.body_offset)?);
            }
            "kind" => {
                set_once(kind.is_some())?;
                let v = s.body.trim();
                kind = Some(GroupKind::from_name(v).ok_or_else(|| {
                    Error::parse_at(
                        text,
                        s.body_offset,
                        format!("unknown kind `{v}` (expected sphere-knot, quotient-knot or generic)"),
                    )
                })?);
            }
            other => {
                return Err(Error::parse_at(
                    text,
                    s.key_offset,
                    format!("unknown section `{other}`"),
                ));
            }
        }
    }
    if rel_sections == 0 {
        return Err(Error::parse_at(
            text,
            text.len(),
            "empty relator list: write `rel:` to declare a presentation without relators",
        ));
    }
    if let Some(at) = empty_rel {
        if rel_sections > 1 {
            return Err(Error::parse_at(text, at, "empty relator"));
        }
    }
    Ok(GroupPresentation {
        generators: names,
        relators,
        meridian,
        longitude,
        kind: kind.unwrap_or_default(),
    })
}
