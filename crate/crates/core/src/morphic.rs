//! Substitutions, their fixed points, codings, and the tables read off
//! letter positions.
//!
//! Letters are lowercase ASCII. Word positions are 1-based throughout: the
//! first letter of a word sits at position 1.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::table::PPositionTable;
use crate::variant::split_spec;

const ALPHABET_SIZE: usize = 26;

fn slot(letter: u8) -> Result<usize> {
    if letter.is_ascii_lowercase() {
        Ok((letter - b'a') as usize)
    } else {
        Err(Error::UnknownLetter(letter as char))
    }
}

fn letter_byte(c: char) -> Result<u8> {
    if c.is_ascii_lowercase() {
        Ok(c as u8)
    } else {
        Err(Error::UnknownLetter(c))
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<u8>);

impl Word {
    pub fn new() -> Self {
        Word(Vec::new())
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn prefix(&self, len: usize) -> Word {
        Word(self.0[..len.min(self.0.len())].to_vec())
    }

    pub fn is_prefix_of(&self, other: &Word) -> bool {
        other.0.starts_with(&self.0)
    }

    pub fn count(&self, letter: char) -> usize {
        self.0.iter().filter(|&&b| b as char == letter).count()
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars().map(letter_byte).collect::<Result<Vec<_>>>().map(Word)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // letters are ASCII by construction
        f.write_str(std::str::from_utf8(&self.0).unwrap_or_default())
    }
}

/// Letter-to-word rules over an ordered alphabet; images are nonempty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Morphism {
    alphabet: Vec<u8>,
    images: Vec<Vec<u8>>,
}

impl Morphism {
    /// Builds a morphism from `(letter, image)` rules. The alphabet is the
    /// set of ruled letters; every image letter must belong to it.
    pub fn new(rules: &[(char, &str)]) -> Result<Self> {
        let mut images = vec![Vec::new(); ALPHABET_SIZE];
        let mut alphabet = Vec::new();
        for &(letter, image) in rules {
            let l = letter_byte(letter)?;
            if image.is_empty() {
                return Err(Error::ErasingRule(letter));
            }
            images[slot(l)?] = image.parse::<Word>()?.0;
            alphabet.push(l);
        }
        alphabet.sort_unstable();
        alphabet.dedup();
        for image in &images {
            if let Some(&bad) = image.iter().find(|b| !alphabet.contains(b)) {
                return Err(Error::UnknownLetter(bad as char));
            }
        }
        Ok(Morphism { alphabet, images })
    }

    /// Parses `a:ab,b:a` (or `a->ab,b->a`).
    pub fn parse(rules: &str) -> Result<Self> {
        let parsed: Vec<(char, String)> = rules
            .split(',')
            .map(|rule| {
                let (l, img) = rule
                    .split_once("->")
                    .or_else(|| rule.split_once(':'))
                    .ok_or_else(|| Error::InvalidParameter(format!("rule `{rule}` lacks `:`")))?;
                let mut chars = l.trim().chars();
                match (chars.next(), chars.next()) {
                    (Some(c), None) => Ok((c, img.trim().to_string())),
                    _ => Err(Error::InvalidParameter(format!("`{l}` is not a single letter"))),
                }
            })
            .collect::<Result<_>>()?;
        let borrowed: Vec<(char, &str)> = parsed.iter().map(|(c, s)| (*c, s.as_str())).collect();
        Morphism::new(&borrowed)
    }

    pub fn alphabet(&self) -> impl Iterator<Item = char> + '_ {
        self.alphabet.iter().map(|&b| b as char)
    }

    pub fn image(&self, letter: char) -> Result<Word> {
        let l = letter_byte(letter)?;
        if !self.alphabet.contains(&l) {
            return Err(Error::UnknownLetter(letter));
        }
        Ok(Word(self.images[slot(l)?].clone()))
    }

    /// Applies the morphism once.
    pub fn apply(&self, w: &Word) -> Result<Word> {
        let mut out = Vec::new();
        for &b in &w.0 {
            if !self.alphabet.contains(&b) {
                return Err(Error::UnknownLetter(b as char));
            }
            out.extend_from_slice(&self.images[slot(b)?]);
        }
        Ok(Word(out))
    }

    /// The first `length` letters of the fixed point starting with `seed`.
    ///
    /// Expansion is a single pass: the word is its own image, so letter `i`
    /// of the prefix expands into the letters that follow.
    pub fn fixed_point(&self, seed: char, length: usize) -> Result<Word> {
        let s = letter_byte(seed)?;
        if !self.alphabet.contains(&s) {
            return Err(Error::UnknownLetter(seed));
        }
        let first = &self.images[slot(s)?];
        if first.len() < 2 || first[0] != s {
            return Err(Error::NotProlongable(seed));
        }
        let mut w = Vec::with_capacity(length.max(first.len()));
        w.extend_from_slice(first);
        let mut cursor = 1;
        while w.len() < length {
            let image = &self.images[(w[cursor] - b'a') as usize];
            w.extend_from_slice(image);
            cursor += 1;
        }
        w.truncate(length);
        Ok(Word(w))
    }
}

impl fmt::Display for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rules: Vec<String> = self
            .alphabet
            .iter()
            .map(|&l| format!("{}->{}", l as char, Word(self.images[(l - b'a') as usize].clone())))
            .collect();
        f.write_str(&rules.join(", "))
    }
}

/// A letter-to-word map applied once; images may be empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coding {
    images: Vec<Option<Vec<u8>>>,
}

impl Coding {
    pub fn new(rules: &[(char, &str)]) -> Result<Self> {
        let mut images = vec![None; ALPHABET_SIZE];
        for &(letter, image) in rules {
            images[slot(letter_byte(letter)?)?] = Some(image.parse::<Word>()?.0);
        }
        Ok(Coding { images })
    }

    /// Parses `a:a,b:ac,c:a`; an empty image erases the letter (`b:`).
    pub fn parse(rules: &str) -> Result<Self> {
        let parsed: Vec<(char, String)> = rules
            .split(',')
            .map(|rule| {
                let (l, img) = rule
                    .split_once("->")
                    .or_else(|| rule.split_once(':'))
                    .ok_or_else(|| Error::InvalidParameter(format!("rule `{rule}` lacks `:`")))?;
                let c = l.trim().chars().next().ok_or_else(|| Error::InvalidParameter("empty letter".into()))?;
                Ok((c, img.trim().to_string()))
            })
            .collect::<Result<_>>()?;
        let borrowed: Vec<(char, &str)> = parsed.iter().map(|(c, s)| (*c, s.as_str())).collect();
        Coding::new(&borrowed)
    }

    pub fn identity(letters: impl IntoIterator<Item = char>) -> Result<Self> {
        let owned: Vec<(char, String)> = letters.into_iter().map(|c| (c, c.to_string())).collect();
        let borrowed: Vec<(char, &str)> = owned.iter().map(|(c, s)| (*c, s.as_str())).collect();
        Coding::new(&borrowed)
    }

    pub fn apply(&self, w: &Word) -> Result<Word> {
        let mut out = Vec::with_capacity(w.len());
        for &b in &w.0 {
            match &self.images[slot(b)?] {
                Some(image) => out.extend_from_slice(image),
                None => return Err(Error::UnknownLetter(b as char)),
            }
        }
        Ok(Word(out))
    }
}

pub fn apply_coding(w: &Word, coding: &Coding) -> Result<Word> {
    coding.apply(w)
}

/// `w` with every listed letter deleted.
pub fn erase_letters(w: &Word, letters: &[char]) -> Word {
    Word(w.0.iter().copied().filter(|&b| !letters.contains(&(b as char))).collect())
}

/// Position (1-based) of the `n`-th occurrence of `letter`.
pub fn occurrence_index(w: &Word, letter: char, n: usize) -> Result<usize> {
    let mut seen = 0;
    for (i, &b) in w.0.iter().enumerate() {
        if b as char == letter {
            seen += 1;
            if seen == n {
                return Ok(i + 1);
            }
        }
    }
    Err(Error::InsufficientLength { letter, needed: n, found: seen })
}

/// Pairs `(position of n-th la, position of n-th lb)` for `n = 1..=count`.
pub fn word_table(w: &Word, la: char, lb: char, count: usize) -> Result<PPositionTable> {
    let (mut xs, mut ys) = (Vec::with_capacity(count), Vec::with_capacity(count));
    for (i, &b) in w.0.iter().enumerate() {
        let c = b as char;
        if c == la && xs.len() < count {
            xs.push(i as u64 + 1);
        } else if c == lb && ys.len() < count {
            ys.push(i as u64 + 1);
        }
        if xs.len() == count && ys.len() == count {
            break;
        }
    }
    if xs.len() < count {
        return Err(Error::InsufficientLength { letter: la, needed: count, found: xs.len() });
    }
    if ys.len() < count {
        return Err(Error::InsufficientLength { letter: lb, needed: count, found: ys.len() });
    }
    Ok(PPositionTable::new(xs.into_iter().zip(ys).collect()))
}

/// Reads a table off a fixed-point-derived word, doubling the prefix until
/// it holds `count` occurrences of both letters.
pub fn table_from<F>(mut make_word: F, la: char, lb: char, count: usize) -> Result<PPositionTable>
where
    F: FnMut(usize) -> Result<Word>,
{
    let mut len = (4 * count).max(16);
    loop {
        match word_table(&make_word(len)?, la, lb, count) {
            Err(Error::InsufficientLength { .. }) => len *= 2,
            other => return other,
        }
    }
}

fn power(letter: char, k: u64) -> String {
    std::iter::repeat_n(letter, k as usize).collect()
}

/// Named morphisms of the queen catalog.
pub fn catalog(name: &str, params: &[u64]) -> Result<Morphism> {
    let name = name.to_ascii_lowercase().replace('_', "-");
    let bad = || Error::InvalidParameter(format!("bad parameters {params:?} for `{name}`"));
    match (name.as_str(), params) {
        ("fibonacci", []) => Morphism::new(&[('a', "ab"), ('b', "a")]),
        ("holladay", &[k]) if k >= 1 => Morphism::new(&[('a', &(power('a', k) + "b")), ('b', "a")]),
        ("period-doubling", []) => Morphism::new(&[('a', "ab"), ('b', "aa")]),
        ("tribonacci", []) => Morphism::new(&[('a', "ab"), ('b', "ac"), ('c', "a")]),
        ("fourbonacci", []) => Morphism::new(&[('a', "ab"), ('b', "ac"), ('c', "ad"), ('d', "a")]),
        ("two-one", []) => Morphism::new(&[('a', "aab"), ('b', "aa")]),
        ("fraenkel", &[k, j]) if k >= 1 && j >= 1 => {
            Morphism::new(&[('a', &(power('a', k) + "b")), ('b', &power('a', j))])
        }
        ("restricted", &[k, j]) if k > j => {
            let image = power('a', k - j) + "b" + &power('a', j);
            Morphism::new(&[('a', &image), ('b', "a")])
        }
        (
            "fibonacci" | "holladay" | "period-doubling" | "tribonacci" | "fourbonacci" | "two-one" | "fraenkel"
            | "restricted",
            _,
        ) => Err(bad()),
        _ => Err(Error::UnknownName(name)),
    }
}

/// [`catalog`] from the `name[:p1,p2]` grammar.
pub fn catalog_spec(spec: &str) -> Result<Morphism> {
    let (name, params) = split_spec(spec)?;
    catalog(&name, &params)
}
