//! Free-group words and finitely presented groups.
//!
//! Words are stored freely reduced as syllables `(generator, exponent)`.
//! Presentations are read either from the inline form
//! `< x, y | x y x^-1 y^-1 >` or from the line-oriented file format
//! (`group`, `gens`, `rel` lines, `#` comments).

use std::cmp::Ordering;
use std::fmt;
use std::ops::Mul;

use crate::error::{Error, Result};

/// Largest exponent magnitude accepted by the parser.
pub const MAX_EXPONENT: i64 = (1 << 31) - 1;

/// One syllable `x_gen^exp` of a word; `exp` is never zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub gen: usize,
    pub exp: i64,
}

/// A freely reduced word. The empty word is the identity.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn identity() -> Self {
        Word {
            letters: Vec::new(),
        }
    }

    pub fn generator(gen: usize) -> Self {
        Word::power(gen, 1)
    }

    pub fn power(gen: usize, exp: i64) -> Self {
        let mut w = Word::identity();
        w.push(Letter { gen, exp });
        w
    }

    /// Builds the free reduction of the given letter sequence.
    pub fn from_letters<I: IntoIterator<Item = Letter>>(letters: I) -> Self {
        let mut w = Word::identity();
        for l in letters {
            w.push(l);
        }
        w
    }

    /// Appends a letter, merging and cancelling against the tail.
    pub fn push(&mut self, letter: Letter) {
        if letter.exp == 0 {
            return;
        }
        match self.letters.last_mut() {
            Some(last) if last.gen == letter.gen => {
                last.exp += letter.exp;
                if last.exp == 0 {
                    self.letters.pop();
                }
            }
            _ => self.letters.push(letter),
        }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    /// Number of syllables.
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Sum of absolute exponents.
    pub fn letter_count(&self) -> u64 {
        self.letters.iter().map(|l| l.exp.unsigned_abs()).sum()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut w = self.clone();
        for &l in &other.letters {
            w.push(l);
        }
        w
    }

    pub fn inverse(&self) -> Word {
        Word {
            letters: self
                .letters
                .iter()
                .rev()
                .map(|l| Letter {
                    gen: l.gen,
                    exp: -l.exp,
                })
                .collect(),
        }
    }

    pub fn exponent_sum(&self, gen: usize) -> i64 {
        self.letters
            .iter()
            .filter(|l| l.gen == gen)
            .map(|l| l.exp)
            .sum()
    }

    pub fn total_exponent(&self) -> i64 {
        self.letters.iter().map(|l| l.exp).sum()
    }

    pub fn max_generator(&self) -> Option<usize> {
        self.letters.iter().map(|l| l.gen).max()
    }

    /// Renders the word with the given generator names, `e` for the identity.
    pub fn display<'a>(&'a self, names: &'a [String]) -> WordDisplay<'a> {
        WordDisplay { word: self, names }
    }
}

impl Ord for Word {
    /// Shorter words first, then lexicographic by (generator, exponent).
    fn cmp(&self, other: &Self) -> Ordering {
        self.letters
            .len()
            .cmp(&other.letters.len())
            .then_with(|| self.letters.cmp(&other.letters))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Mul for &Word {
    type Output = Word;
    fn mul(self, rhs: &Word) -> Word {
        self.concat(rhs)
    }
}

pub struct WordDisplay<'a> {
    word: &'a Word,
    names: &'a [String],
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_identity() {
            return write!(f, "e");
        }
        for (i, l) in self.word.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            match self.names.get(l.gen) {
                Some(name) => write!(f, "{name}")?,
                None => write!(f, "g{}", l.gen)?,
            }
            if l.exp != 1 {
                write!(f, "^{}", l.exp)?;
            }
        }
        Ok(())
    }
}

/// Checks the generator token grammar: a letter followed by letters, digits or `_`.
pub fn is_valid_generator_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn parse_exponent(token: &str, raw: &str) -> Result<i64> {
    let trimmed = raw
        .trim()
        .trim_start_matches(['{', '('])
        .trim_end_matches(['}', ')'])
        .trim();
    let value: i64 = trimmed
        .parse()
        .map_err(|_| Error::Parse(format!("malformed exponent in `{token}`")))?;
    if value.abs() > MAX_EXPONENT {
        return Err(Error::ExponentOverflow(token.to_string()));
    }
    Ok(value)
}

/// Parses `gen(^int)?` tokens separated by whitespace into a reduced word.
pub fn parse_word(text: &str, gens: &[String]) -> Result<Word> {
    let mut w = Word::identity();
    for token in text.split_whitespace() {
        let (name, exp) = match token.split_once('^') {
            Some((name, exp)) => (name, parse_exponent(token, exp)?),
            None => (token, 1),
        };
        if name.is_empty() {
            return Err(Error::Parse(format!("missing generator in `{token}`")));
        }
        let gen = gens
            .iter()
            .position(|g| g == name)
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))?;
        w.push(Letter { gen, exp });
    }
    Ok(w)
}

/// A finitely presented group `< generators | relators >`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    name: Option<String>,
    generators: Vec<String>,
    relators: Vec<Word>,
}

impl Presentation {
    pub fn new(generators: Vec<String>, relators: Vec<Word>) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        for (i, g) in generators.iter().enumerate() {
            if !is_valid_generator_name(g) {
                return Err(Error::Parse(format!("invalid generator name `{g}`")));
            }
            if generators[..i].contains(g) {
                return Err(Error::DuplicateGenerator(g.clone()));
            }
        }
        for r in &relators {
            if let Some(m) = r.max_generator() {
                if m >= generators.len() {
                    return Err(Error::GeneratorIndex {
                        index: m,
                        count: generators.len(),
                    });
                }
            }
        }
        Ok(Presentation {
            name: None,
            generators,
            relators,
        })
    }

    /// Builds a presentation from generator names and relator strings.
    pub fn from_strs(generators: &[&str], relators: &[&str]) -> Result<Self> {
        let gens: Vec<String> = generators.iter().map(|s| s.to_string()).collect();
        let rels = relators
            .iter()
            .map(|r| parse_word(r, &gens))
            .collect::<Result<Vec<_>>>()?;
        Presentation::new(gens, rels)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn generator_count(&self) -> usize {
        self.generators.len()
    }

    pub fn relator_count(&self) -> usize {
        self.relators.len()
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g == name)
    }

    /// Renders the presentation in the line-oriented file format.
    pub fn to_file_format(&self) -> String {
        let mut out = String::new();
        if let Some(name) = &self.name {
            out.push_str(&format!("group {name}\n"));
        }
        out.push_str(&format!("gens {}\n", self.generators.join(" ")));
        for r in &self.relators {
            out.push_str(&format!("rel {}\n", r.display(&self.generators)));
        }
        out
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "< {} |", self.generators.join(", "))?;
        for (i, r) in self.relators.iter().enumerate() {
            write!(
                f,
                "{}{}",
                if i == 0 { " " } else { ", " },
                r.display(&self.generators)
            )?;
        }
        write!(f, " >")
    }
}

/// Parses either the inline form or the file format.
pub fn parse_presentation(text: &str) -> Result<Presentation> {
    let trimmed = text.trim();
    if trimmed.starts_with('<') {
        parse_inline(trimmed)
    } else {
        parse_file_format(text)
    }
}

fn parse_inline(text: &str) -> Result<Presentation> {
    let inner = text
        .strip_prefix('<')
        .and_then(|t| t.strip_suffix('>'))
        .ok_or_else(|| Error::Parse("inline presentation must be enclosed in < >".into()))?;
    let (gens_part, rels_part) = inner
        .split_once('|')
        .ok_or_else(|| Error::Parse("inline presentation needs a `|` separator".into()))?;
    if rels_part.contains('|') {
        return Err(Error::Parse("more than one `|` in presentation".into()));
    }
    let gens: Vec<String> = gens_part
        .split(',')
        .map(str::trim)
        .filter(|g| !g.is_empty())
        .map(String::from)
        .collect();
    if gens.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    check_generators(&gens)?;
    let rels = rels_part
        .split(',')
        .map(str::trim)
        .filter(|r| !r.is_empty())
        .map(|r| parse_word(r, &gens))
        .collect::<Result<Vec<_>>>()?;
    Presentation::new(gens, rels)
}

fn check_generators(gens: &[String]) -> Result<()> {
    for (i, g) in gens.iter().enumerate() {
        if !is_valid_generator_name(g) {
            return Err(Error::Parse(format!("invalid generator name `{g}`")));
        }
        if gens[..i].contains(g) {
            return Err(Error::DuplicateGenerator(g.clone()));
        }
    }
    Ok(())
}

fn parse_file_format(text: &str) -> Result<Presentation> {
    let mut name = None;
    let mut gens: Option<Vec<String>> = None;
    let mut rel_lines = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (keyword, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        match keyword {
            "group" => name = Some(rest.trim().to_string()),
            "gens" => {
                if gens.is_some() {
                    return Err(Error::Parse(format!(
                        "line {}: repeated `gens`",
                        lineno + 1
                    )));
                }
                let list: Vec<String> = rest.split_whitespace().map(String::from).collect();
                check_generators(&list)?;
                gens = Some(list);
            }
            "rel" => rel_lines.push((lineno + 1, rest.to_string())),
            other => {
                return Err(Error::Parse(format!(
                    "line {}: unknown keyword `{other}`",
                    lineno + 1
                )))
            }
        }
    }
    let gens = gens.ok_or(Error::EmptyGenerators)?;
    if gens.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    let rels = rel_lines
        .iter()
        .map(|(_, r)| parse_word(r, &gens))
        .collect::<Result<Vec<_>>>()?;
    let p = Presentation::new(gens, rels)?;
    Ok(match name {
        Some(n) if !n.is_empty() => p.with_name(n),
        _ => p,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn names(list: &[&str]) -> Vec<String> {
        list.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn full_cancellation_gives_identity() {
        let g = names(&["x1", "x2"]);
        assert!(parse_word("x1 x2^-1 x2 x1^-1", &g).unwrap().is_identity());
    }

    #[test]
    fn trefoil_like_relator_has_six_letters() {
        let g = names(&["x1", "x2"]);
        let w = parse_word("x1 x2 x1 x2^-1 x1^-1 x2^-1", &g).unwrap();
        assert_eq!(w.len(), 6);
        assert_eq!(w.display(&g).to_string(), "x1 x2 x1 x2^-1 x1^-1 x2^-1");
    }

    #[test]
    fn exponents_merge() {
        let g = names(&["x"]);
        let w = parse_word("x^2 x", &g).unwrap();
        assert_eq!(w.letters(), &[Letter { gen: 0, exp: 3 }]);
    }

    #[test]
    fn zero_exponent_is_dropped() {
        let g = names(&["x", "y"]);
        let w = parse_word("x y^0 x", &g).unwrap();
        assert_eq!(w, Word::power(0, 2));
    }

    #[test]
    fn parse_errors() {
        let g = names(&["x"]);
        assert_eq!(
            parse_word("y", &g),
            Err(Error::UnknownGenerator("y".into()))
        );
        assert!(matches!(parse_word("x^a", &g), Err(Error::Parse(_))));
        assert!(matches!(
            parse_word("x^4294967296", &g),
            Err(Error::ExponentOverflow(_))
        ));
        assert!(parse_word("", &g).unwrap().is_identity());
        assert_eq!(parse_word("x^{-1}", &g).unwrap(), Word::power(0, -1));
    }

    #[test]
    fn concat_examples() {
        let (x, y, z) = (Word::generator(0), Word::generator(1), Word::generator(2));
        assert!(x.concat(&x.inverse()).is_identity());
        let xy = &x * &y;
        let y_inv_z = &y.inverse() * &z;
        assert_eq!(&xy * &y_inv_z, &x * &z);
        assert_eq!(&Word::power(0, 2) * &x, Word::power(0, 3));
    }

    #[test]
    fn invert_examples() {
        assert!(Word::identity().inverse().is_identity());
        let w = Word::from_letters([Letter { gen: 0, exp: 1 }, Letter { gen: 1, exp: -1 }]);
        let expected = Word::from_letters([Letter { gen: 1, exp: 1 }, Letter { gen: 0, exp: -1 }]);
        assert_eq!(w.inverse(), expected);
    }

    #[test]
    fn inline_presentations() {
        let p = parse_presentation("< x | x^2 >").unwrap();
        assert_eq!((p.generator_count(), p.relator_count()), (1, 1));
        let f2 = parse_presentation("< x, y | >").unwrap();
        assert_eq!((f2.generator_count(), f2.relator_count()), (2, 0));
        let g = parse_presentation("< x, y | x y x y^-1, x^-2 y^2 >").unwrap();
        assert_eq!(g.relator_count(), 2);
        assert_eq!(g.to_string(), "< x, y | x y x y^-1, x^-2 y^2 >");
    }

    #[test]
    fn presentation_errors() {
        assert_eq!(
            parse_presentation("< x, x | >"),
            Err(Error::DuplicateGenerator("x".into()))
        );
        assert_eq!(
            parse_presentation("< x | y >"),
            Err(Error::UnknownGenerator("y".into()))
        );
        assert_eq!(parse_presentation("< | >"), Err(Error::EmptyGenerators));
        assert!(parse_presentation("< 1x | >").is_err());
    }

    #[test]
    fn file_format_round_trip() {
        let text = "# the 8_1 group\ngroup 8_1\ngens x1 x2\nrel x1 x2 x1 x2^-1 x1^-1 x2^-1\n";
        let p = parse_presentation(text).unwrap();
        assert_eq!(p.name(), Some("8_1"));
        assert_eq!(parse_presentation(&p.to_file_format()).unwrap(), p);
        assert!(parse_presentation("gens x\nfoo x\n").is_err());
        assert_eq!(
            parse_presentation("# nothing\n"),
            Err(Error::EmptyGenerators)
        );
    }

    fn arb_word(gens: usize, max_len: usize) -> impl Strategy<Value = Word> {
        prop::collection::vec((0..gens, -3i64..=3), 0..max_len)
            .prop_map(|v| Word::from_letters(v.into_iter().map(|(gen, exp)| Letter { gen, exp })))
    }

    proptest! {
        #[test]
        fn words_are_reduced(w in arb_word(3, 20)) {
            for pair in w.letters().windows(2) {
                prop_assert_ne!(pair[0].gen, pair[1].gen);
            }
            prop_assert!(w.letters().iter().all(|l| l.exp != 0));
            prop_assert_eq!(Word::from_letters(w.letters().iter().copied()), w);
        }

        #[test]
        fn render_parse_round_trip(w in arb_word(3, 20)) {
            let g = names(&["a", "b", "c"]);
            let text = if w.is_identity() { String::new() } else { w.display(&g).to_string() };
            prop_assert_eq!(parse_word(&text, &g).unwrap(), w);
        }

        #[test]
        fn concat_is_associative(a in arb_word(3, 10), b in arb_word(3, 10), c in arb_word(3, 10)) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &Word::identity(), a.clone());
            prop_assert_eq!(&Word::identity() * &a, a.clone());
            prop_assert!((&a * &b).len() <= a.len() + b.len());
            prop_assert!((&a * &a.inverse()).is_identity());
            prop_assert_eq!(a.inverse().inverse(), a);
        }
    }
}
