//! Free-group words over indexed generators and group presentations,
//! together with a small parser for the presentation grammar:
//!
//! ```text
//! presentation := "gens:" name+ ";" "rels:" (relator ("," relator)*)?
//! relator      := word ("=" word)?            -- l = r is stored as l^-1 r
//! word         := atom+
//! atom         := base ("^" (int | atom | "(" word ")"))?
//! base         := name | "(" word ")" | "[" word "," word "]"
//! ```
//!
//! `u^v` denotes `v^-1 u v` and `[u,v]` denotes `u^-1 v^-1 u v`.
//! Integer powers expand by repetition; negative powers invert.

use std::fmt;

use thiserror::Error;

/// A single letter `g^e` with `e = ±1`. Generators are indices into the
/// owning presentation's generator list.
pub type Letter = (usize, i8);

/// A freely reduced word in the free group on indexed generators.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn identity() -> Self {
        Word { letters: Vec::new() }
    }

    pub fn letter(gen: usize, exp: i8) -> Self {
        assert!(exp == 1 || exp == -1);
        Word { letters: vec![(gen, exp)] }
    }

    /// Builds a word from raw letters, freely reducing.
    pub fn from_letters<I: IntoIterator<Item = Letter>>(letters: I) -> Self {
        let mut stack: Vec<Letter> = Vec::new();
        for (g, e) in letters {
            assert!(e == 1 || e == -1, "letter exponent must be ±1");
            match stack.last() {
                Some(&(h, f)) if h == g && f == -e => {
                    stack.pop();
                }
                _ => stack.push((g, e)),
            }
        }
        Word { letters: stack }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Word {
        Word {
            letters: self.letters.iter().rev().map(|&(g, e)| (g, -e)).collect(),
        }
    }

    /// Reduced concatenation `self · other`.
    pub fn concat(&self, other: &Word) -> Word {
        Word::from_letters(self.letters.iter().chain(other.letters.iter()).copied())
    }

    /// `self^v = v^-1 · self · v`.
    pub fn conjugated_by(&self, v: &Word) -> Word {
        v.inverse().concat(self).concat(v)
    }

    /// Integer power; negative powers invert.
    pub fn pow(&self, k: i64) -> Word {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = Word::identity();
        for _ in 0..k.unsigned_abs() {
            out = out.concat(&base);
        }
        out
    }

    pub fn exponent_sum(&self, gen: usize) -> i64 {
        self.letters
            .iter()
            .filter(|&&(g, _)| g == gen)
            .map(|&(_, e)| e as i64)
            .sum()
    }

    /// Sum of all exponents; the image in the abelianization that
    /// identifies every generator.
    pub fn total_exponent_sum(&self) -> i64 {
        self.letters.iter().map(|&(_, e)| e as i64).sum()
    }

    pub fn exponent_sums(&self, num_gens: usize) -> Vec<i64> {
        let mut sums = vec![0i64; num_gens];
        for &(g, e) in &self.letters {
            sums[g] += e as i64;
        }
        sums
    }

    /// Applies a generator re-indexing to every letter.
    pub fn map_gens(&self, f: impl Fn(usize) -> usize) -> Word {
        Word::from_letters(self.letters.iter().map(|&(g, e)| (f(g), e)))
    }

    pub fn max_gen(&self) -> Option<usize> {
        self.letters.iter().map(|&(g, _)| g).max()
    }

    /// Renders the word against a generator name table.
    pub fn display(&self, names: &[String]) -> String {
        if self.letters.is_empty() {
            // No identity literal in the grammar; a cancelling pair
            // round-trips through the parser.
            if names.is_empty() {
                return String::new();
            }
            return format!("{} {}^-1", names[0], names[0]);
        }
        self.letters
            .iter()
            .map(|&(g, e)| {
                if e == 1 {
                    names[g].clone()
                } else {
                    format!("{}^-1", names[g])
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        let s: Vec<String> = self
            .letters
            .iter()
            .map(|&(g, e)| format!("g{}^{}", g, e))
            .collect();
        write!(f, "{}", s.join(" "))
    }
}

/// A finite group presentation: named generators and freely reduced relators.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Presentation {
    generators: Vec<String>,
    relators: Vec<Word>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PresentationError {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("undeclared generator `{0}`")]
    UndeclaredGenerator(String),
    #[error("duplicate generator `{0}`")]
    DuplicateGenerator(String),
}

impl Presentation {
    pub fn new(generators: Vec<String>, relators: Vec<Word>) -> Self {
        for r in &relators {
            if let Some(g) = r.max_gen() {
                assert!(g < generators.len(), "relator references generator {g}");
            }
        }
        Presentation { generators, relators }
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn num_gens(&self) -> usize {
        self.generators.len()
    }

    pub fn num_relators(&self) -> usize {
        self.relators.len()
    }

    /// Generators minus relators.
    pub fn deficiency(&self) -> i64 {
        self.generators.len() as i64 - self.relators.len() as i64
    }

    pub fn gen_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g == name)
    }

    pub fn word_display(&self, w: &Word) -> String {
        w.display(&self.generators)
    }

    pub fn parse(text: &str) -> Result<Presentation, PresentationError> {
        Parser::new(text).presentation()
    }

    /// Parses a word in this presentation's generators.
    pub fn parse_word(&self, text: &str) -> Result<Word, PresentationError> {
        let mut p = Parser::new(text);
        p.names = Some(&self.generators);
        let w = p.word()?;
        p.expect_end()?;
        Ok(w)
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "gens: {} ; rels:", self.generators.join(" "))?;
        for (i, r) in self.relators.iter().enumerate() {
            let sep = if i == 0 { " " } else { ", " };
            write!(f, "{}{}", sep, r.display(&self.generators))?;
        }
        Ok(())
    }
}

struct Parser<'a> {
    text: &'a str,
    bytes: &'a [u8],
    pos: usize,
    names: Option<&'a [String]>,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser { text, bytes: text.as_bytes(), pos: 0, names: None }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, PresentationError> {
        Err(PresentationError::Syntax { pos: self.pos, msg: msg.into() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<(), PresentationError> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(format!("expected `{}`", c as char))
        }
    }

    fn expect_end(&mut self) -> Result<(), PresentationError> {
        if self.peek().is_some() {
            self.err("trailing input")
        } else {
            Ok(())
        }
    }

    fn ident(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let start = self.pos;
        let b = *self.bytes.get(self.pos)?;
        if !b.is_ascii_alphabetic() {
            return None;
        }
        self.pos += 1;
        while self
            .bytes
            .get(self.pos)
            .map_or(false, |c| c.is_ascii_alphanumeric() || *c == b'_')
        {
            self.pos += 1;
        }
        Some(&self.text[start..self.pos])
    }

    fn keyword(&mut self, kw: &str) -> Result<(), PresentationError> {
        let save = self.pos;
        match self.ident() {
            Some(w) if w == kw => Ok(()),
            _ => {
                self.pos = save;
                self.err(format!("expected `{kw}`"))
            }
        }
    }

    fn int(&mut self) -> Option<i64> {
        self.skip_ws();
        let start = self.pos;
        let mut p = self.pos;
        if self.bytes.get(p) == Some(&b'-') {
            p += 1;
        }
        let digits = p;
        while self.bytes.get(p).map_or(false, |c| c.is_ascii_digit()) {
            p += 1;
        }
        if p == digits {
            self.pos = start;
            return None;
        }
        let val = self.text[start..p].parse().ok()?;
        self.pos = p;
        Some(val)
    }

    fn gen_index(&mut self, name: &str) -> Result<usize, PresentationError> {
        let names = self.names.expect("generator table not set");
        names
            .iter()
            .position(|g| g == name)
            .ok_or_else(|| PresentationError::UndeclaredGenerator(name.to_string()))
    }

    fn presentation(&mut self) -> Result<Presentation, PresentationError> {
        self.keyword("gens")?;
        self.expect(b':')?;
        let mut gens: Vec<String> = Vec::new();
        loop {
            let save = self.pos;
            match self.ident() {
                Some(name) if name != "rels" => {
                    if gens.iter().any(|g| g == name) {
                        return Err(PresentationError::DuplicateGenerator(name.to_string()));
                    }
                    gens.push(name.to_string());
                }
                _ => {
                    self.pos = save;
                    break;
                }
            }
        }
        if gens.is_empty() {
            return self.err("expected at least one generator");
        }
        self.expect(b';')?;
        self.keyword("rels")?;
        self.expect(b':')?;

        // Borrow-friendly: move the generator table into an owned slice
        // the sub-parser can reference.
        let names = gens.clone();
        let mut sub = Parser { text: self.text, bytes: self.bytes, pos: self.pos, names: Some(&names) };

        let mut relators = Vec::new();
        if sub.peek().is_some() {
            loop {
                let r = sub.relator()?;
                relators.push(r);
                if !sub.eat(b',') {
                    break;
                }
            }
            sub.expect_end()?;
        }
        Ok(Presentation::new(gens, relators))
    }

    fn relator(&mut self) -> Result<Word, PresentationError> {
        let lhs = self.word()?;
        if self.eat(b'=') {
            let rhs = self.word()?;
            Ok(lhs.inverse().concat(&rhs))
        } else {
            Ok(lhs)
        }
    }

    fn word(&mut self) -> Result<Word, PresentationError> {
        let mut out = self.atom()?;
        loop {
            match self.peek() {
                Some(c) if c.is_ascii_alphabetic() || c == b'(' || c == b'[' => {
                    let next = self.atom()?;
                    out = out.concat(&next);
                }
                _ => return Ok(out),
            }
        }
    }

    fn atom(&mut self) -> Result<Word, PresentationError> {
        let base = self.base()?;
        if self.eat(b'^') {
            if let Some(k) = self.int() {
                return Ok(base.pow(k));
            }
            // Right-associative word exponent: a^b^-1 = a^(b^-1).
            let exp = if self.peek() == Some(b'(') {
                self.pos += 1;
                let w = self.word()?;
                self.expect(b')')?;
                if self.eat(b'^') {
                    if let Some(k) = self.int() {
                        w.pow(k)
                    } else {
                        let inner = self.atom()?;
                        w.conjugated_by(&inner)
                    }
                } else {
                    w
                }
            } else {
                self.atom()?
            };
            return Ok(base.conjugated_by(&exp));
        }
        Ok(base)
    }

    fn base(&mut self) -> Result<Word, PresentationError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let w = self.word()?;
                self.expect(b')')?;
                Ok(w)
            }
            Some(b'[') => {
                self.pos += 1;
                let u = self.word()?;
                self.expect(b',')?;
                let v = self.word()?;
                self.expect(b']')?;
                // [u, v] = u^-1 v^-1 u v
                Ok(u.inverse().concat(&v.inverse()).concat(&u).concat(&v))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let name = self.ident().unwrap().to_string();
                let g = self.gen_index(&name)?;
                Ok(Word::letter(g, 1))
            }
            _ => self.err("expected a generator, `(` or `[`"),
        }
    }
}
