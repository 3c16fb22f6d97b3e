//! Clasp words: finite sequences of signed letters `x_i^{±1}`.
//!
//! Words are kept fully expanded (`x3^-2` becomes two copies of `x3^-1`) and
//! are never freely reduced, so `x1 x1^-1` stays a word of length two.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

/// A letter `x_index^sign`. The index is always at least 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedLetter {
    index: u32,
    sign: Sign,
}

impl SignedLetter {
    pub fn new(index: u32, sign: Sign) -> Result<Self> {
        if index == 0 {
            return Err(Error::OutOfDomain("letter index must be at least 1".into()));
        }
        Ok(SignedLetter { index, sign })
    }

    /// `x_index`. Panics if `index == 0`.
    pub const fn pos(index: u32) -> Self {
        assert!(index >= 1, "letter index must be at least 1");
        SignedLetter { index, sign: Sign::Plus }
    }

    /// `x_index^-1`. Panics if `index == 0`.
    pub const fn neg(index: u32) -> Self {
        assert!(index >= 1, "letter index must be at least 1");
        SignedLetter { index, sign: Sign::Minus }
    }

    pub fn index(self) -> u32 {
        self.index
    }

    pub fn sign(self) -> Sign {
        self.sign
    }

    pub fn inverse(self) -> Self {
        SignedLetter { index: self.index, sign: self.sign.flip() }
    }
}

impl fmt::Display for SignedLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sign {
            Sign::Plus => write!(f, "x{}", self.index),
            Sign::Minus => write!(f, "x{}^-1", self.index),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct ClaspWord {
    letters: Vec<SignedLetter>,
}

impl ClaspWord {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_letters(letters: Vec<SignedLetter>) -> Self {
        ClaspWord { letters }
    }

    pub fn letters(&self) -> &[SignedLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn push(&mut self, letter: SignedLetter) {
        self.letters.push(letter);
    }

    /// Appends `x_index^power` expanded into `|power|` letters.
    pub fn push_power(&mut self, index: u32, power: i64) {
        let letter = if power >= 0 { SignedLetter::pos(index) } else { SignedLetter::neg(index) };
        self.letters
            .extend(std::iter::repeat_n(letter, power.unsigned_abs() as usize));
    }

    /// Sum of the signs of all letters with the given index.
    pub fn signed_count(&self, index: u32) -> i64 {
        self.letters
            .iter()
            .filter(|l| l.index == index)
            .map(|l| l.sign.value())
            .sum()
    }

    /// Number of letters with the given index, ignoring sign.
    pub fn occurrences(&self, index: u32) -> usize {
        self.letters.iter().filter(|l| l.index == index).count()
    }

    /// Deletes every letter whose index is neither `i` nor `j`.
    pub fn restrict(&self, i: u32, j: u32) -> Result<ClaspWord> {
        if i == j {
            return Err(Error::RepeatedIndex(i));
        }
        Ok(ClaspWord {
            letters: self
                .letters
                .iter()
                .copied()
                .filter(|l| l.index == i || l.index == j)
                .collect(),
        })
    }

    /// Cyclic left rotation by `k` (taken mod the length; negative rotates right).
    pub fn rotate(&self, k: i64) -> ClaspWord {
        let m = self.letters.len();
        if m == 0 {
            return ClaspWord::new();
        }
        let shift = k.rem_euclid(m as i64) as usize;
        let mut letters = self.letters.clone();
        letters.rotate_left(shift);
        ClaspWord { letters }
    }

    /// Every letter inverted, order kept.
    pub fn mirrored(&self) -> ClaspWord {
        ClaspWord { letters: self.letters.iter().map(|l| l.inverse()).collect() }
    }

    /// Parses a word file: like [`parse_word`] but lines whose first
    /// non-blank character is `#` are ignored.
    pub fn parse_file(text: &str) -> Result<ClaspWord> {
        let mut blanked = String::with_capacity(text.len());
        for line in text.split_inclusive('\n') {
            if line.trim_start().starts_with('#') {
                // keep byte offsets stable for error positions
                blanked.extend(line.chars().map(|c| if c == '\n' { '\n' } else { ' ' }));
            } else {
                blanked.push_str(line);
            }
        }
        parse_word(&blanked)
    }
}

impl fmt::Display for ClaspWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, letter) in self.letters.iter().enumerate() {
            if n > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{letter}")?;
        }
        Ok(())
    }
}

impl FromStr for ClaspWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_word(s)
    }
}

impl FromIterator<SignedLetter> for ClaspWord {
    fn from_iter<T: IntoIterator<Item = SignedLetter>>(iter: T) -> Self {
        ClaspWord { letters: iter.into_iter().collect() }
    }
}

/// Parses `x1 x2^3 . x1^-1`-style text into an expanded word.
///
/// Terms are `x<INT>` optionally followed by `^<SIGNEDINT>`, separated by
/// whitespace and/or a single `.`.
pub fn parse_word(text: &str) -> Result<ClaspWord> {
    Parser { src: text.as_bytes(), pos: 0 }.word()
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err<T>(&self, pos: usize, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax { pos, msg: msg.into() })
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn skip_ws(&mut self) -> bool {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_whitespace()) {
            self.pos += 1;
        }
        self.pos > start
    }

    /// Consumes a separator; returns false if none was present.
    fn separator(&mut self) -> Result<bool> {
        let mut seen = self.skip_ws();
        if self.peek() == Some(b'.') {
            self.pos += 1;
            seen = true;
            self.skip_ws();
            if self.peek() == Some(b'.') {
                return self.err(self.pos, "repeated '.' separator");
            }
        }
        Ok(seen)
    }

    fn word(mut self) -> Result<ClaspWord> {
        let mut word = ClaspWord::new();
        self.skip_ws();
        if self.peek().is_none() {
            return Ok(word);
        }
        loop {
            let (index, power) = self.term()?;
            word.push_power(index, power);
            let had_sep = self.separator()?;
            match self.peek() {
                None => return Ok(word),
                Some(_) if had_sep => {}
                Some(c) => {
                    return self.err(self.pos, format!("expected separator, found '{}'", c as char))
                }
            }
        }
    }

    fn term(&mut self) -> Result<(u32, i64)> {
        match self.peek() {
            Some(b'x') => self.pos += 1,
            Some(c) => return self.err(self.pos, format!("expected 'x', found '{}'", c as char)),
            None => return self.err(self.pos, "expected 'x', found end of input"),
        }
        let at = self.pos;
        if self.peek() == Some(b'-') {
            return self.err(at, "letter index must be positive");
        }
        let index = self.unsigned("letter index")?;
        if index == 0 {
            return self.err(at, "letter index must be at least 1");
        }
        let index = u32::try_from(index).or_else(|_| self.err(at, "letter index too large"))?;
        let mut power = 1i64;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let at = self.pos;
            let negative = self.peek() == Some(b'-');
            if negative {
                self.pos += 1;
            }
            let magnitude = self.unsigned("exponent")?;
            if magnitude == 0 {
                return self.err(at, "exponent must be nonzero");
            }
            let magnitude =
                i64::try_from(magnitude).or_else(|_| self.err(at, "exponent too large"))?;
            power = if negative { -magnitude } else { magnitude };
        }
        Ok((index, power))
    }

    fn unsigned(&mut self, what: &str) -> Result<u64> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        let digits = &self.src[start..self.pos];
        if digits.is_empty() {
            return self.err(start, format!("expected {what}"));
        }
        if digits.len() > 1 && digits[0] == b'0' {
            return self.err(start, format!("{what} has a leading zero"));
        }
        // digits are ASCII so this is valid UTF-8
        std::str::from_utf8(digits)
            .unwrap()
            .parse::<u64>()
            .or_else(|_| self.err(start, format!("{what} too large")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(s: &str) -> ClaspWord {
        s.parse().unwrap()
    }

    #[test]
    fn parses_commutator() {
        use SignedLetter as L;
        assert_eq!(w("x1 x2 x1^-1 x2^-1").letters(), &[L::pos(1), L::pos(2), L::neg(1), L::neg(2)]);
    }

    #[test]
    fn expands_exponents() {
        assert_eq!(w("x3^-2").letters(), &[SignedLetter::neg(3), SignedLetter::neg(3)]);
        assert_eq!(w("x2^3").len(), 3);
    }

    #[test]
    fn empty_and_blank() {
        assert!(w("").is_empty());
        assert!(w("  \n\t").is_empty());
    }

    #[test]
    fn dot_separator() {
        assert_eq!(w("x1.x2.x1^-1"), w("x1 x2 x1^-1"));
        assert_eq!(w("x1 . x2"), w("x1 x2"));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(parse_word("x0"), Err(Error::Syntax { pos: 1, .. })));
        assert!(matches!(parse_word("x-1"), Err(Error::Syntax { pos: 1, .. })));
        assert!(matches!(parse_word("x1^0"), Err(Error::Syntax { pos: 3, .. })));
        assert!(matches!(parse_word("x1 y2"), Err(Error::Syntax { pos: 3, .. })));
        assert!(matches!(parse_word("x1x2"), Err(Error::Syntax { pos: 2, .. })));
        assert!(matches!(parse_word("x01"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_word("x1..x2"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_word("x1^"), Err(Error::Syntax { pos: 3, .. })));
        assert!(matches!(parse_word("x99999999999"), Err(Error::Syntax { .. })));
    }

    #[test]
    fn word_file_comments() {
        let text = "# the first clasp word\nx3^-1 x2\n  # more\nx3 x2^-1\n";
        assert_eq!(ClaspWord::parse_file(text).unwrap(), w("x3^-1 x2 x3 x2^-1"));
        let err = ClaspWord::parse_file("# c\nx0").unwrap_err();
        assert_eq!(err, Error::Syntax { pos: 5, msg: "letter index must be at least 1".into() });
    }

    #[test]
    fn signed_counts() {
        assert_eq!(w("x1 x2 x1^-1 x2^-1").signed_count(1), 0);
        assert_eq!(w("x3^-1 x2 x3 x2^-1").signed_count(2), 0);
        assert_eq!(w("x1 x1 x2").signed_count(1), 2);
        assert_eq!(w("x1 x1 x2").signed_count(7), 0);
    }

    #[test]
    fn restriction() {
        assert_eq!(w("x3 x1 x3^-1 x2").restrict(1, 2).unwrap(), w("x1 x2"));
        let c = w("x1 x2 x1^-1 x2^-1");
        assert_eq!(c.restrict(1, 2).unwrap(), c);
        assert!(w("x3 x3^-1").restrict(1, 2).unwrap().is_empty());
        assert_eq!(c.restrict(2, 2), Err(Error::RepeatedIndex(2)));
    }

    #[test]
    fn rotation() {
        let x = w("x1 x2 x3");
        assert_eq!(x.rotate(1), w("x2 x3 x1"));
        assert_eq!(x.rotate(0), x);
        assert_eq!(x.rotate(3), x);
        assert_eq!(x.rotate(-1), w("x3 x1 x2"));
        assert!(ClaspWord::new().rotate(5).is_empty());
    }

    #[test]
    fn canonical_printing() {
        assert_eq!(w("x3^-2 . x1^2").to_string(), "x3^-1 x3^-1 x1 x1");
        assert_eq!(ClaspWord::new().to_string(), "");
    }

    fn arb_word(max_index: u32, max_len: usize) -> impl Strategy<Value = ClaspWord> {
        prop::collection::vec((1..=max_index, any::<bool>()), 0..=max_len).prop_map(|v| {
            v.into_iter()
                .map(|(i, p)| if p { SignedLetter::pos(i) } else { SignedLetter::neg(i) })
                .collect()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(10_000))]

        #[test]
        fn print_parse_round_trip(word in arb_word(40, 30)) {
            prop_assert_eq!(parse_word(&word.to_string()).unwrap(), word);
        }
    }

    proptest! {
        #[test]
        fn restrict_idempotent(word in arb_word(4, 30), i in 1u32..=4, j in 1u32..=4) {
            prop_assume!(i != j);
            let once = word.restrict(i, j).unwrap();
            prop_assert_eq!(once.restrict(i, j).unwrap(), once.clone());
            prop_assert_eq!(once.len(), word.occurrences(i) + word.occurrences(j));
        }

        #[test]
        fn rotation_keeps_signed_counts(word in arb_word(4, 30), k in -50i64..50, i in 1u32..=4) {
            prop_assert_eq!(word.rotate(k).signed_count(i), word.signed_count(i));
        }
    }
}
