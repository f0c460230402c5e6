//! Alphabets and the two word carriers: positive words and signed words.

use std::cmp::Ordering;
use std::fmt;

use crate::presentation::PresentationError;

/// Index of a letter in its alphabet.
pub type Letter = usize;

/// Characters that cannot appear in a letter token.
const FORBIDDEN: [char; 4] = ['.', '\'', '#', '='];

/// An ordered alphabet. Declaration order is fixed at construction and
/// defines the shortlex order used for every canonical choice downstream.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    letters: Vec<String>,
}

impl Alphabet {
    pub fn new<S: Into<String>>(letters: impl IntoIterator<Item = S>) -> Result<Self, PresentationError> {
        let letters: Vec<String> = letters.into_iter().map(Into::into).collect();
        if letters.is_empty() {
            return Err(PresentationError::EmptyAlphabet);
        }
        for tok in &letters {
            if tok.is_empty() || tok.chars().any(|c| c.is_whitespace() || FORBIDDEN.contains(&c)) {
                return Err(PresentationError::BadToken(tok.clone()));
            }
        }
        for (i, tok) in letters.iter().enumerate() {
            if letters[..i].contains(tok) {
                return Err(PresentationError::DuplicateLetter(tok.clone()));
            }
        }
        Ok(Alphabet { letters })
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn token(&self, l: Letter) -> &str {
        &self.letters[l]
    }

    pub fn tokens(&self) -> &[String] {
        &self.letters
    }

    pub fn index_of(&self, tok: &str) -> Option<Letter> {
        self.letters.iter().position(|t| t == tok)
    }

    fn all_single_char(&self) -> bool {
        self.letters.iter().all(|t| t.chars().count() == 1)
    }

    /// Parses a positive word: dotted tokens, or a compact string when all
    /// letters are single characters. The empty string is ε.
    pub fn parse_positive(&self, text: &str) -> Result<PositiveWord, PresentationError> {
        let w = self.parse_signed(text)?;
        let mut letters = Vec::with_capacity(w.len());
        for &(l, s) in w.syllables() {
            if s == Sign::Minus {
                return Err(PresentationError::InverseInPositiveWord(
                    self.token(l).to_string(),
                ));
            }
            letters.push(l);
        }
        Ok(PositiveWord::new(letters))
    }

    /// Parses a signed word; a trailing apostrophe marks an inverse letter.
    pub fn parse_signed(&self, text: &str) -> Result<SignedWord, PresentationError> {
        let text = text.trim();
        let mut syllables = Vec::new();
        if text.is_empty() {
            return Ok(SignedWord::new(syllables));
        }
        if text.contains('.') || !self.all_single_char() {
            for tok in text.split('.') {
                let tok = tok.trim();
                if tok.is_empty() {
                    return Err(PresentationError::BadWord(text.to_string()));
                }
                let (core, sign) = match tok.strip_suffix('\'') {
                    Some(core) => (core, Sign::Minus),
                    None => (tok, Sign::Plus),
                };
                let l = self
                    .index_of(core)
                    .ok_or_else(|| PresentationError::UnknownLetter(core.to_string()))?;
                syllables.push((l, sign));
            }
        } else {
            for c in text.chars() {
                if c == '\'' {
                    match syllables.last_mut() {
                        Some((_, s)) if *s == Sign::Plus => *s = Sign::Minus,
                        _ => return Err(PresentationError::BadWord(text.to_string())),
                    }
                } else {
                    let l = self
                        .index_of(&c.to_string())
                        .ok_or_else(|| PresentationError::UnknownLetter(c.to_string()))?;
                    syllables.push((l, Sign::Plus));
                }
            }
        }
        Ok(SignedWord::new(syllables))
    }

    /// Canonical text of a positive word; `parse_positive` inverts it.
    pub fn format_positive(&self, w: &PositiveWord) -> String {
        if self.all_single_char() {
            w.letters().iter().map(|&l| self.token(l)).collect()
        } else {
            w.letters()
                .iter()
                .map(|&l| self.token(l))
                .collect::<Vec<_>>()
                .join(".")
        }
    }

    pub fn format_signed(&self, w: &SignedWord) -> String {
        let piece = |&(l, s): &(Letter, Sign)| {
            let mut t = self.token(l).to_string();
            if s == Sign::Minus {
                t.push('\'');
            }
            t
        };
        if self.all_single_char() {
            w.syllables().iter().map(piece).collect()
        } else {
            w.syllables().iter().map(piece).collect::<Vec<_>>().join(".")
        }
    }

    /// Human-oriented rendering: ε for the empty word.
    pub fn display_positive(&self, w: &PositiveWord) -> String {
        if w.is_empty() {
            "ε".to_string()
        } else {
            self.format_positive(w)
        }
    }

    pub fn display_signed(&self, w: &SignedWord) -> String {
        if w.is_empty() {
            "ε".to_string()
        } else {
            self.format_signed(w)
        }
    }
}

/// A finite (possibly empty) sequence of alphabet indices.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct PositiveWord {
    letters: Vec<Letter>,
}

impl PositiveWord {
    pub fn new(letters: Vec<Letter>) -> Self {
        PositiveWord { letters }
    }

    pub fn empty() -> Self {
        PositiveWord { letters: Vec::new() }
    }

    pub fn single(l: Letter) -> Self {
        PositiveWord { letters: vec![l] }
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

    pub fn concat(&self, other: &PositiveWord) -> PositiveWord {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        PositiveWord { letters }
    }

    pub fn push(&mut self, l: Letter) {
        self.letters.push(l);
    }

    pub fn to_signed(&self) -> SignedWord {
        SignedWord::new(self.letters.iter().map(|&l| (l, Sign::Plus)).collect())
    }

    /// The formal inverse as a signed word: reversed order, all signs negative.
    pub fn inverse_signed(&self) -> SignedWord {
        SignedWord::new(self.letters.iter().rev().map(|&l| (l, Sign::Minus)).collect())
    }

    /// Shortlex order: length first, then left-to-right letter order.
    pub fn shortlex_cmp(&self, other: &PositiveWord) -> Ordering {
        self.letters
            .len()
            .cmp(&other.letters.len())
            .then_with(|| self.letters.cmp(&other.letters))
    }
}

impl FromIterator<Letter> for PositiveWord {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        PositiveWord::new(iter.into_iter().collect())
    }
}

impl fmt::Display for PositiveWord {
    // Index-based rendering, mainly for diagnostics; prefer Alphabet formatting.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "ε");
        }
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, ".")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// Sign of a syllable in a signed word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

/// A word over Σ ∪ Σ⁻¹.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct SignedWord {
    syllables: Vec<(Letter, Sign)>,
}

impl SignedWord {
    pub fn new(syllables: Vec<(Letter, Sign)>) -> Self {
        SignedWord { syllables }
    }

    pub fn empty() -> Self {
        SignedWord { syllables: Vec::new() }
    }

    pub fn syllables(&self) -> &[(Letter, Sign)] {
        &self.syllables
    }

    pub fn len(&self) -> usize {
        self.syllables.len()
    }

    pub fn is_empty(&self) -> bool {
        self.syllables.is_empty()
    }

    /// w ↦ w⁻¹: reverses the order and flips all signs.
    pub fn inverse(&self) -> SignedWord {
        SignedWord::new(
            self.syllables
                .iter()
                .rev()
                .map(|&(l, s)| (l, s.flip()))
                .collect(),
        )
    }

    pub fn concat(&self, other: &SignedWord) -> SignedWord {
        let mut syllables = self.syllables.clone();
        syllables.extend_from_slice(&other.syllables);
        SignedWord { syllables }
    }

    /// u⁻¹·v for positive u, v.
    pub fn quotient(u: &PositiveWord, v: &PositiveWord) -> SignedWord {
        u.inverse_signed().concat(&v.to_signed())
    }

    /// u·v⁻¹ for positive u, v.
    pub fn right_quotient(u: &PositiveWord, v: &PositiveWord) -> SignedWord {
        u.to_signed().concat(&v.inverse_signed())
    }
}

/// Sorts words shortlex and drops duplicates.
pub fn sort_shortlex(words: &mut Vec<PositiveWord>) {
    words.sort_by(|a, b| a.shortlex_cmp(b));
    words.dedup();
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ab() -> Alphabet {
        Alphabet::new(["a", "b"]).unwrap()
    }

    #[test]
    fn rejects_bad_tokens() {
        assert!(Alphabet::new(["a", "b'"]).is_err());
        assert!(Alphabet::new(["a", "a"]).is_err());
        assert!(Alphabet::new(Vec::<String>::new()).is_err());
        assert!(Alphabet::new(["x=y"]).is_err());
    }

    #[test]
    fn parses_compact_signed() {
        let al = ab();
        let w = al.parse_signed("a'baa").unwrap();
        assert_eq!(
            w.syllables(),
            &[(0, Sign::Minus), (1, Sign::Plus), (0, Sign::Plus), (0, Sign::Plus)]
        );
    }

    #[test]
    fn parses_empty_and_dotted() {
        let al = ab();
        assert!(al.parse_positive("").unwrap().is_empty());
        let w = al.parse_positive("b.a.b").unwrap();
        assert_eq!(w.letters(), &[1, 0, 1]);
        let s = al.parse_signed("b.a'.b").unwrap();
        assert_eq!(s.syllables()[1], (0, Sign::Minus));
    }

    #[test]
    fn positive_mode_rejects_apostrophe() {
        let al = ab();
        assert!(al.parse_positive("a'b").is_err());
    }

    #[test]
    fn multichar_tokens_roundtrip() {
        let al = Alphabet::new(["s1", "s2"]).unwrap();
        let w = al.parse_positive("s1.s2.s1").unwrap();
        assert_eq!(al.format_positive(&w), "s1.s2.s1");
        let s = al.parse_signed("s2'.s1").unwrap();
        assert_eq!(al.format_signed(&s), "s2'.s1");
    }

    #[test]
    fn shortlex_orders_by_length_first() {
        let mut ws = vec![
            PositiveWord::new(vec![1, 0]),
            PositiveWord::empty(),
            PositiveWord::new(vec![0, 1]),
            PositiveWord::new(vec![1]),
        ];
        sort_shortlex(&mut ws);
        let lens: Vec<usize> = ws.iter().map(|w| w.len()).collect();
        assert_eq!(lens, vec![0, 1, 2, 2]);
        assert_eq!(ws[2].letters(), &[0, 1]);
    }

    proptest! {
        #[test]
        fn inversion_is_an_involution(xs in proptest::collection::vec((0usize..2, prop_oneof![Just(Sign::Plus), Just(Sign::Minus)]), 0..20)) {
            let w = SignedWord::new(xs);
            prop_assert_eq!(w.inverse().inverse(), w);
        }

        #[test]
        fn format_parse_roundtrip(xs in proptest::collection::vec((0usize..2, prop_oneof![Just(Sign::Plus), Just(Sign::Minus)]), 0..20)) {
            let al = ab();
            let w = SignedWord::new(xs);
            let text = al.format_signed(&w);
            prop_assert_eq!(al.parse_signed(&text).unwrap(), w);
        }
    }
}
