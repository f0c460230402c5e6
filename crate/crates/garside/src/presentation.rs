//! Complemented presentations and their line-based text format.

use std::fmt;

use thiserror::Error;

use crate::words::{Alphabet, Letter, PositiveWord};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PresentationError {
    #[error("alphabet must not be empty")]
    EmptyAlphabet,
    #[error("invalid letter token `{0}`")]
    BadToken(String),
    #[error("duplicate letter `{0}`")]
    DuplicateLetter(String),
    #[error("unknown letter `{0}`")]
    UnknownLetter(String),
    #[error("malformed word `{0}`")]
    BadWord(String),
    #[error("inverse letter `{0}` in a positive word")]
    InverseInPositiveWord(String),
    #[error("line {0}: expected `letters ...` first")]
    MissingLetters(usize),
    #[error("line {0}: {1}")]
    Line(usize, String),
    #[error("relation sides must start with distinct letters (pair `{0}`)")]
    SameHead(String),
    #[error("relation side is empty")]
    EmptySide,
    #[error("letter pair ({0}, {1}) already constrained")]
    DuplicatePair(String, String),
    #[error("complement of a letter with itself is implicitly empty and may not be stored")]
    DiagonalEntry,
    #[error("complement table is not symmetric: ({0}, {1}) defined without ({1}, {0})")]
    AsymmetricComplement(String, String),
}

/// The partial map f: Σ×Σ → Mo(Σ) defining a complemented presentation.
/// f(a,a) = ε is implicit and never stored; the off-diagonal domain is
/// symmetric: (a,b) is defined iff (b,a) is.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReversingFunction {
    n: usize,
    table: Vec<Option<PositiveWord>>,
}

impl ReversingFunction {
    pub fn new(n_letters: usize) -> Self {
        ReversingFunction {
            n: n_letters,
            table: vec![None; n_letters * n_letters],
        }
    }

    pub fn n_letters(&self) -> usize {
        self.n
    }

    pub fn get(&self, a: Letter, b: Letter) -> Option<&PositiveWord> {
        self.table[a * self.n + b].as_ref()
    }

    pub fn set(&mut self, a: Letter, b: Letter, w: PositiveWord) -> Result<(), PresentationError> {
        if a == b {
            return Err(PresentationError::DiagonalEntry);
        }
        let slot = &mut self.table[a * self.n + b];
        if slot.is_some() {
            return Err(PresentationError::DuplicatePair(a.to_string(), b.to_string()));
        }
        *slot = Some(w);
        Ok(())
    }

    /// Ordered letter pairs (a,b), a ≠ b, with f(a,b) defined.
    pub fn domain(&self) -> impl Iterator<Item = (Letter, Letter)> + '_ {
        let n = self.n;
        (0..n)
            .flat_map(move |a| (0..n).map(move |b| (a, b)))
            .filter(move |&(a, b)| a != b && self.get(a, b).is_some())
    }

    pub fn is_total(&self) -> bool {
        self.domain().count() == self.n * (self.n - 1)
    }

    fn check_symmetric(&self, alphabet: &Alphabet) -> Result<(), PresentationError> {
        for (a, b) in self.domain() {
            if self.get(b, a).is_none() {
                return Err(PresentationError::AsymmetricComplement(
                    alphabet.token(a).to_string(),
                    alphabet.token(b).to_string(),
                ));
            }
        }
        Ok(())
    }
}

/// Which input style the presentation was built from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PresentationSource {
    ComplementTable,
    RelationList,
}

/// A validated complemented presentation.
#[derive(Debug, Clone)]
pub struct Presentation {
    pub alphabet: Alphabet,
    pub f: ReversingFunction,
    pub source: PresentationSource,
}

impl PartialEq for Presentation {
    // Source is input provenance, not part of the presentation proper.
    fn eq(&self, other: &Self) -> bool {
        self.alphabet == other.alphabet && self.f == other.f
    }
}

impl Eq for Presentation {}

impl Presentation {
    pub fn new(
        alphabet: Alphabet,
        f: ReversingFunction,
        source: PresentationSource,
    ) -> Result<Self, PresentationError> {
        f.check_symmetric(&alphabet)?;
        Ok(Presentation { alphabet, f, source })
    }

    /// Parses the line-based file format. `#` starts a comment; the first
    /// significant line is `letters <tok> ...`, followed by any number of
    /// `rel <word> = <word>` and `compl <a> <b> = <word>` lines.
    pub fn parse(text: &str) -> Result<Self, PresentationError> {
        let mut alphabet: Option<Alphabet> = None;
        let mut f: Option<ReversingFunction> = None;
        let mut used_compl = false;
        let mut used_rel = false;

        for (idx, raw) in text.lines().enumerate() {
            let lineno = idx + 1;
            let line = match raw.find('#') {
                Some(p) => &raw[..p],
                None => raw,
            };
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let mut it = line.split_whitespace();
            let head = it.next().unwrap();
            match head {
                "letters" => {
                    if alphabet.is_some() {
                        return Err(PresentationError::Line(
                            lineno,
                            "duplicate `letters` line".to_string(),
                        ));
                    }
                    let al = Alphabet::new(it.map(str::to_string))?;
                    f = Some(ReversingFunction::new(al.len()));
                    alphabet = Some(al);
                }
                "rel" => {
                    let (al, tab) = match (&alphabet, &mut f) {
                        (Some(al), Some(tab)) => (al, tab),
                        _ => return Err(PresentationError::MissingLetters(lineno)),
                    };
                    used_rel = true;
                    let rest: Vec<&str> = it.collect();
                    let eq = rest
                        .iter()
                        .position(|t| *t == "=")
                        .ok_or_else(|| PresentationError::Line(lineno, "missing `=`".into()))?;
                    let lhs = al.parse_positive(&rest[..eq].join("."))?;
                    let rhs = al.parse_positive(&rest[eq + 1..].join("."))?;
                    add_relation(al, tab, &lhs, &rhs)?;
                }
                "compl" => {
                    let (al, tab) = match (&alphabet, &mut f) {
                        (Some(al), Some(tab)) => (al, tab),
                        _ => return Err(PresentationError::MissingLetters(lineno)),
                    };
                    used_compl = true;
                    let a_tok = it
                        .next()
                        .ok_or_else(|| PresentationError::Line(lineno, "missing letters".into()))?;
                    let b_tok = it
                        .next()
                        .ok_or_else(|| PresentationError::Line(lineno, "missing letters".into()))?;
                    let rest: Vec<&str> = it.collect();
                    if rest.first().copied() != Some("=") {
                        return Err(PresentationError::Line(lineno, "missing `=`".into()));
                    }
                    let a = al
                        .index_of(a_tok)
                        .ok_or_else(|| PresentationError::UnknownLetter(a_tok.to_string()))?;
                    let b = al
                        .index_of(b_tok)
                        .ok_or_else(|| PresentationError::UnknownLetter(b_tok.to_string()))?;
                    let w = al.parse_positive(&rest[1..].join("."))?;
                    if a == b {
                        return Err(PresentationError::DiagonalEntry);
                    }
                    tab.set(a, b, w).map_err(|e| rename_pair(e, al))?;
                }
                _ => {
                    return Err(PresentationError::Line(
                        lineno,
                        format!("unknown directive `{head}`"),
                    ))
                }
            }
        }

        let alphabet = alphabet.ok_or(PresentationError::MissingLetters(0))?;
        let f = f.unwrap();
        let source = if used_compl && !used_rel {
            PresentationSource::ComplementTable
        } else {
            PresentationSource::RelationList
        };
        Presentation::new(alphabet, f, source)
    }

    /// One relation (a·f(a,b), b·f(b,a)) per unordered domain pair, ordered
    /// by the letter pair.
    pub fn relations(&self) -> Vec<(PositiveWord, PositiveWord)> {
        let mut rels = Vec::new();
        for a in 0..self.alphabet.len() {
            for b in a + 1..self.alphabet.len() {
                if let (Some(u), Some(v)) = (self.f.get(a, b), self.f.get(b, a)) {
                    let lhs = PositiveWord::single(a).concat(u);
                    let rhs = PositiveWord::single(b).concat(v);
                    rels.push((lhs, rhs));
                }
            }
        }
        rels
    }

    /// Round-trip text: a `letters` line followed by the relation list.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str("letters");
        for tok in self.alphabet.tokens() {
            out.push(' ');
            out.push_str(tok);
        }
        out.push('\n');
        for (lhs, rhs) in self.relations() {
            out.push_str(&format!(
                "rel {} = {}\n",
                self.alphabet.format_positive(&lhs),
                self.alphabet.format_positive(&rhs)
            ));
        }
        out
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

fn rename_pair(e: PresentationError, al: &Alphabet) -> PresentationError {
    match e {
        PresentationError::DuplicatePair(a, b) => {
            let a: usize = a.parse().unwrap_or(0);
            let b: usize = b.parse().unwrap_or(0);
            PresentationError::DuplicatePair(al.token(a).to_string(), al.token(b).to_string())
        }
        other => other,
    }
}

fn add_relation(
    al: &Alphabet,
    tab: &mut ReversingFunction,
    lhs: &PositiveWord,
    rhs: &PositiveWord,
) -> Result<(), PresentationError> {
    let (&a, lrest) = lhs
        .letters()
        .split_first()
        .ok_or(PresentationError::EmptySide)?;
    let (&b, rrest) = rhs
        .letters()
        .split_first()
        .ok_or(PresentationError::EmptySide)?;
    if a == b {
        return Err(PresentationError::SameHead(al.token(a).to_string()));
    }
    tab.set(a, b, PositiveWord::new(lrest.to_vec()))
        .map_err(|e| rename_pair(e, al))?;
    tab.set(b, a, PositiveWord::new(rrest.to_vec()))
        .map_err(|e| rename_pair(e, al))?;
    Ok(())
}

/// Builds a presentation from letter tokens and relation texts, for tests
/// and the enumerator.
pub fn presentation_from_relations(
    letters: &[&str],
    relations: &[(&str, &str)],
) -> Result<Presentation, PresentationError> {
    let al = Alphabet::new(letters.iter().copied())?;
    let mut f = ReversingFunction::new(al.len());
    for (l, r) in relations {
        let lhs = al.parse_positive(l)?;
        let rhs = al.parse_positive(r)?;
        add_relation(&al, &mut f, &lhs, &rhs)?;
    }
    Presentation::new(al, f, PresentationSource::RelationList)
}
