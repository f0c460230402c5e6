//! The word-reversing engine.
//!
//! Right reversing rewrites `a⁻¹b` into `f(a,b)·f(b,a)⁻¹`, always at the
//! leftmost negative-positive frontier; a converged result has all positive
//! syllables before all negative ones. Left reversing is the mirror image:
//! `a·b⁻¹` becomes `f̃(b,a)⁻¹·f̃(a,b)`, rewritten at the rightmost frontier,
//! and converges to a negative-then-positive word. Both are fuel-bounded so
//! a divergent presentation surfaces as an explicit outcome, never a hang.

use crate::presentation::ReversingFunction;
use crate::words::{Alphabet, Letter, PositiveWord, Sign, SignedWord};

/// Step and word-length budgets for one reversing computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Fuel {
    pub max_steps: u64,
    pub max_word_len: usize,
}

impl Default for Fuel {
    fn default() -> Self {
        Fuel {
            max_steps: 1_000_000,
            max_word_len: 10_000,
        }
    }
}

impl Fuel {
    pub fn new(max_steps: u64, max_word_len: usize) -> Self {
        assert!(max_steps > 0 && max_word_len > 0);
        Fuel { max_steps, max_word_len }
    }
}

/// Result of reversing one signed word.
///
/// For right reversing, `Converged { positive, negative }` means the final
/// word is `positive · negative⁻¹`; for left reversing it is
/// `negative⁻¹ · positive`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ReversalOutcome {
    Converged {
        positive: PositiveWord,
        negative: PositiveWord,
        steps: u64,
    },
    /// A required complement f(a,b) is undefined: the ⊥ of the theory.
    Blocked { pair: (Letter, Letter), steps: u64 },
    FuelExhausted { steps: u64 },
}

impl ReversalOutcome {
    pub fn steps(&self) -> u64 {
        match self {
            ReversalOutcome::Converged { steps, .. }
            | ReversalOutcome::Blocked { steps, .. }
            | ReversalOutcome::FuelExhausted { steps } => *steps,
        }
    }

    pub fn converged(&self) -> Option<(&PositiveWord, &PositiveWord)> {
        match self {
            ReversalOutcome::Converged { positive, negative, .. } => Some((positive, negative)),
            _ => None,
        }
    }
}

/// A word-valued partial result: the value, ⊥, or an exhausted budget.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WordOutcome {
    Defined(PositiveWord),
    Undefined,
    FuelExhausted,
}

impl WordOutcome {
    pub fn defined(&self) -> Option<&PositiveWord> {
        match self {
            WordOutcome::Defined(w) => Some(w),
            _ => None,
        }
    }
}

/// Tri-valued answer of the ≡⁺⁺ test; budget exhaustion is not a `false`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EquivResult {
    Equivalent,
    Distinct,
    FuelExhausted,
}

#[inline]
fn block_of<'a>(
    f: &'a ReversingFunction,
    x: Letter,
    y: Letter,
) -> Option<(&'a [Letter], &'a [Letter])> {
    if x == y {
        return Some((&[], &[]));
    }
    match (f.get(x, y), f.get(y, x)) {
        (Some(u), Some(v)) => Some((u.letters(), v.letters())),
        _ => None,
    }
}

/// Right reverses `w`: eliminates every a⁻¹b frontier, leftmost first.
pub fn reverse_right(w: &SignedWord, f: &ReversingFunction, fuel: &Fuel) -> ReversalOutcome {
    let mut steps: u64 = 0;
    if w.len() > fuel.max_word_len {
        return ReversalOutcome::FuelExhausted { steps };
    }
    // `rest` holds the unscanned suffix, top of stack = next syllable;
    // `done` holds the scanned prefix, which contains no frontier.
    let mut rest: Vec<(Letter, Sign)> = w.syllables().iter().rev().copied().collect();
    let mut done: Vec<(Letter, Sign)> = Vec::with_capacity(w.len());
    while let Some(cur) = rest.pop() {
        match done.last() {
            Some(&(x, Sign::Minus)) if cur.1 == Sign::Plus => {
                let y = cur.0;
                if steps == fuel.max_steps {
                    return ReversalOutcome::FuelExhausted { steps };
                }
                steps += 1;
                let Some((pos, neg)) = block_of(f, x, y) else {
                    return ReversalOutcome::Blocked { pair: (x, y), steps };
                };
                done.pop();
                // Replacement block in word order: f(x,y) then f(y,x)⁻¹.
                // Push reversed so the block's first letter is scanned next;
                // frontiers may cascade back to the left.
                for &l in neg {
                    rest.push((l, Sign::Minus));
                }
                for &l in pos.iter().rev() {
                    rest.push((l, Sign::Plus));
                }
                if done.len() + rest.len() > fuel.max_word_len {
                    return ReversalOutcome::FuelExhausted { steps };
                }
            }
            _ => done.push(cur),
        }
    }
    let cut = done
        .iter()
        .position(|&(_, s)| s == Sign::Minus)
        .unwrap_or(done.len());
    debug_assert!(done[cut..].iter().all(|&(_, s)| s == Sign::Minus));
    let positive = PositiveWord::new(done[..cut].iter().map(|&(l, _)| l).collect());
    let negative = PositiveWord::new(done[cut..].iter().rev().map(|&(l, _)| l).collect());
    ReversalOutcome::Converged { positive, negative, steps }
}

/// Left reverses `w`: eliminates every a·b⁻¹ frontier, rightmost first.
/// `ft` must be a left selector (see `GarsideStructure::left_selector`).
pub fn reverse_left(w: &SignedWord, ft: &ReversingFunction, fuel: &Fuel) -> ReversalOutcome {
    let mut steps: u64 = 0;
    if w.len() > fuel.max_word_len {
        return ReversalOutcome::FuelExhausted { steps };
    }
    // Mirror scan: `rest` is the unscanned prefix in word order (pop = the
    // syllable just left of the cursor); `done` is the scanned suffix with
    // top of stack = its first syllable.
    let mut rest: Vec<(Letter, Sign)> = w.syllables().to_vec();
    let mut done: Vec<(Letter, Sign)> = Vec::with_capacity(w.len());
    while let Some(cur) = rest.pop() {
        match done.last() {
            Some(&(y, Sign::Minus)) if cur.1 == Sign::Plus => {
                let x = cur.0;
                if steps == fuel.max_steps {
                    return ReversalOutcome::FuelExhausted { steps };
                }
                steps += 1;
                // x·y⁻¹ → f̃(y,x)⁻¹·f̃(x,y)
                let Some((pos, neg)) = block_of(ft, x, y) else {
                    return ReversalOutcome::Blocked { pair: (x, y), steps };
                };
                done.pop();
                // Block in word order: f̃(y,x)⁻¹ then f̃(x,y). Push it back
                // on the unscanned side so frontiers at both junctions are
                // revisited; the rightmost block letter is popped first.
                for &l in neg.iter().rev() {
                    rest.push((l, Sign::Minus));
                }
                for &l in pos {
                    rest.push((l, Sign::Plus));
                }
                if done.len() + rest.len() > fuel.max_word_len {
                    return ReversalOutcome::FuelExhausted { steps };
                }
            }
            _ => done.push(cur),
        }
    }
    done.reverse();
    let cut = done
        .iter()
        .position(|&(_, s)| s == Sign::Plus)
        .unwrap_or(done.len());
    debug_assert!(done[cut..].iter().all(|&(_, s)| s == Sign::Plus));
    let negative = PositiveWord::new(done[..cut].iter().rev().map(|&(l, _)| l).collect());
    let positive = PositiveWord::new(done[cut..].iter().map(|&(l, _)| l).collect());
    ReversalOutcome::Converged { positive, negative, steps }
}

/// Reverses u⁻¹v; on convergence the positive part is u\v and the negative
/// part is v\u, both in one call.
pub fn right_complement(
    u: &PositiveWord,
    v: &PositiveWord,
    f: &ReversingFunction,
    fuel: &Fuel,
) -> ReversalOutcome {
    reverse_right(&SignedWord::quotient(u, v), f, fuel)
}

/// Left reverses u·v⁻¹; on convergence the positive part is u/v and the
/// negative part is v/u.
pub fn left_complement(
    u: &PositiveWord,
    v: &PositiveWord,
    ft: &ReversingFunction,
    fuel: &Fuel,
) -> ReversalOutcome {
    reverse_left(&SignedWord::right_quotient(u, v), ft, fuel)
}

/// The right lcm word u ∨ v = u·(u\v).
pub fn right_lcm_word(
    u: &PositiveWord,
    v: &PositiveWord,
    f: &ReversingFunction,
    fuel: &Fuel,
) -> WordOutcome {
    match right_complement(u, v, f, fuel) {
        ReversalOutcome::Converged { positive, .. } => WordOutcome::Defined(u.concat(&positive)),
        ReversalOutcome::Blocked { .. } => WordOutcome::Undefined,
        ReversalOutcome::FuelExhausted { .. } => WordOutcome::FuelExhausted,
    }
}

/// The left lcm word u ∨̃ v = (u/v)·v.
pub fn left_lcm_word(
    u: &PositiveWord,
    v: &PositiveWord,
    ft: &ReversingFunction,
    fuel: &Fuel,
) -> WordOutcome {
    match left_complement(u, v, ft, fuel) {
        ReversalOutcome::Converged { positive, .. } => WordOutcome::Defined(positive.concat(v)),
        ReversalOutcome::Blocked { .. } => WordOutcome::Undefined,
        ReversalOutcome::FuelExhausted { .. } => WordOutcome::FuelExhausted,
    }
}

/// u ≡⁺⁺ v: both complements reverse to ε, i.e. u⁻¹v reverses to the empty
/// word. For a recognized Garside presentation this decides equality in the
/// monoid.
pub fn equiv_pp(
    u: &PositiveWord,
    v: &PositiveWord,
    f: &ReversingFunction,
    fuel: &Fuel,
) -> EquivResult {
    match right_complement(u, v, f, fuel) {
        ReversalOutcome::Converged { positive, negative, .. } => {
            if positive.is_empty() && negative.is_empty() {
                EquivResult::Equivalent
            } else {
                EquivResult::Distinct
            }
        }
        ReversalOutcome::Blocked { .. } => EquivResult::Distinct,
        ReversalOutcome::FuelExhausted { .. } => EquivResult::FuelExhausted,
    }
}

/// One cell of a reversing grid with its four edge words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridCell {
    pub left: PositiveWord,
    pub top: PositiveWord,
    pub bottom: Option<PositiveWord>,
    pub right: Option<PositiveWord>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GridStatus {
    Complete,
    Blocked { pair: (Letter, Letter) },
    FuelExhausted,
}

/// The planar diagram of one reversing computation: one cell per letter pair
/// of (u, v), closed row by row. Pasting holds by construction: the bottom
/// edge of a cell is the top edge of the cell below it.
#[derive(Debug, Clone)]
pub struct ReversingGrid {
    pub rows: usize,
    pub cols: usize,
    pub left: PositiveWord,
    pub top: PositiveWord,
    cells: Vec<GridCell>,
    pub status: GridStatus,
    pub steps: u64,
}

impl ReversingGrid {
    pub fn cell(&self, i: usize, j: usize) -> &GridCell {
        &self.cells[i * self.cols + j]
    }

    /// Concatenation of the bottom row; equals u\v on a complete grid.
    pub fn bottom_word(&self) -> Option<PositiveWord> {
        if self.rows == 0 {
            return Some(self.top.clone());
        }
        let mut out = PositiveWord::empty();
        for j in 0..self.cols {
            out = out.concat(self.cell(self.rows - 1, j).bottom.as_ref()?);
        }
        Some(out)
    }

    /// Concatenation of the right column; equals v\u on a complete grid.
    pub fn right_word(&self) -> Option<PositiveWord> {
        if self.cols == 0 {
            return Some(self.left.clone());
        }
        let mut out = PositiveWord::empty();
        for i in 0..self.rows {
            out = out.concat(self.cell(i, self.cols - 1).right.as_ref()?);
        }
        Some(out)
    }

    /// Plain-text rendering for the CLI.
    pub fn render_ascii(&self, al: &Alphabet) -> String {
        let txt = |w: &Option<PositiveWord>| match w {
            Some(w) => al.display_positive(w),
            None => "?".to_string(),
        };
        if self.rows == 0 || self.cols == 0 {
            return format!(
                "degenerate grid {}x{}: bottom = {}, right = {}\n",
                self.rows,
                self.cols,
                txt(&self.bottom_word()),
                txt(&self.right_word())
            );
        }
        let mut widths = vec![0usize; self.cols];
        for j in 0..self.cols {
            for i in 0..self.rows {
                let c = self.cell(i, j);
                widths[j] = widths[j]
                    .max(al.display_positive(&c.top).chars().count())
                    .max(txt(&c.bottom).chars().count());
            }
        }
        let mut out = String::new();
        let pad = |s: &str, w: usize| {
            let n = w.saturating_sub(s.chars().count());
            let l = n / 2;
            format!("{}{}{}", "-".repeat(l + 1), s, "-".repeat(n - l + 1))
        };
        for i in 0..self.rows {
            out.push_str("  +");
            for j in 0..self.cols {
                out.push_str(&pad(&al.display_positive(&self.cell(i, j).top), widths[j]));
                out.push('+');
            }
            out.push('\n');
            out.push_str(&format!("{} |", al.display_positive(&self.cell(i, 0).left)));
            for j in 0..self.cols {
                let r = txt(&self.cell(i, j).right);
                out.push_str(&format!("{:w$} {}", "", r, w = widths[j]));
            }
            out.push('\n');
        }
        out.push_str("  +");
        for j in 0..self.cols {
            out.push_str(&pad(&txt(&self.cell(self.rows - 1, j).bottom), widths[j]));
            out.push('+');
        }
        out.push('\n');
        out
    }

    /// DOT export: grid corners as nodes, labeled edges along cell borders.
    pub fn to_dot(&self, al: &Alphabet) -> String {
        let mut out = String::from("digraph reversing_grid {\n  rankdir=TB;\n  node [shape=point];\n");
        let id = |i: usize, j: usize| format!("n{}_{}", i, j);
        let mut edge = |from: String, to: String, label: String| {
            out.push_str(&format!("  {} -> {} [label=\"{}\"];\n", from, to, label));
        };
        for j in 0..self.cols {
            edge(
                id(0, j),
                id(0, j + 1),
                al.display_positive(&self.cell_top(0, j)),
            );
        }
        for i in 0..self.rows {
            edge(
                id(i, 0),
                id(i + 1, 0),
                al.display_positive(&self.cell_left(i, 0)),
            );
        }
        for i in 0..self.rows {
            for j in 0..self.cols {
                let c = self.cell(i, j);
                if let Some(b) = &c.bottom {
                    edge(id(i + 1, j), id(i + 1, j + 1), al.display_positive(b));
                }
                if let Some(r) = &c.right {
                    edge(id(i, j + 1), id(i + 1, j + 1), al.display_positive(r));
                }
            }
        }
        out.push_str("}\n");
        out
    }

    fn cell_top(&self, i: usize, j: usize) -> PositiveWord {
        self.cell(i, j).top.clone()
    }

    fn cell_left(&self, i: usize, j: usize) -> PositiveWord {
        self.cell(i, j).left.clone()
    }
}

/// Runs right_complement(u, v) while recording every cell of the diagram.
pub fn capture_grid(
    u: &PositiveWord,
    v: &PositiveWord,
    f: &ReversingFunction,
    fuel: &Fuel,
) -> ReversingGrid {
    let rows = u.len();
    let cols = v.len();
    let cells = vec![
        GridCell {
            left: PositiveWord::empty(),
            top: PositiveWord::empty(),
            bottom: None,
            right: None,
        };
        rows * cols
    ];
    let mut grid = ReversingGrid {
        rows,
        cols,
        left: u.clone(),
        top: v.clone(),
        cells,
        status: GridStatus::Complete,
        steps: 0,
    };
    let mut used: u64 = 0;
    'fill: for i in 0..rows {
        for j in 0..cols {
            let left = if j == 0 {
                PositiveWord::single(u.letters()[i])
            } else {
                grid.cell(i, j - 1).right.clone().unwrap()
            };
            let top = if i == 0 {
                PositiveWord::single(v.letters()[j])
            } else {
                grid.cell(i - 1, j).bottom.clone().unwrap()
            };
            let cell_fuel = Fuel {
                max_steps: fuel.max_steps.saturating_sub(used).max(1),
                max_word_len: fuel.max_word_len,
            };
            let outcome = right_complement(&left, &top, f, &cell_fuel);
            used += outcome.steps();
            let cell = &mut grid.cells[i * cols + j];
            cell.left = left;
            cell.top = top;
            match outcome {
                ReversalOutcome::Converged { positive, negative, .. } => {
                    cell.bottom = Some(positive);
                    cell.right = Some(negative);
                }
                ReversalOutcome::Blocked { pair, .. } => {
                    grid.status = GridStatus::Blocked { pair };
                    break 'fill;
                }
                ReversalOutcome::FuelExhausted { .. } => {
                    grid.status = GridStatus::FuelExhausted;
                    break 'fill;
                }
            }
        }
    }
    grid.steps = used;
    grid
}
