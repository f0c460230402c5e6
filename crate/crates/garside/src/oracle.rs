//! Brute-force reference implementations over small balls of words.
//!
//! A ball enumerates every positive word up to a length bound and saturates
//! the single-relation rewrite relation (both directions) with union-find.
//! Everything here is definitional and slow; it exists to certify the fast
//! reversing-based operations on small instances.

use std::collections::HashMap;

use crate::presentation::Presentation;
use crate::words::{PositiveWord, sort_shortlex};

struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let r = self.find(self.parent[x]);
            self.parent[x] = r;
        }
        self.parent[x]
    }

    fn union(&mut self, a: usize, b: usize) {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
    }
}

/// Equality classes of all positive words of length ≤ radius + slack.
pub struct Ball {
    pub radius: usize,
    pub slack: usize,
    words: Vec<PositiveWord>,
    index: HashMap<PositiveWord, usize>,
    class_of: Vec<usize>,
    members: Vec<Vec<usize>>,
    rep_of_class: Vec<usize>,
    reps: Vec<PositiveWord>,
}

impl Ball {
    /// Saturates rewriting within length radius + slack. Increasing the
    /// slack never shrinks classes; the default slack is the longest
    /// relation side.
    pub fn build(p: &Presentation, radius: usize, slack: usize) -> Ball {
        let n = p.alphabet.len();
        let max_len = radius + slack;
        let mut words: Vec<PositiveWord> = Vec::new();
        let mut frontier: Vec<PositiveWord> = vec![PositiveWord::empty()];
        words.push(PositiveWord::empty());
        for _ in 0..max_len {
            let mut next = Vec::with_capacity(frontier.len() * n);
            for w in &frontier {
                for l in 0..n {
                    let mut x = w.clone();
                    x.push(l);
                    next.push(x);
                }
            }
            words.extend(next.iter().cloned());
            frontier = next;
        }
        let index: HashMap<PositiveWord, usize> =
            words.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        let mut uf = UnionFind::new(words.len());
        let relations = p.relations();
        for (i, w) in words.iter().enumerate() {
            for (lhs, rhs) in &relations {
                for (pat, rep) in [(lhs, rhs), (rhs, lhs)] {
                    if pat.len() > w.len() {
                        continue;
                    }
                    if w.len() - pat.len() + rep.len() > max_len {
                        continue;
                    }
                    for start in 0..=w.len() - pat.len() {
                        if &w.letters()[start..start + pat.len()] == pat.letters() {
                            let mut nw = w.letters()[..start].to_vec();
                            nw.extend_from_slice(rep.letters());
                            nw.extend_from_slice(&w.letters()[start + pat.len()..]);
                            let j = index[&PositiveWord::new(nw)];
                            uf.union(i, j);
                        }
                    }
                }
            }
        }
        let class_of: Vec<usize> = (0..words.len()).map(|i| uf.find(i)).collect();
        let mut members: Vec<Vec<usize>> = vec![Vec::new(); words.len()];
        for (i, &c) in class_of.iter().enumerate() {
            members[c].push(i);
        }
        let mut rep_of_class: Vec<usize> = (0..words.len()).collect();
        for (c, ms) in members.iter().enumerate() {
            if let Some(&best) = ms.iter().min_by(|&&a, &&b| words[a].shortlex_cmp(&words[b])) {
                rep_of_class[c] = best;
            }
        }
        let mut reps: Vec<PositiveWord> = members
            .iter()
            .enumerate()
            .filter(|(_, ms)| !ms.is_empty())
            .map(|(c, _)| words[rep_of_class[c]].clone())
            .collect();
        sort_shortlex(&mut reps);
        Ball { radius, slack, words, index, class_of, members, rep_of_class, reps }
    }

    fn id(&self, w: &PositiveWord) -> Option<usize> {
        self.index.get(w).copied()
    }

    pub fn contains(&self, w: &PositiveWord) -> bool {
        self.index.contains_key(w)
    }

    /// Words of length ≤ radius, shortlex.
    pub fn core_words(&self) -> Vec<PositiveWord> {
        let mut out: Vec<PositiveWord> = self
            .words
            .iter()
            .filter(|w| w.len() <= self.radius)
            .cloned()
            .collect();
        sort_shortlex(&mut out);
        out
    }

    pub fn equal(&self, u: &PositiveWord, v: &PositiveWord) -> bool {
        match (self.id(u), self.id(v)) {
            (Some(i), Some(j)) => self.class_of[i] == self.class_of[j],
            _ => false,
        }
    }

    /// Shortlex-least word of u's class.
    pub fn representative(&self, u: &PositiveWord) -> Option<PositiveWord> {
        let c = self.class_of[self.id(u)?];
        Some(self.words[self.rep_of_class[c]].clone())
    }

    /// ∃z: u·z = v, searched as: some word of v's class literally starts
    /// with u.
    pub fn left_divides(&self, u: &PositiveWord, v: &PositiveWord) -> bool {
        let Some(j) = self.id(v) else { return false };
        let c = self.class_of[j];
        self.members[c].iter().any(|&m| {
            let w = &self.words[m];
            w.len() >= u.len() && &w.letters()[..u.len()] == u.letters()
        })
    }

    /// Class representatives (shortlex-least per class), shortlex-ordered.
    pub fn class_reps(&self) -> &[PositiveWord] {
        &self.reps
    }

    /// Least common right multiple found inside the ball, or None when the
    /// search is inconclusive within the radius.
    pub fn lcm_right(&self, u: &PositiveWord, v: &PositiveWord) -> Option<PositiveWord> {
        let mut commons: Vec<&PositiveWord> = Vec::new();
        for rep in self.class_reps() {
            if self.left_divides(u, rep) && self.left_divides(v, rep) {
                commons.push(rep);
            }
        }
        let least = commons
            .iter()
            .find(|m| commons.iter().all(|c| self.left_divides(m, c)))?;
        Some((*least).clone())
    }

    /// Greatest common left divisor by exhaustive scan; None only when some
    /// comparison escapes the ball.
    pub fn gcd_left(&self, u: &PositiveWord, v: &PositiveWord) -> Option<PositiveWord> {
        let mut commons: Vec<&PositiveWord> = Vec::new();
        for rep in self.class_reps() {
            if self.left_divides(rep, u) && self.left_divides(rep, v) {
                commons.push(rep);
            }
        }
        let greatest = commons
            .iter()
            .find(|d| commons.iter().all(|c| self.left_divides(c, d)))?;
        Some((*greatest).clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::presentation_from_relations;

    fn w(p: &Presentation, s: &str) -> PositiveWord {
        p.alphabet.parse_positive(s).unwrap()
    }

    #[test]
    fn classes_of_the_defining_relations() {
        let p2 = presentation_from_relations(&["a", "b"], &[("aba", "bab")]).unwrap();
        let ball = Ball::build(&p2, 3, 3);
        assert!(ball.equal(&w(&p2, "aba"), &w(&p2, "bab")));
        assert!(!ball.equal(&w(&p2, "ab"), &w(&p2, "ba")));

        let p1 = presentation_from_relations(&["a", "b"], &[("aba", "bb")]).unwrap();
        let ball = Ball::build(&p1, 3, 3);
        assert!(ball.equal(&w(&p1, "bb"), &w(&p1, "aba")));
        assert!(ball.equal(&w(&p1, "abab"), &w(&p1, "bbb")));
    }

    #[test]
    fn radius_zero_is_the_trivial_class() {
        let p = presentation_from_relations(&["a", "b"], &[("aba", "bb")]).unwrap();
        let ball = Ball::build(&p, 0, 0);
        assert_eq!(ball.core_words(), vec![PositiveWord::empty()]);
    }

    #[test]
    fn divisibility_and_lattice_scans() {
        let p2 = presentation_from_relations(&["a", "b"], &[("aba", "bab")]).unwrap();
        let ball = Ball::build(&p2, 4, 3);
        assert!(ball.left_divides(&w(&p2, "a"), &w(&p2, "aba")));
        assert!(!ball.left_divides(&w(&p2, "a"), &w(&p2, "ba")));
        assert_eq!(ball.gcd_left(&w(&p2, "ab"), &w(&p2, "ba")), Some(PositiveWord::empty()));
        let lcm = ball.lcm_right(&w(&p2, "a"), &w(&p2, "b")).unwrap();
        assert!(ball.equal(&lcm, &w(&p2, "aba")));
    }

    #[test]
    fn larger_slack_never_shrinks_classes() {
        let p1 = presentation_from_relations(&["a", "b"], &[("aba", "bb")]).unwrap();
        let small = Ball::build(&p1, 4, 1);
        let large = Ball::build(&p1, 4, 4);
        for u in small.core_words() {
            for v in small.core_words() {
                if small.equal(&u, &v) {
                    assert!(large.equal(&u, &v));
                }
            }
        }
    }
}
