//! Normal-form automata: the right-normal-form transducer, the left-gcd
//! automaton on primitive-function states, the characteristic graph, and
//! DOT export for all three.

use std::collections::HashMap;

use thiserror::Error;

use crate::structure::{GarsideStructure, SimpleId};
use crate::words::{Letter, PositiveWord};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AutomataError {
    #[error("reachable state set exceeded the cap of {0}")]
    StateCapExceeded(usize),
}

/// Transducer computing the last factor of the right normal form: states
/// are the simples, T(s,a) = (**a \ *s)*, O(s,a) = *s \ **a. After reading
/// u from the ε state, the state is ū ∧̃ Δ and the output represents the
/// rest of ū.
#[derive(Debug, Clone)]
pub struct RightTransducer {
    pub transition: Vec<Vec<SimpleId>>,
    pub output: Vec<Vec<PositiveWord>>,
}

impl RightTransducer {
    pub fn build(g: &GarsideStructure) -> RightTransducer {
        let n = g.simple_count();
        let letters = g.presentation.alphabet.len();
        let mut transition = vec![vec![0; letters]; n];
        let mut output = vec![vec![PositiveWord::empty(); letters]; n];
        for s in 0..n {
            for a in 0..letters {
                let aa = g.phi_inv(g.letter_class(a)); // **a
                let cs = g.costar(s); // *s
                transition[s][a] = g.star(g.right_complement_simple(aa, cs));
                output[s][a] = g
                    .simple_word(g.right_complement_simple(cs, aa))
                    .clone();
            }
        }
        RightTransducer { transition, output }
    }

    /// Reads a positive word from the ε state; returns the accumulated
    /// output and the final state.
    pub fn run(&self, u: &PositiveWord, g: &GarsideStructure) -> (PositiveWord, SimpleId) {
        let mut state = g.eps();
        let mut out = PositiveWord::empty();
        for &a in u.letters() {
            out = out.concat(&self.output[state][a]);
            state = self.transition[state][a];
        }
        (out, state)
    }

    /// Iterates the transducer on its own output; reproduces the right
    /// normal form in at most |u| passes.
    pub fn right_nf(&self, u: &PositiveWord, g: &GarsideStructure) -> Vec<SimpleId> {
        let mut factors = Vec::new();
        let mut rest = u.clone();
        while !rest.is_empty() {
            let (out, last) = self.run(&rest, g);
            debug_assert_ne!(last, g.eps());
            factors.push(last);
            rest = out;
        }
        factors.reverse();
        factors
    }

    pub fn to_dot(&self, g: &GarsideStructure) -> String {
        let al = &g.presentation.alphabet;
        let mut out = String::from("digraph right_transducer {\n  rankdir=LR;\n");
        for s in 0..g.simple_count() {
            out.push_str(&format!(
                "  s{} [label=\"{}\"];\n",
                s,
                al.display_positive(g.simple_word(s))
            ));
        }
        for s in 0..g.simple_count() {
            for a in 0..al.len() {
                let mut attrs = vec![edge_style(a, al.len())];
                let o = &self.output[s][a];
                if !o.is_empty() {
                    attrs.push(format!("label=\"{}\"", al.display_positive(o)));
                }
                attrs.retain(|s| !s.is_empty());
                out.push_str(&format!(
                    "  s{} -> s{} [{}];\n",
                    s,
                    self.transition[s][a],
                    attrs.join(", ")
                ));
            }
        }
        out.push_str("}\n");
        out
    }
}

/// Automaton computing ū ∧ Δ while reading u left to right. States are the
/// reachable functions from right-primitives to right-primitives, encoded
/// as dense vectors; the transition precomposes with p ↦ a\p.
#[derive(Debug, Clone)]
pub struct LeftGcdAutomaton {
    /// Right-primitive simples: closure of the letter classes under \.
    pub primitives: Vec<SimpleId>,
    /// Dense function tables over `primitives`, state 0 = identity.
    pub states: Vec<Vec<u8>>,
    pub transition: Vec<Vec<usize>>,
}

impl LeftGcdAutomaton {
    pub fn build(g: &GarsideStructure, max_states: usize) -> Result<LeftGcdAutomaton, AutomataError> {
        let letters = g.presentation.alphabet.len();
        // Closure of the atoms under the complement, at the simple level.
        let mut primitives: Vec<SimpleId> = Vec::new();
        for a in 0..letters {
            let c = g.letter_class(a);
            if !primitives.contains(&c) {
                primitives.push(c);
            }
        }
        let mut done = 0;
        while done < primitives.len() {
            let k = done;
            done += 1;
            for i in 0..=k {
                for (x, y) in [(i, k), (k, i)] {
                    let c = g.right_complement_simple(primitives[x], primitives[y]);
                    if !primitives.contains(&c) {
                        primitives.push(c);
                    }
                }
            }
        }
        primitives.sort_unstable();
        assert!(primitives.len() <= u8::MAX as usize);
        let prim_index: HashMap<SimpleId, u8> = primitives
            .iter()
            .enumerate()
            .map(|(i, &p)| (p, i as u8))
            .collect();

        // r[a][p] = a\p restricted to primitives.
        let mut r = vec![vec![0u8; primitives.len()]; letters];
        for a in 0..letters {
            for (pi, &p) in primitives.iter().enumerate() {
                let c = g.right_complement_simple(g.letter_class(a), p);
                r[a][pi] = prim_index[&c];
            }
        }

        let identity: Vec<u8> = (0..primitives.len() as u8).collect();
        let mut states = vec![identity.clone()];
        let mut index: HashMap<Vec<u8>, usize> = HashMap::from([(identity, 0)]);
        let mut transition: Vec<Vec<usize>> = Vec::new();
        let mut queue = 0;
        while queue < states.len() {
            let state = states[queue].clone();
            let mut row = Vec::with_capacity(letters);
            for a in 0..letters {
                let next: Vec<u8> = state.iter().map(|&fi| r[a][fi as usize]).collect();
                let id = match index.get(&next) {
                    Some(&id) => id,
                    None => {
                        let id = states.len();
                        if id >= max_states {
                            return Err(AutomataError::StateCapExceeded(max_states));
                        }
                        states.push(next.clone());
                        index.insert(next, id);
                        id
                    }
                };
                row.push(id);
            }
            transition.push(row);
            queue += 1;
        }
        Ok(LeftGcdAutomaton { primitives, states, transition })
    }

    pub fn state_count(&self) -> usize {
        self.states.len()
    }

    pub fn run(&self, u: &PositiveWord) -> usize {
        let mut state = 0;
        for &a in u.letters() {
            state = self.transition[state][a];
        }
        state
    }

    /// Head read-out of a state: the join of the primitives it maps to ε,
    /// which is ū ∧ Δ for any u reaching the state.
    pub fn head_of_state(&self, state: usize, g: &GarsideStructure) -> SimpleId {
        let eps_idx = self
            .primitives
            .iter()
            .position(|&p| p == g.eps())
            .expect("ε is primitive") as u8;
        let mut head = g.eps();
        for (pi, &image) in self.states[state].iter().enumerate() {
            if image == eps_idx {
                head = g.join_simple(head, self.primitives[pi]);
            }
        }
        head
    }

    pub fn head_of_word(&self, u: &PositiveWord, g: &GarsideStructure) -> SimpleId {
        self.head_of_state(self.run(u), g)
    }

    pub fn to_dot(&self, g: &GarsideStructure) -> String {
        let al = &g.presentation.alphabet;
        let mut out = String::from("digraph left_gcd_automaton {\n  rankdir=LR;\n");
        for (i, _) in self.states.iter().enumerate() {
            out.push_str(&format!(
                "  q{} [label=\"q{} / {}\"];\n",
                i,
                i,
                al.display_positive(g.simple_word(self.head_of_state(i, g)))
            ));
        }
        for (i, row) in self.transition.iter().enumerate() {
            for (a, &t) in row.iter().enumerate() {
                let style = edge_style(a, al.len());
                if style.is_empty() {
                    out.push_str(&format!("  q{} -> q{};\n", i, t));
                } else {
                    out.push_str(&format!("  q{} -> q{} [{}];\n", i, t, style));
                }
            }
        }
        out.push_str("}\n");
        out
    }
}

/// The characteristic graph: simples as vertices, an edge (x, a, y) when
/// x·a is simple and equals y.
#[derive(Debug, Clone)]
pub struct CharGraph {
    pub vertices: usize,
    pub edges: Vec<(SimpleId, Letter, SimpleId)>,
}

impl CharGraph {
    pub fn build(g: &GarsideStructure) -> CharGraph {
        CharGraph {
            vertices: g.simple_count(),
            edges: g.atom_edges().to_vec(),
        }
    }

    pub fn out_degree(&self, v: SimpleId) -> usize {
        self.edges.iter().filter(|&&(s, _, _)| s == v).count()
    }

    pub fn to_dot(&self, g: &GarsideStructure) -> String {
        let al = &g.presentation.alphabet;
        let mut out = String::from("digraph characteristic_graph {\n  rankdir=BT;\n");
        for s in 0..self.vertices {
            out.push_str(&format!(
                "  s{} [label=\"{}\"];\n",
                s,
                al.display_positive(g.simple_word(s))
            ));
        }
        for &(s, a, t) in &self.edges {
            let style = edge_style(a, al.len());
            if style.is_empty() {
                out.push_str(&format!("  s{} -> s{} [label=\"{}\"];\n", s, t, al.token(a)));
            } else {
                out.push_str(&format!("  s{} -> s{} [{}];\n", s, t, style));
            }
        }
        out.push_str("}\n");
        out
    }
}

/// Two-letter alphabets follow the paper's figures: solid for the first
/// letter, dashed for the second; larger alphabets fall back to labels.
fn edge_style(a: Letter, n_letters: usize) -> String {
    if n_letters <= 2 {
        match a {
            0 => "style=solid".to_string(),
            _ => "style=dashed".to_string(),
        }
    } else {
        String::new()
    }
}
