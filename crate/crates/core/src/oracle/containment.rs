use std::collections::VecDeque;

use super::determinize::breakpoint_determinize;
use super::lasso::LassoWord;
use crate::automaton::{StateId, Symbol, Tncw};
use crate::graph;

/// Product of `a` (from some state) with a deterministic automaton `d`.
/// Node `p * |d| + x` pairs state `p` of `a` with state `x` of `d`.
struct Product<'a> {
    a: &'a Tncw,
    d: &'a Tncw,
    reachable: Vec<StateId>,
    /// Parent pointers of the BFS from the start node.
    parent: Vec<Option<(usize, Symbol)>>,
}

impl<'a> Product<'a> {
    fn new(a: &'a Tncw, q: StateId, d: &'a Tncw) -> Self {
        let size = a.num_states() * d.num_states();
        let start = q * d.num_states() + d.initial();
        let mut parent = vec![None; size];
        let mut seen = vec![false; size];
        seen[start] = true;
        let mut reachable = vec![start];
        let mut queue = VecDeque::from([start]);
        let mut p = Product {
            a,
            d,
            reachable: Vec::new(),
            parent: Vec::new(),
        };
        while let Some(v) = queue.pop_front() {
            for (sym, u, _, _) in p.edges(v) {
                if !seen[u] {
                    seen[u] = true;
                    parent[u] = Some((v, sym));
                    reachable.push(u);
                    queue.push_back(u);
                }
            }
        }
        p.reachable = reachable;
        p.parent = parent;
        p
    }

    fn size(&self) -> usize {
        self.a.num_states() * self.d.num_states()
    }

    /// Outgoing edges `(symbol, target, α in a, α in d)`.
    fn edges(&self, v: usize) -> Vec<(Symbol, usize, bool, bool)> {
        let m = self.d.num_states();
        let (p, x) = (v / m, v % m);
        let mut out = Vec::new();
        for sym in self.a.symbols() {
            let &(y, alpha_d) = &self.d.successors(x, sym)[0];
            for &(p2, alpha_a) in self.a.successors(p, sym) {
                out.push((sym, p2 * m + y, alpha_a, alpha_d));
            }
        }
        out
    }

    fn path_to(&self, mut v: usize) -> Vec<Symbol> {
        let mut word = Vec::new();
        while let Some((u, sym)) = self.parent[v] {
            word.push(sym);
            v = u;
        }
        word.reverse();
        word
    }

    /// A lasso accepted from the `a` side and rejected by `d`, if any.
    fn witness(&self) -> Option<LassoWord> {
        let size = self.size();
        let mut is_reach = vec![false; size];
        for &v in &self.reachable {
            is_reach[v] = true;
        }
        let mut safe_succ: Vec<Vec<usize>> = vec![Vec::new(); size];
        for &v in &self.reachable {
            safe_succ[v] = self
                .edges(v)
                .into_iter()
                .filter(|e| !e.2)
                .map(|e| e.1)
                .collect();
        }
        let sccs = graph::tarjan_scc(size, &safe_succ);
        let scc_of = graph::component_index(size, &sccs);
        let mut candidates: Vec<(usize, Symbol, usize)> = Vec::new();
        for &v in &self.reachable {
            for (sym, u, alpha_a, alpha_d) in self.edges(v) {
                if !alpha_a && alpha_d && scc_of[u] == scc_of[v] {
                    candidates.push((v, sym, u));
                }
            }
        }
        // BFS order of `reachable` makes the first candidate's prefix short.
        let &(v, sym, u) = candidates.first()?;
        let mut period = vec![sym];
        period.extend(self.path_within(u, v, &safe_succ, &scc_of));
        Some(LassoWord {
            prefix: self.path_to(v),
            period,
        })
    }

    /// Symbols of a shortest ᾱ-path from `from` to `to` inside one SCC.
    fn path_within(&self, from: usize, to: usize, safe_succ: &[Vec<usize>], scc_of: &[usize]) -> Vec<Symbol> {
        if from == to {
            return Vec::new();
        }
        let size = self.size();
        let mut parent: Vec<Option<(usize, Symbol)>> = vec![None; size];
        let mut seen = vec![false; size];
        seen[from] = true;
        let mut queue = VecDeque::from([from]);
        while let Some(v) = queue.pop_front() {
            for (sym, u, alpha_a, _) in self.edges(v) {
                if alpha_a || scc_of[u] != scc_of[from] || seen[u] {
                    continue;
                }
                debug_assert!(safe_succ[v].contains(&u));
                seen[u] = true;
                parent[u] = Some((v, sym));
                if u == to {
                    let mut word = Vec::new();
                    let mut x = u;
                    while x != from {
                        let (y, s) = parent[x].expect("bfs parent");
                        word.push(s);
                        x = y;
                    }
                    word.reverse();
                    return word;
                }
                queue.push_back(u);
            }
        }
        unreachable!("states of one SCC are mutually reachable")
    }
}

/// Whether `L(a^q) ⊆ L(b^s)`.
pub fn lang_contains(a: &Tncw, q: StateId, b: &Tncw, s: StateId) -> bool {
    counterexample_cross(a, q, b, s).is_none()
}

/// A lasso in `L(a^q) \ L(b^s)`, or `None` when the containment holds.
pub fn counterexample_cross(a: &Tncw, q: StateId, b: &Tncw, s: StateId) -> Option<LassoWord> {
    let d = breakpoint_determinize(&b.with_initial(s));
    Product::new(a, q, &d).witness()
}

/// A lasso in the symmetric difference of `L(a^q)` and `L(a^s)`.
pub fn counterexample(a: &Tncw, q: StateId, s: StateId) -> Option<LassoWord> {
    counterexample_cross(a, q, a, s).or_else(|| counterexample_cross(a, s, a, q))
}

/// `q ∼ s`: equal languages.
pub fn state_equiv(a: &Tncw, q: StateId, s: StateId) -> bool {
    q == s || (lang_contains(a, q, a, s) && lang_contains(a, s, a, q))
}

pub fn state_equiv_cross(a: &Tncw, q: StateId, b: &Tncw, s: StateId) -> bool {
    lang_contains(a, q, b, s) && lang_contains(b, s, a, q)
}

/// Whether the two automata recognize the same language.
pub fn equivalent(a: &Tncw, b: &Tncw) -> bool {
    state_equiv_cross(a, a.initial(), b, b.initial())
}

/// Outcome of comparing two automata from their initial states.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Containment {
    Equivalent,
    /// A word accepted by the first automaton only.
    OnlyLeft(LassoWord),
    /// A word accepted by the second automaton only.
    OnlyRight(LassoWord),
}

impl Containment {
    pub fn compare(a: &Tncw, b: &Tncw) -> Self {
        if let Some(w) = counterexample_cross(a, a.initial(), b, b.initial()) {
            Containment::OnlyLeft(w)
        } else if let Some(w) = counterexample_cross(b, b.initial(), a, a.initial()) {
            Containment::OnlyRight(w)
        } else {
            Containment::Equivalent
        }
    }
}

/// `m[q][s]` iff `L(a^q) ⊆ L(a^s)`. Each state is determinized once.
pub fn containment_matrix(a: &Tncw) -> Vec<Vec<bool>> {
    let dets: Vec<Tncw> = a.states().map(|s| breakpoint_determinize(&a.with_initial(s))).collect();
    a.states()
        .map(|q| {
            a.states()
                .map(|s| q == s || Product::new(a, q, &dets[s]).witness().is_none())
                .collect()
        })
        .collect()
}

/// `m[q][s]` iff `q ∼ s`.
pub fn equivalence_matrix(a: &Tncw) -> Vec<Vec<bool>> {
    let c = containment_matrix(a);
    a.states()
        .map(|q| a.states().map(|s| c[q][s] && c[s][q]).collect())
        .collect()
}
