//! Transition-based co-Büchi automata.
//!
//! A [`Tncw`] stores, for every state and symbol, the sorted list of
//! successors together with a flag telling whether the transition belongs to
//! the acceptance set α. A run is accepting iff it traverses α-transitions
//! only finitely often.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};
use crate::safe;

pub type StateId = usize;
pub type Symbol = usize;

/// An ordered, duplicate-free, non-empty list of symbol names.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Alphabet {
    symbols: Vec<String>,
}

impl Alphabet {
    pub fn new<I, S>(symbols: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let symbols: Vec<String> = symbols.into_iter().map(Into::into).collect();
        if symbols.is_empty() {
            return Err(Error::EmptyAlphabet);
        }
        for (i, s) in symbols.iter().enumerate() {
            if symbols[..i].contains(s) {
                return Err(Error::DuplicateSymbol(s.clone()));
            }
        }
        Ok(Alphabet { symbols })
    }

    /// Alphabet `a, b, c, ...` of the given size (falls back to `s<i>` past `z`).
    pub fn letters(size: usize) -> Self {
        let symbols = (0..size.max(1))
            .map(|i| {
                if i < 26 {
                    ((b'a' + i as u8) as char).to_string()
                } else {
                    format!("s{i}")
                }
            })
            .collect();
        Alphabet { symbols }
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn name(&self, symbol: Symbol) -> &str {
        &self.symbols[symbol]
    }

    pub fn index_of(&self, name: &str) -> Option<Symbol> {
        self.symbols.iter().position(|s| s == name)
    }

    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }
}

/// A single transition `src -symbol-> dst`; `in_alpha` marks membership in α.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Transition {
    pub src: StateId,
    pub symbol: Symbol,
    pub dst: StateId,
    pub in_alpha: bool,
}

impl Transition {
    pub fn safe(src: StateId, symbol: Symbol, dst: StateId) -> Self {
        Transition {
            src,
            symbol,
            dst,
            in_alpha: false,
        }
    }

    pub fn alpha(src: StateId, symbol: Symbol, dst: StateId) -> Self {
        Transition {
            src,
            symbol,
            dst,
            in_alpha: true,
        }
    }
}

/// A transition-based co-Büchi word automaton over dense state ids.
///
/// Values built through [`Tncw::new`] are total. [`Tncw::new_partial`] skips
/// the totality check; such values are only meant to be fed to
/// [`ensure_total`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tncw {
    alphabet: Alphabet,
    num_states: usize,
    initial: StateId,
    /// `succ[q * |Σ| + σ]`, sorted by destination.
    succ: Vec<Vec<(StateId, bool)>>,
}

impl Tncw {
    /// Builds a total automaton, rejecting out-of-range ids, duplicate
    /// `(src, symbol, dst)` triples and missing `(state, symbol)` pairs.
    pub fn new<I>(alphabet: Alphabet, num_states: usize, initial: StateId, transitions: I) -> Result<Self>
    where
        I: IntoIterator<Item = Transition>,
    {
        let a = Self::new_partial(alphabet, num_states, initial, transitions)?;
        if let Some((state, symbol)) = a.first_missing() {
            return Err(Error::NotTotal { state, symbol });
        }
        Ok(a)
    }

    /// Like [`Tncw::new`] without the totality requirement.
    pub fn new_partial<I>(alphabet: Alphabet, num_states: usize, initial: StateId, transitions: I) -> Result<Self>
    where
        I: IntoIterator<Item = Transition>,
    {
        if num_states == 0 {
            return Err(Error::NoStates);
        }
        if initial >= num_states {
            return Err(Error::StateOutOfRange {
                state: initial,
                num_states,
            });
        }
        let k = alphabet.len();
        let mut succ = vec![Vec::new(); num_states * k];
        for t in transitions {
            for state in [t.src, t.dst] {
                if state >= num_states {
                    return Err(Error::StateOutOfRange { state, num_states });
                }
            }
            if t.symbol >= k {
                return Err(Error::SymbolOutOfRange {
                    symbol: t.symbol,
                    size: k,
                });
            }
            let list: &mut Vec<(StateId, bool)> = &mut succ[t.src * k + t.symbol];
            if list.iter().any(|&(d, _)| d == t.dst) {
                return Err(Error::DuplicateTransition {
                    src: t.src,
                    symbol: t.symbol,
                    dst: t.dst,
                });
            }
            list.push((t.dst, t.in_alpha));
        }
        for list in &mut succ {
            list.sort_unstable();
        }
        Ok(Tncw {
            alphabet,
            num_states,
            initial,
            succ,
        })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn num_states(&self) -> usize {
        self.num_states
    }

    pub fn num_symbols(&self) -> usize {
        self.alphabet.len()
    }

    pub fn initial(&self) -> StateId {
        self.initial
    }

    /// The same automaton with `q` as initial state (`A^q`).
    pub fn with_initial(&self, q: StateId) -> Tncw {
        assert!(q < self.num_states, "state {q} out of range");
        Tncw {
            initial: q,
            ..self.clone()
        }
    }

    pub fn states(&self) -> std::ops::Range<StateId> {
        0..self.num_states
    }

    pub fn symbols(&self) -> std::ops::Range<Symbol> {
        0..self.alphabet.len()
    }

    /// All `(dst, in_alpha)` pairs leaving `q` on `symbol`, sorted by `dst`.
    pub fn successors(&self, q: StateId, symbol: Symbol) -> &[(StateId, bool)] {
        &self.succ[q * self.alphabet.len() + symbol]
    }

    pub fn safe_successors(&self, q: StateId, symbol: Symbol) -> impl Iterator<Item = StateId> + '_ {
        self.successors(q, symbol)
            .iter()
            .filter(|&&(_, a)| !a)
            .map(|&(d, _)| d)
    }

    pub fn alpha_successors(&self, q: StateId, symbol: Symbol) -> impl Iterator<Item = StateId> + '_ {
        self.successors(q, symbol)
            .iter()
            .filter(|&&(_, a)| a)
            .map(|&(d, _)| d)
    }

    /// The unique ᾱ-successor, if the pair has exactly one.
    pub fn safe_successor(&self, q: StateId, symbol: Symbol) -> Option<StateId> {
        let mut it = self.safe_successors(q, symbol);
        let first = it.next()?;
        match it.next() {
            None => Some(first),
            Some(_) => None,
        }
    }

    /// α-membership of `(q, symbol, dst)`, or `None` when it is not a transition.
    pub fn transition_flag(&self, q: StateId, symbol: Symbol, dst: StateId) -> Option<bool> {
        let list = self.successors(q, symbol);
        list.binary_search_by_key(&dst, |&(d, _)| d)
            .ok()
            .map(|i| list[i].1)
    }

    /// Transitions in `(src, symbol, dst)` order.
    pub fn transitions(&self) -> impl Iterator<Item = Transition> + '_ {
        let k = self.alphabet.len();
        self.succ.iter().enumerate().flat_map(move |(i, list)| {
            list.iter().map(move |&(dst, in_alpha)| Transition {
                src: i / k,
                symbol: i % k,
                dst,
                in_alpha,
            })
        })
    }

    pub fn num_transitions(&self) -> usize {
        self.succ.iter().map(Vec::len).sum()
    }

    pub fn num_alpha_transitions(&self) -> usize {
        self.succ.iter().flatten().filter(|&&(_, a)| a).count()
    }

    fn first_missing(&self) -> Option<(StateId, Symbol)> {
        let k = self.alphabet.len();
        self.succ.iter().position(Vec::is_empty).map(|i| (i / k, i % k))
    }

    pub fn is_total(&self) -> bool {
        self.first_missing().is_none()
    }

    /// `|δ(q, σ)| = 1` everywhere.
    pub fn is_deterministic(&self) -> bool {
        self.succ.iter().all(|l| l.len() == 1)
    }

    /// `|δ^ᾱ(q, σ)| ≤ 1` everywhere.
    pub fn is_safe_deterministic(&self) -> bool {
        self.succ.iter().all(|l| l.iter().filter(|&&(_, a)| !a).count() <= 1)
    }

    /// Every `(q, σ)` has only α- or only ᾱ-transitions.
    pub fn is_alpha_homogeneous(&self) -> bool {
        self.succ
            .iter()
            .all(|l| l.iter().all(|&(_, a)| a) || l.iter().all(|&(_, a)| !a))
    }

    /// States reachable from the initial state, in BFS discovery order
    /// (symbols in alphabet order, successors in id order).
    pub fn bfs_order(&self) -> Vec<StateId> {
        let mut seen = vec![false; self.num_states];
        let mut order = Vec::with_capacity(self.num_states);
        let mut queue = VecDeque::from([self.initial]);
        seen[self.initial] = true;
        while let Some(q) = queue.pop_front() {
            order.push(q);
            for sym in self.symbols() {
                for &(d, _) in self.successors(q, sym) {
                    if !seen[d] {
                        seen[d] = true;
                        queue.push_back(d);
                    }
                }
            }
        }
        order
    }

    /// Keeps the states in `keep` (in the given order, which becomes the new
    /// numbering) and drops every transition touching another state.
    /// `initial` must be one of the kept states.
    pub fn restrict(&self, keep: &[StateId], initial: StateId) -> Tncw {
        let mut new_id = vec![usize::MAX; self.num_states];
        for (i, &q) in keep.iter().enumerate() {
            new_id[q] = i;
        }
        assert!(new_id[initial] != usize::MAX, "initial state must be kept");
        let transitions: Vec<Transition> = self
            .transitions()
            .filter(|t| new_id[t.src] != usize::MAX && new_id[t.dst] != usize::MAX)
            .map(|t| Transition {
                src: new_id[t.src],
                dst: new_id[t.dst],
                ..t
            })
            .collect();
        Tncw::new_partial(self.alphabet.clone(), keep.len(), new_id[initial], transitions)
            .expect("restriction of a valid automaton is valid")
    }

    /// Renames states through the permutation `perm` (old id -> new id).
    pub fn permute(&self, perm: &[StateId]) -> Tncw {
        assert_eq!(perm.len(), self.num_states);
        let transitions: Vec<Transition> = self
            .transitions()
            .map(|t| Transition {
                src: perm[t.src],
                dst: perm[t.dst],
                ..t
            })
            .collect();
        Tncw::new_partial(self.alphabet.clone(), self.num_states, perm[self.initial], transitions)
            .expect("permutation of a valid automaton is valid")
    }

    /// Rebuilds the automaton from a modified transition list.
    pub fn with_transitions<I>(&self, transitions: I) -> Result<Tncw>
    where
        I: IntoIterator<Item = Transition>,
    {
        Tncw::new_partial(self.alphabet.clone(), self.num_states, self.initial, transitions)
    }
}

impl fmt::Display for Tncw {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "initial {}", self.initial)?;
        for t in self.transitions() {
            let arrow = if t.in_alpha { "=>" } else { "->" };
            writeln!(f, "{} {}{} {}", t.src, self.alphabet.name(t.symbol), arrow, t.dst)?;
        }
        Ok(())
    }
}

/// Completes missing `(q, σ)` pairs with α-transitions to a fresh rejecting
/// sink. Total automata are returned unchanged.
pub fn ensure_total(a: &Tncw) -> Tncw {
    if a.is_total() {
        return a.clone();
    }
    let sink = a.num_states();
    let mut transitions: Vec<Transition> = a.transitions().collect();
    for q in a.states() {
        for sym in a.symbols() {
            if a.successors(q, sym).is_empty() {
                transitions.push(Transition::alpha(q, sym, sink));
            }
        }
    }
    for sym in a.symbols() {
        transitions.push(Transition::alpha(sink, sym, sink));
    }
    Tncw::new(a.alphabet().clone(), sink + 1, a.initial(), transitions)
        .expect("sink completion yields a total automaton")
}

/// Drops unreachable states and renumbers the rest in BFS discovery order.
pub fn restrict_to_reachable(a: &Tncw) -> Tncw {
    let order = a.bfs_order();
    ensure_total(&a.restrict(&order, a.initial()))
}

/// Structural predicates of an automaton, each computed directly from its
/// transition table.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StructuralReport {
    pub deterministic: bool,
    pub safe_deterministic: bool,
    pub alpha_homogeneous: bool,
    pub normal: bool,
    pub total: bool,
    pub all_reachable: bool,
}

impl StructuralReport {
    pub fn lines(&self) -> Vec<(&'static str, bool)> {
        vec![
            ("deterministic", self.deterministic),
            ("safe_deterministic", self.safe_deterministic),
            ("alpha_homogeneous", self.alpha_homogeneous),
            ("normal", self.normal),
            ("total", self.total),
            ("all_reachable", self.all_reachable),
        ]
    }
}

pub fn structural_report(a: &Tncw) -> StructuralReport {
    StructuralReport {
        deterministic: a.is_deterministic(),
        safe_deterministic: a.is_safe_deterministic(),
        alpha_homogeneous: a.is_alpha_homogeneous(),
        normal: safe::is_normal(a),
        total: a.is_total(),
        all_reachable: a.bfs_order().len() == a.num_states(),
    }
}
