//! α-saturation and canonical state numbering.
//!
//! A transition `⟨q, σ, s⟩` outside Δ is *allowed* if Δ has some
//! `⟨q, σ, s'⟩` with `s ∼ s'`. Adding allowed transitions to α keeps a nice
//! automaton nice and equivalent; after saturation, equivalent minimal
//! automata are isomorphic.

use std::collections::BTreeSet;

use crate::automaton::{StateId, Symbol, Tncw, Transition};
use crate::error::{Error, Result};
use crate::iso::refine_colors;
use crate::oracle::equivalence_matrix;
use crate::safe;

/// Allowed transitions not yet in Δ.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AllowedSet {
    pub triples: BTreeSet<(StateId, Symbol, StateId)>,
}

impl AllowedSet {
    pub fn len(&self) -> usize {
        self.triples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triples.is_empty()
    }

    pub fn contains(&self, q: StateId, s: Symbol, d: StateId) -> bool {
        self.triples.contains(&(q, s, d))
    }
}

fn allowed_with(a: &Tncw, eq: &[Vec<bool>]) -> AllowedSet {
    let mut triples = BTreeSet::new();
    for q in a.states() {
        for s in a.symbols() {
            let succ = a.successors(q, s);
            for d in a.states() {
                if a.transition_flag(q, s, d).is_none() && succ.iter().any(|&(x, _)| eq[d][x]) {
                    triples.insert((q, s, d));
                }
            }
        }
    }
    AllowedSet { triples }
}

pub fn allowed_transitions(a: &Tncw) -> AllowedSet {
    allowed_with(a, &equivalence_matrix(a))
}

fn add_alpha(a: &Tncw, extra: impl IntoIterator<Item = (StateId, Symbol, StateId)>) -> Tncw {
    let ts = a
        .transitions()
        .chain(extra.into_iter().map(|(q, s, d)| Transition::alpha(q, s, d)));
    a.with_transitions(ts).expect("allowed transitions are new")
}

/// Adds every allowed transition as an α-transition.
pub fn alpha_maximize(a: &Tncw) -> Tncw {
    add_alpha(a, allowed_transitions(a).triples)
}

/// Adds the allowed transitions of the pairs `(q, σ)` that have no
/// ᾱ-transition, keeping the automaton α-homogeneous.
pub fn alpha_maximize_homogeneous(a: &Tncw) -> Result<Tncw> {
    if !a.is_alpha_homogeneous() {
        return Err(Error::NotAlphaHomogeneous);
    }
    let allowed = allowed_transitions(a);
    Ok(add_alpha(
        a,
        allowed
            .triples
            .into_iter()
            .filter(|&(q, s, _)| a.safe_successor(q, s).is_none()),
    ))
}

/// All allowed transitions are in Δ.
pub fn is_alpha_maximal(a: &Tncw) -> bool {
    allowed_transitions(a).is_empty()
}

/// All allowed transitions from pairs without an ᾱ-transition are in Δ.
pub fn is_alpha_maximal_up_to_homogeneity(a: &Tncw) -> bool {
    allowed_transitions(a)
        .triples
        .iter()
        .all(|&(q, s, _)| a.safe_successor(q, s).is_some())
}

type Encoding = (StateId, Vec<Transition>);

fn encode(a: &Tncw, perm: &[StateId]) -> Encoding {
    let mut ts: Vec<Transition> = a
        .transitions()
        .map(|t| Transition {
            src: perm[t.src],
            dst: perm[t.dst],
            ..t
        })
        .collect();
    ts.sort_unstable();
    (perm[a.initial()], ts)
}

/// Renumbers a safe-deterministic automaton so that isomorphic automata
/// (with corresponding initial states) get identical transition tables.
///
/// States are first coloured by iterated refinement. Safe components are
/// ordered by size and colour multiset; inside a component, states are
/// numbered in ᾱ-BFS order (symbols in alphabet order) from a root of least
/// colour. Among the numberings this leaves open — roots of equal colour and
/// orders of indistinguishable components — the one with the
/// lexicographically least encoding wins.
pub fn canonical_relabel(a: &Tncw) -> Result<Tncw> {
    if !a.is_safe_deterministic() {
        return Err(Error::NotSafeDeterministic);
    }
    let colors = refine_colors(&[a], true, true).remove(0);
    let d = safe::safe_components(a);

    struct Comp {
        key: (usize, Vec<usize>),
        orders: Vec<Vec<StateId>>,
    }
    let mut comps: Vec<Comp> = d
        .components
        .iter()
        .map(|states| {
            let mut hist: Vec<usize> = states.iter().map(|&q| colors[q]).collect();
            hist.sort_unstable();
            let least = hist[0];
            let orders = states
                .iter()
                .filter(|&&q| colors[q] == least)
                .map(|&root| safe_bfs(a, root, states.len()))
                .collect();
            Comp {
                key: (states.len(), hist),
                orders,
            }
        })
        .collect();
    comps.sort_by(|x, y| x.key.cmp(&y.key));

    // Groups of components with equal keys may be permuted.
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for (i, c) in comps.iter().enumerate() {
        match groups.last_mut() {
            Some(g) if comps[g[0]].key == c.key => g.push(i),
            _ => groups.push(vec![i]),
        }
    }

    let mut best: Option<(Encoding, Vec<StateId>)> = None;
    let mut slots: Vec<usize> = Vec::with_capacity(comps.len());
    let mut choice: Vec<usize> = Vec::with_capacity(comps.len());
    search_orders(a, &comps.iter().map(|c| &c.orders[..]).collect::<Vec<_>>(), &groups, 0, &mut slots, &mut choice, &mut best);
    let (_, perm) = best.expect("at least one numbering");
    Ok(a.permute(&perm))
}

fn safe_bfs(a: &Tncw, root: StateId, size: usize) -> Vec<StateId> {
    let mut order = vec![root];
    let mut i = 0;
    while i < order.len() {
        let q = order[i];
        for s in a.symbols() {
            if let Some(d) = a.safe_successor(q, s) {
                if !order.contains(&d) {
                    order.push(d);
                }
            }
        }
        i += 1;
    }
    debug_assert_eq!(order.len(), size, "safe components are strongly connected");
    order
}

/// Enumerates component permutations within groups and root choices, keeping
/// the numbering with the least encoding.
#[allow(clippy::too_many_arguments)]
fn search_orders(
    a: &Tncw,
    orders: &[&[Vec<StateId>]],
    groups: &[Vec<usize>],
    g: usize,
    slots: &mut Vec<usize>,
    choice: &mut Vec<usize>,
    best: &mut Option<(Encoding, Vec<StateId>)>,
) {
    if g == groups.len() {
        let mut perm = vec![0; a.num_states()];
        let mut next = 0;
        for (&c, &r) in slots.iter().zip(choice.iter()) {
            for &q in &orders[c][r] {
                perm[q] = next;
                next += 1;
            }
        }
        let enc = encode(a, &perm);
        if best.as_ref().is_none_or(|(b, _)| enc < *b) {
            *best = Some((enc, perm));
        }
        return;
    }
    permute_group(a, orders, groups, g, 0, slots, choice, best);
}

#[allow(clippy::too_many_arguments)]
fn permute_group(
    a: &Tncw,
    orders: &[&[Vec<StateId>]],
    groups: &[Vec<usize>],
    g: usize,
    placed: usize,
    slots: &mut Vec<usize>,
    choice: &mut Vec<usize>,
    best: &mut Option<(Encoding, Vec<StateId>)>,
) {
    let group = &groups[g];
    if placed == group.len() {
        search_orders(a, orders, groups, g + 1, slots, choice, best);
        return;
    }
    for &c in group {
        if slots[slots.len() - placed..].contains(&c) {
            continue;
        }
        for r in 0..orders[c].len() {
            slots.push(c);
            choice.push(r);
            permute_group(a, orders, groups, g, placed + 1, slots, choice, best);
            slots.pop();
            choice.pop();
        }
    }
}
