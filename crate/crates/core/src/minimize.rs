//! Safe-centralization and the quotient by strong equivalence, which together
//! turn a nice GFG-tNCW into a minimal one.

use std::collections::{BTreeMap, BTreeSet};

use crate::automaton::{StateId, Tncw, Transition};
use crate::error::{Error, Result};
use crate::nice::make_nice;
use crate::oracle::{equivalence_matrix, lang_contains, safe_contains_cross};
use crate::safe::{self, ComponentId, SafeDecomposition};

/// Language equivalence and safe-language containment between the states of
/// one automaton, or between the states of two.
///
/// Rows are states of the left automaton, columns states of the right one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StateRelations {
    pub equiv: Vec<Vec<bool>>,
    /// `L_safe(q) ⊆ L_safe(s)`.
    pub safe_le: Vec<Vec<bool>>,
    /// `L_safe(s) ⊆ L_safe(q)`.
    pub safe_ge: Vec<Vec<bool>>,
}

impl StateRelations {
    /// `q ∼ s`
    pub fn equiv(&self, q: StateId, s: StateId) -> bool {
        self.equiv[q][s]
    }

    /// `q ≾ s`: equal languages and `L_safe(q) ⊆ L_safe(s)`.
    pub fn subsafe(&self, q: StateId, s: StateId) -> bool {
        self.equiv[q][s] && self.safe_le[q][s]
    }

    /// `q ≈ s`: equal languages and equal safe languages.
    pub fn strong(&self, q: StateId, s: StateId) -> bool {
        self.equiv[q][s] && self.safe_le[q][s] && self.safe_ge[q][s]
    }
}

fn safe_matrix(a: &Tncw, b: &Tncw) -> Result<Vec<Vec<bool>>> {
    a.states()
        .map(|q| b.states().map(|s| safe_contains_cross(a, q, b, s)).collect())
        .collect()
}

/// The relations `∼`, `≾` and `≈` of a safe-deterministic automaton.
pub fn compute_relations(a: &Tncw) -> Result<StateRelations> {
    if !a.is_safe_deterministic() {
        return Err(Error::NotSafeDeterministic);
    }
    let equiv = equivalence_matrix(a);
    let safe_le = safe_matrix(a, a)?;
    let safe_ge = a
        .states()
        .map(|q| a.states().map(|s| safe_le[s][q]).collect())
        .collect();
    Ok(StateRelations {
        equiv,
        safe_le,
        safe_ge,
    })
}

/// Relations between the states of `a` (rows) and `b` (columns).
pub fn compute_cross_relations(a: &Tncw, b: &Tncw) -> Result<StateRelations> {
    if a.alphabet() != b.alphabet() {
        return Err(Error::AlphabetMismatch);
    }
    let equiv = a
        .states()
        .map(|q| {
            b.states()
                .map(|s| lang_contains(a, q, b, s) && lang_contains(b, s, a, q))
                .collect()
        })
        .collect();
    let safe_le = safe_matrix(a, b)?;
    let rev = safe_matrix(b, a)?;
    let safe_ge = a.states().map(|q| b.states().map(|s| rev[s][q]).collect()).collect();
    Ok(StateRelations {
        equiv,
        safe_le,
        safe_ge,
    })
}

/// `H(S, S')` iff some `q ∈ S` and `q' ∈ S'` have `q ≾ q'`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HRelation {
    pub matrix: Vec<Vec<bool>>,
}

impl HRelation {
    pub fn holds(&self, c: ComponentId, e: ComponentId) -> bool {
        self.matrix[c][e]
    }

    pub fn len(&self) -> usize {
        self.matrix.len()
    }

    pub fn is_empty(&self) -> bool {
        self.matrix.is_empty()
    }

    /// Warshall closure.
    pub fn transitive_closure(&self) -> HRelation {
        let mut m = self.matrix.clone();
        let n = m.len();
        for k in 0..n {
            for i in 0..n {
                if m[i][k] {
                    for j in 0..n {
                        if m[k][j] {
                            m[i][j] = true;
                        }
                    }
                }
            }
        }
        HRelation { matrix: m }
    }

    pub fn is_transitive(&self) -> bool {
        self.transitive_closure() == *self
    }
}

pub fn compute_h(d: &SafeDecomposition, r: &StateRelations) -> HRelation {
    let matrix = d
        .components
        .iter()
        .map(|c| {
            d.components
                .iter()
                .map(|e| c.iter().any(|&q| e.iter().any(|&s| r.subsafe(q, s))))
                .collect()
        })
        .collect();
    HRelation { matrix }
}

/// One component per ergodic SCC of `⟨components, H⟩`.
pub fn choose_frontier(h: &HRelation, d: &SafeDecomposition) -> BTreeSet<ComponentId> {
    safe::ergodic_components(d, h)
}

/// Every component `H`-reaches a member, and no member reaches another.
pub fn is_frontier(h: &HRelation, frontier: &BTreeSet<ComponentId>) -> bool {
    (0..h.len()).all(|c| frontier.iter().any(|&f| h.holds(c, f)))
        && frontier
            .iter()
            .all(|&f| frontier.iter().all(|&g| f == g || !h.holds(f, g)))
}

/// The safe-centralization `B_S` of a nice automaton for a frontier `S`.
///
/// States are those of the frontier components, renumbered in increasing
/// id order. ᾱ-transitions are kept; a pair `(q, σ)` without one gets
/// α-transitions to every kept state equivalent to some σ-successor.
pub fn build_centralized(
    a: &Tncw,
    r: &StateRelations,
    d: &SafeDecomposition,
    frontier: &BTreeSet<ComponentId>,
) -> Result<Tncw> {
    if let Some(&c) = frontier.iter().find(|&&c| c >= d.len()) {
        return Err(Error::InvalidFrontier(format!("no component {c}")));
    }
    let mut kept: Vec<StateId> = frontier.iter().flat_map(|&c| d.components[c].iter().copied()).collect();
    kept.sort_unstable();
    let mut new_id = vec![usize::MAX; a.num_states()];
    for (i, &q) in kept.iter().enumerate() {
        new_id[q] = i;
    }

    let mut transitions = Vec::new();
    for &q in &kept {
        for s in a.symbols() {
            if let Some(t) = a.safe_successor(q, s) {
                if new_id[t] == usize::MAX {
                    return Err(Error::InvalidFrontier(format!(
                        "safe transition from {q} leaves the frontier"
                    )));
                }
                transitions.push(Transition::safe(new_id[q], s, new_id[t]));
                continue;
            }
            let mut added = false;
            for &p in &kept {
                if a.alpha_successors(q, s).any(|x| r.equiv(p, x)) {
                    transitions.push(Transition::alpha(new_id[q], s, new_id[p]));
                    added = true;
                }
            }
            if !added {
                return Err(Error::InvalidFrontier(format!(
                    "no frontier state equivalent to a successor of ({q}, {})",
                    a.alphabet().name(s)
                )));
            }
        }
    }
    let initial = if new_id[a.initial()] != usize::MAX {
        a.initial()
    } else {
        *kept
            .iter()
            .find(|&&p| r.subsafe(a.initial(), p))
            .ok_or_else(|| Error::InvalidFrontier("no frontier state above the initial state".into()))?
    };
    Tncw::new(a.alphabet().clone(), kept.len(), new_id[initial], transitions)
}

/// Merges strongly equivalent states of a nice, safe-centralized,
/// α-homogeneous automaton. Class ids follow their smallest member.
pub fn quotient(b: &Tncw) -> Result<Tncw> {
    if !b.is_alpha_homogeneous() {
        return Err(Error::NotAlphaHomogeneous);
    }
    let r = compute_relations(b)?;
    quotient_with(b, &r)
}

fn quotient_with(b: &Tncw, r: &StateRelations) -> Result<Tncw> {
    let mut class = vec![usize::MAX; b.num_states()];
    let mut count = 0;
    for q in b.states() {
        if class[q] != usize::MAX {
            continue;
        }
        for s in q..b.num_states() {
            if class[s] == usize::MAX && r.strong(q, s) {
                class[s] = count;
            }
        }
        count += 1;
    }
    let mut lifted: BTreeMap<(usize, usize, usize), bool> = BTreeMap::new();
    for t in b.transitions() {
        let key = (class[t.src], t.symbol, class[t.dst]);
        match lifted.insert(key, t.in_alpha) {
            Some(prev) if prev != t.in_alpha => return Err(Error::NotAlphaHomogeneous),
            _ => {}
        }
    }
    let c = Tncw::new(
        b.alphabet().clone(),
        count,
        class[b.initial()],
        lifted.into_iter().map(|((src, symbol, dst), in_alpha)| Transition {
            src,
            symbol,
            dst,
            in_alpha,
        }),
    )?;
    if !c.is_alpha_homogeneous() {
        return Err(Error::NotAlphaHomogeneous);
    }
    Ok(c)
}

/// Every intermediate result of [`minimize`].
#[derive(Clone, Debug)]
pub struct Pipeline {
    pub nice: Tncw,
    pub relations: StateRelations,
    pub decomposition: SafeDecomposition,
    pub h: HRelation,
    pub frontier: BTreeSet<ComponentId>,
    pub centralized: Tncw,
    pub minimal: Tncw,
}

pub fn minimize_pipeline(a: &Tncw, determinize: bool) -> Result<Pipeline> {
    let nice = make_nice(a, determinize)?;
    let relations = compute_relations(&nice)?;
    let decomposition = safe::safe_components(&nice);
    let h = compute_h(&decomposition, &relations);
    let frontier = choose_frontier(&h, &decomposition);
    let centralized = build_centralized(&nice, &relations, &decomposition, &frontier)?;
    let minimal = quotient(&centralized)?;
    Ok(Pipeline {
        nice,
        relations,
        decomposition,
        h,
        frontier,
        centralized,
        minimal,
    })
}

/// A minimal GFG-tNCW for the language of `a`.
pub fn minimize(a: &Tncw, determinize: bool) -> Result<Tncw> {
    Ok(minimize_pipeline(a, determinize)?.minimal)
}
