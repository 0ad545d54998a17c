use std::collections::VecDeque;

use crate::automaton::{StateId, Symbol, Tncw};
use crate::error::{Error, Result};
use crate::graph;

/// `live[q]` iff `L_safe(a^q)` is non-empty, i.e. `q` reaches an ᾱ-cycle
/// through ᾱ-transitions.
pub fn safe_live(a: &Tncw) -> Vec<bool> {
    let succ: Vec<Vec<usize>> = a
        .states()
        .map(|q| a.symbols().flat_map(|s| a.safe_successors(q, s)).collect())
        .collect();
    let mut live = vec![false; a.num_states()];
    // Tarjan emits sinks first, so successors are settled before their sources.
    for comp in graph::tarjan_scc(a.num_states(), &succ) {
        let l = graph::is_nontrivial(&comp, &succ) || comp.iter().any(|&q| succ[q].iter().any(|&d| live[d]));
        for &q in &comp {
            live[q] = l;
        }
    }
    live
}

fn live_move(a: &Tncw, live: &[bool], q: StateId, sym: Symbol) -> Option<StateId> {
    a.safe_successor(q, sym).filter(|&d| live[d])
}

/// Whether `L_safe(a^q) ⊆ L_safe(a^s)` for a safe-deterministic `a`.
pub fn safe_contains(a: &Tncw, q: StateId, s: StateId) -> Result<bool> {
    safe_contains_cross(a, q, a, s)
}

/// Whether `L_safe(a^q) ⊆ L_safe(b^s)`; both must be safe deterministic.
pub fn safe_contains_cross(a: &Tncw, q: StateId, b: &Tncw, s: StateId) -> Result<bool> {
    if !a.is_safe_deterministic() || !b.is_safe_deterministic() {
        return Err(Error::NotSafeDeterministic);
    }
    if a.alphabet() != b.alphabet() {
        return Err(Error::AlphabetMismatch);
    }
    let (la, lb) = (safe_live(a), safe_live(b));
    if !la[q] {
        return Ok(true);
    }
    let m = b.num_states();
    let mut seen = vec![false; a.num_states() * m];
    seen[q * m + s] = true;
    let mut queue = VecDeque::from([(q, s)]);
    while let Some((x, y)) = queue.pop_front() {
        for sym in a.symbols() {
            let Some(x2) = live_move(a, &la, x, sym) else {
                continue;
            };
            let Some(y2) = live_move(b, &lb, y, sym) else {
                return Ok(false);
            };
            if !seen[x2 * m + y2] {
                seen[x2 * m + y2] = true;
                queue.push_back((x2, y2));
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automaton::{Alphabet, Transition};
    use crate::fixtures;

    #[test]
    fn tri_safe_languages() {
        let tri = fixtures::tri();
        assert!(safe_contains(&tri, 2, 0).unwrap());
        assert!(!safe_contains(&tri, 0, 2).unwrap());
        for q in tri.states() {
            assert!(safe_contains(&tri, q, q).unwrap());
        }
    }

    #[test]
    fn bs_safe_languages_incomparable() {
        let bs = fixtures::bs();
        assert!(!safe_contains(&bs, 0, 1).unwrap());
        assert!(!safe_contains(&bs, 1, 0).unwrap());
    }

    #[test]
    fn fm_empty_safe_language() {
        let fm = fixtures::fm();
        assert_eq!(safe_live(&fm), vec![false, true]);
        assert!(safe_contains(&fm, 0, 1).unwrap());
        assert!(!safe_contains(&fm, 1, 0).unwrap());
    }

    #[test]
    fn dead_safe_branch_is_ignored() {
        // 0 -a-> 0 and 0 -b-> 1 where 1 has no safe future: L_safe(0) = {a^ω}.
        let a = Tncw::new(
            Alphabet::letters(2),
            3,
            0,
            [
                Transition::safe(0, 0, 0),
                Transition::safe(0, 1, 1),
                Transition::alpha(1, 0, 0),
                Transition::alpha(1, 1, 0),
                Transition::safe(2, 0, 2),
                Transition::alpha(2, 1, 2),
            ],
        )
        .unwrap();
        assert!(safe_contains(&a, 0, 2).unwrap());
        assert!(safe_contains(&a, 2, 0).unwrap());
    }

    #[test]
    fn rejects_safe_nondeterminism() {
        let a = Tncw::new(
            Alphabet::letters(1),
            2,
            0,
            [Transition::safe(0, 0, 0), Transition::safe(0, 0, 1), Transition::safe(1, 0, 1)],
        )
        .unwrap();
        assert_eq!(safe_contains(&a, 0, 1), Err(Error::NotSafeDeterministic));
    }
}
