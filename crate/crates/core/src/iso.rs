//! Isomorphism and safe isomorphism of automata.
//!
//! Neither notion looks at initial states: a bijection only has to respect
//! transitions.

use std::collections::BTreeMap;

use crate::automaton::{StateId, Tncw};
use crate::error::Result;
use crate::minimize::compute_cross_relations;

/// A bijection between the state sets of two automata.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Bijection {
    pub forward: Vec<StateId>,
    pub inverse: Vec<StateId>,
}

impl Bijection {
    pub fn from_forward(forward: Vec<StateId>) -> Option<Self> {
        let mut inverse = vec![usize::MAX; forward.len()];
        for (q, &s) in forward.iter().enumerate() {
            if s >= forward.len() || inverse[s] != usize::MAX {
                return None;
            }
            inverse[s] = q;
        }
        Some(Bijection { forward, inverse })
    }

    pub fn apply(&self, q: StateId) -> StateId {
        self.forward[q]
    }
}

/// Stable colouring of the states of several automata by iterated
/// refinement. Colours are assigned by sorting signatures, so they do not
/// depend on state numbering and are comparable across the automata.
pub(crate) fn refine_colors(autos: &[&Tncw], with_alpha: bool, mark_initial: bool) -> Vec<Vec<usize>> {
    let mut colors: Vec<Vec<usize>> = autos
        .iter()
        .map(|a| {
            a.states()
                .map(|q| usize::from(mark_initial && q == a.initial()))
                .collect()
        })
        .collect();
    let mut count = distinct(&colors);
    loop {
        type Sig = (usize, Vec<(Option<usize>, Vec<usize>)>);
        let sigs: Vec<Vec<Sig>> = autos
            .iter()
            .zip(&colors)
            .map(|(a, col)| {
                a.states()
                    .map(|q| {
                        let moves = a
                            .symbols()
                            .map(|s| {
                                let safe = a.safe_successor(q, s).map(|d| col[d]);
                                let mut alpha: Vec<usize> = if with_alpha {
                                    a.alpha_successors(q, s).map(|d| col[d]).collect()
                                } else {
                                    Vec::new()
                                };
                                alpha.sort_unstable();
                                (safe, alpha)
                            })
                            .collect();
                        (col[q], moves)
                    })
                    .collect()
            })
            .collect();
        let mut table: BTreeMap<&Sig, usize> = sigs.iter().flatten().map(|s| (s, 0)).collect();
        for (i, v) in table.values_mut().enumerate() {
            *v = i;
        }
        colors = sigs
            .iter()
            .map(|row| row.iter().map(|s| table[s]).collect())
            .collect();
        let next = table.len();
        if next == count {
            return colors;
        }
        count = next;
    }
}

fn distinct(colors: &[Vec<usize>]) -> usize {
    let mut all: Vec<usize> = colors.iter().flatten().copied().collect();
    all.sort_unstable();
    all.dedup();
    all.len()
}

/// Smallest (by forward map) bijection preserving ᾱ-transitions, and also
/// α-transitions when `with_alpha`.
fn search(a: &Tncw, b: &Tncw, with_alpha: bool) -> Option<Bijection> {
    if a.num_states() != b.num_states() || a.alphabet() != b.alphabet() {
        return None;
    }
    if with_alpha && a.num_alpha_transitions() != b.num_alpha_transitions() {
        return None;
    }
    let safe_count = |x: &Tncw| x.num_transitions() - x.num_alpha_transitions();
    if safe_count(a) != safe_count(b) {
        return None;
    }
    let colors = refine_colors(&[a, b], with_alpha, false);
    let (ca, cb) = (&colors[0], &colors[1]);
    let mut hist_a = ca.clone();
    let mut hist_b = cb.clone();
    hist_a.sort_unstable();
    hist_b.sort_unstable();
    if hist_a != hist_b {
        return None;
    }
    let n = a.num_states();
    let flag = |x: &Tncw, q: StateId, s: usize, d: StateId| -> Option<bool> {
        match x.transition_flag(q, s, d) {
            Some(true) if !with_alpha => None,
            f => f,
        }
    };
    let consistent = |fwd: &[StateId], q: StateId, img: StateId| -> bool {
        // Check q against every assigned state, including itself.
        (0..=q).all(|p| {
            let pi = if p == q { img } else { fwd[p] };
            a.symbols().all(|s| {
                flag(a, q, s, p) == flag(b, img, s, pi) && flag(a, p, s, q) == flag(b, pi, s, img)
            })
        })
    };
    let mut fwd = vec![usize::MAX; n];
    let mut used = vec![false; n];
    let mut cand = vec![0usize; n];
    let mut q = 0usize;
    loop {
        // Try the next candidate image for q.
        let mut placed = false;
        while cand[q] < n {
            let img = cand[q];
            cand[q] += 1;
            if !used[img] && ca[q] == cb[img] && consistent(&fwd, q, img) {
                fwd[q] = img;
                used[img] = true;
                placed = true;
                break;
            }
        }
        if placed {
            if q + 1 == n {
                return Bijection::from_forward(fwd);
            }
            q += 1;
            cand[q] = 0;
        } else {
            if q == 0 {
                return None;
            }
            q -= 1;
            used[fwd[q]] = false;
            fwd[q] = usize::MAX;
        }
    }
}

/// A bijection `κ` with `⟨q, σ, q'⟩ ∈ ᾱ_a` iff `⟨κ(q), σ, κ(q')⟩ ∈ ᾱ_b`.
pub fn safe_isomorphic(a: &Tncw, b: &Tncw) -> Option<Bijection> {
    search(a, b, false)
}

/// A bijection respecting both ᾱ- and α-transitions.
pub fn isomorphic(a: &Tncw, b: &Tncw) -> Option<Bijection> {
    search(a, b, true)
}

/// Whether `k` maps the ᾱ-transitions (and α-transitions when `with_alpha`)
/// of `a` exactly onto those of `b`.
pub fn respects(a: &Tncw, b: &Tncw, k: &Bijection, with_alpha: bool) -> bool {
    a.num_states() == b.num_states()
        && a.states().all(|q| {
            a.symbols().all(|s| {
                a.states().all(|p| {
                    let (x, y) = (a.transition_flag(q, s, p), b.transition_flag(k.apply(q), s, k.apply(p)));
                    if with_alpha {
                        x == y
                    } else {
                        (x == Some(false)) == (y == Some(false))
                    }
                })
            })
        })
}

/// For nice, safe-minimal automata: the map sending each state to the
/// unique strongly equivalent state of `b`, if that is a safe isomorphism.
pub fn forced_safe_isomorphism(a: &Tncw, b: &Tncw) -> Result<Option<Bijection>> {
    if a.num_states() != b.num_states() {
        return Ok(None);
    }
    let r = compute_cross_relations(a, b)?;
    let mut forward = Vec::with_capacity(a.num_states());
    for q in a.states() {
        let matches: Vec<StateId> = b.states().filter(|&s| r.strong(q, s)).collect();
        if matches.len() != 1 {
            return Ok(None);
        }
        forward.push(matches[0]);
    }
    Ok(Bijection::from_forward(forward).filter(|k| respects(a, b, k, false)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn dp1_dp2() {
        let (d1, d2) = (fixtures::dp1(), fixtures::dp2());
        let k = safe_isomorphic(&d1, &d2).unwrap();
        assert_eq!(k.forward, vec![0, 1]);
        assert!(isomorphic(&d1, &d2).is_none());
        assert_eq!(forced_safe_isomorphism(&d1, &d2).unwrap(), Some(k));
    }

    #[test]
    fn renamed_bs() {
        let bs = fixtures::bs();
        let swapped = bs.permute(&[1, 0]);
        let k = isomorphic(&bs, &swapped).unwrap();
        assert_eq!(k.forward, vec![1, 0]);
        assert!(respects(&bs, &swapped, &k, true));
        assert!(safe_isomorphic(&bs, &swapped).is_some());
    }

    #[test]
    fn size_mismatch() {
        assert!(safe_isomorphic(&fixtures::bs(), &fixtures::min3()).is_none());
    }

    #[test]
    fn identity_on_self() {
        for (_, a) in fixtures::all() {
            let k = isomorphic(&a, &a).unwrap();
            assert_eq!(k.forward, (0..a.num_states()).collect::<Vec<_>>());
        }
    }

    #[test]
    fn lexicographically_smallest() {
        // MIN3's singleton cycle has no nontrivial safe automorphism; TOK's
        // pair component, as an unlabeled ᾱ-graph, might. Whatever is found
        // must be the smallest valid forward map.
        let tok = fixtures::tok();
        let k = safe_isomorphic(&tok, &tok).unwrap();
        assert_eq!(k.forward, (0..6).collect::<Vec<_>>());
    }

    #[test]
    fn colors_ignore_numbering() {
        let bs = fixtures::bs();
        let c = refine_colors(&[&bs, &bs.permute(&[1, 0])], true, false);
        assert_eq!(c[0][0], c[1][1]);
        assert_eq!(c[0][1], c[1][0]);
    }
}
