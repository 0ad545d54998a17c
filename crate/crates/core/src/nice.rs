//! Turning an automaton into a nice GFG-tNCW: every state reachable and GFG,
//! normal, safe deterministic and semantically deterministic.

use crate::automaton::{ensure_total, restrict_to_reachable, StateId, Tncw, Transition};
use crate::error::{Error, Result};
use crate::oracle::{breakpoint_determinize, containment_matrix, equivalence_matrix, gfg_check};
use crate::safe;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NicenessReport {
    pub reachable: bool,
    pub normal: bool,
    pub safe_deterministic: bool,
    pub semantically_deterministic: bool,
    /// `None` when the GFG check was skipped.
    pub all_states_gfg: Option<bool>,
}

impl NicenessReport {
    pub fn is_nice(&self) -> bool {
        self.reachable
            && self.normal
            && self.safe_deterministic
            && self.semantically_deterministic
            && self.all_states_gfg == Some(true)
    }

    pub fn lines(&self) -> Vec<(&'static str, Option<bool>)> {
        vec![
            ("all_reachable", Some(self.reachable)),
            ("normal", Some(self.normal)),
            ("safe_deterministic", Some(self.safe_deterministic)),
            ("semantically_deterministic", Some(self.semantically_deterministic)),
            ("all_states_gfg", self.all_states_gfg),
        ]
    }
}

/// Whether all σ-successors of every state are language-equivalent.
pub fn is_semantically_deterministic(a: &Tncw) -> bool {
    let eq = equivalence_matrix(a);
    a.states().all(|q| {
        a.symbols().all(|s| {
            let succ = a.successors(q, s);
            succ.iter().all(|&(x, _)| eq[succ[0].0][x])
        })
    })
}

/// Keeps, for each `(q, σ)`, only the covering transitions: those whose
/// target language contains the language of every other σ-successor. A pair
/// without a covering transition is left as it is.
pub fn semantically_determinize(a: &Tncw) -> Tncw {
    let c = containment_matrix(a);
    let mut transitions = Vec::with_capacity(a.num_transitions());
    for q in a.states() {
        for s in a.symbols() {
            let succ = a.successors(q, s);
            let covering: Vec<(StateId, bool)> = succ
                .iter()
                .copied()
                .filter(|&(x, _)| succ.iter().all(|&(y, _)| c[y][x]))
                .collect();
            let keep = if covering.is_empty() { succ } else { &covering[..] };
            transitions.extend(keep.iter().map(|&(dst, in_alpha)| Transition {
                src: q,
                symbol: s,
                dst,
                in_alpha,
            }));
        }
    }
    a.with_transitions(transitions).expect("subset of a valid transition set")
}

/// `gfg[q]` iff the automaton started in `q` is GFG.
pub fn gfg_states(a: &Tncw) -> Vec<bool> {
    a.states().map(|q| gfg_check(&a.with_initial(q)).0).collect()
}

/// Deletes the states that are not GFG, completing with a rejecting sink if
/// that broke totality. Fails if the initial state is not GFG.
pub fn remove_non_gfg_states(a: &Tncw) -> Result<Tncw> {
    let gfg = gfg_states(a);
    if !gfg[a.initial()] {
        return Err(Error::NotGfg);
    }
    if gfg.iter().all(|&g| g) {
        return Ok(a.clone());
    }
    let keep: Vec<StateId> = a.states().filter(|&q| gfg[q]).collect();
    Ok(ensure_total(&a.restrict(&keep, a.initial())))
}

/// Nice GFG-tNCW equivalent to `a`, never larger unless determinization was
/// needed.
///
/// The input has to be safe deterministic. With `determinize`, other inputs
/// are first replaced by their breakpoint determinization.
pub fn make_nice(a: &Tncw, determinize: bool) -> Result<Tncw> {
    let a = ensure_total(a);
    let a = if a.is_safe_deterministic() {
        a
    } else if determinize {
        breakpoint_determinize(&a)
    } else {
        return Err(Error::NotSafeDeterministic);
    };
    let a = remove_non_gfg_states(&a)?;
    let a = semantically_determinize(&a);
    let a = restrict_to_reachable(&a);
    Ok(safe::normalize(&a))
}

/// Checks each niceness property; the per-state GFG games only when
/// `check_gfg` is set.
pub fn validate_nice(a: &Tncw, check_gfg: bool) -> NicenessReport {
    NicenessReport {
        reachable: a.bfs_order().len() == a.num_states(),
        normal: safe::is_normal(a),
        safe_deterministic: a.is_safe_deterministic(),
        semantically_deterministic: is_semantically_deterministic(a),
        all_states_gfg: check_gfg.then(|| gfg_states(a).iter().all(|&g| g)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automaton::Alphabet;
    use crate::fixtures;
    use crate::oracle::equivalent;

    /// `q` reads `a` into either `s1` (accepting only `a^ω`) or `s2`
    /// (accepting `(a+b)*·a^ω`); `L(s1) ⊊ L(s2)`.
    fn nested() -> Tncw {
        Tncw::new(
            Alphabet::letters(2),
            5,
            0,
            [
                Transition::alpha(0, 0, 1),
                Transition::alpha(0, 0, 2),
                Transition::alpha(0, 1, 0),
                // s1: a-loop, b to a rejecting sink
                Transition::safe(1, 0, 1),
                Transition::alpha(1, 1, 4),
                // s2 = FM
                Transition::alpha(2, 0, 3),
                Transition::alpha(2, 1, 2),
                Transition::safe(3, 0, 3),
                Transition::alpha(3, 1, 2),
                Transition::alpha(4, 0, 4),
                Transition::alpha(4, 1, 4),
            ],
        )
        .unwrap()
    }

    #[test]
    fn nested_successors_pruned() {
        let a = nested();
        assert!(!is_semantically_deterministic(&a));
        assert!(!validate_nice(&a, false).semantically_deterministic);
        let b = semantically_determinize(&a);
        assert_eq!(b.successors(0, 0), &[(2, true)]);
        assert!(equivalent(&a, &b));
        assert!(is_semantically_deterministic(&b));
    }

    #[test]
    fn fixtures_are_fixed_points() {
        for a in [fixtures::fm(), fixtures::tri(), fixtures::tok(), fixtures::bs()] {
            assert_eq!(semantically_determinize(&a), a);
            assert_eq!(remove_non_gfg_states(&a).unwrap(), a);
            assert_eq!(make_nice(&a, false).unwrap(), a);
            assert!(validate_nice(&a, true).is_nice());
        }
    }

    #[test]
    fn tri_with_safe_cross_edges_is_not_normal() {
        let tri = fixtures::tri();
        let bad = tri
            .with_transitions(tri.transitions().map(|t| {
                if (t.src, t.symbol, t.dst) == (0, 2, 2) {
                    Transition { in_alpha: false, ..t }
                } else {
                    t
                }
            }))
            .unwrap();
        assert!(!validate_nice(&bad, false).normal);
    }

    #[test]
    fn non_gfg_state_removed() {
        // State 1 guesses; state 0 is deterministic and never reaches 1.
        let a = Tncw::new(
            Alphabet::letters(2),
            4,
            0,
            [
                Transition::safe(0, 0, 0),
                Transition::alpha(0, 1, 0),
                Transition::alpha(1, 0, 1),
                Transition::alpha(1, 1, 1),
                Transition::alpha(1, 0, 2),
                Transition::safe(2, 0, 2),
                Transition::alpha(2, 1, 3),
                Transition::alpha(3, 0, 3),
                Transition::alpha(3, 1, 3),
            ],
        )
        .unwrap();
        let gfg = gfg_states(&a);
        assert_eq!(gfg, vec![true, false, true, true]);
        let b = remove_non_gfg_states(&a).unwrap();
        assert_eq!(b.num_states(), 3);
        assert!(equivalent(&a, &b));
        assert_eq!(remove_non_gfg_states(&a.with_initial(1)), Err(Error::NotGfg));
    }

    #[test]
    fn make_nice_requires_safe_determinism() {
        let a = Tncw::new(
            Alphabet::letters(1),
            2,
            0,
            [Transition::safe(0, 0, 0), Transition::safe(0, 0, 1), Transition::safe(1, 0, 1)],
        )
        .unwrap();
        assert_eq!(make_nice(&a, false), Err(Error::NotSafeDeterministic));
        let n = make_nice(&a, true).unwrap();
        assert!(validate_nice(&n, true).is_nice());
        assert!(equivalent(&a, &n));
    }
}
