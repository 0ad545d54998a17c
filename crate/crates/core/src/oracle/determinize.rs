use std::collections::{HashMap, VecDeque};

use crate::automaton::{StateId, Tncw, Transition};

/// A breakpoint macro-state: the reachable set and the subset still on an
/// α-free run since the last breakpoint. Both sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MacroState {
    pub reach: Vec<StateId>,
    pub obligation: Vec<StateId>,
}

/// Equivalent deterministic automaton by the subset and breakpoint
/// construction. A transition is in α exactly when the obligation set runs
/// empty; it is then reset to the new reachable set.
pub fn breakpoint_determinize(a: &Tncw) -> Tncw {
    breakpoint_determinize_with_states(a).0
}

/// Like [`breakpoint_determinize`], also returning the macro-state of every
/// output state. States are numbered in BFS order from `({q0}, {q0})`.
pub fn breakpoint_determinize_with_states(a: &Tncw) -> (Tncw, Vec<MacroState>) {
    let n = a.num_states();
    let init = MacroState {
        reach: vec![a.initial()],
        obligation: vec![a.initial()],
    };
    let mut ids: HashMap<MacroState, StateId> = HashMap::from([(init.clone(), 0)]);
    let mut states = vec![init];
    let mut queue = VecDeque::from([0usize]);
    let mut transitions = Vec::new();
    let mut mark = vec![false; n];
    let collect = |mark: &mut Vec<bool>| -> Vec<StateId> {
        let out: Vec<StateId> = (0..n).filter(|&q| mark[q]).collect();
        mark.iter_mut().for_each(|m| *m = false);
        out
    };
    while let Some(id) = queue.pop_front() {
        let cur = states[id].clone();
        for sym in a.symbols() {
            for &q in &cur.reach {
                for &(d, _) in a.successors(q, sym) {
                    mark[d] = true;
                }
            }
            let reach = collect(&mut mark);
            for &q in &cur.obligation {
                for d in a.safe_successors(q, sym) {
                    mark[d] = true;
                }
            }
            let mut obligation = collect(&mut mark);
            let in_alpha = obligation.is_empty();
            if in_alpha {
                obligation = reach.clone();
            }
            let next = MacroState { reach, obligation };
            let dst = match ids.get(&next) {
                Some(&d) => d,
                None => {
                    let d = states.len();
                    ids.insert(next.clone(), d);
                    states.push(next);
                    queue.push_back(d);
                    d
                }
            };
            transitions.push(Transition {
                src: id,
                symbol: sym,
                dst,
                in_alpha,
            });
        }
    }
    let d = Tncw::new(a.alphabet().clone(), states.len(), 0, transitions)
        .expect("determinization of a total automaton is total");
    (d, states)
}
