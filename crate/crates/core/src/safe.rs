//! Safe components: the SCCs of the graph of ᾱ-transitions.

use std::collections::BTreeSet;

use crate::automaton::{StateId, Tncw, Transition};
use crate::graph;
use crate::minimize::HRelation;

pub type ComponentId = usize;

/// Partition of the states into safe components plus the DAG of ᾱ-edges
/// between them.
///
/// Component ids follow a topological order of that DAG: every edge in
/// `dag_edges` goes from a smaller id to a larger one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SafeDecomposition {
    pub component_of: Vec<ComponentId>,
    pub components: Vec<Vec<StateId>>,
    pub dag_edges: BTreeSet<(ComponentId, ComponentId)>,
}

impl SafeDecomposition {
    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn same_component(&self, p: StateId, q: StateId) -> bool {
        self.component_of[p] == self.component_of[q]
    }

    /// Smallest state id in a component.
    pub fn min_state(&self, c: ComponentId) -> StateId {
        self.components[c][0]
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.components.iter().map(Vec::len).collect()
    }
}

fn safe_graph(a: &Tncw) -> Vec<Vec<usize>> {
    a.states()
        .map(|q| {
            let mut out: Vec<usize> = a.symbols().flat_map(|s| a.safe_successors(q, s)).collect();
            out.sort_unstable();
            out.dedup();
            out
        })
        .collect()
}

pub fn safe_components(a: &Tncw) -> SafeDecomposition {
    let succ = safe_graph(a);
    let mut components = graph::tarjan_scc(a.num_states(), &succ);
    components.reverse();
    let component_of = graph::component_index(a.num_states(), &components);
    let mut dag_edges = BTreeSet::new();
    for (q, out) in succ.iter().enumerate() {
        for &d in out {
            let (cq, cd) = (component_of[q], component_of[d]);
            if cq != cd {
                dag_edges.insert((cq, cd));
            }
        }
    }
    SafeDecomposition {
        component_of,
        components,
        dag_edges,
    }
}

/// No ᾱ-transition connects two different safe components.
pub fn is_normal(a: &Tncw) -> bool {
    safe_components(a).dag_edges.is_empty()
}

/// Reclassifies every ᾱ-transition between different safe components as an
/// α-transition.
pub fn normalize(a: &Tncw) -> Tncw {
    let mut current = a.clone();
    loop {
        let d = safe_components(&current);
        if d.dag_edges.is_empty() {
            return current;
        }
        let transitions: Vec<Transition> = current
            .transitions()
            .map(|t| {
                if !t.in_alpha && !d.same_component(t.src, t.dst) {
                    Transition { in_alpha: true, ..t }
                } else {
                    t
                }
            })
            .collect();
        current = current
            .with_transitions(transitions)
            .expect("reclassification keeps the automaton valid");
    }
}

/// One representative per ergodic SCC of the graph `⟨components, h⟩`.
///
/// The representative of an SCC is the component holding the smallest state
/// id. Since `h` is transitive, the result is a frontier.
pub fn ergodic_components(d: &SafeDecomposition, h: &HRelation) -> BTreeSet<ComponentId> {
    let m = d.len();
    let succ: Vec<Vec<usize>> = (0..m)
        .map(|c| (0..m).filter(|&e| h.holds(c, e)).collect())
        .collect();
    let sccs = graph::tarjan_scc(m, &succ);
    let scc_of = graph::component_index(m, &sccs);
    sccs.iter()
        .enumerate()
        .filter(|&(i, scc)| scc.iter().all(|&c| succ[c].iter().all(|&e| scc_of[e] == i)))
        .map(|(_, scc)| {
            *scc.iter()
                .min_by_key(|&&c| d.min_state(c))
                .expect("components are non-empty")
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automaton::Alphabet;
    use crate::fixtures;

    fn comps_as_sets(d: &SafeDecomposition) -> BTreeSet<Vec<StateId>> {
        d.components.iter().cloned().collect()
    }

    #[test]
    fn fm_has_two_singletons() {
        let d = safe_components(&fixtures::fm());
        assert_eq!(comps_as_sets(&d), BTreeSet::from([vec![0], vec![1]]));
    }

    #[test]
    fn tri_components() {
        let d = safe_components(&fixtures::tri());
        assert_eq!(comps_as_sets(&d), BTreeSet::from([vec![0, 1], vec![2]]));
    }

    #[test]
    fn tok_components() {
        let tok = fixtures::tok();
        let d = safe_components(&tok);
        let names: BTreeSet<Vec<Vec<u8>>> = d
            .components
            .iter()
            .map(|c| c.iter().map(|&q| fixtures::TOK_STATES[q].to_vec()).collect())
            .collect();
        assert_eq!(
            names,
            BTreeSet::from([
                vec![vec![1], vec![2], vec![3]],
                vec![vec![2, 3], vec![1, 3], vec![1, 2]],
            ])
        );
    }

    #[test]
    fn normalize_is_identity_on_normal_input() {
        let tri = fixtures::tri();
        assert_eq!(normalize(&tri), tri);
    }

    #[test]
    fn normalize_reclassifies_cross_edge() {
        let a = Tncw::new(
            Alphabet::letters(1),
            2,
            0,
            [Transition::safe(0, 0, 1), Transition::safe(1, 0, 1)],
        )
        .unwrap();
        // 0 has no ᾱ self-loop, so {0} is a singleton component.
        let n = normalize(&a);
        assert_eq!(n.transition_flag(0, 0, 1), Some(true));
        assert_eq!(n.transition_flag(1, 0, 1), Some(false));
        assert!(is_normal(&n));
    }

    #[test]
    fn dag_edges_point_forward() {
        let a = Tncw::new(
            Alphabet::letters(2),
            3,
            0,
            [
                Transition::safe(0, 0, 0),
                Transition::safe(0, 1, 1),
                Transition::safe(1, 0, 2),
                Transition::safe(1, 1, 1),
                Transition::safe(2, 0, 2),
                Transition::alpha(2, 1, 0),
            ],
        )
        .unwrap();
        let d = safe_components(&a);
        assert_eq!(d.len(), 3);
        assert!(d.dag_edges.iter().all(|&(x, y)| x < y));
        assert_eq!(d.dag_edges.len(), 2);
    }
}
