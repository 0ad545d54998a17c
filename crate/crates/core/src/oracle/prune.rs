use crate::automaton::{StateId, Tncw, Transition};

/// Iterator over the deterministic prunings of an automaton: every way of
/// keeping exactly one transition per `(state, symbol)` pair. α flags are
/// kept. Order is lexicographic in the choice vector, `(0, σ0)` varying
/// slowest.
pub struct Prunings {
    a: Tncw,
    choice: Vec<usize>,
    done: bool,
}

pub fn enumerate_prunings(a: &Tncw) -> Prunings {
    Prunings {
        a: a.clone(),
        choice: vec![0; a.num_states() * a.num_symbols()],
        done: false,
    }
}

/// Number of prunings, saturating at `u128::MAX`.
pub fn count_prunings(a: &Tncw) -> u128 {
    a.states()
        .flat_map(|q| a.symbols().map(move |s| (q, s)))
        .fold(1u128, |acc, (q, s)| acc.saturating_mul(a.successors(q, s).len() as u128))
}

impl Iterator for Prunings {
    type Item = Tncw;

    fn next(&mut self) -> Option<Tncw> {
        if self.done {
            return None;
        }
        let a = &self.a;
        let k = a.num_symbols();
        let transitions: Vec<Transition> = a
            .states()
            .flat_map(|q: StateId| a.symbols().map(move |s| (q, s)))
            .map(|(q, s)| {
                let (dst, in_alpha) = a.successors(q, s)[self.choice[q * k + s]];
                Transition {
                    src: q,
                    symbol: s,
                    dst,
                    in_alpha,
                }
            })
            .collect();
        let out = a.with_transitions(transitions).expect("pruning keeps a valid automaton");

        // Advance the odometer, last pair fastest.
        let mut i = self.choice.len();
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            let (q, s) = (i / k, i % k);
            self.choice[i] += 1;
            if self.choice[i] < a.successors(q, s).len() {
                break;
            }
            self.choice[i] = 0;
        }
        Some(out)
    }
}
