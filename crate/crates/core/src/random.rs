//! Seeded random automata for differential testing.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::automaton::{Alphabet, Tncw, Transition};
use crate::oracle::containment_matrix;
use crate::safe;

/// A random total, normal, safe-deterministic GFG-tNCW.
///
/// The base is a random deterministic automaton. Unless `deterministic` is
/// set, α-transitions `⟨q, σ, s⟩` are then added where `L(s)` is contained in
/// the language of the deterministic σ-successor of `q`; following the base
/// transitions remains a winning strategy, so the result is GFG and
/// recognizes the same language. Cross-component ᾱ-transitions are finally
/// moved to α.
pub fn random_tncw(states: usize, symbols: usize, seed: u64, deterministic: bool) -> Tncw {
    assert!(states > 0 && symbols > 0);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut ts = Vec::with_capacity(states * symbols);
    for q in 0..states {
        for s in 0..symbols {
            let dst = rng.gen_range(0..states);
            let in_alpha = rng.gen_bool(0.35);
            ts.push(Transition {
                src: q,
                symbol: s,
                dst,
                in_alpha,
            });
        }
    }
    let base = Tncw::new(Alphabet::letters(symbols), states, 0, ts.clone()).expect("total by construction");
    if deterministic {
        return safe::normalize(&base);
    }
    let c = containment_matrix(&base);
    for q in 0..states {
        for s in 0..symbols {
            let target = base.successors(q, s)[0].0;
            for d in 0..states {
                if d != target && c[d][target] && rng.gen_bool(0.5) {
                    ts.push(Transition::alpha(q, s, d));
                }
            }
        }
    }
    safe::normalize(&base.with_transitions(ts).expect("new triples only"))
}
