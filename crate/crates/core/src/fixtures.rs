//! Named example automata used throughout the tests and shipped as HOA files.
//!
//! * `fm`: deterministic automaton for `(a+b)*·a^ω` that is nice but not minimal.
//! * `tri`: three-state deterministic automaton whose states are all
//!   equivalent but have different safe languages.
//! * `bs`: the safe-centralization of `tri`.
//! * `tok`: the deterministic token automaton over `{sigma, pi, #}`.
//! * `min3`: the safe-centralization of `tok`.
//! * `dp1`, `dp2`: two deterministic automata for `(b+c)*·(bc)^ω` with the same
//!   safe skeleton and different α-transitions.

use std::collections::{BTreeMap, VecDeque};

use crate::automaton::{Alphabet, Tncw, Transition};
use crate::safe;

fn build(symbols: &[&str], n: usize, edges: &[(usize, usize, usize, bool)]) -> Tncw {
    Tncw::new(
        Alphabet::new(symbols.iter().copied()).expect("fixture alphabet"),
        n,
        0,
        edges.iter().map(|&(src, symbol, dst, in_alpha)| Transition {
            src,
            symbol,
            dst,
            in_alpha,
        }),
    )
    .expect("fixture automaton")
}

const A: bool = true;
const S: bool = false;

pub fn fm() -> Tncw {
    build(
        &["a", "b"],
        2,
        &[(0, 0, 1, A), (0, 1, 0, A), (1, 0, 1, S), (1, 1, 0, A)],
    )
}

pub fn tri() -> Tncw {
    build(
        &["a", "b", "c"],
        3,
        &[
            (0, 0, 0, S),
            (0, 1, 1, S),
            (0, 2, 2, A),
            (1, 0, 0, A),
            (1, 1, 0, S),
            (1, 2, 2, A),
            (2, 0, 2, S),
            (2, 1, 0, A),
            (2, 2, 0, A),
        ],
    )
}

/// Equal to the safe-centralization of [`tri`] with frontier `{{q0, q1}}`.
pub fn bs() -> Tncw {
    build(
        &["a", "b", "c"],
        2,
        &[
            (0, 0, 0, S),
            (0, 1, 1, S),
            (0, 2, 0, A),
            (0, 2, 1, A),
            (1, 0, 0, A),
            (1, 0, 1, A),
            (1, 1, 0, S),
            (1, 2, 0, A),
            (1, 2, 1, A),
        ],
    )
}

/// Token positions of each [`tok`] state, indexed by state id.
pub const TOK_STATES: [&[u8]; 6] = [&[1], &[2], &[2, 3], &[3], &[1, 3], &[1, 2]];

/// Alive-token sets reachable from `{1}`; `sigma` rotates tokens, `pi` swaps
/// vertices 1 and 2, `#` kills the token on vertex 1 and restarts with
/// `{2, 3}` (an α-transition) when no token is left.
pub fn tok() -> Tncw {
    fn step(set: u8, symbol: usize) -> (u8, bool) {
        let map = |v: u8| -> u8 {
            match symbol {
                0 => v % 3 + 1,
                1 => match v {
                    1 => 2,
                    2 => 1,
                    x => x,
                },
                _ => v,
            }
        };
        if symbol == 2 {
            let rest = set & !0b001;
            if rest == 0 {
                (0b110, true)
            } else {
                (rest, false)
            }
        } else {
            let mut out = 0u8;
            for v in 1..=3u8 {
                if set & (1 << (v - 1)) != 0 {
                    out |= 1 << (map(v) - 1);
                }
            }
            (out, false)
        }
    }
    let mut ids: BTreeMap<u8, usize> = BTreeMap::new();
    let mut order = Vec::new();
    let mut queue = VecDeque::from([0b001u8]);
    ids.insert(0b001, 0);
    order.push(0b001u8);
    let mut edges = Vec::new();
    while let Some(set) = queue.pop_front() {
        let src = ids[&set];
        for symbol in 0..3 {
            let (next, alpha) = step(set, symbol);
            let dst = *ids.entry(next).or_insert_with(|| {
                order.push(next);
                queue.push_back(next);
                order.len() - 1
            });
            edges.push((src, symbol, dst, alpha));
        }
    }
    debug_assert!(order
        .iter()
        .zip(TOK_STATES.iter())
        .all(|(&bits, names)| names.iter().fold(0u8, |acc, &v| acc | 1 << (v - 1)) == bits));
    safe::normalize(&build(&["sigma", "pi", "#"], order.len(), &edges))
}

/// Equal to the safe-centralization of [`tok`] with the singleton frontier;
/// states are `{1}`, `{2}`, `{3}`.
pub fn min3() -> Tncw {
    build(
        &["sigma", "pi", "#"],
        3,
        &[
            (0, 0, 1, S),
            (0, 1, 1, S),
            (0, 2, 0, A),
            (0, 2, 1, A),
            (0, 2, 2, A),
            (1, 0, 2, S),
            (1, 1, 0, S),
            (1, 2, 1, S),
            (2, 0, 0, S),
            (2, 1, 2, S),
            (2, 2, 2, S),
        ],
    )
}

pub fn dp1() -> Tncw {
    build(
        &["b", "c"],
        2,
        &[(0, 0, 1, S), (0, 1, 0, A), (1, 1, 0, S), (1, 0, 1, A)],
    )
}

pub fn dp2() -> Tncw {
    build(
        &["b", "c"],
        2,
        &[(0, 0, 1, S), (0, 1, 1, A), (1, 1, 0, S), (1, 0, 1, A)],
    )
}

/// All fixtures with their file stems.
pub fn all() -> Vec<(&'static str, Tncw)> {
    vec![
        ("fm", fm()),
        ("tri", tri()),
        ("bs", bs()),
        ("tok", tok()),
        ("min3", min3()),
        ("dp1", dp1()),
        ("dp2", dp2()),
    ]
}
