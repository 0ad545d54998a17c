use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::automaton::{Alphabet, StateId, Symbol, Tncw};
use crate::graph;

/// The ultimately periodic word `prefix · period^ω`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LassoWord {
    pub prefix: Vec<Symbol>,
    pub period: Vec<Symbol>,
}

impl LassoWord {
    /// # Panics
    /// If `period` is empty.
    pub fn new(prefix: Vec<Symbol>, period: Vec<Symbol>) -> Self {
        assert!(!period.is_empty(), "lasso period must be non-empty");
        LassoWord { prefix, period }
    }

    pub fn periodic(period: Vec<Symbol>) -> Self {
        Self::new(Vec::new(), period)
    }

    /// Looks symbols up by name.
    pub fn parse(alphabet: &Alphabet, prefix: &[&str], period: &[&str]) -> Option<Self> {
        let look = |names: &[&str]| names.iter().map(|n| alphabet.index_of(n)).collect::<Option<Vec<_>>>();
        let period = look(period)?;
        if period.is_empty() {
            return None;
        }
        Some(LassoWord {
            prefix: look(prefix)?,
            period,
        })
    }

    /// Symbol at position `i` of the infinite word.
    pub fn at(&self, i: usize) -> Symbol {
        if i < self.prefix.len() {
            self.prefix[i]
        } else {
            self.period[(i - self.prefix.len()) % self.period.len()]
        }
    }

    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> impl fmt::Display + 'a {
        DisplayLasso { w: self, alphabet }
    }
}

struct DisplayLasso<'a> {
    w: &'a LassoWord,
    alphabet: &'a Alphabet,
}

impl fmt::Display for DisplayLasso<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = |s: &[Symbol]| s.iter().map(|&x| self.alphabet.name(x)).collect::<Vec<_>>().join(" ");
        if !self.w.prefix.is_empty() {
            write!(f, "{} ", names(&self.w.prefix))?;
        }
        write!(f, "({})^w", names(&self.w.period))
    }
}

/// Whether some run of `a` on `w` is accepting, i.e. eventually avoids α.
pub fn accepts(a: &Tncw, w: &LassoWord) -> bool {
    accepts_from(a, a.initial(), w)
}

pub(crate) fn accepts_from(a: &Tncw, q: StateId, w: &LassoWord) -> bool {
    let mut current = vec![false; a.num_states()];
    current[q] = true;
    for &sym in &w.prefix {
        let mut next = vec![false; a.num_states()];
        for s in a.states().filter(|&s| current[s]) {
            for &(d, _) in a.successors(s, sym) {
                next[d] = true;
            }
        }
        current = next;
    }

    // Product of the automaton with the period positions: node = s * p + i.
    let p = w.period.len();
    let n = a.num_states() * p;
    let mut all = vec![Vec::new(); n];
    let mut safe = vec![Vec::new(); n];
    for s in a.states() {
        for (i, &sym) in w.period.iter().enumerate() {
            for &(d, alpha) in a.successors(s, sym) {
                let v = d * p + (i + 1) % p;
                all[s * p + i].push(v);
                if !alpha {
                    safe[s * p + i].push(v);
                }
            }
        }
    }
    let mut reach = vec![false; n];
    let mut stack: Vec<usize> = a.states().filter(|&s| current[s]).map(|s| s * p).collect();
    for &v in &stack {
        reach[v] = true;
    }
    while let Some(v) = stack.pop() {
        for &u in &all[v] {
            if !reach[u] {
                reach[u] = true;
                stack.push(u);
            }
        }
    }
    graph::tarjan_scc(n, &safe)
        .iter()
        .any(|c| reach[c[0]] && graph::is_nontrivial(c, &safe))
}

/// `count` pseudo-random lassos over `alphabet_size` symbols with prefix length
/// in `0..=max_len` and period length in `1..=max_len`. Equal seeds give equal
/// output.
pub fn random_lassos(alphabet_size: usize, count: usize, max_len: usize, seed: u64) -> Vec<LassoWord> {
    assert!(alphabet_size > 0 && max_len > 0);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let pl = rng.gen_range(0..=max_len);
            let vl = rng.gen_range(1..=max_len);
            let prefix = (0..pl).map(|_| rng.gen_range(0..alphabet_size)).collect();
            let period = (0..vl).map(|_| rng.gen_range(0..alphabet_size)).collect();
            LassoWord { prefix, period }
        })
        .collect()
}
