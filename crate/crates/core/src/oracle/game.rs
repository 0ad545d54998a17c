use std::collections::{BTreeMap, VecDeque};

use super::determinize::breakpoint_determinize;
use super::lasso::LassoWord;
use crate::automaton::{StateId, Symbol, Tncw};

/// A max-parity game. Player 0 (Even) wins a play iff the largest priority
/// seen infinitely often is even. Every vertex needs a successor.
#[derive(Clone, Debug, Default)]
pub struct ParityGame {
    pub owner: Vec<u8>,
    pub priority: Vec<u32>,
    pub succ: Vec<Vec<usize>>,
}

/// Winning regions and positional winning strategies. `strategy[v]` is a
/// successor of `v` whenever `v` is won by its owner.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParitySolution {
    pub winner: Vec<u8>,
    pub strategy: Vec<Option<usize>>,
}

impl ParityGame {
    pub fn add_vertex(&mut self, owner: u8, priority: u32) -> usize {
        self.owner.push(owner);
        self.priority.push(priority);
        self.succ.push(Vec::new());
        self.owner.len() - 1
    }

    pub fn add_edge(&mut self, from: usize, to: usize) {
        self.succ[from].push(to);
    }

    pub fn len(&self) -> usize {
        self.owner.len()
    }

    pub fn is_empty(&self) -> bool {
        self.owner.is_empty()
    }
}

struct Solver<'g> {
    g: &'g ParityGame,
    pred: Vec<Vec<usize>>,
    strategy: Vec<Option<usize>>,
}

impl Solver<'_> {
    /// Attractor of `target` for `player` inside the subgame `alive`. Moves
    /// of `player` vertices that are pulled in are recorded in the strategy.
    fn attractor(&mut self, alive: &[bool], target: &[usize], player: u8) -> Vec<bool> {
        let n = self.g.len();
        let mut inside = vec![false; n];
        let mut count: Vec<usize> = vec![0; n];
        let mut queue = VecDeque::new();
        for &v in target {
            if !inside[v] {
                inside[v] = true;
                queue.push_back(v);
            }
        }
        while let Some(v) = queue.pop_front() {
            for &u in &self.pred[v] {
                if !alive[u] || inside[u] {
                    continue;
                }
                if self.g.owner[u] == player {
                    inside[u] = true;
                    self.strategy[u] = Some(v);
                    queue.push_back(u);
                } else {
                    if count[u] == 0 {
                        count[u] = self.g.succ[u].iter().filter(|&&w| alive[w]).count();
                    }
                    count[u] -= 1;
                    if count[u] == 0 {
                        inside[u] = true;
                        queue.push_back(u);
                    }
                }
            }
        }
        inside
    }

    /// Zielonka's recursive algorithm on the subgame `alive`; returns the
    /// winner of every alive vertex.
    fn solve(&mut self, alive: &[bool]) -> Vec<Option<u8>> {
        let n = self.g.len();
        let verts: Vec<usize> = (0..n).filter(|&v| alive[v]).collect();
        let mut win: Vec<Option<u8>> = vec![None; n];
        let Some(max) = verts.iter().map(|&v| self.g.priority[v]).max() else {
            return win;
        };
        let player = (max % 2) as u8;
        let top: Vec<usize> = verts.iter().copied().filter(|&v| self.g.priority[v] == max).collect();
        let attr = self.attractor(alive, &top, player);
        let rest: Vec<bool> = (0..n).map(|v| alive[v] && !attr[v]).collect();
        let sub = self.solve(&rest);
        let opp_region: Vec<usize> = verts.iter().copied().filter(|&v| sub[v] == Some(1 - player)).collect();
        if opp_region.is_empty() {
            for &v in &verts {
                win[v] = Some(player);
                if self.g.priority[v] == max && self.g.owner[v] == player {
                    let stay = self.g.succ[v].iter().copied().find(|&w| alive[w]);
                    self.strategy[v] = stay;
                }
            }
            return win;
        }
        let opp_attr = self.attractor(alive, &opp_region, 1 - player);
        let rest2: Vec<bool> = (0..n).map(|v| alive[v] && !opp_attr[v]).collect();
        let sub2 = self.solve(&rest2);
        for &v in &verts {
            win[v] = if opp_attr[v] { Some(1 - player) } else { sub2[v] };
        }
        win
    }
}

/// Solves a parity game with Zielonka's algorithm.
pub fn solve_parity(g: &ParityGame) -> ParitySolution {
    let n = g.len();
    let mut pred = vec![Vec::new(); n];
    for (v, out) in g.succ.iter().enumerate() {
        assert!(!out.is_empty(), "vertex {v} has no successor");
        for &w in out {
            pred[w].push(v);
        }
    }
    let mut solver = Solver {
        g,
        pred,
        strategy: vec![None; n],
    };
    let win = solver.solve(&vec![true; n]);
    let winner: Vec<u8> = win.into_iter().map(|w| w.expect("every vertex is decided")).collect();
    let strategy = (0..n)
        .map(|v| {
            if winner[v] == g.owner[v] {
                solver.strategy[v]
            } else {
                None
            }
        })
        .collect();
    ParitySolution { winner, strategy }
}

/// A positional strategy resolving the nondeterminism of an automaton, played
/// on the product with its breakpoint determinization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Strategy {
    pub det: Tncw,
    /// `(state, det state, symbol) -> chosen successor state`.
    pub moves: BTreeMap<(StateId, StateId, Symbol), StateId>,
}

impl Strategy {
    /// The run chosen by the strategy on `w`, as the sequence of states
    /// up to and including the first repetition of a (state, det state, lasso
    /// position) triple. `None` if the strategy is undefined along the way.
    pub fn run(&self, a: &Tncw, w: &LassoWord) -> Option<(Vec<(StateId, bool)>, usize)> {
        let (mut p, mut d) = (a.initial(), self.det.initial());
        let mut steps: Vec<(StateId, bool)> = Vec::new();
        let mut seen: BTreeMap<(StateId, StateId, usize), usize> = BTreeMap::new();
        let mut i = 0usize;
        loop {
            if i >= w.prefix.len() {
                let pos = (i - w.prefix.len()) % w.period.len();
                if let Some(&start) = seen.get(&(p, d, pos)) {
                    return Some((steps, start));
                }
                seen.insert((p, d, pos), i);
            }
            let sym = w.at(i);
            let &p2 = self.moves.get(&(p, d, sym))?;
            let alpha = a.transition_flag(p, sym, p2)?;
            steps.push((p2, alpha));
            p = p2;
            d = self.det.successors(d, sym)[0].0;
            i += 1;
        }
    }

    /// Whether the run chosen by the strategy on `w` is accepting.
    pub fn accepts(&self, a: &Tncw, w: &LassoWord) -> bool {
        match self.run(a, w) {
            Some((steps, start)) => steps[start..].iter().all(|&(_, alpha)| !alpha),
            None => false,
        }
    }
}

/// Decides whether `a` is good-for-games.
///
/// The letter game is played on `Q × Q_D` for `D` the breakpoint
/// determinization of `a`: the adversary picks a letter, the protagonist a
/// transition. The protagonist wins iff α of `a` is seen finitely often or α
/// of `D` infinitely often. Returns a winning strategy when `a` is GFG.
pub fn gfg_check(a: &Tncw) -> (bool, Option<Strategy>) {
    let det = breakpoint_determinize(a);
    let (n, m, k) = (a.num_states(), det.num_states(), a.num_symbols());
    let mut g = ParityGame::default();
    // Vertex layout: adversary (p, d) at p*m+d; then protagonist (p, d, σ).
    for _ in 0..n * m {
        g.add_vertex(1, 0);
    }
    for _ in 0..n * m * k {
        g.add_vertex(0, 0);
    }
    let prot = |p: usize, d: usize, s: usize| n * m + (p * m + d) * k + s;
    // Edge vertices, remembered to decode the strategy.
    let mut edge_target: Vec<(usize, StateId)> = Vec::new();
    let base = g.len();
    for p in 0..n {
        for d in 0..m {
            for s in 0..k {
                g.add_edge(p * m + d, prot(p, d, s));
                let (d2, alpha_d) = det.successors(d, s)[0];
                for &(p2, alpha_a) in a.successors(p, s) {
                    let priority = if alpha_d {
                        2
                    } else if alpha_a {
                        1
                    } else {
                        0
                    };
                    let e = g.add_vertex(0, priority);
                    edge_target.push((prot(p, d, s), p2));
                    g.add_edge(prot(p, d, s), e);
                    g.add_edge(e, p2 * m + d2);
                }
            }
        }
    }
    let sol = solve_parity(&g);
    let start = a.initial() * m + det.initial();
    if sol.winner[start] != 0 {
        return (false, None);
    }
    let mut moves = BTreeMap::new();
    for p in 0..n {
        for d in 0..m {
            for s in 0..k {
                let v = prot(p, d, s);
                if sol.winner[v] == 0 {
                    let e = sol.strategy[v].expect("winning protagonist vertex has a move");
                    moves.insert((p, d, s), edge_target[e - base].1);
                }
            }
        }
    }
    (true, Some(Strategy { det, moves }))
}
