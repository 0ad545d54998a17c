use std::collections::HashMap;
use std::path::PathBuf;

use gfgmin::fixtures;
use gfgmin::hoa::{emit_hoa, parse_hoa};
use gfgmin::oracle::{accepts, random_lassos, safe_contains, state_equiv, LassoWord};

fn unroll(w: &LassoWord, n: usize) -> Vec<usize> {
    (0..n).map(|i| w.at(i)).collect()
}

#[test]
fn shipped_files_match_builders() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures");
    for (name, a) in fixtures::all() {
        let text = std::fs::read_to_string(dir.join(format!("{name}.hoa"))).unwrap();
        assert_eq!(text, emit_hoa(&a), "{name}.hoa is stale");
        assert_eq!(parse_hoa(text.as_bytes(), false).unwrap(), a);
    }
}

#[test]
fn fm_accepts_eventually_a() {
    let fm = fixtures::fm();
    for w in random_lassos(2, 400, 6, 1) {
        assert_eq!(accepts(&fm, &w), w.period.iter().all(|&s| s == 0), "{}", w.display(fm.alphabet()));
    }
}

#[test]
fn dp_accept_eventually_alternating() {
    let (d1, d2) = (fixtures::dp1(), fixtures::dp2());
    for w in random_lassos(2, 400, 6, 2) {
        let p = &w.period;
        let alternating = (0..p.len()).all(|i| p[i] != p[(i + 1) % p.len()]);
        assert_eq!(accepts(&d1, &w), alternating);
        assert_eq!(accepts(&d2, &w), alternating);
    }
}

// bitset of alive tokens on vertices 1..=3; returns the successor and whether
// the last token was killed
fn token_step(set: u8, symbol: usize) -> (u8, bool) {
    let perm: [u8; 3] = match symbol {
        0 => [2, 3, 1],
        1 => [2, 1, 3],
        _ => [1, 2, 3],
    };
    if symbol == 2 {
        let rest = set & 0b110;
        return if rest == 0 { (0b110, true) } else { (rest, false) };
    }
    let mut out = 0;
    for (v, &to) in perm.iter().enumerate() {
        if set & (1 << v) != 0 {
            out |= 1 << (to - 1);
        }
    }
    (out, false)
}

fn token_accepts(w: &LassoWord) -> bool {
    let mut set = 0b001u8;
    for &s in &w.prefix {
        set = token_step(set, s).0;
    }
    let mut seen = HashMap::new();
    let mut restarts = Vec::new();
    loop {
        if let Some(&i) = seen.get(&set) {
            return !restarts[i..].iter().any(|&r| r);
        }
        seen.insert(set, restarts.len());
        let mut any = false;
        for &s in &w.period {
            let (next, restart) = token_step(set, s);
            set = next;
            any |= restart;
        }
        restarts.push(any);
    }
}

#[test]
fn tok_and_min3_match_token_game() {
    let (tok, min3) = (fixtures::tok(), fixtures::min3());
    let mut accepted = 0;
    for w in random_lassos(3, 600, 7, 3) {
        let expected = token_accepts(&w);
        accepted += expected as usize;
        assert_eq!(accepts(&tok, &w), expected, "{:?}", unroll(&w, 12));
        assert_eq!(accepts(&min3, &w), expected, "{:?}", unroll(&w, 12));
    }
    assert!(accepted > 0 && accepted < 600);
}

#[test]
fn tri_states_equivalent_with_distinct_safe_languages() {
    let tri = fixtures::tri();
    for p in 0..3 {
        for q in 0..3 {
            assert!(state_equiv(&tri, p, q));
            if p != q {
                let both = safe_contains(&tri, p, q).unwrap() && safe_contains(&tri, q, p).unwrap();
                assert!(!both, "{p} and {q} have equal safe languages");
            }
        }
    }
}
