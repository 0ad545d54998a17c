use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn fixtures() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gfgmin"))
        .args(args)
        .current_dir(fixtures())
        .env_remove("GFGMIN_SEED")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("gfgmin-cli-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn minimize_reports_sizes() {
    let o = run(&["minimize", "fm.hoa"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stderr(&o).trim(), "2 -> 1 states");
    assert!(stdout(&o).starts_with("HOA: v1\nStates: 1\n"));
    let o = run(&["minimize", "tok.hoa"]);
    assert_eq!(stderr(&o).trim(), "6 -> 3 states");
    assert_eq!(stdout(&o), fs::read_to_string(fixtures().join("min3.hoa")).unwrap());
}

#[test]
fn minimize_output_validates() {
    let out = scratch("tri-min.hoa");
    let o = run(&["minimize", "tri.hoa", "-o", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).is_empty());
    let v = run(&["validate", out.to_str().unwrap()]);
    assert_eq!(v.status.code(), Some(0));
    let text = stdout(&v);
    for key in ["safe_deterministic", "alpha_homogeneous", "normal", "total", "all_reachable", "semantically_deterministic", "all_states_gfg", "nice"] {
        assert!(text.contains(&format!("{key}=true")), "{key} in {text}");
    }
    assert!(text.contains("deterministic=false"));
}

#[test]
fn identical_invocations_identical_output() {
    for args in [
        &["canonize", "tok.hoa", "--mode", "max"][..],
        &["canonize", "tri.hoa", "--mode", "hom"],
        &["gen", "--states", "6", "--symbols", "2", "--seed", "3"],
        &["determinize", "bs.hoa"],
    ] {
        let (a, b) = (run(args), run(args));
        assert_eq!(a.status.code(), Some(0), "{args:?}: {}", stderr(&a));
        assert_eq!(a.stdout, b.stdout);
    }
}

#[test]
fn canonize_ignores_numbering() {
    let swapped = scratch("bs-swapped.hoa");
    let text = fs::read_to_string(fixtures().join("bs.hoa")).unwrap();
    let a = gfgmin::hoa::parse_hoa(text.as_bytes(), false).unwrap();
    fs::write(&swapped, gfgmin::hoa::emit_hoa(&a.permute(&[1, 0]))).unwrap();
    for mode in ["max", "hom"] {
        let x = run(&["canonize", "bs.hoa", "--mode", mode]);
        let y = run(&["canonize", swapped.to_str().unwrap(), "--mode", mode]);
        assert_eq!(x.stdout, y.stdout);
    }
}

#[test]
fn equiv_and_iso_exit_codes() {
    assert_eq!(run(&["equiv", "dp1.hoa", "dp2.hoa"]).status.code(), Some(0));
    assert_eq!(run(&["equiv", "tok.hoa", "min3.hoa", "--lassos", "200"]).status.code(), Some(0));
    let o = run(&["iso", "dp1.hoa", "dp2.hoa", "--safe"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "0->0\n1->1\n");
    assert_eq!(run(&["iso", "dp1.hoa", "dp2.hoa"]).status.code(), Some(1));
    assert_eq!(run(&["iso", "bs.hoa", "min3.hoa", "--safe"]).status.code(), Some(1));
}

#[test]
fn equiv_prints_a_distinguishing_lasso() {
    let min = scratch("fm-min.hoa");
    run(&["minimize", "fm.hoa", "-o", min.to_str().unwrap()]);
    assert_eq!(run(&["equiv", "fm.hoa", min.to_str().unwrap()]).status.code(), Some(0));
    let broken = scratch("fm-broken.hoa");
    let text = fs::read_to_string(fixtures().join("fm.hoa")).unwrap();
    // make the a-loop of state 1 rejecting
    let text = text.replace("State: 1\n[0] 1\n", "State: 1\n[0] 1 {0}\n");
    fs::write(&broken, text).unwrap();
    let o = run(&["equiv", "fm.hoa", broken.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("distinguishing lasso: "), "{}", stdout(&o));
}

#[test]
fn parse_errors_exit_3() {
    let bad = scratch("bad.hoa");
    fs::write(&bad, "HOA: v1\nStates: 1\nStart: 0\nsymbols: 1 \"a\"\nAcceptance: 1 Inf(0)\n--BODY--\nState: 0\n[0] 0\n--END--\n").unwrap();
    let o = run(&["info", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("5:1: non-co-Büchi acceptance"), "{}", stderr(&o));
    let partial = scratch("partial.hoa");
    fs::write(&partial, "HOA: v1\nStates: 1\nStart: 0\nsymbols: 2 \"a\" \"b\"\nAcceptance: 1 Fin(0)\n--BODY--\nState: 0\n[0] 0\n--END--\n").unwrap();
    assert_eq!(run(&["info", partial.to_str().unwrap()]).status.code(), Some(3));
    let o = run(&["info", partial.to_str().unwrap(), "--sink"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("states=2"));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&[]).status.code(), Some(2));
    assert_eq!(run(&["minimize"]).status.code(), Some(2));
    assert_eq!(run(&["canonize", "bs.hoa", "--mode", "bogus"]).status.code(), Some(2));
    assert_eq!(run(&["info", "does-not-exist.hoa"]).status.code(), Some(2));
}

#[test]
fn non_safe_deterministic_needs_flag() {
    let f = scratch("nsd.hoa");
    fs::write(&f, "HOA: v1\nStates: 2\nStart: 0\nsymbols: 1 \"a\"\nAcceptance: 1 Fin(0)\n--BODY--\nState: 0\n[0] 0\n[0] 1\nState: 1\n[0] 1\n--END--\n").unwrap();
    let o = run(&["minimize", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(4));
    assert!(stderr(&o).contains("input not safe-deterministic"));
    let o = run(&["minimize", f.to_str().unwrap(), "--determinize"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stderr(&o).contains("2 -> 1 states"));
}

#[test]
fn info_lists_components() {
    let o = run(&["info", "tri.hoa"]);
    assert_eq!(
        stdout(&o),
        "states=3\nsymbols=3\ntransitions=9\nalpha_transitions=5\nsafe_components=2\ncomponent_sizes=1,2\n"
    );
}

#[test]
fn dot_output() {
    let o = run(&["minimize", "fm.hoa", "--dot"]);
    assert!(stdout(&o).starts_with("digraph tncw {"));
}

#[test]
fn seed_from_environment() {
    let base = run(&["gen", "--states", "5", "--symbols", "2", "--seed", "11"]);
    let env = Command::new(env!("CARGO_BIN_EXE_gfgmin"))
        .args(["gen", "--states", "5", "--symbols", "2"])
        .env("GFGMIN_SEED", "11")
        .output()
        .unwrap();
    assert_eq!(base.stdout, env.stdout);
    let other = run(&["gen", "--states", "5", "--symbols", "2"]);
    assert_ne!(base.stdout, other.stdout);
    let det = run(&["gen", "--states", "4", "--symbols", "2", "--seed", "1", "--deterministic"]);
    let a = gfgmin::hoa::parse_hoa(&det.stdout, false).unwrap();
    assert!(a.is_deterministic());
}
