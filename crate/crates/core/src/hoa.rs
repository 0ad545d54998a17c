//! Reading and writing the HOA v1 subset used by the tool.
//!
//! ```text
//! HOA: v1
//! States: 2
//! Start: 0
//! AP: 0
//! symbols: 2 "a" "b"
//! acc-name: co-Buchi
//! Acceptance: 1 Fin(0)
//! properties: trans-labels explicit-labels trans-acc
//! --BODY--
//! State: 0
//! [0] 1 {0}
//! [1] 0 {0}
//! State: 1
//! [0] 1
//! [1] 0 {0}
//! --END--
//! ```
//!
//! Edge labels are symbol indices into the `symbols:` list (`Alphabet:` is
//! accepted as a synonym). Acceptance mark `{0}` puts the edge in α.

use std::fmt::Write as _;

use crate::automaton::{Alphabet, StateId, Tncw, Transition};
use crate::error::{Error, ParseError, ParseErrorKind};

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Header(String),
    Ident(String),
    Int(usize),
    Str(String),
    LBracket,
    RBracket,
    LBrace,
    RBrace,
    LParen,
    RParen,
    Body,
    End,
}

#[derive(Clone, Debug)]
struct Spanned {
    tok: Tok,
    line: usize,
    col: usize,
}

fn err(line: usize, col: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { line, col, kind }
}

fn syntax(line: usize, col: usize, msg: impl Into<String>) -> ParseError {
    err(line, col, ParseErrorKind::Syntax(msg.into()))
}

fn lex(text: &[u8]) -> Result<Vec<Spanned>, ParseError> {
    let mut out = Vec::new();
    let (mut i, mut line, mut col) = (0usize, 1usize, 1usize);
    let advance = |i: &mut usize, line: &mut usize, col: &mut usize, c: u8| {
        *i += 1;
        if c == b'\n' {
            *line += 1;
            *col = 1;
        } else {
            *col += 1;
        }
    };
    while i < text.len() {
        let c = text[i];
        let (l0, c0) = (line, col);
        match c {
            b' ' | b'\t' | b'\r' | b'\n' => advance(&mut i, &mut line, &mut col, c),
            b'/' if text.get(i + 1) == Some(&b'*') => {
                advance(&mut i, &mut line, &mut col, c);
                advance(&mut i, &mut line, &mut col, b'*');
                loop {
                    if i + 1 >= text.len() {
                        return Err(syntax(l0, c0, "unterminated comment"));
                    }
                    if text[i] == b'*' && text[i + 1] == b'/' {
                        advance(&mut i, &mut line, &mut col, b'*');
                        advance(&mut i, &mut line, &mut col, b'/');
                        break;
                    }
                    let ch = text[i];
                    advance(&mut i, &mut line, &mut col, ch);
                }
            }
            b'"' => {
                advance(&mut i, &mut line, &mut col, c);
                let mut s = Vec::new();
                loop {
                    match text.get(i) {
                        None => return Err(syntax(l0, c0, "unterminated string")),
                        Some(b'"') => {
                            advance(&mut i, &mut line, &mut col, b'"');
                            break;
                        }
                        Some(b'\\') => {
                            advance(&mut i, &mut line, &mut col, b'\\');
                            let &e = text
                                .get(i)
                                .ok_or_else(|| syntax(l0, c0, "unterminated string"))?;
                            s.push(e);
                            advance(&mut i, &mut line, &mut col, e);
                        }
                        Some(&ch) => {
                            s.push(ch);
                            advance(&mut i, &mut line, &mut col, ch);
                        }
                    }
                }
                let s = String::from_utf8(s).map_err(|_| syntax(l0, c0, "string is not valid UTF-8"))?;
                out.push(Spanned {
                    tok: Tok::Str(s),
                    line: l0,
                    col: c0,
                });
            }
            b'[' | b']' | b'{' | b'}' | b'(' | b')' => {
                let tok = match c {
                    b'[' => Tok::LBracket,
                    b']' => Tok::RBracket,
                    b'{' => Tok::LBrace,
                    b'}' => Tok::RBrace,
                    b'(' => Tok::LParen,
                    _ => Tok::RParen,
                };
                advance(&mut i, &mut line, &mut col, c);
                out.push(Spanned { tok, line: l0, col: c0 });
            }
            b'0'..=b'9' => {
                let start = i;
                while i < text.len() && text[i].is_ascii_digit() {
                    let ch = text[i];
                    advance(&mut i, &mut line, &mut col, ch);
                }
                let digits = std::str::from_utf8(&text[start..i]).expect("ascii digits");
                let n = digits
                    .parse::<usize>()
                    .map_err(|_| syntax(l0, c0, "integer too large"))?;
                out.push(Spanned {
                    tok: Tok::Int(n),
                    line: l0,
                    col: c0,
                });
            }
            b'-' if text[i..].starts_with(b"--BODY--") || text[i..].starts_with(b"--END--") => {
                let (tok, len) = if text[i..].starts_with(b"--BODY--") {
                    (Tok::Body, 8)
                } else {
                    (Tok::End, 7)
                };
                for _ in 0..len {
                    advance(&mut i, &mut line, &mut col, b'-');
                }
                out.push(Spanned { tok, line: l0, col: c0 });
            }
            c if c.is_ascii_alphabetic() || c == b'_' || c == b'@' || c == b'!' || c == b'&' || c == b'|' => {
                let start = i;
                while i < text.len() && (text[i].is_ascii_alphanumeric() || matches!(text[i], b'_' | b'-' | b'@')) {
                    let ch = text[i];
                    advance(&mut i, &mut line, &mut col, ch);
                }
                if i == start {
                    // single operator character
                    advance(&mut i, &mut line, &mut col, c);
                }
                let word = String::from_utf8_lossy(&text[start..i]).into_owned();
                if text.get(i) == Some(&b':') {
                    advance(&mut i, &mut line, &mut col, b':');
                    out.push(Spanned {
                        tok: Tok::Header(word),
                        line: l0,
                        col: c0,
                    });
                } else {
                    out.push(Spanned {
                        tok: Tok::Ident(word),
                        line: l0,
                        col: c0,
                    });
                }
            }
            _ => return Err(syntax(l0, c0, format!("unexpected character `{}`", c as char))),
        }
    }
    Ok(out)
}

struct Cursor {
    toks: Vec<Spanned>,
    pos: usize,
    eof: (usize, usize),
}

impl Cursor {
    fn peek(&self) -> Option<&Spanned> {
        self.toks.get(self.pos)
    }

    fn here(&self) -> (usize, usize) {
        self.peek().map(|s| (s.line, s.col)).unwrap_or(self.eof)
    }

    fn next(&mut self) -> Option<Spanned> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expect_int(&mut self, what: &str) -> Result<(usize, usize, usize), ParseError> {
        let (l, c) = self.here();
        match self.next() {
            Some(Spanned { tok: Tok::Int(n), line, col }) => Ok((n, line, col)),
            _ => Err(syntax(l, c, format!("expected {what}"))),
        }
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<(), ParseError> {
        let (l, c) = self.here();
        match self.next() {
            Some(s) if s.tok == tok => Ok(()),
            _ => Err(syntax(l, c, format!("expected {what}"))),
        }
    }

    /// Skips tokens until the next header, `--BODY--` or `--END--`.
    fn skip_header_args(&mut self) {
        while let Some(s) = self.peek() {
            if matches!(s.tok, Tok::Header(_) | Tok::Body | Tok::End) {
                break;
            }
            self.pos += 1;
        }
    }

    fn header_args(&mut self) -> Vec<Spanned> {
        let start = self.pos;
        self.skip_header_args();
        self.toks[start..self.pos].to_vec()
    }
}

/// Parses the HOA subset. With `complete_with_sink`, a non-total automaton is
/// completed with a rejecting sink instead of being rejected.
pub fn parse_hoa(text: &[u8], complete_with_sink: bool) -> Result<Tncw, ParseError> {
    let toks = lex(text)?;
    let eof = toks.last().map(|s| (s.line, s.col)).unwrap_or((1, 1));
    let mut cur = Cursor { toks, pos: 0, eof };

    match cur.next() {
        Some(Spanned {
            tok: Tok::Header(h),
            line,
            col,
        }) if h == "HOA" => match cur.next() {
            Some(Spanned { tok: Tok::Ident(v), .. }) if v == "v1" => {}
            _ => return Err(syntax(line, col, "expected `HOA: v1`")),
        },
        _ => return Err(syntax(1, 1, "expected `HOA: v1`")),
    }

    let mut num_states: Option<usize> = None;
    let mut start: Option<(usize, usize, usize)> = None;
    let mut symbols: Option<Vec<String>> = None;
    let mut acceptance_seen = false;

    loop {
        let (l, c) = cur.here();
        let Some(s) = cur.next() else {
            return Err(err(l, c, ParseErrorKind::MissingHeader("--BODY--")));
        };
        match s.tok {
            Tok::Body => break,
            Tok::Header(h) => match h.as_str() {
                "States" => num_states = Some(cur.expect_int("state count")?.0),
                "Start" => {
                    if start.is_some() {
                        return Err(err(
                            s.line,
                            s.col,
                            ParseErrorKind::Unsupported("multiple initial states".into()),
                        ));
                    }
                    let st = cur.expect_int("initial state")?;
                    if let Some(Spanned { tok: Tok::Ident(op), line, col }) = cur.peek().cloned() {
                        if op == "&" {
                            return Err(err(
                                line,
                                col,
                                ParseErrorKind::Unsupported("alternating initial states".into()),
                            ));
                        }
                    }
                    start = Some(st);
                }
                "symbols" | "Alphabet" => {
                    let (count, _, _) = cur.expect_int("symbol count")?;
                    let mut names = Vec::with_capacity(count);
                    for _ in 0..count {
                        let (l, c) = cur.here();
                        match cur.next() {
                            Some(Spanned { tok: Tok::Str(name), .. }) => names.push(name),
                            _ => return Err(syntax(l, c, "expected quoted symbol name")),
                        }
                    }
                    symbols = Some(names);
                }
                "acc-name" => {
                    let args = cur.header_args();
                    match args.first() {
                        Some(Spanned { tok: Tok::Ident(name), .. }) if name == "co-Buchi" => {}
                        Some(a) => {
                            return Err(err(
                                a.line,
                                a.col,
                                ParseErrorKind::NonCoBuchi(format!("acc-name {}", render(&args))),
                            ))
                        }
                        None => return Err(syntax(s.line, s.col, "empty acc-name")),
                    }
                }
                "Acceptance" => {
                    let args = cur.header_args();
                    let expected = [
                        Tok::Int(1),
                        Tok::Ident("Fin".into()),
                        Tok::LParen,
                        Tok::Int(0),
                        Tok::RParen,
                    ];
                    let got: Vec<Tok> = args.iter().map(|a| a.tok.clone()).collect();
                    if got != expected {
                        return Err(err(
                            s.line,
                            s.col,
                            ParseErrorKind::NonCoBuchi(format!("Acceptance: {}", render(&args))),
                        ));
                    }
                    acceptance_seen = true;
                }
                _ => cur.skip_header_args(),
            },
            _ => return Err(syntax(s.line, s.col, "expected a header")),
        }
    }

    let (l, c) = cur.here();
    let num_states = num_states.ok_or_else(|| err(l, c, ParseErrorKind::MissingHeader("States")))?;
    let (initial, sl, sc) = start.ok_or_else(|| err(l, c, ParseErrorKind::MissingHeader("Start")))?;
    let symbols = symbols.ok_or_else(|| err(l, c, ParseErrorKind::MissingHeader("symbols")))?;
    if !acceptance_seen {
        return Err(err(l, c, ParseErrorKind::MissingHeader("Acceptance")));
    }
    let alphabet = Alphabet::new(symbols).map_err(|e| err(1, 1, ParseErrorKind::Invalid(Box::new(e))))?;
    if initial >= num_states {
        return Err(err(
            sl,
            sc,
            ParseErrorKind::Invalid(Box::new(Error::StateOutOfRange {
                state: initial,
                num_states,
            })),
        ));
    }

    let mut transitions: Vec<Transition> = Vec::new();
    let mut positions: Vec<(usize, usize)> = Vec::new();
    let mut current: Option<StateId> = None;
    loop {
        let (l, c) = cur.here();
        let Some(s) = cur.next() else {
            return Err(err(l, c, ParseErrorKind::MissingHeader("--END--")));
        };
        match s.tok {
            Tok::End => break,
            Tok::Header(h) if h == "State" => {
                let (q, ql, qc) = cur.expect_int("state id")?;
                if q >= num_states {
                    return Err(err(
                        ql,
                        qc,
                        ParseErrorKind::Invalid(Box::new(Error::StateOutOfRange { state: q, num_states })),
                    ));
                }
                if matches!(cur.peek().map(|s| &s.tok), Some(Tok::Str(_))) {
                    cur.next();
                }
                if matches!(cur.peek().map(|s| &s.tok), Some(Tok::LBrace)) {
                    let (l, c) = cur.here();
                    return Err(err(
                        l,
                        c,
                        ParseErrorKind::Unsupported("state-based acceptance".into()),
                    ));
                }
                current = Some(q);
            }
            Tok::LBracket => {
                let Some(src) = current else {
                    return Err(syntax(s.line, s.col, "edge before any `State:`"));
                };
                let (symbol, yl, yc) = cur.expect_int("symbol index")?;
                if symbol >= alphabet.len() {
                    return Err(err(
                        yl,
                        yc,
                        ParseErrorKind::Invalid(Box::new(Error::SymbolOutOfRange {
                            symbol,
                            size: alphabet.len(),
                        })),
                    ));
                }
                cur.expect(Tok::RBracket, "`]`")?;
                let (dst, dl, dc) = cur.expect_int("destination state")?;
                if dst >= num_states {
                    return Err(err(
                        dl,
                        dc,
                        ParseErrorKind::Invalid(Box::new(Error::StateOutOfRange { state: dst, num_states })),
                    ));
                }
                let mut in_alpha = false;
                if matches!(cur.peek().map(|s| &s.tok), Some(Tok::LBrace)) {
                    cur.next();
                    loop {
                        let (l, c) = cur.here();
                        match cur.next().map(|s| s.tok) {
                            Some(Tok::RBrace) => break,
                            Some(Tok::Int(0)) => in_alpha = true,
                            Some(Tok::Int(k)) => {
                                return Err(err(
                                    l,
                                    c,
                                    ParseErrorKind::NonCoBuchi(format!("acceptance set {k}")),
                                ))
                            }
                            _ => return Err(syntax(l, c, "expected `}`")),
                        }
                    }
                }
                if let Some(i) = transitions
                    .iter()
                    .position(|t| t.src == src && t.symbol == symbol && t.dst == dst)
                {
                    let _ = positions[i];
                    return Err(err(
                        s.line,
                        s.col,
                        ParseErrorKind::Invalid(Box::new(Error::DuplicateTransition { src, symbol, dst })),
                    ));
                }
                transitions.push(Transition {
                    src,
                    symbol,
                    dst,
                    in_alpha,
                });
                positions.push((s.line, s.col));
            }
            Tok::Int(_) => {
                return Err(err(
                    s.line,
                    s.col,
                    ParseErrorKind::Unsupported("implicit edge labels".into()),
                ))
            }
            _ => return Err(syntax(s.line, s.col, "expected `State:`, an edge or `--END--`")),
        }
    }
    if let Some(s) = cur.peek() {
        return Err(syntax(s.line, s.col, "trailing input after `--END--`"));
    }

    let a = Tncw::new_partial(alphabet, num_states, initial, transitions)
        .map_err(|e| err(1, 1, ParseErrorKind::Invalid(Box::new(e))))?;
    if complete_with_sink {
        return Ok(crate::automaton::ensure_total(&a));
    }
    if !a.is_total() {
        let (state, symbol) = a
            .states()
            .flat_map(|q| a.symbols().map(move |s| (q, s)))
            .find(|&(q, s)| a.successors(q, s).is_empty())
            .expect("non-total automaton has a missing pair");
        return Err(err(
            eof.0,
            eof.1,
            ParseErrorKind::Invalid(Box::new(Error::NotTotal { state, symbol })),
        ));
    }
    Ok(a)
}

fn render(args: &[Spanned]) -> String {
    args.iter()
        .map(|a| match &a.tok {
            Tok::Header(h) => format!("{h}:"),
            Tok::Ident(s) => s.clone(),
            Tok::Int(n) => n.to_string(),
            Tok::Str(s) => format!("{s:?}"),
            Tok::LBracket => "[".into(),
            Tok::RBracket => "]".into(),
            Tok::LBrace => "{".into(),
            Tok::RBrace => "}".into(),
            Tok::LParen => "(".into(),
            Tok::RParen => ")".into(),
            Tok::Body => "--BODY--".into(),
            Tok::End => "--END--".into(),
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for ch in s.chars() {
        if ch == '"' || ch == '\\' {
            out.push('\\');
        }
        out.push(ch);
    }
    out.push('"');
    out
}

/// Canonical serialization: states in id order, edges by (symbol, dst).
pub fn emit_hoa(a: &Tncw) -> String {
    let mut out = String::new();
    out.push_str("HOA: v1\n");
    let _ = writeln!(out, "States: {}", a.num_states());
    let _ = writeln!(out, "Start: {}", a.initial());
    out.push_str("AP: 0\n");
    let _ = write!(out, "symbols: {}", a.num_symbols());
    for s in a.alphabet().symbols() {
        let _ = write!(out, " {}", quote(s));
    }
    out.push('\n');
    out.push_str("acc-name: co-Buchi\n");
    out.push_str("Acceptance: 1 Fin(0)\n");
    out.push_str("properties: trans-labels explicit-labels trans-acc\n");
    out.push_str("--BODY--\n");
    for q in a.states() {
        let _ = writeln!(out, "State: {q}");
        for sym in a.symbols() {
            for &(dst, alpha) in a.successors(q, sym) {
                if alpha {
                    let _ = writeln!(out, "[{sym}] {dst} {{0}}");
                } else {
                    let _ = writeln!(out, "[{sym}] {dst}");
                }
            }
        }
    }
    out.push_str("--END--\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    const ONE_STATE: &str = "HOA: v1
States: 1
Start: 0
AP: 0
symbols: 2 \"a\" \"b\"
acc-name: co-Buchi
Acceptance: 1 Fin(0)
properties: trans-labels explicit-labels trans-acc
--BODY--
State: 0
[0] 0
[1] 0 {0}
--END--
";

    #[test]
    fn one_state_golden() {
        let a = parse_hoa(ONE_STATE.as_bytes(), false).unwrap();
        assert_eq!(a.num_states(), 1);
        assert_eq!(a.num_transitions(), 2);
        assert_eq!(a.num_alpha_transitions(), 1);
        assert_eq!(emit_hoa(&a), ONE_STATE);
    }

    #[test]
    fn fm_round_trip() {
        let fm = fixtures::fm();
        let text = emit_hoa(&fm);
        let back = parse_hoa(text.as_bytes(), false).unwrap();
        assert_eq!(back.num_states(), 2);
        assert_eq!(back.num_transitions(), 4);
        assert_eq!(back.num_alpha_transitions(), 3);
        assert_eq!(back, fm);
    }

    #[test]
    fn crlf_and_comments_accepted() {
        let text = ONE_STATE.replace('\n', "\r\n").replace("--BODY--", "/* body */ --BODY--");
        assert_eq!(parse_hoa(text.as_bytes(), false).unwrap(), parse_hoa(ONE_STATE.as_bytes(), false).unwrap());
    }

    #[test]
    fn rejects_buchi() {
        let text = ONE_STATE.replace("Acceptance: 1 Fin(0)", "Acceptance: 1 Inf(0)");
        let e = parse_hoa(text.as_bytes(), false).unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::NonCoBuchi(_)), "{e}");
        assert_eq!(e.line, 7);
        let text = ONE_STATE.replace("acc-name: co-Buchi", "acc-name: Buchi");
        let e = parse_hoa(text.as_bytes(), false).unwrap_err();
        assert!(e.to_string().contains("non-co-Büchi acceptance"));
    }

    #[test]
    fn rejects_duplicates() {
        let text = ONE_STATE.replace("[1] 0 {0}", "[1] 0 {0}\n[1] 0");
        let e = parse_hoa(text.as_bytes(), false).unwrap_err();
        assert!(matches!(
            e.kind,
            ParseErrorKind::Invalid(ref b) if matches!(**b, Error::DuplicateTransition { src: 0, symbol: 1, dst: 0 })
        ));
        assert_eq!((e.line, e.col), (13, 1));
    }

    #[test]
    fn non_total_needs_sink_flag() {
        let text = ONE_STATE.replace("[1] 0 {0}\n", "");
        let e = parse_hoa(text.as_bytes(), false).unwrap_err();
        assert!(matches!(
            e.kind,
            ParseErrorKind::Invalid(ref b) if matches!(**b, Error::NotTotal { state: 0, symbol: 1 })
        ));
        let a = parse_hoa(text.as_bytes(), true).unwrap();
        assert_eq!(a.num_states(), 2);
        assert_eq!(a.successors(0, 1), &[(1, true)]);
    }

    #[test]
    fn syntax_error_position() {
        let text = ONE_STATE.replace("[0] 0\n", "[0 0\n");
        let e = parse_hoa(text.as_bytes(), false).unwrap_err();
        assert_eq!((e.line, e.col), (11, 4));
    }

    #[test]
    fn structurally_equal_emit_identically() {
        let a = fixtures::bs();
        let mut ts: Vec<Transition> = a.transitions().collect();
        ts.reverse();
        let b = a.with_transitions(ts).unwrap();
        assert_eq!(emit_hoa(&a), emit_hoa(&b));
    }
}
