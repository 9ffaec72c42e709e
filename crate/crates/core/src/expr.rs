//! Graph expressions: a small grammar for naming unlabeled graphs.
//!
//! ```text
//! set    := expr (',' expr)*
//! expr   := join ('+' join)*            disjoint union
//! join   := factor ('v' factor)*        join
//! factor := INT '*'? factor             INT disjoint copies
//!         | 'K' INT | 'C' INT | 'P' INT | 'diamond'
//!         | 'co(' expr ')'              complement
//!         | 'g6:' GRAPH6
//!         | '(' expr ')'
//! ```
//!
//! Join binds tighter than union, so `K1 v P3 + K1` is `(K1 v P3) + K1`.
//! [`describe`] produces an expression in this grammar for any graph.

use std::collections::BTreeMap;

use crate::canon::is_isomorphic;
use crate::error::{Error, Result};
use crate::graph::{bits, SmallGraph};
use crate::graph6::{from_graph6, to_graph6};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(usize),
    Atom(char, usize),
    Diamond,
    Graph6(String),
    Co,
    Star,
    Plus,
    Join,
    Comma,
    LParen,
    RParen,
}

fn tokenize(text: &str) -> Result<Vec<Tok>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    let read_int = |i: &mut usize| -> Option<usize> {
        let start = *i;
        while *i < chars.len() && chars[*i].is_ascii_digit() {
            *i += 1;
        }
        if start == *i {
            None
        } else {
            chars[start..*i].iter().collect::<String>().parse().ok()
        }
    };
    while i < chars.len() {
        let c = chars[i];
        match c {
            c if c.is_whitespace() => i += 1,
            '0'..='9' => out.push(Tok::Int(read_int(&mut i).expect("digit present"))),
            'K' | 'C' | 'P' => {
                i += 1;
                let n = read_int(&mut i).ok_or_else(|| Error::parse(format!("{c} must be followed by an order")))?;
                out.push(Tok::Atom(c, n));
            }
            '*' => {
                out.push(Tok::Star);
                i += 1;
            }
            '+' => {
                out.push(Tok::Plus);
                i += 1;
            }
            ',' => {
                out.push(Tok::Comma);
                i += 1;
            }
            '(' => {
                out.push(Tok::LParen);
                i += 1;
            }
            ')' => {
                out.push(Tok::RParen);
                i += 1;
            }
            _ => {
                let rest: String = chars[i..].iter().collect();
                if rest.starts_with("diamond") {
                    out.push(Tok::Diamond);
                    i += "diamond".len();
                } else if rest.starts_with("co(") {
                    out.push(Tok::Co);
                    out.push(Tok::LParen);
                    i += 3;
                } else if rest.starts_with("g6:") {
                    i += 3;
                    let start = i;
                    while i < chars.len() && (63..=126).contains(&(chars[i] as u32)) {
                        i += 1;
                    }
                    out.push(Tok::Graph6(chars[start..i].iter().collect()));
                } else if c == 'v' {
                    out.push(Tok::Join);
                    i += 1;
                } else {
                    return Err(Error::parse(format!("unexpected {c:?} in graph expression")));
                }
            }
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expect(&mut self, want: Tok) -> Result<()> {
        match self.next() {
            Some(t) if t == want => Ok(()),
            other => Err(Error::parse(format!("expected {want:?}, found {other:?}"))),
        }
    }

    fn expr(&mut self) -> Result<SmallGraph> {
        let mut g = self.join()?;
        while self.peek() == Some(&Tok::Plus) {
            self.pos += 1;
            let h = self.join()?;
            g = g.disjoint_union(&h)?;
        }
        Ok(g)
    }

    fn join(&mut self) -> Result<SmallGraph> {
        let mut g = self.factor()?;
        while self.peek() == Some(&Tok::Join) {
            self.pos += 1;
            let h = self.factor()?;
            g = g.join(&h)?;
        }
        Ok(g)
    }

    fn factor(&mut self) -> Result<SmallGraph> {
        match self.next() {
            Some(Tok::Int(a)) => {
                if self.peek() == Some(&Tok::Star) {
                    self.pos += 1;
                }
                if a == 0 {
                    return Err(Error::parse("multiplier must be positive"));
                }
                let g = self.factor()?;
                if a * g.order() > crate::graph::MAX_VERTICES {
                    return Err(Error::resource(format!(
                        "{a} copies of a {}-vertex graph exceed the vertex cap",
                        g.order()
                    )));
                }
                g.copies(a)
            }
            Some(Tok::Atom(kind, n)) => {
                if n == 0 {
                    return Err(Error::parse(format!("{kind}0 is not allowed")));
                }
                match kind {
                    'K' => SmallGraph::complete(n),
                    'P' => SmallGraph::path(n),
                    _ => SmallGraph::cycle(n).map_err(|e| Error::parse(e.to_string())),
                }
            }
            Some(Tok::Diamond) => {
                let mut g = SmallGraph::complete(4)?;
                g.remove_edge(2, 3);
                Ok(g)
            }
            Some(Tok::Graph6(s)) => from_graph6(&s),
            Some(Tok::Co) => {
                self.expect(Tok::LParen)?;
                let g = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(g.complement())
            }
            Some(Tok::LParen) => {
                let g = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(g)
            }
            other => Err(Error::parse(format!("unexpected token {other:?}"))),
        }
    }
}

/// Parses a single graph expression such as `K1 v (2*K2)`.
pub fn build_named(spec: &str) -> Result<SmallGraph> {
    let mut p = Parser {
        toks: tokenize(spec)?,
        pos: 0,
    };
    if p.toks.is_empty() {
        return Err(Error::parse("empty graph expression"));
    }
    let g = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(Error::parse(format!("trailing input in {spec:?}")));
    }
    Ok(g)
}

/// Parses a comma-separated list of graph expressions.
pub fn parse_graph_list(spec: &str) -> Result<Vec<SmallGraph>> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in spec.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(build_named(&spec[start..i])?);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(build_named(&spec[start..])?);
    Ok(out)
}

fn diamond() -> SmallGraph {
    build_named("diamond").expect("static expression")
}

fn is_path(g: &SmallGraph) -> bool {
    g.is_connected() && g.max_degree() <= 2 && g.edge_count() + 1 == g.order()
}

fn is_cycle(g: &SmallGraph) -> bool {
    g.order() >= 3 && g.is_connected() && g.is_regular_of(2)
}

fn wrap(s: String) -> String {
    if s.contains(' ') {
        format!("({s})")
    } else {
        s
    }
}

/// A parseable expression naming `g` up to isomorphism, preferring the
/// conventional names (`2K2`, `P4`, `K1 v (K2 + K1)`, `diamond`).
pub fn describe(g: &SmallGraph) -> String {
    if g.order() == 0 {
        return "g6:?".into();
    }
    let comps = g.components();
    if comps.len() > 1 {
        return describe_union(g, &comps, " + ", false);
    }
    describe_connected(g, true)
}

// Groups isomorphic parts and writes them largest first.
fn describe_union(g: &SmallGraph, parts: &[u32], sep: &str, complemented: bool) -> String {
    let mut groups: BTreeMap<(std::cmp::Reverse<usize>, std::cmp::Reverse<usize>, String), usize> = BTreeMap::new();
    for &mask in parts {
        let verts: Vec<usize> = bits(mask).collect();
        let mut sub = g.induced(&verts);
        if complemented {
            sub = sub.complement();
        }
        let name = describe_connected(&sub, true);
        *groups
            .entry((
                std::cmp::Reverse(sub.order()),
                std::cmp::Reverse(sub.edge_count()),
                name,
            ))
            .or_default() += 1;
    }
    let mut items: Vec<String> = groups
        .into_iter()
        .map(|((_, _, name), mult)| {
            if complemented && name == "K1" && mult > 1 {
                format!("K{mult}")
            } else if complemented {
                vec![wrap(name); mult].join(sep)
            } else if mult == 1 {
                name
            } else if name.contains(' ') {
                format!("{mult}({name})")
            } else {
                format!("{mult}{name}")
            }
        })
        .collect();
    if complemented {
        // Smaller parts first reads naturally for joins: `K1 v (K2 + K1)`.
        items.reverse();
    }
    items.join(sep)
}

fn describe_connected(g: &SmallGraph, allow_co: bool) -> String {
    let n = g.order();
    if n == 1 {
        return "K1".into();
    }
    if g.edge_count() == n * (n - 1) / 2 {
        return format!("K{n}");
    }
    if is_cycle(g) {
        return format!("C{n}");
    }
    if is_path(g) {
        return format!("P{n}");
    }
    if n == 4 && is_isomorphic(g, &diamond()) {
        return "diamond".into();
    }
    if !g.is_connected() {
        return describe(g);
    }
    let co = g.complement();
    let co_comps = co.components();
    if co_comps.len() > 1 {
        // g is the join of the parts spanned by the complement's components.
        return describe_union(&co, &co_comps, " v ", true);
    }
    if allow_co && co.is_connected() {
        let inner = describe_connected(&co, false);
        if !inner.starts_with("g6:") {
            return format!("co({inner})");
        }
    }
    format!("g6:{}", to_graph6(g))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_examples() {
        let g = build_named("2*K2").unwrap();
        assert_eq!(g.degree_sequence().terms(), vec![1, 1, 1, 1]);
        let g = build_named("K1 v (2*K2)").unwrap();
        assert_eq!(g.degree_sequence().terms(), vec![4, 2, 2, 2, 2]);
        let g = build_named("diamond").unwrap();
        assert_eq!(g.degree_sequence().terms(), vec![3, 3, 2, 2]);
    }

    #[test]
    fn precedence_and_multipliers() {
        let a = build_named("K1 v P3 + K1").unwrap();
        assert_eq!(a.order(), 5);
        assert_eq!(a.isolated_count(), 1);
        assert_eq!(build_named("2K2").unwrap(), build_named("2*K2").unwrap());
        let b = build_named("2(K2 + K1)").unwrap();
        assert_eq!(b.degree_sequence().terms(), vec![1, 1, 1, 1, 0, 0]);
        let c = build_named("co(K2 + 2K1)").unwrap();
        assert!(is_isomorphic(&c, &diamond()));
        assert_eq!(build_named("g6:Dhc").unwrap(), SmallGraph::cycle(5).unwrap());
    }

    #[test]
    fn errors() {
        assert!(matches!(build_named("K"), Err(Error::Parse(_))));
        assert!(matches!(build_named("C2"), Err(Error::Parse(_))));
        assert!(matches!(build_named("K2 +"), Err(Error::Parse(_))));
        assert!(matches!(build_named("(K2"), Err(Error::Parse(_))));
        assert!(matches!(build_named("K2 K3"), Err(Error::Parse(_))));
        assert!(matches!(build_named("0K2"), Err(Error::Parse(_))));
        assert!(matches!(build_named("16*K2"), Err(Error::Resource(_))));
        assert!(matches!(build_named("K20 + K12"), Err(Error::Resource(_))));
        assert!(matches!(build_named(""), Err(Error::Parse(_))));
    }

    #[test]
    fn lists() {
        let l = parse_graph_list("2*K2, C4").unwrap();
        assert_eq!(l.len(), 2);
        let l = parse_graph_list("K1 v (K2 + K1), co(P4), P3").unwrap();
        assert_eq!(l.len(), 3);
    }

    #[test]
    fn names() {
        for (expr, want) in [
            ("2*K2", "2K2"),
            ("K2 + 2K1", "K2 + 2K1"),
            ("P4", "P4"),
            ("C5", "C5"),
            ("K4", "K4"),
            ("diamond", "diamond"),
            ("K1 v (K2 + K1)", "K1 v (K2 + K1)"),
            ("K1 v 3K1", "K1 v 3K1"),
            ("3K1", "3K1"),
            ("K2 v 2K1", "diamond"),
        ] {
            assert_eq!(describe(&build_named(expr).unwrap()), want, "{expr}");
        }
    }

    #[test]
    fn names_round_trip_on_small_graphs() {
        for n in 1..=6usize {
            let pairs = n * (n - 1) / 2;
            for mask in 0u32..(1 << pairs) {
                let mut g = SmallGraph::empty(n).unwrap();
                let mut k = 0;
                for u in 0..n {
                    for v in u + 1..n {
                        if mask >> k & 1 == 1 {
                            g.add_edge(u, v);
                        }
                        k += 1;
                    }
                }
                let name = describe(&g);
                let back = build_named(&name).unwrap_or_else(|e| panic!("{name}: {e}"));
                assert!(is_isomorphic(&g, &back), "{name}");
            }
        }
    }
}
