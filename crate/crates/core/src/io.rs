//! Text formats for graphs and drawings.
//!
//! `regular-graph v1`:
//! ```text
//! regular-graph v1
//! n d
//! u v            (nd/2 lines, u < v, sorted)
//! ```
//!
//! `drawing v1`:
//! ```text
//! drawing v1
//! n m
//! xn xd yn yd    (n lines: vertex i at (xn/xd, yn/yd), lowest terms)
//! u v            (m lines)
//! ```
//!
//! Lines starting with `#` are comments and are skipped; writers use one to
//! record how a drawing was built, e.g. `# construction star 10 7`.

use num_bigint::BigInt;
use num_traits::Signed;

use crate::constructions::GcdCase;
use crate::error::{Error, Result};
use crate::geometry::{GeometricDrawing, Point};
use crate::graph::{Edge, RegularGraph};

pub const GRAPH_HEADER: &str = "regular-graph v1";
pub const DRAWING_HEADER: &str = "drawing v1";

/// How a drawing file was produced; written as a trailing comment.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConstructionTag {
    Star { n: usize, d: usize },
    StarLike { n: usize, d: usize, case: GcdCase },
}

impl std::fmt::Display for ConstructionTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ConstructionTag::Star { n, d } => write!(f, "# construction star {n} {d}"),
            ConstructionTag::StarLike { n, d, case } => {
                write!(f, "# construction starlike {n} {d} case {case}")
            }
        }
    }
}

fn err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

/// Non-comment lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim_end_matches('\r').trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn fields<T: std::str::FromStr>(line: usize, text: &str, count: usize) -> Result<Vec<T>> {
    let out: Vec<T> = text
        .split_whitespace()
        .map(|t| {
            t.parse()
                .map_err(|_| err(line, format!("bad integer {t:?}")))
        })
        .collect::<Result<_>>()?;
    if out.len() != count {
        return Err(err(
            line,
            format!("expected {count} fields, found {}", out.len()),
        ));
    }
    Ok(out)
}

fn expect_header<'a>(
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
    header: &str,
) -> Result<()> {
    match lines.next() {
        Some((_, l)) if l == header => Ok(()),
        Some((no, l)) => Err(err(no, format!("expected `{header}`, found {l:?}"))),
        None => Err(err(1, format!("empty input, expected `{header}`"))),
    }
}

fn with_line(line: usize, e: Error) -> Error {
    match e {
        Error::Parse { .. } => e,
        other => err(line, other.to_string()),
    }
}

pub fn write_graph(graph: &RegularGraph) -> String {
    let mut out = format!("{GRAPH_HEADER}\n{} {}\n", graph.n(), graph.d());
    for (u, v) in graph.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn parse_graph(text: &str) -> Result<RegularGraph> {
    let mut lines = content_lines(text);
    expect_header(&mut lines, GRAPH_HEADER)?;
    let (no, nd) = lines.next().ok_or_else(|| err(2, "missing `n d` line"))?;
    let nd: Vec<usize> = fields(no, nd, 2)?;
    let (n, d) = (nd[0], nd[1]);
    let mut edges: Vec<Edge> = Vec::new();
    let mut last_line = no;
    for (no, l) in lines {
        let uv: Vec<usize> = fields(no, l, 2)?;
        let e = (uv[0], uv[1]);
        if e.0 >= e.1 || e.1 >= n {
            return Err(err(
                no,
                format!("edge {} {} must satisfy u < v < {n}", e.0, e.1),
            ));
        }
        if edges.last().is_some_and(|&p| p >= e) {
            return Err(err(
                no,
                "edges must be sorted lexicographically without repeats",
            ));
        }
        edges.push(e);
        last_line = no;
    }
    if edges.len() * 2 != n * d {
        return Err(err(
            last_line,
            format!("expected {} edges, found {}", n * d / 2, edges.len()),
        ));
    }
    let g = RegularGraph::from_edges(n, edges).map_err(|e| with_line(last_line, e))?;
    if g.d() != d {
        return Err(err(
            2,
            format!("graph is {}-regular, header says {d}", g.d()),
        ));
    }
    Ok(g)
}

pub fn write_drawing(drawing: &GeometricDrawing, tag: Option<ConstructionTag>) -> String {
    let g = drawing.graph();
    let mut out = format!("{DRAWING_HEADER}\n{} {}\n", g.n(), g.edge_count());
    for p in drawing.positions() {
        out.push_str(&format!(
            "{} {} {} {}\n",
            p.x.numer(),
            p.x.denom(),
            p.y.numer(),
            p.y.denom()
        ));
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    if let Some(tag) = tag {
        out.push_str(&format!("{tag}\n"));
    }
    out
}

/// Parses a drawing. The graph must be regular; general position is not
/// checked here (counting does that).
pub fn parse_drawing(text: &str) -> Result<GeometricDrawing> {
    let mut lines = content_lines(text);
    expect_header(&mut lines, DRAWING_HEADER)?;
    let (no, nm) = lines.next().ok_or_else(|| err(2, "missing `n m` line"))?;
    let nm: Vec<usize> = fields(no, nm, 2)?;
    let (n, m) = (nm[0], nm[1]);
    let mut positions = Vec::with_capacity(n);
    let mut last_line = no;
    for _ in 0..n {
        let (no, l) = lines
            .next()
            .ok_or_else(|| err(last_line + 1, "missing vertex line"))?;
        let c: Vec<BigInt> = fields(no, l, 4)?;
        if c[1].is_negative() || c[3].is_negative() {
            return Err(err(no, "denominators must be positive"));
        }
        let [xn, xd, yn, yd]: [BigInt; 4] = c.try_into().expect("four fields");
        positions.push(Point::from_fractions(xn, xd, yn, yd).map_err(|e| with_line(no, e))?);
        last_line = no;
    }
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let (no, l) = lines
            .next()
            .ok_or_else(|| err(last_line + 1, "missing edge line"))?;
        let uv: Vec<usize> = fields(no, l, 2)?;
        if uv[0] >= n || uv[1] >= n {
            return Err(err(no, format!("vertex out of range 0..{n}")));
        }
        edges.push((uv[0], uv[1]));
        last_line = no;
    }
    if let Some((no, _)) = lines.next() {
        return Err(err(no, "unexpected trailing content"));
    }
    let graph = RegularGraph::from_edges(n, edges).map_err(|e| with_line(last_line, e))?;
    GeometricDrawing::new(graph, positions)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{generalized_star, star_like_construction};
    use crate::graph::make_cycle;

    #[test]
    fn graph_round_trip() {
        let g = make_cycle(6).unwrap();
        let text = write_graph(&g);
        assert!(text.starts_with("regular-graph v1\n6 2\n0 1\n0 5\n"));
        assert_eq!(parse_graph(&text).unwrap(), g);
    }

    #[test]
    fn graph_rejects_malformed() {
        assert!(matches!(parse_graph(""), Err(Error::Parse { .. })));
        assert!(matches!(
            parse_graph("regular-graph v2\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        let unsorted = "regular-graph v1\n3 2\n1 2\n0 1\n0 2\n";
        assert!(matches!(
            parse_graph(unsorted),
            Err(Error::Parse { line: 4, .. })
        ));
        let short = "regular-graph v1\n4 2\n0 1\n0 3\n1 2\n";
        assert!(parse_graph(short).is_err());
        let wrong_d = "regular-graph v1\n3 1\n0 1\n0 2\n1 2\n";
        assert!(parse_graph(wrong_d).is_err());
    }

    #[test]
    fn drawing_round_trip_with_tag() {
        let s = star_like_construction(10, 6).unwrap();
        let tag = ConstructionTag::StarLike {
            n: 10,
            d: 6,
            case: s.case,
        };
        let text = write_drawing(&s.drawing, Some(tag));
        assert!(text.ends_with("# construction starlike 10 6 case odd\n"));
        assert_eq!(parse_drawing(&text).unwrap(), s.drawing);

        let star = generalized_star(5, 2).unwrap();
        let text = write_drawing(&star, Some(ConstructionTag::Star { n: 5, d: 2 }));
        assert!(text.contains("2 1 4 1\n"));
        assert_eq!(parse_drawing(&text).unwrap(), star);
    }

    #[test]
    fn drawing_fractions_are_reduced() {
        let text = "drawing v1\n3 3\n0 1 0 1\n2 4 6 3\n-1 3 5 7\n0 1\n0 2\n1 2\n";
        let d = parse_drawing(text).unwrap();
        let out = write_drawing(&d, None);
        assert!(out.contains("1 2 2 1\n-1 3 5 7\n"));
    }

    #[test]
    fn drawing_rejects_malformed() {
        let zero = "drawing v1\n3 3\n0 0 0 1\n1 1 0 1\n0 1 1 1\n0 1\n0 2\n1 2\n";
        assert!(matches!(
            parse_drawing(zero),
            Err(Error::Parse { line: 3, .. })
        ));
        let missing = "drawing v1\n3 3\n0 1 0 1\n1 1 0 1\n0 1 1 1\n0 1\n0 2\n";
        assert!(parse_drawing(missing).is_err());
        let extra = "drawing v1\n3 3\n0 1 0 1\n1 1 0 1\n0 1 1 1\n0 1\n0 2\n1 2\n1 2\n";
        assert!(parse_drawing(extra).is_err());
        let irregular = "drawing v1\n4 3\n0 1 0 1\n1 1 0 1\n0 1 1 1\n5 1 5 1\n0 1\n0 2\n1 2\n";
        assert!(parse_drawing(irregular).is_err());
    }
}
