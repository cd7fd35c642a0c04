//! The line-oriented instance format.
//!
//! ```text
//! c comment
//! p lc <n> <m> <kappa>
//! e <u> <v>
//! l <v> <c1> <c2> ...
//! f <v> <c>
//! ```
//!
//! Vertices are 1-based in the file and 0-based in memory. A vertex with no
//! `l`/`f` line may use the whole palette. `f v c` is shorthand for
//! `l v c`.

use std::fmt::Write as _;

use crate::error::{ParseError, ParseErrorKind};
use crate::graph::Graph;
use crate::instance::{Color, ColorList, Instance};
use crate::subset::HARD_MAX_VERTICES;

/// Default cap on the order of a parsed graph.
pub const DEFAULT_MAX_VERTICES: usize = 26;

pub fn parse_instance(text: &str) -> Result<Instance, ParseError> {
    parse_instance_with_max(text, DEFAULT_MAX_VERTICES)
}

struct Header {
    n: usize,
    kappa: Color,
}

pub fn parse_instance_with_max(text: &str, max_n: usize) -> Result<Instance, ParseError> {
    let max_n = max_n.min(HARD_MAX_VERTICES);
    let mut header: Option<Header> = None;
    let mut graph = Graph::empty(0).unwrap();
    let mut lists: Vec<Option<ColorList>> = Vec::new();
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let err = |kind| ParseError { line, kind };
        let mut tokens = raw.split_whitespace();
        let Some(tag) = tokens.next() else { continue };
        if tag == "c" {
            continue;
        }
        let args: Vec<&str> = tokens.collect();

        if tag == "p" {
            if header.is_some() {
                return Err(err(ParseErrorKind::DuplicateHeader));
            }
            let h = parse_header(&args).ok_or(err(ParseErrorKind::MalformedHeader))?;
            if h.n > max_n {
                return Err(err(ParseErrorKind::TooManyVertices { n: h.n, max: max_n }));
            }
            graph = Graph::empty(h.n).unwrap();
            lists = vec![None; h.n];
            header = Some(h);
            continue;
        }

        let Some(h) = header.as_ref() else {
            return Err(err(match tag {
                "e" | "l" | "f" => ParseErrorKind::MissingHeader,
                other => ParseErrorKind::UnknownLine(other.to_string()),
            }));
        };
        let kind_char = tag.chars().next().unwrap_or('?');
        match tag {
            "e" => {
                let [u, v] = args[..] else {
                    return Err(err(ParseErrorKind::Malformed(kind_char)));
                };
                let u = vertex_arg(u, h.n).map_err(err)?;
                let v = vertex_arg(v, h.n).map_err(err)?;
                if u == v {
                    return Err(err(ParseErrorKind::SelfLoop { vertex: u + 1 }));
                }
                graph.add_edge(u, v).expect("endpoints checked");
            }
            "l" | "f" => {
                let (&v, colors) = args
                    .split_first()
                    .ok_or(err(ParseErrorKind::Malformed(kind_char)))?;
                if tag == "f" && colors.len() != 1 {
                    return Err(err(ParseErrorKind::Malformed('f')));
                }
                let v = vertex_arg(v, h.n).map_err(err)?;
                let colors = colors
                    .iter()
                    .map(|c| color_arg(c, h.kappa))
                    .collect::<Result<ColorList, _>>()
                    .map_err(err)?;
                if lists[v].is_some() {
                    return Err(err(ParseErrorKind::DuplicateList { vertex: v + 1 }));
                }
                lists[v] = Some(colors);
            }
            other => return Err(err(ParseErrorKind::UnknownLine(other.to_string()))),
        }
    }

    let Some(h) = header else {
        return Err(ParseError {
            line: last_line,
            kind: ParseErrorKind::MissingHeader,
        });
    };
    let lists = lists
        .into_iter()
        .map(|l| l.unwrap_or_else(|| ColorList::full(h.kappa)))
        .collect();
    Ok(Instance::new(graph, h.kappa, lists).expect("lists validated while parsing"))
}

fn parse_header(args: &[&str]) -> Option<Header> {
    let ["lc", n, m, kappa] = args else {
        return None;
    };
    let n = n.parse().ok()?;
    // The declared edge count is informational; repeated edges collapse.
    let _m: usize = m.parse().ok()?;
    let kappa = kappa.parse().ok()?;
    Some(Header { n, kappa })
}

fn vertex_arg(tok: &str, n: usize) -> Result<usize, ParseErrorKind> {
    let v: u64 = tok
        .parse()
        .map_err(|_| ParseErrorKind::BadNumber(tok.to_string()))?;
    if v == 0 || v > n as u64 {
        return Err(ParseErrorKind::VertexOutOfRange { vertex: v, n });
    }
    Ok(v as usize - 1)
}

fn color_arg(tok: &str, kappa: Color) -> Result<Color, ParseErrorKind> {
    let c: u64 = tok
        .parse()
        .map_err(|_| ParseErrorKind::BadNumber(tok.to_string()))?;
    if c == 0 || c > kappa as u64 {
        return Err(ParseErrorKind::ColorOutOfRange { color: c, kappa });
    }
    Ok(c as Color)
}

/// Serializes an instance. Vertices whose list is the whole palette get no
/// list line.
pub fn write_instance(inst: &Instance) -> String {
    let g = inst.graph();
    let full = ColorList::full(inst.kappa());
    let mut out = String::new();
    writeln!(out, "p lc {} {} {}", g.order(), g.edge_count(), inst.kappa()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    for (v, list) in inst.lists().iter().enumerate() {
        if *list == full {
            continue;
        }
        if list.len() == 1 {
            writeln!(out, "f {} {}", v + 1, list.as_slice()[0]).unwrap();
        } else {
            write!(out, "l {}", v + 1).unwrap();
            for c in list.iter() {
                write!(out, " {c}").unwrap();
            }
            out.push('\n');
        }
    }
    out
}
