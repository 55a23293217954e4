//! Plain-text formats for digraphs, source instances and witnesses, plus
//! the JSON run report. A `#` starts a comment anywhere; blank lines are
//! skipped. All formats round-trip through their parser.

use crate::broadcast::BroadcastFunction;
use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::multipacking::{HittingSetInstance, Multipacking};
use crate::reductions::{ColoredGraph, UndirectedGraph, X3CInstance};
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;

/// Numbered, comment-stripped, nonblank lines.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = line.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

fn parse_fields<const N: usize>(line: usize, text: &str) -> Result<[usize; N]> {
    let mut out = [0usize; N];
    let mut parts = text.split_whitespace();
    for slot in out.iter_mut() {
        let tok = parts.next().ok_or_else(|| Error::Parse {
            line,
            msg: format!("expected {N} fields"),
        })?;
        *slot = tok.parse().map_err(|_| Error::Parse {
            line,
            msg: format!("not a number: {tok}"),
        })?;
    }
    if parts.next().is_some() {
        return Err(Error::Parse {
            line,
            msg: format!("expected exactly {N} fields"),
        });
    }
    Ok(out)
}

fn header<'a>(
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
    keyword: &str,
) -> Result<(usize, Vec<usize>)> {
    let (line, text) = lines.next().ok_or_else(|| Error::Parse {
        line: 1,
        msg: "empty input".into(),
    })?;
    let mut parts = text.split_whitespace();
    if parts.next() != Some(keyword) {
        return Err(Error::Parse {
            line,
            msg: format!("expected header starting with '{keyword}'"),
        });
    }
    let nums = parts
        .map(|tok| {
            tok.parse().map_err(|_| Error::Parse {
                line,
                msg: format!("not a number: {tok}"),
            })
        })
        .collect::<Result<Vec<usize>>>()?;
    Ok((line, nums))
}

fn expect_end<'a>(mut lines: impl Iterator<Item = (usize, &'a str)>) -> Result<()> {
    match lines.next() {
        None => Ok(()),
        Some((line, _)) => Err(Error::Parse {
            line,
            msg: "unexpected trailing content".into(),
        }),
    }
}

fn pair_list<'a>(
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
    m: usize,
    header_line: usize,
) -> Result<Vec<(usize, usize)>> {
    let mut pairs = Vec::with_capacity(m);
    for _ in 0..m {
        let (line, text) = lines.next().ok_or_else(|| Error::Parse {
            line: header_line,
            msg: format!("expected {m} arc lines"),
        })?;
        let [u, v] = parse_fields::<2>(line, text)?;
        pairs.push((u, v));
    }
    Ok(pairs)
}

/// `digraph n m` followed by m lines `u v`.
pub fn parse_digraph(text: &str) -> Result<Digraph> {
    let mut lines = content_lines(text);
    let (hline, nums) = header(&mut lines, "digraph")?;
    let [n, m] = two(hline, &nums)?;
    let arcs = pair_list(&mut lines, m, hline)?;
    expect_end(lines)?;
    Digraph::new(n, &arcs)
}

pub fn serialize_digraph(d: &Digraph) -> String {
    let mut out = format!("digraph {} {}\n", d.vertex_count(), d.arc_count());
    for (u, v) in d.arcs() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

/// `graph n m` followed by m lines `u v`; edge order is preserved.
pub fn parse_undirected(text: &str) -> Result<UndirectedGraph> {
    let mut lines = content_lines(text);
    let (hline, nums) = header(&mut lines, "graph")?;
    let [n, m] = two(hline, &nums)?;
    let edges = pair_list(&mut lines, m, hline)?;
    expect_end(lines)?;
    UndirectedGraph::new(n, edges)
}

pub fn serialize_undirected(g: &UndirectedGraph) -> String {
    let mut out = format!("graph {} {}\n", g.n, g.edges.len());
    for &(u, v) in &g.edges {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

/// Undirected format plus a trailing `colors c_0 .. c_{n-1}` line.
pub fn parse_colored(text: &str) -> Result<ColoredGraph> {
    let mut lines = content_lines(text);
    let (hline, nums) = header(&mut lines, "graph")?;
    let [n, m] = two(hline, &nums)?;
    let edges = pair_list(&mut lines, m, hline)?;
    let (cline, ctext) = lines.next().ok_or_else(|| Error::Parse {
        line: hline,
        msg: "expected a colors line".into(),
    })?;
    let mut parts = ctext.split_whitespace();
    if parts.next() != Some("colors") {
        return Err(Error::Parse {
            line: cline,
            msg: "expected 'colors c_0 .. c_{n-1}'".into(),
        });
    }
    let colors = parts
        .map(|tok| {
            tok.parse().map_err(|_| Error::Parse {
                line: cline,
                msg: format!("not a number: {tok}"),
            })
        })
        .collect::<Result<Vec<usize>>>()?;
    expect_end(lines)?;
    ColoredGraph::new(UndirectedGraph::new(n, edges)?, colors)
}

pub fn serialize_colored(c: &ColoredGraph) -> String {
    let mut out = serialize_undirected(&c.graph);
    out.push_str("colors");
    for &color in &c.colors {
        write!(out, " {color}").unwrap();
    }
    out.push('\n');
    out
}

/// `x3c 3k n` followed by n lines of three elements.
pub fn parse_x3c(text: &str) -> Result<X3CInstance> {
    let mut lines = content_lines(text);
    let (hline, nums) = header(&mut lines, "x3c")?;
    let [ground, count] = two(hline, &nums)?;
    let mut triples = Vec::with_capacity(count);
    for _ in 0..count {
        let (line, text) = lines.next().ok_or_else(|| Error::Parse {
            line: hline,
            msg: format!("expected {count} triple lines"),
        })?;
        let [a, b, c] = parse_fields::<3>(line, text)?;
        triples.push([a, b, c]);
    }
    expect_end(lines)?;
    X3CInstance::new(ground, triples)
}

pub fn serialize_x3c(inst: &X3CInstance) -> String {
    let mut out = format!("x3c {} {}\n", inst.ground_size, inst.triples.len());
    for t in &inst.triples {
        writeln!(out, "{} {} {}", t[0], t[1], t[2]).unwrap();
    }
    out
}

/// `hs |U| |F| k` followed by |F| lines `size e_1 .. e_size`.
pub fn parse_hitting_set(text: &str) -> Result<HittingSetInstance> {
    let mut lines = content_lines(text);
    let (hline, nums) = header(&mut lines, "hs")?;
    if nums.len() != 3 {
        return Err(Error::Parse {
            line: hline,
            msg: "expected 'hs universe sets k'".into(),
        });
    }
    let (universe, count, k) = (nums[0], nums[1], nums[2]);
    let mut sets = Vec::with_capacity(count);
    for _ in 0..count {
        let (line, text) = lines.next().ok_or_else(|| Error::Parse {
            line: hline,
            msg: format!("expected {count} set lines"),
        })?;
        let fields: Vec<usize> = text
            .split_whitespace()
            .map(|tok| {
                tok.parse().map_err(|_| Error::Parse {
                    line,
                    msg: format!("not a number: {tok}"),
                })
            })
            .collect::<Result<_>>()?;
        match fields.split_first() {
            Some((&size, rest)) if rest.len() == size => sets.push(rest.to_vec()),
            _ => {
                return Err(Error::Parse {
                    line,
                    msg: "expected 'size e_1 .. e_size'".into(),
                })
            }
        }
    }
    expect_end(lines)?;
    HittingSetInstance::new(universe, sets, Some(k as u32))
}

pub fn serialize_hitting_set(inst: &HittingSetInstance) -> String {
    let mut out = format!(
        "hs {} {} {}\n",
        inst.universe_size,
        inst.sets.len(),
        inst.k.unwrap_or(0)
    );
    for set in &inst.sets {
        write!(out, "{}", set.len()).unwrap();
        for e in set {
            write!(out, " {e}").unwrap();
        }
        out.push('\n');
    }
    out
}

/// Broadcast witness: one `v radius` line per dominator, radius >= 1;
/// unlisted vertices transmit nothing.
pub fn parse_witness_bd(text: &str, n: usize) -> Result<BroadcastFunction> {
    let mut f = BroadcastFunction::zeros(n);
    for (line, content) in content_lines(text) {
        let [v, radius] = parse_fields::<2>(line, content)?;
        if v >= n {
            return Err(Error::Parse {
                line,
                msg: format!("vertex {v} outside 0..{n}"),
            });
        }
        if radius == 0 {
            return Err(Error::Parse {
                line,
                msg: "dominator radius must be at least 1".into(),
            });
        }
        if f.value(v) != 0 {
            return Err(Error::DuplicateVertex { vertex: v, line });
        }
        f.set(v, radius as u32);
    }
    Ok(f)
}

pub fn serialize_witness_bd(f: &BroadcastFunction) -> String {
    let mut out = String::new();
    for v in f.dominators() {
        writeln!(out, "{v} {}", f.value(v)).unwrap();
    }
    out
}

/// Multipacking witness: one vertex per line.
pub fn parse_witness_mp(text: &str, n: usize) -> Result<Multipacking> {
    let mut members = Vec::new();
    for (line, content) in content_lines(text) {
        let [v] = parse_fields::<1>(line, content)?;
        if v >= n {
            return Err(Error::Parse {
                line,
                msg: format!("vertex {v} outside 0..{n}"),
            });
        }
        if members.contains(&v) {
            return Err(Error::DuplicateVertex { vertex: v, line });
        }
        members.push(v);
    }
    Ok(Multipacking::new(members))
}

pub fn serialize_witness_mp(s: &Multipacking) -> String {
    let mut out = String::new();
    for &v in s.members() {
        writeln!(out, "{v}").unwrap();
    }
    out
}

fn two(line: usize, nums: &[usize]) -> Result<[usize; 2]> {
    match nums {
        &[a, b] => Ok([a, b]),
        _ => Err(Error::Parse {
            line,
            msg: "expected two numbers in the header".into(),
        }),
    }
}

/// Machine-readable run summary; the key set is fixed, absent values are
/// null. The witness is embedded in its native text format so it can be fed
/// back to the verifier.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Report {
    pub problem: String,
    pub optimum: Option<u32>,
    pub decision: Option<String>,
    pub witness: Option<String>,
    pub algorithm: String,
    pub nodes_explored: u64,
    pub elapsed_ms: u64,
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
