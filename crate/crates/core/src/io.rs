//! PACE-style text formats.
//!
//! * `.gr`: `p tw <n> <m>` then one `u v` line per edge.
//! * `.td`: `s td <bags> <width+1> <n>`, one `b <id> <v>...` line per bag,
//!   then one `<id> <id>` line per decomposition-tree edge.
//! * `.perm`: one line with the images `phi(1) ... phi(n)`.
//!
//! Lines starting with `c` are comments in all three formats. Writers put
//! the supplied comment lines first.

use std::fmt::Write as _;

use crate::decomposition::TreeDecomposition;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::perm::Permutation;

/// Non-empty, non-comment lines with their 1-based line numbers.
fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('c'))
}

fn numbers(line: usize, s: &str) -> Result<Vec<usize>> {
    s.split_whitespace()
        .map(|t| t.parse::<usize>().map_err(|_| Error::parse(line, format!("expected a non-negative integer, found `{t}`"))))
        .collect()
}

fn header<'a>(line: usize, s: &'a str, tag: &str, kind: &str) -> Result<&'a str> {
    let mut parts = s.splitn(3, char::is_whitespace);
    match (parts.next(), parts.next(), parts.next()) {
        (Some(t), Some(k), Some(rest)) if t == tag && k == kind => Ok(rest),
        _ => Err(Error::parse(line, format!("expected `{tag} {kind} ...` header, found `{s}`"))),
    }
}

fn comment_block(comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        for l in c.lines() {
            let _ = writeln!(out, "c {l}");
        }
    }
    out
}

pub fn parse_gr(text: &str) -> Result<Graph> {
    let mut lines = data_lines(text);
    let (hl, h) = lines.next().ok_or_else(|| Error::parse(0, "missing `p tw` header"))?;
    let dims = numbers(hl, header(hl, h, "p", "tw")?)?;
    let [n, m] = dims[..] else {
        return Err(Error::parse(hl, "header needs exactly <n> <m>"));
    };
    let mut edges = Vec::with_capacity(m);
    for (ln, l) in lines {
        let nums = numbers(ln, l)?;
        let [u, v] = nums[..] else {
            return Err(Error::parse(ln, format!("edge line needs two vertices, found `{l}`")));
        };
        if u == 0 || u > n || v == 0 || v > n {
            return Err(Error::parse(ln, format!("vertex out of range 1..={n}")));
        }
        if u == v {
            return Err(Error::parse(ln, format!("self-loop at {u}")));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(Error::parse(hl, format!("header announces {m} edges, file has {}", edges.len())));
    }
    Graph::new(n, edges).map_err(|e| Error::parse(hl, e.to_string()))
}

pub fn write_gr(g: &Graph, comments: &[String]) -> String {
    let mut out = comment_block(comments);
    let _ = writeln!(out, "p tw {} {}", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn parse_td(text: &str) -> Result<TreeDecomposition> {
    let mut lines = data_lines(text);
    let (hl, h) = lines.next().ok_or_else(|| Error::parse(0, "missing `s td` header"))?;
    let dims = numbers(hl, header(hl, h, "s", "td")?)?;
    let [count, declared, n] = dims[..] else {
        return Err(Error::parse(hl, "header needs exactly <bags> <width+1> <n>"));
    };
    let mut bags: Vec<Option<Vec<usize>>> = vec![None; count];
    let mut edges = Vec::new();
    for (ln, l) in lines {
        if let Some(rest) = l.strip_prefix('b') {
            let nums = numbers(ln, rest)?;
            let Some((&id, verts)) = nums.split_first() else {
                return Err(Error::parse(ln, "bag line needs an id"));
            };
            if id == 0 || id > count {
                return Err(Error::parse(ln, format!("bag id {id} outside 1..={count}")));
            }
            if let Some(&v) = verts.iter().find(|&&v| v == 0 || v > n) {
                return Err(Error::parse(ln, format!("vertex {v} outside 1..={n}")));
            }
            if bags[id - 1].replace(verts.to_vec()).is_some() {
                return Err(Error::parse(ln, format!("bag {id} defined twice")));
            }
        } else {
            let nums = numbers(ln, l)?;
            let [a, b] = nums[..] else {
                return Err(Error::parse(ln, format!("tree edge line needs two bag ids, found `{l}`")));
            };
            if a == 0 || a > count || b == 0 || b > count {
                return Err(Error::parse(ln, format!("bag id outside 1..={count}")));
            }
            edges.push((a, b));
        }
    }
    let bags: Vec<Vec<usize>> = bags
        .into_iter()
        .enumerate()
        .map(|(i, b)| b.ok_or_else(|| Error::parse(hl, format!("bag {} never defined", i + 1))))
        .collect::<Result<_>>()?;
    let d = TreeDecomposition::new(n, bags, edges).map_err(|e| Error::parse(hl, e.to_string()))?;
    if d.width() + 1 != declared {
        return Err(Error::parse(
            hl,
            format!("header declares bag size {declared}, largest bag has {}", d.width() + 1),
        ));
    }
    Ok(d)
}

pub fn write_td(d: &TreeDecomposition, comments: &[String]) -> String {
    let mut out = comment_block(comments);
    let _ = writeln!(out, "s td {} {} {}", d.bag_count(), d.width() + 1, d.target_n());
    for (i, bag) in d.bags().iter().enumerate() {
        let _ = write!(out, "b {}", i + 1);
        for v in bag {
            let _ = write!(out, " {v}");
        }
        out.push('\n');
    }
    for (a, b) in d.tree_edges() {
        let _ = writeln!(out, "{a} {b}");
    }
    out
}

pub fn parse_perm(text: &str) -> Result<Permutation> {
    let mut lines = data_lines(text);
    let (ln, l) = lines.next().ok_or_else(|| Error::parse(0, "missing permutation line"))?;
    if let Some((extra, _)) = lines.next() {
        return Err(Error::parse(extra, "permutation file must hold a single line"));
    }
    Permutation::from_images(numbers(ln, l)?).map_err(|e| Error::parse(ln, e.to_string()))
}

pub fn write_perm(p: &Permutation, comments: &[String]) -> String {
    format!("{}{p}\n", comment_block(comments))
}
