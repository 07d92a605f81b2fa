//! Plain-text digraph format: a header line `n <N>` followed by one `u v`
//! line per arc (0-indexed). `#` starts a comment; blank lines and arc
//! order are irrelevant. The writer emits arcs in lexicographic order.

use std::fmt::Write as _;
use std::path::Path;

use super::Digraph;
use crate::error::{Error, Result};

pub fn parse_digraph(text: &str) -> Result<Digraph> {
    let mut n: Option<usize> = None;
    let mut arcs = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let parse_err = |msg: String| Error::Parse { line: line_no, msg };
        let fields: Vec<&str> = line.split_whitespace().collect();
        match (n, fields.as_slice()) {
            (None, ["n", count]) => {
                n = Some(
                    count
                        .parse()
                        .map_err(|_| parse_err(format!("bad vertex count {count:?}")))?,
                );
            }
            (None, _) => return Err(parse_err("expected header `n <N>`".into())),
            (Some(_), [u, v]) => {
                let u = u.parse().map_err(|_| parse_err(format!("bad vertex {u:?}")))?;
                let v = v.parse().map_err(|_| parse_err(format!("bad vertex {v:?}")))?;
                arcs.push((u, v));
            }
            (Some(_), _) => return Err(parse_err(format!("expected `u v`, got {line:?}"))),
        }
    }
    let n = n.ok_or(Error::Parse {
        line: 0,
        msg: "missing header `n <N>`".into(),
    })?;
    Digraph::from_arcs(n, arcs)
}

pub fn write_digraph(g: &Digraph) -> String {
    let mut out = format!("n {}\n", g.order());
    for (u, v) in g.arcs() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn read_digraph(path: impl AsRef<Path>) -> Result<Digraph> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse {
        line: 0,
        msg: format!("{}: {e}", path.display()),
    })?;
    parse_digraph(&text)
}
