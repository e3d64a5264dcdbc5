//! graph6 and plain edge-list formats.
//!
//! graph6: a size header (`n + 63` for `n <= 62`, otherwise `126` followed by
//! three 6-bit groups) and the upper triangle in column order
//! `(0,1), (0,2), (1,2), (0,3), ...`, packed big-endian into 6-bit groups,
//! each offset by 63 and zero-padded.
//!
//! Edge list: a first line `n m`, then `m` lines `u v` with 0-indexed
//! endpoints. Lines starting with `#` and blank lines are ignored.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order representable by the 4-byte graph6 size header.
pub const GRAPH6_MAX_N: usize = 258_047;

pub fn encode_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    let mut out = Vec::with_capacity(4 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= GRAPH6_MAX_N {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    } else {
        return Err(Error::Graph6(format!("order {n} exceeds {GRAPH6_MAX_N}")));
    }
    let mut acc = 0u8;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            nbits += 1;
            if nbits == 6 {
                out.push(acc + 63);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push((acc << (6 - nbits)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

pub fn decode_graph6(text: &str) -> Result<Graph> {
    let text = text.trim();
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    let bytes = text.as_bytes();
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::Graph6(format!("byte {b} outside [63, 126]")));
    }
    let (n, body) = match bytes {
        [] => return Err(Error::Graph6("empty input".into())),
        [126, 126, ..] => return Err(Error::Graph6("8-byte size header is not supported".into())),
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(Error::Graph6("truncated size header".into()));
            }
            let n = rest[..3].iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
            (n, &rest[3..])
        }
        [first, rest @ ..] => ((first - 63) as usize, rest),
    };
    let nbits = n * n.saturating_sub(1) / 2;
    if body.len() != nbits.div_ceil(6) {
        return Err(Error::Graph6(format!(
            "order {n} needs {} data bytes, found {}",
            nbits.div_ceil(6),
            body.len()
        )));
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    for k in nbits..body.len() * 6 {
        if bit(k) {
            return Err(Error::Graph6("non-zero padding bits".into()));
        }
    }
    let mut k = 0;
    Ok(Graph::from_fn(n, |_, _| {
        k += 1;
        bit(k - 1)
    }))
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut s = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(s, "{u} {v}");
    }
    s
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let err = |line, msg: &str| Error::EdgeList {
        line,
        msg: msg.to_string(),
    };
    let parse_pair = |line: usize, l: &str| -> Result<(usize, usize)> {
        let mut it = l.split_whitespace().map(str::parse::<usize>);
        match (it.next(), it.next(), it.next()) {
            (Some(Ok(a)), Some(Ok(b)), None) => Ok((a, b)),
            _ => Err(err(line, "expected two non-negative integers")),
        }
    };
    let (hline, header) = lines.next().ok_or_else(|| err(0, "missing header"))?;
    let (n, m) = parse_pair(hline, header)?;
    let mut edges = Vec::with_capacity(m);
    for (line, l) in lines {
        edges.push(parse_pair(line, l)?);
    }
    if edges.len() != m {
        return Err(err(
            hline,
            &format!("header announces {m} edges, found {}", edges.len()),
        ));
    }
    Graph::new(n, &edges)
}
