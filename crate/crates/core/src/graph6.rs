//! graph6 encoding (header-less), following the nauty format description:
//! a size prefix `N(n)` followed by the upper adjacency triangle in column
//! order, six bits per printable byte.

use crate::error::{Error, Result};
use crate::graph::Graph;

const BIAS: u8 = 63;
const MAX_ORDER: u64 = (1 << 36) - 1;

fn encode_order(n: usize, out: &mut String) {
    let n = n as u64;
    let push6 = |out: &mut String, v: u64| out.push((BIAS + (v & 0x3f) as u8) as char);
    if n <= 62 {
        push6(out, n);
    } else if n <= 258_047 {
        out.push('~');
        for shift in [12, 6, 0] {
            push6(out, n >> shift);
        }
    } else {
        out.push_str("~~");
        for shift in [30, 24, 18, 12, 6, 0] {
            push6(out, n >> shift);
        }
    }
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = String::new();
    encode_order(n, &mut out);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((acc + BIAS) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + BIAS) as char);
    }
    out
}

fn sextet(bytes: &[u8], offset: usize) -> Result<u64> {
    match bytes.get(offset) {
        Some(&b) if (63..=126).contains(&b) => Ok((b - BIAS) as u64),
        Some(&b) => Err(Error::parse(offset, format!("byte 0x{b:02x} outside graph6 range 63..=126"))),
        None => Err(Error::parse(offset, "unexpected end of input")),
    }
}

/// Parses one header-less graph6 string. Surrounding whitespace is ignored.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let bytes = text.trim().as_bytes();
    if bytes.is_empty() {
        return Err(Error::parse(0, "empty graph6 string"));
    }
    if bytes.starts_with(b">>graph6<<") {
        return Err(Error::parse(0, "graph6 header is not accepted"));
    }
    if bytes[0] == b':' || bytes[0] == b'&' {
        return Err(Error::parse(0, "sparse6/digraph6 input is not graph6"));
    }
    let (n, mut pos) = if bytes[0] != b'~' {
        (sextet(bytes, 0)?, 1)
    } else if bytes.get(1) != Some(&b'~') {
        let mut n = 0;
        for i in 1..4 {
            n = (n << 6) | sextet(bytes, i)?;
        }
        (n, 4)
    } else {
        let mut n = 0;
        for i in 2..8 {
            n = (n << 6) | sextet(bytes, i)?;
        }
        (n, 8)
    };
    if n > MAX_ORDER {
        return Err(Error::parse(0, format!("order {n} exceeds graph6 range")));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    let have = (bytes.len() - pos) as u64;
    if have != need {
        return Err(Error::parse(
            bytes.len().min(pos + need as usize),
            format!("expected {need} adjacency bytes for order {n}, found {have}"),
        ));
    }
    let n = n as usize;
    let mut g = Graph::empty(n);
    let mut k = 0usize;
    let mut cur = 0u64;
    let mut left = 0;
    for j in 1..n {
        for i in 0..j {
            if left == 0 {
                cur = sextet(bytes, pos)?;
                pos += 1;
                left = 6;
            }
            left -= 1;
            if cur >> left & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    debug_assert_eq!(k as u64, bits);
    if left > 0 && cur & ((1 << left) - 1) != 0 {
        return Err(Error::parse(pos - 1, "nonzero padding bits"));
    }
    Ok(g)
}

/// Parses a file body: one graph per non-empty line.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>> {
    let mut graphs = Vec::new();
    let mut offset = 0;
    for line in text.split_inclusive('\n') {
        let trimmed = line.trim();
        if !trimmed.is_empty() {
            let lead = line.len() - line.trim_start().len();
            let g = parse_graph6(trimmed).map_err(|e| match e {
                Error::Parse { offset: o, message } => Error::Parse {
                    offset: offset + lead + o,
                    message,
                },
                other => other,
            })?;
            graphs.push(g);
        }
        offset += line.len();
    }
    Ok(graphs)
}
