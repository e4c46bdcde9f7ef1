//! graph6 text encoding (one graph per line).
//!
//! Order `n` is written as one byte for `n <= 62`, as `~` plus three bytes
//! for `n <= 258047`, and as `~~` plus six bytes beyond that. The upper
//! triangle of the adjacency matrix follows, column by column
//! (`(0,1), (0,2), (1,2), (0,3), ...`), packed six bits per byte with an
//! offset of 63.

use crate::error::{Error, Result};
use crate::graph::Graph;

const OFFSET: u8 = 63;

fn err(offset: usize, reason: impl Into<String>) -> Error {
    Error::Graph6 { offset, reason: reason.into() }
}

fn sextet(bytes: &[u8], at: usize) -> Result<u64> {
    match bytes.get(at) {
        Some(&b) if (63..=126).contains(&b) => Ok((b - OFFSET) as u64),
        Some(&b) => Err(err(at, format!("byte 0x{b:02x} outside the printable range 63..=126"))),
        None => Err(err(at, "unexpected end of input")),
    }
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let line = text.strip_suffix('\n').unwrap_or(text);
    let line = line.strip_suffix('\r').unwrap_or(line);
    let mut bytes = line.as_bytes();
    let mut base = 0;
    if let Some(rest) = bytes.strip_prefix(b">>graph6<<") {
        bytes = rest;
        base = 10;
    }
    let at = |i: usize| base + i;

    let (n, mut pos) = match bytes.first() {
        None => return Err(err(at(0), "empty input")),
        Some(&b'~') if bytes.get(1) == Some(&b'~') => {
            let mut n = 0u64;
            for i in 2..8 {
                n = (n << 6) | sextet(bytes, i).map_err(|e| shift(e, base))?;
            }
            (n as usize, 8)
        }
        Some(&b'~') => {
            let mut n = 0u64;
            for i in 1..4 {
                n = (n << 6) | sextet(bytes, i).map_err(|e| shift(e, base))?;
            }
            (n as usize, 4)
        }
        Some(_) => (sextet(bytes, 0).map_err(|e| shift(e, base))? as usize, 1),
    };

    let pairs = n * n.saturating_sub(1) / 2;
    let need = pairs.div_ceil(6);
    let have = bytes.len() - pos;
    if have != need {
        return Err(err(
            at(pos + have.min(need)),
            format!("order {n} needs {need} data bytes, found {have}"),
        ));
    }

    let mut g = Graph::empty(n);
    let mut k = 0;
    'outer: for v in 1..n {
        for u in 0..v {
            if k % 6 == 0 && k > 0 {
                pos += 1;
            }
            let word = sextet(bytes, pos).map_err(|e| shift(e, base))?;
            if (word >> (5 - k % 6)) & 1 == 1 {
                g.add_edge(u, v);
            }
            k += 1;
            if k == pairs {
                break 'outer;
            }
        }
    }
    if pairs > 0 {
        // Validate the tail byte's range and that its padding bits are clear.
        let last = bytes.len() - 1;
        let word = sextet(bytes, last).map_err(|e| shift(e, base))?;
        let used = pairs - (need - 1) * 6;
        if word & ((1 << (6 - used)) - 1) != 0 {
            return Err(err(at(last), "nonzero padding bits"));
        }
    }
    Ok(g)
}

fn shift(e: Error, base: usize) -> Error {
    match e {
        Error::Graph6 { offset, reason } => Error::Graph6 { offset: offset + base, reason },
        other => other,
    }
}

pub fn serialize_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + OFFSET);
    } else if n <= 258_047 {
        out.push(b'~');
        for s in [12, 6, 0] {
            out.push(((n >> s) & 63) as u8 + OFFSET);
        }
    } else {
        out.extend_from_slice(b"~~");
        for s in [30, 24, 18, 12, 6, 0] {
            out.push(((n as u64 >> s) & 63) as u8 + OFFSET);
        }
    }
    let mut acc = 0u8;
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | g.has_edge(u, v) as u8;
            k += 1;
            if k == 6 {
                out.push(acc + OFFSET);
                acc = 0;
                k = 0;
            }
        }
    }
    if k > 0 {
        out.push((acc << (6 - k)) + OFFSET);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}
