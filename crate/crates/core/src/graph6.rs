//! graph6 short form (n <= 62).
//!
//! Byte 0 is `n + 63`. The payload packs the upper triangle in column-major
//! order, `x(0,1), x(0,2), x(1,2), x(0,3), ...`, six bits per byte (most
//! significant first), each byte offset by 63, with the final group
//! zero-padded on the right.

use std::io::{BufRead, Write};

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const MAX_SHORT_FORM: usize = 62;
const HEADER: &str = ">>graph6<<";

fn payload_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text.strip_suffix('\n').unwrap_or(text);
    let text = text.strip_suffix('\r').unwrap_or(text);
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    let (&first, payload) = bytes.split_first().ok_or(Error::Graph6Empty)?;
    if first == 126 {
        return Err(Error::Graph6LongForm);
    }
    if !(63..126).contains(&first) {
        return Err(Error::Graph6LengthByte(first));
    }
    let n = (first - 63) as usize;
    if n == 0 {
        return Err(Error::VertexCount(0));
    }
    if let Some(offset) = payload.iter().position(|b| !(63..=126).contains(b)) {
        return Err(Error::Graph6InvalidByte { offset: offset + 1, byte: payload[offset] });
    }
    let expected = payload_len(n);
    if payload.len() != expected {
        return Err(Error::Graph6PayloadLength { expected, found: payload.len() });
    }

    let mut adj = vec![0u64; n];
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let group = payload[k / 6] - 63;
            if group >> (5 - k % 6) & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
            k += 1;
        }
    }
    let used = k % 6;
    if used != 0 {
        let last = payload[expected - 1] - 63;
        if last & ((1u8 << (6 - used)) - 1) != 0 {
            return Err(Error::Graph6Padding);
        }
    }
    Ok(Graph::from_rows_unchecked(adj))
}

pub fn to_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > MAX_SHORT_FORM {
        return Err(Error::TooLarge { what: "graph6 short form", max: MAX_SHORT_FORM, n });
    }
    let mut out = Vec::with_capacity(1 + payload_len(n));
    out.push(n as u8 + 63);
    let mut group = 0u8;
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            group = group << 1 | g.has_edge(i, j) as u8;
            k += 1;
            if k.is_multiple_of(6) {
                out.push(group + 63);
                group = 0;
            }
        }
    }
    if !k.is_multiple_of(6) {
        out.push((group << (6 - k % 6)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

/// Reads one graph per nonblank line; an optional `>>graph6<<` header is skipped.
pub fn read_graph6<R: BufRead>(reader: R) -> impl Iterator<Item = std::io::Result<Result<Graph>>> {
    reader.lines().filter_map(|line| match line {
        Ok(l) if l.trim().is_empty() => None,
        Ok(l) => Some(Ok(parse_graph6(l.trim_end()))),
        Err(e) => Some(Err(e)),
    })
}

/// Writes each graph as one LF-terminated graph6 line.
pub fn write_graph6<'a, W: Write>(mut w: W, graphs: impl IntoIterator<Item = &'a Graph>) -> std::io::Result<()> {
    for g in graphs {
        let line = to_graph6(g).map_err(std::io::Error::other)?;
        w.write_all(line.as_bytes())?;
        w.write_all(b"\n")?;
    }
    Ok(())
}
