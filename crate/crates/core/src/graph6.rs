//! The graph6 line format, as produced by `geng` and friends.
//!
//! Upper-triangle bits are taken column by column (`0-1, 0-2, 1-2, 0-3, ..`),
//! packed big-endian into 6-bit groups offset by 63.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{Graph, MAX_VERTICES};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Graph6ErrorKind {
    Empty,
    /// A byte outside `?..=~`.
    InvalidByte(u8),
    /// Vertex count beyond [`MAX_VERTICES`], or a header form we do not accept.
    UnsupportedOrder,
    Truncated,
    TrailingBytes,
    /// Padding bits in the last group were not zero.
    NonzeroPadding,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Graph6Error {
    pub offset: usize,
    pub kind: Graph6ErrorKind,
}

impl fmt::Display for Graph6Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let what = match self.kind {
            Graph6ErrorKind::Empty => "empty input",
            Graph6ErrorKind::InvalidByte(_) => "byte outside the graph6 alphabet",
            Graph6ErrorKind::UnsupportedOrder => "unsupported vertex count",
            Graph6ErrorKind::Truncated => "truncated adjacency data",
            Graph6ErrorKind::TrailingBytes => "unexpected bytes after adjacency data",
            Graph6ErrorKind::NonzeroPadding => "nonzero padding bits",
        };
        write!(f, "graph6: {what} at byte {}", self.offset)
    }
}

impl core::error::Error for Graph6Error {}

pub fn encode(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(4 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.extend_from_slice(&[126, 63, ((n >> 6) & 63) as u8 + 63, (n & 63) as u8 + 63]);
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        let row = g.neighbors(j);
        for i in 0..j {
            acc = (acc << 1) | ((row >> i) & 1) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    // Every byte is in 63..=126, so this is ASCII.
    out.into_iter().map(char::from).collect()
}

/// Parses one graph6 record; a single trailing `\n` or `\r\n` is tolerated.
pub fn decode(line: &[u8]) -> Result<Graph, Graph6Error> {
    let line = line.strip_suffix(b"\n").unwrap_or(line);
    let line = line.strip_suffix(b"\r").unwrap_or(line);
    let err = |offset, kind| Graph6Error { offset, kind };
    if line.is_empty() {
        return Err(err(0, Graph6ErrorKind::Empty));
    }
    if let Some(pos) = line.iter().position(|b| !(63..=126).contains(b)) {
        return Err(err(pos, Graph6ErrorKind::InvalidByte(line[pos])));
    }
    let (n, body_start) = if line[0] != 126 {
        (usize::from(line[0] - 63), 1)
    } else {
        if line.len() < 4 || line[1] == 126 {
            return Err(err(1, Graph6ErrorKind::UnsupportedOrder));
        }
        let n = line[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | usize::from(b - 63));
        (n, 4)
    };
    if n > MAX_VERTICES {
        return Err(err(0, Graph6ErrorKind::UnsupportedOrder));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    let body = &line[body_start..];
    if body.len() < need {
        return Err(err(line.len(), Graph6ErrorKind::Truncated));
    }
    if body.len() > need {
        return Err(err(body_start + need, Graph6ErrorKind::TrailingBytes));
    }
    if bits % 6 != 0 {
        let last = body[need - 1] - 63;
        if last & ((1u8 << (6 - bits % 6)) - 1) != 0 {
            return Err(err(body_start + need - 1, Graph6ErrorKind::NonzeroPadding));
        }
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if (byte >> (5 - k % 6)) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, &edges).map_err(|_| err(0, Graph6ErrorKind::UnsupportedOrder))
}
