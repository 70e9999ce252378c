//! graph6 codec: one printable ASCII line per simple graph.
//!
//! Both length forms are handled: the single-byte form for n <= 62 and the
//! four-byte form up to n = 258047. Payload bits run over the upper triangle
//! column by column — (0,1), (0,2), (1,2), (0,3), ... — packed big-endian
//! into 6-bit groups offset by 63.

use crate::error::Graph6Error;
use crate::graph::Graph;

pub const MAX_ORDER: usize = 258_047;
const OFFSET: u8 = 63;
const LONG_MARK: u8 = 126; // '~'
const HEADER: &str = ">>graph6<<";

pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let line = text.trim_end_matches(['\n', '\r']);
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    if let Some(&bad) = bytes.iter().find(|&&b| !(OFFSET..=LONG_MARK).contains(&b)) {
        return Err(Graph6Error::BadChar(bad));
    }
    let (n, payload) = decode_order(bytes)?;
    let bits = n * (n.saturating_sub(1)) / 2;
    let expected = bits.div_ceil(6);
    if payload.len() != expected {
        return Err(Graph6Error::PayloadSize {
            expected,
            found: payload.len(),
        });
    }
    let mut edges = Vec::new();
    let mut bit = 0;
    for v in 1..n {
        for u in 0..v {
            let group = payload[bit / 6] - OFFSET;
            if (group >> (5 - bit % 6)) & 1 == 1 {
                edges.push((u, v));
            }
            bit += 1;
        }
    }
    Ok(Graph::from_edges(n, &edges).expect("decoded edges are in range and distinct"))
}

fn decode_order(bytes: &[u8]) -> Result<(usize, &[u8]), Graph6Error> {
    if bytes[0] != LONG_MARK {
        return Ok(((bytes[0] - OFFSET) as usize, &bytes[1..]));
    }
    if bytes.len() >= 2 && bytes[1] == LONG_MARK {
        // eight-byte form for n >= 258048; decode just to report the order
        if bytes.len() < 8 {
            return Err(Graph6Error::BadLength);
        }
        let n = bytes[2..8]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - OFFSET) as usize);
        return Err(Graph6Error::OrderTooLarge(n));
    }
    if bytes.len() < 4 {
        return Err(Graph6Error::BadLength);
    }
    let n = bytes[1..4]
        .iter()
        .fold(0usize, |acc, &b| (acc << 6) | (b - OFFSET) as usize);
    Ok((n, &bytes[4..]))
}

pub fn write_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.n();
    if n > MAX_ORDER {
        return Err(Graph6Error::OrderTooLarge(n));
    }
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + OFFSET);
    } else {
        out.push(LONG_MARK);
        out.push(((n >> 12) & 0x3f) as u8 + OFFSET);
        out.push(((n >> 6) & 0x3f) as u8 + OFFSET);
        out.push((n & 0x3f) as u8 + OFFSET);
    }
    let mut group = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            group <<= 1;
            if g.has_edge(u, v) {
                group |= 1;
            }
            filled += 1;
            if filled == 6 {
                out.push(group + OFFSET);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((group << (6 - filled)) + OFFSET);
    }
    Ok(String::from_utf8(out).expect("graph6 output is printable ASCII"))
}
