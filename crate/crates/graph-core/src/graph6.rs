//! graph6 encoding for graphs with at most 62 vertices.
//!
//! One header byte `n + 63`, then the upper triangle read column by column
//! (x(0,1), x(0,2), x(1,2), x(0,3), ...) packed big-endian into 6-bit groups.

use crate::error::GraphError;
use crate::graph::Graph;

pub fn encode(g: &Graph) -> String {
    String::from_utf8(encode_bytes(g)).expect("graph6 is ASCII")
}

pub fn encode_bytes(g: &Graph) -> Vec<u8> {
    let n = g.n();
    let nbits = n * (n - 1) / 2;
    let mut out = Vec::with_capacity(1 + nbits.div_ceil(6));
    out.push(n as u8 + 63);
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        let col = g.row(j);
        for i in 0..j {
            acc = acc << 1 | (col >> i & 1) as u8;
            k += 1;
            if k == 6 {
                out.push(acc + 63);
                acc = 0;
                k = 0;
            }
        }
    }
    if k > 0 {
        out.push((acc << (6 - k)) + 63);
    }
    out
}

pub fn decode(s: &str) -> Result<Graph, GraphError> {
    decode_bytes(s.trim_end_matches(['\n', '\r']).as_bytes())
}

pub fn decode_bytes(b: &[u8]) -> Result<Graph, GraphError> {
    let b = b.strip_prefix(b">>graph6<<").unwrap_or(b);
    let (&head, body) = b
        .split_first()
        .ok_or_else(|| GraphError::Parse("empty graph6 string".into()))?;
    if !(63..=125).contains(&head) {
        return Err(GraphError::Parse(format!("bad graph6 header byte {head}")));
    }
    let n = (head - 63) as usize;
    let nbits = n * n.saturating_sub(1) / 2;
    if body.len() != nbits.div_ceil(6) {
        return Err(GraphError::Parse(format!(
            "graph6 body has {} bytes, expected {} for n={n}",
            body.len(),
            nbits.div_ceil(6)
        )));
    }
    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6];
            if !(63..=126).contains(&byte) {
                return Err(GraphError::Parse(format!("bad graph6 byte {byte}")));
            }
            if (byte - 63) >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    Ok(g)
}
