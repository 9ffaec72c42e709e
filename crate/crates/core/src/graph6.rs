//! graph6 encoding for graphs on at most 62 vertices (single-byte header).
//!
//! Layout: byte `n + 63`, then the upper triangle read column by column
//! (`x(0,1), x(0,2), x(1,2), x(0,3), ...`), six bits per byte, each byte
//! offset by 63, the final byte zero-padded.

use crate::error::{Error, Result};
use crate::graph::SmallGraph;

const HEADER: &str = ">>graph6<<";

pub fn to_graph6(g: &SmallGraph) -> String {
    let n = g.order();
    let mut out = String::with_capacity(1 + (n * n).div_ceil(12));
    out.push((n as u8 + 63) as char);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + 63) as char);
    }
    out
}

pub fn from_graph6(text: &str) -> Result<SmallGraph> {
    let s = text.trim();
    let s = s.strip_prefix(HEADER).unwrap_or(s);
    let bytes = s.as_bytes();
    let Some(&first) = bytes.first() else {
        return Err(Error::parse("empty graph6 string"));
    };
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::parse(format!("byte {b} outside the graph6 range")));
    }
    if first == 126 {
        return Err(Error::resource("graph6 multi-byte orders exceed the vertex cap"));
    }
    let n = (first - 63) as usize;
    let mut g = SmallGraph::empty(n)?;
    let nbits = n * n.saturating_sub(1) / 2;
    let body = &bytes[1..];
    if body.len() != nbits.div_ceil(6) {
        return Err(Error::parse(format!(
            "graph6 body has {} bytes, expected {} for n={n}",
            body.len(),
            nbits.div_ceil(6)
        )));
    }
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_encodings() {
        let g = SmallGraph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(to_graph6(&g), "DQc");
        assert_eq!(to_graph6(&SmallGraph::cycle(5).unwrap()), "Dhc");
        assert_eq!(to_graph6(&SmallGraph::path(4).unwrap()), "Ch");
        assert_eq!(to_graph6(&SmallGraph::complete(6).unwrap()), "E~~w");
        assert_eq!(to_graph6(&SmallGraph::cycle(12).unwrap()), "KhCGGC@?G?o@");
        assert_eq!(to_graph6(&SmallGraph::complete(1).unwrap()), "@");
        assert_eq!(to_graph6(&SmallGraph::empty(0).unwrap()), "?");
    }

    #[test]
    fn decodes() {
        assert_eq!(from_graph6("Dhc").unwrap(), SmallGraph::cycle(5).unwrap());
        assert_eq!(from_graph6(">>graph6<<Ch\n").unwrap(), SmallGraph::path(4).unwrap());
        assert!(from_graph6("Dh").is_err());
        assert!(from_graph6("D h").is_err());
        assert!(matches!(from_graph6("_"), Err(Error::Resource(_))));
    }
}
