//! graph6 short format: one byte `63 + n`, then the upper triangle of the
//! adjacency matrix in column order `(0,1), (0,2), (1,2), (0,3), ...`, packed
//! six bits per byte (most significant first) and offset by 63.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order representable with a single size byte.
pub const MAX_SHORT_ORDER: usize = 62;

fn err(offset: usize, message: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        message: message.into(),
    }
}

fn body_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    let bytes = bytes.strip_prefix(b">>graph6<<").unwrap_or(bytes);
    let Some(&first) = bytes.first() else {
        return Err(err(0, "empty input"));
    };
    if !(63..=126).contains(&first) {
        return Err(err(0, format!("invalid size byte {first:#04x}")));
    }
    if first == 126 {
        return Err(err(0, "long-form graph6 (n > 62) is not supported"));
    }
    let n = (first - 63) as usize;
    let expected = body_len(n);
    let body = &bytes[1..];
    if body.len() != expected {
        return Err(err(
            1 + body.len().min(expected),
            format!("expected {expected} data bytes for n = {n}, found {}", body.len()),
        ));
    }

    let mut g = Graph::empty(n)?;
    let total_bits = n * n.saturating_sub(1) / 2;
    let mut bit = 0usize;
    for (i, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(err(1 + i, format!("invalid data byte {b:#04x}")));
        }
        let chunk = b - 63;
        for k in 0..6 {
            let set = chunk >> (5 - k) & 1 == 1;
            if bit >= total_bits {
                if set {
                    return Err(err(1 + i, "nonzero padding bit"));
                }
            } else if set {
                let (u, v) = pair_of_index(bit);
                g.add_edge(u, v);
            }
            bit += 1;
        }
    }
    Ok(g)
}

/// Inverse of the column-order enumeration: bit index -> `(row, column)`.
fn pair_of_index(index: usize) -> (usize, usize) {
    let mut col = 1;
    let mut start = 0;
    while start + col <= index {
        start += col;
        col += 1;
    }
    (index - start, col)
}

pub fn write_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > MAX_SHORT_ORDER {
        return Err(Error::Capacity {
            n,
            cap: MAX_SHORT_ORDER,
        });
    }
    let mut out = String::with_capacity(1 + body_len(n));
    out.push((63 + n as u8) as char);
    let mut chunk = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            chunk = chunk << 1 | g.has_edge(u, v) as u8;
            filled += 1;
            if filled == 6 {
                out.push((63 + chunk) as char);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((63 + (chunk << (6 - filled))) as char);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete_graph, path};

    #[test]
    fn known_strings() {
        assert_eq!(parse_graph6("@").unwrap(), Graph::empty(1).unwrap());
        assert_eq!(parse_graph6("C~").unwrap(), complete_graph(4));
        assert_eq!(write_graph6(&path(4)).unwrap(), "Ch");
        assert_eq!(parse_graph6("Ch\n").unwrap(), path(4));
        assert_eq!(write_graph6(&Graph::empty(0).unwrap()).unwrap(), "?");
    }

    #[test]
    fn header_is_accepted() {
        assert_eq!(parse_graph6(">>graph6<<C~").unwrap(), complete_graph(4));
    }

    #[test]
    fn malformed_inputs_report_offsets() {
        assert!(matches!(parse_graph6(""), Err(Error::Graph6 { offset: 0, .. })));
        assert!(matches!(parse_graph6("C"), Err(Error::Graph6 { offset: 1, .. })));
        assert!(matches!(parse_graph6("C~~"), Err(Error::Graph6 { offset: 2, .. })));
        // n = 4 uses 6 bits exactly; n = 3 uses 3 of 6, so 'B' + 63+1 has a set pad bit.
        assert!(matches!(parse_graph6("B@"), Err(Error::Graph6 { offset: 1, .. })));
        assert!(matches!(parse_graph6("C "), Err(Error::Graph6 { offset: 1, .. })));
    }

    #[test]
    fn pair_index_matches_column_order() {
        let expect = [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3), (0, 4)];
        for (i, &p) in expect.iter().enumerate() {
            assert_eq!(pair_of_index(i), p);
        }
    }
}
