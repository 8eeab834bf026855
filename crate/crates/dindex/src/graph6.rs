//! graph6 text encoding of simple undirected graphs.
//!
//! A line is the vertex count followed by the upper triangle of the
//! adjacency matrix, column by column (`(0,1), (0,2), (1,2), (0,3), …`),
//! packed six bits per byte and offset by 63 so every byte is printable.

use std::io::BufRead;

use dindex_core::graph::{Graph, GraphError, DEFAULT_MAX_VERTICES};

/// Optional header some tools put before the first graph.
pub const HEADER: &str = ">>graph6<<";

/// Largest vertex count the four-byte size form can express.
pub const MAX_ORDER: usize = 258_047;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("byte {byte:#04x} at position {position} is outside 63..=126")]
    BadCharacter { position: usize, byte: u8 },
    #[error("expected {expected} bytes for the declared order, found {got}")]
    BadLength { expected: usize, got: usize },
    #[error("orders above {MAX_ORDER} are not supported")]
    OrderTooLarge,
    #[error("padding bits after the last edge are not zero")]
    NonzeroPadding,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn size_prefix(bytes: &[u8]) -> Result<(usize, usize), Graph6Error> {
    match bytes {
        [] => Err(Graph6Error::Empty),
        [126, 126, ..] => Err(Graph6Error::OrderTooLarge),
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(Graph6Error::BadLength {
                    expected: 4,
                    got: bytes.len(),
                });
            }
            let n = rest[..3].iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
            Ok((n, 4))
        }
        [b, ..] => Ok(((b - 63) as usize, 1)),
    }
}

/// Parses one graph6 line, tolerating a leading header and trailing
/// whitespace. Orders above [`DEFAULT_MAX_VERTICES`] are rejected.
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    parse_graph6_with_limit(text, DEFAULT_MAX_VERTICES)
}

pub fn parse_graph6_with_limit(text: &str, max_vertices: usize) -> Result<Graph, Graph6Error> {
    let text = text.trim();
    let bytes = text.strip_prefix(HEADER).unwrap_or(text).as_bytes();
    if let Some(position) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(Graph6Error::BadCharacter {
            position,
            byte: bytes[position],
        });
    }
    let (n, offset) = size_prefix(bytes)?;
    if n > max_vertices {
        return Err(GraphError::TooManyVertices { n, limit: max_vertices }.into());
    }
    let bits = n * n.saturating_sub(1) / 2;
    let expected = offset + bits.div_ceil(6);
    if bytes.len() != expected {
        return Err(Graph6Error::BadLength {
            expected,
            got: bytes.len(),
        });
    }
    let body = &bytes[offset..];
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    if (bits..body.len() * 6).any(bit) {
        return Err(Graph6Error::NonzeroPadding);
    }
    let mut pairs = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                pairs.push((i, j));
            }
            k += 1;
        }
    }
    Ok(Graph::with_limit(n, &pairs, max_vertices)?)
}

pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    assert!(n <= MAX_ORDER, "graph6 order limit");
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.extend([12, 6, 0].map(|s| ((n >> s) & 63) as u8 + 63));
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
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
    String::from_utf8(out).expect("printable ascii")
}

/// One input line: blank lines and a bare header line are skipped.
#[derive(Debug)]
pub struct Graph6Line {
    /// 1-based line number in the input.
    pub line: usize,
    pub text: String,
    pub graph: Result<Graph, Graph6Error>,
}

/// Reads graph6 lines lazily; I/O errors end the stream with an error.
pub fn read_graph6_lines<R: BufRead>(reader: R) -> impl Iterator<Item = std::io::Result<Graph6Line>> {
    reader.lines().enumerate().filter_map(|(i, line)| match line {
        Err(e) => Some(Err(e)),
        Ok(text) => {
            let trimmed = text.trim();
            if trimmed.is_empty() || trimmed == HEADER {
                return None;
            }
            Some(Ok(Graph6Line {
                line: i + 1,
                text: trimmed.to_string(),
                graph: parse_graph6(trimmed),
            }))
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use dindex_core::families;

    #[test]
    fn spec_examples() {
        let k3 = parse_graph6("Bw").unwrap();
        assert_eq!(k3.edges(), &[(0, 1), (0, 2), (1, 2)]);
        let c4 = parse_graph6("Cl").unwrap();
        assert_eq!(c4.edges(), &[(0, 1), (0, 3), (1, 2), (2, 3)]);
        let empty = parse_graph6("A?").unwrap();
        assert_eq!((empty.n(), empty.m()), (2, 0));
        assert_eq!(write_graph6(&families::complete(3).unwrap()), "Bw");
        assert_eq!(write_graph6(&families::cycle(4).unwrap()), "Cl");
    }

    #[test]
    fn petersen_matches_nauty() {
        // geng/showg spelling of the Petersen graph with our vertex order.
        let p = families::petersen();
        let text = write_graph6(&p);
        assert_eq!(parse_graph6(&text).unwrap(), p);
        assert_eq!(text.len(), 1 + 45usize.div_ceil(6));
    }

    #[test]
    fn header_and_whitespace() {
        assert_eq!(parse_graph6(">>graph6<<Bw\n").unwrap().m(), 3);
        assert_eq!(parse_graph6("  Bw  ").unwrap().m(), 3);
    }

    #[test]
    fn errors() {
        assert_eq!(parse_graph6(""), Err(Graph6Error::Empty));
        assert_eq!(parse_graph6("Bww"), Err(Graph6Error::BadLength { expected: 2, got: 3 }));
        assert_eq!(parse_graph6("B"), Err(Graph6Error::BadLength { expected: 2, got: 1 }));
        assert_eq!(
            parse_graph6("B w"),
            Err(Graph6Error::BadCharacter { position: 1, byte: b' ' })
        );
        // K_3 uses 3 of 6 bits; setting a padding bit is rejected.
        assert_eq!(parse_graph6("Bx"), Err(Graph6Error::NonzeroPadding));
        assert_eq!(parse_graph6("~~??????????"), Err(Graph6Error::OrderTooLarge));
    }

    #[test]
    fn four_byte_form() {
        let g = families::cycle(70).unwrap();
        let text = write_graph6(&g);
        assert_eq!(&text[..4], "~?@E");
        assert_eq!(parse_graph6(&text).unwrap(), g);
        let pairs: Vec<(usize, usize)> = (1..600).map(|v| (v - 1, v)).collect();
        let big = Graph::with_limit(600, &pairs, 1000).unwrap();
        let text = write_graph6(&big);
        assert!(matches!(
            parse_graph6(&text),
            Err(Graph6Error::Graph(GraphError::TooManyVertices { n: 600, .. }))
        ));
        assert_eq!(parse_graph6_with_limit(&text, 1000).unwrap(), big);
    }

    #[test]
    fn reads_lines() {
        let input = ">>graph6<<\nBw\n\nCl\nB!\n";
        let lines: Vec<Graph6Line> = read_graph6_lines(input.as_bytes()).map(Result::unwrap).collect();
        assert_eq!(lines.iter().map(|l| l.line).collect::<Vec<_>>(), vec![2, 4, 5]);
        assert!(lines[0].graph.is_ok() && lines[1].graph.is_ok() && lines[2].graph.is_err());
    }
}
