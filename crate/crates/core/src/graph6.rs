//! graph6 encoding (Brendan McKay's format) and newline-delimited streams.

use std::io::{self, BufRead, Write};

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

const HEADER: &[u8] = b">>graph6<<";

fn parse_err(offset: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        offset,
        message: message.into(),
    }
}

fn encode_size(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend_from_slice(&[126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
}

/// Encodes `g` as graph6 (no header, no trailing newline).
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.vertex_count();
    let mut out = Vec::with_capacity(8 + n * n / 12);
    encode_size(n, &mut out);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
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
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

fn sixbit(bytes: &[u8], at: usize) -> Result<u64> {
    match bytes.get(at) {
        Some(&b) if (63..=126).contains(&b) => Ok(u64::from(b - 63)),
        Some(&b) => Err(parse_err(at, format!("byte {b:#04x} outside the graph6 range 63..=126"))),
        None => Err(parse_err(at, "unexpected end of input")),
    }
}

/// Decodes one graph6 string. An optional `>>graph6<<` header is accepted;
/// anything after the last data byte is rejected.
pub fn decode_graph6(input: &[u8]) -> Result<Graph> {
    let start = if input.starts_with(HEADER) { HEADER.len() } else { 0 };
    let mut pos = start;
    let first = sixbit(input, pos)?;
    let n = if first < 63 {
        pos += 1;
        first as usize
    } else if sixbit(input, pos + 1)? < 63 {
        let mut n = 0u64;
        for k in 1..=3 {
            n = (n << 6) | sixbit(input, pos + k)?;
        }
        if n < 63 {
            return Err(parse_err(pos, "non-canonical 4-byte size header"));
        }
        pos += 4;
        n as usize
    } else {
        let mut n = 0u64;
        for k in 2..=7 {
            n = (n << 6) | sixbit(input, pos + k)?;
        }
        if n < 258_048 {
            return Err(parse_err(pos, "non-canonical 8-byte size header"));
        }
        pos += 8;
        n as usize
    };
    if n > MAX_VERTICES {
        return Err(parse_err(start, format!("vertex count {n} exceeds the supported bound {MAX_VERTICES}")));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let data_len = bits.div_ceil(6);
    let mut g = Graph::empty(n)?;
    let (mut i, mut j) = (0usize, 1usize);
    for k in 0..data_len {
        let word = sixbit(input, pos + k)?;
        for b in (0..6).rev() {
            let idx = k * 6 + (5 - b);
            let set = word >> b & 1 == 1;
            if idx >= bits {
                if set {
                    return Err(parse_err(pos + k, "nonzero padding bits"));
                }
                continue;
            }
            if set {
                g.insert(i, j);
            }
            i += 1;
            if i == j {
                i = 0;
                j += 1;
            }
        }
    }
    let end = pos + data_len;
    if end != input.len() {
        return Err(parse_err(end, "trailing bytes after graph6 data"));
    }
    Ok(g)
}

pub fn decode_graph6_str(s: &str) -> Result<Graph> {
    decode_graph6(s.as_bytes())
}

/// Writes one graph per line.
pub fn write_graph6_stream<'a, W, I>(mut out: W, graphs: I) -> io::Result<()>
where
    W: Write,
    I: IntoIterator<Item = &'a Graph>,
{
    for g in graphs {
        writeln!(out, "{}", encode_graph6(g))?;
    }
    Ok(())
}

/// Reads a newline-delimited graph6 stream, skipping blank lines. Parse
/// error offsets are relative to the offending line; the line number is
/// folded into the message.
pub fn read_graph6_stream<R: BufRead>(input: R) -> Result<Vec<Graph>> {
    let mut graphs = Vec::new();
    for (lineno, line) in input.lines().enumerate() {
        let line = line.map_err(|e| parse_err(0, format!("line {}: {e}", lineno + 1)))?;
        let line = line.trim_end_matches('\r');
        if line.is_empty() {
            continue;
        }
        let g = decode_graph6(line.as_bytes()).map_err(|e| match e {
            Error::Parse { offset, message } => parse_err(offset, format!("line {}: {message}", lineno + 1)),
            other => other,
        })?;
        graphs.push(g);
    }
    Ok(graphs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_complete, make_cycle};

    #[test]
    fn known_encodings() {
        assert_eq!(encode_graph6(&make_complete(3).unwrap()), "Bw");
        assert_eq!(encode_graph6(&Graph::empty(1).unwrap()), "@");
        assert_eq!(encode_graph6(&Graph::empty(0).unwrap()), "?");
        // 5-vertex example from the petgraph test suite
        let g = Graph::from_edges(5, [(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(encode_graph6(&g), "DQc");
    }

    #[test]
    fn decode_known() {
        assert_eq!(decode_graph6(b"Bw").unwrap(), make_complete(3).unwrap());
        assert_eq!(decode_graph6(b">>graph6<<Bw").unwrap(), make_complete(3).unwrap());
        let c5 = make_cycle(5).unwrap();
        assert_eq!(decode_graph6(encode_graph6(&c5).as_bytes()).unwrap(), c5);
    }

    #[test]
    fn long_header_round_trip() {
        for n in [62, 63, 64, 100, 512] {
            let g = make_cycle(n).unwrap();
            let s = encode_graph6(&g);
            if n >= 63 {
                assert_eq!(s.as_bytes()[0], 126);
            }
            assert_eq!(decode_graph6_str(&s).unwrap(), g);
        }
    }

    #[test]
    fn malformed_inputs_report_offsets() {
        // K_3 is "Bw"; a set padding bit makes it invalid
        match decode_graph6(b"Bx").unwrap_err() {
            Error::Parse { offset, .. } => assert_eq!(offset, 1),
            e => panic!("{e}"),
        }
        match decode_graph6(b"Bw?").unwrap_err() {
            Error::Parse { offset, message } => {
                assert_eq!(offset, 2);
                assert!(message.contains("trailing"));
            }
            e => panic!("{e}"),
        }
        match decode_graph6(b"C").unwrap_err() {
            Error::Parse { offset, .. } => assert_eq!(offset, 1),
            e => panic!("{e}"),
        }
        assert!(decode_graph6(b"").is_err());
        assert!(decode_graph6(b"B\n").is_err());
        // size 5 written in the long form
        assert!(decode_graph6(b"~??D").is_err());
    }

    #[test]
    fn stream_round_trip() {
        let gs = vec![make_complete(4).unwrap(), make_cycle(6).unwrap()];
        let mut buf = Vec::new();
        write_graph6_stream(&mut buf, &gs).unwrap();
        assert_eq!(read_graph6_stream(&buf[..]).unwrap(), gs);
        let err = read_graph6_stream(&b"Bw\nBx\n"[..]).unwrap_err();
        assert!(err.to_string().contains("line 2"), "{err}");
    }
}
