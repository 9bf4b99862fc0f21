//! The digraph6 interchange format for orders up to 62.
//!
//! Layout: `'&'`, one character `n + 63`, then the `n²` adjacency bits in
//! row-major order packed big-endian into 6-bit groups, each offset by 63, the
//! last group zero-padded.

use super::{Digraph, MAX_N};
use crate::error::{Error, Result};

const LARGEST_SHORT_ORDER: usize = 62;

pub fn format_digraph6(g: &Digraph) -> String {
    let n = g.n();
    let mut s = String::with_capacity(2 + (n * n).div_ceil(6));
    s.push('&');
    s.push((n as u8 + 63) as char);
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 0..n {
        for w in 0..n {
            acc = acc << 1 | g.has_arc(v, w) as u8;
            filled += 1;
            if filled == 6 {
                s.push((acc + 63) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        s.push(((acc << (6 - filled)) + 63) as char);
    }
    s
}

pub fn parse_digraph6(text: &str) -> Result<Digraph> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    if bytes.len() < 2 || bytes[0] != b'&' {
        return Err(Error::MalformedHeader);
    }
    let n = match bytes[1] {
        c @ 63..=125 => (c - 63) as usize,
        126 => {
            // Long orders are well-formed digraph6 but beyond what we store.
            return Err(Error::UnsupportedSize(LARGEST_SHORT_ORDER + 1));
        }
        _ => return Err(Error::MalformedHeader),
    };
    if n > LARGEST_SHORT_ORDER {
        return Err(Error::MalformedHeader);
    }
    if n == 0 || n > MAX_N {
        return Err(Error::UnsupportedSize(n));
    }
    let body = &bytes[2..];
    let expected = (n * n).div_ceil(6);
    if body.len() < expected {
        return Err(Error::TruncatedBits { expected, found: body.len() });
    }
    if body.len() > expected {
        return Err(Error::TrailingData(body.len() - expected));
    }
    let mut masks = vec![0u32; n];
    let mut k = 0;
    for &c in body {
        if !(63..=126).contains(&c) {
            return Err(Error::InvalidCharacter(c as char));
        }
        let group = c - 63;
        for shift in (0..6).rev() {
            if k < n * n {
                if group >> shift & 1 == 1 {
                    masks[k / n] |= 1 << (k % n);
                }
                k += 1;
            }
        }
    }
    Digraph::from_out_masks(&masks)
}

/// Parses newline-delimited digraph6, skipping blank lines and `#` comments.
pub fn parse_digraph6_stream(text: &str) -> Result<Vec<Digraph>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(parse_digraph6)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hand_encoded_examples() {
        let arc = Digraph::from_arcs(2, &[(0, 1)], true).unwrap();
        assert_eq!(format_digraph6(&arc), "&AO");
        assert_eq!(format_digraph6(&Digraph::empty(1).unwrap()), "&@?");
        let tri = Digraph::from_arcs(3, &[(0, 1), (1, 2), (2, 0)], true).unwrap();
        assert_eq!(format_digraph6(&tri), "&BP_");
        assert_eq!(parse_digraph6("&BP_").unwrap(), tri);
        assert_eq!(parse_digraph6("&AO\n").unwrap(), arc);
    }

    #[test]
    fn errors() {
        assert_eq!(parse_digraph6(""), Err(Error::MalformedHeader));
        assert_eq!(parse_digraph6("AO"), Err(Error::MalformedHeader));
        assert_eq!(parse_digraph6("&B"), Err(Error::TruncatedBits { expected: 2, found: 0 }));
        assert_eq!(parse_digraph6("&BP_?"), Err(Error::TrailingData(1)));
        assert_eq!(parse_digraph6("&?"), Err(Error::UnsupportedSize(0)));
        assert_eq!(parse_digraph6("&~"), Err(Error::UnsupportedSize(63)));
        assert!(matches!(parse_digraph6("&_"), Err(Error::TruncatedBits { expected: 171, .. })));
        // a set diagonal bit is a loop
        assert_eq!(parse_digraph6("&@_"), Err(Error::LoopArc(0)));
        assert_eq!(parse_digraph6("&A "), Err(Error::InvalidCharacter(' ')));
    }

    #[test]
    fn digons_clear_the_oriented_flag() {
        let g = parse_digraph6(&format_digraph6(&Digraph::from_arcs(2, &[(0, 1), (1, 0)], false).unwrap())).unwrap();
        assert!(g.has_digon());
        assert!(!g.is_oriented());
    }

    #[test]
    fn stream_skips_comments() {
        let gs = parse_digraph6_stream("# fixture\n&AO\n\n&@?\n").unwrap();
        assert_eq!(gs.len(), 2);
    }
}
