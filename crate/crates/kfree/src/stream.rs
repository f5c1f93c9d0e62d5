use std::io::BufRead;

use kfree_core::graph6::{self, Graph6Error};
use kfree_core::Graph;

#[derive(Debug, thiserror::Error)]
pub enum StreamError {
    #[error("line {line}: {source}")]
    Parse { line: usize, source: Graph6Error },
    #[error("read failed: {0}")]
    Io(#[from] std::io::Error),
}

/// Graphs from a graph6 stream in file order. Blank lines and a leading
/// `>>graph6<<` header are skipped; the first bad line ends the stream with an error.
pub fn read_stream<R: BufRead>(reader: R) -> impl Iterator<Item = Result<Graph, StreamError>> {
    let mut failed = false;
    reader.lines().enumerate().filter_map(move |(i, line)| {
        if failed {
            return None;
        }
        let item = match line {
            Err(e) => Err(StreamError::Io(e)),
            Ok(text) => {
                let text = text.trim_end_matches('\r');
                let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
                if text.is_empty() {
                    return None;
                }
                graph6::decode(text.as_bytes()).map_err(|source| StreamError::Parse { line: i + 1, source })
            }
        };
        failed = item.is_err();
        Some(item)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reads_and_stops_at_first_error() {
        let input = b">>graph6<<Bw\n\nC~\nxx\nBw\n";
        let got: Vec<_> = read_stream(&input[..]).collect();
        assert_eq!(got.len(), 3);
        assert_eq!(got[0].as_ref().unwrap().edge_count(), 3);
        assert_eq!(got[1].as_ref().unwrap().edge_count(), 6);
        assert!(matches!(got[2], Err(StreamError::Parse { line: 4, .. })));
    }

    #[test]
    fn empty_input() {
        assert_eq!(read_stream(&b""[..]).count(), 0);
    }
}
