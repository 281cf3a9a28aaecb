//! Line-oriented corpus input: graph6 files or standard input, one graph
//! per line, streamed so corpora never need to reside in memory.

use std::fs::File;
use std::io::{self, BufRead, BufReader};
use std::path::Path;

/// Optional header some graph6 tools prepend, either on its own line or
/// glued to the first graph.
const GRAPH6_HEADER: &[u8] = b">>graph6<<";

/// Opens `spec` as a buffered byte stream; `"-"` means standard input.
pub fn open_input(spec: &str) -> io::Result<Box<dyn BufRead>> {
    if spec == "-" {
        Ok(Box::new(io::stdin().lock()))
    } else {
        let file = File::open(Path::new(spec))?;
        Ok(Box::new(BufReader::new(file)))
    }
}

/// Iterator over non-blank input lines as raw bytes, numbered from 1.
///
/// Line terminators (`\n`, `\r\n`) and surrounding ASCII whitespace are
/// stripped — graph6 bytes are all printable, so whitespace is never part
/// of an encoding. A `>>graph6<<` header is removed wherever it appears at
/// the start of a line. Blank lines are skipped but still counted.
#[derive(Debug)]
pub struct NumberedLines<R> {
    reader: R,
    next_line: u64,
    done: bool,
}

impl<R: BufRead> NumberedLines<R> {
    pub fn new(reader: R) -> Self {
        NumberedLines { reader, next_line: 0, done: false }
    }
}

impl<R: BufRead> Iterator for NumberedLines<R> {
    type Item = io::Result<(u64, Vec<u8>)>;

    fn next(&mut self) -> Option<Self::Item> {
        while !self.done {
            let mut raw = Vec::new();
            match self.reader.read_until(b'\n', &mut raw) {
                Err(e) => {
                    self.done = true;
                    return Some(Err(e));
                }
                Ok(0) => {
                    self.done = true;
                    return None;
                }
                Ok(_) => {}
            }
            self.next_line += 1;
            let mut line: &[u8] = raw.trim_ascii();
            if let Some(rest) = line.strip_prefix(GRAPH6_HEADER) {
                line = rest.trim_ascii();
            }
            if !line.is_empty() {
                return Some(Ok((self.next_line, line.to_vec())));
            }
        }
        None
    }
}

/// Convenience constructor: numbered lines of a file or of standard input.
pub fn numbered_lines(spec: &str) -> io::Result<NumberedLines<Box<dyn BufRead>>> {
    Ok(NumberedLines::new(open_input(spec)?))
}

/// Renders a corpus line as text for reports and diagnostics. graph6 is
/// ASCII; anything else is replaced rather than trusted.
#[must_use]
pub fn line_text(line: &[u8]) -> String {
    String::from_utf8_lossy(line).into_owned()
}
