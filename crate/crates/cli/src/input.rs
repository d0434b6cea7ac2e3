use std::fs::File;
use std::io::{BufRead, BufReader};

use rck_core::{parse_graph6, Graph};

use crate::args::InputArgs;
use crate::CliError;

/// Graphs handed to workers at a time; bounds memory on long streams.
pub const BATCH: usize = 256;

/// A parsed input graph with its position in the stream.
pub struct Item {
    pub index: usize,
    pub g6: String,
    pub graph: Graph,
}

/// Streams graphs from the source named by `args`, in batches.
pub struct Source<'a> {
    lines: Option<Box<dyn BufRead + 'a>>,
    single: Option<Graph>,
    pending: Option<CliError>,
    line_no: usize,
    index: usize,
}

impl<'a> Source<'a> {
    pub fn open(args: &InputArgs, stdin: &'a mut dyn BufRead) -> Result<Self, CliError> {
        let mut source = Source {
            lines: None,
            single: None,
            pending: None,
            line_no: 0,
            index: 0,
        };
        if let Some(c) = &args.construct {
            source.single = Some(c.build()?);
        } else if let Some(path) = &args.input {
            source.lines = Some(Box::new(BufReader::new(File::open(path)?)));
        } else {
            source.lines = Some(Box::new(stdin));
        }
        Ok(source)
    }

    /// The next batch, empty at the end of input. A malformed line ends the
    /// batch early: the graphs before it are returned first and the error on
    /// the following call.
    pub fn next_batch(&mut self) -> Result<Vec<Item>, CliError> {
        if let Some(err) = self.pending.take() {
            return Err(err);
        }
        let mut batch = Vec::new();
        if let Some(graph) = self.single.take() {
            batch.push(self.item(rck_core::to_graph6(&graph), graph));
            return Ok(batch);
        }
        let Some(lines) = self.lines.as_mut() else {
            return Ok(batch);
        };
        let mut line = String::new();
        while batch.len() < BATCH {
            line.clear();
            if lines.read_line(&mut line)? == 0 {
                break;
            }
            self.line_no += 1;
            let text = line.trim();
            if text.is_empty() || text == ">>graph6<<" {
                continue;
            }
            match parse_graph6(text) {
                Ok(graph) => {
                    let g6 = text.trim_start_matches(">>graph6<<").to_string();
                    batch.push(Item {
                        index: self.index,
                        g6,
                        graph,
                    });
                    self.index += 1;
                }
                Err(source) => {
                    let err = CliError::Parse {
                        line: self.line_no,
                        source,
                    };
                    if batch.is_empty() {
                        return Err(err);
                    }
                    self.pending = Some(err);
                    break;
                }
            }
        }
        Ok(batch)
    }

    fn item(&mut self, g6: String, graph: Graph) -> Item {
        self.index += 1;
        Item {
            index: self.index - 1,
            g6,
            graph,
        }
    }
}
