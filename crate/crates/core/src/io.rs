//! Flat-file formats: adjacency CSV, histogram and trace CSVs, and the JSON run
//! record written by the `mcsa` command.
//!
//! The adjacency CSV has `n` LF-terminated rows of `n` comma-separated 0/1 cells,
//! no header and no trailing comma. Loading validates the regular-graph
//! invariants.

use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Read, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::experiment::SwitchProgression;
use crate::graph::{AdjacencyMatrix, RegularGraph};
use crate::mcsa::{McsaConfig, RunRecord};

pub fn write_adjacency_csv<W: Write>(graph: &RegularGraph, mut out: W) -> Result<()> {
    let n = graph.order();
    let mut line = String::with_capacity(2 * n);
    for i in 0..n {
        line.clear();
        for (j, &x) in graph.matrix().row(i).iter().enumerate() {
            if j > 0 {
                line.push(',');
            }
            line.push(if x == 1 { '1' } else { '0' });
        }
        line.push('\n');
        out.write_all(line.as_bytes())?;
    }
    out.flush()?;
    Ok(())
}

pub fn read_adjacency_csv<R: Read>(input: R) -> Result<RegularGraph> {
    let mut rows: Vec<Vec<u8>> = Vec::new();
    for (idx, line) in BufReader::new(input).lines().enumerate() {
        let line = line?;
        let line = line.trim_end_matches('\r');
        if line.trim().is_empty() {
            continue;
        }
        let row = line
            .split(',')
            .map(|cell| match cell.trim() {
                "0" => Ok(0),
                "1" => Ok(1),
                other => Err(Error::Parse {
                    line: idx + 1,
                    message: format!("expected 0 or 1, found {other:?}"),
                }),
            })
            .collect::<Result<Vec<u8>>>()?;
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(Error::Parse {
            line: 0,
            message: "empty adjacency file".into(),
        });
    }
    RegularGraph::from_adjacency(AdjacencyMatrix::from_rows(&rows)?)
}

pub fn save_adjacency(graph: &RegularGraph, path: impl AsRef<Path>) -> Result<()> {
    write_adjacency_csv(graph, BufWriter::new(File::create(path)?))
}

pub fn load_adjacency(path: impl AsRef<Path>) -> Result<RegularGraph> {
    read_adjacency_csv(File::open(path)?)
}

pub fn write_histogram_csv<W: Write>(bins: &[(f64, usize)], mut out: W) -> Result<()> {
    writeln!(out, "bin_lo,count")?;
    for (lo, count) in bins {
        writeln!(out, "{lo},{count}")?;
    }
    out.flush()?;
    Ok(())
}

pub fn write_trace_csv<W: Write>(record: &RunRecord, mut out: W) -> Result<()> {
    writeln!(out, "step,best_lambda2,coldest_temperature,seconds")?;
    for p in &record.trace {
        writeln!(
            out,
            "{},{},{},{}",
            p.step, p.best_lambda2, p.coldest_temperature, p.seconds
        )?;
    }
    out.flush()?;
    Ok(())
}

pub fn write_progression_csv<W: Write>(progression: &SwitchProgression, mut out: W) -> Result<()> {
    writeln!(out, "index,lambda2")?;
    for (i, l) in progression.lambdas.iter().enumerate() {
        writeln!(out, "{i},{l}")?;
    }
    out.flush()?;
    Ok(())
}

/// Everything needed to reproduce and audit an `mcsa` run.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunRecordJson {
    pub config: McsaConfig,
    pub best_lambda2: f64,
    /// File name of the adjacency CSV holding the best graph, relative to the record.
    pub best_graph_file: String,
    pub record: RunRecord,
}

impl RunRecordJson {
    pub fn to_writer<W: Write>(&self, out: W) -> Result<()> {
        serde_json::to_writer_pretty(out, self)?;
        Ok(())
    }

    pub fn from_reader<R: Read>(input: R) -> Result<Self> {
        Ok(serde_json::from_reader(input)?)
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        let mut out = BufWriter::new(File::create(path)?);
        self.to_writer(&mut out)?;
        out.write_all(b"\n")?;
        out.flush()?;
        Ok(())
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        Self::from_reader(BufReader::new(File::open(path)?))
    }
}
