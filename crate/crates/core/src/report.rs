//! JSON reports written by the command-line tool.
//!
//! A report carries enough to re-check every certificate it contains:
//! the family spec (or the graph file it was computed on) and the vertex
//! ids of each certificate. See `docs/report-schema.md` for the layout.

use crate::bitset::VertexSet;
use crate::config::Caps;
use crate::error::{Error, Result};
use crate::forcing::{is_connected_zfs, is_total_zfs, is_zero_forcing, DominationSequence, ForcingTrace};
use crate::graphs::{build, io, FamilySpec, Graph};
use crate::metrics::WalkCertificate;
use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};
use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

pub const SCHEMA_VERSION: u32 = 1;

/// Where a report's graph came from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "source", rename_all = "snake_case")]
pub enum GraphSource {
    Family { spec: FamilySpec },
    File { path: PathBuf },
}

impl GraphSource {
    pub fn load(&self, caps: &Caps) -> Result<Graph> {
        match self {
            GraphSource::Family { spec } => build(spec, caps),
            GraphSource::File { path } => load_graph(path),
        }
    }
}

/// Reads a binary graph cache, falling back to the edge-list format.
pub fn load_graph(path: &Path) -> Result<Graph> {
    let bytes = std::fs::read(path)?;
    if bytes.starts_with(&io::MAGIC[..]) {
        io::read_binary(bytes.as_slice())
    } else {
        io::read_edge_list(bytes.as_slice())
    }
}

/// What a certificate is claimed to show.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    /// A leader set and the properties claimed for it.
    LeaderSet {
        vertices: Vec<usize>,
        labels: Vec<String>,
        zero_forcing: bool,
        #[serde(default)]
        total: Option<bool>,
        #[serde(default)]
        connected: Option<bool>,
    },
    /// A recorded forcing process that should blacken the whole graph.
    Trace { trace: ForcingTrace },
    Domination { sequence: DominationSequence },
    Walk { walk: WalkCertificate },
}

impl Certificate {
    pub fn leader(g: &Graph, set: &VertexSet, zero_forcing: bool) -> Self {
        Certificate::LeaderSet {
            vertices: set.to_vec(),
            labels: set.iter().map(|v| g.label(v).display()).collect(),
            zero_forcing,
            total: None,
            connected: None,
        }
    }

    /// Re-checks the certificate against `g`.
    pub fn recheck(&self, g: &Graph) -> Result<bool> {
        let n = g.v_count();
        Ok(match self {
            Certificate::LeaderSet { vertices, zero_forcing, total, connected, .. } => {
                if vertices.iter().any(|&v| v >= n) {
                    return Ok(false);
                }
                let set = VertexSet::from_ids(n, vertices.iter().copied());
                is_zero_forcing(g, &set) == *zero_forcing
                    && total.is_none_or(|t| is_total_zfs(g, &set) == t)
                    && connected.is_none_or(|c| is_connected_zfs(g, &set) == c)
            }
            Certificate::Trace { trace } => trace.replay(g).map(|b| b.is_full()).unwrap_or(false),
            Certificate::Domination { sequence } => sequence.validate(g),
            Certificate::Walk { walk } => walk.validate(g),
        })
    }
}

/// One command's output.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: u32,
    /// Command line as given.
    pub command: Vec<String>,
    pub graph: Option<GraphSource>,
    /// Computed values by name.
    pub values: Map<String, Value>,
    /// Closed-form predictions, when the family is covered.
    #[serde(default)]
    pub predicted: Option<Value>,
    /// For each value reported as exact, why it is exact: `exhaustive_search`,
    /// `bfs`, `elimination`, or `formula:<tag>` with hypotheses checked.
    #[serde(default)]
    pub exact_tags: BTreeMap<String, String>,
    #[serde(default)]
    pub certificates: Vec<Certificate>,
    /// Named checks and their outcomes.
    #[serde(default)]
    pub verdicts: BTreeMap<String, bool>,
    pub elapsed_ms: f64,
}

impl Report {
    pub fn new(command: Vec<String>, graph: Option<GraphSource>) -> Self {
        Report {
            schema_version: SCHEMA_VERSION,
            command,
            graph,
            values: Map::new(),
            predicted: None,
            exact_tags: BTreeMap::new(),
            certificates: Vec::new(),
            verdicts: BTreeMap::new(),
            elapsed_ms: 0.0,
        }
    }

    pub fn value(&mut self, key: &str, v: impl Serialize) -> &mut Self {
        self.values.insert(key.into(), serde_json::to_value(v).unwrap_or(Value::Null));
        self
    }

    pub fn exact(&mut self, key: &str, tag: impl Into<String>) -> &mut Self {
        self.exact_tags.insert(key.into(), tag.into());
        self
    }

    pub fn verdict(&mut self, key: &str, ok: bool) -> &mut Self {
        self.verdicts.insert(key.into(), ok);
        self
    }

    /// All verdicts true.
    pub fn passed(&self) -> bool {
        self.verdicts.values().all(|&b| b)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let r: Report = serde_json::from_str(s)?;
        if r.schema_version != SCHEMA_VERSION {
            return Err(Error::Format(format!(
                "report schema {} (this build reads {SCHEMA_VERSION})",
                r.schema_version
            )));
        }
        Ok(r)
    }
}

/// Outcome of re-checking a saved report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReplayOutcome {
    pub certificates: usize,
    /// Indices of certificates that failed.
    pub failed: Vec<usize>,
}

impl ReplayOutcome {
    pub fn ok(&self) -> bool {
        self.failed.is_empty()
    }
}

pub fn replay(report: &Report, caps: &Caps) -> Result<ReplayOutcome> {
    if report.certificates.is_empty() {
        return Ok(ReplayOutcome { certificates: 0, failed: vec![] });
    }
    let source = report
        .graph
        .as_ref()
        .ok_or_else(|| Error::Format("report has certificates but no graph".into()))?;
    let g = source.load(caps)?;
    let mut failed = Vec::new();
    for (i, c) in report.certificates.iter().enumerate() {
        if !c.recheck(&g)? {
            failed.push(i);
        }
    }
    Ok(ReplayOutcome { certificates: report.certificates.len(), failed })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forcing::closure;

    #[test]
    fn round_trip_and_replay() {
        let spec = FamilySpec::hamming(2, 3);
        let g = build(&spec, &Caps::default()).unwrap();
        let leader = VertexSet::from_ids(9, [0, 1, 3, 4, 6]);
        let (_, trace) = closure(&g, &leader);
        let mut r = Report::new(vec!["zf".into()], Some(GraphSource::Family { spec }));
        r.value("z", 5).exact("z", "exhaustive_search").verdict("zero_forcing", true);
        r.certificates.push(Certificate::leader(&g, &leader, true));
        r.certificates.push(Certificate::Trace { trace });
        let back = Report::from_json(&r.to_json()).unwrap();
        assert_eq!(back, r);
        let out = replay(&back, &Caps::default()).unwrap();
        assert!(out.ok(), "{out:?}");

        let mut bad = back.clone();
        bad.certificates[0] = Certificate::leader(&g, &VertexSet::from_ids(9, [0, 4, 8]), true);
        assert_eq!(replay(&bad, &Caps::default()).unwrap().failed, vec![0]);
    }

    #[test]
    fn schema_version_is_checked() {
        let mut r = Report::new(vec![], None);
        r.schema_version = 99;
        assert!(Report::from_json(&r.to_json()).is_err());
    }
}
