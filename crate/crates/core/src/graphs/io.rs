//! Graph persistence.
//!
//! Two formats:
//!
//! * **Binary cache** (`.zfg`): little-endian, in order
//!   `b"ZFGRAPH\0"`, `u32` version (1), `u64` vertex count,
//!   `u32` length + family spec JSON (`null` for anonymous graphs),
//!   the adjacency rows as packed `u64` words (`ceil(v/64)` per row),
//!   `u32` length + vertex label JSON array.
//! * **Edge list** (text): header comment lines
//!   `# vertices <v>`, optionally `# spec <json>` and `# labels <json>`,
//!   then one `u v` pair per line with `u < v`. Other `#` lines and blank
//!   lines are ignored on import.

use super::{FamilySpec, Graph, VertexLabel};
use crate::bitset::{words_for, VertexSet};
use crate::error::{Error, Result};
use std::io::{BufRead, Read, Write};
use std::path::Path;

pub const MAGIC: &[u8; 8] = b"ZFGRAPH\0";
pub const VERSION: u32 = 1;

pub fn write_binary<W: Write>(g: &Graph, mut w: W) -> Result<()> {
    w.write_all(MAGIC)?;
    w.write_all(&VERSION.to_le_bytes())?;
    w.write_all(&(g.v_count() as u64).to_le_bytes())?;
    let spec = serde_json::to_vec(&g.spec())?;
    w.write_all(&(spec.len() as u32).to_le_bytes())?;
    w.write_all(&spec)?;
    for row in g.rows() {
        for word in row.words() {
            w.write_all(&word.to_le_bytes())?;
        }
    }
    let labels = serde_json::to_vec(g.labels())?;
    w.write_all(&(labels.len() as u32).to_le_bytes())?;
    w.write_all(&labels)?;
    w.flush()?;
    Ok(())
}

fn read_exact<R: Read>(r: &mut R, buf: &mut [u8], what: &str) -> Result<()> {
    r.read_exact(buf)
        .map_err(|e| Error::Format(format!("truncated {what}: {e}")))
}

fn read_u32<R: Read>(r: &mut R, what: &str) -> Result<u32> {
    let mut b = [0u8; 4];
    read_exact(r, &mut b, what)?;
    Ok(u32::from_le_bytes(b))
}

fn read_u64<R: Read>(r: &mut R, what: &str) -> Result<u64> {
    let mut b = [0u8; 8];
    read_exact(r, &mut b, what)?;
    Ok(u64::from_le_bytes(b))
}

pub fn read_binary<R: Read>(mut r: R) -> Result<Graph> {
    let mut magic = [0u8; 8];
    read_exact(&mut r, &mut magic, "magic")?;
    if &magic != MAGIC {
        return Err(Error::Format("bad magic".into()));
    }
    let version = read_u32(&mut r, "version")?;
    if version != VERSION {
        return Err(Error::Format(format!("unsupported version {version}")));
    }
    let v = usize::try_from(read_u64(&mut r, "vertex count")?)
        .map_err(|_| Error::Format("vertex count too large".into()))?;
    let spec_len = read_u32(&mut r, "spec length")? as usize;
    let mut spec_buf = vec![0u8; spec_len];
    read_exact(&mut r, &mut spec_buf, "spec")?;
    let spec: Option<FamilySpec> = serde_json::from_slice(&spec_buf)?;
    let wpr = words_for(v);
    let mut adj = Vec::with_capacity(v);
    for _ in 0..v {
        let mut words = Vec::with_capacity(wpr);
        for _ in 0..wpr {
            words.push(read_u64(&mut r, "adjacency")?);
        }
        adj.push(VertexSet::from_words(v, words));
    }
    let label_len = read_u32(&mut r, "label length")? as usize;
    let mut label_buf = vec![0u8; label_len];
    read_exact(&mut r, &mut label_buf, "labels")?;
    let labels: Vec<VertexLabel> = serde_json::from_slice(&label_buf)?;
    Graph::from_parts(adj, labels, spec).map_err(|e| Error::Format(e.to_string()))
}

pub fn save(g: &Graph, path: &Path) -> Result<()> {
    let f = std::fs::File::create(path)?;
    write_binary(g, std::io::BufWriter::new(f))
}

pub fn load(path: &Path) -> Result<Graph> {
    let f = std::fs::File::open(path)?;
    read_binary(std::io::BufReader::new(f))
}

pub fn write_edge_list<W: Write>(g: &Graph, mut w: W) -> Result<()> {
    writeln!(w, "# vertices {}", g.v_count())?;
    if let Some(spec) = g.spec() {
        writeln!(w, "# spec {}", serde_json::to_string(spec)?)?;
    }
    writeln!(w, "# labels {}", serde_json::to_string(g.labels())?)?;
    for (u, v) in g.edges() {
        writeln!(w, "{u} {v}")?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_edge_list<R: BufRead>(r: R) -> Result<Graph> {
    let mut v_count = None;
    let mut spec = None;
    let mut labels = None;
    let mut edges = Vec::new();
    for (lineno, line) in r.lines().enumerate() {
        let line = line?;
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let bad = |msg: &str| Error::Format(format!("line {}: {msg}", lineno + 1));
        if let Some(rest) = line.strip_prefix('#') {
            let rest = rest.trim_start();
            if let Some(x) = rest.strip_prefix("vertices ") {
                v_count = Some(x.trim().parse::<usize>().map_err(|_| bad("bad vertex count"))?);
            } else if let Some(x) = rest.strip_prefix("spec ") {
                spec = Some(serde_json::from_str::<FamilySpec>(x)?);
            } else if let Some(x) = rest.strip_prefix("labels ") {
                labels = Some(serde_json::from_str::<Vec<VertexLabel>>(x)?);
            }
            continue;
        }
        let mut it = line.split_whitespace().map(str::parse::<usize>);
        match (it.next(), it.next(), it.next()) {
            (Some(Ok(u)), Some(Ok(v)), None) => edges.push((u, v)),
            _ => return Err(bad("expected `u v`")),
        }
    }
    let v_count = match v_count {
        Some(v) => v,
        None => edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0),
    };
    let g = Graph::from_edges(v_count, &edges)?;
    let labels = labels.unwrap_or_else(|| g.labels().to_vec());
    Graph::from_parts(g.rows().to_vec(), labels, spec)
}

pub fn export_edge_list(g: &Graph, path: &Path) -> Result<()> {
    let f = std::fs::File::create(path)?;
    write_edge_list(g, std::io::BufWriter::new(f))
}

pub fn import_edge_list(path: &Path) -> Result<Graph> {
    let f = std::fs::File::open(path)?;
    read_edge_list(std::io::BufReader::new(f))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::Caps;
    use crate::graphs::build;

    #[test]
    fn binary_round_trip() {
        for spec in [
            FamilySpec::johnson(5, 2, &[0]),
            FamilySpec::grassmann(3, 1, 3, &[0]),
            FamilySpec::hamming(3, 3),
        ] {
            let g = build(&spec, &Caps::default()).unwrap();
            let mut buf = Vec::new();
            write_binary(&g, &mut buf).unwrap();
            assert_eq!(read_binary(buf.as_slice()).unwrap(), g);
        }
    }

    #[test]
    fn binary_rejects_corruption() {
        let g = Graph::cycle(5);
        let mut buf = Vec::new();
        write_binary(&g, &mut buf).unwrap();
        assert!(read_binary(&buf[..buf.len() - 3]).is_err());
        let mut bad = buf.clone();
        bad[0] = b'X';
        assert!(read_binary(bad.as_slice()).is_err());
    }

    #[test]
    fn edge_list_round_trip() {
        let g = build(&FamilySpec::johnson(4, 2, &[1]), &Caps::default()).unwrap();
        let mut buf = Vec::new();
        write_edge_list(&g, &mut buf).unwrap();
        assert_eq!(read_edge_list(buf.as_slice()).unwrap(), g);
        let plain = read_edge_list("0 1\n1 2\n\n# comment\n".as_bytes()).unwrap();
        assert_eq!(plain, Graph::path(3));
        assert!(read_edge_list("0 x\n".as_bytes()).is_err());
    }
}
