use crate::OrbitError;
use gf4_code::{code_distance, code_type, partial_weight_distribution, CodeType, GraphCode};
use graph_core::{graph6, Graph};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::{BufRead, Write};

/// One LC orbit: representative, size and code parameters.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OrbitRecord {
    pub g6: String,
    pub n: usize,
    pub orbit_size: u64,
    pub d: u32,
    #[serde(rename = "type")]
    pub code_type: String,
    pub pwd: Vec<u64>,
    pub lambda: usize,
}

impl OrbitRecord {
    /// Record for the orbit represented by `rep`; `p` is the weight
    /// distribution cutoff.
    pub fn new(rep: &Graph, orbit_size: u64, lambda: usize, p: usize) -> OrbitRecord {
        let code = GraphCode::new(*rep);
        OrbitRecord {
            g6: graph6::encode(rep),
            n: rep.n(),
            orbit_size,
            d: code_distance(&code),
            code_type: type_label(code_type(&code)).to_string(),
            pwd: partial_weight_distribution(&code, p).counts,
            lambda,
        }
    }

    pub fn graph(&self) -> Result<Graph, OrbitError> {
        graph6::decode(&self.g6).map_err(|e| OrbitError::Census { line: 0, msg: e.to_string() })
    }

    pub fn is_type_ii(&self) -> bool {
        self.code_type == "II"
    }

    /// Recomputes distance, type and size from the representative.
    pub fn check(&self) -> Result<(), String> {
        let g = self.graph().map_err(|e| e.to_string())?;
        let code = GraphCode::new(g);
        if g.n() != self.n || self.orbit_size == 0 {
            return Err(format!("{}: bad n or orbit size", self.g6));
        }
        if code_distance(&code) != self.d || type_label(code_type(&code)) != self.code_type {
            return Err(format!("{}: distance or type does not match", self.g6));
        }
        Ok(())
    }
}

pub fn type_label(t: CodeType) -> &'static str {
    match t {
        CodeType::TypeI => "I",
        CodeType::TypeII => "II",
    }
}

pub fn write_census<W: Write>(mut w: W, records: &[OrbitRecord]) -> Result<(), OrbitError> {
    for r in records {
        serde_json::to_writer(&mut w, r).map_err(std::io::Error::from)?;
        w.write_all(b"\n")?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_census<R: BufRead>(r: R) -> Result<Vec<OrbitRecord>, OrbitError> {
    let mut out = Vec::new();
    for (i, line) in r.lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let rec: OrbitRecord = serde_json::from_str(&line)
            .map_err(|e| OrbitError::Census { line: i + 1, msg: e.to_string() })?;
        out.push(rec);
    }
    Ok(out)
}

/// Orbit counts by distance.
pub fn distance_histogram(records: &[OrbitRecord]) -> BTreeMap<u32, u64> {
    let mut h = BTreeMap::new();
    for r in records {
        *h.entry(r.d).or_insert(0) += 1;
    }
    h
}

/// Type II orbit counts by distance.
pub fn type_ii_histogram(records: &[OrbitRecord]) -> BTreeMap<u32, u64> {
    distance_histogram(&records.iter().filter(|r| r.is_type_ii()).cloned().collect::<Vec<_>>())
}

/// Plain-text summary: orbit count, then counts by distance for all codes and
/// for type II codes.
pub fn summary_table(n: usize, records: &[OrbitRecord]) -> String {
    let mut s = String::new();
    let all = distance_histogram(records);
    let two = type_ii_histogram(records);
    let members: u64 = records.iter().map(|r| r.orbit_size).sum();
    writeln!(s, "n = {n}: {} orbits, {members} graphs", records.len()).unwrap();
    writeln!(s, "{:>4} {:>10} {:>10}", "d", "all", "type II").unwrap();
    for (d, c) in &all {
        writeln!(s, "{d:>4} {c:>10} {:>10}", two.get(d).copied().unwrap_or(0)).unwrap();
    }
    let total_ii: u64 = two.values().sum();
    writeln!(s, "{:>4} {:>10} {:>10}", "all", records.len(), total_ii).unwrap();
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_lines_round_trip() {
        let g = Graph::complete(3).unwrap();
        let r = OrbitRecord::new(&g, 2, 1, 3);
        assert_eq!(r.d, 2);
        assert_eq!(r.code_type, "I");
        let mut buf = Vec::new();
        write_census(&mut buf, &[r.clone(), r.clone()]).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        assert!(text.starts_with("{\"g6\":\"Bw\",\"n\":3,\"orbit_size\":2,\"d\":2,\"type\":\"I\""));
        assert_eq!(read_census(&buf[..]).unwrap(), vec![r.clone(), r]);
        assert!(matches!(read_census(&b"{}\n"[..]), Err(OrbitError::Census { line: 1, .. })));
    }
}
