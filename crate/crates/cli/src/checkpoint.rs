//! Resumable long runs. A checkpoint is the census format (or hit lines)
//! behind a one-line `#` progress header, rewritten after every chunk.

use crate::{domain, Failure};
use constructions::{CirculantHit, CirculantRow};
use gf4_code::{code_distance_transitive, distance_at_least, GraphCode};
use graph_core::Graph;
use orbit_enum::{
    auto_cutoff, bucket_by_pwd, classify_seeds, read_census, seed_graphs, sort_records, ClassifyOptions,
    OrbitRecord, Seed,
};
use rayon::prelude::*;
use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

fn partial_path(out: &Path) -> PathBuf {
    let mut s = out.as_os_str().to_owned();
    s.push(".partial");
    PathBuf::from(s)
}

fn write_atomic(path: &Path, text: &str) -> Result<(), Failure> {
    let mut tmp = path.as_os_str().to_owned();
    tmp.push(".tmp");
    fs::write(&tmp, text).map_err(domain)?;
    fs::rename(&tmp, path).map_err(domain)
}

fn header_fields(line: &str) -> BTreeMap<String, String> {
    line.trim_start_matches('#')
        .split_whitespace()
        .filter_map(|t| t.split_once('='))
        .map(|(a, b)| (a.to_string(), b.to_string()))
        .collect()
}

fn seed_name(s: Seed) -> &'static str {
    match s {
        Seed::AllConnected => "all",
        Seed::Extensions => "ext",
    }
}

pub struct ClassifyRun {
    pub records: Vec<OrbitRecord>,
    pub pwd_cutoff: usize,
    pub buckets: usize,
    /// Buckets taken from an earlier checkpoint.
    pub resumed: usize,
}

/// Classification in chunks of buckets. With `out`, progress goes to
/// `out.partial` after each chunk and a matching partial file is resumed.
pub fn classify_resumable(n: usize, opts: &ClassifyOptions, out: Option<&Path>) -> Result<ClassifyRun, Failure> {
    let seeds = seed_graphs(n, opts.seed).map_err(domain)?;
    let p = opts.pwd_cutoff.unwrap_or_else(|| auto_cutoff(&seeds, 4 * rayon::current_num_threads()));
    let buckets: Vec<Vec<Graph>> = bucket_by_pwd(seeds, p).into_values().collect();
    let total = buckets.len();
    let mut records = Vec::new();
    let mut done = 0;
    let partial = out.map(partial_path);
    if let Some(path) = partial.as_deref().filter(|p| p.exists()) {
        let text = fs::read_to_string(path).map_err(domain)?;
        let head = header_fields(text.lines().next().unwrap_or(""));
        let same = head.get("n") == Some(&n.to_string())
            && head.get("p") == Some(&p.to_string())
            && head.get("seed").map(String::as_str) == Some(seed_name(opts.seed))
            && head.get("buckets") == Some(&total.to_string());
        if same {
            done = head.get("done").and_then(|d| d.parse().ok()).unwrap_or(0).min(total);
            let body = text.split_once('\n').map_or("", |(_, rest)| rest);
            records = read_census(body.as_bytes()).map_err(domain)?;
        }
    }
    let resumed = done;
    let mut bucket_opts = opts.clone();
    bucket_opts.pwd_cutoff = Some(p);
    let chunk = 4 * rayon::current_num_threads();
    while done < total {
        let end = (done + chunk).min(total);
        let graphs: Vec<Graph> = buckets[done..end].iter().flatten().copied().collect();
        records.extend(classify_seeds(n, graphs, &bucket_opts).map_err(domain)?.records);
        done = end;
        if let Some(path) = &partial {
            let mut text = format!("# qgc classify n={n} p={p} seed={} buckets={total} done={done}\n", seed_name(opts.seed));
            for r in &records {
                text.push_str(&serde_json::to_string(r).map_err(domain)?);
                text.push('\n');
            }
            write_atomic(path, &text)?;
        }
    }
    sort_records(&mut records);
    if let (Some(out), Some(partial)) = (out, &partial) {
        let mut buf = Vec::new();
        orbit_enum::write_census(&mut buf, &records).map_err(domain)?;
        fs::write(out, buf).map_err(domain)?;
        let _ = fs::remove_file(partial);
    }
    Ok(ClassifyRun { records, pwd_cutoff: p, buckets: total, resumed })
}

const CIRCULANT_CHUNK: u32 = 1 << 12;

fn hit_line(h: &CirculantHit) -> String {
    format!("{} d={} degree={}", h.row, h.distance, h.degree)
}

fn parse_hit(line: &str) -> Option<CirculantHit> {
    let mut parts = line.split_whitespace();
    let row: CirculantRow = parts.next()?.parse().ok()?;
    let f = header_fields(&parts.collect::<Vec<_>>().join(" "));
    Some(CirculantHit { row, distance: f.get("d")?.parse().ok()?, degree: f.get("degree")?.parse().ok()? })
}

/// Same result as the library sweep, done in chunks of rows so that an
/// interrupted run can resume from `out.partial`.
pub fn search_circulant_resumable(n: usize, target: Option<u32>, out: Option<&Path>) -> Result<Vec<CirculantHit>, Failure> {
    if !(2..=32).contains(&n) {
        return Err(Failure::Usage(format!("circulant length {n} out of range 2..=32")));
    }
    let halves = 1u32 << (n / 2);
    let target_text = target.map_or("none".to_string(), |t| t.to_string());
    let partial = out.map(partial_path);
    let mut hits: Vec<CirculantHit> = Vec::new();
    let mut next = 0u32;
    if let Some(path) = partial.as_deref().filter(|p| p.exists()) {
        let text = fs::read_to_string(path).map_err(domain)?;
        let mut lines = text.lines();
        let head = header_fields(lines.next().unwrap_or(""));
        if head.get("n") == Some(&n.to_string()) && head.get("target") == Some(&target_text) {
            next = head.get("next").and_then(|d| d.parse().ok()).unwrap_or(0).min(halves);
            hits = lines.filter_map(parse_hit).collect();
        }
    }
    let mut floor = target.unwrap_or_else(|| hits.iter().map(|h| h.distance).max().unwrap_or(1));
    while next < halves {
        let end = next.saturating_add(CIRCULANT_CHUNK).min(halves);
        let found: Vec<CirculantHit> = (next..end)
            .into_par_iter()
            .filter_map(|half| {
                let row = CirculantRow::from_half(n, half);
                let degree = row.degree();
                if degree + 1 < floor {
                    return None;
                }
                let code = GraphCode::new(row.graph());
                if !distance_at_least(&code, floor, true) {
                    return None;
                }
                Some(CirculantHit { row, distance: code_distance_transitive(&code), degree })
            })
            .collect();
        hits.extend(found);
        if target.is_none() {
            floor = hits.iter().map(|h| h.distance).max().unwrap_or(1);
            hits.retain(|h| h.distance == floor);
        }
        next = end;
        if let Some(path) = &partial {
            let mut text = format!("# qgc search-circulant n={n} target={target_text} next={next} of={halves}\n");
            for h in &hits {
                text.push_str(&hit_line(h));
                text.push('\n');
            }
            write_atomic(path, &text)?;
        }
    }
    hits.sort_by(|a, b| a.degree.cmp(&b.degree).then(a.row.cmp(&b.row)));
    if let (Some(out), Some(partial)) = (out, &partial) {
        let text: String = hits.iter().map(|h| hit_line(h) + "\n").collect();
        fs::write(out, text).map_err(domain)?;
        let _ = fs::remove_file(partial);
    }
    Ok(hits)
}
