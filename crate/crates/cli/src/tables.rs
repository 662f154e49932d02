//! Plain-text reproductions of the result tables. Output is deterministic.

use anyhow::Result;
use boolean_fn::{apc_distance, graph_function, BooleanFunction};
use constructions::{bordered_qr, circulant_search, qr_code};
use gf4_code::code_distance;
use orbit_enum::{
    classify_up_to, decomposable_counts, distance_histogram, min_lambda, type_ii_histogram, Classification,
    ClassifyOptions, Seed, Strategy, ORBIT_COUNTS,
};
use std::collections::BTreeMap;
use std::fmt::Write as _;
use transform_engine::{function_orbit_counts, par_ihn};

#[derive(clap::ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableId {
    /// Orbit counts and graph counts by n.
    Census,
    /// Indecomposable codes by distance, all and type II.
    Distance,
    /// Decomposable and indecomposable code counts.
    Decomposable,
    /// Distances of QR and bordered QR codes.
    Qr,
    /// Best circulant graph codes.
    Circulant,
    /// Lambda_n.
    Lambda,
    /// LC orbits by PAR_IHN.
    Par,
    /// Orbits of Boolean functions under bit flips and {I,H,N}.
    FunctionOrbits,
    /// The degree-3 functions of 6 variables with APC distance 3.
    Cubic,
}

fn census(max_n: usize) -> Result<Vec<Classification>> {
    Ok(classify_up_to(max_n, &ClassifyOptions::new(Strategy::LowMem, Seed::Extensions))?)
}

pub const CUBIC_ROWS: [&str; 11] = [
    "012,03,04,13,15,24,25",
    "012,03,05,14,15,23,24,25,34",
    "023,012,04,05,13,15,23,24,25,34",
    "123,124,125,01,02,14,25,34,35,45",
    "012,013,03,04,13,15,24,25,34,35,45",
    "012,013,014,03,05,14,15,23,24,25,34",
    "012,014,024,123,134,234,03,13,15,24,25,34,45",
    "015,012,013,014,03,05,14,15,23,24,25,34,35,45",
    "025,245,012,124,023,234,04,05,13,15,23,24,35,45",
    "245,235,145,135,024,023,014,013,02,05,14,15,23,34,35,45",
    "125,145,135,245,235,012,014,013,024,023,05,13,15,24,25,34",
];

pub fn render(id: TableId, max_n: Option<usize>) -> Result<String> {
    let mut s = String::new();
    match id {
        TableId::Census => {
            let max = max_n.unwrap_or(9).min(10);
            writeln!(s, "{:>3} {:>8} {:>10}", "n", "orbits", "graphs")?;
            for c in census(max)? {
                let graphs: u64 = c.records.iter().map(|r| r.orbit_size).sum();
                writeln!(s, "{:>3} {:>8} {:>10}", c.n, c.records.len(), graphs)?;
            }
        }
        TableId::Distance => {
            let all = census(max_n.unwrap_or(9).min(10))?;
            let mut ds: Vec<u32> = all.iter().flat_map(|c| distance_histogram(&c.records).into_keys()).collect();
            ds.sort_unstable();
            ds.dedup();
            write!(s, "{:>3}", "n")?;
            for d in &ds {
                write!(s, " {:>6} {:>6}", format!("d={d}"), "II")?;
            }
            writeln!(s)?;
            for c in &all {
                let (h, t) = (distance_histogram(&c.records), type_ii_histogram(&c.records));
                write!(s, "{:>3}", c.n)?;
                for d in &ds {
                    let cell = |m: &BTreeMap<u32, u64>| m.get(d).map_or("-".to_string(), u64::to_string);
                    write!(s, " {:>6} {:>6}", cell(&h), cell(&t))?;
                }
                writeln!(s)?;
            }
        }
        TableId::Decomposable => {
            let max = max_n.unwrap_or(12).min(12);
            writeln!(s, "{:>3} {:>12} {:>12}", "n", "indecomp", "all")?;
            for n in 1..=max {
                let c = decomposable_counts(n, &ORBIT_COUNTS)?;
                writeln!(s, "{:>3} {:>12} {:>12}", n, ORBIT_COUNTS[n - 1], c.total)?;
            }
        }
        TableId::Qr => {
            writeln!(s, "{:>3} {:>5} {:>7}", "m", "d", "d(m+1)")?;
            for m in [5u32, 9, 13, 17, 25, 29] {
                if max_n.is_some_and(|x| (m as usize) > x) {
                    continue;
                }
                let d = code_distance(&qr_code(m)?);
                let db = code_distance(&bordered_qr(m)?);
                writeln!(s, "{m:>3} {d:>5} {db:>7}")?;
            }
        }
        TableId::Circulant => {
            writeln!(s, "{:>3} {:>3} {:>6}  first row", "n", "d", "degree")?;
            for n in 2..=max_n.unwrap_or(16).min(24) {
                let hits = circulant_search(n, None);
                let h = hits[0];
                writeln!(s, "{n:>3} {:>3} {:>6}  {}", h.distance, h.degree, h.row)?;
            }
        }
        TableId::Lambda => {
            writeln!(s, "{:>3} {:>7}", "n", "Lambda")?;
            for c in census(max_n.unwrap_or(9).min(10))?.iter().skip(1) {
                writeln!(s, "{:>3} {:>7}", c.n, min_lambda(&c.records).unwrap_or(0))?;
            }
        }
        TableId::Par => {
            let all = census(max_n.unwrap_or(6).min(8))?;
            writeln!(s, "{:>3}  PAR_IHN: orbits", "n")?;
            for c in &all {
                let mut by: BTreeMap<u64, usize> = BTreeMap::new();
                for r in &c.records {
                    let p = par_ihn(&graph_function(&r.graph()?))?;
                    *by.entry(p.round() as u64).or_default() += 1;
                }
                let cells: Vec<String> = by.iter().map(|(p, k)| format!("{p}:{k}")).collect();
                writeln!(s, "{:>3}  {}", c.n, cells.join(" "))?;
            }
        }
        TableId::FunctionOrbits => {
            writeln!(s, "{:>3} {:>8} {:>8}", "n", "O1", "O2")?;
            for n in 2..=max_n.unwrap_or(4).min(5) {
                let c = function_orbit_counts(n)?;
                writeln!(s, "{:>3} {:>8} {:>8}", n, c.bit_flip, c.bit_flip_ihn)?;
            }
        }
        TableId::Cubic => {
            writeln!(s, "{:>2} {:>8}  function", "d", "PAR_IHN")?;
            for row in CUBIC_ROWS {
                let f = BooleanFunction::parse_anf(row, Some(6))?;
                writeln!(s, "{:>2} {:>8}  {row}", apc_distance(&f), crate::format_number(par_ihn(&f)?))?;
            }
        }
    }
    Ok(s)
}
