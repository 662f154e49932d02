//! One line per acceptance criterion. Extended targets are reported but do not
//! affect the exit status. Set `QGC_EXTENDED=1` to also run the n = 10 census.

use boolean_fn::{apc_distance, fwht, graph_function, periodic_all, BooleanFunction};
use constructions::{bordered_qr, circulant_search, code18, is_prime, qr_code, CirculantRow};
use gf4_code::{code_distance, code_distance_transitive, code_type, naive_weight_distribution, CodeType, GraphCode};
use graph_core::{canonical_key, graph6, independence_number, Graph, GraphKey};
use num_complex::Complex64;
use orbit_enum::{
    classify_up_to, classify_with, decomposable_counts, distance_histogram, lambda, lc_orbit, min_lambda,
    type_ii_histogram, ClassifyOptions, OrbitRecord, Seed, Strategy, ORBIT_COUNTS,
};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::{Mutex, OnceLock};
use std::time::{Duration, Instant};
use transform_engine::{
    butterfly, construct2, function_orbit_counts, interlace_q, par_ihn, parse_components, Components, Matrix2,
};

const PAR_TOL: f64 = 1e-6;
const BUTTERFLY_TOL: f64 = 1e-9;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

struct Census {
    records: Vec<Vec<OrbitRecord>>,
    elapsed: Duration,
}

fn census() -> &'static Census {
    static CENSUS: OnceLock<Census> = OnceLock::new();
    CENSUS.get_or_init(|| {
        let t = Instant::now();
        let records = classify_up_to(9, &ClassifyOptions::new(Strategy::LowMem, Seed::Extensions))
            .unwrap()
            .into_iter()
            .map(|c| c.records)
            .collect();
        Census { records, elapsed: t.elapsed() }
    })
}

fn records(n: usize) -> &'static [OrbitRecord] {
    &census().records[n - 1]
}

fn reps(n: usize) -> Vec<Graph> {
    records(n).iter().map(|r| r.graph().unwrap()).collect()
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

static EXTENDED: Mutex<Vec<String>> = Mutex::new(Vec::new());

fn extended(label: &str, status: &str, detail: &str) {
    EXTENDED.lock().unwrap().push(format!("    extended {label}: {status} ({detail})"));
}

fn c1_census() -> Outcome {
    let want = [1u64, 1, 1, 2, 4, 11, 26, 101, 440];
    let got: Vec<u64> = (1..=9).map(|n| records(n).len() as u64).collect();
    ensure(got == want, || format!("orbit counts {got:?}"))?;
    let secs = census().elapsed.as_secs_f64();
    ensure(secs <= 600.0, || format!("n <= 9 took {secs:.1} s"))?;
    if std::env::var("QGC_EXTENDED").is_ok_and(|v| v == "1") {
        let t = Instant::now();
        let c = classify_with(10, &ClassifyOptions::new(Strategy::LowMem, Seed::Extensions)).unwrap();
        let secs10 = t.elapsed().as_secs_f64();
        let ok = c.records.len() == 3132 && secs10 <= 7200.0;
        extended("n=10", if ok { "PASS" } else { "FAIL" }, &format!("{} orbits in {secs10:.0} s", c.records.len()));
    } else {
        extended("n=10", "SKIPPED", "set QGC_EXTENDED=1");
    }
    Ok(format!("{got:?} in {secs:.1} s"))
}

fn c2_distances() -> Outcome {
    let dist: [&[(u32, u64)]; 9] = [
        &[(1, 1)],
        &[(2, 1)],
        &[(2, 1)],
        &[(2, 2)],
        &[(2, 3), (3, 1)],
        &[(2, 9), (3, 1), (4, 1)],
        &[(2, 22), (3, 4)],
        &[(2, 85), (3, 11), (4, 5)],
        &[(2, 363), (3, 69), (4, 8)],
    ];
    let two: [&[(u32, u64)]; 8] =
        [&[], &[(2, 1)], &[], &[(2, 1)], &[], &[(2, 3), (4, 1)], &[], &[(2, 11), (4, 3)]];
    // n = 1 is the single-qubit code; its row is outside the published table
    for n in 2..=9 {
        let got: Vec<_> = distance_histogram(records(n)).into_iter().collect();
        ensure(got == dist[n - 1], || format!("n={n} distances {got:?}"))?;
        if n <= 8 {
            let got: Vec<_> = type_ii_histogram(records(n)).into_iter().collect();
            ensure(got == two[n - 1], || format!("n={n} type II {got:?}"))?;
        }
    }
    let ii8: u64 = type_ii_histogram(records(8)).values().sum();
    Ok(format!("n=2..9 histograms, type II n<=8 (n=8 total {ii8})"))
}

fn c3_decomposable() -> Outcome {
    // orbit counts from our own census up to 9, the published 3132 for n = 10
    let mut counts: Vec<u64> = (1..=9).map(|n| records(n).len() as u64).collect();
    counts.push(ORBIT_COUNTS[9]);
    let totals: Vec<u64> = (1..=10).map(|n| decomposable_counts(n, &counts).unwrap().total).collect();
    ensure(totals == [1, 2, 3, 6, 11, 26, 59, 182, 675, 3990], || format!("totals {totals:?}"))?;
    for (n, label, want) in [(8, "4^2", 3), (10, "5^2", 10), (12, "4^3", 4), (12, "6^2", 66)] {
        let got = decomposable_counts(n, &ORBIT_COUNTS).unwrap().get(label);
        ensure(got == Some(want), || format!("cell {label} = {got:?}"))?;
    }
    Ok(format!("{totals:?}, cells 4^2=3 5^2=10 4^3=4 6^2=66"))
}

fn c4_qr() -> Outcome {
    let t = Instant::now();
    let mut big = Duration::ZERO;
    for (m, d, db) in [(5u32, 3, 4), (9, 3, 4), (13, 5, 6), (17, 5, 6), (25, 5, 6), (29, 11, 12)] {
        let s = Instant::now();
        let qr = qr_code(m).unwrap();
        let got = if is_prime(m) { code_distance_transitive(&qr) } else { code_distance(&qr) };
        ensure(got == d, || format!("QR m={m}: d={got}"))?;
        let got = code_distance(&bordered_qr(m).unwrap());
        ensure(got == db, || format!("BQR m+1={}: d={got}", m + 1))?;
        if m == 29 {
            big = s.elapsed();
        }
    }
    ensure(big.as_secs() <= 1800, || format!("m=29/30 took {:.0} s", big.as_secs_f64()))?;
    Ok(format!("six rows, m=29/30 in {:.1} s (total {:.1} s)", big.as_secs_f64(), t.elapsed().as_secs_f64()))
}

// n, best distance, least degree, a listed first row
const CIRCULANTS: [(usize, u32, u32, &str); 19] = [
    (2, 2, 1, "ω1"),
    (3, 2, 2, "ω11"),
    (4, 2, 1, "ω010"),
    (5, 3, 2, "ω0110"),
    (6, 4, 3, "ω01110"),
    (7, 3, 2, "ω001100"),
    (8, 4, 3, "ω0011100"),
    (9, 4, 4, "ω00111100"),
    (10, 4, 3, "ω000111000"),
    (11, 4, 4, "ω0001111000"),
    (12, 6, 5, "ω00101110100"),
    (13, 5, 4, "ω000101101000"),
    (14, 6, 5, "ω0001011101000"),
    (15, 6, 8, "ω01110011001110"),
    (16, 6, 5, "ω000100111001000"),
    (17, 7, 8, "ω0100011111100010"),
    (18, 6, 5, "ω00000101110100000"),
    (19, 7, 6, "ω000101001100101000"),
    (20, 8, 7, "ω0000100111110010000"),
];

fn circulant_row_ok(n: usize, d: u32, delta: u32, row: &str) -> Result<(), String> {
    let hits = circulant_search(n, None);
    let best = hits.first().map(|h| h.distance);
    ensure(best == Some(d), || format!("n={n}: best {best:?}"))?;
    ensure(hits[0].degree == delta, || format!("n={n}: least degree {}", hits[0].degree))?;
    let listed: CirculantRow = row.parse().unwrap();
    ensure(hits.iter().any(|h| h.row == listed), || format!("n={n}: {row} not found"))
}

fn c5_circulants() -> Outcome {
    for &(n, d, delta, row) in CIRCULANTS.iter().filter(|r| r.0 <= 16) {
        circulant_row_ok(n, d, delta, row)?;
    }
    let t = Instant::now();
    let ext: Result<(), String> =
        CIRCULANTS.iter().filter(|r| r.0 > 16).try_for_each(|&(n, d, delta, row)| circulant_row_ok(n, d, delta, row));
    match ext {
        Ok(()) => extended("n<=20", "PASS", &format!("{:.1} s", t.elapsed().as_secs_f64())),
        Err(e) => extended("n<=20", "FAIL", &e),
    }
    Ok("n=2..16 best distance, degree and listed row (n=12: d=6 via ω00101110100)".into())
}

fn c6_orbits() -> Outcome {
    let hexacode = Graph::cycle(5).unwrap().extend(0b11111).unwrap();
    let h = lc_orbit(&hexacode).len();
    ensure(h == 2, || format!("Hexacode orbit {h}"))?;
    let g = graph6::decode("J?LTNFSY{z_").unwrap();
    ensure(code_distance(&GraphCode::new(g)) == 5, || "J?LTNFSY{z_ is not [[11,0,5]]".into())?;
    let e = lc_orbit(&g).len();
    ensure(e == 4742, || format!("[[11,0,5]] orbit {e}"))?;
    let (_, c18) = code18();
    let d = code_distance_transitive(&c18);
    let size = lc_orbit(c18.graph()).len();
    let status = if size == 3828 && d == 8 { "PASS" } else { "NOT REPRODUCED" };
    extended("[[18,0,8]]", status, &format!("orbit {size} graphs, d={d}; published 3828"));
    extended("[[21,0,8]]", "NOT RUN", "no construction of this code is available; published 77394");
    Ok(format!("Hexacode {h}, [[11,0,5]] {e}"))
}

fn c7_par_theorem() -> Outcome {
    let mut census6: BTreeMap<u64, usize> = BTreeMap::new();
    for n in 1..=6 {
        for g in reps(n) {
            let p = par_ihn(&graph_function(&g)).unwrap();
            let lam = lambda(&g);
            let want = (1u64 << lam) as f64;
            ensure((p - want).abs() <= PAR_TOL, || format!("{}: PAR {p} vs 2^{lam}", graph6::encode(&g)))?;
            if n == 6 {
                *census6.entry(want as u64).or_default() += 1;
            }
        }
    }
    let got: Vec<_> = census6.into_iter().collect();
    ensure(got == [(4, 1), (8, 5), (16, 4), (32, 1)], || format!("n=6 column {got:?}"))?;
    Ok(format!("all orbits n<=6, n=6 column {got:?}"))
}

fn double_five_cycle_complement() -> Graph {
    let mut g = Graph::empty(10).unwrap();
    for i in 0..5 {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(5 + i, 5 + (i + 1) % 5);
    }
    g.complement()
}

fn c8_big_lambda() -> Outcome {
    let got: Vec<usize> = (2..=9).map(|n| min_lambda(records(n)).unwrap()).collect();
    ensure(got == [1, 2, 2, 2, 2, 3, 3, 3], || format!("n=2..9 {got:?}"))?;
    // Lambda_10 >= Lambda_9: deleting a vertex commutes with LC elsewhere, so
    // every 10-vertex orbit restricts into 9-vertex graphs whose orbits
    // all have lambda >= 3 (disconnected ones add over components). The
    // witness below gives Lambda_10 <= 3.
    let w = double_five_cycle_complement();
    let lw = lambda(&w);
    ensure(lw == 3, || format!("witness lambda {lw}"))?;
    let brute = lc_orbit(&w).graphs().map(|h| independence_number(&h)).max().unwrap();
    ensure(brute == 3, || format!("witness orbit independence {brute}"))?;
    Ok("n=2..9 [1, 2, 2, 2, 2, 3, 3, 3], n=10 3".into())
}

fn c9_apc_equivalence() -> Outcome {
    let mut count = 0;
    for n in 1..=6 {
        for g in reps(n) {
            let a = apc_distance(&graph_function(&g)) as u32;
            let d = code_distance(&GraphCode::new(g));
            ensure(a == d, || format!("{}: apc {a} vs d {d}", graph6::encode(&g)))?;
            count += 1;
        }
    }
    Ok(format!("{count} representatives"))
}

const CUBIC_TABLE: [(&str, usize, f64); 11] = [
    ("012,03,04,13,15,24,25", 3, 8.0),
    ("012,03,05,14,15,23,24,25,34", 3, 4.5),
    ("023,012,04,05,13,15,23,24,25,34", 3, 4.5),
    ("123,124,125,01,02,14,25,34,35,45", 3, 8.0),
    ("012,013,03,04,13,15,24,25,34,35,45", 3, 4.5),
    ("012,013,014,03,05,14,15,23,24,25,34", 3, 4.5),
    ("012,014,024,123,134,234,03,13,15,24,25,34,45", 3, 4.5),
    ("015,012,013,014,03,05,14,15,23,24,25,34,35,45", 3, 8.0),
    ("025,245,012,124,023,234,04,05,13,15,23,24,35,45", 3, 8.0),
    ("245,235,145,135,024,023,014,013,02,05,14,15,23,34,35,45", 3, 4.5),
    ("125,145,135,245,235,012,014,013,024,023,05,13,15,24,25,34", 3, 8.0),
];

fn c10_cubic() -> Outcome {
    for (text, d, p) in CUBIC_TABLE {
        let f = BooleanFunction::parse_anf(text, Some(6)).unwrap();
        let (gd, gp) = (apc_distance(&f), par_ihn(&f).unwrap());
        ensure(gd == d && (gp - p).abs() <= PAR_TOL, || format!("{text}: d={gd} PAR={gp}"))?;
    }
    Ok("11 rows, first row d=3 PAR_IHN=8".into())
}

fn c11_function_orbits() -> Outcome {
    let c3 = function_orbit_counts(3).unwrap();
    let c4 = function_orbit_counts(4).unwrap();
    let got = [c3.bit_flip, c3.bit_flip_ihn, c4.bit_flip, c4.bit_flip_ihn];
    ensure(got == [3, 2, 33, 29], || format!("{got:?}"))?;
    let t = Instant::now();
    let c5 = function_orbit_counts(5).unwrap();
    let ok = (c5.bit_flip, c5.bit_flip_ihn) == (22400, 22014);
    extended(
        "n=5",
        if ok { "PASS" } else { "FAIL" },
        &format!("{} / {} in {:.0} s", c5.bit_flip, c5.bit_flip_ihn, t.elapsed().as_secs_f64()),
    );
    Ok("n=3: 3/2, n=4: 33/29".into())
}

fn anf(text: &str, n: usize) -> BooleanFunction {
    BooleanFunction::parse_anf(text, Some(n)).unwrap()
}

fn comps(text: &str, n: usize) -> Components {
    parse_components(text, n).unwrap()
}

fn construction_eight(hub: [&str; 5], first: &str) -> BooleanFunction {
    // Hexacode template: hub 0 joined to the cycle 1-2-3-4-5
    let t = Graph::from_edges(6, &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (1, 2), (2, 3), (3, 4), (4, 5), (5, 1)])
        .unwrap();
    let mut gamma = BTreeMap::new();
    for (i, j) in t.edges() {
        for (a, b) in [(i, j), (j, i)] {
            let c = if a == 0 { comps(hub[b - 1], 8) } else { comps(&(a + 2).to_string(), 8) };
            gamma.insert((a, b), c);
        }
    }
    let mut blocks = vec![vec![0, 1, 2]];
    blocks.extend((3..8).map(|v| vec![v]));
    let mut g = vec![anf(first, 8)];
    g.extend((1..6).map(|_| BooleanFunction::zero(8).unwrap()));
    construct2(8, &blocks, &t, &gamma, &g).unwrap()
}

fn construction_nine() -> BooleanFunction {
    let blocks = vec![vec![0, 1, 2], vec![3, 4, 5], vec![6, 7, 8]];
    let mut gamma = BTreeMap::new();
    gamma.insert((0, 1), comps("12,0,1,2|01,2|02,1,2", 9));
    gamma.insert((0, 2), comps("12,0,1,2|01,2|02,1,2", 9));
    gamma.insert((1, 0), comps("34,5|35,4,5|45,3,4,5", 9));
    gamma.insert((1, 2), comps("45,3,4,5|34,5|35,4,5", 9));
    gamma.insert((2, 0), comps("68,7,8|78,6,7,8|67,8", 9));
    gamma.insert((2, 1), comps("78,6,7,8|67,8|68,7,8", 9));
    let g = vec![anf("01,02,12", 9), anf("34,35,45", 9), anf("67,68,78", 9)];
    construct2(9, &blocks, &Graph::complete(3).unwrap(), &gamma, &g).unwrap()
}

fn c12_constructions() -> Outcome {
    let cases = [
        ("n=8 first", construction_eight(["02,1"; 5], "01,02,12"), 9.0),
        (
            "n=8 second",
            construction_eight(["02,1", "12,0,1,2", "01,02,12,1,2", "01,02,12", "02,12,1,2"], "01,12"),
            9.0,
        ),
        ("n=9", construction_nine(), 10.25),
    ];
    let mut got = Vec::new();
    for (name, f, want) in cases {
        let p = par_ihn(&f).unwrap();
        ensure((p - want).abs() <= PAR_TOL, || format!("{name}: PAR_IHN {p}"))?;
        got.push(p);
    }
    Ok(format!("PAR_IHN {:.6} {:.6} {:.6}", got[0], got[1], got[2]))
}

fn random_graph(rng: &mut StdRng, n: usize) -> Graph {
    let mut g = Graph::empty(n).unwrap();
    for j in 1..n {
        for i in 0..j {
            if rng.gen_bool(0.5) {
                g.add_edge(i, j);
            }
        }
    }
    g
}

fn random_unitary(rng: &mut StdRng) -> Matrix2 {
    let t: f64 = rng.gen_range(0.0..std::f64::consts::PI);
    let e = |x: f64| Complex64::from_polar(1.0, std::f64::consts::TAU * x);
    let (a, b, g): (f64, f64, f64) = (rng.gen(), rng.gen(), rng.gen());
    let g = e(g);
    [[g * e(a) * t.cos(), g * e(b) * t.sin()], [-g * e(-b) * t.sin(), g * e(-a) * t.cos()]]
}

fn dense_kron(factors: &[Matrix2], v: &[Complex64]) -> Vec<Complex64> {
    (0..v.len())
        .map(|r| {
            (0..v.len())
                .map(|c| {
                    let m = factors
                        .iter()
                        .enumerate()
                        .fold(Complex64::new(1.0, 0.0), |acc, (i, f)| acc * f[r >> i & 1][c >> i & 1]);
                    m * v[c]
                })
                .sum()
        })
        .collect()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for k in 0..n {
            let mut q = p.clone();
            q.insert(k, n - 1);
            out.push(q);
        }
    }
    out
}

/// Distance and evenness by summing every subset of the rows of Γ + ωI.
fn enumerate_code(g: &Graph) -> (u32, bool) {
    let n = g.n();
    let (mut d, mut even) = (u32::MAX, true);
    for s in 1u32..1 << n {
        let nbrs = (0..n).filter(|&i| s >> i & 1 == 1).fold(0u32, |acc, i| acc ^ g.row(i));
        let w = (nbrs | s).count_ones();
        d = d.min(w);
        even &= w % 2 == 0;
    }
    (d, even)
}

fn c13_properties() -> Outcome {
    let mut rng = StdRng::seed_from_u64(2024);

    for n in 1..=8 {
        for _ in 0..8 {
            let factors: Vec<Matrix2> = (0..n).map(|_| random_unitary(&mut rng)).collect();
            let v: Vec<Complex64> =
                (0..1 << n).map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))).collect();
            let want = dense_kron(&factors, &v);
            let mut got = v.clone();
            butterfly(&mut got, &factors).unwrap();
            let err = got.iter().zip(&want).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max);
            ensure(err <= BUTTERFLY_TOL, || format!("butterfly n={n}: error {err:e}"))?;
        }
    }

    for n in 1..=7 {
        let perms = permutations(n);
        let brute = |g: &Graph| perms.iter().map(|p| GraphKey::of(&g.permute(p))).min().unwrap();
        for _ in 0..100 {
            let g = random_graph(&mut rng, n);
            let h = if rng.gen_bool(0.5) { g.permute(perms.choose(&mut rng).unwrap()) } else { random_graph(&mut rng, n) };
            let ours = canonical_key(&g) == canonical_key(&h);
            ensure(ours == (brute(&g) == brute(&h)), || format!("canonical form n={n}: {g:?} vs {h:?}"))?;
        }
    }

    for n in 1..=8 {
        for _ in 0..20 {
            let f = BooleanFunction::new(n, (0..1 << n).map(|_| rng.gen_range(0..2)).collect()).unwrap();
            let mut sq: Vec<i64> = f.walsh_scaled().iter().map(|w| w * w).collect();
            fwht(&mut sq);
            let r = periodic_all(&f);
            ensure(sq.iter().zip(&r).all(|(&a, &b)| a == b << n), || format!("Wiener-Khintchine n={n}: {f:?}"))?;
        }
    }

    for n in 1..=8 {
        for _ in 0..30 {
            let g = random_graph(&mut rng, n);
            let (d, even) = enumerate_code(&g);
            let c = GraphCode::new(g);
            let t = code_type(&c);
            ensure(code_distance(&c) == d, || format!("distance {g:?}"))?;
            ensure((t == CodeType::TypeII) == even, || format!("type {g:?}"))?;
        }
    }

    for n in 1..=6 {
        for _ in 0..30 {
            let g = random_graph(&mut rng, n);
            let q = interlace_q(&g).degree();
            ensure(q == Some(lambda(&g)), || format!("deg Q {g:?}"))?;
        }
    }

    for n in 1..=7 {
        for _ in 0..30 {
            let g = random_graph(&mut rng, n);
            let v = rng.gen_range(0..n);
            let h = g.local_complement(v).unwrap();
            ensure(h.local_complement(v).unwrap() == g, || format!("LC involution {g:?} at {v}"))?;
            let (a, b) = (GraphCode::new(g), GraphCode::new(h));
            ensure(code_distance(&a) == code_distance(&b), || format!("LC distance {g:?} at {v}"))?;
            ensure(naive_weight_distribution(&a) == naive_weight_distribution(&b), || format!("LC weights {g:?}"))?;
            ensure(code_type(&a) == code_type(&b), || format!("LC type {g:?}"))?;
            ensure(lambda(&g) == lambda(&h), || format!("LC lambda {g:?}"))?;
        }
    }
    Ok("butterfly, canonical form, Wiener-Khintchine, distance, deg Q, LC invariants".into())
}

fn main() {
    let criteria: [Criterion; 13] = [
        ("orbit census n<=9", c1_census),
        ("distance and type II histograms", c2_distances),
        ("decomposable counts", c3_decomposable),
        ("QR and bordered QR distances", c4_qr),
        ("circulant search n<=16", c5_circulants),
        ("LC orbit sizes", c6_orbits),
        ("PAR_IHN = 2^lambda", c7_par_theorem),
        ("Lambda_n n=2..10", c8_big_lambda),
        ("APC distance = code distance", c9_apc_equivalence),
        ("cubic functions", c10_cubic),
        ("function orbit counts", c11_function_orbits),
        ("construction examples", c12_constructions),
        ("property suites", c13_properties),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.into_iter().enumerate() {
        let t = Instant::now();
        let res = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
            let msg = e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        let secs = t.elapsed().as_secs_f64();
        match res {
            Ok(d) => println!("criterion {:>2} PASS  {name}: {d} [{secs:.1} s]", i + 1),
            Err(d) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {d} [{secs:.1} s]", i + 1);
            }
        }
        for line in EXTENDED.lock().unwrap().drain(..) {
            println!("{line}");
        }
    }
    println!("{} of 13 criteria passed", 13 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
