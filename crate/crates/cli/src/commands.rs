use crate::checkpoint::{classify_resumable, search_circulant_resumable};
use crate::{domain, format_number, tables, usage, Cli, ClassifyArgs, Command, ConstructKind, Failure, Outcome};
use crate::{SeedStrategy, SetName, WalkStrategy};
use boolean_fn::apc_distance;
use constructions::{bordered_qr, code18, nested_build, paley_graph, qr_code, NestedSpec};
use gf4_code::{code_distance, code_type, partial_weight_distribution, GraphCode};
use graph_core::{canonical_graph, graph6, Graph};
use orbit_enum::{big_lambda, lambda, lc_canonise, lc_orbit_limited, summary_table, type_label, ClassifyOptions, Seed, Strategy};
use serde_json::json;
use std::io::Write;
use transform_engine::{cmf, count_flat_spectra, interlace_q, par_hn, par_ih, par_ihn, spectrum_csv, SpectralVector, TransformSet};

macro_rules! out {
    ($w:expr, $($t:tt)*) => {
        writeln!($w, $($t)*).map_err(crate::domain)?
    };
}

pub fn dispatch(cli: &Cli, w: &mut dyn Write) -> Outcome {
    let json = cli.json;
    match &cli.command {
        Command::Distance(input) => {
            for g in input.graphs()? {
                let c = GraphCode::new(g);
                let (d, t) = (code_distance(&c), type_label(code_type(&c)));
                if json {
                    out!(w, "{}", json!({"g6": graph6::encode(&g), "n": g.n(), "d": d, "type": t}));
                } else {
                    out!(w, "d={d} n={} type={t}", g.n());
                }
            }
        }
        Command::Wdist { input, cutoff } => {
            for g in input.graphs()? {
                let p = cutoff.unwrap_or(g.n()).min(g.n());
                let counts = partial_weight_distribution(&GraphCode::new(g), p).counts;
                if json {
                    out!(w, "{}", json!({"g6": graph6::encode(&g), "n": g.n(), "counts": counts}));
                } else {
                    let parts: Vec<String> = counts.iter().enumerate().map(|(i, c)| format!("w{i}={c}")).collect();
                    out!(w, "{}", parts.join(" "));
                }
            }
        }
        Command::Orbit { input, list, max_size } => {
            for g in input.graphs()? {
                let orbit = lc_orbit_limited(&g, max_size.unwrap_or(usize::MAX)).map_err(domain)?;
                let rep = orbit.first().expect("orbit contains g");
                let lam = lambda(&g);
                let d = code_distance(&GraphCode::new(g));
                if json {
                    let mut v = json!({"rep": graph6::encode(&rep), "n": g.n(), "orbit_size": orbit.len(), "d": d, "lambda": lam});
                    if *list {
                        v["members"] = orbit.graphs().map(|h| graph6::encode(&h)).collect();
                    }
                    out!(w, "{v}");
                } else {
                    out!(w, "rep={} orbit_size={} d={d} lambda={lam}", graph6::encode(&rep), orbit.len());
                    if *list {
                        for h in orbit.graphs() {
                            out!(w, "{}", graph6::encode(&h));
                        }
                    }
                }
            }
        }
        Command::Canonise { input, lc } => {
            for g in input.graphs()? {
                let c = if *lc { lc_canonise(&g) } else { canonical_graph(&g) };
                if json {
                    out!(w, "{}", json!({"input": graph6::encode(&g), "canonical": graph6::encode(&c)}));
                } else {
                    out!(w, "{}", graph6::encode(&c));
                }
            }
        }
        Command::Classify(args) => classify(args, json, w)?,
        Command::SearchCirculant { n, target, out } => {
            let hits = search_circulant_resumable(*n, *target, out.as_deref())?;
            for h in &hits {
                if json {
                    out!(w, "{}", json!({"row": h.row.to_string(), "n": n, "d": h.distance, "degree": h.degree}));
                } else {
                    out!(w, "{} d={} degree={}", h.row, h.distance, h.degree);
                }
            }
        }
        Command::Construct { kind } => construct(kind, json, w)?,
        Command::Apc(input) => {
            let f = input.function()?;
            let (d, p) = (apc_distance(&f), par_ihn(&f).map_err(domain)?);
            if json {
                out!(w, "{}", json!({"anf": f.to_anf_string(), "n": f.n(), "apc_distance": d, "par_ihn": p}));
            } else {
                out!(w, "apc_distance={d} par_ihn={}", format_number(p));
            }
        }
        Command::Par(input) => {
            let f = input.function()?;
            let ihn = par_ihn(&f).map_err(domain)?;
            let ih = par_ih(&f).map_err(domain)?;
            let hn = par_hn(&f).map_err(domain)?;
            let c = cmf(&f).map_err(domain)?;
            let flat = count_flat_spectra(&f).map_err(domain)?;
            if json {
                let cmf_v = if c.is_finite() { json!(c) } else { json!("inf") };
                out!(w, "{}", json!({"anf": f.to_anf_string(), "n": f.n(), "par_ihn": ihn, "par_ih": ih, "par_hn": hn, "cmf": cmf_v, "flat_spectra": flat}));
            } else {
                out!(
                    w,
                    "par_ihn={} par_ih={} par_hn={} cmf={} flat_spectra={flat}",
                    format_number(ihn),
                    format_number(ih),
                    format_number(hn),
                    format_number(c)
                );
            }
        }
        Command::Spectrum { function, set, out } => {
            let f = function.function()?;
            let set = match set {
                SetName::Ihn => TransformSet::ihn(),
                SetName::Ih => TransformSet::ih(),
                SetName::Hn => TransformSet::hn(),
                SetName::Ix => TransformSet::ix(),
            };
            let csv = spectrum_csv(&SpectralVector::from_function(&f), &set).map_err(domain)?;
            match out {
                Some(path) => std::fs::write(path, csv).map_err(domain)?,
                None => write!(w, "{csv}").map_err(domain)?,
            }
        }
        Command::Lambda { n, input } => match (n, input.given()) {
            (Some(_), true) => return Err(usage("give either -n or a graph")),
            (Some(n), false) => {
                let l = big_lambda(*n).map_err(domain)?;
                if json {
                    out!(w, "{}", json!({"n": n, "Lambda": l}));
                } else {
                    out!(w, "Lambda_{n}={l}");
                }
            }
            (None, _) => {
                for g in input.graphs()? {
                    let q = interlace_q(&g);
                    let lam = lambda(&g);
                    if json {
                        out!(w, "{}", json!({"g6": graph6::encode(&g), "lambda": lam, "interlace": q.coeffs()}));
                    } else {
                        out!(w, "lambda={lam} Q={q}");
                    }
                }
            }
        },
        Command::Tables { id, max_n } => {
            let text = tables::render(*id, *max_n).map_err(domain)?;
            write!(w, "{text}").map_err(domain)?;
        }
    }
    Ok(())
}

fn classify(args: &ClassifyArgs, json: bool, w: &mut dyn Write) -> Outcome {
    if !(1..=12).contains(&args.n) {
        return Err(usage(format!("n = {} out of range 1..=12", args.n)));
    }
    let strategy = match args.strategy {
        Some(WalkStrategy::Canonise) => Strategy::Canonise,
        Some(WalkStrategy::Fast) => Strategy::Fast,
        Some(WalkStrategy::Lowmem) => Strategy::LowMem,
        None if args.max_mem.is_some_and(|m| m < 1024) => Strategy::LowMem,
        None => Strategy::Fast,
    };
    let seed = match args.seed_strategy {
        SeedStrategy::All => Seed::AllConnected,
        SeedStrategy::Ext => Seed::Extensions,
    };
    let mut opts = ClassifyOptions::new(strategy, seed);
    opts.pwd_cutoff = args.pwd_cutoff;
    let run = classify_resumable(args.n, &opts, args.out.as_deref())?;
    if args.summary {
        write!(w, "{}", summary_table(args.n, &run.records)).map_err(domain)?;
        return Ok(());
    }
    for r in &run.records {
        if json {
            out!(w, "{}", serde_json::to_string(r).map_err(domain)?);
        } else {
            out!(w, "{} orbit_size={} d={} type={} lambda={}", r.g6, r.orbit_size, r.d, r.code_type, r.lambda);
        }
    }
    Ok(())
}

fn emit_graph(w: &mut dyn Write, json: bool, name: &str, g: &Graph) -> Outcome {
    let c = GraphCode::new(*g);
    let (d, t) = (code_distance(&c), type_label(code_type(&c)));
    if json {
        out!(w, "{}", json!({"name": name, "g6": graph6::encode(g), "n": g.n(), "d": d, "type": t}));
    } else {
        out!(w, "{name} {} n={} d={d} type={t}", graph6::encode(g), g.n());
    }
    Ok(())
}

fn construct(kind: &ConstructKind, json: bool, w: &mut dyn Write) -> Outcome {
    match kind {
        ConstructKind::Qr { m } => emit_graph(w, json, &format!("qr{m}"), qr_code(*m).map_err(usage)?.graph()),
        ConstructKind::Bqr { m } => emit_graph(w, json, &format!("bqr{m}"), bordered_qr(*m).map_err(usage)?.graph()),
        ConstructKind::Paley { m } => emit_graph(w, json, &format!("paley{m}"), &paley_graph(*m).map_err(usage)?),
        ConstructKind::Code18 => {
            let (a, b) = code18();
            emit_graph(w, json, "code17", a.graph())?;
            emit_graph(w, json, "code18", b.graph())
        }
        ConstructKind::Nested { cliques, spec } => {
            let spec = match (cliques, spec) {
                (Some(c), None) => NestedSpec::cliques(c),
                (None, Some(s)) => NestedSpec::parse(&s.replace(';', "\n")).map_err(usage)?,
                _ => return Err(usage("give --cliques or --spec")),
            };
            let g = nested_build(&spec).map_err(|e| Failure::Usage(e.to_string()))?;
            emit_graph(w, json, "nested", &g)
        }
    }
}
