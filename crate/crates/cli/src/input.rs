use crate::{usage, Failure};
use boolean_fn::{function_graph, graph_function, BooleanFunction};
use clap::Args;
use constructions::CirculantRow;
use gf4_code::{stabilizer_to_graph, StabilizerCode};
use graph_core::{graph6, Graph};
use std::io::BufRead;

/// One graph from a flag, or graph6 lines on stdin when no flag is given.
#[derive(Args, Debug, Clone, Default)]
pub struct GraphInput {
    #[arg(long)]
    pub graph6: Option<String>,
    /// Edge list `0-1,1-2,...`, optionally prefixed by the vertex count as `n:`.
    #[arg(long)]
    pub edges: Option<String>,
    /// First row of a symmetric circulant, `w` followed by n - 1 bits.
    #[arg(long)]
    pub circulant: Option<String>,
    /// Stabilizer generators over GF(4): rows of 0, 1, w, W separated by `;` or `,`.
    #[arg(long)]
    pub code: Option<String>,
    /// A quadratic Boolean function in abbreviated ANF.
    #[arg(long = "quadratic")]
    pub quadratic: Option<String>,
}

impl GraphInput {
    pub fn given(&self) -> bool {
        self.graph6.is_some()
            || self.edges.is_some()
            || self.circulant.is_some()
            || self.code.is_some()
            || self.quadratic.is_some()
    }

    pub fn graphs(&self) -> Result<Vec<Graph>, Failure> {
        let given = [&self.graph6, &self.edges, &self.circulant, &self.code, &self.quadratic]
            .iter()
            .filter(|o| o.is_some())
            .count();
        if given > 1 {
            return Err(usage("give at most one of --graph6, --edges, --circulant, --code, --quadratic"));
        }
        if let Some(s) = &self.graph6 {
            return Ok(vec![graph6::decode(s.trim()).map_err(usage)?]);
        }
        if let Some(s) = &self.edges {
            return Ok(vec![parse_edges(s)?]);
        }
        if let Some(s) = &self.circulant {
            return Ok(vec![s.parse::<CirculantRow>().map_err(usage)?.graph()]);
        }
        if let Some(s) = &self.code {
            let code = StabilizerCode::parse_generator(&s.replace([';', ','], "\n")).map_err(usage)?;
            return Ok(vec![stabilizer_to_graph(&code).map_err(crate::domain)?.graph]);
        }
        if let Some(s) = &self.quadratic {
            let f = BooleanFunction::parse_anf(s, None).map_err(usage)?;
            return Ok(vec![function_graph(&f.strip_affine()).map_err(usage)?]);
        }
        let mut out = Vec::new();
        for line in std::io::stdin().lock().lines() {
            let line = line.map_err(crate::domain)?;
            let line = line.trim();
            if !line.is_empty() && !line.starts_with('#') {
                out.push(graph6::decode(line).map_err(usage)?);
            }
        }
        if out.is_empty() {
            return Err(usage("no graph given (use --graph6, --edges, --circulant, --code, --quadratic or stdin)"));
        }
        Ok(out)
    }
}

/// `0-1,1-2` or `5:0-1,1-2`.
pub fn parse_edges(text: &str) -> Result<Graph, Failure> {
    let (n, list) = match text.split_once(':') {
        Some((n, rest)) => (Some(n.trim().parse::<usize>().map_err(|_| usage(format!("bad vertex count {n:?}")))?), rest),
        None => (None, text),
    };
    let mut edges = Vec::new();
    for item in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (a, b) = item.split_once('-').ok_or_else(|| usage(format!("bad edge {item:?}")))?;
        let p = |s: &str| s.trim().parse::<usize>().map_err(|_| usage(format!("bad edge {item:?}")));
        edges.push((p(a)?, p(b)?));
    }
    let n = n.unwrap_or_else(|| edges.iter().map(|&(a, b)| a.max(b) + 1).max().unwrap_or(0));
    Graph::from_edges(n, &edges).map_err(usage)
}

impl crate::FunctionInput {
    pub fn function(&self) -> Result<BooleanFunction, Failure> {
        let given = [&self.anf, &self.hex, &self.graph6].iter().filter(|o| o.is_some()).count();
        if given != 1 {
            return Err(usage("give exactly one of --anf, --hex, --graph6"));
        }
        if let Some(s) = &self.anf {
            return BooleanFunction::parse_anf(s, self.n).map_err(usage);
        }
        if let Some(s) = &self.hex {
            let n = self.n.ok_or_else(|| usage("--hex needs -n"))?;
            return BooleanFunction::from_hex(n, s).map_err(usage);
        }
        let g = graph6::decode(self.graph6.as_deref().unwrap_or_default().trim()).map_err(usage)?;
        Ok(graph_function(&g))
    }
}
