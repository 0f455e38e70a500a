//! Turning command-line graph and ideal descriptions into ideals.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, ValueEnum};
use coverideals::enumerate::random_tree;
use coverideals::experiments::{counterexample_g, counterexample_h};
use coverideals::{Error, MonomialIdeal, Result, RingContext, SimpleGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Counterexample {
    G,
    H,
}

#[derive(Debug, Clone, Args, Default)]
pub struct SourceArgs {
    /// Graph builder: complete:N, cycle:N, path:N, star:N, edgeless:N,
    /// multipartite:A,B,..., tree:N (random, uses --seed), prufer:S1,S2,...
    #[arg(long, value_name = "SPEC")]
    pub graph: Option<String>,
    /// Graph given as JSON {"n": .., "edges": [[i, j], ..]}.
    #[arg(long, value_name = "PATH")]
    pub graph_file: Option<PathBuf>,
    /// Build the degree n-2 ideal whose graph G_J is this graph spec.
    #[arg(long, value_name = "SPEC")]
    pub graph_gj: Option<String>,
    /// Ideal given as JSON {"n": .., "generators": [[..], ..]}.
    #[arg(long, value_name = "PATH")]
    pub ideal_file: Option<PathBuf>,
    /// One of the two built-in 7-vertex graphs; implies the cover ideal cubed.
    #[arg(long, value_enum)]
    pub counterexample: Option<Counterexample>,
    /// Replace the graph by its complement.
    #[arg(long)]
    pub complement: bool,
    /// Use the cover ideal of the graph (the default).
    #[arg(long, conflicts_with = "edge")]
    pub cover: bool,
    /// Use the edge ideal of the graph.
    #[arg(long)]
    pub edge: bool,
    /// Raise the ideal to this power.
    #[arg(long, value_name = "S")]
    pub power: Option<u32>,
    /// Variable weights w1,w2,... for the grading.
    #[arg(long, value_name = "W", value_delimiter = ',')]
    pub weights: Option<Vec<u32>>,
}

/// How the ideal was obtained, so closed forms can be matched to it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Origin {
    /// Cover ideal of `graph`, raised to `power`.
    Cover { graph: SimpleGraph, power: u32 },
    /// The degree n-2 ideal of `graph`, raised to `power`.
    GraphGj { graph: SimpleGraph, power: u32 },
    Other,
}

pub struct Resolved {
    pub ideal: MonomialIdeal,
    pub origin: Origin,
    pub graph: Option<SimpleGraph>,
}

fn parse_list(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.trim()
                .parse()
                .map_err(|_| Error::InvalidParameter(format!("cannot parse {t:?} as a number")))
        })
        .collect()
}

pub fn parse_graph(spec: &str, seed: u64) -> Result<SimpleGraph> {
    let (kind, arg) = spec
        .split_once(':')
        .ok_or_else(|| Error::InvalidParameter(format!("graph spec {spec:?} should look like kind:args")))?;
    let one = || -> Result<usize> {
        match parse_list(arg)?.as_slice() {
            [n] => Ok(*n),
            _ => Err(Error::InvalidParameter(format!("{kind} takes one number"))),
        }
    };
    match kind {
        "complete" => SimpleGraph::complete(one()?),
        "cycle" => SimpleGraph::cycle(one()?),
        "path" => SimpleGraph::path(one()?),
        "star" => SimpleGraph::star(one()?),
        "edgeless" => SimpleGraph::edgeless(one()?),
        "multipartite" => SimpleGraph::complete_multipartite(&parse_list(arg)?),
        "tree" => random_tree(one()?, seed),
        "prufer" => SimpleGraph::from_prufer(&parse_list(arg)?),
        _ => Err(Error::InvalidParameter(format!("unknown graph kind {kind:?}"))),
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::InvalidParameter(format!("{}: {e}", path.display())))
}

fn json_error(path: &Path, e: serde_json::Error) -> Error {
    Error::InvalidParameter(format!("{}: {e}", path.display()))
}

impl SourceArgs {
    pub fn resolve(&self, seed: u64) -> Result<Resolved> {
        let given = [
            self.graph.is_some(),
            self.graph_file.is_some(),
            self.graph_gj.is_some(),
            self.ideal_file.is_some(),
            self.counterexample.is_some(),
        ]
        .iter()
        .filter(|&&b| b)
        .count();
        if given != 1 {
            return Err(Error::InvalidParameter(
                "give exactly one of --graph, --graph-file, --graph-gj, --ideal-file, --counterexample".into(),
            ));
        }
        let (ideal, origin, graph) = if let Some(path) = &self.ideal_file {
            let ideal: MonomialIdeal = serde_json::from_str(&read(path)?).map_err(|e| json_error(path, e))?;
            let power = self.power.unwrap_or(1);
            (ideal.power(power)?, Origin::Other, None)
        } else if let Some(spec) = &self.graph_gj {
            let mut g = parse_graph(spec, seed)?;
            if self.complement {
                g = g.complement();
            }
            let power = self.power.unwrap_or(1);
            let ideal = g.ideal_from_graph()?.power(power)?;
            (ideal, Origin::GraphGj { graph: g.clone(), power }, Some(g))
        } else {
            let (mut g, default_power) = match (&self.graph, &self.graph_file, self.counterexample) {
                (Some(spec), _, _) => (parse_graph(spec, seed)?, 1),
                (_, Some(path), _) => {
                    let g: SimpleGraph = serde_json::from_str(&read(path)?).map_err(|e| json_error(path, e))?;
                    (g, 1)
                }
                (_, _, Some(Counterexample::G)) => (counterexample_g(), 3),
                (_, _, Some(Counterexample::H)) => (counterexample_h(), 3),
                _ => unreachable!("exactly one source is set"),
            };
            if self.complement {
                g = g.complement();
            }
            let power = self.power.unwrap_or(default_power);
            if self.edge {
                let ideal = g.edge_ideal()?;
                let ideal = if ideal.is_zero() { ideal } else { ideal.power(power)? };
                (ideal, Origin::Other, Some(g))
            } else {
                let ideal = g.cover_ideal()?.power(power)?;
                (ideal, Origin::Cover { graph: g.clone(), power }, Some(g))
            }
        };
        let ideal = match &self.weights {
            Some(w) => {
                if w.len() != ideal.n() {
                    return Err(Error::ArityMismatch {
                        expected: ideal.n(),
                        got: w.len(),
                    });
                }
                ideal.with_context(&RingContext::weighted(w.clone())?)?
            }
            None => ideal,
        };
        Ok(Resolved { ideal, origin, graph })
    }
}
