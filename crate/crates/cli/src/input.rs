//! Resolving positional inputs: built-ins, graphs and HG1/GR1 files.

use std::fs;
use std::io::Read;

use hypercover::{Graph, Hypergraph};

use crate::Failure;

#[derive(Clone, Debug)]
pub enum Input {
    Hyper(Hypergraph),
    Graph(Graph),
}

/// `examples:<name>`, `graph:K<n>`, `graph:C<n>`, `graph:<GR1 path>`, the bare
/// word `empty` (an empty `r`-graph on `n` vertices), `-` for HG1 on stdin, or
/// an HG1 file path.
pub fn load(spec: &str, n: Option<u32>, r: u32) -> Result<Input, Failure> {
    if let Some(name) = spec.strip_prefix("examples:") {
        return Ok(Input::Hyper(Hypergraph::example(name)?));
    }
    if let Some(rest) = spec.strip_prefix("graph:") {
        return load_graph(rest).map(Input::Graph);
    }
    if spec == "empty" {
        return Ok(Input::Hyper(Hypergraph::empty(n.unwrap_or(r), r)));
    }
    let text = read(spec)?;
    Ok(Input::Hyper(Hypergraph::parse(&text)?))
}

fn load_graph(rest: &str) -> Result<Graph, Failure> {
    let sized = |prefix: char| {
        rest.strip_prefix(prefix)
            .and_then(|d| d.parse::<u32>().ok())
    };
    if let Some(n) = sized('K') {
        return Ok(Graph::complete(n));
    }
    if let Some(n) = sized('C') {
        return Ok(Graph::cycle(n)?);
    }
    Ok(Graph::parse(&read(rest)?)?)
}

pub fn read(path: &str) -> Result<String, Failure> {
    let mut text = String::new();
    let result = if path == "-" {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        fs::read_to_string(path).map(|t| text = t)
    };
    result.map_err(|e| Failure::Input(format!("{path}: {e}")))?;
    Ok(text)
}

impl Input {
    /// The hypergraph itself, or the `r`-clique hypergraph of a graph.
    pub fn hypergraph(&self, r: u32) -> Result<Hypergraph, Failure> {
        match self {
            Input::Hyper(h) => Ok(h.clone()),
            Input::Graph(g) => Ok(g.clique_hypergraph(r)?),
        }
    }
}
