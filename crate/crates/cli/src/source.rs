//! Graph and complex resolution from command-line flags, with an optional on-disk cache.

use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::Args;
use matchex::io::{read_complex, read_edge_list, write_complex, write_edge_list};
use matchex::{Complex, DegreeBoundVector, Graph};
use sha2::{Digest, Sha256};

pub const CACHE_ENV: &str = "MATCHEX_CACHE";

#[derive(Args, Debug, Clone, Default)]
pub struct GraphArgs {
    /// Edge-list file: "n m" then m lines "u v"
    #[arg(long, value_name = "FILE")]
    pub graph: Option<PathBuf>,
    /// Complete graph K_N
    #[arg(long, value_name = "N")]
    pub kn: Option<usize>,
    /// Complete bipartite graph K_{M,N}
    #[arg(long, num_args = 2, value_names = ["M", "N"])]
    pub knn: Option<Vec<usize>>,
    /// Vertex count: K_n alone, or K_{m,n} together with --m
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub m: Option<usize>,
}

impl GraphArgs {
    pub fn is_given(&self) -> bool {
        self.graph.is_some() || self.kn.is_some() || self.knn.is_some() || self.n.is_some() || self.m.is_some()
    }

    pub fn resolve(&self) -> Result<Graph> {
        let given = [self.graph.is_some(), self.kn.is_some(), self.knn.is_some(), self.n.is_some() || self.m.is_some()];
        match given.iter().filter(|&&g| g).count() {
            0 => bail!("no graph given; use --graph, --kn, --knn or --n/--m"),
            1 => {}
            _ => bail!("give exactly one graph source"),
        }
        if let Some(path) = &self.graph {
            let text = fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
            return read_edge_list(&text).with_context(|| format!("in {}", path.display()));
        }
        if let Some(n) = self.kn {
            return Ok(Graph::complete(n)?);
        }
        if let Some(mn) = &self.knn {
            return Ok(Graph::complete_bipartite(mn[0], mn[1])?);
        }
        match (self.m, self.n) {
            (Some(m), Some(n)) => Ok(Graph::complete_bipartite(m, n)?),
            (None, Some(n)) => Ok(Graph::complete(n)?),
            _ => bail!("--m needs --n"),
        }
    }
}

#[derive(Args, Debug, Clone, Default)]
pub struct BoundArgs {
    /// Uniform degree bound: the r-matching complex
    #[arg(long)]
    pub r: Option<usize>,
    /// Per-vertex degree bounds, comma separated
    #[arg(long, value_delimiter = ',')]
    pub lambda: Option<Vec<usize>>,
    /// Domination complex D_{n,gamma} on K_n
    #[arg(long)]
    pub gamma: Option<usize>,
}

/// Which complex to build over the resolved graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Spec {
    Matching(usize),
    Bounded(Vec<usize>),
    Domination(usize),
}

impl BoundArgs {
    pub fn is_given(&self) -> bool {
        self.r.is_some() || self.lambda.is_some() || self.gamma.is_some()
    }

    pub fn spec(&self) -> Result<Spec> {
        match (self.r, &self.lambda, self.gamma) {
            (Some(r), None, None) => Ok(Spec::Matching(r)),
            (None, Some(l), None) => Ok(Spec::Bounded(l.clone())),
            (None, None, Some(g)) => Ok(Spec::Domination(g)),
            (None, None, None) => bail!("give one of --r, --lambda or --gamma"),
            _ => bail!("--r, --lambda and --gamma are mutually exclusive"),
        }
    }
}

impl Spec {
    fn key(&self) -> String {
        match self {
            Spec::Matching(r) => format!("r {r}"),
            Spec::Bounded(l) => format!("lambda {l:?}"),
            Spec::Domination(g) => format!("gamma {g}"),
        }
    }

    pub fn build(&self, graph: &Graph) -> Result<Complex> {
        Ok(match self {
            Spec::Matching(r) => Complex::matching(graph, *r)?,
            Spec::Bounded(l) => Complex::bounded_degree(graph, &DegreeBoundVector(l.clone()))?,
            Spec::Domination(g) => {
                let kn = Graph::complete(graph.n_vertices())?;
                if graph.edges() != kn.edges() {
                    bail!("domination complexes are defined on complete graphs");
                }
                Complex::domination(graph.n_vertices(), *g)?
            }
        })
    }
}

/// `MATCHEX_CACHE` wins over `--cache`.
pub fn cache_dir(flag: Option<&Path>) -> Option<PathBuf> {
    std::env::var_os(CACHE_ENV)
        .filter(|v| !v.is_empty())
        .map(PathBuf::from)
        .or_else(|| flag.map(Path::to_path_buf))
}

fn cache_key(graph: &Graph, spec: &Spec) -> String {
    let mut h = Sha256::new();
    h.update(write_edge_list(graph));
    h.update(spec.key());
    h.finalize().iter().map(|b| format!("{b:02x}")).collect()
}

/// Builds the complex, reusing a cached copy when one is present and readable.
pub fn build_cached(graph: &Graph, spec: &Spec, cache: Option<&Path>) -> Result<Complex> {
    let Some(dir) = cache else {
        return spec.build(graph);
    };
    let path = dir.join(format!("{}.complex", cache_key(graph, spec)));
    if let Ok(text) = fs::read_to_string(&path) {
        if let Ok(k) = read_complex(&text) {
            return Ok(k);
        }
    }
    let k = spec.build(graph)?;
    fs::create_dir_all(dir).with_context(|| format!("cannot create cache dir {}", dir.display()))?;
    fs::write(&path, write_complex(&k)).with_context(|| format!("cannot write {}", path.display()))?;
    Ok(k)
}

pub fn load_complex(path: &Path) -> Result<Complex> {
    let text = fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    read_complex(&text).with_context(|| format!("in {}", path.display()))
}

pub fn save_complex(path: &Path, k: &Complex) -> Result<()> {
    fs::write(path, write_complex(k)).with_context(|| format!("cannot write {}", path.display()))
}
