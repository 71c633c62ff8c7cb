//! Graph-valued operators: line graph, the subdivision-type operators
//! `S`, `R`, `Q`, `T`, the generalized hierarchical product and F-sums.
//!
//! Vertex layouts are fixed so that results are byte-reproducible:
//!
//! * `L(G)`: vertex `i` is the `i`-th edge of `G` in canonical order.
//! * `S/R/Q/T(G)`: ids `0..n` are the original vertices, ids `n..n+m` the
//!   edge vertices in canonical edge order.
//! * `G(U)ΠH`: `(g, h)` has flat id `g·|V(H)| + h`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId, VertexSubset};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SubdivisionOp {
    /// Subdivision graph.
    S,
    /// Triangle parallel graph.
    R,
    /// Line superposition graph.
    Q,
    /// Total graph.
    T,
}

impl SubdivisionOp {
    pub const ALL: [SubdivisionOp; 4] = [Self::S, Self::R, Self::Q, Self::T];

    /// Whether the operator keeps the original edges of `G`.
    pub fn keeps_original_edges(self) -> bool {
        matches!(self, Self::R | Self::T)
    }

    /// Whether the operator joins edge vertices of adjacent edges.
    pub fn joins_adjacent_edges(self) -> bool {
        matches!(self, Self::Q | Self::T)
    }

    pub fn apply(self, g: &Graph) -> TransformedGraph {
        build_transform(g, self.keeps_original_edges(), self.joins_adjacent_edges())
    }
}

impl fmt::Display for SubdivisionOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Self::S => "S",
            Self::R => "R",
            Self::Q => "Q",
            Self::T => "T",
        };
        f.write_str(c)
    }
}

impl FromStr for SubdivisionOp {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "s" => Ok(Self::S),
            "r" => Ok(Self::R),
            "q" => Ok(Self::Q),
            "t" => Ok(Self::T),
            other => Err(Error::BadParam(format!("unknown operation `{other}`"))),
        }
    }
}

/// Output of `S/R/Q/T`, remembering which vertices are images of `V(G)` and
/// which stand for edges of `G`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransformedGraph {
    pub graph: Graph,
    pub original_vertices: VertexSubset,
    pub edge_vertices: VertexSubset,
}

/// Pairs of edge indices (in canonical order) that share an endpoint.
fn adjacent_edge_pairs(g: &Graph) -> Vec<(usize, usize)> {
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); g.vertex_count()];
    for (i, (u, v)) in g.edges().enumerate() {
        incident[u].push(i);
        incident[v].push(i);
    }
    let mut pairs = Vec::new();
    for around in &incident {
        for (k, &e) in around.iter().enumerate() {
            pairs.extend(around[k + 1..].iter().map(|&f| (e, f)));
        }
    }
    pairs
}

/// Line graph; `|E(L(G))| = Σ_v C(d(v), 2)`.
pub fn line_graph(g: &Graph) -> Graph {
    Graph::from_edges(g.edge_count(), adjacent_edge_pairs(g))
        .expect("distinct edges of a simple graph share at most one endpoint")
}

fn build_transform(g: &Graph, keep_edges: bool, join_edges: bool) -> TransformedGraph {
    let n = g.vertex_count();
    let m = g.edge_count();
    let mut out = Graph::new(n + m);
    for (i, (u, v)) in g.edges().enumerate() {
        let w = n + i;
        out.add_edge(u, w).expect("fresh incidence edge");
        out.add_edge(w, v).expect("fresh incidence edge");
        if keep_edges {
            out.add_edge(u, v).expect("edge of a simple graph");
        }
    }
    if join_edges {
        for (e, f) in adjacent_edge_pairs(g) {
            out.add_edge(n + e, n + f).expect("line-graph edge");
        }
    }
    TransformedGraph {
        graph: out,
        original_vertices: VertexSubset::from_range(0..n, n + m),
        edge_vertices: VertexSubset::from_range(n..n + m, n + m),
    }
}

/// `S(G)`: every edge replaced by a path of length two.
pub fn subdivision(g: &Graph) -> TransformedGraph {
    SubdivisionOp::S.apply(g)
}

/// `R(G)`: every edge replaced by a triangle.
pub fn triangle_parallel(g: &Graph) -> TransformedGraph {
    SubdivisionOp::R.apply(g)
}

/// `Q(G)`: `S(G)` plus edges between edge vertices of adjacent edges.
pub fn line_superposition(g: &Graph) -> TransformedGraph {
    SubdivisionOp::Q.apply(g)
}

/// `T(G)`: vertices and edges of `G`, adjacent when adjacent or incident in `G`.
pub fn total_graph(g: &Graph) -> TransformedGraph {
    SubdivisionOp::T.apply(g)
}

/// A vertex `(g_part, h_part)` of a product `G(U)ΠH`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ProductVertex {
    pub g_part: VertexId,
    pub h_part: VertexId,
}

impl ProductVertex {
    pub fn flat_id(self, h_order: usize) -> VertexId {
        self.g_part * h_order + self.h_part
    }

    pub fn from_flat(id: VertexId, h_order: usize) -> Self {
        ProductVertex {
            g_part: id / h_order,
            h_part: id % h_order,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProductOptions {
    /// Reject disconnected factors.
    pub enforce_connected: bool,
}

impl Default for ProductOptions {
    fn default() -> Self {
        ProductOptions {
            enforce_connected: true,
        }
    }
}

/// Generalized hierarchical product `G(U)ΠH` with connected factors enforced.
pub fn hierarchical_product(g: &Graph, subset: &VertexSubset, h: &Graph) -> Result<Graph> {
    hierarchical_product_with(g, subset, h, ProductOptions::default())
}

/// `(u,v) ~ (u',v')` iff `u = u' ∈ U` and `vv' ∈ E(H)`, or `v = v'` and
/// `uu' ∈ E(G)`.
pub fn hierarchical_product_with(
    g: &Graph,
    subset: &VertexSubset,
    h: &Graph,
    opts: ProductOptions,
) -> Result<Graph> {
    if subset.is_empty() {
        return Err(Error::EmptySubset);
    }
    subset.check_owner(g)?;
    if opts.enforce_connected {
        if !g.is_connected() {
            return Err(Error::Disconnected("left factor"));
        }
        if !h.is_connected() {
            return Err(Error::Disconnected("right factor"));
        }
    }
    let h_order = h.vertex_count();
    let id = |g_part, h_part| ProductVertex { g_part, h_part }.flat_id(h_order);

    let mut out = Graph::new(g.vertex_count() * h_order);
    for u in subset.iter() {
        for (v, w) in h.edges() {
            out.add_edge(id(u, v), id(u, w))?;
        }
    }
    for (u, w) in g.edges() {
        for v in h.vertices() {
            out.add_edge(id(u, v), id(w, v))?;
        }
    }
    Ok(out)
}

/// F-sum `G +_F H`, built as `F(G)(V(G))ΠH`.
pub fn f_sum(g: &Graph, h: &Graph, op: SubdivisionOp) -> Result<Graph> {
    f_sum_with(g, h, op, ProductOptions::default())
}

pub fn f_sum_with(g: &Graph, h: &Graph, op: SubdivisionOp, opts: ProductOptions) -> Result<Graph> {
    if g.vertex_count() < 2 {
        return Err(Error::TooSmall(g.vertex_count()));
    }
    if opts.enforce_connected && !g.is_connected() {
        return Err(Error::Disconnected("left factor"));
    }
    let transformed = op.apply(g);
    hierarchical_product_with(&transformed.graph, &transformed.original_vertices, h, opts)
}
