//! Simple undirected graphs on dense vertex ids `0..n`.

use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};

pub type VertexId = usize;

/// A simple undirected graph. Neighbour sets are kept sorted, so two graphs
/// compare equal exactly when their canonical edge lists agree.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<BTreeSet<VertexId>>,
    edge_count: usize,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Graph {
            adj: vec![BTreeSet::new(); n],
            edge_count: 0,
        }
    }

    /// Builds a graph from an edge iterator, rejecting loops, repeats and
    /// out-of-range ids.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if !self.adj[u].insert(v) {
            return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
        }
        self.adj[v].insert(u);
        self.edge_count += 1;
        Ok(())
    }

    /// Consuming form of [`Graph::add_edge`].
    pub fn with_edge(mut self, u: VertexId, v: VertexId) -> Result<Self> {
        self.add_edge(u, v)?;
        Ok(self)
    }

    pub fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v < self.adj.len() {
            Ok(())
        } else {
            Err(Error::OutOfRange {
                vertex: v,
                n: self.adj.len(),
            })
        }
    }

    pub fn degree(&self, v: VertexId) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.adj[v].len())
    }

    /// Degrees of all vertices, indexed by vertex id.
    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(BTreeSet::len).collect()
    }

    pub fn neighbors(&self, v: VertexId) -> Result<impl Iterator<Item = VertexId> + '_> {
        self.check_vertex(v)?;
        Ok(self.adj[v].iter().copied())
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.adj.get(u).is_some_and(|nb| nb.contains(&v))
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order. This order
    /// fixes the ids of edge vertices in every derived construction.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nb)| nb.range(u + 1..).map(move |&v| (u, v)))
    }

    pub fn vertices(&self) -> std::ops::Range<VertexId> {
        0..self.adj.len()
    }

    /// True iff the graph has exactly one component; graphs with at most one
    /// vertex count as connected.
    pub fn is_connected(&self) -> bool {
        let n = self.adj.len();
        if n <= 1 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut reached = 1;
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    reached += 1;
                    queue.push_back(v);
                }
            }
        }
        reached == n
    }
}

/// A set of vertex ids of one particular graph, e.g. the `U` of a
/// hierarchical product.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VertexSubset {
    members: BTreeSet<VertexId>,
    owner_order: usize,
}

impl VertexSubset {
    pub fn new<I>(owner: &Graph, members: I) -> Result<Self>
    where
        I: IntoIterator<Item = VertexId>,
    {
        let members: BTreeSet<_> = members.into_iter().collect();
        if let Some(&bad) = members.iter().find(|&&v| v >= owner.vertex_count()) {
            return Err(Error::OutOfRange {
                vertex: bad,
                n: owner.vertex_count(),
            });
        }
        Ok(VertexSubset {
            members,
            owner_order: owner.vertex_count(),
        })
    }

    /// All of `V(owner)`.
    pub fn all(owner: &Graph) -> Self {
        VertexSubset {
            members: owner.vertices().collect(),
            owner_order: owner.vertex_count(),
        }
    }

    /// Ids `range` of an owner graph with `owner_order` vertices.
    pub(crate) fn from_range(range: std::ops::Range<VertexId>, owner_order: usize) -> Self {
        debug_assert!(range.end <= owner_order);
        VertexSubset {
            members: range.collect(),
            owner_order,
        }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.members.contains(&v)
    }

    pub fn iter(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.members.iter().copied()
    }

    /// Vertex count of the graph this subset was built for.
    pub fn owner_order(&self) -> usize {
        self.owner_order
    }

    /// Re-validates the subset against `g`.
    pub fn check_owner(&self, g: &Graph) -> Result<()> {
        match self.members.iter().next_back() {
            Some(&max) if max >= g.vertex_count() => Err(Error::OutOfRange {
                vertex: max,
                n: g.vertex_count(),
            }),
            _ => Ok(()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    #[test]
    fn new_graph_is_edgeless() {
        let g0 = Graph::new(0);
        assert_eq!((g0.vertex_count(), g0.edge_count()), (0, 0));
        let g3 = Graph::new(3);
        assert_eq!((g3.vertex_count(), g3.edge_count()), (3, 0));
        let g5 = Graph::new(5);
        assert!(g5.degrees().iter().all(|&d| d == 0));
    }

    #[test]
    fn add_edge_errors() {
        let p2 = Graph::new(2).with_edge(0, 1).unwrap();
        assert_eq!(p2, path(2));
        assert_eq!(p2.clone().with_edge(0, 1), Err(Error::DuplicateEdge(0, 1)));
        assert_eq!(p2.clone().with_edge(1, 0), Err(Error::DuplicateEdge(0, 1)));
        assert_eq!(Graph::new(2).with_edge(1, 1), Err(Error::SelfLoop(1)));
        assert_eq!(
            Graph::new(2).with_edge(0, 2),
            Err(Error::OutOfRange { vertex: 2, n: 2 })
        );
    }

    #[test]
    fn add_edge_bumps_both_degrees() {
        let mut g = Graph::new(3);
        g.add_edge(0, 2).unwrap();
        assert_eq!(g.degrees(), vec![1, 0, 1]);
        assert_eq!(g.degree(3), Err(Error::OutOfRange { vertex: 3, n: 3 }));
    }

    #[test]
    fn degrees_of_small_families() {
        let c5 = Graph::from_edges(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap();
        assert!(c5.vertices().all(|v| c5.degree(v).unwrap() == 2));
        let p4 = path(4);
        assert_eq!(p4.degree(0).unwrap(), 1);
        assert_eq!(p4.degree(3).unwrap(), 1);
        let star = Graph::from_edges(5, (1..5).map(|i| (0, i))).unwrap();
        assert_eq!(star.degree(0).unwrap(), 4);
    }

    #[test]
    fn edges_are_canonical() {
        let g = Graph::from_edges(4, [(3, 1), (2, 0), (1, 0)]).unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 2), (1, 3)]);
    }

    #[test]
    fn connectivity() {
        assert!(path(7).is_connected());
        assert!(Graph::new(1).is_connected());
        assert!(Graph::new(0).is_connected());
        assert!(!Graph::new(2).is_connected());
        let two_edges = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert!(!two_edges.is_connected());
    }

    #[test]
    fn subset_validation() {
        let g = path(3);
        assert!(VertexSubset::new(&g, [0, 2]).is_ok());
        assert_eq!(
            VertexSubset::new(&g, [0, 3]),
            Err(Error::OutOfRange { vertex: 3, n: 3 })
        );
        let all = VertexSubset::all(&g);
        assert_eq!(all.len(), 3);
        assert!(all.check_owner(&path(2)).is_err());
        assert!(all.check_owner(&path(4)).is_ok());
    }
}
