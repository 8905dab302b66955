//! Simple undirected graphs on dense integer vertices, and edge subgraphs.
//!
//! A [`Graph`] is immutable after construction: every vertex index in
//! `0..vertex_count` is valid (possibly isolated), edges are unordered pairs
//! with no loops and no multi-edges. Derived graphs (vertex deletion,
//! edge-induced subgraphs) are new graphs together with a [`VertexMap`]
//! recording the index translation.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

pub type Vertex = usize;

/// An unordered pair of distinct vertices, stored with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    u: Vertex,
    v: Vertex,
}

impl Edge {
    /// Normalizes the endpoint order. Panics on a loop; loops are rejected
    /// with a proper error at graph-construction and parse boundaries.
    pub fn new(a: Vertex, b: Vertex) -> Edge {
        assert_ne!(a, b, "loop edge at vertex {a}");
        Edge {
            u: a.min(b),
            v: a.max(b),
        }
    }

    pub fn u(&self) -> Vertex {
        self.u
    }

    pub fn v(&self) -> Vertex {
        self.v
    }

    pub fn endpoints(&self) -> (Vertex, Vertex) {
        (self.u, self.v)
    }

    pub fn is_incident(&self, x: Vertex) -> bool {
        self.u == x || self.v == x
    }

    /// The endpoint that is not `x`. Panics if `x` is not an endpoint.
    pub fn other(&self, x: Vertex) -> Vertex {
        if x == self.u {
            self.v
        } else {
            assert_eq!(x, self.v, "vertex {x} not on edge {self}");
            self.u
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.u, self.v)
    }
}

/// A simple undirected graph with dense vertex indices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<Vertex>>,
    edges: Vec<Edge>,
}

impl Graph {
    /// An edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Graph {
        Graph {
            n,
            adj: vec![Vec::new(); n],
            edges: Vec::new(),
        }
    }

    /// Builds a graph from an edge list, validating the simple-graph
    /// invariants: no loops, no duplicates, indices in range.
    pub fn from_edges(n: usize, pairs: &[(Vertex, Vertex)]) -> Result<Graph> {
        let mut adj = vec![Vec::new(); n];
        let mut seen = BTreeSet::new();
        for &(a, b) in pairs {
            if a >= n {
                return Err(Error::VertexOutOfRange { vertex: a, n });
            }
            if b >= n {
                return Err(Error::VertexOutOfRange { vertex: b, n });
            }
            if a == b {
                return Err(Error::LoopEdge(a));
            }
            let e = Edge::new(a, b);
            if !seen.insert(e) {
                return Err(Error::DuplicateEdge { u: e.u, v: e.v });
            }
            adj[a].push(b);
            adj[b].push(a);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph {
            n,
            adj,
            edges: seen.into_iter().collect(),
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> {
        0..self.n
    }

    /// Edges in ascending `(u, v)` order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_set(&self) -> BTreeSet<Edge> {
        self.edges.iter().copied().collect()
    }

    /// Neighbors of `v` in ascending index order.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, a: Vertex, b: Vertex) -> bool {
        a != b && a < self.n && b < self.n && self.adj[a].binary_search(&b).is_ok()
    }

    pub fn contains_edge(&self, e: Edge) -> bool {
        self.has_edge(e.u, e.v)
    }

    pub fn even_degree_vertices(&self) -> Vec<Vertex> {
        self.vertices().filter(|&v| self.degree(v) % 2 == 0).collect()
    }

    pub fn odd_degree_vertices(&self) -> Vec<Vertex> {
        self.vertices().filter(|&v| self.degree(v) % 2 == 1).collect()
    }

    pub fn min_degree(&self) -> usize {
        self.vertices().map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// True when the graph has exactly one component. The empty graph and
    /// one-vertex graphs are connected by convention.
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        self.bfs_reach(0).len() == self.n
    }

    /// Vertices reachable from `start`, in BFS order with ascending
    /// neighbor expansion.
    pub fn bfs_reach(&self, start: Vertex) -> Vec<Vertex> {
        let mut seen = vec![false; self.n];
        let mut order = Vec::new();
        let mut queue = std::collections::VecDeque::new();
        seen[start] = true;
        queue.push_back(start);
        while let Some(x) = queue.pop_front() {
            order.push(x);
            for &y in &self.adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        order
    }

    /// Connected components as sorted vertex lists, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let mut comp = Vec::new();
            let mut stack = vec![s];
            seen[s] = true;
            while let Some(x) = stack.pop() {
                comp.push(x);
                for &y in &self.adj[x] {
                    if !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    /// True when the graph has no cycle.
    pub fn is_forest(&self) -> bool {
        // Components satisfy |E| = |V| - 1 exactly when acyclic.
        self.edge_count() + self.components().len() == self.n
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.is_forest()
    }

    /// Connected with every degree even.
    pub fn is_eulerian(&self) -> bool {
        self.is_connected() && self.vertices().all(|v| self.degree(v) % 2 == 0)
    }

    /// True when the graph is a single cycle covering every vertex.
    pub fn is_cycle_graph(&self) -> bool {
        self.n >= 3 && self.is_connected() && self.vertices().all(|v| self.degree(v) == 2)
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * self.n.saturating_sub(1) / 2
    }

    /// Deterministic breadth-first spanning tree from vertex 0, expanding
    /// neighbors in ascending order. Errors on disconnected input.
    pub fn spanning_tree(&self) -> Result<EdgeSubgraph<'_>> {
        if !self.is_connected() {
            return Err(Error::hypothesis("spanning_tree", "a connected graph"));
        }
        let mut edges = BTreeSet::new();
        if self.n > 0 {
            let mut seen = vec![false; self.n];
            let mut queue = std::collections::VecDeque::new();
            seen[0] = true;
            queue.push_back(0);
            while let Some(x) = queue.pop_front() {
                for &y in &self.adj[x] {
                    if !seen[y] {
                        seen[y] = true;
                        edges.insert(Edge::new(x, y));
                        queue.push_back(y);
                    }
                }
            }
        }
        Ok(EdgeSubgraph {
            parent: self,
            edges,
        })
    }

    /// A new graph with the listed edges removed; the vertex set is kept.
    pub fn remove_edges<I: IntoIterator<Item = Edge>>(&self, remove: I) -> Result<Graph> {
        let drop: BTreeSet<Edge> = remove.into_iter().collect();
        for e in &drop {
            if !self.contains_edge(*e) {
                return Err(Error::MissingEdge { u: e.u, v: e.v });
            }
        }
        let pairs: Vec<(Vertex, Vertex)> = self
            .edges()
            .filter(|e| !drop.contains(e))
            .map(|e| (e.u, e.v))
            .collect();
        Graph::from_edges(self.n, &pairs)
    }

    /// Deletes a set of vertices, compacting indices. Surviving vertices
    /// keep their relative order; the returned map translates between the
    /// old and new index spaces.
    pub fn remove_vertices(&self, drop: &BTreeSet<Vertex>) -> Result<(Graph, VertexMap)> {
        for &v in drop {
            if v >= self.n {
                return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
            }
        }
        let mut to_new = vec![None; self.n];
        let mut to_old = Vec::with_capacity(self.n - drop.len());
        for v in 0..self.n {
            if !drop.contains(&v) {
                to_new[v] = Some(to_old.len());
                to_old.push(v);
            }
        }
        let pairs: Vec<(Vertex, Vertex)> = self
            .edges()
            .filter(|e| !drop.contains(&e.u) && !drop.contains(&e.v))
            .map(|e| (to_new[e.u].unwrap(), to_new[e.v].unwrap()))
            .collect();
        let g = Graph::from_edges(to_old.len(), &pairs)?;
        Ok((g, VertexMap { to_new, to_old }))
    }

    pub fn remove_vertex(&self, v: Vertex) -> Result<(Graph, VertexMap)> {
        self.remove_vertices(&BTreeSet::from([v]))
    }

    /// Materializes an edge set as its own graph on the covered vertices,
    /// compacting indices.
    pub fn edge_induced(&self, edges: &BTreeSet<Edge>) -> Result<(Graph, VertexMap)> {
        for e in edges {
            if !self.contains_edge(*e) {
                return Err(Error::MissingEdge { u: e.u, v: e.v });
            }
        }
        let covered: BTreeSet<Vertex> = edges.iter().flat_map(|e| [e.u, e.v]).collect();
        let keep: BTreeSet<Vertex> = self.vertices().filter(|v| !covered.contains(v)).collect();
        let mut to_new = vec![None; self.n];
        let mut to_old = Vec::new();
        for v in 0..self.n {
            if !keep.contains(&v) {
                to_new[v] = Some(to_old.len());
                to_old.push(v);
            }
        }
        let pairs: Vec<(Vertex, Vertex)> = edges
            .iter()
            .map(|e| (to_new[e.u].unwrap(), to_new[e.v].unwrap()))
            .collect();
        let g = Graph::from_edges(to_old.len(), &pairs)?;
        Ok((g, VertexMap { to_new, to_old }))
    }
}

/// Index translation recorded by vertex-deleting operations.
#[derive(Debug, Clone)]
pub struct VertexMap {
    to_new: Vec<Option<Vertex>>,
    to_old: Vec<Vertex>,
}

impl VertexMap {
    /// Identity map on `n` vertices.
    pub fn identity(n: usize) -> VertexMap {
        VertexMap {
            to_new: (0..n).map(Some).collect(),
            to_old: (0..n).collect(),
        }
    }

    /// New index of an old vertex, `None` when deleted.
    pub fn to_new(&self, old: Vertex) -> Option<Vertex> {
        self.to_new.get(old).copied().flatten()
    }

    /// Old index of a surviving new vertex.
    pub fn to_old(&self, new: Vertex) -> Vertex {
        self.to_old[new]
    }

    pub fn edge_to_old(&self, e: Edge) -> Edge {
        Edge::new(self.to_old(e.u()), self.to_old(e.v()))
    }

    pub fn edge_to_new(&self, e: Edge) -> Option<Edge> {
        Some(Edge::new(self.to_new(e.u())?, self.to_new(e.v())?))
    }
}

/// A subgraph identified by a subset of its parent's edges. The covered
/// vertex set is derived: a vertex belongs to the subgraph exactly when
/// some edge covers it.
#[derive(Debug, Clone)]
pub struct EdgeSubgraph<'g> {
    parent: &'g Graph,
    edges: BTreeSet<Edge>,
}

impl<'g> EdgeSubgraph<'g> {
    pub fn new(parent: &'g Graph, edges: BTreeSet<Edge>) -> Result<EdgeSubgraph<'g>> {
        for e in &edges {
            if !parent.contains_edge(*e) {
                return Err(Error::MissingEdge { u: e.u(), v: e.v() });
            }
        }
        Ok(EdgeSubgraph { parent, edges })
    }

    pub fn empty(parent: &'g Graph) -> EdgeSubgraph<'g> {
        EdgeSubgraph {
            parent,
            edges: BTreeSet::new(),
        }
    }

    pub fn parent(&self) -> &'g Graph {
        self.parent
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_set(&self) -> &BTreeSet<Edge> {
        &self.edges
    }

    pub fn into_edge_set(self) -> BTreeSet<Edge> {
        self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains(&self, e: Edge) -> bool {
        self.edges.contains(&e)
    }

    pub fn insert(&mut self, e: Edge) -> Result<()> {
        if !self.parent.contains_edge(e) {
            return Err(Error::MissingEdge { u: e.u(), v: e.v() });
        }
        self.edges.insert(e);
        Ok(())
    }

    pub fn remove(&mut self, e: Edge) {
        self.edges.remove(&e);
    }

    /// Vertices covered by at least one edge.
    pub fn covered_vertices(&self) -> BTreeSet<Vertex> {
        self.edges.iter().flat_map(|e| [e.u(), e.v()]).collect()
    }

    pub fn covers(&self, v: Vertex) -> bool {
        self.edges.iter().any(|e| e.is_incident(v))
    }

    pub fn degree_of(&self, v: Vertex) -> usize {
        self.edges.iter().filter(|e| e.is_incident(v)).count()
    }

    fn same_parent(&self, other: &EdgeSubgraph<'_>) -> bool {
        std::ptr::eq(self.parent, other.parent) || self.parent == other.parent
    }

    pub fn union(&self, other: &EdgeSubgraph<'g>) -> Result<EdgeSubgraph<'g>> {
        if !self.same_parent(other) {
            return Err(Error::ParentMismatch);
        }
        Ok(EdgeSubgraph {
            parent: self.parent,
            edges: self.edges.union(&other.edges).copied().collect(),
        })
    }

    /// Edges in exactly one of the two subgraphs.
    pub fn symmetric_difference(&self, other: &EdgeSubgraph<'g>) -> Result<EdgeSubgraph<'g>> {
        if !self.same_parent(other) {
            return Err(Error::ParentMismatch);
        }
        Ok(EdgeSubgraph {
            parent: self.parent,
            edges: self
                .edges
                .symmetric_difference(&other.edges)
                .copied()
                .collect(),
        })
    }

    pub fn difference(&self, other: &EdgeSubgraph<'g>) -> Result<EdgeSubgraph<'g>> {
        if !self.same_parent(other) {
            return Err(Error::ParentMismatch);
        }
        Ok(EdgeSubgraph {
            parent: self.parent,
            edges: self.edges.difference(&other.edges).copied().collect(),
        })
    }

    /// Edge sets of the connected components, ordered by least covered
    /// vertex. Uncovered vertices form no component under the edge-set
    /// convention.
    pub fn components(&self) -> Vec<EdgeSubgraph<'g>> {
        let covered = self.covered_vertices();
        let mut comp_of: std::collections::BTreeMap<Vertex, usize> = Default::default();
        let mut adj: std::collections::BTreeMap<Vertex, Vec<Vertex>> = Default::default();
        for e in &self.edges {
            adj.entry(e.u()).or_default().push(e.v());
            adj.entry(e.v()).or_default().push(e.u());
        }
        let mut comps: Vec<BTreeSet<Edge>> = Vec::new();
        for &start in &covered {
            if comp_of.contains_key(&start) {
                continue;
            }
            let id = comps.len();
            comps.push(BTreeSet::new());
            let mut stack = vec![start];
            comp_of.insert(start, id);
            while let Some(x) = stack.pop() {
                for &y in adj.get(&x).map(|v| v.as_slice()).unwrap_or(&[]) {
                    if !comp_of.contains_key(&y) {
                        comp_of.insert(y, id);
                        stack.push(y);
                    }
                }
            }
        }
        for e in &self.edges {
            comps[comp_of[&e.u()]].insert(*e);
        }
        comps
            .into_iter()
            .map(|edges| EdgeSubgraph {
                parent: self.parent,
                edges,
            })
            .collect()
    }

    /// True when the edge set contains no cycle.
    pub fn is_forest_shape(&self) -> bool {
        let covered = self.covered_vertices();
        covered.len() == self.edges.len() + self.components().len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;

    #[test]
    fn degree_examples() {
        let triangle = generate::cycle(3).unwrap();
        for v in 0..3 {
            assert_eq!(triangle.degree(v), 2);
        }
        let k5 = generate::complete(5).unwrap();
        for v in 0..5 {
            assert_eq!(k5.degree(v), 4);
        }
        let isolated = Graph::empty(1);
        assert_eq!(isolated.degree(0), 0);
    }

    #[test]
    fn connectivity_conventions() {
        assert!(generate::cycle(3).unwrap().is_connected());
        let two_edges = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!two_edges.is_connected());
        assert!(Graph::empty(1).is_connected());
        assert!(Graph::empty(0).is_connected());
    }

    #[test]
    fn eulerian_detection() {
        assert!(generate::cycle(3).unwrap().is_eulerian());
        assert!(!generate::complete(4).unwrap().is_eulerian());
        assert!(generate::complete(5).unwrap().is_eulerian());
    }

    #[test]
    fn rejects_malformed_edges() {
        assert!(matches!(
            Graph::from_edges(3, &[(0, 0)]),
            Err(Error::LoopEdge(0))
        ));
        assert!(matches!(
            Graph::from_edges(3, &[(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge { u: 0, v: 1 })
        ));
        assert!(matches!(
            Graph::from_edges(2, &[(0, 5)]),
            Err(Error::VertexOutOfRange { vertex: 5, n: 2 })
        ));
    }

    #[test]
    fn spanning_tree_is_bfs_deterministic() {
        // Tree input reproduces itself.
        let path = generate::path(4).unwrap();
        let t = path.spanning_tree().unwrap();
        assert_eq!(t.edge_set(), &path.edge_set());

        let triangle = generate::cycle(3).unwrap();
        let t = triangle.spanning_tree().unwrap();
        let expect: BTreeSet<Edge> = [Edge::new(0, 1), Edge::new(0, 2)].into();
        assert_eq!(t.edge_set(), &expect);

        let c4 = generate::cycle(4).unwrap();
        let t = c4.spanning_tree().unwrap();
        let expect: BTreeSet<Edge> = [Edge::new(0, 1), Edge::new(0, 3), Edge::new(1, 2)].into();
        assert_eq!(t.edge_set(), &expect);
    }

    #[test]
    fn spanning_tree_rejects_disconnected() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(g.spanning_tree().is_err());
    }

    #[test]
    fn symmetric_difference_examples() {
        let triangle = generate::cycle(3).unwrap();
        let e01 = Edge::new(0, 1);
        let e12 = Edge::new(1, 2);
        let e02 = Edge::new(0, 2);

        let a = EdgeSubgraph::new(&triangle, [e01].into()).unwrap();
        let b = EdgeSubgraph::new(&triangle, [e01].into()).unwrap();
        assert!(a.symmetric_difference(&b).unwrap().is_empty());

        let a = EdgeSubgraph::new(&triangle, [e01, e12].into()).unwrap();
        let b = EdgeSubgraph::new(&triangle, [e12, e02].into()).unwrap();
        let d = a.symmetric_difference(&b).unwrap();
        assert_eq!(d.edge_set(), &BTreeSet::from([e01, e02]));

        let empty = EdgeSubgraph::empty(&triangle);
        let d = empty.symmetric_difference(&a).unwrap();
        assert_eq!(d.edge_set(), a.edge_set());
    }

    #[test]
    fn parent_mismatch_detected() {
        let g1 = generate::cycle(3).unwrap();
        let g2 = generate::cycle(4).unwrap();
        let a = EdgeSubgraph::empty(&g1);
        let b = EdgeSubgraph::empty(&g2);
        assert!(matches!(
            a.symmetric_difference(&b),
            Err(Error::ParentMismatch)
        ));
    }

    #[test]
    fn vertex_removal_records_mapping() {
        let k4 = generate::complete(4).unwrap();
        let (g, map) = k4.remove_vertex(1).unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 3);
        assert_eq!(map.to_new(0), Some(0));
        assert_eq!(map.to_new(1), None);
        assert_eq!(map.to_new(2), Some(1));
        assert_eq!(map.to_old(2), 3);
    }

    #[test]
    fn subgraph_components_split() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (3, 4)]).unwrap();
        let s = EdgeSubgraph::new(&g, g.edge_set()).unwrap();
        let comps = s.components();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].covered_vertices(), BTreeSet::from([0, 1, 2]));
        assert_eq!(comps[1].covered_vertices(), BTreeSet::from([3, 4]));
        assert!(s.is_forest_shape());
    }
}
