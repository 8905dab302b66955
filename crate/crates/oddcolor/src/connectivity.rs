//! Vertex connectivity and internally-disjoint path packing.
//!
//! Everything here reduces to unit-vertex-capacity max flow on the split
//! graph: each non-terminal vertex becomes an in/out pair joined by a
//! capacity-one arc, so flow units correspond to internally disjoint paths
//! (Menger). Inputs are desk-scale, so one BFS augmentation per path unit
//! is plenty.

use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// Dense residual network with unit capacities.
struct FlowNet {
    // arcs stored as (to, cap); rev[i] is the index of the reverse arc
    heads: Vec<Vec<usize>>, // node -> arc indices
    to: Vec<usize>,
    cap: Vec<u32>,
}

impl FlowNet {
    fn new(nodes: usize) -> FlowNet {
        FlowNet {
            heads: vec![Vec::new(); nodes],
            to: Vec::new(),
            cap: Vec::new(),
        }
    }

    fn add_arc(&mut self, a: usize, b: usize, cap: u32) {
        let i = self.to.len();
        self.to.push(b);
        self.cap.push(cap);
        self.heads[a].push(i);
        let j = self.to.len();
        self.to.push(a);
        self.cap.push(0);
        self.heads[b].push(j);
        debug_assert_eq!(i ^ 1, j);
    }

    /// One BFS augmenting step; returns false when no augmenting path exists.
    fn augment(&mut self, s: usize, t: usize) -> bool {
        let n = self.heads.len();
        let mut pred: Vec<Option<usize>> = vec![None; n];
        let mut seen = vec![false; n];
        seen[s] = true;
        let mut queue = VecDeque::new();
        queue.push_back(s);
        while let Some(x) = queue.pop_front() {
            if x == t {
                break;
            }
            for &i in &self.heads[x] {
                let y = self.to[i];
                if self.cap[i] > 0 && !seen[y] {
                    seen[y] = true;
                    pred[y] = Some(i);
                    queue.push_back(y);
                }
            }
        }
        if !seen[t] {
            return false;
        }
        let mut x = t;
        while x != s {
            let i = pred[x].unwrap();
            self.cap[i] -= 1;
            self.cap[i ^ 1] += 1;
            x = self.to[i ^ 1];
        }
        true
    }

    fn max_flow(&mut self, s: usize, t: usize, limit: u32) -> u32 {
        let mut flow = 0;
        while flow < limit && self.augment(s, t) {
            flow += 1;
        }
        flow
    }
}

/// Number of internally vertex-disjoint paths between the nonadjacent
/// vertices `a` and `b` (equivalently, by Menger, the least size of a
/// vertex cut separating them).
pub(crate) fn local_connectivity(g: &Graph, a: Vertex, b: Vertex, limit: u32) -> u32 {
    // Split every vertex except the terminals: node 2v = in, 2v+1 = out.
    let n = g.vertex_count();
    let mut net = FlowNet::new(2 * n);
    let node_in = |v: Vertex| 2 * v;
    let node_out = |v: Vertex| 2 * v + 1;
    for v in g.vertices() {
        let cap = if v == a || v == b { limit } else { 1 };
        net.add_arc(node_in(v), node_out(v), cap);
    }
    for e in g.edges() {
        net.add_arc(node_out(e.u()), node_in(e.v()), limit);
        net.add_arc(node_out(e.v()), node_in(e.u()), limit);
    }
    net.max_flow(node_out(a), node_in(b), limit)
}

/// True when the graph is `k`-connected: more than `k` vertices and no
/// vertex set of fewer than `k` vertices disconnects it. Decided with
/// flow-based Menger checks over nonadjacent pairs.
pub fn is_k_connected(g: &Graph, k: usize) -> bool {
    let n = g.vertex_count();
    if k == 0 {
        return true;
    }
    if n < k + 1 || !g.is_connected() {
        return false;
    }
    let k = k as u32;
    for a in g.vertices() {
        for b in (a + 1)..n {
            if !g.has_edge(a, b) && local_connectivity(g, a, b, k) < k {
                return false;
            }
        }
    }
    true
}

/// `k` paths from `sources` to `sinks`, pairwise internally vertex-disjoint,
/// with no internal vertex inside either terminal set. Terminal vertices may
/// carry several paths; interior vertices at most one.
///
/// Fails with the achieved path count when fewer than `k` exist.
pub fn disjoint_paths(
    g: &Graph,
    sources: &BTreeSet<Vertex>,
    sinks: &BTreeSet<Vertex>,
    k: usize,
) -> Result<Vec<Vec<Vertex>>> {
    if sources.is_empty() || sinks.is_empty() {
        return Err(Error::hypothesis(
            "disjoint_paths",
            "nonempty source and sink sets",
        ));
    }
    if !sources.is_disjoint(sinks) {
        return Err(Error::hypothesis(
            "disjoint_paths",
            "disjoint source and sink sets",
        ));
    }
    for &v in sources.iter().chain(sinks.iter()) {
        if v >= g.vertex_count() {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: g.vertex_count(),
            });
        }
    }
    let n = g.vertex_count();
    let k32 = k as u32;
    // Nodes: 2v/2v+1 vertex split, then super source S and sink T.
    let s = 2 * n;
    let t = 2 * n + 1;
    let mut net = FlowNet::new(2 * n + 2);
    let node_in = |v: Vertex| 2 * v;
    let node_out = |v: Vertex| 2 * v + 1;
    for v in g.vertices() {
        let cap = if sources.contains(&v) || sinks.contains(&v) {
            k32
        } else {
            1
        };
        net.add_arc(node_in(v), node_out(v), cap);
    }
    for e in g.edges() {
        let (u, v) = e.endpoints();
        // Paths leave sources and enter sinks; arcs into sources or out of
        // sinks would let a path cross a terminal internally.
        if !sources.contains(&v) && !sinks.contains(&u) {
            net.add_arc(node_out(u), node_in(v), 1);
        }
        if !sources.contains(&u) && !sinks.contains(&v) {
            net.add_arc(node_out(v), node_in(u), 1);
        }
    }
    for &v in sources {
        net.add_arc(s, node_in(v), k32);
    }
    for &v in sinks {
        net.add_arc(node_out(v), t, k32);
    }
    let found = net.max_flow(s, t, k32);
    if (found as usize) < k {
        return Err(Error::hypothesis(
            "disjoint_paths",
            format!("{k} internally disjoint paths (Menger bound is {found})"),
        ));
    }

    // Decompose the flow into paths by walking saturated arcs. Each
    // interior split arc carries at most one unit, so the walk is unique
    // once an arc is consumed.
    let mut used = vec![false; net.to.len()];
    let mut paths = Vec::with_capacity(k);
    for _ in 0..k {
        let mut path = Vec::new();
        let mut node = s;
        loop {
            let mut advanced = false;
            for &i in &net.heads[node] {
                if i % 2 == 0 && !used[i] && net.cap[i ^ 1] > 0 {
                    // forward arc that carries at least one unused unit
                    net.cap[i ^ 1] -= 1;
                    if net.cap[i ^ 1] == 0 {
                        used[i] = true;
                    }
                    node = net.to[i];
                    if node != t && node % 2 == 0 {
                        path.push(node / 2);
                    }
                    advanced = true;
                    break;
                }
            }
            if node == t {
                break;
            }
            if !advanced {
                return Err(Error::internal(
                    "disjoint_paths",
                    "flow decomposition stalled".to_string(),
                ));
            }
        }
        paths.push(path);
    }
    paths.sort();
    Ok(paths)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;

    #[test]
    fn complete_graphs_are_highly_connected() {
        let k5 = generate::complete(5).unwrap();
        assert!(is_k_connected(&k5, 4));
        assert!(!is_k_connected(&k5, 5));
    }

    #[test]
    fn wheel_w4_is_not_4_connected() {
        // Independent oracle: try every 3-subset of vertices and look for
        // a disconnecting one.
        let w4 = generate::wheel(4).unwrap();
        let mut cut_found = false;
        let n = w4.vertex_count();
        for a in 0..n {
            for b in (a + 1)..n {
                for c in (b + 1)..n {
                    let (rest, _) = w4.remove_vertices(&BTreeSet::from([a, b, c])).unwrap();
                    if !rest.is_connected() {
                        cut_found = true;
                    }
                }
            }
        }
        assert!(cut_found);
        assert!(!is_k_connected(&w4, 4));
        assert!(is_k_connected(&w4, 3));
    }

    #[test]
    fn cycle_is_2_connected() {
        let c5 = generate::cycle(5).unwrap();
        assert!(is_k_connected(&c5, 2));
        assert!(!is_k_connected(&c5, 3));
    }

    #[test]
    fn k_connectivity_is_monotone() {
        for g in [
            generate::complete(6).unwrap(),
            generate::wheel(5).unwrap(),
            generate::circulant(9, &[1, 2]).unwrap(),
        ] {
            for k in 2..6 {
                if is_k_connected(&g, k) {
                    assert!(is_k_connected(&g, k - 1));
                }
            }
        }
    }

    #[test]
    fn disjoint_paths_on_cycle() {
        let c4 = generate::cycle(4).unwrap();
        let paths = disjoint_paths(&c4, &BTreeSet::from([0]), &BTreeSet::from([2]), 2).unwrap();
        assert_eq!(paths, vec![vec![0, 1, 2], vec![0, 3, 2]]);
    }

    #[test]
    fn disjoint_paths_respects_cut_vertex() {
        let p3 = generate::path(3).unwrap();
        let err = disjoint_paths(&p3, &BTreeSet::from([0]), &BTreeSet::from([2]), 2);
        assert!(err.is_err());
        let one = disjoint_paths(&p3, &BTreeSet::from([0]), &BTreeSet::from([2]), 1).unwrap();
        assert_eq!(one, vec![vec![0, 1, 2]]);
    }

    #[test]
    fn single_path_in_complete_graph() {
        let k5 = generate::complete(5).unwrap();
        let paths = disjoint_paths(&k5, &BTreeSet::from([0]), &BTreeSet::from([1]), 1).unwrap();
        assert_eq!(paths, vec![vec![0, 1]]);
    }
}
