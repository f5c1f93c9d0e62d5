//! Dense simple graphs on at most 64 vertices.

use alloc::vec::Vec;
use core::fmt;

use crate::bits::{bit, low_mask, Bits};

pub const MAX_VERTICES: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphError {
    /// More than [`MAX_VERTICES`] vertices requested.
    Capacity {
        requested: usize,
    },
    VertexOutOfRange {
        vertex: usize,
        n: usize,
    },
    SelfLoop {
        vertex: usize,
    },
    ZeroPart,
    /// A relabeling that is not a permutation of `0..n`.
    NotPermutation,
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Capacity { requested } => {
                write!(f, "{requested} vertices exceeds the capacity of {MAX_VERTICES}")
            }
            Self::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for a graph on {n} vertices")
            }
            Self::SelfLoop { vertex } => write!(f, "self-loop at vertex {vertex}"),
            Self::ZeroPart => f.write_str("part sizes must be positive"),
            Self::NotPermutation => f.write_str("relabeling is not a permutation"),
        }
    }
}

impl core::error::Error for GraphError {}

/// An undirected simple graph; `adj[v]` is the neighbourhood of `v` as a bitset.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: [u64; MAX_VERTICES],
}

impl Graph {
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::Capacity { requested: n });
        }
        Ok(Self {
            n,
            adj: [0; MAX_VERTICES],
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Self::empty(n)?;
        for &(u, v) in edges {
            g.check_pair(u, v)?;
            g.set_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from neighbourhood words, symmetrizing and dropping bits outside `0..n`.
    pub fn from_adjacency(n: usize, rows: &[u64]) -> Result<Self, GraphError> {
        let mut g = Self::empty(n)?;
        let m = low_mask(n);
        for (u, &row) in rows.iter().enumerate().take(n) {
            for v in Bits(row & m & !bit(u)) {
                g.set_edge(u, v);
            }
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Result<Self, GraphError> {
        let mut g = Self::empty(n)?;
        let all = low_mask(n);
        for v in 0..n {
            g.adj[v] = all & !bit(v);
        }
        Ok(g)
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<(), GraphError> {
        for w in [u, v] {
            if w >= self.n {
                return Err(GraphError::VertexOutOfRange { vertex: w, n: self.n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop { vertex: u });
        }
        Ok(())
    }

    #[inline]
    pub(crate) fn set_edge(&mut self, u: usize, v: usize) {
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn vertex_mask(&self) -> u64 {
        low_mask(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    /// The neighbourhood words for vertices `0..n`.
    #[inline]
    pub fn rows(&self) -> &[u64] {
        &self.adj[..self.n]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & bit(v) != 0
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.rows().iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, ordered by `v` then `u`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |v| Bits(self.adj[v] & low_mask(v)).map(move |u| (u, v)))
    }

    /// Degrees sorted nondecreasingly.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }

    pub fn min_degree(&self) -> Option<usize> {
        (0..self.n).map(|v| self.degree(v)).min()
    }

    /// Whether some clique of size `size` lies inside `within`.
    pub fn has_clique_in(&self, within: u64, size: usize) -> bool {
        fn go(adj: &[u64], cand: u64, size: usize) -> bool {
            if size == 0 {
                return true;
            }
            if (cand.count_ones() as usize) < size {
                return false;
            }
            let mut rest = cand;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if (rest.count_ones() as usize) + 1 < size {
                    return false;
                }
                if go(adj, rest & adj[v], size - 1) {
                    return true;
                }
            }
            false
        }
        go(&self.adj, within & self.vertex_mask(), size)
    }

    /// True iff the graph has no clique on `r + 1` vertices.
    pub fn clique_number_at_most(&self, r: usize) -> bool {
        !self.has_clique_in(self.vertex_mask(), r + 1)
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.reachable(0, self.vertex_mask()) == self.vertex_mask()
    }

    /// Vertices of `within` reachable from `start` inside `within`.
    pub fn reachable(&self, start: usize, within: u64) -> u64 {
        let mut seen = bit(start);
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in Bits(frontier) {
                next |= self.adj[v];
            }
            next &= within & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    pub fn is_bipartite(&self) -> bool {
        let mut color = [0u8; MAX_VERTICES];
        let mut placed = 0u64;
        for s in 0..self.n {
            if placed & bit(s) != 0 {
                continue;
            }
            placed |= bit(s);
            color[s] = 1;
            let mut stack = Vec::from([s]);
            while let Some(v) = stack.pop() {
                for u in Bits(self.adj[v]) {
                    if placed & bit(u) == 0 {
                        placed |= bit(u);
                        color[u] = 3 - color[v];
                        stack.push(u);
                    } else if color[u] == color[v] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// The graph with `perm[v]` as the new name of `v`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self, GraphError> {
        if perm.len() != self.n {
            return Err(GraphError::NotPermutation);
        }
        let mut seen = 0u64;
        for &p in perm {
            if p >= self.n || seen & bit(p) != 0 {
                return Err(GraphError::NotPermutation);
            }
            seen |= bit(p);
        }
        let mut g = Self::empty(self.n)?;
        for (u, v) in self.edges() {
            g.set_edge(perm[u], perm[v]);
        }
        Ok(g)
    }

    /// The subgraph induced by `keep`, with vertices renumbered in increasing order.
    pub fn induced(&self, keep: u64) -> Self {
        let keep = keep & self.vertex_mask();
        let mut index = [0usize; MAX_VERTICES];
        for (i, v) in Bits(keep).enumerate() {
            index[v] = i;
        }
        let mut g = Self {
            n: keep.count_ones() as usize,
            adj: [0; MAX_VERTICES],
        };
        for v in Bits(keep) {
            for u in Bits(self.adj[v] & keep) {
                g.adj[index[v]] |= bit(index[u]);
            }
        }
        g
    }

    pub fn remove_vertices(&self, drop: u64) -> Self {
        self.induced(self.vertex_mask() & !drop)
    }

    /// A copy with one new vertex `n` joined to `nbrs`.
    pub fn with_vertex(&self, nbrs: u64) -> Result<Self, GraphError> {
        if self.n == MAX_VERTICES {
            return Err(GraphError::Capacity { requested: self.n + 1 });
        }
        let nbrs = nbrs & self.vertex_mask();
        let mut g = self.clone();
        let v = self.n;
        g.n += 1;
        g.adj[v] = nbrs;
        for u in Bits(nbrs) {
            g.adj[u] |= bit(v);
        }
        Ok(g)
    }

    pub fn with_edge(&self, u: usize, v: usize) -> Result<Self, GraphError> {
        self.check_pair(u, v)?;
        let mut g = self.clone();
        g.set_edge(u, v);
        Ok(g)
    }

    pub fn complement(&self) -> Self {
        let all = self.vertex_mask();
        let mut g = self.clone();
        for v in 0..self.n {
            g.adj[v] = all & !self.adj[v] & !bit(v);
        }
        g
    }

    /// Disjoint union, with `other` numbered after `self`.
    pub fn disjoint_union(&self, other: &Self) -> Result<Self, GraphError> {
        let n = self.n + other.n;
        let mut g = Self::empty(n)?;
        g.adj[..self.n].copy_from_slice(self.rows());
        for v in 0..other.n {
            g.adj[self.n + v] = other.adj[v] << self.n;
        }
        Ok(g)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        f.write_str("])")
    }
}

/// Part sizes of a complete multipartite graph, kept nonincreasing.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PartSizes(Vec<usize>);

impl PartSizes {
    /// Sorts `sizes` nonincreasingly; zero entries are rejected.
    pub fn new(mut sizes: Vec<usize>) -> Result<Self, GraphError> {
        if sizes.contains(&0) {
            return Err(GraphError::ZeroPart);
        }
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self(sizes))
    }

    /// The balanced split of `n` into `r` parts; parts of size 0 are dropped when `n < r`.
    pub fn balanced(n: usize, r: usize) -> Self {
        assert!(r >= 1, "at least one part");
        let (q, s) = (n / r, n % r);
        let sizes = (0..r)
            .map(|i| if i < s { q + 1 } else { q })
            .filter(|&x| x > 0)
            .collect();
        Self(sizes)
    }

    pub fn sizes(&self) -> &[usize] {
        &self.0
    }

    pub fn order(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn largest(&self) -> usize {
        self.0.first().copied().unwrap_or(0)
    }

    pub fn count(&self) -> usize {
        self.0.len()
    }

    /// Vertex blocks in contiguous order, as masks.
    pub fn blocks(&self) -> Vec<u64> {
        let mut start = 0;
        self.0
            .iter()
            .map(|&s| {
                let m = low_mask(start + s) & !low_mask(start);
                start += s;
                m
            })
            .collect()
    }
}

impl fmt::Display for PartSizes {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("K_{")?;
        for (i, s) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{s}")?;
        }
        f.write_str("}")
    }
}

/// Complete multipartite graph with parts laid out in contiguous blocks.
pub fn complete_multipartite(parts: &PartSizes) -> Result<Graph, GraphError> {
    let mut g = Graph::empty(parts.order())?;
    let all = g.vertex_mask();
    for block in parts.blocks() {
        for v in Bits(block) {
            g.adj[v] = all & !block;
        }
    }
    Ok(g)
}
