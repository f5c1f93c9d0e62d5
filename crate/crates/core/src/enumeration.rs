//! Isomorph-free generation by canonical augmentation, one vertex at a time.
//!
//! A graph on `k+1` vertices is produced from its canonical parent: delete the
//! vertex that, among those minimizing (degree, sum of neighbour degrees), has the
//! largest canonical position. A child built by adding vertex `k` is kept only if
//! `k` is in the same automorphism orbit as that vertex. Children of one parent
//! are taken one per orbit of `Aut(parent)` on neighbour sets.

use alloc::vec::Vec;
use core::fmt;

use crate::bits::{binom2, bit, Bits};
use crate::canon::canonical_labeling;
use crate::graph::Graph;

/// Largest `n` accepted by [`Enumerator::new`].
pub const SOFT_MAX_VERTICES: usize = 12;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EnumConstraints {
    pub n: usize,
    /// Keep only `K_{r+1}`-free graphs.
    pub max_clique: Option<usize>,
    pub min_edges: Option<usize>,
    pub max_edges: Option<usize>,
    pub bipartite_only: bool,
}

impl EnumConstraints {
    pub fn all(n: usize) -> Self {
        Self { n, ..Self::default() }
    }

    pub fn k_free(n: usize, r: usize) -> Self {
        Self {
            n,
            max_clique: Some(r),
            ..Self::default()
        }
    }

    /// Whether `g` meets every constraint.
    pub fn admits(&self, g: &Graph) -> bool {
        let e = g.edge_count();
        g.order() == self.n
            && self.max_clique.is_none_or(|r| g.clique_number_at_most(r))
            && self.min_edges.is_none_or(|m| e >= m)
            && self.max_edges.is_none_or(|m| e <= m)
            && (!self.bipartite_only || g.is_bipartite())
    }

    fn infeasible(&self) -> bool {
        let top = binom2(self.n as u64) as usize;
        let lo = self.min_edges.unwrap_or(0);
        let hi = self.max_edges.unwrap_or(top).min(top);
        lo > hi || self.max_clique == Some(0) && self.n > 0
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EnumError {
    TooManyVertices { n: usize },
}

impl fmt::Display for EnumError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::TooManyVertices { n } => write!(
                f,
                "native enumeration stops at {SOFT_MAX_VERTICES} vertices (asked for {n}); \
                 feed an external graph6 stream instead"
            ),
        }
    }
}

impl core::error::Error for EnumError {}

/// A node of the generation tree: a graph with generators of its automorphism group.
#[derive(Clone, Debug)]
pub struct WorkUnit {
    pub graph: Graph,
    generators: Vec<Vec<usize>>,
}

#[derive(Clone, Debug)]
pub struct Enumerator {
    c: EnumConstraints,
}

impl Enumerator {
    pub fn new(c: EnumConstraints) -> Result<Self, EnumError> {
        if c.n > SOFT_MAX_VERTICES {
            return Err(EnumError::TooManyVertices { n: c.n });
        }
        Ok(Self { c })
    }

    pub fn constraints(&self) -> &EnumConstraints {
        &self.c
    }

    pub fn for_each(&self, mut f: impl FnMut(&Graph)) {
        for unit in self.work_units(0) {
            self.run_unit(&unit, &mut f);
        }
    }

    pub fn collect(&self) -> Vec<Graph> {
        let mut out = Vec::new();
        self.for_each(|g| out.push(g.clone()));
        out
    }

    /// Generation-tree nodes at `depth` vertices (capped at `n`), in generation order.
    /// Running every unit in order reproduces [`Enumerator::for_each`] exactly.
    pub fn work_units(&self, depth: usize) -> Vec<WorkUnit> {
        let mut out = Vec::new();
        if self.c.infeasible() {
            return out;
        }
        let root = WorkUnit {
            graph: Graph::empty(0).expect("n = 0"),
            generators: Vec::new(),
        };
        let depth = depth.min(self.c.n);
        self.expand(root, depth, &mut |u| out.push(u));
        out
    }

    /// Emits every admitted graph below `unit`.
    pub fn run_unit(&self, unit: &WorkUnit, f: &mut impl FnMut(&Graph)) {
        let n = self.c.n;
        self.expand(unit.clone(), n, &mut |u: WorkUnit| {
            if self.c.min_edges.is_none_or(|m| u.graph.edge_count() >= m) {
                f(&u.graph);
            }
        });
    }

    /// Depth-first over children of `node` until graphs have `depth` vertices.
    fn expand(&self, node: WorkUnit, depth: usize, emit: &mut dyn FnMut(WorkUnit)) {
        let k = node.graph.order();
        if k == depth {
            emit(node);
            return;
        }
        let n = self.c.n;
        let g = &node.graph;
        let e = g.edge_count();
        let remaining_after = n - (k + 1);
        for s in subset_orbit_reps(k, &node.generators) {
            let deg = s.count_ones() as usize;
            if let Some(r) = self.c.max_clique {
                if g.has_clique_in(s, r) {
                    continue;
                }
            }
            if self.c.max_edges.is_some_and(|m| e + deg > m) {
                continue;
            }
            if let Some(m) = self.c.min_edges {
                let potential = e + deg + binom2(remaining_after as u64) as usize + remaining_after * (k + 1);
                if potential < m {
                    continue;
                }
            }
            let child = g.with_vertex(s).expect("within capacity");
            if self.c.bipartite_only && !child.is_bipartite() {
                continue;
            }
            let Some(generators) = accept(&child, k + 1 < n) else {
                continue;
            };
            self.expand(
                WorkUnit {
                    graph: child,
                    generators,
                },
                depth,
                emit,
            );
        }
    }
}

/// Canonical-parent test for the last vertex. Returns the child's automorphism
/// generators (computed only when `need_group`) when accepted.
fn accept(child: &Graph, need_group: bool) -> Option<Vec<Vec<usize>>> {
    let n = child.order();
    let last = n - 1;
    let key = |v: usize| {
        let nb = child.neighbors(v);
        (child.degree(v), Bits(nb).map(|u| child.degree(u)).sum::<usize>())
    };
    let best = (0..n).map(key).min().expect("nonempty");
    if key(last) != best {
        return None;
    }
    let cands: u64 = (0..n).filter(|&v| key(v) == best).fold(0, |m, v| m | bit(v));
    if cands == bit(last) {
        return Some(if need_group {
            canonical_labeling(child).generators
        } else {
            Vec::new()
        });
    }
    let lab = canonical_labeling(child);
    let w = Bits(cands).max_by_key(|&v| lab.position[v]).expect("nonempty");
    lab.same_orbit(w, last).then_some(lab.generators)
}

/// One representative (the smallest) from each orbit of the group on subsets of `0..k`.
fn subset_orbit_reps(k: usize, generators: &[Vec<usize>]) -> Vec<u64> {
    let total = 1usize << k;
    if generators.is_empty() {
        return (0..total as u64).collect();
    }
    let mut parent: Vec<u32> = (0..total as u32).collect();
    fn find(p: &mut [u32], mut x: u32) -> u32 {
        while p[x as usize] != x {
            p[x as usize] = p[p[x as usize] as usize];
            x = p[x as usize];
        }
        x
    }
    for gen in generators {
        for s in 0..total as u64 {
            let img = Bits(s).fold(0u64, |m, v| m | bit(gen[v]));
            let (a, b) = (find(&mut parent, s as u32), find(&mut parent, img as u32));
            if a != b {
                let (lo, hi) = if a < b { (a, b) } else { (b, a) };
                parent[hi as usize] = lo;
            }
        }
    }
    (0..total as u32)
        .filter(|&s| find(&mut parent, s) == s)
        .map(u64::from)
        .collect()
}
