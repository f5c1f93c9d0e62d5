//! Canonical labelling by partition refinement and individualization.
//!
//! The search tree is the usual one: refine to an equitable ordered partition,
//! split the first non-singleton cell on each of its vertices, recurse. Leaves are
//! compared by their relabelled adjacency rows and the largest wins. Leaves that
//! reproduce the first or best leaf give automorphisms, which prune siblings that
//! lie in the same orbit of the pointwise stabilizer of the current path.

use alloc::collections::VecDeque;
use alloc::vec::Vec;
use core::fmt;

use crate::bits::{bit, Bits};
use crate::graph::Graph;
use crate::graph6;

/// Isomorphism-class key: the graph6 bytes of the canonically relabelled graph.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn graph6(&self) -> &str {
        // Built from graph6 output, which is ASCII.
        core::str::from_utf8(&self.0).unwrap_or_default()
    }

    pub fn to_graph(&self) -> Graph {
        graph6::decode(&self.0).expect("canonical forms hold valid graph6")
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", self.graph6())
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.graph6())
    }
}

/// Result of a canonical labelling run.
#[derive(Clone, Debug)]
pub struct Labeling {
    /// `order[i]` is the vertex placed at canonical position `i`.
    pub order: Vec<usize>,
    /// `position[v]` is the canonical position of `v`.
    pub position: Vec<usize>,
    /// Generators of the automorphism group found during the search, as vertex maps.
    pub generators: Vec<Vec<usize>>,
    orbit_rep: Vec<usize>,
}

impl Labeling {
    /// Smallest vertex in the automorphism orbit of `v`.
    pub fn orbit(&self, v: usize) -> usize {
        self.orbit_rep[v]
    }

    pub fn same_orbit(&self, u: usize, v: usize) -> bool {
        self.orbit_rep[u] == self.orbit_rep[v]
    }

    pub fn canonical_graph(&self, g: &Graph) -> Graph {
        g.relabel(&self.position).expect("labeling is a permutation")
    }

    pub fn orbit_count(&self) -> usize {
        self.orbit_rep.iter().enumerate().filter(|&(v, &r)| v == r).count()
    }
}

pub fn canonical_labeling(g: &Graph) -> Labeling {
    canonical_labeling_colored(g, &[])
}

/// Canonical labelling respecting a vertex colouring; `colors` may be empty (all equal).
/// Automorphisms found preserve colours, and canonical positions sort by colour first.
pub fn canonical_labeling_colored(g: &Graph, colors: &[u32]) -> Labeling {
    let n = g.order();
    let mut cells: Vec<u64> = Vec::new();
    if n > 0 {
        if colors.is_empty() {
            cells.push(g.vertex_mask());
        } else {
            let mut palette: Vec<u32> = colors[..n].to_vec();
            palette.sort_unstable();
            palette.dedup();
            for c in palette {
                cells.push((0..n).filter(|&v| colors[v] == c).fold(0, |m, v| m | bit(v)));
            }
        }
    }
    let mut search = Search {
        g,
        n,
        first: None,
        best: None,
        generators: Vec::new(),
    };
    let queue: VecDeque<u64> = cells.iter().copied().collect();
    search.refine(&mut cells, queue);
    let mut path = Vec::new();
    search.visit(cells, &mut path);

    let order = search.best.map(|l| l.order).unwrap_or_default();
    let mut position = alloc::vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    let orbit_rep = orbit_reps(n, &search.generators, 0);
    Labeling {
        order,
        position,
        generators: search.generators,
        orbit_rep,
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let lab = canonical_labeling(g);
    CanonicalForm(graph6::encode(&lab.canonical_graph(g)).into_bytes())
}

/// Isomorphism test via canonical forms.
pub fn isomorphic(a: &Graph, b: &Graph) -> bool {
    a.order() == b.order() && a.edge_count() == b.edge_count() && canonical_form(a) == canonical_form(b)
}

/// Smallest member of each orbit under the generators that fix every vertex of `fixed`.
fn orbit_reps(n: usize, generators: &[Vec<usize>], fixed: u64) -> Vec<usize> {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for gen in generators {
        if Bits(fixed).any(|v| gen[v] != v) {
            continue;
        }
        for (v, &w) in gen.iter().enumerate().take(n) {
            let (a, b) = (find(&mut parent, v), find(&mut parent, w));
            if a != b {
                let (lo, hi) = if a < b { (a, b) } else { (b, a) };
                parent[hi] = lo;
            }
        }
    }
    (0..n).map(|v| find(&mut parent, v)).collect()
}

struct Leaf {
    order: Vec<usize>,
    key: Vec<u64>,
    /// Vertices individualized on the way to this leaf.
    path: Vec<usize>,
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    first: Option<Leaf>,
    best: Option<Leaf>,
    generators: Vec<Vec<usize>>,
}

impl Search<'_> {
    /// Refines `cells` until equitable with respect to every splitter in `queue`.
    /// Fragments are ordered by their neighbour count into the splitter, so the
    /// result depends only on the isomorphism type of (graph, partition).
    fn refine(&self, cells: &mut Vec<u64>, mut queue: VecDeque<u64>) {
        let mut buckets = [0u64; 65];
        while let Some(w) = queue.pop_front() {
            if cells.len() == self.n {
                return;
            }
            let mut i = 0;
            while i < cells.len() {
                let cell = cells[i];
                if cell.count_ones() == 1 {
                    i += 1;
                    continue;
                }
                let mut used = 0u128;
                for v in Bits(cell) {
                    let c = (self.g.neighbors(v) & w).count_ones() as usize;
                    buckets[c] |= bit(v);
                    used |= 1u128 << c;
                }
                if used.count_ones() == 1 {
                    buckets[used.trailing_zeros() as usize] = 0;
                    i += 1;
                    continue;
                }
                let mut frags = Vec::with_capacity(used.count_ones() as usize);
                while used != 0 {
                    let c = used.trailing_zeros() as usize;
                    used &= used - 1;
                    frags.push(buckets[c]);
                    buckets[c] = 0;
                }
                let k = frags.len();
                queue.extend(frags.iter().copied());
                cells.splice(i..=i, frags);
                i += k;
            }
        }
    }

    /// Explores below `cells`. Returns `Some(level)` when an automorphism proved the
    /// rest of the subtree redundant, asking ancestors deeper than `level` to unwind.
    fn visit(&mut self, cells: Vec<u64>, path: &mut Vec<usize>) -> Option<usize> {
        if cells.len() == self.n {
            return self.leaf(&cells, path);
        }
        let t = cells
            .iter()
            .position(|c| c.count_ones() > 1)
            .expect("non-discrete partition");
        let target = cells[t];
        let fixed = path.iter().fold(0u64, |m, &p| m | bit(p));
        let mut explored = 0u64;
        let mut reps: Vec<usize> = Vec::new();
        let mut reps_for = usize::MAX;
        for v in Bits(target) {
            if explored != 0 {
                if reps_for != self.generators.len() {
                    reps = orbit_reps(self.n, &self.generators, fixed);
                    reps_for = self.generators.len();
                }
                if Bits(explored).any(|u| reps[u] == reps[v]) {
                    continue;
                }
            }
            let mut child = cells.clone();
            child[t] = bit(v);
            child.insert(t + 1, target & !bit(v));
            self.refine(&mut child, VecDeque::from([bit(v)]));
            path.push(v);
            let jump = self.visit(child, path);
            path.pop();
            explored |= bit(v);
            if let Some(level) = jump {
                if level < path.len() {
                    return jump;
                }
            }
        }
        None
    }

    fn leaf(&mut self, cells: &[u64], path: &[usize]) -> Option<usize> {
        let order: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
        let mut pos = [0usize; 64];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let key: Vec<u64> = order
            .iter()
            .map(|&v| Bits(self.g.neighbors(v)).fold(0u64, |row, u| row | bit(pos[u])))
            .collect();
        let common = |other: &[usize]| path.iter().zip(other).take_while(|(a, b)| a == b).count();

        let Some(first) = &self.first else {
            self.first = Some(Leaf {
                order: order.clone(),
                key: key.clone(),
                path: path.to_vec(),
            });
            self.best = Some(Leaf {
                order,
                key,
                path: path.to_vec(),
            });
            return None;
        };
        if key == first.key {
            let level = common(&first.path);
            self.generators.push(automorphism(&first.order, &order));
            return Some(level);
        }
        let best = self.best.as_ref().expect("best is set with first");
        match key.cmp(&best.key) {
            core::cmp::Ordering::Equal => {
                let level = common(&best.path);
                self.generators.push(automorphism(&best.order, &order));
                Some(level)
            }
            core::cmp::Ordering::Greater => {
                self.best = Some(Leaf {
                    order,
                    key,
                    path: path.to_vec(),
                });
                None
            }
            core::cmp::Ordering::Less => None,
        }
    }
}

/// The map sending `a[i]` to `b[i]`; an automorphism when both leaves give the same key.
fn automorphism(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut gen = alloc::vec![0; a.len()];
    for (&x, &y) in a.iter().zip(b) {
        gen[x] = y;
    }
    gen
}
