//! Independent oracles for the integration tests: boolean adjacency matrices and
//! brute force over permutations and subsets. Nothing here calls the library's
//! search code; graphs cross the boundary only through `has_edge` and `from_edges`.
#![allow(dead_code)]

use kfree_core::Graph;
use proptest::prelude::*;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat {
    pub n: usize,
    a: Vec<Vec<bool>>,
}

impl Mat {
    pub fn empty(n: usize) -> Self {
        Self {
            n,
            a: vec![vec![false; n]; n],
        }
    }

    pub fn of(g: &Graph) -> Self {
        let n = g.order();
        let mut m = Self::empty(n);
        for i in 0..n {
            for j in 0..n {
                m.a[i][j] = i != j && g.has_edge(i, j);
            }
        }
        m
    }

    /// The labelled graph whose `k`-th pair (in `pairs(n)` order) is an edge iff bit `k` of `code` is set.
    pub fn from_code(n: usize, code: u64) -> Self {
        let mut m = Self::empty(n);
        for (k, (i, j)) in pairs(n).into_iter().enumerate() {
            if code >> k & 1 == 1 {
                m.set(i, j);
            }
        }
        m
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut m = Self::empty(n);
        for &(i, j) in edges {
            m.set(i, j);
        }
        m
    }

    pub fn set(&mut self, i: usize, j: usize) {
        self.a[i][j] = true;
        self.a[j][i] = true;
    }

    pub fn adj(&self, i: usize, j: usize) -> bool {
        self.a[i][j]
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        pairs(self.n).into_iter().filter(|&(i, j)| self.a[i][j]).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.edges().len()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.a[v].iter().filter(|&&x| x).count()
    }

    pub fn to_graph(&self) -> Graph {
        Graph::from_edges(self.n, &self.edges()).unwrap()
    }

    /// Upper triangle under the relabelling `v -> p[v]`.
    fn code_under(&self, p: &[usize]) -> Vec<bool> {
        let mut inv = vec![0; self.n];
        for (v, &w) in p.iter().enumerate() {
            inv[w] = v;
        }
        pairs(self.n).into_iter().map(|(i, j)| self.a[inv[i]][inv[j]]).collect()
    }

    /// Isomorphism invariant: the lexicographically largest upper triangle over all relabellings.
    pub fn key(&self) -> Vec<bool> {
        permutations(self.n)
            .iter()
            .map(|p| self.code_under(p))
            .max()
            .unwrap_or_default()
    }

    pub fn automorphism_count(&self) -> usize {
        permutations(self.n)
            .iter()
            .filter(|p| (0..self.n).all(|i| (0..self.n).all(|j| self.a[i][j] == self.a[p[i]][p[j]])))
            .count()
    }

    pub fn automorphisms(&self) -> Vec<Vec<usize>> {
        permutations(self.n)
            .into_iter()
            .filter(|p| (0..self.n).all(|i| (0..self.n).all(|j| self.a[i][j] == self.a[p[i]][p[j]])))
            .collect()
    }

    pub fn is_clique(&self, vs: &[usize]) -> bool {
        vs.iter()
            .enumerate()
            .all(|(x, &i)| vs[x + 1..].iter().all(|&j| self.a[i][j]))
    }

    pub fn count_cliques(&self, t: usize) -> u64 {
        subsets(self.n, t).iter().filter(|s| self.is_clique(s)).count() as u64
    }

    pub fn clique_number(&self) -> usize {
        (0..=self.n).rev().find(|&t| self.count_cliques(t) > 0).unwrap_or(0)
    }

    pub fn bipartite(&self) -> bool {
        (0u64..1 << self.n).any(|c| self.edges().iter().all(|&(i, j)| (c >> i & 1) != (c >> j & 1)))
    }

    pub fn induced(&self, vs: &[usize]) -> Self {
        let mut m = Self::empty(vs.len());
        for (x, &i) in vs.iter().enumerate() {
            for (y, &j) in vs.iter().enumerate() {
                m.a[x][y] = self.a[i][j];
            }
        }
        m
    }

    pub fn with_vertex(&self, nbrs: &[usize]) -> Self {
        let mut m = Self::empty(self.n + 1);
        for (i, j) in self.edges() {
            m.set(i, j);
        }
        for &v in nbrs {
            m.set(v, self.n);
        }
        m
    }

    pub fn is_path(&self, seq: &[usize]) -> bool {
        seq.windows(2).all(|w| self.a[w[0]][w[1]])
    }

    /// Every Hamiltonian path, each as a vertex sequence (both directions listed).
    pub fn hamiltonian_paths(&self) -> Vec<Vec<usize>> {
        permutations(self.n).into_iter().filter(|p| self.is_path(p)).collect()
    }

    /// Every Hamiltonian cycle as a sequence starting at vertex 0 (both directions listed).
    pub fn hamiltonian_cycles(&self) -> Vec<Vec<usize>> {
        if self.n < 3 {
            return Vec::new();
        }
        self.hamiltonian_paths()
            .into_iter()
            .filter(|p| p[0] == 0 && self.a[p[0]][p[self.n - 1]])
            .collect()
    }

    pub fn traceable(&self) -> bool {
        self.n >= 1 && !self.hamiltonian_paths().is_empty()
    }

    pub fn hamiltonian(&self) -> bool {
        !self.hamiltonian_cycles().is_empty()
    }

    pub fn hamiltonian_connected(&self) -> bool {
        let ends: std::collections::HashSet<(usize, usize)> =
            self.hamiltonian_paths().iter().map(|p| (p[0], p[self.n - 1])).collect();
        self.n >= 2 && pairs(self.n).into_iter().all(|e| ends.contains(&e))
    }

    /// Every path with at most `k` edges is a run of consecutive vertices on some Hamiltonian cycle.
    pub fn k_path_hamiltonian(&self, k: usize) -> bool {
        let mut covered = std::collections::HashSet::new();
        for c in self.hamiltonian_cycles() {
            for start in 0..self.n {
                for len in 1..=(k + 1).min(self.n) {
                    let run: Vec<usize> = (0..len).map(|x| c[(start + x) % self.n]).collect();
                    let mut rev = run.clone();
                    rev.reverse();
                    covered.insert(run);
                    covered.insert(rev);
                }
            }
        }
        self.simple_paths(k).iter().all(|p| covered.contains(p))
    }

    /// Simple paths with at most `k` edges, as sequences; single vertices included.
    pub fn simple_paths(&self, k: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        for len in 1..=(k + 1).min(self.n) {
            for s in subsets(self.n, len) {
                for p in permutations(len) {
                    let seq: Vec<usize> = p.iter().map(|&i| s[i]).collect();
                    if self.is_path(&seq) {
                        out.push(seq);
                    }
                }
            }
        }
        out
    }

    pub fn k_hamiltonian(&self, k: usize) -> bool {
        (0..=k).all(|size| {
            subsets(self.n, size).iter().all(|gone| {
                let keep: Vec<usize> = (0..self.n).filter(|v| !gone.contains(v)).collect();
                self.induced(&keep).hamiltonian()
            })
        })
    }

    /// A cycle through exactly the vertices `vs` plus an edge between two of them that the cycle skips.
    fn chorded_cycle_on(&self, vs: &[usize]) -> bool {
        let h = self.induced(vs);
        h.hamiltonian_cycles().iter().any(|c| {
            let on_cycle = |i: usize, j: usize| {
                (0..h.n).any(|x| {
                    let (a, b) = (c[x], c[(x + 1) % h.n]);
                    (a, b) == (i, j) || (a, b) == (j, i)
                })
            };
            h.edges().iter().any(|&(i, j)| !on_cycle(i, j))
        })
    }

    pub fn chorded_pancyclic(&self) -> bool {
        self.n >= 4 && (4..=self.n).all(|len| subsets(self.n, len).iter().any(|s| self.chorded_cycle_on(s)))
    }
}

pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect()
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                go(n, cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(n, &mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u64..1 << n)
        .filter(|s| s.count_ones() as usize == k)
        .map(|s| (0..n).filter(|&v| s >> v & 1 == 1).collect())
        .collect()
}

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// Complete multipartite graph with parts laid out left to right.
pub fn multipartite(sizes: &[usize]) -> Mat {
    let part: Vec<usize> = sizes
        .iter()
        .enumerate()
        .flat_map(|(p, &s)| std::iter::repeat_n(p, s))
        .collect();
    let mut m = Mat::empty(part.len());
    for (i, j) in pairs(part.len()) {
        if part[i] != part[j] {
            m.set(i, j);
        }
    }
    m
}

/// Balanced part sizes for `n` vertices in `r` parts, largest first.
pub fn balanced(n: usize, r: usize) -> Vec<usize> {
    (0..r).map(|i| (n + r - 1 - i) / r).collect()
}

/// Graphs on up to `max_n` vertices, as (n, edge bits).
pub fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let edges: Vec<(usize, usize)> = pairs(n)
                .into_iter()
                .zip(bits)
                .filter(|(_, b)| *b)
                .map(|(e, _)| e)
                .collect();
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

/// A graph together with a random relabelling of its vertices.
pub fn arb_graph_and_perm(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    arb_graph(max_n).prop_flat_map(|g| {
        let n = g.order();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}
