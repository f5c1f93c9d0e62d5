//! Exact deciders for traceability, Hamiltonicity and their relatives.
//!
//! All of them sit on one depth-first path extension over neighbourhood words.
//! A partial path `p0 .. cur` with unvisited set `U` is cut when
//! `U + cur` is disconnected, when some vertex of `U` has too few usable
//! neighbours left, or when two vertices both need `cur` as their predecessor.
//! A vertex that needs `cur` is taken next without branching.

use alloc::vec::Vec;
use core::fmt;

use crate::bits::{bit, low_mask, subsets_of_size, Bits};
use crate::graph::{Graph, PartSizes};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PropertyKind {
    Traceable,
    Hamiltonian,
    HamiltonianConnected,
    /// Every path with at most `k` edges lies on a Hamiltonian cycle.
    KPathHamiltonian(usize),
    /// Deleting any at most `k` vertices leaves a Hamiltonian graph.
    KHamiltonian(usize),
    ChordedPancyclic,
}

impl PropertyKind {
    /// Offset `l` in the `e(T_r(n-1)) + l + 1` edge bounds.
    pub fn ell(self) -> i64 {
        match self {
            Self::Traceable => -1,
            Self::Hamiltonian | Self::ChordedPancyclic => 0,
            Self::HamiltonianConnected => 1,
            Self::KPathHamiltonian(k) | Self::KHamiltonian(k) => k as i64,
        }
    }

    /// Short identifier used on the command line and in reports.
    pub fn id(self) -> &'static str {
        match self {
            Self::Traceable => "trace",
            Self::Hamiltonian => "ham",
            Self::HamiltonianConnected => "hamconn",
            Self::KPathHamiltonian(_) => "kpath",
            Self::KHamiltonian(_) => "kham",
            Self::ChordedPancyclic => "chorded",
        }
    }

    pub fn k(self) -> Option<usize> {
        match self {
            Self::KPathHamiltonian(k) | Self::KHamiltonian(k) => Some(k),
            _ => None,
        }
    }
}

impl fmt::Display for PropertyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.k() {
            Some(k) => write!(f, "{}({k})", self.id()),
            None => f.write_str(self.id()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PropertyError {
    /// `k` outside the range where the property is defined for this `n`.
    ParameterOutOfRange {
        k: usize,
        n: usize,
    },
    /// Too few vertices for the property to be meaningful.
    TooFewVertices {
        n: usize,
        min: usize,
    },
    SameEndpoints,
    VertexOutOfRange {
        vertex: usize,
        n: usize,
    },
}

impl fmt::Display for PropertyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::ParameterOutOfRange { k, n } => write!(f, "k={k} out of range for n={n}"),
            Self::TooFewVertices { n, min } => write!(f, "needs at least {min} vertices, got {n}"),
            Self::SameEndpoints => f.write_str("path endpoints must differ"),
            Self::VertexOutOfRange { vertex, n } => write!(f, "vertex {vertex} out of range for n={n}"),
        }
    }
}

impl core::error::Error for PropertyError {}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WitnessKind {
    Cycle,
    Path,
    PathBetween,
    /// The property holds by exhaustion; no single object certifies it.
    None,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub kind: WitnessKind,
    pub vertices: Vec<usize>,
}

/// Why a property fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Counterexample {
    NoCycle,
    NoPath,
    /// No Hamiltonian path joins these two vertices.
    Pair(usize, usize),
    /// A short path lying on no Hamiltonian cycle.
    Segment(Vec<usize>),
    /// Deleting these vertices leaves a non-Hamiltonian graph.
    Deletion(Vec<usize>),
    /// No chorded cycle of this length.
    MissingLength(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decision {
    Holds(Witness),
    Fails(Counterexample),
}

impl Decision {
    pub fn holds(&self) -> bool {
        matches!(self, Self::Holds(_))
    }
}

pub fn decide(g: &Graph, property: PropertyKind) -> Result<Decision, PropertyError> {
    let none = || Witness {
        kind: WitnessKind::None,
        vertices: Vec::new(),
    };
    Ok(match property {
        PropertyKind::Traceable => match find_hamiltonian_path(g) {
            Some(w) => Decision::Holds(w),
            None => Decision::Fails(Counterexample::NoPath),
        },
        PropertyKind::Hamiltonian => match find_hamiltonian_cycle(g) {
            Some(w) => Decision::Holds(w),
            None => Decision::Fails(Counterexample::NoCycle),
        },
        PropertyKind::HamiltonianConnected => match hamiltonian_connected_failure(g) {
            None => Decision::Holds(none()),
            Some((u, v)) => Decision::Fails(Counterexample::Pair(u, v)),
        },
        PropertyKind::KPathHamiltonian(k) => match k_path_failure(g, k)? {
            None => Decision::Holds(none()),
            Some(p) => Decision::Fails(Counterexample::Segment(p)),
        },
        PropertyKind::KHamiltonian(k) => match k_hamiltonian_failure(g, k)? {
            None => Decision::Holds(none()),
            Some(s) => Decision::Fails(Counterexample::Deletion(s)),
        },
        PropertyKind::ChordedPancyclic => match chorded_pancyclic_failure(g)? {
            None => Decision::Holds(none()),
            Some(len) => Decision::Fails(Counterexample::MissingLength(len)),
        },
    })
}

/// Boolean form of [`decide`].
pub fn has_property(g: &Graph, property: PropertyKind) -> Result<bool, PropertyError> {
    decide(g, property).map(|d| d.holds())
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Goal {
    /// Cover everything, ending anywhere.
    Free,
    /// Cover everything and finish at this vertex.
    End(usize),
    /// Cover everything and finish next to this vertex (the start of the cycle).
    Close(usize),
}

struct PathSearch<'g> {
    adj: &'g [u64],
}

impl PathSearch<'_> {
    fn extend(&self, cur: usize, rest: u64, goal: Goal, path: &mut Vec<usize>) -> bool {
        if rest == 0 {
            return match goal {
                Goal::Free => true,
                Goal::End(e) => cur == e,
                Goal::Close(s) => self.adj[cur] & bit(s) != 0,
            };
        }
        let Some(mut cands) = self.candidates(cur, rest, goal) else {
            return false;
        };
        // Fewest onward options first.
        let mut order = [(0u32, 0u8); 64];
        let mut len = 0;
        while cands != 0 {
            let v = cands.trailing_zeros() as usize;
            cands &= cands - 1;
            order[len] = ((self.adj[v] & rest).count_ones(), v as u8);
            len += 1;
        }
        order[..len].sort_unstable();
        for &(_, v) in &order[..len] {
            let v = v as usize;
            path.push(v);
            if self.extend(v, rest & !bit(v), goal, path) {
                return true;
            }
            path.pop();
        }
        false
    }

    /// Admissible next vertices, or `None` when the state cannot be completed.
    fn candidates(&self, cur: usize, rest: u64, goal: Goal) -> Option<u64> {
        let adj = self.adj;
        let mut cands = adj[cur] & rest;
        if cands == 0 {
            return None;
        }
        let single = rest.count_ones() == 1;
        let (end, close) = match goal {
            Goal::Free => (None, None),
            Goal::End(e) => (Some(e), None),
            Goal::Close(s) => (None, Some(s)),
        };
        if let Some(e) = end {
            if rest & bit(e) == 0 {
                return None;
            }
            if !single {
                cands &= !bit(e);
            }
        }
        let here = rest | bit(cur);
        if adj_reach(adj, cur, here) != here {
            return None;
        }
        let mut forced = 0u64;
        let mut dead_ends = 0u32;
        for u in Bits(rest) {
            let mut usable = adj[u] & here;
            if let Some(s) = close {
                usable |= adj[u] & bit(s);
            }
            let deg = usable.count_ones();
            let terminal = end == Some(u);
            let need = if terminal || goal == Goal::Free { 1 } else { 2 };
            if deg < need {
                return None;
            }
            if terminal || single {
                continue;
            }
            if goal == Goal::Free && deg == 1 {
                // Must be the last vertex of the path.
                dead_ends += 1;
                if dead_ends > 1 || usable == bit(cur) {
                    return None;
                }
                continue;
            }
            // While the cycle is still at its start, a vertex next to it may come last instead.
            if goal != Goal::Free && close != Some(cur) && deg == 2 && usable & bit(cur) != 0 {
                let other = usable & !bit(cur);
                let closes = close.is_some_and(|s| other == bit(s));
                if closes {
                    // Would have to be both next and last.
                    return None;
                }
                forced |= bit(u);
            }
        }
        match forced.count_ones() {
            0 => Some(cands),
            1 => Some(forced & cands),
            _ => None,
        }
    }
}

fn adj_reach(adj: &[u64], start: usize, within: u64) -> u64 {
    let mut seen = bit(start);
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0;
        for v in Bits(frontier) {
            next |= adj[v];
        }
        next &= within & !seen;
        seen |= next;
        frontier = next;
    }
    seen
}

/// A Hamiltonian cycle, listed from vertex 0. Graphs on fewer than 3 vertices have none.
pub fn find_hamiltonian_cycle(g: &Graph) -> Option<Witness> {
    let n = g.order();
    if n < 3 || (0..n).any(|v| g.degree(v) < 2) {
        return None;
    }
    let search = PathSearch { adj: g.rows() };
    let mut path = alloc::vec![0];
    search
        .extend(0, g.vertex_mask() & !1, Goal::Close(0), &mut path)
        .then_some(Witness {
            kind: WitnessKind::Cycle,
            vertices: path,
        })
}

pub fn is_hamiltonian(g: &Graph) -> bool {
    find_hamiltonian_cycle(g).is_some()
}

/// A Hamiltonian path. `K_1` is traceable; the graph on no vertices is not.
pub fn find_hamiltonian_path(g: &Graph) -> Option<Witness> {
    let n = g.order();
    if n == 0 {
        return None;
    }
    if n == 1 {
        return Some(Witness {
            kind: WitnessKind::Path,
            vertices: alloc::vec![0],
        });
    }
    let degs: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    if degs.contains(&0) || degs.iter().filter(|&&d| d == 1).count() > 2 || !g.is_connected() {
        return None;
    }
    let search = PathSearch { adj: g.rows() };
    // A degree-one vertex must be an end, so it is the only start worth trying.
    let starts: Vec<usize> = match degs.iter().position(|&d| d == 1) {
        Some(v) => alloc::vec![v],
        None => (0..n).collect(),
    };
    for s in starts {
        let mut path = alloc::vec![s];
        if search.extend(s, g.vertex_mask() & !bit(s), Goal::Free, &mut path) {
            return Some(Witness {
                kind: WitnessKind::Path,
                vertices: path,
            });
        }
    }
    None
}

pub fn is_traceable(g: &Graph) -> bool {
    find_hamiltonian_path(g).is_some()
}

/// A Hamiltonian path from `u` to `v`.
pub fn find_hamiltonian_path_between(g: &Graph, u: usize, v: usize) -> Result<Option<Witness>, PropertyError> {
    let n = g.order();
    for w in [u, v] {
        if w >= n {
            return Err(PropertyError::VertexOutOfRange { vertex: w, n });
        }
    }
    if u == v {
        return Err(PropertyError::SameEndpoints);
    }
    let search = PathSearch { adj: g.rows() };
    let mut path = alloc::vec![u];
    Ok(search
        .extend(u, g.vertex_mask() & !bit(u), Goal::End(v), &mut path)
        .then_some(Witness {
            kind: WitnessKind::PathBetween,
            vertices: path,
        }))
}

/// First pair (in lexicographic order) not joined by a Hamiltonian path.
/// `K_1` counts as failing: there is no pair to join.
pub fn hamiltonian_connected_failure(g: &Graph) -> Option<(usize, usize)> {
    let n = g.order();
    if n < 2 {
        return Some((0, 0));
    }
    for u in 0..n {
        for v in u + 1..n {
            let found = find_hamiltonian_path_between(g, u, v).expect("valid pair");
            if found.is_none() {
                return Some((u, v));
            }
        }
    }
    None
}

pub fn is_hamiltonian_connected(g: &Graph) -> bool {
    hamiltonian_connected_failure(g).is_none()
}

/// Whether `segment` (a path in `g`) extends to a Hamiltonian cycle that contains it consecutively.
pub fn segment_on_hamiltonian_cycle(g: &Graph, segment: &[usize]) -> bool {
    let n = g.order();
    if n < 3 || segment.is_empty() || segment.len() > n {
        return false;
    }
    if segment.len() == n {
        return is_hamiltonian_cycle(g, segment);
    }
    if segment.len() == 1 {
        return is_hamiltonian(g);
    }
    let start = segment[0];
    let last = segment[segment.len() - 1];
    let used = segment.iter().fold(0u64, |m, &v| m | bit(v));
    let search = PathSearch { adj: g.rows() };
    let mut path = segment.to_vec();
    search.extend(last, g.vertex_mask() & !used, Goal::Close(start), &mut path)
}

/// A path with at most `k` edges that lies on no Hamiltonian cycle, or `None` if every one does.
pub fn k_path_failure(g: &Graph, k: usize) -> Result<Option<Vec<usize>>, PropertyError> {
    let n = g.order();
    if n < 2 || k > n - 2 {
        return Err(PropertyError::ParameterOutOfRange { k, n });
    }
    if !is_hamiltonian(g) {
        return Ok(Some(alloc::vec![0]));
    }
    let mut path = Vec::with_capacity(k + 1);
    for s in 0..n {
        path.clear();
        path.push(s);
        if let Some(bad) = k_path_walk(g, k, &mut path) {
            return Ok(Some(bad));
        }
    }
    Ok(None)
}

/// Depth-first over simple paths starting at `path[0]`; each path is tested once,
/// from the end with the smaller label.
fn k_path_walk(g: &Graph, k: usize, path: &mut Vec<usize>) -> Option<Vec<usize>> {
    let last = *path.last().expect("nonempty path");
    if path.len() >= 2 && path[0] < last && !segment_on_hamiltonian_cycle(g, path) {
        return Some(path.clone());
    }
    if path.len() > k {
        return None;
    }
    let used = path.iter().fold(0u64, |m, &v| m | bit(v));
    for v in Bits(g.neighbors(last) & !used) {
        path.push(v);
        if let Some(bad) = k_path_walk(g, k, path) {
            return Some(bad);
        }
        path.pop();
    }
    None
}

pub fn is_k_path_hamiltonian(g: &Graph, k: usize) -> Result<bool, PropertyError> {
    k_path_failure(g, k).map(|f| f.is_none())
}

/// A deletion set of size at most `k` leaving a non-Hamiltonian graph, smallest sets first.
pub fn k_hamiltonian_failure(g: &Graph, k: usize) -> Result<Option<Vec<usize>>, PropertyError> {
    let n = g.order();
    if n < 3 || k > n - 3 {
        return Err(PropertyError::ParameterOutOfRange { k, n });
    }
    for size in 0..=k {
        for s in subsets_of_size(n, size) {
            if !is_hamiltonian(&g.remove_vertices(s)) {
                return Ok(Some(Bits(s).collect()));
            }
        }
    }
    Ok(None)
}

pub fn is_k_hamiltonian(g: &Graph, k: usize) -> Result<bool, PropertyError> {
    k_hamiltonian_failure(g, k).map(|f| f.is_none())
}

/// A chorded cycle on `len` vertices, as the vertex set of the cycle.
pub fn find_chorded_cycle(g: &Graph, len: usize) -> Option<Vec<usize>> {
    let n = g.order();
    for s in subsets_of_size(n, len) {
        let h = g.induced(s);
        if h.edge_count() > len && h.min_degree().is_some_and(|d| d >= 2) {
            if let Some(w) = find_hamiltonian_cycle(&h) {
                let names: Vec<usize> = Bits(s).collect();
                return Some(w.vertices.iter().map(|&i| names[i]).collect());
            }
        }
    }
    None
}

/// The smallest length in `4..=n` with no chorded cycle.
pub fn chorded_pancyclic_failure(g: &Graph) -> Result<Option<usize>, PropertyError> {
    let n = g.order();
    if n < 4 {
        return Err(PropertyError::TooFewVertices { n, min: 4 });
    }
    Ok((4..=n).find(|&len| find_chorded_cycle(g, len).is_none()))
}

pub fn is_chorded_pancyclic(g: &Graph) -> Result<bool, PropertyError> {
    chorded_pancyclic_failure(g).map(|f| f.is_none())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MultipartiteShortcut {
    pub hamiltonian: bool,
    pub traceable: bool,
}

/// Closed forms for complete multipartite graphs: Hamiltonian iff `2m <= n`,
/// traceable iff `2m <= n + 1`, with `m` the largest part (and `n >= 3` resp. `n >= 1`).
pub fn multipartite_shortcuts(parts: &PartSizes) -> MultipartiteShortcut {
    let n = parts.order();
    let m = parts.largest();
    MultipartiteShortcut {
        hamiltonian: n >= 3 && 2 * m <= n,
        traceable: n >= 1 && 2 * m <= n + 1,
    }
}

pub fn is_hamiltonian_path(g: &Graph, seq: &[usize]) -> bool {
    let n = g.order();
    seq.len() == n
        && n > 0
        && seq.iter().all(|&v| v < n)
        && seq.iter().fold(0u64, |m, &v| m | bit(v)) == low_mask(n)
        && seq.windows(2).all(|w| g.has_edge(w[0], w[1]))
}

pub fn is_hamiltonian_cycle(g: &Graph, seq: &[usize]) -> bool {
    seq.len() >= 3 && is_hamiltonian_path(g, seq) && g.has_edge(seq[0], seq[seq.len() - 1])
}
