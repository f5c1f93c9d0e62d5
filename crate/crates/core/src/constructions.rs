//! Builders for the graphs and graph families that appear as extremal examples.

use alloc::vec::Vec;
use core::fmt;

use crate::bits::{binom2, bit, low_mask};
use crate::canon::{canonical_form, CanonicalForm};
use crate::formulas::turan_edges;
use crate::graph::{complete_multipartite, Graph, GraphError, PartSizes, MAX_VERTICES};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConstructionError {
    Graph(GraphError),
    /// Parameters outside the construction's domain.
    InvalidParameter(&'static str),
}

impl fmt::Display for ConstructionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Graph(e) => e.fmt(f),
            Self::InvalidParameter(what) => write!(f, "invalid parameter: {what}"),
        }
    }
}

impl core::error::Error for ConstructionError {}

impl From<GraphError> for ConstructionError {
    fn from(e: GraphError) -> Self {
        Self::Graph(e)
    }
}

/// `T_r(n)`, with parts in contiguous blocks of nonincreasing size.
pub fn turan_graph(n: usize, r: usize) -> Result<Graph, ConstructionError> {
    if r == 0 {
        return Err(ConstructionError::InvalidParameter("r must be at least 1"));
    }
    Ok(complete_multipartite(&PartSizes::balanced(n, r))?)
}

/// Part sizes of `T_r(n)` as a length-`r` list, nonincreasing, zeros included.
pub fn turan_part_sizes(n: usize, r: usize) -> Vec<usize> {
    (0..r).map(|i| n / r + usize::from(i < n % r)).collect()
}

/// The first `m` pairs in colex order: `K_p` with `C(p,2) <= m` maximal, plus one vertex
/// joined to the first `m - C(p,2)` vertices. No isolated vertices, so `m = 0` is empty.
pub fn colex_graph(m: usize) -> Result<Graph, ConstructionError> {
    if m == 0 {
        return Ok(Graph::empty(0)?);
    }
    let mut p = 1usize;
    while binom2(p as u64 + 1) <= m as u64 {
        p += 1;
    }
    let rem = m - binom2(p as u64) as usize;
    let k = Graph::complete(p)?;
    if rem == 0 {
        return Ok(k);
    }
    Ok(k.with_vertex(low_mask(rem))?)
}

/// The first `m` pairs `{i, j}` with `i != j (mod r)` in colex order.
pub fn colex_turan_graph(m: usize, r: usize) -> Result<Graph, ConstructionError> {
    if r < 2 {
        return Err(ConstructionError::InvalidParameter("r must be at least 2"));
    }
    if m == 0 {
        return Ok(Graph::empty(0)?);
    }
    let mut n = 1usize;
    while turan_edges(n as u64 + 1, r as u64) <= m as u64 {
        n += 1;
        if n > MAX_VERTICES {
            return Err(GraphError::Capacity { requested: n }.into());
        }
    }
    let mut edges = Vec::new();
    for j in 1..n {
        for i in 0..j {
            if i % r != j % r {
                edges.push((i, j));
            }
        }
    }
    let mut rem = m - turan_edges(n as u64, r as u64) as usize;
    let mut g = Graph::from_edges(n, &edges)?;
    if rem > 0 {
        let mut nbrs = 0u64;
        for i in 0..n {
            if rem == 0 {
                break;
            }
            if i % r != n % r {
                nbrs |= bit(i);
                rem -= 1;
            }
        }
        g = g.with_vertex(nbrs)?;
    }
    Ok(g)
}

/// `T_r(n-1)` plus a vertex whose `l+1` neighbours induce `T_{r-1}(l+1)` and avoid a smallest part.
pub fn g_star(n: usize, r: usize, ell: i64) -> Result<Graph, ConstructionError> {
    if r < 2 || n == 0 || ell < -1 {
        return Err(ConstructionError::InvalidParameter("need r >= 2, n >= 1, l >= -1"));
    }
    let sizes = turan_part_sizes(n - 1, r);
    let counts = turan_part_sizes((ell + 1) as usize, r - 1);
    if counts.iter().zip(&sizes).any(|(c, s)| c > s) {
        return Err(ConstructionError::InvalidParameter("l+1 too large for T_r(n-1)"));
    }
    let mut with_zero = counts;
    with_zero.push(0);
    Ok(attach(n - 1, r, &AttachmentVector(with_zero))?)
}

/// How many neighbours the extra vertex takes in each part of `T_r(n-1)`,
/// parts listed in nonincreasing size order (zero-size parts included).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AttachmentVector(pub Vec<usize>);

impl AttachmentVector {
    pub fn degree(&self) -> usize {
        self.0.iter().sum()
    }
}

/// Attachment vectors of `T_r(n-1)` plus a vertex of degree `l+1` that stay `K_{r+1}`-free,
/// one per isomorphism type (counts nonincreasing within equal-size parts).
pub fn attachment_vectors(n: usize, r: usize, ell: i64) -> Vec<AttachmentVector> {
    fn go(sizes: &[usize], i: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<AttachmentVector>) {
        if i == sizes.len() {
            if left == 0 && cur.contains(&0) {
                out.push(AttachmentVector(cur.clone()));
            }
            return;
        }
        let mut cap = sizes[i].min(left);
        if i > 0 && sizes[i] == sizes[i - 1] {
            cap = cap.min(cur[i - 1]);
        }
        let tail: usize = sizes[i + 1..].iter().sum();
        for c in (0..=cap).rev() {
            if left - c > tail {
                break;
            }
            cur.push(c);
            go(sizes, i + 1, left - c, cur, out);
            cur.pop();
        }
    }
    if n == 0 || r == 0 || ell < -1 || (ell + 1) as usize > n - 1 {
        return Vec::new();
    }
    let sizes = turan_part_sizes(n - 1, r);
    let mut out = Vec::new();
    go(&sizes, 0, (ell + 1) as usize, &mut Vec::new(), &mut out);
    out
}

/// `T_r(base)` plus one vertex joined to the first `counts[i]` vertices of part `i`.
fn attach(base: usize, r: usize, v: &AttachmentVector) -> Result<Graph, GraphError> {
    let host = complete_multipartite(&PartSizes::balanced(base, r))?;
    let mut nbrs = 0u64;
    let mut start = 0;
    for (&size, &c) in turan_part_sizes(base, r).iter().zip(&v.0) {
        nbrs |= low_mask(start + c) & !low_mask(start);
        start += size;
    }
    host.with_vertex(nbrs)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// `T_r(n-1)` plus a vertex of degree `l+1`.
    G,
    /// `T_r((n+1+l)/2)` plus an independent set of `(n-1-l)/2` vertices of degree `(n-1+l)/2`.
    H,
    /// Members of `G` whose exceptional vertex has a traceable neighbourhood.
    J,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FamilySpec {
    pub family: Family,
    pub n: usize,
    pub r: usize,
    pub ell: i64,
}

impl FamilySpec {
    pub fn new(family: Family, n: usize, r: usize, ell: i64) -> Self {
        Self { family, n, r, ell }
    }
}

/// Members of a family, pairwise non-isomorphic and sorted by canonical form.
pub fn family_members(spec: FamilySpec) -> Result<Vec<Graph>, ConstructionError> {
    Ok(family_forms(spec)?.into_iter().map(|(_, g)| g).collect())
}

/// Members together with their canonical forms, sorted and deduplicated.
pub fn family_forms(spec: FamilySpec) -> Result<Vec<(CanonicalForm, Graph)>, ConstructionError> {
    let FamilySpec { family, n, r, ell } = spec;
    if n > MAX_VERTICES {
        return Err(GraphError::Capacity { requested: n }.into());
    }
    if r == 0 || ell < -1 {
        return Err(ConstructionError::InvalidParameter("need r >= 1 and l >= -1"));
    }
    let graphs: Vec<Graph> = match family {
        Family::G | Family::J => attachment_vectors(n, r, ell)
            .into_iter()
            .filter(|v| family == Family::G || v.0.iter().all(|&c| 2 * c as i64 <= ell + 2))
            .map(|v| attach(n - 1, r, &v))
            .collect::<Result<_, _>>()?,
        Family::H => h_members(n, r, ell)?,
    };
    let mut out: Vec<(CanonicalForm, Graph)> = graphs.into_iter().map(|g| (canonical_form(&g), g)).collect();
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out.dedup_by(|a, b| a.0 == b.0);
    Ok(out)
}

/// Each added vertex misses exactly one host vertex, and that vertex sits in a part of
/// size 1; all such vertices are alike, so a member is fixed by how many added vertices
/// share each missed vertex, i.e. by a partition of the added count.
fn h_members(n: usize, r: usize, ell: i64) -> Result<Vec<Graph>, ConstructionError> {
    let (n_i, l) = (n as i64, ell);
    if (n_i + 1 + l) % 2 != 0 || n_i - 1 - l < 0 {
        return Ok(Vec::new());
    }
    let h = ((n_i + 1 + l) / 2) as usize;
    let added = ((n_i - 1 - l) / 2) as usize;
    let host = turan_graph(h, r)?;
    if added == 0 {
        return Ok(alloc::vec![host]);
    }
    let singles: Vec<usize> = {
        let sizes = turan_part_sizes(h, r);
        let mut start = 0;
        let mut v = Vec::new();
        for s in sizes {
            if s == 1 {
                v.push(start);
            }
            start += s;
        }
        v
    };
    let mut out = Vec::new();
    for part in partitions(added, singles.len()) {
        let mut g = host.clone();
        for (&x, &mult) in singles.iter().zip(&part) {
            for _ in 0..mult {
                g = g.with_vertex(low_mask(h) & !bit(x))?;
            }
        }
        if g.clique_number_at_most(r) {
            out.push(g);
        }
    }
    Ok(out)
}

/// Partitions of `total` into at most `parts` positive pieces, nonincreasing.
fn partitions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    fn go(left: usize, max: usize, slots: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        if slots == 0 {
            return;
        }
        for p in (1..=max.min(left)).rev() {
            cur.push(p);
            go(left - p, p, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(total, total, parts, &mut Vec::new(), &mut out);
    out
}

/// Whether `g` is isomorphic to a member of the family.
pub fn in_family(g: &Graph, spec: FamilySpec) -> Result<bool, ConstructionError> {
    let form = canonical_form(g);
    Ok(family_forms(spec)?.iter().any(|(f, _)| *f == form))
}

/// Small graphs used in examples and tests.
pub mod named {
    use super::*;

    pub fn cycle(n: usize) -> Result<Graph, GraphError> {
        let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        if n < 3 {
            return Graph::empty(n).and_then(|g| if n == 2 { g.with_edge(0, 1) } else { Ok(g) });
        }
        Graph::from_edges(n, &edges)
    }

    pub fn path(n: usize) -> Result<Graph, GraphError> {
        let edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges)
    }

    pub fn star(leaves: usize) -> Result<Graph, GraphError> {
        let edges: Vec<(usize, usize)> = (1..=leaves).map(|i| (0, i)).collect();
        Graph::from_edges(leaves + 1, &edges)
    }

    pub fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((i + 5, (i + 2) % 5 + 5));
        }
        Graph::from_edges(10, &edges).expect("valid")
    }

    /// `K_3 x K_2`.
    pub fn prism() -> Graph {
        Graph::from_edges(
            6,
            &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)],
        )
        .expect("valid")
    }

    pub fn multipartite(sizes: &[usize]) -> Result<Graph, GraphError> {
        complete_multipartite(&PartSizes::new(sizes.to_vec())?)
    }
}
