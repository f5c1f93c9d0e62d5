//! Closed-form quantities: Turán edge counts, the edge bounds for each property,
//! and exact clique counts.

use core::fmt;

use crate::bits::binom2;
use crate::graph::Graph;
use crate::properties::PropertyKind;

/// `n` vertices split as evenly as possible into `r` parts.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TuranParams {
    pub n: u64,
    pub r: u64,
}

impl TuranParams {
    pub fn new(n: u64, r: u64) -> Option<Self> {
        (r >= 1).then_some(Self { n, r })
    }

    /// `n mod r`: the number of parts of size `ceil(n/r)`.
    pub fn s(self) -> u64 {
        self.n % self.r
    }

    pub fn edges(self) -> u64 {
        let (q, s) = (self.n / self.r, self.s());
        binom2(self.n) - (self.r - s) * binom2(q) - s * binom2(q + 1)
    }
}

/// `e(T_r(n))`, counted combinatorially from the part sizes.
///
/// # Panics
/// If `r == 0`.
pub fn turan_edges(n: u64, r: u64) -> u64 {
    TuranParams::new(n, r).expect("r >= 1").edges()
}

/// Number of `t`-cliques, by depth-first extension over increasing labels.
pub fn count_cliques(g: &Graph, t: usize) -> u64 {
    fn go(rows: &[u64], cand: u64, left: usize) -> u64 {
        if left == 0 {
            return 1;
        }
        if left == 1 {
            return u64::from(cand.count_ones());
        }
        let mut total = 0;
        let mut rest = cand;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if (rest.count_ones() as usize) < left - 1 {
                break;
            }
            total += go(rows, rest & rows[v], left - 1);
        }
        total
    }
    if t == 0 {
        return 1;
    }
    go(g.rows(), g.vertex_mask(), t)
}

/// Clique count of a complete multipartite graph: the `t`-th elementary symmetric
/// polynomial of the part sizes.
pub fn multipartite_clique_count(sizes: &[usize], t: usize) -> u64 {
    let mut e = alloc::vec![0u64; t + 1];
    e[0] = 1;
    for &s in sizes {
        for j in (1..=t).rev() {
            e[j] += e[j - 1] * s as u64;
        }
    }
    e[t]
}

/// Smallest `n` for which a property's edge theorem applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Hypothesis {
    /// Where the bound itself is proven.
    pub bound_min_n: u64,
    /// Where the list of extremal graphs is proven complete, if it ever is.
    pub characterization_min_n: Option<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundError {
    /// `n` below the theorem's range; carries the smallest admissible `n`.
    HypothesesNotMet { required_n: u64 },
    /// No edge theorem for this property and `r`.
    NoTheorem,
    /// `k` too large for `n`.
    ParameterOutOfRange,
}

impl fmt::Display for BoundError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::HypothesesNotMet { required_n } => {
                write!(f, "hypotheses not met: the theorem needs n >= {required_n}")
            }
            Self::NoTheorem => f.write_str("no edge theorem for this property and r"),
            Self::ParameterOutOfRange => f.write_str("k out of range for n"),
        }
    }
}

impl core::error::Error for BoundError {}

/// Hypothesis ranges of the edge theorems, using the sharpest range stated for each.
///
/// The statements need `n >= 1` in a few places where the claim is degenerate for tiny `n`
/// (a single vertex is traceable; no graph on one vertex has an edge to spare), so the
/// lower ends here start where the claim is meaningful.
pub fn edge_hypothesis(property: PropertyKind, r: u64) -> Result<Hypothesis, BoundError> {
    use PropertyKind::*;
    let exact = |n: u64| Hypothesis {
        bound_min_n: n,
        characterization_min_n: Some(n),
    };
    match (property, r) {
        (_, 0 | 1) => Err(BoundError::NoTheorem),
        (Traceable, 2) => Ok(Hypothesis {
            bound_min_n: 6,
            characterization_min_n: Some(8),
        }),
        (Hamiltonian | HamiltonianConnected | KPathHamiltonian(_) | KHamiltonian(_), 2) => Ok(Hypothesis {
            bound_min_n: 3,
            characterization_min_n: None,
        }),
        (ChordedPancyclic, 2) => Err(BoundError::NoTheorem),
        (Traceable, 3) => Ok(exact(20)),
        (Traceable, _) => Ok(exact(2)),
        (Hamiltonian, 3) => Ok(exact(26)),
        (Hamiltonian, 4) => Ok(exact(11)),
        (Hamiltonian, _) => Ok(exact(2)),
        (HamiltonianConnected, 3) => Ok(exact(32)),
        (HamiltonianConnected, 4) => Ok(exact(16)),
        (HamiltonianConnected, _) => Ok(exact(11)),
        (KPathHamiltonian(k), _) => {
            let k = k as u64;
            Ok(match r {
                3 => exact(6 * k + 26),
                4..=7 => Hypothesis {
                    bound_min_n: 5 * k + 11,
                    characterization_min_n: Some(6 * k + 2 * r + 3),
                },
                _ => Hypothesis {
                    bound_min_n: 2 * k + 9,
                    characterization_min_n: Some(2 * k + 2 * r),
                },
            })
        }
        (KHamiltonian(k), _) => {
            let k = k as u64;
            Ok(exact(match r {
                3 => 6 * k + 26,
                4..=7 => 6 * k + 11,
                _ => 2 * k + 9,
            }))
        }
        (ChordedPancyclic, _) => Ok(Hypothesis {
            bound_min_n: match r {
                3 => 26,
                4 => 11,
                _ => 4,
            },
            characterization_min_n: None,
        }),
    }
}

/// The bound itself, without any range check: `e(T_r(n-1)) + l + 1` for `r >= 3`,
/// and the bipartite values for `r = 2`.
pub fn edge_bound_value(property: PropertyKind, n: u64, r: u64) -> Result<u64, BoundError> {
    use PropertyKind::*;
    if let Some(k) = property.k() {
        let k = k as u64;
        let max_k = match property {
            KPathHamiltonian(_) => n.checked_sub(2),
            _ => n.checked_sub(3),
        };
        if max_k.is_none_or(|m| k > m) {
            return Err(BoundError::ParameterOutOfRange);
        }
    }
    let bip = |a: u64, b: u64| a * b;
    match r {
        0 | 1 => Err(BoundError::NoTheorem),
        2 => {
            let (lo, hi) = (n / 2, n.div_ceil(2));
            match property {
                Traceable => Ok(bip(lo.saturating_sub(1), hi + 1)),
                Hamiltonian | KPathHamiltonian(_) => Ok(bip(hi.saturating_sub(1), lo + 1)),
                HamiltonianConnected => Ok(bip(lo, hi)),
                KHamiltonian(k) => Ok(if n % 2 == 1 || k >= 1 {
                    bip(lo, hi)
                } else {
                    bip(lo - 1, lo + 1)
                }),
                ChordedPancyclic => Err(BoundError::NoTheorem),
            }
        }
        _ => {
            let base = turan_edges(n.saturating_sub(1), r) as i64;
            Ok((base + property.ell() + 1).max(0) as u64)
        }
    }
}

/// The edge bound, refusing `n` outside the theorem's range.
pub fn edge_bound(property: PropertyKind, n: u64, r: u64) -> Result<u64, BoundError> {
    let hyp = edge_hypothesis(property, r)?;
    if n < hyp.bound_min_n {
        return Err(BoundError::HypothesesNotMet {
            required_n: hyp.bound_min_n,
        });
    }
    edge_bound_value(property, n, r)
}
