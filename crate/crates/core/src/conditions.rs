//! Degree-sequence conditions of Chvátal, Berge and Kronk.
//!
//! Indices are 1-based (`d_1 <= .. <= d_n`), and every range bound like
//! `i <= (n-1)/2` is compared as `2i <= n-1` in integers.

use alloc::vec::Vec;
use core::fmt;

use crate::graph::Graph;

/// A nondecreasing degree sequence, read with 1-based indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeSequence(Vec<usize>);

impl DegreeSequence {
    /// Sorts the given degrees.
    pub fn new(mut degrees: Vec<usize>) -> Self {
        degrees.sort_unstable();
        Self(degrees)
    }

    pub fn of(g: &Graph) -> Self {
        Self(g.degree_sequence())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `d_i` for `1 <= i <= n`.
    pub fn d(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Clause {
    /// `d_i <= i-1` and `d_{n-i+1} <= n-i-1`.
    ChvatalTraceable,
    /// `d_i <= i` and `d_{n-i} <= n-i-1`.
    ChvatalHamiltonian,
    /// `d_i <= i+l` and `d_{n-i-l} <= n-i-1`.
    ChvatalKHamiltonian,
    /// `d_i <= i+1` and `d_{n-i-1} <= n-i-1`.
    Berge,
    /// `d_i <= i+k`.
    Kronk,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ConditionHit {
    /// 1-based index.
    pub index: usize,
    pub ell: i64,
    pub clause: Clause,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChvatalVariant {
    Traceable,
    Hamiltonian,
    KHamiltonian(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct KOutOfRange {
    pub k: usize,
    pub n: usize,
}

impl fmt::Display for KOutOfRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "k={} out of range for n={}", self.k, self.n)
    }
}

impl core::error::Error for KOutOfRange {}

/// Least index at which Chvátal's condition fires; `None` when it never does.
/// Upper bounds `d <= n-i-1` are written `d + i + 1 <= n` so nothing underflows.
/// Outside `n >= 2` (traceable) or `n >= 3` (the others) there is nothing to report.
#[allow(clippy::int_plus_one)]
pub fn chvatal_violation(d: &DegreeSequence, variant: ChvatalVariant) -> Option<ConditionHit> {
    let n = d.len();
    match variant {
        ChvatalVariant::Traceable => {
            if n < 2 {
                return None;
            }
            (1..=n / 2)
                .find(|&i| d.d(i) < i && d.d(n - i + 1) + i + 1 <= n)
                .map(|i| ConditionHit {
                    index: i,
                    ell: -1,
                    clause: Clause::ChvatalTraceable,
                })
        }
        ChvatalVariant::Hamiltonian => {
            if n < 3 {
                return None;
            }
            (1..)
                .take_while(|&i| 2 * i < n)
                .find(|&i| d.d(i) <= i && d.d(n - i) + i + 1 <= n)
                .map(|i| ConditionHit {
                    index: i,
                    ell: 0,
                    clause: Clause::ChvatalHamiltonian,
                })
        }
        ChvatalVariant::KHamiltonian(k) => {
            if n < 3 {
                return None;
            }
            (0..=k.min(n - 3)).find_map(|l| {
                (1..)
                    .take_while(|&i| 2 * i + l < n)
                    .find(|&i| d.d(i) <= i + l && d.d(n - i - l) + i + 1 <= n)
                    .map(|i| ConditionHit {
                        index: i,
                        ell: l as i64,
                        clause: Clause::ChvatalKHamiltonian,
                    })
            })
        }
    }
}

/// Berge's condition for Hamiltonian-connectedness.
#[allow(clippy::int_plus_one)]
pub fn berge_violation(d: &DegreeSequence) -> Option<ConditionHit> {
    let n = d.len();
    if n < 3 {
        return None;
    }
    (1..)
        .take_while(|&i| 2 * i + 2 <= n)
        .find(|&i| d.d(i) <= i + 1 && d.d(n - i - 1) + i + 1 <= n)
        .map(|i| ConditionHit {
            index: i,
            ell: 1,
            clause: Clause::Berge,
        })
}

/// Kronk's condition for `k`-path Hamiltonicity: least `i <= (n-1-k)/2` with `d_i <= i+k`.
pub fn kronk_violation(d: &DegreeSequence, k: usize) -> Result<Option<ConditionHit>, KOutOfRange> {
    let n = d.len();
    if n < 3 || k > n - 3 {
        return Err(KOutOfRange { k, n });
    }
    Ok((1..)
        .take_while(|&i| 2 * i + k < n)
        .find(|&i| d.d(i) <= i + k)
        .map(|i| ConditionHit {
            index: i,
            ell: k as i64,
            clause: Clause::Kronk,
        }))
}

/// The stronger sufficient condition for `k`-path Hamiltonicity:
/// `d_i > i+k` for all `i < (n-1-k)/2`, and `d_m > (n-1+k)/2` for `m = (n+1-k)/2`.
/// When `n+1-k` is odd, `m` is rounded down, which only makes the test harder to pass.
pub fn kronk_strong_holds(d: &DegreeSequence, k: usize) -> Result<bool, KOutOfRange> {
    let n = d.len();
    if n < 2 || k > n - 2 {
        return Err(KOutOfRange { k, n });
    }
    let low = (1..).take_while(|&i| 2 * i + 1 + k < n).all(|i| d.d(i) > i + k);
    let m = (n + 1 - k) / 2;
    Ok(low && m >= 1 && 2 * d.d(m) > n - 1 + k)
}

/// Least `j` with `1 <= j <= (n-1-l)/2` and `d_j <= j + l`.
pub fn degree_hypothesis(d: &DegreeSequence, ell: i64) -> Option<usize> {
    let n = d.len() as i64;
    (1..)
        .take_while(|&j| 2 * j <= n - 1 - ell)
        .find(|&j| d.d(j as usize) as i64 <= j + ell)
        .map(|j| j as usize)
}
