//! Extremal numbers by exhaustion, compared with the predicted values and graphs.
//!
//! An extremal run enumerates the `n`-vertex `K_{r+1}`-free graphs lacking a property in
//! descending edge windows: first all graphs with at least `w` edges, then the next lower
//! band, and so on. It stops once the best value seen cannot be reached by anything
//! below the window, so the argmax set it returns is complete.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::canon::{canonical_form, CanonicalForm};
use crate::conditions::{
    berge_violation, chvatal_violation, degree_hypothesis, kronk_strong_holds, kronk_violation, ChvatalVariant,
    DegreeSequence,
};
use crate::constructions::{
    colex_graph, colex_turan_graph, family_forms, g_star, named, ConstructionError, Family, FamilySpec,
};
use crate::enumeration::{EnumConstraints, EnumError, Enumerator, WorkUnit};
use crate::formulas::{count_cliques, edge_bound_value, edge_hypothesis, turan_edges, BoundError};
use crate::graph::{complete_multipartite, Graph, PartSizes};
use crate::properties::{decide, has_property, multipartite_shortcuts, PropertyError, PropertyKind};

/// Largest `n` for exhaustive runs; beyond it only witness checks are offered.
pub const MAX_EXHAUSTIVE_N: usize = 10;

/// Runs one closure per work unit and returns the results in unit order.
pub trait Executor {
    fn map<T, F>(&self, units: &[WorkUnit], f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(&WorkUnit) -> T + Sync;
}

#[derive(Clone, Copy, Debug, Default)]
pub struct Sequential;

impl Executor for Sequential {
    fn map<T, F>(&self, units: &[WorkUnit], f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(&WorkUnit) -> T + Sync,
    {
        units.iter().map(f).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Metric {
    Edges,
    /// Number of `t`-cliques.
    Cliques(usize),
}

impl Metric {
    pub fn eval(self, g: &Graph) -> u64 {
        match self {
            Self::Edges => g.edge_count() as u64,
            Self::Cliques(t) => count_cliques(g, t),
        }
    }
}

impl fmt::Display for Metric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Edges => f.write_str("edges"),
            Self::Cliques(t) => write!(f, "cliques({t})"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Match,
    Mismatch,
    /// Computed, but the parameters lie outside the claim's range.
    OutOfHypothesis,
    /// Only the predicted graphs were checked; nothing was enumerated.
    WitnessOnly,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::Match => "match",
            Self::Mismatch => "mismatch",
            Self::OutOfHypothesis => "out_of_hypothesis",
            Self::WitnessOnly => "witness_only",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VerifyError {
    OverBudget { n: usize, max: usize },
    NoTheorem,
    InvalidParameter(&'static str),
    Property(PropertyError),
    Construction(ConstructionError),
    Enumeration(EnumError),
}

impl fmt::Display for VerifyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::OverBudget { n, max } => write!(
                f,
                "n={n} is beyond exhaustive search (n <= {max}); use witness-only mode for known extremal graphs"
            ),
            Self::NoTheorem => f.write_str("no extremal claim registered for these parameters"),
            Self::InvalidParameter(msg) => f.write_str(msg),
            Self::Property(e) => write!(f, "{e}"),
            Self::Construction(e) => write!(f, "{e}"),
            Self::Enumeration(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for VerifyError {}

impl From<PropertyError> for VerifyError {
    fn from(e: PropertyError) -> Self {
        Self::Property(e)
    }
}

impl From<ConstructionError> for VerifyError {
    fn from(e: ConstructionError) -> Self {
        Self::Construction(e)
    }
}

impl From<EnumError> for VerifyError {
    fn from(e: EnumError) -> Self {
        Self::Enumeration(e)
    }
}

impl From<BoundError> for VerifyError {
    fn from(e: BoundError) -> Self {
        match e {
            BoundError::NoTheorem => Self::NoTheorem,
            BoundError::ParameterOutOfRange => Self::InvalidParameter("k out of range for n"),
            BoundError::HypothesesNotMet { .. } => Self::InvalidParameter("hypotheses not met"),
        }
    }
}

/// Best value seen and every graph attaining it, by canonical form.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ArgMax {
    pub value: Option<u64>,
    pub forms: BTreeSet<CanonicalForm>,
}

impl ArgMax {
    pub fn offer(&mut self, value: u64, g: &Graph) {
        match self.value {
            Some(v) if value < v => {}
            Some(v) if value == v => {
                self.forms.insert(canonical_form(g));
            }
            _ => {
                self.value = Some(value);
                self.forms.clear();
                self.forms.insert(canonical_form(g));
            }
        }
    }

    pub fn merge(mut self, other: Self) -> Self {
        match (self.value, other.value) {
            (_, None) => self,
            (None, _) => other,
            (Some(a), Some(b)) if a > b => self,
            (Some(a), Some(b)) if a < b => other,
            _ => {
                self.forms.extend(other.forms);
                self
            }
        }
    }
}

/// Depth at which the generation tree is cut into work units.
fn split_depth(n: usize) -> usize {
    n.saturating_sub(3).min(6)
}

/// Runs `visit` on every graph admitted by `c`, one accumulator per work unit,
/// and folds the accumulators in unit order.
pub fn fold_enumeration<E, T, F, M>(exec: &E, c: EnumConstraints, init: T, visit: F, merge: M) -> Result<T, VerifyError>
where
    E: Executor,
    T: Send + Clone + Sync,
    F: Fn(&mut T, &Graph) + Sync,
    M: Fn(T, T) -> T,
{
    let en = Enumerator::new(c)?;
    let units = en.work_units(split_depth(c.n));
    let parts = exec.map(&units, |u| {
        let mut acc = init.clone();
        en.run_unit(u, &mut |g: &Graph| visit(&mut acc, g));
        acc
    });
    Ok(parts.into_iter().fold(init, merge))
}

/// Largest `metric` over graphs admitted by `base` that pass `keep`, with all maximizers.
/// Windows start at `start` edges and move down with doubling steps.
pub fn window_search<E, K>(
    exec: &E,
    base: EnumConstraints,
    metric: Metric,
    start: usize,
    keep: K,
) -> Result<ArgMax, VerifyError>
where
    E: Executor,
    K: Fn(&Graph) -> bool + Sync,
{
    let top = base.n * base.n.saturating_sub(1) / 2;
    let ceiling = base.max_edges.unwrap_or(top).min(top);
    let floor = base.min_edges.unwrap_or(0);
    let mut hi = ceiling;
    let mut lo = start.clamp(floor, ceiling);
    let mut step = 1;
    let mut best = ArgMax::default();
    loop {
        let c = EnumConstraints {
            min_edges: Some(lo),
            max_edges: Some(hi),
            ..base
        };
        let part = fold_enumeration(
            exec,
            c,
            ArgMax::default(),
            |acc, g| {
                if keep(g) {
                    acc.offer(metric.eval(g), g);
                }
            },
            ArgMax::merge,
        )?;
        best = best.merge(part);
        if lo <= floor {
            return Ok(best);
        }
        if let Some(v) = best.value {
            let done = match metric {
                Metric::Edges => true,
                // Nothing with fewer than `lo` edges has more t-cliques than the colex graph.
                Metric::Cliques(t) => v > count_cliques(&colex_graph(lo - 1)?, t),
            };
            if done {
                return Ok(best);
            }
        }
        hi = lo - 1;
        lo = lo.saturating_sub(step).max(floor);
        step *= 2;
    }
}

/// What the registered claim says for one `(property, n, r, metric)`.
#[derive(Clone, Debug)]
pub struct Prediction {
    pub max: u64,
    /// Graphs claimed to attain `max`.
    pub members: Vec<Graph>,
    /// Whether `members` is claimed to be the whole extremal set, or only part of it.
    pub exact: bool,
    pub in_hypothesis: bool,
}

fn multipartite(sizes: &[usize]) -> Graph {
    named::multipartite(sizes).expect("registry shapes are valid")
}

/// Exceptional extremal graphs listed next to the `G`/`J` families.
fn exceptional(property: PropertyKind, n: usize, r: usize) -> Vec<Graph> {
    use PropertyKind::*;
    let mut out = Vec::new();
    match property {
        Traceable => {
            if n == 4 && r >= 4 {
                out.push(multipartite(&[3, 1]));
            }
            if (r, n) == (4, 6) {
                out.push(multipartite(&[4, 1, 1]));
            }
        }
        Hamiltonian => {
            if n == 5 && r >= 5 {
                out.push(multipartite(&[3, 1, 1]));
            }
            match (r, n) {
                (4, 11) => out.push(multipartite(&[6, 2, 2, 1])),
                (5, 7) => out.push(multipartite(&[4, 1, 1, 1])),
                (5, 9) => out.push(multipartite(&[5, 1, 1, 1, 1])),
                _ => {}
            }
        }
        KPathHamiltonian(0) | KHamiltonian(0) if (r, n) == (4, 11) => {
            out.push(multipartite(&[6, 2, 2, 1]));
        }
        _ => {}
    }
    out
}

fn check_property_params(property: PropertyKind, n: usize) -> Result<(), VerifyError> {
    decide(&Graph::empty(n).map_err(ConstructionError::from)?, property)?;
    Ok(())
}

/// The registered claim for the extremal problem, or an error when there is none.
pub fn predict(property: PropertyKind, n: usize, r: usize, metric: Metric) -> Result<Prediction, VerifyError> {
    use PropertyKind::*;
    check_property_params(property, n)?;
    let (n64, r64) = (n as u64, r as u64);
    let hyp = edge_hypothesis(property, r64)?;
    let bound = edge_bound_value(property, n64, r64)?;
    let in_bound = n64 >= hyp.bound_min_n;
    let exact = hyp.characterization_min_n.is_some_and(|m| n64 >= m);

    if let Metric::Cliques(t) = metric {
        if r < 3 || t < 2 {
            return Err(VerifyError::NoTheorem);
        }
        let star = g_star(n, r, property.ell())?;
        return Ok(Prediction {
            max: count_cliques(&star, t),
            members: alloc::vec![star],
            exact: false,
            in_hypothesis: in_bound,
        });
    }

    if r == 2 {
        let (lo, hi) = (n / 2, n.div_ceil(2));
        let sizes: [usize; 2] = match property {
            Traceable => [lo.saturating_sub(1), hi + 1],
            Hamiltonian | KPathHamiltonian(_) => [hi.saturating_sub(1), lo + 1],
            HamiltonianConnected => [lo, hi],
            KHamiltonian(k) if n % 2 == 1 || k >= 1 => [lo, hi],
            KHamiltonian(_) => [lo - 1, lo + 1],
            ChordedPancyclic => return Err(VerifyError::NoTheorem),
        };
        let sizes: Vec<usize> = sizes.into_iter().filter(|&s| s > 0).collect();
        let g = multipartite(&sizes);
        debug_assert_eq!(g.edge_count() as u64, bound);
        return Ok(Prediction {
            max: bound,
            members: alloc::vec![g],
            exact,
            in_hypothesis: in_bound,
        });
    }

    let family = match property {
        KPathHamiltonian(_) => Family::J,
        _ => Family::G,
    };
    let mut members: Vec<Graph> = family_forms(FamilySpec::new(family, n, r, property.ell()))?
        .into_iter()
        .map(|(_, g)| g)
        .collect();
    members.extend(exceptional(property, n, r));
    Ok(Prediction {
        max: bound,
        members,
        exact,
        in_hypothesis: in_bound,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtremalReport {
    /// Registry id, e.g. `ham`, `kpath(1)`, `degree(-1)`.
    pub theorem: String,
    pub n: usize,
    pub r: usize,
    pub metric: Metric,
    pub computed_max: Option<u64>,
    pub computed_extremal: Vec<CanonicalForm>,
    pub predicted_max: Option<u64>,
    pub predicted_extremal: Vec<CanonicalForm>,
    /// Whether the predicted set is claimed to be complete.
    pub exact_prediction: bool,
    /// Predicted graphs absent from the computed set.
    pub missing: Vec<CanonicalForm>,
    /// Computed graphs outside an exact prediction.
    pub unexpected: Vec<CanonicalForm>,
    /// Failed claims, one line each, naming the offending graph in graph6.
    pub problems: Vec<String>,
    pub verdict: Verdict,
}

fn sorted_forms(graphs: &[Graph]) -> Vec<CanonicalForm> {
    let set: BTreeSet<CanonicalForm> = graphs.iter().map(canonical_form).collect();
    set.into_iter().collect()
}

/// Compares a computed argmax with a prediction.
#[allow(clippy::too_many_arguments)]
fn compare(
    theorem: String,
    n: usize,
    r: usize,
    metric: Metric,
    computed: ArgMax,
    predicted_max: u64,
    predicted: Vec<CanonicalForm>,
    exact: bool,
    in_hypothesis: bool,
) -> ExtremalReport {
    let computed_forms: Vec<CanonicalForm> = computed.forms.into_iter().collect();
    let missing: Vec<CanonicalForm> = predicted
        .iter()
        .filter(|f| computed_forms.binary_search(f).is_err())
        .cloned()
        .collect();
    let unexpected: Vec<CanonicalForm> = if exact {
        computed_forms
            .iter()
            .filter(|f| predicted.binary_search(f).is_err())
            .cloned()
            .collect()
    } else {
        Vec::new()
    };
    let mut problems = Vec::new();
    if computed.value != Some(predicted_max) {
        problems.push(match computed.value {
            Some(v) => format!("computed maximum {v} differs from predicted {predicted_max}"),
            None => format!("no graph lacks the property; predicted maximum {predicted_max}"),
        });
    }
    problems.extend(
        missing
            .iter()
            .map(|f| format!("predicted extremal graph not attained: {f}")),
    );
    problems.extend(
        unexpected
            .iter()
            .map(|f| format!("extremal graph outside the prediction: {f}")),
    );
    let verdict = if !in_hypothesis {
        Verdict::OutOfHypothesis
    } else if problems.is_empty() {
        Verdict::Match
    } else {
        Verdict::Mismatch
    };
    ExtremalReport {
        theorem,
        n,
        r,
        metric,
        computed_max: computed.value,
        computed_extremal: computed_forms,
        predicted_max: Some(predicted_max),
        predicted_extremal: predicted,
        exact_prediction: exact,
        missing,
        unexpected,
        problems,
        verdict,
    }
}

/// Maximum of `metric` over `n`-vertex `K_{r+1}`-free graphs without `property`,
/// checked against the registry. With `witness_only`, or `n` past the exhaustive
/// budget when `witness_only` is set, only the predicted graphs are examined.
pub fn extremal_number<E: Executor>(
    exec: &E,
    property: PropertyKind,
    n: usize,
    r: usize,
    metric: Metric,
    witness_only: bool,
) -> Result<ExtremalReport, VerifyError> {
    if n > MAX_EXHAUSTIVE_N && !witness_only {
        return Err(VerifyError::OverBudget {
            n,
            max: MAX_EXHAUSTIVE_N,
        });
    }
    let pred = predict(property, n, r, metric)?;
    let theorem = format!("{property}");
    let predicted = sorted_forms(&pred.members);

    if witness_only {
        let mut problems = Vec::new();
        for g in &pred.members {
            let g6 = crate::graph6::encode(g);
            if !g.clique_number_at_most(r) {
                problems.push(format!("contains K_{}: {g6}", r + 1));
            }
            if has_property(g, property)? {
                problems.push(format!("has the property after all: {g6}"));
            }
            let v = metric.eval(g);
            if v != pred.max {
                problems.push(format!("{metric} is {v}, predicted {}: {g6}", pred.max));
            }
        }
        let verdict = if problems.is_empty() {
            Verdict::WitnessOnly
        } else {
            Verdict::Mismatch
        };
        return Ok(ExtremalReport {
            theorem,
            n,
            r,
            metric,
            computed_max: None,
            computed_extremal: Vec::new(),
            predicted_max: Some(pred.max),
            predicted_extremal: predicted,
            exact_prediction: pred.exact,
            missing: Vec::new(),
            unexpected: Vec::new(),
            problems,
            verdict,
        });
    }

    let base = EnumConstraints::k_free(n, r);
    let start = edge_bound_value(property, n as u64, r as u64)? as usize;
    let found = window_search(exec, base, metric, start, |g| {
        !has_property(g, property).expect("parameters checked by predict")
    })?;
    Ok(compare(
        theorem,
        n,
        r,
        metric,
        found,
        pred.max,
        predicted,
        pred.exact,
        pred.in_hypothesis,
    ))
}

/// Whether `n` meets the lower bound of the degree-sequence edge theorem for `(r, l)`.
pub fn degree_theorem_in_hypothesis(r: usize, ell: i64, n: usize) -> bool {
    let (n, r_i) = (n as i64, r as i64);
    match r {
        0..=2 => false,
        3 => n >= 6 * ell + 26,
        4..=7 => {
            // n >= 3 + l + 4(l+2)/(r-3)  and  n >= 5 + l + (r+2l+7)/(2r-2)
            (n - 3 - ell) * (r_i - 3) >= 4 * (ell + 2) && (n - 5 - ell) * (2 * r_i - 2) >= r_i + 2 * ell + 7
        }
        _ => n >= 2 * ell + 9,
    }
}

/// Exhausts the `K_{r+1}`-free graphs on `n` vertices with `d_j <= j + l` for some
/// `j <= (n-1-l)/2`, checking `e <= e(T_r(n-1)) + l + 1` and the equality cases.
pub fn verify_degree_theorem<E: Executor>(
    exec: &E,
    r: usize,
    ell: i64,
    n: usize,
) -> Result<ExtremalReport, VerifyError> {
    if r < 3 {
        return Err(VerifyError::NoTheorem);
    }
    if ell < -1 {
        return Err(VerifyError::InvalidParameter("l must be at least -1"));
    }
    if n > MAX_EXHAUSTIVE_N {
        return Err(VerifyError::OverBudget {
            n,
            max: MAX_EXHAUSTIVE_N,
        });
    }
    if n == 0 {
        return Err(VerifyError::InvalidParameter("n must be positive"));
    }
    let bound = turan_edges(n as u64 - 1, r as u64) as i64 + ell + 1;
    if bound < 0 {
        return Err(VerifyError::InvalidParameter("bound is negative for these parameters"));
    }
    let bound = bound as u64;
    let holds = |g: &Graph| degree_hypothesis(&DegreeSequence::of(g), ell).is_some();

    let mut predicted: Vec<Graph> = family_forms(FamilySpec::new(Family::G, n, r, ell))?
        .into_iter()
        .map(|(_, g)| g)
        .collect();
    let h_allowed = match r {
        4..=7 => true,
        8 => ell % 4 == 0 && n as i64 == 2 * ell + 9,
        _ => false,
    };
    if h_allowed {
        predicted.extend(
            family_forms(FamilySpec::new(Family::H, n, r, ell))?
                .into_iter()
                .map(|(_, g)| g)
                .filter(|g| g.edge_count() as u64 == bound && holds(g)),
        );
    }
    let found = window_search(
        exec,
        EnumConstraints::k_free(n, r),
        Metric::Edges,
        bound as usize,
        holds,
    )?;
    Ok(compare(
        format!("degree({ell})"),
        n,
        r,
        Metric::Edges,
        found,
        bound,
        sorted_forms(&predicted),
        true,
        degree_theorem_in_hypothesis(r, ell, n),
    ))
}

/// Outcome of a sweep that either finds counterexamples or does not.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CheckReport {
    pub name: String,
    pub params: Vec<(&'static str, i64)>,
    /// Graphs examined.
    pub graphs: u64,
    /// Individual (graph, claim) checks made.
    pub checked: u64,
    pub failures: Vec<String>,
}

impl CheckReport {
    fn new(name: String, params: Vec<(&'static str, i64)>) -> Self {
        Self {
            name,
            params,
            ..Self::default()
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn verdict(&self) -> Verdict {
        if self.passed() {
            Verdict::Match
        } else {
            Verdict::Mismatch
        }
    }

    fn claim(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn absorb(mut self, other: Self) -> Self {
        self.graphs += other.graphs;
        self.checked += other.checked;
        self.failures.extend(other.failures);
        self
    }
}

/// For every graph on `n` vertices with at most `m_max` edges (and `K_{r+1}`-free when
/// `r` is given), checks `k_t(G) <= k_t(C(e(G)))`, or `k_t(CT_r(e(G)))` with `r`.
/// Comparing at `e(G)` rather than `m_max` is the sharper check, since both bounds grow with `m`.
pub fn verify_clique_bounds<E: Executor>(
    exec: &E,
    t: usize,
    m_max: usize,
    r: Option<usize>,
    n: usize,
) -> Result<CheckReport, VerifyError> {
    if n > MAX_EXHAUSTIVE_N {
        return Err(VerifyError::OverBudget {
            n,
            max: MAX_EXHAUSTIVE_N,
        });
    }
    if r.is_some_and(|r| r < 2) {
        return Err(VerifyError::InvalidParameter("r must be at least 2"));
    }
    let caps: Vec<u64> = (0..=m_max)
        .map(|m| {
            let g = match r {
                Some(r) => colex_turan_graph(m, r)?,
                None => colex_graph(m)?,
            };
            Ok(count_cliques(&g, t))
        })
        .collect::<Result<_, ConstructionError>>()?;
    let (name, mut params) = match r {
        Some(r) => (format!("frohmader({t},{r})"), alloc::vec![("r", r as i64)]),
        None => (format!("kk_clique({t})"), Vec::new()),
    };
    params.extend([("t", t as i64), ("m_max", m_max as i64), ("n", n as i64)]);
    let c = EnumConstraints {
        n,
        max_clique: r,
        max_edges: Some(m_max),
        ..EnumConstraints::default()
    };
    let report = fold_enumeration(
        exec,
        c,
        CheckReport::new(name.clone(), params.clone()),
        |acc, g| {
            acc.graphs += 1;
            let (e, k) = (g.edge_count(), count_cliques(g, t));
            acc.claim(k <= caps[e], || {
                format!(
                    "k_{t} = {k} exceeds {} at {e} edges: {}",
                    caps[e],
                    crate::graph6::encode(g)
                )
            });
        },
        CheckReport::absorb,
    )?;
    Ok(report)
}

/// Whether Prop-style `n` bound `n >= max{8+k+(2k+12)/(r-2), k+2r+k/(r-1)}` holds.
pub fn path_characterization_in_hypothesis(n: usize, r: usize, k: usize) -> bool {
    if r < 3 {
        return false;
    }
    let (n, r, k) = (n as i64, r as i64, k as i64);
    (n - 8 - k) * (r - 2) >= 2 * k + 12 && (n - k - 2 * r) * (r - 1) >= k
}

/// Checks the family claims at `(n, r, l)`:
/// members of `G^l` lack the property tied to `l`; members of `J^l` are not `l`-path
/// Hamiltonian; when the path-characterization bound holds, members of `G^l` outside
/// `J^l` are `l`-path Hamiltonian; and members of `H^l` that lack the property are complete
/// multipartite with the stated largest part and all other parts of size at most 2.
pub fn family_characterization_check(n: usize, r: usize, ell: i64) -> Result<CheckReport, VerifyError> {
    use PropertyKind::*;
    if r < 2 || n < 2 || r > n - 1 || ell < -1 || ell > n as i64 - 3 {
        return Err(VerifyError::InvalidParameter("need 2 <= r <= n-1 and -1 <= l <= n-3"));
    }
    let mut rep = CheckReport::new(
        String::from("families"),
        alloc::vec![("n", n as i64), ("r", r as i64), ("l", ell)],
    );
    let g_members = family_forms(FamilySpec::new(Family::G, n, r, ell))?;
    let j_members = family_forms(FamilySpec::new(Family::J, n, r, ell))?;

    let lacks = |rep: &mut CheckReport, tag: &str, g: &Graph, p: PropertyKind| -> Result<(), VerifyError> {
        let holds = has_property(g, p)?;
        rep.claim(!holds, || format!("{tag} member has {p}: {}", crate::graph6::encode(g)));
        Ok(())
    };

    let own: Vec<PropertyKind> = match ell {
        -1 => alloc::vec![Traceable],
        0 => alloc::vec![Hamiltonian, KHamiltonian(0)],
        1 => alloc::vec![HamiltonianConnected, KHamiltonian(1)],
        k => alloc::vec![KHamiltonian(k as usize)],
    };
    rep.graphs += g_members.len() as u64;
    for (_, g) in &g_members {
        for &p in &own {
            lacks(&mut rep, "G", g, p)?;
        }
    }
    if ell >= 0 {
        let k = ell as usize;
        for (_, g) in &j_members {
            lacks(&mut rep, "J", g, KPathHamiltonian(k))?;
        }
        if path_characterization_in_hypothesis(n, r, k) {
            for (form, g) in &g_members {
                if j_members.binary_search_by(|(f, _)| f.cmp(form)).is_ok() {
                    continue;
                }
                let holds = has_property(g, KPathHamiltonian(k))?;
                rep.claim(holds, || format!("G member outside J lacks kpath({k}): {form}"));
            }
        }
    }

    if n as i64 >= ell + 5 {
        let mut checks: Vec<(PropertyKind, i64)> = Vec::new();
        match ell {
            -1 => checks.push((Traceable, (n as i64 + 2) / 2)),
            0 => checks.push((Hamiltonian, (n as i64 + 1) / 2)),
            1 => checks.push((HamiltonianConnected, n as i64 / 2)),
            _ => {}
        }
        if ell >= 0 {
            let big = (n as i64 + 1 - ell) / 2;
            checks.push((KPathHamiltonian(ell as usize), big));
            checks.push((KHamiltonian(ell as usize), big));
        }
        for (_, g) in family_forms(FamilySpec::new(Family::H, n, r, ell))? {
            rep.graphs += 1;
            for &(p, largest) in &checks {
                if has_property(&g, p)? {
                    rep.checked += 1;
                    continue;
                }
                let shape = multipartite_shape(&g);
                let ok = shape
                    .as_ref()
                    .is_some_and(|s| s.largest() as i64 == largest && s.sizes().iter().skip(1).all(|&x| x <= 2));
                rep.claim(ok, || {
                    format!(
                        "H member lacking {p} has the wrong shape: {}",
                        crate::graph6::encode(&g)
                    )
                });
            }
        }
    }
    Ok(rep)
}

/// Part sizes when `g` is complete multipartite: non-adjacency must be an equivalence.
pub fn multipartite_shape(g: &Graph) -> Option<PartSizes> {
    let n = g.order();
    let mut seen = 0u64;
    let mut sizes = Vec::new();
    for v in 0..n {
        if seen & (1 << v) != 0 {
            continue;
        }
        let class = g.vertex_mask() & !g.neighbors(v);
        for u in crate::bits::Bits(class) {
            if g.vertex_mask() & !g.neighbors(u) != class {
                return None;
            }
        }
        seen |= class;
        sizes.push(class.count_ones() as usize);
    }
    PartSizes::new(sizes).ok()
}

/// Exceptional graphs whose claims are checked directly.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Exceptional {
    K31,
    K411,
    K311,
    K6221,
    K4111,
    K51111,
    K72221111,
}

impl Exceptional {
    pub const ALL: [Self; 7] = [
        Self::K31,
        Self::K411,
        Self::K311,
        Self::K6221,
        Self::K4111,
        Self::K51111,
        Self::K72221111,
    ];

    pub fn parts(self) -> &'static [usize] {
        match self {
            Self::K31 => &[3, 1],
            Self::K411 => &[4, 1, 1],
            Self::K311 => &[3, 1, 1],
            Self::K6221 => &[6, 2, 2, 1],
            Self::K4111 => &[4, 1, 1, 1],
            Self::K51111 => &[5, 1, 1, 1, 1],
            Self::K72221111 => &[7, 2, 2, 2, 1, 1, 1, 1],
        }
    }

    /// Registry id such as `K_{6,2,2,1}`.
    pub fn id(self) -> String {
        let parts: Vec<String> = self.parts().iter().map(|p| format!("{p}")).collect();
        format!("K_{{{}}}", parts.join(","))
    }

    /// Accepts `K_{6,2,2,1}`, `K6221`, or `6,2,2,1`.
    pub fn parse(s: &str) -> Option<Self> {
        let digits: String = s.chars().filter(char::is_ascii_digit).collect();
        Self::ALL.into_iter().find(|e| {
            let want: String = e.parts().iter().map(|p| format!("{p}")).collect();
            want == digits
        })
    }

    /// `(r, l, properties it lacks)`: the graph is `K_{r+1}`-free and its edge count is
    /// compared with `e(T_r(n-1)) + l + 1`.
    fn claims(self) -> (usize, i64, &'static [PropertyKind]) {
        use PropertyKind::*;
        match self {
            Self::K31 => (5, -1, &[Traceable]),
            Self::K411 => (4, -1, &[Traceable]),
            Self::K311 => (5, 0, &[Hamiltonian]),
            Self::K6221 => (4, 0, &[Hamiltonian, KHamiltonian(0), KPathHamiltonian(0)]),
            Self::K4111 => (5, 0, &[Hamiltonian]),
            Self::K51111 => (5, 0, &[Hamiltonian]),
            Self::K72221111 => (8, 4, &[]),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessReport {
    pub id: String,
    pub graph6: String,
    pub n: usize,
    pub r: usize,
    pub edges: u64,
    /// `e(T_r(n-1)) + l + 1`.
    pub bound: u64,
    /// Whether the edge count is claimed equal to `bound` (otherwise strictly below).
    pub attains_bound: bool,
    pub claims: Vec<(String, bool)>,
}

impl WitnessReport {
    pub fn passed(&self) -> bool {
        self.claims.iter().all(|(_, ok)| *ok)
    }
}

pub fn witness_check(which: Exceptional) -> Result<WitnessReport, VerifyError> {
    let parts = PartSizes::new(which.parts().to_vec()).map_err(ConstructionError::from)?;
    let g = complete_multipartite(&parts).map_err(ConstructionError::from)?;
    let (r, ell, lacks) = which.claims();
    let n = g.order();
    let edges = g.edge_count() as u64;
    let bound = (turan_edges(n as u64 - 1, r as u64) as i64 + ell + 1) as u64;
    let attains_bound = which != Exceptional::K72221111;
    let mut claims = Vec::new();
    claims.push((format!("K_{}-free", r + 1), g.clique_number_at_most(r)));
    claims.push((
        format!("edges {edges} {} {bound}", if attains_bound { "==" } else { "<" }),
        if attains_bound { edges == bound } else { edges < bound },
    ));
    let shortcut = multipartite_shortcuts(&parts);
    for &p in lacks {
        let holds = has_property(&g, p)?;
        let agrees = match p {
            PropertyKind::Hamiltonian => shortcut.hamiltonian == holds,
            PropertyKind::Traceable => shortcut.traceable == holds,
            _ => true,
        };
        claims.push((format!("not {p}"), !holds && agrees));
    }
    Ok(WitnessReport {
        id: which.id(),
        graph6: crate::graph6::encode(&g),
        n,
        r,
        edges,
        bound,
        attains_bound,
        claims,
    })
}

/// Over every graph on `n` vertices: each failure of traceability, Hamiltonicity and
/// `k`-Hamiltonicity (`k <= 3`) comes with a Chvátal hit, each failure of
/// Hamiltonian-connectedness with a Berge hit, and (when `with_paths`) each failure of
/// `k`-path Hamiltonicity (`k <= 2`) with a Kronk hit; graphs passing the stronger Kronk
/// test are `k`-path Hamiltonian.
pub fn condition_soundness<E: Executor>(exec: &E, n: usize, with_paths: bool) -> Result<CheckReport, VerifyError> {
    if n > MAX_EXHAUSTIVE_N {
        return Err(VerifyError::OverBudget {
            n,
            max: MAX_EXHAUSTIVE_N,
        });
    }
    let name = String::from("degree_conditions");
    let params = alloc::vec![("n", n as i64), ("paths", i64::from(with_paths))];
    fold_enumeration(
        exec,
        EnumConstraints::all(n),
        CheckReport::new(name, params),
        |acc, g| soundness_one(acc, g, with_paths),
        CheckReport::absorb,
    )
}

fn soundness_one(acc: &mut CheckReport, g: &Graph, with_paths: bool) {
    use PropertyKind::*;
    acc.graphs += 1;
    let n = g.order();
    let d = DegreeSequence::of(g);
    let g6 = || crate::graph6::encode(g);
    let holds = |p| has_property(g, p).expect("parameters in range");

    if n >= 2 && !holds(Traceable) {
        let hit = chvatal_violation(&d, ChvatalVariant::Traceable).is_some();
        acc.claim(hit, || format!("non-traceable without Chvátal hit: {}", g6()));
    }
    if n >= 3 {
        if !holds(Hamiltonian) {
            let hit = chvatal_violation(&d, ChvatalVariant::Hamiltonian).is_some();
            acc.claim(hit, || format!("non-Hamiltonian without Chvátal hit: {}", g6()));
        }
        for k in 1..=3.min(n - 3) {
            if !holds(KHamiltonian(k)) {
                let hit = chvatal_violation(&d, ChvatalVariant::KHamiltonian(k)).is_some();
                acc.claim(hit, || format!("non-{k}-Hamiltonian without Chvátal hit: {}", g6()));
            }
        }
        // At n = 3 the index range 1 <= i <= (n-2)/2 is empty, so the condition cannot flag P_3.
        if n >= 4 && !holds(HamiltonianConnected) {
            let hit = berge_violation(&d).is_some();
            acc.claim(hit, || format!("non-Hamiltonian-connected without Berge hit: {}", g6()));
        }
    }
    if with_paths && n >= 3 {
        for k in 0..=2.min(n - 3) {
            let ok = holds(KPathHamiltonian(k));
            if !ok {
                let hit = kronk_violation(&d, k).expect("k <= n-3").is_some();
                acc.claim(hit, || format!("non-{k}-path-Hamiltonian without Kronk hit: {}", g6()));
            }
            if kronk_strong_holds(&d, k).expect("k <= n-2") {
                acc.claim(ok, || {
                    format!("strong Kronk test passes but not {k}-path Hamiltonian: {}", g6())
                });
            }
        }
    }
}
