//! JSON (`schema: 1`) and CSV renderings of verification reports.
//!
//! Wall-clock time is deliberately absent: identical inputs must give identical bytes.

use kfree_core::verify::{CheckReport, ExtremalReport, Verdict, WitnessReport};
use serde::Serialize;

pub const SCHEMA: u32 = 1;

#[derive(Debug, Serialize)]
pub struct Params {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub metric: Option<String>,
}

#[derive(Debug, Serialize)]
pub struct ExtremalJson {
    pub schema: u32,
    pub kind: &'static str,
    pub theorem: String,
    pub params: Params,
    pub computed_max: Option<u64>,
    pub predicted_max: Option<u64>,
    pub verdict: &'static str,
    pub exact_prediction: bool,
    pub extremal_graph6: Vec<String>,
    pub predicted_graph6: Vec<String>,
    pub missing: Vec<String>,
    pub unexpected: Vec<String>,
    pub problems: Vec<String>,
}

impl From<&ExtremalReport> for ExtremalJson {
    fn from(r: &ExtremalReport) -> Self {
        let g6 = |v: &[kfree_core::CanonicalForm]| v.iter().map(|f| f.graph6().to_owned()).collect();
        let t = match r.metric {
            kfree_core::verify::Metric::Cliques(t) => Some(t),
            kfree_core::verify::Metric::Edges => None,
        };
        Self {
            schema: SCHEMA,
            kind: "extremal",
            theorem: r.theorem.clone(),
            params: Params {
                n: Some(r.n),
                r: Some(r.r),
                t,
                metric: Some(r.metric.to_string()),
            },
            computed_max: r.computed_max,
            predicted_max: r.predicted_max,
            verdict: r.verdict.as_str(),
            exact_prediction: r.exact_prediction,
            extremal_graph6: g6(&r.computed_extremal),
            predicted_graph6: g6(&r.predicted_extremal),
            missing: g6(&r.missing),
            unexpected: g6(&r.unexpected),
            problems: r.problems.clone(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct CheckJson {
    pub schema: u32,
    pub kind: &'static str,
    pub theorem: String,
    pub params: serde_json::Map<String, serde_json::Value>,
    pub graphs: u64,
    pub checked: u64,
    pub verdict: &'static str,
    pub failures: Vec<String>,
}

impl From<&CheckReport> for CheckJson {
    fn from(r: &CheckReport) -> Self {
        Self {
            schema: SCHEMA,
            kind: "check",
            theorem: r.name.clone(),
            params: r.params.iter().map(|&(k, v)| (k.to_owned(), v.into())).collect(),
            graphs: r.graphs,
            checked: r.checked,
            verdict: r.verdict().as_str(),
            failures: r.failures.clone(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct Claim {
    pub claim: String,
    pub pass: bool,
}

#[derive(Debug, Serialize)]
pub struct WitnessJson {
    pub schema: u32,
    pub kind: &'static str,
    pub theorem: String,
    pub graph6: String,
    pub params: Params,
    pub edges: u64,
    pub bound: u64,
    pub verdict: &'static str,
    pub claims: Vec<Claim>,
}

impl From<&WitnessReport> for WitnessJson {
    fn from(w: &WitnessReport) -> Self {
        Self {
            schema: SCHEMA,
            kind: "witness",
            theorem: w.id.clone(),
            graph6: w.graph6.clone(),
            params: Params {
                n: Some(w.n),
                r: Some(w.r),
                t: None,
                metric: None,
            },
            edges: w.edges,
            bound: w.bound,
            verdict: if w.passed() {
                Verdict::WitnessOnly.as_str()
            } else {
                Verdict::Mismatch.as_str()
            },
            claims: w
                .claims
                .iter()
                .map(|(c, p)| Claim {
                    claim: c.clone(),
                    pass: *p,
                })
                .collect(),
        }
    }
}

/// Any report the CLI can emit.
#[derive(Debug)]
pub enum Report {
    Extremal(ExtremalReport),
    Check(CheckReport),
    Witness(Vec<WitnessReport>),
}

impl Report {
    pub fn verdict(&self) -> Verdict {
        match self {
            Self::Extremal(r) => r.verdict,
            Self::Check(r) => r.verdict(),
            Self::Witness(ws) if ws.iter().all(WitnessReport::passed) => Verdict::WitnessOnly,
            Self::Witness(_) => Verdict::Mismatch,
        }
    }

    /// Pretty JSON with a trailing newline. Witness batches become a JSON array.
    pub fn to_json(&self) -> String {
        let text = match self {
            Self::Extremal(r) => serde_json::to_string_pretty(&ExtremalJson::from(r)),
            Self::Check(r) => serde_json::to_string_pretty(&CheckJson::from(r)),
            Self::Witness(ws) => serde_json::to_string_pretty(&ws.iter().map(WitnessJson::from).collect::<Vec<_>>()),
        };
        let mut s = text.expect("report types serialize");
        s.push('\n');
        s
    }

    /// One summary row per report (per graph for witness batches), with a header.
    pub fn to_csv(&self) -> Result<String, csv::Error> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record([
            "theorem",
            "n",
            "r",
            "metric",
            "computed",
            "predicted",
            "verdict",
            "count",
        ])?;
        let opt = |v: Option<u64>| v.map(|x| x.to_string()).unwrap_or_default();
        match self {
            Self::Extremal(r) => w.write_record([
                r.theorem.clone(),
                r.n.to_string(),
                r.r.to_string(),
                r.metric.to_string(),
                opt(r.computed_max),
                opt(r.predicted_max),
                r.verdict.to_string(),
                r.computed_extremal.len().to_string(),
            ])?,
            Self::Check(r) => {
                let param = |k: &str| {
                    r.params
                        .iter()
                        .find(|p| p.0 == k)
                        .map(|p| p.1.to_string())
                        .unwrap_or_default()
                };
                w.write_record([
                    r.name.clone(),
                    param("n"),
                    param("r"),
                    String::new(),
                    r.failures.len().to_string(),
                    "0".to_owned(),
                    r.verdict().to_string(),
                    r.checked.to_string(),
                ])?
            }
            Self::Witness(ws) => {
                for x in ws {
                    let verdict = if x.passed() {
                        Verdict::WitnessOnly
                    } else {
                        Verdict::Mismatch
                    };
                    w.write_record([
                        x.id.clone(),
                        x.n.to_string(),
                        x.r.to_string(),
                        "edges".to_owned(),
                        x.edges.to_string(),
                        x.bound.to_string(),
                        verdict.to_string(),
                        x.claims.len().to_string(),
                    ])?;
                }
            }
        }
        let bytes = w.into_inner().map_err(|e| csv::Error::from(e.into_error()))?;
        Ok(String::from_utf8(bytes).expect("csv of utf-8 fields"))
    }
}
