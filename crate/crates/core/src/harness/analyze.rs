use std::fmt;
use std::time::Instant;

use serde::Serialize;

use crate::constructions::{
    complement_coloring_on, formula_chi_gamma0, local_clique, local_complement_formula, product_coloring_on,
    Certificate,
};
use crate::error::{Error, Result};
use crate::graph::{build_gamma, build_gamma0, Coloring, Graph};
use crate::ring::{FactorKind, RingSpec};
use crate::solvers::{chromatic_number, Budget, ChromaticResult};

/// Default per-instance solver budget.
pub const DEFAULT_BUDGET_MS: u64 = 120_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum GraphKind {
    Gamma0,
    Gamma,
    #[value(name = "complement_gamma", alias = "complement-gamma")]
    ComplementGamma,
}

impl GraphKind {
    pub fn build(self, spec: &RingSpec) -> Result<Graph> {
        match self {
            GraphKind::Gamma0 => build_gamma0(spec),
            GraphKind::Gamma => Ok(build_gamma(spec)),
            GraphKind::ComplementGamma => Ok(build_gamma(spec).complement()),
        }
    }
}

impl fmt::Display for GraphKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GraphKind::Gamma0 => "gamma0",
            GraphKind::Gamma => "gamma",
            GraphKind::ComplementGamma => "complement_gamma",
        })
    }
}

/// Closed-form χ = ω for `kind`, where one is known.
pub fn formula_value(spec: &RingSpec, kind: GraphKind) -> Option<u64> {
    let gamma0 = || {
        let mut prime_powers = Vec::new();
        let mut domains = 0;
        for f in spec.factors() {
            match f.kind() {
                FactorKind::LocalZ => prime_powers.push((f.prime(), f.exponent())),
                FactorKind::GaloisField => domains += 1,
            }
        }
        formula_chi_gamma0(&prime_powers, domains)
    };
    match kind {
        GraphKind::Gamma0 => Some(gamma0()),
        GraphKind::Gamma => {
            let field = spec.factors().len() == 1 && spec.factors()[0].is_field();
            Some(if field { 0 } else { gamma0() - 1 })
        }
        GraphKind::ComplementGamma => match spec.factors() {
            [f] if f.kind() == FactorKind::LocalZ && f.exponent() >= 3 => {
                Some(local_complement_formula(f.prime(), f.exponent()))
            }
            _ => None,
        },
    }
}

/// Verified certificate for `kind`, from the matching construction.
pub fn construct_certificate(spec: &RingSpec, kind: GraphKind, g: &Graph) -> Result<(&'static str, Certificate)> {
    let plans: Vec<_> = spec.factors().iter().map(local_clique).collect();
    match kind {
        GraphKind::Gamma0 => Ok(("product_coloring", product_coloring_on(spec, &plans, g)?)),
        GraphKind::Gamma => {
            let g0 = build_gamma0(spec)?;
            let cert = product_coloring_on(spec, &plans, &g0)?;
            Ok(("product_coloring_restricted", cert.restrict(&g0, g)?))
        }
        GraphKind::ComplementGamma => Ok(("complement_coloring", complement_coloring_on(spec, g)?)),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AnalyzeOptions {
    pub exact: bool,
    pub construct: bool,
    pub formula: bool,
    pub budget_ms: u64,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        AnalyzeOptions { exact: true, construct: true, formula: true, budget_ms: DEFAULT_BUDGET_MS }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Failure,
    Timeout,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Failure => "FAILURE",
            Status::Timeout => "TIMEOUT",
        })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct RingSummary {
    pub spec: String,
    pub factors: Vec<String>,
    pub order: u64,
    pub reduced: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct GraphSummary {
    pub kind: GraphKind,
    pub vertices: usize,
    pub edges: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct ExactSummary {
    pub omega: usize,
    pub chi: usize,
    pub clique: Vec<String>,
    pub color_classes: Vec<Vec<String>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct TimeoutSummary {
    pub lower: usize,
    pub upper: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct Results {
    pub status: Status,
    pub exact: Option<ExactSummary>,
    pub timeout: Option<TimeoutSummary>,
    pub formula: Option<u64>,
    pub disagreements: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CertificateSummary {
    pub construction: String,
    pub color_count: usize,
    pub clique: Vec<String>,
    pub color_classes: Vec<Vec<String>>,
    pub formula_value: Option<u64>,
    pub solver_chi: Option<usize>,
    pub solver_omega: Option<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Timings {
    pub build_ms: f64,
    pub exact_ms: Option<f64>,
    pub construct_ms: Option<f64>,
}

/// Serializable outcome of [`analyze`]. Top-level keys are stable.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub ring: RingSummary,
    pub graph: GraphSummary,
    pub results: Results,
    pub certificates: Vec<CertificateSummary>,
    pub timings: Timings,
}

/// A report together with the graph and raw witnesses it was derived from.
#[derive(Debug, Clone)]
pub struct Analysis {
    pub report: Report,
    pub graph: Graph,
    exact: Option<ChromaticResult>,
    certificates: Vec<Certificate>,
}

impl Analysis {
    pub fn status(&self) -> Status {
        self.report.results.status
    }

    /// Re-validates every witness against the graph, then serializes.
    pub fn to_json(&self) -> Result<String> {
        if let Some(r) = &self.exact {
            let ok = r.clique.witness.len() == r.clique.omega
                && self.graph.is_clique(&r.clique.witness)
                && r.coloring.color_count == r.chi
                && self.graph.verify_coloring(&r.coloring);
            if !ok {
                return Err(Error::InvalidCertificate("solver witness".into()));
            }
        }
        for cert in &self.certificates {
            cert.verify(&self.graph)?;
        }
        serde_json::to_string_pretty(&self.report).map_err(|e| Error::Io(e.to_string()))
    }
}

fn millis(start: Instant) -> f64 {
    start.elapsed().as_secs_f64() * 1000.0
}

fn names(spec: &RingSpec, g: &Graph, vertices: &[usize]) -> Vec<String> {
    vertices.iter().map(|&v| spec.format_element(&spec.element_of_index(g.labels()[v]))).collect()
}

fn color_classes(spec: &RingSpec, g: &Graph, coloring: &Coloring) -> Vec<Vec<String>> {
    let mut classes = vec![Vec::new(); coloring.color_count];
    for (v, &c) in coloring.assignment.iter().enumerate() {
        classes[c].push(v);
    }
    classes.iter().map(|members| names(spec, g, members)).collect()
}

pub fn analyze(spec: &RingSpec, kind: GraphKind, options: AnalyzeOptions) -> Result<Analysis> {
    let start = Instant::now();
    let graph = kind.build(spec)?;
    let build_ms = millis(start);

    let mut values: Vec<(String, u64)> = Vec::new();
    let mut exact = None;
    let mut exact_summary = None;
    let mut timeout = None;
    let mut exact_ms = None;
    if options.exact {
        let start = Instant::now();
        match chromatic_number(&graph, Budget::from_millis(options.budget_ms)) {
            Ok(r) => {
                values.push(("solver chi".into(), r.chi as u64));
                values.push(("solver omega".into(), r.clique.omega as u64));
                exact_summary = Some(ExactSummary {
                    omega: r.clique.omega,
                    chi: r.chi,
                    clique: names(spec, &graph, &r.clique.witness),
                    color_classes: color_classes(spec, &graph, &r.coloring),
                });
                exact = Some(r);
            }
            Err(Error::Timeout { lower, upper }) => timeout = Some(TimeoutSummary { lower, upper }),
            Err(e) => return Err(e),
        }
        exact_ms = Some(millis(start));
    }

    let formula = if options.formula { formula_value(spec, kind) } else { None };
    if let Some(f) = formula {
        values.push(("formula".into(), f));
    }

    let mut certificates = Vec::new();
    let mut summaries = Vec::new();
    let mut disagreements = Vec::new();
    let mut construct_ms = None;
    if options.construct {
        let start = Instant::now();
        match construct_certificate(spec, kind, &graph) {
            Ok((name, cert)) => {
                values.push((name.to_string(), cert.size as u64));
                summaries.push(CertificateSummary {
                    construction: name.to_string(),
                    color_count: cert.coloring.color_count,
                    clique: names(spec, &graph, &cert.clique),
                    color_classes: color_classes(spec, &graph, &cert.coloring),
                    formula_value: formula,
                    solver_chi: exact.as_ref().map(|r| r.chi),
                    solver_omega: exact.as_ref().map(|r| r.clique.omega),
                });
                certificates.push(cert);
            }
            Err(e) => disagreements.push(format!("construction failed: {e}")),
        }
        construct_ms = Some(millis(start));
    }

    if let Some((first, v0)) = values.first() {
        for (name, v) in &values[1..] {
            if v != v0 {
                disagreements.push(format!("{name} = {v} but {first} = {v0}"));
            }
        }
    }
    let status = if !disagreements.is_empty() {
        Status::Failure
    } else if timeout.is_some() {
        Status::Timeout
    } else {
        Status::Pass
    };

    let report = Report {
        ring: RingSummary {
            spec: spec.to_string(),
            factors: spec.factors().iter().map(ToString::to_string).collect(),
            order: spec.order(),
            reduced: spec.is_reduced(),
        },
        graph: GraphSummary { kind, vertices: graph.vertex_count(), edges: graph.edge_count() },
        results: Results { status, exact: exact_summary, timeout, formula, disagreements },
        certificates: summaries,
        timings: Timings { build_ms, exact_ms, construct_ms },
    };
    Ok(Analysis { report, graph, exact, certificates })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::parse_ring_spec;

    fn run(text: &str, kind: GraphKind) -> Analysis {
        analyze(&parse_ring_spec(text).unwrap(), kind, AnalyzeOptions::default()).unwrap()
    }

    #[test]
    fn gamma0_example() {
        let a = run("Z8xZ16", GraphKind::Gamma0);
        assert_eq!(a.status(), Status::Pass);
        let exact = a.report.results.exact.as_ref().unwrap();
        assert_eq!((exact.omega, exact.chi), (9, 9));
        assert_eq!(a.report.certificates[0].color_count, 9);
        assert_eq!(a.report.results.formula, Some(9));
    }

    #[test]
    fn complement_example() {
        let a = run("Z8xZ16", GraphKind::ComplementGamma);
        assert_eq!(a.status(), Status::Pass);
        assert_eq!(a.report.graph.vertices, 95);
        assert_eq!(a.report.certificates[0].color_count, 76);
    }

    #[test]
    fn field_gamma_is_empty() {
        let a = run("Z7", GraphKind::Gamma);
        assert_eq!(a.status(), Status::Pass);
        assert_eq!(a.report.graph.vertices, 0);
        assert_eq!(a.report.results.exact.as_ref().unwrap().chi, 0);
    }

    #[test]
    fn gamma_restriction() {
        let a = run("Z4 x GF(4)", GraphKind::Gamma);
        assert_eq!(a.status(), Status::Pass);
        assert_eq!(a.report.results.formula, Some(2));
    }

    #[test]
    fn even_local_complement_exceeds_valuation_formula() {
        let a = run("Z16", GraphKind::ComplementGamma);
        assert_eq!(a.status(), Status::Failure);
        assert_eq!(a.report.results.exact.as_ref().unwrap().omega, 5);
        assert_eq!(a.report.results.formula, Some(4));
    }

    #[test]
    fn json_shape() {
        let json = run("Z6", GraphKind::Gamma0).to_json().unwrap();
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        let mut keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
        keys.sort_unstable();
        assert_eq!(keys, ["certificates", "graph", "results", "ring", "timings"]);
        assert_eq!(v["results"]["status"], "PASS");
    }
}
