//! Batch verification over families of rings. Each instance yields one row
//! comparing the closed form, the certificate and (when small enough) the
//! exact solvers.

use std::fmt;
use std::io::Write;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::constructions::{
    complement_clique_zpr, complement_coloring, fields_formula, formula_chi_gamma0, local_clique,
    local_complement_formula, local_gamma0_formula, product_coloring_on, product_composition,
};
use crate::error::{Error, Result};
use crate::graph::{build_gamma, build_gamma0, Graph};
use crate::ring::arith::is_prime;
use crate::ring::{FactorSpec, RingSpec};
use crate::solvers::{chromatic_number, Budget};

use super::analyze::DEFAULT_BUDGET_MS;

/// Default vertex count above which grids rely on certificates alone.
pub const DEFAULT_SOLVER_MAX_VERTICES: usize = 1500;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    /// `Γ₀(Z_{p^r})` against the local formula.
    Lem1,
    /// Products of distinct finite fields against `k + 1`.
    #[value(name = "coll_domains", alias = "coll-domains")]
    CollDomains,
    /// Products of `Z_{p^r}` against the product formula.
    Maintheo1,
    /// Products with integral-domain factors, realized by finite fields.
    Maincoll1,
    /// The valuation clique in the complement of `Γ(Z_{p^r})`.
    Lembar,
    /// Complement of `Γ(R)` for products of `Z_{p^r}`.
    Maintheo2,
    /// Composition with a reduced or non-reduced second factor.
    Lemmas23,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Family::Lem1 => "lem1",
            Family::CollDomains => "coll_domains",
            Family::Maintheo1 => "maintheo1",
            Family::Maincoll1 => "maincoll1",
            Family::Lembar => "lembar",
            Family::Maintheo2 => "maintheo2",
            Family::Lemmas23 => "lemmas23",
        };
        f.write_str(name)
    }
}

/// Instance bounds. `Bounds::for_family` gives each family's standard run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bounds {
    /// Allowed primes; `None` admits every prime.
    pub primes: Option<Vec<u64>>,
    /// Exponent range of local factors (field degree range for field families).
    pub r_min: u32,
    pub r_max: u32,
    /// Number of factors (local factors for `maincoll1`).
    pub k_min: usize,
    pub k_max: usize,
    pub max_factor_order: u64,
    pub max_order: u64,
    /// Bound on `|Γ(R)|`, used by `maintheo2`.
    pub max_gamma: Option<u64>,
    pub solver_max_vertices: usize,
    pub budget_ms: u64,
    pub seed: u64,
    /// Pairs per kind for `lemmas23`.
    pub samples: usize,
}

impl Bounds {
    pub fn for_family(family: Family) -> Bounds {
        let base = Bounds {
            primes: Some(vec![2, 3, 5, 7]),
            r_min: 1,
            r_max: 5,
            k_min: 1,
            k_max: 1,
            max_factor_order: 2401,
            max_order: 2401,
            max_gamma: None,
            solver_max_vertices: DEFAULT_SOLVER_MAX_VERTICES,
            budget_ms: DEFAULT_BUDGET_MS,
            seed: 0,
            samples: 20,
        };
        match family {
            Family::Lem1 => Bounds { solver_max_vertices: 128, ..base },
            Family::CollDomains => {
                Bounds { r_max: 3, k_min: 2, k_max: 4, max_factor_order: 9, max_order: 4096, ..base }
            }
            Family::Maintheo1 => Bounds {
                primes: None,
                r_max: 10,
                k_max: 3,
                max_factor_order: 1024,
                max_order: 1024,
                solver_max_vertices: 256,
                ..base
            },
            Family::Maincoll1 => Bounds {
                primes: Some(vec![2, 3, 5]),
                r_max: 3,
                k_max: 2,
                max_factor_order: 27,
                max_order: 1024,
                solver_max_vertices: 256,
                ..base
            },
            Family::Lembar => Bounds { primes: Some(vec![2, 3]), r_min: 3, r_max: 5, ..base },
            Family::Maintheo2 => Bounds {
                primes: None,
                r_max: 20,
                k_min: 2,
                k_max: 2,
                max_factor_order: u64::MAX,
                max_order: u64::MAX,
                max_gamma: Some(600),
                ..base
            },
            Family::Lemmas23 => Bounds { r_max: 3, k_max: 2, max_factor_order: 32, max_order: 256, ..base },
        }
    }

    fn prime_ok(&self, p: u64) -> bool {
        self.primes.as_ref().map_or(is_prime(p), |ps| ps.contains(&p))
    }

    /// `(p, r)` with `p^r <= max_factor_order`, sorted by `p^r`.
    fn prime_powers(&self, limit: u64) -> Vec<(u64, u32)> {
        let limit = limit.min(self.max_factor_order);
        let mut out = Vec::new();
        let mut p = 2u64;
        while p <= limit {
            if self.prime_ok(p) {
                let mut q = p;
                for r in 1..=self.r_max {
                    if q > limit {
                        break;
                    }
                    if r >= self.r_min {
                        out.push((p, r));
                    }
                    q = match q.checked_mul(p) {
                        Some(q) => q,
                        None => break,
                    };
                }
            }
            if let Some(ps) = &self.primes {
                match ps.iter().copied().filter(|&x| x > p).min() {
                    Some(next) => p = next,
                    None => break,
                }
            } else {
                p += 1;
            }
        }
        out.sort_by_key(|&(p, r)| (p.pow(r), p));
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum RowStatus {
    Pass,
    Fail,
    Timeout,
}

impl fmt::Display for RowStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RowStatus::Pass => "PASS",
            RowStatus::Fail => "FAIL",
            RowStatus::Timeout => "TIMEOUT",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Row {
    pub instance: String,
    pub vertices: usize,
    pub formula: Option<u64>,
    pub certificate: Option<u64>,
    pub solver_chi: Option<u64>,
    pub solver_omega: Option<u64>,
    pub status: RowStatus,
    pub note: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct Summary {
    pub family: Family,
    pub rows: Vec<Row>,
}

impl Summary {
    pub fn count(&self, status: RowStatus) -> usize {
        self.rows.iter().filter(|r| r.status == status).count()
    }

    pub fn all_pass(&self) -> bool {
        self.count(RowStatus::Pass) == self.rows.len()
    }

    /// 0 when every row passes, 1 on any failure, otherwise 3 for timeouts.
    pub fn exit_code(&self) -> i32 {
        if self.count(RowStatus::Fail) > 0 {
            1
        } else if self.count(RowStatus::Timeout) > 0 {
            3
        } else {
            0
        }
    }

    pub fn write_table(&self, mut out: impl Write) -> Result<()> {
        let dash = |v: Option<u64>| v.map_or("-".to_string(), |v| v.to_string());
        writeln!(
            out,
            "{:<28} {:>6} {:>8} {:>8} {:>8} {:>8}  {:<7} note",
            "instance", "|V|", "formula", "cert", "chi", "omega", "status"
        )?;
        for r in &self.rows {
            writeln!(
                out,
                "{:<28} {:>6} {:>8} {:>8} {:>8} {:>8}  {:<7} {}",
                r.instance,
                r.vertices,
                dash(r.formula),
                dash(r.certificate),
                dash(r.solver_chi),
                dash(r.solver_omega),
                r.status,
                r.note
            )?;
        }
        writeln!(
            out,
            "{}: {} instances, {} pass, {} fail, {} timeout",
            self.family,
            self.rows.len(),
            self.count(RowStatus::Pass),
            self.count(RowStatus::Fail),
            self.count(RowStatus::Timeout)
        )?;
        Ok(())
    }

    pub fn write_csv(&self, out: impl Write) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        for r in &self.rows {
            w.serialize(r).map_err(|e| Error::Io(e.to_string()))?;
        }
        w.flush()?;
        Ok(())
    }
}

enum Solved {
    Skipped,
    Done { chi: u64, omega: u64 },
    Timeout { lower: usize, upper: usize },
}

fn solve(g: &Graph, bounds: &Bounds) -> Result<Solved> {
    if g.vertex_count() > bounds.solver_max_vertices {
        return Ok(Solved::Skipped);
    }
    match chromatic_number(g, Budget::from_millis(bounds.budget_ms)) {
        Ok(r) => Ok(Solved::Done { chi: r.chi as u64, omega: r.clique.omega as u64 }),
        Err(Error::Timeout { lower, upper }) => Ok(Solved::Timeout { lower, upper }),
        Err(e) => Err(e),
    }
}

/// Row whose sources must all agree.
fn agreement_row(instance: String, g: &Graph, formula: Option<u64>, certificate: Option<u64>, solved: Solved) -> Row {
    let mut row = Row {
        instance,
        vertices: g.vertex_count(),
        formula,
        certificate,
        solver_chi: None,
        solver_omega: None,
        status: RowStatus::Pass,
        note: String::new(),
    };
    match solved {
        Solved::Skipped => row.note = "certified, not solver-checked".into(),
        Solved::Done { chi, omega } => {
            row.solver_chi = Some(chi);
            row.solver_omega = Some(omega);
        }
        Solved::Timeout { lower, upper } => {
            row.status = RowStatus::Timeout;
            row.note = format!("solver budget exhausted at {lower}..={upper}");
        }
    }
    let values: Vec<u64> =
        [row.formula, row.certificate, row.solver_chi, row.solver_omega].into_iter().flatten().collect();
    if values.windows(2).any(|w| w[0] != w[1]) {
        row.status = RowStatus::Fail;
    }
    row
}

fn error_row(instance: String, err: &Error) -> Row {
    Row {
        instance,
        vertices: 0,
        formula: None,
        certificate: None,
        solver_chi: None,
        solver_omega: None,
        status: RowStatus::Fail,
        note: err.to_string(),
    }
}

fn local_ring(factors: &[(u64, u32)]) -> Result<RingSpec> {
    let factors = factors.iter().map(|&(p, r)| FactorSpec::local_z(p, r)).collect::<Result<Vec<_>>>()?;
    let order = factors.iter().map(FactorSpec::order).product();
    RingSpec::with_max_order(factors, order)
}

fn gamma0_row(spec: &RingSpec, formula: u64, bounds: &Bounds) -> Result<Row> {
    let g = build_gamma0(spec)?;
    let plans: Vec<_> = spec.factors().iter().map(local_clique).collect();
    let cert = product_coloring_on(spec, &plans, &g)?;
    Ok(agreement_row(spec.to_string(), &g, Some(formula), Some(cert.size as u64), solve(&g, bounds)?))
}

/// Nondecreasing index tuples of length `k` over `items`, pruned by `keep`.
fn multisets<T: Clone>(items: &[T], k: usize, keep: &dyn Fn(&[T]) -> bool) -> Vec<Vec<T>> {
    fn go<T: Clone>(
        items: &[T],
        k: usize,
        start: usize,
        cur: &mut Vec<T>,
        keep: &dyn Fn(&[T]) -> bool,
        out: &mut Vec<Vec<T>>,
    ) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            cur.push(items[i].clone());
            if keep(cur) {
                go(items, k, i, cur, keep, out);
            }
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(items, k, 0, &mut Vec::new(), keep, &mut out);
    out
}

fn order_of(factors: &[(u64, u32)]) -> Option<u64> {
    factors.iter().try_fold(1u64, |acc, &(p, r)| acc.checked_mul(p.checked_pow(r)?))
}

/// `|Z(R)*|` for a product of `Z_{p^r}`.
fn gamma_size(factors: &[(u64, u32)]) -> Option<u64> {
    let units: u64 = factors.iter().map(|&(p, r)| p.pow(r) - p.pow(r - 1)).product();
    Some(order_of(factors)? - units - 1)
}

fn small_fields(bounds: &Bounds) -> Result<Vec<FactorSpec>> {
    bounds.prime_powers(bounds.max_factor_order).into_iter().map(|(p, k)| FactorSpec::galois_field(p, k)).collect()
}

fn lem1(bounds: &Bounds) -> Vec<Row> {
    bounds
        .prime_powers(bounds.max_order)
        .par_iter()
        .map(|&(p, r)| {
            let run = || gamma0_row(&local_ring(&[(p, r)])?, local_gamma0_formula(p, r), bounds);
            run().unwrap_or_else(|e| error_row(format!("Z{}", p.pow(r)), &e))
        })
        .collect()
}

fn product_family(bounds: &Bounds) -> Vec<Row> {
    let items = bounds.prime_powers(bounds.max_order);
    let within = |f: &[(u64, u32)]| order_of(f).is_some_and(|o| o <= bounds.max_order);
    let instances: Vec<Vec<(u64, u32)>> =
        (bounds.k_min..=bounds.k_max).flat_map(|k| multisets(&items, k, &within)).collect();
    instances
        .par_iter()
        .map(|f| {
            let run = || gamma0_row(&local_ring(f)?, formula_chi_gamma0(f, 0), bounds);
            run().unwrap_or_else(|e| error_row(format!("{f:?}"), &e))
        })
        .collect()
}

fn coll_domains(bounds: &Bounds) -> Result<Vec<Row>> {
    let fields = small_fields(bounds)?;
    let mut instances = Vec::new();
    for k in bounds.k_min..=bounds.k_max {
        // distinct fields: strictly increasing index tuples
        let within = |f: &[FactorSpec]| {
            f.windows(2).all(|w| w[0].order() != w[1].order())
                && f.iter().try_fold(1u64, |acc, x| acc.checked_mul(x.order())).is_some_and(|o| o <= bounds.max_order)
        };
        instances.extend(multisets(&fields, k, &within));
    }
    Ok(instances
        .par_iter()
        .map(|f| {
            let run = || {
                let spec = RingSpec::with_max_order(f.clone(), bounds.max_order)?;
                gamma0_row(&spec, fields_formula(f.len() as u64), bounds)
            };
            run().unwrap_or_else(|e| error_row(format!("{f:?}"), &e))
        })
        .collect())
}

fn maincoll1(bounds: &Bounds) -> Result<Vec<Row>> {
    let items = bounds.prime_powers(bounds.max_order);
    let domains = [FactorSpec::galois_field(2, 1)?, FactorSpec::galois_field(3, 1)?];
    let within = |f: &[(u64, u32)]| order_of(f).is_some_and(|o| o <= bounds.max_order);
    let mut instances = Vec::new();
    for k in bounds.k_min..=bounds.k_max {
        for local in multisets(&items, k, &within) {
            for n in 1..=domains.len() {
                instances.push((local.clone(), n));
            }
        }
    }
    Ok(instances
        .par_iter()
        .filter_map(|(local, n)| {
            let run = || -> Result<Option<Row>> {
                let mut factors: Vec<FactorSpec> = domains[..*n].to_vec();
                for &(p, r) in local {
                    factors.push(FactorSpec::local_z(p, r)?);
                }
                let order: u64 = factors.iter().map(FactorSpec::order).product();
                if order > bounds.max_order {
                    return Ok(None);
                }
                let spec = RingSpec::with_max_order(factors, order)?;
                let mut row = gamma0_row(&spec, formula_chi_gamma0(local, *n as u64), bounds)?;
                let sep = if row.note.is_empty() { "" } else { "; " };
                row.note = format!("{}{sep}Z^{n} realized by fields", row.note);
                Ok(Some(row))
            };
            run().unwrap_or_else(|e| Some(error_row(format!("{local:?} x Z^{n}"), &e)))
        })
        .collect())
}

fn lembar(bounds: &Bounds) -> Vec<Row> {
    bounds
        .prime_powers(bounds.max_order)
        .par_iter()
        .map(|&(p, r)| {
            let run = || -> Result<Row> {
                let clique = complement_clique_zpr(p, r)?;
                let spec = local_ring(&[(p, r)])?;
                let g = build_gamma(&spec).complement();
                if !g.check(&clique.vertex_set(&g)?, crate::graph::SetMode::Clique) {
                    return Err(Error::InvalidCertificate("valuation clique is not a clique".into()));
                }
                let mut row = agreement_row(
                    spec.to_string(),
                    &g,
                    Some(local_complement_formula(p, r)),
                    Some(clique.members.len() as u64),
                    solve(&g, bounds)?,
                );
                let (_, full) = complement_coloring(&spec)?;
                let sep = if row.note.is_empty() { "" } else { "; " };
                row.note = format!("{}{sep}|rest| = {}, full construction = {}", row.note, clique.rest, full.size);
                Ok(row)
            };
            run().unwrap_or_else(|e| error_row(format!("Z{}", p.pow(r)), &e))
        })
        .collect()
}

fn maintheo2(bounds: &Bounds) -> Vec<Row> {
    let gamma_cap = bounds.max_gamma.unwrap_or(u64::MAX);
    // |Γ(R)| >= the largest factor order, which bounds the factors
    let items = bounds.prime_powers(gamma_cap.saturating_add(1));
    let within = |f: &[(u64, u32)]| {
        order_of(f).is_some_and(|o| o <= bounds.max_order)
            && (f.len() < bounds.k_min || gamma_size(f).is_some_and(|g| g <= gamma_cap))
    };
    let instances: Vec<Vec<(u64, u32)>> =
        (bounds.k_min..=bounds.k_max).flat_map(|k| multisets(&items, k, &within)).collect();
    instances
        .par_iter()
        .map(|f| {
            let run = || -> Result<Row> {
                let spec = local_ring(f)?;
                let (g, cert) = complement_coloring(&spec)?;
                Ok(agreement_row(spec.to_string(), &g, None, Some(cert.size as u64), solve(&g, bounds)?))
            };
            run().unwrap_or_else(|e| error_row(format!("{f:?}"), &e))
        })
        .collect()
}

fn exact_gamma0(spec: &RingSpec, bounds: &Bounds) -> Result<Option<(u64, u64)>> {
    match solve(&build_gamma0(spec)?, bounds)? {
        Solved::Done { chi, omega } => Ok(Some((chi, omega))),
        Solved::Skipped => Err(Error::TooLarge { vertices: spec.order() as usize, limit: bounds.solver_max_vertices }),
        Solved::Timeout { .. } => Ok(None),
    }
}

fn lemmas23(bounds: &Bounds) -> Result<Vec<Row>> {
    let items = bounds.prime_powers(bounds.max_factor_order);
    let within = |f: &[(u64, u32)]| order_of(f).is_some_and(|o| o <= bounds.max_factor_order);
    let firsts: Vec<Vec<FactorSpec>> = (bounds.k_min..=bounds.k_max)
        .flat_map(|k| multisets(&items, k, &within))
        .map(|f| f.iter().map(|&(p, r)| FactorSpec::local_z(p, r)).collect::<Result<Vec<_>>>())
        .collect::<Result<_>>()?;
    let fields: Vec<FactorSpec> = small_fields(&Bounds { r_max: 2, max_factor_order: 9, ..bounds.clone() })?;
    let nonreduced: Vec<FactorSpec> = items
        .iter()
        .filter(|&&(p, r)| r >= 2 && p.pow(r) <= 27)
        .map(|&(p, r)| FactorSpec::local_z(p, r))
        .collect::<Result<_>>()?;

    let mut rng = ChaCha8Rng::seed_from_u64(bounds.seed);
    let mut pairs = Vec::new();
    for (seconds, reduced) in [(&fields, true), (&nonreduced, false)] {
        let candidates: Vec<(Vec<FactorSpec>, FactorSpec)> = firsts
            .iter()
            .flat_map(|a| seconds.iter().map(move |b| (a.clone(), b.clone())))
            .filter(|(a, b)| a.iter().map(FactorSpec::order).product::<u64>() * b.order() <= bounds.max_order)
            .collect();
        pairs.extend(candidates.choose_multiple(&mut rng, bounds.samples).cloned().map(|(a, b)| (a, b, reduced)));
    }

    Ok(pairs
        .par_iter()
        .map(|(first, second, reduced)| {
            let r1 = RingSpec::with_max_order(first.clone(), bounds.max_order);
            let name = format!("({}) x {second}", r1.as_ref().map_or(String::new(), ToString::to_string));
            let run = || -> Result<Row> {
                let r1 = r1.clone()?;
                let r2 = RingSpec::with_max_order(vec![second.clone()], bounds.max_order)?;
                let mut factors = first.clone();
                factors.push(second.clone());
                let prod = RingSpec::with_max_order(factors, bounds.max_order)?;
                let (Some(a), Some(b), Some(c)) =
                    (exact_gamma0(&r1, bounds)?, exact_gamma0(&r2, bounds)?, exact_gamma0(&prod, bounds)?)
                else {
                    let row = error_row(name.clone(), &Error::Timeout { lower: 0, upper: 0 });
                    return Ok(Row { status: RowStatus::Timeout, note: "solver budget exhausted".into(), ..row });
                };
                let chi = product_composition(a.0, b.0, *reduced);
                let omega = product_composition(a.1, b.1, *reduced);
                let ok = if *reduced {
                    c.0 == chi.value && c.1 == omega.value
                } else {
                    c.0 >= chi.value && c.1 >= omega.value
                };
                Ok(Row {
                    instance: name.clone(),
                    vertices: prod.order() as usize,
                    formula: Some(chi.value),
                    certificate: None,
                    solver_chi: Some(c.0),
                    solver_omega: Some(c.1),
                    status: if ok { RowStatus::Pass } else { RowStatus::Fail },
                    note: if *reduced {
                        format!("equality; omega composition {}", omega.value)
                    } else {
                        format!("lower bound; omega composition {}", omega.value)
                    },
                })
            };
            run().unwrap_or_else(|e| error_row(name.clone(), &e))
        })
        .collect())
}

pub fn verify_grid(family: Family, bounds: &Bounds) -> Result<Summary> {
    let rows = match family {
        Family::Lem1 => lem1(bounds),
        Family::CollDomains => coll_domains(bounds)?,
        Family::Maintheo1 => product_family(bounds),
        Family::Maincoll1 => maincoll1(bounds)?,
        Family::Lembar => lembar(bounds),
        Family::Maintheo2 => maintheo2(bounds),
        Family::Lemmas23 => lemmas23(bounds)?,
    };
    Ok(Summary { family, rows })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_power_enumeration() {
        let b = Bounds { r_max: 3, max_factor_order: 30, ..Bounds::for_family(Family::Lem1) };
        assert_eq!(b.prime_powers(30), vec![(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2), (5, 2), (3, 3)]);
        let all = Bounds { primes: None, r_max: 2, ..b };
        assert_eq!(all.prime_powers(12), vec![(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (3, 2), (11, 1)]);
    }

    #[test]
    fn multiset_enumeration() {
        let got = multisets(&[1, 2, 3], 2, &|f: &[i32]| f.iter().sum::<i32>() <= 4);
        assert_eq!(got, vec![vec![1, 1], vec![1, 2], vec![1, 3], vec![2, 2]]);
    }

    #[test]
    fn gamma_sizes() {
        assert_eq!(gamma_size(&[(2, 3), (2, 4)]), Some(95));
        assert_eq!(gamma_size(&[(2, 1), (3, 1)]), Some(3));
    }

    #[test]
    fn small_lem1_run() {
        let b = Bounds { primes: Some(vec![2, 3]), r_max: 3, ..Bounds::for_family(Family::Lem1) };
        let s = verify_grid(Family::Lem1, &b).unwrap();
        assert_eq!(s.rows.len(), 6);
        assert!(s.all_pass(), "{:?}", s.rows);
        assert_eq!(s.exit_code(), 0);
    }

    #[test]
    fn csv_has_one_row_per_instance() {
        let b = Bounds { primes: Some(vec![2]), r_max: 4, ..Bounds::for_family(Family::Lem1) };
        let s = verify_grid(Family::Lem1, &b).unwrap();
        let mut buf = Vec::new();
        s.write_csv(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().count(), s.rows.len() + 1);
    }
}
