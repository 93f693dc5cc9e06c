use std::fmt;

use serde::Serialize;

use super::{Certificate, LocalCliqueData};
use crate::error::{Error, Result};
use crate::graph::build_gamma0;
use crate::graph::{Coloring, Graph};
use crate::ring::{RingElement, RingSpec};

/// First failure found while checking one factor's clique plan.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    FactorMismatch {
        expected: String,
        found: String,
    },
    NotAClique {
        a: u64,
        b: u64,
    },
    /// `S ∪ {extension}` is still a clique.
    NotMaximal {
        extension: u64,
    },
    /// Two elements outside `S` (possibly equal) multiply to zero.
    OutsideProductZero {
        a: u64,
        b: u64,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::FactorMismatch { expected, found } => write!(f, "plan is for {found}, factor is {expected}"),
            Violation::NotAClique { a, b } => write!(f, "{a} * {b} != 0 inside S"),
            Violation::NotMaximal { extension } => write!(f, "S is not maximal: {extension} extends it"),
            Violation::OutsideProductZero { a, b } => write!(f, "{a} * {b} = 0 with both outside S"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FactorCheck {
    pub factor: String,
    pub s: usize,
    pub n: usize,
    pub violation: Option<Violation>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HypothesisReport {
    pub factors: Vec<FactorCheck>,
}

impl HypothesisReport {
    pub fn passed(&self) -> bool {
        self.factors.iter().all(|f| f.violation.is_none())
    }

    pub fn first_violation(&self) -> Option<(usize, &Violation)> {
        self.factors.iter().enumerate().find_map(|(i, f)| f.violation.as_ref().map(|v| (i, v)))
    }
}

fn check_factor(plan: &LocalCliqueData, factor: &crate::ring::FactorSpec) -> Option<Violation> {
    if plan.factor != *factor {
        return Some(Violation::FactorMismatch { expected: factor.to_string(), found: plan.factor.to_string() });
    }
    let m = factor.order();
    if let Some(&bad) = plan.clique.iter().find(|&&a| a >= m) {
        return Some(Violation::NotAClique { a: bad, b: bad });
    }
    for (i, &a) in plan.clique.iter().enumerate() {
        for &b in &plan.clique[i + 1..] {
            if factor.mul(a, b) != 0 {
                return Some(Violation::NotAClique { a, b });
            }
        }
    }
    let outside = || (0..m).filter(|&x| !plan.contains(x));
    if let Some(x) = outside().find(|&x| plan.clique.iter().all(|&s| factor.mul(x, s) == 0)) {
        return Some(Violation::NotMaximal { extension: x });
    }
    // In a chain ring xy = 0 iff v(x) + v(y) reaches the top valuation, so the
    // outside element of largest valuation squared is the worst case.
    let top = factor.max_valuation();
    outside()
        .max_by_key(|&x| factor.valuation(x))
        .filter(|&x| 2 * factor.valuation(x) >= top)
        .map(|x| Violation::OutsideProductZero { a: x, b: x })
}

/// Checks, per factor, that `S_i` is a maximal clique of Γ₀(R_i) and that no two
/// elements outside `S_i` multiply to zero.
pub fn check_product_hypotheses(spec: &RingSpec, plans: &[LocalCliqueData]) -> Result<HypothesisReport> {
    if plans.len() != spec.factors().len() {
        return Err(Error::InvalidInput(format!("{} clique plans for {} factors", plans.len(), spec.factors().len())));
    }
    let factors = plans
        .iter()
        .zip(spec.factors())
        .map(|(plan, factor)| FactorCheck {
            factor: factor.to_string(),
            s: plan.s(),
            n: plan.n(),
            violation: check_factor(plan, factor),
        })
        .collect();
    Ok(HypothesisReport { factors })
}

/// Where an element falls in the product coloring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Part {
    /// Every component lies in its `S_i`.
    Clique,
    /// Outside the product clique with no unit component.
    AllZeroDivisors,
    /// Outside the product clique with some unit component.
    HasUnit,
}

/// Maps every element to a representative in `N ∪ A`, where `N = prod N_i` and
/// `A` holds the axis elements `(0, .., a, .., 0)` with `a ∈ S_i \ N_i`. The
/// representative's rank in `N ∪ A` is the element's color.
pub struct ProductColoringPlan<'a> {
    spec: &'a RingSpec,
    plans: &'a [LocalCliqueData],
    /// Smallest `s ∈ S_i` with `c * s != 0`, indexed by code `c`.
    partners: Vec<Vec<u64>>,
    /// Smallest nonzero member of each `S_i`.
    anchors: Vec<u64>,
    base: Vec<u64>,
}

impl<'a> ProductColoringPlan<'a> {
    pub fn new(spec: &'a RingSpec, plans: &'a [LocalCliqueData]) -> Result<Self> {
        let report = check_product_hypotheses(spec, plans)?;
        if let Some((i, v)) = report.first_violation() {
            return Err(Error::Precondition(format!("factor {} ({}): {v}", i, spec.factors()[i])));
        }
        let partners = plans
            .iter()
            .map(|plan| {
                let f = &plan.factor;
                (0..f.order()).map(|c| plan.clique.iter().copied().find(|&s| f.mul(c, s) != 0).unwrap_or(0)).collect()
            })
            .collect();
        let anchors = plans
            .iter()
            .map(|plan| plan.clique.iter().copied().find(|&s| s != 0).expect("maximal clique has a nonzero member"))
            .collect();

        let k = plans.len();
        let mut base = Vec::new();
        let mut comps = vec![0u64; k];
        let mut idx = vec![0usize; k];
        'odometer: loop {
            for (j, plan) in plans.iter().enumerate() {
                comps[j] = plan.square_zero[idx[j]];
            }
            base.push(spec.canonical_index(&RingElement { components: comps.clone() }));
            for j in (0..k).rev() {
                idx[j] += 1;
                if idx[j] < plans[j].n() {
                    continue 'odometer;
                }
                idx[j] = 0;
            }
            break;
        }
        for (i, plan) in plans.iter().enumerate() {
            for a in plan.non_square_zero() {
                base.push(spec.canonical_index(&axis(k, i, a)));
            }
        }
        base.sort_unstable();
        Ok(ProductColoringPlan { spec, plans, partners, anchors, base })
    }

    /// Canonical indices of `N ∪ A`, which is both the clique and the palette.
    pub fn base(&self) -> &[u64] {
        &self.base
    }

    pub fn part(&self, comps: &[u64]) -> Part {
        if comps.iter().zip(self.plans).all(|(&c, p)| p.contains(c)) {
            Part::Clique
        } else if comps.iter().zip(self.spec.factors()).all(|(&c, f)| !f.is_unit(c)) {
            Part::AllZeroDivisors
        } else {
            Part::HasUnit
        }
    }

    pub fn representative(&self, comps: &[u64]) -> RingElement {
        let k = comps.len();
        let axis_at = |pred: &dyn Fn(usize, u64) -> bool, value: &dyn Fn(usize, u64) -> u64| {
            let i = (0..k).find(|&i| pred(i, comps[i])).expect("some component qualifies");
            axis(k, i, value(i, comps[i]))
        };
        match self.part(comps) {
            Part::Clique => {
                if comps.iter().zip(self.plans).all(|(&c, p)| p.is_square_zero(c)) {
                    RingElement { components: comps.to_vec() }
                } else {
                    axis_at(&|i, c| !self.plans[i].is_square_zero(c), &|_, c| c)
                }
            }
            Part::AllZeroDivisors => axis_at(&|i, c| !self.plans[i].contains(c), &|i, c| self.partners[i][c as usize]),
            Part::HasUnit => axis_at(&|i, c| self.spec.factors()[i].is_unit(c), &|i, _| self.anchors[i]),
        }
    }

    pub fn color_of(&self, comps: &[u64]) -> usize {
        let rep = self.spec.canonical_index(&self.representative(comps));
        self.base.binary_search(&rep).expect("representative lies in N ∪ A")
    }

    /// Coloring and clique for Γ₀, whose vertex positions are canonical indices.
    pub fn certificate(&self) -> Certificate {
        let assignment: Vec<usize> = self.spec.elements().map(|e| self.color_of(e.components())).collect();
        let clique: Vec<usize> = self.base.iter().map(|&i| i as usize).collect();
        Certificate { size: clique.len(), clique, coloring: Coloring { color_count: self.base.len(), assignment } }
    }
}

fn axis(k: usize, i: usize, value: u64) -> RingElement {
    let mut components = vec![0; k];
    components[i] = value;
    RingElement { components }
}

/// Builds Γ₀ and a verified χ = ω certificate of size `prod n_i + sum (s_i - n_i)`.
pub fn product_coloring(spec: &RingSpec, plans: &[LocalCliqueData]) -> Result<Certificate> {
    let g = build_gamma0(spec)?;
    product_coloring_on(spec, plans, &g)
}

/// As [`product_coloring`], verifying against an already built Γ₀.
pub fn product_coloring_on(spec: &RingSpec, plans: &[LocalCliqueData], gamma0: &Graph) -> Result<Certificate> {
    if gamma0.vertex_count() as u64 != spec.order() {
        return Err(Error::InvalidInput("graph is not Γ₀ of this ring".into()));
    }
    let plan = ProductColoringPlan::new(spec, plans)?;
    let cert = plan.certificate();
    let expected: usize =
        plans.iter().map(LocalCliqueData::n).product::<usize>() + plans.iter().map(|p| p.s() - p.n()).sum::<usize>();
    if cert.size != expected {
        return Err(Error::InvalidCertificate(format!("palette has {} colors, expected {expected}", cert.size)));
    }
    cert.verify(gamma0)?;
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{formula_chi_gamma0, local_clique, maximal_clique_zpr};
    use crate::graph::build_gamma;
    use crate::ring::{decompose_zn, FactorSpec};

    fn plans(spec: &RingSpec) -> Vec<LocalCliqueData> {
        spec.factors().iter().map(local_clique).collect()
    }

    fn size(spec: &RingSpec) -> usize {
        product_coloring(spec, &plans(spec)).unwrap().size
    }

    #[test]
    fn known_values() {
        assert_eq!(size(&RingSpec::local_product(&[(2, 3), (2, 4)]).unwrap()), 9);
        assert_eq!(size(&RingSpec::local_product(&[(2, 2), (3, 2)]).unwrap()), 6);
        assert_eq!(size(&decompose_zn(27).unwrap()), 4);
        assert_eq!(size(&decompose_zn(30).unwrap()), 4);
    }

    #[test]
    fn fields_and_mixed() {
        let gf = |p, k| FactorSpec::galois_field(p, k).unwrap();
        let spec = RingSpec::new(vec![gf(2, 2), gf(3, 1), gf(2, 1)]).unwrap();
        assert_eq!(size(&spec), 4);
        let spec = RingSpec::new(vec![gf(2, 2), FactorSpec::local_z(3, 2).unwrap()]).unwrap();
        assert_eq!(size(&spec), 4);
    }

    #[test]
    fn matches_closed_form() {
        for pr in [vec![(2, 1), (2, 2)], vec![(3, 3), (2, 1)], vec![(5, 2), (2, 3)], vec![(2, 2), (2, 2), (3, 1)]] {
            let spec = RingSpec::local_product(&pr).unwrap();
            assert_eq!(size(&spec) as u64, formula_chi_gamma0(&pr, 0), "{spec}");
        }
    }

    #[test]
    fn restricts_to_gamma() {
        let spec = RingSpec::local_product(&[(2, 2), (3, 1)]).unwrap();
        let g0 = build_gamma0(&spec).unwrap();
        let cert = product_coloring_on(&spec, &plans(&spec), &g0).unwrap();
        let gamma = build_gamma(&spec);
        assert_eq!(cert.restrict(&g0, &gamma).unwrap().size, cert.size - 1);
    }

    #[test]
    fn rejects_non_maximal_plan() {
        let spec = decompose_zn(5).unwrap();
        let bad = vec![LocalCliqueData::from_clique(spec.factors()[0].clone(), vec![0])];
        let report = check_product_hypotheses(&spec, &bad).unwrap();
        assert_eq!(report.first_violation(), Some((0, &Violation::NotMaximal { extension: 1 })));
        assert!(matches!(product_coloring(&spec, &bad), Err(Error::Precondition(_))));
    }

    #[test]
    fn rejects_bad_plans() {
        let spec = decompose_zn(16).unwrap();
        let f = spec.factors()[0].clone();
        // {0, 8} is a clique that 4 extends
        let small = vec![LocalCliqueData::from_clique(f.clone(), vec![0, 8])];
        assert!(matches!(
            check_product_hypotheses(&spec, &small).unwrap().first_violation(),
            Some((0, Violation::NotMaximal { .. }))
        ));
        let not_clique = vec![LocalCliqueData::from_clique(f.clone(), vec![0, 2, 4])];
        assert_eq!(
            check_product_hypotheses(&spec, &not_clique).unwrap().first_violation(),
            Some((0, &Violation::NotAClique { a: 2, b: 4 }))
        );
        let wrong = vec![maximal_clique_zpr(2, 3).unwrap()];
        assert!(matches!(
            check_product_hypotheses(&spec, &wrong).unwrap().first_violation(),
            Some((0, Violation::FactorMismatch { .. }))
        ));
    }

    // Brute-force version of the outside condition on small factors.
    #[test]
    fn outside_condition_matches_pairwise_check() {
        for (p, r) in [(2u64, 2u32), (2, 3), (2, 4), (3, 2), (3, 3), (5, 2)] {
            let f = FactorSpec::local_z(p, r).unwrap();
            let m = f.order();
            for mask in 0u64..(1 << m.min(9)) {
                let members: Vec<u64> = (0..m.min(9)).filter(|b| mask >> b & 1 == 1).collect();
                let plan = LocalCliqueData::from_clique(f.clone(), members);
                let clique_ok = plan
                    .clique
                    .iter()
                    .enumerate()
                    .all(|(i, &a)| plan.clique[i + 1..].iter().all(|&b| f.mul(a, b) == 0));
                let maximal =
                    (0..m).filter(|&x| !plan.contains(x)).all(|x| plan.clique.iter().any(|&s| f.mul(x, s) != 0));
                if !(clique_ok && maximal) {
                    continue;
                }
                let outside: Vec<u64> = (0..m).filter(|&x| !plan.contains(x)).collect();
                let pairwise = outside.iter().all(|&a| outside.iter().all(|&b| f.mul(a, b) != 0));
                assert_eq!(check_factor(&plan, &f).is_none(), pairwise, "Z{m} {:?}", plan.clique);
            }
        }
    }
}
