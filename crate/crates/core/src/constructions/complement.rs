use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use super::Certificate;
use crate::error::{Error, Result};
use crate::graph::{build_gamma, Coloring, Graph, VertexSet};
use crate::ring::RingSpec;

/// Valuation bookkeeping behind the clique `C` of the complement of Γ(R).
///
/// `T` is the set of valuation tuples of nonzero zero-divisors and
/// `t ↦ r - t` is an involution on it. `C` takes every class `A(t)` that is
/// strictly larger than its dual, one class from each equal-sized dual pair,
/// and, when every `r_i` is even, one element of the self-dual class `A(r/2)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComplementPlan {
    pub top: Vec<u32>,
    /// Tuples whose class is strictly larger than its dual's.
    pub larger: Vec<Vec<u32>>,
    /// Tuples `t != r - t` whose class has the same size as its dual's.
    pub balanced: Vec<Vec<u32>>,
    /// `larger` plus the lexicographically smaller tuple of each balanced pair.
    pub selected: Vec<Vec<u32>>,
    /// `r/2`, present when every `r_i` is even.
    pub center: Option<Vec<u32>>,
    sizes: BTreeMap<Vec<u32>, u64>,
}

impl ComplementPlan {
    pub fn new(spec: &RingSpec) -> Self {
        let top: Vec<u32> = spec.factors().iter().map(|f| f.max_valuation()).collect();
        let mut sizes = BTreeMap::new();
        let mut t = vec![0u32; top.len()];
        loop {
            if t.iter().any(|&x| x > 0) && t != top {
                sizes.insert(t.clone(), spec.class_size(&t));
            }
            match (0..t.len()).rev().find(|&j| t[j] < top[j]) {
                Some(j) => {
                    t[j] += 1;
                    t[j + 1..].iter_mut().for_each(|x| *x = 0);
                }
                None => break,
            }
        }
        let dual = |t: &[u32]| -> Vec<u32> { top.iter().zip(t).map(|(r, x)| r - x).collect() };
        let mut larger = Vec::new();
        let mut balanced = Vec::new();
        let mut selected = Vec::new();
        let mut center = None;
        for (t, &size) in &sizes {
            let d = dual(t);
            let dual_size = sizes[&d];
            if d == *t {
                center = Some(t.clone());
            } else if size > dual_size {
                larger.push(t.clone());
                selected.push(t.clone());
            } else if size == dual_size {
                balanced.push(t.clone());
                if *t < d {
                    selected.push(t.clone());
                }
            }
        }
        selected.sort();
        ComplementPlan { top, larger, balanced, selected, center, sizes }
    }

    pub fn dual(&self, t: &[u32]) -> Vec<u32> {
        self.top.iter().zip(t).map(|(r, x)| r - x).collect()
    }

    /// All tuples of `T`, in lexicographic order.
    pub fn index_set(&self) -> impl Iterator<Item = &Vec<u32>> {
        self.sizes.keys()
    }

    pub fn class_size(&self, t: &[u32]) -> u64 {
        self.sizes.get(t).copied().unwrap_or(0)
    }

    /// `|C|`.
    pub fn clique_size(&self) -> u64 {
        self.selected.iter().map(|t| self.sizes[t]).sum::<u64>() + u64::from(self.center.is_some())
    }

    /// `T` is the disjoint union of `selected`, its dual image and the center.
    pub fn check_invariants(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::InvalidCertificate(msg));
        let mut seen = BTreeSet::new();
        for t in &self.selected {
            let d = self.dual(t);
            if self.dual(&d) != *t || !self.sizes.contains_key(&d) {
                return fail(format!("dual of {t:?} leaves the index set"));
            }
            if self.sizes[t] < self.sizes[&d] {
                return fail(format!("{t:?} selected over a larger dual"));
            }
            if !seen.insert(t.clone()) || !seen.insert(d) {
                return fail(format!("{t:?} selected together with its dual"));
            }
        }
        if let Some(c) = &self.center {
            seen.insert(c.clone());
        }
        if seen.len() != self.sizes.len() {
            return fail(format!("selection covers {} of {} tuples", seen.len(), self.sizes.len()));
        }
        Ok(())
    }
}

/// Builds the complement of Γ(R) with a verified χ = ω certificate of size `|C|`.
pub fn complement_coloring(spec: &RingSpec) -> Result<(Graph, Certificate)> {
    let g = build_gamma(spec).complement();
    let cert = complement_coloring_on(spec, &g)?;
    Ok((g, cert))
}

/// As [`complement_coloring`], for an already built complement of Γ(R).
pub fn complement_coloring_on(spec: &RingSpec, complement: &Graph) -> Result<Certificate> {
    let plan = ComplementPlan::new(spec);
    plan.check_invariants()?;
    // vertices are in canonical order, so each class comes out sorted
    let mut classes: BTreeMap<Vec<u32>, Vec<usize>> = BTreeMap::new();
    for (v, &label) in complement.labels().iter().enumerate() {
        if label >= spec.order() {
            return Err(Error::InvalidInput("graph is not the complement of Γ(R)".into()));
        }
        let t = spec.valuations(&spec.element_of_index(label));
        if plan.class_size(&t) == 0 {
            return Err(Error::InvalidInput("graph is not the complement of Γ(R)".into()));
        }
        classes.entry(t).or_default().push(v);
    }
    if classes.iter().any(|(t, members)| members.len() as u64 != plan.class_size(t))
        || classes.len() != plan.index_set().count()
    {
        return Err(Error::InvalidInput("graph is not the complement of Γ(R)".into()));
    }

    let n = complement.vertex_count();
    let mut assignment = vec![usize::MAX; n];
    let mut clique = Vec::new();
    let mut next = 0;
    for t in &plan.selected {
        let members = &classes[t];
        for (j, &v) in members.iter().enumerate() {
            assignment[v] = next + j;
        }
        for (j, &v) in classes[&plan.dual(t)].iter().enumerate() {
            assignment[v] = next + j;
        }
        clique.extend_from_slice(members);
        next += members.len();
    }
    if let Some(c) = &plan.center {
        let members = &classes[c];
        clique.push(members[0]);
        members.iter().for_each(|&v| assignment[v] = next);
        next += 1;
    }
    if assignment.contains(&usize::MAX) {
        return Err(Error::InvalidCertificate("some vertex received no color".into()));
    }
    clique.sort_unstable();
    let cert = Certificate { size: clique.len(), clique, coloring: Coloring { assignment, color_count: next } };
    cert.verify(complement)?;
    Ok(cert)
}

/// The union of the classes `A_{p^t}` with `1 <= t < r/2` in the complement of
/// Γ(Z_{p^r}), as residues.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LocalComplementClique {
    pub p: u64,
    pub r: u32,
    pub members: Vec<u64>,
    /// `|Γ(Z_{p^r}) \ C|`.
    pub rest: usize,
}

impl LocalComplementClique {
    /// Positions of the members in a graph labeled by residues.
    pub fn vertex_set(&self, g: &Graph) -> Result<VertexSet> {
        let positions = self
            .members
            .iter()
            .map(|&m| g.position_of(m).ok_or_else(|| Error::InvalidInput(format!("{m} is not a vertex"))))
            .collect::<Result<Vec<_>>>()?;
        Ok(VertexSet::from_indices(g.vertex_count(), positions))
    }
}

pub fn complement_clique_zpr(p: u64, r: u32) -> Result<LocalComplementClique> {
    if r < 3 {
        return Err(Error::OutOfScope(format!("the valuation clique needs r >= 3, got Z_{p}^{r}")));
    }
    let spec = RingSpec::local_product(&[(p, r)])?;
    let factor = &spec.factors()[0];
    let members: Vec<u64> = (1..factor.order())
        .filter(|&x| {
            let t = factor.valuation(x);
            t >= 1 && 2 * t < r
        })
        .collect();
    let gamma = factor.order() as usize / p as usize - 1;
    let rest = gamma - members.len();
    if rest > members.len() {
        return Err(Error::InvalidCertificate(format!("|Γ \\ C| = {rest} exceeds |C| = {}", members.len())));
    }
    Ok(LocalComplementClique { p, r, members, rest })
}
