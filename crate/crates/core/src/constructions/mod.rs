//! Constructive χ = ω arguments as certificate generators, plus the closed
//! forms they realize.
//!
//! A [`Certificate`] pairs a clique with a proper coloring using exactly as many
//! colors as the clique has vertices; together they pin χ = ω to that size
//! without any search.

mod complement;
mod formula;
mod local;
mod product;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Coloring, Graph};

pub use complement::{
    complement_clique_zpr, complement_coloring, complement_coloring_on, ComplementPlan, LocalComplementClique,
};
pub use formula::{
    fields_formula, formula_chi_gamma0, local_complement_formula, local_gamma0_formula, product_composition,
    Composition,
};
pub use local::{local_clique, maximal_clique_zpr, LocalCliqueData};
pub use product::{
    check_product_hypotheses, product_coloring, product_coloring_on, HypothesisReport, Part, ProductColoringPlan,
    Violation,
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub size: usize,
    /// Vertex positions in the graph the certificate was issued for.
    pub clique: Vec<usize>,
    pub coloring: Coloring,
}

impl Certificate {
    /// Re-checks the clique, the coloring and their common size against `g`.
    pub fn verify(&self, g: &Graph) -> Result<()> {
        if self.clique.len() != self.size || self.coloring.color_count != self.size {
            return Err(Error::InvalidCertificate(format!(
                "clique has {} vertices and coloring {} colors, expected {}",
                self.clique.len(),
                self.coloring.color_count,
                self.size
            )));
        }
        if self.clique.iter().any(|&v| v >= g.vertex_count()) || !g.is_clique(&self.clique) {
            return Err(Error::InvalidCertificate("clique witness is not a clique".into()));
        }
        if !g.verify_coloring(&self.coloring) {
            return Err(Error::InvalidCertificate("coloring is not proper".into()));
        }
        Ok(())
    }

    /// Restricts a certificate for `parent` to the induced subgraph `child`,
    /// matching vertices by label. Fails unless the restriction is still tight.
    pub fn restrict(&self, parent: &Graph, child: &Graph) -> Result<Certificate> {
        let positions: Vec<usize> = child
            .labels()
            .iter()
            .map(|&l| {
                parent.position_of(l).ok_or_else(|| Error::InvalidInput(format!("label {l} missing from parent graph")))
            })
            .collect::<Result<_>>()?;
        let raw: Vec<usize> = positions.iter().map(|&p| self.coloring.assignment[p]).collect();
        let coloring = Coloring::from_assignment(&raw);
        let clique: Vec<usize> =
            positions.iter().enumerate().filter(|(_, p)| self.clique.contains(p)).map(|(i, _)| i).collect();
        let cert = Certificate { size: clique.len(), clique, coloring };
        cert.verify(child)?;
        Ok(cert)
    }
}
