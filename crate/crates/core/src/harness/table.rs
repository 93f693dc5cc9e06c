use std::io::Write;

use crate::constructions::{
    complement_clique_zpr, complement_coloring, local_clique, local_complement_formula, local_gamma0_formula,
    product_coloring,
};
use crate::error::Result;
use crate::graph::build_gamma0;
use crate::ring::RingSpec;
use crate::solvers::{chromatic_number, Budget};

use super::analyze::DEFAULT_BUDGET_MS;

/// Prints the two worked examples for `Z8 x Z16` and the local formulas for
/// `p <= 7`, `r <= 5`, `p^r <= 2401`, each next to the value its construction
/// certifies.
pub fn write_table(mut out: impl Write) -> Result<()> {
    let spec = RingSpec::local_product(&[(2, 3), (2, 4)])?;
    let plans: Vec<_> = spec.factors().iter().map(local_clique).collect();
    let cert = product_coloring(&spec, &plans)?;
    let solved = chromatic_number(&build_gamma0(&spec)?, Budget::from_millis(DEFAULT_BUDGET_MS))?;
    writeln!(out, "Z8 x Z16, zero-divisor graph on all elements")?;
    writeln!(out, "  |V| = {}", spec.order())?;
    writeln!(
        out,
        "  chi = omega = {} (certificate), solver chi = {}, omega = {}",
        cert.size, solved.chi, solved.clique.omega
    )?;

    let (g, cert) = complement_coloring(&spec)?;
    let solved = chromatic_number(&g, Budget::from_millis(DEFAULT_BUDGET_MS))?;
    writeln!(out, "Z8 x Z16, complement of the graph on nonzero zero-divisors")?;
    writeln!(out, "  |V| = {}, |C| = {}, |V \\ C| = {}", g.vertex_count(), cert.size, g.vertex_count() - cert.size)?;
    writeln!(
        out,
        "  chi = omega = {} (certificate), solver chi = {}, omega = {}",
        cert.size, solved.chi, solved.clique.omega
    )?;
    writeln!(out)?;

    writeln!(
        out,
        "{:>3} {:>3} {:>6} {:>10} {:>10} {:>10} {:>10}",
        "p", "r", "p^r", "chi0 form", "chi0 cert", "C form", "cobar cert"
    )?;
    for p in [2u64, 3, 5, 7] {
        for r in 1..=5u32 {
            if p.pow(r) > 2401 {
                continue;
            }
            let spec = RingSpec::local_product(&[(p, r)])?;
            let plans: Vec<_> = spec.factors().iter().map(local_clique).collect();
            let chi0 = product_coloring(&spec, &plans)?.size;
            let (valuation, full) = if r >= 3 {
                let c = complement_clique_zpr(p, r)?;
                debug_assert_eq!(c.members.len() as u64, local_complement_formula(p, r));
                (c.members.len().to_string(), complement_coloring(&spec)?.1.size.to_string())
            } else {
                ("-".to_string(), "-".to_string())
            };
            writeln!(
                out,
                "{p:>3} {r:>3} {:>6} {:>10} {chi0:>10} {valuation:>10} {full:>10}",
                p.pow(r),
                local_gamma0_formula(p, r)
            )?;
        }
    }
    Ok(())
}
