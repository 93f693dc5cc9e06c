use super::{Graph, Provenance};
use crate::error::{Error, Result};
use crate::ring::RingSpec;

fn build_on(spec: &RingSpec, indices: Vec<u64>, provenance: Provenance) -> Graph {
    let comps: Vec<Vec<u64>> = indices.iter().map(|&i| spec.element_of_index(i).components().to_vec()).collect();
    let mut g = Graph::edgeless(indices, provenance);
    for u in 0..comps.len() {
        for v in u + 1..comps.len() {
            if spec.annihilates(&comps[u], &comps[v]) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Beck's graph: every element is a vertex, `x ~ y` iff `x != y` and `xy = 0`.
pub fn build_gamma0(spec: &RingSpec) -> Result<Graph> {
    if spec.order() > spec.max_order() {
        return Err(Error::ResourceLimit { order: spec.order(), cap: spec.max_order() });
    }
    Ok(build_on(spec, (0..spec.order()).collect(), Provenance::Gamma0))
}

/// Graph on the nonzero zero-divisors. Empty for fields.
pub fn build_gamma(spec: &RingSpec) -> Graph {
    let mut indices = Vec::new();
    spec.for_each_components(|i, comps| {
        if spec.is_zero_divisor_star(comps) {
            indices.push(i);
        }
    });
    build_on(spec, indices, Provenance::Gamma)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{SetMode, VertexSet};
    use crate::ring::{decompose_zn, ElementClass, ElementFilter, FactorSpec};

    fn labeled_edges(g: &Graph) -> Vec<(u64, u64)> {
        g.edges().map(|(u, v)| (g.labels()[u], g.labels()[v])).collect()
    }

    #[test]
    fn gamma0_of_z4() {
        let g = build_gamma0(&decompose_zn(4).unwrap()).unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(labeled_edges(&g), vec![(0, 1), (0, 2), (0, 3)]);
        assert_eq!(g.degree(2), 1);
    }

    #[test]
    fn gamma0_of_field_is_star() {
        for spec in [decompose_zn(7).unwrap(), RingSpec::new(vec![FactorSpec::galois_field(2, 3).unwrap()]).unwrap()] {
            let g = build_gamma0(&spec).unwrap();
            let q = spec.order() as usize;
            assert_eq!(g.edge_count(), q - 1);
            assert_eq!(g.degree(0), q - 1);
        }
    }

    #[test]
    fn gamma_of_z8() {
        let g = build_gamma(&decompose_zn(8).unwrap());
        assert_eq!(g.labels(), &[2, 4, 6]);
        assert_eq!(labeled_edges(&g), vec![(2, 4), (4, 6)]);
        let c = g.complement();
        assert_eq!(labeled_edges(&c), vec![(2, 6)]);
    }

    #[test]
    fn gamma_of_prime_field_is_empty() {
        assert!(build_gamma(&decompose_zn(13).unwrap()).is_empty());
    }

    #[test]
    fn example_ring_sizes() {
        let r = RingSpec::local_product(&[(2, 3), (2, 4)]).unwrap();
        assert_eq!(build_gamma0(&r).unwrap().vertex_count(), 128);
        assert_eq!(build_gamma(&r).vertex_count(), 95);
    }

    #[test]
    fn deleting_zero_and_units_recovers_gamma() {
        let z4 = decompose_zn(4).unwrap();
        let g0 = build_gamma0(&z4).unwrap();
        let minus_zero = g0.delete_vertices(&VertexSet::from_indices(4, [0]));
        assert_eq!(minus_zero.labels(), &[1, 2, 3]);
        assert_eq!(minus_zero.edge_count(), 0);

        let z8 = decompose_zn(8).unwrap();
        let g0 = build_gamma0(&z8).unwrap();
        let no_zero = g0.delete_vertices(&VertexSet::from_indices(8, [0]));
        let units: Vec<usize> = (0..no_zero.vertex_count())
            .filter(|&v| z8.classify(&z8.element_of_index(no_zero.labels()[v])).unwrap() == ElementClass::Unit)
            .collect();
        let gamma_like = no_zero.delete_vertices(&VertexSet::from_indices(no_zero.vertex_count(), units));
        let gamma = build_gamma(&z8);
        assert_eq!(gamma_like.labels(), gamma.labels());
        assert_eq!(labeled_edges(&gamma_like), labeled_edges(&gamma));
    }

    #[test]
    fn clique_in_gamma0_z8() {
        let g = build_gamma0(&decompose_zn(8).unwrap()).unwrap();
        assert!(g.check(&VertexSet::from_indices(8, [0, 2, 4]), SetMode::Clique));
    }

    #[test]
    fn resource_limit_reported() {
        let big = vec![FactorSpec::local_z(2, 10).unwrap(), FactorSpec::local_z(3, 3).unwrap()];
        assert!(matches!(RingSpec::with_max_order(big, 4096), Err(Error::ResourceLimit { .. })));
    }

    #[test]
    fn structural_invariants_on_assorted_rings() {
        let rings = vec![
            decompose_zn(12).unwrap(),
            decompose_zn(36).unwrap(),
            decompose_zn(64).unwrap(),
            RingSpec::new(vec![FactorSpec::galois_field(2, 2).unwrap(), FactorSpec::local_z(3, 2).unwrap()]).unwrap(),
            RingSpec::local_product(&[(2, 2), (2, 1), (3, 1)]).unwrap(),
        ];
        for spec in rings {
            let g0 = build_gamma0(&spec).unwrap();
            assert!(g0.is_well_formed());
            let n = g0.vertex_count();
            assert_eq!(g0.degree(0), n - 1);
            let zero_divisors: Vec<u64> =
                spec.enumerate(ElementFilter::ZeroDivisorsStar).iter().map(|e| spec.canonical_index(e)).collect();
            for v in 1..n {
                let e = spec.element_of_index(g0.labels()[v]);
                if spec.classify(&e).unwrap() == ElementClass::Unit {
                    assert_eq!(g0.degree(v), 1, "unit {} in {spec}", spec.format_element(&e));
                }
            }
            // every edge of G0 - {0} joins two nonzero zero-divisors
            for (u, v) in g0.edges().filter(|&(u, _)| u != 0) {
                assert!(zero_divisors.contains(&g0.labels()[u]));
                assert!(zero_divisors.contains(&g0.labels()[v]));
            }
            let gamma = build_gamma(&spec);
            assert!(gamma.is_well_formed());
            assert_eq!(gamma.labels(), zero_divisors.as_slice());
            assert_eq!(gamma.complement().complement(), gamma);
        }
    }
}
