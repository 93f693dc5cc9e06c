use std::collections::BTreeMap;

use super::{RingElement, RingSpec};

/// Unit multiples of one element. In a product of local factors these are the
/// sets `A(t_1, ..., t_k)` of elements whose per-factor valuations are `t_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssociateClass {
    pub valuations: Vec<u32>,
    pub representative: RingElement,
    pub members: Vec<RingElement>,
}

impl AssociateClass {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

impl RingSpec {
    pub fn valuations(&self, e: &RingElement) -> Vec<u32> {
        self.factors.iter().zip(e.components()).map(|(f, &c)| f.valuation(c)).collect()
    }

    /// `prod |A_{p_i^{t_i}}|`.
    pub fn class_size(&self, valuations: &[u32]) -> u64 {
        self.factors.iter().zip(valuations).map(|(f, &t)| f.class_size(t)).product()
    }

    pub fn class_generator(&self, valuations: &[u32]) -> RingElement {
        RingElement { components: self.factors.iter().zip(valuations).map(|(f, &t)| f.generator(t)).collect() }
    }
}

/// Partition of the nonzero elements into associate classes, ordered by
/// valuation tuple; members are in canonical-index order.
pub fn associate_classes(spec: &RingSpec) -> Vec<AssociateClass> {
    let mut groups: BTreeMap<Vec<u32>, Vec<RingElement>> = BTreeMap::new();
    for e in spec.elements().filter(|e| !e.is_zero()) {
        groups.entry(spec.valuations(&e)).or_default().push(e);
    }
    groups
        .into_iter()
        .map(|(valuations, members)| AssociateClass {
            representative: spec.class_generator(&valuations),
            valuations,
            members,
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{decompose_zn, ElementFilter, FactorSpec};
    use std::collections::BTreeSet;

    #[test]
    fn z8_classes() {
        let z8 = decompose_zn(8).unwrap();
        let classes = associate_classes(&z8);
        let listed: Vec<(u32, Vec<u64>)> =
            classes.iter().map(|c| (c.valuations[0], c.members.iter().map(|m| m.components()[0]).collect())).collect();
        assert_eq!(listed, vec![(0, vec![1, 3, 5, 7]), (1, vec![2, 6]), (2, vec![4])]);
    }

    #[test]
    fn z9_class_of_three() {
        let z9 = decompose_zn(9).unwrap();
        let classes = associate_classes(&z9);
        let a3 = classes.iter().find(|c| c.valuations == vec![1]).unwrap();
        assert_eq!(a3.len(), 2);
        assert_eq!(z9.factors()[0].class_size(1), 2);
    }

    #[test]
    fn product_class_matches_unit_orbit() {
        let r = RingSpec::local_product(&[(2, 3), (2, 4)]).unwrap();
        let g = r.element(vec![2, 2]).unwrap();
        // oracle: the orbit of (2,2) under multiplication by units
        let orbit: BTreeSet<RingElement> =
            r.enumerate(ElementFilter::Units).iter().map(|u| r.mul(u, &g).unwrap()).collect();
        assert_eq!(orbit.len(), 8);
        let classes = associate_classes(&r);
        let a11 = classes.iter().find(|c| c.valuations == vec![1, 1]).unwrap();
        assert_eq!(a11.members.iter().cloned().collect::<BTreeSet<_>>(), orbit);
        assert_eq!(r.class_size(&[1, 1]), 8);
        assert_eq!(a11.representative, g);
    }

    #[test]
    fn classes_partition_nonzero_elements() {
        let r =
            RingSpec::new(vec![FactorSpec::local_z(3, 2).unwrap(), FactorSpec::galois_field(2, 2).unwrap()]).unwrap();
        let classes = associate_classes(&r);
        let total: usize = classes.iter().map(AssociateClass::len).sum();
        assert_eq!(total as u64, r.order() - 1);
        for c in &classes {
            assert_eq!(c.len() as u64, r.class_size(&c.valuations));
        }
    }

    #[test]
    fn local_class_sizes_follow_formula() {
        for p in [2u64, 3, 5, 7] {
            for r in 1..=5u32 {
                if p.pow(r) > 4096 {
                    continue;
                }
                let spec = RingSpec::local_product(&[(p, r)]).unwrap();
                for c in associate_classes(&spec) {
                    let t = c.valuations[0];
                    assert!(t < r);
                    assert_eq!(c.len() as u64, p.pow(r - t) - p.pow(r - t - 1), "Z_{p}^{r}, t={t}");
                }
            }
        }
    }
}
