//! Finite commutative rings presented as direct products of `Z_{p^r}` and
//! `GF(p^k)` factors.
//!
//! Elements are stored as one integer code per factor. For `Z_{p^r}` the code
//! is the residue itself; for `GF(p^k)` it is the coefficient vector read as a
//! base-`p` number (constant term least significant). The canonical index of an
//! element is the mixed-radix number formed by its codes with the last factor
//! varying fastest, which gives every element a stable vertex id.

pub mod arith;
mod associates;
pub mod poly;

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};

pub use associates::{associate_classes, AssociateClass};

/// Default cap on ring order; overridable per spec.
pub const DEFAULT_MAX_ORDER: u64 = 65536;

/// Fields up to this size get a precomputed multiplication table.
const GF_TABLE_LIMIT: u64 = 1024;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum FactorKind {
    LocalZ,
    GaloisField,
}

/// One factor of a product ring: `Z_{p^r}` or `GF(p^k)`.
#[derive(Clone)]
pub struct FactorSpec {
    kind: FactorKind,
    p: u64,
    exponent: u32,
    order: u64,
    modulus: Vec<u64>,
    table: Option<Arc<[u32]>>,
}

impl fmt::Debug for FactorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FactorSpec")
            .field("kind", &self.kind)
            .field("p", &self.p)
            .field("exponent", &self.exponent)
            .finish()
    }
}

impl PartialEq for FactorSpec {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind && self.p == other.p && self.exponent == other.exponent
    }
}

impl Eq for FactorSpec {}

fn factor_order(p: u64, exponent: u32) -> Result<u64> {
    if !arith::is_prime(p) {
        return Err(Error::InvalidInput(format!("{p} is not prime")));
    }
    if exponent == 0 {
        return Err(Error::InvalidInput("exponent must be at least 1".into()));
    }
    arith::checked_pow(p, exponent).ok_or_else(|| Error::InvalidInput(format!("{p}^{exponent} overflows")))
}

impl FactorSpec {
    /// `Z_{p^r}`.
    pub fn local_z(p: u64, r: u32) -> Result<Self> {
        let order = factor_order(p, r)?;
        Ok(FactorSpec { kind: FactorKind::LocalZ, p, exponent: r, order, modulus: Vec::new(), table: None })
    }

    /// `GF(p^k)`, realized modulo the smallest monic irreducible of degree `k`.
    pub fn galois_field(p: u64, k: u32) -> Result<Self> {
        let order = factor_order(p, k)?;
        let modulus = poly::irreducible_poly(p, k);
        let mut factor = FactorSpec { kind: FactorKind::GaloisField, p, exponent: k, order, modulus, table: None };
        if order <= GF_TABLE_LIMIT {
            let q = order as usize;
            let mut table = vec![0u32; q * q];
            for a in 0..order {
                for b in a..order {
                    let c = factor.poly_mul(a, b) as u32;
                    table[a as usize * q + b as usize] = c;
                    table[b as usize * q + a as usize] = c;
                }
            }
            factor.table = Some(table.into());
        }
        Ok(factor)
    }

    pub fn kind(&self) -> FactorKind {
        self.kind
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    /// `r` for `Z_{p^r}`, `k` for `GF(p^k)`.
    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    /// Irreducible modulus for a field factor, low degree first.
    pub fn modulus_poly(&self) -> Option<&[u64]> {
        match self.kind {
            FactorKind::GaloisField => Some(&self.modulus),
            FactorKind::LocalZ => None,
        }
    }

    pub fn is_field(&self) -> bool {
        self.kind == FactorKind::GaloisField || self.exponent == 1
    }

    /// Coefficient vector (length `k`) of a field element code.
    pub fn coefficients(&self, code: u64) -> Vec<u64> {
        let mut rest = code;
        (0..self.exponent)
            .map(|_| {
                let c = rest % self.p;
                rest /= self.p;
                c
            })
            .collect()
    }

    pub fn from_coefficients(&self, coeffs: &[u64]) -> u64 {
        coeffs.iter().rev().fold(0, |acc, &c| acc * self.p + c)
    }

    fn poly_mul(&self, a: u64, b: u64) -> u64 {
        let prod = poly::mul_mod(&self.coefficients(a), &self.coefficients(b), &self.modulus, self.p);
        self.from_coefficients(&prod)
    }

    /// Product of two in-range codes.
    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        match self.kind {
            FactorKind::LocalZ => ((a as u128 * b as u128) % self.order as u128) as u64,
            FactorKind::GaloisField => match &self.table {
                Some(t) => t[(a * self.order + b) as usize] as u64,
                None => self.poly_mul(a, b),
            },
        }
    }

    #[inline]
    pub fn is_unit(&self, a: u64) -> bool {
        match self.kind {
            FactorKind::LocalZ => !a.is_multiple_of(self.p),
            FactorKind::GaloisField => a != 0,
        }
    }

    /// Non-units are exactly the nilpotents in a local factor.
    #[inline]
    pub fn is_nilpotent(&self, a: u64) -> bool {
        !self.is_unit(a)
    }

    /// Largest valuation: `r` for `Z_{p^r}` (attained only by 0), `1` for a field.
    pub fn max_valuation(&self) -> u32 {
        match self.kind {
            FactorKind::LocalZ => self.exponent,
            FactorKind::GaloisField => 1,
        }
    }

    /// p-adic valuation of a residue (0 maps to `r`); for fields 0 on units and 1 on zero.
    pub fn valuation(&self, a: u64) -> u32 {
        match self.kind {
            FactorKind::GaloisField => u32::from(a == 0),
            FactorKind::LocalZ => {
                if a == 0 {
                    return self.exponent;
                }
                let mut t = 0;
                let mut x = a;
                while x.is_multiple_of(self.p) {
                    x /= self.p;
                    t += 1;
                }
                t
            }
        }
    }

    /// Size of the associate class of valuation `t`.
    pub fn class_size(&self, t: u32) -> u64 {
        let top = self.max_valuation();
        assert!(t <= top, "valuation {t} out of range");
        match self.kind {
            FactorKind::GaloisField => {
                if t == 0 {
                    self.order - 1
                } else {
                    1
                }
            }
            FactorKind::LocalZ => {
                if t == top {
                    1
                } else {
                    let hi = self.p.pow(top - t);
                    hi - hi / self.p
                }
            }
        }
    }

    /// Canonical generator of the valuation-`t` class: `p^t` (or 1 / 0 for fields).
    pub fn generator(&self, t: u32) -> u64 {
        match self.kind {
            FactorKind::GaloisField => u64::from(t == 0),
            FactorKind::LocalZ => {
                if t >= self.exponent {
                    0
                } else {
                    self.p.pow(t)
                }
            }
        }
    }

    pub fn format_component(&self, a: u64) -> String {
        match self.kind {
            FactorKind::LocalZ => a.to_string(),
            FactorKind::GaloisField => {
                if self.exponent == 1 {
                    a.to_string()
                } else {
                    poly::format_poly(&self.coefficients(a))
                }
            }
        }
    }
}

impl fmt::Display for FactorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            FactorKind::LocalZ => write!(f, "Z{}", self.order),
            FactorKind::GaloisField => write!(f, "GF({})", self.order),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RingElement {
    pub(crate) components: Vec<u64>,
}

impl RingElement {
    pub fn components(&self) -> &[u64] {
        &self.components
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(|&c| c == 0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ElementClass {
    Zero,
    Unit,
    ZeroDivisorNonnilpotent,
    NilpotentNonzero,
}

pub enum ElementFilter<'a> {
    All,
    /// Nonzero zero-divisors.
    ZeroDivisorsStar,
    Units,
    Custom(&'a dyn Fn(&RingElement) -> bool),
}

/// A finite commutative ring `R_1 x ... x R_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingSpec {
    factors: Vec<FactorSpec>,
    order: u64,
    max_order: u64,
}

impl RingSpec {
    pub fn new(factors: Vec<FactorSpec>) -> Result<Self> {
        Self::with_max_order(factors, DEFAULT_MAX_ORDER)
    }

    pub fn with_max_order(factors: Vec<FactorSpec>, max_order: u64) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::InvalidInput("a ring needs at least one factor".into()));
        }
        let mut order: u64 = 1;
        for f in &factors {
            order = order.checked_mul(f.order()).ok_or(Error::ResourceLimit { order: u64::MAX, cap: max_order })?;
        }
        if order > max_order {
            return Err(Error::ResourceLimit { order, cap: max_order });
        }
        Ok(RingSpec { factors, order, max_order })
    }

    /// `Z_{p_1^{r_1}} x ... x Z_{p_k^{r_k}}` from a list of prime powers.
    pub fn local_product(prime_powers: &[(u64, u32)]) -> Result<Self> {
        let factors = prime_powers.iter().map(|&(p, r)| FactorSpec::local_z(p, r)).collect::<Result<Vec<_>>>()?;
        Self::new(factors)
    }

    pub fn factors(&self) -> &[FactorSpec] {
        &self.factors
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn max_order(&self) -> u64 {
        self.max_order
    }

    /// Copy of this spec with a different order cap.
    pub fn with_cap(&self, max_order: u64) -> Result<Self> {
        Self::with_max_order(self.factors.clone(), max_order)
    }

    /// Reduced rings have no nonzero nilpotents: every factor is a field.
    pub fn is_reduced(&self) -> bool {
        self.factors.iter().all(FactorSpec::is_field)
    }

    pub fn zero(&self) -> RingElement {
        RingElement { components: vec![0; self.factors.len()] }
    }

    pub fn one(&self) -> RingElement {
        RingElement { components: vec![1; self.factors.len()] }
    }

    pub fn element(&self, components: Vec<u64>) -> Result<RingElement> {
        let e = RingElement { components };
        self.validate(&e)?;
        Ok(e)
    }

    fn validate(&self, e: &RingElement) -> Result<()> {
        if e.components.len() != self.factors.len() {
            return Err(Error::InvalidInput(format!(
                "element has {} components, ring has {} factors",
                e.components.len(),
                self.factors.len()
            )));
        }
        for (c, f) in e.components.iter().zip(&self.factors) {
            if *c >= f.order() {
                return Err(Error::InvalidInput(format!("component {c} out of range for {f}")));
            }
        }
        Ok(())
    }

    /// Mixed-radix index, last factor fastest.
    pub fn canonical_index(&self, e: &RingElement) -> u64 {
        e.components.iter().zip(&self.factors).fold(0, |acc, (&c, f)| acc * f.order() + c)
    }

    pub fn element_of_index(&self, index: u64) -> RingElement {
        assert!(index < self.order, "index {index} out of range");
        let mut components = vec![0; self.factors.len()];
        let mut rest = index;
        for (slot, f) in components.iter_mut().zip(&self.factors).rev() {
            *slot = rest % f.order();
            rest /= f.order();
        }
        RingElement { components }
    }

    pub fn mul(&self, a: &RingElement, b: &RingElement) -> Result<RingElement> {
        self.validate(a)?;
        self.validate(b)?;
        Ok(self.mul_unchecked(a, b))
    }

    pub(crate) fn mul_unchecked(&self, a: &RingElement, b: &RingElement) -> RingElement {
        let components =
            self.factors.iter().zip(a.components.iter().zip(&b.components)).map(|(f, (&x, &y))| f.mul(x, y)).collect();
        RingElement { components }
    }

    /// `a * b == 0`, componentwise short-circuit.
    #[inline]
    pub fn annihilates(&self, a: &[u64], b: &[u64]) -> bool {
        self.factors.iter().zip(a.iter().zip(b)).all(|(f, (&x, &y))| f.mul(x, y) == 0)
    }

    pub fn classify(&self, a: &RingElement) -> Result<ElementClass> {
        self.validate(a)?;
        Ok(self.classify_unchecked(a.components()))
    }

    pub(crate) fn classify_unchecked(&self, comps: &[u64]) -> ElementClass {
        if comps.iter().all(|&c| c == 0) {
            return ElementClass::Zero;
        }
        let pairs = || self.factors.iter().zip(comps);
        if pairs().all(|(f, &c)| f.is_unit(c)) {
            ElementClass::Unit
        } else if pairs().all(|(f, &c)| f.is_nilpotent(c)) {
            ElementClass::NilpotentNonzero
        } else {
            ElementClass::ZeroDivisorNonnilpotent
        }
    }

    /// Nonzero non-unit; in a finite ring these are the nonzero zero-divisors.
    pub(crate) fn is_zero_divisor_star(&self, comps: &[u64]) -> bool {
        matches!(self.classify_unchecked(comps), ElementClass::NilpotentNonzero | ElementClass::ZeroDivisorNonnilpotent)
    }

    /// Visits every element in canonical order without allocating per element.
    pub(crate) fn for_each_components(&self, mut visit: impl FnMut(u64, &[u64])) {
        let mut comps = vec![0u64; self.factors.len()];
        for index in 0..self.order {
            visit(index, &comps);
            for (c, f) in comps.iter_mut().zip(&self.factors).rev() {
                *c += 1;
                if *c < f.order() {
                    break;
                }
                *c = 0;
            }
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = RingElement> + '_ {
        (0..self.order).map(move |i| self.element_of_index(i))
    }

    pub fn enumerate(&self, filter: ElementFilter<'_>) -> Vec<RingElement> {
        self.elements()
            .filter(|e| match &filter {
                ElementFilter::All => true,
                ElementFilter::ZeroDivisorsStar => self.is_zero_divisor_star(e.components()),
                ElementFilter::Units => self.classify_unchecked(e.components()) == ElementClass::Unit,
                ElementFilter::Custom(pred) => pred(e),
            })
            .collect()
    }

    pub fn format_element(&self, e: &RingElement) -> String {
        let parts: Vec<String> = e.components.iter().zip(&self.factors).map(|(&c, f)| f.format_component(c)).collect();
        if parts.len() == 1 {
            parts.into_iter().next().unwrap()
        } else {
            format!("({})", parts.join(","))
        }
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.factors.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(" x "))
    }
}

/// CRT decomposition of `Z_n` into prime-power factors in increasing prime order.
pub fn decompose_zn(n: u64) -> Result<RingSpec> {
    decompose_zn_with_cap(n, DEFAULT_MAX_ORDER)
}

pub fn decompose_zn_with_cap(n: u64, max_order: u64) -> Result<RingSpec> {
    if n < 2 {
        return Err(Error::InvalidInput(format!("Z_n needs n >= 2, got {n}")));
    }
    if n > max_order {
        return Err(Error::ResourceLimit { order: n, cap: max_order });
    }
    let factors =
        arith::factorize(n).into_iter().map(|(p, r)| FactorSpec::local_z(p, r)).collect::<Result<Vec<_>>>()?;
    RingSpec::with_max_order(factors, max_order)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: u64) -> RingSpec {
        decompose_zn(n).unwrap()
    }

    fn el(spec: &RingSpec, c: &[u64]) -> RingElement {
        spec.element(c.to_vec()).unwrap()
    }

    fn brute_factor(n: u64) -> Vec<(u64, u32)> {
        let mut out = Vec::new();
        let mut m = n;
        for d in 2..=n {
            let mut e = 0;
            while m.is_multiple_of(d) {
                m /= d;
                e += 1;
            }
            if e > 0 {
                out.push((d, e));
            }
        }
        out
    }

    #[test]
    fn decompose_examples() {
        let shape =
            |s: &RingSpec| -> Vec<(u64, u32)> { s.factors().iter().map(|f| (f.prime(), f.exponent())).collect() };
        assert_eq!(shape(&z(8)), vec![(2, 3)]);
        assert_eq!(shape(&z(12)), vec![(2, 2), (3, 1)]);
        assert_eq!(shape(&z(360)), brute_factor(360));
        assert_eq!(shape(&z(360)), vec![(2, 3), (3, 2), (5, 1)]);
        assert_eq!(z(360).order(), 360);
        assert!(matches!(decompose_zn(1), Err(Error::InvalidInput(_))));
        assert!(matches!(decompose_zn(70000), Err(Error::ResourceLimit { .. })));
    }

    #[test]
    fn multiplication_examples() {
        let z8 = z(8);
        assert_eq!(z8.mul(&el(&z8, &[2]), &el(&z8, &[4])).unwrap(), el(&z8, &[0]));
        let r = RingSpec::local_product(&[(2, 3), (2, 4)]).unwrap();
        assert_eq!(r.mul(&el(&r, &[2, 0]), &el(&r, &[4, 5])).unwrap(), el(&r, &[0, 0]));
        let gf4 = RingSpec::new(vec![FactorSpec::galois_field(2, 2).unwrap()]).unwrap();
        let x = gf4.factors()[0].from_coefficients(&[0, 1]);
        let x_plus_1 = gf4.factors()[0].from_coefficients(&[1, 1]);
        assert_eq!(gf4.mul(&el(&gf4, &[x]), &el(&gf4, &[x])).unwrap(), el(&gf4, &[x_plus_1]));
        assert_eq!(gf4.format_element(&el(&gf4, &[x_plus_1])), "x+1");
    }

    #[test]
    fn out_of_range_components_rejected() {
        let z8 = z(8);
        assert!(matches!(z8.element(vec![8]), Err(Error::InvalidInput(_))));
        assert!(matches!(z8.element(vec![1, 1]), Err(Error::InvalidInput(_))));
        let bad = RingElement { components: vec![9] };
        assert!(z8.mul(&bad, &z8.one()).is_err());
        assert!(z8.classify(&bad).is_err());
    }

    #[test]
    fn classification_examples() {
        let z8 = z(8);
        assert_eq!(z8.classify(&el(&z8, &[3])).unwrap(), ElementClass::Unit);
        assert_eq!(z8.classify(&el(&z8, &[2])).unwrap(), ElementClass::NilpotentNonzero);
        assert_eq!(z8.classify(&el(&z8, &[0])).unwrap(), ElementClass::Zero);
        let z6 = z(6);
        assert_eq!(z6.classify(&el(&z6, &[1, 0])).unwrap(), ElementClass::ZeroDivisorNonnilpotent);
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(z(4).enumerate(ElementFilter::ZeroDivisorsStar), vec![el(&z(4), &[2])]);
        let r = RingSpec::local_product(&[(2, 3), (2, 4)]).unwrap();
        assert_eq!(r.enumerate(ElementFilter::ZeroDivisorsStar).len(), 95);
        assert_eq!(r.enumerate(ElementFilter::All).len(), 128);
        assert_eq!(z(9).enumerate(ElementFilter::Units).len(), 6);
        let even = |e: &RingElement| e.components()[0].is_multiple_of(2);
        assert_eq!(z(9).enumerate(ElementFilter::Custom(&even)).len(), 5);
    }

    #[test]
    fn order_cap_enforced() {
        let f = vec![FactorSpec::local_z(2, 8).unwrap(), FactorSpec::local_z(3, 2).unwrap()];
        assert!(matches!(
            RingSpec::with_max_order(f.clone(), 1000),
            Err(Error::ResourceLimit { order: 2304, cap: 1000 })
        ));
        assert!(RingSpec::with_max_order(f, 4096).is_ok());
        assert!(RingSpec::new(vec![]).is_err());
        assert!(FactorSpec::local_z(4, 2).is_err());
        assert!(FactorSpec::galois_field(2, 0).is_err());
    }

    #[test]
    fn display_forms() {
        let r =
            RingSpec::new(vec![FactorSpec::local_z(3, 2).unwrap(), FactorSpec::galois_field(2, 2).unwrap()]).unwrap();
        assert_eq!(r.to_string(), "Z9 x GF(4)");
        assert_eq!(r.format_element(&el(&r, &[3, 2])), "(3,x)");
    }

    #[test]
    fn unit_iff_invertible_exhaustive() {
        let rings = vec![
            z(12),
            z(16),
            z(27),
            RingSpec::new(vec![FactorSpec::galois_field(2, 3).unwrap(), FactorSpec::local_z(2, 2).unwrap()]).unwrap(),
            RingSpec::new(vec![FactorSpec::galois_field(3, 2).unwrap(), FactorSpec::local_z(5, 1).unwrap()]).unwrap(),
            RingSpec::local_product(&[(2, 2), (2, 2), (2, 2), (2, 2)]).unwrap(),
        ];
        for spec in rings {
            assert!(spec.order() <= 256);
            let all: Vec<RingElement> = spec.elements().collect();
            let one = spec.one();
            for a in &all {
                let invertible = all.iter().any(|b| spec.mul(a, b).unwrap() == one);
                let unit = spec.classify(a).unwrap() == ElementClass::Unit;
                assert_eq!(invertible, unit, "{} in {spec}", spec.format_element(a));
            }
        }
    }

    #[test]
    fn ring_axioms_exhaustive_small() {
        let rings = vec![
            z(8),
            z(12),
            RingSpec::new(vec![FactorSpec::galois_field(2, 2).unwrap(), FactorSpec::local_z(2, 2).unwrap()]).unwrap(),
            RingSpec::new(vec![FactorSpec::galois_field(2, 3).unwrap(), FactorSpec::local_z(2, 3).unwrap()]).unwrap(),
        ];
        for spec in rings {
            assert!(spec.order() <= 64);
            let all: Vec<RingElement> = spec.elements().collect();
            for a in &all {
                assert_eq!(spec.mul(a, &spec.one()).unwrap(), *a);
                for b in &all {
                    let ab = spec.mul(a, b).unwrap();
                    assert_eq!(ab, spec.mul(b, a).unwrap());
                    for c in &all {
                        assert_eq!(spec.mul(&ab, c).unwrap(), spec.mul(a, &spec.mul(b, c).unwrap()).unwrap());
                    }
                }
            }
        }
    }
}
