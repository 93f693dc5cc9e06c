use serde::Serialize;

/// χ(Γ₀(Z_{p^r})) = ω(Γ₀(Z_{p^r})): `p^{r/2}` for even `r`, `p^{(r-1)/2} + 1` for odd `r`.
pub fn local_gamma0_formula(p: u64, r: u32) -> u64 {
    if r.is_multiple_of(2) {
        p.pow(r / 2)
    } else {
        p.pow((r - 1) / 2) + 1
    }
}

/// χ = ω of Γ₀ for `Z^n x Z_{p_1^{r_1}} x ... x Z_{p_k^{r_k}}`:
/// `prod p_i^{floor(r_i/2)} + #{i : r_i odd} + n`.
pub fn formula_chi_gamma0(prime_powers: &[(u64, u32)], n_domains: u64) -> u64 {
    let product: u64 = prime_powers.iter().map(|&(p, r)| p.pow(r / 2)).product();
    let odd = prime_powers.iter().filter(|&&(_, r)| r % 2 == 1).count() as u64;
    product + odd + n_domains
}

/// χ = ω of Γ₀ for a product of `k` integral domains.
pub fn fields_formula(k: u64) -> u64 {
    k + 1
}

/// Size of the associate-class clique in the complement of Γ(Z_{p^r}):
/// `p^{r-1} - p^{r/2}` (even `r`) or `p^{r-1} - p^{(r-1)/2}` (odd `r`).
///
/// For even `r` this is one less than ω of the complement: a single element of
/// valuation `r/2` can always be added to the clique.
pub fn local_complement_formula(p: u64, r: u32) -> u64 {
    assert!(r >= 1);
    let top = p.pow(r - 1);
    if r.is_multiple_of(2) {
        top - p.pow(r / 2)
    } else {
        top - p.pow((r - 1) / 2)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Composition {
    pub value: u64,
    /// True when the second factor is reduced and `value` is the exact invariant
    /// of the product; otherwise `value` is a lower bound.
    pub exact: bool,
}

/// Combines χ (or ω) of Γ₀(R₁) and Γ₀(R₂) into the value for Γ₀(R₁ x R₂).
pub fn product_composition(first: u64, second: u64, second_reduced: bool) -> Composition {
    Composition { value: first + second - 1, exact: second_reduced }
}
