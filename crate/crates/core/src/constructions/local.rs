use crate::error::Result;
use crate::ring::{FactorKind, FactorSpec};

/// A maximal clique `S` of Γ₀ of one factor and its square-zero part
/// `N = {a ∈ S : a² = 0}`, both as sorted component codes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalCliqueData {
    pub factor: FactorSpec,
    pub clique: Vec<u64>,
    pub square_zero: Vec<u64>,
}

impl LocalCliqueData {
    /// Builds the data from an arbitrary clique candidate, deriving `N`.
    pub fn from_clique(factor: FactorSpec, mut clique: Vec<u64>) -> Self {
        clique.sort_unstable();
        clique.dedup();
        let square_zero = clique.iter().copied().filter(|&a| factor.mul(a, a) == 0).collect();
        LocalCliqueData { factor, clique, square_zero }
    }

    /// `s = |S|`.
    pub fn s(&self) -> usize {
        self.clique.len()
    }

    /// `n = |N|`.
    pub fn n(&self) -> usize {
        self.square_zero.len()
    }

    pub fn contains(&self, code: u64) -> bool {
        self.clique.binary_search(&code).is_ok()
    }

    pub fn is_square_zero(&self, code: u64) -> bool {
        self.square_zero.binary_search(&code).is_ok()
    }

    /// Members with nonzero square.
    pub fn non_square_zero(&self) -> impl Iterator<Item = u64> + '_ {
        self.clique.iter().copied().filter(|&a| !self.is_square_zero(a))
    }
}

/// The standard maximal clique of Γ₀ for one factor.
///
/// For `Z_{p^r}` with `r = 2t` this is the ideal `(p^t)`; with `r = 2t + 1` it
/// is `(p^{t+1}) ∪ {p^t}`. A field gets `{0, 1}`, which is the `r = 1` case.
pub fn local_clique(factor: &FactorSpec) -> LocalCliqueData {
    let clique = match factor.kind() {
        FactorKind::GaloisField => vec![0, 1],
        FactorKind::LocalZ => {
            let (p, r) = (factor.prime(), factor.exponent());
            let m = factor.order();
            if r % 2 == 0 {
                let step = p.pow(r / 2);
                (0..m).step_by(step as usize).collect()
            } else {
                let step = p.pow(r.div_ceil(2));
                let mut s: Vec<u64> = (0..m).step_by(step as usize).collect();
                s.push(p.pow((r - 1) / 2));
                s
            }
        }
    };
    LocalCliqueData::from_clique(factor.clone(), clique)
}

/// [`local_clique`] for `Z_{p^r}`.
pub fn maximal_clique_zpr(p: u64, r: u32) -> Result<LocalCliqueData> {
    Ok(local_clique(&FactorSpec::local_z(p, r)?))
}
