//! Dense polynomials over `Z_p`, coefficients stored low degree first.

fn trim(mut v: Vec<u64>) -> Vec<u64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

/// Remainder of `a` modulo the monic polynomial `m`.
pub fn rem_monic(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let deg_m = m.len() - 1;
    let mut r = trim(a.to_vec());
    while r.len() > deg_m {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - deg_m;
        for (j, &c) in m.iter().enumerate() {
            let idx = shift + j;
            r[idx] = (r[idx] + p - (lead * c) % p) % p;
        }
        r = trim(r);
    }
    r
}

/// Product of `a` and `b` reduced modulo the monic `m`, padded to `deg(m)` coefficients.
pub fn mul_mod(a: &[u64], b: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let mut prod = vec![0u64; a.len() + b.len()];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    let mut r = rem_monic(&prod, m, p);
    r.resize(m.len() - 1, 0);
    r
}

fn monic_from_digits(index: u64, degree: usize, p: u64) -> Vec<u64> {
    // c_0 is the most significant digit so that increasing `index` walks the
    // coefficient vectors in lexicographic order, low degree first.
    let mut coeffs = vec![0u64; degree + 1];
    let mut rest = index;
    for j in (0..degree).rev() {
        coeffs[j] = rest % p;
        rest /= p;
    }
    coeffs[degree] = 1;
    coeffs
}

/// True when the monic polynomial `f` has no monic factor of degree `1..=deg/2`.
pub fn is_irreducible(f: &[u64], p: u64) -> bool {
    let degree = f.len() - 1;
    if degree == 0 {
        return false;
    }
    for d in 1..=degree / 2 {
        let count = p.pow(d as u32);
        for idx in 0..count {
            let g = monic_from_digits(idx, d, p);
            if rem_monic(f, &g, p).is_empty() {
                return false;
            }
        }
    }
    true
}

/// Lexicographically smallest monic irreducible of degree `k` over `Z_p`,
/// comparing coefficient vectors from the constant term upward.
pub fn irreducible_poly(p: u64, k: u32) -> Vec<u64> {
    assert!(k >= 1, "degree must be positive");
    let degree = k as usize;
    let count = p.pow(k);
    (0..count)
        .map(|idx| monic_from_digits(idx, degree, p))
        .find(|f| is_irreducible(f, p))
        .expect("an irreducible polynomial exists in every degree")
}

/// Renders a polynomial as `x^2+x+1`.
pub fn format_poly(coeffs: &[u64]) -> String {
    let mut terms = Vec::new();
    for (deg, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let term = match (deg, c) {
            (0, c) => c.to_string(),
            (1, 1) => "x".to_string(),
            (1, c) => format!("{c}x"),
            (d, 1) => format!("x^{d}"),
            (d, c) => format!("{c}x^{d}"),
        };
        terms.push(term);
    }
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join("+")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // Independent check: a quadratic or cubic is irreducible iff it has no root.
    fn has_root(f: &[u64], p: u64) -> bool {
        (0..p).any(|x| {
            let mut acc = 0u64;
            for &c in f.iter().rev() {
                acc = (acc * x + c) % p;
            }
            acc == 0
        })
    }

    #[test]
    fn smallest_irreducibles() {
        assert_eq!(irreducible_poly(2, 1), vec![0, 1]);
        assert_eq!(irreducible_poly(2, 2), vec![1, 1, 1]);
        assert_eq!(irreducible_poly(3, 2), vec![1, 0, 1]);
        // (1,0,1) precedes (1,1,0): x^3+x^2+1 before x^3+x+1
        assert_eq!(irreducible_poly(2, 3), vec![1, 0, 1, 1]);
    }

    #[test]
    fn root_oracle_agrees_on_low_degrees() {
        for p in [2u64, 3, 5, 7] {
            for degree in [2usize, 3] {
                for idx in 0..p.pow(degree as u32) {
                    let f = monic_from_digits(idx, degree, p);
                    assert_eq!(is_irreducible(&f, p), !has_root(&f, p), "{f:?} over Z_{p}");
                }
            }
        }
    }

    #[test]
    fn gf4_multiplication() {
        let m = irreducible_poly(2, 2);
        // x * x = x + 1 modulo x^2 + x + 1
        assert_eq!(mul_mod(&[0, 1], &[0, 1], &m, 2), vec![1, 1]);
        assert_eq!(format_poly(&[1, 1]), "x+1");
        assert_eq!(format_poly(&[0, 0]), "0");
    }
}
