//! Multiple-sum zeta Z_r(s, alpha) = sum_{n>=0} C(n+r-1, r-1) (n+alpha)^{-s} at s = -m.

use num_traits::One;

use crate::exact::{binomial, factorial, rat, rat_int, Polynomial, Rational, RationalPolynomial};
use crate::hurwitz::{hurwitz_poly, zeta_neg};

/// C(N+r-1, r-1) = sum_i coeffs[i] N^i.
#[derive(Clone, Debug, PartialEq)]
pub struct MultiplicityDecomposition {
    pub r: u64,
    pub coeffs: Vec<Rational>,
}

/// prod_{j in set} (x + j), ascending coefficients; entry k is e_{|set|-k}(set).
fn rising_product(set: impl Iterator<Item = u64>) -> Vec<Rational> {
    set.fold(Polynomial::constant(Rational::one()), |acc, j| {
        &acc * &Polynomial::linear(rat_int(j), Rational::one())
    })
    .coeffs()
    .to_vec()
}

pub fn multiplicity_decomposition(r: u64) -> MultiplicityDecomposition {
    assert!(r >= 2, "r must be at least 2");
    let norm = Rational::one() / rat_int(factorial(r - 1));
    let coeffs = rising_product(1..r).into_iter().map(|c| c * &norm).collect();
    MultiplicityDecomposition { r, coeffs }
}

/// zeta_r(-k) = sum_{N>=1} C(N+r-1,r-1) N^{k} = sum_i c_i zeta(-k-i).
pub fn zeta_r_neg(r: u64, k: u64) -> Rational {
    multiplicity_decomposition(r)
        .coeffs
        .iter()
        .enumerate()
        .map(|(i, c)| c * zeta_neg(k + i as u64))
        .sum()
}

/// Shared shape: alpha^m + sum_n C(m,n) zeta_r(n-m) alpha^n
/// + sum_i (-1)^{i+1} c_i alpha^{m+i+1} / ((i+1) C(m+i+1, m)), with pole
/// coefficients indexed by their shift i.
fn expansion(m: u64, zeta_r: impl Fn(u64) -> Rational, poles: &[(u64, Rational)]) -> RationalPolynomial {
    let mut acc = Polynomial::monomial(Rational::one(), m as usize);
    for n in 0..=m {
        let c = rat_int(binomial(m, n)) * zeta_r(m - n);
        acc = &acc + &Polynomial::monomial(c, n as usize);
    }
    for (i, c) in poles {
        let sign = if i % 2 == 0 { -1 } else { 1 };
        let d = rat_int(i + 1) * rat_int(binomial(m + i + 1, m));
        acc = &acc + &Polynomial::monomial(c * rat(sign, 1) / d, (m + i + 1) as usize);
    }
    acc
}

/// Z_r(-m, alpha), degree m + r.
pub fn z_r_poly(r: u64, m: u64) -> RationalPolynomial {
    let dec = multiplicity_decomposition(r);
    let poles: Vec<(u64, Rational)> = dec
        .coeffs
        .iter()
        .enumerate()
        .map(|(i, c)| (i as u64, c.clone()))
        .collect();
    expansion(m, |k| zeta_r_neg(r, k), &poles)
}

/// Z_r(-m, alpha) by rewriting C(n+r-1, r-1) as sum_k w_k(alpha) (n+alpha)^k and
/// summing the Hurwitz polynomials zeta(-m-k, alpha).
pub fn z_r_oracle(r: u64, m: u64) -> RationalPolynomial {
    assert!(r >= 2, "r must be at least 2");
    // weights[k] is the alpha-polynomial multiplying X^k, X = n + alpha.
    let mut weights: Vec<RationalPolynomial> = vec![Polynomial::constant(Rational::one())];
    for j in 1..r {
        let shift = Polynomial::linear(rat_int(j), -Rational::one());
        let mut next = vec![RationalPolynomial::zero(); weights.len() + 1];
        for (k, w) in weights.iter().enumerate() {
            next[k + 1] = &next[k + 1] + w;
            next[k] = &next[k] + &(w * &shift);
        }
        weights = next;
    }
    let norm = Rational::one() / rat_int(factorial(r - 1));
    weights
        .iter()
        .enumerate()
        .fold(RationalPolynomial::zero(), |acc, (k, w)| {
            &acc + &(w * &hurwitz_poly(m + k as u64))
        })
        .scale(&norm)
}

/// The literal variant, its difference from the oracle is reported, not asserted.
#[derive(Clone, Debug, PartialEq)]
pub struct LiteralReport {
    pub literal: RationalPolynomial,
    pub oracle: RationalPolynomial,
    /// oracle - literal.
    pub discrepancy: RationalPolynomial,
}

/// Literal reading: A_j = e_{r-1-j}({1..r-2}) for j = 1..r-1, so the zeta(s) term
/// and its pole are missing.
pub fn theorem5_literal(r: u64, m: u64) -> LiteralReport {
    assert!(r >= 2, "r must be at least 2");
    let norm = Rational::one() / rat_int(factorial(r - 1));
    let e = rising_product(1..r - 1);
    // A_j = e_{r-1-j}({1..r-2}) is the coefficient of x^{j-1} in prod (x + i).
    let a: Vec<(u64, Rational)> = (1..r).map(|j| (j, &e[(j - 1) as usize] * &norm)).collect();
    let zeta_lit = |k: u64| -> Rational { a.iter().map(|(j, c)| c * zeta_neg(k + j)).sum() };
    let literal = expansion(m, zeta_lit, &a);
    let oracle = z_r_oracle(r, m);
    let discrepancy = &oracle - &literal;
    LiteralReport {
        literal,
        oracle,
        discrepancy,
    }
}

impl LiteralReport {
    pub fn is_consistent(&self) -> bool {
        self.discrepancy.is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(c: &[(i64, i64)]) -> RationalPolynomial {
        Polynomial::new(c.iter().map(|&(n, d)| rat(n, d)).collect())
    }

    #[test]
    fn decompositions() {
        assert_eq!(multiplicity_decomposition(2).coeffs, vec![rat(1, 1), rat(1, 1)]);
        assert_eq!(multiplicity_decomposition(3).coeffs, vec![rat(1, 1), rat(3, 2), rat(1, 2)]);
        assert_eq!(
            multiplicity_decomposition(4).coeffs,
            vec![rat(1, 1), rat(11, 6), rat(1, 1), rat(1, 6)]
        );
    }

    #[test]
    fn zeta_r_values() {
        assert_eq!(zeta_r_neg(2, 0), rat(-7, 12));
        assert_eq!(zeta_r_neg(2, 2), rat(1, 120));
        assert_eq!(zeta_r_neg(3, 1), rat(-19, 240));
    }

    #[test]
    fn polynomials() {
        assert_eq!(z_r_poly(2, 0), poly(&[(5, 12), (-1, 1), (1, 2)]));
        assert_eq!(z_r_poly(2, 1), poly(&[(-1, 12), (5, 12), (-1, 2), (1, 6)]));
        assert_eq!(z_r_poly(3, 0), poly(&[(3, 8), (-1, 1), (3, 4), (-1, 6)]));
        assert_eq!(z_r_oracle(2, 0), z_r_poly(2, 0));
        assert_eq!(z_r_oracle(4, 2), z_r_poly(4, 2));
    }

    #[test]
    fn literal_discrepancy() {
        let rep = theorem5_literal(2, 0);
        assert_eq!(rep.literal, poly(&[(11, 12), (0, 1), (1, 2)]));
        assert_eq!(rep.discrepancy, poly(&[(-1, 2), (-1, 1)]));
        assert!(!theorem5_literal(2, 1).is_consistent());
    }
}
