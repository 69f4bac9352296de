//! Dedekind sums `s(alpha, beta) = (1/4 alpha) sum_{j=1}^{alpha-1} cot(pi j/alpha) cot(pi j beta/alpha)`
//! with `alpha` as the modulus, and the adiabatic eta invariant built from them.
//!
//! Three evaluators are provided: an exact sawtooth sum, an exact
//! reciprocity recursion, and the floating cotangent sum.

use std::f64::consts::PI;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::seifert::{chern_number, ExactRational, SeifertData};

/// Coprime arguments with `alpha >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DedekindArgs {
    alpha: i64,
    beta: i64,
}

impl DedekindArgs {
    pub fn new(alpha: i64, beta: i64) -> Result<Self> {
        if alpha < 1 {
            return Err(Error::NonPositiveAlpha(1));
        }
        if alpha.gcd(&beta) != 1 {
            return Err(Error::CoprimalityViolation(1));
        }
        Ok(DedekindArgs { alpha, beta })
    }

    pub fn alpha(&self) -> i64 {
        self.alpha
    }

    pub fn beta(&self) -> i64 {
        self.beta
    }

    fn reduced_beta(&self) -> i64 {
        self.beta.rem_euclid(self.alpha)
    }
}

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

/// Exact sum `sum_{j=1}^{alpha-1} ((j/alpha)) ((j beta/alpha))` with the
/// sawtooth `((x)) = x - floor(x) - 1/2` off the integers and 0 on them.
pub fn dedekind_sum_exact(a: DedekindArgs) -> ExactRational {
    let alpha = a.alpha;
    if alpha == 1 {
        return BigRational::zero();
    }
    let b = a.reduced_beta();
    // ((j/alpha)) = (2j - alpha) / (2 alpha); accumulate numerators over 4 alpha^2.
    let mut acc: i128 = 0;
    let mut r: i64 = 0;
    for j in 1..alpha {
        r += b;
        if r >= alpha {
            r -= alpha;
        }
        if r != 0 {
            acc += i128::from(2 * j - alpha) * i128::from(2 * r - alpha);
        }
    }
    let denom = 4 * i128::from(alpha) * i128::from(alpha);
    BigRational::new(BigInt::from(acc), BigInt::from(denom))
}

/// Same value as [`dedekind_sum_exact`] via the reciprocity law
/// `s(a,b) + s(b,a) = -1/4 + (a/b + b/a + 1/(ab)) / 12`, in O(log alpha) steps.
pub fn dedekind_sum_recursive(a: DedekindArgs) -> ExactRational {
    let mut acc = BigRational::zero();
    let mut sign = 1i64;
    let (mut m, mut b) = (a.alpha, a.reduced_beta());
    // invariant: s(original) = acc + sign * s(m, b), 0 <= b < m, gcd(m, b) = 1
    while m > 1 {
        let term = q(-1, 4)
            + (q(m, b) + q(b, m) + BigRational::new(1.into(), BigInt::from(m) * b)) / q(12, 1);
        acc += term * q(sign, 1);
        sign = -sign;
        let next_b = m % b;
        m = b;
        b = next_b;
    }
    acc
}

/// Direct cotangent evaluation in floating point.
pub fn dedekind_sum_float(a: DedekindArgs) -> f64 {
    let alpha = a.alpha;
    if alpha == 1 {
        return 0.0;
    }
    let b = a.reduced_beta();
    let af = alpha as f64;
    let cot = |x: f64| x.cos() / x.sin();
    let mut sum = 0.0;
    let mut r: i64 = 0;
    for j in 1..alpha {
        r = (r + b) % alpha;
        if r != 0 {
            sum += cot(PI * j as f64 / af) * cot(PI * r as f64 / af);
        }
    }
    sum / (4.0 * af)
}

/// Adiabatic eta invariant `eta0 = N (c1/6 - 2 sum_j s(alpha_j, beta_j))`.
pub fn adiabatic_eta(d: &SeifertData, gauge_rank: u32) -> Result<ExactRational> {
    if gauge_rank == 0 {
        return Err(Error::InvalidGaugeRank);
    }
    let sums = d.pairs().iter().fold(BigRational::zero(), |acc, &(alpha, beta)| {
        acc + dedekind_sum_recursive(DedekindArgs { alpha, beta })
    });
    let per_rank = chern_number(d) / q(6, 1) - sums * q(2, 1);
    Ok(per_rank * q(i64::from(gauge_rank), 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn args(a: i64, b: i64) -> DedekindArgs {
        DedekindArgs::new(a, b).unwrap()
    }

    #[test]
    fn small_values() {
        for f in [dedekind_sum_exact, dedekind_sum_recursive] {
            assert_eq!(f(args(2, 1)), q(0, 1));
            assert_eq!(f(args(3, 1)), q(1, 18));
            assert_eq!(f(args(5, 1)), q(1, 5));
            assert_eq!(f(args(1, 7)), q(0, 1));
            assert_eq!(f(args(1, 0)), q(0, 1));
        }
        assert!(dedekind_sum_float(args(2, 1)).abs() < 1e-15);
        assert!((dedekind_sum_float(args(3, 1)) - 1.0 / 18.0).abs() < 1e-12);
        let exact = dedekind_sum_exact(args(5, 2));
        let exact_f = exact.numer().to_string().parse::<f64>().unwrap()
            / exact.denom().to_string().parse::<f64>().unwrap();
        assert!((dedekind_sum_float(args(5, 2)) - exact_f).abs() < 1e-12);
    }

    #[test]
    fn negative_beta_is_odd() {
        assert_eq!(dedekind_sum_exact(args(7, -3)), -dedekind_sum_exact(args(7, 3)));
        assert_eq!(dedekind_sum_recursive(args(7, -3)), -dedekind_sum_recursive(args(7, 3)));
    }

    #[test]
    fn large_modulus_agrees() {
        let a = args(100003, 17);
        assert_eq!(dedekind_sum_recursive(a), dedekind_sum_exact(a));
    }

    #[test]
    fn argument_validation() {
        assert_eq!(DedekindArgs::new(0, 1), Err(Error::NonPositiveAlpha(1)));
        assert_eq!(DedekindArgs::new(4, 2), Err(Error::CoprimalityViolation(1)));
    }

    #[test]
    fn eta_examples() {
        let t = SeifertData::new(1, 1, vec![]).unwrap();
        assert_eq!(adiabatic_eta(&t, 1).unwrap(), q(1, 6));
        assert_eq!(adiabatic_eta(&t, 3).unwrap(), q(1, 2));
        let p = SeifertData::new(0, -1, vec![(2, 1), (3, 1), (5, 1)]).unwrap();
        assert_eq!(adiabatic_eta(&p, 1).unwrap(), q(-91, 180));
    }
}
