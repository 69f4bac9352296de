//! Test-only oracles, independent of the library's algorithms.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use seifert_torsion::SeifertData;

/// Determinant by Laplace expansion along the first row.
pub fn cofactor_det(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 1 {
        return m[0][0].clone();
    }
    let mut total = BigInt::zero();
    for (j, a) in m[0].iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        let minor: Vec<Vec<BigInt>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, x)| x.clone()).collect())
            .collect();
        let term = a * cofactor_det(&minor);
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = combinations(n - 1, k);
    for mut c in combinations(n - 1, k - 1) {
        c.push(n - 1);
        out.push(c);
    }
    out
}

/// Smith diagonal from determinantal divisors: `d_k = D_k / D_{k-1}` where
/// `D_k` is the gcd of all k-by-k minors. Trailing zeros for rank deficiency.
pub fn determinantal_divisor_diagonal(m: &[Vec<i64>]) -> Vec<BigInt> {
    let rows = m.len();
    let cols = m[0].len();
    let mut out = Vec::new();
    let mut prev = BigInt::one();
    for k in 1..=rows.min(cols) {
        let mut g = BigInt::zero();
        for rs in combinations(rows, k) {
            for cs in combinations(cols, k) {
                let minor: Vec<Vec<BigInt>> =
                    rs.iter().map(|&r| cs.iter().map(|&c| BigInt::from(m[r][c])).collect()).collect();
                g = g.gcd(&cofactor_det(&minor));
            }
        }
        if g.is_zero() {
            out.resize(rows.min(cols), BigInt::zero());
            return out;
        }
        out.push(&g / &prev);
        prev = g;
    }
    out
}

/// `n prod alpha + sum_j beta_j prod_{i != j} alpha_i`, term by term.
pub fn torsion_numerator_oracle(d: &SeifertData) -> BigInt {
    let alphas: Vec<BigInt> = d.pairs().iter().map(|&(a, _)| a.into()).collect();
    let mut total: BigInt = BigInt::from(d.euler()) * alphas.iter().product::<BigInt>();
    for (j, &(_, b)) in d.pairs().iter().enumerate() {
        let others: BigInt = alphas.iter().enumerate().filter(|&(i, _)| i != j).map(|(_, a)| a.clone()).product();
        total += BigInt::from(b) * others;
    }
    total
}

pub fn chern_oracle(d: &SeifertData) -> BigRational {
    let mut c = BigRational::from_integer(d.euler().into());
    for &(a, b) in d.pairs() {
        c += BigRational::new(b.into(), a.into());
    }
    c
}

/// Sawtooth `((x))` of the exact rational `x`.
fn sawtooth(x: &BigRational) -> BigRational {
    if x.is_integer() {
        BigRational::zero()
    } else {
        x - x.floor() - BigRational::new(1.into(), 2.into())
    }
}

/// Dedekind sum with modulus `alpha`, each term as an exact rational.
pub fn dedekind_oracle(alpha: i64, beta: i64) -> BigRational {
    (1..alpha)
        .map(|j| {
            let x = BigRational::new(j.into(), alpha.into());
            let y = BigRational::new((j * beta).into(), alpha.into());
            sawtooth(&x) * sawtooth(&y)
        })
        .fold(BigRational::zero(), |a, b| a + b)
}

pub fn reciprocity_rhs(a: i64, b: i64) -> BigRational {
    let q = |n: BigInt, d: BigInt| BigRational::new(n, d);
    let (ab, bb) = (BigInt::from(a), BigInt::from(b));
    q((-1).into(), 4.into())
        + (q(ab.clone(), bb.clone()) + q(bb.clone(), ab.clone()) + q(1.into(), &ab * &bb))
            / BigRational::from_integer(12.into())
}

pub fn rational_to_f64(x: &BigRational) -> f64 {
    x.numer().to_string().parse::<f64>().unwrap() / x.denom().to_string().parse::<f64>().unwrap()
}

/// Random valid Seifert data with `g <= max_genus`, `M <= max_fibers`,
/// `alpha <= max_alpha`, `|n| <= 6`.
pub fn random_seifert<R: Rng>(rng: &mut R, max_genus: i64, max_fibers: usize, max_alpha: i64) -> SeifertData {
    let genus = rng.gen_range(0..=max_genus);
    let euler = rng.gen_range(-6..=6);
    let m = rng.gen_range(0..=max_fibers);
    let pairs = (0..m)
        .map(|_| {
            let alpha = rng.gen_range(1..=max_alpha);
            loop {
                let beta = rng.gen_range(-2 * alpha..=2 * alpha);
                if alpha.gcd(&beta) == 1 {
                    break (alpha, beta);
                }
            }
        })
        .collect();
    SeifertData::new(genus, euler, pairs).expect("generator produces valid data")
}

pub fn random_sasakian<R: Rng>(rng: &mut R, max_genus: i64, max_fibers: usize, max_alpha: i64) -> SeifertData {
    loop {
        let d = random_seifert(rng, max_genus, max_fibers, max_alpha);
        if !torsion_numerator_oracle(&d).is_zero() {
            return d;
        }
    }
}

pub fn fixtures() -> Vec<SeifertData> {
    vec![
        SeifertData::new(0, -1, vec![(2, 1), (3, 1), (5, 1)]).unwrap(),
        SeifertData::new(1, 1, vec![]).unwrap(),
        SeifertData::new(0, 2, vec![(3, 1), (3, 1)]).unwrap(),
    ]
}

pub fn rel_err(a: f64, b: f64) -> f64 {
    if b == 0.0 {
        a.abs()
    } else {
        ((a - b) / b).abs()
    }
}

pub fn abs_big(x: &BigInt) -> BigInt {
    x.abs()
}
