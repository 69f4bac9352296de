//! Seifert invariants `[g, n; (a1,b1), ..., (aM,bM)]` and the closed-form
//! arithmetic derived from them.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::IntegerMatrix;

/// Exact reduced rational with positive denominator.
pub type ExactRational = BigRational;

/// Unvalidated Seifert data, as read from text or JSON.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RawSeifert {
    pub genus: i64,
    pub euler: i64,
    #[serde(default)]
    pub pairs: Vec<(i64, i64)>,
}

/// Validated Seifert invariants of a closed Seifert fibered three-manifold
/// over an orientable base of genus `g`.
///
/// Every pair satisfies `alpha >= 1` and `gcd(alpha, beta) = 1`. The
/// `beta` values are not normalized into `(0, alpha)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawSeifert", into = "RawSeifert")]
pub struct SeifertData {
    genus: u32,
    euler: i64,
    pairs: Vec<(i64, i64)>,
}

impl TryFrom<RawSeifert> for SeifertData {
    type Error = Error;

    fn try_from(raw: RawSeifert) -> Result<Self> {
        validate_seifert(raw)
    }
}

impl From<SeifertData> for RawSeifert {
    fn from(d: SeifertData) -> Self {
        RawSeifert { genus: i64::from(d.genus), euler: d.euler, pairs: d.pairs }
    }
}

/// Checks the Seifert invariants. Pair indices in errors are 1-based.
pub fn validate_seifert(raw: RawSeifert) -> Result<SeifertData> {
    if raw.genus < 0 {
        return Err(Error::NegativeGenus);
    }
    let genus = u32::try_from(raw.genus).map_err(|_| Error::NegativeGenus)?;
    for (idx, &(alpha, beta)) in raw.pairs.iter().enumerate() {
        if alpha < 1 {
            return Err(Error::NonPositiveAlpha(idx + 1));
        }
        // gcd(alpha, 0) = alpha, so beta = 0 only passes for alpha = 1
        if alpha.gcd(&beta) != 1 {
            return Err(Error::CoprimalityViolation(idx + 1));
        }
    }
    Ok(SeifertData { genus, euler: raw.euler, pairs: raw.pairs })
}

impl SeifertData {
    pub fn new(genus: i64, euler: i64, pairs: Vec<(i64, i64)>) -> Result<Self> {
        validate_seifert(RawSeifert { genus, euler, pairs })
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn euler(&self) -> i64 {
        self.euler
    }

    pub fn pairs(&self) -> &[(i64, i64)] {
        &self.pairs
    }

    /// Number of marked fibers M.
    pub fn fiber_count(&self) -> usize {
        self.pairs.len()
    }

    pub fn alphas(&self) -> impl Iterator<Item = i64> + '_ {
        self.pairs.iter().map(|&(a, _)| a)
    }

    pub fn alpha_product(&self) -> BigInt {
        self.alphas().map(BigInt::from).product()
    }
}

impl fmt::Display for SeifertData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}", self.genus, self.euler)?;
        if !self.pairs.is_empty() {
            write!(f, ";")?;
            for (i, (a, b)) in self.pairs.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "({a},{b})")?;
            }
        }
        write!(f, "]")
    }
}

/// Orbifold first Chern number `c1 = n + sum beta_j / alpha_j`.
pub fn chern_number(d: &SeifertData) -> ExactRational {
    d.pairs.iter().fold(BigRational::from_integer(d.euler.into()), |acc, &(a, b)| {
        acc + BigRational::new(b.into(), a.into())
    })
}

/// `c1 * prod alpha_j = n * prod alpha + sum_j beta_j * prod_{i != j} alpha_i`,
/// with its sign.
pub fn signed_torsion_integer(d: &SeifertData) -> BigInt {
    // After j pairs: num = (n + sum_{i<=j} beta_i/alpha_i) * prod, prod = prod_{i<=j} alpha_i.
    let (num, _) = d.pairs.iter().fold(
        (BigInt::from(d.euler), BigInt::one()),
        |(num, prod), &(a, b)| (num * a + &prod * b, prod * a),
    );
    num
}

/// `|c1 * prod alpha_j|`, zero exactly when `c1 = 0`.
pub fn torsion_order_integer(d: &SeifertData) -> BigInt {
    signed_torsion_integer(d).abs()
}

/// Abelianized relations of the fundamental group over the generators
/// `(c_1, ..., c_M, h)`. The `a_p, b_p` generators are free in H1 and do
/// not appear.
///
/// Row `j < M` encodes `alpha_j c_j + beta_j h = 0`; the last row encodes
/// `c_1 + ... + c_M - n h = 0`.
pub fn relation_matrix(d: &SeifertData) -> IntegerMatrix {
    let m = d.pairs.len();
    let mut rel = IntegerMatrix::zeros(m + 1, m + 1);
    for (j, &(a, b)) in d.pairs.iter().enumerate() {
        rel[(j, j)] = a.into();
        rel[(j, m)] = b.into();
        rel[(m, j)] = BigInt::one();
    }
    rel[(m, m)] = BigInt::from(-d.euler);
    rel
}

pub fn is_chern_zero(d: &SeifertData) -> bool {
    signed_torsion_integer(d).is_zero()
}
