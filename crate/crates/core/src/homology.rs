//! Smith normal form over the integers and the homology of a Seifert
//! manifold derived from it.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result, Warned, Warning};
use crate::matrix::IntegerMatrix;
use crate::seifert::{is_chern_zero, relation_matrix, torsion_order_integer, SeifertData};

/// `U * A * V = D` with `U`, `V` unimodular and `D` diagonal in Smith form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub u: IntegerMatrix,
    pub d: IntegerMatrix,
    pub v: IntegerMatrix,
}

impl SmithDecomposition {
    pub fn diagonal(&self) -> Vec<BigInt> {
        self.d.diagonal()
    }
}

/// Finitely generated abelian group `Z^rank + Z/d1 + ... + Z/dr`, `d_i | d_{i+1}`,
/// every `d_i >= 2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianGroupDecomposition {
    pub rank: u64,
    pub invariant_factors: Vec<BigInt>,
}

impl AbelianGroupDecomposition {
    pub fn torsion_order(&self) -> BigInt {
        self.invariant_factors.iter().product()
    }
}

/// Moduli space of flat connections: `component_count` tori of real
/// dimension `component_dimension`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuliDescription {
    pub component_count: BigInt,
    pub component_dimension: u64,
    pub gauge_rank: u32,
    pub torsion_factors: Vec<BigInt>,
}

/// Smith normal form by repeated minimal-pivot elimination.
///
/// Each round brings the nonzero entry of least absolute value in the
/// trailing block to the pivot position (ties broken by row, then column),
/// clears its row and column by Euclidean division, and folds in any row
/// the pivot fails to divide. Panics on an empty matrix.
pub fn smith_normal_form(a: &IntegerMatrix) -> SmithDecomposition {
    let (rows, cols) = (a.rows(), a.cols());
    let mut d = a.clone();
    let mut u = IntegerMatrix::identity(rows);
    let mut v = IntegerMatrix::identity(cols);

    for t in 0..rows.min(cols) {
        loop {
            let Some((pi, pj)) = min_pivot(&d, t) else {
                // trailing block is zero: done
                return SmithDecomposition { u, d, v };
            };
            d.swap_rows(t, pi);
            u.swap_rows(t, pi);
            d.swap_cols(t, pj);
            v.swap_cols(t, pj);

            let pivot = d[(t, t)].clone();
            let mut dirty = false;
            for i in t + 1..rows {
                if d[(i, t)].is_zero() {
                    continue;
                }
                let q = -d[(i, t)].div_floor(&pivot);
                d.add_row_multiple(i, t, &q);
                u.add_row_multiple(i, t, &q);
                dirty |= !d[(i, t)].is_zero();
            }
            for j in t + 1..cols {
                if d[(t, j)].is_zero() {
                    continue;
                }
                let q = -d[(t, j)].div_floor(&pivot);
                d.add_col_multiple(j, t, &q);
                v.add_col_multiple(j, t, &q);
                dirty |= !d[(t, j)].is_zero();
            }
            if dirty {
                continue;
            }
            // Row and column are clear; the pivot must divide the rest.
            let offender = (t + 1..rows)
                .find(|&i| (t + 1..cols).any(|j| !d[(i, j)].is_multiple_of(&pivot)));
            match offender {
                Some(i) => {
                    let one = BigInt::one();
                    d.add_row_multiple(t, i, &one);
                    u.add_row_multiple(t, i, &one);
                }
                None => {
                    if pivot.is_negative() {
                        d.negate_row(t);
                        u.negate_row(t);
                    }
                    break;
                }
            }
        }
    }
    SmithDecomposition { u, d, v }
}

fn min_pivot(m: &IntegerMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, BigInt)> = None;
    for i in t..m.rows() {
        for j in t..m.cols() {
            let e = &m[(i, j)];
            if e.is_zero() {
                continue;
            }
            let abs = e.abs();
            if best.as_ref().map_or(true, |(_, _, b)| abs < *b) {
                best = Some((i, j, abs));
            }
        }
    }
    best.map(|(i, j, _)| (i, j))
}

/// Cokernel of an integer matrix `A: Z^cols -> Z^rows`.
pub fn cokernel(a: &IntegerMatrix) -> AbelianGroupDecomposition {
    let snf = smith_normal_form(a);
    let diag = snf.diagonal();
    let nonzero = diag.iter().filter(|x| !x.is_zero()).count();
    AbelianGroupDecomposition {
        rank: (a.rows() - nonzero) as u64,
        invariant_factors: diag.into_iter().filter(|x| *x > BigInt::one()).collect(),
    }
}

/// `H1(X; Z) = Z^{2g} + coker(relation matrix)`.
pub fn first_homology(d: &SeifertData) -> AbelianGroupDecomposition {
    let mut h = cokernel(&relation_matrix(d));
    h.rank += 2 * u64::from(d.genus());
    h
}

/// `|Tors H^2(X; Z^N)| = |Tors H1(X; Z)|^N`.
///
/// When `c1 = 0` the order is still returned, with a warning, and the
/// closed-form identity with `|c1 * prod alpha|^N` is not asserted.
pub fn torsion_h2_order(d: &SeifertData, gauge_rank: u32) -> Result<Warned<BigInt>> {
    if gauge_rank == 0 {
        return Err(Error::InvalidGaugeRank);
    }
    let order = first_homology(d).torsion_order().pow(gauge_rank);
    if is_chern_zero(d) {
        return Ok(Warned { value: order, warnings: vec![Warning::ChernNumberZero] });
    }
    debug_assert_eq!(order, torsion_order_integer(d).pow(gauge_rank));
    Ok(Warned::clean(order))
}

/// Invariant-factor chain of the direct sum of cyclic groups `Z/f` for `f` in `factors`.
pub fn rechain(factors: &[BigInt]) -> Vec<BigInt> {
    if factors.is_empty() {
        return Vec::new();
    }
    let n = factors.len();
    let mut diag = IntegerMatrix::zeros(n, n);
    for (i, f) in factors.iter().enumerate() {
        diag[(i, i)] = f.clone();
    }
    cokernel(&diag).invariant_factors
}

pub fn moduli_description(d: &SeifertData, gauge_rank: u32) -> Result<ModuliDescription> {
    if gauge_rank == 0 {
        return Err(Error::InvalidGaugeRank);
    }
    if is_chern_zero(d) {
        return Err(Error::ChernNumberZero);
    }
    let h1 = first_homology(d);
    let replicated: Vec<BigInt> = (0..gauge_rank)
        .flat_map(|_| h1.invariant_factors.iter().cloned())
        .collect();
    Ok(ModuliDescription {
        component_count: torsion_h2_order(d, gauge_rank)?.value,
        component_dimension: 2 * u64::from(d.genus()) * u64::from(gauge_rank),
        gauge_rank,
        torsion_factors: rechain(&replicated),
    })
}

/// All characters `(k_1, ..., k_r)`, `0 <= k_i < d_i`, of the torsion part,
/// in lexicographic order.
pub fn enumerate_torsion_characters(
    decomp: &AbelianGroupDecomposition,
    cap: u64,
) -> Result<Vec<Vec<u64>>> {
    let order = decomp.torsion_order();
    let too_big = || Error::CapExceeded { order: order.to_string(), cap };
    if order > BigInt::from(cap) {
        return Err(too_big());
    }
    let moduli: Vec<u64> = decomp
        .invariant_factors
        .iter()
        .map(|f| f.to_u64().ok_or_else(too_big))
        .collect::<Result<_>>()?;
    let mut out = vec![Vec::new()];
    for &m in &moduli {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (0..m).map(move |k| {
                    let mut t = prefix.clone();
                    t.push(k);
                    t
                })
            })
            .collect();
    }
    Ok(out)
}
