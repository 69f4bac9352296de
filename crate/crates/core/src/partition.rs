//! Computable parts of the abelian Chern-Simons partition functions:
//! the level exponent, the eta phase, per-component magnitudes and the
//! total magnitude.
//!
//! Chern-Simons values of the flat connections, one per flat bundle class,
//! and the gravitational phase are inputs. Classes are matched to
//! `cs_values` in the lexicographic character order of
//! [`enumerate_torsion_characters`](crate::homology::enumerate_torsion_characters).

use std::f64::consts::PI;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use crate::dedekind::adiabatic_eta;
use crate::error::{Error, Result};
use crate::homology::{first_homology, torsion_h2_order};
use crate::seifert::{is_chern_zero, ExactRational, SeifertData};
use crate::torsion::torsion_prefactor;

/// Below this length the phase sum is reduced sequentially.
const PAIRWISE_LEAF: usize = 4096;

#[derive(Debug, Clone, PartialEq)]
pub struct PartitionInputs {
    pub data: SeifertData,
    pub gauge_rank: u32,
    pub level: u64,
    /// `CS_{X,P}(A_P)` mod 2 pi, one per flat bundle class.
    pub cs_values: Vec<f64>,
    /// Real exponent `phi` of the gravitational counterterm `e^{i phi}`.
    pub grav_phase: Option<f64>,
}

fn check_rank_and_level(gauge_rank: u32, level: u64) -> Result<()> {
    if gauge_rank == 0 {
        return Err(Error::InvalidGaugeRank);
    }
    if level == 0 {
        return Err(Error::InvalidLevel);
    }
    Ok(())
}

/// `m_X = (N/2)(dim H^1 - 2 dim H^0) = N (g - 1)` when `c1 != 0`.
pub fn m_exponent(d: &SeifertData, gauge_rank: u32) -> Result<i64> {
    if gauge_rank == 0 {
        return Err(Error::InvalidGaugeRank);
    }
    if is_chern_zero(d) {
        return Err(Error::ChernNumberZero);
    }
    let b1 = i64::try_from(first_homology(d).rank).expect("rank fits in i64");
    let b0 = 1;
    let twice = i64::from(gauge_rank) * (b1 - 2 * b0);
    debug_assert!(twice % 2 == 0);
    Ok(twice / 2)
}

/// `exp(i pi (N/4 - eta0/2))`, with the exponent reduced mod 2 exactly.
pub fn phase_from_eta(eta0: &ExactRational, gauge_rank: u32) -> Complex64 {
    let r = BigRational::new(gauge_rank.into(), 4.into()) - eta0 / BigRational::from_integer(2.into());
    let two = BigRational::from_integer(2.into());
    let turns = (&r / &two).floor();
    let reduced = r - turns * two;
    let angle = PI * reduced.to_f64().unwrap_or(f64::NAN);
    Complex64::new(angle.cos(), angle.sin())
}

pub fn phase_factor(d: &SeifertData, gauge_rank: u32) -> Result<Complex64> {
    Ok(phase_from_eta(&adiabatic_eta(d, gauge_rank)?, gauge_rank))
}

/// `k^m` as an exact rational.
pub fn level_power(level: u64, m: i64) -> ExactRational {
    let base = BigInt::from(level);
    let pow = base.pow(m.unsigned_abs() as u32);
    if m >= 0 {
        BigRational::from_integer(pow)
    } else {
        BigRational::new(1.into(), pow)
    }
}

fn level_power_f64(level: u64, m: i64) -> f64 {
    level_power(level, m).to_f64().unwrap_or(f64::NAN)
}

/// `|Zbar(X, P, k)| = k^{m_X} K_X`; the unit form integrates to 1 over each component.
pub fn zbar_component_magnitude(d: &SeifertData, gauge_rank: u32, level: u64) -> Result<f64> {
    check_rank_and_level(gauge_rank, level)?;
    let m = m_exponent(d, gauge_rank)?;
    let kx = torsion_prefactor(d, gauge_rank)?.value.volume_coefficient;
    Ok(level_power_f64(level, m) * kx)
}

/// `sum_P exp(i k cs_P)`, reduced pairwise in a fixed tree so the result
/// does not depend on thread scheduling.
pub fn phase_sum(level: u64, cs_values: &[f64]) -> Complex64 {
    let k = level as f64;
    fn reduce(k: f64, xs: &[f64]) -> Complex64 {
        if xs.len() <= PAIRWISE_LEAF {
            return xs.iter().map(|&cs| Complex64::from_polar(1.0, k * cs)).sum();
        }
        let (lo, hi) = xs.split_at(xs.len() / 2);
        let (a, b) = rayon::join(|| reduce(k, lo), || reduce(k, hi));
        a + b
    }
    reduce(k, cs_values)
}

fn checked_torsion_order(inputs: &PartitionInputs) -> Result<BigInt> {
    check_rank_and_level(inputs.gauge_rank, inputs.level)?;
    if is_chern_zero(&inputs.data) {
        return Err(Error::ChernNumberZero);
    }
    let order = torsion_h2_order(&inputs.data, inputs.gauge_rank)?.value;
    if BigInt::from(inputs.cs_values.len()) != order {
        return Err(Error::CsLengthMismatch {
            expected: order.to_string(),
            got: inputs.cs_values.len(),
        });
    }
    Ok(order)
}

/// `|Z(X, k)| = k^{m_X} |sum_P exp(i k CS_P)| / sqrt|Tors H^2(X, Lambda)|`.
pub fn partition_magnitude(inputs: &PartitionInputs) -> Result<f64> {
    let order = checked_torsion_order(inputs)?;
    let m = m_exponent(&inputs.data, inputs.gauge_rank)?;
    let sum = phase_sum(inputs.level, &inputs.cs_values);
    Ok(level_power_f64(inputs.level, m) * sum.norm() / order.to_f64().unwrap_or(f64::NAN).sqrt())
}

/// `Zbar(X, k) = sum_P k^{m_X} e^{i k CS_P} e^{i pi (N/4 - eta0/2)} K_X`.
pub fn zbar_partition_function(inputs: &PartitionInputs) -> Result<Complex64> {
    checked_torsion_order(inputs)?;
    let component = zbar_component_magnitude(&inputs.data, inputs.gauge_rank, inputs.level)?;
    let phase = phase_factor(&inputs.data, inputs.gauge_rank)?;
    Ok(phase_sum(inputs.level, &inputs.cs_values) * phase * component)
}

/// `Z(X, k) = sum_P k^{m_X} e^{i k CS_P} e^{i phi} K_X` when the gravitational
/// exponent `phi` is supplied, `None` otherwise.
pub fn z_partition_function(inputs: &PartitionInputs) -> Result<Option<Complex64>> {
    checked_torsion_order(inputs)?;
    let Some(phi) = inputs.grav_phase else {
        return Ok(None);
    };
    let component = zbar_component_magnitude(&inputs.data, inputs.gauge_rank, inputs.level)?;
    let sum = phase_sum(inputs.level, &inputs.cs_values);
    Ok(Some(sum * Complex64::from_polar(1.0, phi) * component))
}

/// Upper bound `k^{m_X} sqrt|Tors H^2|`, attained when all phases agree.
pub fn partition_bound(d: &SeifertData, gauge_rank: u32, level: u64) -> Result<f64> {
    check_rank_and_level(gauge_rank, level)?;
    let m = m_exponent(d, gauge_rank)?;
    let order = torsion_h2_order(d, gauge_rank)?.value;
    Ok(level_power_f64(level, m) * order.to_f64().unwrap_or(f64::NAN).sqrt())
}
