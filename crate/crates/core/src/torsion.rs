//! Torsion spectral functions `K_0(s)`, `K_theta(s)` and the closed-form
//! analytic torsion of a Seifert manifold with its volume-form normalization.

use std::f64::consts::PI;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result, Warned, Warning};
use crate::seifert::{chern_number, torsion_order_integer, SeifertData};
use crate::zeta::{hurwitz_zeta, riemann_zeta, DERIV_STEP};

/// Exclusion band around the pole of `zeta(2s)` at `s = 1/2`.
pub const SINGULAR_BAND: f64 = 1e-9;

fn check_angle(theta: f64) -> Result<()> {
    if theta > 0.0 && theta < 1.0 {
        Ok(())
    } else {
        Err(Error::AngleOutOfRange(theta))
    }
}

fn check_alpha(alpha: i64) -> Result<()> {
    if alpha >= 1 {
        Ok(())
    } else {
        Err(Error::NonPositiveAlpha(1))
    }
}

/// Inputs of the `theta = 0` torsion function.
#[derive(Debug, Clone, PartialEq)]
pub struct K0Params {
    /// `K(X, rho) = 2 dim H^0 - dim H^1`.
    pub k_euler: i64,
    /// `(alpha_i, dim ker(1 - chi(rho(c_i))))` per marked fiber.
    pub zero_kernel_dims: Vec<(i64, u64)>,
    /// `(alpha_i, theta_ij)` for the nonzero exceptional angles.
    pub nonzero_angles: Vec<(i64, f64)>,
}

impl K0Params {
    pub fn new(
        k_euler: i64,
        zero_kernel_dims: Vec<(i64, u64)>,
        nonzero_angles: Vec<(i64, f64)>,
    ) -> Result<Self> {
        for &(alpha, _) in &zero_kernel_dims {
            check_alpha(alpha)?;
        }
        for &(alpha, theta) in &nonzero_angles {
            check_alpha(alpha)?;
            check_angle(theta)?;
        }
        Ok(K0Params { k_euler, zero_kernel_dims, nonzero_angles })
    }

    /// Parameters of the trivial representation: `K = 2 - 2g`, every
    /// kernel one-dimensional, no nonzero angles.
    pub fn trivial(d: &SeifertData) -> Self {
        K0Params {
            k_euler: 2 - 2 * i64::from(d.genus()),
            zero_kernel_dims: d.alphas().map(|a| (a, 1)).collect(),
            nonzero_angles: Vec::new(),
        }
    }
}

/// Inputs of one irreducible `theta`-component of the torsion function.
#[derive(Debug, Clone, PartialEq)]
pub struct KThetaParams {
    pub dim_e_theta: u64,
    /// Orbifold Euler characteristic of the base.
    pub chi_sigma_star: BigRational,
    pub theta: f64,
    /// `(alpha_i, theta_ij)` pairs.
    pub exceptional_terms: Vec<(i64, f64)>,
}

impl KThetaParams {
    pub fn new(
        dim_e_theta: u64,
        chi_sigma_star: BigRational,
        theta: f64,
        exceptional_terms: Vec<(i64, f64)>,
    ) -> Result<Self> {
        check_angle(theta)?;
        for &(alpha, t) in &exceptional_terms {
            check_alpha(alpha)?;
            check_angle(t)?;
        }
        Ok(KThetaParams { dim_e_theta, chi_sigma_star, theta, exceptional_terms })
    }
}

fn check_singular(s: f64) -> Result<()> {
    if (2.0 * s - 1.0).abs() < SINGULAR_BAND {
        Err(Error::SingularPoint)
    } else {
        Ok(())
    }
}

/// `zeta(2s, theta) + zeta(2s, 1 - theta)`
fn symmetric_pair(s: f64, theta: f64) -> Result<f64> {
    Ok(hurwitz_zeta(2.0 * s, theta)? + hurwitz_zeta(2.0 * s, 1.0 - theta)?)
}

/// `K_0(s) = K (2 zeta(2s) + 1) + 2 zeta(2s) sum_i dim_i (alpha_i^{-2s} - 1)
///         + sum alpha_i^{-2s} (zeta(2s, theta_ij) + zeta(2s, 1 - theta_ij))`
pub fn k0_function(p: &K0Params, s: f64) -> Result<f64> {
    check_singular(s)?;
    let z = riemann_zeta(2.0 * s)?;
    let mut value = p.k_euler as f64 * (2.0 * z + 1.0);
    let kernel: f64 = p
        .zero_kernel_dims
        .iter()
        .map(|&(alpha, dim)| dim as f64 * (-2.0 * s * (alpha as f64).ln()).exp_m1())
        .sum();
    value += 2.0 * z * kernel;
    for &(alpha, theta) in &p.nonzero_angles {
        value += (alpha as f64).powf(-2.0 * s) * symmetric_pair(s, theta)?;
    }
    Ok(value)
}

/// `K_theta(s) = dim(E^theta) chi(Sigma*) (zeta(2s, theta) + zeta(2s, 1 - theta))
///             + sum_ij alpha_i^{-2s} (zeta(2s, theta_ij) + zeta(2s, 1 - theta_ij))`
pub fn k_theta_function(p: &KThetaParams, s: f64) -> Result<f64> {
    check_singular(s)?;
    check_angle(p.theta)?;
    let chi = p.chi_sigma_star.to_f64().unwrap_or(f64::NAN);
    let mut value = 0.0;
    if p.dim_e_theta != 0 && !p.chi_sigma_star.is_zero() {
        value += p.dim_e_theta as f64 * chi * symmetric_pair(s, p.theta)?;
    }
    for &(alpha, theta) in &p.exceptional_terms {
        check_angle(theta)?;
        value += (alpha as f64).powf(-2.0 * s) * symmetric_pair(s, theta)?;
    }
    Ok(value)
}

/// `K_0'(0)` for the trivial representation, by central difference and in
/// closed form `(4g - 4) ln(2 pi) + 2 sum ln alpha_i`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct K0Derivative {
    pub numeric: f64,
    pub closed_form: f64,
}

pub fn k0_deriv0(d: &SeifertData) -> Result<K0Derivative> {
    let p = K0Params::trivial(d);
    let h = DERIV_STEP;
    let numeric = (k0_function(&p, h)? - k0_function(&p, -h)?) / (2.0 * h);
    let log_alphas: f64 = d.alphas().map(|a| (a as f64).ln()).sum();
    let closed_form = (4.0 * f64::from(d.genus()) - 4.0) * (2.0 * PI).ln() + 2.0 * log_alphas;
    Ok(K0Derivative { numeric, closed_form })
}

/// Exact symbolic form `(2 pi)^exponent / denominator`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorsionSymbol {
    pub exponent: i64,
    pub denominator: BigInt,
}

impl TorsionSymbol {
    pub fn value(&self) -> f64 {
        let e = i32::try_from(self.exponent).expect("exponent fits in i32");
        (2.0 * PI).powi(e) / self.denominator.to_f64().unwrap_or(f64::INFINITY)
    }
}

impl fmt::Display for TorsionSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(2π)^{}/{}", self.exponent, self.denominator)
    }
}

pub fn scalar_torsion_symbol(d: &SeifertData) -> TorsionSymbol {
    TorsionSymbol { exponent: 2 - 2 * i64::from(d.genus()), denominator: d.alpha_product() }
}

/// Scalar torsion at the trivial representation, `(2 pi)^{2 - 2g} / prod alpha_i`.
pub fn scalar_torsion_trivial(d: &SeifertData) -> f64 {
    scalar_torsion_symbol(d).value()
}

/// `|c1 * prod alpha|^{N/2}` kept as its integer radicand.
#[derive(Debug, Clone, PartialEq)]
pub struct SymplecticVolume {
    pub value: f64,
    pub radicand: BigInt,
    pub gauge_rank: u32,
}

impl SymplecticVolume {
    /// `volume^2 = radicand^N`, exactly.
    pub fn squared(&self) -> BigInt {
        self.radicand.pow(self.gauge_rank)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TorsionReport {
    pub scalar_torsion: f64,
    /// `(2 pi)^{-Ng} K_X`
    pub prefactor: f64,
    /// `K_X = |c1 * prod alpha|^{-N/2}`
    pub volume_coefficient: f64,
    pub symplectic_volume: SymplecticVolume,
}

/// Square-root torsion normalization relative to the base `h^0 = 2 pi` of `H^0`.
///
/// Uses `|c1|`; warns when `c1 < 0`.
pub fn torsion_prefactor(d: &SeifertData, gauge_rank: u32) -> Result<Warned<TorsionReport>> {
    if gauge_rank == 0 {
        return Err(Error::InvalidGaugeRank);
    }
    let c1 = chern_number(d);
    if c1.is_zero() {
        return Err(Error::ChernNumberZero);
    }
    let mut warnings = Vec::new();
    if c1.is_negative() {
        warnings.push(Warning::NegativeChern(c1));
    }
    let radicand = torsion_order_integer(d);
    let r = radicand.to_f64().unwrap_or(f64::INFINITY);
    let half_rank = f64::from(gauge_rank) / 2.0;
    let volume_coefficient = r.powf(-half_rank);
    let genus_exp = i32::try_from(u64::from(gauge_rank) * u64::from(d.genus()))
        .expect("N * g fits in i32");
    let report = TorsionReport {
        scalar_torsion: scalar_torsion_trivial(d),
        prefactor: (2.0 * PI).powi(-genus_exp) * volume_coefficient,
        volume_coefficient,
        symplectic_volume: SymplecticVolume { value: r.powf(half_rank), radicand, gauge_rank },
    };
    Ok(Warned { value: report, warnings })
}

/// Volume of the isotropy circle, `sqrt(c1)`, with its exact radicand.
#[derive(Debug, Clone, PartialEq)]
pub struct IsotropyVolume {
    pub value: f64,
    pub radicand: BigRational,
}

pub fn isotropy_volume(d: &SeifertData) -> Result<IsotropyVolume> {
    let c1 = chern_number(d);
    if !c1.is_positive() {
        return Err(Error::NonPositiveChern(c1));
    }
    let value = c1.to_f64().unwrap_or(f64::NAN).sqrt();
    Ok(IsotropyVolume { value, radicand: c1 })
}
