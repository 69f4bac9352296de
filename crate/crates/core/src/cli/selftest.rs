//! Residual battery comparing the zeta kernels and torsion functions with
//! known closed forms.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::seifert::SeifertData;
use crate::torsion::{k0_deriv0, k0_function, scalar_torsion_trivial, K0Params};
use crate::zeta::{hurwitz_zeta, hurwitz_zeta_deriv0, hurwitz_zeta_deriv0_numeric, riemann_zeta};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub value: f64,
    pub expected: f64,
    pub residual: f64,
    pub tolerance: f64,
    pub pass: bool,
}

fn check(name: String, value: f64, expected: f64, tolerance: f64) -> Check {
    let residual = (value - expected).abs();
    Check { name, value, expected, residual, tolerance, pass: residual <= tolerance }
}

fn fixtures() -> Vec<SeifertData> {
    [
        (0, -1, vec![(2, 1), (3, 1), (5, 1)]),
        (1, 1, vec![]),
        (0, 2, vec![(3, 1), (3, 1)]),
        (2, -1, vec![(4, 3), (7, 2)]),
    ]
    .into_iter()
    .map(|(g, n, p)| SeifertData::new(g, n, p).expect("valid fixture"))
    .collect()
}

pub fn run_battery() -> Result<Vec<Check>> {
    let ln2pi = (2.0 * PI).ln();
    let mut out = vec![
        check("zeta(0)".into(), riemann_zeta(0.0)?, -0.5, 1e-10),
        check("zeta'(0) closed form".into(), hurwitz_zeta_deriv0(1.0)?, -ln2pi / 2.0, 1e-10),
        check("zeta'(0) finite difference".into(), hurwitz_zeta_deriv0_numeric(1.0)?, -ln2pi / 2.0, 1e-8),
        check("zeta(2)".into(), riemann_zeta(2.0)?, PI * PI / 6.0, 1e-10),
        check("zeta(-1)".into(), riemann_zeta(-1.0)?, -1.0 / 12.0, 1e-10),
    ];
    for s in [-2.0, -1.0, -0.5, 0.0, 0.5 - 1e-6, 2.0, 3.0] {
        out.push(check(
            format!("zeta({s}, 1/2) = (2^s - 1) zeta({s})"),
            hurwitz_zeta(s, 0.5)?,
            (2f64.powf(s) - 1.0) * riemann_zeta(s)?,
            1e-9,
        ));
    }
    for i in 1..=9 {
        let theta = i as f64 / 10.0;
        out.push(check(format!("zeta(0, {theta})"), hurwitz_zeta(0.0, theta)?, 0.5 - theta, 1e-10));
    }
    for theta in [0.25, 0.5, 0.75, 1.0] {
        out.push(check(
            format!("d/ds zeta(s, {theta}) at 0: closed vs difference"),
            hurwitz_zeta_deriv0(theta)?,
            hurwitz_zeta_deriv0_numeric(theta)?,
            1e-7,
        ));
    }
    for d in fixtures() {
        out.push(check(format!("K0(0) for {d}"), k0_function(&K0Params::trivial(&d), 0.0)?, 0.0, 1e-9));
        let deriv = k0_deriv0(&d)?;
        let expected = scalar_torsion_trivial(&d);
        let numeric = (-deriv.numeric / 2.0).exp();
        let mut c = check(format!("exp(-K0'(0)/2) for {d} (relative)"), numeric, expected, 1e-6);
        c.residual /= expected;
        c.pass = c.residual <= c.tolerance;
        out.push(c);
    }
    Ok(out)
}
