//! Serializable reports. Exact quantities are strings (`"p/q"` or decimal
//! integers); reals are JSON numbers in shortest round-trip form.

use std::fmt::Write as _;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::dedekind::{adiabatic_eta, dedekind_sum_exact, dedekind_sum_float, dedekind_sum_recursive, DedekindArgs};
use crate::error::{Error, Result, Warning};
use crate::homology::{first_homology, moduli_description, torsion_h2_order};
use crate::partition::{
    m_exponent, partition_bound, partition_magnitude, phase_factor, z_partition_function,
    zbar_partition_function, PartitionInputs,
};
use crate::seifert::{chern_number, torsion_order_integer, RawSeifert, SeifertData};
use crate::torsion::{isotropy_volume, k0_deriv0, scalar_torsion_symbol, torsion_prefactor};

fn strings(xs: &[BigInt]) -> Vec<String> {
    xs.iter().map(ToString::to_string).collect()
}

fn warning_strings(ws: &[Warning]) -> Vec<String> {
    ws.iter().map(ToString::to_string).collect()
}

/// Human-readable and single-line renderings alongside JSON.
pub trait Render: Serialize {
    fn text(&self) -> String;
    fn line(&self) -> String;
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HomologySummary {
    pub rank: u64,
    pub invariant_factors: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScalarTorsion {
    pub value: f64,
    pub symbolic: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VolumeSummary {
    pub value: f64,
    pub radicand: String,
    pub exponent: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ModuliSummary {
    pub components: String,
    pub dimension: u64,
    pub torsion_factors: Vec<String>,
}

/// Full bundle of invariants for one Seifert datum.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub input: RawSeifert,
    pub canonical: String,
    pub gauge_rank: u32,
    pub c1: String,
    pub torsion_order: String,
    pub homology: HomologySummary,
    pub eta0: String,
    pub scalar_torsion: ScalarTorsion,
    pub prefactor: f64,
    pub k_x: f64,
    pub symplectic_volume: VolumeSummary,
    pub m_x: i64,
    pub moduli: ModuliSummary,
    pub warnings: Vec<String>,
}

fn volume_exponent(gauge_rank: u32) -> String {
    if gauge_rank % 2 == 0 {
        (gauge_rank / 2).to_string()
    } else {
        format!("{gauge_rank}/2")
    }
}

pub fn invariant_report(d: &SeifertData, gauge_rank: u32) -> Result<InvariantReport> {
    let torsion = torsion_prefactor(d, gauge_rank)?;
    let moduli = moduli_description(d, gauge_rank)?;
    let h1 = first_homology(d);
    let symbol = scalar_torsion_symbol(d);
    let report = torsion.value;
    Ok(InvariantReport {
        input: d.clone().into(),
        canonical: d.to_string(),
        gauge_rank,
        c1: chern_number(d).to_string(),
        torsion_order: torsion_order_integer(d).to_string(),
        homology: HomologySummary { rank: h1.rank, invariant_factors: strings(&h1.invariant_factors) },
        eta0: adiabatic_eta(d, gauge_rank)?.to_string(),
        scalar_torsion: ScalarTorsion { value: report.scalar_torsion, symbolic: symbol.to_string() },
        prefactor: report.prefactor,
        k_x: report.volume_coefficient,
        symplectic_volume: VolumeSummary {
            value: report.symplectic_volume.value,
            radicand: report.symplectic_volume.radicand.to_string(),
            exponent: volume_exponent(gauge_rank),
        },
        m_x: m_exponent(d, gauge_rank)?,
        moduli: ModuliSummary {
            components: moduli.component_count.to_string(),
            dimension: moduli.component_dimension,
            torsion_factors: strings(&moduli.torsion_factors),
        },
        warnings: warning_strings(&torsion.warnings),
    })
}

impl Render for InvariantReport {
    fn text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "Seifert data       {}", self.canonical);
        let _ = writeln!(s, "gauge rank N       {}", self.gauge_rank);
        let _ = writeln!(s, "c1                 {}", self.c1);
        let _ = writeln!(s, "|c1 * prod alpha|  {}", self.torsion_order);
        let _ = writeln!(
            s,
            "H1                 Z^{} + torsion [{}]",
            self.homology.rank,
            self.homology.invariant_factors.join(", ")
        );
        let _ = writeln!(s, "eta0               {}", self.eta0);
        let _ = writeln!(s, "scalar torsion     {} = {}", self.scalar_torsion.symbolic, self.scalar_torsion.value);
        let _ = writeln!(s, "sqrt(T) prefactor  {}", self.prefactor);
        let _ = writeln!(s, "K_X                {}", self.k_x);
        let _ = writeln!(
            s,
            "symplectic volume  {}^({}) = {}",
            self.symplectic_volume.radicand, self.symplectic_volume.exponent, self.symplectic_volume.value
        );
        let _ = writeln!(s, "m_X                {}", self.m_x);
        let _ = writeln!(
            s,
            "moduli space       {} component(s) of dimension {}",
            self.moduli.components, self.moduli.dimension
        );
        for w in &self.warnings {
            let _ = writeln!(s, "warning: {w}");
        }
        s
    }

    fn line(&self) -> String {
        format!(
            "{} c1={} torsion_order={} eta0={} scalar_torsion={} K_X={} m_X={} components={}",
            self.canonical,
            self.c1,
            self.torsion_order,
            self.eta0,
            self.scalar_torsion.symbolic,
            self.k_x,
            self.m_x,
            self.moduli.components
        )
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HomologyReport {
    pub canonical: String,
    pub gauge_rank: u32,
    pub c1: String,
    pub rank: u64,
    pub invariant_factors: Vec<String>,
    pub torsion_h1_order: String,
    pub torsion_h2_order: String,
    pub warnings: Vec<String>,
}

pub fn homology_report(d: &SeifertData, gauge_rank: u32) -> Result<HomologyReport> {
    let h1 = first_homology(d);
    let h2 = torsion_h2_order(d, gauge_rank)?;
    Ok(HomologyReport {
        canonical: d.to_string(),
        gauge_rank,
        c1: chern_number(d).to_string(),
        rank: h1.rank,
        torsion_h1_order: h1.torsion_order().to_string(),
        invariant_factors: strings(&h1.invariant_factors),
        torsion_h2_order: h2.value.to_string(),
        warnings: warning_strings(&h2.warnings),
    })
}

impl Render for HomologyReport {
    fn text(&self) -> String {
        let mut s = format!(
            "H1({}) = Z^{} + torsion [{}]\n|Tors H2| (N = {}) = {}\n",
            self.canonical,
            self.rank,
            self.invariant_factors.join(", "),
            self.gauge_rank,
            self.torsion_h2_order
        );
        for w in &self.warnings {
            let _ = writeln!(s, "warning: {w}");
        }
        s
    }

    fn line(&self) -> String {
        format!(
            "{} rank={} factors=[{}] tors_h2={}",
            self.canonical,
            self.rank,
            self.invariant_factors.join(","),
            self.torsion_h2_order
        )
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct K0DerivativeSummary {
    pub numeric: f64,
    pub closed_form: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IsotropySummary {
    pub value: f64,
    pub radicand: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TorsionSummary {
    pub canonical: String,
    pub gauge_rank: u32,
    pub scalar_torsion: ScalarTorsion,
    pub k0_deriv0: K0DerivativeSummary,
    pub prefactor: f64,
    pub k_x: f64,
    pub symplectic_volume: VolumeSummary,
    pub isotropy_volume: Option<IsotropySummary>,
    pub warnings: Vec<String>,
}

pub fn torsion_summary(d: &SeifertData, gauge_rank: u32) -> Result<TorsionSummary> {
    let t = torsion_prefactor(d, gauge_rank)?;
    let deriv = k0_deriv0(d)?;
    let isotropy = match isotropy_volume(d) {
        Ok(v) => Some(IsotropySummary { value: v.value, radicand: v.radicand.to_string() }),
        Err(Error::NonPositiveChern(_)) => None,
        Err(e) => return Err(e),
    };
    Ok(TorsionSummary {
        canonical: d.to_string(),
        gauge_rank,
        scalar_torsion: ScalarTorsion {
            value: t.value.scalar_torsion,
            symbolic: scalar_torsion_symbol(d).to_string(),
        },
        k0_deriv0: K0DerivativeSummary { numeric: deriv.numeric, closed_form: deriv.closed_form },
        prefactor: t.value.prefactor,
        k_x: t.value.volume_coefficient,
        symplectic_volume: VolumeSummary {
            value: t.value.symplectic_volume.value,
            radicand: t.value.symplectic_volume.radicand.to_string(),
            exponent: volume_exponent(gauge_rank),
        },
        isotropy_volume: isotropy,
        warnings: warning_strings(&t.warnings),
    })
}

impl Render for TorsionSummary {
    fn text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "Seifert data          {}", self.canonical);
        let _ = writeln!(s, "scalar torsion        {} = {}", self.scalar_torsion.symbolic, self.scalar_torsion.value);
        let _ = writeln!(s, "K0'(0) closed form    {}", self.k0_deriv0.closed_form);
        let _ = writeln!(s, "K0'(0) numeric        {}", self.k0_deriv0.numeric);
        let _ = writeln!(s, "sqrt(T) prefactor     {}", self.prefactor);
        let _ = writeln!(s, "K_X                   {}", self.k_x);
        let _ = writeln!(
            s,
            "symplectic volume     {}^({}) = {}",
            self.symplectic_volume.radicand, self.symplectic_volume.exponent, self.symplectic_volume.value
        );
        match &self.isotropy_volume {
            Some(v) => {
                let _ = writeln!(s, "isotropy volume       sqrt({}) = {}", v.radicand, v.value);
            }
            None => {
                let _ = writeln!(s, "isotropy volume       undefined (c1 <= 0)");
            }
        }
        for w in &self.warnings {
            let _ = writeln!(s, "warning: {w}");
        }
        s
    }

    fn line(&self) -> String {
        format!(
            "{} scalar_torsion={} prefactor={} K_X={} volume={}",
            self.canonical, self.scalar_torsion.symbolic, self.prefactor, self.k_x, self.symplectic_volume.value
        )
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DedekindReport {
    pub alpha: i64,
    pub beta: i64,
    pub exact: String,
    pub recursive: String,
    pub float: f64,
}

pub fn dedekind_report(alpha: i64, beta: i64) -> Result<DedekindReport> {
    let args = DedekindArgs::new(alpha, beta)?;
    Ok(DedekindReport {
        alpha,
        beta,
        exact: dedekind_sum_exact(args).to_string(),
        recursive: dedekind_sum_recursive(args).to_string(),
        float: dedekind_sum_float(args),
    })
}

impl Render for DedekindReport {
    fn text(&self) -> String {
        format!("{}\n", self.exact)
    }

    fn line(&self) -> String {
        self.exact.clone()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PartitionReport {
    pub canonical: String,
    pub gauge_rank: u32,
    pub level: u64,
    pub m_x: i64,
    pub torsion_order: String,
    /// `|Z|` from the torsion-order formula.
    pub magnitude: f64,
    /// `|Zbar|` assembled from components.
    pub zbar_magnitude: f64,
    pub bound: f64,
    pub phase_factor: [f64; 2],
    pub zbar: [f64; 2],
    pub z: Option<[f64; 2]>,
}

pub fn partition_report(inputs: &PartitionInputs) -> Result<PartitionReport> {
    let magnitude = partition_magnitude(inputs)?;
    let zbar = zbar_partition_function(inputs)?;
    let z = z_partition_function(inputs)?;
    let phase = phase_factor(&inputs.data, inputs.gauge_rank)?;
    Ok(PartitionReport {
        canonical: inputs.data.to_string(),
        gauge_rank: inputs.gauge_rank,
        level: inputs.level,
        m_x: m_exponent(&inputs.data, inputs.gauge_rank)?,
        torsion_order: torsion_h2_order(&inputs.data, inputs.gauge_rank)?.value.to_string(),
        magnitude,
        zbar_magnitude: zbar.norm(),
        bound: partition_bound(&inputs.data, inputs.gauge_rank, inputs.level)?,
        phase_factor: [phase.re, phase.im],
        zbar: [zbar.re, zbar.im],
        z: z.map(|c| [c.re, c.im]),
    })
}

impl Render for PartitionReport {
    fn text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "Seifert data       {}", self.canonical);
        let _ = writeln!(s, "level k            {}", self.level);
        let _ = writeln!(s, "gauge rank N       {}", self.gauge_rank);
        let _ = writeln!(s, "m_X                {}", self.m_x);
        let _ = writeln!(s, "|Tors H2|          {}", self.torsion_order);
        let _ = writeln!(s, "|Z|                {}", self.magnitude);
        let _ = writeln!(s, "|Zbar|             {}", self.zbar_magnitude);
        let _ = writeln!(s, "bound              {}", self.bound);
        let _ = writeln!(s, "eta phase          {} + {}i", self.phase_factor[0], self.phase_factor[1]);
        if let Some([re, im]) = self.z {
            let _ = writeln!(s, "Z                  {re} + {im}i");
        }
        s
    }

    fn line(&self) -> String {
        format!("{} k={} |Z|={}", self.canonical, self.level, self.magnitude)
    }
}
