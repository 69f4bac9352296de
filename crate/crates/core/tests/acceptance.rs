//! Acceptance suite: one line per criterion, nonzero exit on any failure.

mod common;

use std::f64::consts::PI;
use std::io::Write;
use std::process::{Command, Stdio};
use std::time::{Duration, Instant};

use common::*;
use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

use seifert_torsion::dedekind::{adiabatic_eta, dedekind_sum_exact, dedekind_sum_float, dedekind_sum_recursive, DedekindArgs};
use seifert_torsion::homology::{first_homology, moduli_description, torsion_h2_order};
use seifert_torsion::partition::{
    m_exponent, partition_bound, partition_magnitude, phase_factor, phase_sum, zbar_component_magnitude,
    zbar_partition_function, PartitionInputs,
};
use seifert_torsion::torsion::{k0_deriv0, k0_function, scalar_torsion_trivial, torsion_prefactor, K0Params};
use seifert_torsion::zeta::{hurwitz_zeta, hurwitz_zeta_deriv0, riemann_zeta};
use seifert_torsion::SeifertData;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit_secs: f64) -> Result<(), String> {
    ensure(elapsed.as_secs_f64() < limit_secs, || {
        format!("runtime {:.2}s exceeds {limit_secs}s", elapsed.as_secs_f64())
    })
}

/// AC1: SNF cokernel order = |n prod alpha + sum beta_j prod_{i != j} alpha_i|; Tors H^2 = its N-th power.
fn torsion_order_cross_derivation() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let samples = 120;
    for _ in 0..samples {
        let d = random_sasakian(&mut rng, 3, 5, 50);
        let closed = torsion_numerator_oracle(&d).abs();
        let h1 = first_homology(&d);
        ensure(h1.rank == 2 * u64::from(d.genus()), || format!("{d}: rank {} != 2g", h1.rank))?;
        ensure(h1.torsion_order() == closed, || format!("{d}: SNF order {} != {closed}", h1.torsion_order()))?;
        for n in 1..=3u32 {
            let h2 = torsion_h2_order(&d, n).map_err(|e| e.to_string())?;
            ensure(h2.value == closed.pow(n), || format!("{d}, N={n}: {} != {closed}^{n}", h2.value))?;
        }
    }
    within(start.elapsed(), 5.0)?;
    Ok(format!("{samples} random data, N in 1..=3, {:.2}s", start.elapsed().as_secs_f64()))
}

/// AC2: sawtooth = recursion exactly and cotangent float within 1e-9 for all
/// coprime pairs with alpha <= 500; reciprocity exact on 1000 random pairs <= 1e5.
fn dedekind_triple_agreement() -> Outcome {
    let start = Instant::now();
    let mut pairs = 0usize;
    let mut worst = 0.0f64;
    for alpha in 1..=500i64 {
        for beta in 0..alpha {
            if alpha.gcd(&beta) != 1 {
                continue;
            }
            let args = DedekindArgs::new(alpha, beta).unwrap();
            let exact = dedekind_sum_exact(args);
            let rec = dedekind_sum_recursive(args);
            ensure(exact == rec, || format!("s({alpha},{beta}): sawtooth {exact} != recursion {rec}"))?;
            let err = (dedekind_sum_float(args) - rational_to_f64(&exact)).abs();
            worst = worst.max(err);
            ensure(err < 1e-9, || format!("s({alpha},{beta}): float error {err:e}"))?;
            pairs += 1;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut checked = 0;
    while checked < 1000 {
        let a = rng.gen_range(1..=100_000i64);
        let b = rng.gen_range(1..=100_000i64);
        if a.gcd(&b) != 1 {
            continue;
        }
        let lhs = dedekind_sum_exact(DedekindArgs::new(a, b).unwrap())
            + dedekind_sum_exact(DedekindArgs::new(b, a).unwrap());
        ensure(lhs == reciprocity_rhs(a, b), || format!("reciprocity fails at ({a},{b})"))?;
        checked += 1;
    }
    within(start.elapsed(), 10.0)?;
    Ok(format!(
        "{pairs} exhaustive pairs (max float error {worst:.1e}), 1000 reciprocity pairs, {:.2}s",
        start.elapsed().as_secs_f64()
    ))
}

/// AC3: exp(-K0'(0)_numeric / 2) = (2 pi)^{2-2g} / prod alpha within 1e-6 relative.
fn torsion_scalar_identity() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut data = fixtures();
    data.extend((0..50).map(|_| random_seifert(&mut rng, 3, 5, 30)));
    let mut worst = 0.0f64;
    for d in &data {
        let alpha_prod: f64 = d.alphas().map(|a| a as f64).product();
        let expected = (2.0 * PI).powi(2 - 2 * d.genus() as i32) / alpha_prod;
        let numeric = (-k0_deriv0(d).map_err(|e| e.to_string())?.numeric / 2.0).exp();
        let err = rel_err(numeric, expected);
        worst = worst.max(err);
        ensure(err < 1e-6, || format!("{d}: {numeric} vs {expected} (rel {err:e})"))?;
        let shipped = scalar_torsion_trivial(d);
        ensure(rel_err(shipped, expected) < 1e-14, || format!("{d}: shipped {shipped} vs {expected}"))?;
    }
    let poincare = scalar_torsion_trivial(&data[0]);
    let closed = 4.0 * PI * PI / 30.0;
    ensure(rel_err(poincare, closed) < 1e-15, || format!("Poincare fixture {poincare} != {closed}"))?;
    within(start.elapsed(), 5.0)?;
    Ok(format!("{} data, max relative error {worst:.1e}, {:.2}s", data.len(), start.elapsed().as_secs_f64()))
}

/// AC4: zeta(0), zeta'(0), the half-shift identity and zeta(0, theta).
fn zeta_kernel_accuracy() -> Outcome {
    let start = Instant::now();
    let z0 = riemann_zeta(0.0).map_err(|e| e.to_string())?;
    ensure((z0 + 0.5).abs() <= 1e-10, || format!("zeta(0) = {z0}"))?;
    let dz0 = hurwitz_zeta_deriv0(1.0).map_err(|e| e.to_string())?;
    ensure((dz0 + (2.0 * PI).ln() / 2.0).abs() <= 1e-8, || format!("zeta'(0) = {dz0}"))?;
    let points = [-2.0, -1.0, -0.5, 0.0, 0.5 - 1e-6, 2.0, 3.0];
    for s in points {
        let lhs = hurwitz_zeta(s, 0.5).map_err(|e| e.to_string())?;
        let rhs = (2f64.powf(s) - 1.0) * riemann_zeta(s).map_err(|e| e.to_string())?;
        ensure((lhs - rhs).abs() <= 1e-9, || format!("half-shift at s={s}: {lhs} vs {rhs}"))?;
    }
    for i in 1..=9 {
        let theta = i as f64 / 10.0;
        let v = hurwitz_zeta(0.0, theta).map_err(|e| e.to_string())?;
        ensure((v - (0.5 - theta)).abs() <= 1e-10, || format!("zeta(0,{theta}) = {v}"))?;
    }
    within(start.elapsed(), 1.0)?;
    Ok(format!("7 half-shift points, 9 theta values, {:.3}s", start.elapsed().as_secs_f64()))
}

/// AC5: K0(0) = 0 within 1e-9 for 20 random parameter sets.
fn k0_structural_zero() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut worst = 0.0f64;
    for _ in 0..20 {
        let k_euler = rng.gen_range(-10..=10);
        let dims = (0..rng.gen_range(0..=6)).map(|_| (rng.gen_range(1..=60), rng.gen_range(0..=5))).collect();
        let angles = (0..rng.gen_range(0..=6))
            .map(|_| (rng.gen_range(1..=60), rng.gen_range(0.001..0.999)))
            .collect();
        let p = K0Params::new(k_euler, dims, angles).map_err(|e| e.to_string())?;
        let v = k0_function(&p, 0.0).map_err(|e| e.to_string())?;
        worst = worst.max(v.abs());
        ensure(v.abs() <= 1e-9, || format!("K0(0) = {v} for {p:?}"))?;
    }
    Ok(format!("20 parameter sets, max |K0(0)| = {worst:.1e}"))
}

/// AC6: volume^2 = torsion order^N exactly; component_count * K_X = volume within 1e-12.
fn volume_identities() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut data = fixtures();
    data.extend((0..50).map(|_| random_sasakian(&mut rng, 3, 5, 50)));
    let mut checks = 0;
    for d in &data {
        for n in 1..=3u32 {
            let report = torsion_prefactor(d, n).map_err(|e| e.to_string())?.value;
            let snf_order = torsion_h2_order(d, n).map_err(|e| e.to_string())?.value;
            let vol = &report.symplectic_volume;
            ensure(vol.squared() == snf_order, || format!("{d}, N={n}: volume^2 {} != {snf_order}", vol.squared()))?;
            let count = moduli_description(d, n).map_err(|e| e.to_string())?.component_count;
            let total = count.to_f64().unwrap() * report.volume_coefficient;
            ensure(rel_err(total, vol.value) < 1e-12, || format!("{d}, N={n}: {total} vs {}", vol.value))?;
            checks += 1;
        }
    }
    Ok(format!("{} data x N in 1..=3 = {checks} checks", data.len()))
}

/// AC7: |Z| via the torsion-order formula equals the component assembly
/// k^m K_X |sum e^{ik cs}|; coherent input saturates the bound; roots of unity cancel.
fn magnitude_equality() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let two_fiber = SeifertData::new(0, 2, vec![(3, 1), (3, 1)]).unwrap();
    let targets = [two_fiber.clone(), SeifertData::new(1, 2, vec![(2, 1), (4, 1)]).unwrap(), fixtures()[0].clone()];
    let mut worst = 0.0f64;
    for i in 0..50 {
        let d = &targets[i % targets.len()];
        let n = 1 + (i as u32 % 2);
        let order = torsion_h2_order(d, n).map_err(|e| e.to_string())?.value.to_usize().unwrap();
        let k = rng.gen_range(1..=12u64);
        let cs: Vec<f64> = (0..order).map(|_| rng.gen_range(0.0..2.0 * PI)).collect();
        let inputs = PartitionInputs { data: d.clone(), gauge_rank: n, level: k, cs_values: cs.clone(), grav_phase: None };
        let via_torsion = partition_magnitude(&inputs).map_err(|e| e.to_string())?;
        let sum: Complex64 = cs.iter().map(|&c| Complex64::from_polar(1.0, k as f64 * c)).sum();
        let assembled = zbar_component_magnitude(d, n, k).map_err(|e| e.to_string())? * sum.norm();
        let zbar = zbar_partition_function(&inputs).map_err(|e| e.to_string())?.norm();
        let err = rel_err(via_torsion, assembled).max(rel_err(zbar, assembled));
        worst = worst.max(err);
        ensure(err < 1e-12, || format!("{d}, k={k}: {via_torsion} vs {assembled} vs {zbar}"))?;
    }
    for k in 1..=5u64 {
        let coherent = PartitionInputs { data: two_fiber.clone(), gauge_rank: 1, level: k, cs_values: vec![0.25; 24], grav_phase: None };
        let m = partition_magnitude(&coherent).map_err(|e| e.to_string())?;
        let bound = partition_bound(&two_fiber, 1, k).map_err(|e| e.to_string())?;
        let expected = 24f64.sqrt() / k as f64;
        ensure(rel_err(m, bound) < 1e-12 && rel_err(bound, expected) < 1e-12, || {
            format!("coherent k={k}: {m} vs bound {bound} vs {expected}")
        })?;
    }
    let roots: Vec<f64> = (0..24).map(|j| 2.0 * PI * j as f64 / 24.0).collect();
    let cancel = PartitionInputs { data: two_fiber.clone(), gauge_rank: 1, level: 1, cs_values: roots.clone(), grav_phase: None };
    let m = partition_magnitude(&cancel).map_err(|e| e.to_string())?;
    ensure(m.abs() <= 1e-12, || format!("roots of unity: {m}"))?;
    ensure(phase_sum(1, &roots).norm() <= 1e-12, || "phase sum does not cancel".into())?;
    ensure(m_exponent(&two_fiber, 1) == Ok(-1), || "m_X".into())?;
    Ok(format!("50 random cs vectors (max rel {worst:.1e}), coherent bound, 24th roots |Z| = {m:.1e}"))
}

/// AC8: eta0 of the Poincare fixture vs a brute-force rational oracle; unit phase.
fn eta_pipeline() -> Outcome {
    let d = fixtures()[0].clone();
    let sums = d.pairs().iter().fold(BigRational::zero(), |acc, &(a, b)| acc + dedekind_oracle(a, b));
    let oracle = chern_oracle(&d) / BigRational::from_integer(6.into()) - sums * BigRational::from_integer(2.into());
    let got = adiabatic_eta(&d, 1).map_err(|e| e.to_string())?;
    ensure(got == oracle, || format!("eta0 {got} != oracle {oracle}"))?;
    ensure(got == BigRational::new(BigInt::from(-91), BigInt::from(180)), || format!("eta0 = {got}"))?;
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut data = fixtures();
    data.extend((0..50).map(|_| random_seifert(&mut rng, 3, 5, 50)));
    let mut worst = 0.0f64;
    for d in &data {
        for n in 1..=4u32 {
            let z = phase_factor(d, n).map_err(|e| e.to_string())?;
            let dev = (z.norm() - 1.0).abs();
            worst = worst.max(dev);
            ensure(dev <= 1e-15, || format!("{d}, N={n}: |phase| - 1 = {dev:e}"))?;
        }
    }
    Ok(format!("eta0 = {got}, max ||phase| - 1| = {worst:.1e}"))
}

fn cli(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_seifert-torsion")).args(args).output().expect("binary runs")
}

/// AC9: golden JSON, exit code 3 on c1 = 0, 1000-line batch under 2 s with per-line isolation.
fn cli_contract() -> Outcome {
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures");
    for (data, file) in [
        ("[0,-1;(2,1),(3,1),(5,1)]", "poincare.json"),
        ("[1,1]", "torus_bundle.json"),
        ("[0,2;(3,1),(3,1)]", "two_fiber.json"),
    ] {
        let out = cli(&["invariants", "--data", data, "--format", "json"]);
        ensure(out.status.success(), || format!("{data}: exit {:?}", out.status.code()))?;
        let got: Value = serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
        let want: Value = serde_json::from_str(&std::fs::read_to_string(dir.join(file)).map_err(|e| e.to_string())?)
            .map_err(|e| e.to_string())?;
        ensure(json_close(&got, &want), || format!("{file}: output differs from golden file"))?;
    }
    let zero = cli(&["invariants", "--data", "[1,0]"]);
    ensure(zero.status.code() == Some(3), || format!("c1 = 0 exit {:?}", zero.status.code()))?;

    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut body = String::new();
    let mut bad = Vec::new();
    for i in 0..1000 {
        if i % 97 == 13 {
            body.push_str("[0;1]\n");
            bad.push(i);
        } else {
            body.push_str(&format!("{}\n", random_sasakian(&mut rng, 3, 5, 50)));
        }
    }
    let tmp = tempfile::NamedTempFile::new().map_err(|e| e.to_string())?;
    tmp.as_file().write_all(body.as_bytes()).map_err(|e| e.to_string())?;
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_seifert-torsion"))
        .args(["invariants", "--format", "json", "--input", tmp.path().to_str().unwrap()])
        .stderr(Stdio::null())
        .output()
        .map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    within(elapsed, 2.0)?;
    let lines: Vec<Value> = String::from_utf8_lossy(&out.stdout)
        .lines()
        .map(|l| serde_json::from_str(l).map_err(|e| e.to_string()))
        .collect::<Result<_, _>>()?;
    ensure(lines.len() == 1000, || format!("{} output lines", lines.len()))?;
    for (i, v) in lines.iter().enumerate() {
        let is_err = v.get("error").is_some();
        ensure(is_err == bad.contains(&i), || format!("line {}: unexpected record {v}", i + 1))?;
    }
    ensure(out.status.code() == Some(2), || format!("batch exit {:?}", out.status.code()))?;
    Ok(format!("3 golden files, exit 3 on c1 = 0, 1000-line batch in {:.2}s with {} isolated errors", elapsed.as_secs_f64(), bad.len()))
}

fn json_close(a: &Value, b: &Value) -> bool {
    match (a, b) {
        (Value::Number(x), Value::Number(y)) => {
            let (x, y) = (x.as_f64().unwrap(), y.as_f64().unwrap());
            x == y || ((x - y) / y).abs() <= 1e-12
        }
        (Value::Object(x), Value::Object(y)) => {
            x.len() == y.len() && y.iter().all(|(k, v)| x.get(k).is_some_and(|u| json_close(u, v)))
        }
        (Value::Array(x), Value::Array(y)) => x.len() == y.len() && x.iter().zip(y).all(|(u, v)| json_close(u, v)),
        _ => a == b,
    }
}

fn main() {
    let criteria: [(&str, &str, fn() -> Outcome); 9] = [
        ("AC1", "torsion-order cross-derivation", torsion_order_cross_derivation),
        ("AC2", "Dedekind triple agreement", dedekind_triple_agreement),
        ("AC3", "torsion scalar identity", torsion_scalar_identity),
        ("AC4", "zeta kernel accuracy", zeta_kernel_accuracy),
        ("AC5", "structural zero K0(0) = 0", k0_structural_zero),
        ("AC6", "volume identities", volume_identities),
        ("AC7", "magnitude equality", magnitude_equality),
        ("AC8", "eta0 pipeline", eta_pipeline),
        ("AC9", "CLI contract", cli_contract),
    ];
    let mut failed = 0;
    for (id, name, check) in criteria {
        match check() {
            Ok(detail) => println!("[PASS] {id} {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("[FAIL] {id} {name}: {why}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
