//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any failure.

mod common;

use std::time::{Duration, Instant};

use common::{hulthen_expansion, hulthen_level, hulthen_level_with, laguerre_coefficients};
use kg_lpt::closed_forms::{
    coulomb_d_coefficients, coulomb_polynomial_check, critical_lambda, exact_swave_energy,
    exact_swave_expansion, hulthen_closed_corrections, rescale_to_rho,
};
use kg_lpt::numerov::NumerovConfig;
use kg_lpt::perturbation::{effective_numbers, energy_corrections_with_table};
use kg_lpt::potentials::{coulomb_series, hulthen_series};
use kg_lpt::reference::{Coupling, PARTIAL_SUM_COLUMNS, SCREENING_L, SCREENING_N, SCREENING_ORDER, SCREENING_ROWS};
use kg_lpt::summation::{partial_sums, percent_error};
use kg_lpt::{Error, HulthenParams, QuantumState};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SUM_TOL: f64 = 5e-10;
const NUMEROV_TOL: f64 = 5e-9;
const REPEAT_TOL: f64 = 1e-14;
const TABLE1_ENERGY_TOL: f64 = 5e-9;
const TABLE1_PCT_TOL: f64 = 2e-5;
const SWEEP_POINTS: usize = 200;
const SWEEP_REL_TOL: f64 = 1e-10;
const SWAVE_TOL: f64 = 1e-8;
const COULOMB_ENERGY_TOL: f64 = 1e-12;
const COULOMB_D_TOL: f64 = 1e-10;
const ORDER_FACTOR: f64 = 12.0;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn column_sums(a: f64, b: f64, lambda: f64, n: u32, l: u32, order: usize) -> Result<Vec<f64>, String> {
    hulthen_expansion(a, b, lambda, n, l, order)
        .map(|e| partial_sums(&e).sums)
        .map_err(|e| e.to_string())
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let col = PARTIAL_SUM_COLUMNS
        .iter()
        .find(|c| c.coupling == Coupling::Mixed && c.n == 1)
        .unwrap();
    let sums = column_sums(1.0, 1.0, col.lambda, col.n, col.l, 10)?;
    let elapsed = start.elapsed();
    let dev = max_dev(&sums, &col.sums);
    if dev < SUM_TOL && elapsed < Duration::from_secs(1) {
        Ok(format!("max |ΔS| = {dev:.2e}, {elapsed:.2?}"))
    } else {
        Err(format!("max |ΔS| = {dev:.2e} (tol {SUM_TOL:e}), {elapsed:.2?}"))
    }
}

fn max_dev(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

fn criterion_2() -> Outcome {
    let mut dev: f64 = 0.0;
    let mut count = 0;
    let mut repeat: f64 = 0.0;
    for col in PARTIAL_SUM_COLUMNS.iter().filter(|c| c.coupling != Coupling::Mixed) {
        let (a, b) = col.coupling.strengths();
        let exp = hulthen_expansion(a, b, col.lambda, col.n, col.l, 10).map_err(|e| e.to_string())?;
        let sums = partial_sums(&exp).sums;
        dev = dev.max(max_dev(&sums, &col.sums));
        count += col.sums.len();
        if col.coupling == Coupling::Vector {
            for k in (3..=10).step_by(2) {
                repeat = repeat.max(exp.corrections[k].abs());
            }
        }
    }
    let msg = format!("{count} sums, max |ΔS| = {dev:.2e}, max odd |E_k| (vector) = {repeat:.2e}");
    if count == 44 && dev < SUM_TOL && repeat < REPEAT_TOL {
        Ok(msg)
    } else {
        Err(msg)
    }
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let mut dev: f64 = 0.0;
    for col in &PARTIAL_SUM_COLUMNS {
        let (a, b) = col.coupling.strengths();
        let sol = hulthen_level(a, b, col.lambda, col.n, col.l).map_err(|e| e.to_string())?;
        if sol.nodes != col.n {
            return Err(format!("{} n={}: {} nodes", col.coupling.label(), col.n, sol.nodes));
        }
        dev = dev.max((sol.energy - col.numerical).abs());
    }
    let elapsed = start.elapsed();
    let msg = format!("max |ΔE| = {dev:.2e}, {elapsed:.2?}");
    if dev < NUMEROV_TOL && elapsed < Duration::from_secs(10) {
        Ok(msg)
    } else {
        Err(msg)
    }
}

fn criterion_4() -> Outcome {
    let mut e_dev: f64 = 0.0;
    let mut p_dev: f64 = 0.0;
    for row in &SCREENING_ROWS {
        for (c, coupling) in Coupling::ALL.iter().enumerate() {
            let (a, b) = coupling.strengths();
            let sums = column_sums(a, b, row.lambda, SCREENING_N, SCREENING_L, SCREENING_ORDER)?;
            let s5 = sums[SCREENING_ORDER];
            e_dev = e_dev.max((s5 - row.energy[c]).abs());
            let num = hulthen_level(a, b, row.lambda, SCREENING_N, SCREENING_L).map_err(|e| e.to_string())?;
            let pct = percent_error(s5, num.energy).map_err(|e| e.to_string())?;
            p_dev = p_dev.max((pct - row.error_pct[c]).abs());
        }
    }
    let msg = format!("max |ΔS5| = {e_dev:.2e}, max |Δε| = {p_dev:.2e} pp");
    if e_dev < TABLE1_ENERGY_TOL && p_dev < TABLE1_PCT_TOL {
        Ok(msg)
    } else {
        Err(msg)
    }
}

fn criterion_5() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut accepted = 0;
    let mut worst: f64 = 0.0;
    while accepted < SWEEP_POINTS {
        let a = rng.gen_range(0.05..1.5);
        let b = rng.gen_range(0.05..1.5);
        let lambda = rng.gen_range(0.005..0.3);
        let n = rng.gen_range(0..4);
        let l = rng.gen_range(0..4);
        let Ok(p) = HulthenParams::new(a, b, lambda) else { continue };
        let state = QuantumState::new(n, l, 1.0).unwrap();
        let Ok(series) = hulthen_series(&p, 6) else { continue };
        let Ok(exp) = kg_lpt::energy_corrections(&state, &series, 5) else { continue };
        let closed = hulthen_closed_corrections(&p, &state).map_err(|e| e.to_string())?;
        for (k, (x, y)) in exp.corrections.iter().zip(&closed).enumerate() {
            let rel = (x - y).abs() / x.abs().max(y.abs());
            if rel.is_nan() || rel > SWEEP_REL_TOL {
                return Err(format!(
                    "E_{k} mismatch at a={a}, b={b}, λ={lambda}, n={n}, l={l}: {x} vs {y} (rel {rel:.2e})"
                ));
            }
            worst = worst.max(rel);
        }
        accepted += 1;
    }
    Ok(format!("{accepted} points, worst relative deviation {worst:.2e}"))
}

fn criterion_6() -> Outcome {
    let p = HulthenParams::new(1.0, 1.0, 0.05).unwrap();
    let mut lines = Vec::new();
    let mut ok = true;
    for n in 0..=2 {
        let exact = exact_swave_energy(&p, n, 1.0).map_err(|e| e.to_string())?.energy;
        let num = hulthen_level(1.0, 1.0, 0.05, n, 0).map_err(|e| e.to_string())?;
        let s5 = column_sums(1.0, 1.0, 0.05, n, 0, 5)?[5];
        let e5 = exact_swave_expansion(&p, n, 1.0).map_err(|e| e.to_string())?[5];
        let d_num = (exact - num.energy).abs();
        let d_pert = (s5 - exact).abs();
        ok &= d_num < SWAVE_TOL && d_pert < e5.abs() && num.nodes == n;
        lines.push(format!("n={n}: |ΔE_num| {d_num:.1e}, |S5-E| {d_pert:.1e} vs |E5| {:.1e}", e5.abs()));
    }
    let msg = lines.join("; ");
    if ok {
        Ok(msg)
    } else {
        Err(msg)
    }
}

fn criterion_7() -> Outcome {
    let cases = [
        (-0.4, 0.0, 0, 0),
        (-1.0, -1.0, 1, 1),
        (-0.3, -0.2, 2, 1),
        (-1.0, 0.0, 3, 2),
        (0.0, -0.5, 4, 0),
    ];
    let mut worst_e: f64 = 0.0;
    let mut worst_d: f64 = 0.0;
    for (v0, w0, n, l) in cases {
        let state = QuantumState::new(n, l, 1.0).unwrap();
        let series = coulomb_series(v0, w0, 9);
        let (exp, table) = energy_corrections_with_table(&state, &series, 8).map_err(|e| e.to_string())?;
        for e in &exp.corrections[1..] {
            worst_e = worst_e.max(e.abs());
        }
        let gamma = effective_numbers(&state, &series).map_err(|e| e.to_string())?.gamma;
        let mu = (1.0 - exp.corrections[0].powi(2)).sqrt();
        let rescaled = rescale_to_rho(&table, mu, 6).map_err(|e| e.to_string())?;
        let expected = coulomb_d_coefficients(n, gamma, 6).d;
        for (x, y) in rescaled.iter().zip(&expected) {
            worst_d = worst_d.max((x - y).abs() / y.abs().max(1.0));
        }
    }
    let mut worst_ratio: f64 = 0.0;
    for n in 0..=4 {
        for gamma in [0.3, 1.25f64.sqrt(), 2.5] {
            let ratios = coulomb_polynomial_check(n, gamma).map_err(|e| e.to_string())?;
            let lag = laguerre_coefficients(n, 2.0 * gamma);
            for (j, r) in ratios.iter().enumerate() {
                let oracle = lag[j] / lag[j + 1];
                worst_ratio = worst_ratio.max((r - oracle).abs() / oracle.abs());
            }
        }
    }
    let msg = format!(
        "max |E_k| = {worst_e:.1e}, max Δd = {worst_d:.1e}, max ratio deviation = {worst_ratio:.1e}"
    );
    if worst_e < COULOMB_ENERGY_TOL && worst_d < COULOMB_D_TOL && worst_ratio < 1e-12 {
        Ok(msg)
    } else {
        Err(msg)
    }
}

fn criterion_8() -> Outcome {
    let cr = critical_lambda(1.0, 1.0, 0, 1.0).map_err(|e| e.to_string())?;
    let below = hulthen_level(1.0, 1.0, 0.99 * cr, 0, 0);
    let above = hulthen_level(1.0, 1.0, 1.05 * cr, 0, 0);
    let below_ok = matches!(&below, Ok(s) if s.nodes == 0);
    let above_ok = matches!(above, Err(Error::BracketFailure { .. }));
    let describe = |r: &kg_lpt::Result<kg_lpt::numerov::RadialSolution>| match r {
        Ok(s) => format!("E = {:.10}", s.energy),
        Err(e) => format!("error: {e}"),
    };
    let msg = format!(
        "λ_cr = {cr:.6}; at 0.99 λ_cr {}; at 1.05 λ_cr {}",
        describe(&below),
        describe(&above)
    );
    if below_ok && above_ok {
        Ok(msg)
    } else {
        Err(msg)
    }
}

fn criterion_9() -> Outcome {
    let p = HulthenParams::new(1.0, 1.0, 0.05).unwrap();
    let exact = exact_swave_energy(&p, 0, 1.0).map_err(|e| e.to_string())?.energy;
    let mut errors = Vec::new();
    for steps in [1000, 2000, 4000, 8000] {
        let cfg = NumerovConfig {
            steps,
            r_min: Some(0.05),
            r_max: Some(40.0),
            ..NumerovConfig::default()
        };
        let sol = hulthen_level_with(1.0, 1.0, 0.05, 0, 0, &cfg).map_err(|e| e.to_string())?;
        errors.push((sol.energy - exact).abs());
    }
    let factors: Vec<f64> = errors.windows(2).map(|w| w[0] / w[1]).collect();
    let msg = format!(
        "errors {:?}, factors {:?}",
        errors.iter().map(|e| format!("{e:.2e}")).collect::<Vec<_>>(),
        factors.iter().map(|f| format!("{f:.1}")).collect::<Vec<_>>()
    );
    if factors.iter().all(|&f| f >= ORDER_FACTOR) {
        Ok(msg)
    } else {
        Err(msg)
    }
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("1 mixed partial sums", criterion_1),
        ("2 vector/scalar partial sums", criterion_2),
        ("3 numerical eigenvalues", criterion_3),
        ("4 screening scan", criterion_4),
        ("5 recursion vs closed forms", criterion_5),
        ("6 s-wave exactness", criterion_6),
        ("7 Coulomb restoration", criterion_7),
        ("8 critical screening", criterion_8),
        ("9 Numerov order", criterion_9),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        match run() {
            Ok(detail) => println!("PASS  criterion {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL  criterion {name}: {detail}");
            }
        }
    }
    println!("{} of 9 criteria passed", 9 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
