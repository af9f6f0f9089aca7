#![allow(dead_code)]

use kg_lpt::numerov::{particle_bracket, solve_eigenvalue, NumerovConfig, RadialSolution};
use kg_lpt::potentials::{hulthen_closed_form, hulthen_series};
use kg_lpt::{energy_corrections, EnergyExpansion, HulthenParams, QuantumState, Result};

pub fn hulthen_expansion(a: f64, b: f64, lambda: f64, n: u32, l: u32, order: usize) -> Result<EnergyExpansion> {
    let p = HulthenParams::new(a, b, lambda)?;
    let series = hulthen_series(&p, order + 1)?;
    energy_corrections(&QuantumState::new(n, l, 1.0)?, &series, order)
}

pub fn hulthen_level(a: f64, b: f64, lambda: f64, n: u32, l: u32) -> Result<RadialSolution> {
    hulthen_level_with(a, b, lambda, n, l, &NumerovConfig::default())
}

pub fn hulthen_level_with(
    a: f64,
    b: f64,
    lambda: f64,
    n: u32,
    l: u32,
    config: &NumerovConfig,
) -> Result<RadialSolution> {
    let p = HulthenParams::new(a, b, lambda)?;
    let pot = hulthen_closed_form(&p)?;
    solve_eigenvalue(&pot, &QuantumState::new(n, l, 1.0)?, particle_bracket(1.0), config)
}

/// Coefficients of the associated Laguerre polynomial `L_n^α(x)` in powers of `x`,
/// from the explicit binomial sum.
pub fn laguerre_coefficients(n: u32, alpha: f64) -> Vec<f64> {
    let binom = |x: f64, r: u32| (0..r).fold(1.0, |acc, i| acc * (x - i as f64) / (i + 1) as f64);
    let factorial = |k: u32| (1..=k).fold(1.0, |acc, i| acc * i as f64);
    (0..=n)
        .map(|k| {
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            sign * binom(n as f64 + alpha, n - k) / factorial(k)
        })
        .collect()
}
