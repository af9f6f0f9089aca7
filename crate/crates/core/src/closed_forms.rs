//! Closed-form results used to cross-check the recursions.
//!
//! * explicit Hulthén corrections `E_0..E_5` for arbitrary `l`,
//! * the exact s-wave Hulthén energy, its expansion in `λ` and the
//!   critical screening,
//! * the pure-Coulomb log-derivative coefficients `d_k` in `ρ = 2μr`
//!   and the polynomial part of the Coulomb wavefunction.

use crate::error::{Error, Result};
use crate::perturbation::{LaurentTable, QuantumState};
use crate::potentials::HulthenParams;

/// `N = n + 1/2 + sqrt(b^2 - a^2 + (l+1/2)^2)` for Hulthén couplings.
fn hulthen_cap_n(a: f64, b: f64, n: u32, l: u32) -> Result<f64> {
    let half = l as f64 + 0.5;
    let discriminant = b * b - a * a + half * half;
    if discriminant < 0.0 {
        return Err(Error::NegativeDiscriminant { discriminant });
    }
    Ok(n as f64 + 0.5 + discriminant.sqrt())
}

/// Explicit first six Hulthén corrections.
pub fn hulthen_closed_corrections(p: &HulthenParams, state: &QuantumState) -> Result<[f64; 6]> {
    p.validate()?;
    let (a, b, lam, m) = (p.a, p.b, p.lambda, state.m);
    let l = state.centrifugal();
    let n = hulthen_cap_n(a, b, state.n, state.l)?;
    let radicand = n * n + a * a - b * b;
    if radicand < 0.0 {
        return Err(Error::NoBoundState { mu_sq: f64::NAN });
    }
    let e0 = m / (n * n + a * a) * (n * radicand.sqrt() - a * b);
    let mu2 = m * m - e0 * e0;
    if !(mu2 > 0.0) {
        return Err(Error::NoBoundState { mu_sq: mu2 });
    }
    if a == 0.0 && b == 0.0 {
        return Err(Error::NoCoulombSingularity);
    }

    let am_be = a * m + b * e0;
    let bm_ae = b * m + a * e0;
    let e1 = lam / (2.0 * m) * am_be;
    let e2 = -lam.powi(2) * bm_ae / (24.0 * am_be * mu2 * m) * (3.0 * am_be.powi(2) - mu2 * l);
    let e3 = -lam * b / (2.0 * m) * e2;

    // the part of the L-bracket shared by E_4 and E_5
    let shared = 24.0 * a.powi(3) * m.powi(3) * b * e0 * (6.0 * e0 * e0 - m * m)
        + 6.0 * a.powi(4) * m.powi(4) * (7.0 * e0 * e0 - 2.0 * m * m)
        - a * m * mu2 * (a * m + 2.0 * b * e0) * (5.0 * l * e0 * e0 + 13.0 * l * m * m - 6.0 * m * m)
        + b * b * m * m * mu2 * (5.0 * l * m * m - 23.0 * l * e0 * e0 + 6.0 * e0 * e0)
        + 6.0 * b * b * e0 * e0 * (22.0 * a * a * m * m * e0 * e0 - 2.0 * a * a * m.powi(4) - 5.0 * b * b * e0.powi(4));
    let e0sq = e0 * e0;

    let bracket4 = shared - 6.0 * b * b * am_be.powi(2) * (13.0 * m.powi(4) - 28.0 * m * m * e0sq + 5.0 * e0sq * e0sq);
    let e4 = -lam.powi(4) * bm_ae / (5760.0 * am_be.powi(3) * mu2 * mu2 * m.powi(3))
        * (45.0 * (am_be.powi(6) + 5.0 * b * b * mu2 * am_be.powi(4)) + l * bracket4);

    let bracket5 = shared - 2.0 * b * b * am_be.powi(2) * (19.0 * m.powi(4) - 44.0 * m * m * e0sq - 5.0 * e0sq * e0sq);
    let e5 = lam.powi(5) * b * bm_ae / (3840.0 * am_be.powi(3) * mu2 * mu2 * m.powi(4))
        * (45.0 * am_be.powi(6) + 105.0 * b * b * mu2 * am_be.powi(4) + l * bracket5);

    Ok([e0, e1, e2, e3, e4, e5])
}

/// Exact s-wave Hulthén level.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SWaveExact {
    pub energy: f64,
    /// `sqrt(Ñ^2 + a^2 - b^2)`
    pub kappa: f64,
    /// `Ñ = n + 1/2 + sqrt(b^2 - a^2 + 1/4)`
    pub cap_n_tilde: f64,
}

fn swave_numbers(a: f64, b: f64, n: u32) -> Result<(f64, f64)> {
    let nt = hulthen_cap_n(a, b, n, 0)?;
    let kappa_sq = nt * nt + a * a - b * b;
    if kappa_sq < 0.0 {
        return Err(Error::NoBoundState { mu_sq: f64::NAN });
    }
    Ok((nt, kappa_sq.sqrt()))
}

fn check_mass(m: f64) -> Result<()> {
    if m > 0.0 && m.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("mass must be positive, got {m}")))
    }
}

/// Exact s-wave energy
/// `E = [-abm + λaκ^2/2 + Ñκ sqrt(m^2 + λmb - λ^2κ^2/4)] / (Ñ^2 + a^2)`.
///
/// The formula is the larger root of a quadratic whose underlying linear
/// condition is `Ñ sqrt(m^2 - E^2) = mb + aE - λκ^2/2`. Past
/// [`binding_threshold_lambda`] the root survives but has a negative decay
/// rate, so it is reported as [`Error::Unbound`] rather than as a level.
pub fn exact_swave_energy(p: &HulthenParams, n: u32, m: f64) -> Result<SWaveExact> {
    p.validate()?;
    check_mass(m)?;
    let (a, b, lam) = (p.a, p.b, p.lambda);
    let (nt, kappa) = swave_numbers(a, b, n)?;
    let k2 = kappa * kappa;
    let radicand = m * m + lam * m * b - lam * lam * k2 / 4.0;
    if radicand < 0.0 {
        let critical = critical_lambda(a, b, n, m).unwrap_or(f64::NAN);
        return Err(Error::AboveCritical {
            lambda: lam,
            critical,
        });
    }
    let energy = (-a * b * m + lam * a * k2 / 2.0 + nt * kappa * radicand.sqrt()) / (nt * nt + a * a);
    let decay = m * b + a * energy - lam * k2 / 2.0;
    if decay < 0.0 {
        return Err(Error::Unbound {
            lambda: lam,
            threshold: binding_threshold_lambda(a, b, n, m)?,
        });
    }
    Ok(SWaveExact {
        energy,
        kappa,
        cap_n_tilde: nt,
    })
}

/// Terms `E_0..E_5` of the expansion of [`exact_swave_energy`] in powers of `λ`.
pub fn exact_swave_expansion(p: &HulthenParams, n: u32, m: f64) -> Result<[f64; 6]> {
    p.validate()?;
    check_mass(m)?;
    let (a, b, lam) = (p.a, p.b, p.lambda);
    let (nt, kappa) = swave_numbers(a, b, n)?;
    let k2 = kappa * kappa;
    let denom = nt * nt + a * a;
    let e0 = m * (-a * b + nt * kappa) / denom;
    let e1 = lam / 2.0 * kappa * (kappa * a + nt * b) / denom;
    let e2 = -lam * lam / (8.0 * m) * nt * kappa * (k2 + b * b) / denom;
    let e3 = -lam * b / (2.0 * m) * e2;
    let e4 = lam * lam * (k2 + 5.0 * b * b) / (16.0 * m * m) * e2;
    let e5 = -lam.powi(3) * b * (3.0 * k2 + 7.0 * b * b) / (32.0 * m.powi(3)) * e2;
    Ok([e0, e1, e2, e3, e4, e5])
}

/// `λ_cr = 2m / (sqrt(Ñ^2 + a^2) - b)`: the largest screening for which the
/// square root in [`exact_swave_energy`] stays real.
pub fn critical_lambda(a: f64, b: f64, n: u32, m: f64) -> Result<f64> {
    check_mass(m)?;
    let nt = hulthen_cap_n(a, b, n, 0)?;
    let denominator = (nt * nt + a * a).sqrt() - b;
    if !(denominator > 0.0) {
        return Err(Error::NoCritical { denominator });
    }
    Ok(2.0 * m / denominator)
}

/// Screening at which the s-wave level reaches the threshold `E = m`:
/// `λ = 2m(a + b) / κ^2`. Always at or below [`critical_lambda`].
pub fn binding_threshold_lambda(a: f64, b: f64, n: u32, m: f64) -> Result<f64> {
    check_mass(m)?;
    let (_, kappa) = swave_numbers(a, b, n)?;
    Ok(2.0 * m * (a + b) / (kappa * kappa))
}

/// Laurent coefficients of the Coulomb log-derivative in `ρ = 2μr`,
/// `C_k(ρ) = d_k ρ^{-k}`.
#[derive(Debug, Clone, PartialEq)]
pub struct CoulombLaurent {
    pub d: Vec<f64>,
    pub gamma: f64,
    pub n: u32,
}

/// `d_0 = -1/2`, `d_1 = n + 1/2 + γ`, `d_2 = n(n + 2γ)`,
/// `d_k = (1-k) d_{k-1} + Σ_{j=1}^{k-1} d_j d_{k-j}` for `k > 2`.
pub fn coulomb_d_coefficients(n: u32, gamma: f64, max_order: usize) -> CoulombLaurent {
    let nf = n as f64;
    let mut d = Vec::with_capacity(max_order + 1);
    for k in 0..=max_order {
        let value = match k {
            0 => -0.5,
            1 => nf + 0.5 + gamma,
            2 => nf * (nf + 2.0 * gamma),
            _ => (1.0 - k as f64) * d[k - 1] + (1..k).map(|j| d[j] * d[k - j]).sum::<f64>(),
        };
        d.push(value);
    }
    CoulombLaurent { d, gamma, n }
}

/// Maps the `r`-variable table onto `ρ = 2μr`: `d_k = C^k_0 (2μ)^{k-1}`.
pub fn rescale_to_rho(table: &LaurentTable, mu: f64, max_order: usize) -> Result<Vec<f64>> {
    (0..=max_order)
        .map(|k| {
            table
                .entry(k as isize, 0)
                .map(|c| c * (2.0 * mu).powi(k as i32 - 1))
        })
        .collect()
}

/// Coefficients `a_0..a_n` (with `a_n = 1`) of the polynomial factor of the
/// Coulomb wavefunction, from `a_k (n-k) + Σ_{j>k} a_j d_{j-k+1} = 0`.
pub fn coulomb_polynomial(n: u32, gamma: f64) -> Result<Vec<f64>> {
    let n = n as usize;
    let d = coulomb_d_coefficients(n as u32, gamma, n + 1).d;
    let mut coeffs = vec![0.0; n + 1];
    coeffs[n] = 1.0;
    for k in (0..n).rev() {
        let pivot = (n - k) as f64;
        let s: f64 = (k + 1..=n).map(|j| coeffs[j] * d[j - k + 1]).sum();
        let value = -s / pivot;
        if !value.is_finite() {
            return Err(Error::SingularSystem { index: k });
        }
        coeffs[k] = value;
    }
    Ok(coeffs)
}

/// Consecutive ratios `a_{j-1}/a_j`, `j = 1..=n`, of [`coulomb_polynomial`].
///
/// They follow `a_{j-1}/a_j = j(j + 2γ)/(j - n - 1)`, the coefficient
/// recurrence of the associated Laguerre polynomial `L_n^{2γ}(ρ)`.
pub fn coulomb_polynomial_check(n: u32, gamma: f64) -> Result<Vec<f64>> {
    let a = coulomb_polynomial(n, gamma)?;
    (1..a.len())
        .map(|j| {
            if a[j] == 0.0 {
                Err(Error::SingularSystem { index: j })
            } else {
                Ok(a[j - 1] / a[j])
            }
        })
        .collect()
}

/// Laguerre-pattern ratio `j(j + 2γ)/(j - n - 1)`.
pub fn laguerre_ratio(j: u32, n: u32, gamma: f64) -> f64 {
    let j = j as f64;
    j * (j + 2.0 * gamma) / (j - n as f64 - 1.0)
}
