//! Screened Coulomb potentials.
//!
//! Both couplings are written with a Coulomb prefactor,
//!
//! ```text
//! V(r) = (1/r) Σ_i V_i r^i,     W(r) = (1/r) Σ_i W_i r^i,
//! ```
//!
//! where `V` is the time component of a Lorentz vector and `W` a Lorentz
//! scalar entering through the mass, `m(r) = m + W(r)`. Natural units
//! `ħ = c = 1` are used throughout.
//!
//! [`CouplingSeries`] feeds the perturbation engine; [`PotentialFunction`]
//! is the closed-form evaluator consumed by the Numerov eigensolver.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Below this value of `λr` the closed-form Hulthén evaluator switches to
/// its truncated power series.
pub const HULTHEN_SERIES_SWITCH: f64 = 1e-4;

/// Number of series terms used below [`HULTHEN_SERIES_SWITCH`].
pub const HULTHEN_SERIES_TERMS: usize = 6;

/// Order of the origin expansion attached to closed-form potentials.
pub const ORIGIN_SERIES_ORDER: usize = 64;

/// Truncated coefficient lists `V_0..V_I`, `W_0..W_I` of the potential expansions.
#[derive(Debug, Clone, PartialEq)]
pub struct CouplingSeries {
    v: Vec<f64>,
    w: Vec<f64>,
}

impl CouplingSeries {
    pub fn new(v: Vec<f64>, w: Vec<f64>) -> Result<Self> {
        if v.is_empty() || v.len() != w.len() {
            return Err(Error::InvalidParameter(format!(
                "coefficient lists must be non-empty and of equal length (got {} and {})",
                v.len(),
                w.len()
            )));
        }
        if v.iter().chain(w.iter()).any(|x| !x.is_finite()) {
            return Err(Error::InvalidParameter(
                "coupling coefficients must be finite".into(),
            ));
        }
        Ok(Self { v, w })
    }

    /// Highest retained index `I`.
    pub fn order(&self) -> usize {
        self.v.len() - 1
    }

    /// Series order needed to compute energy corrections `E_0..E_K`.
    pub fn required_order(max_correction: usize) -> usize {
        max_correction + 1
    }

    pub fn v(&self) -> &[f64] {
        &self.v
    }

    pub fn w(&self) -> &[f64] {
        &self.w
    }

    pub fn v0(&self) -> f64 {
        self.v[0]
    }

    pub fn w0(&self) -> f64 {
        self.w[0]
    }

    /// `V_i`, with zero for any index past the retained order.
    pub fn v_or_zero(&self, i: usize) -> f64 {
        self.v.get(i).copied().unwrap_or(0.0)
    }

    pub fn w_or_zero(&self, i: usize) -> f64 {
        self.w.get(i).copied().unwrap_or(0.0)
    }

    /// Evaluates the truncated `(1/r) Σ V_i r^i` and `(1/r) Σ W_i r^i`.
    pub fn eval(&self, r: f64) -> (f64, f64) {
        (horner(&self.v, r) / r, horner(&self.w, r) / r)
    }
}

fn horner(coeffs: &[f64], x: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
}

/// Attractive Hulthén couplings `V(r) = -aλ/(e^{λr}-1)`, `W(r) = -bλ/(e^{λr}-1)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HulthenParams {
    pub a: f64,
    pub b: f64,
    pub lambda: f64,
}

impl HulthenParams {
    pub fn new(a: f64, b: f64, lambda: f64) -> Result<Self> {
        let p = Self { a, b, lambda };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.lambda > 0.0) || !self.lambda.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "screening parameter must be positive and finite, got {}",
                self.lambda
            )));
        }
        if !(self.a >= 0.0 && self.b >= 0.0) || !self.a.is_finite() || !self.b.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "couplings must be non-negative and finite, got a = {}, b = {}",
                self.a, self.b
            )));
        }
        Ok(())
    }
}

/// Coefficients of the Hulthén couplings,
/// `V_k = -a λ^k B_k / k!` and `W_k = -b λ^k B_k / k!`, from
/// `x/(e^x - 1) = Σ B_k x^k / k!` with Bernoulli numbers `B_k`.
pub fn hulthen_series(p: &HulthenParams, order: usize) -> Result<CouplingSeries> {
    p.validate()?;
    let base: Vec<f64> = (0..=order)
        .map(|k| bernoulli_over_factorial(k) * p.lambda.powi(k as i32))
        .collect();
    let v = base.iter().map(|c| -p.a * c).collect();
    let w = base.iter().map(|c| -p.b * c).collect();
    CouplingSeries::new(v, w)
}

/// `B_k / k!`, using `B_{2j}/(2j)! = (-1)^{j+1} 2 ζ(2j) / (2π)^{2j}`.
fn bernoulli_over_factorial(k: usize) -> f64 {
    match k {
        0 => 1.0,
        1 => -0.5,
        _ if k % 2 == 1 => 0.0,
        _ => {
            let sign = if (k / 2) % 2 == 1 { 1.0 } else { -1.0 };
            sign * 2.0 * zeta_even(k) / std::f64::consts::TAU.powi(k as i32)
        }
    }
}

/// `ζ(s)` for even `s ≥ 2`: direct sum to `N` with an Euler-Maclaurin tail.
fn zeta_even(s: usize) -> f64 {
    if s == 2 {
        return std::f64::consts::PI.powi(2) / 6.0;
    }
    const N: usize = 100;
    let sf = s as f64;
    let nf = N as f64;
    let head: f64 = (1..N).rev().map(|n| (n as f64).powi(-(s as i32))).sum();
    let tail = nf.powf(1.0 - sf) / (sf - 1.0) + 0.5 * nf.powf(-sf) + sf * nf.powf(-sf - 1.0) / 12.0
        - sf * (sf + 1.0) * (sf + 2.0) * nf.powf(-sf - 3.0) / 720.0;
    head + tail
}

/// Pure Coulomb couplings: `V_0 = v0`, `W_0 = w0`, everything else zero.
pub fn coulomb_series(v0: f64, w0: f64, order: usize) -> CouplingSeries {
    let mut v = vec![0.0; order + 1];
    let mut w = vec![0.0; order + 1];
    v[0] = v0;
    w[0] = w0;
    CouplingSeries { v, w }
}

type Radial = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

/// Closed-form radial couplings `V(r)`, `W(r)` for `r > 0`.
///
/// Carries the Laurent data of the couplings at the origin as well; the
/// Numerov solver uses it only to seed the regular solution next to `r = 0`.
#[derive(Clone)]
pub struct PotentialFunction {
    v: Radial,
    w: Radial,
    origin: CouplingSeries,
}

impl PotentialFunction {
    /// `origin` must hold the expansion coefficients of `r V(r)` and `r W(r)` at `r = 0`.
    pub fn new<V, W>(v: V, w: W, origin: CouplingSeries) -> Self
    where
        V: Fn(f64) -> f64 + Send + Sync + 'static,
        W: Fn(f64) -> f64 + Send + Sync + 'static,
    {
        Self {
            v: Arc::new(v),
            w: Arc::new(w),
            origin,
        }
    }

    /// Unscreened `V = v0/r`, `W = w0/r`.
    pub fn coulomb(v0: f64, w0: f64) -> Self {
        Self::new(
            move |r| v0 / r,
            move |r| w0 / r,
            coulomb_series(v0, w0, 1),
        )
    }

    pub fn v_at(&self, r: f64) -> Result<f64> {
        check_radius(r)?;
        Ok((self.v)(r))
    }

    pub fn w_at(&self, r: f64) -> Result<f64> {
        check_radius(r)?;
        Ok((self.w)(r))
    }

    pub fn origin_series(&self) -> &CouplingSeries {
        &self.origin
    }
}

impl fmt::Debug for PotentialFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PotentialFunction")
            .field("v0", &self.origin.v0())
            .field("w0", &self.origin.w0())
            .finish_non_exhaustive()
    }
}

fn check_radius(r: f64) -> Result<()> {
    if r > 0.0 && r.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!(
            "potentials are evaluated at r > 0, got {r}"
        )))
    }
}

/// Closed-form Hulthén evaluators.
pub fn hulthen_closed_form(p: &HulthenParams) -> Result<PotentialFunction> {
    p.validate()?;
    let origin = hulthen_series(p, ORIGIN_SERIES_ORDER)?;
    let short = hulthen_series(p, HULTHEN_SERIES_TERMS - 1)?;
    let (a, b, lambda) = (p.a, p.b, p.lambda);
    let short_v = short.clone();
    let v = move |r: f64| {
        if lambda * r < HULTHEN_SERIES_SWITCH {
            short_v.eval(r).0
        } else {
            -a * lambda / (lambda * r).exp_m1()
        }
    };
    let w = move |r: f64| {
        if lambda * r < HULTHEN_SERIES_SWITCH {
            short.eval(r).1
        } else {
            -b * lambda / (lambda * r).exp_m1()
        }
    };
    Ok(PotentialFunction::new(v, w, origin))
}
