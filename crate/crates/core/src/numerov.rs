//! Shooting eigensolver for the radial Klein-Gordon equation
//!
//! ```text
//! R''(r) = f(r) R(r),   f(r) = (m + W(r))^2 - (E - V(r))^2 + l(l+1)/r^2,
//! ```
//!
//! integrated with the Numerov three-point scheme on a uniform grid. The
//! outward sweep starts from the regular Frobenius solution
//! `R ~ r^{1/2+γ}` next to the origin, the inward sweep from a decaying
//! exponential at `r_max`. The eigenvalue is first isolated by counting
//! nodes of the outward solution (Sturm oscillation), then polished on the
//! log-derivative mismatch at the matching radius.
//!
//! This module works only with closed-form potentials; it never sees the
//! truncated coupling series used by the perturbation engine.

use crate::error::{Error, Result};
use crate::perturbation::QuantumState;
use crate::potentials::{CouplingSeries, PotentialFunction, ORIGIN_SERIES_ORDER};

/// Rescale threshold for the sweeps.
const BIG: f64 = 1e150;

/// Smallest decay constant, as a fraction of `m`, used to size the grid.
const MIN_DECAY_FRACTION: f64 = 0.02;

/// Frobenius seed radius expressed in grid steps.
const SEED_STEPS: f64 = 32.0;

#[derive(Debug, Clone, PartialEq)]
pub struct NumerovConfig {
    /// Radius of the first grid point; `None` picks a few dozen steps from
    /// the origin (capped at `0.05/m`).
    pub r_min: Option<f64>,
    /// Outer cutoff; `None` uses `decay_lengths / sqrt(m^2 - E^2)` for the
    /// upper end of the current energy window.
    pub r_max: Option<f64>,
    pub steps: usize,
    /// Matching radius as a fraction of `r_max`, used when
    /// `turning_point_match` is off or no turning point exists.
    pub match_fraction: f64,
    pub turning_point_match: bool,
    pub energy_tol: f64,
    pub max_iter: usize,
    pub decay_lengths: f64,
}

impl Default for NumerovConfig {
    fn default() -> Self {
        Self {
            r_min: None,
            r_max: None,
            steps: 200_000,
            match_fraction: 0.5,
            turning_point_match: true,
            energy_tol: 1e-13,
            max_iter: 400,
            decay_lengths: 40.0,
        }
    }
}

impl NumerovConfig {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidParameter(msg));
        if self.steps < 1000 {
            return bad(format!("at least 1000 grid steps are required, got {}", self.steps));
        }
        if !(self.energy_tol > 0.0) {
            return bad(format!("energy tolerance must be positive, got {}", self.energy_tol));
        }
        if !(self.match_fraction > 0.0 && self.match_fraction < 1.0) {
            return bad(format!("match fraction must lie in (0, 1), got {}", self.match_fraction));
        }
        if !(self.decay_lengths > 0.0) {
            return bad(format!("decay lengths must be positive, got {}", self.decay_lengths));
        }
        if let Some(r_min) = self.r_min {
            if !(r_min > 0.0) {
                return bad(format!("r_min must be positive, got {r_min}"));
            }
        }
        match (self.r_min, self.r_max) {
            (_, Some(r_max)) if !(r_max > 0.0) || !r_max.is_finite() => {
                bad(format!("r_max must be positive and finite, got {r_max}"))
            }
            (Some(r_min), Some(r_max)) if r_min >= r_max => {
                bad(format!("r_min = {r_min} must be below r_max = {r_max}"))
            }
            _ => Ok(()),
        }
    }
}

/// Converged bound state.
#[derive(Debug, Clone, PartialEq)]
pub struct RadialSolution {
    pub energy: f64,
    pub nodes: u32,
    pub radii: Vec<f64>,
    /// Unnormalized `R(r)` on `radii`, continuous at the matching radius.
    pub values: Vec<f64>,
    pub mismatch: f64,
    pub match_radius: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShootResult {
    /// `(R'/R)_out - (R'/R)_in` at the matching radius, divided by `sqrt(m^2 - E^2)`.
    pub mismatch: f64,
    /// Nodes of the outward solution up to the matching radius.
    pub outward_nodes: u32,
    /// Outward nodes plus nodes of the inward solution beyond the matching radius.
    pub nodes: u32,
    pub match_radius: f64,
}

/// `f(r) = (m + W)^2 - (E - V)^2 + l(l+1)/r^2`, so that `R'' = f R`.
pub fn effective_coefficient(
    potential: &PotentialFunction,
    state: &QuantumState,
    energy: f64,
    r: f64,
) -> Result<f64> {
    let v = potential.v_at(r)?;
    let w = potential.w_at(r)?;
    Ok(coefficient(state.m, energy, v, w, state.centrifugal() / (r * r)))
}

#[inline]
fn coefficient(m: f64, energy: f64, v: f64, w: f64, centrifugal: f64) -> f64 {
    let mass = m + w;
    let kinetic = energy - v;
    mass * mass - kinetic * kinetic + centrifugal
}

/// Uniform grid with the energy-independent parts of `f` tabulated.
struct Grid {
    r0: f64,
    h: f64,
    v: Vec<f64>,
    w: Vec<f64>,
    centrifugal: Vec<f64>,
    m: f64,
    origin: CouplingSeries,
    l_term: f64,
}

impl Grid {
    fn build(
        potential: &PotentialFunction,
        state: &QuantumState,
        r_max: f64,
        config: &NumerovConfig,
    ) -> Result<Self> {
        let steps = config.steps;
        let r0 = config
            .r_min
            .unwrap_or_else(|| (SEED_STEPS * r_max / steps as f64).min(0.05 / state.m));
        if r0 >= r_max {
            return Err(Error::InvalidParameter(format!(
                "r_min = {r0} must be below r_max = {r_max}"
            )));
        }
        let h = (r_max - r0) / steps as f64;
        let l_term = state.centrifugal();
        let mut v = Vec::with_capacity(steps + 1);
        let mut w = Vec::with_capacity(steps + 1);
        let mut centrifugal = Vec::with_capacity(steps + 1);
        for j in 0..=steps {
            let r = r0 + j as f64 * h;
            v.push(potential.v_at(r)?);
            w.push(potential.w_at(r)?);
            centrifugal.push(l_term / (r * r));
        }
        Ok(Self {
            r0,
            h,
            v,
            w,
            centrifugal,
            m: state.m,
            origin: potential.origin_series().clone(),
            l_term,
        })
    }

    fn len(&self) -> usize {
        self.v.len()
    }

    fn radius(&self, j: usize) -> f64 {
        self.r0 + j as f64 * self.h
    }

    fn f(&self, energy: f64, j: usize) -> f64 {
        coefficient(self.m, energy, self.v[j], self.w[j], self.centrifugal[j])
    }

    /// Numerov weight `1 - h^2 f_j / 12`.
    fn g(&self, energy: f64, j: usize) -> Result<f64> {
        let g = 1.0 - self.h * self.h * self.f(energy, j) / 12.0;
        if g > 0.0 && g.is_finite() {
            Ok(g)
        } else {
            Err(Error::GridUnderflow {
                radius: self.radius(j),
            })
        }
    }

    /// Regular solution at the first two grid points from the Frobenius
    /// expansion `R = r^s Σ c_k r^k`, `s = 1/2 + γ`.
    fn seeds(&self, energy: f64) -> Result<(f64, f64)> {
        let terms = (self.origin.order() + 1).max(ORIGIN_SERIES_ORDER);
        // (m + W) r = Σ mass_i r^i, (E - V) r = Σ kin_i r^i
        let mass: Vec<f64> = (0..terms)
            .map(|i| self.origin.w_or_zero(i) + if i == 1 { self.m } else { 0.0 })
            .collect();
        let kin: Vec<f64> = (0..terms)
            .map(|i| if i == 1 { energy } else { 0.0 } - self.origin.v_or_zero(i))
            .collect();
        // r^2 f = Σ F_q r^q
        let big_f: Vec<f64> = (0..terms)
            .map(|q| {
                let conv: f64 = (0..=q).map(|p| mass[p] * mass[q - p] - kin[p] * kin[q - p]).sum();
                conv + if q == 0 { self.l_term } else { 0.0 }
            })
            .collect();
        let gamma_sq = big_f[0] + 0.25;
        if gamma_sq < 0.0 {
            return Err(Error::NegativeDiscriminant {
                discriminant: gamma_sq,
            });
        }
        let gamma = gamma_sq.sqrt();
        let s = 0.5 + gamma;
        let mut c = Vec::with_capacity(terms);
        c.push(1.0);
        for k in 1..terms {
            let acc: f64 = (1..=k).map(|q| big_f[q] * c[k - q]).sum();
            c.push(acc / (k as f64 * (k as f64 + 2.0 * gamma)));
        }
        let series = |r: f64| -> Result<f64> {
            let mut sum = 0.0;
            let mut power = 1.0;
            let mut quiet = 0;
            for &ck in &c {
                let term = ck * power;
                sum += term;
                quiet = if term.abs() <= 1e-17 * sum.abs() { quiet + 1 } else { 0 };
                if quiet >= 3 {
                    return Ok(sum);
                }
                power *= r;
            }
            Err(Error::GridUnderflow { radius: r })
        };
        let (r0, r1) = (self.radius(0), self.radius(1));
        let y0 = series(r0)?;
        let y1 = (r1 / r0).powf(s) * series(r1)?;
        Ok((1.0, y1 / y0))
    }

    /// Outward Numerov sweep over `y[0..=last]`; returns the number of sign changes.
    fn sweep_outward(&self, energy: f64, y: &mut [f64], last: usize) -> Result<u32> {
        let (y0, y1) = self.seeds(energy)?;
        y[0] = y0;
        y[1] = y1;
        let mut nodes = 0;
        let mut g_prev = self.g(energy, 0)?;
        let mut g_cur = self.g(energy, 1)?;
        for j in 1..last {
            let g_next = self.g(energy, j + 1)?;
            let next = ((12.0 - 10.0 * g_cur) * y[j] - g_prev * y[j - 1]) / g_next;
            if !next.is_finite() {
                return Err(Error::GridUnderflow {
                    radius: self.radius(j + 1),
                });
            }
            y[j + 1] = next;
            if next.abs() > BIG {
                y[..=j + 1].iter_mut().for_each(|x| *x /= BIG);
            }
            if y[j + 1] * y[j] < 0.0 || (y[j] == 0.0 && j > 1) {
                nodes += 1;
            }
            g_prev = g_cur;
            g_cur = g_next;
        }
        Ok(nodes)
    }

    /// Inward sweep over `y[first..]`, starting from the decaying exponential at `r_max`.
    fn sweep_inward(&self, energy: f64, y: &mut [f64], first: usize) -> Result<u32> {
        let last = self.len() - 1;
        let decay = self.f(energy, last).max(0.0).sqrt();
        y[last] = 1.0;
        y[last - 1] = (decay * self.h).exp();
        let mut nodes = 0;
        let mut g_prev = self.g(energy, last)?;
        let mut g_cur = self.g(energy, last - 1)?;
        for j in (first + 1..last).rev() {
            let g_next = self.g(energy, j - 1)?;
            let next = ((12.0 - 10.0 * g_cur) * y[j] - g_prev * y[j + 1]) / g_next;
            if !next.is_finite() {
                return Err(Error::GridUnderflow {
                    radius: self.radius(j - 1),
                });
            }
            y[j - 1] = next;
            if next.abs() > BIG {
                y[j - 1..].iter_mut().for_each(|x| *x /= BIG);
            }
            if y[j - 1] * y[j] < 0.0 {
                nodes += 1;
            }
            g_prev = g_cur;
            g_cur = g_next;
        }
        Ok(nodes)
    }

    /// Sign changes of the outward solution over the whole grid.
    fn count_nodes(&self, energy: f64, buffer: &mut [f64]) -> Result<u32> {
        self.sweep_outward(energy, buffer, self.len() - 1)
    }

    fn match_index(&self, energy: f64, config: &NumerovConfig) -> usize {
        let last = self.len() - 1;
        let turning = if config.turning_point_match {
            (2..last - 1).rev().find(|&j| self.f(energy, j) < 0.0)
        } else {
            None
        };
        let j = turning.unwrap_or_else(|| {
            let r = config.match_fraction * self.radius(last);
            ((r - self.r0) / self.h).round() as usize
        });
        j.clamp(2, last - 2)
    }

    /// Log-derivative at `j` from the Numerov-consistent difference formula.
    fn log_derivative(&self, energy: f64, y: &[f64], j: usize) -> f64 {
        let h2 = self.h * self.h / 6.0;
        let up = y[j + 1] * (1.0 - h2 * self.f(energy, j + 1));
        let down = y[j - 1] * (1.0 - h2 * self.f(energy, j - 1));
        (up - down) / (2.0 * self.h * y[j])
    }

    fn shoot(
        &self,
        energy: f64,
        config: &NumerovConfig,
        out: &mut [f64],
        inw: &mut [f64],
    ) -> Result<ShootResult> {
        let jm = self.match_index(energy, config);
        let outward_nodes = self.sweep_outward(energy, out, jm + 1)?;
        let inward_nodes = self.sweep_inward(energy, inw, jm - 1)?;
        let d_out = self.log_derivative(energy, out, jm);
        let d_in = self.log_derivative(energy, inw, jm);
        let mu = (self.m * self.m - energy * energy).abs().sqrt().max(f64::MIN_POSITIVE);
        // nodes strictly inside the outward part, plus those the inward part adds past jm
        let outward_nodes = outward_nodes - u32::from(out[jm + 1] * out[jm] < 0.0);
        let inward_beyond = inward_nodes - u32::from(inw[jm] * inw[jm - 1] < 0.0);
        Ok(ShootResult {
            mismatch: (d_out - d_in) / mu,
            outward_nodes,
            nodes: outward_nodes + inward_beyond,
            match_radius: self.radius(jm),
        })
    }
}

fn auto_r_max(state: &QuantumState, top: f64, config: &NumerovConfig) -> f64 {
    if let Some(r) = config.r_max {
        return r;
    }
    let m = state.m;
    let mu = (m * m - top * top).max(0.0).sqrt().max(MIN_DECAY_FRACTION * m);
    config.decay_lengths / mu
}

/// Shoots once at a trial energy, on a grid sized for that energy.
pub fn shoot(
    potential: &PotentialFunction,
    state: &QuantumState,
    energy: f64,
    config: &NumerovConfig,
) -> Result<ShootResult> {
    config.validate()?;
    check_energy(state, energy)?;
    let grid = Grid::build(potential, state, auto_r_max(state, energy, config), config)?;
    let mut out = vec![0.0; grid.len()];
    let mut inw = vec![0.0; grid.len()];
    grid.shoot(energy, config, &mut out, &mut inw)
}

fn check_energy(state: &QuantumState, energy: f64) -> Result<()> {
    if energy.abs() < state.m {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!(
            "energy {energy} lies outside the gap (-m, m) with m = {}",
            state.m
        )))
    }
}

struct Search<'a> {
    grid: Grid,
    config: &'a NumerovConfig,
    buffer: Vec<f64>,
    iterations: usize,
}

impl Search<'_> {
    fn count(&mut self, energy: f64) -> Result<u32> {
        self.iterations += 1;
        if self.iterations > self.config.max_iter {
            return Err(Error::ConvergenceFailure {
                iterations: self.iterations,
            });
        }
        self.grid.count_nodes(energy, &mut self.buffer)
    }

    /// Shrinks `[lo, hi]` (with `count(lo) ≤ n < count(hi)`) to at most `width`.
    fn bisect(&mut self, n: u32, lo: &mut f64, hi: &mut f64, width: f64) -> Result<()> {
        while *hi - *lo > width {
            let mid = 0.5 * (*lo + *hi);
            if mid <= *lo || mid >= *hi {
                break;
            }
            if self.count(mid)? <= n {
                *lo = mid;
            } else {
                *hi = mid;
            }
        }
        Ok(())
    }
}

/// Finds the bound state with `state.n` nodes inside `bracket`.
pub fn solve_eigenvalue(
    potential: &PotentialFunction,
    state: &QuantumState,
    bracket: (f64, f64),
    config: &NumerovConfig,
) -> Result<RadialSolution> {
    config.validate()?;
    let (mut lo, mut hi) = bracket;
    if !(lo < hi) {
        return Err(Error::InvalidParameter(format!(
            "empty energy bracket ({lo}, {hi})"
        )));
    }
    check_energy(state, lo)?;
    check_energy(state, hi)?;
    let n = state.n;
    let m = state.m;

    // coarse pass on a grid sized for the top of the bracket
    let grid = Grid::build(potential, state, auto_r_max(state, hi, config), config)?;
    let len = grid.len();
    let mut search = Search {
        grid,
        config,
        buffer: vec![0.0; len],
        iterations: 0,
    };
    let lo_nodes = search.count(lo)?;
    let hi_nodes = search.count(hi)?;
    if lo_nodes > n || hi_nodes <= n {
        return Err(Error::BracketFailure {
            n,
            lo_nodes,
            hi_nodes,
        });
    }
    search.bisect(n, &mut lo, &mut hi, 1e-6 * m)?;

    // fine pass on a grid sized for the isolated level
    if config.r_max.is_none() {
        search.grid = Grid::build(potential, state, auto_r_max(state, hi, config), config)?;
        let width = (hi - lo).max(1e-6 * m);
        while search.count(lo)? > n {
            lo = (lo - width).max(bracket.0);
            if lo == bracket.0 && search.count(lo)? > n {
                return Err(Error::BracketFailure {
                    n,
                    lo_nodes: n + 1,
                    hi_nodes,
                });
            }
        }
        while search.count(hi)? <= n {
            hi = (hi + width).min(bracket.1);
            if hi == bracket.1 && search.count(hi)? <= n {
                return Err(Error::BracketFailure {
                    n,
                    lo_nodes,
                    hi_nodes: n,
                });
            }
        }
    }
    search.bisect(n, &mut lo, &mut hi, 1e-9 * m)?;

    let grid = &search.grid;
    let mut out = vec![0.0; grid.len()];
    let mut inw = vec![0.0; grid.len()];
    let energy = refine_on_mismatch(grid, config, lo, hi, &mut out, &mut inw, &mut search.iterations)
        .map_or_else(
            |e| match e {
                Error::ConvergenceFailure { .. } => Err(e),
                _ => Ok(None),
            },
            Ok,
        )?;
    let energy = match energy {
        Some(e) => e,
        None => {
            // mismatch does not change sign on the window: finish by node bisection
            search.bisect(n, &mut lo, &mut hi, config.energy_tol)?;
            0.5 * (lo + hi)
        }
    };

    let grid = &search.grid;
    let shot = grid.shoot(energy, config, &mut out, &mut inw)?;
    if shot.nodes != n {
        return Err(Error::ConvergenceFailure {
            iterations: search.iterations,
        });
    }
    let jm = grid.match_index(energy, config);
    let scale = out[jm] / inw[jm];
    let values: Vec<f64> = (0..grid.len())
        .map(|j| if j <= jm { out[j] } else { inw[j] * scale })
        .collect();
    let radii = (0..grid.len()).map(|j| grid.radius(j)).collect();
    Ok(RadialSolution {
        energy,
        nodes: shot.nodes,
        radii,
        values,
        mismatch: shot.mismatch,
        match_radius: shot.match_radius,
    })
}

/// Illinois-modified regula falsi on the matching mismatch. `Ok(None)` when
/// the mismatch has the same sign at both ends of the window.
fn refine_on_mismatch(
    grid: &Grid,
    config: &NumerovConfig,
    mut lo: f64,
    mut hi: f64,
    out: &mut [f64],
    inw: &mut [f64],
    iterations: &mut usize,
) -> Result<Option<f64>> {
    let mut f_lo = grid.shoot(lo, config, out, inw)?.mismatch;
    let mut f_hi = grid.shoot(hi, config, out, inw)?.mismatch;
    if f_lo == 0.0 {
        return Ok(Some(lo));
    }
    if f_hi == 0.0 {
        return Ok(Some(hi));
    }
    if f_lo.signum() == f_hi.signum() {
        return Ok(None);
    }
    let mut side = 0i8;
    loop {
        *iterations += 1;
        if *iterations > config.max_iter {
            return Err(Error::ConvergenceFailure {
                iterations: *iterations,
            });
        }
        let mut x = (lo * f_hi - hi * f_lo) / (f_hi - f_lo);
        if !(x > lo && x < hi) {
            x = 0.5 * (lo + hi);
        }
        let fx = grid.shoot(x, config, out, inw)?.mismatch;
        if fx == 0.0 || hi - lo <= config.energy_tol {
            return Ok(Some(x));
        }
        if fx.signum() == f_hi.signum() {
            hi = x;
            f_hi = fx;
            if side == 1 {
                f_lo *= 0.5;
            }
            side = 1;
        } else {
            lo = x;
            f_lo = fx;
            if side == -1 {
                f_hi *= 0.5;
            }
            side = -1;
        }
        if hi - lo <= config.energy_tol {
            return Ok(Some(0.5 * (lo + hi)));
        }
    }
}

/// Default search window `[0, m)` for particle levels.
///
/// Node counts grow monotonically with `E` only where `E > V(r)`; for an
/// attractive vector coupling that holds on `[0, m)`. Negative-energy levels,
/// or repulsive vector couplings, need an explicit bracket.
pub fn particle_bracket(m: f64) -> (f64, f64) {
    (0.0, m * (1.0 - 1e-9))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::potentials::{hulthen_closed_form, HulthenParams};
    use approx::assert_relative_eq;

    fn mixed() -> PotentialFunction {
        hulthen_closed_form(&HulthenParams::new(1.0, 1.0, 0.05).unwrap()).unwrap()
    }

    #[test]
    fn coefficient_examples() {
        let s = QuantumState::new(0, 2, 1.0).unwrap();
        let free = PotentialFunction::coulomb(0.0, 0.0);
        let r = 0.7;
        assert_relative_eq!(
            effective_coefficient(&free, &s, 1.0, r).unwrap(),
            6.0 / (r * r),
            max_relative = 1e-15
        );
        let s0 = QuantumState::new(0, 0, 1.0).unwrap();
        let c = PotentialFunction::coulomb(-1.0, 0.0);
        let e = 0.6;
        assert_relative_eq!(
            effective_coefficient(&c, &s0, e, r).unwrap(),
            1.0 - (e + 1.0 / r).powi(2),
            max_relative = 1e-15
        );
    }

    #[test]
    fn two_turning_points_for_mixed_p_state() {
        let s = QuantumState::new(1, 1, 1.0).unwrap();
        let pot = mixed();
        let e = 0.842_454_482_8;
        let mut changes = 0;
        let mut prev = effective_coefficient(&pot, &s, e, 1e-4).unwrap();
        for j in 1..20_000 {
            let f = effective_coefficient(&pot, &s, e, 1e-4 + j as f64 * 0.01).unwrap();
            if f.signum() != prev.signum() {
                changes += 1;
            }
            prev = f;
        }
        assert_eq!(changes, 2);
    }

    #[test]
    fn coulomb_ground_state_matches_closed_form() {
        // pure vector a = 0.4, l = 0: E = m N / sqrt(N^2 + a^2), N = 1/2 + sqrt(1/4 - a^2)
        let a: f64 = 0.4;
        let s = QuantumState::new(0, 0, 1.0).unwrap();
        let pot = PotentialFunction::coulomb(-a, 0.0);
        let sol = solve_eigenvalue(&pot, &s, particle_bracket(1.0), &NumerovConfig::default()).unwrap();
        let n = 0.5 + (0.25 - a * a).sqrt();
        let exact = n / (n * n + a * a).sqrt();
        assert!((sol.energy - exact).abs() < 1e-9, "{} vs {exact}", sol.energy);
        assert_eq!(sol.nodes, 0);
    }

    #[test]
    fn eigenvalue_zeroes_the_mismatch() {
        let s = QuantumState::new(1, 1, 1.0).unwrap();
        let cfg = NumerovConfig::default();
        let sol = solve_eigenvalue(&mixed(), &s, particle_bracket(1.0), &cfg).unwrap();
        assert!((sol.energy - 0.842_454_482_8).abs() < 5e-9);
        assert_eq!(sol.nodes, 1);
        assert!(sol.mismatch.abs() < 1e-6, "{}", sol.mismatch);
        let shot = shoot(&mixed(), &s, sol.energy, &cfg).unwrap();
        assert_eq!(shot.nodes, 1);
    }

    #[test]
    fn invalid_config_and_bracket() {
        let s = QuantumState::new(0, 0, 1.0).unwrap();
        let cfg = NumerovConfig {
            steps: 10,
            ..Default::default()
        };
        assert!(solve_eigenvalue(&mixed(), &s, (0.0, 0.9), &cfg).is_err());
        let cfg = NumerovConfig::default();
        assert!(solve_eigenvalue(&mixed(), &s, (0.9, 0.1), &cfg).is_err());
        assert!(solve_eigenvalue(&mixed(), &s, (0.0, 1.5), &cfg).is_err());
    }

    #[test]
    fn missing_level_is_bracket_failure() {
        let s = QuantumState::new(0, 0, 1.0).unwrap();
        // the ground state sits near 0.0247, far below this window
        let err = solve_eigenvalue(&mixed(), &s, (0.5, 0.99), &NumerovConfig::default()).unwrap_err();
        assert!(matches!(err, Error::BracketFailure { .. }), "{err:?}");
    }

    #[test]
    fn matched_solution_is_continuous_and_decays() {
        let s = QuantumState::new(2, 1, 1.0).unwrap();
        let sol = solve_eigenvalue(&mixed(), &s, particle_bracket(1.0), &NumerovConfig::default()).unwrap();
        assert_eq!(sol.nodes, 2);
        let peak = sol.values.iter().fold(0.0f64, |a, &x| a.max(x.abs()));
        assert!(sol.values.last().unwrap().abs() < 1e-12 * peak);
        assert_eq!(sol.radii.len(), sol.values.len());
    }
}
