//! Logarithmic perturbation theory via ħ-expansions.
//!
//! The radial equation `R'' = {(m + W)^2 - (E - V)^2 + l(l+1)/r^2} R` is
//! rewritten for the logarithmic derivative `C = R'/R` as a Riccati
//! equation. Expanding energy and log-derivative in powers of ħ,
//!
//! ```text
//! E = Σ_k E_k,        C(r) = C_0 + Σ_{k≥1} C_k(r),
//! C_0 = -sqrt(m^2 - E_0^2),   C_k(r) = r^{-k} Σ_i C^k_i r^i,
//! ```
//!
//! turns the Riccati equation into a triangular system for the Laurent
//! coefficients `C^k_i`. Counting the residues of `C` around the origin and
//! the nodes of `R` fixes the quantization condition
//! `C^{k+1}_k = N δ_{k,0}` with `N = n + 1/2 + sqrt(W_0^2 - V_0^2 + (l+1/2)^2)`.
//! Each energy correction `E_k` is the unique value that makes the residue
//! of order `k+1` satisfy that condition.
//!
//! The same recursions serve ground and radially excited states; nothing
//! about the node positions has to be known in advance.

use crate::error::{Error, Result};
use crate::potentials::CouplingSeries;

/// Radial quantum number `n` (node count), orbital number `l` and rest mass `m`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuantumState {
    pub n: u32,
    pub l: u32,
    pub m: f64,
}

impl QuantumState {
    pub fn new(n: u32, l: u32, m: f64) -> Result<Self> {
        if !(m > 0.0) || !m.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "mass must be positive and finite, got {m}"
            )));
        }
        Ok(Self { n, l, m })
    }

    /// `l(l+1)`
    pub fn centrifugal(&self) -> f64 {
        let l = self.l as f64;
        l * (l + 1.0)
    }
}

/// Quantities fixed by the Coulomb part of the couplings.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EffectiveNumbers {
    /// `sqrt(W_0^2 - V_0^2 + (l+1/2)^2)`
    pub gamma: f64,
    /// `N = n + 1/2 + gamma`
    pub cap_n: f64,
    /// `m^2 - E_0^2`, known once the leading energy has been computed.
    pub mu_sq: Option<f64>,
}

pub fn effective_numbers(state: &QuantumState, series: &CouplingSeries) -> Result<EffectiveNumbers> {
    let (v0, w0) = (series.v0(), series.w0());
    let half = state.l as f64 + 0.5;
    let discriminant = w0 * w0 - v0 * v0 + half * half;
    if discriminant < 0.0 || !discriminant.is_finite() {
        return Err(Error::NegativeDiscriminant { discriminant });
    }
    let gamma = discriminant.sqrt();
    Ok(EffectiveNumbers {
        gamma,
        cap_n: state.n as f64 + 0.5 + gamma,
        mu_sq: None,
    })
}

/// Leading-order energy,
/// `E_0 = m (N sqrt(N^2 + V_0^2 - W_0^2) - V_0 W_0) / (N^2 + V_0^2)`,
/// on the branch entering the gap from the upper continuum.
pub fn leading_energy(state: &QuantumState, series: &CouplingSeries) -> Result<f64> {
    let eff = effective_numbers(state, series)?;
    let (v0, w0) = (series.v0(), series.w0());
    let n = eff.cap_n;
    let m = state.m;
    let radicand = n * n + v0 * v0 - w0 * w0;
    if radicand < 0.0 {
        return Err(Error::NoBoundState {
            mu_sq: f64::NAN,
        });
    }
    let e0 = m * (n * radicand.sqrt() - v0 * w0) / (n * n + v0 * v0);
    let mu_sq = m * m - e0 * e0;
    if mu_sq < 0.0 || !e0.is_finite() {
        return Err(Error::NoBoundState { mu_sq });
    }
    Ok(e0)
}

/// Triangular table of Laurent coefficients `C^k_i`, `1 ≤ k ≤ K+1`, `0 ≤ i ≤ K+1`,
/// together with the constant `C^0_0 = C_0`.
///
/// Entries are filled lazily; reading an entry that has not been computed
/// yet is a [`Error::MissingDependency`].
#[derive(Debug, Clone, PartialEq)]
pub struct LaurentTable {
    c00: f64,
    // columns[k - 1][i]
    columns: Vec<Vec<Option<f64>>>,
}

impl LaurentTable {
    /// Empty table with `orders` non-trivial columns, each holding `width` entries.
    pub fn new(c00: f64, orders: usize, width: usize) -> Self {
        Self {
            c00,
            columns: vec![vec![None; width]; orders],
        }
    }

    pub fn c00(&self) -> f64 {
        self.c00
    }

    /// Highest order `k` the table has room for.
    pub fn orders(&self) -> usize {
        self.columns.len()
    }

    pub fn width(&self) -> usize {
        self.columns.first().map_or(0, Vec::len)
    }

    /// `C^k_i` if stored. Order zero follows `C^0_0 = C_0`, `C^0_i = 0` for `i > 0`.
    pub fn get(&self, k: usize, i: usize) -> Option<f64> {
        if k == 0 {
            return Some(if i == 0 { self.c00 } else { 0.0 });
        }
        self.columns.get(k - 1)?.get(i).copied().flatten()
    }

    /// Like [`get`](Self::get), but negative indices read as zero and absent
    /// entries are an error.
    pub fn entry(&self, k: isize, i: isize) -> Result<f64> {
        if k < 0 || i < 0 {
            return Ok(0.0);
        }
        let (k, i) = (k as usize, i as usize);
        self.get(k, i).ok_or(Error::MissingDependency { k, i })
    }

    pub fn set(&mut self, k: usize, i: usize, value: f64) -> Result<()> {
        if k == 0 || k > self.columns.len() || i >= self.width() {
            return Err(Error::InvalidParameter(format!(
                "C^{k}_{i} is outside the table"
            )));
        }
        self.columns[k - 1][i] = Some(value);
        Ok(())
    }

    /// Leading residues `C^{k+1}_k` for `k = 0..count`; these should read `N, 0, 0, ...`.
    pub fn quantization_residues(&self, count: usize) -> Result<Vec<f64>> {
        (0..count)
            .map(|k| self.entry(k as isize + 1, k as isize))
            .collect()
    }
}

/// Energy corrections `E_0..E_K`; the energy estimate is their sum.
#[derive(Debug, Clone, PartialEq)]
pub struct EnergyExpansion {
    pub corrections: Vec<f64>,
    pub state: QuantumState,
    pub series: CouplingSeries,
    pub max_order: usize,
    pub effective: EffectiveNumbers,
}

impl EnergyExpansion {
    pub fn total(&self) -> f64 {
        self.corrections.iter().sum()
    }
}

fn coupling(values: &[f64], index: isize) -> Result<f64> {
    if index < 0 {
        return Ok(0.0);
    }
    let index = index as usize;
    values.get(index).copied().ok_or(Error::SeriesTooShort {
        order: values.len() - 1,
        required: index,
    })
}

fn energy(energies: &[f64], j: usize) -> Result<f64> {
    energies.get(j).copied().ok_or(Error::MissingEnergy { j })
}

/// One Laurent coefficient from the order-by-order Riccati system:
///
/// ```text
/// C^k_i = -1/(2 C^0_0) [ (i-k+1) C^{k-1}_i + Σ_{j=1}^{k-1} Σ_{p=0}^{i} C^j_p C^{k-j}_{i-p}
///          + δ_{k,i} Σ_{j=0}^{k} E_j E_{k-j} - 2 E_{k-1} V_{i-k+1}
///          + δ_{k,2} Σ_{p=0}^{i} (V_p V_{i-p} - W_p W_{i-p}) - δ_{i,0} δ_{k,2} l(l+1)
///          - δ_{k,1} 2 m W_i ]
/// ```
///
/// `energies` holds the corrections computed so far. The diagonal `i == k`
/// needs `E_k` and is therefore only available once `E_k` is known.
pub fn laurent_coefficient(
    k: usize,
    i: usize,
    table: &LaurentTable,
    energies: &[f64],
    series: &CouplingSeries,
    state: &QuantumState,
) -> Result<f64> {
    if k == 0 {
        return Err(Error::InvalidParameter(
            "C^0 is fixed by the leading energy".into(),
        ));
    }
    let (ki, ii) = (k as isize, i as isize);
    let mut bracket = (ii - ki + 1) as f64 * table.entry(ki - 1, ii)?;
    for j in 1..k {
        for p in 0..=i {
            bracket += table.entry(j as isize, p as isize)? * table.entry((k - j) as isize, (i - p) as isize)?;
        }
    }
    if k == i {
        for j in 0..=k {
            bracket += energy(energies, j)? * energy(energies, k - j)?;
        }
    }
    bracket -= 2.0 * energy(energies, k - 1)? * coupling(series.v(), ii - ki + 1)?;
    if k == 2 {
        for p in 0..=i {
            let (vp, vq) = (coupling(series.v(), p as isize)?, coupling(series.v(), (i - p) as isize)?);
            let (wp, wq) = (coupling(series.w(), p as isize)?, coupling(series.w(), (i - p) as isize)?);
            bracket += vp * vq - wp * wq;
        }
        if i == 0 {
            bracket -= state.centrifugal();
        }
    }
    if k == 1 {
        bracket -= 2.0 * state.m * coupling(series.w(), ii)?;
    }
    Ok(-bracket / (2.0 * table.c00()))
}

/// Energy correction `E_k`, `k ≥ 1`, from the quantization condition `C^{k+1}_k = 0`.
///
/// Requires every `C^j_i` with `j < k`, the entries `C^k_i` with `i < k`, and
/// `E_0..E_{k-1}`.
fn next_energy(
    k: usize,
    table: &LaurentTable,
    energies: &[f64],
    series: &CouplingSeries,
    state: &QuantumState,
) -> Result<f64> {
    let c = |k: usize, i: usize| table.entry(k as isize, i as isize);
    let v = |i: usize| coupling(series.v(), i as isize);
    let w = |i: usize| coupling(series.w(), i as isize);
    let c00 = table.c00();
    let c01 = c(1, 0)?;
    let e0 = energy(energies, 0)?;

    // terms of the residue bracket other than those carrying C^k_k
    let mut upper = 0.0;
    for j in 2..k {
        for p in 0..=k {
            upper += c(j, p)? * c(k + 1 - j, k - p)?;
        }
    }
    if k >= 2 {
        for p in 1..=k {
            upper += 2.0 * c(1, p)? * c(k, k - p)?;
        }
    }
    if k == 1 {
        // Σ_{p=0}^{1} (V_p V_{1-p} - W_p W_{1-p})
        upper += 2.0 * (v(0)? * v(1)? - w(0)? * w(1)?);
    }

    // diagonal entry C^k_k without its E_0 E_k part
    let mut lower = c(k - 1, k)?;
    for j in 1..k {
        for p in 0..=k {
            lower += c(j, p)? * c(k - j, k - p)?;
        }
        lower += energy(energies, j)? * energy(energies, k - j)?;
    }
    lower -= 2.0 * energy(energies, k - 1)? * v(1)?;
    if k == 2 {
        for j in 0..=2 {
            lower += v(j)? * v(2 - j)? - w(j)? * w(2 - j)?;
        }
    }
    if k == 1 {
        lower -= 2.0 * state.m * w(1)?;
    }

    let denominator = 2.0 * (e0 * c01 + series.v0() * c00);
    let ek = c00 * c01 / denominator * (upper / c01 - lower / c00);
    if ek.is_finite() {
        Ok(ek)
    } else {
        Err(Error::DivergentTable { order: k })
    }
}

fn fill_column(
    table: &mut LaurentTable,
    k: usize,
    energies: &[f64],
    series: &CouplingSeries,
    state: &QuantumState,
) -> Result<()> {
    for i in 0..table.width() {
        if i == k && energies.len() <= k {
            continue;
        }
        let value = laurent_coefficient(k, i, table, energies, series, state)?;
        if !value.is_finite() {
            return Err(Error::DivergentTable { order: k });
        }
        table.set(k, i, value)?;
    }
    Ok(())
}

/// Energy corrections `E_0..E_K` and the Laurent table that produced them.
///
/// Column `k` is filled off the diagonal first, then `E_k` follows from the
/// quantization condition, then the diagonal `C^k_k`. The table keeps one
/// extra order so that the residue of order `K` can be checked afterwards.
pub fn energy_corrections_with_table(
    state: &QuantumState,
    series: &CouplingSeries,
    max_order: usize,
) -> Result<(EnergyExpansion, LaurentTable)> {
    let required = CouplingSeries::required_order(max_order);
    if series.order() < required {
        return Err(Error::SeriesTooShort {
            order: series.order(),
            required,
        });
    }
    if series.v0() == 0.0 && series.w0() == 0.0 {
        return Err(Error::NoCoulombSingularity);
    }
    let mut effective = effective_numbers(state, series)?;
    let e0 = leading_energy(state, series)?;
    let mu_sq = state.m * state.m - e0 * e0;
    if !(mu_sq > 0.0) {
        return Err(Error::NoBoundState { mu_sq });
    }
    effective.mu_sq = Some(mu_sq);

    let mut table = LaurentTable::new(-mu_sq.sqrt(), max_order + 1, max_order + 2);
    let mut energies = Vec::with_capacity(max_order + 1);
    energies.push(e0);

    for k in 1..=max_order + 1 {
        fill_column(&mut table, k, &energies, series, state)?;
        if k > max_order {
            break;
        }
        let ek = next_energy(k, &table, &energies, series, state)?;
        energies.push(ek);
        let diagonal = laurent_coefficient(k, k, &table, &energies, series, state)?;
        table.set(k, k, diagonal)?;
    }

    Ok((
        EnergyExpansion {
            corrections: energies,
            state: *state,
            series: series.clone(),
            max_order,
            effective,
        },
        table,
    ))
}

pub fn energy_corrections(
    state: &QuantumState,
    series: &CouplingSeries,
    max_order: usize,
) -> Result<EnergyExpansion> {
    energy_corrections_with_table(state, series, max_order).map(|(e, _)| e)
}
