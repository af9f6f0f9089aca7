use kg_lpt::closed_forms::{
    binding_threshold_lambda, critical_lambda, exact_swave_energy, exact_swave_expansion,
};
use kg_lpt::numerov::{particle_bracket, solve_eigenvalue, NumerovConfig, RadialSolution};
use kg_lpt::potentials::{hulthen_closed_form, hulthen_series};
use kg_lpt::reference::{
    Coupling, PARTIAL_SUM_COLUMNS, SCREENING_L, SCREENING_N, SCREENING_ORDER, SCREENING_ROWS,
};
use kg_lpt::summation::{percent_error, stabilized_estimate, Pairing, PartialSumSequence};
use kg_lpt::{energy_corrections, CouplingSeries, Error, ErrorKind, HulthenParams, QuantumState};
use rayon::prelude::*;

use crate::args::{
    CorrectionsArgs, CriticalArgs, ExactArgs, NumerovArgs, Physics, TableArgs, MAX_ORDER,
};
use crate::report::{
    fixed, CriticalSummary, Deviation, ExactSummary, Grid, NumerovSummary, Params, Rendered, Report,
    Stabilized, TableReport,
};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Model(#[from] Error),
    #[error("cannot write output: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Model(e) => match e.kind() {
                ErrorKind::Domain => 2,
                ErrorKind::Convergence => 3,
                ErrorKind::Internal => 1,
            },
            CliError::Io(_) => 1,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;

struct Expansion {
    corrections: Vec<f64>,
    sums: Vec<f64>,
}

fn expand(p: &HulthenParams, state: &QuantumState, order: usize) -> Result<Expansion, Error> {
    if order > MAX_ORDER {
        return Err(Error::InvalidParameter(format!(
            "order K = {order} exceeds the cap of {MAX_ORDER}"
        )));
    }
    let series = hulthen_series(p, CouplingSeries::required_order(order))?;
    let exp = energy_corrections(state, &series, order)?;
    let sums = PartialSumSequence::from_corrections(&exp.corrections).sums;
    Ok(Expansion {
        corrections: exp.corrections,
        sums,
    })
}

fn solve(p: &HulthenParams, state: &QuantumState, config: &NumerovConfig) -> Result<RadialSolution, Error> {
    let pot = hulthen_closed_form(p)?;
    solve_eigenvalue(&pot, state, particle_bracket(state.m), config)
}

fn numerov_summary(sol: &RadialSolution, config: &NumerovConfig) -> NumerovSummary {
    NumerovSummary {
        energy: sol.energy,
        nodes: sol.nodes,
        mismatch: sol.mismatch,
        match_radius: sol.match_radius,
        steps: config.steps,
    }
}

fn physics_params(ph: &Physics, order: Option<usize>) -> Params {
    Params {
        a: ph.a,
        b: ph.b,
        lambda: Some(ph.lambda),
        n: ph.n,
        l: ph.l,
        m: ph.mass,
        order,
    }
}

fn series_grid(corrections: &[f64], sums: &[f64], reference: Option<f64>) -> CliResult<Grid> {
    let mut header = vec!["k", "E_k", "S_k"];
    if reference.is_some() {
        header.push("error_pct");
    }
    let mut grid = Grid::new(header);
    for (k, (e, s)) in corrections.iter().zip(sums).enumerate() {
        let mut row = vec![k.to_string(), fixed(*e), fixed(*s)];
        if let Some(r) = reference {
            row.push(fixed(percent_error(*s, r)?));
        }
        grid.push(row);
    }
    Ok(grid)
}

pub fn corrections(args: &CorrectionsArgs) -> CliResult<Rendered<Report>> {
    let ph = &args.physics;
    let p = HulthenParams::new(ph.a, ph.b, ph.lambda)?;
    let state = QuantumState::new(ph.n, ph.l, ph.mass)?;
    let exp = expand(&p, &state, args.order)?;
    let pairing = Pairing::from(args.pairing);
    let stabilized = stabilized_estimate(
        &PartialSumSequence {
            sums: exp.sums.clone(),
        },
        pairing,
    );

    let mut report = Report::new("corrections", physics_params(ph, Some(args.order)));
    let mut notes = Vec::new();
    if let Some(est) = stabilized {
        notes.push(format!(
            "averaged estimate: {} (S_{} and S_{})",
            fixed(est.value),
            est.index,
            est.index + 1
        ));
        report.stabilized = Some(Stabilized {
            value: est.value,
            index: est.index,
        });
    }
    let last = *exp.sums.last().expect("at least E_0");
    if args.numerov {
        let config = args.grid.config();
        let sol = solve(&p, &state, &config)?;
        let pct = percent_error(last, sol.energy)?;
        notes.push(format!("numerical level: {} (nodes: {})", fixed(sol.energy), sol.nodes));
        notes.push(format!("error of S_{}: {} %", args.order, fixed(pct)));
        report.reference = Some(sol.energy);
        report.error_pct = Some(pct);
        report.numerov = Some(numerov_summary(&sol, &config));
    }
    let grid = series_grid(&exp.corrections, &exp.sums, report.reference)?;
    report.corrections = exp.corrections;
    report.partial_sums = exp.sums;
    Ok(Rendered {
        data: report,
        grid,
        notes,
    })
}

fn column_label(c: Coupling, n: u32) -> String {
    format!("{} n={n}", c.label())
}

fn max_abs_dev(ours: impl Iterator<Item = f64>, printed: impl Iterator<Item = f64>) -> f64 {
    ours.zip(printed).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

pub fn table2(args: &TableArgs) -> CliResult<Rendered<TableReport>> {
    let config = args.grid.config();
    let order = 10;
    let runs: Vec<Report> = PARTIAL_SUM_COLUMNS
        .par_iter()
        .map(|col| -> CliResult<Report> {
            let (a, b) = col.coupling.strengths();
            let p = HulthenParams::new(a, b, col.lambda)?;
            let state = QuantumState::new(col.n, col.l, 1.0)?;
            let exp = expand(&p, &state, order)?;
            let mut report = Report::new(
                "table2",
                Params {
                    a,
                    b,
                    lambda: Some(col.lambda),
                    n: col.n,
                    l: col.l,
                    m: 1.0,
                    order: Some(order),
                },
            );
            if !args.no_numerov {
                let sol = solve(&p, &state, &config)?;
                report.error_pct = Some(percent_error(exp.sums[order], sol.energy)?);
                report.reference = Some(sol.energy);
                report.numerov = Some(numerov_summary(&sol, &config));
            }
            report.corrections = exp.corrections;
            report.partial_sums = exp.sums;
            Ok(report)
        })
        .collect::<CliResult<_>>()?;

    let labels: Vec<String> = PARTIAL_SUM_COLUMNS
        .iter()
        .map(|c| column_label(c.coupling, c.n))
        .collect();
    let mut grid = Grid::new(std::iter::once("k".to_string()).chain(labels.iter().cloned()));
    for k in 0..=order {
        grid.push(std::iter::once(k.to_string()).chain(runs.iter().map(|r| fixed(r.partial_sums[k]))));
    }
    if !args.no_numerov {
        grid.push(
            std::iter::once("E_num".to_string())
                .chain(runs.iter().map(|r| fixed(r.reference.expect("solved")))),
        );
    }
    let deviation: Vec<Deviation> = runs
        .iter()
        .zip(&PARTIAL_SUM_COLUMNS)
        .zip(&labels)
        .map(|((run, col), label)| {
            let mut dev = max_abs_dev(run.partial_sums.iter().copied(), col.sums.iter().copied());
            if let Some(e) = run.reference {
                dev = dev.max((e - col.numerical).abs());
            }
            Deviation {
                column: label.clone(),
                max_abs: dev,
            }
        })
        .collect();
    grid.push(std::iter::once("max|dev|".to_string()).chain(deviation.iter().map(|d| format!("{:.1e}", d.max_abs))));
    let worst = deviation.iter().map(|d| d.max_abs).fold(0.0, f64::max);
    Ok(Rendered {
        data: TableReport {
            command: "table2",
            runs,
            deviation,
        },
        grid,
        notes: vec![format!("largest deviation from the reference table: {worst:.2e}")],
    })
}

pub fn table1(args: &TableArgs) -> CliResult<Rendered<TableReport>> {
    let config = args.grid.config();
    let jobs: Vec<(usize, usize)> = (0..SCREENING_ROWS.len())
        .flat_map(|r| (0..Coupling::ALL.len()).map(move |c| (r, c)))
        .collect();
    let runs: Vec<Report> = jobs
        .par_iter()
        .map(|&(r, c)| -> CliResult<Report> {
            let lambda = SCREENING_ROWS[r].lambda;
            let (a, b) = Coupling::ALL[c].strengths();
            let p = HulthenParams::new(a, b, lambda)?;
            let state = QuantumState::new(SCREENING_N, SCREENING_L, 1.0)?;
            let exp = expand(&p, &state, SCREENING_ORDER)?;
            let mut report = Report::new(
                "table1",
                Params {
                    a,
                    b,
                    lambda: Some(lambda),
                    n: SCREENING_N,
                    l: SCREENING_L,
                    m: 1.0,
                    order: Some(SCREENING_ORDER),
                },
            );
            if !args.no_numerov {
                let sol = solve(&p, &state, &config)?;
                report.error_pct = Some(percent_error(exp.sums[SCREENING_ORDER], sol.energy)?);
                report.reference = Some(sol.energy);
                report.numerov = Some(numerov_summary(&sol, &config));
            }
            report.corrections = exp.corrections;
            report.partial_sums = exp.sums;
            Ok(report)
        })
        .collect::<CliResult<_>>()?;

    let per_row = Coupling::ALL.len();
    let mut header = vec!["lambda".to_string()];
    for c in Coupling::ALL {
        header.push(c.label().to_string());
        if !args.no_numerov {
            header.push(format!("eps_{}%", &c.label()[2..]));
        }
    }
    let mut grid = Grid::new(header);
    let mut e_dev = [0.0f64; 3];
    let mut p_dev = [0.0f64; 3];
    for (r, row) in SCREENING_ROWS.iter().enumerate() {
        let mut cells = vec![format!("{:.2}", row.lambda)];
        for c in 0..per_row {
            let run = &runs[r * per_row + c];
            let s5 = run.partial_sums[SCREENING_ORDER];
            cells.push(fixed(s5));
            e_dev[c] = e_dev[c].max((s5 - row.energy[c]).abs());
            if let Some(pct) = run.error_pct {
                cells.push(fixed(pct));
                p_dev[c] = p_dev[c].max((pct - row.error_pct[c]).abs());
            }
        }
        grid.push(cells);
    }
    let mut deviation = Vec::new();
    let mut footer = vec!["max|dev|".to_string()];
    for (c, coupling) in Coupling::ALL.iter().enumerate() {
        footer.push(format!("{:.1e}", e_dev[c]));
        deviation.push(Deviation {
            column: coupling.label().to_string(),
            max_abs: e_dev[c],
        });
        if !args.no_numerov {
            footer.push(format!("{:.1e}", p_dev[c]));
            deviation.push(Deviation {
                column: format!("eps_{}%", &coupling.label()[2..]),
                max_abs: p_dev[c],
            });
        }
    }
    grid.push(footer);
    Ok(Rendered {
        data: TableReport {
            command: "table1",
            runs,
            deviation,
        },
        grid,
        notes: vec![format!(
            "partial sums through order {SCREENING_ORDER}; n = {SCREENING_N}, l = {SCREENING_L}, a = b = 1"
        )],
    })
}

pub fn numerov(args: &NumerovArgs) -> CliResult<Rendered<Report>> {
    let ph = &args.physics;
    let p = HulthenParams::new(ph.a, ph.b, ph.lambda)?;
    let state = QuantumState::new(ph.n, ph.l, ph.mass)?;
    let config = args.grid.config();
    let sol = solve(&p, &state, &config)?;
    let mut grid = Grid::new(["quantity", "value"]);
    grid.push(["energy".to_string(), fixed(sol.energy)]);
    grid.push(["nodes".to_string(), sol.nodes.to_string()]);
    grid.push(["mismatch".to_string(), format!("{:.3e}", sol.mismatch)]);
    grid.push(["match_radius".to_string(), fixed(sol.match_radius)]);
    let mut report = Report::new("numerov", physics_params(ph, None));
    report.reference = Some(sol.energy);
    report.numerov = Some(numerov_summary(&sol, &config));
    Ok(Rendered {
        data: report,
        grid,
        notes: Vec::new(),
    })
}

pub fn exact_swave(args: &ExactArgs) -> CliResult<Rendered<Report>> {
    let p = HulthenParams::new(args.a, args.b, args.lambda)?;
    let exact = exact_swave_energy(&p, args.n, args.mass)?;
    let terms = exact_swave_expansion(&p, args.n, args.mass)?.to_vec();
    let sums = PartialSumSequence::from_corrections(&terms).sums;
    let params = Params {
        a: args.a,
        b: args.b,
        lambda: Some(args.lambda),
        n: args.n,
        l: 0,
        m: args.mass,
        order: Some(terms.len() - 1),
    };
    let mut report = Report::new("exact-swave", params);
    let mut notes = vec![format!(
        "exact level: {} (kappa = {}, N~ = {})",
        fixed(exact.energy),
        fixed(exact.kappa),
        fixed(exact.cap_n_tilde)
    )];
    report.reference = Some(exact.energy);
    report.error_pct = Some(percent_error(*sums.last().expect("six terms"), exact.energy)?);
    report.exact = Some(ExactSummary {
        energy: exact.energy,
        kappa: exact.kappa,
        cap_n_tilde: exact.cap_n_tilde,
    });
    if args.numerov {
        let config = args.grid.config();
        let state = QuantumState::new(args.n, 0, args.mass)?;
        let sol = solve(&p, &state, &config)?;
        notes.push(format!(
            "numerical level: {} (difference {:.2e})",
            fixed(sol.energy),
            sol.energy - exact.energy
        ));
        report.numerov = Some(numerov_summary(&sol, &config));
    }
    let grid = series_grid(&terms, &sums, Some(exact.energy))?;
    report.corrections = terms;
    report.partial_sums = sums;
    Ok(Rendered {
        data: report,
        grid,
        notes,
    })
}

pub fn critical(args: &CriticalArgs) -> CliResult<Rendered<Report>> {
    let cr = critical_lambda(args.a, args.b, args.n, args.mass)?;
    let thr = binding_threshold_lambda(args.a, args.b, args.n, args.mass)?;
    let mut grid = Grid::new(["quantity", "value"]);
    grid.push(["critical_lambda".to_string(), fixed(cr)]);
    grid.push(["binding_threshold".to_string(), fixed(thr)]);
    let params = Params {
        a: args.a,
        b: args.b,
        lambda: None,
        n: args.n,
        l: 0,
        m: args.mass,
        order: None,
    };
    let mut report = Report::new("critical-lambda", params);
    report.critical = Some(CriticalSummary {
        critical_lambda: cr,
        binding_threshold: thr,
    });
    Ok(Rendered {
        data: report,
        grid,
        notes: vec![
            "the s-wave level reaches E = m at the binding threshold; no level survives beyond it".to_string(),
        ],
    })
}
