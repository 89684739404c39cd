use super::config::{Experiment, Observable, RunConfig};
use super::output::{Cell, Metadata, SweepResult};
use crate::analysis::{measure, nm_witness_grid, von_neumann_entropy_avg, MeasurementRecord};
use crate::coin::{dimer_coin, hermitian_coin, nonhermitian_coin, CoinOp};
use crate::hilbert::{new_state, norm2, position_distribution, InitialStateKind, PositionDistribution, WalkState};
use crate::sweep::{self, linspace};
use crate::walk::{evolve, ShiftKind};
use crate::{Error, Result};

fn walk(coin: &CoinOp, steps: usize, shift: ShiftKind, initial: InitialStateKind) -> Result<WalkState> {
    let start = new_state(initial, steps.max(1))?;
    Ok(evolve(&start, coin, shift, steps)?.final_state)
}

fn distribution(
    coin: &CoinOp,
    steps: usize,
    shift: ShiftKind,
    initial: InitialStateKind,
) -> Result<PositionDistribution> {
    Ok(position_distribution(&walk(coin, steps, shift, initial)?))
}

fn distribution_rows(prefix: &[Cell], dist: &PositionDistribution, steps: usize) -> Vec<Vec<Cell>> {
    let n = steps as i64;
    dist.iter()
        .filter(|(m, _)| m.abs() <= n)
        .map(|(m, p)| {
            let mut row = prefix.to_vec();
            row.push(Cell::Int(m));
            row.push(Cell::Real(p));
            row
        })
        .collect()
}

fn grid(cfg: &RunConfig, name: &str, start: f64, stop: f64, count: usize) -> Vec<f64> {
    cfg.axis(name)
        .map(|a| a.values())
        .unwrap_or_else(|| linspace(start, stop, count))
}

fn list_or(list: &Option<Vec<f64>>, single: Option<f64>, default: &[f64]) -> Vec<f64> {
    list.clone()
        .or_else(|| single.map(|x| vec![x]))
        .unwrap_or_else(|| default.to_vec())
}

fn steps_or(cfg: &RunConfig, default: usize) -> usize {
    cfg.steps.unwrap_or(default)
}

/// The dimer coin leaks norm even at `λ = 0` unless `2Vτ ∈ πZ`; flag that.
fn lossless_leak_note(v: f64, lambdas: &[f64], taus: &[f64]) -> Option<String> {
    if !lambdas.contains(&0.0) {
        return None;
    }
    let leaks = taus.iter().any(|&tau| {
        dimer_coin(v, 0.0, tau)
            .map(|c| c.norm_factor() < 1.0 - 1e-12)
            .unwrap_or(false)
    });
    leaks.then(|| {
        "lambda = 0 dimer coin is sub-normalized (alpha1^2 + alpha2^2 = cos^2 + sin^2/4 < 1): \
         norm decays without dissipation"
            .to_string()
    })
}

fn base_metadata(cfg: &RunConfig) -> Metadata {
    let mut md = Metadata::new(cfg.experiment.name());
    md.param("shift", cfg.shift.name());
    md.param("initial", cfg.initial.name());
    md
}

fn flatten(rows: Vec<Vec<Vec<Cell>>>) -> Vec<Vec<Cell>> {
    rows.into_iter().flatten().collect()
}

fn fig1(cfg: &RunConfig) -> Result<SweepResult> {
    let steps = steps_or(cfg, 50);
    let alphas = grid(cfg, "alpha", 0.0, 1.0, 51);
    let mut md = base_metadata(cfg);
    md.param("coin", "hermitian");
    md.param("steps", steps);
    let mut out = SweepResult::new(md, &["alpha", "position", "probability"]);
    out.axis("alpha", &alphas);
    out.rows = flatten(sweep::try_map(&alphas, |&alpha| {
        let d = distribution(&hermitian_coin(alpha)?, steps, cfg.shift, cfg.initial)?;
        Ok(distribution_rows(&[Cell::Real(alpha)], &d, steps))
    })?);
    Ok(out)
}

fn fig2(cfg: &RunConfig) -> Result<SweepResult> {
    let steps = steps_or(cfg, 40);
    let lambdas = list_or(&cfg.lambdas, cfg.lambda, &[0.0, 0.15]);
    let inv_taus = grid(cfg, "inv_tau", 1.0, 10.0, 46);
    if let Some(bad) = inv_taus.iter().find(|&&x| !(x > 0.0)) {
        return Err(Error::config(None, "axis", format!("inv_tau must be positive, got {bad}")));
    }
    let mut md = base_metadata(cfg);
    md.param("coin", "dimer");
    md.param("steps", steps);
    md.param("v", cfg.v);
    md.param("lambdas", &lambdas);
    let taus: Vec<f64> = inv_taus.iter().map(|x| 1.0 / x).collect();
    md.notes.extend(lossless_leak_note(cfg.v, &lambdas, &taus));
    let mut out = SweepResult::new(md, &["lambda", "inv_tau", "position", "probability"]);
    out.axis("lambda", &lambdas);
    out.axis("inv_tau", &inv_taus);
    let cells: Vec<(f64, f64)> = lambdas
        .iter()
        .flat_map(|&l| inv_taus.iter().map(move |&x| (l, x)))
        .collect();
    let v = cfg.v;
    out.rows = flatten(sweep::try_map(&cells, |&(lambda, inv_tau)| {
        let d = distribution(&dimer_coin(v, lambda, 1.0 / inv_tau)?, steps, cfg.shift, cfg.initial)?;
        Ok(distribution_rows(&[Cell::Real(lambda), Cell::Real(inv_tau)], &d, steps))
    })?);
    Ok(out)
}

fn fig3(cfg: &RunConfig) -> Result<SweepResult> {
    let step_list: Vec<usize> = cfg.steps.map(|s| vec![s]).unwrap_or_else(|| vec![20, 30, 40, 50]);
    let lambdas = grid(cfg, "lambda", 0.0, 4.0, 41);
    let tau = cfg.tau.unwrap_or(1.0);
    let mut md = base_metadata(cfg);
    md.param("coin", "dimer");
    md.param("steps", &step_list);
    md.param("tau", tau);
    md.param("v", cfg.v);
    md.notes.extend(lossless_leak_note(cfg.v, &lambdas, &[tau]));
    let mut out = SweepResult::new(md, &["steps", "lambda", "position", "probability"]);
    out.axis("steps", &step_list.iter().map(|&s| s as f64).collect::<Vec<_>>());
    out.axis("lambda", &lambdas);
    let cells: Vec<(usize, f64)> = step_list
        .iter()
        .flat_map(|&s| lambdas.iter().map(move |&l| (s, l)))
        .collect();
    let v = cfg.v;
    out.rows = flatten(sweep::try_map(&cells, |&(steps, lambda)| {
        let d = distribution(&dimer_coin(v, lambda, tau)?, steps, cfg.shift, cfg.initial)?;
        Ok(distribution_rows(&[Cell::Int(steps as i64), Cell::Real(lambda)], &d, steps))
    })?);
    Ok(out)
}

fn fig4(cfg: &RunConfig) -> Result<SweepResult> {
    let steps = steps_or(cfg, 50);
    let taus = list_or(&cfg.taus, cfg.tau, &[1.0 / 5.0, 1.0 / 25.0, 1.0 / 50.0]);
    let lambdas = grid(cfg, "lambda", 0.0, 4.5, 91);
    let mut md = base_metadata(cfg);
    md.param("coin", "dimer");
    md.param("steps", steps);
    md.param("v", cfg.v);
    md.param("taus", &taus);
    md.notes.extend(lossless_leak_note(cfg.v, &lambdas, &taus));
    let mut out = SweepResult::new(md, &["tau", "lambda", "entropy"]);
    out.axis("tau", &taus);
    out.axis("lambda", &lambdas);
    let cells: Vec<(f64, f64)> = taus
        .iter()
        .flat_map(|&t| lambdas.iter().map(move |&l| (t, l)))
        .collect();
    let v = cfg.v;
    out.rows = sweep::try_map(&cells, |&(tau, lambda)| {
        let d = distribution(&dimer_coin(v, lambda, tau)?, steps, cfg.shift, cfg.initial)?;
        let s = von_neumann_entropy_avg(d.values(), steps)?;
        Ok(vec![Cell::Real(tau), Cell::Real(lambda), Cell::Real(s)])
    })?;
    Ok(out)
}

fn record_cells(r: &MeasurementRecord) -> [Cell; 4] {
    [
        Cell::Int(r.coin as i64),
        Cell::Int(r.position),
        Cell::Real(r.probability),
        Cell::Int(r.sign as i64),
    ]
}

fn fig5(cfg: &RunConfig) -> Result<SweepResult> {
    let lambda = cfg.lambda.unwrap_or(3.9);
    let taus = list_or(&cfg.taus, cfg.tau, &[0.1, 0.5]);
    let step_list: Vec<usize> = cfg.steps.map(|s| vec![s]).unwrap_or_else(|| vec![2, 5]);
    let mut md = base_metadata(cfg);
    md.param("coin", "dimer");
    md.param("lambda", lambda);
    md.param("v", cfg.v);
    md.param("steps", &step_list);
    md.param("taus", &taus);
    let mut out = SweepResult::new(md, &["steps", "tau", "coin", "position", "probability", "sign"]);
    out.axis("steps", &step_list.iter().map(|&s| s as f64).collect::<Vec<_>>());
    out.axis("tau", &taus);
    let cells: Vec<(usize, f64)> = step_list
        .iter()
        .flat_map(|&s| taus.iter().map(move |&t| (s, t)))
        .collect();
    let v = cfg.v;
    out.rows = flatten(sweep::try_map(&cells, |&(steps, tau)| {
        let state = walk(&dimer_coin(v, lambda, tau)?, steps, cfg.shift, cfg.initial)?;
        Ok(measure(&state)?
            .iter()
            .map(|r| {
                let mut row = vec![Cell::Int(steps as i64), Cell::Real(tau)];
                row.extend(record_cells(r));
                row
            })
            .collect())
    })?);
    Ok(out)
}

/// Two-step measurement table evaluated from the closed-form amplitudes,
/// sorted by `(coin, position)`. Rows whose amplitude vanishes are omitted.
pub fn table1_closed_form(alpha1: f64, alpha2: f64) -> Vec<MeasurementRecord> {
    let (a, b) = (alpha1, alpha2);
    let beta2 = (a * a + b * b).powi(2);
    let amps = [
        (0, -2, 0.5 * a * a),
        (0, -1, -0.5 * a * b),
        (0, 0, 0.5 * a * a + b * b),
        (0, 1, 0.5 * a * b),
        (1, -1, 0.5 * a * a),
        (1, 0, 0.5 * a * b),
        (1, 1, -0.5 * a * a),
        (1, 2, -0.5 * a * b),
    ];
    amps.iter()
        .filter(|&&(_, _, amp)| amp != 0.0)
        .map(|&(coin, position, amp)| MeasurementRecord {
            coin,
            position,
            probability: amp * amp / beta2,
            sign: if amp < 0.0 { -1 } else { 1 },
        })
        .collect()
}

fn table1(cfg: &RunConfig) -> Result<SweepResult> {
    if let Some(s) = cfg.steps.filter(|&s| s != 2) {
        return Err(Error::config(None, "steps", format!("table1 is a two-step table, got {s}")));
    }
    if cfg.shift != ShiftKind::Generalized || cfg.initial != InitialStateKind::Localized {
        return Err(Error::config(
            None,
            "shift",
            "table1 needs the generalized shift and the localized start",
        ));
    }
    let mut md = base_metadata(cfg);
    let coin = match (cfg.alpha1, cfg.alpha2, cfg.lambda, cfg.tau) {
        (None, None, Some(lambda), Some(tau)) => {
            md.param("coin", "dimer");
            md.param("lambda", lambda);
            md.param("tau", tau);
            md.param("v", cfg.v);
            dimer_coin(cfg.v, lambda, tau)?
        }
        (a1, a2, _, _) => {
            md.param("coin", "nonhermitian");
            nonhermitian_coin(a1.unwrap_or(0.6), a2.unwrap_or(0.3))?
        }
    };
    md.param("alpha1", coin.alpha1());
    md.param("alpha2", coin.alpha2());
    md.param("steps", 2);
    let state = walk(&coin, 2, ShiftKind::Generalized, InitialStateKind::Localized)?;
    let measured = measure(&state)?;
    let expected = table1_closed_form(coin.alpha1(), coin.alpha2());
    let mut out = SweepResult::new(
        md,
        &["coin", "position", "probability", "sign", "closed_form_probability", "closed_form_sign"],
    );
    for r in &measured {
        let closed = expected
            .iter()
            .find(|e| e.coin == r.coin && e.position == r.position);
        let mut row = record_cells(r).to_vec();
        row.push(Cell::Real(closed.map_or(0.0, |e| e.probability)));
        row.push(Cell::Int(closed.map_or(0, |e| e.sign as i64)));
        out.rows.push(row);
    }
    Ok(out)
}

fn fig6(cfg: &RunConfig) -> Result<SweepResult> {
    let lambdas = list_or(&cfg.lambdas, cfg.lambda, &[0.0, 1.0, 3.0]);
    let lapses = grid(cfg, "T", 0.01, 1.0, 100);
    let taus = grid(cfg, "tau", 0.01, 1.0, 100);
    let mut md = base_metadata(cfg);
    md.param("coin", "dimer");
    md.param("steps", crate::analysis::WITNESS_STEPS);
    md.param("v", cfg.v);
    md.param("tau_prime", cfg.tau_prime);
    md.param("lambdas", &lambdas);
    let mut out = SweepResult::new(md, &["lambda", "T", "tau", "D"]);
    out.axis("lambda", &lambdas);
    out.axis("T", &lapses);
    out.axis("tau", &taus);
    for &lambda in &lambdas {
        let d = nm_witness_grid(cfg.v, lambda, &lapses, &taus, cfg.tau_prime)?;
        let mut k = 0;
        for &t in &lapses {
            for &tau in &taus {
                out.rows.push(vec![Cell::Real(lambda), Cell::Real(t), Cell::Real(tau), Cell::Real(d[k])]);
                k += 1;
            }
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, Default)]
struct CustomPoint {
    alpha: Option<f64>,
    alpha1: Option<f64>,
    alpha2: Option<f64>,
    lambda: Option<f64>,
    tau: Option<f64>,
    v: f64,
    steps: usize,
}

impl CustomPoint {
    fn set(&mut self, name: &str, x: f64) {
        match name {
            "alpha" => self.alpha = Some(x),
            "alpha1" => self.alpha1 = Some(x),
            "alpha2" => self.alpha2 = Some(x),
            "lambda" => self.lambda = Some(x),
            "tau" => self.tau = Some(x),
            "inv_tau" => self.tau = Some(1.0 / x),
            "v" => self.v = x,
            "steps" => self.steps = x.round().max(1.0) as usize,
            _ => {}
        }
    }

    fn coin(&self) -> Result<CoinOp> {
        if let Some(alpha) = self.alpha {
            return hermitian_coin(alpha);
        }
        match (self.alpha1, self.alpha2) {
            (Some(a1), Some(a2)) => return nonhermitian_coin(a1, a2),
            (None, None) => {}
            _ => {
                return Err(Error::config(
                    None,
                    "alpha1",
                    "alpha1 and alpha2 must be given together",
                ))
            }
        }
        if self.lambda.is_some() || self.tau.is_some() {
            return dimer_coin(self.v, self.lambda.unwrap_or(0.0), self.tau.unwrap_or(1.0));
        }
        Err(Error::config(
            None,
            "coin",
            "no coin parameters: give alpha, alpha1+alpha2, or lambda/tau",
        ))
    }
}

fn custom(cfg: &RunConfig) -> Result<SweepResult> {
    let base = CustomPoint {
        alpha: cfg.alpha,
        alpha1: cfg.alpha1,
        alpha2: cfg.alpha2,
        lambda: cfg.lambda,
        tau: cfg.tau,
        v: cfg.v,
        steps: steps_or(cfg, 50),
    };
    // fail early on an unusable base coin when nothing is swept
    if cfg.axes.is_empty() {
        base.coin()?;
    }

    let axes: Vec<(String, Vec<f64>)> = cfg.axes.iter().map(|a| (a.name.clone(), a.values())).collect();
    let mut cells: Vec<Vec<f64>> = vec![Vec::new()];
    for (_, values) in &axes {
        cells = cells
            .into_iter()
            .flat_map(|prefix| {
                values.iter().map(move |&x| {
                    let mut p = prefix.clone();
                    p.push(x);
                    p
                })
            })
            .collect();
    }

    let mut md = base_metadata(cfg);
    md.param("alpha", cfg.alpha);
    md.param("alpha1", cfg.alpha1);
    md.param("alpha2", cfg.alpha2);
    md.param("lambda", cfg.lambda);
    md.param("tau", cfg.tau);
    md.param("v", cfg.v);
    md.param("steps", base.steps);
    let observable = match cfg.observable {
        Observable::Distribution => "distribution",
        Observable::Entropy => "entropy",
        Observable::Norm => "norm",
    };
    md.param("observable", observable);

    let mut columns: Vec<&str> = axes.iter().map(|(n, _)| n.as_str()).collect();
    match cfg.observable {
        Observable::Distribution => columns.extend(["position", "probability"]),
        Observable::Entropy => columns.push("entropy"),
        Observable::Norm => columns.push("norm"),
    }
    let mut out = SweepResult::new(md, &columns);
    for (name, values) in &axes {
        out.axis(name, values);
    }

    let names: Vec<&str> = axes.iter().map(|(n, _)| n.as_str()).collect();
    out.rows = flatten(sweep::try_map(&cells, |xs| {
        let mut p = base;
        for (name, &x) in names.iter().zip(xs) {
            p.set(name, x);
        }
        let state = walk(&p.coin()?, p.steps, cfg.shift, cfg.initial)?;
        let prefix: Vec<Cell> = names
            .iter()
            .zip(xs)
            .map(|(&n, &x)| if n == "steps" { Cell::Int(p.steps as i64) } else { Cell::Real(x) })
            .collect();
        Ok(match cfg.observable {
            Observable::Distribution => distribution_rows(&prefix, &position_distribution(&state), p.steps),
            Observable::Entropy => {
                let d = position_distribution(&state);
                let mut row = prefix;
                row.push(Cell::Real(von_neumann_entropy_avg(d.values(), p.steps)?));
                vec![row]
            }
            Observable::Norm => {
                let mut row = prefix;
                row.push(Cell::Real(norm2(&state)));
                vec![row]
            }
        })
    })?);
    Ok(out)
}

/// Evaluates a run configuration. Cells are computed independently (in
/// parallel when enabled) and emitted in grid order.
pub fn run_experiment(cfg: &RunConfig) -> Result<SweepResult> {
    cfg.validate()?;
    match cfg.experiment {
        Experiment::Fig1 => fig1(cfg),
        Experiment::Fig2 => fig2(cfg),
        Experiment::Fig3 => fig3(cfg),
        Experiment::Fig4 => fig4(cfg),
        Experiment::Fig5 => fig5(cfg),
        Experiment::Table1 => table1(cfg),
        Experiment::Fig6 => fig6(cfg),
        Experiment::Custom => custom(cfg),
    }
}
