//! Row generation for every command.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

use mzent_core::report::visibility_point;
use mzent_core::{
    evaluate_point, Engine, Observable, OperatingPoint, PhiScan, SweepResult,
};
use rayon::prelude::*;

use crate::config::{CommandKind, EngineChoice, RunConfig};
use crate::CliError;

/// Squeezing fractions of the curve families.
pub const GAMMA_CURVES: [f64; 5] = [0.2, 0.4, 0.6, 0.8, 1.0];
pub const GAMMA2_CURVES: [f64; 6] = [0.0, 0.2, 0.4, 0.6, 0.8, 1.0];
pub const N_MIN: f64 = 0.1;
pub const N_MAX: f64 = 50.0;

/// Validation grid of `compare`.
pub const COMPARE_N: [f64; 3] = [0.5, 1.0, 3.0];
pub const COMPARE_GAMMA: [f64; 3] = [0.0, 0.5, 1.0];
pub const COMPARE_PHI: [f64; 4] = [0.0, PI / 8.0, FRAC_PI_4, FRAC_PI_2];
pub const TOL_EPSILON: f64 = 2e-3;
pub const TOL_MOMENT: f64 = 1e-3;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Cell {
    Real(f64),
    Int(usize),
}

impl Cell {
    fn key(&self) -> f64 {
        match *self {
            Cell::Real(x) => x,
            Cell::Int(k) => k as f64,
        }
    }
}

/// Header and rows of one command's CSV.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    /// Sorts rows ascending, comparing columns left to right.
    fn sorted(mut self) -> Self {
        self.rows.sort_by(|x, y| {
            x.iter()
                .zip(y)
                .map(|(a, b)| a.key().total_cmp(&b.key()))
                .find(|o| o.is_ne())
                .unwrap_or(std::cmp::Ordering::Equal)
        });
        self
    }
}

/// Result of a command: the table and, for `compare`, a summary and the
/// first tolerance breach.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub table: Table,
    pub summary: Option<String>,
    pub breach: Option<String>,
}

impl From<Table> for Outcome {
    fn from(table: Table) -> Self {
        Outcome {
            table,
            summary: None,
            breach: None,
        }
    }
}

/// `n` points from 0 to `hi` inclusive.
fn linear(n: usize, hi: f64) -> Vec<f64> {
    (0..n).map(|k| hi * k as f64 / (n - 1) as f64).collect()
}

/// `n` log-spaced points over `[N_MIN, N_MAX]`.
pub fn n_grid(n: usize) -> Vec<f64> {
    let ratio = N_MAX / N_MIN;
    (0..n)
        .map(|k| {
            if k + 1 == n {
                N_MAX
            } else {
                N_MIN * ratio.powf(k as f64 / (n - 1) as f64)
            }
        })
        .collect()
}

/// Evaluates `f` over `items` in parallel, keeping input order; the first
/// failure in that order wins.
fn par_rows<T: Sync, F>(items: &[T], f: F) -> Result<Vec<Vec<Cell>>, CliError>
where
    F: Fn(&T) -> Result<Vec<Cell>, CliError> + Sync + Send,
{
    items.par_iter().map(f).collect::<Vec<_>>().into_iter().collect()
}

fn single_engine(cfg: &RunConfig) -> Result<Engine, CliError> {
    match cfg.engine {
        EngineChoice::Gaussian => Ok(Engine::Gaussian),
        EngineChoice::Fock => Ok(Engine::Fock),
        EngineChoice::Both => Err(CliError::Usage(
            "this command writes one engine's values; use --engine gaussian or fock".into(),
        )),
    }
}

fn eval(cfg: &RunConfig, p: OperatingPoint, engine: Engine) -> Result<SweepResult, CliError> {
    Ok(evaluate_point(p, engine, cfg.dim, cfg.tail_tol)?)
}

pub fn run(cfg: &RunConfig) -> Result<Outcome, CliError> {
    match cfg.command {
        CommandKind::Point => point(cfg).map(Outcome::from),
        CommandKind::Fig2a => fig2a(cfg).map(Outcome::from),
        CommandKind::Fig2b => fig2b(cfg).map(Outcome::from),
        CommandKind::Fig3 => fig3(cfg).map(Outcome::from),
        CommandKind::Fig4a => fig4(cfg, Observable::K).map(Outcome::from),
        CommandKind::Fig4b => fig4(cfg, Observable::H).map(Outcome::from),
        CommandKind::Compare => compare(cfg),
    }
}

fn point(cfg: &RunConfig) -> Result<Table, CliError> {
    let gamma = cfg.gamma.unwrap_or(crate::config::DEFAULT_GAMMA);
    let p = OperatingPoint {
        n: cfg.n,
        gamma,
        gamma2: cfg.gamma2.unwrap_or(gamma),
        phi: cfg.phi,
    };
    let lead = vec![
        Cell::Real(p.n),
        Cell::Real(p.gamma),
        Cell::Real(p.gamma2),
        Cell::Real(p.phi),
    ];
    let values = |r: &SweepResult| {
        [r.epsilon, r.n_phi, r.k, r.h].map(Cell::Real).to_vec()
    };
    let trunc = |r: &SweepResult| {
        let t = r.truncation.expect("fock results carry truncation info");
        vec![Cell::Int(t.dim), Cell::Real(t.tail)]
    };
    let base = vec!["N", "gamma", "gamma2", "phi"];
    match cfg.engine {
        EngineChoice::Gaussian => {
            let r = eval(cfg, p, Engine::Gaussian)?;
            let mut header = base;
            header.extend(["epsilon", "n_phi", "K", "H"]);
            Ok(Table {
                header,
                rows: vec![[lead, values(&r)].concat()],
            })
        }
        EngineChoice::Fock => {
            let r = eval(cfg, p, Engine::Fock)?;
            let mut header = base;
            header.extend(["epsilon", "n_phi", "K", "H", "D_used", "tail"]);
            Ok(Table {
                header,
                rows: vec![[lead, values(&r), trunc(&r)].concat()],
            })
        }
        EngineChoice::Both => {
            let g = eval(cfg, p, Engine::Gaussian)?;
            let f = eval(cfg, p, Engine::Fock)?;
            let mut header = base;
            header.extend([
                "epsilon_gaussian",
                "epsilon_fock",
                "n_phi_gaussian",
                "n_phi_fock",
                "K_gaussian",
                "K_fock",
                "H_gaussian",
                "H_fock",
                "d_epsilon",
                "d_n_phi",
                "d_K",
                "d_H",
                "D_used",
                "tail",
            ]);
            let pairs = [
                (g.epsilon, f.epsilon),
                (g.n_phi, f.n_phi),
                (g.k, f.k),
                (g.h, f.h),
            ];
            let mut row = lead;
            for (x, y) in pairs {
                row.extend([Cell::Real(x), Cell::Real(y)]);
            }
            row.extend(pairs.iter().map(|(x, y)| Cell::Real((x - y).abs())));
            row.extend(trunc(&f));
            Ok(Table {
                header,
                rows: vec![row],
            })
        }
    }
}

fn fig2a(cfg: &RunConfig) -> Result<Table, CliError> {
    let engine = single_engine(cfg)?;
    let g = cfg.grid.unwrap_or(21);
    let points: Vec<(f64, f64)> = linear(g, 1.0)
        .into_iter()
        .flat_map(|gamma| linear(g, FRAC_PI_2).into_iter().map(move |phi| (gamma, phi)))
        .collect();
    let rows = par_rows(&points, |&(gamma, phi)| {
        let p = OperatingPoint {
            n: cfg.n,
            gamma,
            gamma2: gamma,
            phi,
        };
        let r = eval(cfg, p, engine)?;
        Ok(vec![Cell::Real(gamma), Cell::Real(phi), Cell::Real(r.epsilon)])
    })?;
    Ok(Table {
        header: vec!["gamma", "phi", "epsilon"],
        rows,
    }
    .sorted())
}

fn gamma_set(chosen: Option<f64>, default: &[f64]) -> Vec<f64> {
    chosen.map_or_else(|| default.to_vec(), |g| vec![g])
}

fn fig2b(cfg: &RunConfig) -> Result<Table, CliError> {
    let engine = single_engine(cfg)?;
    let gammas = gamma_set(cfg.gamma, &GAMMA_CURVES);
    let points: Vec<(f64, f64)> = n_grid(cfg.grid.unwrap_or(40))
        .into_iter()
        .flat_map(|n| gammas.iter().map(move |&g| (n, g)))
        .collect();
    let rows = par_rows(&points, |&(n, gamma)| {
        let p = OperatingPoint {
            n,
            gamma,
            gamma2: gamma,
            phi: cfg.phi,
        };
        let r = eval(cfg, p, engine)?;
        Ok(vec![Cell::Real(n), Cell::Real(gamma), Cell::Real(r.epsilon)])
    })?;
    Ok(Table {
        header: vec!["N", "gamma", "epsilon"],
        rows,
    }
    .sorted())
}

fn fig3(cfg: &RunConfig) -> Result<Table, CliError> {
    let engine = single_engine(cfg)?;
    let gamma2s = gamma_set(cfg.gamma2, &GAMMA2_CURVES);
    let points: Vec<(f64, f64)> = linear(cfg.grid.unwrap_or(21), 1.0)
        .into_iter()
        .flat_map(|g1| gamma2s.iter().map(move |&g2| (g1, g2)))
        .collect();
    let rows = par_rows(&points, |&(g1, g2)| {
        let p = OperatingPoint {
            n: cfg.n,
            gamma: g1,
            gamma2: g2,
            phi: cfg.phi,
        };
        let r = eval(cfg, p, engine)?;
        Ok(vec![Cell::Real(g1), Cell::Real(g2), Cell::Real(r.epsilon)])
    })?;
    Ok(Table {
        header: vec!["gamma1", "gamma2", "epsilon"],
        rows,
    }
    .sorted())
}

fn fig4(cfg: &RunConfig, which: Observable) -> Result<Table, CliError> {
    let engine = single_engine(cfg)?;
    let gammas = gamma_set(cfg.gamma, &GAMMA_CURVES);
    let points: Vec<(f64, f64)> = n_grid(cfg.grid.unwrap_or(40))
        .into_iter()
        .flat_map(|n| gammas.iter().map(move |&g| (n, g)))
        .collect();
    let scan = PhiScan::default();
    let rows = par_rows(&points, |&(n, gamma)| {
        let (v, _) = visibility_point(n, gamma, which, engine, cfg.dim, cfg.tail_tol, &scan)?;
        Ok(vec![Cell::Real(n), Cell::Real(gamma), Cell::Real(v)])
    })?;
    Ok(Table {
        header: vec!["N", "gamma", "V"],
        rows,
    }
    .sorted())
}

fn compare(cfg: &RunConfig) -> Result<Outcome, CliError> {
    let points: Vec<OperatingPoint> = COMPARE_N
        .iter()
        .flat_map(|&n| {
            COMPARE_GAMMA.iter().flat_map(move |&gamma| {
                COMPARE_PHI.iter().map(move |&phi| OperatingPoint {
                    n,
                    gamma,
                    gamma2: gamma,
                    phi,
                })
            })
        })
        .collect();
    let results: Vec<(SweepResult, SweepResult)> = points
        .par_iter()
        .map(|&p| Ok((eval(cfg, p, Engine::Gaussian)?, eval(cfg, p, Engine::Fock)?)))
        .collect::<Vec<Result<_, CliError>>>()
        .into_iter()
        .collect::<Result<_, _>>()?;

    let mut rows = Vec::with_capacity(results.len());
    let mut breach = None;
    let (mut max_e, mut max_k, mut max_h, mut max_d) = (0.0f64, 0.0f64, 0.0f64, 0usize);
    for (g, f) in &results {
        let t = f.truncation.expect("fock results carry truncation info");
        let (de, dk, dh) = (
            (g.epsilon - f.epsilon).abs(),
            (g.k - f.k).abs(),
            (g.h - f.h).abs(),
        );
        max_e = max_e.max(de);
        max_k = max_k.max(dk);
        max_h = max_h.max(dh);
        max_d = max_d.max(t.dim);
        let ok = de <= TOL_EPSILON
            && dk <= TOL_MOMENT * (1.0 + g.k)
            && dh <= TOL_MOMENT * (1.0 + g.h);
        if !ok && breach.is_none() {
            let p = g.point;
            breach = Some(format!(
                "tolerance exceeded at N={}, gamma={}, phi={}: d_epsilon={de:.3e}, d_K={dk:.3e}, d_H={dh:.3e}",
                p.n, p.gamma, p.phi
            ));
        }
        rows.push(vec![
            Cell::Real(g.point.n),
            Cell::Real(g.point.gamma),
            Cell::Real(g.point.phi),
            Cell::Real(de),
            Cell::Real(dk),
            Cell::Real(dh),
            Cell::Int(t.dim),
            Cell::Real(t.tail),
        ]);
    }
    let summary = format!(
        "compared {} points: max d_epsilon={max_e:.3e}, max d_K={max_k:.3e}, max d_H={max_h:.3e}, max D_used={max_d}",
        rows.len()
    );
    Ok(Outcome {
        table: Table {
            header: vec!["N", "gamma", "phi", "d_epsilon", "d_K", "d_H", "D_used", "tail"],
            rows,
        }
        .sorted(),
        summary: Some(summary),
        breach,
    })
}
