//! Subcommand execution: arguments in, [`ExperimentResult`] out.

use rayon::prelude::*;
use wellsim_core::dynamics::Propagator;
use wellsim_core::experiments::{
    self, hom_time_series, maximize_chsh, run_four_well, run_hom, run_three_well, BellSpec, Distribution, HomSpec,
};
use wellsim_core::fock::enumerate_basis;
use wellsim_core::meanfield::{
    closed_form_na, configuration_trapping_trace, exact_na_trace, mean_field_trace, MeanFieldSpec,
};
use wellsim_core::{build_hamiltonian, Configuration, ExperimentResult, HoppingSign, QuantumState, Value, WellGraph};

use crate::args::{BellArgs, Command, GraphArgs, HomArgs, HomSeriesArgs, MeanFieldArgs, SweepArgs};
use crate::error::CliError;

pub fn run(command: &Command) -> Result<ExperimentResult, CliError> {
    match command {
        Command::Hom(a) => hom(a),
        Command::HomSeries(a) => hom_series(a),
        Command::ThreeWell(a) => {
            let t = a.t.unwrap_or(experiments::THREE_WELL_HALF_TIME);
            Ok(configurations("three-well", &run_three_well(t)?).param("t", t))
        }
        Command::FourWell(a) => {
            let t = a.t.unwrap_or(experiments::FOUR_WELL_HALF_TIME);
            Ok(configurations("four-well", &run_four_well(t)?).param("t", t))
        }
        Command::Bell(a) => bell(a),
        Command::Meanfield(a) => meanfield(a),
        Command::Selftrap(a) => selftrap(a),
        Command::ConfigTrap(a) => config_trap(a),
        Command::Sweep(a) => sweep(a),
        Command::Graph(a) => graph(a),
    }
}

fn p_columns(n: usize, first: &str) -> Vec<String> {
    std::iter::once(first.to_owned())
        .chain((0..=n).map(|k| format!("p_{k}")))
        .collect()
}

fn with_columns(command: &str, columns: Vec<String>) -> ExperimentResult {
    let cols: Vec<&str> = columns.iter().map(String::as_str).collect();
    ExperimentResult::new(command, &cols)
}

fn configurations(command: &str, dist: &Distribution) -> ExperimentResult {
    let mut out = ExperimentResult::new(command, &["configuration", "probability"]);
    for (cfg, p) in dist.iter() {
        out.push_row(vec![cfg.to_string().into(), p.into()]);
    }
    out
}

fn hom(a: &HomArgs) -> Result<ExperimentResult, CliError> {
    let spec = HomSpec::new(a.na, a.nb, a.gamma).at_time(a.t);
    let p = run_hom(&spec)?.occupation_probabilities(0);
    let mut out = ExperimentResult::new("hom", &["n", "p_n"])
        .param("na", a.na)
        .param("nb", a.nb)
        .param("gamma", a.gamma)
        .param("t", a.t);
    for (n, p) in p.into_iter().enumerate() {
        out.push_row(vec![n.into(), p.into()]);
    }
    Ok(out)
}

fn hom_series(a: &HomSeriesArgs) -> Result<ExperimentResult, CliError> {
    let spec = HomSpec::new(a.na, a.nb, a.gamma);
    let series = hom_time_series(&spec, a.t_max, a.points)?;
    let mut out = with_columns("hom-series", p_columns(spec.total(), "t"))
        .param("na", a.na)
        .param("nb", a.nb)
        .param("gamma", a.gamma)
        .param("t_max", a.t_max)
        .param("points", a.points);
    for (t, dist) in series {
        let mut row = vec![Value::from(t)];
        row.extend(dist.occupation_probabilities(0).into_iter().map(Value::from));
        out.push_row(row);
    }
    Ok(out)
}

fn bell(a: &BellArgs) -> Result<ExperimentResult, CliError> {
    let spec = BellSpec {
        xi_min: a.xi_min,
        xi_max: a.xi_max,
        xi_step: a.xi_step,
        gamma: a.gamma,
        measure_time: a.t,
        tolerance: a.tol,
    };
    let opt = maximize_chsh(&spec)?;
    let mut out = ExperimentResult::new("bell", &["xi", "q"])
        .param("xi_min", a.xi_min)
        .param("xi_max", a.xi_max)
        .param("xi_step", a.xi_step)
        .param("gamma", a.gamma)
        .param("t", a.t)
        .param("tol", a.tol);
    for (xi, q) in &opt.scan {
        out.push_row(vec![(*xi).into(), (*q).into()]);
    }
    out.set_summary("q_max", opt.q_max);
    out.set_summary("xi_star", opt.xi_star);
    Ok(out)
}

fn mf_spec(a: &MeanFieldArgs, default_na0: usize) -> MeanFieldSpec {
    MeanFieldSpec {
        step: a.step,
        ..MeanFieldSpec::new(a.n, a.gamma, a.na0.unwrap_or(default_na0), a.t_max, a.points)
    }
}

fn mf_params(out: ExperimentResult, spec: &MeanFieldSpec) -> ExperimentResult {
    out.param("n", spec.n)
        .param("gamma", spec.gamma)
        .param("na0", spec.n_a0)
        .param("t_max", spec.t_max)
        .param("points", spec.num_points)
        .param("step", spec.step)
}

fn meanfield(a: &MeanFieldArgs) -> Result<ExperimentResult, CliError> {
    let spec = mf_spec(a, a.n);
    let trace = mean_field_trace(&spec)?;
    let closed = spec.n_a0 == spec.n;
    let cols: &[&str] = if closed {
        &["t", "N_A_meanfield", "N_A_closed_form"]
    } else {
        &["t", "N_A_meanfield"]
    };
    let mut out = mf_params(ExperimentResult::new("meanfield", cols), &spec);
    for (t, na) in trace {
        let mut row = vec![t.into(), na.into()];
        if closed {
            row.push(closed_form_na(t, spec.n, spec.gamma).into());
        }
        out.push_row(row);
    }
    Ok(out)
}

fn selftrap(a: &MeanFieldArgs) -> Result<ExperimentResult, CliError> {
    let spec = mf_spec(a, a.n);
    let exact = exact_na_trace(&spec)?;
    let mf = mean_field_trace(&spec)?;
    let closed = spec.n_a0 == spec.n;
    let cols: &[&str] = if closed {
        &["t", "N_A_exact", "N_A_meanfield", "N_A_closed_form"]
    } else {
        &["t", "N_A_exact", "N_A_meanfield"]
    };
    let mut out = mf_params(ExperimentResult::new("selftrap", cols), &spec);
    for ((t, ex), (_, m)) in exact.into_iter().zip(mf) {
        let mut row = vec![t.into(), ex.into(), m.into()];
        if closed {
            row.push(closed_form_na(t, spec.n, spec.gamma).into());
        }
        out.push_row(row);
    }
    Ok(out)
}

fn config_trap(a: &MeanFieldArgs) -> Result<ExperimentResult, CliError> {
    let spec = mf_spec(a, a.n / 2);
    let trace = configuration_trapping_trace(&spec)?;
    let mut out = mf_params(with_columns("config-trap", p_columns(spec.n, "t")), &spec);
    for (t, probs) in trace {
        let mut row = vec![Value::from(t)];
        row.extend(probs.into_iter().map(Value::from));
        out.push_row(row);
    }
    Ok(out)
}

/// Explicit list, or `min, min + step, …` up to `max` inclusive.
pub fn sweep_gammas(a: &SweepArgs) -> Vec<f64> {
    if !a.gammas.is_empty() {
        return a.gammas.clone();
    }
    let (lo, hi, step) = (
        a.gamma_min.unwrap_or(0.0),
        a.gamma_max.unwrap_or(0.0),
        a.gamma_step.unwrap_or(1.0),
    );
    let count = ((hi - lo) / step + 1e-9).floor() as usize + 1;
    (0..count).map(|k| lo + k as f64 * step).collect()
}

fn sweep(a: &SweepArgs) -> Result<ExperimentResult, CliError> {
    let gammas = sweep_gammas(a);
    let rows = gammas
        .par_iter()
        .map(|&g| run_hom(&HomSpec::new(a.na, a.nb, g).at_time(a.t)).map(|d| (g, d.occupation_probabilities(0))))
        .collect::<Result<Vec<_>, _>>()?;
    let joined: Vec<String> = gammas.iter().map(|g| g.to_string()).collect();
    let mut out = with_columns("sweep", p_columns(a.na + a.nb, "gamma"))
        .param("na", a.na)
        .param("nb", a.nb)
        .param("gammas", joined.join(","))
        .param("t", a.t);
    for (g, probs) in rows {
        let mut row = vec![Value::from(g)];
        row.extend(probs.into_iter().map(Value::from));
        out.push_row(row);
    }
    Ok(out)
}

fn parse_edge(s: &str) -> Result<(usize, usize, f64), CliError> {
    let bad = || CliError::usage(format!("edge `{s}` is not of the form i-j:rate"));
    let (pair, rate) = s.trim().split_once(':').ok_or_else(bad)?;
    let (i, j) = pair.split_once('-').ok_or_else(bad)?;
    Ok((
        i.trim().parse().map_err(|_| bad())?,
        j.trim().parse().map_err(|_| bad())?,
        rate.trim().parse().map_err(|_| bad())?,
    ))
}

/// `101` (one digit per well) or `1,0,1`.
fn parse_occupations(s: &str) -> Result<Vec<usize>, CliError> {
    let bad = || CliError::usage(format!("cannot read occupations from `{s}`"));
    if s.contains(',') {
        s.split(',').map(|p| p.trim().parse().map_err(|_| bad())).collect()
    } else {
        s.trim()
            .chars()
            .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad))
            .collect()
    }
}

fn graph(a: &GraphArgs) -> Result<ExperimentResult, CliError> {
    let sign: HoppingSign = a
        .sign
        .parse()
        .map_err(|_| CliError::usage(format!("unknown sign `{}`", a.sign)))?;
    let mut g = WellGraph::new(a.wells)?.with_interaction(a.w).with_onsite_energy(a.e0);
    for e in &a.edges {
        let (i, j, rate) = parse_edge(e)?;
        g.add_edge(i, j, rate)?;
    }
    let occ = parse_occupations(&a.initial)?;
    if occ.len() != a.wells {
        return Err(CliError::usage(format!(
            "--initial names {} wells but --wells is {}",
            occ.len(),
            a.wells
        )));
    }
    let basis = enumerate_basis(a.wells, occ.iter().sum())?;
    let h = build_hamiltonian(&g, &basis, sign)?;
    let psi0 = QuantumState::fock(basis, &Configuration::new(occ))?;
    let psi = Propagator::new(&h).evolve(&psi0, a.t)?;
    Ok(configurations("graph", &Distribution::from_state(&psi))
        .param("wells", a.wells)
        .param("edges", a.edges.join(","))
        .param("w", a.w)
        .param("e0", a.e0)
        .param("sign", &a.sign)
        .param("initial", &a.initial)
        .param("t", a.t))
}
