//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails.

use std::f64::consts::{PI, SQRT_2};
use std::process::{Command, ExitCode};
use std::sync::Arc;

use nalgebra::{DMatrix, DVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use wellsim_core::experiments::{
    find_equal_probability_gamma, four_well_state, hom_time_series, maximize_chsh, run_four_well, run_hom,
    run_three_well, three_well_state, BellSpec, HomSpec,
};
use wellsim_core::fock::enumerate_basis;
use wellsim_core::meanfield::{
    closed_form_na, configuration_trapping_trace, critical_gamma, elliptic_parameter, exact_na_trace, jacobi_cn,
    mean_field_trace, MeanFieldSpec,
};
use wellsim_core::{
    build_hamiltonian, diagonalize, evolve_ode_oracle, Configuration, FockBasis, HermitianOperator, HoppingSign,
    Propagator, QuantumState, WellGraph, C64,
};

type Outcome = Result<String, String>;
type Check = fn() -> Outcome;

/// Fails with `msg` unless `ok`.
fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn cfg(occ: &[usize]) -> Configuration {
    Configuration::new(occ.to_vec())
}

fn hom_p(na: usize, nb: usize, gamma: f64, t: f64) -> Vec<f64> {
    run_hom(&HomSpec::new(na, nb, gamma).at_time(t))
        .expect("valid HOM run")
        .occupation_probabilities(0)
}

fn criterion_1() -> Outcome {
    let out = Command::new(env!("CARGO_BIN_EXE_wellsim"))
        .args(["hom", "--na", "1", "--nb", "1", "--gamma", "0"])
        .output()
        .map_err(|e| format!("cannot run binary: {e}"))?;
    ensure(out.status.success(), || format!("exit status {}", out.status))?;
    let text = String::from_utf8_lossy(&out.stdout);
    let mut lines = text.lines();
    ensure(lines.next() == Some("n,p_n"), || "missing header".into())?;
    let p: Vec<f64> = lines
        .map(|l| {
            l.split(',')
                .nth(1)
                .and_then(|v| v.parse().ok())
                .ok_or(format!("bad row `{l}`"))
        })
        .collect::<Result<_, _>>()?;
    ensure(p.len() == 3, || format!("{} rows", p.len()))?;
    let err = [(p[0] - 0.5).abs(), p[1].abs(), (p[2] - 0.5).abs()]
        .into_iter()
        .fold(0.0, f64::max);
    ensure(err < 1e-10, || format!("p = {p:?}"))?;
    Ok(format!("p = {p:?}"))
}

fn criterion_2() -> Outcome {
    let series = hom_time_series(&HomSpec::new(1, 1, 0.0), PI, 100).map_err(|e| e.to_string())?;
    let mut worst: f64 = 0.0;
    for (t, d) in &series {
        let p = d.occupation_probabilities(0);
        worst = worst
            .max((p[1] - (2.0 * t).cos().powi(2)).abs())
            .max((p[0] - 0.5 * (2.0 * t).sin().powi(2)).abs());
    }
    ensure(series.len() == 100 && worst < 1e-10, || {
        format!("max deviation {worst:e}")
    })?;
    Ok(format!("100 samples, max deviation {worst:.1e}"))
}

/// `|N_A, N_B⟩` through the 50-50 beam splitter `a → (a + i b)/√2`,
/// `b → (i a + b)/√2`, expanded as polynomials in the output creation
/// operators.
fn beam_splitter_oracle(na: usize, nb: usize) -> Vec<f64> {
    let n = na + nb;
    let binom = |n: usize, k: usize| -> f64 { (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64) };
    let fact = |k: usize| -> f64 { (1..=k).map(|i| i as f64).product() };
    let i_pow = |k: usize| -> C64 {
        [
            C64::new(1.0, 0.0),
            C64::new(0.0, 1.0),
            C64::new(-1.0, 0.0),
            C64::new(0.0, -1.0),
        ][k % 4]
    };
    // coefficient of (a†)^m (b†)^(n−m)
    let mut coef = vec![C64::new(0.0, 0.0); n + 1];
    for j in 0..=na {
        for k in 0..=nb {
            // (a + i b)^na picks a^j (ib)^(na−j); (i a + b)^nb picks (ia)^k b^(nb−k)
            let c = binom(na, j) * binom(nb, k);
            coef[j + k] += i_pow(na - j + k) * c;
        }
    }
    let norm = 1.0 / (2f64.powi(n as i32) * fact(na) * fact(nb));
    (0..=n)
        .map(|m| coef[m].norm_sqr() * fact(m) * fact(n - m) * norm)
        .collect()
}

fn criterion_3() -> Outcome {
    let mut notes = Vec::new();
    for (na, nb) in [(2, 2), (4, 4)] {
        let p = hom_p(na, nb, 0.0, PI / 4.0);
        let odd = p.iter().skip(1).step_by(2).fold(0.0f64, |m, &x| m.max(x));
        ensure(odd < 1e-10, || format!("({na},{nb}) odd max {odd:e}"))?;
        let oracle = beam_splitter_oracle(na, nb);
        let dev = p.iter().zip(&oracle).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
        ensure(dev < 1e-10, || format!("({na},{nb}) vs beam-splitter oracle {dev:e}"))?;
        notes.push(format!("({na},{nb}) odd max {odd:.1e}"));
    }
    let p = hom_p(2, 2, 0.0, PI / 4.0);
    let dev = [(p[0] - 0.375).abs(), (p[2] - 0.25).abs(), (p[4] - 0.375).abs()]
        .into_iter()
        .fold(0.0, f64::max);
    ensure(dev < 1e-10, || format!("(2,2) even {p:?}"))?;
    notes.push(format!("(2,2) even = ({:.12}, {:.12}, {:.12})", p[0], p[2], p[4]));
    Ok(notes.join("; "))
}

fn criterion_4() -> Outcome {
    let g = find_equal_probability_gamma().map_err(|e| e.to_string())?;
    let p = hom_p(1, 1, g, PI / 4.0);
    ensure((2.3..=2.7).contains(&g), || format!("gamma* = {g}"))?;
    ensure((p[0] - p[1]).abs() < 1e-9 && (p[1] - p[2]).abs() < 1e-9, || {
        format!("p = {p:?}")
    })?;
    Ok(format!("gamma* = {g:.10}, p = {:.6}", p[0]))
}

fn criterion_5() -> Outcome {
    let n_pts = 4001;
    let series = hom_time_series(&HomSpec::new(1, 1, 6.0), 2.0 * PI, n_pts).map_err(|e| e.to_string())?;
    // trapezoid mean over [0, 2π]
    let c1: Vec<f64> = series.iter().map(|(_, d)| d.occupation_probabilities(0)[1]).collect();
    let inner: f64 = c1[1..n_pts - 1].iter().sum();
    let mean = (inner + 0.5 * (c1[0] + c1[n_pts - 1])) / (n_pts - 1) as f64;
    ensure(mean > 0.8, || format!("mean |c1|^2 = {mean}"))?;
    let p = hom_p(1, 1, 6.0, PI / 4.0);
    ensure(p[0] < 0.1 && p[2] < 0.1, || format!("p(pi/4) = {p:?}"))?;

    let mut worst: f64 = 0.0;
    for gamma in [0.5, 2.5, 6.0] {
        let plus = hom_time_series(&HomSpec::new(1, 1, gamma), 2.0 * PI, 101).map_err(|e| e.to_string())?;
        let minus = hom_time_series(&HomSpec::new(1, 1, -gamma), 2.0 * PI, 101).map_err(|e| e.to_string())?;
        for ((_, a), (_, b)) in plus.iter().zip(&minus) {
            for (x, y) in a.probabilities.iter().zip(&b.probabilities) {
                worst = worst.max((x - y).abs());
            }
        }
    }
    ensure(worst < 1e-10, || format!("gamma sign asymmetry {worst:e}"))?;
    Ok(format!(
        "mean |c1|^2 = {mean:.4}, p0 = p2 = {:.4}, sign asymmetry {worst:.1e}",
        p[0]
    ))
}

fn criterion_6() -> Outcome {
    let half = run_three_well(PI / (2.0 * SQRT_2)).map_err(|e| e.to_string())?;
    let expected = [
        ([2, 0, 0], 0.125),
        ([0, 2, 0], 0.5),
        ([0, 0, 2], 0.125),
        ([1, 0, 1], 0.25),
    ];
    for (occ, p) in expected {
        let got = half.probability(&cfg(&occ));
        ensure((got - p).abs() < 1e-10, || format!("P({occ:?}) = {got}"))?;
    }
    let revival = run_three_well(PI / SQRT_2)
        .map_err(|e| e.to_string())?
        .probability(&cfg(&[1, 0, 1]));
    ensure(revival > 1.0 - 1e-9, || format!("P(101) at t_R = {revival}"))?;
    Ok(format!("half-time distribution exact; P(101) at t_R = {revival:.12}"))
}

fn criterion_7() -> Outcome {
    let half = run_four_well(PI / 4.0).map_err(|e| e.to_string())?;
    for (c, p) in half.iter() {
        let occ = c.occupations();
        let expected = if occ.contains(&2) {
            0.125
        } else if occ == [1, 0, 1, 0] || occ == [0, 1, 0, 1] {
            0.25
        } else {
            0.0
        };
        ensure((p - expected).abs() < 1e-10, || {
            format!("P({c}) = {p}, expected {expected}")
        })?;
    }
    let revival = run_four_well(PI / 2.0)
        .map_err(|e| e.to_string())?
        .probability(&cfg(&[1, 0, 1, 0]));
    ensure(revival > 1.0 - 1e-9, || format!("P(1010) at pi/2 = {revival}"))?;
    Ok(format!("half-time distribution exact; P(1010) at pi/2 = {revival:.12}"))
}

fn criterion_8() -> Outcome {
    let opt = maximize_chsh(&BellSpec::default()).map_err(|e| e.to_string())?;
    let bound = 2.0 * SQRT_2 + 1e-6;
    let worst = opt.scan.iter().map(|p| p.1.abs()).fold(opt.q_max.abs(), f64::max);
    ensure(worst <= bound, || format!("|Q| reached {worst}"))?;
    ensure((opt.q_max - 2.815).abs() <= 0.01, || format!("Q_max = {}", opt.q_max))?;
    ensure((opt.xi_star - 2.74).abs() <= 0.05, || format!("xi* = {}", opt.xi_star))?;
    Ok(format!(
        "Q_max = {:.6} at xi = {:.4}; max |Q| over {} evaluations = {worst:.6}",
        opt.q_max,
        opt.xi_star,
        opt.scan.len()
    ))
}

fn criterion_9() -> Outcome {
    let gc = critical_gamma(8).map_err(|e| e.to_string())?;
    ensure(gc == 0.5, || format!("critical_gamma(8) = {gc}"))?;
    let trace = mean_field_trace(&MeanFieldSpec::new(8, 1.0, 8, 20.0, 20001)).map_err(|e| e.to_string())?;
    let inf = trace.iter().map(|p| p.1).fold(f64::INFINITY, f64::min);
    ensure(inf >= 4.0 - 0.008, || format!("inf N_A = {inf}"))?;
    let spec = MeanFieldSpec::new(8, 0.0, 8, 10.0, 1001);
    let exact = exact_na_trace(&spec).map_err(|e| e.to_string())?;
    let mf = mean_field_trace(&spec).map_err(|e| e.to_string())?;
    let dev = exact
        .iter()
        .zip(&mf)
        .map(|(a, b)| (a.1 - b.1).abs())
        .fold(0.0, f64::max);
    ensure(dev < 1e-8, || format!("gamma=0 exact vs mean field {dev:e}"))?;
    Ok(format!(
        "gamma_c = {gc}; inf N_A (gamma=1) = {inf:.6}; gamma=0 deviation {dev:.1e}"
    ))
}

fn criterion_10() -> Outcome {
    let n = 8;
    let gc = critical_gamma(n).map_err(|e| e.to_string())?;
    let mut notes = Vec::new();
    for factor in [0.25, 0.6, 2.0] {
        let gamma = factor * gc;
        let m = elliptic_parameter(n, gamma);
        if (m - 1.0).abs() <= 0.02 {
            notes.push(format!("{factor} gamma_c skipped (m = {m})"));
            continue;
        }
        let trace = mean_field_trace(&MeanFieldSpec::new(n, gamma, n, 10.0, 1001)).map_err(|e| e.to_string())?;
        let dev = trace
            .iter()
            .map(|&(t, na)| (na - closed_form_na(t, n, gamma)).abs())
            .fold(0.0, f64::max);
        ensure(dev < 1e-5, || format!("{factor} gamma_c: deviation {dev:e}"))?;
        notes.push(format!("{factor} gamma_c: {dev:.1e}"));
    }
    let cn_dev = (0..=400)
        .map(|k| -20.0 + 0.1 * k as f64)
        .map(|u| (jacobi_cn(u, 0.0) - u.cos()).abs())
        .fold(0.0, f64::max);
    ensure(cn_dev < 1e-12, || format!("cn(u|0) vs cos u {cn_dev:e}"))?;
    notes.push(format!("cn(u|0) {cn_dev:.1e}"));
    Ok(notes.join("; "))
}

fn random_hermitian(rng: &mut ChaCha8Rng, basis: Arc<FockBasis>, scale: f64) -> HermitianOperator {
    let dim = basis.dim();
    let mut m = DMatrix::<C64>::zeros(dim, dim);
    for i in 0..dim {
        m[(i, i)] = C64::from(rng.random_range(-1.0..1.0));
        for j in i + 1..dim {
            let z = C64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0));
            m[(i, j)] = z;
            m[(j, i)] = z.conj();
        }
    }
    let frob = m.norm();
    m *= C64::from(scale / frob);
    HermitianOperator::new(basis, m).expect("Hermitian by construction")
}

fn max_diff(a: &QuantumState, b: &QuantumState) -> f64 {
    (a.amplitudes() - b.amplitudes())
        .iter()
        .map(|z| z.norm())
        .fold(0.0, f64::max)
}

fn protocol(graph: &WellGraph, sign: HoppingSign, occ: &[usize]) -> (HermitianOperator, QuantumState) {
    let basis = enumerate_basis(graph.num_wells(), occ.iter().sum()).unwrap();
    let h = build_hamiltonian(graph, &basis, sign).unwrap();
    let psi0 = QuantumState::fock(basis, &cfg(occ)).unwrap();
    (h, psi0)
}

/// Name, Hamiltonian, initial state, evolution time.
type ProtocolRun = (String, HermitianOperator, QuantumState, f64);

fn criterion_11() -> Outcome {
    const STEP: f64 = 1e-4;
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut worst: f64 = 0.0;
    for _ in 0..20 {
        // two-well bases have dimension N + 1
        let dim = rng.random_range(2..=45);
        let basis = enumerate_basis(2, dim - 1).unwrap();
        let h = random_hermitian(&mut rng, basis.clone(), 10.0);
        let v = DVector::from_fn(dim, |_, _| {
            C64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
        });
        let psi = QuantumState::new(basis, v).unwrap();
        let exact = diagonalize(&h).evolve(&psi, 1.0).unwrap();
        let ode = evolve_ode_oracle(&h, &psi, 1.0, STEP).unwrap();
        worst = worst.max(max_diff(&exact, &ode));
    }
    ensure(worst < 1e-6, || format!("random instances: {worst:e}"))?;
    let random_worst = worst;

    let double = |g: f64| WellGraph::double_well(1.0).with_interaction(g);
    let mut cases: Vec<ProtocolRun> = Vec::new();
    for (na, nb, g) in [
        (1, 1, 0.0),
        (1, 1, 2.5),
        (1, 1, 6.0),
        (2, 2, 0.0),
        (4, 4, 0.0),
        (4, 5, 0.0),
    ] {
        let (h, s) = protocol(&double(g), HoppingSign::Negative, &[na, nb]);
        cases.push((format!("hom {na},{nb} gamma {g}"), h, s, PI / 4.0));
    }
    for (na, nb, g) in [(4, 4, 0.3), (4, 4, 0.5), (4, 4, 1.0)] {
        let (h, s) = protocol(&double(g), HoppingSign::Negative, &[na, nb]);
        cases.push((format!("sweep {na},{nb} gamma {g}"), h, s, PI / 4.0));
    }
    for g in [0.0, 0.3, 0.5, 1.0] {
        let (h, s) = protocol(&double(g), HoppingSign::Negative, &[8, 0]);
        cases.push((format!("selftrap gamma {g}"), h, s, 10.0));
    }
    let (h, s) = protocol(&double(10.0), HoppingSign::Negative, &[4, 4]);
    cases.push(("config-trap".into(), h, s, 20.0));
    let (h, s) = protocol(&WellGraph::chain(3, 1.0), HoppingSign::Positive, &[1, 0, 1]);
    cases.push(("three-well".into(), h.clone(), s.clone(), PI / (2.0 * SQRT_2)));
    cases.push(("three-well revival".into(), h, s, PI / SQRT_2));
    let (h, s) = protocol(&WellGraph::square(1.0), HoppingSign::Negative, &[1, 0, 1, 0]);
    cases.push(("four-well".into(), h.clone(), s.clone(), PI / 4.0));
    cases.push(("four-well revival".into(), h, s, PI / 2.0));
    for (r1, r2) in [(1.0, 1.0), (3.74, 1.0), (1.0, -1.74), (3.74, -1.74)] {
        let (h, s) = protocol(
            &WellGraph::square_with_rates(r1, 1.0, r2, 1.0),
            HoppingSign::Negative,
            &[1, 0, 1, 0],
        );
        cases.push((format!("bell {r1},{r2}"), h, s, PI / 4.0));
    }
    let n_cases = cases.len();
    let mut proto_worst: f64 = 0.0;
    for (name, h, s, t) in cases {
        let exact = Propagator::new(&h).evolve(&s, t).unwrap();
        let ode = evolve_ode_oracle(&h, &s, t, STEP).unwrap();
        let d = max_diff(&exact, &ode);
        ensure(d < 1e-6, || format!("{name}: {d:e}"))?;
        proto_worst = proto_worst.max(d);
    }
    Ok(format!(
        "20 random instances max {random_worst:.1e}; {n_cases} protocol runs max {proto_worst:.1e}"
    ))
}

fn criterion_12() -> Outcome {
    let mut norm_dev: f64 = 0.0;
    let mut mirror_dev: f64 = 0.0;
    let mut na_dev: f64 = 0.0;
    for (n, gamma) in [(1, 0.0), (1, 2.5), (2, 0.0), (2, 1.0), (4, 0.0), (4, 0.5), (4, -3.0)] {
        let series = hom_time_series(&HomSpec::new(n, n, gamma), 2.0 * PI, 64).map_err(|e| e.to_string())?;
        let (prop, basis) = {
            let basis = enumerate_basis(2, 2 * n).unwrap();
            let h = build_hamiltonian(
                &WellGraph::double_well(1.0).with_interaction(gamma),
                &basis,
                HoppingSign::Negative,
            )
            .unwrap();
            (Propagator::new(&h), basis)
        };
        let psi0 = QuantumState::fock(basis, &cfg(&[n, n])).unwrap();
        for (t, d) in &series {
            norm_dev = norm_dev.max((d.total() - 1.0).abs());
            // conservation is structural: every basis label carries 2n particles
            ensure(d.labels.iter().all(|c| c.total() == 2 * n), || {
                "label outside the N sector".into()
            })?;
            let p = d.occupation_probabilities(0);
            for k in 0..=2 * n {
                mirror_dev = mirror_dev.max((p[k] - p[2 * n - k]).abs());
            }
            let psi = prop.evolve(&psi0, *t).unwrap();
            na_dev = na_dev.max((psi.number_expectation(0).unwrap() - n as f64).abs());
        }
    }
    // norm on the interferometer protocols as well
    for t in [0.1, 0.7, 1.3, 2.9] {
        norm_dev = norm_dev.max((three_well_state(t).unwrap().norm_sqr() - 1.0).abs());
        norm_dev = norm_dev.max((four_well_state(t).unwrap().norm_sqr() - 1.0).abs());
    }
    ensure(norm_dev < 1e-10, || format!("norm drift {norm_dev:e}"))?;
    ensure(mirror_dev < 1e-10, || format!("mirror asymmetry {mirror_dev:e}"))?;
    ensure(na_dev < 1e-9, || format!("<N_A> - N/2 = {na_dev:e}"))?;
    Ok(format!(
        "norm {norm_dev:.1e}; mirror {mirror_dev:.1e}; <N_A> {na_dev:.1e}; number conserved"
    ))
}

fn criterion_13() -> Outcome {
    let spec = MeanFieldSpec::new(8, 10.0, 4, 20.0, 4001);
    let trace = configuration_trapping_trace(&spec).map_err(|e| e.to_string())?;
    let min_c4 = trace.iter().map(|(_, p)| p[4]).fold(f64::INFINITY, f64::min);
    let sym = trace.iter().map(|(_, p)| (p[3] - p[5]).abs()).fold(0.0, f64::max);
    ensure(sym < 1e-10, || format!("|c3|^2 - |c5|^2 up to {sym:e}"))?;
    ensure(min_c4 >= 0.5, || {
        format!("min |c4|^2 = {min_c4:.6} < 0.5 over t in [0, 20] (|c3|^2 = |c5|^2 holds to {sym:.1e})")
    })?;
    Ok(format!("min |c4|^2 = {min_c4:.6}; |c3|^2 - |c5|^2 {sym:.1e}"))
}

fn read_csv(name: &str) -> Result<Vec<Vec<f64>>, String> {
    let path = format!("{}/tests/data/{name}", env!("CARGO_MANIFEST_DIR"));
    let text = std::fs::read_to_string(&path).map_err(|e| format!("{path}: {e}"))?;
    text.lines()
        .skip(1)
        .map(|l| {
            l.split(',')
                .map(|v| v.parse().map_err(|_| format!("{path}: bad value `{v}`")))
                .collect()
        })
        .collect()
}

fn figure_4() -> Outcome {
    let rows = read_csv("hom_4_5.csv")?;
    let p: Vec<f64> = rows.iter().map(|r| r[1]).collect();
    let fresh = hom_p(4, 5, 0.0, PI / 4.0);
    let dev = p.iter().zip(&fresh).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
    ensure(p.len() == 10 && dev < 1e-10, || {
        format!("data file disagrees with a fresh run ({dev:e})")
    })?;
    let min = p.iter().copied().fold(f64::INFINITY, f64::min);
    ensure(min > 1e-3, || format!("a probability vanishes: {p:?}"))?;
    Ok(format!("N = 9, every p_n >= {min:.6}"))
}

fn figure_6() -> Outcome {
    let rows = read_csv("sweep_4_4.csv")?;
    ensure(rows.len() == 3, || format!("{} rows", rows.len()))?;
    for row in &rows {
        let fresh = hom_p(4, 4, row[0], PI / 4.0);
        let dev = row[1..]
            .iter()
            .zip(&fresh)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max);
        ensure(dev < 1e-10, || {
            format!("gamma {}: data file disagrees ({dev:e})", row[0])
        })?;
    }
    let p = &rows[2][1..];
    ensure(rows[2][0] == 1.0, || "last row is not gamma = 1".into())?;
    let strict = p.iter().enumerate().all(|(k, &x)| k == 4 || x < p[4]);
    ensure(strict, || format!("p_4 is not the strict maximum: {p:?}"))?;
    Ok(format!("gamma = 1: p_4 = {:.6} is the strict maximum", p[4]))
}

fn main() -> ExitCode {
    let criteria: &[(&str, Check)] = &[
        ("criterion 1", criterion_1),
        ("criterion 2", criterion_2),
        ("criterion 3", criterion_3),
        ("criterion 4", criterion_4),
        ("criterion 5", criterion_5),
        ("criterion 6", criterion_6),
        ("criterion 7", criterion_7),
        ("criterion 8", criterion_8),
        ("criterion 9", criterion_9),
        ("criterion 10", criterion_10),
        ("criterion 11", criterion_11),
        ("criterion 12", criterion_12),
        ("criterion 13", criterion_13),
        ("figure 4 data", figure_4),
        ("figure 6 data", figure_6),
    ];
    let mut failures = 0;
    for &(name, check) in criteria {
        match check() {
            Ok(detail) => println!("{name}: PASS ({detail})"),
            Err(detail) => {
                failures += 1;
                println!("{name}: FAIL ({detail})");
            }
        }
    }
    println!("{} of {} checks passed", criteria.len() - failures, criteria.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
