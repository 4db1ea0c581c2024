//! The six experiment drivers. Each resolves its own grid defaults, runs the
//! library, and returns a Table with one row per grid cell; every row carries
//! an error estimate or residual column so no number leaves the binary bare.

use std::path::Path;

use mml_core::arith::{CoefficientTable, MobiusTable};
use mml_core::error::{Error, Result};
use mml_core::kernels::{
    j_conv_with_line, j_mellin_detailed, j_residue_detailed, residue_term, GLine, KernelContext,
};
use mml_core::mollifier::Mollifier;
use mml_core::moments::{
    moment_length_average, mollified_moment, second_moment_zeta, MomentResult,
};
use mml_core::zeta::{hardy_z, find_zero_on_line, Method, ZeroHypothesis};
use num_complex::Complex64;
use serde_json::{json, Value};

use crate::config::{LabConfig, Window};
use crate::output::{float_value, Cell, Table};

fn list_json(v: &[f64]) -> Value {
    Value::Array(v.iter().map(|&x| float_value(x)).collect())
}

fn base_echo(cfg: &LabConfig) -> serde_json::Map<String, Value> {
    let mut m = serde_json::Map::new();
    m.insert("seed".into(), Value::from(cfg.seed));
    m.insert(
        "moments".into(),
        json!({
            "nodes_per_period": cfg.quadrature.nodes_per_period,
            "panel_nodes": cfg.quadrature.panel_nodes,
            "rel_tol": cfg.quadrature.rel_tol,
            "max_panels": cfg.quadrature.max_panels,
        }),
    );
    m.insert(
        "kernels".into(),
        json!({
            "sigma": cfg.contour.sigma,
            "height_y": cfg.contour.height_y,
            "spacing": cfg.contour.spacing,
            "tail_tol": cfg.contour.tail_tol,
        }),
    );
    let method = match cfg.zeta.method {
        Method::Auto => "auto",
        Method::EulerMaclaurin => "em",
        Method::RiemannSiegel => "rs",
    };
    m.insert(
        "zeta".into(),
        json!({
            "method": method,
            "em_terms": cfg.zeta.em_terms,
            "em_bernoulli_order": cfg.zeta.em_bernoulli_order,
            "rs_corrections": cfg.zeta.rs_corrections,
        }),
    );
    m
}

/// Sieve to `limit`, going through the cache directory when one is set.
/// A cached table sieved at least as far is reused as is.
fn sieve_with_cache(limit: u64, cache_dir: Option<&Path>) -> Result<MobiusTable> {
    let Some(dir) = cache_dir else {
        return MobiusTable::sieve(limit);
    };
    let path = dir.join(format!("mobius-{limit}.bin"));
    if path.is_file() {
        match MobiusTable::read_cache(&path) {
            Ok(table) if table.limit() >= limit => return Ok(table),
            _ => {}
        }
    }
    let table = MobiusTable::sieve(limit)?;
    std::fs::create_dir_all(dir).map_err(|e| Error::Io(format!("{}: {e}", dir.display())))?;
    table.write_cache(&path)?;
    Ok(table)
}

/// The designated zero for contour-backed kernel work. Off-line hypotheses
/// are refused here: every route this binary exposes evaluates actual zeta
/// data, for which only beta0 = 1/2 is honest.
fn on_line_zero(cfg: &LabConfig, command: &str) -> Result<ZeroHypothesis> {
    if cfg.beta0 != 0.5 {
        return Err(Error::Config(format!(
            "{command} evaluates computed zeta data; beta0 = {} is only usable in \
             closed-form residue scaling, not here (set beta0 = 0.5)",
            cfg.beta0
        )));
    }
    match cfg.gamma0 {
        Some(g) => ZeroHypothesis::on_line(g, &cfg.zeta),
        None => ZeroHypothesis::first(&cfg.zeta),
    }
}

fn moment_cells(r: &MomentResult, scale: f64) -> (Cell, Cell) {
    (Cell::F(r.err_estimate * scale), Cell::B(r.converged))
}

/// Ratio I_x(0,T)/T against the target 1 + 1/theta for x = T^theta.
pub fn run_levinson(cfg: &LabConfig) -> Result<Table> {
    if cfg.window != Window::FromZero {
        return Err(Error::Config(
            "levinson compares against a from-zero benchmark; set window = from_zero".into(),
        ));
    }
    let thetas = cfg.theta_list.clone().unwrap_or_else(|| vec![0.25, 0.4, 0.5]);
    let ts = cfg.t_list.clone().unwrap_or_else(|| vec![1000.0]);
    for &theta in &thetas {
        if !(theta > 0.0) || !theta.is_finite() {
            return Err(Error::Config(format!("theta must be positive, got {theta}")));
        }
        if theta > 1.0 && !cfg.override_guardrail {
            return Err(Error::Config(format!(
                "theta = {theta} is past the desk-scale range (0, 1]; \
                 pass --override-guardrail to proceed"
            )));
        }
    }
    let mut max_x = 2.0f64;
    for &t in &ts {
        if !(t > 1.0) || !t.is_finite() {
            return Err(Error::Config(format!("T must exceed 1, got {t}")));
        }
        cfg.check_endpoint(t)?;
        for &theta in &thetas {
            let x = t.powf(theta);
            cfg.check_length(x)?;
            max_x = max_x.max(x);
        }
    }
    let sieve = sieve_with_cache(max_x.ceil() as u64 + 1, cfg.cache_dir.as_deref())?;

    let mut echo = base_echo(cfg);
    echo.insert("theta_list".into(), list_json(&thetas));
    echo.insert("T_list".into(), list_json(&ts));
    echo.insert("window".into(), Value::from(cfg.window.tag()));
    let mut table = Table::new(
        "levinson",
        vec!["theta", "T", "x", "I_over_T", "target", "rel_gap", "err_estimate", "converged"],
        Value::Object(echo),
    );
    for &theta in &thetas {
        for &t in &ts {
            let x = t.powf(theta);
            let coeffs = CoefficientTable::build(x, &sieve)?;
            let m = Mollifier::new(&coeffs);
            let r = mollified_moment(&m, 0.0, t, &cfg.quadrature, &cfg.zeta)?;
            let i_over_t = r.value / t;
            let target = 1.0 + 1.0 / theta;
            let (err, conv) = moment_cells(&r, 1.0 / t);
            table.push(vec![
                Cell::F(theta),
                Cell::F(t),
                Cell::F(x),
                Cell::F(i_over_t),
                Cell::F(target),
                Cell::F(i_over_t / target - 1.0),
                err,
                conv,
            ]);
        }
    }
    Ok(table)
}

/// Plain second moment over the window against T log T.
pub fn run_meanvalue(cfg: &LabConfig) -> Result<Table> {
    let ts = cfg.t_list.clone().unwrap_or_else(|| vec![1000.0]);
    let mut echo = base_echo(cfg);
    echo.insert("T_list".into(), list_json(&ts));
    echo.insert("window".into(), Value::from(cfg.window.tag()));
    let mut table = Table::new(
        "meanvalue",
        vec!["T1", "T2", "integral", "t_log_t", "ratio", "err_estimate", "converged"],
        Value::Object(echo),
    );
    for &t in &ts {
        let (t1, t2) = cfg.window.span(t);
        cfg.check_endpoint(t2)?;
        let r = second_moment_zeta(t1, t2, &cfg.quadrature, &cfg.zeta)?;
        // window-additive benchmark; reduces to T log(T+2) when T1 = 0
        let scale = t2 * (t2 + 2.0).ln() - t1 * (t1 + 2.0).ln();
        let (err, conv) = moment_cells(&r, 1.0);
        table.push(vec![
            Cell::F(t1),
            Cell::F(t2),
            Cell::F(r.value),
            Cell::F(scale),
            Cell::F(r.value / scale),
            err,
            conv,
        ]);
    }
    Ok(table)
}

/// First `count` critical-line zero ordinates by sign scanning of Z.
pub fn run_zeros(cfg: &LabConfig) -> Result<Table> {
    let k = cfg.count;
    let mut echo = base_echo(cfg);
    echo.insert("count".into(), Value::from(k as u64));
    let mut table = Table::new(
        "zeros",
        vec!["index", "gamma", "z_residual", "iterations"],
        Value::Object(echo),
    );
    if k == 0 {
        return Ok(table);
    }
    // mean zero gap stays above the step until well past the scan cap
    let step = 0.25;
    let mut t = 5.0;
    let mut f0 = hardy_z(t, &cfg.zeta)?.value;
    let mut found = 0usize;
    while found < k {
        if t >= crate::config::T_GUARDRAIL {
            return Err(Error::NoConvergence {
                what: "zero scan reached the endpoint guardrail",
                budget: found as u64,
            });
        }
        let t1 = t + step;
        let f1 = hardy_z(t1, &cfg.zeta)?.value;
        if f0 == 0.0 || f0.signum() != f1.signum() {
            let loc = find_zero_on_line(t, t1, &cfg.zeta)?;
            found += 1;
            table.push(vec![
                Cell::U(found as u64),
                Cell::F(loc.gamma),
                Cell::F(loc.z_residual),
                Cell::U(loc.iterations as u64),
            ]);
        }
        t = t1;
        f0 = f1;
    }
    Ok(table)
}

/// Kernel size report: |g_t(u)| next to the bounds recorded on the line.
pub fn run_gsupport(cfg: &LabConfig) -> Result<Table> {
    let hyp = on_line_zero(cfg, "gsupport")?;
    let ts = cfg.ordinate_list.clone().unwrap_or_else(|| vec![0.0, 10.0, 50.0]);
    let us = cfg
        .u_list
        .clone()
        .unwrap_or_else(|| vec![0.1, 0.5, 0.9, 1.05, 1.1, 2.0, 10.0]);
    for &u in &us {
        if !(u > 0.0) || !u.is_finite() {
            return Err(Error::Config(format!("u must be positive, got {u}")));
        }
    }
    let mut echo = base_echo(cfg);
    echo.insert("ordinate_list".into(), list_json(&ts));
    echo.insert("u_list".into(), list_json(&us));
    echo.insert("beta0".into(), float_value(hyp.beta0()));
    echo.insert("gamma0".into(), float_value(hyp.gamma0()));
    let mut table = Table::new(
        "gsupport",
        vec!["t", "u", "sigma", "abs_g", "bound_g", "sup_node_g", "tail", "err_g"],
        Value::Object(echo),
    );
    for &t in &ts {
        let ctx = KernelContext::new(t, hyp)?;
        let inside = GLine::build(&ctx, 0.0, &cfg.contour, &cfg.zeta)?;
        let outside = if us.iter().any(|&u| u > 1.0) {
            Some(GLine::build(&ctx, cfg.contour.sigma, &cfg.contour, &cfg.zeta)?)
        } else {
            None
        };
        for &u in &us {
            let line = if u > 1.0 {
                outside.as_ref().expect("built when any u > 1")
            } else {
                &inside
            };
            table.push(vec![
                Cell::F(t),
                Cell::F(u),
                Cell::F(line.sigma()),
                Cell::F(line.g_at(u).norm()),
                Cell::F(line.bound_g),
                Cell::F(line.sup_node_g),
                Cell::F(line.tail),
                Cell::F(line.err_g),
            ]);
        }
    }
    Ok(table)
}

fn complex_json(z: Complex64) -> Value {
    json!({"re": z.re, "im": z.im})
}

fn rel_dev(a: Complex64, b: Complex64) -> f64 {
    let scale = a.norm().max(b.norm());
    if scale == 0.0 {
        0.0
    } else {
        (a - b).norm() / scale
    }
}

/// Three independent routes to J_t(x), their residue term, and the worst
/// pairwise relative deviation per grid point.
pub fn run_jt_check(cfg: &LabConfig) -> Result<Table> {
    let hyp = on_line_zero(cfg, "jt-check")?;
    let xs = cfg.x_list.clone().unwrap_or_else(|| vec![2.0, 10.0, 100.0]);
    let ts = cfg.ordinate_list.clone().unwrap_or_else(|| vec![0.0, 5.0, 50.0]);
    for &x in &xs {
        if !(x >= 2.0) || !x.is_finite() {
            return Err(Error::Config(format!("x must be at least 2, got {x}")));
        }
        cfg.check_length(x)?;
    }
    let mut echo = base_echo(cfg);
    echo.insert("x_list".into(), list_json(&xs));
    echo.insert("ordinate_list".into(), list_json(&ts));
    echo.insert("beta0".into(), float_value(hyp.beta0()));
    echo.insert("gamma0".into(), float_value(hyp.gamma0()));
    let mut table = Table::new(
        "jt-check",
        vec![
            "x",
            "t",
            "beta0",
            "gamma0",
            "j_mellin_re",
            "j_mellin_im",
            "j_convolution_re",
            "j_convolution_im",
            "j_residue_re",
            "j_residue_im",
            "residue_term_re",
            "residue_term_im",
            "max_rel_dev",
            "err_estimate",
        ],
        Value::Object(echo),
    );

    struct Point {
        x: f64,
        t: f64,
        mellin: Complex64,
        conv: Complex64,
        resid_route: Complex64,
        resid_term: Complex64,
        dev: f64,
        err: f64,
    }
    let mut points: Vec<Point> = Vec::new();
    // one kernel line per ordinate feeds the convolution at every length
    for &t in &ts {
        let ctx = KernelContext::new(t, hyp)?;
        let line = GLine::build(&ctx, 0.0, &cfg.contour, &cfg.zeta)?;
        for &x in &xs {
            let mellin = j_mellin_detailed(x, &ctx, &cfg.contour)?;
            let resid = j_residue_detailed(x, &ctx, &cfg.contour)?;
            let conv = j_conv_with_line(x, &ctx, &line, &cfg.quadrature)?;
            let dev = rel_dev(mellin.value, resid.value)
                .max(rel_dev(mellin.value, conv.value))
                .max(rel_dev(resid.value, conv.value));
            let err = conv.err_estimate
                + mellin.tail_bound
                + mellin.disc_estimate
                + mellin.round_bound
                + resid.shifted.tail_bound
                + resid.shifted.disc_estimate
                + resid.shifted.round_bound;
            points.push(Point {
                x,
                t,
                mellin: mellin.value,
                conv: conv.value,
                resid_route: resid.value,
                resid_term: residue_term(x, &ctx)?,
                dev,
                err,
            });
        }
    }
    points.sort_by(|a, b| a.x.total_cmp(&b.x).then(a.t.total_cmp(&b.t)));

    let mut json_rows = Vec::new();
    let mut worst = 0.0f64;
    for p in &points {
        worst = worst.max(p.dev);
        table.push(vec![
            Cell::F(p.x),
            Cell::F(p.t),
            Cell::F(hyp.beta0()),
            Cell::F(hyp.gamma0()),
            Cell::F(p.mellin.re),
            Cell::F(p.mellin.im),
            Cell::F(p.conv.re),
            Cell::F(p.conv.im),
            Cell::F(p.resid_route.re),
            Cell::F(p.resid_route.im),
            Cell::F(p.resid_term.re),
            Cell::F(p.resid_term.im),
            Cell::F(p.dev),
            Cell::F(p.err),
        ]);
        json_rows.push(json!({
            "x": p.x,
            "t": p.t,
            "rho0": {"beta0": hyp.beta0(), "gamma0": hyp.gamma0()},
            "j_mellin": complex_json(p.mellin),
            "j_convolution": complex_json(p.conv),
            "j_residue": complex_json(p.resid_route),
            "residue_term": complex_json(p.resid_term),
            "max_rel_dev": p.dev,
            "err_estimate": p.err,
        }));
    }
    table.json_rows = Some(json_rows);
    table.notes.push(("max_rel_dev", float_value(worst)));
    Ok(table)
}

/// Pointwise terms against the length-averaged moment over a window.
pub fn run_chain(cfg: &LabConfig) -> Result<Table> {
    if cfg.beta0 != 0.5 {
        return Err(Error::Config(format!(
            "chain compares against computed zeta data; beta0 = {} has no data \
             behind it (set beta0 = 0.5)",
            cfg.beta0
        )));
    }
    let xs = cfg.x_list.clone().unwrap_or_else(|| vec![10.0, 100.0]);
    let ts = cfg.t_list.clone().unwrap_or_else(|| vec![200.0]);
    let mut max_x = 2.0f64;
    for &x in &xs {
        if !(x >= 2.0) || !x.is_finite() {
            return Err(Error::Config(format!("x must be at least 2, got {x}")));
        }
        cfg.check_length(x)?;
        max_x = max_x.max(x);
    }
    for &t in &ts {
        let (_, t2) = cfg.window.span(t);
        cfg.check_endpoint(t2)?;
    }
    let sieve = sieve_with_cache(max_x.ceil() as u64 + 1, cfg.cache_dir.as_deref())?;

    let mut echo = base_echo(cfg);
    echo.insert("x_list".into(), list_json(&xs));
    echo.insert("T_list".into(), list_json(&ts));
    echo.insert("window".into(), Value::from(cfg.window.tag()));
    echo.insert("beta0".into(), float_value(cfg.beta0));
    let mut table = Table::new(
        "chain",
        vec!["x", "T1", "T2", "beta0", "lhs", "rhs", "ratio", "err_estimate", "converged"],
        Value::Object(echo),
    );
    let mut worst = f64::NEG_INFINITY;
    for &x in &xs {
        for &t in &ts {
            let (t1, t2) = cfg.window.span(t);
            let avg = moment_length_average(x, t1, t2, &sieve, &cfg.quadrature, &cfg.zeta)?;
            let ln2 = x.ln() * x.ln();
            let lhs = x.powf(2.0 * cfg.beta0) * (t1 + 2.0).ln() / (1.0 + t1).powi(3)
                + t2 * (t2 + 2.0).ln() / x;
            let rhs = ln2 * avg.value;
            let ratio = lhs / rhs;
            worst = worst.max(ratio);
            let (err, conv) = moment_cells(&avg, ln2);
            table.push(vec![
                Cell::F(x),
                Cell::F(t1),
                Cell::F(t2),
                Cell::F(cfg.beta0),
                Cell::F(lhs),
                Cell::F(rhs),
                Cell::F(ratio),
                err,
                conv,
            ]);
        }
    }
    table.notes.push(("max_ratio", float_value(worst)));
    Ok(table)
}
