//! Moment integrals on the critical line: the mollified second moment
//! I_x(T1,T2), its average over mollifier lengths, and the bare second
//! moment of |zeta|. The quadrature sizes panels from the integrand's
//! oscillation and refines adaptively against panel-halving estimates.

use std::collections::BinaryHeap;

use rayon::prelude::*;

use crate::arith::{CoefficientTable, MobiusTable};
use crate::error::{Error, Result};
use crate::mollifier::Mollifier;
use crate::quad::GaussLegendre;
use crate::sum::{pairwise, KahanSum};
use crate::zeta::{hardy_z, EvalConfig};

const TAU: f64 = std::f64::consts::TAU;

#[derive(Clone, Debug)]
pub struct QuadratureConfig {
    /// Nodes per estimated oscillation period of M(1/2+it) zeta(1/2+it).
    pub nodes_per_period: usize,
    /// Gauss-Legendre order per panel.
    pub panel_nodes: usize,
    pub rel_tol: f64,
    pub max_panels: usize,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        Self {
            nodes_per_period: 8,
            panel_nodes: 16,
            rel_tol: 1e-6,
            max_panels: 200_000,
        }
    }
}

impl QuadratureConfig {
    pub fn validate(&self) -> Result<()> {
        if self.nodes_per_period < 4 {
            return Err(Error::Config("nodes_per_period must be >= 4".into()));
        }
        if !(2..=64).contains(&self.panel_nodes) {
            return Err(Error::Config("panel_nodes must be in 2..=64".into()));
        }
        if !(self.rel_tol > 0.0 && self.rel_tol < 1.0) {
            return Err(Error::Config(format!(
                "rel_tol must be in (0, 1), got {}",
                self.rel_tol
            )));
        }
        if self.max_panels < 4 {
            return Err(Error::Config("max_panels must be >= 4".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug)]
pub struct MomentResult {
    pub value: f64,
    /// Sum of per-panel halving discrepancies.
    pub err_estimate: f64,
    pub panels_used: usize,
    pub evaluations: u64,
    /// False when max_panels was exhausted before the tolerance was met.
    pub converged: bool,
}

impl MomentResult {
    fn zero() -> Self {
        Self {
            value: 0.0,
            err_estimate: 0.0,
            panels_used: 0,
            evaluations: 0,
            converged: true,
        }
    }
}

/// |M_x(1/2+it)|^2 |zeta(1/2+it)|^2, the modulus taken through Hardy Z.
pub fn moment_integrand(m: &Mollifier, t: f64, zcfg: &EvalConfig) -> Result<f64> {
    if !(t >= 0.0) {
        return Err(Error::Domain(format!("moment integrand needs t >= 0, got {t}")));
    }
    let z = hardy_z(t, zcfg)?.value;
    Ok(m.value(t).norm_sqr() * z * z)
}

// One adaptive panel. value is the two-half composite; err compares it
// against the single-panel rule; f_left/f_right seed the children's coarse
// values on a split.
#[derive(Clone, Copy, Debug)]
struct Panel {
    a: f64,
    b: f64,
    value: f64,
    err: f64,
    f_left: f64,
    f_right: f64,
}

struct HeapKey {
    err: f64,
    a: f64,
    idx: usize,
}

impl PartialEq for HeapKey {
    fn eq(&self, other: &Self) -> bool {
        self.err == other.err && self.a == other.a && self.idx == other.idx
    }
}
impl Eq for HeapKey {}
impl PartialOrd for HeapKey {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for HeapKey {
    // max-heap: largest err first, then leftmost panel, then lowest index
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.err
            .total_cmp(&other.err)
            .then(other.a.total_cmp(&self.a))
            .then(other.idx.cmp(&self.idx))
    }
}

fn gl_panel<F: Fn(f64) -> Result<f64>>(f: &F, gl: &GaussLegendre, a: f64, b: f64) -> Result<f64> {
    let mut acc = KahanSum::new();
    for (x, w) in gl.nodes_scaled(a, b) {
        acc.add(w * f(x)?);
    }
    Ok(acc.value())
}

fn make_panel<F: Fn(f64) -> Result<f64>>(
    f: &F,
    gl: &GaussLegendre,
    a: f64,
    b: f64,
    coarse: f64,
) -> Result<Panel> {
    let mid = 0.5 * (a + b);
    let f_left = gl_panel(f, gl, a, mid)?;
    let f_right = gl_panel(f, gl, mid, b)?;
    let value = f_left + f_right;
    Ok(Panel {
        a,
        b,
        value,
        err: (value - coarse).abs(),
        f_left,
        f_right,
    })
}

/// Shared engine. log_x enters the oscillation-period model
/// 2 pi / (log x + 1/2 log(max(t,10)/2 pi)); the initial partition gives each
/// panel at most panel_nodes/nodes_per_period such periods, then the worst
/// panel is halved until the halving discrepancies sum below rel_tol.
/// The initial pass runs in parallel over the fixed partition; panel values
/// are combined by pairwise reduction in panel order, so results do not
/// depend on the worker count.
fn adaptive_moment<F>(f: &F, t1: f64, t2: f64, log_x: f64, cfg: &QuadratureConfig) -> Result<MomentResult>
where
    F: Fn(f64) -> Result<f64> + Sync,
{
    cfg.validate()?;
    if !(t1 >= 0.0) || !(t2 > t1) || !t2.is_finite() {
        return Err(Error::Domain(format!(
            "integration window needs 0 <= T1 < T2, got [{t1}, {t2}]"
        )));
    }
    let gl = GaussLegendre::new(cfg.panel_nodes);
    let periods = cfg.panel_nodes as f64 / cfg.nodes_per_period as f64;

    let mut edges = vec![t1];
    let mut t = t1;
    while t < t2 {
        let freq = log_x + 0.5 * ((t.max(10.0)) / TAU).ln();
        t = (t + periods * TAU / freq).min(t2);
        edges.push(t);
    }

    let init: Result<Vec<Panel>> = edges
        .par_windows(2)
        .map(|e| {
            let coarse = gl_panel(f, &gl, e[0], e[1])?;
            make_panel(f, &gl, e[0], e[1], coarse)
        })
        .collect();
    let mut panels = init?;
    let n_init = panels.len();
    let mut splits: u64 = 0;

    let mut heap = BinaryHeap::with_capacity(panels.len() * 2);
    for (idx, p) in panels.iter().enumerate() {
        heap.push(HeapKey { err: p.err, a: p.a, idx });
    }
    let mut sum_val: f64 = panels.iter().map(|p| p.value).sum();
    let mut sum_err: f64 = panels.iter().map(|p| p.err).sum();

    let mut converged = true;
    loop {
        if sum_err <= cfg.rel_tol * sum_val.abs().max(f64::MIN_POSITIVE) {
            break;
        }
        if panels.len() >= cfg.max_panels {
            converged = false;
            break;
        }
        let key = match heap.pop() {
            Some(k) => k,
            None => break,
        };
        let p = panels[key.idx];
        if p.err != key.err || p.a != key.a {
            continue; // stale entry from before a split
        }
        let mid = 0.5 * (p.a + p.b);
        let left = make_panel(f, &gl, p.a, mid, p.f_left)?;
        let right = make_panel(f, &gl, mid, p.b, p.f_right)?;
        splits += 1;
        sum_val += left.value + right.value - p.value;
        sum_err += left.err + right.err - p.err;
        panels[key.idx] = left;
        heap.push(HeapKey { err: left.err, a: left.a, idx: key.idx });
        let ridx = panels.len();
        panels.push(right);
        heap.push(HeapKey { err: right.err, a: right.a, idx: ridx });
        // incremental totals drift; refresh them periodically
        if splits % 256 == 0 {
            sum_val = panels.iter().map(|p| p.value).sum();
            sum_err = panels.iter().map(|p| p.err).sum();
        }
    }

    panels.sort_by(|p, q| p.a.total_cmp(&q.a));
    let values: Vec<f64> = panels.iter().map(|p| p.value).collect();
    let value = pairwise(&values);
    let mut err = KahanSum::new();
    for p in &panels {
        err.add(p.err);
    }
    let evaluations = cfg.panel_nodes as u64 * (3 * n_init as u64 + 4 * splits);
    Ok(MomentResult {
        value: value.max(0.0),
        err_estimate: err.value(),
        panels_used: panels.len(),
        evaluations,
        converged,
    })
}

/// I_x(T1, T2) = integral of |M_x|^2 |zeta|^2 over [T1, T2].
pub fn mollified_moment(
    m: &Mollifier,
    t1: f64,
    t2: f64,
    cfg: &QuadratureConfig,
    zcfg: &EvalConfig,
) -> Result<MomentResult> {
    cfg.validate()?;
    if !(t1 >= 0.0) || !(t2 > t1) || !t2.is_finite() {
        return Err(Error::Domain(format!(
            "integration window needs 0 <= T1 < T2, got [{t1}, {t2}]"
        )));
    }
    if m.terms() == 0 {
        return Ok(MomentResult::zero());
    }
    let log_x = m.x().max(1.0).ln();
    adaptive_moment(&|t| moment_integrand(m, t, zcfg), t1, t2, log_x, cfg)
}

/// Integral of |zeta(1/2+it)|^2 = Z(t)^2 over [T1, T2].
pub fn second_moment_zeta(
    t1: f64,
    t2: f64,
    cfg: &QuadratureConfig,
    zcfg: &EvalConfig,
) -> Result<MomentResult> {
    adaptive_moment(
        &|t| {
            let z = hardy_z(t, zcfg)?.value;
            Ok(z * z)
        },
        t1,
        t2,
        0.0,
        cfg,
    )
}

/// The mollifier-length average: integral over y in [1, x] of I_y(T1, T2).
///
/// Outer quadrature is 32-point Gauss-Legendre on geometric panels of [1, x]
/// (I_y varies on a log y scale), compared against the embedded 16-point
/// rule for the outer error estimate; a panel whose discrepancy exceeds its
/// share of 10 rel_tol is split at its geometric midpoint, a few levels deep.
/// Inner I_y values come from mollified_moment on the same window.
pub fn moment_length_average(
    x: f64,
    t1: f64,
    t2: f64,
    mobius: &MobiusTable,
    cfg: &QuadratureConfig,
    zcfg: &EvalConfig,
) -> Result<MomentResult> {
    cfg.validate()?;
    if !(x >= 2.0) || !x.is_finite() {
        return Err(Error::Domain(format!("length average needs x >= 2, got {x}")));
    }
    if x > mobius.limit() as f64 {
        return Err(Error::Sizing {
            what: "length-average upper limit vs sieve",
            value: x,
            limit: mobius.limit() as f64,
        });
    }
    let gl32 = GaussLegendre::new(32);
    let gl16 = GaussLegendre::new(16);

    let inner = |y: f64| -> Result<MomentResult> {
        let table = CoefficientTable::build(y, mobius)?;
        mollified_moment(&Mollifier::new(&table), t1, t2, cfg, zcfg)
    };

    // geometric initial panels [1,2], [2,4], ..., clamped at x
    let mut seams = vec![1.0f64];
    let mut hi = 2.0f64;
    while hi < x {
        seams.push(hi);
        hi *= 2.0;
    }
    seams.push(x);

    struct OuterPanel {
        a: f64,
        b: f64,
        depth: u32,
    }
    let mut work: Vec<OuterPanel> = seams
        .windows(2)
        .map(|e| OuterPanel { a: e[0], b: e[1], depth: 0 })
        .collect();

    let mut done: Vec<(f64, f64, f64, f64)> = Vec::new(); // (a, value, err, outer disc)
    let mut evaluations: u64 = 0;
    let mut panels_used = 0usize;
    let mut inner_ok = true;
    let outer_tol = 10.0 * cfg.rel_tol;

    while let Some(p) = work.pop() {
        let mut v32 = KahanSum::new();
        let mut inner_err = KahanSum::new();
        for (y, w) in gl32.nodes_scaled(p.a, p.b) {
            let r = inner(y)?;
            evaluations += r.evaluations;
            inner_ok &= r.converged;
            v32.add(w * r.value);
            inner_err.add(w.abs() * r.err_estimate);
        }
        let mut v16 = KahanSum::new();
        for (y, w) in gl16.nodes_scaled(p.a, p.b) {
            let r = inner(y)?;
            evaluations += r.evaluations;
            v16.add(w * r.value);
        }
        let disc = (v32.value() - v16.value()).abs();
        // split on outer-rule disagreement alone, not inherited inner error;
        // the per-panel target is only a work-allocation heuristic
        let panel_share = outer_tol * v32.value().abs().max(1e-300) * (p.b - p.a) / (x - 1.0);
        if disc > panel_share.max(1e-300) && p.depth < 5 {
            let mid = (p.a * p.b).sqrt();
            work.push(OuterPanel { a: p.a, b: mid, depth: p.depth + 1 });
            work.push(OuterPanel { a: mid, b: p.b, depth: p.depth + 1 });
            continue;
        }
        panels_used += 1;
        done.push((p.a, v32.value(), disc + inner_err.value(), disc));
    }

    done.sort_by(|u, v| u.0.total_cmp(&v.0));
    let values: Vec<f64> = done.iter().map(|d| d.1).collect();
    let mut err = KahanSum::new();
    let mut outer_disc = KahanSum::new();
    for d in &done {
        err.add(d.2);
        outer_disc.add(d.3);
    }
    let value = pairwise(&values).max(0.0);
    // the flag states whether the aggregate met the outer tolerance
    let converged = inner_ok && outer_disc.value() <= outer_tol * value.abs().max(1e-300);
    Ok(MomentResult {
        value,
        err_estimate: err.value(),
        panels_used,
        evaluations,
        converged,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use once_cell::sync::Lazy;

    static MOBIUS: Lazy<MobiusTable> = Lazy::new(|| MobiusTable::sieve(4096).unwrap());

    fn moll(x: f64) -> Mollifier {
        Mollifier::new(&CoefficientTable::build(x, &MOBIUS).unwrap())
    }

    fn qcfg() -> QuadratureConfig {
        QuadratureConfig::default()
    }

    fn zcfg() -> EvalConfig {
        EvalConfig::default()
    }

    #[test]
    fn integrand_values() {
        // length 1 mollifier kills the integrand
        let m1 = moll(1.0);
        assert_eq!(moment_integrand(&m1, 5.0, &zcfg()).unwrap(), 0.0);
        // at a zeta zero the integrand vanishes regardless of x
        let m = moll(50.0);
        let gamma1 = 14.13472514173469379045725198356;
        assert!(moment_integrand(&m, gamma1, &zcfg()).unwrap() < 1e-10);
        // x = 2: M = 1, so the integrand equals zeta(1/2)^2
        let m2 = moll(2.0);
        let v = moment_integrand(&m2, 0.0, &zcfg()).unwrap();
        assert!((v - 2.13263).abs() < 1e-4);
        assert!(moment_integrand(&m2, -1.0, &zcfg()).is_err());
    }

    #[test]
    fn matches_dense_trapezoid_oracle() {
        let m = moll(50.0);
        let got = mollified_moment(&m, 0.0, 100.0, &qcfg(), &zcfg()).unwrap();
        assert!(got.converged);
        // brute-force uniform trapezoid at high node density
        let n = 60_000;
        let h = 100.0 / n as f64;
        let mut acc = KahanSum::new();
        for i in 0..=n {
            let t = i as f64 * h;
            let f = moment_integrand(&m, t, &zcfg()).unwrap();
            acc.add(if i == 0 || i == n { 0.5 * f } else { f });
        }
        let oracle = acc.value() * h;
        let rel = (got.value - oracle).abs() / oracle;
        assert!(rel < 1e-4, "adaptive {} vs trapezoid {} (rel {rel:.2e})", got.value, oracle);
    }

    #[test]
    fn zero_mollifier_gives_zero_moment() {
        let r = mollified_moment(&moll(1.0), 0.0, 50.0, &qcfg(), &zcfg()).unwrap();
        assert_eq!(r.value, 0.0);
        assert!(r.converged);
    }

    #[test]
    fn rejects_bad_windows() {
        let m = moll(10.0);
        assert!(mollified_moment(&m, 10.0, 10.0, &qcfg(), &zcfg()).is_err());
        assert!(mollified_moment(&m, 20.0, 10.0, &qcfg(), &zcfg()).is_err());
        assert!(mollified_moment(&m, -1.0, 10.0, &qcfg(), &zcfg()).is_err());
        assert!(second_moment_zeta(5.0, 5.0, &qcfg(), &zcfg()).is_err());
    }

    #[test]
    fn window_additivity() {
        let m = moll(30.0);
        let whole = mollified_moment(&m, 0.0, 80.0, &qcfg(), &zcfg()).unwrap();
        let a = mollified_moment(&m, 0.0, 40.0, &qcfg(), &zcfg()).unwrap();
        let b = mollified_moment(&m, 40.0, 80.0, &qcfg(), &zcfg()).unwrap();
        let gap = (whole.value - a.value - b.value).abs();
        let budget = whole.err_estimate + a.err_estimate + b.err_estimate;
        assert!(gap <= budget.max(1e-9 * whole.value), "gap {gap:.2e} budget {budget:.2e}");
    }

    #[test]
    fn halving_panels_stays_within_error() {
        let m = moll(25.0);
        let base = mollified_moment(&m, 0.0, 60.0, &qcfg(), &zcfg()).unwrap();
        let fine_cfg = QuadratureConfig { nodes_per_period: 16, ..qcfg() };
        let fine = mollified_moment(&m, 0.0, 60.0, &fine_cfg, &zcfg()).unwrap();
        let shift = (base.value - fine.value).abs();
        assert!(
            shift < 3.0 * base.err_estimate.max(1e-12),
            "halving moved the value by {shift:.2e} vs err {:.2e}",
            base.err_estimate
        );
    }

    #[test]
    fn second_moment_matches_classical_main_term() {
        let t = 500.0;
        let r = second_moment_zeta(0.0, t, &qcfg(), &zcfg()).unwrap();
        assert!(r.converged);
        let euler = 0.577215664901532860606512090082;
        let target = t * ((t / TAU).ln() + 2.0 * euler - 1.0);
        let rel = (r.value - target).abs() / target;
        assert!(rel < 0.05, "second moment {} vs main term {} (rel {rel:.3})", r.value, target);
        assert!(r.value >= 0.5 * t * (t + 2.0).ln());
    }

    #[test]
    fn length_average_at_x2_equals_plain_second_moment() {
        // for y in (1, 2) the mollifier is the single term 1, so the inner
        // moment is the bare |zeta|^2 integral and the y-average over [1, 2]
        // must reproduce it
        let avg = moment_length_average(2.0, 0.0, 30.0, &MOBIUS, &qcfg(), &zcfg()).unwrap();
        let plain = second_moment_zeta(0.0, 30.0, &qcfg(), &zcfg()).unwrap();
        let rel = (avg.value - plain.value).abs() / plain.value;
        assert!(rel < 1e-5, "average {} vs plain {} (rel {rel:.2e})", avg.value, plain.value);
    }

    #[test]
    fn length_average_matches_riemann_sum_oracle() {
        let x = 10.0;
        let got = moment_length_average(x, 0.0, 50.0, &MOBIUS, &qcfg(), &zcfg()).unwrap();
        // midpoint Riemann sum over 200 y-nodes
        let n = 200;
        let h = (x - 1.0) / n as f64;
        let mut acc = KahanSum::new();
        for i in 0..n {
            let y = 1.0 + (i as f64 + 0.5) * h;
            let table = CoefficientTable::build(y, &MOBIUS).unwrap();
            let r = mollified_moment(&Mollifier::new(&table), 0.0, 50.0, &qcfg(), &zcfg()).unwrap();
            acc.add(r.value);
        }
        let oracle = acc.value() * h;
        let rel = (got.value - oracle).abs() / oracle;
        assert!(rel < 1e-3, "average {} vs Riemann oracle {} (rel {rel:.2e})", got.value, oracle);
    }

    #[test]
    fn length_average_monotone_in_x() {
        let a = moment_length_average(10.0, 0.0, 40.0, &MOBIUS, &qcfg(), &zcfg()).unwrap();
        let b = moment_length_average(20.0, 0.0, 40.0, &MOBIUS, &qcfg(), &zcfg()).unwrap();
        assert!(b.value > a.value);
        assert!(a.value > 0.0);
    }

    #[test]
    fn levinson_trend_smoke() {
        // desk-scale check that I_{T^theta}(0,T)/T sits near 1 + 1/theta and
        // tightens as T grows
        let theta = 0.4f64;
        let target = 1.0 + 1.0 / theta;
        let mut gaps = Vec::new();
        for t in [200.0f64, 800.0] {
            let x = t.powf(theta);
            let r = mollified_moment(&moll(x), 0.0, t, &qcfg(), &zcfg()).unwrap();
            gaps.push(((r.value / t) - target).abs() / target);
        }
        assert!(gaps[1] < gaps[0], "gaps {gaps:?} not shrinking");
        assert!(gaps[1] < 0.5, "gap at T=800 too large: {gaps:?}");
    }

    #[test]
    fn config_validation_rejects_bad_values() {
        let mut c = qcfg();
        c.nodes_per_period = 3;
        assert!(c.validate().is_err());
        c = qcfg();
        c.rel_tol = 1.0;
        assert!(c.validate().is_err());
        c = qcfg();
        c.panel_nodes = 100;
        assert!(c.validate().is_err());
    }
}
