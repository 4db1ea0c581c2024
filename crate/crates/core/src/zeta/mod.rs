//! Riemann zeta in the critical strip and to its right, Hardy's Z, the
//! Riemann-Siegel theta, and critical-line zero location.
//!
//! Two evaluation routes: Euler-Maclaurin (general s with Re s > -1) and the
//! Riemann-Siegel expansion (critical line, large t). They overlap for
//! t >= 20 so each can check the other.

mod rs_tables;

use num_complex::Complex64;
use once_cell::sync::Lazy;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::sum::{KahanComplexSum, KahanSum};

const TWO_PI: f64 = std::f64::consts::TAU;
const EPS: f64 = 2.2e-16;

// B_{2k}/(2k)! for k = 1..16; Euler-Maclaurin correction coefficients.
const EM_COEF: [f64; 16] = [
    0.08333333333333333,
    -0.001388888888888889,
    3.306878306878307e-05,
    -8.267195767195768e-07,
    2.08767569878681e-08,
    -5.284190138687493e-10,
    1.3382536530684679e-11,
    -3.3896802963225827e-13,
    8.586062056277845e-15,
    -2.174868698558062e-16,
    5.5090028283602295e-18,
    -1.3954464685812522e-19,
    3.534707039629467e-21,
    -8.953517427037546e-23,
    2.267952452337683e-24,
    -5.744790668872202e-26,
];

// B_{2k}/((2k)(2k-1)) for k = 1..10; Stirling series for log Gamma.
const STIRLING: [f64; 10] = [
    0.08333333333333333,
    -0.002777777777777778,
    0.0007936507936507937,
    -0.0005952380952380953,
    0.0008417508417508417,
    -0.0019175269175269176,
    0.00641025641025641,
    -0.029550653594771242,
    0.17964437236883057,
    -1.3924322169059011,
];

// theta(t) ~ (t/2)log(t/2pi) - t/2 - pi/8 + sum THETA_SERIES[j]/t^{2j+1}
const THETA_SERIES: [f64; 5] = [
    1.0 / 48.0,
    7.0 / 5760.0,
    31.0 / 80640.0,
    127.0 / 430080.0,
    511.0 / 1216512.0,
];

// Empirical sup of |C_k| on [-1,1] for the Riemann-Siegel correction
// functions in rs_tables; index k. Feeds the truncation error bound.
const RS_SUP: [f64; 13] = [
    9.239e-01, 3.060e-02, 5.191e-03, 3.174e-04, 4.648e-04, 7.534e-05, 3.369e-05, 1.091e-05,
    2.420e-06, 2.483e-06, 2.184e-07, 6.314e-07, 1.508e-07,
];

pub const RS_MAX_CORRECTIONS: usize = 12;

/// Below this t the Riemann-Siegel main sum is too short to be useful and
/// evaluation falls back to Euler-Maclaurin.
pub const RS_SWITCH_T: f64 = 30.0;
const RS_MIN_T: f64 = 20.0;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Auto,
    EulerMaclaurin,
    RiemannSiegel,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MethodUsed {
    EulerMaclaurin,
    RiemannSiegel,
}

impl MethodUsed {
    pub fn tag(self) -> &'static str {
        match self {
            MethodUsed::EulerMaclaurin => "em",
            MethodUsed::RiemannSiegel => "rs",
        }
    }
}

#[derive(Clone, Debug)]
pub struct EvalConfig {
    pub method: Method,
    /// Minimum number of main-sum terms for Euler-Maclaurin; the actual count
    /// also scales with |Im s|.
    pub em_terms: usize,
    /// Even order of the highest Bernoulli number used (pairs = order/2).
    pub em_bernoulli_order: usize,
    /// Riemann-Siegel correction terms (0..=12).
    pub rs_corrections: usize,
}

impl Default for EvalConfig {
    fn default() -> Self {
        Self {
            method: Method::Auto,
            em_terms: 50,
            em_bernoulli_order: 24,
            rs_corrections: RS_MAX_CORRECTIONS,
        }
    }
}

impl EvalConfig {
    pub fn validate(&self) -> Result<()> {
        if self.em_terms < 10 {
            return Err(Error::Config("em_terms must be >= 10".into()));
        }
        if self.em_bernoulli_order % 2 != 0
            || !(2..=2 * EM_COEF.len()).contains(&self.em_bernoulli_order)
        {
            return Err(Error::Config(format!(
                "em_bernoulli_order must be even and in 2..={}",
                2 * EM_COEF.len()
            )));
        }
        if self.rs_corrections > RS_MAX_CORRECTIONS {
            return Err(Error::Config(format!(
                "rs_corrections must be <= {RS_MAX_CORRECTIONS}"
            )));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug)]
pub struct ZetaValue {
    pub value: Complex64,
    /// Bound on the absolute error: truncation estimate plus a worst-case
    /// phase-rounding model for the main sum.
    pub err_bound: f64,
    /// Set when err_bound exceeds the 1e-10 working target.
    pub degraded: bool,
    pub method: MethodUsed,
}

#[inline]
fn nps(nf: f64, s: Complex64) -> Complex64 {
    // n^{-s} for real n > 0
    let ln = nf.ln();
    Complex64::from_polar((-s.re * ln).exp(), -s.im * ln)
}

/// Euler-Maclaurin tail at cutoff N: N^{1-s}/(s-1) + N^{-s}/2 + Bernoulli
/// corrections. Returns (tail, next_term) where next_term is the first
/// omitted correction, used for the error bound.
fn em_tail(s: Complex64, nf: f64, pairs: usize) -> (Complex64, Complex64) {
    let n_pow = nps(nf, s);
    let mut tail = n_pow * nf / (s - 1.0) + n_pow * 0.5;
    let inv_n2 = 1.0 / (nf * nf);
    let mut term = n_pow * s * (EM_COEF[0] / nf);
    let mut corr = KahanComplexSum::new();
    corr.add(term);
    for k in 2..=pairs {
        let ratio = EM_COEF[k - 1] / EM_COEF[k - 2];
        let a = s + (2 * k - 3) as f64;
        let b = s + (2 * k - 2) as f64;
        term = term * a * b * (ratio * inv_n2);
        corr.add(term);
    }
    let next = if pairs < EM_COEF.len() {
        let ratio = EM_COEF[pairs] / EM_COEF[pairs - 1];
        term * (s + (2 * pairs - 1) as f64) * (s + (2 * pairs) as f64) * (ratio * inv_n2)
    } else {
        // beyond the table the coefficient ratio tends to -1/(2pi)^2
        term * (s + (2 * pairs - 1) as f64) * (s + (2 * pairs) as f64) * (-0.02533 * inv_n2)
    };
    tail += corr.value();
    (tail, next)
}

fn zeta_em_impl(s: Complex64, cfg: &EvalConfig) -> Result<ZetaValue> {
    if !s.re.is_finite() || !s.im.is_finite() {
        return Err(Error::Domain(format!("non-finite s = {s}")));
    }
    if (s - Complex64::new(1.0, 0.0)).norm() < 1e-12 {
        return Err(Error::Pole("zeta at s = 1".into()));
    }
    if s.re <= -1.0 {
        return Err(Error::Domain(format!(
            "Re s = {} <= -1: outside the supported region",
            s.re
        )));
    }
    let t_abs = s.im.abs();
    if t_abs > 1e7 {
        return Err(Error::Sizing {
            what: "|Im s| for Euler-Maclaurin",
            value: t_abs,
            limit: 1e7,
        });
    }
    let n_main = cfg.em_terms.max((2.0 * t_abs).ceil() as usize).max(2);
    let mut acc = KahanComplexSum::new();
    let mut abs_sum = 0.0f64;
    for n in 1..n_main {
        let z = nps(n as f64, s);
        acc.add(z);
        abs_sum += z.norm();
    }
    let nf = n_main as f64;
    let pairs = cfg.em_bernoulli_order / 2;
    let (tail, next) = em_tail(s, nf, pairs);
    let value = acc.value() + tail;

    // classical remainder bound: |next| * |s+2K+1|/(sigma+2K+1)
    let kk = (2 * pairs + 1) as f64;
    let trunc = next.norm() * ((s + kk).norm() / (s.re + kk));
    // worst-case coherent phase rounding in the main sum
    let round = EPS * abs_sum * (1.0 + t_abs * nf.ln());
    let err_bound = trunc + round;
    Ok(ZetaValue {
        value,
        err_bound,
        degraded: err_bound > 1e-10,
        method: MethodUsed::EulerMaclaurin,
    })
}

/// zeta(s). Euler-Maclaurin everywhere it is supported; on the critical line
/// with |Im s| >= 30 the Auto method switches to Riemann-Siegel.
pub fn zeta(s: Complex64, cfg: &EvalConfig) -> Result<ZetaValue> {
    cfg.validate()?;
    match cfg.method {
        Method::EulerMaclaurin => zeta_em_impl(s, cfg),
        Method::RiemannSiegel => zeta_rs_on_line(s, cfg),
        Method::Auto => {
            if (s.re - 0.5).abs() < 1e-12 && s.im.abs() >= RS_SWITCH_T {
                zeta_rs_on_line(s, cfg)
            } else {
                zeta_em_impl(s, cfg)
            }
        }
    }
}

fn zeta_rs_on_line(s: Complex64, cfg: &EvalConfig) -> Result<ZetaValue> {
    if (s.re - 0.5).abs() > 1e-12 {
        return Err(Error::Domain(format!(
            "Riemann-Siegel path needs Re s = 1/2, got {}",
            s.re
        )));
    }
    let t = s.im.abs();
    if t < RS_MIN_T {
        return Err(Error::Domain(format!(
            "Riemann-Siegel path needs |Im s| >= {RS_MIN_T}, got {t}"
        )));
    }
    let (z, err) = hardy_rs(t, cfg.rs_corrections);
    let th = theta_smooth(t);
    let mut value = Complex64::from_polar(1.0, -th) * z;
    if s.im < 0.0 {
        value = value.conj();
    }
    Ok(ZetaValue {
        value,
        err_bound: err,
        degraded: err > 1e-10,
        method: MethodUsed::RiemannSiegel,
    })
}

fn clenshaw(cs: &[f64], x: f64) -> f64 {
    let mut b1 = 0.0f64;
    let mut b2 = 0.0f64;
    for &c in cs[1..].iter().rev() {
        let t = 2.0 * x * b1 - b2 + c;
        b2 = b1;
        b1 = t;
    }
    x * b1 - b2 + cs[0]
}

/// Riemann-Siegel evaluation of Z(t). Returns (value, error bound).
/// Caller guarantees t >= RS_MIN_T.
fn hardy_rs(t: f64, corrections: usize) -> (f64, f64) {
    let a = (t / TWO_PI).sqrt();
    let n = a.floor() as u64;
    let p = a - n as f64;
    let z = 1.0 - 2.0 * p;
    let th = theta_smooth(t);

    let mut main = KahanSum::new();
    let mut abs_sum = 0.0f64;
    for m in 1..=n {
        let mf = m as f64;
        let x = (th - t * mf.ln()).cos() / mf.sqrt();
        main.add(x);
        abs_sum += 1.0 / mf.sqrt();
    }

    let k_used = corrections.min(RS_MAX_CORRECTIONS);
    let mut corr = 0.0f64;
    let mut apow = 1.0f64;
    for k in 0..k_used {
        corr += clenshaw(rs_tables::RS_CHEB[k], z) * apow;
        apow /= a;
    }
    let sign = if n % 2 == 1 { 1.0 } else { -1.0 };
    let value = 2.0 * main.value() + sign * corr / a.sqrt();

    // first omitted correction term plus coherent phase-rounding model
    let trunc = RS_SUP[k_used] * apow / a.sqrt();
    let round = EPS * (2.0 * abs_sum) * (1.0 + th.abs().max(t));
    (value, trunc + round)
}

#[derive(Clone, Copy, Debug)]
pub struct HardyValue {
    pub value: f64,
    pub err_bound: f64,
    pub method: MethodUsed,
}

/// Hardy's Z(t) = e^{i theta(t)} zeta(1/2 + it), real for real t.
/// Euler-Maclaurin below RS_SWITCH_T (or when forced), Riemann-Siegel above.
pub fn hardy_z(t: f64, cfg: &EvalConfig) -> Result<HardyValue> {
    cfg.validate()?;
    if !(t >= 0.0) {
        return Err(Error::Domain(format!("hardy_z needs t >= 0, got {t}")));
    }
    let use_rs = match cfg.method {
        Method::Auto => t >= RS_SWITCH_T,
        Method::RiemannSiegel => {
            if t < RS_MIN_T {
                return Err(Error::Domain(format!(
                    "Riemann-Siegel needs t >= {RS_MIN_T}, got {t}"
                )));
            }
            true
        }
        Method::EulerMaclaurin => false,
    };
    if use_rs {
        let (value, err_bound) = hardy_rs(t, cfg.rs_corrections);
        Ok(HardyValue {
            value,
            err_bound,
            method: MethodUsed::RiemannSiegel,
        })
    } else {
        let zv = zeta_em_impl(Complex64::new(0.5, t), cfg)?;
        let rotated = Complex64::from_polar(1.0, theta_smooth(t)) * zv.value;
        // the imaginary part is pure numerical error; fold it into the bound
        Ok(HardyValue {
            value: rotated.re,
            err_bound: zv.err_bound + rotated.im.abs(),
            method: MethodUsed::EulerMaclaurin,
        })
    }
}

fn theta_series(t: f64) -> f64 {
    let mut v = 0.5 * t * (t / TWO_PI).ln() - 0.5 * t - std::f64::consts::FRAC_PI_8;
    let inv_t2 = 1.0 / (t * t);
    let mut p = 1.0 / t;
    for c in THETA_SERIES {
        v += c * p;
        p *= inv_t2;
    }
    v
}

/// theta for any finite t: the asymptotic series for |t| >= 10, the
/// log-Gamma definition Im log Gamma(1/4 + it/2) - (t/2) log pi below.
/// Odd in t; theta(0) = 0.
pub fn theta_smooth(t: f64) -> f64 {
    if t < 0.0 {
        return -theta_smooth(-t);
    }
    if t >= 10.0 {
        theta_series(t)
    } else {
        ln_gamma(Complex64::new(0.25, 0.5 * t)).im - 0.5 * t * std::f64::consts::PI.ln()
    }
}

/// The asymptotic series for theta. Below t = 10 the series is not trusted
/// and the call is rejected; use theta_smooth there.
pub fn riemann_siegel_theta(t: f64) -> Result<f64> {
    if !(t >= 10.0) {
        return Err(Error::Domain(format!(
            "riemann_siegel_theta needs t >= 10, got {t}"
        )));
    }
    Ok(theta_series(t))
}

/// log Gamma by the Stirling series after shifting Re z up to >= 12.
/// For Re z > 0 this is the canonical branch (real on the positive axis);
/// for Re z <= 0 the imaginary part is only determined modulo 2pi, which is
/// enough for callers that exponentiate.
pub fn ln_gamma(mut z: Complex64) -> Complex64 {
    let mut shift = KahanComplexSum::new();
    while z.re < 12.0 {
        shift.add(z.ln());
        z += 1.0;
    }
    let lnz = z.ln();
    let mut v = (z - 0.5) * lnz - z + 0.5 * (TWO_PI).ln();
    let inv2 = 1.0 / (z * z);
    let mut p = 1.0 / z;
    for c in STIRLING {
        v += c * p;
        p *= inv2;
    }
    v - shift.value()
}

#[derive(Clone, Copy, Debug)]
pub struct ZeroLocation {
    pub gamma: f64,
    /// |Z(gamma)| at the returned ordinate.
    pub z_residual: f64,
    pub iterations: u32,
}

/// Locate a sign change of Z on [lo, hi]: bisection down to a 1e-10 bracket,
/// then a few secant steps to polish the residual.
pub fn find_zero_on_line(lo: f64, hi: f64, cfg: &EvalConfig) -> Result<ZeroLocation> {
    if !(lo.is_finite() && hi.is_finite()) || !(lo < hi) || lo < 0.0 {
        return Err(Error::Domain(format!("bad bracket [{lo}, {hi}]")));
    }
    let mut a = lo;
    let mut b = hi;
    let mut fa = hardy_z(a, cfg)?.value;
    let mut fb = hardy_z(b, cfg)?.value;
    if fa == 0.0 {
        return Ok(ZeroLocation { gamma: a, z_residual: 0.0, iterations: 0 });
    }
    if fb == 0.0 {
        return Ok(ZeroLocation { gamma: b, z_residual: 0.0, iterations: 0 });
    }
    if fa.signum() == fb.signum() {
        return Err(Error::BadBracket { lo, hi });
    }
    let mut iterations = 0u32;
    while b - a > 1e-10 && iterations < 80 {
        let mid = 0.5 * (a + b);
        let fm = hardy_z(mid, cfg)?.value;
        iterations += 1;
        if fm == 0.0 {
            return Ok(ZeroLocation { gamma: mid, z_residual: 0.0, iterations });
        }
        if fm.signum() == fa.signum() {
            a = mid;
            fa = fm;
        } else {
            b = mid;
            fb = fm;
        }
    }
    // secant polish inside the final bracket
    let (mut x0, mut f0, mut x1, mut f1) = (a, fa, b, fb);
    for _ in 0..8 {
        if f1 == f0 {
            break;
        }
        let x2 = x1 - f1 * (x1 - x0) / (f1 - f0);
        if !x2.is_finite() {
            break;
        }
        let f2 = hardy_z(x2.clamp(lo, hi), cfg)?.value;
        iterations += 1;
        x0 = x1;
        f0 = f1;
        x1 = x2.clamp(lo, hi);
        f1 = f2;
        if f1.abs() < 1e-12 {
            break;
        }
    }
    let (gamma, z_residual) = if f1.abs() <= fa.abs().min(fb.abs()) {
        (x1, f1.abs())
    } else if fa.abs() < fb.abs() {
        (a, fa.abs())
    } else {
        (b, fb.abs())
    };
    if z_residual >= 1e-9 {
        return Err(Error::NoConvergence {
            what: "zero refinement",
            budget: iterations as u64,
        });
    }
    Ok(ZeroLocation { gamma, z_residual, iterations })
}

/// Ordinate of the first critical-line zero, located once on demand.
pub static FIRST_ZERO_GAMMA: Lazy<f64> = Lazy::new(|| {
    find_zero_on_line(14.0, 14.5, &EvalConfig::default())
        .expect("first zero bracket is known good")
        .gamma
});

/// A designated zero rho0 = beta0 + i gamma0 of zeta. Only beta0 = 1/2 can
/// be backed by data; larger beta0 is a hypothesis carried for closed-form
/// scaling demonstrations and never checked against zeta.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ZeroHypothesis {
    beta0: f64,
    gamma0: f64,
}

impl ZeroHypothesis {
    /// Residual |zeta(rho0)| accepted when constructing an on-line zero.
    pub const RESIDUAL_TOL: f64 = 1e-6;

    pub fn on_line(gamma0: f64, cfg: &EvalConfig) -> Result<Self> {
        if !(gamma0 > 0.0) {
            return Err(Error::Domain(format!("gamma0 must be positive, got {gamma0}")));
        }
        let z = zeta(Complex64::new(0.5, gamma0), cfg)?;
        if z.value.norm() >= Self::RESIDUAL_TOL {
            return Err(Error::Domain(format!(
                "|zeta(1/2 + {gamma0}i)| = {:.3e} is not a zero residual",
                z.value.norm()
            )));
        }
        Ok(Self { beta0: 0.5, gamma0 })
    }

    /// Hypothetical zero with beta0 in [1/2, 1); not validated against data.
    pub fn off_line(beta0: f64, gamma0: f64) -> Result<Self> {
        if !(0.5..1.0).contains(&beta0) {
            return Err(Error::Domain(format!(
                "beta0 must lie in [1/2, 1), got {beta0}"
            )));
        }
        if !(gamma0 > 0.0) {
            return Err(Error::Domain(format!("gamma0 must be positive, got {gamma0}")));
        }
        Ok(Self { beta0, gamma0 })
    }

    /// The first critical-line zero.
    pub fn first(cfg: &EvalConfig) -> Result<Self> {
        Self::on_line(*FIRST_ZERO_GAMMA, cfg)
    }

    pub fn beta0(&self) -> f64 {
        self.beta0
    }

    pub fn gamma0(&self) -> f64 {
        self.gamma0
    }

    pub fn rho(&self) -> Complex64 {
        Complex64::new(self.beta0, self.gamma0)
    }

    pub fn is_on_line(&self) -> bool {
        self.beta0 == 0.5
    }
}

/// A uniform vertical grid sigma + i(t0 + k step), k = 0..count.
#[derive(Clone, Copy, Debug)]
pub struct LineGrid {
    pub sigma: f64,
    pub t0: f64,
    pub step: f64,
    pub count: usize,
}

impl LineGrid {
    pub fn t_at(&self, k: usize) -> f64 {
        self.t0 + self.step * k as f64
    }
}

#[derive(Clone, Debug)]
pub struct ZetaLine {
    pub values: Vec<Complex64>,
    /// Single bound valid for every node on the line.
    pub err_bound: f64,
}

const LINE_BLOCK: usize = 256;

/// Euler-Maclaurin on a uniform vertical grid. The main sum reuses per-n
/// rotators e^{-i step log n} within a block of 256 nodes and re-anchors at
/// every block boundary, which keeps the drift below the scalar error bound.
/// Blocks are independent, so the parallel result is identical to serial.
pub fn zeta_line(grid: &LineGrid, cfg: &EvalConfig) -> Result<ZetaLine> {
    cfg.validate()?;
    if grid.count == 0 {
        return Ok(ZetaLine { values: Vec::new(), err_bound: 0.0 });
    }
    if !(grid.step > 0.0) || !grid.step.is_finite() || !grid.t0.is_finite() {
        return Err(Error::Domain(format!(
            "bad line grid: t0 = {}, step = {}",
            grid.t0, grid.step
        )));
    }
    if grid.sigma <= -1.0 {
        return Err(Error::Domain(format!(
            "Re s = {} <= -1: outside the supported region",
            grid.sigma
        )));
    }
    let t_end = grid.t_at(grid.count - 1);
    let t_max = grid.t0.abs().max(t_end.abs());
    if t_max > 1e7 {
        return Err(Error::Sizing {
            what: "line grid height",
            value: t_max,
            limit: 1e7,
        });
    }
    // a node sitting on the pole poisons the whole line; reject early
    if (grid.sigma - 1.0).abs() < 1e-9 && grid.t0 <= 1e-9 && t_end >= -1e-9 {
        let k = (-grid.t0 / grid.step).round().clamp(0.0, (grid.count - 1) as f64) as usize;
        if Complex64::new(grid.sigma - 1.0, grid.t_at(k)).norm() < 1e-9 {
            return Err(Error::Pole(format!("line grid node {k} at s = 1")));
        }
    }

    let n_main = cfg
        .em_terms
        .max((0.55 * t_max).ceil() as usize + 16)
        .max(2);
    let nf = n_main as f64;
    let pairs = cfg.em_bernoulli_order / 2;
    let sigma = grid.sigma;

    let n_blocks = grid.count.div_ceil(LINE_BLOCK);
    let mut values: Vec<Complex64> = (0..n_blocks)
        .into_par_iter()
        .flat_map_iter(|bi| {
            let j0 = bi * LINE_BLOCK;
            let len = LINE_BLOCK.min(grid.count - j0);
            let t_anchor = grid.t_at(j0);
            let mut acc = vec![Complex64::new(0.0, 0.0); len];
            for n in 1..n_main {
                let ln_n = (n as f64).ln();
                let mut c = Complex64::from_polar((-sigma * ln_n).exp(), -t_anchor * ln_n);
                let rot = Complex64::from_polar(1.0, -grid.step * ln_n);
                for slot in acc.iter_mut() {
                    *slot += c;
                    c *= rot;
                }
            }
            (0..len).map(move |j| {
                let s = Complex64::new(sigma, grid.t_at(j0 + j));
                let (tail, _) = em_tail(s, nf, pairs);
                acc[j] + tail
            })
        })
        .collect();

    // error bound from the worst node (largest |t|): truncation + rounding
    let s_worst = Complex64::new(sigma, t_max);
    let (_, next) = em_tail(s_worst, nf, pairs);
    let kk = (2 * pairs + 1) as f64;
    let trunc = next.norm() * ((s_worst + kk).norm() / (sigma + kk));
    let abs_sum: f64 = (1..n_main).map(|n| (n as f64).powf(-sigma)).sum();
    let round = EPS * abs_sum * (1.0 + t_max * nf.ln()) * 2.0;
    let err_bound = trunc + round;
    if values.len() != grid.count {
        values.truncate(grid.count);
    }
    Ok(ZetaLine { values, err_bound })
}
