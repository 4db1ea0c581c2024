//! The truncated Dirichlet polynomial that damps |zeta| on the critical
//! line: M_x(s) log x = sum_{n <= x} mu(n) n^{-s} log(x/n), with M identically
//! zero for x <= 1. Pointwise values, uniform-grid values by phase recurrence,
//! and dense prefix tables that give M_y log y for every y up to a limit.

use num_complex::Complex64;
use rayon::prelude::*;

use crate::arith::{CoefficientTable, MobiusTable};
use crate::error::{Error, Result};
use crate::sum::{DdSum, KahanComplexSum};

const EPS: f64 = 2.2e-16;

/// Uniform ordinate grid t0 + k dt, k = 0..count.
#[derive(Clone, Copy, Debug)]
pub struct TGrid {
    pub t0: f64,
    pub dt: f64,
    pub count: usize,
}

impl TGrid {
    pub fn t_at(&self, k: usize) -> f64 {
        self.t0 + self.dt * k as f64
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.dt > 0.0) || !self.dt.is_finite() || !(self.t0 >= 0.0) || self.t0.is_nan() {
            return Err(Error::Domain(format!(
                "bad t-grid: t0 = {}, dt = {}",
                self.t0, self.dt
            )));
        }
        if self.count == 0 {
            return Err(Error::Domain("t-grid needs count >= 1".into()));
        }
        Ok(())
    }
}

/// M_x(1/2 + it) as a cosine/sine polynomial in t.
///
/// Term n carries amplitude mu(n) log(x/n) / (sqrt(n) log x) and phase
/// -t log n. Terms with mu(n) = 0 are dropped at construction.
#[derive(Clone, Debug)]
pub struct Mollifier {
    x: f64,
    ln_n: Vec<f64>,
    coef: Vec<f64>,
    coef_abs_sum: f64,
}

/// Re-anchor cadence for grid evaluation; bounds rotator drift.
const GRID_ANCHOR: usize = 512;
/// Terms per parallel work unit in grid evaluation.
const GRID_TERM_BLOCK: usize = 4096;

impl Mollifier {
    pub fn new(table: &CoefficientTable) -> Self {
        let log_x = table.log_x();
        let mut ln_n = Vec::with_capacity(table.entries().len());
        let mut coef = Vec::with_capacity(table.entries().len());
        let mut abs = 0.0f64;
        for e in table.entries() {
            let l = (e.n as f64).ln();
            let c = e.mu as f64 * e.weight / ((e.n as f64).sqrt() * log_x);
            ln_n.push(l);
            coef.push(c);
            abs += c.abs();
        }
        Self {
            x: table.x(),
            ln_n,
            coef,
            coef_abs_sum: abs,
        }
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    pub fn terms(&self) -> usize {
        self.coef.len()
    }

    /// Summation plus phase-rounding error model for value(t). Dominated by
    /// eps |t| log n per term once |t| is large.
    pub fn err_bound(&self, t: f64) -> f64 {
        let ln_max = self.ln_n.last().copied().unwrap_or(0.0);
        self.coef_abs_sum * EPS * (2.0 + t.abs() * ln_max)
    }

    /// M_x(1/2 + it), compensated summation.
    pub fn value(&self, t: f64) -> Complex64 {
        let mut acc = KahanComplexSum::new();
        for (&l, &c) in self.ln_n.iter().zip(&self.coef) {
            let (s, co) = (t * l).sin_cos();
            acc.add(Complex64::new(c * co, -c * s));
        }
        acc.value()
    }

    /// Double-double accumulation of the same terms; reference for value().
    /// Shares the rounded phases, so it isolates summation error only.
    pub fn value_dd(&self, t: f64) -> Complex64 {
        let mut re = DdSum::new();
        let mut im = DdSum::new();
        for (&l, &c) in self.ln_n.iter().zip(&self.coef) {
            let (s, co) = (t * l).sin_cos();
            re.add(c * co);
            im.add(-c * s);
        }
        Complex64::new(re.value(), im.value())
    }

    /// Values on a uniform grid. Each term walks a 512-node chunk with the
    /// rotator e^{-i dt log n}, freshly anchored at the chunk start so drift
    /// never accumulates past the pointwise error bound. Chunks are disjoint
    /// in t, so parallel and serial runs produce identical output. Within a
    /// chunk the n-loop runs in blocks of 4096 for cache locality.
    pub fn values_on_grid(&self, grid: &TGrid) -> Result<Vec<Complex64>> {
        grid.validate()?;
        if self.coef.is_empty() {
            return Ok(vec![Complex64::new(0.0, 0.0); grid.count]);
        }
        let n_chunks = grid.count.div_ceil(GRID_ANCHOR);
        let out: Vec<Complex64> = (0..n_chunks)
            .into_par_iter()
            .flat_map_iter(|ci| {
                let k0 = ci * GRID_ANCHOR;
                let len = GRID_ANCHOR.min(grid.count - k0);
                let t_anchor = grid.t_at(k0);
                let mut local = vec![Complex64::new(0.0, 0.0); len];
                let mut lo = 0;
                while lo < self.coef.len() {
                    let hi = (lo + GRID_TERM_BLOCK).min(self.coef.len());
                    for i in lo..hi {
                        let l = self.ln_n[i];
                        let rot = Complex64::from_polar(1.0, -grid.dt * l);
                        let mut ph = Complex64::from_polar(self.coef[i], -t_anchor * l);
                        for slot in local.iter_mut() {
                            *slot += ph;
                            ph *= rot;
                        }
                    }
                    lo = hi;
                }
                local
            })
            .collect();
        Ok(out)
    }
}

/// Dense prefix sums at fixed t: a[m] = sum_{n<=m} mu(n) n^{-1/2-it} and
/// b[m] = sum_{n<=m} mu(n) log n n^{-1/2-it}. Together they give
/// M_y(1/2+it) log y = log y a[floor y] - b[floor y] for any y in [1, limit+1)
/// in constant time, and exact panel integrals of its square.
#[derive(Clone, Debug)]
pub struct MollifierPrefix {
    t: f64,
    a: Vec<Complex64>,
    b: Vec<Complex64>,
}

impl MollifierPrefix {
    pub fn build(limit: usize, t: f64, mobius: &MobiusTable) -> Result<Self> {
        if limit < 1 {
            return Err(Error::Domain("prefix limit must be >= 1".into()));
        }
        if (limit as u64) > mobius.limit() {
            return Err(Error::Sizing {
                what: "mollifier prefix limit vs sieve",
                value: limit as f64,
                limit: mobius.limit() as f64,
            });
        }
        let mut a = Vec::with_capacity(limit + 1);
        let mut b = Vec::with_capacity(limit + 1);
        a.push(Complex64::new(0.0, 0.0));
        b.push(Complex64::new(0.0, 0.0));
        let mut acc_a = KahanComplexSum::new();
        let mut acc_b = KahanComplexSum::new();
        for n in 1..=limit {
            let mu = mobius.mu(n as u64);
            if mu != 0 {
                let l = (n as f64).ln();
                let z = Complex64::from_polar(mu as f64 / (n as f64).sqrt(), -t * l);
                acc_a.add(z);
                acc_b.add(z * l);
            }
            a.push(acc_a.value());
            b.push(acc_b.value());
        }
        Ok(Self { t, a, b })
    }

    pub fn t(&self) -> f64 {
        self.t
    }

    pub fn limit(&self) -> usize {
        self.a.len() - 1
    }

    /// M_y(1/2+it) log y; zero for y < 1. Continuous across integer y.
    pub fn m_log(&self, y: f64) -> Complex64 {
        if !(y >= 1.0) {
            return Complex64::new(0.0, 0.0);
        }
        let m = (y.floor() as usize).min(self.limit());
        let ly = y.ln();
        self.a[m] * ly - self.b[m]
    }

    /// |m_log|^2 integrated over [1, x]. On each integer panel the integrand
    /// is |A|^2 log^2 y - 2 Re(A conj B) log y + |B|^2, which integrates in
    /// closed form, so the only error is rounding.
    pub fn integral_abs2_mlog(&self, x: f64) -> Result<f64> {
        let x = self.clamp_upper(x)?;
        let mut acc = crate::sum::KahanSum::new();
        let mut lo = 1.0f64;
        while lo < x {
            let m = lo.floor() as usize;
            let hi = ((m + 1) as f64).min(x);
            let a = self.a[m];
            let b = self.b[m];
            let p2 = a.norm_sqr();
            let p1 = -2.0 * (a * b.conj()).re;
            let p0 = b.norm_sqr();
            acc.add(p2 * (f_log2(hi) - f_log2(lo)) + p1 * (f_log1(hi) - f_log1(lo))
                + p0 * (hi - lo));
            lo = hi;
        }
        Ok(acc.value().max(0.0))
    }

    /// |m_log| integrated over [1, x] by 8-node Gauss-Legendre per integer
    /// panel; the integrand is smooth inside each panel away from its zeros.
    pub fn integral_abs_mlog(&self, x: f64) -> Result<f64> {
        let x = self.clamp_upper(x)?;
        let gl = &crate::quad::GL8;
        let mut acc = crate::sum::KahanSum::new();
        let mut lo = 1.0f64;
        while lo < x {
            let hi = (lo.floor() + 1.0).min(x);
            acc.add(gl.integrate(lo, hi, |y| self.m_log(y).norm()));
            lo = hi;
        }
        Ok(acc.value())
    }

    fn clamp_upper(&self, x: f64) -> Result<f64> {
        if !(x >= 1.0) || !x.is_finite() {
            return Err(Error::Domain(format!("integral upper limit {x} < 1")));
        }
        if x > (self.limit() + 1) as f64 {
            return Err(Error::Sizing {
                what: "integral upper limit vs prefix table",
                value: x,
                limit: (self.limit() + 1) as f64,
            });
        }
        Ok(x)
    }
}

// antiderivative of log^2 y
fn f_log2(y: f64) -> f64 {
    let l = y.ln();
    y * (l * l - 2.0 * l + 2.0)
}

// antiderivative of log y
fn f_log1(y: f64) -> f64 {
    y * (y.ln() - 1.0)
}
