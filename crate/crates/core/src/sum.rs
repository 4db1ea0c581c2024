//! Deterministic compensated summation primitives.
//!
//! Every accumulation in this crate that feeds an acceptance number goes
//! through one of these, so that results do not depend on chunking or on the
//! number of worker threads.

use num_complex::Complex64;

/// Neumaier-compensated scalar accumulator. Exact for sums whose condition
/// number stays below ~1/eps; the compensation also absorbs the classic
/// Kahan failure case where the next addend is larger than the running sum.
#[derive(Clone, Copy, Debug, Default)]
pub struct KahanSum {
    s: f64,
    c: f64,
}

impl KahanSum {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, x: f64) {
        let t = self.s + x;
        if self.s.abs() >= x.abs() {
            self.c += (self.s - t) + x;
        } else {
            self.c += (x - t) + self.s;
        }
        self.s = t;
    }

    #[inline]
    pub fn value(&self) -> f64 {
        self.s + self.c
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct KahanComplexSum {
    re: KahanSum,
    im: KahanSum,
}

impl KahanComplexSum {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, z: Complex64) {
        self.re.add(z.re);
        self.im.add(z.im);
    }

    #[inline]
    pub fn value(&self) -> Complex64 {
        Complex64::new(self.re.value(), self.im.value())
    }
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

/// Double-double accumulator (~31 significant digits). Used by oracle paths
/// in tests and by reference summations that back error estimates.
#[derive(Clone, Copy, Debug, Default)]
pub struct DdSum {
    hi: f64,
    lo: f64,
}

impl DdSum {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, x: f64) {
        let (s, e) = two_sum(self.hi, x);
        let lo = self.lo + e;
        // renormalize so |lo| <= ulp(hi)
        let (hi2, lo2) = two_sum(s, lo);
        self.hi = hi2;
        self.lo = lo2;
    }

    #[inline]
    pub fn value(&self) -> f64 {
        self.hi + self.lo
    }
}

/// Pairwise reduction with a tree shape fixed by the slice length only.
/// Parallel code first maps work items to an ordered Vec, then combines with
/// this, which keeps outputs byte-identical across thread counts.
pub fn pairwise(xs: &[f64]) -> f64 {
    match xs.len() {
        0 => 0.0,
        1 => xs[0],
        2 => xs[0] + xs[1],
        n => {
            let mid = n / 2;
            pairwise(&xs[..mid]) + pairwise(&xs[mid..])
        }
    }
}

pub fn pairwise_complex(zs: &[Complex64]) -> Complex64 {
    match zs.len() {
        0 => Complex64::new(0.0, 0.0),
        1 => zs[0],
        2 => zs[0] + zs[1],
        n => {
            let mid = n / 2;
            pairwise_complex(&zs[..mid]) + pairwise_complex(&zs[mid..])
        }
    }
}
