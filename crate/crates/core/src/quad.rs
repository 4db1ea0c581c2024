//! Gauss-Legendre quadrature rules, computed once per node count.

use num_complex::Complex64;
use once_cell::sync::Lazy;

use crate::sum::KahanSum;

/// Nodes and weights for n-point Gauss-Legendre on [-1, 1].
#[derive(Clone, Debug)]
pub struct GaussLegendre {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl GaussLegendre {
    /// Newton iteration on the Legendre recurrence from the Chebyshev-angle
    /// initial guess; converges to machine precision in a handful of steps.
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "need at least one node");
        let mut nodes = vec![0.0f64; n];
        let mut weights = vec![0.0f64; n];
        let m = n.div_ceil(2);
        for i in 0..m {
            let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                // p0, p1 walk the three-term recurrence up to degree n
                let mut p0 = 1.0f64;
                let mut p1 = x;
                for k in 2..=n {
                    let kf = k as f64;
                    let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
                    p0 = p1;
                    p1 = p2;
                }
                dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
                let dx = p1 / dp;
                x -= dx;
                if dx.abs() < 1e-15 {
                    // one last polish step keeps the residual at machine eps
                    let mut q0 = 1.0f64;
                    let mut q1 = x;
                    for k in 2..=n {
                        let kf = k as f64;
                        let q2 = ((2.0 * kf - 1.0) * x * q1 - (kf - 1.0) * q0) / kf;
                        q0 = q1;
                        q1 = q2;
                    }
                    dp = n as f64 * (x * q1 - q0) / (x * x - 1.0);
                    x -= q1 / dp;
                    break;
                }
            }
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            nodes[i] = -x;
            weights[i] = w;
            nodes[n - 1 - i] = x;
            weights[n - 1 - i] = w;
        }
        if n % 2 == 1 {
            nodes[n / 2] = 0.0;
        }
        Self { nodes, weights }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Nodes mapped onto [a, b] with the matching weight scale.
    pub fn nodes_scaled(&self, a: f64, b: f64) -> impl Iterator<Item = (f64, f64)> + '_ {
        let mid = 0.5 * (a + b);
        let half = 0.5 * (b - a);
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(move |(&x, &w)| (mid + half * x, half * w))
    }

    pub fn integrate<F: FnMut(f64) -> f64>(&self, a: f64, b: f64, mut f: F) -> f64 {
        let mut acc = KahanSum::new();
        for (x, w) in self.nodes_scaled(a, b) {
            acc.add(w * f(x));
        }
        acc.value()
    }

    pub fn integrate_complex<F: FnMut(f64) -> Complex64>(
        &self,
        a: f64,
        b: f64,
        mut f: F,
    ) -> Complex64 {
        let mut re = KahanSum::new();
        let mut im = KahanSum::new();
        for (x, w) in self.nodes_scaled(a, b) {
            let v = f(x);
            re.add(w * v.re);
            im.add(w * v.im);
        }
        Complex64::new(re.value(), im.value())
    }
}

pub static GL8: Lazy<GaussLegendre> = Lazy::new(|| GaussLegendre::new(8));
pub static GL16: Lazy<GaussLegendre> = Lazy::new(|| GaussLegendre::new(16));
pub static GL32: Lazy<GaussLegendre> = Lazy::new(|| GaussLegendre::new(32));

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weights_sum_to_interval_length() {
        for n in [1, 2, 3, 8, 16, 17, 32, 64] {
            let gl = GaussLegendre::new(n);
            let total: f64 = gl.weights.iter().sum();
            assert!((total - 2.0).abs() < 1e-14, "n={n}: weight sum {total}");
        }
    }

    #[test]
    fn exact_on_polynomials_up_to_degree_2n_minus_1() {
        // moment of x^k over [-1,1] is 0 for odd k, 2/(k+1) for even k
        for n in [2usize, 5, 16] {
            let gl = GaussLegendre::new(n);
            for k in 0..2 * n {
                let got = gl.integrate(-1.0, 1.0, |x| x.powi(k as i32));
                let want = if k % 2 == 1 { 0.0 } else { 2.0 / (k as f64 + 1.0) };
                assert!(
                    (got - want).abs() < 1e-13,
                    "n={n} k={k}: got {got}, want {want}"
                );
            }
        }
    }

    #[test]
    fn sine_over_whole_periods() {
        let gl = GaussLegendre::new(32);
        let v = gl.integrate(0.0, std::f64::consts::TAU, f64::sin);
        assert!(v.abs() < 1e-13);
        let v = gl.integrate(0.0, std::f64::consts::PI, f64::sin);
        assert!((v - 2.0).abs() < 1e-13);
    }

    #[test]
    fn complex_exponential() {
        let gl = GaussLegendre::new(16);
        // integral of e^{ix} over [0, pi/2] = 1 + i
        let v = gl.integrate_complex(0.0, std::f64::consts::FRAC_PI_2, |x| {
            Complex64::from_polar(1.0, x)
        });
        assert!((v - Complex64::new(1.0, 1.0)).norm() < 1e-14);
    }

    #[test]
    fn scaled_nodes_stay_inside_interval() {
        let gl = GaussLegendre::new(16);
        for (x, w) in gl.nodes_scaled(3.0, 7.0) {
            assert!(x > 3.0 && x < 7.0);
            assert!(w > 0.0);
        }
    }

    #[test]
    fn statics_have_expected_sizes() {
        assert_eq!(GL8.len(), 8);
        assert_eq!(GL16.len(), 16);
        assert_eq!(GL32.len(), 32);
    }
}
