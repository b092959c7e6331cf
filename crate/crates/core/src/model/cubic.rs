//! Real roots of a real monic cubic `s³ + a·s² + b·s + c`.
//!
//! Trigonometric/Cardano closed form followed by Newton polishing of the
//! real roots. The complex pair, when present, is rebuilt from Vieta's
//! relations after the real root has been polished.

use num_complex::Complex64;
use std::f64::consts::PI;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CubicRoots {
    /// One real root and a complex-conjugate pair (`pair.im >= 0`).
    OneReal { real: f64, pair: Complex64 },
    /// Three real roots in descending order.
    ThreeReal([f64; 3]),
}

#[derive(Debug, Clone, Copy)]
pub struct MonicCubic {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

impl MonicCubic {
    pub fn eval(&self, s: f64) -> f64 {
        ((s + self.a) * s + self.b) * s + self.c
    }

    pub fn derivative(&self, s: f64) -> f64 {
        (3.0 * s + 2.0 * self.a) * s + self.b
    }

    /// Newton iterations from `s`; stops as soon as a step fails to reduce |P|.
    pub fn polish(&self, mut s: f64) -> f64 {
        let mut residual = self.eval(s).abs();
        for _ in 0..8 {
            let d = self.derivative(s);
            if d == 0.0 || residual == 0.0 {
                break;
            }
            let next = s - self.eval(s) / d;
            let next_residual = self.eval(next).abs();
            if !(next_residual < residual) {
                break;
            }
            s = next;
            residual = next_residual;
        }
        s
    }

    pub fn roots(&self) -> CubicRoots {
        let (a, b, c) = (self.a, self.b, self.c);
        let shift = a / 3.0;
        // depressed cubic y³ + p·y + q with s = y − a/3
        let p = b - a * a / 3.0;
        let q = 2.0 * a * a * a / 27.0 - a * b / 3.0 + c;
        let half_q = 0.5 * q;
        let third_p = p / 3.0;
        let disc = half_q * half_q + third_p * third_p * third_p;

        if disc > 0.0 {
            let sq = disc.sqrt();
            let u = (-half_q - half_q.signum() * sq).cbrt();
            let y = if u != 0.0 { u - third_p / u } else { 0.0 };
            let real = self.polish(y - shift);
            CubicRoots::OneReal {
                real,
                pair: self.conjugate_pair(real),
            }
        } else if p == 0.0 {
            let r = self.polish(-shift);
            CubicRoots::ThreeReal([r, r, r])
        } else {
            let r = (-third_p).sqrt();
            let cos_arg = (-half_q / (r * r * r)).clamp(-1.0, 1.0);
            let phi = cos_arg.acos();
            let mut roots = [0.0; 3];
            for (k, root) in roots.iter_mut().enumerate() {
                let y = 2.0 * r * (phi / 3.0 - 2.0 * PI * k as f64 / 3.0).cos();
                *root = self.polish(y - shift);
            }
            roots.sort_by(|x, y| y.total_cmp(x));
            CubicRoots::ThreeReal(roots)
        }
    }

    fn conjugate_pair(&self, real: f64) -> Complex64 {
        let sum = -self.a - real;
        let product = if real != 0.0 { -self.c / real } else { self.b };
        let half = 0.5 * sum;
        let im_sq = product - half * half;
        Complex64::new(half, im_sq.max(0.0).sqrt())
    }
}
