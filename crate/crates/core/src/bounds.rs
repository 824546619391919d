//! Closed-form capacity bounds in terms of the hyperbolic diameter.
//!
//! For a continuum `E ⊂ 𝔹²` of hyperbolic diameter `t` the capacity
//! `cap(𝔹², E)` is bracketed below by the geodesic segment of length `t`
//! ([`cap_seg`]) and above by the Jung-radius bound ([`b2`]). The capacity of
//! a hyperbolic disk of diameter `t` is [`b1`].
//!
//! All quantities involving `th(h(n,t)/2)` go through
//! `th(h/2) = v / (1 + √(1+v²))`, `v = √(2n/(n+1)) sh(t/2)`, and
//! `log(1/th(h/2)) = arsh(1/v)`, which stay finite-precision stable for large `t`.

use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{domain, Result};
use crate::special;

fn check_t(t: f64) -> Result<()> {
    if t > 0.0 && t.is_finite() {
        Ok(())
    } else {
        Err(domain(format!(
            "hyperbolic diameter must be positive and finite, got {t}"
        )))
    }
}

fn check_n(n: u32) -> Result<()> {
    if n >= 2 {
        Ok(())
    } else {
        Err(domain(format!("dimension must be at least 2, got {n}")))
    }
}

/// `u = √(2n/(n+1))`.
pub fn jung_factor(n: u32) -> f64 {
    let n = n as f64;
    (2.0 * n / (n + 1.0)).sqrt()
}

// v = u sh(t/2), returned as 1/v so that overflow of sh maps to 0.
fn inv_v(n: u32, t: f64) -> f64 {
    1.0 / (jung_factor(n) * (t / 2.0).sinh())
}

/// Upper bound for the hyperbolic Jung radius of a set of diameter `t`,
/// `h(n, t) = arsh(√(2n/(n+1)) sh(t/2))`.
pub fn jung_h(n: u32, t: f64) -> Result<f64> {
    check_n(n)?;
    check_t(t)?;
    let u = jung_factor(n);
    if t < 80.0 {
        Ok((u * (t / 2.0).sinh()).asinh())
    } else {
        // arsh(y) = ln(2y) + O(y⁻²) with 2y = u eᵗᐟ²(1 − e⁻ᵗ).
        Ok(u.ln() + t / 2.0 + (-(-t).exp()).ln_1p())
    }
}

/// `th(h(n,t)/2)` through the overflow-free identity.
pub fn jung_th_half(n: u32, t: f64) -> Result<f64> {
    check_n(n)?;
    check_t(t)?;
    let x = inv_v(n, t);
    Ok(1.0 / (x + (x * x + 1.0).sqrt()))
}

/// `log(1/th(h(n,t)/2)) = arsh(1/v)`.
fn log_inv_th_half(n: u32, t: f64) -> f64 {
    inv_v(n, t).asinh()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct JungRatio {
    pub low: f64,
    pub high: f64,
    pub ratio: f64,
}

/// The bracket `√(2(n+1)/n) ≤ t / h(n,t) ≤ 2` together with the ratio itself.
pub fn jung_ratio_bounds(n: u32, t: f64) -> Result<JungRatio> {
    let h = jung_h(n, t)?;
    let nf = n as f64;
    let out = JungRatio {
        low: (2.0 * (nf + 1.0) / nf).sqrt(),
        high: 2.0,
        ratio: t / h,
    };
    debug_assert!(out.ratio >= out.low * (1.0 - 1e-12) && out.ratio <= out.high * (1.0 + 1e-12));
    Ok(out)
}

/// `Γ(n/2)` for integer `n ≥ 1`, from `Γ(1) = 1`, `Γ(1/2) = √π` and `Γ(x+1) = xΓ(x)`.
fn gamma_half_integer(n: u32) -> f64 {
    let (mut x, mut g) = if n.is_multiple_of(2) {
        (1.0, 1.0)
    } else {
        (0.5, PI.sqrt())
    };
    let target = n as f64 / 2.0;
    while x < target {
        g *= x;
        x += 1.0;
    }
    g
}

/// Surface area `ω_{n−1}` of the unit sphere `S^{n−1}` in `ℝⁿ`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DimensionConstant {
    pub n: u32,
    pub omega: f64,
}

impl DimensionConstant {
    pub fn new(n: u32) -> Result<Self> {
        check_n(n)?;
        let omega = if n == 2 {
            2.0 * PI
        } else {
            2.0 * PI.powf(n as f64 / 2.0) / gamma_half_integer(n)
        };
        Ok(Self { n, omega })
    }
}

/// `ln(1/th(x))` for `x > 0`, as `ln(1 + 2/(e^{2x} − 1))`.
fn log_coth(x: f64) -> f64 {
    (2.0 / (2.0 * x).exp_m1()).ln_1p()
}

/// Capacity `2π / log(1/th(t/4))` of a hyperbolic disk with hyperbolic
/// diameter `t`. Returns `+∞` once `th(t/4)` is indistinguishable from 1.
pub fn b1(t: f64) -> Result<f64> {
    check_t(t)?;
    let l = log_coth(t / 4.0);
    Ok(if l > 0.0 { 2.0 * PI / l } else { f64::INFINITY })
}

/// The planar Jung upper bound `2π / log((1+√(1+v²))/v)`, `v = (2/√3) sh(t/2)`.
pub fn b2(t: f64) -> Result<f64> {
    cap_upper_n(2, t)
}

/// `ω_{n−1} / (log(1/th(h(n,t)/2)))^{n−1}`, the Jung capacity bound in `𝔹ⁿ`.
pub fn cap_upper_n(n: u32, t: f64) -> Result<f64> {
    check_t(t)?;
    let omega = DimensionConstant::new(n)?.omega;
    let l = log_inv_th_half(n, t);
    if l > 0.0 {
        Ok(omega / l.powi(n as i32 - 1))
    } else {
        Ok(f64::INFINITY)
    }
}

/// Capacity `γ₂(1/th(t/2)) = 2π / μ(th(t/2))` of a hyperbolic geodesic
/// segment of length `t`; the minimum over continua of diameter `t`.
pub fn cap_seg(t: f64) -> Result<f64> {
    check_t(t)?;
    let r = (t / 2.0).tanh();
    let rp = 1.0 / (t / 2.0).cosh();
    Ok(2.0 * PI / special::mu_with_complement(r, rp))
}

/// Right-hand side of the quasiconformal distortion bound for hyperbolic
/// diameters. `vacuous` is set when the value is at least 1.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct QcBound {
    pub value: f64,
    pub vacuous: bool,
}

/// `4 (th(h(2,t)/2))^{1/K}`, an upper bound for `th(ρ_{G₂}(f(E))/2)` when `f`
/// is `K`-quasiconformal and `ρ_{G₁}(E) = t`.
pub fn qc_diameter_bound(k: f64, t: f64) -> Result<QcBound> {
    if !(k >= 1.0) || !k.is_finite() {
        return Err(domain(format!("quasiconformality constant must be >= 1, got {k}")));
    }
    let value = 4.0 * jung_th_half(2, t)?.powf(1.0 / k);
    Ok(QcBound {
        value,
        vacuous: value >= 1.0,
    })
}

/// Jung radius bound `arsh((2/√3) sh(φ(d(E)/d(E,∂G))/2))` in a `φ`-uniform domain.
pub fn jung_phi_uniform<F>(phi: F, diameter: f64, boundary_distance: f64) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    if !(diameter > 0.0 && boundary_distance > 0.0) {
        return Err(domain(format!(
            "diameter and boundary distance must be positive, got {diameter} and {boundary_distance}"
        )));
    }
    let s = phi(diameter / boundary_distance);
    if !(s >= 0.0) {
        return Err(domain(format!("phi returned {s}, expected a nonnegative value")));
    }
    Ok((jung_factor(2) * (s / 2.0).sinh()).asinh())
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DimensionBounds {
    pub n: u32,
    pub jung_radius: f64,
    pub cap_upper: f64,
}

/// All closed-form quantities for one hyperbolic diameter `t`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundsReport {
    pub t: f64,
    pub cap_seg: f64,
    pub b1: f64,
    pub b2: f64,
    pub jung_radius_2d: f64,
    pub dimensions: Vec<DimensionBounds>,
}

impl BoundsReport {
    pub fn new(t: f64, dims: &[u32]) -> Result<Self> {
        let dimensions = dims
            .iter()
            .map(|&n| {
                Ok(DimensionBounds {
                    n,
                    jung_radius: jung_h(n, t)?,
                    cap_upper: cap_upper_n(n, t)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            t,
            cap_seg: cap_seg(t)?,
            b1: b1(t)?,
            b2: b2(t)?,
            jung_radius_2d: jung_h(2, t)?,
            dimensions,
        })
    }
}
