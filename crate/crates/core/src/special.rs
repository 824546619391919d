//! Complete elliptic integrals, the Grötzsch ring modulus and the planar
//! Grötzsch/Teichmüller capacities.

use std::f64::consts::PI;

use crate::error::{domain, Result};

/// Arithmetic–geometric mean of two positive numbers.
pub fn agm(mut a: f64, mut b: f64) -> f64 {
    for _ in 0..64 {
        if (a - b).abs() <= f64::EPSILON * a {
            break;
        }
        let m = 0.5 * (a + b);
        b = (a * b).sqrt();
        a = m;
    }
    0.5 * (a + b)
}

/// `√(1 − r²)` evaluated as `√((1−r)(1+r))`.
#[inline]
pub fn complement(r: f64) -> f64 {
    ((1.0 - r) * (1.0 + r)).sqrt()
}

/// Complete elliptic integral of the first kind `𝒦(r) = ∫₀¹ dx/√((1−x²)(1−r²x²))`
/// as a function of the modulus `r ∈ [0, 1)`, via `𝒦(r) = π / (2 AGM(1, √(1−r²)))`.
pub fn ellip_k(r: f64) -> Result<f64> {
    if !(0.0..1.0).contains(&r) {
        return Err(domain(format!("elliptic modulus must lie in [0, 1), got {r}")));
    }
    Ok(PI / (2.0 * agm(1.0, complement(r))))
}

/// Moduli below this threshold are outside the validated range of [`mu`].
pub const MU_RANGE_MIN: f64 = 1e-8;

/// `μ(r)` together with a flag for moduli below [`MU_RANGE_MIN`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MuEvaluation {
    pub value: f64,
    pub below_range: bool,
}

/// Modulus of the planar Grötzsch ring, `μ(r) = (π/2) 𝒦(√(1−r²)) / 𝒦(r)`.
pub fn mu(r: f64) -> Result<f64> {
    if !(r > 0.0 && r < 1.0) {
        return Err(domain(format!("mu is defined on (0, 1), got {r}")));
    }
    Ok(mu_with_complement(r, complement(r)))
}

/// Like [`mu`], additionally reporting whether `r` is below the validated range.
pub fn mu_eval(r: f64) -> Result<MuEvaluation> {
    Ok(MuEvaluation {
        value: mu(r)?,
        below_range: r < MU_RANGE_MIN,
    })
}

/// `μ(r)` from `r` and an independently accurate `r' = √(1−r²)`.
///
/// Near `r = 1` the reflection `μ(r) μ(r') = π²/4` is used.
pub(crate) fn mu_with_complement(r: f64, rp: f64) -> f64 {
    if r > 0.99 {
        PI * PI / 4.0 / mu_direct(rp, r)
    } else {
        mu_direct(r, rp)
    }
}

// (π/2)𝒦(r')/𝒦(r) = (π/2) AGM(1, r') / AGM(1, r)
fn mu_direct(r: f64, rp: f64) -> f64 {
    PI / 2.0 * agm(1.0, rp) / agm(1.0, r)
}

/// Grötzsch capacity `γ₂(s) = 2π / μ(1/s)` for `s > 1`.
pub fn gamma2(s: f64) -> Result<f64> {
    if !(s > 1.0) || !s.is_finite() {
        return Err(domain(format!("gamma2 is defined on (1, inf), got {s}")));
    }
    Ok(2.0 * PI / mu(1.0 / s)?)
}

/// Teichmüller capacity `τ₂(s) = γ₂(√(s+1)) / 2` for `s > 0`.
pub fn tau2(s: f64) -> Result<f64> {
    if !(s > 0.0) || !s.is_finite() {
        return Err(domain(format!("tau2 is defined on (0, inf), got {s}")));
    }
    // γ₂(√(s+1)) with 1/√(s+1) and its complement √(s/(s+1)) computed directly.
    let r = 1.0 / (s + 1.0).sqrt();
    let rp = (s / (s + 1.0)).sqrt();
    Ok(PI / mu_with_complement(r, rp))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k_examples() {
        assert!((ellip_k(0.0).unwrap() - PI / 2.0).abs() < 1e-16);
        let k = ellip_k(std::f64::consts::FRAC_1_SQRT_2).unwrap();
        assert!((k - 1.854_074_677_301_371_9).abs() < 1e-15);
        assert!(ellip_k(1.0).is_err());
        assert!(ellip_k(-0.1).is_err());
    }

    #[test]
    fn mu_symmetric_point() {
        let m = mu(std::f64::consts::FRAC_1_SQRT_2).unwrap();
        assert!((m - PI / 2.0).abs() < 1e-15);
    }

    #[test]
    fn mu_domain() {
        assert!(mu(0.0).is_err());
        assert!(mu(1.0).is_err());
        assert!(mu(f64::NAN).is_err());
        assert!(mu_eval(1e-9).unwrap().below_range);
        assert!(!mu_eval(0.5).unwrap().below_range);
    }

    #[test]
    fn mu_below_log_bound() {
        assert!(mu(0.1).unwrap() < 40f64.ln());
    }

    #[test]
    fn branches_agree_at_switch() {
        let below = mu_direct(0.99, complement(0.99));
        let above = PI * PI / 4.0 / mu_direct(complement(0.99), 0.99);
        assert!((below - above).abs() < 1e-14);
    }

    #[test]
    fn gamma_and_tau() {
        assert!((gamma2(2f64.sqrt()).unwrap() - 4.0).abs() < 1e-14);
        assert!((tau2(1.0).unwrap() - 2.0).abs() < 1e-14);
        assert!(gamma2(1.0).is_err());
        assert!(tau2(0.0).is_err());
        // reference segment capacities for diameters 0.8937 and 7.0399
        let s = 1.0 / (0.893_718_61_f64 / 2.0).tanh();
        assert!((gamma2(s).unwrap() - 2.8457).abs() < 5e-5);
        let s = 1.0 / (7.039_879_1_f64 / 2.0).tanh();
        assert!((gamma2(s).unwrap() - 10.7285).abs() < 5e-5);
    }
}
