//! Numerical Riemann map `f : G → 𝔹²` of a simply connected Jordan domain and
//! the hyperbolic distance `ρ_G(x, y) = ρ_{𝔹²}(f(x), f(y))`.
//!
//! The map is normalised by `f(α) = 0` and written as
//! `f(z) = (z − α) exp(F(z) − i·Im F(α))` with `F` analytic in `G` and
//! `Re F = −log|ζ − α|` on `∂G`. `F` is sought as the Cauchy integral of a real
//! density `μ`, which turns the boundary condition into the interior
//! Dirichlet double-layer equation `½μ + Kμ = −log|ζ − α|`. Nodes and the
//! kernel are the ones used by the capacity solver.
//!
//! `F` is evaluated by the barycentric form of the discrete Cauchy formula,
//!
//! ```text
//! F(z) ≈ Σ μ_j ζ'_j / (ζ_j − z)  /  Σ ζ'_j / (ζ_j − z),
//! ```
//!
//! in which numerator and denominator share the near-singular quadrature
//! error. Points within a few node spacings of the boundary are evaluated on
//! a finer node set, with the density carried over by trigonometric
//! interpolation.

use std::f64::consts::{PI, TAU};

use faer::prelude::*;
use faer::Mat;
use rayon::prelude::*;
use rustfft::num_complex::Complex64;
use rustfft::FftPlanner;

use crate::boundary::JordanBoundary;
use crate::error::{domain, geometry, Result};
use crate::hyperbolic::{pairwise_max, rho_from_parts};
use crate::mesh::{discretize_with, DiscretizedBoundary, DEFAULT_GRADING_ORDER};
use crate::{Error, Point};

/// Smallest boundary sample count accepted by [`hyp_diameter`].
pub const MIN_DIAMETER_SAMPLES: usize = 16;

/// Refinement factor of the node set used near the boundary.
pub const NEAR_FIELD_FACTOR: usize = 8;

/// Points closer to the boundary than this many local node spacings are
/// evaluated on the refined node set.
pub const NEAR_FIELD_SPACINGS: f64 = 3.0;

/// A point together with its image and the cancellation-free `1 − |f(z)|²`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MappedPoint {
    pub z: Point,
    pub image: Point,
    pub one_minus_abs2: f64,
    /// Set when `z` is within a few spacings of even the refined node set,
    /// where the Cauchy quadrature loses accuracy.
    pub accuracy_loss: bool,
}

/// Nodes, scaled derivatives and density values for the Cauchy quadrature.
#[derive(Debug, Clone)]
struct CauchyRule {
    nodes: Vec<Point>,
    derivs: Vec<Point>,
    density: Vec<f64>,
    weight: f64,
}

impl CauchyRule {
    /// Barycentric sums and the smallest distance to a node measured in local
    /// node spacings.
    fn eval(&self, z: Point) -> (Point, f64) {
        let mut num = Point::new(0.0, 0.0);
        let mut den = Point::new(0.0, 0.0);
        let mut closest = f64::INFINITY;
        for j in 0..self.nodes.len() {
            let d = self.nodes[j] - z;
            if d.re == 0.0 && d.im == 0.0 {
                return (Point::new(self.density[j], 0.0), 0.0);
            }
            let w = self.derivs[j] / d;
            num += w * self.density[j];
            den += w;
            let spacing = self.weight * self.derivs[j].norm();
            if spacing > 0.0 {
                closest = closest.min(d.norm() / spacing);
            }
        }
        (num / den, closest)
    }
}

/// Trigonometric interpolation of periodic samples onto `factor` times as
/// many equispaced points.
fn trig_upsample(v: &[f64], factor: usize) -> Vec<f64> {
    let n = v.len();
    let m = n * factor;
    let mut planner = FftPlanner::<f64>::new();
    let mut coeffs: Vec<Complex64> = v.iter().map(|&x| Complex64::new(x, 0.0)).collect();
    planner.plan_fft_forward(n).process(&mut coeffs);
    let mut wide = vec![Complex64::new(0.0, 0.0); m];
    let half = n / 2;
    wide[..half].copy_from_slice(&coeffs[..half]);
    for k in half + 1..n {
        wide[m - (n - k)] = coeffs[k];
    }
    // split the Nyquist coefficient between ±n/2
    wide[half] = coeffs[half] * 0.5;
    wide[m - half] = coeffs[half] * 0.5;
    planner.plan_fft_inverse(m).process(&mut wide);
    wide.iter().map(|c| c.re / n as f64).collect()
}

/// Numerical conformal map of a Jordan domain onto the unit disk.
#[derive(Debug, Clone)]
pub struct RiemannMap {
    domain: JordanBoundary,
    base_point: Point,
    disc: DiscretizedBoundary,
    coarse: CauchyRule,
    fine: CauchyRule,
    phase: f64,
}

/// Builds the Riemann map of the domain bounded by `b` with `f(alpha) = 0`
/// from `n` boundary nodes.
pub fn riemann_map(b: &JordanBoundary, alpha: Point, n: usize) -> Result<RiemannMap> {
    RiemannMap::new(b, alpha, n, DEFAULT_GRADING_ORDER)
}

impl RiemannMap {
    pub fn new(b: &JordanBoundary, alpha: Point, n: usize, grading_order: u32) -> Result<Self> {
        let domain = b.oriented(true);
        if !domain.encloses(alpha) || domain.distance_to(alpha) == 0.0 {
            return Err(geometry(format!("base point {alpha} is not inside the domain")));
        }
        let disc = discretize_with(&domain, n, grading_order)?;
        let h = disc.weight();
        let a = Mat::<f64>::from_fn(n, n, |i, j| {
            let k = disc.kernel(i, j);
            if i == j {
                0.5 + h * k
            } else {
                h * k
            }
        });
        let rhs = Mat::<f64>::from_fn(n, 1, |i, _| -(disc.nodes[i] - alpha).norm().ln());
        let sol = a.partial_piv_lu().solve(&rhs);
        let mut density: Vec<f64> = (0..n).map(|i| sol[(i, 0)]).collect();
        if density.iter().any(|v| !v.is_finite()) {
            return Err(Error::Solver("non-finite density in the Riemann map solve".into()));
        }
        // The collocation equation at a corner node carries the wrong jump
        // term; that node has zero quadrature weight, so only its own value
        // is off. Replace it by the neighbours' mean (the density is
        // continuous and graded neighbours sit very close to the corner).
        for i in 0..n {
            if disc.derivs[i].norm() == 0.0 {
                density[i] = 0.5 * (density[(i + 1) % n] + density[(i + n - 1) % n]);
            }
        }
        let fine_disc = discretize_with(&domain, NEAR_FIELD_FACTOR * n, grading_order)?;
        let coarse = CauchyRule {
            nodes: disc.nodes.clone(),
            derivs: disc.derivs.clone(),
            density: density.clone(),
            weight: h,
        };
        let fine = CauchyRule {
            weight: fine_disc.weight(),
            nodes: fine_disc.nodes,
            derivs: fine_disc.derivs,
            density: trig_upsample(&density, NEAR_FIELD_FACTOR),
        };
        let mut map = Self {
            domain,
            base_point: alpha,
            disc,
            coarse,
            fine,
            phase: 0.0,
        };
        map.phase = map.cauchy(alpha).0.im;
        // a well-resolved map sends boundary nodes onto the unit circle
        let defect = map.boundary_modulus_defect();
        if !(defect < MAX_MODULUS_DEFECT) {
            return Err(Error::Convergence(format!(
                "boundary images miss the unit circle by {defect:.3e}; increase n"
            )));
        }
        Ok(map)
    }

    pub fn domain(&self) -> &JordanBoundary {
        &self.domain
    }

    pub fn base_point(&self) -> Point {
        self.base_point
    }

    pub fn n_nodes(&self) -> usize {
        self.disc.n
    }

    /// `F(z)` and whether `z` is too close to the boundary even for the
    /// refined nodes.
    fn cauchy(&self, z: Point) -> (Point, bool) {
        let (f, closest) = self.coarse.eval(z);
        if closest >= NEAR_FIELD_SPACINGS {
            return (f, false);
        }
        let (f, closest) = self.fine.eval(z);
        (f, closest < NEAR_FIELD_SPACINGS)
    }

    /// `f(z)` with `1 − |f(z)|²` computed from `log|f(z)|`.
    pub fn map_point(&self, z: Point) -> Result<MappedPoint> {
        if !self.domain.encloses(z) {
            return Err(domain(format!("{z} is not inside the domain")));
        }
        let dz = z - self.base_point;
        if dz.re == 0.0 && dz.im == 0.0 {
            return Ok(MappedPoint {
                z,
                image: Point::new(0.0, 0.0),
                one_minus_abs2: 1.0,
                accuracy_loss: false,
            });
        }
        let (f, accuracy_loss) = self.cauchy(z);
        let log_abs = dz.norm().ln() + f.re;
        if !(log_abs < 0.0) {
            return Err(domain(format!(
                "{z} is too close to the boundary for a map with {} nodes",
                self.disc.n
            )));
        }
        let arg = dz.arg() + f.im - self.phase;
        Ok(MappedPoint {
            z,
            image: Point::from_polar(log_abs.exp(), arg),
            one_minus_abs2: -(2.0 * log_abs).exp_m1(),
            accuracy_loss,
        })
    }

    /// `f(z)`.
    pub fn eval(&self, z: Point) -> Result<Point> {
        self.map_point(z).map(|m| m.image)
    }

    /// Boundary values of `F` at the nodes from the singularity-subtracted
    /// Cauchy integral, `F₊(ζ_i) = μ_i + (1/2πi)∮ (μ − μ_i) dζ / (ζ − ζ_i)`.
    fn boundary_values(&self) -> Vec<Point> {
        let rule = &self.coarse;
        let n = rule.nodes.len();
        let h = rule.weight;
        let mu = &rule.density;
        let i_unit = Point::new(0.0, 1.0);
        (0..n)
            .into_par_iter()
            .map(|i| {
                let zi = rule.nodes[i];
                let mut acc = Point::new(0.0, 0.0);
                for j in 0..n {
                    if j != i {
                        acc += (mu[j] - mu[i]) * rule.derivs[j] / (rule.nodes[j] - zi);
                    }
                }
                if rule.derivs[i].norm() > 0.0 {
                    // diagonal limit of the subtracted integrand is μ'(s_i)
                    acc += (mu[(i + 1) % n] - mu[(i + n - 1) % n]) / (2.0 * h);
                }
                mu[i] + h * acc / (TAU * i_unit)
            })
            .collect()
    }

    /// Nodes within [`CORNER_NEIGHBOURHOOD`] indices of a corner node. The
    /// collocation equations there see the corner on the scale of a single
    /// node spacing, so their boundary values carry an `O(1)` local error
    /// that does not affect the interior (their quadrature weights vanish
    /// with the grading).
    fn near_corner_mask(&self) -> Vec<bool> {
        let n = self.disc.n;
        let mut mask = vec![false; n];
        for i in 0..n {
            if self.disc.derivs[i].norm() == 0.0 {
                for d in 0..=CORNER_NEIGHBOURHOOD {
                    mask[(i + d) % n] = true;
                    mask[(i + n - d) % n] = true;
                }
            }
        }
        mask
    }

    /// Nodes closer to a corner than [`CORNER_EXCLUSION_SPACINGS`] mean node
    /// spacings. Boundary values there converge slowly and are left out of
    /// the modulus defect.
    fn corner_zone_mask(&self) -> Vec<bool> {
        self.corner_radius_mask(CORNER_EXCLUSION_SPACINGS)
    }

    fn corner_radius_mask(&self, spacings: f64) -> Vec<bool> {
        let corners: Vec<Point> = self.domain.corners().iter().map(|&s| self.domain.point(s)).collect();
        let perimeter: f64 = self.disc.derivs.iter().map(|d| d.norm()).sum::<f64>() * self.disc.weight();
        let radius = spacings * perimeter / self.disc.n as f64;
        self.disc
            .nodes
            .iter()
            .map(|&z| corners.iter().any(|&c| (z - c).norm() < radius))
            .collect()
    }

    fn boundary_modulus_defect(&self) -> f64 {
        modulus_defect(
            &self.boundary_values(),
            &self.disc.nodes,
            self.base_point,
            &self.corner_zone_mask(),
        )
    }

    /// Boundary correspondence: node parameters, boundary nodes and the
    /// arguments of their images on the unit circle, unwrapped so that they
    /// increase along the boundary. Arguments at nodes next to a corner, or
    /// within [`CORRESPONDENCE_ZONE_SPACINGS`] mean spacings of one, are
    /// interpolated linearly between the nearest well-resolved nodes.
    pub fn boundary_correspondence(&self) -> BoundaryCorrespondence {
        let n = self.disc.n;
        let values = self.boundary_values();
        let zone = self.corner_radius_mask(CORRESPONDENCE_ZONE_SPACINGS);
        let mask: Vec<bool> = self.near_corner_mask().iter().zip(&zone).map(|(a, b)| a | b).collect();
        let raw: Vec<f64> = values
            .iter()
            .zip(&self.disc.nodes)
            .map(|(f, &z)| (z - self.base_point).arg() + f.im - self.phase)
            .collect();
        // walk the nodes from an unmasked one so masked runs never wrap
        let start = mask.iter().position(|&m| !m).unwrap_or(0);
        let order: Vec<usize> = (0..n).map(|k| (start + k) % n).collect();
        let mut walk = unwrap(&order.iter().map(|&i| raw[i]).collect::<Vec<_>>());
        let mut k = 0;
        while k < n {
            if !mask[order[k]] {
                k += 1;
                continue;
            }
            let first = k;
            while k < n && mask[order[k]] {
                k += 1;
            }
            let left = walk[first - 1];
            let right = if k < n { walk[k] } else { walk[0] + TAU };
            let span = (k - first + 1) as f64;
            for (j, w) in walk[first..k].iter_mut().enumerate() {
                *w = left + (right - left) * (j + 1) as f64 / span;
            }
        }
        let mut natural = vec![0.0; n];
        for (k, &i) in order.iter().enumerate() {
            natural[i] = walk[k];
        }
        BoundaryCorrespondence {
            params: self.disc.params.clone(),
            nodes: self.disc.nodes.clone(),
            args: unwrap(&natural),
            modulus_defect: modulus_defect(&values, &self.disc.nodes, self.base_point, &self.corner_zone_mask()),
        }
    }
}

/// Number of nodes on each side of a corner whose boundary arguments are
/// replaced by interpolation.
pub const CORNER_NEIGHBOURHOOD: usize = 2;

/// Radius, in mean node spacings, of the corner zones whose boundary
/// arguments are interpolated.
pub const CORRESPONDENCE_ZONE_SPACINGS: f64 = 1.0;

/// Radius, in mean node spacings, of the corner zones excluded from the
/// modulus defect.
pub const CORNER_EXCLUSION_SPACINGS: f64 = 4.0;

/// Largest modulus defect accepted when building a map.
pub const MAX_MODULUS_DEFECT: f64 = 1e-3;

fn unwrap(raw: &[f64]) -> Vec<f64> {
    let mut out: Vec<f64> = Vec::with_capacity(raw.len());
    for &r in raw {
        let a = match out.last() {
            None => r,
            Some(&p) => p + (r - p + PI).rem_euclid(TAU) - PI,
        };
        out.push(a);
    }
    out
}

fn modulus_defect(values: &[Point], nodes: &[Point], alpha: Point, skip: &[bool]) -> f64 {
    values
        .iter()
        .zip(nodes)
        .zip(skip)
        .filter(|(_, &s)| !s)
        .map(|((f, &z), _)| ((z - alpha).norm().ln() + f.re).abs())
        .fold(0.0, f64::max)
}

/// Node-wise boundary correspondence of a [`RiemannMap`].
#[derive(Debug, Clone)]
pub struct BoundaryCorrespondence {
    pub params: Vec<f64>,
    pub nodes: Vec<Point>,
    /// Unwrapped arguments of `f(ζ_k)`.
    pub args: Vec<f64>,
    /// `max |log|f(ζ_k)||` over nodes outside the corner zones, the distance
    /// of the images from the unit circle.
    pub modulus_defect: f64,
}

impl BoundaryCorrespondence {
    pub fn images(&self) -> Vec<Point> {
        self.args.iter().map(|&a| Point::from_polar(1.0, a)).collect()
    }

    /// Whether the arguments strictly increase and wind once.
    pub fn is_monotone(&self) -> bool {
        self.is_monotone_within(0.0)
    }

    /// Like [`is_monotone`](Self::is_monotone) but tolerating decreases of at
    /// most `tol`. Near corners the true increments are far below the local
    /// discretisation error, so corner domains need a small tolerance.
    pub fn is_monotone_within(&self, tol: f64) -> bool {
        let increasing = self.args.windows(2).all(|w| w[1] - w[0] > -tol);
        let span = self.args.last().unwrap_or(&0.0) - self.args.first().unwrap_or(&0.0);
        increasing && span < TAU + tol
    }
}

/// Hyperbolic distance `ρ_G(x, y)` in the domain of `m`.
pub fn rho_g(m: &RiemannMap, x: Point, y: Point) -> Result<f64> {
    let fx = m.map_point(x)?;
    let fy = m.map_point(y)?;
    if x == y {
        return Ok(0.0);
    }
    Ok(rho_from_parts(fx.image, fx.one_minus_abs2, fy.image, fy.one_minus_abs2))
}

/// Hyperbolic diameter `ρ_G(E) = max ρ_G(x, y)` over `k` equally spaced
/// samples of `∂E` (exhaustive pairwise scan).
pub fn hyp_diameter(m: &RiemannMap, e: &JordanBoundary, k: usize) -> Result<f64> {
    if k < MIN_DIAMETER_SAMPLES {
        return Err(domain(format!("need at least {MIN_DIAMETER_SAMPLES} samples, got {k}")));
    }
    let pts = e.sample(k);
    hyp_diameter_of_points(m, &pts)
}

/// Hyperbolic diameter of a finite point set of the domain.
pub fn hyp_diameter_of_points(m: &RiemannMap, pts: &[Point]) -> Result<f64> {
    for &p in pts {
        if !m.domain.encloses(p) || m.domain.distance_to(p) == 0.0 {
            return Err(geometry(format!("{p} is not strictly inside the domain")));
        }
    }
    let mapped: Vec<MappedPoint> = pts.par_iter().map(|&p| m.map_point(p)).collect::<Result<_>>()?;
    let images: Vec<Point> = mapped.iter().map(|q| q.image).collect();
    let factors: Vec<f64> = mapped.iter().map(|q| q.one_minus_abs2).collect();
    Ok(pairwise_max(&images, &factors))
}

/// One cell of a hyperbolic distance field.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FieldSample {
    pub x: f64,
    pub y: f64,
    /// `ρ_G(α, z)`, `None` outside the domain or where the map cannot
    /// resolve the point.
    pub rho: Option<f64>,
}

/// `ρ_G(α, z)` on the `nx × ny` grid spanning the rectangle `[x0, x1] × [y0, y1]`
/// (row-major, `y` outer). Grid points outside the domain get `None`.
pub fn hyp_field(
    m: &RiemannMap,
    x_range: (f64, f64),
    y_range: (f64, f64),
    nx: usize,
    ny: usize,
) -> Result<Vec<FieldSample>> {
    if nx < 2 || ny < 2 {
        return Err(domain("field grid needs at least 2 points per axis"));
    }
    let coord = |(a, b): (f64, f64), k: usize, n: usize| a + (b - a) * k as f64 / (n - 1) as f64;
    let alpha = m.base_point;
    Ok((0..nx * ny)
        .into_par_iter()
        .map(|idx| {
            let (iy, ix) = (idx / nx, idx % nx);
            let z = Point::new(coord(x_range, ix, nx), coord(y_range, iy, ny));
            let rho = if m.domain.encloses(z) && m.domain.distance_to(z) > 0.0 {
                rho_g(m, alpha, z).ok()
            } else {
                None
            };
            FieldSample { x: z.re, y: z.im, rho }
        })
        .collect())
}
