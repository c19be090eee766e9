//! The normal mode copula family.
//!
//! `C(u) = prod_d u_d + theta * prod_d sin(kappa_d pi u_d) / (kappa_d pi)`
//! with amplitude `theta` in [-1, 1] and positive integer mode numbers
//! `kappa_d`. Its density is `1 + theta * prod_d cos(kappa_d pi u_d)`, an
//! oscillation around independence that can encode dependence with zero rank
//! correlation whenever some mode number is even.

use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{CopulaError, Result};
use crate::root::{invert_monotone_cdf, ROOT_MAX_ITER, ROOT_TOL};

/// Amplitude and mode numbers of a normal mode copula.
#[derive(Debug, Clone, PartialEq)]
pub struct NormalModeParams {
    theta: f64,
    kappa: Vec<u32>,
}

/// The three argument reflections of a bivariate copula.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AssociatedTransform {
    /// Reflect the first argument: `u2 - C(1 - u1, u2)`.
    Flip1,
    /// Reflect the second argument: `u1 - C(u1, 1 - u2)`.
    Flip2,
    /// Reflect both (the survival copula): `u1 + u2 - 1 + C(1 - u1, 1 - u2)`.
    Survival,
}

/// Monotonicity classification of the dependence structure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MonotonicityClass {
    Positive,
    Negative,
    Independent,
    Nonmonotonic,
}

/// How a set of association measures was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    ClosedForm,
    Quadrature,
    MonteCarlo,
}

/// The six association measures.
///
/// `sigma` is Schweizer-Wolff's normalized volume, `rho` Spearman's rank
/// correlation, `tau` Kendall's concordance, `beta` Blomqvist's medial
/// coefficient, `gamma` Gini's coefficient and `footrule` Spearman's
/// foot-rule. `beta` always comes from the definition `4 C(1/2, 1/2) - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MeasureSet {
    pub sigma: f64,
    pub rho: f64,
    pub tau: f64,
    pub beta: f64,
    pub gamma: f64,
    pub footrule: f64,
    pub provenance: Provenance,
}

impl NormalModeParams {
    pub fn new(theta: f64, kappa: Vec<u32>) -> Result<Self> {
        if !theta.is_finite() || !(-1.0..=1.0).contains(&theta) {
            return Err(CopulaError::InvalidParameter(format!(
                "amplitude theta = {theta} must lie in [-1, 1]"
            )));
        }
        if kappa.len() < 2 {
            return Err(CopulaError::InvalidParameter(format!(
                "need at least two mode numbers, got {}",
                kappa.len()
            )));
        }
        if kappa.contains(&0) {
            return Err(CopulaError::InvalidParameter(
                "mode numbers must be positive integers".into(),
            ));
        }
        Ok(Self { theta, kappa })
    }

    pub fn bivariate(theta: f64, kappa1: u32, kappa2: u32) -> Result<Self> {
        Self::new(theta, vec![kappa1, kappa2])
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn kappa(&self) -> &[u32] {
        &self.kappa
    }

    pub fn dim(&self) -> usize {
        self.kappa.len()
    }

    fn check_dim(&self, coords: &[f64]) -> Result<()> {
        if coords.len() != self.dim() {
            return Err(CopulaError::DimensionMismatch {
                expected: self.dim(),
                got: coords.len(),
            });
        }
        Ok(())
    }

    fn check_bivariate(&self) -> Result<()> {
        if self.dim() != 2 {
            return Err(CopulaError::DimensionMismatch {
                expected: 2,
                got: self.dim(),
            });
        }
        Ok(())
    }

    /// Copula CDF; exact closed form, valid on the closed unit cube.
    pub fn cdf(&self, coords: &[f64]) -> Result<f64> {
        self.check_dim(coords)?;
        let mut prod_u = 1.0;
        let mut trig = self.theta;
        for (&u, &k) in coords.iter().zip(&self.kappa) {
            let kpi = k as f64 * PI;
            prod_u *= u;
            trig *= (u * kpi).sin() / kpi;
        }
        Ok((prod_u + trig).clamp(0.0, 1.0))
    }

    /// Copula density `1 + theta * prod cos(kappa_d pi u_d)`.
    pub fn density(&self, coords: &[f64]) -> Result<f64> {
        self.check_dim(coords)?;
        Ok(1.0 + self.theta * self.cos_product(coords))
    }

    pub fn log_density(&self, coords: &[f64]) -> Result<f64> {
        self.check_dim(coords)?;
        Ok((self.theta * self.cos_product(coords)).ln_1p())
    }

    fn cos_product(&self, coords: &[f64]) -> f64 {
        coords
            .iter()
            .zip(&self.kappa)
            .map(|(&u, &k)| (u * k as f64 * PI).cos())
            .product()
    }

    /// Conditional CDF of coordinate `target` given the other (bivariate):
    /// `u_t + (theta / (kappa_t pi)) * cos(kappa_o pi u_o) * sin(kappa_t pi u_t)`.
    pub fn conditional_cdf(&self, target: usize, coords: &[f64]) -> Result<f64> {
        self.check_bivariate()?;
        self.check_dim(coords)?;
        if target > 1 {
            return Err(CopulaError::IndexOutOfRange {
                index: target,
                len: 2,
            });
        }
        let other = 1 - target;
        let kt = self.kappa[target] as f64 * PI;
        let ko = self.kappa[other] as f64 * PI;
        let ut = coords[target];
        let uo = coords[other];
        let v = ut + self.theta / kt * (ko * uo).cos() * (kt * ut).sin();
        Ok(v.clamp(0.0, 1.0))
    }

    /// Inverse of `conditional_cdf` in the target coordinate, by Newton steps
    /// with the analytic density as derivative inside a monotone bracket.
    pub fn conditional_quantile(&self, target: usize, u_given: f64, prob: f64) -> Result<f64> {
        self.check_bivariate()?;
        if !(u_given > 0.0 && u_given < 1.0) || !(prob > 0.0 && prob < 1.0) {
            return Err(CopulaError::InvalidParameter(format!(
                "conditional quantile needs interior arguments, got ({u_given}, {prob})"
            )));
        }
        if target > 1 {
            return Err(CopulaError::IndexOutOfRange {
                index: target,
                len: 2,
            });
        }
        let other = 1 - target;
        let kt = self.kappa[target] as f64 * PI;
        let amp = self.theta * (self.kappa[other] as f64 * PI * u_given).cos();
        invert_monotone_cdf(
            |x| x + amp / kt * (kt * x).sin(),
            |x| 1.0 + amp * (kt * x).cos(),
            prob,
            ROOT_TOL,
            ROOT_MAX_ITER,
        )
    }

    /// Inverts the conditional law of the last coordinate given all previous
    /// ones. The first D-1 coordinates of this family are mutually
    /// independent uniforms, so this single inversion is all a sequential
    /// sampler needs.
    pub(crate) fn last_coordinate_quantile(&self, given: &[f64], prob: f64) -> Result<f64> {
        debug_assert_eq!(given.len() + 1, self.dim());
        let last = self.dim() - 1;
        let kt = self.kappa[last] as f64 * PI;
        let amp = self.theta
            * given
                .iter()
                .zip(&self.kappa)
                .map(|(&u, &k)| (u * k as f64 * PI).cos())
                .product::<f64>();
        invert_monotone_cdf(
            |x| x + amp / kt * (kt * x).sin(),
            |x| 1.0 + amp * (kt * x).cos(),
            prob,
            ROOT_TOL,
            ROOT_MAX_ITER,
        )
    }

    /// Parameters of the reflected copula. Reflections stay inside the
    /// family: only the sign of the amplitude can change, depending on the
    /// parity of the mode numbers.
    pub fn associated(&self, which: AssociatedTransform) -> Result<NormalModeParams> {
        self.check_bivariate()?;
        let keep = match which {
            AssociatedTransform::Flip1 => self.kappa[0].is_multiple_of(2),
            AssociatedTransform::Flip2 => self.kappa[1].is_multiple_of(2),
            AssociatedTransform::Survival => (self.kappa[0] + self.kappa[1]).is_multiple_of(2),
        };
        let theta = if keep { self.theta } else { -self.theta };
        NormalModeParams::new(theta, self.kappa.clone())
    }

    /// Closed-form association measures.
    ///
    /// Spearman's rho and Kendall's tau vanish unless both mode numbers are
    /// odd; Gini's gamma and the foot-rule vanish unless the mode numbers are
    /// equal (the diagonal resonance case). Blomqvist's beta is evaluated
    /// from its definition `4 C(1/2, 1/2) - 1`.
    pub fn measures(&self) -> Result<MeasureSet> {
        self.check_bivariate()?;
        let th = self.theta;
        let k1 = self.kappa[0];
        let k2 = self.kappa[1];
        let kk = (k1 * k2) as f64;
        let pi2 = PI * PI;
        let pi4 = pi2 * pi2;
        let both_odd = k1 % 2 == 1 && k2 % 2 == 1;
        let sigma = 48.0 * th.abs() / (kk * pi4);
        let (rho, tau) = if both_odd {
            let kk2 = kk * kk;
            (48.0 * th / (kk2 * pi4), 32.0 * th / (kk2 * pi4))
        } else {
            (0.0, 0.0)
        };
        // sin(kappa pi / 2) is exactly 0, +1 or -1 depending on kappa mod 4.
        let half_sign = |k: u32| -> f64 {
            match k % 4 {
                1 => 1.0,
                3 => -1.0,
                _ => 0.0,
            }
        };
        let beta = 4.0 * th / (kk * pi2) * half_sign(k1) * half_sign(k2);
        let gamma = if k1 == k2 && k1 % 2 == 1 {
            4.0 * th / (kk * pi2)
        } else {
            0.0
        };
        let footrule = if k1 == k2 { 3.0 * th / (kk * pi2) } else { 0.0 };
        Ok(MeasureSet {
            sigma,
            rho,
            tau,
            beta,
            gamma,
            footrule,
            provenance: Provenance::ClosedForm,
        })
    }

    /// Exchange symmetry `C(u1, u2) = C(u2, u1)` holds for the whole family
    /// exactly when the mode numbers agree. (At `theta = 0` any parameter set
    /// is pointwise symmetric; the predicate reports the family-level rule.)
    pub fn is_symmetric(&self) -> bool {
        self.dim() == 2 && self.kappa[0] == self.kappa[1]
    }

    /// Dependence is monotone only in the first-mode case.
    pub fn monotonicity_class(&self) -> MonotonicityClass {
        if self.theta == 0.0 {
            MonotonicityClass::Independent
        } else if self.kappa.iter().all(|&k| k == 1) {
            if self.theta > 0.0 {
                MonotonicityClass::Positive
            } else {
                MonotonicityClass::Negative
            }
        } else {
            MonotonicityClass::Nonmonotonic
        }
    }
}
