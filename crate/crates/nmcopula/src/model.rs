//! Family-agnostic copula interface: a validated model value, CDF/density
//! evaluation with a dedicated boundary path, conditional inversion sampling,
//! and grid-based axiom and concordance checkers.

use serde::Serialize;

use crate::classical::{
    classical_cdf, classical_conditional_cdf, classical_density, classical_log_density,
    validate_theta, ClassicalFamily,
};
use crate::error::{CopulaError, Result};
use crate::normal_mode::NormalModeParams;
use crate::point::{Rectangle, UnitPoint};
use crate::rng::SeededRng;
use crate::root::{invert_monotone_cdf, ROOT_MAX_ITER, ROOT_TOL};

/// Copula family identifier.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    NormalMode,
    Product,
    FrechetLower,
    FrechetUpper,
    Amh,
    Clayton,
    Frank,
    Fgm,
    Gaussian,
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::NormalMode => "normal-mode",
            Family::Product => "product",
            Family::FrechetLower => "frechet-lower",
            Family::FrechetUpper => "frechet-upper",
            Family::Amh => "amh",
            Family::Clayton => "clayton",
            Family::Frank => "frank",
            Family::Fgm => "fgm",
            Family::Gaussian => "gaussian",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
enum ModelKind {
    NormalMode(NormalModeParams),
    Product { dim: usize },
    FrechetLower,
    FrechetUpper,
    Classical { family: ClassicalFamily, theta: f64 },
}

/// A validated copula model: family plus in-domain parameters.
#[derive(Debug, Clone, PartialEq)]
pub struct CopulaModel {
    kind: ModelKind,
}

impl CopulaModel {
    pub fn normal_mode(params: NormalModeParams) -> Self {
        Self {
            kind: ModelKind::NormalMode(params),
        }
    }

    pub fn normal_mode_bivariate(theta: f64, kappa1: u32, kappa2: u32) -> Result<Self> {
        Ok(Self::normal_mode(NormalModeParams::bivariate(
            theta, kappa1, kappa2,
        )?))
    }

    pub fn product(dim: usize) -> Result<Self> {
        if dim < 2 {
            return Err(CopulaError::InvalidParameter(format!(
                "the product copula needs dimension >= 2, got {dim}"
            )));
        }
        Ok(Self {
            kind: ModelKind::Product { dim },
        })
    }

    pub fn frechet_lower() -> Self {
        Self {
            kind: ModelKind::FrechetLower,
        }
    }

    pub fn frechet_upper() -> Self {
        Self {
            kind: ModelKind::FrechetUpper,
        }
    }

    pub fn amh(theta: f64) -> Result<Self> {
        Self::classical(ClassicalFamily::Amh, theta)
    }

    pub fn clayton(theta: f64) -> Result<Self> {
        Self::classical(ClassicalFamily::Clayton, theta)
    }

    /// Frank at theta = 0 is constructed as the product copula: the generator
    /// is undefined there but its limit is independence.
    pub fn frank(theta: f64) -> Result<Self> {
        if theta == 0.0 {
            return Self::product(2);
        }
        Self::classical(ClassicalFamily::Frank, theta)
    }

    pub fn fgm(theta: f64) -> Result<Self> {
        Self::classical(ClassicalFamily::Fgm, theta)
    }

    pub fn gaussian(theta: f64) -> Result<Self> {
        Self::classical(ClassicalFamily::Gaussian, theta)
    }

    pub fn classical(family: ClassicalFamily, theta: f64) -> Result<Self> {
        validate_theta(family, theta)?;
        Ok(Self {
            kind: ModelKind::Classical { family, theta },
        })
    }

    pub fn family(&self) -> Family {
        match &self.kind {
            ModelKind::NormalMode(_) => Family::NormalMode,
            ModelKind::Product { .. } => Family::Product,
            ModelKind::FrechetLower => Family::FrechetLower,
            ModelKind::FrechetUpper => Family::FrechetUpper,
            ModelKind::Classical { family, .. } => match family {
                ClassicalFamily::Amh => Family::Amh,
                ClassicalFamily::Clayton => Family::Clayton,
                ClassicalFamily::Frank => Family::Frank,
                ClassicalFamily::Fgm => Family::Fgm,
                ClassicalFamily::Gaussian => Family::Gaussian,
            },
        }
    }

    pub fn dim(&self) -> usize {
        match &self.kind {
            ModelKind::NormalMode(p) => p.dim(),
            ModelKind::Product { dim } => *dim,
            _ => 2,
        }
    }

    pub fn theta(&self) -> Option<f64> {
        match &self.kind {
            ModelKind::NormalMode(p) => Some(p.theta()),
            ModelKind::Classical { theta, .. } => Some(*theta),
            _ => None,
        }
    }

    pub fn normal_mode_params(&self) -> Option<&NormalModeParams> {
        match &self.kind {
            ModelKind::NormalMode(p) => Some(p),
            _ => None,
        }
    }

    pub fn has_density(&self) -> bool {
        match &self.kind {
            ModelKind::FrechetLower | ModelKind::FrechetUpper => false,
            ModelKind::Classical {
                family: ClassicalFamily::Gaussian,
                theta,
            } => theta.abs() < 1.0,
            _ => true,
        }
    }

    fn check_dim(&self, got: usize) -> Result<()> {
        if got != self.dim() {
            return Err(CopulaError::DimensionMismatch {
                expected: self.dim(),
                got,
            });
        }
        Ok(())
    }

    /// CDF at an interior point.
    pub fn cdf(&self, p: &UnitPoint) -> Result<f64> {
        self.cdf_interior(p.coords())
    }

    /// CDF at interior coordinates given as a slice.
    pub fn cdf_interior(&self, coords: &[f64]) -> Result<f64> {
        self.check_dim(coords.len())?;
        let c = match &self.kind {
            ModelKind::NormalMode(p) => p.cdf(coords)?,
            ModelKind::Product { .. } => coords.iter().product(),
            ModelKind::FrechetLower => (coords[0] + coords[1] - 1.0).max(0.0),
            ModelKind::FrechetUpper => coords[0].min(coords[1]),
            ModelKind::Classical { family, theta } => {
                classical_cdf(*family, *theta, coords[0], coords[1])?
            }
        };
        Ok(c.clamp(0.0, 1.0))
    }

    /// Boundary-extended CDF: accepts coordinates in the closed cube [0, 1].
    ///
    /// Exact zeros and ones are resolved by the boundary conditions before
    /// any family formula runs, so no density-based code ever divides by
    /// zero at the boundary.
    pub fn cdf_closed(&self, coords: &[f64]) -> Result<f64> {
        self.check_dim(coords.len())?;
        for (i, &u) in coords.iter().enumerate() {
            if !(0.0..=1.0).contains(&u) {
                return Err(CopulaError::InvalidParameter(format!(
                    "coordinate {i} = {u} outside [0, 1]"
                )));
            }
        }
        if coords.contains(&0.0) {
            return Ok(0.0);
        }
        let ones = coords.iter().filter(|&&u| u == 1.0).count();
        if ones > 0 {
            let rest: Vec<f64> = coords.iter().copied().filter(|&u| u < 1.0).collect();
            return match rest.len() {
                0 => Ok(1.0),
                1 => Ok(rest[0]),
                // every family here has independent lower-dimensional
                // margins, so dropping coordinates at 1 leaves a product
                _ => Ok(rest.iter().product()),
            };
        }
        self.cdf_interior(coords)
    }

    pub fn density(&self, p: &UnitPoint) -> Result<f64> {
        self.density_interior(p.coords())
    }

    pub fn density_interior(&self, coords: &[f64]) -> Result<f64> {
        self.check_dim(coords.len())?;
        match &self.kind {
            ModelKind::NormalMode(p) => p.density(coords),
            ModelKind::Product { .. } => Ok(1.0),
            ModelKind::FrechetLower | ModelKind::FrechetUpper => Err(CopulaError::NoDensity),
            ModelKind::Classical { family, theta } => {
                if !self.has_density() {
                    return Err(CopulaError::NoDensity);
                }
                classical_density(*family, *theta, coords[0], coords[1])
            }
        }
    }

    pub fn log_density_interior(&self, coords: &[f64]) -> Result<f64> {
        self.check_dim(coords.len())?;
        match &self.kind {
            ModelKind::NormalMode(p) => p.log_density(coords),
            ModelKind::Product { .. } => Ok(0.0),
            ModelKind::FrechetLower | ModelKind::FrechetUpper => Err(CopulaError::NoDensity),
            ModelKind::Classical { family, theta } => {
                if !self.has_density() {
                    return Err(CopulaError::NoDensity);
                }
                classical_log_density(*family, *theta, coords[0], coords[1])
            }
        }
    }

    /// Conditional CDF of coordinate `target` given the other (bivariate):
    /// the partial derivative of the CDF in the conditioning coordinate.
    pub fn conditional_cdf(&self, target: usize, p: &UnitPoint) -> Result<f64> {
        self.conditional_cdf_interior(target, p.coords())
    }

    pub fn conditional_cdf_interior(&self, target: usize, coords: &[f64]) -> Result<f64> {
        if self.dim() != 2 {
            return Err(CopulaError::DimensionMismatch {
                expected: 2,
                got: self.dim(),
            });
        }
        self.check_dim(coords.len())?;
        if target > 1 {
            return Err(CopulaError::IndexOutOfRange {
                index: target,
                len: 2,
            });
        }
        match &self.kind {
            ModelKind::NormalMode(p) => p.conditional_cdf(target, coords),
            ModelKind::Product { .. } => Ok(coords[target]),
            ModelKind::FrechetLower | ModelKind::FrechetUpper => Err(CopulaError::NoDensity),
            ModelKind::Classical { family, theta } => {
                classical_conditional_cdf(*family, *theta, target, coords[0], coords[1])
            }
        }
    }

    /// Inverse of the conditional CDF in the target coordinate.
    ///
    /// Newton steps use the copula density (the derivative of the conditional
    /// CDF) inside a monotone bracket; the residual tolerance is 1e-12 with a
    /// 200-iteration cap.
    pub fn conditional_quantile(&self, target: usize, u_given: f64, prob: f64) -> Result<f64> {
        if !(u_given > 0.0 && u_given < 1.0) || !(prob > 0.0 && prob < 1.0) {
            return Err(CopulaError::InvalidParameter(format!(
                "conditional quantile needs interior arguments, got ({u_given}, {prob})"
            )));
        }
        match &self.kind {
            ModelKind::NormalMode(p) => p.conditional_quantile(target, u_given, prob),
            ModelKind::Product { .. } => Ok(prob),
            ModelKind::FrechetLower | ModelKind::FrechetUpper => Err(CopulaError::NoDensity),
            ModelKind::Classical { family, theta } => {
                if !self.has_density() {
                    return Err(CopulaError::NoDensity);
                }
                if target > 1 {
                    return Err(CopulaError::IndexOutOfRange {
                        index: target,
                        len: 2,
                    });
                }
                let make_point = |x: f64| {
                    if target == 0 {
                        (x, u_given)
                    } else {
                        (u_given, x)
                    }
                };
                let (family, theta) = (*family, *theta);
                invert_monotone_cdf(
                    |x| {
                        let (u1, u2) = make_point(x);
                        classical_conditional_cdf(family, theta, target, u1, u2)
                            .unwrap_or(f64::NAN)
                    },
                    |x| {
                        let (u1, u2) = make_point(x);
                        classical_density(family, theta, u1, u2).unwrap_or(f64::NAN)
                    },
                    prob,
                    ROOT_TOL,
                    ROOT_MAX_ITER,
                )
            }
        }
    }

    /// Draws `n` points by conditional inversion; deterministic per seed.
    pub fn sample(&self, n: usize, seed: u64) -> Result<Vec<UnitPoint>> {
        if n == 0 {
            return Err(CopulaError::InvalidParameter(
                "sample size must be at least 1".into(),
            ));
        }
        if !self.has_density() {
            return Err(CopulaError::NoDensity);
        }
        let mut rng = SeededRng::new(seed);
        let dim = self.dim();
        let mut out = Vec::with_capacity(n);
        for _ in 0..n {
            let coords = match &self.kind {
                ModelKind::Product { .. } => (0..dim).map(|_| rng.next_open01()).collect(),
                ModelKind::NormalMode(p) => {
                    // all proper margins of this family are independent
                    // uniforms; only the last coordinate needs an inversion
                    let mut coords: Vec<f64> = (0..dim - 1).map(|_| rng.next_open01()).collect();
                    let prob = rng.next_open01();
                    let last = p.last_coordinate_quantile(&coords, prob)?;
                    coords.push(last);
                    coords
                }
                _ => {
                    let u1 = rng.next_open01();
                    let prob = rng.next_open01();
                    let u2 = self.conditional_quantile(1, u1, prob)?;
                    vec![u1, u2]
                }
            };
            out.push(UnitPoint::new(coords)?);
        }
        Ok(out)
    }

    /// Evaluates the boundary conditions on an edge grid and the copula
    /// volume on random rectangles.
    pub fn check_axioms(&self, n_rectangles: usize, seed: u64) -> AxiomReport {
        let dim = self.dim();
        let mut max_boundary_error = 0.0f64;
        let mut boundary_points = 0usize;

        // ~1000 boundary probes split between a zero coordinate (CDF must
        // vanish) and all-but-one coordinates at 1 (CDF must equal the rest).
        let per_condition = (1000 / (2 * dim)).max(50);
        let mut rng = SeededRng::new(seed ^ 0x9a3f_71d2_0c5b_e4a7);
        for d in 0..dim {
            for i in 1..=per_condition {
                let t = i as f64 / (per_condition as f64 + 1.0);

                let mut zero_pt: Vec<f64> = (0..dim).map(|_| rng.next_open01()).collect();
                zero_pt[d] = 0.0;
                let at_zero = self.cdf_closed(&zero_pt).expect("dimension is correct");
                max_boundary_error = max_boundary_error.max(at_zero.abs());

                let mut ones_pt = vec![1.0; dim];
                ones_pt[d] = t;
                let at_ones = self.cdf_closed(&ones_pt).expect("dimension is correct");
                max_boundary_error = max_boundary_error.max((at_ones - t).abs());

                boundary_points += 2;
            }
        }

        // Random rectangles: the copula volume (inclusion-exclusion over the
        // 2^D corners) must be nonnegative up to numerical slack.
        let mut rng = SeededRng::new(seed);
        let mut min_volume = f64::INFINITY;
        let mut lower = vec![0.0; dim];
        let mut upper = vec![0.0; dim];
        let mut corner = vec![0.0; dim];
        for _ in 0..n_rectangles {
            for d in 0..dim {
                let a = rng.next_open01();
                let b = a + (1.0 - a) * rng.next_open01();
                lower[d] = a;
                upper[d] = b.min(1.0 - 1e-12);
            }
            let mut volume = 0.0;
            for mask in 0..(1u32 << dim) {
                let mut high_corners = 0;
                for (d, c) in corner.iter_mut().enumerate() {
                    if mask & (1 << d) != 0 {
                        *c = upper[d];
                        high_corners += 1;
                    } else {
                        *c = lower[d];
                    }
                }
                let sign = if (dim - high_corners).is_multiple_of(2) { 1.0 } else { -1.0 };
                volume += sign * self.cdf_interior(&corner).expect("interior corner");
            }
            min_volume = min_volume.min(volume);
        }

        AxiomReport {
            max_boundary_error,
            min_volume,
            boundary_points,
            rectangles: n_rectangles,
        }
    }
}

/// Result of the boundary and rectangle-volume checks.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct AxiomReport {
    pub max_boundary_error: f64,
    pub min_volume: f64,
    pub boundary_points: usize,
    pub rectangles: usize,
}

pub const AXIOM_BOUNDARY_TOL: f64 = 1e-12;
pub const AXIOM_VOLUME_SLACK: f64 = -1e-12;

impl AxiomReport {
    pub fn passes(&self) -> bool {
        self.max_boundary_error <= AXIOM_BOUNDARY_TOL && self.min_volume >= AXIOM_VOLUME_SLACK
    }
}

/// Pointwise CDF ordering of two bivariate copulas on an interior lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ConcordanceVerdict {
    ABelowB,
    BBelowA,
    Equal,
    Incomparable,
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct ConcordanceReport {
    pub verdict: ConcordanceVerdict,
    /// Largest deviation against the declared ordering (0 for a clean order;
    /// for `Incomparable` the smaller of the two one-sided excesses).
    pub max_violation: f64,
    pub min_diff: f64,
    pub max_diff: f64,
}

pub const CONCORDANCE_TOL: f64 = 1e-12;

/// Compares CDFs of `a` and `b` on a `grid_n` x `grid_n` interior lattice
/// `i / (grid_n + 1)`.
pub fn concordance_compare(
    a: &CopulaModel,
    b: &CopulaModel,
    grid_n: usize,
) -> Result<ConcordanceReport> {
    if a.dim() != 2 || b.dim() != 2 {
        return Err(CopulaError::DimensionMismatch {
            expected: 2,
            got: a.dim().max(b.dim()),
        });
    }
    let mut min_diff = f64::INFINITY;
    let mut max_diff = f64::NEG_INFINITY;
    let denom = grid_n as f64 + 1.0;
    let mut coords = [0.0f64; 2];
    for i in 1..=grid_n {
        coords[0] = i as f64 / denom;
        for j in 1..=grid_n {
            coords[1] = j as f64 / denom;
            let d = a.cdf_interior(&coords)? - b.cdf_interior(&coords)?;
            min_diff = min_diff.min(d);
            max_diff = max_diff.max(d);
        }
    }
    let tol = CONCORDANCE_TOL;
    let verdict = if max_diff.abs() <= tol && min_diff.abs() <= tol {
        ConcordanceVerdict::Equal
    } else if max_diff <= tol {
        ConcordanceVerdict::ABelowB
    } else if min_diff >= -tol {
        ConcordanceVerdict::BBelowA
    } else {
        ConcordanceVerdict::Incomparable
    };
    let max_violation = match verdict {
        ConcordanceVerdict::Equal => max_diff.abs().max(min_diff.abs()),
        ConcordanceVerdict::ABelowB => max_diff.max(0.0),
        ConcordanceVerdict::BBelowA => (-min_diff).max(0.0),
        ConcordanceVerdict::Incomparable => max_diff.min(-min_diff),
    };
    Ok(ConcordanceReport {
        verdict,
        max_violation,
        min_diff,
        max_diff,
    })
}

/// Copula volume of a rectangle (inclusion-exclusion over its corners).
pub fn rectangle_volume(model: &CopulaModel, rect: &Rectangle) -> Result<f64> {
    let dim = rect.dim();
    if dim != model.dim() {
        return Err(CopulaError::DimensionMismatch {
            expected: model.dim(),
            got: dim,
        });
    }
    let mut corner = vec![0.0; dim];
    let mut volume = 0.0;
    for mask in 0..(1u32 << dim) {
        let mut high = 0;
        for (d, c) in corner.iter_mut().enumerate() {
            if mask & (1 << d) != 0 {
                *c = rect.upper().coords()[d];
                high += 1;
            } else {
                *c = rect.lower().coords()[d];
            }
        }
        let sign = if (dim - high).is_multiple_of(2) { 1.0 } else { -1.0 };
        volume += sign * model.cdf_interior(&corner)?;
    }
    Ok(volume)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_and_frechet_known_values() {
        let p = UnitPoint::bivariate(0.3, 0.4).unwrap();
        assert_eq!(
            CopulaModel::product(2).unwrap().cdf(&p).unwrap(),
            0.12
        );
        assert_eq!(CopulaModel::frechet_lower().cdf(&p).unwrap(), 0.0);
        assert_eq!(CopulaModel::frechet_upper().cdf(&p).unwrap(), 0.3);
    }

    #[test]
    fn boundary_extension() {
        for model in [
            CopulaModel::product(2).unwrap(),
            CopulaModel::normal_mode_bivariate(1.0, 2, 1).unwrap(),
            CopulaModel::clayton(3.0).unwrap(),
            CopulaModel::gaussian(0.6).unwrap(),
            CopulaModel::frank(5.0).unwrap(),
        ] {
            assert_eq!(model.cdf_closed(&[0.0, 0.7]).unwrap(), 0.0);
            assert_eq!(model.cdf_closed(&[0.7, 0.0]).unwrap(), 0.0);
            assert_eq!(model.cdf_closed(&[1.0, 0.7]).unwrap(), 0.7);
            assert_eq!(model.cdf_closed(&[0.7, 1.0]).unwrap(), 0.7);
            assert_eq!(model.cdf_closed(&[1.0, 1.0]).unwrap(), 1.0);
        }
    }

    #[test]
    fn formulas_are_continuous_at_the_boundary() {
        // the interior formulas approach the boundary values, so the
        // dedicated boundary path is a limit, not a patch
        let eps = 1e-9;
        for model in [
            CopulaModel::normal_mode_bivariate(-1.0, 3, 2).unwrap(),
            CopulaModel::amh(0.9).unwrap(),
            CopulaModel::clayton(2.0).unwrap(),
            CopulaModel::frank(-8.0).unwrap(),
            CopulaModel::fgm(1.0).unwrap(),
            CopulaModel::gaussian(0.5).unwrap(),
        ] {
            let near_one = model.cdf_interior(&[1.0 - eps, 0.6]).unwrap();
            assert!((near_one - 0.6).abs() < 1e-6, "{:?}", model.family());
            let near_zero = model.cdf_interior(&[eps, 0.6]).unwrap();
            assert!(near_zero.abs() < 1e-6, "{:?}", model.family());
        }
    }

    #[test]
    fn frank_zero_aliases_to_product() {
        let m = CopulaModel::frank(0.0).unwrap();
        assert_eq!(m.family(), Family::Product);
    }

    #[test]
    fn conditional_quantile_round_trip() {
        let models = [
            CopulaModel::product(2).unwrap(),
            CopulaModel::normal_mode_bivariate(1.0, 1, 1).unwrap(),
            CopulaModel::amh(-0.7).unwrap(),
            CopulaModel::clayton(2.0).unwrap(),
            CopulaModel::frank(4.0).unwrap(),
            CopulaModel::fgm(0.9).unwrap(),
            CopulaModel::gaussian(0.8).unwrap(),
        ];
        let mut rng = SeededRng::new(77);
        for model in &models {
            for _ in 0..200 {
                let g = rng.next_open01();
                let x = rng.next_open01();
                let p = model
                    .conditional_cdf_interior(1, &[g, x])
                    .unwrap();
                if p <= 1e-14 || p >= 1.0 - 1e-14 {
                    continue;
                }
                let back = model.conditional_quantile(1, g, p).unwrap();
                assert!(
                    (back - x).abs() < 1e-8,
                    "{:?}: g={g} x={x} -> p={p} -> {back}",
                    model.family()
                );
            }
        }
    }

    #[test]
    fn product_conditional_quantile_is_identity() {
        let m = CopulaModel::product(2).unwrap();
        assert_eq!(m.conditional_quantile(1, 0.9, 0.42).unwrap(), 0.42);
    }

    #[test]
    fn sampling_is_deterministic_per_seed() {
        let m = CopulaModel::normal_mode_bivariate(0.8, 2, 1).unwrap();
        let a = m.sample(100, 9).unwrap();
        let b = m.sample(100, 9).unwrap();
        assert_eq!(a, b);
        let c = m.sample(100, 10).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn sampling_refuses_degenerate_models() {
        assert!(matches!(
            CopulaModel::frechet_upper().sample(5, 1),
            Err(CopulaError::NoDensity)
        ));
        assert!(matches!(
            CopulaModel::gaussian(1.0).unwrap().sample(5, 1),
            Err(CopulaError::NoDensity)
        ));
        assert!(CopulaModel::product(2).unwrap().sample(0, 1).is_err());
    }

    #[test]
    fn axiom_check_passes_for_valid_families() {
        for model in [
            CopulaModel::product(2).unwrap(),
            CopulaModel::frechet_lower(),
            CopulaModel::frechet_upper(),
            CopulaModel::normal_mode_bivariate(-1.0, 3, 2).unwrap(),
            CopulaModel::clayton(5.0).unwrap(),
        ] {
            let report = model.check_axioms(2000, 123);
            assert!(
                report.passes(),
                "{:?}: {report:?}",
                model.family()
            );
        }
    }

    #[test]
    fn invalid_amplitude_never_reaches_the_axiom_check() {
        assert!(CopulaModel::normal_mode_bivariate(1.5, 1, 1).is_err());
    }

    #[test]
    fn concordance_of_frechet_bounds() {
        let lo = CopulaModel::frechet_lower();
        let hi = CopulaModel::frechet_upper();
        let r = concordance_compare(&lo, &hi, 20).unwrap();
        assert_eq!(r.verdict, ConcordanceVerdict::ABelowB);
        let e = concordance_compare(&lo, &lo, 20).unwrap();
        assert_eq!(e.verdict, ConcordanceVerdict::Equal);
    }

    #[test]
    fn concordance_self_equality_across_families() {
        for model in [
            CopulaModel::product(2).unwrap(),
            CopulaModel::normal_mode_bivariate(0.6, 1, 2).unwrap(),
            CopulaModel::gaussian(-0.4).unwrap(),
        ] {
            let r = concordance_compare(&model, &model, 15).unwrap();
            assert_eq!(r.verdict, ConcordanceVerdict::Equal);
            assert_eq!(r.max_violation, 0.0);
        }
    }

    #[test]
    fn normal_mode_orders_against_fgm_inside_its_domain() {
        // amplitude small enough that the sufficient FGM parameter stays in
        // [-1, 1]
        let nm = CopulaModel::normal_mode_bivariate(0.3, 1, 1).unwrap();
        let fgm = CopulaModel::fgm(0.75).unwrap();
        let r = concordance_compare(&nm, &fgm, 40).unwrap();
        assert_eq!(r.verdict, ConcordanceVerdict::ABelowB);
    }
}
