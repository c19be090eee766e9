//! Maximum pseudolikelihood estimation, Cramér-von Mises goodness of fit,
//! AIC, the leave-one-out cross-validation information criterion, and the
//! multi-family comparison pipeline.

use std::f64::consts::PI;

use serde::Serialize;

use crate::classical::{classical_log_density, ClassicalFamily};
use crate::empirical::{empirical_copula_at, loo_pseudo, PseudoSample};
use crate::error::{CopulaError, Result};
use crate::model::{CopulaModel, Family};
use crate::normal::inv_norm_cdf;
use crate::optimize::{golden_max, newton_max, numeric_derivatives, MaxOutcome};

/// Convergence target for the scalar parameter.
const THETA_TOL: f64 = 1e-9;
/// Treat the likelihood as flat when every per-point carrier is this small.
const FLAT_EPS: f64 = 1e-12;

/// A fittable family: identifier plus structural choices fixed before
/// estimation (the mode numbers, for the normal mode family).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FitFamily {
    NormalMode { kappa: [u32; 2] },
    Amh,
    Clayton,
    Frank,
    Fgm,
    Gaussian,
}

impl FitFamily {
    pub fn family(&self) -> Family {
        match self {
            FitFamily::NormalMode { .. } => Family::NormalMode,
            FitFamily::Amh => Family::Amh,
            FitFamily::Clayton => Family::Clayton,
            FitFamily::Frank => Family::Frank,
            FitFamily::Fgm => Family::Fgm,
            FitFamily::Gaussian => Family::Gaussian,
        }
    }

    pub fn label(&self) -> String {
        match self {
            FitFamily::NormalMode { kappa } => {
                format!("normal-mode({},{})", kappa[0], kappa[1])
            }
            other => other.family().name().to_string(),
        }
    }

    /// Default search interval; beyond these bounds Clayton and Frank are
    /// numerically indistinguishable from their comonotone limits in double
    /// precision.
    pub fn default_search(&self) -> (f64, f64) {
        match self {
            FitFamily::NormalMode { .. } | FitFamily::Amh | FitFamily::Fgm => (-1.0, 1.0),
            FitFamily::Clayton => (1e-6, 50.0),
            FitFamily::Frank => (-50.0, 50.0),
            FitFamily::Gaussian => (-(1.0 - 1e-6), 1.0 - 1e-6),
        }
    }

    pub fn model(&self, theta: f64) -> Result<CopulaModel> {
        match self {
            FitFamily::NormalMode { kappa } => {
                CopulaModel::normal_mode_bivariate(theta, kappa[0], kappa[1])
            }
            FitFamily::Amh => CopulaModel::amh(theta),
            FitFamily::Clayton => CopulaModel::clayton(theta),
            FitFamily::Frank => CopulaModel::frank(theta),
            FitFamily::Fgm => CopulaModel::fgm(theta),
            FitFamily::Gaussian => CopulaModel::gaussian(theta),
        }
    }

    fn log_density(&self, theta: f64, u: f64, v: f64) -> f64 {
        match self {
            FitFamily::NormalMode { kappa } => {
                let a = (kappa[0] as f64 * PI * u).cos() * (kappa[1] as f64 * PI * v).cos();
                (theta * a).ln_1p()
            }
            FitFamily::Amh => {
                classical_log_density(ClassicalFamily::Amh, theta, u, v).unwrap_or(f64::NAN)
            }
            FitFamily::Clayton => {
                classical_log_density(ClassicalFamily::Clayton, theta, u, v).unwrap_or(f64::NAN)
            }
            FitFamily::Frank => {
                classical_log_density(ClassicalFamily::Frank, theta, u, v).unwrap_or(f64::NAN)
            }
            FitFamily::Fgm => {
                classical_log_density(ClassicalFamily::Fgm, theta, u, v).unwrap_or(f64::NAN)
            }
            FitFamily::Gaussian => {
                classical_log_density(ClassicalFamily::Gaussian, theta, u, v).unwrap_or(f64::NAN)
            }
        }
    }
}

/// Family plus its parameter search interval.
#[derive(Debug, Clone)]
pub struct FamilySpec {
    pub family: FitFamily,
    pub search: (f64, f64),
}

impl FamilySpec {
    pub fn new(family: FitFamily) -> Self {
        let search = family.default_search();
        Self { family, search }
    }

    pub fn with_search(family: FitFamily, lo: f64, hi: f64) -> Result<Self> {
        let (dlo, dhi) = family.default_search();
        if !lo.is_finite() || !hi.is_finite() || lo >= hi || lo < dlo - 1e-12 || hi > dhi + 1e-12 {
            return Err(CopulaError::InvalidParameter(format!(
                "search interval [{lo}, {hi}] must sit inside [{dlo}, {dhi}]"
            )));
        }
        Ok(Self {
            family,
            search: (lo, hi),
        })
    }

    /// The six-family comparison set, normal mode first.
    pub fn standard_set(kappa: [u32; 2]) -> Vec<FamilySpec> {
        vec![
            FamilySpec::new(FitFamily::NormalMode { kappa }),
            FamilySpec::new(FitFamily::Amh),
            FamilySpec::new(FitFamily::Clayton),
            FamilySpec::new(FitFamily::Fgm),
            FamilySpec::new(FitFamily::Frank),
            FamilySpec::new(FitFamily::Gaussian),
        ]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FitFlag {
    /// The maximizer sits on a search bound.
    BoundaryTheta,
    /// The pseudolog-likelihood is flat in theta (every carrier is ~0); the
    /// reported estimate is the independence value.
    FlatLikelihood,
    /// Fewer than 10 pseudo-observations.
    SmallSample,
}

#[derive(Debug, Clone)]
pub struct FitOutcome {
    pub theta_hat: f64,
    pub loglik: f64,
    pub flags: Vec<FitFlag>,
}

/// Per-observation terms of the pseudolog-likelihood, cached once per
/// dataset so repeated evaluations in theta (optimizer steps, fold refits)
/// touch only precomputed quantities.
enum ObjectiveData {
    /// carrier a_i = cos(kappa1 pi u_i) cos(kappa2 pi v_i)
    NormalMode { a: Vec<f64> },
    /// carrier g_i = (1 - 2 u_i)(1 - 2 v_i)
    Fgm { g: Vec<f64> },
    /// a_i = (1 + u)(1 + v) - 3, b_i = (1 - u)(1 - v)
    Amh { a: Vec<f64>, b: Vec<f64> },
    Clayton { lnu: Vec<f64>, lnv: Vec<f64> },
    Frank { u: Vec<f64>, v: Vec<f64> },
    /// normal scores; the likelihood reduces to the sufficient statistics
    /// (n, sum of x^2 + y^2, sum of x y)
    Gaussian { s: Vec<f64>, p: Vec<f64>, total_s: f64, total_p: f64 },
}

impl ObjectiveData {
    fn build(family: &FitFamily, ps: &PseudoSample) -> Result<Self> {
        let u = ps.column(0);
        let v = ps.column(1);
        Ok(match family {
            FitFamily::NormalMode { kappa } => {
                let k1 = kappa[0] as f64 * PI;
                let k2 = kappa[1] as f64 * PI;
                let a = u
                    .iter()
                    .zip(v)
                    .map(|(&x, &y)| (k1 * x).cos() * (k2 * y).cos())
                    .collect();
                ObjectiveData::NormalMode { a }
            }
            FitFamily::Fgm => {
                let g = u
                    .iter()
                    .zip(v)
                    .map(|(&x, &y)| (1.0 - 2.0 * x) * (1.0 - 2.0 * y))
                    .collect();
                ObjectiveData::Fgm { g }
            }
            FitFamily::Amh => {
                let a = u
                    .iter()
                    .zip(v)
                    .map(|(&x, &y)| (1.0 + x) * (1.0 + y) - 3.0)
                    .collect();
                let b = u
                    .iter()
                    .zip(v)
                    .map(|(&x, &y)| (1.0 - x) * (1.0 - y))
                    .collect();
                ObjectiveData::Amh { a, b }
            }
            FitFamily::Clayton => ObjectiveData::Clayton {
                lnu: u.iter().map(|&x| x.ln()).collect(),
                lnv: v.iter().map(|&y| y.ln()).collect(),
            },
            FitFamily::Frank => ObjectiveData::Frank {
                u: u.to_vec(),
                v: v.to_vec(),
            },
            FitFamily::Gaussian => {
                let mut s = Vec::with_capacity(u.len());
                let mut p = Vec::with_capacity(u.len());
                for (&x, &y) in u.iter().zip(v) {
                    let zx = inv_norm_cdf(x)?;
                    let zy = inv_norm_cdf(y)?;
                    s.push(zx * zx + zy * zy);
                    p.push(zx * zy);
                }
                let total_s = s.iter().sum();
                let total_p = p.iter().sum();
                ObjectiveData::Gaussian {
                    s,
                    p,
                    total_s,
                    total_p,
                }
            }
        })
    }

    /// Pseudolog-likelihood at `theta`, optionally excluding one observation.
    fn loglik(&self, theta: f64, skip: Option<usize>) -> f64 {
        let excluded = |i: usize| skip == Some(i);
        match self {
            ObjectiveData::NormalMode { a } => sum_skipping(a, skip, |&ai| (theta * ai).ln_1p()),
            ObjectiveData::Fgm { g } => sum_skipping(g, skip, |&gi| (theta * gi).ln_1p()),
            ObjectiveData::Amh { a, b } => {
                let mut acc = 0.0;
                for i in 0..a.len() {
                    if excluded(i) {
                        continue;
                    }
                    let num = 1.0 + theta * a[i] + theta * theta * b[i];
                    if num <= 0.0 {
                        return f64::NEG_INFINITY;
                    }
                    acc += num.ln() - 3.0 * (1.0 - theta * b[i]).ln();
                }
                acc
            }
            ObjectiveData::Clayton { lnu, lnv } => {
                let mut acc = 0.0;
                for i in 0..lnu.len() {
                    if excluded(i) {
                        continue;
                    }
                    let s = f64::exp_m1(-theta * lnu[i]) + f64::exp_m1(-theta * lnv[i]);
                    acc += f64::ln_1p(theta)
                        - (theta + 1.0) * (lnu[i] + lnv[i])
                        - (1.0 / theta + 2.0) * f64::ln_1p(s);
                }
                acc
            }
            ObjectiveData::Frank { u, v } => {
                let mut acc = 0.0;
                for i in 0..u.len() {
                    if excluded(i) {
                        continue;
                    }
                    acc += crate::classical::classical_log_density(
                        ClassicalFamily::Frank,
                        theta,
                        u[i],
                        v[i],
                    )
                    .unwrap_or(f64::NEG_INFINITY);
                }
                acc
            }
            ObjectiveData::Gaussian {
                s,
                p,
                total_s,
                total_p,
            } => {
                let (m, ss, pp) = match skip {
                    Some(i) => ((s.len() - 1) as f64, total_s - s[i], total_p - p[i]),
                    None => (s.len() as f64, *total_s, *total_p),
                };
                let om = 1.0 - theta * theta;
                -0.5 * m * om.ln() - (theta * theta * ss - 2.0 * theta * pp) / (2.0 * om)
            }
        }
    }

    /// Analytic (loglik', loglik'') where available; Frank uses numeric
    /// differences instead.
    fn derivatives(&self, theta: f64, skip: Option<usize>) -> Option<(f64, f64)> {
        let excluded = |i: usize| skip == Some(i);
        match self {
            ObjectiveData::NormalMode { a } => {
                let mut g = 0.0;
                let mut h = 0.0;
                for (i, &ai) in a.iter().enumerate() {
                    if excluded(i) {
                        continue;
                    }
                    let w = 1.0 + theta * ai;
                    if w <= 0.0 {
                        return None;
                    }
                    let r = ai / w;
                    g += r;
                    h -= r * r;
                }
                Some((g, h))
            }
            ObjectiveData::Fgm { g: carriers } => {
                let mut g = 0.0;
                let mut h = 0.0;
                for (i, &gi) in carriers.iter().enumerate() {
                    if excluded(i) {
                        continue;
                    }
                    let w = 1.0 + theta * gi;
                    if w <= 0.0 {
                        return None;
                    }
                    let r = gi / w;
                    g += r;
                    h -= r * r;
                }
                Some((g, h))
            }
            ObjectiveData::Amh { a, b } => {
                let mut g = 0.0;
                let mut h = 0.0;
                for i in 0..a.len() {
                    if excluded(i) {
                        continue;
                    }
                    let num = 1.0 + theta * a[i] + theta * theta * b[i];
                    let d = 1.0 - theta * b[i];
                    if num <= 0.0 || d <= 0.0 {
                        return None;
                    }
                    let n1 = (a[i] + 2.0 * theta * b[i]) / num;
                    g += n1 + 3.0 * b[i] / d;
                    h += 2.0 * b[i] / num - n1 * n1 + 3.0 * (b[i] / d) * (b[i] / d);
                }
                Some((g, h))
            }
            ObjectiveData::Clayton { lnu, lnv } => {
                let mut g = 0.0;
                let mut h = 0.0;
                let t2 = theta * theta;
                for i in 0..lnu.len() {
                    if excluded(i) {
                        continue;
                    }
                    let au = (-theta * lnu[i]).exp();
                    let av = (-theta * lnv[i]).exp();
                    let s1 = au + av - 1.0;
                    if s1 <= 0.0 {
                        return None;
                    }
                    let log_s1 = f64::ln_1p(f64::exp_m1(-theta * lnu[i])
                        + f64::exp_m1(-theta * lnv[i]));
                    let sp = -(lnu[i] * au + lnv[i] * av) / s1;
                    let spp = (lnu[i] * lnu[i] * au + lnv[i] * lnv[i] * av) / s1;
                    g += 1.0 / (1.0 + theta) - (lnu[i] + lnv[i]) + log_s1 / t2
                        - (1.0 / theta + 2.0) * sp;
                    h += -1.0 / ((1.0 + theta) * (1.0 + theta)) - 2.0 * log_s1 / (t2 * theta)
                        + 2.0 * sp / t2
                        - (1.0 / theta + 2.0) * (spp - sp * sp);
                }
                Some((g, h))
            }
            ObjectiveData::Frank { .. } => None,
            ObjectiveData::Gaussian {
                s,
                p,
                total_s,
                total_p,
            } => {
                let (m, ss, pp) = match skip {
                    Some(i) => ((s.len() - 1) as f64, total_s - s[i], total_p - p[i]),
                    None => (s.len() as f64, *total_s, *total_p),
                };
                let om = 1.0 - theta * theta;
                let om2 = om * om;
                let g = m * theta / om - (theta * ss - (1.0 + theta * theta) * pp) / om2;
                let h = m * (1.0 + theta * theta) / om2
                    - (ss - 2.0 * theta * pp) / om2
                    - 4.0 * theta * (theta * ss - (1.0 + theta * theta) * pp) / (om2 * om);
                Some((g, h))
            }
        }
    }
}

fn sum_skipping<T, F: Fn(&T) -> f64>(items: &[T], skip: Option<usize>, f: F) -> f64 {
    let mut acc = 0.0;
    for (i, item) in items.iter().enumerate() {
        if skip == Some(i) {
            continue;
        }
        acc += f(item);
    }
    acc
}

/// Maximizes the cached objective over [lo, hi]. `warm` skips the
/// golden-section bracketing and polishes directly (used by fold refits).
fn optimize_theta(
    data: &ObjectiveData,
    lo: f64,
    hi: f64,
    warm: Option<f64>,
    skip: Option<usize>,
) -> MaxOutcome {
    let value = |theta: f64| data.loglik(theta, skip);
    let newton_from = |start: f64| -> Option<MaxOutcome> {
        let out = match data.derivatives(start, skip) {
            Some(_) => newton_max(
                |x| data.derivatives(x, skip).unwrap_or((f64::NAN, f64::NAN)),
                start,
                lo,
                hi,
                THETA_TOL,
                60,
            ),
            None => newton_max(
                |x| {
                    let mut f = value;
                    numeric_derivatives(&mut f, x, 1e-5, lo, hi)
                },
                start,
                lo,
                hi,
                THETA_TOL,
                60,
            ),
        };
        out.map(|mut o| {
            o.fx = value(o.x);
            o
        })
    };

    if let Some(w) = warm {
        if let Some(out) = newton_from(w) {
            if out.fx.is_finite() && out.fx >= value(w) - 1e-9 {
                return out;
            }
        }
    }

    let coarse = golden_max(value, lo, hi, 1e-3);
    if let Some(out) = newton_from(coarse.x) {
        if out.fx.is_finite() && out.fx >= coarse.fx - 1e-9 {
            return out;
        }
    }
    // Newton declined (flat or non-concave spot): finish with golden section
    let a = (coarse.x - 5e-3).max(lo);
    let b = (coarse.x + 5e-3).min(hi);
    let fine = golden_max(value, a, b, THETA_TOL);
    let btol = 1e-6 * (hi - lo).max(1.0);
    MaxOutcome {
        x: fine.x,
        fx: fine.fx,
        boundary: fine.x - lo <= btol || hi - fine.x <= btol,
        evaluations: coarse.evaluations + fine.evaluations,
    }
}

fn check_bivariate(ps: &PseudoSample) -> Result<()> {
    if ps.n_cols() != 2 {
        return Err(CopulaError::DimensionMismatch {
            expected: 2,
            got: ps.n_cols(),
        });
    }
    Ok(())
}

/// Maximum pseudolikelihood estimate of the family's scalar parameter.
///
/// For the normal mode family each term is `log(1 + theta a_i)`, so the
/// objective is concave and the maximizer unique; a flat objective (every
/// `a_i ~ 0`) returns the independence value with a flag rather than an
/// error. Boundary maxima are flagged, not rejected.
pub fn fit_mple(spec: &FamilySpec, ps: &PseudoSample) -> Result<FitOutcome> {
    check_bivariate(ps)?;
    let mut flags = Vec::new();
    if ps.n_rows() < 10 {
        flags.push(FitFlag::SmallSample);
    }
    let data = ObjectiveData::build(&spec.family, ps)?;
    if let ObjectiveData::NormalMode { a } = &data {
        if a.iter().all(|x| x.abs() < FLAT_EPS) {
            flags.push(FitFlag::FlatLikelihood);
            return Ok(FitOutcome {
                theta_hat: 0.0,
                loglik: 0.0,
                flags,
            });
        }
    }
    let (lo, hi) = spec.search;
    let out = optimize_theta(&data, lo, hi, None, None);
    if !out.fx.is_finite() {
        return Err(CopulaError::NonFiniteLikelihood);
    }
    if out.boundary {
        flags.push(FitFlag::BoundaryTheta);
    }
    Ok(FitOutcome {
        theta_hat: out.x,
        loglik: out.fx,
        flags,
    })
}

/// Cramér-von Mises criterion: the summed squared distance between the model
/// CDF and the empirical copula over all pseudo-observations.
pub fn cvm_criterion(model: &CopulaModel, ps: &PseudoSample) -> Result<f64> {
    check_bivariate(ps)?;
    if model.dim() != 2 {
        return Err(CopulaError::DimensionMismatch {
            expected: 2,
            got: model.dim(),
        });
    }
    let n = ps.n_rows();
    let mut acc = 0.0;
    let mut coords = [0.0f64; 2];
    for i in 0..n {
        coords[0] = ps.column(0)[i];
        coords[1] = ps.column(1)[i];
        let fitted = model.cdf_interior(&coords)?;
        let empirical = empirical_copula_at(ps, &coords);
        let d = fitted - empirical;
        acc += d * d;
    }
    Ok(acc)
}

/// Akaike information criterion `2k - 2 loglik`; every family here has a
/// single free parameter.
pub fn aic(loglik: f64, k: usize) -> f64 {
    2.0 * k as f64 - 2.0 * loglik
}

/// Leave-one-out cross-validation information criterion: the mean
/// log-density at recomputed leave-one-out pseudo-observations, each under
/// the parameter refitted without that observation. Larger is better.
pub fn cic(spec: &FamilySpec, ps: &PseudoSample) -> Result<f64> {
    cic_with_chunks(spec, ps, None, 1)
}

/// `cic` with an optional warm start (the full-sample estimate) and an
/// explicit number of fold chunks to run concurrently. Fold results are
/// reduced in index order, so the value is bit-identical for any chunking.
pub fn cic_with_chunks(
    spec: &FamilySpec,
    ps: &PseudoSample,
    warm: Option<f64>,
    chunks: usize,
) -> Result<f64> {
    check_bivariate(ps)?;
    let n = ps.n_rows();
    let data = ObjectiveData::build(&spec.family, ps)?;
    let (lo, hi) = spec.search;
    let warm = match warm {
        Some(w) => w,
        None => {
            let full = optimize_theta(&data, lo, hi, None, None);
            if !full.fx.is_finite() {
                return Err(CopulaError::NonFiniteLikelihood);
            }
            full.x
        }
    };
    let loo: Vec<[f64; 2]> = (0..n)
        .map(|i| {
            let v = loo_pseudo(ps, i).expect("index in range");
            [v[0], v[1]]
        })
        .collect();

    let fold_value = |i: usize| -> Result<f64> {
        let out = optimize_theta(&data, lo, hi, Some(warm), Some(i));
        if !out.fx.is_finite() {
            return Err(CopulaError::FoldFailure {
                fold: i,
                source: Box::new(CopulaError::NonFiniteLikelihood),
            });
        }
        let term = spec.family.log_density(out.x, loo[i][0], loo[i][1]);
        if !term.is_finite() {
            return Err(CopulaError::FoldFailure {
                fold: i,
                source: Box::new(CopulaError::NonFiniteLikelihood),
            });
        }
        Ok(term)
    };

    let chunks = chunks.clamp(1, n.max(1));
    let mut terms: Vec<Result<f64>> = Vec::with_capacity(n);
    if chunks == 1 {
        for i in 0..n {
            terms.push(fold_value(i));
        }
    } else {
        let mut results: Vec<Option<Result<f64>>> = vec![None; n];
        let chunk_len = n.div_ceil(chunks);
        std::thread::scope(|scope| {
            let mut handles = Vec::new();
            for (c, slot) in results.chunks_mut(chunk_len).enumerate() {
                let fold_value = &fold_value;
                handles.push(scope.spawn(move || {
                    let start = c * chunk_len;
                    for (off, cell) in slot.iter_mut().enumerate() {
                        *cell = Some(fold_value(start + off));
                    }
                }));
            }
            for h in handles {
                h.join().expect("fold worker panicked");
            }
        });
        terms.extend(results.into_iter().map(|r| r.expect("all folds filled")));
    }

    // index-ordered reduction keeps the sum independent of scheduling
    let mut acc = 0.0;
    for term in terms {
        acc += term?;
    }
    Ok(acc / n as f64)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RankCriterion {
    Cvmc,
    Aic,
    Neg2nCic,
}

impl RankCriterion {
    pub fn value(&self, report: &FitReport) -> f64 {
        match self {
            RankCriterion::Cvmc => report.cvmc,
            RankCriterion::Aic => report.aic,
            RankCriterion::Neg2nCic => report.neg2n_cic,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            RankCriterion::Cvmc => "cvmc",
            RankCriterion::Aic => "aic",
            RankCriterion::Neg2nCic => "neg2n_cic",
        }
    }
}

/// Estimation and evaluation results for one family.
#[derive(Debug, Clone, Serialize)]
pub struct FitReport {
    pub family: Family,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kappa: Option<Vec<u32>>,
    pub theta_hat: f64,
    pub loglik: f64,
    pub cvmc: f64,
    pub aic: f64,
    pub cic: f64,
    pub neg2n_cic: f64,
    pub n: usize,
    pub flags: Vec<FitFlag>,
}

impl FitReport {
    pub fn label(&self) -> String {
        match &self.kappa {
            Some(k) => format!("{}({},{})", self.family.name(), k[0], k[1]),
            None => self.family.name().to_string(),
        }
    }
}

/// Fits every spec and evaluates all three criteria; the returned reports are
/// sorted ascending by `criterion` (lower is better for all three, with the
/// cross-validation criterion reported as -2N x CIC for AIC comparability).
pub fn compare_models(
    specs: &[FamilySpec],
    ps: &PseudoSample,
    criterion: RankCriterion,
) -> Result<Vec<FitReport>> {
    if specs.len() < 2 {
        return Err(CopulaError::InvalidParameter(format!(
            "model comparison needs at least two specs, got {}",
            specs.len()
        )));
    }
    check_bivariate(ps)?;
    let n = ps.n_rows();
    let mut reports = Vec::with_capacity(specs.len());
    for spec in specs {
        let fit = fit_mple(spec, ps)?;
        let model = spec.family.model(fit.theta_hat)?;
        let cvmc = cvm_criterion(&model, ps)?;
        let cic_value = cic_with_chunks(spec, ps, Some(fit.theta_hat), 1)?;
        let report = FitReport {
            family: spec.family.family(),
            kappa: match &spec.family {
                FitFamily::NormalMode { kappa } => Some(kappa.to_vec()),
                _ => None,
            },
            theta_hat: fit.theta_hat,
            loglik: fit.loglik,
            cvmc,
            aic: aic(fit.loglik, 1),
            cic: cic_value,
            neg2n_cic: -2.0 * n as f64 * cic_value,
            n,
            flags: fit.flags,
        };
        reports.push(report);
    }
    reports.sort_by(|a, b| criterion.value(a).total_cmp(&criterion.value(b)));
    Ok(reports)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::empirical::pseudo_observations;
    use crate::empirical::RawSample;

    fn simulated(model: &CopulaModel, n: usize, seed: u64) -> PseudoSample {
        let draws = model.sample(n, seed).unwrap();
        let cols = vec![
            draws.iter().map(|p| p.coords()[0]).collect(),
            draws.iter().map(|p| p.coords()[1]).collect(),
        ];
        let raw = RawSample::new(cols, vec!["u1".into(), "u2".into()]).unwrap();
        pseudo_observations(&raw)
    }

    #[test]
    fn analytic_derivatives_match_numeric() {
        let model = CopulaModel::normal_mode_bivariate(0.7, 2, 1).unwrap();
        let ps = simulated(&model, 400, 3);
        let families = [
            FitFamily::NormalMode { kappa: [2, 1] },
            FitFamily::Fgm,
            FitFamily::Amh,
            FitFamily::Clayton,
            FitFamily::Gaussian,
        ];
        for family in families {
            let data = ObjectiveData::build(&family, &ps).unwrap();
            let thetas: &[f64] = match family {
                FitFamily::Clayton => &[0.3, 1.5, 4.0],
                _ => &[-0.6, 0.2, 0.8],
            };
            for &theta in thetas {
                let (g, h) = data.derivatives(theta, None).unwrap();
                let f = |x: f64| data.loglik(x, None);
                let gstep = 1e-6;
                let gn = (f(theta + gstep) - f(theta - gstep)) / (2.0 * gstep);
                // the second difference needs a wider step to beat the
                // eps * |f| / h^2 rounding noise
                let hstep = 1e-4;
                let hn = (f(theta + hstep) - 2.0 * f(theta) + f(theta - hstep)) / (hstep * hstep);
                assert!(
                    (g - gn).abs() <= 1e-4 * g.abs().max(1.0),
                    "{family:?} theta={theta}: grad {g} vs {gn}"
                );
                assert!(
                    (h - hn).abs() <= 1e-3 * h.abs().max(10.0),
                    "{family:?} theta={theta}: hess {h} vs {hn}"
                );
            }
        }
    }

    #[test]
    fn single_point_with_positive_carrier_hits_the_boundary() {
        // one pseudo-point whose cosine carrier is positive makes
        // log(1 + theta a) strictly increasing, so the estimate is theta = 1
        let ps = PseudoSample::from_uniform_columns(vec![vec![0.1, 0.11], vec![0.1, 0.11]])
            .unwrap();
        let spec = FamilySpec::new(FitFamily::NormalMode { kappa: [1, 1] });
        let fit = fit_mple(&spec, &ps).unwrap();
        assert!((fit.theta_hat - 1.0).abs() < 1e-6, "{}", fit.theta_hat);
        assert!(fit.flags.contains(&FitFlag::BoundaryTheta));
        assert!(fit.flags.contains(&FitFlag::SmallSample));
    }

    #[test]
    fn flat_likelihood_returns_independence_with_flag() {
        // u = 1/2 puts every carrier on a cosine node for kappa1 = 1
        let ps = PseudoSample::from_uniform_columns(vec![
            vec![0.5, 0.5, 0.5, 0.5],
            vec![0.2, 0.4, 0.6, 0.8],
        ])
        .unwrap();
        let spec = FamilySpec::new(FitFamily::NormalMode { kappa: [1, 1] });
        let fit = fit_mple(&spec, &ps).unwrap();
        assert_eq!(fit.theta_hat, 0.0);
        assert_eq!(fit.loglik, 0.0);
        assert!(fit.flags.contains(&FitFlag::FlatLikelihood));
    }

    #[test]
    fn recovers_normal_mode_amplitude() {
        let truth = CopulaModel::normal_mode_bivariate(0.8, 2, 1).unwrap();
        let ps = simulated(&truth, 5000, 42);
        let spec = FamilySpec::new(FitFamily::NormalMode { kappa: [2, 1] });
        let fit = fit_mple(&spec, &ps).unwrap();
        assert!(
            (fit.theta_hat - 0.8).abs() < 0.15,
            "theta_hat = {}",
            fit.theta_hat
        );
    }

    #[test]
    fn independence_data_fits_near_independence_everywhere() {
        let product = CopulaModel::product(2).unwrap();
        let ps = simulated(&product, 3000, 7);
        for spec in FamilySpec::standard_set([1, 1]) {
            let fit = fit_mple(&spec, &ps).unwrap();
            let independence = match spec.family {
                FitFamily::Clayton => 1e-6,
                _ => 0.0,
            };
            // frank's parameter scale is ~6x wider than the [-1, 1] families
            let tol = match spec.family {
                FitFamily::Frank => 0.6,
                _ => 0.1,
            };
            assert!(
                (fit.theta_hat - independence).abs() < tol,
                "{}: theta_hat = {}",
                spec.family.label(),
                fit.theta_hat
            );
        }
    }

    #[test]
    fn pseudolog_likelihood_is_concave_for_normal_mode() {
        let truth = CopulaModel::normal_mode_bivariate(0.5, 1, 2).unwrap();
        let ps = simulated(&truth, 300, 11);
        let data = ObjectiveData::build(&FitFamily::NormalMode { kappa: [1, 2] }, &ps).unwrap();
        let grid: Vec<f64> = (0..1000).map(|i| -0.999 + 1.998 * i as f64 / 999.0).collect();
        let values: Vec<f64> = grid.iter().map(|&t| data.loglik(t, None)).collect();
        for w in values.windows(3) {
            let second_diff = w[2] - 2.0 * w[1] + w[0];
            assert!(second_diff <= 1e-9, "second difference {second_diff}");
        }
    }

    #[test]
    fn fit_is_invariant_under_row_permutation() {
        let truth = CopulaModel::fgm(0.7).unwrap();
        let ps = simulated(&truth, 500, 5);
        let spec = FamilySpec::new(FitFamily::Fgm);
        let a = fit_mple(&spec, &ps).unwrap();
        // reverse the rows
        let cols = vec![
            ps.column(0).iter().rev().copied().collect(),
            ps.column(1).iter().rev().copied().collect(),
        ];
        let reversed = PseudoSample::from_uniform_columns(cols).unwrap();
        let b = fit_mple(&spec, &reversed).unwrap();
        assert!((a.theta_hat - b.theta_hat).abs() < 1e-8);
    }

    #[test]
    fn cvm_zero_when_model_equals_empirical() {
        // a single comonotone staircase makes the empirical copula equal to
        // min(u, v) at its own support points; compare against that directly
        let n = 64;
        let grid: Vec<f64> = (1..=n).map(|i| i as f64 / (n as f64 + 1.0)).collect();
        let ps = PseudoSample::from_uniform_columns(vec![grid.clone(), grid]).unwrap();
        let m = CopulaModel::frechet_upper();
        let cvmc = cvm_criterion(&m, &ps).unwrap();
        // empirical copula at (u_i, u_i) counts i of n points = i/n, while
        // the comonotone CDF gives u_i = i/(n+1); the gap is the known
        // rank-vs-quantile offset, bounded by 1/(n+1) per point
        assert!(cvmc < n as f64 / ((n as f64 + 1.0) * (n as f64 + 1.0)));
    }

    #[test]
    fn cvm_separates_right_from_wrong_model() {
        let product = CopulaModel::product(2).unwrap();
        let ps = simulated(&product, 1000, 13);
        let right = cvm_criterion(&product, &ps).unwrap();
        let wrong = cvm_criterion(&CopulaModel::frechet_upper(), &ps).unwrap();
        assert!(right < 0.5, "product fit CvMC = {right}");
        assert!(wrong > 10.0 * right, "wrong model CvMC = {wrong}");
    }

    #[test]
    fn aic_is_arithmetic() {
        assert_eq!(aic(0.0, 1), 2.0);
        assert_eq!(aic(100.0, 1), -198.0);
        assert!(aic(10.0, 1) > aic(20.0, 1));
    }

    #[test]
    fn cic_is_zero_under_the_product_density() {
        // the product density is identically 1, so every fold term vanishes
        let truth = CopulaModel::product(2).unwrap();
        let ps = simulated(&truth, 50, 3);
        // FGM at theta = 0 is the product; force a degenerate search interval
        let spec = FamilySpec::with_search(FitFamily::Fgm, -1e-12, 1e-12).unwrap();
        let value = cic(&spec, &ps).unwrap();
        assert!(value.abs() < 1e-9, "cic = {value}");
    }

    #[test]
    fn cic_chunking_is_bit_identical() {
        let truth = CopulaModel::normal_mode_bivariate(1.0, 2, 1).unwrap();
        let ps = simulated(&truth, 120, 99);
        let spec = FamilySpec::new(FitFamily::NormalMode { kappa: [2, 1] });
        let sequential = cic_with_chunks(&spec, &ps, None, 1).unwrap();
        let threaded = cic_with_chunks(&spec, &ps, None, 4).unwrap();
        assert_eq!(sequential.to_bits(), threaded.to_bits());
    }

    #[test]
    fn compare_models_ranks_the_true_family_first() {
        let truth = CopulaModel::normal_mode_bivariate(1.0, 2, 1).unwrap();
        let ps = simulated(&truth, 800, 21);
        let specs = FamilySpec::standard_set([2, 1]);
        let reports = compare_models(&specs, &ps, RankCriterion::Cvmc).unwrap();
        assert_eq!(reports[0].family, Family::NormalMode);
        assert_eq!(reports.len(), 6);
        for r in &reports {
            assert!(r.cvmc >= 0.0);
            assert!(r.aic.is_finite());
            assert!(r.neg2n_cic.is_finite());
        }
    }

    #[test]
    fn compare_models_requires_two_specs() {
        let ps = simulated(&CopulaModel::product(2).unwrap(), 50, 1);
        let one = vec![FamilySpec::new(FitFamily::Fgm)];
        assert!(compare_models(&one, &ps, RankCriterion::Aic).is_err());
    }
}
