//! Independent numerical estimators of the dependence measures and
//! dependence properties: quadrature versions of every measure, Monte Carlo
//! rank estimators, tail-dependence profiles and quadrant-dependence maps.
//!
//! These serve both as public API and as the oracle the test suite holds the
//! closed forms against.

use serde::Serialize;

use crate::empirical::PseudoSample;
use crate::error::{CopulaError, Result};
use crate::model::{CopulaModel, Family};
use crate::normal_mode::{MeasureSet, Provenance};
use crate::quad::UnitRule;

/// Quadrature layout: total nodes per axis, split across equal panels.
///
/// Panel edges land on multiples of 1/panels, so integrands with kinks along
/// the sine-node lines of low mode numbers stay smooth inside each panel.
#[derive(Debug, Clone, Copy)]
pub struct QuadSpec {
    pub nodes_per_axis: usize,
    pub panels: usize,
}

impl Default for QuadSpec {
    fn default() -> Self {
        Self {
            nodes_per_axis: 256,
            panels: 12,
        }
    }
}

impl QuadSpec {
    pub fn new(nodes_per_axis: usize, panels: usize) -> Result<Self> {
        if nodes_per_axis < 32 {
            return Err(CopulaError::InvalidParameter(format!(
                "need at least 32 quadrature nodes per axis, got {nodes_per_axis}"
            )));
        }
        if panels == 0 {
            return Err(CopulaError::InvalidParameter("panels must be positive".into()));
        }
        Ok(Self {
            nodes_per_axis,
            panels,
        })
    }

    fn rule(&self) -> UnitRule {
        UnitRule::new(self.nodes_per_axis, self.panels)
    }
}

fn require_bivariate(model: &CopulaModel) -> Result<()> {
    if model.dim() != 2 {
        return Err(CopulaError::DimensionMismatch {
            expected: 2,
            got: model.dim(),
        });
    }
    Ok(())
}

/// All six association measures by quadrature of their defining integrals.
///
/// Kendall's tau integrates the product of the two conditional CDFs; those
/// come from the analytic conditionals except for the Gaussian family, where
/// central differences of the CDF (step 1e-6) are used instead.
pub fn measures_numeric(model: &CopulaModel, q: &QuadSpec) -> Result<MeasureSet> {
    require_bivariate(model)?;
    if !model.has_density() {
        return Err(CopulaError::NoDensity);
    }
    let rule = q.rule();
    let n = rule.len();
    let x = &rule.x;
    let w = &rule.w;

    let mut rho_acc = 0.0;
    let mut sigma_acc = 0.0;
    let mut tau_acc = 0.0;
    let gaussian_fd = model.family() == Family::Gaussian;
    let fd_step = 1e-6;
    let mut coords = [0.0f64; 2];
    for i in 0..n {
        coords[0] = x[i];
        let mut row_rho = 0.0;
        let mut row_sigma = 0.0;
        let mut row_tau = 0.0;
        for j in 0..n {
            coords[1] = x[j];
            let c = model.cdf_interior(&coords)?;
            let d = c - coords[0] * coords[1];
            row_rho += w[j] * d;
            row_sigma += w[j] * d.abs();
            let (d1, d2) = if gaussian_fd {
                let up = [coords[0] + fd_step, coords[1]];
                let dn = [coords[0] - fd_step, coords[1]];
                let d1 = (model.cdf_interior(&up)? - model.cdf_interior(&dn)?) / (2.0 * fd_step);
                let up = [coords[0], coords[1] + fd_step];
                let dn = [coords[0], coords[1] - fd_step];
                let d2 = (model.cdf_interior(&up)? - model.cdf_interior(&dn)?) / (2.0 * fd_step);
                (d1, d2)
            } else {
                (
                    model.conditional_cdf_interior(1, &coords)?,
                    model.conditional_cdf_interior(0, &coords)?,
                )
            };
            row_tau += w[j] * d1 * d2;
        }
        rho_acc += w[i] * row_rho;
        sigma_acc += w[i] * row_sigma;
        tau_acc += w[i] * row_tau;
    }

    let mut diag_acc = 0.0;
    let mut anti_acc = 0.0;
    for i in 0..n {
        let u = x[i];
        diag_acc += w[i] * model.cdf_interior(&[u, u])?;
        anti_acc += w[i] * model.cdf_interior(&[u, 1.0 - u])?;
    }

    let beta = 4.0 * model.cdf_interior(&[0.5, 0.5])? - 1.0;
    Ok(MeasureSet {
        sigma: 12.0 * sigma_acc,
        rho: 12.0 * rho_acc,
        tau: 1.0 - 4.0 * tau_acc,
        beta,
        gamma: 4.0 * (anti_acc - (0.5 - diag_acc)),
        footrule: 6.0 * diag_acc - 2.0,
        provenance: Provenance::Quadrature,
    })
}

/// The concordance functional of two copulas, `4 * int C_a dC_b - 1`,
/// by quadrature against the density of `b`.
pub fn concordance_functional(a: &CopulaModel, b: &CopulaModel, q: &QuadSpec) -> Result<f64> {
    require_bivariate(a)?;
    require_bivariate(b)?;
    if !b.has_density() {
        return Err(CopulaError::NoDensity);
    }
    let rule = q.rule();
    let mut acc = 0.0;
    let mut coords = [0.0f64; 2];
    for (&xi, &wi) in rule.x.iter().zip(&rule.w) {
        coords[0] = xi;
        let mut row = 0.0;
        for (&xj, &wj) in rule.x.iter().zip(&rule.w) {
            coords[1] = xj;
            row += wj * a.cdf_interior(&coords)? * b.density_interior(&coords)?;
        }
        acc += wi * row;
    }
    Ok(4.0 * acc - 1.0)
}

/// Monte Carlo rank estimates with standard errors for the estimators that
/// have simple asymptotic formulas.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct McMeasures {
    pub measures: MeasureSet,
    pub se_tau: f64,
    pub se_rho: f64,
    pub se_beta: f64,
    pub n: usize,
}

/// Samples the model and estimates all six measures from ranks; sigma, gamma
/// and the foot-rule are plug-ins of the empirical copula on a grid.
pub fn measures_mc(model: &CopulaModel, n: usize, seed: u64) -> Result<McMeasures> {
    require_bivariate(model)?;
    if n < 10 {
        return Err(CopulaError::InvalidParameter(format!(
            "need at least 10 draws, got {n}"
        )));
    }
    let draws = model.sample(n, seed)?;
    let xs: Vec<f64> = draws.iter().map(|p| p.coords()[0]).collect();
    let ys: Vec<f64> = draws.iter().map(|p| p.coords()[1]).collect();

    let rx = ranks(&xs);
    let ry = ranks(&ys);
    let rho = pearson(&rx, &ry);
    let tau = kendall_tau(&xs, &ys);

    // medial coefficient from the sample medians
    let med_x = median(&xs);
    let med_y = median(&ys);
    let mut pos = 0i64;
    let mut neg = 0i64;
    for (x, y) in xs.iter().zip(&ys) {
        let s = (x - med_x) * (y - med_y);
        if s > 0.0 {
            pos += 1;
        } else if s < 0.0 {
            neg += 1;
        }
    }
    let beta = (pos - neg) as f64 / n as f64;

    // plug-in functionals of the empirical copula on a G x G corner grid
    let g = 256usize;
    let grid = empirical_copula_grid(&rx, &ry, g);
    let mut sigma = 0.0;
    let mut diag = 0.0;
    let mut anti = 0.0;
    for i in 1..=g {
        let u = i as f64 / g as f64;
        diag += grid[i][i];
        anti += grid[i][g - i];
        for (j, cell) in grid[i].iter().enumerate().skip(1) {
            let v = j as f64 / g as f64;
            sigma += (cell - u * v).abs();
        }
    }
    let cell = 1.0 / (g * g) as f64;
    let step = 1.0 / g as f64;
    let sigma = 12.0 * sigma * cell;
    let footrule = 6.0 * diag * step - 2.0;
    let gamma = 4.0 * (anti * step - (0.5 - diag * step));

    let nf = n as f64;
    Ok(McMeasures {
        measures: MeasureSet {
            sigma,
            rho,
            tau,
            beta,
            gamma,
            footrule,
            provenance: Provenance::MonteCarlo,
        },
        se_tau: (2.0 * (2.0 * nf + 5.0) / (9.0 * nf * (nf - 1.0))).sqrt(),
        se_rho: 1.0 / (nf - 1.0).sqrt(),
        se_beta: ((1.0 - beta * beta) / nf).sqrt().max(1.0 / nf),
        n,
    })
}

fn median(values: &[f64]) -> f64 {
    let mut v = values.to_vec();
    v.sort_by(f64::total_cmp);
    let n = v.len();
    if n % 2 == 1 {
        v[n / 2]
    } else {
        0.5 * (v[n / 2 - 1] + v[n / 2])
    }
}

fn ranks(values: &[f64]) -> Vec<f64> {
    let n = values.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| values[a].total_cmp(&values[b]));
    let mut out = vec![0.0; n];
    let mut i = 0;
    while i < n {
        let mut j = i;
        while j + 1 < n && values[order[j + 1]] == values[order[i]] {
            j += 1;
        }
        let avg = (i + j) as f64 / 2.0 + 1.0;
        for &idx in &order[i..=j] {
            out[idx] = avg;
        }
        i = j + 1;
    }
    out
}

fn pearson(x: &[f64], y: &[f64]) -> f64 {
    let n = x.len() as f64;
    let mx = x.iter().sum::<f64>() / n;
    let my = y.iter().sum::<f64>() / n;
    let mut num = 0.0;
    let mut dx = 0.0;
    let mut dy = 0.0;
    for (a, b) in x.iter().zip(y) {
        num += (a - mx) * (b - my);
        dx += (a - mx) * (a - mx);
        dy += (b - my) * (b - my);
    }
    num / (dx * dy).sqrt()
}

/// Kendall's tau by inversion counting (merge sort), O(n log n).
fn kendall_tau(x: &[f64], y: &[f64]) -> f64 {
    let n = x.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| x[a].total_cmp(&x[b]).then(y[a].total_cmp(&y[b])));
    let mut seq: Vec<f64> = order.iter().map(|&i| y[i]).collect();
    let mut buf = vec![0.0; n];
    let discordant = count_inversions(&mut seq, &mut buf);
    let total = (n * (n - 1) / 2) as f64;
    1.0 - 2.0 * discordant as f64 / total
}

fn count_inversions(seq: &mut [f64], buf: &mut [f64]) -> u64 {
    let n = seq.len();
    if n < 2 {
        return 0;
    }
    let mid = n / 2;
    let (left, right) = seq.split_at_mut(mid);
    let mut inv = count_inversions(left, &mut buf[..mid]) + count_inversions(right, &mut buf[mid..]);
    let (mut i, mut j, mut k) = (0, 0, 0);
    while i < left.len() && j < right.len() {
        if left[i] <= right[j] {
            buf[k] = left[i];
            i += 1;
        } else {
            buf[k] = right[j];
            inv += (left.len() - i) as u64;
            j += 1;
        }
        k += 1;
    }
    while i < left.len() {
        buf[k] = left[i];
        i += 1;
        k += 1;
    }
    while j < right.len() {
        buf[k] = right[j];
        j += 1;
        k += 1;
    }
    seq.copy_from_slice(&buf[..n]);
    inv
}

/// `grid[i][j] = #(rank_x <= i * n/G, rank_y <= j * n/G) / n` by prefix sums.
fn empirical_copula_grid(rx: &[f64], ry: &[f64], g: usize) -> Vec<Vec<f64>> {
    let n = rx.len();
    let mut counts = vec![vec![0u32; g + 1]; g + 1];
    let scale = g as f64 / n as f64;
    for (a, b) in rx.iter().zip(ry) {
        let bi = ((a * scale).ceil() as usize).clamp(1, g);
        let bj = ((b * scale).ceil() as usize).clamp(1, g);
        counts[bi][bj] += 1;
    }
    let mut grid = vec![vec![0.0; g + 1]; g + 1];
    for i in 1..=g {
        let mut row_acc = 0u32;
        for j in 1..=g {
            row_acc += counts[i][j];
            grid[i][j] = grid[i - 1][j] + row_acc as f64;
        }
    }
    let nf = n as f64;
    for row in &mut grid {
        for cell in row.iter_mut() {
            *cell /= nf;
        }
    }
    grid
}

/// One evaluation point of the tail profiles.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct TailPoint {
    pub u: f64,
    /// `C(u, u) / u`, the conditional probability of a joint lower tail.
    pub lambda_lower: f64,
    /// `(2u - 1 + C(1 - u, 1 - u)) / u`, the upper-tail analog at height 1 - u.
    pub lambda_upper: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct TailProfile {
    pub points: Vec<TailPoint>,
    /// Both flags describe the trend as u decreases toward 0.
    pub lower_decreasing: bool,
    pub upper_decreasing: bool,
}

pub fn tail_dependence_profile(model: &CopulaModel, u_list: &[f64]) -> Result<TailProfile> {
    require_bivariate(model)?;
    let mut points = Vec::with_capacity(u_list.len());
    for &u in u_list {
        if !(u > 0.0 && u < 0.5) {
            return Err(CopulaError::InvalidParameter(format!(
                "tail profile arguments must lie in (0, 1/2), got {u}"
            )));
        }
        let lower = model.cdf_interior(&[u, u])? / u;
        let v = 1.0 - u;
        let upper = (2.0 * u - 1.0 + model.cdf_interior(&[v, v])?) / u;
        points.push(TailPoint {
            u,
            lambda_lower: lower,
            lambda_upper: upper,
        });
    }
    let mut sorted = points.clone();
    sorted.sort_by(|a, b| b.u.total_cmp(&a.u));
    let trend = |f: fn(&TailPoint) -> f64| {
        sorted.windows(2).all(|w| f(&w[1]) <= f(&w[0]) + 1e-12)
    };
    Ok(TailProfile {
        lower_decreasing: trend(|p| p.lambda_lower),
        upper_decreasing: trend(|p| p.lambda_upper),
        points,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum QuadrantVerdict {
    Pqd,
    Nqd,
    Mixed,
    Independent,
}

/// Sign field of `C - u1 u2` on an interior lattice.
#[derive(Debug, Clone, Serialize)]
pub struct QuadrantMap {
    pub verdict: QuadrantVerdict,
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
    pub max_excess: f64,
    pub min_excess: f64,
}

pub const QUADRANT_TOL: f64 = 1e-12;

pub fn quadrant_dependence_map(model: &CopulaModel, grid_n: usize) -> Result<QuadrantMap> {
    require_bivariate(model)?;
    let denom = grid_n as f64 + 1.0;
    let mut positive = 0;
    let mut negative = 0;
    let mut zero = 0;
    let mut max_excess = f64::NEG_INFINITY;
    let mut min_excess = f64::INFINITY;
    let mut coords = [0.0f64; 2];
    for i in 1..=grid_n {
        coords[0] = i as f64 / denom;
        for j in 1..=grid_n {
            coords[1] = j as f64 / denom;
            let d = model.cdf_interior(&coords)? - coords[0] * coords[1];
            max_excess = max_excess.max(d);
            min_excess = min_excess.min(d);
            if d > QUADRANT_TOL {
                positive += 1;
            } else if d < -QUADRANT_TOL {
                negative += 1;
            } else {
                zero += 1;
            }
        }
    }
    let verdict = match (positive > 0, negative > 0) {
        (false, false) => QuadrantVerdict::Independent,
        (true, false) => QuadrantVerdict::Pqd,
        (false, true) => QuadrantVerdict::Nqd,
        (true, true) => QuadrantVerdict::Mixed,
    };
    Ok(QuadrantMap {
        verdict,
        positive,
        negative,
        zero,
        max_excess,
        min_excess,
    })
}

/// Rank-based Kendall and Spearman estimates for an existing pseudo-sample.
pub fn sample_rank_correlations(ps: &PseudoSample) -> Result<(f64, f64)> {
    if ps.n_cols() != 2 {
        return Err(CopulaError::DimensionMismatch {
            expected: 2,
            got: ps.n_cols(),
        });
    }
    let x = ps.column(0);
    let y = ps.column(1);
    let rx = ranks(x);
    let ry = ranks(y);
    Ok((kendall_tau(x, y), pearson(&rx, &ry)))
}
