//! Rank-based pseudo-observations, the empirical copula, the leave-one-out
//! pseudo-observation transform, and quantile trimming.

use crate::error::{CopulaError, Result};
use crate::point::UnitPoint;

/// Raw data: N rows by D named columns of finite reals.
#[derive(Debug, Clone)]
pub struct RawSample {
    columns: Vec<Vec<f64>>,
    names: Vec<String>,
}

impl RawSample {
    /// Builds from column vectors; every entry must be finite and every
    /// column the same length N >= 2.
    pub fn new(columns: Vec<Vec<f64>>, names: Vec<String>) -> Result<Self> {
        if columns.len() < 2 {
            return Err(CopulaError::InvalidParameter(format!(
                "need at least two columns, got {}",
                columns.len()
            )));
        }
        if names.len() != columns.len() {
            return Err(CopulaError::InvalidParameter(format!(
                "{} names for {} columns",
                names.len(),
                columns.len()
            )));
        }
        let n = columns[0].len();
        if n < 2 {
            return Err(CopulaError::InvalidParameter(format!(
                "need at least two rows, got {n}"
            )));
        }
        for (d, col) in columns.iter().enumerate() {
            if col.len() != n {
                return Err(CopulaError::DimensionMismatch {
                    expected: n,
                    got: col.len(),
                });
            }
            if let Some(row) = col.iter().position(|x| !x.is_finite()) {
                return Err(CopulaError::NonFiniteInput { row, col: d });
            }
        }
        Ok(Self { columns, names })
    }

    pub fn from_rows(rows: &[Vec<f64>], names: Vec<String>) -> Result<Self> {
        let d = names.len();
        let mut columns = vec![Vec::with_capacity(rows.len()); d];
        for (r, row) in rows.iter().enumerate() {
            if row.len() != d {
                return Err(CopulaError::DimensionMismatch {
                    expected: d,
                    got: row.len(),
                });
            }
            for (c, &x) in row.iter().enumerate() {
                if !x.is_finite() {
                    return Err(CopulaError::NonFiniteInput { row: r, col: c });
                }
                columns[c].push(x);
            }
        }
        Self::new(columns, names)
    }

    pub fn n_rows(&self) -> usize {
        self.columns[0].len()
    }

    pub fn n_cols(&self) -> usize {
        self.columns.len()
    }

    pub fn column(&self, d: usize) -> &[f64] {
        &self.columns[d]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }
}

/// Rank-based pseudo-observations: per column, average rank over N + 1.
#[derive(Debug, Clone)]
pub struct PseudoSample {
    columns: Vec<Vec<f64>>,
    tie_counts: Vec<usize>,
}

impl PseudoSample {
    pub fn n_rows(&self) -> usize {
        self.columns[0].len()
    }

    pub fn n_cols(&self) -> usize {
        self.columns.len()
    }

    pub fn column(&self, d: usize) -> &[f64] {
        &self.columns[d]
    }

    /// Number of observations per column that share their value with at
    /// least one other observation.
    pub fn tie_counts(&self) -> &[usize] {
        &self.tie_counts
    }

    pub fn row(&self, i: usize) -> Vec<f64> {
        self.columns.iter().map(|c| c[i]).collect()
    }

    /// Builds directly from already-uniform columns (each entry in (0, 1)).
    /// Mostly useful in tests; data pipelines should rank raw values.
    pub fn from_uniform_columns(columns: Vec<Vec<f64>>) -> Result<Self> {
        let n = columns.first().map(|c| c.len()).unwrap_or(0);
        if columns.len() < 2 || n < 2 {
            return Err(CopulaError::InvalidParameter(
                "need at least two columns of at least two rows".into(),
            ));
        }
        for col in &columns {
            if col.len() != n {
                return Err(CopulaError::DimensionMismatch {
                    expected: n,
                    got: col.len(),
                });
            }
            if col.iter().any(|&u| !(u > 0.0 && u < 1.0)) {
                return Err(CopulaError::InvalidParameter(
                    "pseudo-observations must lie strictly inside (0, 1)".into(),
                ));
            }
        }
        let tie_counts = vec![0; columns.len()];
        Ok(Self {
            columns,
            tie_counts,
        })
    }
}

/// Average rank of each entry (ties share the mean of their rank range).
fn average_ranks(values: &[f64]) -> (Vec<f64>, usize) {
    let n = values.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| values[a].total_cmp(&values[b]));
    let mut ranks = vec![0.0; n];
    let mut tied = 0usize;
    let mut start = 0;
    while start < n {
        let mut end = start;
        while end + 1 < n && values[order[end + 1]] == values[order[start]] {
            end += 1;
        }
        // 1-based ranks start..=end share the average (start + end) / 2 + 1
        let avg = (start + end) as f64 / 2.0 + 1.0;
        for &idx in &order[start..=end] {
            ranks[idx] = avg;
        }
        if end > start {
            tied += end - start + 1;
        }
        start = end + 1;
    }
    (ranks, tied)
}

/// Empirical quantile transform: each value becomes its average rank divided
/// by N + 1, so every pseudo-observation lies strictly inside (0, 1).
pub fn pseudo_observations(raw: &RawSample) -> PseudoSample {
    let n = raw.n_rows() as f64;
    let mut columns = Vec::with_capacity(raw.n_cols());
    let mut tie_counts = Vec::with_capacity(raw.n_cols());
    for d in 0..raw.n_cols() {
        let (ranks, tied) = average_ranks(raw.column(d));
        columns.push(ranks.into_iter().map(|r| r / (n + 1.0)).collect());
        tie_counts.push(tied);
    }
    PseudoSample {
        columns,
        tie_counts,
    }
}

/// Empirical copula: the fraction of pseudo-observations componentwise below
/// the evaluation point (weak inequalities).
pub fn empirical_copula(ps: &PseudoSample, p: &UnitPoint) -> Result<f64> {
    if p.dim() != ps.n_cols() {
        return Err(CopulaError::DimensionMismatch {
            expected: ps.n_cols(),
            got: p.dim(),
        });
    }
    Ok(empirical_copula_at(ps, p.coords()))
}

pub(crate) fn empirical_copula_at(ps: &PseudoSample, coords: &[f64]) -> f64 {
    let n = ps.n_rows();
    let mut count = 0usize;
    'rows: for i in 0..n {
        for (d, &u) in coords.iter().enumerate() {
            if ps.columns[d][i] > u {
                continue 'rows;
            }
        }
        count += 1;
    }
    count as f64 / n as f64
}

/// Leave-one-out pseudo-observation of row `i`: for each column the fraction
/// of the other rows at or below row i's value, with the strict-minimum case
/// mapped to 1/N.
pub fn loo_pseudo(ps: &PseudoSample, i: usize) -> Result<Vec<f64>> {
    let n = ps.n_rows();
    if i >= n {
        return Err(CopulaError::IndexOutOfRange { index: i, len: n });
    }
    let mut out = Vec::with_capacity(ps.n_cols());
    for col in &ps.columns {
        let ui = col[i];
        let mut count = 0usize;
        let mut min_other = f64::INFINITY;
        for (j, &uj) in col.iter().enumerate() {
            if j == i {
                continue;
            }
            if uj <= ui {
                count += 1;
            }
            min_other = min_other.min(uj);
        }
        let value = if ui >= min_other {
            count as f64 / n as f64
        } else {
            1.0 / n as f64
        };
        out.push(value);
    }
    Ok(out)
}

/// Empirical quantile with linear interpolation between order statistics
/// (the R type-7 convention).
fn interpolated_quantile(sorted: &[f64], p: f64) -> f64 {
    let n = sorted.len();
    if n == 1 {
        return sorted[0];
    }
    let h = (n - 1) as f64 * p;
    let lo = h.floor() as usize;
    let frac = h - lo as f64;
    if lo + 1 >= n {
        return sorted[n - 1];
    }
    sorted[lo] + frac * (sorted[lo + 1] - sorted[lo])
}

/// Drops every row where any column's value lies strictly below that
/// column's `lo` quantile or strictly above its `hi` quantile.
pub fn quantile_trim(raw: &RawSample, lo: f64, hi: f64) -> Result<RawSample> {
    if !(0.0..=1.0).contains(&lo) || !(0.0..=1.0).contains(&hi) || lo >= hi {
        return Err(CopulaError::InvalidParameter(format!(
            "trim bounds must satisfy 0 <= lo < hi <= 1, got ({lo}, {hi})"
        )));
    }
    let d = raw.n_cols();
    let n = raw.n_rows();
    let mut bounds = Vec::with_capacity(d);
    for c in 0..d {
        let mut sorted = raw.column(c).to_vec();
        sorted.sort_by(f64::total_cmp);
        bounds.push((
            interpolated_quantile(&sorted, lo),
            interpolated_quantile(&sorted, hi),
        ));
    }
    let keep: Vec<usize> = (0..n)
        .filter(|&i| {
            (0..d).all(|c| {
                let x = raw.column(c)[i];
                x >= bounds[c].0 && x <= bounds[c].1
            })
        })
        .collect();
    if keep.len() < 2 {
        return Err(CopulaError::EmptyAfterTrim);
    }
    let columns = (0..d)
        .map(|c| keep.iter().map(|&i| raw.column(c)[i]).collect())
        .collect();
    RawSample::new(columns, raw.names().to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn raw2(a: Vec<f64>, b: Vec<f64>) -> RawSample {
        RawSample::new(vec![a, b], vec!["x".into(), "y".into()]).unwrap()
    }

    #[test]
    fn distinct_column_ranks() {
        let raw = raw2(vec![10.0, 20.0, 30.0], vec![1.0, 2.0, 3.0]);
        let ps = pseudo_observations(&raw);
        assert_eq!(ps.column(0), &[0.25, 0.5, 0.75]);
        assert_eq!(ps.tie_counts(), &[0, 0]);
    }

    #[test]
    fn tied_values_share_their_average_rank() {
        let raw = raw2(vec![10.0, 10.0, 30.0], vec![1.0, 2.0, 3.0]);
        let ps = pseudo_observations(&raw);
        assert_eq!(ps.column(0), &[0.375, 0.375, 0.75]);
        assert_eq!(ps.tie_counts()[0], 2);
    }

    #[test]
    fn increasing_column_gets_the_uniform_grid() {
        let n = 40;
        let raw = raw2(
            (0..n).map(|i| (i * i) as f64).collect(),
            (0..n).map(|i| i as f64).collect(),
        );
        let ps = pseudo_observations(&raw);
        for (i, &u) in ps.column(0).iter().enumerate() {
            assert!((u - (i as f64 + 1.0) / (n as f64 + 1.0)).abs() < 1e-15);
        }
    }

    #[test]
    fn ranks_are_invariant_under_monotone_transforms() {
        let xs = vec![3.0, -1.5, 12.0, 0.2, 7.7, -4.0];
        let ys = vec![1.0, 2.0, 3.0, 4.0, 5.0, 6.0];
        let a = pseudo_observations(&raw2(xs.clone(), ys.clone()));
        let exp = pseudo_observations(&raw2(xs.iter().map(|x| x.exp()).collect(), ys.clone()));
        let affine = pseudo_observations(&raw2(xs.iter().map(|x| 3.0 * x + 11.0).collect(), ys));
        assert_eq!(a.column(0), exp.column(0));
        assert_eq!(a.column(0), affine.column(0));
    }

    #[test]
    fn empirical_copula_counts() {
        // perfectly comonotone sample of four points
        let raw = raw2(vec![1.0, 2.0, 3.0, 4.0], vec![10.0, 20.0, 30.0, 40.0]);
        let ps = pseudo_observations(&raw);
        let at = |u: f64, v: f64| {
            empirical_copula(&ps, &UnitPoint::bivariate(u, v).unwrap()).unwrap()
        };
        assert_eq!(at(0.5, 0.5), 0.5);
        assert_eq!(at(1.0 - 1e-9, 1.0 - 1e-9), 1.0);
        assert_eq!(at(0.1, 0.1), 0.0);
    }

    #[test]
    fn empirical_copula_is_monotone() {
        let raw = raw2(
            vec![5.0, 1.0, 4.0, 2.0, 3.0, 9.0, 7.0],
            vec![1.0, 7.0, 3.0, 2.0, 9.0, 4.0, 5.0],
        );
        let ps = pseudo_observations(&raw);
        let mut prev_row = [0.0; 20];
        for i in 1..=20 {
            let mut prev = 0.0;
            for j in 1..=20 {
                let (u, v) = (i as f64 / 21.0, j as f64 / 21.0);
                let c = empirical_copula_at(&ps, &[u, v]);
                assert!(c >= prev - 1e-15);
                assert!(c >= prev_row[j - 1] - 1e-15);
                prev = c;
                prev_row[j - 1] = c;
            }
        }
    }

    #[test]
    fn loo_counts_other_rows() {
        let raw = raw2(vec![1.0, 2.0, 3.0], vec![3.0, 2.0, 1.0]);
        let ps = pseudo_observations(&raw);
        // row 2 holds the column maximum: both other rows are at or below
        let v = loo_pseudo(&ps, 2).unwrap();
        assert!((v[0] - 2.0 / 3.0).abs() < 1e-15);
        // and the column minimum in the second coordinate maps to 1/N
        assert!((v[1] - 1.0 / 3.0).abs() < 1e-15);
        let first = loo_pseudo(&ps, 0).unwrap();
        assert!((first[0] - 1.0 / 3.0).abs() < 1e-15); // strict minimum branch
        assert!((first[1] - 2.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn loo_without_ties_is_rank_among_others() {
        let xs: Vec<f64> = vec![0.9, 0.1, 0.5, 0.3, 0.7];
        let raw = raw2(xs.clone(), vec![1.0, 2.0, 3.0, 4.0, 5.0]);
        let ps = pseudo_observations(&raw);
        for i in 0..5 {
            let v = loo_pseudo(&ps, i).unwrap()[0];
            let rank_among_others = xs
                .iter()
                .enumerate()
                .filter(|&(j, &x)| j != i && x <= xs[i])
                .count();
            if rank_among_others == 0 {
                assert!((v - 0.2).abs() < 1e-15);
            } else {
                assert!((v - rank_among_others as f64 / 5.0).abs() < 1e-15);
            }
        }
    }

    #[test]
    fn trim_identity_and_tail_drop() {
        let n = 100;
        let xs: Vec<f64> = (0..n).map(|i| i as f64).collect();
        let ys: Vec<f64> = (0..n).map(|i| ((i * 37) % 100) as f64).collect();
        let raw = raw2(xs, ys);
        let same = quantile_trim(&raw, 0.0, 1.0).unwrap();
        assert_eq!(same.n_rows(), n);
        let trimmed = quantile_trim(&raw, 0.01, 0.99).unwrap();
        assert!(trimmed.n_rows() >= 96, "kept {}", trimmed.n_rows());
        assert!(trimmed.n_rows() < n);
    }

    #[test]
    fn trim_ignores_constant_columns() {
        let raw = raw2(vec![1.0; 50], (0..50).map(|i| i as f64).collect());
        let trimmed = quantile_trim(&raw, 0.05, 0.95).unwrap();
        // only the varying column can drop rows
        assert!(trimmed.n_rows() >= 44);
    }

    #[test]
    fn trim_rejects_bad_bounds_and_empty_output() {
        let raw = raw2(vec![1.0, 2.0, 3.0], vec![1.0, 2.0, 3.0]);
        assert!(quantile_trim(&raw, 0.9, 0.1).is_err());
        assert!(matches!(
            quantile_trim(&raw, 0.49999, 0.50001),
            Err(CopulaError::EmptyAfterTrim)
        ));
    }

    #[test]
    fn rejects_non_finite_input() {
        let err = RawSample::new(
            vec![vec![1.0, f64::NAN], vec![1.0, 2.0]],
            vec!["x".into(), "y".into()],
        )
        .unwrap_err();
        assert!(matches!(err, CopulaError::NonFiniteInput { row: 1, col: 0 }));
    }
}
