//! Theoretical bounds paired with measured query counts.

use serde::Serialize;

use crate::bounds::{det_upper, f_at_optimum, f_of_k, lower_bound_value, optimal_k, schedule_applies};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct QueryStats {
    pub min: usize,
    pub mean: f64,
    pub max: usize,
}

impl QueryStats {
    pub fn from_counts(counts: &[usize]) -> Option<Self> {
        let (&min, &max) = (counts.iter().min()?, counts.iter().max()?);
        let mean = counts.iter().sum::<usize>() as f64 / counts.len() as f64;
        Some(Self { min, mean, max })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundsReport {
    pub n: usize,
    pub t: usize,
    pub s: usize,
    pub delta: usize,
    /// Success probability used for `rand_lower`.
    pub c: f64,
    pub det_upper: f64,
    pub rand_lower: f64,
    /// Whether `3sΔ < n`, so the separator schedule beats exhaustive search.
    pub schedule_applies: bool,
    pub k_hat: Vec<usize>,
    pub f_k_hat: Option<f64>,
    pub f_k_star: Option<f64>,
    pub measured_queries: Option<QueryStats>,
    /// `successes/trials`.
    pub measured_success: Option<String>,
}

/// Evaluates the closed-form bounds; the measured fields are left empty.
pub fn cmd_bounds(n: usize, t: usize, s: usize, delta: usize, c: f64) -> BoundsReport {
    let applies = t >= 2 && schedule_applies(n, s, delta);
    let (k_hat, f_k_hat, f_k_star) = if applies {
        let k = optimal_k(n, s, delta, t);
        let kf: Vec<f64> = k.iter().map(|&x| x as f64).collect();
        let fk = f_of_k(n, s, delta, &kf);
        (k, Some(fk), Some(f_at_optimum(n, s, delta, t)))
    } else {
        (Vec::new(), None, None)
    };
    BoundsReport {
        n,
        t,
        s,
        delta,
        c,
        det_upper: det_upper(n, t, s, delta),
        rand_lower: lower_bound_value(n, t, c),
        schedule_applies: applies,
        k_hat,
        f_k_hat,
        f_k_star,
        measured_queries: None,
        measured_success: None,
    }
}
