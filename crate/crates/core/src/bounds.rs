//! Closed-form query bounds and the shatter-threshold schedule.
//!
//! With separation number `s` and maximum degree `Δ`, the t-round separator
//! algorithm with thresholds `K_1 ≥ … ≥ K_{t−1}` issues fewer than
//!
//! ```text
//! f(K) = 3sn/K_1 + Σ_{i=2}^{t−1} 3sΔ·K_{i−1}/K_i + Δ·K_{t−1}
//! ```
//!
//! queries. The continuous minimizer is `K*_i = (3s)^{i/t}(n/Δ)^{1−i/t}`,
//! where `f(K*) = t(3sΔ)^{1−1/t} n^{1/t}`; the integer schedule rounds it up.

/// Continuous minimizer `K*` of [`f_of_k`], length `t − 1`.
pub fn continuous_optimal_k(n: usize, s: usize, delta: usize, t: usize) -> Vec<f64> {
    let (n, s, delta, tf) = (n as f64, s.max(1) as f64, delta.max(1) as f64, t as f64);
    (1..t)
        .map(|i| {
            let e = i as f64 / tf;
            (3.0 * s).powf(e) * (n / delta).powf(1.0 - e)
        })
        .collect()
}

/// Integer thresholds `K̂_i = ⌈K*_i⌉`, clamped to `[1, n]` and made
/// nonincreasing by a running minimum.
pub fn optimal_k(n: usize, s: usize, delta: usize, t: usize) -> Vec<usize> {
    let mut prev = n.max(1);
    continuous_optimal_k(n, s, delta, t)
        .into_iter()
        .map(|k| {
            // guard against 87.00000000001 style round-off before the ceiling
            let rounded = k.round();
            let ceil = if (k - rounded).abs() <= 1e-9 * k.max(1.0) { rounded } else { k.ceil() };
            let ki = (ceil.max(1.0).min(n as f64) as usize).clamp(1, n.max(1)).min(prev);
            prev = ki;
            ki
        })
        .collect()
}

/// The round-cost function `f(K)` for real-valued thresholds.
pub fn f_of_k(n: usize, s: usize, delta: usize, k: &[f64]) -> f64 {
    let (n, s, delta) = (n as f64, s as f64, delta as f64);
    let Some((&first, _)) = k.split_first() else {
        return n;
    };
    let middle: f64 = k.windows(2).map(|w| 3.0 * s * delta * w[0] / w[1]).sum();
    3.0 * s * n / first + middle + delta * k[k.len() - 1]
}

/// `f(K*) = t(3sΔ)^{1−1/t} n^{1/t}`.
pub fn f_at_optimum(n: usize, s: usize, delta: usize, t: usize) -> f64 {
    let tf = t as f64;
    tf * (3.0 * s as f64 * delta as f64).powf(1.0 - 1.0 / tf) * (n as f64).powf(1.0 / tf)
}

/// `4t(sΔ)^{1−1/t} n^{1/t}`, the bound `f(K̂)` stays below when `3sΔ < n`.
pub fn rounded_schedule_bound(n: usize, s: usize, delta: usize, t: usize) -> f64 {
    let tf = t as f64;
    4.0 * tf * (s as f64 * delta as f64).powf(1.0 - 1.0 / tf) * (n as f64).powf(1.0 / tf)
}

/// Deterministic upper bound `min(n, 4t n^{1/t} (sΔ)^{1−1/t})`.
pub fn det_upper(n: usize, t: usize, s: usize, delta: usize) -> f64 {
    rounded_schedule_bound(n, s, delta, t).min(n as f64)
}

/// Whether the separator schedule beats querying everything (`3sΔ < n`).
pub fn schedule_applies(n: usize, s: usize, delta: usize) -> bool {
    3 * s as u128 * delta as u128 > 0 && (3 * s as u128 * delta as u128) < n as u128
}

/// Lower bound on expected queries of a t-round algorithm that succeeds with
/// probability `c` against the uniform staircase distribution:
/// `c·t·n^{1/t} + t(1−c)^{1−1/t} − t − t·n^{1/t−1}`, and `⌈cn⌉ − 1` for `t = 1`.
pub fn lower_bound_value(n: usize, t: usize, c: f64) -> f64 {
    let nf = n as f64;
    if t <= 1 {
        return (c * nf - 1e-12).ceil() - 1.0;
    }
    let tf = t as f64;
    c * tf * nf.powf(1.0 / tf) + tf * (1.0 - c).max(0.0).powf(1.0 - 1.0 / tf) - tf - tf * nf.powf(1.0 / tf - 1.0)
}

/// Expected rank of the best of `q` uniform samples (with replacement) among
/// `n` ranked items: `Σ_{i=0}^{n−1} (1 − i/n)^q`.
pub fn expected_best_rank(n: usize, q: usize) -> f64 {
    let nf = n as f64;
    let qf = q as f64;
    // sum small terms first for accuracy
    (0..n).rev().map(|i| (qf * (-(i as f64) / nf).ln_1p()).exp()).sum()
}

/// Upper bound on `|B(v, ρ)|` for maximum degree `Δ`: `2ρ + 1` when `Δ ≤ 2`
/// (inclusive), `Δ/(Δ−2)·(Δ−1)^ρ` when `Δ ≥ 3` (strict).
pub fn ball_bound(delta: usize, rho: usize) -> f64 {
    if delta <= 2 {
        (2 * rho + 1) as f64
    } else {
        let d = delta as f64;
        d / (d - 2.0) * (d - 1.0).powi(rho as i32)
    }
}

/// Checks `size` against [`ball_bound`] with the matching strictness.
pub fn ball_within_bound(delta: usize, rho: usize, size: usize) -> bool {
    let bound = ball_bound(delta, rho);
    if delta <= 2 {
        size as f64 <= bound
    } else {
        (size as f64) < bound
    }
}

/// `(1 − x^{2/t−1}) / (x^{1/t} − 1)`, bounded by `t − 1` for `x > 1`.
pub fn rounding_ratio(x: f64, t: usize) -> f64 {
    let tf = t as f64;
    (1.0 - x.powf(2.0 / tf - 1.0)) / (x.powf(1.0 / tf) - 1.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs().max(1e-300)
    }

    #[test]
    fn schedule_examples() {
        assert_eq!(optimal_k(10000, 1, 4, 2), vec![87]);
        // t = 2 is ⌈√(3sn/Δ)⌉
        for (n, s, d) in [(1000, 1, 3), (500, 2, 2), (4096, 1, 3)] {
            let expected = (3.0 * s as f64 * n as f64 / d as f64).sqrt().ceil() as usize;
            assert_eq!(optimal_k(n, s, d, 2), vec![expected]);
        }
        let k = optimal_k(1023, 1, 3, 5);
        assert_eq!(k.len(), 4);
        assert!(k.windows(2).all(|w| w[0] >= w[1]));
        assert!(k.iter().all(|&x| (1..=1023).contains(&x)));
    }

    #[test]
    fn f_specializations() {
        let k = [30.0];
        assert!(rel(f_of_k(1000, 2, 3, &k), 3.0 * 2.0 * 1000.0 / 30.0 + 3.0 * 30.0) < 1e-12);
        for (n, s, d, t) in [(1000, 1, 2, 2), (4096, 1, 3, 4), (100000, 2, 5, 7)] {
            let ks = continuous_optimal_k(n, s, d, t);
            assert!(rel(f_of_k(n, s, d, &ks), f_at_optimum(n, s, d, t)) < 1e-9);
        }
    }

    #[test]
    fn upper_bound_examples() {
        let expected = 8.0 * 16.0 * 2f64.sqrt();
        assert!(rel(det_upper(256, 2, 1, 2), expected) < 1e-12);
        assert_eq!(det_upper(100, 2, 20, 3), 100.0);
        assert!(!schedule_applies(100, 20, 3));
        assert!(schedule_applies(100, 1, 3));
    }

    #[test]
    fn lower_bound_examples() {
        let n = 400.0f64;
        assert!(rel(lower_bound_value(400, 2, 1.0), 2.0 * n.sqrt() - 2.0 - 2.0 / n.sqrt()) < 1e-12);
        assert_eq!(lower_bound_value(57, 1, 1.0), 56.0);
        assert_eq!(lower_bound_value(10, 1, 0.25), 2.0);
        let v = lower_bound_value(256, 8, 1.0);
        assert!(rel(v, 16.0 - 8.0 - 8.0 * 256f64.powf(-7.0 / 8.0)) < 1e-12);
    }

    #[test]
    fn expected_rank_small_cases() {
        // q = 1: Σ (1 − i/n) = (n + 1)/2
        assert!(rel(expected_best_rank(10, 1), 5.5) < 1e-12);
        // n = 2, q = 2: 1 + 1/4
        assert!(rel(expected_best_rank(2, 2), 1.25) < 1e-12);
    }

    #[test]
    fn ball_bounds() {
        assert_eq!(ball_bound(2, 3), 7.0);
        assert!(ball_within_bound(2, 3, 7));
        assert!(!ball_within_bound(3, 0, 3));
        assert!(ball_within_bound(3, 1, 4) && !ball_within_bound(3, 1, 6));
    }

    proptest! {
        #[test]
        fn am_gm_optimality(
            n in 100usize..100_000,
            s in 1usize..4,
            d in 1usize..6,
            t in 2usize..7,
            scale in proptest::collection::vec(0.05f64..20.0, 6),
        ) {
            let star = continuous_optimal_k(n, s, d, t);
            let k: Vec<f64> = star.iter().zip(&scale).map(|(a, b)| a * b).collect();
            prop_assert!(f_of_k(n, s, d, &k) >= f_at_optimum(n, s, d, t) * (1.0 - 1e-12));
        }

        #[test]
        fn lower_bound_monotone(n in 2usize..10_000, t in 1usize..8, c1 in 0.01f64..1.0, c2 in 0.01f64..1.0) {
            let (lo, hi) = if c1 < c2 { (c1, c2) } else { (c2, c1) };
            prop_assert!(lower_bound_value(n, t, lo) <= lower_bound_value(n, t, hi) + 1e-9);
            prop_assert!(lower_bound_value(n, t, hi) <= lower_bound_value(n + 1, t, hi) + 1e-9);
        }
    }
}
