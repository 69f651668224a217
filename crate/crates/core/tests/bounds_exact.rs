use rollout_core::bounds::*;
use rollout_testkit::exact;

const REL: f64 = 1e-12;

#[test]
fn evaluators_match_rational_arithmetic() {
    for n in 1..=100i64 {
        let nu = n as usize;
        if n >= 3 {
            assert!(exact::rel_err(consec_ss_bound(nu).unwrap(), &exact::consec_ss(n)) < REL);
            assert!(exact::rel_err(consec_kp_bound(nu).unwrap(), &exact::consec_kp(n)) < REL);
        }
        if n >= 2 {
            assert!(exact::rel_err(exh_ss_bound(nu).unwrap(), &exact::exh_ss(n)) < REL, "n={n}");
            assert!(exact::rel_err(exh_ss_log_bound(nu).unwrap(), &exact::exh_ss_log(n)) < REL, "n={n}");
        }
        for include_t in [true, false] {
            let got = exh_kp_bound(nu, include_t).unwrap();
            let err = exact::rel_err(got, &exact::exh_kp(n, include_t));
            assert!(err < REL, "n={n} include_t={include_t} err={err:e}");
        }
        assert!(exact::rel_err(harmonic(nu), &exact::harmonic(n as u64)) < REL);
    }
}

#[test]
fn t_term_matches_printed_form_and_is_positive() {
    for m in 0..=50i64 {
        for j in 1..=m + 1 {
            let exact_t = exact::exh_kp_t(j, m);
            let got = exh_kp_t(j as usize, m as usize).unwrap();
            assert!(exact::rel_err(got, &exact_t) < REL, "j={j} m={m}");
            assert!(exact::to_f64(&exact_t) > 0.0);
            assert!(got > 0.0);
        }
    }
}

#[test]
fn log_bound_dominates_sum_bound() {
    for n in 2..=200 {
        assert!(exh_ss_bound(n).unwrap() <= exh_ss_log_bound(n).unwrap(), "n={n}");
    }
}

#[test]
fn dropping_t_loosens_the_knapsack_bound() {
    for n in 1..=200 {
        assert!(exh_kp_bound(n, false).unwrap() <= exh_kp_bound(n, true).unwrap(), "n={n}");
    }
}

#[test]
fn consecutive_bounds_are_monotone_toward_limits() {
    for n in 3..200 {
        let (a, b) = (consec_ss_bound(n).unwrap(), consec_ss_bound(n + 1).unwrap());
        assert!(b < a && b > 13.0 / 60.0);
        let (a, b) = (consec_kp_bound(n).unwrap(), consec_kp_bound(n + 1).unwrap());
        assert!(b > a && b < 59.0 / 288.0);
    }
}

#[test]
fn exhaustive_subset_sum_decays_like_log_n_over_n() {
    let mut n = 10;
    let mut prev = f64::INFINITY;
    while n <= 10_000 {
        let v = exh_ss_bound(n).unwrap();
        assert!(v > 0.0 && v < prev);
        let ratio = v * n as f64 / (n as f64).ln();
        assert!(ratio > 0.1 && ratio < 1.0, "n={n} ratio={ratio}");
        prev = v;
        n *= 2;
    }
}

#[test]
fn exhaustive_knapsack_approaches_one() {
    let mut prev = exh_kp_bound(3, true).unwrap();
    for n in 4..=200 {
        let v = exh_kp_bound(n, true).unwrap();
        assert!(v > prev && v < 1.0, "n={n}");
        prev = v;
    }
    for n in [10usize, 20, 50, 100, 200] {
        let shortfall = 1.0 - exh_kp_bound(n, true).unwrap();
        let ln = (n as f64).ln();
        let scaled = shortfall * n as f64 / (ln * ln);
        assert!(scaled > 0.0 && scaled < 2.0, "n={n} scaled={scaled}");
    }
}

#[test]
fn gap_cdf_is_a_distribution_with_mean_one_third() {
    let steps = 1000;
    let mut prev = 0.0;
    for i in 0..=steps {
        let f = greedy_gap_cdf(i as f64 / steps as f64).unwrap();
        assert!(f >= prev);
        prev = f;
    }
    // Simpson's rule is exact for the quadratic 1 - F.
    let h = 1.0 / steps as f64;
    let mut acc = 0.0;
    for i in 0..=steps {
        let x = i as f64 * h;
        let weight = if i == 0 || i == steps { 1.0 } else if i % 2 == 1 { 4.0 } else { 2.0 };
        acc += weight * (1.0 - greedy_gap_cdf(x).unwrap());
    }
    assert!((acc * h / 3.0 - GREEDY_GAP_MEAN).abs() < 1e-12);
}
