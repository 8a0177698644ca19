//! Acceptance suite: the eight headline criteria, one pass/fail line each.
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng as _, SeedableRng};
use rand_chacha::ChaCha8Rng;

use alphadic::algebra::PisotSpec;
use alphadic::alpha_adic::{
    alpha_expand, enumerate_expansions, expansions_of_minus_one, normalize_preperiod,
    ExpansionSearch,
};
use alphadic::beta::{beta_expand, renyi_d, renyi_d_star};
use alphadic::rational_psi::{
    psi_step, rational_alpha_expand, rational_alpha_represent, rational_alpha_represent_trace,
};
use alphadic::transducer::{
    build_normalization_transducer, consecutive_a_bound, run_left_word,
};
use alphadic::words::{
    is_weakly_admissible, pi_alpha_left, pi_beta_right, Digit, FiniteWord, LeftWord,
};

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn report(criterion: usize, what: &str, pass: bool) {
    println!(
        "acceptance {criterion}: {} - {what}",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "acceptance criterion {criterion} failed: {what}");
}

/// Criterion 1: golden mean, the two expansions of -1 within bounds (6,6).
#[test]
fn criterion_1_golden_minus_one_enumeration() {
    let start = Instant::now();
    let spec = PisotSpec::new(&[1, 1]).unwrap();
    let set = enumerate_expansions(&spec.from_int(-1), 6, 6).unwrap();
    let words: Vec<String> = set.expansions.iter().map(|w| w.to_string()).collect();
    let ok = words == ["~(10)", "~(10)0.1"] && start.elapsed() < Duration::from_secs(1);
    report(1, "golden -1 enumerates to { ~(10), ~(10)0.1 } in under 1s", ok);
}

/// Criterion 2: Algorithm 1 on -4 and the pre-period normalization step.
#[test]
fn criterion_2_algorithm_one_minus_four() {
    let start = Instant::now();
    let spec = PisotSpec::new(&[1, 1]).unwrap();
    let w = alpha_expand(&spec.from_int(-4)).unwrap();
    let algo_ok = w.to_string() == "~(10)0100.001";
    // The worked normalization: nu(1 -1 1 -1 . 1 0) = 0100.001.
    let signed = FiniteWord::new(vec![1, -1, 1, -1, 1, 0], 4).unwrap();
    let (norm, _) = normalize_preperiod(&signed, &spec).unwrap();
    let norm_ok = norm.to_string() == "0100.001";
    let ok = algo_ok && norm_ok && start.elapsed() < Duration::from_secs(1);
    report(2, "golden -4 -> ~(10)0100.001 with nu(1 -1 1 -1 . 1 0) = 0100.001", ok);
}

/// Criterion 3: exact alpha-value of the reference expansion of -2.
#[test]
fn criterion_3_alpha_value_of_minus_two() {
    let spec = PisotSpec::new(&[1, 1]).unwrap();
    let w = LeftWord::parse("~(10)010.1").unwrap();
    let ok = pi_alpha_left(&w, &spec) == spec.from_int(-2);
    report(3, "pi_alpha(~(10)010.1) = -2 exactly", ok);
}

/// Criterion 4: cubic base data and the three expansions of -1.
#[test]
fn criterion_4_cubic_minus_one() {
    let spec = PisotSpec::new(&[1, 0, 1]).unwrap();
    let d = renyi_d(&spec).unwrap();
    let d_ok = d.to_string() == "101";
    let star = renyi_d_star(&spec);
    let star_ok = star.head.is_empty() && star.period == vec![1, 0, 0];
    let set = expansions_of_minus_one(&spec).unwrap();
    let words: Vec<String> = set.expansions.iter().map(|w| w.to_string()).collect();
    let set_ok = words == ["~(100)", "~(100)0.01", "~(100)01.00001"];
    report(
        4,
        "cubic: d=101, d*=(100)^w, -1 has the three expected expansions",
        d_ok && star_ok && set_ok,
    );
}

/// Criterion 5: the a=3 iteration table and words for 1/2 and 3/2.
#[test]
fn criterion_5_psi_table_and_words() {
    let spec = PisotSpec::new(&[1, 3]).unwrap();
    let (w_half, trace) = rational_alpha_represent_trace(&rat(1, 2), &spec, None).unwrap();
    let word_ok = w_half.to_string() == "~(012)1";
    // The recurring state pair (-1/2, 3/2) from the worked table.
    let state_ok = trace
        .states
        .iter()
        .any(|s| s.carry_hi == rat(-1, 2) && s.carry_lo == rat(3, 2));
    let digits_ok = trace.emitted == vec![1, 2, 1, 0]
        && trace.period_start == 1
        && trace.period_len == 3;
    let w32 = rational_alpha_expand(&rat(3, 2), &spec, None).unwrap();
    let w32_ok = w32.to_string() == "~(012)2" && w32.fraction.is_empty();
    // Cross-validation: the general Q(beta) construction agrees on 1/2.
    let cross = alpha_expand(&spec.from_rational(rat(1, 2))).unwrap();
    let cross_ok = cross == w_half;
    report(
        5,
        "a=3: psi table for 1/2 (state (-1/2,3/2), word ~(012)1), 3/2 -> ~(012)2, paths agree",
        word_ok && state_ok && digits_ok && w32_ok && cross_ok,
    );
}

/// Criterion 6: randomized property suite, 500 cases per spec, fixed seed.
#[test]
fn criterion_6_property_suite() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut ok = true;
    for coeffs in [[1i64, 1], [1, 2], [1, 3]] {
        let spec = PisotSpec::new(&coeffs).unwrap();
        let a = coeffs[1];
        for _ in 0..500 {
            // Round-trip of the greedy expansion on x = n + p/q in [0, ~8).
            let n = rng.gen_range(0..8i64);
            let q = rat(n, 1) + rat(rng.gen_range(0..12i64), rng.gen_range(1..12i64));
            let x = spec.from_rational(q.clone());
            let w = beta_expand(&x).unwrap();
            ok &= pi_beta_right(&w, &spec) == x;

            // psi preserves the carried value at every step, and the digit
            // bound intervals hold (checked for r in (-1, 1)).
            let r = rat(rng.gen_range(-9..=9i64), 10);
            let (x3, x2, d) = psi_step(&rat(0, 1), &rat(0, 1), &r, a);
            // Value preservation in the field: x3 b^2 + x2 b + d = r.
            let beta = spec.beta();
            let b2 = beta.checked_mul(&beta).unwrap();
            let lhs = &(&b2.scale(&x3) + &beta.scale(&x2))
                + &spec.from_rational(BigRational::from(d.clone()));
            ok &= lhs == spec.from_rational(r.clone());
            ok &= x3 > rat(-1, 1) && x3 <= rat(0, 1);
            ok &= x2 > rat(-1, 1) && x2 < rat(a, 1);

            // Every alpha-adic output is weakly admissible with the right value.
            let wq = rational_alpha_represent(&r, &spec, None).unwrap();
            ok &= pi_alpha_left(&wq, &spec) == spec.from_rational(r.clone());
            let wn = rational_alpha_expand(&r, &spec, None).unwrap();
            ok &= is_weakly_admissible(&wn, &spec).unwrap();
            ok &= pi_alpha_left(&wn, &spec) == spec.from_rational(r.clone());

            // Transducer: value-preserving, admissible output, idempotent.
            let c = consecutive_a_bound(a, 10);
            let t = build_normalization_transducer(a, c);
            let mut digits: Vec<Digit> = Vec::new();
            let mut run = 0usize;
            for _ in 0..10 {
                let d = rng.gen_range(0..=a);
                run = if d == a { run + 1 } else { 0 };
                if run + 2 >= c {
                    digits.push(0);
                    run = 0;
                } else {
                    digits.push(d);
                }
            }
            let word = LeftWord::new(Vec::new(), digits, Vec::new()).canonicalize();
            if let Ok(out) = run_left_word(&t, &word) {
                ok &= pi_alpha_left(&out, &spec) == pi_alpha_left(&word, &spec);
                ok &= is_weakly_admissible(&out, &spec).unwrap();
                ok &= run_left_word(&t, &out).unwrap() == out;
            } else {
                ok = false;
            }
            if !ok {
                break;
            }
        }
    }
    ok &= start.elapsed() < Duration::from_secs(60);
    report(6, "500 random cases per spec: all exact properties hold in under 60s", ok);
}

/// Criterion 7: uniqueness counts over the Z[beta] grid, golden base.
#[test]
fn criterion_7_uniqueness_grid() {
    let start = Instant::now();
    let spec = PisotSpec::new(&[1, 1]).unwrap();
    let search = ExpansionSearch::new(&spec, 8, 6).unwrap();
    let mut ok = true;
    for c0 in -10i64..=10 {
        for c1 in -10i64..=10 {
            let x = spec.element(vec![rat(c0, 1), rat(c1, 1)]).unwrap();
            let sign = x.sign();
            if sign == 0 {
                continue;
            }
            let set = search.find(&x);
            if sign > 0 {
                ok &= set.expansions.len() == 1;
            } else {
                ok &= set.expansions.len() == 2
                    && set.expansions.iter().all(|w| {
                        w.period == vec![1, 0] || w.period == vec![0, 1]
                    });
            }
            if !ok {
                panic!("grid point ({c0},{c1}) has {} expansions", set.expansions.len());
            }
        }
    }
    ok &= start.elapsed() < Duration::from_secs(300);
    report(7, "Z[beta] grid [-10,10]^2: 1 expansion if x>0, 2 if x<0, in under 5 min", ok);
}

/// Criterion 8: the consecutive-digit bound for rational representations.
#[test]
fn criterion_8_consecutive_run_bound() {
    let mut ok = true;
    for a in [2i64, 3] {
        let spec = PisotSpec::new(&[1, a]).unwrap();
        for den in 2u64..=30 {
            let bound = consecutive_a_bound(a, den);
            for p in 1..den {
                for sign in [1i64, -1] {
                    let q = rat(sign * p as i64, den as i64);
                    let w = rational_alpha_represent(&q, &spec, None).unwrap();
                    // Longest run of a across the unrolled left word.
                    let mut seq: Vec<Digit> = Vec::new();
                    for _ in 0..3 {
                        seq.extend(&w.period);
                    }
                    seq.extend(&w.head);
                    seq.extend(&w.fraction);
                    let mut longest = 0usize;
                    let mut run = 0usize;
                    for &d in &seq {
                        run = if d == a { run + 1 } else { 0 };
                        longest = longest.max(run);
                    }
                    ok &= longest < bound;
                    if !ok {
                        panic!("q={q} a={a}: run {longest} >= bound {bound}");
                    }
                }
            }
        }
    }
    report(8, "runs of a stay under consecutive_a_bound for den <= 30, a in {2,3}", ok);
}
