//! The psi-transformation iteration: an eventually periodic alpha-adic
//! representation of a rational q in (-1, 1) for quadratic Pisot unit
//! bases, with exact rational state and period detection, plus the
//! transducer-normalized expansion and the extension beyond (-1, 1).

use std::collections::HashMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::algebra::PisotSpec;
use crate::error::{Error, Result};
use crate::transducer::{build_normalization_transducer, consecutive_a_bound, run_left_word};
use crate::words::{is_weakly_admissible, pi_alpha_left, Digit, LeftWord};

/// The two possibly non-integer coefficients carried between steps.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PsiState {
    /// The coefficient s_{i+2}, in (-1, 0].
    pub carry_hi: BigRational,
    /// The coefficient s_{i+1}, in (-1, a).
    pub carry_lo: BigRational,
    pub a: Digit,
}

/// Full record of one run of the iteration.
#[derive(Debug, Clone)]
pub struct PsiTrace {
    /// Emitted integer digits, lowest position first.
    pub emitted: Vec<Digit>,
    /// States after each step, in order; index = step.
    pub states: Vec<PsiState>,
    /// First emitted index belonging to the cycle.
    pub period_start: usize,
    pub period_len: usize,
}

/// One application of psi: (x3, x2, x1) -> (x3 - t, x2 + a t, ceil(x1))
/// where t = ceil(x1) - x1. Preserves x3 a^2 + x2 a + x1 at any a-value.
pub fn psi_step(
    x3: &BigRational,
    x2: &BigRational,
    x1: &BigRational,
    a: Digit,
) -> (BigRational, BigRational, BigInt) {
    let c = x1.ceil().to_integer();
    let t = BigRational::from(c.clone()) - x1;
    (x3 - &t, x2 + BigRational::from(BigInt::from(a)) * &t, c)
}

/// Runs the iteration on q with exact rationals until the state pair
/// (s_{i+2}, s_{i+1}) repeats, and returns both the closed-up word
/// ^w(period) head (no fraction) and the full trace.
pub fn rational_alpha_represent_trace(
    q: &BigRational,
    spec: &Arc<PisotSpec>,
    budget: Option<usize>,
) -> Result<(LeftWord, PsiTrace)> {
    let a = spec
        .unit_a()
        .ok_or_else(|| Error::UnsupportedSpec("requires a quadratic Pisot unit".into()))?;
    if q.abs() >= BigRational::from(BigInt::from(1)) {
        return Err(Error::OutOfRange(format!("|q| must be < 1, got {q}")));
    }
    let den = q.denom().clone();
    let budget = budget.unwrap_or_else(|| {
        // Pigeonhole on state pairs with denominator dividing den(q).
        let states: BigInt = den.clone() * BigInt::from(a + 1) + 1;
        let b = states.clone() * states;
        b.try_into().unwrap_or(usize::MAX)
    });

    let mut emitted: Vec<Digit> = Vec::new();
    let mut states: Vec<PsiState> = Vec::new();
    let mut seen: HashMap<PsiState, usize> = HashMap::new();
    let mut lo = q.clone(); // s_i before step i
    let mut hi = BigRational::zero(); // s_{i+1} before step i
    for step in 0..budget {
        let (x3, x2, digit) = psi_step(&BigRational::zero(), &hi, &lo, a);
        let d: Digit = (&digit).try_into().expect("digit fits i64");
        debug_assert!((0..=a).contains(&d), "digit bound");
        emitted.push(d);
        let state = PsiState { carry_hi: x3.clone(), carry_lo: x2.clone(), a };
        debug_assert!(
            state.carry_hi > BigRational::from(BigInt::from(-1))
                && !state.carry_hi.is_positive(),
            "carry_hi in (-1, 0]"
        );
        debug_assert!(state.carry_lo.denom() == &BigInt::from(1) || den.clone() % state.carry_lo.denom() == BigInt::zero());
        if let Some(&first) = seen.get(&state) {
            let period_start = first + 1;
            let period_len = step - first;
            let trace = PsiTrace {
                emitted: emitted.clone(),
                states,
                period_start,
                period_len,
            };
            let head: Vec<Digit> =
                emitted[..period_start].iter().rev().copied().collect();
            let period: Vec<Digit> = emitted[period_start..period_start + period_len]
                .iter()
                .rev()
                .copied()
                .collect();
            let word = LeftWord::new(period, head, Vec::new()).canonicalize();
            debug_assert_eq!(
                pi_alpha_left(&word, spec),
                spec.from_rational(q.clone()),
                "alpha-value of the representation"
            );
            return Ok((word, trace));
        }
        seen.insert(state.clone(), step);
        states.push(state);
        hi = x3;
        lo = x2;
    }
    Err(Error::BudgetExhausted(budget))
}

/// As [`rational_alpha_represent_trace`], returning only the word.
pub fn rational_alpha_represent(
    q: &BigRational,
    spec: &Arc<PisotSpec>,
    budget: Option<usize>,
) -> Result<LeftWord> {
    Ok(rational_alpha_represent_trace(q, spec, budget)?.0)
}

/// Eventually periodic alpha-adic expansion of a rational: the psi
/// representation followed by transducer normalization when a forbidden
/// factor appears. For |q| >= 1, q is split
/// as n + r with r in (-1, 1); the period of r's expansion is re-anchored
/// by exact value arithmetic to cover the full value, keeping the result
/// free of fractional digits.
pub fn rational_alpha_expand(
    q: &BigRational,
    spec: &Arc<PisotSpec>,
    budget: Option<usize>,
) -> Result<LeftWord> {
    let a = spec
        .unit_a()
        .ok_or_else(|| Error::UnsupportedSpec("requires a quadratic Pisot unit".into()))?;
    if q.abs() < BigRational::from(BigInt::from(1)) {
        let w = rational_alpha_represent(q, spec, budget)?;
        let w = normalize_word(&w, a, q.denom())?;
        debug_assert!(w.fraction.is_empty());
        debug_assert!(is_weakly_admissible(&w, spec)?);
        return Ok(w);
    }
    if q.is_integer() {
        return crate::alpha_adic::alpha_expand(&spec.from_rational(q.clone()));
    }
    // Extension beyond (-1, 1): split q = n + r with n = trunc(q).
    let n = q.trunc();
    let r = q - &n;
    let wr = rational_alpha_expand(&r, spec, budget)?;
    debug_assert!(!wr.period.is_empty());
    let target = spec.from_rational(q.clone());
    // Re-anchor r's period on the shifted target; along r's own anchor
    // class the residual differs from r's pre-period by the integer n.
    crate::alpha_adic::anchor_with_word(&target, &wr, spec)
}

fn normalize_word(w: &LeftWord, a: Digit, den: &BigInt) -> Result<LeftWord> {
    let has_forbidden = {
        let probe = w
            .period
            .iter()
            .chain(&w.period)
            .chain(&w.head)
            .chain(&w.fraction)
            .copied()
            .collect::<Vec<_>>();
        probe.windows(2).any(|p| p[0] == a && p[1] != 0)
    };
    if !has_forbidden {
        return Ok(w.canonicalize());
    }
    let den_u: u64 = den.try_into().unwrap_or(u64::MAX);
    let mut c = consecutive_a_bound(a, den_u);
    for _ in 0..4 {
        let t = build_normalization_transducer(a, c);
        match run_left_word(&t, w) {
            Ok(out) => return Ok(out),
            Err(Error::NoTransition { .. }) => c *= 2,
            Err(e) => return Err(e),
        }
    }
    Err(Error::BudgetExhausted(c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn psi_integer_fixed() {
        let (x3, x2, x1) = psi_step(&rat(2, 3), &rat(-1, 5), &rat(4, 1), 3);
        assert_eq!(x3, rat(2, 3));
        assert_eq!(x2, rat(-1, 5));
        assert_eq!(x1, BigInt::from(4));
    }

    #[test]
    fn psi_worked_rows() {
        // a=3: psi(0, 0, 1/2) = (-1/2, 3/2, 1)
        let (x3, x2, x1) = psi_step(&rat(0, 1), &rat(0, 1), &rat(1, 2), 3);
        assert_eq!((x3, x2, x1), (rat(-1, 2), rat(3, 2), BigInt::one()));
        // a=3: psi(0, -1/2, 3/2) = (-1/2, 1, 2)
        let (x3, x2, x1) = psi_step(&rat(0, 1), &rat(-1, 2), &rat(3, 2), 3);
        assert_eq!((x3, x2, x1), (rat(-1, 2), rat(1, 1), BigInt::from(2)));
    }

    #[test]
    fn psi_preserves_alpha_value() {
        let spec = PisotSpec::new(&[1, 3]).unwrap();
        let alpha = spec.beta().invert().unwrap().neg();
        for (n3, n2, n1) in [(1i64, -2, 7), (0, 5, -3), (2, 2, 1)] {
            let (x3, x2, x1) = (rat(n3, 4), rat(n2, 4), rat(n1, 4));
            let (y3, y2, y1) = psi_step(&x3, &x2, &x1, 3);
            let val = |c3: &BigRational, c2: &BigRational, c1: &BigRational| {
                let f3 = spec.from_rational(c3.clone());
                let f2 = spec.from_rational(c2.clone());
                let f1 = spec.from_rational(c1.clone());
                &(&f3.checked_mul(&alpha.pow(2)).unwrap()
                    + &f2.checked_mul(&alpha).unwrap())
                    + &f1
            };
            assert_eq!(
                val(&x3, &x2, &x1),
                val(&y3, &y2, &BigRational::from(y1))
            );
        }
    }

    #[test]
    fn half_in_a3() {
        let spec = PisotSpec::new(&[1, 3]).unwrap();
        let (w, trace) = rational_alpha_represent_trace(&rat(1, 2), &spec, None).unwrap();
        assert_eq!(w.to_string(), "~(012)1");
        assert_eq!(trace.emitted[..4], [1, 2, 1, 0]);
        assert_eq!(trace.period_start, 1);
        assert_eq!(trace.period_len, 3);
    }

    #[test]
    fn zero_gives_zero_word() {
        let spec = PisotSpec::new(&[1, 3]).unwrap();
        let w = rational_alpha_represent(&rat(0, 1), &spec, None).unwrap();
        assert!(w.period.is_empty() && w.head.is_empty() && w.fraction.is_empty());
    }

    #[test]
    fn half_in_golden_value_checked() {
        let spec = PisotSpec::new(&[1, 1]).unwrap();
        let (w, trace) = rational_alpha_represent_trace(&rat(1, 2), &spec, None).unwrap();
        assert!(!w.period.is_empty());
        assert!(trace.period_len >= 1);
        assert_eq!(pi_alpha_left(&w, &spec), spec.from_rational(rat(1, 2)));
    }

    #[test]
    fn rejects_out_of_range_and_non_unit() {
        let spec = PisotSpec::new(&[1, 3]).unwrap();
        assert!(matches!(
            rational_alpha_represent(&rat(7, 2), &spec, None),
            Err(Error::OutOfRange(_))
        ));
        let non_unit = PisotSpec::new(&[2, 2]).unwrap();
        assert!(matches!(
            rational_alpha_represent(&rat(1, 2), &non_unit, None),
            Err(Error::UnsupportedSpec(_))
        ));
    }

    #[test]
    fn expand_half_and_three_halves_a3() {
        let spec = PisotSpec::new(&[1, 3]).unwrap();
        let w = rational_alpha_expand(&rat(1, 2), &spec, None).unwrap();
        assert_eq!(w.to_string(), "~(012)1");
        let w = rational_alpha_expand(&rat(3, 2), &spec, None).unwrap();
        assert_eq!(w.to_string(), "~(012)2");
    }

    #[test]
    fn expand_minus_third_a2() {
        let spec = PisotSpec::new(&[1, 2]).unwrap();
        let q = rat(-1, 3);
        let w = rational_alpha_expand(&q, &spec, None).unwrap();
        assert_eq!(pi_alpha_left(&w, &spec), spec.from_rational(q));
        assert!(is_weakly_admissible(&w, &spec).unwrap());
        assert!(w.fraction.is_empty());
    }

    #[test]
    fn expand_many_rationals_roundtrip() {
        for coeffs in [[1i64, 1], [1, 2], [1, 3]] {
            let spec = PisotSpec::new(&coeffs).unwrap();
            for num in -8i64..=8 {
                for den in [2i64, 3, 5, 7] {
                    let q = rat(num, den);
                    let w = rational_alpha_expand(&q, &spec, None).unwrap();
                    assert_eq!(
                        pi_alpha_left(&w, &spec),
                        spec.from_rational(q.clone()),
                        "q={q} coeffs={coeffs:?}"
                    );
                    assert!(
                        is_weakly_admissible(&w, &spec).unwrap(),
                        "q={q} coeffs={coeffs:?} w={w}"
                    );
                    // The no-fraction guarantee covers q in (-1, 1);
                    // integers can require a fraction.
                    if q.abs() < rat(1, 1) {
                        assert!(w.fraction.is_empty(), "q={q} w={w}");
                    }
                }
            }
        }
    }

    #[test]
    fn digit_and_run_bounds() {
        let spec = PisotSpec::new(&[1, 2]).unwrap();
        for num in 1i64..=9 {
            let q = rat(num, 10);
            let (w, trace) = rational_alpha_represent_trace(&q, &spec, None).unwrap();
            assert!(trace.emitted.iter().all(|&d| (0..=2).contains(&d)));
            for s in &trace.states {
                assert!(s.carry_lo > rat(-1, 1) && s.carry_lo < rat(2, 1));
                assert!(s.carry_hi > rat(-1, 1) && !s.carry_hi.is_positive());
            }
            // Prop 21: runs of a strictly below the bound.
            let k = consecutive_a_bound(2, 10);
            let unrolled: Vec<Digit> = w
                .period
                .iter()
                .cycle()
                .take(w.period.len().max(1) * (k + 2))
                .chain(w.head.iter())
                .copied()
                .collect();
            let mut run = 0usize;
            let mut max_run = 0usize;
            for &d in &unrolled {
                run = if d == 2 { run + 1 } else { 0 };
                max_run = max_run.max(run);
            }
            assert!(max_run < k, "q={q} run={max_run} K={k}");
        }
    }
}
