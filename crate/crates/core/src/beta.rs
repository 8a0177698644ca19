//! Renyi expansion of 1, the quasi-greedy modification d*, greedy
//! beta-expansions with exact period detection, and the finiteness
//! classification of expansions.

use std::collections::HashMap;
use std::sync::Arc;

use num_traits::ToPrimitive;

use crate::algebra::{FieldElement, PisotSpec};
use crate::error::{Error, Result};
use crate::words::{Digit, EpSeq, RightWord};

pub const DEFAULT_BUDGET: usize = 100_000;

/// Digit data of d_beta(1): finite t_1 ... t_ell, or eventually periodic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RenyiDigits {
    Finite(Vec<Digit>),
    Infinite { preperiod: Vec<Digit>, period: Vec<Digit> },
}

/// The Renyi expansion of 1, d_beta(1) = t_1 t_2 t_3 ...
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RenyiExpansion {
    digits: RenyiDigits,
}

impl RenyiExpansion {
    pub fn digits(&self) -> &RenyiDigits {
        &self.digits
    }

    pub fn is_finite(&self) -> bool {
        matches!(self.digits, RenyiDigits::Finite(_))
    }

    /// ell, the length of a finite d_beta(1).
    pub fn ell(&self) -> Result<usize> {
        match &self.digits {
            RenyiDigits::Finite(t) => Ok(t.len()),
            RenyiDigits::Infinite { .. } => Err(Error::InfiniteRenyi),
        }
    }

    pub fn finite_digits(&self) -> Result<&[Digit]> {
        match &self.digits {
            RenyiDigits::Finite(t) => Ok(t),
            RenyiDigits::Infinite { .. } => Err(Error::InfiniteRenyi),
        }
    }
}

impl std::fmt::Display for RenyiExpansion {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match &self.digits {
            RenyiDigits::Finite(t) => {
                let w = RightWord::new(Vec::new(), t.clone(), Vec::new());
                let mut s = w.to_string();
                // Render as bare digits t_1...t_ell.
                s = s.trim_start_matches("0.").to_string();
                f.write_str(&s)
            }
            RenyiDigits::Infinite { preperiod, period } => {
                let w = RightWord::new(Vec::new(), preperiod.clone(), period.clone());
                f.write_str(w.to_string().trim_start_matches('0'))
            }
        }
    }
}

/// Computes d_beta(1) by exact iteration of t_i = floor(beta T^{i-1}(1)),
/// T(x) = beta x - floor(beta x), starting from x = 1.
pub fn renyi_d_with_budget(spec: &Arc<PisotSpec>, budget: usize) -> Result<RenyiExpansion> {
    let beta = spec.beta();
    let mut digits: Vec<Digit> = Vec::new();
    let mut seen: HashMap<Vec<num_rational::BigRational>, usize> = HashMap::new();
    let mut r = spec.one();
    for _ in 0..budget {
        if r.is_zero() {
            return Ok(RenyiExpansion { digits: RenyiDigits::Finite(digits) });
        }
        if let Some(&start) = seen.get(r.coords()) {
            let preperiod = digits[..start].to_vec();
            let period = digits[start..].to_vec();
            return Ok(RenyiExpansion {
                digits: RenyiDigits::Infinite { preperiod, period },
            });
        }
        seen.insert(r.coords().to_vec(), digits.len());
        let br = &beta * &r;
        let t = br.floor_at_beta();
        let ti = t.to_i64().ok_or_else(|| Error::OutOfRange("digit overflows i64".into()))?;
        digits.push(ti);
        r = &br - &spec.from_rational(num_rational::BigRational::from(t));
    }
    Err(Error::BudgetExhausted(budget))
}

pub fn renyi_d(spec: &Arc<PisotSpec>) -> Result<RenyiExpansion> {
    renyi_d_with_budget(spec, DEFAULT_BUDGET)
}

/// d*_beta(1): for finite d_beta(1) = t_1...t_ell, the purely periodic
/// (t_1 ... t_{ell-1} (t_ell - 1))^omega; otherwise d_beta(1) itself.
pub fn renyi_d_star(spec: &Arc<PisotSpec>) -> EpSeq {
    let d = renyi_d(spec).expect("Renyi expansion of a certified Pisot number");
    match d.digits {
        RenyiDigits::Finite(mut t) => {
            let last = t.last_mut().expect("d_beta(1) is nonempty");
            *last -= 1;
            EpSeq { head: Vec::new(), period: t }
        }
        RenyiDigits::Infinite { preperiod, period } => EpSeq { head: preperiod, period },
    }
}

/// d* digits as a word period for enumeration; only valid in the finite case.
pub fn d_star_period(spec: &Arc<PisotSpec>) -> Result<Vec<Digit>> {
    let d = renyi_d(spec)?;
    let mut t = d.finite_digits()?.to_vec();
    *t.last_mut().expect("nonempty") -= 1;
    Ok(t)
}

/// Greedy beta-expansion of a nonnegative element of Q(beta), exact with
/// period detection on the remainder state.
pub fn beta_expand_with_budget(x: &FieldElement, budget: usize) -> Result<RightWord> {
    let spec = Arc::clone(x.spec());
    let sign = x.sign();
    if sign < 0 {
        return Err(Error::NegativeInput("beta_expand requires x >= 0".into()));
    }
    if sign == 0 {
        return Ok(RightWord::new(Vec::new(), Vec::new(), Vec::new()));
    }
    let beta = spec.beta();
    let one = spec.one();

    // Find k with beta^k <= x < beta^{k+1}: doubling then binary search on
    // exact comparisons.
    let mut k: i64 = 0;
    if x.cmp_at_beta(&one) == std::cmp::Ordering::Less {
        // x < 1: walk down until beta^k <= x.
        let binv = beta.invert().expect("beta nonzero");
        let mut p = one.clone();
        loop {
            p = &p * &binv;
            k -= 1;
            if x.cmp_at_beta(&p) != std::cmp::Ordering::Less {
                break;
            }
            if (-k) as usize > budget {
                return Err(Error::BudgetExhausted(budget));
            }
        }
    } else {
        // x >= 1: walk up until x < beta^{k+1}.
        let mut p = beta.clone(); // beta^{k+1}
        while x.cmp_at_beta(&p) != std::cmp::Ordering::Less {
            p = &p * &beta;
            k += 1;
            if k as usize > budget {
                return Err(Error::BudgetExhausted(budget));
            }
        }
    }

    // Greedy digits from exponent k downwards: x = sum x_i beta^i.
    // Maintain r = remaining value scaled so the next digit is floor(r / beta^i);
    // equivalently iterate r <- beta * (r - digit) on r/beta^i.
    let mut digits: Vec<Digit> = Vec::new();
    // r_i := x / beta^i at current exponent i = k.
    let mut r = {
        let mut p = one.clone();
        if k >= 0 {
            for _ in 0..k {
                p = &p * &beta;
            }
        } else {
            let binv = beta.invert().expect("beta nonzero");
            for _ in 0..(-k) {
                p = &p * &binv;
            }
        }
        x.checked_mul(&p.invert().expect("power of beta nonzero"))
            .expect("same spec")
    };
    // Integer digits: exponents k down to 0 (if k < 0 the integer part is 0
    // and fractional zeros pad exponents -1..k+1).
    let int_len: usize = if k >= 0 { (k + 1) as usize } else { 0 };
    let lead_zeros: usize = if k < 0 { (-k - 1) as usize } else { 0 };
    for _ in 0..lead_zeros {
        digits.push(0);
    }
    let mut seen: HashMap<Vec<num_rational::BigRational>, usize> = HashMap::new();
    let mut period_start: Option<usize> = None;
    let mut steps = 0usize;
    loop {
        if steps > budget {
            return Err(Error::BudgetExhausted(budget));
        }
        steps += 1;
        // digit = floor(r), then r <- beta * (r - digit)
        let d = r.floor_at_beta();
        let di = d.to_i64().ok_or_else(|| Error::OutOfRange("digit overflows i64".into()))?;
        digits.push(di);
        r = &(&r - &spec.from_rational(num_rational::BigRational::from(d))) * &beta;
        if digits.len() >= int_len + lead_zeros && r.is_zero() {
            break;
        }
        if digits.len() >= int_len + lead_zeros {
            // Fractional regime: detect repeated remainder state.
            if let Some(&at) = seen.get(r.coords()) {
                period_start = Some(at);
                break;
            }
            seen.insert(r.coords().to_vec(), digits.len());
        }
    }

    let (int_digits, frac_digits) = if k >= 0 {
        (digits[..int_len].to_vec(), digits[int_len..].to_vec())
    } else {
        (Vec::new(), digits)
    };
    let w = match period_start {
        None => RightWord::new(int_digits, frac_digits, Vec::new()),
        Some(at) => {
            // `at` indexes into `digits` as recorded after producing the
            // digit; the period covers fraction digits from at..end.
            let cut = at - int_digits.len();
            RightWord::new(
                int_digits,
                frac_digits[..cut].to_vec(),
                frac_digits[cut..].to_vec(),
            )
        }
    };
    Ok(w.canonicalize())
}

pub fn beta_expand(x: &FieldElement) -> Result<RightWord> {
    beta_expand_with_budget(x, DEFAULT_BUDGET)
}

/// Whether the greedy expansion of x terminates or is eventually periodic.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExpansionKind {
    Finite,
    EventuallyPeriodic,
}

pub fn classify_finiteness(x: &FieldElement) -> Result<ExpansionKind> {
    let w = beta_expand(x)?;
    Ok(if w.is_finite() {
        ExpansionKind::Finite
    } else {
        ExpansionKind::EventuallyPeriodic
    })
}
