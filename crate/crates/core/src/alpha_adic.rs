//! Construction and enumeration of alpha-adic expansions: finite expansions
//! of positives, the replacement algorithm for negatives, the ell expansions
//! of -1, the general Q(beta) construction, and bounded-search enumeration
//! for quadratic Pisot units.

use std::collections::{HashMap, HashSet};
use std::sync::Arc;

use num_rational::BigRational;

use crate::algebra::{FieldElement, PisotSpec};
use crate::beta::{beta_expand, d_star_period, renyi_d};
use crate::error::{Error, Result};
use crate::words::{
    is_weakly_admissible_with, pi_beta_finite, Digit, FiniteWord, LeftWord,
};

/// A set of alpha-adic expansions sharing one target value.
#[derive(Debug, Clone)]
pub struct ExpansionSet {
    pub target: FieldElement,
    pub expansions: Vec<LeftWord>,
    pub search_bound: (usize, usize),
}

/// Finite alpha-adic expansion of the conjugate of a positive x with finite
/// beta-expansion: digit-for-digit the beta-expansion itself.
pub fn alpha_expand_positive(x: &FieldElement) -> Result<LeftWord> {
    if x.sign() <= 0 {
        return Err(Error::NegativeInput(
            "alpha_expand_positive requires x > 0".into(),
        ));
    }
    let w = beta_expand(x)?;
    let fw = w
        .as_finite()
        .ok_or_else(|| Error::NotFinite("x has an eventually periodic beta-expansion".into()))?;
    Ok(LeftWord::from_finite(&fw).canonicalize())
}

/// The ell alpha-adic expansions of -1: the purely periodic
/// ^w(t_1...t_{ell-1}(t_ell - 1)) and, for j = 1..ell-1, the shifted form
/// whose pre-period (value beta^j - 1) is renormalized when t_j = 0.
pub fn expansions_of_minus_one(spec: &Arc<PisotSpec>) -> Result<ExpansionSet> {
    let tstar = d_star_period(spec)?;
    let ell = tstar.len();
    let g = spec.beta();
    let mut out = Vec::with_capacity(ell);
    out.push(LeftWord::new(tstar.clone(), Vec::new(), Vec::new()).canonicalize());
    for j in 1..ell {
        // Pre-period value beta^j - 1 >= 0 anchored below a period starting
        // at position j; its greedy expansion always fits.
        let v = &g.pow(j as u32) - &spec.one();
        let exp = beta_expand(&v)?;
        let fw = exp
            .as_finite()
            .ok_or_else(|| Error::NotFinite("pre-period of a -1 expansion".into()))?;
        let head = pad_head(fw.integer_digits(), j)?;
        let word = LeftWord::new(tstar.clone(), head, fw.fraction_digits().to_vec());
        out.push(word.canonicalize());
    }
    Ok(ExpansionSet {
        target: spec.from_int(-1),
        expansions: out,
        search_bound: (0, 0),
    })
}

fn pad_head(int_digits: &[Digit], width: usize) -> Result<Vec<Digit>> {
    let mut int: Vec<Digit> = int_digits.to_vec();
    // A canonical single zero stands for an empty integer part.
    if int == [0] {
        int.clear();
    }
    if int.len() > width {
        return Err(Error::OutOfRange(
            "normalized pre-period overflows into the period".into(),
        ));
    }
    let mut head = vec![0; width - int.len()];
    head.extend_from_slice(&int);
    Ok(head)
}

/// Normalization of a signed-digit pre-period: computes the exact value,
/// unfolds period blocks (each of value beta^ell - 1 at the current top)
/// while the value is negative, and re-expands greedily. Returns the
/// normalized word, its integer part padded to the final pre-period width,
/// together with the number of unfolded blocks.
pub fn normalize_preperiod(
    w: &FiniteWord,
    spec: &Arc<PisotSpec>,
) -> Result<(FiniteWord, usize)> {
    let tstar = d_star_period(spec)?;
    let ell = tstar.len() as i64;
    let g = spec.beta();
    let block = &g.pow(ell as u32) - &spec.one();
    let mut v = pi_beta_finite(w, spec);
    let mut top: i64 = w.point as i64 - 1;
    let mut unfolds = 0usize;
    while v.sign() < 0 {
        v = &v + &(&block * &pow_signed(&g, top + 1));
        top += ell;
        unfolds += 1;
        if unfolds > 10_000 {
            return Err(Error::BudgetExhausted(10_000));
        }
    }
    let exp = beta_expand(&v)?;
    let fw = exp
        .as_finite()
        .ok_or_else(|| Error::NotFinite("normalized pre-period is not finite".into()))?;
    let width = (top + 1).max(0) as usize;
    let head = pad_head(fw.integer_digits(), width)?;
    let point = head.len();
    let mut digits = head;
    digits.extend_from_slice(fw.fraction_digits());
    Ok((FiniteWord { digits, point }, unfolds))
}

fn pow_signed(g: &FieldElement, n: i64) -> FieldElement {
    if n >= 0 {
        g.pow(n as u32)
    } else {
        g.invert().expect("beta nonzero").pow((-n) as u32)
    }
}

/// Replacement algorithm for the conjugate of a negative x with finite
/// beta-expansion, using the principal expansion of -1.
pub fn alpha_expand_negative(x: &FieldElement) -> Result<LeftWord> {
    alpha_expand_negative_with(x, 0)
}

/// As [`alpha_expand_negative`], choosing which of the ell expansions of -1
/// is substituted in the replacement step (variant 0 is the purely periodic
/// one; each variant yields a different valid expansion of x').
pub fn alpha_expand_negative_with(x: &FieldElement, variant: usize) -> Result<LeftWord> {
    let spec = Arc::clone(x.spec());
    if x.sign() >= 0 {
        return Err(Error::NegativeInput(
            "alpha_expand_negative requires x < 0".into(),
        ));
    }
    let y = x.neg();
    let w = beta_expand(&y)?;
    let fw = w
        .as_finite()
        .ok_or_else(|| Error::NotFinite("-x has an eventually periodic beta-expansion".into()))?;
    let minus_one = expansions_of_minus_one(&spec)?;
    let var = minus_one
        .expansions
        .get(variant)
        .ok_or_else(|| Error::OutOfRange(format!("variant {variant} out of range")))?;
    let tstar = d_star_period(&spec)?;
    let ell = tstar.len() as i64;

    // Digit positions of the beta-expansion of y (point at 0).
    let digits_at = |pos: i64| -> Digit {
        let point = fw.point as i64;
        let idx = point - 1 - pos;
        if idx < 0 || idx >= fw.digits.len() as i64 {
            0
        } else {
            fw.digits[idx as usize]
        }
    };
    let k: i64 = {
        let mut k = fw.point as i64 - 1;
        while digits_at(k) == 0 {
            k -= 1;
        }
        k
    };
    let m: i64 = {
        let mut m = fw.point as i64 - fw.digits.len() as i64;
        while digits_at(m) == 0 {
            m += 1;
        }
        m
    };

    // The replacement of the trailing -1 by the chosen expansion of -1
    // places that word's period at b0 = m + |head|; unfold whole period
    // blocks into the pre-period until it covers every negated digit.
    let hj = var.head.len() as i64;
    let mut b = m + hj;
    let need = std::cmp::max(k + 1, 1);
    while b < need {
        b += ell;
    }
    let blocks = ((b - m - hj) / ell) as usize;

    // Assemble the signed pre-period: negated digits, +1 at m, the variant's
    // head and fraction around m, and the unfolded period blocks above.
    let bottom = std::cmp::min(std::cmp::min(m - var.fraction.len() as i64, m), 0);
    let top = b - 1;
    let mut signed: Vec<Digit> = vec![0; (top - bottom + 1) as usize];
    {
        let mut put = |pos: i64, d: Digit| {
            let idx = (top - pos) as usize;
            signed[idx] += d;
        };
        for pos in bottom..=top {
            let d = digits_at(pos);
            if d != 0 {
                put(pos, -d);
            }
        }
        put(m, 1);
        for (i, &h) in var.head.iter().enumerate() {
            put(m + hj - 1 - i as i64, h);
        }
        for (i, &f) in var.fraction.iter().enumerate() {
            put(m - 1 - i as i64, f);
        }
        for r in 0..blocks {
            let q = m + hj + r as i64 * ell;
            for (i, &t) in tstar.iter().enumerate() {
                put(q + ell - 1 - i as i64, t);
            }
        }
    }
    // The point sits after the digits at nonnegative positions.
    let point = if bottom >= 0 { signed.len() } else { (top + 1) as usize };
    let pre = FiniteWord { digits: signed, point };

    let (norm, _unfolds) = normalize_preperiod(&pre, &spec)?;
    let word = LeftWord::new(
        tstar,
        norm.integer_digits().to_vec(),
        norm.fraction_digits().to_vec(),
    );
    Ok(word.canonicalize())
}

/// Eventually periodic alpha-adic expansion of the conjugate of any
/// x in Q(beta): finite beta-expansions go through the positive/negative
/// finite constructions, eventually periodic ones are re-anchored on the
/// purely periodic tail of the beta-expansion of |x| / beta^N.
pub fn alpha_expand(x: &FieldElement) -> Result<LeftWord> {
    let spec = Arc::clone(x.spec());
    match x.sign() {
        0 => Ok(LeftWord::new(Vec::new(), Vec::new(), Vec::new())),
        s => {
            let y = if s > 0 { x.clone() } else { x.neg() };
            let w = beta_expand(&y)?;
            if w.is_finite() {
                if s > 0 {
                    alpha_expand_positive(x)
                } else {
                    alpha_expand_negative(x)
                }
            } else {
                match periodic_path(x, &y, &spec) {
                    Ok(w) => Ok(w),
                    Err(Error::NotFinite(_)) => {
                        // The greedy period's rotations do not always reach
                        // the target's residue class; for rationals in a
                        // quadratic unit base the psi iteration supplies a
                        // period that does.
                        match (x.as_rational(), spec.unit_a()) {
                            (Some(q), Some(_)) => {
                                crate::rational_psi::rational_alpha_expand(&q, &spec, None)
                            }
                            _ => Err(Error::NotFinite(
                                "could not anchor the periodic tail with a finite pre-period"
                                    .into(),
                            )),
                        }
                    }
                    Err(e) => Err(e),
                }
            }
        }
    }
}

fn periodic_path(
    x: &FieldElement,
    y: &FieldElement,
    spec: &Arc<PisotSpec>,
) -> Result<LeftWord> {
    let g = spec.beta();
    // Smallest N >= 0 with y < beta^N.
    let mut n_shift: u32 = 0;
    let mut p = spec.one();
    while y.cmp_at_beta(&p) != std::cmp::Ordering::Less {
        p = &p * &g;
        n_shift += 1;
    }
    let scale = pow_signed(&g, -(n_shift as i64));
    let y2 = y.checked_mul(&scale)?; // |x| / beta^N in (0, 1)
    let target = x.checked_mul(&scale)?;
    let w2 = beta_expand(&y2)?;
    let per = w2.fraction_period.clone();
    debug_assert!(!per.is_empty());
    let word = anchor_with_period(&target, &per, spec, false)?;
    Ok(shift_left(&word, n_shift as usize))
}

/// Anchors an eventually periodic left word with the given period on an
/// exact target value: searches anchor positions b and rotations of the
/// period for a residual v = target + beta^b * pi(0.(rotation)^w) lying in
/// [0, beta^b) with a finite greedy expansion (the pre-period) that splices
/// admissibly against the period. With `require_no_fraction`, only
/// residuals whose expansion has no fractional digits are accepted.
pub(crate) fn anchor_with_period(
    target: &FieldElement,
    per: &[Digit],
    spec: &Arc<PisotSpec>,
    require_no_fraction: bool,
) -> Result<LeftWord> {
    let g = spec.beta();
    let p_len = per.len();
    // All rotations of the period, with the value of 0.(rotation)^w, each
    // strictly inside (0, 1).
    let rotations: Vec<(Vec<Digit>, FieldElement)> = (0..p_len)
        .map(|r| {
            let mut rot = per.to_vec();
            rot.rotate_left(r);
            let w = crate::words::RightWord::new(Vec::new(), Vec::new(), rot.clone());
            let v = crate::words::pi_beta_right(&w, spec);
            (rot, v)
        })
        .collect();
    let mut gb = spec.one();
    for b in 0..(8 * p_len + 64) {
        for (rot, y_per) in &rotations {
            let v = target + &y_per.checked_mul(&gb)?;
            // A finite word's value lies in Z[beta, 1/beta]; coordinates
            // with denominators outside the powers of a_0 can never expand
            // finitely, and a fraction-free word needs integer coordinates.
            // Reject such residuals before the costly expansion attempt.
            if require_no_fraction {
                if !v.coords().iter().all(|c| c.is_integer()) {
                    continue;
                }
            } else if !coords_expandable(&v, spec) {
                continue;
            }
            if v.sign() < 0 || v.cmp_at_beta(&gb) != std::cmp::Ordering::Less {
                continue;
            }
            let exp = beta_expand(&v)?;
            let Some(fwv) = exp.as_finite() else {
                continue;
            };
            if require_no_fraction && !fwv.fraction_digits().is_empty() {
                continue;
            }
            let head = pad_head(fwv.integer_digits(), b)?;
            let word = LeftWord::new(rot.clone(), head, fwv.fraction_digits().to_vec())
                .canonicalize();
            if crate::words::is_weakly_admissible(&word, spec)? {
                return Ok(word);
            }
        }
        gb = gb.checked_mul(&g)?;
    }
    Err(Error::NotFinite(
        "could not anchor the periodic tail with a finite pre-period".into(),
    ))
}

/// Re-anchors the period of an existing expansion on a new target value
/// that differs from the word's value by an integer: keeps the word's own
/// period rotation and anchor class (b = |head| + t p), along which the
/// residual stays integral, and expands the first nonnegative residual
/// that fits. Prefers an anchoring without fractional digits.
pub(crate) fn anchor_with_word(
    target: &FieldElement,
    wr: &LeftWord,
    spec: &Arc<PisotSpec>,
) -> Result<LeftWord> {
    debug_assert!(!wr.period.is_empty());
    let g = spec.beta();
    let p_len = wr.period.len();
    let y_per = {
        let w = crate::words::RightWord::new(Vec::new(), Vec::new(), wr.period.clone());
        crate::words::pi_beta_right(&w, spec)
    };
    let mut b = wr.head.len();
    let mut gb = g.pow(b as u32);
    let step = g.pow(p_len as u32);
    let mut fallback: Option<LeftWord> = None;
    let mut patience = 64usize;
    for _ in 0..64 {
        let v = target + &y_per.checked_mul(&gb)?;
        if v.sign() >= 0 && v.cmp_at_beta(&gb) == std::cmp::Ordering::Less {
            let exp = beta_expand(&v)?;
            if let Some(fwv) = exp.as_finite() {
                let head = pad_head(fwv.integer_digits(), b)?;
                let word =
                    LeftWord::new(wr.period.clone(), head, fwv.fraction_digits().to_vec())
                        .canonicalize();
                if crate::words::is_weakly_admissible(&word, spec)? {
                    if word.fraction.is_empty() {
                        return Ok(word);
                    }
                    if fallback.is_none() {
                        fallback = Some(word);
                        // Keep looking for a fraction-free anchoring only a
                        // few blocks further; the residual grows like
                        // beta^b, so a long scan is both slow and hopeless.
                        patience = 2;
                    }
                }
            }
        }
        if patience == 0 {
            break;
        }
        patience -= 1;
        b += p_len;
        gb = gb.checked_mul(&step)?;
    }
    fallback.ok_or_else(|| {
        Error::NotFinite("could not re-anchor the period on the shifted target".into())
    })
}

/// Whether the coordinate denominators of v divide a power of a_0, a
/// necessary condition for a finite greedy expansion (finite words have
/// values in Z[beta, 1/beta]).
fn coords_expandable(v: &FieldElement, spec: &Arc<PisotSpec>) -> bool {
    use num_integer::Integer;
    use num_traits::{One, Signed, Zero};
    let a0 = spec.coeffs()[0].abs();
    v.coords().iter().all(|c| {
        let mut d = c.denom().clone().abs();
        loop {
            if d.is_one() {
                return true;
            }
            let g = d.gcd(&a0);
            if g.is_one() {
                return false;
            }
            while (&d % &g).is_zero() {
                d /= &g;
            }
        }
    })
}

/// Shifts the fractional point n positions to the left (multiplies the
/// value by beta^n).
pub fn shift_left(w: &LeftWord, n: usize) -> LeftWord {
    let mut head = w.head.clone();
    let mut fraction = w.fraction.clone();
    for _ in 0..n {
        if fraction.is_empty() {
            head.push(0);
        } else {
            head.push(fraction.remove(0));
        }
    }
    LeftWord::new(w.period.clone(), head, fraction).canonicalize()
}

/// Precomputed index of all weakly admissible canonical left words within
/// given head/fraction bounds for a quadratic Pisot unit, keyed by exact
/// alpha-value. Build once, query many targets.
pub struct ExpansionSearch {
    spec: Arc<PisotSpec>,
    head_bound: usize,
    fraction_bound: usize,
    words: Vec<LeftWord>,
    index: HashMap<Vec<BigRational>, Vec<usize>>,
}

impl ExpansionSearch {
    pub fn new(
        spec: &Arc<PisotSpec>,
        head_bound: usize,
        fraction_bound: usize,
    ) -> Result<Self> {
        let a = spec.unit_a().ok_or_else(|| {
            Error::UnsupportedSpec("enumeration requires a quadratic Pisot unit".into())
        })?;
        let t = renyi_d(spec)?.finite_digits()?.to_vec(); // = [a, 1]
        let periods: [Vec<Digit>; 3] = [Vec::new(), vec![a, 0], vec![0, a]];
        let heads = admissible_strings(a, head_bound);
        let fractions = admissible_strings(a, fraction_bound);
        let mut seen: HashSet<LeftWord> = HashSet::new();
        let mut words = Vec::new();
        let mut index: HashMap<Vec<BigRational>, Vec<usize>> = HashMap::new();
        for period in &periods {
            for head in &heads {
                for fraction in &fractions {
                    let w = LeftWord::new(period.clone(), head.clone(), fraction.clone())
                        .canonicalize();
                    if !seen.insert(w.clone()) {
                        continue;
                    }
                    if !is_weakly_admissible_with(&w, &t) {
                        continue;
                    }
                    let v = crate::words::pi_alpha_left(&w, spec);
                    let idx = words.len();
                    words.push(w);
                    index.entry(v.coords().to_vec()).or_default().push(idx);
                }
            }
        }
        Ok(ExpansionSearch {
            spec: Arc::clone(spec),
            head_bound,
            fraction_bound,
            words,
            index,
        })
    }

    pub fn find(&self, target: &FieldElement) -> ExpansionSet {
        let mut expansions: Vec<LeftWord> = self
            .index
            .get(target.coords())
            .map(|ids| ids.iter().map(|&i| self.words[i].clone()).collect())
            .unwrap_or_default();
        expansions.sort_by_key(|w| (w.period.clone(), w.head.clone(), w.fraction.clone()));
        ExpansionSet {
            target: target.clone(),
            expansions,
            search_bound: (self.head_bound, self.fraction_bound),
        }
    }

    pub fn spec(&self) -> &Arc<PisotSpec> {
        &self.spec
    }

    pub fn word_count(&self) -> usize {
        self.words.len()
    }
}

/// All digit strings of length <= bound over {0..a} avoiding the forbidden
/// factor (a followed by a nonzero digit).
fn admissible_strings(a: Digit, bound: usize) -> Vec<Vec<Digit>> {
    let mut out: Vec<Vec<Digit>> = vec![Vec::new()];
    let mut frontier: Vec<Vec<Digit>> = vec![Vec::new()];
    for _ in 0..bound {
        let mut next = Vec::new();
        for s in &frontier {
            for d in 0..=a {
                if s.last() == Some(&a) && d != 0 {
                    continue;
                }
                let mut e = s.clone();
                e.push(d);
                next.push(e);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

/// Bounded exhaustive enumeration of all alpha-adic expansions of a target
/// value, for quadratic Pisot units.
pub fn enumerate_expansions(
    x: &FieldElement,
    head_bound: usize,
    fraction_bound: usize,
) -> Result<ExpansionSet> {
    let search = ExpansionSearch::new(x.spec(), head_bound, fraction_bound)?;
    Ok(search.find(x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::{is_weakly_admissible, pi_alpha_left};

    fn golden() -> Arc<PisotSpec> {
        PisotSpec::new(&[1, 1]).unwrap()
    }

    #[test]
    fn positive_four() {
        let s = golden();
        let w = alpha_expand_positive(&s.from_int(4)).unwrap();
        assert_eq!(w.to_string(), "101.01");
    }

    #[test]
    fn positive_one() {
        let s = golden();
        assert_eq!(alpha_expand_positive(&s.one()).unwrap().to_string(), "1");
    }

    #[test]
    fn positive_rejects_nonpositive() {
        let s = golden();
        assert!(alpha_expand_positive(&s.zero()).is_err());
        assert!(alpha_expand_positive(&s.from_int(-3)).is_err());
    }

    #[test]
    fn minus_one_golden() {
        let s = golden();
        let set = expansions_of_minus_one(&s).unwrap();
        let words: Vec<String> = set.expansions.iter().map(|w| w.to_string()).collect();
        assert_eq!(words, vec!["~(10)", "~(10)0.1"]);
        for w in &set.expansions {
            assert_eq!(pi_alpha_left(w, &s), s.from_int(-1));
            assert!(is_weakly_admissible(w, &s).unwrap());
        }
    }

    #[test]
    fn minus_one_cubic() {
        let s = PisotSpec::new(&[1, 0, 1]).unwrap();
        let set = expansions_of_minus_one(&s).unwrap();
        let words: Vec<String> = set.expansions.iter().map(|w| w.to_string()).collect();
        assert_eq!(words, vec!["~(100)", "~(100)0.01", "~(100)01.00001"]);
        for w in &set.expansions {
            assert_eq!(pi_alpha_left(w, &s), s.from_int(-1));
            assert!(is_weakly_admissible(w, &s).unwrap());
        }
    }

    #[test]
    fn minus_one_confluent_a3() {
        let s = PisotSpec::new(&[1, 3]).unwrap();
        let set = expansions_of_minus_one(&s).unwrap();
        let words: Vec<String> = set.expansions.iter().map(|w| w.to_string()).collect();
        assert_eq!(words, vec!["~(30)", "~(30)2.1"]);
        for w in &set.expansions {
            assert_eq!(pi_alpha_left(w, &s), s.from_int(-1));
        }
    }

    #[test]
    fn normalize_worked_example() {
        // nu(1 -1 1 -1 . 1 0) = 0100.001
        let s = golden();
        let w = FiniteWord::new(vec![1, -1, 1, -1, 1, 0], 4).unwrap();
        let (norm, unfolds) = normalize_preperiod(&w, &s).unwrap();
        assert_eq!(norm.to_string(), "0100.001");
        assert_eq!(unfolds, 0);
    }

    #[test]
    fn normalize_zero_word() {
        let s = golden();
        let w = FiniteWord::new(vec![0, 0], 1).unwrap();
        let (norm, unfolds) = normalize_preperiod(&w, &s).unwrap();
        assert_eq!(norm.digits, vec![0]);
        assert_eq!(norm.point, 1);
        assert_eq!(unfolds, 0);
    }

    #[test]
    fn normalize_negative_unfolds() {
        // value -1 as the single signed digit -1: must unfold at least one
        // period block and stay value-consistent within the enclosing word.
        let s = golden();
        let w = FiniteWord::new(vec![-1], 1).unwrap();
        let (norm, unfolds) = normalize_preperiod(&w, &s).unwrap();
        assert!(unfolds >= 1);
        // pi_beta(norm) = -1 + unfolds-many blocks above the original top.
        let g = s.beta();
        let mut expect = s.from_int(-1);
        let block = &g.pow(2) - &s.one();
        for r in 0..unfolds {
            expect = &expect + &block.checked_mul(&g.pow(1 + 2 * r as u32)).unwrap();
        }
        assert_eq!(pi_beta_finite(&norm, &s), expect);
    }

    #[test]
    fn negative_minus_four() {
        let s = golden();
        let w = alpha_expand_negative(&s.from_int(-4)).unwrap();
        assert_eq!(w.to_string(), "~(10)0100.001");
    }

    #[test]
    fn negative_minus_one() {
        let s = golden();
        let w = alpha_expand_negative(&s.from_int(-1)).unwrap();
        assert_eq!(w.to_string(), "~(10)");
    }

    #[test]
    fn negative_minus_two_variants() {
        let s = golden();
        let x = s.from_int(-2);
        // The principal variant and the shifted variant give the two
        // expansions of -2; the worked example exhibits the shifted one.
        let w0 = alpha_expand_negative_with(&x, 0).unwrap();
        let w1 = alpha_expand_negative_with(&x, 1).unwrap();
        assert_eq!(w1.to_string(), "~(10)010.1");
        assert_ne!(w0, w1);
        for w in [&w0, &w1] {
            assert_eq!(pi_alpha_left(w, &s), x);
            assert!(is_weakly_admissible(w, &s).unwrap());
        }
    }

    #[test]
    fn negative_expansion_shape() {
        // pi_alpha(~(01)) = -pi_beta(0.(01)~) as field elements.
        let s = golden();
        let w = LeftWord::parse("~(01)").unwrap();
        let y = crate::words::pi_beta_right(
            &crate::words::RightWord::parse("0.(01)~").unwrap(),
            &s,
        );
        assert_eq!(pi_alpha_left(&w, &s), y.neg());
    }

    #[test]
    fn general_expand_zero() {
        let s = golden();
        let w = alpha_expand(&s.zero()).unwrap();
        assert!(w.period.is_empty() && w.head.is_empty() && w.fraction.is_empty());
    }

    #[test]
    fn general_expand_matches_finite_paths() {
        let s = golden();
        assert_eq!(alpha_expand(&s.from_int(4)).unwrap().to_string(), "101.01");
        assert_eq!(alpha_expand(&s.from_int(-4)).unwrap().to_string(), "~(10)0100.001");
    }

    #[test]
    fn general_expand_periodic_rational() {
        let s = golden();
        for n in [1i64, -1, 3, -3, 5, -5] {
            let x = s.from_rational(BigRational::new(n.into(), 2.into()));
            let w = alpha_expand(&x).unwrap();
            assert_eq!(pi_alpha_left(&w, &s), x, "n/2 with n={n}");
            assert!(is_weakly_admissible(&w, &s).unwrap(), "n={n}");
        }
    }

    #[test]
    fn general_expand_half_a3() {
        let s = PisotSpec::new(&[1, 3]).unwrap();
        let x = s.from_rational(BigRational::new(1.into(), 2.into()));
        let w = alpha_expand(&x).unwrap();
        assert_eq!(w.to_string(), "~(012)1");
        let x32 = s.from_rational(BigRational::new(3.into(), 2.into()));
        let w32 = alpha_expand(&x32).unwrap();
        assert_eq!(w32.to_string(), "~(012)2");
        assert!(w32.fraction.is_empty());
    }

    #[test]
    fn enumerate_minus_one() {
        let s = golden();
        let set = enumerate_expansions(&s.from_int(-1), 6, 6).unwrap();
        let words: Vec<String> = set.expansions.iter().map(|w| w.to_string()).collect();
        assert_eq!(words.len(), 2);
        assert!(words.contains(&"~(10)".to_string()));
        assert!(words.contains(&"~(10)0.1".to_string()));
    }

    #[test]
    fn enumerate_plus_four_unique() {
        let s = golden();
        let set = enumerate_expansions(&s.from_int(4), 6, 6).unwrap();
        let words: Vec<String> = set.expansions.iter().map(|w| w.to_string()).collect();
        assert_eq!(words, vec!["101.01"]);
    }

    #[test]
    fn enumerate_minus_four_two() {
        let s = golden();
        let set = enumerate_expansions(&s.from_int(-4), 8, 6).unwrap();
        assert_eq!(set.expansions.len(), 2);
        for w in &set.expansions {
            assert!(w.period == vec![1, 0] || w.period == vec![0, 1]);
        }
    }

    #[test]
    fn shift_left_moves_point() {
        let s = golden();
        let w = LeftWord::parse("~(10)0.1").unwrap();
        let shifted = shift_left(&w, 1);
        let g = s.beta();
        assert_eq!(
            pi_alpha_left(&shifted, &s),
            pi_alpha_left(&w, &s).checked_mul(&g).unwrap()
        );
    }
}
