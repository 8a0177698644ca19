//! Digit-word types (finite, right-eventually-periodic, left-eventually-
//! periodic), textual notation, lexicographic machinery, admissibility
//! predicates and exact pi_beta / pi_alpha evaluation.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebra::{FieldElement, PisotSpec};
use crate::error::{Error, Result};

pub type Digit = i64;

/// A digit alphabet {lo, ..., hi}.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Alphabet {
    pub lo: Digit,
    pub hi: Digit,
}

impl Alphabet {
    pub fn new(lo: Digit, hi: Digit) -> Self {
        assert!(lo <= hi);
        Alphabet { lo, hi }
    }

    /// The canonical alphabet {0, ..., floor(beta)}.
    pub fn canonical(spec: &PisotSpec) -> Self {
        Alphabet { lo: 0, hi: spec.floor_beta() }
    }

    pub fn contains(&self, d: Digit) -> bool {
        self.lo <= d && d <= self.hi
    }

    pub fn contains_all<'a>(&self, ds: impl IntoIterator<Item = &'a Digit>) -> bool {
        ds.into_iter().all(|&d| self.contains(d))
    }
}

/// A finite digit word with a fractional point: digits most significant
/// first, `point` digits to the left of the point.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteWord {
    pub digits: Vec<Digit>,
    pub point: usize,
}

impl FiniteWord {
    pub fn new(digits: Vec<Digit>, point: usize) -> Result<Self> {
        if point > digits.len() {
            return Err(Error::Parse(format!(
                "point {} beyond word length {}",
                point,
                digits.len()
            )));
        }
        Ok(FiniteWord { digits, point })
    }

    /// An integer word (all digits left of the point).
    pub fn integer(digits: Vec<Digit>) -> Self {
        let point = digits.len();
        FiniteWord { digits, point }
    }

    pub fn empty() -> Self {
        FiniteWord { digits: Vec::new(), point: 0 }
    }

    pub fn integer_digits(&self) -> &[Digit] {
        &self.digits[..self.point]
    }

    pub fn fraction_digits(&self) -> &[Digit] {
        &self.digits[self.point..]
    }

    pub fn parse(s: &str) -> Result<Self> {
        let (head, frac) = match s.find('.') {
            Some(i) => (&s[..i], &s[i + 1..]),
            None => (s, ""),
        };
        let h = parse_digits(head)?;
        let f = parse_digits(frac)?;
        let point = h.len();
        let mut digits = h;
        digits.extend_from_slice(&f);
        Ok(FiniteWord { digits, point })
    }
}

impl fmt::Display for FiniteWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_digits(f, self.integer_digits())?;
        if !self.fraction_digits().is_empty() {
            write!(f, ".")?;
            write_digits(f, self.fraction_digits())?;
        }
        Ok(())
    }
}

/// A right-infinite eventually periodic word `H.F(P)~`: integer part H,
/// fractional pre-period F, fractional period P repeated rightward.
/// An empty period denotes a finite expansion.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RightWord {
    pub integer_part: Vec<Digit>,
    pub fraction_preperiod: Vec<Digit>,
    pub fraction_period: Vec<Digit>,
}

impl RightWord {
    pub fn new(
        integer_part: Vec<Digit>,
        fraction_preperiod: Vec<Digit>,
        fraction_period: Vec<Digit>,
    ) -> Self {
        RightWord { integer_part, fraction_preperiod, fraction_period }
    }

    pub fn from_finite(w: &FiniteWord) -> Self {
        RightWord {
            integer_part: w.integer_digits().to_vec(),
            fraction_preperiod: w.fraction_digits().to_vec(),
            fraction_period: Vec::new(),
        }
    }

    pub fn is_finite(&self) -> bool {
        self.fraction_period.is_empty()
    }

    /// Finite view when the period is empty.
    pub fn as_finite(&self) -> Option<FiniteWord> {
        if self.is_finite() {
            let mut digits = self.integer_part.clone();
            digits.extend_from_slice(&self.fraction_preperiod);
            Some(FiniteWord { digits, point: self.integer_part.len() })
        } else {
            None
        }
    }

    /// Canonical form: primitive period, shortest pre-period, no trailing
    /// zeros in a finite fraction, no leading zeros in the integer part.
    pub fn canonicalize(&self) -> RightWord {
        let mut period = primitive_period(&self.fraction_period);
        if period.iter().all(|&d| d == 0) {
            period.clear();
        }
        let mut pre = self.fraction_preperiod.clone();
        // Absorb a pre-period suffix equal to the last period digit: shift
        // the period boundary one step left.
        while let (Some(&last_pre), Some(&last_per)) = (pre.last(), period.last()) {
            if last_pre == last_per {
                pre.pop();
                period.rotate_right(1);
            } else {
                break;
            }
        }
        if period.is_empty() {
            while pre.last() == Some(&0) {
                pre.pop();
            }
        }
        let mut int = self.integer_part.clone();
        while int.len() > 1 && int[0] == 0 {
            int.remove(0);
        }
        if int == [0] && pre.is_empty() && period.is_empty() {
            int.clear();
        }
        RightWord { integer_part: int, fraction_preperiod: pre, fraction_period: period }
    }

    /// The infinite digit sequence x_k ... x_0 . x_{-1} ... as a head plus
    /// repeating period (zeros when finite).
    pub(crate) fn unrolled(&self) -> EpSeq {
        let mut head = self.integer_part.clone();
        head.extend_from_slice(&self.fraction_preperiod);
        EpSeq { head, period: self.fraction_period.clone() }
    }

    pub fn parse(s: &str) -> Result<Self> {
        let (body, period) = match s.find('(') {
            Some(i) => {
                let rest = &s[i..];
                let close = rest
                    .find(")~")
                    .ok_or_else(|| Error::Parse("expected `)~` closing the period".into()))?;
                if i + close + 2 != s.len() {
                    return Err(Error::Parse("trailing characters after `)~`".into()));
                }
                (&s[..i], parse_digits(&rest[1..close])?)
            }
            None => (s, Vec::new()),
        };
        let fw = FiniteWord::parse(body)?;
        Ok(RightWord {
            integer_part: fw.integer_digits().to_vec(),
            fraction_preperiod: fw.fraction_digits().to_vec(),
            fraction_period: period,
        })
    }
}

impl fmt::Display for RightWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.integer_part.is_empty() {
            write!(f, "0")?;
        } else {
            write_digits(f, &self.integer_part)?;
        }
        if !self.fraction_preperiod.is_empty() || !self.fraction_period.is_empty() {
            write!(f, ".")?;
            write_digits(f, &self.fraction_preperiod)?;
        }
        if !self.fraction_period.is_empty() {
            write!(f, "(")?;
            write_digits(f, &self.fraction_period)?;
            write!(f, ")~")?;
        }
        Ok(())
    }
}

/// A left-infinite eventually periodic word `~(P)H.F`: period P repeated
/// leftward, head H between the periodic part and the point, finite
/// fraction F. An empty period denotes a finite word.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LeftWord {
    pub period: Vec<Digit>,
    pub head: Vec<Digit>,
    pub fraction: Vec<Digit>,
}

impl LeftWord {
    pub fn new(period: Vec<Digit>, head: Vec<Digit>, fraction: Vec<Digit>) -> Self {
        LeftWord { period, head, fraction }
    }

    pub fn from_finite(w: &FiniteWord) -> Self {
        LeftWord {
            period: Vec::new(),
            head: w.integer_digits().to_vec(),
            fraction: w.fraction_digits().to_vec(),
        }
    }

    pub fn is_finite(&self) -> bool {
        self.period.is_empty()
    }

    pub fn as_finite(&self) -> Option<FiniteWord> {
        if self.is_finite() {
            let mut digits = self.head.clone();
            digits.extend_from_slice(&self.fraction);
            Some(FiniteWord { digits, point: self.head.len() })
        } else {
            None
        }
    }

    /// Canonical form: primitive period, shortest head (a head prefix equal
    /// to the leading period digit is absorbed by rotating the period), no
    /// trailing zeros in the fraction, no leading zeros in a finite head.
    pub fn canonicalize(&self) -> LeftWord {
        let mut period = primitive_period(&self.period);
        if period.iter().all(|&d| d == 0) {
            period.clear();
        }
        let mut head = self.head.clone();
        while !period.is_empty() && !head.is_empty() && head[0] == period[0] {
            head.remove(0);
            period.rotate_left(1);
        }
        if period.is_empty() {
            while head.first() == Some(&0) {
                head.remove(0);
            }
        }
        let mut fraction = self.fraction.clone();
        while fraction.last() == Some(&0) {
            fraction.pop();
        }
        LeftWord { period, head, fraction }
    }

    pub fn parse(s: &str) -> Result<Self> {
        let (period, rest) = if let Some(stripped) = s.strip_prefix("~(") {
            let close = stripped
                .find(')')
                .ok_or_else(|| Error::Parse("expected `)` closing the period".into()))?;
            (parse_digits(&stripped[..close])?, &stripped[close + 1..])
        } else {
            (Vec::new(), s)
        };
        let fw = FiniteWord::parse(rest)?;
        Ok(LeftWord {
            period,
            head: fw.integer_digits().to_vec(),
            fraction: fw.fraction_digits().to_vec(),
        })
    }
}

impl fmt::Display for LeftWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.period.is_empty() {
            write!(f, "~(")?;
            write_digits(f, &self.period)?;
            write!(f, ")")?;
        }
        write_digits(f, &self.head)?;
        if self.period.is_empty() && self.head.is_empty() {
            write!(f, "0")?;
        }
        if !self.fraction.is_empty() {
            write!(f, ".")?;
            write_digits(f, &self.fraction)?;
        }
        Ok(())
    }
}

/// Digit string in display notation (digits outside 0..9 bracketed).
pub fn write_digit_string(ds: &[Digit]) -> String {
    let mut out = String::new();
    for &d in ds {
        if (0..=9).contains(&d) {
            out.push_str(&d.to_string());
        } else {
            out.push_str(&format!("[{d}]"));
        }
    }
    out
}

fn write_digits(f: &mut fmt::Formatter<'_>, ds: &[Digit]) -> fmt::Result {
    for &d in ds {
        if (0..=9).contains(&d) {
            write!(f, "{d}")?;
        } else {
            write!(f, "[{d}]")?;
        }
    }
    Ok(())
}

fn parse_digits(s: &str) -> Result<Vec<Digit>> {
    let mut out = Vec::new();
    let mut chars = s.char_indices();
    while let Some((i, c)) = chars.next() {
        match c {
            '0'..='9' => out.push((c as u8 - b'0') as Digit),
            '[' => {
                let rest = &s[i + 1..];
                let close = rest
                    .find(']')
                    .ok_or_else(|| Error::Parse("unclosed `[` in digit word".into()))?;
                let d: Digit = rest[..close]
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad digit `{}`", &rest[..close])))?;
                out.push(d);
                for _ in 0..close + 1 {
                    chars.next();
                }
            }
            _ => return Err(Error::Parse(format!("unexpected character `{c}` in digit word"))),
        }
    }
    Ok(out)
}

/// Shortest word whose repetition gives `p` (returns a copy of `p` itself
/// when `p` is primitive).
fn primitive_period(p: &[Digit]) -> Vec<Digit> {
    let n = p.len();
    for q in 1..=n {
        if n % q == 0 && p.chunks(q).all(|c| c == &p[..q]) {
            return p[..q].to_vec();
        }
    }
    p.to_vec()
}

/// A right-infinite eventually periodic digit sequence: `head` followed by
/// `period` repeated forever (zeros forever when the period is empty).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EpSeq {
    pub head: Vec<Digit>,
    pub period: Vec<Digit>,
}

impl EpSeq {
    pub fn get(&self, i: usize) -> Digit {
        if i < self.head.len() {
            self.head[i]
        } else if self.period.is_empty() {
            0
        } else {
            self.period[(i - self.head.len()) % self.period.len()]
        }
    }

    /// The sequence starting at position `i`.
    pub fn tail(&self, i: usize) -> EpSeq {
        if i <= self.head.len() {
            EpSeq { head: self.head[i..].to_vec(), period: self.period.clone() }
        } else if self.period.is_empty() {
            EpSeq { head: Vec::new(), period: Vec::new() }
        } else {
            let k = (i - self.head.len()) % self.period.len();
            let mut per = self.period.clone();
            per.rotate_left(k);
            EpSeq { head: Vec::new(), period: per }
        }
    }

    /// Number of positions after which two sequences that still agree are
    /// provably equal.
    fn decision_bound(&self, other: &EpSeq) -> usize {
        let p1 = self.period.len().max(1);
        let p2 = other.period.len().max(1);
        let l = num_integer::lcm(p1, p2);
        self.head.len().max(other.head.len()) + l + 1
    }
}

/// Strict lexicographic order on the infinite unrollings of two eventually
/// periodic sequences.
pub fn lex_less(u: &EpSeq, v: &EpSeq) -> bool {
    let bound = u.decision_bound(v);
    for i in 0..bound {
        let (a, b) = (u.get(i), v.get(i));
        if a != b {
            return a < b;
        }
    }
    false
}

/// pi_beta: exact value of a word at beta in Q(beta).
pub fn pi_beta_finite(w: &FiniteWord, spec: &Arc<PisotSpec>) -> FieldElement {
    eval_at_generator(w, spec)
}

pub fn pi_beta_right(w: &RightWord, spec: &Arc<PisotSpec>) -> FieldElement {
    let b = spec.beta();
    let mut acc = spec.zero();
    for &d in &w.integer_part {
        acc = &(&acc * &b) + &spec.from_int(d);
    }
    let binv = b.invert().expect("beta is nonzero");
    let mut pos = spec.one();
    for &d in &w.fraction_preperiod {
        pos = &pos * &binv;
        acc = &acc + &spec.from_int(d).checked_mul(&pos).expect("same spec");
    }
    if !w.fraction_period.is_empty() {
        // One period block just after the pre-period contributes
        // P * beta^{-(n+p)}; the full sum is that over 1/(1 - beta^{-p}).
        let p = w.fraction_period.len() as u32;
        let mut pval = spec.zero();
        for &d in &w.fraction_period {
            pval = &(&pval * &b) + &spec.from_int(d);
        }
        let shift = &pos * &binv.pow(p);
        let ratio = &spec.one() - &binv.pow(p);
        let series = ratio.invert().expect("beta^{-p} != 1");
        acc = &acc + &(&(&pval * &shift) * &series);
    }
    acc
}

pub fn pi_beta_left(w: &LeftWord, spec: &Arc<PisotSpec>) -> Result<FieldElement> {
    if !w.period.is_empty() {
        return Err(Error::Divergent);
    }
    Ok(eval_at_generator(&w.as_finite().expect("period is empty"), spec))
}

/// pi_alpha on a finite word: same formal evaluation as pi_beta, read as
/// coordinates over the alpha power basis.
pub fn pi_alpha_finite(w: &FiniteWord, spec: &Arc<PisotSpec>) -> FieldElement {
    eval_at_generator(w, spec)
}

/// pi_alpha on a left-infinite word. The left-periodic sum converges at
/// every conjugate of modulus < 1 and is evaluated exactly through the
/// geometric series 1/(1 - g^p) in the field.
pub fn pi_alpha_left(w: &LeftWord, spec: &Arc<PisotSpec>) -> FieldElement {
    let finite = FiniteWord {
        digits: {
            let mut d = w.head.clone();
            d.extend_from_slice(&w.fraction);
            d
        },
        point: w.head.len(),
    };
    let mut acc = eval_at_generator(&finite, spec);
    if !w.period.is_empty() {
        let g = spec.beta();
        let p = w.period.len() as u32;
        let mut pval = spec.zero();
        for &d in &w.period {
            pval = &(&pval * &g) + &spec.from_int(d);
        }
        // The innermost period block sits at g^{head_len}; blocks to the
        // left add factors of g^p, giving P g^h / (1 - g^p).
        let shift = g.pow(w.head.len() as u32);
        let ratio = &spec.one() - &g.pow(p);
        let series = ratio.invert().expect("g^p != 1");
        acc = &acc + &(&(&pval * &shift) * &series);
    }
    acc
}

fn eval_at_generator(w: &FiniteWord, spec: &Arc<PisotSpec>) -> FieldElement {
    let g = spec.beta();
    let mut acc = spec.zero();
    for &d in &w.digits {
        acc = &(&acc * &g) + &spec.from_int(d);
    }
    let frac_len = (w.digits.len() - w.point) as u32;
    if frac_len > 0 {
        let ginv = g.invert().expect("generator is nonzero");
        acc = &acc * &ginv.pow(frac_len);
    }
    acc
}

/// Parry admissibility: every tail of the digit sequence is strictly
/// lexicographically smaller than d*_beta(1).
pub fn is_admissible_beta(w: &RightWord, spec: &Arc<PisotSpec>) -> bool {
    let alpha = Alphabet::canonical(spec);
    if !alpha.contains_all(
        w.integer_part
            .iter()
            .chain(&w.fraction_preperiod)
            .chain(&w.fraction_period),
    ) {
        return false;
    }
    let dstar = crate::beta::renyi_d_star(spec);
    let seq = w.unrolled();
    let distinct_tails = seq.head.len() + seq.period.len().max(1);
    (0..distinct_tails).all(|i| lex_less(&seq.tail(i), &dstar))
}

/// Weak admissibility of a left-infinite word: every factor of length ell
/// (ell = |d_beta(1)|) of the unrolled word is strictly smaller than
/// t_1 ... t_ell; truncated factors at the right edge must not exceed the
/// corresponding prefix.
pub fn is_weakly_admissible(w: &LeftWord, spec: &Arc<PisotSpec>) -> Result<bool> {
    let alpha = Alphabet::canonical(spec);
    if !alpha.contains_all(w.period.iter().chain(&w.head).chain(&w.fraction)) {
        return Ok(false);
    }
    let d = crate::beta::renyi_d(spec)?;
    match d.digits() {
        crate::beta::RenyiDigits::Finite(t) => {
            Ok(weak_admissible_ell(w, t))
        }
        crate::beta::RenyiDigits::Infinite { .. } => {
            Ok(weak_admissible_tails(w, &crate::beta::renyi_d_star(spec)))
        }
    }
}

/// As [`is_weakly_admissible`] for a beta with finite d_beta(1) = t, with
/// the digit string t supplied by the caller. Useful when checking many
/// words against one base: t need only be computed once. The alphabet check
/// is implied by the window comparisons for digits within {0..t_1}, so the
/// caller must rule out digits outside the canonical alphabet beforehand
/// (the generators in this crate only produce canonical digits).
pub fn is_weakly_admissible_with(w: &LeftWord, t: &[Digit]) -> bool {
    weak_admissible_ell(w, t)
}

/// Differential form of the check: every window compared as an infinite
/// tail against d*_beta(1). Exposed for testing the equivalence stated for
/// the two phrasings of the definition.
pub fn is_weakly_admissible_dstar(w: &LeftWord, spec: &Arc<PisotSpec>) -> bool {
    weak_admissible_tails(w, &crate::beta::renyi_d_star(spec))
}

fn weak_admissible_ell(w: &LeftWord, t: &[Digit]) -> bool {
    let ell = t.len();
    let p = w.period.len();
    // Enough period copies that every distinct window position appears.
    let copies = if p == 0 { 0 } else { 2 + ell.div_ceil(p) };
    let mut unroll: Vec<Digit> = Vec::new();
    for _ in 0..copies {
        unroll.extend_from_slice(&w.period);
    }
    unroll.extend_from_slice(&w.head);
    unroll.extend_from_slice(&w.fraction);
    let n = unroll.len();
    for start in 0..n {
        let window = &unroll[start..n.min(start + ell)];
        // Full windows must be strictly smaller; truncated right-edge
        // windows may equal the prefix of t but must not exceed it.
        match window.iter().cmp(t[..window.len()].iter()) {
            std::cmp::Ordering::Less => {}
            std::cmp::Ordering::Equal => {
                if window.len() == ell {
                    return false;
                }
            }
            std::cmp::Ordering::Greater => return false,
        }
    }
    true
}

fn weak_admissible_tails(w: &LeftWord, dstar: &EpSeq) -> bool {
    let p = w.period.len();
    let mut finite_tail: Vec<Digit> = w.head.clone();
    finite_tail.extend_from_slice(&w.fraction);
    // Tails rooted in the periodic part: compare the purely periodic
    // continuation, and the seam reads passing into head + fraction.
    if p > 0 {
        for i in 0..p {
            let mut per = w.period.clone();
            per.rotate_left(i);
            let rot = EpSeq { head: Vec::new(), period: per };
            if lex_less(dstar, &rot) {
                return false;
            }
            for copies in 0..2 {
                let mut word = w.period[i..].to_vec();
                for _ in 0..copies {
                    word.extend_from_slice(&w.period);
                }
                word.extend_from_slice(&finite_tail);
                if finite_exceeds(&word, dstar) {
                    return false;
                }
            }
        }
    }
    for i in 0..finite_tail.len() {
        if finite_exceeds(&finite_tail[i..], dstar) {
            return false;
        }
    }
    true
}

/// True when the finite word is lexicographically greater than the
/// corresponding prefix of the infinite sequence.
fn finite_exceeds(word: &[Digit], seq: &EpSeq) -> bool {
    for (i, &d) in word.iter().enumerate() {
        let s = seq.get(i);
        if d != s {
            return d > s;
        }
    }
    false
}

/// JSON interchange form shared by all word types.
#[derive(Debug, Serialize, Deserialize)]
pub struct WordJson {
    pub period: Vec<Digit>,
    pub head: Vec<Digit>,
    pub fraction: Vec<Digit>,
    pub side: String,
}

impl LeftWord {
    pub fn to_json(&self) -> WordJson {
        WordJson {
            period: self.period.clone(),
            head: self.head.clone(),
            fraction: self.fraction.clone(),
            side: "left".into(),
        }
    }

    pub fn from_json(j: &WordJson) -> Result<Self> {
        if j.side != "left" {
            return Err(Error::Parse(format!("expected side=left, got {}", j.side)));
        }
        Ok(LeftWord {
            period: j.period.clone(),
            head: j.head.clone(),
            fraction: j.fraction.clone(),
        })
    }
}

impl RightWord {
    pub fn to_json(&self) -> WordJson {
        WordJson {
            period: self.fraction_period.clone(),
            head: self.integer_part.clone(),
            fraction: self.fraction_preperiod.clone(),
            side: "right".into(),
        }
    }

    pub fn from_json(j: &WordJson) -> Result<Self> {
        if j.side != "right" {
            return Err(Error::Parse(format!("expected side=right, got {}", j.side)));
        }
        Ok(RightWord {
            integer_part: j.head.clone(),
            fraction_preperiod: j.fraction.clone(),
            fraction_period: j.period.clone(),
        })
    }
}
