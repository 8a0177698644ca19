//! Exact arithmetic in Q(beta) for a Pisot number beta, with certified
//! sign, floor and conjugate evaluation. No floating point is used in any
//! decision path.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::{self, Poly, Rat};

/// Closed rational interval \[lo, hi\].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatInterval {
    pub lo: Rat,
    pub hi: Rat,
}

impl RatInterval {
    pub fn new(lo: Rat, hi: Rat) -> Self {
        debug_assert!(lo <= hi);
        RatInterval { lo, hi }
    }

    pub fn point(x: Rat) -> Self {
        RatInterval { lo: x.clone(), hi: x }
    }

    pub fn width(&self) -> Rat {
        &self.hi - &self.lo
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    pub fn add(&self, other: &Self) -> Self {
        RatInterval::new(&self.lo + &other.lo, &self.hi + &other.hi)
    }

    pub fn neg(&self) -> Self {
        RatInterval::new(-self.hi.clone(), -self.lo.clone())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut vals = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        vals.sort();
        RatInterval::new(vals[0].clone(), vals[3].clone())
    }

    pub fn abs(&self) -> Self {
        if !self.lo.is_negative() {
            self.clone()
        } else if !self.hi.is_positive() {
            self.neg()
        } else {
            let m = std::cmp::max(-self.lo.clone(), self.hi.clone());
            RatInterval::new(Rat::zero(), m)
        }
    }

    /// Horner evaluation of a rational polynomial over this interval.
    pub fn eval_poly(&self, p: &[Rat]) -> Self {
        let mut acc = RatInterval::point(Rat::zero());
        for c in p.iter().rev() {
            acc = acc.mul(self).add(&RatInterval::point(c.clone()));
        }
        acc
    }
}

/// Rational square root enclosure of a nonnegative interval, to the given width.
fn sqrt_interval(x: &RatInterval, width: &Rat) -> RatInterval {
    fn sqrt_bounds(v: &Rat, width: &Rat) -> (Rat, Rat) {
        if v.is_negative() {
            return (Rat::zero(), Rat::zero());
        }
        let mut lo = Rat::zero();
        let mut hi = std::cmp::max(Rat::one(), v.clone());
        let two = Rat::from(BigInt::from(2));
        while &hi - &lo > *width {
            let mid = (&lo + &hi) / &two;
            if &mid * &mid <= *v {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        (lo, hi)
    }
    let (lo, _) = sqrt_bounds(&x.lo, width);
    let (_, hi) = sqrt_bounds(&x.hi, width);
    RatInterval::new(lo, hi)
}

/// Isolating region of a conjugate root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConjugateRegion {
    Real(RatInterval),
    Complex { re: RatInterval, im: RatInterval },
}

/// A Pisot base: monic integer minimal polynomial
/// `x^d - a_{d-1} x^{d-1} - ... - a_1 x - a_0` together with certified root
/// data for beta and its conjugates.
#[derive(Debug, Clone)]
pub struct PisotSpec {
    /// (a_0, ..., a_{d-1}), constant to high order.
    coeffs: Vec<BigInt>,
    degree: usize,
    /// Minimal polynomial, low order first, as rationals.
    min_poly: Poly,
    sturm: Vec<Poly>,
    beta_interval: (Rat, Rat),
    conjugates: Vec<ConjugateRegion>,
    alpha_index: usize,
    floor_beta: i64,
}

impl PartialEq for PisotSpec {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs && self.alpha_index == other.alpha_index
    }
}
impl Eq for PisotSpec {}

impl PisotSpec {
    /// Builds and certifies a spec from `(a_0, ..., a_{d-1})`.
    pub fn new(coeffs: &[i64]) -> Result<Arc<PisotSpec>> {
        Self::with_options(coeffs, 0, false)
    }

    /// As [`PisotSpec::new`], selecting which conjugate is designated alpha
    /// (index into the conjugate list, real conjugates in increasing order
    /// followed by the complex pair). `allow_high_degree` accepts degree >= 5
    /// polynomials whose irreducibility is only checked against rational roots.
    pub fn with_options(
        coeffs: &[i64],
        alpha_index: usize,
        allow_high_degree: bool,
    ) -> Result<Arc<PisotSpec>> {
        let d = coeffs.len();
        if d == 0 {
            return Err(Error::Parse("empty coefficient list".into()));
        }
        if d == 1 {
            return Err(Error::UnsupportedDegree(
                "degree 1 has no conjugate to serve as alpha".into(),
            ));
        }
        let coeffs: Vec<BigInt> = coeffs.iter().map(|&c| BigInt::from(c)).collect();
        if coeffs[0].is_zero() {
            return Err(Error::Reducible("a_0 = 0, so x divides the polynomial".into()));
        }
        // min poly: x^d - a_{d-1} x^{d-1} - ... - a_0
        let mut min_poly: Poly = coeffs
            .iter()
            .map(|c| Rat::from(-c.clone()))
            .collect();
        min_poly.push(Rat::one());

        check_irreducible(&coeffs, allow_high_degree)?;

        let sturm = poly::sturm_chain(&min_poly);
        let one = Rat::one();
        let m_one = -Rat::one();

        // Isolate and classify every real root.
        let mut real_roots = poly::isolate_real_roots(&min_poly);
        for r in real_roots.iter_mut() {
            *r = resolve_against_units(&sturm, r)?;
        }
        let n_real = real_roots.len();
        let mut beta_interval = None;
        let mut real_conjugates = Vec::new();
        for (lo, hi) in real_roots {
            if lo >= one {
                if beta_interval.is_some() {
                    return Err(Error::NotPisot("two real roots greater than 1".into()));
                }
                beta_interval = Some((lo, hi));
            } else if hi <= m_one || (lo >= m_one && lo < one && hi > one) {
                return Err(Error::NotPisot("a real conjugate has modulus >= 1".into()));
            } else if lo >= m_one && hi <= one {
                real_conjugates.push(poly::refine_root(
                    &sturm,
                    &lo,
                    &hi,
                    &Rat::new(BigInt::one(), BigInt::from(64)),
                ));
            } else {
                return Err(Error::NotPisot("a real root has modulus >= 1".into()));
            }
        }
        let beta_interval =
            beta_interval.ok_or_else(|| Error::NotPisot("no real root greater than 1".into()))?;
        let beta_interval = poly::refine_root(
            &sturm,
            &beta_interval.0,
            &beta_interval.1,
            &Rat::new(BigInt::one(), BigInt::from(64)),
        );

        // Complex conjugates come in pairs; their moduli are certified through
        // the product of all root moduli, which equals |a_0|.
        let n_pairs = (d - 1 - real_conjugates.len()) / 2;
        let mut conjugates: Vec<ConjugateRegion> = Vec::new();
        let mut refined_reals: Vec<(Rat, Rat)> = real_conjugates;
        if n_pairs > 1 {
            return Err(Error::UnsupportedDegree(
                "cannot certify more than one complex conjugate pair".into(),
            ));
        }
        if n_pairs == 1 {
            certify_complex_pair_modulus(
                &sturm,
                &coeffs[0],
                &mut refined_reals,
                &mut (beta_interval.clone()),
            )?;
        }
        let _ = n_real;

        for r in &refined_reals {
            conjugates.push(ConjugateRegion::Real(RatInterval::new(r.0.clone(), r.1.clone())));
        }
        if n_pairs == 1 {
            let (re, im) = complex_pair_box(
                &min_poly,
                &sturm,
                &beta_interval,
                &refined_reals,
                &Rat::new(BigInt::one(), BigInt::from(64)),
            );
            conjugates.push(ConjugateRegion::Complex { re: re.clone(), im: im.clone() });
            conjugates.push(ConjugateRegion::Complex { re, im: im.neg() });
        }
        if alpha_index >= conjugates.len() {
            return Err(Error::Parse(format!(
                "alpha_index {} out of range (the spec has {} conjugates)",
                alpha_index,
                conjugates.len()
            )));
        }

        let floor_beta = floor_of_root(&sturm, &min_poly, &beta_interval);
        Ok(Arc::new(PisotSpec {
            coeffs,
            degree: d,
            min_poly,
            sturm,
            beta_interval,
            conjugates,
            alpha_index,
            floor_beta,
        }))
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn beta_interval(&self) -> RatInterval {
        RatInterval::new(self.beta_interval.0.clone(), self.beta_interval.1.clone())
    }

    pub fn conjugates(&self) -> &[ConjugateRegion] {
        &self.conjugates
    }

    pub fn alpha_index(&self) -> usize {
        self.alpha_index
    }

    /// Floor of beta; the canonical alphabet is {0, ..., floor_beta}.
    pub fn floor_beta(&self) -> i64 {
        self.floor_beta
    }

    /// True for x^2 - a x - 1, where alpha = -1/beta.
    pub fn is_quadratic_unit(&self) -> bool {
        self.degree == 2 && self.coeffs[0] == BigInt::one()
    }

    /// The parameter a of a quadratic unit spec x^2 - a x - 1.
    pub fn unit_a(&self) -> Option<i64> {
        if self.is_quadratic_unit() {
            use num_traits::ToPrimitive;
            self.coeffs[1].to_i64()
        } else {
            None
        }
    }

    pub fn zero(self: &Arc<Self>) -> FieldElement {
        FieldElement {
            coords: vec![Rat::zero(); self.degree],
            spec: Arc::clone(self),
        }
    }

    pub fn one(self: &Arc<Self>) -> FieldElement {
        self.from_rational(Rat::one())
    }

    pub fn beta(self: &Arc<Self>) -> FieldElement {
        let mut coords = vec![Rat::zero(); self.degree];
        coords[1] = Rat::one();
        FieldElement { coords, spec: Arc::clone(self) }
    }

    pub fn from_rational(self: &Arc<Self>, q: Rat) -> FieldElement {
        let mut coords = vec![Rat::zero(); self.degree];
        coords[0] = q;
        FieldElement { coords, spec: Arc::clone(self) }
    }

    pub fn from_int(self: &Arc<Self>, n: i64) -> FieldElement {
        self.from_rational(Rat::from(BigInt::from(n)))
    }

    /// Builds an element from power-basis coordinates (c_0, ..., c_{d-1}).
    pub fn element(self: &Arc<Self>, coords: Vec<Rat>) -> Result<FieldElement> {
        if coords.len() != self.degree {
            return Err(Error::Parse(format!(
                "expected {} coordinates, got {}",
                self.degree,
                coords.len()
            )));
        }
        Ok(FieldElement { coords, spec: Arc::clone(self) })
    }

    /// Refines a working copy of the beta interval by one bisection step.
    fn bisect_beta(&self, lo: &mut Rat, hi: &mut Rat) {
        let two = Rat::from(BigInt::from(2));
        let mid = (&*lo + &*hi) / &two;
        // Invariant from construction: exactly one root of the minimal
        // polynomial lies in (lo, hi].
        if poly::count_roots(&self.sturm, lo, &mid) == 1 {
            *hi = mid;
        } else {
            *lo = mid;
        }
    }
}

/// Sufficient conditions under which beta has Property (F).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FinitenessCondition {
    /// a_{d-1} >= a_{d-2} >= ... >= a_0 > 0.
    DecreasingCoeffs,
    /// a_{d-1} > a_{d-2} + ... + a_0 > 0 with all a_i >= 0.
    DominantLead,
    /// Cubic unit: a_0 = 1, a_2 >= 0, -1 <= a_1 <= a_2 + 1.
    CubicUnit,
    Unknown,
}

impl fmt::Display for FinitenessCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            FinitenessCondition::DecreasingCoeffs => "DecreasingCoeffs",
            FinitenessCondition::DominantLead => "DominantLead",
            FinitenessCondition::CubicUnit => "CubicUnit",
            FinitenessCondition::Unknown => "Unknown",
        };
        f.write_str(s)
    }
}

/// Returns the first sufficient Property (F) condition matched by the spec.
pub fn check_finiteness_conditions(spec: &PisotSpec) -> FinitenessCondition {
    let a = spec.coeffs();
    let d = spec.degree();
    let zero = BigInt::zero();
    // Theorem of Frougny-Solomyak: decreasing positive coefficients.
    if a[0] > zero && (1..d).all(|i| a[i] >= a[i - 1]) {
        return FinitenessCondition::DecreasingCoeffs;
    }
    // Hollander: dominant leading coefficient.
    let tail: BigInt = a[..d - 1].iter().sum();
    if a[..d - 1].iter().all(|c| *c >= zero) && tail > zero && a[d - 1] > tail {
        return FinitenessCondition::DominantLead;
    }
    // Akiyama: cubic units.
    if d == 3
        && a[0] == BigInt::one()
        && a[2] >= zero
        && a[1] >= BigInt::from(-1)
        && a[1] <= &a[2] + BigInt::one()
    {
        return FinitenessCondition::CubicUnit;
    }
    FinitenessCondition::Unknown
}

fn check_irreducible(coeffs: &[BigInt], allow_high_degree: bool) -> Result<()> {
    let d = coeffs.len();
    // Rational roots are integer divisors of a_0.
    for div in divisors(&coeffs[0]) {
        for cand in [div.clone(), -div] {
            // p(cand) = cand^d - sum a_i cand^i
            let mut v = BigInt::one();
            for _ in 0..d {
                v *= &cand;
            }
            let mut pow = BigInt::one();
            for a in coeffs {
                v -= a * &pow;
                pow *= &cand;
            }
            if v.is_zero() {
                return Err(Error::Reducible(format!("rational root {cand}")));
            }
        }
    }
    if d == 4 {
        // Bounded search for an integer (x^2+bx+c)(x^2+ex+f) factorization.
        let a3 = -coeffs[3].clone();
        let a2 = -coeffs[2].clone();
        let a1 = -coeffs[1].clone();
        let a0 = -coeffs[0].clone();
        for c in divisors(&a0).into_iter().flat_map(|v| [v.clone(), -v]) {
            let f = &a0 / &c;
            // b + e = a3, b e = a2 - c - f, b f + c e = a1
            let s = a3.clone();
            let prod = &a2 - &c - &f;
            let disc = &s * &s - BigInt::from(4) * &prod;
            if disc.sign() == num_bigint::Sign::Minus {
                continue;
            }
            let root = disc.sqrt();
            if &root * &root != disc {
                continue;
            }
            for b2 in [&s + &root, &s - &root] {
                if (&b2 % BigInt::from(2)).is_zero() {
                    let b = b2 / BigInt::from(2);
                    let e = &s - &b;
                    if &b * &f + &c * &e == a1 {
                        return Err(Error::Reducible(
                            "integer quadratic*quadratic factorization".into(),
                        ));
                    }
                }
            }
        }
    }
    if d >= 5 && !allow_high_degree {
        return Err(Error::UnsupportedDegree(
            "irreducibility at degree >= 5 is only rational-root checked; \
             pass the high-degree override to accept"
                .into(),
        ));
    }
    Ok(())
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut out = Vec::new();
    let mut i = BigInt::one();
    while &i * &i <= n {
        if (&n % &i).is_zero() {
            out.push(i.clone());
            out.push(&n / &i);
        }
        i += 1;
    }
    out.sort();
    out.dedup();
    out
}

/// Refines an isolating interval until it is strictly separated from both
/// -1 and 1 (roots cannot equal them: rational roots were excluded).
fn resolve_against_units(chain: &[Poly], r: &(Rat, Rat)) -> Result<(Rat, Rat)> {
    let one = Rat::one();
    let m_one = -Rat::one();
    let (mut lo, mut hi) = r.clone();
    let two = Rat::from(BigInt::from(2));
    for _ in 0..100_000 {
        let sep_one = hi < one || lo >= one;
        let sep_m_one = lo > m_one || hi <= m_one;
        if sep_one && sep_m_one {
            return Ok((lo, hi));
        }
        let mid = (&lo + &hi) / &two;
        if poly::count_roots(chain, &lo, &mid) == 1 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Err(Error::NotPisot("could not separate a root from the unit circle".into()))
}

/// Certifies that the single complex conjugate pair has modulus < 1, using
/// |product of all roots| = |a_0| and refined enclosures of the real roots.
fn certify_complex_pair_modulus(
    chain: &[Poly],
    a0: &BigInt,
    reals: &mut [(Rat, Rat)],
    beta: &mut (Rat, Rat),
) -> Result<()> {
    let one = Rat::one();
    for _ in 0..200 {
        // modulus^2 of the pair = |a0| / prod |real roots|
        let mut num = RatInterval::point(Rat::from(a0.abs()));
        let b = RatInterval::new(beta.0.clone(), beta.1.clone()).abs();
        let mut den = b;
        for r in reals.iter() {
            den = den.mul(&RatInterval::new(r.0.clone(), r.1.clone()).abs());
        }
        if den.lo.is_positive() {
            // num / den as interval
            num = num.mul(&RatInterval::new(
                Rat::one() / den.hi.clone(),
                Rat::one() / den.lo.clone(),
            ));
            if num.hi < one {
                return Ok(());
            }
            if num.lo >= one {
                return Err(Error::NotPisot("complex conjugate pair has modulus >= 1".into()));
            }
        }
        // Tighten everything and retry.
        let two = Rat::from(BigInt::from(2));
        let mid = (&beta.0 + &beta.1) / &two;
        if poly::count_roots(chain, &beta.0, &mid) == 1 {
            beta.1 = mid;
        } else {
            beta.0 = mid;
        }
        for r in reals.iter_mut() {
            let mid = (&r.0 + &r.1) / &two;
            if poly::count_roots(chain, &r.0, &mid) == 1 {
                r.1 = mid;
            } else {
                r.0 = mid;
            }
        }
    }
    Err(Error::NotPisot(
        "could not separate the complex pair modulus from 1".into(),
    ))
}

/// Isolating box for the complex pair, obtained by deflating the minimal
/// polynomial by interval enclosures of all real roots.
fn complex_pair_box(
    min_poly: &Poly,
    chain: &[Poly],
    beta: &(Rat, Rat),
    reals: &[(Rat, Rat)],
    width: &Rat,
) -> (RatInterval, RatInterval) {
    let mut beta = beta.clone();
    let mut reals: Vec<(Rat, Rat)> = reals.to_vec();
    let two = Rat::from(BigInt::from(2));
    loop {
        // Synthetic division by (x - r) for each real root, in interval arithmetic.
        let mut coeffs: Vec<RatInterval> = min_poly
            .iter()
            .map(|c| RatInterval::point(c.clone()))
            .collect();
        let mut all_roots: Vec<RatInterval> = Vec::new();
        all_roots.push(RatInterval::new(beta.0.clone(), beta.1.clone()));
        for r in &reals {
            all_roots.push(RatInterval::new(r.0.clone(), r.1.clone()));
        }
        for root in &all_roots {
            let mut out: Vec<RatInterval> = vec![RatInterval::point(Rat::zero()); coeffs.len() - 1];
            let mut carry = RatInterval::point(Rat::zero());
            for i in (0..coeffs.len()).rev() {
                let c = coeffs[i].add(&carry.mul(root));
                if i > 0 {
                    out[i - 1] = c.clone();
                }
                carry = c;
            }
            coeffs = out;
        }
        // coeffs is now an interval quadratic x^2 + B x + C (leading ~1).
        debug_assert_eq!(coeffs.len(), 3);
        let lead = coeffs[2].clone();
        let inv_lead = RatInterval::new(
            Rat::one() / lead.hi.clone(),
            Rat::one() / lead.lo.clone(),
        );
        let b = coeffs[1].mul(&inv_lead);
        let c = coeffs[0].mul(&inv_lead);
        let re = b.neg().mul(&RatInterval::point(Rat::new(BigInt::one(), BigInt::from(2))));
        let disc = c.sub(&re.mul(&re));
        if disc.lo.is_positive() {
            let im = sqrt_interval(&disc, width);
            if re.width() <= *width && im.width() <= *width {
                return (re, im);
            }
        }
        // Refine all real enclosures and retry.
        let mid = (&beta.0 + &beta.1) / &two;
        if poly::count_roots(chain, &beta.0, &mid) == 1 {
            beta.1 = mid;
        } else {
            beta.0 = mid;
        }
        for r in reals.iter_mut() {
            let mid = (&r.0 + &r.1) / &two;
            if poly::count_roots(chain, &r.0, &mid) == 1 {
                r.1 = mid;
            } else {
                r.0 = mid;
            }
        }
    }
}

fn floor_of_root(chain: &[Poly], _p: &Poly, interval: &(Rat, Rat)) -> i64 {
    use num_traits::ToPrimitive;
    let (mut lo, mut hi) = interval.clone();
    let two = Rat::from(BigInt::from(2));
    loop {
        let fl = lo.floor();
        if hi <= &fl + Rat::one() {
            return fl.to_integer().to_i64().expect("floor of beta fits in i64");
        }
        let mid = (&lo + &hi) / &two;
        if poly::count_roots(chain, &lo, &mid) == 1 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
}

/// An element of Q(beta) in the power basis 1, beta, ..., beta^{d-1},
/// with exact rational coordinates.
#[derive(Debug, Clone)]
pub struct FieldElement {
    coords: Vec<Rat>,
    spec: Arc<PisotSpec>,
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.spec == other.spec && self.coords == other.coords
    }
}
impl Eq for FieldElement {}

impl std::hash::Hash for FieldElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.coords.hash(state);
    }
}

impl FieldElement {
    pub fn spec(&self) -> &Arc<PisotSpec> {
        &self.spec
    }

    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    /// Rational value if the element is rational (all higher coordinates zero).
    pub fn as_rational(&self) -> Option<Rat> {
        if self.coords[1..].iter().all(|c| c.is_zero()) {
            Some(self.coords[0].clone())
        } else {
            None
        }
    }

    fn same_spec(&self, other: &Self) -> Result<()> {
        if self.spec == other.spec {
            Ok(())
        } else {
            Err(Error::SpecMismatch)
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<FieldElement> {
        self.same_spec(other)?;
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a + b)
            .collect();
        Ok(FieldElement { coords, spec: Arc::clone(&self.spec) })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<FieldElement> {
        self.checked_add(&other.neg())
    }

    pub fn neg(&self) -> FieldElement {
        FieldElement {
            coords: self.coords.iter().map(|c| -c.clone()).collect(),
            spec: Arc::clone(&self.spec),
        }
    }

    pub fn checked_mul(&self, other: &Self) -> Result<FieldElement> {
        self.same_spec(other)?;
        let prod = poly::mul(&self.coords, &other.coords);
        let red = poly::rem(&prod, &self.spec.min_poly);
        let mut coords = red;
        coords.resize(self.spec.degree, Rat::zero());
        Ok(FieldElement { coords, spec: Arc::clone(&self.spec) })
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against
    /// the minimal polynomial.
    pub fn invert(&self) -> Result<FieldElement> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut a = self.coords.clone();
        poly::trim(&mut a);
        let (g, _s, t) = poly::extended_gcd(&self.spec.min_poly, &a);
        debug_assert_eq!(g.len(), 1, "minimal polynomial must be irreducible");
        let ginv = Rat::one() / g[0].clone();
        let mut coords: Vec<Rat> = t.iter().map(|c| c * &ginv).collect();
        let red = poly::rem(&coords, &self.spec.min_poly);
        coords = red;
        coords.resize(self.spec.degree, Rat::zero());
        Ok(FieldElement { coords, spec: Arc::clone(&self.spec) })
    }

    pub fn scale(&self, q: &Rat) -> FieldElement {
        FieldElement {
            coords: self.coords.iter().map(|c| c * q).collect(),
            spec: Arc::clone(&self.spec),
        }
    }

    pub fn pow(&self, n: u32) -> FieldElement {
        let mut acc = self.spec.one();
        for _ in 0..n {
            acc = acc.checked_mul(self).expect("same spec");
        }
        acc
    }

    /// Sign of the real embedding at beta: -1, 0 or +1.
    ///
    /// Decided by interval evaluation over a shrinking enclosure of beta;
    /// terminates because a nonzero element cannot vanish at a root of an
    /// irreducible polynomial.
    pub fn sign(&self) -> i32 {
        if self.is_zero() {
            return 0;
        }
        let (mut lo, mut hi) = self.spec.beta_interval.clone();
        loop {
            let iv = RatInterval::new(lo.clone(), hi.clone()).eval_poly(&self.coords);
            if iv.lo.is_positive() {
                return 1;
            }
            if iv.hi.is_negative() {
                return -1;
            }
            self.spec.bisect_beta(&mut lo, &mut hi);
        }
    }

    pub fn is_positive(&self) -> bool {
        self.sign() > 0
    }

    pub fn is_negative(&self) -> bool {
        self.sign() < 0
    }

    /// Compares two elements through the real embedding at beta.
    pub fn cmp_at_beta(&self, other: &Self) -> std::cmp::Ordering {
        match self.checked_sub(other).expect("same spec").sign() {
            s if s > 0 => std::cmp::Ordering::Greater,
            0 => std::cmp::Ordering::Equal,
            _ => std::cmp::Ordering::Less,
        }
    }

    /// Largest integer n with n <= x at the real embedding.
    pub fn floor_at_beta(&self) -> BigInt {
        use num_traits::ToPrimitive;
        let _ = BigInt::zero().to_i64();
        let (mut lo, mut hi) = self.spec.beta_interval.clone();
        let quarter = Rat::new(BigInt::one(), BigInt::from(4));
        let mut iv;
        loop {
            iv = RatInterval::new(lo.clone(), hi.clone()).eval_poly(&self.coords);
            if iv.width() < quarter {
                break;
            }
            self.spec.bisect_beta(&mut lo, &mut hi);
        }
        let approx = iv.lo.floor().to_integer();
        for delta in -2i64..=2 {
            let n = &approx + BigInt::from(delta);
            let x_minus_n = self.checked_sub(&self.spec.from_rational(Rat::from(n.clone())))
                .expect("same spec");
            let x_minus_n1 = self
                .checked_sub(&self.spec.from_rational(Rat::from(&n + BigInt::one())))
                .expect("same spec");
            if x_minus_n.sign() >= 0 && x_minus_n1.sign() < 0 {
                return n;
            }
        }
        unreachable!("floor search window missed; interval evaluation is inconsistent")
    }

    /// Certified enclosure of the same coordinate vector evaluated at the
    /// designated conjugate alpha, to within `precision`. Diagnostics only;
    /// all decisions in the library stay exact.
    pub fn conjugate_value(&self, precision: &Rat) -> ConjugateRegion {
        let spec = &self.spec;
        match &spec.conjugates[spec.alpha_index] {
            ConjugateRegion::Real(iv) => {
                let (mut lo, mut hi) = (iv.lo.clone(), iv.hi.clone());
                let two = Rat::from(BigInt::from(2));
                loop {
                    let out = RatInterval::new(lo.clone(), hi.clone()).eval_poly(&self.coords);
                    if out.width() <= *precision {
                        return ConjugateRegion::Real(out);
                    }
                    let mid = (&lo + &hi) / &two;
                    if poly::count_roots(&spec.sturm, &lo, &mid) == 1 {
                        hi = mid;
                    } else {
                        lo = mid;
                    }
                }
            }
            ConjugateRegion::Complex { .. } => {
                let mut width = precision.clone();
                loop {
                    let reals: Vec<(Rat, Rat)> = spec
                        .conjugates
                        .iter()
                        .filter_map(|c| match c {
                            ConjugateRegion::Real(iv) => Some((iv.lo.clone(), iv.hi.clone())),
                            _ => None,
                        })
                        .collect();
                    let (re, im) =
                        complex_pair_box(&spec.min_poly, &spec.sturm, &spec.beta_interval, &reals, &width);
                    let im = if spec_alpha_im_negative(spec) { im.neg() } else { im };
                    // Complex Horner over the box.
                    let mut acc_re = RatInterval::point(Rat::zero());
                    let mut acc_im = RatInterval::point(Rat::zero());
                    for c in self.coords.iter().rev() {
                        let nre = acc_re.mul(&re).sub(&acc_im.mul(&im)).add(&RatInterval::point(c.clone()));
                        let nim = acc_re.mul(&im).add(&acc_im.mul(&re));
                        acc_re = nre;
                        acc_im = nim;
                    }
                    if acc_re.width() <= *precision && acc_im.width() <= *precision {
                        return ConjugateRegion::Complex { re: acc_re, im: acc_im };
                    }
                    width = width / Rat::from(BigInt::from(4));
                }
            }
        }
    }
}

fn spec_alpha_im_negative(spec: &PisotSpec) -> bool {
    match &spec.conjugates[spec.alpha_index] {
        ConjugateRegion::Complex { im, .. } => im.hi.is_negative() || im.lo.is_negative(),
        _ => false,
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})b")?,
                _ => write!(f, "({c})b^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl std::ops::Add for &FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: &FieldElement) -> FieldElement {
        self.checked_add(rhs).expect("spec mismatch")
    }
}
impl std::ops::Sub for &FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: &FieldElement) -> FieldElement {
        self.checked_sub(rhs).expect("spec mismatch")
    }
}
impl std::ops::Mul for &FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: &FieldElement) -> FieldElement {
        self.checked_mul(rhs).expect("spec mismatch")
    }
}
impl std::ops::Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement::neg(self)
    }
}
