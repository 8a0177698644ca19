//! Internal helpers for dense univariate polynomials over the rationals,
//! coefficients stored low order first.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub(crate) type Rat = BigRational;
pub(crate) type Poly = Vec<Rat>;

pub(crate) fn trim(p: &mut Poly) {
    while p.last().map_or(false, |c| c.is_zero()) {
        p.pop();
    }
}

pub(crate) fn eval(p: &[Rat], x: &Rat) -> Rat {
    let mut acc = Rat::zero();
    for c in p.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

pub(crate) fn derivative(p: &[Rat]) -> Poly {
    let mut out = Vec::with_capacity(p.len().saturating_sub(1));
    for (i, c) in p.iter().enumerate().skip(1) {
        out.push(c * Rat::from(BigInt::from(i)));
    }
    out
}

/// Remainder of `a` divided by `b`; `b` must be nonzero.
pub(crate) fn rem(a: &[Rat], b: &[Rat]) -> Poly {
    let mut r: Poly = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    let lead = b[db].clone();
    while r.len() > db {
        let dr = r.len() - 1;
        let q = r[dr].clone() / lead.clone();
        // r -= q * x^(dr-db) * b
        for (i, c) in b.iter().enumerate() {
            let idx = dr - db + i;
            let v = r[idx].clone() - q.clone() * c;
            r[idx] = v;
        }
        trim(&mut r);
        if r.is_empty() {
            break;
        }
    }
    r
}

/// Quotient and remainder of `a` divided by `b`.
pub(crate) fn div_rem(a: &[Rat], b: &[Rat]) -> (Poly, Poly) {
    let mut r: Poly = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    let lead = b[db].clone();
    let mut q: Poly = vec![Rat::zero(); a.len()];
    while r.len() > db {
        let dr = r.len() - 1;
        let c = r[dr].clone() / lead.clone();
        q[dr - db] = c.clone();
        for (i, bc) in b.iter().enumerate() {
            let idx = dr - db + i;
            let v = r[idx].clone() - c.clone() * bc;
            r[idx] = v;
        }
        trim(&mut r);
        if r.is_empty() {
            break;
        }
    }
    trim(&mut q);
    (q, r)
}

pub(crate) fn mul(a: &[Rat], b: &[Rat]) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rat::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            let v = out[i + j].clone() + ai * bj;
            out[i + j] = v;
        }
    }
    trim(&mut out);
    out
}

fn sub(a: &[Rat], b: &[Rat]) -> Poly {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.get(i).cloned().unwrap_or_else(Rat::zero);
        let y = b.get(i).cloned().unwrap_or_else(Rat::zero);
        out.push(x - y);
    }
    trim(&mut out);
    out
}

/// Extended Euclidean algorithm: returns (g, s, t) with s*a + t*b = g.
pub(crate) fn extended_gcd(a: &[Rat], b: &[Rat]) -> (Poly, Poly, Poly) {
    let mut r0: Poly = a.to_vec();
    let mut r1: Poly = b.to_vec();
    trim(&mut r0);
    trim(&mut r1);
    let mut s0: Poly = vec![Rat::one()];
    let mut s1: Poly = Vec::new();
    let mut t0: Poly = Vec::new();
    let mut t1: Poly = vec![Rat::one()];
    while !r1.is_empty() {
        let (q, r) = div_rem(&r0, &r1);
        let s = sub(&s0, &mul(&q, &s1));
        let t = sub(&t0, &mul(&q, &t1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
        t0 = std::mem::replace(&mut t1, t);
    }
    (r0, s0, t0)
}

/// Sturm chain of a squarefree polynomial.
pub(crate) fn sturm_chain(p: &[Rat]) -> Vec<Poly> {
    let mut chain = Vec::new();
    let mut p0: Poly = p.to_vec();
    trim(&mut p0);
    let mut p1 = derivative(&p0);
    chain.push(p0.clone());
    if p1.is_empty() {
        return chain;
    }
    chain.push(p1.clone());
    loop {
        let mut r = rem(&p0, &p1);
        if r.is_empty() {
            break;
        }
        for c in r.iter_mut() {
            *c = -c.clone();
        }
        chain.push(r.clone());
        p0 = std::mem::replace(&mut p1, r);
    }
    chain
}

fn sign_variations(chain: &[Poly], x: &Rat) -> usize {
    let mut count = 0;
    let mut last: Option<bool> = None; // true = positive
    for p in chain {
        let v = eval(p, x);
        if v.is_zero() {
            continue;
        }
        let pos = v.is_positive();
        if let Some(prev) = last {
            if prev != pos {
                count += 1;
            }
        }
        last = Some(pos);
    }
    count
}

/// Number of distinct real roots of the squarefree `p` in the interval (a, b].
pub(crate) fn count_roots(chain: &[Poly], a: &Rat, b: &Rat) -> usize {
    sign_variations(chain, a) - sign_variations(chain, b)
}

/// Cauchy bound: all real roots lie in (-B, B).
pub(crate) fn root_bound(p: &[Rat]) -> Rat {
    let lead = p.last().unwrap().clone();
    let mut m = Rat::zero();
    for c in &p[..p.len() - 1] {
        let q = (c / &lead).abs();
        if q > m {
            m = q;
        }
    }
    m + Rat::one()
}

/// Isolating intervals (a, b] for every real root of the squarefree `p`,
/// in increasing order.
pub(crate) fn isolate_real_roots(p: &[Rat]) -> Vec<(Rat, Rat)> {
    let chain = sturm_chain(p);
    let bound = root_bound(p);
    let mut out = Vec::new();
    let mut stack = vec![(-bound.clone(), bound)];
    while let Some((a, b)) = stack.pop() {
        let n = count_roots(&chain, &a, &b);
        if n == 0 {
            continue;
        }
        if n == 1 {
            out.push((a, b));
            continue;
        }
        let mid = (a.clone() + b.clone()) / Rat::from(BigInt::from(2));
        stack.push((a, mid.clone()));
        stack.push((mid, b));
    }
    out.sort_by(|x, y| x.0.cmp(&y.0));
    out
}

/// Shrinks an isolating interval (a, b] of `p` by bisection until its width
/// is at most `width`.
pub(crate) fn refine_root(chain: &[Poly], a: &Rat, b: &Rat, width: &Rat) -> (Rat, Rat) {
    let two = Rat::from(BigInt::from(2));
    let (mut lo, mut hi) = (a.clone(), b.clone());
    while &hi - &lo > *width {
        let mid = (&lo + &hi) / &two;
        if count_roots(chain, &lo, &mid) == 1 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    (lo, hi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::FromPrimitive;

    fn r(n: i64) -> Rat {
        Rat::from_i64(n).unwrap()
    }

    #[test]
    fn golden_roots() {
        // x^2 - x - 1
        let p = vec![r(-1), r(-1), r(1)];
        let roots = isolate_real_roots(&p);
        assert_eq!(roots.len(), 2);
        let chain = sturm_chain(&p);
        let (lo, hi) = refine_root(&chain, &roots[1].0, &roots[1].1, &Rat::new(1.into(), 1000.into()));
        assert!(lo > Rat::new(1618.into(), 1001.into()));
        assert!(hi < Rat::new(1619.into(), 1000.into()));
    }

    #[test]
    fn cubic_one_real_root() {
        // x^3 - x^2 - 1 has a single real root near 1.4656
        let p = vec![r(-1), r(0), r(-1), r(1)];
        let roots = isolate_real_roots(&p);
        assert_eq!(roots.len(), 1);
    }

    #[test]
    fn extended_gcd_inverts() {
        // invert x modulo x^2 - x - 1: x * (x - 1) = x^2 - x = 1 (mod M)
        let m = vec![r(-1), r(-1), r(1)];
        let x = vec![r(0), r(1)];
        let (g, _s, t) = extended_gcd(&m, &x);
        assert_eq!(g.len(), 1); // constant gcd
        // t/g is the inverse of x mod m
        let inv: Poly = t.iter().map(|c| c / &g[0]).collect();
        let prod = rem(&mul(&inv, &x), &m);
        assert_eq!(prod, vec![r(1)]);
    }
}
