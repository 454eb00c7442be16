//! Dense univariate polynomials over an exact scalar field.
//!
//! These are working objects for the linear algebra layer: characteristic
//! and minimal polynomials, squarefree parts, and the moduli of extension
//! towers. Coefficients are stored low degree first with the leading
//! coefficient nonzero.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Write as _;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::scalar::{Rational, Scalar};
use crate::tower::SplitEvent;

#[derive(Clone, Debug, PartialEq)]
pub struct UPoly<K: Scalar> {
    coeffs: Vec<K>,
}

impl<K: Scalar> UPoly<K> {
    pub fn from_coeffs(mut coeffs: Vec<K>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn zero() -> Self {
        UPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        UPoly::constant(K::one())
    }

    pub fn constant(c: K) -> Self {
        UPoly::from_coeffs(vec![c])
    }

    /// The monomial `c * t^k`.
    pub fn monomial(c: K, k: usize) -> Self {
        let mut coeffs = vec![K::zero(); k + 1];
        coeffs[k] = c;
        UPoly::from_coeffs(coeffs)
    }

    /// The linear polynomial `t - r`.
    pub fn linear_root(r: &K) -> Self {
        UPoly::from_coeffs(vec![r.neg(), K::one()])
    }

    pub fn coeffs(&self) -> &[K] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> K {
        self.coeffs.get(k).cloned().unwrap_or_else(K::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> &K {
        self.coeffs.last().expect("leading coefficient of zero polynomial")
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().map_or(false, |c| c.is_one())
    }

    pub fn neg(&self) -> Self {
        UPoly {
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i).add(&rhs.coeff(i)));
        }
        UPoly::from_coeffs(out)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return UPoly::zero();
        }
        let mut out = vec![K::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        UPoly::from_coeffs(out)
    }

    pub fn scale(&self, c: &K) -> Self {
        if c.is_zero() {
            return UPoly::zero();
        }
        UPoly::from_coeffs(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return UPoly::zero();
        }
        let mut out = Vec::with_capacity(self.coeffs.len() - 1);
        for (i, c) in self.coeffs.iter().enumerate().skip(1) {
            out.push(c.mul(&K::from_int(i as i64)));
        }
        UPoly::from_coeffs(out)
    }

    pub fn eval(&self, x: &K) -> K {
        let mut acc = K::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    pub fn monic(&self) -> Result<Self, SplitEvent> {
        assert!(!self.is_zero(), "normalizing zero polynomial");
        if self.is_monic() {
            return Ok(self.clone());
        }
        let inv = self.leading().inv()?;
        Ok(self.scale(&inv))
    }

    /// Quotient and remainder. The divisor's leading coefficient is inverted,
    /// which may split a tower.
    pub fn divrem(&self, divisor: &Self) -> Result<(Self, Self), SplitEvent> {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let dd = divisor.degree().unwrap();
        if self.coeffs.len() < divisor.coeffs.len() {
            return Ok((UPoly::zero(), self.clone()));
        }
        let lead_inv = divisor.leading().inv()?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![K::zero(); self.coeffs.len() - divisor.coeffs.len() + 1];
        for i in (dd..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let q = rem[i].mul(&lead_inv);
            let shift = i - dd;
            for (j, c) in divisor.coeffs.iter().enumerate() {
                rem[shift + j] = rem[shift + j].sub(&q.mul(c));
            }
            quot[shift] = q;
        }
        Ok((UPoly::from_coeffs(quot), UPoly::from_coeffs(rem)))
    }

    /// Exact division; panics if the remainder is nonzero.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self, SplitEvent> {
        let (q, r) = self.divrem(divisor)?;
        assert!(r.is_zero(), "inexact univariate division");
        Ok(q)
    }

    /// Monic greatest common divisor by the Euclidean algorithm.
    pub fn gcd(&self, other: &Self) -> Result<Self, SplitEvent> {
        assert!(
            !(self.is_zero() && other.is_zero()),
            "gcd of two zero polynomials"
        );
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b)?;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `p / gcd(p, p')`: squarefree with the same root set.
    pub fn squarefree_part(&self) -> Result<Self, SplitEvent> {
        assert!(!self.is_zero(), "squarefree part of zero polynomial");
        if self.degree() == Some(0) {
            return Ok(UPoly::one());
        }
        let g = self.gcd(&self.derivative())?;
        self.div_exact(&g)?.monic()
    }

    pub fn map_coeffs<L: Scalar>(&self, f: impl Fn(&K) -> L) -> UPoly<L> {
        UPoly::from_coeffs(self.coeffs.iter().map(f).collect())
    }

    /// Printable form in the given variable, e.g. `t^2 - 1/2*t + 3`.
    pub fn display_with(&self, var: &str) -> String {
        if self.is_zero() {
            return String::from("0");
        }
        let mut out = String::new();
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let cs = {
                let mut s = String::new();
                let _ = write!(s, "{}", c);
                s
            };
            let (neg, mag) = match cs.strip_prefix('-') {
                Some(rest) => (true, String::from(rest)),
                None => (false, cs),
            };
            if first {
                if neg {
                    out.push('-');
                }
                first = false;
            } else if neg {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let needs_coeff = mag != "1" || k == 0;
            let compound = mag.contains(|ch| ch == '+' || ch == '-' || ch == '*');
            if needs_coeff {
                if compound && k > 0 {
                    let _ = write!(out, "({})", mag);
                } else {
                    out.push_str(&mag);
                }
                if k > 0 {
                    out.push('*');
                }
            }
            if k == 1 {
                out.push_str(var);
            } else if k > 1 {
                let _ = write!(out, "{}^{}", var, k);
            }
        }
        out
    }
}

/// Cheap partial factorization by trial division; the leftover cofactor is
/// kept whole. Good enough for divisor enumeration on the integers that show
/// up in characteristic polynomials.
fn trial_factor(n: &BigInt) -> Vec<(BigInt, u32)> {
    let mut n = n.abs();
    let mut out: Vec<(BigInt, u32)> = Vec::new();
    if n.is_zero() || n.is_one() {
        return out;
    }
    let mut push = |p: BigInt, e: u32| {
        if e > 0 {
            out.push((p, e));
        }
    };
    let mut e = 0;
    while n.is_even() {
        n /= 2;
        e += 1;
    }
    push(BigInt::from(2), e);
    let mut d = BigInt::from(3);
    let bound = BigInt::from(1_000_000u32);
    while &d * &d <= n && d <= bound {
        let mut e = 0;
        while (&n % &d).is_zero() {
            n /= &d;
            e += 1;
        }
        push(d.clone(), e);
        d += 2;
    }
    if !n.is_one() {
        push(n, 1);
    }
    out
}

fn divisors_capped(factors: &[(BigInt, u32)], cap: usize) -> Option<Vec<BigInt>> {
    let mut divs = vec![BigInt::one()];
    for (p, e) in factors {
        let mut next = Vec::with_capacity(divs.len() * (*e as usize + 1));
        let mut pk = BigInt::one();
        for _ in 0..=*e {
            for d in &divs {
                next.push(d * &pk);
            }
            pk *= p;
        }
        if next.len() > cap {
            return None;
        }
        divs = next;
    }
    Some(divs)
}

/// Extracts the rational roots of `p`, returning them sorted ascending
/// together with the deflated cofactor. Candidate roots come from divisor
/// pairs of the primitive integer scaling of `p`; if the divisor set is too
/// large to enumerate, extraction stops early and the remaining roots stay in
/// the cofactor (they are then found through tower arithmetic instead).
pub fn rational_roots(p: &UPoly<Rational>) -> (Vec<Rational>, UPoly<Rational>) {
    assert!(!p.is_zero());
    let mut roots = Vec::new();
    let mut rest = p.clone();

    // Roots at zero first.
    while !rest.is_zero() && Scalar::is_zero(&rest.coeff(0)) && rest.degree() > Some(0) {
        roots.push(Scalar::zero());
        rest = UPoly::from_coeffs(rest.coeffs()[1..].to_vec());
    }
    if rest.degree().map_or(true, |d| d == 0) {
        roots.sort();
        return (roots, rest);
    }

    // Scale to an integer polynomial.
    let den_lcm = rest
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let int_coeffs: Vec<BigInt> = rest
        .coeffs()
        .iter()
        .map(|c| c.numer() * (&den_lcm / c.denom()))
        .collect();
    let content = int_coeffs
        .iter()
        .fold(BigInt::zero(), |acc, c| acc.gcd(c));
    let int_coeffs: Vec<BigInt> = int_coeffs.iter().map(|c| c / &content).collect();

    let tail = int_coeffs.iter().find(|c| !c.is_zero()).unwrap().clone();
    let lead = int_coeffs.last().unwrap().clone();
    let cap = 1 << 14;
    let (tail_divs, lead_divs) = match (
        divisors_capped(&trial_factor(&tail), cap),
        divisors_capped(&trial_factor(&lead), cap),
    ) {
        (Some(a), Some(b)) if a.len() * b.len() <= cap => (a, b),
        _ => {
            roots.sort();
            return (roots, rest);
        }
    };

    let mut candidates: Vec<Rational> = Vec::new();
    for num in &tail_divs {
        for den in &lead_divs {
            let r = Rational::new(num.clone(), den.clone());
            candidates.push(r.clone());
            candidates.push(-r);
        }
    }
    candidates.sort();
    candidates.dedup();

    for cand in candidates {
        while rest.degree() > Some(0) && Scalar::is_zero(&rest.eval(&cand)) {
            roots.push(cand.clone());
            rest = rest
                .div_exact(&UPoly::linear_root(&cand))
                .expect("rational division cannot split");
        }
    }
    roots.sort();
    (roots, rest)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, rat_int};

    fn upi(coeffs: &[i64]) -> UPoly<Rational> {
        UPoly::from_coeffs(coeffs.iter().map(|&c| rat_int(c)).collect())
    }

    #[test]
    fn squarefree_part_collapses_repeated_roots() {
        // (t-1)^2 -> t-1
        assert_eq!(upi(&[1, -2, 1]).squarefree_part().unwrap(), upi(&[-1, 1]));
        // t^2-1 is already squarefree
        assert_eq!(upi(&[-1, 0, 1]).squarefree_part().unwrap(), upi(&[-1, 0, 1]));
        // t^3 - t^2 = t^2 (t-1) -> t(t-1) = t^2 - t
        assert_eq!(upi(&[0, 0, -1, 1]).squarefree_part().unwrap(), upi(&[0, -1, 1]));
    }

    #[test]
    fn squarefree_part_divides_and_is_squarefree() {
        for p in [upi(&[1, -2, 1]), upi(&[0, 0, -1, 1]), upi(&[4, 0, -5, 0, 1])] {
            let s = p.squarefree_part().unwrap();
            let (_, r) = p.divrem(&s).unwrap();
            assert!(r.is_zero(), "squarefree part must divide");
            let g = s.gcd(&s.derivative()).unwrap();
            assert_eq!(g, UPoly::one());
        }
    }

    #[test]
    fn gcd_examples() {
        // (t^2-1, t-1) -> t-1
        assert_eq!(upi(&[-1, 0, 1]).gcd(&upi(&[-1, 1])).unwrap(), upi(&[-1, 1]));
        // coprime
        assert_eq!(upi(&[1, 0, 1]).gcd(&upi(&[-1, 0, 1])).unwrap(), UPoly::one());
        // (t^4-1, t^2-1) -> t^2-1, checked against the division oracle
        let g = upi(&[-1, 0, 0, 0, 1]).gcd(&upi(&[-1, 0, 1])).unwrap();
        assert_eq!(g, upi(&[-1, 0, 1]));
        let (_, r1) = upi(&[-1, 0, 0, 0, 1]).divrem(&g).unwrap();
        let (_, r2) = upi(&[-1, 0, 1]).divrem(&g).unwrap();
        assert!(r1.is_zero() && r2.is_zero());
    }

    #[test]
    fn divrem_reconstructs() {
        let a = upi(&[3, -1, 4, 1, 5]);
        let b = upi(&[2, 0, 1]);
        let (q, r) = a.divrem(&b).unwrap();
        assert_eq!(q.mul(&b).add(&r), a);
        assert!(r.degree() < b.degree());
    }

    #[test]
    fn rational_root_extraction() {
        // (t-1)(t+2)(t^2+1), roots -2 and 1
        let p = upi(&[-1, 1]).mul(&upi(&[2, 1])).mul(&upi(&[1, 0, 1]));
        let (roots, rest) = rational_roots(&p);
        assert_eq!(roots, vec![rat_int(-2), rat_int(1)]);
        assert_eq!(rest.monic().unwrap(), upi(&[1, 0, 1]));

        // (2t-1)(t^2-2): rational root 1/2 only
        let p = upi(&[-1, 2]).mul(&upi(&[-2, 0, 1]));
        let (roots, rest) = rational_roots(&p);
        assert_eq!(roots, vec![rat(1, 2)]);
        assert_eq!(rest.monic().unwrap(), upi(&[-2, 0, 1]));

        // t^2: double root at zero
        let (roots, rest) = rational_roots(&upi(&[0, 0, 1]));
        assert_eq!(roots, vec![rat_int(0), rat_int(0)]);
        assert_eq!(rest, UPoly::one());
    }

    #[test]
    fn display_form() {
        assert_eq!(upi(&[-2, 0, 1]).display_with("a"), "a^2 - 2");
        assert_eq!(upi(&[3, 1]).display_with("t"), "t + 3");
        let half = UPoly::from_coeffs(vec![rat(1, 2), rat(-1, 2), rat_int(1)]);
        assert_eq!(half.display_with("t"), "t^2 - 1/2*t + 1/2");
    }
}
