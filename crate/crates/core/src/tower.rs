//! Algebraic extension towers with dynamic evaluation.
//!
//! A tower is a chain of extensions of the rationals, each level adjoining a
//! generator modulo a monic squarefree defining polynomial over the levels
//! below. Defining polynomials need not be irreducible: whenever an
//! inversion runs into a zero divisor, the extended Euclidean algorithm
//! exposes a proper factor of a modulus and reports it as a [`SplitEvent`].
//! The caller then continues the computation in one or both branch towers.
//!
//! Towers are immutable; extension and splitting produce new towers, so
//! branches never alias.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::scalar::{Rational, Scalar};
use crate::upoly::UPoly;

/// Canonical recursive representation of a tower element.
///
/// `Ext { level, coeffs }` is a polynomial in generator `level` with
/// coefficients involving only strictly lower generators; it is kept reduced
/// below the modulus degree, with at least two coefficients and a nonzero
/// leading one. Anything shorter collapses to the coefficient itself.
#[derive(Clone, Debug, PartialEq)]
pub(crate) enum Rep {
    Rat(Rational),
    Ext { level: usize, coeffs: Vec<Rep> },
}

impl Rep {
    fn zero() -> Rep {
        Rep::Rat(<Rational as num_traits::Zero>::zero())
    }

    fn one() -> Rep {
        Rep::Rat(num_traits::One::one())
    }

    fn is_zero(&self) -> bool {
        matches!(self, Rep::Rat(r) if num_traits::Zero::is_zero(r))
    }

    /// 0 for rationals, `level + 1` for an `Ext` node.
    fn height(&self) -> usize {
        match self {
            Rep::Rat(_) => 0,
            Rep::Ext { level, .. } => level + 1,
        }
    }
}

fn normalize_coeffs(level: usize, mut coeffs: Vec<Rep>) -> Rep {
    while coeffs.last().map_or(false, |c| c.is_zero()) {
        coeffs.pop();
    }
    match coeffs.len() {
        0 => Rep::zero(),
        1 => coeffs.pop().unwrap(),
        _ => Rep::Ext { level, coeffs },
    }
}

/// Views `r` as a coefficient vector in generator `level`.
fn coeffs_at(r: &Rep, level: usize) -> Vec<Rep> {
    match r {
        Rep::Ext { level: l, coeffs } if *l == level => coeffs.clone(),
        _ => {
            debug_assert!(r.height() <= level);
            vec![r.clone()]
        }
    }
}

/// A proper factorization of one tower modulus, discovered when inverting a
/// zero divisor. Both factors are monic and their product is the original
/// modulus.
#[derive(Clone, Debug)]
pub struct SplitEvent {
    level: usize,
    factor: Vec<Rep>,
    cofactor: Vec<Rep>,
}

impl SplitEvent {
    pub fn level(&self) -> usize {
        self.level
    }

    pub fn factor_degrees(&self) -> (usize, usize) {
        (self.factor.len() - 1, self.cofactor.len() - 1)
    }
}

impl fmt::Display for SplitEvent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "modulus of level {} splits into factors of degree {} and {}",
            self.level,
            self.factor.len() - 1,
            self.cofactor.len() - 1
        )
    }
}

#[derive(Clone, Debug)]
struct Level {
    name: String,
    /// Monic defining polynomial, low degree first; coefficients only involve
    /// generators of strictly lower levels.
    modulus: Vec<Rep>,
}

/// An extension tower of the rationals. The empty tower is the rationals
/// themselves.
#[derive(Clone, Debug)]
pub struct NumberTower {
    levels: Vec<Level>,
    journal: Vec<String>,
}

impl PartialEq for NumberTower {
    fn eq(&self, other: &Self) -> bool {
        // The journal is diagnostics, not identity.
        self.levels.len() == other.levels.len()
            && self
                .levels
                .iter()
                .zip(&other.levels)
                .all(|(a, b)| a.name == b.name && a.modulus == b.modulus)
    }
}

impl NumberTower {
    pub fn rationals() -> Arc<NumberTower> {
        Arc::new(NumberTower {
            levels: Vec::new(),
            journal: Vec::new(),
        })
    }

    pub fn height(&self) -> usize {
        self.levels.len()
    }

    pub fn level_name(&self, level: usize) -> &str {
        &self.levels[level].name
    }

    /// The defining polynomial of a level rendered in its generator name.
    pub fn modulus_display(&self, level: usize) -> String {
        let var = self.levels[level].name.clone();
        let terms: Vec<String> = self.levels[level]
            .modulus
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| {
                let cs = self.display_rep(c);
                let body = if k == 0 {
                    cs
                } else {
                    let head = if cs == "1" {
                        String::new()
                    } else if cs.contains('+') || cs.contains('-') || cs.contains('*') {
                        format!("({})*", cs)
                    } else {
                        format!("{}*", cs)
                    };
                    if k == 1 {
                        format!("{}{}", head, var)
                    } else {
                        format!("{}{}^{}", head, var, k)
                    }
                };
                body
            })
            .collect();
        let mut out = String::new();
        for (i, t) in terms.iter().enumerate() {
            if i > 0 {
                if let Some(rest) = t.strip_prefix('-') {
                    out.push_str(" - ");
                    out.push_str(rest);
                    continue;
                }
                out.push_str(" + ");
            }
            out.push_str(t);
        }
        out
    }

    pub fn journal(&self) -> &[String] {
        &self.journal
    }

    fn is_prefix_of(&self, other: &NumberTower) -> bool {
        self.levels.len() <= other.levels.len()
            && self
                .levels
                .iter()
                .zip(&other.levels)
                .all(|(a, b)| a.name == b.name && a.modulus == b.modulus)
    }

    // ---- representation arithmetic -------------------------------------

    fn add_rep(&self, a: &Rep, b: &Rep) -> Rep {
        match (a, b) {
            (Rep::Rat(x), Rep::Rat(y)) => Rep::Rat(x + y),
            _ => {
                let level = a.height().max(b.height()) - 1;
                let av = coeffs_at(a, level);
                let bv = coeffs_at(b, level);
                let n = av.len().max(bv.len());
                let mut out = Vec::with_capacity(n);
                for i in 0..n {
                    let x = av.get(i).cloned().unwrap_or_else(Rep::zero);
                    let y = bv.get(i).cloned().unwrap_or_else(Rep::zero);
                    out.push(self.add_rep(&x, &y));
                }
                normalize_coeffs(level, out)
            }
        }
    }

    fn neg_rep(&self, a: &Rep) -> Rep {
        match a {
            Rep::Rat(x) => Rep::Rat(-x),
            Rep::Ext { level, coeffs } => Rep::Ext {
                level: *level,
                coeffs: coeffs.iter().map(|c| self.neg_rep(c)).collect(),
            },
        }
    }

    fn sub_rep(&self, a: &Rep, b: &Rep) -> Rep {
        self.add_rep(a, &self.neg_rep(b))
    }

    fn mul_rep(&self, a: &Rep, b: &Rep) -> Rep {
        match (a, b) {
            (Rep::Rat(x), Rep::Rat(y)) => Rep::Rat(x * y),
            _ => {
                if a.is_zero() || b.is_zero() {
                    return Rep::zero();
                }
                let level = a.height().max(b.height()) - 1;
                let av = coeffs_at(a, level);
                let bv = coeffs_at(b, level);
                let mut out = vec![Rep::zero(); av.len() + bv.len() - 1];
                for (i, x) in av.iter().enumerate() {
                    if x.is_zero() {
                        continue;
                    }
                    for (j, y) in bv.iter().enumerate() {
                        if y.is_zero() {
                            continue;
                        }
                        let p = self.mul_rep(x, y);
                        out[i + j] = self.add_rep(&out[i + j], &p);
                    }
                }
                let reduced = self.reduce_at_level(level, out);
                normalize_coeffs(level, reduced)
            }
        }
    }

    /// Reduces a coefficient vector in generator `level` below the modulus
    /// degree. The modulus is monic, so no inversions are needed.
    fn reduce_at_level(&self, level: usize, mut coeffs: Vec<Rep>) -> Vec<Rep> {
        let modulus = &self.levels[level].modulus;
        let dm = modulus.len() - 1;
        while coeffs.len() > dm {
            let top = coeffs.pop().unwrap();
            if top.is_zero() {
                continue;
            }
            let shift = coeffs.len() - dm;
            for (j, m) in modulus.iter().take(dm).enumerate() {
                if m.is_zero() {
                    continue;
                }
                let t = self.mul_rep(&top, m);
                coeffs[shift + j] = self.sub_rep(&coeffs[shift + j], &t);
            }
        }
        coeffs
    }

    fn inv_rep(&self, a: &Rep) -> Result<Rep, SplitEvent> {
        match a {
            Rep::Rat(x) => {
                assert!(!num_traits::Zero::is_zero(x), "inverting exact zero");
                Ok(Rep::Rat(x.recip()))
            }
            Rep::Ext { level, coeffs } => {
                let level = *level;
                // Extended Euclid of `a` against the modulus, tracking only
                // the cofactor on the `a` side: r = s * a (mod modulus).
                let mut r0 = self.levels[level].modulus.clone();
                let mut s0: Vec<Rep> = vec![];
                let mut r1 = coeffs.clone();
                let mut s1 = vec![Rep::one()];
                while !pvec_is_zero(&r1) {
                    let (q, r) = self.pvec_divrem(&r0, &r1)?;
                    let qs1 = self.pvec_mul(&q, &s1);
                    let s = self.pvec_sub(&s0, &qs1);
                    r0 = core::mem::replace(&mut r1, r);
                    s0 = core::mem::replace(&mut s1, s);
                }
                let g = r0;
                debug_assert!(!pvec_is_zero(&g));
                if g.len() == 1 {
                    // Unit gcd: s0/g inverts a modulo the modulus.
                    let ginv = self.inv_rep(&g[0])?;
                    let scaled: Vec<Rep> =
                        s0.iter().map(|c| self.mul_rep(c, &ginv)).collect();
                    let reduced = self.reduce_at_level(level, scaled);
                    Ok(normalize_coeffs(level, reduced))
                } else {
                    // Zero divisor: the gcd is a proper factor of the modulus.
                    let lead_inv = self.inv_rep(g.last().unwrap())?;
                    let factor: Vec<Rep> =
                        g.iter().map(|c| self.mul_rep(c, &lead_inv)).collect();
                    let (cofactor, rem) =
                        self.pvec_divrem(&self.levels[level].modulus, &factor)?;
                    debug_assert!(pvec_is_zero(&rem));
                    Err(SplitEvent {
                        level,
                        factor,
                        cofactor,
                    })
                }
            }
        }
    }

    // ---- coefficient-vector polynomial helpers --------------------------

    fn pvec_sub(&self, a: &[Rep], b: &[Rep]) -> Vec<Rep> {
        let n = a.len().max(b.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let x = a.get(i).cloned().unwrap_or_else(Rep::zero);
            let y = b.get(i).cloned().unwrap_or_else(Rep::zero);
            out.push(self.sub_rep(&x, &y));
        }
        pvec_trim(out)
    }

    fn pvec_mul(&self, a: &[Rep], b: &[Rep]) -> Vec<Rep> {
        if a.is_empty() || b.is_empty() {
            return vec![];
        }
        let mut out = vec![Rep::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let p = self.mul_rep(x, y);
                out[i + j] = self.add_rep(&out[i + j], &p);
            }
        }
        pvec_trim(out)
    }

    fn pvec_divrem(&self, a: &[Rep], b: &[Rep]) -> Result<(Vec<Rep>, Vec<Rep>), SplitEvent> {
        assert!(!b.is_empty(), "division by zero polynomial");
        if a.len() < b.len() {
            return Ok((vec![], a.to_vec()));
        }
        let lead_inv = self.inv_rep(b.last().unwrap())?;
        let db = b.len() - 1;
        let mut rem = a.to_vec();
        let mut quot = vec![Rep::zero(); a.len() - db];
        for i in (db..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let q = self.mul_rep(&rem[i], &lead_inv);
            let shift = i - db;
            for (j, c) in b.iter().enumerate() {
                let t = self.mul_rep(&q, c);
                rem[shift + j] = self.sub_rep(&rem[shift + j], &t);
            }
            quot[shift] = q;
        }
        Ok((pvec_trim(quot), pvec_trim(rem)))
    }

    /// Recursively re-reduces a representation after a modulus changed.
    fn renormalize_rep(&self, r: &Rep) -> Rep {
        match r {
            Rep::Rat(_) => r.clone(),
            Rep::Ext { level, coeffs } => {
                let fixed: Vec<Rep> = coeffs.iter().map(|c| self.renormalize_rep(c)).collect();
                let reduced = self.reduce_at_level(*level, fixed);
                normalize_coeffs(*level, reduced)
            }
        }
    }

    fn display_rep(&self, r: &Rep) -> String {
        match r {
            Rep::Rat(x) => x.to_string(),
            Rep::Ext { level, coeffs } => {
                let var = &self.levels[*level].name;
                let mut out = String::new();
                for (k, c) in coeffs.iter().enumerate().rev() {
                    if c.is_zero() {
                        continue;
                    }
                    let cs = self.display_rep(c);
                    let (neg, mag) = match cs.strip_prefix('-') {
                        Some(rest) if !cs.contains(" - ") && !cs.contains(" + ") => {
                            (true, rest.to_string())
                        }
                        _ => (false, cs),
                    };
                    if out.is_empty() {
                        if neg {
                            out.push('-');
                        }
                    } else if neg {
                        out.push_str(" - ");
                    } else {
                        out.push_str(" + ");
                    }
                    let compound = mag.contains(" + ") || mag.contains(" - ");
                    if k == 0 {
                        if compound {
                            // A trailing constant never needs parentheses.
                            out.push_str(&mag);
                        } else {
                            out.push_str(&mag);
                        }
                        continue;
                    }
                    if mag != "1" {
                        if compound {
                            out.push('(');
                            out.push_str(&mag);
                            out.push(')');
                        } else {
                            out.push_str(&mag);
                        }
                        out.push('*');
                    }
                    if k == 1 {
                        out.push_str(var);
                    } else {
                        out.push_str(&format!("{}^{}", var, k));
                    }
                }
                if out.is_empty() {
                    out.push('0');
                }
                out
            }
        }
    }
}

fn pvec_trim(mut v: Vec<Rep>) -> Vec<Rep> {
    while v.last().map_or(false, |c| c.is_zero()) {
        v.pop();
    }
    v
}

fn pvec_is_zero(v: &[Rep]) -> bool {
    v.is_empty()
}

/// Deterministic structural order on representations, used to sort
/// eigenvalues reproducibly.
pub(crate) fn rep_structural_cmp(a: &Rep, b: &Rep) -> Ordering {
    match (a, b) {
        (Rep::Rat(x), Rep::Rat(y)) => x.cmp(y),
        (Rep::Rat(_), Rep::Ext { .. }) => Ordering::Less,
        (Rep::Ext { .. }, Rep::Rat(_)) => Ordering::Greater,
        (
            Rep::Ext {
                level: la,
                coeffs: ca,
            },
            Rep::Ext {
                level: lb,
                coeffs: cb,
            },
        ) => la
            .cmp(lb)
            .then_with(|| ca.len().cmp(&cb.len()))
            .then_with(|| {
                for (x, y) in ca.iter().zip(cb.iter()).rev() {
                    let c = rep_structural_cmp(x, y);
                    if c != Ordering::Equal {
                        return c;
                    }
                }
                Ordering::Equal
            }),
    }
}

/// Rejection reasons for [`adjoin`].
#[derive(Clone, Debug)]
pub enum AdjoinError {
    NotSquarefree,
    DegreeTooSmall,
    Split(SplitEvent),
}

impl fmt::Display for AdjoinError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AdjoinError::NotSquarefree => write!(f, "defining polynomial is not squarefree"),
            AdjoinError::DegreeTooSmall => write!(f, "defining polynomial must have degree >= 2"),
            AdjoinError::Split(ev) => write!(f, "tower split while adjoining: {}", ev),
        }
    }
}

impl From<SplitEvent> for AdjoinError {
    fn from(ev: SplitEvent) -> Self {
        AdjoinError::Split(ev)
    }
}

/// Extends a tower with a new generator satisfying `modulus(gen) = 0`.
///
/// The modulus must be squarefree over the tower (verified here) of degree at
/// least 2; it is made monic internally. Existing elements embed unchanged.
pub fn adjoin(
    tower: &Arc<NumberTower>,
    modulus: &UPoly<TowerElem>,
    name_hint: &str,
) -> Result<(Arc<NumberTower>, TowerElem), AdjoinError> {
    if modulus.degree().map_or(true, |d| d < 2) {
        return Err(AdjoinError::DegreeTooSmall);
    }
    let monic = modulus.monic()?;
    let gcd = monic.gcd(&monic.derivative())?;
    if gcd.degree() != Some(0) {
        return Err(AdjoinError::NotSquarefree);
    }

    let mut name = String::from(name_hint);
    while tower.levels.iter().any(|l| l.name == name) {
        name.push('\'');
    }
    let level = tower.levels.len();
    let coeffs: Vec<Rep> = monic
        .coeffs()
        .iter()
        .map(|c| {
            debug_assert!(c.rep.height() <= level);
            c.rep.clone()
        })
        .collect();
    let mut levels = tower.levels.clone();
    levels.push(Level {
        name,
        modulus: coeffs,
    });
    let next = Arc::new(NumberTower {
        levels,
        journal: tower.journal.clone(),
    });
    let gen = TowerElem {
        tower: next.clone(),
        rep: Rep::Ext {
            level,
            coeffs: vec![Rep::zero(), Rep::one()],
        },
    };
    Ok((next, gen))
}

/// Builds the two branch towers of a split, ordered by ascending factor
/// degree. All moduli above the split level are re-reduced.
pub fn split(tower: &Arc<NumberTower>, ev: &SplitEvent) -> (Arc<NumberTower>, Arc<NumberTower>) {
    let mut branches = Vec::with_capacity(2);
    for fac in [&ev.factor, &ev.cofactor] {
        let mut levels: Vec<Level> = tower.levels[..ev.level].to_vec();
        levels.push(Level {
            name: tower.levels[ev.level].name.clone(),
            modulus: fac.clone(),
        });
        let mut partial = NumberTower {
            levels,
            journal: tower.journal.clone(),
        };
        for lvl in &tower.levels[ev.level + 1..] {
            let modulus: Vec<Rep> = lvl
                .modulus
                .iter()
                .map(|c| partial.renormalize_rep(c))
                .collect();
            partial.levels.push(Level {
                name: lvl.name.clone(),
                modulus,
            });
        }
        partial.journal.push(format!(
            "split {}: kept factor of degree {}",
            tower.levels[ev.level].name,
            fac.len() - 1
        ));
        branches.push(Arc::new(partial));
    }
    let second = branches.pop().unwrap();
    let first = branches.pop().unwrap();
    if ev.cofactor.len() < ev.factor.len() {
        (second, first)
    } else {
        (first, second)
    }
}

/// The generator of a given tower level, as an element.
pub fn generator(tower: &Arc<NumberTower>, level: usize) -> TowerElem {
    assert!(level < tower.height());
    let rep = normalize_coeffs(level, vec![Rep::zero(), Rep::one()]);
    // Degree-one moduli collapse the generator to a constant.
    let rep = tower.renormalize_rep(&rep);
    TowerElem {
        tower: tower.clone(),
        rep,
    }
}

/// An element of an extension tower.
#[derive(Clone, Debug)]
pub struct TowerElem {
    tower: Arc<NumberTower>,
    rep: Rep,
}

impl TowerElem {
    pub fn from_rat_in(tower: &Arc<NumberTower>, r: &Rational) -> TowerElem {
        TowerElem {
            tower: tower.clone(),
            rep: Rep::Rat(r.clone()),
        }
    }

    pub fn tower(&self) -> &Arc<NumberTower> {
        &self.tower
    }

    /// Re-reduces this element into a branch (or taller) tower.
    pub fn reduce_into(&self, target: &Arc<NumberTower>) -> TowerElem {
        TowerElem {
            tower: target.clone(),
            rep: target.renormalize_rep(&self.rep),
        }
    }

    pub fn structural_cmp(&self, other: &TowerElem) -> Ordering {
        rep_structural_cmp(&self.rep, &other.rep)
    }

    /// Picks the operative tower for a binary operation: the taller of the
    /// two, which the shorter must prefix.
    fn unify<'a>(&'a self, other: &'a TowerElem) -> &'a Arc<NumberTower> {
        if Arc::ptr_eq(&self.tower, &other.tower) {
            return &self.tower;
        }
        if self.tower.height() >= other.tower.height() {
            assert!(
                other.tower.is_prefix_of(&self.tower),
                "arithmetic across incompatible number towers"
            );
            &self.tower
        } else {
            assert!(
                self.tower.is_prefix_of(&other.tower),
                "arithmetic across incompatible number towers"
            );
            &other.tower
        }
    }
}

impl PartialEq for TowerElem {
    fn eq(&self, other: &Self) -> bool {
        self.rep == other.rep
    }
}

impl fmt::Display for TowerElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.tower.display_rep(&self.rep))
    }
}

impl Scalar for TowerElem {
    fn zero() -> Self {
        TowerElem {
            tower: NumberTower::rationals(),
            rep: Rep::zero(),
        }
    }

    fn one() -> Self {
        TowerElem {
            tower: NumberTower::rationals(),
            rep: Rep::one(),
        }
    }

    fn from_int(n: i64) -> Self {
        TowerElem {
            tower: NumberTower::rationals(),
            rep: Rep::Rat(crate::scalar::rat_int(n)),
        }
    }

    fn from_rat(r: &Rational) -> Self {
        TowerElem {
            tower: NumberTower::rationals(),
            rep: Rep::Rat(r.clone()),
        }
    }

    fn is_zero(&self) -> bool {
        self.rep.is_zero()
    }

    fn is_one(&self) -> bool {
        matches!(&self.rep, Rep::Rat(r) if num_traits::One::is_one(r))
    }

    fn neg(&self) -> Self {
        TowerElem {
            tower: self.tower.clone(),
            rep: self.tower.neg_rep(&self.rep),
        }
    }

    fn add(&self, rhs: &Self) -> Self {
        let t = self.unify(rhs).clone();
        let rep = t.add_rep(&self.rep, &rhs.rep);
        TowerElem { tower: t, rep }
    }

    fn sub(&self, rhs: &Self) -> Self {
        let t = self.unify(rhs).clone();
        let rep = t.sub_rep(&self.rep, &rhs.rep);
        TowerElem { tower: t, rep }
    }

    fn mul(&self, rhs: &Self) -> Self {
        let t = self.unify(rhs).clone();
        let rep = t.mul_rep(&self.rep, &rhs.rep);
        TowerElem { tower: t, rep }
    }

    fn inv(&self) -> Result<Self, SplitEvent> {
        let rep = self.tower.inv_rep(&self.rep)?;
        Ok(TowerElem {
            tower: self.tower.clone(),
            rep,
        })
    }

    fn to_rat(&self) -> Option<Rational> {
        match &self.rep {
            Rep::Rat(r) => Some(r.clone()),
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, rat_int};

    fn upoly_q(coeffs: &[i64]) -> UPoly<TowerElem> {
        UPoly::from_coeffs(coeffs.iter().map(|&c| TowerElem::from_int(c)).collect())
    }

    #[test]
    fn adjoin_sqrt2_and_reduce() {
        let q = NumberTower::rationals();
        let (t, alpha) = adjoin(&q, &upoly_q(&[-2, 0, 1]), "a").unwrap();
        assert_eq!(t.height(), 1);
        // a * a reduces to 2
        let sq = alpha.mul(&alpha);
        assert_eq!(sq.to_rat(), Some(rat_int(2)));
        // invert a -> a/2, and a * (a/2) == 1
        let inv = alpha.inv().unwrap();
        assert!(alpha.mul(&inv).is_one());
        let half_alpha = alpha.mul(&TowerElem::from_rat(&rat(1, 2)));
        assert_eq!(inv, half_alpha);
    }

    #[test]
    fn invert_plain_rational() {
        let two = TowerElem::from_int(2);
        assert_eq!(two.inv().unwrap().to_rat(), Some(rat(1, 2)));
    }

    #[test]
    fn adjoin_rejects_non_squarefree() {
        let q = NumberTower::rationals();
        // (t-1)^2
        let err = adjoin(&q, &upoly_q(&[1, -2, 1]), "a").unwrap_err();
        assert!(matches!(err, AdjoinError::NotSquarefree));
    }

    #[test]
    fn zero_divisor_splits_reducible_modulus() {
        let q = NumberTower::rationals();
        // t^2 - 1 is squarefree but reducible; adjoining is legal.
        let (t, alpha) = adjoin(&q, &upoly_q(&[-1, 0, 1]), "a").unwrap();
        let a_minus_1 = alpha.sub(&TowerElem::one());
        let ev = a_minus_1.inv().unwrap_err();
        assert_eq!(ev.level(), 0);
        assert_eq!(ev.factor_degrees(), (1, 1));

        // Product of the branch moduli equals the original modulus.
        let prod = t.pvec_mul(&ev.factor, &ev.cofactor);
        assert_eq!(prod, t.levels[0].modulus);

        // In the branch where a = 1, a - 1 reduces to zero; in the other,
        // a = -1 and a - 1 = -2 is invertible.
        let (b1, b2) = split(&t, &ev);
        let v1 = a_minus_1.reduce_into(&b1);
        let v2 = a_minus_1.reduce_into(&b2);
        let zeros = [v1.is_zero(), v2.is_zero()];
        assert_eq!(zeros.iter().filter(|z| **z).count(), 1);
        let nonzero = if v1.is_zero() { v2 } else { v1 };
        assert_eq!(nonzero.to_rat(), Some(rat_int(-2)));
        assert!(nonzero.inv().unwrap().mul(&nonzero).is_one());
    }

    #[test]
    fn nested_tower_arithmetic() {
        let q = NumberTower::rationals();
        let (t1, alpha) = adjoin(&q, &upoly_q(&[-2, 0, 1]), "a").unwrap();
        // b^2 = 3 over Q(a)
        let m = UPoly::from_coeffs(vec![
            TowerElem::from_int(-3).reduce_into(&t1),
            TowerElem::from_int(0).reduce_into(&t1),
            TowerElem::from_int(1).reduce_into(&t1),
        ]);
        let (t2, beta) = adjoin(&t1, &m, "b").unwrap();
        let alpha2 = alpha.reduce_into(&t2);
        let s = alpha2.add(&beta);
        // (a + b)^2 = 5 + 2ab
        let sq = s.mul(&s);
        let two_ab = alpha2.mul(&beta).mul(&TowerElem::from_int(2));
        assert_eq!(sq, two_ab.add(&TowerElem::from_int(5)));
        // (a + b)^{-1} = b - a  because (b + a)(b - a) = 1
        let inv = s.inv().unwrap();
        assert_eq!(inv, beta.sub(&alpha2));
        assert!(s.mul(&inv).is_one());
    }

    #[test]
    fn prefix_towers_unify() {
        let q = NumberTower::rationals();
        let (t1, alpha) = adjoin(&q, &upoly_q(&[-2, 0, 1]), "a").unwrap();
        let plain = TowerElem::from_int(7);
        let sum = plain.add(&alpha);
        assert_eq!(sum.tower().height(), t1.height());
        assert_eq!(sum.sub(&alpha).to_rat(), Some(rat_int(7)));
    }

    #[test]
    fn display_forms() {
        let q = NumberTower::rationals();
        let (t1, alpha) = adjoin(&q, &upoly_q(&[-2, 0, 1]), "a").unwrap();
        let e = alpha
            .mul(&TowerElem::from_rat(&rat(1, 2)))
            .add(&TowerElem::from_int(3));
        assert_eq!(alloc::format!("{}", e), "1/2*a + 3");
        assert_eq!(t1.modulus_display(0), "a^2 - 2");
    }
}
