use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};

use super::spec::{Monomial, RingSpec};
use crate::error::{Error, Result};

/// A reduced element of a [`RingSpec`] ring.
///
/// Coefficients are least nonnegative residues when the modulus is positive and
/// exponents of finite-order variables are residues `0..k`. Integer coefficients
/// are `i64`; arithmetic that leaves that range panics.
#[derive(Clone)]
pub struct RingElement {
    spec: RingSpec,
    terms: BTreeMap<Monomial, i64>,
}

impl RingElement {
    pub fn zero(spec: &RingSpec) -> Self {
        RingElement {
            spec: spec.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(spec: &RingSpec) -> Self {
        RingElement::constant(spec, 1)
    }

    pub fn constant(spec: &RingSpec, c: i64) -> Self {
        RingElement::monomial(spec, &vec![0; spec.nvars()], c)
    }

    /// The variable with index `i`.
    pub fn variable(spec: &RingSpec, i: usize) -> Self {
        let mut exps = vec![0; spec.nvars()];
        exps[i] = 1;
        RingElement::monomial(spec, &exps, 1)
    }

    /// `c * t_1^{e_1} … t_r^{e_r}`, reduced.
    pub fn monomial(spec: &RingSpec, exps: &[i64], c: i64) -> Self {
        assert_eq!(exps.len(), spec.nvars(), "exponent vector length mismatch");
        let mut e = RingElement::zero(spec);
        e.add_term(Monomial(exps.to_vec()), c as i128);
        e
    }

    /// Builds an element from `(exponents, coefficient)` pairs.
    pub fn from_terms<I>(spec: &RingSpec, terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<i64>, i64)>,
    {
        let mut e = RingElement::zero(spec);
        for (exps, c) in terms {
            assert_eq!(exps.len(), spec.nvars(), "exponent vector length mismatch");
            e.add_term(Monomial(exps), c as i128);
        }
        e
    }

    pub fn spec(&self) -> &RingSpec {
        &self.spec
    }

    fn reduce_monomial(&self, mut m: Monomial) -> Monomial {
        for (e, v) in m.0.iter_mut().zip(self.spec.vars()) {
            if v.order > 0 {
                *e = e.rem_euclid(v.order as i64);
            }
        }
        m
    }

    fn reduce_coeff(&self, c: i128) -> i64 {
        let p = self.spec.modulus();
        if p > 0 {
            c.rem_euclid(p as i128) as i64
        } else {
            i64::try_from(c).expect("integer coefficient overflow")
        }
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: i128) {
        let m = self.reduce_monomial(m);
        let current = self.terms.get(&m).copied().unwrap_or(0) as i128;
        let c = self.reduce_coeff(current + c);
        if c == 0 {
            self.terms.remove(&m);
        } else {
            self.terms.insert(m, c);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .map(|(m, &c)| m.is_one() && c == 1)
                .unwrap_or(false)
    }

    /// Terms in ascending canonical order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, i64)> {
        self.terms.iter().map(|(m, &c)| (m, c))
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, exps: &[i64]) -> i64 {
        let m = self.reduce_monomial(Monomial(exps.to_vec()));
        self.terms.get(&m).copied().unwrap_or(0)
    }

    /// Highest term in canonical order.
    pub fn leading_term(&self) -> Option<(&Monomial, i64)> {
        self.terms.iter().next_back().map(|(m, &c)| (m, c))
    }

    fn coefficient_is_unit(&self, c: i64) -> bool {
        if self.spec.modulus() > 0 {
            c != 0
        } else {
            c == 1 || c == -1
        }
    }

    /// A single term with unit coefficient; monomials are units in these rings.
    pub fn is_unit_monomial(&self) -> bool {
        self.terms.len() == 1 && self.coefficient_is_unit(*self.terms.values().next().unwrap())
    }

    /// Inverse of a unit monomial.
    pub fn unit_inverse(&self) -> Option<RingElement> {
        if !self.is_unit_monomial() {
            return None;
        }
        let (m, c) = self.terms.iter().next().unwrap();
        let inv_c = match self.spec.modulus() {
            0 => *c,
            p => mod_inverse(*c as u64, p) as i64,
        };
        let exps: Vec<i64> = m.0.iter().map(|e| -e).collect();
        Some(RingElement::monomial(&self.spec, &exps, inv_c))
    }

    pub fn scale(&self, k: i64) -> RingElement {
        let mut out = RingElement::zero(&self.spec);
        for (m, c) in self.terms() {
            out.add_term(m.clone(), c as i128 * k as i128);
        }
        out
    }

    /// Multiplies by `t^shift`.
    pub fn shift(&self, shift: &[i64]) -> RingElement {
        let mut out = RingElement::zero(&self.spec);
        for (m, c) in self.terms() {
            let exps: Vec<i64> = m.0.iter().zip(shift).map(|(a, b)| a + b).collect();
            out.add_term(Monomial(exps), c as i128);
        }
        out
    }

    pub fn pow(&self, mut k: u32) -> RingElement {
        let mut base = self.clone();
        let mut acc = RingElement::one(&self.spec);
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            k >>= 1;
        }
        acc
    }

    /// Per-variable minimum exponent over all terms (zeros for the zero element).
    pub fn min_exponents(&self) -> Vec<i64> {
        let n = self.spec.nvars();
        let mut mins: Option<Vec<i64>> = None;
        for m in self.terms.keys() {
            mins = Some(match mins {
                None => m.0.clone(),
                Some(cur) => cur.iter().zip(&m.0).map(|(a, b)| *a.min(b)).collect(),
            });
        }
        mins.unwrap_or_else(|| vec![0; n])
    }

    /// Associate representative: infinite-order variables shifted so their
    /// minimum exponent is 0, leading coefficient positive (monic over `Z_p`).
    pub fn unit_normalized(&self) -> RingElement {
        if self.is_zero() {
            return self.clone();
        }
        let mins = self.min_exponents();
        let shift: Vec<i64> = mins
            .iter()
            .zip(self.spec.vars())
            .map(|(&m, v)| if v.is_finite() { 0 } else { -m })
            .collect();
        let shifted = self.shift(&shift);
        let (_, lc) = shifted.leading_term().unwrap();
        match self.spec.modulus() {
            0 if lc < 0 => shifted.scale(-1),
            0 => shifted,
            p => shifted.scale(mod_inverse(lc as u64, p) as i64),
        }
    }

    /// Image in a ring with the same variables: coefficients reduced by
    /// `target`'s modulus and exponents by its variable orders.
    pub fn project(&self, target: &RingSpec) -> Result<RingElement> {
        if target.nvars() != self.spec.nvars() {
            return Err(Error::SpecMismatch);
        }
        if self.spec.modulus() != 0 && self.spec.modulus() != target.modulus() {
            return Err(Error::SpecMismatch);
        }
        for (src, dst) in self.spec.vars().iter().zip(target.vars()) {
            if src.order > 0 && (dst.order == 0 || src.order % dst.order != 0) {
                return Err(Error::SpecMismatch);
            }
        }
        let mut out = RingElement::zero(target);
        for (m, c) in self.terms() {
            out.add_term(m.clone(), c as i128);
        }
        Ok(out)
    }

    pub(crate) fn assert_same_spec(&self, other: &RingElement) {
        assert!(
            self.spec.same(&other.spec),
            "ring spec mismatch: {} vs {}",
            self.spec,
            other.spec
        );
    }

    pub fn try_add(&self, other: &RingElement) -> Result<RingElement> {
        if !self.spec.same(&other.spec) {
            return Err(Error::SpecMismatch);
        }
        Ok(self + other)
    }

    pub fn try_mul(&self, other: &RingElement) -> Result<RingElement> {
        if !self.spec.same(&other.spec) {
            return Err(Error::SpecMismatch);
        }
        Ok(self * other)
    }
}

pub(crate) fn mod_inverse(a: u64, p: u64) -> u64 {
    let (mut old_r, mut r) = (a as i128 % p as i128, p as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    assert_eq!(old_r, 1, "{a} is not invertible modulo {p}");
    old_s.rem_euclid(p as i128) as u64
}

impl PartialEq for RingElement {
    fn eq(&self, other: &Self) -> bool {
        self.spec.same(&other.spec) && self.terms == other.terms
    }
}

impl Eq for RingElement {}

impl Hash for RingElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

impl Ord for RingElement {
    /// Compares terms from the highest monomial down; an exhausted side is smaller.
    fn cmp(&self, other: &Self) -> Ordering {
        let mut a = self.terms.iter().rev();
        let mut b = other.terms.iter().rev();
        loop {
            match (a.next(), b.next()) {
                (None, None) => return Ordering::Equal,
                (None, Some(_)) => return Ordering::Less,
                (Some(_), None) => return Ordering::Greater,
                (Some((ma, ca)), Some((mb, cb))) => {
                    let o = ma.cmp(mb).then_with(|| ca.cmp(cb));
                    if o != Ordering::Equal {
                        return o;
                    }
                }
            }
        }
    }
}

impl PartialOrd for RingElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for &RingElement {
    type Output = RingElement;
    fn add(self, rhs: &RingElement) -> RingElement {
        self.assert_same_spec(rhs);
        let mut out = self.clone();
        for (m, c) in rhs.terms() {
            out.add_term(m.clone(), c as i128);
        }
        out
    }
}

impl Sub for &RingElement {
    type Output = RingElement;
    fn sub(self, rhs: &RingElement) -> RingElement {
        self.assert_same_spec(rhs);
        let mut out = self.clone();
        for (m, c) in rhs.terms() {
            out.add_term(m.clone(), -(c as i128));
        }
        out
    }
}

impl Neg for &RingElement {
    type Output = RingElement;
    fn neg(self) -> RingElement {
        self.scale(-1)
    }
}

impl Mul for &RingElement {
    type Output = RingElement;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: &RingElement) -> RingElement {
        self.assert_same_spec(rhs);
        let mut out = RingElement::zero(&self.spec);
        for (ma, ca) in self.terms() {
            for (mb, cb) in rhs.terms() {
                let exps: Vec<i64> = ma.0.iter().zip(&mb.0).map(|(a, b)| a + b).collect();
                out.add_term(Monomial(exps), ca as i128 * cb as i128);
            }
        }
        out
    }
}

impl fmt::Debug for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn render_monomial(spec: &RingSpec, m: &Monomial) -> String {
    let joiner = spec.factor_joiner();
    let factors: Vec<String> =
        m.0.iter()
            .zip(spec.vars())
            .filter(|(&e, _)| e != 0)
            .map(|(&e, v)| {
                if e == 1 {
                    v.name.clone()
                } else {
                    format!("{}^{}", v.name, e)
                }
            })
            .collect();
    factors.join(joiner)
}

impl fmt::Display for RingElement {
    /// Ascending canonical order, `+`-separated, unit coefficients omitted: `1-t+t^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let joiner = self.spec.factor_joiner();
        for (i, (m, c)) in self.terms().enumerate() {
            let mag = c.unsigned_abs();
            if c < 0 {
                write!(f, "-")?;
            } else if i > 0 {
                write!(f, "+")?;
            }
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if mag == 1 {
                write!(f, "{}", render_monomial(&self.spec, m))?;
            } else {
                write!(f, "{mag}{joiner}{}", render_monomial(&self.spec, m))?;
            }
        }
        Ok(())
    }
}
