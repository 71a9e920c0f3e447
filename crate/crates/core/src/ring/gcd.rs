//! Multivariate polynomial gcd over Z and Z_p by recursive primitive remainder sequences.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::element::RingElement;
use super::spec::RingSpec;
use crate::error::{Error, Result};

/// Sparse polynomial with nonnegative exponents; coefficients reduced mod `p` when `p > 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Poly {
    p: u64,
    nvars: usize,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl Poly {
    fn zero(p: u64, nvars: usize) -> Self {
        Poly {
            p,
            nvars,
            terms: BTreeMap::new(),
        }
    }

    fn constant(p: u64, nvars: usize, c: BigInt) -> Self {
        let mut out = Poly::zero(p, nvars);
        out.add_term(vec![0; nvars], c);
        out
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, m: Vec<u32>, c: BigInt) {
        let c = if self.p > 0 {
            c.mod_floor(&BigInt::from(self.p))
        } else {
            c
        };
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m.clone()).or_insert_with(BigInt::zero);
        *slot += c;
        if self.p > 0 {
            *slot = slot.mod_floor(&BigInt::from(self.p));
        }
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    fn sub(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }

    fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero(self.p, self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.iter().zip(mb).map(|(a, b)| a + b).collect();
                out.add_term(m, ca * cb);
            }
        }
        out
    }

    fn degree_in(&self, v: usize) -> Option<u32> {
        self.terms.keys().map(|m| m[v]).max()
    }

    /// Coefficient of `x_v^k`, as a polynomial with `x_v` absent.
    fn coeff_in(&self, v: usize, k: u32) -> Poly {
        let mut out = Poly::zero(self.p, self.nvars);
        for (m, c) in &self.terms {
            if m[v] == k {
                let mut m = m.clone();
                m[v] = 0;
                out.add_term(m, c.clone());
            }
        }
        out
    }

    fn shift_in(&self, v: usize, k: u32) -> Poly {
        let mut out = Poly::zero(self.p, self.nvars);
        for (m, c) in &self.terms {
            let mut m = m.clone();
            m[v] += k;
            out.add_term(m, c.clone());
        }
        out
    }

    /// Lex-leading term (exponent vector compared lexicographically).
    fn lex_lead(&self) -> Option<(&Vec<u32>, &BigInt)> {
        self.terms.iter().next_back()
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    fn exact_div(&self, d: &Poly) -> Option<Poly> {
        let (dm, dc) = d.lex_lead()?;
        let dc_inv = if self.p > 0 {
            Some(BigInt::from(super::element::mod_inverse(
                dc.mod_floor(&BigInt::from(self.p)).to_u64().unwrap(),
                self.p,
            )))
        } else {
            None
        };
        let mut rem = self.clone();
        let mut quot = Poly::zero(self.p, self.nvars);
        while let Some((rm, rc)) = rem.lex_lead() {
            if rm.iter().zip(dm).any(|(a, b)| a < b) {
                return None;
            }
            let c = match &dc_inv {
                Some(inv) => rc * inv,
                None => {
                    if !(rc % dc).is_zero() {
                        return None;
                    }
                    rc / dc
                }
            };
            let m: Vec<u32> = rm.iter().zip(dm).map(|(a, b)| a - b).collect();
            let mut step = Poly::zero(self.p, self.nvars);
            step.add_term(m.clone(), c.clone());
            quot.add_term(m, c);
            rem = rem.sub(&step.mul(d));
        }
        Some(quot)
    }

    fn integer_content(&self) -> BigInt {
        self.terms.values().fold(BigInt::zero(), |g, c| g.gcd(c))
    }
}

/// gcd of two polynomials in the variables `vars`; other variables must be absent.
fn gcd_rec(a: &Poly, b: &Poly, vars: &[usize]) -> Poly {
    if a.is_zero() {
        return b.clone();
    }
    if b.is_zero() {
        return a.clone();
    }
    let Some(pos) = vars
        .iter()
        .position(|&v| a.degree_in(v).unwrap_or(0) > 0 || b.degree_in(v).unwrap_or(0) > 0)
    else {
        let g = if a.p > 0 {
            BigInt::one()
        } else {
            a.integer_content().gcd(&b.integer_content())
        };
        return Poly::constant(a.p, a.nvars, g);
    };
    let v = vars[pos];
    let rest: Vec<usize> = vars[pos + 1..].to_vec();
    let (ca, pa) = split_content(a, v, &rest);
    let (cb, pb) = split_content(b, v, &rest);
    let content = gcd_rec(&ca, &cb, &rest);
    let (mut f, mut g) = if pa.degree_in(v) >= pb.degree_in(v) {
        (pa, pb)
    } else {
        (pb, pa)
    };
    while !g.is_zero() {
        let r = pseudo_rem(&f, &g, v);
        f = g;
        g = if r.is_zero() {
            r
        } else {
            split_content(&r, v, &rest).1
        };
    }
    let f = split_content(&f, v, &rest).1;
    content.mul(&f)
}

/// (content, primitive part) of `a` viewed in `x_v` over the ring in `rest`.
fn split_content(a: &Poly, v: usize, rest: &[usize]) -> (Poly, Poly) {
    let deg = a.degree_in(v).unwrap_or(0);
    let mut content = Poly::zero(a.p, a.nvars);
    for k in 0..=deg {
        let c = a.coeff_in(v, k);
        if !c.is_zero() {
            content = gcd_rec(&content, &c, rest);
        }
    }
    if content.is_zero() {
        return (content, a.clone());
    }
    let prim = a.exact_div(&content).expect("content divides polynomial");
    (content, prim)
}

fn pseudo_rem(f: &Poly, g: &Poly, v: usize) -> Poly {
    let dg = g.degree_in(v).unwrap_or(0);
    let lg = g.coeff_in(v, dg);
    let mut r = f.clone();
    while !r.is_zero() && r.degree_in(v).unwrap_or(0) >= dg {
        let dr = r.degree_in(v).unwrap();
        let lr = r.coeff_in(v, dr);
        r = lg.mul(&r).sub(&lr.mul(g).shift_in(v, dr - dg));
    }
    r
}

fn check_laurent(spec: &RingSpec) -> Result<()> {
    if !spec.is_laurent() {
        return Err(Error::UnsupportedRing(format!(
            "gcd needs a Laurent polynomial ring, got {spec}"
        )));
    }
    Ok(())
}

/// Shifts to nonnegative exponents (by `min_exponents`).
fn to_poly(e: &RingElement) -> Poly {
    let mins = e.min_exponents();
    let spec = e.spec();
    let mut out = Poly::zero(spec.modulus(), spec.nvars());
    for (m, c) in e.terms() {
        let exps = m.0.iter().zip(&mins).map(|(a, b)| (a - b) as u32).collect();
        out.add_term(exps, BigInt::from(c));
    }
    out
}

fn from_poly(spec: &RingSpec, p: &Poly) -> Result<RingElement> {
    let mut terms = Vec::with_capacity(p.terms.len());
    for (m, c) in &p.terms {
        let c = c
            .to_i64()
            .ok_or_else(|| Error::InvalidArgument("gcd coefficient exceeds 64 bits".into()))?;
        terms.push((m.iter().map(|&e| e as i64).collect(), c));
    }
    Ok(RingElement::from_terms(spec, terms))
}

/// Greatest common divisor up to units in a Laurent ring over Z or Z_p.
///
/// The result has lowest exponent 0 in each variable and positive leading
/// coefficient (monic over Z_p); `gcd(0, 0) = 0`.
pub fn poly_gcd(a: &RingElement, b: &RingElement) -> Result<RingElement> {
    if a.spec() != b.spec() {
        return Err(Error::SpecMismatch);
    }
    let spec = a.spec();
    check_laurent(spec)?;
    let vars: Vec<usize> = (0..spec.nvars()).collect();
    let g = gcd_rec(&to_poly(a), &to_poly(b), &vars);
    Ok(from_poly(spec, &g)?.unit_normalized())
}

/// gcd of a list of elements; the empty list gives 0.
pub fn poly_gcd_all<'a, I>(spec: &RingSpec, elems: I) -> Result<RingElement>
where
    I: IntoIterator<Item = &'a RingElement>,
{
    check_laurent(spec)?;
    let mut acc = RingElement::zero(spec);
    for e in elems {
        acc = poly_gcd(&acc, e)?;
        if acc.is_one() {
            break;
        }
    }
    Ok(acc)
}

/// Exact quotient `a / d` in a Laurent ring, or `None` if `d` does not divide `a`.
pub fn poly_divide(a: &RingElement, d: &RingElement) -> Result<Option<RingElement>> {
    if a.spec() != d.spec() {
        return Err(Error::SpecMismatch);
    }
    let spec = a.spec();
    check_laurent(spec)?;
    if d.is_zero() {
        return Ok(if a.is_zero() { Some(a.clone()) } else { None });
    }
    let Some(q) = to_poly(a).exact_div(&to_poly(d)) else {
        return Ok(None);
    };
    let shift: Vec<i64> = a
        .min_exponents()
        .iter()
        .zip(d.min_exponents())
        .map(|(x, y)| x - y)
        .collect();
    let q = from_poly(spec, &q)?.shift(&shift);
    Ok(Some(q))
}
