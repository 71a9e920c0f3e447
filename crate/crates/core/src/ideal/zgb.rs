//! Strong Gröbner bases of ideals of Z[t].

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Dense polynomial in Z[t], ascending coefficients, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub(crate) struct ZPoly(pub(crate) Vec<BigInt>);

impl ZPoly {
    pub(crate) fn new(mut c: Vec<BigInt>) -> Self {
        while c.last().is_some_and(Zero::is_zero) {
            c.pop();
        }
        ZPoly(c)
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub(crate) fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub(crate) fn lc(&self) -> &BigInt {
        self.0
            .last()
            .expect("leading coefficient of zero polynomial")
    }

    /// `self - c * t^shift * g`
    fn sub_scaled(&self, c: &BigInt, shift: usize, g: &ZPoly) -> ZPoly {
        let len = self.0.len().max(g.0.len() + shift);
        let mut out = self.0.clone();
        out.resize(len, BigInt::zero());
        for (i, gc) in g.0.iter().enumerate() {
            out[i + shift] -= c * gc;
        }
        ZPoly::new(out)
    }

    fn scaled_shift(&self, c: &BigInt, shift: usize) -> ZPoly {
        let mut out = vec![BigInt::zero(); shift];
        out.extend(self.0.iter().map(|x| x * c));
        ZPoly::new(out)
    }

    fn add(&self, other: &ZPoly) -> ZPoly {
        let len = self.0.len().max(other.0.len());
        let mut out = vec![BigInt::zero(); len];
        for (i, c) in self.0.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.0.iter().enumerate() {
            out[i] += c;
        }
        ZPoly::new(out)
    }

    fn normalize_sign(self) -> ZPoly {
        if !self.is_zero() && self.lc().is_negative() {
            ZPoly(self.0.into_iter().map(|c| -c).collect())
        } else {
            self
        }
    }
}

/// Repeatedly cancels leading terms of `f` against basis elements whose
/// leading monomial and coefficient divide it.
fn lead_reduce(mut f: ZPoly, basis: &[ZPoly]) -> ZPoly {
    'outer: while !f.is_zero() {
        let d = f.degree();
        for g in basis {
            if g.degree() <= d && f.lc().is_multiple_of(g.lc()) {
                let q = f.lc() / g.lc();
                f = f.sub_scaled(&q, d - g.degree(), g);
                continue 'outer;
            }
        }
        break;
    }
    f
}

/// Full reduction: leading-term reduction, then every lower coefficient is
/// reduced to its least nonnegative residue modulo the best available divisor.
pub(crate) fn reduce(f: &ZPoly, basis: &[ZPoly]) -> ZPoly {
    let mut f = f.clone();
    let mut k = f.0.len();
    while k > 0 {
        k -= 1;
        if k >= f.0.len() || f.0[k].is_zero() {
            continue;
        }
        // Among elements of degree <= k, the one with the smallest |lc| reduces furthest.
        let best = basis.iter().filter(|g| g.degree() <= k).min_by(|a, b| {
            a.lc()
                .abs()
                .cmp(&b.lc().abs())
                .then(b.degree().cmp(&a.degree()))
        });
        if let Some(g) = best {
            let q = f.0[k].div_floor(g.lc());
            if !q.is_zero() {
                f = f.sub_scaled(&q, k - g.degree(), g);
            }
        }
    }
    f
}

/// A reduced strong Gröbner basis, sorted by degree.
///
/// The generators are split as `G * (h_1, ..., h_m)` with `G` their primitive gcd over Q.
/// The cofactor ideal then contains a nonzero integer, which keeps every coefficient
/// bounded during completion.
pub(crate) fn groebner(gens: &[ZPoly]) -> Vec<ZPoly> {
    let gens: Vec<ZPoly> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    if gens.is_empty() {
        return Vec::new();
    }
    let common = gens
        .iter()
        .skip(1)
        .fold(primitive_part(&gens[0]), |acc, g| primitive_gcd(&acc, g));
    let mut cofactors: Vec<ZPoly> = gens.iter().map(|g| exact_quotient(g, &common)).collect();
    match integer_in_ideal(&cofactors) {
        Some(n) => cofactors.push(ZPoly::new(vec![n])),
        None => return minimize(complete(gens)),
    }
    let basis = complete(cofactors);
    minimize(basis.iter().map(|b| mul(b, &common)).collect())
}

/// Buchberger completion with S- and gcd-polynomials, fully reducing each new element.
fn complete(gens: Vec<ZPoly>) -> Vec<ZPoly> {
    let mut basis: Vec<ZPoly> = Vec::new();
    let mut pending = gens;
    // Low degrees first: they shorten everything added after them.
    pending.sort_by(|a, b| {
        b.degree()
            .cmp(&a.degree())
            .then(b.lc().abs().cmp(&a.lc().abs()))
    });
    while let Some(f) = pending.pop() {
        let r = reduce(&lead_reduce(f, &basis), &basis).normalize_sign();
        if r.is_zero() {
            continue;
        }
        for g in &basis {
            pending.extend(pair_polys(g, &r));
        }
        basis.push(r);
    }
    basis
}

fn content(f: &ZPoly) -> BigInt {
    f.0.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
}

fn primitive_part(f: &ZPoly) -> ZPoly {
    let c = content(f);
    ZPoly(f.0.iter().map(|x| x / &c).collect()).normalize_sign()
}

fn mul(a: &ZPoly, b: &ZPoly) -> ZPoly {
    if a.is_zero() || b.is_zero() {
        return ZPoly::new(vec![]);
    }
    let mut out = vec![BigInt::zero(); a.0.len() + b.0.len() - 1];
    for (i, x) in a.0.iter().enumerate() {
        for (j, y) in b.0.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    ZPoly::new(out)
}

/// `a mod b` after scaling `a` by a power of `lc(b)`.
fn pseudo_rem(a: &ZPoly, b: &ZPoly) -> ZPoly {
    let mut r = a.clone();
    let lb = b.lc().clone();
    while !r.is_zero() && r.degree() >= b.degree() {
        let lr = r.lc().clone();
        let shift = r.degree() - b.degree();
        r = r.scaled_shift(&lb, 0).sub_scaled(&lr, shift, b);
    }
    r
}

/// Primitive, positive-leading gcd over Q of two nonzero polynomials.
fn primitive_gcd(a: &ZPoly, b: &ZPoly) -> ZPoly {
    let (mut x, mut y) = (primitive_part(a), primitive_part(b));
    if x.degree() < y.degree() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_zero() {
        let r = pseudo_rem(&x, &y);
        x = y;
        y = if r.is_zero() { r } else { primitive_part(&r) };
    }
    x
}

/// `f / g` for a primitive `g` dividing `f` over Q; the quotient is integral.
fn exact_quotient(f: &ZPoly, g: &ZPoly) -> ZPoly {
    let mut r = f.clone();
    let mut q = vec![BigInt::zero(); f.degree() + 1 - g.degree()];
    while !r.is_zero() && r.degree() >= g.degree() {
        let shift = r.degree() - g.degree();
        let c = r.lc() / g.lc();
        r = r.sub_scaled(&c, shift, g);
        q[shift] = c;
    }
    debug_assert!(r.is_zero(), "inexact polynomial division");
    ZPoly::new(q)
}

/// Sylvester-matrix determinant by fraction-free elimination.
fn resultant(a: &ZPoly, b: &ZPoly) -> BigInt {
    let (m, n) = (a.degree(), b.degree());
    let size = m + n;
    if size == 0 {
        return BigInt::one();
    }
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(size);
    for (p, count, deg) in [(a, n, m), (b, m, n)] {
        for i in 0..count {
            let mut row = vec![BigInt::zero(); size];
            for (k, c) in p.0.iter().rev().enumerate() {
                row[i + k] = c.clone();
            }
            debug_assert_eq!(p.0.len(), deg + 1);
            rows.push(row);
        }
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..size {
        let Some(piv) = (k..size).find(|&i| !rows[i][k].is_zero()) else {
            return BigInt::zero();
        };
        if piv != k {
            rows.swap(piv, k);
            sign = -sign;
        }
        for i in k + 1..size {
            for j in k + 1..size {
                let v = &rows[i][j] * &rows[k][k] - &rows[i][k] * &rows[k][j];
                rows[i][j] = v / &prev;
            }
            rows[i][k] = BigInt::zero();
        }
        prev = rows[k][k].clone();
    }
    sign * prev
}

/// A nonzero integer in the ideal of polynomials with no common factor over Q,
/// as a gcd of resultants of a few fixed combinations.
fn integer_in_ideal(hs: &[ZPoly]) -> Option<BigInt> {
    if let Some(c) = hs.iter().find(|h| h.degree() == 0) {
        return Some(c.lc().abs());
    }
    let mut found = BigInt::zero();
    for trial in 0..6usize {
        let a = &hs[trial % hs.len()];
        let mut b = ZPoly::new(vec![]);
        for (i, h) in hs.iter().enumerate() {
            let weight = BigInt::from(((i * 7 + trial * 3) % 11 + 1) as i64);
            b = b.add(&h.scaled_shift(&weight, 0));
        }
        if b.is_zero() {
            continue;
        }
        let r = resultant(a, &b);
        if !r.is_zero() {
            found = found.gcd(&r);
            if found.is_one() || trial >= 2 {
                break;
            }
        }
    }
    (!found.is_zero()).then_some(found)
}

/// The S-polynomial and the gcd-polynomial of a pair.
fn pair_polys(f: &ZPoly, g: &ZPoly) -> Vec<ZPoly> {
    let (df, dg) = (f.degree(), g.degree());
    let m = df.max(dg);
    let (a, b) = (f.lc(), g.lc());
    let e = a.extended_gcd(b);
    let mut out = Vec::new();
    let lcm = a.lcm(b);
    let s = f
        .scaled_shift(&(&lcm / a), m - df)
        .sub_scaled(&(&lcm / b), m - dg, g);
    out.push(s);
    // The gcd-polynomial is redundant when one leading coefficient divides the other.
    if !(a.is_multiple_of(b) || b.is_multiple_of(a)) {
        out.push(
            f.scaled_shift(&e.x, m - df)
                .add(&g.scaled_shift(&e.y, m - dg)),
        );
    }
    out
}

fn minimize(basis: Vec<ZPoly>) -> Vec<ZPoly> {
    let mut basis: Vec<ZPoly> = basis.into_iter().map(ZPoly::normalize_sign).collect();
    basis.sort_by(|a, b| a.degree().cmp(&b.degree()).then(a.lc().cmp(b.lc())));
    let mut kept: Vec<ZPoly> = Vec::new();
    for g in basis {
        let redundant = kept
            .iter()
            .any(|h| h.degree() <= g.degree() && g.lc().is_multiple_of(h.lc()));
        if !redundant {
            kept.push(g);
        }
    }
    // Tail-reduce each element against the others.
    let mut out = Vec::with_capacity(kept.len());
    for i in 0..kept.len() {
        let others: Vec<ZPoly> = kept
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, g)| g.clone())
            .collect();
        let g = &kept[i];
        let lead = g.0.last().unwrap().clone();
        let mut tail = g.clone();
        tail.0.pop();
        let tail = ZPoly::new(tail.0);
        let mut r = reduce_below(&tail, &others, g.degree()).0;
        r.resize(g.degree() + 1, BigInt::zero());
        r[g.degree()] = lead;
        out.push(ZPoly::new(r));
    }
    out
}

/// Reduces the coefficients of `f` (all of degree < `bound`) by elements of degree < `bound`.
fn reduce_below(f: &ZPoly, others: &[ZPoly], bound: usize) -> ZPoly {
    let lower: Vec<ZPoly> = others
        .iter()
        .filter(|g| g.degree() < bound)
        .cloned()
        .collect();
    reduce(f, &lower)
}

pub(crate) fn contains(basis: &[ZPoly], f: &ZPoly) -> bool {
    reduce(f, basis).is_zero()
}

/// True when `basis` generates the unit ideal.
pub(crate) fn is_unit(basis: &[ZPoly]) -> bool {
    basis.len() == 1 && basis[0].degree() == 0 && basis[0].lc().is_one()
}

/// Saturation by `t`: the ideal of all `f` with `t^j f` in the ideal for some `j`.
pub(crate) fn saturate_by_t(gens: &[ZPoly]) -> Vec<ZPoly> {
    let mut basis = groebner(gens);
    loop {
        let extra = colon_t_candidates(&basis);
        let new: Vec<ZPoly> = extra.into_iter().filter(|f| !contains(&basis, f)).collect();
        if new.is_empty() {
            return basis;
        }
        let mut all = basis.clone();
        all.extend(new);
        basis = groebner(&all);
    }
}

/// Elements `f / t` for `f` in the ideal with zero constant term, degree at most
/// the basis' maximal degree; these generate the colon ideal `(I : t)` modulo `I`.
fn colon_t_candidates(basis: &[ZPoly]) -> Vec<ZPoly> {
    let Some(top) = basis.iter().map(ZPoly::degree).max() else {
        return Vec::new();
    };
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    for g in basis {
        for j in 0..=(top - g.degree()) {
            let mut row = vec![BigInt::zero(); top + 1];
            for (i, c) in g.0.iter().enumerate() {
                row[i + j] = c.clone();
            }
            rows.push(row);
        }
    }
    // Euclid on the constant column until at most one row has a nonzero entry there.
    loop {
        let nonzero: Vec<usize> = (0..rows.len()).filter(|&i| !rows[i][0].is_zero()).collect();
        if nonzero.len() <= 1 {
            if let Some(&keep) = nonzero.first() {
                rows.swap_remove(keep);
            }
            break;
        }
        let pivot = *nonzero.iter().min_by_key(|&&i| rows[i][0].abs()).unwrap();
        let prow = rows[pivot].clone();
        for &i in &nonzero {
            if i == pivot {
                continue;
            }
            let q = rows[i][0].div_floor(&prow[0]);
            for (x, p) in rows[i].iter_mut().zip(&prow) {
                *x -= &q * p;
            }
        }
    }
    rows.into_iter()
        .map(|r| ZPoly::new(r[1..].to_vec()))
        .filter(|p| !p.is_zero())
        .collect()
}
