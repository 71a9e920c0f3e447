//! Alexander and twisted Alexander matrices, their elementary ideals, and invariant tables.

mod table;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::fox::fox_derive;
use crate::ideal::Ideal;
use crate::maps::{AbelianMap, MatrixRep};
use crate::presentation::Presentation;
use crate::ring::{poly_gcd_all, RingElement, RingMatrix};

pub use table::{
    handlebody_invariant, surfacelink_invariant, trim_row, InvariantRow, InvariantTable, TableKind,
};

/// Entry `(i, j)` is the image of `∂r_i/∂x_j` under the abelianization.
pub fn alexander_matrix(pres: &Presentation, alpha: &AbelianMap) -> Result<RingMatrix> {
    let s = pres.generator_count();
    let t = pres.relator_count();
    let spec = alpha.target();
    let mut m = RingMatrix::zeros(spec, t, s);
    for (i, r) in pres.relators().iter().enumerate() {
        for j in 0..s {
            m.set(i, j, alpha.apply(&fox_derive(r, j, s)?));
        }
    }
    Ok(m.with_declared(t, s))
}

/// The `nt x ns` block matrix whose `(i, j)` block is `Σ c·α(w)·ρ(w)` over the terms of `∂r_i/∂x_j`.
pub fn twisted_matrix(
    pres: &Presentation,
    alpha: &AbelianMap,
    rho: &MatrixRep,
) -> Result<RingMatrix> {
    let spec = alpha.target();
    if spec.modulus() != rho.modulus() {
        return Err(Error::ModulusMismatch {
            ring: spec.modulus(),
            rep: rho.modulus(),
        });
    }
    if rho.images().len() != pres.generator_count() {
        return Err(Error::InvalidArgument(
            "representation and presentation have different generator counts".into(),
        ));
    }
    let n = rho.degree();
    let s = pres.generator_count();
    let t = pres.relator_count();
    let mut m = RingMatrix::zeros(spec, n * t, n * s);
    for (i, r) in pres.relators().iter().enumerate() {
        for j in 0..s {
            let mut cells: Vec<Vec<(Vec<i64>, i64)>> = vec![Vec::new(); n * n];
            for (w, c) in fox_derive(r, j, s)?.terms() {
                let mono = alpha.word_image(w);
                let mat = rho.word_image(w);
                for (cell, &v) in cells.iter_mut().zip(mat.entries()) {
                    if v != 0 {
                        cell.push((mono.clone(), c * v as i64));
                    }
                }
            }
            for (idx, cell) in cells.into_iter().enumerate() {
                let (a, b) = (idx / n, idx % n);
                m.set(n * i + a, n * j + b, RingElement::from_terms(spec, cell));
            }
        }
    }
    Ok(m.with_declared(n * t, n * s))
}

fn ideal_of_minors(m: &RingMatrix, q: usize) -> Result<Ideal> {
    let mut gens: Vec<RingElement> = m.minors(q)?.into_iter().filter(|e| !e.is_zero()).collect();
    gens.sort();
    gens.dedup();
    Ideal::generated(m.spec(), gens)
}

/// `E_d` straight from the `(s-d)`-minors of `m`, without pivot reduction.
pub fn elementary_ideal_by_minors(m: &RingMatrix, d: usize) -> Result<Ideal> {
    let (s, t) = (m.declared_cols(), m.declared_rows());
    if s <= d {
        return Ok(Ideal::unit(m.spec()));
    }
    let q = s - d;
    if q > t {
        return Ok(Ideal::zero(m.spec()));
    }
    ideal_of_minors(m, q)
}

/// The `d`-th elementary ideal, normalized.
pub fn elementary_ideal(m: &RingMatrix, d: usize) -> Result<Ideal> {
    Ok(elementary_ideals(m, [d])?.pop().unwrap())
}

/// Several elementary ideals of one matrix, sharing a single pivot reduction.
pub fn elementary_ideals<I: IntoIterator<Item = usize>>(
    m: &RingMatrix,
    ds: I,
) -> Result<Vec<Ideal>> {
    let ds: Vec<usize> = ds.into_iter().collect();
    let (s, t) = (m.declared_cols(), m.declared_rows());
    let needs_minors = ds.iter().any(|&d| d < s && s - d <= t);
    let reduced = needs_minors.then(|| m.reduce_unit_pivots());
    let removed = reduced.as_ref().map_or(0, |r| s - r.declared_cols());
    ds.par_iter()
        .map(|&d| {
            if s <= d {
                return Ok(Ideal::unit(m.spec()));
            }
            let q = s - d;
            if q > t {
                return Ok(Ideal::zero(m.spec()));
            }
            let r = reduced.as_ref().unwrap();
            if q <= removed {
                return Ok(Ideal::unit(m.spec()));
            }
            let q = q - removed;
            if q > r.declared_rows() {
                return Ok(Ideal::zero(m.spec()));
            }
            ideal_of_minors(r, q)
        })
        .collect()
}

/// The gcd of the generators of `E_1` of the Alexander matrix. Needs a Laurent ring.
pub fn alexander_polynomial(pres: &Presentation, alpha: &AbelianMap) -> Result<RingElement> {
    let spec = alpha.target();
    if !spec.is_laurent() {
        return Err(Error::UnsupportedRing(format!(
            "the Alexander polynomial needs every variable of infinite order, got {spec}"
        )));
    }
    let e1 = elementary_ideal(&alexander_matrix(pres, alpha)?, 1)?;
    poly_gcd_all(spec, e1.generators())
}
