use crate::error::{Error, Result};
use crate::fox::GroupRingElement;
use crate::presentation::{Presentation, Word};
use crate::ring::{RingElement, RingSpec};

/// A homomorphism from a presented group into the free abelian group (or its
/// quotient) generated by the variables of `target`. Images are exponent vectors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AbelianMap {
    target: RingSpec,
    images: Vec<Vec<i64>>,
}

fn reduce(target: &RingSpec, mut v: Vec<i64>) -> Vec<i64> {
    for (e, var) in v.iter_mut().zip(target.vars()) {
        if var.is_finite() {
            *e = e.rem_euclid(var.order as i64);
        }
    }
    v
}

impl AbelianMap {
    /// Validates that every relator maps to the identity.
    pub fn new(pres: &Presentation, images: Vec<Vec<i64>>, target: &RingSpec) -> Result<Self> {
        if images.len() != pres.generator_count() {
            return Err(Error::InvalidArgument(format!(
                "{} images for {} generators",
                images.len(),
                pres.generator_count()
            )));
        }
        if let Some(bad) = images.iter().find(|v| v.len() != target.nvars()) {
            return Err(Error::InvalidArgument(format!(
                "image {bad:?} does not have {} components",
                target.nvars()
            )));
        }
        let map = AbelianMap {
            target: target.clone(),
            images: images.into_iter().map(|v| reduce(target, v)).collect(),
        };
        for (i, r) in pres.relators().iter().enumerate() {
            let img = map.word_image(r);
            if img.iter().any(|&e| e != 0) {
                return Err(Error::RelatorNotKilled {
                    relator: i + 1,
                    detail: format!("maps to exponent vector {img:?}"),
                });
            }
        }
        Ok(map)
    }

    /// Every generator sent to the same exponent vector.
    pub fn uniform(pres: &Presentation, image: Vec<i64>, target: &RingSpec) -> Result<Self> {
        AbelianMap::new(pres, vec![image; pres.generator_count()], target)
    }

    pub fn target(&self) -> &RingSpec {
        &self.target
    }

    pub fn images(&self) -> &[Vec<i64>] {
        &self.images
    }

    pub fn image(&self, gen: usize) -> &[i64] {
        &self.images[gen]
    }

    /// The same map into a ring with another coefficient modulus.
    pub fn with_modulus(&self, modulus: u64) -> Result<AbelianMap> {
        Ok(AbelianMap {
            target: self.target.with_modulus(modulus)?,
            images: self.images.clone(),
        })
    }

    pub fn word_image(&self, w: &Word) -> Vec<i64> {
        let mut acc = vec![0i64; self.target.nvars()];
        for l in w.letters() {
            for (a, b) in acc.iter_mut().zip(&self.images[l.gen]) {
                *a += l.exp * b;
            }
        }
        reduce(&self.target, acc)
    }

    /// The monomial `α(w)` with coefficient 1.
    pub fn monomial(&self, w: &Word) -> RingElement {
        RingElement::monomial(&self.target, &self.word_image(w), 1)
    }

    /// Linear extension to the integral group ring.
    pub fn apply(&self, g: &GroupRingElement) -> RingElement {
        let mut terms = Vec::with_capacity(g.term_count());
        for (w, c) in g.terms() {
            terms.push((self.word_image(w), c));
        }
        RingElement::from_terms(&self.target, terms)
    }
}
