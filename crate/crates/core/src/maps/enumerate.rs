use std::collections::HashMap;

use num_integer::Integer;
use rayon::prelude::*;

use super::abelian::AbelianMap;
use super::matrep::{MatrixGroup, MatrixRep, ZpMatrix, DEFAULT_GROUP_CAP};
use crate::error::{Error, Result};
use crate::presentation::{Presentation, Word};
use crate::ring::RingSpec;

/// Largest number of assignment vectors scanned by [`enumerate_epis`].
pub const MAX_EPI_ASSIGNMENTS: u64 = 1 << 20;

/// Relators grouped by the largest generator they mention.
struct RelatorPlan {
    by_last: Vec<Vec<Word>>,
}

impl RelatorPlan {
    fn new(pres: &Presentation) -> Self {
        let mut by_last = vec![Vec::new(); pres.generator_count()];
        for r in pres.relators() {
            if let Some(m) = r.max_generator() {
                by_last[m].push(r.clone());
            }
        }
        RelatorPlan { by_last }
    }
}

struct Search<'a> {
    elements: &'a [ZpMatrix],
    inverses: Vec<usize>,
    table: Vec<usize>,
    identity: usize,
    plan: RelatorPlan,
}

impl Search<'_> {
    fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.elements.len() + b]
    }

    fn power(&self, a: usize, e: i64) -> usize {
        let base = if e < 0 { self.inverses[a] } else { a };
        let mut acc = self.identity;
        for _ in 0..e.unsigned_abs() {
            acc = self.mul(acc, base);
        }
        acc
    }

    fn relator_ok(&self, assign: &[usize], w: &Word) -> bool {
        let mut acc = self.identity;
        for l in w.letters() {
            acc = self.mul(acc, self.power(assign[l.gen], l.exp));
        }
        acc == self.identity
    }

    fn extend(&self, assign: &mut Vec<usize>, s: usize, out: &mut Vec<Vec<usize>>) {
        let g = assign.len();
        if g == s {
            out.push(assign.clone());
            return;
        }
        for e in 0..self.elements.len() {
            assign.push(e);
            if self.plan.by_last[g]
                .iter()
                .all(|w| self.relator_ok(assign, w))
            {
                self.extend(assign, s, out);
            }
            assign.pop();
        }
    }
}

fn build_search<'a>(pres: &Presentation, elements: &'a [ZpMatrix]) -> Search<'a> {
    let index: HashMap<&ZpMatrix, usize> =
        elements.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let n = elements.len();
    let table: Vec<usize> = (0..n * n)
        .into_par_iter()
        .map(|k| index[&elements[k / n].mul(&elements[k % n])])
        .collect();
    let inverses = elements
        .iter()
        .map(|m| index[&m.inverse().unwrap()])
        .collect();
    let p = elements[0].modulus();
    let identity = index[&ZpMatrix::identity(p, elements[0].size())];
    Search {
        elements,
        inverses,
        table,
        identity,
        plan: RelatorPlan::new(pres),
    }
}

/// Index tuples of all homomorphisms, lexicographic in generator order.
fn hom_indices(pres: &Presentation, search: &Search<'_>) -> Vec<Vec<usize>> {
    let s = pres.generator_count();
    (0..search.elements.len())
        .into_par_iter()
        .map(|first| {
            let mut assign = vec![first];
            let mut out = Vec::new();
            if search.plan.by_last[0]
                .iter()
                .all(|w| search.relator_ok(&assign, w))
            {
                search.extend(&mut assign, s, &mut out);
            }
            out
        })
        .flatten()
        .collect()
}

/// Every homomorphism into `group` (trivial and non-surjective ones included),
/// lexicographic in the element indices of the generator images.
pub fn enumerate_homs(pres: &Presentation, group: MatrixGroup) -> Result<Vec<MatrixRep>> {
    enumerate_homs_with_cap(pres, group, DEFAULT_GROUP_CAP)
}

pub fn enumerate_homs_with_cap(
    pres: &Presentation,
    group: MatrixGroup,
    cap: u64,
) -> Result<Vec<MatrixRep>> {
    let elements = group.elements_with_cap(cap)?;
    let search = build_search(pres, &elements);
    Ok(hom_indices(pres, &search)
        .into_iter()
        .map(|idx| {
            MatrixRep::from_parts(
                group,
                idx.into_iter().map(|i| elements[i].clone()).collect(),
            )
        })
        .collect())
}

/// One orbit of homomorphisms under simultaneous conjugation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyClass {
    /// The member that comes first in enumeration order.
    pub representative: MatrixRep,
    pub size: usize,
}

/// Partitions `homs` into conjugacy classes, in order of first appearance.
pub fn conjugacy_classes(homs: &[MatrixRep], group: MatrixGroup) -> Result<Vec<ConjugacyClass>> {
    let elements = group.elements_with_cap(DEFAULT_GROUP_CAP.max(group.order()))?;
    let position: HashMap<&[ZpMatrix], usize> = homs
        .iter()
        .enumerate()
        .map(|(i, h)| (h.images(), i))
        .collect();
    let mut class_of = vec![usize::MAX; homs.len()];
    let mut out: Vec<ConjugacyClass> = Vec::new();
    for (i, h) in homs.iter().enumerate() {
        if class_of[i] != usize::MAX {
            continue;
        }
        let id = out.len();
        let mut size = 0;
        for b in &elements {
            let c = h.conjugate_by(b);
            let j = *position.get(c.images()).ok_or_else(|| {
                Error::InvalidArgument("homomorphism list is not closed under conjugation".into())
            })?;
            if class_of[j] == usize::MAX {
                class_of[j] = id;
                size += 1;
            }
        }
        out.push(ConjugacyClass {
            representative: h.clone(),
            size,
        });
    }
    Ok(out)
}

/// All epimorphisms onto `Z_k = ⟨t | t^k⟩`, as maps into `Z[t]/(t^k - 1)`,
/// ordered lexicographically by assignment vector.
pub fn enumerate_epis(pres: &Presentation, k: u64) -> Result<Vec<AbelianMap>> {
    if k < 2 {
        return Err(Error::InvalidArgument(format!(
            "cyclic target order {k} must be at least 2"
        )));
    }
    let s = pres.generator_count() as u32;
    let total = k
        .checked_pow(s)
        .filter(|&t| t <= MAX_EPI_ASSIGNMENTS)
        .ok_or(Error::TargetTooLarge {
            size: k.saturating_pow(s),
            cap: MAX_EPI_ASSIGNMENTS,
        })?;
    let target = RingSpec::univariate(0, "t", k)?;
    let mut out = Vec::new();
    for code in 0..total {
        let mut images = vec![0i64; s as usize];
        let mut c = code;
        for slot in images.iter_mut().rev() {
            *slot = (c % k) as i64;
            c /= k;
        }
        let g = images.iter().fold(k as i64, |g, &x| g.gcd(&x));
        if g != 1 {
            continue;
        }
        let relators_die = pres.relators().iter().all(|r| {
            r.letters()
                .iter()
                .map(|l| l.exp * images[l.gen])
                .sum::<i64>()
                .rem_euclid(k as i64)
                == 0
        });
        if relators_die {
            out.push(AbelianMap::new(
                pres,
                images.into_iter().map(|x| vec![x]).collect(),
                &target,
            )?);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn free(s: usize) -> Presentation {
        let names: Vec<String> = (1..=s).map(|i| format!("x{i}")).collect();
        Presentation::new(names, vec![]).unwrap()
    }

    fn z2() -> Presentation {
        Presentation::from_strs(&["x"], &["x^2"]).unwrap()
    }

    fn knot_8_1() -> Presentation {
        Presentation::from_strs(&["x", "y"], &["x y x y^-1 x^-1 y^-1"]).unwrap()
    }

    /// Oracle: test every assignment against every relator.
    fn brute_force_homs(pres: &Presentation, group: MatrixGroup) -> usize {
        let e = group.elements().unwrap();
        let s = pres.generator_count();
        let total = e.len().pow(s as u32);
        (0..total)
            .filter(|&code| {
                let mut c = code;
                let images: Vec<ZpMatrix> = (0..s)
                    .map(|_| {
                        let m = e[c % e.len()].clone();
                        c /= e.len();
                        m
                    })
                    .collect();
                MatrixRep::new(pres, group, images).is_ok()
            })
            .count()
    }

    /// Burnside: orbits of G acting on G^s by simultaneous conjugation.
    fn burnside(group: MatrixGroup, s: u32) -> usize {
        let e = group.elements().unwrap();
        let total: usize = e
            .iter()
            .map(|g| {
                let centralizer = e.iter().filter(|h| g.mul(h) == h.mul(g)).count();
                centralizer.pow(s)
            })
            .sum();
        total / e.len()
    }

    #[test]
    fn hom_and_class_counts() {
        let g = MatrixGroup::sl(2, 2);
        for (pres, homs, classes) in [(free(2), 36, 11), (z2(), 4, 2), (knot_8_1(), 12, 4)] {
            let h = enumerate_homs(&pres, g).unwrap();
            assert_eq!(h.len(), homs);
            assert_eq!(brute_force_homs(&pres, g), homs);
            let c = conjugacy_classes(&h, g).unwrap();
            assert_eq!(c.len(), classes);
            assert_eq!(c.iter().map(|c| c.size).sum::<usize>(), homs);
        }
    }

    #[test]
    fn burnside_cross_check() {
        for group in [MatrixGroup::sl(2, 2), MatrixGroup::sl(2, 3)] {
            for s in 1..=3u32 {
                if group.order().pow(s) > 20_000 {
                    continue;
                }
                let h = enumerate_homs(&free(s as usize), group).unwrap();
                assert_eq!(
                    conjugacy_classes(&h, group).unwrap().len(),
                    burnside(group, s)
                );
            }
        }
    }

    #[test]
    fn homs_are_valid_and_sorted() {
        let g = MatrixGroup::sl(2, 3);
        let pres = knot_8_1();
        let homs = enumerate_homs(&pres, g).unwrap();
        for h in &homs {
            assert!(MatrixRep::new(&pres, g, h.images().to_vec()).is_ok());
        }
        let keys: Vec<&[ZpMatrix]> = homs.iter().map(|h| h.images()).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
    }

    #[test]
    fn epi_counts() {
        assert_eq!(enumerate_epis(&free(2), 2).unwrap().len(), 3);
        assert_eq!(enumerate_epis(&z2(), 2).unwrap().len(), 1);
        assert_eq!(enumerate_epis(&knot_8_1(), 2).unwrap().len(), 1);
        let epis = enumerate_epis(&free(2), 2).unwrap();
        let vectors: Vec<Vec<i64>> = epis
            .iter()
            .map(|a| a.images().iter().map(|v| v[0]).collect())
            .collect();
        assert_eq!(vectors, vec![vec![0, 1], vec![1, 0], vec![1, 1]]);
        // Onto Z_4 from Z: images 1 and 3.
        assert_eq!(enumerate_epis(&free(1), 4).unwrap().len(), 2);
    }
}
