//! Ideals of finite rings `Z_p[t_1..t_r]/(t_i^{k_i} - 1)` as `Z_p`-subspaces.

use crate::error::{Error, Result};
use crate::ring::{mod_inverse, RingElement, RingSpec};

/// Largest ring dimension (rank over `Z_p`) handled exactly.
pub const MAX_FINITE_DIMENSION: u64 = 1024;

/// Enumerating members for the greedy display is limited to this many elements.
const MAX_DISPLAY_ENUMERATION: u64 = 1 << 16;

/// An ideal stored as the reduced row echelon basis of its underlying subspace.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteIdeal {
    spec: RingSpec,
    /// Rows in reduced echelon form, sorted by pivot column.
    basis: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

/// Mixed-radix coordinates of monomials.
struct Layout {
    p: u64,
    orders: Vec<u64>,
    dim: usize,
}

impl Layout {
    fn new(spec: &RingSpec) -> Result<Self> {
        let dim = spec
            .dimension()
            .ok_or_else(|| Error::UnsupportedRing(format!("{spec} is not a finite ring")))?;
        if spec.modulus() == 0 {
            return Err(Error::UnsupportedRing(format!(
                "{spec} is not a finite ring"
            )));
        }
        if dim > MAX_FINITE_DIMENSION {
            return Err(Error::RingTooLarge {
                dim,
                cap: MAX_FINITE_DIMENSION,
            });
        }
        Ok(Layout {
            p: spec.modulus(),
            orders: spec.vars().iter().map(|v| v.order).collect(),
            dim: dim as usize,
        })
    }

    fn index(&self, exps: &[i64]) -> usize {
        let mut idx = 0usize;
        for (e, k) in exps.iter().zip(&self.orders) {
            idx = idx * (*k as usize) + (*e as usize);
        }
        idx
    }

    fn exps(&self, mut idx: usize) -> Vec<i64> {
        let mut out = vec![0i64; self.orders.len()];
        for (slot, k) in out.iter_mut().zip(&self.orders).rev() {
            *slot = (idx % *k as usize) as i64;
            idx /= *k as usize;
        }
        out
    }

    fn vector(&self, e: &RingElement) -> Vec<u64> {
        let mut v = vec![0u64; self.dim];
        for (m, c) in e.terms() {
            v[self.index(&m.0)] = c as u64;
        }
        v
    }

    fn element(&self, spec: &RingSpec, v: &[u64]) -> RingElement {
        RingElement::from_terms(
            spec,
            v.iter()
                .enumerate()
                .filter(|(_, &c)| c != 0)
                .map(|(i, &c)| (self.exps(i), c as i64)),
        )
    }

    /// Multiplication by the variable `var`: a permutation of coordinates.
    fn times_var(&self, v: &[u64], var: usize) -> Vec<u64> {
        let mut out = vec![0u64; self.dim];
        for (i, &c) in v.iter().enumerate() {
            if c != 0 {
                let mut e = self.exps(i);
                e[var] = (e[var] + 1) % self.orders[var] as i64;
                out[self.index(&e)] = c;
            }
        }
        out
    }
}

/// Reduces `v` against an echelon basis; returns the residue.
fn reduce(p: u64, basis: &[Vec<u64>], pivots: &[usize], v: &mut [u64]) {
    for (row, &pc) in basis.iter().zip(pivots) {
        let c = v[pc];
        if c != 0 {
            for (x, r) in v.iter_mut().zip(row) {
                *x = (*x + (p - c) * r) % p;
            }
        }
    }
}

/// Inserts a residue (already reduced) into the echelon basis, keeping it fully reduced.
fn insert(p: u64, basis: &mut Vec<Vec<u64>>, pivots: &mut Vec<usize>, mut v: Vec<u64>) {
    let pc = v.iter().position(|&c| c != 0).expect("nonzero residue");
    let inv = mod_inverse(v[pc], p);
    for x in v.iter_mut() {
        *x = *x * inv % p;
    }
    for row in basis.iter_mut() {
        let c = row[pc];
        if c != 0 {
            for (x, r) in row.iter_mut().zip(&v) {
                *x = (*x + (p - c) * r) % p;
            }
        }
    }
    let at = pivots.partition_point(|&q| q < pc);
    pivots.insert(at, pc);
    basis.insert(at, v);
}

impl FiniteIdeal {
    /// The ideal generated by `gens` in a finite ring.
    pub fn generate(spec: &RingSpec, gens: &[RingElement]) -> Result<Self> {
        let layout = Layout::new(spec)?;
        let p = layout.p;
        let mut basis: Vec<Vec<u64>> = Vec::new();
        let mut pivots: Vec<usize> = Vec::new();
        let mut queue: Vec<Vec<u64>> = gens.iter().map(|g| layout.vector(g)).collect();
        while let Some(mut v) = queue.pop() {
            reduce(p, &basis, &pivots, &mut v);
            if v.iter().all(|&c| c == 0) {
                continue;
            }
            for var in 0..layout.orders.len() {
                queue.push(layout.times_var(&v, var));
            }
            insert(p, &mut basis, &mut pivots, v);
            if basis.len() == layout.dim {
                break;
            }
        }
        Ok(FiniteIdeal {
            spec: spec.clone(),
            basis,
            pivots,
        })
    }

    pub fn spec(&self) -> &RingSpec {
        &self.spec
    }

    /// Rank of the ideal as a `Z_p`-vector space.
    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// Number of elements of the ideal, saturating at `u64::MAX`.
    pub fn cardinality(&self) -> u64 {
        (0..self.rank()).fold(1u64, |acc, _| acc.saturating_mul(self.spec.modulus()))
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        Some(self.basis.len() as u64) == self.spec.dimension()
    }

    pub fn contains(&self, e: &RingElement) -> Result<bool> {
        if e.spec() != &self.spec {
            return Err(Error::SpecMismatch);
        }
        let layout = Layout::new(&self.spec)?;
        let mut v = layout.vector(e);
        reduce(layout.p, &self.basis, &self.pivots, &mut v);
        Ok(v.iter().all(|&c| c == 0))
    }

    /// Subspace basis as ring elements.
    pub fn basis_elements(&self) -> Vec<RingElement> {
        let layout = Layout::new(&self.spec).expect("layout validated at construction");
        self.basis
            .iter()
            .map(|v| layout.element(&self.spec, v))
            .collect()
    }

    /// All members in canonical element order, when there are at most 2^16 of them.
    pub fn elements(&self) -> Option<Vec<RingElement>> {
        if self.cardinality() > MAX_DISPLAY_ENUMERATION {
            return None;
        }
        let layout = Layout::new(&self.spec).ok()?;
        let p = layout.p;
        let mut out = Vec::with_capacity(self.cardinality() as usize);
        let mut coeffs = vec![0u64; self.rank()];
        loop {
            let mut v = vec![0u64; layout.dim];
            for (c, row) in coeffs.iter().zip(&self.basis) {
                for (x, r) in v.iter_mut().zip(row) {
                    *x = (*x + c * r) % p;
                }
            }
            out.push(layout.element(&self.spec, &v));
            // Odometer increment.
            let mut i = 0;
            while i < coeffs.len() {
                coeffs[i] += 1;
                if coeffs[i] < p {
                    break;
                }
                coeffs[i] = 0;
                i += 1;
            }
            if i == coeffs.len() {
                break;
            }
        }
        out.sort();
        Some(out)
    }

    /// Greedy generating set: repeatedly the smallest member not in the ideal
    /// generated so far. Falls back to scanning the subspace basis for large ideals.
    pub fn display_generators(&self) -> Vec<RingElement> {
        let candidates = self.elements().unwrap_or_else(|| {
            let mut b = self.basis_elements();
            b.sort();
            b
        });
        let mut picked: Vec<RingElement> = Vec::new();
        let mut current = FiniteIdeal::generate(&self.spec, &[]).expect("validated spec");
        for c in candidates {
            if current.rank() == self.rank() {
                break;
            }
            if c.is_zero() || current.contains(&c).unwrap_or(true) {
                continue;
            }
            picked.push(c);
            current = FiniteIdeal::generate(&self.spec, &picked).expect("validated spec");
        }
        picked
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{parse_element, Variable};

    fn z2t2() -> RingSpec {
        RingSpec::univariate(2, "t", 2).unwrap()
    }

    fn all_elements(spec: &RingSpec) -> Vec<RingElement> {
        FiniteIdeal::generate(spec, &[RingElement::one(spec)])
            .unwrap()
            .elements()
            .unwrap()
    }

    #[test]
    fn four_element_ring() {
        let s = z2t2();
        let t = RingElement::variable(&s, 0);
        assert!(FiniteIdeal::generate(&s, &[t]).unwrap().is_unit());
        let u = parse_element(&s, "1+t").unwrap();
        let i = FiniteIdeal::generate(&s, std::slice::from_ref(&u)).unwrap();
        assert_eq!(i.cardinality(), 2);
        assert_eq!(
            i.elements().unwrap(),
            vec![RingElement::zero(&s), u.clone()]
        );
        assert_eq!(i.display_generators(), vec![u]);
        assert!(FiniteIdeal::generate(&s, &[]).unwrap().is_zero());
    }

    #[test]
    fn only_three_ideals_in_z2_t2() {
        let s = z2t2();
        let elems = all_elements(&s);
        let mut seen: Vec<FiniteIdeal> = Vec::new();
        for a in &elems {
            for b in &elems {
                let i = FiniteIdeal::generate(&s, &[a.clone(), b.clone()]).unwrap();
                if !seen.contains(&i) {
                    seen.push(i);
                }
            }
        }
        assert_eq!(seen.len(), 3);
    }

    /// Oracle: additive and multiplicative closure of the generators by brute force.
    fn closure(spec: &RingSpec, gens: &[RingElement]) -> Vec<RingElement> {
        let ring = all_elements(spec);
        let mut set: Vec<RingElement> = vec![RingElement::zero(spec)];
        let mut frontier: Vec<RingElement> = gens.to_vec();
        while let Some(g) = frontier.pop() {
            if set.contains(&g) {
                continue;
            }
            set.push(g.clone());
            for r in &ring {
                frontier.push(r * &g);
            }
            for s in set.clone() {
                frontier.push(&s + &g);
            }
        }
        set.sort();
        set
    }

    #[test]
    fn matches_closure_oracle() {
        let specs = [
            z2t2(),
            RingSpec::univariate(3, "t", 2).unwrap(),
            RingSpec::univariate(2, "t", 3).unwrap(),
            RingSpec::new(2, vec![Variable::new("x", 2), Variable::new("y", 2)]).unwrap(),
        ];
        for s in specs {
            let elems = all_elements(&s);
            assert!(elems.len() <= 256);
            for (i, a) in elems.iter().enumerate() {
                let b = &elems[(i * 7 + 3) % elems.len()];
                let gens = [a.clone(), b.clone()];
                let ideal = FiniteIdeal::generate(&s, &gens).unwrap();
                assert_eq!(ideal.elements().unwrap(), closure(&s, &gens), "{s} {a} {b}");
            }
        }
    }

    #[test]
    fn closure_is_an_ideal_exhaustively() {
        let s = RingSpec::new(2, vec![Variable::new("x", 2), Variable::new("y", 2)]).unwrap();
        let ring = all_elements(&s);
        let i = FiniteIdeal::generate(&s, &[parse_element(&s, "1+x").unwrap()]).unwrap();
        let members = i.elements().unwrap();
        for a in &members {
            for b in &members {
                assert!(i.contains(&(a + b)).unwrap());
            }
            for r in &ring {
                assert!(i.contains(&(r * a)).unwrap());
            }
        }
    }

    #[test]
    fn dimension_cap() {
        let s = RingSpec::univariate(2, "t", 2048).unwrap();
        assert_eq!(
            FiniteIdeal::generate(&s, &[]),
            Err(Error::RingTooLarge {
                dim: 2048,
                cap: 1024
            })
        );
    }
}
