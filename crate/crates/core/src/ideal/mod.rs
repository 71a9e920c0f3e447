//! Finitely generated ideals: normalization, membership and equality.

mod finite;
mod zgb;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

pub use finite::{FiniteIdeal, MAX_FINITE_DIMENSION};
use zgb::ZPoly;

use crate::error::{Error, Result};
use crate::ring::{poly_divide, poly_gcd_all, RingElement, RingSpec, Variable};

/// A finite quotient `Z_p[t_i]/(t_i^k - 1)` used to separate ideals that are not decided exactly.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Probe {
    pub modulus: u64,
    pub order: u64,
}

/// The configured probes, tried in this order.
pub const PROBES: [Probe; 5] = [
    Probe {
        modulus: 2,
        order: 2,
    },
    Probe {
        modulus: 2,
        order: 3,
    },
    Probe {
        modulus: 3,
        order: 2,
    },
    Probe {
        modulus: 3,
        order: 4,
    },
    Probe {
        modulus: 5,
        order: 2,
    },
];

impl fmt::Display for Probe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z{} with order {}", self.modulus, self.order)
    }
}

impl Probe {
    /// The probe ring for `spec`, or `None` if the coefficient rings are incompatible.
    ///
    /// Infinite-order variables get order `k`; a variable of finite order `k_i`
    /// gets `gcd(k, k_i)` so that the quotient map is defined.
    pub fn ring_for(&self, spec: &RingSpec) -> Option<RingSpec> {
        if spec.modulus() != 0 && spec.modulus() != self.modulus {
            return None;
        }
        let vars = spec
            .vars()
            .iter()
            .map(|v| {
                let k = if v.is_finite() {
                    v.order.gcd(&self.order)
                } else {
                    self.order
                };
                Variable::new(v.name.clone(), k)
            })
            .collect();
        RingSpec::new(self.modulus, vars).ok()
    }
}

/// Outcome of an ideal comparison.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IdealEquality {
    /// Proven equal.
    Equal,
    /// Proven different; `probe` names the finite quotient that separated them, if any.
    Unequal { probe: Option<Probe> },
    /// Not decided exactly, and equal in every applicable probe.
    Consistent,
}

impl IdealEquality {
    pub fn is_equal(&self) -> bool {
        matches!(self, IdealEquality::Equal)
    }

    pub fn is_unequal(&self) -> bool {
        matches!(self, IdealEquality::Unequal { .. })
    }
}

/// A strong Gröbner basis over Z of the ideal's preimage in Z[t].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroebnerBasis {
    polys: Vec<ZPoly>,
    elements: Vec<RingElement>,
}

impl GroebnerBasis {
    /// The basis mapped back into the ring, zero images dropped.
    pub fn elements(&self) -> &[RingElement] {
        &self.elements
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum NormalForm {
    /// Not yet normalized.
    Pending,
    Zero,
    Unit,
    /// Generated by one element, normalized up to units.
    Principal(RingElement),
    FiniteSet(FiniteIdeal),
    Groebner(GroebnerBasis),
    /// No exact procedure for this ring; equality falls back to probing.
    GeneratorsOnly,
}

/// Which exact procedure applies to a ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Regime {
    Finite,
    PrimeFieldLaurent,
    IntegerUnivariate,
    Other,
}

fn regime(spec: &RingSpec) -> Regime {
    if spec.is_finite() {
        Regime::Finite
    } else if spec.modulus() > 0 && spec.nvars() == 1 {
        Regime::PrimeFieldLaurent
    } else if spec.modulus() == 0 && spec.nvars() <= 1 {
        Regime::IntegerUnivariate
    } else {
        Regime::Other
    }
}

/// A finitely generated ideal of a [`RingSpec`] ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ideal {
    spec: RingSpec,
    generators: Vec<RingElement>,
    normal: NormalForm,
}

impl Ideal {
    /// The ideal generated by `gens`; zero generators are dropped.
    ///
    /// The zero ideal and ideals containing a unit monomial are recognized
    /// immediately, everything else stays [`NormalForm::Pending`].
    pub fn from_generators(spec: &RingSpec, gens: Vec<RingElement>) -> Result<Ideal> {
        if gens.iter().any(|g| g.spec() != spec) {
            return Err(Error::SpecMismatch);
        }
        let generators: Vec<RingElement> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        let normal = if generators.is_empty() {
            NormalForm::Zero
        } else if generators.iter().any(RingElement::is_unit_monomial) {
            NormalForm::Unit
        } else {
            NormalForm::Pending
        };
        Ok(Ideal {
            spec: spec.clone(),
            generators,
            normal,
        })
    }

    pub fn zero(spec: &RingSpec) -> Ideal {
        Ideal::from_generators(spec, Vec::new()).unwrap()
    }

    pub fn unit(spec: &RingSpec) -> Ideal {
        Ideal::from_generators(spec, vec![RingElement::one(spec)]).unwrap()
    }

    /// `from_generators` followed by `normalize`.
    pub fn generated(spec: &RingSpec, gens: Vec<RingElement>) -> Result<Ideal> {
        Ideal::from_generators(spec, gens)?.normalize()
    }

    pub fn spec(&self) -> &RingSpec {
        &self.spec
    }

    /// The generators as supplied (zeros dropped).
    pub fn generators(&self) -> &[RingElement] {
        &self.generators
    }

    pub fn normal_form(&self) -> &NormalForm {
        &self.normal
    }

    pub fn is_normalized(&self) -> bool {
        self.normal != NormalForm::Pending
    }

    pub fn is_zero(&self) -> bool {
        self.normal == NormalForm::Zero
    }

    pub fn is_unit(&self) -> bool {
        self.normal == NormalForm::Unit
    }

    /// Computes the normal form; idempotent.
    pub fn normalize(&self) -> Result<Ideal> {
        if self.is_normalized() {
            return Ok(self.clone());
        }
        let normal = match regime(&self.spec) {
            Regime::Finite => {
                let f = FiniteIdeal::generate(&self.spec, &self.generators)?;
                if f.is_zero() {
                    NormalForm::Zero
                } else if f.is_unit() {
                    NormalForm::Unit
                } else {
                    NormalForm::FiniteSet(f)
                }
            }
            Regime::PrimeFieldLaurent => {
                let g = poly_gcd_all(&self.spec, &self.generators)?;
                if g.is_zero() {
                    NormalForm::Zero
                } else if g.is_unit_monomial() {
                    NormalForm::Unit
                } else {
                    NormalForm::Principal(g)
                }
            }
            Regime::IntegerUnivariate => {
                let polys = integer_basis(&self.spec, &self.generators);
                if polys.is_empty() {
                    NormalForm::Zero
                } else if zgb::is_unit(&polys) {
                    NormalForm::Unit
                } else {
                    let mut elements = Vec::new();
                    for p in &polys {
                        let e = from_zpoly(&self.spec, p)?;
                        if !e.is_zero() && !elements.contains(&e) {
                            elements.push(e);
                        }
                    }
                    elements.sort();
                    NormalForm::Groebner(GroebnerBasis { polys, elements })
                }
            }
            Regime::Other => NormalForm::GeneratorsOnly,
        };
        Ok(Ideal {
            spec: self.spec.clone(),
            generators: self.generators.clone(),
            normal,
        })
    }

    /// Exact membership.
    pub fn contains(&self, e: &RingElement) -> Result<bool> {
        if e.spec() != &self.spec {
            return Err(Error::SpecMismatch);
        }
        if e.is_zero() {
            return Ok(true);
        }
        let me = self.normalize()?;
        match &me.normal {
            NormalForm::Zero => Ok(false),
            NormalForm::Unit => Ok(true),
            NormalForm::Principal(g) => Ok(poly_divide(e, g)?.is_some()),
            NormalForm::FiniteSet(f) => f.contains(e),
            NormalForm::Groebner(gb) => Ok(zgb::contains(&gb.polys, &to_zpoly(e))),
            NormalForm::GeneratorsOnly => {
                if me.generators.contains(e) {
                    Ok(true)
                } else {
                    Err(Error::Undecidable)
                }
            }
            NormalForm::Pending => unreachable!("normalized above"),
        }
    }

    /// True when every generator of `other` lies in `self`.
    pub fn contains_ideal(&self, other: &Ideal) -> Result<bool> {
        for g in other.generators() {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Equality by mutual containment where decidable, otherwise by probing finite quotients.
    pub fn equals(&self, other: &Ideal) -> Result<IdealEquality> {
        if self.spec != other.spec {
            return Err(Error::SpecMismatch);
        }
        let (a, b) = (self.normalize()?, other.normalize()?);
        let exact = |eq: bool| {
            if eq {
                IdealEquality::Equal
            } else {
                IdealEquality::Unequal { probe: None }
            }
        };
        use NormalForm::*;
        match (&a.normal, &b.normal) {
            (Zero, Zero) | (Unit, Unit) => return Ok(IdealEquality::Equal),
            (Zero, _) | (_, Zero) => return Ok(IdealEquality::Unequal { probe: None }),
            _ => {}
        }
        if a.normal != GeneratorsOnly && b.normal != GeneratorsOnly {
            if let (FiniteSet(x), FiniteSet(y)) = (&a.normal, &b.normal) {
                return Ok(exact(x == y));
            }
            return Ok(exact(a.contains_ideal(&b)? && b.contains_ideal(&a)?));
        }
        let mut ga = a.generators.clone();
        let mut gb = b.generators.clone();
        ga.sort();
        ga.dedup();
        gb.sort();
        gb.dedup();
        if ga == gb {
            return Ok(IdealEquality::Equal);
        }
        for probe in PROBES {
            let (Some(x), Some(y)) = (a.probe(&probe)?, b.probe(&probe)?) else {
                continue;
            };
            if x != y {
                return Ok(IdealEquality::Unequal { probe: Some(probe) });
            }
        }
        Ok(IdealEquality::Consistent)
    }

    /// Image of the ideal in a probe quotient, or `None` if the probe does not apply.
    pub fn probe(&self, probe: &Probe) -> Result<Option<FiniteIdeal>> {
        let Some(target) = probe.ring_for(&self.spec) else {
            return Ok(None);
        };
        let images = self
            .generators
            .iter()
            .map(|g| g.project(&target))
            .collect::<Result<Vec<_>>>()?;
        FiniteIdeal::generate(&target, &images).map(Some)
    }

    /// Canonical generating set used for display.
    pub fn display_generators(&self) -> Vec<RingElement> {
        let sorted = |mut v: Vec<RingElement>| {
            v.sort();
            v.dedup();
            v
        };
        match &self.normal {
            NormalForm::Zero => Vec::new(),
            NormalForm::Unit => vec![RingElement::one(&self.spec)],
            NormalForm::Principal(g) => vec![g.clone()],
            NormalForm::FiniteSet(f) => f.display_generators(),
            NormalForm::Groebner(gb) => gb.elements.clone(),
            NormalForm::GeneratorsOnly | NormalForm::Pending => sorted(self.generators.clone()),
        }
    }

    /// Compact rendering for table cells: `0`, `1`, `1+t`, or `(a,b)` for several generators.
    pub fn table_entry(&self) -> String {
        let gens = self.display_generators();
        match gens.len() {
            0 => "0".to_string(),
            1 => gens[0].to_string(),
            _ => self.to_string(),
        }
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens = self.display_generators();
        if gens.is_empty() {
            return write!(f, "(0)");
        }
        let parts: Vec<String> = gens.iter().map(|g| g.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

fn to_zpoly(e: &RingElement) -> ZPoly {
    if e.spec().nvars() == 0 {
        return ZPoly::new(vec![BigInt::from(e.coefficient(&[]))]);
    }
    let shift = e.min_exponents()[0].min(0);
    let top = e.terms().map(|(m, _)| m.0[0]).max().unwrap_or(0);
    let mut c = vec![BigInt::from(0); (top - shift + 1).max(0) as usize];
    for (m, coeff) in e.terms() {
        c[(m.0[0] - shift) as usize] = BigInt::from(coeff);
    }
    ZPoly::new(c)
}

fn from_zpoly(spec: &RingSpec, p: &ZPoly) -> Result<RingElement> {
    let mut terms = Vec::new();
    for (i, c) in p.0.iter().enumerate() {
        let c = c
            .to_i64()
            .ok_or_else(|| Error::InvalidArgument("coefficient exceeds 64 bits".into()))?;
        if spec.nvars() == 0 {
            terms.push((vec![], c));
        } else {
            terms.push((vec![i as i64], c));
        }
    }
    Ok(RingElement::from_terms(spec, terms))
}

/// Strong Gröbner basis in Z[t] of the preimage of the ideal.
///
/// Laurent generators are shifted to nonnegative exponents and the result is
/// saturated by `t`; a finite order `k` adjoins `t^k - 1`.
fn integer_basis(spec: &RingSpec, gens: &[RingElement]) -> Vec<ZPoly> {
    let mut polys: Vec<ZPoly> = gens
        .iter()
        .map(|g| {
            if spec.nvars() == 1 && !spec.vars()[0].is_finite() {
                to_zpoly(&g.unit_normalized())
            } else {
                to_zpoly(g)
            }
        })
        .collect();
    match spec.vars().first() {
        None => zgb::groebner(&polys),
        Some(v) if v.is_finite() => {
            let mut c = vec![BigInt::from(0); v.order as usize + 1];
            c[0] = BigInt::from(-1);
            c[v.order as usize] = BigInt::from(1);
            polys.push(ZPoly::new(c));
            zgb::groebner(&polys)
        }
        Some(_) => zgb::saturate_by_t(&polys),
    }
}
