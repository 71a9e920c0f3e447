use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::error::{Error, Result};

/// A Laurent variable `t` with `t^order = 1`; `order == 0` means infinite order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Variable {
    pub name: String,
    pub order: u64,
}

impl Variable {
    pub fn new(name: impl Into<String>, order: u64) -> Self {
        Variable {
            name: name.into(),
            order,
        }
    }

    pub fn is_finite(&self) -> bool {
        self.order > 0
    }
}

#[derive(Debug, PartialEq, Eq, Hash)]
struct SpecInner {
    modulus: u64,
    vars: Vec<Variable>,
}

/// The ring `R[t_1^±, …, t_r^±] / (t_i^{k_i} - 1)` with `R = Z` (modulus 0) or `Z_p`.
///
/// Cheap to clone; equality compares contents.
#[derive(Clone)]
pub struct RingSpec {
    inner: Arc<SpecInner>,
}

pub(crate) fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl RingSpec {
    pub fn new(modulus: u64, vars: Vec<Variable>) -> Result<Self> {
        if modulus != 0 && !is_prime(modulus) {
            return Err(Error::CompositeModulus(modulus));
        }
        if modulus > u32::MAX as u64 {
            return Err(Error::InvalidArgument(format!(
                "modulus {modulus} is too large"
            )));
        }
        for (i, v) in vars.iter().enumerate() {
            if v.name.is_empty() {
                return Err(Error::InvalidArgument("empty variable name".into()));
            }
            if vars[..i].iter().any(|w| w.name == v.name) {
                return Err(Error::DuplicateVariable(v.name.clone()));
            }
        }
        Ok(RingSpec {
            inner: Arc::new(SpecInner { modulus, vars }),
        })
    }

    /// Shorthand for a single variable `name` of the given order.
    pub fn univariate(modulus: u64, name: &str, order: u64) -> Result<Self> {
        RingSpec::new(modulus, vec![Variable::new(name, order)])
    }

    pub fn modulus(&self) -> u64 {
        self.inner.modulus
    }

    pub fn vars(&self) -> &[Variable] {
        &self.inner.vars
    }

    pub fn nvars(&self) -> usize {
        self.inner.vars.len()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.inner.vars.iter().position(|v| v.name == name)
    }

    /// Finite coefficient field and every variable of finite order.
    pub fn is_finite(&self) -> bool {
        self.modulus() > 0 && self.vars().iter().all(Variable::is_finite)
    }

    /// Every variable of infinite order.
    pub fn is_laurent(&self) -> bool {
        self.vars().iter().all(|v| !v.is_finite())
    }

    /// Rank of the ring as a free module over its coefficient ring, when finite.
    pub fn dimension(&self) -> Option<u64> {
        self.vars().iter().try_fold(1u64, |acc, v| {
            if v.is_finite() {
                acc.checked_mul(v.order)
            } else {
                None
            }
        })
    }

    /// Number of elements for finite rings, saturating at `u64::MAX`.
    pub fn cardinality(&self) -> Option<u64> {
        if !self.is_finite() {
            return None;
        }
        let dim = self.dimension()?;
        let mut acc = 1u64;
        for _ in 0..dim {
            acc = acc.saturating_mul(self.modulus());
        }
        Some(acc)
    }

    pub fn with_modulus(&self, modulus: u64) -> Result<RingSpec> {
        RingSpec::new(modulus, self.vars().to_vec())
    }

    pub fn with_orders(&self, orders: &[u64]) -> Result<RingSpec> {
        if orders.len() != self.nvars() {
            return Err(Error::InvalidArgument(format!(
                "expected {} variable orders, got {}",
                self.nvars(),
                orders.len()
            )));
        }
        let vars = self
            .vars()
            .iter()
            .zip(orders)
            .map(|(v, &k)| Variable::new(v.name.clone(), k))
            .collect();
        RingSpec::new(self.modulus(), vars)
    }

    pub(crate) fn same(&self, other: &RingSpec) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner == other.inner
    }

    /// Joiner used between factors when rendering monomials.
    pub(crate) fn factor_joiner(&self) -> &'static str {
        if self.vars().iter().all(|v| v.name.chars().count() == 1) {
            ""
        } else {
            "*"
        }
    }
}

impl PartialEq for RingSpec {
    fn eq(&self, other: &Self) -> bool {
        self.same(other)
    }
}

impl Eq for RingSpec {}

impl Hash for RingSpec {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.inner.hash(state);
    }
}

impl fmt::Debug for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RingSpec({self})")
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.modulus() == 0 {
            write!(f, "Z")?;
        } else {
            write!(f, "Z{}", self.modulus())?;
        }
        if self.nvars() == 0 {
            return Ok(());
        }
        let names: Vec<String> = self
            .vars()
            .iter()
            .map(|v| format!("{}^±", v.name))
            .collect();
        write!(f, "[{}]", names.join(","))?;
        let rels: Vec<String> = self
            .vars()
            .iter()
            .filter(|v| v.is_finite())
            .map(|v| format!("{}^{}-1", v.name, v.order))
            .collect();
        if !rels.is_empty() {
            write!(f, "/({})", rels.join(","))?;
        }
        Ok(())
    }
}

/// Exponent vector ordered by total degree, then lexicographically in declaration order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<i64>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn exponents(&self) -> &[i64] {
        &self.0
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ring_make_examples() {
        let z_t = RingSpec::univariate(0, "t", 0).unwrap();
        assert!(z_t.is_laurent());
        assert_eq!(z_t.to_string(), "Z[t^±]");
        let z2 = RingSpec::univariate(2, "t", 2).unwrap();
        assert!(z2.is_finite());
        assert_eq!(z2.cardinality(), Some(4));
        let zxy = RingSpec::new(0, vec![Variable::new("x", 0), Variable::new("y", 0)]).unwrap();
        assert_eq!(zxy.nvars(), 2);
        assert_eq!(zxy.to_string(), "Z[x^±,y^±]");
    }

    #[test]
    fn ring_make_errors() {
        assert_eq!(
            RingSpec::univariate(6, "t", 0),
            Err(Error::CompositeModulus(6))
        );
        assert_eq!(
            RingSpec::univariate(1, "t", 0),
            Err(Error::CompositeModulus(1))
        );
        assert_eq!(
            RingSpec::new(0, vec![Variable::new("t", 0), Variable::new("t", 2)]),
            Err(Error::DuplicateVariable("t".into()))
        );
    }

    #[test]
    fn monomial_order_is_graded() {
        let a = Monomial(vec![2, 0]);
        let b = Monomial(vec![1, 1]);
        let c = Monomial(vec![0, 3]);
        assert!(b < a);
        assert!(a < c);
        assert!(Monomial(vec![-1, 0]) < Monomial::one(2));
    }
}
