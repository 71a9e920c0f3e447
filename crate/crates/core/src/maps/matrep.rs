use std::fmt;

use crate::error::{Error, Result};
use crate::presentation::{Presentation, Word};
use crate::ring::{is_prime, mod_inverse};

/// Largest matrix group enumerated by default.
pub const DEFAULT_GROUP_CAP: u64 = 10_000;

/// Square matrix over `Z_p`, entries row-major in `0..p`. Ordered by entry tuple.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ZpMatrix {
    p: u64,
    n: usize,
    entries: Vec<u64>,
}

impl ZpMatrix {
    pub fn new(p: u64, n: usize, entries: Vec<u64>) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::CompositeModulus(p));
        }
        if entries.len() != n * n {
            return Err(Error::InvalidArgument(format!(
                "{} entries for a {n}x{n} matrix",
                entries.len()
            )));
        }
        Ok(ZpMatrix {
            p,
            n,
            entries: entries.into_iter().map(|e| e % p).collect(),
        })
    }

    /// From signed rows; entries reduced mod `p`.
    pub fn from_rows(p: u64, rows: &[&[i64]]) -> Result<Self> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for r in rows {
            if r.len() != n {
                return Err(Error::InvalidArgument("matrix must be square".into()));
            }
            entries.extend(r.iter().map(|&e| e.rem_euclid(p as i64) as u64));
        }
        ZpMatrix::new(p, n, entries)
    }

    pub fn identity(p: u64, n: usize) -> Self {
        let mut entries = vec![0; n * n];
        for i in 0..n {
            entries[i * n + i] = 1 % p;
        }
        ZpMatrix { p, n, entries }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.entries[r * self.n + c]
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    pub fn is_identity(&self) -> bool {
        *self == ZpMatrix::identity(self.p, self.n)
    }

    pub fn mul(&self, other: &ZpMatrix) -> ZpMatrix {
        assert_eq!(
            (self.p, self.n),
            (other.p, other.n),
            "matrix shape mismatch"
        );
        let n = self.n;
        let mut entries = vec![0u64; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.entries[i * n + k];
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    entries[i * n + j] =
                        (entries[i * n + j] + a * other.entries[k * n + j]) % self.p;
                }
            }
        }
        ZpMatrix {
            p: self.p,
            n,
            entries,
        }
    }

    /// Determinant by Gaussian elimination over the field `Z_p`.
    pub fn det(&self) -> u64 {
        let (p, n) = (self.p, self.n);
        let mut a = self.entries.clone();
        let mut det = 1u64;
        for col in 0..n {
            let Some(piv) = (col..n).find(|&r| a[r * n + col] != 0) else {
                return 0;
            };
            if piv != col {
                for j in 0..n {
                    a.swap(piv * n + j, col * n + j);
                }
                det = (p - det) % p;
            }
            let pv = a[col * n + col];
            det = det * pv % p;
            let inv = mod_inverse(pv, p);
            for r in col + 1..n {
                let f = a[r * n + col] * inv % p;
                if f == 0 {
                    continue;
                }
                for j in col..n {
                    a[r * n + j] = (a[r * n + j] + (p - f) * a[col * n + j]) % p;
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Option<ZpMatrix> {
        let (p, n) = (self.p, self.n);
        let mut a = self.entries.clone();
        let mut inv = ZpMatrix::identity(p, n).entries;
        for col in 0..n {
            let piv = (col..n).find(|&r| a[r * n + col] != 0)?;
            for j in 0..n {
                a.swap(piv * n + j, col * n + j);
                inv.swap(piv * n + j, col * n + j);
            }
            let s = mod_inverse(a[col * n + col], p);
            for j in 0..n {
                a[col * n + j] = a[col * n + j] * s % p;
                inv[col * n + j] = inv[col * n + j] * s % p;
            }
            for r in 0..n {
                let f = a[r * n + col];
                if r == col || f == 0 {
                    continue;
                }
                for j in 0..n {
                    a[r * n + j] = (a[r * n + j] + (p - f) * a[col * n + j]) % p;
                    inv[r * n + j] = (inv[r * n + j] + (p - f) * inv[col * n + j]) % p;
                }
            }
        }
        Some(ZpMatrix { p, n, entries: inv })
    }

    pub fn pow(&self, k: i64) -> Option<ZpMatrix> {
        let mut base = if k < 0 { self.inverse()? } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = ZpMatrix::identity(self.p, self.n);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        Some(acc)
    }

    /// `b * self * b^{-1}`
    pub fn conjugate_by(&self, b: &ZpMatrix) -> ZpMatrix {
        b.mul(self)
            .mul(&b.inverse().expect("conjugator must be invertible"))
    }
}

impl fmt::Display for ZpMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.n {
            if r > 0 {
                write!(f, ",")?;
            }
            let row: Vec<String> = (0..self.n).map(|c| self.get(r, c).to_string()).collect();
            write!(f, "[{}]", row.join(","))?;
        }
        write!(f, "]")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GroupKind {
    /// Determinant 1.
    Special,
    /// Any unit determinant.
    General,
}

/// `SL(n; Z_p)` or `GL(n; Z_p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct MatrixGroup {
    pub kind: GroupKind,
    pub size: usize,
    pub modulus: u64,
}

impl MatrixGroup {
    pub fn sl(size: usize, modulus: u64) -> Self {
        MatrixGroup {
            kind: GroupKind::Special,
            size,
            modulus,
        }
    }

    pub fn gl(size: usize, modulus: u64) -> Self {
        MatrixGroup {
            kind: GroupKind::General,
            size,
            modulus,
        }
    }

    /// Group order, saturating at `u64::MAX`.
    pub fn order(&self) -> u64 {
        let (p, n) = (self.modulus, self.size as u32);
        let pn = p.saturating_pow(n);
        let mut acc = 1u64;
        for i in 0..n {
            acc = acc.saturating_mul(pn.saturating_sub(p.saturating_pow(i)));
        }
        match self.kind {
            GroupKind::General => acc,
            GroupKind::Special if acc == u64::MAX => acc,
            GroupKind::Special => acc / (p - 1),
        }
    }

    pub fn contains(&self, m: &ZpMatrix) -> bool {
        if m.p != self.modulus || m.n != self.size {
            return false;
        }
        match self.kind {
            GroupKind::Special => m.det() == 1,
            GroupKind::General => m.det() != 0,
        }
    }

    pub fn elements(&self) -> Result<Vec<ZpMatrix>> {
        self.elements_with_cap(DEFAULT_GROUP_CAP)
    }

    /// All elements in row-major lexicographic order of entries.
    pub fn elements_with_cap(&self, cap: u64) -> Result<Vec<ZpMatrix>> {
        if !is_prime(self.modulus) {
            return Err(Error::CompositeModulus(self.modulus));
        }
        let order = self.order();
        if order > cap {
            return Err(Error::TargetTooLarge { size: order, cap });
        }
        let (p, n) = (self.modulus, self.size);
        let cells = n * n;
        let mut out = Vec::with_capacity(order as usize);
        let mut entries = vec![0u64; cells];
        loop {
            let m = ZpMatrix {
                p,
                n,
                entries: entries.clone(),
            };
            if self.contains(&m) {
                out.push(m);
            }
            // Increment with the last entry least significant.
            let mut i = cells;
            loop {
                if i == 0 {
                    return Ok(out);
                }
                i -= 1;
                entries[i] += 1;
                if entries[i] < p {
                    break;
                }
                entries[i] = 0;
            }
        }
    }
}

impl fmt::Display for MatrixGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.kind {
            GroupKind::Special => "SL",
            GroupKind::General => "GL",
        };
        write!(f, "{name}({};Z{})", self.size, self.modulus)
    }
}

/// A representation of a presented group in a matrix group, validated against its relators.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MatrixRep {
    group: MatrixGroup,
    images: Vec<ZpMatrix>,
}

impl MatrixRep {
    pub fn new(pres: &Presentation, group: MatrixGroup, images: Vec<ZpMatrix>) -> Result<Self> {
        if images.len() != pres.generator_count() {
            return Err(Error::InvalidArgument(format!(
                "{} images for {} generators",
                images.len(),
                pres.generator_count()
            )));
        }
        for (g, m) in images.iter().enumerate() {
            if !group.contains(m) {
                return Err(Error::NotInvertible(format!(
                    "{} -> {m} is not in {group}",
                    pres.generators()[g]
                )));
            }
        }
        let rep = MatrixRep { group, images };
        for (i, r) in pres.relators().iter().enumerate() {
            let img = rep.word_image(r);
            if !img.is_identity() {
                return Err(Error::RelatorNotKilled {
                    relator: i + 1,
                    detail: format!("maps to {img}"),
                });
            }
        }
        Ok(rep)
    }

    /// Unchecked construction for images produced by enumeration.
    pub(crate) fn from_parts(group: MatrixGroup, images: Vec<ZpMatrix>) -> Self {
        MatrixRep { group, images }
    }

    /// The trivial representation.
    pub fn trivial(pres: &Presentation, group: MatrixGroup) -> Self {
        let id = ZpMatrix::identity(group.modulus, group.size);
        MatrixRep::from_parts(group, vec![id; pres.generator_count()])
    }

    pub fn group(&self) -> MatrixGroup {
        self.group
    }

    pub fn modulus(&self) -> u64 {
        self.group.modulus
    }

    pub fn degree(&self) -> usize {
        self.group.size
    }

    pub fn images(&self) -> &[ZpMatrix] {
        &self.images
    }

    pub fn image(&self, gen: usize) -> &ZpMatrix {
        &self.images[gen]
    }

    pub fn word_image(&self, w: &Word) -> ZpMatrix {
        let mut acc = ZpMatrix::identity(self.group.modulus, self.group.size);
        for l in w.letters() {
            let m = self.images[l.gen]
                .pow(l.exp)
                .expect("images are invertible");
            acc = acc.mul(&m);
        }
        acc
    }

    /// `g -> b ρ(g) b^{-1}`
    pub fn conjugate_by(&self, b: &ZpMatrix) -> MatrixRep {
        MatrixRep {
            group: self.group,
            images: self.images.iter().map(|m| m.conjugate_by(b)).collect(),
        }
    }
}
