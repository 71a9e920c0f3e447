use super::matrep::{MatrixGroup, MatrixRep, ZpMatrix};
use crate::catalog::theta;
use crate::error::{Error, Result};

fn m(rows: [[i64; 2]; 2]) -> ZpMatrix {
    ZpMatrix::from_rows(2, &[&rows[0], &rows[1]]).expect("valid 2x2 matrix over Z2")
}

/// The order-3 element `[[0,1],[1,1]]` of `SL(2;Z2)`.
pub fn rotation() -> ZpMatrix {
    m([[0, 1], [1, 1]])
}

/// The involution `[[0,1],[1,0]]`.
pub fn swap() -> ZpMatrix {
    m([[0, 1], [1, 0]])
}

/// The involution `[[1,0],[1,1]]`.
pub fn shear() -> ZpMatrix {
    m([[1, 0], [1, 1]])
}

/// Generator images of the `SL(2;Z2)` representation of the theta-curve group
/// `theta:n` for `n ≡ 1, 5 (mod 6)`, `n ≥ 5`.
pub fn lemma36_images(n: usize) -> Result<Vec<ZpMatrix>> {
    if n < 5 || !(n % 6 == 1 || n % 6 == 5) {
        return Err(Error::InvalidArgument(format!(
            "the theta representation needs n >= 5 with n = 1 or 5 mod 6, got {n}"
        )));
    }
    // n = 6k+5 or n = 6k+7; the first 6k+3 generators go to the rotation.
    let k = if n % 6 == 5 { (n - 5) / 6 } else { (n - 7) / 6 };
    let mut images = vec![rotation(); 6 * k + 3];
    images.push(swap());
    images.push(shear());
    if n % 6 == 1 {
        images.push(swap());
        images.push(shear());
    }
    debug_assert_eq!(images.len(), n);
    Ok(images)
}

/// The representation, validated against the single relator of `theta:n`.
pub fn lemma36_rho(n: usize) -> Result<MatrixRep> {
    let pres = theta(n)?;
    MatrixRep::new(&pres, MatrixGroup::sl(2, 2), lemma36_images(n)?)
}
