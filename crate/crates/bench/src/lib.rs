//! Benchmark fixtures.

use foxcalc_core::catalog::{surface_link, theta, theta_alpha};
use foxcalc_core::maps::lemma36_rho;
use foxcalc_core::{alexander_matrix, twisted_matrix, Presentation, RingMatrix};

/// Alexander matrix of the one-relator theta group.
pub fn theta_matrix(n: usize) -> RingMatrix {
    alexander_matrix(&theta(n).unwrap(), &theta_alpha(n).unwrap()).unwrap()
}

/// Twisted matrix of the theta group under the built-in `SL(2;Z2)` representation.
pub fn theta_twisted_matrix(n: usize) -> RingMatrix {
    let alpha = theta_alpha(n).unwrap().with_modulus(2).unwrap();
    twisted_matrix(&theta(n).unwrap(), &alpha, &lemma36_rho(n).unwrap()).unwrap()
}

pub fn surface_link_group(id: &str) -> Presentation {
    surface_link(id).unwrap().presentation
}
