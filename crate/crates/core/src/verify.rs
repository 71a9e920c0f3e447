//! Checks of the closed-form theta-curve results against computed ideals.

use std::fmt;

use serde::Serialize;

use crate::catalog::{theta, theta_alpha, theta_alpha_cyclic};
use crate::error::Result;
use crate::ideal::Ideal;
use crate::invariants::{alexander_matrix, elementary_ideals, twisted_matrix};
use crate::maps::lemma36_rho;
use crate::ring::parse_generators;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub label: String,
    pub expected: String,
    pub computed: String,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub name: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let mark = if c.passed { "ok  " } else { "FAIL" };
            writeln!(
                f,
                "{mark} {}: expected {}, computed {}",
                c.label, c.expected, c.computed
            )?;
        }
        let failed = self.failures().count();
        write!(
            f,
            "{}: {} checks, {} failed",
            self.name,
            self.checks.len(),
            failed
        )
    }
}

/// Generators of `E_{n-1}` for the one-relator theta group under the linking-number map.
pub fn theta_case_value(n: usize) -> &'static str {
    match n % 6 {
        1 | 5 => "(1)",
        2 | 4 => "(3,1+t)",
        3 => "(2,1-t+t^2)",
        _ => "(1-t+t^2)",
    }
}

fn compare(label: String, computed: &Ideal, expected_text: &str) -> Result<Check> {
    let expected = Ideal::generated(
        computed.spec(),
        parse_generators(computed.spec(), expected_text)?,
    )?;
    let passed = computed.equals(&expected)?.is_equal();
    Ok(Check {
        label,
        expected: expected_text.to_string(),
        computed: computed.to_string(),
        passed,
    })
}

/// `E_d` of the theta group for every `n` in `ns` and every `d` from 0 to `n + 1`.
pub fn verify_theta_ideals<I: IntoIterator<Item = usize>>(ns: I) -> Result<Report> {
    let mut checks = Vec::new();
    for n in ns {
        let m = alexander_matrix(&theta(n)?, &theta_alpha(n)?)?;
        for (d, e) in elementary_ideals(&m, 0..=n + 1)?.iter().enumerate() {
            let expected = match d {
                d if d + 1 < n => "(0)",
                d if d + 1 == n => theta_case_value(n),
                _ => "(1)",
            };
            checks.push(compare(format!("n={n} d={d}"), e, expected)?);
        }
    }
    Ok(Report {
        name: "theta elementary ideals".into(),
        checks,
    })
}

/// `E_{n-1}` under the map sending every generator to `t` in `Z[t]/(t^n - 1)`.
pub fn verify_theta_cyclic<I: IntoIterator<Item = usize>>(ns: I) -> Result<Report> {
    let mut checks = Vec::new();
    for n in ns {
        let m = alexander_matrix(&theta(n)?, &theta_alpha_cyclic(n)?)?;
        let e = elementary_ideals(&m, [n - 1])?.pop().unwrap();
        checks.push(compare(format!("n={n} d={}", n - 1), &e, "(1-t+t^2)")?);
    }
    Ok(Report {
        name: "theta elementary ideals over Z[t]/(t^n-1)".into(),
        checks,
    })
}

/// Twisted ideals of the theta group over `Z2[t^±]` for the explicit `SL(2;Z2)` representation.
pub fn verify_theta_twisted<I: IntoIterator<Item = usize>>(ns: I) -> Result<Report> {
    let mut checks = Vec::new();
    for n in ns {
        let rho = lemma36_rho(n)?;
        let m = twisted_matrix(&theta(n)?, &theta_alpha(n)?.with_modulus(2)?, &rho)?;
        for (d, e) in elementary_ideals(&m, 0..=2 * n)?.iter().enumerate() {
            let expected = match d {
                d if d + 2 < 2 * n => "(0)",
                d if d + 2 == 2 * n => "(1+t)",
                _ => "(1)",
            };
            checks.push(compare(format!("n={n} d={d}"), e, expected)?);
        }
    }
    Ok(Report {
        name: "theta twisted ideals".into(),
        checks,
    })
}

/// Builds the explicit `SL(2;Z2)` representation for each `n`, which validates the relator.
pub fn verify_theta_representation<I: IntoIterator<Item = usize>>(ns: I) -> Result<Report> {
    let checks = ns
        .into_iter()
        .map(|n| {
            let outcome = lemma36_rho(n);
            Check {
                label: format!("n={n}"),
                expected: "rho(r) = E".into(),
                computed: match &outcome {
                    Ok(_) => "rho(r) = E".into(),
                    Err(e) => e.to_string(),
                },
                passed: outcome.is_ok(),
            }
        })
        .collect();
    Ok(Report {
        name: "theta SL(2;Z2) representation".into(),
        checks,
    })
}
