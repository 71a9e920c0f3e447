//! Resolution of command-line targets, abelianizations, rings and representations.

use std::path::Path;

use anyhow::{bail, Context, Result};
use foxcalc_core::catalog::{lookup, parse_alpha};
use foxcalc_core::maps::{lemma36_rho, MatrixGroup, MatrixRep, ZpMatrix};
use foxcalc_core::ring::{RingSpec, Variable};
use foxcalc_core::{parse_presentation, AbelianMap, Error, Presentation};

/// A presentation plus its catalog default abelianization, if any.
pub struct Target {
    pub label: String,
    pub presentation: Presentation,
    pub default_alpha: Option<AbelianMap>,
}

/// A file path, an inline `< gens | rels >` presentation, or a catalog key.
pub fn resolve_target(text: &str) -> Result<Target> {
    let trimmed = text.trim();
    if trimmed.starts_with('<') {
        return Ok(Target {
            label: "inline".into(),
            presentation: parse_presentation(trimmed)?,
            default_alpha: None,
        });
    }
    let path = Path::new(trimmed);
    if path.is_file() {
        let body =
            std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        let presentation = parse_presentation(&body)?;
        let label = presentation.name().unwrap_or(trimmed).to_string();
        return Ok(Target {
            label,
            presentation,
            default_alpha: None,
        });
    }
    if !trimmed.contains(':') {
        return Err(Error::Parse(format!(
            "{trimmed:?} is neither a file, an inline presentation nor a catalog key"
        ))
        .into());
    }
    let entry = lookup(trimmed)?;
    Ok(Target {
        label: entry.key,
        presentation: entry.presentation,
        default_alpha: entry.default_alpha,
    })
}

/// `--ring` override: `Z`, `Zp`, optionally followed by `:k1,k2,...` variable orders (`inf` allowed).
pub struct RingOverride {
    pub modulus: u64,
    pub orders: Option<Vec<u64>>,
}

pub fn parse_ring(text: &str) -> Result<RingOverride> {
    let (base, orders) = match text.split_once(':') {
        Some((b, o)) => (b, Some(o)),
        None => (text, None),
    };
    let modulus = match base.trim().strip_prefix('Z') {
        Some("") => 0,
        Some(p) => p
            .parse::<u64>()
            .map_err(|_| Error::Parse(format!("bad ring {text:?}; expected Z or Zp")))?,
        None => return Err(Error::Parse(format!("bad ring {text:?}; expected Z or Zp")).into()),
    };
    let orders = orders
        .map(|o| {
            o.split(',')
                .map(|k| match k.trim() {
                    "inf" | "0" => Ok(0),
                    k => k
                        .parse::<u64>()
                        .map_err(|_| Error::Parse(format!("bad variable order {k:?}"))),
                })
                .collect::<std::result::Result<Vec<u64>, Error>>()
        })
        .transpose()?;
    Ok(RingOverride { modulus, orders })
}

fn apply_ring(alpha: AbelianMap, pres: &Presentation, ring: &RingOverride) -> Result<AbelianMap> {
    let target = alpha.target();
    let vars: Vec<Variable> = match &ring.orders {
        None => target.vars().to_vec(),
        Some(orders) => {
            if orders.len() != target.nvars() {
                bail!(Error::Parse(format!(
                    "--ring lists {} orders for {} variables",
                    orders.len(),
                    target.nvars()
                )));
            }
            target
                .vars()
                .iter()
                .zip(orders)
                .map(|(v, &k)| Variable::new(v.name.clone(), k))
                .collect()
        }
    };
    let spec = RingSpec::new(ring.modulus, vars)?;
    Ok(AbelianMap::new(pres, alpha.images().to_vec(), &spec)?)
}

/// The abelianization from `--alpha`, or the catalog default.
pub fn resolve_alpha(
    target: &Target,
    alpha: Option<&str>,
    ring: Option<&RingOverride>,
    default_modulus: u64,
) -> Result<AbelianMap> {
    let pres = &target.presentation;
    let base = match alpha {
        Some(text) => parse_alpha(pres, text, default_modulus)?,
        None => match &target.default_alpha {
            Some(a) => a.with_modulus(default_modulus)?,
            None => bail!(Error::Parse(format!(
                "{} has no default abelianization; pass --alpha",
                target.label
            ))),
        },
    };
    match ring {
        Some(r) => apply_ring(base, pres, r),
        None => Ok(base),
    }
}

/// `lemma36` for theta targets, or a file with a `modulus p` line, an optional
/// `group sl|gl` line, and one `<gen> a11 a12 ... ann` line per generator.
pub fn resolve_rho(target: &Target, text: &str) -> Result<MatrixRep> {
    let pres = &target.presentation;
    if text == "lemma36" {
        let n = target
            .label
            .strip_prefix("theta:")
            .and_then(|n| n.parse::<usize>().ok())
            .ok_or_else(|| {
                Error::InvalidArgument("--rho lemma36 needs a theta:<n> target".into())
            })?;
        return Ok(lemma36_rho(n)?);
    }
    let body = std::fs::read_to_string(text)
        .with_context(|| format!("reading representation file {text}"))?;
    parse_rho(pres, &body)
}

pub fn parse_rho(pres: &Presentation, body: &str) -> Result<MatrixRep> {
    let mut modulus = None;
    let mut special = false;
    let mut images: Vec<Option<ZpMatrix>> = vec![None; pres.generator_count()];
    for (lineno, raw) in body.lines().enumerate() {
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let bad = |what: &str| Error::Parse(format!("representation line {}: {what}", lineno + 1));
        let mut words = line.split_whitespace();
        let head = words.next().unwrap();
        let rest: Vec<&str> = words.collect();
        match head {
            "modulus" => {
                let [p] = rest.as_slice() else {
                    return Err(bad("expected `modulus <p>`").into());
                };
                modulus = Some(
                    p.parse::<u64>()
                        .map_err(|_| bad("modulus must be a prime"))?,
                );
            }
            "group" => match rest.as_slice() {
                ["sl"] => special = true,
                ["gl"] => special = false,
                _ => return Err(bad("expected `group sl` or `group gl`").into()),
            },
            gen => {
                let p = modulus.ok_or_else(|| bad("`modulus` must come first"))?;
                let idx = pres
                    .generator_index(gen)
                    .ok_or_else(|| Error::UnknownGenerator(gen.to_string()))?;
                let entries = rest
                    .iter()
                    .map(|e| {
                        e.parse::<i64>()
                            .map_err(|_| bad("matrix entries must be integers"))
                    })
                    .collect::<std::result::Result<Vec<i64>, Error>>()?;
                let n = (entries.len() as f64).sqrt() as usize;
                if n == 0 || n * n != entries.len() {
                    return Err(bad("expected a square number of entries").into());
                }
                let rows: Vec<&[i64]> = entries.chunks(n).collect();
                images[idx] = Some(ZpMatrix::from_rows(p, &rows)?);
            }
        }
    }
    let p =
        modulus.ok_or_else(|| Error::Parse("representation file has no `modulus` line".into()))?;
    let images = images
        .into_iter()
        .enumerate()
        .map(|(i, m)| {
            m.ok_or_else(|| {
                Error::Parse(format!("no matrix for generator {}", pres.generators()[i]))
            })
        })
        .collect::<std::result::Result<Vec<_>, Error>>()?;
    let n = images[0].size();
    let group = if special {
        MatrixGroup::sl(n, p)
    } else {
        MatrixGroup::gl(n, p)
    };
    Ok(MatrixRep::new(pres, group, images)?)
}

/// Comma-separated integers, e.g. `5,7,11`.
pub fn parse_list(text: &str) -> Result<Vec<usize>> {
    text.split(',')
        .map(|s| {
            s.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad list entry {s:?}")).into())
        })
        .collect()
}
