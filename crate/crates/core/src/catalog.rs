//! Built-in presentations, their default abelianizations, and reference data.

use crate::error::{Error, Result};
use crate::maps::AbelianMap;
use crate::presentation::{parse_presentation, Presentation};
use crate::ring::{parse_element, RingSpec, Variable};

/// One-relator presentation of the theta-curve group:
/// `<x1..xn | (x1 xn x1^-1)(x2 x1 x2^-1)...(xn x(n-1) xn^-1)>`.
pub fn theta(n: usize) -> Result<Presentation> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!(
            "theta curves need n >= 3, got {n}"
        )));
    }
    let gens: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    let prev = |i: usize| if i == 1 { n } else { i - 1 };
    let rel: Vec<String> = (1..=n)
        .map(|i| format!("x{i} x{} x{i}^-1", prev(i)))
        .collect();
    let text = format!("< {} | {} >", gens.join(", "), rel.join(" "));
    Ok(parse_presentation(&text)?.with_name(format!("theta:{n}")))
}

/// Wirtinger presentation of the same group with generators `x_i, y_i, z_i` and
/// relators `x_i x_{i-1} y_i^-1 x_{i-1}^-1`, `z_{i-1} x_i x_{i-1}^-1 x_i^-1`, `z_n z_1 ... z_{n-1}`.
pub fn theta_wirtinger(n: usize) -> Result<Presentation> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!(
            "theta curves need n >= 3, got {n}"
        )));
    }
    let mut gens = Vec::with_capacity(3 * n);
    for letter in ["x", "y", "z"] {
        gens.extend((1..=n).map(|i| format!("{letter}{i}")));
    }
    let prev = |i: usize| if i == 1 { n } else { i - 1 };
    let mut rels = Vec::with_capacity(2 * n + 1);
    for i in 1..=n {
        let j = prev(i);
        rels.push(format!("x{i} x{j} y{i}^-1 x{j}^-1"));
    }
    for i in 1..=n {
        let j = prev(i);
        rels.push(format!("z{j} x{i} x{j}^-1 x{i}^-1"));
    }
    let last: Vec<String> = std::iter::once(n)
        .chain(1..n)
        .map(|i| format!("z{i}"))
        .collect();
    rels.push(last.join(" "));
    let text = format!("< {} | {} >", gens.join(", "), rels.join(", "));
    Ok(parse_presentation(&text)?.with_name(format!("theta-wirtinger:{n}")))
}

/// The free group on `x1..xs`.
pub fn free_group(s: usize) -> Result<Presentation> {
    let gens: Vec<String> = (1..=s).map(|i| format!("x{i}")).collect();
    Ok(Presentation::new(gens, vec![])?.with_name(format!("free:{s}")))
}

fn laurent_t() -> RingSpec {
    RingSpec::univariate(0, "t", 0).expect("valid ring")
}

/// `x_i -> t` for `i < n` and `x_n -> t^{1-n}`, into `Z[t^±]`.
pub fn theta_alpha(n: usize) -> Result<AbelianMap> {
    let pres = theta(n)?;
    let mut images = vec![vec![1i64]; n];
    images[n - 1] = vec![1 - n as i64];
    AbelianMap::new(&pres, images, &laurent_t())
}

/// Every `x_i -> t`, into `Z[t]/(t^n - 1)`.
pub fn theta_alpha_cyclic(n: usize) -> Result<AbelianMap> {
    let pres = theta(n)?;
    let target = RingSpec::univariate(0, "t", n as u64)?;
    AbelianMap::uniform(&pres, vec![1], &target)
}

/// The extension of [`theta_alpha`] to the Wirtinger generators (`y_i`, `z_i` map like `x_i`).
pub fn theta_wirtinger_alpha(n: usize) -> Result<AbelianMap> {
    let pres = theta_wirtinger(n)?;
    let mut base = vec![vec![1i64]; n];
    base[n - 1] = vec![1 - n as i64];
    let images = base.iter().chain(&base).chain(&base).cloned().collect();
    AbelianMap::new(&pres, images, &laurent_t())
}

/// Row of the surface-link reference table.
struct SurfaceLinkRow {
    id: &'static str,
    gens: &'static [&'static str],
    rels: &'static [&'static str],
    /// Abelianizer target variables and orders (0 = infinite).
    vars: &'static [(&'static str, u64)],
    images: &'static [&'static [i64]],
    ideal: &'static str,
    polynomial: &'static str,
    invariant: &'static str,
}

const KNOT: &[&str] = &["x1", "x2"];
const XY: &[&str] = &["x", "y"];
const X_INF: &[(&str, u64)] = &[("x", 0)];
const KNOT_IMAGES: &[&[i64]] = &[&[1], &[1]];
const XY_IMAGES: &[&[i64]] = &[&[1, 0], &[0, 1]];
const XY_INF: &[(&str, u64)] = &[("x", 0), ("y", 0)];
const XINF_Y2: &[(&str, u64)] = &[("x", 0), ("y", 2)];
const X2_Y2: &[(&str, u64)] = &[("x", 2), ("y", 2)];
const Z2_RELATOR: &[&str] = &["x y x^-1 y^-1"];

const SURFACE_LINKS: &[SurfaceLinkRow] = &[
    SurfaceLinkRow {
        id: "0_1",
        gens: &["x"],
        rels: &[],
        vars: X_INF,
        images: &[&[1]],
        ideal: "(1)",
        polynomial: "1",
        invariant: "{(0,1)_3}",
    },
    SurfaceLinkRow {
        id: "2_1^1",
        gens: &["x"],
        rels: &[],
        vars: X_INF,
        images: &[&[1]],
        ideal: "(1)",
        polynomial: "1",
        invariant: "{(0,1)_3}",
    },
    SurfaceLinkRow {
        id: "2_1^-1",
        gens: &["x"],
        rels: &["x^2"],
        vars: &[("x", 2)],
        images: &[&[1]],
        ideal: "(1)",
        polynomial: "1",
        invariant: "{(1)_1,(1+t,1)_1}",
    },
    SurfaceLinkRow {
        id: "6_1^0,1",
        gens: XY,
        rels: Z2_RELATOR,
        vars: XY_INF,
        images: XY_IMAGES,
        ideal: "(x-1,y-1)",
        polynomial: "1",
        invariant: "{(0,1)_4,(0,0,1)_1,(0,1+t,1)_2,(0,0,1+t,1)_1}",
    },
    SurfaceLinkRow {
        id: "7_1^0,-2",
        gens: XY,
        rels: &["y x y x^-1"],
        vars: XINF_Y2,
        images: XY_IMAGES,
        ideal: "(x+1,y-1)",
        polynomial: "1",
        invariant: "{(0,1)_2,(0,0,1)_1,(0,1+t,1)_2,(0,0,1+t,1)_1}",
    },
    SurfaceLinkRow {
        id: "8_1",
        gens: KNOT,
        rels: &["x1 x2 x1 x2^-1 x1^-1 x2^-1"],
        vars: X_INF,
        images: KNOT_IMAGES,
        ideal: "(x^2-x+1)",
        polynomial: "x^2-x+1",
        invariant: "{(0,1)_2,(0,0,1)_1,(0,0,1+t,1)_1}",
    },
    SurfaceLinkRow {
        id: "8_1^1,1",
        gens: XY,
        rels: Z2_RELATOR,
        vars: XY_INF,
        images: XY_IMAGES,
        ideal: "(x-1,y-1)",
        polynomial: "1",
        invariant: "{(0,1)_4,(0,0,1)_1,(0,1+t,1)_2,(0,0,1+t,1)_1}",
    },
    SurfaceLinkRow {
        id: "8_1^-1,-1",
        gens: XY,
        rels: &["x y x y^-1", "x^-2 y^2"],
        vars: X2_Y2,
        images: XY_IMAGES,
        ideal: "(x+1,y+1,2)",
        polynomial: "1",
        invariant: "{(0,1)_3,(0,0,1+t,1)_1}",
    },
    SurfaceLinkRow {
        id: "9_1",
        gens: KNOT,
        rels: &["x1 x2^-1 x1 x2 x1^-1 x2^-1"],
        vars: X_INF,
        images: KNOT_IMAGES,
        ideal: "(x-2)",
        polynomial: "x-2",
        invariant: "{(0,1)_4}",
    },
    SurfaceLinkRow {
        id: "9_1^0,1",
        gens: XY,
        rels: &["x^-1 y^-1 x y x^-1 y x y^-1"],
        vars: XY_INF,
        images: XY_IMAGES,
        ideal: "((x-1)(y-1),(y-1)^2)",
        polynomial: "y-1",
        invariant: "{(0,1)_4,(0,0,0,1)_2,(0,0,1+t,1)_3}",
    },
    SurfaceLinkRow {
        id: "9_1^1,-2",
        gens: XY,
        rels: &["x y x y^-1", "x^2"],
        vars: &[("x", 2), ("y", 0)],
        images: XY_IMAGES,
        ideal: "(x+1,y+1,2)",
        polynomial: "1",
        invariant: "{(0,1)_3,(0,1+t,1)_1,(0,0,1+t,1)_1}",
    },
    SurfaceLinkRow {
        id: "10_1",
        gens: KNOT,
        rels: &["x1^-1 x2 x1 x2^-1 x1 x2 x1^-1 x2^-1 x1 x2^-1"],
        vars: X_INF,
        images: KNOT_IMAGES,
        ideal: "(x^2-3x+1)",
        polynomial: "x^2-3x+1",
        invariant: "{(0,1)_2,(0,0,1+t,1)_1}",
    },
    SurfaceLinkRow {
        id: "10_2",
        gens: KNOT,
        rels: &["x1 x2 x1 x2^-1 x1^-1 x2^-1", "x1^2 x2 x1^-2 x2^-1"],
        vars: X_INF,
        images: KNOT_IMAGES,
        ideal: "(x+1,3)",
        polynomial: "1",
        invariant: "{(0,1)_4}",
    },
    SurfaceLinkRow {
        id: "10_3",
        gens: KNOT,
        rels: &["x1 x2 x1 x2^-1 x1^-1 x2^-1", "x1^3 x2 x1^-3 x2^-1"],
        vars: X_INF,
        images: KNOT_IMAGES,
        ideal: "(x^2+x+1,2)",
        polynomial: "1",
        invariant: "{(0,1)_4}",
    },
    SurfaceLinkRow {
        id: "10_1^1",
        gens: KNOT,
        rels: &["x1 x2 x1 x2^-1 x1^-1 x2^-1"],
        vars: X_INF,
        images: KNOT_IMAGES,
        ideal: "(x^2-x+1)",
        polynomial: "x^2-x+1",
        invariant: "{(0,1)_2,(0,0,1)_1,(0,0,1+t,1)_1}",
    },
    SurfaceLinkRow {
        id: "10_1^0,1",
        gens: XY,
        rels: &["x^-1 y^-1 x^-1 y x y x y^-1"],
        vars: XY_INF,
        images: XY_IMAGES,
        ideal: "((x-1)(xy+1),(y-1)(xy+1))",
        polynomial: "xy+1",
        invariant: "{(0,1)_3,(0,0,1)_2,(0,0,0,1)_3,(0,0,1+t,1)_2}",
    },
    SurfaceLinkRow {
        id: "10_2^0,1",
        gens: XY,
        rels: &["x^2 y x^-2 y^-1"],
        vars: XY_INF,
        images: XY_IMAGES,
        ideal: "((x-1)(x+1),(y-1)(x+1))",
        polynomial: "x+1",
        invariant: "{(0,1)_3,(0,0,1)_2,(0,0,0,1)_2,(0,0,1+t,1)_3}",
    },
    SurfaceLinkRow {
        id: "10_1^1,1",
        gens: XY,
        rels: Z2_RELATOR,
        vars: XY_INF,
        images: XY_IMAGES,
        ideal: "(x-1,y-1)",
        polynomial: "1",
        invariant: "{(0,1)_4,(0,0,1)_1,(0,1+t,1)_2,(0,0,1+t,1)_1}",
    },
    SurfaceLinkRow {
        id: "10_1^0,0,1",
        gens: &["x", "y", "z"],
        rels: &["y^-1 x^-1 z x y z^-1"],
        vars: &[("x", 0), ("y", 0), ("z", 0)],
        images: &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]],
        ideal: "(0)",
        polynomial: "0",
        invariant: "{(0,0,0,1)_16,(0,0,0,0,1)_4,(0,0,0,1+t,1)_8,(0,0,0,0,1+t,1)_3}",
    },
    SurfaceLinkRow {
        id: "10_1^0,-2",
        gens: XY,
        rels: &["x^-1 y^-1 x y x^-1 y x y"],
        vars: XINF_Y2,
        images: XY_IMAGES,
        ideal: "(2x+y-1,4)",
        polynomial: "1",
        invariant: "{(0,0,1)_2,(0,0,1+t,1)_3}",
    },
    SurfaceLinkRow {
        id: "10_2^0,-2",
        gens: XY,
        rels: &["x y^2 x^-1 y^-2", "y x^-1 y^-1 x y x^-1 y x"],
        vars: XINF_Y2,
        images: XY_IMAGES,
        ideal: "(2x+y-1,4,2x^2+2)",
        polynomial: "1",
        invariant: "{(0,0,1)_2,(0,0,1+t,1)_3}",
    },
    SurfaceLinkRow {
        id: "10_1^-1,-1",
        gens: XY,
        rels: &["x^2 y^2", "y x y x y x^-1 y^-1 x^-1"],
        vars: X2_Y2,
        images: XY_IMAGES,
        ideal: "(x+1,y+1,4)",
        polynomial: "1",
        invariant: "{(0,1)_1,(0,1+t,1)_2,(0,0,1+t,1)_1}",
    },
    SurfaceLinkRow {
        id: "10_1^-2,-2",
        gens: XY,
        rels: &["x y x y^-1", "x^-2 y^2"],
        vars: X2_Y2,
        images: XY_IMAGES,
        ideal: "(x+1,y+1,2)",
        polynomial: "1",
        invariant: "{(0,1)_3,(0,0,1+t,1)_1}",
    },
];

/// A surface-link group with its reference data.
#[derive(Clone, Debug)]
pub struct SurfaceLink {
    pub id: &'static str,
    pub presentation: Presentation,
    /// Abelianization onto the ring named after the generators.
    pub abelianizer: AbelianMap,
    /// Reference first elementary ideal over the abelianizer's ring.
    pub ideal: &'static str,
    /// Reference Alexander polynomial.
    pub polynomial: &'static str,
    /// Reference row-form invariant for `SL(2;Z2)` and `<t | t^2>`.
    pub invariant: &'static str,
}

/// All surface-link ids in table order.
pub fn surface_link_ids() -> Vec<&'static str> {
    SURFACE_LINKS.iter().map(|r| r.id).collect()
}

pub fn surface_link(id: &str) -> Result<SurfaceLink> {
    let row = SURFACE_LINKS
        .iter()
        .find(|r| r.id == id)
        .ok_or_else(|| Error::UnknownCatalogKey(format!("yoshikawa:{id}")))?;
    let text = format!("< {} | {} >", row.gens.join(", "), row.rels.join(", "));
    let presentation = parse_presentation(&text)?.with_name(format!("yoshikawa:{}", row.id));
    let target = RingSpec::new(
        0,
        row.vars
            .iter()
            .map(|(n, k)| Variable::new(*n, *k))
            .collect(),
    )?;
    let images = row.images.iter().map(|v| v.to_vec()).collect();
    let abelianizer = AbelianMap::new(&presentation, images, &target)?;
    Ok(SurfaceLink {
        id: row.id,
        presentation,
        abelianizer,
        ideal: row.ideal,
        polynomial: row.polynomial,
        invariant: row.invariant,
    })
}

/// A named presentation with an optional default abelianization.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub key: String,
    pub presentation: Presentation,
    pub default_alpha: Option<AbelianMap>,
    pub note: &'static str,
}

fn parse_index(key: &str, text: &str) -> Result<usize> {
    text.parse()
        .map_err(|_| Error::UnknownCatalogKey(key.to_string()))
}

/// Looks up `theta:<n>`, `theta-wirtinger:<n>`, `free:<s>`, `handlebody:0_1` or `yoshikawa:<id>`.
pub fn lookup(key: &str) -> Result<CatalogEntry> {
    let (family, arg) = key
        .split_once(':')
        .ok_or_else(|| Error::UnknownCatalogKey(key.to_string()))?;
    let entry = |presentation: Presentation, default_alpha, note| CatalogEntry {
        key: key.to_string(),
        presentation,
        default_alpha,
        note,
    };
    match family {
        "theta" => {
            let n = parse_index(key, arg)?;
            Ok(entry(
                theta(n)?,
                Some(theta_alpha(n)?),
                "one-relator theta-curve group",
            ))
        }
        "theta-wirtinger" => {
            let n = parse_index(key, arg)?;
            Ok(entry(
                theta_wirtinger(n)?,
                Some(theta_wirtinger_alpha(n)?),
                "Wirtinger presentation of the theta-curve group",
            ))
        }
        "free" => {
            let s = parse_index(key, arg)?;
            if s == 0 {
                return Err(Error::EmptyGenerators);
            }
            Ok(entry(free_group(s)?, None, "free group"))
        }
        "handlebody" if arg == "0_1" => Ok(entry(
            free_group(2)?.with_name("handlebody:0_1"),
            None,
            "trivial genus-2 handlebody-knot, free group of rank 2",
        )),
        "yoshikawa" => {
            let link = surface_link(arg)?;
            let z2 = RingSpec::univariate(0, "t", 2)?;
            let alpha = AbelianMap::uniform(&link.presentation, vec![1], &z2)?;
            Ok(entry(link.presentation, Some(alpha), "surface-link group"))
        }
        _ => Err(Error::UnknownCatalogKey(key.to_string())),
    }
}

/// Parses an abelianization spec such as `x1=t,x2=t,x3=t^-2@t^inf`,
/// `x=x,y=y@x^inf,y^2` or `*=t@t^2`. `*` sets every generator not listed.
/// The target ring gets coefficient modulus `modulus`.
pub fn parse_alpha(pres: &Presentation, text: &str, modulus: u64) -> Result<AbelianMap> {
    let (assign, target) = text
        .split_once('@')
        .ok_or_else(|| Error::Parse(format!("alpha spec {text:?} needs '@<target>'")))?;
    let mut vars = Vec::new();
    for part in target.split(',').map(str::trim) {
        let (name, order) = match part.split_once('^') {
            None => (part, 0),
            Some((name, "inf")) => (name, 0),
            Some((name, k)) => (
                name,
                k.trim()
                    .parse::<u64>()
                    .map_err(|_| Error::Parse(format!("bad variable order in {part:?}")))?,
            ),
        };
        if name.is_empty() {
            return Err(Error::Parse(format!("empty target variable in {text:?}")));
        }
        vars.push(Variable::new(name.trim(), order));
    }
    let spec = RingSpec::new(modulus, vars)?;
    let parse_spec = spec.with_modulus(0)?;
    let mut images: Vec<Option<Vec<i64>>> = vec![None; pres.generator_count()];
    let mut default: Option<Vec<i64>> = None;
    for part in assign.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (gen, value) = part
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("expected <gen>=<monomial>, got {part:?}")))?;
        let e = parse_element(&parse_spec, value.trim())?;
        if !e.is_unit_monomial() || e.terms().next().map(|(_, c)| c) != Some(1) {
            return Err(Error::Parse(format!("image {value:?} is not a monomial")));
        }
        let exps = e.terms().next().unwrap().0 .0.clone();
        let gen = gen.trim();
        if gen == "*" {
            default = Some(exps);
            continue;
        }
        let idx = pres
            .generator_index(gen)
            .ok_or_else(|| Error::UnknownGenerator(gen.to_string()))?;
        images[idx] = Some(exps);
    }
    let images = images
        .into_iter()
        .enumerate()
        .map(|(i, v)| {
            v.or_else(|| default.clone()).ok_or_else(|| {
                Error::Parse(format!(
                    "no image given for generator {}",
                    pres.generators()[i]
                ))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    AbelianMap::new(pres, images, &spec)
}
