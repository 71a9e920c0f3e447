//! Acceptance suite: one PASS/FAIL line per criterion.

use std::collections::HashMap;
use std::process::ExitCode;
use std::time::Instant;

use foxcalc_core::catalog::{free_group, surface_link, surface_link_ids, theta, theta_wirtinger};
use foxcalc_core::ideal::IdealEquality;
use foxcalc_core::invariants::{
    alexander_matrix, alexander_polynomial, elementary_ideal, elementary_ideals,
    handlebody_invariant, surfacelink_invariant, twisted_matrix, InvariantTable,
};
use foxcalc_core::maps::{
    conjugacy_classes, enumerate_epis, enumerate_homs, lemma36_rho, MatrixGroup, MatrixRep,
};
use foxcalc_core::presentation::{Letter, Presentation, Word};
use foxcalc_core::ring::{parse_element, parse_generators, RingElement, RingMatrix, RingSpec};
use foxcalc_core::verify::{
    verify_theta_cyclic, verify_theta_ideals, verify_theta_representation, verify_theta_twisted,
};
use foxcalc_core::{fox_derive, AbelianMap, GroupRingElement, Ideal};
use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const CASES: usize = 1000;

/// Criteria whose stated target contradicts an independent computation: (criterion, exact
/// failure detail, reason). They still print FAIL; any other failure detail fails the run.
const KNOWN_UNREACHABLE: &[(u32, &str, &str)] = &[
    (
        5,
        "10_3: computed {(0,1)_2,(0,0,1+t,1)_1}, expected {(0,1)_4}",
        "x1^3 must commute with x2, which rules out pairs of distinct involutions; \
         the group has 6 homomorphisms in 3 classes, so no 4-row table exists",
    ),
    (
        8,
        "8_1: 1 epis (brute force 1), expected 3",
        "the 8_1 relator has exponent sums (1,-1), so only x,y -> 1 survives mod 2",
    ),
];

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn report_outcome(r: foxcalc_core::verify::Report) -> Outcome {
    let total = r.checks.len();
    match r.failures().next() {
        None => Ok(format!("{total} checks")),
        Some(c) => Err(format!(
            "{}: expected {}, computed {}",
            c.label, c.expected, c.computed
        )),
    }
}

fn criterion_1() -> Outcome {
    report_outcome(verify_theta_ideals(3..=24).map_err(err)?)
}

fn criterion_2() -> Outcome {
    report_outcome(verify_theta_cyclic(3..=12).map_err(err)?)
}

fn criterion_3() -> Outcome {
    report_outcome(verify_theta_twisted([5, 7, 11, 13]).map_err(err)?)
}

fn criterion_4() -> Outcome {
    let ns: Vec<usize> = (5..=35).filter(|n| n % 6 == 1 || n % 6 == 5).collect();
    report_outcome(verify_theta_representation(ns).map_err(err)?)
}

fn criterion_5() -> Outcome {
    let ids = surface_link_ids();
    let mut mismatches = Vec::new();
    for id in &ids {
        let link = surface_link(id).map_err(err)?;
        let computed = surfacelink_invariant(&link.presentation, 2, 2).map_err(err)?;
        let golden: InvariantTable = link.invariant.parse().map_err(err)?;
        if computed.canonical().rows != golden.canonical().rows {
            mismatches.push(format!(
                "{id}: computed {computed}, expected {}",
                link.invariant
            ));
        } else if computed.to_string() != link.invariant {
            mismatches.push(format!(
                "{id}: row order {computed} differs from {}",
                link.invariant
            ));
        }
    }
    let a = surfacelink_invariant(&surface_link("9_1^1,-2").unwrap().presentation, 2, 2)
        .map_err(err)?;
    let b = surfacelink_invariant(&surface_link("8_1^-1,-1").unwrap().presentation, 2, 2)
        .map_err(err)?;
    if a == b {
        mismatches.push("9_1^1,-2 and 8_1^-1,-1 coincide".into());
    }
    if mismatches.is_empty() {
        Ok(format!("{} tables", ids.len()))
    } else {
        Err(mismatches.join("; "))
    }
}

fn reference_ideal(spec: &RingSpec, text: &str) -> Result<Ideal, String> {
    Ideal::generated(spec, parse_generators(spec, text).map_err(err)?).map_err(err)
}

fn criterion_6() -> Outcome {
    let mut exact = 0;
    let mut polys = 0;
    let mut probed = 0;
    for id in surface_link_ids() {
        let link = surface_link(id).map_err(err)?;
        let alpha = &link.abelianizer;
        let spec = alpha.target();
        let m = alexander_matrix(&link.presentation, alpha).map_err(err)?;
        let e1 = elementary_ideal(&m, 1).map_err(err)?;
        let reference = reference_ideal(spec, link.ideal)?;
        let eq = e1.equals(&reference).map_err(err)?;
        if spec.nvars() == 1 {
            // (a) exact equality over a univariate ring
            ensure(eq == IdealEquality::Equal, || {
                format!("{id}: E_1 = {e1}, expected {}", link.ideal)
            })?;
            exact += 1;
        } else {
            // (c) probing agrees with the reference ideal and separates a perturbed one
            ensure(!eq.is_unequal(), || {
                format!("{id}: E_1 = {e1} separated from {} ({eq:?})", link.ideal)
            })?;
            let mut gens = reference.generators().to_vec();
            gens.push(RingElement::constant(spec, 3));
            let mutated = Ideal::generated(spec, gens).map_err(err)?;
            let verdict = e1.equals(&mutated).map_err(err)?;
            ensure(verdict.is_unequal(), || {
                format!("{id}: mutation not detected ({verdict:?})")
            })?;
            probed += 1;
        }
        // (b) polynomial column, wherever every abelianizer variable has infinite order
        if spec.is_laurent() {
            let got = alexander_polynomial(&link.presentation, alpha).map_err(err)?;
            let want = parse_element(spec, link.polynomial).map_err(err)?;
            ensure(got.unit_normalized() == want.unit_normalized(), || {
                format!("{id}: polynomial {got}, expected {}", link.polynomial)
            })?;
            polys += 1;
        }
    }
    Ok(format!(
        "{exact} exact ideals, {polys} polynomials, {probed} probed ideals"
    ))
}

fn criterion_7() -> Outcome {
    let t = handlebody_invariant(&free_group(2).map_err(err)?, 2, 2, 4).map_err(err)?;
    ensure(t.to_string() == "{(1,1,1)_11}", || format!("got {t}"))?;
    Ok(t.to_string())
}

fn brute_force_homs(pres: &Presentation, group: MatrixGroup) -> Vec<MatrixRep> {
    let elems = group.elements().unwrap();
    (0..pres.generator_count())
        .map(|_| elems.iter().cloned())
        .multi_cartesian_product()
        .filter_map(|images| MatrixRep::new(pres, group, images).ok())
        .collect()
}

fn brute_force_classes(homs: &[MatrixRep], group: MatrixGroup) -> usize {
    let elems = group.elements().unwrap();
    let mut seen: Vec<Vec<_>> = Vec::new();
    let mut classes = 0;
    for h in homs {
        if seen.iter().any(|s| s.as_slice() == h.images()) {
            continue;
        }
        classes += 1;
        for b in &elems {
            let c = h.conjugate_by(b).images().to_vec();
            if !seen.contains(&c) {
                seen.push(c);
            }
        }
    }
    classes
}

fn brute_force_epis(pres: &Presentation) -> usize {
    let s = pres.generator_count();
    (1u32..1 << s)
        .filter(|mask| {
            pres.relators().iter().all(|r| {
                let sum: i64 = r
                    .letters()
                    .iter()
                    .filter(|l| mask >> l.gen & 1 == 1)
                    .map(|l| l.exp)
                    .sum();
                sum % 2 == 0
            })
        })
        .count()
}

fn criterion_8() -> Outcome {
    let g = MatrixGroup::sl(2, 2);
    let cases = [
        ("F2", free_group(2).unwrap(), 36, 11, 3),
        (
            "<x|x^2>",
            Presentation::from_strs(&["x"], &["x^2"]).unwrap(),
            4,
            2,
            1,
        ),
        (
            "8_1",
            Presentation::from_strs(&["x", "y"], &["x y x y^-1 x^-1 y^-1"]).unwrap(),
            12,
            4,
            3,
        ),
    ];
    let mut problems = Vec::new();
    for (name, pres, homs, classes, epis) in cases {
        let h = enumerate_homs(&pres, g).map_err(err)?;
        let c = conjugacy_classes(&h, g).map_err(err)?;
        let bf = brute_force_homs(&pres, g);
        let bf_classes = brute_force_classes(&bf, g);
        ensure(h.len() == bf.len() && c.len() == bf_classes, || {
            format!(
                "{name}: enumeration {}/{} vs brute force {}/{}",
                h.len(),
                c.len(),
                bf.len(),
                bf_classes
            )
        })?;
        ensure(h.len() == homs && c.len() == classes, || {
            format!(
                "{name}: {}/{} homs/classes, expected {homs}/{classes}",
                h.len(),
                c.len()
            )
        })?;
        let e = enumerate_epis(&pres, 2).map_err(err)?.len();
        let oracle = brute_force_epis(&pres);
        ensure(e == oracle, || {
            format!("{name}: {e} epis vs brute force {oracle}")
        })?;
        if e != epis {
            problems.push(format!(
                "{name}: {e} epis (brute force {oracle}), expected {epis}"
            ));
        }
    }
    if g.order() != 6 {
        problems.push("SL(2;Z2) does not have order 6".into());
    }
    if problems.is_empty() {
        Ok("hom, class and epi counts".into())
    } else {
        Err(problems.join("; "))
    }
}

fn random_word(rng: &mut ChaCha8Rng, gens: usize, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    Word::from_letters((0..len).map(|_| {
        let exp = rng.gen_range(1..=3) * if rng.gen_bool(0.5) { 1 } else { -1 };
        Letter {
            gen: rng.gen_range(0..gens),
            exp,
        }
    }))
}

fn fox_identity(rng: &mut ChaCha8Rng) -> Result<(), String> {
    for case in 0..CASES {
        let s = rng.gen_range(1..=4);
        let w = random_word(rng, s, 12);
        let mut lhs = GroupRingElement::zero();
        for i in 0..s {
            let d = fox_derive(&w, i, s).map_err(err)?;
            let xi = &GroupRingElement::from_word(Word::generator(i)) - &GroupRingElement::one();
            lhs = &lhs + &(&d * &xi);
        }
        let rhs = &GroupRingElement::from_word(w.clone()) - &GroupRingElement::one();
        ensure(lhs == rhs, || format!("fox identity, case {case}"))?;
    }
    Ok(())
}

fn random_element(rng: &mut ChaCha8Rng, spec: &RingSpec) -> RingElement {
    let k = spec
        .vars()
        .first()
        .map_or(1, |v| if v.order > 0 { v.order as i64 } else { 3 });
    let terms = (0..rng.gen_range(0..=2))
        .map(|_| {
            let exps = spec.vars().iter().map(|_| rng.gen_range(0..k)).collect();
            (exps, rng.gen_range(-3..=3))
        })
        .collect::<Vec<_>>();
    RingElement::from_terms(spec, terms)
}

fn random_matrix(rng: &mut ChaCha8Rng, spec: &RingSpec, rows: usize, cols: usize) -> RingMatrix {
    if rows == 0 {
        return RingMatrix::zeros(spec, 0, cols);
    }
    let entries = (0..rows)
        .map(|_| (0..cols).map(|_| random_element(rng, spec)).collect())
        .collect();
    RingMatrix::from_rows(spec, entries).unwrap()
}

/// Permutation-sum determinant, the reference for the cofactor algorithm.
fn leibniz(m: &RingMatrix) -> RingElement {
    let n = m.rows();
    let mut acc = RingElement::zero(m.spec());
    for perm in (0..n).permutations(n) {
        let inversions = (0..n)
            .tuple_combinations()
            .filter(|&(i, j)| perm[i] > perm[j])
            .count();
        let mut term = RingElement::one(m.spec());
        for (i, &p) in perm.iter().enumerate() {
            term = &term * m.get(i, p);
        }
        acc = if inversions % 2 == 0 {
            &acc + &term
        } else {
            &acc - &term
        };
    }
    acc
}

fn determinants(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let specs = [
        RingSpec::univariate(0, "t", 0).unwrap(),
        RingSpec::univariate(3, "t", 4).unwrap(),
        RingSpec::new(
            0,
            vec![
                foxcalc_core::Variable::new("x", 0),
                foxcalc_core::Variable::new("y", 2),
            ],
        )
        .unwrap(),
    ];
    for case in 0..CASES {
        let spec = &specs[case % specs.len()];
        let n = rng.gen_range(1..=5);
        let m = random_matrix(rng, spec, n, n);
        let det = m.det().map_err(err)?;
        ensure(det == leibniz(&m), || format!("determinant of {m}"))?;
    }
    Ok(())
}

fn ascending_chain(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let specs = [
        RingSpec::univariate(2, "t", 2).unwrap(),
        RingSpec::univariate(3, "t", 3).unwrap(),
        RingSpec::univariate(0, "t", 0).unwrap(),
        RingSpec::univariate(5, "t", 0).unwrap(),
    ];
    for case in 0..CASES {
        let spec = &specs[case % specs.len()];
        let rows = rng.gen_range(0..=3);
        let cols = rng.gen_range(1..=4);
        let m = random_matrix(rng, spec, rows, cols);
        let d = rng.gen_range(0..cols);
        let pair = elementary_ideals(&m, [d, d + 1]).map_err(err)?;
        let contained = pair[1].contains_ideal(&pair[0]).map_err(err)?;
        ensure(contained, || {
            format!("E_{d} not inside E_{} for {m}", d + 1)
        })?;
    }
    Ok(())
}

fn presentation_invariance(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let laurent = RingSpec::univariate(0, "t", 0).unwrap();
    let mut cache: HashMap<(usize, Vec<i64>), (RingMatrix, RingMatrix)> = HashMap::new();
    for case in 0..CASES {
        let n = 3 + case % 5;
        // any images with zero sum kill the theta relator; y_i and z_i follow x_i
        let mut images: Vec<i64> = (0..n - 1).map(|_| rng.gen_range(-2..=2)).collect();
        images.push(-images.iter().sum::<i64>());
        let (a, b) = cache
            .entry((n, images.clone()))
            .or_insert_with(|| {
                let one = theta(n).unwrap();
                let wirt = theta_wirtinger(n).unwrap();
                let x: Vec<Vec<i64>> = images.iter().map(|&e| vec![e]).collect();
                let alpha = AbelianMap::new(&one, x.clone(), &laurent).unwrap();
                let beta = AbelianMap::new(
                    &wirt,
                    x.iter().chain(&x).chain(&x).cloned().collect(),
                    &laurent,
                )
                .unwrap();
                (
                    alexander_matrix(&one, &alpha).unwrap(),
                    alexander_matrix(&wirt, &beta).unwrap(),
                )
            })
            .clone();
        let d = rng.gen_range(0..=n + 1);
        let (x, y) = (
            elementary_ideal(&a, d).map_err(err)?,
            elementary_ideal(&b, d).map_err(err)?,
        );
        let eq = x.equals(&y).map_err(err)?;
        ensure(eq == IdealEquality::Equal, || {
            format!("n={n} images={images:?} d={d}: {x} vs {y}")
        })?;
    }
    Ok(())
}

fn conjugation_invariance(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let g = MatrixGroup::sl(2, 2);
    let conjugators = g.elements().map_err(err)?;
    let z2 = RingSpec::univariate(2, "t", 2).unwrap();
    let mut pool: Vec<(Presentation, AbelianMap, Vec<MatrixRep>)> = Vec::new();
    for id in surface_link_ids() {
        let pres = surface_link(id).map_err(err)?.presentation;
        let alpha = AbelianMap::uniform(&pres, vec![1], &z2).map_err(err)?;
        let homs = enumerate_homs(&pres, g).map_err(err)?;
        pool.push((pres, alpha, homs));
    }
    for n in [5, 7] {
        let pres = theta(n).map_err(err)?;
        let alpha = foxcalc_core::catalog::theta_alpha(n)
            .map_err(err)?
            .with_modulus(2)
            .map_err(err)?;
        pool.push((pres, alpha, vec![lemma36_rho(n).map_err(err)?]));
    }
    for case in 0..CASES {
        let (pres, alpha, homs) = &pool[rng.gen_range(0..pool.len())];
        let rho = &homs[rng.gen_range(0..homs.len())];
        let b = &conjugators[rng.gen_range(0..conjugators.len())];
        let conj = rho.conjugate_by(b);
        let ns = 2 * pres.generator_count();
        let d = rng.gen_range(0..=ns);
        let x =
            elementary_ideal(&twisted_matrix(pres, alpha, rho).map_err(err)?, d).map_err(err)?;
        let y =
            elementary_ideal(&twisted_matrix(pres, alpha, &conj).map_err(err)?, d).map_err(err)?;
        let eq = x.equals(&y).map_err(err)?;
        ensure(eq == IdealEquality::Equal, || {
            format!("case {case}: d={d}: {x} vs {y}")
        })?;
    }
    Ok(())
}

type Suite = fn(&mut ChaCha8Rng) -> Result<(), String>;

fn criterion_9() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let suites: [(&str, Suite); 5] = [
        ("fox identity", fox_identity),
        ("determinant", determinants),
        ("ascending chain", ascending_chain),
        ("presentation invariance", presentation_invariance),
        ("conjugation invariance", conjugation_invariance),
    ];
    let mut timings = Vec::new();
    for (name, suite) in suites {
        let t = Instant::now();
        suite(&mut rng).map_err(|e| format!("{name}: {e}"))?;
        timings.push(format!("{name} {:.2}s", t.elapsed().as_secs_f64()));
    }
    Ok(format!("{CASES} cases each: {}", timings.join(", ")))
}

type Criterion = fn() -> Outcome;

fn main() -> ExitCode {
    let criteria: [(u32, &str, Criterion); 9] = [
        (1, "theta elementary ideals, n = 3..24", criterion_1),
        (2, "theta ideals over Z[t]/(t^n-1), n = 3..12", criterion_2),
        (3, "theta twisted ideals, n = 5, 7, 11, 13", criterion_3),
        (4, "theta SL(2;Z2) representation, n <= 35", criterion_4),
        (5, "surface-link tables, 23 groups", criterion_5),
        (6, "surface-link ideals and polynomials", criterion_6),
        (7, "rank-two free group handlebody table", criterion_7),
        (8, "enumeration counts against brute force", criterion_8),
        (9, "seeded property suites", criterion_9),
    ];
    let start = Instant::now();
    let mut hard_failures = 0;
    for (id, title, run) in criteria {
        let t = Instant::now();
        let outcome = run();
        let secs = t.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {id}: {title} ({detail}) [{secs:.2}s]"),
            Err(detail) => {
                let known = KNOWN_UNREACHABLE
                    .iter()
                    .find(|(k, d, _)| *k == id && *d == detail);
                println!("FAIL {id}: {title}: {detail} [{secs:.2}s]");
                match known {
                    Some((_, _, why)) => println!("     unreachable target: {why}"),
                    None => hard_failures += 1,
                }
            }
        }
    }
    println!("total {:.2}s", start.elapsed().as_secs_f64());
    if hard_failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
