//! The acceptance suite: nine oracle- and property-based criteria anchored
//! on the worked non-polar instance, exhaustive enumeration at desk scale,
//! and cross-checks between independent code paths.
//!
//! Criterion 8 contains a mutation-sensitivity clause that is mathematically
//! unattainable as stated: perturbing the braiding entry c(1,1) of the
//! non-polar built-in from 1 to 3 yields another *valid* abelian 3-cocycle
//! (it is the built-in plus the valid symmetric cocycle with c(1,1) = 2),
//! so no coherence check can reject it. The suite reports that escaped
//! mutant honestly instead of weakening the check.

use crate::abgroup::{Element, FgAbGroup};
use crate::cocycle::{
    classify, cohomologous, enumerate_cocycles, find_coboundary_witness, AbelianCocycle3,
    CTable, CoboundaryWitness, HTable, DEFAULT_BOX,
};
use crate::forms::{
    diag_form, phi, psi, validate_quadratic_table, BilinearForm, Mod2Map, QuadraticForm,
};
use crate::model::{example_koszul, example_nonpolar, SkeletalModel};
use crate::strictify::{can_strictify, polar_cover, strictify_cocycle};
use std::collections::BTreeMap;

const GUARD: u128 = 10_000_000;

#[derive(Debug, Clone)]
pub struct CriterionOutcome {
    pub id: usize,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

type Criterion = fn() -> Result<String, String>;

pub fn run_all() -> Vec<CriterionOutcome> {
    let criteria: [(&'static str, Criterion); 9] = [
        ("worked example reproduction", criterion_1),
        ("trace bijectivity at desk scale", criterion_2),
        ("strictification round trip", criterion_3),
        ("strictifiability iff polar", criterion_4),
        ("cocycle lemma property suite", criterion_5),
        ("exact-row diagram", criterion_6),
        ("polar cover of the worked example", criterion_7),
        ("coherence checker and mutation sensitivity", criterion_8),
        ("class-comparison oracle agreement", criterion_9),
    ];
    criteria
        .iter()
        .enumerate()
        .map(|(i, (name, f))| match f() {
            Ok(detail) => CriterionOutcome {
                id: i + 1,
                name,
                passed: true,
                detail,
            },
            Err(detail) => CriterionOutcome {
                id: i + 1,
                name,
                passed: false,
                detail,
            },
        })
        .collect()
}

fn g(orders: &[u64]) -> FgAbGroup {
    FgAbGroup::new(orders.to_vec()).unwrap()
}

fn e(coeffs: &[i64]) -> Element {
    Element::new(coeffs.to_vec())
}

/// The canonical table cocycle realizing a given quadratic form as its
/// trace on a finite group:
///
/// ```text
/// h(x,y,z) = sum_i q_i * x_i * n_i * floor((y_i + z_i) / n_i)
/// c(x,y)   = sum_i q_i * x_i * y_i  +  sum_{i<j} b_ij * x_i * y_j
/// ```
///
/// with reduced coefficients. Each summand is a valid abelian 3-cocycle
/// (the well-definedness congruences of `q` are exactly what the hexagon
/// identities consume), and validity of the sum is re-verified exhaustively
/// by the criteria that use this construction.
fn standard_cocycle(q: &QuadraticForm) -> Result<AbelianCocycle3, String> {
    let grp = q.source().clone();
    let m = q.target().clone();
    let nz: Vec<Element> = grp
        .enumerate()
        .map_err(|e| e.to_string())?
        .filter(|x| !grp.is_zero(x))
        .collect();
    let h_of = |x: &Element, y: &Element, z: &Element| -> Element {
        let mut acc = m.zero();
        for (i, &n) in grp.orders().iter().enumerate() {
            let carry = (y.coeffs()[i] + z.coeffs()[i]) / n as i64;
            let factor = x.coeffs()[i] as i128 * n as i128 * carry as i128;
            acc = m.add(&acc, &m.scale(factor, &q.diag()[i]));
        }
        acc
    };
    let c_of = |x: &Element, y: &Element| -> Element {
        let mut acc = m.zero();
        for i in 0..grp.rank() {
            let factor = x.coeffs()[i] as i128 * y.coeffs()[i] as i128;
            acc = m.add(&acc, &m.scale(factor, &q.diag()[i]));
        }
        for (&(i, j), b) in q.offdiag() {
            let factor = x.coeffs()[i] as i128 * y.coeffs()[j] as i128;
            acc = m.add(&acc, &m.scale(factor, b));
        }
        acc
    };
    let mut h = HTable::new();
    for x in &nz {
        for y in &nz {
            for z in &nz {
                h.insert((x.clone(), y.clone(), z.clone()), h_of(x, y, z));
            }
        }
    }
    let mut c = CTable::new();
    for x in &nz {
        for y in &nz {
            c.insert((x.clone(), y.clone()), c_of(x, y));
        }
    }
    AbelianCocycle3::from_tables(grp, m, h, c).map_err(|e| e.to_string())
}

/// All well-defined quadratic forms `G -> M` on a finite pair.
fn all_quadratic_forms(grp: &FgAbGroup, m: &FgAbGroup) -> Vec<QuadraticForm> {
    let m_elems: Vec<Element> = m.enumerate().unwrap().collect();
    let r = grp.rank();
    let diag_domain = |n: u64| -> Vec<Element> {
        m_elems
            .iter()
            .filter(|v| {
                n == 0
                    || (m.is_zero(&m.scale(2 * n as i128, v))
                        && m.is_zero(&m.scale((n as i128) * (n as i128), v)))
            })
            .cloned()
            .collect()
    };
    let off_domain = |ni: u64, nj: u64| -> Vec<Element> {
        m_elems
            .iter()
            .filter(|v| {
                (ni == 0 || m.is_zero(&m.scale(ni as i128, v)))
                    && (nj == 0 || m.is_zero(&m.scale(nj as i128, v)))
            })
            .cloned()
            .collect()
    };
    let mut domains: Vec<Vec<Element>> = grp.orders().iter().map(|&n| diag_domain(n)).collect();
    let mut off_keys = Vec::new();
    for i in 0..r {
        for j in (i + 1)..r {
            off_keys.push((i, j));
            domains.push(off_domain(grp.orders()[i], grp.orders()[j]));
        }
    }
    let mut forms = Vec::new();
    let mut idx = vec![0usize; domains.len()];
    loop {
        let diag: Vec<Element> = (0..r).map(|i| domains[i][idx[i]].clone()).collect();
        let mut offdiag = BTreeMap::new();
        for (k, &(i, j)) in off_keys.iter().enumerate() {
            offdiag.insert((i, j), domains[r + k][idx[r + k]].clone());
        }
        forms.push(
            QuadraticForm::new(grp.clone(), m.clone(), diag, offdiag)
                .expect("domains enforce the congruences"),
        );
        let mut done = true;
        for k in (0..idx.len()).rev() {
            idx[k] += 1;
            if idx[k] < domains[k].len() {
                done = false;
                break;
            }
            idx[k] = 0;
        }
        if done {
            return forms;
        }
    }
}

/// All well-defined bilinear forms `G x G -> M` on a finite pair.
fn all_bilinear_forms(grp: &FgAbGroup, m: &FgAbGroup) -> Vec<BilinearForm> {
    let m_elems: Vec<Element> = m.enumerate().unwrap().collect();
    let r = grp.rank();
    let mut domains = Vec::new();
    for i in 0..r {
        for j in 0..r {
            let (ni, nj) = (grp.orders()[i], grp.orders()[j]);
            domains.push(
                m_elems
                    .iter()
                    .filter(|v| {
                        (ni == 0 || m.is_zero(&m.scale(ni as i128, v)))
                            && (nj == 0 || m.is_zero(&m.scale(nj as i128, v)))
                    })
                    .cloned()
                    .collect::<Vec<_>>(),
            );
        }
    }
    let mut forms = Vec::new();
    let mut idx = vec![0usize; domains.len()];
    loop {
        let matrix: Vec<Vec<Element>> = (0..r)
            .map(|i| (0..r).map(|j| domains[i * r + j][idx[i * r + j]].clone()).collect())
            .collect();
        forms.push(
            BilinearForm::new(grp.clone(), m.clone(), matrix)
                .expect("domains enforce the congruences"),
        );
        let mut done = true;
        for k in (0..idx.len()).rev() {
            idx[k] += 1;
            if idx[k] < domains[k].len() {
                done = false;
                break;
            }
            idx[k] = 0;
        }
        if done {
            return forms;
        }
    }
}

fn corpus_pairs() -> Vec<(FgAbGroup, FgAbGroup)> {
    let groups = [g(&[2]), g(&[3]), g(&[4]), g(&[2, 2])];
    let coeffs = [g(&[2]), g(&[4]), g(&[2, 2])];
    let mut pairs = Vec::new();
    for grp in &groups {
        for m in &coeffs {
            pairs.push((grp.clone(), m.clone()));
        }
    }
    pairs
}

fn check(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

// ---------------------------------------------------------------------------

fn criterion_1() -> Result<String, String> {
    let kappa = example_nonpolar();
    let report = kappa.validate(DEFAULT_BOX);
    check(report.is_valid(), format!("built-in failed validation: {report}"))?;
    check(report.exhaustive, "validation was not exhaustive")?;

    let table = kappa.trace_table().map_err(|e| e.to_string())?;
    check(
        table[&e(&[0])] == e(&[0]) && table[&e(&[1])] == e(&[1]),
        format!("trace table is {table:?}, expected {{0:0, 1:1}}"),
    )?;

    let q = kappa.trace_form().map_err(|e| e.to_string())?;
    check(q.is_polar().is_none(), "decision procedure called the trace polar")?;
    check(
        !q.brute_force_is_polar(GUARD).map_err(|e| e.to_string())?,
        "brute-force oracle called the trace polar",
    )?;
    Ok("cocycle valid, trace x^2, non-polar by both deciders".to_string())
}

fn criterion_2() -> Result<String, String> {
    let cases = [(g(&[2]), g(&[2]), 2usize), (g(&[2]), g(&[4]), 4usize)];
    let mut summary = Vec::new();
    for (grp, m, expected) in cases {
        let cls = classify(&grp, &m, GUARD).map_err(|e| e.to_string())?;
        check(
            cls.distinct_traces() == expected,
            format!(
                "{:?}->{:?}: {} distinct traces, expected {expected}",
                grp.orders(),
                m.orders(),
                cls.distinct_traces()
            ),
        )?;
        check(
            cls.quadratic_tables.len() == expected,
            format!(
                "{:?}->{:?}: {} quadratic tables, expected {expected}",
                grp.orders(),
                m.orders(),
                cls.quadratic_tables.len()
            ),
        )?;
        check(
            cls.is_surjective(),
            format!("{:?}->{:?}: some quadratic table is not a trace", grp.orders(), m.orders()),
        )?;
        // injectivity: witnesses exist within a class, never across classes
        let class_of: Vec<usize> = {
            let mut assignment = vec![0usize; cls.cocycles.len()];
            for (c, members) in cls.classes.values().enumerate() {
                for &i in members {
                    assignment[i] = c;
                }
            }
            assignment
        };
        for i in 0..cls.cocycles.len() {
            for j in 0..cls.cocycles.len() {
                let witness =
                    find_coboundary_witness(&cls.cocycles[i], &cls.cocycles[j], GUARD)
                        .map_err(|e| e.to_string())?;
                let same_class = class_of[i] == class_of[j];
                check(
                    witness.is_some() == same_class,
                    format!(
                        "{:?}->{:?}: cocycles {i},{j} same_class={same_class} but witness present={}",
                        grp.orders(),
                        m.orders(),
                        witness.is_some()
                    ),
                )?;
            }
        }
        summary.push(format!(
            "{:?}->{:?}: {} cocycles in {expected} classes",
            grp.orders(),
            m.orders(),
            cls.cocycles.len()
        ));
    }
    Ok(summary.join("; "))
}

fn criterion_3() -> Result<String, String> {
    let mut polar_count = 0usize;
    for (grp, m) in corpus_pairs() {
        for q in all_quadratic_forms(&grp, &m) {
            let Some(t) = q.is_polar() else { continue };
            polar_count += 1;
            let strict = strictify_cocycle(&q, &t).map_err(|e| e.to_string())?;
            let elems: Vec<Element> = grp.enumerate().map_err(|e| e.to_string())?.collect();
            for x in &elems {
                for y in &elems {
                    for z in &elems {
                        check(
                            m.is_zero(&strict.h(x, y, z)),
                            format!("strictified h is nonzero at {:?}", (x, y, z)),
                        )?;
                    }
                }
            }
            let report = strict.validate(DEFAULT_BOX);
            check(
                report.exhaustive && report.is_valid(),
                format!("strictified cocycle invalid: {report}"),
            )?;
            for x in &elems {
                check(
                    strict.c(x, x) == q.eval(x),
                    format!(
                        "trace mismatch at {:?} on {:?}->{:?}",
                        x.coeffs(),
                        grp.orders(),
                        m.orders()
                    ),
                )?;
            }
        }
    }
    Ok(format!("{polar_count} polar forms strictified and round-tripped"))
}

fn criterion_4() -> Result<String, String> {
    let mut total = 0usize;
    let mut polar = 0usize;
    for (grp, m) in corpus_pairs() {
        for q in all_quadratic_forms(&grp, &m) {
            total += 1;
            let kappa = standard_cocycle(&q)?;
            let report = kappa.validate(DEFAULT_BOX);
            check(
                report.is_valid(),
                format!(
                    "standard cocycle of q on {:?}->{:?} invalid: {report}",
                    grp.orders(),
                    m.orders()
                ),
            )?;
            // its trace must be q itself for the decision to be about q
            for x in grp.enumerate().map_err(|e| e.to_string())? {
                check(
                    kappa.c(&x, &x) == q.eval(&x),
                    "standard cocycle trace differs from q",
                )?;
            }
            let decision = can_strictify(&kappa).map_err(|e| e.to_string())?;
            let oracle = q.brute_force_is_polar(GUARD).map_err(|e| e.to_string())?;
            check(
                decision.polar == oracle,
                format!(
                    "can_strictify={} but brute-force polarity={} on {:?}->{:?} q={:?}",
                    decision.polar,
                    oracle,
                    grp.orders(),
                    m.orders(),
                    q.diag()
                ),
            )?;
            if oracle {
                polar += 1;
            }
        }
    }
    Ok(format!("{total} forms checked, {polar} polar, decision matches the oracle"))
}

fn criterion_5() -> Result<String, String> {
    let cases = [(g(&[2]), g(&[2])), (g(&[2]), g(&[4]))];
    let mut counted = 0usize;
    for (grp, m) in &cases {
        let cocycles = enumerate_cocycles(grp, m, GUARD).map_err(|e| e.to_string())?;
        counted += cocycles.len();
        let elems: Vec<Element> = grp.enumerate().map_err(|e| e.to_string())?.collect();
        for kappa in &cocycles {
            // alternating sum over S3 vanishes
            for x in &elems {
                for y in &elems {
                    for z in &elems {
                        let mut acc = m.zero();
                        for (a, b, c) in [(x, y, z), (y, z, x), (z, x, y)] {
                            acc = m.add(&acc, &kappa.h(a, b, c));
                        }
                        for (a, b, c) in [(y, x, z), (x, z, y), (z, y, x)] {
                            acc = m.sub(&acc, &kappa.h(a, b, c));
                        }
                        check(m.is_zero(&acc), "alternating sum nonzero")?;
                    }
                }
            }
            // W is bilinear (w_form cross-checks pointwise) and symmetric
            let w = kappa.w_form().map_err(|e| e.to_string())?;
            check(
                w.matrix() == w.transpose().matrix(),
                "W matrix not symmetric",
            )?;
            // c(y+z,y+z) - c(y,y) - c(z,z) = W(y,z)
            for y in &elems {
                for z in &elems {
                    let s = grp.add(y, z);
                    let lhs = m.sub(&m.sub(&kappa.c(&s, &s), &kappa.c(y, y)), &kappa.c(z, z));
                    check(lhs == w.eval(y, z), "trace polarization identity fails")?;
                }
            }
            // the trace is a quadratic table
            let table = kappa.trace_table().map_err(|e| e.to_string())?;
            check(
                validate_quadratic_table(grp, m, &table).map_err(|e| e.to_string())?,
                "trace fails the quadratic characterization",
            )?;
        }
        // every coboundary is symmetric with zero trace
        let key = (grp.generator(0), grp.generator(0));
        for v in m.enumerate().map_err(|e| e.to_string())? {
            let mut table = CTable::new();
            if !m.is_zero(&v) {
                table.insert(key.clone(), v);
            }
            let k = CoboundaryWitness::new(grp.clone(), m.clone(), table)
                .map_err(|e| e.to_string())?;
            let kappa = k.coboundary().map_err(|e| e.to_string())?;
            check(kappa.validate(DEFAULT_BOX).is_valid(), "coboundary invalid")?;
            check(kappa.is_symmetric(DEFAULT_BOX), "coboundary not symmetric")?;
            for (_, v) in kappa.trace_table().map_err(|e| e.to_string())? {
                check(m.is_zero(&v), "coboundary trace nonzero")?;
            }
        }
    }
    Ok(format!("all lemma identities hold on {counted} enumerated cocycles"))
}

fn criterion_6() -> Result<String, String> {
    let mut kernel_hits = 0usize;
    for (grp, m) in corpus_pairs() {
        let basis = grp.mod2_basis();
        let two_torsion = m.torsion_elements(2);
        // phi . psi = 0 and psi injectivity on basis values
        let mut f_values_space = vec![vec![]];
        for _ in 0..basis.dim() {
            let mut next = Vec::new();
            for prefix in &f_values_space {
                for v in &two_torsion {
                    let mut p: Vec<Element> = prefix.clone();
                    p.push(v.clone());
                    next.push(p);
                }
            }
            f_values_space = next;
        }
        for values in &f_values_space {
            let f = Mod2Map::new(&grp, m.clone(), values.clone()).map_err(|e| e.to_string())?;
            let q = psi(&f);
            let zero = BilinearForm::zero(grp.clone(), m.clone());
            check(phi(&q) == zero, "phi of a psi-image is nonzero")?;
        }
        // ker(phi) = im(psi), constructively
        for q in all_quadratic_forms(&grp, &m) {
            if phi(&q) != BilinearForm::zero(grp.clone(), m.clone()) {
                continue;
            }
            kernel_hits += 1;
            let values: Vec<Element> = basis
                .basis_indices()
                .iter()
                .map(|&i| q.diag()[i].clone())
                .collect();
            let f = Mod2Map::new(&grp, m.clone(), values)
                .map_err(|_| "kernel form has a non-2-torsion diagonal value".to_string())?;
            let image = psi(&f);
            for x in grp.enumerate().map_err(|e| e.to_string())? {
                check(
                    image.eval(&x) == q.eval(&x),
                    "psi-preimage does not reconstruct the kernel form",
                )?;
            }
        }
        // sym = phi . diag over every well-defined bilinear form
        for b in all_bilinear_forms(&grp, &m) {
            check(
                phi(&diag_form(&b)) == b.symmetrize(),
                "sym != phi . diag",
            )?;
        }
    }
    Ok(format!(
        "row exact on all corpus pairs; {kernel_hits} kernel forms lifted through psi"
    ))
}

fn criterion_7() -> Result<String, String> {
    let kappa = example_nonpolar();
    let cover = polar_cover(&kappa, GUARD).map_err(|e| e.to_string())?;
    check(
        cover.cover_group.orders() == [0],
        format!("cover group is {:?}, expected Z", cover.cover_group.orders()),
    )?;
    let z4 = g(&[4]);
    check(
        cover.strict_cocycle.coeffs() == &z4,
        "coefficient group changed under the cover",
    )?;
    let q = kappa.trace_form().map_err(|e| e.to_string())?;
    for x in cover.cover_group.sample_box(5) {
        for y in cover.cover_group.sample_box(5) {
            // formula oracle: c''(m,n) = m*n in Z/4
            let expect = (x.coeffs()[0] as i128 * y.coeffs()[0] as i128).rem_euclid(4) as i64;
            check(
                cover.strict_cocycle.c(&x, &y) == e(&[expect]),
                format!("lifted braiding differs from m*n at {:?}", (&x, &y)),
            )?;
        }
        // trace n^2, and pullback equality trace = q . f
        let n = x.coeffs()[0] as i128;
        check(
            cover.strict_cocycle.c(&x, &x) == e(&[(n * n).rem_euclid(4) as i64]),
            "lifted trace differs from n^2",
        )?;
        check(
            cover.strict_cocycle.c(&x, &x) == q.eval(&cover.surjection.apply(&x)),
            "lifted trace does not pull back the base trace",
        )?;
    }
    Ok("cover Z -> Z/2 with braiding mn into Z/4, trace n^2 = q(f(n))".to_string())
}

fn criterion_8() -> Result<String, String> {
    // both built-ins pass every check and signature = trace
    for (name, kappa) in [("nonpolar", example_nonpolar()), ("koszul", example_koszul())] {
        let model = SkeletalModel::build(kappa.clone(), DEFAULT_BOX).map_err(|e| e.to_string())?;
        let report = model.check(DEFAULT_BOX);
        check(report.all_passed(), format!("built-in {name} fails coherence: {report:?}"))?;
        let sig = model.signature_form().map_err(|e| e.to_string())?;
        let trace = kappa.trace_form().map_err(|e| e.to_string())?;
        check(sig == trace, format!("signature != trace on {name}"))?;
    }
    // Koszul signature is parity
    let koszul = SkeletalModel::build(example_koszul(), DEFAULT_BOX).map_err(|e| e.to_string())?;
    for n in -6i64..=6 {
        check(
            koszul.signature(&e(&[n])) == e(&[n.rem_euclid(2)]),
            format!("Koszul signature at {n} is not n mod 2"),
        )?;
    }

    // mutation sensitivity on the finite built-in: perturb each table entry
    // at the all-nonzero tuples to every other value of M
    let base = example_nonpolar();
    let grp = base.group().clone();
    let m = base.coeffs().clone();
    let (h0, c0) = base.to_tables().map_err(|e| e.to_string())?;
    let one = e(&[1]);
    let mut escaped: Vec<String> = Vec::new();
    let mut mutants = 0usize;
    for v in m.enumerate().map_err(|e| e.to_string())? {
        // h(1,1,1): 2 -> v
        if v != h0[&(one.clone(), one.clone(), one.clone())] {
            mutants += 1;
            let mut h = h0.clone();
            h.insert((one.clone(), one.clone(), one.clone()), v.clone());
            let kappa = AbelianCocycle3::from_tables(grp.clone(), m.clone(), h, c0.clone())
                .map_err(|e| e.to_string())?;
            let model = SkeletalModel::build_unchecked(kappa);
            let report = model.check(DEFAULT_BOX);
            if report.all_passed() {
                escaped.push(format!("h(1,1,1) -> {:?}", v.coeffs()));
            }
        }
        // c(1,1): 1 -> v
        if v != c0[&(one.clone(), one.clone())] {
            mutants += 1;
            let mut c = c0.clone();
            c.insert((one.clone(), one.clone()), v.clone());
            let kappa = AbelianCocycle3::from_tables(grp.clone(), m.clone(), h0.clone(), c)
                .map_err(|e| e.to_string())?;
            let model = SkeletalModel::build_unchecked(kappa);
            let report = model.check(DEFAULT_BOX);
            if report.all_passed() {
                escaped.push(format!("c(1,1) -> {:?}", v.coeffs()));
            }
        }
    }
    check(
        escaped.is_empty(),
        format!(
            "{}/{mutants} single-entry mutants escape every coherence check: {}; \
             each escapee is itself a valid abelian 3-cocycle (the built-in plus a \
             valid symmetric cocycle), so rejection by coherence checks alone is \
             mathematically impossible",
            escaped.len(),
            escaped.join(", ")
        ),
    )?;
    Ok(format!("both built-ins coherent; all {mutants} mutants rejected"))
}

fn criterion_9() -> Result<String, String> {
    let cases = [(g(&[2]), g(&[2])), (g(&[2]), g(&[4]))];
    let mut pairs = 0usize;
    for (grp, m) in &cases {
        let cocycles = enumerate_cocycles(grp, m, GUARD).map_err(|e| e.to_string())?;
        for k1 in &cocycles {
            for k2 in &cocycles {
                pairs += 1;
                let fast = cohomologous(k1, k2, DEFAULT_BOX).map_err(|e| e.to_string())?;
                let witness = find_coboundary_witness(k1, k2, GUARD).map_err(|e| e.to_string())?;
                check(
                    fast == witness.is_some(),
                    format!(
                        "trace comparison says {fast} but witness present={} on {:?}->{:?}",
                        witness.is_some(),
                        grp.orders(),
                        m.orders()
                    ),
                )?;
            }
        }
    }
    Ok(format!("fast path and witness oracle agree on all {pairs} pairs"))
}
