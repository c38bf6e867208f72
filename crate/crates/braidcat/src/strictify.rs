//! Explicit strictifying cocycles for polar quadratic forms, the
//! strict-skeletalization decision, and the polar-cover pipeline.
//!
//! Given a polar form `q = t(x,x) + qbar(x)`, the strictifying cocycle is
//! `h = 0`, `c(x,y) = t(x,y) + sum_i xbar_i ybar_i qbar(beta_i)`, whose
//! trace is exactly `q`. A braided skeletal model admits a strictly
//! associative skeletal equivalent precisely when its trace is polar; a
//! polar cover lifts the base group to a free one, where every quadratic
//! form is polar.

use crate::abgroup::{Element, FgAbGroup, Homomorphism};
use crate::cocycle::{find_coboundary_witness, AbelianCocycle3, CoboundaryWitness, CTable, HTable};
use crate::error::AlgebraError;
use crate::forms::{decompose_polar, BilinearForm, QuadraticForm};
use std::collections::BTreeMap;

/// The splitting that makes every quadratic form on a free group polar:
/// `t_ij = b_ij` below the diagonal order, `q_i` on it, `0` above.
pub fn free_polarizing_t(q: &QuadraticForm) -> Result<BilinearForm, AlgebraError> {
    let g = q.source();
    if g.orders().iter().any(|&n| n != 0) {
        return Err(AlgebraError::NotFree);
    }
    let r = g.rank();
    let b = q.polarization();
    let matrix: Vec<Vec<Element>> = (0..r)
        .map(|i| {
            (0..r)
                .map(|j| {
                    if i < j {
                        b.entry(i, j).clone()
                    } else if i == j {
                        q.diag()[i].clone()
                    } else {
                        q.target().zero()
                    }
                })
                .collect()
        })
        .collect();
    BilinearForm::new(g.clone(), q.target().clone(), matrix)
}

/// The strictifying cocycle of a polar form along a witness `t`.
pub fn strictify_cocycle(
    q: &QuadraticForm,
    t: &BilinearForm,
) -> Result<AbelianCocycle3, AlgebraError> {
    let qbar = decompose_polar(q, t)?;
    AbelianCocycle3::structured(t.clone(), qbar.values().to_vec())
}

/// Outcome of the strict-skeletalization decision.
#[derive(Debug, Clone)]
pub struct StrictifyDecision {
    pub polar: bool,
    pub witness: Option<(BilinearForm, AbelianCocycle3)>,
}

/// Decides whether the model of `kappa` has a strictly associative
/// skeletal equivalent: it does iff the trace is polar, and then a
/// cohomologous representative with `h = 0` is produced.
pub fn can_strictify(kappa: &AbelianCocycle3) -> Result<StrictifyDecision, AlgebraError> {
    let q = kappa.trace_form()?;
    match q.is_polar() {
        None => Ok(StrictifyDecision {
            polar: false,
            witness: None,
        }),
        Some(t) => {
            let strict = strictify_cocycle(&q, &t)?;
            Ok(StrictifyDecision {
                polar: true,
                witness: Some((t, strict)),
            })
        }
    }
}

/// The data of a polar cover: a free base group surjecting onto the
/// original one, the lifted form, its witness, and the strict cocycle.
#[derive(Debug, Clone)]
pub struct PolarCoverResult {
    pub cover_group: FgAbGroup,
    pub surjection: Homomorphism,
    pub lifted_form: QuadraticForm,
    pub witness_t: BilinearForm,
    pub strict_cocycle: AbelianCocycle3,
    /// Rank of the kernel presentation of the surjection: one relation per
    /// torsion generator. The cover functor is faithful but typically not
    /// full; fullness is left undetermined.
    pub kernel_rank: usize,
    /// Coboundary witness relating the pushforward of the strict cocycle
    /// (along the canonical section of the surjection) to `kappa`; present
    /// only when the base is finite and the guarded search succeeds.
    pub comparison_cells: Option<CoboundaryWitness>,
}

/// Builds the polar cover of the model presented by `kappa`: the free group
/// on the same generators, the generator-matched surjection, the lifted
/// trace form, and its strictification.
pub fn polar_cover(
    kappa: &AbelianCocycle3,
    guard: u128,
) -> Result<PolarCoverResult, AlgebraError> {
    let g = kappa.group().clone();
    let m = kappa.coeffs().clone();
    let r = g.rank();
    let cover = FgAbGroup::new(vec![0; r])?;
    let surjection = Homomorphism::new(
        cover.clone(),
        g.clone(),
        (0..r).map(|i| g.generator(i)).collect(),
    )?;

    // lift q = trace(kappa) through the surjection: a column read, since
    // the i-th basis vector maps to the i-th generator
    let q = kappa.trace_form()?;
    let mut offdiag = BTreeMap::new();
    let b = q.polarization();
    for i in 0..r {
        for j in (i + 1)..r {
            offdiag.insert((i, j), b.entry(i, j).clone());
        }
    }
    let lifted_form = QuadraticForm::new(cover.clone(), m.clone(), q.diag().to_vec(), offdiag)?;

    let witness_t = free_polarizing_t(&lifted_form)?;
    let strict_cocycle = strictify_cocycle(&lifted_form, &witness_t)?;

    let kernel_rank = g.orders().iter().filter(|&&n| n != 0).count();

    // pushforward along the canonical section x -> same coefficients in P,
    // then search for comparison cells; absence is a documented outcome
    let comparison_cells = if g.is_finite() && m.is_finite() {
        let section = |x: &Element| Element::new(x.coeffs().to_vec());
        let nz: Vec<Element> = g.enumerate()?.filter(|x| !g.is_zero(x)).collect();
        let mut c_push = CTable::new();
        for x in &nz {
            for y in &nz {
                let v = strict_cocycle.c(&section(x), &section(y));
                if !m.is_zero(&v) {
                    c_push.insert((x.clone(), y.clone()), v);
                }
            }
        }
        let pushed = AbelianCocycle3::from_tables(g.clone(), m.clone(), HTable::new(), c_push)?;
        match find_coboundary_witness(&pushed, kappa, guard) {
            Ok(witness) => witness,
            Err(AlgebraError::SearchSpaceTooLarge { .. }) => None,
            Err(e) => return Err(e),
        }
    } else {
        None
    };

    Ok(PolarCoverResult {
        cover_group: cover,
        surjection,
        lifted_form,
        witness_t,
        strict_cocycle,
        kernel_rank,
        comparison_cells,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cocycle::DEFAULT_BOX;

    fn g(orders: &[u64]) -> FgAbGroup {
        FgAbGroup::new(orders.to_vec()).unwrap()
    }

    fn e(coeffs: &[i64]) -> Element {
        Element::new(coeffs.to_vec())
    }

    fn nonpolar_cocycle() -> AbelianCocycle3 {
        let mut h = HTable::new();
        h.insert((e(&[1]), e(&[1]), e(&[1])), e(&[2]));
        let mut c = CTable::new();
        c.insert((e(&[1]), e(&[1])), e(&[1]));
        AbelianCocycle3::from_tables(g(&[2]), g(&[4]), h, c).unwrap()
    }

    #[test]
    fn free_polarizing_examples() {
        let q = QuadraticForm::new(g(&[0]), g(&[4]), vec![e(&[1])], BTreeMap::new()).unwrap();
        let t = free_polarizing_t(&q).unwrap();
        assert_eq!(t.entry(0, 0), &e(&[1]));

        let q = QuadraticForm::zero(g(&[0, 0]), g(&[0]));
        let t = free_polarizing_t(&q).unwrap();
        assert!(t.matrix().iter().flatten().all(|v| v == &e(&[0])));

        let mut offdiag = BTreeMap::new();
        offdiag.insert((0, 1), e(&[5]));
        let q = QuadraticForm::new(g(&[0, 0]), g(&[0]), vec![e(&[0]), e(&[0])], offdiag).unwrap();
        let t = free_polarizing_t(&q).unwrap();
        assert_eq!(t.entry(0, 1), &e(&[5]));
        assert_eq!(t.entry(1, 0), &e(&[0]));
        assert_eq!(t.symmetrize(), q.polarization());

        let torsion = QuadraticForm::zero(g(&[2]), g(&[2]));
        assert!(matches!(
            free_polarizing_t(&torsion),
            Err(AlgebraError::NotFree)
        ));
    }

    #[test]
    fn strictify_picard_line() {
        // G = Z/2, M = Z/2, q(1) = 1, t = 0 gives c(x,y) = xbar ybar
        let q = QuadraticForm::new(g(&[2]), g(&[2]), vec![e(&[1])], BTreeMap::new()).unwrap();
        let t = BilinearForm::zero(g(&[2]), g(&[2]));
        let kappa = strictify_cocycle(&q, &t).unwrap();
        assert_eq!(kappa.c(&e(&[1]), &e(&[1])), e(&[1]));
        assert!(kappa.validate(DEFAULT_BOX).is_valid());
        for x in q.source().enumerate().unwrap() {
            assert_eq!(kappa.c(&x, &x), q.eval(&x));
        }
    }

    #[test]
    fn strictify_koszul_line() {
        let q = QuadraticForm::new(g(&[0]), g(&[2]), vec![e(&[1])], BTreeMap::new()).unwrap();
        let t = BilinearForm::zero(g(&[0]), g(&[2]));
        let kappa = strictify_cocycle(&q, &t).unwrap();
        for x in q.source().sample_box(4) {
            for y in q.source().sample_box(4) {
                let expect = (x.coeffs()[0] * y.coeffs()[0]).rem_euclid(2);
                assert_eq!(kappa.c(&x, &y), e(&[expect]));
            }
        }
    }

    #[test]
    fn strictify_rejects_non_witness() {
        let q = QuadraticForm::new(g(&[2]), g(&[4]), vec![e(&[1])], BTreeMap::new()).unwrap();
        let t = BilinearForm::zero(g(&[2]), g(&[4]));
        assert!(matches!(
            strictify_cocycle(&q, &t),
            Err(AlgebraError::NotAWitness)
        ));
    }

    #[test]
    fn can_strictify_examples() {
        let decision = can_strictify(&nonpolar_cocycle()).unwrap();
        assert!(!decision.polar);

        let zero = AbelianCocycle3::zero(g(&[2]), g(&[4]));
        let decision = can_strictify(&zero).unwrap();
        assert!(decision.polar);
        let (_, strict) = decision.witness.unwrap();
        assert!(crate::cocycle::cohomologous(&zero, &strict, DEFAULT_BOX).unwrap());
    }

    #[test]
    fn polar_cover_of_worked_example() {
        let kappa = nonpolar_cocycle();
        let cover = polar_cover(&kappa, 1_000_000).unwrap();
        assert_eq!(cover.cover_group.orders(), &[0]);
        assert_eq!(cover.witness_t.entry(0, 0), &e(&[1]));
        // c''(m,n) = m*n into Z/4, with trace n^2
        for x in cover.cover_group.sample_box(5) {
            for y in cover.cover_group.sample_box(5) {
                let expect = (x.coeffs()[0] as i128 * y.coeffs()[0] as i128).rem_euclid(4);
                assert_eq!(cover.strict_cocycle.c(&x, &y), e(&[expect as i64]));
            }
        }
        // pulled-back trace agrees with q . f
        let q = kappa.trace_form().unwrap();
        for x in cover.cover_group.sample_box(5) {
            let lhs = cover.strict_cocycle.c(&x, &x);
            let rhs = q.eval(&cover.surjection.apply(&x));
            assert_eq!(lhs, rhs);
        }
        assert_eq!(cover.kernel_rank, 1);
        // the original class is non-polar, so no comparison cells exist
        assert!(cover.comparison_cells.is_none());
    }

    #[test]
    fn polar_cover_of_zero_cocycle() {
        let zero = AbelianCocycle3::zero(g(&[3]), g(&[3]));
        let cover = polar_cover(&zero, 1_000_000).unwrap();
        for x in cover.cover_group.sample_box(3) {
            for y in cover.cover_group.sample_box(3) {
                assert!(cover
                    .strict_cocycle
                    .coeffs()
                    .is_zero(&cover.strict_cocycle.c(&x, &y)));
            }
        }
        assert!(cover.comparison_cells.is_some());
    }
}
