//! Randomized property tests for the algebraic invariants: group laws,
//! quadratic-form identities, polarization bilinearity, and trace
//! properties of structured cocycles.

use braidcat::abgroup::{Element, FgAbGroup};
use braidcat::cocycle::AbelianCocycle3;
use braidcat::forms::{BilinearForm, QuadraticForm};
use proptest::prelude::*;
use std::collections::BTreeMap;

fn arb_group() -> impl Strategy<Value = FgAbGroup> {
    prop::collection::vec(
        prop_oneof![Just(0u64), Just(2), Just(3), Just(4), Just(6)],
        1..=3,
    )
    .prop_map(|orders| FgAbGroup::new(orders).unwrap())
}

fn arb_element(g: &FgAbGroup) -> impl Strategy<Value = Element> {
    prop::collection::vec(-20i64..=20, g.rank()).prop_map(Element::new)
}

fn arb_group_with_elements(
    n: usize,
) -> impl Strategy<Value = (FgAbGroup, Vec<Element>)> {
    arb_group().prop_flat_map(move |g| {
        let elems = prop::collection::vec(arb_element(&g), n);
        (Just(g), elems)
    })
}

proptest! {
    #[test]
    fn group_laws((g, xs) in arb_group_with_elements(2)) {
        let (x, y) = (&xs[0], &xs[1]);
        prop_assert_eq!(g.reduce(&g.add(x, y)), g.reduce(&g.add(y, x)));
        prop_assert_eq!(g.add(x, &g.zero()), g.reduce(x));
        prop_assert!(g.is_zero(&g.add(x, &g.neg(x))));
        prop_assert_eq!(g.scale(2, x), g.add(x, x));
    }

    #[test]
    fn mod2_reduction_is_invariant_under_doubling((g, xs) in arb_group_with_elements(2)) {
        let basis = g.mod2_basis();
        let shifted = g.add(&xs[0], &g.scale(2, &xs[1]));
        prop_assert_eq!(basis.reduction(&xs[0]), basis.reduction(&shifted));
    }
}

/// A well-defined quadratic form Z/4 + Z -> Z/8 with a sampled point set.
fn fixed_form() -> QuadraticForm {
    let g = FgAbGroup::new(vec![4, 0]).unwrap();
    let m = FgAbGroup::new(vec![8]).unwrap();
    let mut offdiag = BTreeMap::new();
    offdiag.insert((0usize, 1usize), Element::new(vec![2]));
    QuadraticForm::new(
        g,
        m,
        vec![Element::new(vec![1]), Element::new(vec![3])],
        offdiag,
    )
    .unwrap()
}

proptest! {
    #[test]
    fn quadratic_identities(
        a in -10i64..=10, b in -10i64..=10,
        c in -10i64..=10, d in -10i64..=10,
        p in -10i64..=10, r in -10i64..=10,
    ) {
        let q = fixed_form();
        let g = q.source().clone();
        let m = q.target().clone();
        let x = Element::new(vec![a, b]);
        let y = Element::new(vec![c, d]);
        let z = Element::new(vec![p, r]);
        prop_assert_eq!(q.eval(&g.neg(&x)), q.eval(&x));
        prop_assert_eq!(q.eval(&g.scale(2, &x)), m.scale(4, &q.eval(&x)));
        // three-variable characterization
        let lhs = [
            q.eval(&g.add(&g.add(&x, &y), &z)),
            q.eval(&x),
            q.eval(&y),
            q.eval(&z),
        ]
        .iter()
        .fold(m.zero(), |acc, v| m.add(&acc, v));
        let rhs = [
            q.eval(&g.add(&y, &z)),
            q.eval(&g.add(&z, &x)),
            q.eval(&g.add(&x, &y)),
        ]
        .iter()
        .fold(m.zero(), |acc, v| m.add(&acc, v));
        prop_assert_eq!(lhs, rhs);
        // polarization identity and symmetry
        let pol = q.polarization();
        let direct = m.sub(
            &m.sub(&q.eval(&g.add(&x, &y)), &q.eval(&x)),
            &q.eval(&y),
        );
        prop_assert_eq!(pol.eval(&x, &y), direct);
        prop_assert_eq!(pol.eval(&x, &y), pol.eval(&y, &x));
    }

    #[test]
    fn bilinear_eval_is_additive(
        a in -10i64..=10, b in -10i64..=10,
        c in -10i64..=10, d in -10i64..=10,
        p in -10i64..=10, r in -10i64..=10,
    ) {
        let g = FgAbGroup::new(vec![4, 0]).unwrap();
        let m = FgAbGroup::new(vec![8]).unwrap();
        let t = BilinearForm::new(
            g.clone(),
            m.clone(),
            vec![
                vec![Element::new(vec![2]), Element::new(vec![4])],
                vec![Element::new(vec![6]), Element::new(vec![1])],
            ],
        )
        .unwrap();
        let x = Element::new(vec![a, b]);
        let y = Element::new(vec![c, d]);
        let z = Element::new(vec![p, r]);
        prop_assert_eq!(
            t.eval(&g.add(&x, &y), &z),
            m.add(&t.eval(&x, &z), &t.eval(&y, &z))
        );
        prop_assert_eq!(
            t.eval(&x, &g.add(&y, &z)),
            m.add(&t.eval(&x, &y), &t.eval(&x, &z))
        );
    }

    #[test]
    fn structured_cocycle_trace_is_quadratic(
        a in -8i64..=8, b in -8i64..=8,
    ) {
        // Koszul-type structured cocycle on Z -> Z/2: trace is parity
        let g = FgAbGroup::new(vec![0]).unwrap();
        let m = FgAbGroup::new(vec![2]).unwrap();
        let kappa = AbelianCocycle3::structured(
            BilinearForm::zero(g.clone(), m),
            vec![Element::new(vec![1])],
        )
        .unwrap();
        let x = Element::new(vec![a]);
        let y = Element::new(vec![b]);
        prop_assert_eq!(kappa.c(&x, &x), Element::new(vec![a.rem_euclid(2)]));
        // braiding is symmetric (2-torsion values)
        prop_assert_eq!(kappa.c(&x, &y), kappa.c(&y, &x));
    }
}
