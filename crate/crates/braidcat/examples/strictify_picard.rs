//! Strictification: a braided skeletal model admits a strictly associative
//! equivalent exactly when its trace form is polar, and the strict
//! representative can be written down explicitly.
//!
//! Here the Picard line: q(1) = 1 from Z/2 into Z/2 has zero polarization,
//! so t = 0 is a witness and the strictifying cocycle is h = 0,
//! c(x,y) = xy mod 2 — the sign rule of super vector spaces.

use braidcat::abgroup::{Element, FgAbGroup};
use braidcat::cocycle::{cohomologous, DEFAULT_BOX};
use braidcat::forms::QuadraticForm;
use braidcat::model::example_nonpolar;
use braidcat::strictify::{can_strictify, strictify_cocycle};
use std::collections::BTreeMap;

fn main() {
    let z2 = FgAbGroup::new(vec![2]).unwrap();
    let q = QuadraticForm::new(
        z2.clone(),
        z2.clone(),
        vec![Element::new(vec![1])],
        BTreeMap::new(),
    )
    .unwrap();

    let t = q.is_polar().expect("zero polarization: t = 0 works");
    let strict = strictify_cocycle(&q, &t).unwrap();
    println!("strictifying cocycle has h = 0 and braiding:");
    for x in z2.enumerate().unwrap() {
        for y in z2.enumerate().unwrap() {
            println!(
                "  c({:?},{:?}) = {:?}",
                x.coeffs(),
                y.coeffs(),
                strict.c(&x, &y).coeffs()
            );
        }
    }
    let report = strict.validate(DEFAULT_BOX);
    println!("valid: {}", report.is_valid());
    assert!(report.is_valid());
    for x in z2.enumerate().unwrap() {
        assert_eq!(strict.c(&x, &x), q.eval(&x), "trace reproduces q");
    }

    // the strictification decision is an iff: the non-polar built-in refuses
    let decision = can_strictify(&example_nonpolar()).unwrap();
    println!(
        "non-polar example strictifiable: {} (witness: {:?})",
        decision.polar,
        decision.witness.is_some()
    );
    assert!(!decision.polar);

    // and the strict representative stays in the same cohomology class
    let same_q_cocycle = strictify_cocycle(&q, &t).unwrap();
    assert!(cohomologous(&strict, &same_q_cocycle, DEFAULT_BOX).unwrap());
}
