//! The Koszul sign rule as a structured cocycle on an infinite group.
//!
//! On G = Z with coefficients Z/2, the cocycle h = 0,
//! c(x, y) = (x mod 2)(y mod 2) is symmetric, so the model is a Picard
//! groupoid; its signature is the parity of the grading — the sign
//! (-1)^{|x||y|} of graded algebra, written additively.

use braidcat::abgroup::Element;
use braidcat::cocycle::DEFAULT_BOX;
use braidcat::model::{example_koszul, SkeletalModel};

fn main() {
    let model = SkeletalModel::build(example_koszul(), DEFAULT_BOX).unwrap();
    println!(
        "pi0 orders: {:?} (Z), pi1 orders: {:?} (Z/2)",
        model.pi0().orders(),
        model.pi1().orders()
    );
    println!("symmetric braiding (Picard): {}", model.is_picard(DEFAULT_BOX));
    assert!(model.is_picard(DEFAULT_BOX));

    for n in -4i64..=4 {
        let sig = model.signature(&Element::new(vec![n]));
        println!("signature({n:>2}) = {:?} (parity of {n})", sig.coeffs());
        assert_eq!(sig.coeffs()[0], n.rem_euclid(2));
    }

    // validation on an infinite group is over a declared sample box, and
    // the report says so rather than over-claiming exhaustiveness
    let report = model.kappa().validate(DEFAULT_BOX);
    println!(
        "validation: valid = {}, exhaustive = {}, box = {:?}",
        report.is_valid(),
        report.exhaustive,
        report.bound
    );
    assert!(report.is_valid() && !report.exhaustive);
}
