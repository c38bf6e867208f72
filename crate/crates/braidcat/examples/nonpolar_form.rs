//! The canonical non-polar quadratic form: q(x) = x^2 from Z/2 into Z/4.
//!
//! Its polarization is b(x,y) = 2xy, which cannot be written as
//! t(x,y) + t(y,x) for any bilinear t (the diagonal would need an element
//! m of Z/4 with 2m = 2 and 2m = 0 simultaneously). Both the per-generator
//! decision procedure and the exhaustive matrix search agree.

use braidcat::abgroup::{Element, FgAbGroup};
use braidcat::forms::QuadraticForm;
use std::collections::BTreeMap;

fn main() {
    let z2 = FgAbGroup::new(vec![2]).unwrap();
    let z4 = FgAbGroup::new(vec![4]).unwrap();
    let q = QuadraticForm::new(
        z2.clone(),
        z4,
        vec![Element::new(vec![1])],
        BTreeMap::new(),
    )
    .unwrap();

    for x in z2.enumerate().unwrap() {
        println!("q({:?}) = {:?}", x.coeffs(), q.eval(&x).coeffs());
    }
    let b = q.polarization();
    println!("polarization b(1,1) = {:?}", b.entry(0, 0).coeffs());

    let decided = q.is_polar();
    let brute = q.brute_force_is_polar(1_000_000).unwrap();
    println!("is_polar (decision procedure): {}", decided.is_some());
    println!("is_polar (exhaustive search):  {brute}");
    assert!(decided.is_none() && !brute);

    // contrast: q(x) = 2x^2 on the same groups is polar, with witness t = 0
    let polar = QuadraticForm::new(
        z2,
        FgAbGroup::new(vec![4]).unwrap(),
        vec![Element::new(vec![2])],
        BTreeMap::new(),
    )
    .unwrap();
    let t = polar.is_polar().expect("2x^2 is polar");
    println!(
        "q(x) = 2x^2 is polar with witness t(1,1) = {:?}",
        t.entry(0, 0).coeffs()
    );
}
