//! The exact row Hom(G/2G, M) -> Quad(G, M) -> Bil(G, M).
//!
//! psi regards an F2-linear map as a quadratic form, phi is polarization,
//! and the row is exact: phi . psi = 0, and every form with vanishing
//! polarization lifts through psi. The square with diag (B -> B(x,x)) and
//! symmetrization commutes: sym = phi . diag.

use braidcat::abgroup::{Element, FgAbGroup};
use braidcat::forms::{diag_form, phi, psi, BilinearForm, Mod2Map};

fn main() {
    let g = FgAbGroup::new(vec![2, 2]).unwrap();
    let m = FgAbGroup::new(vec![4]).unwrap();

    // psi of the map (e1 -> 2, e2 -> 0)
    let f = Mod2Map::new(
        &g,
        m.clone(),
        vec![Element::new(vec![2]), Element::new(vec![0])],
    )
    .unwrap();
    let q = psi(&f);
    println!("psi(f) has diagonal {:?}", q.diag().iter().map(|v| v.coeffs()).collect::<Vec<_>>());
    let pol = phi(&q);
    println!("phi(psi(f)) is the zero matrix: {}", pol == BilinearForm::zero(g.clone(), m.clone()));
    assert_eq!(pol, BilinearForm::zero(g.clone(), m.clone()));

    // a form with zero polarization lifts back through psi
    let values: Vec<Element> = g
        .mod2_basis()
        .basis_indices()
        .iter()
        .map(|&i| q.diag()[i].clone())
        .collect();
    let lift = Mod2Map::new(&g, m.clone(), values).unwrap();
    for x in g.enumerate().unwrap() {
        assert_eq!(psi(&lift).eval(&x), q.eval(&x));
    }
    println!("kernel form reconstructed through psi on all {} elements", 4);

    // sym = phi . diag on a non-symmetric bilinear form
    let b = BilinearForm::new(
        g.clone(),
        m,
        vec![
            vec![Element::new(vec![2]), Element::new(vec![2])],
            vec![Element::new(vec![0]), Element::new(vec![2])],
        ],
    )
    .unwrap();
    let via_square = phi(&diag_form(&b));
    println!("sym(B) == phi(diag(B)): {}", via_square == b.symmetrize());
    assert_eq!(via_square, b.symmetrize());
}
