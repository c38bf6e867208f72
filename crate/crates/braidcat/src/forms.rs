//! Bilinear and quadratic forms `G -> M`, polarization, the Whitehead
//! exact-row maps, and the polarity decision procedure.
//!
//! Quadratic forms are stored by generator data: diagonal values
//! `q_i = q(g_i)` and off-diagonal polarization values `b_ij = b(g_i, g_j)`
//! for `i < j`. The evaluation rule
//!
//! ```text
//! q(sum x_i g_i) = sum x_i^2 q_i + sum_{i<j} x_i x_j b_ij
//! ```
//!
//! is forced by `q(x+y) = q(x) + q(y) + b(x,y)` and `q(nx) = n^2 q(x)`.
//! Well-definedness on the presented group amounts to the congruences
//! `n_i b_ij = 0`, `2 n_i q_i = 0` and `n_i^2 q_i = 0` per torsion
//! generator, which are enforced at construction.

use crate::abgroup::{Element, FgAbGroup, Mod2Basis};
use crate::error::AlgebraError;
use rayon::prelude::*;
use std::collections::BTreeMap;

/// A Z-bilinear form `G x G -> M`, stored as the matrix of values on
/// generator pairs. Not required to be symmetric.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BilinearForm {
    source: FgAbGroup,
    target: FgAbGroup,
    matrix: Vec<Vec<Element>>,
}

impl BilinearForm {
    pub fn new(
        source: FgAbGroup,
        target: FgAbGroup,
        matrix: Vec<Vec<Element>>,
    ) -> Result<Self, AlgebraError> {
        let r = source.rank();
        if matrix.len() != r || matrix.iter().any(|row| row.len() != r) {
            return Err(AlgebraError::Dimension(format!(
                "bilinear matrix must be {r}x{r}"
            )));
        }
        let matrix: Vec<Vec<Element>> = matrix
            .iter()
            .map(|row| row.iter().map(|e| target.reduce(e)).collect())
            .collect();
        for (i, row) in matrix.iter().enumerate() {
            for (j, entry) in row.iter().enumerate() {
                for n in [source.orders()[i], source.orders()[j]] {
                    if n != 0 && !target.is_zero(&target.scale(n as i128, entry)) {
                        return Err(AlgebraError::IllDefinedBilinear { i, j });
                    }
                }
            }
        }
        Ok(BilinearForm {
            source,
            target,
            matrix,
        })
    }

    pub fn zero(source: FgAbGroup, target: FgAbGroup) -> Self {
        let r = source.rank();
        let matrix = vec![vec![target.zero(); r]; r];
        BilinearForm {
            source,
            target,
            matrix,
        }
    }

    pub fn source(&self) -> &FgAbGroup {
        &self.source
    }

    pub fn target(&self) -> &FgAbGroup {
        &self.target
    }

    pub fn matrix(&self) -> &[Vec<Element>] {
        &self.matrix
    }

    pub fn entry(&self, i: usize, j: usize) -> &Element {
        &self.matrix[i][j]
    }

    pub fn eval(&self, x: &Element, y: &Element) -> Element {
        let mut acc = self.target.zero();
        for (i, &xi) in x.coeffs().iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.coeffs().iter().enumerate() {
                if yj == 0 {
                    continue;
                }
                let term = self
                    .target
                    .scale(xi as i128 * yj as i128, &self.matrix[i][j]);
                acc = self.target.add(&acc, &term);
            }
        }
        acc
    }

    pub fn transpose(&self) -> BilinearForm {
        let r = self.source.rank();
        let matrix = (0..r)
            .map(|i| (0..r).map(|j| self.matrix[j][i].clone()).collect())
            .collect();
        BilinearForm {
            source: self.source.clone(),
            target: self.target.clone(),
            matrix,
        }
    }

    /// The symmetrization `(x,y) -> B(x,y) + B(y,x)`.
    pub fn symmetrize(&self) -> BilinearForm {
        let r = self.source.rank();
        let matrix = (0..r)
            .map(|i| {
                (0..r)
                    .map(|j| self.target.add(&self.matrix[i][j], &self.matrix[j][i]))
                    .collect()
            })
            .collect();
        BilinearForm {
            source: self.source.clone(),
            target: self.target.clone(),
            matrix,
        }
    }
}

/// A quadratic form `G -> M` by generator data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadraticForm {
    source: FgAbGroup,
    target: FgAbGroup,
    diag: Vec<Element>,
    offdiag: BTreeMap<(usize, usize), Element>,
}

impl QuadraticForm {
    pub fn new(
        source: FgAbGroup,
        target: FgAbGroup,
        diag: Vec<Element>,
        offdiag: BTreeMap<(usize, usize), Element>,
    ) -> Result<Self, AlgebraError> {
        let r = source.rank();
        if diag.len() != r {
            return Err(AlgebraError::Dimension(format!(
                "expected {r} diagonal values, got {}",
                diag.len()
            )));
        }
        let diag: Vec<Element> = diag.iter().map(|e| target.reduce(e)).collect();
        let mut canon = BTreeMap::new();
        for (&(i, j), v) in &offdiag {
            if i >= j || j >= r {
                return Err(AlgebraError::Dimension(format!(
                    "off-diagonal key ({i},{j}) must satisfy i < j < {r}"
                )));
            }
            let v = target.reduce(v);
            if !target.is_zero(&v) {
                canon.insert((i, j), v);
            }
        }
        for (i, q_i) in diag.iter().enumerate() {
            let n = source.orders()[i];
            if n == 0 {
                continue;
            }
            let n = n as i128;
            if !target.is_zero(&target.scale(2 * n, q_i)) {
                return Err(AlgebraError::IllDefinedQuadratic(format!(
                    "2 * n_{i} * q_{i} != 0"
                )));
            }
            if !target.is_zero(&target.scale(n * n, q_i)) {
                return Err(AlgebraError::IllDefinedQuadratic(format!(
                    "n_{i}^2 * q_{i} != 0"
                )));
            }
        }
        for (&(i, j), b) in &canon {
            for k in [i, j] {
                let n = source.orders()[k];
                if n != 0 && !target.is_zero(&target.scale(n as i128, b)) {
                    return Err(AlgebraError::IllDefinedQuadratic(format!(
                        "n_{k} * b_({i},{j}) != 0"
                    )));
                }
            }
        }
        Ok(QuadraticForm {
            source,
            target,
            diag,
            offdiag: canon,
        })
    }

    pub fn zero(source: FgAbGroup, target: FgAbGroup) -> Self {
        let diag = vec![target.zero(); source.rank()];
        QuadraticForm {
            source,
            target,
            diag,
            offdiag: BTreeMap::new(),
        }
    }

    pub fn source(&self) -> &FgAbGroup {
        &self.source
    }

    pub fn target(&self) -> &FgAbGroup {
        &self.target
    }

    pub fn diag(&self) -> &[Element] {
        &self.diag
    }

    pub fn offdiag(&self) -> &BTreeMap<(usize, usize), Element> {
        &self.offdiag
    }

    fn offdiag_entry(&self, i: usize, j: usize) -> Element {
        debug_assert!(i < j);
        self.offdiag
            .get(&(i, j))
            .cloned()
            .unwrap_or_else(|| self.target.zero())
    }

    pub fn eval(&self, x: &Element) -> Element {
        let mut acc = self.target.zero();
        let c = x.coeffs();
        for (i, q_i) in self.diag.iter().enumerate() {
            let xi = c[i] as i128;
            if xi != 0 {
                acc = self.target.add(&acc, &self.target.scale(xi * xi, q_i));
            }
        }
        for (&(i, j), b) in &self.offdiag {
            let prod = c[i] as i128 * c[j] as i128;
            if prod != 0 {
                acc = self.target.add(&acc, &self.target.scale(prod, b));
            }
        }
        acc
    }

    /// The polarization `b(x,y) = q(x+y) - q(x) - q(y)` as a bilinear form;
    /// its matrix has `b_ii = 2 q_i`.
    pub fn polarization(&self) -> BilinearForm {
        let r = self.source.rank();
        let matrix: Vec<Vec<Element>> = (0..r)
            .map(|i| {
                (0..r)
                    .map(|j| {
                        if i == j {
                            self.target.scale(2, &self.diag[i])
                        } else {
                            let (a, b) = if i < j { (i, j) } else { (j, i) };
                            self.offdiag_entry(a, b)
                        }
                    })
                    .collect()
            })
            .collect();
        BilinearForm::new(self.source.clone(), self.target.clone(), matrix)
            .expect("polarization inherits well-definedness")
    }

    /// Decides polarity and produces a deterministic witness.
    ///
    /// Off-diagonal polarization entries always split as
    /// `t_ij = b_ij (i<j), t_ji = 0`, so the decision reduces to solving
    /// `2m = 2 q_i` with `n_i m = 0` per generator. Ties are broken by the
    /// lexicographically least solution; on free generators `m = q_i`.
    pub fn is_polar(&self) -> Option<BilinearForm> {
        let r = self.source.rank();
        let mut diag_t = Vec::with_capacity(r);
        for i in 0..r {
            let n = self.source.orders()[i];
            if n == 0 {
                diag_t.push(self.diag[i].clone());
                continue;
            }
            let want = self.target.scale(2, &self.diag[i]);
            let m = self
                .target
                .torsion_elements(n)
                .into_iter()
                .find(|m| self.target.scale(2, m) == want)?;
            diag_t.push(m);
        }
        let matrix: Vec<Vec<Element>> = (0..r)
            .map(|i| {
                (0..r)
                    .map(|j| {
                        if i == j {
                            diag_t[i].clone()
                        } else if i < j {
                            self.offdiag_entry(i, j)
                        } else {
                            self.target.zero()
                        }
                    })
                    .collect()
            })
            .collect();
        Some(
            BilinearForm::new(self.source.clone(), self.target.clone(), matrix)
                .expect("witness entries satisfy the same congruences"),
        )
    }

    /// Independent oracle: exhaustively searches all well-defined bilinear
    /// matrices for one with `t + t^T` equal to the polarization. Returns
    /// the lexicographically least witness.
    pub fn brute_force_polar_witness(
        &self,
        guard: u128,
    ) -> Result<Option<BilinearForm>, AlgebraError> {
        let r = self.source.rank();
        let b = self.polarization();
        // candidate domain per entry: elements killed by both generator orders
        let mut domains: Vec<Vec<Element>> = Vec::with_capacity(r * r);
        let mut candidates: u128 = 1;
        for i in 0..r {
            for j in 0..r {
                let ni = self.source.orders()[i];
                let nj = self.source.orders()[j];
                let domain = match (ni, nj) {
                    (0, 0) => {
                        if !self.target.is_finite() {
                            return Err(AlgebraError::SearchSpaceTooLarge {
                                candidates: u128::MAX,
                                guard,
                            });
                        }
                        self.target.enumerate()?.collect()
                    }
                    (0, n) | (n, 0) => self.target.torsion_elements(n),
                    (n, m) => self
                        .target
                        .torsion_elements(n)
                        .into_iter()
                        .filter(|e| self.target.is_zero(&self.target.scale(m as i128, e)))
                        .collect(),
                };
                candidates = candidates.saturating_mul(domain.len() as u128);
                domains.push(domain);
            }
        }
        if candidates > guard {
            return Err(AlgebraError::SearchSpaceTooLarge { candidates, guard });
        }
        if r == 0 {
            return Ok(Some(BilinearForm::zero(
                self.source.clone(),
                self.target.clone(),
            )));
        }
        let target = &self.target;
        let check = |entries: &[&Element]| -> bool {
            for i in 0..r {
                for j in i..r {
                    let sum = target.add(entries[i * r + j], entries[j * r + i]);
                    if &sum != b.entry(i, j) {
                        return false;
                    }
                }
            }
            true
        };
        // partition on the first entry; inner odometer is lexicographic, so
        // find_map_first returns the overall least witness
        let found = domains[0].par_iter().find_map_first(|first| {
            let mut idx = vec![0usize; r * r];
            loop {
                {
                    let mut entries: Vec<&Element> = Vec::with_capacity(r * r);
                    entries.push(first);
                    for (k, d) in domains.iter().enumerate().skip(1) {
                        entries.push(&d[idx[k]]);
                    }
                    if check(&entries) {
                        return Some(entries.into_iter().cloned().collect::<Vec<Element>>());
                    }
                }
                let mut done = true;
                for k in (1..r * r).rev() {
                    idx[k] += 1;
                    if idx[k] < domains[k].len() {
                        done = false;
                        break;
                    }
                    idx[k] = 0;
                }
                if done {
                    return None;
                }
            }
        });
        Ok(found.map(|flat| {
            let matrix: Vec<Vec<Element>> = flat.chunks(r).map(|row| row.to_vec()).collect();
            BilinearForm::new(self.source.clone(), self.target.clone(), matrix)
                .expect("search domains enforce well-definedness")
        }))
    }

    pub fn brute_force_is_polar(&self, guard: u128) -> Result<bool, AlgebraError> {
        Ok(self.brute_force_polar_witness(guard)?.is_some())
    }
}

/// An F2-linear map `G/2G -> 2-torsion of M`, stored by its values on the
/// chosen mod-2 basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mod2Map {
    basis: Mod2Basis,
    target: FgAbGroup,
    values: Vec<Element>,
}

impl Mod2Map {
    pub fn new(
        source: &FgAbGroup,
        target: FgAbGroup,
        values: Vec<Element>,
    ) -> Result<Self, AlgebraError> {
        let basis = source.mod2_basis();
        if values.len() != basis.dim() {
            return Err(AlgebraError::Dimension(format!(
                "expected {} values (one per mod-2 basis index), got {}",
                basis.dim(),
                values.len()
            )));
        }
        let values: Vec<Element> = values.iter().map(|v| target.reduce(v)).collect();
        for v in &values {
            if !target.is_zero(&target.scale(2, v)) {
                return Err(AlgebraError::NotTwoTorsion);
            }
        }
        Ok(Mod2Map {
            basis,
            target,
            values,
        })
    }

    pub fn basis(&self) -> &Mod2Basis {
        &self.basis
    }

    pub fn target(&self) -> &FgAbGroup {
        &self.target
    }

    pub fn values(&self) -> &[Element] {
        &self.values
    }

    pub fn eval(&self, x: &Element) -> Element {
        let bits = self.basis.reduction(x);
        let mut acc = self.target.zero();
        for (bit, v) in bits.iter().zip(&self.values) {
            if *bit == 1 {
                acc = self.target.add(&acc, v);
            }
        }
        acc
    }
}

/// Splits `q` along a polarity witness `t` as `q(x) = t(x,x) + qbar(x)`,
/// returning the F2-linear remainder `qbar`.
pub fn decompose_polar(q: &QuadraticForm, t: &BilinearForm) -> Result<Mod2Map, AlgebraError> {
    if t.symmetrize() != q.polarization() {
        return Err(AlgebraError::NotAWitness);
    }
    let g = q.source();
    let m = q.target();
    let basis = g.mod2_basis();
    let mut values = Vec::with_capacity(basis.dim());
    for &i in basis.basis_indices() {
        values.push(m.sub(&q.diag()[i], t.entry(i, i)));
    }
    // residuals off the basis are forced to vanish for a genuine witness
    for i in 0..g.rank() {
        if !basis.basis_indices().contains(&i)
            && !m.is_zero(&m.sub(&q.diag()[i], t.entry(i, i)))
        {
            return Err(AlgebraError::NotAWitness);
        }
    }
    Mod2Map::new(g, m.clone(), values).map_err(|_| AlgebraError::NotAWitness)
}

/// `psi` of the Whitehead diagram: a map `G/2G -> M` regarded as a
/// quadratic form.
pub fn psi(f: &Mod2Map) -> QuadraticForm {
    let g = f.basis().group().clone();
    let m = f.target().clone();
    let mut diag = vec![m.zero(); g.rank()];
    for (k, &i) in f.basis().basis_indices().iter().enumerate() {
        diag[i] = f.values()[k].clone();
    }
    QuadraticForm::new(g, m, diag, BTreeMap::new())
        .expect("2-torsion values satisfy the congruences")
}

/// `phi` of the Whitehead diagram: polarization.
pub fn phi(q: &QuadraticForm) -> BilinearForm {
    q.polarization()
}

/// The downward arrow of the Whitehead diagram: `B -> (x -> B(x,x))`.
pub fn diag_form(b: &BilinearForm) -> QuadraticForm {
    let r = b.source().rank();
    let diag = (0..r).map(|i| b.entry(i, i).clone()).collect();
    let mut offdiag = BTreeMap::new();
    for i in 0..r {
        for j in (i + 1)..r {
            offdiag.insert((i, j), b.target().add(b.entry(i, j), b.entry(j, i)));
        }
    }
    QuadraticForm::new(b.source().clone(), b.target().clone(), diag, offdiag)
        .expect("diagonal restriction inherits well-definedness")
}

/// Exhaustive check of the quadratic characterization on a full value
/// table: `q(-x) = q(x)` and the three-variable identity.
pub fn validate_quadratic_table(
    group: &FgAbGroup,
    target: &FgAbGroup,
    table: &BTreeMap<Element, Element>,
) -> Result<bool, AlgebraError> {
    let elems: Vec<Element> = group.enumerate()?.collect();
    let lookup = |x: &Element| -> Result<&Element, AlgebraError> {
        table
            .get(x)
            .ok_or_else(|| AlgebraError::IncompleteTable(format!("{:?}", x.coeffs())))
    };
    for x in &elems {
        if lookup(x)? != lookup(&group.neg(x))? {
            return Ok(false);
        }
    }
    for x in &elems {
        for y in &elems {
            for z in &elems {
                let lhs = [
                    lookup(&group.add(&group.add(x, y), z))?,
                    lookup(x)?,
                    lookup(y)?,
                    lookup(z)?,
                ];
                let rhs = [
                    lookup(&group.add(y, z))?,
                    lookup(&group.add(z, x))?,
                    lookup(&group.add(x, y))?,
                ];
                let lhs = lhs
                    .iter()
                    .fold(target.zero(), |acc, e| target.add(&acc, e));
                let rhs = rhs
                    .iter()
                    .fold(target.zero(), |acc, e| target.add(&acc, e));
                if lhs != rhs {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(orders: &[u64]) -> FgAbGroup {
        FgAbGroup::new(orders.to_vec()).unwrap()
    }

    fn e(coeffs: &[i64]) -> Element {
        Element::new(coeffs.to_vec())
    }

    fn x_squared_form() -> QuadraticForm {
        // the non-polar form x^2 : Z/2 -> Z/4
        QuadraticForm::new(g(&[2]), g(&[4]), vec![e(&[1])], BTreeMap::new()).unwrap()
    }

    #[test]
    fn eval_bilinear_examples() {
        let t = BilinearForm::new(g(&[2]), g(&[4]), vec![vec![e(&[2])]]).unwrap();
        assert_eq!(t.eval(&e(&[1]), &e(&[1])), e(&[2]));
        assert_eq!(t.eval(&e(&[0]), &e(&[1])), e(&[0]));
        let s = BilinearForm::new(g(&[0]), g(&[0]), vec![vec![e(&[5])]]).unwrap();
        assert_eq!(s.eval(&e(&[2]), &e(&[3])), e(&[30]));
    }

    #[test]
    fn bilinear_rejects_unkilled_entry() {
        assert!(matches!(
            BilinearForm::new(g(&[2]), g(&[4]), vec![vec![e(&[1])]]),
            Err(AlgebraError::IllDefinedBilinear { i: 0, j: 0 })
        ));
    }

    #[test]
    fn eval_quadratic_examples() {
        let q = x_squared_form();
        assert_eq!(q.eval(&e(&[1])), e(&[1]));
        assert_eq!(q.eval(&e(&[0])), e(&[0]));
        let parity = QuadraticForm::new(g(&[0]), g(&[2]), vec![e(&[1])], BTreeMap::new()).unwrap();
        assert_eq!(parity.eval(&e(&[3])), e(&[1])); // 9 mod 2
    }

    #[test]
    fn polarization_examples() {
        let q = x_squared_form();
        let b = q.polarization();
        assert_eq!(b.eval(&e(&[1]), &e(&[1])), e(&[2]));

        // homomorphism with 2-torsion values has zero polarization
        let hom = QuadraticForm::new(g(&[2]), g(&[2]), vec![e(&[1])], BTreeMap::new()).unwrap();
        assert_eq!(hom.polarization(), BilinearForm::zero(g(&[2]), g(&[2])));

        // q(x) = t(x,x) gives b = t + t^T
        let t = BilinearForm::new(
            g(&[0, 0]),
            g(&[0]),
            vec![vec![e(&[1]), e(&[3])], vec![e(&[0]), e(&[2])]],
        )
        .unwrap();
        let q = diag_form(&t);
        assert_eq!(q.polarization(), t.symmetrize());
    }

    #[test]
    fn polarization_identity_pointwise() {
        let mut offdiag = BTreeMap::new();
        offdiag.insert((0, 1), e(&[2]));
        let q = QuadraticForm::new(g(&[2, 0]), g(&[4]), vec![e(&[1]), e(&[3])], offdiag).unwrap();
        let b = q.polarization();
        for x in q.source().sample_box(3) {
            for y in q.source().sample_box(3) {
                let lhs = b.eval(&x, &y);
                let sum = q.source().add(&x, &y);
                let rhs = q.target().sub(
                    &q.target().sub(&q.eval(&sum), &q.eval(&x)),
                    &q.eval(&y),
                );
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn is_polar_examples() {
        assert!(x_squared_form().is_polar().is_none());

        let free = QuadraticForm::new(g(&[0]), g(&[4]), vec![e(&[3])], BTreeMap::new()).unwrap();
        assert!(free.is_polar().is_some());

        // q_1 = 2 on Z/2 -> Z/4: both m = 0 and m = 2 solve, least wins
        let q = QuadraticForm::new(g(&[2]), g(&[4]), vec![e(&[2])], BTreeMap::new()).unwrap();
        let t = q.is_polar().unwrap();
        assert_eq!(t.entry(0, 0), &e(&[0]));
    }

    #[test]
    fn brute_force_examples() {
        assert!(!x_squared_form().brute_force_is_polar(1_000_000).unwrap());
        let zero = QuadraticForm::zero(g(&[2]), g(&[4]));
        assert!(zero.brute_force_is_polar(1_000_000).unwrap());
        let q = QuadraticForm::new(g(&[2]), g(&[4]), vec![e(&[2])], BTreeMap::new()).unwrap();
        assert!(q.brute_force_is_polar(1_000_000).unwrap());
    }

    #[test]
    fn brute_force_agrees_with_decision() {
        // all well-defined q on Z/2 + Z/2 -> Z/4
        let src = g(&[2, 2]);
        let tgt = g(&[4]);
        let diag_domain = tgt.enumerate().unwrap().collect::<Vec<_>>();
        let off_domain = tgt.torsion_elements(2);
        for d0 in &diag_domain {
            for d1 in &diag_domain {
                for b01 in &off_domain {
                    let mut offdiag = BTreeMap::new();
                    offdiag.insert((0, 1), b01.clone());
                    let q = QuadraticForm::new(
                        src.clone(),
                        tgt.clone(),
                        vec![d0.clone(), d1.clone()],
                        offdiag,
                    )
                    .unwrap();
                    assert_eq!(
                        q.is_polar().is_some(),
                        q.brute_force_is_polar(1_000_000).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn decompose_polar_examples() {
        // q(x) = t(x,x) exactly: remainder is zero
        let t = BilinearForm::new(g(&[0]), g(&[4]), vec![vec![e(&[1])]]).unwrap();
        let q = diag_form(&t);
        let qbar = decompose_polar(&q, &t).unwrap();
        assert!(qbar.values().iter().all(|v| v == &e(&[0])));

        // Koszul line: q_1 = 1 into Z/2, t = 0
        let q = QuadraticForm::new(g(&[0]), g(&[2]), vec![e(&[1])], BTreeMap::new()).unwrap();
        let t = BilinearForm::zero(g(&[0]), g(&[2]));
        let qbar = decompose_polar(&q, &t).unwrap();
        assert_eq!(qbar.values(), &[e(&[1])]);

        // Picard case: polarization zero, t = 0, qbar = q itself
        let q = QuadraticForm::new(g(&[2]), g(&[2]), vec![e(&[1])], BTreeMap::new()).unwrap();
        let t = BilinearForm::zero(g(&[2]), g(&[2]));
        let qbar = decompose_polar(&q, &t).unwrap();
        for x in q.source().enumerate().unwrap() {
            assert_eq!(qbar.eval(&x), q.eval(&x));
        }

        // a non-witness is rejected
        let q = x_squared_form();
        let t = BilinearForm::zero(g(&[2]), g(&[4]));
        assert!(matches!(
            decompose_polar(&q, &t),
            Err(AlgebraError::NotAWitness)
        ));
    }

    #[test]
    fn reconstruction_along_witness() {
        let q = QuadraticForm::new(g(&[2]), g(&[4]), vec![e(&[2])], BTreeMap::new()).unwrap();
        let t = q.is_polar().unwrap();
        let qbar = decompose_polar(&q, &t).unwrap();
        for x in q.source().enumerate().unwrap() {
            let recon = q
                .target()
                .add(&t.eval(&x, &x), &qbar.eval(&x));
            assert_eq!(recon, q.eval(&x));
        }
    }

    #[test]
    fn whitehead_maps() {
        // psi of 1 -> 2 in Z/4 on Z/2: q_1 = 2 with zero polarization
        let f = Mod2Map::new(&g(&[2]), g(&[4]), vec![e(&[2])]).unwrap();
        let q = psi(&f);
        assert_eq!(q.diag(), &[e(&[2])]);
        assert_eq!(phi(&q), BilinearForm::zero(g(&[2]), g(&[4])));

        // psi rejects non-2-torsion values
        assert!(matches!(
            Mod2Map::new(&g(&[2]), g(&[4]), vec![e(&[1])]),
            Err(AlgebraError::NotTwoTorsion)
        ));

        // sym = phi . diag
        let b = BilinearForm::new(
            g(&[2, 2]),
            g(&[4]),
            vec![vec![e(&[2]), e(&[0])], vec![e(&[2]), e(&[2])]],
        )
        .unwrap();
        assert_eq!(phi(&diag_form(&b)), b.symmetrize());
    }

    #[test]
    fn quadratic_table_examples() {
        let z2 = g(&[2]);
        let z4 = g(&[4]);
        let mut table = BTreeMap::new();
        table.insert(e(&[0]), e(&[0]));
        table.insert(e(&[1]), e(&[1]));
        assert!(validate_quadratic_table(&z2, &z4, &table).unwrap());

        // homomorphism with 2-torsion values
        let z2z2 = g(&[2, 2]);
        let mut table = BTreeMap::new();
        for x in z2z2.enumerate().unwrap() {
            let v = e(&[(2 * x.coeffs()[0]).rem_euclid(4)]);
            table.insert(x, v);
        }
        assert!(validate_quadratic_table(&z2z2, &z4, &table).unwrap());

        // q(0) = 1 on Z/3 -> Z/3 fails
        let z3 = g(&[3]);
        let mut table = BTreeMap::new();
        table.insert(e(&[0]), e(&[1]));
        table.insert(e(&[1]), e(&[0]));
        table.insert(e(&[2]), e(&[0]));
        assert!(!validate_quadratic_table(&z3, &z3, &table).unwrap());
    }

    #[test]
    fn quadratic_identities_on_samples() {
        let mut offdiag = BTreeMap::new();
        offdiag.insert((0, 1), e(&[2]));
        let q = QuadraticForm::new(g(&[4, 0]), g(&[4]), vec![e(&[1]), e(&[1])], offdiag).unwrap();
        let gsrc = q.source().clone();
        let m = q.target().clone();
        for x in gsrc.sample_box(2) {
            assert_eq!(q.eval(&gsrc.neg(&x)), q.eval(&x));
            assert_eq!(q.eval(&gsrc.scale(2, &x)), m.scale(4, &q.eval(&x)));
        }
        let pts: Vec<Element> = gsrc.sample_box(1).collect();
        for x in &pts {
            for y in &pts {
                for z in &pts {
                    let lhs = [
                        q.eval(&gsrc.add(&gsrc.add(x, y), z)),
                        q.eval(x),
                        q.eval(y),
                        q.eval(z),
                    ];
                    let rhs = [
                        q.eval(&gsrc.add(y, z)),
                        q.eval(&gsrc.add(z, x)),
                        q.eval(&gsrc.add(x, y)),
                    ];
                    let l = lhs.iter().fold(m.zero(), |a, v| m.add(&a, v));
                    let r = rhs.iter().fold(m.zero(), |a, v| m.add(&a, v));
                    assert_eq!(l, r);
                }
            }
        }
    }
}
