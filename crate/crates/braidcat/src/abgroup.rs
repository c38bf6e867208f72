//! Finitely generated abelian groups given by explicit generator orders.
//!
//! A group is a list of orders `n_1..n_r` with `n_i = 0` for a free
//! generator and `n_i >= 2` for a torsion one. Elements are coefficient
//! vectors kept in reduced form (`0 <= c_i < n_i` on torsion indices).
//! Groups are deliberately not brought to Smith normal form; every
//! construction downstream works per-generator on the given presentation.

use crate::error::AlgebraError;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawGroup")]
pub struct FgAbGroup {
    orders: Vec<u64>,
}

#[derive(Deserialize)]
struct RawGroup {
    orders: Vec<u64>,
}

impl TryFrom<RawGroup> for FgAbGroup {
    type Error = AlgebraError;
    fn try_from(raw: RawGroup) -> Result<Self, AlgebraError> {
        FgAbGroup::new(raw.orders)
    }
}

/// A group element as a coefficient vector over the group's generators.
///
/// Ordering and hashing are plain lexicographic on the coefficients, which
/// is the order used everywhere a "lexicographically least" choice is made.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Element {
    coeffs: Vec<i64>,
}

impl Element {
    pub fn new(coeffs: Vec<i64>) -> Self {
        Element { coeffs }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }
}

fn reduce_coeff(order: u64, c: i128) -> i64 {
    if order == 0 {
        i64::try_from(c).expect("free coefficient overflow")
    } else {
        (c.rem_euclid(order as i128)) as i64
    }
}

impl FgAbGroup {
    pub fn new(orders: Vec<u64>) -> Result<Self, AlgebraError> {
        if let Some(i) = orders.iter().position(|&n| n == 1) {
            return Err(AlgebraError::UnitOrder(i));
        }
        Ok(FgAbGroup { orders })
    }

    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    pub fn rank(&self) -> usize {
        self.orders.len()
    }

    pub fn is_finite(&self) -> bool {
        self.orders.iter().all(|&n| n != 0)
    }

    pub fn cardinality(&self) -> Option<u128> {
        self.orders
            .iter()
            .try_fold(1u128, |acc, &n| if n == 0 { None } else { acc.checked_mul(n as u128) })
    }

    pub fn zero(&self) -> Element {
        Element::new(vec![0; self.rank()])
    }

    pub fn generator(&self, i: usize) -> Element {
        let mut coeffs = vec![0; self.rank()];
        coeffs[i] = 1;
        self.reduce(&Element::new(coeffs))
    }

    /// Builds an element from raw coefficients, checking the rank.
    pub fn element(&self, coeffs: Vec<i64>) -> Result<Element, AlgebraError> {
        if coeffs.len() != self.rank() {
            return Err(AlgebraError::RankMismatch {
                expected: self.rank(),
                got: coeffs.len(),
            });
        }
        Ok(self.reduce(&Element::new(coeffs)))
    }

    fn assert_member(&self, x: &Element) {
        assert_eq!(x.coeffs.len(), self.rank(), "element does not belong to this group");
    }

    pub fn reduce(&self, x: &Element) -> Element {
        self.assert_member(x);
        Element::new(
            self.orders
                .iter()
                .zip(&x.coeffs)
                .map(|(&n, &c)| reduce_coeff(n, c as i128))
                .collect(),
        )
    }

    pub fn add(&self, x: &Element, y: &Element) -> Element {
        self.assert_member(x);
        self.assert_member(y);
        Element::new(
            self.orders
                .iter()
                .zip(x.coeffs.iter().zip(&y.coeffs))
                .map(|(&n, (&a, &b))| reduce_coeff(n, a as i128 + b as i128))
                .collect(),
        )
    }

    pub fn neg(&self, x: &Element) -> Element {
        self.assert_member(x);
        Element::new(
            self.orders
                .iter()
                .zip(&x.coeffs)
                .map(|(&n, &c)| reduce_coeff(n, -(c as i128)))
                .collect(),
        )
    }

    pub fn sub(&self, x: &Element, y: &Element) -> Element {
        self.add(x, &self.neg(y))
    }

    pub fn scale(&self, s: i128, x: &Element) -> Element {
        self.assert_member(x);
        Element::new(
            self.orders
                .iter()
                .zip(&x.coeffs)
                .map(|(&n, &c)| reduce_coeff(n, s * c as i128))
                .collect(),
        )
    }

    pub fn is_zero(&self, x: &Element) -> bool {
        self.reduce(x).coeffs.iter().all(|&c| c == 0)
    }

    /// Yields every element of a finite group exactly once, in lexicographic
    /// coefficient order.
    pub fn enumerate(&self) -> Result<CoeffProduct, AlgebraError> {
        if !self.is_finite() {
            return Err(AlgebraError::InfiniteGroup);
        }
        let axes = self
            .orders
            .iter()
            .map(|&n| (0..n as i64).collect())
            .collect();
        Ok(CoeffProduct::new(axes))
    }

    /// Yields all reduced elements whose free coefficients lie in
    /// `[-bound, bound]`; torsion coordinates run over their full range.
    pub fn sample_box(&self, bound: u64) -> CoeffProduct {
        let b = bound as i64;
        let axes = self
            .orders
            .iter()
            .map(|&n| {
                if n == 0 {
                    (-b..=b).collect()
                } else {
                    (0..n as i64).collect()
                }
            })
            .collect();
        CoeffProduct::new(axes)
    }

    /// All `m` with `n * m = 0`; finite even when the group has free part.
    pub fn torsion_elements(&self, n: u64) -> Vec<Element> {
        assert!(n >= 1, "torsion bound must be positive");
        let axes = self
            .orders
            .iter()
            .map(|&order| {
                if order == 0 {
                    vec![0]
                } else {
                    let g = gcd(n, order);
                    let step = (order / g) as i64;
                    (0..g as i64).map(|k| k * step).collect()
                }
            })
            .collect();
        CoeffProduct::new(axes).collect()
    }

    /// The chosen basis of the F2-vector space G/2G: a generator index
    /// contributes iff its order is even or zero (odd-order generators die
    /// in G/2G).
    pub fn mod2_basis(&self) -> Mod2Basis {
        let basis_indices = self
            .orders
            .iter()
            .enumerate()
            .filter(|&(_, &n)| n == 0 || n % 2 == 0)
            .map(|(i, _)| i)
            .collect();
        Mod2Basis {
            group: self.clone(),
            basis_indices,
        }
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Lexicographic product iterator over per-coordinate coefficient lists.
#[derive(Debug, Clone)]
pub struct CoeffProduct {
    axes: Vec<Vec<i64>>,
    state: Option<Vec<usize>>,
}

impl CoeffProduct {
    fn new(axes: Vec<Vec<i64>>) -> Self {
        let state = if axes.iter().all(|a| !a.is_empty()) {
            Some(vec![0; axes.len()])
        } else {
            None
        };
        CoeffProduct { axes, state }
    }
}

impl Iterator for CoeffProduct {
    type Item = Element;

    fn next(&mut self) -> Option<Element> {
        let state = self.state.as_mut()?;
        let item = Element::new(
            state
                .iter()
                .zip(&self.axes)
                .map(|(&i, axis)| axis[i])
                .collect(),
        );
        // advance, last coordinate fastest
        let mut done = true;
        for i in (0..self.axes.len()).rev() {
            state[i] += 1;
            if state[i] < self.axes[i].len() {
                done = false;
                break;
            }
            state[i] = 0;
        }
        if done {
            self.state = None;
        }
        Some(item)
    }
}

/// Reduction data for G/2G with respect to the chosen generator basis.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mod2Basis {
    group: FgAbGroup,
    basis_indices: Vec<usize>,
}

impl Mod2Basis {
    pub fn group(&self) -> &FgAbGroup {
        &self.group
    }

    pub fn basis_indices(&self) -> &[usize] {
        &self.basis_indices
    }

    pub fn dim(&self) -> usize {
        self.basis_indices.len()
    }

    /// The image of `x` in G/2G, as an F2-vector over the basis indices.
    pub fn reduction(&self, x: &Element) -> Vec<u8> {
        self.basis_indices
            .iter()
            .map(|&i| (x.coeffs()[i].rem_euclid(2)) as u8)
            .collect()
    }
}

/// A homomorphism given by the images of the source generators.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Homomorphism {
    source: FgAbGroup,
    target: FgAbGroup,
    images: Vec<Element>,
}

impl Homomorphism {
    /// Checks well-definedness: each torsion source generator of order `n`
    /// must map to an element killed by `n`.
    pub fn new(
        source: FgAbGroup,
        target: FgAbGroup,
        images: Vec<Element>,
    ) -> Result<Self, AlgebraError> {
        if images.len() != source.rank() {
            return Err(AlgebraError::Dimension(format!(
                "expected {} generator images, got {}",
                source.rank(),
                images.len()
            )));
        }
        let images: Vec<Element> = images.iter().map(|e| target.reduce(e)).collect();
        for (j, img) in images.iter().enumerate() {
            let n = source.orders()[j];
            if n != 0 && !target.is_zero(&target.scale(n as i128, img)) {
                return Err(AlgebraError::Dimension(format!(
                    "image of generator {j} is not killed by its order {n}"
                )));
            }
        }
        Ok(Homomorphism {
            source,
            target,
            images,
        })
    }

    pub fn source(&self) -> &FgAbGroup {
        &self.source
    }

    pub fn target(&self) -> &FgAbGroup {
        &self.target
    }

    pub fn images(&self) -> &[Element] {
        &self.images
    }

    pub fn apply(&self, x: &Element) -> Element {
        let mut acc = self.target.zero();
        for (j, img) in self.images.iter().enumerate() {
            acc = self
                .target
                .add(&acc, &self.target.scale(x.coeffs()[j] as i128, img));
        }
        acc
    }
}
