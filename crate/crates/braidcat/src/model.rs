//! The skeletal braided categorical group built from a cocycle, with a
//! numerical coherence checker.
//!
//! Objects are the elements of `G`, every object's automorphisms are `M`,
//! tensor is addition in both, the associator is `h` and the braiding is
//! `c`. The pentagon and hexagon checks re-derive the axioms through the
//! model's accessors instead of delegating to cocycle validation, so the
//! two encodings cross-check each other. The contraction for inverses is
//! fixed to `0`, which makes the categorical signature literally equal to
//! the trace.

use crate::abgroup::{Element, FgAbGroup};
use crate::cocycle::{AbelianCocycle3, CTable, Check, HTable};
use crate::error::AlgebraError;
use crate::forms::QuadraticForm;
use serde::Serialize;

#[derive(Debug, Clone)]
pub struct SkeletalModel {
    kappa: AbelianCocycle3,
}

/// Coherence report for one model.
#[derive(Debug, Clone, Serialize)]
pub struct ModelReport {
    pub exhaustive: bool,
    pub bound: Option<u64>,
    pub pentagon: Check,
    pub hexagon_a: Check,
    pub hexagon_a_prime: Check,
    pub units: Check,
    pub picard: bool,
}

impl ModelReport {
    pub fn all_passed(&self) -> bool {
        self.pentagon.passed()
            && self.hexagon_a.passed()
            && self.hexagon_a_prime.passed()
            && self.units.passed()
    }
}

impl SkeletalModel {
    /// Builds the model, rejecting invalid cocycles with the failing report.
    pub fn build(kappa: AbelianCocycle3, bound: u64) -> Result<Self, AlgebraError> {
        let report = kappa.validate(bound);
        if !report.is_valid() {
            return Err(AlgebraError::InvalidCocycle(report.to_string()));
        }
        Ok(SkeletalModel { kappa })
    }

    /// Builds without validating; the coherence checks below are then the
    /// only guard. Used to test the checker itself against bad data.
    pub fn build_unchecked(kappa: AbelianCocycle3) -> Self {
        SkeletalModel { kappa }
    }

    pub fn kappa(&self) -> &AbelianCocycle3 {
        &self.kappa
    }

    pub fn pi0(&self) -> &FgAbGroup {
        self.kappa.group()
    }

    pub fn pi1(&self) -> &FgAbGroup {
        self.kappa.coeffs()
    }

    pub fn unit(&self) -> Element {
        self.pi0().zero()
    }

    pub fn tensor(&self, x: &Element, y: &Element) -> Element {
        self.pi0().add(x, y)
    }

    pub fn inverse(&self, x: &Element) -> Element {
        self.pi0().neg(x)
    }

    pub fn associator(&self, x: &Element, y: &Element, z: &Element) -> Element {
        self.kappa.h(x, y, z)
    }

    pub fn braiding(&self, x: &Element, y: &Element) -> Element {
        self.kappa.c(x, y)
    }

    /// The self-braiding of `X` contracted against the zero contraction:
    /// `c(X, X)`.
    pub fn signature(&self, x: &Element) -> Element {
        self.braiding(x, x)
    }

    /// The signature as a quadratic form; coincides with the trace.
    pub fn signature_form(&self) -> Result<QuadraticForm, AlgebraError> {
        self.kappa.trace_form()
    }

    pub fn is_picard(&self, bound: u64) -> bool {
        self.kappa.is_symmetric(bound)
    }

    fn domain(&self, bound: u64) -> (Vec<Element>, bool) {
        match self.pi0().enumerate() {
            Ok(it) => (it.collect(), true),
            Err(_) => (self.pi0().sample_box(bound).collect(), false),
        }
    }

    /// Pentagon axiom through the associator accessor:
    /// `a(X,Y,Z) + a(X,Y+Z,W) + a(Y,Z,W) = a(X+Y,Z,W) + a(X,Y,Z+W)`.
    pub fn check_pentagon(&self, bound: u64) -> Check {
        let (dom, _) = self.domain(bound);
        let m = self.pi1();
        for x in &dom {
            for y in &dom {
                for z in &dom {
                    for w in &dom {
                        let lhs = m.add(
                            &m.add(
                                &self.associator(x, y, z),
                                &self.associator(x, &self.tensor(y, z), w),
                            ),
                            &self.associator(y, z, w),
                        );
                        let rhs = m.add(
                            &self.associator(&self.tensor(x, y), z, w),
                            &self.associator(x, y, &self.tensor(z, w)),
                        );
                        if lhs != rhs {
                            return Check::Fail {
                                counterexample: vec![
                                    x.clone(),
                                    y.clone(),
                                    z.clone(),
                                    w.clone(),
                                ],
                            };
                        }
                    }
                }
            }
        }
        Check::Pass
    }

    /// Both hexagon axioms through the associator and braiding accessors.
    pub fn check_hexagons(&self, bound: u64) -> (Check, Check) {
        let (dom, _) = self.domain(bound);
        let m = self.pi1();
        let mut first = Check::Pass;
        'a: for x in &dom {
            for y in &dom {
                for z in &dom {
                    let lhs = m.add(
                        &m.add(
                            &self.associator(y, z, x),
                            &self.braiding(x, &self.tensor(y, z)),
                        ),
                        &self.associator(x, y, z),
                    );
                    let rhs = m.add(
                        &m.add(&self.braiding(x, z), &self.associator(y, x, z)),
                        &self.braiding(x, y),
                    );
                    if lhs != rhs {
                        first = Check::Fail {
                            counterexample: vec![x.clone(), y.clone(), z.clone()],
                        };
                        break 'a;
                    }
                }
            }
        }
        let mut second = Check::Pass;
        'b: for x in &dom {
            for y in &dom {
                for z in &dom {
                    let lhs = m.sub(
                        &m.sub(
                            &self.braiding(&self.tensor(x, y), z),
                            &self.associator(z, x, y),
                        ),
                        &self.associator(x, y, z),
                    );
                    let rhs = m.add(
                        &m.sub(&self.braiding(x, z), &self.associator(x, z, y)),
                        &self.braiding(y, z),
                    );
                    if lhs != rhs {
                        second = Check::Fail {
                            counterexample: vec![x.clone(), y.clone(), z.clone()],
                        };
                        break 'b;
                    }
                }
            }
        }
        (first, second)
    }

    /// Unit coherence: associator and braiding entries involving the unit
    /// object are identities, and every object tensors with its inverse to
    /// the unit.
    pub fn check_units(&self, bound: u64) -> Check {
        let (dom, _) = self.domain(bound);
        let m = self.pi1();
        let unit = self.unit();
        for x in &dom {
            if !self
                .pi0()
                .is_zero(&self.tensor(x, &self.inverse(x)))
            {
                return Check::Fail {
                    counterexample: vec![x.clone()],
                };
            }
            if !m.is_zero(&self.braiding(x, &unit)) || !m.is_zero(&self.braiding(&unit, x)) {
                return Check::Fail {
                    counterexample: vec![x.clone()],
                };
            }
            for y in &dom {
                for (a, b, c) in [(&unit, x, y), (x, &unit, y), (x, y, &unit)] {
                    if !m.is_zero(&self.associator(a, b, c)) {
                        return Check::Fail {
                            counterexample: vec![a.clone(), b.clone(), c.clone()],
                        };
                    }
                }
            }
        }
        Check::Pass
    }

    pub fn check(&self, bound: u64) -> ModelReport {
        let exhaustive = self.pi0().is_finite();
        let (hexagon_a, hexagon_a_prime) = self.check_hexagons(bound);
        ModelReport {
            exhaustive,
            bound: if exhaustive { None } else { Some(bound) },
            pentagon: self.check_pentagon(bound),
            hexagon_a,
            hexagon_a_prime,
            units: self.check_units(bound),
            picard: self.is_picard(bound),
        }
    }
}

/// The worked non-polar instance: `G = Z/2`, `M = Z/4`, `h(1,1,1) = 2`
/// (else 0), `c(x,y) = xy`.
pub fn example_nonpolar() -> AbelianCocycle3 {
    let g = FgAbGroup::new(vec![2]).unwrap();
    let m = FgAbGroup::new(vec![4]).unwrap();
    let one = Element::new(vec![1]);
    let mut h = HTable::new();
    h.insert((one.clone(), one.clone(), one.clone()), Element::new(vec![2]));
    let mut c = CTable::new();
    c.insert((one.clone(), one), Element::new(vec![1]));
    AbelianCocycle3::from_tables(g, m, h, c).expect("built-in tables are normalized")
}

/// The Koszul sign line: `G = Z`, `M = Z/2`, `h = 0`,
/// `c(x,y) = (x mod 2)(y mod 2)`.
pub fn example_koszul() -> AbelianCocycle3 {
    let g = FgAbGroup::new(vec![0]).unwrap();
    let m = FgAbGroup::new(vec![2]).unwrap();
    let bilinear = crate::forms::BilinearForm::zero(g, m);
    AbelianCocycle3::structured(bilinear, vec![Element::new(vec![1])])
        .expect("correction value is 2-torsion")
}
