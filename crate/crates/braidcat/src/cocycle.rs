//! Abelian and symmetric 3-cocycles, coboundaries, the trace to quadratic
//! forms, cohomology-class comparison, and the brute-force enumeration
//! oracle.
//!
//! A cocycle is a pair `(h, c)` with `h : G^3 -> M` a normalized group
//! 3-cocycle and `c : G^2 -> M` satisfying the two hexagon identities
//! (A) and (A'). Table backing stores only entries with all arguments
//! nonzero (normalization forces the rest); structured backing is
//! `h = 0` with `c` a bilinear part plus an F2 correction term, evaluable
//! on infinite groups.

use crate::abgroup::{Element, FgAbGroup};
use crate::error::AlgebraError;
use crate::forms::{BilinearForm, Mod2Map, QuadraticForm};
use rayon::prelude::*;
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;

/// Default sample-box bound for validating formula-backed cocycles.
pub const DEFAULT_BOX: u64 = 3;

pub type HTable = BTreeMap<(Element, Element, Element), Element>;
pub type CTable = BTreeMap<(Element, Element), Element>;

#[derive(Debug, Clone, PartialEq, Eq)]
enum Backing {
    Table { h: HTable, c: CTable },
    Structured { bilinear: BilinearForm, correction: Mod2Map },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianCocycle3 {
    group: FgAbGroup,
    coeffs: FgAbGroup,
    backing: Backing,
}

/// Outcome of one identity check, carrying a counterexample on failure.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "pass")]
pub enum Check {
    #[serde(rename = "true")]
    Pass,
    #[serde(rename = "false")]
    Fail { counterexample: Vec<Element> },
}

impl Check {
    pub fn passed(&self) -> bool {
        matches!(self, Check::Pass)
    }
}

/// Validation report; `exhaustive` records whether the domain was the whole
/// group or a sample box of the recorded bound.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub exhaustive: bool,
    pub bound: Option<u64>,
    pub group_cocycle: Check,
    pub normalized: Check,
    pub identity_a: Check,
    pub identity_a_prime: Check,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.group_cocycle.passed()
            && self.normalized.passed()
            && self.identity_a.passed()
            && self.identity_a_prime.passed()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let flag = |c: &Check| if c.passed() { "ok" } else { "FAIL" };
        write!(
            f,
            "group_cocycle={} normalized={} identity_A={} identity_A'={}",
            flag(&self.group_cocycle),
            flag(&self.normalized),
            flag(&self.identity_a),
            flag(&self.identity_a_prime)
        )
    }
}

impl AbelianCocycle3 {
    /// A table-backed cocycle. Keys are reduced; entries whose value is
    /// zero are dropped; a key with a zero argument and nonzero value is
    /// rejected (normalization would be violated).
    pub fn from_tables(
        group: FgAbGroup,
        coeffs: FgAbGroup,
        h: HTable,
        c: CTable,
    ) -> Result<Self, AlgebraError> {
        let mut h_canon = HTable::new();
        for ((x, y, z), v) in h {
            let key = (group.reduce(&x), group.reduce(&y), group.reduce(&z));
            let v = coeffs.reduce(&v);
            if coeffs.is_zero(&v) {
                continue;
            }
            if group.is_zero(&key.0) || group.is_zero(&key.1) || group.is_zero(&key.2) {
                return Err(AlgebraError::NotNormalized);
            }
            h_canon.insert(key, v);
        }
        let mut c_canon = CTable::new();
        for ((x, y), v) in c {
            let key = (group.reduce(&x), group.reduce(&y));
            let v = coeffs.reduce(&v);
            if coeffs.is_zero(&v) {
                continue;
            }
            if group.is_zero(&key.0) || group.is_zero(&key.1) {
                return Err(AlgebraError::NotNormalized);
            }
            c_canon.insert(key, v);
        }
        Ok(AbelianCocycle3 {
            group,
            coeffs,
            backing: Backing::Table {
                h: h_canon,
                c: c_canon,
            },
        })
    }

    /// A formula-backed cocycle with `h = 0` and
    /// `c(x,y) = t(x,y) + sum_i xbar_i ybar_i corr_i`.
    pub fn structured(
        bilinear: BilinearForm,
        correction: Vec<Element>,
    ) -> Result<Self, AlgebraError> {
        let group = bilinear.source().clone();
        let coeffs = bilinear.target().clone();
        let correction = Mod2Map::new(&group, coeffs.clone(), correction)?;
        Ok(AbelianCocycle3 {
            group,
            coeffs,
            backing: Backing::Structured {
                bilinear,
                correction,
            },
        })
    }

    pub fn zero(group: FgAbGroup, coeffs: FgAbGroup) -> Self {
        AbelianCocycle3 {
            group,
            coeffs,
            backing: Backing::Table {
                h: HTable::new(),
                c: CTable::new(),
            },
        }
    }

    pub fn group(&self) -> &FgAbGroup {
        &self.group
    }

    pub fn coeffs(&self) -> &FgAbGroup {
        &self.coeffs
    }

    pub fn is_structured(&self) -> bool {
        matches!(self.backing, Backing::Structured { .. })
    }

    /// The canonical backing tables, when table-backed.
    pub fn table_parts(&self) -> Option<(&HTable, &CTable)> {
        match &self.backing {
            Backing::Table { h, c } => Some((h, c)),
            Backing::Structured { .. } => None,
        }
    }

    pub fn structured_parts(&self) -> Option<(&BilinearForm, &Mod2Map)> {
        match &self.backing {
            Backing::Structured {
                bilinear,
                correction,
            } => Some((bilinear, correction)),
            Backing::Table { .. } => None,
        }
    }

    pub fn h(&self, x: &Element, y: &Element, z: &Element) -> Element {
        match &self.backing {
            Backing::Table { h, .. } => {
                let key = (
                    self.group.reduce(x),
                    self.group.reduce(y),
                    self.group.reduce(z),
                );
                h.get(&key).cloned().unwrap_or_else(|| self.coeffs.zero())
            }
            Backing::Structured { .. } => self.coeffs.zero(),
        }
    }

    pub fn c(&self, x: &Element, y: &Element) -> Element {
        match &self.backing {
            Backing::Table { c, .. } => {
                let key = (self.group.reduce(x), self.group.reduce(y));
                c.get(&key).cloned().unwrap_or_else(|| self.coeffs.zero())
            }
            Backing::Structured {
                bilinear,
                correction,
            } => {
                let mut acc = bilinear.eval(x, y);
                let bx = correction.basis().reduction(x);
                let by = correction.basis().reduction(y);
                for ((xb, yb), v) in bx.iter().zip(&by).zip(correction.values()) {
                    if *xb == 1 && *yb == 1 {
                        acc = self.coeffs.add(&acc, v);
                    }
                }
                acc
            }
        }
    }

    fn domain(&self, bound: u64) -> (Vec<Element>, bool) {
        match self.group.enumerate() {
            Ok(it) => (it.collect(), true),
            Err(_) => (self.group.sample_box(bound).collect(), false),
        }
    }

    /// Checks the group 3-cocycle identity, normalization and the hexagon
    /// identities (A) and (A'), exhaustively on finite groups and over a
    /// sample box otherwise.
    pub fn validate(&self, bound: u64) -> ValidationReport {
        let (dom, exhaustive) = self.domain(bound);
        let g = &self.group;
        let m = &self.coeffs;

        let mut group_cocycle = Check::Pass;
        'outer: for u in &dom {
            for x in &dom {
                for y in &dom {
                    for z in &dom {
                        let lhs = m.add(
                            &m.add(&self.h(x, y, z), &self.h(u, &g.add(x, y), z)),
                            &self.h(u, x, y),
                        );
                        let rhs = m.add(&self.h(u, x, &g.add(y, z)), &self.h(&g.add(u, x), y, z));
                        if lhs != rhs {
                            group_cocycle = Check::Fail {
                                counterexample: vec![u.clone(), x.clone(), y.clone(), z.clone()],
                            };
                            break 'outer;
                        }
                    }
                }
            }
        }

        let mut normalized = Check::Pass;
        'norm: for x in &dom {
            for z in &dom {
                if !m.is_zero(&self.h(x, &g.zero(), z)) {
                    normalized = Check::Fail {
                        counterexample: vec![x.clone(), g.zero(), z.clone()],
                    };
                    break 'norm;
                }
            }
        }

        let mut identity_a = Check::Pass;
        'a: for x in &dom {
            for y in &dom {
                for z in &dom {
                    let lhs = m.add(
                        &m.add(&self.h(y, z, x), &self.c(x, &g.add(y, z))),
                        &self.h(x, y, z),
                    );
                    let rhs = m.add(&m.add(&self.c(x, z), &self.h(y, x, z)), &self.c(x, y));
                    if lhs != rhs {
                        identity_a = Check::Fail {
                            counterexample: vec![x.clone(), y.clone(), z.clone()],
                        };
                        break 'a;
                    }
                }
            }
        }

        let mut identity_a_prime = Check::Pass;
        'ap: for x in &dom {
            for y in &dom {
                for z in &dom {
                    let lhs = m.sub(
                        &m.sub(&self.c(&g.add(x, y), z), &self.h(z, x, y)),
                        &self.h(x, y, z),
                    );
                    let rhs = m.add(
                        &m.sub(&self.c(x, z), &self.h(x, z, y)),
                        &self.c(y, z),
                    );
                    if lhs != rhs {
                        identity_a_prime = Check::Fail {
                            counterexample: vec![x.clone(), y.clone(), z.clone()],
                        };
                        break 'ap;
                    }
                }
            }
        }

        ValidationReport {
            exhaustive,
            bound: if exhaustive { None } else { Some(bound) },
            group_cocycle,
            normalized,
            identity_a,
            identity_a_prime,
        }
    }

    /// True iff `c(x,y) + c(y,x) = 0` on the (enumerated or sampled) domain.
    pub fn is_symmetric(&self, bound: u64) -> bool {
        let (dom, _) = self.domain(bound);
        dom.iter().all(|x| {
            dom.iter().all(|y| {
                self.coeffs
                    .is_zero(&self.coeffs.add(&self.c(x, y), &self.c(y, x)))
            })
        })
    }

    /// The trace `x -> c(x,x)` as a generator-backed quadratic form.
    pub fn trace_form(&self) -> Result<QuadraticForm, AlgebraError> {
        let g = &self.group;
        let diag: Vec<Element> = (0..g.rank())
            .map(|i| {
                let gi = g.generator(i);
                self.c(&gi, &gi)
            })
            .collect();
        let mut offdiag = BTreeMap::new();
        for i in 0..g.rank() {
            for j in (i + 1)..g.rank() {
                let gi = g.generator(i);
                let gj = g.generator(j);
                let w = self.coeffs.add(&self.c(&gi, &gj), &self.c(&gj, &gi));
                offdiag.insert((i, j), w);
            }
        }
        QuadraticForm::new(g.clone(), self.coeffs.clone(), diag, offdiag)
    }

    /// The trace as a full value table (finite groups only).
    pub fn trace_table(&self) -> Result<BTreeMap<Element, Element>, AlgebraError> {
        Ok(self
            .group
            .enumerate()?
            .map(|x| {
                let v = self.c(&x, &x);
                (x, v)
            })
            .collect())
    }

    /// `W(x,y) := c(x,y) + c(y,x)` as a bilinear form read off generator
    /// pairs, cross-checked pointwise against the defining formula.
    pub fn w_form(&self) -> Result<BilinearForm, AlgebraError> {
        let g = &self.group;
        let m = &self.coeffs;
        let r = g.rank();
        let matrix: Vec<Vec<Element>> = (0..r)
            .map(|i| {
                (0..r)
                    .map(|j| {
                        let gi = g.generator(i);
                        let gj = g.generator(j);
                        m.add(&self.c(&gi, &gj), &self.c(&gj, &gi))
                    })
                    .collect()
            })
            .collect();
        let w = BilinearForm::new(g.clone(), m.clone(), matrix)
            .map_err(|_| AlgebraError::InvalidCocycle("W is not well-defined".into()))?;
        let elems: Vec<Element> = g.enumerate()?.collect();
        for x in &elems {
            for y in &elems {
                let direct = m.add(&self.c(x, y), &self.c(y, x));
                if w.eval(x, y) != direct {
                    return Err(AlgebraError::NotBilinear {
                        x: x.coeffs().to_vec(),
                        y: y.coeffs().to_vec(),
                    });
                }
            }
        }
        Ok(w)
    }

    /// Realizes the cocycle as full tables on a finite group.
    pub fn to_tables(&self) -> Result<(HTable, CTable), AlgebraError> {
        let nz: Vec<Element> = self
            .group
            .enumerate()?
            .filter(|x| !self.group.is_zero(x))
            .collect();
        let mut h = HTable::new();
        for x in &nz {
            for y in &nz {
                for z in &nz {
                    let v = self.h(x, y, z);
                    if !self.coeffs.is_zero(&v) {
                        h.insert((x.clone(), y.clone(), z.clone()), v);
                    }
                }
            }
        }
        let mut c = CTable::new();
        for x in &nz {
            for y in &nz {
                let v = self.c(x, y);
                if !self.coeffs.is_zero(&v) {
                    c.insert((x.clone(), y.clone()), v);
                }
            }
        }
        Ok((h, c))
    }

    /// Componentwise sum, realized on tables (finite groups).
    pub fn add(&self, other: &AbelianCocycle3) -> Result<AbelianCocycle3, AlgebraError> {
        self.combine(other, false)
    }

    /// Componentwise difference, realized on tables (finite groups).
    pub fn sub(&self, other: &AbelianCocycle3) -> Result<AbelianCocycle3, AlgebraError> {
        self.combine(other, true)
    }

    fn combine(
        &self,
        other: &AbelianCocycle3,
        negate: bool,
    ) -> Result<AbelianCocycle3, AlgebraError> {
        if self.group != other.group || self.coeffs != other.coeffs {
            return Err(AlgebraError::Dimension(
                "cocycles live over different groups".into(),
            ));
        }
        let (h1, c1) = self.to_tables()?;
        let (h2, c2) = other.to_tables()?;
        let m = &self.coeffs;
        let comb = |a: &Element, b: &Element| if negate { m.sub(a, b) } else { m.add(a, b) };
        let mut h = HTable::new();
        for key in h1.keys().chain(h2.keys()) {
            let a = h1.get(key).cloned().unwrap_or_else(|| m.zero());
            let b = h2.get(key).cloned().unwrap_or_else(|| m.zero());
            h.insert(key.clone(), comb(&a, &b));
        }
        let mut c = CTable::new();
        for key in c1.keys().chain(c2.keys()) {
            let a = c1.get(key).cloned().unwrap_or_else(|| m.zero());
            let b = c2.get(key).cloned().unwrap_or_else(|| m.zero());
            c.insert(key.clone(), comb(&a, &b));
        }
        AbelianCocycle3::from_tables(self.group.clone(), self.coeffs.clone(), h, c)
    }
}

/// A normalized map `k : G^2 -> M` presenting a coboundary.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoboundaryWitness {
    group: FgAbGroup,
    coeffs: FgAbGroup,
    table: CTable,
}

impl CoboundaryWitness {
    pub fn new(
        group: FgAbGroup,
        coeffs: FgAbGroup,
        table: CTable,
    ) -> Result<Self, AlgebraError> {
        let mut canon = CTable::new();
        for ((x, y), v) in table {
            let key = (group.reduce(&x), group.reduce(&y));
            let v = coeffs.reduce(&v);
            if coeffs.is_zero(&v) {
                continue;
            }
            if group.is_zero(&key.0) || group.is_zero(&key.1) {
                return Err(AlgebraError::NotNormalized);
            }
            canon.insert(key, v);
        }
        Ok(CoboundaryWitness {
            group,
            coeffs,
            table: canon,
        })
    }

    pub fn group(&self) -> &FgAbGroup {
        &self.group
    }

    pub fn coeffs(&self) -> &FgAbGroup {
        &self.coeffs
    }

    pub fn table(&self) -> &CTable {
        &self.table
    }

    pub fn eval(&self, x: &Element, y: &Element) -> Element {
        let key = (self.group.reduce(x), self.group.reduce(y));
        self.table
            .get(&key)
            .cloned()
            .unwrap_or_else(|| self.coeffs.zero())
    }

    /// The abelian 3-coboundary `(dk, k - k^T)` presented by this witness.
    pub fn coboundary(&self) -> Result<AbelianCocycle3, AlgebraError> {
        let g = &self.group;
        let m = &self.coeffs;
        let nz: Vec<Element> = g.enumerate()?.filter(|x| !g.is_zero(x)).collect();
        let mut h = HTable::new();
        for x in &nz {
            for y in &nz {
                for z in &nz {
                    let v = m.add(
                        &m.sub(&self.eval(y, z), &self.eval(&g.add(x, y), z)),
                        &m.sub(&self.eval(x, &g.add(y, z)), &self.eval(x, y)),
                    );
                    if !m.is_zero(&v) {
                        h.insert((x.clone(), y.clone(), z.clone()), v);
                    }
                }
            }
        }
        let mut c = CTable::new();
        for x in &nz {
            for y in &nz {
                let v = m.sub(&self.eval(x, y), &self.eval(y, x));
                if !m.is_zero(&v) {
                    c.insert((x.clone(), y.clone()), v);
                }
            }
        }
        AbelianCocycle3::from_tables(g.clone(), m.clone(), h, c)
    }
}

/// Fast cohomology-class comparison: classes coincide iff traces agree
/// pointwise (the trace is injective on cohomology). The exhaustive witness
/// search below is the independent oracle for this shortcut.
pub fn cohomologous(
    kappa1: &AbelianCocycle3,
    kappa2: &AbelianCocycle3,
    bound: u64,
) -> Result<bool, AlgebraError> {
    if kappa1.group() != kappa2.group() || kappa1.coeffs() != kappa2.coeffs() {
        return Err(AlgebraError::Dimension(
            "cocycles live over different groups".into(),
        ));
    }
    let (dom, _) = kappa1.domain(bound);
    Ok(dom.iter().all(|x| kappa1.c(x, x) == kappa2.c(x, x)))
}

/// Exhaustive search for a normalized `k` with
/// `kappa1 - kappa2 = (dk, k - k^T)` componentwise. Finite groups only;
/// the candidate space is `|M|^((|G|-1)^2)` and must stay within `guard`.
pub fn find_coboundary_witness(
    kappa1: &AbelianCocycle3,
    kappa2: &AbelianCocycle3,
    guard: u128,
) -> Result<Option<CoboundaryWitness>, AlgebraError> {
    let g = kappa1.group().clone();
    let m = kappa1.coeffs().clone();
    if kappa2.group() != &g || kappa2.coeffs() != &m {
        return Err(AlgebraError::Dimension(
            "cocycles live over different groups".into(),
        ));
    }
    let elems: Vec<Element> = g.enumerate()?.collect();
    let nz: Vec<Element> = elems.iter().filter(|x| !g.is_zero(x)).cloned().collect();
    let m_elems: Vec<Element> = m.enumerate()?.collect();
    let keys: Vec<(Element, Element)> = nz
        .iter()
        .flat_map(|x| nz.iter().map(move |y| (x.clone(), y.clone())))
        .collect();
    let candidates = (m_elems.len() as u128)
        .checked_pow(keys.len() as u32)
        .unwrap_or(u128::MAX);
    if candidates > guard {
        return Err(AlgebraError::SearchSpaceTooLarge { candidates, guard });
    }

    // target differences
    let d_h = |x: &Element, y: &Element, z: &Element| {
        m.sub(&kappa1.h(x, y, z), &kappa2.h(x, y, z))
    };
    let d_c = |x: &Element, y: &Element| m.sub(&kappa1.c(x, y), &kappa2.c(x, y));

    let eval_k = |tbl: &CTable, x: &Element, y: &Element| {
        tbl.get(&(x.clone(), y.clone()))
            .cloned()
            .unwrap_or_else(|| m.zero())
    };

    let mut digits = vec![0usize; keys.len()];
    loop {
        let tbl: CTable = keys
            .iter()
            .zip(&digits)
            .filter(|(_, &d)| !m.is_zero(&m_elems[d]))
            .map(|(k, &d)| (k.clone(), m_elems[d].clone()))
            .collect();
        let mut ok = true;
        'check: for x in &elems {
            for y in &elems {
                if eval_k(&tbl, x, y) != m.add(&eval_k(&tbl, y, x), &d_c(x, y)) {
                    ok = false;
                    break 'check;
                }
                for z in &elems {
                    let dk = m.add(
                        &m.sub(&eval_k(&tbl, y, z), &eval_k(&tbl, &g.add(x, y), z)),
                        &m.sub(&eval_k(&tbl, x, &g.add(y, z)), &eval_k(&tbl, x, y)),
                    );
                    if dk != d_h(x, y, z) {
                        ok = false;
                        break 'check;
                    }
                }
            }
        }
        if ok {
            return Ok(Some(CoboundaryWitness {
                group: g,
                coeffs: m,
                table: tbl,
            }));
        }
        let mut done = true;
        for i in (0..digits.len()).rev() {
            digits[i] += 1;
            if digits[i] < m_elems.len() {
                done = false;
                break;
            }
            digits[i] = 0;
        }
        if done {
            return Ok(None);
        }
    }
}

/// All valid abelian 3-cocycles on finite `(G, M)` as tables, in
/// lexicographic candidate order. Free entries are the all-nonzero
/// argument tuples; identities are applied in two pruning stages (the
/// group cocycle identity filters `h`-tables before any `c`-table is
/// considered).
pub fn enumerate_cocycles(
    group: &FgAbGroup,
    coeffs: &FgAbGroup,
    guard: u128,
) -> Result<Vec<AbelianCocycle3>, AlgebraError> {
    let elems: Vec<Element> = group.enumerate()?.collect();
    let nz: Vec<Element> = elems.iter().filter(|x| !group.is_zero(x)).cloned().collect();
    let m_elems: Vec<Element> = coeffs.enumerate()?.collect();
    let mm = m_elems.len() as u128;

    let mut h_keys: Vec<(Element, Element, Element)> = Vec::new();
    let mut c_keys: Vec<(Element, Element)> = Vec::new();
    for x in &nz {
        for y in &nz {
            for z in &nz {
                h_keys.push((x.clone(), y.clone(), z.clone()));
            }
            c_keys.push((x.clone(), y.clone()));
        }
    }

    let total = mm
        .checked_pow((h_keys.len() + c_keys.len()) as u32)
        .unwrap_or(u128::MAX);
    if total > guard {
        return Err(AlgebraError::SearchSpaceTooLarge {
            candidates: total,
            guard,
        });
    }

    let h_count = mm.pow(h_keys.len() as u32) as u64;
    let c_count = mm.pow(c_keys.len() as u32) as u64;

    let decode_h = |idx: u64| -> HTable {
        let mut rem = idx;
        let mut tbl = HTable::new();
        for key in h_keys.iter().rev() {
            let d = (rem % mm as u64) as usize;
            rem /= mm as u64;
            if !coeffs.is_zero(&m_elems[d]) {
                tbl.insert(key.clone(), m_elems[d].clone());
            }
        }
        tbl
    };
    let decode_c = |idx: u64| -> CTable {
        let mut rem = idx;
        let mut tbl = CTable::new();
        for key in c_keys.iter().rev() {
            let d = (rem % mm as u64) as usize;
            rem /= mm as u64;
            if !coeffs.is_zero(&m_elems[d]) {
                tbl.insert(key.clone(), m_elems[d].clone());
            }
        }
        tbl
    };

    let results: Vec<Vec<AbelianCocycle3>> = (0..h_count)
        .into_par_iter()
        .map(|hi| {
            let h = decode_h(hi);
            let kappa_h = AbelianCocycle3 {
                group: group.clone(),
                coeffs: coeffs.clone(),
                backing: Backing::Table {
                    h: h.clone(),
                    c: CTable::new(),
                },
            };
            // prune: group cocycle identity only involves h
            let cocycle_ok = elems.iter().all(|u| {
                elems.iter().all(|x| {
                    elems.iter().all(|y| {
                        elems.iter().all(|z| {
                            let lhs = coeffs.add(
                                &coeffs.add(
                                    &kappa_h.h(x, y, z),
                                    &kappa_h.h(u, &group.add(x, y), z),
                                ),
                                &kappa_h.h(u, x, y),
                            );
                            let rhs = coeffs.add(
                                &kappa_h.h(u, x, &group.add(y, z)),
                                &kappa_h.h(&group.add(u, x), y, z),
                            );
                            lhs == rhs
                        })
                    })
                })
            });
            if !cocycle_ok {
                return Vec::new();
            }
            (0..c_count)
                .filter_map(|ci| {
                    let c = decode_c(ci);
                    let kappa = AbelianCocycle3 {
                        group: group.clone(),
                        coeffs: coeffs.clone(),
                        backing: Backing::Table {
                            h: h.clone(),
                            c,
                        },
                    };
                    let hex_ok = elems.iter().all(|x| {
                        elems.iter().all(|y| {
                            elems.iter().all(|z| {
                                let a_lhs = coeffs.add(
                                    &coeffs.add(
                                        &kappa.h(y, z, x),
                                        &kappa.c(x, &group.add(y, z)),
                                    ),
                                    &kappa.h(x, y, z),
                                );
                                let a_rhs = coeffs.add(
                                    &coeffs.add(&kappa.c(x, z), &kappa.h(y, x, z)),
                                    &kappa.c(x, y),
                                );
                                if a_lhs != a_rhs {
                                    return false;
                                }
                                let ap_lhs = coeffs.sub(
                                    &coeffs.sub(
                                        &kappa.c(&group.add(x, y), z),
                                        &kappa.h(z, x, y),
                                    ),
                                    &kappa.h(x, y, z),
                                );
                                let ap_rhs = coeffs.add(
                                    &coeffs.sub(&kappa.c(x, z), &kappa.h(x, z, y)),
                                    &kappa.c(y, z),
                                );
                                ap_lhs == ap_rhs
                            })
                        })
                    });
                    hex_ok.then_some(kappa)
                })
                .collect()
        })
        .collect();

    Ok(results.into_iter().flatten().collect())
}

/// Enumerated cocycles grouped by trace, plus the full set of valid
/// quadratic-form tables on `(G, M)` for surjectivity checks.
#[derive(Debug, Clone)]
pub struct Classification {
    pub cocycles: Vec<AbelianCocycle3>,
    /// trace table -> indices into `cocycles`
    pub classes: BTreeMap<BTreeMap<Element, Element>, Vec<usize>>,
    /// all tables passing the quadratic characterization (with q(0) = 0,
    /// which the three-variable identity forces)
    pub quadratic_tables: Vec<BTreeMap<Element, Element>>,
}

impl Classification {
    pub fn distinct_traces(&self) -> usize {
        self.classes.len()
    }

    /// Every valid quadratic-form table is the trace of some cocycle.
    pub fn is_surjective(&self) -> bool {
        self.quadratic_tables
            .iter()
            .all(|t| self.classes.contains_key(t))
    }
}

pub fn classify(
    group: &FgAbGroup,
    coeffs: &FgAbGroup,
    guard: u128,
) -> Result<Classification, AlgebraError> {
    let cocycles = enumerate_cocycles(group, coeffs, guard)?;
    let mut classes: BTreeMap<BTreeMap<Element, Element>, Vec<usize>> = BTreeMap::new();
    for (i, kappa) in cocycles.iter().enumerate() {
        classes.entry(kappa.trace_table()?).or_default().push(i);
    }

    let nz: Vec<Element> = group.enumerate()?.filter(|x| !group.is_zero(x)).collect();
    let m_elems: Vec<Element> = coeffs.enumerate()?.collect();
    let mm = m_elems.len() as u128;
    let table_count = mm.checked_pow(nz.len() as u32).unwrap_or(u128::MAX);
    if table_count > guard {
        return Err(AlgebraError::SearchSpaceTooLarge {
            candidates: table_count,
            guard,
        });
    }
    let mut quadratic_tables = Vec::new();
    let mut digits = vec![0usize; nz.len()];
    loop {
        let mut table: BTreeMap<Element, Element> = BTreeMap::new();
        table.insert(group.zero(), coeffs.zero());
        for (x, &d) in nz.iter().zip(&digits) {
            table.insert(x.clone(), m_elems[d].clone());
        }
        if crate::forms::validate_quadratic_table(group, coeffs, &table)? {
            quadratic_tables.push(table);
        }
        let mut done = true;
        for i in (0..digits.len()).rev() {
            digits[i] += 1;
            if digits[i] < m_elems.len() {
                done = false;
                break;
            }
            digits[i] = 0;
        }
        if done {
            break;
        }
    }

    Ok(Classification {
        cocycles,
        classes,
        quadratic_tables,
    })
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

    /// The worked example: h(1,1,1)=2 else 0, c(x,y)=xy on Z/2 -> Z/4.
    pub(crate) fn nonpolar_cocycle() -> AbelianCocycle3 {
        let mut h = HTable::new();
        h.insert((e(&[1]), e(&[1]), e(&[1])), e(&[2]));
        let mut c = CTable::new();
        c.insert((e(&[1]), e(&[1])), e(&[1]));
        AbelianCocycle3::from_tables(g(&[2]), g(&[4]), h, c).unwrap()
    }

    #[test]
    fn worked_example_is_valid() {
        let kappa = nonpolar_cocycle();
        let report = kappa.validate(DEFAULT_BOX);
        assert!(report.is_valid(), "{report}");
        assert!(report.exhaustive);
    }

    #[test]
    fn zero_cocycle_is_valid() {
        let kappa = AbelianCocycle3::zero(g(&[2]), g(&[4]));
        assert!(kappa.validate(DEFAULT_BOX).is_valid());
    }

    #[test]
    fn bilinear_c_alone_fails_identity_a() {
        // h = 0 with c(x,y) = xy is not a cocycle on Z/2 -> Z/4
        let mut c = CTable::new();
        c.insert((e(&[1]), e(&[1])), e(&[1]));
        let kappa = AbelianCocycle3::from_tables(g(&[2]), g(&[4]), HTable::new(), c).unwrap();
        let report = kappa.validate(DEFAULT_BOX);
        assert!(!report.identity_a.passed());
    }

    #[test]
    fn symmetry_examples() {
        assert!(AbelianCocycle3::zero(g(&[2]), g(&[2])).is_symmetric(DEFAULT_BOX));
        assert!(!nonpolar_cocycle().is_symmetric(DEFAULT_BOX));

        // Koszul structured cocycle on Z -> Z/2 has 2-torsion braiding values
        let koszul = AbelianCocycle3::structured(
            BilinearForm::zero(g(&[0]), g(&[2])),
            vec![e(&[1])],
        )
        .unwrap();
        assert!(koszul.is_symmetric(DEFAULT_BOX));
        assert!(koszul.validate(DEFAULT_BOX).is_valid());
    }

    #[test]
    fn coboundaries_are_symmetric_with_zero_trace() {
        let grp = g(&[2]);
        let m = g(&[4]);
        for v in m.enumerate().unwrap() {
            let mut table = CTable::new();
            table.insert((e(&[1]), e(&[1])), v);
            let k = CoboundaryWitness::new(grp.clone(), m.clone(), table).unwrap();
            let kappa = k.coboundary().unwrap();
            assert!(kappa.validate(DEFAULT_BOX).is_valid());
            assert!(kappa.is_symmetric(DEFAULT_BOX));
            for (_, v) in kappa.trace_table().unwrap() {
                assert!(m.is_zero(&v));
            }
        }
    }

    #[test]
    fn witness_rejects_zero_arg_entries() {
        let mut table = CTable::new();
        table.insert((e(&[0]), e(&[1])), e(&[1]));
        assert!(matches!(
            CoboundaryWitness::new(g(&[2]), g(&[4]), table),
            Err(AlgebraError::NotNormalized)
        ));
    }

    #[test]
    fn trace_examples() {
        let kappa = nonpolar_cocycle();
        let table = kappa.trace_table().unwrap();
        assert_eq!(table[&e(&[0])], e(&[0]));
        assert_eq!(table[&e(&[1])], e(&[1]));
        let q = kappa.trace_form().unwrap();
        assert_eq!(q.eval(&e(&[1])), e(&[1]));
    }

    #[test]
    fn w_form_examples() {
        let kappa = nonpolar_cocycle();
        let w = kappa.w_form().unwrap();
        assert_eq!(w.eval(&e(&[1]), &e(&[1])), e(&[2]));
        assert_eq!(w, kappa.trace_form().unwrap().polarization());
    }

    #[test]
    fn cohomologous_examples() {
        let kappa = nonpolar_cocycle();
        assert!(cohomologous(&kappa, &kappa, DEFAULT_BOX).unwrap());
        let zero = AbelianCocycle3::zero(g(&[2]), g(&[4]));
        assert!(!cohomologous(&kappa, &zero, DEFAULT_BOX).unwrap());

        // shifting by a coboundary does not change the class
        let mut table = CTable::new();
        table.insert((e(&[1]), e(&[1])), e(&[3]));
        let k = CoboundaryWitness::new(g(&[2]), g(&[4]), table).unwrap();
        let shifted = kappa.add(&k.coboundary().unwrap()).unwrap();
        assert!(cohomologous(&kappa, &shifted, DEFAULT_BOX).unwrap());
        let witness = find_coboundary_witness(&shifted, &kappa, 1_000_000).unwrap();
        assert!(witness.is_some());
    }

    #[test]
    fn witness_search_examples() {
        let kappa = nonpolar_cocycle();
        let w = find_coboundary_witness(&kappa, &kappa, 1_000_000).unwrap();
        assert_eq!(w.unwrap().table().len(), 0); // k = 0 is found first

        // the two classes of (Z/2, Z/2) are never linked
        let classes = enumerate_cocycles(&g(&[2]), &g(&[2]), 1_000_000).unwrap();
        assert_eq!(classes.len(), 2);
        assert!(
            find_coboundary_witness(&classes[0], &classes[1], 1_000_000)
                .unwrap()
                .is_none()
        );
    }

    #[test]
    fn enumeration_counts() {
        let cls = classify(&g(&[2]), &g(&[2]), 10_000_000).unwrap();
        assert_eq!(cls.distinct_traces(), 2);
        assert!(cls.is_surjective());

        let cls = classify(&g(&[2]), &g(&[4]), 10_000_000).unwrap();
        assert_eq!(cls.distinct_traces(), 4);
        assert!(cls.is_surjective());
        // the paper's cocycle sits in the class of q(1) = 1
        let target: BTreeMap<Element, Element> =
            [(e(&[0]), e(&[0])), (e(&[1]), e(&[1]))].into();
        let members = &cls.classes[&target];
        assert!(members
            .iter()
            .any(|&i| cls.cocycles[i] == nonpolar_cocycle()));
    }

    #[test]
    fn alternating_sum_identity() {
        for kappa in enumerate_cocycles(&g(&[2]), &g(&[4]), 10_000_000).unwrap() {
            let m = kappa.coeffs().clone();
            let elems: Vec<Element> = kappa.group().enumerate().unwrap().collect();
            for x in &elems {
                for y in &elems {
                    for z in &elems {
                        // sum over S3 with signs
                        let pos = [(x, y, z), (y, z, x), (z, x, y)];
                        let neg = [(y, x, z), (x, z, y), (z, y, x)];
                        let mut acc = m.zero();
                        for (a, b, c) in pos {
                            acc = m.add(&acc, &kappa.h(a, b, c));
                        }
                        for (a, b, c) in neg {
                            acc = m.sub(&acc, &kappa.h(a, b, c));
                        }
                        assert!(m.is_zero(&acc));
                    }
                }
            }
        }
    }

    #[test]
    fn lemma_v3_identity() {
        for kappa in enumerate_cocycles(&g(&[2]), &g(&[4]), 10_000_000).unwrap() {
            let grp = kappa.group().clone();
            let m = kappa.coeffs().clone();
            let elems: Vec<Element> = grp.enumerate().unwrap().collect();
            for y in &elems {
                for z in &elems {
                    let s = grp.add(y, z);
                    let lhs = m.sub(
                        &m.sub(&kappa.c(&s, &s), &kappa.c(y, y)),
                        &kappa.c(z, z),
                    );
                    let w = m.add(&kappa.c(y, z), &kappa.c(z, y));
                    assert_eq!(lhs, w);
                }
            }
        }
    }
}
