//! Stable JSON documents for every value the command-line front end reads
//! or writes.
//!
//! A group is `{"orders":[...]}`, an element `{"coeffs":[...]}`. Inside
//! table keys an element is its coefficients joined by `,` and argument
//! tuples are joined by `|` (so `h` keys look like `"1,0|0,1|1,1"`).
//! Cocycles come in two shapes: table `{"h":{...},"c":{...}}` and
//! structured `{"h":"zero","c":{"bilinear":[[elem,...],...],
//! "correction":[elem,...]}}`.

use crate::abgroup::{Element, FgAbGroup, Homomorphism};
use crate::cocycle::{
    AbelianCocycle3, CTable, CoboundaryWitness, HTable, ValidationReport,
};
use crate::error::AlgebraError;
use crate::forms::{BilinearForm, QuadraticForm};
use crate::model::ModelReport;
use crate::strictify::PolarCoverResult;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

fn invalid(msg: impl Into<String>) -> AlgebraError {
    AlgebraError::Dimension(msg.into())
}

/// `"1,-2,0"` -> element with those coefficients.
pub fn parse_element_key(key: &str) -> Result<Element, AlgebraError> {
    let coeffs = key
        .split(',')
        .map(|part| {
            part.trim()
                .parse::<i64>()
                .map_err(|_| invalid(format!("bad element key component {part:?}")))
        })
        .collect::<Result<Vec<i64>, _>>()?;
    Ok(Element::new(coeffs))
}

pub fn element_key(x: &Element) -> String {
    x.coeffs()
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn parse_tuple_key(key: &str, arity: usize) -> Result<Vec<Element>, AlgebraError> {
    let parts: Vec<&str> = key.split('|').collect();
    if parts.len() != arity {
        return Err(invalid(format!(
            "key {key:?} has {} parts, expected {arity}",
            parts.len()
        )));
    }
    parts.iter().map(|p| parse_element_key(p)).collect()
}

fn tuple_key(parts: &[&Element]) -> String {
    parts
        .iter()
        .map(|x| element_key(x))
        .collect::<Vec<_>>()
        .join("|")
}

// ---------------------------------------------------------------------------
// forms

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BilinearFormDoc {
    pub source: FgAbGroup,
    pub target: FgAbGroup,
    pub matrix: Vec<Vec<Element>>,
}

impl BilinearFormDoc {
    pub fn from_form(t: &BilinearForm) -> Self {
        BilinearFormDoc {
            source: t.source().clone(),
            target: t.target().clone(),
            matrix: t.matrix().to_vec(),
        }
    }

    pub fn into_form(self) -> Result<BilinearForm, AlgebraError> {
        BilinearForm::new(self.source, self.target, self.matrix)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct QuadraticFormDoc {
    pub source: FgAbGroup,
    pub target: FgAbGroup,
    pub diag: Vec<Element>,
    #[serde(default)]
    pub offdiag: BTreeMap<String, Element>,
}

impl QuadraticFormDoc {
    pub fn from_form(q: &QuadraticForm) -> Self {
        QuadraticFormDoc {
            source: q.source().clone(),
            target: q.target().clone(),
            diag: q.diag().to_vec(),
            offdiag: q
                .offdiag()
                .iter()
                .map(|(&(i, j), v)| (format!("{i},{j}"), v.clone()))
                .collect(),
        }
    }

    pub fn into_form(self) -> Result<QuadraticForm, AlgebraError> {
        let mut offdiag = BTreeMap::new();
        for (key, v) in self.offdiag {
            let (i, j) = key
                .split_once(',')
                .ok_or_else(|| invalid(format!("bad offdiag key {key:?}")))?;
            let i: usize = i
                .trim()
                .parse()
                .map_err(|_| invalid(format!("bad offdiag index {i:?}")))?;
            let j: usize = j
                .trim()
                .parse()
                .map_err(|_| invalid(format!("bad offdiag index {j:?}")))?;
            if i >= j {
                return Err(invalid(format!(
                    "offdiag key {i},{j} must have i < j"
                )));
            }
            offdiag.insert((i, j), v);
        }
        QuadraticForm::new(self.source, self.target, self.diag, offdiag)
    }
}

// ---------------------------------------------------------------------------
// cocycles

/// `"zero"` or a keyed table.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum HBody {
    Zero(String),
    Table(BTreeMap<String, Element>),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CBody {
    Structured {
        bilinear: Vec<Vec<Element>>,
        correction: Vec<Element>,
    },
    Table(BTreeMap<String, Element>),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CocycleDoc {
    pub group: FgAbGroup,
    pub coeffs: FgAbGroup,
    pub h: HBody,
    pub c: CBody,
}

impl CocycleDoc {
    pub fn from_cocycle(kappa: &AbelianCocycle3) -> Self {
        let group = kappa.group().clone();
        let coeffs = kappa.coeffs().clone();
        match kappa.structured_parts() {
            Some((bilinear, correction)) => CocycleDoc {
                group,
                coeffs,
                h: HBody::Zero("zero".to_string()),
                c: CBody::Structured {
                    bilinear: bilinear.matrix().to_vec(),
                    correction: correction.values().to_vec(),
                },
            },
            None => {
                let (h, c) = kappa
                    .table_parts()
                    .expect("non-structured cocycles are table-backed");
                CocycleDoc {
                    group,
                    coeffs,
                    h: HBody::Table(
                        h.iter()
                            .map(|((x, y, z), v)| (tuple_key(&[x, y, z]), v.clone()))
                            .collect(),
                    ),
                    c: CBody::Table(
                        c.iter()
                            .map(|((x, y), v)| (tuple_key(&[x, y]), v.clone()))
                            .collect(),
                    ),
                }
            }
        }
    }

    pub fn into_cocycle(self) -> Result<AbelianCocycle3, AlgebraError> {
        match (self.h, self.c) {
            (
                HBody::Zero(tag),
                CBody::Structured {
                    bilinear,
                    correction,
                },
            ) => {
                if tag != "zero" {
                    return Err(invalid(format!("unknown h tag {tag:?}")));
                }
                let t = BilinearForm::new(self.group, self.coeffs, bilinear)?;
                AbelianCocycle3::structured(t, correction)
            }
            (HBody::Table(h_doc), CBody::Table(c_doc)) => {
                let mut h = HTable::new();
                for (key, v) in h_doc {
                    let parts = parse_tuple_key(&key, 3)?;
                    h.insert((parts[0].clone(), parts[1].clone(), parts[2].clone()), v);
                }
                let mut c = CTable::new();
                for (key, v) in c_doc {
                    let parts = parse_tuple_key(&key, 2)?;
                    c.insert((parts[0].clone(), parts[1].clone()), v);
                }
                AbelianCocycle3::from_tables(self.group, self.coeffs, h, c)
            }
            (HBody::Zero(tag), CBody::Table(c_doc)) => {
                // "zero" h with a plain c table is still a table cocycle
                if tag != "zero" {
                    return Err(invalid(format!("unknown h tag {tag:?}")));
                }
                let mut c = CTable::new();
                for (key, v) in c_doc {
                    let parts = parse_tuple_key(&key, 2)?;
                    c.insert((parts[0].clone(), parts[1].clone()), v);
                }
                AbelianCocycle3::from_tables(self.group, self.coeffs, HTable::new(), c)
            }
            _ => Err(invalid(
                "structured c requires h to be \"zero\"".to_string(),
            )),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct WitnessDoc {
    pub group: FgAbGroup,
    pub coeffs: FgAbGroup,
    pub k: BTreeMap<String, Element>,
}

impl WitnessDoc {
    pub fn from_witness(w: &CoboundaryWitness) -> Self {
        WitnessDoc {
            group: w.group().clone(),
            coeffs: w.coeffs().clone(),
            k: w
                .table()
                .iter()
                .map(|((x, y), v)| (tuple_key(&[x, y]), v.clone()))
                .collect(),
        }
    }
}

/// Output of `cocycle validate`.
#[derive(Debug, Clone, Serialize)]
pub struct ValidateOutput {
    pub valid: bool,
    #[serde(flatten)]
    pub report: ValidationReport,
}

/// Output of `cocycle trace`: the generator-backed form, plus the full
/// value table on finite groups.
#[derive(Debug, Clone, Serialize)]
pub struct TraceOutput {
    pub form: QuadraticFormDoc,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub table: Option<BTreeMap<String, Element>>,
}

/// Output of `cocycle cohomologous`.
#[derive(Debug, Clone, Serialize)]
pub struct CohomologousOutput {
    pub cohomologous: bool,
    #[serde(rename = "box")]
    pub bound: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_search: Option<String>,
}

/// One trace class in `cocycle enumerate` output.
#[derive(Debug, Clone, Serialize)]
pub struct ClassOutput {
    pub trace: BTreeMap<String, Element>,
    pub size: usize,
    pub representative: CocycleDoc,
}

#[derive(Debug, Clone, Serialize)]
pub struct EnumerateOutput {
    pub cocycles: usize,
    pub classes: Vec<ClassOutput>,
    pub quadratic_tables: usize,
    pub surjective: bool,
    pub max_candidates: u128,
}

/// Output of `forms is-polar`.
#[derive(Debug, Clone, Serialize)]
pub struct IsPolarOutput {
    pub polar: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<BilinearFormDoc>,
}

/// Output of `forms validate`.
#[derive(Debug, Clone, Serialize)]
pub struct FormValidateOutput {
    pub valid: bool,
    #[serde(rename = "box")]
    pub bound: u64,
    pub exhaustive: bool,
}

/// Output of `strictify`.
#[derive(Debug, Clone, Serialize)]
pub struct StrictifyOutput {
    pub polar: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_t: Option<BilinearFormDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub strict_cocycle: Option<CocycleDoc>,
}

#[derive(Debug, Clone, Serialize)]
pub struct HomomorphismDoc {
    pub source: FgAbGroup,
    pub target: FgAbGroup,
    pub images: Vec<Element>,
}

impl HomomorphismDoc {
    pub fn from_hom(f: &Homomorphism) -> Self {
        HomomorphismDoc {
            source: f.source().clone(),
            target: f.target().clone(),
            images: f.images().to_vec(),
        }
    }
}

/// Output of `polar-cover`.
#[derive(Debug, Clone, Serialize)]
pub struct PolarCoverOutput {
    pub cover_group: FgAbGroup,
    pub surjection: HomomorphismDoc,
    pub lifted_form: QuadraticFormDoc,
    pub witness_t: BilinearFormDoc,
    pub strict_cocycle: CocycleDoc,
    pub kernel_rank: usize,
    pub comparison_cells: Option<WitnessDoc>,
    pub max_candidates: u128,
}

impl PolarCoverOutput {
    pub fn from_result(r: &PolarCoverResult, max_candidates: u128) -> Self {
        PolarCoverOutput {
            cover_group: r.cover_group.clone(),
            surjection: HomomorphismDoc::from_hom(&r.surjection),
            lifted_form: QuadraticFormDoc::from_form(&r.lifted_form),
            witness_t: BilinearFormDoc::from_form(&r.witness_t),
            strict_cocycle: CocycleDoc::from_cocycle(&r.strict_cocycle),
            kernel_rank: r.kernel_rank,
            comparison_cells: r.comparison_cells.as_ref().map(WitnessDoc::from_witness),
            max_candidates,
        }
    }
}

/// Output of `model check`.
#[derive(Debug, Clone, Serialize)]
pub struct ModelCheckOutput {
    #[serde(flatten)]
    pub report: ModelReport,
    pub pi0: FgAbGroup,
    pub pi1: FgAbGroup,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub signature_table: Option<BTreeMap<String, Element>>,
}

pub fn element_table_doc(
    table: &BTreeMap<Element, Element>,
) -> BTreeMap<String, Element> {
    table
        .iter()
        .map(|(x, v)| (element_key(x), v.clone()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{example_koszul, example_nonpolar};

    #[test]
    fn element_keys_round_trip() {
        let x = Element::new(vec![1, -2, 0]);
        assert_eq!(element_key(&x), "1,-2,0");
        assert_eq!(parse_element_key("1,-2,0").unwrap(), x);
        assert!(parse_element_key("1,q").is_err());
    }

    #[test]
    fn cocycle_docs_round_trip() {
        for kappa in [example_nonpolar(), example_koszul()] {
            let doc = CocycleDoc::from_cocycle(&kappa);
            let json = serde_json::to_string(&doc).unwrap();
            let back: CocycleDoc = serde_json::from_str(&json).unwrap();
            assert_eq!(back.into_cocycle().unwrap(), kappa);
        }
    }

    #[test]
    fn table_doc_shape() {
        let doc = CocycleDoc::from_cocycle(&example_nonpolar());
        let json = serde_json::to_value(&doc).unwrap();
        assert_eq!(json["group"]["orders"][0], 2);
        assert_eq!(json["h"]["1|1|1"]["coeffs"][0], 2);
        assert_eq!(json["c"]["1|1"]["coeffs"][0], 1);
    }

    #[test]
    fn structured_doc_shape() {
        let doc = CocycleDoc::from_cocycle(&example_koszul());
        let json = serde_json::to_value(&doc).unwrap();
        assert_eq!(json["h"], "zero");
        assert_eq!(json["c"]["correction"][0]["coeffs"][0], 1);
    }

    #[test]
    fn quadratic_form_doc_round_trip() {
        let g = FgAbGroup::new(vec![2, 2]).unwrap();
        let m = FgAbGroup::new(vec![4]).unwrap();
        let mut offdiag = BTreeMap::new();
        offdiag.insert((0usize, 1usize), Element::new(vec![2]));
        let q = QuadraticForm::new(
            g,
            m,
            vec![Element::new(vec![1]), Element::new(vec![0])],
            offdiag,
        )
        .unwrap();
        let doc = QuadraticFormDoc::from_form(&q);
        let json = serde_json::to_string(&doc).unwrap();
        let back: QuadraticFormDoc = serde_json::from_str(&json).unwrap();
        assert_eq!(back.into_form().unwrap(), q);
    }

    #[test]
    fn bad_offdiag_keys_rejected() {
        let doc: QuadraticFormDoc = serde_json::from_str(
            r#"{"source":{"orders":[2,2]},"target":{"orders":[4]},
                "diag":[{"coeffs":[0]},{"coeffs":[0]}],
                "offdiag":{"1,0":{"coeffs":[2]}}}"#,
        )
        .unwrap();
        assert!(doc.into_form().is_err());
    }
}
