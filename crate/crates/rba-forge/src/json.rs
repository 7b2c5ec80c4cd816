//! JSON schemas and parsing entry points.
//!
//! Scalars serialize as term lists `[{"num", "den", "rad"}, …]` with
//! arbitrary-precision integers carried as decimal strings; presentations
//! as `{d, star, lambda: [{i, j, k, value}, …]}` with only nonzero entries
//! listed; bases as `{shape, elements}` with each element a list of row-major
//! blocks. Parsing is total over untrusted input: inputs are canonicalized
//! (radicands reduced square-free, duplicate terms merged, zero terms
//! dropped) and every structural violation is a parse error, never a panic.

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use serde::de::Error as DeError;
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exact::factor::{factor_bound, square_free_decompose};
use crate::exact::radical::Radicand;
use crate::exact::{RadicalNumber, Rational};
use crate::model::mat::{BlockMat, BlockShape, Mat, MatrixBasis};
use crate::rba::{InvolutionPerm, RbaPresentation, StructureTensor};

/// Caps keeping hostile inputs cheap to reject.
const MAX_TERMS: usize = 512;
const MAX_INTEGER_DIGITS: usize = 4096;
const MAX_BASIS_SIZE: usize = 256;
const MAX_COMPONENTS: usize = 64;
const MAX_COMPONENT_SIZE: usize = 64;
const MAX_FLAT_DIM: usize = 4096;

#[derive(Serialize, Deserialize)]
struct TermRecord {
    num: String,
    den: String,
    rad: String,
}

impl Serialize for RadicalNumber {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.term_count()))?;
        for (rad, coeff) in self.terms() {
            seq.serialize_element(&TermRecord {
                num: coeff.numer().to_string(),
                den: coeff.denom().to_string(),
                rad: rad.value().to_string(),
            })?;
        }
        seq.end()
    }
}

fn parse_big_int(text: &str, what: &str) -> Result<BigInt> {
    if text.is_empty() || text.len() > MAX_INTEGER_DIGITS {
        return Err(Error::Parse(format!("{what} has invalid length")));
    }
    text.parse()
        .map_err(|_| Error::Parse(format!("{what} is not an integer: {text:?}")))
}

fn parse_big_uint(text: &str, what: &str) -> Result<BigUint> {
    if text.is_empty() || text.len() > MAX_INTEGER_DIGITS {
        return Err(Error::Parse(format!("{what} has invalid length")));
    }
    text.parse()
        .map_err(|_| Error::Parse(format!("{what} is not a nonnegative integer: {text:?}")))
}

fn radical_from_records(records: Vec<TermRecord>) -> Result<RadicalNumber> {
    if records.len() > MAX_TERMS {
        return Err(Error::Parse(format!(
            "too many terms ({} > {MAX_TERMS})",
            records.len()
        )));
    }
    let mut value = RadicalNumber::zero();
    for record in records {
        let numerator = parse_big_int(&record.num, "num")?;
        let denominator = parse_big_uint(&record.den, "den")?;
        if denominator.is_zero() {
            return Err(Error::Parse("zero denominator".into()));
        }
        let radicand = parse_big_uint(&record.rad, "rad")?;
        if radicand.is_zero() {
            return Err(Error::Parse("zero radicand".into()));
        }
        // canonicalize: √rad = s·√(square-free part)
        let decomposition = square_free_decompose(&radicand, factor_bound())?;
        let coeff = Rational::new(
            numerator * BigInt::from(decomposition.square_root),
            BigInt::from(denominator),
        );
        let term =
            RadicalNumber::from_terms([(Radicand::from_primes(decomposition.primes), coeff)]);
        value = &value + &term;
    }
    Ok(value)
}

impl<'de> Deserialize<'de> for RadicalNumber {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let records = Vec::<TermRecord>::deserialize(deserializer)?;
        radical_from_records(records).map_err(|e| D::Error::custom(e.to_string()))
    }
}

/// Sparse presentation document: only nonzero structure constants listed.
#[derive(Serialize, Deserialize)]
pub struct PresentationDoc {
    pub d: usize,
    pub star: Vec<usize>,
    pub lambda: Vec<LambdaEntry>,
}

#[derive(Serialize, Deserialize)]
pub struct LambdaEntry {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub value: RadicalNumber,
}

impl From<&RbaPresentation> for PresentationDoc {
    fn from(pres: &RbaPresentation) -> Self {
        PresentationDoc {
            d: pres.d(),
            star: pres.star.image().to_vec(),
            lambda: pres
                .tensor
                .nonzero_entries()
                .map(|(i, j, k, value)| LambdaEntry {
                    i,
                    j,
                    k,
                    value: value.clone(),
                })
                .collect(),
        }
    }
}

impl TryFrom<PresentationDoc> for RbaPresentation {
    type Error = Error;

    fn try_from(doc: PresentationDoc) -> Result<Self> {
        let size = doc
            .d
            .checked_add(1)
            .filter(|&n| n <= MAX_BASIS_SIZE)
            .ok_or_else(|| Error::Parse(format!("basis size {} out of range", doc.d)))?;
        if doc.star.len() != size {
            return Err(Error::Parse(format!(
                "star has {} entries, expected {size}",
                doc.star.len()
            )));
        }
        let star = InvolutionPerm::new(doc.star).map_err(|e| Error::Parse(e.to_string()))?;
        if doc.lambda.len() > size * size * size {
            return Err(Error::Parse("more entries than tensor slots".into()));
        }
        let mut tensor = StructureTensor::zeros(doc.d);
        let mut seen = std::collections::BTreeSet::new();
        for entry in doc.lambda {
            if entry.i >= size || entry.j >= size || entry.k >= size {
                return Err(Error::Parse(format!(
                    "index ({}, {}, {}) out of range",
                    entry.i, entry.j, entry.k
                )));
            }
            if !seen.insert((entry.i, entry.j, entry.k)) {
                return Err(Error::Parse(format!(
                    "duplicate entry ({}, {}, {})",
                    entry.i, entry.j, entry.k
                )));
            }
            tensor.set(entry.i, entry.j, entry.k, entry.value);
        }
        RbaPresentation::new(tensor, star)
    }
}

/// Basis document: per element, one row-major block per component.
#[derive(Serialize, Deserialize)]
pub struct BasisDoc {
    pub shape: Vec<usize>,
    pub elements: Vec<Vec<Vec<Vec<RadicalNumber>>>>,
}

impl From<&MatrixBasis> for BasisDoc {
    fn from(basis: &MatrixBasis) -> Self {
        BasisDoc {
            shape: basis.shape().sizes().to_vec(),
            elements: basis
                .elements()
                .iter()
                .map(|element| {
                    element
                        .blocks()
                        .iter()
                        .map(|block| {
                            (0..block.size())
                                .map(|r| {
                                    (0..block.size()).map(|c| block.get(r, c).clone()).collect()
                                })
                                .collect()
                        })
                        .collect()
                })
                .collect(),
        }
    }
}

impl TryFrom<BasisDoc> for MatrixBasis {
    type Error = Error;

    fn try_from(doc: BasisDoc) -> Result<Self> {
        if doc.shape.is_empty() || doc.shape.len() > MAX_COMPONENTS {
            return Err(Error::Parse("component count out of range".into()));
        }
        if doc.shape.iter().any(|&m| m == 0 || m > MAX_COMPONENT_SIZE) {
            return Err(Error::Parse("component size out of range".into()));
        }
        let shape = BlockShape::new(doc.shape.clone())?;
        if shape.flat_dim() > MAX_FLAT_DIM {
            return Err(Error::Parse("total dimension out of range".into()));
        }
        if doc.elements.is_empty() || doc.elements.len() > shape.flat_dim() {
            return Err(Error::Parse(format!(
                "element count {} out of range 1..={}",
                doc.elements.len(),
                shape.flat_dim()
            )));
        }
        let mut elements = Vec::with_capacity(doc.elements.len());
        for (index, blocks) in doc.elements.into_iter().enumerate() {
            if blocks.len() != shape.components() {
                return Err(Error::Parse(format!(
                    "element {index} has {} blocks, expected {}",
                    blocks.len(),
                    shape.components()
                )));
            }
            let mut mats = Vec::with_capacity(blocks.len());
            for (component, rows) in blocks.into_iter().enumerate() {
                let expected = shape.sizes()[component];
                if rows.len() != expected || rows.iter().any(|row| row.len() != expected) {
                    return Err(Error::Parse(format!(
                        "element {index} block {component} is not {expected}×{expected}"
                    )));
                }
                mats.push(Mat::from_rows(rows)?);
            }
            elements.push(BlockMat::new(mats));
        }
        MatrixBasis::new(shape, elements)
    }
}

/// A parsed input file: either an abstract presentation or a matrix basis.
pub enum InputDoc {
    Presentation(RbaPresentation),
    Basis(MatrixBasis),
}

fn map_json_err(err: serde_json::Error) -> Error {
    Error::Parse(err.to_string())
}

pub fn parse_radical_json(bytes: &[u8]) -> Result<RadicalNumber> {
    serde_json::from_slice(bytes).map_err(map_json_err)
}

pub fn parse_presentation_json(bytes: &[u8]) -> Result<RbaPresentation> {
    let doc: PresentationDoc = serde_json::from_slice(bytes).map_err(map_json_err)?;
    doc.try_into()
}

pub fn parse_basis_json(bytes: &[u8]) -> Result<MatrixBasis> {
    let doc: BasisDoc = serde_json::from_slice(bytes).map_err(map_json_err)?;
    doc.try_into()
}

/// Detects the document kind by its fields: `lambda` marks a presentation,
/// `elements` a basis.
pub fn parse_input_json(bytes: &[u8]) -> Result<InputDoc> {
    let probe: serde_json::Value = serde_json::from_slice(bytes).map_err(map_json_err)?;
    let object = probe
        .as_object()
        .ok_or_else(|| Error::Parse("expected a JSON object".into()))?;
    if object.contains_key("lambda") {
        Ok(InputDoc::Presentation(parse_presentation_json(bytes)?))
    } else if object.contains_key("elements") {
        Ok(InputDoc::Basis(parse_basis_json(bytes)?))
    } else {
        Err(Error::Parse(
            "object is neither a presentation (lambda) nor a basis (elements)".into(),
        ))
    }
}

pub fn presentation_to_json(pres: &RbaPresentation) -> String {
    serde_json::to_string_pretty(&PresentationDoc::from(pres)).expect("serialization is total")
}

pub fn basis_to_json(basis: &MatrixBasis) -> String {
    serde_json::to_string_pretty(&BasisDoc::from(basis)).expect("serialization is total")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{dim5_family, Dim5Params};
    use crate::exact::rat;
    use proptest::prelude::*;

    #[test]
    fn radical_round_trip_canonicalizes() {
        // 3√8 = 6√2 arrives non-canonical and parses to canonical form
        let json = br#"[{"num":"3","den":"1","rad":"8"}]"#;
        let parsed = parse_radical_json(json).unwrap();
        let expected = RadicalNumber::from_root(rat(6, 1), 2).unwrap();
        assert_eq!(parsed, expected);
        let rendered = serde_json::to_string(&parsed).unwrap();
        assert_eq!(parse_radical_json(rendered.as_bytes()).unwrap(), parsed);
    }

    #[test]
    fn radical_rejects_malformed_terms() {
        for bad in [
            &br#"[{"num":"1","den":"0","rad":"1"}]"#[..],
            &br#"[{"num":"1","den":"1","rad":"0"}]"#[..],
            &br#"[{"num":"x","den":"1","rad":"1"}]"#[..],
            &br#"{"num":"1"}"#[..],
        ] {
            assert!(parse_radical_json(bad).is_err());
        }
    }

    #[test]
    fn duplicate_radicands_merge() {
        let json = br#"[{"num":"1","den":"2","rad":"3"},{"num":"1","den":"2","rad":"3"}]"#;
        let parsed = parse_radical_json(json).unwrap();
        assert_eq!(parsed, RadicalNumber::from_root(rat(1, 1), 3).unwrap());
        // exact cancellation leaves zero
        let cancel = br#"[{"num":"1","den":"1","rad":"2"},{"num":"-2","den":"2","rad":"2"}]"#;
        assert!(parse_radical_json(cancel).unwrap().is_zero());
    }

    #[test]
    fn presentation_round_trip() {
        let pres = RbaPresentation::c2_group_algebra();
        let json = presentation_to_json(&pres);
        let parsed = parse_presentation_json(json.as_bytes()).unwrap();
        assert_eq!(parsed, pres);
    }

    #[test]
    fn presentation_rejects_bad_star_and_duplicates() {
        assert!(parse_presentation_json(br#"{"d":1,"star":[1,0],"lambda":[]}"#).is_err());
        assert!(parse_presentation_json(
            br#"{"d":0,"star":[0],"lambda":[
            {"i":0,"j":0,"k":0,"value":[{"num":"1","den":"1","rad":"1"}]},
            {"i":0,"j":0,"k":0,"value":[{"num":"1","den":"1","rad":"1"}]}
        ]}"#
        )
        .is_err());
        assert!(parse_presentation_json(
            br#"{"d":0,"star":[0],"lambda":[
            {"i":0,"j":0,"k":5,"value":[{"num":"1","den":"1","rad":"1"}]}
        ]}"#
        )
        .is_err());
    }

    #[test]
    fn basis_round_trip_preserves_the_family() {
        let basis =
            dim5_family(&Dim5Params::new(rat(6, 1), rat(6, 1), rat(6, 1), [1, 1, 1]).unwrap());
        let json = basis_to_json(&basis);
        let parsed = parse_basis_json(json.as_bytes()).unwrap();
        assert_eq!(parsed, basis);
        match parse_input_json(json.as_bytes()).unwrap() {
            InputDoc::Basis(b) => assert_eq!(b, basis),
            InputDoc::Presentation(_) => panic!("detected wrong kind"),
        }
    }

    #[test]
    fn basis_shape_validation() {
        assert!(parse_basis_json(br#"{"shape":[],"elements":[]}"#).is_err());
        assert!(parse_basis_json(br#"{"shape":[0],"elements":[[[[ ]]]]}"#).is_err());
        // 1×1 identity with a malformed (2-entry) row
        assert!(parse_basis_json(
            br#"{"shape":[1],"elements":[[[[{"num":"1","den":"1","rad":"1"},{"num":"1","den":"1","rad":"1"}]]]]}"#
        )
        .is_err());
    }

    proptest! {
        #[test]
        fn radical_json_round_trip(terms in proptest::collection::vec(
            (0u8..5, -20i64..20, 1i64..12),
            0..5,
        )) {
            let radicands = [1u64, 2, 3, 5, 6];
            let mut value = RadicalNumber::zero();
            for (which, numerator, denominator) in terms {
                let term = RadicalNumber::from_root(
                    rat(numerator, denominator),
                    radicands[which as usize],
                ).unwrap();
                value = &value + &term;
            }
            let json = serde_json::to_string(&value).unwrap();
            let parsed = parse_radical_json(json.as_bytes()).unwrap();
            prop_assert_eq!(parsed, value);
        }
    }
}
