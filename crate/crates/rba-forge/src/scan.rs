//! Parameter-family scanning with exact constraint filters.
//!
//! The two-block family is scanned through its closed-form constant table
//! (no matrix extraction unless a hit is cross-checked); the ℂ ⊕ M_m
//! family builds and verifies each basis. Grid points are evaluated and
//! emitted in lexicographic order, one JSON record per line, so identical
//! grids and filters produce byte-identical output.

use std::io::Write;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;
use serde::Serialize;

use crate::constructions::{
    cm_basis, dim5_distinct_entries, dim5_family, dim5_lambda_table, CmParams, Dim5Params,
};
use crate::error::{Error, Result};
use crate::exact::{parse_rational, RadicalNumber, Rational};
use crate::json::BasisDoc;
use crate::model::extract_structure_constants;
use crate::rba::verify_rba;

/// Inclusive rational range with positive step; a bare value is a
/// singleton.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridRange {
    pub start: Rational,
    pub end: Rational,
    pub step: Rational,
}

const MAX_POINTS_PER_AXIS: usize = 1 << 20;

impl GridRange {
    pub fn singleton(value: Rational) -> Self {
        GridRange {
            start: value.clone(),
            end: value,
            step: Rational::one(),
        }
    }

    pub fn points(&self) -> Result<Vec<Rational>> {
        let mut points = Vec::new();
        let mut current = self.start.clone();
        while current <= self.end {
            points.push(current.clone());
            current += &self.step;
            if points.len() > MAX_POINTS_PER_AXIS {
                return Err(Error::InvalidParameter(format!(
                    "grid axis exceeds {MAX_POINTS_PER_AXIS} points"
                )));
            }
        }
        if points.is_empty() {
            return Err(Error::InvalidParameter(format!(
                "empty grid range {}..{}",
                self.start, self.end
            )));
        }
        Ok(points)
    }

    /// Integer points only; rejects fractional entries (used for the
    /// component-size axis).
    pub fn integer_points(&self) -> Result<Vec<usize>> {
        self.points()?
            .into_iter()
            .map(|q| {
                if q.denom().is_one() {
                    usize::try_from(q.numer().clone())
                        .map_err(|_| Error::InvalidParameter(format!("{q} out of range")))
                } else {
                    Err(Error::InvalidParameter(format!(
                        "expected an integer grid point, got {q}"
                    )))
                }
            })
            .collect()
    }
}

/// Syntax: "a", "a..b", or "a..b:step", with rational endpoints.
impl FromStr for GridRange {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let (range_part, step_part) = match text.split_once(':') {
            Some((range, step)) => (range, Some(step)),
            None => (text, None),
        };
        let step = match step_part {
            Some(step_text) => parse_rational(step_text)?,
            None => Rational::one(),
        };
        if step <= Rational::from_integer(0.into()) {
            return Err(Error::Parse(format!("step must be positive in {text:?}")));
        }
        let (start, end) = match range_part.split_once("..") {
            Some((lo, hi)) => (parse_rational(lo)?, parse_rational(hi)?),
            None => {
                let value = parse_rational(range_part)?;
                (value.clone(), value)
            }
        };
        if start > end {
            return Err(Error::Parse(format!("empty range {text:?}")));
        }
        Ok(GridRange { start, end, step })
    }
}

/// Exact constraint on a tensor's entry set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Filter {
    Rational,
    Nonnegative,
    Integral,
    MaxDenominator(BigUint),
}

impl FromStr for Filter {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        match text {
            "rational" => Ok(Filter::Rational),
            "nonnegative" => Ok(Filter::Nonnegative),
            "integral" => Ok(Filter::Integral),
            other => {
                let bound = other
                    .strip_prefix("max-den=")
                    .or_else(|| other.strip_prefix("max-denominator="))
                    .ok_or_else(|| {
                        Error::Parse(format!(
                            "unknown filter {other:?}; expected rational, nonnegative, \
                             integral, or max-den=N"
                        ))
                    })?;
                let value: BigUint = bound
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad denominator bound {bound:?}")))?;
                Ok(Filter::MaxDenominator(value))
            }
        }
    }
}

impl Filter {
    /// Short-circuit check over the distinct entries of a tensor.
    fn passes<'a>(&self, entries: impl Iterator<Item = &'a RadicalNumber>) -> bool {
        match self {
            Filter::Rational => {
                let mut entries = entries;
                entries.all(RadicalNumber::is_rational)
            }
            Filter::Integral => {
                let mut entries = entries;
                entries.all(RadicalNumber::is_integer)
            }
            Filter::Nonnegative => {
                let mut entries = entries;
                entries.all(|e| e.sign() >= 0)
            }
            Filter::MaxDenominator(bound) => {
                let mut entries = entries;
                entries.all(|e| &e.max_denominator() <= bound)
            }
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ScanFlags {
    pub is_table_algebra: bool,
    pub is_rational: bool,
    pub is_integral: bool,
    pub nonnegative: bool,
    pub max_denominator: String,
}

fn flags_from_entries<'a>(
    entries: impl Iterator<Item = &'a RadicalNumber> + Clone,
    positive_degree_map: bool,
) -> ScanFlags {
    let nonnegative = entries.clone().all(|e| e.sign() >= 0);
    ScanFlags {
        is_table_algebra: nonnegative && positive_degree_map,
        is_rational: entries.clone().all(RadicalNumber::is_rational),
        is_integral: entries.clone().all(RadicalNumber::is_integer),
        nonnegative,
        max_denominator: entries
            .map(RadicalNumber::max_denominator)
            .max()
            .unwrap_or_else(BigUint::one)
            .to_string(),
    }
}

#[derive(Serialize)]
struct Dim5Record {
    family: &'static str,
    delta: [String; 3],
    signs: [i8; 3],
    flags: ScanFlags,
    #[serde(skip_serializing_if = "Option::is_none")]
    basis: Option<BasisDoc>,
}

#[derive(Serialize)]
struct CmRecord {
    family: &'static str,
    m: usize,
    delta: String,
    sign_x: i8,
    sign_y: i8,
    flags: ScanFlags,
    radicands: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    basis: Option<BasisDoc>,
}

#[derive(Debug, Clone, Default)]
pub struct ScanOptions {
    pub filters: Vec<Filter>,
    pub cross_check: bool,
    pub emit_basis: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ScanStats {
    pub evaluated: usize,
    pub emitted: usize,
}

const SIGN_TRIPLES: [[i8; 3]; 8] = [
    [1, 1, 1],
    [1, 1, -1],
    [1, -1, 1],
    [1, -1, -1],
    [-1, 1, 1],
    [-1, 1, -1],
    [-1, -1, 1],
    [-1, -1, -1],
];

/// Scans the two-block family over a rational grid for (δ₁, δ₂, δ₃) × all
/// eight sign choices. The closed-form table depends on the signs only
/// through ε = ε₁ε₂ε₃, so each grid point evaluates two entry sets. The
/// family is standardized with positive degrees, so nonnegative entries
/// make the point a table algebra.
pub fn scan_dim5(
    ranges: &[GridRange; 3],
    options: &ScanOptions,
    out: &mut dyn Write,
) -> Result<ScanStats> {
    let axes: Vec<Vec<Rational>> = ranges
        .iter()
        .map(GridRange::points)
        .collect::<Result<_>>()?;
    let mut stats = ScanStats {
        evaluated: 0,
        emitted: 0,
    };
    for d1 in &axes[0] {
        for d2 in &axes[1] {
            for d3 in &axes[2] {
                let entries_by_eps: [Vec<RadicalNumber>; 2] = [
                    dim5_distinct_entries(&Dim5Params::new(
                        d1.clone(),
                        d2.clone(),
                        d3.clone(),
                        [1, 1, 1],
                    )?),
                    dim5_distinct_entries(&Dim5Params::new(
                        d1.clone(),
                        d2.clone(),
                        d3.clone(),
                        [-1, 1, 1],
                    )?),
                ];
                for signs in SIGN_TRIPLES {
                    stats.evaluated += 1;
                    let eps = signs[0] * signs[1] * signs[2];
                    let entries = &entries_by_eps[usize::from(eps < 0)];
                    if !options
                        .filters
                        .iter()
                        .all(|filter| filter.passes(entries.iter()))
                    {
                        continue;
                    }
                    let params = Dim5Params::new(d1.clone(), d2.clone(), d3.clone(), signs)?;
                    if options.cross_check {
                        let extracted = extract_structure_constants(&dim5_family(&params))?;
                        if extracted.tensor != dim5_lambda_table(&params) {
                            return Err(Error::Inconsistency(format!(
                                "closed-form table disagrees with extraction at δ = ({d1}, {d2}, {d3}), signs {signs:?}"
                            )));
                        }
                    }
                    let record = Dim5Record {
                        family: "dim5",
                        delta: [d1.to_string(), d2.to_string(), d3.to_string()],
                        signs,
                        flags: flags_from_entries(entries.iter(), true),
                        basis: options
                            .emit_basis
                            .then(|| BasisDoc::from(&dim5_family(&params))),
                    };
                    writeln!(
                        out,
                        "{}",
                        serde_json::to_string(&record).expect("serializable")
                    )
                    .map_err(|e| Error::Inconsistency(e.to_string()))?;
                    stats.emitted += 1;
                }
            }
        }
    }
    Ok(stats)
}

/// Scans the equal-degree ℂ ⊕ M_m family over integer m and rational δ.
/// Each point builds the basis, extracts, and runs the full verifier; the
/// record carries the verifier's flags and the tensor's radicand set.
pub fn scan_cm(
    m_range: &GridRange,
    delta_range: &GridRange,
    options: &ScanOptions,
    out: &mut dyn Write,
) -> Result<ScanStats> {
    let sizes = m_range.integer_points()?;
    let deltas = delta_range.points()?;
    let mut stats = ScanStats {
        evaluated: 0,
        emitted: 0,
    };
    for &m in &sizes {
        for delta in &deltas {
            stats.evaluated += 1;
            let params = CmParams::new(m, delta.clone())?;
            let basis = cm_basis(&params)?;
            let pres = extract_structure_constants(&basis)?;
            let report = verify_rba(&pres)?;
            if !report.passed {
                return Err(Error::Inconsistency(format!(
                    "constructed basis failed verification at m = {m}, δ = {delta}"
                )));
            }
            let entries: Vec<&RadicalNumber> =
                pres.tensor.entries().map(|(_, _, _, v)| v).collect();
            if !options
                .filters
                .iter()
                .all(|filter| filter.passes(entries.iter().copied()))
            {
                continue;
            }
            let record = CmRecord {
                family: "cm",
                m,
                delta: delta.to_string(),
                sign_x: params.sign_x,
                sign_y: params.sign_y,
                flags: ScanFlags {
                    is_table_algebra: report.flags.is_table_algebra,
                    is_rational: report.flags.is_rational,
                    is_integral: report.flags.is_integral,
                    nonnegative: report.flags.nonnegative,
                    max_denominator: report.flags.max_denominator.to_string(),
                },
                radicands: pres
                    .tensor
                    .radicand_values()
                    .iter()
                    .map(BigUint::to_string)
                    .collect(),
                basis: options.emit_basis.then(|| BasisDoc::from(&basis)),
            };
            writeln!(
                out,
                "{}",
                serde_json::to_string(&record).expect("serializable")
            )
            .map_err(|e| Error::Inconsistency(e.to_string()))?;
            stats.emitted += 1;
        }
    }
    Ok(stats)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn grid_range_parsing() {
        let range: GridRange = "1..10".parse().unwrap();
        assert_eq!(range.points().unwrap().len(), 10);
        let stepped: GridRange = "1..2:1/2".parse().unwrap();
        assert_eq!(
            stepped.points().unwrap(),
            vec![rat(1, 1), rat(3, 2), rat(2, 1)]
        );
        let single: GridRange = "3/2".parse().unwrap();
        assert_eq!(single.points().unwrap(), vec![rat(3, 2)]);
        assert!("5..1".parse::<GridRange>().is_err());
        assert!("1..5:0".parse::<GridRange>().is_err());
        assert!("1..5:-1".parse::<GridRange>().is_err());
    }

    #[test]
    fn integer_points_reject_fractions() {
        let range: GridRange = "2..4".parse().unwrap();
        assert_eq!(range.integer_points().unwrap(), vec![2, 3, 4]);
        let fractional: GridRange = "1/2..2:1/2".parse().unwrap();
        assert!(fractional.integer_points().is_err());
    }

    #[test]
    fn filter_parsing() {
        assert_eq!("rational".parse::<Filter>().unwrap(), Filter::Rational);
        assert_eq!(
            "max-den=8".parse::<Filter>().unwrap(),
            Filter::MaxDenominator(8u32.into())
        );
        assert!("bogus".parse::<Filter>().is_err());
    }

    #[test]
    fn rational_nonnegative_scan_finds_the_known_point() {
        let ranges = [
            "6".parse().unwrap(),
            "6".parse().unwrap(),
            "6".parse().unwrap(),
        ];
        let options = ScanOptions {
            filters: vec![Filter::Rational, Filter::Nonnegative],
            cross_check: true,
            emit_basis: false,
        };
        let mut out = Vec::new();
        let stats = scan_dim5(&ranges, &options, &mut out).unwrap();
        assert_eq!(stats.evaluated, 8);
        assert_eq!(stats.emitted, 8, "{}", String::from_utf8_lossy(&out));
        let first_line = String::from_utf8(out).unwrap();
        assert!(
            first_line.contains("\"max_denominator\":\"8\""),
            "{first_line}"
        );
        assert!(first_line.contains("\"is_table_algebra\":true"));
    }

    #[test]
    fn scan_is_deterministic() {
        let ranges: [GridRange; 3] = [
            "1..2".parse().unwrap(),
            "1..2".parse().unwrap(),
            "1".parse().unwrap(),
        ];
        let options = ScanOptions {
            filters: vec![Filter::Rational],
            cross_check: false,
            emit_basis: false,
        };
        let mut first = Vec::new();
        let mut second = Vec::new();
        scan_dim5(&ranges, &options, &mut first).unwrap();
        scan_dim5(&ranges, &options, &mut second).unwrap();
        assert_eq!(first, second);
    }

    #[test]
    fn cm_scan_reports_radicands() {
        let options = ScanOptions::default();
        let mut out = Vec::new();
        let stats = scan_cm(
            &"2".parse().unwrap(),
            &"1..2".parse().unwrap(),
            &options,
            &mut out,
        )
        .unwrap();
        assert_eq!(stats.evaluated, 2);
        assert_eq!(stats.emitted, 2);
        let text = String::from_utf8(out).unwrap();
        for line in text.lines() {
            assert!(line.contains("\"radicands\""));
        }
    }

    #[test]
    fn small_integral_scan_is_empty() {
        let ranges: [GridRange; 3] = [
            "1..3".parse().unwrap(),
            "1..3".parse().unwrap(),
            "1..3".parse().unwrap(),
        ];
        let options = ScanOptions {
            filters: vec![Filter::Integral],
            cross_check: false,
            emit_basis: false,
        };
        let mut out = Vec::new();
        let stats = scan_dim5(&ranges, &options, &mut out).unwrap();
        assert_eq!(stats.evaluated, 27 * 8);
        assert_eq!(stats.emitted, 0, "{}", String::from_utf8_lossy(&out));
    }
}
