//! JSON documents for reports, polytopes, Legendrian verification, and
//! symplectic decompositions.
//!
//! Rationals are encoded as exact strings (`"p/q"`, or `"p"` when the
//! denominator is 1), lattice vectors as integer arrays. Field order is
//! fixed by declaration order, so output is stable byte for byte.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use legendric_core::classify::identification_for;
use legendric_core::matrix::VectorList;
use legendric_core::polytope::LatticePolytope;
use legendric_core::{ClassificationReport, Rational, RationalMatrix, WeightTuple};

use crate::manifest::RunManifest;

#[derive(Debug)]
pub enum FormatError {
    Json(serde_json::Error),
    BadRational(String),
    BadWeights(String),
    BadMatrix(String),
}

impl fmt::Display for FormatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FormatError::Json(e) => write!(f, "malformed JSON: {e}"),
            FormatError::BadRational(s) => write!(f, "not an exact rational: {s:?}"),
            FormatError::BadWeights(s) => write!(f, "invalid weight tuple: {s}"),
            FormatError::BadMatrix(s) => write!(f, "invalid matrix: {s}"),
        }
    }
}

impl std::error::Error for FormatError {}

impl From<serde_json::Error> for FormatError {
    fn from(e: serde_json::Error) -> Self {
        FormatError::Json(e)
    }
}

pub fn rational_from_str(s: &str) -> Result<Rational, FormatError> {
    Rational::from_str(s.trim()).map_err(|_| FormatError::BadRational(s.to_string()))
}

pub fn matrix_to_strings(m: &RationalMatrix) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|r| m.row(r).iter().map(Rational::to_string).collect())
        .collect()
}

pub fn matrix_from_strings(rows: &[Vec<String>]) -> Result<RationalMatrix, FormatError> {
    let mut parsed = Vec::with_capacity(rows.len());
    for row in rows {
        let mut out = Vec::with_capacity(row.len());
        for entry in row {
            out.push(rational_from_str(entry)?);
        }
        parsed.push(out);
    }
    RationalMatrix::from_rows(parsed).map_err(|e| FormatError::BadMatrix(e.to_string()))
}

fn vectors_to_strings(list: &VectorList) -> Vec<Vec<String>> {
    list.vectors()
        .iter()
        .map(|v| v.iter().map(Rational::to_string).collect())
        .collect()
}

/// One classification verdict, exactly mirroring the core report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDto {
    pub tuple: Vec<i64>,
    pub legendrian: bool,
    pub nondegenerate: bool,
    pub star_condition: bool,
    pub smooth: bool,
    pub smooth_witness: Option<Vec<i64>>,
    pub simple_polytope: bool,
    pub interior_weight: bool,
    pub identification: Option<String>,
}

impl From<&ClassificationReport> for ReportDto {
    fn from(report: &ClassificationReport) -> Self {
        ReportDto {
            tuple: report.tuple.entries().to_vec(),
            legendrian: report.legendrian,
            nondegenerate: report.nondegenerate,
            star_condition: report.star_condition,
            smooth: report.smooth,
            smooth_witness: report.smooth_witness.clone(),
            simple_polytope: report.simple_polytope,
            interior_weight: report.interior_weight,
            identification: report.identification.map(str::to_string),
        }
    }
}

impl ReportDto {
    pub fn to_report(&self) -> Result<ClassificationReport, FormatError> {
        let tuple = WeightTuple::new(&self.tuple)
            .map_err(|e| FormatError::BadWeights(e.to_string()))?;
        let identification = self
            .identification
            .as_deref()
            .and_then(|_| identification_for(&tuple));
        Ok(ClassificationReport {
            tuple,
            legendrian: self.legendrian,
            nondegenerate: self.nondegenerate,
            star_condition: self.star_condition,
            smooth: self.smooth,
            smooth_witness: self.smooth_witness.clone(),
            simple_polytope: self.simple_polytope,
            interior_weight: self.interior_weight,
            identification,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FacetDto {
    pub normal: Vec<i64>,
    pub offset: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolytopeDto {
    pub dim: usize,
    pub points: Vec<Vec<i64>>,
    pub vertices: Vec<Vec<i64>>,
    pub facets: Vec<FacetDto>,
    pub edges: Vec<(Vec<i64>, Vec<i64>)>,
}

impl From<&LatticePolytope> for PolytopeDto {
    fn from(poly: &LatticePolytope) -> Self {
        PolytopeDto {
            dim: poly.dim(),
            points: poly.points().to_vec(),
            vertices: poly.vertices().to_vec(),
            facets: poly
                .facets()
                .iter()
                .map(|f| FacetDto {
                    normal: f.normal.clone(),
                    offset: f.offset,
                })
                .collect(),
            edges: poly.edges().edges().to_vec(),
        }
    }
}

impl PolytopeDto {
    /// Rebuilds the hull from the stored generating points.
    pub fn to_polytope(&self) -> Result<LatticePolytope, FormatError> {
        LatticePolytope::from_points(self.dim, &self.points)
            .map_err(|e| FormatError::BadMatrix(e.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckDocument {
    pub manifest: RunManifest,
    pub report: ReportDto,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClassifyDocument {
    pub manifest: RunManifest,
    pub reports: Vec<ReportDto>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PolytopeDocument {
    pub manifest: RunManifest,
    pub polytope: PolytopeDto,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyDocument {
    pub manifest: RunManifest,
    pub weights: Vec<i64>,
    pub legendrian: bool,
    /// Tangent frame at the base point, rows as exact rational strings.
    pub base_frame: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DecomposeDocument {
    pub manifest: RunManifest,
    pub g_plus: Vec<Vec<String>>,
    pub g_minus: Vec<Vec<String>>,
}

fn pretty<T: Serialize>(value: &T) -> String {
    let mut out = serde_json::to_string_pretty(value).expect("documents serialize infallibly");
    out.push('\n');
    out
}

pub fn emit_check(manifest: RunManifest, report: &ClassificationReport) -> String {
    pretty(&CheckDocument {
        manifest,
        report: report.into(),
    })
}

pub fn emit_classification(manifest: RunManifest, reports: &[ClassificationReport]) -> String {
    pretty(&ClassifyDocument {
        manifest,
        reports: reports.iter().map(ReportDto::from).collect(),
    })
}

pub fn emit_polytope(manifest: RunManifest, poly: &LatticePolytope) -> String {
    pretty(&PolytopeDocument {
        manifest,
        polytope: poly.into(),
    })
}

pub fn emit_verify(
    manifest: RunManifest,
    tuple: &WeightTuple,
    legendrian: bool,
    base_frame: &VectorList,
) -> String {
    pretty(&VerifyDocument {
        manifest,
        weights: tuple.entries().to_vec(),
        legendrian,
        base_frame: vectors_to_strings(base_frame),
    })
}

pub fn emit_decompose(
    manifest: RunManifest,
    g_plus: &RationalMatrix,
    g_minus: &RationalMatrix,
) -> String {
    pretty(&DecomposeDocument {
        manifest,
        g_plus: matrix_to_strings(g_plus),
        g_minus: matrix_to_strings(g_minus),
    })
}

pub fn parse_check(input: &str) -> Result<CheckDocument, FormatError> {
    Ok(serde_json::from_str(input)?)
}

pub fn parse_classification(input: &str) -> Result<ClassifyDocument, FormatError> {
    Ok(serde_json::from_str(input)?)
}

pub fn parse_polytope(input: &str) -> Result<PolytopeDocument, FormatError> {
    Ok(serde_json::from_str(input)?)
}
