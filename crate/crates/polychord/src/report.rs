//! Canonical report rendering: JSON, CSV, and markdown documents.
//!
//! Serialization is deterministic: JSON object keys are sorted (the default
//! serde_json map is a BTreeMap), spectrum entries stay in ascending order,
//! documents carry no timestamps, and exact values are rendered as integer or
//! rational strings, never as floating point. Values in the quadratic field
//! use the wire form `{"kind":"quad","a":"p/q","b":"r/s"}` meaning
//! `a + b*sqrt(5)`; polygon chords use `{"kind":"cyclo",...}` with the
//! coefficient vector of the reduced cyclotomic representative.

use num_rational::BigRational;
use serde_json::{json, Value};

use crate::catalog::{face_counts, CatalogError, PolytopeSpec};
use crate::cyclotomic::CycloElement;
use crate::exactnum::QuadExt;
use crate::spectrum::{FactoredProduct, PolygonSpectrum, Spectrum, SpectrumError};
use crate::theorems::{ExplorationReport, Verdict};

/// Version stamped into every document.
pub const SCHEMA_VERSION: u64 = 1;

/// Output format shared by all subcommands.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Csv,
    Markdown,
}

impl std::str::FromStr for ReportFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "json" => Ok(ReportFormat::Json),
            "csv" => Ok(ReportFormat::Csv),
            "markdown" => Ok(ReportFormat::Markdown),
            other => Err(format!("unknown format `{other}` (json|csv|markdown)")),
        }
    }
}

fn tool_version() -> &'static str {
    env!("CARGO_PKG_VERSION")
}

/// `{"kind":"quad","a":"p/q","b":"r/s"}` for `a + b*sqrt(5)`.
pub fn quad_value(q: &QuadExt) -> Value {
    json!({
        "kind": "quad",
        "a": q.rational_part().to_string(),
        "b": q.radical_part().to_string(),
    })
}

/// `{"kind":"cyclo","order":E,"coefficients":[...]}` for a reduced element of
/// the E-th cyclotomic field.
pub fn cyclo_value(x: &CycloElement) -> Value {
    let coeffs: Vec<Value> = x
        .coefficients()
        .iter()
        .map(|c| Value::String(c.to_string()))
        .collect();
    json!({
        "kind": "cyclo",
        "order": x.order(),
        "coefficients": coeffs,
    })
}

fn rational_string(q: &BigRational) -> String {
    q.to_string()
}

fn factored_value(product: &FactoredProduct) -> Value {
    let factors: Vec<Value> = product
        .factors()
        .iter()
        .map(|(base, exponent)| {
            json!({
                "base": quad_value(base),
                "exponent": exponent,
            })
        })
        .collect();
    json!({
        "factors": factors,
        "total_exponent": product.total_exponent(),
    })
}

fn count_value(value: u128) -> Value {
    match u64::try_from(value) {
        Ok(small) => Value::from(small),
        Err(_) => Value::String(value.to_string()),
    }
}

/// Full spectrum document for one polytope.
pub fn spectrum_document(
    spec: &PolytopeSpec,
    spectrum: &Spectrum,
) -> Result<Value, SpectrumError> {
    let (entries, aggregates) = match spectrum {
        Spectrum::Quad(s) => {
            let entries: Vec<Value> = s
                .entries()
                .iter()
                .map(|e| {
                    json!({
                        "d_squared": quad_value(&e.d_squared),
                        "display": e.d_squared.to_string(),
                        "chord_count": e.chord_count,
                        "per_vertex": e.per_vertex,
                    })
                })
                .collect();
            let aggregates = json!({
                "sum_squared": rational_string(&s.sum_squared()?),
                "distinct_sum_squared": quad_value(&s.distinct_sum_squared()),
                "product_squared": factored_value(&s.product_squared()?),
                "distinct_product_squared": quad_value(&s.distinct_product_squared()),
            });
            (entries, aggregates)
        }
        Spectrum::Polygon(s) => (polygon_entries(s), polygon_aggregates(s)?),
    };
    Ok(json!({
        "schema_version": SCHEMA_VERSION,
        "tool_version": tool_version(),
        "polytope": spec.to_string(),
        "dimension": spec.dimension(),
        "vertex_count": spectrum.vertex_count(),
        "distinct_count": spectrum.distinct_count(),
        "total_chords": spectrum.total_chords(),
        "entries": entries,
        "aggregates": aggregates,
    }))
}

fn polygon_entries(s: &PolygonSpectrum) -> Vec<Value> {
    s.entries()
        .iter()
        .map(|e| {
            json!({
                "step": e.step,
                "d_squared": cyclo_value(&e.d_squared),
                "display": e.d_squared.to_string(),
                "chord_count": e.chord_count,
                "per_vertex": e.per_vertex,
            })
        })
        .collect()
}

fn polygon_aggregates(s: &PolygonSpectrum) -> Result<Value, SpectrumError> {
    Ok(json!({
        "sum_squared": rational_string(&s.sum_squared()?),
        "distinct_sum_squared": rational_string(&s.distinct_sum_squared()?),
        "product_squared": rational_string(&s.product_squared()?),
        "distinct_product_squared": rational_string(&s.distinct_product_squared()?),
    }))
}

/// Spectrum rendered in the requested format.
pub fn render_spectrum(
    spec: &PolytopeSpec,
    spectrum: &Spectrum,
    format: ReportFormat,
) -> Result<String, SpectrumError> {
    match format {
        ReportFormat::Json => {
            let doc = spectrum_document(spec, spectrum)?;
            Ok(pretty(&doc))
        }
        ReportFormat::Csv => {
            let mut out = String::from("d_squared,chord_count,per_vertex\n");
            match spectrum {
                Spectrum::Quad(s) => {
                    for e in s.entries() {
                        out.push_str(&format!(
                            "{},{},{}\n",
                            e.d_squared, e.chord_count, e.per_vertex
                        ));
                    }
                }
                Spectrum::Polygon(s) => {
                    for e in s.entries() {
                        out.push_str(&format!(
                            "{},{},{}\n",
                            e.d_squared, e.chord_count, e.per_vertex
                        ));
                    }
                }
            }
            Ok(out)
        }
        ReportFormat::Markdown => {
            let mut out = format!(
                "# Chord spectrum of {spec}\n\n\
                 Vertices: {}; distinct chord lengths: {}; total chords: {}\n\n\
                 | d^2 | chords | per vertex |\n|---|---|---|\n",
                spectrum.vertex_count(),
                spectrum.distinct_count(),
                spectrum.total_chords(),
            );
            match spectrum {
                Spectrum::Quad(s) => {
                    for e in s.entries() {
                        out.push_str(&format!(
                            "| {} | {} | {} |\n",
                            e.d_squared, e.chord_count, e.per_vertex
                        ));
                    }
                    out.push_str(&format!(
                        "\nSum of squares: {}\n\nDistinct sum: {}\n\nProduct: {}\n\nDistinct product: {}\n",
                        s.sum_squared()?,
                        s.distinct_sum_squared(),
                        s.product_squared()?,
                        s.distinct_product_squared(),
                    ));
                }
                Spectrum::Polygon(s) => {
                    for e in s.entries() {
                        out.push_str(&format!(
                            "| {} | {} | {} |\n",
                            e.d_squared, e.chord_count, e.per_vertex
                        ));
                    }
                    out.push_str(&format!(
                        "\nSum of squares: {}\n\nDistinct sum: {}\n\nProduct: {}\n\nDistinct product: {}\n",
                        s.sum_squared()?,
                        s.distinct_sum_squared()?,
                        s.product_squared()?,
                        s.distinct_product_squared()?,
                    ));
                }
            }
            Ok(out)
        }
    }
}

fn verdict_value(v: &Verdict) -> Value {
    json!({
        "check": v.check_name,
        "polytope": v.polytope,
        "claimed": v.claimed,
        "computed": v.computed,
        "pass": v.pass,
        "detail": v.detail,
    })
}

/// Verdict collection document.
pub fn verdicts_document(scope: &str, verdicts: &[Verdict]) -> Value {
    let all_pass = verdicts.iter().all(|v| v.pass);
    let rows: Vec<Value> = verdicts.iter().map(verdict_value).collect();
    json!({
        "schema_version": SCHEMA_VERSION,
        "tool_version": tool_version(),
        "scope": scope,
        "verdicts": rows,
        "all_pass": all_pass,
    })
}

/// Verdicts rendered in the requested format.
pub fn render_verdicts(scope: &str, verdicts: &[Verdict], format: ReportFormat) -> String {
    match format {
        ReportFormat::Json => pretty(&verdicts_document(scope, verdicts)),
        ReportFormat::Csv => {
            let mut out = String::from("check,polytope,pass,claimed,computed\n");
            for v in verdicts {
                out.push_str(&format!(
                    "{},{},{},{},{}\n",
                    v.check_name,
                    v.polytope,
                    v.pass,
                    csv_field(&v.claimed),
                    csv_field(&v.computed),
                ));
            }
            out
        }
        ReportFormat::Markdown => {
            let mut out = format!(
                "# Verification: {scope}\n\n| check | polytope | pass | computed |\n|---|---|---|---|\n"
            );
            for v in verdicts {
                out.push_str(&format!(
                    "| {} | {} | {} | {} |\n",
                    v.check_name,
                    v.polytope,
                    if v.pass { "pass" } else { "FAIL" },
                    v.computed,
                ));
            }
            let all = verdicts.iter().all(|v| v.pass);
            out.push_str(&format!(
                "\n{} of {} checks passed.\n",
                verdicts.iter().filter(|v| v.pass).count(),
                verdicts.len(),
            ));
            if !all {
                out.push_str("\nFailures:\n");
                for v in verdicts.iter().filter(|v| !v.pass) {
                    out.push_str(&format!(
                        "- {} on {}: claimed {}, computed {} ({})\n",
                        v.check_name, v.polytope, v.claimed, v.computed, v.detail
                    ));
                }
            }
            out
        }
    }
}

fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn prime_factor_values(factors: &[(u64, i64)]) -> Vec<Value> {
    factors
        .iter()
        .map(|(prime, exponent)| json!({"prime": prime, "exponent": exponent}))
        .collect()
}

/// Exploration report document.
pub fn exploration_document(report: &ExplorationReport) -> Value {
    let mut doc = json!({
        "schema_version": SCHEMA_VERSION,
        "tool_version": tool_version(),
        "polytope": report.polytope,
        "vertex_count": report.vertex_count,
        "distinct_count": report.distinct_count,
        "product_factors": prime_factor_values(&report.product_factors),
        "fact3_reference_factors": prime_factor_values(&report.fact3_reference_factors),
        "fact3_shape_holds": report.fact3_shape_holds,
        "distinct_product": report.distinct_product,
        "fact4_integral": report.fact4_integral,
    });
    if let Some((numer, denom)) = &report.evaluated {
        doc["evaluated_numerator"] = Value::String(numer.clone());
        doc["evaluated_denominator"] = Value::String(denom.clone());
    }
    doc
}

/// Exploration report rendered in the requested format.
pub fn render_exploration(report: &ExplorationReport, format: ReportFormat) -> String {
    match format {
        ReportFormat::Json => pretty(&exploration_document(report)),
        ReportFormat::Csv => {
            let mut out = String::from("field,value\n");
            let doc = exploration_document(report);
            if let Value::Object(map) = doc {
                for (key, value) in map {
                    let rendered = match value {
                        Value::String(s) => s,
                        other => other.to_string(),
                    };
                    out.push_str(&format!("{key},{}\n", csv_field(&rendered)));
                }
            }
            out
        }
        ReportFormat::Markdown => {
            let mut out = format!(
                "# Open-case products: {}\n\n\
                 Vertices: {}; distinct chord lengths: {}\n\n\
                 Full product (prime factored): {}\n\n\
                 Crosspolytope shape F^V would be: {}\n\n\
                 F^V shape holds: {}\n\n\
                 Distinct product: {} (integer: {})\n",
                report.polytope,
                report.vertex_count,
                report.distinct_count,
                render_prime_factors(&report.product_factors),
                render_prime_factors(&report.fact3_reference_factors),
                if report.fact3_shape_holds { "yes" } else { "no" },
                report.distinct_product,
                if report.fact4_integral { "yes" } else { "no" },
            );
            if let Some((numer, denom)) = &report.evaluated {
                out.push_str(&format!("\nEvaluated: {numer} / {denom}\n"));
            }
            out
        }
    }
}

fn render_prime_factors(factors: &[(u64, i64)]) -> String {
    if factors.is_empty() {
        return "1".to_string();
    }
    factors
        .iter()
        .map(|(p, e)| format!("{p}^{e}"))
        .collect::<Vec<_>>()
        .join(" * ")
}

/// Catalog listing with face-count columns.
pub fn catalog_document(specs: &[PolytopeSpec]) -> Result<Value, CatalogError> {
    let mut rows = Vec::with_capacity(specs.len());
    for spec in specs {
        let faces = face_counts(spec)?;
        rows.push(json!({
            "polytope": spec.to_string(),
            "dimension": spec.dimension(),
            "vertices": count_value(faces.vertices()),
            "edges": count_value(faces.edges()),
            "ridges": count_value(faces.ridges()),
            "facets": count_value(faces.facets()),
        }));
    }
    Ok(json!({
        "schema_version": SCHEMA_VERSION,
        "tool_version": tool_version(),
        "catalog": rows,
    }))
}

/// Catalog listing in the requested format.
pub fn render_catalog(specs: &[PolytopeSpec], format: ReportFormat) -> Result<String, CatalogError> {
    match format {
        ReportFormat::Json => Ok(pretty(&catalog_document(specs)?)),
        ReportFormat::Csv => {
            let mut out = String::from("polytope,dimension,vertices,edges,ridges,facets\n");
            for spec in specs {
                let faces = face_counts(spec)?;
                out.push_str(&format!(
                    "{},{},{},{},{},{}\n",
                    spec,
                    spec.dimension(),
                    faces.vertices(),
                    faces.edges(),
                    faces.ridges(),
                    faces.facets(),
                ));
            }
            Ok(out)
        }
        ReportFormat::Markdown => {
            let mut out = String::from(
                "| polytope | dim | V | E | R | F |\n|---|---|---|---|---|---|\n",
            );
            for spec in specs {
                let faces = face_counts(spec)?;
                out.push_str(&format!(
                    "| {} | {} | {} | {} | {} | {} |\n",
                    spec,
                    spec.dimension(),
                    faces.vertices(),
                    faces.edges(),
                    faces.ridges(),
                    faces.facets(),
                ));
            }
            Ok(out)
        }
    }
}

/// Pretty-printed JSON with a trailing newline, the canonical byte form.
pub fn pretty(doc: &Value) -> String {
    let mut out = serde_json::to_string_pretty(doc).expect("JSON serialization cannot fail");
    out.push('\n');
    out
}
