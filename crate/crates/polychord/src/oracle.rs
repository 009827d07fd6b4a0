//! Independent floating-point recomputation of chord spectra.
//!
//! This pipeline shares no arithmetic with the exact path: polygon chords are
//! evaluated as `2 - 2cos(2*pi*j/E)`, simplices through a numeric embedding,
//! and coordinate polytopes through big-float norms, then distance values are
//! grouped by a relative tolerance instead of exact comparison. Agreement
//! between the two pipelines is therefore evidence against a shared bug.
//!
//! Grouping uses tolerance `2^(-precision_bits/2)`, far below the real
//! separation of any catalog spectrum but far above accumulated rounding. A
//! value landing in the gray band between one tolerance and sixteen is
//! refused as ambiguous rather than silently grouped.

use astro_float::{BigFloat, Consts, RoundingMode};
use thiserror::Error;

use crate::catalog::{vertices, CatalogError, PolytopeKind, PolytopeSpec};
use crate::cyclotomic::CycloElement;
use crate::exactnum::rational_to_bigfloat;
use crate::spectrum::{chord_spectrum, Spectrum, SpectrumError};
use crate::theorems::Verdict;

const RM: RoundingMode = RoundingMode::ToEven;
/// Gray-band multiplier: values between `tol` and `AMBIGUITY_BAND * tol` of a
/// group are neither merged nor separated with confidence.
const AMBIGUITY_BAND: u64 = 16;

#[derive(Debug, Error)]
pub enum OracleError {
    #[error("precision must be at least 64 bits, got {0}")]
    PrecisionTooLow(usize),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error(transparent)]
    Spectrum(#[from] SpectrumError),
    #[error("ambiguous grouping for {polytope}: {detail}; rerun at higher precision")]
    AmbiguousGrouping { polytope: String, detail: String },
    #[error("pipelines disagree on {polytope}, entry {entry}: {detail}")]
    Disagreement {
        polytope: String,
        entry: usize,
        detail: String,
    },
    #[error("floating pipeline produced a non-finite value in {0}")]
    NotFinite(&'static str),
}

/// One distance group found by the floating pipeline.
#[derive(Debug, Clone)]
pub struct FloatEntry {
    pub d_squared: BigFloat,
    pub count: u64,
}

/// A chord spectrum recomputed in floating point and grouped by tolerance.
#[derive(Debug, Clone)]
pub struct FloatSpectrum {
    pub entries: Vec<FloatEntry>,
    pub precision_bits: usize,
    pub grouping_tolerance: BigFloat,
}

impl FloatSpectrum {
    pub fn total_count(&self) -> u64 {
        self.entries.iter().map(|e| e.count).sum()
    }
}

fn cmp_floats(a: &BigFloat, b: &BigFloat) -> Result<std::cmp::Ordering, OracleError> {
    match a.cmp(b) {
        Some(o) if o < 0 => Ok(std::cmp::Ordering::Less),
        Some(o) if o > 0 => Ok(std::cmp::Ordering::Greater),
        Some(_) => Ok(std::cmp::Ordering::Equal),
        None => Err(OracleError::NotFinite("comparison")),
    }
}

/// Relative distance `|a - b| / |b|`; `b` is a group center, always positive.
fn rel_distance(a: &BigFloat, b: &BigFloat, p: usize) -> BigFloat {
    a.sub(b, p, RM).abs().div(&b.abs(), p, RM)
}

/// `2^(-p/2)` as a float.
fn default_tolerance(p: usize) -> BigFloat {
    let one = BigFloat::from_u64(1, p);
    let shift = (p / 2) as i64;
    // powi on 2 then invert: 2^(p/2) is exactly representable.
    let scale = BigFloat::from_u64(2, p).powi(shift as usize, p, RM);
    one.div(&scale, p, RM)
}

/// Groups weighted values into clusters by relative tolerance.
///
/// A value merges into the first group within `tol`; a value within the gray
/// band `[tol, 16*tol)` of any group is an error; otherwise it opens a new
/// group. After all values arrive, adjacent group centers must themselves be
/// separated by at least `16*tol`.
struct Clusterer {
    p: usize,
    tol: BigFloat,
    band: BigFloat,
    groups: Vec<(BigFloat, u64)>,
}

impl Clusterer {
    fn new(p: usize, tol: BigFloat) -> Self {
        let band = tol.mul(&BigFloat::from_u64(AMBIGUITY_BAND, p), p, RM);
        Clusterer {
            p,
            tol,
            band,
            groups: Vec::new(),
        }
    }

    fn push(&mut self, value: BigFloat, weight: u64) -> Result<(), String> {
        let mut nearest: Option<BigFloat> = None;
        for (center, count) in self.groups.iter_mut() {
            let rel = rel_distance(&value, center, self.p);
            if matches!(rel.cmp(&self.tol), Some(o) if o < 0) {
                *count += weight;
                return Ok(());
            }
            let closer = match &nearest {
                None => true,
                Some(best) => matches!(rel.cmp(best), Some(o) if o < 0),
            };
            if closer {
                nearest = Some(rel);
            }
        }
        if let Some(best) = nearest {
            if matches!(best.cmp(&self.band), Some(o) if o < 0) {
                return Err(format!(
                    "value {value} sits between 1 and {AMBIGUITY_BAND} tolerances of an existing group"
                ));
            }
        }
        self.groups.push((value, weight));
        Ok(())
    }

    fn finish(self) -> Result<Vec<FloatEntry>, OracleError> {
        let mut groups = self.groups;
        let mut sort_err = None;
        groups.sort_by(|a, b| match cmp_floats(&a.0, &b.0) {
            Ok(o) => o,
            Err(e) => {
                sort_err = Some(e);
                std::cmp::Ordering::Equal
            }
        });
        if let Some(e) = sort_err {
            return Err(e);
        }
        for pair in groups.windows(2) {
            let rel = rel_distance(&pair[1].0, &pair[0].0, self.p);
            if matches!(rel.cmp(&self.band), Some(o) if o < 0) {
                return Err(OracleError::AmbiguousGrouping {
                    polytope: String::new(),
                    detail: format!(
                        "adjacent groups {} and {} are closer than {AMBIGUITY_BAND} tolerances",
                        pair[0].0, pair[1].0
                    ),
                });
            }
        }
        Ok(groups
            .into_iter()
            .map(|(d_squared, count)| FloatEntry { d_squared, count })
            .collect())
    }
}

/// Recomputes the chord spectrum of a catalog polytope in floating point.
///
/// Polygons evaluate `2 - 2cos(2*pi*j/E)` per step; simplices embed the
/// standard basis less its centroid, rescaled to the unit sphere; every other
/// polytope converts its exact coordinates once and measures all vertex pairs
/// numerically. Values are grouped with relative tolerance
/// `2^(-precision_bits/2)`.
pub fn float_spectrum(
    spec: &PolytopeSpec,
    precision_bits: usize,
) -> Result<FloatSpectrum, OracleError> {
    if precision_bits < 64 {
        return Err(OracleError::PrecisionTooLow(precision_bits));
    }
    let p = precision_bits;
    let tol = default_tolerance(p);
    let mut clusterer = Clusterer::new(p, tol.clone());

    let feed = |clusterer: &mut Clusterer, value: BigFloat, weight: u64| {
        clusterer
            .push(value, weight)
            .map_err(|detail| OracleError::AmbiguousGrouping {
                polytope: spec.to_string(),
                detail,
            })
    };

    match spec.kind() {
        PolytopeKind::Polygon(order) => {
            let mut consts = Consts::new().map_err(|_| OracleError::NotFinite("constants"))?;
            let two_pi = consts
                .pi(p, RM)
                .mul(&BigFloat::from_u64(2, p), p, RM);
            let order_f = BigFloat::from_u64(order, p);
            let two = BigFloat::from_u64(2, p);
            for step in 1..=order / 2 {
                let angle = two_pi
                    .mul(&BigFloat::from_u64(step, p), p, RM)
                    .div(&order_f, p, RM);
                let value = two.sub(&two.mul(&angle.cos(p, RM, &mut consts), p, RM), p, RM);
                // Pairs at circular distance `step`: one per vertex, halved at
                // the diameter where the two endpoints coincide as a pair.
                let weight = if 2 * step == order { order / 2 } else { order };
                feed(&mut clusterer, value, weight)?;
            }
        }
        PolytopeKind::Simplex(n) => {
            let count = n as usize + 1;
            // e_i minus the centroid has squared norm 1 - 1/(n+1); rescale to
            // put the points on the unit sphere.
            let inv = BigFloat::from_u64(1, p).div(&BigFloat::from_u64(count as u64, p), p, RM);
            let radius_sq = BigFloat::from_u64(1, p).sub(&inv, p, RM);
            let scale = radius_sq.sqrt(p, RM);
            let mut points: Vec<Vec<BigFloat>> = Vec::with_capacity(count);
            for i in 0..count {
                let mut coords = Vec::with_capacity(count);
                for j in 0..count {
                    let base = if i == j {
                        BigFloat::from_u64(1, p).sub(&inv, p, RM)
                    } else {
                        inv.neg()
                    };
                    coords.push(base.div(&scale, p, RM));
                }
                points.push(coords);
            }
            feed_pairwise(&mut clusterer, &points, p, &feed)?;
        }
        _ => {
            let vertex_set = vertices(spec)?;
            let mut points: Vec<Vec<BigFloat>> = vertex_set
                .points()
                .iter()
                .map(|row| row.iter().map(|x| x.to_float(p)).collect())
                .collect();
            // Coordinate charts are integer or golden-ratio scaled; divide by
            // the first vertex's norm to land on the unit sphere.
            let mut radius_sq = BigFloat::from_u64(0, p);
            for x in &points[0] {
                radius_sq = radius_sq.add(&x.mul(x, p, RM), p, RM);
            }
            let scale = radius_sq.sqrt(p, RM);
            for row in &mut points {
                for x in row.iter_mut() {
                    *x = x.div(&scale, p, RM);
                }
            }
            feed_pairwise(&mut clusterer, &points, p, &feed)?;
        }
    }

    let entries = match clusterer.finish() {
        Ok(entries) => entries,
        Err(OracleError::AmbiguousGrouping { detail, .. }) => {
            return Err(OracleError::AmbiguousGrouping {
                polytope: spec.to_string(),
                detail,
            })
        }
        Err(e) => return Err(e),
    };
    Ok(FloatSpectrum {
        entries,
        precision_bits: p,
        grouping_tolerance: tol,
    })
}

fn feed_pairwise(
    clusterer: &mut Clusterer,
    points: &[Vec<BigFloat>],
    p: usize,
    feed: &impl Fn(&mut Clusterer, BigFloat, u64) -> Result<(), OracleError>,
) -> Result<(), OracleError> {
    for i in 0..points.len() {
        for j in (i + 1)..points.len() {
            let mut acc = BigFloat::from_u64(0, p);
            for (xi, xj) in points[i].iter().zip(points[j].iter()) {
                let d = xi.sub(xj, p, RM);
                acc = acc.add(&d.mul(&d, p, RM), p, RM);
            }
            feed(clusterer, acc, 1)?;
        }
    }
    Ok(())
}

/// Evaluates a cyclotomic element numerically as `sum c_j cos(2*pi*j/E)`,
/// checking that the imaginary part vanishes.
fn cyclo_real_part(
    elem: &CycloElement,
    p: usize,
    consts: &mut Consts,
) -> Result<BigFloat, OracleError> {
    let order = elem.order();
    let two_pi = consts.pi(p, RM).mul(&BigFloat::from_u64(2, p), p, RM);
    let order_f = BigFloat::from_u64(order, p);
    let mut real = BigFloat::from_u64(0, p);
    let mut imag = BigFloat::from_u64(0, p);
    for (j, coeff) in elem.coefficients().iter().enumerate() {
        if num_traits::Zero::is_zero(coeff) {
            continue;
        }
        let c = rational_to_bigfloat(coeff, p);
        let angle = two_pi
            .mul(&BigFloat::from_u64(j as u64, p), p, RM)
            .div(&order_f, p, RM);
        real = real.add(&c.mul(&angle.cos(p, RM, consts), p, RM), p, RM);
        imag = imag.add(&c.mul(&angle.sin(p, RM, consts), p, RM), p, RM);
    }
    let bound = default_tolerance(p);
    if !matches!(imag.abs().cmp(&bound), Some(o) if o < 0) {
        return Err(OracleError::NotFinite("imaginary residue"));
    }
    Ok(real)
}

/// Cross-checks the exact spectrum against the floating oracle at 128 bits
/// with relative tolerance 1e-9.
pub fn cross_check(spec: &PolytopeSpec) -> Result<Verdict, OracleError> {
    cross_check_with(spec, 128, 1e-9)
}

/// Cross-check at an explicit precision and per-entry relative tolerance.
///
/// Both pipelines must find the same number of distance groups with the same
/// counts, and each exact value rendered as a float must sit within the given
/// relative tolerance of the oracle's group center.
pub fn cross_check_with(
    spec: &PolytopeSpec,
    precision_bits: usize,
    rel_tolerance: f64,
) -> Result<Verdict, OracleError> {
    let p = precision_bits;
    let float = float_spectrum(spec, p)?;
    let exact = chord_spectrum(spec)?;

    let exact_entries: Vec<(BigFloat, u64, String)> = match &exact {
        Spectrum::Quad(s) => s
            .entries()
            .iter()
            .map(|e| (e.d_squared.to_float(p), e.chord_count, e.d_squared.to_string()))
            .collect(),
        Spectrum::Polygon(s) => {
            let mut consts = Consts::new().map_err(|_| OracleError::NotFinite("constants"))?;
            let mut rows = Vec::with_capacity(s.entries().len());
            for e in s.entries() {
                let value = cyclo_real_part(&e.d_squared, p, &mut consts)?;
                rows.push((value, e.chord_count, e.d_squared.to_string()));
            }
            rows
        }
    };

    if exact_entries.len() != float.entries.len() {
        return Err(OracleError::Disagreement {
            polytope: spec.to_string(),
            entry: 0,
            detail: format!(
                "distinct counts differ: exact k = {}, float k = {}",
                exact_entries.len(),
                float.entries.len()
            ),
        });
    }

    let tol = BigFloat::from_f64(rel_tolerance, p);
    let mut max_rel = BigFloat::from_u64(0, p);
    for (idx, ((exact_value, exact_count, exact_str), group)) in
        exact_entries.iter().zip(float.entries.iter()).enumerate()
    {
        if *exact_count != group.count {
            return Err(OracleError::Disagreement {
                polytope: spec.to_string(),
                entry: idx,
                detail: format!(
                    "counts differ at {exact_str}: exact {exact_count}, float {}",
                    group.count
                ),
            });
        }
        let rel = rel_distance(&group.d_squared, exact_value, p);
        if !matches!(rel.cmp(&tol), Some(o) if o < 0) {
            return Err(OracleError::Disagreement {
                polytope: spec.to_string(),
                entry: idx,
                detail: format!(
                    "relative difference {rel} at {exact_str} exceeds {rel_tolerance:e}"
                ),
            });
        }
        if matches!(rel.cmp(&max_rel), Some(o) if o > 0) {
            max_rel = rel;
        }
    }

    Ok(Verdict {
        check_name: "oracle",
        polytope: spec.to_string(),
        claimed: format!("float pipeline at {p} bits within {rel_tolerance:e}"),
        computed: format!("k = {}, counts agree", exact_entries.len()),
        pass: true,
        detail: format!(
            "max relative difference {max_rel}; grouping tolerance {}",
            float.grouping_tolerance
        ),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(name: &str) -> PolytopeSpec {
        name.parse().unwrap()
    }

    #[test]
    fn triangle_has_one_group_of_three() {
        let fs = float_spectrum(&spec("polygon:3"), 128).unwrap();
        assert_eq!(fs.entries.len(), 1);
        assert_eq!(fs.entries[0].count, 3);
        let three = BigFloat::from_u64(3, 128);
        let rel = rel_distance(&fs.entries[0].d_squared, &three, 128);
        assert!(matches!(rel.cmp(&BigFloat::from_f64(1e-30, 128)), Some(o) if o < 0));
    }

    #[test]
    fn cell24_groups_match_expected_counts() {
        let fs = float_spectrum(&spec("24-cell"), 128).unwrap();
        let counts: Vec<u64> = fs.entries.iter().map(|e| e.count).collect();
        assert_eq!(counts, vec![96, 72, 96, 12]);
        assert_eq!(fs.total_count(), 24 * 23 / 2);
    }

    #[test]
    fn icosahedron_float_sum_is_v_squared() {
        let fs = float_spectrum(&spec("icosahedron"), 128).unwrap();
        let p = 128;
        let mut sum = BigFloat::from_u64(0, p);
        for e in &fs.entries {
            sum = sum.add(
                &e.d_squared.mul(&BigFloat::from_u64(e.count, p), p, RM),
                p,
                RM,
            );
        }
        let rel = rel_distance(&sum, &BigFloat::from_u64(144, p), p);
        assert!(matches!(rel.cmp(&BigFloat::from_f64(1e-12, p)), Some(o) if o < 0));
    }

    #[test]
    fn cross_check_passes_for_representatives() {
        for name in [
            "polygon:5",
            "polygon:12",
            "simplex:4",
            "crosspolytope:4",
            "cube:4",
            "icosahedron",
            "dodecahedron",
            "24-cell",
            "600-cell",
        ] {
            let verdict = cross_check(&spec(name)).unwrap();
            assert!(verdict.pass, "{name}");
        }
    }

    #[test]
    fn starved_precision_with_absurd_tolerance_errors() {
        let result = cross_check_with(&spec("icosahedron"), 64, 1e-40);
        assert!(result.is_err(), "expected an error, got {result:?}");
    }

    #[test]
    fn precision_floor_is_enforced() {
        assert!(matches!(
            float_spectrum(&spec("cube:3"), 32),
            Err(OracleError::PrecisionTooLow(32))
        ));
    }
}
