//! The regular convex polytopes: identification, counting data, exact
//! unit-sphere coordinates, and duality.
//!
//! Every entry is handled exactly. Polytopes with coordinates in
//! `Q(sqrt(5))` get an explicit vertex list; simplices are served by their
//! Gram matrix (their natural chart lives one dimension up); polygons are
//! deferred to the cyclotomic path in [`crate::cyclotomic`].

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use thiserror::Error;

use crate::exactnum::QuadExt;
use crate::pairwise::{self, PairwiseError};

/// Largest vertex list the exact enumeration paths will materialize.
pub const VERTEX_BUDGET: u64 = 65_536;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CatalogError {
    #[error("unrecognized polytope name {0:?}")]
    UnknownName(String),
    #[error("polygon order must be at least 3, got {0}")]
    PolygonTooSmall(u64),
    #[error("family dimension must be at least 2, got {0}")]
    DimensionTooSmall(u32),
    #[error("{spec}: {op} is served by the cyclotomic path, not coordinates")]
    CyclotomicOnly { spec: String, op: &'static str },
    #[error("{spec}: no coordinate chart; chords come from the Gram matrix")]
    GramOnly { spec: String },
    #[error("face counts of {spec} overflow 128-bit integers")]
    CountOverflow { spec: String },
    #[error("{spec} has {count} vertices, over the enumeration budget of {budget}")]
    EnumerationBudget {
        spec: String,
        count: u128,
        budget: u64,
    },
    #[error("validation gate {gate:?} failed for {spec}: {detail}")]
    GateFailed {
        gate: &'static str,
        spec: String,
        detail: String,
    },
}

/// Identity of one regular convex polytope.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PolytopeKind {
    Polygon(u64),
    Simplex(u32),
    CrossPolytope(u32),
    Cube(u32),
    Icosahedron,
    Dodecahedron,
    Cell24,
    Cell600,
    Cell120,
}

/// A validated catalog entry: the kind plus its ambient dimension.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PolytopeSpec {
    kind: PolytopeKind,
    dimension: u32,
}

impl PolytopeSpec {
    pub fn polygon(order: u64) -> Result<Self, CatalogError> {
        if order < 3 {
            return Err(CatalogError::PolygonTooSmall(order));
        }
        Ok(PolytopeSpec {
            kind: PolytopeKind::Polygon(order),
            dimension: 2,
        })
    }

    pub fn simplex(n: u32) -> Result<Self, CatalogError> {
        Self::family(PolytopeKind::Simplex(n), n)
    }

    pub fn crosspolytope(n: u32) -> Result<Self, CatalogError> {
        Self::family(PolytopeKind::CrossPolytope(n), n)
    }

    pub fn cube(n: u32) -> Result<Self, CatalogError> {
        Self::family(PolytopeKind::Cube(n), n)
    }

    fn family(kind: PolytopeKind, n: u32) -> Result<Self, CatalogError> {
        if n < 2 {
            return Err(CatalogError::DimensionTooSmall(n));
        }
        Ok(PolytopeSpec { kind, dimension: n })
    }

    pub fn icosahedron() -> Self {
        PolytopeSpec {
            kind: PolytopeKind::Icosahedron,
            dimension: 3,
        }
    }

    pub fn dodecahedron() -> Self {
        PolytopeSpec {
            kind: PolytopeKind::Dodecahedron,
            dimension: 3,
        }
    }

    pub fn cell24() -> Self {
        PolytopeSpec {
            kind: PolytopeKind::Cell24,
            dimension: 4,
        }
    }

    pub fn cell600() -> Self {
        PolytopeSpec {
            kind: PolytopeKind::Cell600,
            dimension: 4,
        }
    }

    pub fn cell120() -> Self {
        PolytopeSpec {
            kind: PolytopeKind::Cell120,
            dimension: 4,
        }
    }

    pub fn from_kind(kind: PolytopeKind) -> Result<Self, CatalogError> {
        match kind {
            PolytopeKind::Polygon(e) => Self::polygon(e),
            PolytopeKind::Simplex(n) => Self::simplex(n),
            PolytopeKind::CrossPolytope(n) => Self::crosspolytope(n),
            PolytopeKind::Cube(n) => Self::cube(n),
            PolytopeKind::Icosahedron => Ok(Self::icosahedron()),
            PolytopeKind::Dodecahedron => Ok(Self::dodecahedron()),
            PolytopeKind::Cell24 => Ok(Self::cell24()),
            PolytopeKind::Cell600 => Ok(Self::cell600()),
            PolytopeKind::Cell120 => Ok(Self::cell120()),
        }
    }

    pub fn kind(&self) -> PolytopeKind {
        self.kind
    }

    pub fn dimension(&self) -> u32 {
        self.dimension
    }

    /// True when `-v` is a vertex whenever `v` is: even polygons and
    /// everything else except simplices and odd polygons.
    pub fn is_centrally_symmetric(&self) -> bool {
        match self.kind {
            PolytopeKind::Polygon(e) => e % 2 == 0,
            PolytopeKind::Simplex(_) => false,
            _ => true,
        }
    }

    /// The dual polytope, always another catalog entry.
    pub fn dual(&self) -> PolytopeSpec {
        let kind = match self.kind {
            PolytopeKind::Polygon(e) => PolytopeKind::Polygon(e),
            PolytopeKind::Simplex(n) => PolytopeKind::Simplex(n),
            PolytopeKind::CrossPolytope(n) => PolytopeKind::Cube(n),
            PolytopeKind::Cube(n) => PolytopeKind::CrossPolytope(n),
            PolytopeKind::Icosahedron => PolytopeKind::Dodecahedron,
            PolytopeKind::Dodecahedron => PolytopeKind::Icosahedron,
            PolytopeKind::Cell24 => PolytopeKind::Cell24,
            PolytopeKind::Cell600 => PolytopeKind::Cell120,
            PolytopeKind::Cell120 => PolytopeKind::Cell600,
        };
        Self::from_kind(kind).expect("dual of a valid spec is valid")
    }
}

impl fmt::Display for PolytopeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            PolytopeKind::Polygon(e) => write!(f, "polygon:{}", e),
            PolytopeKind::Simplex(n) => write!(f, "simplex:{}", n),
            PolytopeKind::CrossPolytope(n) => write!(f, "crosspolytope:{}", n),
            PolytopeKind::Cube(n) => write!(f, "cube:{}", n),
            PolytopeKind::Icosahedron => write!(f, "icosahedron"),
            PolytopeKind::Dodecahedron => write!(f, "dodecahedron"),
            PolytopeKind::Cell24 => write!(f, "24-cell"),
            PolytopeKind::Cell600 => write!(f, "600-cell"),
            PolytopeKind::Cell120 => write!(f, "120-cell"),
        }
    }
}

impl FromStr for PolytopeSpec {
    type Err = CatalogError;

    fn from_str(s: &str) -> Result<Self, CatalogError> {
        match s {
            "icosahedron" => return Ok(Self::icosahedron()),
            "dodecahedron" => return Ok(Self::dodecahedron()),
            "24-cell" => return Ok(Self::cell24()),
            "600-cell" => return Ok(Self::cell600()),
            "120-cell" => return Ok(Self::cell120()),
            _ => {}
        }
        let unknown = || CatalogError::UnknownName(s.to_string());
        let (family, num) = s.split_once(':').ok_or_else(unknown)?;
        match family {
            "polygon" => Self::polygon(num.parse().map_err(|_| unknown())?),
            "simplex" => Self::simplex(num.parse().map_err(|_| unknown())?),
            "crosspolytope" => Self::crosspolytope(num.parse().map_err(|_| unknown())?),
            "cube" => Self::cube(num.parse().map_err(|_| unknown())?),
            _ => Err(unknown()),
        }
    }
}

/// Exact face counts: `counts[j]` is the number of `j`-dimensional faces,
/// for `j` from 0 to `dimension - 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceVector {
    dimension: u32,
    counts: Vec<u128>,
}

impl FaceVector {
    pub fn dimension(&self) -> u32 {
        self.dimension
    }

    pub fn counts(&self) -> &[u128] {
        &self.counts
    }

    pub fn count(&self, j: usize) -> u128 {
        self.counts[j]
    }

    pub fn vertices(&self) -> u128 {
        self.counts[0]
    }

    pub fn edges(&self) -> u128 {
        self.counts[1]
    }

    /// Faces of codimension 2.
    pub fn ridges(&self) -> u128 {
        self.counts[self.counts.len() - 2]
    }

    /// Faces of codimension 1.
    pub fn facets(&self) -> u128 {
        self.counts[self.counts.len() - 1]
    }
}

fn binomial(n: u64, k: u64) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 1..=k {
        // Exact at every step: acc holds C(n-k+i-1, i-1) times nothing yet
        // to divide out beyond i.
        acc = acc.checked_mul((n - k + i) as u128)?;
        acc /= i as u128;
    }
    Some(acc)
}

fn pow2_u128(e: u32) -> Option<u128> {
    1u128.checked_shl(e)
}

/// Exact face counts for the given polytope.
pub fn face_counts(spec: &PolytopeSpec) -> Result<FaceVector, CatalogError> {
    let overflow = || CatalogError::CountOverflow {
        spec: spec.to_string(),
    };
    let counts: Vec<u128> = match spec.kind() {
        PolytopeKind::Polygon(e) => vec![e as u128, e as u128],
        PolytopeKind::Simplex(n) => (0..n)
            .map(|j| binomial(n as u64 + 1, j as u64 + 1).ok_or_else(overflow))
            .collect::<Result<_, _>>()?,
        PolytopeKind::CrossPolytope(n) => (0..n)
            .map(|j| {
                let b = binomial(n as u64, j as u64 + 1).ok_or_else(overflow)?;
                pow2_u128(j + 1)
                    .and_then(|p| p.checked_mul(b))
                    .ok_or_else(overflow)
            })
            .collect::<Result<_, _>>()?,
        PolytopeKind::Cube(n) => (0..n)
            .map(|j| {
                let b = binomial(n as u64, j as u64).ok_or_else(overflow)?;
                pow2_u128(n - j)
                    .and_then(|p| p.checked_mul(b))
                    .ok_or_else(overflow)
            })
            .collect::<Result<_, _>>()?,
        PolytopeKind::Icosahedron => vec![12, 30, 20],
        PolytopeKind::Dodecahedron => vec![20, 30, 12],
        PolytopeKind::Cell24 => vec![24, 96, 96, 24],
        PolytopeKind::Cell600 => vec![120, 720, 1200, 600],
        PolytopeKind::Cell120 => vec![600, 1200, 720, 120],
    };
    Ok(FaceVector {
        dimension: spec.dimension(),
        counts,
    })
}

/// Squared edge lengths in the two standard normalizations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeLengthRecord {
    /// Squared edge length at unit circumradius.
    pub e_squared: QuadExt,
    /// Squared circumdiameter at unit edge length. Always `4 / e_squared`.
    pub unit_edge_diameter_squared: QuadExt,
}

/// Squared edge length data. Polygons are excluded: their edges are
/// cyclotomic, not quadratic.
pub fn edge_length_squared(spec: &PolytopeSpec) -> Result<EdgeLengthRecord, CatalogError> {
    let e_squared = match spec.kind() {
        PolytopeKind::Polygon(_) => {
            return Err(CatalogError::CyclotomicOnly {
                spec: spec.to_string(),
                op: "edge_length_squared",
            })
        }
        // 2(n+1)/n
        PolytopeKind::Simplex(n) => QuadExt::rational(2 * (n as i64 + 1), n as i64),
        PolytopeKind::CrossPolytope(_) => QuadExt::from_integer(2),
        PolytopeKind::Cube(n) => QuadExt::rational(4, n as i64),
        PolytopeKind::Icosahedron => QuadExt::quad(2, 1, -2, 5),
        PolytopeKind::Dodecahedron => QuadExt::quad(2, 1, -2, 3),
        PolytopeKind::Cell24 => QuadExt::from_integer(1),
        PolytopeKind::Cell600 => QuadExt::quad(3, 2, -1, 2),
        PolytopeKind::Cell120 => QuadExt::quad(7, 4, -3, 4),
    };
    let unit_edge_diameter_squared = QuadExt::from_integer(4)
        .checked_div(&e_squared)
        .expect("edge lengths are nonzero");
    Ok(EdgeLengthRecord {
        e_squared,
        unit_edge_diameter_squared,
    })
}

/// Gram data for the unit-sphere regular simplex: `n + 1` unit vectors
/// with constant pairwise dot product `-1/n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplexGram {
    pub vertex_count: u64,
    pub diagonal: BigRational,
    pub off_diagonal: BigRational,
}

impl SimplexGram {
    /// The single squared chord length: `2 - 2*(-1/n) = 2(n+1)/n`.
    pub fn chord_squared(&self) -> BigRational {
        BigRational::from_integer(BigInt::from(2)) * (&self.diagonal - &self.off_diagonal)
    }
}

pub fn simplex_gram(n: u32) -> Result<SimplexGram, CatalogError> {
    if n < 2 {
        return Err(CatalogError::DimensionTooSmall(n));
    }
    Ok(SimplexGram {
        vertex_count: n as u64 + 1,
        diagonal: BigRational::from_integer(BigInt::from(1)),
        off_diagonal: BigRational::new(BigInt::from(-1), BigInt::from(n)),
    })
}

/// An exact vertex list with its common squared circumradius.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexSet {
    dimension: u32,
    squared_circumradius: QuadExt,
    points: Vec<Vec<QuadExt>>,
}

impl VertexSet {
    /// Unvalidated constructor, intended for diagnostics and for feeding
    /// deliberately broken data to the validation gates.
    pub fn from_raw_parts(
        dimension: u32,
        squared_circumradius: QuadExt,
        points: Vec<Vec<QuadExt>>,
    ) -> Self {
        VertexSet {
            dimension,
            squared_circumradius,
            points,
        }
    }

    pub fn dimension(&self) -> u32 {
        self.dimension
    }

    pub fn squared_circumradius(&self) -> &QuadExt {
        &self.squared_circumradius
    }

    pub fn points(&self) -> &[Vec<QuadExt>] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Structured validation against the expected counting data.
    ///
    /// Gates, in order: `vertex-count`, `circumradius` (every point has
    /// the declared squared norm), `vertex-transitivity` (every vertex
    /// sees the same distance profile), `distinctness`, and `edge-count`
    /// (pairs at minimal distance match the edge count).
    pub fn validate(&self, expected: &FaceVector) -> Result<ValidationReport, CatalogError> {
        let spec_name = format!("<vertex set in dimension {}>", self.dimension);
        self.validate_named(expected, &spec_name)
    }

    fn validate_named(
        &self,
        expected: &FaceVector,
        name: &str,
    ) -> Result<ValidationReport, CatalogError> {
        let gate = |gate: &'static str, detail: String| CatalogError::GateFailed {
            gate,
            spec: name.to_string(),
            detail,
        };
        if self.points.len() as u128 != expected.vertices() {
            return Err(gate(
                "vertex-count",
                format!(
                    "have {} points, expected {}",
                    self.points.len(),
                    expected.vertices()
                ),
            ));
        }
        for (i, p) in self.points.iter().enumerate() {
            let norm = squared_norm(p);
            if norm != self.squared_circumradius {
                return Err(gate(
                    "circumradius",
                    format!(
                        "point {} has squared norm {}, declared {}",
                        i, norm, self.squared_circumradius
                    ),
                ));
            }
        }
        let summary = pairwise::pairwise_summary(self).map_err(|e| match e {
            PairwiseError::ProfileMismatch { vertex } => gate(
                "vertex-transitivity",
                format!("vertex {} sees a different distance profile", vertex),
            ),
            other => gate("pairwise", other.to_string()),
        })?;
        let first = summary
            .groups
            .first()
            .ok_or_else(|| gate("distinctness", "no pairs at all".to_string()))?;
        if first.value == (0, 0) {
            return Err(gate(
                "distinctness",
                format!("{} coincident pairs", first.total),
            ));
        }
        if u128::from(first.total) != expected.edges() {
            return Err(gate(
                "edge-count",
                format!(
                    "{} minimal pairs, expected {} edges",
                    first.total,
                    expected.edges()
                ),
            ));
        }
        Ok(ValidationReport {
            vertex_count: self.points.len() as u64,
            minimal_pair_count: first.total,
            min_d_squared: summary.normalize(first.value),
        })
    }
}

/// Outcome of the validation gates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub vertex_count: u64,
    pub minimal_pair_count: u64,
    /// Minimal squared chord, normalized to unit circumradius.
    pub min_d_squared: QuadExt,
}

pub(crate) fn squared_norm(p: &[QuadExt]) -> QuadExt {
    let mut acc = QuadExt::zero();
    for c in p {
        acc = &acc + &(c * c);
    }
    acc
}

/// Exact coordinates for every entry with a `Q(sqrt(5))` chart.
///
/// Polygons error toward the cyclotomic path and simplices toward the Gram
/// path. The returned set has been checked for cardinality and common
/// squared norm; run [`VertexSet::validate`] for the full gates.
pub fn vertices(spec: &PolytopeSpec) -> Result<VertexSet, CatalogError> {
    let vs = match spec.kind() {
        PolytopeKind::Polygon(_) => {
            return Err(CatalogError::CyclotomicOnly {
                spec: spec.to_string(),
                op: "vertices",
            })
        }
        PolytopeKind::Simplex(_) => {
            return Err(CatalogError::GramOnly {
                spec: spec.to_string(),
            })
        }
        PolytopeKind::CrossPolytope(n) => cross_vertices(n),
        PolytopeKind::Cube(n) => cube_vertices(spec, n)?,
        PolytopeKind::Icosahedron => icosahedron_vertices(),
        PolytopeKind::Dodecahedron => dodecahedron_vertices(),
        PolytopeKind::Cell24 => cell24_vertices(),
        PolytopeKind::Cell600 => cell600_vertices(),
        PolytopeKind::Cell120 => cell120_vertices(),
    };
    let expected = face_counts(spec)?;
    if vs.points.len() as u128 != expected.vertices() {
        return Err(CatalogError::GateFailed {
            gate: "vertex-count",
            spec: spec.to_string(),
            detail: format!(
                "constructed {} points, expected {}",
                vs.points.len(),
                expected.vertices()
            ),
        });
    }
    for (i, p) in vs.points.iter().enumerate() {
        if p.len() != vs.dimension as usize {
            return Err(CatalogError::GateFailed {
                gate: "dimension",
                spec: spec.to_string(),
                detail: format!("point {} has {} coordinates", i, p.len()),
            });
        }
        let norm = squared_norm(p);
        if norm != vs.squared_circumradius {
            return Err(CatalogError::GateFailed {
                gate: "circumradius",
                spec: spec.to_string(),
                detail: format!(
                    "point {} has squared norm {}, declared {}",
                    i, norm, vs.squared_circumradius
                ),
            });
        }
    }
    Ok(vs)
}

/// Full validation for a catalog entry: builds the vertex set and runs
/// every gate against the face counts.
pub fn validated_vertices(
    spec: &PolytopeSpec,
) -> Result<(VertexSet, ValidationReport), CatalogError> {
    let vs = vertices(spec)?;
    let fv = face_counts(spec)?;
    let report = vs.validate_named(&fv, &spec.to_string())?;
    Ok((vs, report))
}

fn cross_vertices(n: u32) -> VertexSet {
    let dim = n as usize;
    let mut points = Vec::with_capacity(2 * dim);
    for i in 0..dim {
        for sign in [1i64, -1] {
            let mut p = vec![QuadExt::zero(); dim];
            p[i] = QuadExt::from_integer(sign);
            points.push(p);
        }
    }
    VertexSet {
        dimension: n,
        squared_circumradius: QuadExt::one(),
        points,
    }
}

fn cube_vertices(spec: &PolytopeSpec, n: u32) -> Result<VertexSet, CatalogError> {
    let count = pow2_u128(n).unwrap_or(u128::MAX);
    if count > VERTEX_BUDGET as u128 {
        return Err(CatalogError::EnumerationBudget {
            spec: spec.to_string(),
            count,
            budget: VERTEX_BUDGET,
        });
    }
    let dim = n as usize;
    let mut points = Vec::with_capacity(count as usize);
    for mask in 0..(count as u64) {
        let p: Vec<QuadExt> = (0..dim)
            .map(|i| QuadExt::from_integer(if mask >> i & 1 == 0 { 1 } else { -1 }))
            .collect();
        points.push(p);
    }
    Ok(VertexSet {
        dimension: n,
        squared_circumradius: QuadExt::from_integer(n as i64),
        points,
    })
}

/// All permutations of `0..k` paired with their parity (true = even),
/// by Heap's algorithm with parity tracked per swap.
fn permutations_with_parity(k: usize) -> Vec<(Vec<usize>, bool)> {
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..k).collect();
    let mut even = true;
    let mut c = vec![0usize; k];
    out.push((idx.clone(), even));
    let mut i = 0;
    while i < k {
        if c[i] < i {
            if i % 2 == 0 {
                idx.swap(0, i);
            } else {
                idx.swap(c[i], i);
            }
            even = !even;
            out.push((idx.clone(), even));
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

use std::collections::BTreeSet;

/// Expands a coordinate pattern into points: optionally restricted to even
/// index permutations, always over all sign choices on nonzero entries.
/// Duplicates arising from repeated pattern values collapse via the set.
fn pattern_points(base: &[QuadExt], even_only: bool, out: &mut BTreeSet<Vec<QuadExt>>) {
    let k = base.len();
    for (perm, even) in permutations_with_parity(k) {
        if even_only && !even {
            continue;
        }
        let arranged: Vec<QuadExt> = perm.iter().map(|&i| base[i].clone()).collect();
        let nonzero: Vec<usize> = (0..k).filter(|&i| !arranged[i].is_zero()).collect();
        for signs in 0u32..(1 << nonzero.len()) {
            let mut p = arranged.clone();
            for (bit, &pos) in nonzero.iter().enumerate() {
                if signs >> bit & 1 == 1 {
                    p[pos] = -&p[pos];
                }
            }
            out.insert(p);
        }
    }
}

fn collect(patterns: &[(&[QuadExt], bool)]) -> Vec<Vec<QuadExt>> {
    let mut set = BTreeSet::new();
    for (base, even_only) in patterns {
        pattern_points(base, *even_only, &mut set);
    }
    set.into_iter().collect()
}

fn tau() -> QuadExt {
    QuadExt::golden_ratio()
}

fn icosahedron_vertices() -> VertexSet {
    // Cyclic permutations of (0, tau, 1); cyclic = even for three entries.
    let base = [QuadExt::zero(), tau(), QuadExt::one()];
    VertexSet {
        dimension: 3,
        squared_circumradius: QuadExt::quad(5, 2, 1, 2), // tau + 2
        points: collect(&[(&base, true)]),
    }
}

fn dodecahedron_vertices() -> VertexSet {
    // Cyclic permutations of (0, 1/tau, tau) plus the cube (+-1, +-1, +-1).
    let inv_tau = QuadExt::quad(-1, 2, 1, 2);
    let base = [QuadExt::zero(), inv_tau, tau()];
    let cube = [QuadExt::one(), QuadExt::one(), QuadExt::one()];
    VertexSet {
        dimension: 3,
        squared_circumradius: QuadExt::from_integer(3),
        points: collect(&[(&base, true), (&cube, false)]),
    }
}

fn cell24_vertices() -> VertexSet {
    let base = [
        QuadExt::one(),
        QuadExt::one(),
        QuadExt::zero(),
        QuadExt::zero(),
    ];
    VertexSet {
        dimension: 4,
        squared_circumradius: QuadExt::from_integer(2),
        points: collect(&[(&base, false)]),
    }
}

fn cell600_vertices() -> VertexSet {
    let half = QuadExt::rational(1, 2);
    let axes = [
        QuadExt::one(),
        QuadExt::zero(),
        QuadExt::zero(),
        QuadExt::zero(),
    ];
    let center = [half.clone(), half.clone(), half.clone(), half.clone()];
    // (tau/2, 1/2, 1/(2 tau), 0): the snub pattern, even orderings only.
    let snub = [
        QuadExt::quad(1, 4, 1, 4),
        half,
        QuadExt::quad(-1, 4, 1, 4),
        QuadExt::zero(),
    ];
    VertexSet {
        dimension: 4,
        squared_circumradius: QuadExt::one(),
        points: collect(&[(&axes, false), (&center, false), (&snub, true)]),
    }
}

fn cell120_vertices() -> VertexSet {
    let one = QuadExt::one();
    let two = QuadExt::from_integer(2);
    let zero = QuadExt::zero();
    let sqrt5 = QuadExt::sqrt5();
    let t = tau();
    let t2 = QuadExt::quad(3, 2, 1, 2); // tau^2
    let it = QuadExt::quad(-1, 2, 1, 2); // 1/tau
    let it2 = QuadExt::quad(3, 2, -1, 2); // 1/tau^2

    let p_all: [&[QuadExt]; 4] = [
        &[zero.clone(), zero.clone(), two.clone(), two.clone()],
        &[one.clone(), one.clone(), one.clone(), sqrt5.clone()],
        &[it2.clone(), t.clone(), t.clone(), t.clone()],
        &[it.clone(), it.clone(), it.clone(), t2.clone()],
    ];
    let p_even: [&[QuadExt]; 3] = [
        &[zero.clone(), it2, one.clone(), t2],
        &[zero, it.clone(), t.clone(), sqrt5],
        &[it, one, t, two],
    ];
    let mut patterns: Vec<(&[QuadExt], bool)> = Vec::new();
    for p in &p_all {
        patterns.push((p, false));
    }
    for p in &p_even {
        patterns.push((p, true));
    }
    VertexSet {
        dimension: 4,
        squared_circumradius: QuadExt::from_integer(8),
        points: collect(&patterns),
    }
}

/// The default working set: polygons through order 30, the three families
/// through dimension 12, and every exceptional solid.
pub fn default_suite() -> Vec<PolytopeSpec> {
    suite(30, 12)
}

/// A heavier sweep: polygons through order 60, families through
/// dimension 14.
pub fn extended_suite() -> Vec<PolytopeSpec> {
    suite(60, 14)
}

fn suite(max_polygon: u64, max_dim: u32) -> Vec<PolytopeSpec> {
    let mut out = Vec::new();
    for e in 3..=max_polygon {
        out.push(PolytopeSpec::polygon(e).expect("order >= 3"));
    }
    for n in 2..=max_dim {
        out.push(PolytopeSpec::simplex(n).expect("n >= 2"));
        out.push(PolytopeSpec::crosspolytope(n).expect("n >= 2"));
        out.push(PolytopeSpec::cube(n).expect("n >= 2"));
    }
    out.push(PolytopeSpec::icosahedron());
    out.push(PolytopeSpec::dodecahedron());
    out.push(PolytopeSpec::cell24());
    out.push(PolytopeSpec::cell600());
    out.push(PolytopeSpec::cell120());
    out
}

/// Converts a u128 count to u64, for enumeration-scale quantities.
pub(crate) fn count_to_u64(spec: &PolytopeSpec, value: u128) -> Result<u64, CatalogError> {
    value.to_u64().ok_or(CatalogError::CountOverflow {
        spec: spec.to_string(),
    })
}

/// gcd on u128 counts, used by the congruence checks.
pub(crate) fn gcd_u128(a: u128, b: u128) -> u128 {
    a.gcd(&b)
}
