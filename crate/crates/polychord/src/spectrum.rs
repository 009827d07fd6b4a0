//! Chord-length spectra: every squared chord length of a polytope with
//! multiplicities, plus exact aggregate sums and products.
//!
//! A spectrum entry records a squared chord length `d^2` at unit
//! circumradius, the number `N` of unordered vertex pairs at that length,
//! and the number `m` of such chords leaving any single vertex. The kernel
//! guarantees `m` is well defined before a spectrum is built. Polygons
//! carry cyclotomic entries; everything else lives in `Q(sqrt(5))`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::catalog::{self, CatalogError, PolytopeKind, PolytopeSpec, VertexSet};
use crate::cyclotomic::{
    self, CycloElement, CycloError, PolygonRing, DEFAULT_POLYGON_CAP,
};
use crate::exactnum::QuadExt;
use crate::pairwise::{self, PairwiseError};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SpectrumError {
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error(transparent)]
    Cyclotomic(#[from] CycloError),
    #[error("pairwise kernel: {0}")]
    Kernel(#[from] PairwiseError),
    #[error("{0} spectra use the polygon path; call polygon_spectrum")]
    PolygonPath(String),
    #[error("aggregate {what} left the rationals unexpectedly")]
    IrrationalAggregate { what: &'static str },
    #[error("factored product requires positive bases and nonzero exponents")]
    MalformedProduct,
    #[error("value is not positive, cannot factor")]
    NonPositive,
    #[error("residual {residual} has no prime factor below {bound}")]
    NotSmooth { residual: String, bound: u64 },
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

/// One exact distance class of a quadratic-field spectrum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChordEntry {
    /// Squared chord length at unit circumradius.
    pub d_squared: QuadExt,
    /// Unordered vertex pairs at this length (`N`).
    pub chord_count: u64,
    /// Chords of this length leaving any one vertex (`m`).
    pub per_vertex: u64,
}

impl ChordEntry {
    /// Cosine of the central angle subtended: `1 - d^2/2`.
    pub fn cos_theta(&self) -> QuadExt {
        &QuadExt::one() - &(&self.d_squared * &QuadExt::rational(1, 2))
    }
}

/// The full exact spectrum of a polytope with a `Q(sqrt(5))` chart, plus
/// the Gram-served simplices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChordSpectrum {
    vertex_count: u64,
    entries: Vec<ChordEntry>,
}

impl ChordSpectrum {
    /// Unvalidated constructor for diagnostics and deliberately broken
    /// inputs; the named checks will catch lies told here.
    pub fn from_raw_parts(vertex_count: u64, entries: Vec<ChordEntry>) -> Self {
        ChordSpectrum {
            vertex_count,
            entries,
        }
    }

    pub fn vertex_count(&self) -> u64 {
        self.vertex_count
    }

    pub fn entries(&self) -> &[ChordEntry] {
        &self.entries
    }

    /// Number of distinct squared chord lengths.
    pub fn distinct_count(&self) -> usize {
        self.entries.len()
    }

    pub fn total_chords(&self) -> u64 {
        self.entries.iter().map(|e| e.chord_count).sum()
    }

    /// The antipodal entry `d^2 = 4`, when present.
    pub fn diameter_entry(&self) -> Option<&ChordEntry> {
        let four = QuadExt::from_integer(4);
        self.entries.iter().find(|e| e.d_squared == four)
    }

    /// `sum of N * d^2` over all entries; exact, and rational for every
    /// genuine spectrum.
    pub fn sum_squared(&self) -> Result<BigRational, SpectrumError> {
        let mut acc = QuadExt::zero();
        for e in &self.entries {
            acc = &acc + &(&e.d_squared * &QuadExt::from_integer(e.chord_count as i64));
        }
        acc.to_rational()
            .ok_or(SpectrumError::IrrationalAggregate { what: "sum" })
    }

    /// `sum of d^2` over distinct lengths; exact quadratic value.
    pub fn distinct_sum_squared(&self) -> QuadExt {
        let mut acc = QuadExt::zero();
        for e in &self.entries {
            acc = &acc + &e.d_squared;
        }
        acc
    }

    /// `product of (d^2)^N` in factored form.
    pub fn product_squared(&self) -> Result<FactoredProduct, SpectrumError> {
        FactoredProduct::new(
            self.entries
                .iter()
                .map(|e| (e.d_squared.clone(), e.chord_count))
                .collect(),
        )
    }

    /// `product of d^2` over distinct lengths; exact quadratic value.
    pub fn distinct_product_squared(&self) -> QuadExt {
        let mut acc = QuadExt::one();
        for e in &self.entries {
            acc = &acc * &e.d_squared;
        }
        acc
    }
}

/// A product held as `(base, exponent)` pairs, bases ascending; evaluation
/// is explicit because catalog products reach hundreds of thousands of
/// bits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactoredProduct {
    factors: Vec<(QuadExt, u64)>,
}

impl FactoredProduct {
    pub fn new(factors: Vec<(QuadExt, u64)>) -> Result<Self, SpectrumError> {
        for (base, exp) in &factors {
            if base.sign() <= 0 || *exp == 0 {
                return Err(SpectrumError::MalformedProduct);
            }
        }
        Ok(FactoredProduct { factors })
    }

    pub fn factors(&self) -> &[(QuadExt, u64)] {
        &self.factors
    }

    pub fn total_exponent(&self) -> u64 {
        self.factors.iter().map(|(_, e)| *e).sum()
    }

    /// Full evaluation by exponentiation by squaring.
    pub fn evaluate(&self) -> QuadExt {
        let mut acc = QuadExt::one();
        for (base, exp) in &self.factors {
            let p = base
                .powi(*exp as i64)
                .expect("positive base admits any power");
            acc = &acc * &p;
        }
        acc
    }
}

impl fmt::Display for FactoredProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (i, (base, exp)) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, " * ")?;
            }
            write!(f, "({})^{}", base, exp)?;
        }
        Ok(())
    }
}

/// One distance class of a polygon, indexed by vertex step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolygonChordEntry {
    /// Steps apart around the polygon, `1..=order/2`.
    pub step: u64,
    /// Squared chord length as a cyclotomic integer.
    pub d_squared: CycloElement,
    /// Unordered vertex pairs at this length (`N`).
    pub chord_count: u64,
    /// Chords of this length leaving any one vertex (`m`).
    pub per_vertex: u64,
}

/// The exact spectrum of a regular polygon over `Q(zeta_E)`.
#[derive(Clone, Debug, PartialEq)]
pub struct PolygonSpectrum {
    ring: PolygonRing,
    entries: Vec<PolygonChordEntry>,
}

impl PolygonSpectrum {
    pub fn order(&self) -> u64 {
        self.ring.order()
    }

    pub fn vertex_count(&self) -> u64 {
        self.ring.order()
    }

    pub fn entries(&self) -> &[PolygonChordEntry] {
        &self.entries
    }

    pub fn distinct_count(&self) -> usize {
        self.entries.len()
    }

    pub fn total_chords(&self) -> u64 {
        self.entries.iter().map(|e| e.chord_count).sum()
    }

    /// `sum of N * d^2`, recognized down to a rational.
    pub fn sum_squared(&self) -> Result<BigRational, SpectrumError> {
        let mut acc = self.ring.zero();
        for e in &self.entries {
            let scaled = e
                .d_squared
                .scale(&BigRational::from_integer(BigInt::from(e.chord_count)));
            acc = self.ring.add(&acc, &scaled);
        }
        Ok(cyclotomic::rational_recognition(&acc)?)
    }

    /// `sum of d^2` over distinct lengths, recognized down to a rational.
    pub fn distinct_sum_squared(&self) -> Result<BigRational, SpectrumError> {
        let mut acc = self.ring.zero();
        for e in &self.entries {
            acc = self.ring.add(&acc, &e.d_squared);
        }
        Ok(cyclotomic::rational_recognition(&acc)?)
    }

    /// `product of (d^2)^N`, computed in the cyclotomic ring and
    /// recognized down to a rational.
    pub fn product_squared(&self) -> Result<BigRational, SpectrumError> {
        let mut acc = self.ring.one();
        for e in &self.entries {
            let p = self.ring.pow(&e.d_squared, e.chord_count);
            acc = self.ring.mul(&acc, &p);
        }
        Ok(cyclotomic::rational_recognition(&acc)?)
    }

    /// `product of d^2` over distinct lengths, recognized down to a
    /// rational.
    pub fn distinct_product_squared(&self) -> Result<BigRational, SpectrumError> {
        let mut acc = self.ring.one();
        for e in &self.entries {
            acc = self.ring.mul(&acc, &e.d_squared);
        }
        Ok(cyclotomic::rational_recognition(&acc)?)
    }

    /// Rebuilds the spectrum over `Q(sqrt(5))` when every chord is
    /// rational (orders 3, 4, and 6); `None` otherwise.
    pub fn as_quad(&self) -> Option<ChordSpectrum> {
        let mut entries = Vec::with_capacity(self.entries.len());
        for e in &self.entries {
            let q = cyclotomic::rational_recognition(&e.d_squared).ok()?;
            entries.push(ChordEntry {
                d_squared: QuadExt::from_rational(q),
                chord_count: e.chord_count,
                per_vertex: e.per_vertex,
            });
        }
        Some(ChordSpectrum {
            vertex_count: self.order(),
            entries,
        })
    }
}

/// A spectrum from either arithmetic path.
#[derive(Clone, Debug, PartialEq)]
pub enum Spectrum {
    Quad(ChordSpectrum),
    Polygon(PolygonSpectrum),
}

impl Spectrum {
    pub fn vertex_count(&self) -> u64 {
        match self {
            Spectrum::Quad(s) => s.vertex_count(),
            Spectrum::Polygon(s) => s.vertex_count(),
        }
    }

    pub fn distinct_count(&self) -> usize {
        match self {
            Spectrum::Quad(s) => s.distinct_count(),
            Spectrum::Polygon(s) => s.distinct_count(),
        }
    }

    pub fn total_chords(&self) -> u64 {
        match self {
            Spectrum::Quad(s) => s.total_chords(),
            Spectrum::Polygon(s) => s.total_chords(),
        }
    }
}

/// The exact chord spectrum of any catalog entry.
pub fn chord_spectrum(spec: &PolytopeSpec) -> Result<Spectrum, SpectrumError> {
    chord_spectrum_capped(spec, DEFAULT_POLYGON_CAP)
}

/// As [`chord_spectrum`], with an explicit polygon order cap.
pub fn chord_spectrum_capped(
    spec: &PolytopeSpec,
    polygon_cap: u64,
) -> Result<Spectrum, SpectrumError> {
    match spec.kind() {
        PolytopeKind::Polygon(e) => {
            Ok(Spectrum::Polygon(polygon_spectrum_with_cap(e, polygon_cap)?))
        }
        _ => Ok(Spectrum::Quad(quad_chord_spectrum(spec)?)),
    }
}

/// The exact spectrum of a non-polygon entry over `Q(sqrt(5))`.
pub fn quad_chord_spectrum(spec: &PolytopeSpec) -> Result<ChordSpectrum, SpectrumError> {
    match spec.kind() {
        PolytopeKind::Polygon(_) => Err(SpectrumError::PolygonPath(spec.to_string())),
        PolytopeKind::Simplex(n) => {
            let gram = catalog::simplex_gram(n)?;
            let v = gram.vertex_count;
            let spectrum = ChordSpectrum {
                vertex_count: v,
                entries: vec![ChordEntry {
                    d_squared: QuadExt::from_rational(gram.chord_squared()),
                    chord_count: v * (v - 1) / 2,
                    per_vertex: v - 1,
                }],
            };
            Ok(spectrum)
        }
        _ => {
            let vs = catalog::vertices(spec)?;
            spectrum_from_vertex_set(spec, &vs)
        }
    }
}

fn spectrum_from_vertex_set(
    spec: &PolytopeSpec,
    vs: &VertexSet,
) -> Result<ChordSpectrum, SpectrumError> {
    let summary = pairwise::pairwise_summary(vs)?;
    let v = summary.vertex_count;
    let mut entries = Vec::with_capacity(summary.groups.len());
    for g in &summary.groups {
        entries.push(ChordEntry {
            d_squared: summary.normalize(g.value),
            chord_count: g.total,
            per_vertex: g.per_vertex,
        });
    }
    let spectrum = ChordSpectrum {
        vertex_count: v,
        entries,
    };
    enforce_counting_identities(spec, &spectrum)?;
    Ok(spectrum)
}

/// Consistency of a freshly computed spectrum: entry counts must satisfy
/// the halving identity `2N = mV`, and the totals must cover all pairs.
fn enforce_counting_identities(
    spec: &PolytopeSpec,
    s: &ChordSpectrum,
) -> Result<(), SpectrumError> {
    let v = s.vertex_count;
    let internal = |msg: String| SpectrumError::Internal(format!("{}: {}", spec, msg));
    let mut total: u64 = 0;
    let mut per_vertex_total: u64 = 0;
    let mut last: Option<&QuadExt> = None;
    for e in &s.entries {
        if 2 * e.chord_count != e.per_vertex * v {
            return Err(internal(format!(
                "entry {} has N={} but m*V/2={}",
                e.d_squared,
                e.chord_count,
                e.per_vertex * v / 2
            )));
        }
        if let Some(prev) = last {
            if prev >= &e.d_squared {
                return Err(internal("entries not strictly ascending".to_string()));
            }
        }
        last = Some(&e.d_squared);
        total += e.chord_count;
        per_vertex_total += e.per_vertex;
    }
    if total != v * (v - 1) / 2 {
        return Err(internal(format!(
            "total {} != V(V-1)/2 = {}",
            total,
            v * (v - 1) / 2
        )));
    }
    if per_vertex_total != v - 1 {
        return Err(internal(format!(
            "per-vertex total {} != V-1 = {}",
            per_vertex_total,
            v - 1
        )));
    }
    Ok(())
}

/// The exact spectrum of a regular polygon, under the default order cap.
pub fn polygon_spectrum(order: u64) -> Result<PolygonSpectrum, SpectrumError> {
    polygon_spectrum_with_cap(order, DEFAULT_POLYGON_CAP)
}

pub fn polygon_spectrum_with_cap(
    order: u64,
    cap: u64,
) -> Result<PolygonSpectrum, SpectrumError> {
    if order < 3 {
        return Err(SpectrumError::Catalog(CatalogError::PolygonTooSmall(order)));
    }
    let ring = PolygonRing::with_cap(order, cap)?;
    let mut entries = Vec::new();
    for step in 1..=order / 2 {
        let diameter = order % 2 == 0 && step == order / 2;
        let per_vertex = if diameter { 1 } else { 2 };
        entries.push(PolygonChordEntry {
            step,
            d_squared: ring.chord_sq(step)?,
            chord_count: per_vertex * order / 2,
            per_vertex,
        });
    }
    Ok(PolygonSpectrum { ring, entries })
}

/// Factors a positive rational over primes up to `bound` by trial
/// division; exponents are positive for the numerator, negative for the
/// denominator. Errors if either part keeps a factor above the bound.
pub fn prime_factor_rational(
    q: &BigRational,
    bound: u64,
) -> Result<BTreeMap<u64, i64>, SpectrumError> {
    if !q.is_positive() {
        return Err(SpectrumError::NonPositive);
    }
    let mut map = BTreeMap::new();
    factor_bigint(q.numer().clone(), bound, 1, &mut map)?;
    factor_bigint(q.denom().clone(), bound, -1, &mut map)?;
    Ok(map)
}

fn factor_bigint(
    n: BigInt,
    bound: u64,
    direction: i64,
    map: &mut BTreeMap<u64, i64>,
) -> Result<(), SpectrumError> {
    let mut n = n.abs();
    let push = |p: u64, exp: u64, map: &mut BTreeMap<u64, i64>| {
        if exp > 0 {
            *map.entry(p).or_insert(0) += direction * exp as i64;
        }
    };
    // Candidate stream 2, 3, 5, 7, ... via the 6k +/- 1 wheel; composite
    // candidates never divide what remains.
    let candidate = |idx: &mut u64| -> u64 {
        let c = *idx;
        *idx = match c {
            2 => 3,
            3 => 5,
            c if c % 6 == 5 => c + 2,
            c => c + 4,
        };
        c
    };
    let mut idx = 2u64;
    loop {
        if n.is_one() {
            return Ok(());
        }
        let p = candidate(&mut idx);
        if p > bound {
            break;
        }
        let exp = extract_prime_power(&mut n, p);
        push(p, exp, map);
    }
    if n.is_one() {
        Ok(())
    } else {
        let digits = n.to_string();
        let residual = if digits.len() > 48 {
            format!("<{} digits>", digits.len())
        } else {
            digits
        };
        Err(SpectrumError::NotSmooth { residual, bound })
    }
}

/// Divides out the full power of `p` from `n`, returning the exponent.
/// Chunks doubles of `p` so huge exponents cost logarithmically many
/// big divisions.
fn extract_prime_power(n: &mut BigInt, p: u64) -> u64 {
    let mut exp = 0u64;
    let mut power = BigInt::from(p);
    let mut chunk = 1u64;
    let mut ladder: Vec<(BigInt, u64)> = Vec::new();
    loop {
        let (q, r) = n.div_rem(&power);
        if r.is_zero() {
            *n = q;
            exp += chunk;
            ladder.push((power.clone(), chunk));
            power = &power * &power;
            chunk *= 2;
        } else {
            break;
        }
    }
    while let Some((pw, ch)) = ladder.pop() {
        let (q, r) = n.div_rem(&pw);
        if r.is_zero() {
            *n = q;
            exp += ch;
        }
    }
    exp
}
