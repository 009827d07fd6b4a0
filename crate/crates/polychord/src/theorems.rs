//! Named verification checks over exact chord spectra.
//!
//! Each check recomputes both sides of one identity from scratch: the
//! "claimed" side from face counts alone, the "computed" side from the exact
//! spectrum pipeline. A [`Verdict`] records both values in canonical
//! decimal-free form together with a pass flag, so a failing identity shows
//! exactly which numbers disagreed. Congruence statements are tested on
//! factored integer exponents, never on evaluated magnitudes.
//!
//! Check names are stable strings: `fact1`, `fact2`, `sums3d`,
//! `xpoly-product`, `c24-product`, `congruences3d`, `fact4`, `polygon`,
//! `duality`, `explore`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use thiserror::Error;

use crate::catalog::{
    count_to_u64, face_counts, gcd_u128, FaceVector, PolytopeKind, PolytopeSpec,
};
use crate::catalog::CatalogError;
use crate::exactnum::QuadExt;
use crate::spectrum::{
    chord_spectrum, polygon_spectrum, prime_factor_rational, Spectrum, SpectrumError,
};

/// Errors raised while running a check, as opposed to a check failing.
///
/// A false identity produces a `Verdict` with `pass == false`; an error means
/// the check could not be evaluated at all (unknown polytope, a product that
/// failed to factor, an aggregate that should have been rational but was not).
#[derive(Debug, Error)]
pub enum TheoremError {
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error(transparent)]
    Spectrum(#[from] SpectrumError),
    #[error("check `{check}` does not cover {polytope}")]
    OutOfDomain {
        check: &'static str,
        polytope: String,
    },
    #[error("unknown check name `{0}`")]
    UnknownCheck(String),
    #[error("product over {polytope} evaluated to an irrational value {value}")]
    IrrationalProduct { polytope: String, value: String },
}

/// Outcome of one named check on one polytope.
///
/// `claimed` is what the identity predicts from face counts alone; `computed`
/// is what the exact spectrum produced. `pass` is true exactly when the two
/// agree (for congruence checks: when every congruence in the claimed set
/// holds for the computed exponents). `detail` is a human-readable account of
/// the intermediate quantities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub check_name: &'static str,
    pub polytope: String,
    pub claimed: String,
    pub computed: String,
    pub pass: bool,
    pub detail: String,
}

/// Factored exponents of a 3-polytope's chord products.
///
/// The full product of squared chords is `nu^a / epsilon^b` and the product of
/// distinct squared chords is `nu^c / epsilon^d`, where `nu` is the number of
/// vertices incident to any edge (always 2) and `epsilon` the number of edges
/// incident to any vertex. `m` is the multiplier in the vertex-based relation
/// `a = c * V * m` (1 for the octahedron, 2 for the dodecahedron, 1 and unused
/// for the solids whose relation is `b = d * E`). `gcd_value` is
/// `E / gcd(E, V)`, the alternative denominator base; it equals
/// `lcm(E, V) / V`.
///
/// The octahedron's representation is a one-parameter family (its `epsilon` is
/// a power of `nu`); the stored witness is the `q = 1` member, the smallest
/// with all exponents positive.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CongruenceWitness {
    pub nu: u64,
    pub epsilon: u64,
    pub a: u64,
    pub b: u64,
    pub c: u64,
    pub d: u64,
    pub m: u64,
    pub gcd_value: u64,
}

/// Exact factored report for the cases with no claimed closed form.
///
/// `product_factors` is the prime factorization of the full product of squared
/// chords (prime, signed exponent); `fact3_reference_factors` is the
/// factorization of `F^V`, the shape that holds for crosspolytopes. The
/// distinct product is reported verbatim along with whether it is an integer.
/// `evaluated` carries the full numerator/denominator decimal strings when
/// evaluation was requested.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExplorationReport {
    pub polytope: String,
    pub vertex_count: u64,
    pub distinct_count: usize,
    pub product_factors: Vec<(u64, i64)>,
    pub fact3_reference_factors: Vec<(u64, i64)>,
    pub fact3_shape_holds: bool,
    pub distinct_product: String,
    pub fact4_integral: bool,
    pub evaluated: Option<(String, String)>,
}

fn big_pow(base: BigInt, exp: u64) -> BigInt {
    num_traits::pow(base, exp as usize)
}

fn edges_u64(spec: &PolytopeSpec, faces: &FaceVector) -> Result<u64, TheoremError> {
    Ok(count_to_u64(spec, faces.edges())?)
}

fn vertices_u64(spec: &PolytopeSpec, faces: &FaceVector) -> Result<u64, TheoremError> {
    Ok(count_to_u64(spec, faces.vertices())?)
}

/// Sum over distinct squared chord lengths, kept in quadratic form so an
/// irrational outcome can be reported instead of erased.
fn distinct_sum(spectrum: &Spectrum) -> Result<QuadExt, SpectrumError> {
    match spectrum {
        Spectrum::Quad(s) => Ok(s.distinct_sum_squared()),
        Spectrum::Polygon(s) => Ok(QuadExt::from_rational(s.distinct_sum_squared()?)),
    }
}

/// Full product of squared chord lengths as an exact rational.
fn total_product(spec: &PolytopeSpec, spectrum: &Spectrum) -> Result<BigRational, TheoremError> {
    match spectrum {
        Spectrum::Quad(s) => {
            let value = s.product_squared()?.evaluate();
            value.to_rational().ok_or(TheoremError::IrrationalProduct {
                polytope: spec.to_string(),
                value: value.to_string(),
            })
        }
        Spectrum::Polygon(s) => Ok(s.product_squared()?),
    }
}

/// Prime exponent map of the full chord product, computed without ever
/// collapsing the product to a single number.
///
/// Rational bases are factored directly. Irrational bases must occur in
/// conjugate pairs with matching exponents (which is what makes the product
/// rational in the first place); each pair contributes its rational norm. A
/// lone irrational base means the product itself is irrational.
fn total_product_primes(
    spec: &PolytopeSpec,
    spectrum: &Spectrum,
    bound: u64,
) -> Result<BTreeMap<u64, i64>, TheoremError> {
    let factored = match spectrum {
        Spectrum::Polygon(s) => {
            return Ok(prime_factor_rational(&s.product_squared()?, bound)?)
        }
        Spectrum::Quad(s) => s.product_squared()?,
    };

    let mut map: BTreeMap<u64, i64> = BTreeMap::new();
    let mut merge = |value: &BigRational, times: u64| -> Result<(), TheoremError> {
        for (p, e) in prime_factor_rational(value, bound)? {
            let slot = map.entry(p).or_insert(0);
            *slot += e * times as i64;
            if *slot == 0 {
                map.remove(&p);
            }
        }
        Ok(())
    };

    let factors = factored.factors();
    for (base, exp) in factors {
        match base.to_rational() {
            Some(r) => merge(&r, *exp)?,
            None => {
                // Visit each conjugate pair once, from its positive-radical
                // representative.
                if base.radical_part() < &BigRational::from(BigInt::from(0)) {
                    continue;
                }
                let mate = base.conjugate();
                let paired = factors
                    .iter()
                    .find(|(other, other_exp)| *other == mate && other_exp == exp);
                if paired.is_none() {
                    return Err(TheoremError::IrrationalProduct {
                        polytope: spec.to_string(),
                        value: base.to_string(),
                    });
                }
                merge(&base.norm(), *exp)?;
            }
        }
    }
    Ok(map)
}

/// Product over distinct squared chord lengths in quadratic form.
fn distinct_product(spectrum: &Spectrum) -> Result<QuadExt, SpectrumError> {
    match spectrum {
        Spectrum::Quad(s) => Ok(s.distinct_product_squared()),
        Spectrum::Polygon(s) => Ok(QuadExt::from_rational(s.distinct_product_squared()?)),
    }
}

fn is_integer(q: &BigRational) -> bool {
    q.denom().is_one()
}

/// Renders a signed prime-exponent map as `2^68 / 3^24`, with `1` for the
/// empty product.
fn render_prime_map(map: &BTreeMap<u64, i64>) -> String {
    let fmt_one = |p: u64, e: i64| {
        if e == 1 {
            p.to_string()
        } else {
            format!("{p}^{e}")
        }
    };
    let num: Vec<String> = map
        .iter()
        .filter(|(_, e)| **e > 0)
        .map(|(p, e)| fmt_one(*p, *e))
        .collect();
    let den: Vec<String> = map
        .iter()
        .filter(|(_, e)| **e < 0)
        .map(|(p, e)| fmt_one(*p, -*e))
        .collect();
    let num_str = if num.is_empty() {
        "1".to_string()
    } else {
        num.join(" * ")
    };
    if den.is_empty() {
        num_str
    } else if den.len() == 1 {
        format!("{num_str} / {}", den[0])
    } else {
        format!("{num_str} / ({})", den.join(" * "))
    }
}

fn is_three_dimensional_solid(spec: &PolytopeSpec) -> bool {
    spec.dimension() == 3
}

/// The regular 3-polytopes split into three congruence classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum SolidClass {
    Tetrahedron,
    OctahedronCube,
    IcosahedronDodecahedron,
}

fn solid_class(spec: &PolytopeSpec) -> Option<SolidClass> {
    if !is_three_dimensional_solid(spec) {
        return None;
    }
    match spec.kind() {
        PolytopeKind::Simplex(_) => Some(SolidClass::Tetrahedron),
        PolytopeKind::CrossPolytope(_) | PolytopeKind::Cube(_) => {
            Some(SolidClass::OctahedronCube)
        }
        PolytopeKind::Icosahedron | PolytopeKind::Dodecahedron => {
            Some(SolidClass::IcosahedronDodecahedron)
        }
        _ => None,
    }
}

/// Sum of all squared chord lengths equals the vertex count squared.
pub fn check_fact1(spec: &PolytopeSpec) -> Result<Verdict, TheoremError> {
    let faces = face_counts(spec)?;
    let spectrum = chord_spectrum(spec)?;
    fact1_on_spectrum(spec, &faces, &spectrum)
}

/// Runs the squared-chord-sum identity against an externally supplied
/// spectrum, so callers can test tampered inputs.
pub fn fact1_on_spectrum(
    spec: &PolytopeSpec,
    faces: &FaceVector,
    spectrum: &Spectrum,
) -> Result<Verdict, TheoremError> {
    let v = vertices_u64(spec, faces)?;
    let claimed = BigInt::from(v) * BigInt::from(v);
    // The claimed value is an integer, so an irrational sum settles the
    // identity as false rather than aborting the check.
    let (computed, pass) = match spectrum {
        Spectrum::Quad(s) => {
            let mut acc = QuadExt::zero();
            for e in s.entries() {
                acc = &acc + &(&e.d_squared * &QuadExt::from_integer(e.chord_count as i64));
            }
            match acc.to_rational() {
                Some(q) => (q.to_string(), q == BigRational::from(claimed.clone())),
                None => (acc.to_string(), false),
            }
        }
        Spectrum::Polygon(s) => match s.sum_squared() {
            Ok(q) => (q.to_string(), q == BigRational::from(claimed.clone())),
            Err(_) => ("irrational (nonzero cyclotomic part)".to_string(), false),
        },
    };
    Ok(Verdict {
        check_name: "fact1",
        polytope: spec.to_string(),
        claimed: claimed.to_string(),
        computed,
        pass,
        detail: format!(
            "sum of squared chord lengths over {} chords; V = {v}",
            spectrum.total_chords()
        ),
    })
}

/// Sum of distinct squared chord lengths: non-integral rational
/// `2(n+1)/n` for a simplex of dimension three or more, otherwise the
/// integer `2k+1` (odd edge count) or `2k+2` (even edge count) where `k`
/// counts distinct chord lengths.
pub fn check_fact2(spec: &PolytopeSpec) -> Result<Verdict, TheoremError> {
    let faces = face_counts(spec)?;
    let spectrum = chord_spectrum(spec)?;
    let edges = edges_u64(spec, &faces)?;
    let k = spectrum.distinct_count() as u64;
    let computed = distinct_sum(&spectrum)?;
    let computed_str = computed.to_string();

    let deep_simplex = matches!(spec.kind(), PolytopeKind::Simplex(_)) && spec.dimension() >= 3;
    if deep_simplex {
        let n = i64::from(spec.dimension());
        let expected = BigRational::new(BigInt::from(2 * (n + 1)), BigInt::from(n));
        let pass = computed
            .to_rational()
            .map(|q| q == expected && !is_integer(&q))
            .unwrap_or(false);
        return Ok(Verdict {
            check_name: "fact2",
            polytope: spec.to_string(),
            claimed: format!("{expected} (non-integral rational)"),
            computed: computed_str,
            pass,
            detail: format!("simplex of dimension {n}: single chord class, k = {k}"),
        });
    }

    let (claimed, parity) = if edges % 2 == 1 {
        (2 * k + 1, "odd")
    } else {
        (2 * k + 2, "even")
    };
    let pass = computed
        .to_rational()
        .map(|q| q == BigRational::from(BigInt::from(claimed)))
        .unwrap_or(false);
    Ok(Verdict {
        check_name: "fact2",
        polytope: spec.to_string(),
        claimed: claimed.to_string(),
        computed: computed_str,
        pass,
        detail: format!("E = {edges} ({parity}), k = {k} distinct chord lengths"),
    })
}

/// Distinct-sum special cases for the 3-polytopes: rational for the
/// tetrahedron, equal to the vertex count for the octahedron/cube pair,
/// equal to `2k+2` for the icosahedron/dodecahedron pair.
pub fn check_3d_sums(spec: &PolytopeSpec) -> Result<Verdict, TheoremError> {
    let class = solid_class(spec).ok_or_else(|| TheoremError::OutOfDomain {
        check: "sums3d",
        polytope: spec.to_string(),
    })?;
    let faces = face_counts(spec)?;
    let spectrum = chord_spectrum(spec)?;
    let k = spectrum.distinct_count() as u64;
    let v = vertices_u64(spec, &faces)?;
    let computed = distinct_sum(&spectrum)?;
    let computed_str = computed.to_string();

    let (claimed, pass, detail) = match class {
        SolidClass::Tetrahedron => {
            let pass = computed.is_rational();
            (
                "a rational number".to_string(),
                pass,
                format!("distinct sum = {computed_str}; rational but not an integer"),
            )
        }
        SolidClass::OctahedronCube => {
            let expected = BigRational::from(BigInt::from(v));
            let pass = computed.to_rational().map(|q| q == expected).unwrap_or(false);
            (
                v.to_string(),
                pass,
                format!("distinct sum matches the vertex count V = {v}; k = {k}"),
            )
        }
        SolidClass::IcosahedronDodecahedron => {
            let expected = BigRational::from(BigInt::from(2 * k + 2));
            let pass = computed.to_rational().map(|q| q == expected).unwrap_or(false);
            (
                (2 * k + 2).to_string(),
                pass,
                format!("2k+2 with k = {k} distinct chord lengths"),
            )
        }
    };
    Ok(Verdict {
        check_name: "sums3d",
        polytope: spec.to_string(),
        claimed,
        computed: computed_str,
        pass,
        detail,
    })
}

/// Full chord product of the n-crosspolytope equals `F^V = (2^n)^(2n)`.
pub fn check_crosspolytope_product(n: u32) -> Result<Verdict, TheoremError> {
    let spec = PolytopeSpec::crosspolytope(n)?;
    let faces = face_counts(&spec)?;
    let spectrum = chord_spectrum(&spec)?;
    let v = vertices_u64(&spec, &faces)?;
    let f = count_to_u64(&spec, faces.facets())?;
    let claimed = big_pow(BigInt::from(f), v);
    let computed = total_product(&spec, &spectrum)?;
    let pass = computed == BigRational::from(claimed.clone());
    Ok(Verdict {
        check_name: "xpoly-product",
        polytope: spec.to_string(),
        claimed: format!("F^V = {f}^{v}"),
        computed: format!("2^{}", 2 * u64::from(n) * u64::from(n)),
        pass,
        detail: format!(
            "product of all squared chords = {claimed}; F = 2^n = {f}, V = 2n = {v}"
        ),
    })
}

/// Full chord product of the 24-cell equals `6^E = 6^R = 6^96`.
pub fn check_24cell_product() -> Result<Verdict, TheoremError> {
    let spec = PolytopeSpec::cell24();
    let faces = face_counts(&spec)?;
    let spectrum = chord_spectrum(&spec)?;
    let edges = edges_u64(&spec, &faces)?;
    let ridges = count_to_u64(&spec, faces.ridges())?;
    let claimed = big_pow(BigInt::from(6), edges);
    let computed = total_product(&spec, &spectrum)?;
    let pass = computed == BigRational::from(claimed) && edges == ridges;
    let map = prime_factor_rational(&computed, 7)?;
    Ok(Verdict {
        check_name: "c24-product",
        polytope: spec.to_string(),
        claimed: format!("6^{edges}"),
        computed: render_prime_map(&map),
        pass,
        detail: format!("E = {edges}, R = {ridges}; 6^E = 6^R"),
    })
}

/// Exponent data shared by the congruence and distinct-product checks.
struct SolidProducts {
    class: SolidClass,
    edges: u64,
    vertices: u64,
    nu: u64,
    epsilon: u64,
    gcd_value: u64,
    /// Exponent of 2 in the full product (equals `a` when epsilon is odd).
    full_two: i64,
    /// Exponent of the odd prime in the full product, negated (is `b`).
    full_odd: i64,
    /// Same two quantities for the distinct product (give `c` and `d`).
    distinct_two: i64,
    distinct_odd: i64,
    /// The odd prime actually present, when epsilon is odd.
    odd_prime: Option<u64>,
    product_str: String,
    distinct_str: String,
}

fn solid_products(spec: &PolytopeSpec) -> Result<SolidProducts, TheoremError> {
    let class = solid_class(spec).ok_or_else(|| TheoremError::OutOfDomain {
        check: "congruences3d",
        polytope: spec.to_string(),
    })?;
    let faces = face_counts(spec)?;
    let edges = edges_u64(spec, &faces)?;
    let vertices = vertices_u64(spec, &faces)?;
    let nu = 2u64;
    let epsilon = 2 * edges / vertices;
    let gcd_value = count_to_u64(
        spec,
        u128::from(edges) / gcd_u128(u128::from(edges), u128::from(vertices)),
    )?;

    let spectrum = chord_spectrum(spec)?;
    let product = total_product(spec, &spectrum)?;
    let product_map = prime_factor_rational(&product, 7)?;
    let distinct = distinct_product(&spectrum)?;
    let distinct_rat = distinct.to_rational().ok_or(TheoremError::IrrationalProduct {
        polytope: spec.to_string(),
        value: distinct.to_string(),
    })?;
    let distinct_map = prime_factor_rational(&distinct_rat, 7)?;

    let exponent_of = |map: &BTreeMap<u64, i64>, p: u64| map.get(&p).copied().unwrap_or(0);
    let odd_prime = product_map.keys().copied().find(|p| *p != 2);
    let full_two = exponent_of(&product_map, 2);
    let full_odd = odd_prime.map(|p| -exponent_of(&product_map, p)).unwrap_or(0);
    let distinct_two = exponent_of(&distinct_map, 2);
    let distinct_odd = odd_prime.map(|p| -exponent_of(&distinct_map, p)).unwrap_or(0);

    Ok(SolidProducts {
        class,
        edges,
        vertices,
        nu,
        epsilon,
        gcd_value,
        full_two,
        full_odd,
        distinct_two,
        distinct_odd,
        odd_prime,
        product_str: render_prime_map(&product_map),
        distinct_str: render_prime_map(&distinct_map),
    })
}

/// The linear family of valid `(a, b)` exponent pairs for one denominator
/// base. For an odd epsilon the family is a single point. For the
/// power-of-two bases the product fixes only `a - t*b` (t = log2 of the
/// base), so `b` ranges over multiples of a step and the family is checked
/// at several members.
struct ExponentFamily {
    base: u64,
    a0: i64,
    a_step: i64,
    b0: i64,
    b_step: i64,
}

impl ExponentFamily {
    fn member(&self, q: i64) -> (i64, i64) {
        (self.a0 + self.a_step * q, self.b0 + self.b_step * q)
    }

    fn is_single(&self) -> bool {
        self.a_step == 0 && self.b_step == 0
    }
}

/// Builds the `(a, b)` family representing `product = 2^a / base^b` with
/// `E | b`. `two_exp` is the exponent of 2 in the product; `odd_exp` is the
/// already-negated exponent of the odd base, if the base is odd.
fn exponent_family(base: u64, two_exp: i64, odd_exp: i64, edges: u64) -> ExponentFamily {
    if base % 2 == 1 {
        ExponentFamily {
            base,
            a0: two_exp,
            a_step: 0,
            b0: odd_exp,
            b_step: 0,
        }
    } else {
        // base = 2^t: 2^a / base^b = 2^(a - t*b); keep b on multiples of E.
        let t = (base as f64).log2() as i64;
        debug_assert_eq!(1i64 << t, base as i64);
        ExponentFamily {
            base,
            a0: two_exp,
            a_step: t * edges as i64,
            b0: 0,
            b_step: edges as i64,
        }
    }
}

fn class_congruences(class: SolidClass, a: i64, edges: u64, vertices: u64) -> Vec<(String, bool)> {
    let e = edges as i64;
    let v = vertices as i64;
    let modcheck = |x: i64, r: i64, m: i64| (x - r).rem_euclid(m) == 0;
    match class {
        SolidClass::Tetrahedron => vec![
            (format!("a == 0 (mod E): {a} == 0 (mod {e})"), modcheck(a, 0, e)),
            (format!("a == E (mod V): {a} == {e} (mod {v})"), modcheck(a, e, v)),
        ],
        SolidClass::OctahedronCube => vec![
            (format!("a == V (mod E): {a} == {v} (mod {e})"), modcheck(a, v, e)),
            (format!("a == E (mod V): {a} == {e} (mod {v})"), modcheck(a, e, v)),
        ],
        SolidClass::IcosahedronDodecahedron => vec![
            (format!("a == V (mod E): {a} == {v} (mod {e})"), modcheck(a, v, e)),
            (format!("a == 0 (mod V): {a} == 0 (mod {v})"), modcheck(a, 0, v)),
        ],
    }
}

/// Full product of a 3-polytope's squared chords factors as `nu^a / epsilon^b`
/// with `E | b` and class-specific congruences on `a`; the denominator base
/// may equally be `E / gcd(E, V)`.
pub fn check_3d_product_congruences(spec: &PolytopeSpec) -> Result<Verdict, TheoremError> {
    let p = solid_products(spec)?;
    let mut lines: Vec<String> = Vec::new();
    let mut all_ok = true;
    let note = |label: String, ok: bool, lines: &mut Vec<String>| {
        lines.push(format!("{} [{}]", label, if ok { "ok" } else { "FAIL" }));
        ok
    };

    // Consistency of the incidence counts with the face counts.
    let incidence_ok = p.nu == 2 && p.epsilon * p.vertices == 2 * p.edges;
    all_ok &= note(
        format!("nu = {}, epsilon = {}", p.nu, p.epsilon),
        incidence_ok,
        &mut lines,
    );
    let lcm = u128::from(p.edges) / gcd_u128(u128::from(p.edges), u128::from(p.vertices))
        * u128::from(p.vertices);
    let gcd_ok = u128::from(p.gcd_value) * u128::from(p.vertices) == lcm;
    all_ok &= note(
        format!(
            "E/(E,V) = {} = lcm(E,V)/V (E = {}, V = {})",
            p.gcd_value, p.edges, p.vertices
        ),
        gcd_ok,
        &mut lines,
    );

    // When epsilon is odd the product determines (a, b) uniquely; the factored
    // map must contain exactly that base.
    if p.epsilon % 2 == 1 {
        let base_ok = p.odd_prime == Some(p.epsilon) && p.full_two > 0 && p.full_odd > 0;
        all_ok &= note(
            format!("product = {} matches nu^a / epsilon^b", p.product_str),
            base_ok,
            &mut lines,
        );
    }

    for (base, tag) in [(p.epsilon, "epsilon"), (p.gcd_value, "E/(E,V)")] {
        let family = exponent_family(base, p.full_two, p.full_odd, p.edges);
        let members: Vec<i64> = if family.is_single() {
            vec![0]
        } else {
            vec![0, 1, 2]
        };
        for q in members {
            let (a, b) = family.member(q);
            let qtag = if family.is_single() {
                String::new()
            } else {
                format!(" [q = {q}]")
            };
            let div_ok = b >= 0 && b % p.edges as i64 == 0;
            all_ok &= note(
                format!(
                    "base {tag} = {}: a = {a}, b = {b}; E | b{qtag}",
                    family.base
                ),
                div_ok,
                &mut lines,
            );
            for (label, ok) in class_congruences(p.class, a, p.edges, p.vertices) {
                all_ok &= note(format!("  {label}{qtag}"), ok, &mut lines);
            }
        }
    }

    Ok(Verdict {
        check_name: "congruences3d",
        polytope: spec.to_string(),
        claimed: "E | b; class congruences on a; denominator base replaceable by E/(E,V)"
            .to_string(),
        computed: p.product_str.clone(),
        pass: all_ok,
        detail: lines.join("; "),
    })
}

/// Canonical factored exponents for a 3-polytope, with the octahedron pinned
/// to the smallest all-positive family member (`q = 1`).
pub fn congruence_witness(spec: &PolytopeSpec) -> Result<CongruenceWitness, TheoremError> {
    let p = solid_products(spec)?;
    let m = match spec.kind() {
        PolytopeKind::Dodecahedron => 2,
        _ => 1,
    };
    if p.epsilon % 2 == 1 {
        Ok(CongruenceWitness {
            nu: p.nu,
            epsilon: p.epsilon,
            a: p.full_two as u64,
            b: p.full_odd as u64,
            c: p.distinct_two as u64,
            d: p.distinct_odd as u64,
            m,
            gcd_value: p.gcd_value,
        })
    } else {
        // Octahedron: q = 1 members of the full and distinct families. The
        // distinct member is chosen so a = c*V stays in lockstep, which pins
        // d through c - 2d = log2 of the distinct product.
        let full = exponent_family(p.epsilon, p.full_two, p.full_odd, p.edges);
        let (a, b) = full.member(1);
        let c = a / p.vertices as i64;
        let d = (c - p.distinct_two) / 2;
        Ok(CongruenceWitness {
            nu: p.nu,
            epsilon: p.epsilon,
            a: a as u64,
            b: b as u64,
            c: c as u64,
            d: d as u64,
            m,
            gcd_value: p.gcd_value,
        })
    }
}

/// Product of distinct squared chords: 8 for every crosspolytope, 24 for the
/// 24-cell, and for the 3-polytopes the factored form `nu^c / epsilon^d` tied
/// to the full product by `b = d*E` or `a = c*V*m`.
pub fn check_fact4(spec: &PolytopeSpec) -> Result<Verdict, TheoremError> {
    match spec.kind() {
        PolytopeKind::CrossPolytope(n) => {
            let eight = fact4_crosspolytope(spec)?;
            if n != 3 {
                return Ok(eight);
            }
            // The octahedron also carries the 3-polytope exponent relations.
            let solid = fact4_solid(spec)?;
            Ok(Verdict {
                check_name: "fact4",
                polytope: spec.to_string(),
                claimed: format!("{}; {}", eight.claimed, solid.claimed),
                computed: eight.computed,
                pass: eight.pass && solid.pass,
                detail: format!("{}; {}", eight.detail, solid.detail),
            })
        }
        PolytopeKind::Cell24 => fact4_cell24(spec),
        _ if is_three_dimensional_solid(spec) => fact4_solid(spec),
        _ => Err(TheoremError::OutOfDomain {
            check: "fact4",
            polytope: spec.to_string(),
        }),
    }
}

fn fact4_crosspolytope(spec: &PolytopeSpec) -> Result<Verdict, TheoremError> {
    let spectrum = chord_spectrum(spec)?;
    let computed = distinct_product(&spectrum)?;
    let pass = computed == QuadExt::from_integer(8);
    Ok(Verdict {
        check_name: "fact4",
        polytope: spec.to_string(),
        claimed: "8".to_string(),
        computed: computed.to_string(),
        pass,
        detail: "distinct chords are the edge (2) and the diameter (4); 2 * 4 = 8".to_string(),
    })
}

fn fact4_cell24(spec: &PolytopeSpec) -> Result<Verdict, TheoremError> {
    let faces = face_counts(spec)?;
    let spectrum = chord_spectrum(spec)?;
    let v = vertices_u64(spec, &faces)?;
    let f = count_to_u64(spec, faces.facets())?;
    let computed = distinct_product(&spectrum)?;
    let pass = computed == QuadExt::from_integer(24) && v == 24 && f == 24;
    Ok(Verdict {
        check_name: "fact4",
        polytope: spec.to_string(),
        claimed: "24".to_string(),
        computed: computed.to_string(),
        pass,
        detail: format!("1 * 2 * 3 * 4 = 24 = F = V (F = {f}, V = {v})"),
    })
}

fn fact4_solid(spec: &PolytopeSpec) -> Result<Verdict, TheoremError> {
    let p = solid_products(spec)?;
    let mut lines: Vec<String> = Vec::new();
    let mut all_ok = true;
    let note = |label: String, ok: bool, lines: &mut Vec<String>| {
        lines.push(format!("{} [{}]", label, if ok { "ok" } else { "FAIL" }));
        ok
    };

    // Which relation ties the distinct exponents to the full ones.
    let vertex_based = matches!(
        spec.kind(),
        PolytopeKind::CrossPolytope(_) | PolytopeKind::Dodecahedron
    );
    let m: i64 = if matches!(spec.kind(), PolytopeKind::Dodecahedron) {
        2
    } else {
        1
    };

    if p.epsilon % 2 == 1 {
        let (c, d) = (p.distinct_two, p.distinct_odd);
        let base_ok = c > 0 && d > 0 && p.odd_prime == Some(p.epsilon);
        all_ok &= note(
            format!(
                "distinct product = {} = nu^{c} / epsilon^{d}",
                p.distinct_str
            ),
            base_ok,
            &mut lines,
        );
        if vertex_based {
            let (a, _) = (p.full_two, p.full_odd);
            let ok = a == c * p.vertices as i64 * m;
            all_ok &= note(
                format!("a = c*V*m: {a} = {c} * {} * {m}", p.vertices),
                ok,
                &mut lines,
            );
        } else {
            let b = p.full_odd;
            let ok = b == d * p.edges as i64;
            all_ok &= note(format!("b = d*E: {b} = {d} * {}", p.edges), ok, &mut lines);
        }
    } else {
        // Octahedron: distinct product is 2^3; the family c = 3 + 4q, d = 2q
        // tracks the full family a = 18 + 24q so that a = c*V holds per q.
        for q in [0i64, 1, 2] {
            let c = p.distinct_two + 4 * q;
            let d = 2 * q;
            let a = p.full_two + 24 * q;
            let value_ok = c - 2 * d == p.distinct_two;
            let relation_ok = a == c * p.vertices as i64 * m;
            all_ok &= note(
                format!("q = {q}: c = {c}, d = {d}; nu^c / epsilon^d = 2^{}", c - 2 * d),
                value_ok,
                &mut lines,
            );
            all_ok &= note(
                format!("  a = c*V*m: {a} = {c} * {} * {m}", p.vertices),
                relation_ok,
                &mut lines,
            );
        }
    }

    Ok(Verdict {
        check_name: "fact4",
        polytope: spec.to_string(),
        claimed: if vertex_based {
            "nu^c / epsilon^d with a = c*V*m".to_string()
        } else {
            "nu^c / epsilon^d with b = d*E".to_string()
        },
        computed: p.distinct_str.clone(),
        pass: all_ok,
        detail: lines.join("; "),
    })
}

/// All four polygon identities through the cyclotomic path: chord sum `E^2`,
/// distinct sum `E` (odd) or `2k+2` (even), chord product `E^E`, distinct
/// product `E` (odd) or an integer (even), plus the `E = 2k+1` count for odd
/// orders.
pub fn check_polygon_facts(edges: u64) -> Result<Verdict, TheoremError> {
    let spec = PolytopeSpec::polygon(edges)?;
    let ps = polygon_spectrum(edges)?;
    let k = ps.distinct_count() as u64;
    let odd = edges % 2 == 1;

    let mut lines: Vec<String> = Vec::new();
    let mut all_ok = true;
    let note = |label: String, ok: bool, lines: &mut Vec<String>| {
        lines.push(format!("{} [{}]", label, if ok { "ok" } else { "FAIL" }));
        ok
    };

    let e_big = BigInt::from(edges);
    let sum = ps.sum_squared()?;
    let sum_ok = sum == BigRational::from(&e_big * &e_big);
    all_ok &= note(format!("sum = {sum} = E^2"), sum_ok, &mut lines);

    let dsum = ps.distinct_sum_squared()?;
    if odd {
        let ok = dsum == BigRational::from(e_big.clone()) && edges == 2 * k + 1;
        all_ok &= note(
            format!("distinct sum = {dsum} = E = 2k+1 (k = {k})"),
            ok,
            &mut lines,
        );
    } else {
        let ok = dsum == BigRational::from(BigInt::from(2 * k + 2)) && k == edges / 2;
        all_ok &= note(
            format!("distinct sum = {dsum} = 2k+2 (k = {k})"),
            ok,
            &mut lines,
        );
    }

    let product = ps.product_squared()?;
    let product_ok = product == BigRational::from(big_pow(e_big.clone(), edges));
    all_ok &= note(format!("product = E^E = {edges}^{edges}"), product_ok, &mut lines);

    let dprod = ps.distinct_product_squared()?;
    if odd {
        let ok = dprod == BigRational::from(e_big);
        all_ok &= note(format!("distinct product = {dprod} = E"), ok, &mut lines);
    } else {
        let ok = is_integer(&dprod);
        all_ok &= note(format!("distinct product = {dprod} (integer)"), ok, &mut lines);
    }

    Ok(Verdict {
        check_name: "polygon",
        polytope: spec.to_string(),
        claimed: if odd {
            format!("sum E^2; distinct sum E; product E^E; distinct product E (E = {edges})")
        } else {
            format!("sum E^2; distinct sum 2k+2; product E^E; integral distinct product (E = {edges})")
        },
        computed: format!("sum = {sum}; distinct sum = {dsum}; distinct product = {dprod}"),
        pass: all_ok,
        detail: lines.join("; "),
    })
}

/// Every identity transfers to the reciprocal polytope with facet and vertex
/// counts exchanged: the facet-center segments of a polytope circumscribed
/// about the unit sphere are exactly the chords of its dual inscribed in it.
/// Runs the applicable primal checks on the dual and verifies the face-count
/// reversal.
pub fn check_duality_corollaries(spec: &PolytopeSpec) -> Result<Verdict, TheoremError> {
    let dual = spec.dual();
    let faces = face_counts(spec)?;
    let dual_faces = face_counts(&dual)?;

    let mut lines: Vec<String> = Vec::new();
    let mut all_ok = true;
    let note = |label: String, ok: bool, lines: &mut Vec<String>| {
        lines.push(format!("{} [{}]", label, if ok { "ok" } else { "FAIL" }));
        ok
    };

    let involution_ok = dual.dual() == *spec;
    all_ok &= note(format!("dual({dual}) = {spec}"), involution_ok, &mut lines);

    let mut reversed: Vec<u128> = faces.counts().to_vec();
    reversed.reverse();
    let reversal_ok = dual_faces.counts() == reversed.as_slice();
    all_ok &= note(
        "dual face vector is the reversal".to_string(),
        reversal_ok,
        &mut lines,
    );
    let swap_ok = dual_faces.vertices() == faces.facets() && dual_faces.facets() == faces.vertices();
    all_ok &= note(
        format!(
            "F <-> V exchange: V' = {} = F, F' = {} = V",
            dual_faces.vertices(),
            dual_faces.facets()
        ),
        swap_ok,
        &mut lines,
    );

    for name in checks_for(&dual) {
        if name == "duality" {
            continue;
        }
        let verdict = run_check(&dual, name)?;
        all_ok &= note(format!("{name} on {dual}"), verdict.pass, &mut lines);
    }

    Ok(Verdict {
        check_name: "duality",
        polytope: spec.to_string(),
        claimed: format!("primal checks hold on {dual} with F and V exchanged"),
        computed: format!("V' = {}, F' = {}", dual_faces.vertices(), dual_faces.facets()),
        pass: all_ok,
        detail: lines.join("; "),
    })
}

/// Exact factored products for the cases with no claimed closed form: tests
/// the crosspolytope product shape `F^V` and distinct-product integrality,
/// reporting what holds instead of asserting.
pub fn explore_open_products(
    spec: &PolytopeSpec,
    evaluate: bool,
) -> Result<ExplorationReport, TheoremError> {
    let in_domain = matches!(spec.kind(), PolytopeKind::Cell600 | PolytopeKind::Cell120)
        || (matches!(spec.kind(), PolytopeKind::Simplex(_) | PolytopeKind::Cube(_))
            && spec.dimension() > 3);
    if !in_domain {
        return Err(TheoremError::OutOfDomain {
            check: "explore",
            polytope: spec.to_string(),
        });
    }

    let faces = face_counts(spec)?;
    let spectrum = chord_spectrum(spec)?;
    let v = vertices_u64(spec, &faces)?;
    let f = count_to_u64(spec, faces.facets())?;

    let product_map = total_product_primes(spec, &spectrum, 4096)?;

    let mut reference_map = prime_factor_rational(
        &BigRational::from(BigInt::from(f)),
        4096,
    )?;
    for e in reference_map.values_mut() {
        *e *= v as i64;
    }

    let fact3_shape_holds = product_map == reference_map;

    let distinct = distinct_product(&spectrum)?;
    let fact4_integral = distinct
        .to_rational()
        .map(|q| is_integer(&q))
        .unwrap_or(false);

    let evaluated = if evaluate {
        let product = total_product(spec, &spectrum)?;
        Some((product.numer().to_string(), product.denom().to_string()))
    } else {
        None
    };

    Ok(ExplorationReport {
        polytope: spec.to_string(),
        vertex_count: v,
        distinct_count: spectrum.distinct_count(),
        product_factors: product_map.into_iter().collect(),
        fact3_reference_factors: reference_map.into_iter().collect(),
        fact3_shape_holds,
        distinct_product: distinct.to_string(),
        fact4_integral,
        evaluated,
    })
}

/// Asserts that the distinct chord sum is an integer.
///
/// Not part of any check suite: the claim is false for simplices of dimension
/// three and up, which makes this a handy negative control for exit-code
/// plumbing.
pub fn assert_integral_distinct_sum(spec: &PolytopeSpec) -> Result<Verdict, TheoremError> {
    let spectrum = chord_spectrum(spec)?;
    let computed = distinct_sum(&spectrum)?;
    let pass = computed.to_rational().map(|q| is_integer(&q)).unwrap_or(false);
    Ok(Verdict {
        check_name: "integral-distinct-sum",
        polytope: spec.to_string(),
        claimed: "an integer".to_string(),
        computed: computed.to_string(),
        pass,
        detail: "asserted integrality of the distinct chord sum".to_string(),
    })
}

/// Stable names of the checks that apply to a polytope, in report order.
pub fn checks_for(spec: &PolytopeSpec) -> Vec<&'static str> {
    let is_cross = matches!(spec.kind(), PolytopeKind::CrossPolytope(_));
    let is_cell24 = matches!(spec.kind(), PolytopeKind::Cell24);
    let mut names = vec!["fact1", "fact2"];
    if is_three_dimensional_solid(spec) {
        names.push("sums3d");
    }
    if is_cross {
        names.push("xpoly-product");
    }
    if is_cell24 {
        names.push("c24-product");
    }
    if is_three_dimensional_solid(spec) {
        names.push("congruences3d");
    }
    if is_cross || is_cell24 || is_three_dimensional_solid(spec) {
        names.push("fact4");
    }
    if matches!(spec.kind(), PolytopeKind::Polygon(_)) {
        names.push("polygon");
    }
    names.push("duality");
    names
}

/// Runs one named check against a polytope.
pub fn run_check(spec: &PolytopeSpec, name: &str) -> Result<Verdict, TheoremError> {
    match name {
        "fact1" => check_fact1(spec),
        "fact2" => check_fact2(spec),
        "sums3d" => check_3d_sums(spec),
        "xpoly-product" => match spec.kind() {
            PolytopeKind::CrossPolytope(n) => check_crosspolytope_product(n),
            _ => Err(TheoremError::OutOfDomain {
                check: "xpoly-product",
                polytope: spec.to_string(),
            }),
        },
        "c24-product" => match spec.kind() {
            PolytopeKind::Cell24 => check_24cell_product(),
            _ => Err(TheoremError::OutOfDomain {
                check: "c24-product",
                polytope: spec.to_string(),
            }),
        },
        "congruences3d" => check_3d_product_congruences(spec),
        "fact4" => check_fact4(spec),
        "polygon" => match spec.kind() {
            PolytopeKind::Polygon(edges) => check_polygon_facts(edges),
            _ => Err(TheoremError::OutOfDomain {
                check: "polygon",
                polytope: spec.to_string(),
            }),
        },
        "duality" => check_duality_corollaries(spec),
        other => Err(TheoremError::UnknownCheck(other.to_string())),
    }
}

/// Runs every applicable check for a polytope, in stable order.
pub fn run_checks(spec: &PolytopeSpec) -> Result<Vec<Verdict>, TheoremError> {
    checks_for(spec)
        .into_iter()
        .map(|name| run_check(spec, name))
        .collect()
}

/// Runs the applicable checks for each polytope in catalog order.
pub fn run_suite(specs: &[PolytopeSpec]) -> Result<Vec<Verdict>, TheoremError> {
    let mut out = Vec::new();
    for spec in specs {
        out.extend(run_checks(spec)?);
    }
    Ok(out)
}
