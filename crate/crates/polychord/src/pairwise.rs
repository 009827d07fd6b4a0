//! Integer kernel for exact pairwise squared distances.
//!
//! Coordinates in `Q(sqrt(5))` are cleared of denominators into integer
//! pairs `(a, b) ~ a + b*sqrt(5)`. Squared distances then accumulate in
//! plain 64-bit arithmetic (a pre-check bounds every intermediate), get
//! grouped exactly by value, and a single exact division at the end
//! restores the unit-circumradius normalization. Alongside the global
//! grouping the kernel tallies each vertex's own distance profile and
//! insists the profiles agree, which is what lets one vertex speak for
//! all of them.

use std::cmp::Ordering;
use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use thiserror::Error;

use crate::catalog::VertexSet;
use crate::exactnum::QuadExt;

/// Bound on scaled integer coordinates; keeps every accumulated value far
/// inside 64 bits and every comparator square inside 128 bits.
const COORD_BOUND: i64 = 1 << 20;
const DIM_BOUND: usize = 1 << 10;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PairwiseError {
    #[error("scaled coordinates exceed the integer kernel range")]
    CoordinateOverflow,
    #[error("vertex {vertex} sees a different distance profile")]
    ProfileMismatch { vertex: usize },
    #[error("empty vertex set")]
    Empty,
}

/// One exact distance class, in kernel scaling.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairwiseGroup {
    /// Scaled squared distance, as the integer pair `a + b*sqrt(5)`.
    pub value: (i64, i64),
    /// Unordered pairs at this distance.
    pub total: u64,
    /// Chords at this distance seen from any single vertex.
    pub per_vertex: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairwiseSummary {
    pub vertex_count: u64,
    /// Ascending by real value; every vertex sees `per_vertex` chords in
    /// each group.
    pub groups: Vec<PairwiseGroup>,
    /// `scale^2 * R^2`: the exact divisor that renormalizes scaled values
    /// to the unit circumsphere.
    divisor: QuadExt,
}

impl PairwiseSummary {
    /// Renormalizes a scaled group value to the unit circumsphere.
    pub fn normalize(&self, value: (i64, i64)) -> QuadExt {
        let v = QuadExt::new(
            BigRational::from_integer(BigInt::from(value.0)),
            BigRational::from_integer(BigInt::from(value.1)),
        );
        v.checked_div(&self.divisor)
            .expect("divisor is a positive circumradius")
    }
}

/// Total order on integer pairs by the real value `a + b*sqrt(5)`.
fn cmp_scaled(x: (i64, i64), y: (i64, i64)) -> Ordering {
    let da = i128::from(x.0) - i128::from(y.0);
    let db = i128::from(x.1) - i128::from(y.1);
    match (da.signum(), db.signum()) {
        (0, 0) => Ordering::Equal,
        (a, b) if a >= 0 && b >= 0 => Ordering::Greater,
        (a, b) if a <= 0 && b <= 0 => Ordering::Less,
        (a, _) => {
            // Components disagree: compare da^2 with 5 db^2. Equality is
            // impossible for nonzero integers.
            match (da * da).cmp(&(5 * db * db)) {
                Ordering::Greater => {
                    if a > 0 {
                        Ordering::Greater
                    } else {
                        Ordering::Less
                    }
                }
                _ => {
                    if a > 0 {
                        Ordering::Less
                    } else {
                        Ordering::Greater
                    }
                }
            }
        }
    }
}

fn scaled_component(q: &BigRational, scale: &BigInt) -> Result<i64, PairwiseError> {
    let v = (q.numer() * (scale / q.denom())).to_i64();
    match v {
        Some(x) if x.abs() <= COORD_BOUND => Ok(x),
        _ => Err(PairwiseError::CoordinateOverflow),
    }
}

/// Exact distance classes over all unordered vertex pairs.
pub fn pairwise_summary(vs: &VertexSet) -> Result<PairwiseSummary, PairwiseError> {
    let v = vs.len();
    if v == 0 {
        return Err(PairwiseError::Empty);
    }
    let dim = vs.dimension() as usize;
    if dim > DIM_BOUND {
        return Err(PairwiseError::CoordinateOverflow);
    }

    // Common denominator of every component of every point.
    let mut scale = BigInt::one();
    for p in vs.points() {
        for c in p {
            scale = scale.lcm(c.rational_part().denom());
            scale = scale.lcm(c.radical_part().denom());
        }
    }

    let mut xa = Vec::with_capacity(v * dim);
    let mut xb = Vec::with_capacity(v * dim);
    for p in vs.points() {
        debug_assert_eq!(p.len(), dim);
        for c in p {
            xa.push(scaled_component(c.rational_part(), &scale)?);
            xb.push(scaled_component(c.radical_part(), &scale)?);
        }
    }

    // Group values -> per-vertex tallies. Bounds: |component diff| <=
    // 2*COORD_BOUND, so each squared distance stays below
    // DIM_BOUND * 6 * (2*COORD_BOUND)^2 < 2^55.
    let mut index: HashMap<(i64, i64), usize> = HashMap::new();
    let mut tallies: Vec<Vec<u32>> = Vec::new();
    for i in 0..v {
        let ioff = i * dim;
        for j in (i + 1)..v {
            let joff = j * dim;
            let mut sa = 0i64;
            let mut sb = 0i64;
            for d in 0..dim {
                let da = xa[ioff + d] - xa[joff + d];
                let db = xb[ioff + d] - xb[joff + d];
                sa += da * da + 5 * db * db;
                sb += 2 * da * db;
            }
            let slot = *index.entry((sa, sb)).or_insert_with(|| {
                tallies.push(vec![0u32; v]);
                tallies.len() - 1
            });
            tallies[slot][i] += 1;
            tallies[slot][j] += 1;
        }
    }

    let mut keys: Vec<(i64, i64)> = index.keys().copied().collect();
    keys.sort_unstable_by(|a, b| cmp_scaled(*a, *b));

    let mut groups = Vec::with_capacity(keys.len());
    for key in keys {
        let tally = &tallies[index[&key]];
        let per_vertex = tally[0];
        if let Some(vertex) = tally.iter().position(|&c| c != per_vertex) {
            return Err(PairwiseError::ProfileMismatch { vertex });
        }
        let total: u64 = tally.iter().map(|&c| u64::from(c)).sum::<u64>() / 2;
        groups.push(PairwiseGroup {
            value: key,
            total,
            per_vertex: u64::from(per_vertex),
        });
    }

    let scale_sq = BigRational::from_integer(&scale * &scale);
    let divisor = &QuadExt::from_rational(scale_sq) * vs.squared_circumradius();
    Ok(PairwiseSummary {
        vertex_count: v as u64,
        groups,
        divisor,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{self, PolytopeSpec};

    #[test]
    fn square_cross_polytope_groups() {
        let vs = catalog::vertices(&PolytopeSpec::crosspolytope(2).unwrap()).unwrap();
        let s = pairwise_summary(&vs).unwrap();
        assert_eq!(s.vertex_count, 4);
        let shape: Vec<(QuadExt, u64, u64)> = s
            .groups
            .iter()
            .map(|g| (s.normalize(g.value), g.total, g.per_vertex))
            .collect();
        assert_eq!(
            shape,
            vec![
                (QuadExt::from_integer(2), 4, 2),
                (QuadExt::from_integer(4), 2, 1),
            ]
        );
    }

    #[test]
    fn icosahedron_groups_normalize_into_the_quadratic_field() {
        let vs = catalog::vertices(&PolytopeSpec::icosahedron()).unwrap();
        let s = pairwise_summary(&vs).unwrap();
        let shape: Vec<(QuadExt, u64, u64)> = s
            .groups
            .iter()
            .map(|g| (s.normalize(g.value), g.total, g.per_vertex))
            .collect();
        assert_eq!(
            shape,
            vec![
                (QuadExt::quad(2, 1, -2, 5), 30, 5),
                (QuadExt::quad(2, 1, 2, 5), 30, 5),
                (QuadExt::from_integer(4), 6, 1),
            ]
        );
    }

    #[test]
    fn irregular_sets_fail_the_profile_check() {
        let points = vec![
            vec![QuadExt::from_integer(1), QuadExt::zero()],
            vec![QuadExt::from_integer(-1), QuadExt::zero()],
            vec![QuadExt::zero(), QuadExt::from_integer(1)],
        ];
        let vs = VertexSet::from_raw_parts(2, QuadExt::one(), points);
        assert_eq!(
            pairwise_summary(&vs),
            Err(PairwiseError::ProfileMismatch { vertex: 2 })
        );
    }

    #[test]
    fn comparator_orders_mixed_sign_pairs() {
        // 7 - 3 sqrt5 > 0 and 2 - sqrt5 < 0, so (7,-3) sorts above (2,-1).
        let mut vals = vec![(7i64, -3i64), (2, -1), (0, 0), (4, 0), (0, 1)];
        vals.sort_unstable_by(|a, b| cmp_scaled(*a, *b));
        assert_eq!(vals, vec![(2, -1), (0, 0), (7, -3), (0, 1), (4, 0)]);
    }

    #[test]
    fn oversized_coordinates_are_rejected() {
        let points = vec![
            vec![QuadExt::from_integer(1 << 30)],
            vec![QuadExt::from_integer(-(1 << 30))],
        ];
        let vs = VertexSet::from_raw_parts(1, QuadExt::from_integer(1 << 60), points);
        assert_eq!(
            pairwise_summary(&vs),
            Err(PairwiseError::CoordinateOverflow)
        );
    }
}
