//! Exact plane geometry over rationals and crossing counts of rectilinear drawings.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{arg_err, Error, Result};
use crate::graph::{Edge, RegularGraph};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Point {
    pub x: BigRational,
    pub y: BigRational,
}

impl Point {
    pub fn new(x: BigRational, y: BigRational) -> Self {
        Point { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Point {
            x: BigRational::from_integer(x.into()),
            y: BigRational::from_integer(y.into()),
        }
    }

    /// `(xn/xd, yn/yd)`; fails on a zero denominator. Values are reduced.
    pub fn from_fractions(xn: BigInt, xd: BigInt, yn: BigInt, yd: BigInt) -> Result<Self> {
        if xd.is_zero() || yd.is_zero() {
            return arg_err("zero denominator in point coordinate");
        }
        Ok(Point {
            x: BigRational::new(xn, xd),
            y: BigRational::new(yn, yd),
        })
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (
            self.x.to_f64().unwrap_or(f64::NAN),
            self.y.to_f64().unwrap_or(f64::NAN),
        )
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orientation {
    Left,
    Right,
    Collinear,
}

impl Orientation {
    fn from_sign<T: Signed>(v: &T) -> Self {
        if v.is_positive() {
            Orientation::Left
        } else if v.is_negative() {
            Orientation::Right
        } else {
            Orientation::Collinear
        }
    }

    fn from_i128(v: i128) -> Self {
        match v.signum() {
            1 => Orientation::Left,
            -1 => Orientation::Right,
            _ => Orientation::Collinear,
        }
    }
}

/// Sign of `(q - p) x (r - p)`: `Left` when `r` lies left of the directed line `p -> q`.
pub fn orientation(p: &Point, q: &Point, r: &Point) -> Orientation {
    let cross = (&q.x - &p.x) * (&r.y - &p.y) - (&q.y - &p.y) * (&r.x - &p.x);
    Orientation::from_sign(&cross)
}

/// Whether the two closed segments meet in exactly one point interior to both.
///
/// Segments sharing an endpoint never cross. Four distinct endpoints with a
/// collinear triple are rejected as degenerate.
pub fn segments_cross(a1: &Point, a2: &Point, b1: &Point, b2: &Point) -> Result<bool> {
    if a1 == b1 || a1 == b2 || a2 == b1 || a2 == b2 {
        return Ok(false);
    }
    let o = [
        orientation(a1, a2, b1),
        orientation(a1, a2, b2),
        orientation(b1, b2, a1),
        orientation(b1, b2, a2),
    ];
    if o.contains(&Orientation::Collinear) {
        return Err(Error::Degeneracy(format!(
            "collinear endpoints among segments {a1}-{a2} and {b1}-{b2}"
        )));
    }
    Ok(o[0] != o[1] && o[2] != o[3])
}

/// The vertex positions rescaled by a common denominator onto the integer lattice.
///
/// Scaling by a positive factor preserves every orientation, so predicates on
/// the lattice agree with predicates on the original rationals.
#[derive(Clone, Debug)]
pub(crate) enum Lattice {
    Small(Vec<(i64, i64)>),
    Big(Vec<(BigInt, BigInt)>),
}

// Coordinates below 2^61 keep every cross product inside i128.
const SMALL_LIMIT: i64 = 1 << 61;

impl Lattice {
    fn new(points: &[Point]) -> Self {
        let mut scale = BigInt::one();
        for p in points {
            scale = scale.lcm(p.x.denom());
            scale = scale.lcm(p.y.denom());
        }
        let big: Vec<(BigInt, BigInt)> = points
            .iter()
            .map(|p| {
                (
                    p.x.numer() * (&scale / p.x.denom()),
                    p.y.numer() * (&scale / p.y.denom()),
                )
            })
            .collect();
        let small: Option<Vec<(i64, i64)>> = big
            .iter()
            .map(|(x, y)| {
                let x = x.to_i64().filter(|v| v.abs() < SMALL_LIMIT)?;
                let y = y.to_i64().filter(|v| v.abs() < SMALL_LIMIT)?;
                Some((x, y))
            })
            .collect();
        match small {
            Some(s) => Lattice::Small(s),
            None => Lattice::Big(big),
        }
    }

    pub(crate) fn from_small(points: Vec<(i64, i64)>) -> Self {
        debug_assert!(points
            .iter()
            .all(|&(x, y)| x.abs() < SMALL_LIMIT && y.abs() < SMALL_LIMIT));
        Lattice::Small(points)
    }

    pub(crate) fn len(&self) -> usize {
        match self {
            Lattice::Small(p) => p.len(),
            Lattice::Big(p) => p.len(),
        }
    }

    pub(crate) fn same(&self, i: usize, j: usize) -> bool {
        match self {
            Lattice::Small(p) => p[i] == p[j],
            Lattice::Big(p) => p[i] == p[j],
        }
    }

    /// Orientation of vertex `k` relative to the directed line `i -> j`.
    pub(crate) fn orient(&self, i: usize, j: usize, k: usize) -> Orientation {
        match self {
            Lattice::Small(p) => {
                let (px, py) = (p[i].0 as i128, p[i].1 as i128);
                let (qx, qy) = (p[j].0 as i128 - px, p[j].1 as i128 - py);
                let (rx, ry) = (p[k].0 as i128 - px, p[k].1 as i128 - py);
                Orientation::from_i128(qx * ry - qy * rx)
            }
            Lattice::Big(p) => {
                let (px, py) = &p[i];
                let cross = (&p[j].0 - px) * (&p[k].1 - py) - (&p[j].1 - py) * (&p[k].0 - px);
                Orientation::from_sign(&cross)
            }
        }
    }

    /// Crossing test for edges with four distinct endpoints in general position.
    pub(crate) fn cross(&self, (a, b): Edge, (c, d): Edge) -> bool {
        self.orient(a, b, c) != self.orient(a, b, d) && self.orient(c, d, a) != self.orient(c, d, b)
    }

    pub(crate) fn general_position(&self) -> Result<(), Violation> {
        let n = self.len();
        for i in 0..n {
            for j in i + 1..n {
                if self.same(i, j) {
                    return Err(Violation::Duplicate(i, j));
                }
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    if self.orient(i, j, k) == Orientation::Collinear {
                        return Err(Violation::Collinear(i, j, k));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Why a set of vertex positions is not in general position.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Violation {
    Duplicate(usize, usize),
    Collinear(usize, usize, usize),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Duplicate(i, j) => write!(f, "vertices {i} and {j} coincide"),
            Violation::Collinear(i, j, k) => write!(f, "vertices {i}, {j}, {k} are collinear"),
        }
    }
}

impl From<Violation> for Error {
    fn from(v: Violation) -> Self {
        Error::Degeneracy(v.to_string())
    }
}

/// A regular graph together with exact rational positions for its vertices.
#[derive(Clone, Debug)]
pub struct GeometricDrawing {
    graph: RegularGraph,
    positions: Vec<Point>,
    lattice: Lattice,
}

impl PartialEq for GeometricDrawing {
    fn eq(&self, other: &Self) -> bool {
        self.graph == other.graph && self.positions == other.positions
    }
}

impl Eq for GeometricDrawing {}

impl GeometricDrawing {
    /// Pairs a graph with positions. General position is not checked here;
    /// see [`validate_general_position`].
    pub fn new(graph: RegularGraph, positions: Vec<Point>) -> Result<Self> {
        if positions.len() != graph.n() {
            return arg_err(format!(
                "drawing has {} positions for {} vertices",
                positions.len(),
                graph.n()
            ));
        }
        let lattice = Lattice::new(&positions);
        Ok(GeometricDrawing {
            graph,
            positions,
            lattice,
        })
    }

    pub(crate) fn from_lattice_points(graph: RegularGraph, points: Vec<(i64, i64)>) -> Self {
        let positions = points
            .iter()
            .map(|&(x, y)| Point::from_ints(x, y))
            .collect();
        GeometricDrawing {
            graph,
            positions,
            lattice: Lattice::from_small(points),
        }
    }

    pub fn graph(&self) -> &RegularGraph {
        &self.graph
    }

    pub fn positions(&self) -> &[Point] {
        &self.positions
    }

    pub(crate) fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    /// Same positions, different edge set on the same vertex count.
    pub fn with_graph(&self, graph: RegularGraph) -> Result<Self> {
        if graph.n() != self.graph.n() {
            return arg_err("replacement graph has a different order");
        }
        Ok(GeometricDrawing {
            graph,
            positions: self.positions.clone(),
            lattice: self.lattice.clone(),
        })
    }

    /// Applies `p -> A p + t` with rational entries to every vertex.
    pub fn map_affine(&self, a: [[BigRational; 2]; 2], t: [BigRational; 2]) -> Result<Self> {
        let det = &a[0][0] * &a[1][1] - &a[0][1] * &a[1][0];
        if det.is_zero() {
            return arg_err("affine map is singular");
        }
        let positions = self
            .positions
            .iter()
            .map(|p| {
                Point::new(
                    &a[0][0] * &p.x + &a[0][1] * &p.y + &t[0],
                    &a[1][0] * &p.x + &a[1][1] * &p.y + &t[1],
                )
            })
            .collect();
        GeometricDrawing::new(self.graph.clone(), positions)
    }
}

/// No two positions coincide and no three are collinear.
pub fn validate_general_position(drawing: &GeometricDrawing) -> Result<(), Violation> {
    drawing.lattice.general_position()
}

/// Crossing statistics of a drawing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossingReport {
    /// Number of unordered edge pairs that cross.
    pub total: u64,
    /// Crossings on each edge, indexed like the graph's sorted edge list.
    pub per_edge: Vec<u64>,
    /// Non-adjacent edge pairs that do not cross.
    pub non_crossing: u64,
    /// All non-adjacent edge pairs; always `total + non_crossing`.
    pub nonadjacent_pairs: u64,
}

impl CrossingReport {
    /// Builds the report from a symmetric pair predicate over the edge list.
    pub(crate) fn from_predicate<F>(edges: &[Edge], crosses: F) -> Self
    where
        F: Fn(Edge, Edge) -> bool + Sync,
    {
        let m = edges.len();
        let row = |i: usize| -> (Vec<usize>, u64) {
            let e = edges[i];
            let mut hits = Vec::new();
            let mut nonadjacent = 0u64;
            for (j, &f) in edges.iter().enumerate().skip(i + 1) {
                if e.0 == f.0 || e.0 == f.1 || e.1 == f.0 || e.1 == f.1 {
                    continue;
                }
                nonadjacent += 1;
                if crosses(e, f) {
                    hits.push(j);
                }
            }
            (hits, nonadjacent)
        };
        #[cfg(feature = "parallel")]
        let rows: Vec<(Vec<usize>, u64)> = {
            use rayon::prelude::*;
            if m >= 256 {
                (0..m).into_par_iter().map(row).collect()
            } else {
                (0..m).map(row).collect()
            }
        };
        #[cfg(not(feature = "parallel"))]
        let rows: Vec<(Vec<usize>, u64)> = (0..m).map(row).collect();

        let mut per_edge = vec![0u64; m];
        let mut total = 0u64;
        let mut pairs = 0u64;
        for (i, (hits, nonadjacent)) in rows.into_iter().enumerate() {
            pairs += nonadjacent;
            total += hits.len() as u64;
            per_edge[i] += hits.len() as u64;
            for j in hits {
                per_edge[j] += 1;
            }
        }
        CrossingReport {
            total,
            per_edge,
            non_crossing: pairs - total,
            nonadjacent_pairs: pairs,
        }
    }
}

/// Counts crossings pair by pair with exact orientation tests.
pub fn count_crossings_geometric(drawing: &GeometricDrawing) -> Result<CrossingReport> {
    validate_general_position(drawing)?;
    Ok(count_unchecked(drawing))
}

pub(crate) fn count_unchecked(drawing: &GeometricDrawing) -> CrossingReport {
    let lattice = &drawing.lattice;
    CrossingReport::from_predicate(drawing.graph.edges(), |e, f| lattice.cross(e, f))
}

/// Total crossings only, for hot loops over small integer drawings in general position.
pub(crate) fn total_crossings_small(edges: &[Edge], pts: &[(i64, i64)]) -> u64 {
    let orient = |i: usize, j: usize, k: usize| -> i128 {
        let (px, py) = (pts[i].0 as i128, pts[i].1 as i128);
        ((pts[j].0 as i128 - px) * (pts[k].1 as i128 - py)
            - (pts[j].1 as i128 - py) * (pts[k].0 as i128 - px))
            .signum()
    };
    let mut total = 0;
    for (i, &(a, b)) in edges.iter().enumerate() {
        for &(c, d) in &edges[i + 1..] {
            if a == c || a == d || b == c || b == d {
                continue;
            }
            if orient(a, b, c) != orient(a, b, d) && orient(c, d, a) != orient(c, d, b) {
                total += 1;
            }
        }
    }
    total
}
