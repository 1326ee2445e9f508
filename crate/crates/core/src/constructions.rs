//! The extremal drawings: generalized stars, star-like even drawings, and
//! convex drawings given by a cyclic vertex order.
//!
//! Every convex drawing here places position `p` at `(p, p^2)`. Points on a
//! parabola are in convex position and in general position, and their hull
//! order is the x-order, so "diagonal of cyclic length `l`" is simply the
//! chord `{i, i + l mod n}`.

use std::fmt;

use num_integer::gcd;

use crate::error::{arg_err, Error, Result};
use crate::geometry::{CrossingReport, GeometricDrawing, Point};
use crate::graph::{cyclic_length, Edge, RegularGraph};

/// Clockwise placement of the vertices on a convex polygon: `order[p]` is the
/// vertex at position `p`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ConvexOrder {
    order: Vec<usize>,
}

impl ConvexOrder {
    pub fn new(order: Vec<usize>) -> Result<Self> {
        let n = order.len();
        if n < 3 {
            return arg_err("a convex order needs at least 3 vertices");
        }
        let mut seen = vec![false; n];
        for &v in &order {
            if v >= n || seen[v] {
                return arg_err(format!("{order:?} is not a permutation of 0..{n}"));
            }
            seen[v] = true;
        }
        Ok(ConvexOrder { order })
    }

    pub fn identity(n: usize) -> Result<Self> {
        ConvexOrder::new((0..n).collect())
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// Position of each vertex on the polygon.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.order.len()];
        for (p, &v) in self.order.iter().enumerate() {
            pos[v] = p;
        }
        pos
    }

    /// Representative of the dihedral class: `order[0] = 0` and `order[1] < order[n-1]`.
    pub fn canonical(&self) -> ConvexOrder {
        let n = self.order.len();
        let start = self.order.iter().position(|&v| v == 0).unwrap_or(0);
        let mut rotated: Vec<usize> = (0..n).map(|i| self.order[(start + i) % n]).collect();
        if rotated[1] > rotated[n - 1] {
            rotated[1..].reverse();
        }
        ConvexOrder { order: rotated }
    }
}

/// Parameters shared by both star constructions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ConstructionParams {
    pub n: usize,
    pub d: usize,
    /// Shortest diagonal length kept in the underlying generalized star.
    pub k: usize,
    /// `gcd(n, k)`: the length-`k` diagonals split into `g` cycles of order `n / g`.
    pub g: usize,
}

impl ConstructionParams {
    /// Parameters for `n + d` odd: `k = (n - d + 1) / 2`.
    pub fn odd(n: usize, d: usize) -> Result<Self> {
        check_degree(n, d)?;
        if (n + d).is_multiple_of(2) {
            return arg_err(format!(
                "generalized star needs n + d odd, got n = {n}, d = {d}"
            ));
        }
        let k = (n - d).div_ceil(2);
        Ok(ConstructionParams {
            n,
            d,
            k,
            g: gcd(n, k),
        })
    }

    /// Parameters for `n`, `d` both even: `k = (n - d) / 2`.
    pub fn even(n: usize, d: usize) -> Result<Self> {
        check_degree(n, d)?;
        if n % 2 == 1 || d % 2 == 1 {
            return arg_err(format!(
                "star-like drawing needs n and d even, got n = {n}, d = {d}"
            ));
        }
        if d > n - 2 {
            return arg_err(format!(
                "star-like drawing needs d <= n - 2, got n = {n}, d = {d}"
            ));
        }
        let k = (n - d) / 2;
        Ok(ConstructionParams {
            n,
            d,
            k,
            g: gcd(n, k),
        })
    }

    pub fn gcd_case(&self) -> GcdCase {
        if (self.n / self.g).is_multiple_of(2) {
            GcdCase::Even
        } else {
            GcdCase::Odd
        }
    }
}

fn check_degree(n: usize, d: usize) -> Result<()> {
    if n < 3 || d < 2 || d > n - 1 {
        return arg_err(format!(
            "need n >= 3 and 2 <= d <= n - 1, got n = {n}, d = {d}"
        ));
    }
    Ok(())
}

/// Parity of the cycle order `n / gcd(n, k)` in the star-like construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GcdCase {
    Even,
    Odd,
}

impl fmt::Display for GcdCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GcdCase::Even => "even",
            GcdCase::Odd => "odd",
        })
    }
}

/// The points `(i, i^2)` for `i = 0..n`.
pub fn convex_points(n: usize) -> Result<Vec<Point>> {
    if n < 3 {
        return arg_err(format!("need at least 3 points, got {n}"));
    }
    Ok((0..n as i64).map(|i| Point::from_ints(i, i * i)).collect())
}

fn parabola_lattice(n: usize) -> Vec<(i64, i64)> {
    (0..n as i64).map(|i| (i, i * i)).collect()
}

/// `graph` drawn with vertex `v` at parabola position `order.positions()[v]`.
pub fn convex_drawing(graph: &RegularGraph, order: &ConvexOrder) -> Result<GeometricDrawing> {
    if order.len() != graph.n() {
        return arg_err("convex order and graph have different orders");
    }
    let pos = order.positions();
    let pts = pos.iter().map(|&p| (p as i64, (p * p) as i64)).collect();
    Ok(GeometricDrawing::from_lattice_points(graph.clone(), pts))
}

/// All chords of the convex `n`-gon whose cyclic length lies in `lengths`.
pub fn convex_diagonals(
    n: usize,
    lengths: std::ops::RangeInclusive<usize>,
) -> Result<GeometricDrawing> {
    if n < 3 {
        return arg_err(format!("need at least 3 vertices, got {n}"));
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if lengths.contains(&cyclic_length(n, u, v)) {
                edges.push((u, v));
            }
        }
    }
    let graph = RegularGraph::from_edges(n, edges)?;
    Ok(GeometricDrawing::from_lattice_points(
        graph,
        parabola_lattice(n),
    ))
}

/// Convex `K_n` with every diagonal of length `1..k-1` removed, for `n + d` odd.
pub fn generalized_star(n: usize, d: usize) -> Result<GeometricDrawing> {
    let params = ConstructionParams::odd(n, d)?;
    let drawing = convex_diagonals(n, params.k..=n / 2)?;
    if drawing.graph().d() != d {
        return Err(Error::Construction(format!(
            "generalized star for ({n}, {d}) came out {}-regular",
            drawing.graph().d()
        )));
    }
    Ok(drawing)
}

/// A star-like even drawing together with the edges removed from the
/// degree-`d + 1` generalized star to obtain it.
#[derive(Clone, Debug)]
pub struct StarLike {
    pub params: ConstructionParams,
    pub case: GcdCase,
    pub drawing: GeometricDrawing,
    /// Removed edges, sorted; exactly one per vertex.
    pub removed: Vec<Edge>,
}

/// Vertices of the length-`k` cycle through `start`, in cycle order.
fn diagonal_cycle(n: usize, k: usize, start: usize) -> Vec<usize> {
    let len = n / gcd(n, k);
    (0..len).map(|j| (start + j * k) % n).collect()
}

fn norm(u: usize, v: usize) -> Edge {
    (u.min(v), u.max(v))
}

/// Builds the star-like drawing for `n`, `d` even and records what was deleted.
///
/// Starting from the generalized star of degree `d + 1`, a perfect matching is
/// removed. When the length-`k` cycles have even order every second cycle
/// edge goes. When they have odd order, cycles `r` and `r + 1` (`r` even) are
/// paired through the length-`(k + 1)` diagonal `{r, r + k + 1}`; that diagonal
/// goes, and on each of the two cycles the path left after dropping its
/// endpoint loses its first, third, fifth... edge.
pub fn star_like_construction(n: usize, d: usize) -> Result<StarLike> {
    let params = ConstructionParams::even(n, d)?;
    let ConstructionParams { k, g, .. } = params;
    let base = generalized_star(n, d + 1)?;
    let case = params.gcd_case();

    let mut removed: Vec<Edge> = Vec::with_capacity(n / 2);
    match case {
        GcdCase::Even => {
            for r in 0..g {
                let cyc = diagonal_cycle(n, k, r);
                for j in (0..cyc.len()).step_by(2) {
                    removed.push(norm(cyc[j], cyc[(j + 1) % cyc.len()]));
                }
            }
        }
        GcdCase::Odd => {
            for r in (0..g).step_by(2) {
                let far = (r + k + 1) % n;
                removed.push(norm(r, far));
                for anchor in [r, far] {
                    let cyc = diagonal_cycle(n, k, anchor);
                    // path cyc[1] .. cyc[len-1] has an even number of vertices
                    for j in (1..cyc.len() - 1).step_by(2) {
                        removed.push(norm(cyc[j], cyc[j + 1]));
                    }
                }
            }
        }
    }
    removed.sort_unstable();

    let base_graph = base.graph();
    if let Some(e) = removed.iter().find(|e| !base_graph.has_edge(e.0, e.1)) {
        return Err(Error::Construction(format!(
            "edge {e:?} scheduled for removal is not in the generalized star"
        )));
    }
    let kept: Vec<Edge> = base_graph
        .edges()
        .iter()
        .copied()
        .filter(|e| removed.binary_search(e).is_err())
        .collect();
    let graph = RegularGraph::from_edges(n, kept)
        .map_err(|e| Error::Construction(format!("star-like result is not regular: {e}")))?;
    if graph.d() != d || removed.len() != n / 2 {
        return Err(Error::Construction(format!(
            "star-like result for ({n}, {d}) is {}-regular after removing {} edges",
            graph.d(),
            removed.len()
        )));
    }
    let drawing = base.with_graph(graph)?;
    Ok(StarLike {
        params,
        case,
        drawing,
        removed,
    })
}

/// The star-like drawing of a `d`-regular graph for `n`, `d` both even.
pub fn star_like_even(n: usize, d: usize) -> Result<GeometricDrawing> {
    Ok(star_like_construction(n, d)?.drawing)
}

/// Crossing report of `graph` on a convex polygon, from chord interleaving alone.
///
/// `{a, b}` and `{c, d}` with four distinct endpoints cross exactly when one of
/// `c`, `d` lies strictly inside the cyclic arc from `a` to `b`.
pub fn crossings_convex(graph: &RegularGraph, order: &ConvexOrder) -> Result<CrossingReport> {
    if order.len() != graph.n() {
        return arg_err("convex order and graph have different orders");
    }
    let pos = order.positions();
    Ok(CrossingReport::from_predicate(
        graph.edges(),
        |(a, b), (c, d)| chords_interleave(pos[a], pos[b], pos[c], pos[d]),
    ))
}

/// Chords `{a, b}` and `{c, d}` of a circle, four distinct positions.
pub(crate) fn chords_interleave(a: usize, b: usize, c: usize, d: usize) -> bool {
    let (lo, hi) = (a.min(b), a.max(b));
    let inside = |x: usize| lo < x && x < hi;
    inside(c) != inside(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{count_crossings_geometric, validate_general_position};
    use crate::graph::{make_complete, make_cycle};

    #[test]
    fn convex_points_are_parabola() {
        assert_eq!(
            convex_points(3).unwrap(),
            vec![
                Point::from_ints(0, 0),
                Point::from_ints(1, 1),
                Point::from_ints(2, 4)
            ]
        );
        assert!(convex_points(2).is_err());
        for n in 3..20 {
            let d =
                GeometricDrawing::new(make_cycle(n).unwrap(), convex_points(n).unwrap()).unwrap();
            assert!(validate_general_position(&d).is_ok());
        }
    }

    #[test]
    fn canonical_order() {
        let o = ConvexOrder::new(vec![3, 1, 0, 2, 4]).unwrap().canonical();
        assert_eq!(o.as_slice(), &[0, 1, 3, 4, 2]);
        let o = ConvexOrder::new(vec![2, 0, 4, 1, 3]).unwrap().canonical();
        assert_eq!(o.as_slice(), &[0, 2, 3, 1, 4]);
        assert!(ConvexOrder::new(vec![0, 0, 1]).is_err());
        assert!(ConvexOrder::new(vec![0, 1, 3]).is_err());
    }

    #[test]
    fn convex_counts() {
        let c5 = make_cycle(5).unwrap();
        assert_eq!(
            crossings_convex(&c5, &ConvexOrder::identity(5).unwrap())
                .unwrap()
                .total,
            0
        );
        let pentagram = ConvexOrder::new(vec![0, 2, 4, 1, 3]).unwrap();
        assert_eq!(crossings_convex(&c5, &pentagram).unwrap().total, 5);
        let k4 = make_complete(4).unwrap();
        for order in [vec![0, 1, 2, 3], vec![1, 3, 0, 2], vec![3, 2, 0, 1]] {
            let o = ConvexOrder::new(order).unwrap();
            assert_eq!(crossings_convex(&k4, &o).unwrap().total, 1);
        }
    }

    #[test]
    fn star_examples() {
        let s = generalized_star(10, 7).unwrap();
        assert_eq!(s.graph().edge_count(), 35);
        assert_eq!(count_crossings_geometric(&s).unwrap().total, 210);
        assert_eq!(
            count_crossings_geometric(&generalized_star(5, 2).unwrap())
                .unwrap()
                .total,
            5
        );
        assert_eq!(
            count_crossings_geometric(&generalized_star(6, 5).unwrap())
                .unwrap()
                .total,
            15
        );
        assert!(generalized_star(6, 4).is_err());
        assert!(generalized_star(5, 5).is_err());
    }

    #[test]
    fn star_like_examples() {
        let s = star_like_construction(8, 4).unwrap();
        assert_eq!(s.case, GcdCase::Even);
        assert_eq!(s.removed.len(), 4);
        assert_eq!(count_crossings_geometric(&s.drawing).unwrap().total, 52);

        let s = star_like_construction(10, 6).unwrap();
        assert_eq!(s.case, GcdCase::Odd);
        assert_eq!(count_crossings_geometric(&s.drawing).unwrap().total, 173);

        assert_eq!(
            count_crossings_geometric(&star_like_even(8, 2).unwrap())
                .unwrap()
                .total,
            18
        );
        assert!(star_like_even(9, 4).is_err());
        assert!(star_like_even(8, 3).is_err());
        assert!(star_like_even(8, 7).is_err());
    }

    #[test]
    fn odd_case_removes_joining_diagonal() {
        // (10, 6): k = 2, g = 2, two 5-cycles joined by {0, 3}
        let s = star_like_construction(10, 6).unwrap();
        assert!(s.removed.contains(&(0, 3)));
        assert_eq!(s.removed.len(), 5);
        let k_plus_one = s
            .removed
            .iter()
            .filter(|&&(u, v)| cyclic_length(10, u, v) == 3)
            .count();
        assert_eq!(k_plus_one, 1);
    }
}
