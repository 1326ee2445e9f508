//! Endvertex and edge types of a drawing, the accounting value `M`, and the
//! per-vertex coverage property used in the upper-bound argument.
//!
//! At an endpoint `v` of edge `vu`, the line through the edge splits the other
//! `d - 1` edges at `v` into two groups; the endvertex type is the smaller
//! group size, so it ranges over `0..=D` with `D = floor((d - 1) / 2)`. An edge
//! whose endpoint types are `i <= j` determines `i(d-j-1) + j(d-i-1)` pairs of
//! non-crossing edges at least; `M` sums that over the edges.

use std::collections::BTreeMap;

use crate::error::{arg_err, Error, Result};
use crate::geometry::{count_unchecked, validate_general_position, GeometricDrawing, Orientation};
use crate::graph::Edge;

/// Type of the endvertex `endpoint` of `edge`.
pub fn endvertex_type(drawing: &GeometricDrawing, edge: Edge, endpoint: usize) -> Result<usize> {
    let graph = drawing.graph();
    if !graph.has_edge(edge.0, edge.1) {
        return arg_err(format!("{edge:?} is not an edge of the drawing"));
    }
    let other = if endpoint == edge.0 {
        edge.1
    } else if endpoint == edge.1 {
        edge.0
    } else {
        return arg_err(format!("{endpoint} is not an endpoint of {edge:?}"));
    };
    let lattice = drawing.lattice();
    let (mut left, mut right) = (0usize, 0usize);
    for w in graph.neighbors(endpoint) {
        if w == other {
            continue;
        }
        match lattice.orient(endpoint, other, w) {
            Orientation::Left => left += 1,
            Orientation::Right => right += 1,
            Orientation::Collinear => {
                return Err(Error::Degeneracy(format!(
                    "edge {endpoint}-{w} is collinear with edge {endpoint}-{other}"
                )))
            }
        }
    }
    Ok(left.min(right))
}

/// Vertices sharing a minimum type `s` and a sorted type multiset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypeGroup {
    pub min_type: usize,
    /// Sorted endvertex types at each vertex of the group.
    pub signature: Vec<usize>,
    /// Number of vertices in the group (`p_{s,t}`).
    pub count: u64,
    /// Occurrences of each type `0..=D` in the signature (`z_{s,t,i}`).
    pub z: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypeProfile {
    pub n: usize,
    pub d: usize,
    /// `D = floor((d - 1) / 2)`.
    pub max_type: usize,
    /// `y[i]`: number of endvertices of type `i`.
    pub y: Vec<u64>,
    /// `x[i][j]` for `i <= j`: number of edges of type `(i, j)`; zero below the diagonal.
    pub x: Vec<Vec<u64>>,
    pub m: u64,
    /// Normalized `(min, max)` type of every edge, in edge-list order.
    pub edge_types: Vec<(usize, usize)>,
    /// Sorted endvertex types at each vertex.
    pub vertex_types: Vec<Vec<usize>>,
    pub groups: Vec<TypeGroup>,
}

impl TypeProfile {
    /// `y_i = 2 x_{i,i} + sum_{k<i} x_{k,i} + sum_{k>i} x_{i,k}` for every `i`.
    pub fn edge_identity_holds(&self) -> bool {
        (0..=self.max_type).all(|i| {
            let below: u64 = (0..i).map(|k| self.x[k][i]).sum();
            let above: u64 = (i + 1..=self.max_type).map(|k| self.x[i][k]).sum();
            self.y[i] == 2 * self.x[i][i] + below + above
        })
    }

    /// `sum p_{s,t} = n` and `sum_{i >= s} z_{s,t,i} = d` for every group.
    pub fn vertex_identities_hold(&self) -> bool {
        let total: u64 = self.groups.iter().map(|g| g.count).sum();
        total == self.n as u64
            && self
                .groups
                .iter()
                .all(|g| g.z[g.min_type..].iter().sum::<u64>() == self.d as u64)
    }

    pub fn endvertex_total(&self) -> u64 {
        self.y.iter().sum()
    }
}

fn require_degree(drawing: &GeometricDrawing) -> Result<usize> {
    let d = drawing.graph().d();
    if d == 0 {
        return arg_err("type statistics need a graph with at least one edge per vertex");
    }
    Ok(d)
}

pub fn type_profile(drawing: &GeometricDrawing) -> Result<TypeProfile> {
    let d = require_degree(drawing)?;
    validate_general_position(drawing)?;
    let graph = drawing.graph();
    let n = graph.n();
    let max_type = (d - 1) / 2;

    let mut y = vec![0u64; max_type + 1];
    let mut x = vec![vec![0u64; max_type + 1]; max_type + 1];
    let mut vertex_types = vec![Vec::with_capacity(d); n];
    let mut edge_types = Vec::with_capacity(graph.edge_count());
    let mut m = 0u64;
    for &(u, v) in graph.edges() {
        let tu = endvertex_type(drawing, (u, v), u)?;
        let tv = endvertex_type(drawing, (u, v), v)?;
        y[tu] += 1;
        y[tv] += 1;
        vertex_types[u].push(tu);
        vertex_types[v].push(tv);
        let (i, j) = (tu.min(tv), tu.max(tv));
        x[i][j] += 1;
        m += (i * (d - j - 1) + j * (d - i - 1)) as u64;
        edge_types.push((i, j));
    }
    for t in &mut vertex_types {
        t.sort_unstable();
    }

    let mut grouped: BTreeMap<(usize, Vec<usize>), u64> = BTreeMap::new();
    for t in &vertex_types {
        *grouped.entry((t[0], t.clone())).or_default() += 1;
    }
    let groups = grouped
        .into_iter()
        .map(|((min_type, signature), count)| {
            let mut z = vec![0u64; max_type + 1];
            for &i in &signature {
                z[i] += 1;
            }
            TypeGroup {
                min_type,
                signature,
                count,
                z,
            }
        })
        .collect();

    Ok(TypeProfile {
        n,
        d,
        max_type,
        y,
        x,
        m,
        edge_types,
        vertex_types,
        groups,
    })
}

/// Outcome of [`lemma_coverage_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoverageVerdict {
    Ok,
    Counterexample {
        vertex: usize,
        types: Vec<usize>,
        /// The type occurring fewer times than required.
        short_type: usize,
    },
}

impl CoverageVerdict {
    pub fn is_ok(&self) -> bool {
        matches!(self, CoverageVerdict::Ok)
    }
}

/// Every type from the vertex minimum up to `D` occurs at least twice at each
/// vertex, except that type `D` needs to occur only once when `d` is odd.
pub fn lemma_coverage_check(drawing: &GeometricDrawing) -> Result<CoverageVerdict> {
    let profile = type_profile(drawing)?;
    Ok(coverage_of(&profile))
}

pub fn coverage_of(profile: &TypeProfile) -> CoverageVerdict {
    let big_d = profile.max_type;
    for (vertex, types) in profile.vertex_types.iter().enumerate() {
        let s = types[0];
        for i in s..=big_d {
            let need = if i == big_d && profile.d % 2 == 1 {
                1
            } else {
                2
            };
            let have = types.iter().filter(|&&t| t == i).count();
            if have < need {
                return CoverageVerdict::Counterexample {
                    vertex,
                    types: types.clone(),
                    short_type: i,
                };
            }
        }
    }
    CoverageVerdict::Ok
}

/// Measured non-crossing pairs against the type accounting.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Accounting {
    /// Non-adjacent pairs that do not cross (`N`).
    pub non_crossing: u64,
    /// Type accounting value (`M`).
    pub m: u64,
    /// All non-adjacent pairs (`P`).
    pub pairs: u64,
    pub crossings: u64,
}

impl Accounting {
    /// `crossings = P - N`.
    pub fn crossing_identity_holds(&self) -> bool {
        self.crossings + self.non_crossing == self.pairs
    }

    /// `N >= M / 2`: each determined pair is charged to at most two edges.
    pub fn half_accounting_holds(&self) -> bool {
        2 * self.non_crossing >= self.m
    }
}

pub fn noncrossing_accounting(drawing: &GeometricDrawing) -> Result<Accounting> {
    let profile = type_profile(drawing)?;
    let report = count_unchecked(drawing);
    Ok(Accounting {
        non_crossing: report.non_crossing,
        m: profile.m,
        pairs: report.nonadjacent_pairs,
        crossings: report.total,
    })
}
