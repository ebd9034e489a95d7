//! Tropical plane curves given explicitly as weighted rectilinear graphs
//! with exact rational vertex coordinates.
//!
//! ```
//! use floorcount::tropical::TropicalCurve;
//!
//! let line = TropicalCurve::parse_json(r#"{
//!   "vertices": [{"id": "s", "x": "0", "y": "0"}],
//!   "edges": [
//!     {"kind": "unbounded", "v": "s", "dir": [-1, 0], "weight": 1},
//!     {"kind": "unbounded", "v": "s", "dir": [0, -1], "weight": 1},
//!     {"kind": "unbounded", "v": "s", "dir": [1, 1], "weight": 1}
//!   ]
//! }"#).unwrap();
//! assert!(line.validate().is_valid());
//! assert_eq!(line.degree().unwrap(), 1);
//! assert_eq!(line.genus().unwrap(), 0);
//! ```

mod floors;
mod geometry;
mod json;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::formulas::genus_max;
use crate::report::ValidationReport;

pub use floors::{Elevator, ElevatorEnd, FloorDecomposition, TropicalFloor};
pub use json::{format_rational, parse_rational, CurveEdgeJson, CurveJson, CurveVertexJson};

/// Integer direction vector.
pub type Direction = (i64, i64);

pub const LEFT: Direction = (-1, 0);
pub const DOWN: Direction = (0, -1);
pub const DIAGONAL: Direction = (1, 1);

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TropicalError {
    #[error("invalid tropical curve: {0}")]
    Invalid(ValidationReport),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("vertex `{vertex}` is not adjacent to edge {edge}")]
    NotAdjacent { vertex: String, edge: EdgeRef },
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("curve has no degree: {0}")]
    NoDegree(String),
    #[error("curve is not nodal: {0}")]
    NotNodal(String),
    #[error("vertex `{0}` is not trivalent")]
    NotTrivalent(String),
    #[error("genus is undefined: {0}")]
    Genus(String),
    #[error("no floor decomposition: {0}")]
    Decomposition(String),
    #[error("coordinate overflow: {0}")]
    Overflow(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vertex {
    pub id: String,
    pub x: BigRational,
    pub y: BigRational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundedEdge {
    pub v1: usize,
    pub v2: usize,
    pub weight: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnboundedEdge {
    pub vertex: usize,
    pub direction: Direction,
    pub weight: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeRef {
    Bounded(usize),
    Unbounded(usize),
}

impl std::fmt::Display for EdgeRef {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            EdgeRef::Bounded(i) => write!(f, "b{i}"),
            EdgeRef::Unbounded(i) => write!(f, "u{i}"),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TropicalCurve {
    pub vertices: Vec<Vertex>,
    pub bounded: Vec<BoundedEdge>,
    pub unbounded: Vec<UnboundedEdge>,
}

pub fn is_primitive(v: Direction) -> bool {
    v != (0, 0) && v.0.unsigned_abs().gcd(&v.1.unsigned_abs()) == 1
}

pub fn is_vertical(v: Direction) -> bool {
    v.0 == 0 && v.1 != 0
}

fn det(a: Direction, b: Direction) -> i128 {
    a.0 as i128 * b.1 as i128 - a.1 as i128 * b.0 as i128
}

impl TropicalCurve {
    pub fn vertex_index(&self, id: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v.id == id)
    }

    pub fn edge_count(&self) -> usize {
        self.bounded.len() + self.unbounded.len()
    }

    pub fn edge_refs(&self) -> impl Iterator<Item = EdgeRef> + '_ {
        (0..self.bounded.len())
            .map(EdgeRef::Bounded)
            .chain((0..self.unbounded.len()).map(EdgeRef::Unbounded))
    }

    pub fn weight(&self, edge: EdgeRef) -> u32 {
        match edge {
            EdgeRef::Bounded(i) => self.bounded[i].weight,
            EdgeRef::Unbounded(i) => self.unbounded[i].weight,
        }
    }

    /// Edges adjacent to vertex `v`, bounded edges first.
    pub fn edges_at(&self, v: usize) -> Vec<EdgeRef> {
        let bounded = self
            .bounded
            .iter()
            .enumerate()
            .filter(|(_, e)| e.v1 == v || e.v2 == v)
            .map(|(i, _)| EdgeRef::Bounded(i));
        let unbounded = self
            .unbounded
            .iter()
            .enumerate()
            .filter(|(_, e)| e.vertex == v)
            .map(|(i, _)| EdgeRef::Unbounded(i));
        bounded.chain(unbounded).collect()
    }

    pub fn valence(&self, v: usize) -> usize {
        self.edges_at(v).len()
    }

    /// Structural invariants: ids, endpoints, weights, primitive directions,
    /// valence at least 3, and edges meeting only at shared vertices.
    pub fn validate_structure(&self) -> ValidationReport {
        let mut report = ValidationReport::new();
        let n = self.vertices.len();
        if n == 0 {
            report.push("vertices", "a curve needs at least one vertex");
        }
        for (i, v) in self.vertices.iter().enumerate() {
            if self.vertices[..i].iter().any(|w| w.id == v.id) {
                report.push("vertex-ids", format!("duplicate vertex id `{}`", v.id));
            }
            if self.vertices[..i].iter().any(|w| w.x == v.x && w.y == v.y) {
                report.push(
                    "distinct-positions",
                    format!("vertex `{}` repeats the position ({}, {})", v.id, v.x, v.y),
                );
            }
        }
        let mut endpoints_ok = true;
        for (i, e) in self.bounded.iter().enumerate() {
            if e.v1 >= n || e.v2 >= n {
                report.push("edge-endpoints", format!("bounded edge b{i} has an unknown endpoint"));
                endpoints_ok = false;
            } else if e.v1 == e.v2 {
                report.push("distinct-endpoints", format!("bounded edge b{i} is a loop"));
                endpoints_ok = false;
            }
            if e.weight == 0 {
                report.push("positive-weights", format!("bounded edge b{i} has weight 0"));
            }
        }
        for (i, e) in self.unbounded.iter().enumerate() {
            if e.vertex >= n {
                report.push("edge-endpoints", format!("unbounded edge u{i} has an unknown vertex"));
                endpoints_ok = false;
            }
            if e.weight == 0 {
                report.push("positive-weights", format!("unbounded edge u{i} has weight 0"));
            }
            if !is_primitive(e.direction) {
                report.push(
                    "primitive-directions",
                    format!("unbounded edge u{i} has direction {:?}", e.direction),
                );
                endpoints_ok = false;
            }
        }
        if !endpoints_ok {
            return report;
        }
        for v in 0..n {
            let k = self.valence(v);
            if k < 3 {
                report.push(
                    "valence",
                    format!("vertex `{}` has {k} edges, at least 3 are needed", self.vertices[v].id),
                );
            }
        }
        if !report.violates("distinct-positions") {
            report.extend(geometry::check_intersections(self));
        }
        report
    }

    /// Structure, then balancing, then the vertex bound when a degree exists.
    pub fn validate(&self) -> ValidationReport {
        let report = self.validate_structure();
        if !report.is_valid() {
            return report;
        }
        let mut report = self.check_balancing();
        if report.is_valid() {
            if let Ok(d) = self.degree() {
                if self.vertices.len() as u64 > d as u64 * d as u64 {
                    report.push(
                        "vertex-bound",
                        format!(
                            "{} vertices, a degree {d} curve has at most {}",
                            self.vertices.len(),
                            d * d
                        ),
                    );
                }
            }
        }
        report
    }

    fn ensure_structure(&self) -> Result<(), TropicalError> {
        let report = self.validate_structure();
        if report.is_valid() {
            Ok(())
        } else {
            Err(TropicalError::Invalid(report))
        }
    }

    /// Primitive integer vector leaving vertex `v` along `edge`.
    pub fn primitive_outgoing(&self, v: usize, edge: EdgeRef) -> Result<Direction, TropicalError> {
        let not_adjacent = || TropicalError::NotAdjacent {
            vertex: self
                .vertices
                .get(v)
                .map_or_else(|| format!("#{v}"), |x| x.id.clone()),
            edge,
        };
        match edge {
            EdgeRef::Bounded(i) => {
                let e = self.bounded.get(i).ok_or_else(not_adjacent)?;
                let other = if e.v1 == v {
                    e.v2
                } else if e.v2 == v {
                    e.v1
                } else {
                    return Err(not_adjacent());
                };
                let (a, b) = (&self.vertices[v], &self.vertices[other]);
                primitive_of(&(&b.x - &a.x), &(&b.y - &a.y))
            }
            EdgeRef::Unbounded(i) => {
                let e = self.unbounded.get(i).ok_or_else(not_adjacent)?;
                if e.vertex != v {
                    return Err(not_adjacent());
                }
                Ok(e.direction)
            }
        }
    }

    /// `(edge, weight, primitive outgoing vector)` for each edge at `v`.
    fn star(&self, v: usize) -> Result<Vec<(EdgeRef, u32, Direction)>, TropicalError> {
        self.edges_at(v)
            .into_iter()
            .map(|e| Ok((e, self.weight(e), self.primitive_outgoing(v, e)?)))
            .collect()
    }

    /// Weighted primitive outgoing vectors sum to zero at every vertex.
    pub fn check_balancing(&self) -> ValidationReport {
        let report = self.validate_structure();
        if !report.is_valid() {
            return report;
        }
        let mut report = ValidationReport::new();
        for v in 0..self.vertices.len() {
            match self.star(v) {
                Ok(star) => {
                    let (sx, sy) = star.iter().fold((0i128, 0i128), |(x, y), &(_, w, d)| {
                        (x + w as i128 * d.0 as i128, y + w as i128 * d.1 as i128)
                    });
                    if (sx, sy) != (0, 0) {
                        report.push(
                            "balancing",
                            format!(
                                "at vertex `{}` the weighted sum is ({sx}, {sy})",
                                self.vertices[v].id
                            ),
                        );
                    }
                }
                Err(e) => report.push("balancing", e.to_string()),
            }
        }
        report
    }

    pub fn is_balanced(&self) -> bool {
        self.check_balancing().is_valid()
    }

    fn ensure_balanced(&self) -> Result<(), TropicalError> {
        let report = self.check_balancing();
        if report.is_valid() {
            Ok(())
        } else {
            Err(TropicalError::Invalid(report))
        }
    }

    /// `d` when the ends in directions `(-1,0)`, `(0,-1)` and `(1,1)` each
    /// have total weight `d` and there are no other ends.
    pub fn degree(&self) -> Result<u32, TropicalError> {
        self.ensure_balanced()?;
        let mut totals = [0u64; 3];
        for e in &self.unbounded {
            let slot = match e.direction {
                LEFT => 0,
                DOWN => 1,
                DIAGONAL => 2,
                other => {
                    return Err(TropicalError::NoDegree(format!(
                        "end of direction {other:?}"
                    )))
                }
            };
            totals[slot] += e.weight as u64;
        }
        if totals[0] != totals[1] || totals[1] != totals[2] {
            return Err(TropicalError::NoDegree(format!(
                "end weights {}, {}, {} in directions (-1,0), (0,-1), (1,1) differ",
                totals[0], totals[1], totals[2]
            )));
        }
        if totals[0] == 0 {
            return Err(TropicalError::NoDegree("no ends".into()));
        }
        u32::try_from(totals[0]).map_err(|_| TropicalError::Overflow("degree".into()))
    }

    /// Every end has weight 1 and every vertex is trivalent, or quadrivalent
    /// made of two opposite pairs of equal weight.
    pub fn check_nodal(&self) -> bool {
        self.nodal_violation().is_none()
    }

    fn nodal_violation(&self) -> Option<String> {
        if !self.validate_structure().is_valid() {
            return Some("structurally invalid".into());
        }
        if let Some(e) = self.unbounded.iter().find(|e| e.weight != 1) {
            return Some(format!(
                "end at `{}` has weight {}",
                self.vertices[e.vertex].id, e.weight
            ));
        }
        for v in 0..self.vertices.len() {
            let id = &self.vertices[v].id;
            let Ok(star) = self.star(v) else {
                return Some(format!("vertex `{id}` has a degenerate edge"));
            };
            match star.len() {
                3 => {}
                4 if crossing_branches(&star).is_some() => {}
                4 => return Some(format!("quadrivalent vertex `{id}` is not a crossing")),
                k => return Some(format!("vertex `{id}` has {k} edges")),
            }
        }
        None
    }

    fn ensure_nodal(&self) -> Result<(), TropicalError> {
        self.ensure_balanced()?;
        match self.nodal_violation() {
            None => Ok(()),
            Some(why) => Err(TropicalError::NotNodal(why)),
        }
    }

    pub fn trivalent_count(&self) -> usize {
        (0..self.vertices.len()).filter(|&v| self.valence(v) == 3).count()
    }

    /// `(sigma - 3d + 2) / 2` with `sigma` the number of trivalent
    /// vertices, for a connected nodal curve with a degree. Connectivity is
    /// tested with crossings separated into their two branches.
    pub fn genus(&self) -> Result<u32, TropicalError> {
        self.ensure_nodal()?;
        let d = self.degree()?;
        let branches = floors::Branches::new(self)?;
        if !branches.is_connected(self) {
            return Err(TropicalError::Genus(
                "the curve is not connected once crossings are separated".into(),
            ));
        }
        let twice = self.trivalent_count() as i64 - 3 * d as i64 + 2;
        if twice < 0 || twice % 2 != 0 {
            return Err(TropicalError::Genus(format!(
                "{} trivalent vertices do not give a genus in degree {d}",
                self.trivalent_count()
            )));
        }
        let g = (twice / 2) as u32;
        if g > genus_max(d) {
            return Err(TropicalError::Genus(format!(
                "genus {g} exceeds {} for degree {d}",
                genus_max(d)
            )));
        }
        Ok(g)
    }

    /// `w1 * w2 * |det(v1, v2)|` for any two edges at a trivalent vertex.
    /// All three choices are computed and must agree.
    pub fn vertex_multiplicity(&self, v: usize) -> Result<BigUint, TropicalError> {
        self.ensure_structure()?;
        let star = self.star(v)?;
        let id = || self.vertices[v].id.clone();
        if star.len() != 3 {
            return Err(TropicalError::NotTrivalent(id()));
        }
        let pair = |i: usize, j: usize| {
            let (_, wi, di) = star[i];
            let (_, wj, dj) = star[j];
            BigUint::from(wi) * BigUint::from(wj) * BigUint::from(det(di, dj).unsigned_abs())
        };
        let values = [pair(0, 1), pair(0, 2), pair(1, 2)];
        if values[0] != values[1] || values[1] != values[2] {
            return Err(TropicalError::Invalid({
                let mut r = ValidationReport::new();
                r.push(
                    "balancing",
                    format!("edge pairs at `{}` give multiplicities {values:?}", id()),
                );
                r
            }));
        }
        let [m, ..] = values;
        Ok(m)
    }

    fn multiplicities(&self) -> Result<Vec<BigUint>, TropicalError> {
        self.ensure_nodal()?;
        (0..self.vertices.len())
            .filter(|&v| self.valence(v) == 3)
            .map(|v| self.vertex_multiplicity(v))
            .collect()
    }

    /// Product of the multiplicities of the trivalent vertices.
    pub fn complex_multiplicity(&self) -> Result<BigUint, TropicalError> {
        Ok(self.multiplicities()?.into_iter().product())
    }

    /// 0 when the complex multiplicity is even, otherwise `(-1)^o` with `o`
    /// the number of vertices of multiplicity 3 mod 4.
    pub fn real_multiplicity(&self) -> Result<i8, TropicalError> {
        let ms = self.multiplicities()?;
        let four = BigUint::from(4u32);
        if ms.iter().any(|m| m.is_even()) {
            return Ok(0);
        }
        let odd = ms.iter().filter(|m| *m % &four == BigUint::from(3u32)).count();
        Ok(if odd % 2 == 0 { 1 } else { -1 })
    }

    pub fn floor_decomposition(&self) -> Result<FloorDecomposition, TropicalError> {
        self.ensure_nodal()?;
        let d = self.degree()?;
        let g = self.genus()?;
        floors::decompose(self, d, g)
    }
}

/// For a quadrivalent star, the two opposite pairs of equal weight.
fn crossing_branches(star: &[(EdgeRef, u32, Direction)]) -> Option<[[usize; 2]; 2]> {
    if star.len() != 4 {
        return None;
    }
    let opposite = |i: usize, j: usize| {
        star[i].2 == (-star[j].2 .0, -star[j].2 .1) && star[i].1 == star[j].1
    };
    for (a, b, c, e) in [(0, 1, 2, 3), (0, 2, 1, 3), (0, 3, 1, 2)] {
        if opposite(a, b) && opposite(c, e) {
            return Some([[a, b], [c, e]]);
        }
    }
    None
}

fn primitive_of(dx: &BigRational, dy: &BigRational) -> Result<Direction, TropicalError> {
    if dx.is_zero() && dy.is_zero() {
        return Err(TropicalError::Invalid({
            let mut r = ValidationReport::new();
            r.push("distinct-endpoints", "edge of length zero");
            r
        }));
    }
    let scale = dx.denom().lcm(dy.denom());
    let x: BigInt = dx.numer() * (&scale / dx.denom());
    let y: BigInt = dy.numer() * (&scale / dy.denom());
    let g = x.gcd(&y);
    let to_i64 = |n: BigInt| {
        n.to_i64()
            .ok_or_else(|| TropicalError::Overflow(format!("direction component {n}")))
    };
    let (x, y) = (to_i64(&x / &g)?, to_i64(&y / &g)?);
    debug_assert!(g.is_positive());
    Ok((x, y))
}


#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    fn n(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn line_vectors() {
        let c = line();
        assert_eq!(c.primitive_outgoing(0, EdgeRef::Unbounded(0)).unwrap(), LEFT);
        assert_eq!(c.primitive_outgoing(0, EdgeRef::Unbounded(2)).unwrap(), DIAGONAL);
    }

    #[test]
    fn bounded_edge_vector_is_reduced() {
        let c = curve(&[("a", 0, 0), ("b", 2, 4)], &[("a", "b", 1)], &[]);
        assert_eq!(c.primitive_outgoing(0, EdgeRef::Bounded(0)).unwrap(), (1, 2));
        assert_eq!(c.primitive_outgoing(1, EdgeRef::Bounded(0)).unwrap(), (-1, -2));
        let mut c = c;
        c.vertices[1].x = BigRational::new(1.into(), 3.into());
        c.vertices[1].y = BigRational::new(1.into(), 2.into());
        assert_eq!(c.primitive_outgoing(0, EdgeRef::Bounded(0)).unwrap(), (2, 3));
    }

    #[test]
    fn non_adjacent_pair_is_an_error() {
        let c = conic();
        assert!(matches!(
            c.primitive_outgoing(0, EdgeRef::Bounded(1)),
            Err(TropicalError::NotAdjacent { .. })
        ));
        assert!(c.primitive_outgoing(0, EdgeRef::Unbounded(5)).is_err());
    }

    #[test]
    fn balancing() {
        assert!(line().check_balancing().is_valid());
        let mut heavy = line();
        heavy.unbounded[2].weight = 2;
        assert!(heavy.check_balancing().violates("balancing"));
        for c in [conic(), cubic_weighted(), cubic_crossing(), cubic_genus_one()] {
            assert!(c.validate().is_valid(), "{}", c.validate());
        }
    }

    #[test]
    fn unbalanced_graph_is_not_a_curve() {
        // Three ends that do not sum to zero.
        let c = curve(&[("s", 0, 0)], &[], &[("s", LEFT, 1), ("s", DOWN, 1), ("s", (1, 2), 1)]);
        assert!(c.validate_structure().is_valid());
        assert!(!c.validate().is_valid());
    }

    #[test]
    fn structural_checks() {
        let c = curve(&[("s", 0, 0)], &[], &[("s", LEFT, 1), ("s", DIAGONAL, 1)]);
        assert!(c.validate_structure().violates("valence"));
        let c = curve(&[("s", 0, 0)], &[], &[("s", (2, 2), 1), ("s", LEFT, 1), ("s", DOWN, 1)]);
        assert!(c.validate_structure().violates("primitive-directions"));
        let mut c = line();
        c.unbounded[0].weight = 0;
        assert!(c.validate_structure().violates("positive-weights"));
    }

    #[test]
    fn degree() {
        assert_eq!(line().degree().unwrap(), 1);
        assert_eq!(conic().degree().unwrap(), 2);
        assert_eq!(cubic_weighted().degree().unwrap(), 3);
        assert_eq!(cubic_genus_one().degree().unwrap(), 3);
        let up = curve(&[("s", 0, 0)], &[], &[("s", (0, 1), 1), ("s", (1, -1), 1), ("s", LEFT, 1)]);
        assert!(up.is_balanced());
        assert!(matches!(up.degree(), Err(TropicalError::NoDegree(_))));
        assert!(matches!(
            multiplicity_three().degree(),
            Err(TropicalError::NoDegree(_))
        ));
    }

    #[test]
    fn nodality() {
        assert!(line().check_nodal());
        let crossing = curve(
            &[("s", 0, 0)],
            &[],
            &[("s", LEFT, 1), ("s", (1, 0), 1), ("s", DOWN, 1), ("s", (0, 1), 1)],
        );
        assert!(crossing.is_balanced());
        assert!(crossing.check_nodal());
        let six = curve(
            &[("s", 0, 0)],
            &[],
            &[
                ("s", LEFT, 1),
                ("s", (1, 0), 1),
                ("s", DOWN, 1),
                ("s", (0, 1), 1),
                ("s", DIAGONAL, 1),
                ("s", (-1, -1), 1),
            ],
        );
        assert!(six.is_balanced());
        assert!(!six.check_nodal());
        let unequal = curve(
            &[("s", 0, 0)],
            &[],
            &[("s", LEFT, 1), ("s", (1, 0), 1), ("s", DOWN, 2), ("s", (0, 1), 2)],
        );
        assert!(!unequal.check_nodal());
        assert!(cubic_crossing().check_nodal());
    }

    #[test]
    fn genus() {
        assert_eq!(line().genus().unwrap(), 0);
        assert_eq!(conic().genus().unwrap(), 0);
        assert_eq!(cubic_weighted().genus().unwrap(), 0);
        assert_eq!(cubic_crossing().genus().unwrap(), 0);
        assert_eq!(cubic_genus_one().genus().unwrap(), 1);
        assert_eq!(cubic_weighted().trivalent_count(), 7);
    }

    #[test]
    fn two_crossing_lines_are_reducible() {
        let lines = curve(
            &[("p", 0, 0), ("q", 2, -1), ("x", 0, -1)],
            &[("p", "x", 1), ("x", "q", 1)],
            &[
                ("p", LEFT, 1),
                ("p", DIAGONAL, 1),
                ("x", DOWN, 1),
                ("x", LEFT, 1),
                ("q", DOWN, 1),
                ("q", DIAGONAL, 1),
            ],
        );
        assert!(lines.validate().is_valid(), "{}", lines.validate());
        assert!(lines.check_nodal());
        assert_eq!(lines.degree().unwrap(), 2);
        assert!(matches!(lines.genus(), Err(TropicalError::Genus(_))));
    }

    #[test]
    fn vertex_multiplicities() {
        assert_eq!(line().vertex_multiplicity(0).unwrap(), n(1));
        let c = curve(&[("s", 0, 0)], &[], &[("s", LEFT, 1), ("s", DOWN, 2), ("s", (1, 2), 1)]);
        assert_eq!(c.vertex_multiplicity(0).unwrap(), n(2));
        let crossing = cubic_crossing();
        let x = crossing.vertex_index("x").unwrap();
        assert!(matches!(
            crossing.vertex_multiplicity(x),
            Err(TropicalError::NotTrivalent(_))
        ));
    }

    #[test]
    fn curve_multiplicities() {
        assert_eq!(line().complex_multiplicity().unwrap(), n(1));
        assert_eq!(line().real_multiplicity().unwrap(), 1);
        assert_eq!(cubic_weighted().complex_multiplicity().unwrap(), n(4));
        assert_eq!(cubic_weighted().real_multiplicity().unwrap(), 0);
        assert_eq!(multiplicity_three().complex_multiplicity().unwrap(), n(3));
        assert_eq!(multiplicity_three().real_multiplicity().unwrap(), -1);
        assert_eq!(cubic_crossing().complex_multiplicity().unwrap(), n(1));
    }
}
