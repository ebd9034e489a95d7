//! Floor diagrams: weighted acyclic oriented graphs with `d` floors,
//! `d - 1 + g` bounded edges and `d` unbounded edges of weight 1.
//!
//! Unbounded edges point *into* their floor. Every floor has divergence 1:
//! incoming weight (unbounded edges included) minus outgoing weight.

mod iso;
mod json;

use std::collections::HashSet;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::poset::{Poset, PosetError};
use crate::report::ValidationReport;

pub use iso::{isomorphic, marked_isomorphic, CanonicalKey};
pub use json::{DiagramJson, EdgeJson, VertexJson};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiagramError {
    #[error("invalid floor diagram: {0}")]
    Invalid(ValidationReport),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error(transparent)]
    Poset(#[from] PosetError),
    #[error("invalid marking: {0}")]
    InvalidMarking(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

/// A floor, with the number of unbounded edges that end on it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Floor {
    pub id: String,
    pub unbounded: u32,
}

/// A bounded edge between floors, by index into [`FloorDiagram::floors`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub source: usize,
    pub target: usize,
    pub weight: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FloorDiagram {
    pub degree: u32,
    pub genus: u32,
    pub floors: Vec<Floor>,
    pub edges: Vec<Edge>,
}

/// One element of a diagram's poset: a floor, a bounded edge, or one of
/// the unbounded edges ending on a floor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Element {
    Floor(usize),
    Edge(usize),
    Unbounded { floor: usize, slot: u32 },
}

/// The partial order on floors and edges induced by orientation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElementPoset {
    pub elements: Vec<Element>,
    pub order: Poset,
}

impl ElementPoset {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index_of(&self, element: Element) -> Option<usize> {
        self.elements.iter().position(|&e| e == element)
    }

    pub fn count_linear_extensions(&self) -> BigUint {
        self.order.count_linear_extensions()
    }
}

/// A marking, listed as the element receiving label 1, then label 2, etc.
/// Indices refer to [`ElementPoset::elements`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Marking(pub Vec<usize>);

impl FloorDiagram {
    /// Builds a diagram with floors named `v1..vd` from per-floor unbounded
    /// counts and `(source, target, weight)` triples. Degree is the total
    /// unbounded count; genus is derived from the edge count (saturating).
    pub fn from_parts(unbounded: &[u32], edges: &[(usize, usize, u32)]) -> Self {
        let degree: u32 = unbounded.iter().sum();
        let genus = (edges.len() as i64 + 1 - degree as i64).max(0) as u32;
        FloorDiagram {
            degree,
            genus,
            floors: unbounded
                .iter()
                .enumerate()
                .map(|(i, &u)| Floor {
                    id: format!("v{}", i + 1),
                    unbounded: u,
                })
                .collect(),
            edges: edges
                .iter()
                .map(|&(source, target, weight)| Edge {
                    source,
                    target,
                    weight,
                })
                .collect(),
        }
    }

    pub fn floor_index(&self, id: &str) -> Option<usize> {
        self.floors.iter().position(|f| f.id == id)
    }

    /// Checks every floor-diagram invariant and records each violation.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::new();
        let d = self.floors.len();

        if self.degree == 0 {
            report.push("degree", "degree must be at least 1");
        }
        if d != self.degree as usize {
            report.push(
                "vertex-count",
                format!("{d} floors for degree {}", self.degree),
            );
        }
        let expected_edges = self.degree as i64 - 1 + self.genus as i64;
        if self.edges.len() as i64 != expected_edges {
            report.push(
                "bounded-edge-count",
                format!(
                    "{} bounded edges, expected d - 1 + g = {expected_edges}",
                    self.edges.len()
                ),
            );
        }
        let unbounded: u64 = self.floors.iter().map(|f| f.unbounded as u64).sum();
        if unbounded != self.degree as u64 {
            report.push(
                "unbounded-edge-count",
                format!("{unbounded} unbounded edges for degree {}", self.degree),
            );
        }

        let mut seen = HashSet::new();
        for f in &self.floors {
            if f.id.is_empty() {
                report.push("vertex-ids", "empty vertex id");
            } else if !seen.insert(f.id.as_str()) {
                report.push("vertex-ids", format!("duplicate vertex id `{}`", f.id));
            }
        }

        let mut endpoints_ok = true;
        for (i, e) in self.edges.iter().enumerate() {
            if e.source >= d || e.target >= d {
                report.push(
                    "edge-endpoints",
                    format!("edge {i} refers to a missing floor"),
                );
                endpoints_ok = false;
            }
            if e.weight == 0 {
                report.push("positive-weights", format!("edge {i} has weight 0"));
            }
        }
        if !endpoints_ok {
            return report;
        }

        if let Some(cycle_at) = self.find_cycle() {
            report.push(
                "acyclic",
                format!("oriented cycle through `{}`", self.floors[cycle_at].id),
            );
        }
        if d > 0 && !self.is_connected() {
            report.push("connected", "bounded edges do not connect all floors");
        }
        for v in 0..d {
            let div = self.divergence_at(v);
            if div != 1 {
                report.push(
                    "divergence",
                    format!("divergence({}) = {div}", self.floors[v].id),
                );
            }
        }
        report
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_valid()
    }

    pub(crate) fn ensure_valid(&self) -> Result<(), DiagramError> {
        let report = self.validate();
        if report.is_valid() {
            Ok(())
        } else {
            Err(DiagramError::Invalid(report))
        }
    }

    /// Incoming weight (unbounded edges count 1 each) minus outgoing weight.
    pub fn divergence(&self, id: &str) -> Result<i64, DiagramError> {
        let v = self
            .floor_index(id)
            .ok_or_else(|| DiagramError::UnknownVertex(id.to_string()))?;
        Ok(self.divergence_at(v))
    }

    pub(crate) fn divergence_at(&self, v: usize) -> i64 {
        let mut div = self.floors[v].unbounded as i64;
        for e in &self.edges {
            if e.target == v {
                div += e.weight as i64;
            }
            if e.source == v {
                div -= e.weight as i64;
            }
        }
        div
    }

    fn find_cycle(&self) -> Option<usize> {
        // Kahn's algorithm; anything left over sits on or behind a cycle.
        let d = self.floors.len();
        let mut indegree = vec![0usize; d];
        for e in &self.edges {
            indegree[e.target] += 1;
        }
        let mut stack: Vec<usize> = (0..d).filter(|&v| indegree[v] == 0).collect();
        let mut removed = vec![false; d];
        while let Some(v) = stack.pop() {
            removed[v] = true;
            for e in self.edges.iter().filter(|e| e.source == v) {
                indegree[e.target] -= 1;
                if indegree[e.target] == 0 {
                    stack.push(e.target);
                }
            }
        }
        (0..d).find(|&v| !removed[v])
    }

    fn is_connected(&self) -> bool {
        let d = self.floors.len();
        let mut reached = vec![false; d];
        let mut stack = vec![0];
        reached[0] = true;
        while let Some(v) = stack.pop() {
            for e in &self.edges {
                let other = if e.source == v {
                    e.target
                } else if e.target == v {
                    e.source
                } else {
                    continue;
                };
                if !reached[other] {
                    reached[other] = true;
                    stack.push(other);
                }
            }
        }
        reached.into_iter().all(|r| r)
    }

    /// Product of squared edge weights.
    pub fn complex_multiplicity(&self) -> Result<BigUint, DiagramError> {
        self.ensure_valid()?;
        Ok(self.edge_weight_product().pow(2))
    }

    /// `complex_multiplicity mod 2`: 1 iff every weight is odd.
    pub fn real_multiplicity(&self) -> Result<u8, DiagramError> {
        self.ensure_valid()?;
        Ok(u8::from(self.edges.iter().all(|e| e.weight % 2 == 1)))
    }

    pub(crate) fn edge_weight_product(&self) -> BigUint {
        self.edges
            .iter()
            .fold(BigUint::one(), |acc, e| acc * e.weight)
    }

    /// Poset on floors and edges: `u < e < v` for a bounded edge `e` from
    /// `u` to `v`, and `e < v` for an unbounded edge ending on `v`.
    pub fn element_poset(&self) -> Result<ElementPoset, DiagramError> {
        self.ensure_valid()?;
        let d = self.floors.len();
        let mut elements: Vec<Element> = (0..d).map(Element::Floor).collect();
        elements.extend((0..self.edges.len()).map(Element::Edge));
        for (floor, f) in self.floors.iter().enumerate() {
            elements.extend((0..f.unbounded).map(|slot| Element::Unbounded { floor, slot }));
        }
        let mut relations = Vec::with_capacity(elements.len() * 2);
        for (i, element) in elements.iter().enumerate() {
            match *element {
                Element::Floor(_) => {}
                Element::Edge(e) => {
                    relations.push((self.edges[e].source, i));
                    relations.push((i, self.edges[e].target));
                }
                Element::Unbounded { floor, .. } => relations.push((i, floor)),
            }
        }
        let order = Poset::from_relations(elements.len(), relations)?;
        Ok(ElementPoset { elements, order })
    }

    /// Number of isomorphism classes of markings: linear extensions of the
    /// element poset divided by the automorphism group order.
    pub fn count_markings(&self) -> Result<BigUint, DiagramError> {
        let extensions = self.element_poset()?.count_linear_extensions();
        let automorphisms = self.automorphism_order()?;
        let (quotient, remainder) = extensions.div_rem(&automorphisms);
        if !remainder.is_zero() {
            return Err(DiagramError::Internal(format!(
                "{automorphisms} automorphisms do not divide {extensions} linear extensions"
            )));
        }
        Ok(quotient)
    }

    /// Whether a marking is an increasing bijection onto the elements.
    pub fn is_marking(&self, marking: &Marking) -> Result<bool, DiagramError> {
        Ok(self.element_poset()?.order.is_linear_extension(&marking.0))
    }
}


#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    #[test]
    fn small_diagrams_are_valid() {
        assert!(line().is_valid());
        assert!(conic().is_valid());
        assert!(cubic_weighted_chain().is_valid());
        assert!(cubic_chain().is_valid());
        assert!(cubic_star().is_valid());
        assert!(cubic_genus_one().is_valid());
    }

    #[test]
    fn path_with_one_unbounded_per_floor_fails_divergence() {
        let d = FloorDiagram::from_parts(&[1, 1, 1], &[(0, 1, 1), (1, 2, 1)]);
        let report = d.validate();
        assert!(!report.is_valid());
        assert!(report.violates("divergence"));
        assert_eq!(d.divergence("v3").unwrap(), 2);
        assert_eq!(d.divergence("v1").unwrap(), 0);
    }

    #[test]
    fn divergence_examples() {
        let d = conic();
        assert_eq!(d.divergence("v1").unwrap(), 1);
        assert_eq!(d.divergence("v2").unwrap(), 1);
        let isolated = FloorDiagram::from_parts(&[0], &[]);
        assert_eq!(isolated.divergence("v1").unwrap(), 0);
        assert_eq!(
            d.divergence("nope"),
            Err(DiagramError::UnknownVertex("nope".into()))
        );
    }

    #[test]
    fn report_lists_every_violation() {
        let d = FloorDiagram {
            degree: 2,
            genus: 0,
            floors: vec![
                Floor { id: "a".into(), unbounded: 1 },
                Floor { id: "a".into(), unbounded: 0 },
                Floor { id: "c".into(), unbounded: 0 },
            ],
            edges: vec![
                Edge { source: 0, target: 1, weight: 0 },
                Edge { source: 1, target: 0, weight: 1 },
            ],
        };
        let report = d.validate();
        for name in [
            "vertex-count",
            "bounded-edge-count",
            "unbounded-edge-count",
            "vertex-ids",
            "positive-weights",
            "acyclic",
            "connected",
            "divergence",
        ] {
            assert!(report.violates(name), "missing {name} in {report}");
        }
    }

    #[test]
    fn dangling_edge_is_reported() {
        let mut d = conic();
        d.edges[0].target = 7;
        assert!(d.validate().violates("edge-endpoints"));
    }

    #[test]
    fn disconnected_is_reported() {
        let d = FloorDiagram {
            degree: 2,
            genus: 1,
            floors: conic().floors,
            edges: vec![],
        };
        assert!(d.validate().violates("connected"));
    }

    #[test]
    fn multiplicities() {
        assert_eq!(cubic_weighted_chain().complex_multiplicity().unwrap(), 4u32.into());
        assert_eq!(cubic_weighted_chain().real_multiplicity().unwrap(), 0);
        assert_eq!(cubic_chain().complex_multiplicity().unwrap(), 1u32.into());
        assert_eq!(cubic_chain().real_multiplicity().unwrap(), 1);
        assert_eq!(line().complex_multiplicity().unwrap(), 1u32.into());

        // Weights 3, 2 and 1 down a chain.
        let d = FloorDiagram::from_parts(&[4, 0, 0, 0], &[(0, 1, 3), (1, 2, 2), (2, 3, 1)]);
        assert!(d.is_valid());
        assert_eq!(d.complex_multiplicity().unwrap(), 36u32.into());
        assert_eq!(d.real_multiplicity().unwrap(), 0);
    }

    #[test]
    fn invalid_diagram_has_no_multiplicity() {
        let d = FloorDiagram::from_parts(&[1, 1, 1], &[(0, 1, 1), (1, 2, 1)]);
        assert!(matches!(d.complex_multiplicity(), Err(DiagramError::Invalid(_))));
        assert!(matches!(d.count_markings(), Err(DiagramError::Invalid(_))));
    }

    #[test]
    fn element_poset_shapes() {
        let p = line().element_poset().unwrap();
        assert_eq!(p.len(), 2);
        let u = p.index_of(Element::Unbounded { floor: 0, slot: 0 }).unwrap();
        let v = p.index_of(Element::Floor(0)).unwrap();
        assert!(p.order.is_less(u, v));

        let p = conic().element_poset().unwrap();
        assert_eq!(p.len(), 5);
        let u0 = p.index_of(Element::Unbounded { floor: 0, slot: 0 }).unwrap();
        let u1 = p.index_of(Element::Unbounded { floor: 0, slot: 1 }).unwrap();
        let v1 = p.index_of(Element::Floor(0)).unwrap();
        let e = p.index_of(Element::Edge(0)).unwrap();
        let v2 = p.index_of(Element::Floor(1)).unwrap();
        assert!(!p.order.is_less(u0, u1) && !p.order.is_less(u1, u0));
        for (a, b) in [(u0, v1), (u1, v1), (v1, e), (e, v2), (u0, v2)] {
            assert!(p.order.is_less(a, b));
        }

        let p = cubic_star().element_poset().unwrap();
        let top1 = p.index_of(Element::Floor(1)).unwrap();
        let top2 = p.index_of(Element::Floor(2)).unwrap();
        assert!(!p.order.is_less(top1, top2) && !p.order.is_less(top2, top1));
    }

    #[test]
    fn poset_size_is_severi_dimension() {
        for d in [line(), conic(), cubic_chain(), cubic_genus_one()] {
            let n = 3 * d.degree + d.genus - 1;
            assert_eq!(d.element_poset().unwrap().len(), n as usize);
        }
    }

    #[test]
    fn cubic_chain_extensions() {
        // Frozen from a brute-force pass over all 8! orderings.
        let p = cubic_chain().element_poset().unwrap();
        assert_eq!(p.count_linear_extensions(), 10u32.into());
    }

    #[test]
    fn marking_counts_in_degree_three() {
        assert_eq!(cubic_weighted_chain().count_markings().unwrap(), 1u32.into());
        assert_eq!(cubic_chain().count_markings().unwrap(), 5u32.into());
        assert_eq!(cubic_star().count_markings().unwrap(), 3u32.into());
        assert_eq!(cubic_genus_one().count_markings().unwrap(), 1u32.into());
        assert_eq!(conic().count_markings().unwrap(), 1u32.into());
    }

    #[test]
    fn marking_membership() {
        let d = conic();
        let p = d.element_poset().unwrap();
        let ids = |es: &[Element]| Marking(es.iter().map(|&e| p.index_of(e).unwrap()).collect());
        let good = ids(&[
            Element::Unbounded { floor: 0, slot: 1 },
            Element::Unbounded { floor: 0, slot: 0 },
            Element::Floor(0),
            Element::Edge(0),
            Element::Floor(1),
        ]);
        assert!(d.is_marking(&good).unwrap());
        let bad = ids(&[
            Element::Floor(0),
            Element::Unbounded { floor: 0, slot: 0 },
            Element::Unbounded { floor: 0, slot: 1 },
            Element::Edge(0),
            Element::Floor(1),
        ]);
        assert!(!d.is_marking(&bad).unwrap());
    }
}
