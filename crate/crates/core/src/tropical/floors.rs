//! Floor decomposition: removing vertical edges leaves the floors; the
//! vertical pieces are elevators and become the edges of a floor diagram.

use std::collections::HashMap;

use num_rational::BigRational;

use super::{crossing_branches, is_vertical, EdgeRef, TropicalCurve, TropicalError, LEFT};
use crate::diagram::{Edge, Floor, FloorDiagram};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TropicalFloor {
    pub vertices: Vec<String>,
    pub edges: Vec<EdgeRef>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ElevatorEnd {
    Floor(usize),
    Infinity,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Elevator {
    pub edges: Vec<EdgeRef>,
    pub weight: u32,
    pub lower: ElevatorEnd,
    pub upper: ElevatorEnd,
}

/// Floors are sorted by their lowest point; diagram floor `i` is `floors[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FloorDecomposition {
    pub floors: Vec<TropicalFloor>,
    pub elevators: Vec<Elevator>,
    pub diagram: FloorDiagram,
}

/// Vertices with crossings split into their two branches. Each branch is a
/// node; every edge end is attached to one node.
pub(super) struct Branches {
    node_of: HashMap<(usize, EdgeRef), usize>,
    vertex: Vec<usize>,
    edges: Vec<Vec<EdgeRef>>,
}

impl Branches {
    pub(super) fn new(curve: &TropicalCurve) -> Result<Self, TropicalError> {
        let mut b = Branches {
            node_of: HashMap::new(),
            vertex: Vec::new(),
            edges: Vec::new(),
        };
        for v in 0..curve.vertices.len() {
            let star = curve.star(v)?;
            let groups: Vec<Vec<EdgeRef>> = match crossing_branches(&star) {
                Some(pairs) => pairs
                    .iter()
                    .map(|p| p.iter().map(|&i| star[i].0).collect())
                    .collect(),
                _ => vec![star.iter().map(|s| s.0).collect()],
            };
            for group in groups {
                let node = b.vertex.len();
                for &e in &group {
                    b.node_of.insert((v, e), node);
                }
                b.vertex.push(v);
                b.edges.push(group);
            }
        }
        Ok(b)
    }

    fn node(&self, v: usize, e: EdgeRef) -> usize {
        self.node_of[&(v, e)]
    }

    pub(super) fn is_connected(&self, curve: &TropicalCurve) -> bool {
        let mut sets = UnionFind::new(self.vertex.len());
        for (i, e) in curve.bounded.iter().enumerate() {
            let r = EdgeRef::Bounded(i);
            sets.union(self.node(e.v1, r), self.node(e.v2, r));
        }
        (0..self.vertex.len()).all(|n| sets.find(n) == sets.find(0))
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, a: usize) -> usize {
        let mut r = a;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut a = a;
        while self.0[a] != r {
            let next = self.0[a];
            self.0[a] = r;
            a = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a != b {
            self.0[a] = b;
        }
    }
}

fn fail(msg: impl Into<String>) -> TropicalError {
    TropicalError::Decomposition(msg.into())
}

pub(super) fn decompose(
    curve: &TropicalCurve,
    degree: u32,
    genus: u32,
) -> Result<FloorDecomposition, TropicalError> {
    let branches = Branches::new(curve)?;
    let nodes = branches.vertex.len();
    let mut vertical = HashMap::new();
    for e in curve.edge_refs() {
        let v = match e {
            EdgeRef::Bounded(i) => curve.bounded[i].v1,
            EdgeRef::Unbounded(i) => curve.unbounded[i].vertex,
        };
        vertical.insert(e, is_vertical(curve.primitive_outgoing(v, e)?));
    }
    let on_floor: Vec<bool> = (0..nodes)
        .map(|n| branches.edges[n].iter().any(|e| !vertical[e]))
        .collect();

    // Floors: components of the non-vertical edges.
    let mut sets = UnionFind::new(nodes);
    for (i, e) in curve.bounded.iter().enumerate() {
        let r = EdgeRef::Bounded(i);
        if !vertical[&r] {
            sets.union(branches.node(e.v1, r), branches.node(e.v2, r));
        }
    }
    let y = |n: usize| &curve.vertices[branches.vertex[n]].y;
    let x = |n: usize| &curve.vertices[branches.vertex[n]].x;
    let mut lowest: HashMap<usize, (BigRational, BigRational)> = HashMap::new();
    for n in (0..nodes).filter(|&n| on_floor[n]) {
        let key = (y(n).clone(), x(n).clone());
        lowest
            .entry(sets.find(n))
            .and_modify(|k| {
                if key < *k {
                    *k = key.clone()
                }
            })
            .or_insert(key);
    }
    let mut roots: Vec<usize> = lowest.keys().copied().collect();
    roots.sort_by(|a, b| lowest[a].cmp(&lowest[b]));
    let floor_of_root: HashMap<usize, usize> =
        roots.iter().enumerate().map(|(i, &r)| (r, i)).collect();
    let floor_of = |sets: &mut UnionFind, n: usize| floor_of_root[&sets.find(n)];

    let mut floors = vec![
        TropicalFloor {
            vertices: Vec::new(),
            edges: Vec::new(),
        };
        roots.len()
    ];
    for n in (0..nodes).filter(|&n| on_floor[n]) {
        let f = floor_of(&mut sets, n);
        let id = &curve.vertices[branches.vertex[n]].id;
        if !floors[f].vertices.contains(id) {
            floors[f].vertices.push(id.clone());
        }
        for &e in &branches.edges[n] {
            if !vertical[&e] && !floors[f].edges.contains(&e) {
                floors[f].edges.push(e);
            }
        }
    }
    for f in &mut floors {
        f.edges.sort();
    }
    for (i, floor) in floors.iter().enumerate() {
        let left = floor
            .edges
            .iter()
            .filter(|e| matches!(e, EdgeRef::Unbounded(u) if curve.unbounded[*u].direction == LEFT))
            .count();
        if left != 1 {
            return Err(fail(format!(
                "floor {} (through `{}`) has {left} ends of direction (-1,0); every floor needs exactly one",
                i + 1,
                floor.vertices[0]
            )));
        }
    }

    // Elevators: vertical edges chained through crossing branches.
    let mut pass_through = vec![false; nodes];
    for n in (0..nodes).filter(|&n| !on_floor[n]) {
        if branches.edges[n].len() != 2 {
            return Err(fail(format!(
                "vertex `{}` has only vertical edges",
                curve.vertices[branches.vertex[n]].id
            )));
        }
        pass_through[n] = true;
    }
    let vertical_edges: Vec<EdgeRef> = curve.edge_refs().filter(|e| vertical[e]).collect();
    // Lower and upper end of each vertical edge, `None` at infinity.
    let mut ends = Vec::with_capacity(vertical_edges.len());
    for &e in &vertical_edges {
        let span = match e {
            EdgeRef::Bounded(i) => {
                let b = &curve.bounded[i];
                let (p, q) = (branches.node(b.v1, e), branches.node(b.v2, e));
                if y(p) < y(q) {
                    (Some(p), Some(q))
                } else {
                    (Some(q), Some(p))
                }
            }
            EdgeRef::Unbounded(i) => {
                let u = &curve.unbounded[i];
                let n = branches.node(u.vertex, e);
                if u.direction.1 < 0 {
                    (None, Some(n))
                } else {
                    return Err(fail(format!(
                        "vertex `{}` has an upward vertical end",
                        curve.vertices[u.vertex].id
                    )));
                }
            }
        };
        ends.push(span);
    }
    let mut chains = UnionFind::new(vertical_edges.len());
    let mut at_node: HashMap<usize, usize> = HashMap::new();
    for (i, &(lo, hi)) in ends.iter().enumerate() {
        for n in [lo, hi].into_iter().flatten().filter(|&n| pass_through[n]) {
            match at_node.get(&n) {
                Some(&j) => chains.union(i, j),
                None => {
                    at_node.insert(n, i);
                }
            }
        }
    }
    let mut groups: HashMap<usize, Vec<usize>> = HashMap::new();
    for i in 0..vertical_edges.len() {
        groups.entry(chains.find(i)).or_default().push(i);
    }
    let mut groups: Vec<Vec<usize>> = groups.into_values().collect();
    groups.sort();
    let to_end = |sets: &mut UnionFind, n: Option<usize>| match n {
        Some(n) => ElevatorEnd::Floor(floor_of(sets, n)),
        None => ElevatorEnd::Infinity,
    };
    let mut elevators = Vec::with_capacity(groups.len());
    for group in groups {
        let lows: Vec<Option<usize>> = group
            .iter()
            .map(|&i| ends[i].0)
            .filter(|n| n.map_or(true, |n| !pass_through[n]))
            .collect();
        let highs: Vec<Option<usize>> = group
            .iter()
            .map(|&i| ends[i].1)
            .filter(|n| n.map_or(true, |n| !pass_through[n]))
            .collect();
        let weights: Vec<u32> = group.iter().map(|&i| curve.weight(vertical_edges[i])).collect();
        if lows.len() != 1 || highs.len() != 1 || weights.iter().any(|&w| w != weights[0]) {
            return Err(fail("a vertical component is not a simple path of constant weight"));
        }
        let lower = to_end(&mut sets, lows[0]);
        let upper = to_end(&mut sets, highs[0]);
        if lower == upper {
            return Err(fail(format!(
                "an elevator joins floor {} to itself",
                match lower {
                    ElevatorEnd::Floor(f) => f + 1,
                    ElevatorEnd::Infinity => 0,
                }
            )));
        }
        let mut edges: Vec<EdgeRef> = group.iter().map(|&i| vertical_edges[i]).collect();
        edges.sort();
        elevators.push(Elevator {
            edges,
            weight: weights[0],
            lower,
            upper,
        });
    }
    elevators.sort_by_key(|e| (e.lower.key(), e.upper.key(), e.edges.clone()));

    let diagram = induced_diagram(&floors, &elevators)?;
    let report = diagram.validate();
    if !report.is_valid() {
        return Err(fail(format!("the induced floor diagram is {report}")));
    }
    let expected = 2 * degree as usize - 1 + genus as usize;
    if diagram.degree != degree || floors.len() != degree as usize || elevators.len() != expected {
        return Err(fail(format!(
            "{} floors and {} elevators, a degree {degree} genus {genus} curve needs {degree} and {expected}",
            floors.len(),
            elevators.len()
        )));
    }
    if diagram.genus != genus {
        return Err(fail(format!(
            "induced diagram has genus {}, the curve has genus {genus}",
            diagram.genus
        )));
    }
    Ok(FloorDecomposition {
        floors,
        elevators,
        diagram,
    })
}

impl ElevatorEnd {
    fn key(self) -> usize {
        match self {
            ElevatorEnd::Infinity => 0,
            ElevatorEnd::Floor(f) => f + 1,
        }
    }
}

fn induced_diagram(
    floors: &[TropicalFloor],
    elevators: &[Elevator],
) -> Result<FloorDiagram, TropicalError> {
    let mut unbounded = vec![0u32; floors.len()];
    let mut edges = Vec::new();
    for e in elevators {
        match (e.lower, e.upper) {
            (ElevatorEnd::Infinity, ElevatorEnd::Floor(f)) => {
                if e.weight != 1 {
                    return Err(fail("an unbounded elevator has weight above 1"));
                }
                unbounded[f] += 1;
            }
            (ElevatorEnd::Floor(s), ElevatorEnd::Floor(t)) => edges.push(Edge {
                source: s,
                target: t,
                weight: e.weight,
            }),
            _ => return Err(fail("an elevator leaves upward to infinity")),
        }
    }
    let genus = (edges.len() + 1).saturating_sub(floors.len()) as u32;
    Ok(FloorDiagram {
        degree: unbounded.iter().sum(),
        genus,
        floors: unbounded
            .into_iter()
            .enumerate()
            .map(|(i, u)| Floor {
                id: format!("f{}", i + 1),
                unbounded: u,
            })
            .collect(),
        edges,
    })
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::*;
    use crate::diagram::isomorphic;

    fn check(curve: &TropicalCurve, floors: usize, elevators: usize) -> FloorDecomposition {
        let dec = curve.floor_decomposition().unwrap();
        assert_eq!(dec.floors.len(), floors);
        assert_eq!(dec.elevators.len(), elevators);
        assert!(dec.diagram.is_valid());
        let mut seen: Vec<EdgeRef> = dec
            .floors
            .iter()
            .flat_map(|f| f.edges.iter().copied())
            .chain(dec.elevators.iter().flat_map(|e| e.edges.iter().copied()))
            .collect();
        seen.sort();
        let all: Vec<EdgeRef> = curve.edge_refs().collect();
        assert_eq!(seen, all, "floors and elevators partition the edges");
        dec
    }

    #[test]
    fn line() {
        let dec = check(&super::super::fixtures::line(), 1, 1);
        assert_eq!(dec.elevators[0].lower, ElevatorEnd::Infinity);
        assert!(isomorphic(&dec.diagram, &FloorDiagram::from_parts(&[1], &[])).unwrap());
    }

    #[test]
    fn conic() {
        let dec = check(&super::super::fixtures::conic(), 2, 3);
        let expected = FloorDiagram::from_parts(&[2, 0], &[(0, 1, 1)]);
        assert!(isomorphic(&dec.diagram, &expected).unwrap());
        assert_eq!(dec.floors[0].vertices, vec!["p1", "p2", "p3"]);
    }

    #[test]
    fn weighted_cubic() {
        let dec = check(&cubic_weighted(), 3, 5);
        let expected = FloorDiagram::from_parts(&[3, 0, 0], &[(0, 1, 2), (1, 2, 1)]);
        assert!(isomorphic(&dec.diagram, &expected).unwrap());
        assert!(dec.elevators.iter().any(|e| e.weight == 2));
    }

    #[test]
    fn crossing_cubic() {
        let dec = check(&cubic_crossing(), 3, 5);
        let expected = FloorDiagram::from_parts(&[2, 1, 0], &[(0, 1, 1), (1, 2, 1)]);
        assert!(isomorphic(&dec.diagram, &expected).unwrap());
        // The end leaving m2 runs through the crossing as one elevator.
        assert!(dec.elevators.iter().any(|e| e.edges.len() == 2));
    }

    #[test]
    fn genus_one_cubic() {
        let dec = check(&cubic_genus_one(), 3, 6);
        assert_eq!(dec.diagram.genus, 1);
        let expected =
            FloorDiagram::from_parts(&[3, 0, 0], &[(0, 1, 1), (0, 1, 1), (1, 2, 1)]);
        assert!(isomorphic(&dec.diagram, &expected).unwrap());
    }

    #[test]
    fn crossing_lines_have_no_decomposition() {
        let c = curve(
            &[("p", 0, 0), ("q", 2, -1), ("x", 0, -1)],
            &[("p", "x", 1), ("x", "q", 1)],
            &[
                ("p", LEFT, 1),
                ("p", (1, 1), 1),
                ("x", (0, -1), 1),
                ("x", LEFT, 1),
                ("q", (0, -1), 1),
                ("q", (1, 1), 1),
            ],
        );
        assert!(c.floor_decomposition().is_err());
        let merged = decompose(&c, 2, 0).unwrap_err();
        assert!(matches!(merged, TropicalError::Decomposition(_)), "{merged}");
    }
}
