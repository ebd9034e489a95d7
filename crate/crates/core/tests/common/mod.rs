#![allow(dead_code)]

use std::collections::HashSet;

use floorcount::diagram::{Element, ElementPoset};
use floorcount::enumeration::{skeletons, solve_weights};
use floorcount::formulas::genus_max;
use floorcount::tropical::{Direction, TropicalCurve, UnboundedEdge, Vertex};
use floorcount::FloorDiagram;
use num_bigint::BigUint;
use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::Rng;

/// Counts orderings of `0..n` respecting every `(a, b)` pair by trying all
/// `n!` permutations.
pub fn brute_force_linear_extensions(n: usize, relations: &[(usize, usize)]) -> u64 {
    fn go(n: usize, relations: &[(usize, usize)], pos: &mut [Option<usize>], next: usize) -> u64 {
        if next == n {
            return relations
                .iter()
                .all(|&(a, b)| pos[a] < pos[b])
                .into();
        }
        let mut total = 0;
        for v in 0..n {
            if pos[v].is_none() {
                pos[v] = Some(next);
                total += go(n, relations, pos, next + 1);
                pos[v] = None;
            }
        }
        total
    }
    go(n, relations, &mut vec![None; n], 0)
}

/// All permutations of `0..n`.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

fn edge_multiset(d: &FloorDiagram, map: &[usize]) -> Vec<(usize, usize, u32)> {
    let mut e: Vec<_> = d
        .edges
        .iter()
        .map(|e| (map[e.source], map[e.target], e.weight))
        .collect();
    e.sort();
    e
}

/// Isomorphism by trying every bijection of floors.
pub fn brute_force_isomorphic(a: &FloorDiagram, b: &FloorDiagram) -> bool {
    let n = a.floors.len();
    if n != b.floors.len() || a.edges.len() != b.edges.len() {
        return false;
    }
    let identity: Vec<usize> = (0..n).collect();
    let target = edge_multiset(b, &identity);
    permutations(n).into_iter().any(|p| {
        (0..n).all(|v| a.floors[v].unbounded == b.floors[p[v]].unbounded)
            && edge_multiset(a, &p) == target
    })
}

/// Applies a floor permutation: floor `v` becomes floor `perm[v]`.
pub fn relabel(d: &FloorDiagram, perm: &[usize]) -> FloorDiagram {
    let mut unbounded = vec![0; d.floors.len()];
    for (v, f) in d.floors.iter().enumerate() {
        unbounded[perm[v]] = f.unbounded;
    }
    let edges: Vec<_> = d
        .edges
        .iter()
        .map(|e| (perm[e.source], perm[e.target], e.weight))
        .collect();
    FloorDiagram::from_parts(&unbounded, &edges)
}

/// Every labeled diagram produced before deduplication, for all genera.
pub fn labeled_diagrams(degree: u32) -> Vec<FloorDiagram> {
    let mut out = Vec::new();
    for g in 0..=genus_max(degree) {
        for s in skeletons(degree, g) {
            for w in solve_weights(&s) {
                out.push(s.with_weights(&w));
            }
        }
    }
    out
}

/// All linear extensions of the element poset, by depth-first search.
pub fn linear_extensions(p: &ElementPoset) -> Vec<Vec<usize>> {
    fn go(p: &ElementPoset, placed: u64, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == p.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..p.len() {
            if placed >> v & 1 == 0 && p.order.predecessors(v) & !placed == 0 {
                prefix.push(v);
                go(p, placed | 1 << v, prefix, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(p, 0, &mut Vec::new(), &mut out);
    out
}

/// What each label carries once the labels are fixed: floors, edges with
/// the labels of their endpoints, and unbounded edges with the label of
/// their floor. Two markings are isomorphic exactly when these agree.
pub fn marked_signature(d: &FloorDiagram, p: &ElementPoset, ext: &[usize]) -> Vec<(u8, usize, usize, u32)> {
    let mut label = vec![0; ext.len()];
    for (l, &e) in ext.iter().enumerate() {
        label[e] = l;
    }
    let floor_label = |f: usize| label[p.index_of(Element::Floor(f)).unwrap()];
    ext.iter()
        .map(|&e| match p.elements[e] {
            Element::Floor(_) => (0, 0, 0, 0),
            Element::Edge(i) => {
                let edge = &d.edges[i];
                (1, floor_label(edge.source), floor_label(edge.target), edge.weight)
            }
            Element::Unbounded { floor, .. } => (2, floor_label(floor), 0, 0),
        })
        .collect()
}

/// Number of marked diagrams up to isomorphism, by listing every marking.
pub fn brute_force_markings(d: &FloorDiagram) -> u64 {
    let p = d.element_poset().unwrap();
    let classes: HashSet<_> = linear_extensions(&p)
        .iter()
        .map(|ext| marked_signature(d, &p, ext))
        .collect();
    classes.len() as u64
}

pub fn big(n: u64) -> BigUint {
    BigUint::from(n)
}

pub fn is_primitive(v: Direction) -> bool {
    floorcount::tropical::is_primitive(v)
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// A balanced trivalent vertex at the origin: two random weighted primitive
/// directions, and the third end closing the sum. `None` if degenerate.
pub fn balanced_vertex(a: (i64, i64, u32), b: (i64, i64, u32)) -> Option<TropicalCurve> {
    let prim = |x: i64, y: i64| {
        let g = gcd(x, y);
        (g != 0).then(|| (x / g, y / g))
    };
    let v1 = prim(a.0, a.1)?;
    let v2 = prim(b.0, b.1)?;
    if v1.0 * v2.1 - v1.1 * v2.0 == 0 {
        return None;
    }
    let sx = -(a.2 as i64 * v1.0 + b.2 as i64 * v2.0);
    let sy = -(a.2 as i64 * v1.1 + b.2 as i64 * v2.1);
    let w3 = gcd(sx, sy);
    let v3 = (sx / w3, sy / w3);
    let zero = BigRational::from_integer(0.into());
    Some(TropicalCurve {
        vertices: vec![Vertex {
            id: "s".into(),
            x: zero.clone(),
            y: zero,
        }],
        bounded: Vec::new(),
        unbounded: vec![
            UnboundedEdge { vertex: 0, direction: v1, weight: a.2 },
            UnboundedEdge { vertex: 0, direction: v2, weight: b.2 },
            UnboundedEdge { vertex: 0, direction: v3, weight: w3 as u32 },
        ],
    })
}

/// `w_i * w_j * |det(v_i, v_j)|` for the three pairs of ends at vertex 0.
pub fn pair_multiplicities(c: &TropicalCurve) -> [u64; 3] {
    let e = &c.unbounded;
    let m = |i: usize, j: usize| {
        let (a, b) = (e[i].direction, e[j].direction);
        e[i].weight as u64 * e[j].weight as u64 * (a.0 * b.1 - a.1 * b.0).unsigned_abs()
    };
    [m(0, 1), m(0, 2), m(1, 2)]
}

/// Random relation on `0..n` that is acyclic: pairs follow a shuffled order.
pub fn random_dag(rng: &mut impl Rng, n: usize, density: f64) -> Vec<(usize, usize)> {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(density) {
                out.push((order[i], order[j]));
            }
        }
    }
    out
}
