//! Isomorphism machinery: automorphism group orders, canonical keys and
//! isomorphism tests for (marked) floor diagrams.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::One;

use super::{DiagramError, Element, FloorDiagram, Marking};

/// Byte encoding of a diagram that is equal for two diagrams exactly when
/// they are isomorphic.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey(pub Vec<u8>);

impl CanonicalKey {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

impl FloorDiagram {
    /// Lexicographically least encoding over all topological orderings of
    /// the floors. Isomorphisms preserve orientation, so they permute
    /// topological orderings and the minimum is an isomorphism invariant.
    pub fn canonical_key(&self) -> Result<CanonicalKey, DiagramError> {
        self.ensure_valid()?;
        Ok(CanonicalKey(self.canonical_order().1))
    }

    /// Relabels floors as `v1..vd` in canonical order, with edges sorted.
    /// Isomorphic diagrams have identical canonical forms.
    pub fn canonical_form(&self) -> Result<FloorDiagram, DiagramError> {
        self.ensure_valid()?;
        Ok(self.relabeled(&self.canonical_order().0))
    }

    /// Best ordering (position -> floor) and its encoding. Assumes validity.
    pub(crate) fn canonical_order(&self) -> (Vec<usize>, Vec<u8>) {
        let d = self.floors.len();
        let mut best: Option<(Vec<usize>, Vec<u8>)> = None;
        let mut indegree = vec![0usize; d];
        for e in &self.edges {
            indegree[e.target] += 1;
        }
        let mut order = Vec::with_capacity(d);
        self.visit_topological(&mut indegree, &mut order, &mut |order| {
            let code = self.encode(order);
            if best.as_ref().map_or(true, |(_, b)| code < *b) {
                best = Some((order.to_vec(), code));
            }
        });
        best.expect("a valid diagram has a topological ordering")
    }

    fn visit_topological(
        &self,
        indegree: &mut [usize],
        order: &mut Vec<usize>,
        f: &mut impl FnMut(&[usize]),
    ) {
        if order.len() == indegree.len() {
            f(order);
            return;
        }
        for v in 0..indegree.len() {
            if indegree[v] != 0 || order.contains(&v) {
                continue;
            }
            order.push(v);
            for e in self.edges.iter().filter(|e| e.source == v) {
                indegree[e.target] -= 1;
            }
            self.visit_topological(indegree, order, f);
            for e in self.edges.iter().filter(|e| e.source == v) {
                indegree[e.target] += 1;
            }
            order.pop();
        }
    }

    fn encode(&self, order: &[usize]) -> Vec<u8> {
        let mut position = vec![0usize; order.len()];
        for (p, &v) in order.iter().enumerate() {
            position[v] = p;
        }
        let mut edges: Vec<(u32, u32, u32)> = self
            .edges
            .iter()
            .map(|e| (position[e.source] as u32, position[e.target] as u32, e.weight))
            .collect();
        edges.sort_unstable();
        let mut out = Vec::with_capacity(4 * (2 + order.len() + 3 * edges.len()));
        out.extend(self.degree.to_be_bytes());
        out.extend(self.genus.to_be_bytes());
        for &v in order {
            out.extend(self.floors[v].unbounded.to_be_bytes());
        }
        for (s, t, w) in edges {
            out.extend(s.to_be_bytes());
            out.extend(t.to_be_bytes());
            out.extend(w.to_be_bytes());
        }
        out
    }

    pub(crate) fn relabeled(&self, order: &[usize]) -> FloorDiagram {
        let mut position = vec![0usize; order.len()];
        for (p, &v) in order.iter().enumerate() {
            position[v] = p;
        }
        let mut edges: Vec<_> = self
            .edges
            .iter()
            .map(|e| super::Edge {
                source: position[e.source],
                target: position[e.target],
                weight: e.weight,
            })
            .collect();
        edges.sort_unstable();
        FloorDiagram {
            degree: self.degree,
            genus: self.genus,
            floors: order
                .iter()
                .enumerate()
                .map(|(p, &v)| super::Floor {
                    id: format!("v{}", p + 1),
                    unbounded: self.floors[v].unbounded,
                })
                .collect(),
            edges,
        }
    }

    /// Order of the automorphism group acting on floors, bounded edges and
    /// unbounded edges. Parallel edges of equal weight and unbounded edges
    /// on a common floor can be permuted freely on top of any floor map.
    pub fn automorphism_order(&self) -> Result<BigUint, DiagramError> {
        self.ensure_valid()?;
        let floor_maps = count_floor_maps(self, self, false);
        let mut order = BigUint::from(floor_maps);
        let mut bundles: BTreeMap<(usize, usize, u32), u32> = BTreeMap::new();
        for e in &self.edges {
            *bundles.entry((e.source, e.target, e.weight)).or_default() += 1;
        }
        for &count in bundles.values() {
            order *= factorial(count);
        }
        for f in &self.floors {
            order *= factorial(f.unbounded);
        }
        Ok(order)
    }
}

fn factorial(n: u32) -> BigUint {
    (2..=n).fold(BigUint::one(), |acc, k| acc * k)
}

/// Multiset of weights on edges from `s` to `t`, for every ordered pair.
fn bundles(d: &FloorDiagram) -> Vec<Vec<Vec<u32>>> {
    let n = d.floors.len();
    let mut table = vec![vec![Vec::new(); n]; n];
    for e in &d.edges {
        table[e.source][e.target].push(e.weight);
    }
    for row in &mut table {
        for cell in row {
            cell.sort_unstable();
        }
    }
    table
}

/// Counts bijections of floors compatible with unbounded counts and edge
/// bundles, stopping at the first one if `first_only`.
fn count_floor_maps(a: &FloorDiagram, b: &FloorDiagram, first_only: bool) -> u64 {
    let n = a.floors.len();
    if n != b.floors.len() || a.edges.len() != b.edges.len() {
        return 0;
    }
    let ba = bundles(a);
    let bb = bundles(b);
    let signature = |d: &FloorDiagram, table: &[Vec<Vec<u32>>], v: usize| {
        let mut out_w: Vec<u32> = table[v].iter().flatten().copied().collect();
        let mut in_w: Vec<u32> = table.iter().flat_map(|row| row[v].iter().copied()).collect();
        out_w.sort_unstable();
        in_w.sort_unstable();
        (d.floors[v].unbounded, in_w, out_w)
    };
    let sig_a: Vec<_> = (0..n).map(|v| signature(a, &ba, v)).collect();
    let sig_b: Vec<_> = (0..n).map(|v| signature(b, &bb, v)).collect();

    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    let mut count = 0u64;
    extend_map(0, &sig_a, &sig_b, &ba, &bb, &mut image, &mut used, &mut count, first_only);
    count
}

#[allow(clippy::too_many_arguments)]
fn extend_map<S: PartialEq>(
    v: usize,
    sig_a: &[S],
    sig_b: &[S],
    ba: &[Vec<Vec<u32>>],
    bb: &[Vec<Vec<u32>>],
    image: &mut [usize],
    used: &mut [bool],
    count: &mut u64,
    first_only: bool,
) {
    let n = image.len();
    if v == n {
        *count += 1;
        return;
    }
    for w in 0..n {
        if used[w] || sig_a[v] != sig_b[w] {
            continue;
        }
        let consistent = (0..v).all(|u| {
            let iu = image[u];
            ba[v][u] == bb[w][iu] && ba[u][v] == bb[iu][w]
        }) && ba[v][v] == bb[w][w];
        if !consistent {
            continue;
        }
        image[v] = w;
        used[w] = true;
        extend_map(v + 1, sig_a, sig_b, ba, bb, image, used, count, first_only);
        used[w] = false;
        image[v] = usize::MAX;
        if first_only && *count > 0 {
            return;
        }
    }
}

/// Whether a bijection of floors and edges preserving incidence,
/// orientation, boundedness and weights exists. Found by backtracking,
/// independently of [`FloorDiagram::canonical_key`].
pub fn isomorphic(a: &FloorDiagram, b: &FloorDiagram) -> Result<bool, DiagramError> {
    a.ensure_valid()?;
    b.ensure_valid()?;
    if a.degree != b.degree || a.genus != b.genus {
        return Ok(false);
    }
    Ok(count_floor_maps(a, b, true) > 0)
}

/// Whether two marked diagrams are isomorphic: the labels themselves must
/// induce a structure-preserving bijection.
pub fn marked_isomorphic(
    a: &FloorDiagram,
    ma: &Marking,
    b: &FloorDiagram,
    mb: &Marking,
) -> Result<bool, DiagramError> {
    let pa = a.element_poset()?;
    let pb = b.element_poset()?;
    for (d, p, m) in [(a, &pa, ma), (b, &pb, mb)] {
        if !p.order.is_linear_extension(&m.0) {
            return Err(DiagramError::InvalidMarking(format!(
                "labels of a degree {} diagram are not an increasing bijection",
                d.degree
            )));
        }
    }
    if pa.len() != pb.len() || a.floors.len() != b.floors.len() {
        return Ok(false);
    }
    let mut floor_map = vec![usize::MAX; a.floors.len()];
    for (&x, &y) in ma.0.iter().zip(&mb.0) {
        match (pa.elements[x], pb.elements[y]) {
            (Element::Floor(u), Element::Floor(v)) => floor_map[u] = v,
            (Element::Floor(_), _) | (_, Element::Floor(_)) => return Ok(false),
            _ => {}
        }
    }
    for (&x, &y) in ma.0.iter().zip(&mb.0) {
        let same = match (pa.elements[x], pb.elements[y]) {
            (Element::Floor(_), Element::Floor(_)) => true,
            (Element::Edge(e), Element::Edge(f)) => {
                let (e, f) = (a.edges[e], b.edges[f]);
                floor_map[e.source] == f.source
                    && floor_map[e.target] == f.target
                    && e.weight == f.weight
            }
            (Element::Unbounded { floor: u, .. }, Element::Unbounded { floor: v, .. }) => {
                floor_map[u] == v
            }
            _ => false,
        };
        if !same {
            return Ok(false);
        }
    }
    Ok(true)
}
