//! Enumeration of floor diagrams up to isomorphism, and the counts
//!
//! ```text
//! N(d, g) = sum over marked diagrams of degree d, genus g of mu_C
//! W(d)    = sum over marked diagrams of degree d, genus 0 of mu_R
//! ```
//!
//! Diagrams are generated in two stages. A [`DiagramSkeleton`] fixes the
//! floors in a topological order, the unbounded edges on each floor and the
//! bounded edges without weights; [`solve_weights`] then finds every weight
//! assignment satisfying the divergence condition. Labeled results are
//! deduplicated by canonical key.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::diagram::{DiagramError, FloorDiagram};
use crate::formulas::{binomial, genus_max};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Invariant {
    Complex,
    Real,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    FloorDiagrams,
    Kontsevich,
    ClosedFormula,
}

impl fmt::Display for Invariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Invariant::Complex => "complex",
            Invariant::Real => "real",
        })
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::FloorDiagrams => "floor_diagrams",
            Method::Kontsevich => "kontsevich",
            Method::ClosedFormula => "closed_formula",
        })
    }
}

/// An exact count tagged with what was counted and how.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountResult {
    pub degree: u32,
    pub genus: u32,
    pub kind: Invariant,
    pub method: Method,
    pub value: BigUint,
}

/// Floors `0..d` in topological order, unbounded edges per floor, and the
/// unweighted bounded edges `(source, target)` with `source < target`,
/// sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DiagramSkeleton {
    pub unbounded: Vec<u32>,
    pub edges: Vec<(usize, usize)>,
}

impl DiagramSkeleton {
    pub fn degree(&self) -> u32 {
        self.unbounded.iter().sum()
    }

    pub fn with_weights(&self, weights: &[u32]) -> FloorDiagram {
        let edges: Vec<_> = self
            .edges
            .iter()
            .zip(weights)
            .map(|(&(s, t), &w)| (s, t, w))
            .collect();
        FloorDiagram::from_parts(&self.unbounded, &edges)
    }
}

/// All connected skeletons with `d` floors and `d - 1 + g` bounded edges
/// that pass the flux bound: the edges leaving the first `k` floors carry
/// weight `U_k - k >= 1` (with `U_k` their unbounded edges), so there are at
/// most `U_k - k` of them.
pub fn skeletons(degree: u32, genus: u32) -> Vec<DiagramSkeleton> {
    if degree == 0 {
        return Vec::new();
    }
    let d = degree as usize;
    let edge_total = d - 1 + genus as usize;
    let mut search = SkeletonSearch {
        d,
        edge_total,
        unbounded: vec![0; d],
        counts: vec![vec![0; d]; d],
        out: Vec::new(),
    };
    search.visit(0, 0, 0, 0);
    search.out
}

struct SkeletonSearch {
    d: usize,
    edge_total: usize,
    unbounded: Vec<u32>,
    counts: Vec<Vec<u32>>,
    out: Vec<DiagramSkeleton>,
}

impl SkeletonSearch {
    /// `crossing`: edges from floors before `k` to floors at or after `k`.
    fn visit(&mut self, k: usize, unbounded_used: u32, edges_used: usize, crossing: usize) {
        let d = self.d;
        let incoming: usize = (0..k).map(|s| self.counts[s][k] as usize).sum();
        if k == d - 1 {
            let u = d as u32 - unbounded_used;
            if edges_used == self.edge_total && u as usize + incoming >= 1 {
                self.unbounded[k] = u;
                if self.is_connected() {
                    self.out.push(self.snapshot());
                }
            }
            return;
        }
        for u in 0..=(d as u32 - unbounded_used) {
            if u as usize + incoming == 0 {
                continue;
            }
            let flux = (unbounded_used + u) as i64 - (k as i64 + 1);
            if flux < 1 {
                continue;
            }
            let passing = crossing - incoming;
            let max_crossing = flux as usize;
            if passing > max_crossing {
                continue;
            }
            let budget = (self.edge_total - edges_used).min(max_crossing - passing);
            let min_out = if passing == 0 { 1 } else { 0 };
            self.unbounded[k] = u;
            for out in min_out..=budget {
                self.distribute(k, k + 1, out, unbounded_used + u, edges_used + out, passing + out);
            }
        }
        self.unbounded[k] = 0;
    }

    fn distribute(
        &mut self,
        k: usize,
        target: usize,
        left: usize,
        unbounded_used: u32,
        edges_used: usize,
        crossing: usize,
    ) {
        if target == self.d - 1 {
            self.counts[k][target] = left as u32;
            self.visit(k + 1, unbounded_used, edges_used, crossing);
            self.counts[k][target] = 0;
            return;
        }
        for c in 0..=left {
            self.counts[k][target] = c as u32;
            self.distribute(k, target + 1, left - c, unbounded_used, edges_used, crossing);
        }
        self.counts[k][target] = 0;
    }

    fn is_connected(&self) -> bool {
        let mut reached = vec![false; self.d];
        let mut stack = vec![0];
        reached[0] = true;
        while let Some(v) = stack.pop() {
            for w in 0..self.d {
                if !reached[w] && (self.counts[v][w] > 0 || self.counts[w][v] > 0) {
                    reached[w] = true;
                    stack.push(w);
                }
            }
        }
        reached.into_iter().all(|r| r)
    }

    fn snapshot(&self) -> DiagramSkeleton {
        let mut edges = Vec::new();
        for s in 0..self.d {
            for t in s + 1..self.d {
                edges.extend(std::iter::repeat((s, t)).take(self.counts[s][t] as usize));
            }
        }
        DiagramSkeleton {
            unbounded: self.unbounded.clone(),
            edges,
        }
    }
}

/// Every assignment of positive weights to the skeleton's edges giving
/// divergence 1 at each floor, aligned with `skeleton.edges`. Parallel
/// edges are interchangeable, so their weights are listed non-increasing
/// and each diagram appears once.
pub fn solve_weights(skeleton: &DiagramSkeleton) -> Vec<Vec<u32>> {
    let d = skeleton.unbounded.len();
    // Runs of parallel edges: (source, target, first index, length).
    let mut groups: Vec<(usize, usize, usize, usize)> = Vec::new();
    for (i, &(s, t)) in skeleton.edges.iter().enumerate() {
        if s >= t || t >= d {
            return Vec::new();
        }
        match groups.last_mut() {
            Some(g) if (g.0, g.1) == (s, t) => g.3 += 1,
            _ => groups.push((s, t, i, 1)),
        }
    }
    let mut solver = WeightSolver {
        unbounded: &skeleton.unbounded,
        groups,
        weights: vec![0; skeleton.edges.len()],
        inflow: vec![0; d],
        out: Vec::new(),
    };
    solver.floor(0);
    solver.out
}

struct WeightSolver<'a> {
    unbounded: &'a [u32],
    groups: Vec<(usize, usize, usize, usize)>,
    weights: Vec<u32>,
    inflow: Vec<u32>,
    out: Vec<Vec<u32>>,
}

impl WeightSolver<'_> {
    fn floor(&mut self, k: usize) {
        if k == self.unbounded.len() {
            self.out.push(self.weights.clone());
            return;
        }
        let total_in = self.unbounded[k] + self.inflow[k];
        if total_in == 0 {
            return;
        }
        let outflow = total_in - 1;
        let first = self.groups.partition_point(|g| g.0 < k);
        let last = self.groups.partition_point(|g| g.0 <= k);
        self.group(k, first, last, outflow);
    }

    fn group(&mut self, k: usize, g: usize, last: usize, left: u32) {
        if g == last {
            if left == 0 {
                self.floor(k + 1);
            }
            return;
        }
        let (_, target, start, len) = self.groups[g];
        // Later groups of this floor need at least one unit per edge.
        let reserved: usize = self.groups[g + 1..last].iter().map(|g| g.3).sum();
        let Some(max_sum) = (left as usize).checked_sub(reserved) else {
            return;
        };
        let max_sum = if g + 1 == last { left as usize } else { max_sum };
        let min_sum = if g + 1 == last { left as usize } else { len };
        for sum in min_sum.max(len)..=max_sum {
            let mut parts = Vec::with_capacity(len);
            self.partitions(k, g, last, target, start, len, sum as u32, sum as u32, &mut parts, left);
        }
    }

    /// Non-increasing sequences of `len` positive parts summing to `sum`.
    #[allow(clippy::too_many_arguments)]
    fn partitions(
        &mut self,
        k: usize,
        g: usize,
        last: usize,
        target: usize,
        start: usize,
        len: usize,
        sum: u32,
        remaining: u32,
        parts: &mut Vec<u32>,
        left: u32,
    ) {
        let slots = (len - parts.len()) as u32;
        if slots == 0 {
            if remaining == 0 {
                self.weights[start..start + len].copy_from_slice(parts);
                self.inflow[target] += sum;
                self.group(k, g + 1, last, left - sum);
                self.inflow[target] -= sum;
            }
            return;
        }
        let cap = parts.last().copied().unwrap_or(remaining);
        // The rest needs at least one per slot.
        let hi = cap.min(remaining - (slots - 1));
        let lo = remaining.div_ceil(slots);
        for w in (lo..=hi).rev() {
            parts.push(w);
            self.partitions(k, g, last, target, start, len, sum, remaining - w, parts, left);
            parts.pop();
        }
    }
}

/// All floor diagrams of degree `d` and genus `g`, pairwise
/// non-isomorphic, in canonical form, ordered by canonical key.
pub fn enumerate_diagrams(degree: u32, genus: u32) -> Vec<FloorDiagram> {
    if degree == 0 || genus > genus_max(degree) {
        return Vec::new();
    }
    let labeled: Vec<(Vec<u8>, FloorDiagram)> = skeletons(degree, genus)
        .par_iter()
        .flat_map_iter(|s| {
            solve_weights(s).into_iter().map(move |w| {
                let d = s.with_weights(&w);
                let (order, key) = d.canonical_order();
                (key, d.relabeled(&order))
            })
        })
        .collect();
    let unique: BTreeMap<Vec<u8>, FloorDiagram> = labeled.into_iter().collect();
    unique.into_values().collect()
}

/// A diagram with its marking count and multiplicities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagramCount {
    pub diagram: FloorDiagram,
    pub markings: BigUint,
    pub complex_multiplicity: BigUint,
    pub real_multiplicity: u8,
}

impl DiagramCount {
    pub fn of(diagram: FloorDiagram) -> Result<Self, DiagramError> {
        Ok(DiagramCount {
            markings: diagram.count_markings()?,
            complex_multiplicity: diagram.complex_multiplicity()?,
            real_multiplicity: diagram.real_multiplicity()?,
            diagram,
        })
    }
}

/// [`enumerate_diagrams`] together with per-diagram marking counts and
/// multiplicities, in the same order.
pub fn enumerate_with_markings(degree: u32, genus: u32) -> Vec<DiagramCount> {
    enumerate_diagrams(degree, genus)
        .into_par_iter()
        .map(|d| DiagramCount::of(d).expect("enumerated diagrams are valid"))
        .collect()
}

fn weighted_sum(degree: u32, genus: u32, weight: impl Fn(&DiagramCount) -> BigUint + Sync) -> BigUint {
    enumerate_with_markings(degree, genus)
        .par_iter()
        .map(|c| &c.markings * weight(c))
        .reduce(BigUint::zero, |a, b| a + b)
}

/// `N(d, g)`: marked diagrams counted with complex multiplicity.
pub fn count_complex(degree: u32, genus: u32) -> CountResult {
    CountResult {
        degree,
        genus,
        kind: Invariant::Complex,
        method: Method::FloorDiagrams,
        value: weighted_sum(degree, genus, |c| c.complex_multiplicity.clone()),
    }
}

/// `W(d)`: genus-0 marked diagrams counted with real multiplicity.
pub fn count_real_rational(degree: u32) -> CountResult {
    count_real(degree, 0)
}

/// Real-multiplicity sums for any genus. Only genus 0 is a Welschinger
/// invariant; higher genus values are experimental.
pub fn count_real(degree: u32, genus: u32) -> CountResult {
    CountResult {
        degree,
        genus,
        kind: Invariant::Real,
        method: Method::FloorDiagrams,
        value: weighted_sum(degree, genus, |c| BigUint::from(c.real_multiplicity)),
    }
}

/// The diagram `D_k` of degree `2^(k-1)`: `D_1` is the line, and `D_k`
/// replaces each unbounded edge of `D_(k-1)` by a new bottom floor carrying
/// two unbounded edges. Floors are numbered from the top down.
pub fn build_dk(k: u32) -> Option<FloorDiagram> {
    if k == 0 || k > 16 {
        return None;
    }
    let mut unbounded = vec![1u32];
    let mut edges: Vec<(usize, usize, u32)> = Vec::new();
    for _ in 1..k {
        let ends: Vec<usize> = (0..unbounded.len())
            .flat_map(|v| std::iter::repeat(v).take(unbounded[v] as usize))
            .collect();
        for v in ends {
            unbounded[v] -= 1;
            unbounded.push(2);
            edges.push((unbounded.len() - 1, v, 1));
        }
    }
    Some(FloorDiagram::from_parts(&unbounded, &edges))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DkCheck {
    pub k: u32,
    pub direct: BigUint,
    pub recursion: BigUint,
    pub holds: bool,
}

/// Marking count of `D_k` from the recursion
/// `nu(D_k) = nu(D_(k-1))^2 / 2 * C(3 * 2^(k-1) - 4, 3 * 2^(k-2) - 2)`
/// with `nu(D_1) = 1`.
pub fn dk_markings_by_recursion(k: u32) -> Option<BigUint> {
    if k == 0 {
        return None;
    }
    let mut nu = BigUint::one();
    for j in 2..=k {
        let n = 3 * (1u64 << (j - 1)) - 4;
        let r = 3 * (1i64 << (j - 2)) - 2;
        let (half, rem) = (&nu * &nu * binomial(n, r)).div_rem(&BigUint::from(2u32));
        if !rem.is_zero() {
            return None;
        }
        nu = half;
    }
    Some(nu)
}

/// Compares the direct marking count of `D_k` with the recursion, for
/// `2 <= k <= 4`.
pub fn check_dk_recursion(k: u32) -> Result<DkCheck, DiagramError> {
    if !(2..=4).contains(&k) {
        return Err(DiagramError::Internal(format!(
            "D_k recursion check supports 2 <= k <= 4, got {k}"
        )));
    }
    let diagram = build_dk(k).expect("k is in range");
    let direct = diagram.count_markings()?;
    let recursion = dk_markings_by_recursion(k)
        .ok_or_else(|| DiagramError::Internal("odd value in the D_k recursion".into()))?;
    Ok(DkCheck {
        k,
        holds: direct == recursion,
        direct,
        recursion,
    })
}
