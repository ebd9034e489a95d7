//! Exact pairwise intersection tests between segments and rays.

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::{EdgeRef, TropicalCurve};
use crate::report::ValidationReport;

type Point = (BigRational, BigRational);

/// `start + t * dir` for `t` in `[0, 1]` (segment) or `[0, inf)` (ray).
struct Piece {
    start: Point,
    dir: Point,
    ray: bool,
    ends: Vec<usize>,
}

fn cross(a: &Point, b: &Point) -> BigRational {
    &a.0 * &b.1 - &a.1 * &b.0
}

fn dot(a: &Point, b: &Point) -> BigRational {
    &a.0 * &b.0 + &a.1 * &b.1
}

fn sub(a: &Point, b: &Point) -> Point {
    (&a.0 - &b.0, &a.1 - &b.1)
}

fn at(p: &Piece, t: &BigRational) -> Point {
    (&p.start.0 + &p.dir.0 * t, &p.start.1 + &p.dir.1 * t)
}

impl Piece {
    fn of(curve: &TropicalCurve, edge: EdgeRef) -> Piece {
        let point = |v: usize| (curve.vertices[v].x.clone(), curve.vertices[v].y.clone());
        match edge {
            EdgeRef::Bounded(i) => {
                let e = &curve.bounded[i];
                let (a, b) = (point(e.v1), point(e.v2));
                Piece {
                    dir: sub(&b, &a),
                    start: a,
                    ray: false,
                    ends: vec![e.v1, e.v2],
                }
            }
            EdgeRef::Unbounded(i) => {
                let e = &curve.unbounded[i];
                Piece {
                    start: point(e.vertex),
                    dir: (
                        BigRational::from_integer(e.direction.0.into()),
                        BigRational::from_integer(e.direction.1.into()),
                    ),
                    ray: true,
                    ends: vec![e.vertex],
                }
            }
        }
    }

    fn contains_param(&self, t: &BigRational) -> bool {
        !t.is_negative() && (self.ray || *t <= BigRational::from_integer(1.into()))
    }
}

enum Meeting {
    None,
    Point(Point),
    Overlap,
}

fn meet(p: &Piece, q: &Piece) -> Meeting {
    let offset = sub(&q.start, &p.start);
    let c = cross(&p.dir, &q.dir);
    if !c.is_zero() {
        let t = cross(&offset, &q.dir) / &c;
        let s = cross(&offset, &p.dir) / &c;
        return if p.contains_param(&t) && q.contains_param(&s) {
            Meeting::Point(at(p, &t))
        } else {
            Meeting::None
        };
    }
    if !cross(&offset, &p.dir).is_zero() {
        return Meeting::None;
    }
    // Collinear: express q as an interval of parameters along p.
    let norm = dot(&p.dir, &p.dir);
    let a = dot(&offset, &p.dir) / &norm;
    let slope = dot(&q.dir, &p.dir) / &norm;
    let (lo, hi): (Option<BigRational>, Option<BigRational>) = if q.ray {
        if slope.is_positive() {
            (Some(a), None)
        } else {
            (None, Some(a))
        }
    } else {
        let b = &a + &slope;
        if a <= b {
            (Some(a), Some(b))
        } else {
            (Some(b), Some(a))
        }
    };
    let p_lo = BigRational::zero();
    let p_hi = if p.ray {
        None
    } else {
        Some(BigRational::from_integer(1.into()))
    };
    let lo = match lo {
        Some(l) if l > p_lo => l,
        _ => p_lo,
    };
    let hi = match (hi, p_hi) {
        (Some(a), Some(b)) => Some(if a < b { a } else { b }),
        (Some(a), None) | (None, Some(a)) => Some(a),
        (None, None) => None,
    };
    match hi {
        Some(h) if h < lo => Meeting::None,
        Some(h) if h == lo => Meeting::Point(at(p, &lo)),
        _ => Meeting::Overlap,
    }
}

/// Every pair of edges may only meet at a vertex they share.
pub(super) fn check_intersections(curve: &TropicalCurve) -> ValidationReport {
    let mut report = ValidationReport::new();
    let edges: Vec<EdgeRef> = curve.edge_refs().collect();
    let pieces: Vec<Piece> = edges.iter().map(|&e| Piece::of(curve, e)).collect();
    for i in 0..pieces.len() {
        for j in i + 1..pieces.len() {
            let (p, q) = (&pieces[i], &pieces[j]);
            let allowed = match meet(p, q) {
                Meeting::None => true,
                Meeting::Overlap => false,
                Meeting::Point(x) => p.ends.iter().any(|&v| {
                    q.ends.contains(&v) && curve.vertices[v].x == x.0 && curve.vertices[v].y == x.1
                }),
            };
            if !allowed {
                report.push(
                    "intersections",
                    format!("edges {} and {} meet away from a shared vertex", edges[i], edges[j]),
                );
            }
        }
    }
    report
}
