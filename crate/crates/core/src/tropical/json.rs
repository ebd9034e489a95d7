//! JSON form of tropical curves. Coordinates are strings `"p/q"` with
//! `q > 0` and `gcd(p, q) = 1`, or plain integers `"p"`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use super::{BoundedEdge, TropicalCurve, TropicalError, UnboundedEdge, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurveJson {
    pub vertices: Vec<CurveVertexJson>,
    pub edges: Vec<CurveEdgeJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurveVertexJson {
    pub id: String,
    #[serde(serialize_with = "write_rational", deserialize_with = "read_rational")]
    pub x: BigRational,
    #[serde(serialize_with = "write_rational", deserialize_with = "read_rational")]
    pub y: BigRational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum CurveEdgeJson {
    Bounded { v1: String, v2: String, weight: u32 },
    Unbounded { v: String, dir: [i64; 2], weight: u32 },
}

/// Parses `"p/q"` (reduced, `q > 0`) or `"p"`.
pub fn parse_rational(s: &str) -> Result<BigRational, String> {
    let s = s.trim();
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), Some(q.trim())),
        None => (s, None),
    };
    let p: BigInt = p
        .parse()
        .map_err(|_| format!("`{s}` is not a rational of the form p/q"))?;
    let Some(q) = q else {
        return Ok(BigRational::from_integer(p));
    };
    let q: BigInt = q
        .parse()
        .map_err(|_| format!("`{s}` is not a rational of the form p/q"))?;
    if !q.is_positive() {
        return Err(format!("`{s}` needs a positive denominator"));
    }
    if !p.gcd(&q).is_one() {
        return Err(format!("`{s}` is not in lowest terms"));
    }
    Ok(BigRational::new_raw(p, q))
}

pub fn format_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn read_rational<'de, D: Deserializer<'de>>(d: D) -> Result<BigRational, D::Error> {
    let s = String::deserialize(d)?;
    parse_rational(&s).map_err(de::Error::custom)
}

fn write_rational<S: Serializer>(r: &BigRational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&format_rational(r))
}

impl TryFrom<CurveJson> for TropicalCurve {
    type Error = TropicalError;

    fn try_from(json: CurveJson) -> Result<Self, Self::Error> {
        let mut vertices: Vec<Vertex> = Vec::with_capacity(json.vertices.len());
        for v in json.vertices {
            if vertices.iter().any(|w| w.id == v.id) {
                return Err(TropicalError::Parse(format!("duplicate vertex id `{}`", v.id)));
            }
            vertices.push(Vertex {
                id: v.id,
                x: v.x,
                y: v.y,
            });
        }
        let index = |id: &str| {
            vertices
                .iter()
                .position(|v| v.id == id)
                .ok_or_else(|| TropicalError::UnknownVertex(id.to_string()))
        };
        let mut curve = TropicalCurve::default();
        for e in json.edges {
            match e {
                CurveEdgeJson::Bounded { v1, v2, weight } => curve.bounded.push(BoundedEdge {
                    v1: index(&v1)?,
                    v2: index(&v2)?,
                    weight,
                }),
                CurveEdgeJson::Unbounded { v, dir, weight } => {
                    curve.unbounded.push(UnboundedEdge {
                        vertex: index(&v)?,
                        direction: (dir[0], dir[1]),
                        weight,
                    })
                }
            }
        }
        curve.vertices = vertices;
        Ok(curve)
    }
}

impl From<&TropicalCurve> for CurveJson {
    fn from(c: &TropicalCurve) -> Self {
        let id = |v: usize| c.vertices[v].id.clone();
        CurveJson {
            vertices: c
                .vertices
                .iter()
                .map(|v| CurveVertexJson {
                    id: v.id.clone(),
                    x: v.x.clone(),
                    y: v.y.clone(),
                })
                .collect(),
            edges: c
                .bounded
                .iter()
                .map(|e| CurveEdgeJson::Bounded {
                    v1: id(e.v1),
                    v2: id(e.v2),
                    weight: e.weight,
                })
                .chain(c.unbounded.iter().map(|e| CurveEdgeJson::Unbounded {
                    v: id(e.vertex),
                    dir: [e.direction.0, e.direction.1],
                    weight: e.weight,
                }))
                .collect(),
        }
    }
}

impl TropicalCurve {
    /// Parses the JSON form. Syntax and field errors carry line and column.
    pub fn parse_json(text: &str) -> Result<Self, TropicalError> {
        let json: CurveJson =
            serde_json::from_str(text).map_err(|e| TropicalError::Parse(e.to_string()))?;
        TropicalCurve::try_from(json)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&CurveJson::from(self)).expect("curve JSON is serializable")
    }
}
