//! JSON form of a floor diagram:
//!
//! ```json
//! {"degree": 2, "genus": 0,
//!  "vertices": [{"id": "v1", "unbounded": 2}, {"id": "v2", "unbounded": 0}],
//!  "edges": [{"source": "v1", "target": "v2", "weight": 1}]}
//! ```

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::{DiagramError, Edge, Floor, FloorDiagram};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DiagramJson {
    pub degree: u32,
    pub genus: u32,
    pub vertices: Vec<VertexJson>,
    pub edges: Vec<EdgeJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VertexJson {
    pub id: String,
    pub unbounded: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeJson {
    pub source: String,
    pub target: String,
    pub weight: u32,
}

impl TryFrom<DiagramJson> for FloorDiagram {
    type Error = DiagramError;

    fn try_from(json: DiagramJson) -> Result<Self, Self::Error> {
        let mut index = HashMap::new();
        for (i, v) in json.vertices.iter().enumerate() {
            if index.insert(v.id.clone(), i).is_some() {
                return Err(DiagramError::DuplicateVertex(v.id.clone()));
            }
        }
        let lookup = |id: &str| {
            index
                .get(id)
                .copied()
                .ok_or_else(|| DiagramError::UnknownVertex(id.to_string()))
        };
        let edges = json
            .edges
            .iter()
            .map(|e| {
                Ok(Edge {
                    source: lookup(&e.source)?,
                    target: lookup(&e.target)?,
                    weight: e.weight,
                })
            })
            .collect::<Result<_, DiagramError>>()?;
        Ok(FloorDiagram {
            degree: json.degree,
            genus: json.genus,
            floors: json
                .vertices
                .into_iter()
                .map(|v| Floor {
                    id: v.id,
                    unbounded: v.unbounded,
                })
                .collect(),
            edges,
        })
    }
}

impl From<&FloorDiagram> for DiagramJson {
    fn from(d: &FloorDiagram) -> Self {
        let id = |i: usize| {
            d.floors
                .get(i)
                .map_or_else(|| format!("#{i}"), |f| f.id.clone())
        };
        DiagramJson {
            degree: d.degree,
            genus: d.genus,
            vertices: d
                .floors
                .iter()
                .map(|f| VertexJson {
                    id: f.id.clone(),
                    unbounded: f.unbounded,
                })
                .collect(),
            edges: d
                .edges
                .iter()
                .map(|e| EdgeJson {
                    source: id(e.source),
                    target: id(e.target),
                    weight: e.weight,
                })
                .collect(),
        }
    }
}

impl Serialize for FloorDiagram {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        DiagramJson::from(self).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for FloorDiagram {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let json = DiagramJson::deserialize(deserializer)?;
        FloorDiagram::try_from(json).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::*;

    #[test]
    fn parses_documented_form() {
        let text = r#"{"degree": 2, "genus": 0,
            "vertices": [{"id": "v1", "unbounded": 2}, {"id": "v2", "unbounded": 0}],
            "edges": [{"source": "v1", "target": "v2", "weight": 1}]}"#;
        let d: FloorDiagram = serde_json::from_str(text).unwrap();
        assert_eq!(d, conic());
    }

    #[test]
    fn round_trips() {
        let d = cubic_star();
        let text = serde_json::to_string(&d).unwrap();
        assert_eq!(serde_json::from_str::<FloorDiagram>(&text).unwrap(), d);
    }

    #[test]
    fn rejects_unknown_fields_and_ids() {
        let extra = r#"{"degree": 1, "genus": 0, "color": 3,
            "vertices": [{"id": "v1", "unbounded": 1}], "edges": []}"#;
        assert!(serde_json::from_str::<FloorDiagram>(extra).is_err());
        let dangling = r#"{"degree": 1, "genus": 0,
            "vertices": [{"id": "v1", "unbounded": 1}],
            "edges": [{"source": "v1", "target": "v9", "weight": 1}]}"#;
        let err = serde_json::from_str::<FloorDiagram>(dangling).unwrap_err();
        assert!(err.to_string().contains("v9"));
        let duplicate = r#"{"degree": 1, "genus": 0,
            "vertices": [{"id": "v1", "unbounded": 1}, {"id": "v1", "unbounded": 0}],
            "edges": []}"#;
        assert!(serde_json::from_str::<FloorDiagram>(duplicate).is_err());
    }
}
