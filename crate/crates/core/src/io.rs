//! JSON input documents.
//!
//! A diagram is `{"ambient_dim": N, "support": [[i_1, …, i_N], …]}`; a tuple
//! is `{"n": n, "r": r, "diagrams": [<diagram>, …]}`; a lattice polytope is
//! `{"ambient_dim": N, "vertices": [[…], …]}`. Errors name the offending
//! field path, e.g. `diagrams[1].support[0][2]`.

use serde_json::Value;

use crate::error::{Error, Result};
use crate::lattice::{polytope_from_integer_points, MAX_DIM};
use crate::newton::{DiagramTuple, NewtonDiagram, SupportSet};
use crate::Polytope;

/// A parsed input file.
#[derive(Debug, Clone)]
pub enum InputDocument {
    Diagram(NewtonDiagram),
    Tuple(DiagramTuple),
    Polytope(Polytope),
}

impl InputDocument {
    /// The document as a tuple; a single diagram becomes a hypersurface.
    pub fn into_tuple(self) -> Result<DiagramTuple> {
        match self {
            Self::Diagram(g) => Ok(DiagramTuple::single(g)),
            Self::Tuple(t) => Ok(t),
            Self::Polytope(_) => Err(Error::Input("expected a diagram or diagram tuple, found a polytope".into())),
        }
    }

    pub fn into_diagram(self) -> Result<NewtonDiagram> {
        match self {
            Self::Diagram(g) => Ok(g),
            Self::Tuple(t) if t.r() == 1 => Ok(t.diagrams()[0].clone()),
            Self::Tuple(t) => Err(Error::Input(format!("expected a single diagram, found a tuple of {}", t.r()))),
            Self::Polytope(_) => Err(Error::Input("expected a diagram, found a polytope".into())),
        }
    }
}

fn at(path: &str, msg: impl std::fmt::Display) -> Error {
    Error::Input(format!("{path}: {msg}"))
}

fn field<'a>(obj: &'a Value, path: &str, name: &str) -> Result<&'a Value> {
    obj.get(name).ok_or_else(|| at(path, format!("missing field \"{name}\"")))
}

fn join(path: &str, name: &str) -> String {
    if path.is_empty() {
        name.to_string()
    } else {
        format!("{path}.{name}")
    }
}

fn as_usize(v: &Value, path: &str) -> Result<usize> {
    v.as_u64()
        .and_then(|x| usize::try_from(x).ok())
        .ok_or_else(|| at(path, format!("expected a non-negative integer, found {v}")))
}

fn integer_points(v: &Value, path: &str, dim: usize, allow_negative: bool) -> Result<Vec<Vec<i64>>> {
    let rows = v.as_array().ok_or_else(|| at(path, "expected an array of points"))?;
    if rows.is_empty() {
        return Err(at(path, "no points"));
    }
    rows.iter()
        .enumerate()
        .map(|(i, row)| {
            let p = format!("{path}[{i}]");
            let coords = row.as_array().ok_or_else(|| at(&p, "expected an array of integers"))?;
            if coords.len() != dim {
                return Err(at(&p, format!("has {} coordinates, ambient_dim is {dim}", coords.len())));
            }
            coords
                .iter()
                .enumerate()
                .map(|(j, c)| {
                    let q = format!("{p}[{j}]");
                    let x = c.as_i64().ok_or_else(|| at(&q, format!("expected an integer, found {c}")))?;
                    if x < 0 && !allow_negative {
                        return Err(at(&q, format!("negative exponent {x}")));
                    }
                    Ok(x)
                })
                .collect()
        })
        .collect()
}

fn ambient_dim(obj: &Value, path: &str) -> Result<usize> {
    let p = join(path, "ambient_dim");
    let n = as_usize(field(obj, path, "ambient_dim")?, &p)?;
    if n == 0 || n > MAX_DIM {
        return Err(at(&p, format!("must lie in 1..={MAX_DIM}, found {n}")));
    }
    Ok(n)
}

fn diagram_at(obj: &Value, path: &str) -> Result<NewtonDiagram> {
    if !obj.is_object() {
        return Err(at(if path.is_empty() { "document" } else { path }, "expected an object"));
    }
    let n = ambient_dim(obj, path)?;
    let sp = join(path, "support");
    let points = integer_points(field(obj, path, "support")?, &sp, n, false)?;
    if let Some(i) = points.iter().position(|p| p.iter().all(|&x| x == 0)) {
        return Err(at(&format!("{sp}[{i}]"), "the origin cannot be in the support of a singular germ"));
    }
    let support = SupportSet::new(n, points).map_err(|e| at(&sp, e))?;
    NewtonDiagram::from_support(&support).map_err(|e| at(&sp, e))
}

fn tuple_at(obj: &Value) -> Result<DiagramTuple> {
    let n = as_usize(field(obj, "", "n")?, "n")?;
    let r = as_usize(field(obj, "", "r")?, "r")?;
    let list = field(obj, "", "diagrams")?.as_array().ok_or_else(|| at("diagrams", "expected an array"))?;
    if r == 0 {
        return Err(at("r", "must be positive"));
    }
    if list.len() != r {
        return Err(at("diagrams", format!("has {} entries but r = {r}", list.len())));
    }
    let diagrams = list
        .iter()
        .enumerate()
        .map(|(i, d)| {
            let path = format!("diagrams[{i}]");
            let g = diagram_at(d, &path)?;
            if g.ambient_dim() != n + r {
                return Err(at(&join(&path, "ambient_dim"), format!("is {} but n + r = {}", g.ambient_dim(), n + r)));
            }
            Ok(g)
        })
        .collect::<Result<Vec<_>>>()?;
    DiagramTuple::new(diagrams).map_err(|e| at("diagrams", e))
}

fn polytope_at(obj: &Value) -> Result<Polytope> {
    let n = ambient_dim(obj, "")?;
    let points = integer_points(field(obj, "", "vertices")?, "vertices", n, true)?;
    polytope_from_integer_points(&points).map_err(|e| at("vertices", e))
}

/// Parse a diagram, tuple or polytope document.
pub fn parse_document(text: &str) -> Result<InputDocument> {
    let value: Value = serde_json::from_str(text)
        .map_err(|e| Error::Input(format!("line {}, column {}: {e}", e.line(), e.column())))?;
    let obj = value.as_object().ok_or_else(|| at("document", "expected a JSON object"))?;
    if obj.contains_key("diagrams") {
        tuple_at(&value).map(InputDocument::Tuple)
    } else if obj.contains_key("support") {
        diagram_at(&value, "").map(InputDocument::Diagram)
    } else if obj.contains_key("vertices") {
        polytope_at(&value).map(InputDocument::Polytope)
    } else {
        Err(at("document", "expected a \"support\", \"diagrams\" or \"vertices\" field"))
    }
}

pub fn parse_diagram(text: &str) -> Result<NewtonDiagram> {
    parse_document(text)?.into_diagram()
}

pub fn parse_tuple(text: &str) -> Result<DiagramTuple> {
    parse_document(text)?.into_tuple()
}

/// The diagram document for `g` (its vertices as the support).
pub fn diagram_to_json(g: &NewtonDiagram) -> Value {
    let support: Vec<Value> = g
        .vertex_strings()
        .into_iter()
        .map(|v| v.into_iter().map(|s| Value::from(s.parse::<i64>().unwrap_or_default())).collect())
        .collect();
    serde_json::json!({ "ambient_dim": g.ambient_dim(), "support": support })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn err(text: &str) -> String {
        match parse_document(text) {
            Err(Error::Input(m)) => m,
            other => panic!("expected input error, got {other:?}"),
        }
    }

    #[test]
    fn parses_diagram_and_tuple() {
        let g = parse_diagram(r#"{"ambient_dim": 3, "support": [[3,0,0],[0,3,0],[0,0,3],[1,1,1]]}"#).unwrap();
        assert_eq!(g, NewtonDiagram::homogeneous(3, 3).unwrap());
        let t = parse_tuple(
            r#"{"n": 1, "r": 2, "diagrams": [
                {"ambient_dim": 3, "support": [[2,0,0],[0,2,0],[0,0,2]]},
                {"ambient_dim": 3, "support": [[3,0,0],[0,3,0],[0,0,3]]}]}"#,
        )
        .unwrap();
        assert_eq!((t.n(), t.r()), (1, 2));
        let single = parse_tuple(r#"{"ambient_dim": 2, "support": [[2,0],[0,2]]}"#).unwrap();
        assert_eq!((single.n(), single.r()), (1, 1));
    }

    #[test]
    fn parses_polytope() {
        match parse_document(r#"{"ambient_dim": 2, "vertices": [[0,0],[2,0],[0,-2]]}"#).unwrap() {
            InputDocument::Polytope(p) => assert_eq!(p.vertices().len(), 3),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn diagnostics_name_fields() {
        assert!(err(r#"{"ambient_dim": 2, "support": [[2,0],[0,-1]]}"#).starts_with("support[1][1]: negative exponent"));
        assert!(err(r#"{"ambient_dim": 2, "support": [[2,0],[0,1,1]]}"#).starts_with("support[1]: has 3 coordinates"));
        assert!(err(r#"{"ambient_dim": 2}"#).contains("expected a \"support\""));
        assert!(err(r#"{"n": 1, "r": 1, "diagrams": [{"ambient_dim": 2}]}"#)
            .starts_with("diagrams[0]: missing field \"support\""));
        assert!(err(r#"{"ambient_dim": 2, "support": [[0,0],[1,1]]}"#).starts_with("support[0]: the origin"));
        assert!(
            err(r#"{"ambient_dim": 2, "support": [[2,0],[0,"x"]]}"#).starts_with("support[1][1]: expected an integer")
        );
        let t = err(r#"{"n": 1, "r": 2, "diagrams": [
                {"ambient_dim": 3, "support": [[2,0,0],[0,2,0],[0,0,2]]},
                {"ambient_dim": 2, "support": [[3,0],[0,3]]}]}"#);
        assert!(t.starts_with("diagrams[1].ambient_dim: is 2 but n + r = 3"), "{t}");
        assert!(err(r#"{"n": 1, "r": 3, "diagrams": []}"#).starts_with("diagrams: has 0 entries"));
        let syntax = err("{\n  \"ambient_dim\": 2,\n  oops");
        assert!(syntax.starts_with("line 3"), "{syntax}");
        assert!(err("[1, 2]").starts_with("document"));
    }

    #[test]
    fn round_trip() {
        let g = NewtonDiagram::from_exponents(3, &[&[4, 0, 0], &[0, 3, 0], &[0, 0, 5], &[1, 1, 1]]).unwrap();
        let back = parse_diagram(&diagram_to_json(&g).to_string()).unwrap();
        assert_eq!(back, g);
    }
}
