//! Path-tracking accessors over `serde_json::Value`.

use num_bigint::BigInt;
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::field::rational::{format_rational, parse_rational};
use crate::field::{Field, FieldElem, KVector};

pub const SCHEMA_VERSION: u64 = 1;

/// A JSON node and the path leading to it, e.g. `$.polytope.halfspaces[2].lambda`.
#[derive(Clone, Copy)]
pub struct Node<'a> {
    pub value: &'a Value,
    path: &'a str,
}

pub struct Owned {
    value: Value,
}

impl Owned {
    pub fn parse(text: &str) -> Result<Owned> {
        let value = serde_json::from_str(text).map_err(|e| Error::parse("$", format!("invalid JSON: {e}")))?;
        Ok(Owned { value })
    }

    pub fn root(&self) -> Node<'_> {
        Node { value: &self.value, path: "$" }
    }
}

impl<'a> Node<'a> {
    pub fn new(value: &'a Value, path: &'a str) -> Self {
        Node { value, path }
    }

    pub fn path(&self) -> &str {
        self.path
    }

    pub fn err(&self, message: impl Into<String>) -> Error {
        Error::parse(self.path, message)
    }

    pub fn object(&self) -> Result<&'a Map<String, Value>> {
        self.value.as_object().ok_or_else(|| self.err("expected an object"))
    }

    pub fn array(&self) -> Result<&'a Vec<Value>> {
        self.value.as_array().ok_or_else(|| self.err("expected an array"))
    }

    pub fn str(&self) -> Result<&'a str> {
        self.value.as_str().ok_or_else(|| self.err("expected a string"))
    }

    pub fn usize(&self) -> Result<usize> {
        self.value
            .as_u64()
            .map(|x| x as usize)
            .ok_or_else(|| self.err("expected a non-negative integer"))
    }

    pub fn bool(&self) -> Result<bool> {
        self.value.as_bool().ok_or_else(|| self.err("expected a boolean"))
    }

    pub fn bigint(&self) -> Result<BigInt> {
        match self.value {
            Value::Number(n) => n
                .as_i64()
                .map(BigInt::from)
                .ok_or_else(|| self.err("expected an integer")),
            Value::String(s) => {
                let r = parse_rational(s).map_err(|_| self.err(format!("malformed integer {s:?}")))?;
                if !r.is_integer() {
                    return Err(self.err(format!("expected an integer, got {s:?}")));
                }
                Ok(r.to_integer())
            }
            _ => Err(self.err("expected an integer")),
        }
    }

    pub fn has(&self, key: &str) -> bool {
        self.value.get(key).is_some_and(|v| !v.is_null())
    }
}

/// Visits a required key with its qualified path.
pub fn with_key<T>(node: Node<'_>, key: &str, f: impl FnOnce(Node<'_>) -> Result<T>) -> Result<T> {
    let obj = node.object()?;
    let path = format!("{}.{key}", node.path());
    match obj.get(key) {
        Some(v) => f(Node::new(v, &path)),
        None => Err(Error::parse(path, "missing required key")),
    }
}

/// Visits an optional key; `None` when absent or null.
pub fn with_opt_key<T>(node: Node<'_>, key: &str, f: impl FnOnce(Node<'_>) -> Result<T>) -> Result<Option<T>> {
    let obj = node.object()?;
    let path = format!("{}.{key}", node.path());
    match obj.get(key) {
        Some(Value::Null) | None => Ok(None),
        Some(v) => f(Node::new(v, &path)).map(Some),
    }
}

pub fn each<T>(node: Node<'_>, mut f: impl FnMut(Node<'_>) -> Result<T>) -> Result<Vec<T>> {
    node.array()?
        .iter()
        .enumerate()
        .map(|(i, v)| {
            let path = format!("{}[{i}]", node.path());
            f(Node::new(v, &path))
        })
        .collect()
}

pub fn check_version(node: Node<'_>) -> Result<()> {
    with_key(node, "schema_version", |v| {
        let n = v.usize()?;
        if n as u64 != SCHEMA_VERSION {
            return Err(v.err(format!("unsupported schema version {n}")));
        }
        Ok(())
    })
}

pub fn check_kind(node: Node<'_>, expected: &str) -> Result<()> {
    with_opt_key(node, "kind", |v| {
        let k = v.str()?;
        if k != expected {
            return Err(v.err(format!("expected kind {expected:?}, found {k:?}")));
        }
        Ok(())
    })
    .map(|_| ())
}

pub fn read_field(root: Node<'_>) -> Result<Field> {
    with_key(root, "field", |f| {
        with_key(f, "D", |d| {
            let n = d.usize()? as u64;
            Field::new(n).map_err(|e| d.err(e.to_string()))
        })
    })
}

pub fn write_field(field: Field) -> Value {
    json!({ "D": field.d() })
}

fn rational_at(node: Node<'_>) -> Result<crate::field::Rational> {
    let s = match node.value {
        Value::String(s) => s.clone(),
        Value::Number(n) if n.is_i64() => n.to_string(),
        _ => return Err(node.err("expected a rational string \"p/q\"")),
    };
    parse_rational(&s).map_err(|e| match e {
        Error::Parse { message, .. } => node.err(message),
        other => node.err(other.to_string()),
    })
}

/// `{"a": "p/q", "b": "r/s"}`, or a bare text form such as `"1/2+1/2√5"`.
pub fn read_elem(field: Field, node: Node<'_>) -> Result<FieldElem> {
    match node.value {
        Value::Object(_) => {
            let a = with_key(node, "a", rational_at)?;
            let b = with_opt_key(node, "b", rational_at)?.unwrap_or_default();
            field.elem(a, b).map_err(|e| node.err(e.to_string()))
        }
        Value::String(s) => field.parse(s).map_err(|e| match e {
            Error::FieldMismatch(..) => e,
            Error::Parse { message, .. } => node.err(message),
            other => node.err(other.to_string()),
        }),
        Value::Number(_) => Ok(field.rational(rational_at(node)?)),
        _ => Err(node.err("expected a field element")),
    }
}

pub fn write_elem(x: &FieldElem) -> Value {
    json!({ "a": format_rational(x.a()), "b": format_rational(x.b()) })
}

pub fn read_vector(field: Field, node: Node<'_>, dim: Option<usize>) -> Result<KVector> {
    let v = KVector::new(each(node, |e| read_elem(field, e))?);
    if let Some(n) = dim {
        if v.dim() != n {
            return Err(node.err(format!("expected {n} entries, found {}", v.dim())));
        }
    }
    Ok(v)
}

pub fn write_vector(v: &KVector) -> Value {
    Value::Array(v.iter().map(write_elem).collect())
}

pub fn read_ints(node: Node<'_>) -> Result<Vec<BigInt>> {
    each(node, |e| e.bigint())
}

pub fn write_ints(xs: &[BigInt]) -> Value {
    Value::Array(
        xs.iter()
            .map(|x| match i64::try_from(x) {
                Ok(i) => json!(i),
                Err(_) => json!(x.to_string()),
            })
            .collect(),
    )
}

/// Pretty JSON with sorted keys and a trailing newline.
pub fn to_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}
