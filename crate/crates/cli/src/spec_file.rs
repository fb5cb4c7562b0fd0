//! The `leibniz-spec/1` JSON exchange format.
//!
//! Scalars are strings in canonical form (`"3"`, `"-1/2"`, `"4 mod 7"`) and
//! object keys are always written in sorted order, so serializing a parsed
//! canonical file reproduces it byte for byte.

use std::collections::BTreeMap;

use kupershmidt::algebra::{LeibnizAlgebra, Representation, TwilledContext};
use kupershmidt::cochain::Cochain;
use kupershmidt::forms::{BilinearForm, Symmetry, Tensor2};
use kupershmidt::linear::{FieldSpec, Matrix, Scalar, Vector};
use kupershmidt::pairs::{KnMode, KnStructure};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{CliError, CliResult};

pub const SCHEMA: &str = "leibniz-spec/1";

type RawMatrix = Vec<Vec<String>>;

fn is_false(b: &bool) -> bool {
    !*b
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
#[serde(deny_unknown_fields)]
struct RawFile {
    schema: String,
    field: String,
    objects: BTreeMap<String, RawObject>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    expected: Vec<Expectation>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
#[serde(deny_unknown_fields)]
struct RawBracket {
    i: usize,
    j: usize,
    value: Vec<String>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
enum RawObject {
    Algebra {
        dim: usize,
        brackets: Vec<RawBracket>,
        #[serde(default, skip_serializing_if = "is_false")]
        verified: bool,
    },
    Representation {
        algebra: String,
        mdim: usize,
        left: Vec<RawMatrix>,
        right: Vec<RawMatrix>,
        #[serde(default, skip_serializing_if = "is_false")]
        verified: bool,
    },
    Operator {
        matrix: RawMatrix,
        #[serde(default, skip_serializing_if = "is_false")]
        verified: bool,
    },
    Cochain {
        dim: usize,
        arity: usize,
        values: Vec<Vec<String>>,
        #[serde(default, skip_serializing_if = "is_false")]
        verified: bool,
    },
    Tensor2 {
        matrix: RawMatrix,
        #[serde(default, skip_serializing_if = "is_false")]
        verified: bool,
    },
    Form {
        matrix: RawMatrix,
        symmetry: String,
        #[serde(default, skip_serializing_if = "is_false")]
        verified: bool,
    },
    Kn {
        k: RawMatrix,
        n: RawMatrix,
        s: RawMatrix,
        mode: String,
        #[serde(default, skip_serializing_if = "is_false")]
        verified: bool,
    },
    Twilled {
        algebra: String,
        split: usize,
        #[serde(default, skip_serializing_if = "is_false")]
        verified: bool,
    },
}

/// Which check to run on which object, with the ambient objects it needs.
#[derive(Serialize, Deserialize, Clone, Debug, Default, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct CheckRequest {
    pub check: String,
    pub object: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub algebra: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rep: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub twilled: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub with: Vec<String>,
}

impl CheckRequest {
    pub fn new(check: &str, object: &str) -> Self {
        CheckRequest {
            check: check.to_string(),
            object: object.to_string(),
            ..Default::default()
        }
    }
}

/// A check together with the verdict it must reproduce.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct Expectation {
    #[serde(flatten)]
    pub request: CheckRequest,
    pub verdict: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Object {
    Algebra(LeibnizAlgebra),
    Representation {
        algebra: String,
        rep: Representation,
    },
    Operator(Matrix),
    Cochain(Cochain),
    Tensor2(Tensor2),
    Form(BilinearForm),
    Kn(KnStructure),
    Twilled {
        algebra: String,
        ctx: TwilledContext,
    },
}

impl Object {
    pub fn kind(&self) -> &'static str {
        match self {
            Object::Algebra(_) => "algebra",
            Object::Representation { .. } => "representation",
            Object::Operator(_) => "operator",
            Object::Cochain(_) => "cochain",
            Object::Tensor2(_) => "tensor2",
            Object::Form(_) => "form",
            Object::Kn(_) => "kn",
            Object::Twilled { .. } => "twilled",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Entry {
    pub object: Object,
    /// Set only on objects whose defining check was just run.
    pub verified: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecFile {
    pub field: FieldSpec,
    pub objects: BTreeMap<String, Entry>,
    pub expected: Vec<Expectation>,
}

fn parse_err(msg: impl Into<String>) -> CliError {
    CliError::Parse(msg.into())
}

fn scalar(field: FieldSpec, s: &str) -> CliResult<Scalar> {
    field.parse(s).map_err(|e| parse_err(format!("{s:?}: {e}")))
}

fn vector(field: FieldSpec, v: &[String]) -> CliResult<Vector> {
    v.iter().map(|s| scalar(field, s)).collect()
}

fn matrix(field: FieldSpec, raw: &RawMatrix) -> CliResult<Matrix> {
    let rows = raw
        .iter()
        .map(|r| vector(field, r))
        .collect::<CliResult<Vec<_>>>()?;
    Ok(Matrix::from_rows(field, &rows)?)
}

fn square(field: FieldSpec, raw: &RawMatrix, n: usize, what: &str) -> CliResult<Matrix> {
    let m = matrix(field, raw)?;
    if m.rows() != n || m.cols() != n {
        return Err(parse_err(format!("{what} must be {n}x{n}")));
    }
    Ok(m)
}

fn raw_vector(v: &[Scalar]) -> Vec<String> {
    v.iter().map(Scalar::to_canonical).collect()
}

pub(crate) fn raw_matrix(m: &Matrix) -> RawMatrix {
    m.to_rows().iter().map(|r| raw_vector(r)).collect()
}

impl SpecFile {
    pub fn new(field: FieldSpec) -> Self {
        SpecFile {
            field,
            objects: BTreeMap::new(),
            expected: Vec::new(),
        }
    }

    /// Parses a file; `field` overrides the declared field, reducing rational
    /// entries into it.
    pub fn parse(text: &str, field: Option<FieldSpec>) -> CliResult<Self> {
        let raw: RawFile = serde_json::from_str(text).map_err(|e| parse_err(e.to_string()))?;
        if raw.schema != SCHEMA {
            return Err(parse_err(format!("unsupported schema {:?}", raw.schema)));
        }
        let declared: FieldSpec = raw
            .field
            .parse()
            .map_err(|e| parse_err(format!("field {:?}: {e}", raw.field)))?;
        let field = field.unwrap_or(declared);
        let mut out = SpecFile::new(field);

        // Algebras first: representations and twilled entries refer to them.
        let (algebras, rest): (Vec<_>, Vec<_>) = raw
            .objects
            .iter()
            .partition(|(_, o)| matches!(o, RawObject::Algebra { .. }));
        for (name, obj) in algebras.into_iter().chain(rest) {
            let entry = out.resolve(name, obj)?;
            out.objects.insert(name.clone(), entry);
        }
        for e in &raw.expected {
            out.require_name(&e.request.object)?;
        }
        out.expected = raw.expected;
        Ok(out)
    }

    fn require_name(&self, name: &str) -> CliResult<()> {
        if self.objects.contains_key(name) || ["zero", "identity"].contains(&name) {
            Ok(())
        } else {
            Err(CliError::UnknownObject(name.to_string()))
        }
    }

    fn resolve(&self, name: &str, obj: &RawObject) -> CliResult<Entry> {
        let f = self.field;
        let ctx = |e: CliError| parse_err(format!("object {name:?}: {e}"));
        let (object, verified) = match obj {
            RawObject::Algebra {
                dim,
                brackets,
                verified,
            } => {
                let mut alg = LeibnizAlgebra::abelian(f, *dim);
                let mut table = alg.table().to_vec();
                for b in brackets {
                    if b.i >= *dim || b.j >= *dim || b.value.len() != *dim {
                        return Err(ctx(parse_err(format!(
                            "bracket [e{}, e{}] does not fit dimension {dim}",
                            b.i, b.j
                        ))));
                    }
                    table[b.i * dim + b.j] = vector(f, &b.value).map_err(ctx)?;
                }
                alg = LeibnizAlgebra::new(f, *dim, table)?;
                (Object::Algebra(alg), *verified)
            }
            RawObject::Representation {
                algebra,
                mdim,
                left,
                right,
                verified,
            } => {
                let alg = self.algebra(algebra)?.clone();
                let conv = |ms: &[RawMatrix]| -> CliResult<Vec<Matrix>> {
                    ms.iter()
                        .map(|m| square(f, m, *mdim, "action matrix"))
                        .collect()
                };
                let rep = Representation::new(
                    alg,
                    *mdim,
                    conv(left).map_err(ctx)?,
                    conv(right).map_err(ctx)?,
                )
                .map_err(|e| ctx(e.into()))?;
                (
                    Object::Representation {
                        algebra: algebra.clone(),
                        rep,
                    },
                    *verified,
                )
            }
            RawObject::Operator {
                matrix: m,
                verified,
            } => (Object::Operator(matrix(f, m).map_err(ctx)?), *verified),
            RawObject::Cochain {
                dim,
                arity,
                values,
                verified,
            } => {
                let coeffs = values
                    .iter()
                    .map(|v| vector(f, v))
                    .collect::<CliResult<Vec<_>>>()
                    .map_err(ctx)?;
                let c = Cochain::new(f, *dim, *arity, coeffs).map_err(|e| ctx(e.into()))?;
                (Object::Cochain(c), *verified)
            }
            RawObject::Tensor2 {
                matrix: m,
                verified,
            } => {
                let t = Tensor2::new(matrix(f, m).map_err(ctx)?).map_err(|e| ctx(e.into()))?;
                (Object::Tensor2(t), *verified)
            }
            RawObject::Form {
                matrix: m,
                symmetry,
                verified,
            } => {
                let sym = match symmetry.as_str() {
                    "symmetric" => Symmetry::Symmetric,
                    "skew" => Symmetry::Skew,
                    other => return Err(ctx(parse_err(format!("unknown symmetry {other:?}")))),
                };
                let b = BilinearForm::new(matrix(f, m).map_err(ctx)?, sym)
                    .map_err(|e| ctx(e.into()))?;
                (Object::Form(b), *verified)
            }
            RawObject::Kn {
                k,
                n,
                s,
                mode,
                verified,
            } => {
                let mode = match mode.as_str() {
                    "kn" => KnMode::Kn,
                    "dual-kn" => KnMode::DualKn,
                    other => return Err(ctx(parse_err(format!("unknown mode {other:?}")))),
                };
                let (k, n, s) = (
                    matrix(f, k).map_err(ctx)?,
                    matrix(f, n).map_err(ctx)?,
                    matrix(f, s).map_err(ctx)?,
                );
                (Object::Kn(KnStructure::new(k, n, s, mode)), *verified)
            }
            RawObject::Twilled {
                algebra,
                split,
                verified,
            } => {
                let total = self.algebra(algebra)?.clone();
                let ctx_obj = TwilledContext::new(total, *split)?;
                (
                    Object::Twilled {
                        algebra: algebra.clone(),
                        ctx: ctx_obj,
                    },
                    *verified,
                )
            }
        };
        Ok(Entry { object, verified })
    }

    fn raw(&self) -> RawFile {
        let objects = self
            .objects
            .iter()
            .map(|(name, e)| (name.clone(), raw_object(e)))
            .collect();
        RawFile {
            schema: SCHEMA.to_string(),
            field: self.field.to_string(),
            objects,
            expected: self.expected.clone(),
        }
    }

    /// Canonical text: sorted keys, two-space indent, scalar rows inline.
    pub fn to_canonical(&self) -> String {
        let value = serde_json::to_value(self.raw()).expect("spec files serialize");
        canonical_json(&value)
    }

    pub fn get(&self, name: &str) -> CliResult<&Object> {
        self.objects
            .get(name)
            .map(|e| &e.object)
            .ok_or_else(|| CliError::UnknownObject(name.to_string()))
    }

    pub fn algebra(&self, name: &str) -> CliResult<&LeibnizAlgebra> {
        match self.get(name)? {
            Object::Algebra(a) => Ok(a),
            _ => Err(CliError::WrongKind {
                name: name.to_string(),
                expected: "algebra",
            }),
        }
    }

    pub fn insert(&mut self, name: impl Into<String>, object: Object, verified: bool) {
        self.objects.insert(name.into(), Entry { object, verified });
    }

    /// Names of all objects of one kind, in sorted order.
    pub fn names_of(&self, kind: &str) -> Vec<&str> {
        self.objects
            .iter()
            .filter(|(_, e)| e.object.kind() == kind)
            .map(|(n, _)| n.as_str())
            .collect()
    }
}

fn raw_object(e: &Entry) -> RawObject {
    let verified = e.verified;
    match &e.object {
        Object::Algebra(a) => {
            let n = a.dim();
            let mut brackets = Vec::new();
            for i in 0..n {
                for j in 0..n {
                    let v = a.bracket_basis(i, j);
                    if v.iter().any(|s| !s.is_zero()) {
                        brackets.push(RawBracket {
                            i,
                            j,
                            value: raw_vector(v),
                        });
                    }
                }
            }
            RawObject::Algebra {
                dim: n,
                brackets,
                verified,
            }
        }
        Object::Representation { algebra, rep } => RawObject::Representation {
            algebra: algebra.clone(),
            mdim: rep.mdim(),
            left: rep.rho_l().iter().map(raw_matrix).collect(),
            right: rep.rho_r().iter().map(raw_matrix).collect(),
            verified,
        },
        Object::Operator(m) => RawObject::Operator {
            matrix: raw_matrix(m),
            verified,
        },
        Object::Cochain(c) => RawObject::Cochain {
            dim: c.dim(),
            arity: c.arity(),
            values: c.coeffs().iter().map(|v| raw_vector(v)).collect(),
            verified,
        },
        Object::Tensor2(t) => RawObject::Tensor2 {
            matrix: raw_matrix(t.matrix()),
            verified,
        },
        Object::Form(b) => RawObject::Form {
            matrix: raw_matrix(b.matrix()),
            symmetry: match b.symmetry() {
                Symmetry::Symmetric => "symmetric".into(),
                Symmetry::Skew => "skew".into(),
            },
            verified,
        },
        Object::Kn(kn) => RawObject::Kn {
            k: raw_matrix(kn.k()),
            n: raw_matrix(kn.n()),
            s: raw_matrix(kn.s()),
            mode: kn.mode.name().to_string(),
            verified,
        },
        Object::Twilled { algebra, ctx } => RawObject::Twilled {
            algebra: algebra.clone(),
            split: ctx.n1(),
            verified,
        },
    }
}

/// Pretty JSON with keys in sorted order and arrays of scalars on one line.
pub fn canonical_json(value: &Value) -> String {
    let mut out = String::new();
    write_value(value, 0, &mut out);
    out.push('\n');
    out
}

fn is_leaf(v: &Value) -> bool {
    !matches!(v, Value::Array(_) | Value::Object(_))
}

fn write_value(v: &Value, indent: usize, out: &mut String) {
    let pad = |n: usize| "  ".repeat(n);
    match v {
        Value::Object(map) if map.is_empty() => out.push_str("{}"),
        Value::Object(map) => {
            let mut keys: Vec<&String> = map.keys().collect();
            keys.sort();
            out.push_str("{\n");
            for (idx, k) in keys.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                out.push_str(&Value::String((*k).clone()).to_string());
                out.push_str(": ");
                write_value(&map[*k], indent + 1, out);
                if idx + 1 < keys.len() {
                    out.push(',');
                }
                out.push('\n');
            }
            out.push_str(&pad(indent));
            out.push('}');
        }
        Value::Array(items) if items.iter().all(is_leaf) => {
            let parts: Vec<String> = items.iter().map(Value::to_string).collect();
            out.push('[');
            out.push_str(&parts.join(", "));
            out.push(']');
        }
        Value::Array(items) => {
            out.push_str("[\n");
            for (idx, item) in items.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                write_value(item, indent + 1, out);
                if idx + 1 < items.len() {
                    out.push(',');
                }
                out.push('\n');
            }
            out.push_str(&pad(indent));
            out.push(']');
        }
        leaf => out.push_str(&leaf.to_string()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const L2: &str = r#"{
  "field": "Q",
  "objects": {
    "R": {"kind": "operator", "matrix": [["0", "1"], ["0", "-1"]]},
    "alg": {"dim": 2, "kind": "algebra", "brackets": [
      {"i": 1, "j": 0, "value": ["1", "0"]},
      {"i": 1, "j": 1, "value": ["1", "0"]}
    ]}
  },
  "schema": "leibniz-spec/1"
}"#;

    #[test]
    fn parse_and_round_trip() {
        let spec = SpecFile::parse(L2, None).unwrap();
        assert_eq!(spec.names_of("algebra"), vec!["alg"]);
        let text = spec.to_canonical();
        let again = SpecFile::parse(&text, None).unwrap();
        assert_eq!(again, spec);
        assert_eq!(again.to_canonical(), text);
    }

    #[test]
    fn field_override_reduces() {
        let spec = SpecFile::parse(L2, Some(FieldSpec::Prime(2))).unwrap();
        match spec.get("R").unwrap() {
            Object::Operator(m) => assert_eq!(m.get(1, 1), &FieldSpec::Prime(2).one()),
            _ => panic!(),
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            SpecFile::parse("{", None),
            Err(CliError::Parse(_))
        ));
        let bad_scalar = L2.replace("\"-1\"", "\"x\"");
        assert!(matches!(
            SpecFile::parse(&bad_scalar, None),
            Err(CliError::Parse(_))
        ));
        let bad_schema = L2.replace("leibniz-spec/1", "leibniz-spec/0");
        assert!(matches!(
            SpecFile::parse(&bad_schema, None),
            Err(CliError::Parse(_))
        ));
        let bad_kind = L2.replace("\"operator\"", "\"gadget\"");
        assert!(matches!(
            SpecFile::parse(&bad_kind, None),
            Err(CliError::Parse(_))
        ));
    }

    #[test]
    fn inline_scalar_rows() {
        let v: Value = serde_json::from_str(r#"{"b": [["1", "2"]], "a": 1}"#).unwrap();
        assert_eq!(
            canonical_json(&v),
            "{\n  \"a\": 1,\n  \"b\": [\n    [\"1\", \"2\"]\n  ]\n}\n"
        );
    }
}
