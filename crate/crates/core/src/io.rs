//! JSON file formats.
//!
//! * group: `{"order": n, "add": [[...], ...]}`
//! * operation: `{"n": n, "table": [[...], ...]}`
//! * Ω-group: `{"group": {...}, "ops": [{"arity": k, "table": [...]}]}`
//! * ops bundle: `{"group": {...}, "ops": {"name": operation, ...}}`
//!
//! Rows are indexed by the left argument everywhere.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::binop::{BinOp, NamedOp};
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, StandardGroup};
use crate::omega::OmegaGroup;

/// The six named operations on one group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OpsBundle {
    pub group: FiniteGroup,
    pub ops: BTreeMap<String, BinOp>,
}

impl OpsBundle {
    pub fn catalog(g: &FiniteGroup) -> Self {
        OpsBundle {
            group: g.clone(),
            ops: NamedOp::ALL
                .iter()
                .map(|&op| (op.name().to_string(), BinOp::named(g, op)))
                .collect(),
        }
    }
}

fn read_text(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

/// Deserializes an already parsed value.
fn from_value<T: DeserializeOwned>(value: serde_json::Value) -> Result<T> {
    serde_json::from_value(value).map_err(|e| Error::Parse(e.to_string()))
}

pub fn from_json_str<T: DeserializeOwned>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T> {
    from_json_str(&read_text(path)?)
}

pub fn to_json_string<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("plain data serializes")
}

pub fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    let mut text = to_json_string(value);
    text.push('\n');
    fs::write(path, text).map_err(|e| Error::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

pub fn load_group(path: &Path) -> Result<FiniteGroup> {
    read_json(path)
}

pub fn load_binop(path: &Path) -> Result<BinOp> {
    read_json(path)
}

pub fn load_omega(path: &Path) -> Result<OmegaGroup> {
    read_json(path)
}

/// Operations from a file holding a single operation, a list of them, an
/// ops bundle, or a bare `{"name": operation}` map. Named maps come back
/// in key order.
pub fn load_ops(path: &Path) -> Result<Vec<(String, BinOp)>> {
    parse_ops(&read_text(path)?)
}

pub fn parse_ops(text: &str) -> Result<Vec<(String, BinOp)>> {
    let value: serde_json::Value = from_json_str(text)?;
    match value {
        serde_json::Value::Array(items) => items
            .into_iter()
            .enumerate()
            .map(|(i, v)| Ok((format!("op{i}"), from_value(v)?)))
            .collect(),
        serde_json::Value::Object(ref map) if map.contains_key("n") => {
            Ok(vec![("op0".to_string(), from_value(value)?)])
        }
        serde_json::Value::Object(mut map) => {
            let ops = match map.remove("ops") {
                Some(ops) => ops,
                None => serde_json::Value::Object(map),
            };
            let named: BTreeMap<String, BinOp> = from_value(ops)?;
            Ok(named.into_iter().collect())
        }
        _ => Err(Error::Parse(
            "expected an operation, a list or a map of operations".into(),
        )),
    }
}

/// A standard group from a fixture name: `trivial`, `z<n>` or `cyclic<n>`,
/// `klein4`, `d<m>` or `dihedral<m>`, `s3` or `sym3`.
pub fn standard_by_name(name: &str) -> Option<StandardGroup> {
    let lower = name.to_ascii_lowercase();
    let number = |prefixes: &[&str]| {
        prefixes.iter().find_map(|p| {
            lower
                .strip_prefix(p)
                .and_then(|rest| rest.parse::<usize>().ok())
        })
    };
    match lower.as_str() {
        "trivial" => Some(StandardGroup::Cyclic(1)),
        "klein4" | "v4" => Some(StandardGroup::Klein4),
        "s3" | "sym3" => Some(StandardGroup::Sym3),
        _ => number(&["cyclic", "z"])
            .map(StandardGroup::Cyclic)
            .or_else(|| number(&["dihedral", "d"]).map(StandardGroup::Dihedral)),
    }
}

/// An existing file is read as a group; otherwise the argument is tried as
/// a fixture name.
pub fn resolve_group(arg: &str) -> Result<FiniteGroup> {
    let path = Path::new(arg);
    if path.exists() {
        return load_group(path);
    }
    match standard_by_name(arg) {
        Some(kind) => FiniteGroup::standard(kind),
        None => Err(Error::Io {
            path: arg.to_string(),
            message: "no such file or fixture name".into(),
        }),
    }
}

/// The groups shipped as fixture files, with their file stems.
pub fn fixture_groups() -> Vec<(String, StandardGroup)> {
    let mut out: Vec<(String, StandardGroup)> = (2..=8)
        .map(|n| (format!("cyclic{n}"), StandardGroup::Cyclic(n)))
        .collect();
    out.push(("klein4".into(), StandardGroup::Klein4));
    out.push(("sym3".into(), StandardGroup::Sym3));
    out
}

pub fn fixtures_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

pub fn fixture_path(stem: &str) -> PathBuf {
    fixtures_dir().join(format!("{stem}.json"))
}

/// Writes every fixture group into `dir`.
pub fn write_fixtures(dir: &Path) -> Result<()> {
    for (stem, kind) in fixture_groups() {
        write_json(
            &dir.join(format!("{stem}.json")),
            &FiniteGroup::standard(kind)?,
        )?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shipped_fixtures_match_the_constructors() {
        for (stem, kind) in fixture_groups() {
            let loaded = load_group(&fixture_path(&stem)).unwrap();
            assert_eq!(loaded, FiniteGroup::standard(kind).unwrap(), "{stem}");
        }
    }

    #[test]
    fn ops_inputs_in_all_shapes() {
        let g = FiniteGroup::standard(StandardGroup::Cyclic(2)).unwrap();
        let bundle = OpsBundle::catalog(&g);
        let text = to_json_string(&bundle);
        let ops = parse_ops(&text).unwrap();
        assert_eq!(ops.len(), 6);
        assert_eq!(ops[0].0, "conj");
        // conj on an abelian group is π₂
        assert_eq!(bundle.ops["conj"], bundle.ops["pi2"]);
        let single = to_json_string(&bundle.ops["plus"]);
        assert_eq!(
            parse_ops(&single).unwrap(),
            vec![("op0".into(), bundle.ops["plus"].clone())]
        );
        let list = to_json_string(&vec![bundle.ops["pi1"].clone(), bundle.ops["null"].clone()]);
        assert_eq!(parse_ops(&list).unwrap().len(), 2);
    }

    #[test]
    fn malformed_inputs_keep_the_validation_message() {
        let err =
            from_json_str::<FiniteGroup>(r#"{"order": 2, "add": [[0, 1], [1, 1]]}"#).unwrap_err();
        assert!(err.to_string().contains("not a group"), "{err}");
        let err = parse_ops(r#"{"n": 2, "table": [[0, 1]]}"#).unwrap_err();
        assert!(err.to_string().contains("size mismatch"), "{err}");
    }

    #[test]
    fn fixture_names() {
        assert_eq!(standard_by_name("Z4"), Some(StandardGroup::Cyclic(4)));
        assert_eq!(
            standard_by_name("dihedral4"),
            Some(StandardGroup::Dihedral(4))
        );
        assert_eq!(standard_by_name("sym3"), Some(StandardGroup::Sym3));
        assert_eq!(standard_by_name("trivial"), Some(StandardGroup::Cyclic(1)));
        assert_eq!(standard_by_name("x"), None);
    }
}
