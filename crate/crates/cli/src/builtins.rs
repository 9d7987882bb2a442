//! The built-in presentation catalog.

use hopfcyc::builders::{
    bicrossed_from_factorization, build_cm_h1, build_enveloping, build_function_algebra, build_group_algebra, build_ground,
    build_slq2, FactorizationData, FiniteGroupData, LieData,
};
use hopfcyc::HopfPresentation;
use serde::de::DeserializeOwned;
use serde::Deserialize;

use crate::spec::{FactorizationSpec, GroupSpec};
use crate::InputError;

pub struct Builtin {
    pub name: &'static str,
    pub params: &'static str,
    pub summary: &'static str,
}

pub const CATALOG: &[Builtin] = &[
    Builtin { name: "ground", params: "none", summary: "the ground field as a Hopf algebra" },
    Builtin { name: "cm_h1", params: "none", summary: "the Connes–Moscovici Hopf algebra with generators Y, X, delta_n" },
    Builtin { name: "slq2", params: "none", summary: "quantum SL(2) over Q(q), generators x, u, v, y; needs the rational-function field" },
    Builtin { name: "group_algebra", params: "{\"group\": G}", summary: "the group algebra kG" },
    Builtin { name: "function_algebra", params: "{\"group\": G}", summary: "functions on G in the delta basis" },
    Builtin { name: "enveloping", params: "{\"lie\": \"affine\" | \"sl2\"} or {\"abelian\": n}", summary: "a universal enveloping algebra" },
    Builtin { name: "bicrossed", params: "{\"factorization\": \"s3_c3_c2\" | \"z6_z2_z3\"}", summary: "a bicrossed product from a group factorization" },
];

/// Text for `--list-builtins`.
pub fn listing() -> String {
    let mut out = String::new();
    for b in CATALOG {
        out.push_str(&format!("{:<18} {}\n{:<18} params: {}\n", b.name, b.summary, "", b.params));
    }
    out.push_str("\nG is {\"cyclic\": n}, {\"symmetric\": k} or {\"labels\": [...], \"table\": [[...]]} with the identity first.\n");
    out
}

fn params<T: DeserializeOwned>(name: &str, p: Option<&serde_json::Value>) -> Result<T, InputError> {
    let v = p.cloned().unwrap_or(serde_json::Value::Object(Default::default()));
    serde_json::from_value(v).map_err(|e| InputError::schema("presentation.params", format!("{name}: {e}")))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct NoParams {}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GroupParams {
    group: GroupSpec,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct EnvelopingParams {
    #[serde(default)]
    lie: Option<String>,
    #[serde(default)]
    abelian: Option<usize>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct BicrossedParams {
    factorization: String,
}

pub fn group_data(g: &GroupSpec, path: &str) -> Result<FiniteGroupData, InputError> {
    let err = |m: String| InputError::schema(path, m);
    match (g.cyclic, g.symmetric, &g.labels, &g.table) {
        (Some(n), None, None, None) if n >= 1 => Ok(FiniteGroupData::cyclic(n, "g")),
        (None, Some(k), None, None) if (1..=5).contains(&k) => Ok(FiniteGroupData::symmetric(k)),
        (None, None, Some(labels), Some(table)) => {
            let idx = |l: &str| labels.iter().position(|x| x == l).ok_or_else(|| err(format!("unknown element `{l}` in table")));
            let rows = table
                .iter()
                .map(|r| r.iter().map(|l| idx(l)).collect::<Result<Vec<_>, _>>())
                .collect::<Result<Vec<_>, _>>()?;
            FiniteGroupData::new(labels.clone(), rows, 0).map_err(|e| err(e.to_string()))
        }
        _ => Err(err("give exactly one of `cyclic` (n ≥ 1), `symmetric` (1 ≤ k ≤ 5) or `labels` with `table`".into())),
    }
}

pub fn factorization(f: &FactorizationSpec, path: &str) -> Result<FactorizationData, InputError> {
    let err = |m: String| InputError::schema(path, m);
    match (&f.builtin, &f.group) {
        (Some(b), None) if f.left.is_empty() && f.right.is_empty() => named_factorization(b).ok_or_else(|| err(format!("unknown factorization `{b}`"))),
        (None, Some(g)) => {
            let group = group_data(g, &format!("{path}.group"))?;
            let find = |l: &String| group.find(l).ok_or_else(|| err(format!("unknown element `{l}`")));
            let left = f.left.iter().map(find).collect::<Result<Vec<_>, _>>()?;
            let right = f.right.iter().map(find).collect::<Result<Vec<_>, _>>()?;
            FactorizationData::new(group, left, right).map_err(|e| err(e.to_string()))
        }
        _ => Err(err("give either `builtin` or `group` with `left` and `right`".into())),
    }
}

fn named_factorization(name: &str) -> Option<FactorizationData> {
    match name {
        "s3_c3_c2" => Some(FactorizationData::s3_c3_c2()),
        "z6_z2_z3" => Some(FactorizationData::z6_z2_z3()),
        _ => None,
    }
}

pub fn load(name: &str, p: Option<&serde_json::Value>) -> Result<HopfPresentation, InputError> {
    let engine = |e: hopfcyc::Error| InputError::schema("presentation", format!("{name}: {e}"));
    match name {
        "ground" => {
            params::<NoParams>(name, p)?;
            build_ground().map_err(engine)
        }
        "cm_h1" => {
            params::<NoParams>(name, p)?;
            build_cm_h1().map_err(engine)
        }
        "slq2" => {
            params::<NoParams>(name, p)?;
            build_slq2().map_err(engine)
        }
        "group_algebra" | "function_algebra" => {
            let gp: GroupParams = params(name, p)?;
            let g = group_data(&gp.group, "presentation.params.group")?;
            if name == "group_algebra" {
                build_group_algebra(&g).map_err(engine)
            } else {
                build_function_algebra(&g).map_err(engine)
            }
        }
        "enveloping" => {
            let ep: EnvelopingParams = params(name, p)?;
            let lie = match (ep.lie.as_deref(), ep.abelian) {
                (Some("affine"), None) => LieData::affine(),
                (Some("sl2"), None) => LieData::sl2(),
                (None, Some(n)) => LieData::abelian(n),
                _ => return Err(InputError::schema("presentation.params", "give `lie` (affine or sl2) or `abelian`")),
            };
            build_enveloping(&lie).map_err(engine)
        }
        "bicrossed" => {
            let bp: BicrossedParams = params(name, p)?;
            let f = named_factorization(&bp.factorization)
                .ok_or_else(|| InputError::schema("presentation.params.factorization", format!("unknown factorization `{}`", bp.factorization)))?;
            Ok(bicrossed_from_factorization(&f).map_err(engine)?.realization.presentation)
        }
        _ => Err(InputError::schema("presentation.builtin", format!("unknown builtin `{name}`; see --list-builtins"))),
    }
}

/// Every catalog entry with representative parameters, for round-trip checks.
pub fn samples() -> Vec<(&'static str, Option<serde_json::Value>)> {
    use serde_json::json;
    vec![
        ("ground", None),
        ("cm_h1", None),
        ("slq2", None),
        ("group_algebra", Some(json!({"group": {"cyclic": 3}}))),
        ("group_algebra", Some(json!({"group": {"symmetric": 3}}))),
        ("function_algebra", Some(json!({"group": {"cyclic": 2}}))),
        ("enveloping", Some(json!({"lie": "affine"}))),
        ("enveloping", Some(json!({"lie": "sl2"}))),
        ("bicrossed", Some(json!({"factorization": "s3_c3_c2"}))),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn every_sample_loads() {
        for (name, params) in samples() {
            load(name, params.as_ref()).unwrap_or_else(|e| panic!("{name}: {e}"));
        }
    }

    #[test]
    fn params_are_checked() {
        assert!(load("ground", Some(&json!({"n": 1}))).is_err());
        assert!(load("group_algebra", None).is_err());
        assert!(load("enveloping", Some(&json!({"lie": "e8"}))).is_err());
        assert!(load("nope", None).is_err());
    }

    #[test]
    fn table_groups_are_validated() {
        let ok = GroupSpec { cyclic: None, symmetric: None, labels: Some(vec!["e".into(), "a".into()]), table: Some(vec![vec!["e".into(), "a".into()], vec!["a".into(), "e".into()]]) };
        assert_eq!(group_data(&ok, "g").unwrap().order(), 2);
        let bad = GroupSpec { table: Some(vec![vec!["e".into(), "a".into()], vec!["a".into(), "a".into()]]), ..ok };
        assert!(group_data(&bad, "g").is_err());
    }

    #[test]
    fn listing_names_the_catalog() {
        let text = listing();
        assert!(CATALOG.iter().all(|b| text.contains(b.name)));
    }
}
