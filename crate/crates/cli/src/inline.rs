//! Inline presentations: building from the JobSpec form and exporting back.

use std::collections::BTreeMap;

use hopfcyc::hopf::HopfTables;
use hopfcyc::ncalg::{termination_cmp, Bindings, Family, Rule};
use hopfcyc::{Alphabet, HopfPresentation, NCPoly, RewriteSystem, TensorElem};

use crate::expr::{parse_poly, parse_scalar, parse_tensor, FieldMode};
use crate::spec::{GeneratorSpec, InlinePresentation};
use crate::InputError;

/// Orients `p = 0` as `lead → lead − p/c`, where `lead` is the largest word
/// in the termination order and `c` its coefficient.
pub fn orient(alphabet: &Alphabet, p: &NCPoly) -> Option<Rule> {
    let (lead, c) = p.terms().max_by(|(a, _), (b, _)| termination_cmp(alphabet, a, b))?;
    if lead.is_unit() {
        return None;
    }
    let lead = lead.clone();
    let mut rhs = NCPoly::word(lead.clone());
    rhs.add_scaled(p, &-&c.inv());
    Some(Rule::fixed(&lead, &rhs))
}

pub fn build_inline(spec: &InlinePresentation, field: FieldMode) -> Result<HopfPresentation, InputError> {
    let mut families = Vec::new();
    for g in &spec.generators {
        let name = g.name();
        let valid = name.chars().next().is_some_and(char::is_alphabetic) && name.chars().all(|c| c.is_alphanumeric() || c == '\'');
        if !valid || name == "q" || name == "ox" {
            return Err(InputError::schema("presentation.inline.generators", format!("`{name}` is not a valid generator name")));
        }
        if families.iter().any(|f: &Family| f.name == name) {
            return Err(InputError::schema("presentation.inline.generators", format!("`{name}` is declared twice")));
        }
        families.push(Family::plain(name).with_weight(g.weight()));
    }
    let alphabet = Alphabet::new(families);
    let mut rules = Vec::new();
    for (i, r) in spec.relations.iter().enumerate() {
        let path = format!("presentation.inline.relations[{i}]");
        let p = parse_poly(r, &alphabet, field).map_err(|e| InputError::expr(&path, e))?;
        let rule = orient(&alphabet, &p).ok_or_else(|| InputError::schema(&path, "relation has no non-constant word"))?;
        rules.push(rule);
    }
    let gen_table = |table: &BTreeMap<String, String>, which: &str| -> Result<Vec<(hopfcyc::GenSymbol, String, String)>, InputError> {
        let mut out = Vec::new();
        for (k, v) in table {
            let path = format!("presentation.inline.{which}.{k}");
            let g = alphabet.symbol(k, None).map_err(|_| InputError::schema(&path, format!("unknown generator `{k}`")))?;
            out.push((g, path, v.clone()));
        }
        Ok(out)
    };
    let mut tables = HopfTables { coproduct: BTreeMap::new(), counit: BTreeMap::new(), antipode: BTreeMap::new(), antipode_inverse: None };
    for (g, path, v) in gen_table(&spec.coproduct, "coproduct")? {
        let t = parse_tensor(&v, &alphabet, field).map_err(|e| InputError::expr(&path, e))?;
        if t.degree() != 2 {
            return Err(InputError::schema(&path, "coproduct needs exactly one `ox` per term"));
        }
        tables.coproduct.insert(g, t);
    }
    for (g, path, v) in gen_table(&spec.counit, "counit")? {
        tables.counit.insert(g, parse_scalar(&v, field).map_err(|e| InputError::expr(&path, e))?);
    }
    for (g, path, v) in gen_table(&spec.antipode, "antipode")? {
        tables.antipode.insert(g, parse_poly(&v, &alphabet, field).map_err(|e| InputError::expr(&path, e))?);
    }
    if let Some(inv) = &spec.antipode_inverse {
        let mut m = BTreeMap::new();
        for (g, path, v) in gen_table(inv, "antipode_inverse")? {
            m.insert(g, parse_poly(&v, &alphabet, field).map_err(|e| InputError::expr(&path, e))?);
        }
        tables.antipode_inverse = Some(m);
    }
    let name = spec.name.clone().unwrap_or_else(|| "inline".into());
    let rewrite = RewriteSystem::new(alphabet, rules);
    let raw = HopfPresentation::new(name.clone(), rewrite.clone(), Vec::new(), tables.clone());
    // table entries are stored in normal form, as the builders do
    let norm = |p: &NCPoly| raw.normalize(p).map_err(|e| InputError::schema("presentation.inline", e.to_string()));
    for p in tables.antipode.values_mut() {
        *p = norm(p)?;
    }
    if let Some(m) = tables.antipode_inverse.as_mut() {
        for p in m.values_mut() {
            *p = norm(p)?;
        }
    }
    for t in tables.coproduct.values_mut() {
        *t = raw.normalize_tensor(t).map_err(|e| InputError::schema("presentation.inline", e.to_string()))?;
    }
    Ok(HopfPresentation::new(name, rewrite, Vec::new(), tables))
}

/// The inline form of a presentation with a finite alphabet and fixed rules.
pub fn export_inline(h: &HopfPresentation) -> Result<InlinePresentation, String> {
    let a = h.alphabet();
    if a.has_indexed() || !h.derived().is_empty() {
        return Err(format!("{} has indexed generator families, which the inline form cannot express", h.name()));
    }
    let generators = a
        .families()
        .iter()
        .map(|f| if f.weight == 1 { GeneratorSpec::Name(f.name.clone()) } else { GeneratorSpec::Weighted { name: f.name.clone(), weight: f.weight } })
        .collect();
    let mut relations = Vec::new();
    for r in h.rewrite().rules() {
        if r.is_template() {
            return Err("template rules cannot be exported".into());
        }
        let b = Bindings::default();
        let lhs = r.lhs_word(&b).ok_or("rule has no left side")?;
        let mut p = NCPoly::word(lhs);
        for (c, w) in r.instantiate_rhs(&b).map_err(|e| e.to_string())? {
            p.add_term(w, -&c);
        }
        relations.push(if p.is_zero() { "0".into() } else { p.display(a).to_string() });
    }
    let show_t = |t: &TensorElem| t.display(a).to_string();
    let table = |m: &BTreeMap<hopfcyc::GenSymbol, NCPoly>| m.iter().map(|(g, p)| (a.symbol_name(*g), h.show(p))).collect();
    Ok(InlinePresentation {
        name: Some(h.name().to_string()),
        generators,
        relations,
        coproduct: h.tables().coproduct.iter().map(|(g, t)| (a.symbol_name(*g), show_t(t))).collect(),
        counit: h.tables().counit.iter().map(|(g, c)| (a.symbol_name(*g), c.to_string())).collect(),
        antipode: table(&h.tables().antipode),
        antipode_inverse: h.tables().antipode_inverse.as_ref().map(table),
    })
}

/// Whether any structure constant depends on `q`.
pub fn uses_q(h: &HopfPresentation) -> bool {
    let poly_q = |p: &NCPoly| p.terms().any(|(_, c)| !c.is_rational());
    let t = h.tables();
    t.counit.values().any(|c| !c.is_rational())
        || t.antipode.values().any(poly_q)
        || t.antipode_inverse.iter().flat_map(|m| m.values()).any(poly_q)
        || t.coproduct.values().any(|x| x.terms().any(|(_, c)| !c.is_rational()))
        || h.rewrite().rules().iter().any(|r| r.rhs.iter().any(|t| !t.coeff.is_rational()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins::load;

    fn kz2(antipode: &str) -> InlinePresentation {
        serde_json::from_value(serde_json::json!({
            "generators": ["g"],
            "relations": ["g*g - 1"],
            "coproduct": {"g": "g ox g"},
            "counit": {"g": "1"},
            "antipode": {"g": antipode}
        }))
        .unwrap()
    }

    #[test]
    fn relations_orient_toward_the_longest_word() {
        let h = build_inline(&kz2("g"), FieldMode::Rational).unwrap();
        let rules = h.rewrite().rules();
        assert_eq!(rules.len(), 1);
        let lhs = rules[0].lhs_word(&Bindings::default()).unwrap();
        assert_eq!(h.show_word(&lhs), "g*g");
        assert_eq!(h.finite_basis(4).unwrap().len(), 2);
    }

    #[test]
    fn constant_relations_do_not_orient() {
        let a = Alphabet::new(vec![Family::plain("g")]);
        assert!(orient(&a, &NCPoly::one()).is_none());
    }

    #[test]
    fn unknown_table_generators_are_rejected() {
        let mut spec = kz2("g");
        spec.counit.insert("h".into(), "1".into());
        assert!(build_inline(&spec, FieldMode::Rational).is_err());
    }

    #[test]
    fn indexed_families_do_not_export() {
        let h = load("cm_h1", None).unwrap();
        assert!(export_inline(&h).is_err());
        let k = load("group_algebra", Some(&serde_json::json!({"group": {"cyclic": 2}}))).unwrap();
        let spec = export_inline(&k).unwrap();
        assert_eq!(spec.relations.len(), k.rewrite().rules().len());
        assert!(!uses_q(&k));
        assert!(uses_q(&load("slq2", None).unwrap()));
    }
}
