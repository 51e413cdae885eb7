//! Deterministic JSON reports and DOT graphs.
//!
//! Objects are `serde_json` maps, which keep keys sorted; rationals are
//! strings in lowest terms.

use serde_json::{json, Map, Value};

use crate::beta_spectrum::beta_vector;
use crate::bit2bit::{canonical_form, monotone_triple, parametrize, table1_vertices, tetra_coords};
use crate::channel_game::{
    ace, ace_dist, guessing_probability, max_postselected_connection, min_beta_over_preimage,
    posterior_causal_connection, Prior,
};
use crate::error::{Error, Result};
use crate::rtknowcaus::{Converter, HasseGraph};
use crate::{Distribution, Mixture, Rational};

pub fn q(v: &Rational) -> Value {
    Value::String(v.to_string())
}

fn opt(v: &Option<Rational>) -> Value {
    v.as_ref().map_or(Value::Null, q)
}

fn rationals(vs: &[Rational]) -> Value {
    Value::Array(vs.iter().map(q).collect())
}

pub fn distribution(d: &Distribution) -> Value {
    let support: Map<String, Value> = d.support().map(|(f, w)| (f.to_string(), q(w))).collect();
    let mut obj = json!({
        "codomain": d.codomain_size(),
        "domain": d.domain_size(),
        "support": support,
    });
    if let Ok(t) = tetra_coords(d) {
        obj["tetra"] = rationals(&t);
    }
    obj
}

fn show(v: &Option<Rational>) -> String {
    v.as_ref()
        .map_or_else(|| "undefined".to_string(), ToString::to_string)
}

pub fn monotones(name: &str, d: &Distribution) -> Value {
    let spectrum = beta_vector(d);
    let mut obj = json!({
        "name": name,
        "resource": distribution(d),
        "beta_spectrum": rationals(spectrum.weights()),
        "cumulative_monotones": rationals(&spectrum.cumulative_monotones()),
    });
    if let (Ok(p), Ok(t), Ok(c)) = (parametrize(d), monotone_triple(d), canonical_form(d)) {
        obj["params"] =
            json!({ "alpha": opt(&p.alpha), "beta": q(&p.beta), "gamma": opt(&p.gamma) });
        obj["monotones"] = json!({
            "m_abs_alpha": opt(&t.m_abs_alpha),
            "m_beta": q(&t.m_beta),
            "m_gamma_beta": q(&t.m_gamma_beta),
        });
        obj["triple"] = Value::String(format!(
            "({}, {}, {})",
            t.m_beta,
            show(&t.m_abs_alpha),
            t.m_gamma_beta
        ));
        obj["canonical_form"] = json!({
            "abs_alpha": opt(&c.abs_alpha),
            "abs_gamma": opt(&c.abs_gamma),
            "beta": q(&c.beta),
        });
    }
    obj
}

fn certificate(m: &Mixture) -> Value {
    Value::Array(
        m.support()
            .map(|(c, w)| json!({ "post": c.post.to_string(), "pre": c.pre.to_string(), "weight": q(w) }))
            .collect(),
    )
}

fn verdict(converter: &Converter, p: &Distribution, q_: &Distribution) -> Result<(bool, Value)> {
    let v = converter.know_convertible(p, q_)?;
    let mut obj = json!({
        "certificate": v.certificate.as_ref().map_or(Value::Null, certificate),
        "convertible": v.convertible(),
    });
    if let Ok(fast) = crate::bit2bit::bit_convertible_fast(p, q_) {
        obj["monotone_rule"] = Value::Bool(fast);
    }
    Ok((v.convertible(), obj))
}

pub fn convert(
    converter: &Converter,
    a: (&str, &Distribution),
    b: (&str, &Distribution),
) -> Result<Value> {
    let (fwd, forward) = verdict(converter, a.1, b.1)?;
    let (bwd, backward) = verdict(converter, b.1, a.1)?;
    let yes = |v: bool| if v { "yes" } else { "no" };
    Ok(json!({
        "backward": backward,
        "forward": forward,
        "source": a.0,
        "summary": format!("{}→{}: {}, {}→{}: {}", a.0, b.0, yes(fwd), b.0, a.0, yes(bwd)),
        "target": b.0,
    }))
}

pub fn closure(converter: &Converter, name: &str, d: &Distribution) -> Result<Value> {
    let vertices = converter.downward_closure_vertices(d)?;
    let mut obj = json!({
        "name": name,
        "vertex_count": vertices.len(),
        "vertices": Value::Array(vertices.iter().map(distribution).collect()),
    });
    if let Ok(table) = table1_vertices(d) {
        obj["closed_form_vertices"] = Value::Array(table.iter().map(distribution).collect());
    }
    Ok(obj)
}

pub fn hasse_report(g: &HasseGraph) -> Value {
    json!({
        "classes": g.classes,
        "edges": g.edges.iter().map(|&(a, b)| json!([a, b])).collect::<Vec<_>>(),
    })
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Classes as nodes labeled by their members; edges from dominating to dominated.
pub fn hasse_dot(g: &HasseGraph) -> String {
    let mut out = String::from("digraph hasse {\n    rankdir=TB;\n    node [shape=box];\n");
    for (i, members) in g.classes.iter().enumerate() {
        out.push_str(&format!(
            "    c{i} [label=\"{}\"];\n",
            dot_escape(&members.join(", "))
        ));
    }
    for (a, b) in &g.edges {
        out.push_str(&format!("    c{a} -> c{b};\n"));
    }
    out.push_str("}\n");
    out
}

pub fn game(name: &str, d: &Distribution, prior: &Prior<Rational>) -> Result<Value> {
    let mut obj = json!({
        "guessing_probability": q(&guessing_probability(d, prior)?),
        "name": name,
        "prior": rationals(prior.weights()),
    });
    if d.is_bit_to_bit() {
        let uniform = Prior::uniform(2)?;
        let mut posts = Map::new();
        for y in 0..2 {
            let v = match posterior_causal_connection(d, y, &uniform) {
                Ok(v) => q(&v),
                Err(Error::ZeroMarginal(_)) => Value::Null,
                Err(e) => return Err(e),
            };
            posts.insert(y.to_string(), v);
        }
        obj["posterior_causal_connection"] = Value::Object(posts);
        obj["max_postselected_connection"] = q(&max_postselected_connection(d)?);
    }
    Ok(obj)
}

pub fn ace_report(name: &str, d: &Distribution) -> Result<Value> {
    let channel = d.to_stochastic();
    let (min_beta, witness) = min_beta_over_preimage(&channel)?;
    Ok(json!({
        "ace": q(&ace(&channel)?),
        "ace_dist": q(&ace_dist(d)?),
        "channel": channel.rows().iter().map(|r| rationals(r)).collect::<Vec<_>>(),
        "min_beta_over_preimage": { "value": q(&min_beta), "witness": distribution(&witness) },
        "name": name,
    }))
}
