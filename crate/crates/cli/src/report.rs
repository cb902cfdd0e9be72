//! JSON rendering of reports, witnesses and scenarios.

use monopole_obstruct_core::engine::{ObstructionReport, Witness, Z2Certificate, ZpCertificate};
use monopole_obstruct_core::exact::{BigInt, Polynomiality};
use monopole_obstruct_core::rep::ZpVirtualRep;
use monopole_obstruct_core::scenarios::Scenario;
use serde_json::{json, Value};

use crate::doc::HypothesisDoc;

/// Integers that fit in `i64` become JSON numbers, larger ones strings.
fn big(n: &BigInt) -> Value {
    match i64::try_from(n) {
        Ok(v) => json!(v),
        Err(_) => json!(n.to_string()),
    }
}

fn rep(r: &ZpVirtualRep) -> Value {
    json!({
        "p": r.modulus().get(),
        "mult": r.mult().iter().map(big).collect::<Vec<_>>(),
        "display": r.to_string(),
    })
}

fn polynomiality(p: &Polynomiality) -> Value {
    match p {
        Polynomiality::Polynomial => json!({"polynomial": true}),
        Polynomiality::PoleAtRoot {
            root_exponent,
            vanishing_order,
            required,
        } => json!({
            "polynomial": false,
            "pole": "root",
            "root_exponent": root_exponent,
            "vanishing_order": vanishing_order,
            "required": required,
        }),
        Polynomiality::PoleAtOrigin { order } => json!({
            "polynomial": false,
            "pole": "origin",
            "order": order,
        }),
    }
}

fn z2_certificate(c: &Z2Certificate) -> Value {
    json!({
        "b_plus": c.b_plus,
        "a_plus": c.a_plus,
        "a_minus": c.a_minus,
        "a_prime_plus": c.a_prime_plus,
        "a_prime_minus": c.a_prime_minus,
        "outcome": polynomiality(&c.outcome),
    })
}

fn zp_certificate(c: &ZpCertificate) -> Value {
    json!({"shift": c.shift, "outcome": polynomiality(&c.outcome)})
}

pub fn witness_json(w: &Witness) -> Value {
    match w {
        Witness::PositiveIndex {
            d,
            c_squared,
            signature,
        } => json!({
            "kind": "positive_index", "d": d, "c_squared": c_squared, "signature": signature,
        }),
        Witness::IndexIntegrality { signature } => json!({
            "kind": "index_integrality", "signature": signature,
        }),
        Witness::TenEighths { b_plus, d, refined } => json!({
            "kind": "ten_eighths", "b_plus": b_plus, "d": d, "refined": refined,
        }),
        Witness::NonzeroEuler { d, degree, class } => json!({
            "kind": "nonzero_euler", "d": d, "degree": degree, "class": class,
        }),
        Witness::NonzeroSegreProduct { d, j, product } => json!({
            "kind": "nonzero_segre_product", "d": d, "j": j, "product": product,
        }),
        Witness::SwWindow {
            d,
            b_plus,
            indices,
            classes,
        } => json!({
            "kind": "sw_window", "d": d, "b_plus": b_plus, "indices": indices, "classes": classes,
        }),
        Witness::Z2Eigenspace {
            sign,
            d_plus,
            d_minus,
            certificate,
        } => json!({
            "kind": "z2_eigenspace",
            "sign": sign.as_str(),
            "d_plus": d_plus,
            "d_minus": d_minus,
            "certificate": z2_certificate(certificate),
        }),
        Witness::EvenInvolution {
            signature,
            inv_dim,
            b_plus,
            u,
            v,
            d,
            indices,
        } => json!({
            "kind": "even_involution",
            "signature": signature,
            "inv_dim": inv_dim,
            "b_plus": b_plus,
            "u": u,
            "v": v,
            "d": d,
            "indices": indices,
        }),
        Witness::ZpEigenspace { p, j, d, certificate } => json!({
            "kind": "zp_eigenspace", "p": p, "j": j, "d": d, "certificate": zp_certificate(certificate),
        }),
        Witness::ZpTotalIndex { p, d } => json!({"kind": "zp_total_index", "p": p, "d": d}),
        Witness::ZpSpin { d0, inv_dim } => json!({"kind": "zp_spin", "d0": d0, "inv_dim": inv_dim}),
        Witness::EquivariantDivisibility {
            p,
            refined,
            character,
            numerator,
            denominator,
        } => json!({
            "kind": "equivariant_divisibility",
            "p": p,
            "refined": refined,
            "character": character,
            "numerator": rep(numerator),
            "denominator": rep(denominator),
        }),
    }
}

/// `{"verdict", "theorem", "witness", "reason", "inputs_echo"}`.
pub fn report_json(report: &ObstructionReport, echo: &HypothesisDoc) -> Value {
    json!({
        "verdict": report.verdict.as_str(),
        "theorem": report.theorem.as_str(),
        "witness": report.witness.as_ref().map(witness_json),
        "reason": report.reason,
        "inputs_echo": echo,
    })
}

/// The report with a `scenario` section for the construction's flags.
pub fn scenario_json(s: &Scenario, echo: &HypothesisDoc) -> Value {
    let mut out = report_json(&s.report, echo);
    let flags: Vec<Value> = s
        .flags
        .iter()
        .map(|f| json!({"name": f.name, "value": f.value, "basis": f.basis}))
        .collect();
    out["scenario"] = json!({
        "id": s.id,
        "description": s.description,
        "flags": flags,
        "fake_blocks": s.fake_blocks,
        "torus_dim": s.torus_dim.map(|(dim, formula)| json!({"dim": dim, "formula": formula})),
        "corollary": s.corollary,
    });
    out
}
