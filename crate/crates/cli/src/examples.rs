//! Replays the worked examples against stored expected values.

use hskein::intersect::{catalog_names, lookup, HVerdict, ManifoldData};
use hskein::paths::{delta_loop, delta_loop_raw, LocalState};
use hskein::present::{
    certify_relation, delta_generator, nonabelian_witness, theta_generator, to_ungraded, CertificateKind,
};
use hskein::ring::{parse_upoly, RPoly};
use hskein::wrap::{render_vector, LinComb, SkeinVector, WrapClass};

use crate::error::CliError;

pub const NAMES: [&str; 6] = ["5", "6.6", "delta", "6.8", "linking", "verdicts"];

#[derive(Debug, Clone)]
pub struct Check {
    pub label: String,
    pub detail: String,
    pub pass: bool,
}

#[derive(Debug, Clone)]
pub struct Outcome {
    pub name: &'static str,
    pub checks: Vec<Check>,
}

impl Outcome {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let mark = if c.pass { "PASS" } else { "FAIL" };
            out.push_str(&format!("[{}] {mark} {}: {}\n", self.name, c.label, c.detail));
        }
        out
    }

    fn check(&mut self, label: impl Into<String>, detail: impl Into<String>, pass: bool) {
        self.checks.push(Check {
            label: label.into(),
            detail: detail.into(),
            pass,
        });
    }
}

fn coeff(src: &str) -> Result<RPoly, CliError> {
    parse_upoly(src)?
        .to_rpoly()
        .ok_or_else(|| CliError::Usage(format!("`{src}` involves u")))
}

fn vector(m: &ManifoldData, terms: &[(&str, &str)]) -> Result<SkeinVector, CliError> {
    let mut v = SkeinVector::zero();
    for (k, c) in terms {
        v.add_term(m.wrap(k)?, coeff(c)?);
    }
    Ok(v)
}

/// The unit ±q^k with `actual = u·expected`, if any.
fn unit_multiple(actual: &SkeinVector, expected: &SkeinVector) -> Option<String> {
    let (k, c) = expected.iter().next()?;
    let u = actual.coeff(k).eq_up_to_unit(c)?;
    (expected.map_coeffs(|x| x.apply_unit(u)) == *actual).then(|| u.to_string())
}

fn local_loop() -> Result<Outcome, CliError> {
    use LocalState::*;
    let mut o = Outcome {
        name: "5",
        checks: vec![],
    };
    let show = |v: &LinComb<LocalState, RPoly>| v.render(|k| k.to_string());
    let raw = delta_loop_raw();
    let expected = LinComb::from_terms([
        (K0Minus, coeff("q")?),
        (KMinus0, coeff("-q")?),
        (K0Plus, coeff("-q^-1")?),
        (KPlus0, coeff("q^-1")?),
    ]);
    o.check("raw loop", show(&raw), raw == expected);
    let unpaired = delta_loop(false);
    o.check("unpaired", show(&unpaired), unpaired.is_zero());
    let paired = delta_loop(true);
    let expected = LinComb::from_terms([(K0Circ, coeff("q - q^-1")?), (KCirc0, coeff("q^-1 - q")?)]);
    o.check("paired", show(&paired), paired == expected);
    Ok(o)
}

fn theta_66() -> Result<Outcome, CliError> {
    let mut o = Outcome {
        name: "6.6",
        checks: vec![],
    };
    let m = lookup("t3")?;
    let cases: [(&str, &[(&str, &str)]); 2] = [
        ("h", &[("<b1,b2,b3>", "q^2 - 1"), ("<b1*b2,b3>", "z*q")]),
        ("h'", &[("<b1*b2,b3>", "z*q"), ("<b1*b3,b2>", "-z*q")]),
    ];
    for (name, terms) in cases {
        let t = m
            .theta_entries
            .iter()
            .find(|t| t.name == name)
            .ok_or_else(|| CliError::NotFound(format!("theta entry `{name}` in t3")))?;
        let v = theta_generator(&m, &t.alpha, &t.component, &t.events)?;
        let expected = vector(&m, terms)?;
        o.check(format!("Θ(α,a,{name})"), render_vector(&v, &m.pi1), v == expected);
    }
    Ok(o)
}

fn delta_example() -> Result<Outcome, CliError> {
    let mut o = Outcome {
        name: "delta",
        checks: vec![],
    };
    let m = lookup("t3")?;
    let d = m
        .delta_entries
        .first()
        .ok_or_else(|| CliError::NotFound("delta entry in t3".into()))?;
    let v = delta_generator(&m, &d.alpha, &d.pair.0, &d.pair.1, &d.g, &d.events)?;
    let expected = vector(&m, &[("<1,b2>", "1 - q^2"), ("<b2>", "-z*q")])?;
    let unit = unit_multiple(&v.tilde, &expected);
    let detail = format!(
        "Δ̃ = {} ({})",
        render_vector(&v.tilde, &m.pi1),
        unit.as_deref().map_or("not a unit multiple".to_string(), |u| format!(
            "{u} times the stored value"
        ))
    );
    o.check("Δ̃(α,c,b3)", detail, unit.is_some());
    let target = m.wrap("<1,b2>")?;
    let cert = certify_relation(&m, &to_ungraded(&v.relation));
    let (detail, pass) = match cert.as_ref().map(|c| &c.kind) {
        Some(CertificateKind::Linking { class, lambda, .. }) => (
            format!(
                "annihilator {}, λ({}) = {lambda}",
                cert.as_ref().unwrap().annihilator,
                class.render(&m.pi1)
            ),
            *class == target && *lambda == 0,
        ),
        Some(other) => (format!("{other:?}"), false),
        None => ("no certificate".to_string(), false),
    };
    o.check("torsion certificate", detail, pass);
    Ok(o)
}

fn sphere_68() -> Result<Outcome, CliError> {
    let mut o = Outcome {
        name: "6.8",
        checks: vec![],
    };
    let m = lookup("s2xs1")?;
    let t = m
        .theta_entries
        .first()
        .ok_or_else(|| CliError::NotFound("theta entry in s2xs1".into()))?;
    let v = theta_generator(&m, &t.alpha, &t.component, &t.events)?;
    let first = m.wrap("<a^2,a^-1>")?;
    let second = m.wrap("<1,a>")?;
    // z-linear part must be zq(q^η₁ first − q^η₂ second); no z-free part
    let mut z0_free = true;
    let mut z1_keys = Vec::new();
    for (k, c) in v.iter() {
        z0_free &= c.z_coeff(0).is_zero();
        if !c.z_coeff(1).is_zero() {
            z1_keys.push(k.clone());
        }
    }
    let eta = |k: &WrapClass, negative: bool| {
        v.coeff(k)
            .z_coeff(1)
            .as_unit()
            .filter(|u| u.negative == negative)
            .map(|u| u.exponent - 1)
    };
    let (e1, e2) = (eta(&first, false), eta(&second, true));
    let pass = z0_free && z1_keys.len() == 2 && e1.is_some() && e2.is_some();
    let detail = match (e1, e2) {
        (Some(a), Some(b)) => format!("{} (η₁ = {a}, η₂ = {b})", render_vector(&v, &m.pi1)),
        _ => render_vector(&v, &m.pi1),
    };
    o.check("Θ shape", detail, pass);
    let cert = certify_relation(&m, &to_ungraded(&v));
    let detail = cert.as_ref().map_or("no certificate".to_string(), |c| {
        format!("annihilator {}", c.annihilator)
    });
    o.check("torsion certificate", detail, cert.is_some());
    Ok(o)
}

fn linking() -> Result<Outcome, CliError> {
    let mut o = Outcome {
        name: "linking",
        checks: vec![],
    };
    for (name, alpha, want) in [("t3", "<b1,b2,b3>", 1), ("t3", "<1,b2>", 0), ("s2xs1", "<a,a,a^-1>", 2)] {
        let m = lookup(name)?;
        let got = m.lambda(&m.wrap(alpha)?)?;
        o.check(format!("λ{alpha} on {name}"), got.to_string(), got == want);
    }
    for name in catalog_names().into_iter().filter(|n| n.starts_with("lens-")) {
        let m = lookup(&name)?;
        // every catalog lens space has order at most 7
        let elems = m.pi1.elements_up_to(8);
        let mut classes = Vec::new();
        for x in &elems {
            for y in &elems {
                for w in &elems {
                    classes.push(WrapClass::from_elems(&m.pi1, [x, y, w]));
                }
            }
        }
        classes.sort();
        classes.dedup();
        let summands = m.linking_module(&classes)?;
        let torsion = summands.iter().filter(|s| !s.is_free()).count();
        o.check(
            format!("{name} linking summands"),
            format!("{} classes of length 3, {torsion} with torsion", summands.len()),
            torsion == 0,
        );
    }
    Ok(o)
}

fn verdicts() -> Result<Outcome, CliError> {
    let mut o = Outcome {
        name: "verdicts",
        checks: vec![],
    };
    let expected = [
        ("s3", HVerdict::Free),
        ("d3", HVerdict::Free),
        ("s1xd2", HVerdict::Free),
        ("t2xi", HVerdict::Free),
        ("t3", HVerdict::Torsion),
        ("s2xs1", HVerdict::Torsion),
        ("f1xi", HVerdict::Torsion),
        ("f2xi", HVerdict::Torsion),
    ];
    for (name, want) in expected {
        let v = lookup(name)?.freeness_verdict();
        o.check(format!("H({name})"), format!("{:?} ({})", v.h, v.h_clause), v.h == want);
    }
    let m = lookup("f1xi")?;
    match nonabelian_witness(&m, 1) {
        Some(w) => {
            let ainv = m.pi1.inv(&w.a);
            let merged = m.pi1.merge_classes(&w.a, &w.g, &ainv);
            let detail = format!(
                "a={}, g={}, Δ̃ = {}",
                m.pi1.render(&w.a),
                m.pi1.render(&w.g),
                render_vector(&w.value.tilde, &m.pi1)
            );
            o.check(
                "non-abelian witness",
                detail,
                !merged.is_trivial() && !w.value.tilde.is_zero(),
            );
        }
        None => o.check("non-abelian witness", "none found", false),
    }
    Ok(o)
}

pub fn run(name: &str) -> Result<Outcome, CliError> {
    match name {
        "5" | "delta-loop" => local_loop(),
        "6.6" => theta_66(),
        "delta" => delta_example(),
        "6.8" => sphere_68(),
        "linking" => linking(),
        "verdicts" => verdicts(),
        other => Err(CliError::NotFound(format!(
            "example `{other}`; known: all, {}",
            NAMES.join(", ")
        ))),
    }
}

pub fn run_all() -> Result<Vec<Outcome>, CliError> {
    NAMES.iter().map(|n| run(n)).collect()
}
