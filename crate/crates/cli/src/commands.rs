use serde::{Deserialize, Serialize};

use hskein::intersect::{catalog_names, catalog_source, lookup_or_load, CVerdict, HVerdict, ManifoldData};
use hskein::paths::{render_labels, PathWord};
use hskein::present::{
    assemble_presentation, smith_normal_form_q, torsion_certificates, Bounds, Certificate, CertificateKind, Mode,
    PresentationExport,
};
use hskein::wrap::{skein_closure, WrapClass};
use hskein::Exec;

use crate::error::CliError;

/// Text for the terminal plus a structured payload for `--json`.
#[derive(Debug, Clone)]
pub struct Report {
    pub text: String,
    pub payload: serde_json::Value,
}

impl Report {
    fn new<P: Serialize>(text: String, payload: &P) -> Report {
        Report {
            text,
            payload: serde_json::to_value(payload).expect("payloads serialize"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalyzePayload {
    pub manifold: String,
    pub h: String,
    pub h_clause: String,
    pub c: String,
    pub c_clause: String,
    pub assertions: Vec<(String, String)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Occurrence {
    pub class: String,
    pub iota: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinkingPayload {
    pub manifold: String,
    pub alpha: String,
    pub lambda: u64,
    pub free: bool,
    pub annihilator: String,
    pub occurrences: Vec<Occurrence>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosurePayload {
    pub manifold: String,
    pub seeds: Vec<String>,
    pub conj_bound: usize,
    pub members: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum PathMap {
    S,
    Sf,
    Sif,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathPayload {
    pub path: String,
    pub map: PathMap,
    pub index: i64,
    pub value: Vec<(String, String)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificatePayload {
    pub row: Option<usize>,
    pub annihilator: String,
    pub element: Vec<(String, String)>,
    pub test: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentPayload {
    pub manifold: String,
    pub presentation: PresentationExport,
    pub certificates: Vec<CertificatePayload>,
    /// Invariant factors over ℚ[q] of the z = 0 matrix, when it has no u entries.
    pub smith_z0: Option<Vec<String>>,
}

pub fn load(arg: &str) -> Result<ManifoldData, CliError> {
    Ok(lookup_or_load(arg)?)
}

/// Seeds arrive as repeated flags, each holding one or more literals separated by `;`.
pub fn parse_seeds(m: &ManifoldData, seeds: &[String]) -> Result<Vec<WrapClass>, CliError> {
    let out: Vec<WrapClass> = seeds
        .iter()
        .flat_map(|s| s.split(';'))
        .filter(|s| !s.trim().is_empty())
        .map(|s| m.wrap(s.trim()))
        .collect::<Result<_, _>>()?;
    if out.is_empty() {
        return Err(CliError::Usage("at least one seed class is required".into()));
    }
    Ok(out)
}

pub fn analyze(m: &ManifoldData) -> Report {
    let v = m.freeness_verdict();
    let h = match v.h {
        HVerdict::Free => "FREE",
        HVerdict::Torsion => "TORSION",
    };
    let c = match v.c {
        CVerdict::Free => "FREE",
        CVerdict::Undecided => "UNDECIDED",
    };
    let mut text = format!("manifold: {}\nfundamental group: {}\n", m.name, m.pi1.kind());
    text.push_str(&format!("H(M): {h} ({})\n", v.h_clause));
    text.push_str(&format!("C(M): {c} ({})\n", v.c_clause));
    text.push_str("user assertions:\n");
    for (k, val) in &v.assertions {
        text.push_str(&format!("  {k} = {val}\n"));
    }
    let payload = AnalyzePayload {
        manifold: m.name.clone(),
        h: h.into(),
        h_clause: v.h_clause,
        c: c.into(),
        c_clause: v.c_clause,
        assertions: v.assertions,
    };
    Report::new(text, &payload)
}

pub fn linking(m: &ManifoldData, alpha: &str) -> Result<Report, CliError> {
    let alpha = m.wrap(alpha)?;
    let lambda = m.lambda(&alpha)?;
    let mut occurrences = Vec::new();
    for a in alpha.distinct() {
        occurrences.push(Occurrence {
            class: m.pi1.render_class(a),
            iota: m.iota_alpha_a(&alpha, a)?,
        });
    }
    let summand = &m.linking_module([&alpha])?[0];
    let mut text = format!("alpha: {}\n", alpha.render(&m.pi1));
    if summand.is_free() {
        text.push_str("λ=0, free\n");
    } else {
        text.push_str(&format!("λ={lambda}, annihilator {}\n", summand.annihilator));
    }
    for o in &occurrences {
        text.push_str(&format!("  ι(α, {}) = {}\n", o.class, o.iota));
    }
    let payload = LinkingPayload {
        manifold: m.name.clone(),
        alpha: alpha.render(&m.pi1),
        lambda,
        free: summand.is_free(),
        annihilator: summand.annihilator.to_string(),
        occurrences,
    };
    Ok(Report::new(text, &payload))
}

pub fn closure(m: &ManifoldData, seeds: &[WrapClass], conj_bound: usize, exec: Exec) -> Report {
    let c = skein_closure(seeds.iter().cloned(), &m.pi1, conj_bound, exec);
    let members: Vec<String> = c.members.iter().map(|a| a.render(&m.pi1)).collect();
    let mut text = format!("{} classes (conjugator bound {conj_bound})\n", members.len());
    for (a, s) in c.members.iter().zip(&members) {
        text.push_str(&format!("  [{}] {s}\n", a.len()));
    }
    let payload = ClosurePayload {
        manifold: m.name.clone(),
        seeds: seeds.iter().map(|a| a.render(&m.pi1)).collect(),
        conj_bound,
        members,
    };
    Report::new(text, &payload)
}

pub fn path_eval(src: &str, map: PathMap, m: Option<&ManifoldData>) -> Result<Report, CliError> {
    let model = m.map(|m| &m.pi1);
    let path = PathWord::parse(src, model)?;
    let v = match map {
        PathMap::S => path.s_eval(),
        PathMap::Sf => path.s_f(),
        PathMap::Sif => path.s_if(),
    };
    let text = format!("{}\n", render_labels(&v, model));
    let payload = PathPayload {
        path: path.render(model),
        map,
        index: path.index(),
        value: v.iter().map(|(k, c)| (k.render(model), c.to_string())).collect(),
    };
    Ok(Report::new(text, &payload))
}

fn certificate_payload(m: &ManifoldData, c: &Certificate) -> CertificatePayload {
    let test = match &c.kind {
        CertificateKind::Augmentation { image } => {
            let parts: Vec<String> = image.iter().map(|(k, n)| format!("{n}*{}", k.render(&m.pi1))).collect();
            format!("augmentation image {}", parts.join(" + "))
        }
        CertificateKind::Linking { class, lambda, residue } => {
            format!("linking λ({})={lambda}, residue {residue}", class.render(&m.pi1))
        }
    };
    CertificatePayload {
        row: c.row,
        annihilator: c.annihilator.to_string(),
        element: c
            .element
            .iter()
            .map(|(k, v)| (k.render(&m.pi1), v.to_string()))
            .collect(),
        test,
    }
}

pub fn present(
    m: &ManifoldData,
    seeds: &[WrapClass],
    mode: Mode,
    bounds: Bounds,
    certify: bool,
    exec: Exec,
) -> Result<Report, CliError> {
    let p = assemble_presentation(m, seeds, mode, bounds, exec)?;
    let mut text = p.render_table(&m.pi1);
    let smith_z0 = p.at_z_zero().map(|mx| {
        let s = smith_normal_form_q(&mx);
        s.invariants.iter().map(ToString::to_string).collect::<Vec<_>>()
    });
    if let Some(inv) = &smith_z0 {
        text.push_str(&format!("z=0 invariant factors over Q[q]: [{}]\n", inv.join(", ")));
    }
    let certificates: Vec<CertificatePayload> = if certify {
        torsion_certificates(m, &p)
            .iter()
            .map(|c| certificate_payload(m, c))
            .collect()
    } else {
        Vec::new()
    };
    if certify {
        if certificates.is_empty() {
            text.push_str("no torsion certificate found\n");
        }
        for c in &certificates {
            let element: Vec<String> = c.element.iter().map(|(k, v)| format!("({v})*{k}")).collect();
            text.push_str(&format!(
                "torsion: ({}) * [{}] = 0 from row {} ({})\n",
                c.annihilator,
                element.join(" + "),
                c.row.map_or("-".to_string(), |r| format!("r{}", r + 1)),
                c.test
            ));
        }
    }
    let payload = PresentPayload {
        manifold: m.name.clone(),
        presentation: p.export(&m.pi1),
        certificates,
        smith_z0,
    };
    Ok(Report::new(text, &payload))
}

pub fn catalog(name: Option<&str>) -> Result<Report, CliError> {
    match name {
        None => {
            let names = catalog_names();
            let text = names.iter().map(|n| format!("{n}\n")).collect();
            Ok(Report::new(text, &names))
        }
        Some(n) => {
            let src = catalog_source(n).ok_or_else(|| CliError::NotFound(format!("catalog entry `{n}`")))?;
            Ok(Report::new(src.clone(), &src))
        }
    }
}
