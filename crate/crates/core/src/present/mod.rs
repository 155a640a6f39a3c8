//! Structure sets, relation generators, reduction filters, presentation matrices, torsion
//! certificates and Smith forms over ℚ[q].

mod assemble;
mod certify;
mod generators;
mod smith;
mod structure;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::groups::{ConjClass, GroupElem, GroupError, GroupModel};
use crate::intersect::{EventSpec, IntersectError, SelfHomotopy};
use crate::ring::{parse_upoly, RingError};
use crate::wrap::{SkeinVector, USkeinVector, WrapClass};

pub use assemble::{assemble_presentation, row_length};
pub use certify::{
    certify_relation, nonabelian_witness, torsion_certificate, torsion_certificates, Certificate, CertificateKind,
    NonAbelianWitness,
};
pub use generators::{
    default_delta_events, default_sphere_events, default_theta_events, delta_factor, delta_generator, theta_generator,
    theta_sphere_generator, to_graded, to_ungraded, DeltaValue,
};
pub use smith::{smith_normal_form_q, SmithForm};
pub use structure::{reduce_structure_set, structure_set};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PresentError {
    #[error("{0} does not occur in the wrapping class")]
    NotInAlpha(String),
    #[error("Δ generators need a pair of nontrivial classes")]
    TrivialPair,
    #[error("{0} contains trivial classes; sphere generators act on trivial-free classes")]
    NotReduced(String),
    #[error(transparent)]
    Intersect(#[from] IntersectError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Ring(#[from] RingError),
}

/// Presentation over R = ℤ[q±1, z] on the classes of a skein closed set, or over R[u] on the
/// trivial-free classes with u adjoining a trivial component.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Mode {
    R,
    Ru,
}

impl FromStr for Mode {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "r" | "R" => Ok(Mode::R),
            "ru" | "Ru" | "R[u]" => Ok(Mode::Ru),
            _ => Err(format!("unknown mode `{s}`, expected r or ru")),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::R => "R",
            Mode::Ru => "R[u]",
        })
    }
}

/// Word-length bounds for conjugators in closures and for double coset representatives.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    pub conj: usize,
    pub coset: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds { conj: 1, coset: 1 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GeneratorKind {
    /// Self-homotopy of the component a.
    Theta { a: ConjClass, h: SelfHomotopy },
    /// Re-banding of the pair (a, b) along g.
    Delta { a: GroupElem, b: GroupElem, g: GroupElem },
    /// Sphere swept by an adjoined trivial component (R[u] mode).
    Sphere { s: Vec<i64> },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Generator {
    pub source: WrapClass,
    pub kind: GeneratorKind,
    /// Name of the descriptor entry that supplied the crossing data.
    pub entry: Option<String>,
}

impl Generator {
    pub fn render(&self, model: &GroupModel) -> String {
        let body = match &self.kind {
            GeneratorKind::Theta {
                a,
                h: SelfHomotopy::Centralizer(h),
            } => {
                format!("T({}; h={})", model.render_class(a), model.render(h))
            }
            GeneratorKind::Theta {
                a,
                h: SelfHomotopy::Sphere(s),
            } => {
                format!("T({}; sphere={s:?})", model.render_class(a))
            }
            GeneratorKind::Delta { a, b, g } => {
                format!("D({}, {}; g={})", model.render(a), model.render(b), model.render(g))
            }
            GeneratorKind::Sphere { s } => format!("S({s:?})"),
        };
        match &self.entry {
            Some(name) => format!("{body} [{name}]"),
            None => body,
        }
    }
}

/// Why a generator was removed before evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Reduction {
    /// Δ generators vanish when π₁ is cyclic.
    CyclicGroup,
    /// a, b and g lie in one cyclic subgroup.
    CommonRoot,
    /// The band or torus can be pushed into a boundary torus.
    Peripheral,
    /// h ∈ Z(a) ∩ ⟨root(a)⟩ with π₂ = 0.
    CyclicCentralizer,
    /// M = F × I.
    SurfaceProduct,
}

impl fmt::Display for Reduction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Reduction::CyclicGroup => "cyclic fundamental group",
            Reduction::CommonRoot => "pair and band in one cyclic subgroup",
            Reduction::Peripheral => "peripheral",
            Reduction::CyclicCentralizer => "h in the cyclic part of Z(a)",
            Reduction::SurfaceProduct => "surface times interval",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Row {
    pub generator: Generator,
    pub events: Vec<EventSpec>,
    /// ε(h) for Θ and sphere rows, δ(g) for Δ rows.
    pub index: i64,
    pub values: USkeinVector,
    /// Δ̃ for Δ rows.
    pub delta_tilde: Option<SkeinVector>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PresentationMatrix {
    pub mode: Mode,
    pub bounds: Bounds,
    pub columns: Vec<WrapClass>,
    pub rows: Vec<Row>,
    /// Surviving generators without crossing data.
    pub incomplete: Vec<Generator>,
    pub dropped: Vec<(Generator, Reduction)>,
}

impl PresentationMatrix {
    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(|r| r.values.is_zero())
    }

    pub fn nonzero_rows(&self) -> impl Iterator<Item = (usize, &Row)> + '_ {
        self.rows.iter().enumerate().filter(|(_, r)| !r.values.is_zero())
    }

    /// The z = 0 specialization as a dense matrix over ℤ[q±1]; `None` in R[u] mode when a
    /// coefficient involves u.
    pub fn at_z_zero(&self) -> Option<Vec<Vec<crate::ring::LaurentPoly>>> {
        self.rows
            .iter()
            .map(|r| {
                self.columns
                    .iter()
                    .map(|c| r.values.coeff(c).to_rpoly().map(|p| p.at_z_zero()))
                    .collect::<Option<Vec<_>>>()
            })
            .collect()
    }

    pub fn render_table(&self, model: &GroupModel) -> String {
        let mut out = format!(
            "mode {}; {} columns, {} rows\n",
            self.mode,
            self.columns.len(),
            self.rows.len()
        );
        for (i, c) in self.columns.iter().enumerate() {
            out.push_str(&format!("  c{:<3} {}\n", i + 1, c.render(model)));
        }
        for (i, r) in self.rows.iter().enumerate() {
            out.push_str(&format!(
                "  r{:<3} {} @ {}: {}\n",
                i + 1,
                r.generator.render(model),
                r.generator.source.render(model),
                r.values.render(|k| k.render(model))
            ));
        }
        for g in &self.incomplete {
            out.push_str(&format!(
                "  incomplete: {} @ {}\n",
                g.render(model),
                g.source.render(model)
            ));
        }
        for (g, why) in &self.dropped {
            out.push_str(&format!(
                "  dropped: {} @ {} ({why})\n",
                g.render(model),
                g.source.render(model)
            ));
        }
        out
    }

    pub fn export(&self, model: &GroupModel) -> PresentationExport {
        PresentationExport {
            mode: self.mode,
            columns: self.columns.iter().map(|c| c.render(model)).collect(),
            rows: self
                .rows
                .iter()
                .map(|r| RowExport {
                    generator: r.generator.render(model),
                    source: r.generator.source.render(model),
                    index: r.index,
                    terms: r.values.iter().map(|(k, c)| (k.render(model), c.to_string())).collect(),
                })
                .collect(),
            incomplete: self
                .incomplete
                .iter()
                .map(|g| format!("{} @ {}", g.render(model), g.source.render(model)))
                .collect(),
            dropped: self
                .dropped
                .iter()
                .map(|(g, why)| (format!("{} @ {}", g.render(model), g.source.render(model)), *why))
                .collect(),
        }
    }
}

/// Machine-readable form of a presentation: literals for classes, rendered coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationExport {
    pub mode: Mode,
    pub columns: Vec<String>,
    pub rows: Vec<RowExport>,
    pub incomplete: Vec<String>,
    pub dropped: Vec<(String, Reduction)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RowExport {
    pub generator: String,
    pub source: String,
    pub index: i64,
    pub terms: Vec<(String, String)>,
}

impl PresentationExport {
    /// Parses the rows back into skein vectors.
    pub fn parse_rows(&self, model: &GroupModel) -> Result<Vec<USkeinVector>, PresentError> {
        self.rows
            .iter()
            .map(|r| {
                let mut v = USkeinVector::zero();
                for (k, c) in &r.terms {
                    v.add_term(WrapClass::parse(model, k)?, parse_upoly(c)?);
                }
                Ok(v)
            })
            .collect()
    }
}
