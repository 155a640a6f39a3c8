//! The TOML manifold descriptor.
//!
//! ```toml
//! name = "t3"
//! b1 = 3
//! b1_boundary = 0
//! h2_rank = 3
//! pairing = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
//! torus_class = [{ a = "b1", h = "b2", class = [0, 0, 1] }]
//! sphere_subgroup = []
//! boundary_tori = [["b1", "b2"]]
//!
//! [pi1]
//! kind = "free_abelian"   # also "free", "cyclic", "trivial"
//! rank = 3
//! torsion = []
//! generators = ["b1", "b2", "b3"]
//!
//! [flags]
//! pi2_zero = true
//! atoroidal = false
//!
//! [[theta]]
//! name = "h"
//! alpha = "<b1,b2,b3>"
//! component = "b1"
//! centralizer = "b3^-1"        # or: sphere = [1, 0, 0]
//! events = [{ with = "b2", sign = 1 }]
//!
//! [[delta]]
//! alpha = "<b1,b1^-1,b2>"
//! pair = ["b1", "b1^-1"]
//! g = "b3"
//! events = [{ with = "b2", sign = -1 }]
//! ```
//!
//! Torus classes are given for generator pairs and extended antisymmetrically. An event names
//! either the other component it crosses (`with`) or the smoothed class outright (`smoothed`).

use serde::Deserialize;

use crate::groups::{ConjClass, GroupElem, GroupError, GroupKind, GroupModel};
use crate::wrap::WrapClass;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DescriptorError {
    #[error("{line}:{column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("invalid descriptor: {0}")]
    Invalid(String),
    #[error("unsupported model: {0}")]
    Unsupported(String),
    #[error("unknown catalog entry `{0}`")]
    UnknownCatalog(String),
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
}

/// Topological hypotheses declared by the user; never verified.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Flags {
    #[serde(default)]
    pub pi2_zero: bool,
    #[serde(default)]
    pub atoroidal: bool,
    #[serde(default)]
    pub surface_product: bool,
    #[serde(default)]
    pub cyclic_pi1: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EventSpec {
    /// Crossing the remaining component of class `class`; the smoothing merges the two.
    With { class: ConjClass, sign: i8 },
    /// Crossing with an explicitly given smoothing.
    Explicit { smoothed: WrapClass, sign: i8 },
}

impl EventSpec {
    pub fn sign(&self) -> i8 {
        match self {
            EventSpec::With { sign, .. } | EventSpec::Explicit { sign, .. } => *sign,
        }
    }
}

/// The self-homotopy behind a Θ generator: an element of the centralizer, or a sphere class.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SelfHomotopy {
    Centralizer(GroupElem),
    Sphere(Vec<i64>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThetaEntry {
    pub name: String,
    pub alpha: WrapClass,
    pub component: ConjClass,
    pub h: SelfHomotopy,
    pub events: Vec<EventSpec>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaEntry {
    pub name: String,
    pub alpha: WrapClass,
    pub pair: (GroupElem, GroupElem),
    pub g: GroupElem,
    pub events: Vec<EventSpec>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ManifoldData {
    pub name: String,
    pub pi1: GroupModel,
    pub b1: usize,
    pub b1_boundary: usize,
    pub h2_rank: usize,
    /// m × n matrix of ι: H₂ ⊗ H₁/torsion → ℤ.
    pub pairing: Vec<Vec<i64>>,
    /// n × n array of H₂ vectors, antisymmetric.
    pub torus_class: Vec<Vec<Vec<i64>>>,
    pub sphere_subgroup: Vec<Vec<i64>>,
    pub flags: Flags,
    pub boundary_tori: Vec<(GroupElem, GroupElem)>,
    pub theta_entries: Vec<ThetaEntry>,
    pub delta_entries: Vec<DeltaEntry>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDescriptor {
    name: String,
    b1: usize,
    b1_boundary: usize,
    h2_rank: usize,
    pi1: RawPi1,
    #[serde(default)]
    pairing: Vec<Vec<i64>>,
    #[serde(default)]
    torus_class: Vec<RawTorus>,
    #[serde(default)]
    sphere_subgroup: Vec<Vec<i64>>,
    #[serde(default)]
    flags: Flags,
    #[serde(default)]
    boundary_tori: Vec<[String; 2]>,
    #[serde(default)]
    theta: Vec<RawTheta>,
    #[serde(default)]
    delta: Vec<RawDelta>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPi1 {
    kind: String,
    #[serde(default)]
    rank: usize,
    #[serde(default)]
    torsion: Vec<u64>,
    order: Option<u64>,
    generators: Option<Vec<String>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawTorus {
    a: String,
    h: String,
    class: Vec<i64>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawEvent {
    with: Option<String>,
    smoothed: Option<String>,
    sign: i8,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawTheta {
    #[serde(default)]
    name: String,
    alpha: String,
    component: String,
    centralizer: Option<String>,
    sphere: Option<Vec<i64>>,
    #[serde(default)]
    events: Vec<RawEvent>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDelta {
    #[serde(default)]
    name: String,
    alpha: String,
    pair: [String; 2],
    g: String,
    #[serde(default)]
    events: Vec<RawEvent>,
}

fn line_col(src: &str, offset: usize) -> (usize, usize) {
    let before = &src[..offset.min(src.len())];
    let line = before.matches('\n').count() + 1;
    let column = before.len() - before.rfind('\n').map_or(0, |i| i + 1) + 1;
    (line, column)
}

fn invalid(context: &str, e: impl std::fmt::Display) -> DescriptorError {
    DescriptorError::Invalid(format!("{context}: {e}"))
}

impl ManifoldData {
    pub fn from_toml(src: &str) -> Result<ManifoldData, DescriptorError> {
        let raw: RawDescriptor = toml::from_str(src).map_err(|e| {
            let (line, column) = e.span().map_or((1, 1), |s| line_col(src, s.start));
            DescriptorError::Parse {
                line,
                column,
                message: e.message().trim().to_string(),
            }
        })?;
        raw.build()
    }

    /// Free rank n of H₁.
    pub fn h1_rank(&self) -> usize {
        self.pi1.free_rank()
    }
}

impl RawDescriptor {
    fn build(self) -> Result<ManifoldData, DescriptorError> {
        let pi1 = self.pi1.build()?;
        let n = pi1.free_rank();
        let m = self.h2_rank;
        if self.b1 != n {
            return Err(DescriptorError::Invalid(format!(
                "b1 = {} but the fundamental group has free abelianization rank {n}",
                self.b1
            )));
        }
        let pairing = if self.pairing.is_empty() {
            vec![vec![0; n]; m]
        } else {
            self.pairing
        };
        if pairing.len() != m || pairing.iter().any(|r| r.len() != n) {
            return Err(DescriptorError::Invalid(format!("pairing must be a {m}×{n} matrix")));
        }
        let mut torus_class = vec![vec![vec![0; m]; n]; n];
        let mut given = vec![vec![false; n]; n];
        for t in &self.torus_class {
            let ctx = format!("torus_class ({}, {})", t.a, t.h);
            let i = free_generator_index(&pi1, &t.a).ok_or_else(|| invalid(&ctx, "expected a free generator"))?;
            let j = free_generator_index(&pi1, &t.h).ok_or_else(|| invalid(&ctx, "expected a free generator"))?;
            if t.class.len() != m {
                return Err(invalid(&ctx, format!("class must have {m} entries")));
            }
            let neg: Vec<i64> = t.class.iter().map(|x| -x).collect();
            let clash = (i == j && t.class.iter().any(|x| *x != 0))
                || (given[i][j] && torus_class[i][j] != t.class)
                || (given[j][i] && torus_class[j][i] != neg);
            if clash {
                return Err(invalid(&ctx, "torus classes must be alternating"));
            }
            torus_class[i][j] = t.class.clone();
            torus_class[j][i] = neg;
            given[i][j] = true;
            given[j][i] = true;
        }
        if self.sphere_subgroup.iter().any(|s| s.len() != m) {
            return Err(DescriptorError::Invalid(format!(
                "sphere classes must have {m} entries"
            )));
        }
        if self.flags.pi2_zero && self.sphere_subgroup.iter().any(|s| s.iter().any(|x| *x != 0)) {
            return Err(DescriptorError::Invalid(
                "pi2_zero is declared but sphere_subgroup is nonzero".into(),
            ));
        }
        if self.flags.cyclic_pi1 && !pi1.is_cyclic() {
            return Err(DescriptorError::Invalid(
                "cyclic_pi1 is declared for a non-cyclic group".into(),
            ));
        }
        let mut flags = self.flags;
        flags.cyclic_pi1 = pi1.is_cyclic();
        let elem = |ctx: &str, s: &str| pi1.parse_elem(s).map_err(|e| invalid(ctx, e));
        let class = |ctx: &str, s: &str| elem(ctx, s).map(|e| pi1.conj_class(&e));
        let boundary_tori = self
            .boundary_tori
            .iter()
            .map(|[a, b]| Ok((elem("boundary_tori", a)?, elem("boundary_tori", b)?)))
            .collect::<Result<Vec<_>, DescriptorError>>()?;
        let events = |ctx: &str, evs: &[RawEvent]| -> Result<Vec<EventSpec>, DescriptorError> {
            evs.iter()
                .map(|e| {
                    if e.sign != 1 && e.sign != -1 {
                        return Err(invalid(ctx, "event sign must be 1 or -1"));
                    }
                    match (&e.with, &e.smoothed) {
                        (Some(w), None) => Ok(EventSpec::With {
                            class: class(ctx, w)?,
                            sign: e.sign,
                        }),
                        (None, Some(s)) => Ok(EventSpec::Explicit {
                            smoothed: WrapClass::parse(&pi1, s).map_err(|e| invalid(ctx, e))?,
                            sign: e.sign,
                        }),
                        _ => Err(invalid(ctx, "an event needs exactly one of `with` and `smoothed`")),
                    }
                })
                .collect()
        };
        let wrap = |ctx: &str, s: &str| WrapClass::parse(&pi1, s).map_err(|e| invalid(ctx, e));
        let mut theta_entries = Vec::new();
        for (k, t) in self.theta.iter().enumerate() {
            let ctx = format!(
                "theta `{}`",
                if t.name.is_empty() {
                    k.to_string()
                } else {
                    t.name.clone()
                }
            );
            let alpha = wrap(&ctx, &t.alpha)?;
            let component = class(&ctx, &t.component)?;
            if !alpha.contains(&component) {
                return Err(invalid(&ctx, "component does not occur in alpha"));
            }
            let h = match (&t.centralizer, &t.sphere) {
                (Some(c), None) => SelfHomotopy::Centralizer(elem(&ctx, c)?),
                (None, Some(s)) if s.len() == m => SelfHomotopy::Sphere(s.clone()),
                (None, Some(_)) => return Err(invalid(&ctx, format!("sphere must have {m} entries"))),
                _ => return Err(invalid(&ctx, "exactly one of `centralizer` and `sphere` is required")),
            };
            if let SelfHomotopy::Centralizer(h) = &h {
                if !pi1.commutes(h, component.rep()) {
                    return Err(invalid(&ctx, "centralizer element does not commute with the component"));
                }
            }
            theta_entries.push(ThetaEntry {
                name: t.name.clone(),
                alpha,
                component,
                h,
                events: events(&ctx, &t.events)?,
            });
        }
        let mut delta_entries = Vec::new();
        for (k, d) in self.delta.iter().enumerate() {
            let ctx = format!(
                "delta `{}`",
                if d.name.is_empty() {
                    k.to_string()
                } else {
                    d.name.clone()
                }
            );
            let alpha = wrap(&ctx, &d.alpha)?;
            let pair = (elem(&ctx, &d.pair[0])?, elem(&ctx, &d.pair[1])?);
            if pair.0.is_identity() || pair.1.is_identity() {
                return Err(invalid(&ctx, "the banded pair must be nontrivial"));
            }
            let rest = alpha.remove_one(&pi1.conj_class(&pair.0));
            if rest.and_then(|r| r.remove_one(&pi1.conj_class(&pair.1))).is_none() {
                return Err(invalid(&ctx, "pair does not occur in alpha"));
            }
            delta_entries.push(DeltaEntry {
                name: d.name.clone(),
                alpha,
                pair,
                g: elem(&ctx, &d.g)?,
                events: events(&ctx, &d.events)?,
            });
        }
        Ok(ManifoldData {
            name: self.name,
            pi1,
            b1: self.b1,
            b1_boundary: self.b1_boundary,
            h2_rank: m,
            pairing,
            torus_class,
            sphere_subgroup: self.sphere_subgroup,
            flags,
            boundary_tori,
            theta_entries,
            delta_entries,
        })
    }
}

fn free_generator_index(pi1: &GroupModel, name: &str) -> Option<usize> {
    let i = pi1.names().iter().position(|n| n == name)?;
    (i < pi1.free_rank()).then_some(i)
}

impl RawPi1 {
    fn build(&self) -> Result<GroupModel, DescriptorError> {
        let names = |count: usize, default: &dyn Fn(usize) -> String| {
            self.generators
                .clone()
                .unwrap_or_else(|| (0..count).map(default).collect())
        };
        let model = match self.kind.as_str() {
            "trivial" => GroupModel::new(
                GroupKind::FreeAbelian {
                    rank: 0,
                    torsion: vec![],
                },
                vec![],
            ),
            "free_abelian" => {
                let count = self.rank + self.torsion.len();
                let rank = self.rank;
                GroupModel::new(
                    GroupKind::FreeAbelian {
                        rank,
                        torsion: self.torsion.clone(),
                    },
                    names(count, &|i| {
                        if i < rank {
                            format!("b{}", i + 1)
                        } else {
                            format!("c{}", i - rank + 1)
                        }
                    }),
                )
            }
            "free" => GroupModel::new(
                GroupKind::FreeGroup { rank: self.rank },
                names(self.rank, &|i| {
                    if self.rank == 2 {
                        ["x", "y"][i].to_string()
                    } else {
                        format!("x{}", i + 1)
                    }
                }),
            ),
            "cyclic" => {
                let order = self
                    .order
                    .ok_or_else(|| DescriptorError::Invalid("a cyclic group needs `order`".into()))?;
                GroupModel::new(GroupKind::FiniteCyclic { order }, names(1, &|_| "a".to_string()))
            }
            other => {
                return Err(DescriptorError::Unsupported(format!(
                    "group kind `{other}`; supported kinds are trivial, free_abelian, free and cyclic"
                )))
            }
        };
        model.map_err(|e: GroupError| DescriptorError::Invalid(e.to_string()))
    }
}
