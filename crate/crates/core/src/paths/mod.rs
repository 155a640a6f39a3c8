//! The skein calculus of paths of links: crossing events, the index, the expansion maps
//! s, s_f and s_if, and the local Δ(L) loop.

mod delta;
mod literal;

use std::fmt;

use crate::groups::{GroupError, GroupModel};
use crate::ring::RPoly;
use crate::wrap::{LinComb, WrapClass};

pub use delta::{delta_loop, delta_loop_path, delta_loop_raw, LocalState};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PathError {
    #[error("cannot compose: first path ends at {end} but second starts at {start}")]
    EndpointMismatch { end: String, start: String },
    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// A state of a path: a wrapping class, or an opaque symbol used only for identity.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    Wrap(WrapClass),
    Symbol(String),
}

/// Skein vector whose keys may be symbolic states.
pub type LabelVector = LinComb<Label, RPoly>;

impl Label {
    pub fn symbol(s: &str) -> Self {
        Label::Symbol(s.to_string())
    }

    pub fn as_wrap(&self) -> Option<&WrapClass> {
        match self {
            Label::Wrap(w) => Some(w),
            Label::Symbol(_) => None,
        }
    }

    pub fn render(&self, model: Option<&GroupModel>) -> String {
        match (self, model) {
            (Label::Wrap(w), Some(m)) => w.render(m),
            (Label::Wrap(w), None) => format!("{w:?}"),
            (Label::Symbol(s), _) => format!("<{s}>"),
        }
    }
}

impl fmt::Debug for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(None))
    }
}

impl From<WrapClass> for Label {
    fn from(w: WrapClass) -> Self {
        Label::Wrap(w)
    }
}

/// A mixed crossing passed along a path: its sign ε = ±1 and the class of the smoothing.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CrossingEvent {
    pub sign: i8,
    pub smoothed: Label,
}

impl CrossingEvent {
    pub fn new(sign: i8, smoothed: impl Into<Label>) -> Self {
        assert!(sign == 1 || sign == -1, "crossing sign must be ±1");
        CrossingEvent {
            sign,
            smoothed: smoothed.into(),
        }
    }
}

/// A path in almost general position: endpoints and the ordered crossing events.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PathWord {
    pub start: Label,
    pub end: Label,
    pub events: Vec<CrossingEvent>,
}

impl PathWord {
    pub fn new(start: impl Into<Label>, end: impl Into<Label>, events: Vec<CrossingEvent>) -> Self {
        PathWord {
            start: start.into(),
            end: end.into(),
            events,
        }
    }

    /// The constant path at `at`.
    pub fn constant(at: impl Into<Label>) -> Self {
        let at = at.into();
        PathWord {
            start: at.clone(),
            end: at,
            events: vec![],
        }
    }

    /// A loop based at `at`.
    pub fn looped(at: impl Into<Label>, events: Vec<CrossingEvent>) -> Self {
        let at = at.into();
        PathWord {
            start: at.clone(),
            end: at,
            events,
        }
    }

    pub fn index(&self) -> i64 {
        self.events.iter().map(|e| e.sign as i64).sum()
    }

    pub fn len(&self) -> usize {
        self.events.len()
    }

    pub fn is_empty(&self) -> bool {
        self.events.is_empty()
    }

    /// s(γ) = Σ εᵢ q^{2(ε₁+…+εᵢ₋₁)+εᵢ} K_{tᵢ}.
    pub fn s_eval(&self) -> LabelVector {
        let mut out = LabelVector::zero();
        let mut before = 0i64;
        for e in &self.events {
            let eps = e.sign as i64;
            out.add_term(e.smoothed.clone(), RPoly::monomial(eps, 2 * before + eps, 0));
            before += eps;
        }
        out
    }

    /// s_f(γ) = q^{2ε(γ)}γ(1) + z·s(γ).
    pub fn s_f(&self) -> LabelVector {
        let mut out = self.s_eval().scale(&RPoly::z());
        out.add_term(self.end.clone(), RPoly::monomial(1, 2 * self.index(), 0));
        out
    }

    /// s_if(γ) = q^{2ε(γ)}γ(1) − γ(0) + z·s(γ).
    pub fn s_if(&self) -> LabelVector {
        let mut out = self.s_f();
        out.add_term(self.start.clone(), -RPoly::one());
        out
    }

    pub fn compose(&self, other: &PathWord) -> Result<PathWord, PathError> {
        if self.end != other.start {
            return Err(PathError::EndpointMismatch {
                end: self.end.render(None),
                start: other.start.render(None),
            });
        }
        let mut events = self.events.clone();
        events.extend(other.events.iter().cloned());
        Ok(PathWord {
            start: self.start.clone(),
            end: other.end.clone(),
            events,
        })
    }

    pub fn invert(&self) -> PathWord {
        PathWord {
            start: self.end.clone(),
            end: self.start.clone(),
            events: self
                .events
                .iter()
                .rev()
                .map(|e| CrossingEvent {
                    sign: -e.sign,
                    smoothed: e.smoothed.clone(),
                })
                .collect(),
        }
    }

    /// Parses `start=<...>; events=(+1:<...>)(-1:<...>); end=<...>`. Labels are wrapping
    /// classes when a model is given and opaque symbols otherwise.
    pub fn parse(src: &str, model: Option<&GroupModel>) -> Result<PathWord, PathError> {
        literal::parse_path(src, model)
    }

    pub fn render(&self, model: Option<&GroupModel>) -> String {
        literal::render_path(self, model)
    }
}

/// Renders a label vector, with wrapping-class keys rendered through `model`.
pub fn render_labels(v: &LabelVector, model: Option<&GroupModel>) -> String {
    v.render(|k| k.render(model))
}
