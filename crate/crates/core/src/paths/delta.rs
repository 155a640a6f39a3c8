//! The local loop around a pair of simultaneous mixed double points.
//!
//! Crossing states are written K_{xy} with x, y ∈ {+, −, 0} for the two double points. The loop
//! K₊₋ → K₋₋ → K₋₊ → K₊₊ → K₊₋ passes four crossings whose smoothings are K₀₋, K₋₀, K₀₊, K₊₀.

use std::fmt;

use crate::ring::RPoly;
use crate::wrap::LinComb;

use super::{CrossingEvent, Label, PathWord};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LocalState {
    K0Minus,
    KMinus0,
    K0Plus,
    KPlus0,
    /// K₀₊ = K₀₋ once self-crossings are ignored.
    K0Circ,
    /// K₊₀ = K₋₀ once self-crossings are ignored.
    KCirc0,
    K00,
}

impl LocalState {
    pub const ALL: [LocalState; 7] = [
        LocalState::K0Minus,
        LocalState::KMinus0,
        LocalState::K0Plus,
        LocalState::KPlus0,
        LocalState::K0Circ,
        LocalState::KCirc0,
        LocalState::K00,
    ];

    pub fn name(self) -> &'static str {
        match self {
            LocalState::K0Minus => "K0-",
            LocalState::KMinus0 => "K-0",
            LocalState::K0Plus => "K0+",
            LocalState::KPlus0 => "K+0",
            LocalState::K0Circ => "K0o",
            LocalState::KCirc0 => "Ko0",
            LocalState::K00 => "K00",
        }
    }

    fn from_label(l: &Label) -> LocalState {
        let Label::Symbol(s) = l else {
            panic!("local loop labels are symbols");
        };
        *LocalState::ALL
            .iter()
            .find(|st| st.name() == s)
            .expect("known local state")
    }
}

impl fmt::Display for LocalState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub fn delta_loop_path() -> PathWord {
    let ev = |sign, st: LocalState| CrossingEvent::new(sign, Label::symbol(st.name()));
    PathWord::looped(
        Label::symbol("K+-"),
        vec![
            ev(1, LocalState::K0Minus),
            ev(-1, LocalState::KMinus0),
            ev(-1, LocalState::K0Plus),
            ev(1, LocalState::KPlus0),
        ],
    )
}

/// s of the loop: qK₀₋ − qK₋₀ − q⁻¹K₀₊ + q⁻¹K₊₀.
pub fn delta_loop_raw() -> LinComb<LocalState, RPoly> {
    delta_loop_path().s_eval().map_keys(LocalState::from_label)
}

/// The loop value after expanding (unpaired) or identifying (paired) the K₊ smoothings.
/// Kept free of z.
pub fn delta_loop(paired: bool) -> LinComb<LocalState, RPoly> {
    use LocalState::*;
    let t = |st| LinComb::term(st, RPoly::one());
    // K₀₊ = q²K₀₋ + qzK₀₀ and K₊₀ = q²K₋₀ + qzK₀₀
    let expand = |a, b| LinComb::from_terms([(a, RPoly::monomial(1, 2, 0)), (b, RPoly::monomial(1, 1, 1))]);
    delta_loop_raw().substitute(|k| match (paired, *k) {
        (false, K0Plus) => expand(K0Minus, K00),
        (false, KPlus0) => expand(KMinus0, K00),
        (true, K0Plus | K0Minus) => t(K0Circ),
        (true, KPlus0 | KMinus0) => t(KCirc0),
        (_, other) => t(other),
    })
}
