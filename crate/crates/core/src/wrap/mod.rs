//! Wrapping classes (multisets of conjugacy classes), their descendants and skein closures,
//! the u-action and free skein vectors.

mod closure;
mod lincomb;

use std::fmt;

use crate::groups::{ConjClass, GroupElem, GroupError, GroupModel};
use crate::ring::{RPoly, UPoly};

pub use closure::{descendants, homology_class, skein_closure, SkeinClosedSet, StarClosure};
pub use lincomb::{Coeff, LinComb};

/// An unordered sequence of conjugacy classes, stored sorted. `<>` is the empty class.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct WrapClass(Vec<ConjClass>);

pub type SkeinVector = LinComb<WrapClass, RPoly>;
pub type USkeinVector = LinComb<WrapClass, UPoly>;

impl WrapClass {
    pub fn new(mut classes: Vec<ConjClass>) -> Self {
        classes.sort();
        WrapClass(classes)
    }

    pub fn empty() -> Self {
        WrapClass(Vec::new())
    }

    pub fn from_elems<'a>(model: &GroupModel, elems: impl IntoIterator<Item = &'a GroupElem>) -> Self {
        WrapClass::new(elems.into_iter().map(|e| model.conj_class(e)).collect())
    }

    pub fn classes(&self) -> &[ConjClass] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, c: &ConjClass) -> bool {
        self.0.binary_search(c).is_ok()
    }

    pub fn multiplicity(&self, c: &ConjClass) -> usize {
        self.0.iter().filter(|x| *x == c).count()
    }

    pub fn trivial_count(&self) -> usize {
        self.0.iter().take_while(|c| c.is_trivial()).count()
    }

    /// The class with all trivial entries removed.
    pub fn without_trivial(&self) -> WrapClass {
        WrapClass(self.0[self.trivial_count()..].to_vec())
    }

    pub fn is_all_trivial(&self) -> bool {
        self.trivial_count() == self.len()
    }

    /// α∖c: one occurrence of c removed.
    pub fn remove_one(&self, c: &ConjClass) -> Option<WrapClass> {
        let i = self.0.iter().position(|x| x == c)?;
        let mut v = self.0.clone();
        v.remove(i);
        Some(WrapClass(v))
    }

    pub fn with(&self, c: ConjClass) -> WrapClass {
        let mut v = self.0.clone();
        v.push(c);
        WrapClass::new(v)
    }

    /// Adjoins `i` trivial classes.
    pub fn u_act(&self, model: &GroupModel, i: usize) -> WrapClass {
        let one = model.conj_class(&model.identity());
        let mut v = self.0.clone();
        v.extend(std::iter::repeat_n(one, i));
        WrapClass::new(v)
    }

    /// Distinct classes in order.
    pub fn distinct(&self) -> Vec<&ConjClass> {
        let mut out: Vec<&ConjClass> = self.0.iter().collect();
        out.dedup();
        out
    }

    /// Parses `<b1, b2^-1, 1>`; entries may be any group-element literal.
    pub fn parse(model: &GroupModel, src: &str) -> Result<WrapClass, GroupError> {
        let t = src.trim();
        let lead = src.len() - src.trim_start().len();
        let inner = t
            .strip_prefix('<')
            .and_then(|s| s.strip_suffix('>'))
            .ok_or_else(|| GroupError::Parse {
                column: lead + 1,
                message: "expected <...>".into(),
            })?;
        let mut classes = Vec::new();
        if inner.trim().is_empty() {
            return Ok(WrapClass::empty());
        }
        let mut depth = 0i32;
        let mut start = 0;
        let offset = lead + 1;
        let mut pieces = Vec::new();
        for (i, ch) in inner.char_indices() {
            match ch {
                '[' | '(' => depth += 1,
                ']' | ')' => depth -= 1,
                ',' if depth == 0 => {
                    pieces.push((start, &inner[start..i]));
                    start = i + 1;
                }
                _ => {}
            }
        }
        pieces.push((start, &inner[start..]));
        for (at, piece) in pieces {
            let e = model.parse_elem(piece).map_err(|e| match e {
                GroupError::Parse { column, message } => GroupError::Parse {
                    column: column + offset + at,
                    message,
                },
                other => other,
            })?;
            classes.push(model.conj_class(&e));
        }
        Ok(WrapClass::new(classes))
    }

    pub fn render(&self, model: &GroupModel) -> String {
        let parts: Vec<String> = self.0.iter().map(|c| model.render_class(c)).collect();
        format!("<{}>", parts.join(", "))
    }
}

impl fmt::Debug for WrapClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter().map(|c| c.rep())).finish()
    }
}

/// Renders a skein vector with model-aware keys.
pub fn render_vector<C: Coeff>(v: &LinComb<WrapClass, C>, model: &GroupModel) -> String {
    v.render(|k| k.render(model))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn literal_is_order_insensitive() {
        let g = GroupModel::free_abelian(3);
        let a = WrapClass::parse(&g, "<b2^-1, 1, b1>").unwrap();
        let b = WrapClass::parse(&g, "<b1,1,b2^-1>").unwrap();
        assert_eq!(a, b);
        assert_eq!(a.render(&g), "<1, b1, b2^-1>");
        assert_eq!(WrapClass::parse(&g, "<>").unwrap(), WrapClass::empty());
        assert_eq!(
            WrapClass::parse(&g, "<b1+b2, [0,0,1]>").unwrap().render(&g),
            "<b1*b2, b3>"
        );
    }

    #[test]
    fn literal_errors_point_into_the_entry() {
        let g = GroupModel::free_abelian(2);
        assert!(matches!(
            WrapClass::parse(&g, "<b1, b2^>"),
            Err(GroupError::Parse { column: 9, .. })
        ));
        assert!(WrapClass::parse(&g, "b1").is_err());
    }

    #[test]
    fn u_action() {
        let g = GroupModel::free_abelian(3);
        let p = |s: &str| WrapClass::parse(&g, s).unwrap();
        assert_eq!(WrapClass::empty().u_act(&g, 2), p("<1,1>"));
        assert_eq!(p("<b1>").u_act(&g, 1), p("<1,b1>"));
        assert_eq!(p("<b1,b2>").u_act(&g, 0), p("<b1,b2>"));
    }
}
