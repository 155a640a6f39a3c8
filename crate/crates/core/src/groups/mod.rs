//! Group models with canonical conjugacy normal forms: finitely generated abelian groups,
//! free groups and finite cyclic groups.

mod abelian;
mod cosets;
mod free;
mod literal;

use std::cmp::Ordering;
use std::fmt;

pub use abelian::Lattice;
pub use cosets::CosetRep;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroupError {
    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("double cosets need nontrivial elements")]
    IdentityArgument,
    #[error("invalid group model: {0}")]
    InvalidModel(String),
    #[error("element does not belong to this group model")]
    WrongModel,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GroupKind {
    FreeAbelian { rank: usize, torsion: Vec<u64> },
    FreeGroup { rank: usize },
    FiniteCyclic { order: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupModel {
    kind: GroupKind,
    names: Vec<String>,
}

/// A group element. Abelian elements carry the free coordinates and torsion residues in
/// `[0, k_i)`; free-group elements are reduced words with letters `±(generator + 1)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GroupElem {
    Abelian { free: Vec<i64>, torsion: Vec<i64> },
    Word(Vec<i32>),
}

/// Canonical representative of a conjugacy class.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ConjClass(GroupElem);

/// Centralizer of an element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Centralizer {
    /// The whole group; `rank` is the free rank (abelian) or the number of generators (free).
    WholeGroup { rank: usize },
    /// Z(a) = ⟨root⟩ with a = root^exponent.
    Cyclic { root: GroupElem, exponent: i64 },
}

impl GroupModel {
    pub fn new(kind: GroupKind, names: Vec<String>) -> Result<Self, GroupError> {
        let expected = match &kind {
            GroupKind::FreeAbelian { rank, torsion } => {
                if let Some(k) = torsion.iter().find(|k| **k < 2) {
                    return Err(GroupError::InvalidModel(format!("torsion order {k} is below 2")));
                }
                rank + torsion.len()
            }
            GroupKind::FreeGroup { rank } => *rank,
            GroupKind::FiniteCyclic { order } => {
                if *order < 2 {
                    return Err(GroupError::InvalidModel(format!("cyclic order {order} is below 2")));
                }
                1
            }
        };
        if names.len() != expected {
            return Err(GroupError::InvalidModel(format!(
                "expected {expected} generator names, got {}",
                names.len()
            )));
        }
        for (i, n) in names.iter().enumerate() {
            if !literal::is_identifier(n) || n == "1" {
                return Err(GroupError::InvalidModel(format!("bad generator name `{n}`")));
            }
            if names[..i].contains(n) {
                return Err(GroupError::InvalidModel(format!("duplicate generator name `{n}`")));
            }
        }
        Ok(GroupModel { kind, names })
    }

    /// ℤⁿ with generators b1..bn.
    pub fn free_abelian(rank: usize) -> Self {
        let names = (1..=rank).map(|i| format!("b{i}")).collect();
        GroupModel::new(GroupKind::FreeAbelian { rank, torsion: vec![] }, names).unwrap()
    }

    /// Free group on x, y (rank 2) or x1..xn.
    pub fn free(rank: usize) -> Self {
        let names = if rank == 2 {
            vec!["x".to_string(), "y".to_string()]
        } else {
            (1..=rank).map(|i| format!("x{i}")).collect()
        };
        GroupModel::new(GroupKind::FreeGroup { rank }, names).unwrap()
    }

    pub fn cyclic(order: u64, name: &str) -> Result<Self, GroupError> {
        GroupModel::new(GroupKind::FiniteCyclic { order }, vec![name.to_string()])
    }

    pub fn kind(&self) -> &GroupKind {
        &self.kind
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn is_abelian(&self) -> bool {
        match &self.kind {
            GroupKind::FreeGroup { rank } => *rank <= 1,
            _ => true,
        }
    }

    pub fn is_cyclic(&self) -> bool {
        match &self.kind {
            GroupKind::FreeAbelian { rank, torsion } => rank + torsion.len() <= 1,
            GroupKind::FreeGroup { rank } => *rank <= 1,
            GroupKind::FiniteCyclic { .. } => true,
        }
    }

    pub fn is_trivial_group(&self) -> bool {
        self.names.is_empty()
    }

    /// Rank of the abelianization's free part.
    pub fn free_rank(&self) -> usize {
        match &self.kind {
            GroupKind::FreeAbelian { rank, .. } | GroupKind::FreeGroup { rank } => *rank,
            GroupKind::FiniteCyclic { .. } => 0,
        }
    }

    /// (free rank, torsion orders) for abelian representations.
    fn shape(&self) -> Option<(usize, Vec<u64>)> {
        match &self.kind {
            GroupKind::FreeAbelian { rank, torsion } => Some((*rank, torsion.clone())),
            GroupKind::FiniteCyclic { order } => Some((0, vec![*order])),
            GroupKind::FreeGroup { .. } => None,
        }
    }

    pub fn generator_count(&self) -> usize {
        self.names.len()
    }

    pub fn identity(&self) -> GroupElem {
        match self.shape() {
            Some((n, t)) => GroupElem::Abelian {
                free: vec![0; n],
                torsion: vec![0; t.len()],
            },
            None => GroupElem::Word(vec![]),
        }
    }

    /// The i-th generator.
    pub fn generator(&self, i: usize) -> GroupElem {
        assert!(i < self.names.len(), "generator index out of range");
        match self.shape() {
            Some((n, t)) => {
                let mut free = vec![0; n];
                let mut torsion = vec![0; t.len()];
                if i < n {
                    free[i] = 1;
                } else {
                    torsion[i - n] = 1;
                }
                GroupElem::Abelian { free, torsion }
            }
            None => GroupElem::Word(vec![i as i32 + 1]),
        }
    }

    pub fn generators(&self) -> Vec<GroupElem> {
        (0..self.names.len()).map(|i| self.generator(i)).collect()
    }

    /// Builds an abelian element from free coordinates and torsion residues (reduced).
    pub fn abelian_elem(&self, free: Vec<i64>, torsion: Vec<i64>) -> Result<GroupElem, GroupError> {
        let (n, t) = self.shape().ok_or(GroupError::WrongModel)?;
        if free.len() != n || torsion.len() != t.len() {
            return Err(GroupError::WrongModel);
        }
        let torsion = torsion.iter().zip(&t).map(|(r, k)| r.rem_euclid(*k as i64)).collect();
        Ok(GroupElem::Abelian { free, torsion })
    }

    /// Builds a free-group element from signed letters, reducing it.
    pub fn word(&self, letters: &[i32]) -> Result<GroupElem, GroupError> {
        if self.shape().is_some() {
            return Err(GroupError::WrongModel);
        }
        let n = self.names.len() as i32;
        if letters.iter().any(|l| *l == 0 || l.abs() > n) {
            return Err(GroupError::WrongModel);
        }
        Ok(GroupElem::Word(free::reduce(letters)))
    }

    pub fn is_identity(&self, x: &GroupElem) -> bool {
        x.is_identity()
    }

    pub fn mul(&self, x: &GroupElem, y: &GroupElem) -> GroupElem {
        match (x, y) {
            (GroupElem::Abelian { free: f1, torsion: t1 }, GroupElem::Abelian { free: f2, torsion: t2 }) => {
                let orders = self.shape().expect("abelian element in a free model").1;
                GroupElem::Abelian {
                    free: f1.iter().zip(f2).map(|(a, b)| a + b).collect(),
                    torsion: t1
                        .iter()
                        .zip(t2)
                        .zip(&orders)
                        .map(|((a, b), k)| (a + b).rem_euclid(*k as i64))
                        .collect(),
                }
            }
            (GroupElem::Word(a), GroupElem::Word(b)) => {
                let mut w = a.clone();
                w.extend_from_slice(b);
                GroupElem::Word(free::reduce(&w))
            }
            _ => panic!("mixing abelian and free-group elements"),
        }
    }

    pub fn mul_all<'a, I: IntoIterator<Item = &'a GroupElem>>(&self, xs: I) -> GroupElem {
        xs.into_iter().fold(self.identity(), |acc, x| self.mul(&acc, x))
    }

    pub fn inv(&self, x: &GroupElem) -> GroupElem {
        match x {
            GroupElem::Abelian { free, torsion } => {
                let orders = self.shape().expect("abelian element in a free model").1;
                GroupElem::Abelian {
                    free: free.iter().map(|a| -a).collect(),
                    torsion: torsion
                        .iter()
                        .zip(&orders)
                        .map(|(a, k)| (-a).rem_euclid(*k as i64))
                        .collect(),
                }
            }
            GroupElem::Word(w) => GroupElem::Word(free::inverse(w)),
        }
    }

    pub fn pow(&self, x: &GroupElem, n: i64) -> GroupElem {
        match x {
            GroupElem::Abelian { free, torsion } => {
                let orders = self.shape().expect("abelian element in a free model").1;
                GroupElem::Abelian {
                    free: free.iter().map(|a| a * n).collect(),
                    torsion: torsion
                        .iter()
                        .zip(&orders)
                        .map(|(a, k)| (a * n).rem_euclid(*k as i64))
                        .collect(),
                }
            }
            GroupElem::Word(w) => GroupElem::Word(free::power(w, n)),
        }
    }

    /// g·x·g⁻¹
    pub fn conjugate(&self, g: &GroupElem, x: &GroupElem) -> GroupElem {
        self.mul_all([g, x, &self.inv(g)])
    }

    pub fn commutes(&self, x: &GroupElem, y: &GroupElem) -> bool {
        self.mul(x, y) == self.mul(y, x)
    }

    /// Word length: letters of a reduced word, or the L1 norm of the free part plus
    /// min(r, k − r) for each torsion residue.
    pub fn length(&self, x: &GroupElem) -> usize {
        match x {
            GroupElem::Word(w) => w.len(),
            GroupElem::Abelian { free, torsion } => {
                let orders = self.shape().expect("abelian element in a free model").1;
                let f: i64 = free.iter().map(|a| a.abs()).sum();
                let t: i64 = torsion.iter().zip(&orders).map(|(r, k)| (*r).min(*k as i64 - r)).sum();
                (f + t) as usize
            }
        }
    }

    /// Image in the free part of the abelianization.
    pub fn abelianize(&self, x: &GroupElem) -> Vec<i64> {
        match x {
            GroupElem::Abelian { free, .. } => free.clone(),
            GroupElem::Word(w) => {
                let mut v = vec![0; self.names.len()];
                for l in w {
                    v[(l.unsigned_abs() - 1) as usize] += l.signum() as i64;
                }
                v
            }
        }
    }

    pub fn conj_class(&self, x: &GroupElem) -> ConjClass {
        match x {
            GroupElem::Abelian { .. } => ConjClass(x.clone()),
            GroupElem::Word(w) => ConjClass(GroupElem::Word(free::canonical_cyclic(w))),
        }
    }

    /// Class of the inverse element.
    pub fn inverse_class(&self, c: &ConjClass) -> ConjClass {
        self.conj_class(&self.inv(&c.0))
    }

    /// Conjugacy class of a·g·b·g⁻¹.
    pub fn merge_classes(&self, a: &GroupElem, g: &GroupElem, b: &GroupElem) -> ConjClass {
        let gbg = self.conjugate(g, b);
        self.conj_class(&self.mul(a, &gbg))
    }

    pub fn centralizer_data(&self, a: &GroupElem) -> Centralizer {
        match (&self.kind, a) {
            (GroupKind::FreeGroup { rank }, GroupElem::Word(w)) if !w.is_empty() && *rank >= 2 => {
                let (root, exponent) = free::root(w);
                Centralizer::Cyclic {
                    root: GroupElem::Word(root),
                    exponent,
                }
            }
            _ => Centralizer::WholeGroup { rank: self.free_rank() },
        }
    }

    /// A maximal root h with a = h^k, k ≥ 1. The identity is its own root.
    pub fn root(&self, a: &GroupElem) -> (GroupElem, i64) {
        if a.is_identity() {
            return (a.clone(), 1);
        }
        match a {
            GroupElem::Word(w) => {
                let (r, k) = free::root(w);
                (GroupElem::Word(r), k)
            }
            GroupElem::Abelian { free, torsion } => {
                let (_, orders) = self.shape().expect("abelian element in a free model");
                if self.is_cyclic() {
                    if let Some(k) = free.first() {
                        let gen = self.generator(0);
                        return (if *k < 0 { self.inv(&gen) } else { gen }, k.abs());
                    }
                    return (self.generator(0), torsion[0]);
                }
                abelian::root(free, torsion, &orders)
                    .map(|(f, t, k)| (GroupElem::Abelian { free: f, torsion: t }, k))
                    .unwrap_or((a.clone(), 1))
            }
        }
    }

    /// `Some(k)` iff g = root(a)^k.
    pub fn cyclic_subgroup_member(&self, a: &GroupElem, g: &GroupElem) -> Option<i64> {
        let (h, _) = self.root(a);
        self.power_of(g, &h)
    }

    /// `Some(k)` with g = h^k, choosing the k of least absolute value (nonnegative on ties).
    pub fn power_of(&self, g: &GroupElem, h: &GroupElem) -> Option<i64> {
        if g.is_identity() {
            return Some(0);
        }
        if h.is_identity() {
            return None;
        }
        match (g, h) {
            (GroupElem::Word(gw), GroupElem::Word(hw)) => free::power_of(gw, hw),
            _ => {
                let (_, orders) = self.shape().expect("abelian element in a free model");
                abelian::power_of(g, h, &orders)
            }
        }
    }

    pub fn parse_elem(&self, src: &str) -> Result<GroupElem, GroupError> {
        literal::parse_elem(self, src)
    }

    pub fn render(&self, x: &GroupElem) -> String {
        literal::render(self, x)
    }

    pub fn render_class(&self, c: &ConjClass) -> String {
        literal::render(self, &c.0)
    }
}

impl GroupElem {
    pub fn is_identity(&self) -> bool {
        match self {
            GroupElem::Abelian { free, torsion } => free.iter().chain(torsion).all(|x| *x == 0),
            GroupElem::Word(w) => w.is_empty(),
        }
    }
}

impl Ord for GroupElem {
    /// Identity first. Abelian elements by (nontrivial, −free, torsion) so that b1 < b2 and
    /// b1 < b1^-1; words by shortlex under x < x⁻¹ < y < y⁻¹.
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (GroupElem::Abelian { free: f1, torsion: t1 }, GroupElem::Abelian { free: f2, torsion: t2 }) => {
                let k1 = (!self.is_identity(), f1.iter().map(|x| -x).collect::<Vec<_>>(), t1);
                let k2 = (!other.is_identity(), f2.iter().map(|x| -x).collect::<Vec<_>>(), t2);
                k1.cmp(&k2)
            }
            (GroupElem::Word(a), GroupElem::Word(b)) => free::shortlex(a, b),
            (GroupElem::Abelian { .. }, GroupElem::Word(_)) => Ordering::Less,
            (GroupElem::Word(_), GroupElem::Abelian { .. }) => Ordering::Greater,
        }
    }
}

impl PartialOrd for GroupElem {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl ConjClass {
    pub fn rep(&self) -> &GroupElem {
        &self.0
    }

    pub fn is_trivial(&self) -> bool {
        self.0.is_identity()
    }
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupKind::FreeAbelian { rank, torsion } => {
                let mut parts: Vec<String> = Vec::new();
                if *rank > 0 || torsion.is_empty() {
                    parts.push(if *rank == 1 { "Z".into() } else { format!("Z^{rank}") });
                }
                parts.extend(torsion.iter().map(|k| format!("Z/{k}")));
                f.write_str(&parts.join(" x "))
            }
            GroupKind::FreeGroup { rank } => write!(f, "F{rank}"),
            GroupKind::FiniteCyclic { order } => write!(f, "Z/{order}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn abelian_conj_is_identity_map() {
        let g = GroupModel::free_abelian(3);
        let x = g.parse_elem("b1*b2").unwrap();
        assert_eq!(g.conj_class(&x).rep(), &x);
        assert_eq!(g.render_class(&g.conj_class(&x)), "b1*b2");
    }

    #[test]
    fn free_conj_examples() {
        let g = GroupModel::free(2);
        let x = g.parse_elem("x*x*y*x^-1").unwrap();
        assert_eq!(g.conj_class(&x), g.conj_class(&g.parse_elem("x*y").unwrap()));
        let y = g.parse_elem("y^-1*x*y").unwrap();
        assert_eq!(g.render_class(&g.conj_class(&y)), "x");
    }

    #[test]
    fn merge_examples() {
        let z3 = GroupModel::free_abelian(3);
        let p = |s: &str| z3.parse_elem(s).unwrap();
        assert_eq!(
            z3.merge_classes(&p("b1"), &p("b3"), &p("b2")),
            z3.conj_class(&p("b1*b2"))
        );
        let f2 = GroupModel::free(2);
        let p = |s: &str| f2.parse_elem(s).unwrap();
        assert_eq!(f2.merge_classes(&p("x"), &p("1"), &p("y")), f2.conj_class(&p("x*y")));
        assert_eq!(
            f2.merge_classes(&p("x"), &p("y*x"), &p("y")),
            f2.conj_class(&p("x*y*x*y*x^-1*y^-1"))
        );
    }

    #[test]
    fn centralizers() {
        let z3 = GroupModel::free_abelian(3);
        assert_eq!(
            z3.centralizer_data(&z3.generator(0)),
            Centralizer::WholeGroup { rank: 3 }
        );
        let f2 = GroupModel::free(2);
        let p = |s: &str| f2.parse_elem(s).unwrap();
        assert_eq!(
            f2.centralizer_data(&p("x^2")),
            Centralizer::Cyclic {
                root: p("x"),
                exponent: 2
            }
        );
        assert_eq!(
            f2.centralizer_data(&p("x*y")),
            Centralizer::Cyclic {
                root: p("x*y"),
                exponent: 1
            }
        );
    }

    #[test]
    fn cyclic_membership() {
        let z = GroupModel::new(
            GroupKind::FreeAbelian {
                rank: 1,
                torsion: vec![],
            },
            vec!["t".into()],
        )
        .unwrap();
        assert_eq!(
            z.cyclic_subgroup_member(&z.parse_elem("t").unwrap(), &z.parse_elem("t^3").unwrap()),
            Some(3)
        );
        let f2 = GroupModel::free(2);
        let p = |s: &str| f2.parse_elem(s).unwrap();
        assert_eq!(f2.cyclic_subgroup_member(&p("x^2"), &p("x^3")), Some(3));
        assert_eq!(f2.cyclic_subgroup_member(&p("x"), &p("y")), None);
    }

    #[test]
    fn ordering_puts_identity_first() {
        let z3 = GroupModel::free_abelian(3);
        let p = |s: &str| z3.parse_elem(s).unwrap();
        let mut v = vec![p("b2"), p("b1^-1"), p("1"), p("b1")];
        v.sort();
        assert_eq!(v, vec![p("1"), p("b1"), p("b2"), p("b1^-1")]);
    }

    #[test]
    fn model_validation() {
        assert!(GroupModel::new(GroupKind::FiniteCyclic { order: 1 }, vec!["t".into()]).is_err());
        assert!(GroupModel::new(GroupKind::FreeGroup { rank: 2 }, vec!["x".into()]).is_err());
        assert!(GroupModel::new(GroupKind::FreeGroup { rank: 2 }, vec!["x".into(), "x".into()]).is_err());
    }
}
