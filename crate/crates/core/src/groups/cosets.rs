//! Bounded enumeration of nontrivial double cosets ⟨a⟩g⟨b⟩.

use num_integer::Integer;

use super::abelian::Lattice;
use super::free;
use super::{GroupElem, GroupError, GroupModel};

/// Representative g of the double coset ⟨left⟩ g ⟨right⟩.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CosetRep {
    pub g: GroupElem,
    pub left: GroupElem,
    pub right: GroupElem,
}

impl GroupModel {
    /// All elements of length ≤ `bound`, ordered by length and then by the element order.
    pub fn elements_up_to(&self, bound: usize) -> Vec<GroupElem> {
        let mut out = match self.shape() {
            Some((n, orders)) => {
                let mut acc = Vec::new();
                let mut coords = Vec::new();
                abelian_box(n, &orders, bound as i64, &mut coords, &mut acc);
                acc.into_iter()
                    .map(|c| {
                        let (f, t) = c.split_at(n);
                        GroupElem::Abelian {
                            free: f.to_vec(),
                            torsion: t.to_vec(),
                        }
                    })
                    .collect::<Vec<_>>()
            }
            None => {
                let n = self.names.len() as i32;
                let letters: Vec<i32> = (1..=n).flat_map(|g| [g, -g]).collect();
                let mut layer = vec![Vec::<i32>::new()];
                let mut acc = layer.clone();
                for _ in 0..bound {
                    layer = layer
                        .iter()
                        .flat_map(|w| {
                            letters.iter().filter(move |l| w.last() != Some(&-**l)).map(move |l| {
                                let mut w2 = w.clone();
                                w2.push(*l);
                                w2
                            })
                        })
                        .collect();
                    acc.extend(layer.iter().cloned());
                }
                acc.into_iter().map(GroupElem::Word).collect()
            }
        };
        out.sort_by(|x, y| self.length(x).cmp(&self.length(y)).then_with(|| x.cmp(y)));
        out
    }

    /// Whether w ∈ ⟨a⟩ g ⟨b⟩.
    pub fn in_double_coset(&self, a: &GroupElem, g: &GroupElem, b: &GroupElem, w: &GroupElem) -> bool {
        match (a, g, b, w) {
            (GroupElem::Word(a), GroupElem::Word(g), GroupElem::Word(b), GroupElem::Word(w)) => {
                free_in_double_coset(a, g, b, w)
            }
            _ => {
                let lattice = self.coset_lattice(a, b);
                lattice.reduce(&self.coords(g)) == lattice.reduce(&self.coords(w))
            }
        }
    }

    /// One representative per nontrivial double coset meeting the ball of radius `word_bound`;
    /// the representative is the least element of that coset inside the ball.
    pub fn double_cosets(&self, a: &GroupElem, b: &GroupElem, word_bound: usize) -> Result<Vec<CosetRep>, GroupError> {
        if a.is_identity() || b.is_identity() {
            return Err(GroupError::IdentityArgument);
        }
        let id = self.identity();
        let mut reps: Vec<CosetRep> = Vec::new();
        match self.shape() {
            Some(_) => {
                let lattice = self.coset_lattice(a, b);
                let mut seen = std::collections::HashSet::new();
                seen.insert(lattice.reduce(&self.coords(&id)));
                for g in self.elements_up_to(word_bound) {
                    if seen.insert(lattice.reduce(&self.coords(&g))) {
                        reps.push(CosetRep {
                            g,
                            left: a.clone(),
                            right: b.clone(),
                        });
                    }
                }
            }
            None => {
                for g in self.elements_up_to(word_bound) {
                    if self.in_double_coset(a, &id, b, &g) {
                        continue;
                    }
                    if reps.iter().any(|r| self.in_double_coset(a, &r.g, b, &g)) {
                        continue;
                    }
                    reps.push(CosetRep {
                        g,
                        left: a.clone(),
                        right: b.clone(),
                    });
                }
            }
        }
        Ok(reps)
    }

    fn coords(&self, x: &GroupElem) -> Vec<i64> {
        match x {
            GroupElem::Abelian { free, torsion } => free.iter().chain(torsion).copied().collect(),
            GroupElem::Word(_) => panic!("free-group element in an abelian model"),
        }
    }

    /// ⟨a, b⟩ plus the torsion relations, as a lattice in ℤ^(n+s).
    fn coset_lattice(&self, a: &GroupElem, b: &GroupElem) -> Lattice {
        let (n, orders) = self.shape().expect("abelian model");
        let dim = n + orders.len();
        let torsion = orders.iter().enumerate().map(|(i, k)| {
            let mut v = vec![0; dim];
            v[n + i] = *k as i64;
            v
        });
        Lattice::new(dim, [self.coords(a), self.coords(b)].into_iter().chain(torsion))
    }
}

fn abelian_box(n: usize, orders: &[u64], budget: i64, coords: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
    let i = coords.len();
    if i == n + orders.len() {
        out.push(coords.clone());
        return;
    }
    let choices: Vec<(i64, i64)> = if i < n {
        (-budget..=budget).map(|x| (x, x.abs())).collect()
    } else {
        let k = orders[i - n] as i64;
        (0..k)
            .map(|r| (r, r.min(k - r)))
            .filter(|(_, c)| *c <= budget)
            .collect()
    };
    for (x, cost) in choices {
        coords.push(x);
        abelian_box(n, orders, budget - cost, coords, out);
        coords.pop();
    }
}

/// w ∈ ⟨a⟩ g ⟨b⟩ in a free group; a and b nontrivial.
///
/// Write a = u·ã·u⁻¹ and b = v·b̃·v⁻¹ with ã, b̃ cyclically reduced. The question becomes
/// ã^m·c·b̃^n = w' for c = u⁻¹gv and w' = u⁻¹wv. If c⁻¹ãc commutes with b̃ both are powers of
/// one root ρ and the double coset is c·⟨ρ^d⟩. Otherwise cancellation between the two powers
/// is bounded, which bounds |m|; n is then recovered exactly.
fn free_in_double_coset(a: &[i32], g: &[i32], b: &[i32], w: &[i32]) -> bool {
    let (u, at) = free::cyclic_split(a);
    let (v, bt) = free::cyclic_split(b);
    let ui = free::inverse(&u);
    let c = free::concat(&[&ui, g, &v]);
    let wp = free::concat(&[&ui, w, &v]);
    let ci = free::inverse(&c);
    let x = free::concat(&[&ci, &at, &c]);
    let commute = free::concat(&[&x, &bt]) == free::concat(&[&bt, &x]);
    if commute {
        let (rho, l) = free::root(&bt);
        let k = free::power_of(&x, &rho).expect("commuting elements share a root");
        let d = k.gcd(&l);
        return free::power_of(&free::concat(&[&ci, &wp]), &rho).is_some_and(|j| j % d == 0);
    }
    let bound = (wp.len() + 2 * c.len() + 2 * at.len() + 2 * bt.len() + 4) as i64;
    (-bound..=bound).any(|m| {
        let t = free::concat(&[&ci, &free::power(&at, -m), &wp]);
        t.is_empty() || free::power_of(&t, &bt).is_some()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_group_has_no_nontrivial_cosets() {
        let z = GroupModel::free_abelian(1);
        let t = z.generator(0);
        assert!(z.double_cosets(&t, &t, 5).unwrap().is_empty());
    }

    #[test]
    fn z3_cosets_of_b1() {
        let g = GroupModel::free_abelian(3);
        let p = |s: &str| g.parse_elem(s).unwrap();
        let reps: Vec<GroupElem> = g
            .double_cosets(&p("b1"), &p("b1^-1"), 1)
            .unwrap()
            .into_iter()
            .map(|r| r.g)
            .collect();
        assert_eq!(reps, vec![p("b2"), p("b3"), p("b3^-1"), p("b2^-1")]);
    }

    #[test]
    fn identity_rejected() {
        let g = GroupModel::free(2);
        assert_eq!(
            g.double_cosets(&g.identity(), &g.generator(0), 1),
            Err(GroupError::IdentityArgument)
        );
    }

    #[test]
    fn free_degenerate_case() {
        // a = x, b = x²: ⟨x⟩g⟨x²⟩ = ⟨x⟩g⟨x⟩ collapses when g commutes with x
        let g = GroupModel::free(2);
        let p = |s: &str| g.parse_elem(s).unwrap();
        assert!(g.in_double_coset(&p("x"), &p("1"), &p("x^2"), &p("x^5")));
        assert!(!g.in_double_coset(&p("x"), &p("1"), &p("x^2"), &p("y")));
        assert!(g.in_double_coset(&p("x"), &p("y"), &p("y*x*y^-1"), &p("x^3*y^2*x^2*y^-1")));
        assert!(!g.in_double_coset(&p("x"), &p("y"), &p("y*x*y^-1"), &p("x^3*y*x^2")));
        let (a, b) = (p("y*x*y^-1"), p("y*x^2*y^-1"));
        assert!(g.in_double_coset(&a, &p("1"), &b, &p("y*x^7*y^-1")));
        assert!(!g.in_double_coset(&a, &p("1"), &b, &p("x^7")));
    }
}
