//! Integer lattices in Hermite normal form, used for canonical coset representatives in
//! ℤⁿ ⊕ ℤ/k₁ ⊕ … ⊕ ℤ/k_s.

use num_integer::Integer;

use super::GroupElem;

/// Row-style Hermite normal form of a sublattice of ℤ^dim.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lattice {
    dim: usize,
    /// (pivot column, row); pivots strictly increase, pivot entries positive, entries above a
    /// pivot reduced into [0, pivot).
    rows: Vec<(usize, Vec<i64>)>,
}

impl Lattice {
    pub fn new(dim: usize, gens: impl IntoIterator<Item = Vec<i64>>) -> Self {
        let mut pending: Vec<Vec<i64>> = gens.into_iter().filter(|v| v.iter().any(|x| *x != 0)).collect();
        assert!(
            pending.iter().all(|v| v.len() == dim),
            "generator of the wrong dimension"
        );
        let mut rows: Vec<(usize, Vec<i64>)> = Vec::new();
        for col in 0..dim {
            let mut with: Vec<Vec<i64>> = Vec::new();
            pending.retain(|v| {
                if v[col] != 0 {
                    with.push(v.clone());
                    false
                } else {
                    true
                }
            });
            if with.is_empty() {
                continue;
            }
            // Euclid on column `col` until one row remains nonzero there.
            while with.len() > 1 {
                with.sort_by_key(|v| v[col].abs());
                let (head, tail) = with.split_at_mut(1);
                let p = &head[0];
                for v in tail.iter_mut() {
                    let f = Integer::div_floor(&v[col], &p[col]);
                    for (x, y) in v.iter_mut().zip(p) {
                        *x -= f * y;
                    }
                }
                let (keep, rest): (Vec<_>, Vec<_>) = with.into_iter().partition(|v| v[col] != 0);
                pending.extend(rest.into_iter().filter(|v| v.iter().any(|x| *x != 0)));
                with = keep;
            }
            let mut p = with.pop().unwrap();
            if p[col] < 0 {
                p.iter_mut().for_each(|x| *x = -*x);
            }
            for (_, r) in rows.iter_mut() {
                let f = Integer::div_floor(&r[col], &p[col]);
                for (x, y) in r.iter_mut().zip(&p) {
                    *x -= f * y;
                }
            }
            rows.push((col, p));
        }
        Lattice { dim, rows }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Canonical representative of v + L.
    pub fn reduce(&self, v: &[i64]) -> Vec<i64> {
        let mut out = v.to_vec();
        for (col, r) in &self.rows {
            let f = Integer::div_floor(&out[*col], &r[*col]);
            for (x, y) in out.iter_mut().zip(r) {
                *x -= f * y;
            }
        }
        out
    }

    pub fn contains(&self, v: &[i64]) -> bool {
        self.reduce(v).iter().all(|x| *x == 0)
    }
}

/// Maximal root of a nonzero-free-part element; `None` for pure torsion.
pub(crate) fn root(free: &[i64], torsion: &[i64], orders: &[u64]) -> Option<(Vec<i64>, Vec<i64>, i64)> {
    let d = free.iter().fold(0i64, |acc, x| acc.gcd(x));
    if d == 0 {
        return None;
    }
    for k in (1..=d).rev().filter(|k| d % k == 0) {
        let mut s = Vec::with_capacity(torsion.len());
        for (t, o) in torsion.iter().zip(orders) {
            match divide_mod(*t, k, *o as i64) {
                Some(x) => s.push(x),
                None => break,
            }
        }
        if s.len() == torsion.len() {
            return Some((free.iter().map(|x| x / k).collect(), s, k));
        }
    }
    unreachable!("k = 1 always divides")
}

/// Least x ≥ 0 with k·x ≡ t (mod o), if any.
fn divide_mod(t: i64, k: i64, o: i64) -> Option<i64> {
    let g = k.gcd(&o);
    if t % g != 0 {
        return None;
    }
    let (k, t, o) = (k / g, t / g, o / g);
    let inv = k.extended_gcd(&o).x.rem_euclid(o);
    Some((t * inv).rem_euclid(o))
}

/// `Some(k)` with g = k·h, least |k| (nonnegative on ties).
pub(crate) fn power_of(g: &GroupElem, h: &GroupElem, orders: &[u64]) -> Option<i64> {
    let (GroupElem::Abelian { free: gf, torsion: gt }, GroupElem::Abelian { free: hf, torsion: ht }) = (g, h) else {
        return None;
    };
    let matches = |k: i64| {
        gf.iter().zip(hf).all(|(a, b)| *a == k * b)
            && gt
                .iter()
                .zip(ht)
                .zip(orders)
                .all(|((a, b), o)| (a - k * b).rem_euclid(*o as i64) == 0)
    };
    if let Some(i) = hf.iter().position(|x| *x != 0) {
        if gf[i] % hf[i] != 0 {
            return None;
        }
        let k = gf[i] / hf[i];
        return matches(k).then_some(k);
    }
    if gf.iter().any(|x| *x != 0) {
        return None;
    }
    let order = ht
        .iter()
        .zip(orders)
        .map(|(b, o)| *o as i64 / b.gcd(&(*o as i64)))
        .fold(1i64, |acc, x| acc.lcm(&x));
    (0..=order / 2).flat_map(|k| [k, -k]).find(|k| matches(*k))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hnf_of_small_lattice() {
        let l = Lattice::new(3, [vec![2, 4, 0], vec![0, 6, 0], vec![1, 1, 0]]);
        assert_eq!(l.rank(), 2);
        assert!(l.contains(&[2, 4, 0]));
        assert!(l.contains(&[1, 1, 0]));
        assert!(l.contains(&[0, 2, 0]));
        assert!(!l.contains(&[0, 1, 0]));
        assert_eq!(l.reduce(&[5, 8, 3]), vec![0, 1, 3]);
    }

    #[test]
    fn roots_with_torsion() {
        // (4, t=2) in ℤ ⊕ ℤ/4: 2·(2, 1) = (4, 2) while 4·(1, s) needs 4s ≡ 2, impossible
        assert_eq!(root(&[4], &[2], &[4]), Some((vec![2], vec![1], 2)));
        assert_eq!(root(&[6, 3], &[], &[]), Some((vec![2, 1], vec![], 3)));
        assert_eq!(root(&[0], &[1], &[3]), None);
    }

    #[test]
    fn torsion_powers() {
        let g = GroupElem::Abelian {
            free: vec![],
            torsion: vec![3],
        };
        let h = GroupElem::Abelian {
            free: vec![],
            torsion: vec![1],
        };
        assert_eq!(power_of(&g, &h, &[5]), Some(-2));
        let h2 = GroupElem::Abelian {
            free: vec![],
            torsion: vec![2],
        };
        assert_eq!(power_of(&g, &h2, &[6]), None);
    }
}
