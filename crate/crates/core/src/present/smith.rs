//! Smith normal form over ℚ[q]. Laurent entries are first multiplied by powers of q, which are
//! units, so the invariants are only defined up to ±q^k and rational scalars.

use crate::ring::{LaurentPoly, QPoly};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithForm {
    /// Nonzero invariant factors d₁ | d₂ | …, as primitive integer polynomials in q.
    pub invariants: Vec<LaurentPoly>,
    pub rank: usize,
}

fn degree(p: &QPoly) -> usize {
    p.degree().unwrap_or(usize::MAX)
}

#[allow(clippy::needless_range_loop)]
pub fn smith_normal_form_q(mx: &[Vec<LaurentPoly>]) -> SmithForm {
    let mut a: Vec<Vec<QPoly>> = mx.iter().map(|r| r.iter().map(QPoly::from_laurent).collect()).collect();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    for t in 0..rows.min(cols) {
        // smallest-degree nonzero entry of the remaining block becomes the pivot
        let Some((i, j)) = (t..rows)
            .flat_map(|i| (t..cols).map(move |j| (i, j)))
            .filter(|&(i, j)| !a[i][j].is_zero())
            .min_by_key(|&(i, j)| degree(&a[i][j]))
        else {
            break;
        };
        a.swap(t, i);
        for r in a.iter_mut() {
            r.swap(t, j);
        }
        loop {
            let mut changed = false;
            for i in t + 1..rows {
                if a[i][t].is_zero() {
                    continue;
                }
                let (q, _) = a[i][t].div_rem(&a[t][t]);
                for j in t..cols {
                    let v = a[i][j].sub(&q.mul(&a[t][j]));
                    a[i][j] = v;
                }
                if !a[i][t].is_zero() {
                    a.swap(t, i);
                    changed = true;
                }
            }
            for j in t + 1..cols {
                if a[t][j].is_zero() {
                    continue;
                }
                let (q, _) = a[t][j].div_rem(&a[t][t]);
                for r in a.iter_mut().skip(t) {
                    let v = r[j].sub(&q.mul(&r[t]));
                    r[j] = v;
                }
                if !a[t][j].is_zero() {
                    for r in a.iter_mut() {
                        r.swap(t, j);
                    }
                    changed = true;
                }
            }
            if changed {
                continue;
            }
            // the pivot must divide the rest of the block
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !a[t][t].divides(&a[i][j])));
            match bad {
                Some(i) => {
                    for j in t..cols {
                        let v = a[t][j].add(&a[i][j]);
                        a[t][j] = v;
                    }
                }
                None => break,
            }
        }
        pivots.push(a[t][t].monic().to_primitive_laurent());
    }
    SmithForm {
        rank: pivots.len(),
        invariants: pivots,
    }
}
