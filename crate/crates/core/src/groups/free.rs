//! Word algorithms in free groups. Letters are `±(generator + 1)`.

use std::cmp::Ordering;

pub(crate) fn reduce(w: &[i32]) -> Vec<i32> {
    let mut out: Vec<i32> = Vec::with_capacity(w.len());
    for &l in w {
        if out.last() == Some(&-l) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

pub(crate) fn inverse(w: &[i32]) -> Vec<i32> {
    w.iter().rev().map(|l| -l).collect()
}

pub(crate) fn concat(parts: &[&[i32]]) -> Vec<i32> {
    reduce(&parts.concat())
}

pub(crate) fn power(w: &[i32], n: i64) -> Vec<i32> {
    if n < 0 {
        return power(&inverse(w), -n);
    }
    let (u, c) = cyclic_split(&reduce(w));
    let mut body = Vec::with_capacity(c.len() * n as usize);
    for _ in 0..n {
        body.extend_from_slice(&c);
    }
    concat(&[&u, &body, &inverse(&u)])
}

/// Splits a reduced word as u·c·u⁻¹ with c cyclically reduced.
pub(crate) fn cyclic_split(w: &[i32]) -> (Vec<i32>, Vec<i32>) {
    let mut i = 0;
    while w.len() >= 2 * i + 2 && w[i] == -w[w.len() - 1 - i] {
        i += 1;
    }
    (w[..i].to_vec(), w[i..w.len() - i].to_vec())
}

/// x < x⁻¹ < y < y⁻¹ < …
fn letter_key(l: i32) -> u32 {
    2 * (l.unsigned_abs() - 1) + u32::from(l < 0)
}

pub(crate) fn lex(a: &[i32], b: &[i32]) -> Ordering {
    a.iter().map(|l| letter_key(*l)).cmp(b.iter().map(|l| letter_key(*l)))
}

pub(crate) fn shortlex(a: &[i32], b: &[i32]) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| lex(a, b))
}

/// Cyclic reduction followed by the least rotation.
pub(crate) fn canonical_cyclic(w: &[i32]) -> Vec<i32> {
    let (_, c) = cyclic_split(&reduce(w));
    let n = c.len();
    let mut best: Option<Vec<i32>> = None;
    for r in 0..n {
        let rot: Vec<i32> = c[r..].iter().chain(&c[..r]).copied().collect();
        if best.as_ref().is_none_or(|b| lex(&rot, b) == Ordering::Less) {
            best = Some(rot);
        }
    }
    best.unwrap_or_default()
}

/// (ρ, k) with w = ρ^k, k ≥ 1 maximal. `w` must be nonempty and reduced.
pub(crate) fn root(w: &[i32]) -> (Vec<i32>, i64) {
    let (u, c) = cyclic_split(w);
    let n = c.len();
    let p = (1..=n)
        .find(|p| n % p == 0 && (0..n).all(|i| c[i] == c[i % p]))
        .unwrap_or(n);
    (concat(&[&u, &c[..p], &inverse(&u)]), (n / p) as i64)
}

/// `Some(k)` with g = h^k; `h` nonempty, both reduced.
pub(crate) fn power_of(g: &[i32], h: &[i32]) -> Option<i64> {
    let (u, c) = cyclic_split(h);
    let g2 = concat(&[&inverse(&u), g, &u]);
    if !g2.len().is_multiple_of(c.len()) {
        return None;
    }
    let k = (g2.len() / c.len()) as i64;
    if power(&c, k) == g2 {
        Some(k)
    } else if power(&c, -k) == g2 {
        Some(-k)
    } else {
        None
    }
}
