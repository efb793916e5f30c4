//! Left-greedy Garside normal form `Δ^k p_1 ⋯ p_r` in `B_n`.
//!
//! A simple element (positive permutation braid) is stored as the permutation
//! `π` with `π(j)` the final position of the strand starting at position `j`,
//! so `π_{uv} = π_v ∘ π_u`. Two braids are equal iff their normal forms agree.

use serde::Serialize;

use crate::braid::{BraidLetter, BraidWord};

type Perm = Vec<u8>;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct GarsideForm {
    pub strands: usize,
    /// Exponent of `Δ`.
    pub delta: i64,
    /// Simple factors, none equal to `Δ` or the identity, each pair left-weighted.
    pub factors: Vec<Perm>,
}

impl GarsideForm {
    pub fn is_identity(&self) -> bool {
        self.delta == 0 && self.factors.is_empty()
    }
}

fn identity(n: usize) -> Perm {
    (0..n as u8).collect()
}

fn delta(n: usize) -> Perm {
    (0..n as u8).rev().collect()
}

fn swap_positions(p: &mut Perm, i: usize) {
    // s_i ∘ p: exchange the values i and i+1.
    for v in p.iter_mut() {
        if *v as usize == i {
            *v += 1;
        } else if *v as usize == i + 1 {
            *v -= 1;
        }
    }
}

/// `τ(p) = Δ p Δ^{-1}`.
fn tau(p: &Perm) -> Perm {
    let n = p.len() as u8;
    (0..p.len()).map(|j| n - 1 - p[p.len() - 1 - j]).collect()
}

fn starts_with(p: &Perm, i: usize) -> bool {
    p[i] > p[i + 1]
}

fn inverse(p: &Perm) -> Perm {
    let mut q = vec![0; p.len()];
    for (j, &v) in p.iter().enumerate() {
        q[v as usize] = j as u8;
    }
    q
}

/// Rewrites `(a, b)` so that every generator `b` starts with is one `a` ends with.
/// Returns whether anything moved.
fn left_weight(a: &mut Perm, b: &mut Perm) -> bool {
    let n = a.len();
    let mut moved = false;
    loop {
        let ai = inverse(a);
        let step = (0..n - 1).find(|&i| starts_with(b, i) && ai[i] < ai[i + 1]);
        let Some(i) = step else { return moved };
        swap_positions(a, i);
        b.swap(i, i + 1);
        moved = true;
    }
}

/// Simple factors of a braid word after pulling every `Δ^{-1}` to the front.
fn simple_factors(b: &BraidWord) -> (i64, Vec<Perm>) {
    let n = b.strands();
    let word = b.expand_sigmas();
    let mut k = 0i64;
    // Each factor remembers `k` when it was appended; moving `Δ^{-1}` past it applies `τ`.
    let mut raw: Vec<(Perm, i64)> = Vec::new();
    for &(l, e) in word.letters() {
        let BraidLetter::Sigma(i) = l else { unreachable!("expanded") };
        let i = i - 1;
        for _ in 0..e.unsigned_abs() {
            let mut p = if e > 0 { identity(n) } else { delta(n) };
            if e > 0 {
                p.swap(i, i + 1);
            } else {
                // σ_i^{-1} = Δ^{-1} (Δ σ_i^{-1}) with `π = s_i ∘ δ`.
                swap_positions(&mut p, i);
                k -= 1;
            }
            raw.push((p, k));
        }
    }
    let factors = raw
        .into_iter()
        .map(|(p, at)| if (at - k) % 2 != 0 { tau(&p) } else { p })
        .collect();
    (k, factors)
}

/// Left-greedy normal form of `b`.
pub fn normal_form(b: &BraidWord) -> GarsideForm {
    let n = b.strands();
    let (mut k, raw) = simple_factors(b);
    let (id, full) = (identity(n), delta(n));
    let mut factors: Vec<Perm> = Vec::new();
    for p in raw {
        if p == id {
            continue;
        }
        factors.push(p);
        let mut j = factors.len() - 1;
        while j > 0 {
            let (left, right) = factors.split_at_mut(j);
            if !left_weight(&mut left[j - 1], &mut right[0]) {
                break;
            }
            j -= 1;
        }
        while factors.first() == Some(&full) {
            factors.remove(0);
            k += 1;
        }
        while factors.last() == Some(&id) {
            factors.pop();
        }
        factors.retain(|f| *f != id);
    }
    GarsideForm { strands: n, delta: k, factors }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nf(text: &str, n: usize) -> GarsideForm {
        normal_form(&BraidWord::parse(text, n).unwrap())
    }

    #[test]
    fn small_forms() {
        assert!(nf("", 3).is_identity());
        assert!(nf("s1 s1^-1", 3).is_identity());
        assert!(nf("s2^-1 s1 s1^-1 s2", 3).is_identity());
        assert_eq!(nf("s1 s2 s1", 3), GarsideForm { strands: 3, delta: 1, factors: vec![] });
        assert_eq!(nf("s1 s2 s1", 3), nf("s2 s1 s2", 3));
        assert_eq!(nf("s1^-1", 2).delta, -1);
        assert_ne!(nf("s1 s2", 3), nf("s2 s1", 3));
        assert_eq!(nf("s1 s3", 4), nf("s3 s1", 4));
    }

    #[test]
    fn tau_is_conjugation_by_delta() {
        let mut p = identity(4);
        p.swap(0, 1);
        let mut q = identity(4);
        q.swap(2, 3);
        assert_eq!(tau(&p), q);
        assert_eq!(tau(&tau(&p)), p);
    }
}
