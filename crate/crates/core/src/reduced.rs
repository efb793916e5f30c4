//! Milnor's reduced free group `K_n` through the square-free Magnus representation.
//!
//! `x_i ↦ 1 + X_i` into `ℤ⟨X_1..X_n⟩` modulo every monomial with a repeated index.
//! Equality of images is the normal form used for `K_n`.

use std::collections::BTreeMap;
use std::fmt;

use rand::Rng;
use serde::Serialize;

use crate::braid::{artin_action, BraidWord};
use crate::error::{Error, Result};
use crate::linalg::rank_over_z;
use crate::words::{commutator, left_normed, random_word, Word};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquareFreeSeries {
    rank: usize,
    terms: BTreeMap<Vec<u32>, i64>,
}

fn square_free(k: &[u32]) -> bool {
    k.iter().enumerate().all(|(i, a)| !k[i + 1..].contains(a))
}

impl SquareFreeSeries {
    pub fn one(rank: usize) -> SquareFreeSeries {
        SquareFreeSeries {
            rank,
            terms: BTreeMap::from([(Vec::new(), 1)]),
        }
    }

    pub fn from_terms(rank: usize, terms: BTreeMap<Vec<u32>, i64>) -> Result<SquareFreeSeries> {
        for k in terms.keys() {
            if let Some(&g) = k.iter().find(|&&g| g == 0 || g as usize > rank) {
                return Err(Error::IndexOutOfRange { index: g, rank });
            }
        }
        let terms = terms
            .into_iter()
            .filter(|(k, c)| *c != 0 && square_free(k))
            .collect();
        Ok(SquareFreeSeries { rank, terms })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, i64> {
        &self.terms
    }

    pub fn coeff(&self, key: &[u32]) -> i64 {
        self.terms.get(key).copied().unwrap_or(0)
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.coeff(&[]) == 1
    }

    /// `(1 + X_g)^e` with `X_g² = 0`.
    fn generator_power(rank: usize, g: u32, e: i32) -> SquareFreeSeries {
        SquareFreeSeries {
            rank,
            terms: BTreeMap::from([(Vec::new(), 1), (vec![g], e as i64)]),
        }
    }

    /// Coefficients of the length-`t` monomials, in the order of `keys`.
    pub fn degree_vector(&self, keys: &[Vec<u32>]) -> Vec<i64> {
        keys.iter().map(|k| self.coeff(k)).collect()
    }
}

/// Concatenation product; monomials with a repeated index vanish.
pub fn sfs_mul(a: &SquareFreeSeries, b: &SquareFreeSeries) -> Result<SquareFreeSeries> {
    if a.rank != b.rank {
        return Err(Error::RankMismatch(a.rank, b.rank));
    }
    let mut terms: BTreeMap<Vec<u32>, i64> = BTreeMap::new();
    for (x, cx) in &a.terms {
        for (y, cy) in &b.terms {
            if y.iter().any(|g| x.contains(g)) {
                continue;
            }
            let mut k = x.clone();
            k.extend_from_slice(y);
            *terms.entry(k).or_insert(0) += cx * cy;
        }
    }
    terms.retain(|_, c| *c != 0);
    Ok(SquareFreeSeries { rank: a.rank, terms })
}

pub fn kn_embed(w: &Word, rank: usize) -> Result<SquareFreeSeries> {
    w.check_rank(rank)?;
    let mut acc = SquareFreeSeries::one(rank);
    for &(g, e) in w.letters() {
        acc = sfs_mul(&acc, &SquareFreeSeries::generator_power(rank, g, e))?;
    }
    Ok(acc)
}

pub fn kn_equal(u: &Word, v: &Word, rank: usize) -> Result<bool> {
    Ok(kn_embed(u, rank)? == kn_embed(v, rank)?)
}

/// Rank of the degree-`t` piece of the lower central series quotients of `K_n`,
/// from the left-normed brackets `[[x_{i_1}, x_{i_τ(2)}], …, x_{i_τ(t)}]`.
pub fn kn_graded_rank(n: usize, t: usize) -> Result<usize> {
    if n == 0 || t == 0 {
        return Err(Error::Bounds(format!("kn_graded_rank({n},{t})")));
    }
    if t > n {
        return Ok(0);
    }
    let keys = square_free_keys(n, t);
    let mut rows = Vec::new();
    for subset in subsets(n, t) {
        for tail in permutations(&subset[1..]) {
            let mut gens = vec![Word::gen(subset[0])];
            gens.extend(tail.iter().map(|&g| Word::gen(g)));
            let img = kn_embed(&left_normed(&gens), n)?;
            rows.push(img.degree_vector(&keys));
        }
    }
    Ok(rank_over_z(&rows))
}

/// All square-free monomials of length `t` in `n` letters.
pub fn square_free_keys(n: usize, t: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    for s in subsets(n, t) {
        out.extend(permutations(&s));
    }
    out.sort();
    out
}

fn subsets(n: usize, t: usize) -> Vec<Vec<u32>> {
    fn go(start: u32, n: u32, t: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == t {
            out.push(cur.clone());
            return;
        }
        for i in start..=n {
            cur.push(i);
            go(i + 1, n, t, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(1, n as u32, t, &mut Vec::new(), &mut out);
    out
}

fn permutations(items: &[u32]) -> Vec<Vec<u32>> {
    if items.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let x = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

/// `kn_embed(A(b)(w))`.
pub fn reduced_braid_action(b: &BraidWord, w: &Word) -> Result<SquareFreeSeries> {
    kn_embed(&artin_action(b).apply(w), b.strands())
}

/// A relation word `[x_i, g x_i g^{-1}]` with random `g`.
pub fn random_relation_word<R: Rng + ?Sized>(rng: &mut R, n: usize, len: usize) -> Word {
    let i = Word::gen(rng.gen_range(1..=n as u32));
    let g = random_word(rng, n, len);
    commutator(&i, &i.conj(&g.inverse()))
}

impl fmt::Display for SquareFreeSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut keys: Vec<_> = self.terms.iter().collect();
        keys.sort_by(|a, b| a.0.len().cmp(&b.0.len()).then(a.0.cmp(b.0)));
        let mut first = true;
        for (k, c) in keys {
            let mono: String = k.iter().map(|g| format!("X{g}")).collect();
            if first {
                if *c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if *c < 0 { "-" } else { "+" })?;
            }
            first = false;
            match (mono.is_empty(), c.abs()) {
                (true, m) => write!(f, "{m}")?,
                (false, 1) => write!(f, "{mono}")?,
                (false, m) => write!(f, "{m}{mono}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[derive(Serialize)]
struct MonomialRecord<'a> {
    indices: &'a [u32],
    coeff: i64,
}

impl Serialize for SquareFreeSeries {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let recs: Vec<_> = self
            .terms
            .iter()
            .map(|(k, c)| MonomialRecord { indices: k, coeff: *c })
            .collect();
        recs.serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn series(rank: usize, t: &[(&[u32], i64)]) -> SquareFreeSeries {
        SquareFreeSeries::from_terms(rank, t.iter().map(|(k, c)| (k.to_vec(), *c)).collect()).unwrap()
    }

    #[test]
    fn ring_examples() {
        let a = series(2, &[(&[], 1), (&[1], 1)]);
        let b = series(2, &[(&[], 1), (&[1], -1)]);
        assert!(sfs_mul(&a, &b).unwrap().is_one());
        let c = series(2, &[(&[], 1), (&[2], 1)]);
        assert_eq!(sfs_mul(&a, &c).unwrap().to_string(), "1 + X1 + X2 + X1X2");
        let x = series(3, &[(&[1, 2], 1)]);
        let y = series(3, &[(&[2, 3], 1)]);
        assert!(sfs_mul(&x, &y).unwrap().terms().is_empty());
        assert!(sfs_mul(&a, &x).is_err());
    }

    #[test]
    fn embed_examples() {
        let rel = commutator(&w("x1"), &w("x2 x1 x2^-1"));
        assert!(kn_embed(&rel, 2).unwrap().is_one());
        let c = commutator(&w("x1"), &w("x2"));
        assert_eq!(kn_embed(&c, 2).unwrap().to_string(), "1 + X1X2 - X2X1");
        assert!(kn_embed(&w(""), 2).unwrap().is_one());
        assert!(kn_embed(&w("x3"), 2).is_err());
    }

    #[test]
    fn equality_examples() {
        let c = commutator(&w("x1"), &w("x2"));
        assert!(kn_equal(&commutator(&w("x1"), &w("x1")), &w(""), 2).unwrap());
        assert!(kn_equal(&commutator(&c, &w("x2")), &w(""), 2).unwrap());
        assert!(!kn_equal(&commutator(&c, &w("x3")), &w(""), 3).unwrap());
    }

    #[test]
    fn graded_ranks() {
        assert_eq!(kn_graded_rank(3, 2).unwrap(), 3);
        assert_eq!(kn_graded_rank(3, 3).unwrap(), 2);
        assert_eq!(kn_graded_rank(3, 4).unwrap(), 0);
        assert_eq!(kn_graded_rank(4, 1).unwrap(), 4);
    }

    #[test]
    fn braid_action_examples() {
        let s1 = BraidWord::parse("s1", 2).unwrap();
        assert_eq!(reduced_braid_action(&s1, &w("x1")).unwrap(), kn_embed(&w("x2"), 2).unwrap());
        let rel = commutator(&w("x1"), &w("x2 x1 x2^-1"));
        assert!(reduced_braid_action(&s1, &rel).unwrap().is_one());
        let e = BraidWord::identity(2);
        assert_eq!(reduced_braid_action(&e, &w("x1 x2")).unwrap(), kn_embed(&w("x1 x2"), 2).unwrap());
    }
}
