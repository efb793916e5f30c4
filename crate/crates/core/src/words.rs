//! Free group words, commutator calculus and the Magnus expansion.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rand::Rng;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::gradedlie::lie::{self, Alphabet, LieElement};

/// A reduced word in a free group, run-length encoded as `(generator, exponent)`.
///
/// Generators are numbered from 1. Adjacent letters always have distinct
/// generators and exponents are never zero, so equality of reduced words is
/// equality in the free group.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<(u32, i32)>,
}

impl Word {
    pub fn identity() -> Word {
        Word::default()
    }

    pub fn gen(g: u32) -> Word {
        Word::gen_pow(g, 1)
    }

    pub fn gen_pow(g: u32, e: i32) -> Word {
        assert!(g >= 1, "generators are numbered from 1");
        let mut w = Word::identity();
        w.push(g, e);
        w
    }

    /// Builds a word from arbitrary letters, reducing as it goes.
    pub fn from_letters<I: IntoIterator<Item = (u32, i32)>>(letters: I) -> Word {
        let mut w = Word::identity();
        for (g, e) in letters {
            w.push(g, e);
        }
        w
    }

    pub fn letters(&self) -> &[(u32, i32)] {
        &self.letters
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    /// Number of syllables.
    pub fn syllables(&self) -> usize {
        self.letters.len()
    }

    /// Total letter count, sum of |exponent|.
    pub fn length(&self) -> usize {
        self.letters.iter().map(|&(_, e)| e.unsigned_abs() as usize).sum()
    }

    pub fn max_generator(&self) -> u32 {
        self.letters.iter().map(|&(g, _)| g).max().unwrap_or(0)
    }

    /// Appends `g^e`, cancelling against the last syllable.
    pub fn push(&mut self, g: u32, e: i32) {
        if e == 0 {
            return;
        }
        if let Some(last) = self.letters.last_mut() {
            if last.0 == g {
                last.1 += e;
                if last.1 == 0 {
                    self.letters.pop();
                }
                return;
            }
        }
        self.letters.push((g, e));
    }

    pub fn mul(&self, other: &Word) -> Word {
        let mut out = self.clone();
        out.mul_assign(other);
        out
    }

    pub fn mul_assign(&mut self, other: &Word) {
        for &(g, e) in &other.letters {
            self.push(g, e);
        }
    }

    pub fn inverse(&self) -> Word {
        Word {
            letters: self.letters.iter().rev().map(|&(g, e)| (g, -e)).collect(),
        }
    }

    pub fn pow(&self, e: i64) -> Word {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut out = Word::identity();
        for _ in 0..e.unsigned_abs() {
            out.mul_assign(&base);
        }
        out
    }

    /// `a^{-1} · self · a`.
    pub fn conj(&self, a: &Word) -> Word {
        a.inverse().mul(self).mul(a)
    }

    /// Applies the endomorphism `x_g ↦ images[g-1]`.
    pub fn substitute(&self, images: &[Word]) -> Word {
        self.substitute_with(|g| images[g as usize - 1].clone())
    }

    pub fn substitute_with<F: FnMut(u32) -> Word>(&self, mut image: F) -> Word {
        let mut out = Word::identity();
        for &(g, e) in &self.letters {
            let im = image(g);
            let im = if e < 0 { im.inverse() } else { im };
            for _ in 0..e.unsigned_abs() {
                out.mul_assign(&im);
            }
        }
        out
    }

    /// Renumbers every generator by `offset`.
    pub fn shift(&self, offset: u32) -> Word {
        Word {
            letters: self.letters.iter().map(|&(g, e)| (g + offset, e)).collect(),
        }
    }

    /// Exponent sum of each generator `1..=rank`.
    pub fn abelianize(&self, rank: usize) -> Vec<i64> {
        let mut v = vec![0i64; rank];
        for &(g, e) in &self.letters {
            if (g as usize) <= rank {
                v[g as usize - 1] += e as i64;
            }
        }
        v
    }

    pub fn check_rank(&self, rank: usize) -> Result<()> {
        match self.letters.iter().find(|&&(g, _)| g as usize > rank) {
            Some(&(g, _)) => Err(Error::IndexOutOfRange { index: g, rank }),
            None => Ok(()),
        }
    }
}

/// `[a,b] = a^{-1} b^{-1} a b`.
pub fn commutator(a: &Word, b: &Word) -> Word {
    let mut w = a.inverse();
    w.mul_assign(&b.inverse());
    w.mul_assign(a);
    w.mul_assign(b);
    w
}

/// Left-normed commutator `[..[w_1,w_2],..,w_k]`.
pub fn left_normed(ws: &[Word]) -> Word {
    let mut it = ws.iter();
    let first = it.next().cloned().unwrap_or_default();
    it.fold(first, |acc, w| commutator(&acc, w))
}

/// Evaluates the six Hall identities, with `c^a = a^{-1} c a`.
/// The power identity is checked for exponents 0 through 4.
pub fn hall_witt_check(a: &Word, b: &Word, c: &Word) -> [bool; 6] {
    let cm = commutator;
    let one = |w: Word| w.is_identity();
    let i1 = one(cm(a, b).mul(&cm(b, a)));
    let i2 = cm(a, &b.mul(c)) == cm(a, c).mul(&cm(a, b)).mul(&cm(&cm(a, b), c));
    let i3 = cm(&a.mul(b), c) == cm(a, c).mul(&cm(&cm(a, c), b)).mul(&cm(b, c));
    let i4 = one(
        cm(&cm(a, b), &c.conj(a))
            .mul(&cm(&cm(c, a), &b.conj(c)))
            .mul(&cm(&cm(b, c), &a.conj(b))),
    );
    let lhs5 = cm(&cm(a, b), c).mul(&cm(&cm(b, c), a)).mul(&cm(&cm(c, a), b));
    let rhs5 = [
        cm(b, a),
        cm(c, a),
        cm(c, b).conj(a),
        cm(a, b),
        cm(a, c).conj(b),
        cm(b, c).conj(a),
        cm(a, c),
        cm(c, a).conj(b),
    ]
    .iter()
    .fold(Word::identity(), |acc, w| acc.mul(w));
    let i5 = lhs5 == rhs5;
    let i6 = (0..=4i64).all(|n| {
        let rhs = (0..n).fold(Word::identity(), |acc, k| acc.mul(&cm(a, b).conj(&b.pow(k))));
        cm(a, &b.pow(n)) == rhs
    });
    [i1, i2, i3, i4, i5, i6]
}

/// `[x^{-1} y x, v y v^{-1}] = x^{-1} [y, (xv) y (xv)^{-1}] x`.
pub fn commutator_identity_check(x: &Word, y: &Word, v: &Word) -> bool {
    let lhs = commutator(&y.conj(x), &y.conj(&v.inverse()));
    let xv = x.mul(v);
    let rhs = commutator(y, &y.conj(&xv.inverse())).conj(x);
    lhs == rhs
}

/// A random word with `len` letters `x_g^{±1}` over generators `1..=rank`.
/// The result is reduced, so it may be shorter.
pub fn random_word<R: Rng + ?Sized>(rng: &mut R, rank: usize, len: usize) -> Word {
    Word::from_letters((0..len).map(|_| {
        let g = rng.gen_range(1..=rank as u32);
        let e = if rng.gen_bool(0.5) { 1 } else { -1 };
        (g, e)
    }))
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for (k, &(g, e)) in self.letters.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            if e == 1 {
                write!(f, "x{g}")?;
            } else {
                write!(f, "x{g}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Parses an exponent suffix `^e` (or nothing) from a token tail.
pub(crate) fn parse_exponent(tail: &str, token: &str) -> Result<i32> {
    if tail.is_empty() {
        return Ok(1);
    }
    let e = tail
        .strip_prefix('^')
        .ok_or_else(|| Error::Parse(format!("bad token `{token}`")))?;
    e.parse::<i32>()
        .map_err(|_| Error::Parse(format!("bad exponent in `{token}`")))
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Word> {
        let s = s.trim();
        if s.is_empty() || s == "1" {
            return Ok(Word::identity());
        }
        let mut w = Word::identity();
        for tok in s.split_whitespace() {
            let body = tok
                .strip_prefix('x')
                .or_else(|| tok.strip_prefix('X'))
                .ok_or_else(|| Error::Parse(format!("bad token `{tok}`")))?;
            let digits = body.chars().take_while(|c| c.is_ascii_digit()).count();
            let g: u32 = body[..digits]
                .parse()
                .map_err(|_| Error::Parse(format!("bad generator in `{tok}`")))?;
            if g == 0 {
                return Err(Error::Parse(format!("generators start at 1: `{tok}`")));
            }
            w.push(g, parse_exponent(&body[digits..], tok)?);
        }
        Ok(w)
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Word, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A truncated element of the power series ring `ℤ⟨⟨X_1..X_rank⟩⟩`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorSeries {
    rank: usize,
    degree: usize,
    terms: BTreeMap<Vec<u32>, i64>,
}

impl TensorSeries {
    pub fn one(rank: usize, degree: usize) -> TensorSeries {
        let mut terms = BTreeMap::new();
        terms.insert(Vec::new(), 1);
        TensorSeries { rank, degree, terms }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, i64> {
        &self.terms
    }

    pub fn coeff(&self, key: &[u32]) -> i64 {
        self.terms.get(key).copied().unwrap_or(0)
    }

    /// `(1 + X_g)^e`, truncated.
    fn generator_power(rank: usize, degree: usize, g: u32, e: i32) -> TensorSeries {
        let mut terms = BTreeMap::new();
        let mut c: i128 = 1;
        for k in 0..=degree {
            if k > 0 {
                c = c * (e as i128 - k as i128 + 1) / k as i128;
            }
            if c != 0 {
                terms.insert(vec![g; k], c as i64);
            }
        }
        TensorSeries { rank, degree, terms }
    }

    pub fn mul(&self, other: &TensorSeries) -> TensorSeries {
        let mut terms: BTreeMap<Vec<u32>, i64> = BTreeMap::new();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                if a.len() + b.len() > self.degree {
                    continue;
                }
                let mut k = a.clone();
                k.extend_from_slice(b);
                *terms.entry(k).or_insert(0) += ca * cb;
            }
        }
        terms.retain(|_, c| *c != 0);
        TensorSeries {
            rank: self.rank,
            degree: self.degree,
            terms,
        }
    }

    /// The homogeneous part of degree `d`.
    pub fn homogeneous(&self, d: usize) -> BTreeMap<Vec<u32>, i64> {
        self.terms
            .iter()
            .filter(|(k, _)| k.len() == d)
            .map(|(k, c)| (k.clone(), *c))
            .collect()
    }
}

impl fmt::Display for TensorSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let mut keys: Vec<_> = self.terms.iter().collect();
        keys.sort_by(|a, b| a.0.len().cmp(&b.0.len()).then(a.0.cmp(b.0)));
        for (k, c) in keys {
            let mono: String = k.iter().map(|g| format!("X{g}")).collect();
            let (sign, mag) = if *c < 0 { ("-", -c) } else { ("+", *c) };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match (mono.is_empty(), mag) {
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

/// Image of `w` under `x_i ↦ 1 + X_i`, truncated at `degree`.
pub fn magnus_expand(w: &Word, rank: usize, degree: usize) -> Result<TensorSeries> {
    w.check_rank(rank)?;
    let mut acc = TensorSeries::one(rank, degree);
    for &(g, e) in w.letters() {
        acc = acc.mul(&TensorSeries::generator_power(rank, degree, g, e));
    }
    Ok(acc)
}

/// The lower central series degree of `w` together with its class in the
/// associated graded Lie algebra, read off the lowest nonconstant Magnus term.
pub fn lcs_degree(w: &Word, rank: usize, max_degree: usize) -> Result<(usize, LieElement)> {
    if w.is_identity() {
        return Err(Error::Identity);
    }
    let series = magnus_expand(w, rank, max_degree)?;
    for d in 1..=max_degree {
        let part = series.homogeneous(d);
        if part.is_empty() {
            continue;
        }
        let assoc: lie::Terms = part
            .into_iter()
            .map(|(k, c)| (k.iter().map(|&g| (g - 1) as u8).collect(), c))
            .collect();
        let terms = lie::from_associative(&assoc)
            .expect("lowest Magnus term of a group element is a Lie element");
        return Ok((d, LieElement::new(Alphabet::Free(rank), terms)));
    }
    Err(Error::Deeper(max_degree))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn reduction_cancels() {
        assert!(w("x1").mul(&w("x1^-1")).is_identity());
        assert_eq!(w("x1 x2^2").mul(&w("x2^-2 x1")), w("x1^2"));
        assert_eq!(w("x1 x1 x1^-3"), w("x1^-1"));
    }

    #[test]
    fn parse_and_print() {
        assert_eq!(w("x3^-2 x1 x2^4").to_string(), "x3^-2 x1 x2^4");
        assert!(w("").is_identity());
        assert!(w("1").is_identity());
        assert!("y1".parse::<Word>().is_err());
        assert!("x0".parse::<Word>().is_err());
        assert!("x1^a".parse::<Word>().is_err());
    }

    #[test]
    fn commutator_examples() {
        assert!(commutator(&w("x1"), &w("x1")).is_identity());
        assert_eq!(commutator(&w("x1"), &w("x2")), w("x1^-1 x2^-1 x1 x2"));
        assert_eq!(
            commutator(&w("x1 x2"), &w("x2")),
            w("x2^-1 x1^-1 x2^-1 x1 x2 x2")
        );
    }

    #[test]
    fn hall_on_generators() {
        assert_eq!(hall_witt_check(&w("x1"), &w("x2"), &w("x3")), [true; 6]);
        assert_eq!(hall_witt_check(&w("1"), &w("x1 x2"), &w("x2^-1")), [true; 6]);
    }

    #[test]
    fn magnus_examples() {
        let s = magnus_expand(&w("x1^-1 x2^-1 x1 x2"), 2, 2).unwrap();
        assert_eq!(s.to_string(), "1 + X1X2 - X2X1");
        assert_eq!(magnus_expand(&w("x1"), 1, 3).unwrap().to_string(), "1 + X1");
        assert_eq!(magnus_expand(&w("1"), 2, 3).unwrap().to_string(), "1");
        assert!(magnus_expand(&w("x3"), 2, 3).is_err());
        let inv = magnus_expand(&w("x1^-1"), 1, 3).unwrap();
        assert_eq!(inv.to_string(), "1 - X1 + X1X1 - X1X1X1");
    }

    #[test]
    fn lcs_examples() {
        let (d, l) = lcs_degree(&w("x1"), 2, 4).unwrap();
        assert_eq!((d, l.to_string()), (1, "x1".to_string()));
        let c = commutator(&w("x1"), &w("x2"));
        let (d, l) = lcs_degree(&c, 2, 4).unwrap();
        assert_eq!((d, l.to_string()), (2, "[x1,x2]".to_string()));
        let (d, l) = lcs_degree(&commutator(&c, &w("x2")), 2, 4).unwrap();
        assert_eq!((d, l.to_string()), (3, "[[x1,x2],x2]".to_string()));
        assert_eq!(lcs_degree(&w("1"), 2, 3), Err(Error::Identity));
        let deep = left_normed(&[w("x1"), w("x2"), w("x2"), w("x2")]);
        assert_eq!(lcs_degree(&deep, 2, 3), Err(Error::Deeper(3)));
    }
}
