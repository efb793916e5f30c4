//! Braid groups acting on free groups through Artin's representation.
//!
//! Automorphisms compose as functions: `artin_action(uv) = artin_action(u) ∘ artin_action(v)`.

use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;
use std::rc::Rc;

use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::garside::normal_form;
use crate::report::Report;
use crate::words::{commutator, parse_exponent, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BraidLetter {
    /// `σ_i`.
    Sigma(usize),
    /// `A_{r,s}`.
    A(usize, usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<(BraidLetter, i32)>,
}

impl BraidWord {
    pub fn identity(strands: usize) -> BraidWord {
        BraidWord {
            strands,
            letters: Vec::new(),
        }
    }

    pub fn new(strands: usize, letters: &[(BraidLetter, i32)]) -> Result<BraidWord> {
        let mut b = BraidWord::identity(strands);
        for &(l, e) in letters {
            b.push(l, e)?;
        }
        Ok(b)
    }

    pub fn sigma(i: usize, e: i32, strands: usize) -> Result<BraidWord> {
        BraidWord::new(strands, &[(BraidLetter::Sigma(i), e)])
    }

    /// `A_{r,s}^e` kept as a symbolic letter.
    pub fn agen(r: usize, s: usize, e: i32, strands: usize) -> Result<BraidWord> {
        BraidWord::new(strands, &[(BraidLetter::A(r, s), e)])
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[(BraidLetter, i32)] {
        &self.letters
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    fn check_letter(&self, l: BraidLetter) -> Result<()> {
        let n = self.strands;
        let ok = match l {
            BraidLetter::Sigma(i) => i >= 1 && i < n,
            BraidLetter::A(r, s) => r >= 1 && r < s && s <= n,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::Bounds(format!("{l:?} in B_{n}")))
        }
    }

    /// Appends `l^e`, merging with an equal last letter.
    pub fn push(&mut self, l: BraidLetter, e: i32) -> Result<()> {
        self.check_letter(l)?;
        if e == 0 {
            return Ok(());
        }
        if let Some(last) = self.letters.last_mut() {
            if last.0 == l {
                last.1 += e;
                if last.1 == 0 {
                    self.letters.pop();
                }
                return Ok(());
            }
        }
        self.letters.push((l, e));
        Ok(())
    }

    pub fn mul(&self, other: &BraidWord) -> Result<BraidWord> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch(self.strands, other.strands));
        }
        let mut out = self.clone();
        for &(l, e) in &other.letters {
            out.push(l, e)?;
        }
        Ok(out)
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|&(l, e)| (l, -e)).collect(),
        }
    }

    pub fn pow(&self, e: i64) -> BraidWord {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut out = BraidWord::identity(self.strands);
        for _ in 0..e.unsigned_abs() {
            out = out.mul(&base).expect("same strands");
        }
        out
    }

    pub fn commutator(&self, other: &BraidWord) -> Result<BraidWord> {
        self.inverse().mul(&other.inverse())?.mul(self)?.mul(other)
    }

    /// The same letters viewed in a braid group with more strands.
    pub fn widen(&self, strands: usize) -> Result<BraidWord> {
        BraidWord::new(strands, &self.letters)
    }

    /// Replaces every `A_{r,s}` by its σ expansion.
    pub fn expand_sigmas(&self) -> BraidWord {
        let mut out = BraidWord::identity(self.strands);
        for &(l, e) in &self.letters {
            match l {
                BraidLetter::Sigma(_) => out.letters.push((l, e)),
                BraidLetter::A(r, s) => {
                    let a = a_generator(r, s, self.strands).expect("checked letter");
                    let a = if e < 0 { a.inverse() } else { a };
                    for _ in 0..e.unsigned_abs() {
                        out.letters.extend_from_slice(&a.letters);
                    }
                }
            }
        }
        BraidWord::new(self.strands, &out.letters).expect("checked letters")
    }

    /// Only `A_{r,s}` letters.
    pub fn is_a_word(&self) -> bool {
        self.letters.iter().all(|(l, _)| matches!(l, BraidLetter::A(..)))
    }

    /// Parses `s1 s2^-1 A[1,3]^2` in `B_strands`.
    pub fn parse(text: &str, strands: usize) -> Result<BraidWord> {
        let mut b = BraidWord::identity(strands);
        let t = text.trim();
        if t.is_empty() || t == "1" {
            return Ok(b);
        }
        let lowered = t.to_ascii_lowercase();
        let toks = tokenize_braid(&lowered)?;
        for tok in toks {
            let (letter, tail) = if let Some(rest) = tok.strip_prefix("a[") {
                let close = rest
                    .find(']')
                    .ok_or_else(|| Error::Parse(format!("unclosed `{tok}`")))?;
                let inside = &rest[..close];
                let mut parts = inside.split(',').map(|p| p.trim().parse::<usize>());
                let r = parts.next().and_then(|x| x.ok());
                let s = parts.next().and_then(|x| x.ok());
                match (r, s, parts.next()) {
                    (Some(r), Some(s), None) => (BraidLetter::A(r, s), &rest[close + 1..]),
                    _ => return Err(Error::Parse(format!("bad generator `{tok}`"))),
                }
            } else if let Some(rest) = tok.strip_prefix('s') {
                let digits = rest.chars().take_while(|c| c.is_ascii_digit()).count();
                let i = rest[..digits]
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad generator `{tok}`")))?;
                (BraidLetter::Sigma(i), &rest[digits..])
            } else {
                return Err(Error::Parse(format!("bad token `{tok}`")));
            };
            let e = parse_exponent(tail, &tok)?;
            b.push(letter, e)
                .map_err(|e| Error::Parse(format!("{e} in `{tok}`")))?;
        }
        Ok(b)
    }
}

fn tokenize_braid(s: &str) -> Result<Vec<String>> {
    // Whitespace separates tokens except inside `[...]`.
    let mut toks = Vec::new();
    let mut cur = String::new();
    let mut depth = 0i32;
    for c in s.chars() {
        match c {
            '[' => {
                depth += 1;
                cur.push(c);
            }
            ']' => {
                depth -= 1;
                cur.push(c);
            }
            c if c.is_whitespace() && depth == 0 => {
                if !cur.is_empty() {
                    toks.push(std::mem::take(&mut cur));
                }
            }
            c if c.is_whitespace() => {}
            c => cur.push(c),
        }
    }
    if depth != 0 {
        return Err(Error::Parse(format!("unbalanced brackets in `{s}`")));
    }
    if !cur.is_empty() {
        toks.push(cur);
    }
    Ok(toks)
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for (k, &(l, e)) in self.letters.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            match l {
                BraidLetter::Sigma(i) => write!(f, "s{i}")?,
                BraidLetter::A(r, s) => write!(f, "A[{r},{s}]")?,
            }
            if e != 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl Serialize for BraidWord {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// An endomorphism of `F_rank` given by generator images.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct FreeAutomorphism {
    images: Vec<Word>,
}

impl FreeAutomorphism {
    pub fn identity(rank: usize) -> FreeAutomorphism {
        FreeAutomorphism {
            images: (1..=rank as u32).map(Word::gen).collect(),
        }
    }

    pub fn from_images(images: Vec<Word>) -> Result<FreeAutomorphism> {
        let rank = images.len();
        for w in &images {
            w.check_rank(rank)?;
        }
        Ok(FreeAutomorphism { images })
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[Word] {
        &self.images
    }

    pub fn image(&self, g: u32) -> &Word {
        &self.images[g as usize - 1]
    }

    pub fn apply(&self, w: &Word) -> Word {
        w.substitute(&self.images)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &FreeAutomorphism) -> Result<FreeAutomorphism> {
        if self.rank() != other.rank() {
            return Err(Error::RankMismatch(self.rank(), other.rank()));
        }
        Ok(FreeAutomorphism {
            images: other.images.iter().map(|w| self.apply(w)).collect(),
        })
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, w)| *w == Word::gen(i as u32 + 1))
    }
}

impl fmt::Display for FreeAutomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, w) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "x{} -> {}", i + 1, w)?;
        }
        Ok(())
    }
}

/// Action of `σ_i` (or its inverse) on `F_n`.
pub fn sigma_action(i: usize, inverse: bool, n: usize) -> Result<FreeAutomorphism> {
    if i == 0 || i >= n {
        return Err(Error::Bounds(format!("σ_{i} in B_{n}")));
    }
    let mut f = FreeAutomorphism::identity(n);
    let (xi, xj) = (Word::gen(i as u32), Word::gen(i as u32 + 1));
    if inverse {
        f.images[i - 1] = xi.mul(&xj).mul(&xi.inverse());
        f.images[i] = xi;
    } else {
        f.images[i - 1] = xj.clone();
        f.images[i] = xi.conj(&xj);
    }
    Ok(f)
}

/// `α(r,s) σ_r² α(r,s)^{-1}` with `α(r,s) = σ_{s-1} σ_{s-2} ⋯ σ_{r+1}`.
pub fn a_generator(r: usize, s: usize, n: usize) -> Result<BraidWord> {
    if !(r >= 1 && r < s && s <= n) {
        return Err(Error::Bounds(format!("A[{r},{s}] in B_{n}")));
    }
    let mut b = BraidWord::identity(n);
    let alpha: Vec<usize> = (r + 1..s).rev().collect();
    for &k in &alpha {
        b.push(BraidLetter::Sigma(k), 1)?;
    }
    b.push(BraidLetter::Sigma(r), 2)?;
    for &k in alpha.iter().rev() {
        b.push(BraidLetter::Sigma(k), -1)?;
    }
    Ok(b)
}

/// Action of a single letter to the power ±1, memoized per thread.
fn letter_action(l: BraidLetter, sign: i32, n: usize) -> Rc<FreeAutomorphism> {
    thread_local! {
        static MEMO: RefCell<HashMap<(BraidLetter, i32, usize), Rc<FreeAutomorphism>>> = RefCell::new(HashMap::new());
    }
    let key = (l, sign, n);
    if let Some(f) = MEMO.with(|m| m.borrow().get(&key).cloned()) {
        return f;
    }
    let f = match l {
        BraidLetter::Sigma(i) => sigma_action(i, sign < 0, n).expect("checked letter"),
        BraidLetter::A(r, s) => {
            let a = a_generator(r, s, n).expect("checked letter");
            let a = if sign < 0 { a.inverse() } else { a };
            artin_action(&a)
        }
    };
    let f = Rc::new(f);
    MEMO.with(|m| m.borrow_mut().insert(key, f.clone()));
    f
}

/// Artin's representation `B_n → Aut(F_n)`.
pub fn artin_action(b: &BraidWord) -> FreeAutomorphism {
    let n = b.strands;
    let mut acc = FreeAutomorphism::identity(n);
    for &(l, e) in &b.letters {
        let f = letter_action(l, e.signum(), n);
        for _ in 0..e.unsigned_abs() {
            acc = acc.compose(&f).expect("same rank");
        }
    }
    acc
}

/// Equality in `B_n`, decided by Garside normal forms.
///
/// The Artin action decides the same question, but its images can grow
/// exponentially in the word length.
pub fn braids_equal(u: &BraidWord, v: &BraidWord) -> Result<bool> {
    if u.strands != v.strands {
        return Err(Error::StrandMismatch(u.strands, v.strands));
    }
    if u.letters == v.letters {
        return Ok(true);
    }
    Ok(normal_form(u) == normal_form(v))
}

/// Whether `b` is trivial in `B_n`.
pub fn is_trivial(b: &BraidWord) -> bool {
    b.is_empty() || normal_form(b).is_identity()
}

/// Underlying permutation of `{1..n}` as a list of images (0-based).
pub fn permutation(b: &BraidWord) -> Vec<usize> {
    let mut p: Vec<usize> = (0..b.strands).collect();
    for &(l, e) in &b.letters {
        if let BraidLetter::Sigma(i) = l {
            if e % 2 != 0 {
                // Track where each strand position goes.
                for x in p.iter_mut() {
                    if *x == i - 1 {
                        *x = i;
                    } else if *x == i {
                        *x = i - 1;
                    }
                }
            }
        }
    }
    p
}

pub fn is_pure(b: &BraidWord) -> bool {
    permutation(b).iter().enumerate().all(|(i, &x)| i == x)
}

/// A random pure braid word with `len` letters `A_{r,s}^{±1}`.
pub fn random_pure_braid<R: Rng + ?Sized>(rng: &mut R, strands: usize, len: usize) -> BraidWord {
    let mut b = BraidWord::identity(strands);
    if strands < 2 {
        return b;
    }
    for _ in 0..len {
        let s = rng.gen_range(2..=strands);
        let r = rng.gen_range(1..s);
        let e = if rng.gen_bool(0.5) { 1 } else { -1 };
        b.push(BraidLetter::A(r, s), e).expect("in range");
    }
    b
}

/// A random braid word with `len` letters `σ_i^{±1}`.
pub fn random_braid<R: Rng + ?Sized>(rng: &mut R, strands: usize, len: usize) -> BraidWord {
    let mut b = BraidWord::identity(strands);
    if strands < 2 {
        return b;
    }
    for _ in 0..len {
        let i = rng.gen_range(1..strands);
        let e = if rng.gen_bool(0.5) { 1 } else { -1 };
        b.push(BraidLetter::Sigma(i), e).expect("in range");
    }
    b
}

/// Rewrites a word in `F_n` as a braid word in `B_{n+1}` via `x_i ↦ A_{i,n+1}`.
pub fn word_to_a_letters(w: &Word, n: usize) -> BraidWord {
    let mut b = BraidWord::identity(n + 1);
    for &(g, e) in w.letters() {
        b.push(BraidLetter::A(g as usize, n + 1), e).expect("index within n");
    }
    b
}

fn a(r: usize, s: usize, e: i32, n: usize) -> BraidWord {
    BraidWord::agen(r, s, e, n).expect("in range")
}

fn prod(ws: &[BraidWord]) -> BraidWord {
    let n = ws[0].strands;
    ws.iter()
        .fold(BraidWord::identity(n), |acc, w| acc.mul(w).expect("same strands"))
}

/// Checks Artin's pure braid relations in `P_n`, in conjugation form and in commutator form.
///
/// The conjugation relation for `i < r < k` is checked with `s = k` (the case that
/// holds); the printed variant allowing any `s ≠ k` is reported as informational.
pub fn verify_pn_relations(n: usize) -> Report {
    let mut rep = Report::new(format!("pure braid relations P_{n}"));
    let pairs: Vec<(usize, usize)> = (1..=n)
        .flat_map(|x| (x + 1..=n).map(move |y| (x, y)))
        .collect();
    let eq = |u: &BraidWord, v: &BraidWord| braids_equal(u, v).expect("same strands");
    for &(r, s) in &pairs {
        for &(i, k) in &pairs {
            let inst = format!("(r,s)=({r},{s}) (i,k)=({i},{k})");
            let conj = |rs: BraidWord| prod(&[rs.clone(), a(i, k, 1, n), rs.inverse()]);
            if s < i || k < r {
                rep.record("conj1", &inst, eq(&conj(a(r, s, 1, n)), &a(i, k, 1, n)));
                let c = a(i, k, 1, n).commutator(&a(r, s, 1, n)).unwrap();
                rep.record("comm1", &inst, is_trivial(&c));
            }
            if r == k && i < k && k < s {
                let rhs = a(i, k, 1, n).conj_braid(&a(i, s, 1, n));
                rep.record("conj2", &inst, eq(&conj(a(k, s, 1, n)), &rhs));
                let lhs = a(i, k, 1, n).commutator(&a(k, s, -1, n)).unwrap();
                let rhs = a(i, k, 1, n).commutator(&a(i, s, 1, n)).unwrap();
                rep.record("comm2", &inst, eq(&lhs, &rhs));
            }
            let rhs3 = || {
                prod(&[
                    a(i, k, -1, n),
                    a(i, r, -1, n),
                    a(i, k, 1, n),
                    a(i, r, 1, n),
                    a(i, k, 1, n),
                ])
            };
            if i < r && r < k && s == k {
                rep.record("conj3", &inst, eq(&conj(a(r, s, 1, n)), &rhs3()));
                let lhs = a(r, k, -1, n).commutator(&a(i, k, -1, n)).unwrap();
                let rhs = a(i, k, 1, n).commutator(&a(i, r, 1, n)).unwrap();
                rep.record("comm3", &inst, eq(&lhs, &rhs));
            }
            if i < r && r < k && s != k && s > r {
                rep.inform("conj3-any-s", &inst, eq(&conj(a(r, s, 1, n)), &rhs3()));
            }
            if i < r && r < k && k < s {
                let rhs = prod(&[
                    a(i, s, -1, n),
                    a(i, r, -1, n),
                    a(i, s, 1, n),
                    a(i, r, 1, n),
                    a(i, k, 1, n),
                    a(i, r, -1, n),
                    a(i, s, -1, n),
                    a(i, r, 1, n),
                    a(i, s, 1, n),
                ]);
                rep.record("conj4", &inst, eq(&conj(a(r, s, 1, n)), &rhs));
                let lhs = a(i, k, 1, n).commutator(&a(r, s, -1, n)).unwrap();
                let inner = a(i, r, 1, n).commutator(&a(i, s, 1, n)).unwrap();
                let rhs = a(i, k, 1, n).commutator(&inner).unwrap();
                rep.record("comm4", &inst, eq(&lhs, &rhs));
            }
        }
    }
    rep
}

/// Every pure braid relation instance of `P_n` as a word that should be trivial,
/// conjugation and commutator forms.
pub fn pn_relation_words(n: usize) -> Vec<(String, BraidWord)> {
    let mut out = Vec::new();
    let pairs: Vec<(usize, usize)> = (1..=n)
        .flat_map(|x| (x + 1..=n).map(move |y| (x, y)))
        .collect();
    for &(r, s) in &pairs {
        for &(i, k) in &pairs {
            let inst = |tag: &str| format!("{tag} (r,s)=({r},{s}) (i,k)=({i},{k})");
            let conj = |rs: BraidWord| prod(&[rs.clone(), a(i, k, 1, n), rs.inverse()]);
            let rel = |l: BraidWord, r: BraidWord| l.mul(&r.inverse()).expect("same strands");
            if s < i || k < r {
                out.push((inst("conj1"), rel(conj(a(r, s, 1, n)), a(i, k, 1, n))));
            }
            if r == k && i < k && k < s {
                out.push((inst("conj2"), rel(conj(a(k, s, 1, n)), a(i, k, 1, n).conj_braid(&a(i, s, 1, n)))));
            }
            if i < r && r < k && s == k {
                let rhs = prod(&[a(i, k, -1, n), a(i, r, -1, n), a(i, k, 1, n), a(i, r, 1, n), a(i, k, 1, n)]);
                out.push((inst("conj3"), rel(conj(a(r, s, 1, n)), rhs)));
            }
            if i < r && r < k && k < s {
                let inner = a(i, r, 1, n).commutator(&a(i, s, 1, n)).unwrap();
                let lhs = a(i, k, 1, n).commutator(&a(r, s, -1, n)).unwrap();
                out.push((inst("comm4"), rel(lhs, a(i, k, 1, n).commutator(&inner).unwrap())));
            }
        }
    }
    out
}

/// Checks the two braid relation families of `B_n` under the Artin action.
pub fn verify_braid_relations(n: usize) -> Report {
    let mut rep = Report::new(format!("braid relations B_{n}"));
    let s = |i: usize| BraidWord::sigma(i, 1, n).unwrap();
    for i in 1..n {
        for j in i + 1..n {
            let inst = format!("i={i} j={j}");
            if j - i >= 2 {
                let ok = braids_equal(&prod(&[s(i), s(j)]), &prod(&[s(j), s(i)])).unwrap();
                rep.record("far commutation", &inst, ok);
            } else {
                let ok = braids_equal(&prod(&[s(i), s(j), s(i)]), &prod(&[s(j), s(i), s(j)])).unwrap();
                rep.record("braid relation", &inst, ok);
            }
        }
    }
    rep
}

/// Conjugation of `A_{j,n+1}` by `A_{r,s}` and by `σ_i` matches the Artin action.
pub fn conjugation_formula_check(n: usize) -> Report {
    let mut rep = Report::new(format!("conjugation formula n={n}"));
    for r in 1..=n {
        for s in r + 1..=n {
            let f = artin_action(&a(r, s, -1, n));
            let g = a(r, s, 1, n + 1);
            for j in 1..=n {
                let lhs = a(j, n + 1, 1, n + 1).conj_braid(&g);
                let rhs = word_to_a_letters(f.image(j as u32), n);
                rep.record(
                    "A-conjugation",
                    &format!("(r,s)=({r},{s}) j={j}"),
                    braids_equal(&lhs, &rhs).unwrap(),
                );
            }
        }
    }
    for i in 1..n {
        let f = artin_action(&BraidWord::sigma(i, -1, n).unwrap());
        let g = BraidWord::sigma(i, 1, n + 1).unwrap();
        for j in 1..=n {
            let lhs = a(j, n + 1, 1, n + 1).conj_braid(&g);
            let rhs = word_to_a_letters(f.image(j as u32), n);
            rep.record(
                "sigma-conjugation",
                &format!("i={i} j={j}"),
                braids_equal(&lhs, &rhs).unwrap(),
            );
        }
    }
    rep
}

impl BraidWord {
    /// `g^{-1} · self · g`.
    pub fn conj_braid(&self, g: &BraidWord) -> BraidWord {
        prod(&[g.inverse(), self.clone(), g.clone()])
    }
}

/// Closed formula for `A(A_{i,k})(x_r)`.
pub fn pure_action_formula(i: usize, k: usize, r: usize) -> Word {
    let (xi, xk, xr) = (Word::gen(i as u32), Word::gen(k as u32), Word::gen(r as u32));
    if r < i || k < r {
        xr
    } else if r == i {
        xi.mul(&commutator(&xi, &xk))
    } else if r == k {
        commutator(&xk, &xi).mul(&xk)
    } else {
        xr.mul(&commutator(&xr, &commutator(&xi, &xk)))
    }
}
