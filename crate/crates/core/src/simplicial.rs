//! Simplicial groups `AP_*`, `F[S^1]`, `F[Δ[1]]`, `K[S^1]`, the décalage `ΩAP_*`,
//! the maps `Θ`, `Ψ`, `ρ`, and Moore chains.
//!
//! Degree conventions:
//! - `AP_n = P_{n+1}`, written in `A_{i,j}` letters.
//! - `F[S^1]_n` is free on `x_1..x_n` with `d_t(x_q) = x_q` if `q+t ≤ n` and
//!   `x_{q-1}` otherwise (`x_0 = 1`, and `x_n = 1` in degree `n-1`);
//!   `s_t(x_q) = x_q` if `q+t ≤ n` and `x_{q+1}` otherwise.
//! - `F[Δ[1]]_n` is free on `e_i = ⟨0^i 1^{n+1-i}⟩`, `i = 0..n`, stored as the
//!   generator `x_{i+1}`; `⟨0^{n+1}⟩` is the basepoint.
//! - `ΩAP_n = ker(d_{n+1}: P_{n+2} → P_{n+1})` with faces and degeneracies
//!   `0..n` of `AP_{n+1}`.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use rand::Rng;
use serde::Serialize;

use crate::braid::{
    artin_action, braids_equal, is_trivial, pn_relation_words, random_pure_braid, BraidLetter,
    BraidWord,
};
use crate::error::{Error, Result};
use crate::reduced::{kn_embed, sfs_mul, SquareFreeSeries};
use crate::report::Report;
use crate::words::{random_word, Word};

pub trait SimplicialGroup {
    type Elem: Clone + fmt::Display;

    fn name(&self) -> &'static str;
    /// `d_t` from degree `n` to `n-1`.
    fn face(&self, n: usize, t: usize, x: &Self::Elem) -> Result<Self::Elem>;
    /// `s_t` from degree `n` to `n+1`.
    fn degeneracy(&self, n: usize, t: usize, x: &Self::Elem) -> Result<Self::Elem>;
    fn generators(&self, n: usize) -> Vec<Self::Elem>;
    fn random<R: Rng + ?Sized>(&self, n: usize, rng: &mut R) -> Self::Elem;
    fn equal(&self, n: usize, a: &Self::Elem, b: &Self::Elem) -> bool;
    fn is_identity(&self, n: usize, a: &Self::Elem) -> bool;
}

fn check_face(n: usize, t: usize) -> Result<()> {
    if n == 0 || t > n {
        return Err(Error::Bounds(format!("face d_{t} in degree {n}")));
    }
    Ok(())
}

fn check_degeneracy(n: usize, t: usize) -> Result<()> {
    if t > n {
        return Err(Error::Bounds(format!("degeneracy s_{t} in degree {n}")));
    }
    Ok(())
}

fn require_a_word(b: &BraidWord) -> Result<()> {
    if b.is_a_word() {
        Ok(())
    } else {
        Err(Error::NotPure)
    }
}

fn map_a_letters(b: &BraidWord, strands: usize, image: impl Fn(usize, usize) -> Vec<(usize, usize)>) -> BraidWord {
    let mut out = BraidWord::identity(strands);
    for &(l, e) in b.letters() {
        let BraidLetter::A(i, j) = l else { unreachable!("checked A-word") };
        let img: Vec<(usize, usize)> = image(i, j);
        let seq: Box<dyn Iterator<Item = &(usize, usize)>> = if e > 0 {
            Box::new(img.iter())
        } else {
            Box::new(img.iter().rev())
        };
        let seq: Vec<_> = seq.collect();
        for _ in 0..e.unsigned_abs() {
            for &&(r, s) in &seq {
                out.push(BraidLetter::A(r, s), e.signum()).expect("table stays in range");
            }
        }
    }
    out
}

/// `d_t: P_{n+1} → P_n`, letterwise.
pub fn ap_face(n: usize, t: usize, b: &BraidWord) -> Result<BraidWord> {
    check_face(n, t)?;
    require_a_word(b)?;
    if b.strands() != n + 1 {
        return Err(Error::StrandMismatch(b.strands(), n + 1));
    }
    let k = t + 1;
    Ok(map_a_letters(b, n, |i, j| {
        if k < i {
            vec![(i - 1, j - 1)]
        } else if k == i || k == j {
            vec![]
        } else if k < j {
            vec![(i, j - 1)]
        } else {
            vec![(i, j)]
        }
    }))
}

/// `s_t: P_{n+1} → P_{n+2}`, letterwise.
pub fn ap_degeneracy(n: usize, t: usize, b: &BraidWord) -> Result<BraidWord> {
    check_degeneracy(n, t)?;
    require_a_word(b)?;
    if b.strands() != n + 1 {
        return Err(Error::StrandMismatch(b.strands(), n + 1));
    }
    let k = t + 1;
    Ok(map_a_letters(b, n + 2, |i, j| {
        if k < i {
            vec![(i + 1, j + 1)]
        } else if k == i {
            vec![(i, j + 1), (i + 1, j + 1)]
        } else if k < j {
            vec![(i, j + 1)]
        } else if k == j {
            vec![(i, j), (i, j + 1)]
        } else {
            vec![(i, j)]
        }
    }))
}

/// `AP_*`: `P_{n+1}` in degree `n`.
#[derive(Clone, Copy, Debug, Default)]
pub struct Ap {
    /// Letters per random element.
    pub random_len: usize,
}

impl SimplicialGroup for Ap {
    type Elem = BraidWord;

    fn name(&self) -> &'static str {
        "AP"
    }

    fn face(&self, n: usize, t: usize, x: &BraidWord) -> Result<BraidWord> {
        ap_face(n, t, x)
    }

    fn degeneracy(&self, n: usize, t: usize, x: &BraidWord) -> Result<BraidWord> {
        ap_degeneracy(n, t, x)
    }

    fn generators(&self, n: usize) -> Vec<BraidWord> {
        let m = n + 1;
        (1..=m)
            .flat_map(|j| (1..j).map(move |i| BraidWord::agen(i, j, 1, m).expect("in range")))
            .collect()
    }

    fn random<R: Rng + ?Sized>(&self, n: usize, rng: &mut R) -> BraidWord {
        let len = rng.gen_range(1..=self.random_len.max(1));
        random_pure_braid(rng, n + 1, len)
    }

    fn equal(&self, _n: usize, a: &BraidWord, b: &BraidWord) -> bool {
        braids_equal(a, b).unwrap_or(false)
    }

    fn is_identity(&self, _n: usize, a: &BraidWord) -> bool {
        is_trivial(a)
    }
}

pub fn fs1_face(n: usize, t: usize, w: &Word) -> Result<Word> {
    check_face(n, t)?;
    w.check_rank(n)?;
    Ok(w.substitute_with(|q| {
        let q = q as usize;
        let target = if q + t <= n { q } else { q - 1 };
        if target == 0 || target == n {
            Word::identity()
        } else {
            Word::gen(target as u32)
        }
    }))
}

pub fn fs1_degeneracy(n: usize, t: usize, w: &Word) -> Result<Word> {
    check_degeneracy(n, t)?;
    w.check_rank(n)?;
    Ok(w.substitute_with(|q| {
        let q = q as usize;
        Word::gen(if q + t <= n { q } else { q + 1 } as u32)
    }))
}

/// `F[S^1]`, the Milnor construction on the simplicial circle.
#[derive(Clone, Copy, Debug, Default)]
pub struct Fs1 {
    pub random_len: usize,
}

impl SimplicialGroup for Fs1 {
    type Elem = Word;

    fn name(&self) -> &'static str {
        "FS1"
    }

    fn face(&self, n: usize, t: usize, x: &Word) -> Result<Word> {
        fs1_face(n, t, x)
    }

    fn degeneracy(&self, n: usize, t: usize, x: &Word) -> Result<Word> {
        fs1_degeneracy(n, t, x)
    }

    fn generators(&self, n: usize) -> Vec<Word> {
        (1..=n as u32).map(Word::gen).collect()
    }

    fn random<R: Rng + ?Sized>(&self, n: usize, rng: &mut R) -> Word {
        if n == 0 {
            return Word::identity();
        }
        let len = rng.gen_range(1..=self.random_len.max(1));
        random_word(rng, n, len)
    }

    fn equal(&self, _n: usize, a: &Word, b: &Word) -> bool {
        a == b
    }

    fn is_identity(&self, _n: usize, a: &Word) -> bool {
        a.is_identity()
    }
}

pub fn fdelta1_face(n: usize, t: usize, w: &Word) -> Result<Word> {
    check_face(n, t)?;
    w.check_rank(n + 1)?;
    Ok(w.substitute_with(|g| {
        let i = g as usize - 1;
        let target = if t < i { i - 1 } else { i };
        if target == n {
            Word::identity()
        } else {
            Word::gen(target as u32 + 1)
        }
    }))
}

pub fn fdelta1_degeneracy(n: usize, t: usize, w: &Word) -> Result<Word> {
    check_degeneracy(n, t)?;
    w.check_rank(n + 1)?;
    Ok(w.substitute_with(|g| {
        let i = g as usize - 1;
        Word::gen(if t < i { i + 1 } else { i } as u32 + 1)
    }))
}

/// `F[Δ[1]]` with basepoint the vertex `0`.
#[derive(Clone, Copy, Debug, Default)]
pub struct FDelta1 {
    pub random_len: usize,
}

impl SimplicialGroup for FDelta1 {
    type Elem = Word;

    fn name(&self) -> &'static str {
        "FDELTA1"
    }

    fn face(&self, n: usize, t: usize, x: &Word) -> Result<Word> {
        fdelta1_face(n, t, x)
    }

    fn degeneracy(&self, n: usize, t: usize, x: &Word) -> Result<Word> {
        fdelta1_degeneracy(n, t, x)
    }

    fn generators(&self, n: usize) -> Vec<Word> {
        (1..=n as u32 + 1).map(Word::gen).collect()
    }

    fn random<R: Rng + ?Sized>(&self, n: usize, rng: &mut R) -> Word {
        let len = rng.gen_range(1..=self.random_len.max(1));
        random_word(rng, n + 1, len)
    }

    fn equal(&self, _n: usize, a: &Word, b: &Word) -> bool {
        a == b
    }

    fn is_identity(&self, _n: usize, a: &Word) -> bool {
        a.is_identity()
    }
}

/// Substitutes monomial indices; monomials hitting a killed index or repeating one vanish.
fn sfs_reindex(x: &SquareFreeSeries, rank: usize, f: impl Fn(u32) -> Option<u32>) -> SquareFreeSeries {
    let mut terms: BTreeMap<Vec<u32>, i64> = BTreeMap::new();
    'mono: for (k, c) in x.terms() {
        let mut img = Vec::with_capacity(k.len());
        for &g in k {
            match f(g) {
                Some(h) => img.push(h),
                None => continue 'mono,
            }
        }
        *terms.entry(img).or_insert(0) += c;
    }
    SquareFreeSeries::from_terms(rank, terms).expect("indices in range")
}

/// `K[S^1]` with elements in square-free Magnus normal form.
#[derive(Clone, Copy, Debug, Default)]
pub struct Ks1 {
    pub random_len: usize,
}

impl SimplicialGroup for Ks1 {
    type Elem = SquareFreeSeries;

    fn name(&self) -> &'static str {
        "KS1"
    }

    fn face(&self, n: usize, t: usize, x: &SquareFreeSeries) -> Result<SquareFreeSeries> {
        check_face(n, t)?;
        Ok(sfs_reindex(x, n - 1, |q| {
            let q = q as usize;
            let target = if q + t <= n { q } else { q - 1 };
            (target != 0 && target != n).then_some(target as u32)
        }))
    }

    fn degeneracy(&self, n: usize, t: usize, x: &SquareFreeSeries) -> Result<SquareFreeSeries> {
        check_degeneracy(n, t)?;
        Ok(sfs_reindex(x, n + 1, |q| {
            let q = q as usize;
            Some(if q + t <= n { q } else { q + 1 } as u32)
        }))
    }

    fn generators(&self, n: usize) -> Vec<SquareFreeSeries> {
        (1..=n as u32)
            .map(|g| kn_embed(&Word::gen(g), n).expect("in range"))
            .collect()
    }

    fn random<R: Rng + ?Sized>(&self, n: usize, rng: &mut R) -> SquareFreeSeries {
        kn_embed(&Fs1 { random_len: self.random_len }.random(n, rng), n).expect("in range")
    }

    fn equal(&self, _n: usize, a: &SquareFreeSeries, b: &SquareFreeSeries) -> bool {
        a == b
    }

    fn is_identity(&self, _n: usize, a: &SquareFreeSeries) -> bool {
        a.is_one()
    }
}

/// `ρ: F[S^1] → K[S^1]`.
pub fn rho(n: usize, w: &Word) -> Result<SquareFreeSeries> {
    kn_embed(w, n)
}

/// `ΩAP_*`: the kernel of the last face, shifted down one degree.
#[derive(Clone, Copy, Debug, Default)]
pub struct OmegaAp {
    pub random_len: usize,
}

pub fn omega_ap_generators(n: usize) -> Vec<BraidWord> {
    (1..=n + 1)
        .map(|j| BraidWord::agen(j, n + 2, 1, n + 2).expect("in range"))
        .collect()
}

impl SimplicialGroup for OmegaAp {
    type Elem = BraidWord;

    fn name(&self) -> &'static str {
        "OmegaAP"
    }

    fn face(&self, n: usize, t: usize, x: &BraidWord) -> Result<BraidWord> {
        check_face(n, t)?;
        ap_face(n + 1, t, x)
    }

    fn degeneracy(&self, n: usize, t: usize, x: &BraidWord) -> Result<BraidWord> {
        check_degeneracy(n, t)?;
        ap_degeneracy(n + 1, t, x)
    }

    fn generators(&self, n: usize) -> Vec<BraidWord> {
        omega_ap_generators(n)
    }

    fn random<R: Rng + ?Sized>(&self, n: usize, rng: &mut R) -> BraidWord {
        let len = rng.gen_range(1..=self.random_len.max(1));
        let mut b = BraidWord::identity(n + 2);
        for _ in 0..len {
            let j = rng.gen_range(1..=n + 1);
            let e = if rng.gen_bool(0.5) { 1 } else { -1 };
            b.push(BraidLetter::A(j, n + 2), e).expect("in range");
        }
        b
    }

    fn equal(&self, _n: usize, a: &BraidWord, b: &BraidWord) -> bool {
        braids_equal(a, b).unwrap_or(false)
    }

    fn is_identity(&self, _n: usize, a: &BraidWord) -> bool {
        is_trivial(a)
    }
}

/// `Ψ(e_i) = A_{i+1,n+2} A_{i+2,n+2} ⋯ A_{n+1,n+2}`.
pub fn psi(n: usize, w: &Word) -> Result<BraidWord> {
    w.check_rank(n + 1)?;
    let mut out = BraidWord::identity(n + 2);
    for &(g, e) in w.letters() {
        let i = g as usize - 1;
        let img: Vec<usize> = (i + 1..=n + 1).collect();
        for _ in 0..e.unsigned_abs() {
            if e > 0 {
                for &j in &img {
                    out.push(BraidLetter::A(j, n + 2), 1)?;
                }
            } else {
                for &j in img.iter().rev() {
                    out.push(BraidLetter::A(j, n + 2), -1)?;
                }
            }
        }
    }
    Ok(out)
}

/// The generator `x_q(n)`: `x_1(1) = x_1`, `x_1(n) = s_0 x_1(n-1)`,
/// `x_q(n) = s_{n-1} x_{q-1}(n-1)`.
pub fn fs1_generator(q: usize, n: usize) -> Result<Word> {
    if q == 0 || q > n {
        return Err(Error::Bounds(format!("x_{q}({n})")));
    }
    if n == 1 {
        return Ok(Word::gen(1));
    }
    if q == 1 {
        fs1_degeneracy(n - 1, 0, &fs1_generator(1, n - 1)?)
    } else {
        fs1_degeneracy(n - 1, n - 1, &fs1_generator(q - 1, n - 1)?)
    }
}

/// `Θ(x_q(n))`, following the recursion of `fs1_generator` from `Θ(x_1(1)) = A_{1,2}`.
pub fn theta_generator(q: usize, n: usize) -> Result<BraidWord> {
    thread_local! {
        static MEMO: RefCell<HashMap<(usize, usize), BraidWord>> = RefCell::new(HashMap::new());
    }
    if q == 0 || q > n {
        return Err(Error::Bounds(format!("x_{q}({n})")));
    }
    if let Some(b) = MEMO.with(|m| m.borrow().get(&(q, n)).cloned()) {
        return Ok(b);
    }
    let b = if n == 1 {
        BraidWord::agen(1, 2, 1, 2)?
    } else if q == 1 {
        ap_degeneracy(n - 1, 0, &theta_generator(1, n - 1)?)?
    } else {
        ap_degeneracy(n - 1, n - 1, &theta_generator(q - 1, n - 1)?)?
    };
    MEMO.with(|m| m.borrow_mut().insert((q, n), b.clone()));
    Ok(b)
}

/// `Θ_n: F[S^1]_n → P_{n+1}`.
pub fn theta(n: usize, w: &Word) -> Result<BraidWord> {
    w.check_rank(n)?;
    let gens: Vec<BraidWord> = (1..=n).map(|q| theta_generator(q, n)).collect::<Result<_>>()?;
    let mut out = BraidWord::identity(n + 1);
    for &(g, e) in w.letters() {
        let img = gens[g as usize - 1].pow(e as i64);
        out = out.mul(&img)?;
    }
    Ok(out)
}

/// Whether all faces `d_0..d_n` (or `d_1..d_n` when `chain_only`) are trivial.
pub fn is_moore_cycle<G: SimplicialGroup>(g: &G, n: usize, x: &G::Elem, chain_only: bool) -> Result<bool> {
    if n == 0 {
        return Ok(true);
    }
    let start = if chain_only { 1 } else { 0 };
    for t in start..=n {
        if !g.is_identity(n - 1, &g.face(n, t, x)?) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Right,
    Left,
}

#[derive(Clone, Debug, Serialize)]
pub struct MooreChain {
    pub degree: usize,
    pub element: BraidWord,
    /// Degenerate factors `s_{i-1} d_i(c)` removed, in the order applied.
    pub corrections: Vec<BraidWord>,
    pub side: Side,
}

/// Projects `γ ∈ P_{n+1}` to a Moore chain in the same coset of degenerate
/// corrections: for `i = n` down to `1`, `c ← c · (s_{i-1} d_i c)^{-1}`.
pub fn moore_project(n: usize, gamma: &BraidWord, side: Side) -> Result<MooreChain> {
    require_a_word(gamma)?;
    if gamma.strands() != n + 1 {
        return Err(Error::StrandMismatch(gamma.strands(), n + 1));
    }
    let mut c = gamma.clone();
    let mut corrections = Vec::new();
    for i in (1..=n).rev() {
        let face = ap_face(n, i, &c)?;
        if is_trivial(&face) {
            continue;
        }
        let corr = ap_degeneracy(n - 1, i - 1, &face)?;
        c = match side {
            Side::Right => c.mul(&corr.inverse())?,
            Side::Left => corr.inverse().mul(&c)?,
        };
        corrections.push(corr);
    }
    Ok(MooreChain {
        degree: n,
        element: c,
        corrections,
        side,
    })
}

/// All simplicial identities on generators plus `samples` random elements per degree.
pub fn check_identities<G: SimplicialGroup, R: Rng + ?Sized>(
    g: &G,
    max_degree: usize,
    samples: usize,
    rng: &mut R,
) -> Report {
    let mut rep = Report::new(format!("{} simplicial identities", g.name()));
    for n in 0..=max_degree {
        let mut elems = g.generators(n);
        elems.extend((0..samples).map(|_| g.random(n, rng)));
        for x in &elems {
            identities_at(g, n, x, &mut rep);
        }
    }
    rep
}

fn identities_at<G: SimplicialGroup>(g: &G, n: usize, x: &G::Elem, rep: &mut Report) {
    let inst = |s: String| format!("deg {n} x={x} {s}");
    let d = |m: usize, t: usize, y: &G::Elem| g.face(m, t, y).expect("face in range");
    let s = |m: usize, t: usize, y: &G::Elem| g.degeneracy(m, t, y).expect("degeneracy in range");
    if n >= 2 {
        for j in 1..=n {
            for i in 0..j {
                let ok = g.equal(n - 2, &d(n - 1, i, &d(n, j, x)), &d(n - 1, j - 1, &d(n, i, x)));
                rep.record("d_i d_j = d_{j-1} d_i", &inst(format!("i={i} j={j}")), ok);
            }
        }
    }
    for j in 0..=n {
        for i in 0..=j {
            let ok = g.equal(n + 2, &s(n + 1, i, &s(n, j, x)), &s(n + 1, j + 1, &s(n, i, x)));
            rep.record("s_i s_j = s_{j+1} s_i", &inst(format!("i={i} j={j}")), ok);
        }
    }
    for j in 0..=n {
        let sj = s(n, j, x);
        rep.record("d_j s_j = id", &inst(format!("j={j}")), g.equal(n, &d(n + 1, j, &sj), x));
        rep.record("d_{j+1} s_j = id", &inst(format!("j={j}")), g.equal(n, &d(n + 1, j + 1, &sj), x));
        for i in 0..j {
            if n >= 1 {
                let ok = g.equal(n, &d(n + 1, i, &sj), &s(n - 1, j - 1, &d(n, i, x)));
                rep.record("d_i s_j = s_{j-1} d_i", &inst(format!("i={i} j={j}")), ok);
            }
        }
        for i in j + 2..=n + 1 {
            let ok = g.equal(n, &d(n + 1, i, &sj), &s(n - 1, j, &d(n, i - 1, x)));
            rep.record("d_i s_j = s_j d_{i-1}", &inst(format!("i={i} j={j}")), ok);
        }
    }
}

/// Commutation of `map` with every face and degeneracy.
pub fn check_morphism<S, T, F, R>(
    src: &S,
    dst: &T,
    map: F,
    degrees: std::ops::RangeInclusive<usize>,
    samples: usize,
    rng: &mut R,
    name: &str,
) -> Report
where
    S: SimplicialGroup,
    T: SimplicialGroup,
    F: Fn(usize, &S::Elem) -> Result<T::Elem>,
    R: Rng + ?Sized,
{
    let mut rep = Report::new(name.to_string());
    for n in degrees {
        let mut elems = src.generators(n);
        elems.extend((0..samples).map(|_| src.random(n, rng)));
        for x in &elems {
            let fx = map(n, x).expect("map defined");
            if n >= 1 {
                for t in 0..=n {
                    let lhs = dst.face(n, t, &fx).expect("face");
                    let rhs = map(n - 1, &src.face(n, t, x).expect("face")).expect("map");
                    rep.record("face", &format!("deg {n} t={t} x={x}"), dst.equal(n - 1, &lhs, &rhs));
                }
            }
            for t in 0..=n {
                let lhs = dst.degeneracy(n, t, &fx).expect("degeneracy");
                let rhs = map(n + 1, &src.degeneracy(n, t, x).expect("degeneracy")).expect("map");
                rep.record("degeneracy", &format!("deg {n} t={t} x={x}"), dst.equal(n + 1, &lhs, &rhs));
            }
        }
    }
    rep
}

/// Faces and degeneracies of `AP_*` send every pure braid relation to a relation.
pub fn ap_relation_check(max_degree: usize) -> Report {
    let mut rep = Report::new("AP operators preserve relations");
    for n in 0..=max_degree {
        for (name, rel) in pn_relation_words(n + 1) {
            if n >= 1 {
                for t in 0..=n {
                    let ok = is_trivial(&ap_face(n, t, &rel).expect("face"));
                    rep.record("face", &format!("deg {n} t={t} {name}"), ok);
                }
            }
            for t in 0..=n {
                let ok = is_trivial(&ap_degeneracy(n, t, &rel).expect("degeneracy"));
                rep.record("degeneracy", &format!("deg {n} t={t} {name}"), ok);
            }
        }
    }
    rep
}

/// `Ψ: F[Δ[1]] → ΩAP_*` is a simplicial isomorphism onto the generators `A_{j,n+2}`.
pub fn psi_check<R: Rng + ?Sized>(max_degree: usize, samples: usize, rng: &mut R) -> Report {
    let mut rep = Report::new(format!("loop map psi, degrees <= {max_degree}"));
    for n in 0..=max_degree {
        let gens = omega_ap_generators(n);
        for (k, gen) in gens.iter().enumerate() {
            let i = k + 1;
            // ⟨0^{i-1}1^{n+2-i}⟩ · ⟨0^i 1^{n+1-i}⟩^{-1}
            let mut diff = Word::gen(i as u32);
            if i <= n {
                diff = diff.mul(&Word::gen_pow(i as u32 + 1, -1));
            }
            let img = psi(n, &diff).expect("rank");
            rep.record("generator bijection", &format!("deg {n} A[{i},{}]", n + 2), braids_equal(&img, gen).unwrap());
            let killed = is_trivial(&ap_face(n + 1, n + 1, gen).unwrap());
            rep.record("kernel of last face", &format!("deg {n} A[{i},{}]", n + 2), killed);
        }
    }
    let m = check_morphism(
        &FDelta1 { random_len: 4 },
        &OmegaAp { random_len: 4 },
        psi,
        0..=max_degree,
        samples,
        rng,
        "psi",
    );
    rep.merge(m);
    rep
}

/// `Θ` commutes with all operators.
pub fn theta_morphism_check<R: Rng + ?Sized>(max_degree: usize, samples: usize, rng: &mut R) -> Report {
    check_morphism(
        &Fs1 { random_len: 4 },
        &Ap { random_len: 4 },
        theta,
        1..=max_degree,
        samples,
        rng,
        "theta simplicial morphism",
    )
}

/// `ρ` commutes with all operators, and the `K[S^1]` operators respect `K_n` classes.
pub fn rho_check<R: Rng + ?Sized>(max_degree: usize, samples: usize, rng: &mut R) -> Report {
    let mut rep = check_morphism(
        &Fs1 { random_len: 5 },
        &Ks1 { random_len: 5 },
        rho,
        1..=max_degree,
        samples,
        rng,
        "rho simplicial morphism",
    );
    let fs = Fs1 { random_len: 5 };
    for n in 1..=max_degree {
        for k in 0..samples {
            let w = fs.random(n, rng);
            let rel = crate::reduced::random_relation_word(rng, n, 4);
            let w2 = w.mul(&rel);
            for t in 0..=n {
                let a = kn_embed(&fs1_face(n, t, &w).unwrap(), n - 1).unwrap();
                let b = kn_embed(&fs1_face(n, t, &w2).unwrap(), n - 1).unwrap();
                rep.record("face respects K classes", &format!("deg {n} sample {k} t={t}"), a == b);
                let a = kn_embed(&fs1_degeneracy(n, t, &w).unwrap(), n + 1).unwrap();
                let b = kn_embed(&fs1_degeneracy(n, t, &w2).unwrap(), n + 1).unwrap();
                rep.record("degeneracy respects K classes", &format!("deg {n} sample {k} t={t}"), a == b);
            }
        }
    }
    rep
}

/// Product in `K_n` classes, exposed for callers composing `K[S^1]` elements.
pub fn ks1_mul(a: &SquareFreeSeries, b: &SquareFreeSeries) -> Result<SquareFreeSeries> {
    sfs_mul(a, b)
}

/// Abelianized image of a pure braid: exponent sum of each `A_{i,j}`, keyed by `(i,j)`.
pub fn pure_abelianization(b: &BraidWord) -> Result<BTreeMap<(usize, usize), i64>> {
    require_a_word(b)?;
    let mut out = BTreeMap::new();
    for &(l, e) in b.letters() {
        if let BraidLetter::A(i, j) = l {
            *out.entry((i, j)).or_insert(0) += e as i64;
        }
    }
    out.retain(|_, c| *c != 0);
    Ok(out)
}

/// Whether the Artin action of `b` is the identity on `F_n`.
pub fn acts_trivially(b: &BraidWord) -> bool {
    artin_action(b).is_identity()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn b(s: &str, n: usize) -> BraidWord {
        BraidWord::parse(s, n).unwrap()
    }

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn face_table_examples() {
        assert!(ap_face(1, 0, &b("A[1,2]", 2)).unwrap().is_empty());
        assert_eq!(ap_face(2, 1, &b("A[1,3]", 3)).unwrap(), b("A[1,2]", 2));
        assert_eq!(ap_face(2, 2, &b("A[1,2]", 3)).unwrap(), b("A[1,2]", 2));
        assert!(ap_face(2, 3, &b("A[1,2]", 3)).is_err());
        assert_eq!(ap_face(2, 0, &b("s1^2", 3)), Err(Error::NotPure));
    }

    #[test]
    fn degeneracy_table_examples() {
        assert_eq!(ap_degeneracy(1, 0, &b("A[1,2]", 2)).unwrap(), b("A[1,3] A[2,3]", 3));
        assert_eq!(ap_degeneracy(1, 1, &b("A[1,2]", 2)).unwrap(), b("A[1,2] A[1,3]", 3));
        assert_eq!(ap_degeneracy(2, 0, &b("A[2,3]", 3)).unwrap(), b("A[3,4]", 4));
        assert_eq!(ap_degeneracy(1, 0, &b("A[1,2]^-1", 2)).unwrap(), b("A[2,3]^-1 A[1,3]^-1", 3));
    }

    #[test]
    fn generators_and_theta() {
        assert_eq!(fs1_generator(1, 2).unwrap(), w("x1"));
        assert_eq!(fs1_generator(2, 2).unwrap(), w("x2"));
        for n in 1..=5 {
            for q in 1..=n {
                assert_eq!(fs1_generator(q, n).unwrap(), Word::gen(q as u32));
            }
        }
        assert_eq!(theta(1, &w("x1")).unwrap(), b("A[1,2]", 2));
        assert_eq!(theta_generator(1, 2).unwrap(), b("A[1,3] A[2,3]", 3));
        assert_eq!(theta_generator(2, 2).unwrap(), b("A[1,2] A[1,3]", 3));
        let c = theta(2, &w("x1^-1 x2^-1 x1 x2")).unwrap();
        let x = theta_generator(1, 2).unwrap();
        let y = theta_generator(2, 2).unwrap();
        assert!(braids_equal(&c, &x.commutator(&y).unwrap()).unwrap());
    }

    #[test]
    fn cycles() {
        let fs = Fs1::default();
        let c = w("x1^-1 x2^-1 x1 x2");
        assert!(is_moore_cycle(&fs, 2, &c, false).unwrap());
        assert!(!is_moore_cycle(&fs, 2, &w("x1"), false).unwrap());
        let tc = theta(2, &c).unwrap();
        assert!(is_moore_cycle(&Ap::default(), 2, &tc, false).unwrap());
    }

    #[test]
    fn projection_examples() {
        let ch = moore_project(1, &b("A[1,2]", 2), Side::Right).unwrap();
        assert!(is_trivial(&ap_face(1, 1, &ch.element).unwrap()));
        let tc = theta(2, &w("x1^-1 x2^-1 x1 x2")).unwrap();
        let ch = moore_project(2, &tc, Side::Right).unwrap();
        assert_eq!(ch.element, tc);
        assert!(ch.corrections.is_empty());
    }

    #[test]
    fn omega_generators_killed() {
        assert_eq!(omega_ap_generators(0), vec![b("A[1,2]", 2)]);
        for n in 0..=3 {
            for g in omega_ap_generators(n) {
                assert!(is_trivial(&ap_face(n + 1, n + 1, &g).unwrap()));
            }
        }
        assert_eq!(psi(0, &w("x1")).unwrap(), b("A[1,2]", 2));
    }

    #[test]
    fn small_identity_suites() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        assert!(check_identities(&Ap { random_len: 3 }, 2, 5, &mut rng).all_pass());
        assert!(check_identities(&Fs1 { random_len: 4 }, 3, 5, &mut rng).all_pass());
        assert!(check_identities(&FDelta1 { random_len: 4 }, 3, 5, &mut rng).all_pass());
        assert!(check_identities(&Ks1 { random_len: 4 }, 3, 5, &mut rng).all_pass());
        assert!(check_identities(&OmegaAp { random_len: 3 }, 2, 5, &mut rng).all_pass());
    }
}
