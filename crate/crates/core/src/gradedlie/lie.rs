//! Free Lie algebras over ℤ in the Lyndon basis.
//!
//! A Lyndon word `l` stands for its standard bracketing `P_l`: letters are
//! generators and `P_l = [P_u, P_v]` where `l = uv` with `v` the longest proper
//! Lyndon suffix. Words are over letters `0..k` (`u8`).

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::path::PathBuf;
use std::rc::Rc;

use serde::Serialize;

use crate::error::{Error, Result};

pub type Terms = BTreeMap<Vec<u8>, i64>;

pub fn is_lyndon(w: &[u8]) -> bool {
    !w.is_empty() && (1..w.len()).all(|i| w < &w[i..])
}

/// All Lyndon words of length exactly `d` over `k` letters, in lexicographic order.
///
/// When `BRAIDLAB_CACHE` names a directory, the lists are read from and written
/// to JSON files there.
pub fn lyndon_words(k: usize, d: usize) -> Vec<Vec<u8>> {
    thread_local! {
        static MEMO: RefCell<HashMap<(usize, usize), Rc<Vec<Vec<u8>>>>> = RefCell::new(HashMap::new());
    }
    if let Some(v) = MEMO.with(|m| m.borrow().get(&(k, d)).cloned()) {
        return (*v).clone();
    }
    let words = cached_on_disk(k, d).unwrap_or_else(|| {
        let w = duval(k, d);
        store_on_disk(k, d, &w);
        w
    });
    MEMO.with(|m| m.borrow_mut().insert((k, d), Rc::new(words.clone())));
    words
}

fn cache_file(k: usize, d: usize) -> Option<PathBuf> {
    let dir = std::env::var_os("BRAIDLAB_CACHE")?;
    Some(PathBuf::from(dir).join(format!("lyndon_k{k}_d{d}.json")))
}

fn cached_on_disk(k: usize, d: usize) -> Option<Vec<Vec<u8>>> {
    let text = std::fs::read_to_string(cache_file(k, d)?).ok()?;
    let words: Vec<Vec<u8>> = serde_json::from_str(&text).ok()?;
    words.iter().all(|w| w.len() == d && is_lyndon(w)).then_some(words)
}

fn store_on_disk(k: usize, d: usize, words: &[Vec<u8>]) {
    if let Some(path) = cache_file(k, d) {
        if let Some(dir) = path.parent() {
            let _ = std::fs::create_dir_all(dir);
        }
        if let Ok(text) = serde_json::to_string(words) {
            let _ = std::fs::write(path, text);
        }
    }
}

fn duval(k: usize, d: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    if k == 0 || d == 0 {
        return out;
    }
    let top = (k - 1) as u8;
    let mut w: Vec<u8> = vec![0];
    loop {
        if w.len() == d {
            out.push(w.clone());
        }
        let m = w.len();
        while w.len() < d {
            w.push(w[w.len() - m]);
        }
        while w.last() == Some(&top) {
            w.pop();
        }
        match w.last_mut() {
            Some(x) => *x += 1,
            None => break,
        }
    }
    out
}

/// Witt number: dimension of the degree-`d` part of the free Lie algebra on `k` generators.
pub fn witt(k: usize, d: usize) -> usize {
    lyndon_words(k, d).len()
}

/// Splits a Lyndon word of length ≥ 2 as `(u, v)` with `v` its longest proper Lyndon suffix.
pub fn standard_factorization(w: &[u8]) -> (&[u8], &[u8]) {
    debug_assert!(w.len() >= 2);
    let i = (1..w.len()).find(|&i| is_lyndon(&w[i..])).expect("letters are Lyndon");
    (&w[..i], &w[i..])
}

pub fn add_scaled(acc: &mut Terms, c: i64, other: &Terms) {
    if c == 0 {
        return;
    }
    for (k, v) in other {
        let e = acc.entry(k.clone()).or_insert(0);
        *e += c * v;
        if *e == 0 {
            acc.remove(k);
        }
    }
}

pub fn scale(t: &Terms, c: i64) -> Terms {
    if c == 0 {
        return Terms::new();
    }
    t.iter().map(|(k, v)| (k.clone(), c * v)).collect()
}

/// `[P_u, P_v]` in the Lyndon basis.
pub fn bracket_basis(u: &[u8], v: &[u8]) -> Rc<Terms> {
    thread_local! {
        static MEMO: RefCell<HashMap<(Vec<u8>, Vec<u8>), Rc<Terms>>> = RefCell::new(HashMap::new());
    }
    let key = (u.to_vec(), v.to_vec());
    if let Some(r) = MEMO.with(|m| m.borrow().get(&key).cloned()) {
        return r;
    }
    let r = Rc::new(compute_bracket_basis(u, v));
    MEMO.with(|m| m.borrow_mut().insert(key, r.clone()));
    r
}

fn compute_bracket_basis(u: &[u8], v: &[u8]) -> Terms {
    let mut out = Terms::new();
    if u == v {
        return out;
    }
    if u > v {
        return scale(&bracket_basis(v, u), -1);
    }
    if u.len() == 1 || standard_factorization(u).1 >= v {
        let mut uv = u.to_vec();
        uv.extend_from_slice(v);
        out.insert(uv, 1);
        return out;
    }
    // [[a,b],v] = [a,[b,v]] - [b,[a,v]]
    let (a, b) = standard_factorization(u);
    for (m, c) in bracket_basis(b, v).iter() {
        add_scaled(&mut out, *c, &bracket_basis(a, m));
    }
    for (m, c) in bracket_basis(a, v).iter() {
        add_scaled(&mut out, -*c, &bracket_basis(b, m));
    }
    out
}

pub fn bracket_terms(x: &Terms, y: &Terms) -> Terms {
    let mut out = Terms::new();
    for (u, cu) in x {
        for (v, cv) in y {
            add_scaled(&mut out, cu * cv, &bracket_basis(u, v));
        }
    }
    out
}

/// `P_l` expanded in the free associative algebra.
pub fn associative_expansion(l: &[u8]) -> Rc<Terms> {
    thread_local! {
        static MEMO: RefCell<HashMap<Vec<u8>, Rc<Terms>>> = RefCell::new(HashMap::new());
    }
    if let Some(r) = MEMO.with(|m| m.borrow().get(l).cloned()) {
        return r;
    }
    let r = if l.len() == 1 {
        Terms::from([(l.to_vec(), 1)])
    } else {
        let (u, v) = standard_factorization(l);
        let (pu, pv) = (associative_expansion(u), associative_expansion(v));
        let mut out = Terms::new();
        for (a, ca) in pu.iter() {
            for (b, cb) in pv.iter() {
                let mut ab = a.clone();
                ab.extend_from_slice(b);
                *out.entry(ab).or_insert(0) += ca * cb;
                let mut ba = b.clone();
                ba.extend_from_slice(a);
                *out.entry(ba).or_insert(0) -= ca * cb;
            }
        }
        out.retain(|_, c| *c != 0);
        out
    };
    let r = Rc::new(r);
    MEMO.with(|m| m.borrow_mut().insert(l.to_vec(), r.clone()));
    r
}

/// Writes an associative polynomial in the Lyndon basis, or `None` if it is not a Lie element.
///
/// Uses triangularity: the smallest word of `P_l` is `l` with coefficient 1.
pub fn from_associative(poly: &Terms) -> Option<Terms> {
    let mut rest = poly.clone();
    rest.retain(|_, c| *c != 0);
    let mut out = Terms::new();
    while let Some((w, c)) = rest.iter().next().map(|(w, c)| (w.clone(), *c)) {
        if !is_lyndon(&w) {
            return None;
        }
        add_scaled(&mut rest, -c, &associative_expansion(&w));
        out.insert(w, c);
    }
    Some(out)
}

pub fn to_associative(terms: &Terms) -> Terms {
    let mut out = Terms::new();
    for (l, c) in terms {
        add_scaled(&mut out, *c, &associative_expansion(l));
    }
    out
}

/// Evaluates a Lie polynomial in another Lie algebra, given generator images
/// and the target bracket.
pub fn evaluate<T: Clone>(
    terms: &Terms,
    zero: &T,
    gen: &dyn Fn(u8) -> T,
    bracket: &dyn Fn(&T, &T) -> T,
    axpy: &dyn Fn(&mut T, i64, &T),
) -> T {
    let mut memo: HashMap<Vec<u8>, T> = HashMap::new();
    let mut out = zero.clone();
    for (l, c) in terms {
        let v = eval_basis(l, gen, bracket, &mut memo);
        axpy(&mut out, *c, &v);
    }
    out
}

fn eval_basis<T: Clone>(
    l: &[u8],
    gen: &dyn Fn(u8) -> T,
    bracket: &dyn Fn(&T, &T) -> T,
    memo: &mut HashMap<Vec<u8>, T>,
) -> T {
    if let Some(v) = memo.get(l) {
        return v.clone();
    }
    let v = if l.len() == 1 {
        gen(l[0])
    } else {
        let (u, w) = standard_factorization(l);
        let a = eval_basis(u, gen, bracket, memo);
        let b = eval_basis(w, gen, bracket, memo);
        bracket(&a, &b)
    };
    memo.insert(l.to_vec(), v.clone());
    v
}

/// Generator labels of a free Lie algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Alphabet {
    /// `x_1..x_n`.
    Free(usize),
    /// `B_{1,m}..B_{m-1,m}`.
    Braid(usize),
}

impl Alphabet {
    pub fn size(&self) -> usize {
        match *self {
            Alphabet::Free(n) => n,
            Alphabet::Braid(m) => m.saturating_sub(1),
        }
    }

    pub fn label(&self, letter: u8) -> String {
        match *self {
            Alphabet::Free(_) => format!("x{}", letter + 1),
            Alphabet::Braid(m) => format!("B[{},{}]", letter + 1, m),
        }
    }

    pub(crate) fn label_json(&self, letter: u8) -> serde_json::Value {
        match *self {
            Alphabet::Free(_) => serde_json::json!(letter as usize + 1),
            Alphabet::Braid(m) => serde_json::json!([letter as usize + 1, m]),
        }
    }
}

/// Formats the standard bracketing of a Lyndon word.
pub fn format_basis(l: &[u8], label: &dyn Fn(u8) -> String) -> String {
    if l.len() == 1 {
        return label(l[0]);
    }
    let (u, v) = standard_factorization(l);
    format!("[{},{}]", format_basis(u, label), format_basis(v, label))
}

pub(crate) fn format_terms<'a, I>(terms: I, label: &dyn Fn(u8) -> String, f: &mut fmt::Formatter<'_>) -> fmt::Result
where
    I: IntoIterator<Item = (&'a Vec<u8>, &'a i64)>,
{
    write_combination(terms.into_iter().map(|(l, &c)| (format_basis(l, label), c)), f)
}

/// Writes `c_1*t_1 + c_2*t_2 - ...`, or `0` for an empty sum.
pub(crate) fn write_combination<I>(terms: I, f: &mut fmt::Formatter<'_>) -> fmt::Result
where
    I: IntoIterator<Item = (String, i64)>,
{
    let mut first = true;
    for (body, c) in terms {
        let mag = c.abs();
        if first {
            if c < 0 {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {} ", if c < 0 { "-" } else { "+" })?;
        }
        first = false;
        if mag == 1 {
            write!(f, "{body}")?;
        } else {
            write!(f, "{mag}*{body}")?;
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

/// An integer combination of Lyndon basis elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieElement {
    alphabet: Alphabet,
    terms: Terms,
}

impl LieElement {
    pub fn new(alphabet: Alphabet, mut terms: Terms) -> LieElement {
        terms.retain(|_, c| *c != 0);
        debug_assert!(terms.keys().all(|l| is_lyndon(l)
            && l.iter().all(|&x| (x as usize) < alphabet.size())));
        LieElement { alphabet, terms }
    }

    pub fn zero(alphabet: Alphabet) -> LieElement {
        LieElement::new(alphabet, Terms::new())
    }

    /// The generator with 1-based index `i`.
    pub fn gen(alphabet: Alphabet, i: usize) -> Result<LieElement> {
        if i == 0 || i > alphabet.size() {
            return Err(Error::Bounds(format!("generator {i} of {}", alphabet.size())));
        }
        Ok(LieElement::new(alphabet, Terms::from([(vec![(i - 1) as u8], 1)])))
    }

    /// The basis element `P_l` for a Lyndon word over 0-based letters.
    pub fn basis(alphabet: Alphabet, l: &[u8]) -> Result<LieElement> {
        if !is_lyndon(l) || l.iter().any(|&x| x as usize >= alphabet.size()) {
            return Err(Error::Bounds(format!("{l:?} is not a Lyndon word over the alphabet")));
        }
        Ok(LieElement::new(alphabet, Terms::from([(l.to_vec(), 1)])))
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn terms(&self) -> &Terms {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, l: &[u8]) -> i64 {
        self.terms.get(l).copied().unwrap_or(0)
    }

    fn same(&self, other: &LieElement) -> Result<()> {
        if self.alphabet == other.alphabet {
            Ok(())
        } else {
            Err(Error::AlphabetMismatch)
        }
    }

    pub fn add(&self, other: &LieElement) -> Result<LieElement> {
        self.same(other)?;
        let mut t = self.terms.clone();
        add_scaled(&mut t, 1, &other.terms);
        Ok(LieElement::new(self.alphabet, t))
    }

    pub fn sub(&self, other: &LieElement) -> Result<LieElement> {
        self.same(other)?;
        let mut t = self.terms.clone();
        add_scaled(&mut t, -1, &other.terms);
        Ok(LieElement::new(self.alphabet, t))
    }

    pub fn scale(&self, c: i64) -> LieElement {
        LieElement::new(self.alphabet, scale(&self.terms, c))
    }

    pub fn bracket(&self, other: &LieElement) -> Result<LieElement> {
        self.same(other)?;
        Ok(LieElement::new(self.alphabet, bracket_terms(&self.terms, &other.terms)))
    }

    /// Coefficients reduced into `0..p`.
    pub fn reduce_mod(&self, p: i64) -> LieElement {
        let t = self.terms.iter().map(|(k, c)| (k.clone(), c.rem_euclid(p))).collect();
        LieElement::new(self.alphabet, t)
    }

    /// The image under the Lie algebra map sending generator `i` (0-based) to `images[i]`.
    pub fn map_generators(&self, target: Alphabet, images: &[LieElement]) -> LieElement {
        let zero = LieElement::zero(target);
        let t = evaluate(
            &self.terms,
            &zero.terms,
            &|g| images[g as usize].terms.clone(),
            &|a, b| bracket_terms(a, b),
            &|acc, c, v| add_scaled(acc, c, v),
        );
        LieElement::new(target, t)
    }

    pub fn to_associative(&self) -> Terms {
        to_associative(&self.terms)
    }
}

impl fmt::Display for LieElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a = self.alphabet;
        format_terms(&self.terms, &|x| a.label(x), f)
    }
}

impl Serialize for LieElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let a = self.alphabet;
        let alphabet: Vec<_> = (0..a.size() as u8).map(|x| a.label_json(x)).collect();
        let terms = term_records(&self.terms, &|x| a.label_json(x));
        serde_json::json!({ "alphabet": alphabet, "terms": terms }).serialize(s)
    }
}

pub(crate) fn term_records<'a, I>(terms: I, label: &dyn Fn(u8) -> serde_json::Value) -> Vec<serde_json::Value>
where
    I: IntoIterator<Item = (&'a Vec<u8>, &'a i64)>,
{
    terms
        .into_iter()
        .map(|(l, c)| {
            serde_json::json!({
                "lyndon": l.iter().map(|&x| label(x)).collect::<Vec<_>>(),
                "coeff": c,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lyndon_enumeration() {
        assert_eq!(lyndon_words(2, 3), vec![vec![0, 0, 1], vec![0, 1, 1]]);
        assert_eq!(witt(3, 3), 8);
        assert_eq!(witt(2, 2), 1);
        assert_eq!(witt(1, 1), 1);
        assert_eq!(witt(1, 2), 0);
        assert_eq!(witt(4, 5), 204);
        assert_eq!(witt(2, 6), 9);
    }

    #[test]
    fn standard_factorization_examples() {
        assert_eq!(standard_factorization(&[0, 1]), (&[0u8][..], &[1u8][..]));
        assert_eq!(standard_factorization(&[0, 1, 1]), (&[0u8, 1][..], &[1u8][..]));
        assert_eq!(standard_factorization(&[0, 0, 1]), (&[0u8][..], &[0u8, 1][..]));
        assert_eq!(standard_factorization(&[0, 1, 0, 1, 1]), (&[0u8, 1][..], &[0u8, 1, 1][..]));
    }

    #[test]
    fn bracket_examples() {
        let a = Alphabet::Free(2);
        let x1 = LieElement::gen(a, 1).unwrap();
        let x2 = LieElement::gen(a, 2).unwrap();
        assert!(x1.bracket(&x1).unwrap().is_zero());
        let c = x1.bracket(&x2).unwrap();
        assert_eq!(c.terms(), &Terms::from([(vec![0, 1], 1)]));
        let d = c.bracket(&x1).unwrap();
        assert_eq!(d.terms(), &Terms::from([(vec![0, 0, 1], -1)]));
        assert_eq!(d.to_string(), "-[x1,[x1,x2]]");
    }

    #[test]
    fn from_associative_rejects_non_lie() {
        assert!(from_associative(&Terms::from([(vec![1, 0], 1)])).is_none());
        assert_eq!(
            from_associative(&Terms::from([(vec![0, 1], 1), (vec![1, 0], -1)])),
            Some(Terms::from([(vec![0, 1], 1)]))
        );
    }

    #[test]
    fn alphabet_mismatch() {
        let x = LieElement::gen(Alphabet::Free(2), 1).unwrap();
        let y = LieElement::gen(Alphabet::Free(3), 1).unwrap();
        assert_eq!(x.bracket(&y), Err(Error::AlphabetMismatch));
        assert!(LieElement::gen(Alphabet::Free(2), 3).is_err());
    }
}
