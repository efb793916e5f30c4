//! The Kohno Lie algebra `L(P_k)`: generators `B_{i,j}`, `1 ≤ i < j ≤ k`, modulo
//! the infinitesimal braid relations.
//!
//! Elements are kept in the normal form of the split exact sequences
//! `0 → L[B_{1,m},…,B_{m-1,m}] → L(P_m) → L(P_{m-1}) → 0`: one free Lie
//! component per `m = 2..k`, written in the Lyndon basis over letters
//! `x ↦ B_{x+1,m}`. A lower component acts on a higher one by the derivation
//! `D_{B_{s,t}}(B_{i,m}) = [B_{s,m}, B_{t,m}]` if `i = s`, `[B_{t,m}, B_{s,m}]`
//! if `i = t`, and `0` otherwise.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::rc::Rc;

use serde::Serialize;

use super::expr::{parse_expr, Atom, LieTarget};
use super::lie::{
    add_scaled, bracket_basis, bracket_terms, format_basis, lyndon_words, standard_factorization,
    term_records, witt, write_combination, Alphabet, Terms,
};
use super::theta::{gamma, lambda};
use crate::error::{Error, Result};
use crate::linalg::{rank_over_z, ModpEchelon};
use crate::report::Report;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KohnoElement {
    strands: usize,
    comps: BTreeMap<usize, Terms>,
}

/// `D_{B_{s,t}}(P_l)` for a basis element of a component above `t`.
fn derive_generator(s: u8, t: u8, l: &[u8]) -> Rc<Terms> {
    thread_local! {
        static MEMO: RefCell<HashMap<(u8, u8, Vec<u8>), Rc<Terms>>> = RefCell::new(HashMap::new());
    }
    let key = (s, t, l.to_vec());
    if let Some(r) = MEMO.with(|m| m.borrow().get(&key).cloned()) {
        return r;
    }
    // letters are 0-based: letter x is B_{x+1,m}
    let r = if l.len() == 1 {
        let x = l[0] + 1;
        if x == s {
            (*bracket_basis(&[s - 1], &[t - 1])).clone()
        } else if x == t {
            (*bracket_basis(&[t - 1], &[s - 1])).clone()
        } else {
            Terms::new()
        }
    } else {
        let (u, v) = standard_factorization(l);
        let mut out = bracket_terms(&derive_generator(s, t, u), &Terms::from([(v.to_vec(), 1)]));
        let right = bracket_terms(&Terms::from([(u.to_vec(), 1)]), &derive_generator(s, t, v));
        add_scaled(&mut out, 1, &right);
        out
    };
    let r = Rc::new(r);
    MEMO.with(|m| m.borrow_mut().insert(key, r.clone()));
    r
}

/// `D_{P_w}(P_l)` for `w` a Lyndon word of component `source` and `l` one of a higher component.
fn derive_basis(source: usize, w: &[u8], l: &[u8]) -> Rc<Terms> {
    thread_local! {
        static MEMO: RefCell<HashMap<(usize, Vec<u8>, Vec<u8>), Rc<Terms>>> = RefCell::new(HashMap::new());
    }
    let key = (source, w.to_vec(), l.to_vec());
    if let Some(r) = MEMO.with(|m| m.borrow().get(&key).cloned()) {
        return r;
    }
    let r = if w.len() == 1 {
        derive_generator(w[0] + 1, source as u8, l)
    } else {
        let (a, b) = standard_factorization(w);
        let mut out = Terms::new();
        let single = Terms::from([(l.to_vec(), 1)]);
        let ab = derive_terms(source, a, &derive_terms(source, b, &single));
        let ba = derive_terms(source, b, &derive_terms(source, a, &single));
        add_scaled(&mut out, 1, &ab);
        add_scaled(&mut out, -1, &ba);
        Rc::new(out)
    };
    MEMO.with(|m| m.borrow_mut().insert(key, r.clone()));
    r
}

fn derive_terms(source: usize, w: &[u8], target: &Terms) -> Terms {
    let mut out = Terms::new();
    for (l, c) in target {
        add_scaled(&mut out, *c, &derive_basis(source, w, l));
    }
    out
}

/// `D_X(Y)` for `X` in component `source` and `Y` in a higher component.
fn derive(source: usize, x: &Terms, y: &Terms) -> Terms {
    let mut out = Terms::new();
    for (w, cw) in x {
        for (l, cl) in y {
            add_scaled(&mut out, cw * cl, &derive_basis(source, w, l));
        }
    }
    out
}

impl KohnoElement {
    pub fn zero(strands: usize) -> KohnoElement {
        KohnoElement {
            strands,
            comps: BTreeMap::new(),
        }
    }

    /// `B_{i,j}` in `L(P_k)`.
    pub fn gen(i: usize, j: usize, strands: usize) -> Result<KohnoElement> {
        if i == 0 || i >= j || j > strands {
            return Err(Error::Bounds(format!("B[{i},{j}] with {strands} strands")));
        }
        Ok(KohnoElement {
            strands,
            comps: BTreeMap::from([(j, Terms::from([(vec![(i - 1) as u8], 1)]))]),
        })
    }

    /// The element with the given component `m` (Lyndon words over letters `x ↦ B_{x+1,m}`).
    pub fn from_component(strands: usize, m: usize, terms: Terms) -> Result<KohnoElement> {
        if m < 2 || m > strands || terms.keys().flatten().any(|&x| x as usize >= m - 1) {
            return Err(Error::Bounds(format!("component {m} with {strands} strands")));
        }
        let mut e = KohnoElement::zero(strands);
        e.set_component(m, terms);
        Ok(e)
    }

    fn set_component(&mut self, m: usize, mut terms: Terms) {
        terms.retain(|_, c| *c != 0);
        if terms.is_empty() {
            self.comps.remove(&m);
        } else {
            self.comps.insert(m, terms);
        }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn components(&self) -> &BTreeMap<usize, Terms> {
        &self.comps
    }

    pub fn component(&self, m: usize) -> Terms {
        self.comps.get(&m).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.comps.is_empty()
    }

    /// The same element in `L(P_k)` for `k ≥ strands`.
    pub fn widen(&self, strands: usize) -> Result<KohnoElement> {
        if strands < self.strands {
            return Err(Error::StrandMismatch(self.strands, strands));
        }
        Ok(KohnoElement {
            strands,
            comps: self.comps.clone(),
        })
    }

    fn same(&self, other: &KohnoElement) -> Result<()> {
        if self.strands == other.strands {
            Ok(())
        } else {
            Err(Error::StrandMismatch(self.strands, other.strands))
        }
    }

    pub fn add_scaled(&mut self, c: i64, other: &KohnoElement) -> Result<()> {
        self.same(other)?;
        for (m, t) in &other.comps {
            let mut cur = self.component(*m);
            add_scaled(&mut cur, c, t);
            self.set_component(*m, cur);
        }
        Ok(())
    }

    pub fn add(&self, other: &KohnoElement) -> Result<KohnoElement> {
        let mut out = self.clone();
        out.add_scaled(1, other)?;
        Ok(out)
    }

    pub fn sub(&self, other: &KohnoElement) -> Result<KohnoElement> {
        let mut out = self.clone();
        out.add_scaled(-1, other)?;
        Ok(out)
    }

    pub fn scale(&self, c: i64) -> KohnoElement {
        let mut out = KohnoElement::zero(self.strands);
        for (m, t) in &self.comps {
            out.set_component(*m, t.iter().map(|(k, v)| (k.clone(), c * v)).collect());
        }
        out
    }

    pub fn bracket(&self, other: &KohnoElement) -> Result<KohnoElement> {
        self.same(other)?;
        let mut out = KohnoElement::zero(self.strands);
        let ms: Vec<usize> = self.comps.keys().chain(other.comps.keys()).copied().collect();
        let top = ms.iter().copied().max().unwrap_or(0);
        let empty = Terms::new();
        for m in 2..=top {
            let xm = self.comps.get(&m).unwrap_or(&empty);
            let ym = other.comps.get(&m).unwrap_or(&empty);
            let mut z = bracket_terms(xm, ym);
            for mp in 2..m {
                if let Some(xp) = self.comps.get(&mp) {
                    add_scaled(&mut z, 1, &derive(mp, xp, ym));
                }
                if let Some(yp) = other.comps.get(&mp) {
                    add_scaled(&mut z, -1, &derive(mp, yp, xm));
                }
            }
            out.set_component(m, z);
        }
        Ok(out)
    }

    /// Coefficients reduced into `0..p`.
    pub fn reduce_mod(&self, p: i64) -> KohnoElement {
        let mut out = KohnoElement::zero(self.strands);
        for (m, t) in &self.comps {
            out.set_component(*m, t.iter().map(|(k, v)| (k.clone(), v.rem_euclid(p))).collect());
        }
        out
    }

    /// Coefficients in the basis `coordinate_basis(strands, d)`.
    pub fn coordinates(&self, basis: &[(usize, Vec<u8>)]) -> Vec<i64> {
        basis
            .iter()
            .map(|(m, l)| self.comps.get(m).and_then(|t| t.get(l)).copied().unwrap_or(0))
            .collect()
    }

    /// Nonzero coordinates as `((m, lyndon), coeff)`.
    pub fn terms(&self) -> Vec<((usize, Vec<u8>), i64)> {
        self.comps
            .iter()
            .flat_map(|(m, t)| t.iter().map(move |(l, c)| ((*m, l.clone()), *c)))
            .collect()
    }

    /// Whether every term has length `d`.
    pub fn is_homogeneous(&self, d: usize) -> bool {
        self.comps.values().flat_map(|t| t.keys()).all(|l| l.len() == d)
    }
}

impl LieTarget for KohnoElement {
    fn zero_like(&self) -> Self {
        KohnoElement::zero(self.strands)
    }

    fn axpy(&mut self, c: i64, other: &Self) -> Result<()> {
        self.add_scaled(c, other)
    }

    fn lie_bracket(&self, other: &Self) -> Result<Self> {
        self.bracket(other)
    }
}

impl fmt::Display for KohnoElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items = self.comps.iter().flat_map(|(m, t)| {
            let a = Alphabet::Braid(*m);
            t.iter().map(move |(l, c)| (format_basis(l, &|x| a.label(x)), *c))
        });
        write_combination(items, f)
    }
}

impl Serialize for KohnoElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let alphabet: Vec<_> = (2..=self.strands)
            .flat_map(|j| (1..j).map(move |i| serde_json::json!([i, j])))
            .collect();
        let mut terms = Vec::new();
        for (m, t) in &self.comps {
            let a = Alphabet::Braid(*m);
            terms.extend(term_records(t, &|x| a.label_json(x)));
        }
        serde_json::json!({ "strands": self.strands, "alphabet": alphabet, "terms": terms }).serialize(s)
    }
}

/// The coordinate basis of the degree-`d` part: `(m, l)` for `m = 2..k` and `l`
/// a Lyndon word of length `d` over `m-1` letters.
pub fn coordinate_basis(strands: usize, d: usize) -> Vec<(usize, Vec<u8>)> {
    (2..=strands)
        .flat_map(|m| lyndon_words(m - 1, d).into_iter().map(move |l| (m, l)))
        .collect()
}

/// `Σ_{m=2..k} W(m-1, d)`.
pub fn kohno_dim(strands: usize, d: usize) -> usize {
    (2..=strands).map(|m| witt(m - 1, d)).sum()
}

/// Evaluates an atom of the expression grammar in `L(P_k)`.
pub fn kohno_atom(atom: Atom, strands: usize) -> Result<KohnoElement> {
    match atom {
        Atom::B(i, j) => KohnoElement::gen(i, j, strands),
        Atom::Lambda(n) => lambda(n)?.widen(strands),
        Atom::Gamma(q, n) => gamma(q, n)?.widen(strands),
        Atom::X(_) => Err(Error::Parse("x generators are not Kohno algebra elements".into())),
    }
}

/// Normal form of a bracket expression in `B[i,j]`, `L[n]`, `G[q,n]`.
pub fn kohno_normalize(text: &str, strands: usize) -> Result<KohnoElement> {
    let e = parse_expr(text)?;
    e.eval(&KohnoElement::zero(strands), &|a| kohno_atom(a, strands))
}

fn all_generators(k: usize) -> Vec<KohnoElement> {
    (2..=k)
        .flat_map(|j| (1..j).map(move |i| KohnoElement::gen(i, j, k).expect("in range")))
        .collect()
}

fn b(i: usize, j: usize, k: usize) -> KohnoElement {
    KohnoElement::gen(i, j, k).expect("in range")
}

/// Every instance of the three relation families and of the two derived
/// identities normalizes to zero. With `modulus = p`, the normal form is read mod `p`.
pub fn kohno_relations_check(k: usize, modulus: u64) -> Report {
    let mut rep = Report::new(format!("infinitesimal braid relations k={k} mod={modulus}"));
    let vanishes = |e: KohnoElement| {
        if modulus == 0 {
            e.is_zero()
        } else {
            e.reduce_mod(modulus as i64).is_zero()
        }
    };
    for j in 2..=k {
        for i in 1..j {
            for t in 2..=k {
                for s in 1..t {
                    if [i, j].iter().any(|x| *x == s || *x == t) || (i, j) > (s, t) {
                        continue;
                    }
                    let e = b(i, j, k).bracket(&b(s, t, k)).unwrap();
                    rep.record("(i) disjoint", &format!("B[{i},{j}] B[{s},{t}]"), vanishes(e));
                }
            }
        }
    }
    for i in 1..=k {
        for t in i + 1..=k {
            for j in t + 1..=k {
                let inst = format!("i={i} t={t} j={j}");
                let e = b(i, j, k).bracket(&b(i, t, k).add(&b(t, j, k)).unwrap()).unwrap();
                rep.record("(ii)", &inst, vanishes(e));
                let e = b(t, j, k).bracket(&b(i, j, k).add(&b(i, t, k)).unwrap()).unwrap();
                rep.record("(iii)", &inst, vanishes(e));
                // the same triple read as j < t < k in the derived identities
                let (jj, tt, kk) = (i, t, j);
                let e = b(jj, kk, k).add(&b(tt, kk, k)).unwrap().bracket(&b(jj, tt, k)).unwrap();
                rep.record("derived 1a", &inst, vanishes(e));
                let lhs = b(jj, tt, k).bracket(&b(tt, kk, k)).unwrap();
                let rhs = b(tt, kk, k).bracket(&b(jj, kk, k)).unwrap();
                rep.record("derived 1b", &inst, vanishes(lhs.sub(&rhs).unwrap()));
            }
        }
    }
    for n in 2..k {
        let big = lambda(n).unwrap().widen(k).unwrap();
        for m in 2..n + 1 {
            for r in 1..m {
                let mut small = KohnoElement::zero(k);
                for j in 1..=r {
                    small.add_scaled(1, &b(j, m, k)).unwrap();
                }
                let e = big.bracket(&small).unwrap();
                rep.record("derived 2", &format!("n={n} r={r} m={m}"), vanishes(e));
            }
        }
    }
    rep
}

/// Degree-by-degree spans of the generators: degree 1 is every `B_{i,j}`,
/// degree `d` is spanned by `[B_{i,j}, b]` with `b` in a basis of degree `d-1`.
/// Returns the rank in each degree `1..=max_degree`, computed exactly.
pub fn normal_form_ranks(k: usize, max_degree: usize) -> Vec<usize> {
    let gens = all_generators(k);
    let mut level = gens.clone();
    let mut ranks = Vec::new();
    for d in 1..=max_degree {
        if d > 1 {
            let mut next = Vec::new();
            for g in &gens {
                for x in &level {
                    next.push(g.bracket(x).unwrap());
                }
            }
            level = next;
        }
        let basis = coordinate_basis(k, d);
        let mut ech = ModpEchelon::new(ModpEchelon::LARGE_PRIME);
        let mut chosen = Vec::new();
        let mut rows = Vec::new();
        for x in &level {
            let v = x.coordinates(&basis);
            if ech.insert(&v) {
                chosen.push(x.clone());
                rows.push(v);
            }
        }
        ranks.push(if rows.is_empty() { 0 } else { rank_over_z(&rows) });
        level = chosen;
    }
    ranks
}

/// `normal_form_ranks` against `kohno_dim` for every `k ≤ max_k`, `d ≤ max_degree`.
pub fn rank_consistency_check(max_k: usize, max_degree: usize) -> Report {
    let mut rep = Report::new(format!("normal form ranks k<={max_k} d<={max_degree}"));
    for k in 2..=max_k {
        for (i, r) in normal_form_ranks(k, max_degree).into_iter().enumerate() {
            let d = i + 1;
            rep.record("rank = kohno_dim", &format!("k={k} d={d} rank={r}"), r == kohno_dim(k, d));
        }
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relation_examples() {
        assert!(kohno_normalize("[B[1,2], B[3,4]]", 4).unwrap().is_zero());
        assert!(kohno_normalize("[B[1,3], B[1,2] + B[2,3]]", 3).unwrap().is_zero());
        assert!(kohno_normalize("[B[1,2],B[2,3]] - [B[2,3],B[1,3]]", 3).unwrap().is_zero());
        assert!(!kohno_normalize("[B[1,3],B[2,3]]", 3).unwrap().is_zero());
    }

    #[test]
    fn dims() {
        assert_eq!(kohno_dim(2, 1), 1);
        assert_eq!(kohno_dim(2, 2), 0);
        assert_eq!(kohno_dim(3, 1), 3);
        assert_eq!(kohno_dim(4, 2), 4);
    }

    #[test]
    fn mixed_bracket_lands_in_top_component() {
        let e = kohno_normalize("[B[1,2], B[1,3]]", 3).unwrap();
        assert_eq!(e.components().keys().copied().collect::<Vec<_>>(), vec![3]);
        assert_eq!(e.to_string(), "[B[1,3],B[2,3]]");
    }

    #[test]
    fn relations_small() {
        assert!(kohno_relations_check(4, 0).all_pass());
        assert!(kohno_relations_check(4, 2).all_pass());
        assert_eq!(normal_form_ranks(4, 3), vec![6, 4, 10]);
    }

    #[test]
    fn bounds() {
        assert!(KohnoElement::gen(2, 2, 3).is_err());
        assert!(KohnoElement::gen(1, 4, 3).is_err());
        assert!(kohno_normalize("x1", 3).is_err());
        assert!(b(1, 2, 2).bracket(&b(1, 2, 3)).is_err());
    }
}
