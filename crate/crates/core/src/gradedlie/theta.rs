//! The graded map `θ_n = E_0^*(Θ_n): L[x_1..x_n] → L(P_{n+1})`, the elements
//! `Λ_n` and `γ_q(n)`, the filtrations `D` and `Δ`, injectivity ranks and the
//! sample computations for `n = 3`.

use std::collections::BTreeMap;

use serde::Serialize;

use super::kohno::{coordinate_basis, KohnoElement};
use super::lie::{
    add_scaled, bracket_terms, evaluate, lyndon_words, to_associative, Alphabet, LieElement,
    Terms,
};
use crate::error::{Error, Result};
use crate::linalg::{in_span, rank_mod_p, rank_over_z, smith_invariants};
use crate::report::Report;

fn b(i: usize, j: usize, k: usize) -> KohnoElement {
    KohnoElement::gen(i, j, k).expect("in range")
}

fn sum(k: usize, items: impl IntoIterator<Item = (usize, usize)>) -> KohnoElement {
    let mut out = KohnoElement::zero(k);
    for (i, j) in items {
        out.add_scaled(1, &b(i, j, k)).expect("same strands");
    }
    out
}

/// `Λ_n = B_{1,n+1} + … + B_{n,n+1}` in `L(P_{n+1})`.
pub fn lambda(n: usize) -> Result<KohnoElement> {
    if n == 0 {
        return Err(Error::Bounds("Λ_n needs n >= 1".into()));
    }
    Ok(sum(n + 1, (1..=n).map(|i| (i, n + 1))))
}

/// `γ_q(n) = -Σ_{n-q+2 ≤ i ≤ n} B_{i,n+1}` in `L(P_{n+1})`, `2 ≤ q ≤ n`.
pub fn gamma(q: usize, n: usize) -> Result<KohnoElement> {
    if q < 2 || q > n {
        return Err(Error::Bounds(format!("γ_{q}({n}) needs 2 <= q <= n")));
    }
    Ok(sum(n + 1, (n - q + 2..=n).map(|i| (i, n + 1))).scale(-1))
}

/// `θ(x_q) = Σ_{1 ≤ i ≤ n-q+1 < j ≤ n+1} B_{i,j}`.
pub fn theta_generator_graded(q: usize, n: usize) -> Result<KohnoElement> {
    if q == 0 || q > n {
        return Err(Error::Bounds(format!("x_{q} in degree {n}")));
    }
    let c = n - q + 1;
    Ok(sum(n + 1, (1..=c).flat_map(|i| (c + 1..=n + 1).map(move |j| (i, j)))))
}

/// Evaluates a Lie polynomial over letters `0..` in `L(P_k)` given generator images.
fn eval_in_kohno(terms: &Terms, strands: usize, images: &dyn Fn(u8) -> KohnoElement) -> KohnoElement {
    evaluate(
        terms,
        &KohnoElement::zero(strands),
        images,
        &|a, c| a.bracket(c).expect("same strands"),
        &|acc, c, v| acc.add_scaled(c, v).expect("same strands"),
    )
}

/// `θ_n(a)` for `a` in `L[x_1..x_n]`.
pub fn theta_graded(n: usize, a: &LieElement) -> Result<KohnoElement> {
    if a.alphabet() != Alphabet::Free(n) {
        return Err(Error::AlphabetMismatch);
    }
    let gens: Vec<KohnoElement> = (1..=n).map(|q| theta_generator_graded(q, n)).collect::<Result<_>>()?;
    Ok(eval_in_kohno(a.terms(), n + 1, &|x| gens[x as usize].clone()))
}

/// A Lie algebra map `L(P_k) → L(P_{k'})` given on generators, applied componentwise.
fn map_kohno(x: &KohnoElement, target: usize, image: &dyn Fn(usize, usize) -> KohnoElement) -> KohnoElement {
    let mut out = KohnoElement::zero(target);
    for (m, t) in x.components() {
        let m = *m;
        let v = eval_in_kohno(t, target, &|l| image(l as usize + 1, m));
        out.add_scaled(1, &v).expect("same strands");
    }
    out
}

/// The associated graded face `d_t: L(P_{n+1}) → L(P_n)`.
pub fn graded_face(n: usize, t: usize, x: &KohnoElement) -> Result<KohnoElement> {
    if n == 0 || t > n || x.strands() != n + 1 {
        return Err(Error::Bounds(format!("graded face d_{t} in degree {n}")));
    }
    let k = t + 1;
    Ok(map_kohno(x, n, &|i, j| {
        if k < i {
            b(i - 1, j - 1, n)
        } else if k == i || k == j {
            KohnoElement::zero(n)
        } else if k < j {
            b(i, j - 1, n)
        } else {
            b(i, j, n)
        }
    }))
}

/// The associated graded degeneracy `s_t: L(P_{n+1}) → L(P_{n+2})`.
pub fn graded_degeneracy(n: usize, t: usize, x: &KohnoElement) -> Result<KohnoElement> {
    if t > n || x.strands() != n + 1 {
        return Err(Error::Bounds(format!("graded degeneracy s_{t} in degree {n}")));
    }
    let k = t + 1;
    let s = n + 2;
    Ok(map_kohno(x, s, &|i, j| {
        if k < i {
            b(i + 1, j + 1, s)
        } else if k == i {
            b(i, j + 1, s).add(&b(i + 1, j + 1, s)).unwrap()
        } else if k < j {
            b(i, j + 1, s)
        } else if k == j {
            b(i, j, s).add(&b(i, j + 1, s)).unwrap()
        } else {
            b(i, j, s)
        }
    }))
}

/// Graded face of `L[x_1..x_n]`: `x_q ↦ x_q` if `q+t ≤ n`, else `x_{q-1}`, with `x_0 = x_n = 0`.
pub fn free_face(n: usize, t: usize, a: &LieElement) -> Result<LieElement> {
    if n == 0 || t > n || a.alphabet() != Alphabet::Free(n) {
        return Err(Error::Bounds(format!("free face d_{t} in degree {n}")));
    }
    let target = Alphabet::Free(n - 1);
    let images: Vec<LieElement> = (1..=n)
        .map(|q| {
            let r = if q + t <= n { q } else { q - 1 };
            if r == 0 || r == n {
                LieElement::zero(target)
            } else {
                LieElement::gen(target, r).unwrap()
            }
        })
        .collect();
    Ok(a.map_generators(target, &images))
}

/// Graded degeneracy of `L[x_1..x_n]`: `x_q ↦ x_q` if `q+t ≤ n`, else `x_{q+1}`.
pub fn free_degeneracy(n: usize, t: usize, a: &LieElement) -> Result<LieElement> {
    if t > n || a.alphabet() != Alphabet::Free(n) {
        return Err(Error::Bounds(format!("free degeneracy s_{t} in degree {n}")));
    }
    let target = Alphabet::Free(n + 1);
    let images: Vec<LieElement> = (1..=n)
        .map(|q| LieElement::gen(target, if q + t <= n { q } else { q + 1 }).unwrap())
        .collect();
    Ok(a.map_generators(target, &images))
}

/// `[..[x_1, x_{j_1}], .., x_{j_q}]` in `L[x_1..x_n]`.
pub fn left_normed_free(n: usize, first: usize, seq: &[usize]) -> Result<LieElement> {
    let a = Alphabet::Free(n);
    let mut acc = LieElement::gen(a, first)?;
    for &j in seq {
        acc = acc.bracket(&LieElement::gen(a, j)?)?;
    }
    Ok(acc)
}

/// `[..[Λ_n, γ_{s_1}], .., γ_{s_r}]`.
pub fn lambda_gamma_bracket(n: usize, seq: &[usize]) -> Result<KohnoElement> {
    let mut acc = lambda(n)?;
    for &q in seq {
        acc = acc.bracket(&gamma(q, n)?)?;
    }
    Ok(acc)
}

/// `D(j_1..j_q)`: pairs `a < b` with `j_a > j_b`.
pub fn filtration_d(seq: &[usize]) -> usize {
    pairs(seq).filter(|(x, y)| x > y).count()
}

/// `Δ(j_1..j_q)`: pairs `a < b` with `j_a < j_b`.
pub fn filtration_delta(seq: &[usize]) -> usize {
    pairs(seq).filter(|(x, y)| x < y).count()
}

fn pairs(seq: &[usize]) -> impl Iterator<Item = (usize, usize)> + '_ {
    (0..seq.len()).flat_map(move |a| (a + 1..seq.len()).map(move |c| (seq[a], seq[c])))
}

/// Whether `θ_n([..[x_1,x_{j_1}]..x_{j_q}]) = [..[Λ_n,γ_{j_q}]..γ_{j_1}]` exactly.
pub fn admissible_bracket_check(n: usize, seq: &[usize]) -> Result<bool> {
    if seq.windows(2).any(|w| w[0] > w[1]) || seq.iter().any(|&j| j < 2 || j > n) {
        return Err(Error::Bounds(format!("{seq:?} is not admissible for n={n}")));
    }
    let lhs = theta_graded(n, &left_normed_free(n, 1, seq)?)?;
    let rev: Vec<usize> = seq.iter().rev().copied().collect();
    Ok(lhs == lambda_gamma_bracket(n, &rev)?)
}

/// Items (a) to (g) relating `θ`, `Λ_n` and `γ_q(n)`.
///
/// (f) and (g) are checked for `s_j` with `j ≤ n-1`, since
/// `s_n(B_{i,n+1}) = B_{i,n+1} + B_{i,n+2}`.
pub fn theta_identities_check(n: usize) -> Report {
    let mut rep = Report::new(format!("graded theta identities n={n}"));
    let k = n + 1;
    let lam = lambda(n).unwrap();
    let g = |q: usize| gamma(q, n).unwrap();
    let th = |q: usize| theta_generator_graded(q, n).unwrap();
    let br = |x: &KohnoElement, y: &KohnoElement| x.bracket(y).unwrap();
    for j in 2..=n {
        for i in 1..j {
            let ok = br(&lam, &b(i, j, k)).is_zero();
            rep.record("(a) [Λ,B_ij]=0", &format!("i={i} j={j}"), ok);
        }
    }
    for q in 2..=n {
        for p in 2..=q {
            rep.record("(b) [γ_p,θ(x_q)]=0", &format!("p={p} q={q}"), br(&g(p), &th(q)).is_zero());
        }
    }
    for q in 1..=n {
        let mut rhs = lam.clone();
        if q >= 2 {
            rhs.add_scaled(1, &g(q)).unwrap();
        }
        let c = n - q + 1;
        for i in 1..=c {
            for j in c + 1..=n {
                rhs.add_scaled(1, &b(i, j, k)).unwrap();
            }
        }
        rep.record("(c) θ(x_q) decomposition", &format!("q={q}"), th(q) == rhs);
    }
    for j in 2..=n {
        for i in 2..j {
            let lhs = br(&g(j), &th(i));
            let mut rhs = br(&g(j), &lam);
            rhs.add_scaled(1, &br(&lam, &g(i))).unwrap();
            rhs.add_scaled(2, &br(&g(j), &g(i))).unwrap();
            rep.record("(d) [γ_j,θ(x_i)]", &format!("i={i} j={j}"), lhs == rhs);
            let mut shifted = th(i);
            shifted.add_scaled(-2, &g(i)).unwrap();
            let lhs = br(&g(j), &shifted);
            let mut rhs = br(&g(j), &lam);
            rhs.add_scaled(1, &br(&lam, &g(i))).unwrap();
            rep.record("(d') [γ_p,θ(x_q)-2γ_q]", &format!("q={i} p={j}"), lhs == rhs);
        }
    }
    for m in 2..=n {
        for r in 1..m {
            let small = sum(k, (1..=r).map(|j| (j, m)));
            rep.record("(e) [Λ,ΣB_jm]=0", &format!("r={r} m={m}"), br(&lam, &small).is_zero());
        }
    }
    let lam_next = lambda(n + 1).unwrap();
    for j in 0..n {
        let sl = graded_degeneracy(n, j, &lam).unwrap();
        rep.record("(f) s_jΛ_n = Λ_{n+1}", &format!("j={j}"), sl == lam_next);
        for q in 2..=n {
            let want = if j + q < n + 1 { gamma(q, n + 1) } else { gamma(q + 1, n + 1) }.unwrap();
            let got = graded_degeneracy(n, j, &g(q)).unwrap();
            rep.record("(g) s_jγ_q", &format!("j={j} q={q}"), got == want);
        }
    }
    rep
}

/// Kernel of `p`: `B_{1,n+1} ↦ -Σ_{j≥2} B_{j,n+1}`, other `B_{j,n+1}` fixed, on the free
/// component `L[B_{*,n+1}]`.
pub fn p_map(n: usize, x: &Terms) -> Terms {
    let mut neg = Terms::new();
    for j in 1..n as u8 {
        neg.insert(vec![j], -1);
    }
    evaluate(
        x,
        &Terms::new(),
        &|l| if l == 0 { neg.clone() } else { Terms::from([(vec![l], 1)]) },
        &|a, c| bracket_terms(a, c),
        &|acc, c, v| add_scaled(acc, c, v),
    )
}

/// `θ_n(P_l)` lies in the free component `L[B_{*,n+1}]` and in the kernel of `p`
/// for every Lyndon word `l` containing `x_1`, degrees `2..=max_degree`.
pub fn p_kernel_check(n: usize, max_degree: usize) -> Report {
    let mut rep = Report::new(format!("image in kernel of p, n={n}"));
    for d in 2..=max_degree {
        for l in lyndon_words(n, d) {
            if !l.contains(&0) {
                continue;
            }
            let img = theta_graded(n, &LieElement::basis(Alphabet::Free(n), &l).unwrap()).unwrap();
            let top_only = img.components().keys().all(|&m| m == n + 1);
            let killed = p_map(n, &img.component(n + 1)).is_empty();
            rep.record("kernel of p", &format!("d={d} l={l:?}"), top_only && killed);
        }
    }
    rep
}

/// Coefficients of `[..[Λ_n, γ_{a_1}]..γ_{a_r}]` in the abelianization of the
/// Λ-ideal, read from the free component `L[B_{*,n+1}]`: letters become
/// `B_1 = Λ - Σ_{j≥2} B_j`, `B_{n-q+2} = γ_{q-1} - γ_q` (`γ_1 = 0`), and only
/// monomials with a single `Λ` in first position are kept.
pub fn h1_coefficients(n: usize, x: &KohnoElement) -> Result<BTreeMap<Vec<usize>, i64>> {
    if x.strands() != n + 1 || x.components().keys().any(|&m| m != n + 1) {
        return Err(Error::Bounds("element is not in the free component".into()));
    }
    // a later letter B_i as a combination of γ_2..γ_n
    let later = |letter: u8| -> Vec<(usize, i64)> {
        let i = letter as usize + 1;
        if i == 1 {
            return vec![(n, 1)];
        }
        let q = n - i + 2;
        let mut out = vec![(q, -1)];
        if q > 2 {
            out.push((q - 1, 1));
        }
        out
    };
    let mut out: BTreeMap<Vec<usize>, i64> = BTreeMap::new();
    for (w, c) in to_associative(&x.component(n + 1)) {
        if w[0] != 0 {
            continue;
        }
        let mut partial: BTreeMap<Vec<usize>, i64> = BTreeMap::from([(Vec::new(), c)]);
        for &letter in &w[1..] {
            let mut next = BTreeMap::new();
            for (k, v) in &partial {
                for (q, s) in later(letter) {
                    let mut k2 = k.clone();
                    k2.push(q);
                    *next.entry(k2).or_insert(0) += v * s;
                }
            }
            partial = next;
        }
        for (k, v) in partial {
            *out.entry(k).or_insert(0) += v;
        }
    }
    out.retain(|_, v| *v != 0);
    Ok(out)
}

/// For every sequence `j_1..j_q` over `2..n` the coefficient of
/// `[..[Λ_n,γ_{j_q}]..γ_{j_1}]` in `θ_n([..[x_1,x_{j_1}]..x_{j_q}])` is `±1`.
pub fn leading_coefficient_check(max_n: usize, max_q: usize) -> Report {
    let mut rep = Report::new(format!("leading coefficients n<={max_n} q<={max_q}"));
    for n in 2..=max_n {
        for q in 1..=max_q {
            for seq in sequences(2, n, q) {
                let img = theta_graded(n, &left_normed_free(n, 1, &seq).unwrap()).unwrap();
                let h = h1_coefficients(n, &img).unwrap();
                let rev: Vec<usize> = seq.iter().rev().copied().collect();
                let c = h.get(&rev).copied().unwrap_or(0);
                rep.record("leading ±1", &format!("n={n} seq={seq:?} coeff={c}"), c.abs() == 1);
            }
        }
    }
    rep
}

/// All sequences of length `q` over `lo..=hi`.
pub fn sequences(lo: usize, hi: usize, q: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..q {
        out = out
            .into_iter()
            .flat_map(|s| {
                (lo..=hi).map(move |j| {
                    let mut t = s.clone();
                    t.push(j);
                    t
                })
            })
            .collect();
    }
    out
}

/// Weakly increasing sequences of length `q` over `lo..=hi`.
pub fn admissible_sequences(lo: usize, hi: usize, q: usize) -> Vec<Vec<usize>> {
    sequences(lo, hi, q)
        .into_iter()
        .filter(|s| s.windows(2).all(|w| w[0] <= w[1]))
        .collect()
}

/// Every admissible sequence with `2 ≤ n ≤ max_n`, `q ≤ max_q`.
pub fn admissible_suite(max_n: usize, max_q: usize) -> Report {
    let mut rep = Report::new(format!("admissible sequences n<={max_n} q<={max_q}"));
    for n in 1..=max_n {
        for q in 0..=max_q {
            for seq in admissible_sequences(2, n, q) {
                let ok = admissible_bracket_check(n, &seq).unwrap();
                rep.record("admissible", &format!("n={n} seq={seq:?}"), ok);
            }
        }
    }
    rep
}

/// `θ` commutes with every graded face and degeneracy on the Lyndon basis.
pub fn theta_simplicial_check(max_n: usize, max_degree: usize) -> Report {
    let mut rep = Report::new(format!("graded theta commutes with operators n<={max_n} d<={max_degree}"));
    for n in 1..=max_n {
        for d in 1..=max_degree {
            for l in lyndon_words(n, d) {
                let a = LieElement::basis(Alphabet::Free(n), &l).unwrap();
                let img = theta_graded(n, &a).unwrap();
                for t in 0..=n {
                    if n >= 2 {
                        let lhs = graded_face(n, t, &img).unwrap();
                        let rhs = theta_graded(n - 1, &free_face(n, t, &a).unwrap()).unwrap();
                        rep.record("face", &format!("n={n} t={t} l={l:?}"), lhs == rhs);
                    }
                    let lhs = graded_degeneracy(n, t, &img).unwrap();
                    let rhs = theta_graded(n + 1, &free_degeneracy(n, t, &a).unwrap()).unwrap();
                    rep.record("degeneracy", &format!("n={n} t={t} l={l:?}"), lhs == rhs);
                }
            }
        }
    }
    rep
}

/// Limits on `(n, d)` for rank computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Budget {
    pub max_n: usize,
    pub max_degree: usize,
}

impl Budget {
    pub const SMOKE: Budget = Budget { max_n: 3, max_degree: 3 };
    pub const STANDARD: Budget = Budget { max_n: 4, max_degree: 5 };
    pub const DEEP: Budget = Budget { max_n: 5, max_degree: 6 };

    pub fn named(name: &str) -> Option<Budget> {
        match name {
            "smoke" => Some(Budget::SMOKE),
            "standard" => Some(Budget::STANDARD),
            "deep" => Some(Budget::DEEP),
            _ => None,
        }
    }

    pub fn admits(&self, n: usize, d: usize) -> bool {
        n <= self.max_n && d <= self.max_degree
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InjectivityRank {
    pub n: usize,
    pub degree: usize,
    pub modulus: u64,
    pub domain_dim: usize,
    pub rank: usize,
    /// Over ℤ: whether every elementary divisor is 1.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub unit_divisors: Option<bool>,
}

impl InjectivityRank {
    pub fn is_injective(&self) -> bool {
        self.rank == self.domain_dim && self.unit_divisors != Some(false)
    }
}

/// The matrix of `θ_n` on the degree-`d` Lyndon basis, rows in the Kohno coordinates.
pub fn theta_matrix(n: usize, d: usize) -> Vec<Vec<i64>> {
    let basis = coordinate_basis(n + 1, d);
    lyndon_words(n, d)
        .iter()
        .map(|l| {
            let a = LieElement::basis(Alphabet::Free(n), l).unwrap();
            theta_graded(n, &a).unwrap().coordinates(&basis)
        })
        .collect()
}

/// Domain dimension and rank of `θ_n` in degree `d`, over ℤ (`modulus = 0`) or 𝔽_p.
pub fn injectivity_rank(n: usize, d: usize, modulus: u64, budget: Budget) -> Result<InjectivityRank> {
    if n == 0 || d == 0 {
        return Err(Error::Bounds(format!("injectivity_rank({n},{d})")));
    }
    if !budget.admits(n, d) {
        return Err(Error::BudgetExceeded(format!(
            "n={n} d={d} exceeds n<={} d<={}",
            budget.max_n, budget.max_degree
        )));
    }
    Ok(rank_of_matrix(n, d, modulus, &theta_matrix(n, d)))
}

fn rank_of_matrix(n: usize, d: usize, modulus: u64, rows: &[Vec<i64>]) -> InjectivityRank {
    let domain_dim = rows.len();
    let (rank, unit_divisors) = if rows.is_empty() {
        (0, if modulus == 0 { Some(true) } else { None })
    } else if modulus == 0 {
        let rank = rank_over_z(rows);
        let units = smith_invariants(rows).iter().all(|x| *x == 1.into());
        (rank, Some(units))
    } else {
        (rank_mod_p(rows, modulus), None)
    };
    InjectivityRank {
        n,
        degree: d,
        modulus,
        domain_dim,
        rank,
        unit_divisors,
    }
}

/// `injectivity_rank` for every `n ≤ max_n`, `d ≤ max_degree` and modulus.
pub fn injectivity_sweep(budget: Budget, moduli: &[u64]) -> Result<(Report, Vec<InjectivityRank>)> {
    let mut rep = Report::new(format!(
        "injectivity of graded theta n<={} d<={}",
        budget.max_n, budget.max_degree
    ));
    let mut results = Vec::new();
    for n in 1..=budget.max_n {
        for d in 1..=budget.max_degree {
            let rows = theta_matrix(n, d);
            for &p in moduli {
                let r = rank_of_matrix(n, d, p, &rows);
                let inst = format!("n={n} d={d} mod={p} dim={} rank={}", r.domain_dim, r.rank);
                rep.record("monomorphism", &inst, r.is_injective());
                results.push(r);
            }
        }
    }
    Ok((rep, results))
}

/// The three sample values of `θ_3` in degree 4.
///
/// Item 1 is an exact equality. Items 2 and 3 are congruences modulo the span of
/// brackets of `Λ_3, γ_2(3), γ_3(3)` of length 4 containing `Λ_3` at least twice.
pub fn appendix_check() -> Report {
    let mut rep = Report::new("sample values of theta_3");
    let n = 3;
    let th = |first: usize, seq: &[usize]| theta_graded(n, &left_normed_free(n, first, seq).unwrap()).unwrap();
    let lg = |seq: &[usize]| lambda_gamma_bracket(n, seq).unwrap();
    let combo = |items: &[(i64, &[usize])]| {
        let mut out = KohnoElement::zero(n + 1);
        for (c, s) in items {
            out.add_scaled(*c, &lg(s)).unwrap();
        }
        out
    };

    let item1 = th(1, &[2, 2, 3]) == lg(&[3, 2, 2]);
    rep.record("item 1 exact", "[[[x1,x2],x2],x3] = [[[L,g3],g2],g2]", item1);

    let basis = coordinate_basis(n + 1, 4);
    let span = decomposable_rows(&basis);
    let item2 = th(1, &[2, 3, 2]).sub(&combo(&[(-1, &[2, 3, 2]), (2, &[3, 2, 2])])).unwrap();
    rep.record(
        "item 2 modulo decomposables",
        "[[[x1,x2],x3],x2] = -[[[L,g2],g3],g2] + 2[[[L,g3],g2],g2]",
        in_span(&span, &item2.coordinates(&basis)),
    );
    let item3 = th(1, &[3, 2, 2])
        .sub(&combo(&[(1, &[2, 2, 3]), (-2, &[2, 3, 2]), (2, &[3, 2, 2])]))
        .unwrap();
    rep.record(
        "item 3 modulo decomposables",
        "[[[x1,x3],x2],x2] = [[[L,g2],g2],g3] - 2[[[L,g2],g3],g2] + 2[[[L,g3],g2],g2]",
        in_span(&span, &item3.coordinates(&basis)),
    );
    for (name, first, seq) in [("item 2", 1, [2, 3, 2]), ("item 3", 1, [3, 2, 2])] {
        let h = h1_coefficients(n, &th(first, &seq)).unwrap();
        let text: Vec<String> = h.iter().map(|(k, v)| format!("{v}*{k:?}")).collect();
        rep.inform("Λ-linear coefficients", &format!("{name}: {}", text.join(" ")), true);
    }
    rep
}

/// Coordinate rows of the left-normed brackets of length 4 in `Λ_3, γ_2(3), γ_3(3)` with
/// at least two `Λ_3`.
fn decomposable_rows(basis: &[(usize, Vec<u8>)]) -> Vec<Vec<i64>> {
    let n = 3;
    let syms = [lambda(n).unwrap(), gamma(2, n).unwrap(), gamma(3, n).unwrap()];
    let mut rows = Vec::new();
    for seq in sequences(0, 2, 4) {
        if seq.iter().filter(|&&s| s == 0).count() < 2 {
            continue;
        }
        let mut acc = syms[seq[0]].clone();
        for &s in &seq[1..] {
            acc = acc.bracket(&syms[s]).unwrap();
        }
        let v = acc.coordinates(basis);
        if v.iter().any(|&x| x != 0) {
            rows.push(v);
        }
    }
    rows
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gradedlie::kohno::kohno_normalize;

    fn x(n: usize, i: usize) -> LieElement {
        LieElement::gen(Alphabet::Free(n), i).unwrap()
    }

    #[test]
    fn symbols() {
        assert_eq!(lambda(2).unwrap(), kohno_normalize("B[1,3] + B[2,3]", 3).unwrap());
        assert_eq!(gamma(2, 3).unwrap(), kohno_normalize("-B[3,4]", 4).unwrap());
        assert_eq!(gamma(3, 3).unwrap(), kohno_normalize("-(B[2,4] + B[3,4])", 4).unwrap());
        assert!(gamma(1, 3).is_err());
    }

    #[test]
    fn generator_images() {
        for n in 1..=4 {
            assert_eq!(theta_graded(n, &x(n, 1)).unwrap(), lambda(n).unwrap());
        }
        let want = kohno_normalize("B[1,3]+B[2,3]+B[1,4]+B[2,4]", 4).unwrap();
        assert_eq!(theta_graded(3, &x(3, 2)).unwrap(), want);
        assert_eq!(theta_graded(2, &x(3, 2)), Err(Error::AlphabetMismatch));
    }

    #[test]
    fn filtrations() {
        assert_eq!(filtration_d(&[2, 2, 3]), 0);
        assert_eq!(filtration_d(&[3, 2]), 1);
        assert_eq!(filtration_delta(&[3, 2]), 0);
        assert_eq!(filtration_delta(&[2, 3]), 1);
    }

    #[test]
    fn admissible_small() {
        assert!(admissible_bracket_check(3, &[2, 2, 3]).unwrap());
        assert!(admissible_bracket_check(2, &[2]).unwrap());
        assert!(admissible_bracket_check(3, &[]).unwrap());
        assert!(admissible_bracket_check(3, &[3, 2]).is_err());
    }

    #[test]
    fn ranks_small() {
        let r = injectivity_rank(2, 2, 0, Budget::SMOKE).unwrap();
        assert_eq!((r.domain_dim, r.rank), (1, 1));
        let r = injectivity_rank(3, 1, 0, Budget::SMOKE).unwrap();
        assert_eq!((r.domain_dim, r.rank), (3, 3));
        let r = injectivity_rank(3, 3, 2, Budget::SMOKE).unwrap();
        assert_eq!((r.domain_dim, r.rank), (8, 8));
        assert!(matches!(injectivity_rank(4, 4, 0, Budget::SMOKE), Err(Error::BudgetExceeded(_))));
    }

    #[test]
    fn identities_small() {
        for n in 1..=3 {
            let r = theta_identities_check(n);
            assert!(r.all_pass(), "{:?}", r.failures());
        }
        assert!(p_kernel_check(3, 3).all_pass());
        assert!(theta_simplicial_check(3, 3).all_pass());
    }
}
