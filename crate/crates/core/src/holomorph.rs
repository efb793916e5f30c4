//! The holomorph `Hol(F_n)` and its representation in `Aut(F_n ∗ 𝔽_m)`.
//!
//! The free product is modelled as one free group: `x_1..x_n` are the `F_n`
//! generators and `x_{n+1}..x_{n+m}` the `𝔽_m` generators. With automorphisms
//! composed as functions, `χ(h)` conjugates `𝔽` generators as `z ↦ h^{-1} z h`,
//! which makes `E(f,h) = e(f) ∘ χ(h)` multiplicative for the product
//! `(f,x)(g,y) = (f∘g, g^{-1}(x) y)`.

use rand::Rng;

use crate::braid::{
    artin_action, braids_equal, random_braid, word_to_a_letters, BraidWord, FreeAutomorphism,
};
use crate::error::{Error, Result};
use crate::report::Report;
use crate::words::{random_word, Word};

/// `(f, x)` with `f` an automorphism carrying its inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HolElement {
    auto: FreeAutomorphism,
    inverse: FreeAutomorphism,
    elem: Word,
}

impl HolElement {
    pub fn identity(rank: usize) -> HolElement {
        HolElement {
            auto: FreeAutomorphism::identity(rank),
            inverse: FreeAutomorphism::identity(rank),
            elem: Word::identity(),
        }
    }

    /// `(A(b), x)` for a braid word `b` on `rank` strands.
    pub fn from_braid(b: &BraidWord, x: Word) -> Result<HolElement> {
        x.check_rank(b.strands())?;
        Ok(HolElement {
            auto: artin_action(b),
            inverse: artin_action(&b.inverse()),
            elem: x,
        })
    }

    pub fn rank(&self) -> usize {
        self.auto.rank()
    }

    pub fn auto(&self) -> &FreeAutomorphism {
        &self.auto
    }

    pub fn inverse_auto(&self) -> &FreeAutomorphism {
        &self.inverse
    }

    pub fn elem(&self) -> &Word {
        &self.elem
    }

    /// `(f^{-1}, f(x)^{-1})`.
    pub fn inverse(&self) -> HolElement {
        HolElement {
            auto: self.inverse.clone(),
            inverse: self.auto.clone(),
            elem: self.auto.apply(&self.elem).inverse(),
        }
    }
}

/// `(f,x)(g,y) = (f∘g, g^{-1}(x) y)`.
pub fn hol_mul(a: &HolElement, b: &HolElement) -> Result<HolElement> {
    if a.rank() != b.rank() {
        return Err(Error::RankMismatch(a.rank(), b.rank()));
    }
    Ok(HolElement {
        auto: a.auto.compose(&b.auto)?,
        inverse: b.inverse.compose(&a.inverse)?,
        elem: b.inverse.apply(&a.elem).mul(&b.elem),
    })
}

/// `e(f)`: `f` on the first block, identity on the `m` extra generators.
pub fn e_of(f: &FreeAutomorphism, m: usize) -> FreeAutomorphism {
    let n = f.rank();
    let mut images = f.images().to_vec();
    images.extend((n + 1..=n + m).map(|g| Word::gen(g as u32)));
    FreeAutomorphism::from_images(images).expect("ranks agree")
}

/// `χ(h)`: fixes the first block, `z ↦ h^{-1} z h` on the extra generators.
pub fn chi(h: &Word, n: usize, m: usize) -> FreeAutomorphism {
    let mut images: Vec<Word> = (1..=n).map(|g| Word::gen(g as u32)).collect();
    images.extend((n + 1..=n + m).map(|g| Word::gen(g as u32).conj(h)));
    FreeAutomorphism::from_images(images).expect("ranks agree")
}

/// `E(f,h) = e(f) ∘ χ(h)` on `F_n ∗ 𝔽_m`.
pub fn e_embed(h: &HolElement, m: usize) -> FreeAutomorphism {
    e_of(&h.auto, m)
        .compose(&chi(&h.elem, h.rank(), m))
        .expect("ranks agree")
}

/// Conjugating `A_{j,n+1}` by `A_{r,s}` in `P_{n+1}` agrees with the holomorph
/// product `(f,1)^{-1}(1,x_j)(f,1) = (1, f^{-1}(x_j))` for `f = A(A_{r,s})`.
pub fn pullback_check(n: usize) -> Report {
    let mut rep = Report::new(format!("pullback n={n}"));
    for r in 1..=n {
        for s in r + 1..=n {
            let ars = BraidWord::agen(r, s, 1, n).expect("in range");
            let f = HolElement::from_braid(&ars, Word::identity()).expect("rank");
            let conj_by = BraidWord::agen(r, s, 1, n + 1).expect("in range");
            let direct = artin_action(&ars.inverse());
            for j in 1..=n {
                let inst = format!("(r,s)=({r},{s}) j={j}");
                let y = HolElement {
                    elem: Word::gen(j as u32),
                    ..HolElement::identity(n)
                };
                let prod = hol_mul(&hol_mul(&f.inverse(), &y).unwrap(), &f).unwrap();
                let hol_ok = prod.auto.is_identity() && prod.elem == *direct.image(j as u32);
                let lhs = BraidWord::agen(j, n + 1, 1, n + 1)
                    .expect("in range")
                    .conj_braid(&conj_by);
                let rhs = word_to_a_letters(&prod.elem, n);
                let ok = hol_ok && braids_equal(&lhs, &rhs).expect("same strands");
                rep.record("pullback", &inst, ok);
            }
        }
    }
    rep
}

/// The exchange law `χ(h)∘e(f) = e(f)∘χ(f^{-1}(h))` and
/// `e(f^{-1})∘χ(h)∘e(f) = χ(f^{-1}(h))` on random samples in rank `n`.
pub fn chi_e_exchange_check<R: Rng + ?Sized>(rng: &mut R, n: usize, samples: usize) -> Report {
    let mut rep = Report::new(format!("exchange law n={n}"));
    for k in 0..samples {
        let blen = rng.gen_range(0..=4);
        let b = random_braid(rng, n, blen);
        let hlen = rng.gen_range(0..=5);
        let h = random_word(rng, n, hlen);
        let f = artin_action(&b);
        let finv = artin_action(&b.inverse());
        let fh = finv.apply(&h);
        let lhs = chi(&h, n, 1).compose(&e_of(&f, 1)).unwrap();
        let rhs = e_of(&f, 1).compose(&chi(&fh, n, 1)).unwrap();
        let inst = format!("sample {k}: f={b} h={h}");
        rep.record("exchange", &inst, lhs == rhs);
        let conj = e_of(&finv, 1).compose(&chi(&h, n, 1)).unwrap().compose(&e_of(&f, 1)).unwrap();
        rep.record("conjugate chi", &inst, conj == chi(&fh, n, 1));
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn elem(n: usize, x: &str) -> HolElement {
        HolElement::from_braid(&BraidWord::identity(n), w(x)).unwrap()
    }

    #[test]
    fn product_examples() {
        let p = hol_mul(&elem(2, "x1"), &elem(2, "x2")).unwrap();
        assert_eq!(p.elem(), &w("x1 x2"));
        assert!(p.auto().is_identity());

        let f = HolElement::from_braid(&BraidWord::parse("s1 s2^-1", 3).unwrap(), w("")).unwrap();
        let y = elem(3, "x1 x3^2");
        let c = hol_mul(&hol_mul(&f.inverse(), &y).unwrap(), &f).unwrap();
        assert!(c.auto().is_identity());
        assert_eq!(c.elem(), &f.inverse_auto().apply(&w("x1 x3^2")));

        let g = HolElement::from_braid(&BraidWord::parse("s1 s2", 3).unwrap(), w("x2 x1^-1")).unwrap();
        let one = hol_mul(&g, &g.inverse()).unwrap();
        assert_eq!(one, HolElement::identity(3));
        assert!(hol_mul(&g, &elem(2, "x1")).is_err());
    }

    #[test]
    fn embedding_examples() {
        assert!(e_embed(&HolElement::identity(2), 1).is_identity());
        let f = HolElement::from_braid(&BraidWord::parse("s1", 2).unwrap(), w("")).unwrap();
        let e = e_embed(&f, 2);
        assert_eq!(e.image(3), &w("x3"));
        assert_eq!(e.image(4), &w("x4"));
        assert_eq!(e.image(1), &w("x2"));
    }

    #[test]
    fn exchange_single() {
        let f = artin_action(&BraidWord::parse("s1", 2).unwrap());
        let finv = artin_action(&BraidWord::parse("s1^-1", 2).unwrap());
        let h = w("x1");
        let lhs = chi(&h, 2, 1).compose(&e_of(&f, 1)).unwrap();
        let rhs = e_of(&f, 1).compose(&chi(&finv.apply(&h), 2, 1)).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn pullback_small() {
        let r = pullback_check(2);
        assert_eq!(r.checked(), 2);
        assert!(r.all_pass());
    }
}
