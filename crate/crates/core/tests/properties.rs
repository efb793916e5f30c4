use std::collections::BTreeMap;

use braidlab::braid::{artin_action, braids_equal, is_trivial, BraidLetter, BraidWord};
use braidlab::garside::normal_form;
use braidlab::gradedlie::kohno::KohnoElement;
use braidlab::gradedlie::lie::{lyndon_words, Alphabet, LieElement, Terms};
use braidlab::gradedlie::theta::{free_face, graded_face, theta_graded};
use braidlab::holomorph::{hol_mul, HolElement};
use braidlab::reduced::{kn_embed, random_relation_word, sfs_mul};
use braidlab::simplicial::{
    ap_degeneracy, ap_face, fs1_degeneracy, fs1_face, moore_project, theta, Side,
};
use braidlab::words::{magnus_expand, Word};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn word(rank: u32, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec((1..=rank, prop_oneof![Just(-2), Just(-1), Just(1), Just(2)]), 0..max_len)
        .prop_map(Word::from_letters)
}

fn a_word(strands: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    let pairs: Vec<(usize, usize)> = (1..=strands).flat_map(|s| (1..s).map(move |r| (r, s))).collect();
    prop::collection::vec((prop::sample::select(pairs), prop_oneof![Just(-1), Just(1)]), 0..max_len).prop_map(
        move |ls| {
            let letters: Vec<(BraidLetter, i32)> = ls.into_iter().map(|((r, s), e)| (BraidLetter::A(r, s), e)).collect();
            BraidWord::new(strands, &letters).unwrap()
        },
    )
}

fn sigma_word(strands: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    prop::collection::vec((1..strands, prop_oneof![Just(-1), Just(1)]), 0..max_len).prop_map(move |ls| {
        let letters: Vec<(BraidLetter, i32)> = ls.into_iter().map(|(i, e)| (BraidLetter::Sigma(i), e)).collect();
        BraidWord::new(strands, &letters).unwrap()
    })
}

/// Integer combinations of Lyndon basis elements of degree `d` over three letters.
fn lie_element(d: usize) -> impl Strategy<Value = LieElement> {
    let basis = lyndon_words(3, d);
    prop::collection::vec(-3i64..=3, basis.len()).prop_map(move |cs| {
        let mut acc = LieElement::zero(Alphabet::Free(3));
        for (l, c) in basis.iter().zip(cs) {
            acc = acc.add(&LieElement::basis(Alphabet::Free(3), l).unwrap().scale(c)).unwrap();
        }
        acc
    })
}

/// Product of noncommutative polynomials, written independently of the library.
fn poly_mul(a: &Terms, b: &Terms) -> Terms {
    let mut out: Terms = BTreeMap::new();
    for (u, x) in a {
        for (v, y) in b {
            let key: Vec<u8> = u.iter().chain(v).copied().collect();
            *out.entry(key).or_insert(0) += x * y;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

fn poly_sub(a: &Terms, b: &Terms) -> Terms {
    let mut out = a.clone();
    for (k, c) in b {
        *out.entry(k.clone()).or_insert(0) -= c;
    }
    out.retain(|_, c| *c != 0);
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn word_group_laws(u in word(4, 12), v in word(4, 12), w in word(4, 12)) {
        prop_assert_eq!(u.mul(&v).mul(&w), u.mul(&v.mul(&w)));
        prop_assert!(u.mul(&u.inverse()).is_identity());
        prop_assert_eq!(u.mul(&v).inverse(), v.inverse().mul(&u.inverse()));
    }

    #[test]
    fn magnus_is_multiplicative(u in word(3, 8), v in word(3, 8)) {
        let lhs = magnus_expand(&u.mul(&v), 3, 4).unwrap();
        let rhs = magnus_expand(&u, 3, 4).unwrap().mul(&magnus_expand(&v, 3, 4).unwrap());
        prop_assert_eq!(lhs.terms(), rhs.terms());
    }

    #[test]
    fn lie_bracket_matches_commutator(a in lie_element(1), b in lie_element(2)) {
        let (pa, pb) = (a.to_associative(), b.to_associative());
        let want = poly_sub(&poly_mul(&pa, &pb), &poly_mul(&pb, &pa));
        prop_assert_eq!(a.bracket(&b).unwrap().to_associative(), want);
    }

    #[test]
    fn lie_jacobi(a in lie_element(1), b in lie_element(1), c in lie_element(2)) {
        let j = a.bracket(&b.bracket(&c).unwrap()).unwrap()
            .add(&b.bracket(&c.bracket(&a).unwrap()).unwrap()).unwrap()
            .add(&c.bracket(&a.bracket(&b).unwrap()).unwrap()).unwrap();
        prop_assert!(j.is_zero());
        prop_assert!(a.bracket(&b).unwrap().add(&b.bracket(&a).unwrap()).unwrap().is_zero());
    }

    #[test]
    fn kn_embed_is_multiplicative(u in word(4, 10), v in word(4, 10)) {
        let lhs = kn_embed(&u.mul(&v), 4).unwrap();
        let rhs = sfs_mul(&kn_embed(&u, 4).unwrap(), &kn_embed(&v, 4).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn kn_relations_die(seed in any::<u64>(), n in 1usize..=4, len in 0usize..6) {
        let w = random_relation_word(&mut ChaCha8Rng::seed_from_u64(seed), n, len);
        prop_assert!(kn_embed(&w, n).unwrap().is_one());
    }

    #[test]
    fn garside_form_matches_artin_action(u in sigma_word(4, 8), v in sigma_word(4, 8)) {
        let oracle = artin_action(&u) == artin_action(&v);
        prop_assert_eq!(braids_equal(&u, &v).unwrap(), oracle);
        prop_assert!(is_trivial(&u.mul(&u.inverse()).unwrap()));
        prop_assert_eq!(normal_form(&u.mul(&v).unwrap()) == normal_form(&v.mul(&u).unwrap()),
            artin_action(&u.mul(&v).unwrap()) == artin_action(&v.mul(&u).unwrap()));
    }

    #[test]
    fn ap_face_face(b in a_word(5, 8), i in 0usize..=4, j in 0usize..=4) {
        // d_i d_j = d_{j-1} d_i for i < j, on P_5 in degree 4.
        prop_assume!(i < j);
        let lhs = ap_face(3, i, &ap_face(4, j, &b).unwrap()).unwrap();
        let rhs = ap_face(3, j - 1, &ap_face(4, i, &b).unwrap()).unwrap();
        prop_assert!(braids_equal(&lhs, &rhs).unwrap());
    }

    #[test]
    fn ap_face_degeneracy(b in a_word(4, 8), i in 0usize..=4, j in 0usize..=3) {
        let up = ap_degeneracy(3, j, &b).unwrap();
        let down = ap_face(4, i, &up).unwrap();
        let want = if i == j || i == j + 1 {
            b.clone()
        } else if i < j {
            ap_degeneracy(2, j - 1, &ap_face(3, i, &b).unwrap()).unwrap()
        } else {
            ap_degeneracy(2, j, &ap_face(3, i - 1, &b).unwrap()).unwrap()
        };
        prop_assert!(braids_equal(&down, &want).unwrap());
    }

    #[test]
    fn theta_commutes_with_operators(w in word(3, 6), t in 0usize..=3) {
        let face = ap_face(3, t, &theta(3, &w).unwrap()).unwrap();
        prop_assert!(braids_equal(&face, &theta(2, &fs1_face(3, t, &w).unwrap()).unwrap()).unwrap());
        let degen = ap_degeneracy(3, t, &theta(3, &w).unwrap()).unwrap();
        prop_assert!(braids_equal(&degen, &theta(4, &fs1_degeneracy(3, t, &w).unwrap()).unwrap()).unwrap());
    }

    #[test]
    fn moore_projection_is_idempotent(b in a_word(4, 10), left in any::<bool>()) {
        let side = if left { Side::Left } else { Side::Right };
        let once = moore_project(3, &b, side).unwrap();
        for t in 1..=3 {
            prop_assert!(is_trivial(&ap_face(3, t, &once.element).unwrap()));
        }
        let twice = moore_project(3, &once.element, side).unwrap();
        prop_assert!(braids_equal(&once.element, &twice.element).unwrap());
    }

    #[test]
    fn holomorph_is_associative(
        f in sigma_word(3, 4), g in sigma_word(3, 4), h in sigma_word(3, 4),
        x in word(3, 4), y in word(3, 4), z in word(3, 4),
    ) {
        let a = HolElement::from_braid(&f, x).unwrap();
        let b = HolElement::from_braid(&g, y).unwrap();
        let c = HolElement::from_braid(&h, z).unwrap();
        let lhs = hol_mul(&hol_mul(&a, &b).unwrap(), &c).unwrap();
        let rhs = hol_mul(&a, &hol_mul(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(lhs.auto(), rhs.auto());
        prop_assert_eq!(lhs.elem(), rhs.elem());
        let e = hol_mul(&a, &a.inverse()).unwrap();
        prop_assert!(e.auto().is_identity() && e.elem().is_identity());
    }

    #[test]
    fn kohno_jacobi(i in 0usize..6, j in 0usize..6, k in 0usize..6) {
        let gens: Vec<KohnoElement> = [(1, 2), (1, 3), (2, 3), (1, 4), (2, 4), (3, 4)]
            .iter()
            .map(|&(r, s)| KohnoElement::gen(r, s, 4).unwrap())
            .collect();
        let (a, b, c) = (&gens[i], &gens[j], &gens[k]);
        let bc = b.bracket(c).unwrap();
        let j1 = a.bracket(&bc).unwrap();
        let j2 = b.bracket(&c.bracket(a).unwrap()).unwrap();
        let j3 = c.bracket(&a.bracket(b).unwrap()).unwrap();
        prop_assert!(j1.add(&j2).unwrap().add(&j3).unwrap().is_zero());
    }

    #[test]
    fn graded_theta_commutes_with_faces(a in lie_element(1), b in lie_element(2), t in 0usize..=3) {
        let x = a.bracket(&b).unwrap();
        let lhs = graded_face(3, t, &theta_graded(3, &x).unwrap()).unwrap();
        let rhs = theta_graded(2, &free_face(3, t, &x).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}
