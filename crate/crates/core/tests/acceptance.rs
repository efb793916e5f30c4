//! Acceptance criteria. Prints one PASS/FAIL line per criterion and fails if any criterion fails.

use std::time::{Duration, Instant};

use braidlab::braid::{braids_equal, conjugation_formula_check, verify_braid_relations, verify_pn_relations, BraidWord};
use braidlab::cli::moore_suite;
use braidlab::gradedlie::kohno::{kohno_dim, kohno_relations_check, rank_consistency_check};
use braidlab::gradedlie::theta::{
    admissible_suite, appendix_check, injectivity_sweep, leading_coefficient_check, theta_identities_check, Budget,
};
use braidlab::holomorph::pullback_check;
use braidlab::reduced::{kn_embed, kn_graded_rank, random_relation_word};
use braidlab::report::Report;
use braidlab::simplicial::{
    check_identities, psi_check, rho_check, theta, theta_generator, theta_morphism_check, Ap, FDelta1, Fs1, Ks1,
};
use braidlab::words::{commutator_identity_check, hall_witt_check, random_word, Word};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Outcome {
    pass: bool,
    detail: String,
}

fn summarize(reports: &[Report]) -> Outcome {
    let checked: usize = reports.iter().map(Report::checked).sum();
    let failures: Vec<String> = reports
        .iter()
        .flat_map(|r| r.failures().into_iter().map(move |f| format!("{} / {}: {}", r.name, f.check, f.instance)))
        .collect();
    Outcome {
        pass: checked > 0 && failures.is_empty(),
        detail: if failures.is_empty() {
            format!("{checked} instances")
        } else {
            format!("{checked} instances, {} failures, first: {}", failures.len(), failures[0])
        },
    }
}

fn with(mut o: Outcome, ok: bool, what: &str) -> Outcome {
    if !ok {
        o.pass = false;
        o.detail = format!("{}; {what} failed", o.detail);
    }
    o
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Lyndon words of length `d` over `k` letters, by brute force over all words.
fn lyndon_count(k: usize, d: usize) -> usize {
    let total = k.pow(d as u32);
    (0..total)
        .filter(|&code| {
            let w: Vec<usize> = (0..d).map(|i| code / k.pow(i as u32) % k).rev().collect();
            (1..d).all(|r| {
                let rot: Vec<usize> = w[r..].iter().chain(&w[..r]).copied().collect();
                w < rot
            })
        })
        .count()
}

fn braid_relations() -> Outcome {
    let start = Instant::now();
    let mut reps = Vec::new();
    for n in 2..=6 {
        reps.push(verify_braid_relations(n));
        reps.push(verify_pn_relations(n));
    }
    let o = summarize(&reps);
    with(o, start.elapsed() < Duration::from_secs(60), "runtime under 60 s")
}

fn faithfulness() -> Outcome {
    let reps: Vec<Report> = (2..=4).flat_map(|n| [conjugation_formula_check(n), pullback_check(n)]).collect();
    summarize(&reps)
}

fn simplicial_identities() -> Outcome {
    let mut r = rng(3);
    summarize(&[
        check_identities(&Ap { random_len: 4 }, 5, 100, &mut r),
        check_identities(&Fs1 { random_len: 6 }, 6, 100, &mut r),
        check_identities(&FDelta1 { random_len: 6 }, 6, 100, &mut r),
        check_identities(&Ks1 { random_len: 6 }, 6, 100, &mut r),
    ])
}

fn theta_morphism() -> Outcome {
    let mut r = rng(4);
    let o = summarize(&[theta_morphism_check(5, 20, &mut r)]);
    let a12 = BraidWord::parse("A[1,2]", 2).unwrap();
    let first = braids_equal(&theta(1, &Word::gen(1)).unwrap(), &a12).unwrap();
    let o = with(o, first, "theta(x1) = A[1,2]");
    let pinned = [(1, "A[1,3] A[2,3]"), (2, "A[1,2] A[1,3]")];
    let ok = pinned.iter().all(|(q, text)| {
        let want = BraidWord::parse(text, 3).unwrap();
        braids_equal(&theta(2, &Word::gen(*q)).unwrap(), &want).unwrap()
            && braids_equal(&theta_generator(*q as usize, 2).unwrap(), &want).unwrap()
    });
    with(o, ok, "degree 2 generator images")
}

fn looping() -> Outcome {
    summarize(&[psi_check(4, 20, &mut rng(5))])
}

fn moore_cycle() -> Outcome {
    summarize(&[moore_suite(4, 100, &mut rng(6))])
}

fn kohno_algebra() -> Outcome {
    let o = summarize(&[kohno_relations_check(6, 0), rank_consistency_check(5, 4)]);
    // dim L(P_k)_d is the sum over the free factors of rank 1..k-1.
    let oracle = |k: usize, d: usize| (1..k).map(|m| lyndon_count(m, d)).sum::<usize>();
    let mut ok = kohno_dim(4, 2) == 4;
    for k in 2..=5 {
        for d in 1..=4 {
            ok &= kohno_dim(k, d) == oracle(k, d);
        }
    }
    with(o, ok, "dimension oracle")
}

fn graded_theta() -> Outcome {
    let mut reps: Vec<Report> = (1..=5).map(theta_identities_check).collect();
    reps.push(admissible_suite(4, 4));
    reps.push(leading_coefficient_check(3, 3));
    summarize(&reps)
}

fn injectivity() -> Outcome {
    let start = Instant::now();
    let (rep, ranks) = injectivity_sweep(Budget::STANDARD, &[0, 2, 3, 5]).unwrap();
    let o = summarize(&[rep]);
    let all = ranks.iter().all(|r| r.is_injective());
    let covered = (1..=4).all(|n| {
        (1..=5).all(|d| [0u64, 2, 3, 5].iter().all(|m| ranks.iter().any(|r| r.n == n && r.degree == d && r.modulus == *m)))
    });
    let sample = ranks
        .iter()
        .find(|r| r.n == 3 && r.degree == 3 && r.modulus == 0)
        .is_some_and(|r| r.domain_dim == lyndon_count(3, 3) && r.domain_dim == 8 && r.rank == 8);
    let o = with(o, all, "every rank injective");
    let o = with(o, covered, "sweep covers n <= 4, d <= 5, all moduli");
    let o = with(o, sample, "n=3 d=3 domain 8 rank 8");
    with(o, start.elapsed() < Duration::from_secs(600), "runtime under 10 min")
}

fn appendix() -> Outcome {
    summarize(&[appendix_check()])
}

fn reduced_free_groups() -> Outcome {
    let mut rep = Report::new("reduced free groups");
    rep.record("rank", "n=3 t=2", kn_graded_rank(3, 2).unwrap() == 3);
    rep.record("rank", "n=3 t=3", kn_graded_rank(3, 3).unwrap() == 2);
    for n in 1..=5usize {
        let fact: usize = (1..n).product();
        rep.record("top rank", &format!("n={n}"), kn_graded_rank(n, n).unwrap() == fact);
    }
    let mut r = rng(11);
    for k in 0..500 {
        let n = r.gen_range(1..=4);
        let len = r.gen_range(0..=6);
        let w = random_relation_word(&mut r, n, len);
        rep.record("relation dies", &format!("sample {k}"), kn_embed(&w, n).unwrap().is_one());
    }
    summarize(&[rep, rho_check(3, 20, &mut r)])
}

fn identity_suites() -> Outcome {
    let mut rep = Report::new("commutator identities");
    let mut r = rng(12);
    for k in 0..100 {
        let mut w = || {
            let len = r.gen_range(0..=8);
            random_word(&mut r, 4, len)
        };
        let (a, b, c) = (w(), w(), w());
        for (i, ok) in hall_witt_check(&a, &b, &c).iter().enumerate() {
            rep.record(&format!("Hall {}", i + 1), &format!("triple {k}"), *ok);
        }
        let (x, y, v) = (w(), w(), w());
        rep.record("commutator identity", &format!("triple {k}"), commutator_identity_check(&x, &y, &v));
    }
    summarize(&[rep])
}

#[test]
fn acceptance() {
    let criteria: Vec<(&str, fn() -> Outcome)> = vec![
        ("braid relations", braid_relations),
        ("faithfulness plumbing", faithfulness),
        ("simplicial identities", simplicial_identities),
        ("theta is a simplicial morphism", theta_morphism),
        ("looping", looping),
        ("Moore cycle", moore_cycle),
        ("Kohno algebra", kohno_algebra),
        ("graded theta", graded_theta),
        ("injectivity", injectivity),
        ("appendix", appendix),
        ("reduced free groups", reduced_free_groups),
        ("identity suites", identity_suites),
    ];
    let mut failed = Vec::new();
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let o = f();
        let tag = if o.pass { "PASS" } else { "FAIL" };
        println!("{tag} {:>2} {name}: {} ({:.1}s)", i + 1, o.detail, start.elapsed().as_secs_f64());
        if !o.pass {
            failed.push(i + 1);
        }
    }
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
}
