//! Command-line entry point: `run(argv)` returns the exit status and the text to print.
//!
//! Exit status: 0 success, 1 verification failure, 2 parse error or bad
//! arguments, 3 budget exceeded.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::braid::{
    artin_action, braids_equal, conjugation_formula_check, verify_braid_relations,
    verify_pn_relations, BraidWord,
};
use crate::error::{Error, Result};
use crate::gradedlie::expr::lie_normalize;
use crate::gradedlie::kohno::{kohno_dim, kohno_normalize, kohno_relations_check, rank_consistency_check};
use crate::gradedlie::theta::{
    admissible_sequences, admissible_suite, appendix_check, injectivity_sweep,
    leading_coefficient_check, p_kernel_check, theta_graded, theta_identities_check,
    theta_simplicial_check, Budget,
};
use crate::holomorph::{chi_e_exchange_check, hol_mul, pullback_check, HolElement};
use crate::reduced::{kn_embed, kn_equal, kn_graded_rank, random_relation_word};
use crate::report::{CheckRecord, Report};
use crate::simplicial::{
    ap_relation_check, check_identities, is_moore_cycle, moore_project, psi_check, rho_check,
    theta, theta_morphism_check, Ap, FDelta1, Fs1, Ks1, OmegaAp, Side, SimplicialGroup,
};
use crate::words::{commutator_identity_check, hall_witt_check, random_word, Word};

#[derive(Parser, Debug)]
#[command(name = "braidlab", version, about = "Braid groups, simplicial groups and the Kohno Lie algebra")]
struct Cli {
    /// Prime modulus for mod-p checks (0 means the integers).
    #[arg(long = "mod", global = true, default_value_t = 0)]
    modulus: u64,
    /// Seed for every random sample.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Degree budget: smoke, standard or deep.
    #[arg(long, global = true, default_value = "standard")]
    budget: String,
    /// Write the JSON output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Braid words and the Artin action.
    #[command(subcommand)]
    Braid(BraidCmd),
    /// The holomorph of a free group.
    #[command(subcommand)]
    Hol(HolCmd),
    /// Reduced free groups.
    #[command(subcommand)]
    Kn(KnCmd),
    /// Simplicial groups.
    #[command(subcommand)]
    Simp(SimpCmd),
    /// Free Lie algebras.
    #[command(subcommand)]
    Lie(LieCmd),
    /// The Kohno Lie algebra.
    #[command(subcommand)]
    Kohno(KohnoCmd),
    /// The graded map theta.
    #[command(subcommand)]
    Theta(ThetaCmd),
    /// Sample values of theta_3.
    #[command(subcommand)]
    Appendix(AppendixCmd),
    /// Every suite.
    #[command(subcommand)]
    Verify(VerifyCmd),
}

#[derive(Subcommand, Debug)]
enum BraidCmd {
    /// Equality in B_n.
    Eq {
        u: String,
        v: String,
        #[arg(long)]
        n: usize,
    },
    /// Generator images under the Artin action.
    Act {
        b: String,
        #[arg(long)]
        n: usize,
    },
    /// Braid and pure braid relations.
    VerifyRelations {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Subcommand, Debug)]
enum HolCmd {
    /// Product (f,x)(g,y) with f, g given as braid words.
    Mul {
        f: String,
        x: String,
        g: String,
        y: String,
        #[arg(long)]
        n: usize,
    },
    /// Pullback and exchange-law checks.
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 50)]
        samples: usize,
    },
}

#[derive(Subcommand, Debug)]
enum KnCmd {
    /// Square-free Magnus normal form.
    Embed {
        w: String,
        #[arg(long)]
        n: usize,
    },
    /// Equality in K_n.
    Eq {
        u: String,
        v: String,
        #[arg(long)]
        n: usize,
    },
    /// Rank of the degree-t lower central series quotient.
    Rank {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        t: usize,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
#[value(rename_all = "UPPER")]
enum Family {
    Ap,
    Fs1,
    Fdelta1,
    Ks1,
    Omega,
}

#[derive(Args, Debug)]
struct OperatorArgs {
    #[arg(long, ignore_case = true)]
    family: Family,
    #[arg(long)]
    t: usize,
    /// Simplicial degree of the input.
    #[arg(long)]
    n: usize,
    element: String,
}

#[derive(Subcommand, Debug)]
enum SimpCmd {
    /// Face d_t.
    Face(OperatorArgs),
    /// Degeneracy s_t.
    Degen(OperatorArgs),
    /// Theta on a word of F[S^1]_n.
    Theta {
        #[arg(long)]
        n: usize,
        w: String,
    },
    /// Whether every face (or every face but d_0 with --chain) is trivial.
    Cycle {
        #[arg(long, ignore_case = true)]
        family: Family,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        chain: bool,
        element: String,
    },
    /// Moore chain representative of a pure braid in P_{n+1}.
    Project {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        left: bool,
        b: String,
    },
    /// Simplicial identities of one family.
    Verify {
        #[arg(long, ignore_case = true)]
        family: Family,
        #[arg(long)]
        max_degree: usize,
        #[arg(long, default_value_t = 20)]
        samples: usize,
    },
}

#[derive(Subcommand, Debug)]
enum LieCmd {
    /// Bracket of two expressions in x1..xn, in the Lyndon basis.
    Bracket {
        a: String,
        b: String,
        #[arg(long)]
        n: usize,
    },
}

#[derive(Subcommand, Debug)]
enum KohnoCmd {
    /// Normal form of an expression in B[i,j], L[n], G[q,n].
    Normalize {
        expr: String,
        #[arg(long)]
        k: usize,
    },
    /// Dimension of the degree-d part of L(P_k).
    Dim {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        deg: usize,
    },
}

#[derive(Subcommand, Debug)]
enum ThetaCmd {
    /// The graded image of an expression in x1..xn.
    Graded {
        expr: String,
        #[arg(long)]
        n: usize,
    },
    /// Identities, admissible sequences and injectivity ranks for one n.
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        max_degree: usize,
    },
}

#[derive(Subcommand, Debug)]
enum AppendixCmd {
    Check,
}

#[derive(Subcommand, Debug)]
enum VerifyCmd {
    /// Replays every suite at the chosen budget.
    All,
}

/// One suite of a `VerifyReport`.
#[derive(Clone, Debug, Serialize)]
pub struct SuiteSummary {
    pub name: String,
    pub checked: usize,
    pub failures: Vec<String>,
    /// Every record, for commands that ask for them.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub records: Option<Vec<CheckRecord>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub suites: Vec<SuiteSummary>,
    pub config: Value,
    pub pass: bool,
}

impl VerifyReport {
    fn new(reports: Vec<Report>, config: Value, with_records: bool) -> VerifyReport {
        let suites: Vec<SuiteSummary> = reports
            .into_iter()
            .map(|r| SuiteSummary {
                records: with_records.then(|| r.records.clone()),
                checked: r.checked(),
                failures: r
                    .failures()
                    .iter()
                    .map(|f| format!("{}: {}", f.check, f.instance))
                    .collect(),
                name: r.name,
            })
            .collect();
        let pass = suites.iter().all(|s| s.failures.is_empty());
        VerifyReport { suites, config, pass }
    }
}

enum Outcome {
    Value(Value),
    Verified(Value, bool),
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::BudgetExceeded(_) => 3,
        Error::Io(_) => 1,
        _ => 2,
    }
}

/// Parses `argv` (program name first) and runs the command.
pub fn run<I, T>(argv: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            return (code, e.to_string());
        }
    };
    let outcome = match dispatch(&cli) {
        Ok(o) => o,
        Err(e) => return (exit_code(&e), json!({ "error": e.to_string() }).to_string()),
    };
    let (value, code) = match outcome {
        Outcome::Value(v) => (v, 0),
        Outcome::Verified(v, pass) => (v, if pass { 0 } else { 1 }),
    };
    let text = serde_json::to_string_pretty(&value).expect("json values serialize");
    match &cli.out {
        Some(path) => match std::fs::write(path, &text) {
            Ok(()) => (code, String::new()),
            Err(e) => (1, json!({ "error": format!("{}: {e}", path.display()) }).to_string()),
        },
        None => (code, text),
    }
}

fn budget(cli: &Cli) -> Result<Budget> {
    Budget::named(&cli.budget).ok_or_else(|| Error::Parse(format!("unknown budget '{}'", cli.budget)))
}

fn word(text: &str, rank: usize) -> Result<Word> {
    let w: Word = text.parse()?;
    w.check_rank(rank)?;
    Ok(w)
}

fn report_outcome(reports: Vec<Report>, config: Value) -> Outcome {
    report_outcome_with(reports, config, false)
}

fn report_outcome_with(reports: Vec<Report>, config: Value, with_records: bool) -> Outcome {
    let v = VerifyReport::new(reports, config, with_records);
    let pass = v.pass;
    Outcome::Verified(serde_json::to_value(v).expect("serializable"), pass)
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

fn dispatch(cli: &Cli) -> Result<Outcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
    let config = json!({ "seed": cli.seed, "modulus": cli.modulus, "budget": cli.budget });
    Ok(match &cli.command {
        Command::Braid(BraidCmd::Eq { u, v, n }) => {
            Outcome::Value(json!(braids_equal(&BraidWord::parse(u, *n)?, &BraidWord::parse(v, *n)?)?))
        }
        Command::Braid(BraidCmd::Act { b, n }) => {
            let f = artin_action(&BraidWord::parse(b, *n)?);
            let images: Vec<String> = f.images().iter().map(|w| w.to_string()).collect();
            Outcome::Value(json!({ "braid": b, "images": images }))
        }
        Command::Braid(BraidCmd::VerifyRelations { n }) => {
            let mut reps = vec![verify_braid_relations(*n), verify_pn_relations(*n)];
            if *n >= 2 {
                reps.push(conjugation_formula_check(*n));
            }
            report_outcome(reps, config)
        }
        Command::Hol(HolCmd::Mul { f, x, g, y, n }) => {
            let a = HolElement::from_braid(&BraidWord::parse(f, *n)?, word(x, *n)?)?;
            let b = HolElement::from_braid(&BraidWord::parse(g, *n)?, word(y, *n)?)?;
            let p = hol_mul(&a, &b)?;
            let images: Vec<String> = p.auto().images().iter().map(|w| w.to_string()).collect();
            Outcome::Value(json!({ "auto": images, "elem": p.elem().to_string() }))
        }
        Command::Hol(HolCmd::Verify { n, samples }) => {
            let reps = vec![pullback_check(*n), chi_e_exchange_check(&mut rng, *n, *samples)];
            report_outcome(reps, config)
        }
        Command::Kn(KnCmd::Embed { w, n }) => {
            let s = kn_embed(&word(w, *n)?, *n)?;
            Outcome::Value(json!({ "text": s.to_string(), "terms": to_value(&s) }))
        }
        Command::Kn(KnCmd::Eq { u, v, n }) => Outcome::Value(json!(kn_equal(&word(u, *n)?, &word(v, *n)?, *n)?)),
        Command::Kn(KnCmd::Rank { n, t }) => Outcome::Value(json!(kn_graded_rank(*n, *t)?)),
        Command::Simp(SimpCmd::Face(a)) => Outcome::Value(operator(a, true)?),
        Command::Simp(SimpCmd::Degen(a)) => Outcome::Value(operator(a, false)?),
        Command::Simp(SimpCmd::Theta { n, w }) => {
            let b = theta(*n, &word(w, *n)?)?;
            Outcome::Value(json!({ "braid": b.to_string() }))
        }
        Command::Simp(SimpCmd::Cycle { family, n, chain, element }) => {
            Outcome::Value(json!(cycle(*family, *n, *chain, element)?))
        }
        Command::Simp(SimpCmd::Project { n, left, b }) => {
            let side = if *left { Side::Left } else { Side::Right };
            let ch = moore_project(*n, &BraidWord::parse(b, *n + 1)?, side)?;
            Outcome::Value(to_value(&ch))
        }
        Command::Simp(SimpCmd::Verify { family, max_degree, samples }) => {
            report_outcome_with(family_suite(*family, *max_degree, *samples, &mut rng), config, true)
        }
        Command::Lie(LieCmd::Bracket { a, b, n }) => {
            let mut e = lie_normalize(a, *n)?.bracket(&lie_normalize(b, *n)?)?;
            if cli.modulus > 0 {
                e = e.reduce_mod(cli.modulus as i64);
            }
            Outcome::Value(json!({ "text": e.to_string(), "element": to_value(&e) }))
        }
        Command::Kohno(KohnoCmd::Normalize { expr, k }) => {
            let mut e = kohno_normalize(expr, *k)?;
            if cli.modulus > 0 {
                e = e.reduce_mod(cli.modulus as i64);
            }
            Outcome::Value(json!({ "text": e.to_string(), "element": to_value(&e) }))
        }
        Command::Kohno(KohnoCmd::Dim { k, deg }) => Outcome::Value(json!(kohno_dim(*k, *deg))),
        Command::Theta(ThetaCmd::Graded { expr, n }) => {
            let e = theta_graded(*n, &lie_normalize(expr, *n)?)?;
            Outcome::Value(json!({ "text": e.to_string(), "element": to_value(&e) }))
        }
        Command::Theta(ThetaCmd::Verify { n, max_degree }) => {
            let bud = budget(cli)?;
            if !bud.admits(*n, *max_degree) {
                return Err(Error::BudgetExceeded(format!(
                    "n={n} d={max_degree} exceeds budget '{}'",
                    cli.budget
                )));
            }
            let mut reps = vec![theta_identities_check(*n)];
            let mut adm = Report::new(format!("admissible sequences n={n}"));
            for q in 0..*max_degree {
                for seq in admissible_sequences(2, *n, q) {
                    let ok = crate::gradedlie::theta::admissible_bracket_check(*n, &seq)?;
                    adm.record("admissible", &format!("seq={seq:?}"), ok);
                }
            }
            reps.push(adm);
            let moduli = if cli.modulus == 0 { vec![0] } else { vec![cli.modulus] };
            let local = Budget { max_n: *n, max_degree: *max_degree };
            let (mut inj, _) = injectivity_sweep(local, &moduli)?;
            inj.records.retain(|r| r.instance.starts_with(&format!("n={n} ")));
            reps.push(inj);
            report_outcome(reps, config)
        }
        Command::Appendix(AppendixCmd::Check) => {
            let rep = appendix_check();
            let pass = rep.all_pass();
            Outcome::Verified(to_value(&rep), pass)
        }
        Command::Verify(VerifyCmd::All) => {
            let bud = budget(cli)?;
            let reps = verify_all(bud, cli.modulus, &mut rng)?;
            let config = json!({
                "seed": cli.seed,
                "budget": cli.budget,
                "max_n": bud.max_n,
                "max_degree": bud.max_degree,
                "moduli": moduli_for(cli.modulus),
            });
            report_outcome(reps, config)
        }
    })
}

fn operator(a: &OperatorArgs, face: bool) -> Result<Value> {
    let (n, t) = (a.n, a.t);
    let text = |s: String| Ok(json!({ "result": s }));
    match a.family {
        Family::Ap => {
            let g = Ap::default();
            let x = BraidWord::parse(&a.element, n + 1)?;
            text(if face { g.face(n, t, &x)? } else { g.degeneracy(n, t, &x)? }.to_string())
        }
        Family::Omega => {
            let g = OmegaAp::default();
            let x = BraidWord::parse(&a.element, n + 2)?;
            text(if face { g.face(n, t, &x)? } else { g.degeneracy(n, t, &x)? }.to_string())
        }
        Family::Fs1 => {
            let g = Fs1::default();
            let x = word(&a.element, n)?;
            text(if face { g.face(n, t, &x)? } else { g.degeneracy(n, t, &x)? }.to_string())
        }
        Family::Fdelta1 => {
            let g = FDelta1::default();
            let x = word(&a.element, n + 1)?;
            text(if face { g.face(n, t, &x)? } else { g.degeneracy(n, t, &x)? }.to_string())
        }
        Family::Ks1 => {
            let g = Ks1::default();
            let x = kn_embed(&word(&a.element, n)?, n)?;
            let y = if face { g.face(n, t, &x)? } else { g.degeneracy(n, t, &x)? };
            Ok(json!({ "result": y.to_string(), "terms": to_value(&y) }))
        }
    }
}

fn cycle(family: Family, n: usize, chain: bool, element: &str) -> Result<bool> {
    match family {
        Family::Ap => is_moore_cycle(&Ap::default(), n, &BraidWord::parse(element, n + 1)?, chain),
        Family::Omega => is_moore_cycle(&OmegaAp::default(), n, &BraidWord::parse(element, n + 2)?, chain),
        Family::Fs1 => is_moore_cycle(&Fs1::default(), n, &word(element, n)?, chain),
        Family::Fdelta1 => is_moore_cycle(&FDelta1::default(), n, &word(element, n + 1)?, chain),
        Family::Ks1 => is_moore_cycle(&Ks1::default(), n, &kn_embed(&word(element, n)?, n)?, chain),
    }
}

fn family_suite(family: Family, max_degree: usize, samples: usize, rng: &mut ChaCha8Rng) -> Vec<Report> {
    match family {
        Family::Ap => vec![
            check_identities(&Ap { random_len: 4 }, max_degree, samples, rng),
            ap_relation_check(max_degree),
            theta_morphism_check(max_degree, samples, rng),
        ],
        Family::Fs1 => vec![check_identities(&Fs1 { random_len: 6 }, max_degree, samples, rng)],
        Family::Fdelta1 => vec![
            check_identities(&FDelta1 { random_len: 6 }, max_degree, samples, rng),
            psi_check(max_degree, samples, rng),
        ],
        Family::Ks1 => vec![
            check_identities(&Ks1 { random_len: 6 }, max_degree, samples, rng),
            rho_check(max_degree, samples, rng),
        ],
        Family::Omega => vec![check_identities(&OmegaAp { random_len: 4 }, max_degree, samples, rng)],
    }
}

fn moduli_for(extra: u64) -> Vec<u64> {
    let mut m = vec![0, 2, 3, 5];
    if extra > 0 && !m.contains(&extra) {
        m.push(extra);
    }
    m
}

/// Sizes derived from a budget.
struct Scale {
    braid_n: usize,
    ap_degree: usize,
    free_degree: usize,
    samples: usize,
    kohno_k: usize,
    kohno_rank_k: usize,
    kohno_rank_d: usize,
    theta_n: usize,
    admissible_q: usize,
}

impl Scale {
    fn of(b: Budget) -> Scale {
        if b == Budget::SMOKE {
            Scale {
                braid_n: 4,
                ap_degree: 3,
                free_degree: 4,
                samples: 10,
                kohno_k: 4,
                kohno_rank_k: 4,
                kohno_rank_d: 3,
                theta_n: 3,
                admissible_q: 3,
            }
        } else {
            Scale {
                braid_n: 6,
                ap_degree: b.max_n + 1,
                free_degree: 6,
                samples: 100,
                kohno_k: 6,
                kohno_rank_k: 5,
                kohno_rank_d: 4,
                theta_n: b.max_n + 1,
                admissible_q: 4,
            }
        }
    }
}

/// Every suite at the given budget.
pub fn verify_all(budget: Budget, modulus: u64, rng: &mut ChaCha8Rng) -> Result<Vec<Report>> {
    let s = Scale::of(budget);
    let mut reps = Vec::new();

    let mut words = Report::new("Hall identities and the commutator identity");
    for k in 0..100 {
        let (la, lb, lc) = (rng.gen_range(0..=8), rng.gen_range(0..=8), rng.gen_range(0..=8));
        let (a, b, c) = (random_word(rng, 4, la), random_word(rng, 4, lb), random_word(rng, 4, lc));
        for (i, ok) in hall_witt_check(&a, &b, &c).iter().enumerate() {
            words.record(&format!("Hall item {}", i + 1), &format!("sample {k}"), *ok);
        }
        words.record("commutator identity", &format!("sample {k}"), commutator_identity_check(&a, &b, &c));
    }
    reps.push(words);

    for n in 2..=s.braid_n {
        reps.push(verify_braid_relations(n));
        reps.push(verify_pn_relations(n));
    }
    for n in 2..=4 {
        reps.push(conjugation_formula_check(n));
        reps.push(pullback_check(n));
    }
    reps.push(chi_e_exchange_check(rng, 3, 50));

    let mut kn = Report::new("reduced free groups");
    for n in 1..=5 {
        for t in 1..=n {
            let want: usize = binomial(n, t) * (1..t).product::<usize>();
            kn.record("graded rank", &format!("n={n} t={t}"), kn_graded_rank(n, t)? == want);
        }
    }
    for k in 0..500 {
        let n = rng.gen_range(1..=4);
        let len = rng.gen_range(0..=6);
        let w = random_relation_word(rng, n, len);
        kn.record("relation dies", &format!("sample {k} n={n}"), kn_embed(&w, n)?.is_one());
    }
    reps.push(kn);
    reps.push(rho_check(3, s.samples.min(20), rng));

    reps.push(check_identities(&Ap { random_len: 4 }, s.ap_degree, s.samples, rng));
    reps.push(check_identities(&Fs1 { random_len: 6 }, s.free_degree, s.samples, rng));
    reps.push(check_identities(&FDelta1 { random_len: 6 }, s.free_degree, s.samples, rng));
    reps.push(check_identities(&Ks1 { random_len: 6 }, s.free_degree, s.samples, rng));
    reps.push(check_identities(&OmegaAp { random_len: 4 }, s.ap_degree.min(4), s.samples.min(20), rng));
    reps.push(ap_relation_check(s.ap_degree));
    reps.push(theta_morphism_check(s.ap_degree, s.samples.min(20), rng));
    reps.push(psi_check(4, s.samples.min(20), rng));
    reps.push(moore_suite(s.ap_degree.min(4), s.samples, rng));

    reps.push(kohno_relations_check(s.kohno_k, 0));
    if modulus > 0 {
        reps.push(kohno_relations_check(s.kohno_k, modulus));
    }
    reps.push(rank_consistency_check(s.kohno_rank_k, s.kohno_rank_d));
    for n in 1..=s.theta_n.min(5) {
        reps.push(theta_identities_check(n));
    }
    reps.push(admissible_suite(budget.max_n, s.admissible_q));
    reps.push(leading_coefficient_check(3, 3));
    reps.push(p_kernel_check(budget.max_n, budget.max_degree.min(5)));
    reps.push(theta_simplicial_check(budget.max_n.min(3), budget.max_degree.min(4)));
    let (inj, _) = injectivity_sweep(budget, &moduli_for(modulus))?;
    reps.push(inj);
    reps.push(appendix_check());
    Ok(reps)
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// `[x_1,x_2]` is a cycle with a cycle image, and `moore_project` is face-killing
/// and idempotent on random pure braids.
pub fn moore_suite(max_degree: usize, samples: usize, rng: &mut ChaCha8Rng) -> Report {
    let mut rep = Report::new(format!("Moore chains, degrees <= {max_degree}"));
    let c = word("x1^-1 x2^-1 x1 x2", 2).expect("valid word");
    let fs = Fs1::default();
    for t in 0..=2 {
        rep.record("[x1,x2] face trivial", &format!("t={t}"), fs.face(2, t, &c).expect("face").is_identity());
    }
    let tc = theta(2, &c).expect("rank 2");
    rep.record("theta([x1,x2]) is a cycle", "degree 2", is_moore_cycle(&Ap::default(), 2, &tc, false).unwrap());
    let ap = Ap { random_len: 6 };
    for n in 1..=max_degree {
        for k in 0..samples {
            let g = ap.random(n, rng);
            for side in [Side::Right, Side::Left] {
                let inst = format!("deg {n} sample {k} {side:?}");
                let ch = moore_project(n, &g, side).expect("pure");
                rep.record("chain", &inst, is_moore_cycle(&ap, n, &ch.element, true).unwrap());
                let again = moore_project(n, &ch.element, side).expect("pure");
                rep.record("idempotent", &inst, braids_equal(&again.element, &ch.element).unwrap());
            }
        }
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String) {
        let mut v = vec!["braidlab"];
        v.extend_from_slice(args);
        run(v)
    }

    #[test]
    fn braid_eq() {
        assert_eq!(call(&["braid", "eq", "s1 s2 s1", "s2 s1 s2", "--n", "3"]), (0, "true".into()));
        assert_eq!(call(&["braid", "eq", "s1", "s1^-1", "--n", "2"]), (0, "false".into()));
    }

    #[test]
    fn kohno_dim_prints_number() {
        assert_eq!(call(&["kohno", "dim", "--k", "4", "--deg", "2"]), (0, "4".into()));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(call(&["frobnicate"]).0, 2);
        assert_eq!(call(&["braid", "eq", "s9", "s1", "--n", "3"]).0, 2);
        assert_eq!(call(&["theta", "verify", "--n", "5", "--max-degree", "6"]).0, 3);
        assert_eq!(call(&["--help"]).0, 0);
    }
}
