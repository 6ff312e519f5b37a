//! Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
//! criterion fails.

mod common;

use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use common::brute_nat_count;
use rand::seq::SliceRandom;
use rand::Rng;
use yoneda_core::adjoint;
use yoneda_core::basecat::Base;
use yoneda_core::coherence::coherence_sweep;
use yoneda_core::fincat::fixtures;
use yoneda_core::funcat::{map_functors, unit_functor, verify_closed_module};
use yoneda_core::samples::{enumerate_functors, random_functors, rng};
use yoneda_core::suites::{kan_functors, run_all, SweepConfig};
use yoneda_core::yoneda;
use yoneda_core::{Error, FinCat, FinSet, FinVect, MFunctor, Report, SetFunctor};

const SEED: u64 = 20240;

type Criterion = (&'static str, fn() -> Verdict);

struct Verdict {
    passed: bool,
    detail: String,
}

fn verdict(passed: bool, detail: impl Into<String>) -> Verdict {
    Verdict { passed, detail: detail.into() }
}

fn fixtures_arc() -> Vec<Arc<FinCat>> {
    fixtures::standard().into_iter().map(Arc::new).collect()
}

fn small_fixtures() -> Vec<Arc<FinCat>> {
    fixtures_arc().into_iter().filter(|c| c.num_objects() <= 2).collect()
}

fn all_functors<B: Base>(base: &B, cat: &Arc<FinCat>, max: usize) -> Vec<MFunctor<B::Mor>> {
    let sizes: Vec<usize> = (0..=max).collect();
    enumerate_functors(base, cat, &sizes, u128::MAX).expect("enumeration fits")
}

fn tally(report: &Report) -> (usize, usize) {
    (report.len(), report.failures())
}

fn c1_coherence() -> Verdict {
    let start = Instant::now();
    let mut parts = Vec::new();
    let mut ok = true;
    let mut run = |name: String, result: (usize, usize)| {
        ok &= result.0 >= 500 && result.1 == 0;
        parts.push(format!("{name} {}/{}", result.0 - result.1, result.0));
    };
    let (t, _) = coherence_sweep(&FinSet::new(), 4, 1 << 12).unwrap();
    run("finset".into(), (t.total(), t.failures()));
    for p in [2, 3] {
        let (t, _) = coherence_sweep(&FinVect::new(p).unwrap(), 3, 1 << 12).unwrap();
        run(format!("finvect_{p}"), (t.total(), t.failures()));
    }
    let elapsed = start.elapsed();
    ok &= elapsed < Duration::from_secs(10);
    verdict(ok, format!("{} hold; {:.2}s", parts.join(", "), elapsed.as_secs_f64()))
}

/// Every pair on the small fixtures; a seeded sample of pairs on the square,
/// whose 74112 functors give too many pairs to sweep.
fn c2_end_of_hom() -> Verdict {
    const SQUARE_PAIRS: usize = 1000;
    let start = Instant::now();
    let s = FinSet::new();
    let mut checked = 0;
    let mut bad = Vec::new();
    let mut compare = |m: &SetFunctor, n: &SetFunctor| {
        let carrier = map_functors(&s, m, n).unwrap().carrier();
        if carrier != brute_nat_count(m, n) {
            bad.push(format!("{} {} {}", m.index().name(), m.shape(), n.shape()));
        }
        checked += 1;
    };
    let mut square_total = 0;
    for cat in fixtures_arc() {
        let fs = all_functors(&s, &cat, 3);
        if cat.num_objects() <= 2 {
            for m in &fs {
                for n in &fs {
                    compare(m, n);
                }
            }
        } else {
            square_total = fs.len();
            let mut r = rng(SEED);
            for _ in 0..SQUARE_PAIRS {
                let (m, n) = (fs.choose(&mut r).unwrap(), fs.choose(&mut r).unwrap());
                compare(m, n);
            }
        }
    }
    let elapsed = start.elapsed();
    let ok = bad.is_empty() && elapsed < Duration::from_secs(60);
    verdict(
        ok,
        format!(
            "{}/{checked} pairs agree (all pairs on terminal, arrow, idempotent; {SQUARE_PAIRS} seeded pairs of \
             {square_total} square functors); {:.2}s{}",
            checked - bad.len(),
            elapsed.as_secs_f64(),
            bad.first().map(|b| format!("; first mismatch {b}")).unwrap_or_default()
        ),
    )
}

/// `count` triples whose hom-sets fit the caps; draws that hit a cap are
/// redrawn and counted separately.
fn closed_module_triples<B: Base>(base: &B, count: usize) -> (usize, usize, usize) {
    let mut r = rng(SEED + 3);
    let cats = fixtures_arc();
    let pools: Vec<Vec<MFunctor<B::Mor>>> = cats
        .iter()
        .map(|c| {
            if c.num_objects() <= 2 {
                all_functors(base, c, 2)
            } else {
                random_functors(base, c, &[0, 1, 2], 16, SEED).unwrap()
            }
        })
        .collect();
    let (mut triples, mut failures, mut capped) = (0, 0, 0);
    while triples < count && capped < 10 * count {
        let pool = pools.choose(&mut r).unwrap();
        let (fm, fn_) = (pool.choose(&mut r).unwrap(), pool.choose(&mut r).unwrap());
        let m = r.gen_range(0..=2);
        let (counts, report) = match verify_closed_module(base, m, fm, fn_, 3) {
            Ok(x) => x,
            Err(Error::Resource { .. }) => {
                capped += 1;
                continue;
            }
            Err(e) => panic!("{e}"),
        };
        let equal = counts.acted == counts.exponent && counts.exponent == counts.mapped;
        triples += 1;
        if !equal || !report.all_passed() {
            failures += 1;
        }
    }
    (triples, failures, capped)
}

fn c3_closed_module() -> Verdict {
    let results = [
        ("finset", closed_module_triples(&FinSet::new(), 60)),
        ("finvect_2", closed_module_triples(&FinVect::new(2).unwrap(), 60)),
        ("finvect_3", closed_module_triples(&FinVect::new(3).unwrap(), 60)),
    ];
    let ok = results.iter().all(|(_, (t, f, _))| *t >= 50 && *f == 0);
    let parts: Vec<String> =
        results.iter().map(|(n, (t, f, c))| format!("{n} {}/{t} ({c} over caps redrawn)", t - f)).collect();
    verdict(ok, format!("triples passing: {}", parts.join(", ")))
}

/// Runs `check` on every functor of every fixture, exhaustive up to `max`.
fn exhaustive<B: Base>(
    base: &B,
    max: usize,
    check: impl Fn(&Arc<FinCat>, &MFunctor<B::Mor>) -> Report,
) -> (usize, usize) {
    let (mut instances, mut failures) = (0, 0);
    for cat in fixtures_arc() {
        for m in all_functors(base, &cat, max) {
            let (n, f) = tally(&check(&cat, &m));
            instances += n;
            failures += f;
        }
    }
    (instances, failures)
}

fn c4_yoneda() -> Verdict {
    fn check<B: Base>(base: &B, cat: &Arc<FinCat>, m: &MFunctor<B::Mor>) -> Report {
        let mut report = Report::new();
        for i in cat.objects() {
            let (carrier, r) = yoneda::verify_yoneda(base, cat, i, m).unwrap();
            report.extend(r);
            report.push(yoneda_core::Label::L2, "carrier = M_i", "", carrier == m.obj(i), "");
        }
        report
    }
    let s = FinSet::new();
    let v = FinVect::new(2).unwrap();
    let a = exhaustive(&s, 3, |c, m| check(&s, c, m));
    let b = exhaustive(&v, 2, |c, m| check(&v, c, m));
    verdict(
        a.1 == 0 && b.1 == 0,
        format!("finset ≤3: {}/{} checks; finvect_2 ≤2: {}/{} checks", a.0 - a.1, a.0, b.0 - b.1, b.0),
    )
}

fn c5_density() -> Verdict {
    fn check<B: Base>(base: &B, m: &MFunctor<B::Mor>) -> Report {
        let (carriers, mut report) = yoneda::verify_density(base, m).unwrap();
        report.push(yoneda_core::Label::L0, "carriers = M", "", carriers == m.objs(), "");
        report
    }
    let s = FinSet::new();
    let v = FinVect::new(2).unwrap();
    let a = exhaustive(&s, 3, |_, m| check(&s, m));
    let b = exhaustive(&v, 2, |_, m| check(&v, m));
    verdict(
        a.1 == 0 && b.1 == 0,
        format!("finset ≤3: {}/{} checks; finvect_2 ≤2: {}/{} checks", a.0 - a.1, a.0, b.0 - b.1, b.0),
    )
}

fn eval_and_kan<B: Base>(base: &B) -> (usize, usize, usize) {
    let mut report = Report::new();
    for cat in small_fixtures() {
        for x in all_functors(base, &cat, 2) {
            for i in cat.objects() {
                for m in 0..=2 {
                    report.extend(adjoint::verify_ev_two_sided(base, &cat, i, m, &x, 3).unwrap());
                }
            }
        }
    }
    let mut pairs = 0;
    for phi in kan_functors().iter().filter(|p| p.target().num_objects() <= 2) {
        let xs = all_functors(base, phi.target(), 2);
        let ys = all_functors(base, phi.source(), 2);
        for x in &xs {
            for y in &ys {
                report.extend(adjoint::verify_precomposition_adjunction(base, phi, x, y, 2).unwrap().1);
                pairs += 1;
            }
        }
    }
    (report.len(), report.failures(), pairs)
}

fn c6_adjunctions() -> Verdict {
    let a = eval_and_kan(&FinSet::new());
    let b = eval_and_kan(&FinVect::new(2).unwrap());
    verdict(
        a.1 == 0 && b.1 == 0,
        format!(
            "finset: {}/{} checks ({} Kan pairs); finvect_2: {}/{} checks ({} Kan pairs)",
            a.0 - a.1,
            a.0,
            a.2,
            b.0 - b.1,
            b.0,
            b.2
        ),
    )
}

fn closed_triples<B: Base>(base: &B) -> (usize, usize, usize) {
    let mut r = rng(SEED + 7);
    let (mut triples, mut failures, mut degenerate) = (0, 0, 0);
    for cat in fixtures_arc() {
        let pool = if cat.num_objects() <= 2 {
            all_functors(base, &cat, 2)
        } else {
            random_functors(base, &cat, &[0, 1, 2], 8, SEED).unwrap()
        };
        let k = unit_functor(base, cat.clone()).unwrap();
        let mut cases = Vec::new();
        for p in pool.iter().take(3) {
            let other = pool.choose(&mut r).unwrap();
            cases.push((k.clone(), k.clone(), p.clone()));
            cases.push((k.clone(), other.clone(), p.clone()));
            cases.push((other.clone(), k.clone(), p.clone()));
        }
        degenerate += cases.len();
        for _ in 0..6 {
            let pick = |r: &mut rand_chacha::ChaCha8Rng| pool.choose(r).unwrap().clone();
            cases.push((pick(&mut r), pick(&mut r), pick(&mut r)));
        }
        for (m, n, p) in &cases {
            let (w, report) = adjoint::verify_closed_monoidal_functorcat(base, m, n, p, 2).unwrap();
            triples += 1;
            if w.counts.0 != w.counts.1 || !report.all_passed() {
                failures += 1;
            }
        }
    }
    (triples, failures, degenerate)
}

fn c7_closed_monoidal() -> Verdict {
    let a = closed_triples(&FinSet::new());
    let b = closed_triples(&FinVect::new(2).unwrap());
    verdict(
        a.0 >= 30 && b.0 >= 30 && a.1 == 0 && b.1 == 0,
        format!(
            "finset {}/{} triples ({} with a unit functor); finvect_2 {}/{} triples ({} with a unit functor)",
            a.0 - a.1,
            a.0,
            a.2,
            b.0 - b.1,
            b.0,
            b.2
        ),
    )
}

fn c8_classical() -> Verdict {
    let s = FinSet::new();
    let (mut instances, mut bad) = (0, 0);
    for cat in fixtures_arc() {
        let frees: Vec<_> = cat.objects().map(|i| yoneda::build_h(&s, cat.clone(), i).unwrap()).collect();
        for m in all_functors(&s, &cat, 3) {
            for i in cat.objects() {
                let library = yoneda::classical_yoneda_count(&s, &cat, i, &m).unwrap();
                let direct = brute_nat_count(&frees[i].functor, &m) == m.obj(i);
                instances += 1;
                if !(library && direct) {
                    bad += 1;
                }
            }
        }
    }
    verdict(bad == 0, format!("|nat(h_i, M)| = |M_i| on {}/{instances} (functor, object) pairs", instances - bad))
}

fn c9_determinism() -> Verdict {
    let s = FinSet::new();
    let v = FinVect::new(2).unwrap();
    let render_s = || run_all(&s, &SweepConfig::for_base(&s, SEED)).unwrap().render_text();
    let render_v = || run_all(&v, &SweepConfig::for_base(&v, SEED)).unwrap().render_text();
    let (a1, a2) = (render_s(), render_s());
    let (b1, b2) = (render_v(), render_v());
    verdict(
        a1 == a2 && b1 == b2,
        format!(
            "full sweep seed {SEED}: finset {} bytes, finvect_2 {} bytes, identical across runs",
            a1.len(),
            b1.len()
        ),
    )
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("base coherence", c1_coherence),
        ("end of hom equals natural transformations", c2_end_of_hom),
        ("closed module bijections", c3_closed_module),
        ("monoidal Yoneda", c4_yoneda),
        ("density", c5_density),
        ("evaluation and Kan adjunctions", c6_adjunctions),
        ("closed monoidal functor category", c7_closed_monoidal),
        ("classical Yoneda count", c8_classical),
        ("determinism", c9_determinism),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let v = run();
        let status = if v.passed { "PASS" } else { "FAIL" };
        println!("{status} criterion {}: {name} :: {} [{:.1}s]", k + 1, v.detail, start.elapsed().as_secs_f64());
        if !v.passed {
            failed += 1;
        }
    }
    println!("{} criteria, {failed} failed", criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
