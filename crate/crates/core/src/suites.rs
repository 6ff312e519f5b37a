//! Default verification sweeps, one per suite, over the standard fixture
//! categories. Every sweep is deterministic given its seed.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::adjoint;
use crate::basecat::Base;
use crate::coherence::coherence_sweep;
use crate::error::{Error, Result};
use crate::fincat::{fixtures, CatFunctor, FinCat};
use crate::funcat::{
    module_coherence, unit_functor, verify_closed_module, verify_module_functor, MFunctor, ModuleFunctor,
};
use crate::report::Report;
use crate::samples::rng;
use crate::yoneda;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Coherence,
    Module,
    Yoneda,
    Density,
    EvalAdjunction,
    Kan,
    Closed,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Coherence,
        Suite::Module,
        Suite::Yoneda,
        Suite::Density,
        Suite::EvalAdjunction,
        Suite::Kan,
        Suite::Closed,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Suite::Coherence => "coherence",
            Suite::Module => "module",
            Suite::Yoneda => "yoneda",
            Suite::Density => "density",
            Suite::EvalAdjunction => "eval-adjunction",
            Suite::Kan => "kan",
            Suite::Closed => "closed",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        out.write_str(self.as_str())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Suite> {
        Suite::ALL.into_iter().find(|x| x.as_str() == s).ok_or_else(|| Error::Input(format!("unknown suite {s:?}")))
    }
}

/// Knobs shared by every sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepConfig {
    pub seed: u64,
    /// Largest object size (cardinality or dimension) in generated functors.
    pub max_size: usize,
    /// Index categories with at most this many objects are swept exhaustively.
    pub exhaustive_objects: usize,
    /// Functors drawn per category beyond the exhaustive threshold.
    pub random_count: usize,
    /// Triples or pairs drawn for the heavier suites.
    pub triples: usize,
    /// Endomorphisms used per naturality check.
    pub naturality_samples: usize,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            seed: 0,
            max_size: 3,
            exhaustive_objects: 2,
            random_count: 12,
            triples: 12,
            naturality_samples: 3,
        }
    }
}

impl SweepConfig {
    /// A config whose functor sizes suit the base: up to 3 elements, or up to
    /// dimension 2 over a field.
    pub fn for_base<B: Base>(base: &B, seed: u64) -> Self {
        let max_size = if base.label() == "finset" { 3 } else { 2 };
        SweepConfig { seed, max_size, ..SweepConfig::default() }
    }

    fn small(&self) -> usize {
        self.max_size.min(2)
    }
}

/// Functors over `cat` up to `max_size`, exhaustive or seeded by category position.
fn functors_for<B: Base>(
    base: &B,
    cat: &Arc<FinCat>,
    max_size: usize,
    cfg: &SweepConfig,
    salt: u64,
    report: &mut Report,
) -> Result<Vec<MFunctor<B::Mor>>> {
    if cat.num_objects() <= cfg.exhaustive_objects {
        let sizes: Vec<usize> = (0..=max_size).collect();
        crate::samples::enumerate_functors(base, cat, &sizes, 50_000_000)
    } else {
        report.warn(format!(
            "{}: {} random functors with sizes ≤ {max_size} (seed {}, stream {salt})",
            cat.name(),
            cfg.random_count,
            cfg.seed
        ));
        let seed = cfg.seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(salt);
        crate::samples::random_functors(base, cat, &(0..=max_size).collect::<Vec<_>>(), cfg.random_count, seed)
    }
}

fn standard() -> Vec<Arc<FinCat>> {
    fixtures::standard().into_iter().map(Arc::new).collect()
}

fn small_standard() -> Vec<Arc<FinCat>> {
    standard().into_iter().filter(|c| c.num_objects() <= 2).collect()
}

pub fn run_suite<B: Base>(base: &B, suite: Suite, cfg: &SweepConfig) -> Result<Report> {
    match suite {
        Suite::Coherence => Ok(coherence_sweep(base, cfg.max_size, 1 << 12)?.1),
        Suite::Module => module_suite(base, cfg),
        Suite::Yoneda => yoneda_suite(base, cfg),
        Suite::Density => density_suite(base, cfg),
        Suite::EvalAdjunction => eval_suite(base, cfg),
        Suite::Kan => kan_suite(base, cfg),
        Suite::Closed => closed_suite(base, cfg),
    }
}

/// Every suite in order, concatenated.
pub fn run_all<B: Base>(base: &B, cfg: &SweepConfig) -> Result<Report> {
    let mut report = Report::new();
    for suite in Suite::ALL {
        report.extend(run_suite(base, suite, cfg)?);
    }
    Ok(report)
}

fn pick<'a, T>(items: &'a [T], r: &mut impl Rng) -> &'a T {
    &items[r.gen_range(0..items.len())]
}

fn module_suite<B: Base>(base: &B, cfg: &SweepConfig) -> Result<Report> {
    let mut report = Report::new();
    let mut r = rng(cfg.seed);
    for (salt, cat) in small_standard().iter().enumerate() {
        let fs = functors_for(base, cat, cfg.small(), cfg, salt as u64, &mut report)?;
        for _ in 0..cfg.triples {
            let m = r.gen_range(0..=cfg.small());
            let (fm, fn_) = (pick(&fs, &mut r), pick(&fs, &mut r));
            report.extend(verify_closed_module(base, m, fm, fn_, cfg.naturality_samples)?.1);
        }
        let x = pick(&fs, &mut r).clone();
        report.extend(module_coherence(base, 2, 1, 2, &x)?);
        let k = unit_functor(base, cat.clone())?;
        let other = pick(&fs, &mut r).clone();
        let mut functors =
            vec![ModuleFunctor::Identity, ModuleFunctor::TensorWith(k), ModuleFunctor::TensorWith(other)];
        for o in cat.objects() {
            functors.push(ModuleFunctor::Precompose(CatFunctor::point(cat.clone(), o)));
        }
        for f in &functors {
            report.extend(verify_module_functor(base, f, 2, 2, &x)?);
        }
        let term = Arc::new(fixtures::terminal());
        let c = MFunctor::constant(base, term, cfg.small())?;
        for o in cat.objects() {
            let h = yoneda::build_h(base, cat.clone(), o)?;
            report.extend(verify_module_functor(base, &ModuleFunctor::FreeTensor(h.functor), 2, 2, &c)?);
        }
    }
    Ok(report)
}

fn yoneda_suite<B: Base>(base: &B, cfg: &SweepConfig) -> Result<Report> {
    let mut report = Report::new();
    for s in 0..=cfg.small() {
        for m in 0..=cfg.small() {
            report.extend(yoneda::verify_uv_adjunction(base, s, m, cfg.naturality_samples)?);
        }
    }
    for (salt, cat) in standard().iter().enumerate() {
        for m in functors_for(base, cat, cfg.max_size, cfg, salt as u64, &mut report)? {
            for i in cat.objects() {
                report.extend(yoneda::verify_lemma_eq1(base, cat, i, &m)?.1);
                report.extend(yoneda::verify_yoneda(base, cat, i, &m)?.1);
            }
        }
    }
    Ok(report)
}

fn density_suite<B: Base>(base: &B, cfg: &SweepConfig) -> Result<Report> {
    let mut report = Report::new();
    for (salt, cat) in standard().iter().enumerate() {
        for m in functors_for(base, cat, cfg.max_size, cfg, salt as u64, &mut report)? {
            report.extend(yoneda::verify_density(base, &m)?.1);
        }
    }
    Ok(report)
}

fn eval_suite<B: Base>(base: &B, cfg: &SweepConfig) -> Result<Report> {
    let mut report = Report::new();
    for (salt, cat) in small_standard().iter().enumerate() {
        for x in functors_for(base, cat, cfg.small(), cfg, salt as u64, &mut report)? {
            for i in cat.objects() {
                for m in 0..=cfg.small() {
                    report.extend(adjoint::verify_ev_two_sided(base, cat, i, m, &x, cfg.naturality_samples)?);
                }
            }
        }
    }
    Ok(report)
}

/// The functors `Φ` swept by the Kan suite.
pub fn kan_functors() -> Vec<CatFunctor> {
    let term = Arc::new(fixtures::terminal());
    let arrow = Arc::new(fixtures::arrow());
    let idem = Arc::new(fixtures::walking_idempotent());
    let square = Arc::new(fixtures::commutative_square());
    let edge = |f: &str, src: &str, dst: &str| {
        let objs = [("0", src), ("1", dst)].into_iter().map(|(a, b)| (a.to_string(), b.to_string())).collect();
        let mors = [("f", f)].into_iter().map(|(a, b)| (a.to_string(), b.to_string())).collect();
        CatFunctor::from_names(arrow.clone(), square.clone(), &objs, &mors).expect("edge of the square")
    };
    vec![
        CatFunctor::identity(arrow.clone()),
        CatFunctor::point(arrow.clone(), 0),
        CatFunctor::point(arrow.clone(), 1),
        CatFunctor::to_terminal(arrow.clone()),
        CatFunctor::point(idem.clone(), 0),
        CatFunctor::to_terminal(idem),
        CatFunctor::identity(term),
        edge("f", "a", "b"),
        edge("diag", "a", "d"),
    ]
}

fn kan_suite<B: Base>(base: &B, cfg: &SweepConfig) -> Result<Report> {
    let mut report = Report::new();
    let mut r = rng(cfg.seed);
    for (salt, phi) in kan_functors().iter().enumerate() {
        let salt = salt as u64 * 2;
        let xs = functors_for(base, phi.target(), cfg.small(), cfg, salt, &mut report)?;
        let ys = functors_for(base, phi.source(), cfg.small(), cfg, salt + 1, &mut report)?;
        for _ in 0..cfg.triples {
            let (x, y) = (pick(&xs, &mut r), pick(&ys, &mut r));
            report.extend(adjoint::verify_precomposition_adjunction(base, phi, x, y, cfg.naturality_samples)?.1);
            report.extend(adjoint::verify_map_level_iso(base, phi, x, y)?);
        }
        let mut shuffled = xs.clone();
        shuffled.shuffle(&mut r);
        for x in shuffled.iter().take(3) {
            report.extend(adjoint::verify_precomposition_cocontinuity(base, phi, x)?);
        }
    }
    for (salt, cat) in standard().iter().enumerate() {
        let ys = functors_for(base, cat, cfg.small(), cfg, 100 + salt as u64, &mut report)?;
        for y in ys.iter().take(cfg.triples) {
            report.extend(adjoint::verify_ran_to_terminal(base, y)?);
        }
    }
    Ok(report)
}

fn closed_suite<B: Base>(base: &B, cfg: &SweepConfig) -> Result<Report> {
    let mut report = Report::new();
    let mut r = rng(cfg.seed);
    for (salt, cat) in small_standard().iter().enumerate() {
        let fs = functors_for(base, cat, cfg.small(), cfg, salt as u64, &mut report)?;
        let k = unit_functor(base, cat.clone())?;
        let mut triples = Vec::new();
        for p in fs.iter().take(3) {
            triples.push((k.clone(), k.clone(), p.clone()));
            triples.push((k.clone(), pick(&fs, &mut r).clone(), p.clone()));
            triples.push((pick(&fs, &mut r).clone(), k.clone(), p.clone()));
        }
        for _ in 0..cfg.triples {
            triples.push((pick(&fs, &mut r).clone(), pick(&fs, &mut r).clone(), pick(&fs, &mut r).clone()));
        }
        for (m, n, p) in &triples {
            report.extend(adjoint::verify_closed_monoidal_functorcat(base, m, n, p, cfg.naturality_samples)?.1);
            report.extend(adjoint::verify_pointwise_monoidal(base, m, n, p)?);
        }
        for (m, n, _) in triples.iter().take(4) {
            report.extend(adjoint::verify_tensor_cocontinuity(base, m, n)?);
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basecat::{FinSet, FinVect};

    fn quick() -> SweepConfig {
        SweepConfig { seed: 1, max_size: 2, exhaustive_objects: 1, random_count: 2, triples: 2, naturality_samples: 2 }
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.as_str().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn every_suite_passes_quickly_on_finset() {
        let s = FinSet::new();
        for suite in Suite::ALL {
            let r = run_suite(&s, suite, &quick()).unwrap();
            assert!(!r.is_empty(), "{suite}");
            assert!(r.all_passed(), "{suite}\n{}", r.render_text());
        }
    }

    #[test]
    fn every_suite_passes_quickly_on_finvect() {
        let v = FinVect::new(2).unwrap();
        let cfg = SweepConfig { max_size: 1, ..quick() };
        for suite in Suite::ALL {
            let r = run_suite(&v, suite, &cfg).unwrap();
            assert!(r.all_passed(), "{suite}\n{}", r.render_text());
        }
    }

    #[test]
    fn sweeps_are_deterministic() {
        let s = FinSet::new();
        let a = run_suite(&s, Suite::Kan, &quick()).unwrap().render_text();
        let b = run_suite(&s, Suite::Kan, &quick()).unwrap().render_text();
        assert_eq!(a, b);
    }
}
