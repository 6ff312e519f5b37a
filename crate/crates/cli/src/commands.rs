//! Subcommand bodies, generic over the base category.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde_json::{json, Value};
use yoneda_core::fincat::validate_category;
use yoneda_core::funcat::{map_functors, module_coherence, verify_closed_module, verify_module_functor, ModuleFunctor};
use yoneda_core::suites::{run_suite, Suite, SweepConfig};
use yoneda_core::{adjoint, samples, yoneda, CatFunctor, Error, FinCat, MFunctor, Report, Result};

use crate::input::{build_functor, load_functor, prefix, read_document, Catalog, Document, LiteralBase};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Records,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Compute {
    End,
    Coend,
    Map,
    KanRight,
    InternalHom,
}

/// Options shared by `check` and `compute`.
#[derive(Debug, Clone, Default)]
pub struct Params {
    pub inputs: Vec<PathBuf>,
    pub categories: Vec<String>,
    pub object: Option<String>,
    pub m: Option<usize>,
    pub phi: Option<String>,
    pub max_size: Option<usize>,
    pub samples: usize,
    pub seed: u64,
    pub legs: bool,
    pub format: Option<Format>,
}

impl Params {
    fn format(&self) -> Format {
        self.format.unwrap_or(Format::Text)
    }

    fn catalog(&self) -> Result<Catalog> {
        let mut catalog = Catalog::default();
        for c in &self.categories {
            catalog.resolve_arg(c)?;
        }
        Ok(catalog)
    }

    fn functors<B: LiteralBase>(&self, base: &B, catalog: &Catalog, names: &[&str]) -> Result<Vec<MFunctor<B::Mor>>> {
        if self.inputs.len() != names.len() {
            return Err(Error::Input(format!(
                "expected {} functor file(s) ({}), got {}",
                names.len(),
                names.join(", "),
                self.inputs.len()
            )));
        }
        self.inputs.iter().map(|p| load_functor(base, catalog, p)).collect()
    }

    fn objects(&self, cat: &FinCat) -> Result<Vec<usize>> {
        match &self.object {
            Some(name) => Ok(vec![cat.object_id(name)?]),
            None => Ok(cat.objects().collect()),
        }
    }

    fn ms(&self) -> Vec<usize> {
        match self.m {
            Some(m) => vec![m],
            None => (0..=2).collect(),
        }
    }
}

/// What a subcommand printed and whether every check passed.
pub struct Outcome {
    pub text: String,
    pub passed: bool,
}

/// Text mode prints `notes` then the report; records mode prints one JSON
/// object per check followed by a summary record.
fn emit(format: Format, notes: &[String], report: &Report) -> Outcome {
    let mut text = String::new();
    match format {
        Format::Text => {
            for n in notes {
                let _ = writeln!(text, "{n}");
            }
            text.push_str(&report.render_text());
        }
        Format::Records => {
            for c in &report.checks {
                let _ = writeln!(text, "{}", serde_json::to_string(c).expect("checks serialize"));
            }
            for w in &report.warnings {
                let _ = writeln!(text, "{}", json!({ "warning": w }));
            }
            let _ = writeln!(text, "{}", json!({ "checks": report.len(), "failures": report.failures() }));
        }
    }
    Outcome { text, passed: report.all_passed() }
}

/// Rank used to pick the exit code when several files fail differently.
fn severity(e: &Error) -> u8 {
    match e {
        Error::Input(_) => 3,
        Error::Resource { .. } => 2,
        _ => 1,
    }
}

/// Validates each file in order. Categories become available by name to the
/// files after them. Returns the output and the worst error seen.
pub fn validate<B: LiteralBase>(base: &B, paths: &[PathBuf]) -> (String, Option<Error>) {
    let mut catalog = Catalog::default();
    let mut out = String::new();
    let mut worst: Option<Error> = None;
    for path in paths {
        let result = validate_one(base, &mut catalog, path).map_err(|e| prefix(path, e));
        match result {
            Ok(msg) => {
                let _ = writeln!(out, "ok {}: {msg}", path.display());
            }
            Err(e) => {
                let _ = writeln!(out, "error {e}");
                if worst.as_ref().is_none_or(|w| severity(&e) > severity(w)) {
                    worst = Some(e);
                }
            }
        }
    }
    (out, worst)
}

fn validate_one<B: LiteralBase>(base: &B, catalog: &mut Catalog, path: &Path) -> Result<String> {
    match read_document(path)? {
        Document::Category(p) => {
            let report = validate_category(&p)?;
            if !report.is_ok() {
                let msgs: Vec<String> = report.violations.iter().map(|v| v.to_string()).collect();
                return Err(Error::Invalid(msgs.join("; ")));
            }
            let cat = catalog.register(FinCat::from_presentation(&p)?);
            Ok(format!("category {}, {} objects, {} morphisms", cat.name(), cat.num_objects(), cat.num_morphisms()))
        }
        Document::Functor(doc) => {
            let f = build_functor(base, catalog, &doc)?;
            let name = doc.name.as_deref().unwrap_or("functor");
            Ok(format!("{name} over {} into {}, objects {}", f.index().name(), base.label(), f.shape()))
        }
        Document::CatFunctor(doc) => {
            let f = catalog.cat_functor(&doc)?;
            let name = doc.name.as_deref().unwrap_or("index functor");
            Ok(format!("{name}: {} → {}", f.source().name(), f.target().name()))
        }
    }
}

fn instance_cfg<B: LiteralBase>(base: &B, p: &Params) -> SweepConfig {
    let mut cfg = SweepConfig::for_base(base, p.seed);
    cfg.naturality_samples = p.samples;
    if let Some(s) = p.max_size {
        cfg.max_size = s;
    }
    cfg
}

pub fn check<B: LiteralBase>(base: &B, suite: Suite, p: &Params) -> Result<Outcome> {
    let cfg = instance_cfg(base, p);
    if p.inputs.is_empty() && p.phi.is_none() {
        let report = run_suite(base, suite, &cfg)?;
        return Ok(emit(p.format(), &[format!("suite {suite} on {}, seed {}", base.label(), p.seed)], &report));
    }
    let catalog = p.catalog()?;
    let mut notes = Vec::new();
    let mut report = Report::new();
    match suite {
        Suite::Coherence => {
            return Err(Error::Input("the coherence suite takes no functor inputs".into()));
        }
        Suite::Module => {
            let fs = p.functors(base, &catalog, &["M", "N"])?;
            let (fm, fn_) = (&fs[0], &fs[1]);
            for m in p.ms() {
                let (counts, r) = verify_closed_module(base, m, fm, fn_, p.samples)?;
                notes.push(format!(
                    "m={m}: |m⊗M→N| = {}, |M→N^m| = {}, |m→map(M,N)| = {}",
                    counts.acted, counts.exponent, counts.mapped
                ));
                report.extend(r);
                report.extend(module_coherence(base, m, m, m, fm)?);
            }
            let cat = fm.index().clone();
            let mut functors = vec![ModuleFunctor::Identity, ModuleFunctor::TensorWith(fn_.clone())];
            for o in cat.objects() {
                functors.push(ModuleFunctor::Precompose(CatFunctor::point(cat.clone(), o)));
            }
            let m = p.m.unwrap_or(2);
            for f in &functors {
                report.extend(verify_module_functor(base, f, m, m, fm)?);
            }
        }
        Suite::Yoneda => {
            let fm = &p.functors(base, &catalog, &["M"])?[0];
            let cat = fm.index().clone();
            for i in p.objects(&cat)? {
                let (counts, r) = yoneda::verify_lemma_eq1(base, &cat, i, fm)?;
                report.extend(r);
                let (carrier, r) = yoneda::verify_yoneda(base, &cat, i, fm)?;
                report.extend(r);
                notes.push(format!(
                    "i={}: map(h_i, M) carrier {carrier}, M_i {}, |nat(h_i, M)| {}",
                    cat.object_name(i),
                    fm.obj(i),
                    counts.transformations
                ));
            }
        }
        Suite::Density => {
            let fm = &p.functors(base, &catalog, &["M"])?[0];
            let (carriers, r) = yoneda::verify_density(base, fm)?;
            notes.push(format!("coend carriers {}", tuple(&carriers)));
            report.extend(r);
        }
        Suite::EvalAdjunction => {
            let fm = &p.functors(base, &catalog, &["M"])?[0];
            let cat = fm.index().clone();
            for i in p.objects(&cat)? {
                for m in p.ms() {
                    report.extend(adjoint::verify_ev_two_sided(base, &cat, i, m, fm, p.samples)?);
                }
            }
        }
        Suite::Kan => {
            let mut catalog = catalog;
            let phi = catalog.phi(p.phi.as_deref().ok_or_else(|| Error::Input("check kan needs --phi".into()))?)?;
            if p.inputs.is_empty() {
                return Err(Error::Input("check kan needs a functor file Y over the source of Φ".into()));
            }
            let y = load_functor(base, &catalog, &p.inputs[0])?;
            let kan = adjoint::right_adjoint_of_precomposition(base, &phi, &y)?;
            notes.push(format!("G(Y) = {}", kan.functor.shape()));
            let xs: Vec<MFunctor<B::Mor>> = if p.inputs.len() > 1 {
                p.inputs[1..].iter().map(|x| load_functor(base, &catalog, x)).collect::<Result<_>>()?
            } else {
                let target: Arc<FinCat> = phi.target().clone();
                samples::default_functors(base, &target, cfg.max_size.min(2), cfg.random_count, cfg.seed)?
            };
            for x in &xs {
                report.extend(adjoint::verify_precomposition_adjunction(base, &phi, x, &y, p.samples)?.1);
                report.extend(adjoint::verify_map_level_iso(base, &phi, x, &y)?);
            }
            if phi.target().num_objects() == 1 && phi.target().num_morphisms() == 1 {
                report.extend(adjoint::verify_ran_to_terminal(base, &y)?);
            }
        }
        Suite::Closed => {
            let fs = p.functors(base, &catalog, &["M", "N", "P"])?;
            let (w, r) = adjoint::verify_closed_monoidal_functorcat(base, &fs[0], &fs[1], &fs[2], p.samples)?;
            notes.push(format!("|M⊗N→P| = {}, |M→P^N| = {}", w.counts.0, w.counts.1));
            report.extend(r);
        }
    }
    Ok(emit(p.format(), &notes, &report))
}

fn tuple(xs: &[usize]) -> String {
    let parts: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

/// A computed object: per-component carriers and, optionally, named morphisms.
struct Computed {
    what: String,
    carrier: Vec<usize>,
    legs: Vec<(String, Value)>,
}

fn render_computed(p: &Params, c: &Computed) -> String {
    let mut out = String::new();
    match p.format() {
        Format::Text => {
            let _ = writeln!(out, "{}", c.what);
            let _ = writeln!(out, "carrier {}", tuple(&c.carrier));
            if p.legs {
                for (name, v) in &c.legs {
                    let _ = writeln!(out, "{name}: {v}");
                }
            }
        }
        Format::Records => {
            let mut record = json!({ "object": c.what, "carrier": c.carrier });
            if p.legs {
                let legs: serde_json::Map<String, Value> = c.legs.iter().cloned().collect();
                record["legs"] = Value::Object(legs);
            }
            let _ = writeln!(out, "{record}");
        }
    }
    out
}

pub fn compute<B: LiteralBase>(base: &B, what: Compute, p: &Params) -> Result<Outcome> {
    let mut catalog = p.catalog()?;
    let computed = match what {
        Compute::End | Compute::Map => {
            let fs = p.functors(base, &catalog, &["M", "N"])?;
            let map = map_functors(base, &fs[0], &fs[1])?;
            let cat = fs[0].index();
            let word = if what == Compute::End { "end of hom(M, N)" } else { "map(M, N)" };
            Computed {
                what: format!("{word} over {} in {}", cat.name(), base.label()),
                carrier: vec![map.carrier()],
                legs: cat
                    .objects()
                    .map(|i| (format!("leg {}", cat.object_name(i)), base.render_mor(map.leg(i))))
                    .collect(),
            }
        }
        Compute::Coend => {
            let fm = &p.functors(base, &catalog, &["M"])?[0];
            let d = yoneda::density(base, fm)?;
            let cat = fm.index();
            Computed {
                what: format!("coend of the codifferential of M over {} in {}", cat.name(), base.label()),
                carrier: d.carriers(),
                legs: cat
                    .objects()
                    .map(|j| (format!("comparison {}", cat.object_name(j)), base.render_mor(&d.comparisons[j])))
                    .collect(),
            }
        }
        Compute::KanRight => {
            let phi =
                catalog.phi(p.phi.as_deref().ok_or_else(|| Error::Input("compute kan-right needs --phi".into()))?)?;
            let y = &p.functors(base, &catalog, &["Y"])?[0];
            let kan = adjoint::right_adjoint_of_precomposition(base, &phi, y)?;
            let cat = phi.target();
            Computed {
                what: format!("Ran_Φ Y for Φ: {} → {} in {}", phi.source().name(), cat.name(), base.label()),
                carrier: kan.functor.objs().to_vec(),
                legs: cat
                    .non_identity_morphisms()
                    .map(|g| (format!("G({})", cat.morphism_name(g)), base.render_mor(kan.functor.mor(g))))
                    .collect(),
            }
        }
        Compute::InternalHom => {
            let fs = p.functors(base, &catalog, &["N", "P"])?;
            let ih = adjoint::internal_hom_functorcat(base, &fs[0], &fs[1])?;
            let cat = fs[0].index();
            Computed {
                what: format!("P^N over {} in {}", cat.name(), base.label()),
                carrier: ih.functor.objs().to_vec(),
                legs: cat
                    .non_identity_morphisms()
                    .map(|g| (format!("P^N({})", cat.morphism_name(g)), base.render_mor(ih.functor.mor(g))))
                    .collect(),
            }
        }
    };
    Ok(Outcome { text: render_computed(p, &computed), passed: true })
}
