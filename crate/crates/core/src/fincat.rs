//! Finite categories given by explicit composition tables, and functors
//! between them.
//!
//! Identities are implicit in a [`FinCatPresentation`] and synthesized with
//! the reserved names `id_<object>`. Inside a validated [`FinCat`] the
//! identity of object `o` has morphism id `o`; non-identity morphisms follow
//! in presentation order. That ordering is the canonical order used by every
//! hom-set enumeration downstream.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type ObjId = usize;
pub type MorId = usize;

pub const IDENTITY_PREFIX: &str = "id_";

/// Size limits applied before the cubic associativity check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CatCaps {
    pub max_objects: usize,
    pub max_morphisms: usize,
}

impl Default for CatCaps {
    fn default() -> Self {
        CatCaps { max_objects: 64, max_morphisms: 512 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismDecl {
    pub name: String,
    pub src: String,
    pub dst: String,
}

/// `equals = then ∘ first`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CompositionEntry {
    pub first: String,
    pub then: String,
    pub equals: String,
}

/// A finite category as written in an input file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FinCatPresentation {
    #[serde(default)]
    pub name: Option<String>,
    pub objects: Vec<String>,
    #[serde(default)]
    pub morphisms: Vec<MorphismDecl>,
    #[serde(default)]
    pub composition: Vec<CompositionEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// The named composite has the wrong source or target.
    CompositeShape { first: String, then: String, equals: String },
    /// A composable pair has no composite in the table.
    MissingComposite { first: String, then: String },
    /// `(h∘g)∘f ≠ h∘(g∘f)`.
    NotAssociative { f: String, g: String, h: String },
    /// A functor does not send `src`/`dst` of a morphism to `src`/`dst` of its image.
    FunctorShape { morphism: String },
    /// A functor does not send an identity to an identity.
    FunctorIdentity { object: String },
    /// `F(g∘f) ≠ F(g)∘F(f)`.
    FunctorComposite { first: String, then: String },
}

impl fmt::Display for Violation {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::CompositeShape { first, then, equals } => {
                write!(out, "composite of ({first},{then}) is {equals}, which has the wrong source or target")
            }
            Violation::MissingComposite { first, then } => {
                write!(out, "no composite listed for composable pair ({first},{then})")
            }
            Violation::NotAssociative { f, g, h } => {
                write!(out, "associativity fails on triple ({f},{g},{h})")
            }
            Violation::FunctorShape { morphism } => {
                write!(out, "image of {morphism} has mismatched source or target")
            }
            Violation::FunctorIdentity { object } => {
                write!(out, "identity of {object} is not sent to an identity")
            }
            Violation::FunctorComposite { first, then } => {
                write!(out, "composite of pair ({first},{then}) is not preserved")
            }
        }
    }
}

/// Outcome of a structural validation: empty means ok.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub(crate) fn into_result(self) -> Result<()> {
        if self.is_ok() {
            Ok(())
        } else {
            let msgs: Vec<String> = self.violations.iter().map(|v| v.to_string()).collect();
            Err(Error::Invalid(msgs.join("; ")))
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Morphism {
    pub name: String,
    pub src: ObjId,
    pub dst: ObjId,
}

/// A validated finite category.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FinCat {
    name: String,
    objects: Vec<String>,
    morphisms: Vec<Morphism>,
    /// `comp[g * n + f] = g∘f` when composable.
    comp: Vec<Option<MorId>>,
}

struct Indexed {
    objects: Vec<String>,
    morphisms: Vec<Morphism>,
    comp: Vec<Option<MorId>>,
}

fn index_presentation(pres: &FinCatPresentation, caps: CatCaps) -> Result<Indexed> {
    if pres.objects.len() > caps.max_objects {
        return Err(Error::resource("category objects", pres.objects.len() as u128, caps.max_objects as u128));
    }
    let total = pres.objects.len() + pres.morphisms.len();
    if total > caps.max_morphisms {
        return Err(Error::resource("category morphisms", total as u128, caps.max_morphisms as u128));
    }

    let mut obj_index = HashMap::new();
    for (k, o) in pres.objects.iter().enumerate() {
        if obj_index.insert(o.as_str(), k).is_some() {
            return Err(Error::input(format!("duplicate object name {o:?}")));
        }
    }

    let mut morphisms: Vec<Morphism> = pres
        .objects
        .iter()
        .enumerate()
        .map(|(k, o)| Morphism { name: format!("{IDENTITY_PREFIX}{o}"), src: k, dst: k })
        .collect();
    let mut mor_index: HashMap<String, MorId> =
        morphisms.iter().enumerate().map(|(k, m)| (m.name.clone(), k)).collect();

    for decl in &pres.morphisms {
        if decl.name.starts_with(IDENTITY_PREFIX) {
            return Err(Error::input(format!("morphism {:?} uses the reserved identity prefix", decl.name)));
        }
        let src = *obj_index
            .get(decl.src.as_str())
            .ok_or_else(|| Error::input(format!("morphism {:?}: unknown source object {:?}", decl.name, decl.src)))?;
        let dst = *obj_index
            .get(decl.dst.as_str())
            .ok_or_else(|| Error::input(format!("morphism {:?}: unknown target object {:?}", decl.name, decl.dst)))?;
        let id = morphisms.len();
        if mor_index.insert(decl.name.clone(), id).is_some() {
            return Err(Error::input(format!("duplicate morphism name {:?}", decl.name)));
        }
        morphisms.push(Morphism { name: decl.name.clone(), src, dst });
    }

    let n = morphisms.len();
    let n_obj = pres.objects.len();
    let mut comp = vec![None; n * n];
    for f in 0..n {
        for g in 0..n {
            if morphisms[f].dst != morphisms[g].src {
                continue;
            }
            if f < n_obj {
                comp[g * n + f] = Some(g);
            } else if g < n_obj {
                comp[g * n + f] = Some(f);
            }
        }
    }

    let lookup = |name: &str, entry: &CompositionEntry| -> Result<MorId> {
        mor_index.get(name).copied().ok_or_else(|| {
            Error::input(format!(
                "composition entry ({}, {}, {}): unknown morphism {name:?}",
                entry.first, entry.then, entry.equals
            ))
        })
    };
    let mut seen = HashSet::new();
    for entry in &pres.composition {
        let f = lookup(&entry.first, entry)?;
        let g = lookup(&entry.then, entry)?;
        let h = lookup(&entry.equals, entry)?;
        if f < n_obj || g < n_obj {
            return Err(Error::input(format!(
                "composition entry ({}, {}): identity composites are implicit",
                entry.first, entry.then
            )));
        }
        if !seen.insert((f, g)) {
            return Err(Error::input(format!("composition entry ({}, {}) listed twice", entry.first, entry.then)));
        }
        if morphisms[f].dst != morphisms[g].src {
            return Err(Error::input(format!(
                "composition entry ({}, {}): morphisms are not composable",
                entry.first, entry.then
            )));
        }
        comp[g * n + f] = Some(h);
    }

    Ok(Indexed { objects: pres.objects.clone(), morphisms, comp })
}

fn structural_violations(ix: &Indexed) -> Vec<Violation> {
    let n = ix.morphisms.len();
    let name = |m: MorId| ix.morphisms[m].name.clone();
    let mut out = Vec::new();
    for f in 0..n {
        for g in 0..n {
            if ix.morphisms[f].dst != ix.morphisms[g].src {
                continue;
            }
            match ix.comp[g * n + f] {
                None => out.push(Violation::MissingComposite { first: name(f), then: name(g) }),
                Some(h) => {
                    let m = &ix.morphisms[h];
                    if m.src != ix.morphisms[f].src || m.dst != ix.morphisms[g].dst {
                        out.push(Violation::CompositeShape { first: name(f), then: name(g), equals: name(h) });
                    }
                }
            }
        }
    }
    if !out.is_empty() {
        return out;
    }
    for f in 0..n {
        for g in 0..n {
            let Some(gf) = ix.comp[g * n + f] else { continue };
            for h in 0..n {
                let Some(hg) = ix.comp[h * n + g] else { continue };
                let left = ix.comp[h * n + gf];
                let right = ix.comp[hg * n + f];
                if left != right {
                    out.push(Violation::NotAssociative { f: name(f), g: name(g), h: name(h) });
                }
            }
        }
    }
    out
}

/// Checks every category law on a presentation.
///
/// Malformed input (duplicate names, dangling references, reserved names)
/// is an `Err`; law violations are listed in the returned report.
pub fn validate_category(pres: &FinCatPresentation) -> Result<ValidationReport> {
    validate_category_with(pres, CatCaps::default())
}

pub fn validate_category_with(pres: &FinCatPresentation, caps: CatCaps) -> Result<ValidationReport> {
    let ix = index_presentation(pres, caps)?;
    Ok(ValidationReport { violations: structural_violations(&ix) })
}

impl FinCat {
    pub fn from_presentation(pres: &FinCatPresentation) -> Result<FinCat> {
        Self::from_presentation_with(pres, CatCaps::default())
    }

    pub fn from_presentation_with(pres: &FinCatPresentation, caps: CatCaps) -> Result<FinCat> {
        let ix = index_presentation(pres, caps)?;
        ValidationReport { violations: structural_violations(&ix) }.into_result()?;
        Ok(FinCat {
            name: pres.name.clone().unwrap_or_else(|| "unnamed".to_string()),
            objects: ix.objects,
            morphisms: ix.morphisms,
            comp: ix.comp,
        })
    }

    /// Writes the category back out; identities and identity composites are omitted.
    pub fn to_presentation(&self) -> FinCatPresentation {
        let n_obj = self.objects.len();
        let n = self.morphisms.len();
        let morphisms = self.morphisms[n_obj..]
            .iter()
            .map(|m| MorphismDecl {
                name: m.name.clone(),
                src: self.objects[m.src].clone(),
                dst: self.objects[m.dst].clone(),
            })
            .collect();
        let mut composition = Vec::new();
        for f in n_obj..n {
            for g in n_obj..n {
                if let Some(h) = self.comp[g * n + f] {
                    composition.push(CompositionEntry {
                        first: self.morphisms[f].name.clone(),
                        then: self.morphisms[g].name.clone(),
                        equals: self.morphisms[h].name.clone(),
                    });
                }
            }
        }
        FinCatPresentation { name: Some(self.name.clone()), objects: self.objects.clone(), morphisms, composition }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn num_objects(&self) -> usize {
        self.objects.len()
    }

    pub fn num_morphisms(&self) -> usize {
        self.morphisms.len()
    }

    pub fn objects(&self) -> impl Iterator<Item = ObjId> {
        0..self.objects.len()
    }

    /// All morphisms, identities first.
    pub fn morphisms(&self) -> impl Iterator<Item = MorId> {
        0..self.morphisms.len()
    }

    pub fn non_identity_morphisms(&self) -> impl Iterator<Item = MorId> {
        self.objects.len()..self.morphisms.len()
    }

    pub fn object_name(&self, o: ObjId) -> &str {
        &self.objects[o]
    }

    pub fn morphism(&self, m: MorId) -> &Morphism {
        &self.morphisms[m]
    }

    pub fn morphism_name(&self, m: MorId) -> &str {
        &self.morphisms[m].name
    }

    pub fn src(&self, m: MorId) -> ObjId {
        self.morphisms[m].src
    }

    pub fn dst(&self, m: MorId) -> ObjId {
        self.morphisms[m].dst
    }

    pub fn identity(&self, o: ObjId) -> MorId {
        o
    }

    pub fn is_identity(&self, m: MorId) -> bool {
        m < self.objects.len()
    }

    pub fn object_id(&self, name: &str) -> Result<ObjId> {
        self.objects
            .iter()
            .position(|o| o == name)
            .ok_or_else(|| Error::input(format!("unknown object {name:?} in category {}", self.name)))
    }

    pub fn morphism_id(&self, name: &str) -> Result<MorId> {
        self.morphisms
            .iter()
            .position(|m| m.name == name)
            .ok_or_else(|| Error::input(format!("unknown morphism {name:?} in category {}", self.name)))
    }

    /// `g ∘ f`, or `None` when `dst f ≠ src g`.
    pub fn compose(&self, g: MorId, f: MorId) -> Option<MorId> {
        self.comp[g * self.morphisms.len() + f]
    }

    /// Pairs `(f, g)` with `dst f = src g`, both non-identities.
    pub fn composable_pairs(&self) -> impl Iterator<Item = (MorId, MorId)> + '_ {
        let n_obj = self.objects.len();
        let n = self.morphisms.len();
        (n_obj..n).flat_map(move |f| (n_obj..n).filter_map(move |g| (self.dst(f) == self.src(g)).then_some((f, g))))
    }

    /// Morphisms `i → j` in canonical order: identity first, then presentation order.
    pub fn hom_set(&self, i: ObjId, j: ObjId) -> Vec<MorId> {
        self.morphisms().filter(|&m| self.src(m) == i && self.dst(m) == j).collect()
    }

    pub fn hom_set_names(&self, i: &str, j: &str) -> Result<Vec<String>> {
        let (i, j) = (self.object_id(i)?, self.object_id(j)?);
        Ok(self.hom_set(i, j).into_iter().map(|m| self.morphisms[m].name.clone()).collect())
    }

    /// Same objects and morphisms with source and target swapped.
    pub fn opposite(&self) -> FinCat {
        let n = self.morphisms.len();
        let mut comp = vec![None; n * n];
        for f in 0..n {
            for g in 0..n {
                comp[g * n + f] = self.comp[f * n + g];
            }
        }
        let name = match self.name.strip_suffix("^op") {
            Some(base) => base.to_string(),
            None => format!("{}^op", self.name),
        };
        FinCat {
            name,
            objects: self.objects.clone(),
            morphisms: self
                .morphisms
                .iter()
                .map(|m| Morphism { name: m.name.clone(), src: m.dst, dst: m.src })
                .collect(),
            comp,
        }
    }
}

/// Presentation-level opposite; the input must be valid.
pub fn opposite(pres: &FinCatPresentation) -> Result<FinCatPresentation> {
    Ok(FinCat::from_presentation(pres)?.opposite().to_presentation())
}

/// A functor between finite categories, stored as id tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatFunctor {
    source: Arc<FinCat>,
    target: Arc<FinCat>,
    on_objects: Vec<ObjId>,
    on_morphisms: Vec<MorId>,
}

impl CatFunctor {
    /// Builds a functor from name maps; identities may be omitted from
    /// `on_morphisms` and then follow `on_objects`. Laws are checked.
    pub fn from_names(
        source: Arc<FinCat>,
        target: Arc<FinCat>,
        on_objects: &BTreeMap<String, String>,
        on_morphisms: &BTreeMap<String, String>,
    ) -> Result<CatFunctor> {
        let f = Self::unchecked_from_names(source, target, on_objects, on_morphisms)?;
        f.validate().into_result()?;
        Ok(f)
    }

    pub(crate) fn unchecked_from_names(
        source: Arc<FinCat>,
        target: Arc<FinCat>,
        on_objects: &BTreeMap<String, String>,
        on_morphisms: &BTreeMap<String, String>,
    ) -> Result<CatFunctor> {
        for k in on_objects.keys() {
            source.object_id(k)?;
        }
        for k in on_morphisms.keys() {
            source.morphism_id(k)?;
        }
        let mut objs = Vec::with_capacity(source.num_objects());
        for o in source.objects() {
            let name = source.object_name(o);
            let image = on_objects
                .get(name)
                .ok_or_else(|| Error::input(format!("functor has no image for object {name:?}")))?;
            objs.push(target.object_id(image)?);
        }
        let mut mors = Vec::with_capacity(source.num_morphisms());
        for m in source.morphisms() {
            let name = source.morphism_name(m);
            match on_morphisms.get(name) {
                Some(image) => mors.push(target.morphism_id(image)?),
                None if source.is_identity(m) => mors.push(target.identity(objs[m])),
                None => return Err(Error::input(format!("functor has no image for morphism {name:?}"))),
            }
        }
        Ok(CatFunctor { source, target, on_objects: objs, on_morphisms: mors })
    }

    pub fn from_ids(
        source: Arc<FinCat>,
        target: Arc<FinCat>,
        on_objects: Vec<ObjId>,
        on_morphisms: Vec<MorId>,
    ) -> Result<CatFunctor> {
        if on_objects.len() != source.num_objects() || on_morphisms.len() != source.num_morphisms() {
            return Err(Error::input("functor tables are not total"));
        }
        if on_objects.iter().any(|&o| o >= target.num_objects())
            || on_morphisms.iter().any(|&m| m >= target.num_morphisms())
        {
            return Err(Error::input("functor table refers to a missing target cell"));
        }
        let f = CatFunctor { source, target, on_objects, on_morphisms };
        f.validate().into_result()?;
        Ok(f)
    }

    pub fn identity(cat: Arc<FinCat>) -> CatFunctor {
        CatFunctor {
            on_objects: cat.objects().collect(),
            on_morphisms: cat.morphisms().collect(),
            source: cat.clone(),
            target: cat,
        }
    }

    /// The functor from the terminal category picking object `o`.
    pub fn point(target: Arc<FinCat>, o: ObjId) -> CatFunctor {
        CatFunctor {
            source: Arc::new(fixtures::terminal()),
            on_objects: vec![o],
            on_morphisms: vec![target.identity(o)],
            target,
        }
    }

    /// The unique functor to the terminal category.
    pub fn to_terminal(source: Arc<FinCat>) -> CatFunctor {
        CatFunctor {
            on_objects: vec![0; source.num_objects()],
            on_morphisms: vec![0; source.num_morphisms()],
            source,
            target: Arc::new(fixtures::terminal()),
        }
    }

    pub fn source(&self) -> &Arc<FinCat> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FinCat> {
        &self.target
    }

    pub fn obj(&self, o: ObjId) -> ObjId {
        self.on_objects[o]
    }

    pub fn mor(&self, m: MorId) -> MorId {
        self.on_morphisms[m]
    }

    /// Exhaustive check of the functor laws.
    pub fn validate(&self) -> ValidationReport {
        let (s, t) = (&*self.source, &*self.target);
        let mut violations = Vec::new();
        for m in s.morphisms() {
            let image = self.on_morphisms[m];
            if t.src(image) != self.on_objects[s.src(m)] || t.dst(image) != self.on_objects[s.dst(m)] {
                violations.push(Violation::FunctorShape { morphism: s.morphism_name(m).to_string() });
            }
        }
        for o in s.objects() {
            if self.on_morphisms[s.identity(o)] != t.identity(self.on_objects[o]) {
                violations.push(Violation::FunctorIdentity { object: s.object_name(o).to_string() });
            }
        }
        if violations.is_empty() {
            for (f, g) in s.composable_pairs() {
                let gf = s.compose(g, f).expect("valid category");
                let images = t.compose(self.on_morphisms[g], self.on_morphisms[f]);
                if images != Some(self.on_morphisms[gf]) {
                    violations.push(Violation::FunctorComposite {
                        first: s.morphism_name(f).to_string(),
                        then: s.morphism_name(g).to_string(),
                    });
                }
            }
        }
        ValidationReport { violations }
    }
}

/// Validates a functor given by name maps. Non-total maps are input errors.
pub fn validate_functor(
    source: Arc<FinCat>,
    target: Arc<FinCat>,
    on_objects: &BTreeMap<String, String>,
    on_morphisms: &BTreeMap<String, String>,
) -> Result<ValidationReport> {
    Ok(CatFunctor::unchecked_from_names(source, target, on_objects, on_morphisms)?.validate())
}

/// Small categories used as fixtures throughout tests and the CLI.
pub mod fixtures {
    use super::*;

    pub(crate) fn build(
        name: &str,
        objects: &[&str],
        morphisms: &[(&str, &str, &str)],
        composition: &[(&str, &str, &str)],
    ) -> FinCatPresentation {
        FinCatPresentation {
            name: Some(name.to_string()),
            objects: objects.iter().map(|s| s.to_string()).collect(),
            morphisms: morphisms
                .iter()
                .map(|(n, s, d)| MorphismDecl { name: n.to_string(), src: s.to_string(), dst: d.to_string() })
                .collect(),
            composition: composition
                .iter()
                .map(|(f, g, h)| CompositionEntry { first: f.to_string(), then: g.to_string(), equals: h.to_string() })
                .collect(),
        }
    }

    pub(crate) fn valid(p: FinCatPresentation) -> FinCat {
        FinCat::from_presentation(&p).expect("fixture is valid")
    }

    pub fn empty_presentation() -> FinCatPresentation {
        build("empty", &[], &[], &[])
    }

    pub fn terminal_presentation() -> FinCatPresentation {
        build("terminal", &["•"], &[], &[])
    }

    pub fn arrow_presentation() -> FinCatPresentation {
        build("arrow", &["0", "1"], &[("f", "0", "1")], &[])
    }

    /// One object `•` and `e` with `e∘e = e`.
    pub fn walking_idempotent_presentation() -> FinCatPresentation {
        build("idempotent", &["•"], &[("e", "•", "•")], &[("e", "e", "e")])
    }

    /// `a →f b →h d`, `a →g c →k d`, with `h∘f = k∘g = diag`.
    pub fn commutative_square_presentation() -> FinCatPresentation {
        build(
            "square",
            &["a", "b", "c", "d"],
            &[("f", "a", "b"), ("g", "a", "c"), ("h", "b", "d"), ("k", "c", "d"), ("diag", "a", "d")],
            &[("f", "h", "diag"), ("g", "k", "diag")],
        )
    }

    pub fn discrete_presentation(n: usize) -> FinCatPresentation {
        let names: Vec<String> = (0..n).map(|k| k.to_string()).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        build(&format!("discrete{n}"), &refs, &[], &[])
    }

    pub fn empty() -> FinCat {
        valid(empty_presentation())
    }

    pub fn terminal() -> FinCat {
        valid(terminal_presentation())
    }

    pub fn arrow() -> FinCat {
        valid(arrow_presentation())
    }

    pub fn walking_idempotent() -> FinCat {
        valid(walking_idempotent_presentation())
    }

    pub fn commutative_square() -> FinCat {
        valid(commutative_square_presentation())
    }

    pub fn discrete(n: usize) -> FinCat {
        valid(discrete_presentation(n))
    }

    /// Looks up a fixture by the name used in input files.
    pub fn by_name(name: &str) -> Option<FinCat> {
        match name {
            "empty" => Some(empty()),
            "terminal" => Some(terminal()),
            "arrow" => Some(arrow()),
            "idempotent" => Some(walking_idempotent()),
            "square" => Some(commutative_square()),
            _ => name.strip_prefix("discrete").and_then(|n| n.parse().ok()).filter(|&n: &usize| n <= 16).map(discrete),
        }
    }

    /// The fixture categories every verification sweep runs over.
    pub fn standard() -> Vec<FinCat> {
        vec![terminal(), arrow(), walking_idempotent(), commutative_square()]
    }
}
