//! Input documents: categories, functors into the base, and functors between
//! index categories. Every document is one JSON object; the kind is decided
//! by its keys.

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Arc;

use serde::Deserialize;
use serde_json::Value;
use yoneda_core::basecat::Base;
use yoneda_core::fincat::fixtures;
use yoneda_core::{CatFunctor, Error, FinCat, FinCatPresentation, FinSet, FinVect, MFunctor, Matrix, Result, SetMap};

/// A category given by name (built-in or loaded earlier) or written inline.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum CatRef {
    Name(String),
    Inline(FinCatPresentation),
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FunctorDoc {
    #[serde(default)]
    pub name: Option<String>,
    pub category: CatRef,
    #[serde(default)]
    pub base: Option<String>,
    pub on_objects: BTreeMap<String, usize>,
    #[serde(default)]
    pub on_morphisms: BTreeMap<String, Value>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CatFunctorDoc {
    #[serde(default)]
    pub name: Option<String>,
    pub source: CatRef,
    pub target: CatRef,
    pub on_objects: BTreeMap<String, String>,
    #[serde(default)]
    pub on_morphisms: BTreeMap<String, String>,
}

#[derive(Debug, Clone)]
pub enum Document {
    Category(FinCatPresentation),
    Functor(FunctorDoc),
    CatFunctor(CatFunctorDoc),
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::Category(_) => "category",
            Document::Functor(_) => "functor",
            Document::CatFunctor(_) => "index functor",
        }
    }
}

fn located(path: &Path, e: serde_json::Error) -> Error {
    Error::Input(format!("{}:{}:{}: {e}", path.display(), e.line(), e.column()))
}

pub fn read_document(path: &Path) -> Result<Document> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Input(format!("{}: {e}", path.display())))?;
    let value: Value = serde_json::from_str(&text).map_err(|e| located(path, e))?;
    let obj = value.as_object().ok_or_else(|| Error::Input(format!("{}: expected a JSON object", path.display())))?;
    let parsed = if obj.contains_key("objects") {
        serde_json::from_value(value).map(Document::Category)
    } else if obj.contains_key("category") {
        serde_json::from_value(value).map(Document::Functor)
    } else if obj.contains_key("source") {
        serde_json::from_value(value).map(Document::CatFunctor)
    } else {
        return Err(Error::Input(format!(
            "{}: not a category (objects), functor (category) or index functor (source)",
            path.display()
        )));
    };
    // Structural errors surface after the syntax pass, so point at the file.
    parsed.map_err(|e| Error::Input(format!("{}: {e}", path.display())))
}

/// Categories known by name: user files shadow the built-in fixtures.
#[derive(Debug, Default)]
pub struct Catalog {
    named: BTreeMap<String, Arc<FinCat>>,
}

impl Catalog {
    pub fn register(&mut self, cat: FinCat) -> Arc<FinCat> {
        let cat = Arc::new(cat);
        self.named.insert(cat.name().to_string(), cat.clone());
        cat
    }

    pub fn load_category(&mut self, path: &Path) -> Result<Arc<FinCat>> {
        match read_document(path)? {
            Document::Category(p) => Ok(self.register(FinCat::from_presentation(&p)?)),
            other => Err(Error::Input(format!("{}: expected a category, found a {}", path.display(), other.kind()))),
        }
    }

    pub fn resolve(&self, r: &CatRef) -> Result<Arc<FinCat>> {
        match r {
            CatRef::Inline(p) => Ok(Arc::new(FinCat::from_presentation(p)?)),
            CatRef::Name(n) => self
                .named
                .get(n)
                .cloned()
                .or_else(|| fixtures::by_name(n).map(Arc::new))
                .ok_or_else(|| Error::Input(format!("unknown category {n:?}"))),
        }
    }

    /// A name, or a path to a category file.
    pub fn resolve_arg(&mut self, arg: &str) -> Result<Arc<FinCat>> {
        if Path::new(arg).is_file() {
            self.load_category(Path::new(arg))
        } else {
            self.resolve(&CatRef::Name(arg.to_string()))
        }
    }

    pub fn cat_functor(&self, doc: &CatFunctorDoc) -> Result<CatFunctor> {
        CatFunctor::from_names(
            self.resolve(&doc.source)?,
            self.resolve(&doc.target)?,
            &doc.on_objects,
            &doc.on_morphisms,
        )
    }

    /// `point:<cat>:<object>`, `identity:<cat>`, `terminal:<cat>`, or a path
    /// to an index-functor file.
    pub fn phi(&mut self, spec: &str) -> Result<CatFunctor> {
        if Path::new(spec).is_file() {
            return match read_document(Path::new(spec))? {
                Document::CatFunctor(doc) => self.cat_functor(&doc),
                other => Err(Error::Input(format!("{spec}: expected an index functor, found a {}", other.kind()))),
            };
        }
        let parts: Vec<&str> = spec.split(':').collect();
        match parts.as_slice() {
            ["point", cat, obj] => {
                let cat = self.resolve_arg(cat)?;
                let o = cat.object_id(obj)?;
                Ok(CatFunctor::point(cat, o))
            }
            ["identity", cat] => Ok(CatFunctor::identity(self.resolve_arg(cat)?)),
            ["terminal", cat] => Ok(CatFunctor::to_terminal(self.resolve_arg(cat)?)),
            _ => Err(Error::Input(format!(
                "bad --phi {spec:?}: expected a file, point:<cat>:<obj>, identity:<cat> or terminal:<cat>"
            ))),
        }
    }
}

/// A base category the CLI can read morphism literals for.
pub trait LiteralBase: Base {
    /// Reads the image of a morphism `src → dst`.
    fn parse_mor(&self, v: &Value, src: usize, dst: usize, what: &str) -> Result<Self::Mor>;
    fn render_mor(&self, m: &Self::Mor) -> Value;
}

fn integers(v: &Value, what: &str) -> Result<Vec<i64>> {
    v.as_array()
        .ok_or_else(|| Error::Input(format!("{what}: expected a list of integers")))?
        .iter()
        .map(|x| x.as_i64().ok_or_else(|| Error::Input(format!("{what}: expected an integer, found {x}"))))
        .collect()
}

impl LiteralBase for FinSet {
    fn parse_mor(&self, v: &Value, src: usize, dst: usize, what: &str) -> Result<SetMap> {
        let table = integers(v, what)?;
        if table.len() != src {
            return Err(Error::Input(format!("{what}: table has length {}, expected {src}", table.len())));
        }
        if let Some(bad) = table.iter().find(|&&x| x < 0 || x as usize >= dst) {
            return Err(Error::Input(format!("{what}: value {bad} is outside 0..{dst}")));
        }
        SetMap::new(dst, table.into_iter().map(|x| x as usize).collect())
    }

    fn render_mor(&self, m: &SetMap) -> Value {
        Value::from(m.table().to_vec())
    }
}

impl LiteralBase for FinVect {
    /// A `dst × src` matrix as a list of rows; entries are reduced mod `p`.
    fn parse_mor(&self, v: &Value, src: usize, dst: usize, what: &str) -> Result<Matrix> {
        let rows: Vec<Vec<i64>> = v
            .as_array()
            .ok_or_else(|| Error::Input(format!("{what}: expected a list of rows")))?
            .iter()
            .map(|r| integers(r, what))
            .collect::<Result<_>>()?;
        if rows.len() != dst || rows.iter().any(|r| r.len() != src) {
            return Err(Error::Input(format!("{what}: matrix is not {dst}×{src}")));
        }
        self.matrix(&rows, src)
    }

    fn render_mor(&self, m: &Matrix) -> Value {
        Value::from(m.to_rows())
    }
}

/// Builds a functor into `base`; identities may be omitted.
pub fn build_functor<B: LiteralBase>(base: &B, catalog: &Catalog, doc: &FunctorDoc) -> Result<MFunctor<B::Mor>> {
    let cat = catalog.resolve(&doc.category)?;
    if let Some(b) = &doc.base {
        if *b != base.label() {
            return Err(Error::Input(format!("functor declares base {b:?} but the run uses {}", base.label())));
        }
    }
    for k in doc.on_objects.keys() {
        cat.object_id(k)?;
    }
    for k in doc.on_morphisms.keys() {
        cat.morphism_id(k)?;
    }
    let objs: Vec<usize> = cat
        .objects()
        .map(|o| {
            let name = cat.object_name(o);
            doc.on_objects.get(name).copied().ok_or_else(|| Error::Input(format!("no size for object {name:?}")))
        })
        .collect::<Result<_>>()?;
    let mors = cat
        .morphisms()
        .map(|f| {
            let name = cat.morphism_name(f);
            let (s, d) = (objs[cat.src(f)], objs[cat.dst(f)]);
            match doc.on_morphisms.get(name) {
                Some(v) => base.parse_mor(v, s, d, &format!("image of {name}")),
                None if cat.is_identity(f) => base.identity(s),
                None => Err(Error::Input(format!("no image for morphism {name:?}"))),
            }
        })
        .collect::<Result<_>>()?;
    MFunctor::new(base, cat, objs, mors)
}

/// Reads a functor file.
pub fn load_functor<B: LiteralBase>(base: &B, catalog: &Catalog, path: &Path) -> Result<MFunctor<B::Mor>> {
    match read_document(path)? {
        Document::Functor(doc) => build_functor(base, catalog, &doc).map_err(|e| prefix(path, e)),
        other => Err(Error::Input(format!("{}: expected a functor, found a {}", path.display(), other.kind()))),
    }
}

/// Prefixes an error message with the file it came from.
pub fn prefix(path: &Path, e: Error) -> Error {
    let p = path.display();
    match e {
        Error::Input(m) => Error::Input(format!("{p}: {m}")),
        Error::Invalid(m) => Error::Invalid(format!("{p}: {m}")),
        Error::Precondition(m) => Error::Precondition(format!("{p}: {m}")),
        other => other,
    }
}
