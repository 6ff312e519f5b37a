//! Symmetric monoidal closed base categories at finite scale.
//!
//! [`Base`] is the interface every construction in the crate is generic
//! over. Objects are plain sizes (a cardinality or a dimension); morphisms
//! are the instance's associated type. Two exact instances ship:
//!
//! * [`FinSet`]: finite sets `{0..n-1}`, cartesian product as tensor,
//!   morphisms are function tables.
//! * [`FinVect`]: coordinate spaces `F_p^n`, Kronecker product as tensor,
//!   morphisms are `dst × src` matrices.
//!
//! Pairs are encoded row-major (`(x, y) ↦ x·|b| + y`), which makes the
//! associator and both unitors identities.

use std::collections::HashSet;
use std::fmt;
use std::hash::Hash;

use crate::error::{Error, Result};
use crate::linalg::{self, Matrix, PrimeField};

/// Size limits for enumeration and materialization.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Largest hom-set (or candidate tuple set) that may be enumerated.
    pub max_hom: u128,
    /// Largest object (cardinality or dimension) that may be materialized.
    pub max_elems: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { max_hom: 1_000_000, max_elems: 1 << 24 }
    }
}

/// An equalizer `E → A ⇉ B` with the data needed to read off mediating maps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Equalizer<M> {
    pub carrier: usize,
    pub include: M,
    pair: (M, M),
    /// FinSet: unused. FinVect: coordinates where `include` restricts to the identity.
    sections: Vec<usize>,
}

/// A coequalizer `A ⇉ B → Q` with the data needed to read off mediating maps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coequalizer<M> {
    pub carrier: usize,
    pub project: M,
    pair: (M, M),
    /// One element (FinSet) or basis coordinate (FinVect) of `B` per quotient generator.
    sections: Vec<usize>,
}

impl<M> Coequalizer<M> {
    /// Chosen representative of each quotient generator.
    pub fn representatives(&self) -> &[usize] {
        &self.sections
    }
}

/// A finite bicomplete symmetric monoidal closed category.
pub trait Base: Clone + fmt::Debug + Send + Sync + 'static {
    type Mor: Clone + PartialEq + Eq + Hash + fmt::Debug + Send + Sync;

    /// Short name used in reports, e.g. `finset` or `finvect_2`.
    fn label(&self) -> String;
    fn caps(&self) -> Caps;

    fn src(&self, f: &Self::Mor) -> usize;
    fn dst(&self, f: &Self::Mor) -> usize;
    fn identity(&self, a: usize) -> Result<Self::Mor>;
    /// `g ∘ f`.
    fn compose(&self, g: &Self::Mor, f: &Self::Mor) -> Result<Self::Mor>;

    fn unit(&self) -> usize {
        1
    }
    fn tensor_obj(&self, a: usize, b: usize) -> Result<usize>;
    fn tensor_mor(&self, f: &Self::Mor, g: &Self::Mor) -> Result<Self::Mor>;
    /// `(a⊗b)⊗c → a⊗(b⊗c)`.
    fn associator(&self, a: usize, b: usize, c: usize) -> Result<Self::Mor>;
    /// `k⊗a → a`.
    fn lunitor(&self, a: usize) -> Result<Self::Mor>;
    /// `a⊗k → a`.
    fn runitor(&self, a: usize) -> Result<Self::Mor>;
    /// `a⊗b → b⊗a`.
    fn braiding(&self, a: usize, b: usize) -> Result<Self::Mor>;

    /// `[b, c]`.
    fn internal_hom(&self, b: usize, c: usize) -> Result<usize>;
    /// `f: a⊗b → c` to `a → [b, c]`.
    fn curry(&self, f: &Self::Mor, a: usize, b: usize) -> Result<Self::Mor>;
    /// `g: a → [b, c]` to `a⊗b → c`.
    fn uncurry(&self, g: &Self::Mor, b: usize, c: usize) -> Result<Self::Mor>;
    /// `[b, c]⊗b → c`.
    fn eval_mor(&self, b: usize, c: usize) -> Result<Self::Mor>;

    fn product_obj(&self, objs: &[usize]) -> Result<usize>;
    fn projection(&self, objs: &[usize], k: usize) -> Result<Self::Mor>;
    /// Mediating map `dom → ∏ objs` with the given legs.
    fn tuple(&self, dom: usize, objs: &[usize], legs: &[Self::Mor]) -> Result<Self::Mor>;
    fn coproduct_obj(&self, objs: &[usize]) -> Result<usize>;
    fn injection(&self, objs: &[usize], k: usize) -> Result<Self::Mor>;
    /// Mediating map `∐ objs → cod` with the given legs.
    fn cotuple(&self, cod: usize, objs: &[usize], legs: &[Self::Mor]) -> Result<Self::Mor>;

    fn equalizer(&self, f: &Self::Mor, g: &Self::Mor) -> Result<Equalizer<Self::Mor>>;
    fn coequalizer(&self, f: &Self::Mor, g: &Self::Mor) -> Result<Coequalizer<Self::Mor>>;
    /// Candidate mediating map for an equalizing leg (unchecked).
    fn read_off_equalizer(&self, eq: &Equalizer<Self::Mor>, leg: &Self::Mor) -> Result<Self::Mor>;
    /// Candidate mediating map for a coequalizing leg (unchecked).
    fn read_off_coequalizer(&self, q: &Coequalizer<Self::Mor>, leg: &Self::Mor) -> Result<Self::Mor>;

    /// `|hom(a, b)|`, or `None` on overflow.
    fn hom_count(&self, a: usize, b: usize) -> Option<u128>;
    /// All of `hom(a, b)` in canonical order (lexicographic tables / row-major entries).
    fn hom_enumerate(&self, a: usize, b: usize) -> Result<Vec<Self::Mor>>;
    /// Number of generalized elements `hom(k, a)`; the order of [`Base::hom_enumerate`]
    /// from the unit matches the element order of `a`.
    fn element_count(&self, a: usize) -> Option<u128> {
        self.hom_count(self.unit(), a)
    }
    fn inverse(&self, f: &Self::Mor) -> Option<Self::Mor>;
    fn is_iso(&self, f: &Self::Mor) -> bool {
        self.inverse(f).is_some()
    }
    /// Human-readable literal for reports.
    fn describe(&self, f: &Self::Mor) -> String;

    // Provided operations.

    fn product(&self, objs: &[usize]) -> Result<(usize, Vec<Self::Mor>)> {
        let carrier = self.product_obj(objs)?;
        let legs = (0..objs.len()).map(|k| self.projection(objs, k)).collect::<Result<_>>()?;
        Ok((carrier, legs))
    }

    fn coproduct(&self, objs: &[usize]) -> Result<(usize, Vec<Self::Mor>)> {
        let carrier = self.coproduct_obj(objs)?;
        let legs = (0..objs.len()).map(|k| self.injection(objs, k)).collect::<Result<_>>()?;
        Ok((carrier, legs))
    }

    /// The unique `u` with `include ∘ u = leg`; rejects legs that do not equalize.
    fn equalizer_factor(&self, eq: &Equalizer<Self::Mor>, leg: &Self::Mor) -> Result<Self::Mor> {
        let (f, g) = &eq.pair;
        if self.dst(leg) != self.src(f) {
            return Err(Error::precondition("equalizer leg has the wrong target"));
        }
        if self.compose(f, leg)? != self.compose(g, leg)? {
            return Err(Error::precondition("leg does not equalize the parallel pair"));
        }
        let u = self.read_off_equalizer(eq, leg)?;
        debug_assert_eq!(&self.compose(&eq.include, &u)?, leg);
        Ok(u)
    }

    /// The unique `u` with `u ∘ project = leg`; rejects legs that do not coequalize.
    fn coequalizer_factor(&self, q: &Coequalizer<Self::Mor>, leg: &Self::Mor) -> Result<Self::Mor> {
        let (f, g) = &q.pair;
        if self.src(leg) != self.dst(f) {
            return Err(Error::precondition("coequalizer leg has the wrong source"));
        }
        if self.compose(leg, f)? != self.compose(leg, g)? {
            return Err(Error::precondition("leg does not coequalize the parallel pair"));
        }
        let u = self.read_off_coequalizer(q, leg)?;
        debug_assert_eq!(&self.compose(&u, &q.project)?, leg);
        Ok(u)
    }

    /// `h ∘ g ∘ f` for a chain listed in application order.
    fn compose_all(&self, chain: &[&Self::Mor]) -> Result<Self::Mor> {
        let (first, rest) = chain.split_first().expect("non-empty chain");
        rest.iter().try_fold((*first).clone(), |acc, next| self.compose(next, &acc))
    }

    /// `[pre, post]: [a, c] → [a', c']` for `pre: a' → a`, `post: c → c'`,
    /// defined as the curry of `post ∘ eval ∘ ([a,c] ⊗ pre)`.
    fn hom_map(&self, pre: &Self::Mor, post: &Self::Mor) -> Result<Self::Mor> {
        let (a, a2) = (self.dst(pre), self.src(pre));
        let c = self.src(post);
        let hom = self.internal_hom(a, c)?;
        let body = self.compose_all(&[&self.tensor_mor(&self.identity(hom)?, pre)?, &self.eval_mor(a, c)?, post])?;
        self.curry(&body, hom, a2)
    }

    /// The element `k → [a, c]` naming `f: a → c`.
    fn name_of(&self, f: &Self::Mor) -> Result<Self::Mor> {
        let a = self.src(f);
        self.curry(&self.compose(f, &self.lunitor(a)?)?, self.unit(), a)
    }

    /// Inverse of [`Base::name_of`].
    fn unname(&self, u: &Self::Mor, a: usize, c: usize) -> Result<Self::Mor> {
        let l_inv = self.inverse(&self.lunitor(a)?).expect("unitor is invertible");
        self.compose(&self.uncurry(u, a, c)?, &l_inv)
    }

    /// Canonical iso `[k, c] → c`, `eval ∘ r⁻¹`.
    fn unit_hom_iso(&self, c: usize) -> Result<Self::Mor> {
        let hom = self.internal_hom(self.unit(), c)?;
        let r_inv = self.inverse(&self.runitor(hom)?).expect("unitor is invertible");
        self.compose(&self.eval_mor(self.unit(), c)?, &r_inv)
    }

    /// Transposes `f: a⊗b → c` along the braiding to `b⊗a → c`.
    fn swap_source(&self, f: &Self::Mor, a: usize, b: usize) -> Result<Self::Mor> {
        self.compose(f, &self.braiding(b, a)?)
    }

    fn terminal(&self) -> Result<usize> {
        self.product_obj(&[])
    }

    fn initial(&self) -> Result<usize> {
        self.coproduct_obj(&[])
    }
}

fn checked_size(what: &str, n: Option<usize>, caps: Caps) -> Result<usize> {
    match n {
        Some(n) if n <= caps.max_elems => Ok(n),
        Some(n) => Err(Error::resource(what, n as u128, caps.max_elems as u128)),
        None => Err(Error::resource(what, u128::MAX, caps.max_elems as u128)),
    }
}

fn hom_cap(count: Option<u128>, a: usize, b: usize, caps: Caps) -> Result<u128> {
    match count {
        Some(n) if n <= caps.max_hom => Ok(n),
        Some(n) => Err(Error::resource(format!("hom({a}, {b})"), n, caps.max_hom)),
        None => Err(Error::resource(format!("hom({a}, {b})"), u128::MAX, caps.max_hom)),
    }
}

fn checked_pow(base: usize, exp: usize) -> Option<u128> {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.checked_mul(base as u128)?;
    }
    Some(acc)
}

// ---------------------------------------------------------------------------
// FinSet

/// A function `{0..table.len()-1} → {0..dst-1}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SetMap {
    dst: usize,
    table: Vec<usize>,
}

impl fmt::Debug for SetMap {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(out, "{:?}:{}→{}", self.table, self.table.len(), self.dst)
    }
}

impl SetMap {
    pub fn new(dst: usize, table: Vec<usize>) -> Result<SetMap> {
        if let Some(bad) = table.iter().find(|&&v| v >= dst) {
            return Err(Error::input(format!("function value {bad} out of range for target of size {dst}")));
        }
        Ok(SetMap { dst, table })
    }

    pub fn src(&self) -> usize {
        self.table.len()
    }

    pub fn dst(&self) -> usize {
        self.dst
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn apply(&self, x: usize) -> usize {
        self.table[x]
    }
}

/// Finite sets and functions; tensor is the cartesian product.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FinSet {
    caps: Caps,
}

impl FinSet {
    pub fn new() -> Self {
        FinSet::default()
    }

    pub fn with_caps(caps: Caps) -> Self {
        FinSet { caps }
    }

    fn map(&self, dst: usize, table: Vec<usize>) -> SetMap {
        debug_assert!(table.iter().all(|&v| v < dst));
        SetMap { dst, table }
    }

    fn len_ok(&self, n: usize) -> Result<()> {
        checked_size("function table", Some(n), self.caps).map(|_| ())
    }

    fn strides(objs: &[usize]) -> Vec<usize> {
        let mut strides = vec![1usize; objs.len()];
        for k in (0..objs.len().saturating_sub(1)).rev() {
            strides[k] = strides[k + 1].saturating_mul(objs[k + 1]);
        }
        strides
    }

    /// Lexicographic index of a function table `b → c` (first entry most significant).
    pub fn encode_function(table: &[usize], c: usize) -> usize {
        table.iter().fold(0usize, |acc, &v| acc * c + v)
    }

    /// Inverse of [`FinSet::encode_function`] for a table of length `b`.
    pub fn decode_function(mut index: usize, b: usize, c: usize) -> Vec<usize> {
        let mut table = vec![0; b];
        for slot in table.iter_mut().rev() {
            *slot = index % c;
            index /= c;
        }
        table
    }
}

impl Base for FinSet {
    type Mor = SetMap;

    fn label(&self) -> String {
        "finset".to_string()
    }

    fn caps(&self) -> Caps {
        self.caps
    }

    fn src(&self, f: &SetMap) -> usize {
        f.src()
    }

    fn dst(&self, f: &SetMap) -> usize {
        f.dst
    }

    fn identity(&self, a: usize) -> Result<SetMap> {
        self.len_ok(a)?;
        Ok(self.map(a, (0..a).collect()))
    }

    fn compose(&self, g: &SetMap, f: &SetMap) -> Result<SetMap> {
        if f.dst != g.src() {
            return Err(Error::input(format!("cannot compose {}→{} after {}→{}", g.src(), g.dst, f.src(), f.dst)));
        }
        Ok(self.map(g.dst, f.table.iter().map(|&x| g.table[x]).collect()))
    }

    fn tensor_obj(&self, a: usize, b: usize) -> Result<usize> {
        checked_size("tensor product", a.checked_mul(b), self.caps)
    }

    fn tensor_mor(&self, f: &SetMap, g: &SetMap) -> Result<SetMap> {
        let src = self.tensor_obj(f.src(), g.src())?;
        let dst = self.tensor_obj(f.dst, g.dst)?;
        let mut table = Vec::with_capacity(src);
        for x in 0..f.src() {
            for y in 0..g.src() {
                table.push(f.table[x] * g.dst + g.table[y]);
            }
        }
        Ok(self.map(dst, table))
    }

    fn associator(&self, a: usize, b: usize, c: usize) -> Result<SetMap> {
        self.identity(self.tensor_obj(self.tensor_obj(a, b)?, c)?)
    }

    fn lunitor(&self, a: usize) -> Result<SetMap> {
        self.identity(a)
    }

    fn runitor(&self, a: usize) -> Result<SetMap> {
        self.identity(a)
    }

    fn braiding(&self, a: usize, b: usize) -> Result<SetMap> {
        let n = self.tensor_obj(a, b)?;
        let mut table = Vec::with_capacity(n);
        for x in 0..a {
            for y in 0..b {
                table.push(y * a + x);
            }
        }
        Ok(self.map(n, table))
    }

    fn internal_hom(&self, b: usize, c: usize) -> Result<usize> {
        let n = checked_pow(c, b).and_then(|n| usize::try_from(n).ok());
        checked_size(&format!("internal hom [{b}, {c}]"), n, self.caps)
    }

    fn curry(&self, f: &SetMap, a: usize, b: usize) -> Result<SetMap> {
        if f.src() != a * b {
            return Err(Error::input("curry: source is not a⊗b"));
        }
        let c = f.dst;
        let hom = self.internal_hom(b, c)?;
        let table = (0..a).map(|x| Self::encode_function(&f.table[x * b..(x + 1) * b], c)).collect();
        Ok(self.map(hom, table))
    }

    fn uncurry(&self, g: &SetMap, b: usize, c: usize) -> Result<SetMap> {
        let hom = self.internal_hom(b, c)?;
        if g.dst != hom {
            return Err(Error::input("uncurry: target is not [b, c]"));
        }
        let mut table = Vec::with_capacity(g.src() * b);
        for &code in &g.table {
            table.extend(Self::decode_function(code, b, c));
        }
        Ok(self.map(c, table))
    }

    fn eval_mor(&self, b: usize, c: usize) -> Result<SetMap> {
        let hom = self.internal_hom(b, c)?;
        let src = self.tensor_obj(hom, b)?;
        let mut table = Vec::with_capacity(src);
        for code in 0..hom {
            table.extend(Self::decode_function(code, b, c));
        }
        Ok(self.map(c, table))
    }

    fn product_obj(&self, objs: &[usize]) -> Result<usize> {
        let n = objs.iter().try_fold(1usize, |acc, &o| acc.checked_mul(o));
        checked_size("product", n, self.caps)
    }

    fn projection(&self, objs: &[usize], k: usize) -> Result<SetMap> {
        let n = self.product_obj(objs)?;
        let stride = Self::strides(objs)[k];
        Ok(self.map(objs[k], (0..n).map(|z| (z / stride) % objs[k]).collect()))
    }

    fn tuple(&self, dom: usize, objs: &[usize], legs: &[SetMap]) -> Result<SetMap> {
        if legs.len() != objs.len() {
            return Err(Error::input("tuple: wrong number of legs"));
        }
        for (leg, &o) in legs.iter().zip(objs) {
            if leg.src() != dom || leg.dst != o {
                return Err(Error::input("tuple: leg has the wrong source or target"));
            }
        }
        let n = self.product_obj(objs)?;
        self.len_ok(dom)?;
        let strides = Self::strides(objs);
        let table = (0..dom).map(|x| legs.iter().zip(&strides).map(|(leg, s)| leg.table[x] * s).sum()).collect();
        Ok(self.map(n, table))
    }

    fn coproduct_obj(&self, objs: &[usize]) -> Result<usize> {
        let n = objs.iter().try_fold(0usize, |acc, &o| acc.checked_add(o));
        checked_size("coproduct", n, self.caps)
    }

    fn injection(&self, objs: &[usize], k: usize) -> Result<SetMap> {
        let n = self.coproduct_obj(objs)?;
        let offset: usize = objs[..k].iter().sum();
        Ok(self.map(n, (0..objs[k]).map(|x| offset + x).collect()))
    }

    fn cotuple(&self, cod: usize, objs: &[usize], legs: &[SetMap]) -> Result<SetMap> {
        if legs.len() != objs.len() {
            return Err(Error::input("cotuple: wrong number of legs"));
        }
        let n = self.coproduct_obj(objs)?;
        let mut table = Vec::with_capacity(n);
        for (leg, &o) in legs.iter().zip(objs) {
            if leg.src() != o || leg.dst != cod {
                return Err(Error::input("cotuple: leg has the wrong source or target"));
            }
            table.extend_from_slice(&leg.table);
        }
        Ok(self.map(cod, table))
    }

    fn equalizer(&self, f: &SetMap, g: &SetMap) -> Result<Equalizer<SetMap>> {
        if f.src() != g.src() || f.dst != g.dst {
            return Err(Error::input("equalizer of non-parallel maps"));
        }
        let subset: Vec<usize> = (0..f.src()).filter(|&x| f.table[x] == g.table[x]).collect();
        Ok(Equalizer {
            carrier: subset.len(),
            include: self.map(f.src(), subset),
            pair: (f.clone(), g.clone()),
            sections: Vec::new(),
        })
    }

    fn read_off_equalizer(&self, eq: &Equalizer<SetMap>, leg: &SetMap) -> Result<SetMap> {
        let table = leg
            .table
            .iter()
            .map(|v| eq.include.table.binary_search(v).map_err(|_| Error::precondition("leg leaves the equalizer")))
            .collect::<Result<_>>()?;
        Ok(self.map(eq.carrier, table))
    }

    fn coequalizer(&self, f: &SetMap, g: &SetMap) -> Result<Coequalizer<SetMap>> {
        if f.src() != g.src() || f.dst != g.dst {
            return Err(Error::input("coequalizer of non-parallel maps"));
        }
        let mut classes = UnionFind::new(f.dst);
        for x in 0..f.src() {
            classes.union(f.table[x], g.table[x]);
        }
        // Roots are minimal elements, so scanning in order meets each class at its representative.
        let mut class_of_root = vec![usize::MAX; f.dst];
        let mut reps = Vec::new();
        let mut table = Vec::with_capacity(f.dst);
        for y in 0..f.dst {
            let root = classes.find(y);
            if class_of_root[root] == usize::MAX {
                class_of_root[root] = reps.len();
                reps.push(y);
            }
            table.push(class_of_root[root]);
        }
        Ok(Coequalizer {
            carrier: reps.len(),
            project: self.map(reps.len(), table),
            pair: (f.clone(), g.clone()),
            sections: reps,
        })
    }

    fn read_off_coequalizer(&self, q: &Coequalizer<SetMap>, leg: &SetMap) -> Result<SetMap> {
        Ok(self.map(leg.dst, q.sections.iter().map(|&y| leg.table[y]).collect()))
    }

    fn hom_count(&self, a: usize, b: usize) -> Option<u128> {
        checked_pow(b, a)
    }

    fn hom_enumerate(&self, a: usize, b: usize) -> Result<Vec<SetMap>> {
        let n = hom_cap(self.hom_count(a, b), a, b, self.caps)? as usize;
        Ok((0..n).map(|code| self.map(b, Self::decode_function(code, a, b))).collect())
    }

    fn inverse(&self, f: &SetMap) -> Option<SetMap> {
        if f.src() != f.dst {
            return None;
        }
        let mut inv = vec![usize::MAX; f.dst];
        for (x, &y) in f.table.iter().enumerate() {
            if inv[y] != usize::MAX {
                return None;
            }
            inv[y] = x;
        }
        Some(self.map(f.src(), inv))
    }

    fn describe(&self, f: &SetMap) -> String {
        format!("{:?}", f.table)
    }
}

/// Disjoint sets whose root is always the minimal element of its class.
struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = x;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }
}

// ---------------------------------------------------------------------------
// FinVect_p

/// Finite-dimensional coordinate spaces over `F_p`; tensor is the Kronecker product.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinVect {
    field: PrimeField,
    caps: Caps,
}

impl FinVect {
    pub fn new(p: u32) -> Result<Self> {
        Ok(FinVect { field: PrimeField::new(p)?, caps: Caps::default() })
    }

    pub fn with_caps(p: u32, caps: Caps) -> Result<Self> {
        Ok(FinVect { field: PrimeField::new(p)?, caps })
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn p(&self) -> u32 {
        self.field.modulus()
    }

    /// Matrix literal from rows; entries are reduced mod p.
    pub fn matrix(&self, rows: &[Vec<i64>], cols: usize) -> Result<Matrix> {
        let reduced: Vec<Vec<u32>> = rows.iter().map(|r| r.iter().map(|&x| self.field.reduce(x)).collect()).collect();
        Matrix::from_rows(&reduced, cols)
    }

    fn dim_ok(&self, what: &str, n: Option<usize>) -> Result<usize> {
        checked_size(what, n, self.caps)
    }

    fn entries_ok(&self, rows: usize, cols: usize) -> Result<()> {
        self.dim_ok("matrix entries", rows.checked_mul(cols)).map(|_| ())
    }

    fn offsets(objs: &[usize]) -> Vec<usize> {
        objs.iter()
            .scan(0, |acc, &o| {
                let start = *acc;
                *acc += o;
                Some(start)
            })
            .collect()
    }

    fn decode_entries(&self, mut index: u128, len: usize) -> Vec<u32> {
        let p = self.p() as u128;
        let mut data = vec![0u32; len];
        for slot in data.iter_mut().rev() {
            *slot = (index % p) as u32;
            index /= p;
        }
        data
    }
}

impl Base for FinVect {
    type Mor = Matrix;

    fn label(&self) -> String {
        format!("finvect_{}", self.p())
    }

    fn caps(&self) -> Caps {
        self.caps
    }

    fn src(&self, f: &Matrix) -> usize {
        f.cols()
    }

    fn dst(&self, f: &Matrix) -> usize {
        f.rows()
    }

    fn identity(&self, a: usize) -> Result<Matrix> {
        self.entries_ok(a, a)?;
        Ok(Matrix::identity(a))
    }

    fn compose(&self, g: &Matrix, f: &Matrix) -> Result<Matrix> {
        if f.rows() != g.cols() {
            return Err(Error::input(format!(
                "cannot compose {}→{} after {}→{}",
                g.cols(),
                g.rows(),
                f.cols(),
                f.rows()
            )));
        }
        Ok(g.mul(f, self.field))
    }

    fn tensor_obj(&self, a: usize, b: usize) -> Result<usize> {
        self.dim_ok("tensor product", a.checked_mul(b))
    }

    fn tensor_mor(&self, f: &Matrix, g: &Matrix) -> Result<Matrix> {
        let rows = self.tensor_obj(f.rows(), g.rows())?;
        let cols = self.tensor_obj(f.cols(), g.cols())?;
        self.entries_ok(rows, cols)?;
        Ok(f.kronecker(g, self.field))
    }

    fn associator(&self, a: usize, b: usize, c: usize) -> Result<Matrix> {
        self.identity(self.tensor_obj(self.tensor_obj(a, b)?, c)?)
    }

    fn lunitor(&self, a: usize) -> Result<Matrix> {
        self.identity(a)
    }

    fn runitor(&self, a: usize) -> Result<Matrix> {
        self.identity(a)
    }

    fn braiding(&self, a: usize, b: usize) -> Result<Matrix> {
        let n = self.tensor_obj(a, b)?;
        self.entries_ok(n, n)?;
        let mut perm = Vec::with_capacity(n);
        for x in 0..a {
            for y in 0..b {
                perm.push(y * a + x);
            }
        }
        Ok(Matrix::permutation(&perm, n))
    }

    fn internal_hom(&self, b: usize, c: usize) -> Result<usize> {
        self.dim_ok(&format!("internal hom [{b}, {c}]"), b.checked_mul(c))
    }

    fn curry(&self, f: &Matrix, a: usize, b: usize) -> Result<Matrix> {
        if f.cols() != a * b {
            return Err(Error::input("curry: source is not a⊗b"));
        }
        let c = f.rows();
        let hom = self.internal_hom(b, c)?;
        let mut out = Matrix::zeros(hom, a);
        for x in 0..a {
            for r in 0..c {
                for s in 0..b {
                    out.set(r * b + s, x, f.get(r, x * b + s));
                }
            }
        }
        Ok(out)
    }

    fn uncurry(&self, g: &Matrix, b: usize, c: usize) -> Result<Matrix> {
        let hom = self.internal_hom(b, c)?;
        if g.rows() != hom {
            return Err(Error::input("uncurry: target is not [b, c]"));
        }
        let a = g.cols();
        let mut out = Matrix::zeros(c, a * b);
        for x in 0..a {
            for r in 0..c {
                for s in 0..b {
                    out.set(r, x * b + s, g.get(r * b + s, x));
                }
            }
        }
        Ok(out)
    }

    fn eval_mor(&self, b: usize, c: usize) -> Result<Matrix> {
        let hom = self.internal_hom(b, c)?;
        let src = self.tensor_obj(hom, b)?;
        self.entries_ok(c, src)?;
        let mut out = Matrix::zeros(c, src);
        for r in 0..c {
            for s in 0..b {
                out.set(r, (r * b + s) * b + s, 1);
            }
        }
        Ok(out)
    }

    fn product_obj(&self, objs: &[usize]) -> Result<usize> {
        self.dim_ok("direct sum", objs.iter().try_fold(0usize, |acc, &o| acc.checked_add(o)))
    }

    fn projection(&self, objs: &[usize], k: usize) -> Result<Matrix> {
        let n = self.product_obj(objs)?;
        let offset = Self::offsets(objs)[k];
        let mut out = Matrix::zeros(objs[k], n);
        for x in 0..objs[k] {
            out.set(x, offset + x, 1);
        }
        Ok(out)
    }

    fn tuple(&self, dom: usize, objs: &[usize], legs: &[Matrix]) -> Result<Matrix> {
        if legs.len() != objs.len() {
            return Err(Error::input("tuple: wrong number of legs"));
        }
        for (leg, &o) in legs.iter().zip(objs) {
            if leg.cols() != dom || leg.rows() != o {
                return Err(Error::input("tuple: leg has the wrong source or target"));
            }
        }
        self.product_obj(objs)?;
        Ok(Matrix::vstack(legs, dom))
    }

    fn coproduct_obj(&self, objs: &[usize]) -> Result<usize> {
        self.product_obj(objs)
    }

    fn injection(&self, objs: &[usize], k: usize) -> Result<Matrix> {
        Ok(self.projection(objs, k)?.transpose())
    }

    fn cotuple(&self, cod: usize, objs: &[usize], legs: &[Matrix]) -> Result<Matrix> {
        if legs.len() != objs.len() {
            return Err(Error::input("cotuple: wrong number of legs"));
        }
        for (leg, &o) in legs.iter().zip(objs) {
            if leg.cols() != o || leg.rows() != cod {
                return Err(Error::input("cotuple: leg has the wrong source or target"));
            }
        }
        self.coproduct_obj(objs)?;
        Ok(Matrix::hstack(legs, cod))
    }

    fn equalizer(&self, f: &Matrix, g: &Matrix) -> Result<Equalizer<Matrix>> {
        if f.rows() != g.rows() || f.cols() != g.cols() {
            return Err(Error::input("equalizer of non-parallel maps"));
        }
        let (basis, free) = linalg::kernel(&f.sub(g, self.field), self.field);
        Ok(Equalizer { carrier: basis.cols(), include: basis, pair: (f.clone(), g.clone()), sections: free })
    }

    fn read_off_equalizer(&self, eq: &Equalizer<Matrix>, leg: &Matrix) -> Result<Matrix> {
        Ok(leg.select_rows(&eq.sections))
    }

    fn coequalizer(&self, f: &Matrix, g: &Matrix) -> Result<Coequalizer<Matrix>> {
        if f.rows() != g.rows() || f.cols() != g.cols() {
            return Err(Error::input("coequalizer of non-parallel maps"));
        }
        let (proj, rest) = linalg::cokernel(&f.sub(g, self.field), self.field);
        Ok(Coequalizer { carrier: proj.rows(), project: proj, pair: (f.clone(), g.clone()), sections: rest })
    }

    fn read_off_coequalizer(&self, q: &Coequalizer<Matrix>, leg: &Matrix) -> Result<Matrix> {
        Ok(leg.select_cols(&q.sections))
    }

    fn hom_count(&self, a: usize, b: usize) -> Option<u128> {
        checked_pow(self.p() as usize, a.checked_mul(b)?)
    }

    fn hom_enumerate(&self, a: usize, b: usize) -> Result<Vec<Matrix>> {
        let n = hom_cap(self.hom_count(a, b), a, b, self.caps)?;
        Ok((0..n).map(|code| Matrix::from_data(b, a, self.decode_entries(code, a * b))).collect())
    }

    fn inverse(&self, f: &Matrix) -> Option<Matrix> {
        f.inverse(self.field)
    }

    fn describe(&self, f: &Matrix) -> String {
        format!("{:?}", f.to_rows())
    }
}

/// Checks that a family of morphisms has no duplicates; used by bijection checks.
pub fn all_distinct<M: Hash + Eq>(items: &[M]) -> bool {
    let mut seen = HashSet::with_capacity(items.len());
    items.iter().all(|m| seen.insert(m))
}
