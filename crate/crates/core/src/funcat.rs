//! The functor category `𝓜^I`: functors `I → 𝓜`, natural transformations,
//! the `𝓜`-action and exponent, and the map object `map(M, N) = ∫_i [M_i, N_i]`.
//!
//! Functors and transformations are plain tables; every operation takes the
//! base category as an argument and interprets the tables through it.

use std::sync::Arc;

use crate::basecat::Base;
use crate::ends::{arrows_by_depth, compute_end, search_families, Bifunctor, EndResult};
use crate::error::{Error, Result};
use crate::fincat::{FinCat, MorId, ObjId, ValidationReport, Violation};
use crate::report::{Label, Report};

/// A functor `I → 𝓜`. `mors` is indexed by morphism id, identities included.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MFunctor<M> {
    index: Arc<FinCat>,
    objs: Vec<usize>,
    mors: Vec<M>,
}

/// Components `τ_i: M_i → N_i`, indexed by object id.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NatTrans<M> {
    pub components: Vec<M>,
}

impl<M: Clone + Eq> MFunctor<M> {
    /// Builds and validates a functor from images of all morphisms.
    pub fn new<B: Base<Mor = M>>(base: &B, index: Arc<FinCat>, objs: Vec<usize>, mors: Vec<M>) -> Result<Self> {
        let f = Self::unchecked(index, objs, mors)?;
        f.validate(base)?.into_result()?;
        Ok(f)
    }

    pub(crate) fn unchecked(index: Arc<FinCat>, objs: Vec<usize>, mors: Vec<M>) -> Result<Self> {
        if objs.len() != index.num_objects() || mors.len() != index.num_morphisms() {
            return Err(Error::input(format!(
                "functor over {} needs {} objects and {} morphisms",
                index.name(),
                index.num_objects(),
                index.num_morphisms()
            )));
        }
        Ok(MFunctor { index, objs, mors })
    }

    /// Identities are synthesized; `generators` lists images of the
    /// non-identity morphisms in id order.
    pub fn from_generators<B: Base<Mor = M>>(
        base: &B,
        index: Arc<FinCat>,
        objs: Vec<usize>,
        generators: Vec<M>,
    ) -> Result<Self> {
        if generators.len() != index.num_morphisms() - index.num_objects() {
            return Err(Error::input("wrong number of morphism images"));
        }
        if objs.len() != index.num_objects() {
            return Err(Error::input("wrong number of object images"));
        }
        let mut mors: Vec<M> = objs.iter().map(|&o| base.identity(o)).collect::<Result<_>>()?;
        mors.extend(generators);
        Self::new(base, index, objs, mors)
    }

    /// Tabulates `obj` and `mor` over the index category and validates.
    pub fn from_fn<B: Base<Mor = M>>(
        base: &B,
        index: Arc<FinCat>,
        mut obj: impl FnMut(ObjId) -> Result<usize>,
        mut mor: impl FnMut(MorId) -> Result<M>,
    ) -> Result<Self> {
        let objs = index.objects().map(&mut obj).collect::<Result<_>>()?;
        let mors = index.morphisms().map(&mut mor).collect::<Result<_>>()?;
        Self::new(base, index, objs, mors)
    }

    pub fn constant<B: Base<Mor = M>>(base: &B, index: Arc<FinCat>, n: usize) -> Result<Self> {
        let id = base.identity(n)?;
        let objs = vec![n; index.num_objects()];
        let mors = vec![id; index.num_morphisms()];
        Self::new(base, index, objs, mors)
    }

    pub fn index(&self) -> &Arc<FinCat> {
        &self.index
    }

    pub fn obj(&self, i: ObjId) -> usize {
        self.objs[i]
    }

    pub fn objs(&self) -> &[usize] {
        &self.objs
    }

    pub fn mor(&self, f: MorId) -> &M {
        &self.mors[f]
    }

    /// Exhaustive functor-law check; shape errors are reported as violations.
    pub fn validate<B: Base<Mor = M>>(&self, base: &B) -> Result<ValidationReport> {
        let cat = &*self.index;
        let mut violations = Vec::new();
        for f in cat.morphisms() {
            let m = &self.mors[f];
            if base.src(m) != self.objs[cat.src(f)] || base.dst(m) != self.objs[cat.dst(f)] {
                violations.push(Violation::FunctorShape { morphism: cat.morphism_name(f).to_string() });
            }
        }
        if !violations.is_empty() {
            return Ok(ValidationReport { violations });
        }
        for o in cat.objects() {
            if self.mors[cat.identity(o)] != base.identity(self.objs[o])? {
                violations.push(Violation::FunctorIdentity { object: cat.object_name(o).to_string() });
            }
        }
        for (f, g) in cat.composable_pairs() {
            let gf = cat.compose(g, f).expect("valid category");
            if base.compose(&self.mors[g], &self.mors[f])? != self.mors[gf] {
                violations.push(Violation::FunctorComposite {
                    first: cat.morphism_name(f).to_string(),
                    then: cat.morphism_name(g).to_string(),
                });
            }
        }
        Ok(ValidationReport { violations })
    }

    /// Sizes per object, e.g. `(2,3)`.
    pub fn shape(&self) -> String {
        let parts: Vec<String> = self.objs.iter().map(|o| o.to_string()).collect();
        format!("({})", parts.join(","))
    }

    /// Precomposition `M ∘ Φ` along `Φ: J → I`.
    pub fn precompose(&self, phi: &crate::fincat::CatFunctor) -> Result<MFunctor<M>> {
        if **phi.target() != *self.index {
            return Err(Error::input("precomposition along a functor with the wrong target"));
        }
        let src = phi.source().clone();
        let objs = src.objects().map(|o| self.objs[phi.obj(o)]).collect();
        let mors = src.morphisms().map(|f| self.mors[phi.mor(f)].clone()).collect();
        MFunctor::unchecked(src, objs, mors)
    }
}

impl<M: Clone + Eq> NatTrans<M> {
    pub fn new(components: Vec<M>) -> Self {
        NatTrans { components }
    }

    pub fn component(&self, i: ObjId) -> &M {
        &self.components[i]
    }

    pub fn identity<B: Base<Mor = M>>(base: &B, m: &MFunctor<M>) -> Result<Self> {
        Ok(NatTrans { components: m.objs.iter().map(|&o| base.identity(o)).collect::<Result<_>>()? })
    }

    /// Vertical composite `self ∘ first`.
    pub fn after<B: Base<Mor = M>>(&self, base: &B, first: &NatTrans<M>) -> Result<Self> {
        let components =
            self.components.iter().zip(&first.components).map(|(g, f)| base.compose(g, f)).collect::<Result<_>>()?;
        Ok(NatTrans { components })
    }

    /// Precomposition with `Φ`.
    pub fn whisker(&self, phi: &crate::fincat::CatFunctor) -> Self {
        NatTrans { components: phi.source().objects().map(|o| self.components[phi.obj(o)].clone()).collect() }
    }

    /// Every component an isomorphism.
    pub fn is_iso<B: Base<Mor = M>>(&self, base: &B) -> bool {
        self.components.iter().all(|c| base.is_iso(c))
    }
}

/// First morphism of `I` whose naturality square fails, if any. Components
/// with the wrong shape are an input error.
pub fn naturality_failure<B: Base>(
    base: &B,
    src: &MFunctor<B::Mor>,
    dst: &MFunctor<B::Mor>,
    tau: &NatTrans<B::Mor>,
) -> Result<Option<MorId>> {
    let cat = &*src.index;
    if tau.components.len() != cat.num_objects() {
        return Err(Error::input("natural transformation has the wrong number of components"));
    }
    for i in cat.objects() {
        let c = &tau.components[i];
        if base.src(c) != src.obj(i) || base.dst(c) != dst.obj(i) {
            return Err(Error::input(format!("component at {} has the wrong source or target", cat.object_name(i))));
        }
    }
    for f in cat.non_identity_morphisms() {
        let (i, j) = (cat.src(f), cat.dst(f));
        let lhs = base.compose(dst.mor(f), &tau.components[i])?;
        let rhs = base.compose(&tau.components[j], src.mor(f))?;
        if lhs != rhs {
            return Ok(Some(f));
        }
    }
    Ok(None)
}

pub fn is_natural<B: Base>(
    base: &B,
    src: &MFunctor<B::Mor>,
    dst: &MFunctor<B::Mor>,
    tau: &NatTrans<B::Mor>,
) -> Result<bool> {
    Ok(naturality_failure(base, src, dst, tau)?.is_none())
}

fn same_index<M>(a: &MFunctor<M>, b: &MFunctor<M>) -> Result<()> {
    if a.index != b.index {
        return Err(Error::input(format!(
            "functors live over different index categories ({} and {})",
            a.index.name(),
            b.index.name()
        )));
    }
    Ok(())
}

/// All natural transformations `M → N`, in lexicographic order of component
/// indices (object order, each component in `hom_enumerate` order).
///
/// Depth-first over objects, pruning on each naturality square as soon as
/// both of its components are chosen. The number of search nodes is capped
/// by `max_hom`.
pub fn nat_hom<B: Base>(base: &B, m: &MFunctor<B::Mor>, n: &MFunctor<B::Mor>) -> Result<Vec<NatTrans<B::Mor>>> {
    same_index(m, n)?;
    let cat = &*m.index;
    let choices: Vec<Vec<B::Mor>> =
        cat.objects().map(|i| base.hom_enumerate(m.obj(i), n.obj(i))).collect::<Result<_>>()?;
    let sizes: Vec<usize> = choices.iter().map(Vec::len).collect();
    let (arrows, checks) = arrows_by_depth(cat);
    let what = format!("natural transformations {} → {}", m.shape(), n.shape());
    let found = search_families(&sizes, &checks, base.caps().max_hom, &what, |k, picked| {
        let f = arrows[k];
        let (i, j) = (cat.src(f), cat.dst(f));
        let (ti, tj) = (&choices[i][picked[i]], &choices[j][picked[j]]);
        Ok(base.compose(n.mor(f), ti)? == base.compose(tj, m.mor(f))?)
    })?;
    Ok(found
        .into_iter()
        .map(|p| NatTrans { components: p.iter().enumerate().map(|(o, &k)| choices[o][k].clone()).collect() })
        .collect())
}

/// `(m⊗M)_i = m ⊗ M_i`, on morphisms `id_m ⊗ M(f)`.
pub fn act<B: Base>(base: &B, m: usize, functor: &MFunctor<B::Mor>) -> Result<MFunctor<B::Mor>> {
    let id = base.identity(m)?;
    let objs = functor.objs.iter().map(|&o| base.tensor_obj(m, o)).collect::<Result<_>>()?;
    let mors = functor.mors.iter().map(|f| base.tensor_mor(&id, f)).collect::<Result<_>>()?;
    MFunctor::unchecked(functor.index.clone(), objs, mors)
}

/// `(M⊗m)_i = M_i ⊗ m`.
pub fn act_right<B: Base>(base: &B, functor: &MFunctor<B::Mor>, m: usize) -> Result<MFunctor<B::Mor>> {
    let id = base.identity(m)?;
    let objs = functor.objs.iter().map(|&o| base.tensor_obj(o, m)).collect::<Result<_>>()?;
    let mors = functor.mors.iter().map(|f| base.tensor_mor(f, &id)).collect::<Result<_>>()?;
    MFunctor::unchecked(functor.index.clone(), objs, mors)
}

/// `h ⊗ τ: m⊗M → m'⊗M'` for `h: m → m'`, `τ: M → M'`.
pub fn act_nat<B: Base>(base: &B, h: &B::Mor, tau: &NatTrans<B::Mor>) -> Result<NatTrans<B::Mor>> {
    Ok(NatTrans { components: tau.components.iter().map(|c| base.tensor_mor(h, c)).collect::<Result<_>>()? })
}

/// `(M^m)_i = [m, M_i]`, on morphisms post-composition `[m, M(f)]`.
pub fn exponent<B: Base>(base: &B, functor: &MFunctor<B::Mor>, m: usize) -> Result<MFunctor<B::Mor>> {
    let id = base.identity(m)?;
    let objs = functor.objs.iter().map(|&o| base.internal_hom(m, o)).collect::<Result<_>>()?;
    let mors = functor.mors.iter().map(|f| base.hom_map(&id, f)).collect::<Result<_>>()?;
    MFunctor::unchecked(functor.index.clone(), objs, mors)
}

/// Pointwise tensor `(M⊗N)_i = M_i ⊗ N_i`.
pub fn tensor_pointwise<B: Base>(base: &B, m: &MFunctor<B::Mor>, n: &MFunctor<B::Mor>) -> Result<MFunctor<B::Mor>> {
    same_index(m, n)?;
    let objs = m.objs.iter().zip(&n.objs).map(|(&a, &b)| base.tensor_obj(a, b)).collect::<Result<_>>()?;
    let mors = m.mors.iter().zip(&n.mors).map(|(f, g)| base.tensor_mor(f, g)).collect::<Result<_>>()?;
    MFunctor::unchecked(m.index.clone(), objs, mors)
}

/// The constant functor at the unit, `K: i ↦ k`.
pub fn unit_functor<B: Base>(base: &B, index: Arc<FinCat>) -> Result<MFunctor<B::Mor>> {
    MFunctor::constant(base, index, base.unit())
}

/// `τ ⊗ σ` pointwise.
pub fn tensor_nat<B: Base>(base: &B, tau: &NatTrans<B::Mor>, sigma: &NatTrans<B::Mor>) -> Result<NatTrans<B::Mor>> {
    Ok(NatTrans {
        components: tau
            .components
            .iter()
            .zip(&sigma.components)
            .map(|(a, b)| base.tensor_mor(a, b))
            .collect::<Result<_>>()?,
    })
}

/// The hom bifunctor `(i, j) ↦ [M_i, N_j]`, acting by `[M(f), N(g)]`.
pub fn hom_bifunctor<B: Base>(base: &B, m: &MFunctor<B::Mor>, n: &MFunctor<B::Mor>) -> Result<Bifunctor<B::Mor>> {
    same_index(m, n)?;
    Bifunctor::from_fn(
        base,
        m.index.clone(),
        |i, j| base.internal_hom(m.obj(i), n.obj(j)),
        |f, g| base.hom_map(m.mor(f), n.mor(g)),
    )
}

/// `map(M, N) = ∫_i [M_i, N_i]` together with its universal wedge.
#[derive(Debug, Clone)]
pub struct MapObject<M> {
    pub end: EndResult<M>,
    /// Sources and targets `(M_i, N_i)` of each leg's internal hom.
    pub sides: Vec<(usize, usize)>,
}

impl<M: Clone + Eq> MapObject<M> {
    pub fn carrier(&self) -> usize {
        self.end.carrier
    }

    pub fn leg(&self, i: ObjId) -> &M {
        &self.end.legs[i]
    }
}

pub fn map_functors<B: Base>(base: &B, m: &MFunctor<B::Mor>, n: &MFunctor<B::Mor>) -> Result<MapObject<B::Mor>> {
    let bif = hom_bifunctor(base, m, n)?;
    let end = compute_end(base, &bif)?;
    let sides = m.objs.iter().copied().zip(n.objs.iter().copied()).collect();
    Ok(MapObject { end, sides })
}

/// `map(μ, ν): map(M, N) → map(M', N')` for `μ: M' → M`, `ν: N → N'`,
/// obtained by factoring the wedge `[μ_i, ν_i] ∘ leg_i` through `map(M', N')`.
pub fn map_functors_mor<B: Base>(
    base: &B,
    mu: &NatTrans<B::Mor>,
    nu: &NatTrans<B::Mor>,
    from: &MapObject<B::Mor>,
    to: &MapObject<B::Mor>,
) -> Result<B::Mor> {
    let comps = (0..from.sides.len())
        .map(|i| base.compose(&base.hom_map(&mu.components[i], &nu.components[i])?, from.leg(i)))
        .collect::<Result<Vec<_>>>()?;
    to.end.factor(base, from.carrier(), &comps)
}

/// The morphism `m → map(M, N)` corresponding to `τ: m⊗M → N`: the wedge
/// `curry(τ_i)` factored through the end.
pub fn transpose_to_map<B: Base>(
    base: &B,
    m: usize,
    tau: &NatTrans<B::Mor>,
    target: &MapObject<B::Mor>,
) -> Result<B::Mor> {
    let comps = tau
        .components
        .iter()
        .zip(&target.sides)
        .map(|(c, &(mi, _))| base.curry(c, m, mi))
        .collect::<Result<Vec<_>>>()?;
    target.end.factor(base, m, &comps)
}

/// Inverse of [`transpose_to_map`]: `τ_i = uncurry(leg_i ∘ u)`.
pub fn transpose_from_map<B: Base>(base: &B, u: &B::Mor, source: &MapObject<B::Mor>) -> Result<NatTrans<B::Mor>> {
    let components = source
        .sides
        .iter()
        .enumerate()
        .map(|(i, &(mi, ni))| base.uncurry(&base.compose(source.leg(i), u)?, mi, ni))
        .collect::<Result<_>>()?;
    Ok(NatTrans { components })
}

/// `α_{m,n,M}: (m⊗n)⊗M → m⊗(n⊗M)`, componentwise.
pub fn action_associator<B: Base>(
    base: &B,
    m: usize,
    n: usize,
    functor: &MFunctor<B::Mor>,
) -> Result<NatTrans<B::Mor>> {
    Ok(NatTrans { components: functor.objs.iter().map(|&o| base.associator(m, n, o)).collect::<Result<_>>()? })
}

/// `λ_M: k⊗M → M`, componentwise.
pub fn action_unitor<B: Base>(base: &B, functor: &MFunctor<B::Mor>) -> Result<NatTrans<B::Mor>> {
    Ok(NatTrans { components: functor.objs.iter().map(|&o| base.lunitor(o)).collect::<Result<_>>()? })
}

fn identity_nat<B: Base>(base: &B, functor: &MFunctor<B::Mor>) -> Result<NatTrans<B::Mor>> {
    NatTrans::identity(base, functor)
}

fn instance_of<B: Base>(base: &B, functor: &MFunctor<B::Mor>) -> String {
    format!("{} over {}, M={}", base.label(), functor.index.name(), functor.shape())
}

/// The three module diagrams for the action of `𝓜` on `𝓜^I`, compared as
/// exact component tables:
/// `α_{m,n,p⊗M} ∘ α_{m⊗n,p,M} = (m⊗α_{n,p,M}) ∘ α_{m,n⊗p,M} ∘ (a_{m,n,p}⊗M)`,
/// `(m⊗λ_M) ∘ α_{m,k,M} = r_m⊗M` and `λ_{m⊗M} ∘ α_{k,m,M} = l_m⊗M`.
pub fn module_coherence<B: Base>(base: &B, m: usize, n: usize, p: usize, functor: &MFunctor<B::Mor>) -> Result<Report> {
    let k = base.unit();
    let instance = format!("{}, m={m} n={n} p={p}", instance_of(base, functor));
    let mut report = Report::new();

    let pm = act(base, p, functor)?;
    let np = base.tensor_obj(n, p)?;
    let mn = base.tensor_obj(m, n)?;
    let lhs = action_associator(base, m, n, &pm)?.after(base, &action_associator(base, mn, p, functor)?)?;
    let id_m = base.identity(m)?;
    let id_fun = identity_nat(base, functor)?;
    let rhs_first = act_nat(base, &base.associator(m, n, p)?, &id_fun)?;
    let rhs_mid = action_associator(base, m, np, functor)?;
    let rhs_last = act_nat(base, &id_m, &action_associator(base, n, p, functor)?)?;
    let rhs = rhs_last.after(base, &rhs_mid.after(base, &rhs_first)?)?;
    report.push(Label::L1, "module associativity", instance.clone(), lhs == rhs, "");

    let left =
        act_nat(base, &id_m, &action_unitor(base, functor)?)?.after(base, &action_associator(base, m, k, functor)?)?;
    let right = act_nat(base, &base.runitor(m)?, &id_fun)?;
    report.push(Label::L1, "module right unit", instance.clone(), left == right, "");

    let mm = act(base, m, functor)?;
    let left = action_unitor(base, &mm)?.after(base, &action_associator(base, k, m, functor)?)?;
    let right = act_nat(base, &base.lunitor(m)?, &id_fun)?;
    report.push(Label::L1, "module left unit", instance, left == right, "");
    Ok(report)
}

/// Sizes of the three hom-sets in `𝓜^I(m⊗M, N) ≅ 𝓜^I(M, N^m) ≅ 𝓜(m, map(M, N))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedModuleCounts {
    pub acted: usize,
    pub exponent: usize,
    pub mapped: usize,
}

/// The closed-module bijections, built explicitly and checked on every
/// element, with naturality in `m`, `M` and `N` checked against up to
/// `samples` endomorphisms of each.
///
/// `𝓜^I(m⊗M, N) → 𝓜^I(M, N^m)` goes through the braiding,
/// `σ_i = curry(τ_i ∘ s_{M_i,m})`; `𝓜^I(m⊗M, N) → 𝓜(m, map(M, N))` factors
/// the wedge `curry(τ_i)` through the end.
pub fn verify_closed_module<B: Base>(
    base: &B,
    m: usize,
    functor_m: &MFunctor<B::Mor>,
    functor_n: &MFunctor<B::Mor>,
    samples: usize,
) -> Result<(ClosedModuleCounts, Report)> {
    same_index(functor_m, functor_n)?;
    let (fm, fn_) = (functor_m, functor_n);
    let instance = format!("{} over {}, m={m} M={} N={}", base.label(), fm.index.name(), fm.shape(), fn_.shape());
    let acted = act(base, m, fm)?;
    let expo = exponent(base, fn_, m)?;
    let map = map_functors(base, fm, fn_)?;
    let side_a = nat_hom(base, &acted, fn_)?;
    let side_b = nat_hom(base, fm, &expo)?;
    let side_c = base.hom_enumerate(m, map.carrier())?;
    let counts = ClosedModuleCounts { acted: side_a.len(), exponent: side_b.len(), mapped: side_c.len() };

    let to_b = |tau: &NatTrans<B::Mor>| -> Result<NatTrans<B::Mor>> {
        let components = tau
            .components
            .iter()
            .zip(&fm.objs)
            .map(|(t, &mi)| base.curry(&base.compose(t, &base.braiding(mi, m)?)?, mi, m))
            .collect::<Result<_>>()?;
        Ok(NatTrans { components })
    };
    let from_b = |sigma: &NatTrans<B::Mor>| -> Result<NatTrans<B::Mor>> {
        let components = sigma
            .components
            .iter()
            .zip(fm.objs.iter().zip(&fn_.objs))
            .map(|(s, (&mi, &ni))| base.compose(&base.uncurry(s, m, ni)?, &base.braiding(m, mi)?))
            .collect::<Result<_>>()?;
        Ok(NatTrans { components })
    };
    let to_c = |tau: &NatTrans<B::Mor>| transpose_to_map(base, m, tau, &map);
    let from_c = |u: &B::Mor| transpose_from_map(base, u, &map);

    let set_b: std::collections::HashSet<&NatTrans<B::Mor>> = side_b.iter().collect();
    let set_c: std::collections::HashSet<&B::Mor> = side_c.iter().collect();
    let mut ab_ok = true;
    let mut ac_ok = true;
    let mut images_b = std::collections::HashSet::new();
    let mut images_c = std::collections::HashSet::new();
    for tau in &side_a {
        let sigma = to_b(tau)?;
        ab_ok &= set_b.contains(&sigma) && from_b(&sigma)? == *tau;
        images_b.insert(sigma);
        let u = to_c(tau)?;
        ac_ok &= set_c.contains(&u) && from_c(&u)? == *tau;
        images_c.insert(u);
    }
    for sigma in &side_b {
        ab_ok &= to_b(&from_b(sigma)?)? == *sigma;
    }
    for u in &side_c {
        let tau = from_c(u)?;
        ac_ok &= is_natural(base, &acted, fn_, &tau)? && to_c(&tau)? == *u;
    }
    ab_ok &= images_b.len() == side_b.len();
    ac_ok &= images_c.len() == side_c.len();

    let mut report = Report::new();
    report.push(
        Label::L1,
        "hom-set cardinalities",
        instance.clone(),
        counts.acted == counts.exponent && counts.exponent == counts.mapped,
        format!("{} / {} / {}", counts.acted, counts.exponent, counts.mapped),
    );
    report.push(Label::L1, "round-trip m⊗M ↔ N^m", instance.clone(), ab_ok, "");
    report.push(Label::L1, "round-trip m⊗M ↔ map(M,N)", instance.clone(), ac_ok, "");

    // Naturality in m: precompose with h: m → m.
    let mut nat_m = true;
    for h in base.hom_enumerate(m, m)?.iter().take(samples) {
        let pre = act_nat(base, h, &NatTrans::identity(base, fm)?)?;
        for tau in side_a.iter().take(samples) {
            let moved = tau.after(base, &pre)?;
            nat_m &= to_c(&moved)? == base.compose(&to_c(tau)?, h)?;
            let sigma = to_b(tau)?;
            let post = NatTrans {
                components: fn_.objs.iter().map(|&ni| base.hom_map(h, &base.identity(ni)?)).collect::<Result<_>>()?,
            };
            nat_m &= to_b(&moved)? == post.after(base, &sigma)?;
        }
    }
    report.push(Label::L1, "natural in m", instance.clone(), nat_m, "");

    // Naturality in M and N: endomorphisms act by pre- and post-composition.
    let mut nat_mn = true;
    let id_m = base.identity(m)?;
    let id_fm = NatTrans::identity(base, fm)?;
    let id_fn = NatTrans::identity(base, fn_)?;
    let endo_m: Vec<_> = nat_hom(base, fm, fm)?.into_iter().take(samples).collect();
    let endo_n: Vec<_> = nat_hom(base, fn_, fn_)?.into_iter().take(samples).collect();
    for tau in side_a.iter().take(samples) {
        let u = to_c(tau)?;
        for mu in &endo_m {
            let moved = tau.after(base, &act_nat(base, &id_m, mu)?)?;
            nat_mn &= to_c(&moved)? == base.compose(&map_functors_mor(base, mu, &id_fn, &map, &map)?, &u)?;
            nat_mn &= to_b(&moved)? == to_b(tau)?.after(base, mu)?;
        }
        for nu in &endo_n {
            let moved = nu.after(base, tau)?;
            nat_mn &= to_c(&moved)? == base.compose(&map_functors_mor(base, &id_fm, nu, &map, &map)?, &u)?;
            let post =
                NatTrans { components: nu.components.iter().map(|c| base.hom_map(&id_m, c)).collect::<Result<_>>()? };
            nat_mn &= to_b(&moved)? == post.after(base, &to_b(tau)?)?;
        }
    }
    report.push(Label::L1, "natural in M and N", instance, nat_mn, "");
    Ok((counts, report))
}

/// The module functors the crate can represent finitely.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ModuleFunctor<M> {
    /// The identity of `𝓜^I`.
    Identity,
    /// `X ↦ X ∘ Φ`, from `𝓜^J` to `𝓜^I` for `Φ: I → J`.
    Precompose(crate::fincat::CatFunctor),
    /// `X ↦ X ⊗ N` pointwise.
    TensorWith(MFunctor<M>),
    /// `c ↦ h ⊗ c` from `𝓜 = 𝓜^{terminal}` to `𝓜^I`; holds `h`.
    FreeTensor(MFunctor<M>),
}

impl<M: Clone + Eq> ModuleFunctor<M> {
    pub fn name(&self) -> String {
        match self {
            ModuleFunctor::Identity => "identity".into(),
            ModuleFunctor::Precompose(phi) => format!("precompose {}→{}", phi.source().name(), phi.target().name()),
            ModuleFunctor::TensorWith(n) => format!("−⊗N N={}", n.shape()),
            ModuleFunctor::FreeTensor(h) => format!("h⊗− h={}", h.shape()),
        }
    }

    pub fn apply<B: Base<Mor = M>>(&self, base: &B, x: &MFunctor<M>) -> Result<MFunctor<M>> {
        match self {
            ModuleFunctor::Identity => Ok(x.clone()),
            ModuleFunctor::Precompose(phi) => x.precompose(phi),
            ModuleFunctor::TensorWith(n) => tensor_pointwise(base, x, n),
            ModuleFunctor::FreeTensor(h) => {
                if x.index.num_objects() != 1 || x.index.num_morphisms() != 1 {
                    return Err(Error::input("h⊗− acts on functors over the terminal category"));
                }
                act_right(base, h, x.obj(0))
            }
        }
    }

    pub fn apply_nat<B: Base<Mor = M>>(&self, base: &B, tau: &NatTrans<M>) -> Result<NatTrans<M>> {
        match self {
            ModuleFunctor::Identity => Ok(tau.clone()),
            ModuleFunctor::Precompose(phi) => Ok(tau.whisker(phi)),
            ModuleFunctor::TensorWith(n) => tensor_nat(base, tau, &NatTrans::identity(base, n)?),
            ModuleFunctor::FreeTensor(h) => Ok(NatTrans {
                components: h
                    .objs
                    .iter()
                    .map(|&o| base.tensor_mor(&base.identity(o)?, &tau.components[0]))
                    .collect::<Result<_>>()?,
            }),
        }
    }

    /// `μ_{m,X}: m⊗F(X) → F(m⊗X)`.
    pub fn mu<B: Base<Mor = M>>(&self, base: &B, m: usize, x: &MFunctor<M>) -> Result<NatTrans<M>> {
        let fx = self.apply(base, x)?;
        match self {
            ModuleFunctor::Identity | ModuleFunctor::Precompose(_) => NatTrans::identity(base, &act(base, m, &fx)?),
            ModuleFunctor::TensorWith(n) => {
                // m⊗(X_i⊗N_i) → (m⊗X_i)⊗N_i
                let components = x
                    .objs
                    .iter()
                    .zip(&n.objs)
                    .map(|(&xi, &ni)| {
                        let a = base.associator(m, xi, ni)?;
                        Ok(base.inverse(&a).expect("associator is invertible"))
                    })
                    .collect::<Result<_>>()?;
                Ok(NatTrans { components })
            }
            ModuleFunctor::FreeTensor(h) => {
                // m⊗(h_j⊗c) → (m⊗h_j)⊗c → (h_j⊗m)⊗c → h_j⊗(m⊗c)
                let c = x.obj(0);
                let id_c = base.identity(c)?;
                let components = h
                    .objs
                    .iter()
                    .map(|&hj| {
                        let a_inv = base.inverse(&base.associator(m, hj, c)?).expect("associator is invertible");
                        let swap = base.tensor_mor(&base.braiding(m, hj)?, &id_c)?;
                        base.compose_all(&[&a_inv, &swap, &base.associator(hj, m, c)?])
                    })
                    .collect::<Result<_>>()?;
                Ok(NatTrans { components })
            }
        }
    }
}

/// `μ` is a natural isomorphism and the two module-functor diagrams commute:
/// `F(α_{m,n,X}) ∘ μ_{m⊗n,X} = μ_{m,n⊗X} ∘ (m⊗μ_{n,X}) ∘ α_{m,n,F(X)}` and
/// `F(λ_X) ∘ μ_{k,X} = λ_{F(X)}`.
pub fn verify_module_functor<B: Base>(
    base: &B,
    functor: &ModuleFunctor<B::Mor>,
    m: usize,
    n: usize,
    x: &MFunctor<B::Mor>,
) -> Result<Report> {
    let instance = format!("{} {}, m={m} n={n} X={}", base.label(), functor.name(), x.shape());
    let mut report = Report::new();
    let fx = functor.apply(base, x)?;
    let mx = act(base, m, x)?;
    let mu = functor.mu(base, m, x)?;
    let natural = is_natural(base, &act(base, m, &fx)?, &functor.apply(base, &mx)?, &mu)?;
    report.push(Label::Nt1, "μ natural iso", instance.clone(), natural && mu.is_iso(base), "");

    let mn = base.tensor_obj(m, n)?;
    let nx = act(base, n, x)?;
    let lhs = functor.apply_nat(base, &action_associator(base, m, n, x)?)?.after(base, &functor.mu(base, mn, x)?)?;
    let rhs = functor.mu(base, m, &nx)?.after(
        base,
        &act_nat(base, &base.identity(m)?, &functor.mu(base, n, x)?)?
            .after(base, &action_associator(base, m, n, &fx)?)?,
    )?;
    report.push(Label::Nt1, "μ associativity", instance.clone(), lhs == rhs, "");

    let k = base.unit();
    let lhs = functor.apply_nat(base, &action_unitor(base, x)?)?.after(base, &functor.mu(base, k, x)?)?;
    report.push(Label::Nt1, "μ unit", instance, lhs == action_unitor(base, &fx)?, "");
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basecat::{FinSet, FinVect, SetMap};
    use crate::fincat::fixtures;

    fn set(dst: usize, t: &[usize]) -> SetMap {
        SetMap::new(dst, t.to_vec()).unwrap()
    }

    /// Plain product-and-filter enumeration, kept separate from the pruned search.
    fn brute_force_nat_count<B: Base>(base: &B, m: &MFunctor<B::Mor>, n: &MFunctor<B::Mor>) -> usize {
        let cat = m.index().clone();
        let homs: Vec<Vec<B::Mor>> = cat.objects().map(|i| base.hom_enumerate(m.obj(i), n.obj(i)).unwrap()).collect();
        let mut count = 0;
        let mut idx = vec![0usize; homs.len()];
        if homs.iter().any(|h| h.is_empty()) {
            return 0;
        }
        loop {
            let tau = NatTrans::new(idx.iter().enumerate().map(|(o, &k)| homs[o][k].clone()).collect());
            if is_natural(base, m, n, &tau).unwrap() {
                count += 1;
            }
            let mut pos = homs.len();
            loop {
                if pos == 0 {
                    return count;
                }
                pos -= 1;
                idx[pos] += 1;
                if idx[pos] < homs[pos].len() {
                    break;
                }
                idx[pos] = 0;
            }
        }
    }

    #[test]
    fn functor_validation_catches_broken_composite() {
        let s = FinSet::new();
        let idem = Arc::new(fixtures::walking_idempotent());
        let ok = MFunctor::from_generators(&s, idem.clone(), vec![2], vec![set(2, &[0, 0])]);
        assert!(ok.is_ok());
        let swap = MFunctor::from_generators(&s, idem, vec![2], vec![set(2, &[1, 0])]);
        assert!(matches!(swap, Err(Error::Invalid(_))));
    }

    #[test]
    fn nat_hom_matches_brute_force_on_arrow() {
        let s = FinSet::new();
        let arrow = Arc::new(fixtures::arrow());
        let m = MFunctor::from_generators(&s, arrow.clone(), vec![2, 2], vec![set(2, &[0, 0])]).unwrap();
        let n = MFunctor::from_generators(&s, arrow, vec![3, 2], vec![set(2, &[1, 0, 1])]).unwrap();
        let homs = nat_hom(&s, &m, &n).unwrap();
        assert_eq!(homs.len(), brute_force_nat_count(&s, &m, &n));
        for tau in &homs {
            assert!(is_natural(&s, &m, &n, tau).unwrap());
        }
    }

    #[test]
    fn nat_hom_over_empty_category_is_singleton() {
        let s = FinSet::new();
        let empty = Arc::new(fixtures::empty());
        let m = MFunctor::constant(&s, empty, 0).unwrap();
        assert_eq!(nat_hom(&s, &m, &m).unwrap().len(), 1);
    }

    #[test]
    fn action_examples() {
        let s = FinSet::new();
        let arrow = Arc::new(fixtures::arrow());
        let m3 = MFunctor::constant(&s, arrow.clone(), 3).unwrap();
        assert_eq!(act(&s, 2, &m3).unwrap().objs(), &[6, 6]);
        let v = FinVect::new(2).unwrap();
        let m =
            MFunctor::from_generators(&v, arrow.clone(), vec![1, 2], vec![v.matrix(&[vec![1], vec![0]], 1).unwrap()])
                .unwrap();
        let acted = act(&v, 2, &m).unwrap();
        assert_eq!(acted.objs(), &[2, 4]);
        assert!(acted.validate(&v).unwrap().is_ok());
        let unit_acted = act(&v, 1, &m).unwrap();
        assert_eq!(unit_acted, m);
    }

    #[test]
    fn exponent_examples() {
        let s = FinSet::new();
        let arrow = Arc::new(fixtures::arrow());
        let m2 = MFunctor::constant(&s, arrow.clone(), 2).unwrap();
        assert_eq!(exponent(&s, &m2, 3).unwrap().objs(), &[8, 8]);
        let v = FinVect::new(3).unwrap();
        let m = MFunctor::from_generators(&v, arrow, vec![1, 1], vec![v.matrix(&[vec![2]], 1).unwrap()]).unwrap();
        let e = exponent(&v, &m, 2).unwrap();
        assert_eq!(e.objs(), &[2, 2]);
        assert!(e.validate(&v).unwrap().is_ok());
        let unit_exp = exponent(&v, &m, 1).unwrap();
        assert_eq!(unit_exp.objs(), m.objs());
    }

    #[test]
    fn map_object_examples() {
        let s = FinSet::new();
        let term = Arc::new(fixtures::terminal());
        let m = MFunctor::constant(&s, term.clone(), 2).unwrap();
        let n = MFunctor::constant(&s, term, 3).unwrap();
        assert_eq!(map_functors(&s, &m, &n).unwrap().carrier(), 9);

        let v = FinVect::new(2).unwrap();
        let disc = Arc::new(fixtures::discrete(2));
        let one = MFunctor::constant(&v, disc, 1).unwrap();
        assert_eq!(map_functors(&v, &one, &one).unwrap().carrier(), 2);
    }

    #[test]
    fn identity_is_an_element_of_map_m_m() {
        let s = FinSet::new();
        let arrow = Arc::new(fixtures::arrow());
        let m = MFunctor::from_generators(&s, arrow, vec![2, 3], vec![set(3, &[2, 0])]).unwrap();
        let map = map_functors(&s, &m, &m).unwrap();
        let id = NatTrans::identity(&s, &m).unwrap();
        let k = s.unit();
        let named =
            NatTrans::new(id.components.iter().map(|c| s.compose(c, &s.lunitor(s.src(c)).unwrap()).unwrap()).collect());
        let element = transpose_to_map(&s, k, &named, &map).unwrap();
        let back = transpose_from_map(&s, &element, &map).unwrap();
        assert_eq!(back, named);
    }

    #[test]
    fn closed_module_on_arrow_in_finset() {
        let s = FinSet::new();
        let arrow = Arc::new(fixtures::arrow());
        let m = MFunctor::from_generators(&s, arrow.clone(), vec![1, 2], vec![set(2, &[1])]).unwrap();
        let n = MFunctor::from_generators(&s, arrow, vec![2, 2], vec![set(2, &[1, 0])]).unwrap();
        let (counts, report) = verify_closed_module(&s, 2, &m, &n, 3).unwrap();
        // Oracle: m⊗M = (2, 4); count natural families by brute force.
        let acted = act(&s, 2, &m).unwrap();
        assert_eq!(counts.acted, brute_force_nat_count(&s, &acted, &n));
        assert_eq!(counts.acted, counts.exponent);
        assert_eq!(counts.acted, counts.mapped);
        assert!(report.all_passed(), "{}", report.render_text());
    }

    #[test]
    fn closed_module_with_unit_reduces_to_nat() {
        let s = FinSet::new();
        let arrow = Arc::new(fixtures::arrow());
        let m = MFunctor::from_generators(&s, arrow.clone(), vec![2, 2], vec![set(2, &[0, 0])]).unwrap();
        let n = MFunctor::from_generators(&s, arrow, vec![2, 3], vec![set(3, &[2, 2])]).unwrap();
        let (counts, report) = verify_closed_module(&s, 1, &m, &n, 4).unwrap();
        assert_eq!(counts.acted, nat_hom(&s, &m, &n).unwrap().len());
        assert!(report.all_passed());
    }

    #[test]
    fn closed_module_in_finvect_terminal() {
        let v = FinVect::new(2).unwrap();
        let term = Arc::new(fixtures::terminal());
        let one = MFunctor::constant(&v, term, 1).unwrap();
        let (counts, report) = verify_closed_module(&v, 1, &one, &one, 4).unwrap();
        assert_eq!((counts.acted, counts.exponent, counts.mapped), (2, 2, 2));
        assert!(report.all_passed());
    }

    #[test]
    fn module_coherence_holds() {
        let v = FinVect::new(3).unwrap();
        let arrow = Arc::new(fixtures::arrow());
        let m =
            MFunctor::from_generators(&v, arrow, vec![1, 2], vec![v.matrix(&[vec![1], vec![2]], 1).unwrap()]).unwrap();
        assert!(module_coherence(&v, 2, 1, 2, &m).unwrap().all_passed());
    }

    #[test]
    fn module_functor_examples() {
        let s = FinSet::new();
        let arrow = Arc::new(fixtures::arrow());
        let x = MFunctor::from_generators(&s, arrow.clone(), vec![2, 3], vec![set(3, &[0, 2])]).unwrap();
        let r = verify_module_functor(&s, &ModuleFunctor::Identity, 2, 3, &x).unwrap();
        assert!(r.all_passed());

        let phi = crate::fincat::CatFunctor::point(arrow.clone(), 0);
        let r = verify_module_functor(&s, &ModuleFunctor::Precompose(phi), 2, 2, &x).unwrap();
        assert!(r.all_passed());

        let k = unit_functor(&s, arrow.clone()).unwrap();
        let r = verify_module_functor(&s, &ModuleFunctor::TensorWith(k), 2, 3, &x).unwrap();
        assert!(r.all_passed());

        let n = MFunctor::from_generators(&s, arrow.clone(), vec![2, 1], vec![set(1, &[0, 0])]).unwrap();
        let r = verify_module_functor(&s, &ModuleFunctor::TensorWith(n.clone()), 2, 3, &x).unwrap();
        assert!(r.all_passed(), "{}", r.render_text());

        let c = MFunctor::constant(&s, Arc::new(fixtures::terminal()), 2).unwrap();
        let r = verify_module_functor(&s, &ModuleFunctor::FreeTensor(n), 2, 3, &c).unwrap();
        assert!(r.all_passed(), "{}", r.render_text());
    }
}
