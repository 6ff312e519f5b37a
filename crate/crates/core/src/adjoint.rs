//! Right adjoints `G(Y)_i = map(F(h_i), Y)` for the module functors the crate
//! can represent: precomposition along `Φ` (right Kan extension) and the
//! pointwise tensor `−⊗N` (the internal hom of `𝓜^I`).

use std::collections::HashSet;
use std::sync::Arc;

use crate::basecat::Base;
use crate::coherence;
use crate::ends::{compute_coend, Bifunctor};
use crate::error::{Error, Result};
use crate::fincat::{CatFunctor, FinCat, ObjId};
use crate::funcat::{
    is_natural, map_functors, map_functors_mor, nat_hom, tensor_nat, tensor_pointwise, unit_functor, MFunctor,
    MapObject, NatTrans,
};
use crate::report::{Label, Report};
use crate::yoneda::{codifferential_at, density, free_functors, free_precompose, FreeFunctor};

/// A hom-set bijection checked on full enumerations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjunctionWitness {
    pub left: String,
    pub right: String,
    /// `|𝓒(F X, Y)|` and `|𝓓(X, G Y)|`.
    pub counts: (usize, usize),
    pub round_trips: bool,
    pub natural: bool,
    /// Naturality squares compared.
    pub squares: usize,
}

impl AdjunctionWitness {
    pub fn passed(&self) -> bool {
        self.counts.0 == self.counts.1 && self.round_trips && self.natural
    }

    fn push_into(&self, report: &mut Report, label: Label, instance: &str) {
        let law = format!("{} ⊣ {}", self.left, self.right);
        report.push(
            label,
            format!("{law} cardinalities"),
            instance,
            self.counts.0 == self.counts.1,
            format!("{} vs {}", self.counts.0, self.counts.1),
        );
        report.push(label, format!("{law} round-trip"), instance, self.round_trips, "");
        report.push(label, format!("{law} natural"), instance, self.natural, format!("{} squares", self.squares));
    }
}

/// `src → [h(j), dst]`, the curry of `cotuple_f name(leg(f))` moved across
/// the braiding. `leg(f): src → dst` is given per summand of `h(j)`.
fn curried_cotuple<B: Base>(
    base: &B,
    h: &FreeFunctor<B::Mor>,
    j: ObjId,
    src: usize,
    dst: usize,
    mut leg: impl FnMut(crate::fincat::MorId) -> Result<B::Mor>,
) -> Result<B::Mor> {
    let hj = h.functor.obj(j);
    let hom = base.internal_hom(src, dst)?;
    let named = h.cotuple(base, j, hom, |f| base.name_of(&leg(f)?))?;
    let body = base.swap_source(&base.uncurry(&named, src, dst)?, hj, src)?;
    base.curry(&body, src, hj)
}

/// `[h(i), c] → c`: restrict to the identity summand, then `[k, c] ≅ c`.
fn at_identity_summand<B: Base>(base: &B, h: &FreeFunctor<B::Mor>, c: usize) -> Result<B::Mor> {
    let iota = h.injection(base, h.index().identity(h.source))?;
    base.compose(&base.unit_hom_iso(c)?, &base.hom_map(&iota, &base.identity(c)?)?)
}

/// `Ran_Φ Y` with `G(Y)_j = map(h_j ∘ Φ, Y)`, together with the ends behind it.
#[derive(Debug, Clone)]
pub struct KanRight<M> {
    pub functor: MFunctor<M>,
    pub maps: Vec<MapObject<M>>,
    pub frees: Vec<FreeFunctor<M>>,
    pub phi: CatFunctor,
}

pub fn right_adjoint_of_precomposition<B: Base>(
    base: &B,
    phi: &CatFunctor,
    y: &MFunctor<B::Mor>,
) -> Result<KanRight<B::Mor>> {
    if phi.source() != y.index() {
        return Err(Error::input("Y must live over the source of Φ"));
    }
    let target = phi.target().clone();
    let frees = free_functors(base, &target)?;
    let pulled: Vec<MFunctor<B::Mor>> = frees.iter().map(|h| h.functor.precompose(phi)).collect::<Result<_>>()?;
    let maps: Vec<MapObject<B::Mor>> = pulled.iter().map(|p| map_functors(base, p, y)).collect::<Result<_>>()?;
    let id_y = NatTrans::identity(base, y)?;
    let objs = maps.iter().map(MapObject::carrier).collect();
    let mors = target
        .morphisms()
        .map(|g| {
            let (j, j2) = (target.src(g), target.dst(g));
            let hg = free_precompose(base, &frees, g)?.whisker(phi);
            map_functors_mor(base, &hg, &id_y, &maps[j], &maps[j2])
        })
        .collect::<Result<_>>()?;
    let functor = MFunctor::new(base, target, objs, mors)?;
    Ok(KanRight { functor, maps, frees, phi: phi.clone() })
}

impl<M: Clone + Eq> KanRight<M> {
    /// `G(β)` for `β: Y → Y'`, both sides computed by [`right_adjoint_of_precomposition`].
    pub fn map_nat<B: Base<Mor = M>>(&self, base: &B, beta: &NatTrans<M>, to: &KanRight<M>) -> Result<NatTrans<M>> {
        let components = self
            .maps
            .iter()
            .zip(&to.maps)
            .zip(&self.frees)
            .map(|((from, onto), h)| {
                let id = NatTrans::identity(base, &h.functor.precompose(&self.phi)?)?;
                map_functors_mor(base, &id, beta, from, onto)
            })
            .collect::<Result<_>>()?;
        Ok(NatTrans::new(components))
    }

    /// Counit `ε_i: G(Y)_{Φi} → Y_i`, evaluation at the identity summand.
    pub fn counit<B: Base<Mor = M>>(&self, base: &B, y: &MFunctor<M>) -> Result<NatTrans<M>> {
        let src = self.phi.source();
        let components = src
            .objects()
            .map(|i| {
                let j = self.phi.obj(i);
                base.compose(&at_identity_summand(base, &self.frees[j], y.obj(i))?, self.maps[j].leg(i))
            })
            .collect::<Result<_>>()?;
        Ok(NatTrans::new(components))
    }
}

/// `𝓜^I(X∘Φ, Y) ≅ 𝓜^J(X, G(Y))` for `X` over `J` and `Y` over `I`.
///
/// `τ ↦ σ` with `σ_j` the factorization of the wedge
/// `curry(cotuple_{g ∈ J(j,Φi)} τ_i ∘ X(g))`; backwards `σ ↦ ε ∘ σΦ`.
/// Naturality in `X` and `Y` against up to `samples` endomorphisms of each.
pub fn verify_precomposition_adjunction<B: Base>(
    base: &B,
    phi: &CatFunctor,
    x: &MFunctor<B::Mor>,
    y: &MFunctor<B::Mor>,
    samples: usize,
) -> Result<(AdjunctionWitness, Report)> {
    if phi.target() != x.index() {
        return Err(Error::input("X must live over the target of Φ"));
    }
    let src = phi.source().clone();
    let tgt = phi.target().clone();
    let kan = right_adjoint_of_precomposition(base, phi, y)?;
    let g = &kan.functor;
    let x_phi = x.precompose(phi)?;
    let left = nat_hom(base, &x_phi, y)?;
    let right = nat_hom(base, x, g)?;
    let eps = kan.counit(base, y)?;

    let forward = |tau: &NatTrans<B::Mor>| -> Result<NatTrans<B::Mor>> {
        let components = tgt
            .objects()
            .map(|j| {
                let wedge = src
                    .objects()
                    .map(|i| {
                        curried_cotuple(base, &kan.frees[j], phi.obj(i), x.obj(j), y.obj(i), |gm| {
                            base.compose(&tau.components[i], x.mor(gm))
                        })
                    })
                    .collect::<Result<Vec<_>>>()?;
                kan.maps[j].end.factor(base, x.obj(j), &wedge)
            })
            .collect::<Result<_>>()?;
        Ok(NatTrans::new(components))
    };
    let backward = |sigma: &NatTrans<B::Mor>| eps.after(base, &sigma.whisker(phi));

    let right_set: HashSet<&NatTrans<B::Mor>> = right.iter().collect();
    let mut round = true;
    let mut images = HashSet::new();
    for tau in &left {
        let sigma = forward(tau)?;
        round &= right_set.contains(&sigma) && backward(&sigma)? == *tau;
        images.insert(sigma);
    }
    for sigma in &right {
        let tau = backward(sigma)?;
        round &= is_natural(base, &x_phi, y, &tau)? && forward(&tau)? == *sigma;
    }
    round &= images.len() == right.len();

    let mut natural = true;
    let mut squares = 0;
    for alpha in nat_hom(base, x, x)?.iter().take(samples) {
        for tau in left.iter().take(samples) {
            let moved = tau.after(base, &alpha.whisker(phi))?;
            natural &= forward(&moved)? == forward(tau)?.after(base, alpha)?;
            squares += 1;
        }
    }
    for beta in nat_hom(base, y, y)?.iter().take(samples) {
        let g_beta = kan.map_nat(base, beta, &kan)?;
        for tau in left.iter().take(samples) {
            natural &= forward(&beta.after(base, tau)?)? == g_beta.after(base, &forward(tau)?)?;
            squares += 1;
        }
    }

    let witness = AdjunctionWitness {
        left: "−∘Φ".into(),
        right: "Ran_Φ".into(),
        counts: (left.len(), right.len()),
        round_trips: round,
        natural,
        squares,
    };
    let instance = format!(
        "{} Φ: {}→{}, X={} Y={} G(Y)={}",
        base.label(),
        src.name(),
        tgt.name(),
        x.shape(),
        y.shape(),
        g.shape()
    );
    let mut report = Report::new();
    witness.push_into(&mut report, Label::Ex1, &instance);
    Ok((witness, report))
}

/// `map_J(X, G(Y)) → map_I(X∘Φ, Y)`, the map-level comparison of an adjoint
/// pair, must be an isomorphism.
pub fn verify_map_level_iso<B: Base>(
    base: &B,
    phi: &CatFunctor,
    x: &MFunctor<B::Mor>,
    y: &MFunctor<B::Mor>,
) -> Result<Report> {
    let kan = right_adjoint_of_precomposition(base, phi, y)?;
    let eps = kan.counit(base, y)?;
    let outer = map_functors(base, x, &kan.functor)?;
    let x_phi = x.precompose(phi)?;
    let inner = map_functors(base, &x_phi, y)?;
    let wedge = phi
        .source()
        .objects()
        .map(|i| {
            let j = phi.obj(i);
            let post = base.hom_map(&base.identity(x.obj(j))?, &eps.components[i])?;
            base.compose(&post, outer.leg(j))
        })
        .collect::<Result<Vec<_>>>()?;
    let comparison = inner.end.factor(base, outer.carrier(), &wedge)?;
    let mut report = Report::new();
    report.push(
        Label::Nt1,
        "map(X, G Y) ≅ map(X∘Φ, Y)",
        format!("{} X={} Y={}", base.label(), x.shape(), y.shape()),
        base.is_iso(&comparison),
        format!("{} vs {}", outer.carrier(), inner.carrier()),
    );
    Ok(report)
}

/// `P^N` with `(P^N)_i = map(h_i⊗N, P)`.
#[derive(Debug, Clone)]
pub struct InternalHom<M> {
    pub functor: MFunctor<M>,
    pub maps: Vec<MapObject<M>>,
    pub frees: Vec<FreeFunctor<M>>,
    pub sources: Vec<MFunctor<M>>,
}

pub fn internal_hom_functorcat<B: Base>(
    base: &B,
    n: &MFunctor<B::Mor>,
    p: &MFunctor<B::Mor>,
) -> Result<InternalHom<B::Mor>> {
    let cat = n.index().clone();
    if p.index() != &cat {
        return Err(Error::input("N and P live over different index categories"));
    }
    let frees = free_functors(base, &cat)?;
    let sources: Vec<MFunctor<B::Mor>> =
        frees.iter().map(|h| tensor_pointwise(base, &h.functor, n)).collect::<Result<_>>()?;
    let maps: Vec<MapObject<B::Mor>> = sources.iter().map(|s| map_functors(base, s, p)).collect::<Result<_>>()?;
    let id_n = NatTrans::identity(base, n)?;
    let id_p = NatTrans::identity(base, p)?;
    let objs = maps.iter().map(MapObject::carrier).collect();
    let mors = cat
        .morphisms()
        .map(|f| {
            let (i, i2) = (cat.src(f), cat.dst(f));
            let pre = tensor_nat(base, &free_precompose(base, &frees, f)?, &id_n)?;
            map_functors_mor(base, &pre, &id_p, &maps[i], &maps[i2])
        })
        .collect::<Result<_>>()?;
    let functor = MFunctor::new(base, cat, objs, mors)?;
    Ok(InternalHom { functor, maps, frees, sources })
}

/// `M_i⊗(h⊗N_j) → h⊗(M_i⊗N_j)`.
fn shuffle<B: Base>(base: &B, mi: usize, h: usize, nj: usize) -> Result<B::Mor> {
    let a_inv = base.inverse(&base.associator(mi, h, nj)?).expect("associator is invertible");
    base.compose_all(&[
        &a_inv,
        &base.tensor_mor(&base.braiding(mi, h)?, &base.identity(nj)?)?,
        &base.associator(h, mi, nj)?,
    ])
}

/// `𝓜^I(M⊗N, P) ≅ 𝓜^I(M, P^N)` with an explicit bijection, checked on the
/// full hom-sets, plus naturality in `M` and `P` on up to `samples`
/// endomorphisms.
pub fn verify_closed_monoidal_functorcat<B: Base>(
    base: &B,
    m: &MFunctor<B::Mor>,
    n: &MFunctor<B::Mor>,
    p: &MFunctor<B::Mor>,
    samples: usize,
) -> Result<(AdjunctionWitness, Report)> {
    let cat = m.index().clone();
    let ihom = internal_hom_functorcat(base, n, p)?;
    let mn = tensor_pointwise(base, m, n)?;
    let left = nat_hom(base, &mn, p)?;
    let right = nat_hom(base, m, &ihom.functor)?;

    let forward = |tau: &NatTrans<B::Mor>| -> Result<NatTrans<B::Mor>> {
        let components = cat
            .objects()
            .map(|i| {
                let h = &ihom.frees[i];
                let wedge = cat
                    .objects()
                    .map(|j| {
                        let (hj, mi, nj, pj) = (h.functor.obj(j), m.obj(i), n.obj(j), p.obj(j));
                        let src = base.tensor_obj(mi, nj)?;
                        let hom = base.internal_hom(src, pj)?;
                        let named = h.cotuple(base, j, hom, |f| {
                            let step = base.tensor_mor(m.mor(f), &base.identity(nj)?)?;
                            base.name_of(&base.compose(&tau.components[j], &step)?)
                        })?;
                        let body = base.compose(&base.uncurry(&named, src, pj)?, &shuffle(base, mi, hj, nj)?)?;
                        base.curry(&body, mi, base.tensor_obj(hj, nj)?)
                    })
                    .collect::<Result<Vec<_>>>()?;
                ihom.maps[i].end.factor(base, m.obj(i), &wedge)
            })
            .collect::<Result<_>>()?;
        Ok(NatTrans::new(components))
    };
    let backward = |sigma: &NatTrans<B::Mor>| -> Result<NatTrans<B::Mor>> {
        let components = cat
            .objects()
            .map(|i| {
                let h = &ihom.frees[i];
                let (hi, mi, ni, pi) = (h.functor.obj(i), m.obj(i), n.obj(i), p.obj(i));
                let leg = base.compose(ihom.maps[i].leg(i), &sigma.components[i])?;
                let body = base.uncurry(&leg, base.tensor_obj(hi, ni)?, pi)?;
                let iota = h.injection(base, cat.identity(i))?;
                let l_inv = base.inverse(&base.lunitor(ni)?).expect("unitor is invertible");
                let into = base.compose(&base.tensor_mor(&iota, &base.identity(ni)?)?, &l_inv)?;
                base.compose(&body, &base.tensor_mor(&base.identity(mi)?, &into)?)
            })
            .collect::<Result<_>>()?;
        Ok(NatTrans::new(components))
    };

    let right_set: HashSet<&NatTrans<B::Mor>> = right.iter().collect();
    let mut round = true;
    let mut images = HashSet::new();
    for tau in &left {
        let sigma = forward(tau)?;
        round &= right_set.contains(&sigma) && backward(&sigma)? == *tau;
        images.insert(sigma);
    }
    for sigma in &right {
        let tau = backward(sigma)?;
        round &= is_natural(base, &mn, p, &tau)? && forward(&tau)? == *sigma;
    }
    round &= images.len() == right.len();

    let mut natural = true;
    let mut squares = 0;
    let id_n = NatTrans::identity(base, n)?;
    for alpha in nat_hom(base, m, m)?.iter().take(samples) {
        let pre = tensor_nat(base, alpha, &id_n)?;
        for tau in left.iter().take(samples) {
            natural &= forward(&tau.after(base, &pre)?)? == forward(tau)?.after(base, alpha)?;
            squares += 1;
        }
    }
    for beta in nat_hom(base, p, p)?.iter().take(samples) {
        let post = NatTrans::new(
            ihom.maps
                .iter()
                .zip(&ihom.sources)
                .map(|(map, s)| map_functors_mor(base, &NatTrans::identity(base, s)?, beta, map, map))
                .collect::<Result<_>>()?,
        );
        for tau in left.iter().take(samples) {
            natural &= forward(&beta.after(base, tau)?)? == post.after(base, &forward(tau)?)?;
            squares += 1;
        }
    }

    let witness = AdjunctionWitness {
        left: "−⊗N".into(),
        right: "(−)^N".into(),
        counts: (left.len(), right.len()),
        round_trips: round,
        natural,
        squares,
    };
    let instance = format!(
        "{} over {}, M={} N={} P={} P^N={}",
        base.label(),
        cat.name(),
        m.shape(),
        n.shape(),
        p.shape(),
        ihom.functor.shape()
    );
    let mut report = Report::new();
    witness.push_into(&mut report, Label::MonoidalMI, &instance);
    Ok((witness, report))
}

/// The pointwise monoidal structure on `𝓜^I`: associator, unitors and
/// braiding are natural isomorphisms between the right functors, `s∘s = id`,
/// and pentagon and triangle hold at every object.
pub fn verify_pointwise_monoidal<B: Base>(
    base: &B,
    m: &MFunctor<B::Mor>,
    n: &MFunctor<B::Mor>,
    p: &MFunctor<B::Mor>,
) -> Result<Report> {
    let cat = m.index().clone();
    let k = unit_functor(base, cat.clone())?;
    let mn = tensor_pointwise(base, m, n)?;
    let nm = tensor_pointwise(base, n, m)?;
    let mn_p = tensor_pointwise(base, &mn, p)?;
    let m_np = tensor_pointwise(base, m, &tensor_pointwise(base, n, p)?)?;
    let per = |f: &dyn Fn(ObjId) -> Result<B::Mor>| -> Result<NatTrans<B::Mor>> {
        Ok(NatTrans::new(cat.objects().map(f).collect::<Result<_>>()?))
    };
    let assoc = per(&|i| base.associator(m.obj(i), n.obj(i), p.obj(i)))?;
    let lunit = per(&|i| base.lunitor(m.obj(i)))?;
    let runit = per(&|i| base.runitor(m.obj(i)))?;
    let braid = per(&|i| base.braiding(m.obj(i), n.obj(i)))?;
    let braid_back = per(&|i| base.braiding(n.obj(i), m.obj(i)))?;

    let nat_iso = |src: &MFunctor<B::Mor>, dst: &MFunctor<B::Mor>, t: &NatTrans<B::Mor>| -> Result<bool> {
        Ok(is_natural(base, src, dst, t)? && t.is_iso(base))
    };
    let instance = format!("{} over {}, M={} N={} P={}", base.label(), cat.name(), m.shape(), n.shape(), p.shape());
    let mut report = Report::new();
    report.push(Label::MonoidalMI, "associator natural iso", instance.clone(), nat_iso(&mn_p, &m_np, &assoc)?, "");
    let km = tensor_pointwise(base, &k, m)?;
    let mk = tensor_pointwise(base, m, &k)?;
    let unitors = nat_iso(&km, m, &lunit)? && nat_iso(&mk, m, &runit)?;
    report.push(Label::MonoidalMI, "unitors natural iso", instance.clone(), unitors, "");
    let symmetric = nat_iso(&mn, &nm, &braid)? && braid_back.after(base, &braid)? == NatTrans::identity(base, &mn)?;
    report.push(Label::MonoidalMI, "braiding natural, s∘s=id", instance.clone(), symmetric, "");
    let mut laws = true;
    for i in cat.objects() {
        let (a, b, c) = (m.obj(i), n.obj(i), p.obj(i));
        laws &= coherence::pentagon(base, a, b, c, a)?;
        laws &= coherence::triangle(base, a, b)?;
        laws &= coherence::hexagon(base, a, b, c)?;
    }
    report.push(Label::MonoidalMI, "pentagon, triangle, hexagon", instance, laws, "");
    Ok(report)
}

/// `−⊗N` preserves the density coends: at every `j` the canonical
/// `∫^i (h_i(j)⊗M_i)⊗N_j → (∫^i h_i(j)⊗M_i)⊗N_j` is an isomorphism, and the
/// density comparison tensored with `N_j` is again one.
pub fn verify_tensor_cocontinuity<B: Base>(base: &B, m: &MFunctor<B::Mor>, n: &MFunctor<B::Mor>) -> Result<Report> {
    let cat = m.index().clone();
    let frees = free_functors(base, &cat)?;
    let d = density(base, m)?;
    let mut preserved = true;
    let mut still_iso = true;
    for j in cat.objects() {
        let nj = n.obj(j);
        let id_nj = base.identity(nj)?;
        let codiff = codifferential_at(base, &frees, m, j)?;
        let tensored = Bifunctor::from_fn(
            base,
            cat.clone(),
            |i, i2| base.tensor_obj(codiff.obj(i, i2), nj),
            |f, g| base.tensor_mor(codiff.mor(f, g), &id_nj),
        )?;
        let coend = compute_coend(base, &tensored)?;
        let target = base.tensor_obj(d.coends[j].carrier, nj)?;
        let comps = d.coends[j].colegs.iter().map(|c| base.tensor_mor(c, &id_nj)).collect::<Result<Vec<_>>>()?;
        preserved &= base.is_iso(&coend.cofactor(base, target, &comps)?);
        still_iso &= base.is_iso(&base.tensor_mor(&d.comparisons[j], &id_nj)?);
    }
    let instance = format!("{} over {}, M={} N={}", base.label(), cat.name(), m.shape(), n.shape());
    let mut report = Report::new();
    report.push(Label::Nt1, "−⊗N preserves coends", instance.clone(), preserved, "");
    report.push(Label::Nt1, "−⊗N keeps density iso", instance, still_iso, "");
    Ok(report)
}

/// Precomposition along `Φ` keeps the density comparison of `M` (over the
/// target of `Φ`) an isomorphism at every object of the source.
pub fn verify_precomposition_cocontinuity<B: Base>(base: &B, phi: &CatFunctor, m: &MFunctor<B::Mor>) -> Result<Report> {
    let d = density(base, m)?;
    let ok = phi.source().objects().all(|i| base.is_iso(&d.comparisons[phi.obj(i)]));
    let mut report = Report::new();
    report.push(
        Label::Nt1,
        "−∘Φ preserves density",
        format!("{} Φ: {}→{}, M={}", base.label(), phi.source().name(), phi.target().name(), m.shape()),
        ok,
        "",
    );
    Ok(report)
}

/// The limit of `Y` computed directly as the equalizer of
/// `∏_i Y_i ⇉ ∏_f Y_{dst f}`.
pub fn limit<B: Base>(base: &B, y: &MFunctor<B::Mor>) -> Result<(usize, Vec<B::Mor>)> {
    let cat = y.index();
    let (prod, proj) = base.product(y.objs())?;
    let arrows: Vec<_> = cat.non_identity_morphisms().collect();
    let targets: Vec<usize> = arrows.iter().map(|&f| y.obj(cat.dst(f))).collect();
    let moved = arrows.iter().map(|&f| base.compose(y.mor(f), &proj[cat.src(f)])).collect::<Result<Vec<_>>>()?;
    let direct: Vec<_> = arrows.iter().map(|&f| proj[cat.dst(f)].clone()).collect();
    let eq = base.equalizer(&base.tuple(prod, &targets, &moved)?, &base.tuple(prod, &targets, &direct)?)?;
    let legs = proj.iter().map(|p| base.compose(p, &eq.include)).collect::<Result<_>>()?;
    Ok((eq.carrier, legs))
}

/// `Ran` along `I → 1` agrees with the limit: the cone `lim Y → [k, Y_i]`
/// factors through `G(Y)_•` by an isomorphism.
pub fn verify_ran_to_terminal<B: Base>(base: &B, y: &MFunctor<B::Mor>) -> Result<Report> {
    let phi = CatFunctor::to_terminal(y.index().clone());
    let kan = right_adjoint_of_precomposition(base, &phi, y)?;
    let (lim, legs) = limit(base, y)?;
    let wedge = legs
        .iter()
        .zip(y.objs())
        .map(|(l, &yi)| {
            let to_hom = base.inverse(&base.unit_hom_iso(yi)?).expect("[k, c] ≅ c");
            base.compose(&to_hom, l)
        })
        .collect::<Result<Vec<_>>>()?;
    let comparison = kan.maps[0].end.factor(base, lim, &wedge)?;
    let mut report = Report::new();
    report.push(
        Label::Ex1,
        "Ran to terminal = limit",
        format!("{} over {}, Y={}", base.label(), y.index().name(), y.shape()),
        base.is_iso(&comparison),
        format!("{} vs {}", kan.functor.obj(0), lim),
    );
    Ok(report)
}

/// `Ev_i` has adjoints on both sides: `h_i⊗− ⊣ Ev_i` and `Ev_i ⊣ Ran` along
/// the point `i`, checked on the same `m`, `X` and `Y = X_i`.
pub fn verify_ev_two_sided<B: Base>(
    base: &B,
    index: &Arc<FinCat>,
    i: ObjId,
    m: usize,
    x: &MFunctor<B::Mor>,
    samples: usize,
) -> Result<Report> {
    let mut report = crate::yoneda::verify_eval_adjunction(base, index, i, m, x, samples)?;
    let phi = CatFunctor::point(index.clone(), i);
    let y = MFunctor::constant(base, phi.source().clone(), x.obj(i))?;
    let (_, right) = verify_precomposition_adjunction(base, &phi, x, &y, samples)?;
    report.extend(right);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basecat::{FinSet, FinVect, SetMap};
    use crate::fincat::fixtures;
    use crate::yoneda::build_h;

    fn set(dst: usize, t: &[usize]) -> SetMap {
        SetMap::new(dst, t.to_vec()).unwrap()
    }

    #[test]
    fn kan_examples() {
        let s = FinSet::new();
        let arrow = Arc::new(fixtures::arrow());
        let term = Arc::new(fixtures::terminal());
        let y = MFunctor::constant(&s, term.clone(), 3).unwrap();
        // Oracle: G(Y)_j = 3^{|J(j, Φ•)|}.
        for (o, expect) in [(0, vec![3, 1]), (1, vec![3, 3])] {
            let phi = CatFunctor::point(arrow.clone(), o);
            let kan = right_adjoint_of_precomposition(&s, &phi, &y).unwrap();
            let hom_sizes: Vec<usize> = arrow.objects().map(|j| 3usize.pow(arrow.hom_set(j, o).len() as u32)).collect();
            assert_eq!(kan.functor.objs(), &expect[..]);
            assert_eq!(kan.functor.objs(), &hom_sizes[..]);
        }
        let id = CatFunctor::identity(arrow.clone());
        let y = MFunctor::from_generators(&s, arrow, vec![2, 3], vec![set(3, &[1, 2])]).unwrap();
        assert_eq!(right_adjoint_of_precomposition(&s, &id, &y).unwrap().functor.objs(), y.objs());
    }

    #[test]
    fn precomposition_adjunction_counts() {
        let s = FinSet::new();
        let arrow = Arc::new(fixtures::arrow());
        let term = Arc::new(fixtures::terminal());
        let phi = CatFunctor::point(arrow.clone(), 0);
        let x = MFunctor::from_generators(&s, arrow.clone(), vec![2, 1], vec![set(1, &[0, 0])]).unwrap();
        let y = MFunctor::constant(&s, term, 3).unwrap();
        let (w, r) = verify_precomposition_adjunction(&s, &phi, &x, &y, 4).unwrap();
        assert_eq!(w.counts, (9, 9));
        assert!(r.all_passed(), "{}", r.render_text());

        let id = CatFunctor::identity(arrow.clone());
        let (w, _) = verify_precomposition_adjunction(&s, &id, &x, &x, 4).unwrap();
        assert!(w.passed());

        let v = FinVect::new(2).unwrap();
        let xv = MFunctor::from_generators(&v, arrow, vec![2, 1], vec![v.matrix(&[vec![1, 0]], 2).unwrap()]).unwrap();
        let yv = MFunctor::constant(&v, Arc::new(fixtures::terminal()), 2).unwrap();
        let (w, r) = verify_precomposition_adjunction(&v, &phi, &xv, &yv, 4).unwrap();
        assert_eq!(w.counts, (16, 16));
        assert!(r.all_passed(), "{}", r.render_text());
    }

    #[test]
    fn internal_hom_examples() {
        let s = FinSet::new();
        let term = Arc::new(fixtures::terminal());
        let n = MFunctor::constant(&s, term.clone(), 2).unwrap();
        let p = MFunctor::constant(&s, term.clone(), 3).unwrap();
        assert_eq!(internal_hom_functorcat(&s, &n, &p).unwrap().functor.objs(), &[9]);

        let arrow = Arc::new(fixtures::arrow());
        let n = MFunctor::constant(&s, arrow.clone(), 1).unwrap();
        let p = MFunctor::from_generators(&s, arrow.clone(), vec![2, 3], vec![set(3, &[0, 1])]).unwrap();
        let ihom = internal_hom_functorcat(&s, &n, &p).unwrap();
        // Brute force: |𝓜^I(h_0⊗N, P)|.
        let h0 = build_h(&s, arrow.clone(), 0).unwrap();
        let src = tensor_pointwise(&s, &h0.functor, &n).unwrap();
        assert_eq!(ihom.functor.obj(0), nat_hom(&s, &src, &p).unwrap().len());
        assert_eq!(ihom.functor.obj(0), 2);

        let k = unit_functor(&s, arrow.clone()).unwrap();
        assert_eq!(internal_hom_functorcat(&s, &k, &p).unwrap().functor.objs(), p.objs());
    }

    #[test]
    fn closed_monoidal_examples() {
        let s = FinSet::new();
        let arrow = Arc::new(fixtures::arrow());
        let one = MFunctor::constant(&s, arrow.clone(), 1).unwrap();
        let p = MFunctor::from_generators(&s, arrow.clone(), vec![2, 3], vec![set(3, &[0, 1])]).unwrap();
        let (w, r) = verify_closed_monoidal_functorcat(&s, &one, &one, &p, 4).unwrap();
        assert_eq!(w.counts, (2, 2));
        assert!(r.all_passed(), "{}", r.render_text());

        let m = MFunctor::from_generators(&s, arrow.clone(), vec![2, 2], vec![set(2, &[1, 0])]).unwrap();
        let n = MFunctor::from_generators(&s, arrow.clone(), vec![1, 2], vec![set(2, &[1])]).unwrap();
        let (w, r) = verify_closed_monoidal_functorcat(&s, &m, &n, &p, 3).unwrap();
        assert!(w.passed(), "{}", r.render_text());

        let v = FinVect::new(2).unwrap();
        let term = Arc::new(fixtures::terminal());
        let d1 = MFunctor::constant(&v, term, 1).unwrap();
        let (w, _) = verify_closed_monoidal_functorcat(&v, &d1, &d1, &d1, 3).unwrap();
        assert_eq!(w.counts, (2, 2));
        assert!(w.passed());
        assert!(verify_pointwise_monoidal(&s, &m, &n, &p).unwrap().all_passed());
    }

    #[test]
    fn cocontinuity_and_limits() {
        let s = FinSet::new();
        let sq = Arc::new(fixtures::commutative_square());
        let m = MFunctor::constant(&s, sq.clone(), 2).unwrap();
        let n = MFunctor::constant(&s, sq.clone(), 2).unwrap();
        assert!(verify_tensor_cocontinuity(&s, &m, &n).unwrap().all_passed());
        let phi = CatFunctor::point(sq.clone(), 1);
        assert!(verify_precomposition_cocontinuity(&s, &phi, &m).unwrap().all_passed());

        let idem = Arc::new(fixtures::walking_idempotent());
        let y = MFunctor::from_generators(&s, idem, vec![3], vec![set(3, &[0, 0, 2])]).unwrap();
        let r = verify_ran_to_terminal(&s, &y).unwrap();
        assert!(r.all_passed(), "{}", r.render_text());
        // Limit of an idempotent is its fixed points: {0, 2}.
        assert_eq!(limit(&s, &y).unwrap().0, 2);
    }

    #[test]
    fn ev_two_sided_and_map_level() {
        let s = FinSet::new();
        let arrow = Arc::new(fixtures::arrow());
        let x = MFunctor::from_generators(&s, arrow.clone(), vec![2, 3], vec![set(3, &[0, 2])]).unwrap();
        for i in arrow.objects() {
            let r = verify_ev_two_sided(&s, &arrow, i, 2, &x, 3).unwrap();
            assert!(r.all_passed(), "{}", r.render_text());
        }
        let phi = CatFunctor::point(arrow.clone(), 0);
        let y = MFunctor::constant(&s, phi.source().clone(), 2).unwrap();
        assert!(verify_map_level_iso(&s, &phi, &x, &y).unwrap().all_passed());
    }
}
