//! Free functors `h_i: j ↦ ∐_{I(i,j)} k`, the `U ⊣ V` adjunction, the
//! monoidal Yoneda isomorphism `map(h_i, M) ≅ M_i`, the evaluation
//! adjunction `h_i⊗− ⊣ Ev_i`, and density `M ≅ ∫^i h_i ⊗ M_i`.

use std::collections::HashSet;
use std::sync::Arc;

use crate::basecat::{Base, FinSet};
use crate::ends::{compute_coend, Bifunctor, CoendResult};
use crate::error::{Error, Result};
use crate::fincat::{FinCat, MorId, ObjId};
use crate::funcat::{
    act_right, is_natural, map_functors, nat_hom, transpose_from_map, transpose_to_map, MFunctor, MapObject, NatTrans,
};
use crate::report::{Label, Report};

/// `h_i` together with the morphism of `I` behind each summand.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeFunctor<M> {
    pub functor: MFunctor<M>,
    pub source: ObjId,
    /// `summands[j]` lists `I(i, j)` in canonical order; position is the summand index.
    pub summands: Vec<Vec<MorId>>,
}

impl<M: Clone + Eq> FreeFunctor<M> {
    pub fn index(&self) -> &Arc<FinCat> {
        self.functor.index()
    }

    /// Summand position of `f: i → j` in `h_i(j)`.
    pub fn position(&self, j: ObjId, f: MorId) -> usize {
        self.summands[j].iter().position(|&g| g == f).expect("morphism out of i")
    }

    /// `ι_f: k → h_i(j)` for `f: i → j`.
    pub fn injection<B: Base<Mor = M>>(&self, base: &B, f: MorId) -> Result<M> {
        let j = self.index().dst(f);
        let units = vec![base.unit(); self.summands[j].len()];
        base.injection(&units, self.position(j, f))
    }

    /// The cotuple `h_i(j) → c` with summand `f` sent by `legs(f)`.
    pub fn cotuple<B: Base<Mor = M>>(
        &self,
        base: &B,
        j: ObjId,
        cod: usize,
        mut legs: impl FnMut(MorId) -> Result<M>,
    ) -> Result<M> {
        let units = vec![base.unit(); self.summands[j].len()];
        let legs = self.summands[j].iter().map(|&f| legs(f)).collect::<Result<Vec<_>>>()?;
        base.cotuple(cod, &units, &legs)
    }
}

/// `U(s) = ∐_s k`.
pub fn free_u<B: Base>(base: &B, s: usize) -> Result<usize> {
    base.coproduct_obj(&vec![base.unit(); s])
}

/// `V(m) = 𝓜(k, m)`.
pub fn forget_v<B: Base>(base: &B, m: usize) -> Result<Vec<B::Mor>> {
    base.hom_enumerate(base.unit(), m)
}

pub fn build_h<B: Base>(base: &B, index: Arc<FinCat>, i: ObjId) -> Result<FreeFunctor<B::Mor>> {
    let cat = index.clone();
    let k = base.unit();
    let summands: Vec<Vec<MorId>> = cat.objects().map(|j| cat.hom_set(i, j)).collect();
    let objs = summands.iter().map(|s| free_u(base, s.len())).collect::<Result<Vec<_>>>()?;
    let mut mors = Vec::with_capacity(cat.num_morphisms());
    for g in cat.morphisms() {
        let (j, j2) = (cat.src(g), cat.dst(g));
        let units_dst = vec![k; summands[j2].len()];
        let legs = summands[j]
            .iter()
            .map(|&f| {
                let gf = cat.compose(g, f).expect("composable");
                let pos = summands[j2].iter().position(|&x| x == gf).expect("composite lands in I(i, j')");
                base.injection(&units_dst, pos)
            })
            .collect::<Result<Vec<_>>>()?;
        mors.push(base.cotuple(objs[j2], &vec![k; summands[j].len()], &legs)?);
    }
    let functor = MFunctor::new(base, index, objs, mors)?;
    Ok(FreeFunctor { functor, source: i, summands })
}

/// All free functors of `I`, indexed by object.
pub fn free_functors<B: Base>(base: &B, index: &Arc<FinCat>) -> Result<Vec<FreeFunctor<B::Mor>>> {
    index.objects().map(|i| build_h(base, index.clone(), i)).collect()
}

/// `h_g: h_i → h_{i'}` for `g: i' → i`, sending summand `f` to `f∘g`.
pub fn free_precompose<B: Base>(base: &B, frees: &[FreeFunctor<B::Mor>], g: MorId) -> Result<NatTrans<B::Mor>> {
    let cat = frees[0].index().clone();
    let (i2, i) = (cat.src(g), cat.dst(g));
    let (from, to) = (&frees[i], &frees[i2]);
    let components = cat
        .objects()
        .map(|j| {
            from.cotuple(base, j, to.functor.obj(j), |f| to.injection(base, cat.compose(f, g).expect("composable")))
        })
        .collect::<Result<_>>()?;
    Ok(NatTrans::new(components))
}

fn instance<B: Base>(base: &B, cat: &FinCat, i: Option<ObjId>, m: &MFunctor<B::Mor>) -> String {
    match i {
        Some(i) => format!("{} over {}, i={} M={}", base.label(), cat.name(), cat.object_name(i), m.shape()),
        None => format!("{} over {}, M={}", base.label(), cat.name(), m.shape()),
    }
}

/// `𝓜(U(s), m) ≅ Set(s, V(m))` by restriction along the injections, checked
/// on every element, with naturality against up to `samples` maps `s → s`
/// and `m → m`.
pub fn verify_uv_adjunction<B: Base>(base: &B, s: usize, m: usize, samples: usize) -> Result<Report> {
    let sets = FinSet::with_caps(base.caps());
    let units = vec![base.unit(); s];
    let us = free_u(base, s)?;
    let v = forget_v(base, m)?;
    let left = base.hom_enumerate(us, m)?;
    let right = sets.hom_enumerate(s, v.len())?;
    let inj = (0..s).map(|x| base.injection(&units, x)).collect::<Result<Vec<_>>>()?;
    let lookup = |e: &B::Mor| v.iter().position(|w| w == e).expect("V(m) is exhaustive");
    let restrict =
        |u: &B::Mor| -> Result<Vec<usize>> { inj.iter().map(|i| Ok(lookup(&base.compose(u, i)?))).collect() };
    let extend = |t: &[usize]| -> Result<B::Mor> {
        let legs: Vec<B::Mor> = t.iter().map(|&x| v[x].clone()).collect();
        base.cotuple(m, &units, &legs)
    };

    let mut round = true;
    let mut images = HashSet::new();
    for u in &left {
        let t = restrict(u)?;
        round &= extend(&t)? == *u;
        images.insert(t);
    }
    for t in &right {
        round &= restrict(&extend(t.table())?)? == t.table();
    }
    round &= images.len() == right.len();

    let mut natural = true;
    for t in sets.hom_enumerate(s, s)?.iter().take(samples) {
        // U(t) = cotuple of ι_{t(x)}.
        let ut = base.cotuple(us, &units, &t.table().iter().map(|&y| inj[y].clone()).collect::<Vec<_>>())?;
        for u in left.iter().take(samples) {
            let lhs = restrict(&base.compose(u, &ut)?)?;
            let r = restrict(u)?;
            natural &= lhs == t.table().iter().map(|&x| r[x]).collect::<Vec<_>>();
        }
    }
    for h in base.hom_enumerate(m, m)?.iter().take(samples) {
        for u in left.iter().take(samples) {
            let lhs = restrict(&base.compose(h, u)?)?;
            let rhs = restrict(u)?.iter().map(|&x| Ok(lookup(&base.compose(h, &v[x])?))).collect::<Result<Vec<_>>>()?;
            natural &= lhs == rhs;
        }
    }

    let inst = format!("{} s={s} m={m}", base.label());
    let mut report = Report::new();
    report.push(
        Label::Eq1,
        "U⊣V cardinalities",
        inst.clone(),
        left.len() == right.len(),
        format!("{} vs {}", left.len(), right.len()),
    );
    report.push(Label::Eq1, "U⊣V round-trip", inst.clone(), round, "");
    report.push(Label::Eq1, "U⊣V natural", inst, natural, "");
    Ok(report)
}

/// Sizes of `𝓜^I(h_i, M)` and `𝓜(k, M_i)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Eq1Counts {
    pub transformations: usize,
    pub elements: usize,
}

/// `𝓜^I(h_i, M) ≅ 𝓜(k, M_i)`: forward `τ ↦ τ_i ∘ ι_{id_i}`, backward
/// `u ↦ (cotuple_f M(f) ∘ u)_j`, both checked on the full hom-sets.
pub fn verify_lemma_eq1<B: Base>(
    base: &B,
    index: &Arc<FinCat>,
    i: ObjId,
    m: &MFunctor<B::Mor>,
) -> Result<(Eq1Counts, Report)> {
    let h = build_h(base, index.clone(), i)?;
    let k = base.unit();
    let left = nat_hom(base, &h.functor, m)?;
    let right = base.hom_enumerate(k, m.obj(i))?;
    let iota = h.injection(base, index.identity(i))?;
    let forward = |tau: &NatTrans<B::Mor>| base.compose(&tau.components[i], &iota);
    let backward = |u: &B::Mor| -> Result<NatTrans<B::Mor>> {
        let components = index
            .objects()
            .map(|j| h.cotuple(base, j, m.obj(j), |f| base.compose(m.mor(f), u)))
            .collect::<Result<_>>()?;
        Ok(NatTrans::new(components))
    };
    let mut round = true;
    let mut natural = true;
    for tau in &left {
        round &= backward(&forward(tau)?)? == *tau;
    }
    for u in &right {
        let tau = backward(u)?;
        natural &= is_natural(base, &h.functor, m, &tau)?;
        round &= forward(&tau)? == *u;
    }
    let counts = Eq1Counts { transformations: left.len(), elements: right.len() };
    let inst = instance(base, index, Some(i), m);
    let mut report = Report::new();
    report.push(
        Label::Eq1,
        "cardinalities",
        inst.clone(),
        counts.transformations == counts.elements,
        format!("{} vs {}", counts.transformations, counts.elements),
    );
    report.push(Label::Eq1, "backward map natural", inst.clone(), natural, "");
    report.push(Label::Eq1, "round-trip", inst, round, "");
    Ok((counts, report))
}

/// The canonical `θ: map(h_i, M) → M_i` and its hand-built inverse `ψ`.
#[derive(Debug, Clone)]
pub struct YonedaMaps<M> {
    pub map: MapObject<M>,
    pub theta: M,
    pub psi: M,
}

/// `θ = ([k, M_i] ≅ M_i) ∘ [ι_{id_i}, M_i] ∘ leg_i`; `ψ` factors the wedge
/// `M_i → [h_i(j), M_j]` obtained by currying `cotuple_f name(M(f))`.
pub fn yoneda_maps<B: Base>(base: &B, h: &FreeFunctor<B::Mor>, m: &MFunctor<B::Mor>) -> Result<YonedaMaps<B::Mor>> {
    let cat = h.index().clone();
    let i = h.source;
    let map = map_functors(base, &h.functor, m)?;
    let mi = m.obj(i);
    let iota = h.injection(base, cat.identity(i))?;
    let theta = base.compose_all(&[map.leg(i), &base.hom_map(&iota, &base.identity(mi)?)?, &base.unit_hom_iso(mi)?])?;
    let wedge = cat
        .objects()
        .map(|j| {
            let (hj, mj) = (h.functor.obj(j), m.obj(j));
            let hom = base.internal_hom(mi, mj)?;
            let named = h.cotuple(base, j, hom, |f| base.name_of(m.mor(f)))?;
            let body = base.swap_source(&base.uncurry(&named, mi, mj)?, hj, mi)?;
            base.curry(&body, mi, hj)
        })
        .collect::<Result<Vec<_>>>()?;
    let psi = map.end.factor(base, mi, &wedge)?;
    Ok(YonedaMaps { map, theta, psi })
}

/// `map(h_i, M) ≅ M_i`: `θ` is an isomorphism and `ψ` is inverse on both sides.
pub fn verify_yoneda<B: Base>(
    base: &B,
    index: &Arc<FinCat>,
    i: ObjId,
    m: &MFunctor<B::Mor>,
) -> Result<(usize, Report)> {
    let h = build_h(base, index.clone(), i)?;
    let y = yoneda_maps(base, &h, m)?;
    let carrier = y.map.carrier();
    let inst = instance(base, index, Some(i), m);
    let mut report = Report::new();
    report.push(
        Label::L2,
        "θ is_iso",
        inst.clone(),
        base.is_iso(&y.theta),
        format!("carrier {carrier}, M_i {}", m.obj(i)),
    );
    let left = base.compose(&y.psi, &y.theta)? == base.identity(carrier)?;
    let right = base.compose(&y.theta, &y.psi)? == base.identity(m.obj(i))?;
    report.push(Label::L2, "ψ∘θ = id", inst.clone(), left, "");
    report.push(Label::L2, "θ∘ψ = id", inst, right, "");
    Ok((carrier, report))
}

/// `𝓜^I(h_i⊗m, M) ≅ 𝓜(m, M_i)` by the chain through the closed-module
/// bijection and `θ`, compared on full hom-sets with evaluation at the
/// identity summand, plus naturality in `m` and `M` on up to `samples`
/// endomorphisms.
pub fn verify_eval_adjunction<B: Base>(
    base: &B,
    index: &Arc<FinCat>,
    i: ObjId,
    m: usize,
    functor: &MFunctor<B::Mor>,
    samples: usize,
) -> Result<Report> {
    let h = build_h(base, index.clone(), i)?;
    let y = yoneda_maps(base, &h, functor)?;
    let left_obj = act_right(base, &h.functor, m)?;
    let left = nat_hom(base, &left_obj, functor)?;
    let right = base.hom_enumerate(m, functor.obj(i))?;

    // τ_j: h(j)⊗m → M_j becomes m⊗h(j) → M_j through the braiding.
    let to_right = |tau: &NatTrans<B::Mor>| -> Result<B::Mor> {
        let swapped = NatTrans::new(
            tau.components
                .iter()
                .zip(h.functor.objs())
                .map(|(t, &hj)| base.swap_source(t, hj, m))
                .collect::<Result<_>>()?,
        );
        let u = transpose_to_map(base, m, &swapped, &y.map)?;
        base.compose(&y.theta, &u)
    };
    let to_left = |v: &B::Mor| -> Result<NatTrans<B::Mor>> {
        let u = base.compose(&y.psi, v)?;
        let swapped = transpose_from_map(base, &u, &y.map)?;
        Ok(NatTrans::new(
            swapped
                .components
                .iter()
                .zip(h.functor.objs())
                .map(|(t, &hj)| base.swap_source(t, m, hj))
                .collect::<Result<_>>()?,
        ))
    };
    // Direct reading: m ≅ k⊗m → h_i(i)⊗m → M_i.
    let iota = h.injection(base, index.identity(i))?;
    let l_inv = base.inverse(&base.lunitor(m)?).expect("unitor is invertible");
    let at_identity = base.compose(&base.tensor_mor(&iota, &base.identity(m)?)?, &l_inv)?;

    let right_set: HashSet<&B::Mor> = right.iter().collect();
    let mut round = true;
    let mut direct = true;
    let mut images = HashSet::new();
    for tau in &left {
        let v = to_right(tau)?;
        round &= right_set.contains(&v) && to_left(&v)? == *tau;
        direct &= v == base.compose(&tau.components[i], &at_identity)?;
        images.insert(v);
    }
    for v in &right {
        let tau = to_left(v)?;
        round &= is_natural(base, &left_obj, functor, &tau)? && to_right(&tau)? == *v;
    }
    round &= images.len() == right.len();

    let mut natural = true;
    let id_h = NatTrans::identity(base, &h.functor)?;
    for g in base.hom_enumerate(m, m)?.iter().take(samples) {
        let pre = crate::funcat::tensor_nat(base, &id_h, &NatTrans::new(vec![g.clone(); index.num_objects()]))?;
        for tau in left.iter().take(samples) {
            natural &= to_right(&tau.after(base, &pre)?)? == base.compose(&to_right(tau)?, g)?;
        }
    }
    for nu in nat_hom(base, functor, functor)?.iter().take(samples) {
        for tau in left.iter().take(samples) {
            natural &= to_right(&nu.after(base, tau)?)? == base.compose(&nu.components[i], &to_right(tau)?)?;
        }
    }

    let inst = format!("{}, m={m}", instance(base, index, Some(i), functor));
    let mut report = Report::new();
    report.push(
        Label::Nl3,
        "cardinalities",
        inst.clone(),
        left.len() == right.len(),
        format!("{} vs {}", left.len(), right.len()),
    );
    report.push(Label::Nl3, "round-trip", inst.clone(), round, "");
    report.push(Label::Nl3, "agrees with evaluation at id", inst.clone(), direct, "");
    report.push(Label::Nl3, "natural in m and M", inst, natural, "");
    Ok(report)
}

/// The codifferential at evaluation point `j`: `(i, i') ↦ h_i(j) ⊗ M_{i'}`.
pub fn codifferential_at<B: Base>(
    base: &B,
    frees: &[FreeFunctor<B::Mor>],
    m: &MFunctor<B::Mor>,
    j: ObjId,
) -> Result<Bifunctor<B::Mor>> {
    let cat = m.index().clone();
    let pre: Vec<NatTrans<B::Mor>> = cat.morphisms().map(|f| free_precompose(base, frees, f)).collect::<Result<_>>()?;
    Bifunctor::from_fn(
        base,
        cat,
        |i, i2| base.tensor_obj(frees[i].functor.obj(j), m.obj(i2)),
        |f, g| base.tensor_mor(&pre[f].components[j], m.mor(g)),
    )
}

/// Coends of the codifferential at every `j` with the comparison maps to `M_j`.
#[derive(Debug, Clone)]
pub struct Density<M> {
    pub coends: Vec<CoendResult<M>>,
    pub comparisons: Vec<M>,
}

impl<M> Density<M> {
    pub fn carriers(&self) -> Vec<usize> {
        self.coends.iter().map(|c| c.carrier).collect()
    }
}

pub fn density<B: Base>(base: &B, m: &MFunctor<B::Mor>) -> Result<Density<B::Mor>> {
    let cat = m.index().clone();
    let frees = free_functors(base, &cat)?;
    let mut coends = Vec::with_capacity(cat.num_objects());
    let mut comparisons = Vec::with_capacity(cat.num_objects());
    for j in cat.objects() {
        let bif = codifferential_at(base, &frees, m, j)?;
        let coend = compute_coend(base, &bif)?;
        let mj = m.obj(j);
        let comps = cat
            .objects()
            .map(|i| {
                let hom = base.internal_hom(m.obj(i), mj)?;
                let named = frees[i].cotuple(base, j, hom, |f| base.name_of(m.mor(f)))?;
                base.uncurry(&named, m.obj(i), mj)
            })
            .collect::<Result<Vec<_>>>()?;
        comparisons.push(coend.cofactor(base, mj, &comps)?);
        coends.push(coend);
    }
    Ok(Density { coends, comparisons })
}

/// `∫^i h_i ⊗ M_i → M` is an isomorphism at every `j` and natural in `j`.
pub fn verify_density<B: Base>(base: &B, m: &MFunctor<B::Mor>) -> Result<(Vec<usize>, Report)> {
    let cat = m.index().clone();
    if cat.num_objects() == 0 {
        let mut report = Report::new();
        report.push(Label::L0, "is_iso", instance(base, &cat, None, m), true, "no objects");
        return Ok((Vec::new(), report));
    }
    let frees = free_functors(base, &cat)?;
    let d = density(base, m)?;
    let inst = instance(base, &cat, None, m);
    let carriers = d.carriers();
    let iso = d.comparisons.iter().all(|c| base.is_iso(c));

    let mut natural = true;
    for g in cat.non_identity_morphisms() {
        let (j, j2) = (cat.src(g), cat.dst(g));
        // D(g): ∫^i h_i(j)⊗M_i → ∫^i h_i(j')⊗M_i.
        let comps = cat
            .objects()
            .map(|i| {
                let step = base.tensor_mor(frees[i].functor.mor(g), &base.identity(m.obj(i))?)?;
                base.compose(&d.coends[j2].colegs[i], &step)
            })
            .collect::<Result<Vec<_>>>()?;
        let dg = d.coends[j].cofactor(base, d.coends[j2].carrier, &comps)?;
        natural &= base.compose(m.mor(g), &d.comparisons[j])? == base.compose(&d.comparisons[j2], &dg)?;
    }

    let shown: Vec<String> = carriers.iter().map(usize::to_string).collect();
    let mut report = Report::new();
    report.push(Label::L0, "is_iso", inst.clone(), iso, format!("coend ({})", shown.join(",")));
    report.push(Label::L0, "natural in j", inst, natural, "");
    Ok((carriers, report))
}

/// The classical count: `|𝓜^I(h_i, M)| = |M_i|` in finite sets.
pub fn classical_yoneda_count(
    sets: &FinSet,
    index: &Arc<FinCat>,
    i: ObjId,
    m: &MFunctor<crate::basecat::SetMap>,
) -> Result<bool> {
    let h = build_h(sets, index.clone(), i)?;
    if h.functor.index() != m.index() {
        return Err(Error::input("functor lives over a different index category"));
    }
    Ok(nat_hom(sets, &h.functor, m)?.len() == m.obj(i))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basecat::{FinVect, SetMap};
    use crate::fincat::fixtures;

    fn set(dst: usize, t: &[usize]) -> SetMap {
        SetMap::new(dst, t.to_vec()).unwrap()
    }

    #[test]
    fn free_functor_examples() {
        let s = FinSet::new();
        let term = Arc::new(fixtures::terminal());
        assert_eq!(build_h(&s, term, 0).unwrap().functor.objs(), &[1]);

        let arrow = Arc::new(fixtures::arrow());
        let h0 = build_h(&s, arrow.clone(), 0).unwrap();
        assert_eq!(h0.functor.objs(), &[1, 1]);
        assert_eq!(h0.functor.mor(2).table(), &[0]);
        let h1 = build_h(&s, arrow, 1).unwrap();
        assert_eq!(h1.functor.objs(), &[0, 1]);

        let idem = Arc::new(fixtures::walking_idempotent());
        let h = build_h(&s, idem, 0).unwrap();
        assert_eq!(h.functor.objs(), &[2]);
        // Summands {id, e}; e sends both to the e-summand.
        assert_eq!(h.functor.mor(1).table(), &[1, 1]);
    }

    #[test]
    fn uv_examples() {
        let s = FinSet::new();
        assert!(verify_uv_adjunction(&s, 3, 2, 4).unwrap().all_passed());
        assert!(verify_uv_adjunction(&s, 0, 2, 4).unwrap().all_passed());
        let v = FinVect::new(2).unwrap();
        assert_eq!(free_u(&v, 3).unwrap(), 3);
        assert_eq!(forget_v(&v, 2).unwrap().len(), 4);
        // 2×3 matrices over F_2: 2^6 = 64 = 4^3.
        assert_eq!(v.hom_enumerate(3, 2).unwrap().len(), 64);
        let r = verify_uv_adjunction(&v, 3, 2, 4).unwrap();
        assert!(r.all_passed(), "{}", r.render_text());
    }

    #[test]
    fn eq1_examples() {
        let s = FinSet::new();
        let term = Arc::new(fixtures::terminal());
        let c = MFunctor::constant(&s, term.clone(), 4).unwrap();
        let (counts, r) = verify_lemma_eq1(&s, &term, 0, &c).unwrap();
        assert_eq!(counts.transformations, 4);
        assert!(r.all_passed());

        let arrow = Arc::new(fixtures::arrow());
        let n = MFunctor::from_generators(&s, arrow.clone(), vec![2, 3], vec![set(3, &[2, 1])]).unwrap();
        let (counts, r) = verify_lemma_eq1(&s, &arrow, 0, &n).unwrap();
        assert_eq!(counts.transformations, 2);
        assert!(r.all_passed());

        let v = FinVect::new(2).unwrap();
        let m = MFunctor::from_generators(&v, arrow.clone(), vec![2, 1], vec![v.matrix(&[vec![1, 1]], 2).unwrap()])
            .unwrap();
        let (counts, r) = verify_lemma_eq1(&v, &arrow, 0, &m).unwrap();
        assert_eq!(counts.elements, 4);
        assert!(r.all_passed());
    }

    #[test]
    fn yoneda_examples() {
        let s = FinSet::new();
        let arrow = Arc::new(fixtures::arrow());
        let m = MFunctor::from_generators(&s, arrow.clone(), vec![2, 3], vec![set(3, &[0, 0])]).unwrap();
        let (carrier, r) = verify_yoneda(&s, &arrow, 0, &m).unwrap();
        assert_eq!(carrier, 2);
        assert!(r.all_passed(), "{}", r.render_text());
        let (carrier, r) = verify_yoneda(&s, &arrow, 1, &m).unwrap();
        assert_eq!(carrier, 3);
        assert!(r.all_passed(), "{}", r.render_text());

        let v = FinVect::new(2).unwrap();
        let idem = Arc::new(fixtures::walking_idempotent());
        let e = v.matrix(&[vec![1, 0], vec![0, 0]], 2).unwrap();
        let m = MFunctor::from_generators(&v, idem.clone(), vec![2], vec![e]).unwrap();
        let (carrier, r) = verify_yoneda(&v, &idem, 0, &m).unwrap();
        assert_eq!(carrier, 2);
        assert!(r.all_passed(), "{}", r.render_text());
    }

    #[test]
    fn eval_adjunction_examples() {
        let s = FinSet::new();
        let arrow = Arc::new(fixtures::arrow());
        let m = MFunctor::from_generators(&s, arrow.clone(), vec![2, 3], vec![set(3, &[0, 1])]).unwrap();
        let r = verify_eval_adjunction(&s, &arrow, 1, 2, &m, 3).unwrap();
        assert!(r.all_passed(), "{}", r.render_text());
        assert!(r.checks[0].detail.starts_with("9 vs 9"));
        let r = verify_eval_adjunction(&s, &arrow, 0, 2, &m, 3).unwrap();
        assert!(r.all_passed(), "{}", r.render_text());

        let v = FinVect::new(2).unwrap();
        let term = Arc::new(fixtures::terminal());
        let one = MFunctor::constant(&v, term.clone(), 1).unwrap();
        let r = verify_eval_adjunction(&v, &term, 0, 1, &one, 3).unwrap();
        assert!(r.checks[0].detail.starts_with("2 vs 2"));
        assert!(r.all_passed());
    }

    #[test]
    fn density_examples() {
        let s = FinSet::new();
        let arrow = Arc::new(fixtures::arrow());
        let m = MFunctor::from_generators(&s, arrow.clone(), vec![2, 3], vec![set(3, &[1, 1])]).unwrap();
        let (carriers, r) = verify_density(&s, &m).unwrap();
        assert_eq!(carriers, vec![2, 3]);
        assert!(r.all_passed(), "{}", r.render_text());

        let v = FinVect::new(2).unwrap();
        let m =
            MFunctor::from_generators(&v, arrow, vec![1, 2], vec![v.matrix(&[vec![1], vec![1]], 1).unwrap()]).unwrap();
        let (carriers, r) = verify_density(&v, &m).unwrap();
        assert_eq!(carriers, vec![1, 2]);
        assert!(r.all_passed(), "{}", r.render_text());

        let idem = Arc::new(fixtures::walking_idempotent());
        let m = MFunctor::from_generators(&s, idem, vec![3], vec![set(3, &[0, 0, 2])]).unwrap();
        let (carriers, r) = verify_density(&s, &m).unwrap();
        assert_eq!(carriers, vec![3]);
        assert!(r.all_passed(), "{}", r.render_text());
    }

    #[test]
    fn classical_count_on_square() {
        let s = FinSet::new();
        let sq = Arc::new(fixtures::commutative_square());
        let m = MFunctor::constant(&s, sq.clone(), 2).unwrap();
        for i in sq.objects() {
            assert!(classical_yoneda_count(&s, &sq, i, &m).unwrap());
        }
    }
}
