//! Ends and coends of bifunctors `I^op × I → 𝓜`, computed as an equalizer of
//! products and a coequalizer of coproducts.

use std::collections::HashSet;
use std::sync::Arc;

use crate::basecat::{Base, Coequalizer, Equalizer};
use crate::error::{Error, Result};
use crate::fincat::{FinCat, MorId, ObjId};
use crate::funcat::{map_functors, nat_hom, MFunctor, NatTrans};
use crate::report::{Label, Report};

/// A bifunctor `I^op × I → 𝓜` as materialized tables.
///
/// `objs[i*n + j] = F(i, j)`; `mors[f*m + g] = F(f, g): F(i, j) → F(i', j')`
/// for `f: i' → i` and `g: j → j'`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bifunctor<M> {
    index: Arc<FinCat>,
    objs: Vec<usize>,
    mors: Vec<M>,
}

impl<M: Clone + Eq> Bifunctor<M> {
    /// Tabulates and validates eagerly.
    pub fn from_fn<B: Base<Mor = M>>(
        base: &B,
        index: Arc<FinCat>,
        mut obj: impl FnMut(ObjId, ObjId) -> Result<usize>,
        mut mor: impl FnMut(MorId, MorId) -> Result<M>,
    ) -> Result<Self> {
        let mut objs = Vec::with_capacity(index.num_objects().pow(2));
        for i in index.objects() {
            for j in index.objects() {
                objs.push(obj(i, j)?);
            }
        }
        let mut mors = Vec::with_capacity(index.num_morphisms().pow(2));
        for f in index.morphisms() {
            for g in index.morphisms() {
                mors.push(mor(f, g)?);
            }
        }
        let b = Bifunctor { index, objs, mors };
        b.validate(base)?;
        Ok(b)
    }

    pub fn index(&self) -> &Arc<FinCat> {
        &self.index
    }

    pub fn obj(&self, i: ObjId, j: ObjId) -> usize {
        self.objs[i * self.index.num_objects() + j]
    }

    /// `F(f, g)` for `f: i' → i`, `g: j → j'`.
    pub fn mor(&self, f: MorId, g: MorId) -> &M {
        &self.mors[f * self.index.num_morphisms() + g]
    }

    pub fn diagonal(&self) -> Vec<usize> {
        self.index.objects().map(|i| self.obj(i, i)).collect()
    }

    /// Shapes, identities, functoriality in each slot, and interchange.
    pub fn validate<B: Base<Mor = M>>(&self, base: &B) -> Result<()> {
        let cat = &*self.index;
        let name = |f: MorId| cat.morphism_name(f).to_string();
        for f in cat.morphisms() {
            for g in cat.morphisms() {
                let m = self.mor(f, g);
                if base.src(m) != self.obj(cat.dst(f), cat.src(g)) || base.dst(m) != self.obj(cat.src(f), cat.dst(g)) {
                    return Err(Error::input(format!(
                        "bifunctor value at ({}, {}) has the wrong shape",
                        name(f),
                        name(g)
                    )));
                }
            }
        }
        for i in cat.objects() {
            for j in cat.objects() {
                if *self.mor(cat.identity(i), cat.identity(j)) != base.identity(self.obj(i, j))? {
                    return Err(Error::Invalid(format!(
                        "bifunctor does not preserve the identity at ({}, {})",
                        cat.object_name(i),
                        cat.object_name(j)
                    )));
                }
            }
        }
        for (f, g) in cat.composable_pairs() {
            let gf = cat.compose(g, f).expect("valid category");
            for o in cat.objects() {
                let id = cat.identity(o);
                // Covariant slot: F(id, g∘f) = F(id, g) ∘ F(id, f).
                if *self.mor(id, gf) != base.compose(self.mor(id, g), self.mor(id, f))? {
                    return Err(Error::Invalid(format!(
                        "bifunctor fails composition ({}, {}) in the second slot",
                        name(f),
                        name(g)
                    )));
                }
                // Contravariant slot: F(g∘f, id) = F(f, id) ∘ F(g, id).
                if *self.mor(gf, id) != base.compose(self.mor(f, id), self.mor(g, id))? {
                    return Err(Error::Invalid(format!(
                        "bifunctor fails composition ({}, {}) in the first slot",
                        name(f),
                        name(g)
                    )));
                }
            }
        }
        for f in cat.morphisms() {
            for g in cat.morphisms() {
                let (i2, i) = (cat.src(f), cat.dst(f));
                let (j, j2) = (cat.src(g), cat.dst(g));
                let fst = base.compose(self.mor(f, cat.identity(j2)), self.mor(cat.identity(i), g))?;
                let snd = base.compose(self.mor(cat.identity(i2), g), self.mor(f, cat.identity(j)))?;
                if fst != *self.mor(f, g) || snd != *self.mor(f, g) {
                    return Err(Error::Invalid(format!("bifunctor fails interchange at ({}, {})", name(f), name(g))));
                }
            }
        }
        Ok(())
    }
}

/// A computed end with its universal wedge.
#[derive(Debug, Clone)]
pub struct EndResult<M> {
    pub carrier: usize,
    /// `legs[i]: carrier → F(i, i)`.
    pub legs: Vec<M>,
    diagonal: Vec<usize>,
    eq: Equalizer<M>,
}

impl<M: Clone + Eq> EndResult<M> {
    /// The unique `w → carrier` through which the wedge `comps` factors.
    pub fn factor<B: Base<Mor = M>>(&self, base: &B, w: usize, comps: &[M]) -> Result<M> {
        if comps.len() != self.diagonal.len() {
            return Err(Error::precondition("wedge has the wrong number of components"));
        }
        for (c, &d) in comps.iter().zip(&self.diagonal) {
            if base.src(c) != w || base.dst(c) != d {
                return Err(Error::precondition("wedge component has the wrong source or target"));
            }
        }
        let t = base.tuple(w, &self.diagonal, comps)?;
        base.equalizer_factor(&self.eq, &t)
    }
}

/// A computed coend with its universal cowedge.
#[derive(Debug, Clone)]
pub struct CoendResult<M> {
    pub carrier: usize,
    /// `colegs[i]: F(i, i) → carrier`.
    pub colegs: Vec<M>,
    diagonal: Vec<usize>,
    q: Coequalizer<M>,
}

impl<M: Clone + Eq> CoendResult<M> {
    /// The unique `carrier → w` through which the cowedge `comps` factors.
    pub fn cofactor<B: Base<Mor = M>>(&self, base: &B, w: usize, comps: &[M]) -> Result<M> {
        if comps.len() != self.diagonal.len() {
            return Err(Error::precondition("cowedge has the wrong number of components"));
        }
        for (c, &d) in comps.iter().zip(&self.diagonal) {
            if base.dst(c) != w || base.src(c) != d {
                return Err(Error::precondition("cowedge component has the wrong source or target"));
            }
        }
        let t = base.cotuple(w, &self.diagonal, comps)?;
        base.coequalizer_factor(&self.q, &t)
    }
}

/// `F(i, f) ∘ w_i = F(f, j) ∘ w_j` for every `f: i → j`.
pub fn is_wedge<B: Base>(base: &B, bif: &Bifunctor<B::Mor>, comps: &[B::Mor]) -> Result<bool> {
    let cat = &*bif.index;
    for f in cat.non_identity_morphisms() {
        if !wedge_square(base, bif, f, &comps[cat.src(f)], &comps[cat.dst(f)])? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn wedge_square<B: Base>(base: &B, bif: &Bifunctor<B::Mor>, f: MorId, wi: &B::Mor, wj: &B::Mor) -> Result<bool> {
    let cat = &*bif.index;
    let (i, j) = (cat.src(f), cat.dst(f));
    let lhs = base.compose(bif.mor(cat.identity(i), f), wi)?;
    let rhs = base.compose(bif.mor(f, cat.identity(j)), wj)?;
    Ok(lhs == rhs)
}

/// `w_i ∘ F(f, i) = w_j ∘ F(j, f)` for every `f: i → j`.
pub fn is_cowedge<B: Base>(base: &B, bif: &Bifunctor<B::Mor>, comps: &[B::Mor]) -> Result<bool> {
    let cat = &*bif.index;
    for f in cat.non_identity_morphisms() {
        if !cowedge_square(base, bif, f, &comps[cat.src(f)], &comps[cat.dst(f)])? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn cowedge_square<B: Base>(base: &B, bif: &Bifunctor<B::Mor>, f: MorId, wi: &B::Mor, wj: &B::Mor) -> Result<bool> {
    let cat = &*bif.index;
    let (i, j) = (cat.src(f), cat.dst(f));
    let lhs = base.compose(wi, bif.mor(f, cat.identity(i)))?;
    let rhs = base.compose(wj, bif.mor(cat.identity(j), f))?;
    Ok(lhs == rhs)
}

/// Equalizer of `∏_i F(i,i) ⇉ ∏_f F(i,j)` over the non-identity `f: i → j`.
/// Identity components would contribute the same map twice, so they are left out.
pub fn compute_end<B: Base>(base: &B, bif: &Bifunctor<B::Mor>) -> Result<EndResult<B::Mor>> {
    let cat = &*bif.index;
    let diagonal = bif.diagonal();
    let (prod, proj) = base.product(&diagonal)?;
    let arrows: Vec<MorId> = cat.non_identity_morphisms().collect();
    let targets: Vec<usize> = arrows.iter().map(|&f| bif.obj(cat.src(f), cat.dst(f))).collect();
    let mut covariant = Vec::with_capacity(arrows.len());
    let mut contravariant = Vec::with_capacity(arrows.len());
    for &f in &arrows {
        let (i, j) = (cat.src(f), cat.dst(f));
        covariant.push(base.compose(bif.mor(cat.identity(i), f), &proj[i])?);
        contravariant.push(base.compose(bif.mor(f, cat.identity(j)), &proj[j])?);
    }
    let s = base.tuple(prod, &targets, &covariant)?;
    let t = base.tuple(prod, &targets, &contravariant)?;
    let eq = base.equalizer(&s, &t)?;
    let legs = proj.iter().map(|p| base.compose(p, &eq.include)).collect::<Result<_>>()?;
    Ok(EndResult { carrier: eq.carrier, legs, diagonal, eq })
}

/// Coequalizer of `∐_f F(j,i) ⇉ ∐_i F(i,i)` over the non-identity `f: i → j`.
pub fn compute_coend<B: Base>(base: &B, bif: &Bifunctor<B::Mor>) -> Result<CoendResult<B::Mor>> {
    let cat = &*bif.index;
    let diagonal = bif.diagonal();
    let (sum, inj) = base.coproduct(&diagonal)?;
    let arrows: Vec<MorId> = cat.non_identity_morphisms().collect();
    let sources: Vec<usize> = arrows.iter().map(|&f| bif.obj(cat.dst(f), cat.src(f))).collect();
    let mut contravariant = Vec::with_capacity(arrows.len());
    let mut covariant = Vec::with_capacity(arrows.len());
    for &f in &arrows {
        let (i, j) = (cat.src(f), cat.dst(f));
        contravariant.push(base.compose(&inj[i], bif.mor(f, cat.identity(i)))?);
        covariant.push(base.compose(&inj[j], bif.mor(cat.identity(j), f))?);
    }
    let s = base.cotuple(sum, &sources, &contravariant)?;
    let t = base.cotuple(sum, &sources, &covariant)?;
    let q = base.coequalizer(&s, &t)?;
    let colegs = inj.iter().map(|e| base.compose(&q.project, e)).collect::<Result<_>>()?;
    Ok(CoendResult { carrier: q.carrier, colegs, diagonal, q })
}

/// Depth-first search for index tuples `picked[o] < sizes[o]`. After
/// choosing depth `o`, every constraint listed in `checks[o]` must hold.
/// Visited nodes are capped at `cap`.
pub(crate) fn search_families(
    sizes: &[usize],
    checks: &[Vec<usize>],
    cap: u128,
    what: &str,
    mut holds: impl FnMut(usize, &[usize]) -> Result<bool>,
) -> Result<Vec<Vec<usize>>> {
    let depth_total = sizes.len();
    let mut out = Vec::new();
    if depth_total == 0 {
        out.push(Vec::new());
        return Ok(out);
    }
    let mut visited: u128 = 0;
    let mut picked = vec![0usize];
    loop {
        let depth = picked.len() - 1;
        if picked[depth] >= sizes[depth] {
            picked.pop();
            match picked.last_mut() {
                Some(last) => *last += 1,
                None => break,
            }
            continue;
        }
        visited += 1;
        if visited > cap {
            return Err(Error::resource(what, visited, cap));
        }
        let mut ok = true;
        for &c in &checks[depth] {
            if !holds(c, &picked)? {
                ok = false;
                break;
            }
        }
        if ok && depth + 1 == depth_total {
            out.push(picked.clone());
        }
        if ok && depth + 1 < depth_total {
            picked.push(0);
        } else {
            picked[depth] += 1;
        }
    }
    Ok(out)
}

/// Constraint lists keyed by the later of each arrow's endpoints.
pub(crate) fn arrows_by_depth(cat: &FinCat) -> (Vec<MorId>, Vec<Vec<usize>>) {
    let arrows: Vec<MorId> = cat.non_identity_morphisms().collect();
    let mut checks = vec![Vec::new(); cat.num_objects()];
    for (k, &f) in arrows.iter().enumerate() {
        checks[cat.src(f).max(cat.dst(f))].push(k);
    }
    (arrows, checks)
}

/// All wedges `d → F(i,i)`, enumerated directly.
pub fn enumerate_wedges<B: Base>(base: &B, bif: &Bifunctor<B::Mor>, d: usize) -> Result<Vec<Vec<B::Mor>>> {
    let cat = &*bif.index;
    let choices: Vec<Vec<B::Mor>> = bif.diagonal().iter().map(|&x| base.hom_enumerate(d, x)).collect::<Result<_>>()?;
    let sizes: Vec<usize> = choices.iter().map(Vec::len).collect();
    let (arrows, checks) = arrows_by_depth(cat);
    let found = search_families(&sizes, &checks, base.caps().max_hom, "wedge candidates", |k, picked| {
        let f = arrows[k];
        let (i, j) = (cat.src(f), cat.dst(f));
        wedge_square(base, bif, f, &choices[i][picked[i]], &choices[j][picked[j]])
    })?;
    Ok(found.into_iter().map(|p| p.iter().enumerate().map(|(o, &k)| choices[o][k].clone()).collect()).collect())
}

/// All cowedges `F(i,i) → d`, enumerated directly.
pub fn enumerate_cowedges<B: Base>(base: &B, bif: &Bifunctor<B::Mor>, d: usize) -> Result<Vec<Vec<B::Mor>>> {
    let cat = &*bif.index;
    let choices: Vec<Vec<B::Mor>> = bif.diagonal().iter().map(|&x| base.hom_enumerate(x, d)).collect::<Result<_>>()?;
    let sizes: Vec<usize> = choices.iter().map(Vec::len).collect();
    let (arrows, checks) = arrows_by_depth(cat);
    let found = search_families(&sizes, &checks, base.caps().max_hom, "cowedge candidates", |k, picked| {
        let f = arrows[k];
        let (i, j) = (cat.src(f), cat.dst(f));
        cowedge_square(base, bif, f, &choices[i][picked[i]], &choices[j][picked[j]])
    })?;
    Ok(found.into_iter().map(|p| p.iter().enumerate().map(|(o, &k)| choices[o][k].clone()).collect()).collect())
}

/// Cardinalities on both sides of a continuity bijection and whether the
/// explicit maps between them are mutually inverse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContinuityCheck {
    pub hom_side: usize,
    pub wedge_side: usize,
    pub bijective: bool,
}

impl ContinuityCheck {
    pub fn passed(&self) -> bool {
        self.hom_side == self.wedge_side && self.bijective
    }
}

/// `hom(d, ∫F) ≅ wedges(d, F)`: `u ↦ (leg_i ∘ u)` must land in the wedges,
/// hit each exactly once, and be undone by `factor`.
pub fn end_continuity<B: Base>(base: &B, bif: &Bifunctor<B::Mor>, d: usize) -> Result<ContinuityCheck> {
    let end = compute_end(base, bif)?;
    let homs = base.hom_enumerate(d, end.carrier)?;
    let wedges = enumerate_wedges(base, bif, d)?;
    let wedge_set: HashSet<&Vec<B::Mor>> = wedges.iter().collect();
    let mut seen = HashSet::new();
    let mut bijective = true;
    for u in &homs {
        let fam: Vec<B::Mor> = end.legs.iter().map(|l| base.compose(l, u)).collect::<Result<_>>()?;
        bijective &= wedge_set.contains(&fam);
        bijective &= end.factor(base, d, &fam)? == *u;
        bijective &= seen.insert(fam);
    }
    bijective &= seen.len() == wedges.len();
    Ok(ContinuityCheck { hom_side: homs.len(), wedge_side: wedges.len(), bijective })
}

/// `hom(∫^F, d) ≅ cowedges(F, d)`, dually.
pub fn coend_continuity<B: Base>(base: &B, bif: &Bifunctor<B::Mor>, d: usize) -> Result<ContinuityCheck> {
    let coend = compute_coend(base, bif)?;
    let homs = base.hom_enumerate(coend.carrier, d)?;
    let cowedges = enumerate_cowedges(base, bif, d)?;
    let cowedge_set: HashSet<&Vec<B::Mor>> = cowedges.iter().collect();
    let mut seen = HashSet::new();
    let mut bijective = true;
    for u in &homs {
        let fam: Vec<B::Mor> = coend.colegs.iter().map(|l| base.compose(u, l)).collect::<Result<_>>()?;
        bijective &= cowedge_set.contains(&fam);
        bijective &= coend.cofactor(base, d, &fam)? == *u;
        bijective &= seen.insert(fam);
    }
    bijective &= seen.len() == cowedges.len();
    Ok(ContinuityCheck { hom_side: homs.len(), wedge_side: cowedges.len(), bijective })
}

/// Both continuity bijections at `d`, as report lines.
pub fn check_end_continuity<B: Base>(base: &B, bif: &Bifunctor<B::Mor>, d: usize) -> Result<Report> {
    let instance = format!("{} over {}, d={d}", base.label(), bif.index.name());
    let mut report = Report::new();
    let end = end_continuity(base, bif, d)?;
    report.push(
        Label::Nt1,
        "hom(d, end) = wedges",
        instance.clone(),
        end.passed(),
        format!("{} vs {}", end.hom_side, end.wedge_side),
    );
    let coend = coend_continuity(base, bif, d)?;
    report.push(
        Label::Nt1,
        "hom(coend, d) = cowedges",
        instance,
        coend.passed(),
        format!("{} vs {}", coend.hom_side, coend.wedge_side),
    );
    Ok(report)
}

/// Outcome of comparing the end of the hom bifunctor with natural transformations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EndOfHom {
    pub elements: usize,
    pub transformations: usize,
    pub bijective: bool,
}

impl EndOfHom {
    pub fn passed(&self) -> bool {
        self.elements == self.transformations && self.bijective
    }
}

/// Elements `k → ∫_i [M_i, N_i]` against natural transformations `M → N`:
/// each element unnames leg by leg to a family that must be natural, every
/// transformation must be hit once, and factoring its names must recover
/// the element.
pub fn end_of_hom_vs_nat<B: Base>(base: &B, m: &MFunctor<B::Mor>, n: &MFunctor<B::Mor>) -> Result<EndOfHom> {
    let map = map_functors(base, m, n)?;
    let k = base.unit();
    let elements = base.hom_enumerate(k, map.carrier())?;
    let nats = nat_hom(base, m, n)?;
    let nat_set: HashSet<&NatTrans<B::Mor>> = nats.iter().collect();
    let mut seen = HashSet::new();
    let mut bijective = true;
    for u in &elements {
        let comps = map
            .sides
            .iter()
            .enumerate()
            .map(|(i, &(mi, ni))| base.unname(&base.compose(map.leg(i), u)?, mi, ni))
            .collect::<Result<Vec<_>>>()?;
        let tau = NatTrans::new(comps);
        bijective &= nat_set.contains(&tau);
        let names = tau.components.iter().map(|c| base.name_of(c)).collect::<Result<Vec<_>>>()?;
        bijective &= map.end.factor(base, k, &names)? == *u;
        bijective &= seen.insert(tau);
    }
    bijective &= seen.len() == nats.len();
    Ok(EndOfHom { elements: elements.len(), transformations: nats.len(), bijective })
}

pub fn end_of_hom_equals_nat<B: Base>(base: &B, m: &MFunctor<B::Mor>, n: &MFunctor<B::Mor>) -> Result<Report> {
    let r = end_of_hom_vs_nat(base, m, n)?;
    let mut report = Report::new();
    report.push(
        Label::L1,
        "end of hom = nat",
        format!("{} over {}, M={} N={}", base.label(), m.index().name(), m.shape(), n.shape()),
        r.passed(),
        format!("{} elements, {} transformations", r.elements, r.transformations),
    );
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basecat::{FinSet, FinVect, SetMap};
    use crate::fincat::fixtures;
    use crate::funcat::hom_bifunctor;

    fn set(dst: usize, t: &[usize]) -> SetMap {
        SetMap::new(dst, t.to_vec()).unwrap()
    }

    /// `(i, j) ↦ D_i` on the diagonal only makes sense over discrete `I`.
    fn discrete_bifunctor<B: Base>(base: &B, values: &[usize]) -> Bifunctor<B::Mor> {
        let cat = Arc::new(fixtures::discrete(values.len()));
        let cell = |i: usize, j: usize| if i == j { values[i] } else { 0 };
        // Only identities exist, with id_i = i.
        Bifunctor::from_fn(base, cat, |i, j| Ok(cell(i, j)), |f, g| base.identity(cell(f, g))).unwrap()
    }

    #[test]
    fn end_over_discrete_is_product() {
        let s = FinSet::new();
        let b = discrete_bifunctor(&s, &[2, 3]);
        assert_eq!(compute_end(&s, &b).unwrap().carrier, 6);
        assert_eq!(compute_coend(&s, &b).unwrap().carrier, 5);
    }

    #[test]
    fn end_over_empty_is_terminal() {
        let s = FinSet::new();
        let v = FinVect::new(2).unwrap();
        assert_eq!(compute_end(&s, &discrete_bifunctor(&s, &[])).unwrap().carrier, 1);
        assert_eq!(compute_end(&v, &discrete_bifunctor(&v, &[])).unwrap().carrier, 0);
        assert_eq!(compute_coend(&s, &discrete_bifunctor(&s, &[])).unwrap().carrier, 0);
    }

    #[test]
    fn end_of_hom_over_arrow_counts_transformations() {
        let s = FinSet::new();
        let arrow = Arc::new(fixtures::arrow());
        let m = MFunctor::from_generators(&s, arrow.clone(), vec![1, 2], vec![set(2, &[1])]).unwrap();
        let n = MFunctor::from_generators(&s, arrow, vec![2, 2], vec![set(2, &[0, 0])]).unwrap();
        // Brute force: τ_0: 1 → 2, τ_1: 2 → 2 with τ_1(1) = N(f)(τ_0(0)) = 0.
        let mut count = 0;
        for t0 in 0..2 {
            for t1 in s.hom_enumerate(2, 2).unwrap() {
                if t1.apply(1) == [0, 0][t0] {
                    count += 1;
                }
            }
        }
        let bif = hom_bifunctor(&s, &m, &n).unwrap();
        assert_eq!(compute_end(&s, &bif).unwrap().carrier, count);
        let r = end_of_hom_vs_nat(&s, &m, &n).unwrap();
        assert_eq!(r.elements, count);
        assert!(r.passed());
    }

    #[test]
    fn legs_form_a_wedge_and_factor_is_unique() {
        let s = FinSet::new();
        let idem = Arc::new(fixtures::walking_idempotent());
        let m = MFunctor::from_generators(&s, idem.clone(), vec![3], vec![set(3, &[0, 0, 2])]).unwrap();
        let bif = hom_bifunctor(&s, &m, &m).unwrap();
        let end = compute_end(&s, &bif).unwrap();
        assert!(is_wedge(&s, &bif, &end.legs).unwrap());
        for w in enumerate_wedges(&s, &bif, 1).unwrap() {
            let u = end.factor(&s, 1, &w).unwrap();
            let through: Vec<usize> = s
                .hom_enumerate(1, end.carrier)
                .unwrap()
                .iter()
                .filter(|v| end.legs.iter().zip(&w).all(|(l, c)| s.compose(l, v).unwrap() == *c))
                .map(|v| v.apply(0))
                .collect();
            assert_eq!(through, vec![u.apply(0)]);
        }
    }

    #[test]
    fn factor_rejects_non_wedges() {
        let s = FinSet::new();
        let arrow = Arc::new(fixtures::arrow());
        let m = MFunctor::from_generators(&s, arrow, vec![1, 2], vec![set(2, &[1])]).unwrap();
        let bif = hom_bifunctor(&s, &m, &m).unwrap();
        let end = compute_end(&s, &bif).unwrap();
        // [1,1] has one element, [2,2] has four; choosing the constant 0 map breaks the square.
        let bad = vec![set(1, &[0]), set(4, &[0])];
        assert!(!is_wedge(&s, &bif, &bad).unwrap());
        assert!(matches!(end.factor(&s, 1, &bad), Err(Error::Precondition(_))));
    }

    #[test]
    fn coend_over_idempotent_is_quotient() {
        // F(i,j) = M_• for a single object with F(e, g) = M(e)∘... built from a hom bifunctor
        // of constant functors; the coend identifies x with e·x.
        let s = FinSet::new();
        let idem = Arc::new(fixtures::walking_idempotent());
        let m = MFunctor::from_generators(&s, idem.clone(), vec![3], vec![set(3, &[0, 0, 2])]).unwrap();
        // (i, j) ↦ M_j, ignoring the first slot.
        let bif = Bifunctor::from_fn(&s, idem.clone(), |_, j| Ok(m.obj(j)), |_, g| Ok(m.mor(g).clone())).unwrap();
        let coend = compute_coend(&s, &bif).unwrap();
        // Oracle: the equivalence closure of x ~ e(x) on {0,1,2} has classes {0,1}, {2}.
        assert_eq!(coend.carrier, 2);
    }

    #[test]
    fn continuity_examples() {
        let s = FinSet::new();
        let b = discrete_bifunctor(&s, &[2, 3]);
        let c = end_continuity(&s, &b, 2).unwrap();
        assert_eq!((c.hom_side, c.wedge_side), (36, 36));
        assert!(c.passed());
        let empty = discrete_bifunctor(&s, &[]);
        let c = end_continuity(&s, &empty, 3).unwrap();
        assert_eq!((c.hom_side, c.wedge_side), (1, 1));
        assert!(coend_continuity(&s, &b, 2).unwrap().passed());
    }

    #[test]
    fn continuity_on_hom_bifunctor_matches_nat_count() {
        let s = FinSet::new();
        let arrow = Arc::new(fixtures::arrow());
        let m = MFunctor::from_generators(&s, arrow.clone(), vec![1, 2], vec![set(2, &[1])]).unwrap();
        let n = MFunctor::from_generators(&s, arrow, vec![2, 2], vec![set(2, &[0, 0])]).unwrap();
        let bif = hom_bifunctor(&s, &m, &n).unwrap();
        let c = end_continuity(&s, &bif, 1).unwrap();
        assert_eq!(c.wedge_side, nat_hom(&s, &m, &n).unwrap().len());
        assert!(c.passed());
        assert!(check_end_continuity(&s, &bif, 1).unwrap().all_passed());
    }

    #[test]
    fn end_of_hom_examples() {
        let s = FinSet::new();
        let term = Arc::new(fixtures::terminal());
        let two = MFunctor::constant(&s, term.clone(), 2).unwrap();
        let r = end_of_hom_vs_nat(&s, &two, &two).unwrap();
        assert_eq!(r.elements, 4);
        assert!(r.passed());

        let v = FinVect::new(2).unwrap();
        let one = MFunctor::constant(&v, term, 1).unwrap();
        let r = end_of_hom_vs_nat(&v, &one, &one).unwrap();
        assert_eq!(r.elements, 2);
        assert!(r.passed());
    }

    #[test]
    fn finvect_coend_over_arrow() {
        let v = FinVect::new(2).unwrap();
        let arrow = Arc::new(fixtures::arrow());
        let f = v.matrix(&[vec![1], vec![1]], 1).unwrap();
        let m = MFunctor::from_generators(&v, arrow.clone(), vec![1, 2], vec![f]).unwrap();
        // Constant in the first slot: the coend is the colimit of M over the arrow, which is M_1.
        let bif = Bifunctor::from_fn(&v, arrow, |_, j| Ok(m.obj(j)), |_, g| Ok(m.mor(g).clone())).unwrap();
        assert_eq!(compute_coend(&v, &bif).unwrap().carrier, 2);
    }

    #[test]
    fn search_families_respects_cap() {
        let err = search_families(&[10, 10], &[vec![], vec![]], 5, "test", |_, _| Ok(true)).unwrap_err();
        assert!(matches!(err, Error::Resource { .. }));
    }
}
