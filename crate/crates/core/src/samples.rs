//! Functor samples: exhaustive enumeration up to a size bound, and seeded
//! random draws for index categories too large to enumerate.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::basecat::Base;
use crate::error::{Error, Result};
use crate::fincat::{FinCat, MorId};
use crate::funcat::MFunctor;

/// Constraint `F(g) ∘ F(f) = F(g∘f)` on generator positions, checked once
/// the last of the three is assigned.
struct Composite {
    f: usize,
    g: usize,
    /// Position of `g∘f` among generators, or `None` for an identity.
    gf: Option<usize>,
}

struct Plan {
    generators: Vec<MorId>,
    /// `checks[d]`: composites decided at depth `d`.
    checks: Vec<Vec<Composite>>,
}

fn plan(cat: &FinCat) -> Plan {
    let generators: Vec<MorId> = cat.non_identity_morphisms().collect();
    let pos = |m: MorId| generators.iter().position(|&x| x == m);
    let mut checks: Vec<Vec<Composite>> = (0..generators.len()).map(|_| Vec::new()).collect();
    for (f, g) in cat.composable_pairs() {
        let gf = cat.compose(g, f).expect("valid category");
        let (pf, pg, pgf) = (pos(f).unwrap(), pos(g).unwrap(), pos(gf));
        let depth = pf.max(pg).max(pgf.unwrap_or(0));
        checks[depth].push(Composite { f: pf, g: pg, gf: pgf });
    }
    Plan { generators, checks }
}

fn composite_holds<B: Base>(base: &B, images: &[B::Mor], c: &Composite) -> Result<bool> {
    let lhs = base.compose(&images[c.g], &images[c.f])?;
    Ok(match c.gf {
        Some(p) => lhs == images[p],
        None => lhs == base.identity(base.src(&images[c.f]))?,
    })
}

/// Every functor `I → 𝓜` whose object images lie in `sizes`, in
/// lexicographic order of (object sizes, generator images). Search nodes are
/// capped by `node_cap`.
pub fn enumerate_functors<B: Base>(
    base: &B,
    index: &Arc<FinCat>,
    sizes: &[usize],
    node_cap: u128,
) -> Result<Vec<MFunctor<B::Mor>>> {
    let cat = &**index;
    let plan = plan(cat);
    let n_obj = cat.num_objects();
    let mut out = Vec::new();
    let mut visited: u128 = 0;
    let mut objs = vec![0usize; n_obj];
    let mut tuple = vec![0usize; n_obj];
    loop {
        for (o, &t) in tuple.iter().enumerate() {
            objs[o] = sizes[t];
        }
        let choices: Vec<Vec<B::Mor>> = plan
            .generators
            .iter()
            .map(|&f| base.hom_enumerate(objs[cat.src(f)], objs[cat.dst(f)]))
            .collect::<Result<_>>()?;
        let mut images: Vec<B::Mor> = Vec::with_capacity(plan.generators.len());
        let mut picked: Vec<usize> = Vec::with_capacity(plan.generators.len());
        // Depth-first over generators; `picked` holds the choice index per depth.
        let mut depth_done = plan.generators.is_empty();
        if depth_done {
            out.push(MFunctor::from_generators(base, index.clone(), objs.clone(), Vec::new())?);
        } else {
            picked.push(0);
        }
        while !depth_done {
            let d = picked.len() - 1;
            if picked[d] >= choices[d].len() {
                picked.pop();
                images.truncate(picked.len());
                match picked.last_mut() {
                    Some(last) => {
                        *last += 1;
                        images.pop();
                    }
                    None => depth_done = true,
                }
                continue;
            }
            visited += 1;
            if visited > node_cap {
                return Err(Error::resource(format!("functor enumeration over {}", cat.name()), visited, node_cap));
            }
            images.truncate(d);
            images.push(choices[d][picked[d]].clone());
            let mut ok = true;
            for c in &plan.checks[d] {
                if !composite_holds(base, &images, c)? {
                    ok = false;
                    break;
                }
            }
            if ok && d + 1 == plan.generators.len() {
                out.push(MFunctor::from_generators(base, index.clone(), objs.clone(), images.clone())?);
            }
            if ok && d + 1 < plan.generators.len() {
                picked.push(0);
            } else {
                picked[d] += 1;
            }
        }
        // Next object-size tuple.
        let mut pos = n_obj;
        loop {
            if pos == 0 {
                return Ok(out);
            }
            pos -= 1;
            tuple[pos] += 1;
            if tuple[pos] < sizes.len() {
                break;
            }
            tuple[pos] = 0;
        }
    }
}

/// One functor drawn by depth-first search in shuffled order: object sizes
/// are drawn from `sizes`, then generator images are tried in random order.
/// Returns `None` when the drawn sizes admit no functor.
pub fn random_functor<B: Base>(
    base: &B,
    index: &Arc<FinCat>,
    sizes: &[usize],
    rng: &mut ChaCha8Rng,
) -> Result<Option<MFunctor<B::Mor>>> {
    let cat = &**index;
    let plan = plan(cat);
    let objs: Vec<usize> = cat.objects().map(|_| sizes[rng.gen_range(0..sizes.len())]).collect();
    let mut choices: Vec<Vec<B::Mor>> = plan
        .generators
        .iter()
        .map(|&f| base.hom_enumerate(objs[cat.src(f)], objs[cat.dst(f)]))
        .collect::<Result<_>>()?;
    for c in &mut choices {
        c.shuffle(rng);
    }
    let mut images: Vec<B::Mor> = Vec::new();
    let mut picked: Vec<usize> = Vec::new();
    if plan.generators.is_empty() {
        return Ok(Some(MFunctor::from_generators(base, index.clone(), objs, Vec::new())?));
    }
    picked.push(0);
    let cap = base.caps().max_hom;
    let mut visited: u128 = 0;
    loop {
        let d = picked.len() - 1;
        if picked[d] >= choices[d].len() {
            picked.pop();
            match picked.last_mut() {
                Some(last) => *last += 1,
                None => return Ok(None),
            }
            continue;
        }
        visited += 1;
        if visited > cap {
            return Ok(None);
        }
        images.truncate(d);
        images.push(choices[d][picked[d]].clone());
        let mut ok = true;
        for c in &plan.checks[d] {
            if !composite_holds(base, &images, c)? {
                ok = false;
                break;
            }
        }
        if ok && d + 1 == plan.generators.len() {
            return Ok(Some(MFunctor::from_generators(base, index.clone(), objs, images)?));
        }
        if ok {
            picked.push(0);
        } else {
            picked[d] += 1;
        }
    }
}

/// `count` functors from a generator seeded with `seed`; draws whose sizes
/// admit no functor are retried, up to `20 * count` attempts.
pub fn random_functors<B: Base>(
    base: &B,
    index: &Arc<FinCat>,
    sizes: &[usize],
    count: usize,
    seed: u64,
) -> Result<Vec<MFunctor<B::Mor>>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    let mut attempts = 0;
    while out.len() < count && attempts < 20 * count.max(1) {
        attempts += 1;
        if let Some(f) = random_functor(base, index, sizes, &mut rng)? {
            out.push(f);
        }
    }
    Ok(out)
}

/// Exhaustive on index categories with at most two objects, random with the
/// given seed beyond.
pub fn default_functors<B: Base>(
    base: &B,
    index: &Arc<FinCat>,
    max_size: usize,
    random_count: usize,
    seed: u64,
) -> Result<Vec<MFunctor<B::Mor>>> {
    let sizes: Vec<usize> = (0..=max_size).collect();
    if index.num_objects() <= 2 {
        enumerate_functors(base, index, &sizes, 50_000_000)
    } else {
        random_functors(base, index, &sizes, random_count, seed)
    }
}

/// A seeded generator for callers that draw their own samples.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}
