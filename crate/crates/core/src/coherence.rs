//! Monoidal, symmetric and closed structure identities of a base category.

use crate::basecat::Base;
use crate::error::Result;
use crate::report::{Label, Report};

/// `a_{a,b,c⊗d} ∘ a_{a⊗b,c,d} = (a ⊗ a_{b,c,d}) ∘ a_{a,b⊗c,d} ∘ (a_{a,b,c} ⊗ d)`.
pub fn pentagon<B: Base>(base: &B, a: usize, b: usize, c: usize, d: usize) -> Result<bool> {
    let ab = base.tensor_obj(a, b)?;
    let bc = base.tensor_obj(b, c)?;
    let cd = base.tensor_obj(c, d)?;
    let top = base.compose(&base.associator(a, b, cd)?, &base.associator(ab, c, d)?)?;
    let bottom = base.compose_all(&[
        &base.tensor_mor(&base.associator(a, b, c)?, &base.identity(d)?)?,
        &base.associator(a, bc, d)?,
        &base.tensor_mor(&base.identity(a)?, &base.associator(b, c, d)?)?,
    ])?;
    Ok(top == bottom)
}

/// `(a ⊗ l_b) ∘ a_{a,k,b} = r_a ⊗ b`.
pub fn triangle<B: Base>(base: &B, a: usize, b: usize) -> Result<bool> {
    let k = base.unit();
    let left = base.compose(&base.tensor_mor(&base.identity(a)?, &base.lunitor(b)?)?, &base.associator(a, k, b)?)?;
    let right = base.tensor_mor(&base.runitor(a)?, &base.identity(b)?)?;
    Ok(left == right)
}

/// `s_{b,a} ∘ s_{a,b} = id`.
pub fn symmetry<B: Base>(base: &B, a: usize, b: usize) -> Result<bool> {
    let round = base.compose(&base.braiding(b, a)?, &base.braiding(a, b)?)?;
    Ok(round == base.identity(base.tensor_obj(a, b)?)?)
}

/// `a_{b,c,a} ∘ s_{a,b⊗c} ∘ a_{a,b,c} = (b ⊗ s_{a,c}) ∘ a_{b,a,c} ∘ (s_{a,b} ⊗ c)`.
pub fn hexagon<B: Base>(base: &B, a: usize, b: usize, c: usize) -> Result<bool> {
    let bc = base.tensor_obj(b, c)?;
    let left = base.compose_all(&[&base.associator(a, b, c)?, &base.braiding(a, bc)?, &base.associator(b, c, a)?])?;
    let right = base.compose_all(&[
        &base.tensor_mor(&base.braiding(a, b)?, &base.identity(c)?)?,
        &base.associator(b, a, c)?,
        &base.tensor_mor(&base.identity(b)?, &base.braiding(a, c)?)?,
    ])?;
    Ok(left == right)
}

/// Outcome of the closure bijection on one `(a, b, c)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureCheck {
    pub hom_tensor: usize,
    pub hom_curried: usize,
    pub round_trips: bool,
    pub eval_factors: bool,
    pub natural: bool,
}

impl ClosureCheck {
    pub fn passed(&self) -> bool {
        self.hom_tensor == self.hom_curried && self.round_trips && self.eval_factors && self.natural
    }
}

/// Curry/uncurry on the whole of `hom(a⊗b, c)` and `hom(a, [b,c])`, with
/// `eval ∘ (curry f ⊗ b) = f` and naturality in `a` and `c` checked against
/// up to `naturality_samples` morphisms on each side.
pub fn closure<B: Base>(base: &B, a: usize, b: usize, c: usize, naturality_samples: usize) -> Result<ClosureCheck> {
    let ab = base.tensor_obj(a, b)?;
    let hom_bc = base.internal_hom(b, c)?;
    let tensor_side = base.hom_enumerate(ab, c)?;
    let curried_side = base.hom_enumerate(a, hom_bc)?;
    let eval = base.eval_mor(b, c)?;
    let id_b = base.identity(b)?;

    let mut round_trips = true;
    let mut eval_factors = true;
    for f in &tensor_side {
        let g = base.curry(f, a, b)?;
        round_trips &= base.uncurry(&g, b, c)? == *f;
        eval_factors &= base.compose(&eval, &base.tensor_mor(&g, &id_b)?)? == *f;
    }
    for g in &curried_side {
        round_trips &= base.curry(&base.uncurry(g, b, c)?, a, b)? == *g;
    }

    let mut natural = true;
    let pre_samples = base.hom_enumerate(a, a).unwrap_or_default();
    let post_samples = base.hom_enumerate(c, c).unwrap_or_default();
    for f in tensor_side.iter().take(naturality_samples) {
        let curried = base.curry(f, a, b)?;
        for h in pre_samples.iter().take(naturality_samples) {
            let lhs = base.curry(&base.compose(f, &base.tensor_mor(h, &id_b)?)?, a, b)?;
            natural &= lhs == base.compose(&curried, h)?;
        }
        for k in post_samples.iter().take(naturality_samples) {
            let lhs = base.curry(&base.compose(k, f)?, a, b)?;
            let post = base.hom_map(&id_b, k)?;
            natural &= lhs == base.compose(&post, &curried)?;
        }
    }

    Ok(ClosureCheck {
        hom_tensor: tensor_side.len(),
        hom_curried: curried_side.len(),
        round_trips,
        eval_factors,
        natural,
    })
}

/// Braiding naturality `s ∘ (f⊗g) = (g⊗f) ∘ s` on the given morphisms.
pub fn braiding_natural<B: Base>(base: &B, f: &B::Mor, g: &B::Mor) -> Result<bool> {
    let lhs = base.compose(&base.braiding(base.dst(f), base.dst(g))?, &base.tensor_mor(f, g)?)?;
    let rhs = base.compose(&base.tensor_mor(g, f)?, &base.braiding(base.src(f), base.src(g))?)?;
    Ok(lhs == rhs)
}

/// Per-law tallies from a coherence sweep.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CoherenceTally {
    pub pentagon: (usize, usize),
    pub triangle: (usize, usize),
    pub hexagon: (usize, usize),
    pub symmetry: (usize, usize),
    pub braiding_naturality: (usize, usize),
    pub closure: (usize, usize),
}

impl CoherenceTally {
    /// Total identities checked.
    pub fn total(&self) -> usize {
        [self.pentagon, self.triangle, self.hexagon, self.symmetry, self.braiding_naturality, self.closure]
            .iter()
            .map(|t| t.0)
            .sum()
    }

    pub fn failures(&self) -> usize {
        [self.pentagon, self.triangle, self.hexagon, self.symmetry, self.braiding_naturality, self.closure]
            .iter()
            .map(|t| t.1)
            .sum()
    }
}

fn bump(slot: &mut (usize, usize), ok: bool) {
    slot.0 += 1;
    if !ok {
        slot.1 += 1;
    }
}

/// Checks every coherence law on all objects of size `0..=max_size`.
///
/// Closure is checked exhaustively on the triples whose hom-sets have at
/// most `closure_budget` elements.
pub fn coherence_sweep<B: Base>(base: &B, max_size: usize, closure_budget: u128) -> Result<(CoherenceTally, Report)> {
    let sizes: Vec<usize> = (0..=max_size).collect();
    let mut t = CoherenceTally::default();
    for &a in &sizes {
        for &b in &sizes {
            bump(&mut t.triangle, triangle(base, a, b)?);
            bump(&mut t.symmetry, symmetry(base, a, b)?);
            for &c in &sizes {
                bump(&mut t.hexagon, hexagon(base, a, b, c)?);
                for &d in &sizes {
                    bump(&mut t.pentagon, pentagon(base, a, b, c, d)?);
                }
                let ab = base.tensor_obj(a, b)?;
                let fits = base.hom_count(ab, c).is_some_and(|n| n <= closure_budget);
                if fits {
                    bump(&mut t.closure, closure(base, a, b, c, 4)?.passed());
                }
            }
        }
    }
    // Braiding naturality on every pair of endomorphisms of small objects.
    for &a in sizes.iter().filter(|&&a| a <= 2) {
        for &b in sizes.iter().filter(|&&b| b <= 2) {
            let fs = base.hom_enumerate(a, a)?;
            let gs = base.hom_enumerate(b, b)?;
            for f in &fs {
                for g in &gs {
                    bump(&mut t.braiding_naturality, braiding_natural(base, f, g)?);
                }
            }
        }
    }

    let instance = format!("{} sizes 0..={max_size}", base.label());
    let mut report = Report::new();
    let mut line = |label: Label, law: &str, tally: (usize, usize)| {
        report.push(label, law, instance.clone(), tally.1 == 0, format!("{}/{} hold", tally.0 - tally.1, tally.0));
    };
    line(Label::Pentagon, "pentagon", t.pentagon);
    line(Label::Triangle, "triangle", t.triangle);
    line(Label::Hexagon, "hexagon", t.hexagon);
    line(Label::Hexagon, "s∘s=id", t.symmetry);
    line(Label::Hexagon, "braiding natural", t.braiding_naturality);
    line(Label::Closure, "curry/uncurry round-trip", t.closure);
    Ok((t, report))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basecat::{FinSet, FinVect};

    #[test]
    fn finset_small_sweep() {
        let (t, report) = coherence_sweep(&FinSet::new(), 2, 4096).unwrap();
        assert_eq!(t.failures(), 0, "{}", report.render_text());
        assert_eq!(t.pentagon.0, 81);
    }

    #[test]
    fn finvect_small_sweep() {
        let (t, _) = coherence_sweep(&FinVect::new(3).unwrap(), 2, 4096).unwrap();
        assert_eq!(t.failures(), 0);
    }

    #[test]
    fn closure_counts() {
        let c = closure(&FinSet::new(), 2, 2, 2, 4).unwrap();
        assert_eq!((c.hom_tensor, c.hom_curried), (16, 16));
        assert!(c.passed());
        let v = closure(&FinVect::new(2).unwrap(), 1, 2, 1, 4).unwrap();
        assert_eq!((v.hom_tensor, v.hom_curried), (4, 4));
        assert!(v.passed());
    }

    #[test]
    fn braiding_is_natural_on_swaps() {
        let s = FinSet::new();
        let swap = s.hom_enumerate(2, 2).unwrap()[2].clone();
        assert_eq!(swap.table(), &[1, 0]);
        let id = s.identity(3).unwrap();
        assert_ne!(s.tensor_mor(&swap, &id).unwrap(), s.tensor_mor(&id, &swap).unwrap());
        assert!(braiding_natural(&s, &swap, &id).unwrap());
    }
}
