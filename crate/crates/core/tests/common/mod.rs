//! Oracles and generators shared by the integration tests.

#![allow(dead_code, clippy::needless_range_loop)]

use std::sync::Arc;

use proptest::prelude::*;
use yoneda_core::fincat::{CompositionEntry, MorphismDecl};
use yoneda_core::{FinCat, FinCatPresentation, SetFunctor};

/// Functions `a → b` as tables, in odometer order.
pub fn tables(a: usize, b: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..a {
        out = out.into_iter().flat_map(|t| (0..b).map(move |x| [t.clone(), vec![x]].concat())).collect();
    }
    out
}

/// Counts natural transformations `M → N` of FinSet functors by trying
/// component tables object by object, checking each naturality square as
/// soon as both of its components are fixed.
pub fn brute_nat_count(m: &SetFunctor, n: &SetFunctor) -> usize {
    let cat = m.index();
    let arrows: Vec<usize> = cat.non_identity_morphisms().collect();
    let options: Vec<Vec<Vec<usize>>> = cat.objects().map(|o| tables(m.obj(o), n.obj(o))).collect();
    fn go(
        depth: usize,
        picked: &mut Vec<Vec<usize>>,
        options: &[Vec<Vec<usize>>],
        square_ok: &dyn Fn(&[Vec<usize>], usize) -> bool,
    ) -> usize {
        if depth == options.len() {
            return 1;
        }
        let mut count = 0;
        for t in &options[depth] {
            picked.push(t.clone());
            if square_ok(picked, depth) {
                count += go(depth + 1, picked, options, square_ok);
            }
            picked.pop();
        }
        count
    }
    let square_ok = |picked: &[Vec<usize>], depth: usize| {
        arrows.iter().all(|&f| {
            let (s, d) = (cat.src(f), cat.dst(f));
            if s.max(d) != depth {
                return true;
            }
            let (mf, nf) = (m.mor(f).table(), n.mor(f).table());
            (0..m.obj(s)).all(|x| nf[picked[s][x]] == picked[d][mf[x]])
        })
    };
    go(0, &mut Vec::new(), &options, &square_ok)
}

/// The poset on `0..n` generated by `edges[(i, j)]` for `i < j`, as a
/// category with one morphism `m{i}_{j}` per strict relation.
pub fn poset(n: usize, edges: &[bool]) -> FinCatPresentation {
    let mut le = vec![vec![false; n]; n];
    let mut k = 0;
    for i in 0..n {
        for j in i + 1..n {
            le[i][j] = edges.get(k).copied().unwrap_or(false);
            k += 1;
        }
    }
    for mid in 0..n {
        for i in 0..n {
            for j in 0..n {
                if le[i][mid] && le[mid][j] {
                    le[i][j] = true;
                }
            }
        }
    }
    let obj = |i: usize| format!("o{i}");
    let mor = |i: usize, j: usize| format!("m{i}_{j}");
    let mut morphisms = Vec::new();
    let mut composition = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if le[i][j] {
                morphisms.push(MorphismDecl { name: mor(i, j), src: obj(i), dst: obj(j) });
                for l in 0..n {
                    if le[j][l] {
                        composition.push(CompositionEntry { first: mor(i, j), then: mor(j, l), equals: mor(i, l) });
                    }
                }
            }
        }
    }
    FinCatPresentation { name: Some(format!("poset{n}")), objects: (0..n).map(obj).collect(), morphisms, composition }
}

/// Random posets on one to three objects.
pub fn arb_poset() -> impl Strategy<Value = Arc<FinCat>> {
    (1usize..=3, proptest::collection::vec(any::<bool>(), 3))
        .prop_map(|(n, edges)| Arc::new(FinCat::from_presentation(&poset(n, &edges)).expect("posets are categories")))
}
