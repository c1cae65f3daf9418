//! Randomized invariants over arbitrary GT triangles and Gog triangles.

use proptest::prelude::*;

use crate::asm::{asm_to_gog, count_minus_ones, gog_to_asm, Asm};
use crate::bijections::{standard_procedure, standard_procedure_inverse};
use crate::classes::{is_gog, is_gogam, is_magog, reflect};
use crate::enumeration::enumerate_gog;
use crate::schutzenberger::{s_k, schutzenberger};
use crate::stats::{left_standardization, mu, nu, right_standardization};
use crate::{Entry, GTTriangle};

/// A GT triangle of size `n` with entries in `1..=max`, built top-down from
/// one seed per cell.
fn triangle_from_seeds(n: usize, max: Entry, seeds: &[u16]) -> GTTriangle {
    let mut top: Vec<Entry> = seeds[..n].iter().map(|&s| 1 + Entry::from(s) % max).collect();
    top.sort_unstable();
    let mut rows = vec![top];
    let mut pos = n;
    while rows.last().map_or(0, Vec::len) > 1 {
        let up = rows.last().expect("non-empty");
        let next: Vec<Entry> = (0..up.len() - 1)
            .map(|j| {
                let span = up[j + 1] - up[j] + 1;
                up[j] + Entry::from(seeds[pos + j]) % span
            })
            .collect();
        pos += next.len();
        rows.push(next);
    }
    rows.reverse();
    GTTriangle::new(n, &rows).expect("seeded rows interlace")
}

fn gt() -> impl Strategy<Value = GTTriangle> {
    (1usize..=7, 1i64..=10).prop_flat_map(|(n, max)| {
        proptest::collection::vec(any::<u16>(), n * (n + 1) / 2)
            .prop_map(move |seeds| triangle_from_seeds(n, max, &seeds))
    })
}

fn gt_pair() -> impl Strategy<Value = (GTTriangle, GTTriangle)> {
    (1usize..=6, 1i64..=8).prop_flat_map(|(n, max)| {
        let len = n * (n + 1) / 2;
        (proptest::collection::vec(any::<u16>(), len), proptest::collection::vec(any::<u16>(), len))
            .prop_map(move |(a, b)| (triangle_from_seeds(n, max, &a), triangle_from_seeds(n, max, &b)))
    })
}

fn gog() -> impl Strategy<Value = GTTriangle> {
    (1usize..=6, any::<prop::sample::Index>()).prop_map(|(n, idx)| {
        let all: Vec<GTTriangle> = enumerate_gog(n).collect();
        all[idx.index(all.len())].clone()
    })
}

fn permutation() -> impl Strategy<Value = Vec<usize>> {
    (1usize..=7).prop_flat_map(|n| Just((0..n).collect::<Vec<_>>()).prop_shuffle())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn schutzenberger_is_an_involution(t in gt()) {
        prop_assert_eq!(schutzenberger(&schutzenberger(&t)), t);
    }

    #[test]
    fn elementary_involutions(t in gt()) {
        let n = t.n();
        for k in 1..n {
            let once = s_k(&t, k).unwrap();
            prop_assert_eq!(s_k(&once, k).unwrap(), t.clone());
            for l in k + 2..n {
                let kl = s_k(&s_k(&t, l).unwrap(), k).unwrap();
                let lk = s_k(&s_k(&t, k).unwrap(), l).unwrap();
                prop_assert_eq!(kl, lk);
            }
        }
    }

    #[test]
    fn schutzenberger_moves_magog_to_gogam(t in gt()) {
        prop_assert_eq!(is_magog(&t), is_gogam(&schutzenberger(&t)));
    }

    #[test]
    fn json_round_trip(t in gt()) {
        prop_assert_eq!(GTTriangle::from_json(&t.to_json()).unwrap(), t);
    }

    #[test]
    fn lattice_laws((a, b) in gt_pair()) {
        let j = a.join(&b).unwrap();
        let m = a.meet(&b).unwrap();
        prop_assert!(a.leq(&j).unwrap() && b.leq(&j).unwrap());
        prop_assert!(m.leq(&a).unwrap() && m.leq(&b).unwrap());
        prop_assert_eq!(a.join(&m).unwrap(), a.clone());
        prop_assert_eq!(a.meet(&j).unwrap(), a);
    }

    #[test]
    fn reflection_is_an_involution(t in gog()) {
        let r = reflect(&t).unwrap();
        prop_assert!(is_gog(&r));
        prop_assert_eq!((mu(&r), nu(&r)), (nu(&t), mu(&t)));
        prop_assert_eq!(reflect(&r).unwrap(), t);
    }

    #[test]
    fn asm_identity(t in gog()) {
        let n = t.n();
        let m = gog_to_asm(&t).unwrap();
        prop_assert_eq!(mu(&t) + nu(&t) + count_minus_ones(&m), n * (n - 1) / 2);
        prop_assert_eq!(asm_to_gog(&m), t);
    }

    #[test]
    fn permutations_are_admissible(p in permutation()) {
        let inversions = (0..p.len()).flat_map(|a| (a + 1..p.len()).map(move |b| (a, b)))
            .filter(|&(a, b)| p[a] > p[b]).count();
        let t = asm_to_gog(&Asm::permutation(&p).unwrap());
        prop_assert_eq!(mu(&t), inversions);
        let out = standard_procedure(&t).unwrap();
        prop_assert!(out.is_admissible());
        let y = out.triangle().unwrap();
        prop_assert!(is_gogam(&y));
        prop_assert_eq!(standard_procedure_inverse(&y).unwrap(), t);
    }

    #[test]
    fn standard_procedure_outputs(t in gog()) {
        let out = standard_procedure(&t).unwrap();
        prop_assert!(out.satisfies_gogam_inequalities());
        if out.is_admissible() {
            let y = out.triangle().unwrap();
            prop_assert!(is_gogam(&y));
            prop_assert_eq!(standard_procedure_inverse(&y).unwrap(), t);
        }
    }

    #[test]
    fn standardizations_are_gog(t in gog()) {
        prop_assume!(t.n() >= 2);
        let l = left_standardization(&t).unwrap();
        let r = right_standardization(&t).unwrap();
        prop_assert!(is_gog(&l) && is_gog(&r));
        prop_assert!(mu(&l) <= mu(&t) && nu(&r) <= nu(&t));
    }
}
