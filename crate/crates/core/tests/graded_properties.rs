//! Property tests for the graded linear algebra layer.

use hnk::graded::{is_even, Cochain, LinearMap, MultiLinearMap, Parity, SuperSpace, Tuples, Vector};
use hnk::scalar::{format_scalar, int, parse_scalar, ratio};
use hnk::Scalar;
use proptest::prelude::*;

fn space_strategy() -> impl Strategy<Value = SuperSpace> {
    prop::collection::vec(0u8..2, 1..=3).prop_map(|bits| SuperSpace::from_bits(&bits))
}

fn vector_strategy(dim: usize) -> impl Strategy<Value = Vector> {
    prop::collection::vec(-3i64..=3, dim).prop_map(|c| Vector::from_ints(&c))
}

fn scalar_strategy() -> impl Strategy<Value = Scalar> {
    (-5i64..=5, 1i64..=4).prop_map(|(p, q)| ratio(p, q))
}

/// A random multilinear map with small integer structure constants.
fn map_strategy(arity: usize) -> impl Strategy<Value = MultiLinearMap> {
    space_strategy().prop_flat_map(move |s| {
        let d = s.dim();
        let count = d.pow(arity as u32);
        prop::collection::vec(prop::collection::vec(-2i64..=2, d), count).prop_map(move |rows| {
            let tuples: Vec<Vec<usize>> = Tuples::uniform(d, arity).collect();
            MultiLinearMap::from_entries(&s, arity, tuples.into_iter().zip(rows).map(|(t, r)| (t, Vector::from_ints(&r))))
                .unwrap()
        })
    })
}

/// Sign of reordering `tuple` into `tuple ∘ perm` by super-alternation,
/// counted inversion by inversion.
fn permutation_sign(space: &SuperSpace, tuple: &[usize], perm: &[usize]) -> Scalar {
    let mut negative = false;
    for a in 0..perm.len() {
        for b in a + 1..perm.len() {
            if perm[a] > perm[b] {
                let both_odd = space.parity(tuple[perm[a]]).is_odd() && space.parity(tuple[perm[b]]).is_odd();
                negative ^= !both_odd;
            }
        }
    }
    if negative {
        int(-1)
    } else {
        int(1)
    }
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    Tuples::uniform(k, k)
        .filter(|p| {
            let mut q = p.clone();
            q.sort_unstable();
            q.dedup();
            q.len() == k
        })
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn evaluation_is_multilinear(
        (map, xs, ys, c, slot) in (1usize..=3).prop_flat_map(map_strategy).prop_flat_map(|m| {
            let d = m.space().dim();
            let k = m.arity();
            (
                Just(m),
                prop::collection::vec(vector_strategy(d), k),
                prop::collection::vec(vector_strategy(d), k),
                scalar_strategy(),
                0..k,
            )
        })
    ) {
        let mut combined = xs.clone();
        let mut mixed = xs[slot].clone();
        mixed.add_scaled(&c, &ys[slot]);
        combined[slot] = mixed;
        let mut swapped = xs.clone();
        swapped[slot] = ys[slot].clone();
        let eval = |args: &[Vector]| map.eval(&args.iter().collect::<Vec<_>>()).unwrap();
        let mut expected = eval(&xs);
        expected.add_scaled(&c, &eval(&swapped));
        prop_assert_eq!(eval(&combined), expected);
    }

    #[test]
    fn even_maps_preserve_parity(map in (2usize..=3).prop_flat_map(map_strategy)) {
        // Keep only the parity-preserving structure constants.
        let s = map.space().clone();
        let even = MultiLinearMap::from_fn(&s, map.arity(), |t| {
            let p = s.tuple_parity(t);
            let mut v = map.value(t);
            for j in 0..s.dim() {
                if s.parity(j) != p {
                    v.set(j, int(0));
                }
            }
            v
        });
        prop_assert!(is_even(&even).passed());
        for t in Tuples::uniform(s.dim(), map.arity()) {
            let v = even.value(&t);
            if !v.is_zero() {
                prop_assert_eq!(s.parity_of(&v), Some(s.tuple_parity(&t)));
            }
        }
    }

    #[test]
    fn skew_completion_is_super_alternating(map in (2usize..=3).prop_flat_map(map_strategy)) {
        let s = map.space().clone();
        let k = map.arity();
        // Keep one listed value per multiset, on the sorted tuple.
        let generators = MultiLinearMap::from_fn(&s, k, |t| {
            if t.windows(2).all(|w| w[0] <= w[1]) { map.value(t) } else { s.zero() }
        });
        match generators.skew_completed() {
            Ok(full) => {
                for t in Tuples::uniform(s.dim(), k) {
                    for perm in permutations(k) {
                        let moved: Vec<usize> = perm.iter().map(|&i| t[i]).collect();
                        let expected = full.value(&t).scaled(&permutation_sign(&s, &t, &perm));
                        prop_assert_eq!(full.value(&moved), expected);
                    }
                    if t.windows(2).all(|w| w[0] <= w[1]) {
                        prop_assert_eq!(full.value(&t), generators.value(&t));
                    }
                }
            }
            Err(_) => {
                // Only a nonzero value on a repeated even argument is refused.
                let forced = Tuples::uniform(s.dim(), k).any(|t| {
                    t.windows(2).all(|w| w[0] <= w[1])
                        && !generators.value(&t).is_zero()
                        && t.windows(2).any(|w| w[0] == w[1] && s.parity(w[0]) == Parity::Even)
                });
                prop_assert!(forced);
            }
        }
    }

    #[test]
    fn cochains_are_super_alternating(
        (s, values) in space_strategy().prop_flat_map(|s| {
            let d = s.dim();
            (Just(s), prop::collection::vec(-3i64..=3, d * d))
        })
    ) {
        let generators: Vec<(Vec<usize>, Scalar)> = Tuples::uniform(s.dim(), 2)
            .zip(values)
            .filter(|(t, _)| t[0] < t[1] || (t[0] == t[1] && s.parity(t[0]).is_odd()))
            .filter(|(t, _)| !s.tuple_parity(t).is_odd())
            .map(|(t, v)| (t, int(v)))
            .collect();
        let phi = Cochain::from_generators(&s, 2, generators).unwrap();
        prop_assert!(phi.check_alternating().passed());
        prop_assert!(is_even(&phi).passed());
    }

    #[test]
    fn scalar_literals_round_trip(p in -1000i64..1000, q in 1i64..50) {
        let x = ratio(p, q);
        prop_assert_eq!(parse_scalar(&format_scalar(&x)).unwrap(), x);
    }

    #[test]
    fn composition_matches_sequential_application(
        (s, a, b, v) in space_strategy().prop_flat_map(|s| {
            let d = s.dim();
            (
                Just(s),
                prop::collection::vec(vector_strategy(d), d),
                prop::collection::vec(vector_strategy(d), d),
                vector_strategy(d),
            )
        })
    ) {
        let f = LinearMap::from_images(&s, &s, &a).unwrap();
        let g = LinearMap::from_images(&s, &s, &b).unwrap();
        let fg = f.compose(&g).unwrap();
        prop_assert_eq!(fg.apply(&v).unwrap(), f.apply(&g.apply(&v).unwrap()).unwrap());
    }
}

#[test]
fn malformed_literals_are_rejected() {
    for bad in ["", "1.5", "1/0", "a", "1/-2", "--1", "1e3"] {
        assert!(parse_scalar(bad).is_err(), "{bad:?} accepted");
    }
    assert_eq!(parse_scalar("-6/4").unwrap(), ratio(-3, 2));
    assert_eq!(format_scalar(&ratio(-3, 2)), "-3/2");
    assert_eq!(format_scalar(&int(0)), "0");
}
