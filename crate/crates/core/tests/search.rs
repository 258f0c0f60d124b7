use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use soembed::codes::{even_code, hamming, simplex};
use soembed::embed::shortest_length;
use soembed::fixtures;
use soembed::search::{are_equivalent, fingerprint, search_all, Equivalence, SearchConfig};
use soembed::{BinaryMatrix, BitVector, LinearCode};

fn cfg(m: Option<usize>) -> SearchConfig {
    SearchConfig {
        m,
        ..SearchConfig::default()
    }
}

fn equivalent(a: &LinearCode, b: &LinearCode) -> bool {
    matches!(are_equivalent(a, b).unwrap(), Equivalence::Equivalent(_))
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Smallest reduced generator over all coordinate permutations.
fn brute_canonical(c: &LinearCode, perms: &[Vec<usize>]) -> BinaryMatrix {
    perms
        .iter()
        .map(|p| c.permuted(p).echelon().matrix.clone())
        .min_by(|a, b| a.row_vectors().cmp(b.row_vectors()))
        .unwrap()
}

/// Every self-orthogonal `[G | B]`, deduplicated by trying all permutations.
fn brute_classes(c: &LinearCode, m: usize) -> Vec<LinearCode> {
    let (n, k) = c.params();
    let perms = permutations(n + m);
    let mut exact = HashSet::new();
    let mut canon = HashSet::new();
    let mut out = Vec::new();
    for bits in 0u64..1 << (k * m) {
        let tail: Vec<BitVector> = (0..k)
            .map(|i| BitVector::from_word(m, (bits >> (i * m)) & ((1 << m) - 1)))
            .collect();
        let full = c
            .generator()
            .hstack(&BinaryMatrix::from_rows(m, tail).unwrap())
            .unwrap();
        if !full.gram().is_zero() {
            continue;
        }
        let code = LinearCode::from_generator(&full).unwrap();
        if !exact.insert(code.echelon().matrix.clone()) {
            continue;
        }
        if canon.insert(brute_canonical(&code, &perms)) {
            out.push(code);
        }
    }
    out
}

fn random_code(rng: &mut ChaCha8Rng, n: usize, k: usize) -> Option<LinearCode> {
    let rows: Vec<BitVector> = (0..k).map(|_| BitVector::from_word(n, rng.gen())).collect();
    LinearCode::from_generator(&BinaryMatrix::from_rows(n, rows).unwrap()).ok()
}

#[test]
fn hamming_4_has_two_classes() {
    let out = search_all(&hamming(4).unwrap(), &cfg(None)).unwrap();
    assert_eq!(out.m, 7);
    assert_eq!(out.classes.undecided(), 0);
    let mut ds: Vec<usize> = out
        .classes
        .representatives()
        .map(|c| {
            assert_eq!(c.params(), (22, 11));
            assert!(c.is_self_dual());
            c.min_distance().unwrap()
        })
        .collect();
    ds.sort();
    assert_eq!(ds, vec![4, 6]);
}

#[test]
fn first_row_normalization_loses_nothing() {
    for (code, m) in [(hamming(4).unwrap(), 7), (even_code(4).unwrap(), 3)] {
        let on = search_all(&code, &cfg(Some(m))).unwrap();
        let off = search_all(
            &code,
            &SearchConfig {
                m: Some(m),
                normalize_first_row: false,
                ..SearchConfig::default()
            },
        )
        .unwrap();
        assert_eq!(on.classes.len(), off.classes.len());
        for a in on.classes.representatives() {
            assert!(off.classes.representatives().any(|b| equivalent(a, b)));
        }
    }
}

#[test]
fn e4_classes_match_brute_force() {
    let e4 = even_code(4).unwrap();
    let out = search_all(&e4, &cfg(Some(3))).unwrap();
    let brute = brute_classes(&e4, 3);
    assert_eq!(out.classes.len(), brute.len());
    for c in out.classes.representatives() {
        assert_eq!(c.params(), (7, 3));
        assert_eq!(c.min_distance().unwrap(), 4);
    }
}

#[test]
fn self_orthogonal_input_is_its_own_class() {
    let s = simplex(3).unwrap();
    let out = search_all(&s, &cfg(Some(0))).unwrap();
    assert_eq!(out.classes.len(), 1);
    assert_eq!(out.classes.representatives().next().unwrap(), &s);
}

#[test]
fn complete_on_tiny_codes() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    let mut tested = 0;
    while tested < 25 {
        let n = rng.gen_range(2..=5);
        let k = rng.gen_range(1..=3.min(n));
        let Some(c) = random_code(&mut rng, n, k) else {
            continue;
        };
        let m0 = shortest_length(&c);
        for m in [m0, m0 + 1] {
            if n + m > 8 || c.k() * m > 12 {
                continue;
            }
            let out = search_all(&c, &cfg(Some(m))).unwrap();
            let brute = brute_classes(&c, m);
            assert_eq!(out.classes.len(), brute.len(), "{c:?} m = {m}");
            for r in out.classes.representatives() {
                assert!(r.is_self_orthogonal());
                assert_eq!(r.n(), n + m);
                let back = soembed::embed::puncture(r, &(n..n + m).collect::<Vec<_>>()).unwrap();
                assert_eq!(back, c);
                assert!(brute.iter().any(|b| equivalent(r, b)));
            }
            tested += 1;
        }
    }
}

#[test]
fn threads_do_not_change_the_output() {
    let h = hamming(4).unwrap();
    let one = search_all(&h, &cfg(None)).unwrap();
    let many = search_all(
        &h,
        &SearchConfig {
            threads: 4,
            thread_partition_depth: 2,
            ..SearchConfig::default()
        },
    )
    .unwrap();
    let a: Vec<_> = one.classes.representatives().collect();
    let b: Vec<_> = many.classes.representatives().collect();
    assert_eq!(a, b);
    assert_eq!(one.distinct_leaves, many.distinct_leaves);
}

#[test]
fn search_agrees_with_fixtures() {
    let out = search_all(&hamming(4).unwrap(), &cfg(None)).unwrap();
    let c4 = LinearCode::from_strs(fixtures::C22_11_4).unwrap();
    let c6 = LinearCode::from_strs(fixtures::C22_11_6).unwrap();
    for fixture in [c4, c6] {
        assert_eq!(
            out.classes
                .representatives()
                .filter(|r| equivalent(r, &fixture))
                .count(),
            1
        );
    }
}

#[test]
fn witness_for_random_permutations() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for c in [
        hamming(4).unwrap(),
        LinearCode::from_strs(fixtures::C22_11_6).unwrap(),
        LinearCode::from_strs(fixtures::EX2_G1).unwrap(),
    ] {
        for _ in 0..5 {
            let mut p: Vec<usize> = (0..c.n()).collect();
            p.shuffle(&mut rng);
            let d = c.permuted(&p);
            match are_equivalent(&c, &d).unwrap() {
                Equivalence::Equivalent(w) => assert_eq!(c.permuted(&w), d),
                other => panic!("{other:?}"),
            }
            match are_equivalent(&d, &c).unwrap() {
                Equivalence::Equivalent(w) => assert_eq!(d.permuted(&w), c),
                other => panic!("{other:?}"),
            }
        }
        assert!(equivalent(&c, &c));
    }
}

#[test]
fn distinct_self_dual_22_codes() {
    let c4 = LinearCode::from_strs(fixtures::C22_11_4).unwrap();
    let c6 = LinearCode::from_strs(fixtures::C22_11_6).unwrap();
    assert_eq!(
        are_equivalent(&c4, &c6).unwrap(),
        Equivalence::NotEquivalent
    );
    assert_ne!(fingerprint(&c4).unwrap(), fingerprint(&c6).unwrap());
    let gbr = LinearCode::from_generator(&fixtures::h4_gbr()).unwrap();
    assert!(equivalent(&gbr, &c6));
}

#[test]
fn equivalence_is_symmetric_on_random_pairs() {
    let mut rng = ChaCha8Rng::seed_from_u64(37);
    for _ in 0..200 {
        let n = rng.gen_range(3..=8);
        let k = rng.gen_range(1..=4.min(n));
        let (Some(a), Some(b)) = (random_code(&mut rng, n, k), random_code(&mut rng, n, k)) else {
            continue;
        };
        let ab = are_equivalent(&a, &b).unwrap();
        let ba = are_equivalent(&b, &a).unwrap();
        assert_eq!(
            matches!(ab, Equivalence::Equivalent(_)),
            matches!(ba, Equivalence::Equivalent(_))
        );
        if let Equivalence::Equivalent(w) = &ab {
            assert_eq!(a.permuted(w), b);
        }
        let perms = permutations(n);
        let brute = a.params() == b.params() && perms.iter().any(|p| a.permuted(p) == b);
        assert_eq!(matches!(ab, Equivalence::Equivalent(_)), brute);
    }
}

#[test]
fn fingerprint_is_permutation_invariant() {
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    let c = LinearCode::from_strs(fixtures::EX2_G1).unwrap();
    let f = fingerprint(&c).unwrap();
    for _ in 0..100 {
        let mut p: Vec<usize> = (0..c.n()).collect();
        p.shuffle(&mut rng);
        assert_eq!(fingerprint(&c.permuted(&p)).unwrap(), f);
    }
}

/// A two-dimensional code is fixed up to equivalence by how many columns are
/// `01`, `10`, `11` and `00`, and those counts are recovered from the three
/// nonzero weights. So no pair of inequivalent `[10, 2]` codes shares a
/// weight distribution, and the fingerprint never has to separate one.
#[test]
fn length_10_dimension_2_has_no_collisions() {
    let n = 10;
    let mut codes = Vec::new();
    for a in 0..=n {
        for b in 0..=n - a {
            for c in 0..=n - a - b {
                let col = |j: usize| -> (bool, bool) {
                    if j < a {
                        (true, false)
                    } else if j < a + b {
                        (false, true)
                    } else if j < a + b + c {
                        (true, true)
                    } else {
                        (false, false)
                    }
                };
                let r0 = BitVector::from_bools(&(0..n).map(|j| col(j).0).collect::<Vec<_>>());
                let r1 = BitVector::from_bools(&(0..n).map(|j| col(j).1).collect::<Vec<_>>());
                let g = BinaryMatrix::from_rows(n, vec![r0, r1]).unwrap();
                if let Ok(code) = LinearCode::from_generator(&g) {
                    if code.k() == 2 {
                        codes.push(code);
                    }
                }
            }
        }
    }
    for (i, x) in codes.iter().enumerate() {
        for y in &codes[i + 1..] {
            let same_weights = x.weight_distribution().unwrap() == y.weight_distribution().unwrap();
            let eq = equivalent(x, y);
            assert_eq!(same_weights, eq);
            assert_eq!(fingerprint(x).unwrap() == fingerprint(y).unwrap(), eq);
        }
    }
}
