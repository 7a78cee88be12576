use std::collections::BTreeMap;

use dectab::characters::*;
use dectab::insertion::enumerate_recording_tableaux;
use dectab::tableaux::*;
use dectab::words::*;
use num_bigint::BigInt;
use proptest::prelude::*;

fn weights_of(ts: &[ShiftedTableau], n: usize) -> Vec<Weight> {
    ts.iter()
        .map(|t| weight_of(&revrow(t), n).unwrap())
        .collect()
}

/// Backtracking fill of the shifted diagram, checking only the left and
/// lower neighbours of each new box.
fn oracle_schur(shape: &StrictPartition, n: usize, diagonal_primes: bool) -> MonomialPolynomial {
    let boxes = shape.boxes();
    let mut filling: BTreeMap<(usize, usize), u32> = BTreeMap::new();
    let mut out = MonomialPolynomial::zero(n);
    fn go(
        k: usize,
        boxes: &[(usize, usize)],
        n: usize,
        diag: bool,
        filling: &mut BTreeMap<(usize, usize), u32>,
        out: &mut MonomialPolynomial,
    ) {
        if k == boxes.len() {
            let mut e = vec![0; n];
            for v in filling.values() {
                e[(*v as usize).div_ceil(2) - 1] += 1;
            }
            out.add_term(e, BigInt::from(1));
            return;
        }
        let (i, j) = boxes[k];
        for v in 1..=2 * n as u32 {
            let primed = v % 2 == 1;
            if primed && i == j && !diag {
                continue;
            }
            if let Some(&l) = filling.get(&(i, j - 1)) {
                if l > v || (l == v && primed) {
                    continue;
                }
            }
            if let Some(&d) = filling.get(&(i - 1, j)) {
                if d > v || (d == v && !primed) {
                    continue;
                }
            }
            filling.insert((i, j), v);
            go(k + 1, boxes, n, diag, filling, out);
            filling.remove(&(i, j));
        }
    }
    go(0, &boxes, n, diagonal_primes, &mut filling, &mut out);
    out
}

fn one_row_q(k: u32, n: usize) -> MonomialPolynomial {
    // Coefficient of t^k in prod_i (1 + x_i t) / (1 - x_i t).
    let mut out = MonomialPolynomial::zero(n);
    for exps in compositions(k, n) {
        let mut coef = BigInt::from(1);
        for &a in &exps {
            if a > 0 {
                coef *= 2;
            }
        }
        out.add_term(exps, coef);
    }
    out
}

fn compositions(k: u32, n: usize) -> Vec<Vec<u32>> {
    if n == 0 {
        return if k == 0 { vec![vec![]] } else { vec![] };
    }
    (0..=k)
        .flat_map(|a| {
            compositions(k - a, n - 1).into_iter().map(move |mut rest| {
                rest.insert(0, a);
                rest
            })
        })
        .collect()
}

#[test]
fn schur_polynomials_match_brute_force_fillings() {
    for n in 1..=4 {
        for size in 0..=5 {
            for l in StrictPartition::all_of_size(size) {
                assert_eq!(schur_p(&l, n), oracle_schur(&l, n, false), "P {l} n={n}");
                assert_eq!(schur_q(&l, n), oracle_schur(&l, n, true), "Q {l} n={n}");
            }
        }
    }
}

#[test]
fn one_row_q_matches_generating_function() {
    for n in 1..=4 {
        for k in 1..=6 {
            let l = StrictPartition::new(vec![k as usize]).unwrap();
            assert_eq!(schur_q(&l, n), one_row_q(k, n), "k={k} n={n}");
        }
    }
}

#[test]
fn decomposition_characters_are_schur_functions() {
    for n in 1..=4 {
        for size in 0..=6 {
            for l in StrictPartition::all_of_size(size) {
                let plain = weights_of(&enumerate(Family::DecTab, &l, n), n);
                let primed = weights_of(&enumerate(Family::DecTabPlus, &l, n), n);
                let p = character(&plain, n);
                let q = character(&primed, n);
                assert_eq!(p, schur_p(&l, n), "{l} n={n}");
                assert_eq!(q, schur_q(&l, n), "{l} n={n}");
                assert_eq!(q, p.scale(&(BigInt::from(1) << l.len())));
                assert!(q.is_symmetric());
                assert_eq!(primed.len(), enumerate(Family::ShTabPlus, &l, n).len());
            }
        }
    }
}

#[test]
fn standard_crystal_character() {
    let b = StandardCrystal::new(2);
    let ws: Vec<Weight> = b.elements().iter().map(|x| b.weight(x)).collect();
    assert_eq!(character(&ws, 2).to_string(), "2*x1 + 2*x2");
    assert!(character(&[], 3).is_zero());
}

#[test]
fn tensor_power_expands_by_recording_tableaux() {
    for (n, max_m) in [(2, 5), (3, 4)] {
        for m in 1..=max_m {
            let ws: Vec<Weight> = Word::all(m, n, true)
                .iter()
                .map(|w| weight_of(w, n).unwrap())
                .collect();
            let ch = character(&ws, n);
            let expansion = expand_in_schur_q(&ch).unwrap();
            for l in StrictPartition::all_of_size(m) {
                let expected = if l.len() > n {
                    0
                } else {
                    enumerate_recording_tableaux(&l).len()
                };
                let got = expansion.get(&l).cloned().unwrap_or_default();
                assert_eq!(got, BigInt::from(expected), "{l} n={n} m={m}");
            }
        }
    }
}

#[test]
fn expansion_of_single_shape_character() {
    let l: StrictPartition = "2,1".parse().unwrap();
    let ch = character(&weights_of(&enumerate(Family::DecTabPlus, &l, 3), 3), 3);
    assert_eq!(
        expand_in_schur_q(&ch).unwrap(),
        BTreeMap::from([(l, BigInt::from(1))])
    );
}

#[test]
fn polynomial_json_is_sorted() {
    let q = schur_q(&"1".parse().unwrap(), 2);
    assert_eq!(
        serde_json::to_string(&q).unwrap(),
        r#"[{"exp":[0,1],"coef":2},{"exp":[1,0],"coef":2}]"#
    );
}

proptest! {
    #[test]
    fn ring_laws(a in prop::collection::btree_map(prop::collection::vec(0u32..3, 3), -5i64..5, 0..5),
                 b in prop::collection::btree_map(prop::collection::vec(0u32..3, 3), -5i64..5, 0..5),
                 c in prop::collection::btree_map(prop::collection::vec(0u32..3, 3), -5i64..5, 0..5)) {
        let mk = |m: &BTreeMap<Vec<u32>, i64>| {
            let mut p = MonomialPolynomial::zero(3);
            for (e, c) in m {
                p.add_term(e.clone(), BigInt::from(*c));
            }
            p
        };
        let (a, b, c) = (mk(&a), mk(&b), mk(&c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert!((&a - &a).is_zero());
        prop_assert!(a.terms().values().all(|c| *c != BigInt::from(0)));
    }
}
