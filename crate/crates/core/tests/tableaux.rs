use dectab::tableaux::*;
use dectab::words::*;

/// Length of the longest hook subsequence, by trying every subset.
fn longest_hook_subsequence(w: &[u32]) -> usize {
    let m = w.len();
    (0u32..1 << m)
        .filter_map(|mask| {
            let sub: Vec<u32> = (0..m)
                .filter(|&k| mask >> k & 1 == 1)
                .map(|k| w[k])
                .collect();
            (sub.is_empty() || is_hook_word(&sub).unwrap()).then_some(sub.len())
        })
        .max()
        .unwrap_or(0)
}

fn oracle_is_decomposition(t: &ShiftedTableau) -> bool {
    let rows: Vec<Vec<u32>> = t
        .rows()
        .iter()
        .map(|r| r.iter().map(|l| l.ceil()).collect())
        .collect();
    if !rows.iter().all(|r| is_hook_word(r).unwrap()) {
        return false;
    }
    rows.windows(2).all(|p| {
        let joined: Vec<u32> = p[1].iter().chain(&p[0]).copied().collect();
        longest_hook_subsequence(&joined) == p[0].len()
    })
}

fn all_fillings(shape: &StrictPartition, n: u32) -> Vec<ShiftedTableau> {
    let size = shape.size();
    let mut out = Vec::new();
    let total = (n as usize).pow(size as u32);
    for code in 0..total {
        let mut c = code;
        let mut rows = Vec::new();
        for &len in shape.parts() {
            let mut row = Vec::new();
            for _ in 0..len {
                row.push(Letter::unprimed((c % n as usize) as u32 + 1));
                c /= n as usize;
            }
            rows.push(row);
        }
        out.push(ShiftedTableau::from_rows(rows).unwrap());
    }
    out
}

fn shapes_up_to(size: usize) -> Vec<StrictPartition> {
    (0..=size).flat_map(StrictPartition::all_of_size).collect()
}

#[test]
fn characterisation_matches_maximal_hook_oracle() {
    for shape in shapes_up_to(6) {
        for t in all_fillings(&shape, 3) {
            assert_eq!(
                is_decomposition_tableau(&t),
                oracle_is_decomposition(&t),
                "{t}"
            );
        }
    }
}

#[test]
fn enumeration_matches_filtered_fillings() {
    for shape in shapes_up_to(5) {
        let mut expected: Vec<ShiftedTableau> = all_fillings(&shape, 3)
            .into_iter()
            .filter(oracle_is_decomposition)
            .collect();
        expected.sort();
        assert_eq!(enumerate(Family::DecTab, &shape, 3), expected, "{shape}");
    }
}

#[test]
fn diagonals_strictly_decrease() {
    for shape in shapes_up_to(6) {
        for t in enumerate(Family::DecTab, &shape, 4) {
            let diag: Vec<Letter> = t.rows().iter().map(|r| r[0]).collect();
            assert!(diag.windows(2).all(|p| p[0] > p[1]), "{t}");
        }
    }
}

#[test]
fn primed_family_has_two_to_the_length_members() {
    for shape in shapes_up_to(6) {
        for n in 1..=3 {
            let plain = enumerate(Family::DecTab, &shape, n).len();
            let primed = enumerate(Family::DecTabPlus, &shape, n);
            assert_eq!(primed.len(), plain << shape.len());
            assert!(primed.iter().all(is_primed_decomposition_tableau));
            let mut dedup = primed.clone();
            dedup.dedup();
            assert_eq!(dedup.len(), primed.len());
        }
    }
}

#[test]
fn operators_stay_in_family_and_commute_with_unprime() {
    for n in 2..=3 {
        for shape in shapes_up_to(5) {
            if shape.len() > n {
                continue;
            }
            for t in enumerate(Family::DecTabPlus, &shape, n) {
                for i in index_set(Flavor::QPlus, n) {
                    let e = tableau_e(&t, i, n).unwrap();
                    let f = tableau_f(&t, i, n).unwrap();
                    if let Some(e) = &e {
                        assert_eq!(tableau_f(e, i, n).unwrap().as_ref(), Some(&t));
                    }
                    if i != CrystalIndex::Zero {
                        let u = t.unprime();
                        assert_eq!(e.map(|x| x.unprime()), tableau_e(&u, i, n).unwrap());
                        assert_eq!(f.map(|x| x.unprime()), tableau_f(&u, i, n).unwrap());
                    }
                }
            }
        }
    }
}

#[test]
fn revrow_inverse() {
    for shape in shapes_up_to(5) {
        for t in enumerate(Family::DecTabPlus, &shape, 3) {
            assert_eq!(from_revrow(&shape, &revrow(&t)).unwrap(), t);
            assert_eq!(revrow(&t), row_reading_word(&t).reversed());
        }
    }
}

#[test]
fn border_strips_cover_the_diagram() {
    for shape in shapes_up_to(8) {
        let strips = border_strips(&shape);
        assert_eq!(strips.len(), shape.len());
        let mut all: Vec<(usize, usize)> = strips.concat();
        all.sort();
        assert_eq!(all, shape.boxes());
        let high = highest_tableau(&shape);
        assert!(is_decomposition_tableau(&high), "{high}");
        for (k, strip) in strips.iter().enumerate() {
            assert!(strip
                .iter()
                .all(|&(i, j)| high.get(i, j) == Some(Letter::unprimed(k as u32 + 1))));
        }
    }
}
