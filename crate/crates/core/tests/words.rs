use dectab::words::*;
use proptest::prelude::*;

fn all_words(max_len: usize, n: usize) -> Vec<Word> {
    (0..=max_len).flat_map(|m| Word::all(m, n, true)).collect()
}

#[test]
fn signature_rule_matches_tensor_fold() {
    for n in 2..=3 {
        let t = TensorPower::new(n, Flavor::QPlus);
        for w in all_words(4, n) {
            for i in index_set(Flavor::QPlus, n) {
                assert_eq!(e_word(&w, i, n).unwrap(), t.raise(&w, i), "e {i} {w}");
                assert_eq!(f_word(&w, i, n).unwrap(), t.lower(&w, i), "f {i} {w}");
            }
        }
    }
}

#[test]
fn q_rule_matches_on_unprimed_words() {
    for n in 2..=3 {
        let t = TensorPower::new(n, Flavor::Q);
        for m in 0..=4 {
            for w in Word::all(m, n, false) {
                for i in index_set(Flavor::Q, n) {
                    assert_eq!(e_word(&w, i, n).unwrap(), t.raise(&w, i), "e {i} {w}");
                    assert_eq!(f_word(&w, i, n).unwrap(), t.lower(&w, i), "f {i} {w}");
                }
            }
        }
    }
}

#[test]
fn gl_rule_matches_std_indices() {
    let n = 3;
    let t = TensorPower::new(n, Flavor::Gl);
    for w in all_words(4, n) {
        for i in index_set(Flavor::Gl, n) {
            assert_eq!(e_word(&w, i, n).unwrap(), t.raise(&w, i));
        }
    }
}

/// Parenthesis matching by repeatedly deleting an adjacent "( )" pair.
fn brute_force_pairing(w: &Word, k: u32) -> (Vec<usize>, Vec<usize>) {
    let mut marks: Vec<(usize, bool)> = w
        .iter()
        .enumerate()
        .filter_map(|(p, l)| match l.ceil() {
            c if c == k + 1 => Some((p, true)),
            c if c == k => Some((p, false)),
            _ => None,
        })
        .collect();
    while let Some(q) = marks.windows(2).position(|x| x[0].1 && !x[1].1) {
        marks.drain(q..q + 2);
    }
    let left = marks.iter().filter(|m| m.1).map(|m| m.0).collect();
    let right = marks.iter().filter(|m| !m.1).map(|m| m.0).collect();
    (left, right)
}

#[test]
fn pairing_matches_brute_force() {
    for w in all_words(5, 3) {
        for k in 1..=2 {
            let p = i_pairing(&w, k);
            assert_eq!(
                (p.unmatched_left, p.unmatched_right),
                brute_force_pairing(&w, k as u32)
            );
        }
    }
    let p = i_pairing(&"2 1 2".parse().unwrap(), 1);
    assert_eq!(p.unmatched_left, vec![2]);
}

#[test]
fn partial_inverse_and_weight_laws() {
    for n in 2..=3 {
        for w in all_words(5, n) {
            let wt = weight_of(&w, n).unwrap();
            for i in index_set(Flavor::QPlus, n) {
                if let Some(v) = e_word(&w, i, n).unwrap() {
                    assert_eq!(f_word(&v, i, n).unwrap(), Some(w.clone()));
                    let wv = weight_of(&v, n).unwrap();
                    match i {
                        CrystalIndex::Std(k) => {
                            assert_eq!(wv.get(k), wt.get(k) + 1);
                            assert_eq!(wv.get(k + 1) + 1, wt.get(k + 1));
                        }
                        CrystalIndex::Bar1 => {
                            assert_eq!(wv.get(1), wt.get(1) + 1);
                            assert_eq!(wv.get(2) + 1, wt.get(2));
                        }
                        CrystalIndex::Zero => {
                            assert_eq!(wv, wt);
                            let primes = |x: &Word| x.iter().filter(|l| l.is_primed()).count();
                            assert_eq!(primes(&v) + 1, primes(&w));
                        }
                    }
                }
                if let Some(v) = f_word(&w, i, n).unwrap() {
                    assert_ne!(v, w);
                    assert_eq!(e_word(&v, i, n).unwrap(), Some(w.clone()));
                }
            }
        }
    }
}

#[test]
fn unprime_commutes_with_bar1_and_std() {
    let n = 3;
    for w in all_words(5, n) {
        for i in index_set(Flavor::Q, n) {
            let lhs = e_word(&w, i, n).unwrap().map(|v| unprime_word(&v));
            let rhs = e_word(&unprime_word(&w), i, n).unwrap();
            assert_eq!(lhs, rhs);
            let lhs = f_word(&w, i, n).unwrap().map(|v| unprime_word(&v));
            let rhs = f_word(&unprime_word(&w), i, n).unwrap();
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn seminormality() {
    use CrystalIndex::*;
    for n in 2..=3 {
        for w in all_words(4, n) {
            let wt = weight_of(&w, n).unwrap();
            for k in 1..n {
                let (e, f) = string_lengths(&w, Std(k), n).unwrap();
                assert_eq!(f as i64 - e as i64, wt.get(k) as i64 - wt.get(k + 1) as i64);
            }
            let (eb, fb) = string_lengths(&w, Bar1, n).unwrap();
            assert!(eb + fb <= 1);
            assert_eq!(eb + fb, usize::from(wt.get(1) > 0 || wt.get(2) > 0));
            let (e0, f0) = string_lengths(&w, Zero, n).unwrap();
            assert_eq!(e0 + f0, usize::from(wt.get(1) > 0));
            if eb + fb == 0 {
                assert_eq!(e0 + f0, 0);
            }
        }
    }
}

#[test]
fn associativity_of_rebracketing() {
    for n in 2..=3 {
        let b = StandardCrystal::new(n);
        let left = TensorProduct::new(TensorProduct::new(b, b, Flavor::QPlus), b, Flavor::QPlus);
        let right = TensorProduct::new(b, TensorProduct::new(b, b, Flavor::QPlus), Flavor::QPlus);
        let rebracket = |((x, y), z): ((Letter, Letter), Letter)| (x, (y, z));
        for x in b.elements() {
            for y in b.elements() {
                for z in b.elements() {
                    let l = ((x, y), z);
                    for i in index_set(Flavor::QPlus, n) {
                        assert_eq!(
                            left.raise(&l, i).map(rebracket),
                            right.raise(&rebracket(l), i)
                        );
                        assert_eq!(
                            left.lower(&l, i).map(rebracket),
                            right.lower(&rebracket(l), i)
                        );
                    }
                }
            }
        }
    }
}

fn arb_word(n: u32, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec((1..=n, any::<bool>()), 0..=max_len)
        .prop_map(|v| v.into_iter().map(|(c, p)| Letter::new(c, p)).collect())
}

proptest! {
    #[test]
    fn word_display_round_trips(w in arb_word(12, 8)) {
        prop_assume!(w.len() != 1 || w.max_ceil() <= 9);
        prop_assert_eq!(w.to_string().parse::<Word>().unwrap(), w);
    }

    #[test]
    fn compact_form_agrees(w in arb_word(9, 8)) {
        let compact: String = w.iter().map(|l| l.to_string()).collect();
        prop_assert_eq!(compact.parse::<Word>().unwrap(), w);
    }

    #[test]
    fn e0_f0_never_fix(w in arb_word(4, 10)) {
        for i in [CrystalIndex::Zero, CrystalIndex::Bar1] {
            if let Some(v) = e_word(&w, i, 4).unwrap() { prop_assert_ne!(&v, &w); }
            if let Some(v) = f_word(&w, i, 4).unwrap() { prop_assert_ne!(&v, &w); }
        }
    }

    #[test]
    fn long_words_partial_inverse(w in arb_word(4, 12)) {
        for i in index_set(Flavor::QPlus, 4) {
            if let Some(v) = f_word(&w, i, 4).unwrap() {
                prop_assert_eq!(e_word(&v, i, 4).unwrap(), Some(w.clone()));
            }
        }
    }
}
