//! Exhaustive verification suites, one per reproducible result. Each suite
//! enumerates its cases, records failures, and reports counts.

use std::collections::{HashMap, HashSet};
use std::fmt::Debug;

use serde::Serialize;

use crate::characters::{character, schur_p, schur_q};
use crate::crystal_graph::{build_graph, e0_bracket, f0_bracket, sigma, CrystalGraph};
use crate::error::{Error, Result};
use crate::insertion::{
    dec_insert, enumerate_recording_tableaux, insert_word, inverse_insertion, monoid_product, p_dec,
};
use crate::plactic::{
    dec_class, dec_equivalent, derivation, equivalence_classes, Equivalence, DEFAULT_NODE_CAP,
};
use crate::tableaux::{
    enumerate, hat_lowest_tableau, highest_tableau, revrow, tableau_e, tableau_f, DecTabCrystal,
    Family, ShiftedTableau, StrictPartition,
};
use crate::words::{
    index_set, weight_of, Crystal, CrystalIndex, Flavor, Letter, StandardCrystal, TensorPower,
    TensorProduct, Weight, Word, WordCrystal,
};

const MAX_REPORTED: usize = 20;

#[derive(Clone, Debug, Serialize)]
pub struct CheckOutcome {
    pub id: usize,
    pub name: &'static str,
    pub passed: bool,
    pub cases: usize,
    pub failures: Vec<String>,
}

/// Optional narrowing of a suite: a single rank and a bound on word length
/// or tableau size in place of the suite's defaults.
#[derive(Clone, Copy, Debug, Default)]
pub struct CheckConfig {
    pub n: Option<usize>,
    pub max_len: Option<usize>,
}

pub const SUITES: [&str; 11] = [
    "golden-insertion",
    "insertion-steps",
    "bijection",
    "equivariance",
    "highest-lowest",
    "characters",
    "axioms",
    "idempotence",
    "plactic",
    "rank",
    "monoid",
];

#[derive(Default)]
struct Tally {
    cases: usize,
    failures: Vec<String>,
    dropped: usize,
}

impl Tally {
    fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.fail(msg());
        }
    }

    fn fail(&mut self, msg: String) {
        if self.failures.len() < MAX_REPORTED {
            self.failures.push(msg);
        } else {
            self.dropped += 1;
        }
    }

    fn finish(mut self, id: usize) -> CheckOutcome {
        if self.dropped > 0 {
            self.failures.push(format!("... and {} more", self.dropped));
        }
        CheckOutcome {
            id,
            name: SUITES[id - 1],
            passed: self.failures.is_empty(),
            cases: self.cases,
            failures: self.failures,
        }
    }
}

/// Runs one suite by name, or every suite for `"all"`.
pub fn run_suite(name: &str, config: &CheckConfig) -> Result<Vec<CheckOutcome>> {
    if name == "all" {
        return Ok((1..=SUITES.len()).map(|id| run_by_id(id, config)).collect());
    }
    let id = SUITES
        .iter()
        .position(|s| *s == name)
        .ok_or_else(|| Error::Parse {
            what: "suite",
            input: name.to_string(),
            reason: format!("expected one of: all, {}", SUITES.join(", ")),
        })?;
    Ok(vec![run_by_id(id + 1, config)])
}

pub fn run_by_id(id: usize, config: &CheckConfig) -> CheckOutcome {
    let mut t = Tally::default();
    match id {
        1 => golden_insertion(&mut t),
        2 => insertion_steps(&mut t),
        3 => bijection(&mut t, config),
        4 => equivariance(&mut t, config),
        5 => highest_lowest(&mut t, config),
        6 => characters(&mut t, config),
        7 => axioms(&mut t, config),
        8 => idempotence(&mut t, config),
        9 => plactic(&mut t, config),
        10 => rank(&mut t, config),
        11 => monoid(&mut t),
        _ => t.fail(format!("no suite {id}")),
    }
    t.finish(id)
}

fn tab(s: &str) -> ShiftedTableau {
    ShiftedTableau::parse_rows(s).expect("literal tableau")
}

fn word(s: &str) -> Word {
    s.parse().expect("literal word")
}

fn ranks(config: &CheckConfig, default: &[usize]) -> Vec<usize> {
    config.n.map_or_else(|| default.to_vec(), |n| vec![n])
}

fn shapes_up_to(size: usize, n: usize) -> Vec<StrictPartition> {
    (0..=size)
        .flat_map(StrictPartition::all_of_size)
        .filter(|l| l.len() <= n)
        .collect()
}

fn golden_insertion(t: &mut Tally) {
    let (p, q) = insert_word(&word("4' 4 3 3 2' 3' 3 2' 1'"));
    let (ep, eq) = (
        tab("4 3 3 3 4 / 2 2' 3 / 1'"),
        tab("1 2' 3 6 8 / 4 5' 9' / 7"),
    );
    t.check(p == ep, || format!("P = {p}, expected {ep}"));
    t.check(q == eq, || format!("Q = {q}, expected {eq}"));
}

fn insertion_steps(t: &mut Tally) {
    let base = tab("4 2 2 1' 3 4 6");
    for (x, expected) in [("1", "4 3 2 1 1 4 6 / 2'"), ("4'", "4 4 2 1' 3 4 6 / 2'")] {
        let got = dec_insert(x.parse().unwrap(), &base).map(|i| i.tableau);
        let expected = tab(expected);
        t.check(got.as_ref().ok() == Some(&expected), || {
            format!("{x} into {base}: {got:?}, expected {expected}")
        });
    }
    // Inline displays: row 4 2 2 1° 3 receiving 1• (middle moves) or 3• (middle stays).
    for circ in [false, true] {
        for bullet in [false, true] {
            let row = ShiftedTableau::from_rows(vec![vec![
                Letter::unprimed(4),
                Letter::unprimed(2),
                Letter::unprimed(2),
                Letter::new(1, circ),
                Letter::unprimed(3),
            ]])
            .expect("hook row");
            let cases = [
                (
                    Letter::new(1, bullet),
                    vec![4, 3, 2, 1, 1],
                    Some(4usize),
                    Letter::new(2, circ),
                    true,
                ),
                (
                    Letter::new(3, bullet),
                    vec![4, 3, 2, 1, 3],
                    None,
                    Letter::new(2, bullet),
                    false,
                ),
            ];
            for (x, values, bullet_at, carried, moved) in cases {
                let Ok(ins) = dec_insert(x, &row) else {
                    t.fail(format!("{x} into {row} failed"));
                    continue;
                };
                let first: Vec<Letter> = values
                    .iter()
                    .enumerate()
                    .map(|(k, &v)| match bullet_at {
                        Some(j) if j == k => Letter::new(v, bullet),
                        None if k == 3 => Letter::new(v, circ),
                        _ => Letter::unprimed(v),
                    })
                    .collect();
                let step = &ins.trace[0];
                t.check(ins.tableau.rows()[0] == first, || {
                    format!("{x} into {row}: first row {:?}", ins.tableau.rows()[0])
                });
                t.check(
                    step.bumped == Some(carried) && step.middle_moved == moved,
                    || {
                        format!(
                            "{x} into {row}: carried {:?}, expected {carried}",
                            step.bumped
                        )
                    },
                );
            }
        }
    }
}

fn bijection(t: &mut Tally, config: &CheckConfig) {
    let plan: Vec<(usize, usize)> = match (config.n, config.max_len) {
        (None, None) => vec![(2, 6), (3, 4)],
        (n, m) => vec![(n.unwrap_or(3), m.unwrap_or(4))],
    };
    for (n, max_m) in plan {
        for m in 0..=max_m {
            let mut seen = HashSet::new();
            for w in Word::all(m, n, true) {
                let (p, q) = insert_word(&w);
                let back = inverse_insertion(&p, &q);
                t.check(back.as_ref().ok() == Some(&w), || {
                    format!("{w}: inverse gave {back:?}")
                });
                let fresh = seen.insert((p, q));
                t.check(fresh, || format!("{w}: (P,Q) already produced"));
            }
            let pairs: usize = StrictPartition::all_of_size(m)
                .iter()
                .map(|l| {
                    enumerate(Family::DecTabPlus, l, n).len()
                        * enumerate_recording_tableaux(l).len()
                })
                .sum();
            t.check(seen.len() == pairs, || {
                format!(
                    "n={n} m={m}: image has {} pairs, expected {pairs}",
                    seen.len()
                )
            });
        }
    }
}

fn equivariance(t: &mut Tally, config: &CheckConfig) {
    let n = config.n.unwrap_or(3);
    let max_m = config.max_len.unwrap_or(4);
    if n < 2 {
        t.fail("equivariance needs n >= 2".into());
        return;
    }
    let crystal = TensorPower::new(n, Flavor::QPlus);
    for m in 1..=max_m {
        let words = Word::all(m, n, true);
        for w in &words {
            let p = p_dec(w);
            for i in index_set(Flavor::QPlus, n) {
                let via_word = crystal.raise(w, i).map(|x| p_dec(&x));
                let via_tab = tableau_e(&p, i, n).ok().flatten();
                t.check(via_word == via_tab, || format!("e_{i} on {w}"));
                let via_word = crystal.lower(w, i).map(|x| p_dec(&x));
                let via_tab = tableau_f(&p, i, n).ok().flatten();
                t.check(via_word == via_tab, || format!("f_{i} on {w}"));
            }
        }
        let Ok(g) = build_graph(&crystal, words, Flavor::QPlus) else {
            t.fail(format!("word graph n={n} m={m} not closed"));
            continue;
        };
        let mut q_of_component: HashMap<ShiftedTableau, usize> = HashMap::new();
        for (k, comp) in g.components().iter().enumerate() {
            let qs: HashSet<ShiftedTableau> =
                comp.iter().map(|&v| insert_word(g.vertex(v)).1).collect();
            t.check(qs.len() == 1, || {
                format!("component {k} at m={m} has {} recording tableaux", qs.len())
            });
            for q in qs {
                let other = q_of_component.insert(q.clone(), k);
                t.check(other.is_none(), || {
                    format!("recording tableau {q} shared by two components")
                });
            }
        }
    }
}

fn bracket_chains(t: &mut Tally) {
    let c = DecTabCrystal::new("6,4,2,1".parse().unwrap(), 4);
    let start = tab("4 3 2 2 1 1 / 3 2 1 1 / 2 1 / 1'");
    let mut cur = start.clone();
    for (i, rows) in [
        (3, "4 4 2 2 1 1 / 3 2 1 1 / 2 1 / 1'"),
        (2, "4 4 3 3 1 1 / 3 3 1 1 / 2 1 / 1'"),
        (1, "4 4 3 3 2 2 / 3 3 2 2 / 2 2 / 1'"),
    ] {
        cur = sigma(&c, &cur, i);
        t.check(cur == tab(rows), || {
            format!("e_0^[4] chain: sigma_{i} gave {cur}")
        });
    }
    let e0 = c.raise(&cur, CrystalIndex::Zero);
    t.check(e0 == Some(tab("4 4 3 3 2 2 / 3 3 2 2 / 2 2 / 1")), || {
        format!("e_0^[4] chain: e_0 gave {e0:?}")
    });
    t.check(e0_bracket(&c, &start, 4).is_some(), || {
        "e_0^[4] vanished".into()
    });

    let c = DecTabCrystal::new("6,4,2,1".parse().unwrap(), 7);
    let start = tab("7 7 7 7 7 7 / 6 6 6 6' / 5 5' / 4'");
    let mut cur = start.clone();
    for (i, rows) in [
        (6, "7 7 7 7 6 6 / 6 6 6 6' / 5 5' / 4'"),
        (5, "7 7 7 7 5 5 / 6 6 5 5' / 5 5' / 4'"),
        (4, "7 7 7 7 4 4 / 6 6 4 4' / 5 4' / 4'"),
        (3, "7 7 7 7 3 3 / 6 6 3 3' / 5 3' / 3'"),
        (2, "7 7 7 7 2 2 / 6 6 2 2' / 5 2' / 2'"),
        (1, "7 7 7 7 1 1 / 6 6 1 1' / 5 1' / 1'"),
    ] {
        cur = sigma(&c, &cur, i);
        t.check(cur == tab(rows), || {
            format!("f_0^[7] chain: sigma_{i} gave {cur}")
        });
    }
    let f0 = c.lower(&cur, CrystalIndex::Zero);
    t.check(
        f0 == Some(tab("7 7 7 7 1 1' / 6 6 1 1' / 5 1' / 1'")),
        || format!("f_0^[7] chain: f_0 gave {f0:?}"),
    );
    t.check(f0_bracket(&c, &start, 7).is_some(), || {
        "f_0^[7] vanished".into()
    });
}

fn highest_lowest(t: &mut Tally, config: &CheckConfig) {
    let size = config.max_len.unwrap_or(5);
    for n in ranks(config, &[2, 3]) {
        for shape in shapes_up_to(size, n).into_iter().filter(|l| !l.is_empty()) {
            let c = DecTabCrystal::new(shape.clone(), n);
            let g = match build_graph(&c, c.elements(), Flavor::QPlus) {
                Ok(g) => g,
                Err(e) => {
                    t.fail(format!("{shape} n={n}: {e}"));
                    continue;
                }
            };
            let high: Vec<&ShiftedTableau> = g
                .highest_vertices(Flavor::QPlus)
                .iter()
                .map(|&v| g.vertex(v))
                .collect();
            let top = highest_tableau(&shape);
            t.check(high == vec![&top], || {
                format!("{shape} n={n}: highest vertices {high:?}")
            });
            let weight_ok = c
                .weight(&top)
                .as_slice()
                .iter()
                .map(|&x| x as usize)
                .collect::<Vec<_>>()
                == (0..n)
                    .map(|k| shape.parts().get(k).copied().unwrap_or(0))
                    .collect::<Vec<_>>();
            t.check(weight_ok, || {
                format!("{shape}: highest tableau has the wrong weight")
            });
            let low: Vec<&ShiftedTableau> = g
                .lowest_vertices(Flavor::QPlus)
                .iter()
                .map(|&v| g.vertex(v))
                .collect();
            match hat_lowest_tableau(&shape, n) {
                Ok(bottom) => t.check(low == vec![&bottom], || {
                    format!("{shape} n={n}: lowest vertices {low:?}")
                }),
                Err(e) => t.fail(format!("{shape} n={n}: {e}")),
            }
        }
    }
    bracket_chains(t);
}

fn tableau_weights(ts: &[ShiftedTableau], n: usize) -> Vec<Weight> {
    ts.iter()
        .map(|t| weight_of(&revrow(t), n).expect("entries within rank"))
        .collect()
}

fn characters(t: &mut Tally, config: &CheckConfig) {
    let size = config.max_len.unwrap_or(6);
    let ns = config.n.map_or_else(|| (1..=4).collect(), |n| vec![n]);
    for n in ns {
        for shape in (0..=size).flat_map(StrictPartition::all_of_size) {
            let dec = enumerate(Family::DecTab, &shape, n);
            let dec_plus = enumerate(Family::DecTabPlus, &shape, n);
            let p = schur_p(&shape, n);
            let q = schur_q(&shape, n);
            t.check(character(&tableau_weights(&dec, n), n) == p, || {
                format!("ch DecTab_{n}({shape}) != P")
            });
            t.check(character(&tableau_weights(&dec_plus, n), n) == q, || {
                format!("ch DecTab+_{n}({shape}) != Q")
            });
            let factor = num_bigint::BigInt::from(1) << shape.len();
            t.check(q == p.scale(&factor), || {
                format!("Q_{shape} != 2^l P_{shape} at n={n}")
            });
            let mut a = tableau_weights(&dec_plus, n);
            let mut b = tableau_weights(&enumerate(Family::ShTabPlus, &shape, n), n);
            a.sort();
            b.sort();
            t.check(a == b, || {
                format!("weights of DecTab+_{n}({shape}) and ShTab+ differ")
            });
            let mut a = tableau_weights(&dec, n);
            let mut b = tableau_weights(&enumerate(Family::ShTab, &shape, n), n);
            a.sort();
            b.sort();
            t.check(a == b, || {
                format!("weights of DecTab_{n}({shape}) and ShTab differ")
            });
        }
    }
}

fn std_indices(n: usize) -> impl Iterator<Item = CrystalIndex> {
    (1..n).map(CrystalIndex::Std)
}

/// Every clause of the crystal axioms for the given flavor, plus the
/// matching seminormality conditions, on a finite closed set of elements.
pub fn check_crystal_axioms<C: Crystal>(
    c: &C,
    elements: &[C::Elem],
    flavor: Flavor,
) -> (usize, Vec<String>)
where
    C::Elem: Debug,
{
    use CrystalIndex::{Bar1, Zero};
    let mut t = Tally::default();
    let n = c.rank();
    let members: HashSet<&C::Elem> = elements.iter().collect();
    let arrow = |i: CrystalIndex| -> Vec<i64> {
        let mut v = vec![0i64; n];
        if let CrystalIndex::Std(k) = i {
            v[k - 1] = 1;
            v[k] = -1;
        } else if i == Bar1 {
            v[0] = 1;
            v[1] = -1;
        }
        v
    };
    let wt = |b: &C::Elem| -> Vec<i64> { c.weight(b).0.iter().map(|&x| x as i64).collect() };
    let inverse_and_weight = |t: &mut Tally, i: CrystalIndex, clause: &str, b: &C::Elem| {
        if let Some(x) = c.raise(b, i) {
            t.check(members.contains(&x), || {
                format!("{clause}: e_{i}({b:?}) leaves the set")
            });
            t.check(c.lower(&x, i).as_ref() == Some(b), || {
                format!("{clause}: f_{i} e_{i} {b:?} != {b:?}")
            });
            let expect: Vec<i64> = wt(b).iter().zip(arrow(i)).map(|(a, d)| a + d).collect();
            t.check(wt(&x) == expect, || {
                format!("{clause}: weight of e_{i}({b:?})")
            });
        }
        if let Some(x) = c.lower(b, i) {
            t.check(members.contains(&x), || {
                format!("{clause}: f_{i}({b:?}) leaves the set")
            });
            t.check(c.raise(&x, i).as_ref() == Some(b), || {
                format!("{clause}: e_{i} f_{i} {b:?} != {b:?}")
            });
        }
    };
    let commutes = |t: &mut Tally, clause: &str, b: &C::Elem, j: CrystalIndex, i: CrystalIndex| {
        type Op<'a, E> = &'a dyn Fn(&E, CrystalIndex) -> Option<E>;
        let raise: Op<C::Elem> = &|x, k| c.raise(x, k);
        let lower: Op<C::Elem> = &|x, k| c.lower(x, k);
        for (oj, nj) in [(raise, "e"), (lower, "f")] {
            for (oi, ni) in [(raise, "e"), (lower, "f")] {
                let a = oj(b, j).and_then(|x| oi(&x, i));
                let z = oi(b, i).and_then(|x| oj(&x, j));
                t.check(a == z, || {
                    format!("{clause}: {ni}_{i} {nj}_{j} != {nj}_{j} {ni}_{i} at {b:?}")
                });
            }
        }
    };
    let preserves = |t: &mut Tally, clause: &str, b: &C::Elem, j: CrystalIndex, i: CrystalIndex| {
        for x in [c.raise(b, j), c.lower(b, j)].into_iter().flatten() {
            t.check(
                c.epsilon(&x, i) == c.epsilon(b, i) && c.phi(&x, i) == c.phi(b, i),
                || format!("{clause}: operator {j} changes string lengths for {i} at {b:?}"),
            );
        }
    };
    for b in elements {
        let w = c.weight(b);
        for k in 1..n {
            let i = CrystalIndex::Std(k);
            inverse_and_weight(&mut t, i, "crystal-def", b);
            let (e, f) = (c.epsilon(b, i) as i64, c.phi(b, i) as i64);
            t.check(f - e == w.get(k) as i64 - w.get(k + 1) as i64, || {
                format!("gl seminormal at {b:?}, {i}")
            });
        }
        if flavor == Flavor::Gl {
            continue;
        }
        for i in (3..n).map(CrystalIndex::Std) {
            commutes(&mut t, "q-crystal (a)", b, Bar1, i);
            preserves(&mut t, "q-crystal (a)", b, Bar1, i);
        }
        inverse_and_weight(&mut t, Bar1, "q-crystal (b)", b);
        let bar_sum = c.epsilon(b, Bar1) + c.phi(b, Bar1);
        let expect = usize::from(w.get(1) > 0 || w.get(2) > 0);
        t.check(bar_sum == expect, || {
            format!("q seminormal at {b:?}: bar-1 string sum {bar_sum}")
        });
        if flavor == Flavor::Q {
            continue;
        }
        for i in (2..n).map(CrystalIndex::Std) {
            commutes(&mut t, "q+-crystal (a)", b, Zero, i);
        }
        for i in std_indices(n).chain([Bar1]) {
            preserves(&mut t, "q+-crystal (a)", b, Zero, i);
        }
        for x in [c.raise(b, Zero), c.lower(b, Zero)].into_iter().flatten() {
            t.check(c.weight(&x) == w, || {
                format!("q+-crystal (a): operator 0 changes the weight of {b:?}")
            });
        }
        if let Some(x) = c.raise(b, Zero) {
            t.check(members.contains(&x), || {
                format!("q+-crystal (b): e_0({b:?}) leaves the set")
            });
            t.check(c.lower(&x, Zero).as_ref() == Some(b), || {
                format!("q+-crystal (b): f_0 e_0 {b:?}")
            });
        }
        if let Some(x) = c.lower(b, Zero) {
            t.check(c.raise(&x, Zero).as_ref() == Some(b), || {
                format!("q+-crystal (b): e_0 f_0 {b:?}")
            });
        }
        let zero_sum = c.epsilon(b, Zero) + c.phi(b, Zero);
        t.check(zero_sum <= 1 && (bar_sum > 0 || zero_sum == 0), || {
            format!("q+-crystal (c) at {b:?}: 0-string sum {zero_sum}, bar-1 sum {bar_sum}")
        });
        t.check(zero_sum == usize::from(w.get(1) > 0), || {
            format!("q+ seminormal at {b:?}")
        });
    }
    (t.cases, t.failures)
}

fn axioms(t: &mut Tally, config: &CheckConfig) {
    let max_m = config.max_len.unwrap_or(4);
    for n in ranks(config, &[2, 3]) {
        if n < 2 {
            t.fail("q+ axioms need n >= 2".into());
            continue;
        }
        let fold = TensorPower::new(n, Flavor::QPlus);
        let signature = WordCrystal::new(n);
        for m in 1..=max_m {
            let words = Word::all(m, n, true);
            let (cases, failures) = check_crystal_axioms(&fold, &words, Flavor::QPlus);
            t.cases += cases;
            for f in failures {
                t.fail(format!("n={n} m={m}: {f}"));
            }
            for w in &words {
                for i in index_set(Flavor::QPlus, n) {
                    t.check(signature.raise(w, i) == fold.raise(w, i), || {
                        format!("signature e_{i} on {w}")
                    });
                    t.check(signature.lower(w, i) == fold.lower(w, i), || {
                        format!("signature f_{i} on {w}")
                    });
                }
            }
        }
        let b = StandardCrystal::new(n);
        let left = TensorProduct::new(TensorProduct::new(b, b, Flavor::QPlus), b, Flavor::QPlus);
        let right = TensorProduct::new(b, TensorProduct::new(b, b, Flavor::QPlus), Flavor::QPlus);
        let rebracket = |((x, y), z): ((Letter, Letter), Letter)| (x, (y, z));
        for x in b.elements() {
            for y in b.elements() {
                for z in b.elements() {
                    let l = ((x, y), z);
                    for i in index_set(Flavor::QPlus, n) {
                        t.check(
                            left.raise(&l, i).map(rebracket) == right.raise(&rebracket(l), i),
                            || format!("rebracketing breaks e_{i} at {x}{y}{z}"),
                        );
                        t.check(
                            left.lower(&l, i).map(rebracket) == right.lower(&rebracket(l), i),
                            || format!("rebracketing breaks f_{i} at {x}{y}{z}"),
                        );
                    }
                }
            }
        }
    }
}

fn idempotence(t: &mut Tally, config: &CheckConfig) {
    let n = config.n.unwrap_or(3);
    let size = config.max_len.unwrap_or(4);
    for shape in (0..=size).flat_map(StrictPartition::all_of_size) {
        for x in enumerate(Family::DecTabPlus, &shape, n) {
            let p = p_dec(&revrow(&x));
            t.check(p == x, || format!("P_dec(revrow({x})) = {p}"));
        }
    }
}

fn plactic(t: &mut Tally, config: &CheckConfig) {
    let n = config.n.unwrap_or(3);
    let max_m = config.max_len.unwrap_or(4);
    for m in 0..=max_m {
        let fibers = equivalence_classes(m, n, true);
        let mut covered = 0;
        for fiber in &fibers {
            let class = dec_class(&fiber.words[0]);
            covered += class.len();
            let same =
                class.len() == fiber.words.len() && fiber.words.iter().all(|w| class.contains(w));
            t.check(same, || {
                format!(
                    "closure of {} differs from its insertion fiber {}",
                    fiber.words[0], fiber.tableau
                )
            });
        }
        t.check(covered == (2 * n).pow(m as u32), || {
            format!("m={m}: classes cover {covered} words")
        });
    }
    let chain = [
        ("1 6 4 3 1' 2 2 4", "6 1 4 3 1' 2 2 4", 5),
        ("6 1 4 3 1' 2 2 4", "6 4 1 3 1' 2 2 4", 5),
        ("6 4 1 3 1' 2 2 4", "6 4 1 1 3 2' 2 4", 3),
        ("6 4 1 1 3 2' 2 4", "6 4 1 1 2 3 2' 4", 3),
        ("6 4 1 1 2 3 2' 4", "6 4 1 1 2 3 4 2'", 4),
    ];
    for (a, b, family) in chain {
        let fired = crate::plactic::one_step_rewrites(&word(a))
            .into_iter()
            .any(|(x, inst)| x == word(b) && inst.family == family);
        t.check(fired, || {
            format!("relation {family} does not rewrite {a} to {b}")
        });
    }
    let ends = (word(chain[0].0), word(chain[4].1));
    t.check(
        derivation(&ends.0, &ends.1, DEFAULT_NODE_CAP).is_some(),
        || "worked chain not derivable".into(),
    );
    for (lhs, rhs) in sequence_instances() {
        let ok = dec_equivalent(&lhs, &rhs, DEFAULT_NODE_CAP) == Equivalence::Equivalent;
        t.check(ok, || format!("sequence move {lhs} ~ {rhs} not derivable"));
    }
}

fn letters(spec: &[(u32, bool)]) -> Word {
    spec.iter().map(|&(v, p)| Letter::new(v, p)).collect()
}

/// Moves of a letter past an increasing or a weakly decreasing sequence,
/// with all values at most 4.
pub fn sequence_instances() -> Vec<(Word, Word)> {
    let flags = [(false, false), (false, true), (true, false), (true, true)];
    let mut out = Vec::new();
    // x• y_N … y_1 y_0∘ with y_0 < … < y_N
    for mask in 0u32..16 {
        let ys: Vec<u32> = (1..=4).filter(|v| mask & (1 << (v - 1)) != 0).collect();
        if ys.len() < 3 {
            continue;
        }
        let big_n = ys.len() - 1;
        for x in 1..=4 {
            for (pb, pc) in flags {
                let mut lhs = vec![(x, pb)];
                lhs.extend((1..=big_n).rev().map(|k| (ys[k], false)));
                lhs.push((ys[0], pc));
                let mut rhs: Vec<(u32, bool)>;
                if x <= ys[1] {
                    rhs = (2..=big_n).rev().map(|k| (ys[k], false)).collect();
                    rhs.extend([(x, pb), (ys[1], false), (ys[0], pc)]);
                } else if let Some(i) = (2..=big_n).find(|&i| ys[i - 1] < x && x <= ys[i]) {
                    rhs = ((i + 1)..=big_n).rev().map(|k| (ys[k], false)).collect();
                    rhs.push((x, false));
                    rhs.extend((1..i).rev().map(|k| (ys[k], k == 1 && pb)));
                    rhs.extend([(ys[i], false), (ys[0], pc)]);
                } else {
                    continue;
                }
                out.push((letters(&lhs), letters(&rhs)));
            }
        }
    }
    // u• y w_m∘ w_{m-1} … w_1 with w_1 ≥ … ≥ w_m < y and u ≤ y
    for m in 2..=4usize {
        for ws in weakly_decreasing(4, m) {
            let wv = |k: usize| ws[k - 1];
            for y in (wv(m) + 1)..=4 {
                for u in 1..=y {
                    for (pb, pc) in flags {
                        let mut lhs = vec![(u, pb), (y, false), (wv(m), pc)];
                        lhs.extend((1..m).rev().map(|k| (wv(k), false)));
                        let above = u > wv(m);
                        let first = if above { (u, false) } else { (u, pb) };
                        let (head, tail) = if above { (pc, pb) } else { (false, pc) };
                        if wv(1) < y {
                            let mut r = vec![first, (wv(m), head)];
                            r.extend((2..m).rev().map(|k| (wv(k), false)));
                            r.extend([(y, false), (wv(1), tail)]);
                            out.push((letters(&lhs), letters(&r)));
                        }
                        if let Some(j) = (2..m).find(|&j| wv(j) < y && y <= wv(j - 1)) {
                            let mut r = vec![first, (wv(m), head)];
                            r.extend(((j + 1)..m).rev().map(|k| (wv(k), false)));
                            r.push((y, false));
                            r.extend((1..j).rev().map(|k| (wv(k), false)));
                            r.push((wv(j), tail));
                            out.push((letters(&lhs), letters(&r)));
                        }
                        if y <= wv(m - 1) {
                            let mut r = vec![(u, pb), (y, false)];
                            r.extend((1..m).rev().map(|k| (wv(k), false)));
                            r.push((wv(m), pc));
                            out.push((letters(&lhs), letters(&r)));
                        }
                    }
                }
            }
        }
    }
    out
}

fn weakly_decreasing(max: u32, len: usize) -> Vec<Vec<u32>> {
    if len == 0 {
        return vec![vec![]];
    }
    (1..=max)
        .flat_map(|first| {
            weakly_decreasing(first, len - 1)
                .into_iter()
                .map(move |mut rest| {
                    rest.insert(0, first);
                    rest
                })
        })
        .collect()
}

fn rank_law<V: Clone + Eq + std::hash::Hash + Debug>(
    t: &mut Tally,
    g: &CrystalGraph<V>,
    what: &str,
) {
    let rank = match g.rank_function() {
        Ok(r) => r,
        Err(e) => {
            t.fail(format!("{what}: {e}"));
            return;
        }
    };
    for (s, i, d) in g.edges() {
        t.check(rank[d] == rank[s] + 1, || {
            format!("{what}: edge {s} -{i}-> {d} breaks the rank")
        });
    }
    let high: HashSet<usize> = g.highest_vertices(Flavor::QPlus).into_iter().collect();
    let low: HashSet<usize> = g.lowest_vertices(Flavor::QPlus).into_iter().collect();
    for comp in g.components() {
        let max = comp.iter().map(|&v| rank[v]).max().unwrap_or(0);
        for &v in &comp {
            t.check((rank[v] == 0) == high.contains(&v), || {
                format!("{what}: rank zero mismatch at {:?}", g.vertex(v))
            });
            t.check((rank[v] == max) == low.contains(&v), || {
                format!("{what}: rank maximum mismatch at {:?}", g.vertex(v))
            });
        }
    }
}

fn rank(t: &mut Tally, config: &CheckConfig) {
    let size = config.max_len.unwrap_or(5);
    for n in ranks(config, &[2, 3]) {
        for shape in shapes_up_to(size, n).into_iter().filter(|l| !l.is_empty()) {
            let c = DecTabCrystal::new(shape.clone(), n);
            match build_graph(&c, c.elements(), Flavor::QPlus) {
                Ok(g) => rank_law(t, &g, &format!("DecTab+_{n}({shape})")),
                Err(e) => t.fail(format!("DecTab+_{n}({shape}): {e}")),
            }
        }
    }
    let n = config.n.unwrap_or(3);
    let max_m = config.max_len.unwrap_or(4);
    if n >= 2 {
        let crystal = TensorPower::new(n, Flavor::QPlus);
        for m in 1..=max_m {
            match build_graph(&crystal, Word::all(m, n, true), Flavor::QPlus) {
                Ok(g) => rank_law(t, &g, &format!("words n={n} m={m}")),
                Err(e) => t.fail(format!("words n={n} m={m}: {e}")),
            }
        }
    }
}

fn monoid(t: &mut Tally) {
    let boxes: Vec<ShiftedTableau> = StandardCrystal::new(2)
        .elements()
        .into_iter()
        .map(|l| ShiftedTableau::from_rows(vec![vec![l]]).expect("one box"))
        .collect();
    let empty = ShiftedTableau::empty();
    for a in &boxes {
        t.check(monoid_product(a, &empty).as_ref() == Ok(a), || {
            format!("{a} * 1 != {a}")
        });
        t.check(monoid_product(&empty, a).as_ref() == Ok(a), || {
            format!("1 * {a} != {a}")
        });
        for b in &boxes {
            for c in &boxes {
                let left = monoid_product(a, b).and_then(|ab| monoid_product(&ab, c));
                let right = monoid_product(b, c).and_then(|bc| monoid_product(a, &bc));
                let same = matches!((&left, &right), (Ok(x), Ok(y)) if x == y);
                t.check(same, || {
                    format!("({a} * {b}) * {c} = {left:?} but {a} * ({b} * {c}) = {right:?}")
                });
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fast_suites_pass() {
        for name in ["golden-insertion", "insertion-steps", "monoid"] {
            let out = run_suite(name, &CheckConfig::default()).unwrap();
            assert!(out[0].passed, "{:?}", out[0]);
            assert!(out[0].cases > 0);
        }
    }

    #[test]
    fn narrowed_suites_pass() {
        let config = CheckConfig {
            n: Some(2),
            max_len: Some(3),
        };
        for name in ["bijection", "equivariance", "axioms", "plactic", "rank"] {
            let out = run_suite(name, &config).unwrap();
            assert!(out[0].passed, "{:?}", out[0]);
        }
    }

    #[test]
    fn unknown_suite() {
        assert!(run_suite("nope", &CheckConfig::default()).is_err());
    }

    #[test]
    fn axiom_checker_catches_a_broken_crystal() {
        struct Broken;
        impl Crystal for Broken {
            type Elem = u8;
            fn rank(&self) -> usize {
                2
            }
            fn weight(&self, b: &u8) -> Weight {
                Weight(if *b == 0 { vec![1, 0] } else { vec![0, 1] })
            }
            fn raise(&self, _: &u8, _: CrystalIndex) -> Option<u8> {
                None
            }
            fn lower(&self, b: &u8, i: CrystalIndex) -> Option<u8> {
                (*b == 0 && i == CrystalIndex::Std(1)).then_some(1)
            }
        }
        let (_, failures) = check_crystal_axioms(&Broken, &[0, 1], Flavor::Gl);
        assert!(!failures.is_empty());
    }
}
