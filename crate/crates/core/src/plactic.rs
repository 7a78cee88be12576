//! The congruence `~dec` on primed words generated by ten relation
//! families, tested by breadth-first closure.

use std::collections::{BTreeMap, HashSet, VecDeque};
use std::fmt;

use serde::Serialize;

use crate::insertion::p_dec;
use crate::tableaux::{revrow, ShiftedTableau};
use crate::words::{Letter, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Mark {
    Plain,
    Primed,
    Bullet,
    Circ,
}

/// One letter of a relation side: a symbol `a..d` (0..3) with a decoration.
type Slot = (usize, Mark);

struct Family {
    lhs: &'static [Slot],
    rhs: &'static [Slot],
    /// `chain[k]` compares symbols `k` and `k+1`: `<` if true, `≤` if false.
    /// `None` past the symbols in use.
    chain: [Option<bool>; 3],
}

use Mark::*;

const A: usize = 0;
const B: usize = 1;
const C: usize = 2;
const D: usize = 3;

static FAMILIES: [Family; 10] = [
    Family {
        lhs: &[(A, Bullet), (B, Plain)],
        rhs: &[(A, Bullet), (B, Primed)],
        chain: [Some(false), None, None],
    },
    Family {
        lhs: &[(B, Plain), (A, Bullet)],
        rhs: &[(B, Primed), (A, Bullet)],
        chain: [Some(true), None, None],
    },
    Family {
        lhs: &[(A, Bullet), (B, Plain), (D, Plain), (C, Circ)],
        rhs: &[(A, Bullet), (D, Plain), (B, Circ), (C, Plain)],
        chain: [Some(false), Some(false), Some(true)],
    },
    Family {
        lhs: &[(A, Bullet), (C, Plain), (D, Plain), (B, Circ)],
        rhs: &[(A, Bullet), (C, Plain), (B, Circ), (D, Plain)],
        chain: [Some(false), Some(true), Some(false)],
    },
    Family {
        lhs: &[(D, Plain), (A, Bullet), (C, Plain), (B, Circ)],
        rhs: &[(A, Bullet), (D, Plain), (C, Plain), (B, Circ)],
        chain: [Some(false), Some(true), Some(true)],
    },
    Family {
        lhs: &[(B, Plain), (A, Bullet), (D, Plain), (C, Circ)],
        rhs: &[(B, Circ), (D, Plain), (A, Bullet), (C, Plain)],
        chain: [Some(true), Some(false), Some(true)],
    },
    Family {
        lhs: &[(C, Plain), (B, Bullet), (D, Plain), (A, Circ)],
        rhs: &[(C, Bullet), (D, Plain), (B, Plain), (A, Circ)],
        chain: [Some(true), Some(true), Some(false)],
    },
    Family {
        lhs: &[(D, Plain), (B, Bullet), (C, Plain), (A, Circ)],
        rhs: &[(B, Bullet), (D, Plain), (C, Plain), (A, Circ)],
        chain: [Some(true), Some(false), Some(true)],
    },
    Family {
        lhs: &[(B, Bullet), (C, Plain), (D, Plain), (A, Circ)],
        rhs: &[(B, Bullet), (C, Plain), (A, Circ), (D, Plain)],
        chain: [Some(true), Some(false), Some(false)],
    },
    Family {
        lhs: &[(C, Plain), (A, Bullet), (D, Plain), (B, Circ)],
        rhs: &[(C, Circ), (D, Plain), (A, Bullet), (B, Plain)],
        chain: [Some(false), Some(true), Some(false)],
    },
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Forward,
    Backward,
}

/// Which relation fired, where, and with which letters.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct RelationInstance {
    /// 1-based family number.
    pub family: usize,
    pub position: usize,
    pub direction: Direction,
    /// Unprimed values of `a, b, c, d`; `None` for symbols the family does not use.
    pub values: [Option<u32>; 4],
    pub bullet_primed: bool,
    pub circ_primed: Option<bool>,
}

impl fmt::Display for RelationInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let arrow = match self.direction {
            Direction::Forward => "->",
            Direction::Backward => "<-",
        };
        write!(f, "({}){arrow} at {}", self.family, self.position)
    }
}

fn letter_for(value: u32, mark: Mark, bullet: bool, circ: bool) -> Letter {
    match mark {
        Plain => Letter::unprimed(value),
        Primed => Letter::primed(value),
        Bullet => Letter::new(value, bullet),
        Circ => Letter::new(value, circ),
    }
}

/// Binds the symbols of `side` against `window`, checking decorations.
fn bind(side: &[Slot], window: &[Letter]) -> Option<([Option<u32>; 4], bool, Option<bool>)> {
    let mut values = [None; 4];
    let mut bullet = None;
    let mut circ = None;
    for (&(sym, mark), &x) in side.iter().zip(window) {
        let primed = x.is_primed();
        match mark {
            Plain if primed => return None,
            Primed if !primed => return None,
            Bullet => bullet = Some(primed),
            Circ => circ = Some(primed),
            _ => {}
        }
        values[sym] = Some(x.ceil());
    }
    Some((values, bullet?, circ))
}

fn chain_holds(values: &[Option<u32>; 4], chain: &[Option<bool>; 3]) -> bool {
    chain.iter().enumerate().all(|(k, rel)| match rel {
        None => true,
        Some(strict) => {
            let (x, y) = (values[k].unwrap(), values[k + 1].unwrap());
            if *strict {
                x < y
            } else {
                x <= y
            }
        }
    })
}

/// Every word reachable from `w` by one relation applied in either
/// direction to one factor, with the instance that produced it.
pub fn one_step_rewrites(w: &Word) -> Vec<(Word, RelationInstance)> {
    let letters = w.letters();
    let mut out = Vec::new();
    for (fi, fam) in FAMILIES.iter().enumerate() {
        let len = fam.lhs.len();
        if letters.len() < len {
            continue;
        }
        for (direction, from, to) in [
            (Direction::Forward, fam.lhs, fam.rhs),
            (Direction::Backward, fam.rhs, fam.lhs),
        ] {
            for pos in 0..=letters.len() - len {
                let Some((values, bullet, circ)) = bind(from, &letters[pos..pos + len]) else {
                    continue;
                };
                if !chain_holds(&values, &fam.chain) {
                    continue;
                }
                let mut image = letters.to_vec();
                for (k, &(sym, mark)) in to.iter().enumerate() {
                    image[pos + k] =
                        letter_for(values[sym].unwrap(), mark, bullet, circ.unwrap_or(false));
                }
                if image == letters {
                    continue;
                }
                out.push((
                    Word::new(image),
                    RelationInstance {
                        family: fi + 1,
                        position: pos,
                        direction,
                        values,
                        bullet_primed: bullet,
                        circ_primed: circ,
                    },
                ));
            }
        }
    }
    out
}

pub const DEFAULT_NODE_CAP: usize = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Equivalence {
    Equivalent,
    NotEquivalent,
    CapExceeded,
}

/// Breadth-first closure from `v` until `w` is found, the class is
/// exhausted, or more than `node_cap` words have been visited.
pub fn dec_equivalent(v: &Word, w: &Word, node_cap: usize) -> Equivalence {
    if v.len() != w.len() {
        return Equivalence::NotEquivalent;
    }
    if v == w {
        return Equivalence::Equivalent;
    }
    let mut seen: HashSet<Word> = HashSet::from([v.clone()]);
    let mut queue = VecDeque::from([v.clone()]);
    while let Some(x) = queue.pop_front() {
        for (y, _) in one_step_rewrites(&x) {
            if &y == w {
                return Equivalence::Equivalent;
            }
            if seen.insert(y.clone()) {
                if seen.len() > node_cap {
                    return Equivalence::CapExceeded;
                }
                queue.push_back(y);
            }
        }
    }
    Equivalence::NotEquivalent
}

/// The full `~dec` class of `v`, by closure.
pub fn dec_class(v: &Word) -> HashSet<Word> {
    let mut seen: HashSet<Word> = HashSet::from([v.clone()]);
    let mut queue = VecDeque::from([v.clone()]);
    while let Some(x) = queue.pop_front() {
        for (y, _) in one_step_rewrites(&x) {
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen
}

/// A shortest chain of rewrites from `v` to `w`, if one exists within the cap.
pub fn derivation(v: &Word, w: &Word, node_cap: usize) -> Option<Vec<(Word, RelationInstance)>> {
    if v.len() != w.len() {
        return None;
    }
    let mut parent: std::collections::HashMap<Word, (Word, RelationInstance)> = Default::default();
    let mut seen: HashSet<Word> = HashSet::from([v.clone()]);
    let mut queue = VecDeque::from([v.clone()]);
    let mut found = v == w;
    while let Some(x) = queue.pop_front() {
        if found || seen.len() > node_cap {
            break;
        }
        for (y, inst) in one_step_rewrites(&x) {
            if seen.insert(y.clone()) {
                parent.insert(y.clone(), (x.clone(), inst));
                if &y == w {
                    found = true;
                    break;
                }
                queue.push_back(y);
            }
        }
    }
    if !found {
        return None;
    }
    let mut chain = Vec::new();
    let mut cur = w.clone();
    while let Some((prev, inst)) = parent.get(&cur) {
        chain.push((cur.clone(), inst.clone()));
        cur = prev.clone();
    }
    chain.reverse();
    Some(chain)
}

/// `P_dec(v) = P_dec(w)`.
pub fn dec_equivalent_fast(v: &Word, w: &Word) -> bool {
    v.len() == w.len() && p_dec(v) == p_dec(w)
}

#[derive(Clone, Debug, Serialize)]
pub struct PlacticClass {
    pub tableau: ShiftedTableau,
    pub representative: Word,
    pub words: Vec<Word>,
}

/// All words of length `m` over `[n]` (primed letters too if `primed`),
/// grouped by `P_dec`. Classes and their members come out sorted.
pub fn equivalence_classes(m: usize, n: usize, primed: bool) -> Vec<PlacticClass> {
    let mut by_key: BTreeMap<Vec<Vec<u32>>, (ShiftedTableau, Vec<Word>)> = BTreeMap::new();
    for w in Word::all(m, n, primed) {
        let p = p_dec(&w);
        let key: Vec<Vec<u32>> = p
            .rows()
            .iter()
            .map(|r| r.iter().map(|x| x.doubled()).collect())
            .collect();
        by_key
            .entry(key)
            .or_insert_with(|| (p, Vec::new()))
            .1
            .push(w);
    }
    by_key
        .into_values()
        .map(|(tableau, mut words)| {
            words.sort();
            PlacticClass {
                representative: revrow(&tableau),
                tableau,
                words,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn fires(from: &str, to: &str, family: usize) -> bool {
        one_step_rewrites(&w(from))
            .iter()
            .any(|(x, inst)| *x == w(to) && inst.family == family)
    }

    #[test]
    fn worked_chain() {
        let steps = [
            ("1 6 4 3 1' 2 2 4", "6 1 4 3 1' 2 2 4", 5),
            ("6 1 4 3 1' 2 2 4", "6 4 1 3 1' 2 2 4", 5),
            ("6 4 1 3 1' 2 2 4", "6 4 1 1 3 2' 2 4", 3),
            ("6 4 1 1 3 2' 2 4", "6 4 1 1 2 3 2' 4", 3),
            ("6 4 1 1 2 3 2' 4", "6 4 1 1 2 3 4 2'", 4),
        ];
        for (a, b, f) in steps {
            assert!(fires(a, b, f), "{a} -> {b} by {f}");
            assert!(dec_equivalent_fast(&w(a), &w(b)));
        }
    }

    #[test]
    fn expanded_forms_of_family_three() {
        // a <= b <= c < d with (a,b,c,d) = (1,2,2,3)
        assert!(fires("1 2 3 2", "1 3 2 2", 3));
        assert!(fires("1' 2 3 2", "1' 3 2 2", 3));
        assert!(fires("1 2 3 2'", "1 3 2' 2", 3));
        assert!(fires("1' 2 3 2'", "1' 3 2' 2", 3));
        assert!(!fires("1 2' 3 2", "1 3 2 2", 3));
    }

    #[test]
    fn family_one_and_two() {
        assert!(fires("1 2", "1 2'", 1));
        assert!(fires("1' 1", "1' 1'", 1));
        assert!(fires("2 1'", "2' 1'", 2));
        assert!(!fires("1 1'", "1' 1'", 2));
        assert!(one_step_rewrites(&Word::empty()).is_empty());
    }

    #[test]
    fn closure_basics() {
        assert_eq!(
            dec_equivalent(&w("1 2"), &w("1 2"), 10),
            Equivalence::Equivalent
        );
        assert_eq!(
            dec_equivalent(&w("1 2"), &w("2 1"), 100),
            Equivalence::NotEquivalent
        );
        assert_eq!(
            dec_equivalent(&w("1"), &w("1 1"), 100),
            Equivalence::NotEquivalent
        );
        assert_eq!(
            dec_equivalent(
                &w("1 6 4 3 1' 2 2 4"),
                &w("6 4 1 1 2 3 4 2'"),
                DEFAULT_NODE_CAP
            ),
            Equivalence::Equivalent
        );
        assert_eq!(
            dec_equivalent(&w("1 6 4 3 1' 2 2 4"), &w("6 4 1 1 2 3 4 2'"), 1),
            Equivalence::CapExceeded
        );
    }

    #[test]
    fn single_letter_classes() {
        let classes = equivalence_classes(1, 2, true);
        assert_eq!(classes.len(), 4);
        assert!(classes.iter().all(|c| c.words.len() == 1));
        let empty = equivalence_classes(0, 2, true);
        assert_eq!(empty.len(), 1);
        assert_eq!(empty[0].words, vec![Word::empty()]);
    }
}
