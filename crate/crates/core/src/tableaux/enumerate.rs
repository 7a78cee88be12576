use std::str::FromStr;

use super::{hook_middle, rows_compatible, ShiftedTableau, StrictPartition};
use crate::error::{Error, Result};
use crate::words::Letter;

/// The four tableau families.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Family {
    /// Semistandard shifted tableaux without primed diagonal entries.
    ShTab,
    /// Semistandard shifted tableaux.
    ShTabPlus,
    DecTab,
    DecTabPlus,
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "shtab" => Ok(Family::ShTab),
            "shtab+" | "shtabplus" => Ok(Family::ShTabPlus),
            "dectab" => Ok(Family::DecTab),
            "dectab+" | "dectabplus" => Ok(Family::DecTabPlus),
            _ => Err(Error::Parse {
                what: "tableau family",
                input: s.to_string(),
                reason: "expected shtab, shtab+, dectab or dectab+".to_string(),
            }),
        }
    }
}

/// All tableaux of the family with shape `λ` and entries at most `n`, in a
/// fixed deterministic order without repetition.
pub fn enumerate(family: Family, shape: &StrictPartition, n: usize) -> Vec<ShiftedTableau> {
    match family {
        Family::ShTab => semistandard(shape, n, false),
        Family::ShTabPlus => semistandard(shape, n, true),
        Family::DecTab => decomposition(shape, n),
        Family::DecTabPlus => decomposition(shape, n)
            .iter()
            .flat_map(prime_middles)
            .collect(),
    }
}

/// All hook words of length `len` with letters in `[n]`.
pub fn hook_words(len: usize, n: usize) -> Vec<Vec<u32>> {
    fn go(len: usize, n: u32, increasing: bool, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for x in 1..=n {
            let next_increasing = match cur.last() {
                None => false,
                Some(&last) if increasing => {
                    if x <= last {
                        continue;
                    }
                    true
                }
                Some(&last) => x > last,
            };
            cur.push(x);
            go(len, n, next_increasing, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if len > 0 {
        go(len, n as u32, false, &mut Vec::new(), &mut out);
    }
    out
}

fn decomposition(shape: &StrictPartition, n: usize) -> Vec<ShiftedTableau> {
    if shape.len() > n {
        return Vec::new();
    }
    let candidates: Vec<Vec<Vec<u32>>> = shape
        .parts()
        .iter()
        .map(|&len| hook_words(len, n))
        .collect();
    let mut out = Vec::new();
    // rows are chosen from the top row downward
    let mut chosen: Vec<&Vec<u32>> = Vec::new();
    fn go<'a>(
        r: usize,
        candidates: &'a [Vec<Vec<u32>>],
        chosen: &mut Vec<&'a Vec<u32>>,
        out: &mut Vec<ShiftedTableau>,
    ) {
        if r == 0 {
            let rows = chosen
                .iter()
                .rev()
                .map(|row| row.iter().map(|&x| Letter::unprimed(x)).collect())
                .collect();
            out.push(ShiftedTableau { rows });
            return;
        }
        for row in &candidates[r - 1] {
            if let Some(upper) = chosen.last() {
                if !rows_compatible(row, upper) {
                    continue;
                }
            }
            chosen.push(row);
            go(r - 1, candidates, chosen, out);
            chosen.pop();
        }
    }
    go(shape.len(), &candidates, &mut chosen, &mut out);
    out.sort();
    out
}

/// The `2^ℓ` tableaux obtained by priming middle elements in a subset of rows.
fn prime_middles(t: &ShiftedTableau) -> Vec<ShiftedTableau> {
    let middles: Vec<usize> = t
        .rows
        .iter()
        .map(|r| {
            let c: Vec<u32> = r.iter().map(|l| l.ceil()).collect();
            hook_middle(&c).ok().flatten().expect("rows are hook words") - 1
        })
        .collect();
    let mut out = Vec::with_capacity(1 << middles.len());
    for mask in 0..(1usize << middles.len()) {
        let mut u = t.clone();
        for (r, &m) in middles.iter().enumerate() {
            if mask >> r & 1 == 1 {
                u.rows[r][m] = u.rows[r][m].with_prime(true);
            }
        }
        out.push(u);
    }
    out.sort();
    out
}

fn semistandard(shape: &StrictPartition, n: usize, diagonal_primes: bool) -> Vec<ShiftedTableau> {
    let boxes = shape.boxes();
    let alphabet: Vec<Letter> = (1..=n as u32)
        .flat_map(|v| [Letter::primed(v), Letter::unprimed(v)])
        .collect();
    let mut rows: Vec<Vec<Letter>> = shape
        .parts()
        .iter()
        .map(|&l| Vec::with_capacity(l))
        .collect();
    let mut out = Vec::new();
    fn go(
        k: usize,
        boxes: &[(usize, usize)],
        alphabet: &[Letter],
        diagonal_primes: bool,
        rows: &mut Vec<Vec<Letter>>,
        out: &mut Vec<ShiftedTableau>,
    ) {
        let Some(&(i, j)) = boxes.get(k) else {
            out.push(ShiftedTableau { rows: rows.clone() });
            return;
        };
        let r = i - 1;
        let idx = j - i;
        for &x in alphabet {
            if idx == 0 && x.is_primed() && !diagonal_primes {
                continue;
            }
            if idx > 0 {
                let left = rows[r][idx - 1];
                if left > x || (left == x && x.is_primed()) {
                    continue;
                }
            }
            if r > 0 {
                let below = rows[r - 1][idx + 1];
                if below > x || (below == x && !x.is_primed()) {
                    continue;
                }
            }
            rows[r].push(x);
            go(k + 1, boxes, alphabet, diagonal_primes, rows, out);
            rows[r].pop();
        }
    }
    go(0, &boxes, &alphabet, diagonal_primes, &mut rows, &mut out);
    out
}
