//! Decomposition insertion of primed letters into primed decomposition
//! tableaux, the tableaux `P_dec(w)` and `Q_dec(w)`, the inverse bijection and
//! the tableau monoid product.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::tableaux::{
    hook_middle, is_decomposition_tableau, is_primed_decomposition_tableau, revrow, ShiftedTableau,
    StrictPartition,
};
use crate::words::{Letter, Word};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

/// What happened in one row during an insertion.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct InsertionStep {
    /// 1-based row index.
    pub row: usize,
    pub incoming: Letter,
    /// The letter carried into the next row; `None` on the final step.
    pub bumped: Option<Letter>,
    pub middle_moved: bool,
    pub halted: Option<Parity>,
}

/// Result of inserting one letter.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Insertion {
    pub tableau: ShiftedTableau,
    /// 1-based `(row, column)` of the new box.
    pub added_box: (usize, usize),
    pub parity: Parity,
    pub trace: Vec<InsertionStep>,
}

/// One row of the unprimed insertion: returns the new row and the bumped
/// letter, or `None` if `a` was appended.
pub fn forward_row(row: &[u32], a: u32) -> (Vec<u32>, Option<u32>) {
    let mut new = row.to_vec();
    new.push(a);
    if row.is_empty() || matches!(hook_middle(&new), Ok(Some(_))) {
        return (new, None);
    }
    new.pop();
    let m = hook_middle(row).ok().flatten().expect("row is a hook word");
    let q = (m..row.len())
        .find(|&q| row[q] >= a)
        .expect("a non-appendable letter is bounded by the increasing part");
    let b = row[q];
    new[q] = a;
    let p = (0..m)
        .find(|&p| row[p] < b)
        .expect("the middle element is below the bumped letter");
    let c = row[p];
    new[p] = b;
    (new, Some(c))
}

fn ceilings(row: &[Letter]) -> Vec<u32> {
    row.iter().map(|l| l.ceil()).collect()
}

fn middle_of(row: &[u32]) -> usize {
    hook_middle(row)
        .ok()
        .flatten()
        .expect("rows of a decomposition tableau are hook words")
}

fn insert_unchecked(x: Letter, t: &ShiftedTableau) -> Insertion {
    let mut rows: Vec<Vec<Letter>> = t.rows().to_vec();
    let mut trace = Vec::new();
    let mut incoming = x;
    let mut r = 0;
    loop {
        let a = incoming.ceil();
        if r == rows.len() {
            rows.push(vec![incoming]);
            trace.push(InsertionStep {
                row: r + 1,
                incoming,
                bumped: None,
                middle_moved: true,
                halted: Some(Parity::Even),
            });
            let tableau = ShiftedTableau::from_rows(rows).expect("new row is shorter");
            return Insertion {
                tableau,
                added_box: (r + 1, r + 1),
                parity: Parity::Even,
                trace,
            };
        }
        let old = ceilings(&rows[r]);
        let m_old = middle_of(&old);
        let m_primed = rows[r][m_old - 1].is_primed();
        let (new, bumped) = forward_row(&old, a);
        let m_new = middle_of(&new);
        let moved = m_new != m_old;
        let mut row: Vec<Letter> = new.iter().map(|&v| Letter::unprimed(v)).collect();
        let (prime_middle, carry_prime, halt_parity) = if moved {
            let parity = if m_primed { Parity::Odd } else { Parity::Even };
            (incoming.is_primed(), m_primed, parity)
        } else {
            let parity = if incoming.is_primed() {
                Parity::Odd
            } else {
                Parity::Even
            };
            (m_primed, incoming.is_primed(), parity)
        };
        if prime_middle {
            row[m_new - 1] = row[m_new - 1].with_prime(true);
        }
        let len = row.len();
        rows[r] = row;
        match bumped {
            None => {
                trace.push(InsertionStep {
                    row: r + 1,
                    incoming,
                    bumped: None,
                    middle_moved: moved,
                    halted: Some(halt_parity),
                });
                let tableau =
                    ShiftedTableau::from_rows(rows).expect("appending keeps the shape strict");
                return Insertion {
                    tableau,
                    added_box: (r + 1, r + len),
                    parity: halt_parity,
                    trace,
                };
            }
            Some(c) => {
                let carried = Letter::new(c, carry_prime);
                trace.push(InsertionStep {
                    row: r + 1,
                    incoming,
                    bumped: Some(carried),
                    middle_moved: moved,
                    halted: None,
                });
                incoming = carried;
                r += 1;
            }
        }
    }
}

/// `x →dec T`.
pub fn dec_insert(x: Letter, t: &ShiftedTableau) -> Result<Insertion> {
    if !is_primed_decomposition_tableau(t) {
        return Err(Error::NotDecompositionTableau(t.to_string()));
    }
    Ok(insert_unchecked(x, t))
}

/// `(P_dec(w), Q_dec(w))` together with each single-letter insertion, in the
/// order performed (rightmost letter first).
pub fn insert_word_traced(w: &Word) -> (ShiftedTableau, ShiftedTableau, Vec<Insertion>) {
    let mut p = ShiftedTableau::empty();
    let mut q_rows: Vec<Vec<Letter>> = Vec::new();
    let mut steps = Vec::with_capacity(w.len());
    for (k, &x) in w.iter().rev().enumerate() {
        let ins = insert_unchecked(x, &p);
        let (i, _) = ins.added_box;
        if q_rows.len() < i {
            q_rows.push(Vec::new());
        }
        q_rows[i - 1].push(Letter::new(k as u32 + 1, ins.parity == Parity::Odd));
        p = ins.tableau.clone();
        steps.push(ins);
    }
    let q = ShiftedTableau::from_rows(q_rows).expect("recording tableau has the shape of P");
    (p, q, steps)
}

/// `(P_dec(w), Q_dec(w))`.
pub fn insert_word(w: &Word) -> (ShiftedTableau, ShiftedTableau) {
    let (p, q, _) = insert_word_traced(w);
    (p, q)
}

/// `P_dec(w)`.
pub fn p_dec(w: &Word) -> ShiftedTableau {
    w.iter().rev().fold(ShiftedTableau::empty(), |t, &x| {
        insert_unchecked(x, &t).tableau
    })
}

/// Standard shifted tableau (rows and columns strictly increasing, each of
/// `1..=m` once up to prime) with no primed diagonal entry.
pub fn is_recording_tableau(q: &ShiftedTableau) -> bool {
    let m = q.size();
    let mut seen = vec![false; m];
    for l in q.entries() {
        let c = l.ceil() as usize;
        if c == 0 || c > m || seen[c - 1] {
            return false;
        }
        seen[c - 1] = true;
    }
    let rows = q.rows();
    for (r, row) in rows.iter().enumerate() {
        if row[0].is_primed() {
            return false;
        }
        for (j, l) in row.iter().enumerate() {
            if j > 0 && row[j - 1].ceil() >= l.ceil() {
                return false;
            }
            if r > 0 && rows[r - 1][j + 1].ceil() >= l.ceil() {
                return false;
            }
        }
    }
    true
}

/// All recording tableaux of shape `λ`.
pub fn enumerate_recording_tableaux(shape: &StrictPartition) -> Vec<ShiftedTableau> {
    let m = shape.size();
    let mut rows: Vec<Vec<u32>> = shape.parts().iter().map(|_| Vec::new()).collect();
    let mut standard = Vec::new();
    // place 1..=m one at a time at an outer corner of the growing shape
    fn go(k: u32, m: u32, shape: &[usize], rows: &mut Vec<Vec<u32>>, out: &mut Vec<Vec<Vec<u32>>>) {
        if k > m {
            out.push(rows.clone());
            return;
        }
        for r in 0..shape.len() {
            let len = rows[r].len();
            if len == shape[r] {
                continue;
            }
            let below_ok = r == 0 || rows[r - 1].len() > len + 1;
            if below_ok {
                rows[r].push(k);
                go(k + 1, m, shape, rows, out);
                rows[r].pop();
            }
        }
    }
    go(1, m as u32, shape.parts(), &mut rows, &mut standard);
    let mut out = Vec::new();
    for s in standard {
        let off_diagonal: Vec<(usize, usize)> = s
            .iter()
            .enumerate()
            .flat_map(|(r, row)| (1..row.len()).map(move |j| (r, j)))
            .collect();
        for mask in 0..(1usize << off_diagonal.len()) {
            let mut rows: Vec<Vec<Letter>> = s
                .iter()
                .map(|row| row.iter().map(|&v| Letter::unprimed(v)).collect())
                .collect();
            for (bit, &(r, j)) in off_diagonal.iter().enumerate() {
                if mask >> bit & 1 == 1 {
                    rows[r][j] = rows[r][j].with_prime(true);
                }
            }
            out.push(ShiftedTableau::from_rows(rows).expect("standard filling of a strict shape"));
        }
    }
    out.sort();
    out
}

/// All `(R, a)` with `forward_row(R, a) = (new, bumped)` and `R` a hook word.
fn reverse_row(new: &[u32], bumped: Option<u32>) -> Vec<(Vec<u32>, u32)> {
    let mut out = Vec::new();
    match bumped {
        None => {
            let (&a, rest) = new.split_last().expect("nonempty row");
            let rest = rest.to_vec();
            if forward_row(&rest, a) == (new.to_vec(), None) {
                out.push((rest, a));
            }
        }
        Some(c) => {
            for q in 1..new.len() {
                for p in 0..q {
                    let b = new[p];
                    let a = new[q];
                    if c >= b || a > b {
                        continue;
                    }
                    let mut old = new.to_vec();
                    old[p] = c;
                    old[q] = b;
                    if !matches!(hook_middle(&old), Ok(Some(_))) {
                        continue;
                    }
                    if forward_row(&old, a) == (new.to_vec(), Some(c)) {
                        out.push((old, a));
                    }
                }
            }
        }
    }
    out
}

/// Undoes one unprimed insertion that added a box at the end of row `row`
/// (0-based). Returns every `(T, x)` with `x →dec T` equal to `t`.
fn reverse_insertion(t: &[Vec<u32>], row: usize) -> Vec<(Vec<Vec<u32>>, u32)> {
    fn go(
        rows: &mut Vec<Vec<u32>>,
        r: usize,
        carried: Option<u32>,
        out: &mut Vec<(Vec<Vec<u32>>, u32)>,
    ) {
        let current = rows[r].clone();
        for (old, a) in reverse_row(&current, carried) {
            rows[r] = old;
            if r == 0 {
                out.push((rows.clone(), a));
            } else {
                go(rows, r - 1, Some(a), out);
            }
        }
        rows[r] = current;
    }
    let mut rows = t.to_vec();
    let mut out = Vec::new();
    if rows[row].len() == 1 && row + 1 == rows.len() {
        // the new box started its own row
        let a = rows.pop().expect("row exists")[0];
        if row == 0 {
            return vec![(rows, a)];
        }
        go(&mut rows, row - 1, Some(a), &mut out);
    } else {
        go(&mut rows, row, None, &mut out);
    }
    out.retain(|(rows, _)| rows.iter().all(|r| !r.is_empty()));
    for (rows, _) in out.iter_mut() {
        while rows.last().is_some_and(|r| r.is_empty()) {
            rows.pop();
        }
    }
    out
}

fn unprimed_tableau(rows: &[Vec<u32>]) -> Option<ShiftedTableau> {
    ShiftedTableau::from_rows(
        rows.iter()
            .map(|r| r.iter().map(|&v| Letter::unprimed(v)).collect())
            .collect(),
    )
    .ok()
}

/// Recovers `unprime(w)` from unprimed `(P, Q)`.
fn inverse_unprimed(p: &ShiftedTableau, q: &ShiftedTableau) -> Result<Word> {
    let m = q.size();
    let mut position = vec![(0, 0); m];
    for (r, row) in q.rows().iter().enumerate() {
        for (j, l) in row.iter().enumerate() {
            position[l.ceil() as usize - 1] = (r, j);
        }
    }
    let mut rows: Vec<Vec<u32>> = p.rows().iter().map(|r| ceilings(r)).collect();
    let mut letters = Vec::with_capacity(m);
    for k in (0..m).rev() {
        let (r, j) = position[k];
        if rows.get(r).map(Vec::len) != Some(j + 1) {
            return Err(Error::NoPreimage(format!(
                "box of step {} is not a corner",
                k + 1
            )));
        }
        let mut found = Vec::new();
        for (prev, x) in reverse_insertion(&rows, r) {
            let Some(prev_t) = unprimed_tableau(&prev) else {
                continue;
            };
            if !is_decomposition_tableau(&prev_t) {
                continue;
            }
            let redo = insert_unchecked(Letter::unprimed(x), &prev_t);
            if redo.added_box.0 == r + 1 && unprimed_tableau(&rows).as_ref() == Some(&redo.tableau)
            {
                found.push((prev, x));
            }
        }
        found.sort();
        found.dedup();
        match found.len() {
            1 => {
                let (prev, x) = found.pop().expect("one solution");
                rows = prev;
                letters.push(Letter::unprimed(x));
            }
            0 => {
                return Err(Error::NoPreimage(format!(
                    "no reverse bump at step {}",
                    k + 1
                )))
            }
            _ => {
                return Err(Error::Invariant(format!(
                    "reverse bump at step {} is not unique",
                    k + 1
                )))
            }
        }
    }
    // letters were recovered from the last insertion, i.e. left to right
    Ok(Word(letters))
}

fn pattern_bits(p: &ShiftedTableau, q: &ShiftedTableau) -> Vec<bool> {
    p.entries()
        .chain(q.entries())
        .map(|l| l.is_primed())
        .collect()
}

/// Solves `M x = t` over `F_2` where `columns[k]` is column `k` of `M`.
fn solve_f2(columns: &[Vec<bool>], target: &[bool]) -> Option<Vec<bool>> {
    let rows = target.len();
    let cols = columns.len();
    let mut a: Vec<Vec<bool>> = (0..rows)
        .map(|r| {
            let mut row: Vec<bool> = columns.iter().map(|c| c[r]).collect();
            row.push(target[r]);
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(pr) = (r..rows).find(|&i| a[i][c]) else {
            continue;
        };
        a.swap(r, pr);
        for i in 0..rows {
            if i != r && a[i][c] {
                let pivot_row = a[r].clone();
                for (x, y) in a[i].iter_mut().zip(pivot_row) {
                    *x ^= y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    if a[r..].iter().any(|row| row[cols]) {
        return None;
    }
    let mut x = vec![false; cols];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = a[i][cols];
    }
    Some(x)
}

/// The unique word `w` with `(P_dec(w), Q_dec(w)) = (P, Q)`.
pub fn inverse_insertion(p: &ShiftedTableau, q: &ShiftedTableau) -> Result<Word> {
    if p.shape() != q.shape() {
        return Err(Error::NoPreimage(format!(
            "shapes {} and {} differ",
            p.shape(),
            q.shape()
        )));
    }
    if !is_primed_decomposition_tableau(p) {
        return Err(Error::NotDecompositionTableau(p.to_string()));
    }
    if !is_recording_tableau(q) {
        return Err(Error::NotRecordingTableau(q.to_string()));
    }
    let v = inverse_unprimed(&p.unprime(), &q.unprime())?;
    let (p0, q0) = insert_word(&v);
    if p0 != p.unprime() || q0 != q.unprime() {
        return Err(Error::NoPreimage(
            "unprimed reconstruction failed".to_string(),
        ));
    }
    let base = pattern_bits(&p0, &q0);
    let columns: Vec<Vec<bool>> = (0..v.len())
        .map(|k| {
            let mut u = v.clone();
            u.0[k] = u.0[k].with_prime(true);
            let (pk, qk) = insert_word(&u);
            pattern_bits(&pk, &qk)
                .iter()
                .zip(&base)
                .map(|(x, y)| x ^ y)
                .collect()
        })
        .collect();
    let target: Vec<bool> = pattern_bits(p, q)
        .iter()
        .zip(&base)
        .map(|(x, y)| x ^ y)
        .collect();
    let primes = solve_f2(&columns, &target)
        .ok_or_else(|| Error::NoPreimage("prime pattern is not in the image".to_string()))?;
    let w: Word = v
        .iter()
        .zip(primes)
        .map(|(l, primed)| l.with_prime(primed))
        .collect();
    if insert_word(&w) != (p.clone(), q.clone()) {
        return Err(Error::NoPreimage("prime reconstruction failed".to_string()));
    }
    Ok(w)
}

/// `T ∗ U := P_dec(revrow(T) revrow(U))`.
pub fn monoid_product(t: &ShiftedTableau, u: &ShiftedTableau) -> Result<ShiftedTableau> {
    for x in [t, u] {
        if !is_primed_decomposition_tableau(x) {
            return Err(Error::NotDecompositionTableau(x.to_string()));
        }
    }
    Ok(p_dec(&revrow(t).concat(&revrow(u))))
}
