//! Shifted diagrams and tableaux, the decomposition tableau families, and the
//! crystal on primed decomposition tableaux.
//!
//! Rows are stored bottom row first (row 1 is the longest). Box `j` of row
//! `i` (both 1-based) sits in column `i + j - 1`.

mod canonical;
mod crystal;
mod enumerate;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::words::{Letter, Word};

pub use canonical::{border_strips, hat_lowest_tableau, highest_tableau, lowest_tableau};
pub use crystal::{tableau_e, tableau_f, DecTabCrystal};
pub use enumerate::{enumerate, hook_words, Family};

/// A strictly decreasing sequence of positive integers.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct StrictPartition(Vec<usize>);

impl StrictPartition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        let strict = parts.windows(2).all(|p| p[0] > p[1]);
        if !strict || parts.last() == Some(&0) {
            return Err(Error::NotStrictPartition(parts));
        }
        Ok(StrictPartition(parts))
    }

    pub fn empty() -> Self {
        StrictPartition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of parts `ℓ(λ)`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `|λ|`.
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Boxes `(i, j)` of the shifted diagram, 1-based, row by row.
    pub fn boxes(&self) -> Vec<(usize, usize)> {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (0..len).map(move |k| (r + 1, r + 1 + k)))
            .collect()
    }

    /// All strict partitions of `size`, in decreasing lexicographic order.
    pub fn all_of_size(size: usize) -> Vec<StrictPartition> {
        fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<StrictPartition>) {
            if rest == 0 {
                out.push(StrictPartition(cur.clone()));
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                go(rest - p, p - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(size, size, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for StrictPartition {
    type Err = Error;

    /// Comma-separated parts such as `6,4,2,1`; the empty string is `∅`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.trim().is_empty() {
            return Ok(StrictPartition::empty());
        }
        let parts = s
            .split(',')
            .map(|p| {
                p.trim().parse::<usize>().map_err(|_| Error::Parse {
                    what: "shape",
                    input: s.to_string(),
                    reason: format!("bad part {p:?}"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        StrictPartition::new(parts)
    }
}

/// A filling of a shifted diagram by primed letters.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ShiftedTableau {
    rows: Vec<Vec<Letter>>,
}

impl ShiftedTableau {
    /// Builds a tableau from rows listed bottom first; the row lengths must
    /// form a strict partition.
    pub fn from_rows(rows: Vec<Vec<Letter>>) -> Result<Self> {
        StrictPartition::new(rows.iter().map(Vec::len).collect())?;
        Ok(ShiftedTableau { rows })
    }

    pub fn empty() -> Self {
        ShiftedTableau { rows: Vec::new() }
    }

    /// Parses rows separated by `/`, bottom row first, e.g. `"2 1' 2 / 1'"`.
    /// Each row uses the word syntax.
    pub fn parse_rows(s: &str) -> Result<Self> {
        if s.trim().is_empty() {
            return Ok(ShiftedTableau::empty());
        }
        let rows = s
            .split('/')
            .map(|r| r.trim().parse::<Word>().map(|w| w.0))
            .collect::<Result<Vec<_>>>()?;
        ShiftedTableau::from_rows(rows)
    }

    pub fn shape(&self) -> StrictPartition {
        StrictPartition(self.rows.iter().map(Vec::len).collect())
    }

    pub fn rows(&self) -> &[Vec<Letter>] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<Vec<Letter>> {
        self.rows
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Entry in row `i`, column `j` (1-based, shifted coordinates).
    pub fn get(&self, i: usize, j: usize) -> Option<Letter> {
        let row = self.rows.get(i.checked_sub(1)?)?;
        row.get(j.checked_sub(i)?).copied()
    }

    /// Applies `f` to every entry.
    pub fn map(&self, f: impl Fn(Letter) -> Letter) -> ShiftedTableau {
        ShiftedTableau {
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(|&x| f(x)).collect())
                .collect(),
        }
    }

    pub fn unprime(&self) -> ShiftedTableau {
        self.map(Letter::unprime)
    }

    pub fn primes(&self) -> usize {
        self.rows.iter().flatten().filter(|l| l.is_primed()).count()
    }

    pub fn max_ceil(&self) -> u32 {
        self.rows
            .iter()
            .flatten()
            .map(|l| l.ceil())
            .max()
            .unwrap_or(0)
    }

    /// Entries listed row by row, bottom row first.
    pub fn entries(&self) -> impl Iterator<Item = Letter> + '_ {
        self.rows.iter().flatten().copied()
    }

    pub(crate) fn rows_mut(&mut self) -> &mut Vec<Vec<Letter>> {
        &mut self.rows
    }

    /// French rendering: top row first, row `i` indented `i - 1` cells.
    pub fn to_ascii(&self) -> String {
        let width = self
            .entries()
            .map(|l| l.to_string().len())
            .max()
            .unwrap_or(1);
        let mut lines = Vec::new();
        for (r, row) in self.rows.iter().enumerate().rev() {
            let mut line = " ".repeat((width + 1) * r);
            let cells: Vec<String> = row
                .iter()
                .map(|l| format!("{:>width$}", l.to_string()))
                .collect();
            line.push_str(&cells.join(" "));
            lines.push(line);
        }
        lines.join("\n")
    }
}

impl fmt::Display for ShiftedTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| Word(r.clone()).to_string())
            .collect();
        if rows.is_empty() {
            f.write_str("∅")
        } else {
            f.write_str(&rows.join(" / "))
        }
    }
}

impl fmt::Debug for ShiftedTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

#[derive(Serialize, Deserialize)]
struct TableauJson {
    shape: Vec<usize>,
    rows: Vec<Vec<Letter>>,
}

impl Serialize for ShiftedTableau {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        TableauJson {
            shape: self.shape().0,
            rows: self.rows.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ShiftedTableau {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let json = TableauJson::deserialize(deserializer)?;
        let t = ShiftedTableau::from_rows(json.rows).map_err(serde::de::Error::custom)?;
        if t.shape().0 != json.shape {
            return Err(serde::de::Error::custom(Error::ShapeMismatch {
                shape: json.shape,
            }));
        }
        Ok(t)
    }
}

/// Rows weakly increase left to right, columns weakly increase upward, no
/// primed value repeats in a row and no unprimed value repeats in a column.
/// With `allow_diagonal_primes = false` this is membership in `ShTab`.
pub fn is_semistandard(t: &ShiftedTableau, allow_diagonal_primes: bool) -> bool {
    for (r, row) in t.rows.iter().enumerate() {
        if !allow_diagonal_primes && row.first().is_some_and(|l| l.is_primed()) {
            return false;
        }
        for (j, &x) in row.iter().enumerate() {
            if j > 0 {
                let left = row[j - 1];
                if left > x || (left == x && x.is_primed()) {
                    return false;
                }
            }
            if r > 0 {
                let below = t.rows[r - 1][j + 1];
                if below > x || (below == x && !x.is_primed()) {
                    return false;
                }
            }
        }
    }
    true
}

/// For a hook word returns the 1-based index of its middle element, the last
/// letter of the weakly decreasing part; `None` if `row` is not a hook word.
pub fn hook_middle(row: &[u32]) -> Result<Option<usize>> {
    if row.is_empty() {
        return Err(Error::EmptyRow);
    }
    let mut m = 1;
    while m < row.len() && row[m] <= row[m - 1] {
        m += 1;
    }
    let increasing = row[m - 1..].windows(2).all(|p| p[0] < p[1]);
    Ok(increasing.then_some(m))
}

pub fn is_hook_word(row: &[u32]) -> Result<bool> {
    hook_middle(row).map(|m| m.is_some())
}

fn ceilings(row: &[Letter]) -> Vec<u32> {
    row.iter().map(|l| l.ceil()).collect()
}

/// Whether the pair (row `i`, row `i+1`) avoids every forbidden configuration
/// for consecutive rows of a decomposition tableau.
pub(crate) fn rows_compatible(lower: &[u32], upper: &[u32]) -> bool {
    for k in 1..=upper.len() {
        let u = upper[k - 1];
        if lower[0] <= u {
            return false;
        }
        if u < lower[0] && lower[0] < lower[k] {
            return false;
        }
        for j in 1..k {
            if lower[j] <= u && u <= upper[j - 1] {
                return false;
            }
            if u < lower[j] && lower[j] < lower[k] {
                return false;
            }
        }
    }
    true
}

/// Membership in `DecTab(λ)`: unprimed entries, hook rows, and no forbidden
/// configuration between consecutive rows.
pub fn is_decomposition_tableau(t: &ShiftedTableau) -> bool {
    if t.entries().any(|l| l.is_primed()) {
        return false;
    }
    let rows: Vec<Vec<u32>> = t.rows.iter().map(|r| ceilings(r)).collect();
    if !rows.iter().all(|r| matches!(is_hook_word(r), Ok(true))) {
        return false;
    }
    rows.windows(2).all(|p| rows_compatible(&p[0], &p[1]))
}

/// Membership in `DecTab^+(λ)`: the unprimed tableau is a decomposition
/// tableau and primes occur only at middle elements.
pub fn is_primed_decomposition_tableau(t: &ShiftedTableau) -> bool {
    if !is_decomposition_tableau(&t.unprime()) {
        return false;
    }
    t.rows.iter().all(|row| {
        let m = hook_middle(&ceilings(row)).ok().flatten().unwrap_or(0);
        row.iter()
            .enumerate()
            .all(|(j, l)| !l.is_primed() || j + 1 == m)
    })
}

/// Row reading word: top row first, each row left to right.
pub fn row_reading_word(t: &ShiftedTableau) -> Word {
    t.rows.iter().rev().flatten().copied().collect()
}

/// Reversal of the row reading word.
pub fn revrow(t: &ShiftedTableau) -> Word {
    t.rows
        .iter()
        .flat_map(|r| r.iter().rev())
        .copied()
        .collect()
}

/// The unique tableau of the given shape whose reverse row reading word is `w`.
pub fn from_revrow(shape: &StrictPartition, w: &Word) -> Result<ShiftedTableau> {
    if shape.size() != w.len() {
        return Err(Error::ShapeMismatch {
            shape: shape.parts().to_vec(),
        });
    }
    let mut rows = Vec::with_capacity(shape.len());
    let mut pos = 0;
    for &len in shape.parts() {
        let mut row: Vec<Letter> = w.0[pos..pos + len].to_vec();
        row.reverse();
        rows.push(row);
        pos += len;
    }
    Ok(ShiftedTableau { rows })
}
