use std::collections::BTreeSet;

use super::{ShiftedTableau, StrictPartition};
use crate::error::{Error, Result};
use crate::words::Letter;

/// Iterated first border strips of `SD_λ`. Each strip lists its boxes
/// `(row, column)` (1-based) in the order they are visited from `(1, λ_1)`.
pub fn border_strips(shape: &StrictPartition) -> Vec<Vec<(usize, usize)>> {
    let mut diagram: BTreeSet<(usize, usize)> = shape.boxes().into_iter().collect();
    let mut strips = Vec::new();
    while let Some(&(first_row, _)) = diagram.iter().next() {
        let last_col = diagram
            .iter()
            .filter(|b| b.0 == first_row)
            .map(|b| b.1)
            .max()
            .unwrap_or(first_row);
        let (mut i, mut j) = (first_row, last_col);
        let mut strip = vec![(i, j)];
        while i != j {
            if diagram.contains(&(i + 1, j)) {
                i += 1;
            } else {
                j -= 1;
            }
            strip.push((i, j));
        }
        for b in &strip {
            diagram.remove(b);
        }
        strips.push(strip);
    }
    strips
}

/// The tableau with every entry of the `i`-th border strip equal to `i`.
pub fn highest_tableau(shape: &StrictPartition) -> ShiftedTableau {
    let mut rows: Vec<Vec<Letter>> = shape
        .parts()
        .iter()
        .map(|&len| vec![Letter::unprimed(1); len])
        .collect();
    for (s, strip) in border_strips(shape).iter().enumerate() {
        for &(i, j) in strip {
            rows[i - 1][j - i] = Letter::unprimed(s as u32 + 1);
        }
    }
    ShiftedTableau { rows }
}

fn check_length(shape: &StrictPartition, n: usize) -> Result<()> {
    if shape.len() > n {
        return Err(Error::RankTooSmall {
            rank: n,
            reason: "shape has more rows than the rank",
        });
    }
    Ok(())
}

/// Row `i` filled with `n + 1 - i`.
pub fn lowest_tableau(shape: &StrictPartition, n: usize) -> Result<ShiftedTableau> {
    check_length(shape, n)?;
    let rows = shape
        .parts()
        .iter()
        .enumerate()
        .map(|(r, &len)| vec![Letter::unprimed((n - r) as u32); len])
        .collect();
    Ok(ShiftedTableau { rows })
}

/// [`lowest_tableau`] with the last entry of each row primed.
pub fn hat_lowest_tableau(shape: &StrictPartition, n: usize) -> Result<ShiftedTableau> {
    let mut t = lowest_tableau(shape, n)?;
    for row in t.rows_mut() {
        if let Some(last) = row.last_mut() {
            *last = last.with_prime(true);
        }
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(s: &str) -> StrictPartition {
        s.parse().unwrap()
    }

    #[test]
    fn highest_examples() {
        assert_eq!(
            highest_tableau(&shape("6,4,2,1")),
            ShiftedTableau::parse_rows("4 3 2 2 1 1 / 3 2 1 1 / 2 1 / 1").unwrap()
        );
        assert_eq!(
            highest_tableau(&shape("1")),
            ShiftedTableau::parse_rows("1").unwrap()
        );
        assert_eq!(
            highest_tableau(&shape("2,1")),
            ShiftedTableau::parse_rows("2 1 / 1").unwrap()
        );
        assert_eq!(
            border_strips(&shape("2,1")),
            vec![vec![(1, 2), (2, 2)], vec![(1, 1)]]
        );
        assert_eq!(border_strips(&shape("1")), vec![vec![(1, 1)]]);
    }

    #[test]
    fn lowest_examples() {
        let l = shape("6,4,2,1");
        assert_eq!(
            lowest_tableau(&l, 7).unwrap(),
            ShiftedTableau::parse_rows("7 7 7 7 7 7 / 6 6 6 6 / 5 5 / 4").unwrap()
        );
        assert_eq!(
            hat_lowest_tableau(&l, 7).unwrap(),
            ShiftedTableau::parse_rows("7 7 7 7 7 7' / 6 6 6 6' / 5 5' / 4'").unwrap()
        );
        assert_eq!(
            hat_lowest_tableau(&shape("1"), 1).unwrap().to_string(),
            "1'"
        );
        assert_eq!(
            hat_lowest_tableau(&shape("2,1"), 3).unwrap().to_string(),
            "3 3' / 2'"
        );
        assert!(lowest_tableau(&shape("3,2,1"), 2).is_err());
    }
}
