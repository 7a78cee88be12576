//! Polynomials with integer coefficients in `x_1, …, x_n`, crystal
//! characters, Schur `P`/`Q` polynomials and expansion in the `Q` basis.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::tableaux::{enumerate, Family, ShiftedTableau, StrictPartition};
use crate::words::Weight;

/// A finite sum `Σ c_α x^α` with nonzero integer coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MonomialPolynomial {
    n: usize,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl MonomialPolynomial {
    pub fn zero(n: usize) -> Self {
        MonomialPolynomial {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(exponent: Vec<u32>, coefficient: impl Into<BigInt>) -> Self {
        let mut p = MonomialPolynomial::zero(exponent.len());
        p.add_term(exponent, coefficient.into());
        p
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, BigInt> {
        &self.terms
    }

    pub fn coefficient(&self, exponent: &[u32]) -> BigInt {
        self.terms.get(exponent).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, exponent: Vec<u32>, coefficient: BigInt) {
        assert_eq!(
            exponent.len(),
            self.n,
            "exponent length must equal the rank"
        );
        let entry = self.terms.entry(exponent).or_default();
        *entry += coefficient;
        if entry.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        let mut out = MonomialPolynomial::zero(self.n);
        if !k.is_zero() {
            for (e, c) in &self.terms {
                out.terms.insert(e.clone(), c * k);
            }
        }
        out
    }

    /// Invariance under swapping `x_i` and `x_{i+1}` for every `i`.
    pub fn is_symmetric(&self) -> bool {
        (0..self.n.saturating_sub(1)).all(|i| {
            self.terms.iter().all(|(e, c)| {
                let mut s = e.clone();
                s.swap(i, i + 1);
                self.terms.get(&s) == Some(c)
            })
        })
    }
}

impl Add for &MonomialPolynomial {
    type Output = MonomialPolynomial;

    fn add(self, other: &MonomialPolynomial) -> MonomialPolynomial {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Neg for &MonomialPolynomial {
    type Output = MonomialPolynomial;

    fn neg(self) -> MonomialPolynomial {
        self.scale(&-BigInt::one())
    }
}

impl Sub for &MonomialPolynomial {
    type Output = MonomialPolynomial;

    fn sub(self, other: &MonomialPolynomial) -> MonomialPolynomial {
        self + &(-other)
    }
}

impl Mul for &MonomialPolynomial {
    type Output = MonomialPolynomial;

    fn mul(self, other: &MonomialPolynomial) -> MonomialPolynomial {
        let mut out = MonomialPolynomial::zero(self.n);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.add_term(exponent_sum(e1, e2), c1 * c2);
            }
        }
        out
    }
}

fn exponent_sum(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

impl fmt::Display for MonomialPolynomial {
    /// Terms from the largest exponent down, e.g. `2*x1^2*x2 + x3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let vars: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &p)| p > 0)
                .map(|(i, &p)| {
                    if p == 1 {
                        format!("x{}", i + 1)
                    } else {
                        format!("x{}^{p}", i + 1)
                    }
                })
                .collect();
            let sign = if c.is_negative() { "-" } else { "+" };
            if k == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let abs = c.abs();
            match (vars.is_empty(), abs.is_one()) {
                (true, _) => write!(f, "{abs}")?,
                (false, true) => write!(f, "{}", vars.join("*"))?,
                (false, false) => write!(f, "{abs}*{}", vars.join("*"))?,
            }
        }
        Ok(())
    }
}

#[derive(Serialize)]
struct JsonTerm<'a> {
    exp: &'a [u32],
    #[serde(serialize_with = "serialize_bigint")]
    coef: &'a BigInt,
}

fn serialize_bigint<S: Serializer>(c: &&BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    match i64::try_from(*c) {
        Ok(v) => s.serialize_i64(v),
        Err(_) => s.collect_str(c),
    }
}

impl Serialize for MonomialPolynomial {
    /// `[{"exp":[2,1,0],"coef":4}, …]`, sorted by exponent vector.
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (exp, coef) in &self.terms {
            seq.serialize_element(&JsonTerm { exp, coef })?;
        }
        seq.end()
    }
}

/// `Σ_b x^{wt(b)}`.
pub fn character<'a>(
    weights: impl IntoIterator<Item = &'a Weight>,
    n: usize,
) -> MonomialPolynomial {
    let mut p = MonomialPolynomial::zero(n);
    for w in weights {
        p.add_term(w.0.clone(), BigInt::one());
    }
    p
}

fn tableau_sum(tableaux: &[ShiftedTableau], n: usize) -> MonomialPolynomial {
    let mut p = MonomialPolynomial::zero(n);
    for t in tableaux {
        let mut e = vec![0; n];
        for l in t.entries() {
            e[l.ceil() as usize - 1] += 1;
        }
        p.add_term(e, BigInt::one());
    }
    p
}

/// `P_λ(x_1, …, x_n)` as a sum over `ShTab_n(λ)`.
pub fn schur_p(shape: &StrictPartition, n: usize) -> MonomialPolynomial {
    tableau_sum(&enumerate(Family::ShTab, shape, n), n)
}

/// `Q_λ(x_1, …, x_n)` as a sum over `ShTab^+_n(λ)`.
pub fn schur_q(shape: &StrictPartition, n: usize) -> MonomialPolynomial {
    tableau_sum(&enumerate(Family::ShTabPlus, shape, n), n)
}

/// Coefficients `c_λ` with `p = Σ c_λ Q_λ(x_1, …, x_n)`.
///
/// Repeatedly takes the lexicographically largest exponent of the residual,
/// which must be a strict partition `λ` carrying a multiple of `2^{ℓ(λ)}`,
/// and subtracts the corresponding multiple of `Q_λ`.
pub fn expand_in_schur_q(p: &MonomialPolynomial) -> Result<BTreeMap<StrictPartition, BigInt>> {
    let n = p.rank();
    let mut residual = p.clone();
    let mut out = BTreeMap::new();
    while let Some((lead, coef)) = residual
        .terms
        .iter()
        .next_back()
        .map(|(e, c)| (e.clone(), c.clone()))
    {
        let parts: Vec<usize> = lead
            .iter()
            .take_while(|&&x| x > 0)
            .map(|&x| x as usize)
            .collect();
        let tail_zero = lead[parts.len()..].iter().all(|&x| x == 0);
        let shape = match StrictPartition::new(parts) {
            Ok(s) if tail_zero => s,
            _ => {
                return Err(Error::NotExpressible {
                    residual: residual.to_string(),
                })
            }
        };
        let leading = BigInt::one() << shape.len();
        if !(&coef % &leading).is_zero() {
            return Err(Error::NotExpressible {
                residual: residual.to_string(),
            });
        }
        let k = coef / leading;
        residual = &residual - &schur_q(&shape, n).scale(&k);
        *out.entry(shape).or_insert_with(BigInt::zero) += k;
    }
    out.retain(|_, c| !c.is_zero());
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(s: &str) -> StrictPartition {
        s.parse().unwrap()
    }

    #[test]
    fn small_schur_q() {
        let q = schur_q(&shape("1"), 2);
        let expected = &MonomialPolynomial::monomial(vec![1, 0], 2)
            + &MonomialPolynomial::monomial(vec![0, 1], 2);
        assert_eq!(q, expected);
        assert!(schur_p(&shape("3,2,1"), 2).is_zero());
    }

    #[test]
    fn q_is_power_of_two_times_p() {
        for size in 0..=5 {
            for l in StrictPartition::all_of_size(size) {
                let k = BigInt::one() << l.len();
                assert_eq!(schur_q(&l, 3), schur_p(&l, 3).scale(&k));
            }
        }
    }

    #[test]
    fn expansion_of_basis_elements() {
        for size in 1..=5 {
            for l in StrictPartition::all_of_size(size) {
                if l.len() > 3 {
                    continue;
                }
                let e = expand_in_schur_q(&schur_q(&l, 3)).unwrap();
                assert_eq!(e, BTreeMap::from([(l, BigInt::one())]));
            }
        }
        assert!(expand_in_schur_q(&MonomialPolynomial::zero(2))
            .unwrap()
            .is_empty());
        assert!(expand_in_schur_q(&MonomialPolynomial::monomial(vec![1, 0], 1)).is_err());
        assert!(expand_in_schur_q(&MonomialPolynomial::monomial(vec![1, 1], 4)).is_err());
    }

    #[test]
    fn arithmetic_and_output() {
        let x = MonomialPolynomial::monomial(vec![1, 0], 1);
        let y = MonomialPolynomial::monomial(vec![0, 1], 1);
        let s = &x + &y;
        let sq = &s * &s;
        assert_eq!(sq.coefficient(&[1, 1]), BigInt::from(2));
        assert_eq!(sq.to_string(), "x1^2 + 2*x1*x2 + x2^2");
        assert!((&s - &s).is_zero());
        assert_eq!(
            serde_json::to_string(&s).unwrap(),
            r#"[{"exp":[0,1],"coef":1},{"exp":[1,0],"coef":1}]"#
        );
        assert!(sq.is_symmetric());
        assert!(!x.is_symmetric());
    }
}
