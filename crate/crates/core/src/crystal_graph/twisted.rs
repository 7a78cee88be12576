//! String reversals `σ_i` and the operators built from them by conjugation.
//! Every product of operators is read as composition, rightmost first.

use crate::error::{Error, Result};
use crate::words::{Crystal, CrystalIndex, Flavor};

/// `σ_i`: reverses the `i`-string through `b`.
pub fn sigma<C: Crystal>(c: &C, b: &C::Elem, i: usize) -> C::Elem {
    let idx = CrystalIndex::Std(i);
    let eps = c.epsilon(b, idx);
    let phi = c.phi(b, idx);
    let mut cur = b.clone();
    if phi > eps {
        for _ in 0..phi - eps {
            cur = c.lower(&cur, idx).expect("string length was measured");
        }
    } else {
        for _ in 0..eps - phi {
            cur = c.raise(&cur, idx).expect("string length was measured");
        }
    }
    cur
}

/// Applies `σ_{s_1}`, then `σ_{s_2}`, and so on.
pub fn apply_sigmas<C: Crystal>(c: &C, b: &C::Elem, order: &[usize]) -> C::Elem {
    order.iter().fold(b.clone(), |cur, &i| sigma(c, &cur, i))
}

/// The `σ` indices applied before `e_1̄` in `e_ī`, in application order.
fn bar_conjugation(i: usize) -> Vec<usize> {
    (2..=i).rev().flat_map(|k| [k - 1, k]).collect()
}

fn twisted_bar<C: Crystal>(c: &C, b: &C::Elem, i: usize, raise: bool) -> Option<C::Elem> {
    let pre = bar_conjugation(i);
    let x = apply_sigmas(c, b, &pre);
    let y = if raise {
        c.raise(&x, CrystalIndex::Bar1)
    } else {
        c.lower(&x, CrystalIndex::Bar1)
    }?;
    let post: Vec<usize> = pre.into_iter().rev().collect();
    Some(apply_sigmas(c, &y, &post))
}

/// `e_ī` for `1 ≤ i ≤ n-1`; `i = 1` is `e_1̄` itself.
pub fn twisted_e_bar<C: Crystal>(c: &C, b: &C::Elem, i: usize) -> Option<C::Elem> {
    twisted_bar(c, b, i, true)
}

/// `f_ī` for `1 ≤ i ≤ n-1`.
pub fn twisted_f_bar<C: Crystal>(c: &C, b: &C::Elem, i: usize) -> Option<C::Elem> {
    twisted_bar(c, b, i, false)
}

/// Factors of `σ_{w_0} = (σ_1)(σ_2σ_1)⋯(σ_{n-1}⋯σ_1)` as written.
fn w0_factors(n: usize) -> Vec<usize> {
    (1..n).flat_map(|k| (1..=k).rev()).collect()
}

pub fn sigma_w0<C: Crystal>(c: &C, b: &C::Elem) -> C::Elem {
    let mut order = w0_factors(c.rank());
    order.reverse();
    apply_sigmas(c, b, &order)
}

pub fn sigma_w0_inverse<C: Crystal>(c: &C, b: &C::Elem) -> C::Elem {
    apply_sigmas(c, b, &w0_factors(c.rank()))
}

fn check_prime_index(i: usize, n: usize) -> Result<()> {
    if i == 0 || i >= n {
        return Err(Error::InvalidIndex {
            index: CrystalIndex::Std(i),
            rank: n,
        });
    }
    Ok(())
}

/// `e_{ī'} = σ_{w_0} f_{\overline{n-i}} σ_{w_0}^{-1}` for `i ∈ [n-1]`.
pub fn e_bar_prime<C: Crystal>(c: &C, b: &C::Elem, i: usize) -> Result<Option<C::Elem>> {
    let n = c.rank();
    check_prime_index(i, n)?;
    let x = sigma_w0_inverse(c, b);
    Ok(twisted_f_bar(c, &x, n - i).map(|y| sigma_w0(c, &y)))
}

/// `f_{ī'} = σ_{w_0} e_{\overline{n-i}} σ_{w_0}^{-1}` for `i ∈ [n-1]`.
pub fn f_bar_prime<C: Crystal>(c: &C, b: &C::Elem, i: usize) -> Result<Option<C::Elem>> {
    let n = c.rank();
    check_prime_index(i, n)?;
    let x = sigma_w0_inverse(c, b);
    Ok(twisted_e_bar(c, &x, n - i).map(|y| sigma_w0(c, &y)))
}

fn bracket<C: Crystal>(c: &C, b: &C::Elem, i: usize, raise: bool) -> Option<C::Elem> {
    let pre: Vec<usize> = (1..i).rev().collect();
    let x = apply_sigmas(c, b, &pre);
    let y = if raise {
        c.raise(&x, CrystalIndex::Zero)
    } else {
        c.lower(&x, CrystalIndex::Zero)
    }?;
    let post: Vec<usize> = (1..i).collect();
    Some(apply_sigmas(c, &y, &post))
}

/// `e_0^{[i]} = σ_{i-1}⋯σ_1 e_0 σ_1⋯σ_{i-1}` for `i ∈ [n]`.
pub fn e0_bracket<C: Crystal>(c: &C, b: &C::Elem, i: usize) -> Option<C::Elem> {
    bracket(c, b, i, true)
}

/// `f_0^{[i]}` for `i ∈ [n]`.
pub fn f0_bracket<C: Crystal>(c: &C, b: &C::Elem, i: usize) -> Option<C::Elem> {
    bracket(c, b, i, false)
}

/// Highest weight in the sense of the flavor.
pub fn is_highest<C: Crystal>(c: &C, b: &C::Elem, flavor: Flavor) -> bool {
    let n = c.rank();
    if (1..n).any(|i| c.raise(b, CrystalIndex::Std(i)).is_some()) {
        return false;
    }
    if flavor == Flavor::Gl {
        return true;
    }
    if (1..n).any(|i| twisted_e_bar(c, b, i).is_some()) {
        return false;
    }
    flavor == Flavor::Q || (1..=n).all(|i| e0_bracket(c, b, i).is_none())
}

/// Lowest weight in the sense of the flavor.
pub fn is_lowest<C: Crystal>(c: &C, b: &C::Elem, flavor: Flavor) -> bool {
    let n = c.rank();
    if (1..n).any(|i| c.lower(b, CrystalIndex::Std(i)).is_some()) {
        return false;
    }
    if flavor == Flavor::Gl {
        return true;
    }
    if (1..n).any(|i| matches!(f_bar_prime(c, b, i), Ok(Some(_)))) {
        return false;
    }
    flavor == Flavor::Q || (1..=n).all(|i| f0_bracket(c, b, i).is_none())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::{Letter, StandardCrystal};

    #[test]
    fn conjugation_orders() {
        assert_eq!(bar_conjugation(1), Vec::<usize>::new());
        assert_eq!(bar_conjugation(2), vec![1, 2]);
        assert_eq!(bar_conjugation(3), vec![2, 3, 1, 2]);
        assert_eq!(w0_factors(2), vec![1]);
        assert_eq!(w0_factors(4), vec![1, 2, 1, 3, 2, 1]);
    }

    #[test]
    fn w0_on_single_letters() {
        let b = StandardCrystal::new(2);
        assert_eq!(sigma_w0(&b, &Letter::unprimed(1)), Letter::unprimed(2));
        assert_eq!(sigma_w0(&b, &Letter::primed(2)), Letter::primed(1));
        for x in StandardCrystal::new(4).elements() {
            let c = StandardCrystal::new(4);
            assert_eq!(sigma_w0(&c, &sigma_w0_inverse(&c, &x)), x);
        }
    }

    #[test]
    fn bracket_one_is_plain_zero() {
        let b = StandardCrystal::new(3);
        for x in b.elements() {
            assert_eq!(e0_bracket(&b, &x, 1), b.raise(&x, CrystalIndex::Zero));
            assert_eq!(f0_bracket(&b, &x, 1), b.lower(&x, CrystalIndex::Zero));
        }
    }

    #[test]
    fn prime_index_range() {
        let b = StandardCrystal::new(3);
        assert!(e_bar_prime(&b, &Letter::unprimed(1), 3).is_err());
        assert!(e_bar_prime(&b, &Letter::unprimed(1), 2).is_ok());
    }
}
