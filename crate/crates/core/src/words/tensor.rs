use std::fmt::Debug;
use std::hash::Hash;
use std::str::FromStr;

use super::{lower_word, raise_word, CrystalIndex, Letter, Weight, Word};
use crate::error::{Error, Result};

/// Which family of operators (and which tensor rule) is in use.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Flavor {
    Gl,
    Q,
    QPlus,
}

impl FromStr for Flavor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "gl" => Ok(Flavor::Gl),
            "q" => Ok(Flavor::Q),
            "qplus" | "q+" | "q_plus" => Ok(Flavor::QPlus),
            _ => Err(Error::Parse {
                what: "flavor",
                input: s.to_string(),
                reason: "expected gl, q or qplus".to_string(),
            }),
        }
    }
}

/// Operator labels for a flavor in rank `n`, in the order `1̄, 0, 1, …, n-1`.
pub fn index_set(flavor: Flavor, n: usize) -> Vec<CrystalIndex> {
    let mut out = Vec::new();
    if n >= 2 {
        if flavor != Flavor::Gl {
            out.push(CrystalIndex::Bar1);
        }
        if flavor == Flavor::QPlus {
            out.push(CrystalIndex::Zero);
        }
    }
    out.extend((1..n).map(CrystalIndex::Std));
    out
}

/// An abstract crystal: a weight map and partial raising/lowering operators.
/// `None` plays the role of the auxiliary element 0.
pub trait Crystal {
    type Elem: Clone + Eq + Hash + Debug;

    fn rank(&self) -> usize;
    fn weight(&self, b: &Self::Elem) -> Weight;
    fn raise(&self, b: &Self::Elem, i: CrystalIndex) -> Option<Self::Elem>;
    fn lower(&self, b: &Self::Elem, i: CrystalIndex) -> Option<Self::Elem>;

    fn epsilon(&self, b: &Self::Elem, i: CrystalIndex) -> usize {
        let mut k = 0;
        let mut cur = b.clone();
        while let Some(next) = self.raise(&cur, i) {
            cur = next;
            k += 1;
        }
        k
    }

    fn phi(&self, b: &Self::Elem, i: CrystalIndex) -> usize {
        let mut k = 0;
        let mut cur = b.clone();
        while let Some(next) = self.lower(&cur, i) {
            cur = next;
            k += 1;
        }
        k
    }
}

impl<C: Crystal + ?Sized> Crystal for &C {
    type Elem = C::Elem;

    fn rank(&self) -> usize {
        (**self).rank()
    }
    fn weight(&self, b: &Self::Elem) -> Weight {
        (**self).weight(b)
    }
    fn raise(&self, b: &Self::Elem, i: CrystalIndex) -> Option<Self::Elem> {
        (**self).raise(b, i)
    }
    fn lower(&self, b: &Self::Elem, i: CrystalIndex) -> Option<Self::Elem> {
        (**self).lower(b, i)
    }
    fn epsilon(&self, b: &Self::Elem, i: CrystalIndex) -> usize {
        (**self).epsilon(b, i)
    }
    fn phi(&self, b: &Self::Elem, i: CrystalIndex) -> usize {
        (**self).phi(b, i)
    }
}

fn is_zero_both<C: Crystal>(crystal: &C, b: &C::Elem, i: CrystalIndex) -> bool {
    crystal.raise(b, i).is_none() && crystal.lower(b, i).is_none()
}

/// `e_i(b ⊗ c)` in the anti-Kashiwara convention.
pub fn tensor_raise<L: Crystal, R: Crystal>(
    left: &L,
    right: &R,
    b: &L::Elem,
    c: &R::Elem,
    i: CrystalIndex,
    flavor: Flavor,
) -> Option<(L::Elem, R::Elem)> {
    use CrystalIndex::*;
    match i {
        Std(_) => {
            if left.epsilon(b, i) <= right.phi(c, i) {
                Some((b.clone(), right.raise(c, i)?))
            } else {
                Some((left.raise(b, i)?, c.clone()))
            }
        }
        Zero => {
            if is_zero_both(left, b, Zero) {
                Some((b.clone(), right.raise(c, Zero)?))
            } else {
                Some((left.raise(b, Zero)?, c.clone()))
            }
        }
        Bar1 => {
            if is_zero_both(left, b, Bar1) {
                return Some((b.clone(), right.raise(c, Bar1)?));
            }
            if flavor == Flavor::QPlus && is_zero_both(left, b, Zero) {
                let eb = left.raise(b, Bar1);
                if let (Some(x), Some(y)) = (
                    eb.as_ref().and_then(|x| left.lower(x, Zero)),
                    right.raise(c, Zero),
                ) {
                    return Some((x, y));
                }
                if let (Some(x), Some(y)) = (
                    eb.as_ref().and_then(|x| left.raise(x, Zero)),
                    right.lower(c, Zero),
                ) {
                    return Some((x, y));
                }
            }
            Some((left.raise(b, Bar1)?, c.clone()))
        }
    }
}

/// `f_i(b ⊗ c)` in the anti-Kashiwara convention.
pub fn tensor_lower<L: Crystal, R: Crystal>(
    left: &L,
    right: &R,
    b: &L::Elem,
    c: &R::Elem,
    i: CrystalIndex,
    flavor: Flavor,
) -> Option<(L::Elem, R::Elem)> {
    use CrystalIndex::*;
    match i {
        Std(_) => {
            if left.epsilon(b, i) < right.phi(c, i) {
                Some((b.clone(), right.lower(c, i)?))
            } else {
                Some((left.lower(b, i)?, c.clone()))
            }
        }
        Zero => {
            if is_zero_both(left, b, Zero) {
                Some((b.clone(), right.lower(c, Zero)?))
            } else {
                Some((left.lower(b, Zero)?, c.clone()))
            }
        }
        Bar1 => {
            if is_zero_both(left, b, Bar1) {
                return Some((b.clone(), right.lower(c, Bar1)?));
            }
            if flavor == Flavor::QPlus {
                let via_e0 = left.raise(b, Zero).and_then(|x| left.lower(&x, Bar1));
                if let Some(x) = via_e0.filter(|x| is_zero_both(left, x, Zero)) {
                    if let Some(y) = right.lower(c, Zero) {
                        return Some((x, y));
                    }
                }
                let via_f0 = left.lower(b, Zero).and_then(|x| left.lower(&x, Bar1));
                if let Some(x) = via_f0.filter(|x| is_zero_both(left, x, Zero)) {
                    if let Some(y) = right.raise(c, Zero) {
                        return Some((x, y));
                    }
                }
            }
            Some((left.lower(b, Bar1)?, c.clone()))
        }
    }
}

/// The standard crystal `B+_n` on the letters `1' < 1 < ⋯ < n' < n`.
#[derive(Clone, Copy, Debug)]
pub struct StandardCrystal {
    pub n: usize,
}

impl StandardCrystal {
    pub fn new(n: usize) -> Self {
        StandardCrystal { n }
    }

    pub fn elements(&self) -> Vec<Letter> {
        (1..=self.n as u32)
            .flat_map(|v| [Letter::primed(v), Letter::unprimed(v)])
            .collect()
    }
}

impl Crystal for StandardCrystal {
    type Elem = Letter;

    fn rank(&self) -> usize {
        self.n
    }

    fn weight(&self, b: &Letter) -> Weight {
        let mut wt = vec![0; self.n];
        wt[b.ceil() as usize - 1] = 1;
        Weight(wt)
    }

    fn raise(&self, b: &Letter, i: CrystalIndex) -> Option<Letter> {
        match i {
            CrystalIndex::Std(k) => (b.ceil() as usize == k + 1).then(|| b.shift(-1)).flatten(),
            CrystalIndex::Bar1 => (b.ceil() == 2).then(|| b.shift(-1)).flatten(),
            CrystalIndex::Zero => (*b == Letter::primed(1)).then(|| Letter::unprimed(1)),
        }
    }

    fn lower(&self, b: &Letter, i: CrystalIndex) -> Option<Letter> {
        match i {
            CrystalIndex::Std(k) => (b.ceil() as usize == k && k < self.n)
                .then(|| b.shift(1))
                .flatten(),
            CrystalIndex::Bar1 => (b.ceil() == 1 && self.n >= 2).then(|| b.shift(1)).flatten(),
            CrystalIndex::Zero => (*b == Letter::unprimed(1)).then(|| Letter::primed(1)),
        }
    }
}

/// `(B+_n)^{⊗m}` on words, with operators evaluated by folding the tensor
/// rule of the chosen flavor over the letters (`w_1 ⊗ (w_2 ⊗ (⋯))`).
#[derive(Clone, Copy, Debug)]
pub struct TensorPower {
    pub n: usize,
    pub flavor: Flavor,
}

impl TensorPower {
    pub fn new(n: usize, flavor: Flavor) -> Self {
        TensorPower { n, flavor }
    }

    fn fold(&self, letters: &[Letter], i: CrystalIndex, raise: bool) -> Option<Vec<Letter>> {
        let std = StandardCrystal::new(self.n);
        match letters {
            [] => None,
            [x] => {
                let y = if raise {
                    std.raise(x, i)
                } else {
                    std.lower(x, i)
                }?;
                Some(vec![y])
            }
            [first, rest @ ..] => {
                let tail = Word(rest.to_vec());
                let (x, w) = if raise {
                    tensor_raise(&std, self, first, &tail, i, self.flavor)
                } else {
                    tensor_lower(&std, self, first, &tail, i, self.flavor)
                }?;
                let mut out = vec![x];
                out.extend(w.0);
                Some(out)
            }
        }
    }
}

impl Crystal for TensorPower {
    type Elem = Word;

    fn rank(&self) -> usize {
        self.n
    }

    fn weight(&self, b: &Word) -> Weight {
        let mut wt = vec![0; self.n];
        for l in b.iter() {
            wt[l.ceil() as usize - 1] += 1;
        }
        Weight(wt)
    }

    fn raise(&self, b: &Word, i: CrystalIndex) -> Option<Word> {
        self.fold(&b.0, i, true).map(Word)
    }

    fn lower(&self, b: &Word, i: CrystalIndex) -> Option<Word> {
        self.fold(&b.0, i, false).map(Word)
    }
}

/// Words under the signature rules. Agrees with [`TensorPower`] in the
/// `QPlus` flavor but runs in linear time.
#[derive(Clone, Copy, Debug)]
pub struct WordCrystal {
    pub n: usize,
}

impl WordCrystal {
    pub fn new(n: usize) -> Self {
        WordCrystal { n }
    }
}

impl Crystal for WordCrystal {
    type Elem = Word;

    fn rank(&self) -> usize {
        self.n
    }

    fn weight(&self, b: &Word) -> Weight {
        TensorPower::new(self.n, Flavor::QPlus).weight(b)
    }

    fn raise(&self, b: &Word, i: CrystalIndex) -> Option<Word> {
        raise_word(b, i)
    }

    fn lower(&self, b: &Word, i: CrystalIndex) -> Option<Word> {
        lower_word(b, i).filter(|w| w.max_ceil() as usize <= self.n)
    }
}

/// `L ⊗ R` for arbitrary crystals of the same rank.
#[derive(Clone, Copy, Debug)]
pub struct TensorProduct<L, R> {
    pub left: L,
    pub right: R,
    pub flavor: Flavor,
}

impl<L: Crystal, R: Crystal> TensorProduct<L, R> {
    pub fn new(left: L, right: R, flavor: Flavor) -> Self {
        TensorProduct {
            left,
            right,
            flavor,
        }
    }
}

impl<L: Crystal, R: Crystal> Crystal for TensorProduct<L, R> {
    type Elem = (L::Elem, R::Elem);

    fn rank(&self) -> usize {
        self.left.rank()
    }

    fn weight(&self, b: &Self::Elem) -> Weight {
        self.left.weight(&b.0).add(&self.right.weight(&b.1))
    }

    fn raise(&self, b: &Self::Elem, i: CrystalIndex) -> Option<Self::Elem> {
        tensor_raise(&self.left, &self.right, &b.0, &b.1, i, self.flavor)
    }

    fn lower(&self, b: &Self::Elem, i: CrystalIndex) -> Option<Self::Elem> {
        tensor_lower(&self.left, &self.right, &b.0, &b.1, i, self.flavor)
    }
}

/// The one-element crystal of weight zero, a unit for `⊗`.
#[derive(Clone, Copy, Debug)]
pub struct TrivialCrystal {
    pub n: usize,
}

impl Crystal for TrivialCrystal {
    type Elem = ();

    fn rank(&self) -> usize {
        self.n
    }
    fn weight(&self, _: &()) -> Weight {
        Weight::zero(self.n)
    }
    fn raise(&self, _: &(), _: CrystalIndex) -> Option<()> {
        None
    }
    fn lower(&self, _: &(), _: CrystalIndex) -> Option<()> {
        None
    }
}
