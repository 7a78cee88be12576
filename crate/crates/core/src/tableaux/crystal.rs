use super::{
    from_revrow, is_primed_decomposition_tableau, revrow, ShiftedTableau, StrictPartition,
};
use crate::error::{Error, Result};
use crate::words::{e_word, f_word, weight_of, Crystal, CrystalIndex, Weight, Word};

fn transport(
    t: &ShiftedTableau,
    n: usize,
    image: Option<Word>,
    i: CrystalIndex,
) -> Result<Option<ShiftedTableau>> {
    let Some(w) = image else {
        return Ok(None);
    };
    let u = from_revrow(&t.shape(), &w)?;
    if !is_primed_decomposition_tableau(&u) {
        return Err(Error::Invariant(format!(
            "operator {i} maps {t} outside DecTab+_{n}: {u}"
        )));
    }
    Ok(Some(u))
}

/// `e_i` on `DecTab^+_n(λ)`, computed through the reverse row reading word.
pub fn tableau_e(t: &ShiftedTableau, i: CrystalIndex, n: usize) -> Result<Option<ShiftedTableau>> {
    let image = e_word(&revrow(t), i, n)?;
    transport(t, n, image, i)
}

/// `f_i` on `DecTab^+_n(λ)`; see [`tableau_e`].
pub fn tableau_f(t: &ShiftedTableau, i: CrystalIndex, n: usize) -> Result<Option<ShiftedTableau>> {
    let image = f_word(&revrow(t), i, n)?;
    transport(t, n, image, i)
}

/// The `q+_n`-crystal `DecTab^+_n(λ)`.
#[derive(Clone, Debug)]
pub struct DecTabCrystal {
    pub shape: StrictPartition,
    pub n: usize,
}

impl DecTabCrystal {
    pub fn new(shape: StrictPartition, n: usize) -> Self {
        DecTabCrystal { shape, n }
    }

    pub fn elements(&self) -> Vec<ShiftedTableau> {
        super::enumerate(super::Family::DecTabPlus, &self.shape, self.n)
    }
}

impl Crystal for DecTabCrystal {
    type Elem = ShiftedTableau;

    fn rank(&self) -> usize {
        self.n
    }

    fn weight(&self, b: &ShiftedTableau) -> Weight {
        weight_of(&revrow(b), self.n).expect("entries bounded by the rank")
    }

    fn raise(&self, b: &ShiftedTableau, i: CrystalIndex) -> Option<ShiftedTableau> {
        tableau_e(b, i, self.n).expect("decomposition tableau crystal is closed")
    }

    fn lower(&self, b: &ShiftedTableau, i: CrystalIndex) -> Option<ShiftedTableau> {
        tableau_f(b, i, self.n).expect("decomposition tableau crystal is closed")
    }
}
