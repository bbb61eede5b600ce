//! Bounded-degree membership in a two-sided ideal, by exact linear algebra
//! over the word basis.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::qgdata::InhomogeneousData;

use super::relations::build_relations;
use super::rewriter::Echelon;
use super::word::{Gen, NcPoly, Word};

pub const DEFAULT_ROW_BUDGET: usize = 200_000;

/// Span of `{x r y : r a generator, x, y words, deg(x r y) <= bound}`.
#[derive(Clone, Debug)]
pub struct BoundedIdeal<F> {
    pub bound: usize,
    pub rows: usize,
    echelon: Echelon<F>,
}

impl<F: Field> BoundedIdeal<F> {
    pub fn new(generators: &[NcPoly<F>], alphabet: &[Gen], bound: usize, row_budget: usize) -> Result<Self> {
        let mut words_by_len: Vec<Vec<Word>> = Vec::new();
        let mut rows = 0usize;
        for g in generators {
            let d = g.degree();
            if d > bound || g.is_zero() {
                continue;
            }
            for s in 0..=(bound - d) {
                // (s + 1) splits of s letters into a left and right word
                rows += (s + 1) * alphabet.len().pow(s as u32);
            }
        }
        if rows > row_budget {
            return Err(Error::Budget(format!(
                "ideal membership at degree {bound} needs {rows} rows, budget is {row_budget}"
            )));
        }
        for len in 0..=bound {
            words_by_len.push(Word::all_of_length(alphabet, len));
        }
        let mut echelon = Echelon::new();
        for g in generators {
            let d = g.degree();
            if d > bound || g.is_zero() {
                continue;
            }
            for s in 0..=(bound - d) {
                for i in 0..=s {
                    for x in &words_by_len[i] {
                        for y in &words_by_len[s - i] {
                            echelon.insert(&g.sandwich(x, y));
                        }
                    }
                }
            }
        }
        Ok(BoundedIdeal {
            bound,
            rows,
            echelon,
        })
    }

    pub fn contains(&self, p: &NcPoly<F>) -> bool {
        self.echelon.contains(p)
    }

    pub fn rank(&self) -> usize {
        self.echelon.rank()
    }
}

/// Whether `poly` lies in the ideal of the LL, PL and PP relations, using
/// products of degree at most `bound`.
pub fn ideal_member<F: Field>(data: &InhomogeneousData<F>, poly: &NcPoly<F>, bound: usize) -> Result<bool> {
    if poly.uses_extended() {
        return Err(Error::UnknownGenerator(
            "ideal membership is decided over the Λ, p alphabet only".into(),
        ));
    }
    if poly.degree() > bound {
        return Err(Error::InvalidData(format!(
            "degree bound {bound} is below the degree {} of the element",
            poly.degree()
        )));
    }
    let rels = build_relations(data, false)?;
    let ideal = BoundedIdeal::new(&rels.polys(), &Gen::basic_alphabet(data.n), bound, DEFAULT_ROW_BUDGET)?;
    Ok(ideal.contains(poly))
}
