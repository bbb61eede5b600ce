//! Counit, coproduct and antipode on words, and the Hopf compatibility check.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::time::Instant;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::qgdata::InhomogeneousData;
use crate::report::{Record, Report};

use super::relations::{build_relations, Family};
use super::rewriter::Rewriter;
use super::word::{Gen, NcPoly, Word};

/// Element of `B ⊗ B`, as a map from word pairs to coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct NcTensor<F> {
    terms: BTreeMap<(Word, Word), F>,
}

impl<F: Field> NcTensor<F> {
    pub fn zero() -> Self {
        NcTensor {
            terms: BTreeMap::new(),
        }
    }

    pub fn unit() -> Self {
        let mut t = Self::zero();
        t.add_term(Word::empty(), Word::empty(), F::one());
        t
    }

    pub fn add_term(&mut self, u: Word, v: Word, c: F) {
        if c.is_zero() {
            return;
        }
        let key = (u, v);
        let s = match self.terms.remove(&key) {
            Some(x) => x + c,
            None => c,
        };
        if !s.is_zero() {
            self.terms.insert(key, s);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Word, Word), &F)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for ((a, b), x) in &self.terms {
            for ((c, d), y) in &other.terms {
                out.add_term(a.concat(c), b.concat(d), x.clone() * y);
            }
        }
        out
    }

    pub fn add_scaled(&mut self, other: &Self, c: &F) {
        for ((a, b), x) in &other.terms {
            self.add_term(a.clone(), b.clone(), x.clone() * c);
        }
    }
}

impl<F: Field> fmt::Display for NcTensor<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, ((u, v), c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c}) {u} ⊗ {v}")?;
        }
        Ok(())
    }
}

fn delta<F: Field>(a: u8, b: u8) -> F {
    if a == b {
        F::one()
    } else {
        F::zero()
    }
}

pub fn counit_gen<F: Field>(g: Gen) -> F {
    match g {
        Gen::L(a, b) | Gen::SL(a, b) => delta(a, b),
        Gen::P(_) | Gen::SP(_) => F::zero(),
    }
}

/// The algebra map `ε`.
pub fn counit<F: Field>(p: &NcPoly<F>) -> F {
    let mut acc = F::zero();
    for (w, c) in p.terms() {
        let mut v = c.clone();
        for &g in w.gens() {
            v = v * counit_gen::<F>(g);
            if v.is_zero() {
                break;
            }
        }
        acc = acc + v;
    }
    acc
}

/// `Δ` on one generator, `n` the dimension.
pub fn coproduct_gen<F: Field>(g: Gen, n: usize) -> NcTensor<F> {
    let mut t = NcTensor::zero();
    let w = Word::single;
    for c in 0..n as u8 {
        match g {
            Gen::L(a, b) => t.add_term(w(Gen::L(a, c)), w(Gen::L(c, b)), F::one()),
            Gen::P(a) => t.add_term(w(Gen::L(a, c)), w(Gen::P(c)), F::one()),
            Gen::SL(a, b) => t.add_term(w(Gen::SL(c, b)), w(Gen::SL(a, c)), F::one()),
            Gen::SP(a) => t.add_term(w(Gen::SP(c)), w(Gen::SL(a, c)), F::one()),
        }
    }
    match g {
        Gen::P(a) => t.add_term(w(Gen::P(a)), Word::empty(), F::one()),
        Gen::SP(a) => t.add_term(Word::empty(), w(Gen::SP(a)), F::one()),
        _ => {}
    }
    t
}

/// Multiplicative extension of `Δ`.
pub fn coproduct<F: Field>(p: &NcPoly<F>, n: usize) -> NcTensor<F> {
    let mut out = NcTensor::zero();
    for (w, c) in p.terms() {
        let mut acc = NcTensor::unit();
        for &g in w.gens() {
            acc = acc.mul(&coproduct_gen(g, n));
        }
        out.add_scaled(&acc, c);
    }
    out
}

/// `S` on one generator of `Λ, p`.
pub fn antipode_gen<F: Field>(g: Gen, n: usize) -> Result<NcPoly<F>> {
    match g {
        Gen::L(a, b) => Ok(NcPoly::gen(Gen::SL(a, b))),
        Gen::P(a) => {
            let mut out = NcPoly::zero();
            for k in 0..n as u8 {
                out.add_term(Word(vec![Gen::SL(a, k), Gen::P(k)]), -F::one());
            }
            Ok(out)
        }
        _ => Err(Error::UnknownGenerator(format!(
            "the antipode of the extended generator {g} is not part of the structure"
        ))),
    }
}

/// Antihomomorphic extension of `S`.
pub fn antipode<F: Field>(p: &NcPoly<F>, n: usize) -> Result<NcPoly<F>> {
    let mut out = NcPoly::zero();
    for (w, c) in p.terms() {
        let mut acc = NcPoly::constant(c.clone());
        for &g in w.gens().iter().rev() {
            acc = acc.mul(&antipode_gen(g, n)?);
        }
        out = out.add(&acc);
    }
    Ok(out)
}

/// Normalizes both legs of `t` and collects.
pub fn normalize_legs<F: Field>(
    rw: &Rewriter<F>,
    t: &NcTensor<F>,
    cache: &mut HashMap<Word, NcPoly<F>>,
) -> Result<NcTensor<F>> {
    let mut nf = |w: &Word| -> Result<NcPoly<F>> {
        if let Some(p) = cache.get(w) {
            return Ok(p.clone());
        }
        let p = rw.normalize(&NcPoly::word(w.clone()))?;
        cache.insert(w.clone(), p.clone());
        Ok(p)
    };
    let mut out = NcTensor::zero();
    for ((u, v), c) in t.terms() {
        let (a, b) = (nf(u)?, nf(v)?);
        for (x, cx) in a.terms() {
            for (y, cy) in b.terms() {
                out.add_term(x.clone(), y.clone(), c.clone() * cx * cy);
            }
        }
    }
    Ok(out)
}

/// `m (S ⊗ id) Δ` when `left`, `m (id ⊗ S) Δ` otherwise.
pub fn antipode_contraction<F: Field>(g: Gen, n: usize, left: bool) -> Result<NcPoly<F>> {
    let mut out = NcPoly::zero();
    for ((u, v), c) in coproduct_gen::<F>(g, n).terms() {
        let (a, b) = if left {
            (antipode(&NcPoly::word(u.clone()), n)?, NcPoly::word(v.clone()))
        } else {
            (NcPoly::word(u.clone()), antipode(&NcPoly::word(v.clone()), n)?)
        };
        out.add_scaled(&a.mul(&b), c);
    }
    Ok(out)
}

/// Counit on every relation, `Δ` compatibility on `x r y` for generators
/// `x, y` up to total degree `degree`, and the antipode axioms on the
/// generators of `Λ, p`.
pub fn check_hopf<F: Field>(data: &InhomogeneousData<F>, degree: usize) -> Result<Report> {
    let n = data.n;
    let rels = build_relations(data, true)?;
    let rw = Rewriter::compile(&rels)?;
    let mut records = Vec::new();

    for fam in [Family::LL, Family::PL, Family::PP, Family::Unit] {
        let start = Instant::now();
        let bad: Vec<String> = rels
            .family(fam)
            .filter(|r| !counit(&r.poly).is_zero())
            .map(|r| r.label.clone())
            .collect();
        let mut rec = Record::new(format!("counit {fam}"), format!("ε(r) = 0 for every {fam} relation"), bad.is_empty());
        if !bad.is_empty() {
            rec = rec.with_note(format!("fails on {}", bad.join(", ")));
        }
        records.push(rec.with_elapsed(start));
    }

    let alphabet = Gen::basic_alphabet(n);
    for fam in [Family::LL, Family::PL, Family::PP] {
        let start = Instant::now();
        let mut cases: Vec<(String, NcPoly<F>)> = Vec::new();
        for r in rels.family(fam) {
            let d = r.poly.degree();
            cases.push((r.label.clone(), r.poly.clone()));
            if d < degree {
                for &g in &alphabet {
                    let w = Word::single(g);
                    cases.push((format!("{g}*{}", r.label), r.poly.sandwich(&w, &Word::empty())));
                    cases.push((format!("{}*{g}", r.label), r.poly.sandwich(&Word::empty(), &w)));
                }
            }
        }
        let results: Vec<Result<Option<String>>> = cases
            .par_iter()
            .map(|(label, poly)| {
                let mut cache = HashMap::new();
                let t = normalize_legs(&rw, &coproduct(poly, n), &mut cache)?;
                Ok(if t.is_zero() { None } else { Some(label.clone()) })
            })
            .collect();
        let mut bad = Vec::new();
        for r in results {
            if let Some(l) = r? {
                bad.push(l);
            }
        }
        let mut rec = Record::new(
            format!("coproduct {fam}"),
            format!("Δ(x r y) vanishes after normalizing both legs, r in {fam}, deg <= {degree}"),
            bad.is_empty(),
        )
        .with_note(format!("{} of {} elements checked", cases.len() - bad.len(), cases.len()));
        if !bad.is_empty() {
            rec.note = Some(format!("fails on {}", bad.join(", ")));
        }
        records.push(rec.with_elapsed(start));
    }

    for (left, name, eq) in [
        (true, "antipode S*id", "m(S ⊗ id)Δ(g) = ε(g) 1"),
        (false, "antipode id*S", "m(id ⊗ S)Δ(g) = ε(g) 1"),
    ] {
        let start = Instant::now();
        let mut bad = Vec::new();
        for &g in &alphabet {
            let lhs = rw.normalize(&antipode_contraction::<F>(g, n, left)?)?;
            let rhs = NcPoly::constant(counit_gen::<F>(g));
            if lhs != rhs {
                bad.push(format!("{g}: {lhs}"));
            }
        }
        let mut rec = Record::new(name, eq, bad.is_empty());
        if !bad.is_empty() {
            rec = rec.with_note(format!("fails on {}", bad.join("; ")));
        }
        records.push(rec.with_elapsed(start));
    }
    Ok(Report::new(records))
}
