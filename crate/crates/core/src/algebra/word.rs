//! Generators, words and noncommutative polynomials.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::expr::{self, ExprValue, GenKind};
use crate::field::Field;
use crate::scalar::RationalFunction;

/// A generator with 0-based indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Gen {
    /// `Λ^a_b`
    L(u8, u8),
    /// `p^a`
    P(u8),
    /// `S(Λ^a_b)`
    SL(u8, u8),
    /// `S(p^a)`
    SP(u8),
}

impl Gen {
    fn rank(self) -> u8 {
        match self {
            Gen::L(..) => 0,
            Gen::P(_) => 1,
            Gen::SL(..) => 2,
            Gen::SP(_) => 3,
        }
    }

    fn key(self) -> (u8, u8, u8) {
        match self {
            Gen::L(a, b) | Gen::SL(a, b) => (self.rank(), a, b),
            Gen::P(a) | Gen::SP(a) => (self.rank(), a, 0),
        }
    }

    /// Weight in the monomial order. `S(p)` is heavier than `S(Λ) p` so the
    /// unit rule `S(p^a) -> -S(Λ^a_k) p^k` decreases.
    pub fn weight(self) -> usize {
        match self {
            Gen::SP(_) => 3,
            _ => 1,
        }
    }

    pub fn is_extended(self) -> bool {
        matches!(self, Gen::SL(..) | Gen::SP(_))
    }

    pub fn is_translation(self) -> bool {
        matches!(self, Gen::P(_))
    }

    /// Largest index used, for range checks.
    pub fn max_index(self) -> u8 {
        match self {
            Gen::L(a, b) | Gen::SL(a, b) => a.max(b),
            Gen::P(a) | Gen::SP(a) => a,
        }
    }

    /// All `Λ` and `p` generators for dimension `n`.
    pub fn basic_alphabet(n: usize) -> Vec<Gen> {
        let mut out: Vec<Gen> = Vec::new();
        for a in 0..n as u8 {
            for b in 0..n as u8 {
                out.push(Gen::L(a, b));
            }
        }
        out.extend((0..n as u8).map(Gen::P));
        out
    }

    pub fn lambda_alphabet(n: usize) -> Vec<Gen> {
        Self::basic_alphabet(n)
            .into_iter()
            .filter(|g| !g.is_translation())
            .collect()
    }
}

impl Ord for Gen {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl PartialOrd for Gen {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Gen::L(a, b) => write!(f, "L[{},{}]", a + 1, b + 1),
            Gen::P(a) => write!(f, "p[{}]", a + 1),
            Gen::SL(a, b) => write!(f, "SL[{},{}]", a + 1, b + 1),
            Gen::SP(a) => write!(f, "Sp[{}]", a + 1),
        }
    }
}

/// A word; ordered by total weight, then lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Word(pub Vec<Gen>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn single(g: Gen) -> Self {
        Word(vec![g])
    }

    pub fn weight(&self) -> usize {
        self.0.iter().map(|g| g.weight()).sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn gens(&self) -> &[Gen] {
        &self.0
    }

    pub fn slice(&self, from: usize, to: usize) -> Word {
        Word(self.0[from..to].to_vec())
    }

    /// All words of exactly `len` letters over `alphabet`.
    pub fn all_of_length(alphabet: &[Gen], len: usize) -> Vec<Word> {
        let mut out = vec![Word::empty()];
        for _ in 0..len {
            out = out
                .iter()
                .flat_map(|w| alphabet.iter().map(move |&g| w.concat(&Word::single(g))))
                .collect();
        }
        out
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (i, g) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

/// Finite linear combination of words; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq)]
pub struct NcPoly<F> {
    terms: BTreeMap<Word, F>,
}

impl<F: Field> Default for NcPoly<F> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<F: Field> NcPoly<F> {
    pub fn zero() -> Self {
        NcPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(F::one())
    }

    pub fn constant(c: F) -> Self {
        Self::term(Word::empty(), c)
    }

    pub fn term(w: Word, c: F) -> Self {
        let mut p = Self::zero();
        p.add_term(w, c);
        p
    }

    pub fn gen(g: Gen) -> Self {
        Self::term(Word::single(g), F::one())
    }

    pub fn word(w: Word) -> Self {
        Self::term(w, F::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Word, &F)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> BTreeMap<Word, F> {
        self.terms
    }

    pub fn coeff(&self, w: &Word) -> Option<&F> {
        self.terms.get(w)
    }

    pub fn leading(&self) -> Option<(&Word, &F)> {
        self.terms.last_key_value()
    }

    pub fn pop_leading(&mut self) -> Option<(Word, F)> {
        self.terms.pop_last()
    }

    /// Maximal word length.
    pub fn degree(&self) -> usize {
        self.terms.keys().map(|w| w.len()).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, w: Word, c: F) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().clone() + c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    /// `self += c * other`
    pub fn add_scaled(&mut self, other: &Self, c: &F) {
        if c.is_zero() {
            return;
        }
        for (w, x) in &other.terms {
            self.add_term(w.clone(), x.clone() * c);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &F::one());
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &-F::one());
        out
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        NcPoly {
            terms: self
                .terms
                .iter()
                .map(|(w, x)| (w.clone(), x.clone() * c))
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(&-F::one())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                out.add_term(u.concat(v), a.clone() * b);
            }
        }
        out
    }

    /// `left * self * right` for words.
    pub fn sandwich(&self, left: &Word, right: &Word) -> Self {
        NcPoly {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (left.concat(w).concat(right), c.clone()))
                .collect(),
        }
    }

    pub fn uses_extended(&self) -> bool {
        self.terms
            .keys()
            .any(|w| w.0.iter().any(|g| g.is_extended()))
    }

    pub fn max_index(&self) -> Option<u8> {
        self.terms
            .keys()
            .flat_map(|w| w.0.iter().map(|g| g.max_index()))
            .max()
    }

    /// The constant coefficient if the polynomial has no other terms.
    pub fn as_constant(&self) -> Option<F> {
        match self.terms.len() {
            0 => Some(F::zero()),
            1 => self.terms.get(&Word::empty()).cloned(),
            _ => None,
        }
    }

    pub fn map_coeffs<G: Field>(&self, mut f: impl FnMut(&F) -> G) -> NcPoly<G> {
        let mut out = NcPoly::zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), f(c));
        }
        out
    }
}

fn needs_parens(s: &str) -> bool {
    s.contains(" + ") || s.contains(" - ") || s.contains('/')
}

impl<F: Field> fmt::Display for NcPoly<F> {
    /// Largest word first, e.g. `q^-1 * p[1]*p[2] - L[1,1]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let single = self.terms.len() == 1;
        for (i, (w, c)) in self.terms.iter().rev().enumerate() {
            let mut cs = c.to_string();
            let mut negative = false;
            if !needs_parens(&cs) && cs.starts_with('-') {
                negative = true;
                cs.remove(0);
            }
            if i == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if negative { " - " } else { " + " })?;
            }
            if w.is_empty() {
                if needs_parens(&cs) && !single {
                    write!(f, "({cs})")?;
                } else {
                    write!(f, "{cs}")?;
                }
            } else if cs == "1" {
                write!(f, "{w}")?;
            } else if needs_parens(&cs) {
                write!(f, "({cs}) * {w}")?;
            } else {
                write!(f, "{cs} * {w}")?;
            }
        }
        Ok(())
    }
}

impl ExprValue for NcPoly<RationalFunction> {
    fn int(n: BigInt) -> Self {
        Self::constant(RationalFunction::from_int(n))
    }
    fn q(_pos: usize) -> Result<Self> {
        Ok(Self::constant(RationalFunction::q()))
    }
    fn gen(kind: GenKind, idx: &[usize], pos: usize) -> Result<Self> {
        let to_u8 = |i: usize| {
            u8::try_from(i - 1).map_err(|_| Error::Parse {
                pos,
                msg: "index too large".into(),
            })
        };
        let g = match kind {
            GenKind::L => Gen::L(to_u8(idx[0])?, to_u8(idx[1])?),
            GenKind::P => Gen::P(to_u8(idx[0])?),
            GenKind::SL => Gen::SL(to_u8(idx[0])?, to_u8(idx[1])?),
            GenKind::SP => Gen::SP(to_u8(idx[0])?),
        };
        Ok(Self::gen(g))
    }
    fn add(self, other: Self) -> Self {
        NcPoly::add(&self, &other)
    }
    fn sub(self, other: Self) -> Self {
        NcPoly::sub(&self, &other)
    }
    fn mul(self, other: Self) -> Self {
        NcPoly::mul(&self, &other)
    }
    fn neg(self) -> Self {
        NcPoly::neg(&self)
    }
    fn div(self, other: Self, pos: usize) -> Result<Self> {
        let c = other.as_constant().ok_or_else(|| Error::Parse {
            pos,
            msg: "can only divide by a scalar".into(),
        })?;
        let inv = c.inv()?;
        Ok(self.scale(&inv))
    }
    fn pow(self, exp: i64, pos: usize) -> Result<Self> {
        if let Some(c) = self.as_constant() {
            return Ok(Self::constant(RationalFunction::pow(&c, exp)?));
        }
        if exp < 0 {
            return Err(Error::Parse {
                pos,
                msg: "negative powers of generators are not defined".into(),
            });
        }
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = NcPoly::mul(&acc, &self);
        }
        Ok(acc)
    }
}

/// Parses an expression in the generator grammar and checks that every index
/// is at most `n`.
pub fn parse_poly(text: &str, n: usize) -> Result<NcPoly<RationalFunction>> {
    let p: NcPoly<RationalFunction> = expr::parse(text)?.eval()?;
    if let Some(m) = p.max_index() {
        if m as usize >= n {
            return Err(Error::UnknownGenerator(format!(
                "index {} exceeds N = {n}",
                m as usize + 1
            )));
        }
    }
    Ok(p)
}
