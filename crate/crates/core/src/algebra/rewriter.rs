//! Sparse row echelon over word coordinates and the rewriting system built
//! from it.

use std::collections::{BTreeMap, HashMap};
use std::sync::atomic::{AtomicUsize, Ordering};

use crate::error::{Error, Result};
use crate::field::Field;

use super::relations::RelationSet;
use super::word::{NcPoly, Word};

pub const DEFAULT_STEP_BUDGET: usize = 1_000_000;

static STEP_BUDGET: AtomicUsize = AtomicUsize::new(DEFAULT_STEP_BUDGET);

/// Step budget given to every rewriter compiled afterwards.
pub fn set_step_budget(budget: usize) {
    STEP_BUDGET.store(budget, Ordering::Relaxed);
}

pub fn step_budget() -> usize {
    STEP_BUDGET.load(Ordering::Relaxed)
}

/// Row echelon form keyed by leading word. Each pivot row is stored as its
/// tail, with the head normalized to coefficient one, so
/// `head = -tail` modulo the span.
#[derive(Clone, Debug)]
pub struct Echelon<F> {
    pivots: BTreeMap<Word, NcPoly<F>>,
}

impl<F: Field> Default for Echelon<F> {
    fn default() -> Self {
        Self::new()
    }
}

impl<F: Field> Echelon<F> {
    pub fn new() -> Self {
        Echelon {
            pivots: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Remainder of `p` modulo the span, containing no pivot word.
    pub fn reduce(&self, p: &NcPoly<F>) -> NcPoly<F> {
        let mut work = p.clone();
        let mut out = NcPoly::zero();
        while let Some((w, c)) = work.pop_leading() {
            match self.pivots.get(&w) {
                Some(tail) => work.add_scaled(tail, &-c),
                None => out.add_term(w, c),
            }
        }
        out
    }

    /// Adds `p` to the span; returns false if it was already in it.
    pub fn insert(&mut self, p: &NcPoly<F>) -> bool {
        let mut r = self.reduce(p);
        let Some((head, c)) = r.pop_leading() else {
            return false;
        };
        let inv = c.inverse().expect("nonzero leading coefficient");
        self.pivots.insert(head, r.scale(&inv));
        true
    }

    /// Rewrites every tail so it contains no pivot word.
    pub fn interreduce(&mut self) {
        let heads: Vec<Word> = self.pivots.keys().cloned().collect();
        for h in heads {
            let tail = self.pivots[&h].clone();
            let reduced = self.reduce(&tail);
            self.pivots.insert(h, reduced);
        }
    }

    pub fn contains(&self, p: &NcPoly<F>) -> bool {
        self.reduce(p).is_zero()
    }

    pub fn pivots(&self) -> impl Iterator<Item = (&Word, &NcPoly<F>)> {
        self.pivots.iter()
    }
}

/// A directed rule `head -> rhs` with `rhs` strictly below `head`.
#[derive(Clone, Debug, PartialEq)]
pub struct Rule<F> {
    pub head: Word,
    pub rhs: NcPoly<F>,
}

#[derive(Clone, Debug)]
pub struct Rewriter<F> {
    pub n: usize,
    pub extended: bool,
    rules: Vec<Rule<F>>,
    index: HashMap<Word, usize>,
    max_head: usize,
    pub step_budget: usize,
}

impl<F: Field> Rewriter<F> {
    /// Echelonizes all relations together; each pivot word becomes a rule
    /// head.
    pub fn compile(rels: &RelationSet<F>) -> Result<Self> {
        let mut ech = Echelon::new();
        for r in &rels.relations {
            ech.insert(&r.poly);
        }
        ech.interreduce();
        let mut rules = Vec::new();
        for (head, tail) in ech.pivots() {
            if head.is_empty() {
                return Err(Error::Rewriter(
                    "the relations imply 1 = 0; the algebra collapses".into(),
                ));
            }
            let rhs = tail.neg();
            if let Some((top, _)) = rhs.leading() {
                if top >= head {
                    return Err(Error::Rewriter(format!(
                        "rule {head} -> {rhs} does not decrease in the monomial order"
                    )));
                }
            }
            rules.push(Rule {
                head: head.clone(),
                rhs,
            });
        }
        let index = rules
            .iter()
            .enumerate()
            .map(|(i, r)| (r.head.clone(), i))
            .collect();
        let max_head = rules.iter().map(|r| r.head.len()).max().unwrap_or(0);
        Ok(Rewriter {
            n: rels.n,
            extended: rels.extended,
            rules,
            index,
            max_head,
            step_budget: step_budget(),
        })
    }

    pub fn with_budget(mut self, budget: usize) -> Self {
        self.step_budget = budget;
        self
    }

    pub fn rules(&self) -> &[Rule<F>] {
        &self.rules
    }

    pub fn rule_for(&self, head: &Word) -> Option<&Rule<F>> {
        self.index.get(head).map(|&i| &self.rules[i])
    }

    /// First rule head occurring in `w`: `(position, rule)`.
    pub fn find_head(&self, w: &Word) -> Option<(usize, &Rule<F>)> {
        let g = w.gens();
        for i in 0..g.len() {
            for len in 1..=self.max_head.min(g.len() - i) {
                let sub = Word(g[i..i + len].to_vec());
                if let Some(&ri) = self.index.get(&sub) {
                    return Some((i, &self.rules[ri]));
                }
            }
        }
        None
    }

    pub fn is_normal(&self, w: &Word) -> bool {
        self.find_head(w).is_none()
    }

    /// Rewrites `w` once at `pos` with `rule`.
    pub fn apply_at(&self, w: &Word, pos: usize, rule: &Rule<F>) -> NcPoly<F> {
        let prefix = w.slice(0, pos);
        let suffix = w.slice(pos + rule.head.len(), w.len());
        rule.rhs.sandwich(&prefix, &suffix)
    }

    /// Normal form: repeatedly rewrites the largest reducible word.
    pub fn normalize(&self, p: &NcPoly<F>) -> Result<NcPoly<F>> {
        let mut work = p.clone();
        let mut out = NcPoly::zero();
        let mut steps = 0usize;
        while let Some((w, c)) = work.pop_leading() {
            match self.find_head(&w) {
                Some((pos, rule)) => {
                    steps += 1;
                    if steps > self.step_budget {
                        return Err(Error::Budget(format!(
                            "normalization exceeded {} rewrite steps",
                            self.step_budget
                        )));
                    }
                    work.add_scaled(&self.apply_at(&w, pos, rule), &c);
                }
                None => out.add_term(w, c),
            }
        }
        Ok(out)
    }
}
