//! Overlap ambiguities of the rewriting system.

use std::time::Instant;

use rayon::prelude::*;

use crate::error::Result;
use crate::field::Field;
use crate::qgdata::InhomogeneousData;
use crate::report::{Record, Report};

use super::ideal::{BoundedIdeal, DEFAULT_ROW_BUDGET};
use super::relations::{build_relations, RelationSet};
use super::rewriter::Rewriter;
use super::word::{Gen, NcPoly, Word};

#[derive(Clone, Debug)]
pub struct Overlap<F> {
    pub word: Word,
    pub family: String,
    /// Difference of the two normal forms.
    pub residual: NcPoly<F>,
}

/// Family label by letter content, translations first: `ppΛ`, `pΛΛ`, ...
pub fn family_of(w: &Word) -> String {
    let p = w.gens().iter().filter(|g| g.is_translation()).count();
    let l = w.len() - p;
    format!("{}{}", "p".repeat(p), "Λ".repeat(l))
}

/// All overlaps `h1 = u v`, `h2 = v w` with `v` nonempty and `|u v w| <= degree`,
/// each resolved to the difference of its two normal forms.
pub fn overlaps<F: Field>(rw: &Rewriter<F>, degree: usize) -> Result<Vec<Overlap<F>>> {
    let mut cases = Vec::new();
    for r1 in rw.rules() {
        for r2 in rw.rules() {
            let (h1, h2) = (r1.head.gens(), r2.head.gens());
            for o in 1..h1.len().min(h2.len()) {
                if h1[h1.len() - o..] != h2[..o] {
                    continue;
                }
                let word = r1.head.concat(&Word(h2[o..].to_vec()));
                if word.len() <= degree {
                    cases.push((word, r1, r2, h1.len() - o));
                }
            }
        }
    }
    cases
        .par_iter()
        .map(|(word, r1, r2, pos2)| {
            let a = rw.normalize(&rw.apply_at(word, 0, r1))?;
            let b = rw.normalize(&rw.apply_at(word, *pos2, r2))?;
            Ok(Overlap {
                word: word.clone(),
                family: family_of(word),
                residual: a.sub(&b),
            })
        })
        .collect()
}

fn rewriter_for<F: Field>(data: &InhomogeneousData<F>) -> Result<(RelationSet<F>, Rewriter<F>)> {
    let rels = build_relations(data, false)?;
    let rw = Rewriter::compile(&rels)?;
    Ok((rels, rw))
}

/// One record per family (`ppp`, `ppΛ`, `pΛΛ`, `ΛΛΛ` at degree 3) and one
/// per unresolved overlap. A nonzero residual fails; its membership in the
/// ideal at `degree + 1` is reported in the note.
pub fn diamond_check<F: Field>(data: &InhomogeneousData<F>, degree: usize) -> Result<Report> {
    let start = Instant::now();
    let (rels, rw) = rewriter_for(data)?;
    let found = overlaps(&rw, degree)?;
    let mut families: Vec<String> = (0..=degree)
        .rev()
        .map(|p| format!("{}{}", "p".repeat(p), "Λ".repeat(degree - p)))
        .collect();
    for o in &found {
        if !families.contains(&o.family) {
            families.push(o.family.clone());
        }
    }
    let failures: Vec<&Overlap<F>> = found.iter().filter(|o| !o.residual.is_zero()).collect();
    let ideal = if failures.is_empty() {
        None
    } else {
        Some(BoundedIdeal::new(
            &rels.polys(),
            &Gen::basic_alphabet(data.n),
            degree + 1,
            DEFAULT_ROW_BUDGET,
        )?)
    };
    let mut records = Vec::new();
    for fam in &families {
        let total = found.iter().filter(|o| &o.family == fam).count();
        let bad = failures.iter().filter(|o| &o.family == fam).count();
        let mut rec = Record::new(
            format!("overlap {fam}"),
            format!("both reductions of every {fam} overlap agree"),
            bad == 0,
        )
        .with_note(format!("{} of {total} overlaps resolve", total - bad));
        rec.elapsed_us = start.elapsed().as_micros() as u64;
        records.push(rec);
    }
    for o in failures {
        let member = ideal.as_ref().map(|i| i.contains(&o.residual)).unwrap_or(false);
        let note = format!(
            "residual {} at degree {}; the rewriting system is not confluent here",
            if member { "lies in the ideal" } else { "is not in the ideal" },
            degree + 1
        );
        records.push(
            Record::new(
                format!("overlap {}", o.word),
                format!("{} resolves: residual {}", o.family, o.residual),
                false,
            )
            .with_note(note),
        );
    }
    Ok(Report::new(records))
}
