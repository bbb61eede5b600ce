//! Substituting the translation exchange rule into itself.

use std::time::Instant;

use crate::error::Result;
use crate::field::Field;
use crate::qgdata::InhomogeneousData;
use crate::report::{Record, Report};
use crate::tensor::Tensor;

use super::relations::build_relations;
use super::rewriter::Rewriter;
use super::word::{Gen, NcPoly, Word};

/// The components `p^n p^m`.
pub fn translation_pairs<F: Field>(n: usize) -> Vec<NcPoly<F>> {
    let mut out = Vec::new();
    for a in 0..n as u8 {
        for b in 0..n as u8 {
            out.push(NcPoly::word(Word(vec![Gen::P(a), Gen::P(b)])));
        }
    }
    out
}

/// Right side of the exchange rule with `X` in place of `p⊤p`:
/// `R X − (R − I)Zp + T − (Λ⊤Λ)T`.
pub fn exchange<F: Field>(data: &InhomogeneousData<F>, x: &[NcPoly<F>]) -> Result<Vec<NcPoly<F>>> {
    let n = data.n;
    let rz = data.r.sub(&Tensor::identity(n, 2))?.compose(&data.z)?;
    let mut out = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            let row = a * n + b;
            let mut poly = NcPoly::constant(data.t.at(row, 0).clone());
            for (col, xc) in x.iter().enumerate() {
                poly.add_scaled(xc, data.r.at(row, col));
            }
            for j in 0..n {
                poly.add_term(Word::single(Gen::P(j as u8)), -rz.at(row, j).clone());
            }
            for k in 0..n {
                for l in 0..n {
                    poly.add_term(
                        Word(vec![Gen::L(a as u8, k as u8), Gen::L(b as u8, l as u8)]),
                        -data.t.get(&[k, l], &[]).clone(),
                    );
                }
            }
            out.push(poly);
        }
    }
    Ok(out)
}

/// Checks that one and two applications of the exchange rule to `p⊤p`
/// normalize back to `p⊤p`.
pub fn double_swap<F: Field>(data: &InhomogeneousData<F>) -> Result<Report> {
    let start = Instant::now();
    let rw = Rewriter::compile(&build_relations(data, false)?)?;
    let pp = translation_pairs::<F>(data.n);
    let once = exchange(data, &pp)?;
    let twice = exchange(data, &once)?;
    let mut records = Vec::new();
    for (name, eq, subst) in [
        ("single swap", "p⊤p = R(p⊤p) - (R - I)Zp + T - (Λ⊤Λ)T after normalization", &once),
        ("double swap", "exchange rule substituted into itself returns p⊤p after normalization", &twice),
    ] {
        let mut bad = Vec::new();
        for (i, (orig, s)) in pp.iter().zip(subst.iter()).enumerate() {
            let diff = rw.normalize(&s.sub(orig))?;
            if !diff.is_zero() {
                bad.push(format!("({},{}): {diff}", i / data.n + 1, i % data.n + 1));
            }
        }
        let mut rec = Record::new(name, eq, bad.is_empty());
        if !bad.is_empty() {
            rec = rec.with_note(bad.join("; "));
        }
        records.push(rec.with_elapsed(start));
    }
    Ok(Report::new(records))
}
