//! The `λ = 0` replacement for `T = −R~T`.
//!
//! With `C = (R~ + I)T` the condition is `C − (Λ⊤Λ)C = 0` in the algebra
//! generated by `Λ` alone. Modulo the full ideal this element always
//! vanishes (it is a combination of PP and LL relations), so the decisive
//! test is membership in the ideal of the LL relations.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::qgdata::InhomogeneousData;
use crate::tensor::Tensor;

use super::ideal::{BoundedIdeal, DEFAULT_ROW_BUDGET};
use super::relations::{build_relations, Family};
use super::word::{Gen, NcPoly, Word};

#[derive(Clone, Debug)]
pub struct LambdaZeroReport<F> {
    pub pass: bool,
    /// `C = (R~ + I)T`.
    pub c: Tensor<F>,
    /// `C^{nm} − Λ^n_k Λ^m_l C^{kl}`, one per `(n, m)`.
    pub elements: Vec<NcPoly<F>>,
    /// Membership of every element in the ideal of the LL relations.
    pub in_lambda_ideal: Option<bool>,
    /// Membership of every element in the full ideal; informational.
    pub in_full_ideal: Option<bool>,
    /// `(R − I)(p⊤p − Zp + T' − (Λ⊤Λ)T') = 0` with `T = −2T'`.
    pub reduced_pp: Vec<NcPoly<F>>,
    /// Whether every reduced translation relation lies in the full ideal.
    pub reduced_pp_in_ideal: bool,
    pub note: String,
}

fn lam(a: usize, b: usize) -> Gen {
    Gen::L(a as u8, b as u8)
}

/// `X^{nm} − Λ^n_k Λ^m_l X^{kl}` for a vector `X` on V⊗V.
fn twisted_difference<F: Field>(n: usize, x: &Tensor<F>) -> Vec<NcPoly<F>> {
    let mut out = Vec::new();
    for a in 0..n {
        for b in 0..n {
            let mut poly = NcPoly::constant(x.get(&[a, b], &[]).clone());
            for k in 0..n {
                for l in 0..n {
                    poly.add_term(
                        Word(vec![lam(a, k), lam(b, l)]),
                        -x.get(&[k, l], &[]).clone(),
                    );
                }
            }
            out.push(poly);
        }
    }
    out
}

fn reduced_presentation<F: Field>(data: &InhomogeneousData<F>) -> Result<Vec<NcPoly<F>>> {
    let n = data.n;
    let half = F::one() / F::from_i64(2);
    let tp = data.t.scale(&-half);
    let rmi = data.r.sub(&Tensor::identity(n, 2))?;
    let tdiff = twisted_difference(n, &tp);
    let mut x = Vec::new();
    for a in 0..n {
        for b in 0..n {
            let mut poly = NcPoly::word(Word(vec![Gen::P(a as u8), Gen::P(b as u8)]));
            for q in 0..n {
                poly.add_term(Word::single(Gen::P(q as u8)), -data.z.get(&[a, b], &[q]).clone());
            }
            poly = poly.add(&tdiff[a * n + b]);
            x.push(poly);
        }
    }
    let mut out = Vec::new();
    for row in 0..n * n {
        let mut poly = NcPoly::zero();
        for (col, xc) in x.iter().enumerate() {
            poly.add_scaled(xc, rmi.at(row, col));
        }
        out.push(poly);
    }
    Ok(out)
}

pub fn check_lambda_zero<F: Field>(data: &InhomogeneousData<F>) -> Result<LambdaZeroReport<F>> {
    if !data.lambda.is_zero() {
        return Err(Error::InvalidData(
            "the lambda-zero condition applies only when lambda = 0".into(),
        ));
    }
    let n = data.n;
    let dd = data.derive()?;
    let c = dd.rtilde.add(&Tensor::identity(n, 2))?.compose(&data.t)?;
    let elements = twisted_difference(n, &c);
    let rels = build_relations(data, false)?;
    let alphabet = Gen::basic_alphabet(n);
    let full = BoundedIdeal::new(&rels.polys(), &alphabet, 2, DEFAULT_ROW_BUDGET)?;
    let reduced_pp = reduced_presentation(data)?;
    let reduced_pp_in_ideal = reduced_pp.iter().all(|r| full.contains(r));

    if c.is_zero() {
        return Ok(LambdaZeroReport {
            pass: true,
            c,
            elements,
            in_lambda_ideal: None,
            in_full_ideal: None,
            reduced_pp,
            reduced_pp_in_ideal,
            note: "C = 0".into(),
        });
    }

    let ll: Vec<NcPoly<F>> = rels.family(Family::LL).map(|r| r.poly.clone()).collect();
    let lambda_ideal = BoundedIdeal::new(&ll, &Gen::lambda_alphabet(n), 2, DEFAULT_ROW_BUDGET)?;
    let in_lambda = elements.iter().all(|e| lambda_ideal.contains(e));
    let in_full = elements.iter().all(|e| full.contains(e));
    let note = format!(
        "C ≠ 0; C - (Λ⊤Λ)C {} the ideal of the Λ relations (degree 2); {} the full ideal",
        if in_lambda { "lies in" } else { "is not in" },
        if in_full { "lies in" } else { "is not in" },
    );
    Ok(LambdaZeroReport {
        pass: in_lambda,
        c,
        elements,
        in_lambda_ideal: Some(in_lambda),
        in_full_ideal: Some(in_full),
        reduced_pp,
        reduced_pp_in_ideal,
        note,
    })
}
