//! Defining relations of the inhomogeneous algebra, in component form.

use std::fmt;

use crate::error::Result;
use crate::field::Field;
use crate::qgdata::InhomogeneousData;

use super::word::{Gen, NcPoly, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// `R(Λ⊤Λ) = (Λ⊤Λ)R`
    LL,
    /// `p⊤Λ = R~(Λ⊤p) + ZΛ − (Λ⊤Λ)Z`
    PL,
    /// `p⊤p = R(p⊤p) − (R − I)Zp + T − (Λ⊤Λ)T`
    PP,
    /// `S(Λ)Λ = ΛS(Λ) = δ`, `S(p) + S(Λ)p = 0`
    Unit,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::LL => "LL",
            Family::PL => "PL",
            Family::PP => "PP",
            Family::Unit => "UNIT",
        };
        write!(f, "{s}")
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Relation<F> {
    pub family: Family,
    /// 1-based component label, e.g. `PL(1,2,1)`.
    pub label: String,
    pub poly: NcPoly<F>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RelationSet<F> {
    pub n: usize,
    pub extended: bool,
    pub relations: Vec<Relation<F>>,
}

impl<F: Field> RelationSet<F> {
    pub fn family(&self, fam: Family) -> impl Iterator<Item = &Relation<F>> {
        self.relations.iter().filter(move |r| r.family == fam)
    }

    pub fn polys(&self) -> Vec<NcPoly<F>> {
        self.relations.iter().map(|r| r.poly.clone()).collect()
    }
}

fn lam(a: usize, b: usize) -> Gen {
    Gen::L(a as u8, b as u8)
}

fn p(a: usize) -> Gen {
    Gen::P(a as u8)
}

fn w2(a: Gen, b: Gen) -> Word {
    Word(vec![a, b])
}

fn label(fam: Family, idx: &[usize]) -> String {
    let parts: Vec<String> = idx.iter().map(|i| (i + 1).to_string()).collect();
    format!("{fam}({})", parts.join(","))
}

/// Builds the LL, PL and PP families (and UNIT when `extended`). Components
/// that vanish identically are dropped.
pub fn build_relations<F: Field>(data: &InhomogeneousData<F>, extended: bool) -> Result<RelationSet<F>> {
    let n = data.n;
    let dd = data.derive()?;
    let (r, rt, z, t) = (&data.r, &dd.rtilde, &data.z, &data.t);
    let r_minus_i = r.sub(&crate::tensor::Tensor::identity(n, 2))?;
    let rz = r_minus_i.compose(z)?;
    let mut out = Vec::new();
    let mut push = |family, idx: &[usize], poly: NcPoly<F>| {
        if !poly.is_zero() {
            out.push(Relation {
                family,
                label: label(family, idx),
                poly,
            });
        }
    };

    for nn in 0..n {
        for a in 0..n {
            for m in 0..n {
                for b in 0..n {
                    let mut poly = NcPoly::zero();
                    for k in 0..n {
                        for c in 0..n {
                            let x = r.get(&[nn, a], &[k, c]);
                            poly.add_term(w2(lam(k, m), lam(c, b)), x.clone());
                            let y = r.get(&[k, c], &[m, b]);
                            poly.add_term(w2(lam(nn, k), lam(a, c)), -y.clone());
                        }
                    }
                    push(Family::LL, &[nn, a, m, b], poly);
                }
            }
        }
    }

    for nn in 0..n {
        for a in 0..n {
            for c in 0..n {
                let mut poly = NcPoly::term(w2(p(nn), lam(a, c)), F::one());
                for b in 0..n {
                    for l in 0..n {
                        poly.add_term(w2(lam(b, c), p(l)), -rt.get(&[nn, a], &[b, l]).clone());
                        poly.add_term(w2(lam(nn, l), lam(a, b)), z.get(&[l, b], &[c]).clone());
                    }
                    poly.add_term(Word::single(lam(b, c)), -z.get(&[nn, a], &[b]).clone());
                }
                push(Family::PL, &[nn, a, c], poly);
            }
        }
    }

    for nn in 0..n {
        for m in 0..n {
            let mut poly = NcPoly::term(w2(p(nn), p(m)), F::one());
            for l in 0..n {
                for k in 0..n {
                    poly.add_term(w2(p(l), p(k)), -r.get(&[nn, m], &[l, k]).clone());
                    poly.add_term(w2(lam(nn, l), lam(m, k)), t.get(&[l, k], &[]).clone());
                }
            }
            for j in 0..n {
                poly.add_term(Word::single(p(j)), rz.get(&[nn, m], &[j]).clone());
            }
            poly.add_term(Word::empty(), -t.get(&[nn, m], &[]).clone());
            push(Family::PP, &[nn, m], poly);
        }
    }

    if extended {
        for a in 0..n {
            for b in 0..n {
                let delta = if a == b { F::one() } else { F::zero() };
                let mut left = NcPoly::constant(-delta.clone());
                let mut right = NcPoly::constant(-delta);
                for k in 0..n {
                    let sl = |x: usize, y: usize| Gen::SL(x as u8, y as u8);
                    left.add_term(w2(sl(a, k), lam(k, b)), F::one());
                    right.add_term(w2(lam(a, k), sl(k, b)), F::one());
                }
                push(Family::Unit, &[a, b, 0], left);
                push(Family::Unit, &[a, b, 1], right);
            }
        }
        for a in 0..n {
            let mut poly = NcPoly::gen(Gen::SP(a as u8));
            for k in 0..n {
                poly.add_term(w2(Gen::SL(a as u8, k as u8), p(k)), F::one());
            }
            push(Family::Unit, &[a], poly);
        }
    }

    Ok(RelationSet {
        n,
        extended,
        relations: out,
    })
}
