//! Inhomogeneous quantum group data `(R, Z, T, λ)` and the checker for the
//! tensor-level consistency conditions A1–A16.
//!
//! Shapes: `R` is an operator on V⊗V, `Z` maps V to V⊗V (`Z[(n,m),k]`),
//! `T` is an element of V⊗V (`T[(n,m)]`, no lower axes). `Q = λI` is never
//! stored as a free matrix.

use std::time::Instant;

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::report::{residual_entries, Record, Report};
use crate::scalar::{parse_scalar, RationalFunction};
use crate::tensor::Tensor;

#[derive(Clone, Debug, PartialEq)]
pub struct InhomogeneousData<F> {
    pub n: usize,
    pub r: Tensor<F>,
    pub z: Tensor<F>,
    pub t: Tensor<F>,
    pub lambda: F,
}

#[derive(Clone, Debug, PartialEq)]
pub struct DerivedData<F> {
    /// `λ I` on V.
    pub q: Tensor<F>,
    /// `I⊗Q = λ I` on V⊗V.
    pub iq: Tensor<F>,
    pub rtilde: Tensor<F>,
    pub ztilde: Tensor<F>,
    pub rinv: Tensor<F>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Strict,
    LambdaZero,
}

impl<F: Field> InhomogeneousData<F> {
    /// Validates shapes and rejects `λ = −1`.
    pub fn new(n: usize, r: Tensor<F>, z: Tensor<F>, t: Tensor<F>, lambda: F) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidData("N must be at least 1".into()));
        }
        let want = |x: &Tensor<F>, up, low, what: &str| {
            if x.dim() != n || x.upper() != up || x.lower() != low {
                Err(Error::Shape(format!("{what} has shape {}", x.shape_string())))
            } else {
                Ok(())
            }
        };
        want(&r, 2, 2, "R")?;
        want(&z, 2, 1, "Z")?;
        want(&t, 2, 0, "T")?;
        if lambda == -F::one() {
            return Err(Error::LambdaMinusOne);
        }
        Ok(InhomogeneousData { n, r, z, t, lambda })
    }

    pub fn derive(&self) -> Result<DerivedData<F>> {
        if self.lambda == -F::one() {
            return Err(Error::LambdaMinusOne);
        }
        let q = Tensor::scalar_identity(self.n, 1, &self.lambda);
        let iq = Tensor::scalar_identity(self.n, 2, &self.lambda);
        let rtilde = self.r.add(&iq)?;
        let ztilde = self.r.compose(&self.z)?.neg();
        let rinv = self
            .r
            .invert()
            .map_err(|_| Error::Singular("R is not invertible".into()))?;
        Ok(DerivedData {
            q,
            iq,
            rtilde,
            ztilde,
            rinv,
        })
    }

    pub fn map<G: Field>(&self, mut f: impl FnMut(&F) -> G) -> InhomogeneousData<G> {
        InhomogeneousData {
            n: self.n,
            r: self.r.map(&mut f),
            z: self.z.map(&mut f),
            t: self.t.map(&mut f),
            lambda: f(&self.lambda),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Cond {
    A1,
    A2,
    A3,
    A4,
    A5,
    A6,
    A7,
    A8,
    A9,
    A10,
    A11a,
    A11b,
    A11c,
    A12,
    A13a,
    A13b,
    A14,
    A15,
    A16,
}

impl Cond {
    pub const TENSOR: [Cond; 18] = [
        Cond::A1,
        Cond::A2,
        Cond::A3,
        Cond::A4,
        Cond::A5,
        Cond::A6,
        Cond::A7,
        Cond::A8,
        Cond::A9,
        Cond::A10,
        Cond::A11a,
        Cond::A11b,
        Cond::A11c,
        Cond::A12,
        Cond::A13a,
        Cond::A13b,
        Cond::A14,
        Cond::A15,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Cond::A1 => "A1",
            Cond::A2 => "A2",
            Cond::A3 => "A3",
            Cond::A4 => "A4",
            Cond::A5 => "A5",
            Cond::A6 => "A6",
            Cond::A7 => "A7",
            Cond::A8 => "A8",
            Cond::A9 => "A9",
            Cond::A10 => "A10",
            Cond::A11a => "A11.1",
            Cond::A11b => "A11.2",
            Cond::A11c => "A11.3",
            Cond::A12 => "A12",
            Cond::A13a => "A13.1",
            Cond::A13b => "A13.2",
            Cond::A14 => "A14",
            Cond::A15 => "A15",
            Cond::A16 => "A16",
        }
    }

    pub fn equation(self) -> &'static str {
        match self {
            Cond::A1 => "(R - I)(R + I + I⊗Q) = 0",
            Cond::A2 => "(R~ - I - I⊗Q)(R~ + I) = 0",
            Cond::A3 => "R~ = R^-1 + R^-1 (I⊗Q)",
            Cond::A4 => "R R~ = I⊗I + I⊗Q",
            Cond::A5 => "(I⊗R)(R⊗I)(I⊗R) = (R⊗I)(I⊗R)(R⊗I)",
            Cond::A6 => "(I⊗R~)(R~⊗I)(I⊗R~) = (R~⊗I)(I⊗R~)(R~⊗I)",
            Cond::A7 => "(R⊗I)(I⊗R)(R~⊗I) = (I⊗R~)(R⊗I)(I⊗R)",
            Cond::A8 => "(R~⊗I)(I⊗R~)(R⊗I) = (I⊗R)(R~⊗I)(I⊗R~)",
            Cond::A9 => "Z Q = (I⊗Q) Z",
            Cond::A10 => "(Z⊗I)R + (R~⊗I)(I⊗Z)R = (I⊗R)(Z⊗I) + (I⊗R)(R~⊗I)(I⊗Z)",
            Cond::A11a => "(Z⊗I)R~ + (R~⊗I)(I⊗Z)R~ = (I⊗R~)(Z⊗I) + (I⊗R~)(R~⊗I)(I⊗Z)",
            Cond::A11b => {
                "(I⊗R^-1)(Z⊗I) + (I⊗R^-1)(R^-1⊗I)(I⊗Q⊗I)(I⊗Z) = (R~⊗I)(I⊗Z)R^-1 + (Z⊗I)R^-1 - (I⊗R^-1)(R^-1⊗I)(I⊗Z)"
            }
            Cond::A11c => {
                "(Z~⊗I)R~ - (I⊗Z)R~ - (I⊗Q⊗I)(I⊗Z)R~ = (I⊗R~)(R~⊗I)(I⊗Z~) + (I⊗R~)(I⊗I⊗Q)(Z⊗I) - (R~⊗I)(I⊗R~)(Z⊗I)"
            }
            Cond::A12 => "(R⊗I - I)((I⊗Z)Z - (Z⊗I)Z) + T⊗I - (I⊗R~)(R~⊗I)(I⊗T) = 0",
            Cond::A13a => {
                "(R⊗I - I)((I⊗Z)Z - (Z⊗I)Z + (I⊗R^-1)(R^-1⊗I)(I⊗Q⊗I)(I⊗T)) + T⊗I - (I⊗R^-1)(R^-1⊗I)(I⊗T) = 0"
            }
            Cond::A13b => {
                "(I⊗R - I)((Z~⊗I)Z~ + (T⊗I)Q - (I⊗Q⊗I)(I⊗Z)Z~ - (I⊗Q⊗I)(I⊗T) - (I⊗Z)Z~) + I⊗T - (R~⊗I)(I⊗R~)(T⊗I) = 0"
            }
            Cond::A14 => "(I⊗R - I)((Z~⊗I)T - (I⊗Z~)T) - (Z⊗I)T - (R~⊗I)(I⊗Z)T = 0",
            Cond::A15 => "T = -R~ T",
            Cond::A16 => "λ = -2 implies (R - I)^2 = 0",
        }
    }
}

/// Working set for evaluating conditions; shapes are validated up front, so
/// the products below cannot mismatch.
struct Ctx<'a, F: Field> {
    d: &'a InhomogeneousData<F>,
    dd: &'a DerivedData<F>,
    i1: Tensor<F>,
    i2: Tensor<F>,
    i3: Tensor<F>,
}

fn k<F: Field>(a: &Tensor<F>, b: &Tensor<F>) -> Tensor<F> {
    a.kron(b).expect("validated shapes")
}

fn m<F: Field>(a: &Tensor<F>, b: &Tensor<F>) -> Tensor<F> {
    a.compose(b).expect("validated shapes")
}

fn m3<F: Field>(a: &Tensor<F>, b: &Tensor<F>, c: &Tensor<F>) -> Tensor<F> {
    m(&m(a, b), c)
}

fn add<F: Field>(a: &Tensor<F>, b: &Tensor<F>) -> Tensor<F> {
    a.add(b).expect("validated shapes")
}

fn sub<F: Field>(a: &Tensor<F>, b: &Tensor<F>) -> Tensor<F> {
    a.sub(b).expect("validated shapes")
}

impl<'a, F: Field> Ctx<'a, F> {
    fn new(d: &'a InhomogeneousData<F>, dd: &'a DerivedData<F>) -> Self {
        Ctx {
            d,
            dd,
            i1: Tensor::identity(d.n, 1),
            i2: Tensor::identity(d.n, 2),
            i3: Tensor::identity(d.n, 3),
        }
    }

    fn left(&self, a: &Tensor<F>) -> Tensor<F> {
        k(&self.i1, a)
    }

    fn right(&self, a: &Tensor<F>) -> Tensor<F> {
        k(a, &self.i1)
    }

    /// `I⊗Q⊗I`, equal to `I⊗I⊗Q` since `Q = λI`.
    fn iqi(&self) -> Tensor<F> {
        k(&k(&self.i1, &self.dd.q), &self.i1)
    }

    fn residual(&self, c: Cond) -> Tensor<F> {
        let d = self.d;
        let dd = self.dd;
        let (r, rt, ri, z, zt, t) = (&d.r, &dd.rtilde, &dd.rinv, &d.z, &dd.ztilde, &d.t);
        match c {
            Cond::A1 => m(&sub(r, &self.i2), &add(&add(r, &self.i2), &dd.iq)),
            Cond::A2 => m(&sub(&sub(rt, &self.i2), &dd.iq), &add(rt, &self.i2)),
            Cond::A3 => sub(rt, &add(ri, &m(ri, &dd.iq))),
            Cond::A4 => sub(&m(r, rt), &add(&self.i2, &dd.iq)),
            Cond::A5 | Cond::A6 => {
                let x = if c == Cond::A5 { r } else { rt };
                let (xi, ix) = (self.right(x), self.left(x));
                sub(&m3(&ix, &xi, &ix), &m3(&xi, &ix, &xi))
            }
            Cond::A7 => sub(
                &m3(&self.right(r), &self.left(r), &self.right(rt)),
                &m3(&self.left(rt), &self.right(r), &self.left(r)),
            ),
            Cond::A8 => sub(
                &m3(&self.right(rt), &self.left(rt), &self.right(r)),
                &m3(&self.left(r), &self.right(rt), &self.left(rt)),
            ),
            Cond::A9 => sub(&m(z, &dd.q), &m(&dd.iq, z)),
            Cond::A10 | Cond::A11a => {
                let x = if c == Cond::A10 { r } else { rt };
                let (zi, iz) = (self.right(z), self.left(z));
                let lhs = add(&m(&zi, x), &m3(&self.right(rt), &iz, x));
                let ix = self.left(x);
                let rhs = add(&m(&ix, &zi), &m3(&ix, &self.right(rt), &iz));
                sub(&lhs, &rhs)
            }
            Cond::A11b => {
                let (zi, iz) = (self.right(z), self.left(z));
                let (iri, rii) = (self.left(ri), self.right(ri));
                let lhs = add(&m(&iri, &zi), &m(&m3(&iri, &rii, &self.iqi()), &iz));
                let rhs = sub(
                    &add(&m3(&self.right(rt), &iz, ri), &m(&zi, ri)),
                    &m3(&iri, &rii, &iz),
                );
                sub(&lhs, &rhs)
            }
            Cond::A11c => {
                let iz = self.left(z);
                let iqi = self.iqi();
                let lhs = sub(
                    &sub(&m(&self.right(zt), rt), &m(&iz, rt)),
                    &m3(&iqi, &iz, rt),
                );
                let (irt, rti) = (self.left(rt), self.right(rt));
                let zi = self.right(z);
                let rhs = sub(
                    &add(&m3(&irt, &rti, &self.left(zt)), &m3(&irt, &iqi, &zi)),
                    &m3(&rti, &irt, &zi),
                );
                sub(&lhs, &rhs)
            }
            Cond::A12 => {
                let zz = sub(&m(&self.left(z), z), &m(&self.right(z), z));
                let head = m(&sub(&self.right(r), &self.i3), &zz);
                let tail = m3(&self.left(rt), &self.right(rt), &self.left(t));
                sub(&add(&head, &self.right(t)), &tail)
            }
            Cond::A13a => {
                let (iri, rii) = (self.left(ri), self.right(ri));
                let it = self.left(t);
                let zz = sub(&m(&self.left(z), z), &m(&self.right(z), z));
                let inner = add(&zz, &m(&m3(&iri, &rii, &self.iqi()), &it));
                let head = m(&sub(&self.right(r), &self.i3), &inner);
                let tail = m3(&iri, &rii, &it);
                sub(&add(&head, &self.right(t)), &tail)
            }
            Cond::A13b => {
                let iqi = self.iqi();
                let iz = self.left(z);
                let it = self.left(t);
                let inner = sub(
                    &sub(
                        &sub(
                            &add(&m(&self.right(zt), zt), &m(&self.right(t), &dd.q)),
                            &m3(&iqi, &iz, zt),
                        ),
                        &m(&iqi, &it),
                    ),
                    &m(&iz, zt),
                );
                let head = m(&sub(&self.left(r), &self.i3), &inner);
                let tail = m3(&self.right(rt), &self.left(rt), &self.right(t));
                sub(&add(&head, &it), &tail)
            }
            Cond::A14 => {
                let diff = sub(&m(&self.right(zt), t), &m(&self.left(zt), t));
                let head = m(&sub(&self.left(r), &self.i3), &diff);
                sub(
                    &sub(&head, &m(&self.right(z), t)),
                    &m3(&self.right(rt), &self.left(z), t),
                )
            }
            Cond::A15 => add(t, &m(rt, t)),
            Cond::A16 => {
                let x = sub(r, &self.i2);
                m(&x, &x)
            }
        }
    }
}

/// Residual of one condition, `LHS − RHS`.
pub fn condition_residual<F: Field>(data: &InhomogeneousData<F>, c: Cond) -> Result<Tensor<F>> {
    let dd = data.derive()?;
    Ok(Ctx::new(data, &dd).residual(c))
}

/// Evaluates A1–A16. In lambda-zero mode `λ` must vanish and A15 is replaced
/// by the algebra-level condition decided by
/// [`crate::algebra::check_lambda_zero`].
pub fn check_axioms<F: Field>(data: &InhomogeneousData<F>, mode: Mode) -> Result<Report> {
    let dd = data.derive()?;
    if mode == Mode::LambdaZero && !data.lambda.is_zero() {
        return Err(Error::InvalidData(
            "lambda-zero mode requires lambda = 0".into(),
        ));
    }
    let ctx = Ctx::new(data, &dd);
    let conds: Vec<Cond> = Cond::TENSOR
        .iter()
        .copied()
        .filter(|&c| !(mode == Mode::LambdaZero && c == Cond::A15))
        .collect();
    let mut records: Vec<Record> = conds
        .par_iter()
        .map(|&c| {
            let start = Instant::now();
            Record::from_residual(c.name(), c.equation(), &ctx.residual(c)).with_elapsed(start)
        })
        .collect();
    if mode == Mode::LambdaZero {
        let start = Instant::now();
        let lz = crate::algebra::check_lambda_zero(data)?;
        let mut rec = Record::new(
            "A15",
            "C - (Λ⊤Λ)C in the ideal, C = (R~ + I)T",
            lz.pass,
        )
        .with_note(lz.note.clone());
        if !lz.pass {
            rec.residual = residual_entries(&lz.c);
        }
        records.push(rec.with_elapsed(start));
    }
    let start = Instant::now();
    let minus_two = -F::from_i64(2);
    let a16 = if data.lambda == minus_two {
        let res = ctx.residual(Cond::A16);
        let note = if res.is_zero() {
            "λ = -2: (R - I)^2 = 0, so R - I is nilpotent and the antisymmetric projector is unavailable"
        } else {
            "λ = -2 but (R - I)^2 does not vanish"
        };
        Record::from_residual("A16", Cond::A16.equation(), &res).with_note(note)
    } else {
        Record::new("A16", Cond::A16.equation(), true).with_note("not applicable: λ ≠ -2")
    };
    records.push(a16.with_elapsed(start));
    Ok(Report::new(records))
}

/// Checks the claimed implications between conditions on this datum. Each
/// record passes iff the premises fail or the conclusion holds.
pub fn implication_suite<F: Field>(data: &InhomogeneousData<F>) -> Result<Report> {
    let dd = data.derive()?;
    let ctx = Ctx::new(data, &dd);
    let holds = |c: Cond| ctx.residual(c).is_zero();
    let base = [
        Cond::A1,
        Cond::A3,
        Cond::A5,
        Cond::A10,
        Cond::A12,
        Cond::A14,
        Cond::A15,
    ];
    let base_ok = base.iter().all(|&c| holds(c));
    let table: [(&[Cond], Cond); 8] = [
        (&[Cond::A5, Cond::A3], Cond::A6),
        (&[Cond::A5, Cond::A3], Cond::A7),
        (&[Cond::A5, Cond::A3], Cond::A8),
        (&[Cond::A10], Cond::A11a),
        (&[Cond::A10], Cond::A11b),
        (&[Cond::A10], Cond::A11c),
        (&[Cond::A12], Cond::A13a),
        (&[Cond::A12], Cond::A13b),
    ];
    let records = table
        .par_iter()
        .map(|(prem, concl)| {
            let start = Instant::now();
            let names: Vec<&str> = prem.iter().map(|c| c.name()).collect();
            let name = format!("{} => {}", names.join("+"), concl.name());
            let premises = prem.iter().all(|&c| holds(c));
            let residual = ctx.residual(*concl);
            let mut rec = if premises {
                Record::from_residual(name, concl.equation(), &residual)
            } else {
                Record::new(name, concl.equation(), true)
                    .with_note("premises fail on this datum; implication holds vacuously")
            };
            if !base_ok {
                rec.note = Some(format!(
                    "{}base conditions do not all hold",
                    rec.note.map(|n| format!("{n}; ")).unwrap_or_default()
                ));
            }
            rec.with_elapsed(start)
        })
        .collect();
    Ok(Report::new(records))
}

fn parse_entry(v: &Value, what: &str) -> Result<RationalFunction> {
    match v {
        Value::String(s) => parse_scalar(s).map_err(|e| Error::InvalidData(format!("{what}: {e}"))),
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(RationalFunction::from_int(i))
            } else {
                Err(Error::InvalidData(format!("{what}: {n} is not an integer; use scalar text")))
            }
        }
        other => Err(Error::InvalidData(format!("{what}: expected a scalar, got {other}"))),
    }
}

fn parse_rows(v: Option<&Value>, rows: usize, cols: usize, what: &str) -> Result<Vec<RationalFunction>> {
    let arr = v
        .and_then(Value::as_array)
        .ok_or_else(|| Error::InvalidData(format!("missing array field {what}")))?;
    if arr.len() != rows {
        return Err(Error::InvalidData(format!("{what} needs {rows} rows, got {}", arr.len())));
    }
    let mut out = Vec::with_capacity(rows * cols);
    for (i, row) in arr.iter().enumerate() {
        let row = row
            .as_array()
            .ok_or_else(|| Error::InvalidData(format!("{what} row {} is not an array", i + 1)))?;
        if row.len() != cols {
            return Err(Error::InvalidData(format!(
                "{what} row {} needs {cols} entries, got {}",
                i + 1,
                row.len()
            )));
        }
        for (j, x) in row.iter().enumerate() {
            out.push(parse_entry(x, &format!("{what}[{}][{}]", i + 1, j + 1))?);
        }
    }
    Ok(out)
}

impl InhomogeneousData<RationalFunction> {
    pub fn from_json(text: &str) -> Result<Self> {
        let v: Value = serde_json::from_str(text)?;
        let n = v
            .get("N")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::InvalidData("missing integer field N".into()))? as usize;
        if n == 0 {
            return Err(Error::InvalidData("N must be at least 1".into()));
        }
        let lambda = parse_entry(
            v.get("lambda")
                .ok_or_else(|| Error::InvalidData("missing field lambda".into()))?,
            "lambda",
        )?;
        let n2 = n * n;
        let r = Tensor::from_vec(n, 2, 2, parse_rows(v.get("R"), n2, n2, "R")?)?;
        let z = Tensor::from_vec(n, 2, 1, parse_rows(v.get("Z"), n2, n, "Z")?)?;
        let t_arr = v
            .get("T")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::InvalidData("missing array field T".into()))?;
        if t_arr.len() != n2 {
            return Err(Error::InvalidData(format!("T needs {n2} entries, got {}", t_arr.len())));
        }
        let t_entries = t_arr
            .iter()
            .enumerate()
            .map(|(i, x)| parse_entry(x, &format!("T[{}]", i + 1)))
            .collect::<Result<Vec<_>>>()?;
        let t = Tensor::from_vec(n, 2, 0, t_entries)?;
        Self::new(n, r, z, t, lambda)
    }

    pub fn to_json_value(&self) -> Value {
        let rows = |x: &Tensor<RationalFunction>| -> Vec<Vec<String>> {
            (0..x.rows())
                .map(|i| (0..x.cols()).map(|j| x.at(i, j).to_string()).collect())
                .collect()
        };
        json!({
            "N": self.n,
            "lambda": self.lambda.to_string(),
            "R": rows(&self.r),
            "Z": rows(&self.z),
            "T": self.t.entries().iter().map(|x| x.to_string()).collect::<Vec<_>>(),
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_json_value()).expect("data serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Operator, Scalar};
    use num_traits::Zero;

    fn s(t: &str) -> Scalar {
        parse_scalar(t).unwrap()
    }

    fn glq2() -> InhomogeneousData<Scalar> {
        let e = ["1", "0", "0", "0", "0", "1 - q^-2", "q^-1", "0", "0", "q^-1", "0", "0", "0", "0", "0", "1"];
        let r = Operator::from_vec(2, 2, 2, e.iter().map(|x| s(x)).collect()).unwrap();
        InhomogeneousData::new(2, r, Operator::zeros(2, 2, 1), Operator::zeros(2, 2, 0), s("q^-2 - 1")).unwrap()
    }

    fn scalar_data(r: &str, z: &str, t: &str, l: &str) -> InhomogeneousData<Scalar> {
        InhomogeneousData::new(
            1,
            Operator::from_vec(1, 2, 2, vec![s(r)]).unwrap(),
            Operator::from_vec(1, 2, 1, vec![s(z)]).unwrap(),
            Operator::from_vec(1, 2, 0, vec![s(t)]).unwrap(),
            s(l),
        )
        .unwrap()
    }

    #[test]
    fn derived_quantities_for_glq2() {
        let d = glq2();
        let dd = d.derive().unwrap();
        let lambda = s("q^-2 - 1");
        assert_eq!(dd.rtilde, d.r.add(&Operator::scalar_identity(2, 2, &lambda)).unwrap());
        // Hecke cross-check: R~ = q^-2 R^-1
        assert_eq!(dd.rtilde, dd.rinv.scale(&s("q^-2")));
        assert!(dd.ztilde.is_zero());
    }

    #[test]
    fn lambda_minus_one_is_rejected() {
        let r = Operator::identity(1, 2);
        let err = InhomogeneousData::new(1, r, Operator::zeros(1, 2, 1), Operator::zeros(1, 2, 0), s("-1"));
        assert!(matches!(err, Err(Error::LambdaMinusOne)));
    }

    #[test]
    fn glq2_passes_strict() {
        let rep = check_axioms(&glq2(), Mode::Strict).unwrap();
        assert!(rep.all_pass(), "{}", rep.human());
        assert_eq!(rep.records.len(), 19);
    }

    #[test]
    fn corrupted_r_fails_yang_baxter() {
        let mut d = glq2();
        d.r.set(1, 2, s("2"));
        let rep = check_axioms(&d, Mode::Strict).unwrap();
        assert!(!rep.get("A5").unwrap().pass);
    }

    /// At N = 1 the conditions collapse to scalar identities in r, z, t, λ.
    #[test]
    fn scalar_reductions_at_n1() {
        for (r, z, t, l) in [("2", "3", "5", "1"), ("q", "1", "q", "q^2"), ("-3", "2", "1", "2")] {
            let d = scalar_data(r, z, t, l);
            let (r, z, t, l) = (s(r), s(z), s(t), s(l));
            let one = Scalar::from_int(1);
            let res = |c| condition_residual(&d, c).unwrap().entries()[0].clone();
            assert_eq!(res(Cond::A1), (&r - &one) * (&r + &one + &l));
            assert_eq!(res(Cond::A12), &t * (&one - (&r + &l) * (&r + &l)));
            assert_eq!(res(Cond::A14), -(&z * &t * (&one + &r + &l)));
            assert_eq!(res(Cond::A15), &t * (&one + &r + &l));
            assert!(res(Cond::A5).is_zero());
            assert!(res(Cond::A10).is_zero());
        }
    }

    #[test]
    fn n1_family_with_nonzero_translation_terms() {
        // r = -1 - λ with arbitrary z, t solves every condition
        let d = scalar_data("-1 - q", "q + 2", "3*q^-1", "q");
        let rep = check_axioms(&d, Mode::Strict).unwrap();
        assert!(rep.all_pass(), "{}", rep.human());
        let imp = implication_suite(&d).unwrap();
        assert!(imp.all_pass(), "{}", imp.human());
        assert!(imp.records.iter().all(|r| r.note.is_none()));
    }

    #[test]
    fn lambda_minus_two_diagnostic() {
        let d = scalar_data("1", "0", "0", "-2");
        let rep = check_axioms(&d, Mode::Strict).unwrap();
        let a16 = rep.get("A16").unwrap();
        assert!(a16.pass);
        assert!(a16.note.as_deref().unwrap().contains("nilpotent"));
    }

    #[test]
    fn json_round_trip_and_integer_entries() {
        let d = glq2();
        let back = InhomogeneousData::from_json(&d.to_json()).unwrap();
        assert_eq!(back, d);
        let text = r#"{"N":1,"lambda":0,"R":[[1]],"Z":[[0]],"T":[0]}"#;
        let d1 = InhomogeneousData::from_json(text).unwrap();
        assert!(d1.lambda.is_zero());
        let bad = r#"{"N":1,"lambda":"-1","R":[[1]],"Z":[[0]],"T":[0]}"#;
        assert!(matches!(InhomogeneousData::from_json(bad), Err(Error::LambdaMinusOne)));
        let short = r#"{"N":2,"lambda":"0","R":[[1]],"Z":[[0]],"T":[0]}"#;
        assert!(InhomogeneousData::from_json(short).is_err());
    }
}
