//! Built-in data: the undeformed case, the standard GL_q(N) braid matrix, and
//! a brute-force solver for N = 1.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::qgdata::{check_axioms, InhomogeneousData, Mode};
use crate::tensor::Tensor;
use crate::Scalar;

/// `R = flip`, `Z = 0`, `T = 0`, `λ = 0`.
pub fn classical(n: usize) -> InhomogeneousData<Scalar> {
    InhomogeneousData::new(
        n,
        Tensor::flip(n),
        Tensor::zeros(n, 2, 1),
        Tensor::zeros(n, 2, 0),
        Scalar::zero(),
    )
    .expect("classical data is well formed")
}

/// `R = R̂/q` with `R̂` the standard GL_q(N) braid matrix, `λ = q^-2 − 1`,
/// `Z = 0`, `T = 0`.
pub fn glq(n: usize) -> Result<InhomogeneousData<Scalar>> {
    if !(2..=3).contains(&n) {
        return Err(Error::InvalidData(format!(
            "glq is available for N = 2 and N = 3, not {n}"
        )));
    }
    let q = Scalar::q();
    let qinv = Scalar::q_pow(-1);
    let one = Scalar::one();
    // q - q^-1, divided by q
    let off = &one - Scalar::q_pow(-2);
    let mut r = Tensor::zeros(n, 2, 2);
    for i in 0..n {
        for j in 0..n {
            let row = i * n + j;
            if i == j {
                r.set(row, row, &q * &qinv);
            } else {
                // E_ij ⊗ E_ji
                r.set(row, j * n + i, qinv.clone());
                if i < j {
                    // E_ii ⊗ E_jj
                    r.set(row, row, off.clone());
                }
            }
        }
    }
    InhomogeneousData::new(
        n,
        r,
        Tensor::zeros(n, 2, 1),
        Tensor::zeros(n, 2, 0),
        Scalar::q_pow(-2) - one,
    )
}

/// Requirement on one of the unknowns `Z`, `T`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Want {
    #[default]
    Any,
    Zero,
    Nonzero,
}

impl Want {
    fn admits(self, x: &Scalar) -> bool {
        match self {
            Want::Any => true,
            Want::Zero => x.is_zero(),
            Want::Nonzero => !x.is_zero(),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct N1Constraints {
    pub lambda: Option<Scalar>,
    pub z: Want,
    pub t: Want,
}

/// Laurent polynomials `a q^-1 + b + c q` with `a, b, c ∈ {-1, 0, 1}`.
fn laurent_grid() -> Vec<Scalar> {
    let mut out = Vec::new();
    for a in -1..=1 {
        for b in -1..=1 {
            for c in -1..=1 {
                out.push(
                    Scalar::q_pow(-1) * Scalar::from_int(a)
                        + Scalar::from_int(b)
                        + Scalar::q() * Scalar::from_int(c),
                );
            }
        }
    }
    out
}

fn scalar_datum(r: &Scalar, z: &Scalar, t: &Scalar, lambda: &Scalar) -> Result<InhomogeneousData<Scalar>> {
    InhomogeneousData::new(
        1,
        Tensor::from_vec(1, 2, 2, vec![r.clone()])?,
        Tensor::from_vec(1, 2, 1, vec![z.clone()])?,
        Tensor::from_vec(1, 2, 0, vec![t.clone()])?,
        lambda.clone(),
    )
}

/// Checker mode for a datum: lambda-zero when `λ = 0`, strict otherwise.
pub fn mode_for(data: &InhomogeneousData<Scalar>) -> Mode {
    if data.lambda.is_zero() {
        Mode::LambdaZero
    } else {
        Mode::Strict
    }
}

/// Enumerates N = 1 data with `λ, r` on the Laurent grid (or the fixed `λ`)
/// and `z, t ∈ {-1, 0, 1}`. Candidates are pruned with the scalar form of the
/// conditions and every survivor is confirmed by [`check_axioms`].
pub fn solve_n1(c: &N1Constraints) -> Result<Vec<InhomogeneousData<Scalar>>> {
    let grid = laurent_grid();
    let lambdas = match &c.lambda {
        Some(l) => vec![l.clone()],
        None => grid.clone(),
    };
    let small: Vec<Scalar> = (-1..=1).map(Scalar::from_int).collect();
    let one = Scalar::one();
    let mut out = Vec::new();
    for lambda in &lambdas {
        if *lambda == -one.clone() {
            continue;
        }
        for r in &grid {
            if r.is_zero() {
                continue;
            }
            // (r - 1)(r + 1 + λ) = 0
            let s = r + &one + lambda;
            if !((r - &one) * &s).is_zero() {
                continue;
            }
            let rl = r + lambda;
            for z in small.iter().filter(|z| c.z.admits(z)) {
                for t in small.iter().filter(|t| c.t.admits(t)) {
                    let a12 = t * (&one - &rl * &rl);
                    let a14 = z * t * &s;
                    let a15 = t * &s;
                    if !(a12.is_zero() && a14.is_zero() && a15.is_zero()) {
                        continue;
                    }
                    let d = scalar_datum(r, z, t, lambda)?;
                    if check_axioms(&d, mode_for(&d))?.all_pass() {
                        out.push(d);
                    }
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::parse_scalar;
    use num_rational::BigRational;

    #[test]
    fn glq_entries() {
        let d = glq(2).unwrap();
        let texts: Vec<String> = d.r.entries().iter().map(|x| x.to_string()).collect();
        assert_eq!(
            texts,
            ["1", "0", "0", "0", "0", "1 - q^-2", "q^-1", "0", "0", "q^-1", "0", "0", "0", "0", "0", "1"]
        );
        assert_eq!(d.lambda, parse_scalar("q^-2 - 1").unwrap());
        assert!(glq(4).is_err());
    }

    #[test]
    fn glq_hecke_relation() {
        for n in [2, 3] {
            let d = glq(n).unwrap();
            let i = Tensor::identity(n, 2);
            let lhs = d
                .r
                .sub(&i)
                .unwrap()
                .compose(&d.r.add(&i.scale(&Scalar::q_pow(-2))).unwrap())
                .unwrap();
            assert!(lhs.is_zero());
        }
    }

    #[test]
    fn glq_specializes_to_classical_at_q_one() {
        let one = BigRational::one();
        for n in [2, 3] {
            let g = glq(n).unwrap().map(|x| x.eval(&one).expect("regular at q = 1"));
            let c = classical(n).map(|x| x.eval(&one).unwrap());
            assert_eq!(g, c);
        }
    }

    #[test]
    fn solver_finds_trivial_datum() {
        let c = N1Constraints {
            lambda: None,
            z: Want::Zero,
            t: Want::Zero,
        };
        let sols = solve_n1(&c).unwrap();
        assert!(sols.iter().any(|d| d.r.entries()[0].is_one() && d.lambda.is_zero()));
    }

    #[test]
    fn solver_respects_nonzero_and_lambda() {
        let c = N1Constraints {
            lambda: None,
            z: Want::Nonzero,
            t: Want::Any,
        };
        let sols = solve_n1(&c).unwrap();
        assert!(!sols.is_empty());
        for d in &sols {
            assert!(!d.z.entries()[0].is_zero());
            assert!(check_axioms(d, mode_for(d)).unwrap().all_pass());
        }
        let none = solve_n1(&N1Constraints {
            lambda: Some(-Scalar::one()),
            ..Default::default()
        })
        .unwrap();
        assert!(none.is_empty());
    }

    /// Independent oracle: the closed-form solution set at N = 1.
    #[test]
    fn solver_matches_closed_form() {
        let lambda = parse_scalar("q").unwrap();
        let sols = solve_n1(&N1Constraints {
            lambda: Some(lambda.clone()),
            ..Default::default()
        })
        .unwrap();
        // r = -1 - q lies on the grid (any z, t), r = 1 forces t = 0
        let expected = 9 + 3;
        assert_eq!(sols.len(), expected);
        for d in &sols {
            let r = &d.r.entries()[0];
            let t = &d.t.entries()[0];
            assert!(*r == -Scalar::one() - &lambda || (r.is_one() && t.is_zero()));
        }
    }
}
