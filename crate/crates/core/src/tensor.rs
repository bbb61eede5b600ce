//! Dense tensors on V^⊗k with `upper` row axes and `lower` column axes.
//!
//! An operator on V⊗V is stored as `A[(n,m),(l,k)]`: row multi-index `(n,m)`
//! is the image pair, column multi-index `(l,k)` the source pair. Multi-indices
//! are flattened big-endian, `(n,m) -> n*N + m`, all indices 0-based.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::Field;

#[derive(Clone, PartialEq)]
pub struct Tensor<F> {
    n: usize,
    upper: usize,
    lower: usize,
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

pub fn flatten(n: usize, idx: &[usize]) -> usize {
    idx.iter().fold(0, |acc, &i| acc * n + i)
}

pub fn unflatten(n: usize, k: usize, mut flat: usize) -> Vec<usize> {
    let mut out = vec![0; k];
    for slot in out.iter_mut().rev() {
        *slot = flat % n;
        flat /= n;
    }
    out
}

impl<F: Field> Tensor<F> {
    pub fn zeros(n: usize, upper: usize, lower: usize) -> Self {
        let rows = n.pow(upper as u32);
        let cols = n.pow(lower as u32);
        Tensor {
            n,
            upper,
            lower,
            rows,
            cols,
            data: vec![F::zero(); rows * cols],
        }
    }

    pub fn from_fn(n: usize, upper: usize, lower: usize, mut f: impl FnMut(usize, usize) -> F) -> Self {
        let mut t = Self::zeros(n, upper, lower);
        for r in 0..t.rows {
            for c in 0..t.cols {
                t.data[r * t.cols + c] = f(r, c);
            }
        }
        t
    }

    /// Builds from row-major entries; `entries.len()` must be `N^upper * N^lower`.
    pub fn from_vec(n: usize, upper: usize, lower: usize, entries: Vec<F>) -> Result<Self> {
        let mut t = Self::zeros(n, upper, lower);
        if entries.len() != t.data.len() {
            return Err(Error::Shape(format!(
                "expected {} entries for a {}x{} tensor, got {}",
                t.data.len(),
                t.rows,
                t.cols,
                entries.len()
            )));
        }
        t.data = entries;
        Ok(t)
    }

    /// Identity on V^⊗k.
    pub fn identity(n: usize, k: usize) -> Self {
        Self::from_fn(n, k, k, |r, c| if r == c { F::one() } else { F::zero() })
    }

    /// `P[(n,m),(l,k)] = δ(n,k) δ(m,l)`.
    pub fn flip(n: usize) -> Self {
        Self::from_fn(n, 2, 2, |r, c| {
            let (a, b) = (r / n, r % n);
            let (l, k) = (c / n, c % n);
            if a == k && b == l {
                F::one()
            } else {
                F::zero()
            }
        })
    }

    pub fn scalar_identity(n: usize, k: usize, s: &F) -> Self {
        Self::from_fn(n, k, k, |r, c| if r == c { s.clone() } else { F::zero() })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn upper(&self) -> usize {
        self.upper
    }

    pub fn lower(&self) -> usize {
        self.lower
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.upper == self.lower
    }

    pub fn entries(&self) -> &[F] {
        &self.data
    }

    pub fn at(&self, r: usize, c: usize) -> &F {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: F) {
        self.data[r * self.cols + c] = v;
    }

    /// Entry by multi-indices, e.g. `get(&[n, m], &[l, k])`.
    pub fn get(&self, up: &[usize], low: &[usize]) -> &F {
        debug_assert_eq!(up.len(), self.upper);
        debug_assert_eq!(low.len(), self.lower);
        self.at(flatten(self.n, up), flatten(self.n, low))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    /// Nonzero entries as `(row multi-index, column multi-index, value)`.
    pub fn nonzero_entries(&self) -> Vec<(Vec<usize>, Vec<usize>, F)> {
        let mut out = Vec::new();
        for r in 0..self.rows {
            for c in 0..self.cols {
                let v = self.at(r, c);
                if !v.is_zero() {
                    out.push((
                        unflatten(self.n, self.upper, r),
                        unflatten(self.n, self.lower, c),
                        v.clone(),
                    ));
                }
            }
        }
        out
    }

    fn same_shape(&self, other: &Self, what: &str) -> Result<()> {
        if self.n != other.n || self.upper != other.upper || self.lower != other.lower {
            return Err(Error::Shape(format!(
                "{what}: {} vs {}",
                self.shape_string(),
                other.shape_string()
            )));
        }
        Ok(())
    }

    pub fn shape_string(&self) -> String {
        format!("N={} ({} upper, {} lower)", self.n, self.upper, self.lower)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_shape(other, "add")?;
        let mut out = self.clone();
        for (x, y) in out.data.iter_mut().zip(&other.data) {
            if !y.is_zero() {
                *x = x.clone() + y;
            }
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_shape(other, "sub")?;
        let mut out = self.clone();
        for (x, y) in out.data.iter_mut().zip(&other.data) {
            if !y.is_zero() {
                *x = x.clone() - y;
            }
        }
        Ok(out)
    }

    pub fn scale(&self, s: &F) -> Self {
        let mut out = self.clone();
        for x in out.data.iter_mut() {
            if !x.is_zero() {
                *x = x.clone() * s;
            }
        }
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for x in out.data.iter_mut() {
            if !x.is_zero() {
                *x = -x.clone();
            }
        }
        out
    }

    /// `(A⊗B)[(i,j),(k,l)] = A[i,k] B[j,l]`.
    pub fn kron(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::Shape(format!(
                "kron: {} vs {}",
                self.shape_string(),
                other.shape_string()
            )));
        }
        let mut out = Self::zeros(self.n, self.upper + other.upper, self.lower + other.lower);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.rows {
                    for l in 0..other.cols {
                        let b = other.at(j, l);
                        if b.is_zero() {
                            continue;
                        }
                        out.set(i * other.rows + j, k * other.cols + l, a.clone() * b);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Matrix product `self * other`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.n != other.n || self.lower != other.upper {
            return Err(Error::Shape(format!(
                "compose: {} after {}",
                self.shape_string(),
                other.shape_string()
            )));
        }
        let mut out = Self::zeros(self.n, self.upper, other.lower);
        for i in 0..self.rows {
            let mut acc: Vec<Option<F>> = vec![None; other.cols];
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for (j, slot) in acc.iter_mut().enumerate() {
                    let b = other.at(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let t = a.clone() * b;
                    *slot = Some(match slot.take() {
                        None => t,
                        Some(s) => s + t,
                    });
                }
            }
            for (j, v) in acc.into_iter().enumerate() {
                if let Some(v) = v {
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    /// Exact inverse of a square operator.
    pub fn invert(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::Shape(format!("invert: {} is not square", self.shape_string())));
        }
        let id = Self::identity(self.n, self.upper);
        let x = solve_dense(self.rows, &self.data, self.cols, &id.data, id.cols)
            .ok_or_else(|| Error::Singular("operator is not invertible".into()))?;
        Ok(Tensor {
            data: x,
            ..id
        })
    }

    /// Applies `f` entrywise, changing the scalar type.
    pub fn map<G: Field>(&self, f: impl FnMut(&F) -> G) -> Tensor<G> {
        Tensor {
            n: self.n,
            upper: self.upper,
            lower: self.lower,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    /// Applies `f` entrywise, failing on the first error.
    pub fn try_map<G: Field>(&self, f: impl FnMut(&F) -> Result<G>) -> Result<Tensor<G>> {
        Ok(Tensor {
            n: self.n,
            upper: self.upper,
            lower: self.lower,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect::<Result<_>>()?,
        })
    }
}

/// Solves `A X = B` for a square `A` (`n x n`, row-major) and `B` with `m`
/// columns. Fraction-free (Bareiss) forward elimination, then back
/// substitution. `None` if `A` is singular.
pub fn solve_dense<F: Field>(n: usize, a: &[F], a_cols: usize, b: &[F], m: usize) -> Option<Vec<F>> {
    assert_eq!(a_cols, n, "solve_dense needs a square matrix");
    let w = n + m;
    let mut aug: Vec<Vec<F>> = (0..n)
        .map(|i| {
            let mut row = a[i * n..(i + 1) * n].to_vec();
            row.extend_from_slice(&b[i * m..(i + 1) * m]);
            row
        })
        .collect();
    let mut prev = F::one();
    for k in 0..n {
        let piv = (k..n).find(|&i| !aug[i][k].is_zero())?;
        aug.swap(k, piv);
        let (top, rest) = aug.split_at_mut(k + 1);
        let pivot_row = &top[k];
        let akk = pivot_row[k].clone();
        for row in rest.iter_mut() {
            let aik = row[k].clone();
            for j in (k + 1)..w {
                let lhs = if row[j].is_zero() {
                    F::zero()
                } else {
                    akk.clone() * &row[j]
                };
                let rhs = if aik.is_zero() || pivot_row[j].is_zero() {
                    F::zero()
                } else {
                    aik.clone() * &pivot_row[j]
                };
                let num = lhs - rhs;
                row[j] = if num.is_zero() { num } else { num / &prev };
            }
            row[k] = F::zero();
        }
        prev = akk;
    }
    let mut x = vec![F::zero(); n * m];
    for col in 0..m {
        for i in (0..n).rev() {
            let mut s = aug[i][n + col].clone();
            for j in (i + 1)..n {
                if !aug[i][j].is_zero() && !x[j * m + col].is_zero() {
                    s = s - aug[i][j].clone() * &x[j * m + col];
                }
            }
            x[i * m + col] = if s.is_zero() { s } else { s / &aug[i][i] };
        }
    }
    Some(x)
}

impl<F: fmt::Debug> fmt::Debug for Tensor<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Tensor[N={} ({} upper, {} lower)]", self.n, self.upper, self.lower)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols)
                .map(|c| format!("{:?}", self.data[r * self.cols + c]))
                .collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::parse_scalar;
    use crate::Scalar;
    use num_rational::BigRational;
    use num_traits::{One, Zero};
    use proptest::prelude::*;

    type T = Tensor<Scalar>;

    fn s(t: &str) -> Scalar {
        parse_scalar(t).unwrap()
    }

    /// The glq(2) R-matrix written out by hand.
    fn r_glq2() -> T {
        let e = ["1", "0", "0", "0", "0", "1 - q^-2", "q^-1", "0", "0", "q^-1", "0", "0", "0", "0", "0", "1"];
        T::from_vec(2, 2, 2, e.iter().map(|x| s(x)).collect()).unwrap()
    }

    #[test]
    fn kron_of_identities() {
        assert_eq!(T::identity(2, 1).kron(&T::identity(2, 1)).unwrap(), T::identity(2, 2));
    }

    #[test]
    fn kron_with_identity_acts_on_first_factors() {
        let r = r_glq2();
        let ri = r.kron(&T::identity(2, 1)).unwrap();
        assert_eq!(ri.rows(), 8);
        for a in 0..2 {
            for b in 0..2 {
                for c in 0..2 {
                    for d in 0..2 {
                        for e in 0..2 {
                            for f in 0..2 {
                                let expect = if c == f { r.get(&[a, b], &[d, e]).clone() } else { Scalar::from_int(0) };
                                assert_eq!(ri.get(&[a, b, c], &[d, e, f]), &expect);
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn flip_properties() {
        let p1 = T::flip(1);
        assert_eq!(p1, T::identity(1, 2));
        let p = T::flip(2);
        assert_eq!(p.compose(&p).unwrap(), T::identity(2, 2));
        // basis pair (1,2) -> (2,1): column (0,1) has its one in row (1,0)
        assert!(p.get(&[1, 0], &[0, 1]).is_one());
        assert!(p.get(&[0, 1], &[0, 1]).is_zero());
        let pp = p.kron(&p).unwrap();
        assert_eq!(pp.compose(&pp).unwrap(), T::identity(2, 4));
        assert_eq!(p.invert().unwrap(), p);
    }

    #[test]
    fn glq2_product_with_tilde() {
        // R~ = R + lambda I with lambda = q^-2 - 1; R R~ = I + lambda I
        let r = r_glq2();
        let lambda = s("q^-2 - 1");
        let rt = r.add(&T::scalar_identity(2, 2, &lambda)).unwrap();
        let lhs = r.compose(&rt).unwrap();
        let rhs = T::scalar_identity(2, 2, &s("q^-2"));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn glq2_inverse() {
        let r = r_glq2();
        let lambda = s("q^-2 - 1");
        let expect = r
            .add(&T::scalar_identity(2, 2, &lambda))
            .unwrap()
            .scale(&s("q^2"));
        let inv = r.invert().unwrap();
        assert_eq!(inv, expect);
        assert_eq!(r.compose(&inv).unwrap(), T::identity(2, 2));
    }

    #[test]
    fn singular_inputs_are_rejected() {
        assert!(matches!(T::zeros(2, 2, 2).invert(), Err(Error::Singular(_))));
        assert!(T::zeros(2, 2, 1).invert().is_err());
        assert!(T::identity(2, 2).compose(&T::identity(2, 1)).is_err());
    }

    #[test]
    fn compose_with_identity() {
        let r = r_glq2();
        assert_eq!(r.compose(&T::identity(2, 2)).unwrap(), r);
    }

    #[test]
    fn kron_of_non_square_shapes() {
        let z = T::from_fn(2, 2, 1, |r, c| Scalar::from_int((r * 2 + c) as i64));
        let zi = z.kron(&T::identity(2, 1)).unwrap();
        assert_eq!((zi.upper(), zi.lower()), (3, 2));
        assert_eq!(zi.get(&[1, 0, 1], &[1, 1]), &Scalar::from_int(5));
    }

    fn arb_mat(n: usize, k: usize) -> impl Strategy<Value = Tensor<BigRational>> {
        let len = n.pow(2 * k as u32);
        prop::collection::vec(-3i64..=3, len).prop_map(move |v| {
            Tensor::from_vec(n, k, k, v.into_iter().map(BigRational::from_i64).collect()).unwrap()
        })
    }

    proptest! {
        #[test]
        fn mixed_product_property(a in arb_mat(2, 1), b in arb_mat(2, 1), c in arb_mat(2, 1), d in arb_mat(2, 1)) {
            let lhs = a.kron(&b).unwrap().compose(&c.kron(&d).unwrap()).unwrap();
            let rhs = a.compose(&c).unwrap().kron(&b.compose(&d).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn kron_and_compose_associate(a in arb_mat(2, 1), b in arb_mat(2, 1), c in arb_mat(2, 1)) {
            prop_assert_eq!(
                a.kron(&b).unwrap().kron(&c).unwrap(),
                a.kron(&b.kron(&c).unwrap()).unwrap()
            );
            prop_assert_eq!(
                a.compose(&b).unwrap().compose(&c).unwrap(),
                a.compose(&b.compose(&c).unwrap()).unwrap()
            );
        }

        #[test]
        fn inverse_is_exact(a in arb_mat(2, 2)) {
            if let Ok(inv) = a.invert() {
                prop_assert_eq!(a.compose(&inv).unwrap(), Tensor::identity(2, 2));
            }
        }
    }
}
