//! The functionals `f`, `f̃`, `η̃^k`, `η̃_k` as one multiplicative matrix
//! representation `Φ` of the generator algebra.
//!
//! `Φ(a)` acts on the index set `J = {single(m)} ∪ {pair(x, y)}` of size
//! `N + N²`, with blocks
//!
//! ```text
//! Φ(a)[single(n), single(m)] = f^n_m(a)
//! Φ(a)[single(n), pair(k,l)] = f^{nk}_l(a)  = (η̃^k ⋆ f^n_l)(a)
//! Φ(a)[pair(m,n), single(q)] = f^n_{mq}(a)  = (η̃_m ⋆ f^n_q)(a)
//! Φ(a)[pair(m,n), pair(k,l)] = f^{nk}_{ml}(a) = (f̃^k_m ⋆ f^n_l)(a)
//! ```
//!
//! Only the values on generators are tabulated; everything else follows from
//! multiplicativity.

use std::collections::BTreeMap;
use std::fmt;
use std::time::Instant;

use rayon::prelude::*;

use crate::algebra::{build_relations, coproduct, counit, Family, Gen, NcPoly, Word};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::qgdata::InhomogeneousData;
use crate::report::{Record, Report, ResidualEntry};
use crate::tensor::solve_dense;

/// Dense square matrix, row-major.
#[derive(Clone, PartialEq)]
pub struct Matrix<F> {
    dim: usize,
    data: Vec<F>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(dim: usize) -> Self {
        Matrix {
            dim,
            data: vec![F::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.data[i * dim + i] = F::one();
        }
        m
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> F) -> Self {
        let mut data = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                data.push(f(i, j));
            }
        }
        Matrix { dim, data }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn at(&self, i: usize, j: usize) -> &F {
        &self.data[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F) {
        self.data[i * self.dim + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn rows(&self) -> impl Iterator<Item = &[F]> {
        self.data.chunks(self.dim.max(1))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let d = self.dim;
        let mut out = Self::zeros(d);
        for i in 0..d {
            for k in 0..d {
                let a = &self.data[i * d + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..d {
                    let b = &other.data[k * d + j];
                    if !b.is_zero() {
                        out.data[i * d + j] = out.data[i * d + j].clone() + a.clone() * b;
                    }
                }
            }
        }
        out
    }

    pub fn add_scaled(&mut self, other: &Self, c: &F) {
        for (x, y) in self.data.iter_mut().zip(&other.data) {
            if !y.is_zero() {
                *x = x.clone() + y.clone() * c;
            }
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &-F::one());
        out
    }
}

impl<F: Field> fmt::Display for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.rows() {
            let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

impl<F: fmt::Debug> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Matrix")
            .field("dim", &self.dim)
            .field("data", &self.data)
            .finish()
    }
}

/// Index of `single(m)` in `J`, 0-based.
pub fn single(m: usize) -> usize {
    m
}

/// Index of `pair(x, y)` in `J`, 0-based.
pub fn pair(n: usize, x: usize, y: usize) -> usize {
    n + x * n + y
}

/// 1-based label of an index in `J`: `3` or `(1,2)`.
pub fn index_label(n: usize, j: usize) -> String {
    if j < n {
        (j + 1).to_string()
    } else {
        let k = j - n;
        format!("({},{})", k / n + 1, k % n + 1)
    }
}

/// Values of `f`, `f̃` (as `N x N` tables, `[n * N + m]` holding `f^n_m`)
/// and `η̃^k`, `η̃_k` (length `N`) on each generator.
#[derive(Clone, Debug)]
pub struct ValueTables<F> {
    pub n: usize,
    pub f: BTreeMap<Gen, Vec<F>>,
    pub ft: BTreeMap<Gen, Vec<F>>,
    pub eta_up: BTreeMap<Gen, Vec<F>>,
    pub eta_dn: BTreeMap<Gen, Vec<F>>,
}

impl<F: Field> ValueTables<F> {
    fn lookup(table: &BTreeMap<Gen, Vec<F>>, g: Gen) -> Result<&Vec<F>> {
        table
            .get(&g)
            .ok_or_else(|| Error::UnknownGenerator(format!("no functional value for {g}")))
    }

    fn delta(x: usize, y: usize) -> F {
        if x == y {
            F::one()
        } else {
            F::zero()
        }
    }

    /// `f^x_y(g)`, with `g = None` the unit.
    pub fn f(&self, g: Option<Gen>, x: usize, y: usize) -> Result<F> {
        match g {
            None => Ok(Self::delta(x, y)),
            Some(g) => Ok(Self::lookup(&self.f, g)?[x * self.n + y].clone()),
        }
    }

    /// `f̃^x_y(g)`.
    pub fn ft(&self, g: Option<Gen>, x: usize, y: usize) -> Result<F> {
        match g {
            None => Ok(Self::delta(x, y)),
            Some(g) => Ok(Self::lookup(&self.ft, g)?[x * self.n + y].clone()),
        }
    }

    /// `η̃^k(g)`.
    pub fn eta_up(&self, g: Option<Gen>, k: usize) -> Result<F> {
        match g {
            None => Ok(F::zero()),
            Some(g) => Ok(Self::lookup(&self.eta_up, g)?[k].clone()),
        }
    }

    /// `η̃_k(g)`.
    pub fn eta_dn(&self, g: Option<Gen>, k: usize) -> Result<F> {
        match g {
            None => Ok(F::zero()),
            Some(g) => Ok(Self::lookup(&self.eta_dn, g)?[k].clone()),
        }
    }
}

/// `Φ` on every generator `Λ^a_b`, `p^a`, `S(Λ^a_b)`, `S(p^a)`.
#[derive(Clone, Debug)]
pub struct BigRep<F> {
    pub n: usize,
    pub tables: ValueTables<F>,
    pub images: BTreeMap<Gen, Matrix<F>>,
    /// `f(S(S(Λ)))`, needed to peel `f` off the right leg of antipoded words.
    f_ss: BTreeMap<Gen, Vec<F>>,
}

fn table<F: Field>(n: usize, mut f: impl FnMut(usize, usize) -> F) -> Vec<F> {
    let mut v = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            v.push(f(x, y));
        }
    }
    v
}

fn lam(a: usize, b: usize) -> Gen {
    Gen::L(a as u8, b as u8)
}

fn slam(a: usize, b: usize) -> Gen {
    Gen::SL(a as u8, b as u8)
}

fn pg(a: usize) -> Gen {
    Gen::P(a as u8)
}

fn sp(a: usize) -> Gen {
    Gen::SP(a as u8)
}

fn singular(tag: &str) -> Error {
    Error::Singular(format!("{tag}: the linear system is singular"))
}

fn invert_square<F: Field>(dim: usize, a: &[F], tag: &str) -> Result<Vec<F>> {
    let id = Matrix::<F>::identity(dim);
    solve_dense(dim, a, dim, &id.data, dim).ok_or_else(|| singular(tag))
}

/// Given `f` on a family of matrix-coefficient generators `G^a_b` with
/// `Δ(G^a_b) = G^a_c ⊗ G^c_b`, the table of `f ∘ S` fixed by
/// `Σ f^x_l(G^a_c) f^l_y(S(G^c_b)) = δ^x_y δ^a_b`. `value(x, l, a, c)` is
/// `f^x_l(G^a_c)`; the result is indexed `[(l, c), (y, b)]`.
fn antipode_pairing<F: Field>(n: usize, value: impl Fn(usize, usize, usize, usize) -> F, tag: &str) -> Result<Vec<F>> {
    let n2 = n * n;
    let mut a = Vec::with_capacity(n2 * n2);
    for x in 0..n {
        for aa in 0..n {
            for l in 0..n {
                for c in 0..n {
                    a.push(value(x, l, aa, c));
                }
            }
        }
    }
    invert_square(n2, &a, tag)
}

/// Primitive value tables, in dependency order.
pub fn value_tables<F: Field>(data: &InhomogeneousData<F>) -> Result<ValueTables<F>> {
    let n = data.n;
    let n2 = n * n;
    let dd = data.derive()?;
    let (r, z, t, lambda) = (&data.r, &data.z, &data.t, &data.lambda);
    let mut tb = ValueTables {
        n,
        f: BTreeMap::new(),
        ft: BTreeMap::new(),
        eta_up: BTreeMap::new(),
        eta_dn: BTreeMap::new(),
    };
    let zero_vec = vec![F::zero(); n];

    for a in 0..n {
        for b in 0..n {
            // f^x_y(Λ^a_b) = R[(x,a),(b,y)], f̃^x_y(S(Λ^a_b)) = R~[(x,a),(b,y)]
            tb.f.insert(lam(a, b), table(n, |x, y| r.get(&[x, a], &[b, y]).clone()));
            tb.ft
                .insert(slam(a, b), table(n, |x, y| dd.rtilde.get(&[x, a], &[b, y]).clone()));
            // η̃^x(S(Λ^a_b)) = Z[(x,a),b]
            tb.eta_up
                .insert(slam(a, b), (0..n).map(|x| z.get(&[x, a], &[b]).clone()).collect());
            tb.eta_dn.insert(lam(a, b), zero_vec.clone());
            tb.eta_dn.insert(slam(a, b), zero_vec.clone());
        }
    }
    for a in 0..n {
        let lam_delta = (0..n)
            .map(|k| if k == a { lambda.clone() } else { F::zero() })
            .collect();
        tb.eta_dn.insert(sp(a), lam_delta);
        tb.eta_up
            .insert(sp(a), (0..n).map(|x| t.get(&[x, a], &[]).clone()).collect());
        // f^x_y(S(p^a)) = Z[(a,x),y], f̃^x_y(S(p^a)) = Z~[(x,a),y]
        tb.f.insert(sp(a), table(n, |x, y| z.get(&[a, x], &[y]).clone()));
        tb.ft
            .insert(sp(a), table(n, |x, y| dd.ztilde.get(&[x, a], &[y]).clone()));
    }

    // f(S(Λ)) from the antipode pairing with f(Λ)
    let y = antipode_pairing(n, |x, l, a, c| r.get(&[x, a], &[c, l]).clone(), "f(S(Λ)) from f ⋆ f∘S = δ")?;
    for c in 0..n {
        for b in 0..n {
            let v = table(n, |l, yy| y[(l * n + c) * n2 + yy * n + b].clone());
            tb.f.insert(slam(c, b), v);
        }
    }

    // f̃(Λ): Σ f̃^k_m(Λ^a_c) f̃^x_k(S(Λ^c_b)) = δ^x_m δ^a_b
    let mut w = Vec::with_capacity(n2 * n2);
    for c in 0..n {
        for k in 0..n {
            for b in 0..n {
                for x in 0..n {
                    w.push(dd.rtilde.get(&[x, c], &[b, k]).clone());
                }
            }
        }
    }
    let u = invert_square(n2, &w, "f̃(Λ) from the antihomomorphism f̃(Λ S(Λ)) = δ")?;
    for a in 0..n {
        for c in 0..n {
            let v = table(n, |k, m| u[(a * n + m) * n2 + c * n + k].clone());
            tb.ft.insert(lam(a, c), v);
        }
    }

    // η̃^l(Λ^a_m) = −Σ η̃^q(S(Λ^a_k)) f̃^l_q(Λ^k_m)
    for a in 0..n {
        for m in 0..n {
            let mut v = Vec::with_capacity(n);
            for l in 0..n {
                let mut s = F::zero();
                for q in 0..n {
                    for k in 0..n {
                        s = s - tb.eta_up(Some(slam(a, k)), q)? * &tb.ft(Some(lam(k, m)), l, q)?;
                    }
                }
                v.push(s);
            }
            tb.eta_up.insert(lam(a, m), v);
        }
    }

    // η̃_k(p^b): λ δ^a_x = −Σ f̃^k_x(S(Λ^a_b)) η̃_k(p^b)
    let mut msys = Vec::with_capacity(n2 * n2);
    let mut rhs = Vec::with_capacity(n2);
    for a in 0..n {
        for x in 0..n {
            for k in 0..n {
                for b in 0..n {
                    msys.push(-tb.ft(Some(slam(a, b)), k, x)?);
                }
            }
            rhs.push(if a == x { lambda.clone() } else { F::zero() });
        }
    }
    let sol = solve_dense(n2, &msys, n2, &rhs, 1).ok_or_else(|| singular("η̃_k(p) from η̃(S(p)) = λδ"))?;
    for b in 0..n {
        tb.eta_dn
            .insert(pg(b), (0..n).map(|k| sol[k * n + b].clone()).collect());
    }

    // trace term Σ_k η̃^k(Λ^c_k) shared by f(p) and f̃(p)
    let mut tr = Vec::with_capacity(n);
    for c in 0..n {
        let mut s = F::zero();
        for k in 0..n {
            s = s + tb.eta_up(Some(lam(c, k)), k)?;
        }
        tr.push(s * lambda);
    }

    for a in 0..n {
        let mut fp = Vec::with_capacity(n2);
        let mut ftp = Vec::with_capacity(n2);
        for x in 0..n {
            for y in 0..n {
                let mut s = if x == y { -tr[a].clone() } else { F::zero() };
                let mut st = F::zero();
                for b in 0..n {
                    for k in 0..n {
                        s = s - tb.f(Some(lam(a, b)), x, k)? * &tb.f(Some(sp(b)), k, y)?;
                        st = st - tb.ft(Some(lam(a, b)), k, y)? * &tb.ft(Some(sp(b)), x, k)?;
                    }
                }
                for (c, t) in tr.iter().enumerate() {
                    st = st + t.clone() * &tb.ft(Some(lam(a, c)), x, y)?;
                }
                fp.push(s);
                ftp.push(st);
            }
        }
        tb.f.insert(pg(a), fp);
        tb.ft.insert(pg(a), ftp);
    }

    // η̃^x(p^a) = −η̃^x(S(p^a)) − Σ η̃^k(S(Λ^a_b)) f̃^x_k(p^b)
    for a in 0..n {
        let mut v = Vec::with_capacity(n);
        for x in 0..n {
            let mut s = -tb.eta_up(Some(sp(a)), x)?;
            for k in 0..n {
                for b in 0..n {
                    s = s - tb.eta_up(Some(slam(a, b)), k)? * &tb.ft(Some(pg(b)), x, k)?;
                }
            }
            v.push(s);
        }
        tb.eta_up.insert(pg(a), v);
    }
    Ok(tb)
}

fn leg(w: &Word) -> Option<Gen> {
    w.gens().first().copied()
}

/// `Φ(g)` assembled from the value tables through `Δ(g)`.
fn assemble<F: Field>(tb: &ValueTables<F>, g: Gen) -> Result<Matrix<F>> {
    let n = tb.n;
    let mut m = Matrix::zeros(n + n * n);
    for x in 0..n {
        for y in 0..n {
            m.set(single(x), single(y), tb.f(Some(g), x, y)?);
        }
    }
    let delta = coproduct::<F>(&NcPoly::gen(g), n);
    for ((u, v), c) in delta.terms() {
        let (g1, g2) = (leg(u), leg(v));
        for a in 0..n {
            for b in 0..n {
                let fab = tb.f(g2, a, b)?;
                if fab.is_zero() {
                    continue;
                }
                let fab = fab * c;
                for k in 0..n {
                    // [single(a), pair(k,b)] += η̃^k(g1) f^a_b(g2)
                    let e = tb.eta_up(g1, k)?;
                    if !e.is_zero() {
                        let j = pair(n, k, b);
                        let cur = m.at(single(a), j).clone();
                        m.set(single(a), j, cur + e * &fab);
                    }
                    // [pair(k,a), single(b)] += η̃_k(g1) f^a_b(g2)
                    let e = tb.eta_dn(g1, k)?;
                    if !e.is_zero() {
                        let i = pair(n, k, a);
                        let cur = m.at(i, single(b)).clone();
                        m.set(i, single(b), cur + e * &fab);
                    }
                    // [pair(k,a), pair(l,b)] += f̃^l_k(g1) f^a_b(g2)
                    for l in 0..n {
                        let e = tb.ft(g1, l, k)?;
                        if !e.is_zero() {
                            let (i, j) = (pair(n, k, a), pair(n, l, b));
                            let cur = m.at(i, j).clone();
                            m.set(i, j, cur + e * &fab);
                        }
                    }
                }
            }
        }
    }
    Ok(m)
}

/// Computes the value tables and assembles `Φ` on every generator. Errors if
/// one of the defining linear systems is singular.
pub fn generator_images<F: Field>(data: &InhomogeneousData<F>) -> Result<BigRep<F>> {
    let n = data.n;
    let tables = value_tables(data)?;
    let mut images = BTreeMap::new();
    for g in Gen::basic_alphabet(n)
        .into_iter()
        .chain((0..n).flat_map(|a| (0..n).map(move |b| slam(a, b))))
        .chain((0..n).map(sp))
    {
        images.insert(g, assemble(&tables, g)?);
    }
    // f(S(S(Λ))) from the pairing of S(Λ^a_b) with Δ(S(Λ^a_b)) = S(Λ^c_b) ⊗ S(Λ^a_c)
    let y = antipode_pairing(
        n,
        |x, l, b, c| tables.f(Some(slam(c, b)), x, l).expect("table is complete"),
        "f(S(S(Λ))) from the pairing on S(Λ)",
    )?;
    let n2 = n * n;
    let mut f_ss = BTreeMap::new();
    for c in 0..n {
        for a in 0..n {
            f_ss.insert(slam(a, c), table(n, |l, yy| y[(l * n + c) * n2 + yy * n + a].clone()));
        }
    }
    Ok(BigRep {
        n,
        tables,
        images,
        f_ss,
    })
}

impl<F: Field> BigRep<F> {
    pub fn dim(&self) -> usize {
        self.n + self.n * self.n
    }

    pub fn image(&self, g: Gen) -> Result<&Matrix<F>> {
        self.images
            .get(&g)
            .ok_or_else(|| Error::UnknownGenerator(format!("{g} is outside dimension {}", self.n)))
    }

    pub fn evaluate_word(&self, w: &Word) -> Result<Matrix<F>> {
        let mut acc = Matrix::identity(self.dim());
        for &g in w.gens() {
            acc = acc.mul(self.image(g)?);
        }
        Ok(acc)
    }

    /// `f(S(w))` for a word in `Λ` and `S(Λ)`, as an `N x N` matrix.
    fn f_of_antipode(&self, w: &Word) -> Result<Matrix<F>> {
        let n = self.n;
        let mut acc = Matrix::identity(n);
        for &g in w.gens().iter().rev() {
            let v = match g {
                Gen::L(a, b) => self.tables.f.get(&slam(a as usize, b as usize)),
                Gen::SL(..) => self.f_ss.get(&g),
                _ => None,
            }
            .ok_or_else(|| Error::UnknownGenerator(format!("{g} is not in the Λ, S(Λ) subalgebra")))?;
            acc = acc.mul(&Matrix::from_fn(n, |x, y| v[x * n + y].clone()));
        }
        Ok(acc)
    }

    /// `(f̃(w), η̃^k(w), η̃_k(w))` for a word in `Λ` and `S(Λ)`, read off from
    /// the blocks of `Φ` by peeling `f` off the right leg of `Δ(w)`.
    pub fn extract(&self, w: &Word, cache: &mut BTreeMap<Word, Matrix<F>>) -> Result<Extracted<F>> {
        let n = self.n;
        let mut ft = Matrix::<F>::zeros(n);
        let mut up = vec![F::zero(); n];
        let mut dn = vec![F::zero(); n];
        for ((u, v), c) in coproduct::<F>(&NcPoly::word(w.clone()), n).terms() {
            if !cache.contains_key(u) {
                let m = self.evaluate_word(u)?;
                cache.insert(u.clone(), m);
            }
            let phi = &cache[u];
            let g = self.f_of_antipode(v)?;
            for l in 0..n {
                let gl = g.at(l, 0).clone() * c;
                if gl.is_zero() {
                    continue;
                }
                for k in 0..n {
                    up[k] = up[k].clone() + phi.at(single(0), pair(n, k, l)).clone() * &gl;
                    dn[k] = dn[k].clone() + phi.at(pair(n, k, 0), single(l)).clone() * &gl;
                    for m in 0..n {
                        let cur = ft.at(k, m).clone();
                        ft.set(k, m, cur + phi.at(pair(n, m, 0), pair(n, k, l)).clone() * &gl);
                    }
                }
            }
        }
        Ok(Extracted {
            ft,
            eta_up: up,
            eta_dn: dn,
            eps: counit(&NcPoly::word(w.clone())),
        })
    }
}

/// Values of `f̃`, `η̃^k`, `η̃_k` and `ε` on one word.
#[derive(Clone, Debug, PartialEq)]
pub struct Extracted<F> {
    pub ft: Matrix<F>,
    pub eta_up: Vec<F>,
    pub eta_dn: Vec<F>,
    pub eps: F,
}

impl<F: Field> Extracted<F> {
    /// `ρ̃ = [[f̃, η̃], [0, ε]]`.
    pub fn rho(&self) -> Matrix<F> {
        let n = self.ft.dim();
        Matrix::from_fn(n + 1, |i, j| match (i < n, j < n) {
            (true, true) => self.ft.at(i, j).clone(),
            (true, false) => self.eta_up[i].clone(),
            (false, true) => F::zero(),
            (false, false) => self.eps.clone(),
        })
    }
}

/// Linear extension of `Φ`.
pub fn evaluate<F: Field>(rep: &BigRep<F>, p: &NcPoly<F>) -> Result<Matrix<F>> {
    let mut out = Matrix::zeros(rep.dim());
    for (w, c) in p.terms() {
        out.add_scaled(&rep.evaluate_word(w)?, c);
    }
    Ok(out)
}

fn matrix_residual<F: Field>(n: usize, label: &str, m: &Matrix<F>, limit: usize) -> Vec<ResidualEntry> {
    let mut out = Vec::new();
    for i in 0..m.dim() {
        for j in 0..m.dim() {
            if out.len() >= limit {
                return out;
            }
            let v = m.at(i, j);
            if !v.is_zero() {
                out.push(ResidualEntry {
                    index: format!("{label}[{};{}]", index_label(n, i), index_label(n, j)),
                    value: v.to_string(),
                });
            }
        }
    }
    out
}

/// Evaluates `Φ` and `ε` on every defining relation (LL, PL, PP and the
/// antipode relations). One record per family and map.
pub fn check_representation<F: Field>(data: &InhomogeneousData<F>) -> Result<Report> {
    let start = Instant::now();
    let rep = generator_images(data)?;
    let rels = build_relations(data, true)?;
    let n = data.n;
    let evaluated: Vec<(Matrix<F>, F)> = rels
        .relations
        .par_iter()
        .map(|r| Ok((evaluate(&rep, &r.poly)?, counit(&r.poly))))
        .collect::<Result<_>>()?;
    let mut records = Vec::new();
    for fam in [Family::LL, Family::PL, Family::PP, Family::Unit] {
        let idx: Vec<usize> = (0..rels.relations.len())
            .filter(|&i| rels.relations[i].family == fam)
            .collect();
        let bad: Vec<usize> = idx.iter().copied().filter(|&i| !evaluated[i].0.is_zero()).collect();
        let mut rec = Record::new(
            format!("representation {fam}"),
            format!("Φ annihilates every {fam} relation"),
            bad.is_empty(),
        )
        .with_note(format!("{} of {} components annihilated", idx.len() - bad.len(), idx.len()));
        if let Some(&i) = bad.first() {
            rec.residual = matrix_residual(n, &rels.relations[i].label, &evaluated[i].0, 8);
        }
        records.push(rec.with_elapsed(start));

        let bad_eps: Vec<usize> = idx.iter().copied().filter(|&i| !evaluated[i].1.is_zero()).collect();
        let mut rec = Record::new(
            format!("counit {fam}"),
            format!("ε annihilates every {fam} relation"),
            bad_eps.is_empty(),
        );
        rec.residual = bad_eps
            .iter()
            .take(8)
            .map(|&i| ResidualEntry {
                index: rels.relations[i].label.clone(),
                value: evaluated[i].1.to_string(),
            })
            .collect();
        records.push(rec.with_elapsed(start));
    }
    Ok(Report::new(records))
}

fn antipode_word(w: &Word) -> Word {
    Word(
        w.gens()
            .iter()
            .rev()
            .map(|&g| match g {
                Gen::L(a, b) => Gen::SL(a, b),
                other => other,
            })
            .collect(),
    )
}

/// On all `Λ`-words up to length `degree`: `ρ̃` is a unital antihomomorphism,
/// `η̃_k` vanishes, and `η = η̃ ∘ S` obeys
/// `η^n(ab) = η^n(a) ε(b) + f̃^n_m(S(a)) η^m(b)`.
pub fn eta_hom_check<F: Field>(data: &InhomogeneousData<F>, degree: usize) -> Result<Report> {
    let start = Instant::now();
    let n = data.n;
    let rep = generator_images(data)?;
    let mut cache = BTreeMap::new();
    let mut ext: BTreeMap<Word, Extracted<F>> = BTreeMap::new();
    let alphabet = Gen::lambda_alphabet(n);
    let mut words: Vec<Word> = Vec::new();
    for len in 0..=degree {
        words.extend(Word::all_of_length(&alphabet, len));
    }
    for w in &words {
        ext.insert(w.clone(), rep.extract(w, &mut cache)?);
        let s = antipode_word(w);
        ext.insert(s.clone(), rep.extract(&s, &mut cache)?);
    }

    let unit_ok = ext[&Word::empty()].rho() == Matrix::identity(n + 1);
    let mut records = vec![Record::new("rho unit", "ρ̃(1) = I", unit_ok).with_elapsed(start)];

    let mut table_bad = Vec::new();
    for &g in &alphabet {
        let e = &ext[&Word::single(g)];
        let want_ft = Matrix::from_fn(n, |x, y| rep.tables.ft(Some(g), x, y).expect("Λ values"));
        let want_up: Vec<F> = (0..n).map(|k| rep.tables.eta_up(Some(g), k).expect("Λ values")).collect();
        if e.ft != want_ft || e.eta_up != want_up {
            table_bad.push(g.to_string());
        }
    }
    let mut rec = Record::new(
        "rho generators",
        "f̃, η̃ read off Φ(Λ) agree with the value tables",
        table_bad.is_empty(),
    );
    if !table_bad.is_empty() {
        rec = rec.with_note(format!("disagreement on {}", table_bad.join(", ")));
    }
    records.push(rec.with_elapsed(start));

    let nonempty: Vec<&Word> = words.iter().filter(|w| !w.is_empty()).collect();
    let mut anti_bad = Vec::new();
    let mut eta_bad = Vec::new();
    let mut pairs = 0usize;
    for a in &nonempty {
        for b in &nonempty {
            if a.len() + b.len() > degree {
                continue;
            }
            pairs += 1;
            let ab = a.concat(b);
            let lhs = ext[&ab].rho();
            let rhs = ext[*b].rho().mul(&ext[*a].rho());
            if lhs != rhs {
                anti_bad.push(format!("{a} · {b}"));
            }
            // η(w) = η̃(S(w))
            let (sa, sb, sab) = (&ext[&antipode_word(a)], &ext[&antipode_word(b)], &ext[&antipode_word(&ab)]);
            let eps_b = counit(&NcPoly::word((*b).clone()));
            let ok = (0..n).all(|x| {
                let mut v = sa.eta_up[x].clone() * &eps_b;
                for m in 0..n {
                    v = v + sa.ft.at(x, m).clone() * &sb.eta_up[m];
                }
                v == sab.eta_up[x]
            });
            if !ok {
                eta_bad.push(format!("{a} · {b}"));
            }
        }
    }
    let summarize = |bad: &[String]| {
        if bad.is_empty() {
            format!("{pairs} word pairs")
        } else {
            format!("{} of {pairs} word pairs fail, first {}", bad.len(), bad[0])
        }
    };
    records.push(
        Record::new("rho antihomomorphism", "ρ̃(ab) = ρ̃(b) ρ̃(a)", anti_bad.is_empty())
            .with_note(summarize(&anti_bad))
            .with_elapsed(start),
    );
    records.push(
        Record::new(
            "eta antipode rule",
            "η^n(ab) = η^n(a) ε(b) + f̃^n_m(S(a)) η^m(b)",
            eta_bad.is_empty(),
        )
        .with_note(summarize(&eta_bad))
        .with_elapsed(start),
    );

    let lower_bad: Vec<String> = words
        .iter()
        .filter(|w| ext[*w].eta_dn.iter().any(|x| !x.is_zero()))
        .map(|w| w.to_string())
        .collect();
    let mut rec = Record::new("eta lower vanishes", "η̃_k(a) = 0 on Λ-words", lower_bad.is_empty())
        .with_note(format!("{} words", words.len()));
    if let Some(w) = lower_bad.first() {
        rec = rec.with_note(format!("{} of {} words fail, first {w}", lower_bad.len(), words.len()));
    }
    records.push(rec.with_elapsed(start));
    Ok(Report::new(records))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_poly;
    use crate::examples::{classical, glq};
    use crate::scalar::parse_scalar;
    use crate::tensor::Tensor;
    use crate::Scalar;
    use num_traits::{One, Zero};

    fn glq2_rep() -> BigRep<Scalar> {
        generator_images(&glq(2).unwrap()).unwrap()
    }

    #[test]
    fn classical_translations_act_trivially() {
        let rep = generator_images(&classical(2)).unwrap();
        for a in 0..2 {
            assert!(rep.image(pg(a)).unwrap().is_zero());
        }
        // single-single block of Φ(Λ^a_b) is δ^a_b δ^x_y
        for a in 0..2 {
            for b in 0..2 {
                let m = rep.image(lam(a, b)).unwrap();
                for x in 0..2 {
                    for y in 0..2 {
                        let want = if a == b && x == y { Scalar::one() } else { Scalar::zero() };
                        assert_eq!(*m.at(single(x), single(y)), want);
                    }
                }
            }
        }
    }

    #[test]
    fn glq2_f_on_lambda_is_r() {
        let d = glq(2).unwrap();
        let rep = generator_images(&d).unwrap();
        for k in 0..2 {
            for l in 0..2 {
                for nn in 0..2 {
                    for m in 0..2 {
                        let v = rep.tables.f(Some(lam(nn, m)), k, l).unwrap();
                        assert_eq!(&v, d.r.get(&[k, nn], &[m, l]));
                    }
                }
            }
        }
    }

    #[test]
    fn glq2_eta_lower_on_p_solves_its_system() {
        let d = glq(2).unwrap();
        let rep = glq2_rep();
        let rt = d.derive().unwrap().rtilde;
        // substitution: λ δ^a_x = −Σ R~[(k,a),(b,x)] η̃_k(p^b)
        for a in 0..2 {
            for x in 0..2 {
                let mut s = Scalar::zero();
                for k in 0..2 {
                    for b in 0..2 {
                        s = s - rt.get(&[k, a], &[b, x]).clone() * &rep.tables.eta_dn(Some(pg(b)), k).unwrap();
                    }
                }
                let want = if a == x { d.lambda.clone() } else { Scalar::zero() };
                assert_eq!(s, want);
            }
        }
        // closed form from Φ(p) = −Φ(Λ)Φ(S(p)): η̃_m(p^a) = −λ Σ_k f̃^k_m(Λ^a_k)
        for a in 0..2 {
            for m in 0..2 {
                let mut s = Scalar::zero();
                for k in 0..2 {
                    s = s + rep.tables.ft(Some(lam(a, k)), k, m).unwrap();
                }
                assert_eq!(rep.tables.eta_dn(Some(pg(a)), m).unwrap(), -(s * &d.lambda));
            }
        }
    }

    #[test]
    fn antipode_pairing_holds() {
        let rep = glq2_rep();
        let t = &rep.tables;
        for a in 0..2 {
            for b in 0..2 {
                for x in 0..2 {
                    for y in 0..2 {
                        let mut s = Scalar::zero();
                        for c in 0..2 {
                            for k in 0..2 {
                                s = s + t.f(Some(lam(a, c)), x, k).unwrap() * &t.f(Some(slam(c, b)), k, y).unwrap();
                            }
                        }
                        let want = if a == b && x == y { Scalar::one() } else { Scalar::zero() };
                        assert_eq!(s, want);
                    }
                }
            }
        }
    }

    #[test]
    fn unit_and_products() {
        let rep = glq2_rep();
        assert_eq!(evaluate(&rep, &NcPoly::one()).unwrap(), Matrix::identity(6));
        let lp = parse_poly("L[1,1]*p[2]", 2).unwrap();
        let want = rep.image(lam(0, 0)).unwrap().mul(rep.image(pg(1)).unwrap());
        assert_eq!(evaluate(&rep, &lp).unwrap(), want);
        let rep = generator_images(&classical(2)).unwrap();
        let comm = parse_poly("p[1]*L[1,2] - L[1,2]*p[1]", 2).unwrap();
        assert!(evaluate(&rep, &comm).unwrap().is_zero());
    }

    #[test]
    fn unknown_generator_is_an_error() {
        let rep = glq2_rep();
        let w = Word::single(Gen::P(2));
        assert!(matches!(rep.evaluate_word(&w), Err(Error::UnknownGenerator(_))));
    }

    #[test]
    fn blocks_follow_the_product_laws() {
        // f^n_m(ab) = f^n_k(a) f^k_m(b) + f^{nk}_l(a) f^l_{km}(b), and the
        // pair-pair law, spelled out entrywise for all generator pairs
        let rep = glq2_rep();
        let n = 2;
        let gens: Vec<Gen> = rep.images.keys().copied().collect();
        for &a in &gens {
            for &b in &gens {
                let (pa, pb) = (rep.image(a).unwrap(), rep.image(b).unwrap());
                let pab = pa.mul(pb);
                for x in 0..n {
                    for y in 0..n {
                        let mut s = Scalar::zero();
                        for k in 0..n {
                            s = s + pa.at(single(x), single(k)).clone() * pb.at(single(k), single(y));
                            for l in 0..n {
                                s = s + pa.at(single(x), pair(n, k, l)).clone() * pb.at(pair(n, k, l), single(y));
                            }
                        }
                        assert_eq!(&s, pab.at(single(x), single(y)));
                    }
                }
                for m in 0..n {
                    for x in 0..n {
                        for k in 0..n {
                            for l in 0..n {
                                let mut s = Scalar::zero();
                                for pp in 0..n {
                                    for q in 0..n {
                                        s = s + pa.at(pair(n, m, x), pair(n, pp, q)).clone()
                                            * pb.at(pair(n, pp, q), pair(n, k, l));
                                    }
                                    s = s + pa.at(pair(n, m, x), single(pp)).clone() * pb.at(single(pp), pair(n, k, l));
                                }
                                assert_eq!(&s, pab.at(pair(n, m, x), pair(n, k, l)));
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn single_block_matches_convolution_form() {
        // f^n_m(ab) = (ε(a1)ε(b1) + η̃^k(a1) η̃_k(b1)) f^n_l(a2) f^l_m(b2)
        let d = glq(2).unwrap();
        let rep = generator_images(&d).unwrap();
        let t = &rep.tables;
        let n = 2;
        let gens: Vec<Gen> = rep.images.keys().copied().collect();
        let eps = |g: Option<Gen>| g.map(crate::algebra::counit_gen::<Scalar>).unwrap_or_else(Scalar::one);
        for &a in &gens {
            for &b in &gens {
                let da = coproduct::<Scalar>(&NcPoly::gen(a), n);
                let db = coproduct::<Scalar>(&NcPoly::gen(b), n);
                let got = rep.image(a).unwrap().mul(rep.image(b).unwrap());
                for x in 0..n {
                    for y in 0..n {
                        let mut s = Scalar::zero();
                        for ((a1, a2), ca) in da.terms() {
                            for ((b1, b2), cb) in db.terms() {
                                let (a1, a2, b1, b2) = (leg(a1), leg(a2), leg(b1), leg(b2));
                                let mut pre = eps(a1) * &eps(b1);
                                for k in 0..n {
                                    pre = pre + t.eta_up(a1, k).unwrap() * &t.eta_dn(b1, k).unwrap();
                                }
                                if pre.is_zero() {
                                    continue;
                                }
                                for l in 0..n {
                                    s = s + pre.clone()
                                        * ca
                                        * cb
                                        * &t.f(a2, x, l).unwrap()
                                        * &t.f(b2, l, y).unwrap();
                                }
                            }
                        }
                        assert_eq!(&s, got.at(single(x), single(y)), "{a} {b} {x} {y}");
                    }
                }
            }
        }
    }

    #[test]
    fn representation_annihilates_relations() {
        for d in [classical(2), glq(2).unwrap()] {
            let rep = check_representation(&d).unwrap();
            assert!(rep.all_pass(), "{}", rep.human());
            assert_eq!(rep.records.len(), 8);
        }
    }

    #[test]
    fn corrupted_translation_term_is_detected() {
        let mut d = glq(2).unwrap();
        d.t = Tensor::from_vec(2, 2, 0, vec![Scalar::one(), Scalar::zero(), Scalar::zero(), Scalar::zero()]).unwrap();
        let rep = check_representation(&d).unwrap();
        assert!(!rep.get("representation PP").unwrap().pass, "{}", rep.human());
    }

    #[test]
    fn eta_hom_on_fixtures() {
        for d in [classical(2), glq(2).unwrap()] {
            let rep = eta_hom_check(&d, 3).unwrap();
            assert!(rep.all_pass(), "{}", rep.human());
        }
    }

    #[test]
    fn proposition_lower_eta_vanishes_on_lambda_words() {
        let rep = glq2_rep();
        let mut cache = BTreeMap::new();
        for len in 1..=3 {
            for w in Word::all_of_length(&Gen::lambda_alphabet(2), len) {
                let e = rep.extract(&w, &mut cache).unwrap();
                assert!(e.eta_dn.iter().all(|x| x.is_zero()), "{w}");
                // the pair-to-single block itself vanishes
                let m = rep.evaluate_word(&w).unwrap();
                for i in 2..6 {
                    for j in 0..2 {
                        assert!(m.at(i, j).is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn n1_solution_family() {
        // r = −1 − λ, z = 0, t = 1, λ = q
        let s = |x: &str| parse_scalar(x).unwrap();
        let d = InhomogeneousData::new(
            1,
            Tensor::from_vec(1, 2, 2, vec![s("-1 - q")]).unwrap(),
            Tensor::from_vec(1, 2, 1, vec![s("0")]).unwrap(),
            Tensor::from_vec(1, 2, 0, vec![s("1")]).unwrap(),
            s("q"),
        )
        .unwrap();
        let rep = check_representation(&d).unwrap();
        assert!(rep.all_pass(), "{}", rep.human());
    }
}
