//! The action of `𝔅ₙ(m)` on `V^⊗n`, realized twice: by generator matrices
//! on tensors, and by the diagram functionals on `V^⊗2n`.
//!
//! Tuples `(k_1, …, k_N)` with entries in `1..=m` are encoded radix `m`,
//! position 1 most significant.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::algebra::{normal_form, AlgebraElement};
use crate::combinatorics::Permutation;
use crate::diagram::BrauerDiagram;
use crate::error::{Error, Result};
use crate::exact_linalg::{Ring, SparseMatrix, SparseVec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FormKind {
    /// `(v_i, v_j) = δ_{i, m+1-j}`
    Split,
    /// `(v_i, v_j) = δ_{i, j}`
    Euclid,
}

impl fmt::Display for FormKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FormKind::Split => "split",
            FormKind::Euclid => "euclid",
        })
    }
}

impl FromStr for FormKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "split" => Ok(FormKind::Split),
            "euclid" => Ok(FormKind::Euclid),
            other => Err(Error::Parse(format!(
                "unknown form {other:?} (expected split or euclid)"
            ))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct BilinearForm {
    kind: FormKind,
    m: usize,
}

impl BilinearForm {
    pub fn new(kind: FormKind, m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::Precondition("dimension m must be at least 1".into()));
        }
        Ok(BilinearForm { kind, m })
    }

    pub fn split(m: usize) -> Result<Self> {
        Self::new(FormKind::Split, m)
    }

    pub fn euclid(m: usize) -> Result<Self> {
        Self::new(FormKind::Euclid, m)
    }

    pub fn kind(&self) -> FormKind {
        self.kind
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// The unique `j` with `(v_i, v_j) = 1`.
    pub fn partner(&self, i: usize) -> usize {
        match self.kind {
            FormKind::Split => self.m + 1 - i,
            FormKind::Euclid => i,
        }
    }

    pub fn gram(&self, i: usize, j: usize) -> Result<u8> {
        for x in [i, j] {
            if x == 0 || x > self.m {
                return Err(Error::OutOfRange { index: x, max: self.m });
            }
        }
        Ok(u8::from(self.partner(i) == j))
    }
}

fn checked_size(m: usize, len: usize) -> Result<u64> {
    (m as u64)
        .checked_pow(len as u32)
        .ok_or_else(|| Error::BudgetExceeded(format!("{m}^{len} tuples do not fit in 64 bits")))
}

pub fn encode(m: usize, k: &[usize]) -> u64 {
    k.iter().fold(0, |acc, &x| acc * m as u64 + (x as u64 - 1))
}

pub fn decode(m: usize, len: usize, mut code: u64) -> Vec<usize> {
    let mut out = vec![0; len];
    for slot in out.iter_mut().rev() {
        *slot = (code % m as u64) as usize + 1;
        code /= m as u64;
    }
    out
}

/// All tuples in `{1..m}^len`, in encoded order.
pub fn all_tuples(m: usize, len: usize) -> Result<impl Iterator<Item = Vec<usize>>> {
    let total = checked_size(m, len)?;
    Ok((0..total).map(move |c| decode(m, len, c)))
}

/// A linear function on `V^⊗N`, stored by its nonzero values on basis tuples.
#[derive(Clone, Debug, PartialEq)]
pub struct TensorFunctional<R: Ring> {
    ring: R,
    m: usize,
    len: usize,
    values: BTreeMap<u64, R::Elem>,
}

impl<R: Ring> TensorFunctional<R> {
    pub fn zero(ring: R, m: usize, len: usize) -> Self {
        TensorFunctional {
            ring,
            m,
            len,
            values: BTreeMap::new(),
        }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// `N`, the number of tensor positions.
    pub fn positions(&self) -> usize {
        self.len
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    pub fn support_size(&self) -> usize {
        self.values.len()
    }

    /// `(encoded index, value)` pairs, ascending.
    pub fn support(&self) -> impl Iterator<Item = (u64, &R::Elem)> {
        self.values.iter().map(|(&k, v)| (k, v))
    }

    pub fn value(&self, k: &[usize]) -> Result<R::Elem> {
        if k.len() != self.len {
            return Err(Error::DimensionMismatch(self.len, k.len()));
        }
        if let Some(&bad) = k.iter().find(|&&x| x == 0 || x > self.m) {
            return Err(Error::OutOfRange {
                index: bad,
                max: self.m,
            });
        }
        Ok(self.value_at(encode(self.m, k)))
    }

    fn value_at(&self, code: u64) -> R::Elem {
        self.values.get(&code).cloned().unwrap_or_else(|| self.ring.zero())
    }

    fn accumulate(&mut self, code: u64, v: &R::Elem) {
        let cur = self.value_at(code);
        let next = self.ring.add(&cur, v);
        if self.ring.is_zero(&next) {
            self.values.remove(&code);
        } else {
            self.values.insert(code, next);
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if (self.m, self.len) != (other.m, other.len) {
            return Err(Error::DimensionMismatch(self.len, other.len));
        }
        let mut out = self.clone();
        for (&code, v) in &other.values {
            out.accumulate(code, v);
        }
        Ok(out)
    }

    pub fn scale(&self, c: &R::Elem) -> Self {
        let mut out = Self::zero(self.ring.clone(), self.m, self.len);
        for (&code, v) in &self.values {
            out.accumulate(code, &self.ring.mul(c, v));
        }
        out
    }

    /// `k ↦ self(k∘w)` where `(k∘w)_j = k_{(j)w}`.
    pub fn compose_indices(&self, w: &Permutation) -> Result<Self> {
        if w.degree() != self.len {
            return Err(Error::DegreeMismatch {
                expected: self.len,
                found: w.degree(),
            });
        }
        // self(l) = out(k) with l_j = k_{(j)w}, i.e. k_{(j)w} = l_j
        let mut out = Self::zero(self.ring.clone(), self.m, self.len);
        for (&code, v) in &self.values {
            let l = decode(self.m, self.len, code);
            let mut k = vec![0; self.len];
            for (j, &lj) in l.iter().enumerate() {
                k[w.apply(j + 1) - 1] = lj;
            }
            out.values.insert(encode(self.m, &k), v.clone());
        }
        Ok(out)
    }

    pub fn to_json(&self) -> Value {
        let support: Vec<Value> = self
            .values
            .iter()
            .map(|(&code, v)| json!({"index": decode(self.m, self.len, code), "value": self.ring.to_json(v)}))
            .collect();
        json!({"m": self.m, "N": self.len, "support": support})
    }
}

/// Encoded support of `φ(D)`: one tuple per choice of `k_a` on each edge,
/// with `k_b` the form partner. Sorted.
pub fn diagram_support(d: &BrauerDiagram, form: &BilinearForm) -> Result<Vec<u64>> {
    let n = d.n();
    let m = form.m();
    let total = checked_size(m, n)?;
    let mut out = Vec::with_capacity(total as usize);
    let mut k = vec![0; 2 * n];
    for choice in 0..total {
        for (&(a, b), x) in d.edges().iter().zip(decode(m, n, choice)) {
            k[a - 1] = x;
            k[b - 1] = form.partner(x);
        }
        out.push(encode(m, &k));
    }
    out.sort_unstable();
    Ok(out)
}

/// `φ(D)(k_1 ⊗ ⋯ ⊗ k_2n) = ∏ over edges {a,b} of (v_{k_a}, v_{k_b})`.
pub fn diagram_functional<R: Ring>(ring: R, d: &BrauerDiagram, form: &BilinearForm) -> Result<TensorFunctional<R>> {
    let mut out = TensorFunctional::zero(ring.clone(), form.m(), 2 * d.n());
    let one = ring.one();
    for code in diagram_support(d, form)? {
        out.values.insert(code, one.clone());
    }
    Ok(out)
}

fn require_delta_m<R: Ring>(a: &AlgebraElement<R>, m: usize) -> Result<()> {
    let ring = a.ring();
    if *a.delta() != ring.from_i64(m as i64) {
        return Err(Error::DeltaMismatch {
            expected: format!("delta = {m} (got {})", ring.format(a.delta())),
        });
    }
    Ok(())
}

/// `Σ coeff(D)·φ(D)`.
pub fn functional_of_element<R: Ring>(a: &AlgebraElement<R>, form: &BilinearForm) -> Result<TensorFunctional<R>> {
    require_delta_m(a, form.m())?;
    let ring = a.ring().clone();
    let mut out = TensorFunctional::zero(ring.clone(), form.m(), 2 * a.n());
    for (d, c) in a.terms() {
        for code in diagram_support(d, form)? {
            out.accumulate(code, c);
        }
    }
    Ok(out)
}

/// Matrices of `s_1..s_{n-1}` and `e_1..e_{n-1}` acting on the right of
/// `V^⊗n`, rows indexed by input tuples.
pub struct GeneratorMatrices<R: Ring> {
    n: usize,
    s: Vec<SparseMatrix<R>>,
    e: Vec<SparseMatrix<R>>,
    identity: SparseMatrix<R>,
}

impl<R: Ring> GeneratorMatrices<R> {
    pub fn new(ring: R, n: usize, form: &BilinearForm) -> Result<Self> {
        let m = form.m();
        let dim = checked_size(m, n)? as usize;
        let one = ring.one();
        let mut s = Vec::new();
        let mut e = Vec::new();
        for j in 1..n {
            let mut s_rows = Vec::with_capacity(dim);
            let mut e_rows = Vec::with_capacity(dim);
            for code in 0..dim as u64 {
                let i = decode(m, n, code);
                let mut swapped = i.clone();
                swapped.swap(j - 1, j);
                s_rows.push(SparseVec::from_entries(
                    &ring,
                    dim,
                    vec![(encode(m, &swapped) as usize, one.clone())],
                )?);
                let mut entries = Vec::new();
                if form.partner(i[j - 1]) == i[j] {
                    let mut out = i.clone();
                    for k in 1..=m {
                        out[j - 1] = k;
                        out[j] = form.partner(k);
                        entries.push((encode(m, &out) as usize, one.clone()));
                    }
                }
                e_rows.push(SparseVec::from_entries(&ring, dim, entries)?);
            }
            s.push(SparseMatrix::new(ring.clone(), dim, s_rows)?);
            e.push(SparseMatrix::new(ring.clone(), dim, e_rows)?);
        }
        Ok(GeneratorMatrices {
            n,
            s,
            e,
            identity: SparseMatrix::identity(ring, dim),
        })
    }

    pub fn s(&self, j: usize) -> &SparseMatrix<R> {
        &self.s[j - 1]
    }

    pub fn e(&self, j: usize) -> &SparseMatrix<R> {
        &self.e[j - 1]
    }

    pub fn all(&self) -> impl Iterator<Item = &SparseMatrix<R>> {
        self.s.iter().chain(&self.e)
    }

    fn word(&self, mut acc: SparseMatrix<R>, w: &Permutation) -> Result<SparseMatrix<R>> {
        for j in w.reduced_word() {
            acc = acc.mul(self.s(j))?;
        }
        Ok(acc)
    }

    /// The matrix of one diagram, from its normal form
    /// `d1⁻¹ · e_1 e_3 ⋯ e_{2f-1} · σ · d2` expanded into generators.
    pub fn diagram(&self, d: &BrauerDiagram) -> Result<SparseMatrix<R>> {
        if d.n() != self.n {
            return Err(Error::DegreeMismatch {
                expected: self.n,
                found: d.n(),
            });
        }
        let nf = normal_form(d);
        let mut acc = self.word(self.identity.clone(), &nf.d1.inverse())?;
        for i in 1..=nf.f {
            acc = acc.mul(self.e(2 * i - 1))?;
        }
        acc = self.word(acc, &nf.sigma)?;
        self.word(acc, &nf.d2)
    }
}

/// The `m^n × m^n` matrix of the right action of `a` (row vector times
/// matrix). Only defined when `δ = m`.
pub fn action_matrix<R: Ring>(a: &AlgebraElement<R>, form: &BilinearForm) -> Result<SparseMatrix<R>> {
    require_delta_m(a, form.m())?;
    let ring = a.ring().clone();
    let gens = GeneratorMatrices::new(ring.clone(), a.n(), form)?;
    let dim = gens.identity.n_rows();
    let mut acc: Vec<Vec<R::Elem>> = vec![vec![ring.zero(); dim]; dim];
    for (d, c) in a.terms() {
        let mat = gens.diagram(d)?;
        for (i, row) in mat.rows().iter().enumerate() {
            for (j, v) in row.entries() {
                acc[i][*j] = ring.add(&acc[i][*j], &ring.mul(c, v));
            }
        }
    }
    SparseMatrix::from_dense(ring, &acc)
}

/// The functional on `V^⊗2n` matching an endomorphism of `V^⊗n` under the
/// split-form identification: the map `v_l ↦ δ_{i,l} v_j` becomes the
/// indicator of `k = (i_1, …, i_n, m+1-j_n, …, m+1-j_1)`.
pub fn cano_correspondence<R: Ring>(mat: &SparseMatrix<R>, m: usize, n: usize) -> Result<TensorFunctional<R>> {
    let dim = checked_size(m, n)? as usize;
    if mat.n_rows() != dim || mat.n_cols() != dim {
        return Err(Error::DimensionMismatch(dim, mat.n_rows().max(mat.n_cols())));
    }
    let mut out = TensorFunctional::zero(mat.ring().clone(), m, 2 * n);
    for (row, vec) in mat.rows().iter().enumerate() {
        let i = decode(m, n, row as u64);
        for (col, v) in vec.entries() {
            let j = decode(m, n, *col as u64);
            let mut k = i.clone();
            k.extend(j.iter().rev().map(|&x| m + 1 - x));
            out.accumulate(encode(m, &k), v);
        }
    }
    Ok(out)
}

/// `φ(D∗w)(k) = φ(D)(k∘w)` on the union of both supports.
pub fn equivariance_check(d: &BrauerDiagram, w: &Permutation, form: &BilinearForm) -> Result<bool> {
    let ring = crate::exact_linalg::Integers;
    let lhs = diagram_functional(ring, &d.perm_act(w)?, form)?;
    let base = diagram_functional(ring, d, form)?;
    let len = base.positions();
    let m = form.m();
    let mut tuples: Vec<u64> = lhs.support().map(|(c, _)| c).collect();
    let winv = w.inverse();
    for (code, _) in base.support() {
        let l = decode(m, len, code);
        let k: Vec<usize> = (1..=len).map(|i| l[winv.apply(i) - 1]).collect();
        tuples.push(encode(m, &k));
    }
    for code in tuples {
        let k = decode(m, len, code);
        let composed: Vec<usize> = (1..=len).map(|j| k[w.apply(j) - 1]).collect();
        if lhs.value_at(code) != base.value(&composed)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Compares `φ_m(D)(k)` with `φ_{m0}(D)(k + (m0-m)/2)` for every `k` in
/// `{1..m}^2n`, split form.
pub fn index_shift_check(d: &BrauerDiagram, m: usize, m0: usize) -> Result<bool> {
    if m0 < m || !(m0 - m).is_multiple_of(2) {
        return Err(Error::Precondition(format!(
            "need m0 >= m with m0 - m even (m = {m}, m0 = {m0})"
        )));
    }
    let ring = crate::exact_linalg::Integers;
    let small = diagram_functional(ring, d, &BilinearForm::split(m)?)?;
    let large = diagram_functional(ring, d, &BilinearForm::split(m0)?)?;
    let shift = (m0 - m) / 2;
    for k in all_tuples(m, 2 * d.n())? {
        let shifted: Vec<usize> = k.iter().map(|x| x + shift).collect();
        if small.value(&k)? != large.value(&shifted)? {
            return Ok(false);
        }
    }
    Ok(true)
}
