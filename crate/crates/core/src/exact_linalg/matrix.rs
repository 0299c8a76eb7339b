use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use super::ring::{EliminationDomain, Field, Integers, Ring};
use crate::error::{Error, Result};

/// A sparse vector: strictly increasing indices, no stored zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseVec<E> {
    dim: usize,
    entries: Vec<(usize, E)>,
}

impl<E: Clone + PartialEq> SparseVec<E> {
    pub fn zero(dim: usize) -> Self {
        SparseVec {
            dim,
            entries: Vec::new(),
        }
    }

    /// Drops zeros and sorts; repeated indices are summed.
    pub fn from_entries<R>(ring: &R, dim: usize, entries: Vec<(usize, E)>) -> Result<Self>
    where
        R: Ring<Elem = E>,
    {
        let mut map: BTreeMap<usize, E> = BTreeMap::new();
        for (i, v) in entries {
            if i >= dim {
                return Err(Error::OutOfRange {
                    index: i,
                    max: dim.saturating_sub(1),
                });
            }
            let slot = map.entry(i).or_insert_with(|| ring.zero());
            *slot = ring.add(slot, &v);
        }
        Ok(SparseVec {
            dim,
            entries: map.into_iter().filter(|(_, v)| !ring.is_zero(v)).collect(),
        })
    }

    pub fn from_dense<R>(ring: &R, values: &[E]) -> Self
    where
        R: Ring<Elem = E>,
    {
        SparseVec {
            dim: values.len(),
            entries: values
                .iter()
                .enumerate()
                .filter(|(_, v)| !ring.is_zero(v))
                .map(|(i, v)| (i, v.clone()))
                .collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[(usize, E)] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize) -> Option<&E> {
        self.entries
            .binary_search_by_key(&i, |(j, _)| *j)
            .ok()
            .map(|k| &self.entries[k].1)
    }

    pub fn lead(&self) -> Option<&(usize, E)> {
        self.entries.first()
    }

    pub fn to_dense<R: Ring<Elem = E>>(&self, ring: &R) -> Vec<E> {
        let mut out = vec![ring.zero(); self.dim];
        for (i, v) in &self.entries {
            out[*i] = v.clone();
        }
        out
    }

    /// `a·self − b·other`.
    pub fn combine<R: Ring<Elem = E>>(&self, a: &E, other: &Self, b: &E, ring: &R) -> Self {
        let one = ring.one();
        let a_is_one = *a == one;
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut i, mut j) = (0, 0);
        let (x, y) = (&self.entries, &other.entries);
        while i < x.len() || j < y.len() {
            let take_x = j >= y.len() || (i < x.len() && x[i].0 < y[j].0);
            let take_y = i >= x.len() || (j < y.len() && y[j].0 < x[i].0);
            let (idx, v) = if take_x {
                let v = if a_is_one { x[i].1.clone() } else { ring.mul(a, &x[i].1) };
                i += 1;
                (x[i - 1].0, v)
            } else if take_y {
                let v = ring.neg(&ring.mul(b, &y[j].1));
                j += 1;
                (y[j - 1].0, v)
            } else {
                let l = if a_is_one { x[i].1.clone() } else { ring.mul(a, &x[i].1) };
                let v = ring.sub(&l, &ring.mul(b, &y[j].1));
                i += 1;
                j += 1;
                (x[i - 1].0, v)
            };
            if !ring.is_zero(&v) {
                out.push((idx, v));
            }
        }
        SparseVec {
            dim: self.dim,
            entries: out,
        }
    }

    pub fn scale<R: Ring<Elem = E>>(&self, c: &E, ring: &R) -> Self {
        SparseVec {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .map(|(i, v)| (*i, ring.mul(c, v)))
                .filter(|(_, v)| !ring.is_zero(v))
                .collect(),
        }
    }

    pub fn map<R: Ring, F: Fn(&E) -> R::Elem>(&self, target: &R, f: F) -> SparseVec<R::Elem> {
        SparseVec {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .map(|(i, v)| (*i, f(v)))
                .filter(|(_, v)| !target.is_zero(v))
                .collect(),
        }
    }

    /// `[[index, value], ...]` with exact values.
    pub fn to_json<R: Ring<Elem = E>>(&self, ring: &R) -> Value {
        Value::Array(self.entries.iter().map(|(i, v)| json!([i, ring.to_json(v)])).collect())
    }
}

/// Rows of sparse vectors over one ring, all of the same dimension.
#[derive(Clone, Debug, PartialEq)]
pub struct SparseMatrix<R: Ring> {
    ring: R,
    cols: usize,
    rows: Vec<SparseVec<R::Elem>>,
}

impl<R: Ring> SparseMatrix<R> {
    pub fn new(ring: R, cols: usize, rows: Vec<SparseVec<R::Elem>>) -> Result<Self> {
        if let Some(bad) = rows.iter().find(|r| r.dim() != cols) {
            return Err(Error::DimensionMismatch(cols, bad.dim()));
        }
        Ok(SparseMatrix { ring, cols, rows })
    }

    pub fn from_dense(ring: R, rows: &[Vec<R::Elem>]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows = rows.iter().map(|r| SparseVec::from_dense(&ring, r)).collect();
        Self::new(ring, cols, rows)
    }

    pub fn from_i64(ring: R, rows: &[Vec<i64>]) -> Result<Self> {
        let dense: Vec<Vec<R::Elem>> = rows
            .iter()
            .map(|r| r.iter().map(|&v| ring.from_i64(v)).collect())
            .collect();
        Self::from_dense(ring, &dense)
    }

    pub fn identity(ring: R, k: usize) -> Self {
        let rows = (0..k)
            .map(|i| SparseVec {
                dim: k,
                entries: vec![(i, ring.one())],
            })
            .collect();
        SparseMatrix { ring, cols: k, rows }
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn n_cols(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> &[SparseVec<R::Elem>] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<SparseVec<R::Elem>> {
        self.rows
    }

    /// `c·M` for a coefficient vector `c` indexed by rows.
    pub fn left_mul(&self, c: &SparseVec<R::Elem>) -> Result<SparseVec<R::Elem>> {
        if c.dim() != self.n_rows() {
            return Err(Error::DimensionMismatch(self.n_rows(), c.dim()));
        }
        let mut acc = vec![self.ring.zero(); self.cols];
        for (i, ci) in c.entries() {
            for (j, v) in self.rows[*i].entries() {
                acc[*j] = self.ring.add(&acc[*j], &self.ring.mul(ci, v));
            }
        }
        Ok(SparseVec::from_dense(&self.ring, &acc))
    }

    /// Matrix product `self · other`.
    pub fn mul(&self, other: &SparseMatrix<R>) -> Result<SparseMatrix<R>> {
        if self.cols != other.n_rows() {
            return Err(Error::DimensionMismatch(self.cols, other.n_rows()));
        }
        let rows = self
            .rows
            .iter()
            .map(|r| other.left_mul(r))
            .collect::<Result<Vec<_>>>()?;
        SparseMatrix::new(self.ring.clone(), other.cols, rows)
    }

    /// Reinterprets the entries in another ring.
    pub fn map<S: Ring, F: Fn(&R::Elem) -> S::Elem>(&self, target: S, f: F) -> SparseMatrix<S> {
        let rows = self.rows.iter().map(|r| r.map(&target, &f)).collect();
        SparseMatrix {
            ring: target,
            cols: self.cols,
            rows,
        }
    }

    pub fn stack(&self, other: &SparseMatrix<R>) -> Result<SparseMatrix<R>> {
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch(self.cols, other.cols));
        }
        if self.ring != other.ring {
            return Err(Error::AlgebraMismatch(format!(
                "{} vs {}",
                self.ring.descriptor(),
                other.ring.descriptor()
            )));
        }
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        Ok(SparseMatrix {
            ring: self.ring.clone(),
            cols: self.cols,
            rows,
        })
    }
}

/// Result of semi-echelon reduction.
struct Echelon<E> {
    rank: usize,
    kernel: Vec<SparseVec<E>>,
}

/// Rows are processed in order; each is reduced against the existing pivot
/// rows by its leading column until it either vanishes or claims a fresh
/// pivot column. With `track`, the row's combination of input rows is carried
/// along, so a vanished row yields a left-kernel vector whose last nonzero
/// A reduced row together with the combination of input rows producing it.
type Tracked<E> = (SparseVec<E>, SparseVec<E>);

/// entry sits at that row's index.
fn echelon<R: EliminationDomain>(m: &SparseMatrix<R>, track: bool) -> Echelon<R::Elem> {
    let ring = &m.ring;
    let n = m.n_rows();
    let mut pivots: BTreeMap<usize, Tracked<R::Elem>> = BTreeMap::new();
    let mut kernel = Vec::new();
    for (idx, input) in m.rows.iter().enumerate() {
        let mut row = input.clone();
        let mut combo = if track {
            SparseVec {
                dim: n,
                entries: vec![(idx, ring.one())],
            }
        } else {
            SparseVec::zero(n)
        };
        loop {
            let Some((col, lead)) = row.lead().cloned() else {
                if track {
                    kernel.push(combo);
                }
                break;
            };
            let Some((prow, pcombo)) = pivots.get(&col) else {
                normalize_pair(ring, &mut row, &mut combo);
                pivots.insert(col, (row, combo));
                break;
            };
            let (a, b) = ring.cancel(&prow.lead().expect("pivot row nonzero").1, &lead);
            row = row.combine(&a, prow, &b, ring);
            if track {
                combo = combo.combine(&a, pcombo, &b, ring);
            }
            normalize_pair(ring, &mut row, &mut combo);
        }
    }
    Echelon {
        rank: pivots.len(),
        kernel,
    }
}

fn normalize_pair<R: EliminationDomain>(ring: &R, row: &mut SparseVec<R::Elem>, combo: &mut SparseVec<R::Elem>) {
    let mut joint: Vec<R::Elem> = row
        .entries
        .iter()
        .chain(combo.entries.iter())
        .map(|(_, v)| v.clone())
        .collect();
    ring.normalize(&mut joint);
    let split = row.entries.len();
    for (slot, v) in row.entries.iter_mut().zip(joint[..split].iter()) {
        slot.1 = v.clone();
    }
    for (slot, v) in combo.entries.iter_mut().zip(joint[split..].iter()) {
        slot.1 = v.clone();
    }
}

impl<R: EliminationDomain> SparseMatrix<R> {
    /// Row rank; over the integers this is the rank over the rationals.
    pub fn rank(&self) -> usize {
        echelon(self, false).rank
    }

    /// A basis of `{c : c·M = 0}`. Each vector is checked against `M` before
    /// being returned.
    pub fn left_kernel_basis(&self) -> Vec<SparseVec<R::Elem>> {
        let kernel = echelon(self, true).kernel;
        for c in &kernel {
            let image = self.left_mul(c).expect("kernel vector has row dimension");
            assert!(image.is_zero(), "left kernel vector fails to annihilate the matrix");
        }
        kernel
    }

    /// Whether the row spaces of `self` and `other` coincide.
    pub fn span_equal(&self, other: &SparseMatrix<R>) -> Result<bool> {
        let both = self.stack(other)?;
        let (ra, rb) = (self.rank(), other.rank());
        Ok(ra == rb && both.rank() == ra)
    }
}

impl SparseMatrix<Integers> {
    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> Result<BigInt> {
        if self.n_rows() != self.cols {
            return Err(Error::NotSquare {
                rows: self.n_rows(),
                cols: self.cols,
            });
        }
        let k = self.cols;
        let mut a: Vec<Vec<BigInt>> = self.rows.iter().map(|r| r.to_dense(&Integers)).collect();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for c in 0..k {
            let Some(p) = (c..k).find(|&r| !a[r][c].is_zero()) else {
                return Ok(BigInt::zero());
            };
            if p != c {
                a.swap(p, c);
                sign = -sign;
            }
            for r in c + 1..k {
                for j in c + 1..k {
                    let v = &a[c][c] * &a[r][j] - &a[r][c] * &a[c][j];
                    a[r][j] = v / &prev;
                }
                a[r][c] = BigInt::zero();
            }
            prev = a[c][c].clone();
        }
        Ok(if k == 0 { sign } else { sign * prev })
    }

    pub fn is_unimodular(&self) -> Result<bool> {
        Ok(self.determinant()?.abs().is_one())
    }
}

/// Pivot column, reduced row, and the combination of basis rows giving it.
type Pivot<E> = (usize, SparseVec<E>, SparseVec<E>);

/// Solves `c·B = v` for a fixed list of rows `B` over a field, via a reduced
/// row echelon form with its transformation matrix.
pub struct RowSolver<F: Field> {
    field: F,
    n_basis: usize,
    reduced: Vec<Pivot<F::Elem>>,
}

impl<F: Field> RowSolver<F> {
    pub fn new(basis: &SparseMatrix<F>) -> Self {
        let field = basis.ring.clone();
        let n = basis.n_rows();
        let mut reduced: Vec<Pivot<F::Elem>> = Vec::new();
        for (idx, input) in basis.rows.iter().enumerate() {
            let mut row = input.clone();
            let mut combo = SparseVec {
                dim: n,
                entries: vec![(idx, field.one())],
            };
            for (col, prow, pcombo) in &reduced {
                if let Some(v) = row.get(*col).cloned() {
                    row = row.combine(&field.one(), prow, &v, &field);
                    combo = combo.combine(&field.one(), pcombo, &v, &field);
                }
            }
            let Some((col, lead)) = row.lead().cloned() else {
                continue;
            };
            let inv = field.inv(&lead).expect("nonzero lead");
            row = row.scale(&inv, &field);
            combo = combo.scale(&inv, &field);
            // clear the new pivot column from earlier rows
            for (_, prow, pcombo) in reduced.iter_mut() {
                if let Some(v) = prow.get(col).cloned() {
                    *prow = prow.combine(&field.one(), &row, &v, &field);
                    *pcombo = pcombo.combine(&field.one(), &combo, &v, &field);
                }
            }
            reduced.push((col, row, combo));
        }
        RowSolver {
            field,
            n_basis: n,
            reduced,
        }
    }

    pub fn rank(&self) -> usize {
        self.reduced.len()
    }

    /// Coefficients `c` with `c·B = v`, or `None` if `v` is outside the span.
    pub fn solve(&self, v: &SparseVec<F::Elem>) -> Option<SparseVec<F::Elem>> {
        let f = &self.field;
        let mut residual = v.clone();
        let mut coeffs = SparseVec::zero(self.n_basis);
        for (col, row, combo) in &self.reduced {
            if let Some(c) = v.get(*col).cloned() {
                residual = residual.combine(&f.one(), row, &c, f);
                coeffs = coeffs.combine(&f.one(), combo, &f.neg(&c), f);
            }
        }
        residual.is_zero().then_some(coeffs)
    }
}
