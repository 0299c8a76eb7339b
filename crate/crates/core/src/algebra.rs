//! The Brauer algebra over an exact ring with loop parameter `δ`, the group
//! algebra of `S_N`, and the signed permutation action on diagrams.

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;
use serde_json::{json, Value};

use crate::combinatorics::{Permutation, Tableau};
use crate::diagram::BrauerDiagram;
use crate::error::{Error, Result};
use crate::exact_linalg::{IntPolys, Poly, Ring, SparseVec};

/// A finite linear combination of Brauer `n`-diagrams.
#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraElement<R: Ring> {
    ring: R,
    n: usize,
    delta: R::Elem,
    terms: BTreeMap<BrauerDiagram, R::Elem>,
}

impl<R: Ring> AlgebraElement<R> {
    pub fn zero(ring: R, n: usize, delta: R::Elem) -> Self {
        AlgebraElement {
            ring,
            n,
            delta,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_diagram(ring: R, delta: R::Elem, d: BrauerDiagram) -> Self {
        let one = ring.one();
        Self::from_terms(ring, d.n(), delta, vec![(d, one)]).expect("single diagram of degree n")
    }

    pub fn identity(ring: R, n: usize, delta: R::Elem) -> Self {
        Self::from_diagram(ring, delta, BrauerDiagram::identity(n))
    }

    pub fn s(ring: R, delta: R::Elem, i: usize, n: usize) -> Result<Self> {
        Ok(Self::from_diagram(ring, delta, BrauerDiagram::s(i, n)?))
    }

    pub fn e(ring: R, delta: R::Elem, i: usize, n: usize) -> Result<Self> {
        Ok(Self::from_diagram(ring, delta, BrauerDiagram::e(i, n)?))
    }

    pub fn permutation(ring: R, delta: R::Elem, pi: &Permutation) -> Self {
        Self::from_diagram(ring, delta, BrauerDiagram::from_permutation(pi))
    }

    pub fn from_terms(ring: R, n: usize, delta: R::Elem, terms: Vec<(BrauerDiagram, R::Elem)>) -> Result<Self> {
        let mut out = Self::zero(ring, n, delta);
        for (d, c) in terms {
            if d.n() != n {
                return Err(Error::DegreeMismatch {
                    expected: n,
                    found: d.n(),
                });
            }
            out.add_term(d, &c);
        }
        Ok(out)
    }

    fn add_term(&mut self, d: BrauerDiagram, c: &R::Elem) {
        let ring = &self.ring;
        match self.terms.get_mut(&d) {
            Some(slot) => {
                *slot = ring.add(slot, c);
                if ring.is_zero(slot) {
                    self.terms.remove(&d);
                }
            }
            None => {
                if !ring.is_zero(c) {
                    self.terms.insert(d, c.clone());
                }
            }
        }
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn delta(&self) -> &R::Elem {
        &self.delta
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BrauerDiagram, &R::Elem)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, d: &BrauerDiagram) -> R::Elem {
        self.terms.get(d).cloned().unwrap_or_else(|| self.ring.zero())
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DegreeMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        if self.ring != other.ring || self.delta != other.delta {
            return Err(Error::AlgebraMismatch(format!(
                "{} with delta {} vs {} with delta {}",
                self.ring.descriptor(),
                self.ring.format(&self.delta),
                other.ring.descriptor(),
                other.ring.format(&other.delta)
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (d, c) in &other.terms {
            out.add_term(d.clone(), c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&self.ring.from_i64(-1))
    }

    pub fn scale(&self, c: &R::Elem) -> Self {
        let mut out = Self::zero(self.ring.clone(), self.n, self.delta.clone());
        for (d, v) in &self.terms {
            out.add_term(d.clone(), &self.ring.mul(c, v));
        }
        out
    }

    /// Bilinear extension of `D1·D2 = δ^loops · (D1 ∘ D2)`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let ring = &self.ring;
        let mut powers: Vec<R::Elem> = vec![ring.one()];
        let mut out = Self::zero(ring.clone(), self.n, self.delta.clone());
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let (d, loops) = a.multiply(b)?;
                while powers.len() <= loops {
                    let next = ring.mul(powers.last().expect("nonempty"), &self.delta);
                    powers.push(next);
                }
                let c = ring.mul(&ring.mul(ca, cb), &powers[loops]);
                out.add_term(d, &c);
            }
        }
        Ok(out)
    }

    /// `a ⋆ g`: linear extension of `D ⋆ w = sign(w)·(D ∗ w)`.
    pub fn star(&self, g: &GroupAlgebraElement<R>) -> Result<Self> {
        if g.degree != 2 * self.n {
            return Err(Error::DegreeMismatch {
                expected: 2 * self.n,
                found: g.degree,
            });
        }
        if g.ring != self.ring {
            return Err(Error::AlgebraMismatch(format!(
                "{} vs {}",
                self.ring.descriptor(),
                g.ring.descriptor()
            )));
        }
        let ring = &self.ring;
        let mut out = Self::zero(ring.clone(), self.n, self.delta.clone());
        for (w, cw) in &g.terms {
            let signed = if w.sign() < 0 { ring.neg(cw) } else { cw.clone() };
            for (d, cd) in &self.terms {
                out.add_term(d.perm_act(w)?, &ring.mul(cd, &signed));
            }
        }
        Ok(out)
    }

    /// `a ⋆ w` for a single permutation.
    pub fn star_perm(&self, w: &Permutation) -> Result<Self> {
        self.star(&GroupAlgebraElement::from_perm(self.ring.clone(), w.clone()))
    }

    /// Moves the element to another ring and loop parameter, mapping each
    /// coefficient with `f`.
    pub fn map_ring<S: Ring>(&self, target: S, delta: S::Elem, f: impl Fn(&R::Elem) -> S::Elem) -> AlgebraElement<S> {
        let mut out = AlgebraElement::zero(target, self.n, delta);
        for (d, c) in &self.terms {
            let v = f(c);
            out.add_term(d.clone(), &v);
        }
        out
    }

    /// Coefficient vector in the canonical diagram basis.
    pub fn to_vector(&self, index: &DiagramIndex) -> Result<SparseVec<R::Elem>> {
        if index.n != self.n {
            return Err(Error::DegreeMismatch {
                expected: index.n,
                found: self.n,
            });
        }
        let entries = self.terms.iter().map(|(d, c)| (index.position(d), c.clone())).collect();
        SparseVec::from_entries(&self.ring, index.len(), entries)
    }

    pub fn from_vector(ring: R, delta: R::Elem, index: &DiagramIndex, v: &SparseVec<R::Elem>) -> Result<Self> {
        if v.dim() != index.len() {
            return Err(Error::DimensionMismatch(index.len(), v.dim()));
        }
        let terms = v
            .entries()
            .iter()
            .map(|(i, c)| (index.diagrams[*i].clone(), c.clone()))
            .collect();
        Self::from_terms(ring, index.n, delta, terms)
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(d, c)| json!({"coeff": self.ring.to_json(c), "diagram": d}))
            .collect();
        json!({"n": self.n, "delta": self.ring.to_json(&self.delta), "terms": terms})
    }
}

impl AlgebraElement<IntPolys> {
    /// Specializes `x ↦ at` in the target ring.
    pub fn specialize<S: Ring>(&self, target: S, at: S::Elem) -> AlgebraElement<S> {
        let delta = self.delta.eval_in(&target, &at);
        let t = target.clone();
        self.map_ring(target, delta, move |c: &Poly| c.eval_in(&t, &at))
    }
}

/// The canonical ordering of all Brauer `n`-diagrams with reverse lookup.
#[derive(Clone, Debug)]
pub struct DiagramIndex {
    n: usize,
    diagrams: Vec<BrauerDiagram>,
    positions: HashMap<BrauerDiagram, usize>,
}

impl DiagramIndex {
    pub fn new(n: usize) -> Self {
        let diagrams = BrauerDiagram::all(n);
        let positions = diagrams.iter().cloned().enumerate().map(|(i, d)| (d, i)).collect();
        DiagramIndex { n, diagrams, positions }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.diagrams.len()
    }

    pub fn is_empty(&self) -> bool {
        self.diagrams.is_empty()
    }

    pub fn diagrams(&self) -> &[BrauerDiagram] {
        &self.diagrams
    }

    pub fn position(&self, d: &BrauerDiagram) -> usize {
        self.positions[d]
    }
}

/// A finite linear combination of permutations of `{1..N}`, multiplied with
/// the right-action convention.
#[derive(Clone, Debug, PartialEq)]
pub struct GroupAlgebraElement<R: Ring> {
    ring: R,
    degree: usize,
    terms: BTreeMap<Permutation, R::Elem>,
}

impl<R: Ring> GroupAlgebraElement<R> {
    pub fn zero(ring: R, degree: usize) -> Self {
        GroupAlgebraElement {
            ring,
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_perm(ring: R, w: Permutation) -> Self {
        let mut out = Self::zero(ring, w.degree());
        let one = out.ring.one();
        out.add_term(w, &one);
        out
    }

    pub fn identity(ring: R, degree: usize) -> Self {
        Self::from_perm(ring, Permutation::identity(degree))
    }

    pub fn from_terms(ring: R, degree: usize, terms: Vec<(Permutation, R::Elem)>) -> Result<Self> {
        let mut out = Self::zero(ring, degree);
        for (w, c) in terms {
            if w.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: w.degree(),
                });
            }
            out.add_term(w, &c);
        }
        Ok(out)
    }

    fn add_term(&mut self, w: Permutation, c: &R::Elem) {
        let ring = &self.ring;
        match self.terms.get_mut(&w) {
            Some(slot) => {
                *slot = ring.add(slot, c);
                if ring.is_zero(slot) {
                    self.terms.remove(&w);
                }
            }
            None => {
                if !ring.is_zero(c) {
                    self.terms.insert(w, c.clone());
                }
            }
        }
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &R::Elem)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &Permutation) -> R::Elem {
        self.terms.get(w).cloned().unwrap_or_else(|| self.ring.zero())
    }

    fn check_degree(&self, other: &Self) -> Result<()> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                found: other.degree,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_degree(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&self.ring.from_i64(-1)))
    }

    pub fn scale(&self, c: &R::Elem) -> Self {
        let mut out = Self::zero(self.ring.clone(), self.degree);
        for (w, v) in &self.terms {
            out.add_term(w.clone(), &self.ring.mul(c, v));
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_degree(other)?;
        let mut out = Self::zero(self.ring.clone(), self.degree);
        for (u, cu) in &self.terms {
            for (w, cw) in &other.terms {
                out.add_term(u.then(w), &self.ring.mul(cu, cw));
            }
        }
        Ok(out)
    }

    /// Left multiplication by a single permutation, `u·self`.
    pub fn left_mul_perm(&self, u: &Permutation) -> Result<Self> {
        self.check_degree(&GroupAlgebraElement::zero(self.ring.clone(), u.degree()))?;
        let mut out = Self::zero(self.ring.clone(), self.degree);
        for (w, c) in &self.terms {
            out.add_term(u.then(w), c);
        }
        Ok(out)
    }
}

fn young_sum<R: Ring>(
    ring: R,
    blocks: &[usize],
    first: usize,
    degree: usize,
    signed: bool,
) -> Result<GroupAlgebraElement<R>> {
    let group = Permutation::young_subgroup(blocks, first, degree)?;
    let mut out = GroupAlgebraElement::zero(ring, degree);
    for w in group {
        let c = if signed {
            out.ring.from_i64(w.sign())
        } else {
            out.ring.one()
        };
        out.add_term(w, &c);
    }
    Ok(out)
}

/// `x_μ = Σ_{w ∈ S_μ} w`, with `S_μ` acting on consecutive blocks starting at
/// `first` inside `S_degree`.
pub fn x_sym<R: Ring>(ring: R, mu: &[usize], first: usize, degree: usize) -> Result<GroupAlgebraElement<R>> {
    young_sum(ring, mu, first, degree, false)
}

/// `y_μ = Σ_{w ∈ S_μ} sign(w) w`.
pub fn y_sym<R: Ring>(ring: R, mu: &[usize], first: usize, degree: usize) -> Result<GroupAlgebraElement<R>> {
    young_sum(ring, mu, first, degree, true)
}

/// The Jucys-Murphy operator `L_a = (1,a) + (2,a) + ⋯ + (a-1,a)`; `L_1 = 0`.
pub fn jm_operator<R: Ring>(ring: R, a: usize, degree: usize) -> Result<GroupAlgebraElement<R>> {
    if a == 0 || a > degree {
        return Err(Error::OutOfRange { index: a, max: degree });
    }
    let mut out = GroupAlgebraElement::zero(ring, degree);
    let one = out.ring.one();
    for i in 1..a {
        out.add_term(Permutation::transposition(degree, i, a)?, &one);
    }
    Ok(out)
}

/// Which defining relation an instance checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    SSquare,
    ESquare,
    ES,
    SE,
    SSCommute,
    SECommute,
    EECommute,
    Braid,
    EEE,
    EEEShifted,
    SEE,
    EES,
}

impl Relation {
    pub fn formula(self) -> &'static str {
        match self {
            Relation::SSquare => "s_i s_i = 1",
            Relation::ESquare => "e_i e_i = delta e_i",
            Relation::ES => "e_i s_i = e_i",
            Relation::SE => "s_i e_i = e_i",
            Relation::SSCommute => "s_i s_j = s_j s_i",
            Relation::SECommute => "s_i e_j = e_j s_i",
            Relation::EECommute => "e_i e_j = e_j e_i",
            Relation::Braid => "s_i s_{i+1} s_i = s_{i+1} s_i s_{i+1}",
            Relation::EEE => "e_i e_{i+1} e_i = e_i",
            Relation::EEEShifted => "e_{i+1} e_i e_{i+1} = e_{i+1}",
            Relation::SEE => "s_i e_{i+1} e_i = s_{i+1} e_i",
            Relation::EES => "e_{i+1} e_i s_{i+1} = e_{i+1} s_i",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationCheck {
    pub relation: Relation,
    pub formula: &'static str,
    pub indices: Vec<usize>,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationReport {
    pub n: usize,
    pub ring: String,
    pub delta: String,
    pub checks: Vec<RelationCheck>,
    pub all_passed: bool,
}

impl RelationReport {
    pub fn failures(&self) -> Vec<&RelationCheck> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }
}

/// Evaluates every defining relation of the presentation on generator
/// diagrams. The commuting relations are checked for all `|i - j| > 1`.
pub fn verify_relations<R: Ring>(ring: R, n: usize, delta: R::Elem) -> Result<RelationReport> {
    if n < 2 {
        return Err(Error::Precondition(format!(
            "the presentation needs n >= 2 (got n = {n})"
        )));
    }
    let s: Vec<AlgebraElement<R>> = (1..n)
        .map(|i| AlgebraElement::s(ring.clone(), delta.clone(), i, n))
        .collect::<Result<_>>()?;
    let e: Vec<AlgebraElement<R>> = (1..n)
        .map(|i| AlgebraElement::e(ring.clone(), delta.clone(), i, n))
        .collect::<Result<_>>()?;
    let one = AlgebraElement::identity(ring.clone(), n, delta.clone());
    let si = |i: usize| &s[i - 1];
    let ei = |i: usize| &e[i - 1];
    let prod = |xs: &[&AlgebraElement<R>]| -> Result<AlgebraElement<R>> {
        let mut acc = one.clone();
        for x in xs {
            acc = acc.mul(x)?;
        }
        Ok(acc)
    };

    let mut checks = Vec::new();
    let mut push = |relation: Relation, indices: Vec<usize>, lhs: AlgebraElement<R>, rhs: AlgebraElement<R>| {
        checks.push(RelationCheck {
            relation,
            formula: relation.formula(),
            indices,
            passed: lhs == rhs,
        });
    };
    for i in 1..n {
        push(Relation::SSquare, vec![i], prod(&[si(i), si(i)])?, one.clone());
        push(Relation::ESquare, vec![i], prod(&[ei(i), ei(i)])?, ei(i).scale(&delta));
        push(Relation::ES, vec![i], prod(&[ei(i), si(i)])?, ei(i).clone());
        push(Relation::SE, vec![i], prod(&[si(i), ei(i)])?, ei(i).clone());
    }
    for i in 1..n {
        for j in 1..n {
            if i.abs_diff(j) < 2 {
                continue;
            }
            if i < j {
                push(
                    Relation::SSCommute,
                    vec![i, j],
                    prod(&[si(i), si(j)])?,
                    prod(&[si(j), si(i)])?,
                );
                push(
                    Relation::EECommute,
                    vec![i, j],
                    prod(&[ei(i), ei(j)])?,
                    prod(&[ei(j), ei(i)])?,
                );
            }
            push(
                Relation::SECommute,
                vec![i, j],
                prod(&[si(i), ei(j)])?,
                prod(&[ei(j), si(i)])?,
            );
        }
    }
    for i in 1..n - 1 {
        let j = i + 1;
        push(
            Relation::Braid,
            vec![i],
            prod(&[si(i), si(j), si(i)])?,
            prod(&[si(j), si(i), si(j)])?,
        );
        push(Relation::EEE, vec![i], prod(&[ei(i), ei(j), ei(i)])?, ei(i).clone());
        push(
            Relation::EEEShifted,
            vec![i],
            prod(&[ei(j), ei(i), ei(j)])?,
            ei(j).clone(),
        );
        push(
            Relation::SEE,
            vec![i],
            prod(&[si(i), ei(j), ei(i)])?,
            prod(&[si(j), ei(i)])?,
        );
        push(
            Relation::EES,
            vec![i],
            prod(&[ei(j), ei(i), si(j)])?,
            prod(&[ei(j), si(i)])?,
        );
    }
    let all_passed = checks.iter().all(|c| c.passed);
    Ok(RelationReport {
        n,
        ring: ring.descriptor(),
        delta: ring.format(&delta),
        checks,
        all_passed,
    })
}

/// `𝔇_f`: permutations `d ∈ S_n` such that `t^ν d` is row standard, where
/// `t^ν` is the initial bitableau of shape `((2^f), (n-2f))`, and the first
/// column of its first component is increasing. Sorted by image table.
pub fn d_f_set(n: usize, f: usize) -> Result<Vec<Permutation>> {
    if 2 * f > n {
        return Err(Error::OutOfRange { index: f, max: n / 2 });
    }
    let pairs: Vec<Vec<usize>> = (1..=f).map(|i| vec![2 * i - 1, 2 * i]).collect();
    let tail: Vec<usize> = (2 * f + 1..=n).collect();
    let first = Tableau::from_rows(pairs);
    let second = Tableau::from_rows(if tail.is_empty() { vec![] } else { vec![tail] });
    let mut out = Vec::new();
    for d in Permutation::all(n) {
        let a = first.relabel(&d)?;
        let b = second.relabel(&d)?;
        let column: Vec<usize> = a.rows().iter().map(|r| r[0]).collect();
        if a.is_row_standard() && b.is_row_standard() && column.windows(2).all(|w| w[0] < w[1]) {
            out.push(d);
        }
    }
    Ok(out)
}

/// Permutations of `{2f+1..n}` inside `S_n`.
pub fn tail_permutations(n: usize, f: usize) -> Result<Vec<Permutation>> {
    Permutation::young_subgroup(&[n - 2 * f], 2 * f + 1, n)
}

/// `d1⁻¹ · e_1 e_3 ⋯ e_{2f-1} · σ · d2`.
pub fn enyang_element<R: Ring>(
    ring: R,
    delta: R::Elem,
    n: usize,
    f: usize,
    d1: &Permutation,
    sigma: &Permutation,
    d2: &Permutation,
) -> Result<AlgebraElement<R>> {
    let dset = d_f_set(n, f)?;
    for (name, d) in [("d1", d1), ("d2", d2)] {
        if !dset.contains(d) {
            return Err(Error::Precondition(format!("{name} = {d} is not in D_{f} for n = {n}")));
        }
    }
    if sigma.degree() != n || (1..=2 * f).any(|a| sigma.apply(a) != a) {
        return Err(Error::Precondition(format!(
            "sigma = {sigma} does not permute {{{}..{n}}}",
            2 * f + 1
        )));
    }
    let mut acc = AlgebraElement::permutation(ring.clone(), delta.clone(), &d1.inverse());
    for i in 1..=f {
        acc = acc.mul(&AlgebraElement::e(ring.clone(), delta.clone(), 2 * i - 1, n)?)?;
    }
    acc = acc.mul(&AlgebraElement::permutation(ring.clone(), delta.clone(), sigma))?;
    acc.mul(&AlgebraElement::permutation(ring, delta, d2))
}

/// The normal-form data `(f, d1, σ, d2)` of a single diagram, inverse to
/// [`enyang_element`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalForm {
    pub f: usize,
    pub d1: Permutation,
    pub sigma: Permutation,
    pub d2: Permutation,
}

/// Reads off the normal form directly from the edges: `d1` lists the
/// endpoints of the top horizontal edges pairwise, then the free top vertices;
/// `d2` does the same for bottom columns; `σ` records the vertical strands.
pub fn normal_form(d: &BrauerDiagram) -> NormalForm {
    let n = d.n();
    let column = |v: usize| 2 * n + 1 - v;
    let partner = d.partner_table();
    let mut top_pairs = Vec::new();
    let mut bottom_pairs = Vec::new();
    for &(a, b) in d.edges() {
        if b <= n {
            top_pairs.push((a, b));
        } else if a > n {
            let (x, y) = (column(a), column(b));
            bottom_pairs.push((x.min(y), x.max(y)));
        }
    }
    bottom_pairs.sort();
    let f = top_pairs.len();
    let free_top: Vec<usize> = (1..=n).filter(|&v| partner[v] > n).collect();
    let free_bottom: Vec<usize> = (1..=n).filter(|&c| partner[column(c)] <= n).collect();
    let images = |pairs: &[(usize, usize)], free: &[usize]| -> Vec<usize> {
        pairs
            .iter()
            .flat_map(|&(a, b)| [a, b])
            .chain(free.iter().copied())
            .collect()
    };
    let d1 = Permutation::from_images(images(&top_pairs, &free_top)).expect("bijection");
    let d2 = Permutation::from_images(images(&bottom_pairs, &free_bottom)).expect("bijection");
    let d2_inv = d2.inverse();
    let mut sigma: Vec<usize> = (1..=n).collect();
    for k in 2 * f + 1..=n {
        let c = column(partner[d1.apply(k)]);
        sigma[k - 1] = d2_inv.apply(c);
    }
    NormalForm {
        f,
        d1,
        sigma: Permutation::from_images(sigma).expect("bijection"),
        d2,
    }
}
