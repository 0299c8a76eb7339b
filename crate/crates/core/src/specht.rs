//! Signed Young symmetrizers inside the Brauer algebra and the modules
//! `M^λ` they generate under the `⋆` action of `S_2n`.

use std::collections::HashSet;

use num_traits::One;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::{y_sym, AlgebraElement, DiagramIndex, GroupAlgebraElement};
use crate::combinatorics::{standard_tableaux, w_of, Composition, Partition, Permutation, Tableau};
use crate::error::{Error, Result};
use crate::exact_linalg::{EliminationDomain, Integers, PrimeField, Rationals, Ring, RowSolver, SparseMatrix};

/// `Y^(a)_(b)`: the signed sum of the `b!` diagrams that permute the strands
/// `a+1..a+b` and leave the others vertical.
pub fn y_block<R: Ring>(ring: R, delta: R::Elem, a: usize, b: usize, n: usize) -> Result<AlgebraElement<R>> {
    if b == 0 || a + b > n {
        return Err(Error::OutOfRange { index: a + b, max: n });
    }
    let mut out = AlgebraElement::zero(ring.clone(), n, delta.clone());
    for w in Permutation::young_subgroup(&[b], a + 1, n)? {
        let term = AlgebraElement::permutation(ring.clone(), delta.clone(), &w).scale(&ring.from_i64(w.sign()));
        out = out.add(&term)?;
    }
    Ok(out)
}

/// `Y_λ`, the product of the blocks `Y^(λ1+⋯+λ_{i-1})_(λ_i)`.
pub fn y_lambda<R: Ring>(ring: R, delta: R::Elem, lambda: &Partition) -> Result<AlgebraElement<R>> {
    let n = lambda.weight();
    let mut acc = AlgebraElement::identity(ring.clone(), n, delta.clone());
    let mut offset = 0;
    for &part in lambda.parts() {
        acc = acc.mul(&y_block(ring.clone(), delta.clone(), offset, part, n)?)?;
        offset += part;
    }
    Ok(acc)
}

/// The permutation carrying the blocks of `ν̂` onto the rows of `ν̃`, in
/// order: block `i` to row `2i-1` and its mirror block to row `2i`.
/// Conjugates `S_ν̂` onto `S_ν̃`.
pub fn d_nu(nu: &Partition) -> Result<Permutation> {
    let hat = Tableau::initial(nu.hat().parts(), 1);
    let tilde = Tableau::initial(nu.tilde().parts(), 1);
    let s = nu.len();
    let mut images = vec![0; nu.weight() * 2];
    for i in 0..s {
        for (row, target) in [(i, 2 * i), (2 * s - 1 - i, 2 * i + 1)] {
            for (&a, &b) in hat.rows()[row].iter().zip(&tilde.rows()[target]) {
                images[a - 1] = b;
            }
        }
    }
    Permutation::from_images(images)
}

/// `Y_{ν,t} = Y_ν ⋆ d_ν d(t)` for a standard `ν̃`-tableau `t`.
pub fn y_nu_t<R: Ring>(ring: R, delta: R::Elem, nu: &Partition, t: &Tableau) -> Result<AlgebraElement<R>> {
    let shape = nu.tilde();
    if t.shape() != shape.parts() || !t.is_standard() || !t.is_bijective_from(1) {
        return Err(Error::InvalidTableau(format!(
            "{:?} is not a standard tableau of shape {shape:?}",
            t.rows()
        )));
    }
    y_lambda(ring, delta, nu)?.star_perm(&d_nu(nu)?.then(&t.d_of()?))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct YBasisIndex {
    pub nu: Partition,
    pub tableau: Tableau,
}

/// An ordered spanning family `{Y_{ν,t}}` of `M^λ` or `M^{▷λ}`.
#[derive(Clone, Debug)]
pub struct MLambdaBasis<R: Ring> {
    pub lambda: Partition,
    pub n: usize,
    pub strict: bool,
    pub elements: Vec<(YBasisIndex, AlgebraElement<R>)>,
}

impl<R: Ring> MLambdaBasis<R> {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Coefficient vectors in the canonical diagram basis, one row each.
    pub fn matrix(&self, index: &DiagramIndex) -> Result<SparseMatrix<R>> {
        let ring = match self.elements.first() {
            Some((_, x)) => x.ring().clone(),
            None => {
                return Err(Error::Precondition(
                    "empty basis has no ring to build a matrix over".into(),
                ))
            }
        };
        let rows = self
            .elements
            .iter()
            .map(|(_, x)| x.to_vector(index))
            .collect::<Result<Vec<_>>>()?;
        SparseMatrix::new(ring, index.len(), rows)
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.elements
                .iter()
                .map(|(idx, x)| json!({"nu": idx.nu.to_string(), "tableau": idx.tableau, "element": x.to_json()}))
                .collect(),
        )
    }
}

fn m_lambda_family<R: Ring>(ring: R, delta: R::Elem, lambda: &Partition, strict: bool) -> Result<MLambdaBasis<R>> {
    let n = lambda.weight();
    let mut indices = Vec::new();
    // decreasing lexicographic order refines dominance
    for nu in Partition::all(n) {
        if !nu.dominates(lambda)? || (strict && nu == *lambda) {
            continue;
        }
        for t in standard_tableaux(&nu.tilde()) {
            indices.push(YBasisIndex {
                nu: nu.clone(),
                tableau: t,
            });
        }
    }
    let elements = indices
        .into_par_iter()
        .map(|idx| {
            let x = y_nu_t(ring.clone(), delta.clone(), &idx.nu, &idx.tableau)?;
            Ok((idx, x))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(MLambdaBasis {
        lambda: lambda.clone(),
        n,
        strict,
        elements,
    })
}

/// `{Y_{ν,t} : λ ⊴ ν, t ∈ Std(ν̃)}`.
pub fn m_lambda_basis<R: Ring>(ring: R, delta: R::Elem, lambda: &Partition) -> Result<MLambdaBasis<R>> {
    m_lambda_family(ring, delta, lambda, false)
}

/// `{Y_{ν,t} : λ ◁ ν, t ∈ Std(ν̃)}`.
pub fn m_lambda_strict<R: Ring>(ring: R, delta: R::Elem, lambda: &Partition) -> Result<MLambdaBasis<R>> {
    m_lambda_family(ring, delta, lambda, true)
}

/// Adjacent transpositions `(i, i+1)` lying inside one block of a composition.
pub fn block_generators(blocks: &[usize], degree: usize) -> Result<Vec<Permutation>> {
    let mut out = Vec::new();
    let mut start = 1;
    for &b in blocks {
        for i in start..start + b.saturating_sub(1) {
            out.push(Permutation::simple(degree, i)?);
        }
        start += b;
    }
    Ok(out)
}

/// Whether `Y_λ ⋆ g = Y_λ` for each Coxeter generator `g` of `S_λ̂`.
pub fn young_invariance_check(lambda: &Partition) -> Result<bool> {
    let n = lambda.weight();
    let y = y_lambda(Integers, 0.into(), lambda)?;
    for g in block_generators(lambda.hat().parts(), 2 * n)? {
        if y.star_perm(&g)? != y {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `λ(s)`: each entry `i` of `s` replaced by its row number in `t^α`.
pub fn type_tableau(s: &Tableau, alpha: &Partition) -> Tableau {
    let base = Tableau::initial(alpha.parts(), 1);
    let rows = s
        .rows()
        .iter()
        .map(|r| r.iter().map(|&i| base.position(i).map_or(0, |(row, _)| row)).collect())
        .collect();
    Tableau::from_rows(rows)
}

/// Murphy's `x_{S,t} = Σ_{s ∈ Std(μ), α(s) = S} d(s)⁻¹ x_μ d(t)`.
pub fn murphy_x<R: Ring>(ring: R, big_s: &Tableau, t: &Tableau, alpha: &Partition) -> Result<GroupAlgebraElement<R>> {
    let shape = Partition::new(t.shape())?;
    let degree = shape.weight();
    if big_s.shape() != t.shape() || alpha.weight() != degree || !t.is_standard() || !t.is_bijective_from(1) {
        return Err(Error::InvalidTableau(format!(
            "inconsistent tableaux {:?} / {:?} for type {alpha:?}",
            big_s.rows(),
            t.rows()
        )));
    }
    let x_mu = crate::algebra::x_sym(ring.clone(), shape.parts(), 1, degree)?;
    let dt = GroupAlgebraElement::from_perm(ring.clone(), t.d_of()?);
    let right = x_mu.mul(&dt)?;
    let mut out = GroupAlgebraElement::zero(ring, degree);
    for s in standard_tableaux(&shape) {
        if type_tableau(&s, alpha) == *big_s {
            out = out.add(&right.left_mul_perm(&s.d_of()?.inverse())?)?;
        }
    }
    Ok(out)
}

/// `rank M^λ − rank M^{▷λ}` over the given ring.
pub fn filtration_quotient_rank<R: EliminationDomain>(ring: R, lambda: &Partition) -> Result<usize> {
    let index = DiagramIndex::new(lambda.weight());
    let full = m_lambda_basis(ring.clone(), ring.zero(), lambda)?;
    let strict = m_lambda_strict(ring.clone(), ring.zero(), lambda)?;
    let r_full = full.matrix(&index)?.rank();
    let r_strict = if strict.is_empty() {
        0
    } else {
        strict.matrix(&index)?.rank()
    };
    Ok(r_full - r_strict)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClosureFailure {
    pub basis_index: usize,
    pub generator: usize,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClosureReport {
    pub lambda: Partition,
    pub n: usize,
    pub basis_size: usize,
    pub generators: usize,
    pub checked: usize,
    pub failures: Vec<ClosureFailure>,
    pub passed: bool,
}

/// Re-expresses every `Y_{ν,t} ⋆ (i, i+1)` in the `M^λ` family over the
/// rationals and checks the coefficients are integers.
pub fn submodule_closure_check(lambda: &Partition) -> Result<ClosureReport> {
    let n = lambda.weight();
    let index = DiagramIndex::new(n);
    let q = Rationals;
    let basis = m_lambda_basis(q, q.zero(), lambda)?;
    let solver = RowSolver::new(&basis.matrix(&index)?);
    let gens: Vec<Permutation> = (1..2 * n)
        .map(|i| Permutation::simple(2 * n, i))
        .collect::<Result<_>>()?;
    let per_element: Vec<Vec<ClosureFailure>> = basis
        .elements
        .par_iter()
        .enumerate()
        .map(|(bi, (_, y))| {
            let mut fails = Vec::new();
            for (gi, g) in gens.iter().enumerate() {
                let v = y.star_perm(g)?.to_vector(&index)?;
                let reason = match solver.solve(&v) {
                    None => Some("image lies outside the span".to_string()),
                    Some(c) if c.entries().iter().any(|(_, x)| !x.is_integer()) => {
                        Some("re-expression needs non-integer coefficients".to_string())
                    }
                    Some(_) => None,
                };
                if let Some(reason) = reason {
                    fails.push(ClosureFailure {
                        basis_index: bi,
                        generator: gi + 1,
                        reason,
                    });
                }
            }
            Ok(fails)
        })
        .collect::<Result<_>>()?;
    let failures: Vec<ClosureFailure> = per_element.into_iter().flatten().collect();
    Ok(ClosureReport {
        lambda: lambda.clone(),
        n,
        basis_size: basis.len(),
        generators: gens.len(),
        checked: basis.len() * gens.len(),
        passed: failures.is_empty(),
        failures,
    })
}

/// `n_λ̂ = ∏ 2^{k_i} k_i!` over the distinct parts of `λ` with multiplicities `k_i`.
pub fn n_hat(lambda: &Partition) -> u128 {
    let mut out: u128 = 1;
    let parts = lambda.parts();
    let mut i = 0;
    while i < parts.len() {
        let k = parts[i..].iter().take_while(|&&p| p == parts[i]).count();
        out *= (1u128 << k) * crate::combinatorics::factorial(k);
        i += k;
    }
    out
}

/// Membership in the subgroup `𝔖̃_λ̂` of `S_λ̂'`: for all rows `i, j` of equal
/// length and all columns `a, b`, the four statements
/// `t(i,a)w = t(j,a)`, `t(i,b)w = t(j,b)`, `t(i*,a)w = t(j*,a)`,
/// `t(i*,b)w = t(j*,b)` are equivalent, where `t = t_λ̂` and `i* = 2s+1-i`.
/// The rows range over all `2s` rows of `λ̂`.
pub fn in_tilde_subgroup(lambda: &Partition, w: &Permutation) -> bool {
    let hat = lambda.hat();
    let rows = hat.parts();
    let t = Tableau::column_filled(rows, 1);
    let r = rows.len();
    let at = |i: usize, a: usize| t.get(i, a).expect("cell exists");
    let holds = |i: usize, j: usize, a: usize| w.apply(at(i, a)) == at(j, a);
    for i in 1..=r {
        for j in 1..=r {
            if rows[i - 1] != rows[j - 1] {
                continue;
            }
            let (mi, mj) = (r + 1 - i, r + 1 - j);
            let reference = holds(i, j, 1);
            for a in 1..=rows[i - 1] {
                if holds(i, j, a) != reference || holds(mi, mj, a) != reference {
                    return false;
                }
            }
        }
    }
    true
}

/// The column stabilizer `S_λ̂'` of `t_λ̂`.
pub fn column_group(lambda: &Partition) -> Result<Vec<Permutation>> {
    let conj = lambda.hat().conjugate();
    Permutation::young_subgroup(conj.parts(), 1, 2 * lambda.weight())
}

pub fn tilde_subgroup(lambda: &Partition) -> Result<Vec<Permutation>> {
    Ok(column_group(lambda)?
        .into_iter()
        .filter(|w| in_tilde_subgroup(lambda, w))
        .collect())
}

/// Minimal-length representatives of the right cosets `𝔖̃ w` in `S_λ̂'`,
/// ties broken by image table.
pub fn coset_representatives(lambda: &Partition) -> Result<Vec<Permutation>> {
    let sub = tilde_subgroup(lambda)?;
    let mut group = column_group(lambda)?;
    group.sort_by_cached_key(|w| (w.length(), w.images().to_vec()));
    let mut seen: HashSet<Permutation> = HashSet::new();
    let mut reps = Vec::new();
    for w in group {
        if seen.contains(&w) {
            continue;
        }
        for g in &sub {
            seen.insert(g.then(&w));
        }
        reps.push(w);
    }
    Ok(reps)
}

/// `h_λ̂ = Σ sign(w) w` over [`coset_representatives`].
pub fn h_hat<R: Ring>(ring: R, lambda: &Partition) -> Result<GroupAlgebraElement<R>> {
    let degree = 2 * lambda.weight();
    let terms = coset_representatives(lambda)?
        .into_iter()
        .map(|w| {
            let c = ring.from_i64(w.sign());
            (w, c)
        })
        .collect();
    GroupAlgebraElement::from_terms(ring, degree, terms)
}

fn w_hat(lambda: &Partition) -> Permutation {
    w_of(lambda.hat().parts())
}

/// `z = Y_λ ⋆ (w_λ̂ y_λ̂')`.
pub fn z_element<R: Ring>(ring: R, delta: R::Elem, lambda: &Partition) -> Result<AlgebraElement<R>> {
    let degree = 2 * lambda.weight();
    let conj = lambda.hat().conjugate();
    let g = y_sym(ring.clone(), conj.parts(), 1, degree)?.left_mul_perm(&w_hat(lambda))?;
    y_lambda(ring, delta, lambda)?.star(&g)
}

/// `Y_λ ⋆ (w_λ̂ h_λ̂)`.
pub fn z_reduced<R: Ring>(ring: R, delta: R::Elem, lambda: &Partition) -> Result<AlgebraElement<R>> {
    let g = h_hat(ring.clone(), lambda)?.left_mul_perm(&w_hat(lambda))?;
    y_lambda(ring, delta, lambda)?.star(&g)
}

/// Whether `Y_λ ⋆ (w_λ̂ y_λ̂') = n_λ̂ · (Y_λ ⋆ (w_λ̂ h_λ̂))` over the integers.
pub fn lemma_factorization_check(lambda: &Partition) -> Result<bool> {
    let z = z_element(Integers, 0.into(), lambda)?;
    let zr = z_reduced(Integers, 0.into(), lambda)?;
    Ok(z == zr.scale(&n_hat(lambda).into()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EigenCheck {
    pub a: usize,
    pub expected: i64,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JmReport {
    pub lambda: Partition,
    pub nonzero: bool,
    pub checks: Vec<EigenCheck>,
    pub passed: bool,
}

/// Checks `z ⋆ L_a = res(a)·z` for `a = 1..2n`, where `res` is read off the
/// column tableau `t_λ̃` and `z = Y_λ ⋆ (w_λ̂ y_λ̂')`.
pub fn jm_eigencheck(lambda: &Partition) -> Result<JmReport> {
    let degree = 2 * lambda.weight();
    let z = z_element(Rationals, Rationals.zero(), lambda)?;
    let t = Tableau::column_filled(lambda.tilde().parts(), 1);
    let mut checks = Vec::new();
    for a in 1..=degree {
        let expected = t.residue(a)?;
        let lhs = z.star(&crate::algebra::jm_operator(Rationals, a, degree)?)?;
        let passed = lhs == z.scale(&Rationals.from_i64(expected));
        checks.push(EigenCheck { a, expected, passed });
    }
    let nonzero = !z.is_zero();
    Ok(JmReport {
        lambda: lambda.clone(),
        nonzero,
        passed: nonzero && checks.iter().all(|c| c.passed),
        checks,
    })
}

/// Whether `Y_λ ⋆ (w_λ̂ h_λ̂)` survives reduction mod `p`.
pub fn mod_p_nonvanishing(lambda: &Partition, p: u64) -> Result<bool> {
    let f = PrimeField::new(p)?;
    Ok(!z_reduced(f, 0, lambda)?.is_zero())
}

/// Whether `Y_λ ⋆ (w_λ̂ y_λ̂')` survives reduction mod `p`.
pub fn z_nonvanishing_mod_p(lambda: &Partition, p: u64) -> Result<bool> {
    let f = PrimeField::new(p)?;
    Ok(!z_element(f, 0, lambda)?.is_zero())
}

/// The change-of-basis matrix from the full `{Y_{ν,t}}` family to diagrams
/// and whether it is unimodular.
pub fn full_basis_unimodular(n: usize) -> Result<bool> {
    let index = DiagramIndex::new(n);
    let ones = Partition::new(vec![1; n])?;
    let basis = m_lambda_basis(Integers, 0.into(), &ones)?;
    basis.matrix(&index)?.is_unimodular()
}

/// Rank of the full `{Y_{ν,t}}` family over `GF(p)`.
pub fn full_basis_rank_mod_p(n: usize, p: u64) -> Result<usize> {
    let f = PrimeField::new(p)?;
    let index = DiagramIndex::new(n);
    let ones = Partition::new(vec![1; n])?;
    Ok(m_lambda_basis(f, 0, &ones)?.matrix(&index)?.rank())
}

/// `λ̂` as a composition, for reports.
pub fn hat_of(lambda: &Partition) -> Composition {
    lambda.hat()
}

/// `(m+1, 1^{n-m-1})`, the partition whose `M` is the kernel of `φ`.
pub fn kernel_hook(n: usize, m: usize) -> Result<Partition> {
    if m >= n {
        return Err(Error::Precondition(format!(
            "no hook (m+1, 1^(n-m-1)) for n = {n} <= m = {m}"
        )));
    }
    Partition::hook(m + 1, n - m - 1)
}

pub fn is_unit_coefficient(x: &AlgebraElement<Integers>) -> bool {
    x.terms().all(|(_, c)| c.magnitude().is_one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{double_factorial_odd, factorial, semistandard_tableaux};
    use crate::diagram::BrauerDiagram;
    use num_bigint::BigInt;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn zint() -> (Integers, BigInt) {
        (Integers, BigInt::from(0))
    }

    fn perm_el(pi: &Permutation) -> AlgebraElement<Integers> {
        AlgebraElement::permutation(Integers, 0.into(), pi)
    }

    #[test]
    fn y_block_examples() {
        let (z, d) = zint();
        assert_eq!(
            y_block(z, d.clone(), 0, 1, 1).unwrap(),
            AlgebraElement::identity(z, 1, d.clone())
        );
        let expected = AlgebraElement::identity(z, 2, d.clone())
            .sub(&AlgebraElement::s(z, d.clone(), 1, 2).unwrap())
            .unwrap();
        assert_eq!(y_block(z, d.clone(), 0, 2, 2).unwrap(), expected);
        assert_eq!(y_block(z, d.clone(), 0, 4, 4).unwrap().len(), 24);
        assert!(y_block(z, d, 2, 2, 3).is_err());
    }

    #[test]
    fn y_lambda_examples() {
        let (z, d) = zint();
        for n in 1..=4 {
            assert_eq!(
                y_lambda(z, d.clone(), &p(&vec![1; n])).unwrap(),
                AlgebraElement::identity(z, n, d.clone())
            );
        }
        let expected = AlgebraElement::identity(z, 3, d.clone())
            .sub(&AlgebraElement::s(z, d.clone(), 1, 3).unwrap())
            .unwrap();
        assert_eq!(y_lambda(z, d, &p(&[2, 1])).unwrap(), expected);
    }

    #[test]
    fn y_lambda_is_signed_young_sum() {
        for n in 1..=4 {
            for lambda in Partition::all(n) {
                let mut expected = AlgebraElement::zero(Integers, n, 0.into());
                for w in Permutation::young_subgroup(lambda.parts(), 1, n).unwrap() {
                    expected = expected.add(&perm_el(&w).scale(&w.sign().into())).unwrap();
                }
                let y = y_lambda(Integers, 0.into(), &lambda).unwrap();
                assert_eq!(y, expected);
                assert_eq!(y.len() as u128, lambda.parts().iter().map(|&k| factorial(k)).product());
            }
        }
    }

    #[test]
    fn y_nu_t_examples() {
        let (z, d) = zint();
        let nu = p(&[2]);
        let t0 = Tableau::initial(&[2, 2], 1);
        assert_eq!(
            y_nu_t(z, d.clone(), &nu, &t0).unwrap(),
            y_lambda(z, d.clone(), &nu).unwrap()
        );
        for t in standard_tableaux(&p(&[1, 1, 1, 1])) {
            let y = y_nu_t(z, d.clone(), &p(&[1, 1]), &t).unwrap();
            assert!(y.len() == 1 && is_unit_coefficient(&y));
        }
        let not_standard = Tableau::from_rows(vec![vec![2, 1], vec![3, 4]]);
        assert!(y_nu_t(z, d, &nu, &not_standard).is_err());
    }

    #[test]
    fn d_nu_moves_the_symmetry_onto_tilde_rows() {
        assert!(d_nu(&p(&[3])).unwrap().is_identity());
        assert_eq!(d_nu(&p(&[2, 1])).unwrap().images(), &[1, 2, 5, 6, 3, 4]);
        for n in 1..=4 {
            for nu in Partition::all(n) {
                let y = y_lambda(Integers, 0.into(), &nu)
                    .unwrap()
                    .star_perm(&d_nu(&nu).unwrap())
                    .unwrap();
                for g in block_generators(nu.tilde().parts(), 2 * n).unwrap() {
                    let moved = y.star_perm(&g).unwrap();
                    assert!(moved == y || moved == y.neg());
                }
            }
        }
    }

    #[test]
    fn y_nu_t_distinct_and_unit() {
        for n in 1..=4 {
            for nu in Partition::all(n) {
                let mut seen = HashSet::new();
                for t in standard_tableaux(&nu.tilde()) {
                    let y = y_nu_t(Integers, 0.into(), &nu, &t).unwrap();
                    assert!(is_unit_coefficient(&y));
                    assert!(y.len() as u128 <= nu.parts().iter().map(|&k| factorial(k)).product());
                    assert!(seen.insert(y.to_json().to_string()));
                }
            }
        }
    }

    #[test]
    fn m_lambda_sizes() {
        let (z, d) = zint();
        assert_eq!(m_lambda_basis(z, d.clone(), &p(&[2])).unwrap().len(), 2);
        let b = m_lambda_basis(z, d.clone(), &p(&[2, 1])).unwrap();
        assert_eq!(b.len(), 14);
        assert_eq!(b.elements.iter().filter(|(i, _)| i.nu == p(&[3])).count(), 5);
        for n in 1..=4 {
            let all = m_lambda_basis(z, d.clone(), &p(&vec![1; n])).unwrap();
            assert_eq!(all.len() as u128, double_factorial_odd(n));
        }
        assert!(m_lambda_strict(z, d, &p(&[3])).unwrap().is_empty());
    }

    #[test]
    fn full_family_is_a_z_basis() {
        for n in 1..=3 {
            assert!(full_basis_unimodular(n).unwrap());
            for prime in [2, 3, 5] {
                assert_eq!(
                    full_basis_rank_mod_p(n, prime).unwrap() as u128,
                    double_factorial_odd(n)
                );
            }
        }
    }

    #[test]
    fn invariance_under_row_stabilizer() {
        assert!(young_invariance_check(&p(&[2])).unwrap());
        assert!(young_invariance_check(&p(&[1, 1, 1])).unwrap());
        assert!(young_invariance_check(&p(&[3, 1])).unwrap());
        assert_eq!(block_generators(p(&[3, 1]).hat().parts(), 8).unwrap().len(), 4);
        // generators outside the blocks do not fix Y_λ in general
        let y = y_lambda(Integers, 0.into(), &p(&[2])).unwrap();
        assert_ne!(y.star_perm(&Permutation::simple(4, 2).unwrap()).unwrap(), y);
    }

    #[test]
    fn filtration_quotients() {
        assert_eq!(filtration_quotient_rank(Rationals, &p(&[2, 1])).unwrap(), 9);
        assert_eq!(filtration_quotient_rank(Rationals, &p(&[3])).unwrap(), 5);
        assert_eq!(filtration_quotient_rank(Rationals, &p(&[1, 1, 1])).unwrap(), 1);
    }

    #[test]
    fn closure_small() {
        let r = submodule_closure_check(&p(&[2])).unwrap();
        assert!(r.passed);
        assert_eq!((r.basis_size, r.generators), (2, 3));
        assert!(submodule_closure_check(&p(&[1, 1, 1])).unwrap().passed);
    }

    #[test]
    fn closure_detects_a_non_submodule() {
        // a single Y_{ν,t} (not the whole family) is not closed
        let q = Rationals;
        let index = DiagramIndex::new(2);
        let y = y_lambda(q, q.zero(), &p(&[2])).unwrap();
        let solver = RowSolver::new(&SparseMatrix::new(q, 3, vec![y.to_vector(&index).unwrap()]).unwrap());
        let image = y.star_perm(&Permutation::simple(4, 2).unwrap()).unwrap();
        assert!(solver.solve(&image.to_vector(&index).unwrap()).is_none());
    }

    #[test]
    fn n_hat_values() {
        assert_eq!(n_hat(&p(&[3])), 2);
        assert_eq!(n_hat(&p(&[2, 1])), 4);
        assert_eq!(n_hat(&p(&[1, 1, 1, 1])), 384);
        assert_eq!(n_hat(&p(&[2, 2])), 8);
    }

    #[test]
    fn tilde_subgroup_has_order_n_hat() {
        for n in 1..=4 {
            for lambda in Partition::all(n) {
                let sub = tilde_subgroup(&lambda).unwrap();
                assert_eq!(sub.len() as u128, n_hat(&lambda), "{lambda:?}");
                let set: HashSet<_> = sub.iter().cloned().collect();
                for a in &sub {
                    for b in &sub {
                        assert!(set.contains(&a.then(b)));
                    }
                }
                let reps = coset_representatives(&lambda).unwrap();
                assert_eq!(reps.len() * sub.len(), column_group(&lambda).unwrap().len());
            }
        }
    }

    #[test]
    fn lemma_factorization_small() {
        for lambda in [p(&[1]), p(&[2]), p(&[1, 1]), p(&[2, 1]), p(&[3])] {
            assert!(lemma_factorization_check(&lambda).unwrap(), "{lambda:?}");
        }
    }

    #[test]
    fn z_vanishes_mod_primes_dividing_n_hat() {
        let lambda = p(&[2, 1]);
        assert!(!z_nonvanishing_mod_p(&lambda, 2).unwrap());
        for prime in [2, 3, 5] {
            assert!(mod_p_nonvanishing(&lambda, prime).unwrap());
        }
        assert!(mod_p_nonvanishing(&p(&[3]), 7).unwrap());
    }

    #[test]
    fn jm_on_columns() {
        let r = jm_eigencheck(&p(&[1, 1])).unwrap();
        assert!(r.passed, "{r:?}");
        let expected: Vec<i64> = r.checks.iter().map(|c| c.expected).collect();
        assert_eq!(expected, vec![0, -1, -2, -3]);
        let r = jm_eigencheck(&p(&[2])).unwrap();
        assert!(r.passed, "{r:?}");
        assert!(jm_eigencheck(&p(&[2, 1])).unwrap().passed);
    }

    #[test]
    fn murphy_basis_of_permutation_module() {
        let alpha = p(&[2, 2]);
        let q = Rationals;
        let mut rows = Vec::new();
        let perms = Permutation::all(4);
        let to_vec = |g: &GroupAlgebraElement<Rationals>| {
            let dense: Vec<_> = perms.iter().map(|w| g.coeff(w)).collect();
            crate::exact_linalg::SparseVec::from_dense(&q, &dense)
        };
        for mu in Partition::all(4) {
            for big_s in semistandard_tableaux(&mu, &alpha) {
                for t in standard_tableaux(&mu) {
                    rows.push(to_vec(&murphy_x(q, &big_s, &t, &alpha).unwrap()));
                }
            }
        }
        assert_eq!(rows.len(), 6);
        let m = SparseMatrix::new(q, 24, rows).unwrap();
        assert_eq!(m.rank(), 6);
        // the span is x_α Q[S_4]
        let x_alpha = crate::algebra::x_sym(q, &[2, 2], 1, 4).unwrap();
        let module: Vec<_> = perms
            .iter()
            .map(|w| to_vec(&x_alpha.mul(&GroupAlgebraElement::from_perm(q, w.clone())).unwrap()))
            .collect();
        assert!(m.span_equal(&SparseMatrix::new(q, 24, module).unwrap()).unwrap());
        // the trivial case collapses to x_μ
        let t = Tableau::initial(&[2, 2], 1);
        let s = Tableau::from_rows(vec![vec![1, 1], vec![2, 2]]);
        assert_eq!(murphy_x(q, &s, &t, &alpha).unwrap(), x_alpha);
    }

    #[test]
    fn basis_json_shape() {
        let b = m_lambda_basis(Integers, 0.into(), &p(&[1])).unwrap();
        let v = b.to_json();
        assert_eq!(v[0]["nu"], json!("1"));
        assert_eq!(v[0]["tableau"], json!([[1], [2]]));
        assert_eq!(
            v[0]["element"]["terms"][0]["diagram"],
            json!(BrauerDiagram::identity(1))
        );
    }
}
