use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use brauer_core::algebra::{d_f_set, enyang_element, tail_permutations, verify_relations, AlgebraElement};
use brauer_core::combinatorics::{double_factorial_odd, standard_tableaux, Partition, Permutation};
use brauer_core::duality::{
    base_change_report, form_comparison, injectivity_check, kernel_dim_formula, kernel_of_phi,
    verify_annihilator_theorem, Budget,
};
use brauer_core::exact_linalg::{EliminationDomain, IntPolys, Integers, Poly, PrimeField, Rationals};
use brauer_core::specht::{
    filtration_quotient_rank, full_basis_rank_mod_p, full_basis_unimodular, jm_eigencheck, lemma_factorization_check,
    mod_p_nonvanishing, submodule_closure_check, z_element,
};
use brauer_core::tensor_rep::{
    action_matrix, cano_correspondence, diagram_functional, equivariance_check, BilinearForm, FormKind,
};
use brauer_core::{BrauerDiagram, Result};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Outcome = Result<(bool, String)>;

/// Name, time limit in seconds, check.
type Criterion = (&'static str, u64, fn() -> Outcome);

fn partitions_up_to(n: usize) -> impl Iterator<Item = Partition> {
    (1..=n).flat_map(Partition::all)
}

fn diagram_counts_and_normal_form() -> Outcome {
    let counts: Vec<usize> = (1..=6).map(|n| BrauerDiagram::all(n).len()).collect();
    let mut ok = counts == [1, 3, 15, 105, 945, 10395];
    for n in 1..=5 {
        let mut seen = BTreeSet::new();
        let mut total = 0;
        for f in 0..=n / 2 {
            let ds = d_f_set(n, f)?;
            for d1 in &ds {
                for sigma in tail_permutations(n, f)? {
                    for d2 in &ds {
                        let x = enyang_element(Integers, 0.into(), n, f, d1, &sigma, d2)?;
                        let mut terms = x.terms();
                        match (terms.next(), terms.next()) {
                            (Some((d, c)), None) if *c == 1.into() => {
                                seen.insert(d.clone());
                            }
                            _ => ok = false,
                        }
                        total += 1;
                    }
                }
            }
        }
        ok &= total as u128 == double_factorial_odd(n) && seen.len() == total;
    }
    Ok((ok, format!("counts {counts:?}")))
}

fn relations() -> Outcome {
    let mut ok = true;
    let mut checked = 0;
    for n in 2..=5 {
        for delta in [0i64, 1, -1, 2, 3] {
            let r = verify_relations(Integers, n, delta.into())?;
            ok &= r.all_passed;
            checked += r.checks.len();
        }
        let r = verify_relations(IntPolys, n, Poly::x())?;
        ok &= r.all_passed;
        checked += r.checks.len();
    }
    Ok((ok, format!("{checked} relation instances")))
}

fn integral_basis() -> Outcome {
    let mut ok = true;
    for n in 1..=4 {
        ok &= full_basis_unimodular(n)?;
        for p in [2, 3, 5] {
            ok &= full_basis_rank_mod_p(n, p)? as u128 == double_factorial_odd(n);
        }
    }
    Ok((ok, "n <= 4, GF(2), GF(3), GF(5)".into()))
}

fn filtration_for<R: EliminationDomain>(ring: R) -> Result<bool> {
    let mut ok = true;
    for n in 1..=4 {
        let mut sum = 0u128;
        for lambda in Partition::all(n) {
            let r = filtration_quotient_rank(ring.clone(), &lambda)? as u128;
            ok &= r == lambda.tilde().hook_dim();
            sum += r;
        }
        ok &= sum == double_factorial_odd(n);
    }
    Ok(ok)
}

fn filtration() -> Outcome {
    let ok = filtration_for(Rationals)? && filtration_for(PrimeField::new(3)?)?;
    Ok((ok, "Q and GF(3)".into()))
}

fn closure() -> Outcome {
    let mut ok = true;
    let mut checked = 0;
    for lambda in partitions_up_to(4) {
        let r = submodule_closure_check(&lambda)?;
        ok &= r.passed && r.generators == 2 * lambda.weight() - 1;
        checked += r.checked;
    }
    Ok((ok, format!("{checked} generator images re-expressed")))
}

fn eigen_and_factorization() -> Outcome {
    let mut ok = true;
    for lambda in partitions_up_to(4) {
        ok &= !z_element(Integers, 0.into(), &lambda)?.is_zero();
        ok &= jm_eigencheck(&lambda)?.passed;
        ok &= lemma_factorization_check(&lambda)?;
        for p in [2, 3, 5] {
            ok &= mod_p_nonvanishing(&lambda, p)?;
        }
    }
    Ok((ok, "all λ ⊢ n <= 4".into()))
}

fn annihilator() -> Outcome {
    let budget = Budget::default();
    // second oracle for the formula: count standard tableaux directly
    let count = |n: usize, m: usize| -> u128 {
        Partition::all(n)
            .into_iter()
            .filter(|nu| nu.first() > m)
            .map(|nu| standard_tableaux(&nu.tilde()).len() as u128)
            .sum()
    };
    let cases = [
        (2, 1, Some(2)),
        (3, 1, Some(14)),
        (3, 2, Some(5)),
        (4, 2, Some(70)),
        (4, 3, Some(14)),
        (5, 2, None),
    ];
    let mut ok = true;
    let mut dims = Vec::new();
    for (n, m, expected) in cases {
        let formula = kernel_dim_formula(n, m);
        ok &= formula == count(n, m) && expected.is_none_or(|e| e == formula);
        let mut reports = vec![verify_annihilator_theorem(
            n,
            m,
            Rationals,
            FormKind::Split,
            &budget,
            false,
        )?];
        for p in [3, 5, 7] {
            reports.push(verify_annihilator_theorem(
                n,
                m,
                PrimeField::new(p)?,
                FormKind::Split,
                &budget,
                false,
            )?);
        }
        for r in &reports {
            ok &= r.theorem_verified && r.kernel_dim as u128 == formula;
        }
        dims.push(format!("({n},{m})={formula}"));
    }
    Ok((ok, dims.join(" ")))
}

fn injectivity() -> Outcome {
    let budget = Budget::default();
    let mut ok = true;
    for (n, m) in [(2, 2), (2, 3), (3, 3), (3, 4), (4, 4)] {
        ok &= injectivity_check(n, m, &budget)?;
    }
    Ok((ok, "5 cases".into()))
}

fn base_change() -> Outcome {
    let budget = Budget::default();
    let mut ok = true;
    let mut dims = Vec::new();
    for (n, m) in [(2, 2), (3, 2), (3, 3)] {
        let r = base_change_report(n, m, &[3, 5, 7], FormKind::Split, &budget)?;
        ok &= r.agree && r.rings.len() == 4;
        dims.push(format!(
            "({n},{m}): ker {} end {}",
            r.rings[0].kernel_dim, r.rings[0].commutant_dim
        ));
    }
    Ok((ok, dims.join(", ")))
}

fn cross_validation() -> Outcome {
    let mut ok = true;
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for n in 1..=3 {
        for m in 1..=3 {
            let split = BilinearForm::split(m)?;
            for d in BrauerDiagram::all(n) {
                let a = AlgebraElement::from_diagram(Integers, (m as i64).into(), d.clone());
                let via_action = cano_correspondence(&action_matrix(&a, &split)?, m, n)?;
                ok &= via_action == diagram_functional(Integers, &d, &split)?;
            }
            let diagrams = BrauerDiagram::all(n);
            for _ in 0..100 {
                let mut images: Vec<usize> = (1..=2 * n).collect();
                images.shuffle(&mut rng);
                let w = Permutation::from_images(images)?;
                let d = diagrams.choose(&mut rng).expect("nonempty");
                for form in [split, BilinearForm::euclid(m)?] {
                    ok &= equivariance_check(d, &w, &form)?;
                }
            }
        }
    }
    Ok((ok, "n, m <= 3".into()))
}

fn forms() -> Outcome {
    let budget = Budget::default();
    let mut ok = true;
    for (n, m) in [(2, 1), (3, 2)] {
        let c = form_comparison(n, m, 17, &budget)?;
        ok &= c.agree() && c.split_dim as u128 == kernel_dim_formula(n, m);
    }
    // independent route over the rationals for the split side
    ok &= kernel_of_phi(3, 2, Rationals, FormKind::Split, &budget)?.len() == 5;
    Ok((ok, "GF(17)".into()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        (
            "diagram count and normal-form bijection",
            10,
            diagram_counts_and_normal_form,
        ),
        ("defining relations", 30, relations),
        ("integral basis of signed symmetrizers", 60, integral_basis),
        ("Specht filtration quotient ranks", 60, filtration),
        ("submodule closure", 120, closure),
        (
            "Jucys-Murphy eigenvalues and factorization",
            120,
            eigen_and_factorization,
        ),
        ("kernel equals the hook module", 300, annihilator),
        ("injectivity for m >= n", 60, injectivity),
        ("base change of kernel and commutant", 120, base_change),
        ("functional and generator actions agree", 60, cross_validation),
        ("split and euclid forms agree", 30, forms),
    ];
    let mut failed = 0;
    for (k, (name, limit, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let in_time = elapsed < Duration::from_secs(*limit);
        let (pass, detail) = match outcome {
            Ok((ok, detail)) => (ok && in_time, detail),
            Err(e) => (false, format!("error: {e}")),
        };
        if !pass {
            failed += 1;
        }
        let timing = if in_time {
            String::new()
        } else {
            format!(", over the {limit} s limit")
        };
        println!(
            "{} {:>2} {name}: {detail} ({:.2} s{timing})",
            if pass { "PASS" } else { "FAIL" },
            k + 1,
            elapsed.as_secs_f64()
        );
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
