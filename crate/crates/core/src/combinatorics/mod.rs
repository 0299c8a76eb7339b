//! Partitions, compositions, tableaux and permutations.
//!
//! Permutations act on the right, so `(a)(uw) = ((a)u)w`, and a permutation
//! acts on a tableau by relabelling its entries.

mod partition;
mod permutation;
mod tableau;

pub use partition::{Composition, Partition};
pub use permutation::Permutation;
pub use tableau::{semistandard_tableaux, standard_tableaux, standard_tableaux_from, w_of, Tableau};

/// `(2n-1)!! = (2n-1)(2n-3)⋯3·1`, with `(-1)!! = 1`.
pub fn double_factorial_odd(n: usize) -> u128 {
    (1..=n as u128).map(|k| 2 * k - 1).product()
}

pub fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sum_of_squared_dims_is_factorial() {
        for n in 1..=8 {
            let total: u128 = Partition::all(n).iter().map(|p| p.hook_dim().pow(2)).sum();
            assert_eq!(total, factorial(n));
        }
    }

    #[test]
    fn standard_count_is_hook_dim() {
        for n in 1..=8 {
            for shape in Partition::all(n) {
                assert_eq!(standard_tableaux(&shape).len() as u128, shape.hook_dim());
            }
        }
    }

    #[test]
    fn dominance_is_a_partial_order() {
        for n in 1..=8 {
            let all = Partition::all(n);
            for a in &all {
                assert!(a.dominates(a).unwrap());
                for b in &all {
                    let ab = a.dominates(b).unwrap();
                    if ab && b.dominates(a).unwrap() {
                        assert_eq!(a, b);
                    }
                    // conjugation reverses the order
                    assert_eq!(ab, b.conjugate().dominates(&a.conjugate()).unwrap());
                    if ab {
                        for c in &all {
                            if b.dominates(c).unwrap() {
                                assert!(a.dominates(c).unwrap());
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn tilde_has_even_column_lengths() {
        for n in 1..=6 {
            for nu in Partition::all(n) {
                let t = nu.tilde();
                assert!(t.conjugate().parts().iter().all(|c| c % 2 == 0), "{t:?}");
                assert_eq!(t.conjugate().conjugate(), t);
            }
        }
    }

    #[test]
    fn tilde_dimensions_sum_to_double_factorial() {
        for n in 1..=6 {
            let total: u128 = Partition::all(n).iter().map(|nu| nu.tilde().hook_dim()).sum();
            assert_eq!(total, double_factorial_odd(n));
        }
    }

    #[test]
    fn double_factorials() {
        let v: Vec<u128> = (1..=6).map(double_factorial_odd).collect();
        assert_eq!(v, vec![1, 3, 15, 105, 945, 10395]);
    }
}
