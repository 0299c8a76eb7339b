use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    /// The hook `(first, 1^ones)`.
    pub fn hook(first: usize, ones: usize) -> Result<Self> {
        let mut parts = vec![first];
        parts.extend(std::iter::repeat_n(1, ones));
        Self::new(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    /// First part, or 0 for the empty partition.
    pub fn first(&self) -> usize {
        self.0.first().copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        Partition(conjugate_parts(&self.0))
    }

    /// Dominance order: `self ⊵ other` iff every partial sum of `self` is at
    /// least the matching partial sum of `other`.
    pub fn dominates(&self, other: &Partition) -> Result<bool> {
        if self.weight() != other.weight() {
            return Err(Error::WeightMismatch(self.weight(), other.weight()));
        }
        let len = self.len().max(other.len());
        let (mut a, mut b) = (0usize, 0usize);
        for i in 0..len {
            a += self.0.get(i).copied().unwrap_or(0);
            b += other.0.get(i).copied().unwrap_or(0);
            if a < b {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn hook_lengths(&self) -> Vec<Vec<usize>> {
        let conj = self.conjugate();
        self.0
            .iter()
            .enumerate()
            .map(|(i, &row)| (0..row).map(|j| (row - j - 1) + (conj.0[j] - i - 1) + 1).collect())
            .collect()
    }

    /// Number of standard tableaux, `N! / ∏ hooks`.
    pub fn hook_dim(&self) -> u128 {
        let mut num: u128 = (1..=self.weight() as u128).product();
        for h in self.hook_lengths().into_iter().flatten() {
            num /= h as u128;
        }
        num
    }

    /// The palindromic doubling `(λ1, …, λs, λs, …, λ1)`.
    pub fn hat(&self) -> Composition {
        let mut parts = self.0.clone();
        parts.extend(self.0.iter().rev());
        Composition(parts)
    }

    /// `(λ1, λ1, λ2, λ2, …)`, the decreasing rearrangement of [`hat`](Self::hat).
    pub fn tilde(&self) -> Partition {
        Partition(self.0.iter().flat_map(|&p| [p, p]).collect())
    }

    /// All partitions of `n`, in decreasing lexicographic order. This is a
    /// linear extension of dominance: `μ ⊵ λ` implies `μ` comes first.
    pub fn all(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        gen_partitions(n, n, &mut cur, &mut out);
        out
    }
}

fn gen_partitions(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition(cur.clone()));
        return;
    }
    for p in (1..=rest.min(max)).rev() {
        cur.push(p);
        gen_partitions(rest - p, p, cur, out);
        cur.pop();
    }
}

pub(crate) fn conjugate_parts(parts: &[usize]) -> Vec<usize> {
    let max = parts.iter().copied().max().unwrap_or(0);
    (1..=max).map(|j| parts.iter().filter(|&&p| p >= j).count()).collect()
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty partition".into()));
        }
        let parts = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::Parse(format!("bad part {p:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A finite sequence of non-negative integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Self {
        Composition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    /// `λ'_j = #{i : λ_i ≥ j}`; always a partition.
    pub fn conjugate(&self) -> Partition {
        Partition(conjugate_parts(&self.0))
    }

    pub fn sorted(&self) -> Partition {
        let mut parts: Vec<usize> = self.0.iter().copied().filter(|&p| p > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }
}

impl From<&Partition> for Composition {
    fn from(p: &Partition) -> Self {
        Composition(p.0.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn conjugates() {
        assert_eq!(p(&[2, 2]).conjugate(), p(&[2, 2]));
        assert_eq!(p(&[6]).conjugate(), p(&[1, 1, 1, 1, 1, 1]));
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
    }

    #[test]
    fn dominance_examples() {
        assert!(p(&[3, 1]).dominates(&p(&[2, 2])).unwrap());
        assert!(p(&[2, 2]).dominates(&p(&[2, 2])).unwrap());
        let a = p(&[3, 1, 1, 1]);
        let b = p(&[2, 2, 2]);
        assert!(!a.dominates(&b).unwrap());
        assert!(!b.dominates(&a).unwrap());
        assert_eq!(p(&[2]).dominates(&p(&[2, 1])), Err(Error::WeightMismatch(2, 3)));
    }

    #[test]
    fn hook_dims() {
        assert_eq!(p(&[5]).hook_dim(), 1);
        assert_eq!(p(&[2, 2]).hook_dim(), 2);
        assert_eq!(p(&[3, 3]).hook_dim(), 5);
        assert_eq!(p(&[4, 4]).hook_dim(), 14);
        assert_eq!(p(&[3, 3, 1, 1]).hook_dim(), 56);
        assert_eq!(p(&[2, 2, 1, 1]).hook_dim(), 9);
    }

    #[test]
    fn hat_and_tilde() {
        let l = p(&[2, 1]);
        assert_eq!(l.hat(), Composition::new(vec![2, 1, 1, 2]));
        assert_eq!(l.tilde(), p(&[2, 2, 1, 1]));
        assert_eq!(l.hat().sorted(), l.tilde());
        assert_eq!(p(&[3]).hat(), Composition::new(vec![3, 3]));
        assert_eq!(p(&[3]).tilde(), p(&[3, 3]));
        assert_eq!(p(&[1, 1, 1]).tilde(), p(&[1; 6]));
    }

    #[test]
    fn parsing() {
        assert_eq!("3,1".parse::<Partition>().unwrap(), p(&[3, 1]));
        assert!("1,3".parse::<Partition>().is_err());
        assert!("3,0".parse::<Partition>().is_err());
        assert!("".parse::<Partition>().is_err());
        assert!("a".parse::<Partition>().is_err());
        assert_eq!(p(&[4, 2, 2]).to_string(), "4,2,2");
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (1..=8).map(|n| Partition::all(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 3, 5, 7, 11, 15, 22]);
    }

    #[test]
    fn enumeration_order_extends_dominance() {
        for n in 1..=8 {
            let all = Partition::all(n);
            for (i, a) in all.iter().enumerate() {
                for b in &all[i + 1..] {
                    assert!(!b.dominates(a).unwrap() || a == b, "{b:?} dominates earlier {a:?}");
                }
            }
        }
    }
}
