use std::fmt;

use crate::error::{Error, Result};

/// A permutation of `{1..N}` acting on the right: `(a)(uw) = ((a)u)w`.
///
/// Stored as its image table, `images[a - 1] = (a)w`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (1..=degree).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &v in &images {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidPermutation(format!(
                    "image table {images:?} is not a bijection of 1..={n}"
                )));
            }
            seen[v] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation from disjoint cycles in the usual notation.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (1..=degree).collect();
        let mut touched = vec![false; degree + 1];
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                if a == 0 || a > degree {
                    return Err(Error::OutOfRange { index: a, max: degree });
                }
                if touched[a] {
                    return Err(Error::InvalidPermutation(format!(
                        "point {a} occurs in more than one cycle"
                    )));
                }
                touched[a] = true;
                images[a - 1] = cycle[(k + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    pub fn transposition(degree: usize, i: usize, j: usize) -> Result<Self> {
        Self::from_cycles(degree, &[&[i, j]])
    }

    /// The adjacent transposition `(i, i+1)`.
    pub fn simple(degree: usize, i: usize) -> Result<Self> {
        if i == 0 || i >= degree {
            return Err(Error::OutOfRange {
                index: i,
                max: degree.saturating_sub(1),
            });
        }
        Self::transposition(degree, i, i + 1)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `(a)w`.
    #[inline]
    pub fn apply(&self, a: usize) -> usize {
        self.images[a - 1]
    }

    /// Right-action product `self · w`: first `self`, then `w`.
    pub fn compose(&self, w: &Permutation) -> Result<Permutation> {
        if self.degree() != w.degree() {
            return Err(Error::DegreeMismatch {
                expected: self.degree(),
                found: w.degree(),
            });
        }
        Ok(self.then(w))
    }

    pub(crate) fn then(&self, w: &Permutation) -> Permutation {
        Permutation {
            images: self.images.iter().map(|&a| w.apply(a)).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.degree()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation { images: inv }
    }

    /// Coxeter length, i.e. the number of inversions.
    pub fn length(&self) -> usize {
        let n = self.degree();
        let mut inv = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.images[i] > self.images[j] {
                    inv += 1;
                }
            }
        }
        inv
    }

    pub fn sign(&self) -> i64 {
        // parity from the cycle type is cheaper than counting inversions
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut transpositions = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut a = start;
            while !seen[a] {
                seen[a] = true;
                a = self.images[a] - 1;
                len += 1;
            }
            transpositions += len - 1;
        }
        if transpositions % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    pub fn is_fixed_point_free_involution(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &v)| v != i + 1 && self.images[v - 1] == i + 1)
    }

    /// Non-trivial cycles, each starting at its least element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n + 1];
        let mut out = Vec::new();
        for start in 1..=n {
            if seen[start] || self.apply(start) == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut a = start;
            while !seen[a] {
                seen[a] = true;
                cycle.push(a);
                a = self.apply(a);
            }
            out.push(cycle);
        }
        out
    }

    /// Extends a permutation of `{1..k}` to `{1..degree}` by fixing the rest.
    pub fn extend(&self, degree: usize) -> Result<Permutation> {
        if degree < self.degree() {
            return Err(Error::DegreeMismatch {
                expected: self.degree(),
                found: degree,
            });
        }
        let mut images = self.images.clone();
        images.extend(self.degree() + 1..=degree);
        Ok(Permutation { images })
    }

    /// A word `[i1, i2, ...]` with `self = s_{i1} s_{i2} ...`, of minimal length.
    pub fn reduced_word(&self) -> Vec<usize> {
        // right-multiplying by s_i swaps the values i and i+1 in the image
        // table; sort the table back to the identity and read the word backwards
        let mut table = self.images.clone();
        let mut pos = vec![0; table.len() + 1];
        for (idx, &v) in table.iter().enumerate() {
            pos[v] = idx;
        }
        let mut word = Vec::new();
        loop {
            let mut swapped = false;
            for v in 1..table.len() {
                if pos[v] > pos[v + 1] {
                    let (a, b) = (pos[v], pos[v + 1]);
                    table.swap(a, b);
                    pos.swap(v, v + 1);
                    word.push(v);
                    swapped = true;
                }
            }
            if !swapped {
                break;
            }
        }
        word.reverse();
        word
    }

    /// All permutations of `{1..degree}`, lexicographic by image table.
    pub fn all(degree: usize) -> Vec<Permutation> {
        let mut cur: Vec<usize> = (1..=degree).collect();
        let mut out = vec![Permutation { images: cur.clone() }];
        while next_lex(&mut cur) {
            out.push(Permutation { images: cur.clone() });
        }
        out
    }

    /// The Young subgroup `S_{μ1} × S_{μ2} × ...` acting on consecutive blocks
    /// of `{first..first+|μ|-1}` inside `S_degree`.
    pub fn young_subgroup(blocks: &[usize], first: usize, degree: usize) -> Result<Vec<Permutation>> {
        let total: usize = blocks.iter().sum();
        if first == 0 || first + total - 1 > degree {
            return Err(Error::OutOfRange {
                index: first + total.saturating_sub(1),
                max: degree,
            });
        }
        let mut out = vec![Permutation::identity(degree)];
        let mut start = first;
        for &b in blocks {
            if b > 1 {
                let local = Permutation::all(b);
                let mut next = Vec::with_capacity(out.len() * local.len());
                for g in &out {
                    for l in &local {
                        let mut images = g.images.clone();
                        for k in 0..b {
                            images[start - 1 + k] = start - 1 + l.images[k];
                        }
                        next.push(Permutation { images });
                    }
                }
                out = next;
            }
            start += b;
        }
        out.sort();
        Ok(out)
    }
}

fn next_lex(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let body: Vec<String> = c.iter().map(|a| a.to_string()).collect();
            write!(f, "({})", body.join(","))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{}]{}", self.degree(), self)
    }
}
