//! Brauer `n`-diagrams as perfect matchings on `2n` labelled vertices.
//!
//! Top-row vertices are labelled `1..n` left to right and bottom-row vertices
//! `n+1..2n` right to left, so the vertex directly below top vertex `i` is
//! `γ(i) = 2n+1-i`.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::combinatorics::{double_factorial_odd, Permutation};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BrauerDiagram {
    // canonical: (a, b) with a < b, sorted by a
    edges: Vec<(usize, usize)>,
}

impl BrauerDiagram {
    /// Builds a diagram from any list of pairs forming a perfect matching of
    /// `{1..2n}`.
    pub fn from_edges(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut partner = vec![0usize; 2 * n + 1];
        if pairs.len() != n {
            return Err(Error::InvalidDiagram(format!(
                "expected {n} edges, found {}",
                pairs.len()
            )));
        }
        for &(a, b) in pairs {
            for v in [a, b] {
                if v == 0 || v > 2 * n {
                    return Err(Error::InvalidDiagram(format!("vertex {v} outside 1..={}", 2 * n)));
                }
                if partner[v] != 0 {
                    return Err(Error::InvalidDiagram(format!("vertex {v} used twice")));
                }
            }
            if a == b {
                return Err(Error::InvalidDiagram(format!("loop at vertex {a}")));
            }
            partner[a] = b;
            partner[b] = a;
        }
        Ok(Self::from_partner(&partner))
    }

    /// `partner[v]` for `v` in `1..=2n` (index 0 unused).
    fn from_partner(partner: &[usize]) -> Self {
        let edges = (1..partner.len())
            .filter(|&a| a < partner[a])
            .map(|a| (a, partner[a]))
            .collect();
        BrauerDiagram { edges }
    }

    pub fn n(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn gamma(&self, i: usize) -> usize {
        2 * self.n() + 1 - i
    }

    /// `partner[v]` for `v` in `1..=2n`; index 0 is unused.
    pub fn partner_table(&self) -> Vec<usize> {
        let mut partner = vec![0; 2 * self.n() + 1];
        for &(a, b) in &self.edges {
            partner[a] = b;
            partner[b] = a;
        }
        partner
    }

    pub fn identity(n: usize) -> Self {
        BrauerDiagram {
            edges: (1..=n).map(|i| (i, 2 * n + 1 - i)).collect(),
        }
    }

    /// The permutation diagram of `π ∈ S_n`: top `i` joined to `γ((i)π)`.
    /// Diagram multiplication restricted to these matches right composition.
    pub fn from_permutation(pi: &Permutation) -> Self {
        let n = pi.degree();
        let mut partner = vec![0; 2 * n + 1];
        for i in 1..=n {
            let b = 2 * n + 1 - pi.apply(i);
            partner[i] = b;
            partner[b] = i;
        }
        Self::from_partner(&partner)
    }

    /// `s_i`: strands `i` and `i+1` crossed.
    pub fn s(i: usize, n: usize) -> Result<Self> {
        Ok(Self::from_permutation(&Permutation::simple(n, i)?))
    }

    /// `e_i`: a cap on top vertices `i, i+1` and a cup on the two below.
    pub fn e(i: usize, n: usize) -> Result<Self> {
        if i == 0 || i >= n {
            return Err(Error::OutOfRange {
                index: i,
                max: n.saturating_sub(1),
            });
        }
        let g = |k: usize| 2 * n + 1 - k;
        let mut pairs: Vec<(usize, usize)> = (1..=n).filter(|&j| j != i && j != i + 1).map(|j| (j, g(j))).collect();
        pairs.push((i, i + 1));
        pairs.push((g(i + 1), g(i)));
        Self::from_edges(n, &pairs)
    }

    /// Concatenation with `self` on top of `other`. Returns the resulting
    /// diagram and the number of closed loops formed in the middle row.
    pub fn multiply(&self, other: &BrauerDiagram) -> Result<(BrauerDiagram, usize)> {
        let n = self.n();
        if other.n() != n {
            return Err(Error::DegreeMismatch {
                expected: n,
                found: other.n(),
            });
        }
        // vertices 0..2n are self's labels 1..2n, 2n..4n are other's
        let mut uf = UnionFind::new(4 * n);
        for &(a, b) in &self.edges {
            uf.union(a - 1, b - 1);
        }
        for &(a, b) in &other.edges {
            uf.union(2 * n + a - 1, 2 * n + b - 1);
        }
        // bottom of self at column c is glued to top of other at column c
        for c in 1..=n {
            uf.union(2 * n - c, 2 * n + c - 1);
        }
        // outer vertices, labelled in the product: top of self, bottom of other
        let mut first_outer: Vec<Option<usize>> = vec![None; 4 * n];
        let mut partner = vec![0; 2 * n + 1];
        let outer = (1..=n)
            .map(|a| (a, a - 1))
            .chain((n + 1..=2 * n).map(|b| (b, 2 * n + b - 1)));
        let mut has_outer = vec![false; 4 * n];
        for (label, vertex) in outer {
            let root = uf.find(vertex);
            has_outer[root] = true;
            match first_outer[root] {
                None => first_outer[root] = Some(label),
                Some(other_label) => {
                    partner[label] = other_label;
                    partner[other_label] = label;
                }
            }
        }
        let loops = (0..4 * n).filter(|&v| uf.find(v) == v && !has_outer[v]).count();
        Ok((Self::from_partner(&partner), loops))
    }

    /// The fixed-point-free involution of `S_2n` swapping the ends of each edge.
    pub fn to_involution(&self) -> Permutation {
        let partner = self.partner_table();
        Permutation::from_images(partner[1..].to_vec()).expect("matching is a bijection")
    }

    pub fn from_involution(sigma: &Permutation) -> Result<Self> {
        if !sigma.degree().is_multiple_of(2) || !sigma.is_fixed_point_free_involution() {
            return Err(Error::InvalidDiagram(format!(
                "{sigma} is not a fixed-point-free involution"
            )));
        }
        let mut partner = vec![0];
        partner.extend_from_slice(sigma.images());
        Ok(Self::from_partner(&partner))
    }

    /// `D ∗ w`: each edge `{a, b}` becomes `{(a)w, (b)w}`. Equals conjugation
    /// `w⁻¹ σ_D w` of the involution.
    pub fn perm_act(&self, w: &Permutation) -> Result<BrauerDiagram> {
        if w.degree() != 2 * self.n() {
            return Err(Error::DegreeMismatch {
                expected: 2 * self.n(),
                found: w.degree(),
            });
        }
        let mut partner = vec![0; 2 * self.n() + 1];
        for &(a, b) in &self.edges {
            let (x, y) = (w.apply(a), w.apply(b));
            partner[x] = y;
            partner[y] = x;
        }
        Ok(Self::from_partner(&partner))
    }

    /// Number of edges joining two top vertices (equal to the number joining
    /// two bottom vertices).
    pub fn horizontal_edge_pairs(&self) -> usize {
        let n = self.n();
        self.edges.iter().filter(|&&(_, b)| b <= n).count()
    }

    /// If the diagram has no horizontal edges, the permutation `π` with
    /// `self = from_permutation(π)`.
    pub fn as_permutation(&self) -> Option<Permutation> {
        let n = self.n();
        let partner = self.partner_table();
        let images: Option<Vec<usize>> = (1..=n)
            .map(|i| {
                let b = partner[i];
                (b > n).then(|| 2 * n + 1 - b)
            })
            .collect();
        Permutation::from_images(images?).ok()
    }

    /// Every Brauer `n`-diagram, in canonical (lexicographic edge list) order.
    pub fn all(n: usize) -> Vec<BrauerDiagram> {
        let mut out = Vec::with_capacity(double_factorial_odd(n) as usize);
        let mut used = vec![false; 2 * n + 1];
        let mut edges = Vec::with_capacity(n);
        gen_matchings(2 * n, &mut used, &mut edges, &mut out);
        out
    }
}

fn gen_matchings(size: usize, used: &mut Vec<bool>, edges: &mut Vec<(usize, usize)>, out: &mut Vec<BrauerDiagram>) {
    let Some(a) = (1..=size).find(|&v| !used[v]) else {
        out.push(BrauerDiagram { edges: edges.clone() });
        return;
    };
    used[a] = true;
    for b in a + 1..=size {
        if !used[b] {
            used[b] = true;
            edges.push((a, b));
            gen_matchings(size, used, edges, out);
            edges.pop();
            used[b] = false;
        }
    }
    used[a] = false;
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(size: usize) -> Self {
        UnionFind {
            parent: (0..size).collect(),
        }
    }

    fn find(&mut self, mut v: usize) -> usize {
        while self.parent[v] != v {
            self.parent[v] = self.parent[self.parent[v]];
            v = self.parent[v];
        }
        v
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            // keep the smaller index as root so roots are deterministic
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }
}

impl fmt::Debug for BrauerDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for BrauerDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.edges.iter().map(|(a, b)| format!("[{a},{b}]")).collect();
        write!(f, "[{}]", body.join(","))
    }
}

impl Serialize for BrauerDiagram {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let pairs: Vec<[usize; 2]> = self.edges.iter().map(|&(a, b)| [a, b]).collect();
        pairs.serialize(s)
    }
}

impl<'de> Deserialize<'de> for BrauerDiagram {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let pairs = Vec::<[usize; 2]>::deserialize(d)?;
        let pairs: Vec<(usize, usize)> = pairs.into_iter().map(|[a, b]| (a, b)).collect();
        BrauerDiagram::from_edges(pairs.len(), &pairs).map_err(serde::de::Error::custom)
    }
}
