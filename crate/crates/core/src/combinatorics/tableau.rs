use serde::{Deserialize, Serialize};

use super::{Partition, Permutation};
use crate::error::{Error, Result};

/// A filling of a Young diagram, stored row by row. The shape may be a
/// composition (rows of any length, including empty ones).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Tableau {
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Self {
        Tableau { rows }
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Vec<usize> {
        self.rows.iter().map(Vec::len).collect()
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// Entry at 1-based cell `(row, col)`.
    pub fn get(&self, row: usize, col: usize) -> Option<usize> {
        self.rows.get(row.checked_sub(1)?)?.get(col.checked_sub(1)?).copied()
    }

    /// `t^μ`: `first, first+1, …` in order along successive rows.
    pub fn initial(shape: &[usize], first: usize) -> Tableau {
        let mut next = first;
        let rows = shape
            .iter()
            .map(|&len| {
                let row: Vec<usize> = (next..next + len).collect();
                next += len;
                row
            })
            .collect();
        Tableau { rows }
    }

    /// `t_μ`: `first, first+1, …` in order down successive columns.
    #[allow(clippy::needless_range_loop)]
    pub fn column_filled(shape: &[usize], first: usize) -> Tableau {
        let mut rows: Vec<Vec<usize>> = shape.iter().map(|&l| vec![0; l]).collect();
        let width = shape.iter().copied().max().unwrap_or(0);
        let mut next = first;
        for c in 0..width {
            for (r, &len) in shape.iter().enumerate() {
                if c < len {
                    rows[r][c] = next;
                    next += 1;
                }
            }
        }
        Tableau { rows }
    }

    pub fn reading_word(&self) -> Vec<usize> {
        self.rows.iter().flatten().copied().collect()
    }

    /// 1-based `(row, col)` of the first cell holding `a`.
    pub fn position(&self, a: usize) -> Option<(usize, usize)> {
        self.rows
            .iter()
            .enumerate()
            .find_map(|(r, row)| row.iter().position(|&x| x == a).map(|c| (r + 1, c + 1)))
    }

    /// Content `col - row` of the cell holding `a`.
    pub fn residue(&self, a: usize) -> Result<i64> {
        let (r, c) = self.position(a).ok_or(Error::EntryNotFound(a))?;
        Ok(c as i64 - r as i64)
    }

    /// True when the entries are exactly `first..first+size-1`, each once.
    pub fn is_bijective_from(&self, first: usize) -> bool {
        let mut w = self.reading_word();
        w.sort_unstable();
        w.iter().enumerate().all(|(i, &a)| a == first + i)
    }

    pub fn is_row_standard(&self) -> bool {
        self.rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]))
    }

    pub fn is_column_standard(&self) -> bool {
        self.rows
            .windows(2)
            .all(|pair| pair[0].iter().zip(&pair[1]).all(|(above, below)| above < below))
    }

    pub fn is_standard(&self) -> bool {
        self.is_row_standard() && self.is_column_standard()
    }

    /// Rows weakly increasing, columns strictly increasing.
    pub fn is_semistandard(&self) -> bool {
        self.rows.iter().all(|r| r.windows(2).all(|w| w[0] <= w[1])) && self.is_column_standard()
    }

    /// `t·w`: every entry `a` replaced by `(a)w`.
    pub fn relabel(&self, w: &Permutation) -> Result<Tableau> {
        let rows = self
            .rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|&a| {
                        if a == 0 || a > w.degree() {
                            Err(Error::OutOfRange {
                                index: a,
                                max: w.degree(),
                            })
                        } else {
                            Ok(w.apply(a))
                        }
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Tableau { rows })
    }

    /// The unique `d` with `t^μ · d = self`, where `t^μ` is the initial
    /// tableau of the same shape.
    pub fn d_of(&self) -> Result<Permutation> {
        if !self.is_bijective_from(1) {
            return Err(Error::InvalidTableau(format!(
                "{:?} is not a bijective filling of 1..={}",
                self.rows,
                self.size()
            )));
        }
        Permutation::from_images(self.reading_word())
    }
}

/// `w_μ` with `t^μ w_μ = t_μ`. Works for compositions as well.
pub fn w_of(shape: &[usize]) -> Permutation {
    Tableau::column_filled(shape, 1)
        .d_of()
        .expect("column tableau is a bijection")
}

/// Standard tableaux of shape `μ` with entries `1..|μ|`, lexicographic by
/// row-reading word.
pub fn standard_tableaux(shape: &Partition) -> Vec<Tableau> {
    standard_tableaux_from(shape, 1)
}

/// Standard tableaux with entries `first..first+|μ|-1`.
pub fn standard_tableaux_from(shape: &Partition, first: usize) -> Vec<Tableau> {
    let parts = shape.parts();
    let mut rows: Vec<Vec<usize>> = parts.iter().map(|_| Vec::new()).collect();
    let mut out = Vec::new();
    grow_standard(parts, &mut rows, first, first + shape.weight(), &mut out);
    out.sort_by_key(|a| a.reading_word());
    out
}

fn grow_standard(shape: &[usize], rows: &mut Vec<Vec<usize>>, next: usize, end: usize, out: &mut Vec<Tableau>) {
    if next == end {
        out.push(Tableau { rows: rows.clone() });
        return;
    }
    for r in 0..shape.len() {
        let len = rows[r].len();
        let fits = len < shape[r] && (r == 0 || rows[r - 1].len() > len);
        if fits {
            rows[r].push(next);
            grow_standard(shape, rows, next + 1, end, out);
            rows[r].pop();
        }
    }
}

/// `T_0(μ, λ)`: semistandard `μ`-tableaux in which `i` occurs `λ_i` times,
/// lexicographic by row-reading word. Empty unless `μ ⊵ λ`.
pub fn semistandard_tableaux(shape: &Partition, content: &Partition) -> Vec<Tableau> {
    if shape.weight() != content.weight() {
        return Vec::new();
    }
    let cells: Vec<(usize, usize)> = shape
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
        .collect();
    let mut remaining = content.parts().to_vec();
    let mut rows: Vec<Vec<usize>> = shape.parts().iter().map(|&l| vec![0; l]).collect();
    let mut out = Vec::new();
    fill_semistandard(&cells, 0, &mut rows, &mut remaining, &mut out);
    out
}

fn fill_semistandard(
    cells: &[(usize, usize)],
    k: usize,
    rows: &mut Vec<Vec<usize>>,
    remaining: &mut Vec<usize>,
    out: &mut Vec<Tableau>,
) {
    if k == cells.len() {
        out.push(Tableau { rows: rows.clone() });
        return;
    }
    let (r, c) = cells[k];
    let min_left = if c > 0 { rows[r][c - 1] } else { 1 };
    let min_above = if r > 0 { rows[r - 1][c] + 1 } else { 1 };
    let lo = min_left.max(min_above);
    for v in lo..=remaining.len() {
        if remaining[v - 1] == 0 {
            continue;
        }
        remaining[v - 1] -= 1;
        rows[r][c] = v;
        fill_semistandard(cells, k + 1, rows, remaining, out);
        remaining[v - 1] += 1;
    }
    rows[r][c] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    /// Independent oracle: every bijective filling, filtered by the definition.
    fn brute_force_standard(shape: &Partition) -> Vec<Tableau> {
        let n = shape.weight();
        let mut out: Vec<Tableau> = Permutation::all(n)
            .into_iter()
            .map(|w| Tableau::initial(shape.parts(), 1).relabel(&w).unwrap())
            .filter(Tableau::is_standard)
            .collect();
        out.sort_by_key(|a| a.reading_word());
        out
    }

    #[test]
    fn standard_matches_brute_force() {
        for n in 1..=6 {
            for shape in Partition::all(n) {
                assert_eq!(standard_tableaux(&shape), brute_force_standard(&shape));
            }
        }
    }

    #[test]
    fn standard_counts() {
        assert_eq!(standard_tableaux(&p(&[1, 1])).len(), 1);
        assert_eq!(standard_tableaux(&p(&[2, 2])).len(), 2);
        assert_eq!(standard_tableaux(&p(&[3, 3])).len(), 5);
        // brute force agrees with the frozen hook values
        assert_eq!(brute_force_standard(&p(&[3, 3, 1, 1])).len(), 56);
        assert_eq!(brute_force_standard(&p(&[4, 4])).len(), 14);
        assert_eq!(brute_force_standard(&p(&[2, 2, 1, 1])).len(), 9);
    }

    #[test]
    fn shifted_alphabet() {
        let ts = standard_tableaux_from(&p(&[2, 1]), 3);
        assert_eq!(ts.len(), 2);
        assert!(ts.iter().all(|t| t.is_bijective_from(3)));
    }

    #[test]
    fn semistandard_examples() {
        let t = semistandard_tableaux(&p(&[4]), &p(&[2, 2]));
        assert_eq!(t, vec![Tableau::from_rows(vec![vec![1, 1, 2, 2]])]);
        let t = semistandard_tableaux(&p(&[2, 2]), &p(&[2, 2]));
        assert_eq!(t, vec![Tableau::from_rows(vec![vec![1, 1], vec![2, 2]])]);
        assert!(semistandard_tableaux(&p(&[2, 2]), &p(&[3, 1])).is_empty());
    }

    #[test]
    fn semistandard_nonempty_only_when_dominating() {
        for n in 1..=6 {
            for mu in Partition::all(n) {
                for lambda in Partition::all(n) {
                    let ts = semistandard_tableaux(&mu, &lambda);
                    if !ts.is_empty() {
                        assert!(mu.dominates(&lambda).unwrap());
                    }
                    assert!(ts.iter().all(Tableau::is_semistandard));
                }
                // the unique tableau of its own type
                assert_eq!(semistandard_tableaux(&mu, &mu).len(), 1);
            }
        }
    }

    #[test]
    fn w_mu_worked_example() {
        let w = w_of(&[3, 3, 1, 1]);
        let expected = Permutation::from_cycles(8, &[&[2, 5, 6, 8, 4], &[3, 7]]).unwrap();
        assert_eq!(w, expected);
        assert!(w_of(&[5]).is_identity());
        assert!(w_of(&[1, 1, 1, 1]).is_identity());
    }

    #[test]
    fn d_of_examples() {
        let init = Tableau::initial(&[2, 2], 1);
        assert!(init.d_of().unwrap().is_identity());
        let t = Tableau::from_rows(vec![vec![1, 3], vec![2, 4]]);
        assert_eq!(t.d_of().unwrap(), Permutation::transposition(4, 2, 3).unwrap());
        assert_eq!(init.relabel(&t.d_of().unwrap()).unwrap(), t);
        let col = Tableau::column_filled(&[3, 3, 1, 1], 1);
        assert_eq!(col.d_of().unwrap(), w_of(&[3, 3, 1, 1]));
        let bad = Tableau::from_rows(vec![vec![1, 1]]);
        assert!(bad.d_of().is_err());
    }

    #[test]
    fn residues() {
        let t = Tableau::initial(&[2, 2], 1);
        assert_eq!(t.residue(1).unwrap(), 0);
        assert_eq!(t.residue(2).unwrap(), 1);
        assert_eq!(t.residue(3).unwrap(), -1);
        assert_eq!(t.residue(9), Err(Error::EntryNotFound(9)));
    }

    #[test]
    fn tableau_json_is_array_of_rows() {
        let t = Tableau::from_rows(vec![vec![1, 3], vec![2]]);
        assert_eq!(serde_json::to_string(&t).unwrap(), "[[1,3],[2]]");
    }
}
