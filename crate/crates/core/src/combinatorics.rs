//! Partitions and standard Young tableaux.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{CapelliError, Result};

/// An integer partition, stored as weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default, Serialize, Deserialize)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Partition> {
        if parts.iter().any(|&p| p == 0) {
            return Err(CapelliError::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(CapelliError::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    /// Sorts and drops zeros; never fails.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Partition {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Partition {
        Partition(Vec::new())
    }

    pub fn row(n: usize) -> Partition {
        Partition::from_unsorted(vec![n])
    }

    pub fn column(n: usize) -> Partition {
        Partition(vec![1; n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// `|lambda|`.
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The `i`-th part (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.part(0);
        Partition((0..first).map(|j| self.0.iter().filter(|&&p| p > j).count()).collect())
    }

    /// Every part doubled.
    pub fn doubled(&self) -> Partition {
        Partition(self.0.iter().map(|p| 2 * p).collect())
    }

    /// Boxes `(row, col)` (0-based) in row reading order.
    pub fn boxes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.iter().enumerate().flat_map(|(i, &p)| (0..p).map(move |j| (i, j)))
    }

    pub fn hook_length(&self, row: usize, col: usize) -> usize {
        let conj_col = self.0.iter().filter(|&&p| p > col).count();
        (self.0[row] - col - 1) + (conj_col - row - 1) + 1
    }

    /// Number of standard tableaux, from the hook length formula.
    pub fn hook_dimension(&self) -> u128 {
        let n = self.size() as u128;
        let mut num: u128 = (1..=n).product();
        let hooks: Vec<u128> = self.boxes().map(|(i, j)| self.hook_length(i, j) as u128).collect();
        for h in hooks {
            num /= h;
        }
        num
    }

    /// Multiplicity of each part size `1..=max`.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.part(0) + 1];
        for &p in &self.0 {
            m[p] += 1;
        }
        m
    }

    /// True when the 2-core is empty, i.e. the diagram is a union of
    /// dominoes removable one rim domino at a time.
    pub fn domino_decomposable(&self) -> bool {
        let mut parts = self.0.clone();
        loop {
            if parts.is_empty() {
                return true;
            }
            let l = parts.len();
            let mut removed = false;
            for i in 0..l {
                let next = parts.get(i + 1).copied().unwrap_or(0);
                if parts[i] >= next + 2 {
                    parts[i] -= 2;
                    removed = true;
                    break;
                }
                if i + 1 < l && parts[i] == parts[i + 1] && parts[i + 1] > parts.get(i + 2).copied().unwrap_or(0) {
                    parts[i] -= 1;
                    parts[i + 1] -= 1;
                    removed = true;
                    break;
                }
            }
            if !removed {
                return false;
            }
            parts.retain(|&p| p > 0);
        }
    }

    /// Partitions of `n` in decreasing lexicographic order.
    pub fn all(n: usize) -> Vec<Partition> {
        Partition::with_max_len(n, usize::MAX)
    }

    /// Partitions of `n` with at most `max_len` parts, decreasing lex order.
    pub fn with_max_len(n: usize, max_len: usize) -> Vec<Partition> {
        fn rec(rest: usize, max_part: usize, max_len: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            if cur.len() == max_len {
                return;
            }
            for p in (1..=max_part.min(rest)).rev() {
                cur.push(p);
                rec(rest - p, p, max_len, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, max_len, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl FromStr for Partition {
    type Err = CapelliError;

    /// Accepts `[4,3,1]`, `4,3,1`, `[]`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let inner = t.strip_prefix('[').and_then(|r| r.strip_suffix(']')).unwrap_or(t).trim();
        if inner.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|p| p.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| CapelliError::InvalidPartition(s.to_string()))?;
        Partition::new(parts)
    }
}

/// A standard Young tableau with entries `1..=n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct StandardTableau {
    shape: Partition,
    rows: Vec<Vec<usize>>,
}

impl StandardTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<StandardTableau> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect())
            .map_err(|e| CapelliError::InvalidTableau(e.to_string()))?;
        let n = shape.size();
        let mut seen = vec![false; n + 1];
        for &v in rows.iter().flatten() {
            if v == 0 || v > n || seen[v] {
                return Err(CapelliError::InvalidTableau(format!("{rows:?}: entries must be 1..={n}")));
            }
            seen[v] = true;
        }
        for (i, row) in rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                let bad_row = j > 0 && row[j - 1] >= v;
                let bad_col = i > 0 && rows[i - 1][j] >= v;
                if bad_row || bad_col {
                    return Err(CapelliError::InvalidTableau(format!("{rows:?} is not standard")));
                }
            }
        }
        Ok(StandardTableau { shape, rows })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.shape.size()
    }

    /// Row-by-row concatenation of the entries.
    pub fn reading_word(&self) -> Vec<usize> {
        self.rows.iter().flatten().copied().collect()
    }

    /// `(row, col)` of entry `k` (1-based entry, 0-based coordinates).
    pub fn position(&self, k: usize) -> (usize, usize) {
        for (i, row) in self.rows.iter().enumerate() {
            if let Some(j) = row.iter().position(|&v| v == k) {
                return (i, j);
            }
        }
        panic!("entry {k} not in tableau");
    }

    /// Content `col - row` of every entry, indexed by entry minus one.
    pub fn contents(&self) -> Vec<i64> {
        let mut c = vec![0i64; self.size()];
        for (i, row) in self.rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                c[v - 1] = j as i64 - i as i64;
            }
        }
        c
    }

    /// Row index (0-based) of every entry, indexed by entry minus one.
    pub fn row_indices(&self) -> Vec<usize> {
        let mut r = vec![0; self.size()];
        for (i, row) in self.rows.iter().enumerate() {
            for &v in row {
                r[v - 1] = i;
            }
        }
        r
    }

    /// Entries filled left to right, top to bottom.
    pub fn row_tableau(shape: &Partition) -> StandardTableau {
        let mut next = 1;
        let rows = shape
            .parts()
            .iter()
            .map(|&p| {
                let r: Vec<usize> = (next..next + p).collect();
                next += p;
                r
            })
            .collect();
        StandardTableau { shape: shape.clone(), rows }
    }

    /// Entries filled top to bottom, left to right.
    pub fn column_tableau(shape: &Partition) -> StandardTableau {
        let t = StandardTableau::row_tableau(&shape.conjugate());
        t.transpose()
    }

    pub fn transpose(&self) -> StandardTableau {
        let conj = self.shape.conjugate();
        let rows = (0..conj.len())
            .map(|j| (0..conj.part(j)).map(|i| self.rows[i][j]).collect())
            .collect();
        StandardTableau { shape: conj, rows }
    }

    /// Swaps entries `k` and `k + 1`, if the result is standard.
    pub fn swap(&self, k: usize) -> Option<StandardTableau> {
        let (a, b) = (self.position(k), self.position(k + 1));
        if a.0 == b.0 || a.1 == b.1 {
            return None;
        }
        let mut rows = self.rows.clone();
        rows[a.0][a.1] = k + 1;
        rows[b.0][b.1] = k;
        Some(StandardTableau { shape: self.shape.clone(), rows })
    }

    /// All standard tableaux of the shape, ordered by reading word.
    pub fn all(shape: &Partition) -> Vec<StandardTableau> {
        fn rec(filled: &mut Vec<usize>, shape: &Partition, rows: &mut Vec<Vec<usize>>, next: usize, out: &mut Vec<Vec<Vec<usize>>>) {
            if next > shape.size() {
                out.push(rows.clone());
                return;
            }
            for i in 0..shape.len() {
                let can = filled[i] < shape.part(i) && (i == 0 || filled[i - 1] > filled[i]);
                if can {
                    filled[i] += 1;
                    rows[i].push(next);
                    rec(filled, shape, rows, next + 1, out);
                    rows[i].pop();
                    filled[i] -= 1;
                }
            }
        }
        let mut out = Vec::new();
        let mut rows = vec![Vec::new(); shape.len()];
        rec(&mut vec![0; shape.len()], shape, &mut rows, 1, &mut out);
        let mut tabs: Vec<StandardTableau> =
            out.into_iter().map(|rows| StandardTableau { shape: shape.clone(), rows }).collect();
        tabs.sort_by_key(StandardTableau::reading_word);
        tabs
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| format!("[{}]", r.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")))
            .collect();
        write!(f, "[{}]", rows.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn parse_rejects_bad_input() {
        assert!("[0]".parse::<Partition>().is_err());
        assert!("[1,2]".parse::<Partition>().is_err());
        assert!("[a]".parse::<Partition>().is_err());
        assert_eq!(p("[]"), Partition::empty());
        assert_eq!(p("4,3,1").to_string(), "[4,3,1]");
    }

    #[test]
    fn tableaux_of_small_shapes() {
        let t = StandardTableau::all(&p("[2,1]"));
        assert_eq!(t.len(), 2);
        assert_eq!(t[0].rows(), &[vec![1, 2], vec![3]]);
        assert_eq!(t[1].rows(), &[vec![1, 3], vec![2]]);
        assert_eq!(t[0].contents(), vec![0, 1, -1]);
        assert_eq!(StandardTableau::all(&p("[3,2]")).len(), 5);
        assert_eq!(StandardTableau::column_tableau(&p("[2,1]")).rows(), &[vec![1, 3], vec![2]]);
    }

    #[test]
    fn hook_dimension_values() {
        assert_eq!(p("[3,2]").hook_dimension(), 5);
        assert_eq!(p("[4,2,1]").hook_dimension(), 35);
        assert_eq!(Partition::empty().hook_dimension(), 1);
    }

    #[test]
    fn partition_enumeration() {
        assert_eq!(Partition::all(4).len(), 5);
        assert_eq!(Partition::all(0), vec![Partition::empty()]);
        assert_eq!(Partition::with_max_len(4, 2).len(), 3);
        assert_eq!(Partition::all(4)[0], p("[4]"));
    }

    #[test]
    fn dominoes() {
        assert!(p("[2]").domino_decomposable());
        assert!(p("[3,1]").domino_decomposable());
        assert!(p("[2,2]").domino_decomposable());
        assert!(!p("[2,1]").domino_decomposable());
        assert!(!p("[1]").domino_decomposable());
        assert!(!p("[3,2,1]").domino_decomposable());
    }

    #[test]
    fn tableau_validation() {
        assert!(StandardTableau::new(vec![vec![2, 1]]).is_err());
        assert!(StandardTableau::new(vec![vec![1, 3], vec![2]]).is_ok());
        assert!(StandardTableau::new(vec![vec![1], vec![2, 3]]).is_err());
    }
}
