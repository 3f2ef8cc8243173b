//! SCB parity-check construction and structural queries.
//!
//! Check `(i, l)` is adjacent to variable `(j, k)` iff `l = k + a(i) b(j) mod p`,
//! where `a` is the row-selection function and `b` the column-selection function.
//! Variables are indexed `j * p + k`, checks `i * p + l`.

use std::collections::VecDeque;
use std::io::{BufRead, Write};

use crate::error::{Error, Result};
use crate::gfp::{check_prime, BitMatrix};

/// Exponent of the mother matrix block at row group `i`, column group `j`.
pub fn mother_exponent(i: u32, j: u32, p: u32) -> Result<u32> {
    if i >= p || j >= p {
        return Err(Error::OutOfRange(format!("({i}, {j}) outside [0, {p})")));
    }
    Ok(((i as u64 * j as u64) % p as u64) as u32)
}

/// `(group, offset)` label of a check `(i, l)` or a variable `(j, k)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NodeLabel {
    pub group: usize,
    pub offset: u32,
}

impl NodeLabel {
    pub fn new(group: usize, offset: u32) -> Self {
        NodeLabel { group, offset }
    }
}

/// Code family descriptor: prime circulant size with row and column selections.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScbSpec {
    p: u32,
    rows: Vec<u32>,
    cols: Vec<u32>,
}

impl ScbSpec {
    pub fn new(p: u32, rows: Vec<u32>, cols: Vec<u32>) -> Result<Self> {
        check_prime(p)?;
        for (what, v) in [("row", &rows), ("column", &cols)] {
            if v.is_empty() {
                return Err(Error::Spec(format!("empty {what} selection")));
            }
            if v.len() > p as usize {
                return Err(Error::Spec(format!("{what} selection longer than p")));
            }
            let mut seen = vec![false; p as usize];
            for &x in v.iter() {
                if x >= p {
                    return Err(Error::Spec(format!("{what} value {x} outside [0, {p})")));
                }
                if std::mem::replace(&mut seen[x as usize], true) {
                    return Err(Error::Spec(format!("repeated {what} value {x}")));
                }
            }
        }
        Ok(ScbSpec { p, rows, cols })
    }

    /// Selected-row code: arbitrary row selection, all `p` column groups.
    pub fn selected_rows(p: u32, rows: Vec<u32>) -> Result<Self> {
        Self::new(p, rows, (0..p).collect())
    }

    /// Elementary array-based code: the first `r` rows of the mother matrix.
    pub fn eab(p: u32, r: u32) -> Result<Self> {
        Self::selected_rows(p, (0..r).collect())
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn r(&self) -> usize {
        self.rows.len()
    }

    pub fn c(&self) -> usize {
        self.cols.len()
    }

    pub fn row_values(&self) -> &[u32] {
        &self.rows
    }

    pub fn col_values(&self) -> &[u32] {
        &self.cols
    }

    /// Direction of the circulant shift; fixed so that `l = k + f(i, j)`.
    pub fn shift_sign(&self) -> i8 {
        1
    }

    /// True when the column selection covers every residue mod `p`.
    pub fn full_columns(&self) -> bool {
        self.cols.len() == self.p as usize
    }

    pub fn n_vars(&self) -> usize {
        self.c() * self.p as usize
    }

    pub fn n_checks(&self) -> usize {
        self.r() * self.p as usize
    }

    /// Exponent `a(i) b(j) mod p` of block `(i, j)`.
    pub fn exponent(&self, i: usize, j: usize) -> u32 {
        ((self.rows[i] as u64 * self.cols[j] as u64) % self.p as u64) as u32
    }

    /// Offset of the check in row group `i` adjacent to variable `(j, k)`.
    pub fn check_offset(&self, i: usize, var: NodeLabel) -> u32 {
        (var.offset + self.exponent(i, var.group)) % self.p
    }

    pub fn var_index(&self, var: NodeLabel) -> usize {
        var.group * self.p as usize + var.offset as usize
    }

    pub fn var_label(&self, index: usize) -> NodeLabel {
        let p = self.p as usize;
        NodeLabel::new(index / p, (index % p) as u32)
    }

    pub fn check_index(&self, check: NodeLabel) -> usize {
        check.group * self.p as usize + check.offset as usize
    }

    pub fn check_label(&self, index: usize) -> NodeLabel {
        let p = self.p as usize;
        NodeLabel::new(index / p, (index % p) as u32)
    }

    pub fn adjacent(&self, check: NodeLabel, var: NodeLabel) -> Result<bool> {
        if check.group >= self.r() || check.offset >= self.p {
            return Err(Error::OutOfRange(format!("check {check:?}")));
        }
        if var.group >= self.c() || var.offset >= self.p {
            return Err(Error::OutOfRange(format!("variable {var:?}")));
        }
        Ok(self.check_offset(check.group, var) == check.offset)
    }

    pub fn build(&self) -> ParityCheck {
        let p = self.p as usize;
        let col_adj = (0..self.n_vars())
            .map(|v| {
                let var = self.var_label(v);
                (0..self.r())
                    .map(|i| i * p + self.check_offset(i, var) as usize)
                    .collect()
            })
            .collect();
        ParityCheck::from_columns(self.n_checks(), col_adj)
            .expect("generated columns are in range")
    }

    /// Girth using the circulant symmetry: every cycle through `(j, k)` has a
    /// shifted copy through `(j, 0)`, so only those variables are BFS sources.
    pub fn girth(&self, h: &ParityCheck) -> Option<usize> {
        let p = self.p as usize;
        h.girth_from((0..self.c()).map(|j| j * p))
    }
}

/// Sparse binary parity-check matrix kept as row and column adjacency lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParityCheck {
    rows: usize,
    cols: usize,
    col_adj: Vec<Vec<usize>>,
    row_adj: Vec<Vec<usize>>,
}

impl ParityCheck {
    /// Builds from per-column lists of row indices.
    pub fn from_columns(rows: usize, mut col_adj: Vec<Vec<usize>>) -> Result<Self> {
        let mut row_adj = vec![Vec::new(); rows];
        for (c, list) in col_adj.iter_mut().enumerate() {
            list.sort_unstable();
            if list.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::Dimension(format!("duplicate entry in column {c}")));
            }
            for &r in list.iter() {
                if r >= rows {
                    return Err(Error::OutOfRange(format!("row {r} in column {c}")));
                }
                row_adj[r].push(c);
            }
        }
        Ok(ParityCheck {
            rows,
            cols: col_adj.len(),
            col_adj,
            row_adj,
        })
    }

    /// Builds from `(row, col)` positions.
    pub fn from_positions(rows: usize, cols: usize, positions: &[(usize, usize)]) -> Result<Self> {
        let mut col_adj = vec![Vec::new(); cols];
        for &(r, c) in positions {
            if c >= cols {
                return Err(Error::OutOfRange(format!("column {c}")));
            }
            col_adj[c].push(r);
        }
        Self::from_columns(rows, col_adj)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Checks adjacent to variable `v`, ascending.
    pub fn checks_of(&self, v: usize) -> &[usize] {
        &self.col_adj[v]
    }

    /// Variables adjacent to check `c`, ascending.
    pub fn vars_of(&self, c: usize) -> &[usize] {
        &self.row_adj[c]
    }

    pub fn n_edges(&self) -> usize {
        self.col_adj.iter().map(Vec::len).sum()
    }

    /// Sorted `(row, col)` positions.
    pub fn positions(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<_> = self
            .row_adj
            .iter()
            .enumerate()
            .flat_map(|(r, cs)| cs.iter().map(move |&c| (r, c)))
            .collect();
        out.sort_unstable();
        out
    }

    pub fn column_weights(&self) -> Vec<usize> {
        self.col_adj.iter().map(Vec::len).collect()
    }

    pub fn row_weights(&self) -> Vec<usize> {
        self.row_adj.iter().map(Vec::len).collect()
    }

    pub fn to_bit_matrix(&self) -> BitMatrix {
        let mut m = BitMatrix::zeros(self.rows, self.cols);
        for (c, rs) in self.col_adj.iter().enumerate() {
            for &r in rs {
                m.set(r, c, true);
            }
        }
        m
    }

    pub fn rank_gf2(&self) -> usize {
        self.to_bit_matrix().rank()
    }

    /// Code dimension `n - rank(H)` over GF(2).
    pub fn dimension(&self) -> usize {
        self.cols - self.rank_gf2()
    }

    /// Length of the shortest cycle in the Tanner graph, `None` for a forest.
    pub fn girth(&self) -> Option<usize> {
        self.girth_from(0..self.cols)
    }

    /// Shortest cycle through any of the given variable nodes.
    pub fn girth_from(&self, sources: impl IntoIterator<Item = usize>) -> Option<usize> {
        let n = self.cols;
        let total = n + self.rows;
        let mut dist = vec![usize::MAX; total];
        let mut parent = vec![usize::MAX; total];
        let mut touched = Vec::new();
        let mut queue = VecDeque::new();
        let mut best = usize::MAX;
        for s in sources {
            for &t in &touched {
                dist[t] = usize::MAX;
                parent[t] = usize::MAX;
            }
            touched.clear();
            queue.clear();
            dist[s] = 0;
            touched.push(s);
            queue.push_back(s);
            'bfs: while let Some(u) = queue.pop_front() {
                if 2 * dist[u] + 1 >= best {
                    break;
                }
                let neighbors: Box<dyn Iterator<Item = usize>> = if u < n {
                    Box::new(self.col_adj[u].iter().map(|&c| c + n))
                } else {
                    Box::new(self.row_adj[u - n].iter().copied())
                };
                for w in neighbors {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        touched.push(w);
                        queue.push_back(w);
                    } else if parent[u] != w {
                        best = best.min(dist[u] + dist[w] + 1);
                        if 2 * dist[u] + 1 >= best {
                            break 'bfs;
                        }
                    }
                }
            }
        }
        (best != usize::MAX).then_some(best)
    }

    /// Writes the matrix in alist format.
    pub fn write_alist<W: Write>(&self, mut w: W) -> Result<()> {
        let max_col = self.col_adj.iter().map(Vec::len).max().unwrap_or(0);
        let max_row = self.row_adj.iter().map(Vec::len).max().unwrap_or(0);
        writeln!(w, "{} {}", self.cols, self.rows)?;
        writeln!(w, "{max_col} {max_row}")?;
        let join = |xs: &mut dyn Iterator<Item = usize>| {
            xs.map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
        };
        writeln!(w, "{}", join(&mut self.col_adj.iter().map(Vec::len)))?;
        writeln!(w, "{}", join(&mut self.row_adj.iter().map(Vec::len)))?;
        for (lists, width) in [(&self.col_adj, max_col), (&self.row_adj, max_row)] {
            for list in lists {
                let mut entries: Vec<usize> = list.iter().map(|x| x + 1).collect();
                entries.resize(width, 0);
                writeln!(w, "{}", join(&mut entries.into_iter()))?;
            }
        }
        Ok(())
    }

    /// Reads a matrix in alist format; zero padding is ignored.
    pub fn read_alist<R: BufRead>(r: R) -> Result<Self> {
        let mut tokens = Vec::new();
        for (line_no, line) in r.lines().enumerate() {
            for tok in line?.split_whitespace() {
                let v: usize = tok.parse().map_err(|_| Error::Parse {
                    line: line_no + 1,
                    msg: format!("bad integer {tok:?}"),
                })?;
                tokens.push((line_no + 1, v));
            }
        }
        let mut it = tokens.into_iter();
        let mut next = |what: &str| {
            it.next().ok_or_else(|| Error::Parse {
                line: 0,
                msg: format!("unexpected end of input reading {what}"),
            })
        };
        let (_, n) = next("n")?;
        let (_, m) = next("m")?;
        let (_, max_col) = next("max column degree")?;
        let (_, max_row) = next("max row degree")?;
        for _ in 0..n + m {
            next("degree")?;
        }
        let mut col_adj = vec![Vec::new(); n];
        for list in col_adj.iter_mut() {
            for _ in 0..max_col {
                let (line, v) = next("column entry")?;
                if v > m {
                    return Err(Error::Parse {
                        line,
                        msg: format!("row index {v} > {m}"),
                    });
                }
                if v > 0 {
                    list.push(v - 1);
                }
            }
        }
        for _ in 0..m * max_row {
            next("row entry")?;
        }
        Self::from_columns(m, col_adj)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exponents() {
        assert_eq!(mother_exponent(0, 5, 31).unwrap(), 0);
        assert_eq!(mother_exponent(1, 17, 31).unwrap(), 17);
        assert_eq!(mother_exponent(4, 6, 23).unwrap(), 1);
        assert!(mother_exponent(31, 0, 31).is_err());
    }

    #[test]
    fn spec_validation() {
        assert!(ScbSpec::eab(4, 3).is_err());
        assert!(ScbSpec::selected_rows(7, vec![0, 1, 1]).is_err());
        assert!(ScbSpec::selected_rows(7, vec![0, 7]).is_err());
        assert!(ScbSpec::new(7, vec![0], vec![]).is_err());
    }

    #[test]
    fn single_row_group_is_identity_blocks() {
        let h = ScbSpec::selected_rows(5, vec![0]).unwrap().build();
        for v in 0..25 {
            assert_eq!(h.checks_of(v), &[v % 5]);
        }
        assert_eq!(h.girth(), None);
    }
}
