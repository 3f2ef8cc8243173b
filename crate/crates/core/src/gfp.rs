//! Exact linear algebra over prime fields GF(p) and a bit-packed GF(2) kernel.

use crate::error::{Error, Result};

/// Returns true if `n` is prime (trial division).
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n % 2 == 0 {
        return false;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// All primes in the inclusive range `[lo, hi]`.
pub fn primes_in(lo: u32, hi: u32) -> Vec<u32> {
    (lo..=hi).filter(|&n| is_prime(n as u64)).collect()
}

/// Checks that `p` is a prime below the supported bound.
pub fn check_prime(p: u32) -> Result<()> {
    if p >= 1 << 20 || !is_prime(p as u64) {
        return Err(Error::NotPrime(p as u64));
    }
    Ok(())
}

/// Reduces a signed integer into `[0, p)`.
#[inline]
pub fn reduce(x: i64, p: u32) -> u32 {
    x.rem_euclid(p as i64) as u32
}

#[inline]
fn mul(a: u32, b: u32, p: u32) -> u32 {
    ((a as u64 * b as u64) % p as u64) as u32
}

#[inline]
fn sub(a: u32, b: u32, p: u32) -> u32 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

/// Multiplicative inverse of a nonzero element modulo a prime.
pub fn inverse(a: u32, p: u32) -> u32 {
    debug_assert!(a % p != 0);
    let (mut r0, mut r1) = (p as i64, a as i64);
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    reduce(t0, p)
}

/// Dense matrix over GF(p), entries stored reduced in `[0, p)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldMatrix {
    rows: usize,
    cols: usize,
    modulus: u32,
    data: Vec<u32>,
}

/// Basis of the right null space of a matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NullBasis {
    pub modulus: u32,
    pub cols: usize,
    pub vectors: Vec<Vec<u32>>,
}

impl NullBasis {
    pub fn dimension(&self) -> usize {
        self.vectors.len()
    }

    /// The vector `sum coeffs[i] * vectors[i]`.
    pub fn combine(&self, coeffs: &[u32]) -> Vec<u32> {
        let p = self.modulus;
        let mut out = vec![0u32; self.cols];
        for (c, v) in coeffs.iter().zip(&self.vectors) {
            if *c == 0 {
                continue;
            }
            for (o, x) in out.iter_mut().zip(v) {
                *o = (*o + mul(*c, *x, p)) % p;
            }
        }
        out
    }
}

/// Reduced row echelon form together with its pivot columns.
struct Echelon {
    m: FieldMatrix,
    pivots: Vec<usize>,
}

impl FieldMatrix {
    /// All-zero matrix.
    pub fn zeros(rows: usize, cols: usize, modulus: u32) -> Result<Self> {
        check_prime(modulus)?;
        Ok(FieldMatrix {
            rows,
            cols,
            modulus,
            data: vec![0; rows * cols],
        })
    }

    pub fn identity(n: usize, modulus: u32) -> Result<Self> {
        let mut m = Self::zeros(n, n, modulus)?;
        for i in 0..n {
            m.data[i * n + i] = 1 % modulus;
        }
        Ok(m)
    }

    /// Builds a matrix from signed integer rows, reducing every entry mod `modulus`.
    pub fn from_rows(rows: &[Vec<i64>], modulus: u32) -> Result<Self> {
        check_prime(modulus)?;
        let cols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        let data = rows
            .iter()
            .flat_map(|r| r.iter().map(|&x| reduce(x, modulus)))
            .collect();
        Ok(FieldMatrix {
            rows: rows.len(),
            cols,
            modulus,
            data,
        })
    }

    /// Builds a matrix from a flat row-major slice of signed integers.
    pub fn from_flat(rows: usize, cols: usize, entries: &[i64], modulus: u32) -> Result<Self> {
        check_prime(modulus)?;
        if entries.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "expected {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        Ok(FieldMatrix {
            rows,
            cols,
            modulus,
            data: entries.iter().map(|&x| reduce(x, modulus)).collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: i64) {
        self.data[r * self.cols + c] = reduce(v, self.modulus);
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    /// Submatrix on the given row and column indices, in the given order.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> FieldMatrix {
        let mut data = Vec::with_capacity(rows.len() * cols.len());
        for &r in rows {
            for &c in cols {
                data.push(self.get(r, c));
            }
        }
        FieldMatrix {
            rows: rows.len(),
            cols: cols.len(),
            modulus: self.modulus,
            data,
        }
    }

    /// Vertical concatenation.
    pub fn stack(&self, other: &FieldMatrix) -> Result<FieldMatrix> {
        if self.cols != other.cols || self.modulus != other.modulus {
            return Err(Error::Dimension("stack: shape or modulus mismatch".into()));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(FieldMatrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            modulus: self.modulus,
            data,
        })
    }

    pub fn mul_vec(&self, v: &[u32]) -> Result<Vec<u32>> {
        if v.len() != self.cols {
            return Err(Error::Dimension(format!(
                "vector length {} != {} columns",
                v.len(),
                self.cols
            )));
        }
        let p = self.modulus as u64;
        Ok((0..self.rows)
            .map(|r| {
                let s: u64 = self
                    .row(r)
                    .iter()
                    .zip(v)
                    .map(|(&a, &b)| a as u64 * (b as u64 % p) % p)
                    .sum();
                (s % p) as u32
            })
            .collect())
    }

    /// Row reduction to reduced row echelon form. The pivot in each column is the
    /// first nonzero entry at or below the current row.
    fn echelon(&self) -> Echelon {
        let p = self.modulus;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(piv) = (r..m.rows).find(|&i| m.get(i, c) != 0) else {
                continue;
            };
            if piv != r {
                for k in 0..m.cols {
                    m.data.swap(piv * m.cols + k, r * m.cols + k);
                }
            }
            let inv = inverse(m.get(r, c), p);
            for k in c..m.cols {
                let idx = r * m.cols + k;
                m.data[idx] = mul(m.data[idx], inv, p);
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let f = m.get(i, c);
                if f == 0 {
                    continue;
                }
                for k in c..m.cols {
                    let v = mul(f, m.data[r * m.cols + k], p);
                    let idx = i * m.cols + k;
                    m.data[idx] = sub(m.data[idx], v, p);
                }
            }
            pivots.push(c);
            r += 1;
        }
        Echelon { m, pivots }
    }

    pub fn rank(&self) -> usize {
        self.echelon().pivots.len()
    }

    /// Determinant reduced into `[0, p)`.
    pub fn det(&self) -> Result<u32> {
        if self.rows != self.cols {
            return Err(Error::Dimension(format!(
                "determinant of a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let p = self.modulus;
        let n = self.rows;
        let mut m = self.data.clone();
        let mut det = 1 % p;
        for c in 0..n {
            let Some(piv) = (c..n).find(|&i| m[i * n + c] != 0) else {
                return Ok(0);
            };
            if piv != c {
                for k in 0..n {
                    m.swap(piv * n + k, c * n + k);
                }
                det = sub(0, det, p);
            }
            let d = m[c * n + c];
            det = mul(det, d, p);
            let inv = inverse(d, p);
            for i in c + 1..n {
                let f = mul(m[i * n + c], inv, p);
                if f == 0 {
                    continue;
                }
                for k in c..n {
                    let v = mul(f, m[c * n + k], p);
                    m[i * n + k] = sub(m[i * n + k], v, p);
                }
            }
        }
        Ok(det)
    }

    /// Basis of `{v : M v = 0}`, one vector per free column, with that free
    /// coordinate set to 1.
    pub fn null_space(&self) -> NullBasis {
        let p = self.modulus;
        let e = self.echelon();
        let mut is_pivot = vec![false; self.cols];
        for &c in &e.pivots {
            is_pivot[c] = true;
        }
        let vectors = (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![0u32; self.cols];
                v[free] = 1 % p;
                for (r, &pc) in e.pivots.iter().enumerate() {
                    v[pc] = sub(0, e.m.get(r, free), p);
                }
                v
            })
            .collect();
        NullBasis {
            modulus: p,
            cols: self.cols,
            vectors,
        }
    }

    /// One solution of `M x = target`, or `None` if the system is inconsistent.
    pub fn solve_affine(&self, target: &[u32]) -> Result<Option<Vec<u32>>> {
        if target.len() != self.rows {
            return Err(Error::Dimension(format!(
                "target length {} != {} rows",
                target.len(),
                self.rows
            )));
        }
        let p = self.modulus;
        let mut aug = FieldMatrix::zeros(self.rows, self.cols + 1, p)?;
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug.data[r * (self.cols + 1) + c] = self.get(r, c);
            }
            aug.data[r * (self.cols + 1) + self.cols] = target[r] % p;
        }
        let e = aug.echelon();
        if e.pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![0u32; self.cols];
        for (r, &pc) in e.pivots.iter().enumerate() {
            x[pc] = e.m.get(r, self.cols);
        }
        Ok(Some(x))
    }
}

/// Dense GF(2) matrix with rows packed into 64-bit words.
#[derive(Clone, Debug)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    words: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let words = cols.div_ceil(64);
        BitMatrix {
            rows,
            cols,
            words,
            data: vec![0; rows * words],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn set(&mut self, r: usize, c: usize, bit: bool) {
        let w = &mut self.data[r * self.words + c / 64];
        if bit {
            *w |= 1 << (c % 64);
        } else {
            *w &= !(1 << (c % 64));
        }
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.data[r * self.words + c / 64] >> (c % 64) & 1 == 1
    }

    pub fn rank(&self) -> usize {
        let mut m = self.data.clone();
        let w = self.words;
        let mut rank = 0;
        for c in 0..self.cols {
            let (word, bit) = (c / 64, 1u64 << (c % 64));
            let Some(piv) = (rank..self.rows).find(|&r| m[r * w + word] & bit != 0) else {
                continue;
            };
            if piv != rank {
                for k in 0..w {
                    m.swap(piv * w + k, rank * w + k);
                }
            }
            for r in 0..self.rows {
                if r != rank && m[r * w + word] & bit != 0 {
                    for k in word..w {
                        m[r * w + k] ^= m[rank * w + k];
                    }
                }
            }
            rank += 1;
            if rank == self.rows {
                break;
            }
        }
        rank
    }
}
