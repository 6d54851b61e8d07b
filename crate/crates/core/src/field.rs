//! Exact arithmetic over GF(p) for small primes, and the row-reduction /
//! nullspace machinery that derives dual codes.
//!
//! Everything here is integer arithmetic on canonical residues; there is no
//! floating point anywhere in this crate.

use crate::error::{Error, Result};
use std::fmt;

/// Primes accepted as moduli. The toolkit targets ternary codes but the
/// arithmetic is generic over these.
pub const SUPPORTED_PRIMES: [u8; 6] = [2, 3, 5, 7, 11, 13];

pub fn is_supported_prime(p: u8) -> bool {
    SUPPORTED_PRIMES.contains(&p)
}

/// A residue in [0, p) for a supported prime p.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldElement {
    value: u8,
    modulus: u8,
}

impl FieldElement {
    /// Canonicalize any integer into GF(p). Errors on unsupported moduli.
    pub fn new(value: i64, modulus: u8) -> Result<Self> {
        if !is_supported_prime(modulus) {
            return Err(Error::InvalidParameter {
                detail: format!("modulus {modulus} is not a supported prime (2..13)"),
            });
        }
        let p = modulus as i64;
        Ok(FieldElement {
            value: value.rem_euclid(p) as u8,
            modulus,
        })
    }

    pub fn value(&self) -> u8 {
        self.value
    }

    pub fn modulus(&self) -> u8 {
        self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    fn same_field(&self, other: &Self) {
        assert_eq!(self.modulus, other.modulus, "mixed moduli");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.same_field(other);
        FieldElement {
            value: (self.value + other.value) % self.modulus,
            modulus: self.modulus,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.same_field(other);
        FieldElement {
            value: (self.value + self.modulus - other.value) % self.modulus,
            modulus: self.modulus,
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.same_field(other);
        FieldElement {
            value: (self.value as u16 * other.value as u16 % self.modulus as u16) as u8,
            modulus: self.modulus,
        }
    }

    pub fn neg(&self) -> Self {
        FieldElement {
            value: (self.modulus - self.value) % self.modulus,
            modulus: self.modulus,
        }
    }

    /// Multiplicative inverse; None for zero. p is tiny, exhaustive search
    /// is exact and instant.
    pub fn inv(&self) -> Option<Self> {
        if self.value == 0 {
            return None;
        }
        let p = self.modulus as u16;
        let v = self.value as u16;
        (1..p)
            .find(|&c| v * c % p == 1)
            .map(|c| FieldElement { value: c as u8, modulus: self.modulus })
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.modulus)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// Dense matrix over GF(p), row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    modulus: u8,
    rows: usize,
    cols: usize,
    entries: Vec<u8>, // canonical residues
}

impl Matrix {
    pub fn from_rows(modulus: u8, rows: &[Vec<u8>]) -> Result<Self> {
        if !is_supported_prime(modulus) {
            return Err(Error::InvalidParameter {
                detail: format!("modulus {modulus} is not a supported prime (2..13)"),
            });
        }
        let cols = rows.first().map_or(0, |r| r.len());
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch { expected: cols, got: r.len() });
            }
            for &v in r {
                if v >= modulus {
                    return Err(Error::InvalidParameter {
                        detail: format!("entry {v} out of range for GF({modulus})"),
                    });
                }
                entries.push(v);
            }
        }
        Ok(Matrix { modulus, rows: rows.len(), cols, entries })
    }

    pub fn zero(modulus: u8, rows: usize, cols: usize) -> Result<Self> {
        if !is_supported_prime(modulus) {
            return Err(Error::InvalidParameter {
                detail: format!("modulus {modulus} is not a supported prime (2..13)"),
            });
        }
        Ok(Matrix { modulus, rows, cols, entries: vec![0u8; rows * cols] })
    }

    pub fn identity(modulus: u8, n: usize) -> Result<Self> {
        let mut m = Matrix::zero(modulus, n, n)?;
        for i in 0..n {
            m.entries[i * n + i] = 1;
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn modulus(&self) -> u8 {
        self.modulus
    }

    pub fn get(&self, r: usize, c: usize) -> FieldElement {
        FieldElement {
            value: self.entries[r * self.cols + c],
            modulus: self.modulus,
        }
    }

    pub fn row(&self, r: usize) -> &[u8] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<u8>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    fn inv_table(&self) -> [u8; 14] {
        let p = self.modulus as u16;
        let mut t = [0u8; 14];
        for v in 1..p {
            t[v as usize] = (1..p).find(|&c| v * c % p == 1).unwrap() as u8;
        }
        t
    }

    /// Reduced row echelon form and rank.
    ///
    /// Pivot choice is deterministic: leftmost nonzero column, topmost row.
    /// The rowspace is preserved exactly, so golden outputs are stable.
    pub fn rref(&self) -> (Matrix, usize) {
        let p = self.modulus as u16;
        let inv = self.inv_table();
        let mut m = self.clone();
        let (rows, cols) = (m.rows, m.cols);
        let mut rank = 0usize;
        for c in 0..cols {
            let pivot = (rank..rows).find(|&r| m.entries[r * cols + c] != 0);
            let Some(pr) = pivot else { continue };
            if pr != rank {
                for j in 0..cols {
                    m.entries.swap(rank * cols + j, pr * cols + j);
                }
            }
            let f = inv[m.entries[rank * cols + c] as usize] as u16;
            if f != 1 {
                for j in 0..cols {
                    let e = &mut m.entries[rank * cols + j];
                    *e = (*e as u16 * f % p) as u8;
                }
            }
            for r in 0..rows {
                if r == rank {
                    continue;
                }
                let factor = m.entries[r * cols + c] as u16;
                if factor == 0 {
                    continue;
                }
                for j in 0..cols {
                    let head = m.entries[rank * cols + j] as u16;
                    let e = &mut m.entries[r * cols + j];
                    *e = ((*e as u16 + p * p - factor * head % p) % p) as u8;
                }
            }
            rank += 1;
            if rank == rows {
                break;
            }
        }
        (m, rank)
    }

    pub fn rank(&self) -> usize {
        self.rref().1
    }

    /// Basis of the right kernel {v : M v^T = 0}, one row per free column of
    /// the RREF; row count is always cols - rank.
    pub fn nullspace_basis(&self) -> Matrix {
        let (r, rank) = self.rref();
        let cols = self.cols;
        let p = self.modulus;
        let mut pivot_cols = Vec::with_capacity(rank);
        let mut row_idx = 0usize;
        for c in 0..cols {
            if row_idx < rank && r.entries[row_idx * cols + c] != 0 {
                // leading entries are 1 after rref
                pivot_cols.push(c);
                row_idx += 1;
            }
        }
        let free_cols: Vec<usize> = (0..cols).filter(|c| !pivot_cols.contains(c)).collect();
        let mut out = Matrix { modulus: p, rows: 0, cols, entries: vec![] };
        for &fc in &free_cols {
            let mut v = vec![0u8; cols];
            v[fc] = 1;
            for (i, &pc) in pivot_cols.iter().enumerate() {
                let coeff = r.entries[i * cols + fc];
                v[pc] = (p - coeff) % p;
            }
            out.entries.extend_from_slice(&v);
            out.rows += 1;
        }
        out
    }

    /// M v^T over GF(p).
    pub fn mul_vector(&self, v: &[u8]) -> Vec<u8> {
        assert_eq!(v.len(), self.cols);
        let p = self.modulus as u32;
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(0u32, |acc, (&a, &b)| (acc + a as u32 * b as u32) % p) as u8
            })
            .collect()
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over GF({})", self.rows, self.cols, self.modulus)?;
        for r in 0..self.rows {
            for c in 0..self.cols {
                write!(f, "{}", self.entries[r * self.cols + c])?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// rref of m with its rank, as a free function mirroring the matrix method.
pub fn rref(m: &Matrix) -> (Matrix, usize) {
    m.rref()
}

/// Nullspace basis of m, as a free function mirroring the matrix method.
pub fn nullspace_basis(m: &Matrix) -> Matrix {
    m.nullspace_basis()
}
