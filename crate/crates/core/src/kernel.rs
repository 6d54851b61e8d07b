//! Exact integer kernel bases by fraction-free elimination.
//!
//! Used for the down-operator kernels behind harmonic function bases, where
//! verdicts hinge on exact zero tests. Entries are arbitrary-precision
//! integers; rows are kept primitive (content 1) to hold growth down, and
//! pivoting is deterministic (leftmost column, topmost row) so bases are
//! reproducible.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Primitive integer basis of { x : M x = 0 } for an integer matrix given in
/// row-major order. One basis vector per free column, in ascending free-column
/// order; each vector has gcd 1 and positive entry at its free column.
pub fn integer_kernel_basis(rows: usize, cols: usize, entries: &[i64]) -> Vec<Vec<BigInt>> {
    assert_eq!(entries.len(), rows * cols);
    let m: Vec<Vec<BigInt>> = (0..rows)
        .map(|r| entries[r * cols..(r + 1) * cols].iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    integer_kernel_basis_bigint(m, cols)
}

/// Same as `integer_kernel_basis` for rows already in arbitrary precision.
pub fn integer_kernel_basis_bigint(mut m: Vec<Vec<BigInt>>, cols: usize) -> Vec<Vec<BigInt>> {
    let rows = m.len();
    debug_assert!(m.iter().all(|r| r.len() == cols));

    // forward elimination, fraction-free: row_i <- pivot*row_i - factor*row_pivot
    let mut pivot_cols: Vec<usize> = Vec::new();
    let mut rank = 0usize;
    for c in 0..cols {
        let Some(pr) = (rank..rows).find(|&r| !m[r][c].is_zero()) else { continue };
        m.swap(rank, pr);
        let pivot = m[rank][c].clone();
        for r in rank + 1..rows {
            if m[r][c].is_zero() {
                continue;
            }
            let factor = m[r][c].clone();
            for j in c..cols {
                let v = &pivot * &m[r][j] - &factor * &m[rank][j];
                m[r][j] = v;
            }
            normalize_row(&mut m[r]);
        }
        pivot_cols.push(c);
        rank += 1;
        if rank == rows {
            break;
        }
    }

    // back substitution per free column, in exact rationals
    let free_cols: Vec<usize> = (0..cols).filter(|c| !pivot_cols.contains(c)).collect();
    let mut basis = Vec::with_capacity(free_cols.len());
    for &fc in &free_cols {
        let mut x: Vec<BigRational> = vec![BigRational::zero(); cols];
        x[fc] = BigRational::one();
        for (i, &pc) in pivot_cols.iter().enumerate().rev() {
            // row i: m[i][pc] * x[pc] + sum_{j > pc} m[i][j] * x[j] = 0
            let mut s = BigRational::zero();
            for j in pc + 1..cols {
                if !m[i][j].is_zero() && !x[j].is_zero() {
                    s += BigRational::from(m[i][j].clone()) * &x[j];
                }
            }
            x[pc] = -s / BigRational::from(m[i][pc].clone());
        }
        basis.push(clear_denominators(&x));
    }
    basis
}

/// Divide a row by the gcd of its entries (no-op on zero rows).
fn normalize_row(row: &mut [BigInt]) {
    let mut g = BigInt::zero();
    for v in row.iter() {
        if !v.is_zero() {
            g = g.gcd(v);
        }
        if g.is_one() {
            return;
        }
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    for v in row.iter_mut() {
        *v /= &g;
    }
}

/// Scale a rational vector to a primitive integer vector. The scaling factor
/// (lcm of denominators over gcd of numerators) is positive, so the entry
/// that was +1 in the input stays positive.
fn clear_denominators(x: &[BigRational]) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for v in x {
        if !v.is_zero() {
            lcm = lcm.lcm(v.denom());
        }
    }
    let mut ints: Vec<BigInt> = x
        .iter()
        .map(|v| (v * BigRational::from(lcm.clone())).to_integer())
        .collect();
    let mut g = BigInt::zero();
    for v in &ints {
        if !v.is_zero() {
            g = g.gcd(v);
        }
    }
    if !g.is_zero() && !g.is_one() {
        for v in &mut ints {
            *v /= &g;
        }
    }
    // lcm > 0 and the defining free-column entry was +1, so no sign flip is
    // needed; assert the convention instead of trusting it
    debug_assert!(ints.iter().any(|v| v.is_positive()) || ints.iter().all(|v| v.is_zero()));
    ints
}
