//! Exact integer linear algebra: Smith normal form, kernels, cokernels and
//! integer solving.
//!
//! For `A: Z^n -> Z^m` with `P A Q = D` and invariant factors `d_1 | ... | d_k`:
//! the last `n - k` columns of `Q` are a lattice basis of `ker A`, and
//! `coker A = Z/d_j x ... x Z/d_k x Z^(m - k)`, where `d_j` is the first factor
//! greater than one. The free part is generated by the images of the last
//! `m - k` columns of `P^-1`, the torsion part by the columns of `P^-1` sitting
//! at the factors greater than one.

mod matrix;
mod snf;

pub use matrix::{bigint_json, IntegerMatrix};
pub use snf::{smith_normal_form, SnfDecomposition};

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    #[error("expected {rows}x{cols} = {} entries, got {len}", rows * cols)]
    BadEntryCount { rows: usize, cols: usize, len: usize },
    #[error("row {row} has {found} entries, expected {expected}")]
    RaggedRows { row: usize, expected: usize, found: usize },
    #[error("incompatible shapes {left:?} and {right:?}")]
    ShapeMismatch { left: (usize, usize), right: (usize, usize) },
}

/// Presentation of the cokernel of an integer matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CokernelPresentation {
    /// Invariant factors greater than one, a divisibility chain.
    #[serde(with = "bigint_json::vec")]
    pub torsion: Vec<BigInt>,
    pub free_rank: usize,
    /// One generator per entry of `torsion`, as vectors in the codomain.
    #[serde(with = "bigint_json::rows")]
    pub torsion_generators: Vec<Vec<BigInt>>,
    #[serde(with = "bigint_json::rows")]
    pub free_generators: Vec<Vec<BigInt>>,
}

/// Columns form a lattice basis of `ker A`.
pub fn kernel_basis(a: &IntegerMatrix) -> IntegerMatrix {
    kernel_from_snf(&smith_normal_form(a))
}

pub fn kernel_from_snf(snf: &SnfDecomposition) -> IntegerMatrix {
    let n = snf.q.cols();
    snf.q.columns(snf.rank()..n)
}

pub fn cokernel(a: &IntegerMatrix) -> CokernelPresentation {
    cokernel_from_snf(&smith_normal_form(a))
}

pub fn cokernel_from_snf(snf: &SnfDecomposition) -> CokernelPresentation {
    let k = snf.rank();
    let m = snf.p_inv.cols();
    let mut torsion = Vec::new();
    let mut torsion_generators = Vec::new();
    for (i, d) in snf.invariant_factors.iter().enumerate() {
        if !d.is_one() {
            torsion.push(d.clone());
            torsion_generators.push(snf.p_inv.column(i));
        }
    }
    CokernelPresentation {
        torsion,
        free_rank: m - k,
        torsion_generators,
        free_generators: (k..m).map(|j| snf.p_inv.column(j)).collect(),
    }
}

/// Solves `A X = B` over the integers.
///
/// Returns `Ok(None)` when no integer solution exists. When `A` has a
/// nontrivial kernel the returned solution has zero coordinates along the
/// kernel directions of `Q`.
pub fn solve_integer(a: &IntegerMatrix, b: &IntegerMatrix) -> Result<Option<IntegerMatrix>, LinalgError> {
    if a.rows() != b.rows() {
        return Err(LinalgError::ShapeMismatch { left: a.shape(), right: b.shape() });
    }
    let snf = smith_normal_form(a);
    Ok(solve_with_snf(&snf, b))
}

pub fn solve_with_snf(snf: &SnfDecomposition, b: &IntegerMatrix) -> Option<IntegerMatrix> {
    let n = snf.q.rows();
    let k = snf.rank();
    // D Y = P B, X = Q Y
    let c = &snf.p * b;
    let mut y = IntegerMatrix::zeros(n, b.cols());
    for j in 0..b.cols() {
        for i in 0..c.rows() {
            let v = &c[(i, j)];
            if i < k {
                let (quot, rem) = v.div_rem(&snf.invariant_factors[i]);
                if !rem.is_zero() {
                    return None;
                }
                y[(i, j)] = quot;
            } else if !v.is_zero() {
                return None;
            }
        }
    }
    Some(&snf.q * &y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn m(rows: &[&[i64]]) -> IntegerMatrix {
        IntegerMatrix::from_rows(rows).unwrap()
    }

    fn ints(v: &[BigInt]) -> Vec<i64> {
        v.iter().map(|x| i64::try_from(x).unwrap()).collect()
    }

    #[test]
    fn kernel_of_zero_map_is_everything() {
        assert_eq!(kernel_basis(&IntegerMatrix::zeros(1, 2)).cols(), 2);
    }

    #[test]
    fn kernel_of_identity_is_trivial() {
        assert_eq!(kernel_basis(&IntegerMatrix::identity(3)).cols(), 0);
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let a = m(&[&[1, 2, 3, 4], &[2, 4, 6, 8], &[0, 1, 1, 0]]);
        let k = kernel_basis(&a);
        assert_eq!(k.cols(), 2);
        assert!((&a * &k).is_zero());
    }

    #[test]
    fn cokernel_of_zero_map_is_free() {
        let c = cokernel(&IntegerMatrix::zeros(3, 2));
        assert_eq!(c.free_rank, 3);
        assert!(c.torsion.is_empty());
    }

    #[test]
    fn cokernel_of_two() {
        let c = cokernel(&m(&[&[2]]));
        assert_eq!(ints(&c.torsion), vec![2]);
        assert_eq!(c.free_rank, 0);
        assert_eq!(c.torsion_generators.len(), 1);
    }

    #[test]
    fn solve_identity_returns_rhs() {
        let b = m(&[&[1, -2], &[3, 4], &[0, 7]]);
        let x = solve_integer(&IntegerMatrix::identity(3), &b).unwrap().unwrap();
        assert_eq!(x, b);
    }

    #[test]
    fn two_does_not_divide_three() {
        assert_eq!(solve_integer(&m(&[&[2]]), &m(&[&[3]])).unwrap(), None);
    }

    #[test]
    fn solve_rejects_row_mismatch() {
        assert!(solve_integer(&m(&[&[1]]), &m(&[&[1], &[2]])).is_err());
    }

    #[test]
    fn inconsistent_system_has_no_solution() {
        // x = 1 and 2x = 3 cannot both hold
        let a = m(&[&[1], &[2]]);
        let b = m(&[&[1], &[3]]);
        assert_eq!(solve_integer(&a, &b).unwrap(), None);
    }
}
