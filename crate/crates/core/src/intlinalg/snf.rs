use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::Serialize;

use super::matrix::{bigint_json, IntegerMatrix};

/// `D = P A Q` with `P`, `Q` unimodular and `D` in Smith normal form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SnfDecomposition {
    pub d: IntegerMatrix,
    pub p: IntegerMatrix,
    pub p_inv: IntegerMatrix,
    pub q: IntegerMatrix,
    pub q_inv: IntegerMatrix,
    /// `|d_ii|` for the nonzero diagonal entries, in order.
    #[serde(with = "bigint_json::vec")]
    pub invariant_factors: Vec<BigInt>,
}

impl SnfDecomposition {
    pub fn rank(&self) -> usize {
        self.invariant_factors.len()
    }
}

struct Reducer {
    a: IntegerMatrix,
    p: IntegerMatrix,
    p_inv: IntegerMatrix,
    q: IntegerMatrix,
    q_inv: IntegerMatrix,
}

impl Reducer {
    // Row ops act on A and P; P_inv receives the inverse column op.
    fn row_add(&mut self, dst: usize, src: usize, c: &BigInt) {
        self.a.add_row_multiple(dst, src, c);
        self.p.add_row_multiple(dst, src, c);
        self.p_inv.add_col_multiple(src, dst, &-c);
    }

    fn row_swap(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        self.p.swap_rows(i, j);
        self.p_inv.swap_cols(i, j);
    }

    fn row_negate(&mut self, i: usize) {
        self.a.negate_row(i);
        self.p.negate_row(i);
        self.p_inv.negate_col(i);
    }

    // Column ops act on A and Q; Q_inv receives the inverse row op.
    fn col_add(&mut self, dst: usize, src: usize, c: &BigInt) {
        self.a.add_col_multiple(dst, src, c);
        self.q.add_col_multiple(dst, src, c);
        self.q_inv.add_row_multiple(src, dst, &-c);
    }

    fn col_swap(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        self.q.swap_cols(i, j);
        self.q_inv.swap_rows(i, j);
    }

    /// Position of a nonzero entry of least absolute value in the block
    /// `rows >= t, cols >= t`.
    fn pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<((usize, usize), BigInt)> = None;
        for i in t..self.a.rows() {
            for j in t..self.a.cols() {
                let v = &self.a[(i, j)];
                if v.is_zero() {
                    continue;
                }
                let mag = v.abs();
                if best.as_ref().is_none_or(|(_, b)| &mag < b) {
                    best = Some(((i, j), mag));
                }
            }
        }
        best.map(|(pos, _)| pos)
    }

    /// Clears row and column `t` outside the diagonal, keeping `a[t][t]`
    /// a divisor of every entry of the remaining block.
    fn settle(&mut self, t: usize) -> bool {
        let (rows, cols) = self.a.shape();
        loop {
            let Some((pi, pj)) = self.pivot(t) else {
                return false;
            };
            self.row_swap(t, pi);
            self.col_swap(t, pj);

            let mut dirty = false;
            for i in (t + 1)..rows {
                if self.a[(i, t)].is_zero() {
                    continue;
                }
                let q = self.a[(i, t)].div_floor(&self.a[(t, t)]);
                self.row_add(i, t, &-q);
                dirty |= !self.a[(i, t)].is_zero();
            }
            for j in (t + 1)..cols {
                if self.a[(t, j)].is_zero() {
                    continue;
                }
                let q = self.a[(t, j)].div_floor(&self.a[(t, t)]);
                self.col_add(j, t, &-q);
                dirty |= !self.a[(t, j)].is_zero();
            }
            if dirty {
                // a smaller remainder appeared; pick it as the next pivot
                continue;
            }

            let pivot = self.a[(t, t)].clone();
            let offender = ((t + 1)..rows).find(|&i| ((t + 1)..cols).any(|j| !self.a[(i, j)].is_multiple_of(&pivot)));
            match offender {
                Some(i) => {
                    let one = BigInt::from(1);
                    self.row_add(t, i, &one);
                }
                None => {
                    if self.a[(t, t)].is_negative() {
                        self.row_negate(t);
                    }
                    return true;
                }
            }
        }
    }
}

/// Smith normal form with both transforms and their inverses.
///
/// Pivots are chosen by least absolute value among the remaining block,
/// and diagonal entries come out positive.
pub fn smith_normal_form(a: &IntegerMatrix) -> SnfDecomposition {
    let (m, n) = a.shape();
    let mut r = Reducer {
        a: a.clone(),
        p: IntegerMatrix::identity(m),
        p_inv: IntegerMatrix::identity(m),
        q: IntegerMatrix::identity(n),
        q_inv: IntegerMatrix::identity(n),
    };
    let mut invariant_factors = Vec::new();
    for t in 0..m.min(n) {
        if !r.settle(t) {
            break;
        }
        invariant_factors.push(r.a[(t, t)].clone());
    }
    SnfDecomposition { d: r.a, p: r.p, p_inv: r.p_inv, q: r.q, q_inv: r.q_inv, invariant_factors }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn m(rows: &[&[i64]]) -> IntegerMatrix {
        IntegerMatrix::from_rows(rows).unwrap()
    }

    fn factors(a: &IntegerMatrix) -> Vec<i64> {
        smith_normal_form(a).invariant_factors.iter().map(|x| i64::try_from(x).unwrap()).collect()
    }

    fn check(a: &IntegerMatrix) {
        let s = smith_normal_form(a);
        assert_eq!(&(&s.p * a) * &s.q, s.d);
        assert!((&s.p * &s.p_inv).is_identity());
        assert!((&s.q * &s.q_inv).is_identity());
        for (i, f) in s.invariant_factors.iter().enumerate() {
            assert_eq!(&s.d[(i, i)], f);
            assert!(f.is_positive());
            if let Some(next) = s.invariant_factors.get(i + 1) {
                assert!(next.is_multiple_of(f));
            }
        }
    }

    #[test]
    fn one_by_one() {
        assert_eq!(factors(&m(&[&[2]])), vec![2]);
        assert_eq!(factors(&m(&[&[-7]])), vec![7]);
    }

    #[test]
    fn glide_column() {
        let a = m(&[&[2], &[0]]);
        assert_eq!(factors(&a), vec![2]);
        check(&a);
    }

    #[test]
    fn rank_one_projection() {
        assert_eq!(factors(&m(&[&[1, 0], &[0, 0]])), vec![1]);
    }

    #[test]
    fn divisibility_is_enforced() {
        // diag(2, 3) is not in normal form; its factors are (1, 6)
        let a = m(&[&[2, 0], &[0, 3]]);
        assert_eq!(factors(&a), vec![1, 6]);
        check(&a);
    }

    #[test]
    fn empty_shapes() {
        for (r, c) in [(0, 0), (0, 3), (4, 0)] {
            let s = smith_normal_form(&IntegerMatrix::zeros(r, c));
            assert!(s.invariant_factors.is_empty());
            assert_eq!(s.p.shape(), (r, r));
            assert_eq!(s.q.shape(), (c, c));
        }
    }

    #[test]
    fn known_example() {
        let a = m(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]);
        assert_eq!(factors(&a), vec![2, 6, 12]);
        check(&a);
    }
}
