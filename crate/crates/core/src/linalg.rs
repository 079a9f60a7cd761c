//! Exact normal forms over a generic integer scalar: Smith normal form
//! with all four transformation matrices, column-style Hermite normal
//! form, integer kernels, fraction-free determinants, and Gaussian
//! elimination over a field for the rational layer.


use crate::matrix::{Mat, Scalar};

/// Result of [`smith`]: `u * m * v = d` with `u`, `v` unimodular and `d`
/// diagonal with a divisibility chain `d[0] | d[1] | …`.
#[derive(Clone)]
pub struct Smith<T> {
    pub u: Mat<T>,
    pub u_inv: Mat<T>,
    pub d: Mat<T>,
    pub v: Mat<T>,
    pub v_inv: Mat<T>,
}

impl<T: Scalar> Smith<T> {
    /// Number of nonzero diagonal entries.
    pub fn rank(&self) -> usize {
        let n = self.d.rows().min(self.d.cols());
        (0..n).take_while(|&i| !self.d[(i, i)].is_zero()).count()
    }

    /// Nonzero diagonal entries `d_1 | d_2 | …`.
    pub fn invariant_factors(&self) -> Vec<T> {
        (0..self.rank()).map(|i| self.d[(i, i)].clone()).collect()
    }
}

struct SmithCalc<T> {
    d: Mat<T>,
    u: Mat<T>,
    u_inv: Mat<T>,
    v: Mat<T>,
    v_inv: Mat<T>,
}

impl<T: Scalar> SmithCalc<T> {
    // row a += k * row b, with the inverse op mirrored on u_inv.
    fn row_add(&mut self, a: usize, b: usize, k: &T) {
        for j in 0..self.d.cols() {
            let add = k.clone() * self.d[(b, j)].clone();
            self.d[(a, j)] += add;
        }
        for j in 0..self.u.cols() {
            let add = k.clone() * self.u[(b, j)].clone();
            self.u[(a, j)] += add;
        }
        for i in 0..self.u_inv.rows() {
            let sub = k.clone() * self.u_inv[(i, a)].clone();
            self.u_inv[(i, b)] -= sub;
        }
    }

    // col a += k * col b.
    fn col_add(&mut self, a: usize, b: usize, k: &T) {
        for i in 0..self.d.rows() {
            let add = k.clone() * self.d[(i, b)].clone();
            self.d[(i, a)] += add;
        }
        for i in 0..self.v.rows() {
            let add = k.clone() * self.v[(i, b)].clone();
            self.v[(i, a)] += add;
        }
        for j in 0..self.v_inv.cols() {
            let sub = k.clone() * self.v_inv[(a, j)].clone();
            self.v_inv[(b, j)] -= sub;
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        self.d.swap_rows(a, b);
        self.u.swap_rows(a, b);
        self.u_inv.swap_cols(a, b);
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        self.d.swap_cols(a, b);
        self.v.swap_cols(a, b);
        self.v_inv.swap_rows(a, b);
    }

    fn negate_row(&mut self, a: usize) {
        for j in 0..self.d.cols() {
            let x = self.d[(a, j)].clone();
            self.d[(a, j)] = -x;
        }
        for j in 0..self.u.cols() {
            let x = self.u[(a, j)].clone();
            self.u[(a, j)] = -x;
        }
        for i in 0..self.u_inv.rows() {
            let x = self.u_inv[(i, a)].clone();
            self.u_inv[(i, a)] = -x;
        }
    }
}

/// Smith decomposition `u * m * v = d`. Total: defined for every integer
/// matrix, including empty shapes.
pub fn smith<T: Scalar>(m: &Mat<T>) -> Smith<T> {
    let (t, s) = (m.rows(), m.cols());
    let mut c = SmithCalc {
        d: m.clone(),
        u: Mat::identity(t),
        u_inv: Mat::identity(t),
        v: Mat::identity(s),
        v_inv: Mat::identity(s),
    };

    let mut k = 0;
    while k < t.min(s) {
        // Pivot: entry of minimal absolute value in the trailing block.
        let mut pivot: Option<(usize, usize)> = None;
        for i in k..t {
            for j in k..s {
                if !c.d[(i, j)].is_zero() {
                    let better = match pivot {
                        None => true,
                        Some((pi, pj)) => c.d[(i, j)].abs() < c.d[(pi, pj)].abs(),
                    };
                    if better {
                        pivot = Some((i, j));
                    }
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        c.swap_rows(k, pi);
        c.swap_cols(k, pj);

        'pivot: loop {
            // Clear column k below the pivot.
            let mut i = k + 1;
            while i < t {
                if !c.d[(i, k)].is_zero() {
                    let (q, r) = c.d[(i, k)].div_mod_floor(&c.d[(k, k)]);
                    c.row_add(i, k, &-q);
                    if !r.is_zero() {
                        c.swap_rows(i, k);
                        continue;
                    }
                }
                i += 1;
            }
            // Clear row k to the right of the pivot.
            let mut j = k + 1;
            while j < s {
                if !c.d[(k, j)].is_zero() {
                    let (q, r) = c.d[(k, j)].div_mod_floor(&c.d[(k, k)]);
                    c.col_add(j, k, &-q);
                    if !r.is_zero() {
                        c.swap_cols(j, k);
                        continue 'pivot;
                    }
                }
                j += 1;
            }
            // Make the pivot divide the whole trailing block.
            let mut fixed = true;
            'scan: for i in k + 1..t {
                for j in k + 1..s {
                    if !c.d[(i, j)].mod_floor(&c.d[(k, k)]).is_zero() {
                        c.row_add(k, i, &T::one());
                        fixed = false;
                        break 'scan;
                    }
                }
            }
            if fixed {
                break;
            }
        }
        if c.d[(k, k)].is_negative() {
            c.negate_row(k);
        }
        k += 1;
    }

    Smith { u: c.u, u_inv: c.u_inv, d: c.d, v: c.v, v_inv: c.v_inv }
}

/// Column-style Hermite normal form of the column span of `m`.
///
/// The returned matrix has one column per pivot; pivot rows strictly
/// increase left to right, pivots are positive, and in each pivot row the
/// entries in earlier columns are reduced into `[0, pivot)`. This is the
/// unique canonical basis of the subgroup generated by the columns.
pub fn hnf_cols<T: Scalar>(m: &Mat<T>) -> Mat<T> {
    let (t, s) = (m.rows(), m.cols());
    let mut d = m.clone();
    let mut p = 0; // number of finished pivot columns
    for i in 0..t {
        if p == s {
            break;
        }
        // gcd-eliminate row i among columns p..s until one column remains.
        loop {
            let mut min_col: Option<usize> = None;
            for j in p..s {
                if !d[(i, j)].is_zero()
                    && min_col.is_none_or(|mc| d[(i, j)].abs() < d[(i, mc)].abs())
                {
                    min_col = Some(j);
                }
            }
            let Some(mc) = min_col else { break };
            d.swap_cols(p, mc);
            let mut done = true;
            for j in p + 1..s {
                if !d[(i, j)].is_zero() {
                    let q = d[(i, j)].div_floor(&d[(i, p)]);
                    for r in 0..t {
                        let sub = q.clone() * d[(r, p)].clone();
                        d[(r, j)] -= sub;
                    }
                    if !d[(i, j)].is_zero() {
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
        }
        if d[(i, p)].is_zero() {
            continue;
        }
        if d[(i, p)].is_negative() {
            for r in 0..t {
                let x = d[(r, p)].clone();
                d[(r, p)] = -x;
            }
        }
        // Reduce earlier columns in the pivot row into [0, pivot).
        for j in 0..p {
            let q = d[(i, j)].div_floor(&d[(i, p)]);
            if !q.is_zero() {
                for r in 0..t {
                    let sub = q.clone() * d[(r, p)].clone();
                    d[(r, j)] -= sub;
                }
            }
        }
        p += 1;
    }
    d.take_cols(p)
}

/// Basis of the integer kernel `{x : m x = 0}`, as columns, in column
/// HNF. The result is a saturated sublattice.
pub fn kernel<T: Scalar>(m: &Mat<T>) -> Mat<T> {
    // Column-reduce [m; I]; columns whose top part vanished record the
    // combinations that kill m, and in column HNF they are exactly the
    // columns whose pivot row lies in the identity block.
    let (t, s) = (m.rows(), m.cols());
    let stacked = m.vstack(&Mat::identity(s));
    let h = hnf_cols(&stacked);
    let kernel_cols: Vec<usize> = (0..h.cols())
        .filter(|&j| (0..t).all(|i| h[(i, j)].is_zero()))
        .collect();
    h.submatrix(&(t..t + s).collect::<Vec<_>>(), &kernel_cols)
}

/// Rank of an integer matrix.
pub fn rank<T: Scalar>(m: &Mat<T>) -> usize {
    hnf_cols(m).cols()
}

/// Fraction-free determinant (Bareiss). Panics on non-square input.
pub fn det<T: Scalar>(m: &Mat<T>) -> T {
    let n = m.rows();
    assert_eq!(n, m.cols(), "determinant of non-square matrix");
    if n == 0 {
        return T::one();
    }
    let mut a = m.clone();
    let mut sign = T::one();
    let mut prev = T::one();
    for k in 0..n - 1 {
        if a[(k, k)].is_zero() {
            let Some(i) = (k + 1..n).find(|&i| !a[(i, k)].is_zero()) else {
                return T::zero();
            };
            a.swap_rows(k, i);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num =
                    a[(i, j)].clone() * a[(k, k)].clone() - a[(i, k)].clone() * a[(k, j)].clone();
                a[(i, j)] = num / prev.clone();
            }
            a[(i, k)] = T::zero();
        }
        prev = a[(k, k)].clone();
    }
    sign * a[(n - 1, n - 1)].clone()
}

/// Solves `a x = b` over a field by Gaussian elimination, one column of
/// `x` per column of `b`. Returns `None` if any system is inconsistent;
/// free variables are set to zero.
pub fn field_solve<T>(a: &Mat<T>, b: &Mat<T>) -> Option<Mat<T>>
where
    T: Clone + num_traits::Num + PartialEq,
{
    assert_eq!(a.rows(), b.rows(), "solve shape mismatch");
    let (rows, cols) = (a.rows(), a.cols());
    let mut w = a.hstack(b);
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for j in 0..cols {
        let Some(pi) = (r..rows).find(|&i| w[(i, j)] != T::zero()) else {
            continue;
        };
        w.swap_rows(r, pi);
        let inv = T::one() / w[(r, j)].clone();
        for c in j..w.cols() {
            let x = w[(r, c)].clone() * inv.clone();
            w[(r, c)] = x;
        }
        for i in 0..rows {
            if i != r && w[(i, j)] != T::zero() {
                let f = w[(i, j)].clone();
                for c in j..w.cols() {
                    let sub = f.clone() * w[(r, c)].clone();
                    let x = w[(i, c)].clone() - sub;
                    w[(i, c)] = x;
                }
            }
        }
        pivot_cols.push(j);
        r += 1;
        if r == rows {
            break;
        }
    }
    // Inconsistent if a zero row of the coefficient part has nonzero rhs.
    for i in r..rows {
        for c in cols..w.cols() {
            if w[(i, c)] != T::zero() {
                return None;
            }
        }
    }
    let mut x = Mat::zeros(cols, b.cols());
    for (ri, &pc) in pivot_cols.iter().enumerate() {
        for c in 0..b.cols() {
            x[(pc, c)] = w[(ri, cols + c)].clone();
        }
    }
    Some(x)
}

/// Rank over a field.
pub fn field_rank<T>(a: &Mat<T>) -> usize
where
    T: Clone + num_traits::Num + PartialEq,
{
    let (rows, cols) = (a.rows(), a.cols());
    let mut w = a.clone();
    let mut r = 0;
    for j in 0..cols {
        let Some(pi) = (r..rows).find(|&i| w[(i, j)] != T::zero()) else {
            continue;
        };
        w.swap_rows(r, pi);
        for i in r + 1..rows {
            if w[(i, j)] != T::zero() {
                let f = w[(i, j)].clone() / w[(r, j)].clone();
                for c in j..cols {
                    let sub = f.clone() * w[(r, c)].clone();
                    let x = w[(i, c)].clone() - sub;
                    w[(i, c)] = x;
                }
            }
        }
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{int, Int, IntMat};
    use num_traits::Signed;

    fn m(rows: Vec<Vec<i64>>) -> IntMat {
        Mat::from_rows(rows).map(|v| int(*v))
    }

    fn check_smith(a: &IntMat) {
        let s = smith(a);
        assert_eq!(s.u.mul(a).mul(&s.v), s.d, "u*m*v != d");
        assert_eq!(s.u.mul(&s.u_inv), Mat::identity(a.rows()));
        assert_eq!(s.v.mul(&s.v_inv), Mat::identity(a.cols()));
        assert_eq!(det(&s.u).abs(), int(1));
        assert_eq!(det(&s.v).abs(), int(1));
        let f = s.invariant_factors();
        for w in f.windows(2) {
            assert!(w[1].clone() % w[0].clone() == int(0), "chain broken: {f:?}");
        }
    }

    #[test]
    fn smith_identity() {
        let s = smith(&IntMat::identity(2));
        assert_eq!(s.d, IntMat::identity(2));
        assert_eq!(s.u, IntMat::identity(2));
        assert_eq!(s.v, IntMat::identity(2));
    }

    #[test]
    fn smith_single_entry() {
        let s = smith(&m(vec![vec![2]]));
        assert_eq!(s.d, m(vec![vec![2]]));
    }

    #[test]
    fn smith_2x4_example() {
        // gcd-of-minors oracle: d1 = gcd of entries = 2,
        // d1*d2 = gcd of 2x2 minors = |2*8 - 4*6| = 8, so factors (2, 4).
        let a = m(vec![vec![2, 4], vec![6, 8]]);
        let s = smith(&a);
        assert_eq!(s.invariant_factors(), vec![int(2), int(4)]);
        check_smith(&a);
    }

    #[test]
    fn smith_zero_and_empty() {
        check_smith(&IntMat::zeros(2, 3));
        check_smith(&IntMat::zeros(0, 3));
        check_smith(&IntMat::zeros(3, 0));
    }

    #[test]
    fn smith_various() {
        check_smith(&m(vec![vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 9]]));
        check_smith(&m(vec![vec![-20, -7, -27], vec![17, 8, 14], vec![13, 8, 10]]));
        check_smith(&m(vec![vec![0, 0], vec![0, 4]]));
    }

    #[test]
    fn hnf_canonical_example() {
        // span{(1,1),(0,2)} is already canonical.
        let h = hnf_cols(&m(vec![vec![1, 0], vec![1, 2]]));
        assert_eq!(h, m(vec![vec![1, 0], vec![1, 2]]));
        // The same lattice {(x,y) : x = y mod 2} from messier generators.
        let h2 = hnf_cols(&m(vec![vec![3, 1, 0], vec![1, 1, 4]]));
        assert_eq!(h2, m(vec![vec![1, 0], vec![1, 2]]));
    }

    #[test]
    fn hnf_pivot_reduction() {
        // Lattice {(a,b) : a+b even}: canonical basis {(1,1),(0,2)}.
        let h = hnf_cols(&m(vec![vec![1, 1], vec![-1, 1]]));
        assert_eq!(h, m(vec![vec![1, 0], vec![1, 2]]));
    }

    #[test]
    fn kernel_basic() {
        let k = kernel(&m(vec![vec![1, -1]]));
        assert_eq!(k.cols(), 1);
        let v = k.col(0);
        assert_eq!(v[0], v[1]);
        assert_eq!(v[0].abs(), int(1));
    }

    #[test]
    fn det_examples() {
        assert_eq!(det(&m(vec![vec![2, 0], vec![0, 3]])), int(6));
        assert_eq!(det(&m(vec![vec![0, 1], vec![1, 0]])), int(-1));
        assert_eq!(det(&m(vec![vec![1, 2], vec![2, 4]])), int(0));
        assert_eq!(det(&IntMat::identity(0)), int(1));
    }

    #[test]
    fn field_solve_rational() {
        use crate::rat;
        let a = m(vec![vec![2, 0], vec![0, 4]]).map(|v| crate::Rat::from(v.clone()));
        let b = Mat::from_rows(vec![vec![rat(1, 1)], vec![rat(2, 1)]]);
        let x = field_solve(&a, &b).unwrap();
        assert_eq!(x[(0, 0)], rat(1, 2));
        assert_eq!(x[(1, 0)], rat(1, 2));
        // inconsistent system
        let a2 = m(vec![vec![1], vec![1]]).map(|v| crate::Rat::from(v.clone()));
        let b2 = Mat::from_rows(vec![vec![rat(1, 1)], vec![rat(2, 1)]]);
        assert!(field_solve(&a2, &b2).is_none());
    }
}
