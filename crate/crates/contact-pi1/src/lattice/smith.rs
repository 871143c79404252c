use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::group::AbelianGroup;
use crate::lattice::matrix::IntMatrix;
use crate::lattice::vector::{gcd_all, IntVector};

/// Smith decomposition U * A * V = S with U, V unimodular and S diagonal,
/// entries nonnegative and each dividing the next.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub s: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
}

impl SmithDecomposition {
    /// The nonzero diagonal entries d_1 | d_2 | ... (the invariant factors).
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        let n = self.s.rows().min(self.s.cols());
        (0..n)
            .map(|i| self.s.get(i, i).clone())
            .take_while(|d| !d.is_zero())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }
}

/// Extended gcd returning (g, x, y) with x*a + y*b = g and g >= 0.
fn ext_gcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let e = a.extended_gcd(b);
    let (mut g, mut x, mut y) = (e.gcd, e.x, e.y);
    if g.is_negative() {
        g = -g;
        x = -x;
        y = -y;
    }
    (g, x, y)
}

/// Clears S[i][t] against the pivot S[t][t]. When the pivot divides the entry
/// a plain shear suffices and leaves row t untouched, so already-cleared
/// entries stay cleared; otherwise a gcd rotation replaces the pivot by
/// gcd(pivot, entry), strictly shrinking it. Applies the same transform to U.
fn eliminate_row_pair(s: &mut IntMatrix, u: &mut IntMatrix, t: usize, i: usize) {
    let a = s.get(t, t).clone();
    let b = s.get(i, t).clone();
    if b.is_zero() {
        return;
    }
    if (&b % &a).is_zero() {
        let q = &b / &a;
        for m in [&mut *s, &mut *u] {
            for j in 0..m.cols() {
                let sub = &q * m.get(t, j);
                *m.get_mut(i, j) -= sub;
            }
        }
        return;
    }
    let (g, x, y) = ext_gcd(&a, &b);
    let (ag, bg) = (&a / &g, &b / &g);
    for m in [&mut *s, &mut *u] {
        for j in 0..m.cols() {
            let top = m.get(t, j).clone();
            let bot = m.get(i, j).clone();
            m.set(t, j, &x * &top + &y * &bot);
            m.set(i, j, -&bg * &top + &ag * &bot);
        }
    }
}

/// Column analogue of `eliminate_row_pair`, tracked in V.
fn eliminate_col_pair(s: &mut IntMatrix, v: &mut IntMatrix, t: usize, j: usize) {
    let a = s.get(t, t).clone();
    let b = s.get(t, j).clone();
    if b.is_zero() {
        return;
    }
    if (&b % &a).is_zero() {
        let q = &b / &a;
        for m in [&mut *s, &mut *v] {
            for i in 0..m.rows() {
                let sub = &q * m.get(i, t);
                *m.get_mut(i, j) -= sub;
            }
        }
        return;
    }
    let (g, x, y) = ext_gcd(&a, &b);
    let (ag, bg) = (&a / &g, &b / &g);
    for m in [&mut *s, &mut *v] {
        for i in 0..m.rows() {
            let left = m.get(i, t).clone();
            let right = m.get(i, j).clone();
            m.set(i, t, &x * &left + &y * &right);
            m.set(i, j, -&bg * &left + &ag * &right);
        }
    }
}

/// Smith normal form by gcd-driven row/column elimination. Pivots are chosen
/// as the smallest-magnitude nonzero entry of the remaining block, which keeps
/// intermediate entries small without any modular shortcuts.
pub fn smith_normal_form(a: &IntMatrix) -> SmithDecomposition {
    let (rows, cols) = (a.rows(), a.cols());
    let mut s = a.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);

    for t in 0..rows.min(cols) {
        // Move the smallest nonzero entry of the remaining block to (t, t).
        let pivot = (t..rows)
            .flat_map(|i| (t..cols).map(move |j| (i, j)))
            .filter(|&(i, j)| !s.get(i, j).is_zero())
            .min_by_key(|&(i, j)| s.get(i, j).abs());
        let Some((pi, pj)) = pivot else { break };
        s.swap_rows(t, pi);
        u.swap_rows(t, pi);
        s.swap_cols(t, pj);
        v.swap_cols(t, pj);

        loop {
            for i in t + 1..rows {
                eliminate_row_pair(&mut s, &mut u, t, i);
            }
            for j in t + 1..cols {
                eliminate_col_pair(&mut s, &mut v, t, j);
            }
            let col_clear = (t + 1..rows).all(|i| s.get(i, t).is_zero());
            let row_clear = (t + 1..cols).all(|j| s.get(t, j).is_zero());
            if !(col_clear && row_clear) {
                continue;
            }
            // Enforce that the pivot divides the rest of the block; folding a
            // dirty row back in strictly shrinks the pivot, so this terminates.
            let dirty = (t + 1..rows)
                .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                .find(|&(i, j)| !(s.get(i, j) % s.get(t, t)).is_zero());
            match dirty {
                None => break,
                Some((i, _)) => {
                    for j in 0..cols {
                        let add = s.get(i, j).clone();
                        *s.get_mut(t, j) += add;
                    }
                    for j in 0..rows {
                        let add = u.get(i, j).clone();
                        *u.get_mut(t, j) += add;
                    }
                }
            }
        }
    }

    for t in 0..rows.min(cols) {
        if s.get(t, t).is_negative() {
            s.negate_row(t);
            u.negate_row(t);
        }
    }

    debug_assert_eq!(u.mul(a).mul(&v), s, "U*A*V must equal S");
    SmithDecomposition { s, u, v }
}

/// Cokernel Z^m / column-span(A) for an m x n matrix A, in canonical form.
pub fn cokernel(a: &IntMatrix) -> AbelianGroup {
    let snf = smith_normal_form(a);
    let factors = snf.invariant_factors();
    let free_rank = a.rows() - factors.len();
    let torsion: Vec<BigInt> = factors.into_iter().filter(|d| !d.is_one()).collect();
    AbelianGroup::new(free_rank, torsion)
}

/// Basis of the saturated integer kernel {x in Z^c : A x = 0}. Each basis
/// vector is primitive with positive leading entry; size is c - rank(A).
pub fn kernel_basis(a: &IntMatrix) -> Vec<IntVector> {
    let snf = smith_normal_form(a);
    let rank = snf.rank();
    let mut basis: Vec<IntVector> = (rank..a.cols())
        .map(|j| {
            let col = snf.v.col(j);
            // Columns of a unimodular matrix are already primitive.
            col.sign_normalized()
        })
        .collect();
    basis.sort();
    basis
}

/// Unimodular A with A * r = e_n (last standard basis vector), for primitive r.
/// This is a Hermite-style column reduction of the single vector r, folding
/// every entry into the last coordinate; r = e_n yields the identity.
pub fn complete_to_unimodular(r: &IntVector) -> Result<IntMatrix> {
    if r.is_zero() {
        return Err(Error::ZeroVector);
    }
    let content = gcd_all(r.entries());
    if !content.is_one() {
        return Err(Error::NotPrimitive { content });
    }
    let n = r.dim();
    let mut w = r.clone().into_entries();
    let mut a = IntMatrix::identity(n);
    let last = n - 1;
    for i in 0..last {
        if w[i].is_zero() {
            continue;
        }
        let (g, x, y) = ext_gcd(&w[last], &w[i]);
        let (pg, qg) = (&w[last] / &g, &w[i] / &g);
        // Rows (i, last) get the unimodular transform sending (w_i, w_last)
        // to (0, g): new last = x*last + y*i, new i = pg*i - qg*last.
        for j in 0..n {
            let row_last = a.get(last, j).clone();
            let row_i = a.get(i, j).clone();
            a.set(last, j, &x * &row_last + &y * &row_i);
            a.set(i, j, &pg * &row_i - &qg * &row_last);
        }
        let (wl, wi) = (w[last].clone(), w[i].clone());
        w[last] = &x * &wl + &y * &wi;
        w[i] = &pg * &wi - &qg * &wl;
        debug_assert!(w[i].is_zero());
    }
    // If no elimination step ran (r = +-e_n style inputs) the last entry can
    // still be -1; absorb the sign into the last row.
    if w[last].is_negative() {
        a.negate_row(last);
        w[last] = -w[last].clone();
    }
    debug_assert!(w[last].is_one());
    debug_assert_eq!(a.mul_vec(r), IntVector::unit(n, n - 1));
    Ok(a)
}

/// Convenience: order of a finite cyclic quotient Z^n / im(A) style checks in
/// tests; gcd of the k x k minors of `a` for k = `size`. This is the classical
/// characterization d_1 * ... * d_k = gcd(k x k minors) used as an oracle.
pub fn minor_gcd(a: &IntMatrix, size: usize) -> BigInt {
    use itertools::Itertools;
    if size == 0 {
        return BigInt::one();
    }
    if size > a.rows() || size > a.cols() {
        return BigInt::zero();
    }
    let mut minors: Vec<BigInt> = Vec::new();
    for row_set in (0..a.rows()).combinations(size) {
        for col_set in (0..a.cols()).combinations(size) {
            let mut sub = IntMatrix::zeros(size, size);
            for (si, &i) in row_set.iter().enumerate() {
                for (sj, &j) in col_set.iter().enumerate() {
                    *sub.get_mut(si, sj) = a.get(i, j).clone();
                }
            }
            minors.push(sub.det().expect("submatrix is square"));
        }
    }
    gcd_all(&minors)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    fn bi(x: i64) -> BigInt {
        BigInt::from(x)
    }

    /// Oracle: Smith invariants from minor gcds, d_k = G_k / G_{k-1} where
    /// G_k = gcd of all k x k minors. Independent of the elimination code.
    fn smith_invariants_by_minor_gcd(a: &IntMatrix) -> Vec<BigInt> {
        let r = a.rank();
        let mut prev = BigInt::one();
        let mut out = Vec::new();
        for k in 1..=r {
            let g = minor_gcd(a, k);
            out.push(&g / &prev);
            prev = g;
        }
        out
    }

    fn check_decomposition(a: &IntMatrix) {
        let snf = smith_normal_form(a);
        assert_eq!(snf.u.mul(a).mul(&snf.v), snf.s, "U*A*V = S fails");
        assert_eq!(snf.u.det().unwrap().abs(), bi(1), "U not unimodular");
        assert_eq!(snf.v.det().unwrap().abs(), bi(1), "V not unimodular");
        let d = snf.invariant_factors();
        for w in d.windows(2) {
            assert!((&w[1] % &w[0]).is_zero(), "divisibility chain fails: {d:?}");
        }
        for (i, di) in d.iter().enumerate() {
            assert!(di > &bi(0));
            assert_eq!(snf.s.get(i, i), di);
        }
        // Off-diagonal must vanish.
        for i in 0..snf.s.rows() {
            for j in 0..snf.s.cols() {
                if i != j {
                    assert!(snf.s.get(i, j).is_zero(), "S not diagonal");
                }
            }
        }
        assert_eq!(d, smith_invariants_by_minor_gcd(a), "minor-gcd oracle disagrees");
    }

    #[test]
    fn smith_of_diag_2_4_example() {
        let a = IntMatrix::from_i64(&[&[2, 4], &[6, 8]]);
        let snf = smith_normal_form(&a);
        assert_eq!(snf.invariant_factors(), vec![bi(2), bi(4)]);
        check_decomposition(&a);
    }

    #[test]
    fn smith_of_identity_and_zero() {
        check_decomposition(&IntMatrix::identity(3));
        assert_eq!(
            smith_normal_form(&IntMatrix::identity(3)).invariant_factors(),
            vec![bi(1), bi(1), bi(1)]
        );
        assert!(smith_normal_form(&IntMatrix::zeros(2, 3))
            .invariant_factors()
            .is_empty());
    }

    #[test]
    fn smith_of_rectangular_and_negative_entries() {
        for a in [
            IntMatrix::from_i64(&[&[2, 4]]),
            IntMatrix::from_i64(&[&[2], &[4]]),
            IntMatrix::from_i64(&[&[-3, 1, 5], &[6, -2, 0]]),
            IntMatrix::from_i64(&[&[1, 0, 0], &[1, 2, 0], &[-1, -1, 1]]),
            IntMatrix::from_i64(&[&[4, 6], &[6, 4]]),
            IntMatrix::from_i64(&[&[0, 0], &[0, 7]]),
        ] {
            check_decomposition(&a);
        }
    }

    #[test]
    fn smith_invariants_of_goodness_counterexample_pair() {
        // The two facet normals through the failing ray of the standard
        // non-good cone; the sublattice they span has index 2 in its saturation.
        let a = IntMatrix::from_i64(&[&[1, 0, 0], &[1, 2, 0]]);
        let snf = smith_normal_form(&a);
        assert_eq!(snf.invariant_factors(), vec![bi(1), bi(2)]);
    }

    #[test]
    fn cokernel_examples() {
        // Z^1 / 2Z = Z/2
        let g = cokernel(&IntMatrix::from_i64(&[&[2]]));
        assert_eq!(g.free_rank(), 0);
        assert_eq!(g.torsion(), &[bi(2)]);

        // Z^2 / span{(1,0),(0,1)} = 0
        assert!(cokernel(&IntMatrix::identity(2)).is_trivial());

        // Z^2 / span{(2,0),(0,2)} = (Z/2)^2
        let g = cokernel(&IntMatrix::from_i64(&[&[2, 0], &[0, 2]]));
        assert_eq!(g.free_rank(), 0);
        assert_eq!(g.torsion(), &[bi(2), bi(2)]);

        // Z^2 / span{(2,4)} = Z + Z/2
        let g = cokernel(&IntMatrix::from_i64(&[&[2], &[4]]));
        assert_eq!(g.free_rank(), 1);
        assert_eq!(g.torsion(), &[bi(2)]);

        // Lens quotient: columns (1,0) and (-q,p) give Z/p.
        let g = cokernel(&IntMatrix::from_i64(&[&[1, -1], &[0, 3]]));
        assert_eq!(g.free_rank(), 0);
        assert_eq!(g.torsion(), &[bi(3)]);
    }

    #[test]
    fn kernel_basis_examples() {
        // Kernel of (2 4) is spanned by (2, -1).
        let k = kernel_basis(&IntMatrix::from_i64(&[&[2, 4]]));
        assert_eq!(k, vec![IntVector::from_i64(&[2, -1])]);

        // Kernel of the first two coordinate projections is the third axis.
        let k = kernel_basis(&IntMatrix::from_i64(&[&[1, 0, 0], &[0, 1, 0]]));
        assert_eq!(k, vec![IntVector::from_i64(&[0, 0, 1])]);

        // Full-rank square matrix has trivial kernel.
        assert!(kernel_basis(&IntMatrix::from_i64(&[&[1, 2], &[3, 4]])).is_empty());

        // Zero-row matrix: kernel is everything.
        let k = kernel_basis(&IntMatrix::from_rows_with_cols(&[], 2));
        assert_eq!(k.len(), 2);
    }

    #[test]
    fn kernel_vectors_satisfy_postconditions() {
        let a = IntMatrix::from_i64(&[&[3, 6, -3, 0], &[1, 2, 5, 7]]);
        let k = kernel_basis(&a);
        assert_eq!(k.len(), a.cols() - a.rank());
        for v in &k {
            assert!(a.mul_vec(v).is_zero(), "kernel vector not annihilated");
            assert_eq!(gcd_all(v.entries()), bi(1), "kernel vector not primitive");
        }
        // Basis really spans the saturated kernel: the stacked matrix of basis
        // vectors has full rank and its Smith invariants are all 1.
        let stack = IntMatrix::from_rows(&k);
        let snf = smith_normal_form(&stack);
        assert!(snf.invariant_factors().iter().all(|d| d.is_one()));
    }

    #[test]
    fn complete_to_unimodular_2_3_matches_known_witness() {
        let a = complete_to_unimodular(&IntVector::from_i64(&[2, 3])).unwrap();
        assert_eq!(a, IntMatrix::from_i64(&[&[3, -2], &[-1, 1]]));
    }

    #[test]
    fn complete_to_unimodular_fixes_last_axis() {
        let a = complete_to_unimodular(&IntVector::from_i64(&[0, 0, 1])).unwrap();
        assert_eq!(a, IntMatrix::identity(3));
    }

    #[test]
    fn complete_to_unimodular_postconditions() {
        for r in [
            IntVector::from_i64(&[1, 1, 1]),
            IntVector::from_i64(&[5, -3]),
            IntVector::from_i64(&[0, 1, 0, 0]),
            IntVector::from_i64(&[7, 11, 13]),
            IntVector::from_i64(&[-2, 0, 1]),
        ] {
            let a = complete_to_unimodular(&r).unwrap();
            assert_eq!(a.det().unwrap().abs(), bi(1));
            assert_eq!(a.mul_vec(&r), IntVector::unit(r.dim(), r.dim() - 1));
        }
    }

    #[test]
    fn complete_to_unimodular_rejects_imprimitive() {
        let err = complete_to_unimodular(&IntVector::from_i64(&[2, 4])).unwrap_err();
        assert_eq!(err, Error::NotPrimitive { content: bi(2) });
        assert!(complete_to_unimodular(&IntVector::zeros(2)).is_err());
    }

    #[test]
    fn minor_gcd_matches_invariant_products() {
        let a = IntMatrix::from_i64(&[&[2, 4], &[6, 8]]);
        // G_1 = gcd of entries = 2, G_2 = |det| = 8.
        assert_eq!(minor_gcd(&a, 1), bi(2));
        assert_eq!(minor_gcd(&a, 2), bi(8));
        let d = smith_normal_form(&a).invariant_factors();
        assert_eq!(d[0], bi(2));
        assert_eq!((&d[0] * &d[1]).to_i64(), bi(8).to_i64());
    }
}
