//! Exact integer-lattice linear algebra over arbitrary-precision integers:
//! Hermite and Smith normal forms, rank, torsion, saturation, kernels and
//! the diagonal scaling map `e_i ↦ d_i e_i`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::ring::{Grading, IntVector};

/// Dense row-major integer matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from rows of machine integers. All rows must have
    /// length `cols`.
    pub fn from_rows(cols: usize, rows: &[Vec<i64>]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            Error::check_len(cols, r.len())?;
            data.extend(r.iter().map(|&x| BigInt::from(x)));
        }
        Ok(IntMatrix { rows: rows.len(), cols, data })
    }

    pub fn from_big_rows(cols: usize, rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            Error::check_len(cols, r.len())?;
            data.extend(r);
        }
        Ok(IntMatrix { rows: n, cols, data })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vec(&self, i: usize) -> Vec<BigInt> {
        self.row(i).to_vec()
    }

    pub fn to_i64_rows(&self) -> Result<Vec<Vec<i64>>> {
        (0..self.rows).map(|i| self.row(i).iter().map(|x| x.to_i64().ok_or(Error::Overflow)).collect()).collect()
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        Error::check_len(self.cols, other.rows)?;
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let prod = a * &other[(k, j)];
                    out[(i, j)] += prod;
                }
            }
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// `row[dst] += k * row[src]`.
    fn add_row(&mut self, dst: usize, src: usize, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let v = k * &self.data[src * self.cols + j];
            self.data[dst * self.cols + j] += v;
        }
    }

    /// `col[dst] += k * col[src]`.
    fn add_col(&mut self, dst: usize, src: usize, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let v = k * &self.data[i * self.cols + src];
            self.data[i * self.cols + dst] += v;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = &mut self.data[i * self.cols + j];
            *v = -std::mem::take(v);
        }
    }

    fn take_rows(&self, n: usize) -> IntMatrix {
        IntMatrix { rows: n, cols: self.cols, data: self.data[..n * self.cols].to_vec() }
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<String>> =
            (0..self.rows).map(|i| self.row(i).iter().map(|x| x.to_string()).collect()).collect();
        write!(f, "{:?}", rows)
    }
}

/// Row-style Hermite normal form: nonzero rows only, echelon with positive
/// pivots, entries above each pivot reduced into `[0, pivot)`. Unique for
/// the row lattice of `m`.
pub fn hermite_normal_form(m: &IntMatrix) -> IntMatrix {
    let mut a = m.clone();
    let mut pivot_row = 0;
    let mut pivots = Vec::new();
    for col in 0..a.cols {
        if pivot_row == a.rows {
            break;
        }
        loop {
            // smallest nonzero |entry| at or below pivot_row
            let best = (pivot_row..a.rows)
                .filter(|&i| !a[(i, col)].is_zero())
                .min_by(|&i, &j| a[(i, col)].abs().cmp(&a[(j, col)].abs()));
            let Some(best) = best else { break };
            a.swap_rows(pivot_row, best);
            let mut done = true;
            for i in pivot_row + 1..a.rows {
                if a[(i, col)].is_zero() {
                    continue;
                }
                let q = a[(i, col)].div_floor(&a[(pivot_row, col)]);
                a.add_row(i, pivot_row, &-q);
                if !a[(i, col)].is_zero() {
                    done = false;
                }
            }
            if done {
                if a[(pivot_row, col)].is_negative() {
                    a.negate_row(pivot_row);
                }
                pivots.push((pivot_row, col));
                pivot_row += 1;
                break;
            }
        }
    }
    for &(r, c) in &pivots {
        for i in 0..r {
            let q = a[(i, c)].div_floor(&a[(r, c)]);
            a.add_row(i, r, &-q);
        }
    }
    a.take_rows(pivot_row)
}

/// `u * m * v = s` with `u`, `v` unimodular and `s` diagonal with
/// invariant factors `f_1 | f_2 | ...`. `v_inv` is the inverse of `v`.
#[derive(Debug, Clone)]
pub struct SmithForm {
    pub u: IntMatrix,
    pub s: IntMatrix,
    pub v: IntMatrix,
    pub v_inv: IntMatrix,
}

impl SmithForm {
    /// Nonzero diagonal entries.
    pub fn invariants(&self) -> Vec<BigInt> {
        (0..self.s.rows.min(self.s.cols)).map(|i| self.s[(i, i)].clone()).take_while(|x| !x.is_zero()).collect()
    }

    pub fn rank(&self) -> usize {
        self.invariants().len()
    }
}

pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let (rows, cols) = (m.rows, m.cols);
    let mut s = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);
    let mut v_inv = IntMatrix::identity(cols);

    // column operations are mirrored on v (right) and v_inv (left, inverse)
    let col_swap = |s: &mut IntMatrix, v: &mut IntMatrix, vi: &mut IntMatrix, a: usize, b: usize| {
        s.swap_cols(a, b);
        v.swap_cols(a, b);
        vi.swap_rows(a, b);
    };
    let col_add = |s: &mut IntMatrix, v: &mut IntMatrix, vi: &mut IntMatrix, dst: usize, src: usize, k: &BigInt| {
        s.add_col(dst, src, k);
        v.add_col(dst, src, k);
        vi.add_row(src, dst, &-k);
    };

    for t in 0..rows.min(cols) {
        loop {
            let pivot = (t..rows)
                .flat_map(|i| (t..cols).map(move |j| (i, j)))
                .filter(|&(i, j)| !s[(i, j)].is_zero())
                .min_by(|&a, &b| s[a].abs().cmp(&s[b].abs()));
            let Some((pi, pj)) = pivot else {
                return finish(u, s, v, v_inv);
            };
            s.swap_rows(t, pi);
            u.swap_rows(t, pi);
            col_swap(&mut s, &mut v, &mut v_inv, t, pj);

            let mut clean = true;
            for i in t + 1..rows {
                if s[(i, t)].is_zero() {
                    continue;
                }
                let q = s[(i, t)].div_floor(&s[(t, t)]);
                s.add_row(i, t, &-&q);
                u.add_row(i, t, &-q);
                if !s[(i, t)].is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..cols {
                if s[(t, j)].is_zero() {
                    continue;
                }
                let q = s[(t, j)].div_floor(&s[(t, t)]);
                col_add(&mut s, &mut v, &mut v_inv, j, t, &-q);
                if !s[(t, j)].is_zero() {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            // divisibility: pull an offending row into row t and retry
            let offender = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !s[(i, j)].is_multiple_of(&s[(t, t)])));
            match offender {
                Some(i) => {
                    s.add_row(t, i, &BigInt::one());
                    u.add_row(t, i, &BigInt::one());
                }
                None => break,
            }
        }
        if s[(t, t)].is_negative() {
            s.negate_row(t);
            u.negate_row(t);
        }
    }
    finish(u, s, v, v_inv)
}

fn finish(u: IntMatrix, s: IntMatrix, v: IntMatrix, v_inv: IntMatrix) -> SmithForm {
    SmithForm { u, s, v, v_inv }
}

/// Subgroup `L ⊂ Z^s` with cached Hermite basis and Smith invariants.
/// Two lattices are equal iff their Hermite bases are.
#[derive(Clone)]
pub struct Lattice {
    ambient: usize,
    generators: IntMatrix,
    basis: IntMatrix,
    smith: SmithForm,
}

impl Lattice {
    pub fn new(generators: IntMatrix) -> Self {
        let basis = hermite_normal_form(&generators);
        let smith = smith_normal_form(&generators);
        Lattice { ambient: generators.cols, generators, basis, smith }
    }

    pub fn from_rows(ambient: usize, rows: &[Vec<i64>]) -> Result<Self> {
        Ok(Self::new(IntMatrix::from_rows(ambient, rows)?))
    }

    pub fn zero(ambient: usize) -> Self {
        Self::new(IntMatrix::zeros(0, ambient))
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn generators(&self) -> &IntMatrix {
        &self.generators
    }

    /// Hermite basis (rank many rows).
    pub fn basis(&self) -> &IntMatrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Result<Vec<IntVector>> {
        Ok(self.basis.to_i64_rows()?.into_iter().map(IntVector).collect())
    }

    pub fn rank(&self) -> usize {
        self.basis.rows
    }

    pub fn smith(&self) -> &SmithForm {
        &self.smith
    }

    pub fn smith_invariants(&self) -> Vec<BigInt> {
        self.smith.invariants()
    }

    pub fn contains(&self, v: &[i64]) -> Result<bool> {
        Error::check_len(self.ambient, v.len())?;
        let mut rows = self.basis.to_i64_rows()?;
        rows.push(v.to_vec());
        let ext = hermite_normal_form(&IntMatrix::from_rows(self.ambient, &rows)?);
        Ok(ext == self.basis)
    }

    pub fn is_sublattice_of(&self, other: &Lattice) -> Result<bool> {
        for row in self.basis.to_i64_rows()? {
            if !other.contains(&row)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl PartialEq for Lattice {
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.basis == other.basis
    }
}

impl Eq for Lattice {}

impl fmt::Debug for Lattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Lattice(Z^{}, {:?})", self.ambient, self.basis)
    }
}

/// `|T(Z^s/L)|`, the product of the nonzero invariant factors.
pub fn torsion_order(l: &Lattice) -> BigInt {
    l.smith_invariants().into_iter().product()
}

/// True iff `<d, g> = 0` for every generator.
pub fn is_homogeneous(l: &Lattice, d: &Grading) -> Result<bool> {
    Error::check_len(l.ambient, d.len())?;
    let g = &l.generators;
    Ok((0..g.rows).all(|i| {
        let dot: BigInt = g.row(i).iter().zip(d.weights()).map(|(x, &w)| x * w).sum();
        dot.is_zero()
    }))
}

/// Image of `L` under `e_i ↦ d_i e_i`.
pub fn homogenize_lattice(l: &Lattice, d: &Grading) -> Result<Lattice> {
    Error::check_len(l.ambient, d.len())?;
    let mut g = l.generators.clone();
    for i in 0..g.rows {
        for (j, &w) in d.weights().iter().enumerate() {
            g[(i, j)] *= w;
        }
    }
    Ok(Lattice::new(g))
}

/// `(L ⊗ Q) ∩ Z^s`: the rows of `V^{-1}` paired with nonzero invariants.
pub fn saturate_lattice(l: &Lattice) -> Lattice {
    let r = l.smith.rank();
    Lattice::new(l.smith.v_inv.take_rows(r))
}

/// `ker_Z(A) = {x : A x = 0}`, read off the trailing columns of `V` in the
/// Smith form of `A`. Always saturated.
pub fn kernel_lattice(a: &IntMatrix) -> Lattice {
    let snf = smith_normal_form(a);
    let r = snf.rank();
    let vt = snf.v.transpose();
    let rows: Vec<Vec<BigInt>> = (r..a.cols).map(|j| vt.row_vec(j)).collect();
    Lattice::new(IntMatrix::from_big_rows(a.cols, rows).expect("kernel rows have ambient length"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(cols: usize, rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_rows(cols, &rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    fn lat(cols: usize, rows: &[&[i64]]) -> Lattice {
        Lattice::new(mat(cols, rows))
    }

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn hnf_examples() {
        // [[1,3],[0,2]] and [[1,1],[0,2]] span the same lattice; the reduced form is the latter
        let h = hermite_normal_form(&mat(2, &[&[2, 4], &[1, 3]]));
        assert_eq!(h, mat(2, &[&[1, 1], &[0, 2]]));
        assert_eq!(hermite_normal_form(&mat(2, &[&[1, 3], &[0, 2]])), h);
        assert_eq!(hermite_normal_form(&IntMatrix::identity(3)), IntMatrix::identity(3));
        let z = hermite_normal_form(&mat(2, &[&[0, 0]]));
        assert_eq!(z.rows(), 0);
    }

    #[test]
    fn snf_examples() {
        assert_eq!(smith_normal_form(&mat(2, &[&[3, -2]])).invariants(), big(&[1]));
        assert_eq!(smith_normal_form(&mat(2, &[&[2, 0], &[0, 2]])).invariants(), big(&[2, 2]));
        assert_eq!(smith_normal_form(&mat(2, &[&[2, -2]])).invariants(), big(&[2]));
        assert_eq!(smith_normal_form(&mat(2, &[&[2, 4], &[6, 8]])).invariants(), big(&[2, 4]));
    }

    #[test]
    fn snf_transforms_are_consistent() {
        let m = mat(3, &[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]);
        let f = smith_normal_form(&m);
        assert_eq!(f.u.mul(&m).unwrap().mul(&f.v).unwrap(), f.s);
        assert_eq!(f.v.mul(&f.v_inv).unwrap(), IntMatrix::identity(3));
        assert_eq!(f.invariants(), big(&[2, 6, 12]));
    }

    #[test]
    fn torsion_examples() {
        assert_eq!(torsion_order(&lat(2, &[&[3, -2]])), BigInt::from(1));
        assert_eq!(torsion_order(&lat(2, &[&[2, -2]])), BigInt::from(2));
        assert_eq!(torsion_order(&Lattice::zero(2)), BigInt::from(1));
    }

    #[test]
    fn homogeneity_examples() {
        let g23 = Grading::new(vec![2, 3]).unwrap();
        let g11 = Grading::standard(2);
        assert!(is_homogeneous(&lat(2, &[&[3, -2]]), &g23).unwrap());
        assert!(is_homogeneous(&lat(2, &[&[1, -1]]), &g11).unwrap());
        assert!(!is_homogeneous(&lat(2, &[&[1, 0]]), &g11).unwrap());
    }

    #[test]
    fn homogenize_examples() {
        let g23 = Grading::new(vec![2, 3]).unwrap();
        assert_eq!(homogenize_lattice(&lat(2, &[&[3, -2]]), &g23).unwrap(), lat(2, &[&[6, -6]]));
        let l = lat(3, &[&[1, 2, -3], &[0, 4, -4]]);
        assert_eq!(homogenize_lattice(&l, &Grading::standard(3)).unwrap(), l);
        let g222 = Grading::new(vec![2, 2, 2]).unwrap();
        assert_eq!(homogenize_lattice(&lat(3, &[&[1, 1, -2]]), &g222).unwrap(), lat(3, &[&[2, 2, -4]]));
    }

    #[test]
    fn saturate_examples() {
        assert_eq!(saturate_lattice(&lat(2, &[&[2, -2]])), lat(2, &[&[1, -1]]));
        assert_eq!(saturate_lattice(&lat(2, &[&[3, -2]])), lat(2, &[&[3, -2]]));
        assert_eq!(saturate_lattice(&Lattice::zero(3)), Lattice::zero(3));
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(kernel_lattice(&mat(2, &[&[2, 3]])), lat(2, &[&[3, -2]]));
        assert_eq!(kernel_lattice(&IntMatrix::identity(2)), Lattice::zero(2));
        let k = kernel_lattice(&mat(3, &[&[1, 1, 1]]));
        assert_eq!(k.rank(), 2);
        assert!(k.contains(&[1, -1, 0]).unwrap());
        assert!(k.contains(&[0, 1, -1]).unwrap());
        assert_eq!(k, lat(3, &[&[1, -1, 0], &[0, 1, -1]]));
    }

    #[test]
    fn membership() {
        let l = lat(2, &[&[2, 4], &[1, 3]]);
        assert!(l.contains(&[1, 1]).unwrap());
        assert!(!l.contains(&[0, 1]).unwrap());
    }

    /// Fraction-free determinant, independent of the normal-form code.
    fn det(mut m: Vec<Vec<BigInt>>) -> BigInt {
        let n = m.len();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            if m[k][k].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                    return BigInt::zero();
                };
                m.swap(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                    m[i][j] = v / &prev;
                }
            }
            prev = m[k][k].clone();
        }
        sign * m[n - 1][n - 1].clone()
    }

    fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
        if k == 0 {
            return vec![vec![]];
        }
        if n < k {
            return vec![];
        }
        let mut out = combinations(n - 1, k);
        for mut c in combinations(n - 1, k - 1) {
            c.push(n - 1);
            out.push(c);
        }
        out
    }

    /// gcd of all maximal minors of the basis matrix (rank r).
    pub(crate) fn minor_gcd(l: &Lattice) -> BigInt {
        let b = l.basis();
        let r = b.rows();
        let mut g = BigInt::zero();
        for cols in combinations(b.cols(), r) {
            let m: Vec<Vec<BigInt>> = (0..r).map(|i| cols.iter().map(|&j| b[(i, j)].clone()).collect()).collect();
            g = g.gcd(&det(m));
        }
        g
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn small_matrix() -> impl Strategy<Value = (usize, Vec<Vec<i64>>)> {
            (1usize..=4, 1usize..=4).prop_flat_map(|(s, m)| {
                (Just(s), proptest::collection::vec(proptest::collection::vec(-3i64..=3, s), m))
            })
        }

        proptest! {
            #[test]
            fn hnf_idempotent_and_lattice_preserving((s, rows) in small_matrix()) {
                let m = IntMatrix::from_rows(s, &rows).unwrap();
                let h = hermite_normal_form(&m);
                prop_assert_eq!(hermite_normal_form(&h), h.clone());
                let l = Lattice::new(m);
                let lh = Lattice::new(h.clone());
                prop_assert!(l.is_sublattice_of(&lh).unwrap());
                prop_assert!(lh.is_sublattice_of(&l).unwrap());
                for r in &rows {
                    prop_assert!(lh.contains(r).unwrap());
                }
            }

            #[test]
            fn snf_factorization((s, rows) in small_matrix()) {
                let m = IntMatrix::from_rows(s, &rows).unwrap();
                let f = smith_normal_form(&m);
                prop_assert_eq!(f.u.mul(&m).unwrap().mul(&f.v).unwrap(), f.s.clone());
                prop_assert_eq!(f.v.mul(&f.v_inv).unwrap(), IntMatrix::identity(s));
                prop_assert_eq!(det(f.u.to_i64_rows().unwrap().iter().map(|r| big(r)).collect()).abs(), BigInt::one());
                let inv = f.invariants();
                for w in inv.windows(2) {
                    prop_assert!(w[1].is_multiple_of(&w[0]));
                }
                for i in 0..f.s.rows() {
                    for j in 0..f.s.cols() {
                        if i != j { prop_assert!(f.s[(i, j)].is_zero()); }
                    }
                }
                prop_assert_eq!(inv.len(), hermite_normal_form(&m).rows());
            }

            #[test]
            fn saturation_properties((s, rows) in small_matrix()) {
                let l = Lattice::from_rows(s, &rows).unwrap();
                let sat = saturate_lattice(&l);
                prop_assert_eq!(saturate_lattice(&sat), sat.clone());
                prop_assert!(l.is_sublattice_of(&sat).unwrap());
                prop_assert_eq!(sat.rank(), l.rank());
                prop_assert_eq!(torsion_order(&sat), BigInt::one());
            }

            #[test]
            fn torsion_is_minor_gcd((s, rows) in small_matrix()) {
                let l = Lattice::from_rows(s, &rows).unwrap();
                if l.rank() > 0 {
                    prop_assert_eq!(torsion_order(&l), minor_gcd(&l));
                }
            }

            #[test]
            fn kernel_annihilates((s, rows) in small_matrix()) {
                let a = IntMatrix::from_rows(s, &rows).unwrap();
                let k = kernel_lattice(&a);
                prop_assert_eq!(k.rank() + smith_normal_form(&a).rank(), s);
                prop_assert_eq!(torsion_order(&k), BigInt::one());
                let prod = a.mul(&k.basis().transpose()).unwrap();
                prop_assert!(prod.is_zero());
            }
        }
    }
}
