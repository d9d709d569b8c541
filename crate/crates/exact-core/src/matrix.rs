//! Square integer matrices with exact determinant, unimodular inverse,
//! integer powers (negative exponents included) and characteristic
//! polynomials. Dimensions stay small (3 for the triangle, up to ~8 for the
//! simplex generalization), so the simple exact algorithms are the right ones.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::Mul;

use crate::error::CoreError;
use crate::poly::IntPolynomial;
use crate::rational::Rational;

/// Row-major square matrix of arbitrary-precision integers.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    dim: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zero(dim: usize) -> Self {
        IntMatrix {
            dim,
            data: vec![BigInt::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zero(dim);
        for i in 0..dim {
            m.set(i, i, BigInt::one());
        }
        m
    }

    /// Builds from rows of machine integers; rows must be square.
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let dim = rows.len();
        assert!(rows.iter().all(|r| r.len() == dim), "matrix must be square");
        let data = rows
            .iter()
            .flat_map(|r| r.iter().map(|&x| BigInt::from(x)))
            .collect();
        IntMatrix { dim, data }
    }

    pub fn from_bigint_rows(rows: Vec<Vec<BigInt>>) -> Self {
        let dim = rows.len();
        assert!(rows.iter().all(|r| r.len() == dim), "matrix must be square");
        IntMatrix {
            dim,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Upper-triangular all-ones matrix; its columns are the cone vertices
    /// v_1, ..., v_d over the simplex, so this is the change-of-basis matrix
    /// from simplex coordinates to the standard basis.
    pub fn upper_ones(dim: usize) -> Self {
        let mut m = Self::zero(dim);
        for i in 0..dim {
            for j in i..dim {
                m.set(i, j, BigInt::one());
            }
        }
        m
    }

    /// Lower-triangular all-ones matrix (the transpose of `upper_ones`).
    pub fn lower_ones(dim: usize) -> Self {
        Self::upper_ones(dim).transpose()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.dim + j] = v;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.dim..(i + 1) * self.dim]
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.dim).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut m = Self::zero(self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                m.set(j, i, self.get(i, j).clone());
            }
        }
        m
    }

    pub fn trace(&self) -> BigInt {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.dim)
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> BigInt {
        let n = self.dim;
        if n == 0 {
            return BigInt::one();
        }
        let mut m = self.data.clone();
        let at = |m: &Vec<BigInt>, i: usize, j: usize| m[i * n + j].clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if at(&m, k, k).is_zero() {
                let swap = (k + 1..n).find(|&i| !at(&m, i, k).is_zero());
                match swap {
                    None => return BigInt::zero(),
                    Some(i) => {
                        for j in 0..n {
                            m.swap(k * n + j, i * n + j);
                        }
                        sign = -sign;
                    }
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (at(&m, i, j) * at(&m, k, k) - at(&m, i, k) * at(&m, k, j)) / &prev;
                    m[i * n + j] = v;
                }
                m[i * n + k] = BigInt::zero();
            }
            prev = at(&m, k, k);
        }
        sign * at(&m, n - 1, n - 1)
    }

    pub fn is_unimodular(&self) -> bool {
        self.det().abs().is_one()
    }

    fn minor(&self, skip_i: usize, skip_j: usize) -> IntMatrix {
        let n = self.dim;
        let mut rows = Vec::with_capacity(n - 1);
        for i in 0..n {
            if i == skip_i {
                continue;
            }
            let mut row = Vec::with_capacity(n - 1);
            for j in 0..n {
                if j == skip_j {
                    continue;
                }
                row.push(self.get(i, j).clone());
            }
            rows.push(row);
        }
        IntMatrix::from_bigint_rows(rows)
    }

    /// Exact inverse of a unimodular matrix (adjugate divided by det = ±1).
    pub fn inverse(&self) -> Result<IntMatrix, CoreError> {
        let d = self.det();
        if !d.abs().is_one() {
            return Err(CoreError::NonUnimodular(d.to_string()));
        }
        let n = self.dim;
        let mut inv = IntMatrix::zero(n);
        for i in 0..n {
            for j in 0..n {
                let mut c = self.minor(j, i).det();
                if (i + j) % 2 == 1 {
                    c = -c;
                }
                inv.set(i, j, c * &d); // dividing by det = ±1 is multiplying by it
            }
        }
        Ok(inv)
    }

    /// Integer power; negative exponents require |det| = 1.
    pub fn pow(&self, e: i64) -> Result<IntMatrix, CoreError> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut result = IntMatrix::identity(self.dim);
        let mut acc = base;
        let mut k = e.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &acc;
            }
            acc = &acc * &acc;
            k >>= 1;
        }
        Ok(result)
    }

    /// Characteristic polynomial det(M - lambda I), exact, via the
    /// Faddeev-LeVerrier recurrence (the intermediate divisions are exact
    /// over the integers).
    pub fn char_poly(&self) -> IntPolynomial {
        let n = self.dim;
        // det(lambda I - M) = lambda^n + c1 lambda^{n-1} + ... + cn
        let mut cs = vec![BigInt::one()];
        let mut nk = self.clone();
        let mut c = -nk.trace();
        cs.push(c.clone());
        for k in 2..=n {
            let mut shifted = nk.clone();
            for i in 0..n {
                let v = shifted.get(i, i) + &c;
                shifted.set(i, i, v);
            }
            nk = self * &shifted;
            let t = -nk.trace();
            let kk = BigInt::from(k);
            debug_assert!((&t % &kk).is_zero());
            c = t / kk;
            cs.push(c.clone());
        }
        // cs = [1, c1, ..., cn] highest degree first; flip to lowest-first
        cs.reverse();
        let monic = IntPolynomial::new(cs);
        // det(M - lambda I) = (-1)^n det(lambda I - M)
        if n % 2 == 1 {
            monic.neg()
        } else {
            monic
        }
    }

    /// Applies the matrix to a rational row vector on the right: row * M.
    pub fn apply_row(&self, row: &[Rational]) -> Vec<Rational> {
        assert_eq!(row.len(), self.dim);
        (0..self.dim)
            .map(|j| {
                let mut acc = Rational::zero();
                for (i, r) in row.iter().enumerate() {
                    acc += r * Rational::from(self.get(i, j).clone());
                }
                acc
            })
            .collect()
    }

    pub fn rows_i64(&self) -> Option<Vec<Vec<i64>>> {
        let mut out = Vec::with_capacity(self.dim);
        for i in 0..self.dim {
            let mut row = Vec::with_capacity(self.dim);
            for j in 0..self.dim {
                row.push(i64::try_from(self.get(i, j)).ok()?);
            }
            out.push(row);
        }
        Some(out)
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;
    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch in matrix product");
        let n = self.dim;
        let mut out = IntMatrix::zero(n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = BigInt::zero();
                for k in 0..n {
                    acc += self.get(i, k) * rhs.get(k, j);
                }
                out.set(i, j, acc);
            }
        }
        out
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.dim {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for j in 0..self.dim {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a0() -> IntMatrix {
        IntMatrix::from_rows(&[vec![0, 0, 1], vec![1, 0, 0], vec![0, 1, 1]])
    }
    fn a1() -> IntMatrix {
        IntMatrix::from_rows(&[vec![1, 0, 1], vec![0, 1, 0], vec![0, 0, 1]])
    }

    #[test]
    fn determinants() {
        assert_eq!(a0().det(), BigInt::from(1));
        assert_eq!(a1().det(), BigInt::from(1));
        assert_eq!(IntMatrix::upper_ones(3).det(), BigInt::from(1));
        let singular = IntMatrix::from_rows(&[vec![1, 2], vec![2, 4]]);
        assert_eq!(singular.det(), BigInt::zero());
    }

    #[test]
    fn inverse_roundtrip() {
        let m = &(&a0() * &a1()) * &a0();
        let inv = m.inverse().unwrap();
        assert!((&m * &inv).is_identity());
        let bad = IntMatrix::from_rows(&[vec![2, 0], vec![0, 1]]);
        assert!(matches!(bad.inverse(), Err(CoreError::NonUnimodular(_))));
    }

    #[test]
    fn powers() {
        // A1^3 accumulates 3 in the top-right entry.
        let p = a1().pow(3).unwrap();
        assert_eq!(
            p,
            IntMatrix::from_rows(&[vec![1, 0, 3], vec![0, 1, 0], vec![0, 0, 1]])
        );
        let q = a1().pow(-3).unwrap();
        assert!((&p * &q).is_identity());
    }

    #[test]
    fn map_form_matrix_for_triangle_function() {
        // (B A0^-1 A1^-k B^-1)^T = [[0,0,1],[1,0,-1],[0,1,-k]]
        let b = IntMatrix::upper_ones(3);
        for k in 0..5i64 {
            let m = &(&(&b * &a0().inverse().unwrap()) * &a1().pow(-k).unwrap())
                * &b.inverse().unwrap();
            let t = m.transpose();
            assert_eq!(
                t,
                IntMatrix::from_rows(&[vec![0, 0, 1], vec![1, 0, -1], vec![0, 1, -k]])
            );
        }
    }

    #[test]
    fn b_times_a0_permutes_vertices() {
        // columns of B*A0 are v2, v3, v1+v3 for the columns v_i of B,
        // whichever all-ones triangle matrix B is.
        for b in [IntMatrix::upper_ones(3), IntMatrix::lower_ones(3)] {
            let prod = &b * &a0();
            assert_eq!(prod.column(0), b.column(1));
            assert_eq!(prod.column(1), b.column(2));
            let v1v3: Vec<BigInt> = b
                .column(0)
                .iter()
                .zip(b.column(2))
                .map(|(a, c)| a + c)
                .collect();
            assert_eq!(prod.column(2), v1v3);
        }
    }

    #[test]
    fn char_poly_fixtures() {
        // [[0,0,1],[1,0,-B],[0,1,-A]] has char poly -(x^3 + A x^2 + B x - 1).
        for (a, b) in [(0i64, 1i64), (1, 1), (2, 3)] {
            let m = IntMatrix::from_rows(&[vec![0, 0, 1], vec![1, 0, -b], vec![0, 1, -a]]);
            let got = m.char_poly();
            let want = IntPolynomial::from_i64(&[-1, b, a, 1]).neg();
            assert_eq!(got, want);
        }
        // identity: det(I - xI) = (1-x)^3 = -(x-1)^3
        let got = IntMatrix::identity(3).char_poly();
        assert_eq!(got, IntPolynomial::from_i64(&[1, -3, 3, -1]));
    }

    #[test]
    fn char_poly_cofactor_fixture() {
        // Frozen from an independent cofactor expansion of det(M - xI):
        // -x^3 + 8x^2 - 6x + 1.
        let m = IntMatrix::from_rows(&[vec![0, -1, 2], vec![1, 3, -6], vec![-1, -2, 5]]);
        assert_eq!(m.char_poly(), IntPolynomial::from_i64(&[1, -6, 8, -1]));
    }
}
