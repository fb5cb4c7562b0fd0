use std::fmt;

use super::scalar::{FieldSpec, Scalar};
use crate::error::{Error, Result};

pub type Vector = Vec<Scalar>;

/// Dense row-major matrix over a single field.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    field: FieldSpec,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            field,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    pub fn scalar(field: FieldSpec, n: usize, s: &Scalar) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = s.clone();
        }
        m
    }

    /// Builds a matrix from row vectors, coercing every entry into `field`.
    pub fn from_rows(field: FieldSpec, rows: &[Vec<Scalar>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(Error::ShapeMismatch("ragged rows".into()));
            }
            for s in row {
                data.push(field.coerce(s)?);
            }
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            field,
            data,
        })
    }

    pub fn from_ints(field: FieldSpec, rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row.iter().map(|&v| field.int(v)));
        }
        Matrix {
            rows: r,
            cols: c,
            field,
            data,
        }
    }

    pub fn from_fn(
        field: FieldSpec,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Scalar,
    ) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix {
            rows,
            cols,
            field,
            data,
        }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(field: FieldSpec, rows: usize, cols: &[Vector]) -> Self {
        Self::from_fn(field, rows, cols.len(), |i, j| cols[j][i].clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Self::identity(self.field, self.rows)
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && *self == self.transpose()
    }

    pub fn is_skew(&self) -> bool {
        self.is_square() && *self == self.transpose().neg()
    }

    fn check_field(&self, other: &Matrix) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(
                self.field.to_string(),
                other.field.to_string(),
            ));
        }
        Ok(())
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        self.check_field(other)?;
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let idx = i * other.cols + j;
                        out.data[idx] = &out.data[idx] + &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    fn zip(&self, other: &Matrix, f: impl Fn(&Scalar, &Scalar) -> Scalar) -> Result<Matrix> {
        self.check_field(other)?;
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            field: self.field,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| f(a, b))
                .collect(),
        })
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.zip(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.zip(other, |a, b| a - b)
    }

    pub fn neg(&self) -> Matrix {
        self.map(|a| -a)
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        self.map(|a| a * s)
    }

    fn map(&self, f: impl Fn(&Scalar) -> Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            field: self.field,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.field, self.cols, self.rows, |i, j| {
            self.get(j, i).clone()
        })
    }

    /// Commutator `AB - BA`.
    pub fn commutator(&self, other: &Matrix) -> Result<Matrix> {
        self.mul(other)?.sub(&other.mul(self)?)
    }

    pub fn apply(&self, v: &[Scalar]) -> Result<Vector> {
        if v.len() != self.cols {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} applied to length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        let mut out = vec![self.field.zero(); self.rows];
        for (i, o) in out.iter_mut().enumerate() {
            for (j, x) in v.iter().enumerate() {
                let a = self.get(i, j);
                if !a.is_zero() && !x.is_zero() {
                    *o = &*o + &(a * x);
                }
            }
        }
        Ok(out)
    }

    pub fn inverse(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::ShapeMismatch(format!(
                "inverse of {}x{}",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let aug = hstack(self, &Matrix::identity(self.field, n))?;
        let (r, pivots) = rref(&aug);
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::Singular);
        }
        Ok(Matrix::from_fn(self.field, n, n, |i, j| {
            r.get(i, n + j).clone()
        }))
    }

    pub fn rank(&self) -> usize {
        rref(self).1.len()
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// Flattens row-major into a vector.
    pub fn flatten(&self) -> Vector {
        self.data.clone()
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

fn hstack(a: &Matrix, b: &Matrix) -> Result<Matrix> {
    if a.rows != b.rows {
        return Err(Error::ShapeMismatch("row counts differ".into()));
    }
    Ok(Matrix::from_fn(a.field, a.rows, a.cols + b.cols, |i, j| {
        if j < a.cols {
            a.get(i, j).clone()
        } else {
            b.get(i, j - a.cols).clone()
        }
    }))
}

/// Reduced row echelon form and pivot columns.
///
/// Forward elimination is fraction-free (Bareiss): each update
/// `(p*a_ij - a_ik*a_kj) / p_prev` divides exactly, which keeps integer
/// inputs integral until the final normalization.
fn rref(m: &Matrix) -> (Matrix, Vec<usize>) {
    let mut a = m.clone();
    let (rows, cols) = (a.rows, a.cols);
    let field = a.field;
    let mut prev = field.one();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a.get(i, c).is_zero()) else {
            continue;
        };
        if p != r {
            for j in 0..cols {
                a.data.swap(p * cols + j, r * cols + j);
            }
        }
        let piv = a.get(r, c).clone();
        for i in r + 1..rows {
            let f = a.get(i, c).clone();
            for j in c..cols {
                let v = &(&piv * a.get(i, j)) - &(&f * a.get(r, j));
                let v = v.checked_div(&prev).expect("Bareiss pivot is nonzero");
                a.set(i, j, v);
            }
        }
        prev = piv;
        pivots.push(c);
        r += 1;
    }
    for (row, &c) in pivots.iter().enumerate().rev() {
        let inv = a.get(row, c).inv().expect("pivot is nonzero");
        for j in 0..cols {
            let v = a.get(row, j) * &inv;
            a.set(row, j, v);
        }
        for i in 0..row {
            let f = a.get(i, c).clone();
            if f.is_zero() {
                continue;
            }
            for j in 0..cols {
                let v = a.get(i, j) - &(&f * a.get(row, j));
                a.set(i, j, v);
            }
        }
    }
    (a, pivots)
}

/// Solution set of `A X = B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LinearSolution {
    NoSolution,
    Solutions {
        particular: Matrix,
        nullspace: Vec<Matrix>,
    },
}

impl LinearSolution {
    pub fn nullity(&self) -> Option<usize> {
        match self {
            LinearSolution::NoSolution => None,
            LinearSolution::Solutions { nullspace, .. } => Some(nullspace.len()),
        }
    }
}

/// Solves `A X = B` for `X` of shape `a.cols x rhs.cols`. The nullspace basis
/// spans all `X` with `A X = 0`.
pub fn solve_linear(a: &Matrix, rhs: &Matrix) -> Result<LinearSolution> {
    a.check_field(rhs)?;
    if a.rows != rhs.rows {
        return Err(Error::ShapeMismatch(format!(
            "{} equations, {} right-hand rows",
            a.rows, rhs.rows
        )));
    }
    let n = a.cols;
    let k = rhs.cols;
    let field = a.field;
    let (r, pivots) = rref(&hstack(a, rhs)?);
    if pivots.iter().any(|&c| c >= n) {
        return Ok(LinearSolution::NoSolution);
    }
    let mut particular = Matrix::zeros(field, n, k);
    for (row, &c) in pivots.iter().enumerate() {
        for j in 0..k {
            particular.set(c, j, r.get(row, n + j).clone());
        }
    }
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let mut nullspace = Vec::new();
    for &f in &free {
        let mut v = vec![field.zero(); n];
        v[f] = field.one();
        for (row, &c) in pivots.iter().enumerate() {
            v[c] = -r.get(row, f);
        }
        for j in 0..k {
            let mut x = Matrix::zeros(field, n, k);
            for (i, s) in v.iter().enumerate() {
                x.set(i, j, s.clone());
            }
            nullspace.push(x);
        }
    }
    Ok(LinearSolution::Solutions {
        particular,
        nullspace,
    })
}

pub fn mat_mul(a: &Matrix, b: &Matrix) -> Result<Matrix> {
    a.mul(b)
}

pub fn mat_inverse(a: &Matrix) -> Result<Matrix> {
    a.inverse()
}

/// Matrix of the dual map in dual bases.
pub fn transpose_dual(m: &Matrix) -> Matrix {
    m.transpose()
}

pub fn zero_vector(field: FieldSpec, n: usize) -> Vector {
    vec![field.zero(); n]
}

pub fn basis_vector(field: FieldSpec, n: usize, i: usize) -> Vector {
    let mut v = zero_vector(field, n);
    v[i] = field.one();
    v
}

pub fn vec_add(a: &[Scalar], b: &[Scalar]) -> Vector {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vec_sub(a: &[Scalar], b: &[Scalar]) -> Vector {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vec_scale(s: &Scalar, a: &[Scalar]) -> Vector {
    a.iter().map(|x| s * x).collect()
}

pub fn vec_is_zero(a: &[Scalar]) -> bool {
    a.iter().all(Scalar::is_zero)
}

pub fn vec_add_assign(acc: &mut [Scalar], b: &[Scalar]) {
    for (x, y) in acc.iter_mut().zip(b) {
        if !y.is_zero() {
            *x += y;
        }
    }
}

/// `acc += s * b`.
pub fn vec_axpy(acc: &mut [Scalar], s: &Scalar, b: &[Scalar]) {
    if s.is_zero() {
        return;
    }
    for (x, y) in acc.iter_mut().zip(b) {
        if !y.is_zero() {
            *x += &(s * y);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn identity_is_neutral() {
        let m = Matrix::from_ints(Q, &[&[1, 2], &[3, 4]]);
        assert_eq!(Matrix::identity(Q, 2).mul(&m).unwrap(), m);
    }

    #[test]
    fn square_of_nilpotent_like() {
        let m = Matrix::from_ints(Q, &[&[0, 1], &[0, -1]]);
        assert_eq!(
            m.mul(&m).unwrap(),
            Matrix::from_ints(Q, &[&[0, -1], &[0, 1]])
        );
    }

    #[test]
    fn shape_mismatch() {
        let a = Matrix::zeros(Q, 2, 3);
        let b = Matrix::zeros(Q, 2, 2);
        assert!(matches!(a.mul(&b), Err(Error::ShapeMismatch(_))));
        assert!(matches!(a.inverse(), Err(Error::ShapeMismatch(_))));
    }

    #[test]
    fn inverses() {
        assert_eq!(
            Matrix::identity(Q, 3).inverse().unwrap(),
            Matrix::identity(Q, 3)
        );
        let m = Matrix::from_ints(Q, &[&[1, 1], &[0, 1]]);
        assert_eq!(
            m.inverse().unwrap(),
            Matrix::from_ints(Q, &[&[1, -1], &[0, 1]])
        );
        let s = Matrix::from_ints(Q, &[&[1, 1], &[1, 1]]);
        assert_eq!(s.inverse(), Err(Error::Singular));
        let f5 = FieldSpec::prime(5).unwrap();
        let m = Matrix::from_ints(f5, &[&[2, 1], &[1, 4]]);
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).unwrap().is_identity());
    }

    #[test]
    fn rational_inverse_round_trip() {
        let m = Matrix::from_ints(Q, &[&[2, 7, 1], &[0, 3, 5], &[4, 1, 9]]);
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).unwrap().is_identity());
        assert!(inv.mul(&m).unwrap().is_identity());
    }

    #[test]
    fn solve_unique() {
        let a = Matrix::identity(Q, 2);
        let v = Matrix::from_ints(Q, &[&[3], &[-4]]);
        match solve_linear(&a, &v).unwrap() {
            LinearSolution::Solutions {
                particular,
                nullspace,
            } => {
                assert_eq!(particular, v);
                assert!(nullspace.is_empty());
            }
            LinearSolution::NoSolution => panic!("expected a solution"),
        }
    }

    #[test]
    fn solve_zero_system() {
        let a = Matrix::zeros(Q, 2, 2);
        let b = Matrix::zeros(Q, 2, 2);
        let sol = solve_linear(&a, &b).unwrap();
        assert_eq!(sol.nullity(), Some(4));
        let b = Matrix::from_ints(Q, &[&[1], &[0]]);
        assert_eq!(solve_linear(&a, &b).unwrap(), LinearSolution::NoSolution);
    }

    #[test]
    fn solve_rank_deficient() {
        let a = Matrix::from_ints(Q, &[&[1, 2, 3], &[2, 4, 6]]);
        let b = Matrix::from_ints(Q, &[&[1], &[2]]);
        let LinearSolution::Solutions {
            particular,
            nullspace,
        } = solve_linear(&a, &b).unwrap()
        else {
            panic!("consistent system");
        };
        assert_eq!(nullspace.len(), 2);
        assert_eq!(a.mul(&particular).unwrap(), b);
        for n in &nullspace {
            assert!(a.mul(n).unwrap().is_zero());
        }
    }

    #[test]
    fn dual_of_left_multiplication() {
        let l1 = Matrix::from_ints(Q, &[&[1, 1], &[0, 0]]);
        assert_eq!(
            transpose_dual(&l1),
            Matrix::from_ints(Q, &[&[1, 0], &[1, 0]])
        );
    }
}
