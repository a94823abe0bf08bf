use std::fmt;

use crate::exactnum::Ring;

use super::MatrixError;

/// A square upper-triangular matrix over a ring `S`.
///
/// Entries below the main diagonal are zero by construction; every
/// operation here preserves that.
#[derive(Clone, PartialEq)]
pub struct TriMatrix<S> {
    size: usize,
    entries: Vec<S>,
}

impl<S: Ring> TriMatrix<S> {
    pub fn zero(size: usize) -> Self {
        TriMatrix { size, entries: vec![S::zero(); size * size] }
    }

    pub fn identity(size: usize) -> Self {
        Self::scalar(size, S::one())
    }

    pub fn scalar(size: usize, s: S) -> Self {
        let mut m = Self::zero(size);
        for i in 0..size {
            m.entries[i * size + i] = s.clone();
        }
        m
    }

    pub fn diagonal(diag: Vec<S>) -> Self {
        let size = diag.len();
        let mut m = Self::zero(size);
        for (i, d) in diag.into_iter().enumerate() {
            m.entries[i * size + i] = d;
        }
        m
    }

    /// Build from an entry function evaluated on and above the diagonal.
    pub fn from_upper_fn(size: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        let mut m = Self::zero(size);
        for i in 0..size {
            for j in i..size {
                m.entries[i * size + j] = f(i, j);
            }
        }
        m
    }

    /// Build from dense rows, rejecting non-square or non-triangular input.
    pub fn from_rows(rows: Vec<Vec<S>>) -> Result<Self, MatrixError> {
        let size = rows.len();
        let mut entries = Vec::with_capacity(size * size);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != size {
                return Err(MatrixError::NotSquare { rows: size, row: i, len: row.len() });
            }
            for (j, v) in row.into_iter().enumerate() {
                if j < i && !v.is_zero() {
                    return Err(MatrixError::NotTriangular { row: i + 1, col: j + 1 });
                }
                entries.push(if j < i { S::zero() } else { v });
            }
        }
        Ok(TriMatrix { size, entries })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// Entry at zero-based `(row, col)`.
    pub fn get(&self, row: usize, col: usize) -> &S {
        &self.entries[row * self.size + col]
    }

    /// Set an entry on or above the diagonal.
    pub fn set(&mut self, row: usize, col: usize, value: S) {
        assert!(col >= row, "write below the diagonal at ({row}, {col})");
        self.entries[row * self.size + col] = value;
    }

    /// Upper-right corner entry `(1, p)`.
    pub fn corner(&self) -> &S {
        self.get(0, self.size - 1)
    }

    pub fn rows(&self) -> Vec<Vec<S>> {
        (0..self.size)
            .map(|i| self.entries[i * self.size..(i + 1) * self.size].to_vec())
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.size)
    }

    /// True iff all entries on diagonals `0..below` vanish.
    pub fn vanishes_below_band(&self, band: usize) -> bool {
        (0..self.size).all(|i| (i..self.size.min(i + band)).all(|j| self.get(i, j).is_zero()))
    }

    pub fn is_strictly_upper(&self) -> bool {
        self.vanishes_below_band(1)
    }

    fn check_size(&self, other: &Self) -> Result<(), MatrixError> {
        if self.size == other.size {
            Ok(())
        } else {
            Err(MatrixError::SizeMismatch { left: self.size, right: other.size })
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, MatrixError> {
        self.check_size(other)?;
        Ok(self.add(other))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, MatrixError> {
        self.check_size(other)?;
        Ok(self.mul(other))
    }

    /// Sum; panics on a size mismatch (use [`TriMatrix::try_add`] otherwise).
    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.size, other.size, "matrix size mismatch");
        TriMatrix {
            size: self.size,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a.add_ref(b)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.size, other.size, "matrix size mismatch");
        TriMatrix {
            size: self.size,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a.sub_ref(b)).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        TriMatrix { size: self.size, entries: self.entries.iter().map(|a| a.neg_ref()).collect() }
    }

    /// Product; panics on a size mismatch (use [`TriMatrix::try_mul`] otherwise).
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.size, other.size, "matrix size mismatch");
        let n = self.size;
        let mut out = Self::zero(n);
        for i in 0..n {
            for k in i..n {
                let a = &self.entries[i * n + k];
                if a.is_zero() {
                    continue;
                }
                for j in k..n {
                    let b = &other.entries[k * n + j];
                    if b.is_zero() {
                        continue;
                    }
                    out.entries[i * n + j].add_assign_ref(&a.mul_ref(b));
                }
            }
        }
        out
    }

    /// Left multiplication of every entry by a scalar.
    pub fn scale(&self, s: &S) -> Self {
        TriMatrix { size: self.size, entries: self.entries.iter().map(|a| s.mul_ref(a)).collect() }
    }

    /// `[A, B] = AB − BA`.
    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::identity(self.size);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn map<T: Ring>(&self, mut f: impl FnMut(&S) -> T) -> TriMatrix<T> {
        TriMatrix { size: self.size, entries: self.entries.iter().map(&mut f).collect() }
    }

    /// Entries in row-major order (including the zeros below the diagonal).
    pub fn entries(&self) -> &[S] {
        &self.entries
    }
}

impl<S: Ring + fmt::Display> TriMatrix<S> {
    /// Machine format: the size, then every entry row-major, one per line.
    pub fn to_machine(&self) -> String {
        let mut out = format!("{}\n", self.size);
        for e in &self.entries {
            out.push_str(&e.to_string());
            out.push('\n');
        }
        out
    }
}

impl<S: Ring + fmt::Display> fmt::Display for TriMatrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.size {
            let row: Vec<String> = (0..self.size).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl<S: Ring> fmt::Debug for TriMatrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.rows()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::Rational;

    fn q(n: i64) -> Rational {
        Rational::integer(n)
    }

    #[test]
    fn rejects_lower_entries() {
        let r = TriMatrix::from_rows(vec![vec![q(1), q(2)], vec![q(3), q(4)]]);
        assert_eq!(r.unwrap_err(), MatrixError::NotTriangular { row: 2, col: 1 });
        let r = TriMatrix::from_rows(vec![vec![q(1), q(2)], vec![q(0)]]);
        assert!(matches!(r, Err(MatrixError::NotSquare { .. })));
    }

    #[test]
    fn product_and_commutator() {
        let a = TriMatrix::from_rows(vec![vec![q(1), q(2)], vec![q(0), q(3)]]).unwrap();
        let b = TriMatrix::from_rows(vec![vec![q(0), q(1)], vec![q(0), q(0)]]).unwrap();
        let ab = a.mul(&b);
        assert_eq!(ab.rows(), vec![vec![q(0), q(1)], vec![q(0), q(0)]]);
        let c = a.commutator(&b);
        assert_eq!(c.rows(), vec![vec![q(0), q(-2)], vec![q(0), q(0)]]);
        assert!(c.is_strictly_upper());
        assert!(a.commutator(&a).is_zero());
        assert!(a.try_mul(&TriMatrix::identity(3)).is_err());
    }

    #[test]
    fn nilpotent_jordan_block() {
        let j = TriMatrix::<Rational>::from_upper_fn(4, |i, k| if k == i + 1 { q(1) } else { q(0) });
        assert!(!j.pow(3).is_zero());
        assert!(j.pow(4).is_zero());
        assert!(j.pow(0).is_identity());
    }
}
