use std::collections::BTreeMap;

use crate::error::{Error, Result};

use super::echelon::Echelon;
use super::scalar::{Domain, Scalar};
use super::subspace::Subspace;

/// A coordinate vector with sorted, nonzero entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SparseVec {
    dim: usize,
    entries: Vec<(usize, Scalar)>,
}

impl SparseVec {
    pub fn zero(dim: usize) -> Self {
        SparseVec {
            dim,
            entries: Vec::new(),
        }
    }

    pub fn unit(dim: usize, index: usize, domain: Domain) -> Self {
        assert!(index < dim);
        SparseVec {
            dim,
            entries: vec![(index, domain.one())],
        }
    }

    /// Builds a vector from unordered `(index, value)` pairs, summing repeats.
    pub fn from_pairs(dim: usize, pairs: impl IntoIterator<Item = (usize, Scalar)>) -> Self {
        let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
        for (i, v) in pairs {
            assert!(i < dim, "coordinate {i} out of range {dim}");
            accumulate(&mut acc, i, v);
        }
        SparseVec {
            dim,
            entries: acc.into_iter().filter(|(_, v)| !v.is_zero()).collect(),
        }
    }

    pub fn from_dense(values: &[Scalar]) -> Self {
        SparseVec {
            dim: values.len(),
            entries: values
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(i, v)| (i, v.clone()))
                .collect(),
        }
    }

    pub fn to_dense(&self, domain: Domain) -> Vec<Scalar> {
        let mut out = vec![domain.zero(); self.dim];
        for (i, v) in &self.entries {
            out[*i] = v.clone();
        }
        out
    }

    pub(crate) fn from_sorted_unchecked(dim: usize, entries: Vec<(usize, Scalar)>) -> Self {
        debug_assert!(entries.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(entries.iter().all(|(_, v)| !v.is_zero()));
        SparseVec { dim, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[(usize, Scalar)] {
        &self.entries
    }

    pub fn get(&self, index: usize) -> Option<&Scalar> {
        self.entries
            .binary_search_by_key(&index, |(i, _)| *i)
            .ok()
            .map(|pos| &self.entries[pos].1)
    }

    pub fn leading(&self) -> Option<&(usize, Scalar)> {
        self.entries.first()
    }

    pub fn scale(&self, c: &Scalar) -> SparseVec {
        if c.is_zero() {
            return SparseVec::zero(self.dim);
        }
        SparseVec {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .map(|(i, v)| (*i, v * c))
                .filter(|(_, v)| !v.is_zero())
                .collect(),
        }
    }

    /// `self + c * other`, merging the sorted entry lists.
    pub fn add_scaled(&self, c: &Scalar, other: &SparseVec) -> SparseVec {
        assert_eq!(self.dim, other.dim, "vector dimensions differ");
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut a, mut b) = (self.entries.iter().peekable(), other.entries.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some((i, x)), Some((j, y))) => {
                    if i < j {
                        out.push((*i, x.clone()));
                        a.next();
                    } else if j < i {
                        let v = c * y;
                        if !v.is_zero() {
                            out.push((*j, v));
                        }
                        b.next();
                    } else {
                        let v = x + &(c * y);
                        if !v.is_zero() {
                            out.push((*i, v));
                        }
                        a.next();
                        b.next();
                    }
                }
                (Some((i, x)), None) => {
                    out.push((*i, x.clone()));
                    a.next();
                }
                (None, Some((j, y))) => {
                    let v = c * y;
                    if !v.is_zero() {
                        out.push((*j, v));
                    }
                    b.next();
                }
                (None, None) => break,
            }
        }
        SparseVec {
            dim: self.dim,
            entries: out,
        }
    }

    pub fn add(&self, other: &SparseVec) -> SparseVec {
        match other.entries.first() {
            None => self.clone(),
            Some((_, v)) => self.add_scaled(&v.domain().one(), other),
        }
    }

    pub fn sub(&self, other: &SparseVec) -> SparseVec {
        match other.entries.first() {
            None => self.clone(),
            Some((_, v)) => self.add_scaled(&-v.domain().one(), other),
        }
    }

    pub fn neg(&self) -> SparseVec {
        SparseVec {
            dim: self.dim,
            entries: self.entries.iter().map(|(i, v)| (*i, -v)).collect(),
        }
    }

    /// Applies `f` to every coordinate, dropping zeros; `f` may change domain.
    pub fn map_values(&self, mut f: impl FnMut(&Scalar) -> Scalar) -> SparseVec {
        SparseVec {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .map(|(i, v)| (*i, f(v)))
                .filter(|(_, v)| !v.is_zero())
                .collect(),
        }
    }

    pub fn try_map_values(
        &self,
        mut f: impl FnMut(usize, &Scalar) -> Result<Scalar>,
    ) -> Result<SparseVec> {
        let mut entries = Vec::with_capacity(self.entries.len());
        for (i, v) in &self.entries {
            let w = f(*i, v)?;
            if !w.is_zero() {
                entries.push((*i, w));
            }
        }
        Ok(SparseVec {
            dim: self.dim,
            entries,
        })
    }
}

fn accumulate(acc: &mut BTreeMap<usize, Scalar>, key: usize, value: Scalar) {
    use std::collections::btree_map::Entry;
    match acc.entry(key) {
        Entry::Vacant(e) => {
            e.insert(value);
        }
        Entry::Occupied(mut e) => {
            let s = e.get() + &value;
            *e.get_mut() = s;
        }
    }
}

/// A sparse matrix over one scalar domain, stored column by column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    domain: Domain,
    columns: Vec<SparseVec>,
}

/// Output of [`SparseMatrix::rank_kernel_image`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankKernelImage {
    pub rank: usize,
    pub kernel: Subspace,
    pub image: Subspace,
}

impl SparseMatrix {
    pub fn zero(rows: usize, cols: usize, domain: Domain) -> Self {
        SparseMatrix {
            rows,
            cols,
            domain,
            columns: vec![SparseVec::zero(rows); cols],
        }
    }

    pub fn identity(n: usize, domain: Domain) -> Self {
        SparseMatrix {
            rows: n,
            cols: n,
            domain,
            columns: (0..n).map(|i| SparseVec::unit(n, i, domain)).collect(),
        }
    }

    /// Duplicate `(row, col)` keys are summed; zero results are dropped.
    pub fn from_triplets(
        rows: usize,
        cols: usize,
        domain: Domain,
        triplets: impl IntoIterator<Item = (usize, usize, Scalar)>,
    ) -> Result<Self> {
        let mut per_col: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); cols];
        for (r, c, v) in triplets {
            if r >= rows || c >= cols {
                return Err(Error::DimensionMismatch(format!(
                    "entry ({r}, {c}) outside {rows}x{cols}"
                )));
            }
            if v.domain() != domain {
                return Err(Error::DomainMismatch(domain.label(), v.domain().label()));
            }
            per_col[c].push((r, v));
        }
        let columns = per_col
            .into_iter()
            .map(|entries| SparseVec::from_pairs(rows, entries))
            .collect();
        Ok(SparseMatrix {
            rows,
            cols,
            domain,
            columns,
        })
    }

    pub fn from_columns(rows: usize, domain: Domain, columns: Vec<SparseVec>) -> Result<Self> {
        for c in &columns {
            if c.dim() != rows {
                return Err(Error::DimensionMismatch(format!(
                    "column of dimension {} in a matrix with {rows} rows",
                    c.dim()
                )));
            }
            if let Some((_, v)) = c.leading() {
                if v.domain() != domain {
                    return Err(Error::DomainMismatch(domain.label(), v.domain().label()));
                }
            }
        }
        Ok(SparseMatrix {
            rows,
            cols: columns.len(),
            domain,
            columns,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn column(&self, c: usize) -> &SparseVec {
        &self.columns[c]
    }

    pub fn columns(&self) -> &[SparseVec] {
        &self.columns
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(SparseVec::nnz).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(SparseVec::is_zero)
    }

    /// `(row, col, value)` triples in column-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> {
        self.columns
            .iter()
            .enumerate()
            .flat_map(|(c, col)| col.entries().iter().map(move |(r, v)| (*r, c, v)))
    }

    pub fn get(&self, row: usize, col: usize) -> Scalar {
        self.columns[col]
            .get(row)
            .cloned()
            .unwrap_or_else(|| self.domain.zero())
    }

    pub fn transpose(&self) -> SparseMatrix {
        let mut rows: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); self.rows];
        for (c, col) in self.columns.iter().enumerate() {
            for (r, v) in col.entries() {
                rows[*r].push((c, v.clone()));
            }
        }
        SparseMatrix {
            rows: self.cols,
            cols: self.rows,
            domain: self.domain,
            columns: rows
                .into_iter()
                .map(|e| SparseVec::from_sorted_unchecked(self.cols, e))
                .collect(),
        }
    }

    /// Rows of the matrix as sparse vectors of length `cols`.
    pub fn row_vectors(&self) -> Vec<SparseVec> {
        self.transpose().columns
    }

    pub fn mul_vec(&self, v: &SparseVec) -> Result<SparseVec> {
        if v.dim() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} matrix applied to a vector of length {}",
                self.rows,
                self.cols,
                v.dim()
            )));
        }
        if let Some((_, x)) = v.leading() {
            if x.domain() != self.domain {
                return Err(Error::DomainMismatch(self.domain.label(), x.domain().label()));
            }
        }
        let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
        for (c, x) in v.entries() {
            for (r, m) in self.columns[*c].entries() {
                accumulate(&mut acc, *r, m * x);
            }
        }
        Ok(SparseVec::from_sorted_unchecked(
            self.rows,
            acc.into_iter().filter(|(_, v)| !v.is_zero()).collect(),
        ))
    }

    /// Matrix product `self * rhs`.
    pub fn mul(&self, rhs: &SparseMatrix) -> Result<SparseMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        if self.domain != rhs.domain {
            return Err(Error::DomainMismatch(self.domain.label(), rhs.domain.label()));
        }
        use rayon::prelude::*;
        let columns = rhs
            .columns
            .par_iter()
            .map(|c| self.mul_vec(c))
            .collect::<Result<Vec<_>>>()?;
        Ok(SparseMatrix {
            rows: self.rows,
            cols: rhs.cols,
            domain: self.domain,
            columns,
        })
    }

    fn check_same_shape(&self, other: &SparseMatrix) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        if self.domain != other.domain {
            return Err(Error::DomainMismatch(self.domain.label(), other.domain.label()));
        }
        Ok(())
    }

    pub fn add(&self, other: &SparseMatrix) -> Result<SparseMatrix> {
        self.check_same_shape(other)?;
        let columns = self
            .columns
            .iter()
            .zip(&other.columns)
            .map(|(a, b)| a.add(b))
            .collect();
        Ok(SparseMatrix {
            columns,
            ..self.clone_shape()
        })
    }

    pub fn sub(&self, other: &SparseMatrix) -> Result<SparseMatrix> {
        self.check_same_shape(other)?;
        let columns = self
            .columns
            .iter()
            .zip(&other.columns)
            .map(|(a, b)| a.sub(b))
            .collect();
        Ok(SparseMatrix {
            columns,
            ..self.clone_shape()
        })
    }

    pub fn scale(&self, c: &Scalar) -> SparseMatrix {
        SparseMatrix {
            columns: self.columns.iter().map(|col| col.scale(c)).collect(),
            ..self.clone_shape()
        }
    }

    pub fn neg(&self) -> SparseMatrix {
        SparseMatrix {
            columns: self.columns.iter().map(SparseVec::neg).collect(),
            ..self.clone_shape()
        }
    }

    fn clone_shape(&self) -> SparseMatrix {
        SparseMatrix {
            rows: self.rows,
            cols: self.cols,
            domain: self.domain,
            columns: Vec::new(),
        }
    }

    /// Stacks matrices with equal column counts on top of each other.
    pub fn vstack(blocks: &[SparseMatrix]) -> Result<SparseMatrix> {
        let first = blocks
            .first()
            .ok_or_else(|| Error::DimensionMismatch("empty vstack".into()))?;
        let cols = first.cols;
        let mut triplets = Vec::new();
        let mut offset = 0;
        for b in blocks {
            if b.cols != cols {
                return Err(Error::DimensionMismatch("vstack column counts differ".into()));
            }
            triplets.extend(b.entries().map(|(r, c, v)| (r + offset, c, v.clone())));
            offset += b.rows;
        }
        SparseMatrix::from_triplets(offset, cols, first.domain, triplets)
    }

    /// Places matrices side by side.
    pub fn hstack(blocks: &[SparseMatrix]) -> Result<SparseMatrix> {
        let first = blocks
            .first()
            .ok_or_else(|| Error::DimensionMismatch("empty hstack".into()))?;
        let mut columns = Vec::new();
        for b in blocks {
            if b.rows != first.rows {
                return Err(Error::DimensionMismatch("hstack row counts differ".into()));
            }
            columns.extend(b.columns.iter().cloned());
        }
        SparseMatrix::from_columns(first.rows, first.domain, columns)
    }

    /// Re-expresses every entry through `f`, e.g. to lift into another domain.
    pub fn map_values(&self, domain: Domain, mut f: impl FnMut(&Scalar) -> Scalar) -> SparseMatrix {
        SparseMatrix {
            rows: self.rows,
            cols: self.cols,
            domain,
            columns: self.columns.iter().map(|c| c.map_values(&mut f)).collect(),
        }
    }

    /// Restricts the matrix to a subspace: the columns are `self * b` for each
    /// basis vector `b`.
    pub fn restrict(&self, basis: &[SparseVec]) -> Result<SparseMatrix> {
        use rayon::prelude::*;
        let columns = basis
            .par_iter()
            .map(|b| self.mul_vec(b))
            .collect::<Result<Vec<_>>>()?;
        SparseMatrix::from_columns(self.rows, self.domain, columns)
    }

    pub fn rank(&self) -> Result<usize> {
        self.require_field()?;
        Ok(Echelon::from_vectors(self.rows, self.columns.iter().cloned())?.rank())
    }

    pub fn kernel(&self) -> Result<Subspace> {
        self.require_field()?;
        let rref = Echelon::from_vectors(self.cols, self.row_vectors())?;
        Subspace::from_vectors(self.cols, rref.null_space_basis(self.domain))
    }

    pub fn image(&self) -> Result<Subspace> {
        self.require_field()?;
        Subspace::from_vectors(self.rows, self.columns.iter().cloned())
    }

    pub fn rank_kernel_image(&self) -> Result<RankKernelImage> {
        let image = self.image()?;
        let kernel = self.kernel()?;
        Ok(RankKernelImage {
            rank: image.dim(),
            kernel,
            image,
        })
    }

    fn require_field(&self) -> Result<()> {
        if self.domain.is_field() {
            Ok(())
        } else {
            Err(Error::NonFieldScalars(self.domain.label()))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q_matrix(rows: &[&[i64]]) -> SparseMatrix {
        let d = Domain::Rational;
        let r = rows.len();
        let c = rows[0].len();
        SparseMatrix::from_triplets(
            r,
            c,
            d,
            rows.iter().enumerate().flat_map(|(i, row)| {
                row.iter().enumerate().map(move |(j, v)| (i, j, d.from_i64(*v)))
            }),
        )
        .unwrap()
    }

    #[test]
    fn identity_over_f2() {
        let f2 = Domain::prime_field(2).unwrap();
        let rki = SparseMatrix::identity(3, f2).rank_kernel_image().unwrap();
        assert_eq!(rki.rank, 3);
        assert_eq!(rki.kernel.dim(), 0);
    }

    #[test]
    fn zero_matrix_over_q() {
        let rki = SparseMatrix::zero(2, 4, Domain::Rational)
            .rank_kernel_image()
            .unwrap();
        assert_eq!(rki.rank, 0);
        assert_eq!(rki.kernel.dim(), 4);
    }

    #[test]
    fn rank_one_kernel() {
        let m = q_matrix(&[&[1, 2], &[2, 4]]);
        let rki = m.rank_kernel_image().unwrap();
        assert_eq!(rki.rank, 1);
        assert_eq!(rki.kernel.dim(), 1);
        let q = Domain::Rational;
        let v = SparseVec::from_dense(&[q.from_i64(2), q.from_i64(-1)]);
        assert!(rki.kernel.contains(&v).unwrap());
        assert!(m.mul_vec(&v).unwrap().is_zero());
    }

    #[test]
    fn prime_square_is_rejected() {
        let z9 = Domain::prime_square(3).unwrap();
        let m = SparseMatrix::identity(2, z9);
        assert!(matches!(m.rank(), Err(Error::NonFieldScalars(_))));
        assert!(matches!(m.kernel(), Err(Error::NonFieldScalars(_))));
        // arithmetic still works
        let v = SparseVec::unit(2, 1, z9);
        assert_eq!(m.mul_vec(&v).unwrap(), v);
    }

    #[test]
    fn duplicate_triplets_are_summed() {
        let f3 = Domain::prime_field(3).unwrap();
        let m = SparseMatrix::from_triplets(
            1,
            1,
            f3,
            vec![(0, 0, f3.from_i64(1)), (0, 0, f3.from_i64(2))],
        )
        .unwrap();
        assert!(m.is_zero());
        assert_eq!(m.nnz(), 0);
    }

    #[test]
    fn product_and_transpose() {
        let a = q_matrix(&[&[1, 2, 0], &[0, 1, 3]]);
        let b = q_matrix(&[&[1, 0], &[0, 1], &[1, 1]]);
        let ab = a.mul(&b).unwrap();
        assert_eq!(ab, q_matrix(&[&[1, 2], &[3, 4]]));
        assert_eq!(ab.transpose(), q_matrix(&[&[1, 3], &[2, 4]]));
        assert!(a.mul(&a).is_err());
    }
}
