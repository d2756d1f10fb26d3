use std::collections::HashMap;

use crate::error::{Error, Result};

use super::scalar::Domain;
use super::sparse::SparseVec;

/// Row echelon form over a field, built one vector at a time.
///
/// Every stored row has leading coefficient 1 and a distinct pivot column.
/// [`Echelon::into_reduced_rows`] turns the rows into the unique reduced row echelon
/// form of their span.
#[derive(Clone, Debug)]
pub struct Echelon {
    ncols: usize,
    rows: Vec<SparseVec>,
    pivot_row: HashMap<usize, usize>,
    reduced: bool,
}

impl Echelon {
    pub fn new(ncols: usize) -> Self {
        Echelon {
            ncols,
            rows: Vec::new(),
            pivot_row: HashMap::new(),
            reduced: true,
        }
    }

    /// Reduced row echelon form of the span of `vectors`.
    ///
    /// Sparser vectors are inserted first (ties by input position) so they
    /// become pivots, which limits fill-in; the final form does not depend on
    /// the order.
    pub fn from_vectors(ncols: usize, vectors: impl IntoIterator<Item = SparseVec>) -> Result<Self> {
        let mut vs: Vec<SparseVec> = vectors.into_iter().collect();
        vs.sort_by_key(SparseVec::nnz);
        let mut e = Echelon::new(ncols);
        for v in vs {
            e.insert(v)?;
        }
        e.reduce_fully();
        Ok(e)
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.leading().unwrap().0).collect()
    }

    /// Eliminates pivot-column leading entries until the leading column is
    /// free or the vector vanishes.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut w = v.clone();
        while let Some((c, x)) = w.leading() {
            match self.pivot_row.get(c) {
                Some(&r) => {
                    let coeff = -x;
                    w = w.add_scaled(&coeff, &self.rows[r]);
                }
                None => break,
            }
        }
        w
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_zero()
    }

    /// Inserts `v`; returns whether it enlarged the span.
    pub fn insert(&mut self, v: SparseVec) -> Result<bool> {
        if v.dim() != self.ncols {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} in echelon form over {} columns",
                v.dim(),
                self.ncols
            )));
        }
        if let Some((_, x)) = v.leading() {
            if !x.domain().is_field() {
                return Err(Error::NonFieldScalars(x.domain().label()));
            }
        }
        let w = self.reduce(&v);
        let Some((c, lead)) = w.leading() else {
            return Ok(false);
        };
        let c = *c;
        let w = w.scale(&lead.inverse()?);
        self.pivot_row.insert(c, self.rows.len());
        self.rows.push(w);
        self.reduced = false;
        Ok(true)
    }

    /// Back-substitutes so every pivot column is zero outside its own row and
    /// sorts the rows by pivot.
    pub fn reduce_fully(&mut self) {
        if self.reduced {
            return;
        }
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&r| std::cmp::Reverse(self.rows[r].leading().unwrap().0));
        // largest pivots first: each later row only meets already-reduced rows
        for &r in &order {
            let row = self.rows[r].clone();
            let lead = row.leading().unwrap().0;
            let mut out = row.clone();
            for (c, x) in row.entries() {
                if *c == lead {
                    continue;
                }
                if let Some(&pr) = self.pivot_row.get(c) {
                    let coeff = -x;
                    out = out.add_scaled(&coeff, &self.rows[pr]);
                }
            }
            self.rows[r] = out;
        }
        let mut rows = std::mem::take(&mut self.rows);
        rows.sort_by_key(|r| r.leading().unwrap().0);
        self.pivot_row = rows
            .iter()
            .enumerate()
            .map(|(i, r)| (r.leading().unwrap().0, i))
            .collect();
        self.rows = rows;
        self.reduced = true;
    }

    pub fn into_reduced_rows(mut self) -> Vec<SparseVec> {
        self.reduce_fully();
        self.rows
    }

    /// Basis of `{x : r·x = 0 for every row r}`, one vector per free column.
    pub fn null_space_basis(&self, domain: Domain) -> Vec<SparseVec> {
        assert!(self.reduced, "null space needs the reduced form");
        let mut out = Vec::new();
        // column -> list of (pivot column, coefficient of that column in the pivot row)
        let mut by_col: HashMap<usize, Vec<(usize, &crate::linalg::Scalar)>> = HashMap::new();
        for row in &self.rows {
            let p = row.leading().unwrap().0;
            for (c, x) in row.entries().iter().skip(1) {
                by_col.entry(*c).or_default().push((p, x));
            }
        }
        for f in 0..self.ncols {
            if self.pivot_row.contains_key(&f) {
                continue;
            }
            let mut pairs = vec![(f, domain.one())];
            if let Some(list) = by_col.get(&f) {
                pairs.extend(list.iter().map(|(p, x)| (*p, -*x)));
            }
            out.push(SparseVec::from_pairs(self.ncols, pairs));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduced_form_is_idempotent() {
        let f5 = Domain::prime_field(5).unwrap();
        let v = |xs: &[i64]| SparseVec::from_dense(&xs.iter().map(|&x| f5.from_i64(x)).collect::<Vec<_>>());
        let e = Echelon::from_vectors(3, vec![v(&[1, 2, 3]), v(&[2, 4, 1]), v(&[0, 1, 1])]).unwrap();
        let rows = e.into_reduced_rows();
        let again = Echelon::from_vectors(3, rows.clone()).unwrap().into_reduced_rows();
        assert_eq!(rows, again);
        // the second vector is twice the first
        assert_eq!(rows.len(), 2);
    }

    #[test]
    fn null_space_is_annihilated() {
        let f3 = Domain::prime_field(3).unwrap();
        let v = |xs: &[i64]| SparseVec::from_dense(&xs.iter().map(|&x| f3.from_i64(x)).collect::<Vec<_>>());
        let rows = vec![v(&[1, 1, 0, 2]), v(&[0, 0, 1, 1])];
        let e = Echelon::from_vectors(4, rows.clone()).unwrap();
        let ns = e.null_space_basis(f3);
        assert_eq!(ns.len(), 2);
        for n in &ns {
            for r in &rows {
                let dot = r
                    .entries()
                    .iter()
                    .filter_map(|(i, x)| n.get(*i).map(|y| x * y))
                    .fold(f3.zero(), |a, b| &a + &b);
                assert!(dot.is_zero());
            }
        }
    }
}
