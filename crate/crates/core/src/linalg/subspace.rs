use crate::error::{Error, Result};

use super::echelon::Echelon;
use super::sparse::SparseVec;

/// A subspace of a coordinate space, held as its reduced row echelon basis.
///
/// The basis is canonical, so two subspaces are equal iff their bases are.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<SparseVec>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize, domain: crate::linalg::Domain) -> Self {
        Subspace {
            ambient_dim,
            basis: (0..ambient_dim)
                .map(|i| SparseVec::unit(ambient_dim, i, domain))
                .collect(),
        }
    }

    pub fn from_vectors(ambient_dim: usize, vectors: impl IntoIterator<Item = SparseVec>) -> Result<Self> {
        let e = Echelon::from_vectors(ambient_dim, vectors)?;
        Ok(Subspace {
            ambient_dim,
            basis: e.into_reduced_rows(),
        })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[SparseVec] {
        &self.basis
    }

    pub fn into_basis(self) -> Vec<SparseVec> {
        self.basis
    }

    fn echelon(&self) -> Echelon {
        let mut e = Echelon::new(self.ambient_dim);
        for b in &self.basis {
            e.insert(b.clone()).expect("basis vectors are over a field");
        }
        e
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::AmbientMismatch(self.ambient_dim, other.ambient_dim));
        }
        Ok(())
    }

    pub fn contains(&self, v: &SparseVec) -> Result<bool> {
        if v.dim() != self.ambient_dim {
            return Err(Error::AmbientMismatch(self.ambient_dim, v.dim()));
        }
        // the basis is reduced, so leading-entry elimination is exact
        let mut w = v.clone();
        let mut i = 0;
        while let Some((c, x)) = w.leading() {
            while i < self.basis.len() && self.basis[i].leading().unwrap().0 < *c {
                i += 1;
            }
            if i < self.basis.len() && self.basis[i].leading().unwrap().0 == *c {
                let coeff = -x;
                w = w.add_scaled(&coeff, &self.basis[i]);
            } else {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> Result<bool> {
        self.check_ambient(other)?;
        for b in &other.basis {
            if !self.contains(b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        Subspace::from_vectors(
            self.ambient_dim,
            self.basis.iter().chain(&other.basis).cloned(),
        )
    }

    /// Zassenhaus: reduce rows `[u | u]` and `[v | 0]`; the rows whose left
    /// half vanishes carry a basis of the intersection in their right half.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let n = self.ambient_dim;
        let doubled = |v: &SparseVec, copy: bool| {
            let mut pairs: Vec<_> = v.entries().to_vec();
            if copy {
                pairs.extend(v.entries().iter().map(|(i, x)| (i + n, x.clone())));
            }
            SparseVec::from_pairs(2 * n, pairs)
        };
        let mut e = Echelon::new(2 * n);
        for u in &self.basis {
            e.insert(doubled(u, true))?;
        }
        for v in &other.basis {
            e.insert(doubled(v, false))?;
        }
        let rows = e.into_reduced_rows();
        let inter = rows
            .into_iter()
            .filter(|r| r.leading().is_some_and(|(c, _)| *c >= n))
            .map(|r| SparseVec::from_pairs(n, r.entries().iter().map(|(i, x)| (i - n, x.clone()))));
        Subspace::from_vectors(n, inter)
    }

    /// `dim self - dim sub`, requiring `sub ⊆ self`.
    pub fn quotient_dim(&self, sub: &Subspace) -> Result<usize> {
        self.check_ambient(sub)?;
        if !self.contains_subspace(sub)? {
            return Err(Error::NotASubspace);
        }
        Ok(self.dim() - sub.dim())
    }

    /// Vectors of `self`'s basis forming a complement of `sub` inside `self`,
    /// chosen greedily in basis order.
    pub fn complement_of(&self, sub: &Subspace) -> Result<Vec<SparseVec>> {
        self.check_ambient(sub)?;
        let mut e = sub.echelon();
        let mut out = Vec::new();
        for b in &self.basis {
            if e.insert(b.clone())? {
                out.push(b.clone());
            }
        }
        Ok(out)
    }

    /// Rank of `vectors` modulo this subspace.
    pub fn rank_modulo(&self, vectors: &[SparseVec]) -> Result<usize> {
        let mut e = self.echelon();
        let mut rank = 0;
        for v in vectors {
            if e.insert(v.clone())? {
                rank += 1;
            }
        }
        Ok(rank)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Domain;

    fn vec_of(d: Domain, xs: &[i64]) -> SparseVec {
        SparseVec::from_dense(&xs.iter().map(|&x| d.from_i64(x)).collect::<Vec<_>>())
    }

    #[test]
    fn quotient_of_equal_spaces_is_zero() {
        let f3 = Domain::prime_field(3).unwrap();
        let u = Subspace::from_vectors(3, vec![vec_of(f3, &[1, 1, 0]), vec_of(f3, &[0, 1, 2])]).unwrap();
        assert_eq!(u.quotient_dim(&u).unwrap(), 0);
    }

    #[test]
    fn intersection_of_coordinate_planes() {
        let f3 = Domain::prime_field(3).unwrap();
        let u = Subspace::from_vectors(3, vec![vec_of(f3, &[1, 0, 0]), vec_of(f3, &[0, 1, 0])]).unwrap();
        let v = Subspace::from_vectors(3, vec![vec_of(f3, &[0, 1, 0]), vec_of(f3, &[0, 0, 1])]).unwrap();
        let w = u.intersect(&v).unwrap();
        assert_eq!(w, Subspace::from_vectors(3, vec![vec_of(f3, &[0, 1, 0])]).unwrap());
    }

    #[test]
    fn membership_of_scalar_multiple() {
        let f5 = Domain::prime_field(5).unwrap();
        let u = Subspace::from_vectors(2, vec![vec_of(f5, &[1, 1])]).unwrap();
        assert!(u.contains(&vec_of(f5, &[2, 2])).unwrap());
        assert!(!u.contains(&vec_of(f5, &[1, 2])).unwrap());
    }

    #[test]
    fn errors() {
        let f5 = Domain::prime_field(5).unwrap();
        let u = Subspace::from_vectors(2, vec![vec_of(f5, &[1, 0])]).unwrap();
        let v = Subspace::from_vectors(2, vec![vec_of(f5, &[0, 1])]).unwrap();
        assert_eq!(u.quotient_dim(&v), Err(Error::NotASubspace));
        assert_eq!(u.intersect(&Subspace::zero(3)), Err(Error::AmbientMismatch(2, 3)));
    }
}
