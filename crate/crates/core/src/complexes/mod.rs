//! Cochain complexes on explicit tuple bases.
//!
//! A degree-`n` cochain is stored by its coordinates on tuples
//! `(g_1, …, g_n; b)` where the `g_i` run over a group and `b` over a basis of
//! the coefficient module. Tuples are enumerated in mixed-radix lexicographic
//! order with `b` as the innermost digit.
//!
//! Every face map `d_j` and every transposition `σ_i` sends a basis cochain
//! to a scalar multiple of a basis cochain, so both are assembled row by row
//! from a single `(column, coefficient)` pair.

mod action;
mod group;
mod hochschild;

pub use action::action_identities;
pub use group::{GroupComplex, ModuleAction, ModuleKind};
pub use hochschild::HochschildComplex;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::linalg::{Domain, Scalar, SparseMatrix, SparseVec, Subspace};

/// Default cap on the number of basis elements of any cochain space touched.
pub const DEFAULT_BUDGET: u128 = 100_000_000;

/// Mixed-radix addressing of `G^len × fiber`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TupleBasis {
    pub base: usize,
    pub len: usize,
    pub fiber: usize,
}

impl TupleBasis {
    pub fn new(base: usize, len: usize, fiber: usize) -> Self {
        TupleBasis { base, len, fiber }
    }

    /// Exact size, saturating at `u128::MAX`.
    pub fn size(&self) -> u128 {
        (self.base as u128)
            .checked_pow(self.len as u32)
            .and_then(|t| t.checked_mul(self.fiber as u128))
            .unwrap_or(u128::MAX)
    }

    pub fn encode(&self, tuple: &[usize], y: usize) -> usize {
        debug_assert_eq!(tuple.len(), self.len);
        let head = tuple.iter().fold(0, |acc, &g| acc * self.base + g);
        head * self.fiber + y
    }

    pub fn decode(&self, mut index: usize) -> (Vec<usize>, usize) {
        let y = index % self.fiber;
        index /= self.fiber;
        let mut tuple = vec![0; self.len];
        for slot in tuple.iter_mut().rev() {
            *slot = index % self.base;
            index /= self.base;
        }
        (tuple, y)
    }
}

/// A cochain together with its degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain {
    pub degree: usize,
    pub coords: SparseVec,
}

impl Cochain {
    pub fn new(degree: usize, coords: SparseVec) -> Self {
        Cochain { degree, coords }
    }
}

/// A cochain complex `C^0 → C^1 → …` with face maps and a `Σ_{n+1}`-action
/// on each `C^n`.
pub trait CochainComplex: Sync {
    fn domain(&self) -> Domain;

    fn budget(&self) -> u128;

    /// Order of the group indexing the tuples.
    fn group_order(&self) -> usize;

    /// Dimension of the coefficient module.
    fn fiber(&self) -> usize;

    /// The single nonzero entry of row `(tuple; y)` of `d_j: C^n → C^{n+1}`.
    fn face_entry(&self, n: usize, j: usize, tuple: &[usize], y: usize) -> (usize, Scalar);

    /// The single nonzero entry of row `(tuple; y)` of `σ_i` on `C^n`.
    fn sigma_entry(&self, n: usize, i: usize, tuple: &[usize], y: usize) -> (usize, Scalar);

    fn element_label(&self, g: usize) -> String;

    fn fiber_label(&self, y: usize) -> String;

    fn basis(&self, n: usize) -> TupleBasis {
        TupleBasis::new(self.group_order(), n, self.fiber())
    }

    /// `dim C^n`, failing with `TooLarge` beyond the budget.
    fn dim(&self, n: usize) -> Result<usize> {
        let needed = self.basis(n).size();
        if needed > self.budget() {
            return Err(Error::TooLarge {
                needed,
                budget: self.budget(),
            });
        }
        Ok(needed as usize)
    }

    /// Human-readable form of basis element `index` of `C^n`.
    fn basis_label(&self, n: usize, index: usize) -> String {
        let (tuple, y) = self.basis(n).decode(index);
        let args: Vec<String> = tuple.iter().map(|&g| self.element_label(g)).collect();
        format!("({}; {})", args.join(", "), self.fiber_label(y))
    }

    /// Face map `d_j: C^n → C^{n+1}`, `0 ≤ j ≤ n + 1`.
    fn face(&self, n: usize, j: usize) -> Result<SparseMatrix> {
        if j > n + 1 {
            return Err(Error::IndexOutOfRange { index: j, max: n + 1 });
        }
        let rows = self.dim(n + 1)?;
        let cols = self.dim(n)?;
        let target = self.basis(n + 1);
        let triplets: Vec<(usize, usize, Scalar)> = (0..rows)
            .into_par_iter()
            .map(|r| {
                let (t, y) = target.decode(r);
                let (c, v) = self.face_entry(n, j, &t, y);
                (r, c, v)
            })
            .collect();
        SparseMatrix::from_triplets(rows, cols, self.domain(), triplets)
    }

    /// The differential `Σ_j (−1)^j d_j: C^n → C^{n+1}`.
    fn differential(&self, n: usize) -> Result<SparseMatrix> {
        let rows = self.dim(n + 1)?;
        let cols = self.dim(n)?;
        let target = self.basis(n + 1);
        let triplets: Vec<(usize, usize, Scalar)> = (0..rows)
            .into_par_iter()
            .flat_map_iter(|r| {
                let (t, y) = target.decode(r);
                (0..=n + 1)
                    .map(|j| {
                        let (c, v) = self.face_entry(n, j, &t, y);
                        (r, c, if j % 2 == 0 { v } else { -v })
                    })
                    .collect::<Vec<_>>()
            })
            .collect();
        SparseMatrix::from_triplets(rows, cols, self.domain(), triplets)
    }

    /// Transposition `σ_i = (i, i+1)` acting on `C^n`, `1 ≤ i ≤ n`.
    fn sigma(&self, n: usize, i: usize) -> Result<SparseMatrix> {
        if i == 0 || i > n {
            return Err(Error::IndexOutOfRange { index: i, max: n });
        }
        let dim = self.dim(n)?;
        let basis = self.basis(n);
        let triplets: Vec<(usize, usize, Scalar)> = (0..dim)
            .into_par_iter()
            .map(|r| {
                let (t, y) = basis.decode(r);
                let (c, v) = self.sigma_entry(n, i, &t, y);
                (r, c, v)
            })
            .collect();
        SparseMatrix::from_triplets(dim, dim, self.domain(), triplets)
    }

    /// `CS^n = ⋂_i Ker(σ_i − I)`; all of `C^n` when `n = 0`.
    fn invariants(&self, n: usize) -> Result<Subspace> {
        let dim = self.dim(n)?;
        if n == 0 {
            return Ok(Subspace::full(dim, self.domain()));
        }
        let sigmas = (1..=n).map(|i| self.sigma(n, i)).collect::<Result<Vec<_>>>()?;
        monomial_fixed_space(dim, self.domain(), &sigmas)
    }

    fn cohomology(&self, n: usize) -> Result<CohomologySpace> {
        let cocycles = self.differential(n)?.kernel()?;
        let coboundaries = if n == 0 {
            Subspace::zero(self.dim(0)?)
        } else {
            self.differential(n - 1)?.image()?
        };
        CohomologySpace::new(n, cocycles, coboundaries)
    }

    /// Cohomology of the invariant subcomplex:
    /// `(Ker δ^n ∩ CS^n) / δ^{n−1}(CS^{n−1})`.
    fn symmetric_cohomology(&self, n: usize) -> Result<CohomologySpace> {
        let here = self.invariants(n)?;
        let cocycles = restricted_kernel(&self.differential(n)?, &here)?;
        let coboundaries = if n == 0 {
            Subspace::zero(self.dim(0)?)
        } else {
            let below = self.invariants(n - 1)?;
            self.differential(n - 1)?.restrict(below.basis())?.image()?
        };
        CohomologySpace::new(n, cocycles, coboundaries)
    }
}

/// `Ker(M) ∩ V` as a subspace of the ambient space of `V`.
pub fn restricted_kernel(m: &SparseMatrix, v: &Subspace) -> Result<Subspace> {
    let restricted = m.restrict(v.basis())?;
    let coefficients = restricted.kernel()?;
    let embed = SparseMatrix::from_columns(v.ambient_dim(), m.domain(), v.basis().to_vec())?;
    let vectors = coefficients
        .basis()
        .iter()
        .map(|k| embed.mul_vec(k))
        .collect::<Result<Vec<_>>>()?;
    Subspace::from_vectors(v.ambient_dim(), vectors)
}

/// Common fixed space of signed monomial matrices (one entry per row, each
/// an involution), found by propagating values along orbits.
///
/// A vector `φ` is fixed by `S` iff `φ_r = c·φ_c` for every entry `(r, c, c)`
/// of `S`. Each connected component of the resulting graph either carries a
/// one-dimensional space of solutions or is forced to vanish.
pub fn monomial_fixed_space(dim: usize, domain: Domain, generators: &[SparseMatrix]) -> Result<Subspace> {
    // edges[v] = (w, f) meaning φ_w = f·φ_v
    let mut edges: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); dim];
    for s in generators {
        if s.rows() != dim || s.cols() != dim {
            return Err(Error::DimensionMismatch("generator of the wrong size".into()));
        }
        for (r, c, v) in s.entries() {
            edges[r].push((c, v.inverse()?));
            edges[c].push((r, v.clone()));
        }
    }
    let mut value: Vec<Option<Scalar>> = vec![None; dim];
    let mut out = Vec::new();
    for root in 0..dim {
        if value[root].is_some() {
            continue;
        }
        value[root] = Some(domain.one());
        let mut component = vec![root];
        let mut stack = vec![root];
        let mut consistent = true;
        while let Some(v) = stack.pop() {
            let here = value[v].clone().expect("visited");
            for (w, f) in &edges[v] {
                let want = &here * f;
                match &value[*w] {
                    Some(existing) => consistent &= *existing == want,
                    None => {
                        value[*w] = Some(want);
                        component.push(*w);
                        stack.push(*w);
                    }
                }
            }
        }
        if consistent {
            let pairs = component
                .into_iter()
                .map(|w| (w, value[w].clone().expect("visited")));
            out.push(SparseVec::from_pairs(dim, pairs));
        }
    }
    Subspace::from_vectors(dim, out)
}

/// Cocycles, coboundaries and a choice of representatives for their quotient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologySpace {
    pub degree: usize,
    pub dim: usize,
    pub cocycles: Subspace,
    pub coboundaries: Subspace,
    /// cocycles whose classes form a basis of the quotient
    pub reps: Vec<SparseVec>,
}

impl CohomologySpace {
    pub fn new(degree: usize, cocycles: Subspace, coboundaries: Subspace) -> Result<Self> {
        let dim = cocycles.quotient_dim(&coboundaries)?;
        let reps = cocycles.complement_of(&coboundaries)?;
        Ok(CohomologySpace {
            degree,
            dim,
            cocycles,
            coboundaries,
            reps,
        })
    }

    pub fn is_cocycle(&self, v: &SparseVec) -> Result<bool> {
        self.cocycles.contains(v)
    }

    /// Whether `v` is cohomologous to zero.
    pub fn is_coboundary(&self, v: &SparseVec) -> Result<bool> {
        self.coboundaries.contains(v)
    }
}
