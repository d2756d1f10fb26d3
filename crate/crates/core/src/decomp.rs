//! Comparison maps between the Hochschild complex of `k_αG` and the group
//! complexes of the centralizers, and the checks built on them.
//!
//! For a class representative `x` the maps are
//!
//! * `π_x: C^n(k_αG, k_αG) → C^n(C_G(x), kx̄)`, reading off the coefficient of
//!   `x̄` in `φ(h̄_1 ⊗ … ⊗ h̄_n) · h̄_n⁻¹ ⋯ h̄_1⁻¹`;
//! * `ν_x: C^n(G, kx̄) → C^n(k_αG, k_αG)` for central `x`,
//!   `ψ ↦ (ḡ ↦ ψ(g) · ḡ_1 ⋯ ḡ_n)`;
//! * the untwisted `ν_x: C^n(C_G(x), k) → C^n(kG, kG)` for any `x`, summing
//!   over a right transversal of `C_G(x)` along coset walks;
//! * `F: C^n(G, k_αG) → C^n(k_αG, k_αG)` with `G` acting by conjugation.

use serde_json::json;

use crate::complexes::{CochainComplex, GroupComplex, HochschildComplex, ModuleAction, DEFAULT_BUDGET};
use crate::error::{Error, Result};
use crate::groups::{ClassData, FiniteGroup, Subgroup, Transversal};
use crate::linalg::{Scalar, SparseMatrix, SparseVec};
use crate::report::{Checks, Report};
use crate::twisted::{CharacterModule, TwistedAlgebra};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MapKind {
    Pi,
    NuCentral,
    NuGeneral,
    FIso,
}

/// A linear map between two cochain spaces in their tuple bases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComparisonMap {
    pub kind: MapKind,
    pub x: Option<usize>,
    pub degree: usize,
    pub matrix: SparseMatrix,
}

/// The centralizer `C_G(x)` and its complex with coefficients in `kx̄`.
#[derive(Clone, Debug)]
pub struct Local {
    pub x: usize,
    pub sub: Subgroup,
    pub complex: GroupComplex,
}

impl Local {
    fn ambient_tuple(&self, tuple: &[usize]) -> Vec<usize> {
        tuple.iter().map(|&h| self.sub.ambient(h)).collect()
    }

    fn local_tuple(&self, tuple: &[usize]) -> Vec<usize> {
        tuple
            .iter()
            .map(|&g| self.sub.local_index(g).expect("walk stays in the centralizer"))
            .collect()
    }
}

/// A twisted group algebra with its class data and a size budget.
#[derive(Clone, Debug)]
pub struct Context {
    alg: TwistedAlgebra,
    classes: ClassData,
    budget: u128,
}

impl Context {
    pub fn new(alg: TwistedAlgebra) -> Self {
        let classes = alg.group().class_data();
        Context {
            alg,
            classes,
            budget: DEFAULT_BUDGET,
        }
    }

    pub fn with_budget(mut self, budget: u128) -> Self {
        self.budget = budget;
        self
    }

    pub fn algebra(&self) -> &TwistedAlgebra {
        &self.alg
    }

    pub fn group(&self) -> &FiniteGroup {
        self.alg.group()
    }

    pub fn classes(&self) -> &ClassData {
        &self.classes
    }

    pub fn budget(&self) -> u128 {
        self.budget
    }

    pub fn hochschild(&self) -> HochschildComplex {
        HochschildComplex::new(self.alg.clone()).with_budget(self.budget)
    }

    /// `C^*(G, k_αG)` with `G` acting by conjugation.
    pub fn conjugation_complex(&self) -> GroupComplex {
        let module = ModuleAction::conjugation(&self.alg);
        GroupComplex::new(self.group().clone(), module).with_budget(self.budget)
    }

    /// `C^*(G, k)` with trivial coefficients.
    pub fn trivial_complex(&self) -> GroupComplex {
        GroupComplex::trivial(self.group().clone(), self.alg.domain()).with_budget(self.budget)
    }

    pub fn local(&self, x: usize) -> Result<Local> {
        let centralizer = self.classes.centralizer_of(x)?.to_vec();
        let sub = self.group().subgroup(&centralizer)?;
        let chi = CharacterModule::new(&self.alg, x, sub.embedding.clone())?;
        let module = ModuleAction::character(&sub.group, &chi, self.group().label(x))?;
        let complex = GroupComplex::new(sub.group.clone(), module).with_budget(self.budget);
        Ok(Local { x, sub, complex })
    }

    pub fn pi_map(&self, x: usize, n: usize) -> Result<ComparisonMap> {
        let local = self.local(x)?;
        self.pi_for(&local, n)
    }

    fn pi_for(&self, local: &Local, n: usize) -> Result<ComparisonMap> {
        let g = self.group();
        let hoch = self.hochschild();
        let rows = local.complex.dim(n)?;
        let cols = hoch.dim(n)?;
        let (lb, hb) = (local.complex.basis(n), hoch.basis(n));
        let triplets = (0..rows).map(|r| {
            let h = local.ambient_tuple(&lb.decode(r).0);
            // h̄_n⁻¹ ⋯ h̄_1⁻¹ = c · w̄ with w = (h_1 ⋯ h_n)⁻¹; ȳ · c w̄ hits x̄ at y = x h_1 ⋯ h_n
            let (c, w) = self.alg.inverse_word(&h);
            let y = g.mul(local.x, g.product(&h));
            (r, hb.encode(&h, y), &c * self.alg.alpha(y, w))
        });
        let matrix = SparseMatrix::from_triplets(rows, cols, self.alg.domain(), triplets)?;
        Ok(ComparisonMap {
            kind: MapKind::Pi,
            x: Some(local.x),
            degree: n,
            matrix,
        })
    }

    pub fn nu_central_map(&self, x: usize, n: usize) -> Result<ComparisonMap> {
        if !self.group().is_central(x) {
            return Err(Error::NotCentral(x));
        }
        let local = self.local(x)?;
        self.nu_central_for(&local, n)
    }

    fn nu_central_for(&self, local: &Local, n: usize) -> Result<ComparisonMap> {
        let g = self.group();
        let hoch = self.hochschild();
        let rows = hoch.dim(n)?;
        let cols = local.complex.dim(n)?;
        let (lb, hb) = (local.complex.basis(n), hoch.basis(n));
        let triplets = (0..cols).map(|c| {
            let t = local.ambient_tuple(&lb.decode(c).0);
            let (coef, prod) = self.alg.word(&t);
            let row = hb.encode(&t, g.mul(local.x, prod));
            (row, c, &coef * self.alg.alpha(local.x, prod))
        });
        let matrix = SparseMatrix::from_triplets(rows, cols, self.alg.domain(), triplets)?;
        Ok(ComparisonMap {
            kind: MapKind::NuCentral,
            x: Some(local.x),
            degree: n,
            matrix,
        })
    }

    /// The untwisted `ν_x` built from the greedy transversal.
    pub fn nu_general_map(&self, x: usize, n: usize) -> Result<ComparisonMap> {
        let t = Transversal::new(self.group(), &self.classes, x)?;
        self.nu_general_with(x, n, &t)
    }

    /// The untwisted `ν_x` for a given transversal of `C_G(x)`.
    pub fn nu_general_with(&self, x: usize, n: usize, transversal: &Transversal) -> Result<ComparisonMap> {
        if !self.alg.cocycle().is_trivial() {
            return Err(Error::NotTrivialCocycle);
        }
        let local = self.local(x)?;
        self.nu_general_for(&local, n, transversal)
    }

    fn nu_general_for(&self, local: &Local, n: usize, tr: &Transversal) -> Result<ComparisonMap> {
        let g = self.group();
        let hoch = self.hochschild();
        let rows = hoch.dim(n)?;
        let cols = local.complex.dim(n)?;
        let (lb, hb) = (local.complex.basis(n), hoch.basis(n));
        let one = self.alg.domain().one();
        let blocks = TupleBlocks::new(g.order(), n);
        let mut triplets = Vec::with_capacity(blocks.len() * tr.len());
        for word in blocks {
            let prod = g.product(&word);
            for j in 0..tr.len() {
                let (hs, _) = tr.walk_word(g, j, &word);
                let col = lb.encode(&local.local_tuple(&hs), 0);
                let row = hb.encode(&word, g.mul(tr.conjugates[j], prod));
                triplets.push((row, col, one.clone()));
            }
        }
        let matrix = SparseMatrix::from_triplets(rows, cols, self.alg.domain(), triplets)?;
        Ok(ComparisonMap {
            kind: MapKind::NuGeneral,
            x: Some(local.x),
            degree: n,
            matrix,
        })
    }

    /// `F(ψ)(ḡ_1 ⊗ … ⊗ ḡ_n) = ψ(g_1, …, g_n) · ḡ_1 ⋯ ḡ_n`.
    pub fn f_iso(&self, n: usize) -> Result<ComparisonMap> {
        let g = self.group();
        let hoch = self.hochschild();
        let conj = self.conjugation_complex();
        let dim = hoch.dim(n)?;
        let (cb, hb) = (conj.basis(n), hoch.basis(n));
        let triplets = (0..dim).map(|c| {
            let (t, b) = cb.decode(c);
            let (coef, prod) = self.alg.word(&t);
            (hb.encode(&t, g.mul(b, prod)), c, &coef * self.alg.alpha(b, prod))
        });
        let matrix = SparseMatrix::from_triplets(dim, dim, self.alg.domain(), triplets)?;
        Ok(ComparisonMap {
            kind: MapKind::FIso,
            x: None,
            degree: n,
            matrix,
        })
    }

    /// The `ν_x` that applies to `x`: the central formula when `x ∈ Z(G)`,
    /// otherwise the transversal formula (trivial cocycle only).
    fn nu_for(&self, local: &Local, n: usize) -> Result<ComparisonMap> {
        if self.group().is_central(local.x) {
            self.nu_central_for(local, n)
        } else if self.alg.cocycle().is_trivial() {
            let t = Transversal::new(self.group(), &self.classes, local.x)?;
            self.nu_general_for(local, n, &t)
        } else {
            Err(Error::NotCentral(local.x))
        }
    }

    fn locals(&self, xs: &[usize]) -> Result<Vec<Local>> {
        xs.iter().map(|&x| self.local(x)).collect()
    }

    /// Compares `dim HH^n(k_αG)` with `Σ_x dim H^n(C_G(x), kx̄)`. For abelian
    /// `G` also checks that `⊕_x ν_x` induces an isomorphism.
    pub fn verify_decomposition(&self, n: usize) -> Result<Report> {
        let hh = self.hochschild().cohomology(n)?;
        let locals = self.locals(&self.classes.reps)?;
        let mut summands = Vec::new();
        let mut rhs = 0;
        let mut local_spaces = Vec::new();
        for local in &locals {
            let h = local.complex.cohomology(n)?;
            rhs += h.dim;
            summands.push(json!({
                "x": self.group().label(local.x),
                "centralizer_order": local.sub.order(),
                "dim": h.dim,
            }));
            local_spaces.push(h);
        }
        let mut checks = Checks::new();
        let mut nu_iso = None;
        if self.group().is_abelian() {
            let mut images = Vec::new();
            for (local, h) in locals.iter().zip(&local_spaces) {
                let nu = self.nu_central_for(local, n)?;
                for r in &h.reps {
                    let image = nu.matrix.mul_vec(r)?;
                    let label = self.group().label(local.x).to_string();
                    checks.record(hh.is_cocycle(&image)?, || format!("nu_{label} of a cocycle is not a cocycle"));
                    images.push(image);
                }
            }
            let rank = hh.coboundaries.rank_modulo(&images)?;
            let iso = rank == images.len() && rank == hh.dim;
            checks.record(iso, || format!("sum of nu maps has rank {rank} on HH^{n} of dim {}", hh.dim));
            nu_iso = Some(iso);
        }
        Ok(Report::comparison("decomposition", n, hh.dim, rhs, checks)
            .with_details(json!({ "summands": summands, "nu_isomorphism": nu_iso })))
    }

    /// Chain-map, equivariance and `π_y ∘ ν_x = δ_{x,y} id` identities in
    /// degree `n`, over every representative for which `ν_x` is defined.
    pub fn verify_maps(&self, n: usize) -> Result<Report> {
        let hoch = self.hochschild();
        let reps = self.classes.reps.clone();
        let locals = self.locals(&reps)?;
        let d_h = hoch.differential(n)?;
        let sig_h: Vec<SparseMatrix> = (1..=n).map(|i| hoch.sigma(n, i)).collect::<Result<_>>()?;
        let hr = &hoch;
        let hl = |k: usize| move |i: usize| hr.basis_label(k, i);
        let mut checks = Checks::new();
        let pis = locals
            .iter()
            .map(|l| self.pi_for(l, n))
            .collect::<Result<Vec<_>>>()?;
        for (local, pi) in locals.iter().zip(&pis) {
            let xl = self.group().label(local.x).to_string();
            let lc = &local.complex;
            let ll = |k: usize| move |i: usize| lc.basis_label(k, i);
            let pi_next = self.pi_for(local, n + 1)?;
            let d_l = lc.differential(n)?;
            checks.matrices_equal(
                &format!("pi_{xl} chain map"),
                &pi_next.matrix.mul(&d_h)?,
                &d_l.mul(&pi.matrix)?,
                ll(n + 1),
                hl(n),
            );
            for (i, s) in sig_h.iter().enumerate() {
                checks.matrices_equal(
                    &format!("pi_{xl} sigma_{}", i + 1),
                    &pi.matrix.mul(s)?,
                    &lc.sigma(n, i + 1)?.mul(&pi.matrix)?,
                    ll(n),
                    hl(n),
                );
            }
            let nu = match self.nu_for(local, n) {
                Ok(nu) => nu,
                Err(Error::NotCentral(_)) => continue,
                Err(e) => return Err(e),
            };
            let nu_next = self.nu_for(local, n + 1)?;
            checks.matrices_equal(
                &format!("nu_{xl} chain map"),
                &d_h.mul(&nu.matrix)?,
                &nu_next.matrix.mul(&d_l)?,
                hl(n + 1),
                ll(n),
            );
            for (i, s) in sig_h.iter().enumerate() {
                checks.matrices_equal(
                    &format!("nu_{xl} sigma_{}", i + 1),
                    &s.mul(&nu.matrix)?,
                    &nu.matrix.mul(&lc.sigma(n, i + 1)?)?,
                    hl(n),
                    ll(n),
                );
            }
            for (other, pi_y) in locals.iter().zip(&pis) {
                let composite = pi_y.matrix.mul(&nu.matrix)?;
                let expected = if other.x == local.x {
                    SparseMatrix::identity(lc.dim(n)?, lc.domain())
                } else {
                    SparseMatrix::zero(other.complex.dim(n)?, lc.dim(n)?, lc.domain())
                };
                let yl = self.group().label(other.x).to_string();
                let oc = &other.complex;
                checks.matrices_equal(
                    &format!("pi_{yl} nu_{xl}"),
                    &composite,
                    &expected,
                    |i| oc.basis_label(n, i),
                    ll(n),
                );
            }
            if self.alg.cocycle().is_trivial() {
                let tr = Transversal::new(self.group(), &self.classes, local.x)?;
                let general = self.nu_general_for(local, n, &tr)?;
                if nu.kind == MapKind::NuCentral {
                    checks.matrices_equal(
                        &format!("nu_{xl} central vs transversal"),
                        &nu.matrix,
                        &general.matrix,
                        hl(n),
                        ll(n),
                    );
                }
                let scan: Vec<usize> = std::iter::once(0).chain((1..self.group().order()).rev()).collect();
                let alt = Transversal::with_scan_order(self.group(), &self.classes, local.x, &scan)?;
                let alt_nu = self.nu_general_for(local, n, &alt)?;
                let alt_next = self.nu_general_for(local, n + 1, &alt)?;
                checks.matrices_equal(
                    &format!("nu_{xl} reversed transversal pi nu"),
                    &pi.matrix.mul(&alt_nu.matrix)?,
                    &SparseMatrix::identity(lc.dim(n)?, lc.domain()),
                    ll(n),
                    ll(n),
                );
                checks.matrices_equal(
                    &format!("nu_{xl} reversed transversal chain map"),
                    &d_h.mul(&alt_nu.matrix)?,
                    &alt_next.matrix.mul(&d_l)?,
                    hl(n + 1),
                    ll(n),
                );
            }
        }
        Ok(Report::identities("maps", n, checks))
    }

    /// `F` is invertible, a chain map and `Σ`-equivariant; compares
    /// `dim HS^n(G, k_αG)` with `dim HHS^n(k_αG)`.
    pub fn verify_f_iso(&self, n: usize) -> Result<Report> {
        let hoch = self.hochschild();
        let conj = self.conjugation_complex();
        let f = self.f_iso(n)?;
        let f_next = self.f_iso(n + 1)?;
        let mut checks = Checks::new();
        let dim = hoch.dim(n)?;
        let rank = f.matrix.rank()?;
        checks.record(rank == dim, || format!("F^{n} has rank {rank} < {dim}"));
        let hr = &hoch;
        let hl = |k: usize| move |i: usize| hr.basis_label(k, i);
        let cr = &conj;
        let cl = |k: usize| move |i: usize| cr.basis_label(k, i);
        checks.matrices_equal(
            "F chain map",
            &f_next.matrix.mul(&conj.differential(n)?)?,
            &hoch.differential(n)?.mul(&f.matrix)?,
            hl(n + 1),
            cl(n),
        );
        for i in 1..=n {
            checks.matrices_equal(
                &format!("F sigma_{i}"),
                &f.matrix.mul(&conj.sigma(n, i)?)?,
                &hoch.sigma(n, i)?.mul(&f.matrix)?,
                hl(n),
                cl(n),
            );
        }
        let lhs = conj.symmetric_cohomology(n)?.dim;
        let rhs = hoch.symmetric_cohomology(n)?.dim;
        Ok(Report::comparison("f_isomorphism", n, lhs, rhs, checks))
    }

    /// Embedding of symmetric cohomology: part a over the central
    /// representatives, and part b over all representatives when the cocycle
    /// is trivial.
    pub fn verify_embedding(&self, n: usize) -> Result<Vec<Report>> {
        let mut out = vec![self.embedding_report("embedding_central", n, &self.classes.central_reps())?];
        if self.alg.cocycle().is_trivial() {
            out.push(self.embedding_report("embedding_all_classes", n, &self.classes.reps)?);
        }
        Ok(out)
    }

    fn embedding_report(&self, claim: &str, n: usize, xs: &[usize]) -> Result<Report> {
        let hoch = self.hochschild();
        let target = hoch.symmetric_cohomology(n)?;
        let hoch_invariants = hoch.invariants(n)?;
        let locals = self.locals(xs)?;
        let mut parts = Vec::new();
        for local in &locals {
            let sym = local.complex.symmetric_cohomology(n)?;
            let inv = local.complex.invariants(n)?;
            let nu = self.nu_for(local, n)?;
            let pi = self.pi_for(local, n)?;
            parts.push((local, sym, inv, nu, pi));
        }
        let mut checks = Checks::new();
        let mut images = Vec::new();
        let mut summands = Vec::new();
        for (local, sym, inv, nu, _) in &parts {
            let xl = self.group().label(local.x).to_string();
            summands.push(json!({ "x": xl, "dim": sym.dim }));
            for v in inv.basis() {
                let image = nu.matrix.mul_vec(v)?;
                checks.record(hoch_invariants.contains(&image)?, || {
                    format!("nu_{xl} of an invariant cochain is not invariant")
                });
            }
            for r in &sym.reps {
                let image = nu.matrix.mul_vec(r)?;
                checks.record(target.is_cocycle(&image)?, || {
                    format!("nu_{xl} of a symmetric cocycle is not a symmetric cocycle")
                });
                images.push(image);
            }
            for b in sym.coboundaries.basis() {
                let image = nu.matrix.mul_vec(b)?;
                checks.record(target.is_coboundary(&image)?, || {
                    format!("nu_{xl} of a symmetric coboundary is not a symmetric coboundary")
                });
            }
            for (other, other_sym, _, _, pi_y) in &parts {
                let yl = self.group().label(other.x).to_string();
                let same = other.x == local.x;
                for v in inv.basis() {
                    let back = pi_y.matrix.mul_vec(&nu.matrix.mul_vec(v)?)?;
                    let ok = if same { back == *v } else { back.is_zero() };
                    checks.record(ok, || format!("pi_{yl} nu_{xl} differs on an invariant cochain"));
                }
                for r in &sym.reps {
                    let back = pi_y.matrix.mul_vec(&nu.matrix.mul_vec(r)?)?;
                    let diff = if same { back.sub(r) } else { back };
                    checks.record(other_sym.is_coboundary(&diff)?, || {
                        format!("pi_{yl} nu_{xl} is not the expected class")
                    });
                }
            }
        }
        let lhs: usize = parts.iter().map(|p| p.1.dim).sum();
        let rhs = target.coboundaries.rank_modulo(&images)?;
        Ok(Report::comparison(claim, n, lhs, rhs, checks).with_details(json!({
            "summands": summands,
            "target_dim": target.dim,
        })))
    }
}

/// All tuples of `G^n` in mixed-radix order.
struct TupleBlocks {
    base: usize,
    next: Option<Vec<usize>>,
    remaining: usize,
}

impl TupleBlocks {
    fn new(base: usize, n: usize) -> Self {
        TupleBlocks {
            base,
            next: Some(vec![0; n]),
            remaining: base.pow(n as u32),
        }
    }

    fn len(&self) -> usize {
        self.remaining
    }
}

impl Iterator for TupleBlocks {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let current = self.next.take()?;
        self.remaining -= 1;
        if self.remaining > 0 {
            let mut t = current.clone();
            for slot in t.iter_mut().rev() {
                *slot += 1;
                if *slot < self.base {
                    break;
                }
                *slot = 0;
            }
            self.next = Some(t);
        }
        Some(current)
    }
}

/// Free-function forms of the [`Context`] constructors.
pub fn pi_map(alg: &TwistedAlgebra, x: usize, n: usize) -> Result<ComparisonMap> {
    Context::new(alg.clone()).pi_map(x, n)
}

pub fn nu_central_map(alg: &TwistedAlgebra, x: usize, n: usize) -> Result<ComparisonMap> {
    Context::new(alg.clone()).nu_central_map(x, n)
}

pub fn nu_general_map(alg: &TwistedAlgebra, x: usize, n: usize) -> Result<ComparisonMap> {
    Context::new(alg.clone()).nu_general_map(x, n)
}

pub fn f_iso(alg: &TwistedAlgebra, n: usize) -> Result<ComparisonMap> {
    Context::new(alg.clone()).f_iso(n)
}

/// Applies a cochain map to a vector, for callers holding only the matrix.
pub fn apply(map: &ComparisonMap, v: &SparseVec) -> Result<SparseVec> {
    map.matrix.mul_vec(v)
}

/// Coefficient of `x̄` in `a`, the degree-zero component of `π_x`.
pub fn coefficient_of(a: &SparseVec, x: usize) -> Option<Scalar> {
    a.get(x).cloned()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{build_group, GroupSpec};
    use crate::linalg::Domain;
    use crate::twisted::{make_cocycle, CocycleSpec, ScalarLiteral};

    fn s3() -> Context {
        let g = build_group(&GroupSpec::symmetric(3)).unwrap();
        Context::new(TwistedAlgebra::group_algebra(g, Domain::prime_field(7).unwrap()))
    }

    fn klein() -> Context {
        let g = build_group(&GroupSpec::klein()).unwrap();
        let f5 = Domain::prime_field(5).unwrap();
        let spec = CocycleSpec::Pairing {
            zeta: ScalarLiteral::Int(4),
        };
        let alpha = make_cocycle(&g, &spec, f5).unwrap();
        Context::new(TwistedAlgebra::new(g, alpha).unwrap())
    }

    #[test]
    fn pi_in_degree_zero_reads_a_coefficient() {
        let ctx = s3();
        let x = ctx.classes().reps[2];
        let pi = ctx.pi_map(x, 0).unwrap();
        let d = ctx.algebra().domain();
        assert_eq!(pi.matrix.mul_vec(&SparseVec::unit(6, x, d)).unwrap(), SparseVec::unit(1, 0, d));
        let outside = ctx.classes().reps[1];
        assert!(pi.matrix.mul_vec(&SparseVec::unit(6, outside, d)).unwrap().is_zero());
    }

    #[test]
    fn nu_central_rejects_noncentral() {
        let ctx = s3();
        let x = ctx.classes().reps[1];
        assert_eq!(ctx.nu_central_map(x, 1).unwrap_err(), Error::NotCentral(x));
        assert_eq!(klein().nu_general_map(0, 1).unwrap_err(), Error::NotTrivialCocycle);
    }

    #[test]
    fn nu_general_in_degree_zero_is_the_class_sum() {
        let ctx = s3();
        let x = ctx.classes().reps[2];
        let nu = ctx.nu_general_map(x, 0).unwrap();
        let d = ctx.algebra().domain();
        let image = nu.matrix.mul_vec(&SparseVec::unit(1, 0, d)).unwrap();
        let class: Vec<usize> = image.entries().iter().map(|(i, _)| *i).collect();
        assert_eq!(class, ctx.classes().class_of_rep(x).unwrap());
    }

    #[test]
    fn f_in_degree_zero_is_the_identity() {
        let ctx = klein();
        let f = ctx.f_iso(0).unwrap();
        assert_eq!(f.matrix, SparseMatrix::identity(4, ctx.algebra().domain()));
    }

    #[test]
    fn decomposition_in_low_degree() {
        for (ctx, expected) in [(s3(), 3), (klein(), 1)] {
            let r = ctx.verify_decomposition(0).unwrap();
            assert!(r.pass, "{r:?}");
            assert_eq!(r.lhs_dim, Some(expected));
        }
        assert!(klein().verify_decomposition(1).unwrap().pass);
    }

    #[test]
    fn maps_in_degree_one() {
        for ctx in [s3(), klein()] {
            let r = ctx.verify_maps(1).unwrap();
            assert!(r.pass, "{:?}", r.witnesses);
        }
    }

    #[test]
    fn f_iso_in_degree_one() {
        let r = s3().verify_f_iso(1).unwrap();
        assert!(r.pass, "{:?}", r.witnesses);
    }

    #[test]
    fn embedding_in_degree_one() {
        for ctx in [s3(), klein()] {
            for r in ctx.verify_embedding(1).unwrap() {
                assert!(r.pass, "{} {:?} {:?} {:?}", r.claim, r.lhs_dim, r.rhs_dim, r.witnesses);
            }
        }
    }

    #[test]
    fn tuple_blocks_enumerate_in_order() {
        let all: Vec<Vec<usize>> = TupleBlocks::new(3, 2).collect();
        assert_eq!(all.len(), 9);
        assert_eq!(all[5], vec![1, 2]);
        assert_eq!(TupleBlocks::new(4, 0).collect::<Vec<_>>(), vec![Vec::<usize>::new()]);
    }
}
