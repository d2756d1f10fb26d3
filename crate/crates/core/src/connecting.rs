//! Connecting homomorphisms for the coefficient sequence
//! `0 → ℤ/p → ℤ/p² → ℤ/p → 0` with its balanced (odd) section.
//!
//! On a cocycle `φ` with values in the quotient, the connecting map lifts
//! `φ` coefficientwise through the section, applies the differential with
//! `ℤ/p²` coefficients, and divides the result by `p`.

use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::complexes::{CochainComplex, GroupComplex, HochschildComplex, DEFAULT_BUDGET};
use crate::decomp::Context;
use crate::error::{Error, Result};
use crate::groups::FiniteGroup;
use crate::linalg::{Domain, Scalar, SparseMatrix, SparseVec};
use crate::report::{Checks, Report};
use crate::twisted::TwistedAlgebra;

/// JSON form `{"p": 3}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SesSpec {
    pub p: u64,
}

/// `ℤ/p --ι--> ℤ/p² --π--> ℤ/p` with `ι(a) = p·a`, the balanced section
/// `s_π` and the retraction `r_ι: p·a ↦ a` on `Ker π`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetricSes {
    p: u64,
    small: Domain,
    large: Domain,
}

pub fn make_ses(p: u64) -> Result<SymmetricSes> {
    SymmetricSes::new(p)
}

impl SymmetricSes {
    /// Builds the sequence and checks exactness, the section and retraction
    /// identities and the oddness `s(−a) = −s(a)` on every element.
    pub fn new(p: u64) -> Result<Self> {
        if p == 2 {
            return Err(Error::EvenPrime(p));
        }
        let small = Domain::prime_field(p)?;
        let large = Domain::prime_square(p)?;
        let ses = SymmetricSes { p, small, large };
        ses.verify()?;
        Ok(ses)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    /// `ℤ/p`, the outer terms.
    pub fn small(&self) -> Domain {
        self.small
    }

    /// `ℤ/p²`, the middle term.
    pub fn large(&self) -> Domain {
        self.large
    }

    pub fn include(&self, a: &Scalar) -> Scalar {
        let r = a.residue().expect("residue class");
        self.large.from_i64((r * self.p) as i64)
    }

    pub fn project(&self, b: &Scalar) -> Scalar {
        let r = b.residue().expect("residue class");
        self.small.from_i64((r % self.p) as i64)
    }

    /// The representative of `a` in `(−p/2, p/2)`, read in `ℤ/p²`.
    pub fn lift(&self, a: &Scalar) -> Scalar {
        let r = a.residue().expect("residue class") as i64;
        let p = self.p as i64;
        self.large.from_i64(if r <= (p - 1) / 2 { r } else { r - p })
    }

    /// `p·a ↦ a`; `SectionUndefined(index)` outside `Ker π`.
    pub fn retract(&self, b: &Scalar, index: usize) -> Result<Scalar> {
        let r = b.residue().expect("residue class");
        if !r.is_multiple_of(self.p) {
            return Err(Error::SectionUndefined(index));
        }
        Ok(self.small.from_i64((r / self.p) as i64))
    }

    /// Section values `s(0), …, s(p−1)` as residues mod `p²`.
    pub fn section_table(&self) -> Vec<u64> {
        (0..self.p)
            .map(|a| self.lift(&self.small.from_i64(a as i64)).residue().expect("residue"))
            .collect()
    }

    fn verify(&self) -> Result<()> {
        let bad = |what: &str| Err(Error::BadSpec(format!("sequence for p = {}: {what}", self.p)));
        let p = self.p as i64;
        for a in 0..p {
            let a = self.small.from_i64(a);
            if self.project(&self.lift(&a)) != a {
                return bad("section is not a right inverse");
            }
            if self.lift(&-&a) != -self.lift(&a) {
                return bad("section is not odd");
            }
            if !self.project(&self.include(&a)).is_zero() {
                return bad("composite is not zero");
            }
            if self.retract(&self.include(&a), 0)? != a {
                return bad("retraction does not undo the inclusion");
            }
        }
        for b in 0..p * p {
            let b = self.large.from_i64(b);
            if self.project(&b).is_zero() {
                if self.include(&self.retract(&b, 0)?) != b {
                    return bad("kernel is not the image of the inclusion");
                }
            } else if self.retract(&b, 0).is_ok() {
                return bad("retraction defined outside the kernel");
            }
        }
        Ok(())
    }

    /// `r(d(s ∘ φ))` for a differential `d` with `ℤ/p²` coefficients.
    pub fn connect(&self, d_large: &SparseMatrix, phi: &SparseVec) -> Result<SparseVec> {
        let lifted = phi.map_values(|a| self.lift(a));
        let image = d_large.mul_vec(&lifted)?;
        image.try_map_values(|i, b| self.retract(b, i))
    }
}

fn require_cocycle<C: CochainComplex>(complex: &C, n: usize, phi: &SparseVec) -> Result<()> {
    if !complex.differential(n)?.mul_vec(phi)?.is_zero() {
        return Err(Error::NotACocycle(format!("input of degree {n} has nonzero coboundary")));
    }
    Ok(())
}

fn require_symmetric<C: CochainComplex>(complex: &C, n: usize, phi: &SparseVec) -> Result<()> {
    for i in 1..=n {
        if complex.sigma(n, i)?.mul_vec(phi)? != *phi {
            return Err(Error::NotSymmetric(i));
        }
    }
    Ok(())
}

/// `β^n_H(φ) = r_ι ∘ ∂^n(s_π ∘ φ)` on `C^n(H, ℤ/p)` with trivial action.
/// With `symmetric` set the input must also be `Σ_{n+1}`-invariant.
pub fn beta_group(
    h: &FiniteGroup,
    ses: &SymmetricSes,
    n: usize,
    phi: &SparseVec,
    symmetric: bool,
) -> Result<SparseVec> {
    let small = GroupComplex::trivial(h.clone(), ses.small());
    require_cocycle(&small, n, phi)?;
    if symmetric {
        require_symmetric(&small, n, phi)?;
    }
    let large = GroupComplex::trivial(h.clone(), ses.large());
    ses.connect(&large.differential(n)?, phi)
}

/// `𝔹^n_G(φ) = r_{ι_G} ∘ δ^n_{ℤ/p² G}(s_{π_G} ∘ φ)` on symmetric Hochschild
/// cocycles of `𝔽_p G`.
pub fn bockstein_hochschild(g: &FiniteGroup, ses: &SymmetricSes, n: usize, phi: &SparseVec) -> Result<SparseVec> {
    let small = HochschildComplex::new(TwistedAlgebra::group_algebra(g.clone(), ses.small()));
    require_cocycle(&small, n, phi)?;
    require_symmetric(&small, n, phi)?;
    let large = HochschildComplex::new(TwistedAlgebra::group_algebra(g.clone(), ses.large()));
    ses.connect(&large.differential(n)?, phi)
}

/// Cochain-level checks of the connecting maps for one group.
#[derive(Clone, Debug)]
pub struct Connecting {
    ses: SymmetricSes,
    ctx: Context,
}

impl Connecting {
    pub fn new(g: FiniteGroup, ses: SymmetricSes) -> Self {
        Connecting::with_budget(g, ses, DEFAULT_BUDGET)
    }

    pub fn with_budget(g: FiniteGroup, ses: SymmetricSes, budget: u128) -> Self {
        let alg = TwistedAlgebra::group_algebra(g, ses.small());
        Connecting {
            ses,
            ctx: Context::new(alg).with_budget(budget),
        }
    }

    pub fn context(&self) -> &Context {
        &self.ctx
    }

    fn large_trivial(&self, g: &FiniteGroup) -> GroupComplex {
        GroupComplex::trivial(g.clone(), self.ses.large()).with_budget(self.ctx.budget())
    }

    fn large_hochschild(&self) -> HochschildComplex {
        let alg = TwistedAlgebra::group_algebra(self.ctx.group().clone(), self.ses.large());
        HochschildComplex::new(alg).with_budget(self.ctx.budget())
    }

    /// `β` sends symmetric cocycles to symmetric cocycles and symmetric
    /// coboundaries to symmetric coboundaries; the details list the basis
    /// classes with nonzero image.
    pub fn verify_beta(&self, n: usize) -> Result<Report> {
        let small = self.ctx.trivial_complex();
        let here = small.symmetric_cohomology(n)?;
        let next = small.symmetric_cohomology(n + 1)?;
        let d_large = self.large_trivial(self.ctx.group()).differential(n)?;
        let mut checks = Checks::new();
        for phi in here.cocycles.basis() {
            let out = self.ses.connect(&d_large, phi)?;
            checks.record(next.is_cocycle(&out)?, || {
                format!("beta of cocycle {} is not a symmetric cocycle", support(&small, n, phi))
            });
        }
        for b in here.coboundaries.basis() {
            let out = self.ses.connect(&d_large, b)?;
            checks.record(next.is_coboundary(&out)?, || {
                format!("beta of coboundary {} is not a symmetric coboundary", support(&small, n, b))
            });
        }
        let mut nonzero = Vec::new();
        for r in &here.reps {
            let out = self.ses.connect(&d_large, r)?;
            if !next.is_coboundary(&out)? {
                nonzero.push(support(&small, n, r));
            }
        }
        Ok(Report::identities("bockstein_symmetric", n, checks).with_details(json!({
            "p": self.ses.p(),
            "hs_dim": here.dim,
            "hs_next_dim": next.dim,
            "nonzero_bockstein": nonzero,
        })))
    }

    /// Exact commutativity `π_x^{n+1} ∘ 𝔹^n = β^n ∘ π_x^n` on a basis of
    /// symmetric Hochschild cocycles, for every representative `x`.
    pub fn verify_square(&self, n: usize) -> Result<Report> {
        let hoch = self.ctx.hochschild();
        let cocycles = hoch.symmetric_cohomology(n)?.cocycles;
        let d_hoch = self.large_hochschild().differential(n)?;
        let mut checks = Checks::new();
        let mut per_class = Vec::new();
        for &x in &self.ctx.classes().reps.clone() {
            let local = self.ctx.local(x)?;
            let pi = self.ctx.pi_map(x, n)?;
            let pi_next = self.ctx.pi_map(x, n + 1)?;
            let d_local = self.large_trivial(&local.sub.group).differential(n)?;
            let xl = self.ctx.group().label(x).to_string();
            let before = checks.passed;
            for phi in cocycles.basis() {
                let top = pi_next.matrix.mul_vec(&self.ses.connect(&d_hoch, phi)?)?;
                let bottom = self.ses.connect(&d_local, &pi.matrix.mul_vec(phi)?)?;
                checks.record(top == bottom, || {
                    format!("square for x = {xl} fails on {}", support(&hoch, n, phi))
                });
            }
            per_class.push(json!({ "x": xl, "commuting": checks.passed - before }));
        }
        Ok(Report::identities("bockstein_square", n, checks).with_details(json!({
            "p": self.ses.p(),
            "symmetric_cocycles": cocycles.dim(),
            "classes": per_class,
        })))
    }
}

/// Labels of the basis elements in the support of `v`, for witnesses.
fn support<C: CochainComplex>(complex: &C, n: usize, v: &SparseVec) -> String {
    let parts: Vec<String> = v
        .entries()
        .iter()
        .take(6)
        .map(|(i, c)| format!("{c}*{}", complex.basis_label(n, *i)))
        .collect();
    let more = if v.nnz() > 6 { " + ..." } else { "" };
    format!("[{}{more}]", parts.join(" + "))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{build_group, GroupSpec};

    #[test]
    fn sections_for_small_primes() {
        assert_eq!(make_ses(3).unwrap().section_table(), vec![0, 1, 8]);
        assert_eq!(make_ses(5).unwrap().section_table()[3], 23);
        assert_eq!(make_ses(2).unwrap_err(), Error::EvenPrime(2));
        assert_eq!(make_ses(9).unwrap_err(), Error::NotPrime(9));
    }

    #[test]
    fn retraction_needs_the_kernel() {
        let ses = make_ses(3).unwrap();
        let b = ses.large().from_i64(4);
        assert_eq!(ses.retract(&b, 7), Err(Error::SectionUndefined(7)));
    }

    fn identity_hom(ses: &SymmetricSes) -> SparseVec {
        SparseVec::from_pairs(3, (0..3).map(|i| (i, ses.small().from_i64(i as i64))))
    }

    #[test]
    fn bockstein_of_identity_on_z3_is_nonzero() {
        let ses = make_ses(3).unwrap();
        let g = build_group(&GroupSpec::cyclic(3)).unwrap();
        let phi = identity_hom(&ses);
        let out = beta_group(&g, &ses, 1, &phi, true).unwrap();
        let hs2 = GroupComplex::trivial(g, ses.small()).symmetric_cohomology(2).unwrap();
        assert!(hs2.is_cocycle(&out).unwrap());
        assert!(!hs2.is_coboundary(&out).unwrap());
    }

    #[test]
    fn non_cocycle_is_rejected() {
        let ses = make_ses(3).unwrap();
        let g = build_group(&GroupSpec::cyclic(3)).unwrap();
        let phi = SparseVec::unit(3, 1, ses.small());
        assert!(matches!(beta_group(&g, &ses, 1, &phi, false), Err(Error::NotACocycle(_))));
    }

    #[test]
    fn degree_zero_vanishes() {
        let ses = make_ses(3).unwrap();
        let g = build_group(&GroupSpec::symmetric(3)).unwrap();
        let phi = SparseVec::unit(1, 0, ses.small());
        assert!(beta_group(&g, &ses, 0, &phi, true).unwrap().is_zero());
        let class_sum = SparseVec::from_pairs(6, g.class_data().classes[2].iter().map(|&i| (i, ses.small().one())));
        assert!(bockstein_hochschild(&g, &ses, 0, &class_sum).unwrap().is_zero());
    }

    #[test]
    fn squares_commute_for_z3() {
        let g = build_group(&GroupSpec::cyclic(3)).unwrap();
        let c = Connecting::new(g, make_ses(3).unwrap());
        for n in 0..=1 {
            let beta = c.verify_beta(n).unwrap();
            assert!(beta.pass, "{:?}", beta.witnesses);
            let square = c.verify_square(n).unwrap();
            assert!(square.pass, "{:?}", square.witnesses);
        }
    }
}
