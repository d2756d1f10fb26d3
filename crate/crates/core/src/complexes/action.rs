use crate::error::Result;
use crate::linalg::SparseMatrix;
use crate::report::Checks;

use super::CochainComplex;

/// Matrix identities of the `Σ_{n+1}`-action in degree `n`: the Coxeter
/// relations on `C^n`, the interchange rules between `σ_i` on `C^n` and the
/// faces `d_j: C^{n−1} → C^n`, and `δ(CS^{n−1}) ⊆ CS^n`.
pub fn action_identities<C: CochainComplex>(c: &C, n: usize, name: &str) -> Result<Checks> {
    let mut checks = Checks::new();
    if n == 0 {
        return Ok(checks);
    }
    let lab = |k: usize| move |i: usize| c.basis_label(k, i);
    let sig: Vec<SparseMatrix> = (1..=n).map(|i| c.sigma(n, i)).collect::<Result<_>>()?;
    let id = SparseMatrix::identity(c.dim(n)?, c.domain());
    for (i, s) in sig.iter().enumerate() {
        let i = i + 1;
        checks.matrices_equal(&format!("{name} sigma_{i}^2"), &s.mul(s)?, &id, lab(n), lab(n));
        if i < n {
            let t = &sig[i];
            checks.matrices_equal(
                &format!("{name} braid {i}"),
                &s.mul(t)?.mul(s)?,
                &t.mul(s)?.mul(t)?,
                lab(n),
                lab(n),
            );
        }
        for (j, t) in sig.iter().enumerate().skip(i + 1) {
            checks.matrices_equal(
                &format!("{name} sigma_{i} sigma_{} commute", j + 1),
                &s.mul(t)?,
                &t.mul(s)?,
                lab(n),
                lab(n),
            );
        }
    }
    let lower: Vec<SparseMatrix> = (1..n).map(|i| c.sigma(n - 1, i)).collect::<Result<_>>()?;
    let faces: Vec<SparseMatrix> = (0..=n).map(|j| c.face(n - 1, j)).collect::<Result<_>>()?;
    for i in 1..=n {
        for j in 0..=n {
            let lhs = sig[i - 1].mul(&faces[j])?;
            let rhs = if i < j {
                faces[j].mul(&lower[i - 1])?
            } else if i >= j + 2 {
                faces[j].mul(&lower[i - 2])?
            } else if i == j {
                faces[i - 1].neg()
            } else {
                faces[i].neg()
            };
            checks.matrices_equal(&format!("{name} sigma_{i} d_{j}"), &lhs, &rhs, lab(n), lab(n - 1));
        }
    }
    let below = c.invariants(n - 1)?;
    let here = c.invariants(n)?;
    let image = c.differential(n - 1)?.restrict(below.basis())?;
    let mut contained = true;
    for v in image.columns() {
        contained &= here.contains(v)?;
    }
    checks.record(contained, || format!("{name}: differential leaves the invariant subcomplex in degree {n}"));
    Ok(checks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexes::{GroupComplex, HochschildComplex, ModuleAction};
    use crate::groups::{build_group, GroupSpec};
    use crate::linalg::Domain;
    use crate::twisted::{make_cocycle, CocycleSpec, ScalarLiteral, TwistedAlgebra};

    #[test]
    fn identities_hold_on_twisted_klein() {
        let g = build_group(&GroupSpec::klein()).unwrap();
        let f5 = Domain::prime_field(5).unwrap();
        let spec = CocycleSpec::Pairing {
            zeta: ScalarLiteral::Int(4),
        };
        let alpha = make_cocycle(&g, &spec, f5).unwrap();
        let alg = TwistedAlgebra::new(g.clone(), alpha).unwrap();
        let hoch = HochschildComplex::new(alg.clone());
        let conj = GroupComplex::new(g, ModuleAction::conjugation(&alg));
        for n in 1..=3 {
            let a = action_identities(&hoch, n, "HH").unwrap();
            assert!(a.all_passed(), "{:?}", a.witnesses);
            let b = action_identities(&conj, n, "H").unwrap();
            assert!(b.all_passed(), "{:?}", b.witnesses);
        }
    }

    #[test]
    fn identities_hold_on_s3() {
        let g = build_group(&GroupSpec::symmetric(3)).unwrap();
        let f7 = Domain::prime_field(7).unwrap();
        let hoch = HochschildComplex::new(TwistedAlgebra::group_algebra(g.clone(), f7));
        let triv = GroupComplex::trivial(g, f7);
        for n in 1..=2 {
            let a = action_identities(&hoch, n, "HH").unwrap();
            assert!(a.all_passed(), "{:?}", a.witnesses);
            let b = action_identities(&triv, n, "H").unwrap();
            assert!(b.all_passed(), "{:?}", b.witnesses);
        }
    }
}
