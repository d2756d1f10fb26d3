use crate::linalg::{Domain, Scalar};
use crate::twisted::TwistedAlgebra;

use super::{CochainComplex, TupleBasis, DEFAULT_BUDGET};

/// The Hochschild complex `C^n(k_αG, k_αG)` on the basis of pairs
/// `(ḡ_1 ⊗ … ⊗ ḡ_n, ȳ)`, the coordinate being the coefficient of `ȳ` in
/// `φ(ḡ_1 ⊗ … ⊗ ḡ_n)`.
#[derive(Clone, Debug)]
pub struct HochschildComplex {
    alg: TwistedAlgebra,
    budget: u128,
}

impl HochschildComplex {
    pub fn new(alg: TwistedAlgebra) -> Self {
        HochschildComplex {
            alg,
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

    fn a(&self, g: usize, h: usize) -> &Scalar {
        self.alg.alpha(g, h)
    }

    fn inv_alpha(&self, g: usize) -> Scalar {
        let gi = self.alg.group().inv(g);
        self.a(g, gi).inverse().expect("cocycle values are units")
    }

    fn encode(&self, n: usize, tuple: &[usize], y: usize) -> usize {
        TupleBasis::new(self.group_order(), n, self.group_order()).encode(tuple, y)
    }
}

impl CochainComplex for HochschildComplex {
    fn domain(&self) -> Domain {
        self.alg.domain()
    }

    fn budget(&self) -> u128 {
        self.budget
    }

    fn group_order(&self) -> usize {
        self.alg.dim()
    }

    fn fiber(&self) -> usize {
        self.alg.dim()
    }

    fn face_entry(&self, n: usize, j: usize, g: &[usize], y: usize) -> (usize, Scalar) {
        let grp = self.alg.group();
        if j == 0 {
            // ḡ_1 · φ(ḡ_2 ⊗ …): ḡ_1 · z̄ = α(g_1, z) (g_1 z)‾ with g_1 z = y
            let z = grp.mul(grp.inv(g[0]), y);
            (self.encode(n, &g[1..], z), self.a(g[0], z).clone())
        } else if j == n + 1 {
            // φ(ḡ_1 ⊗ … ⊗ ḡ_n) · ḡ_{n+1}
            let z = grp.mul(y, grp.inv(g[n]));
            (self.encode(n, &g[..n], z), self.a(z, g[n]).clone())
        } else {
            let mut t = Vec::with_capacity(n);
            t.extend_from_slice(&g[..j - 1]);
            t.push(grp.mul(g[j - 1], g[j]));
            t.extend_from_slice(&g[j + 1..]);
            (self.encode(n, &t, y), self.a(g[j - 1], g[j]).clone())
        }
    }

    fn sigma_entry(&self, n: usize, i: usize, g: &[usize], y: usize) -> (usize, Scalar) {
        let grp = self.alg.group();
        let inv = |h: usize| grp.inv(h);
        if n == 1 {
            // −α(g, g⁻¹)⁻¹ · ḡ · φ((g⁻¹)‾) · ḡ; ḡ z̄ ḡ = α(g, z) α(gz, g) (gzg)‾
            let g1 = g[0];
            let z = grp.mul(grp.mul(inv(g1), y), inv(g1));
            let c = &(&self.inv_alpha(g1) * self.a(g1, z)) * self.a(grp.mul(g1, z), g1);
            return (self.encode(1, &[inv(g1)], z), -c);
        }
        let mut t = g.to_vec();
        if i == 1 {
            // −ḡ_1 · φ(ḡ_1⁻¹ ⊗ ḡ_1 ḡ_2 ⊗ …)
            t[0] = inv(g[0]);
            t[1] = grp.mul(g[0], g[1]);
            let z = grp.mul(inv(g[0]), y);
            let c = &(&self.inv_alpha(g[0]) * self.a(g[0], g[1])) * self.a(g[0], z);
            (self.encode(n, &t, z), -c)
        } else if i == n {
            // −φ(… ⊗ ḡ_{n−1} ḡ_n ⊗ ḡ_n⁻¹) · ḡ_n
            let (p, q) = (g[n - 2], g[n - 1]);
            t[n - 2] = grp.mul(p, q);
            t[n - 1] = inv(q);
            let z = grp.mul(y, inv(q));
            let c = &(self.a(p, q) * &self.inv_alpha(q)) * self.a(z, q);
            (self.encode(n, &t, z), -c)
        } else {
            // −φ(… ⊗ ḡ_{i−1} ḡ_i ⊗ ḡ_i⁻¹ ⊗ ḡ_i ḡ_{i+1} ⊗ …)
            let (p, q, r) = (g[i - 2], g[i - 1], g[i]);
            t[i - 2] = grp.mul(p, q);
            t[i - 1] = inv(q);
            t[i] = grp.mul(q, r);
            let c = &(self.a(p, q) * &self.inv_alpha(q)) * self.a(q, r);
            (self.encode(n, &t, y), -c)
        }
    }

    fn element_label(&self, g: usize) -> String {
        self.alg.group().label(g).to_string()
    }

    fn fiber_label(&self, y: usize) -> String {
        self.alg.group().label(y).to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{build_group, GroupSpec};
    use crate::linalg::SparseMatrix;
    use crate::twisted::{make_cocycle, CocycleSpec, ScalarLiteral};

    fn complex(spec: GroupSpec, p: u64) -> HochschildComplex {
        let g = build_group(&spec).unwrap();
        HochschildComplex::new(TwistedAlgebra::group_algebra(g, Domain::prime_field(p).unwrap()))
    }

    fn klein_twisted() -> HochschildComplex {
        let g = build_group(&GroupSpec::klein()).unwrap();
        let f5 = Domain::prime_field(5).unwrap();
        let spec = CocycleSpec::Pairing {
            zeta: ScalarLiteral::Int(4),
        };
        let alpha = make_cocycle(&g, &spec, f5).unwrap();
        HochschildComplex::new(TwistedAlgebra::new(g, alpha).unwrap())
    }

    #[test]
    fn squares_to_zero() {
        for c in [complex(GroupSpec::symmetric(3), 7), klein_twisted()] {
            for n in 0..2 {
                let dd = c.differential(n + 1).unwrap().mul(&c.differential(n).unwrap()).unwrap();
                assert!(dd.is_zero(), "n = {n}");
            }
        }
    }

    #[test]
    fn degree_zero_of_commutative_algebra() {
        let c = complex(GroupSpec::cyclic(2), 3);
        let d0 = c.differential(0).unwrap();
        assert!(d0.is_zero());
        assert_eq!(d0.kernel().unwrap().dim(), 2);
    }

    #[test]
    fn twisted_klein_center_is_one_dimensional() {
        let c = klein_twisted();
        assert_eq!(c.cohomology(0).unwrap().dim, 1);
    }

    #[test]
    fn s3_center_has_three_class_sums() {
        assert_eq!(complex(GroupSpec::symmetric(3), 7).cohomology(0).unwrap().dim, 3);
    }

    #[test]
    fn sigma_on_degree_one_of_z2() {
        // trivial α on ℤ/2: (σφ)(g)(y) = −φ(g⁻¹)(g⁻¹ y g⁻¹), a signed permutation
        let c = complex(GroupSpec::cyclic(2), 3);
        let s = c.sigma(1, 1).unwrap();
        let f3 = c.domain();
        let expected = SparseMatrix::from_triplets(
            4,
            4,
            f3,
            (0..2).flat_map(|g| (0..2).map(move |y| (2 * g + y, 2 * g + y, f3.from_i64(-1)))),
        )
        .unwrap();
        assert_eq!(s, expected);
    }

    #[test]
    fn sigma_is_an_involution() {
        let c = klein_twisted();
        for n in 1..=3 {
            let id = SparseMatrix::identity(c.dim(n).unwrap(), c.domain());
            for i in 1..=n {
                let s = c.sigma(n, i).unwrap();
                assert_eq!(s.mul(&s).unwrap(), id, "n = {n}, i = {i}");
            }
        }
    }

    #[test]
    fn budget_is_enforced() {
        let c = complex(GroupSpec::symmetric(3), 7).with_budget(100);
        assert!(matches!(c.differential(1), Err(crate::Error::TooLarge { needed: 216, budget: 100 })));
    }
}
