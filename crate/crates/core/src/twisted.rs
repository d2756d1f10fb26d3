//! Normalized 2-cocycles `α: G×G → k^×`, the twisted group algebra `k_αG`
//! on the basis `{ḡ}` and the one-dimensional centralizer modules `kx̄`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groups::{ClassData, FiniteGroup};
use crate::linalg::{Domain, Scalar, SparseVec};

/// A scalar given either as an integer or as a literal string (`"1/2"`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ScalarLiteral {
    Int(i64),
    Text(String),
}

impl ScalarLiteral {
    pub fn parse(&self, domain: Domain) -> Result<Scalar> {
        match self {
            ScalarLiteral::Int(v) => Ok(domain.from_i64(*v)),
            ScalarLiteral::Text(s) => domain.parse(s),
        }
    }
}

/// JSON cocycle description: `{"kind":"trivial"}`,
/// `{"kind":"pairing","zeta":"4"}` or `{"kind":"table","values":[[...]]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum CocycleSpec {
    #[default]
    Trivial,
    Pairing {
        zeta: ScalarLiteral,
    },
    Table {
        values: Vec<Vec<ScalarLiteral>>,
    },
}

/// A normalized 2-cocycle stored as its full `|G|×|G|` table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cocycle2 {
    order: usize,
    domain: Domain,
    values: Vec<Scalar>,
    trivial: bool,
}

impl Cocycle2 {
    pub fn trivial(g: &FiniteGroup, domain: Domain) -> Self {
        let n = g.order();
        Cocycle2 {
            order: n,
            domain,
            values: vec![domain.one(); n * n],
            trivial: true,
        }
    }

    /// Validates `values[g][h] = α(g, h)` against the cocycle identity over
    /// every triple and the normalization conditions.
    pub fn from_table(g: &FiniteGroup, domain: Domain, values: Vec<Vec<Scalar>>) -> Result<Self> {
        let n = g.order();
        if values.len() != n || values.iter().any(|r| r.len() != n) {
            return Err(Error::BadSpec(format!("cocycle table must be {n}x{n}")));
        }
        let values: Vec<Scalar> = values.into_iter().flatten().collect();
        for v in &values {
            if v.domain() != domain {
                return Err(Error::DomainMismatch(domain.label(), v.domain().label()));
            }
        }
        let a = |x: usize, y: usize| &values[x * n + y];
        for x in g.elements() {
            if !a(x, 0).is_one() || !a(0, x).is_one() {
                return Err(Error::NotACocycle(format!(
                    "not normalized: alpha(g,1) or alpha(1,g) differs from 1 at g = {}",
                    g.label(x)
                )));
            }
        }
        for x in g.elements() {
            for y in g.elements() {
                if !a(x, y).is_unit() {
                    return Err(Error::NotACocycle(format!(
                        "alpha({}, {}) = {} is not a unit",
                        g.label(x),
                        g.label(y),
                        a(x, y)
                    )));
                }
            }
        }
        for x in g.elements() {
            for y in g.elements() {
                for z in g.elements() {
                    let lhs = a(x, g.mul(y, z)) * a(y, z);
                    let rhs = a(g.mul(x, y), z) * a(x, y);
                    if lhs != rhs {
                        return Err(Error::NotACocycle(format!(
                            "cocycle identity fails at ({}, {}, {})",
                            g.label(x),
                            g.label(y),
                            g.label(z)
                        )));
                    }
                }
            }
        }
        for x in g.elements() {
            let xi = g.inv(x);
            if a(x, xi) != a(xi, x) {
                return Err(Error::NotACocycle(format!(
                    "alpha(g, g^-1) != alpha(g^-1, g) at g = {}",
                    g.label(x)
                )));
            }
        }
        let trivial = values.iter().all(Scalar::is_one);
        Ok(Cocycle2 {
            order: n,
            domain,
            values,
            trivial,
        })
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn value(&self, g: usize, h: usize) -> &Scalar {
        &self.values[g * self.order + h]
    }

    pub fn is_trivial(&self) -> bool {
        self.trivial
    }

    pub fn table(&self) -> Vec<Vec<Scalar>> {
        self.values.chunks(self.order).map(<[Scalar]>::to_vec).collect()
    }

    /// Transports the cocycle along a group relabeling `old -> perm[old]`.
    pub fn relabel(&self, perm: &[usize]) -> Cocycle2 {
        let n = self.order;
        let mut values = vec![self.domain.one(); n * n];
        for g in 0..n {
            for h in 0..n {
                values[perm[g] * n + perm[h]] = self.value(g, h).clone();
            }
        }
        Cocycle2 {
            values,
            ..self.clone()
        }
    }
}

/// Side length `n` if `g` is ℤ/n×ℤ/n with `(a, b)` at index `a·n + b`.
fn cyclic_square_side(g: &FiniteGroup) -> Option<usize> {
    let order = g.order();
    let n = (1..=order).find(|k| k * k >= order)?;
    if n * n != order {
        return None;
    }
    for x in 0..order {
        for y in 0..order {
            let (a, b) = (x / n, x % n);
            let (c, d) = (y / n, y % n);
            if g.mul(x, y) != ((a + c) % n) * n + (b + d) % n {
                return None;
            }
        }
    }
    Some(n)
}

/// Builds and validates the cocycle described by `spec` over `domain`.
pub fn make_cocycle(g: &FiniteGroup, spec: &CocycleSpec, domain: Domain) -> Result<Cocycle2> {
    match spec {
        CocycleSpec::Trivial => Ok(Cocycle2::trivial(g, domain)),
        CocycleSpec::Pairing { zeta } => {
            let n = cyclic_square_side(g).ok_or_else(|| {
                Error::WrongGroupShape(format!("group of order {} with index layout a*n+b", g.order()))
            })?;
            let zeta = zeta.parse(domain)?;
            if !zeta.pow(n as u64).is_one() {
                return Err(Error::BadRoot(format!("{zeta}^{n} != 1 in {domain}")));
            }
            let values = (0..g.order())
                .map(|x| {
                    (0..g.order())
                        .map(|y| zeta.pow(((x % n) * (y / n)) as u64))
                        .collect()
                })
                .collect();
            Cocycle2::from_table(g, domain, values)
        }
        CocycleSpec::Table { values } => {
            let parsed = values
                .iter()
                .map(|r| r.iter().map(|v| v.parse(domain)).collect::<Result<Vec<_>>>())
                .collect::<Result<Vec<_>>>()?;
            Cocycle2::from_table(g, domain, parsed)
        }
    }
}

/// A scalar multiple of one basis element, `c · ḡ`.
pub type Monomial = (Scalar, usize);

/// The twisted group algebra `k_αG`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistedAlgebra {
    group: FiniteGroup,
    alpha: Cocycle2,
}

/// An element of `k_αG` in the basis `{ḡ}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraElement {
    coeffs: SparseVec,
}

impl AlgebraElement {
    pub fn basis(alg: &TwistedAlgebra, g: usize) -> Self {
        AlgebraElement {
            coeffs: SparseVec::unit(alg.dim(), g, alg.domain()),
        }
    }

    pub fn from_coeffs(coeffs: SparseVec) -> Self {
        AlgebraElement { coeffs }
    }

    pub fn coeffs(&self) -> &SparseVec {
        &self.coeffs
    }

    pub fn coeff(&self, g: usize) -> Option<&Scalar> {
        self.coeffs.get(g)
    }

    pub fn add(&self, other: &AlgebraElement) -> AlgebraElement {
        AlgebraElement {
            coeffs: self.coeffs.add(&other.coeffs),
        }
    }

    pub fn scale(&self, c: &Scalar) -> AlgebraElement {
        AlgebraElement {
            coeffs: self.coeffs.scale(c),
        }
    }
}

impl TwistedAlgebra {
    pub fn new(group: FiniteGroup, alpha: Cocycle2) -> Result<Self> {
        if alpha.order() != group.order() {
            return Err(Error::DimensionMismatch(format!(
                "cocycle on {} elements for a group of order {}",
                alpha.order(),
                group.order()
            )));
        }
        Ok(TwistedAlgebra { group, alpha })
    }

    /// The untwisted group algebra `kG`.
    pub fn group_algebra(group: FiniteGroup, domain: Domain) -> Self {
        let alpha = Cocycle2::trivial(&group, domain);
        TwistedAlgebra { group, alpha }
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn cocycle(&self) -> &Cocycle2 {
        &self.alpha
    }

    pub fn domain(&self) -> Domain {
        self.alpha.domain()
    }

    pub fn dim(&self) -> usize {
        self.group.order()
    }

    #[inline]
    pub fn alpha(&self, g: usize, h: usize) -> &Scalar {
        self.alpha.value(g, h)
    }

    /// `ḡ · h̄ = α(g,h) · (gh)‾`.
    pub fn basis_product(&self, g: usize, h: usize) -> Monomial {
        (self.alpha(g, h).clone(), self.group.mul(g, h))
    }

    pub fn mono_mul(&self, a: &Monomial, b: &Monomial) -> Monomial {
        let (c, gh) = self.basis_product(a.1, b.1);
        (&(&a.0 * &b.0) * &c, gh)
    }

    /// `(ḡ)⁻¹ = α(g, g⁻¹)⁻¹ · (g⁻¹)‾`.
    pub fn basis_inverse_mono(&self, g: usize) -> Monomial {
        let gi = self.group.inv(g);
        let c = self
            .alpha(g, gi)
            .inverse()
            .expect("cocycle values are units");
        (c, gi)
    }

    pub fn basis_inverse(&self, g: usize) -> AlgebraElement {
        let (c, gi) = self.basis_inverse_mono(g);
        AlgebraElement::basis(self, gi).scale(&c)
    }

    /// Product `ḡ_1 · … · ḡ_n` of basis elements (the empty word gives `1̄`).
    pub fn word(&self, gs: &[usize]) -> Monomial {
        gs.iter()
            .fold((self.domain().one(), 0), |acc, &g| {
                self.mono_mul(&acc, &(self.domain().one(), g))
            })
    }

    /// `ḡ_n⁻¹ · … · ḡ_1⁻¹`, the inverse of [`TwistedAlgebra::word`].
    pub fn inverse_word(&self, gs: &[usize]) -> Monomial {
        gs.iter().rev().fold((self.domain().one(), 0), |acc, &g| {
            self.mono_mul(&acc, &self.basis_inverse_mono(g))
        })
    }

    pub fn product(&self, a: &AlgebraElement, b: &AlgebraElement) -> Result<AlgebraElement> {
        let n = self.dim();
        if a.coeffs.dim() != n || b.coeffs.dim() != n {
            return Err(Error::DimensionMismatch("algebra element of wrong length".into()));
        }
        for v in a.coeffs.entries().iter().chain(b.coeffs.entries()) {
            if v.1.domain() != self.domain() {
                return Err(Error::DomainMismatch(self.domain().label(), v.1.domain().label()));
            }
        }
        let mut pairs = Vec::new();
        for (g, x) in a.coeffs.entries() {
            for (h, y) in b.coeffs.entries() {
                let (c, gh) = self.basis_product(*g, *h);
                pairs.push((gh, &(x * y) * &c));
            }
        }
        Ok(AlgebraElement {
            coeffs: SparseVec::from_pairs(n, pairs),
        })
    }

    /// The one-dimensional `kC_G(x)`-module `kx̄`, `h·x̄ = α(h,x)α(x,h)⁻¹ x̄`.
    pub fn character_module(&self, classes: &ClassData, x: usize) -> Result<CharacterModule> {
        let centralizer = classes.centralizer_of(x)?.to_vec();
        CharacterModule::new(self, x, centralizer)
    }
}

/// Free function form of [`TwistedAlgebra::product`].
pub fn twisted_product(
    alg: &TwistedAlgebra,
    a: &AlgebraElement,
    b: &AlgebraElement,
) -> Result<AlgebraElement> {
    alg.product(a, b)
}

/// `kx̄` as a character of `C_G(x)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterModule {
    pub x: usize,
    /// ambient elements of `C_G(x)`, increasing
    pub centralizer: Vec<usize>,
    /// `chi[i]` is the value on `centralizer[i]`
    pub chi: Vec<Scalar>,
}

impl CharacterModule {
    /// Evaluates the character on `centralizer` (any subgroup commuting with
    /// `x`) and checks it is multiplicative.
    pub fn new(alg: &TwistedAlgebra, x: usize, centralizer: Vec<usize>) -> Result<Self> {
        let g = alg.group();
        let chi: Vec<Scalar> = centralizer
            .iter()
            .map(|&h| {
                let inv = alg.alpha(x, h).inverse()?;
                Ok(alg.alpha(h, x) * &inv)
            })
            .collect::<Result<_>>()?;
        let pos = |h: usize| centralizer.binary_search(&h).ok();
        for (i, &a) in centralizer.iter().enumerate() {
            for (j, &b) in centralizer.iter().enumerate() {
                let Some(k) = pos(g.mul(a, b)) else {
                    return Err(Error::BadSpec("centralizer list is not closed".into()));
                };
                if chi[k] != &chi[i] * &chi[j] {
                    return Err(Error::NotMultiplicative(a, b));
                }
            }
        }
        Ok(CharacterModule { x, centralizer, chi })
    }

    pub fn is_trivial(&self) -> bool {
        self.chi.iter().all(Scalar::is_one)
    }
}
