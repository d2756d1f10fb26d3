use crate::error::{Error, Result};
use crate::groups::FiniteGroup;
use crate::linalg::{Domain, Scalar};
use crate::twisted::{CharacterModule, TwistedAlgebra};

use super::{CochainComplex, TupleBasis, DEFAULT_BUDGET};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ModuleKind {
    Trivial,
    Character,
    Conjugation,
}

/// A finite-dimensional module on which every group element acts monomially:
/// `h · e_b = c · e_{π_h(b)}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleAction {
    kind: ModuleKind,
    domain: Domain,
    dim: usize,
    /// `action[h][b] = (π_h(b), c)`
    action: Vec<Vec<(usize, Scalar)>>,
    /// `preimage[h][b'] = (b, c)` with `π_h(b) = b'`
    preimage: Vec<Vec<(usize, Scalar)>>,
    labels: Vec<String>,
}

impl ModuleAction {
    /// Checks that `action` is a group action of `group` and indexes it.
    pub fn new(
        group: &FiniteGroup,
        kind: ModuleKind,
        domain: Domain,
        action: Vec<Vec<(usize, Scalar)>>,
        labels: Vec<String>,
    ) -> Result<Self> {
        let dim = labels.len();
        if action.len() != group.order() || action.iter().any(|a| a.len() != dim) {
            return Err(Error::DimensionMismatch("module action table has the wrong shape".into()));
        }
        let mut preimage = vec![vec![(usize::MAX, domain.zero()); dim]; group.order()];
        for (h, row) in action.iter().enumerate() {
            for (b, (image, c)) in row.iter().enumerate() {
                if *image >= dim || preimage[h][*image].0 != usize::MAX || !c.is_unit() {
                    return Err(Error::BadSpec(format!("element {h} does not act invertibly")));
                }
                preimage[h][*image] = (b, c.clone());
            }
        }
        for h1 in group.elements() {
            for h2 in group.elements() {
                for b in 0..dim {
                    let (b2, c2) = &action[h2][b];
                    let (b1, c1) = &action[h1][*b2];
                    let (b12, c12) = &action[group.mul(h1, h2)][b];
                    if b1 != b12 || &(c1 * c2) != c12 {
                        return Err(Error::NotMultiplicative(h1, h2));
                    }
                }
            }
        }
        Ok(ModuleAction {
            kind,
            domain,
            dim,
            action,
            preimage,
            labels,
        })
    }

    /// The trivial module `k`.
    pub fn trivial(group: &FiniteGroup, domain: Domain) -> Self {
        let action = vec![vec![(0, domain.one())]; group.order()];
        ModuleAction::new(group, ModuleKind::Trivial, domain, action, vec!["1".into()])
            .expect("the trivial action is an action")
    }

    /// The one-dimensional module `kx̄` over the centralizer `group`, whose
    /// local element `i` is `module.centralizer[i]`.
    pub fn character(group: &FiniteGroup, module: &CharacterModule, x_label: &str) -> Result<Self> {
        let domain = module
            .chi
            .first()
            .map(Scalar::domain)
            .ok_or_else(|| Error::BadSpec("empty character".into()))?;
        let action = module.chi.iter().map(|c| vec![(0, c.clone())]).collect();
        ModuleAction::new(group, ModuleKind::Character, domain, action, vec![x_label.to_string()])
    }

    /// `k_αG` with `ᵍm = ḡ · m · ḡ⁻¹`:
    /// `ḡ b̄ ḡ⁻¹ = α(g, b) α(g, g⁻¹)⁻¹ α(gb, g⁻¹) (g b g⁻¹)‾`.
    pub fn conjugation(alg: &TwistedAlgebra) -> Self {
        let g = alg.group();
        let action = g
            .elements()
            .map(|h| {
                let hi = g.inv(h);
                g.elements()
                    .map(|b| {
                        let hb = g.mul(h, b);
                        let (c, _) = alg.basis_inverse_mono(h);
                        let c = &(alg.alpha(h, b) * &c) * alg.alpha(hb, hi);
                        (g.mul(hb, hi), c)
                    })
                    .collect()
            })
            .collect();
        ModuleAction::new(g, ModuleKind::Conjugation, alg.domain(), action, g.labels().to_vec())
            .expect("conjugation is an action")
    }

    pub fn kind(&self) -> ModuleKind {
        self.kind
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `h · e_b = c · e_{b'}`, returned as `(b', c)`.
    pub fn act(&self, h: usize, b: usize) -> &(usize, Scalar) {
        &self.action[h][b]
    }

    /// The `(b, c)` with `h · e_b = c · e_{b'}`.
    pub fn preimage(&self, h: usize, b_out: usize) -> &(usize, Scalar) {
        &self.preimage[h][b_out]
    }

    pub fn label(&self, b: usize) -> &str {
        &self.labels[b]
    }

    /// Same permutation data with every coefficient sent through `f`.
    pub fn map_coefficients(&self, domain: Domain, f: impl Fn(&Scalar) -> Scalar) -> Self {
        let conv = |t: &Vec<Vec<(usize, Scalar)>>| {
            t.iter()
                .map(|row| row.iter().map(|(b, c)| (*b, f(c))).collect())
                .collect()
        };
        ModuleAction {
            kind: self.kind,
            domain,
            dim: self.dim,
            action: conv(&self.action),
            preimage: conv(&self.preimage),
            labels: self.labels.clone(),
        }
    }
}

/// The standard complex `C^n(H, A)` of inhomogeneous cochains, on the basis
/// of pairs `((h_1, …, h_n), e_b)`.
#[derive(Clone, Debug)]
pub struct GroupComplex {
    group: FiniteGroup,
    module: ModuleAction,
    budget: u128,
}

impl GroupComplex {
    pub fn new(group: FiniteGroup, module: ModuleAction) -> Self {
        GroupComplex {
            group,
            module,
            budget: DEFAULT_BUDGET,
        }
    }

    pub fn trivial(group: FiniteGroup, domain: Domain) -> Self {
        let module = ModuleAction::trivial(&group, domain);
        GroupComplex::new(group, module)
    }

    pub fn with_budget(mut self, budget: u128) -> Self {
        self.budget = budget;
        self
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn module(&self) -> &ModuleAction {
        &self.module
    }

    fn encode(&self, n: usize, tuple: &[usize], b: usize) -> usize {
        TupleBasis::new(self.group.order(), n, self.module.dim()).encode(tuple, b)
    }
}

impl CochainComplex for GroupComplex {
    fn domain(&self) -> Domain {
        self.module.domain()
    }

    fn budget(&self) -> u128 {
        self.budget
    }

    fn group_order(&self) -> usize {
        self.group.order()
    }

    fn fiber(&self) -> usize {
        self.module.dim()
    }

    fn face_entry(&self, n: usize, j: usize, g: &[usize], b: usize) -> (usize, Scalar) {
        let one = self.domain().one();
        if j == 0 {
            let (src, c) = self.module.preimage(g[0], b);
            (self.encode(n, &g[1..], *src), c.clone())
        } else if j == n + 1 {
            (self.encode(n, &g[..n], b), one)
        } else {
            let mut t = Vec::with_capacity(n);
            t.extend_from_slice(&g[..j - 1]);
            t.push(self.group.mul(g[j - 1], g[j]));
            t.extend_from_slice(&g[j + 1..]);
            (self.encode(n, &t, b), one)
        }
    }

    fn sigma_entry(&self, n: usize, i: usize, g: &[usize], b: usize) -> (usize, Scalar) {
        let grp = &self.group;
        let inv = |h: usize| grp.inv(h);
        let minus_one = -self.domain().one();
        let mut t = g.to_vec();
        if i == 1 {
            // −g_1 · ψ(g_1⁻¹, g_1 g_2, g_3, …); for n = 1, −g · ψ(g⁻¹)
            t[0] = inv(g[0]);
            if n > 1 {
                t[1] = grp.mul(g[0], g[1]);
            }
            let (src, c) = self.module.preimage(g[0], b);
            (self.encode(n, &t, *src), -c.clone())
        } else if i == n {
            // −ψ(…, g_{n−1} g_n, g_n⁻¹)
            t[n - 2] = grp.mul(g[n - 2], g[n - 1]);
            t[n - 1] = inv(g[n - 1]);
            (self.encode(n, &t, b), minus_one)
        } else {
            // −ψ(…, g_{i−1} g_i, g_i⁻¹, g_i g_{i+1}, …)
            let (p, q, r) = (g[i - 2], g[i - 1], g[i]);
            t[i - 2] = grp.mul(p, q);
            t[i - 1] = inv(q);
            t[i] = grp.mul(q, r);
            (self.encode(n, &t, b), minus_one)
        }
    }

    fn element_label(&self, g: usize) -> String {
        self.group.label(g).to_string()
    }

    fn fiber_label(&self, b: usize) -> String {
        self.module.label(b).to_string()
    }
}
