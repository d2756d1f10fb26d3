use crate::error::{Error, Result};

use super::FiniteGroup;

/// Conjugacy classes with a fixed system of representatives `X`.
///
/// Representatives are ordered identity first, then by (class size,
/// smallest element). Each class is represented by its smallest element, so
/// central elements represent themselves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassData {
    pub reps: Vec<usize>,
    /// element -> position of its class in `reps`
    pub class_index: Vec<usize>,
    /// members of each class, increasing
    pub classes: Vec<Vec<usize>>,
    /// centralizer of each representative, increasing
    pub centralizers: Vec<Vec<usize>>,
}

impl ClassData {
    pub fn new(g: &FiniteGroup) -> Self {
        let n = g.order();
        let mut seen = vec![false; n];
        let mut found: Vec<Vec<usize>> = Vec::new();
        for x in g.elements() {
            if seen[x] {
                continue;
            }
            let mut class: Vec<usize> = g.elements().map(|h| g.conj(x, h)).collect();
            class.sort_unstable();
            class.dedup();
            for &y in &class {
                seen[y] = true;
            }
            found.push(class);
        }
        found.sort_by_key(|c| (c.len(), c[0]));
        let mut class_index = vec![0; n];
        for (i, c) in found.iter().enumerate() {
            for &y in c {
                class_index[y] = i;
            }
        }
        let reps: Vec<usize> = found.iter().map(|c| c[0]).collect();
        let centralizers = reps.iter().map(|&x| g.centralizer(x)).collect();
        ClassData {
            reps,
            class_index,
            classes: found,
            centralizers,
        }
    }

    pub fn num_classes(&self) -> usize {
        self.reps.len()
    }

    /// Representative of the class of `g`.
    pub fn rep_of(&self, g: usize) -> usize {
        self.reps[self.class_index[g]]
    }

    pub fn position(&self, x: usize) -> Result<usize> {
        self.reps
            .iter()
            .position(|&r| r == x)
            .ok_or(Error::NotARepresentative(x))
    }

    pub fn centralizer_of(&self, x: usize) -> Result<&[usize]> {
        Ok(&self.centralizers[self.position(x)?])
    }

    pub fn class_of_rep(&self, x: usize) -> Result<&[usize]> {
        Ok(&self.classes[self.position(x)?])
    }

    /// Representatives lying in the center (singleton classes).
    pub fn central_reps(&self) -> Vec<usize> {
        self.reps
            .iter()
            .zip(&self.classes)
            .filter(|(_, c)| c.len() == 1)
            .map(|(&x, _)| x)
            .collect()
    }
}

/// A right transversal `γ_1 = 1, …, γ_m` of `C_G(x)` in `G`, together with
/// the conjugates `x_j = γ_j⁻¹ x γ_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Transversal {
    pub x: usize,
    pub gammas: Vec<usize>,
    pub conjugates: Vec<usize>,
    coset_of: Vec<usize>,
    gamma_inv: Vec<usize>,
}

impl Transversal {
    /// Greedy transversal: scan elements in index order and open a coset at
    /// each uncovered element.
    pub fn new(g: &FiniteGroup, classes: &ClassData, x: usize) -> Result<Self> {
        let order: Vec<usize> = g.elements().collect();
        Self::with_scan_order(g, classes, x, &order)
    }

    /// Same greedy scan over a custom element order, which must start with
    /// the identity.
    pub fn with_scan_order(
        g: &FiniteGroup,
        classes: &ClassData,
        x: usize,
        scan: &[usize],
    ) -> Result<Self> {
        let centralizer = classes.centralizer_of(x)?;
        super::check_relabeling(scan, g.order())?;
        let mut coset_of = vec![usize::MAX; g.order()];
        let mut gammas = Vec::new();
        for &s in scan {
            if coset_of[s] != usize::MAX {
                continue;
            }
            let j = gammas.len();
            for &h in centralizer {
                coset_of[g.mul(h, s)] = j;
            }
            gammas.push(s);
        }
        let conjugates = gammas.iter().map(|&gj| g.conj(x, gj)).collect();
        let gamma_inv = gammas.iter().map(|&gj| g.inv(gj)).collect();
        Ok(Transversal {
            x,
            gammas,
            conjugates,
            coset_of,
            gamma_inv,
        })
    }

    /// Number of cosets `n_x`, equal to the class size of `x`.
    pub fn len(&self) -> usize {
        self.gammas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gammas.is_empty()
    }

    /// Index `j` of the coset `C_G(x)γ_j` containing `g`.
    pub fn coset_of(&self, g: usize) -> usize {
        self.coset_of[g]
    }

    /// The unique `(h, s)` with `h ∈ C_G(x)` and `γ_j g = h γ_s`.
    pub fn walk(&self, group: &FiniteGroup, j: usize, g: usize) -> (usize, usize) {
        let t = group.mul(self.gammas[j], g);
        let s = self.coset_of[t];
        (group.mul(t, self.gamma_inv[s]), s)
    }

    /// Iterates [`Transversal::walk`] along a word starting at coset `j`:
    /// returns the centralizer letters `h_{j,1..n}` and the final coset.
    pub fn walk_word(&self, group: &FiniteGroup, j: usize, word: &[usize]) -> (Vec<usize>, usize) {
        let mut s = j;
        let mut hs = Vec::with_capacity(word.len());
        for &g in word {
            let (h, next) = self.walk(group, s, g);
            hs.push(h);
            s = next;
        }
        (hs, s)
    }
}

/// Free function form of [`Transversal::new`].
pub fn transversal(g: &FiniteGroup, classes: &ClassData, x: usize) -> Result<Transversal> {
    Transversal::new(g, classes, x)
}

/// Free function form of [`Transversal::walk`].
pub fn coset_walk(g: &FiniteGroup, t: &Transversal, j: usize, elem: usize) -> (usize, usize) {
    t.walk(g, j, elem)
}

#[cfg(test)]
mod tests {
    use super::super::{build_group, GroupSpec};
    use super::*;

    fn brute_centralizer_order(g: &FiniteGroup, x: usize) -> usize {
        g.elements().filter(|&h| g.mul(h, x) == g.mul(x, h)).count()
    }

    #[test]
    fn klein_classes_are_central() {
        let g = build_group(&GroupSpec::klein()).unwrap();
        let c = g.class_data();
        assert_eq!(c.num_classes(), 4);
        assert_eq!(c.central_reps().len(), 4);
    }

    #[test]
    fn s3_classes() {
        let g = build_group(&GroupSpec::symmetric(3)).unwrap();
        let c = g.class_data();
        assert_eq!(c.num_classes(), 3);
        assert_eq!(c.reps[0], 0);
        let orders: Vec<usize> = c.reps.iter().map(|&x| brute_centralizer_order(&g, x)).collect();
        // identity, then the 2-element class of 3-cycles, then the 3 transpositions
        assert_eq!(orders, vec![6, 3, 2]);
        for (x, cent) in c.reps.iter().zip(&c.centralizers) {
            assert_eq!(cent.len(), brute_centralizer_order(&g, *x));
        }
    }

    #[test]
    fn quaternion_classes() {
        let g = build_group(&GroupSpec::quaternion8()).unwrap();
        let c = g.class_data();
        assert_eq!(c.num_classes(), 5);
        assert_eq!(g.center().len(), 2);
    }

    #[test]
    fn identity_transversal() {
        let g = build_group(&GroupSpec::symmetric(3)).unwrap();
        let c = g.class_data();
        let t = Transversal::new(&g, &c, 0).unwrap();
        assert_eq!(t.gammas, vec![0]);
    }

    #[test]
    fn transposition_transversal() {
        let g = build_group(&GroupSpec::symmetric(3)).unwrap();
        let c = g.class_data();
        let x = *c.reps.last().unwrap();
        let t = Transversal::new(&g, &c, x).unwrap();
        assert_eq!(t.len(), 3);
        assert_eq!(t.gammas[0], 0);
        let mut conj = t.conjugates.clone();
        conj.sort_unstable();
        let mut transpositions: Vec<usize> =
            g.elements().filter(|&y| y != 0 && g.mul(y, y) == 0).collect();
        transpositions.sort_unstable();
        assert_eq!(conj, transpositions);
        // γ_2 · (3-cycle) = h · γ_s, verified by re-multiplication
        let three_cycle = c.reps[1];
        let (h, s) = t.walk(&g, 1, three_cycle);
        assert!(g.commute(h, x));
        assert_eq!(g.mul(t.gammas[1], three_cycle), g.mul(h, t.gammas[s]));
    }

    #[test]
    fn non_representative_rejected() {
        let g = build_group(&GroupSpec::symmetric(3)).unwrap();
        let c = g.class_data();
        let non_rep = c.classes.last().unwrap()[1];
        assert_eq!(
            Transversal::new(&g, &c, non_rep),
            Err(Error::NotARepresentative(non_rep))
        );
    }

    #[test]
    fn central_transversal_is_trivial() {
        let g = build_group(&GroupSpec::quaternion8()).unwrap();
        let c = g.class_data();
        let t = Transversal::new(&g, &c, 1).unwrap();
        assert_eq!(t.len(), 1);
    }
}
