//! Finite groups as validated multiplication tables, with conjugacy classes,
//! centralizers and right transversals of centralizers.

mod classes;
mod families;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use classes::{coset_walk, transversal, ClassData, Transversal};

/// A finite group on the dense index set `0..order`, with `0` the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<usize>,
    inv: Vec<usize>,
    labels: Vec<String>,
}

/// Named group families accepted in a [`GroupSpec`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Cyclic,
    Dihedral,
    Symmetric,
    Klein,
    Quaternion8,
}

/// JSON group description, e.g. `{"family":"cyclic","n":6}`,
/// `{"product":[spec,spec]}` or `{"table":[[...]]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupSpec {
    Family {
        family: Family,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        n: Option<usize>,
    },
    Product {
        product: Vec<GroupSpec>,
    },
    Table {
        table: Vec<Vec<usize>>,
    },
}

impl GroupSpec {
    pub fn cyclic(n: usize) -> Self {
        GroupSpec::Family {
            family: Family::Cyclic,
            n: Some(n),
        }
    }

    pub fn symmetric(n: usize) -> Self {
        GroupSpec::Family {
            family: Family::Symmetric,
            n: Some(n),
        }
    }

    pub fn dihedral(n: usize) -> Self {
        GroupSpec::Family {
            family: Family::Dihedral,
            n: Some(n),
        }
    }

    pub fn klein() -> Self {
        GroupSpec::Family {
            family: Family::Klein,
            n: None,
        }
    }

    pub fn quaternion8() -> Self {
        GroupSpec::Family {
            family: Family::Quaternion8,
            n: None,
        }
    }

    pub fn product(a: GroupSpec, b: GroupSpec) -> Self {
        GroupSpec::Product {
            product: vec![a, b],
        }
    }
}

/// Builds and validates the group described by `spec`.
pub fn build_group(spec: &GroupSpec) -> Result<FiniteGroup> {
    match spec {
        GroupSpec::Family { family, n } => {
            let need_n = || n.ok_or_else(|| Error::BadSpec(format!("{family:?} needs \"n\"")));
            match family {
                Family::Cyclic => families::cyclic(need_n()?),
                Family::Dihedral => families::dihedral(need_n()?),
                Family::Symmetric => families::symmetric(need_n()?),
                Family::Klein => families::klein(),
                Family::Quaternion8 => families::quaternion8(),
            }
        }
        GroupSpec::Product { product } => {
            if product.len() != 2 {
                return Err(Error::BadSpec("a product takes exactly two factors".into()));
            }
            let a = build_group(&product[0])?;
            let b = build_group(&product[1])?;
            Ok(FiniteGroup::direct_product(&a, &b))
        }
        GroupSpec::Table { table } => FiniteGroup::from_table(table.clone()),
    }
}

impl FiniteGroup {
    /// Validates `rows[i][j] = index of g_i g_j`. Element 0 must be the
    /// identity; associativity is checked over all triples.
    pub fn from_table(rows: Vec<Vec<usize>>) -> Result<Self> {
        let n = rows.len();
        let labels = (0..n).map(|i| format!("g{i}")).collect();
        Self::from_rows_labeled(rows, labels)
    }

    pub(crate) fn from_rows_labeled(rows: Vec<Vec<usize>>, labels: Vec<String>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::BadSpec("empty multiplication table".into()));
        }
        for (i, r) in rows.iter().enumerate() {
            if r.len() != n {
                return Err(Error::NotAGroup {
                    reason: "table is not square",
                    a: i,
                    b: r.len(),
                    c: n,
                });
            }
            if let Some((j, &v)) = r.iter().enumerate().find(|(_, v)| **v >= n) {
                return Err(Error::NotAGroup {
                    reason: "entry out of range",
                    a: i,
                    b: j,
                    c: v,
                });
            }
        }
        let table: Vec<usize> = rows.into_iter().flatten().collect();
        let at = |a: usize, b: usize| table[a * n + b];
        for g in 0..n {
            if at(0, g) != g || at(g, 0) != g {
                return Err(Error::NotAGroup {
                    reason: "element 0 is not a two-sided identity",
                    a: 0,
                    b: g,
                    c: if at(0, g) != g { at(0, g) } else { at(g, 0) },
                });
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = at(a, b);
                for c in 0..n {
                    if at(ab, c) != at(a, at(b, c)) {
                        return Err(Error::NotAGroup {
                            reason: "associativity fails",
                            a,
                            b,
                            c,
                        });
                    }
                }
            }
        }
        let inv = (0..n)
            .map(|g| match (0..n).find(|&h| at(g, h) == 0) {
                Some(h) if at(h, g) == 0 => Ok(h),
                _ => Err(Error::NotAGroup {
                    reason: "element has no two-sided inverse",
                    a: g,
                    b: g,
                    c: 0,
                }),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(FiniteGroup {
            order: n,
            table,
            inv,
            labels,
        })
    }

    pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> FiniteGroup {
        let (m, k) = (a.order, b.order);
        let n = m * k;
        let mut table = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                let (x1, x2) = (x / k, x % k);
                let (y1, y2) = (y / k, y % k);
                table[x * n + y] = a.mul(x1, y1) * k + b.mul(x2, y2);
            }
        }
        let inv = (0..n).map(|x| a.inv(x / k) * k + b.inv(x % k)).collect();
        let labels = (0..n)
            .map(|x| format!("({},{})", a.label(x / k), b.label(x % k)))
            .collect();
        FiniteGroup {
            order: n,
            table,
            inv,
            labels,
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    /// `g⁻¹ x g`.
    pub fn conj(&self, x: usize, g: usize) -> usize {
        self.mul(self.inv(g), self.mul(x, g))
    }

    /// Product of a word, left to right; the empty word gives the identity.
    pub fn product(&self, word: &[usize]) -> usize {
        word.iter().fold(0, |acc, &g| self.mul(acc, g))
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn label(&self, g: usize) -> &str {
        &self.labels[g]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.order).map(<[usize]>::to_vec).collect()
    }

    pub fn commute(&self, a: usize, b: usize) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn is_abelian(&self) -> bool {
        self.elements()
            .all(|a| self.elements().all(|b| self.commute(a, b)))
    }

    pub fn is_central(&self, x: usize) -> bool {
        self.elements().all(|g| self.commute(x, g))
    }

    pub fn center(&self) -> Vec<usize> {
        self.elements().filter(|&x| self.is_central(x)).collect()
    }

    pub fn centralizer(&self, x: usize) -> Vec<usize> {
        self.elements().filter(|&g| self.commute(x, g)).collect()
    }

    pub fn class_data(&self) -> ClassData {
        ClassData::new(self)
    }

    /// The subgroup on `elements` (which must contain the identity and be
    /// closed), relabeled densely in increasing ambient order.
    pub fn subgroup(&self, elements: &[usize]) -> Result<Subgroup> {
        let mut embedding = elements.to_vec();
        embedding.sort_unstable();
        embedding.dedup();
        if embedding.first() != Some(&0) {
            return Err(Error::BadSpec("subgroup must contain the identity".into()));
        }
        let mut local = vec![None; self.order];
        for (i, &g) in embedding.iter().enumerate() {
            local[g] = Some(i);
        }
        let mut rows = Vec::with_capacity(embedding.len());
        for &a in &embedding {
            let mut row = Vec::with_capacity(embedding.len());
            for &b in &embedding {
                let ab = self.mul(a, b);
                row.push(local[ab].ok_or_else(|| {
                    Error::BadSpec(format!("subset not closed: {a}*{b} = {ab}"))
                })?);
            }
            rows.push(row);
        }
        let labels = embedding.iter().map(|&g| self.labels[g].clone()).collect();
        let group = FiniteGroup::from_rows_labeled(rows, labels)?;
        Ok(Subgroup {
            group,
            embedding,
            local,
        })
    }

    /// Applies the relabeling `old index -> perm[old]`; `perm[0]` must be 0.
    pub fn relabel(&self, perm: &[usize]) -> Result<FiniteGroup> {
        check_relabeling(perm, self.order)?;
        let n = self.order;
        let mut table = vec![0; n * n];
        let mut inv = vec![0; n];
        let mut labels = vec![String::new(); n];
        for a in 0..n {
            inv[perm[a]] = perm[self.inv(a)];
            labels[perm[a]] = self.labels[a].clone();
            for b in 0..n {
                table[perm[a] * n + perm[b]] = perm[self.mul(a, b)];
            }
        }
        Ok(FiniteGroup {
            order: n,
            table,
            inv,
            labels,
        })
    }
}

pub(crate) fn check_relabeling(perm: &[usize], n: usize) -> Result<()> {
    let mut seen = vec![false; n];
    if perm.len() != n || perm.first() != Some(&0) {
        return Err(Error::BadSpec("relabeling must fix the identity".into()));
    }
    for &p in perm {
        if p >= n || seen[p] {
            return Err(Error::BadSpec("relabeling is not a permutation".into()));
        }
        seen[p] = true;
    }
    Ok(())
}

/// A seeded random relabeling of `0..n` fixing the identity.
pub fn random_relabeling(n: usize, seed: u64) -> Vec<usize> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rest: Vec<usize> = (1..n).collect();
    rest.shuffle(&mut rng);
    std::iter::once(0).chain(rest).collect()
}

/// A subgroup together with its embedding into the ambient group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgroup {
    pub group: FiniteGroup,
    /// local index -> ambient index (increasing).
    pub embedding: Vec<usize>,
    local: Vec<Option<usize>>,
}

impl Subgroup {
    pub fn local_index(&self, ambient: usize) -> Option<usize> {
        self.local[ambient]
    }

    pub fn ambient(&self, local: usize) -> usize {
        self.embedding[local]
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_six_is_abelian() {
        let g = build_group(&GroupSpec::cyclic(6)).unwrap();
        assert_eq!(g.order(), 6);
        assert!(g.is_abelian());
    }

    #[test]
    fn monoid_table_is_rejected() {
        let err = FiniteGroup::from_table(vec![vec![0, 1], vec![1, 1]]).unwrap_err();
        assert!(matches!(err, Error::NotAGroup { .. }));
        let err = FiniteGroup::from_table(vec![vec![1, 0], vec![0, 0]]).unwrap_err();
        assert!(matches!(err, Error::NotAGroup { .. }));
    }

    #[test]
    fn non_associative_loop_is_rejected() {
        // a Latin square with identity 0 that is not associative (order-5 loop)
        let t = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        match FiniteGroup::from_table(t) {
            Err(Error::NotAGroup { reason, .. }) => assert_eq!(reason, "associativity fails"),
            other => panic!("expected NotAGroup, got {other:?}"),
        }
    }

    #[test]
    fn json_specs_parse() {
        let s: GroupSpec = serde_json::from_str(r#"{"family":"cyclic","n":6}"#).unwrap();
        assert_eq!(s, GroupSpec::cyclic(6));
        let s: GroupSpec = serde_json::from_str(r#"{"family":"klein"}"#).unwrap();
        assert_eq!(build_group(&s).unwrap().order(), 4);
        let s: GroupSpec = serde_json::from_str(
            r#"{"product":[{"family":"cyclic","n":2},{"family":"cyclic","n":3}]}"#,
        )
        .unwrap();
        assert!(build_group(&s).unwrap().is_abelian());
        let s: GroupSpec = serde_json::from_str(r#"{"table":[[0,1],[1,0]]}"#).unwrap();
        assert_eq!(build_group(&s).unwrap().order(), 2);
    }

    #[test]
    fn relabeling_preserves_structure() {
        let g = build_group(&GroupSpec::symmetric(3)).unwrap();
        let perm = random_relabeling(6, 7);
        let h = g.relabel(&perm).unwrap();
        for a in 0..6 {
            for b in 0..6 {
                assert_eq!(h.mul(perm[a], perm[b]), perm[g.mul(a, b)]);
            }
        }
        assert!(g.relabel(&[1, 0, 2, 3, 4, 5]).is_err());
    }

    #[test]
    fn centralizer_subgroup() {
        let g = build_group(&GroupSpec::symmetric(3)).unwrap();
        let t = (1..6).find(|&x| g.mul(x, x) == 0).unwrap();
        let c = g.subgroup(&g.centralizer(t)).unwrap();
        assert_eq!(c.order(), 2);
        assert_eq!(c.ambient(1), t);
        assert_eq!(c.local_index(t), Some(1));
    }
}
