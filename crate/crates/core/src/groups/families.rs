use crate::error::{Error, Result};

use super::FiniteGroup;

pub(super) fn cyclic(n: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::BadSpec("cyclic group of order 0".into()));
    }
    let rows = (0..n)
        .map(|a| (0..n).map(|b| (a + b) % n).collect())
        .collect();
    let labels = (0..n)
        .map(|i| match i {
            0 => "e".to_string(),
            1 => "a".to_string(),
            _ => format!("a^{i}"),
        })
        .collect();
    FiniteGroup::from_rows_labeled(rows, labels)
}

/// Dihedral group of order `2n`: index `i` is `r^i`, index `n + i` is `s r^i`.
pub(super) fn dihedral(n: usize) -> Result<FiniteGroup> {
    if n < 1 {
        return Err(Error::BadSpec("dihedral group needs n >= 1".into()));
    }
    let decode = |x: usize| (x >= n, x % n);
    let encode = |s: bool, i: usize| if s { n + i } else { i };
    let rows = (0..2 * n)
        .map(|a| {
            (0..2 * n)
                .map(|b| {
                    let (sa, i) = decode(a);
                    let (sb, j) = decode(b);
                    // s^a r^i s^b r^j = s^(a+b) r^(±i + j)
                    let i = if sb { (n - i) % n } else { i };
                    encode(sa ^ sb, (i + j) % n)
                })
                .collect()
        })
        .collect();
    let labels = (0..2 * n)
        .map(|x| {
            let (s, i) = decode(x);
            match (s, i) {
                (false, 0) => "e".to_string(),
                (false, 1) => "r".to_string(),
                (false, i) => format!("r^{i}"),
                (true, 0) => "s".to_string(),
                (true, 1) => "sr".to_string(),
                (true, i) => format!("sr^{i}"),
            }
        })
        .collect();
    FiniteGroup::from_rows_labeled(rows, labels)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 0..n {
        for rest in permutations(n - 1) {
            let mut p = vec![first];
            p.extend(rest.into_iter().map(|x| if x >= first { x + 1 } else { x }));
            out.push(p);
        }
    }
    out
}

fn cycle_label(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        out.push('(');
        let mut i = start;
        let mut first = true;
        while !seen[i] {
            seen[i] = true;
            if !first {
                out.push(' ');
            }
            out.push_str(&(i + 1).to_string());
            first = false;
            i = p[i];
        }
        out.push(')');
    }
    if out.is_empty() {
        "e".to_string()
    } else {
        out
    }
}

/// Symmetric group on `n ≤ 5` points, permutations in lexicographic order,
/// with `(στ)(i) = σ(τ(i))`.
pub(super) fn symmetric(n: usize) -> Result<FiniteGroup> {
    if n == 0 || n > 5 {
        return Err(Error::BadSpec(format!("symmetric group needs 1 <= n <= 5, got {n}")));
    }
    let perms = permutations(n);
    let index = |p: &[usize]| perms.iter().position(|q| q == p).expect("closed");
    let rows = perms
        .iter()
        .map(|s| {
            perms
                .iter()
                .map(|t| {
                    let st: Vec<usize> = (0..n).map(|i| s[t[i]]).collect();
                    index(&st)
                })
                .collect()
        })
        .collect();
    let labels = perms.iter().map(|p| cycle_label(p)).collect();
    FiniteGroup::from_rows_labeled(rows, labels)
}

/// ℤ/2 × ℤ/2 with index `2a + b` for the pair `(a, b)`.
pub(super) fn klein() -> Result<FiniteGroup> {
    let rows = (0..4).map(|x: usize| (0..4).map(|y| x ^ y).collect()).collect();
    let labels = ["(0,0)", "(0,1)", "(1,0)", "(1,1)"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    FiniteGroup::from_rows_labeled(rows, labels)
}

/// Quaternion group: indices 0..8 are 1, -1, i, -i, j, -j, k, -k.
pub(super) fn quaternion8() -> Result<FiniteGroup> {
    // unit 0..4 = 1, i, j, k; sign bit in the low position
    let unit_mul = |a: usize, b: usize| -> (usize, bool) {
        match (a, b) {
            (0, u) | (u, 0) => (u, false),
            (x, y) if x == y => (0, true),
            (1, 2) => (3, false),
            (2, 3) => (1, false),
            (3, 1) => (2, false),
            (2, 1) => (3, true),
            (3, 2) => (1, true),
            (1, 3) => (2, true),
            _ => unreachable!(),
        }
    };
    let rows = (0..8)
        .map(|x: usize| {
            (0..8)
                .map(|y: usize| {
                    let (u, neg) = unit_mul(x / 2, y / 2);
                    let sign = (x % 2 == 1) ^ (y % 2 == 1) ^ neg;
                    2 * u + usize::from(sign)
                })
                .collect()
        })
        .collect();
    let labels = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    FiniteGroup::from_rows_labeled(rows, labels)
}
