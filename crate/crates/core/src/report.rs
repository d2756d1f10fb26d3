use serde::Serialize;
use serde_json::Value;

use crate::linalg::SparseMatrix;

pub const SCHEMA: &str = "v1";

/// Outcome of one computation or verification, serialized as one JSON object.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub claim: String,
    pub degree: Option<usize>,
    pub lhs_dim: Option<usize>,
    pub rhs_dim: Option<usize>,
    pub pass: bool,
    pub witnesses: Vec<String>,
    pub timing_ms: Option<u64>,
    pub details: Value,
}

impl Report {
    pub fn new(claim: impl Into<String>, degree: Option<usize>) -> Self {
        Report {
            schema: SCHEMA,
            claim: claim.into(),
            degree,
            lhs_dim: None,
            rhs_dim: None,
            pass: true,
            witnesses: Vec::new(),
            timing_ms: None,
            details: Value::Null,
        }
    }

    /// A report comparing two dimensions, passing iff they agree and every
    /// recorded check held.
    pub fn comparison(claim: impl Into<String>, degree: usize, lhs: usize, rhs: usize, checks: Checks) -> Self {
        let mut r = Report::new(claim, Some(degree));
        r.lhs_dim = Some(lhs);
        r.rhs_dim = Some(rhs);
        r.pass = lhs == rhs && checks.all_passed();
        r.witnesses = checks.witnesses;
        r
    }

    /// A report whose two sides are the number of identities checked and the
    /// number that held.
    pub fn identities(claim: impl Into<String>, degree: usize, checks: Checks) -> Self {
        let (total, passed) = (checks.total, checks.passed);
        Report::comparison(claim, degree, total, passed, checks)
    }

    pub fn with_details(mut self, details: Value) -> Self {
        self.details = details;
        self
    }
}

const MAX_WITNESSES: usize = 16;

/// Tally of individual checks with labelled witnesses for failures.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Checks {
    pub total: usize,
    pub passed: usize,
    pub witnesses: Vec<String>,
}

impl Checks {
    pub fn new() -> Self {
        Checks::default()
    }

    pub fn all_passed(&self) -> bool {
        self.total == self.passed
    }

    pub fn record(&mut self, ok: bool, witness: impl FnOnce() -> String) -> bool {
        self.total += 1;
        if ok {
            self.passed += 1;
        } else if self.witnesses.len() < MAX_WITNESSES {
            self.witnesses.push(witness());
        }
        ok
    }

    /// Records `a == b`; on failure the witness names the first differing
    /// entry by its row and column labels.
    pub fn matrices_equal(
        &mut self,
        what: &str,
        a: &SparseMatrix,
        b: &SparseMatrix,
        row_label: impl Fn(usize) -> String,
        col_label: impl Fn(usize) -> String,
    ) -> bool {
        if a.rows() != b.rows() || a.cols() != b.cols() {
            let msg = format!("{what}: shapes {}x{} and {}x{}", a.rows(), a.cols(), b.rows(), b.cols());
            return self.record(false, || msg);
        }
        let diff = first_difference(a, b);
        self.record(diff.is_none(), || {
            let (r, c) = diff.expect("a difference was found");
            format!("{what}: differs at row {} column {}", row_label(r), col_label(c))
        })
    }

    pub fn merge(&mut self, other: Checks) {
        self.total += other.total;
        self.passed += other.passed;
        let room = MAX_WITNESSES.saturating_sub(self.witnesses.len());
        self.witnesses.extend(other.witnesses.into_iter().take(room));
    }
}

/// First `(row, col)` at which two equally shaped matrices differ.
pub fn first_difference(a: &SparseMatrix, b: &SparseMatrix) -> Option<(usize, usize)> {
    for c in 0..a.cols() {
        let (x, y) = (a.column(c), b.column(c));
        if x == y {
            continue;
        }
        let d = x.sub(y);
        return d.leading().map(|(r, _)| (*r, c));
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Domain;

    #[test]
    fn difference_is_located() {
        let f3 = Domain::prime_field(3).unwrap();
        let a = SparseMatrix::identity(3, f3);
        let b = SparseMatrix::from_triplets(3, 3, f3, (0..3).map(|i| (i, i, f3.from_i64(if i == 1 { 2 } else { 1 })))).unwrap();
        assert_eq!(first_difference(&a, &b), Some((1, 1)));
        let mut checks = Checks::new();
        assert!(!checks.matrices_equal("id", &a, &b, |r| format!("r{r}"), |c| format!("c{c}")));
        assert_eq!(checks.witnesses, vec!["id: differs at row r1 column c1".to_string()]);
        let r = Report::identities("x", 0, checks);
        assert!(!r.pass);
        assert_eq!((r.lhs_dim, r.rhs_dim), (Some(1), Some(0)));
    }
}
