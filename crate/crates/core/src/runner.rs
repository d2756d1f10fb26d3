//! Configuration and dispatch for the command-line frontend.

use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::complexes::{action_identities, CochainComplex, DEFAULT_BUDGET};
use crate::connecting::{Connecting, SesSpec, SymmetricSes};
use crate::decomp::Context;
use crate::error::{Error, Result};
use crate::groups::{build_group, random_relabeling, GroupSpec};
use crate::linalg::Domain;
use crate::report::{Checks, Report};
use crate::twisted::{make_cocycle, CocycleSpec, TwistedAlgebra};

/// `{"Fp": 7}` or `"Q"`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum FieldSpec {
    Fp(u64),
    Q,
}

impl FieldSpec {
    pub fn domain(&self) -> Result<Domain> {
        match self {
            FieldSpec::Fp(p) => Domain::prime_field(*p),
            FieldSpec::Q => Ok(Domain::Rational),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum VerifyTarget {
    Decomposition,
    Action,
    Maps,
    Embedding,
    Connecting,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Command {
    Cohomology,
    Verify(VerifyTarget),
    All,
}

fn default_max_degree() -> usize {
    2
}

fn default_budget() -> u128 {
    DEFAULT_BUDGET
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunConfig {
    pub command: Command,
    pub group: GroupSpec,
    #[serde(default)]
    pub cocycle: CocycleSpec,
    /// Required unless `ses` is given, in which case it defaults to `𝔽_p`.
    #[serde(default)]
    pub field: Option<FieldSpec>,
    #[serde(default = "default_max_degree")]
    pub max_degree: usize,
    #[serde(default = "default_budget")]
    pub budget: u128,
    #[serde(default)]
    pub ses: Option<SesSpec>,
    /// Relabels the group elements by a seeded random permutation.
    #[serde(default)]
    pub seed: Option<u64>,
    /// Record wall-clock time per report (breaks byte-identical output).
    #[serde(default)]
    pub timing: bool,
}

impl RunConfig {
    pub fn new(command: Command, group: GroupSpec) -> Self {
        RunConfig {
            command,
            group,
            cocycle: CocycleSpec::Trivial,
            field: None,
            max_degree: default_max_degree(),
            budget: default_budget(),
            ses: None,
            seed: None,
            timing: false,
        }
    }
}

/// Reports produced by a run, or the error that stopped it.
#[derive(Clone, Debug, PartialEq)]
pub struct RunOutcome {
    pub reports: Vec<Report>,
    pub error: Option<Error>,
}

impl RunOutcome {
    pub fn passed(&self) -> bool {
        self.error.is_none() && self.reports.iter().all(|r| r.pass)
    }

    /// 0 when everything passed, 1 on a failed check, 2 on a configuration
    /// error and 3 when a cochain space exceeds the budget.
    pub fn exit_code(&self) -> i32 {
        match &self.error {
            Some(Error::TooLarge { .. }) => 3,
            Some(_) => 2,
            None if self.passed() => 0,
            None => 1,
        }
    }
}

struct Setup {
    ctx: Context,
    ses: Option<SymmetricSes>,
    config: RunConfig,
}

impl Setup {
    fn new(config: &RunConfig) -> Result<Self> {
        if config.max_degree == 0 {
            return Err(Error::BadSpec("max_degree must be positive".into()));
        }
        if config.budget == 0 {
            return Err(Error::BadSpec("budget must be positive".into()));
        }
        let ses = config.ses.map(|s| SymmetricSes::new(s.p)).transpose()?;
        let field = match (config.field, &ses) {
            (Some(f), Some(s)) if f != FieldSpec::Fp(s.p()) => {
                return Err(Error::BadSpec(format!("field {f:?} does not match the sequence for p = {}", s.p())))
            }
            (Some(f), _) => f,
            (None, Some(s)) => FieldSpec::Fp(s.p()),
            (None, None) => return Err(Error::BadSpec("a field is required".into())),
        };
        let domain = field.domain()?;
        let group = build_group(&config.group)?;
        let alpha = make_cocycle(&group, &config.cocycle, domain)?;
        let (group, alpha) = match config.seed {
            Some(seed) => {
                let perm = random_relabeling(group.order(), seed);
                (group.relabel(&perm)?, alpha.relabel(&perm))
            }
            None => (group, alpha),
        };
        let alg = TwistedAlgebra::new(group, alpha)?;
        Ok(Setup {
            ctx: Context::new(alg).with_budget(config.budget),
            ses,
            config: config.clone(),
        })
    }

    fn timed(&self, f: impl FnOnce() -> Result<Report>) -> Result<Report> {
        let start = Instant::now();
        let mut r = f()?;
        if self.config.timing {
            r.timing_ms = Some(start.elapsed().as_millis() as u64);
        }
        Ok(r)
    }

    fn degrees(&self) -> std::ops::RangeInclusive<usize> {
        0..=self.config.max_degree
    }

    fn cohomology(&self) -> Result<Report> {
        self.timed(|| {
            let hoch = self.ctx.hochschild();
            let triv = self.ctx.trivial_complex();
            let mut table = Vec::new();
            for n in self.degrees() {
                table.push(json!({
                    "degree": n,
                    "HH": hoch.cohomology(n)?.dim,
                    "HHS": hoch.symmetric_cohomology(n)?.dim,
                    "H": triv.cohomology(n)?.dim,
                    "HS": triv.symmetric_cohomology(n)?.dim,
                }));
            }
            Ok(Report::new("cohomology", None).with_details(json!({
                "group_order": self.ctx.group().order(),
                "field": self.ctx.algebra().domain().label(),
                "twisted": !self.ctx.algebra().cocycle().is_trivial(),
                "table": table,
            })))
        })
    }

    fn action(&self, n: usize) -> Result<Report> {
        self.timed(|| {
            let mut checks = Checks::new();
            checks.merge(action_identities(&self.ctx.hochschild(), n, "HH")?);
            checks.merge(action_identities(&self.ctx.trivial_complex(), n, "H(G,k)")?);
            checks.merge(action_identities(&self.ctx.conjugation_complex(), n, "H(G,conj)")?);
            for &x in &self.ctx.classes().reps {
                let local = self.ctx.local(x)?;
                let name = format!("H(C_G({}),kx)", self.ctx.group().label(x));
                checks.merge(action_identities(&local.complex, n, &name)?);
            }
            Ok(Report::identities("action", n, checks))
        })
    }

    fn verify(&self, target: VerifyTarget) -> Result<Vec<Report>> {
        let mut out = Vec::new();
        match target {
            VerifyTarget::Decomposition => {
                for n in self.degrees() {
                    out.push(self.timed(|| self.ctx.verify_decomposition(n))?);
                }
            }
            VerifyTarget::Action => {
                for n in 1..=self.config.max_degree {
                    out.push(self.action(n)?);
                }
            }
            VerifyTarget::Maps => {
                for n in self.degrees() {
                    out.push(self.timed(|| self.ctx.verify_maps(n))?);
                    out.push(self.timed(|| self.ctx.verify_f_iso(n))?);
                }
            }
            VerifyTarget::Embedding => {
                for n in self.degrees() {
                    let start = Instant::now();
                    let mut reports = self.ctx.verify_embedding(n)?;
                    if self.config.timing {
                        let ms = start.elapsed().as_millis() as u64;
                        reports.iter_mut().for_each(|r| r.timing_ms = Some(ms));
                    }
                    out.extend(reports);
                }
            }
            VerifyTarget::Connecting => {
                let ses = self
                    .ses
                    .clone()
                    .ok_or_else(|| Error::BadSpec("verify connecting needs a sequence".into()))?;
                if !self.ctx.algebra().cocycle().is_trivial() {
                    return Err(Error::NotTrivialCocycle);
                }
                let c = Connecting::with_budget(self.ctx.group().clone(), ses, self.ctx.budget());
                for n in self.degrees() {
                    out.push(self.timed(|| c.verify_beta(n))?);
                    out.push(self.timed(|| c.verify_square(n))?);
                }
            }
        }
        Ok(out)
    }

    fn run(&self, reports: &mut Vec<Report>) -> Result<()> {
        match self.config.command {
            Command::Cohomology => reports.push(self.cohomology()?),
            Command::Verify(t) => reports.extend(self.verify(t)?),
            Command::All => {
                reports.push(self.cohomology()?);
                let mut targets = vec![
                    VerifyTarget::Decomposition,
                    VerifyTarget::Action,
                    VerifyTarget::Maps,
                    VerifyTarget::Embedding,
                ];
                if self.ses.is_some() {
                    targets.push(VerifyTarget::Connecting);
                }
                for t in targets {
                    reports.extend(self.verify(t)?);
                }
            }
        }
        Ok(())
    }
}

pub fn run(config: &RunConfig) -> RunOutcome {
    let mut reports = Vec::new();
    let error = Setup::new(config).and_then(|s| s.run(&mut reports)).err();
    RunOutcome { reports, error }
}

/// The dimension table of a `cohomology` report.
pub fn dimension_table(reports: &[Report]) -> Option<&serde_json::Value> {
    reports
        .iter()
        .find(|r| r.claim == "cohomology")
        .map(|r| &r.details["table"])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn config_parses_from_json() {
        let cfg: RunConfig = serde_json::from_str(
            r#"{"command":{"verify":"connecting"},"group":{"family":"cyclic","n":3},"ses":{"p":3},"max_degree":1}"#,
        )
        .unwrap();
        assert_eq!(cfg.command, Command::Verify(VerifyTarget::Connecting));
        assert_eq!(cfg.budget, DEFAULT_BUDGET);
        let f: FieldSpec = serde_json::from_str(r#"{"Fp":7}"#).unwrap();
        assert_eq!(f, FieldSpec::Fp(7));
        assert_eq!(serde_json::from_str::<FieldSpec>(r#""Q""#).unwrap(), FieldSpec::Q);
    }

    #[test]
    fn cyclic_two_mod_two() {
        let mut cfg = RunConfig::new(Command::Cohomology, GroupSpec::cyclic(2));
        cfg.field = Some(FieldSpec::Fp(2));
        cfg.max_degree = 3;
        let out = run(&cfg);
        assert_eq!(out.exit_code(), 0);
        let h: Vec<u64> = dimension_table(&out.reports)
            .unwrap()
            .as_array()
            .unwrap()
            .iter()
            .map(|row| row["H"].as_u64().unwrap())
            .collect();
        assert_eq!(h, vec![1, 1, 1, 1]);
    }

    #[test]
    fn exit_codes() {
        let mut cfg = RunConfig::new(Command::Cohomology, GroupSpec::symmetric(3));
        assert_eq!(run(&cfg).exit_code(), 2);
        cfg.field = Some(FieldSpec::Fp(7));
        cfg.budget = 50;
        assert_eq!(run(&cfg).exit_code(), 3);
        cfg.ses = Some(SesSpec { p: 3 });
        cfg.budget = DEFAULT_BUDGET;
        assert_eq!(run(&cfg).exit_code(), 2);
    }

    #[test]
    fn relabeling_keeps_dimensions() {
        let mut cfg = RunConfig::new(Command::Cohomology, GroupSpec::symmetric(3));
        cfg.field = Some(FieldSpec::Fp(3));
        let plain = run(&cfg);
        cfg.seed = Some(11);
        let shuffled = run(&cfg);
        assert_eq!(dimension_table(&plain.reports), dimension_table(&shuffled.reports));
    }
}
