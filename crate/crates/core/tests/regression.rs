//! `all` on every bundled group of order at most 8, degrees up to 2.

use twistcoh::groups::{build_group, GroupSpec};
use twistcoh::runner::{run, Command, FieldSpec, RunConfig};
use twistcoh::twisted::{CocycleSpec, ScalarLiteral};

fn run_all(group: GroupSpec, cocycle: CocycleSpec, field: Option<FieldSpec>, ses: Option<u64>) {
    let mut cfg = RunConfig::new(Command::All, group.clone());
    cfg.cocycle = cocycle;
    cfg.field = field;
    cfg.ses = ses.map(|p| twistcoh::connecting::SesSpec { p });
    cfg.max_degree = 2;
    let out = run(&cfg);
    let failures: Vec<_> = out
        .reports
        .iter()
        .filter(|r| !r.pass)
        .map(|r| format!("{} n={:?}: {:?}", r.claim, r.degree, r.witnesses))
        .collect();
    assert_eq!(out.exit_code(), 0, "{group:?}: {:?} {failures:?}", out.error);
}

fn untwisted(group: GroupSpec, p: u64) {
    run_all(group, CocycleSpec::Trivial, Some(FieldSpec::Fp(p)), None);
}

#[test]
fn cyclic_groups() {
    for n in 1..=8 {
        untwisted(GroupSpec::cyclic(n), 3);
    }
    untwisted(GroupSpec::cyclic(4), 2);
    run_all(GroupSpec::cyclic(3), CocycleSpec::Trivial, Some(FieldSpec::Q), None);
}

#[test]
fn non_cyclic_groups() {
    let order_eight = [
        GroupSpec::dihedral(4),
        GroupSpec::quaternion8(),
        GroupSpec::product(GroupSpec::cyclic(2), GroupSpec::cyclic(4)),
        GroupSpec::product(GroupSpec::klein(), GroupSpec::cyclic(2)),
    ];
    for spec in &order_eight {
        assert_eq!(build_group(spec).unwrap().order(), 8, "{spec:?}");
    }
    for spec in [GroupSpec::klein(), GroupSpec::symmetric(3), GroupSpec::dihedral(3)]
        .into_iter()
        .chain(order_eight)
    {
        untwisted(spec, 5);
    }
    untwisted(GroupSpec::symmetric(3), 2);
}

#[test]
fn twisted_klein() {
    let pairing = CocycleSpec::Pairing {
        zeta: ScalarLiteral::Int(4),
    };
    run_all(GroupSpec::klein(), pairing.clone(), Some(FieldSpec::Fp(5)), None);
    run_all(GroupSpec::klein(), pairing, Some(FieldSpec::Fp(3)), None);
    let rational = CocycleSpec::Pairing {
        zeta: ScalarLiteral::Text("-1".into()),
    };
    run_all(GroupSpec::klein(), rational, Some(FieldSpec::Q), None);
}

#[test]
fn connecting_maps() {
    for spec in [GroupSpec::cyclic(3), GroupSpec::symmetric(3), GroupSpec::cyclic(6)] {
        run_all(spec, CocycleSpec::Trivial, None, Some(3));
    }
    run_all(GroupSpec::cyclic(5), CocycleSpec::Trivial, None, Some(5));
    run_all(GroupSpec::klein(), CocycleSpec::Trivial, None, Some(3));
}
