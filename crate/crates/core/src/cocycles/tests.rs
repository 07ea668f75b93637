use std::sync::Arc;

use serde_json::json;

use super::*;
use crate::exactfields::Field;
use crate::groupkit::{named_group, GroupAction};

fn module(field: &Field, group: &str) -> UnitModule {
    UnitModule::with_trivial_action(field.clone(), Arc::new(named_group(group).unwrap()))
}

fn spec(v: serde_json::Value) -> CocycleSpec {
    CocycleSpec::parse(&v).unwrap()
}

fn f9() -> Field {
    Field::extension(3, vec![1, 0, 1]).unwrap()
}

#[test]
fn validation_examples() {
    let m = module(&f9(), "klein4");
    assert!(validate_cocycle(&m, TwoCocycle::trivial(&m).table()).unwrap().is_valid());
    let f = spec(json!({"bimult": [[0, 1], [0, 0]]})).build(&m).unwrap();
    // (-1)^(x_a y_b)
    let minus = m.field().from_int(-1);
    assert_eq!(f.value(1, 2), &minus);
    assert_eq!(f.value(2, 1), &m.field().one());
    let mut bad = f.table().to_vec();
    bad[1][2] = m.field().one();
    let report = validate_cocycle(&m, &bad).unwrap();
    assert!(matches!(report.violation, Some(CocycleViolation::Identity { .. })));
    let mut zero = f.table().to_vec();
    zero[3][3] = m.field().zero();
    assert_eq!(validate_cocycle(&m, &zero), Err(Error::NotUnitValued(3, 3)));
}

#[test]
fn normalization_examples() {
    let f5 = Field::prime(5).unwrap();
    let m = module(&f5, "cyclic:4");
    let f = spec(json!("cyclic:4")).build(&m).unwrap();
    let a = m.group().subgroup_generated(&[2]);
    let n = normalize_on_cyclic_subgroup(&m, &f, &a).unwrap();
    assert_eq!(n.alpha, f5.from_int(4));
    assert_eq!(n.beta, f5.from_int(2));
    assert!(check_karp(&m, &n.cocycle, &a));
    assert!(validate_cocycle(&m, n.cocycle.table()).unwrap().is_valid());
    assert_eq!(n.cocycle, f.twist(&m, &n.lambda));

    let m2 = module(&f5, "cyclic:2");
    let f2 = spec(json!("cyclic:2")).build(&m2).unwrap();
    let whole = m2.group().whole();
    assert_eq!(normalize_on_cyclic_subgroup(&m2, &f2, &whole).unwrap_err(), Error::OutsideKernelOfRestriction);

    let k = module(&f5, "klein4");
    let fk = TwoCocycle::trivial(&k);
    assert_eq!(normalize_on_cyclic_subgroup(&k, &fk, &k.group().whole()).unwrap_err(), Error::NonCyclicSubgroup);
}

#[test]
fn restriction_and_inflation() {
    let m = module(&f9(), "klein4");
    let f = spec(json!({"bimult": [[0, 1], [0, 0]]})).build(&m).unwrap();
    let sigma = m.group().subgroup_generated(&[1]);
    let (sub, emb) = m.restrict(&sigma);
    assert_eq!(f.restrict(&emb), TwoCocycle::trivial(&sub));

    let f5 = Field::prime(5).unwrap();
    let c4 = module(&f5, "cyclic:4");
    let a = c4.group().subgroup_generated(&[2]);
    let (qm, q) = c4.quotient(&a).unwrap();
    let fq = spec(json!("cyclic:3")).build(&qm).unwrap();
    let inflated = TwoCocycle::inflate(&fq, &q.projection);
    assert!(validate_cocycle(&c4, inflated.table()).unwrap().is_valid());
    assert!(check_karp(&c4, &inflated, &a));
    let (am, aemb) = c4.restrict(&a);
    assert_eq!(inflated.restrict(&aemb), TwoCocycle::trivial(&am));
}

#[test]
fn pi_map_examples() {
    let f9 = f9();
    let m = module(&f9, "klein4");
    let a = m.group().subgroup_generated(&[1]);
    let f = spec(json!({"bimult": [[0, 1], [0, 0]]})).build(&m).unwrap();
    let pi = pi_map(&m, &f, &a).unwrap();
    assert_eq!(pi.of(2).at(&a, 1), &f9.from_int(-1));
    assert!(pi.of(0).is_trivial(&f9));

    let (qm, q) = m.quotient(&a).unwrap();
    let fq = spec(json!({"cyclic": [[2, 0]]})).build(&qm).unwrap();
    let inflated = TwoCocycle::inflate(&fq, &q.projection);
    let pi_inf = pi_map(&m, &inflated, &a).unwrap();
    assert!(pi_inf.values.iter().all(|c| c.is_trivial(&f9)));

    let both = inflated.product(&m, &f);
    let pi_both = pi_map(&m, &both, &a).unwrap();
    assert_eq!(pi_both.values, pi.values);

    let not_karp = spec(json!({"bimult": [[0, 0], [1, 0]]})).build(&m).unwrap();
    assert_eq!(pi_map(&m, &not_karp, &a).unwrap_err(), Error::CosetConditionViolated);
}

#[test]
fn character_examples() {
    let f5 = Field::prime(5).unwrap();
    let c2 = named_group("cyclic:2").unwrap();
    let chars = character_group(&f5, &c2, &c2.whole()).unwrap();
    let vals: Vec<_> = chars.iter().map(|c| c.values()[1].clone()).collect();
    assert_eq!(vals, vec![f5.one(), f5.from_int(4)]);
    let c4 = named_group("cyclic:4").unwrap();
    let cyc = cyclic_characters(&f5, &c4, 1, &f5.from_int(2));
    let at_a: Vec<_> = cyc.iter().map(|c| c.values()[1].clone()).collect();
    assert_eq!(at_a, [1, 2, 4, 3].map(|x| f5.from_int(x)).to_vec());
    assert_eq!(character_group(&f5, &c4, &c4.whole()).unwrap(), cyc);
    assert_eq!(character_group(&f5, &c4, &c4.trivial_subgroup()).unwrap().len(), 1);
    let c3 = named_group("cyclic:3").unwrap();
    assert!(character_group(&f5, &c3, &c3.whole()).is_err());
}

#[test]
fn oracle_examples() {
    let f5 = Field::prime(5).unwrap();
    let m = module(&f5, "klein4");
    let c = OneCochain::new(&m, [1, 3, 2, 4].map(|x| f5.from_int(x)).to_vec()).unwrap();
    let cob = coboundary(&m, &c);
    let w = brute_force_is_coboundary(&m, &cob).unwrap().unwrap();
    assert_eq!(coboundary(&m, &w), cob);

    let c2 = module(&f5, "cyclic:2");
    let f2 = spec(json!("cyclic:2")).build(&c2).unwrap();
    assert!(brute_force_is_coboundary(&c2, &f2).unwrap().is_none());

    let f3 = Field::prime(3).unwrap();
    let k = module(&f3, "klein4");
    let f = spec(json!({"bimult": [[0, 1], [0, 0]]})).build(&k).unwrap();
    let a = k.group().subgroup_generated(&[1]);
    assert!(brute_force_is_inflated(&k, &f, &a).unwrap().is_none());
}

#[test]
fn oracle_budget_is_enforced() {
    let f7 = Field::prime(7).unwrap();
    let m = module(&f7, "cyclic:12");
    let f = TwoCocycle::trivial(&m);
    assert!(matches!(brute_force_is_coboundary(&m, &f), Err(Error::OracleOutOfRange(_))));
}

#[test]
fn twisted_action_cocycle() {
    // C_2 acting by Frobenius on F_9: a cyclic cocycle needs a fixed value
    let f9 = f9();
    let g = Arc::new(named_group("cyclic:2").unwrap());
    let act = GroupAction::new(&g, &f9, &[0, 1]).unwrap();
    let m = UnitModule::new(f9.clone(), g, act);
    assert!(spec(json!({"cyclic": [2]})).build(&m).is_ok());
    assert!(spec(json!({"cyclic": [[0, 1]]})).build(&m).is_err());
}
