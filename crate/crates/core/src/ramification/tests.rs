use std::sync::Arc;

use serde_json::{json, Value};

use super::*;
use crate::cocycles::{CocycleSpec, UnitModule};
use crate::exactfields::Field;
use crate::groupkit::{named_group, GroupAction};

fn scenario(field: &Field, group: &str, frob: Option<&[u32]>, chi: &[(usize, Value)], cocycle: Value) -> RamifiedScenario {
    let g = Arc::new(named_group(group).unwrap());
    let action = match frob {
        Some(k) => GroupAction::new(&g, field, k).unwrap(),
        None => GroupAction::trivial(&g),
    };
    let m = UnitModule::new(field.clone(), g, action);
    let f = CocycleSpec::parse(&cocycle).unwrap().build(&m).unwrap();
    let values = chi.iter().map(|(x, v)| (*x, field.decode(v).unwrap())).collect();
    RamifiedScenario::with_cocycle(m, RamificationCharacter::Values(values), &f)
}

fn f5() -> Field {
    Field::prime(5).unwrap()
}

fn f9() -> Field {
    Field::extension(3, vec![1, 0, 1]).unwrap()
}

fn ratfunc(p: u32) -> Field {
    Field::rational_function(&Field::prime(p).unwrap(), "t").unwrap()
}

fn example_a() -> RamifiedScenario {
    scenario(&f5(), "cyclic:2", None, &[(0, json!(1)), (1, json!(4))], json!("trivial"))
}

fn example_b() -> RamifiedScenario {
    scenario(&f5(), "cyclic:2", None, &[(0, json!(1)), (1, json!(4))], json!("cyclic:2"))
}

fn example_c() -> RamifiedScenario {
    let chi = [(0, json!(1)), (1, json!(2))];
    scenario(&f9(), "klein4", Some(&[0, 0, 1, 1]), &chi, json!({"bimult": [[0, 1], [0, 0]]}))
}

fn wild(p: u32, alpha: Value) -> RamifiedScenario {
    let chi: Vec<(usize, Value)> = (0..p as usize).map(|i| (i, json!(1))).collect();
    scenario(&ratfunc(p), &format!("cyclic:{p}"), None, &chi, json!({ "cyclic": [alpha] }))
}

fn t_power(p: usize) -> Value {
    let mut num = vec![0; p + 1];
    num[p] = 1;
    json!({ "num": num })
}

#[test]
fn validation_examples() {
    assert!(validate_scenario(&example_a()).is_valid());
    assert!(validate_scenario(&example_c()).is_valid());

    let f2 = Field::prime(2).unwrap();
    let g = Arc::new(named_group("cyclic:2").unwrap());
    let m = UnitModule::with_trivial_action(f2.clone(), g);
    let chi = RamificationCharacter::Exponents { order: 2, exponents: vec![(0, 0), (1, 1)] };
    let s = RamifiedScenario::with_cocycle(m.clone(), chi, &crate::cocycles::TwoCocycle::trivial(&m));
    let report = validate_scenario(&s);
    assert_eq!(report.violations, vec![Violation::ImageOrderNotPrimeToP { e0: 2, p: 2 }]);
    assert!(report.messages()[0].contains("image order not prime to p"));

    // x̄(a) = u has order 4 in F_9 but b acts by Frobenius, sending u to -u
    let u = json!([0, 1]);
    let chi: Vec<(usize, Value)> = (0..4).map(|i| (i, json!(1))).collect::<Vec<_>>();
    let mut chi = chi;
    for (i, v) in [json!(1), u.clone(), json!(2), json!([0, 2])].into_iter().enumerate() {
        chi[i].1 = v;
    }
    let broken = scenario(&f9(), "product:cyclic:4,cyclic:2", Some(&[0, 0, 0, 0, 1, 1, 1, 1]), &chi, json!("trivial"));
    let violations = validate_scenario(&broken).violations;
    assert_eq!(violations, vec![Violation::NotEquivariant { g: "b".into(), sigma: "a".into() }]);
    // in the dihedral group the same values are equivariant, since s r s^-1 = r^-1
    let dihedral = scenario(&f9(), "dihedral:4", Some(&[0, 0, 0, 0, 1, 1, 1, 1]), &chi, json!("trivial"));
    assert!(validate_scenario(&dihedral).is_valid());

    let not_hom = scenario(&f5(), "cyclic:2", None, &[(0, json!(1)), (1, json!(2))], json!("trivial"));
    assert!(matches!(validate_scenario(&not_hom).violations[0], Violation::NotHomomorphism { .. }));
    let partial = scenario(&f5(), "cyclic:2", None, &[(1, json!(4))], json!("trivial"));
    assert!(matches!(validate_scenario(&partial).violations[0], Violation::CharacterDomain { .. }));
    // x̄ ≡ 1 on C_2 over F_5: the kernel is not a 5-group
    let kernel = scenario(&f5(), "cyclic:2", None, &[(0, json!(1)), (1, json!(1))], json!("trivial"));
    assert_eq!(validate_scenario(&kernel).violations, vec![Violation::KernelNotPGroup { kernel_order: 2, p: 5 }]);
}

#[test]
fn inertia_split_examples() {
    let s = inertia_split(&example_a(), &Choices::default()).unwrap();
    assert_eq!((s.p_sub.order(), s.e0, s.sigma0), (1, 2, 1));

    let w = inertia_split(&wild(2, json!({"num": [0, 1]})), &Choices::default()).unwrap();
    assert_eq!((w.p_sub.order(), w.e0), (2, 1));

    let f3 = Field::prime(3).unwrap();
    let chi: Vec<(usize, Value)> = (0..6).map(|i| (i, json!(if i % 2 == 0 { 1 } else { 2 }))).collect();
    let c6 = scenario(&f3, "cyclic:6", None, &chi, json!("trivial"));
    let s = inertia_split(&c6, &Choices::default()).unwrap();
    assert_eq!(s.p_sub.elements(), &[0, 2, 4]);
    assert_eq!((s.e0, s.sigma0), (2, 3));
}

#[test]
fn heredity_examples() {
    let split = |s: &RamifiedScenario| inertia_split(s, &Choices::default()).unwrap();
    let a = example_a();
    let v = heredity_verdict(&a, &split(&a)).unwrap();
    assert!(v.hereditary && matches!(v.evidence, HeredityEvidence::Tame));

    let yes = wild(2, json!({"num": [0, 1]}));
    assert!(heredity_verdict(&yes, &split(&yes)).unwrap().hereditary);
    let no = wild(2, t_power(2));
    let v = heredity_verdict(&no, &split(&no)).unwrap();
    assert!(!v.hereditary && matches!(v.evidence, HeredityEvidence::Nilpotent { .. }));
}

#[test]
fn gamma_f_examples() {
    let gf = |s: &RamifiedScenario| gamma_f(s, &inertia_split(s, &Choices::default()).unwrap()).unwrap();
    let a = gf(&example_a());
    assert_eq!((a.d, a.c, a.subgroup.order()), (2, 1, 2));
    let b = gf(&example_b());
    assert_eq!((b.alpha0.clone(), b.d, b.c), (f5().from_int(2), 1, 2));
    assert!(b.subgroup.is_trivial());

    let chi: Vec<(usize, Value)> = [1, 2, 4, 3].iter().enumerate().map(|(i, v)| (i, json!(v))).collect();
    let c4 = scenario(&f5(), "cyclic:4", None, &chi, json!("cyclic:4"));
    let g = gf(&c4);
    assert_eq!((g.alpha0.clone(), g.d, g.c, g.generator), (f5().from_int(4), 2, 2, 2));
}

#[test]
fn conductor_examples() {
    let cond = |s: &RamifiedScenario| {
        let gf = gamma_f(s, &inertia_split(s, &Choices::default()).unwrap()).unwrap();
        conductor(s, &gf).unwrap()
    };
    let a = cond(&example_a());
    assert_eq!((a.h_f.order(), a.component_count), (2, 2));
    let c = cond(&example_c());
    assert_eq!((c.image.len(), c.h_f.order(), c.component_count), (2, 1, 1));
}

#[test]
fn analyze_examples() {
    let b = analyze(&example_b(), &Choices::default()).unwrap();
    assert_eq!(b.verdict_line(), "MAXIMAL; hereditary; |H_f|=1; 1 maximal order");

    let a = analyze(&example_a(), &Choices::default()).unwrap();
    assert_eq!(a.verdict_line(), "NOT MAXIMAL; hereditary; |H_f|=2; 2 maximal orders");
    assert_eq!(a.oracle_line().unwrap(), "2 components (formula) = 2 (oracle): OK");

    let c = analyze(&example_c(), &Choices::default()).unwrap();
    assert!(c.maximal);
    assert_eq!(c.structure.as_ref().unwrap().idempotent_orbits, vec![2]);

    for p in [2, 3] {
        let yes = analyze(&wild(p, json!({"num": [0, 1]})), &Choices::default()).unwrap();
        assert!(yes.hereditary && yes.maximal);
        let s = yes.structure.unwrap();
        assert_eq!((s.gamma_f.len(), s.h_f.len()), (1, 1));
        let no = analyze(&wild(p, t_power(p as usize)), &Choices::default()).unwrap();
        assert_eq!(no.verdict_line(), "NOT HEREDITARY (nilpotent witness shown); not maximal");
        assert!(no.to_text().contains("n/a (not hereditary)"));
    }
}

#[test]
fn mixed_wild_and_tame_inertia() {
    let f4t = Field::rational_function(&Field::extension(2, vec![1, 1, 1]).unwrap(), "t").unwrap();
    let g = named_group("product:cyclic:2,cyclic:3").unwrap();
    let zeta = f4t.primitive_root_of_unity(3).unwrap();
    let chi: Vec<(usize, Value)> = (0..6).map(|i| (i, f4t.encode(&f4t.pow(&zeta, (i / 2) as i64).unwrap()))).collect();
    assert_eq!(g.order(), 6);
    let t = json!({"num": [0, 1]});
    let s = scenario(&f4t, "product:cyclic:2,cyclic:3", None, &chi, json!({"cyclic": [t.clone(), 1]}));
    let r = analyze(&s, &Choices::default()).unwrap();
    assert!(r.hereditary && !r.tame);
    assert_eq!((r.p_subgroup.len(), r.e0), (2, 3));
    assert_eq!(r.maximal_order_count, Some(3));

    // a non-cube constant for U_(σ_0)^3 leaves Γ_f trivial
    let u = json!({"num": [[0, 1]]});
    let s = scenario(&f4t, "product:cyclic:2,cyclic:3", None, &chi, json!({"cyclic": [t, u]}));
    let r = analyze(&s, &Choices::default()).unwrap();
    assert!(r.maximal);
    assert_eq!(r.structure.unwrap().d, 1);
}

#[test]
fn non_abelian_inertia_is_not_hereditary() {
    let f3 = Field::prime(3).unwrap();
    let sign = [1, 2, 2, 1, 1, 2];
    let chi: Vec<(usize, Value)> = sign.iter().enumerate().map(|(i, v)| (i, json!(v))).collect();
    let s = scenario(&f3, "s3", None, &chi, json!("trivial"));
    assert!(validate_scenario(&s).is_valid());
    let r = analyze(&s, &Choices::default()).unwrap();
    assert!(!r.hereditary && !r.maximal);
    assert_eq!(r.p_subgroup, vec!["1", "(123)", "(132)"]);
}

#[test]
fn choices_do_not_change_results() {
    let f7 = Field::prime(7).unwrap();
    let chi: Vec<(usize, Value)> =
        (0..6).map(|i| (i, f7.encode(&f7.pow(&f7.from_int(3), i as i64).unwrap()))).collect();
    let s = scenario(&f7, "cyclic:6", None, &chi, json!("cyclic:2"));
    let base = analyze(&s, &Choices::default()).unwrap();
    assert_eq!(base.sigma0, "a");
    let other = analyze(&s, &Choices::parse("zeta=5").unwrap()).unwrap();
    assert_eq!(other.sigma0, "a^5");
    let (x, y) = (base.structure.unwrap(), other.structure.unwrap());
    assert_eq!((x.d, x.gamma_f, x.h_f, x.component_count), (y.d, y.gamma_f, y.h_f, y.component_count));
    let same = analyze(&s, &Choices::parse("sigma0=a^5").unwrap()).unwrap();
    assert_eq!(same.sigma0, "a^5");
    assert!(analyze(&s, &Choices::parse("sigma0=a^2").unwrap()).is_err());
}

#[test]
fn inflation_conductor_matches() {
    for s in [example_a(), example_b(), example_c()] {
        let mut r = analyze(&s, &Choices::default()).unwrap();
        cross_check_inflation(&s, &mut r).unwrap();
        assert_eq!(r.oracle.unwrap().inflation_conductor.unwrap(), r.structure.unwrap().h_f);
    }
}
