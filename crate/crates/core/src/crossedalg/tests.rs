use std::sync::Arc;

use serde_json::json;

use super::*;
use crate::cocycles::{CocycleSpec, UnitModule};
use crate::exactfields::Field;
use crate::groupkit::{named_group, GroupAction};

fn algebra(field: &Field, group: &str, frob: Option<&[u32]>, cocycle: serde_json::Value) -> CrossedProduct {
    let g = Arc::new(named_group(group).unwrap());
    let action = match frob {
        Some(k) => GroupAction::new(&g, field, k).unwrap(),
        None => GroupAction::trivial(&g),
    };
    let m = UnitModule::new(field.clone(), g, action);
    let f = CocycleSpec::parse(&cocycle).unwrap().build(&m).unwrap();
    CrossedProduct::new(m, f)
}

fn f9() -> Field {
    Field::extension(3, vec![1, 0, 1]).unwrap()
}

fn example_c() -> CrossedProduct {
    algebra(&f9(), "klein4", Some(&[0, 0, 1, 1]), json!({"bimult": [[0, 1], [0, 0]]}))
}

#[test]
fn multiplication_examples() {
    let f5 = Field::prime(5).unwrap();
    let alg = algebra(&f5, "cyclic:2", None, json!("cyclic:2"));
    let x = alg.add(&alg.scalar(f5.from_int(3)), &alg.basis(1)).unwrap();
    assert_eq!(alg.multiply(&alg.one(), &x).unwrap(), x);
    assert_eq!(alg.multiply(&alg.basis(1), &alg.basis(1)).unwrap(), alg.scalar(f5.from_int(2)));

    let f9 = f9();
    let frob = algebra(&f9, "cyclic:2", Some(&[0, 1]), json!("trivial"));
    let u = f9.power_basis_generator();
    let lhs = frob.multiply(&frob.basis(1), &frob.scalar(u.clone())).unwrap();
    assert_eq!(lhs, frob.term(f9.neg(&u), 1));

    let other = algebra(&f5, "cyclic:2", None, json!("trivial"));
    assert_eq!(alg.multiply(&alg.one(), &other.one()), Err(Error::MixedParents));
}

#[test]
fn basis_inverses_and_associativity() {
    let alg = example_c();
    let g = alg.group();
    for a in g.elements() {
        assert_eq!(alg.multiply(&alg.basis(a), &alg.basis_inverse(a)).unwrap(), alg.one());
        for b in g.elements() {
            for c in g.elements() {
                let (x, y, z) = (alg.basis(a), alg.basis(b), alg.basis(c));
                let left = alg.multiply(&alg.multiply(&x, &y).unwrap(), &z).unwrap();
                let right = alg.multiply(&x, &alg.multiply(&y, &z).unwrap()).unwrap();
                assert_eq!(left, right);
            }
        }
    }
}

#[test]
fn center_examples() {
    let f5 = Field::prime(5).unwrap();
    let commutative = algebra(&f5, "klein4", None, json!("trivial"));
    assert_eq!(commutative.center().unwrap().len(), 4);

    let alg = example_c();
    let z = alg.center().unwrap();
    assert_eq!(z.len(), 2);
    let inertia = alg.module().inertia();
    for b in &z {
        assert!(alg.support(b).iter().all(|&g| inertia.contains(g)));
        for g in alg.group().elements() {
            assert!(alg.is_zero(&alg.commutator(b, &alg.basis(g)).unwrap()));
        }
    }

    let frob = algebra(&f9(), "cyclic:2", Some(&[0, 1]), json!("trivial"));
    let z = frob.center().unwrap();
    assert_eq!(z.len(), 1);
    assert_eq!(frob.support(&z[0]), vec![0]);
}

#[test]
fn iota_examples() {
    let f5 = Field::prime(5).unwrap();
    let trivial = algebra(&f5, "cyclic:2", None, json!("trivial"));
    let ones = iota_idempotents(&trivial, 0, &f5.one()).unwrap();
    assert_eq!(ones, vec![trivial.one()]);

    let iotas = iota_idempotents(&trivial, 1, &f5.from_int(4)).unwrap();
    let three = f5.from_int(3);
    let plus = trivial.add(&trivial.scalar(three.clone()), &trivial.term(three.clone(), 1)).unwrap();
    let minus = trivial.sub(&trivial.scalar(three.clone()), &trivial.term(three, 1)).unwrap();
    assert_eq!(iotas, vec![plus, minus]);
    assert!(check_idempotent_set(&trivial, &iotas).unwrap());

    let c4 = algebra(&f5, "cyclic:4", None, json!("trivial"));
    let four = iota_idempotents(&c4, 1, &f5.from_int(2)).unwrap();
    assert_eq!(four.len(), 4);
    assert!(check_idempotent_set(&c4, &four).unwrap());

    let twisted = algebra(&f5, "cyclic:2", None, json!("cyclic:4"));
    assert!(matches!(iota_idempotents(&twisted, 1, &f5.from_int(4)), Err(Error::Inconsistent(_))));

    let f3 = Field::prime(3).unwrap();
    let c3 = algebra(&f3, "cyclic:3", None, json!("trivial"));
    assert_eq!(iota_idempotents(&c3, 1, &f3.one()).unwrap_err(), Error::TameIndexViolated(3));
}

#[test]
fn conjugation_swaps_idempotents_in_example_c() {
    let alg = example_c();
    let f = alg.field().clone();
    let iotas = iota_idempotents(&alg, 1, &f.from_int(-1)).unwrap();
    assert!(check_idempotent_set(&alg, &iotas).unwrap());
    assert_eq!(alg.conjugate(2, &iotas[0]).unwrap(), iotas[1]);
    assert_eq!(alg.conjugate(2, &iotas[1]).unwrap(), iotas[0]);
    assert_eq!(alg.conjugate(1, &iotas[0]).unwrap(), iotas[0]);
}

#[test]
fn oracle_examples() {
    let f5 = Field::prime(5).unwrap();
    let split = algebra(&f5, "cyclic:2", None, json!("trivial"));
    let report = count_simple_components_oracle(&split).unwrap();
    assert_eq!(report.count, 2);
    assert!(check_idempotent_set(&split, &report.idempotents).unwrap());
    assert_eq!(count_simple_components_oracle(&algebra(&f5, "cyclic:2", None, json!("cyclic:2"))).unwrap().count, 1);
    assert_eq!(count_simple_components_oracle(&example_c()).unwrap().count, 1);

    // F_3[C_3] = F_3[x]/(x-1)^3 is local with a 2-dimensional nilradical
    let f3 = Field::prime(3).unwrap();
    let local = count_simple_components_oracle(&algebra(&f3, "cyclic:3", None, json!("trivial"))).unwrap();
    assert_eq!((local.count, local.center_dim, local.nilradical_dim), (1, 3, 2));

    let f2t = Field::rational_function(&Field::prime(2).unwrap(), "t").unwrap();
    let wild = algebra(&f2t, "cyclic:2", None, json!("trivial"));
    assert_eq!(count_simple_components_oracle(&wild).unwrap_err(), Error::OracleFiniteOnly);
}

#[test]
fn inseparability_examples() {
    let f5 = Field::prime(5).unwrap();
    let tame = algebra(&f5, "cyclic:2", None, json!("trivial"));
    let verdict = purely_inseparable_field_test(&tame, &tame.group().trivial_subgroup()).unwrap();
    assert!(verdict.is_field());

    let f2t = Field::rational_function(&Field::prime(2).unwrap(), "t").unwrap();
    let t = json!({"num": [0, 1]});
    let wild = algebra(&f2t, "cyclic:2", None, json!({"cyclic": [t]}));
    let v = purely_inseparable_field_test(&wild, &wild.group().whole()).unwrap();
    let InseparabilityVerdict::Field { tower } = v else { panic!("expected a field") };
    assert_eq!(tower.len(), 1);
    assert_eq!(tower[0].alpha, f2t.variable().unwrap());

    let t2 = json!({"num": [0, 0, 1]});
    let split = algebra(&f2t, "cyclic:2", None, json!({"cyclic": [t2]}));
    let v = purely_inseparable_field_test(&split, &split.group().whole()).unwrap();
    let InseparabilityVerdict::Nilpotent { witness, .. } = v else { panic!("expected a nilpotent") };
    // U_σ + t
    let expected = split.add(&split.basis(1), &split.scalar(f2t.variable().unwrap())).unwrap();
    assert_eq!(witness, expected);

    // over a finite field a nontrivial P never gives a field
    let f2 = Field::prime(2).unwrap();
    let perfect = algebra(&f2, "cyclic:2", None, json!("trivial"));
    assert!(!purely_inseparable_field_test(&perfect, &perfect.group().whole()).unwrap().is_field());
}

#[test]
fn twisted_subalgebras() {
    let alg = example_c();
    let (base, _) = alg.twisted_subalgebra(&alg.group().trivial_subgroup());
    assert_eq!(base.group().order(), 1);
    let (whole, _) = alg.twisted_subalgebra(&alg.group().whole());
    assert_eq!(whole.cocycle(), alg.cocycle());
    let (gi, emb) = alg.twisted_subalgebra(&alg.module().inertia());
    assert_eq!(emb, vec![0, 1]);
    let u = gi.basis(1);
    assert_eq!(gi.multiply(&u, &u).unwrap(), gi.one());
    assert!(gi.module().action().is_trivial());
}
