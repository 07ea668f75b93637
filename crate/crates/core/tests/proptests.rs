use std::sync::Arc;

use proptest::prelude::*;
use serde_json::json;

use crossed_order::cocycles::{
    brute_force_is_coboundary, coboundary, validate_cocycle, CocycleSpec, OneCochain, TwoCocycle, UnitModule,
};
use crossed_order::crossedalg::CrossedProduct;
use crossed_order::exactfields::{Field, FieldElement};
use crossed_order::groupkit::{named_group, GroupAction};

fn fields() -> Vec<Field> {
    vec![
        Field::prime(2).unwrap(),
        Field::prime(3).unwrap(),
        Field::prime(7).unwrap(),
        Field::extension(3, vec![1, 0, 1]).unwrap(),
        Field::extension(2, vec![1, 1, 0, 1]).unwrap(),
    ]
}

fn element(field: &Field, seed: u32) -> FieldElement {
    let q = field.order().unwrap() as u32;
    field.constant(seed % q)
}

fn ratfunc_element(field: &Field, num: &[u32], den: &[u32]) -> FieldElement {
    let p = field.characteristic();
    let poly = |c: &[u32]| c.iter().map(|x| x % p).collect::<Vec<_>>();
    let mut den = poly(den);
    if den.iter().all(|&c| c == 0) {
        den = vec![1];
    }
    field.fraction(poly(num), den).unwrap()
}

/// Trivial action on `F_7`, or the Frobenius on `F_9` through `C_2`.
fn modules() -> Vec<UnitModule> {
    let f7 = Field::prime(7).unwrap();
    let f9 = Field::extension(3, vec![1, 0, 1]).unwrap();
    let c6 = Arc::new(named_group("cyclic:6").unwrap());
    let klein = Arc::new(named_group("klein4").unwrap());
    let s3 = Arc::new(named_group("s3").unwrap());
    let frob = GroupAction::new(&klein, &f9, &[0, 1, 0, 1]).unwrap();
    vec![
        UnitModule::with_trivial_action(f7.clone(), c6),
        UnitModule::with_trivial_action(f7, s3),
        UnitModule::new(f9, klein, frob),
    ]
}

fn cochain(m: &UnitModule, seeds: &[u32]) -> OneCochain {
    let units = m.field().units().unwrap();
    let values = m
        .group()
        .elements()
        .map(|g| if g == 0 { m.field().one() } else { units[seeds[g % seeds.len()] as usize % units.len()].clone() })
        .collect();
    OneCochain::new(m, values).unwrap()
}

proptest! {
    #[test]
    fn finite_field_axioms(k in 0usize..5, a in any::<u32>(), b in any::<u32>(), c in any::<u32>()) {
        let f = &fields()[k];
        let (a, b, c) = (element(f, a), element(f, b), element(f, c));
        prop_assert_eq!(f.add(&a, &b), f.add(&b, &a));
        prop_assert_eq!(f.mul(&a, &b), f.mul(&b, &a));
        prop_assert_eq!(f.mul(&a, &f.add(&b, &c)), f.add(&f.mul(&a, &b), &f.mul(&a, &c)));
        prop_assert_eq!(f.mul(&f.mul(&a, &b), &c), f.mul(&a, &f.mul(&b, &c)));
        prop_assert!(f.is_zero(&f.add(&a, &f.neg(&a))));
        if !f.is_zero(&a) {
            prop_assert!(f.is_one(&f.mul(&a, &f.inv(&a).unwrap())));
            let q = f.order().unwrap() as i64;
            prop_assert_eq!(f.pow(&a, q - 1).unwrap(), f.one());
        }
        let p = f.characteristic() as i64;
        let frob = |x: &FieldElement| f.pow(x, p).unwrap();
        prop_assert_eq!(frob(&f.add(&a, &b)), f.add(&frob(&a), &frob(&b)));
        prop_assert_eq!(f.pth_root(&frob(&a)), Some(a.clone()));
    }

    #[test]
    fn nth_roots_are_roots(k in 0usize..5, a in any::<u32>(), n in 1u64..9) {
        let f = &fields()[k];
        let a = element(f, a);
        prop_assume!(!f.is_zero(&a));
        let roots = f.all_nth_roots(&a, n).unwrap();
        for r in &roots {
            prop_assert_eq!(&f.pow(r, n as i64).unwrap(), &a);
        }
        let brute = f.units().unwrap().into_iter().filter(|x| f.pow(x, n as i64).unwrap() == a).count();
        prop_assert_eq!(roots.len(), brute);
        prop_assert_eq!(f.nth_root(&a, n).unwrap().is_some(), brute > 0);
    }

    #[test]
    fn rational_function_axioms(
        p in prop::sample::select(vec![2u32, 3]),
        n1 in prop::collection::vec(0u32..3, 1..4),
        d1 in prop::collection::vec(0u32..3, 1..3),
        n2 in prop::collection::vec(0u32..3, 1..4),
        d2 in prop::collection::vec(0u32..3, 1..3),
    ) {
        let f = Field::rational_function(&Field::prime(p).unwrap(), "t").unwrap();
        let a = ratfunc_element(&f, &n1, &d1);
        let b = ratfunc_element(&f, &n2, &d2);
        prop_assert_eq!(f.add(&a, &b), f.add(&b, &a));
        prop_assert_eq!(f.mul(&a, &b), f.mul(&b, &a));
        if !f.is_zero(&b) {
            prop_assert_eq!(f.mul(&f.div(&a, &b).unwrap(), &b), a.clone());
        }
        let ap = f.pow(&a, p as i64).unwrap();
        prop_assert!(f.is_pth_power(&ap));
        prop_assert_eq!(f.pth_root(&ap), Some(a.clone()));
        prop_assert_eq!(f.decode(&f.encode(&a)).unwrap(), a);
    }

    #[test]
    fn twisting_preserves_cocycles(k in 0usize..3, seeds in prop::collection::vec(any::<u32>(), 1..8)) {
        let m = &modules()[k];
        let c = cochain(m, &seeds);
        let b = coboundary(m, &c);
        prop_assert!(validate_cocycle(m, b.table()).unwrap().is_valid());
        let found = brute_force_is_coboundary(m, &b).unwrap();
        prop_assert!(found.is_some());
        prop_assert_eq!(coboundary(m, &found.unwrap()), b.clone());
        let trivial = TwoCocycle::trivial(m);
        prop_assert_eq!(trivial.twist(m, &c), b);
    }

    #[test]
    fn crossed_products_are_associative(
        k in 0usize..3,
        seeds in prop::collection::vec(any::<u32>(), 1..8),
        coeffs in prop::collection::vec(any::<u32>(), 18),
    ) {
        let m = modules()[k].clone();
        let base = match k {
            0 => CocycleSpec::parse(&json!({"cyclic": [3]})).unwrap().build(&m).unwrap(),
            2 => CocycleSpec::parse(&json!({"bimult": [[0, 1], [0, 0]]})).unwrap().build(&m).unwrap(),
            _ => TwoCocycle::trivial(&m),
        };
        let f = base.twist(&m, &cochain(&m, &seeds));
        let alg = CrossedProduct::new(m.clone(), f);
        let n = m.group().order();
        let q = m.field().order().unwrap() as u32;
        let el = |off: usize| alg.from_coeffs((0..n).map(|i| m.field().constant(coeffs[(off + i) % 18] % q)).collect()).unwrap();
        let (x, y, z) = (el(0), el(6), el(12));
        let left = alg.multiply(&alg.multiply(&x, &y).unwrap(), &z).unwrap();
        let right = alg.multiply(&x, &alg.multiply(&y, &z).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        prop_assert_eq!(alg.multiply(&alg.one(), &x).unwrap(), x.clone());
        prop_assert_eq!(alg.multiply(&x, &alg.one()).unwrap(), x);
    }
}
