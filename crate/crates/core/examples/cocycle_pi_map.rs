//! Normalizing a cocycle on a cyclic normal subgroup and reading off π_f.
use std::sync::Arc;

use crossed_order::cocycles::{
    brute_force_is_inflated, character_group, is_character_coboundary, normalize_on_cyclic_subgroup, pi_map,
    CocycleSpec, UnitModule,
};
use crossed_order::exactfields::Field;
use crossed_order::groupkit::named_group;
use serde_json::json;

fn main() -> crossed_order::Result<()> {
    let f5 = Field::prime(5)?;
    let g = Arc::new(named_group("product:cyclic:2,cyclic:4")?);
    let m = UnitModule::with_trivial_action(f5.clone(), g.clone());
    // U_a U_b = -U_b U_a
    let f = CocycleSpec::parse(&json!({"bimult": [[0, 1], [0, 0]]}))?.build(&m)?;
    let b = g.index_of("b").expect("label");
    let a_sub = g.subgroup_generated(&[b]);
    let n = normalize_on_cyclic_subgroup(&m, &f, &a_sub)?;
    println!("U_b^4 = {}, chosen 4th root {}", f5.format(&n.alpha), f5.format(&n.beta));
    let pi = pi_map(&m, &n.cocycle, &a_sub)?;
    for x in g.elements() {
        let values: Vec<String> = pi.of(x).values().iter().map(|v| f5.format(v)).collect();
        println!("π({}) = [{}] on <b>", g.label(x), values.join(", "));
    }
    let chars = character_group(&f5, &g, &a_sub)?;
    let split = is_character_coboundary(&m, &pi, &chars);
    println!("π is a 1-coboundary: {}", split.is_some());
    println!("f inflated from G/<b> (exhaustive search): {}", brute_force_is_inflated(&m, &f, &a_sub)?.is_some());
    Ok(())
}
