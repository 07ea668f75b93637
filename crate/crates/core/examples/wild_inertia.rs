//! Wild inertia over F_2(t): U_σ^2 = t is a field extension, U_σ^2 = t^2 is not.
use std::sync::Arc;

use crossed_order::cocycles::{CocycleSpec, UnitModule};
use crossed_order::exactfields::Field;
use crossed_order::groupkit::named_group;
use crossed_order::ramification::{analyze, Choices, RamificationCharacter, RamifiedScenario};
use serde_json::json;

fn main() -> crossed_order::Result<()> {
    let k = Field::rational_function(&Field::prime(2)?, "t")?;
    let g = Arc::new(named_group("cyclic:2")?);
    let m = UnitModule::with_trivial_action(k.clone(), g);
    for alpha in [json!({"num": [0, 1]}), json!({"num": [0, 0, 1]})] {
        let f = CocycleSpec::parse(&json!({ "cyclic": [alpha.clone()] }))?.build(&m)?;
        // σ fixes the uniformizer to first order, so all of G_I is wild
        let x = RamificationCharacter::Values(vec![(0, k.one()), (1, k.one())]);
        let s = RamifiedScenario::with_cocycle(m.clone(), x, &f);
        let report = analyze(&s, &Choices::default())?;
        println!("U_σ^2 = {}: {}", k.format(&k.decode(&alpha)?), report.verdict_line());
    }
    Ok(())
}
