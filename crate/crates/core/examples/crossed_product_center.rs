//! The center of a residue crossed product and its simple components.
use std::sync::Arc;

use crossed_order::cocycles::{CocycleSpec, UnitModule};
use crossed_order::crossedalg::{count_simple_components_oracle, CrossedProduct};
use crossed_order::exactfields::Field;
use crossed_order::groupkit::{named_group, GroupAction};
use serde_json::json;

fn main() -> crossed_order::Result<()> {
    let f9 = Field::extension(3, vec![1, 0, 1])?;
    let g = Arc::new(named_group("klein4")?);
    // a acts by Frobenius, b fixes F_9
    let action = GroupAction::new(&g, &f9, &[0, 1, 0, 1])?;
    let m = UnitModule::new(f9.clone(), g, action);
    for spec in [json!("trivial"), json!({"bimult": [[0, 1], [0, 0]]})] {
        let f = CocycleSpec::parse(&spec)?.build(&m)?;
        let alg = CrossedProduct::new(m.clone(), f);
        let center: Vec<String> = alg.center()?.iter().map(|z| alg.format(z)).collect();
        let report = count_simple_components_oracle(&alg)?;
        println!("cocycle {spec}: center basis [{}]", center.join("; "));
        println!("  simple components: {}; center dimension over F_3: {}", report.count, report.center_dim);
    }
    Ok(())
}
