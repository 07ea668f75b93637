//! Subgroup lattices, quotients and Sylow subgroups of small groups.
use crossed_order::groupkit::named_group;

fn main() -> crossed_order::Result<()> {
    for name in ["cyclic:6", "klein4", "s3", "dihedral:4", "product:cyclic:2,cyclic:4"] {
        let g = named_group(name)?;
        let subgroups = g.enumerate_all_subgroups();
        let normal = subgroups.iter().filter(|h| g.is_normal(h)).count();
        println!(
            "{name}: order {}, exponent {}, abelian {}, {} subgroups ({normal} normal), labels {:?}",
            g.order(),
            g.exponent(),
            g.is_abelian(),
            subgroups.len(),
            g.labels()
        );
    }
    let s3 = named_group("s3")?;
    let a3 = s3.commutator_subgroup();
    let q = s3.quotient_group(&a3)?;
    println!("S_3 / [S_3, S_3] has order {}", q.group.order());
    let sylow2 = s3.sylow_subgroup(2);
    let labels: Vec<&str> = sylow2.elements().iter().map(|&x| s3.label(x)).collect();
    println!("a Sylow 2-subgroup of S_3: {{{}}}", labels.join(", "));
    Ok(())
}
