//! Arithmetic in F_9, F_8 and F_2(t).
use crossed_order::exactfields::Field;

fn main() -> crossed_order::Result<()> {
    let f9 = Field::extension(3, vec![1, 0, 1])?;
    let u = f9.power_basis_generator();
    println!("{}: u^2 = {}, u^-1 = {}", f9.name(), f9.format(&f9.pow(&u, 2)?), f9.format(&f9.inv(&u)?));
    let zeta8 = f9.primitive_root_of_unity(8)?;
    println!("primitive 8th root of unity: {}", f9.format(&zeta8));
    let fourth_roots: Vec<String> = f9.all_nth_roots(&f9.from_int(-1), 4)?.iter().map(|x| f9.format(x)).collect();
    println!("x^4 = -1 in F_9: {}", fourth_roots.join(", "));

    let f8 = Field::extension(2, vec![1, 1, 0, 1])?;
    let g = f8.power_basis_generator();
    println!("{}: order of the generator is {:?}", f8.name(), f8.multiplicative_order(&g));

    let f2t = Field::rational_function(&Field::prime(2)?, "t")?;
    let t = f2t.variable().expect("rational function field");
    let x = f2t.div(&f2t.add(&t, &f2t.one()), &f2t.pow(&t, 3)?)?;
    println!("{}: x = {}, x^2 = {}", f2t.name(), f2t.format(&x), f2t.format(&f2t.pow(&x, 2)?));
    println!("t is a square: {}; t^2 is a square: {}", f2t.is_pth_power(&t), f2t.is_pth_power(&f2t.pow(&t, 2)?));
    Ok(())
}
