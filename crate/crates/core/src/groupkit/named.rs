//! Named constructions: `cyclic:n`, `klein4`, `s3`, `dihedral:n` and
//! `product:<name>,<name>,...` (first factor varies fastest).

use super::{AbelianCoords, FiniteGroup};
use crate::error::{Error, Result};

fn power_label(letter: char, e: usize) -> String {
    match e {
        0 => String::new(),
        1 => letter.to_string(),
        _ => format!("{letter}^{e}"),
    }
}

fn cyclic(n: usize) -> Result<FiniteGroup> {
    let table = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
    let labels = (0..n).map(|i| if i == 0 { "1".into() } else { power_label('a', i) }).collect();
    let g = FiniteGroup::from_table(table, Some(labels))?;
    let coords = if n == 1 {
        AbelianCoords { orders: vec![], generators: vec![], vectors: vec![vec![]] }
    } else {
        AbelianCoords { orders: vec![n as u64], generators: vec![1], vectors: (0..n as u64).map(|i| vec![i]).collect() }
    };
    Ok(g.with_coords(coords))
}

fn s3() -> Result<FiniteGroup> {
    // permutations of {1,2,3} as image lists, composed right to left
    let perms: [[usize; 3]; 6] = [[1, 2, 3], [1, 3, 2], [2, 1, 3], [2, 3, 1], [3, 1, 2], [3, 2, 1]];
    let labels = ["1", "(23)", "(12)", "(123)", "(132)", "(13)"];
    let compose = |a: &[usize; 3], b: &[usize; 3]| -> [usize; 3] { [a[b[0] - 1], a[b[1] - 1], a[b[2] - 1]] };
    let table = perms
        .iter()
        .map(|a| perms.iter().map(|b| perms.iter().position(|c| *c == compose(a, b)).unwrap()).collect())
        .collect();
    FiniteGroup::from_table(table, Some(labels.iter().map(|s| s.to_string()).collect()))
}

fn dihedral(n: usize) -> Result<FiniteGroup> {
    let idx = |i: usize, a: usize| i + n * a;
    let mut table = vec![vec![0; 2 * n]; 2 * n];
    for (i, a) in (0..2).flat_map(|a| (0..n).map(move |i| (i, a))) {
        for (j, b) in (0..2).flat_map(|b| (0..n).map(move |j| (j, b))) {
            let k = if a == 0 { (i + j) % n } else { (i + n - j) % n };
            table[idx(i, a)][idx(j, b)] = idx(k, (a + b) % 2);
        }
    }
    let labels = (0..2)
        .flat_map(|a| {
            (0..n).map(move |i| {
                let s = format!("{}{}", power_label('r', i), if a == 1 { "s" } else { "" });
                if s.is_empty() { "1".to_string() } else { s }
            })
        })
        .collect();
    FiniteGroup::from_table(table, Some(labels))
}

fn product(names: &[&str]) -> Result<FiniteGroup> {
    let factors = names.iter().map(|n| named_group(n)).collect::<Result<Vec<_>>>()?;
    let sizes: Vec<usize> = factors.iter().map(FiniteGroup::order).collect();
    let n: usize = sizes.iter().product();
    if n > super::MAX_GROUP_ORDER {
        return Err(Error::InvalidGroup(format!("product of order {n} is too large")));
    }
    let split = |mut x: usize| -> Vec<usize> {
        sizes
            .iter()
            .map(|&s| {
                let c = x % s;
                x /= s;
                c
            })
            .collect()
    };
    let join = |c: &[usize]| c.iter().zip(&sizes).rev().fold(0, |acc, (&ci, &s)| acc * s + ci);
    let table = (0..n)
        .map(|x| {
            let cx = split(x);
            (0..n)
                .map(|y| {
                    let cy = split(y);
                    let cz: Vec<usize> = factors.iter().enumerate().map(|(k, f)| f.mul(cx[k], cy[k])).collect();
                    join(&cz)
                })
                .collect()
        })
        .collect();
    let all_cyclic = names.iter().all(|n| n.starts_with("cyclic:")) && names.len() <= 26;
    let labels = (0..n)
        .map(|x| {
            let c = split(x);
            if all_cyclic {
                let s: String = c.iter().enumerate().map(|(k, &e)| power_label((b'a' + k as u8) as char, e)).collect();
                if s.is_empty() { "1".to_string() } else { s }
            } else {
                let parts: Vec<&str> = c.iter().enumerate().map(|(k, &e)| factors[k].label(e)).collect();
                format!("({})", parts.join(","))
            }
        })
        .collect();
    let g = FiniteGroup::from_table(table, Some(labels))?;
    let fc: Option<Vec<&AbelianCoords>> = factors.iter().map(FiniteGroup::abelian_coords).collect();
    Ok(match fc {
        Some(fc) => {
            let orders: Vec<u64> = fc.iter().flat_map(|c| c.orders.clone()).collect();
            let vectors = (0..n)
                .map(|x| split(x).iter().zip(&fc).flat_map(|(&e, c)| c.vectors[e].clone()).collect())
                .collect::<Vec<Vec<u64>>>();
            let generators = (0..orders.len())
                .map(|i| {
                    (0..n)
                        .find(|&x| vectors[x].iter().enumerate().all(|(j, &v)| v == u64::from(i == j)))
                        .expect("unit vector present")
                })
                .collect();
            g.with_coords(AbelianCoords { orders, generators, vectors })
        }
        None => g,
    })
}

/// Expands a named construction deterministically.
pub fn named_group(name: &str) -> Result<FiniteGroup> {
    let bad = || Error::InvalidGroup(format!("unknown group name {name:?}"));
    let size = |s: &str| -> Result<usize> {
        s.parse::<usize>().ok().filter(|&n| (1..=super::MAX_GROUP_ORDER).contains(&n)).ok_or_else(bad)
    };
    if let Some(rest) = name.strip_prefix("product:") {
        let parts: Vec<&str> = rest.split(',').collect();
        if parts.iter().any(|p| p.starts_with("product:") || p.is_empty()) {
            return Err(bad());
        }
        return product(&parts);
    }
    match name.split_once(':') {
        Some(("cyclic", n)) => cyclic(size(n)?),
        Some(("dihedral", n)) if size(n)? >= 2 && 2 * size(n)? <= super::MAX_GROUP_ORDER => dihedral(size(n)?),
        None if name == "klein4" => product(&["cyclic:2", "cyclic:2"]),
        None if name == "s3" => s3(),
        _ => Err(bad()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels_and_coordinates() {
        let k = named_group("klein4").unwrap();
        assert_eq!(k.labels(), &["1", "a", "b", "ab"]);
        assert_eq!(k.abelian_coords().unwrap().orders, vec![2, 2]);
        let c = named_group("product:cyclic:2,cyclic:3").unwrap();
        assert_eq!(c.label(5), "ab^2");
        assert_eq!(c.abelian_coords().unwrap().vectors[5], vec![1, 2]);
        let d = named_group("dihedral:3").unwrap();
        assert!(!d.is_abelian());
        assert_eq!(d.labels()[4], "rs");
        let mixed = named_group("product:s3,cyclic:2").unwrap();
        assert_eq!(mixed.order(), 12);
        assert!(mixed.abelian_coords().is_none());
        assert!(named_group("cyclic:0").is_err());
        assert!(named_group("torus").is_err());
    }

    #[test]
    fn s3_structure() {
        let s3 = named_group("s3").unwrap();
        let r = s3.index_of("(123)").unwrap();
        let t = s3.index_of("(12)").unwrap();
        assert_eq!(s3.element_order(r), 3);
        assert_eq!(s3.element_order(t), 2);
        // t r t^-1 = r^-1
        assert_eq!(s3.conjugate(t, r), s3.inv(r));
    }
}
