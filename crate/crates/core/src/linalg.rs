//! Dense exact linear algebra over a [`Field`].

use crate::exactfields::{Field, FieldElement};

pub type Matrix = Vec<Vec<FieldElement>>;

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(field: &Field, m: &mut Matrix) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| !field.is_zero(&m[i][c])) else {
            continue;
        };
        m.swap(r, pr);
        let inv = field.inv(&m[r][c]).expect("pivot is nonzero");
        for x in m[r].iter_mut() {
            *x = field.mul(x, &inv);
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || field.is_zero(&row[c]) {
                continue;
            }
            let factor = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                *x = field.sub(x, &field.mul(&factor, y));
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    pivots
}

/// Basis of the null space `{x : m x = 0}` for a matrix with `cols` columns,
/// one vector per free column, returned in reduced echelon form.
pub fn kernel(field: &Field, m: &Matrix, cols: usize) -> Matrix {
    let mut a = m.clone();
    let pivots = rref(field, &mut a);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    let mut basis: Matrix = free
        .iter()
        .map(|&fc| {
            let mut v = vec![field.zero(); cols];
            v[fc] = field.one();
            for (row, &pc) in a.iter().zip(&pivots) {
                v[pc] = field.neg(&row[fc]);
            }
            v
        })
        .collect();
    rref(field, &mut basis);
    basis
}

/// Some solution of `m x = b`, if the system is consistent.
pub fn solve(field: &Field, m: &Matrix, b: &[FieldElement]) -> Option<Vec<FieldElement>> {
    let cols = m.first().map_or(0, Vec::len);
    let mut aug: Matrix = m
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let pivots = rref(field, &mut aug);
    if pivots.last() == Some(&cols) {
        return None;
    }
    let mut x = vec![field.zero(); cols];
    for (row, &pc) in aug.iter().zip(&pivots) {
        x[pc] = row[cols].clone();
    }
    Some(x)
}

/// Rank of a matrix.
pub fn rank(field: &Field, m: &Matrix) -> usize {
    let mut a = m.clone();
    rref(field, &mut a).len()
}

pub fn mat_vec(field: &Field, m: &Matrix, v: &[FieldElement]) -> Vec<FieldElement> {
    m.iter()
        .map(|row| row.iter().zip(v).fold(field.zero(), |acc, (a, b)| field.add(&acc, &field.mul(a, b))))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel_and_solve_over_f5() {
        let f = Field::prime(5).unwrap();
        let e = |rows: &[&[i64]]| -> Matrix {
            rows.iter().map(|r| r.iter().map(|&x| f.from_int(x)).collect()).collect()
        };
        let m = e(&[&[1, 2, 3], &[2, 4, 2]]);
        let k = kernel(&f, &m, 3);
        assert_eq!(k.len(), 1);
        assert!(mat_vec(&f, &m, &k[0]).iter().all(|x| f.is_zero(x)));
        let b = vec![f.from_int(1), f.from_int(2)];
        let x = solve(&f, &m, &b).unwrap();
        assert_eq!(mat_vec(&f, &m, &x), b);
        let singular = e(&[&[1, 2], &[2, 4]]);
        assert!(solve(&f, &singular, &[f.from_int(1), f.from_int(0)]).is_none());
        assert_eq!(rank(&f, &m), 2);
    }
}
