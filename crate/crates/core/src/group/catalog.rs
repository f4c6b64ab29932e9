//! Small groups given by multiplication tables.
//!
//! Table elements are numbered so that index 0 is the identity. Metacyclic
//! groups `<x, y | x^a, y^b = x^s, y x y^-1 = x^r>` number `x^i y^j` as
//! `i*b + j`; direct products number `(i, j)` as `i*|B| + j`; semidirect
//! products with `Z/2` number `(n, t)` as `2n + t`.

use super::{CayleyGroup, FiniteGroup};

fn cayley(order: usize, f: impl Fn(usize, usize) -> usize) -> FiniteGroup {
    FiniteGroup::Cayley(CayleyGroup::from_fn(order, f).expect("catalog tables are groups"))
}

fn table(g: &FiniteGroup) -> &CayleyGroup {
    match g {
        FiniteGroup::Cayley(c) => c,
        _ => panic!("catalog helpers take table groups"),
    }
}

pub fn cyclic_table(n: usize) -> FiniteGroup {
    cayley(n, |a, b| (a + b) % n)
}

/// `x^i y^j` with `y x y^-1 = x^r` and `y^b = x^s`.
pub fn metacyclic(a: usize, b: usize, r: usize, s: usize) -> FiniteGroup {
    let rpow: Vec<usize> = (0..b)
        .scan(1usize, |acc, _| {
            let v = *acc;
            *acc = *acc * r % a;
            Some(v)
        })
        .collect();
    cayley(a * b, |u, v| {
        let (i1, j1) = (u / b, u % b);
        let (i2, j2) = (v / b, v % b);
        let mut i = i1 + rpow[j1] * i2;
        if j1 + j2 >= b {
            i += s;
        }
        (i % a) * b + (j1 + j2) % b
    })
}

/// Indices of `<x>` and `<y>` inside [`metacyclic`].
pub fn metacyclic_parts(a: usize, b: usize) -> (Vec<u32>, Vec<u32>) {
    ((0..a).map(|i| (i * b) as u32).collect(), (0..b).map(|j| j as u32).collect())
}

pub fn direct_product(x: &FiniteGroup, y: &FiniteGroup) -> FiniteGroup {
    let (tx, ty) = (table(x), table(y));
    let m = ty.order();
    cayley(tx.order() * m, |u, v| {
        tx.mul((u / m) as u32, (v / m) as u32) as usize * m + ty.mul((u % m) as u32, (v % m) as u32) as usize
    })
}

/// `N x| Z/2` where the generator acts on `N` by the automorphism `phi`.
pub fn semidirect_z2(n: &FiniteGroup, phi: &[u32]) -> FiniteGroup {
    let tn = table(n);
    cayley(2 * tn.order(), |u, v| {
        let (n1, t1) = (u / 2, u % 2);
        let (n2, t2) = (v / 2, v % 2);
        let n2 = if t1 == 1 { phi[n2] } else { n2 as u32 };
        2 * tn.mul(n1 as u32, n2) as usize + (t1 ^ t2)
    })
}

pub fn klein_four() -> FiniteGroup {
    direct_product(&cyclic_table(2), &cyclic_table(2))
}

pub fn dihedral8() -> FiniteGroup {
    metacyclic(4, 2, 3, 0)
}

pub fn quaternion8() -> FiniteGroup {
    metacyclic(4, 2, 3, 2)
}

/// The five groups of order 8.
pub fn order8() -> Vec<(&'static str, FiniteGroup)> {
    vec![
        ("Z8", cyclic_table(8)),
        ("Z4xZ2", direct_product(&cyclic_table(4), &cyclic_table(2))),
        ("Z2^3", direct_product(&klein_four(), &cyclic_table(2))),
        ("D4", dihedral8()),
        ("Q8", quaternion8()),
    ]
}

/// The fourteen groups of order 16.
pub fn order16() -> Vec<(&'static str, FiniteGroup)> {
    let z2 = cyclic_table(2);
    let z4 = cyclic_table(4);
    let z4z2 = direct_product(&z4, &z2);
    // (i, j) in Z4 x Z2 is numbered 2i + j
    let phi = |f: &dyn Fn(usize, usize) -> (usize, usize)| -> Vec<u32> {
        (0..8)
            .map(|u| {
                let (i, j) = f(u / 2, u % 2);
                (2 * (i % 4) + j % 2) as u32
            })
            .collect()
    };
    vec![
        ("Z16", cyclic_table(16)),
        ("Z8xZ2", direct_product(&cyclic_table(8), &z2)),
        ("M16", metacyclic(8, 2, 5, 0)),
        ("D8", metacyclic(8, 2, 7, 0)),
        ("SD16", metacyclic(8, 2, 3, 0)),
        ("Q16", metacyclic(8, 2, 7, 4)),
        ("Z4xZ4", direct_product(&z4, &z4)),
        ("Z4:Z4", metacyclic(4, 4, 3, 0)),
        ("Z4xZ2^2", direct_product(&z4z2, &z2)),
        ("D4xZ2", direct_product(&dihedral8(), &z2)),
        ("Q8xZ2", direct_product(&quaternion8(), &z2)),
        ("Z2^4", direct_product(&direct_product(&klein_four(), &z2), &z2)),
        ("(Z4xZ2):Z2", semidirect_z2(&z4z2, &phi(&|i, j| (i, i + j)))),
        ("Pauli", semidirect_z2(&z4z2, &phi(&|i, j| (i + 2 * j, j)))),
    ]
}

/// Nonabelian group of order 21.
pub fn order21() -> FiniteGroup {
    metacyclic(7, 3, 2, 0)
}

/// `F_5 x| F_5^x`, order 20.
pub fn affine_f5() -> FiniteGroup {
    metacyclic(5, 4, 2, 0)
}

/// Dicyclic group of order 12.
pub fn dicyclic12() -> FiniteGroup {
    metacyclic(3, 4, 2, 0)
}
