//! Independent reference computations: naive convolution over hash maps,
//! using only `FiniteGroup::mul` and the raw step data.

#![allow(dead_code)]

use std::collections::{HashMap, HashSet};

use mixable::{Element, FiniteGroup, MixingStep};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub fn rational(step: &MixingStep) -> Option<BigRational> {
    step.p.as_rational().cloned()
}

/// One left-to-right convolution step: `mu -> (1-p) mu + p mu * g`.
pub fn exact_step(
    group: &FiniteGroup,
    law: &HashMap<Element, BigRational>,
    s: &MixingStep,
) -> Option<HashMap<Element, BigRational>> {
    let p = rational(s)?;
    let q = BigRational::one() - &p;
    let mut next: HashMap<Element, BigRational> = HashMap::with_capacity(law.len() * 2);
    for (x, m) in law {
        if !q.is_zero() {
            *next.entry(x.clone()).or_insert_with(BigRational::zero) += m * &q;
        }
        if !p.is_zero() {
            *next.entry(group.mul(x, &s.g)).or_insert_with(BigRational::zero) += m * &p;
        }
    }
    next.retain(|_, m| !m.is_zero());
    Some(next)
}

/// Law of `g_1^{e_1} ... g_k^{e_k}`, built left to right.
pub fn exact_law(group: &FiniteGroup, steps: &[MixingStep]) -> Option<HashMap<Element, BigRational>> {
    let mut law = HashMap::from([(group.identity(), BigRational::one())]);
    for s in steps {
        law = exact_step(group, &law, s)?;
    }
    Some(law)
}

pub fn float_law(group: &FiniteGroup, steps: &[MixingStep]) -> HashMap<Element, f64> {
    let mut law = HashMap::from([(group.identity(), 1.0)]);
    for s in steps {
        let p = s.p.to_f64();
        let mut next: HashMap<Element, f64> = HashMap::with_capacity(law.len() * 2);
        for (x, m) in &law {
            *next.entry(x.clone()).or_insert(0.0) += m * (1.0 - p);
            *next.entry(group.mul(x, &s.g)).or_insert(0.0) += m * p;
        }
        law = next;
    }
    law
}

/// Exact uniformity on all of `G`; the error names the first failure.
pub fn exactly_uniform(group: &FiniteGroup, steps: &[MixingStep]) -> Result<(), String> {
    let law = exact_law(group, steps).ok_or("decimal probability in an exact check")?;
    let order = group.order();
    if law.len() as u128 != order {
        return Err(format!("support {} of {}", law.len(), order));
    }
    let u = BigRational::new(BigInt::one(), BigInt::from(order));
    match law.values().find(|m| **m != u) {
        Some(m) => Err(format!("mass {m} != 1/{order}")),
        None => Ok(()),
    }
}

/// `max |mu(g) - 1/|G||` by a float fold.
pub fn float_dev(group: &FiniteGroup, steps: &[MixingStep]) -> f64 {
    let law = float_law(group, steps);
    let order = group.order();
    let u = 1.0 / order as f64;
    let mut dev = law.values().map(|m| (m - u).abs()).fold(0.0, f64::max);
    if (law.values().filter(|m| **m > 1e-15).count() as u128) < order {
        dev = dev.max(u);
    }
    dev
}

/// One action step on a point law: `y -> g y` with probability `p`.
pub fn point_step(law: &[BigRational], s: &MixingStep) -> Option<Vec<BigRational>> {
    let p = rational(s)?;
    let perm = s.g.as_perm()?;
    let mut next: Vec<BigRational> = law.iter().map(|m| m * (BigRational::one() - &p)).collect();
    for (y, m) in law.iter().enumerate() {
        if !m.is_zero() {
            next[perm[y] as usize] += m * &p;
        }
    }
    Some(next)
}

/// Law of `g_1^{e_1} ... g_k^{e_k} x` for a permutation group acting on
/// `0..n`: the last step acts first.
pub fn point_law(steps: &[MixingStep], n: usize, x: usize) -> Option<Vec<BigRational>> {
    let mut law = vec![BigRational::zero(); n];
    law[x] = BigRational::one();
    for s in steps.iter().rev() {
        law = point_step(&law, s)?;
    }
    Some(law)
}

/// Subgroup generated by `gens`, by breadth-first closure.
pub fn closure(group: &FiniteGroup, gens: &[Element]) -> HashSet<Element> {
    let mut seen = HashSet::from([group.identity()]);
    let mut queue = vec![group.identity()];
    while let Some(x) = queue.pop() {
        for g in gens {
            let y = group.mul(&x, g);
            if seen.insert(y.clone()) {
                queue.push(y);
            }
        }
    }
    seen
}

/// Order of `g` by repeated multiplication.
pub fn naive_order(group: &FiniteGroup, g: &Element) -> u64 {
    let e = group.identity();
    let mut x = g.clone();
    let mut k = 1;
    while x != e {
        x = group.mul(&x, g);
        k += 1;
    }
    k
}

/// `ceil(log2 n)` by doubling.
pub fn entropy(n: u128) -> u32 {
    let mut k = 0;
    while (1u128 << k) < n {
        k += 1;
    }
    k
}

/// `floor(log2 n!)` from the exact factorial.
pub fn floor_log2_factorial(n: u64) -> u64 {
    let f: num_bigint::BigUint = (1..=n).product();
    f.bits().saturating_sub(1)
}

/// `(t, m)` with `n = 2^t m`, `m` odd.
pub fn two_adic(mut n: u64) -> (u64, u64) {
    let mut t = 0;
    while n.is_multiple_of(2) {
        n /= 2;
        t += 1;
    }
    (t, n)
}

/// Complex entries as f64 `(re, im)` pairs.
pub type C = (f64, f64);

pub fn cmul(a: C, b: C) -> C {
    (a.0 * b.0 - a.1 * b.1, a.0 * b.1 + a.1 * b.0)
}

pub fn matmul(a: &[Vec<C>], b: &[Vec<C>]) -> Vec<Vec<C>> {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    (0..n).fold((0.0, 0.0), |acc, k| {
                        let t = cmul(a[i][k], b[k][j]);
                        (acc.0 + t.0, acc.1 + t.1)
                    })
                })
                .collect()
        })
        .collect()
}

pub fn det(m: &[Vec<C>]) -> C {
    match m.len() {
        1 => m[0][0],
        2 => {
            let a = cmul(m[0][0], m[1][1]);
            let b = cmul(m[0][1], m[1][0]);
            (a.0 - b.0, a.1 - b.1)
        }
        3 => {
            let mut acc = (0.0, 0.0);
            for j in 0..3 {
                let minor = cmul(m[1][(j + 1) % 3], m[2][(j + 2) % 3]);
                let minor2 = cmul(m[1][(j + 2) % 3], m[2][(j + 1) % 3]);
                let t = cmul(m[0][j], (minor.0 - minor2.0, minor.1 - minor2.1));
                acc = (acc.0 + t.0, acc.1 + t.1);
            }
            acc
        }
        _ => unimplemented!("only small determinants"),
    }
}

pub fn cabs(c: C) -> f64 {
    c.0.hypot(c.1)
}

pub fn frobenius(m: &[Vec<C>]) -> f64 {
    m.iter().flatten().map(|c| c.0 * c.0 + c.1 * c.1).sum::<f64>().sqrt()
}
