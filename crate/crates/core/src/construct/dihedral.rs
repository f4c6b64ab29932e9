use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::symmetric::{fast_certificate, sym_fast_steps};
use super::{fast_bound, fold_certificate, fold_on, Certificate, ConstructOptions, ConstructionReport};
use crate::engine::{MixingSequence, MixingStep, Probability};
use crate::error::{MixError, Result};
use crate::group::{Element, FiniteGroup, IndexedGroup};
use crate::real::Real;

/// `cos(2 pi a / b)` when it is rational.
fn rational_cos(a: u64, b: u64) -> Option<BigRational> {
    let b = b / num_integer::gcd(a, b);
    let r = |x: i64, y: i64| BigRational::new(x.into(), y.into());
    match b {
        1 => Some(BigRational::one()),
        2 => Some(-BigRational::one()),
        3 => Some(r(-1, 2)),
        4 => Some(BigRational::zero()),
        6 => Some(r(1, 2)),
        _ => None,
    }
}

fn is_negative_cos(a: u64, b: u64) -> bool {
    match rational_cos(a, b) {
        Some(c) => c.is_negative(),
        None => Real::cos_turns(a as i64, b as i64).is_negative(),
    }
}

/// `1/(1 - cos(2 pi a / b))`, exact when the cosine is rational.
fn reflection_probability(a: u64, b: u64) -> Result<Probability> {
    match rational_cos(a, b) {
        Some(c) => Probability::exact((BigRational::one() - c).recip()),
        None => Probability::decimal(Real::one() / (Real::one() - Real::cos_turns(a as i64, b as i64))),
    }
}

/// Mixer of `D_m` for odd `m`:
/// `[tau, g_1 @ p_1, tau, ..., g_k @ p_k, tau]`, `k = (m-1)/2`, with
/// `g_j = sigma^s tau sigma^-s = sigma^2s tau` for the least `s` making
/// `alpha_j = cos(4 pi j s / m)` negative, and `p_j = 1/(1 - alpha_j)`.
pub fn dihedral_steps(m: u64) -> Result<Vec<MixingStep>> {
    if m == 0 || m.is_multiple_of(2) {
        return Err(MixError::InvalidParameter(format!("the reflection mixer needs odd m, got {m}")));
    }
    let tau = Element::Dihedral { rot: 0, reflect: true };
    let mut steps = vec![MixingStep::half(tau.clone())];
    for j in 1..=(m - 1) / 2 {
        let s =
            (1..m).find(|&s| is_negative_cos((2 * j * s) % m, m)).expect("some multiple of 2j/m lands in (1/4, 3/4)");
        let rot = (2 * s) % m;
        let p = reflection_probability((j * rot) % m, m)?;
        steps.push(MixingStep::new(Element::Dihedral { rot, reflect: true }, p));
        steps.push(MixingStep::half(tau.clone()));
    }
    Ok(steps)
}

fn split(n: u64) -> (u32, u64) {
    let t = n.trailing_zeros();
    (t, n >> t)
}

/// Mixer of `D_n` (order `2n`), `n = 2^t m`: the lifted `D_m` mixer, then
/// `(sigma^(m 2^j), 1/2)` for `j < t`. Length `t + m`.
pub fn construct_dihedral(n: u64, opts: &ConstructOptions) -> Result<ConstructionReport> {
    if n == 0 {
        return Err(MixError::InvalidParameter("dihedral needs n >= 1".into()));
    }
    let (t, m) = split(n);
    let group = FiniteGroup::dihedral(n);
    let mut steps = dihedral_steps(m)?;
    steps.extend((0..t).map(|j| MixingStep::half(Element::Dihedral { rot: m << j, reflect: false })));
    let seq = MixingSequence::new(group.clone(), steps);
    let cert = if super::group_order_fits(&group, opts) {
        fold_certificate(&seq, "group", &opts.verify)?
    } else {
        // D_n / <sigma^m> = D_m, and <sigma^m> = Z/2^t
        let quotient = IndexedGroup::new(FiniteGroup::dihedral(m), opts.fold_limit.min(opts.verify.enum_bound))?;
        let coset = fold_on(&quotient, &dihedral_steps(m)?, "D_n / <sigma^m>", &opts.verify)?;
        let kernel = super::construct_cyclic_2group(t, opts)?.certificate;
        Certificate::Extension { coset: Box::new(coset), subgroup: Box::new(kernel) }
    };
    ConstructionReport::new("dihedral", seq, (t as u64 + m) as f64, "t + m", cert, group.order())
}

/// Coxeter `B_n` (`even_only = false`) or `D_n` (`even_only = true`): the
/// lifted `S_n` mixer, then single sign flips (`B_n`) or adjacent double
/// flips (`D_n`) at `1/2`.
pub fn construct_signed_perm(n: usize, even_only: bool, opts: &ConstructOptions) -> Result<ConstructionReport> {
    if n < 2 {
        return Err(MixError::InvalidParameter(format!("signed permutations need n >= 2, got {n}")));
    }
    let group = FiniteGroup::signed(n, even_only);
    let lift = |s: &MixingStep| {
        let perm = s.g.as_perm().expect("permutation").to_vec();
        MixingStep::new(Element::Signed { perm, signs: vec![false; n] }, s.p.clone())
    };
    let flips = sign_flips(n, even_only);
    let mut steps: Vec<MixingStep> = sym_fast_steps(n).iter().map(lift).collect();
    steps.extend(flips.iter().map(|signs| {
        MixingStep::half(Element::Signed { perm: crate::group::perm::identity(n), signs: signs.clone() })
    }));
    let seq = MixingSequence::new(group.clone(), steps);
    let cert = if super::group_order_fits(&group, opts) {
        fold_certificate(&seq, "group", &opts.verify)?
    } else {
        Certificate::Extension {
            coset: Box::new(fast_certificate(n, opts)?),
            subgroup: Box::new(sign_certificate(n, even_only, &flips, opts)?),
        }
    };
    let extra = if even_only { n - 1 } else { n };
    let (family, expr) = if even_only {
        ("coxeter-d", "(3/2) floor(log2 n!) + n/2 + n - 1")
    } else {
        ("coxeter-b", "(3/2) floor(log2 n!) + n/2 + n")
    };
    ConstructionReport::new(family, seq, fast_bound(n) + extra as f64, expr, cert, group.order())
}

fn sign_flips(n: usize, even_only: bool) -> Vec<Vec<bool>> {
    if even_only {
        (0..n - 1)
            .map(|i| {
                let mut v = vec![false; n];
                v[i] = true;
                v[i + 1] = true;
                v
            })
            .collect()
    } else {
        (0..n)
            .map(|i| {
                let mut v = vec![false; n];
                v[i] = true;
                v
            })
            .collect()
    }
}

/// The flips as bitmasks must be independent over `F_2` and span the sign
/// subgroup (all masks, or the even ones). Small cases fold on the subgroup
/// itself; otherwise the subgroup is the direct product of the lines the
/// flips span, each mixed by its single step.
fn sign_certificate(n: usize, even_only: bool, flips: &[Vec<bool>], opts: &ConstructOptions) -> Result<Certificate> {
    let rank = if even_only { n - 1 } else { n };
    let masks: Vec<u128> =
        flips.iter().map(|v| v.iter().enumerate().fold(0u128, |m, (i, &b)| m | (b as u128) << i)).collect();
    if masks.len() != rank || gf2_rank(&masks) != rank || (even_only && masks.iter().any(|m| m.count_ones() % 2 == 1)) {
        return Err(MixError::VerificationFailed("sign flips do not form a basis of the sign subgroup".into()));
    }
    let encode = |v: &[bool]| Element::Product(v.iter().map(|&b| Element::Cyclic(b as u64)).collect());
    if rank < 64 && (1u128 << rank) <= opts.fold_limit.min(opts.verify.enum_bound) {
        let cube = FiniteGroup::product(vec![FiniteGroup::cyclic(2); n]);
        let members: Vec<Element> = (0u64..1 << n)
            .filter(|x| !even_only || x.count_ones() % 2 == 0)
            .map(|x| encode(&(0..n).map(|i| x >> i & 1 == 1).collect::<Vec<_>>()))
            .collect();
        let carrier = IndexedGroup::on_subgroup(cube, members)?;
        let steps: Vec<MixingStep> = flips.iter().map(|v| MixingStep::half(encode(v))).collect();
        return fold_on(&carrier, &steps, "sign subgroup", &opts.verify);
    }
    let line = IndexedGroup::new(FiniteGroup::cyclic(2), 2)?;
    let factors = (0..rank)
        .map(|_| fold_on(&line, &[MixingStep::half(Element::Cyclic(1))], "flip line", &opts.verify))
        .collect::<Result<Vec<_>>>()?;
    Ok(Certificate::Product { factors })
}

fn gf2_rank(masks: &[u128]) -> usize {
    let mut basis: Vec<u128> = Vec::new();
    for &m in masks {
        let r = basis.iter().fold(m, |x, &b| x.min(x ^ b));
        if r != 0 {
            basis.push(r);
        }
    }
    basis.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::Mode;

    #[test]
    fn three_and_four() {
        let opts = ConstructOptions::default();
        let r = construct_dihedral(3, &opts).unwrap();
        let s = &r.sequence.steps;
        assert_eq!(s[1].g, Element::Dihedral { rot: 2, reflect: true });
        assert_eq!(s[1].p, Probability::ratio(2, 3).unwrap());
        assert_eq!(r.mode, Mode::Exact);
        let r = construct_dihedral(4, &opts).unwrap();
        let rots: Vec<_> = r.sequence.steps.iter().map(|s| s.g.clone()).collect();
        assert_eq!(
            rots,
            vec![
                Element::Dihedral { rot: 0, reflect: true },
                Element::Dihedral { rot: 1, reflect: false },
                Element::Dihedral { rot: 2, reflect: false }
            ]
        );
    }

    #[test]
    fn five_is_numeric() {
        let r = construct_dihedral(5, &ConstructOptions::default()).unwrap();
        assert_eq!(r.mode, Mode::Numeric);
        assert_eq!(r.length, 5);
        assert!(r.certificate.max_dev() < 1e-9);
    }

    #[test]
    fn extension_path() {
        let opts = ConstructOptions { fold_limit: 10, ..Default::default() };
        let r = construct_dihedral(24, &opts).unwrap();
        assert!(matches!(r.certificate, Certificate::Extension { .. }));
        assert_eq!(r.length, 6);
    }

    #[test]
    fn signed_small() {
        let opts = ConstructOptions::default();
        for (n, even) in [(2, false), (3, false), (3, true), (4, true)] {
            let r = construct_signed_perm(n, even, &opts).unwrap();
            assert!(r.certificate.holds(), "n = {n}, even = {even}");
        }
        let small = ConstructOptions { fold_limit: 10, ..Default::default() };
        let r = construct_signed_perm(4, true, &small).unwrap();
        assert!(matches!(r.certificate, Certificate::Extension { .. }));
        let r = construct_signed_perm(24, false, &ConstructOptions::default()).unwrap();
        assert!(r.certificate.holds());
    }

    #[test]
    fn flip_rank() {
        assert_eq!(gf2_rank(&[0b11, 0b110, 0b101]), 2);
        assert_eq!(gf2_rank(&[1, 2, 4, 8]), 4);
    }
}
