use super::*;
use crate::engine::{verify, MixingSequence, VerifyOptions};

fn small(x: &str) -> Real {
    Real::parse(x).unwrap()
}

fn d(rot: u64, reflect: bool) -> Element {
    Element::Dihedral { rot, reflect }
}

fn plane(n: u64, j: u64) -> MatrixRep {
    dihedral_irreps(n).unwrap().into_iter().find(|r| r.label == format!("plane-{j}")).unwrap()
}

/// Endpoint and kernel-budget checks on an emitted mixing.
fn check_shape(rep: &MatrixRep, seq: &RepMixingSequence) {
    let g = rep.group();
    let first = &seq.steps[0];
    let last = seq.steps.last().unwrap();
    for s in [first, last] {
        assert!(s.p.is_half());
        assert_eq!(g.element_order(&s.g) % 2, 0);
    }
    let budget: usize =
        seq.steps.iter().filter(|s| s.p.is_half()).map(|s| rep.minus_one_multiplicity(&s.g).unwrap()).sum();
    assert!(budget >= rep.dim());
}

#[test]
fn witnesses() {
    let s3 = sign_rep_symmetric(3).unwrap();
    let a = potential_mixability_witness(&s3).unwrap();
    assert_eq!(s3.group().element_order(&a), 2);
    assert!(potential_mixability_witness(&cyclic_character(3, 1).unwrap()).is_none());
    assert_eq!(potential_mixability_witness(&plane(4, 1)), Some(d(0, true)));
    // odd-part replacement: in Z/6 the generator's image is -exp(..) with order 6
    let chi = cyclic_character(6, 3).unwrap();
    let a = potential_mixability_witness(&chi).unwrap();
    assert_eq!(a, Element::Cyclic(3));
}

#[test]
fn sign_reps_take_one_step() {
    for n in 2..=5 {
        let rep = sign_rep_symmetric(n).unwrap();
        let seq = mix_rep(&rep).unwrap();
        assert_eq!(seq.case, RepCase::MinusIdentity);
        assert_eq!(seq.len(), 1);
        assert!(seq.residual.is_zero());
        let f = seq.steps[0].g.as_perm().unwrap();
        assert_eq!(f.iter().enumerate().filter(|(i, &x)| *i as u32 != x).count(), 2);
    }
}

#[test]
fn d4_corank_one_with_tau() {
    let rep = plane(4, 1);
    let seq = mix_rep_with(&rep, &d(0, true)).unwrap();
    assert_eq!(seq.case, RepCase::CorankOne);
    assert_eq!(seq.len(), 3);
    // sigma tau sigma^-1 = sigma^2 tau, a quarter turn squared times diag(1,-1)
    assert_eq!(seq.steps[1].g, d(2, true));
    assert_eq!(seq.steps[1].p, Probability::half());
    let m = rep.matrix(&d(2, true)).unwrap();
    let oracle = CMatrix::from_f64(2, &[-1.0, 0.0, 0.0, 1.0]);
    assert!(m.distance(&oracle) < small("1e-60"));
    assert!(seq.residual < small("1e-20"));
    // sigma^2 acts as -I, so plain dispatch needs one step
    assert_eq!(mix_rep(&rep).unwrap().steps, vec![MixingStep::half(d(2, false))]);
}

#[test]
fn dihedral_planes() {
    for n in 3..=12u64 {
        for rep in dihedral_irreps(n).unwrap() {
            let seq = mix_rep(&rep).unwrap();
            assert!(seq.len() <= 3, "D_{n} {}", rep.label);
            assert!(seq.residual < residual_tolerance());
            check_shape(&rep, &seq);
        }
    }
}

#[test]
fn d5_triple_residual() {
    let rep = plane(5, 1);
    let seq = mix_rep(&rep).unwrap();
    assert_eq!(seq.case, RepCase::CorankOne);
    // independent f64 product
    let mat = |g: &Element| {
        let Element::Dihedral { rot, reflect } = g else { unreachable!() };
        let t = 2.0 * std::f64::consts::PI * *rot as f64 / 5.0;
        let (c, s) = (t.cos(), t.sin());
        if *reflect {
            [c, s, s, -c]
        } else {
            [c, -s, s, c]
        }
    };
    let mut acc = [1.0, 0.0, 0.0, 1.0];
    for st in &seq.steps {
        let p = st.p.to_f64();
        let r = mat(&st.g);
        let f = [1.0 - p + p * r[0], p * r[1], p * r[2], 1.0 - p + p * r[3]];
        acc = [
            acc[0] * f[0] + acc[1] * f[2],
            acc[0] * f[1] + acc[1] * f[3],
            acc[2] * f[0] + acc[3] * f[2],
            acc[2] * f[1] + acc[3] * f[3],
        ];
    }
    assert!(acc.iter().all(|x| x.abs() < 1e-12), "{acc:?}");
    assert!(verify_rep_sequence(&rep, &seq.steps).unwrap() < residual_tolerance());
}

/// Product of `(1-p) I + p P(g)` on `R^n`, restricted to the sum-zero plane.
fn perm_product_on_sum_zero(n: usize, steps: &[MixingStep]) -> f64 {
    let mut acc = vec![0.0; n * n];
    for i in 0..n {
        acc[i * n + i] = 1.0;
    }
    for st in steps {
        let p = st.p.to_f64();
        let f = st.g.as_perm().unwrap();
        let mut m = vec![0.0; n * n];
        for i in 0..n {
            m[i * n + i] += 1.0 - p;
            m[f[i] as usize * n + i] += p;
        }
        let mut next = vec![0.0; n * n];
        for i in 0..n {
            for k in 0..n {
                for j in 0..n {
                    next[i * n + j] += acc[i * n + k] * m[k * n + j];
                }
            }
        }
        acc = next;
    }
    // acc (I - J/n)
    let mut worst: f64 = 0.0;
    for i in 0..n {
        let row: f64 = (0..n).map(|k| acc[i * n + k]).sum::<f64>() / n as f64;
        for j in 0..n {
            worst = worst.max((acc[i * n + j] - row).abs());
        }
    }
    worst
}

#[test]
fn s4_standard() {
    let rep = standard_rep_symmetric(4).unwrap();
    assert!(rep.is_real());
    let seq = mix_rep(&rep).unwrap();
    assert!(seq.len() <= 7);
    assert!(seq.residual < residual_tolerance());
    assert!(perm_product_on_sum_zero(4, &seq.steps) < 1e-12);
    check_shape(&rep, &seq);

    // a transposition has a two-dimensional fixed space: the seven-step route
    let t = Element::Perm(vec![1, 0, 2, 3]);
    let seq = mix_rep_with(&rep, &t).unwrap();
    assert_eq!(seq.case, RepCase::RealThree);
    assert_eq!(seq.len(), 7);
    assert!(seq.residual < residual_tolerance());
    assert!(perm_product_on_sum_zero(4, &seq.steps) < 1e-12);
    check_shape(&rep, &seq);
}

#[test]
fn s5_standard_is_unsupported() {
    let rep = standard_rep_symmetric(5).unwrap();
    // (12)(34) has -1 with multiplicity 2 < 3 and d = 4
    assert!(matches!(mix_rep(&rep), Err(MixError::UnsupportedRep(_))));
}

#[test]
fn kill_steps() {
    let rep = plane(3, 1);
    let e1 = vec![Complex::one(), Complex::zero()];
    let st = kill_vector_step(&rep, &e1).unwrap();
    assert!(st.p.to_f64() <= 2.0 / 3.0 + 1e-15);
    assert_eq!(st.p, Probability::ratio(2, 3).unwrap());
    let out = rep.step_matrix(&st).unwrap().apply(&e1);
    assert!(inner(&out, &e1).abs() < small("1e-15"));

    // e1 - e2 in Helmert coordinates is (sqrt 2, 0, 0); (1 2) negates it
    let rep = standard_rep_symmetric(4).unwrap();
    let v = vec![Complex::real(Real::from_i64(2).sqrt()), Complex::zero(), Complex::zero()];
    let st = kill_vector_step(&rep, &v).unwrap();
    assert_eq!(st.p, Probability::half());
    let out = rep.step_matrix(&st).unwrap().apply(&v);
    assert!(inner(&out, &v).abs() < small("1e-15"));

    assert!(kill_vector_step(&cyclic_character(3, 1).unwrap(), &[Complex::one()]).is_err());
}

#[test]
fn residual_basics() {
    let rep = standard_rep_symmetric(4).unwrap();
    assert_eq!(verify_rep_sequence(&rep, &[]).unwrap(), Real::from_i64(3).sqrt());
    let sgn = sign_rep_symmetric(3).unwrap();
    let t = Element::Perm(vec![1, 0, 2]);
    assert!(verify_rep_sequence(&sgn, &[MixingStep::half(t)]).unwrap().is_zero());
}

#[test]
fn irreps_counts() {
    let labels = |n| dihedral_irreps(n).unwrap().into_iter().map(|r| (r.label.clone(), r.dim())).collect::<Vec<_>>();
    assert_eq!(labels(3), vec![("sign".into(), 1), ("plane-1".into(), 2)]);
    assert_eq!(labels(4).len(), 4);
    assert_eq!(labels(4).iter().filter(|x| x.1 == 2).count(), 1);
    assert_eq!(labels(1), vec![("sign".into(), 1)]);
}

/// `(1-p) I + p rho(g)` is singular exactly when `p = 1/2` and `-1` is an
/// eigenvalue of `rho(g)`.
#[test]
fn singularity_criterion() {
    let tol = eigen_tolerance();
    for n in 3..=5u64 {
        for rep in dihedral_irreps(n).unwrap() {
            for g in rep.indexed().elements() {
                let minus = rep.minus_one_multiplicity(g).unwrap() > 0;
                for k in 1..8 {
                    let st = MixingStep::new(g.clone(), Probability::ratio(k, 8).unwrap());
                    let singular = rep.step_matrix(&st).unwrap().rank(&tol) < rep.dim();
                    assert_eq!(singular, k == 4 && minus);
                }
            }
        }
    }
}

#[test]
fn concatenated_irreps_mix_the_group() {
    for m in [3u64, 5] {
        let mut steps = Vec::new();
        for rep in dihedral_irreps(m).unwrap() {
            steps.extend(mix_rep(&rep).unwrap().steps);
        }
        let seq = MixingSequence::new(FiniteGroup::dihedral(m), steps);
        let r = verify(&seq, &VerifyOptions::numeric()).unwrap();
        assert!(r.uniform, "D_{m}: {}", r.max_dev);
    }
}

#[test]
fn json_round_trip() {
    let rep = plane(5, 2);
    let back = MatrixRep::from_json(&rep.to_json(), 1000).unwrap();
    for g in rep.indexed().elements() {
        assert!(back.matrix(g).unwrap().distance(rep.matrix(g).unwrap()) < small("1e-45"));
    }
    assert_eq!(back.label, "plane-2");
}

#[test]
fn generator_images_extend() {
    let full = plane(3, 1);
    let images = vec![
        (d(1, false), full.matrix(&d(1, false)).unwrap().clone()),
        (d(0, true), full.matrix(&d(0, true)).unwrap().clone()),
    ];
    let rep = MatrixRep::from_images("x", FiniteGroup::dihedral(3), 2, 100, images, eigen_tolerance()).unwrap();
    for g in full.indexed().elements() {
        assert!(rep.matrix(g).unwrap().distance(full.matrix(g).unwrap()) < small("1e-60"));
    }
    // tau sent to the identity while sigma rotates: not a homomorphism
    let images = vec![(d(1, false), full.matrix(&d(1, false)).unwrap().clone()), (d(0, true), CMatrix::identity(2))];
    assert!(MatrixRep::from_images("bad", FiniteGroup::dihedral(3), 2, 100, images, eigen_tolerance()).is_err());
}
