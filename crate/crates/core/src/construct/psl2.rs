use std::sync::Arc;

use num_rational::BigRational;

use super::dihedral::dihedral_steps;
use super::{fold_certificate, require, Certificate, ConstructOptions, ConstructionReport};
use crate::engine::{ActionKind, Claim, MixingSequence, MixingStep, Probability};
use crate::error::{MixError, Result};
use crate::field::{Family, Field, MatrixGroup, ProjectivePoint};
use crate::group::{Element, FiniteGroup};

/// Ordered pairs of `P^1` from `([1:0], [0:1])`: unipotents `u(x^i)` over
/// the polynomial basis, the antidiagonal `w` with `1 - 1/(q+1)`, and the
/// unipotents again.
fn pairs_steps(mg: &MatrixGroup) -> Vec<MixingStep> {
    let e = mg.field.e();
    let q = mg.field.q() as u64;
    let unipotents: Vec<MixingStep> = (0..e)
        .map(|i| MixingStep::half(Element::Matrix(mg.canonical(&mg.transvection(0, 1, mg.field.basis(i))))))
        .collect();
    let w = Element::Matrix(mg.canonical(&[0, 1, 1, 0]));
    let p = Probability::Exact(BigRational::new(q.into(), (q + 1).into()));
    let mut steps = unipotents.clone();
    steps.push(MixingStep::new(w, p));
    steps.extend(unipotents);
    steps
}

/// `sigma^r tau^f -> diag(beta^r, beta^-r) w^f`.
fn embed_dihedral(mg: &MatrixGroup, g: &Element) -> Element {
    let Element::Dihedral { rot, reflect } = g else { panic!("dihedral element expected") };
    let f = &mg.field;
    let r = *rot as i64;
    let mut m = mg.diagonal(&[f.gen_pow(r), f.gen_pow(-r)]);
    if *reflect {
        m = mg.raw_mul(&m, &[0, 1, 1, 0]);
    }
    Element::Matrix(mg.canonical(&m))
}

/// Mixer of `PSL_2(F_{2^e})`: ordered pairs of the projective line, then the
/// stabilizer of `{[1:0], [0:1]}`, a dihedral group of order `2(q-1)`.
pub fn construct_psl2_char2(e: u32, opts: &ConstructOptions) -> Result<ConstructionReport> {
    if e == 0 || e > 16 {
        return Err(MixError::InvalidParameter(format!("psl2 needs 1 <= e <= 16, got {e}")));
    }
    let field = Arc::new(Field::new(2, e)?);
    let mg = MatrixGroup::new(Family::PSL, 2, field.clone())?;
    let q = field.q() as u64;
    let group = FiniteGroup::Matrix(mg.clone());
    let tail = dihedral_steps(q - 1)?;
    let mut steps = pairs_steps(&mg);
    steps.extend(tail.iter().map(|s| MixingStep::new(embed_dihedral(&mg, &s.g), s.p.clone())));
    let seq = MixingSequence::new(group.clone(), steps);
    let cert = if super::group_order_fits(&group, opts) {
        fold_certificate(&seq, "group", &opts.verify)?
    } else {
        let base = serde_json::Value::Array(vec![
            ProjectivePoint::new(&field, vec![1, 0])?.to_json(&field),
            ProjectivePoint::new(&field, vec![0, 1])?.to_json(&field),
        ]);
        let pairs =
            MixingSequence::new(group.clone(), pairs_steps(&mg)).with_claim(Claim::action(ActionKind::Pairs, base));
        let coset = require(fold_certificate(&pairs, "ordered pairs of P^1", &opts.verify)?, "pairs part")?;
        let sub = super::construct_dihedral(q - 1, opts)?.certificate;
        Certificate::Extension { coset: Box::new(coset), subgroup: Box::new(sub) }
    };
    let bound = (2 * e as u64 + q) as f64;
    ConstructionReport::new("psl2-char2", seq, bound, "2e + 2^e", cert, group.order())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::Mode;

    #[test]
    fn e_one_listing() {
        let r = construct_psl2_char2(1, &ConstructOptions::default()).unwrap();
        let s = &r.sequence.steps;
        assert_eq!(s.len(), 4);
        assert_eq!(s[0].g, Element::Matrix(vec![1, 1, 0, 1]));
        assert_eq!(s[1].g, Element::Matrix(vec![0, 1, 1, 0]));
        assert_eq!(s[1].p, Probability::ratio(2, 3).unwrap());
        assert_eq!(s[3].g, Element::Matrix(vec![0, 1, 1, 0]));
        assert!(r.certificate.holds());
    }

    #[test]
    fn e_two_exact() {
        let r = construct_psl2_char2(2, &ConstructOptions::default()).unwrap();
        assert_eq!(r.mode, Mode::Exact);
        assert!(r.certificate.holds());
    }

    #[test]
    fn extension_path() {
        let opts = ConstructOptions { fold_limit: 20, ..Default::default() };
        let r = construct_psl2_char2(2, &opts).unwrap();
        assert!(matches!(r.certificate, Certificate::Extension { .. }));
        assert!(r.certificate.holds());
    }
}
