//! Explicit matrix representations and their mixing sequences.
//!
//! A sequence `(g_i, p_i)` mixes `rho` when the ordered product of
//! `(1 - p_i) I + p_i rho(g_i)` vanishes.

mod complex;
mod matrix;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde_json::{json, Value};

pub use complex::Complex;
pub use matrix::{cross3, gram_schmidt, inner, norm, normalize, CMatrix, Vector};

use crate::engine::{MixingStep, Probability};
use crate::error::{MixError, Result};
use crate::group::{Element, FiniteGroup, IndexedGroup};
use crate::real::Real;

/// Tolerance for eigenvalue, rank and realness tests.
pub fn eigen_tolerance() -> Real {
    Real::parse("1e-20").expect("literal")
}

/// Largest accepted Frobenius norm of a mixing product.
pub fn residual_tolerance() -> Real {
    Real::parse("1e-9").expect("literal")
}

/// `rho: G -> U(d)`, tabulated over the enumerated group.
#[derive(Clone, Debug)]
pub struct MatrixRep {
    pub label: String,
    indexed: IndexedGroup,
    dim: usize,
    matrices: Vec<CMatrix>,
    tolerance: Real,
}

impl MatrixRep {
    /// Tabulates `f` over every element and validates the result.
    pub fn from_fn(
        label: &str,
        group: FiniteGroup,
        dim: usize,
        bound: u128,
        f: impl Fn(&Element) -> CMatrix,
    ) -> Result<Self> {
        let indexed = IndexedGroup::new(group, bound)?;
        let matrices = indexed.elements().iter().map(&f).collect();
        let rep = MatrixRep { label: label.into(), indexed, dim, matrices, tolerance: eigen_tolerance() };
        rep.validate()?;
        Ok(rep)
    }

    /// Extends images of a generating set multiplicatively; every listed image
    /// must agree with the extension.
    pub fn from_images(
        label: &str,
        group: FiniteGroup,
        dim: usize,
        bound: u128,
        images: Vec<(Element, CMatrix)>,
        tolerance: Real,
    ) -> Result<Self> {
        let indexed = IndexedGroup::new(group, bound)?;
        let mut given = Vec::with_capacity(images.len());
        for (g, m) in images {
            let i = indexed.index_of(&g).ok_or_else(|| MixError::InvalidElement(format!("{g:?}")))?;
            if m.dim != dim {
                return Err(MixError::UnsupportedRep(format!("image of {g:?} is not {dim}x{dim}")));
            }
            given.push((i, m));
        }
        let mut table: Vec<Option<CMatrix>> = vec![None; indexed.len()];
        table[indexed.identity_idx() as usize] = Some(CMatrix::identity(dim));
        let mut gens: Vec<(u32, CMatrix)> = Vec::new();
        let mut filled = vec![indexed.identity_idx()];
        for (i, m) in &given {
            if table[*i as usize].is_some() {
                continue;
            }
            gens.push((*i, m.clone()));
            // breadth-first over right multiplication by the generators so far
            let mut head = 0;
            while head < filled.len() {
                let x = filled[head];
                head += 1;
                for (g, mg) in &gens {
                    let y = indexed.mul_idx(x, *g);
                    if table[y as usize].is_none() {
                        table[y as usize] = Some(table[x as usize].as_ref().expect("filled").mul(mg));
                        filled.push(y);
                    }
                }
            }
        }
        if filled.len() != indexed.len() {
            return Err(MixError::UnsupportedRep("listed elements do not generate the group".into()));
        }
        let matrices: Vec<CMatrix> = table.into_iter().map(|m| m.expect("filled")).collect();
        for (i, m) in &given {
            if matrices[*i as usize].distance(m) > tolerance {
                return Err(MixError::UnsupportedRep(format!(
                    "image of {:?} disagrees with the generated table",
                    indexed.element(*i)
                )));
            }
        }
        let rep = MatrixRep { label: label.into(), indexed, dim, matrices, tolerance };
        rep.validate()?;
        Ok(rep)
    }

    /// `rho(e) = I`, `rho(x s) = rho(x) rho(s)` over generators `s`, unitarity.
    fn validate(&self) -> Result<()> {
        let id = CMatrix::identity(self.dim);
        let tol = &self.tolerance;
        if self.matrices.iter().any(|m| m.dim != self.dim) {
            return Err(MixError::UnsupportedRep("matrix of the wrong size".into()));
        }
        if self.matrices[self.indexed.identity_idx() as usize].distance(&id) > *tol {
            return Err(MixError::UnsupportedRep("identity is not sent to I".into()));
        }
        let gens = self.indexed.generator_indices();
        for x in 0..self.indexed.len() as u32 {
            for &s in &gens {
                let lhs = &self.matrices[self.indexed.mul_idx(x, s) as usize];
                let rhs = self.matrices[x as usize].mul(&self.matrices[s as usize]);
                if lhs.distance(&rhs) > *tol {
                    return Err(MixError::UnsupportedRep(format!(
                        "not a homomorphism at ({:?}, {:?})",
                        self.indexed.element(x),
                        self.indexed.element(s)
                    )));
                }
            }
            let m = &self.matrices[x as usize];
            if m.mul(&m.adjoint()).distance(&id) > *tol {
                return Err(MixError::UnsupportedRep(format!("image of {:?} is not unitary", self.indexed.element(x))));
            }
        }
        Ok(())
    }

    pub fn group(&self) -> &FiniteGroup {
        self.indexed.group()
    }

    pub fn indexed(&self) -> &IndexedGroup {
        &self.indexed
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn tolerance(&self) -> &Real {
        &self.tolerance
    }

    pub fn matrix(&self, g: &Element) -> Result<&CMatrix> {
        let i = self.indexed.index_of(g).ok_or_else(|| MixError::InvalidElement(format!("{g:?}")))?;
        Ok(&self.matrices[i as usize])
    }

    pub fn matrix_idx(&self, i: u32) -> &CMatrix {
        &self.matrices[i as usize]
    }

    pub fn is_real(&self) -> bool {
        self.matrices.iter().all(|m| m.is_real(&self.tolerance))
    }

    /// Whether every image is the identity.
    pub fn is_trivial(&self) -> bool {
        let id = CMatrix::identity(self.dim);
        self.matrices.iter().all(|m| m.distance(&id) <= self.tolerance)
    }

    /// `dim ker(I + rho(g))`.
    pub fn minus_one_multiplicity(&self, g: &Element) -> Result<usize> {
        let i = self.indexed.index_of(g).ok_or_else(|| MixError::InvalidElement(format!("{g:?}")))?;
        Ok(self.minus_one_multiplicity_idx(i))
    }

    fn minus_one_multiplicity_idx(&self, i: u32) -> usize {
        self.minus_one_space(i).len()
    }

    fn minus_one_space(&self, i: u32) -> Vec<Vector> {
        CMatrix::identity(self.dim).add(&self.matrices[i as usize]).kernel(&eigen_tolerance())
    }

    /// `(1 - p) I + p rho(g)`.
    pub fn step_matrix(&self, step: &MixingStep) -> Result<CMatrix> {
        let p = step.p.to_real();
        let id = CMatrix::identity(self.dim);
        Ok(id.scale(&(Real::one() - &p)).add(&self.matrix(&step.g)?.scale(&p)))
    }

    /// `{"group", "dim", "label", "matrices": [{"g", "m": [[re, im], ...]}]}`,
    /// every element listed, entries row-major.
    pub fn to_json(&self) -> Value {
        let group = self.group();
        let matrices: Vec<Value> = self
            .indexed
            .elements()
            .iter()
            .zip(&self.matrices)
            .map(|(g, m)| {
                let entries: Vec<Value> = m.data.iter().map(|z| json!([z.re.to_string(), z.im.to_string()])).collect();
                json!({ "g": group.element_to_json(g), "m": entries })
            })
            .collect();
        json!({
            "group": group.spec_json(),
            "dim": self.dim,
            "label": self.label,
            "tolerance": self.tolerance.to_decimal_string(6),
            "matrices": matrices,
        })
    }

    /// Accepts full tables or images of a generating set.
    pub fn from_json(v: &Value, bound: u128) -> Result<Self> {
        let bad = |what: &str| MixError::Document(format!("representation: {what}"));
        let group = FiniteGroup::from_spec(v.get("group").ok_or_else(|| bad("missing group"))?)?;
        let dim = v.get("dim").and_then(Value::as_u64).ok_or_else(|| bad("missing dim"))? as usize;
        let label = v.get("label").and_then(Value::as_str).unwrap_or("rep").to_string();
        let tolerance = match v.get("tolerance") {
            Some(Value::String(s)) => Real::parse(s)?,
            Some(Value::Number(x)) => Real::parse(&x.to_string())?,
            _ => eigen_tolerance(),
        };
        let list = v.get("matrices").and_then(Value::as_array).ok_or_else(|| bad("missing matrices"))?;
        let mut images = Vec::with_capacity(list.len());
        for item in list {
            let g = group.parse_element(item.get("g").ok_or_else(|| bad("entry without g"))?)?;
            let entries = item.get("m").and_then(Value::as_array).ok_or_else(|| bad("entry without m"))?;
            if entries.len() != dim * dim {
                return Err(bad("matrix has the wrong number of entries"));
            }
            let data = entries.iter().map(parse_complex).collect::<Result<Vec<_>>>()?;
            images.push((g, CMatrix { dim, data }));
        }
        Self::from_images(&label, group, dim, bound, images, tolerance)
    }
}

fn parse_real(v: &Value) -> Result<Real> {
    match v {
        Value::String(s) => Real::parse(s),
        Value::Number(x) => Real::parse(&x.to_string()),
        _ => Err(MixError::Document(format!("expected a number, got {v}"))),
    }
}

/// `"x"`, `x`, or `[re, im]`.
fn parse_complex(v: &Value) -> Result<Complex> {
    match v {
        Value::Array(p) if p.len() == 2 => Ok(Complex::new(parse_real(&p[0])?, parse_real(&p[1])?)),
        _ => Ok(Complex::real(parse_real(v)?)),
    }
}

/// Which construction produced a representation mixing.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RepCase {
    /// `rho(a) = -I`: one step.
    MinusIdentity,
    /// `-1` has multiplicity `d - 1` in `rho(a)`: three steps.
    CorankOne,
    /// real three-dimensional: at most seven steps.
    RealThree,
}

impl RepCase {
    pub fn as_str(&self) -> &'static str {
        match self {
            RepCase::MinusIdentity => "minus-identity",
            RepCase::CorankOne => "corank-one",
            RepCase::RealThree => "real-three",
        }
    }
}

#[derive(Clone, Debug)]
pub struct RepMixingSequence {
    pub case: RepCase,
    pub steps: Vec<MixingStep>,
    /// Frobenius norm of the ordered product
    pub residual: Real,
}

impl RepMixingSequence {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn mixed(&self) -> bool {
        self.residual < residual_tolerance()
    }

    pub fn to_json(&self, group: &FiniteGroup) -> Value {
        let steps: Vec<Value> =
            self.steps.iter().map(|s| json!({ "g": group.element_to_json(&s.g), "p": s.p.to_string() })).collect();
        json!({
            "case": self.case.as_str(),
            "length": self.steps.len(),
            "steps": steps,
            "residual": self.residual.to_decimal_string(6),
            "mixed": self.mixed(),
        })
    }
}

/// Frobenius norm of `prod_i ((1 - p_i) I + p_i rho(g_i))`, leftmost first.
pub fn verify_rep_sequence(rep: &MatrixRep, steps: &[MixingStep]) -> Result<Real> {
    let mut acc = CMatrix::identity(rep.dim);
    for s in steps {
        acc = acc.mul(&rep.step_matrix(s)?);
    }
    Ok(acc.frobenius_norm())
}

fn odd_power(ig: &IndexedGroup, i: u32) -> u32 {
    let ord = ig.order_idx(i);
    let odd = ord >> ord.trailing_zeros();
    let g = ig.element(i);
    ig.index_of(&ig.group().pow(g, odd as i64)).expect("power stays in the group")
}

/// First element (in enumeration order) with `-1` in the spectrum of its
/// image, replaced by its odd-part power so that it has 2-power order.
pub fn potential_mixability_witness(rep: &MatrixRep) -> Option<Element> {
    (0..rep.indexed.len() as u32)
        .find(|&i| rep.minus_one_multiplicity_idx(i) > 0)
        .map(|i| rep.indexed.element(odd_power(&rep.indexed, i)).clone())
}

/// All witnesses of 2-power order, in enumeration order.
fn witnesses(rep: &MatrixRep) -> Vec<u32> {
    (0..rep.indexed.len() as u32)
        .filter(|&i| rep.indexed.order_idx(i).is_power_of_two() && rep.minus_one_multiplicity_idx(i) > 0)
        .collect()
}

/// `1/(1 - alpha)`, exact when `alpha` is within `1e-40` of a rational with
/// denominator at most 12.
fn probability_for(alpha: &Real) -> Result<Probability> {
    let close = Real::parse("1e-40")?;
    for den in 1..=12i64 {
        let num = (alpha.to_f64() * den as f64).round() as i64;
        let r = Real::from_i64(num) / Real::from_i64(den);
        if (&r - alpha).abs() < close {
            let a = BigRational::new(BigInt::from(num), BigInt::from(den));
            return Probability::exact((BigRational::one() - a).recip());
        }
    }
    Probability::decimal(Real::one() / (Real::one() - alpha))
}

fn finish(rep: &MatrixRep, case: RepCase, steps: Vec<MixingStep>) -> Result<RepMixingSequence> {
    let residual = verify_rep_sequence(rep, &steps)?;
    let seq = RepMixingSequence { case, steps, residual };
    if !seq.mixed() {
        return Err(MixError::VerificationFailed(format!(
            "{} construction left residual {}",
            case.as_str(),
            seq.residual.to_decimal_string(6)
        )));
    }
    Ok(seq)
}

/// The three-step mixer for `a` whose `-1`-eigenspace has codimension one:
/// `v` spans the complementary eigenline and `h` is scanned for
/// `<rho(h a h^-1) v, v> < 0`.
fn corank_one(rep: &MatrixRep, a: u32, scan: &[u32]) -> Result<Option<Vec<MixingStep>>> {
    let tol = eigen_tolerance();
    let mut basis = rep.minus_one_space(a);
    if basis.len() + 1 != rep.dim {
        return Ok(None);
    }
    let k = basis.len();
    for i in 0..rep.dim {
        let mut e = vec![Complex::zero(); rep.dim];
        e[i] = Complex::one();
        basis.push(e);
    }
    let v = gram_schmidt(&basis, &tol).swap_remove(k);
    let ig = &rep.indexed;
    for &h in scan {
        let b = ig.conj_idx(h, a);
        let alpha = inner(&rep.matrices[b as usize].apply(&v), &v);
        if alpha.im.abs() <= tol && alpha.re < -tol.clone() {
            let p = probability_for(&alpha.re)?;
            let ga = ig.element(a).clone();
            return Ok(Some(vec![
                MixingStep::half(ga.clone()),
                MixingStep::new(ig.element(b).clone(), p),
                MixingStep::half(ga),
            ]));
        }
    }
    Ok(None)
}

/// A step `(g, p)` with `(1 - p) v + p rho(g) v` orthogonal to `v`: `g`
/// minimizes `alpha = <rho(g) v, v>` over the group (for unit `v`), and
/// `p = 1/(1 - alpha)`.
pub fn kill_vector_step(rep: &MatrixRep, v: &[Complex]) -> Result<MixingStep> {
    if !rep.is_real() {
        return Err(MixError::UnsupportedRep("vector annihilation needs a real representation".into()));
    }
    if v.len() != rep.dim || norm(v).is_zero() {
        return Err(MixError::InvalidParameter("kill vector must be a nonzero vector of the rep dimension".into()));
    }
    let tol = eigen_tolerance();
    let v = normalize(v);
    let mut best: Option<(u32, Real)> = None;
    for g in 0..rep.indexed.len() as u32 {
        let alpha = inner(&rep.matrices[g as usize].apply(&v), &v).re;
        if best.as_ref().is_none_or(|(_, b)| alpha < b.clone() - &tol) {
            best = Some((g, alpha));
        }
    }
    let (g, alpha) = best.expect("group is nonempty");
    if alpha > tol {
        return Err(MixError::UnsupportedRep(
            "every image keeps v at a positive angle; is the rep nontrivial irreducible?".into(),
        ));
    }
    let p = if alpha.abs() <= tol { Probability::Exact(BigRational::one()) } else { probability_for(&alpha)? };
    Ok(MixingStep::new(rep.indexed.element(g).clone(), p))
}

/// Real three-dimensional case for an involutive witness `a` with a
/// two-dimensional fixed space `U`: pick `g` with `gU != U`, let
/// `U0 = U cap gU`; the subgroup `<a, g a g^-1>` fixes `U0` and its
/// corank-one mixer kills `U0^perp`, a kill step sends `U0` into `U0^perp`,
/// and the annihilator runs again.
fn real_three(rep: &MatrixRep, a: u32) -> Result<Option<Vec<MixingStep>>> {
    let tol = eigen_tolerance();
    let minus = rep.minus_one_space(a);
    let ig = &rep.indexed;
    let ra = &rep.matrices[a as usize];
    if minus.len() != 1 || ra.mul(ra).distance(&CMatrix::identity(3)) > tol {
        return Ok(None);
    }
    let w = &minus[0];
    let one = Real::one();
    let Some((g, gw)) = (0..ig.len() as u32).find_map(|g| {
        let gw = rep.matrices[g as usize].apply(w);
        (inner(&gw, w).abs() < &one - &tol).then_some((g, gw))
    }) else {
        return Ok(None);
    };
    let u0 = normalize(&cross3(w, &gw));
    let b = ig.conj_idx(g, a);
    let sub = ig.closure_idx(&[a, b]);
    let Some(annihilator) = corank_on_plane(rep, a, &u0, w, &sub)? else {
        return Ok(None);
    };
    let kill = kill_vector_step(rep, &u0)?;
    let again = corank_on_plane(rep, a, &u0, w, &sub)?.expect("same scan as before");
    let mut steps = annihilator;
    steps.push(kill);
    steps.extend(again);
    Ok(Some(steps))
}

/// Corank-one mixer of the subgroup `sub` acting on `u0^perp`, where `a`
/// acts as `-1` on `w` and fixes `e = u0 x w`.
fn corank_on_plane(
    rep: &MatrixRep,
    a: u32,
    u0: &[Complex],
    w: &[Complex],
    sub: &[u32],
) -> Result<Option<Vec<MixingStep>>> {
    let tol = eigen_tolerance();
    let e = normalize(&cross3(u0, w));
    let ig = &rep.indexed;
    for &h in sub {
        let b = ig.conj_idx(h, a);
        let alpha = inner(&rep.matrices[b as usize].apply(&e), &e).re;
        if alpha < -tol.clone() {
            let ga = ig.element(a).clone();
            return Ok(Some(vec![
                MixingStep::half(ga.clone()),
                MixingStep::new(ig.element(b).clone(), probability_for(&alpha)?),
                MixingStep::half(ga),
            ]));
        }
    }
    Ok(None)
}

fn dispatch(rep: &MatrixRep, candidates: &[u32]) -> Result<RepMixingSequence> {
    if rep.is_trivial() {
        return Err(MixError::UnsupportedRep("the trivial representation is not mixable".into()));
    }
    if candidates.is_empty() {
        return Err(MixError::UnsupportedRep("no element has -1 as an eigenvalue".into()));
    }
    let minus_i = CMatrix::identity(rep.dim).scale(&Real::from_i64(-1));
    if let Some(&a) = candidates.iter().find(|&&a| rep.matrices[a as usize].distance(&minus_i) <= eigen_tolerance()) {
        return finish(rep, RepCase::MinusIdentity, vec![MixingStep::half(rep.indexed.element(a).clone())]);
    }
    let all: Vec<u32> = (0..rep.indexed.len() as u32).collect();
    for &a in candidates {
        if let Some(steps) = corank_one(rep, a, &all)? {
            return finish(rep, RepCase::CorankOne, steps);
        }
    }
    if rep.dim == 3 {
        if !rep.is_real() {
            return Err(MixError::UnsupportedRep("three-dimensional construction needs a real representation".into()));
        }
        for &a in candidates {
            if let Some(steps) = real_three(rep, a)? {
                return finish(rep, RepCase::RealThree, steps);
            }
        }
    }
    Err(MixError::UnsupportedRep(format!(
        "no construction applies in dimension {} (needs -I, a corank-one witness, or real dimension 3)",
        rep.dim
    )))
}

/// Mixes a nontrivial irreducible representation. Tries, in order: an
/// element sent to `-I`; a witness whose `-1`-eigenspace has codimension
/// one; the real three-dimensional construction. Irreducibility is the
/// caller's responsibility.
pub fn mix_rep(rep: &MatrixRep) -> Result<RepMixingSequence> {
    dispatch(rep, &witnesses(rep))
}

/// As [`mix_rep`], restricted to the witness `a` (replaced by its odd-part
/// power).
pub fn mix_rep_with(rep: &MatrixRep, a: &Element) -> Result<RepMixingSequence> {
    let i = rep.indexed.index_of(a).ok_or_else(|| MixError::InvalidElement(format!("{a:?}")))?;
    if rep.minus_one_multiplicity_idx(i) == 0 {
        return Err(MixError::UnsupportedRep(format!("{a:?} has no eigenvalue -1")));
    }
    dispatch(rep, &[odd_power(&rep.indexed, i)])
}

/// One-dimensional representation from a character.
pub fn character(label: &str, group: FiniteGroup, bound: u128, chi: impl Fn(&Element) -> Complex) -> Result<MatrixRep> {
    MatrixRep::from_fn(label, group, 1, bound, |g| CMatrix { dim: 1, data: vec![chi(g)] })
}

/// Irreducible real representations of `D_n` (order `2n`) other than the
/// trivial one: the characters through `D_n/<sigma>` and, for even `n`,
/// through `D_n/<sigma^2>`, then the planes where `sigma` rotates by
/// `2 pi j/n` and `tau = diag(1, -1)`, `1 <= j <= (n-1)/2`.
pub fn dihedral_irreps(n: u64) -> Result<Vec<MatrixRep>> {
    let group = FiniteGroup::dihedral(n);
    let bound = group.order();
    let sign = |b: bool| Complex::real(Real::from_i64(if b { -1 } else { 1 }));
    let parts = |g: &Element| match g {
        Element::Dihedral { rot, reflect } => (*rot, *reflect),
        _ => unreachable!("dihedral element"),
    };
    let mut out = vec![character("sign", group.clone(), bound, |g| sign(parts(g).1))?];
    if n.is_multiple_of(2) {
        out.push(character("rotation-sign", group.clone(), bound, |g| sign(parts(g).0 % 2 == 1))?);
        out.push(character("product-sign", group.clone(), bound, |g| {
            let (r, f) = parts(g);
            sign((r % 2 == 1) ^ f)
        })?);
    }
    for j in 1..=(n - 1) / 2 {
        let rep = MatrixRep::from_fn(&format!("plane-{j}"), group.clone(), 2, bound, |g| {
            let (r, f) = parts(g);
            let turns = ((j * r) % n) as i64;
            let (c, s) = (Real::cos_turns(turns, n as i64), Real::sin_turns(turns, n as i64));
            let e = if f { vec![c.clone(), s.clone(), s, -c] } else { vec![c.clone(), -&s, s, c] };
            CMatrix::from_reals(2, e)
        })?;
        out.push(rep);
    }
    Ok(out)
}

/// Orthonormal basis of the sum-zero hyperplane of `R^n`:
/// `u_k = (1, ..., 1, -k, 0, ..., 0)/sqrt(k(k+1))` with `k` leading ones.
fn helmert(n: usize) -> Vec<Vec<Real>> {
    (1..n)
        .map(|k| {
            let scale = Real::one() / Real::from_i64((k * (k + 1)) as i64).sqrt();
            (0..n)
                .map(|i| match i.cmp(&k) {
                    std::cmp::Ordering::Less => scale.clone(),
                    std::cmp::Ordering::Equal => -&(Real::from_i64(k as i64) * &scale),
                    std::cmp::Ordering::Greater => Real::zero(),
                })
                .collect()
        })
        .collect()
}

/// The `(n-1)`-dimensional standard representation of `S_n` in the Helmert
/// basis (real orthogonal).
pub fn standard_rep_symmetric(n: usize) -> Result<MatrixRep> {
    if n < 2 {
        return Err(MixError::InvalidParameter("standard representation needs n >= 2".into()));
    }
    let group = FiniteGroup::symmetric(n);
    let basis = helmert(n);
    let d = n - 1;
    MatrixRep::from_fn("standard", group.clone(), d, group.order(), |g| {
        let f = g.as_perm().expect("permutation");
        // (P x)_{f(i)} = x_i, so <u_k, P u_l> = sum_i u_k[f(i)] u_l[i]
        let mut e = Vec::with_capacity(d * d);
        for uk in &basis {
            for ul in &basis {
                let s = (0..n).fold(Real::zero(), |acc, i| acc + &uk[f[i] as usize] * &ul[i]);
                e.push(s);
            }
        }
        CMatrix::from_reals(d, e)
    })
}

/// `sgn` on `S_n`.
pub fn sign_rep_symmetric(n: usize) -> Result<MatrixRep> {
    let group = FiniteGroup::symmetric(n);
    character("sign", group.clone(), group.order(), |g| {
        let odd = !crate::group::perm::is_even(g.as_perm().expect("permutation"));
        Complex::real(Real::from_i64(if odd { -1 } else { 1 }))
    })
}

/// `k -> exp(2 pi i j k / n)` on `Z/n`.
pub fn cyclic_character(n: u64, j: u64) -> Result<MatrixRep> {
    let group = FiniteGroup::cyclic(n);
    character(&format!("chi-{j}"), group, n as u128, |g| {
        let Element::Cyclic(k) = g else { unreachable!("cyclic element") };
        let t = ((j * k) % n) as i64;
        Complex::new(Real::cos_turns(t, n as i64), Real::sin_turns(t, n as i64))
    })
}

#[cfg(test)]
mod tests;
