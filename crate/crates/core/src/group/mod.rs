//! Finite groups behind one interface.
//!
//! Conventions shared by every family:
//! - permutations act on the left, `(fg)(x) = f(g(x))`, and are stored
//!   0-based (JSON uses 1-based image arrays);
//! - dihedral elements are `sigma^rot tau^ref` with `tau sigma tau = sigma^-1`;
//! - signed permutations send `e_i` to `(-1)^{s_i} e_{pi(i)}`;
//! - enumeration order is the derived `Ord` on [`Element`]: residues,
//!   `(rot, ref)` pairs, lexicographic image arrays, `(images, signs)`,
//!   row-major matrix encodings, table indices, and lexicographic tuples.

pub mod catalog;
pub mod cayley;
pub mod closure;
pub mod indexed;
pub mod perm;
pub mod subproduct;

use std::sync::Arc;

use num_integer::Integer;
use serde_json::{json, Value};

use crate::error::{MixError, Result};
use crate::field::{Family, Field, MatrixGroup};

pub use cayley::CayleyGroup;
pub use indexed::IndexedGroup;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Element {
    Cyclic(u64),
    Dihedral { rot: u64, reflect: bool },
    Perm(Vec<u32>),
    Signed { perm: Vec<u32>, signs: Vec<bool> },
    Matrix(Vec<u32>),
    Cayley(u32),
    Product(Vec<Element>),
}

impl Element {
    pub fn as_perm(&self) -> Option<&[u32]> {
        match self {
            Element::Perm(p) => Some(p),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum FiniteGroup {
    Cyclic { n: u64 },
    Dihedral { n: u64 },
    Symmetric { n: usize },
    Alternating { n: usize },
    SignedPerm { n: usize, even_only: bool },
    Matrix(MatrixGroup),
    Cayley(CayleyGroup),
    Product(Vec<FiniteGroup>),
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).fold(1u128, |a, k| a.saturating_mul(k))
}

fn bad(g: &Element, group: &FiniteGroup) -> MixError {
    MixError::InvalidElement(format!("{g:?} is not an element of {}", group.name()))
}

impl FiniteGroup {
    pub fn cyclic(n: u64) -> Self {
        FiniteGroup::Cyclic { n }
    }

    pub fn dihedral(n: u64) -> Self {
        FiniteGroup::Dihedral { n }
    }

    pub fn symmetric(n: usize) -> Self {
        FiniteGroup::Symmetric { n }
    }

    pub fn alternating(n: usize) -> Self {
        FiniteGroup::Alternating { n }
    }

    pub fn signed(n: usize, even_only: bool) -> Self {
        FiniteGroup::SignedPerm { n, even_only }
    }

    pub fn matrix(family: Family, d: usize, p: u32, e: u32) -> Result<Self> {
        Ok(FiniteGroup::Matrix(MatrixGroup::new(family, d, Arc::new(Field::new(p, e)?))?))
    }

    pub fn cayley(order: usize, table: Vec<u32>) -> Result<Self> {
        Ok(FiniteGroup::Cayley(CayleyGroup::new(order, table)?))
    }

    pub fn product(factors: Vec<FiniteGroup>) -> Self {
        FiniteGroup::Product(factors)
    }

    /// Short descriptive name.
    pub fn name(&self) -> String {
        match self {
            FiniteGroup::Cyclic { n } => format!("Z/{n}"),
            FiniteGroup::Dihedral { n } => format!("D_{n}"),
            FiniteGroup::Symmetric { n } => format!("S_{n}"),
            FiniteGroup::Alternating { n } => format!("A_{n}"),
            FiniteGroup::SignedPerm { n, even_only: false } => format!("B_{n}"),
            FiniteGroup::SignedPerm { n, even_only: true } => format!("D_{n} (Coxeter)"),
            FiniteGroup::Matrix(m) => format!("{}_{}(F_{})", m.family, m.d, m.q()),
            FiniteGroup::Cayley(c) => format!("table of order {}", c.order()),
            FiniteGroup::Product(fs) => fs.iter().map(|f| f.name()).collect::<Vec<_>>().join(" x "),
        }
    }

    pub fn order(&self) -> u128 {
        match self {
            FiniteGroup::Cyclic { n } => *n as u128,
            FiniteGroup::Dihedral { n } => 2 * *n as u128,
            FiniteGroup::Symmetric { n } => factorial(*n),
            FiniteGroup::Alternating { n } => {
                if *n < 2 {
                    1
                } else {
                    factorial(*n) / 2
                }
            }
            FiniteGroup::SignedPerm { n, even_only } => {
                let full = factorial(*n).saturating_mul(1u128 << *n.min(&120));
                if *even_only && *n >= 1 {
                    full / 2
                } else {
                    full
                }
            }
            FiniteGroup::Matrix(m) => m.order(),
            FiniteGroup::Cayley(c) => c.order() as u128,
            FiniteGroup::Product(fs) => fs.iter().fold(1u128, |a, f| a.saturating_mul(f.order())),
        }
    }

    pub fn identity(&self) -> Element {
        match self {
            FiniteGroup::Cyclic { .. } => Element::Cyclic(0),
            FiniteGroup::Dihedral { .. } => Element::Dihedral { rot: 0, reflect: false },
            FiniteGroup::Symmetric { n } | FiniteGroup::Alternating { n } => Element::Perm(perm::identity(*n)),
            FiniteGroup::SignedPerm { n, .. } => Element::Signed { perm: perm::identity(*n), signs: vec![false; *n] },
            FiniteGroup::Matrix(m) => Element::Matrix(m.identity()),
            FiniteGroup::Cayley(_) => Element::Cayley(0),
            FiniteGroup::Product(fs) => Element::Product(fs.iter().map(|f| f.identity()).collect()),
        }
    }

    pub fn is_identity(&self, g: &Element) -> bool {
        *g == self.identity()
    }

    /// Product without validation; callers guarantee membership.
    pub fn mul(&self, a: &Element, b: &Element) -> Element {
        match (self, a, b) {
            (FiniteGroup::Cyclic { n }, Element::Cyclic(x), Element::Cyclic(y)) => {
                Element::Cyclic(((*x as u128 + *y as u128) % *n as u128) as u64)
            }
            (
                FiniteGroup::Dihedral { n },
                Element::Dihedral { rot: r1, reflect: f1 },
                Element::Dihedral { rot: r2, reflect: f2 },
            ) => {
                let r2 = if *f1 { (n - r2) % n } else { *r2 };
                Element::Dihedral { rot: (r1 + r2) % n, reflect: f1 ^ f2 }
            }
            (FiniteGroup::Symmetric { .. } | FiniteGroup::Alternating { .. }, Element::Perm(f), Element::Perm(g)) => {
                Element::Perm(perm::compose(f, g))
            }
            (
                FiniteGroup::SignedPerm { .. },
                Element::Signed { perm: pf, signs: sf },
                Element::Signed { perm: pg, signs: sg },
            ) => {
                let signs = (0..pg.len()).map(|i| sg[i] ^ sf[pg[i] as usize]).collect();
                Element::Signed { perm: perm::compose(pf, pg), signs }
            }
            (FiniteGroup::Matrix(m), Element::Matrix(x), Element::Matrix(y)) => Element::Matrix(m.mul(x, y)),
            (FiniteGroup::Cayley(c), Element::Cayley(x), Element::Cayley(y)) => Element::Cayley(c.mul(*x, *y)),
            (FiniteGroup::Product(fs), Element::Product(xs), Element::Product(ys)) => {
                Element::Product(fs.iter().zip(xs.iter().zip(ys)).map(|(f, (x, y))| f.mul(x, y)).collect())
            }
            _ => panic!("element kinds do not match the group {}", self.name()),
        }
    }

    /// Validated product.
    pub fn multiply(&self, a: &Element, b: &Element) -> Result<Element> {
        self.validate(a)?;
        self.validate(b)?;
        Ok(self.mul(a, b))
    }

    pub fn inverse(&self, a: &Element) -> Element {
        match (self, a) {
            (FiniteGroup::Cyclic { n }, Element::Cyclic(x)) => Element::Cyclic((n - x) % n),
            (FiniteGroup::Dihedral { n }, Element::Dihedral { rot, reflect }) => {
                if *reflect {
                    a.clone()
                } else {
                    Element::Dihedral { rot: (n - rot) % n, reflect: false }
                }
            }
            (_, Element::Perm(f)) => Element::Perm(perm::inverse(f)),
            (_, Element::Signed { perm: p, signs }) => {
                let inv = perm::inverse(p);
                let mut s = vec![false; p.len()];
                for i in 0..p.len() {
                    s[p[i] as usize] = signs[i];
                }
                Element::Signed { perm: inv, signs: s }
            }
            (FiniteGroup::Matrix(m), Element::Matrix(x)) => Element::Matrix(m.inverse(x)),
            (FiniteGroup::Cayley(c), Element::Cayley(x)) => Element::Cayley(c.inverse(*x)),
            (FiniteGroup::Product(fs), Element::Product(xs)) => {
                Element::Product(fs.iter().zip(xs).map(|(f, x)| f.inverse(x)).collect())
            }
            _ => panic!("element kind does not match the group {}", self.name()),
        }
    }

    /// `h g h^-1`.
    pub fn conjugate(&self, h: &Element, g: &Element) -> Element {
        self.mul(&self.mul(h, g), &self.inverse(h))
    }

    pub fn pow(&self, g: &Element, k: i64) -> Element {
        let base = if k < 0 { self.inverse(g) } else { g.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = self.identity();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &sq);
            }
            e >>= 1;
            if e > 0 {
                sq = self.mul(&sq, &sq);
            }
        }
        acc
    }

    /// Least `k >= 1` with `g^k = e`.
    pub fn element_order(&self, g: &Element) -> u64 {
        match (self, g) {
            (FiniteGroup::Cyclic { n }, Element::Cyclic(x)) => n / n.gcd(x),
            (FiniteGroup::Dihedral { n }, Element::Dihedral { rot, reflect }) => {
                if *reflect {
                    2
                } else {
                    n / n.gcd(rot)
                }
            }
            (_, Element::Perm(f)) => perm::order(f),
            (_, Element::Signed { perm: p, .. }) => {
                let k = perm::order(p);
                if self.is_identity(&self.pow(g, k as i64)) {
                    k
                } else {
                    2 * k
                }
            }
            (FiniteGroup::Product(fs), Element::Product(xs)) => {
                fs.iter().zip(xs).fold(1u64, |acc, (f, x)| acc.lcm(&f.element_order(x)))
            }
            _ => {
                let e = self.identity();
                let mut x = g.clone();
                let mut k = 1;
                while x != e {
                    x = self.mul(&x, g);
                    k += 1;
                }
                k
            }
        }
    }

    pub fn validate(&self, g: &Element) -> Result<()> {
        let ok = match (self, g) {
            (FiniteGroup::Cyclic { n }, Element::Cyclic(x)) => x < n,
            (FiniteGroup::Dihedral { n }, Element::Dihedral { rot, .. }) => rot < n,
            (FiniteGroup::Symmetric { n }, Element::Perm(f)) => f.len() == *n && perm::is_bijection(f),
            (FiniteGroup::Alternating { n }, Element::Perm(f)) => {
                f.len() == *n && perm::is_bijection(f) && perm::is_even(f)
            }
            (FiniteGroup::SignedPerm { n, even_only }, Element::Signed { perm: p, signs }) => {
                p.len() == *n
                    && signs.len() == *n
                    && perm::is_bijection(p)
                    && (!even_only || signs.iter().filter(|&&s| s).count() % 2 == 0)
            }
            (FiniteGroup::Matrix(m), Element::Matrix(x)) => return m.validate(x),
            (FiniteGroup::Cayley(c), Element::Cayley(x)) => (*x as usize) < c.order(),
            (FiniteGroup::Product(fs), Element::Product(xs)) => {
                if fs.len() != xs.len() {
                    false
                } else {
                    for (f, x) in fs.iter().zip(xs) {
                        f.validate(x)?;
                    }
                    true
                }
            }
            _ => false,
        };
        if ok {
            Ok(())
        } else {
            Err(bad(g, self))
        }
    }

    pub fn contains(&self, g: &Element) -> bool {
        self.validate(g).is_ok()
    }

    /// Every element once, in the documented canonical order.
    pub fn enumerate(&self, bound: u128) -> Result<Vec<Element>> {
        let order = self.order();
        if order > bound {
            return Err(MixError::EnumerationBound { order, bound });
        }
        Ok(match self {
            FiniteGroup::Cyclic { n } => (0..*n).map(Element::Cyclic).collect(),
            FiniteGroup::Dihedral { n } => (0..*n)
                .flat_map(|rot| [false, true].into_iter().map(move |reflect| Element::Dihedral { rot, reflect }))
                .collect(),
            FiniteGroup::Symmetric { n } => all_perms(*n).into_iter().map(Element::Perm).collect(),
            FiniteGroup::Alternating { n } => {
                all_perms(*n).into_iter().filter(|f| perm::is_even(f)).map(Element::Perm).collect()
            }
            FiniteGroup::SignedPerm { n, even_only } => {
                let perms = all_perms(*n);
                let mut out = Vec::with_capacity(order as usize);
                for p in perms {
                    for mask in 0u64..(1u64 << n) {
                        // lexicographic on the sign vector: bit (n-1-i) is sign i
                        let signs: Vec<bool> = (0..*n).map(|i| mask >> (n - 1 - i) & 1 == 1).collect();
                        if *even_only && signs.iter().filter(|&&s| s).count() % 2 == 1 {
                            continue;
                        }
                        out.push(Element::Signed { perm: p.clone(), signs });
                    }
                }
                out
            }
            FiniteGroup::Matrix(m) => m.enumerate().into_iter().map(Element::Matrix).collect(),
            FiniteGroup::Cayley(c) => (0..c.order() as u32).map(Element::Cayley).collect(),
            FiniteGroup::Product(fs) => {
                let mut acc: Vec<Vec<Element>> = vec![Vec::new()];
                for f in fs {
                    let els = f.enumerate(bound)?;
                    let mut next = Vec::with_capacity(acc.len() * els.len());
                    for prefix in &acc {
                        for x in &els {
                            let mut t = prefix.clone();
                            t.push(x.clone());
                            next.push(t);
                        }
                    }
                    acc = next;
                }
                acc.into_iter().map(Element::Product).collect()
            }
        })
    }

    /// A generating set.
    pub fn generators(&self) -> Vec<Element> {
        match self {
            FiniteGroup::Cyclic { n } => {
                if *n > 1 {
                    vec![Element::Cyclic(1)]
                } else {
                    vec![]
                }
            }
            FiniteGroup::Dihedral { n } => {
                let mut g = vec![Element::Dihedral { rot: 0, reflect: true }];
                if *n > 1 {
                    g.insert(0, Element::Dihedral { rot: 1, reflect: false });
                }
                g
            }
            FiniteGroup::Symmetric { n } => sym_generators(*n).into_iter().map(Element::Perm).collect(),
            FiniteGroup::Alternating { n } => {
                (2..*n).map(|k| Element::Perm(perm::from_cycles(*n, &[&[0, 1, k]]))).collect()
            }
            FiniteGroup::SignedPerm { n, even_only } => {
                let mut gens: Vec<Element> = sym_generators(*n)
                    .into_iter()
                    .map(|p| Element::Signed { perm: p, signs: vec![false; *n] })
                    .collect();
                let mut flip = vec![false; *n];
                if *even_only {
                    if *n >= 2 {
                        flip[0] = true;
                        flip[1] = true;
                        gens.push(Element::Signed { perm: perm::identity(*n), signs: flip });
                    }
                } else if *n >= 1 {
                    flip[0] = true;
                    gens.push(Element::Signed { perm: perm::identity(*n), signs: flip });
                }
                gens
            }
            FiniteGroup::Matrix(m) => m.generators().into_iter().map(Element::Matrix).collect(),
            FiniteGroup::Cayley(c) => {
                let els: Vec<u32> = (0..c.order() as u32).collect();
                let mut inside = vec![false; c.order()];
                inside[0] = true;
                let mut gens = Vec::new();
                let mut members = vec![0u32];
                for &x in &els {
                    if inside[x as usize] {
                        continue;
                    }
                    gens.push(x);
                    // re-close with the enlarged generating set
                    let mut queue = members.clone();
                    while let Some(y) = queue.pop() {
                        for &g in &gens {
                            let z = c.mul(y, g);
                            if !inside[z as usize] {
                                inside[z as usize] = true;
                                members.push(z);
                                queue.push(z);
                            }
                        }
                    }
                }
                gens.into_iter().map(Element::Cayley).collect()
            }
            FiniteGroup::Product(fs) => {
                let ids: Vec<Element> = fs.iter().map(|f| f.identity()).collect();
                let mut gens = Vec::new();
                for (i, f) in fs.iter().enumerate() {
                    for g in f.generators() {
                        let mut t = ids.clone();
                        t[i] = g;
                        gens.push(Element::Product(t));
                    }
                }
                gens
            }
        }
    }

    /// Degree of the natural permutation action, when there is one.
    pub fn degree(&self) -> Option<usize> {
        match self {
            FiniteGroup::Symmetric { n } | FiniteGroup::Alternating { n } => Some(*n),
            _ => None,
        }
    }

    pub fn spec_json(&self) -> Value {
        match self {
            FiniteGroup::Cyclic { n } => json!({"kind": "cyclic", "n": n}),
            FiniteGroup::Dihedral { n } => json!({"kind": "dihedral", "n": n}),
            FiniteGroup::Symmetric { n } => json!({"kind": "symmetric", "n": n}),
            FiniteGroup::Alternating { n } => json!({"kind": "alternating", "n": n}),
            FiniteGroup::SignedPerm { n, even_only } => {
                json!({"kind": "signed_permutation", "n": n, "even_only": even_only})
            }
            FiniteGroup::Matrix(m) => m.spec_json(),
            FiniteGroup::Cayley(c) => json!({"kind": "cayley", "order": c.order(), "table": c.rows()}),
            FiniteGroup::Product(fs) => {
                json!({"kind": "product", "factors": fs.iter().map(|f| f.spec_json()).collect::<Vec<_>>()})
            }
        }
    }

    pub fn from_spec(v: &Value) -> Result<Self> {
        let kind = v
            .get("kind")
            .and_then(Value::as_str)
            .ok_or_else(|| MixError::InvalidGroup("group spec needs a \"kind\"".into()))?;
        let n = || -> Result<u64> {
            v.get("n").and_then(Value::as_u64).ok_or_else(|| MixError::InvalidGroup(format!("{kind} needs \"n\"")))
        };
        let small_n = || -> Result<usize> {
            let n = n()?;
            if n > 4096 {
                return Err(MixError::InvalidGroup(format!("degree {n} is too large")));
            }
            Ok(n as usize)
        };
        match kind {
            "cyclic" => {
                let n = n()?;
                if n == 0 {
                    return Err(MixError::InvalidGroup("cyclic group needs n >= 1".into()));
                }
                Ok(FiniteGroup::Cyclic { n })
            }
            "dihedral" => {
                let n = n()?;
                if n == 0 {
                    return Err(MixError::InvalidGroup("dihedral group needs n >= 1".into()));
                }
                Ok(FiniteGroup::Dihedral { n })
            }
            "symmetric" => Ok(FiniteGroup::Symmetric { n: small_n()? }),
            "alternating" => Ok(FiniteGroup::Alternating { n: small_n()? }),
            "signed_permutation" => {
                let n = small_n()?;
                if n > 60 {
                    return Err(MixError::InvalidGroup("signed permutation degree above 60".into()));
                }
                let even_only = v.get("even_only").and_then(Value::as_bool).unwrap_or(false);
                Ok(FiniteGroup::SignedPerm { n, even_only })
            }
            "matrix" => {
                let family = Family::parse(
                    v.get("family")
                        .and_then(Value::as_str)
                        .ok_or_else(|| MixError::InvalidGroup("matrix group needs \"family\"".into()))?,
                )?;
                let d = v
                    .get("d")
                    .and_then(Value::as_u64)
                    .ok_or_else(|| MixError::InvalidGroup("matrix group needs \"d\"".into()))?;
                let q = v.get("q").ok_or_else(|| MixError::InvalidGroup("matrix group needs \"q\"".into()))?;
                let field = match q {
                    Value::Number(num) => {
                        let q = num.as_u64().unwrap_or(0);
                        let (p, e) = crate::field::prime_power(q)
                            .ok_or_else(|| MixError::InvalidField(format!("{q} is not a prime power")))?;
                        Field::new(p as u32, e)?
                    }
                    other => Field::from_spec(other)?,
                };
                Ok(FiniteGroup::Matrix(MatrixGroup::new(family, d as usize, Arc::new(field))?))
            }
            "cayley" => {
                let rows = v
                    .get("table")
                    .and_then(Value::as_array)
                    .ok_or_else(|| MixError::InvalidGroup("cayley group needs \"table\"".into()))?;
                let order = v.get("order").and_then(Value::as_u64).map(|o| o as usize).unwrap_or(rows.len());
                if rows.len() != order {
                    return Err(MixError::InvalidGroup(format!("table has {} rows, order is {order}", rows.len())));
                }
                let mut table = Vec::with_capacity(order * order);
                for row in rows {
                    let row =
                        row.as_array().ok_or_else(|| MixError::InvalidGroup("table rows must be arrays".into()))?;
                    if row.len() != order {
                        return Err(MixError::InvalidGroup("table rows must have length equal to the order".into()));
                    }
                    for x in row {
                        let x = x
                            .as_u64()
                            .ok_or_else(|| MixError::InvalidGroup("table entries must be integers".into()))?;
                        table.push(
                            u32::try_from(x).map_err(|_| MixError::InvalidGroup("table entry too large".into()))?,
                        );
                    }
                }
                FiniteGroup::cayley(order, table)
            }
            "product" => {
                let factors = v
                    .get("factors")
                    .and_then(Value::as_array)
                    .ok_or_else(|| MixError::InvalidGroup("product needs \"factors\"".into()))?;
                Ok(FiniteGroup::Product(factors.iter().map(FiniteGroup::from_spec).collect::<Result<_>>()?))
            }
            other => Err(MixError::InvalidGroup(format!("unknown group kind {other}"))),
        }
    }

    pub fn element_to_json(&self, g: &Element) -> Value {
        match (self, g) {
            (_, Element::Cyclic(x)) => json!(x),
            (_, Element::Dihedral { rot, reflect }) => json!({"rot": rot, "ref": *reflect as u8}),
            (_, Element::Perm(f)) => json!(f.iter().map(|&x| x + 1).collect::<Vec<_>>()),
            (_, Element::Signed { perm: p, signs }) => json!({
                "images": p.iter().map(|&x| x + 1).collect::<Vec<_>>(),
                "signs": signs.iter().map(|&s| s as u8).collect::<Vec<_>>(),
            }),
            (FiniteGroup::Matrix(m), Element::Matrix(x)) => m.element_json(x),
            (_, Element::Cayley(x)) => json!(x),
            (FiniteGroup::Product(fs), Element::Product(xs)) => {
                Value::Array(fs.iter().zip(xs).map(|(f, x)| f.element_to_json(x)).collect())
            }
            _ => Value::Null,
        }
    }

    /// Parses and validates an element encoding.
    pub fn parse_element(&self, v: &Value) -> Result<Element> {
        let err = || MixError::InvalidElement(format!("cannot read {v} as an element of {}", self.name()));
        let g = match self {
            FiniteGroup::Cyclic { .. } => Element::Cyclic(v.as_u64().ok_or_else(err)?),
            FiniteGroup::Dihedral { .. } => {
                let rot = v.get("rot").and_then(Value::as_u64).ok_or_else(err)?;
                let reflect = match v.get("ref") {
                    Some(Value::Bool(b)) => *b,
                    Some(Value::Number(x)) => match x.as_u64() {
                        Some(0) => false,
                        Some(1) => true,
                        _ => return Err(err()),
                    },
                    None => false,
                    _ => return Err(err()),
                };
                Element::Dihedral { rot, reflect }
            }
            FiniteGroup::Symmetric { .. } | FiniteGroup::Alternating { .. } => {
                Element::Perm(parse_images(v).ok_or_else(err)?)
            }
            FiniteGroup::SignedPerm { n, .. } => {
                let images = parse_images(v.get("images").ok_or_else(err)?).ok_or_else(err)?;
                let signs = match v.get("signs") {
                    Some(Value::Array(s)) => s
                        .iter()
                        .map(|x| match x {
                            Value::Bool(b) => Some(*b),
                            Value::Number(k) => k.as_u64().filter(|&k| k < 2).map(|k| k == 1),
                            _ => None,
                        })
                        .collect::<Option<Vec<_>>>()
                        .ok_or_else(err)?,
                    None => vec![false; *n],
                    _ => return Err(err()),
                };
                Element::Signed { perm: images, signs }
            }
            FiniteGroup::Matrix(m) => Element::Matrix(m.parse_element(v)?),
            FiniteGroup::Cayley(_) => Element::Cayley(u32::try_from(v.as_u64().ok_or_else(err)?).map_err(|_| err())?),
            FiniteGroup::Product(fs) => {
                let xs = v.as_array().ok_or_else(err)?;
                if xs.len() != fs.len() {
                    return Err(err());
                }
                Element::Product(fs.iter().zip(xs).map(|(f, x)| f.parse_element(x)).collect::<Result<_>>()?)
            }
        };
        self.validate(&g)?;
        Ok(g)
    }

    /// Short human-readable rendering.
    pub fn describe(&self, g: &Element) -> String {
        match g {
            Element::Perm(f) => perm::cycle_notation(f),
            Element::Dihedral { rot, reflect } => match (rot, reflect) {
                (0, false) => "e".into(),
                (0, true) => "tau".into(),
                (r, false) => format!("sigma^{r}"),
                (r, true) => format!("sigma^{r} tau"),
            },
            _ => self.element_to_json(g).to_string(),
        }
    }

    /// Cayley-table copy together with the element listing used for indices.
    pub fn to_cayley(&self, bound: u128) -> Result<(CayleyGroup, Vec<Element>)> {
        let indexed = IndexedGroup::new(self.clone(), bound)?;
        let n = indexed.len();
        let table = CayleyGroup::from_fn(n, |a, b| indexed.mul_idx(a as u32, b as u32) as usize)?;
        Ok((table, indexed.elements().to_vec()))
    }
}

fn parse_images(v: &Value) -> Option<Vec<u32>> {
    v.as_array()?.iter().map(|x| x.as_u64().filter(|&x| x >= 1).map(|x| (x - 1) as u32)).collect()
}

fn all_perms(n: usize) -> Vec<Vec<u32>> {
    let mut f = perm::identity(n);
    let mut out = vec![f.clone()];
    while perm::next_lex(&mut f) {
        out.push(f.clone());
    }
    out
}

fn sym_generators(n: usize) -> Vec<Vec<u32>> {
    match n {
        0 | 1 => vec![],
        2 => vec![perm::transposition(2, 0, 1)],
        _ => {
            let cycle: Vec<usize> = (0..n).collect();
            vec![perm::transposition(n, 0, 1), perm::from_cycles(n, &[&cycle])]
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_axioms(g: &FiniteGroup) {
        let els = g.enumerate(10_000).unwrap();
        assert_eq!(els.len() as u128, g.order(), "{}", g.name());
        let mut sorted = els.clone();
        sorted.sort();
        assert_eq!(sorted, els, "enumeration order for {}", g.name());
        let e = g.identity();
        for x in &els {
            g.validate(x).unwrap();
            assert_eq!(&g.mul(&e, x), x);
            assert_eq!(&g.mul(x, &e), x);
            assert_eq!(g.mul(&g.inverse(x), x), e);
        }
        for (i, a) in els.iter().enumerate().step_by(3) {
            for b in els.iter().skip(i % 4).step_by(5) {
                for c in els.iter().step_by(7) {
                    assert_eq!(g.mul(&g.mul(a, b), c), g.mul(a, &g.mul(b, c)));
                }
            }
        }
        let gens = g.generators();
        let closed = closure::subgroup_closure(g, &gens, 10_000).unwrap();
        assert_eq!(closed.len() as u128, g.order(), "generators of {}", g.name());
    }

    #[test]
    fn family_axioms() {
        let groups = vec![
            FiniteGroup::cyclic(1),
            FiniteGroup::cyclic(12),
            FiniteGroup::dihedral(1),
            FiniteGroup::dihedral(6),
            FiniteGroup::symmetric(4),
            FiniteGroup::alternating(5),
            FiniteGroup::signed(3, false),
            FiniteGroup::signed(3, true),
            FiniteGroup::matrix(Family::PSL, 2, 2, 2).unwrap(),
            FiniteGroup::matrix(Family::GL, 2, 3, 1).unwrap(),
            FiniteGroup::product(vec![FiniteGroup::cyclic(2), FiniteGroup::symmetric(3)]),
            catalog::quaternion8(),
        ];
        for g in &groups {
            check_axioms(g);
        }
    }

    #[test]
    fn multiply_examples() {
        let z8 = FiniteGroup::cyclic(8);
        assert_eq!(z8.multiply(&Element::Cyclic(5), &Element::Cyclic(6)).unwrap(), Element::Cyclic(3));
        let s3 = FiniteGroup::symmetric(3);
        let a = Element::Perm(perm::transposition(3, 0, 1));
        let b = Element::Perm(perm::transposition(3, 1, 2));
        assert_eq!(s3.element_to_json(&s3.multiply(&a, &b).unwrap()), json!([2, 3, 1]));
        let d3 = FiniteGroup::dihedral(3);
        let tau = Element::Dihedral { rot: 0, reflect: true };
        let sigma = Element::Dihedral { rot: 1, reflect: false };
        assert_eq!(d3.mul(&tau, &sigma), Element::Dihedral { rot: 2, reflect: true });
        assert!(z8.multiply(&Element::Cyclic(9), &Element::Cyclic(1)).is_err());
    }

    #[test]
    fn element_orders() {
        let z12 = FiniteGroup::cyclic(12);
        assert_eq!(z12.element_order(&Element::Cyclic(8)), 3);
        assert_eq!(z12.element_order(&z12.identity()), 1);
        let d5 = FiniteGroup::dihedral(5);
        assert_eq!(d5.element_order(&Element::Dihedral { rot: 2, reflect: true }), 2);
        let b2 = FiniteGroup::signed(2, false);
        let g = Element::Signed { perm: vec![1, 0], signs: vec![true, false] };
        assert_eq!(b2.element_order(&g), 4);
    }

    #[test]
    fn enumerate_examples() {
        assert_eq!(FiniteGroup::cyclic(4).enumerate(100).unwrap(), (0..4).map(Element::Cyclic).collect::<Vec<_>>());
        assert_eq!(FiniteGroup::symmetric(3).enumerate(100).unwrap().len(), 6);
        let psl = FiniteGroup::matrix(Family::PSL, 2, 2, 2).unwrap();
        assert_eq!(psl.enumerate(100).unwrap().len(), 60);
        assert!(matches!(FiniteGroup::symmetric(12).enumerate(1000), Err(MixError::EnumerationBound { .. })));
    }

    #[test]
    fn spec_round_trip() {
        let specs = [
            json!({"kind":"cyclic","n":8}),
            json!({"kind":"dihedral","n":12}),
            json!({"kind":"symmetric","n":6}),
            json!({"kind":"alternating","n":6}),
            json!({"kind":"signed_permutation","n":4,"even_only":false}),
            json!({"kind":"matrix","family":"PSL","d":2,"q":{"p":2,"e":2,"modulus":[1,1,1]}}),
            json!({"kind":"product","factors":[{"kind":"cyclic","n":2},{"kind":"symmetric","n":3}]}),
        ];
        for s in specs {
            let g = FiniteGroup::from_spec(&s).unwrap();
            assert_eq!(g.spec_json(), s);
        }
        let q8 = catalog::quaternion8();
        assert_eq!(FiniteGroup::from_spec(&q8.spec_json()).unwrap(), q8);
    }

    #[test]
    fn element_json_round_trip() {
        for g in [
            FiniteGroup::signed(3, true),
            FiniteGroup::matrix(Family::PSL, 2, 2, 2).unwrap(),
            FiniteGroup::dihedral(5),
            FiniteGroup::product(vec![FiniteGroup::cyclic(3), FiniteGroup::alternating(4)]),
        ] {
            for x in g.enumerate(1000).unwrap() {
                assert_eq!(g.parse_element(&g.element_to_json(&x)).unwrap(), x);
            }
        }
    }
}
