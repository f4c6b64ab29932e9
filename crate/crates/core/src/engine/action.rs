use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde_json::{json, Value};

use crate::error::{MixError, Result};
use crate::field::projective::{act, all_points};
use crate::field::{MatrixGroup, ProjectivePoint};
use crate::group::{Element, FiniteGroup, IndexedGroup};

/// The actions a sequence can be claimed to mix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ActionKind {
    /// permutation groups on `{1..n}`, signed permutations on `{+-1..+-n}`,
    /// `Z/n` on itself, `D_n` on the vertices `0..n-1`, matrix groups on
    /// projective points
    Natural,
    /// ordered pairs of distinct points of the natural action
    Pairs,
    /// matrix groups on `P^{d-1}`; the same as `Natural` for them
    ProjectiveLine,
    /// left cosets `gH` of a given subgroup
    Cosets,
    /// the group on itself by left multiplication
    Regular,
}

impl ActionKind {
    pub fn name(self) -> &'static str {
        match self {
            ActionKind::Natural => "natural",
            ActionKind::Pairs => "pairs",
            ActionKind::ProjectiveLine => "projective-line",
            ActionKind::Cosets => "cosets",
            ActionKind::Regular => "regular",
        }
    }
}

impl fmt::Display for ActionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ActionKind {
    type Err = MixError;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "natural" => ActionKind::Natural,
            "pairs" => ActionKind::Pairs,
            "projective-line" | "projective_line" => ActionKind::ProjectiveLine,
            "cosets" => ActionKind::Cosets,
            "regular" => ActionKind::Regular,
            _ => return Err(MixError::InvalidAction(format!("unknown action {s}"))),
        })
    }
}

#[derive(Clone, Debug)]
enum Points {
    Perm { n: usize },
    Signed { n: usize },
    Cyclic { n: usize },
    Dihedral { n: usize },
    Projective { mg: MatrixGroup, points: Vec<ProjectivePoint>, index: HashMap<ProjectivePoint, u32> },
    Pairs { base: Box<Points>, m: usize },
    Cosets { ig: IndexedGroup, coset_of: Vec<u32>, reps: Vec<u32> },
    Regular { ig: IndexedGroup },
}

/// A finite set with a left action, points numbered `0..size`.
#[derive(Clone, Debug)]
pub struct ActionSpace {
    pub kind: ActionKind,
    group: FiniteGroup,
    points: Points,
}

fn natural_points(group: &FiniteGroup) -> Result<Points> {
    Ok(match group {
        FiniteGroup::Symmetric { n } | FiniteGroup::Alternating { n } => Points::Perm { n: *n },
        FiniteGroup::SignedPerm { n, .. } => Points::Signed { n: *n },
        FiniteGroup::Cyclic { n } => Points::Cyclic { n: usize::try_from(*n).unwrap_or(usize::MAX) },
        FiniteGroup::Dihedral { n } => Points::Dihedral { n: usize::try_from(*n).unwrap_or(usize::MAX) },
        FiniteGroup::Matrix(mg) => {
            let points = all_points(&mg.field, mg.d);
            let index = points.iter().cloned().enumerate().map(|(i, p)| (p, i as u32)).collect();
            Points::Projective { mg: mg.clone(), points, index }
        }
        _ => {
            return Err(MixError::InvalidAction(format!("{} has no natural action", group.name())));
        }
    })
}

impl Points {
    fn size(&self) -> usize {
        match self {
            Points::Perm { n } | Points::Cyclic { n } | Points::Dihedral { n } => *n,
            Points::Signed { n } => 2 * n,
            Points::Projective { points, .. } => points.len(),
            Points::Pairs { m, .. } => m * m.saturating_sub(1),
            Points::Cosets { reps, .. } => reps.len(),
            Points::Regular { ig } => ig.len(),
        }
    }

    fn act(&self, g: &Element, x: u32) -> u32 {
        match (self, g) {
            (Points::Perm { .. }, Element::Perm(f)) => f[x as usize],
            (Points::Signed { n }, Element::Signed { perm, signs }) => {
                let n = *n as u32;
                let (i, neg) = if x < n { (x, false) } else { (x - n, true) };
                let j = perm[i as usize];
                if neg ^ signs[i as usize] {
                    j + n
                } else {
                    j
                }
            }
            (Points::Cyclic { n }, Element::Cyclic(r)) => ((x as u64 + r) % *n as u64) as u32,
            (Points::Dihedral { n }, Element::Dihedral { rot, reflect }) => {
                let n = *n as u64;
                let y = if *reflect { (n - x as u64) % n } else { x as u64 };
                ((rot + y) % n) as u32
            }
            (Points::Projective { mg, points, index }, Element::Matrix(m)) => index[&act(mg, m, &points[x as usize])],
            (Points::Pairs { base, m }, _) => {
                let (i, j) = pair_of(*m, x);
                pair_index(*m, base.act(g, i), base.act(g, j))
            }
            (Points::Cosets { ig, coset_of, reps }, _) => {
                let gi = ig.index_of(g).expect("element of the group");
                coset_of[ig.mul_idx(gi, reps[x as usize]) as usize]
            }
            (Points::Regular { ig }, _) => {
                let gi = ig.index_of(g).expect("element of the group");
                ig.mul_idx(gi, x)
            }
            _ => panic!("element kind does not match the action"),
        }
    }

    fn point_json(&self, x: u32) -> Value {
        match self {
            Points::Perm { .. } => json!(x + 1),
            Points::Signed { n } => {
                let n = *n as i64;
                let x = x as i64;
                if x < n {
                    json!(x + 1)
                } else {
                    json!(-(x - n + 1))
                }
            }
            Points::Cyclic { .. } | Points::Dihedral { .. } => json!(x),
            Points::Projective { mg, points, .. } => points[x as usize].to_json(&mg.field),
            Points::Pairs { base, m } => {
                let (i, j) = pair_of(*m, x);
                json!([base.point_json(i), base.point_json(j)])
            }
            Points::Cosets { ig, reps, .. } => ig.group().element_to_json(ig.element(reps[x as usize])),
            Points::Regular { ig } => ig.group().element_to_json(ig.element(x)),
        }
    }

    fn parse_point(&self, v: &Value) -> Result<u32> {
        let bad = || MixError::InvalidAction(format!("{v} is not a point of the action"));
        match self {
            Points::Perm { n } => {
                let x = v.as_u64().ok_or_else(bad)?;
                if x == 0 || x > *n as u64 {
                    return Err(bad());
                }
                Ok(x as u32 - 1)
            }
            Points::Signed { n } => {
                let x = v.as_i64().ok_or_else(bad)?;
                let n = *n as i64;
                if x == 0 || x.abs() > n {
                    return Err(bad());
                }
                Ok(if x > 0 { x - 1 } else { n + (-x) - 1 } as u32)
            }
            Points::Cyclic { n } | Points::Dihedral { n } => {
                let x = v.as_u64().ok_or_else(bad)?;
                if x >= *n as u64 {
                    return Err(bad());
                }
                Ok(x as u32)
            }
            Points::Projective { mg, index, .. } => {
                let p = ProjectivePoint::parse(&mg.field, mg.d, v)?;
                index.get(&p).copied().ok_or_else(bad)
            }
            Points::Pairs { base, m } => {
                let arr = v.as_array().filter(|a| a.len() == 2).ok_or_else(bad)?;
                let i = base.parse_point(&arr[0])?;
                let j = base.parse_point(&arr[1])?;
                if i == j {
                    return Err(bad());
                }
                Ok(pair_index(*m, i, j))
            }
            Points::Cosets { ig, coset_of, .. } => {
                let g = ig.group().parse_element(v)?;
                Ok(coset_of[ig.index_of(&g).ok_or_else(bad)? as usize])
            }
            Points::Regular { ig } => {
                let g = ig.group().parse_element(v)?;
                ig.index_of(&g).ok_or_else(bad)
            }
        }
    }
}

fn pair_index(m: usize, i: u32, j: u32) -> u32 {
    let jj = if j > i { j - 1 } else { j };
    i * (m as u32 - 1) + jj
}

fn pair_of(m: usize, x: u32) -> (u32, u32) {
    let w = m as u32 - 1;
    let i = x / w;
    let jj = x % w;
    (i, if jj >= i { jj + 1 } else { jj })
}

impl ActionSpace {
    pub fn new(group: &FiniteGroup, kind: ActionKind, subgroup: Option<&[Element]>, bound: u128) -> Result<Self> {
        let points = match kind {
            ActionKind::Natural => natural_points(group)?,
            ActionKind::ProjectiveLine => match group {
                FiniteGroup::Matrix(_) => natural_points(group)?,
                _ => return Err(MixError::InvalidAction("projective-line needs a matrix group".into())),
            },
            ActionKind::Pairs => {
                let base = natural_points(group)?;
                let m = base.size();
                if m < 2 {
                    return Err(MixError::InvalidAction("pairs need at least two points".into()));
                }
                if (m as u128) * (m as u128) > bound {
                    return Err(MixError::EnumerationBound { order: (m * m) as u128, bound });
                }
                Points::Pairs { base: Box::new(base), m }
            }
            ActionKind::Regular => Points::Regular { ig: IndexedGroup::new(group.clone(), bound)? },
            ActionKind::Cosets => {
                let h = subgroup.ok_or_else(|| MixError::InvalidAction("coset action needs a subgroup".into()))?;
                let ig = IndexedGroup::new(group.clone(), bound)?;
                let mut hs = h
                    .iter()
                    .map(|x| {
                        ig.index_of(x).ok_or_else(|| MixError::InvalidElement(format!("{x:?} is not in the group")))
                    })
                    .collect::<Result<Vec<_>>>()?;
                hs.sort_unstable();
                hs.dedup();
                if !ig.is_subgroup_idx(&hs) {
                    return Err(MixError::NotSubgroup("coset action needs a subgroup".into()));
                }
                let mut coset_of = vec![u32::MAX; ig.len()];
                let mut reps = Vec::new();
                for x in 0..ig.len() as u32 {
                    if coset_of[x as usize] == u32::MAX {
                        let c = reps.len() as u32;
                        reps.push(x);
                        for &y in &hs {
                            coset_of[ig.mul_idx(x, y) as usize] = c;
                        }
                    }
                }
                Points::Cosets { ig, coset_of, reps }
            }
        };
        if points.size() == 0 {
            return Err(MixError::InvalidAction("the action has no points".into()));
        }
        Ok(ActionSpace { kind, group: group.clone(), points })
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn size(&self) -> usize {
        self.points.size()
    }

    /// `g . x`
    pub fn act(&self, g: &Element, x: u32) -> u32 {
        self.points.act(g, x)
    }

    /// The permutation of `0..size` induced by `g`.
    pub fn permutation(&self, g: &Element) -> Vec<u32> {
        (0..self.size() as u32).map(|x| self.act(g, x)).collect()
    }

    pub fn point_json(&self, x: u32) -> Value {
        self.points.point_json(x)
    }

    pub fn parse_point(&self, v: &Value) -> Result<u32> {
        self.points.parse_point(v)
    }

    /// Orbit of `x`, sorted.
    pub fn orbit(&self, x: u32) -> Vec<u32> {
        let gens = self.group.generators();
        let mut seen = vec![false; self.size()];
        seen[x as usize] = true;
        let mut out = vec![x];
        let mut head = 0;
        while head < out.len() {
            let y = out[head];
            head += 1;
            for g in &gens {
                let z = self.act(g, y);
                if !seen[z as usize] {
                    seen[z as usize] = true;
                    out.push(z);
                }
            }
        }
        out.sort_unstable();
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Family;
    use crate::group::perm;

    #[test]
    fn pair_numbering_is_a_bijection() {
        for m in 2..7usize {
            let mut seen = vec![false; m * (m - 1)];
            for i in 0..m as u32 {
                for j in 0..m as u32 {
                    if i != j {
                        let x = pair_index(m, i, j);
                        assert_eq!(pair_of(m, x), (i, j));
                        seen[x as usize] = true;
                    }
                }
            }
            assert!(seen.iter().all(|&s| s));
        }
    }

    #[test]
    fn actions_are_homomorphic() {
        let cases = vec![
            (FiniteGroup::symmetric(4), ActionKind::Natural),
            (FiniteGroup::symmetric(4), ActionKind::Pairs),
            (FiniteGroup::signed(3, false), ActionKind::Natural),
            (FiniteGroup::dihedral(5), ActionKind::Natural),
            (FiniteGroup::cyclic(6), ActionKind::Natural),
            (FiniteGroup::matrix(Family::PSL, 2, 2, 2).unwrap(), ActionKind::ProjectiveLine),
            (FiniteGroup::matrix(Family::PSL, 2, 2, 2).unwrap(), ActionKind::Pairs),
            (FiniteGroup::alternating(4), ActionKind::Regular),
        ];
        for (g, kind) in cases {
            let space = ActionSpace::new(&g, kind, None, 1 << 20).unwrap();
            let els = g.enumerate(1000).unwrap();
            for a in els.iter().step_by(3) {
                for b in els.iter().step_by(5) {
                    let ab = g.mul(a, b);
                    for x in 0..space.size() as u32 {
                        assert_eq!(space.act(&ab, x), space.act(a, space.act(b, x)), "{} {kind}", g.name());
                    }
                }
            }
            for x in 0..space.size() as u32 {
                assert_eq!(space.parse_point(&space.point_json(x)).unwrap(), x);
            }
        }
    }

    #[test]
    fn coset_action() {
        let s3 = FiniteGroup::symmetric(3);
        let h = vec![Element::Perm(perm::identity(3)), Element::Perm(perm::transposition(3, 1, 2))];
        let space = ActionSpace::new(&s3, ActionKind::Cosets, Some(&h), 100).unwrap();
        assert_eq!(space.size(), 3);
        assert_eq!(space.orbit(0).len(), 3);
        let base = space.parse_point(&json!([1, 3, 2])).unwrap();
        assert_eq!(base, 0);
    }

    #[test]
    fn signed_points() {
        let b2 = FiniteGroup::signed(2, false);
        let space = ActionSpace::new(&b2, ActionKind::Natural, None, 100).unwrap();
        let g = Element::Signed { perm: vec![1, 0], signs: vec![true, false] };
        // e_1 -> -e_2
        assert_eq!(space.point_json(space.act(&g, 0)), json!(-2));
        assert!(space.parse_point(&json!(0)).is_err());
    }
}
