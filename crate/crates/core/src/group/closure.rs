use std::collections::{HashMap, HashSet};

use super::{Element, FiniteGroup, IndexedGroup};
use crate::error::{MixError, Result};

/// Smallest subgroup containing `generators`, sorted in enumeration order.
///
/// Works without enumerating the ambient group; fails once more than
/// `bound` elements have been produced.
pub fn subgroup_closure(group: &FiniteGroup, generators: &[Element], bound: u128) -> Result<Vec<Element>> {
    for g in generators {
        group.validate(g)?;
    }
    let e = group.identity();
    let mut seen: HashSet<Element> = HashSet::from([e.clone()]);
    let mut members = vec![e];
    let mut head = 0;
    while head < members.len() {
        let y = members[head].clone();
        head += 1;
        for g in generators {
            let z = group.mul(&y, g);
            if seen.insert(z.clone()) {
                members.push(z);
                if members.len() as u128 > bound {
                    return Err(MixError::EnumerationBound { order: members.len() as u128, bound });
                }
            }
        }
    }
    members.sort();
    Ok(members)
}

/// `G/N` as a table group.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub group: FiniteGroup,
    pub projection: HashMap<Element, u32>,
    /// least element of each coset
    pub representatives: Vec<Element>,
}

impl Quotient {
    pub fn project(&self, g: &Element) -> Option<u32> {
        self.projection.get(g).copied()
    }
}

pub fn quotient_group(group: &FiniteGroup, normal: &[Element], bound: u128) -> Result<Quotient> {
    let indexed = IndexedGroup::new(group.clone(), bound)?;
    let sub = normal
        .iter()
        .map(|g| indexed.index_of(g).ok_or_else(|| MixError::InvalidElement(format!("{g:?} is not in the group"))))
        .collect::<Result<Vec<_>>>()?;
    let q = indexed.quotient_idx(&sub)?;
    let projection = indexed.elements().iter().cloned().zip(q.projection.iter().copied()).collect();
    let representatives = q.representatives.iter().map(|&r| indexed.element(r).clone()).collect();
    Ok(Quotient { group: FiniteGroup::Cayley(q.table), projection, representatives })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::perm;

    fn t(n: usize, a: usize, b: usize) -> Element {
        Element::Perm(perm::transposition(n, a, b))
    }

    #[test]
    fn closure_examples() {
        let s3 = FiniteGroup::symmetric(3);
        assert_eq!(subgroup_closure(&s3, &[t(3, 0, 1)], 100).unwrap().len(), 2);
        assert_eq!(subgroup_closure(&s3, &[t(3, 0, 1), t(3, 1, 2), t(3, 0, 2)], 100).unwrap().len(), 6);
        let a4 = FiniteGroup::alternating(4);
        let invol: Vec<Element> = a4.enumerate(100).unwrap().into_iter().filter(|g| a4.element_order(g) == 2).collect();
        let k = subgroup_closure(&a4, &invol, 100).unwrap();
        assert_eq!(k.len(), 4);
        assert_eq!(subgroup_closure(&a4, &k, 100).unwrap(), k);
        assert!(subgroup_closure(
            &FiniteGroup::symmetric(9),
            &[t(9, 0, 1), Element::Perm(perm::from_cycles(9, &[&[0, 1, 2, 3, 4, 5, 6, 7, 8]]))],
            1000
        )
        .is_err());
    }

    #[test]
    fn quotient_examples() {
        let z12 = FiniteGroup::cyclic(12);
        let n = subgroup_closure(&z12, &[Element::Cyclic(4)], 100).unwrap();
        let q = quotient_group(&z12, &n, 100).unwrap();
        assert_eq!(q.group.order(), 4);
        assert_eq!(q.group.element_order(&Element::Cayley(q.project(&Element::Cyclic(1)).unwrap())), 4);

        let s3 = FiniteGroup::symmetric(3);
        let a3 = FiniteGroup::alternating(3).enumerate(10).unwrap();
        assert_eq!(quotient_group(&s3, &a3, 10).unwrap().group.order(), 2);
    }
}
