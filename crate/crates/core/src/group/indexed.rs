use std::collections::HashMap;

use super::{CayleyGroup, Element, FiniteGroup};
use crate::error::{MixError, Result};

/// Above this order products are computed on demand instead of tabulated.
const TABLE_LIMIT: usize = 512;

/// A group (or a subgroup of it) with its elements numbered.
///
/// Indices follow the canonical enumeration order of the element list.
#[derive(Clone, Debug)]
pub struct IndexedGroup {
    group: FiniteGroup,
    elements: Vec<Element>,
    index: HashMap<Element, u32>,
    table: Option<Vec<u32>>,
    inverses: Vec<u32>,
    identity: u32,
}

/// `G/N` as a table group, with the coset of every element of `G`.
#[derive(Clone, Debug)]
pub struct IndexQuotient {
    pub table: CayleyGroup,
    /// coset index of each element index of the parent
    pub projection: Vec<u32>,
    /// least element index in each coset
    pub representatives: Vec<u32>,
}

impl IndexedGroup {
    pub fn new(group: FiniteGroup, bound: u128) -> Result<Self> {
        let elements = group.enumerate(bound)?;
        Self::build(group, elements)
    }

    /// Numbers a subgroup given by its (sorted or unsorted) elements.
    pub fn on_subgroup(group: FiniteGroup, mut elements: Vec<Element>) -> Result<Self> {
        elements.sort();
        elements.dedup();
        let g = Self::build(group, elements)?;
        if g.table.is_none() {
            // greedy generators; every product must stay inside the set
            let mut inside = vec![false; g.len()];
            inside[g.identity as usize] = true;
            let mut members = vec![g.identity];
            let mut gens: Vec<u32> = Vec::new();
            for x in 0..g.len() as u32 {
                if inside[x as usize] {
                    continue;
                }
                gens.push(x);
                let mut head = 0;
                while head < members.len() {
                    let y = members[head];
                    head += 1;
                    for &s in &gens {
                        let z = g.try_mul(y, s).ok_or_else(|| {
                            MixError::NotSubgroup("element set is not closed under multiplication".into())
                        })?;
                        if !inside[z as usize] {
                            inside[z as usize] = true;
                            members.push(z);
                        }
                    }
                }
            }
        }
        Ok(g)
    }

    fn build(group: FiniteGroup, elements: Vec<Element>) -> Result<Self> {
        let index: HashMap<Element, u32> = elements.iter().cloned().enumerate().map(|(i, e)| (e, i as u32)).collect();
        let identity = *index
            .get(&group.identity())
            .ok_or_else(|| MixError::NotSubgroup("element set does not contain the identity".into()))?;
        let mut inverses = Vec::with_capacity(elements.len());
        for x in &elements {
            let inv = group.inverse(x);
            inverses.push(
                *index
                    .get(&inv)
                    .ok_or_else(|| MixError::NotSubgroup("element set is not closed under inverses".into()))?,
            );
        }
        let mut g = IndexedGroup { group, elements, index, table: None, inverses, identity };
        let n = g.elements.len();
        if n <= TABLE_LIMIT {
            let mut table = Vec::with_capacity(n * n);
            for a in 0..n {
                for b in 0..n {
                    let p = g.group.mul(&g.elements[a], &g.elements[b]);
                    table.push(*g.index.get(&p).ok_or_else(|| {
                        MixError::NotSubgroup("element set is not closed under multiplication".into())
                    })?);
                }
            }
            g.table = Some(table);
        }
        Ok(g)
    }

    fn try_mul(&self, a: u32, b: u32) -> Option<u32> {
        if let Some(t) = &self.table {
            return Some(t[a as usize * self.len() + b as usize]);
        }
        let p = self.group.mul(&self.elements[a as usize], &self.elements[b as usize]);
        self.index.get(&p).copied()
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn element(&self, i: u32) -> &Element {
        &self.elements[i as usize]
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn identity_idx(&self) -> u32 {
        self.identity
    }

    pub fn index_of(&self, g: &Element) -> Option<u32> {
        self.index.get(g).copied()
    }

    #[inline]
    pub fn mul_idx(&self, a: u32, b: u32) -> u32 {
        self.try_mul(a, b).expect("indexed set is closed under multiplication")
    }

    #[inline]
    pub fn inv_idx(&self, a: u32) -> u32 {
        self.inverses[a as usize]
    }

    pub fn conj_idx(&self, h: u32, g: u32) -> u32 {
        self.mul_idx(self.mul_idx(h, g), self.inv_idx(h))
    }

    pub fn order_idx(&self, g: u32) -> u64 {
        self.group.element_order(&self.elements[g as usize])
    }

    /// Right-multiplication map `x -> x g` on indices.
    pub fn right_translation(&self, g: u32) -> Vec<u32> {
        (0..self.len() as u32).map(|x| self.mul_idx(x, g)).collect()
    }

    /// Generators of the whole indexed set, as indices.
    pub fn generator_indices(&self) -> Vec<u32> {
        let gens: Vec<u32> = self.group.generators().iter().filter_map(|g| self.index_of(g)).collect();
        if self.closure_idx(&gens).len() == self.len() {
            return gens;
        }
        // subgroup numbering: pick generators greedily
        let mut inside = vec![false; self.len()];
        let mut gens = Vec::new();
        for x in 0..self.len() as u32 {
            if !inside[x as usize] {
                gens.push(x);
                for y in self.closure_idx(&gens) {
                    inside[y as usize] = true;
                }
            }
        }
        gens
    }

    /// Sorted indices of the subgroup generated by `gens`.
    pub fn closure_idx(&self, gens: &[u32]) -> Vec<u32> {
        let mut inside = vec![false; self.len()];
        inside[self.identity as usize] = true;
        let mut members = vec![self.identity];
        let mut head = 0;
        while head < members.len() {
            let y = members[head];
            head += 1;
            for &g in gens {
                let z = self.mul_idx(y, g);
                if !inside[z as usize] {
                    inside[z as usize] = true;
                    members.push(z);
                }
            }
        }
        members.sort_unstable();
        members
    }

    /// Smallest normal subgroup containing `gens`.
    pub fn normal_closure_idx(&self, gens: &[u32]) -> Vec<u32> {
        let all = self.generator_indices();
        let mut current = self.closure_idx(gens);
        loop {
            let mut inside = vec![false; self.len()];
            for &x in &current {
                inside[x as usize] = true;
            }
            let mut extra = Vec::new();
            for &x in &current {
                for &h in &all {
                    let c = self.conj_idx(h, x);
                    if !inside[c as usize] {
                        inside[c as usize] = true;
                        extra.push(c);
                    }
                }
            }
            if extra.is_empty() {
                return current;
            }
            let mut gens = current.clone();
            gens.extend(extra);
            current = self.closure_idx(&gens);
        }
    }

    pub fn is_subgroup_idx(&self, sub: &[u32]) -> bool {
        let mut inside = vec![false; self.len()];
        for &x in sub {
            inside[x as usize] = true;
        }
        if !inside[self.identity as usize] {
            return false;
        }
        // grow the closure of greedy generators; it must stay inside and
        // exhaust the set
        let mut closed = vec![false; self.len()];
        closed[self.identity as usize] = true;
        let mut members = vec![self.identity];
        let mut gens: Vec<u32> = Vec::new();
        for &x in sub {
            if closed[x as usize] {
                continue;
            }
            gens.push(x);
            let mut head = 0;
            while head < members.len() {
                let y = members[head];
                head += 1;
                for &g in &gens {
                    let z = self.mul_idx(y, g);
                    if !inside[z as usize] {
                        return false;
                    }
                    if !closed[z as usize] {
                        closed[z as usize] = true;
                        members.push(z);
                    }
                }
            }
        }
        let mut distinct = sub.to_vec();
        distinct.sort_unstable();
        distinct.dedup();
        members.len() == distinct.len()
    }

    /// `h N h^-1 = N` for every generator `h`.
    pub fn is_normal_idx(&self, sub: &[u32]) -> bool {
        let mut inside = vec![false; self.len()];
        for &x in sub {
            inside[x as usize] = true;
        }
        let gens = self.generator_indices();
        sub.iter().all(|&n| gens.iter().all(|&h| inside[self.conj_idx(h, n) as usize]))
    }

    /// Quotient by a normal subgroup. Cosets are numbered by first
    /// appearance in enumeration order, except that `N` itself is coset 0.
    pub fn quotient_idx(&self, sub: &[u32]) -> Result<IndexQuotient> {
        if !self.is_subgroup_idx(sub) {
            return Err(MixError::NotSubgroup("quotient needs a subgroup".into()));
        }
        if !self.is_normal_idx(sub) {
            return Err(MixError::NotNormal);
        }
        let mut projection = vec![u32::MAX; self.len()];
        let mut representatives = Vec::new();
        let mut order: Vec<u32> = vec![self.identity];
        order.extend((0..self.len() as u32).filter(|&x| x != self.identity));
        for x in order {
            if projection[x as usize] != u32::MAX {
                continue;
            }
            let c = representatives.len() as u32;
            representatives.push(x);
            for &n in sub {
                projection[self.mul_idx(x, n) as usize] = c;
            }
        }
        for (c, r) in representatives.iter_mut().enumerate() {
            *r = (0..self.len() as u32).find(|&x| projection[x as usize] == c as u32).unwrap();
        }
        let k = representatives.len();
        let table = CayleyGroup::from_fn(k, |a, b| {
            projection[self.mul_idx(representatives[a], representatives[b]) as usize] as usize
        })?;
        Ok(IndexQuotient { table, projection, representatives })
    }

    /// Conjugacy classes, each sorted, ordered by least member.
    pub fn conjugacy_classes(&self) -> Vec<Vec<u32>> {
        let gens = self.generator_indices();
        let mut seen = vec![false; self.len()];
        let mut classes = Vec::new();
        for x in 0..self.len() as u32 {
            if seen[x as usize] {
                continue;
            }
            seen[x as usize] = true;
            let mut class = vec![x];
            let mut head = 0;
            while head < class.len() {
                let y = class[head];
                head += 1;
                for &h in &gens {
                    let c = self.conj_idx(h, y);
                    if !seen[c as usize] {
                        seen[c as usize] = true;
                        class.push(c);
                    }
                }
            }
            class.sort_unstable();
            classes.push(class);
        }
        classes
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::catalog;

    #[test]
    fn klein_in_a4() {
        let g = IndexedGroup::new(FiniteGroup::alternating(4), 1000).unwrap();
        let invol: Vec<u32> = (0..12).filter(|&x| g.order_idx(x) == 2).collect();
        assert_eq!(invol.len(), 3);
        let k = g.closure_idx(&invol);
        assert_eq!(k.len(), 4);
        let q = g.quotient_idx(&k).unwrap();
        assert_eq!(q.table.order(), 3);
        for a in 0..12u32 {
            for b in 0..12u32 {
                let pa = q.projection[a as usize];
                let pb = q.projection[b as usize];
                assert_eq!(q.projection[g.mul_idx(a, b) as usize], q.table.mul(pa, pb));
            }
        }
    }

    #[test]
    fn non_normal_rejected() {
        let g = IndexedGroup::new(FiniteGroup::symmetric(3), 100).unwrap();
        let t = g.index_of(&Element::Perm(vec![1, 0, 2])).unwrap();
        let h = g.closure_idx(&[t]);
        assert!(matches!(g.quotient_idx(&h), Err(MixError::NotNormal)));
        assert!(matches!(g.quotient_idx(&[t]), Err(MixError::NotSubgroup(_))));
    }

    #[test]
    fn class_counts() {
        let s4 = IndexedGroup::new(FiniteGroup::symmetric(4), 100).unwrap();
        assert_eq!(s4.conjugacy_classes().len(), 5);
        let q8 = IndexedGroup::new(catalog::quaternion8(), 100).unwrap();
        assert_eq!(q8.conjugacy_classes().len(), 5);
        let a5 = IndexedGroup::new(FiniteGroup::alternating(5), 100).unwrap();
        assert_eq!(a5.conjugacy_classes().len(), 5);
    }

    #[test]
    fn normal_closure_of_a_transposition_is_everything() {
        let s4 = IndexedGroup::new(FiniteGroup::symmetric(4), 100).unwrap();
        let t = s4.index_of(&Element::Perm(vec![1, 0, 2, 3])).unwrap();
        assert_eq!(s4.normal_closure_idx(&[t]).len(), 24);
    }

    #[test]
    fn subgroup_numbering() {
        let s4 = FiniteGroup::symmetric(4);
        let els: Vec<Element> =
            s4.enumerate(100).unwrap().into_iter().filter(|g| g.as_perm().unwrap()[3] == 3).collect();
        let h = IndexedGroup::on_subgroup(s4.clone(), els).unwrap();
        assert_eq!(h.len(), 6);
        assert!(IndexedGroup::on_subgroup(s4, vec![Element::Perm(vec![0, 1, 2, 3]), Element::Perm(vec![1, 2, 0, 3])])
            .is_err());
    }
}
