//! Structural obstructions: the subgroup `U(G)` generated by 2-elements,
//! odd quotients, and the involution series.

use serde::Serialize;

use crate::error::Result;
use crate::group::{CayleyGroup, Element, FiniteGroup, IndexedGroup};

/// Subgroup generated by `candidates`, growing greedily from `start`
/// (sorted indices of a subgroup).
fn generated(ig: &IndexedGroup, start: Vec<u32>, candidates: impl IntoIterator<Item = u32>) -> Vec<u32> {
    let mut inside = vec![false; ig.len()];
    for &x in &start {
        inside[x as usize] = true;
    }
    let mut gens = greedy_generators(ig, &start);
    let mut span = start;
    for x in candidates {
        if !inside[x as usize] {
            gens.push(x);
            span = ig.closure_idx(&gens);
            for &y in &span {
                inside[y as usize] = true;
            }
        }
    }
    span
}

fn greedy_generators(ig: &IndexedGroup, sub: &[u32]) -> Vec<u32> {
    let mut inside = vec![false; ig.len()];
    inside[ig.identity_idx() as usize] = true;
    let mut gens = Vec::new();
    for &x in sub {
        if !inside[x as usize] {
            gens.push(x);
            for y in ig.closure_idx(&gens) {
                inside[y as usize] = true;
            }
        }
    }
    gens
}

fn u_idx(ig: &IndexedGroup) -> Vec<u32> {
    let twos = (0..ig.len() as u32).filter(|&x| ig.order_idx(x).is_power_of_two());
    generated(ig, vec![ig.identity_idx()], twos)
}

/// `U(G)`: the subgroup generated by all elements of 2-power order.
pub fn two_element_closure(group: &FiniteGroup, bound: u128) -> Result<Vec<Element>> {
    let ig = IndexedGroup::new(group.clone(), bound)?;
    Ok(u_idx(&ig).into_iter().map(|x| ig.element(x).clone()).collect())
}

/// No nontrivial odd quotient, i.e. `U(G) = G`.
pub fn is_2prime_simple(group: &FiniteGroup, bound: u128) -> Result<bool> {
    let ig = IndexedGroup::new(group.clone(), bound)?;
    Ok(u_idx(&ig).len() == ig.len())
}

/// `G / U(G)` when it is nontrivial.
#[derive(Clone, Debug)]
pub struct OddQuotient {
    pub quotient: FiniteGroup,
    /// the elements of `G` in enumeration order
    pub elements: Vec<Element>,
    /// coset index of each element
    pub projection: Vec<u32>,
}

impl OddQuotient {
    pub fn order(&self) -> usize {
        match &self.quotient {
            FiniteGroup::Cayley(c) => c.order(),
            _ => unreachable!(),
        }
    }

    pub fn project(&self, g: &Element) -> Option<u32> {
        self.elements.iter().position(|x| x == g).map(|i| self.projection[i])
    }
}

/// The non-mixability certificate `G -> G/U(G)`, if `U(G) != G`.
pub fn odd_quotient_witness(group: &FiniteGroup, bound: u128) -> Result<Option<OddQuotient>> {
    let ig = IndexedGroup::new(group.clone(), bound)?;
    let u = u_idx(&ig);
    if u.len() == ig.len() {
        return Ok(None);
    }
    let q = ig.quotient_idx(&u)?;
    debug_assert!(q.table.order() % 2 == 1);
    Ok(Some(OddQuotient {
        quotient: FiniteGroup::Cayley(q.table),
        elements: ig.elements().to_vec(),
        projection: q.projection,
    }))
}

/// Generated by elements of order 2.
pub fn is_involution_generated(group: &FiniteGroup, bound: u128) -> Result<bool> {
    let ig = IndexedGroup::new(group.clone(), bound)?;
    let invs = (0..ig.len() as u32).filter(|&x| ig.order_idx(x) == 2);
    Ok(generated(&ig, vec![ig.identity_idx()], invs).len() == ig.len())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeriesTerm {
    /// `|I_j|`
    pub order: u128,
    /// `|I_j / I_{j-1}|`, 1 for `I_0`
    pub factor: u128,
    /// `"trivial"` for `I_0`, else `"involution-generated"`
    pub tag: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvolutionSeries {
    pub terms: Vec<SeriesTerm>,
    /// `|G / I_t|`, always odd
    pub top_quotient_order: u128,
}

impl InvolutionSeries {
    pub fn orders(&self) -> Vec<u128> {
        self.terms.iter().map(|t| t.order).collect()
    }
}

fn series_idx(ig: &IndexedGroup) -> InvolutionSeries {
    let mut current = vec![ig.identity_idx()];
    let mut terms = vec![SeriesTerm { order: 1, factor: 1, tag: "trivial".into() }];
    loop {
        let mut inside = vec![false; ig.len()];
        for &x in &current {
            inside[x as usize] = true;
        }
        // involutions of G / I_j, lifted
        let lifted: Vec<u32> =
            (0..ig.len() as u32).filter(|&x| !inside[x as usize] && inside[ig.mul_idx(x, x) as usize]).collect();
        if lifted.is_empty() {
            break;
        }
        let next = generated(ig, current.clone(), lifted);
        terms.push(SeriesTerm {
            order: next.len() as u128,
            factor: (next.len() / current.len()) as u128,
            tag: "involution-generated".into(),
        });
        current = next;
    }
    InvolutionSeries { terms, top_quotient_order: (ig.len() / current.len()) as u128 }
}

/// `1 = I_0 < I_1 < ... < I_t`, where `I_{j+1}/I_j` is generated by the
/// involutions of `G/I_j`, stopping when `G/I_t` has none (so has odd order).
pub fn involution_series(group: &FiniteGroup, bound: u128) -> Result<InvolutionSeries> {
    let ig = IndexedGroup::new(group.clone(), bound)?;
    Ok(series_idx(&ig))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructureReport {
    pub group: String,
    pub order: u128,
    pub u_order: u128,
    pub odd_quotient_order: u128,
    pub is_2prime_simple: bool,
    pub involution_series: InvolutionSeries,
    pub is_involution_generated: bool,
}

/// All structural facts in one pass over the enumerated group.
pub fn analyze(group: &FiniteGroup, bound: u128) -> Result<StructureReport> {
    let ig = IndexedGroup::new(group.clone(), bound)?;
    let u = u_idx(&ig).len() as u128;
    let order = ig.len() as u128;
    let invs = (0..ig.len() as u32).filter(|&x| ig.order_idx(x) == 2);
    let inv_gen = generated(&ig, vec![ig.identity_idx()], invs).len() as u128 == order;
    Ok(StructureReport {
        group: group.name(),
        order,
        u_order: u,
        odd_quotient_order: order / u,
        is_2prime_simple: u == order,
        involution_series: series_idx(&ig),
        is_involution_generated: inv_gen,
    })
}

/// Table of `G/U(G)`, for callers holding an indexed group.
pub fn odd_quotient_table(ig: &IndexedGroup) -> Result<Option<CayleyGroup>> {
    let u = u_idx(ig);
    if u.len() == ig.len() {
        return Ok(None);
    }
    Ok(Some(ig.quotient_idx(&u)?.table))
}
