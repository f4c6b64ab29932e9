//! Exhaustive search for mixing sequences whose probabilities come from a
//! finite grid of rationals.
//!
//! Laws are kept exactly as integer numerators over a common denominator.
//! Depth-first search runs under iterative deepening from the entropy bound,
//! pruned by support size, by a mass bound, and by a memo of states known to
//! fail. All results are relative to the grid.

#[cfg(not(feature = "parallel"))]
use std::collections::HashMap;
use std::sync::atomic::{AtomicU64, Ordering};
#[cfg(not(feature = "parallel"))]
use std::sync::Mutex;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;
use serde_json::{json, Value};

use crate::engine::{entropy_bound, verify_on, MixingStep, Mode, Probability, VerifyOptions};
use crate::error::{MixError, Result};
use crate::group::{FiniteGroup, IndexedGroup};
use crate::structure::odd_quotient_witness;

pub const DEFAULT_MAX_ORDER: u128 = 10_000;
const DEFAULT_MEMO_CAPACITY: usize = 4_000_000;
/// Left-translation canonical forms cost `|G|^2`; skipped above this order.
const CANONICAL_LIMIT: usize = 64;

#[derive(Clone, Debug)]
pub struct SearchConfig {
    /// exact rationals in `(0, 1)`
    pub grid: Vec<BigRational>,
    pub max_len: usize,
    /// restrict the first step to conjugacy-class representatives
    pub first_step_classes: bool,
    /// worker threads for the root ply; `None` uses the global pool
    pub threads: Option<usize>,
    pub max_order: u128,
    pub memo_capacity: usize,
}

impl SearchConfig {
    pub fn new(grid: Vec<BigRational>, max_len: usize) -> Result<Self> {
        let cfg = SearchConfig {
            grid,
            max_len,
            first_step_classes: true,
            threads: None,
            max_order: DEFAULT_MAX_ORDER,
            memo_capacity: DEFAULT_MEMO_CAPACITY,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    /// Comma-separated rationals such as `"1/2,1/3,2/3"`.
    pub fn parse_grid(s: &str) -> Result<Vec<BigRational>> {
        s.split(',')
            .filter(|t| !t.trim().is_empty())
            .map(|t| match Probability::parse(t)? {
                Probability::Exact(r) => Ok(r),
                Probability::Decimal(_) => {
                    Err(MixError::InvalidProbability(format!("grid values must be rationals: {t}")))
                }
            })
            .collect()
    }

    /// Every `a/b` in `(0, 1)` with `b <= max_den`, ascending.
    pub fn denominators_up_to(max_den: i64) -> Vec<BigRational> {
        let mut out: Vec<BigRational> =
            (2..=max_den).flat_map(|b| (1..b).map(move |a| BigRational::new(a.into(), b.into()))).collect();
        out.sort();
        out.dedup();
        out
    }

    fn validate(&self) -> Result<()> {
        if self.grid.is_empty() {
            return Err(MixError::InvalidParameter("the probability grid is empty".into()));
        }
        for p in &self.grid {
            if !p.is_positive() || *p >= BigRational::one() {
                return Err(MixError::InvalidProbability(format!("grid value {p} is not in (0, 1)")));
            }
        }
        Ok(())
    }

    pub fn grid_strings(&self) -> Vec<String> {
        self.grid.iter().map(|p| p.to_string()).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Found,
    Exhausted,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    pub nodes: u64,
    pub support_prunes: u64,
    pub mass_prunes: u64,
    pub memo_hits: u64,
}

#[derive(Default)]
struct Counters {
    nodes: AtomicU64,
    support: AtomicU64,
    mass: AtomicU64,
    memo: AtomicU64,
}

impl Counters {
    fn snapshot(&self) -> SearchStats {
        SearchStats {
            nodes: self.nodes.load(Ordering::Relaxed),
            support_prunes: self.support.load(Ordering::Relaxed),
            mass_prunes: self.mass.load(Ordering::Relaxed),
            memo_hits: self.memo.load(Ordering::Relaxed),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SearchResult {
    pub group: String,
    pub order: u128,
    pub grid: Vec<String>,
    pub max_len: usize,
    pub outcome: Outcome,
    /// length of the sequence found, the least one on the grid
    pub minimal_length: Option<usize>,
    pub sequence: Option<Vec<MixingStep>>,
    pub lengths_tried: Vec<usize>,
    pub stats: SearchStats,
}

impl SearchResult {
    pub fn to_json(&self, group: &FiniteGroup) -> Value {
        let steps = self.sequence.as_ref().map(|s| {
            s.iter().map(|st| json!({ "g": group.element_to_json(&st.g), "p": st.p.to_string() })).collect::<Vec<_>>()
        });
        json!({
            "group": self.group,
            "order": self.order.to_string(),
            "grid": self.grid,
            "max_len": self.max_len,
            "outcome": self.outcome,
            "minimal_length": self.minimal_length,
            "steps": steps,
            "lengths_tried": self.lengths_tried,
            "stats": self.stats,
        })
    }
}

/// Shared memo: canonical state and step-order floor to the largest number
/// of remaining steps known to fail.
type Key = (Vec<u128>, u128, u32);

#[cfg(feature = "parallel")]
type Store = dashmap::DashMap<Key, u32>;
#[cfg(not(feature = "parallel"))]
type Store = Mutex<HashMap<Key, u32>>;

struct Memo {
    store: Store,
    capacity: usize,
}

impl Memo {
    fn new(capacity: usize) -> Self {
        Memo { store: Store::default(), capacity }
    }

    #[cfg(feature = "parallel")]
    fn failed_at_least(&self, key: &Key, r: u32) -> bool {
        self.store.get(key).is_some_and(|v| *v >= r)
    }

    #[cfg(feature = "parallel")]
    fn record(&self, key: Key, r: u32) {
        if let Some(mut v) = self.store.get_mut(&key) {
            *v = (*v).max(r);
        } else if self.store.len() < self.capacity {
            self.store.insert(key, r);
        }
    }

    #[cfg(not(feature = "parallel"))]
    fn failed_at_least(&self, key: &Key, r: u32) -> bool {
        self.store.lock().unwrap().get(key).is_some_and(|v| *v >= r)
    }

    #[cfg(not(feature = "parallel"))]
    fn record(&self, key: Key, r: u32) {
        let mut m = self.store.lock().unwrap();
        if let Some(v) = m.get_mut(&key) {
            *v = (*v).max(r);
        } else if m.len() < self.capacity {
            m.insert(key, r);
        }
    }
}

/// Law after some steps: `nums[x] / den`, reduced.
#[derive(Clone, Debug)]
struct State {
    nums: Vec<u128>,
    den: u128,
}

impl State {
    fn point(n: usize, at: u32) -> Self {
        let mut nums = vec![0; n];
        nums[at as usize] = 1;
        State { nums, den: 1 }
    }

    fn support(&self) -> usize {
        self.nums.iter().filter(|&&x| x > 0).count()
    }

    fn is_uniform(&self) -> bool {
        let n = self.nums.len() as u128;
        self.nums.iter().all(|&x| x.checked_mul(n) == Some(self.den))
    }
}

/// Grid value `a/b`.
#[derive(Clone, Copy, Debug)]
struct Ratio {
    a: u128,
    b: u128,
}

struct Searcher<'a> {
    ig: &'a IndexedGroup,
    grid: Vec<Ratio>,
    /// `(element, grid index)` choices, element-major
    pairs: Vec<(u32, usize)>,
    /// inverse of each element, for `x -> x g^-1`
    inv: Vec<u32>,
    abelian: bool,
    /// `min(max(p, 1 - p))` over the grid, as `(num, den)`
    spread: (u128, u128),
    memo: Memo,
    counters: Counters,
}

fn overflow() -> MixError {
    MixError::InvalidParameter(
        "search state exceeds 128-bit numerators; use smaller grid denominators or length".into(),
    )
}

impl<'a> Searcher<'a> {
    fn new(ig: &'a IndexedGroup, config: &SearchConfig) -> Result<Self> {
        let grid: Vec<Ratio> = config
            .grid
            .iter()
            .map(|p| {
                let a = p.numer().to_u128().ok_or_else(overflow)?;
                let b = p.denom().to_u128().ok_or_else(overflow)?;
                Ok(Ratio { a, b })
            })
            .collect::<Result<_>>()?;
        let id = ig.identity_idx();
        let pairs =
            (0..ig.len() as u32).filter(|&g| g != id).flat_map(|g| (0..grid.len()).map(move |i| (g, i))).collect();
        let inv = (0..ig.len() as u32).map(|g| ig.inv_idx(g)).collect();
        let gens = ig.generator_indices();
        let abelian = gens.iter().all(|&x| gens.iter().all(|&y| ig.mul_idx(x, y) == ig.mul_idx(y, x)));
        let spread = config
            .grid
            .iter()
            .map(|p| {
                let q = BigRational::one() - p;
                if *p > q {
                    p.clone()
                } else {
                    q
                }
            })
            .min()
            .expect("nonempty grid");
        let spread = (spread.numer().to_u128().ok_or_else(overflow)?, spread.denom().to_u128().ok_or_else(overflow)?);
        Ok(Searcher {
            ig,
            grid,
            pairs,
            inv,
            abelian,
            spread,
            memo: Memo::new(config.memo_capacity),
            counters: Counters::default(),
        })
    }

    /// `mu'(x) = (1 - p) mu(x) + p mu(x g^-1)`, reduced.
    fn step(&self, s: &State, g: u32, p: Ratio) -> Result<State> {
        let ginv = self.inv[g as usize];
        let n = s.nums.len();
        let mut nums = Vec::with_capacity(n);
        let keep = p.b - p.a;
        for x in 0..n as u32 {
            let y = self.ig.mul_idx(x, ginv) as usize;
            let v = keep
                .checked_mul(s.nums[x as usize])
                .and_then(|u| p.a.checked_mul(s.nums[y]).and_then(|w| u.checked_add(w)))
                .ok_or_else(overflow)?;
            nums.push(v);
        }
        let den = s.den.checked_mul(p.b).ok_or_else(overflow)?;
        let g = nums.iter().fold(den, |acc, &x| acc.gcd(&x));
        Ok(State { nums: nums.into_iter().map(|x| x / g).collect(), den: den / g })
    }

    /// Least left translate `x -> mu(h^-1 x)`.
    fn canonical(&self, s: &State) -> Vec<u128> {
        let n = s.nums.len();
        if n > CANONICAL_LIMIT {
            return s.nums.clone();
        }
        let mut best = s.nums.clone();
        for h in 0..n as u32 {
            let hinv = self.inv[h as usize];
            let t: Vec<u128> = (0..n as u32).map(|x| s.nums[self.ig.mul_idx(hinv, x) as usize]).collect();
            if t < best {
                best = t;
            }
        }
        best
    }

    /// Sound cut-offs for a state with `r` steps left.
    fn hopeless(&self, s: &State, r: u32) -> bool {
        let n = s.nums.len() as u128;
        let room = 1u128.checked_shl(r).unwrap_or(u128::MAX);
        if (s.support() as u128).saturating_mul(room) < n {
            self.counters.support.fetch_add(1, Ordering::Relaxed);
            return true;
        }
        // every step keeps at least max(p, 1-p) of the largest mass somewhere
        let max = *s.nums.iter().max().expect("nonempty");
        let (c, d) = self.spread;
        let lhs = c.checked_pow(r).and_then(|x| x.checked_mul(max)).and_then(|x| x.checked_mul(n));
        let rhs = d.checked_pow(r).and_then(|x| x.checked_mul(s.den));
        if let (Some(l), Some(rr)) = (lhs, rhs) {
            if l > rr {
                self.counters.mass.fetch_add(1, Ordering::Relaxed);
                return true;
            }
        }
        false
    }

    /// Whether `r` more steps, chosen from `pairs[floor..]` when abelian,
    /// can make `s` uniform; appends the choices to `path`.
    fn dfs(&self, s: &State, r: u32, floor: usize, path: &mut Vec<usize>) -> Result<bool> {
        self.counters.nodes.fetch_add(1, Ordering::Relaxed);
        if r == 0 {
            return Ok(s.is_uniform());
        }
        if self.hopeless(s, r) {
            return Ok(false);
        }
        let floor = if self.abelian { floor } else { 0 };
        let key = (self.canonical(s), s.den, floor as u32);
        if self.memo.failed_at_least(&key, r) {
            self.counters.memo.fetch_add(1, Ordering::Relaxed);
            return Ok(false);
        }
        for k in floor..self.pairs.len() {
            let (g, i) = self.pairs[k];
            let next = self.step(s, g, self.grid[i])?;
            path.push(k);
            if self.dfs(&next, r - 1, k, path)? {
                return Ok(true);
            }
            path.pop();
        }
        self.memo.record(key, r);
        Ok(false)
    }

    fn root_choices(&self, first_step_classes: bool) -> Vec<usize> {
        if !first_step_classes || self.abelian {
            return (0..self.pairs.len()).collect();
        }
        let reps: Vec<u32> = self.ig.conjugacy_classes().iter().map(|c| c[0]).collect();
        (0..self.pairs.len()).filter(|&k| reps.contains(&self.pairs[k].0)).collect()
    }

    /// A sequence of exactly `len` steps, if one exists on the grid.
    fn search_length(&self, len: usize, first_step_classes: bool) -> Result<Option<Vec<usize>>> {
        let start = State::point(self.ig.len(), self.ig.identity_idx());
        if len == 0 {
            return Ok(start.is_uniform().then(Vec::new));
        }
        let roots = self.root_choices(first_step_classes);
        let run = |k: usize| -> Result<Option<Vec<usize>>> {
            let (g, i) = self.pairs[k];
            let s = self.step(&start, g, self.grid[i])?;
            let mut path = vec![k];
            Ok(self.dfs(&s, len as u32 - 1, k, &mut path)?.then_some(path))
        };
        #[cfg(feature = "parallel")]
        {
            use rayon::prelude::*;
            let found = roots.par_iter().map(|&k| run(k)).find_map_first(|r| match r {
                Ok(None) => None,
                other => Some(other),
            });
            found.unwrap_or(Ok(None))
        }
        #[cfg(not(feature = "parallel"))]
        {
            for k in roots {
                if let Some(p) = run(k)? {
                    return Ok(Some(p));
                }
            }
            Ok(None)
        }
    }

    fn steps_of(&self, path: &[usize], config: &SearchConfig) -> Vec<MixingStep> {
        path.iter()
            .map(|&k| {
                let (g, i) = self.pairs[k];
                MixingStep::new(self.ig.element(g).clone(), Probability::Exact(config.grid[i].clone()))
            })
            .collect()
    }
}

fn with_threads<T: Send>(threads: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T> {
    #[cfg(feature = "parallel")]
    if let Some(t) = threads {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(t.max(1))
            .build()
            .map_err(|e| MixError::InvalidParameter(format!("thread pool: {e}")))?;
        return Ok(pool.install(f));
    }
    let _ = threads;
    Ok(f())
}

fn indexed(group: &FiniteGroup, config: &SearchConfig) -> Result<IndexedGroup> {
    config.validate()?;
    IndexedGroup::new(group.clone(), config.max_order)
}

fn search_indexed(ig: &IndexedGroup, config: &SearchConfig) -> Result<SearchResult> {
    let searcher = Searcher::new(ig, config)?;
    let order = ig.len() as u128;
    let start = entropy_bound(order) as usize;
    let mut tried = Vec::new();
    let mut found = None;
    for len in start..=config.max_len {
        tried.push(len);
        if let Some(path) = searcher.search_length(len, config.first_step_classes)? {
            found = Some(searcher.steps_of(&path, config));
            break;
        }
    }
    if let Some(steps) = &found {
        let report = verify_on(ig, steps, &VerifyOptions { mode: Some(Mode::Exact), ..Default::default() })?;
        if !report.uniform {
            return Err(MixError::VerificationFailed("search returned a sequence that does not mix".into()));
        }
    }
    Ok(SearchResult {
        group: ig.group().name(),
        order,
        grid: config.grid_strings(),
        max_len: config.max_len,
        outcome: if found.is_some() { Outcome::Found } else { Outcome::Exhausted },
        minimal_length: found.as_ref().map(|s| s.len()),
        sequence: found,
        lengths_tried: tried,
        stats: searcher.counters.snapshot(),
    })
}

/// Shortest grid-restricted mixing sequence of length at most
/// `config.max_len`, trying lengths upward from `ceil(log2 |G|)`.
pub fn search_min_length(group: &FiniteGroup, config: &SearchConfig) -> Result<SearchResult> {
    let ig = indexed(group, config)?;
    with_threads(config.threads, || search_indexed(&ig, config))?
}

/// How an exhaustion was established.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum Exhaustion {
    /// a prime divides `|G|` but no grid denominator, so no law built from
    /// the grid takes the value `1/|G|`
    PrimeSupport { prime: u64 },
    /// a quotient `G/N` admits no sequence; any sequence for `G` would project
    /// to one
    Quotient { quotient_order: u128, normal_order: u128, stats: SearchStats },
    /// depth-first search over all sequences up to the length limit
    Direct { stats: SearchStats },
}

#[derive(Clone, Debug, Serialize)]
pub struct NoMixingCertificate {
    pub group: String,
    pub order: u128,
    pub grid: Vec<String>,
    pub max_len: usize,
    pub exhausted: bool,
    /// how exhaustion was shown, when it was
    pub method: Option<Exhaustion>,
    /// length of a sequence found instead
    pub found_length: Option<usize>,
    /// `|G/U(G)|` when an odd quotient exists
    pub odd_quotient_order: Option<u128>,
}

impl NoMixingCertificate {
    pub fn nodes(&self) -> u64 {
        match &self.method {
            Some(Exhaustion::Quotient { stats, .. }) | Some(Exhaustion::Direct { stats }) => stats.nodes,
            _ => 0,
        }
    }
}

fn small_prime_factors(mut n: u128) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2u128;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p as u64);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n as u64);
    }
    out
}

fn exhaust(ig: &IndexedGroup, config: &SearchConfig) -> Result<(Option<Exhaustion>, Option<usize>)> {
    let order = ig.len() as u128;
    let dens: Vec<BigInt> = config.grid.iter().map(|p| p.denom().clone()).collect();
    if let Some(&prime) = small_prime_factors(order).iter().find(|&&q| dens.iter().all(|d| !(d % q).is_zero())) {
        return Ok((Some(Exhaustion::PrimeSupport { prime }), None));
    }
    // proper quotients by normal closures of single elements, smallest first
    let mut normals: Vec<Vec<u32>> = Vec::new();
    for x in 0..ig.len() as u32 {
        if x == ig.identity_idx() {
            continue;
        }
        let n = ig.normal_closure_idx(&[x]);
        if n.len() < ig.len() && !normals.contains(&n) {
            normals.push(n);
        }
    }
    normals.sort_by_key(|n| std::cmp::Reverse(n.len()));
    for n in normals {
        let q = ig.quotient_idx(&n)?;
        let qg = IndexedGroup::new(FiniteGroup::Cayley(q.table), u128::MAX)?;
        let r = search_indexed(&qg, config)?;
        if r.outcome == Outcome::Exhausted {
            return Ok((
                Some(Exhaustion::Quotient {
                    quotient_order: qg.len() as u128,
                    normal_order: n.len() as u128,
                    stats: r.stats,
                }),
                None,
            ));
        }
    }
    let r = search_indexed(ig, config)?;
    Ok(match r.outcome {
        Outcome::Exhausted => (Some(Exhaustion::Direct { stats: r.stats }), None),
        Outcome::Found => (None, r.minimal_length),
    })
}

/// Certifies that no grid-restricted sequence of length at most
/// `config.max_len` mixes `G`, and cross-checks against the odd-quotient
/// obstruction: a found sequence for a group with an odd quotient is an
/// internal error.
pub fn certify_no_mixing(group: &FiniteGroup, config: &SearchConfig) -> Result<NoMixingCertificate> {
    let ig = indexed(group, config)?;
    let (method, found_length) = with_threads(config.threads, || exhaust(&ig, config))??;
    let odd = odd_quotient_witness(group, config.max_order)?.map(|w| w.order() as u128);
    if odd.is_some() && found_length.is_some() {
        return Err(MixError::VerificationFailed(format!(
            "search mixed {} although it has an odd quotient",
            group.name()
        )));
    }
    Ok(NoMixingCertificate {
        group: group.name(),
        order: ig.len() as u128,
        grid: config.grid_strings(),
        max_len: config.max_len,
        exhausted: method.is_some(),
        method,
        found_length,
        odd_quotient_order: odd,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::catalog;

    fn grid(s: &str) -> Vec<BigRational> {
        SearchConfig::parse_grid(s).unwrap()
    }

    fn cfg(s: &str, l: usize) -> SearchConfig {
        SearchConfig::new(grid(s), l).unwrap()
    }

    #[test]
    fn minimal_lengths() {
        let r = search_min_length(&FiniteGroup::cyclic(2), &cfg("1/2", 4)).unwrap();
        assert_eq!(r.minimal_length, Some(1));
        let r = search_min_length(&FiniteGroup::cyclic(4), &cfg("1/2", 4)).unwrap();
        assert_eq!(r.minimal_length, Some(2));
        let klein = FiniteGroup::product(vec![FiniteGroup::cyclic(2), FiniteGroup::cyclic(2)]);
        assert_eq!(search_min_length(&klein, &cfg("1/2", 4)).unwrap().minimal_length, Some(2));
        let r = search_min_length(&FiniteGroup::symmetric(3), &cfg("1/2,1/3,2/3", 5)).unwrap();
        assert_eq!(r.minimal_length, Some(3));
        assert_eq!(r.lengths_tried, vec![3]);
    }

    #[test]
    fn two_groups_at_the_bound() {
        for g in [FiniteGroup::cyclic(8), catalog::quaternion8(), FiniteGroup::dihedral(4)] {
            let r = search_min_length(&g, &cfg("1/2", 3)).unwrap();
            assert_eq!(r.minimal_length, Some(3), "{}", g.name());
        }
    }

    #[test]
    fn exhaustion() {
        let r = search_min_length(&FiniteGroup::cyclic(3), &cfg("1/2", 8)).unwrap();
        assert_eq!(r.outcome, Outcome::Exhausted);
        let r = search_min_length(&FiniteGroup::cyclic(2), &cfg("1/2", 0)).unwrap();
        assert_eq!(r.outcome, Outcome::Exhausted);
        assert!(r.lengths_tried.is_empty());
    }

    #[test]
    fn certificates() {
        let c = certify_no_mixing(&FiniteGroup::cyclic(3), &cfg("1/2", 8)).unwrap();
        assert!(c.exhausted);
        assert_eq!(c.method, Some(Exhaustion::PrimeSupport { prime: 3 }));
        assert_eq!(c.odd_quotient_order, Some(3));
        let c = certify_no_mixing(&FiniteGroup::alternating(4), &cfg("1/2,1/3,2/3", 5)).unwrap();
        assert!(c.exhausted);
        assert!(matches!(c.method, Some(Exhaustion::Quotient { quotient_order: 3, .. })));
        let c = certify_no_mixing(&FiniteGroup::cyclic(3), &cfg("1/3,2/3,1/2", 6)).unwrap();
        assert!(matches!(c.method, Some(Exhaustion::Direct { .. })));
        let c = certify_no_mixing(&FiniteGroup::symmetric(3), &cfg("1/2,1/3,2/3", 4)).unwrap();
        assert!(!c.exhausted);
        assert_eq!(c.found_length, Some(3));
    }

    #[test]
    fn grid_validation() {
        assert!(SearchConfig::new(vec![], 3).is_err());
        assert!(SearchConfig::new(grid("1"), 3).is_err());
        assert!(SearchConfig::parse_grid("0.5").is_err());
        assert_eq!(SearchConfig::denominators_up_to(4).len(), 5);
    }

    #[test]
    fn monotone_in_grid_and_length() {
        let g = FiniteGroup::symmetric(3);
        let len = |s: &str, l: usize| search_min_length(&g, &cfg(s, l)).unwrap().minimal_length.unwrap_or(usize::MAX);
        let small = len("1/2", 4);
        let larger = len("1/2,2/3", 4);
        let longest = len("1/2,2/3", 6);
        assert!(larger <= small && longest <= larger);
        assert_eq!(larger, 3);
    }
}
