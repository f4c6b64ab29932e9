use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{MixError, Result};

/// A group given by its full multiplication table; index 0 is the identity.
#[derive(Clone, Debug)]
pub struct CayleyGroup {
    order: usize,
    table: Arc<Vec<u32>>,
    inverses: Arc<Vec<u32>>,
}

impl PartialEq for CayleyGroup {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.table, &other.table) || self.table == other.table
    }
}

impl CayleyGroup {
    /// Validates a row-major table: identity at index 0, Latin square,
    /// associativity (exhaustive for small orders, sampled above).
    pub fn new(order: usize, table: Vec<u32>) -> Result<Self> {
        if order == 0 {
            return Err(MixError::InvalidGroup("Cayley table must have positive order".into()));
        }
        if table.len() != order * order {
            return Err(MixError::InvalidGroup(format!("table must have {} entries", order * order)));
        }
        if table.iter().any(|&x| x as usize >= order) {
            return Err(MixError::InvalidGroup("table entry out of range".into()));
        }
        for i in 0..order {
            if table[i] as usize != i || table[i * order] as usize != i {
                return Err(MixError::InvalidGroup("index 0 must be the identity".into()));
            }
        }
        let mut seen = vec![0usize; order];
        for r in 0..order {
            for c in 0..order {
                let x = table[r * order + c] as usize;
                if seen[x] == r + 1 {
                    return Err(MixError::InvalidGroup(format!("row {r} repeats element {x}")));
                }
                seen[x] = r + 1;
            }
        }
        let mut seen = vec![0usize; order];
        for c in 0..order {
            for r in 0..order {
                let x = table[r * order + c] as usize;
                if seen[x] == c + 1 {
                    return Err(MixError::InvalidGroup(format!("column {c} repeats element {x}")));
                }
                seen[x] = c + 1;
            }
        }
        let mul = |a: usize, b: usize| table[a * order + b] as usize;
        let assoc = |a: usize, b: usize, c: usize| mul(mul(a, b), c) == mul(a, mul(b, c));
        if (order as u64).pow(3) <= 20_000_000 {
            for a in 0..order {
                for b in 0..order {
                    let ab = mul(a, b);
                    for c in 0..order {
                        if mul(ab, c) != mul(a, mul(b, c)) {
                            return Err(MixError::InvalidGroup(format!("not associative at ({a}, {b}, {c})")));
                        }
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
            for _ in 0..1_000_000 {
                let (a, b, c) = (rng.gen_range(0..order), rng.gen_range(0..order), rng.gen_range(0..order));
                if !assoc(a, b, c) {
                    return Err(MixError::InvalidGroup(format!("not associative at ({a}, {b}, {c})")));
                }
            }
        }
        let mut inverses = vec![0u32; order];
        for a in 0..order {
            let row = &table[a * order..(a + 1) * order];
            inverses[a] = row.iter().position(|&x| x == 0).expect("Latin square row contains identity") as u32;
        }
        Ok(CayleyGroup { order, table: Arc::new(table), inverses: Arc::new(inverses) })
    }

    /// Builds and validates the table of a multiplication closure over `0..order`.
    pub fn from_fn(order: usize, f: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let mut table = Vec::with_capacity(order * order);
        for a in 0..order {
            for b in 0..order {
                table.push(f(a, b) as u32);
            }
        }
        Self::new(order, table)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.table[a as usize * self.order + b as usize]
    }

    #[inline]
    pub fn inverse(&self, a: u32) -> u32 {
        self.inverses[a as usize]
    }

    pub fn rows(&self) -> Vec<Vec<u32>> {
        self.table.chunks(self.order).map(|r| r.to_vec()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_tables() {
        assert!(CayleyGroup::new(2, vec![0, 1, 1, 1]).is_err());
        assert!(CayleyGroup::new(2, vec![1, 0, 0, 1]).is_err());
        // Latin square that is not associative (a loop of order 5)
        let t = vec![0, 1, 2, 3, 4, 1, 0, 3, 4, 2, 2, 4, 0, 1, 3, 3, 2, 4, 0, 1, 4, 3, 1, 2, 0];
        assert!(CayleyGroup::new(5, t).is_err());
    }

    #[test]
    fn cyclic_table() {
        let g = CayleyGroup::from_fn(6, |a, b| (a + b) % 6).unwrap();
        assert_eq!(g.inverse(2), 4);
        assert_eq!(g.mul(5, 4), 3);
    }
}
