//! Permutations stored as 0-based image arrays. Composition is left action:
//! `compose(f, g)[x] = f[g[x]]`.

use num_integer::Integer;

pub fn identity(n: usize) -> Vec<u32> {
    (0..n as u32).collect()
}

pub fn compose(f: &[u32], g: &[u32]) -> Vec<u32> {
    g.iter().map(|&x| f[x as usize]).collect()
}

pub fn inverse(f: &[u32]) -> Vec<u32> {
    let mut out = vec![0u32; f.len()];
    for (i, &x) in f.iter().enumerate() {
        out[x as usize] = i as u32;
    }
    out
}

pub fn is_bijection(f: &[u32]) -> bool {
    let mut seen = vec![false; f.len()];
    for &x in f {
        let x = x as usize;
        if x >= f.len() || seen[x] {
            return false;
        }
        seen[x] = true;
    }
    true
}

pub fn is_identity(f: &[u32]) -> bool {
    f.iter().enumerate().all(|(i, &x)| i as u32 == x)
}

/// Cycle lengths of `f`, fixed points included.
pub fn cycle_lengths(f: &[u32]) -> Vec<usize> {
    let mut seen = vec![false; f.len()];
    let mut out = Vec::new();
    for start in 0..f.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = f[x] as usize;
            len += 1;
        }
        out.push(len);
    }
    out
}

pub fn is_even(f: &[u32]) -> bool {
    cycle_lengths(f).iter().filter(|&&l| l % 2 == 0).count() % 2 == 0
}

pub fn order(f: &[u32]) -> u64 {
    cycle_lengths(f).into_iter().fold(1u64, |acc, l| acc.lcm(&(l as u64)))
}

/// Transposition of the 0-based points `a` and `b`.
pub fn transposition(n: usize, a: usize, b: usize) -> Vec<u32> {
    let mut f = identity(n);
    f.swap(a, b);
    f
}

/// Builds a permutation from disjoint 0-based cycles.
pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Vec<u32> {
    let mut f = identity(n);
    for cycle in cycles {
        for (i, &x) in cycle.iter().enumerate() {
            f[x] = cycle[(i + 1) % cycle.len()] as u32;
        }
    }
    f
}

/// Conjugates `f` (on `m` points) into `n` points by `x -> x + offset`.
pub fn shift(f: &[u32], offset: usize, n: usize) -> Vec<u32> {
    let mut out = identity(n);
    for (i, &x) in f.iter().enumerate() {
        out[i + offset] = x + offset as u32;
    }
    out
}

/// Advances to the next permutation in lexicographic order.
pub fn next_lex(f: &mut [u32]) -> bool {
    let n = f.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && f[i - 1] >= f[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while f[j] <= f[i - 1] {
        j -= 1;
    }
    f.swap(i - 1, j);
    f[i..].reverse();
    true
}

/// Human-readable disjoint-cycle notation with 1-based points.
pub fn cycle_notation(f: &[u32]) -> String {
    let mut seen = vec![false; f.len()];
    let mut out = String::new();
    for start in 0..f.len() {
        if seen[start] || f[start] as usize == start {
            seen[start] = true;
            continue;
        }
        out.push('(');
        let mut x = start;
        let mut first = true;
        while !seen[x] {
            seen[x] = true;
            if !first {
                out.push(' ');
            }
            out.push_str(&(x + 1).to_string());
            first = false;
            x = f[x] as usize;
        }
        out.push(')');
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn left_action_composition() {
        // (1 2)(2 3) maps 1->2, 2->3, 3->1
        let a = transposition(3, 0, 1);
        let b = transposition(3, 1, 2);
        assert_eq!(compose(&a, &b), vec![1, 2, 0]);
    }

    #[test]
    fn lex_enumeration_counts() {
        let mut f = identity(4);
        let mut count = 1;
        while next_lex(&mut f) {
            count += 1;
        }
        assert_eq!(count, 24);
    }

    #[test]
    fn parity_and_order() {
        let c = from_cycles(5, &[&[0, 1, 2], &[3, 4]]);
        assert!(!is_even(&c));
        assert_eq!(order(&c), 6);
        assert_eq!(cycle_notation(&c), "(1 2 3)(4 5)");
    }
}
