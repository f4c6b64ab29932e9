use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use mixable::document;
use mixable::field::Family;
use mixable::group::catalog;
use mixable::FiniteGroup;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

/// A loaded input with its digest, echoed in every command report.
pub struct Input {
    pub label: String,
    pub digest: String,
    pub value: Value,
}

impl Input {
    pub fn echo(&self) -> Value {
        json!({ "input": self.label, "sha256": self.digest })
    }
}

fn digest(bytes: &[u8]) -> String {
    format!("{:x}", Sha256::digest(bytes))
}

/// A JSON file, or inline JSON when the argument starts with `{`.
pub fn load_json(arg: &str) -> Result<Input> {
    let text = if arg.trim_start().starts_with('{') {
        arg.to_string()
    } else {
        std::fs::read_to_string(arg).with_context(|| format!("cannot read {arg}"))?
    };
    let value = document::parse(&text).with_context(|| format!("{arg} is not valid JSON"))?;
    Ok(Input { label: arg.to_string(), digest: digest(text.as_bytes()), value })
}

/// Shorthands: `cyclic:8`, `dihedral:6`, `sym:4`, `alt:5`, `signed:4`,
/// `coxeter-d:4`, `<family>:<d>:<q>` for `gl|sl|pgl|psl`, and the named
/// tables `klein4`, `quaternion8`, `order21`, `affine-f5`, `dicyclic12`.
pub fn shorthand(s: &str) -> Result<FiniteGroup> {
    let parts: Vec<&str> = s.split(':').collect();
    let num = |i: usize| -> Result<u64> {
        parts
            .get(i)
            .ok_or_else(|| anyhow!("{s}: missing parameter"))?
            .parse()
            .with_context(|| format!("{s}: bad number"))
    };
    Ok(match parts[0] {
        "cyclic" | "z" => FiniteGroup::cyclic(num(1)?),
        "dihedral" | "d" => FiniteGroup::dihedral(num(1)?),
        "sym" | "s" => FiniteGroup::symmetric(num(1)? as usize),
        "alt" | "a" => FiniteGroup::alternating(num(1)? as usize),
        "signed" | "coxeter-b" => FiniteGroup::signed(num(1)? as usize, false),
        "coxeter-d" => FiniteGroup::signed(num(1)? as usize, true),
        "gl" | "sl" | "pgl" | "psl" => {
            let q = num(2)?;
            let (p, e) = mixable::field::prime_power(q).ok_or_else(|| anyhow!("{q} is not a prime power"))?;
            FiniteGroup::matrix(Family::parse(parts[0])?, num(1)? as usize, p as u32, e)?
        }
        "klein4" => catalog::klein_four(),
        "quaternion8" => catalog::quaternion8(),
        "order21" => catalog::order21(),
        "affine-f5" => catalog::affine_f5(),
        "dicyclic12" => catalog::dicyclic12(),
        other => bail!("unknown group shorthand {other}"),
    })
}

/// A group file, inline JSON spec, or shorthand.
pub fn load_group(arg: &str) -> Result<(FiniteGroup, Input)> {
    if arg.trim_start().starts_with('{') || Path::new(arg).exists() {
        let input = load_json(arg)?;
        let group = document::group_from_json(&input.value)?;
        return Ok((group, input));
    }
    let group = shorthand(arg)?;
    let input = Input { label: arg.to_string(), digest: digest(arg.as_bytes()), value: group.spec_json() };
    Ok((group, input))
}

/// `a..b`, `a..=b` (both inclusive) or a single value.
pub fn parse_range(s: &str) -> Result<(u64, u64)> {
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (a, b.trim_start_matches('=')),
        None => (s, s),
    };
    let a: u64 = a.trim().parse().with_context(|| format!("bad range {s}"))?;
    let b: u64 = b.trim().parse().with_context(|| format!("bad range {s}"))?;
    if a > b {
        bail!("empty range {s}");
    }
    Ok((a, b))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shorthands() {
        assert_eq!(shorthand("cyclic:8").unwrap(), FiniteGroup::cyclic(8));
        assert_eq!(shorthand("psl:2:4").unwrap().order(), 60);
        assert!(shorthand("nope:3").is_err());
        assert!(shorthand("sym").is_err());
    }

    #[test]
    fn ranges() {
        assert_eq!(parse_range("2..8").unwrap(), (2, 8));
        assert_eq!(parse_range("2..=8").unwrap(), (2, 8));
        assert_eq!(parse_range("5").unwrap(), (5, 5));
        assert!(parse_range("8..2").is_err());
    }
}
