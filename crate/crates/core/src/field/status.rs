use num_integer::Integer;
use serde::Serialize;

use super::prime_power;
use crate::error::{MixError, Result};

/// What the known implications between the four matrix families say for a
/// given `(q, d)`.
#[derive(Clone, Debug, Serialize)]
pub struct FamilyStatus {
    pub q: u64,
    pub d: u64,
    pub p: u64,
    pub e: u32,
    pub q_minus_1_power_of_2: bool,
    pub gcd_power_of_2: bool,
    pub index_power_of_2: bool,
    pub gl_mixable: Option<bool>,
    pub sl_mixable: Option<bool>,
    pub pgl_mixable: Option<bool>,
    pub psl_mixable: Option<bool>,
    pub constructive_psl2: bool,
    pub statements: Vec<String>,
}

fn pow2(n: u64) -> bool {
    n.is_power_of_two()
}

pub fn matrix_family_status(q: u64, d: u64) -> Result<FamilyStatus> {
    let (p, e) = prime_power(q).ok_or_else(|| MixError::InvalidField(format!("{q} is not a prime power")))?;
    if d == 0 {
        return Err(MixError::InvalidParameter("d must be at least 1".into()));
    }
    let g = (q - 1).gcd(&d);
    let a = pow2(q - 1);
    let b = pow2(g);
    let c = pow2((q - 1) / g);
    let mut st = FamilyStatus {
        q,
        d,
        p,
        e,
        q_minus_1_power_of_2: a,
        gcd_power_of_2: b,
        index_power_of_2: c,
        gl_mixable: None,
        sl_mixable: None,
        pgl_mixable: None,
        psl_mixable: None,
        constructive_psl2: p == 2 && d == 2,
        statements: Vec::new(),
    };
    let s = &mut st.statements;

    if d == 1 {
        // GL_1 = F_q^x, the others are trivial.
        st.sl_mixable = Some(true);
        st.psl_mixable = Some(true);
        st.pgl_mixable = Some(true);
        st.gl_mixable = Some(a);
        s.push(format!("SL_1, PSL_1 and PGL_1 over F_{q} are trivial"));
        s.push(format!("GL_1(F_{q}) is cyclic of order {}; mixable iff that order is a power of 2: {a}", q - 1));
        return Ok(st);
    }

    if a {
        st.gl_mixable = Some(true);
        st.sl_mixable = Some(true);
        st.pgl_mixable = Some(true);
        st.psl_mixable = Some(true);
        s.push(format!(
            "q-1 = {} is a power of 2: PSL_d, SL_d, PGL_d and GL_d over F_{q} are mixable for all d",
            q - 1
        ));
    } else {
        st.gl_mixable = Some(false);
        s.push(format!("q-1 = {} is not a power of 2: GL_{d}(F_{q}) is not mixable", q - 1));
    }
    if !b {
        st.pgl_mixable = Some(false);
        s.push(format!("gcd(q-1, d) = {g} is not a power of 2: PGL_{d}(F_{q}) is not mixable"));
    } else {
        s.push(format!(
            "gcd(q-1, d) = {g} is a power of 2: if PSL_{d}(F_{q}) is mixable then SL_{d}(F_{q}) and PGL_{d}(F_{q}) are mixable"
        ));
    }
    if c {
        s.push(format!(
            "(q-1)/gcd(q-1, d) = {} is a power of 2: PSL_{d}(F_{q}) is mixable whenever PSL_{}(F_{q}) is",
            (q - 1) / g,
            d - 1
        ));
    } else {
        s.push(format!(
            "(q-1)/gcd(q-1, d) = {} is not a power of 2: the inductive step from PSL_{} does not apply",
            (q - 1) / g,
            d - 1
        ));
    }
    s.push(format!("if SL_{d}(F_{q}) is mixable then PSL_{d}(F_{q}) is mixable"));
    if st.constructive_psl2 {
        st.psl_mixable = Some(true);
        st.sl_mixable = Some(true);
        st.pgl_mixable = Some(true);
        s.push(format!(
            "characteristic 2: PSL_2(F_{q}) = SL_2(F_{q}) = PGL_2(F_{q}) is mixable by an explicit construction"
        ));
    }
    Ok(st)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q5_d2_all_flags() {
        let s = matrix_family_status(5, 2).unwrap();
        assert!(s.q_minus_1_power_of_2 && s.gcd_power_of_2 && s.index_power_of_2);
        assert_eq!(s.gl_mixable, Some(true));
        assert_eq!(s.psl_mixable, Some(true));
    }

    #[test]
    fn q7_d3_gl_not_mixable() {
        let s = matrix_family_status(7, 3).unwrap();
        assert!(!s.q_minus_1_power_of_2);
        assert_eq!(s.gl_mixable, Some(false));
        assert_eq!(s.pgl_mixable, Some(false));
    }

    #[test]
    fn q4_d2_char2() {
        let s = matrix_family_status(4, 2).unwrap();
        // (4-1)/gcd(3,2) = 3
        assert!(!s.index_power_of_2);
        assert!(s.constructive_psl2);
        assert_eq!(s.psl_mixable, Some(true));
        assert_eq!(s.gl_mixable, Some(false));
    }

    #[test]
    fn rejects_non_prime_power() {
        assert!(matrix_family_status(6, 2).is_err());
    }
}
