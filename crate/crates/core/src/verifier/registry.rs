//! Name-based dispatch used by sweeps and the command line.

use super::congruence::TriangleFamily;
use super::identities::Assignment;
use super::{
    check_ank_power, check_bnk_power, check_chu_vandermonde, check_identity_one, check_n123, check_new_identity,
    check_one_suff, check_q1_congruence, check_recover, check_s_r_multi, check_sbar_r_multi,
    check_zeilberger_recurrences, s_r_single, x_r_sum_check, CheckResult, Params,
};
use crate::error::{Error, Result};

/// A named check. The pseudo-parameter `ns` stands for `m, n1, ..., nm`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CheckDef {
    pub id: &'static str,
    pub params: &'static [&'static str],
    pub about: &'static str,
}

impl CheckDef {
    pub fn is_multi_index(&self) -> bool {
        self.params.contains(&"ns")
    }

    /// Whether `name` is a parameter of this check.
    pub fn accepts(&self, name: &str) -> bool {
        if self.params.contains(&name) {
            return true;
        }
        self.is_multi_index()
            && (name == "m" || name.strip_prefix('n').is_some_and(|i| i.parse::<u32>().is_ok_and(|i| i >= 1)))
    }
}

pub const CHECKS: &[CheckDef] = &[
    CheckDef { id: "recover", params: &["n"], about: "cubic sum of B(n,k) against both closed forms" },
    CheckDef {
        id: "identity-one",
        params: &["n", "m", "assign"],
        about: "sum of B(n,k)^2 B(m,k); assign 0 takes r = m, 1 takes r = n",
    },
    CheckDef { id: "new-identity", params: &["m", "n"], about: "binomial identity for the mixed cubic sum" },
    CheckDef { id: "n123", params: &["n1", "n2", "n3"], about: "three-index central binomial identity" },
    CheckDef { id: "zeilberger", params: &["n", "m_max"], about: "first-order recurrences of S_n(m) and T_n(m)" },
    CheckDef { id: "one-suff", params: &["n", "m"], about: "sufficient condition for the r = n assignment" },
    CheckDef { id: "s-r-single", params: &["a", "n", "r", "j"], about: "half-range [2k][k]^(2r) sum" },
    CheckDef { id: "s-r-multi", params: &["a", "ns", "r", "j"], about: "even cyclic multi-index ratio" },
    CheckDef { id: "bnk-power", params: &["n", "a", "r", "j"], about: "odd powers of B(n,k;q)" },
    CheckDef { id: "x-r-sum", params: &["a", "n", "r", "s"], about: "X_r(a,n,s) divisibility and recurrences" },
    CheckDef { id: "sbar-r-multi", params: &["a", "ns", "r", "j"], about: "odd cyclic multi-index ratio" },
    CheckDef { id: "ank-power", params: &["n", "a", "r", "j"], about: "odd powers of A(n,k;q)" },
    CheckDef { id: "q1-cnk", params: &["n", "a", "r"], about: "odd powers of C(n,k) modulo binom(n-1,a)" },
    CheckDef { id: "q1-bnk", params: &["n", "a", "r"], about: "odd powers of B(n,k) modulo binom(2n-1,n-a)" },
    CheckDef { id: "q1-ank", params: &["n", "a", "r"], about: "odd powers of A(n,k) modulo binom(2n,n-a)" },
    CheckDef { id: "chu-vandermonde", params: &["n1", "n2", "k"], about: "q-Chu-Vandermonde splittings" },
];

pub fn find_check(id: &str) -> Result<&'static CheckDef> {
    CHECKS.iter().find(|c| c.id == id).ok_or_else(|| Error::UnknownCheckId(id.to_string()))
}

fn validate(def: &CheckDef, params: &Params) -> Result<()> {
    if let Some((name, _)) = params.iter().find(|(name, _)| !def.accepts(name)) {
        return Err(Error::UnexpectedParam(format!("{name} for {}", def.id)));
    }
    if def.is_multi_index() {
        let m = params.require("m")?;
        for (name, _) in params.iter() {
            if let Some(i) = name.strip_prefix('n').and_then(|i| i.parse::<i64>().ok()) {
                if i > m {
                    return Err(Error::UnexpectedParam(format!("{name} with m = {m}")));
                }
            }
        }
    }
    for name in def.params.iter().filter(|&&p| p != "ns") {
        params.require(name)?;
    }
    Ok(())
}

/// Runs `id` on `params`, rejecting missing and unknown parameter names.
pub fn run_check(id: &str, params: &Params) -> Result<CheckResult> {
    let def = find_check(id)?;
    validate(def, params)?;
    let p = |name: &str| params.require(name);
    match def.id {
        "recover" => check_recover(p("n")?),
        "identity-one" => {
            let code = p("assign")?;
            let assignment = Assignment::from_code(code)
                .ok_or_else(|| Error::Domain(format!("assign must be 0 (r = m) or 1 (r = n), got {code}")))?;
            check_identity_one(p("n")?, p("m")?, assignment)
        }
        "new-identity" => check_new_identity(p("m")?, p("n")?),
        "n123" => check_n123(p("n1")?, p("n2")?, p("n3")?),
        "zeilberger" => check_zeilberger_recurrences(p("n")?, p("m_max")?),
        "one-suff" => check_one_suff(p("n")?, p("m")?),
        "s-r-single" => s_r_single(p("a")?, p("n")?, p("r")?, p("j")?).map(|(_, res)| res),
        "s-r-multi" => check_s_r_multi(params),
        "bnk-power" => check_bnk_power(p("n")?, p("a")?, p("r")?, p("j")?),
        "x-r-sum" => x_r_sum_check(p("a")?, p("n")?, p("r")?, p("s")?),
        "sbar-r-multi" => check_sbar_r_multi(params),
        "ank-power" => check_ank_power(p("n")?, p("a")?, p("r")?, p("j")?),
        "q1-cnk" => check_q1_congruence(TriangleFamily::Cnk, p("n")?, p("a")?, p("r")?),
        "q1-bnk" => check_q1_congruence(TriangleFamily::Bnk, p("n")?, p("a")?, p("r")?),
        "q1-ank" => check_q1_congruence(TriangleFamily::Ank, p("n")?, p("a")?, p("r")?),
        "chu-vandermonde" => check_chu_vandermonde(p("n1")?, p("n2")?, p("k")?),
        other => unreachable!("registered check {other} has no dispatcher"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dispatch_and_errors() {
        let res = run_check("recover", &Params::new().with("n", 2)).unwrap();
        assert!(res.holds());
        assert!(matches!(run_check("nope", &Params::new()), Err(Error::UnknownCheckId(_))));
        assert!(matches!(run_check("recover", &Params::new()), Err(Error::MissingParam(_))));
        assert!(matches!(
            run_check("recover", &Params::new().with("n", 2).with("z", 1)),
            Err(Error::UnexpectedParam(_))
        ));
    }

    #[test]
    fn multi_index_params() {
        let p = Params::new().with("a", 0).with("m", 2).with("n1", 1).with("n2", 1).with("r", 0).with("j", 1);
        assert!(run_check("s-r-multi", &p).unwrap().holds());
        let extra = p.clone().with("n3", 4);
        assert!(matches!(run_check("s-r-multi", &extra), Err(Error::UnexpectedParam(_))));
        let short = Params::new().with("a", 0).with("m", 2).with("n1", 1).with("r", 0).with("j", 1);
        assert!(matches!(run_check("s-r-multi", &short), Err(Error::MissingParam(_))));
    }

    #[test]
    fn every_check_has_a_dispatcher() {
        let sample = |name: &str| match name {
            "n" | "n1" | "n2" | "n3" | "m_max" => 2,
            "m" => 1,
            _ => 0,
        };
        for def in CHECKS {
            let mut params = Params::new();
            for name in def.params {
                if *name == "ns" {
                    params.set("m", 1);
                    params.set("n1", 2);
                } else {
                    params.set(name, sample(name));
                }
            }
            if def.id == "q1-cnk" {
                params.set("a", 1);
            }
            run_check(def.id, &params).unwrap_or_else(|e| panic!("{}: {e}", def.id));
        }
    }
}
