//! Closed-form Ramsey values and bounds in exact arithmetic.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::SimpleGraph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundsError {
    #[error("{0}")]
    Domain(String),
}

fn domain<T>(msg: impl Into<String>) -> Result<T, BoundsError> {
    Err(BoundsError::Domain(msg.into()))
}

fn ratio(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

/// `(n-1)(m-1) + t`.
pub fn goodness_value(n: u64, m: u64, t: u64) -> Result<u64, BoundsError> {
    if n == 0 || m == 0 || t == 0 {
        return domain("n, m and t must be positive");
    }
    Ok((n - 1) * (m - 1) + t)
}

/// `floor((2 ell + 1)^((m-1)/2))`, computed as the integer square root of
/// `(2 ell + 1)^(m-1)`.
pub fn upper_km(ell: u64, m: u32) -> Result<BigUint, BoundsError> {
    if m < 3 {
        return domain("m must be at least 3");
    }
    if ell == 0 {
        return domain("ell must be positive");
    }
    let base = BigUint::from(2 * ell + 1);
    Ok(base.pow(m - 1).sqrt())
}

/// `upper_km(ell, m) + m(t - 1)`.
pub fn upper_tkm(ell: u64, m: u32, t: u64) -> Result<BigUint, BoundsError> {
    if t == 0 {
        return domain("t must be positive");
    }
    Ok(upper_km(ell, m)? + BigUint::from(u64::from(m) * (t - 1)))
}

/// `2 ell + 1`.
pub fn triangle_bound(ell: u64) -> Result<u64, BoundsError> {
    if ell == 0 {
        return domain("ell must be positive");
    }
    Ok(2 * ell + 1)
}

/// `(1 - 1/r) n^2 / 2`.
pub fn turan_bound(n: u64, r: u64) -> Result<BigRational, BoundsError> {
    if r == 0 {
        return domain("r must be positive");
    }
    let n = BigInt::from(n);
    Ok(BigRational::new(
        BigInt::from(r - 1) * &n * &n,
        BigInt::from(2 * r),
    ))
}

/// `n + 2` for complete `G`, `n + 1` otherwise.
pub fn chvatal_harary_value(g: &SimpleGraph) -> Result<u64, BoundsError> {
    if g.has_isolated_vertex() {
        return domain("graph has an isolated vertex");
    }
    let n = g.vertex_count() as u64;
    Ok(if g.is_complete() { n + 2 } else { n + 1 })
}

/// `c = 1/(t+2)` for `t <= 2`, `1/(4t-5)` otherwise, and
/// `n_min = 3 * binom(1/c, 2)`.
pub fn mequals2_budget(t: u64) -> Result<(BigRational, u64), BoundsError> {
    if t == 0 {
        return domain("t must be positive");
    }
    let inv = if t <= 2 { t + 2 } else { 4 * t - 5 };
    Ok((
        BigRational::new(BigInt::one(), BigInt::from(inv)),
        3 * inv * (inv - 1) / 2,
    ))
}

/// `q = (m-1) t (mt - 1) + 2t`.
pub fn main_q(m: u64, t: u64) -> Result<u64, BoundsError> {
    if m < 2 || t == 0 {
        return domain("need m >= 2 and t >= 1");
    }
    Ok((m - 1) * t * (m * t - 1) + 2 * t)
}

/// `(c, q)` with `c = min(epsilon/t, 1/(4t), 1/(3(2q - 3)))`.
pub fn main_budget(m: u64, t: u64, epsilon: &BigRational) -> Result<(BigRational, u64), BoundsError> {
    if !epsilon.is_positive() {
        return domain("epsilon must be positive");
    }
    let q = main_q(m, t)?;
    let t_big = BigRational::from_integer(BigInt::from(t));
    let candidates = [
        epsilon / &t_big,
        ratio(1, 4 * t as i64),
        ratio(1, 3 * (2 * q as i64 - 3)),
    ];
    let c = candidates.into_iter().min().expect("three candidates");
    Ok((c, q))
}

/// `(n-1)(m-1) + 1`.
pub fn chvatal_tree_value(n: u64, m: u64) -> Result<u64, BoundsError> {
    if n == 0 || m == 0 {
        return domain("n and m must be positive");
    }
    Ok((n - 1) * (m - 1) + 1)
}

/// Parses `p/q` or an integer into an exact rational.
pub fn parse_rational(s: &str) -> Result<BigRational, BoundsError> {
    let parse = |x: &str| {
        x.trim()
            .parse::<BigInt>()
            .map_err(|_| BoundsError::Domain(format!("not a rational: {s}")))
    };
    let r = match s.split_once('/') {
        Some((p, q)) => {
            let q = parse(q)?;
            if q.is_zero() {
                return domain("zero denominator");
            }
            BigRational::new(parse(p)?, q)
        }
        None => BigRational::from_integer(parse(s)?),
    };
    Ok(r)
}

pub fn format_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// One named value with its inputs and which hypotheses hold for them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub name: String,
    pub inputs: BTreeMap<String, String>,
    /// Exact integer or `p/q`.
    pub value: String,
    pub applicability: BTreeMap<String, bool>,
}

impl BoundReport {
    fn new(name: &str, inputs: &[(&str, String)], value: String, flags: &[(&str, bool)]) -> Self {
        Self {
            name: name.to_string(),
            inputs: inputs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect(),
            value,
            applicability: flags.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
        }
    }

    /// Recomputes the value from the stored inputs.
    pub fn recompute(&self) -> Result<String, BoundsError> {
        let int = |k: &str| -> Result<u64, BoundsError> {
            self.inputs
                .get(k)
                .and_then(|v| v.parse().ok())
                .ok_or_else(|| BoundsError::Domain(format!("missing input {k}")))
        };
        Ok(match self.name.as_str() {
            "goodness_value" => goodness_value(int("n")?, int("m")?, int("t")?)?.to_string(),
            "chvatal_tree_value" => chvatal_tree_value(int("n")?, int("m")?)?.to_string(),
            "upper_km" => upper_km(int("ell")?, int("m")? as u32)?.to_string(),
            "upper_tkm" => upper_tkm(int("ell")?, int("m")? as u32, int("t")?)?.to_string(),
            "triangle_bound" => triangle_bound(int("ell")?)?.to_string(),
            "chvatal_harary_value" => {
                let complete = self.applicability.get("complete").copied().unwrap_or(false);
                (int("n")? + if complete { 2 } else { 1 }).to_string()
            }
            "mequals2_c" => format_rational(&mequals2_budget(int("t")?)?.0),
            "mequals2_n_min" => mequals2_budget(int("t")?)?.1.to_string(),
            "main_q" => main_q(int("m")?, int("t")?)?.to_string(),
            "main_c" => {
                let eps = parse_rational(
                    self.inputs
                        .get("epsilon")
                        .ok_or_else(|| BoundsError::Domain("missing epsilon".into()))?,
                )?;
                format_rational(&main_budget(int("m")?, int("t")?, &eps)?.0)
            }
            other => return domain(format!("unknown bound {other}")),
        })
    }
}

/// All values relevant to `r(G, tK_m)` for one graph. `epsilon` enables the
/// main-theorem budget; it is never defaulted.
pub fn bounds_table(
    g: &SimpleGraph,
    m: u64,
    t: u64,
    epsilon: Option<&BigRational>,
) -> Result<Vec<BoundReport>, BoundsError> {
    if m == 0 || t == 0 {
        return domain("m and t must be positive");
    }
    let n = g.vertex_count() as u64;
    let ell = g.edge_count() as u64;
    let k = g.excess_k();
    let connected = g.is_connected();
    let no_isolated = !g.has_isolated_vertex();
    let s = |x: u64| x.to_string();
    let mut rows = vec![BoundReport::new(
        "goodness_value",
        &[("n", s(n)), ("m", s(m)), ("t", s(t))],
        goodness_value(n, m, t)?.to_string(),
        &[("connected", connected)],
    )];
    rows.push(BoundReport::new(
        "chvatal_tree_value",
        &[("n", s(n)), ("m", s(m))],
        chvatal_tree_value(n, m)?.to_string(),
        &[("tree", g.is_tree()), ("t_is_1", t == 1)],
    ));
    if m >= 3 && ell >= 1 {
        rows.push(BoundReport::new(
            "upper_km",
            &[("ell", s(ell)), ("m", s(m))],
            upper_km(ell, m as u32)?.to_string(),
            &[("no_isolated_vertices", no_isolated)],
        ));
        rows.push(BoundReport::new(
            "upper_tkm",
            &[("ell", s(ell)), ("m", s(m)), ("t", s(t))],
            upper_tkm(ell, m as u32, t)?.to_string(),
            &[("no_isolated_vertices", no_isolated)],
        ));
    }
    if m == 3 && ell >= 1 {
        rows.push(BoundReport::new(
            "triangle_bound",
            &[("ell", s(ell))],
            triangle_bound(ell)?.to_string(),
            &[("no_isolated_vertices", no_isolated), ("t_is_1", t == 1)],
        ));
    }
    if m == 2 && no_isolated {
        rows.push(BoundReport::new(
            "chvatal_harary_value",
            &[("n", s(n))],
            chvatal_harary_value(g)?.to_string(),
            &[("complete", g.is_complete()), ("t_is_2", t == 2)],
        ));
    }
    if m == 2 {
        let (c, n_min) = mequals2_budget(t)?;
        // k <= c n^2 is the sparsity hypothesis for m = 2.
        let sparse = BigRational::from_integer(BigInt::from(k))
            <= &c * BigRational::from_integer(BigInt::from(n * n));
        rows.push(BoundReport::new(
            "mequals2_c",
            &[("t", s(t))],
            format_rational(&c),
            &[("k_at_most_c_n_squared", sparse)],
        ));
        rows.push(BoundReport::new(
            "mequals2_n_min",
            &[("t", s(t))],
            n_min.to_string(),
            &[("n_at_least_n_min", n >= n_min)],
        ));
    }
    if m >= 2 {
        rows.push(BoundReport::new(
            "main_q",
            &[("m", s(m)), ("t", s(t))],
            main_q(m, t)?.to_string(),
            &[],
        ));
        if let Some(eps) = epsilon {
            let (c, _) = main_budget(m, t, eps)?;
            let power = BigRational::from_integer(BigInt::from(n));
            // k <= c n is the sparsity hypothesis of the main result.
            let sparse = BigRational::from_integer(BigInt::from(k)) <= &c * &power;
            rows.push(BoundReport::new(
                "main_c",
                &[("m", s(m)), ("t", s(t)), ("epsilon", format_rational(eps))],
                format_rational(&c),
                &[("connected", connected), ("k_at_most_c_n", sparse)],
            ));
        }
    }
    Ok(rows)
}
