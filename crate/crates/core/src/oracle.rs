//! Brute-force `ν_a^J(q) = max { r : a^r ⊄ J^{[q]} }` on exponent vectors.
//!
//! Level `r` of the search holds the distinct sums of `r` generators of `a`
//! that avoid `J^{[q]}`. A sum inside `J^{[q]}` stays inside after adding
//! anything from `σ^∨`, so it is dropped. `ν` is the last nonempty level.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::rational::{rat, IVec, Rational};
use crate::thresholds::{f_threshold, ThresholdValue};

pub const BUDGET_ENV: &str = "FTHRESH_BUDGET";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleConfig {
    /// Maximum number of states visited by one search.
    pub budget: usize,
    pub max_q: u64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            budget: 1_000_000,
            max_q: 81,
        }
    }
}

impl OracleConfig {
    /// Defaults, with the budget taken from `FTHRESH_BUDGET` when it parses.
    pub fn from_env() -> Self {
        let mut c = OracleConfig::default();
        if let Some(b) = std::env::var(BUDGET_ENV).ok().and_then(|s| s.trim().parse().ok()) {
            c.budget = b;
        }
        c
    }
}

pub fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|k| k * k <= p).all(|k| p % k != 0)
}

#[derive(Clone, Debug)]
pub struct NuQuery {
    a: MonomialIdeal,
    j: MonomialIdeal,
    p: u64,
    e: u32,
    q: u64,
}

impl NuQuery {
    pub fn new(a: &MonomialIdeal, j: &MonomialIdeal, p: u64, e: u32) -> Result<NuQuery> {
        if a.context() != j.context() {
            return Err(Error::ContextMismatch);
        }
        j.require_proper()?;
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if e == 0 {
            return Err(Error::InvalidFrobeniusPower(1));
        }
        if !a.is_in_radical_of(j) {
            return Err(Error::UnsupportedJ("a is not contained in the radical of J".into()));
        }
        let q = p
            .checked_pow(e)
            .ok_or_else(|| Error::Overflow(format!("{p}^{e}")))?;
        Ok(NuQuery {
            a: a.clone(),
            j: j.clone(),
            p,
            e,
            q,
        })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn q(&self) -> u64 {
        self.q
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NuResult {
    pub nu: u64,
    /// A sum of `nu` generators of `a` outside `J^{[q]}`.
    pub witness: IVec,
    /// Distinct exponent vectors visited.
    pub states: usize,
}

pub fn nu(query: &NuQuery, config: &OracleConfig) -> Result<NuResult> {
    if query.q > config.max_q {
        return Err(Error::FrobeniusPowerTooLarge {
            q: query.q,
            max: config.max_q,
        });
    }
    let jq = query.j.frobenius_power(query.q)?;
    let gens = query.a.generators();
    let mut level: BTreeSet<IVec> = BTreeSet::from([vec![0; query.a.dim()]]);
    let mut states = 1;
    let mut r = 0u64;
    loop {
        let mut next = BTreeSet::new();
        for s in &level {
            for g in gens {
                let t: IVec = s.iter().zip(g).map(|(x, y)| x + y).collect();
                if !jq.contains(&t) && next.insert(t) {
                    states += 1;
                    if states > config.budget {
                        return Err(Error::OracleBudgetExceeded {
                            budget: config.budget,
                        });
                    }
                }
            }
        }
        if next.is_empty() {
            let witness = level.into_iter().next().expect("nonempty level");
            return Ok(NuResult {
                nu: r,
                witness,
                states,
            });
        }
        level = next;
        r += 1;
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConvergenceRow {
    pub e: u32,
    pub q: u64,
    /// `None` when the search ran out of budget or `q` is above the cap.
    pub nu: Option<NuResult>,
}

impl ConvergenceRow {
    pub fn ratio(&self) -> Option<Rational> {
        self.nu.as_ref().map(|n| rat(n.nu as i64, self.q as i64))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConvergenceTable {
    pub rows: Vec<ConvergenceRow>,
    /// `c^J(a)` from the polyhedral formula.
    pub limit: ThresholdValue,
}

impl ConvergenceTable {
    pub fn is_complete(&self) -> bool {
        self.rows.iter().all(|r| r.nu.is_some())
    }

    /// `limit - ν(q)/q` for the rows that were computed.
    pub fn gaps(&self) -> Vec<(u32, Rational)> {
        self.rows
            .iter()
            .filter_map(|r| r.ratio().map(|x| (r.e, &self.limit.value - x)))
            .collect()
    }
}

/// `ν(p^e)/p^e` for `e = 1..=e_max` next to `c^J(a)`. Rows whose search
/// exceeds the budget or the cap on `q` are left empty.
pub fn convergence_table(
    a: &MonomialIdeal,
    j: &MonomialIdeal,
    p: u64,
    e_max: u32,
    config: &OracleConfig,
) -> Result<ConvergenceTable> {
    let limit = f_threshold(a, j)?;
    let mut rows = Vec::new();
    for e in 1..=e_max {
        let query = NuQuery::new(a, j, p, e)?;
        let nu = match nu(&query, config) {
            Ok(n) => Some(n),
            Err(Error::OracleBudgetExceeded { .. } | Error::FrobeniusPowerTooLarge { .. }) => None,
            Err(err) => return Err(err),
        };
        rows.push(ConvergenceRow { e, q: query.q, nu });
    }
    Ok(ConvergenceTable { rows, limit })
}
