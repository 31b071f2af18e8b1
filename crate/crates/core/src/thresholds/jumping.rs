//! F-jumping coefficients by the recursion
//! `cⁱ = min { μ_a(b) : X^b a generator of τ(a^{c^{i-1}}) }`, starting from
//! `c⁰ = 0` and `τ(a^0) = R`.

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::rational::{IVec, Rational};

use super::{mu_value, test_ideal_generators, TestIdealOptions, ThresholdValue};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JumpingStep {
    /// `cⁱ`, with witness `b + ω` where `λ_a(b + ω) = cⁱ`.
    pub value: ThresholdValue,
    /// The generator `b` of the previous test ideal attaining the minimum.
    pub generator: IVec,
    /// `τ(a^{cⁱ})`.
    pub ideal: MonomialIdeal,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JumpingChain {
    pub steps: Vec<JumpingStep>,
}

impl JumpingChain {
    pub fn coefficients(&self) -> Vec<Rational> {
        self.steps.iter().map(|s| s.value.value.clone()).collect()
    }

    pub fn ideals(&self) -> Vec<&MonomialIdeal> {
        self.steps.iter().map(|s| &s.ideal).collect()
    }
}

/// The first `n` F-jumping coefficients of `a` with their test ideals.
pub fn jumping_coefficients(
    a: &MonomialIdeal,
    n: usize,
    opts: &TestIdealOptions,
) -> Result<JumpingChain> {
    if n == 0 {
        return Err(Error::InvalidExponent("count must be at least 1".into()));
    }
    a.require_proper()?;
    let mut tau = MonomialIdeal::unit(a.context());
    let mut steps = Vec::with_capacity(n);
    for _ in 0..n {
        let mut best: Option<(ThresholdValue, IVec)> = None;
        for b in tau.generators() {
            let mu = mu_value(a, b)?;
            if best.as_ref().map_or(true, |(m, _)| mu.value < m.value) {
                best = Some((mu, b.clone()));
            }
        }
        let (value, generator) = best.expect("ideals have generators");
        tau = test_ideal_generators(a, &value.value, opts)?;
        steps.push(JumpingStep {
            value,
            generator,
            ideal: tau.clone(),
        });
    }
    Ok(JumpingChain { steps })
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::cone::DualPair;
    use crate::rational::{rat, QVector};
    use crate::thresholds::{fpt, lambda_value};

    #[test]
    fn x2_y3_on_the_plane() {
        let dp = Arc::new(DualPair::new(&[vec![1, 0], vec![0, 1]]).unwrap());
        let a = MonomialIdeal::new(&dp, vec![vec![2, 0], vec![0, 3]]).unwrap();
        let chain = jumping_coefficients(&a, 3, &TestIdealOptions::default()).unwrap();
        assert_eq!(chain.coefficients(), vec![rat(5, 6), rat(7, 6), rat(4, 3)]);
        let ideals: Vec<Vec<IVec>> = chain.ideals().iter().map(|i| i.generators().to_vec()).collect();
        assert_eq!(ideals[0], vec![vec![0, 1], vec![1, 0]]);
        assert_eq!(ideals[1], vec![vec![0, 2], vec![1, 0]]);
        assert_eq!(ideals[2], vec![vec![0, 2], vec![1, 1], vec![2, 0]]);
        assert_eq!(chain.steps[1].generator, vec![0, 1]);
        assert_eq!(chain.steps[1].value.witness, QVector::from_ints(&[1, 2]));
        for s in &chain.steps {
            assert_eq!(lambda_value(&a, &s.value.witness).unwrap(), s.value.value);
        }
    }

    #[test]
    fn first_coefficient_is_the_fpt() {
        for r in [2i64, 3] {
            let dp = Arc::new(DualPair::new(&[vec![1, 0, 0], vec![1, 1, 0], vec![0, 1, r]]).unwrap());
            let a = MonomialIdeal::new(&dp, vec![vec![r, 0, 1]]).unwrap();
            let chain = jumping_coefficients(&a, 1, &TestIdealOptions::default()).unwrap();
            assert_eq!(chain.coefficients(), vec![rat(1, r)]);
            assert_eq!(chain.coefficients()[0], fpt(&a).unwrap().value);
        }
    }

    #[test]
    fn zero_count_is_rejected() {
        let dp = Arc::new(DualPair::new(&[vec![1, 0], vec![0, 1]]).unwrap());
        let m = MonomialIdeal::maximal(&dp);
        assert!(jumping_coefficients(&m, 0, &TestIdealOptions::default()).is_err());
    }
}
