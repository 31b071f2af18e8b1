//! Gorenstein witness ideals and the regularity probe `c(a) = c^m(a)`.

use std::sync::Arc;

use crate::cone::DualPair;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;

use super::{f_threshold, fpt, ThresholdValue};

/// The principal ideal `(X^ω)` of the Gorenstein point of `σ`.
pub fn gorenstein_witness_ideal(dp: &Arc<DualPair>) -> Result<MonomialIdeal> {
    let data = dp.gorenstein_data();
    let omega = match (&data.omega, data.index) {
        (Some(omega), Some(1)) => omega.to_ints().expect("index one means integral"),
        (Some(omega), Some(r)) => {
            return Err(Error::NotGorenstein(format!(
                "ω = {omega} is only Q-Gorenstein of index {r}"
            )))
        }
        _ => {
            return Err(Error::NotGorenstein(
                "no point pairs to 1 with every ray".into(),
            ))
        }
    };
    MonomialIdeal::new(dp, vec![omega])
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegularityReport {
    pub smooth: bool,
    pub fpt: ThresholdValue,
    pub fthreshold: ThresholdValue,
    /// `c(a) = c^m(a)`; for simplicial `σ` this forces `smooth`.
    pub equal: bool,
}

/// Compares `c(a)` with `c^m(a)` for an m-primary `a` on a simplicial cone.
pub fn regularity_probe(a: &MonomialIdeal) -> Result<RegularityReport> {
    let dp = a.context();
    if !dp.sigma().is_simplicial() {
        return Err(Error::SimplicialRequired {
            rays: dp.sigma_rays().len(),
            dim: dp.dim(),
        });
    }
    if !a.is_m_primary() {
        return Err(Error::NotMPrimary(format!("{:?}", a.generators())));
    }
    let m = MonomialIdeal::maximal(dp);
    let fpt = fpt(a)?;
    let fthreshold = f_threshold(a, &m)?;
    Ok(RegularityReport {
        smooth: dp.sigma().is_smooth(),
        equal: fpt.value == fthreshold.value,
        fpt,
        fthreshold,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn ctx(rays: &[Vec<i64>]) -> Arc<DualPair> {
        Arc::new(DualPair::new(rays).unwrap())
    }

    #[test]
    fn witness_ideals() {
        let a1 = ctx(&[vec![1, 0], vec![1, 2]]);
        assert_eq!(gorenstein_witness_ideal(&a1).unwrap().generators(), &[vec![1, 0]]);
        let hmtw = ctx(&[vec![1, 0, 0], vec![0, 1, 0], vec![-1, 0, 1], vec![0, -1, 1]]);
        assert_eq!(gorenstein_witness_ideal(&hmtw).unwrap().generators(), &[vec![1, 1, 2]]);
        let r1 = ctx(&[vec![1, 0, 0], vec![1, 1, 0], vec![0, 1, 1]]);
        assert_eq!(gorenstein_witness_ideal(&r1).unwrap().generators(), &[vec![1, 0, 1]]);
    }

    #[test]
    fn non_gorenstein_cones_have_no_witness() {
        let r3 = ctx(&[vec![1, 0, 0], vec![1, 1, 0], vec![0, 1, 3]]);
        assert!(matches!(gorenstein_witness_ideal(&r3), Err(Error::NotGorenstein(_))));
        let c23 = ctx(&[vec![1, 0], vec![2, 3]]);
        assert!(matches!(gorenstein_witness_ideal(&c23), Err(Error::NotGorenstein(_))));
    }

    #[test]
    fn witness_ideal_has_both_thresholds_one() {
        let a1 = ctx(&[vec![1, 0], vec![1, 2]]);
        let w = gorenstein_witness_ideal(&a1).unwrap();
        let m = MonomialIdeal::maximal(&a1);
        assert_eq!(fpt(&w).unwrap().value, int(1));
        assert_eq!(f_threshold(&w, &m).unwrap().value, int(1));
    }

    #[test]
    fn probe_on_regular_and_singular_planes() {
        let plane = ctx(&[vec![1, 0], vec![0, 1]]);
        let r = regularity_probe(&MonomialIdeal::maximal(&plane)).unwrap();
        assert!(r.smooth && r.equal);
        assert_eq!(r.fpt.value, int(2));

        let a1 = ctx(&[vec![1, 0], vec![1, 2]]);
        let r = regularity_probe(&MonomialIdeal::maximal(&a1)).unwrap();
        assert!(!r.smooth && !r.equal);
        assert!(r.fpt.value < r.fthreshold.value);
        assert_eq!(r.fpt.value, int(1));
        assert_eq!(r.fthreshold.value, rat(3, 2));
    }

    #[test]
    fn probe_rejects_bad_input() {
        let hmtw = ctx(&[vec![1, 0, 0], vec![0, 1, 0], vec![-1, 0, 1], vec![0, -1, 1]]);
        assert!(matches!(
            regularity_probe(&MonomialIdeal::maximal(&hmtw)),
            Err(Error::SimplicialRequired { .. })
        ));
        let plane = ctx(&[vec![1, 0], vec![0, 1]]);
        let x = MonomialIdeal::new(&plane, vec![vec![1, 0]]).unwrap();
        assert!(matches!(regularity_probe(&x), Err(Error::NotMPrimary(_))));
    }
}
