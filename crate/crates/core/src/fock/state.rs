use std::collections::BTreeMap;

use num_complex::Complex64;

use super::{FockSpace, Mode, Occupation};
use crate::{Error, Result, TOL};

/// Amplitudes below this are dropped when collecting terms; far below any
/// physically meaningful amplitude at the supported photon budgets.
const PRUNE: f64 = 1e-15;

/// A pure bosonic state: occupation patterns with complex amplitudes.
///
/// A freshly constructed state is normalized. Conditioning (post-selection)
/// produces an unnormalized state whose squared norm is the probability of
/// the condition; [`PhotonicState::norm_sqr`] reads it off and
/// [`PhotonicState::normalized`] rescales.
#[derive(Clone, Debug, PartialEq)]
pub struct PhotonicState {
    space: FockSpace,
    terms: BTreeMap<Occupation, Complex64>,
}

impl PhotonicState {
    /// The vacuum state.
    pub fn vacuum(space: FockSpace) -> PhotonicState {
        let mut terms = BTreeMap::new();
        terms.insert(Occupation::vacuum(), Complex64::new(1.0, 0.0));
        PhotonicState { space, terms }
    }

    /// State with the given photons placed in the given modes (a single
    /// Fock basis ket, amplitude 1).
    ///
    /// Rejects placements that exceed the photon budget or the time-bin
    /// window.
    pub fn from_placements(space: FockSpace, placements: &[(Mode, u8)]) -> Result<PhotonicState> {
        let occ = Occupation::from_pairs(placements);
        let total = occ.total_photons();
        if total > u32::from(space.n_max) {
            return Err(Error::PhotonBudget { requested: total, budget: u32::from(space.n_max) });
        }
        for (m, _) in occ.iter() {
            space.check_bin(m)?;
        }
        let mut terms = BTreeMap::new();
        terms.insert(occ, Complex64::new(1.0, 0.0));
        Ok(PhotonicState { space, terms })
    }

    /// One photon in each of the given modes.
    pub fn with_single_photons(space: FockSpace, modes: &[Mode]) -> Result<PhotonicState> {
        let pairs: Vec<(Mode, u8)> = modes.iter().map(|&m| (m, 1)).collect();
        PhotonicState::from_placements(space, &pairs)
    }

    /// Linear combination `sum_i coeff_i * state_i`.
    ///
    /// All parts must live in the same space. The result keeps the exact
    /// combined amplitudes; it errors out if they cancel to (near) zero.
    pub fn superpose(parts: &[(Complex64, &PhotonicState)]) -> Result<PhotonicState> {
        let space = parts
            .first()
            .map(|(_, s)| s.space)
            .ok_or_else(|| Error::InvalidParameter("empty superposition".into()))?;
        let mut terms: BTreeMap<Occupation, Complex64> = BTreeMap::new();
        for (coeff, state) in parts {
            if state.space != space {
                return Err(Error::ModeMismatch(format!(
                    "superposed states disagree on window/budget: {:?} vs {:?}",
                    state.space, space
                )));
            }
            for (occ, amp) in &state.terms {
                *terms.entry(occ.clone()).or_insert(Complex64::new(0.0, 0.0)) += coeff * amp;
            }
        }
        terms.retain(|_, a| a.norm_sqr() > PRUNE * PRUNE);
        let out = PhotonicState { space, terms };
        if out.norm_sqr() <= TOL * TOL {
            return Err(Error::ZeroNorm);
        }
        Ok(out)
    }

    /// Product state of two states on disjoint mode sets.
    pub fn tensor(&self, other: &PhotonicState) -> Result<PhotonicState> {
        if self.space != other.space {
            return Err(Error::ModeMismatch("tensor factors disagree on window/budget".into()));
        }
        let budget = u32::from(self.space.n_max);
        let mut terms: BTreeMap<Occupation, Complex64> = BTreeMap::new();
        for (ol, al) in &self.terms {
            for (or, ar) in &other.terms {
                for (m, _) in or.iter() {
                    if ol.count(m) > 0 {
                        return Err(Error::ModeMismatch(format!(
                            "tensor factors share occupied mode {m}"
                        )));
                    }
                }
                if ol.total_photons() + or.total_photons() > budget {
                    // Beyond the photon budget: truncated, like every other
                    // higher-order term in the source expansion.
                    continue;
                }
                let merged = ol.merged(or);
                *terms.entry(merged).or_insert(Complex64::new(0.0, 0.0)) += al * ar;
            }
        }
        let out = PhotonicState { space: self.space, terms };
        if out.norm_sqr() <= TOL * TOL {
            return Err(Error::ZeroNorm);
        }
        Ok(out)
    }

    pub fn space(&self) -> FockSpace {
        self.space
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Occupation, Complex64)> + '_ {
        self.terms.iter().map(|(o, &a)| (o, a))
    }

    pub fn amplitude(&self, occ: &Occupation) -> Complex64 {
        self.terms.get(occ).copied().unwrap_or(Complex64::new(0.0, 0.0))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn norm_sqr(&self) -> f64 {
        self.terms.values().map(|a| a.norm_sqr()).sum()
    }

    pub fn is_normalized(&self) -> bool {
        (self.norm_sqr() - 1.0).abs() <= TOL
    }

    /// Rescaled copy with unit norm.
    pub fn normalized(&self) -> Result<PhotonicState> {
        let n2 = self.norm_sqr();
        if n2 <= TOL * TOL {
            return Err(Error::ZeroNorm);
        }
        let scale = 1.0 / n2.sqrt();
        let terms = self.terms.iter().map(|(o, a)| (o.clone(), a * scale)).collect();
        Ok(PhotonicState { space: self.space, terms })
    }

    /// Photon-number measurement: probability of each occupation pattern.
    ///
    /// Probabilities sum to the squared norm (1 for a normalized state, the
    /// post-selection probability for a conditional one).
    pub fn measure_number(&self) -> BTreeMap<Occupation, f64> {
        self.terms.iter().map(|(o, a)| (o.clone(), a.norm_sqr())).collect()
    }

    /// Keep only terms satisfying `keep`; the result is conditional
    /// (unnormalized), its squared norm is the probability of the condition.
    pub fn filtered<F>(&self, keep: F) -> PhotonicState
    where
        F: Fn(&Occupation) -> bool,
    {
        let terms = self
            .terms
            .iter()
            .filter(|(o, _)| keep(o))
            .map(|(o, a)| (o.clone(), *a))
            .collect();
        PhotonicState { space: self.space, terms }
    }

    pub(crate) fn from_raw(
        space: FockSpace,
        terms: BTreeMap<Occupation, Complex64>,
    ) -> PhotonicState {
        PhotonicState { space, terms }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fock::Port;

    const C0: Complex64 = Complex64::new(0.0, 0.0);

    fn space() -> FockSpace {
        FockSpace::default()
    }

    #[test]
    fn single_photon_state_has_amplitude_one() {
        let m = Mode::new(Port::A, 0);
        let s = PhotonicState::from_placements(space(), &[(m, 1)]).unwrap();
        assert_eq!(s.num_terms(), 1);
        assert!((s.amplitude(&Occupation::single(m)) - 1.0).norm() < TOL);
        assert!(s.is_normalized());
    }

    #[test]
    fn two_photons_in_one_mode_are_one_normalized_term() {
        let m = Mode::new(Port::A, 0);
        let s = PhotonicState::from_placements(space(), &[(m, 2)]).unwrap();
        assert_eq!(s.num_terms(), 1);
        assert!(s.is_normalized());
    }

    #[test]
    fn empty_placement_is_vacuum() {
        let s = PhotonicState::from_placements(space(), &[]).unwrap();
        assert_eq!(s.num_terms(), 1);
        assert!((s.amplitude(&Occupation::vacuum()) - 1.0).norm() < TOL);
        assert!(s.is_normalized());
    }

    #[test]
    fn placement_rejects_budget_and_window_violations() {
        let m = Mode::new(Port::A, 0);
        let err = PhotonicState::from_placements(space(), &[(m, 5)]).unwrap_err();
        assert!(matches!(err, Error::PhotonBudget { .. }));

        let late = Mode::new(Port::A, 3);
        let err = PhotonicState::from_placements(space(), &[(late, 1)]).unwrap_err();
        assert!(matches!(err, Error::WindowExceeded { .. }));
    }

    #[test]
    fn superpose_builds_a_qubit() {
        let s0 =
            PhotonicState::from_placements(space(), &[(Mode::new(Port::A, 0), 1)]).unwrap();
        let s1 =
            PhotonicState::from_placements(space(), &[(Mode::new(Port::A, 1), 1)]).unwrap();
        let c = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
        let q = PhotonicState::superpose(&[(c, &s0), (c, &s1)]).unwrap();
        assert!(q.is_normalized());
        assert_eq!(q.num_terms(), 2);
    }

    #[test]
    fn superpose_with_zero_coefficient_is_identity() {
        let s0 =
            PhotonicState::from_placements(space(), &[(Mode::new(Port::A, 0), 1)]).unwrap();
        let s1 =
            PhotonicState::from_placements(space(), &[(Mode::new(Port::B, 0), 1)]).unwrap();
        let one = Complex64::new(1.0, 0.0);
        let q = PhotonicState::superpose(&[(one, &s0), (C0, &s1)]).unwrap();
        assert_eq!(q, s0);
    }

    #[test]
    fn singlet_superposition_is_normalized() {
        let a0 = Mode::new(Port::A, 0);
        let a1 = Mode::new(Port::A, 1);
        let b0 = Mode::new(Port::B, 0);
        let b1 = Mode::new(Port::B, 1);
        let s01 = PhotonicState::with_single_photons(space(), &[a0, b1]).unwrap();
        let s10 = PhotonicState::with_single_photons(space(), &[a1, b0]).unwrap();
        let c = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
        let singlet = PhotonicState::superpose(&[(c, &s01), (-c, &s10)]).unwrap();
        assert!(singlet.is_normalized());
    }

    #[test]
    fn all_zero_superposition_errors() {
        let s = PhotonicState::vacuum(space());
        let err = PhotonicState::superpose(&[(C0, &s)]).unwrap_err();
        assert_eq!(err, Error::ZeroNorm);
    }

    #[test]
    fn measure_number_on_basis_state() {
        let m = Mode::new(Port::A, 0);
        let s = PhotonicState::from_placements(space(), &[(m, 1)]).unwrap();
        let probs = s.measure_number();
        assert_eq!(probs.len(), 1);
        assert!((probs[&Occupation::single(m)] - 1.0).abs() < TOL);
    }

    #[test]
    fn measure_number_on_even_superposition() {
        let s0 =
            PhotonicState::from_placements(space(), &[(Mode::new(Port::A, 0), 1)]).unwrap();
        let s1 =
            PhotonicState::from_placements(space(), &[(Mode::new(Port::A, 1), 1)]).unwrap();
        let c = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
        let q = PhotonicState::superpose(&[(c, &s0), (c, &s1)]).unwrap();
        for (_, p) in q.measure_number() {
            assert!((p - 0.5).abs() < TOL);
        }
    }

    #[test]
    fn tensor_of_disjoint_states() {
        let a = PhotonicState::from_placements(space(), &[(Mode::new(Port::A, 0), 1)]).unwrap();
        let b = PhotonicState::from_placements(space(), &[(Mode::new(Port::B, 1), 1)]).unwrap();
        let ab = a.tensor(&b).unwrap();
        assert!(ab.is_normalized());
        assert_eq!(ab.num_terms(), 1);
        let occ = Occupation::from_pairs(&[(Mode::new(Port::A, 0), 1), (Mode::new(Port::B, 1), 1)]);
        assert!((ab.amplitude(&occ) - 1.0).norm() < TOL);
    }

    #[test]
    fn tensor_rejects_shared_modes() {
        let a = PhotonicState::from_placements(space(), &[(Mode::new(Port::A, 0), 1)]).unwrap();
        assert!(a.tensor(&a).is_err());
    }
}
