//! Geometric obstructions from Λ regions: the slope functions α and β, the
//! exact tangle-level replacement region V(1−α, α), admissibility of proper
//! rational tangle replacements, the u⁰ move classifier, and the positive
//! crossing bound from G²-torsion.
//!
//! All slope functions assume the replacement is normalized to the form
//! Q₋₁ ⇝ Q_{p/q} with p, q odd; the obstruction applies to the orientation
//! conventions fixed for odd/odd tangles, and reversing the orientation of
//! a single strand invalidates it.

use crate::lambda::region::Region;
use crate::pieces::TorsionProfile;
use crate::rational::{s_invariant, Slope};
use crate::{Error, Result};

/// A normalized proper rational tangle replacement Q₋₁ ⇝ Q_{p/q}.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReplacementSpec {
    pub to_slope: Slope,
}

impl ReplacementSpec {
    pub fn new(to_slope: Slope) -> Result<ReplacementSpec> {
        if !to_slope.both_odd() || to_slope.is_infinity() {
            return Err(Error::BadParity(to_slope.p(), to_slope.q()));
        }
        if to_slope.p() == -to_slope.q() {
            return Err(Error::ExcludedSlope(-1));
        }
        Ok(ReplacementSpec { to_slope })
    }
}

/// α(p/q) = ½·s(Q_{p/q}(0)) + 1 if −1 < p/q < 0, else + 0.
pub fn alpha(s: Slope) -> Result<i64> {
    if !s.both_odd() || s.p() == 0 || s.is_infinity() {
        return Err(Error::BadParity(s.p(), s.q()));
    }
    if s.p() == -s.q() {
        return Err(Error::ExcludedSlope(-1));
    }
    let base = s_invariant(s)? / 2;
    let in_window = s.p() < 0 && -s.p() < s.q();
    Ok(base + i64::from(in_window))
}

/// β(p/q) = −½·s(Q_{p/q}(0)) + 1 if 0 < p/q < 1, else + 0. Satisfies
/// β(p/q) = α(−p/q).
pub fn beta(s: Slope) -> Result<i64> {
    if !s.both_odd() || s.p() == 0 || s.is_infinity() {
        return Err(Error::BadParity(s.p(), s.q()));
    }
    if s.p() == s.q() {
        return Err(Error::ExcludedSlope(1));
    }
    let base = -s_invariant(s)? / 2;
    let in_window = s.p() > 0 && s.p() < s.q();
    Ok(base + i64::from(in_window))
}

/// The exact tangle-level region Λ_{D•}(Q₋₁, Q_{p/q}) = V(1−α, α), which
/// injects into the knot-level Λ of any pair related by the replacement.
pub fn replacement_region(s: Slope) -> Result<Region> {
    let a = alpha(s)?;
    Ok(Region::quadrant(1 - a, a))
}

/// True iff the point (1−α, α) lies in `lam`; false certifies that no
/// replacement Q₋₁ ⇝ Q_{p/q} turns K₁ into K₂.
pub fn admissible(lam: &Region, s: Slope) -> Result<bool> {
    let a = alpha(s)?;
    Ok(lam.member(1 - a, a))
}

/// A u⁰ move is a proper rational replacement with α ∈ {0, 1}; λ⁰ bounds the
/// number of such moves.
pub fn is_u0_move(s: Slope) -> Result<bool> {
    Ok(matches!(alpha(s)?, 0 | 1))
}

/// Lower bound for the positive crossing count of any knot one proper
/// rational replacement away: the top homological degree carrying G²-torsion
/// (0 when there is none).
pub fn positive_crossing_bound(profile: &TorsionProfile) -> i64 {
    profile
        .u
        .iter()
        .filter(|(_, &k)| k >= 2)
        .map(|(&i, _)| i)
        .max()
        .unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gring::RingTag;
    use crate::lambda::lambda_region_structured;
    use crate::pieces::{torsion_profile, torus_decomposition, TorusParams};
    use crate::rational::two_bridge_signature;
    use num_integer::Integer;

    fn slope(p: i64, q: i64) -> Slope {
        Slope::new(p, q).unwrap()
    }

    #[test]
    fn alpha_values() {
        assert_eq!(alpha(slope(3, 1)).unwrap(), -1);
        assert_eq!(alpha(slope(-3, 5)).unwrap(), 0);
        assert_eq!(alpha(slope(1, 1)).unwrap(), 0);
        assert!(alpha(slope(-1, 1)).is_err());
        assert!(alpha(slope(2, 3)).is_err());
    }

    #[test]
    fn beta_values() {
        assert_eq!(beta(slope(-3, 1)).unwrap(), alpha(slope(3, 1)).unwrap());
        assert_eq!(beta(slope(3, 5)).unwrap(), 0);
        assert_eq!(beta(slope(5, 9)).unwrap(), -1);
        assert!(beta(slope(1, 1)).is_err());
    }

    #[test]
    fn beta_is_alpha_of_mirror() {
        for p in (-21..=21i64).step_by(2) {
            for q in (1..=21i64).step_by(2) {
                if p == 0 || p.abs().gcd(&q) != 1 || p == q {
                    continue;
                }
                let s = slope(p, q);
                assert_eq!(
                    beta(s).unwrap(),
                    alpha(s.negated()).unwrap(),
                    "slope {p}/{q}"
                );
            }
        }
    }

    #[test]
    fn replacement_regions() {
        assert_eq!(replacement_region(slope(3, 1)).unwrap(), Region::quadrant(2, -1));
        assert_eq!(replacement_region(slope(1, 1)).unwrap(), Region::quadrant(1, 0));
        assert_eq!(replacement_region(slope(-3, 5)).unwrap(), Region::quadrant(1, 0));
    }

    fn trefoil_unknot_region() -> Region {
        let ring = RingTag::Z;
        let t = torus_decomposition(TorusParams::TwoStrand { m: 1 }, ring, false).unwrap();
        let u = torus_decomposition(TorusParams::TwoStrand { m: 0 }, ring, false).unwrap();
        lambda_region_structured(&t, &u)
            .unwrap()
            .exact()
            .unwrap()
            .clone()
    }

    #[test]
    fn trefoil_admissibility() {
        let lam = trefoil_unknot_region();
        // positive-to-negative crossing change unknots the trefoil
        assert!(admissible(&lam, slope(1, 1)).unwrap());
        // slope 3 replacement also does (σ = 2)
        assert!(admissible(&lam, slope(3, 1)).unwrap());
        // the (0,1) point is excluded: no negative-to-positive change
        assert!(!lam.member(0, 1));
        // admissible slopes satisfy σ ∈ {0, 2, 4}
        let mut seen = std::collections::BTreeSet::new();
        for p in (-21..=21i64).step_by(2) {
            for q in (1..=21i64).step_by(2) {
                if p == 0 || p.abs().gcd(&q) != 1 || p == -q {
                    continue;
                }
                let s = slope(p, q);
                if admissible(&lam, s).unwrap() {
                    let sigma = two_bridge_signature(s).unwrap();
                    assert!([0, 2, 4].contains(&sigma), "σ = {sigma} at {s}");
                    seen.insert(sigma);
                }
            }
        }
        assert_eq!(seen.into_iter().collect::<Vec<_>>(), vec![0, 2, 4]);
    }

    #[test]
    fn admissible_monotone_in_region() {
        let small = trefoil_unknot_region();
        let big = small.union(&Region::quadrant(0, 0));
        for p in (-9..=9i64).step_by(2) {
            for q in (1..=9i64).step_by(2) {
                if p == 0 || p.abs().gcd(&q) != 1 || p == -q {
                    continue;
                }
                let s = slope(p, q);
                if admissible(&small, s).unwrap() {
                    assert!(admissible(&big, s).unwrap());
                }
            }
        }
    }

    #[test]
    fn u0_moves() {
        assert!(is_u0_move(slope(1, 1)).unwrap());
        for k in 1..=5i64 {
            assert!(is_u0_move(slope(1, 2 * k - 1)).unwrap(), "t-bar move {k}");
        }
        assert!(!is_u0_move(slope(3, 1)).unwrap());
    }

    #[test]
    fn crossing_bounds() {
        for n in 1..=5u32 {
            for i in 1..=2u32 {
                let d = torus_decomposition(
                    TorusParams::ThreeStrand { n, i },
                    RingTag::Fp(2),
                    false,
                )
                .unwrap();
                assert_eq!(
                    positive_crossing_bound(&torsion_profile(&d)),
                    4 * n as i64 + 1,
                    "T(3,{})",
                    3 * n + i
                );
            }
        }
        let unknot =
            torus_decomposition(TorusParams::TwoStrand { m: 0 }, RingTag::Z, false).unwrap();
        assert_eq!(positive_crossing_bound(&torsion_profile(&unknot)), 0);
    }

    #[test]
    fn replacement_region_inside_knot_region() {
        // tangle-level region for the crossing change sits inside
        // Λ(T(2,3), U) — consistency of the two layers.
        let lam = trefoil_unknot_region();
        let tangle = replacement_region(slope(1, 1)).unwrap();
        assert!(tangle.subset_of(&lam));
    }

    #[test]
    fn replacement_region_injects_into_closure_pairs() {
        // The replacement Q₋₁ ⇝ Q_{p/q} turns the unknot (the 0-closure of
        // Q₋₁) into Q_{p/q}(0), so V(1−α, α) ⊆ Λ(U, Q_{p/q}(0)). Closures
        // with colliding knight degrees fall back to the brute engine over
        // F₂ (whose region contains the integral one).
        use crate::lambda::{lambda_region_brute, BruteCaps};
        use crate::pairing::two_bridge_complex;
        use crate::pieces::{decompose, reassemble};
        let unknot =
            torus_decomposition(TorusParams::TwoStrand { m: 0 }, RingTag::Z, false).unwrap();
        for (p, q) in [(1i64, 1i64), (3, 1), (-3, 5), (-5, 9), (5, 3), (-7, 3)] {
            let s = slope(p, q);
            let c = two_bridge_complex(s).unwrap();
            let closure = decompose(&c).unwrap();
            let lam = match lambda_region_structured(&unknot, &closure).unwrap() {
                crate::lambda::StructuredRegion::Exact(r) => r,
                crate::lambda::StructuredRegion::Indeterminate { .. } => lambda_region_brute(
                    &reassemble(&torus_decomposition(
                        TorusParams::TwoStrand { m: 0 },
                        RingTag::Fp(2),
                        false,
                    )
                    .unwrap()),
                    &c.base_change(RingTag::Fp(2)).unwrap(),
                    BruteCaps::default(),
                )
                .unwrap(),
            };
            let tangle = replacement_region(s).unwrap();
            assert!(tangle.subset_of(&lam), "slope {p}/{q}");
        }
    }

    #[test]
    fn replacement_spec_validation() {
        assert!(ReplacementSpec::new(slope(-1, 1)).is_err());
        assert!(ReplacementSpec::new(slope(2, 3)).is_err());
        assert!(ReplacementSpec::new(slope(3, 5)).is_ok());
    }
}
