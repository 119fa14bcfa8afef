//! The invariants λ, λ⁰ and the region Λ between knot complexes.
//!
//! Two engines are provided. The structured engine works on pawn/knight
//! decompositions and decides membership of (q₁, q₂) by componentwise
//! matching of pieces; it is exact when both decompositions are
//! multiplicity-free. The brute engine works on raw complexes over a finite
//! field and decides membership by exact linear algebra over the space of
//! homogeneous chain maps modulo homotopy; it serves as the oracle.
//!
//! Over a field, λ⁰(K) = max{|s|/2, 𝔲} and λ(K) = 𝔲 exactly
//! ([`closed_form_lambda`]). Whether a knot exists whose integral λ⁰(K)
//! exceeds both bounds over every field is open; the engines here can
//! search for one but not settle the question.

pub mod region;

mod brute;
mod hom;

use crate::pieces::Decomposition;
use crate::{Error, Result};
pub use brute::{hom_class_dim, lambda_region_brute, BruteCaps};
pub use hom::{hom_basis, HomotopyHomSpace, Piece, PieceMap};
pub use region::Region;

/// λ-type values: a non-negative integer or ∞ (min over the empty set).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LambdaValue {
    Finite(i64),
    Infinite,
}

impl std::fmt::Display for LambdaValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            LambdaValue::Finite(n) => write!(f, "{n}"),
            LambdaValue::Infinite => write!(f, "inf"),
        }
    }
}

/// λ = min{q₁+q₂ | (q₁,q₂) ∈ Λ}.
pub fn small_lambda(region: &Region) -> LambdaValue {
    match region.min_sum() {
        Some(n) => LambdaValue::Finite(n),
        None => LambdaValue::Infinite,
    }
}

/// λ⁰ = min{q₁+q₂ | (q₁,q₂) ∈ Λ ∩ V(0,0)}.
pub fn small_lambda0(region: &Region) -> LambdaValue {
    match region.min_sum_first_quadrant() {
        Some(n) => LambdaValue::Finite(n),
        None => LambdaValue::Infinite,
    }
}

/// Output of the structured engine: an exact region, or inner/outer bounds
/// when a decomposition is not multiplicity-free.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StructuredRegion {
    Exact(Region),
    Indeterminate { inner: Region, outer: Region },
}

impl StructuredRegion {
    pub fn exact(&self) -> Option<&Region> {
        match self {
            StructuredRegion::Exact(r) => Some(r),
            StructuredRegion::Indeterminate { .. } => None,
        }
    }
}

/// Λ(K₁, K₂) from pawn/knight decompositions.
///
/// A point (q₁, q₂) with n = q₁ + q₂ lies in Λ iff the pawn degrees admit
/// nonnegative exponents (q₁ ≥ s₁₂/2, q₂ ≥ s₂₁/2) and every knight of order
/// k > n is matched by a degree-aligned knight in the other complex through
/// components realizing Gⁿ·id with nonnegative exponents. For n ≥ k the
/// corner constraint alone decides.
pub fn lambda_region_structured(
    d1: &Decomposition,
    d2: &Decomposition,
) -> Result<StructuredRegion> {
    if d1.ring != d2.ring {
        return Err(Error::MixedRings);
    }
    let s12 = d1.pawn.s - d2.pawn.s;
    if s12 % 2 != 0 {
        // no homogeneous pawn components exist at all
        return Ok(StructuredRegion::Exact(Region::empty()));
    }
    let (c1, c2) = (s12 / 2, -s12 / 2);
    let corner = Region::quadrant(c1, c2);
    let kf = d1.umax().max(d2.umax()) as i64;
    let base = Region::half_plane(kf).intersect(&corner);
    if !(d1.is_multiplicity_free() && d2.is_multiplicity_free()) {
        if kf == 0 {
            return Ok(StructuredRegion::Exact(corner));
        }
        return Ok(StructuredRegion::Indeterminate {
            inner: base,
            outer: corner,
        });
    }
    let mut out = base;
    for n in 0..kf {
        for q1 in c1..=(n - c2) {
            let q2 = n - q1;
            if structured_member(d1, d2, q1, q2) {
                out = out.union(&Region::quadrant(q1, q2));
            }
        }
    }
    Ok(StructuredRegion::Exact(out))
}

fn structured_member(d1: &Decomposition, d2: &Decomposition, q1: i64, q2: i64) -> bool {
    let n = q1 + q2;
    debug_assert!(n >= 0);
    let s12 = d1.pawn.s - d2.pawn.s;
    if q1 < s12 / 2 || q2 < -s12 / 2 {
        return false;
    }
    let check = |a: &Decomposition, b: &Decomposition, qa: i64, qb: i64| -> bool {
        for na in &a.knights {
            if (na.k as i64) <= n {
                continue;
            }
            let Some(nb) = b.knights.iter().find(|m| m.i == na.i) else {
                return false;
            };
            if (nb.q0 - na.q0) % 2 != 0 {
                return false;
            }
            let m = qa + (nb.q0 - na.q0) / 2;
            let mp = qb - (nb.q0 - na.q0) / 2;
            let lo_f = 0i64.max(na.k as i64 - nb.k as i64);
            let lo_g = 0i64.max(nb.k as i64 - na.k as i64);
            if m < lo_f || mp < lo_g {
                return false;
            }
        }
        true
    };
    check(d1, d2, q1, q2) && check(d2, d1, q2, q1)
}

/// The closed-form bounds and unknot values of λ and λ⁰ over a field:
/// λ⁰ ≤ max{|s₁₂|/2, 𝔲₁, 𝔲₂} and λ ≤ max{𝔲₁, 𝔲₂}, with equality against
/// the unknot (λ⁰(K) = max{|s|/2, 𝔲}, λ(K) = 𝔲).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClosedFormBounds {
    pub lambda0_upper: i64,
    pub lambda_upper: i64,
    /// Exact values, present when the second complex is the unknot.
    pub lambda0_exact: Option<i64>,
    pub lambda_exact: Option<i64>,
}

pub fn closed_form_lambda(d1: &Decomposition, d2: &Decomposition) -> Result<ClosedFormBounds> {
    if d1.ring != d2.ring {
        return Err(Error::MixedRings);
    }
    if !d1.ring.is_field() {
        return Err(Error::NotAUnit("closed forms hold over fields".into()));
    }
    let s12 = (d1.pawn.s - d2.pawn.s).abs();
    let (u1, u2) = (d1.umax() as i64, d2.umax() as i64);
    let lambda0_upper = (s12 / 2).max(u1).max(u2);
    let lambda_upper = u1.max(u2);
    let vs_unknot = d2.knights.is_empty() && d2.pawn.s == 0;
    Ok(ClosedFormBounds {
        lambda0_upper,
        lambda_upper,
        lambda0_exact: vs_unknot.then_some((d1.pawn.s.abs() / 2).max(u1)),
        lambda_exact: vs_unknot.then_some(u1),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gring::RingTag;
    use crate::pieces::{torus_decomposition, Decomposition, Knight, Pawn, TorusParams};

    fn unknot(ring: RingTag) -> Decomposition {
        torus_decomposition(TorusParams::TwoStrand { m: 0 }, ring, false).unwrap()
    }

    fn t2(m: u32, ring: RingTag) -> Decomposition {
        torus_decomposition(TorusParams::TwoStrand { m }, ring, false).unwrap()
    }

    fn t3(n: u32, i: u32, ring: RingTag) -> Decomposition {
        torus_decomposition(TorusParams::ThreeStrand { n, i }, ring, false).unwrap()
    }

    fn exact(d1: &Decomposition, d2: &Decomposition) -> Region {
        lambda_region_structured(d1, d2)
            .unwrap()
            .exact()
            .unwrap()
            .clone()
    }

    #[test]
    fn trefoil_vs_unknot_region() {
        let r = exact(&t2(1, RingTag::Z), &unknot(RingTag::Z));
        // V₁ ∩ V(1, −1)
        let expected = Region::half_plane(1).intersect(&Region::quadrant(1, -1));
        assert_eq!(r, expected);
        assert!(!r.member(0, 1));
        assert!(r.member(1, 0));
        assert!(r.member(2, -1));
        assert_eq!(small_lambda(&r), LambdaValue::Finite(1));
        assert_eq!(small_lambda0(&r), LambdaValue::Finite(1));
    }

    #[test]
    fn self_region_is_first_quadrant() {
        let d = t2(2, RingTag::Z);
        let r = exact(&d, &d);
        assert_eq!(r, Region::quadrant(0, 0));
        assert!(r.member(0, 0));
        assert_eq!(small_lambda(&r), LambdaValue::Finite(0));
        assert_eq!(small_lambda0(&r), LambdaValue::Finite(0));
    }

    #[test]
    fn intro_pair_t34_t29() {
        let f2 = RingTag::Fp(2);
        let r = exact(&t3(1, 1, f2), &t2(4, f2));
        assert_eq!(small_lambda0(&r), LambdaValue::Finite(2));
        assert_eq!(small_lambda(&r), LambdaValue::Finite(1));
        assert!(r.member(-1, 2));
        assert!(!r.member(0, 1));
    }

    #[test]
    fn intro_pair_t37_t213() {
        let f2 = RingTag::Fp(2);
        let r = exact(&t3(2, 1, f2), &t2(6, f2));
        assert_eq!(small_lambda(&r), LambdaValue::Finite(2));
        assert_eq!(small_lambda0(&r), LambdaValue::Finite(2));
    }

    #[test]
    fn empty_region_for_odd_pawn_gap() {
        let a = Decomposition {
            pawn: Pawn { s: 1 },
            knights: vec![],
            ring: RingTag::Q,
        };
        let r = exact(&a, &unknot(RingTag::Q));
        assert!(r.is_empty());
        assert_eq!(small_lambda(&r), LambdaValue::Infinite);
    }

    #[test]
    fn indeterminate_on_multiplicity() {
        let clash = Decomposition {
            pawn: Pawn { s: 0 },
            knights: vec![Knight { k: 1, i: 2, q0: 4 }, Knight { k: 2, i: 2, q0: 6 }],
            ring: RingTag::Q,
        };
        let out = lambda_region_structured(&clash, &unknot(RingTag::Q)).unwrap();
        match out {
            StructuredRegion::Indeterminate { inner, outer } => {
                assert!(inner.subset_of(&outer));
            }
            StructuredRegion::Exact(_) => panic!("expected bounds"),
        }
    }

    #[test]
    fn closed_forms() {
        let f2 = RingTag::Fp(2);
        for m in 1..=6u32 {
            let b = closed_form_lambda(&t2(m, f2), &unknot(f2)).unwrap();
            assert_eq!(b.lambda0_exact, Some((m as i64).max(1)));
            assert_eq!(b.lambda_exact, Some(1));
        }
        let b = closed_form_lambda(&t3(1, 1, f2), &unknot(f2)).unwrap();
        assert_eq!(b.lambda_exact, Some(2));
        assert_eq!(b.lambda0_exact, Some(3));
        let u = closed_form_lambda(&unknot(f2), &unknot(f2)).unwrap();
        assert_eq!(u.lambda0_exact, Some(0));
    }

    #[test]
    fn structured_agrees_with_closed_form_vs_unknot() {
        let f2 = RingTag::Fp(2);
        let ks = [t2(1, f2), t2(3, f2), t3(1, 1, f2), t3(2, 2, f2)];
        for d in &ks {
            let r = exact(d, &unknot(f2));
            let b = closed_form_lambda(d, &unknot(f2)).unwrap();
            assert_eq!(small_lambda(&r), LambdaValue::Finite(b.lambda_exact.unwrap()));
            assert_eq!(
                small_lambda0(&r),
                LambdaValue::Finite(b.lambda0_exact.unwrap())
            );
            // Λ(K; F) = V_𝔲 ∩ V(s/2, −s/2)
            let expected = Region::half_plane(d.umax() as i64)
                .intersect(&Region::quadrant(d.pawn.s / 2, -d.pawn.s / 2));
            assert_eq!(r, expected);
        }
    }
}
