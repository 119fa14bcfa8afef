//! Randomized cross-validation: the decomposition engine against basis
//! shuffles, the structured Λ engine against the brute-force oracle, and the
//! piece-level hom bases against chain-map linear algebra.

use proptest::prelude::*;

use gordian_core::gring::Monomial;
use gordian_core::lambda::{
    hom_basis, hom_class_dim, lambda_region_brute, lambda_region_structured, BruteCaps, Piece,
    StructuredRegion,
};
use gordian_core::pieces::{decompose, reassemble, Decomposition, Knight, Pawn};
use gordian_core::{FreeComplex, RingTag, Scalar};

fn arb_ring() -> impl Strategy<Value = RingTag> {
    prop_oneof![
        Just(RingTag::Z),
        Just(RingTag::Q),
        Just(RingTag::Fp(2)),
        Just(RingTag::Fp(3)),
        Just(RingTag::Fp(5)),
    ]
}

/// A decomposition with at most one piece per homological degree.
fn arb_multiplicity_free(ring: RingTag) -> impl Strategy<Value = Decomposition> {
    let knight = (1u32..=3, 0usize..6, -6i64..6).prop_map(|(k, slot, qhalf)| (k, slot, qhalf));
    (
        -4i64..=4,
        proptest::collection::vec(knight, 0..4),
    )
        .prop_map(move |(shalf, raw)| {
            // place knights in disjoint degree slots, away from the pawn
            let slots = [-5i64, -3, 1, 3, 5, 7];
            let mut used = std::collections::BTreeSet::new();
            let mut knights = Vec::new();
            for (k, slot, qhalf) in raw {
                if !used.insert(slot) {
                    continue;
                }
                knights.push(Knight {
                    k,
                    i: slots[slot],
                    q0: 2 * qhalf,
                });
            }
            knights.sort();
            Decomposition {
                pawn: Pawn { s: 2 * shalf },
                knights,
                ring,
            }
        })
}

/// Applies homogeneous elementary basis changes a ↦ a + c·G^j·b between
/// generators of equal homological degree; the result is isomorphic to the
/// input, hence must decompose into the same pieces.
fn shuffle(c: &FreeComplex, moves: &[(usize, usize, i64)]) -> FreeComplex {
    let mut w = c.clone();
    for &(ai, bi, coeff) in moves {
        let n = w.gens().len();
        if n < 2 {
            break;
        }
        let (a, b) = (ai % n, bi % n);
        if a == b {
            continue;
        }
        let (ga, gb) = (&w.gens()[a], &w.gens()[b]);
        if ga.t != gb.t || ga.q < gb.q || (ga.q - gb.q) % 2 != 0 {
            continue;
        }
        let j = ((ga.q - gb.q) / 2) as u32;
        let lam = Monomial::new(Scalar::from_i64(w.ring, coeff), j);
        if lam.is_zero() {
            continue;
        }
        // rows: d(a') = d(a) + λ·d(b)
        let brow: Vec<(usize, Monomial)> = w
            .diff
            .range((b, 0)..(b + 1, 0))
            .map(|(&(_, y), m)| (y, m.clone()))
            .collect();
        for (y, m) in brow {
            let corr = lam.mul(&m).unwrap();
            let slot = w
                .diff
                .entry((a, y))
                .or_insert_with(|| Monomial::zero(w.ring));
            *slot = slot.add(&corr).unwrap();
            if slot.is_zero() {
                w.diff.remove(&(a, y));
            }
        }
        // columns: [u][b] -= λ·[u][a]
        let into_a: Vec<(usize, Monomial)> = w
            .diff
            .iter()
            .filter(|(&(_, y), _)| y == a)
            .map(|(&(u, _), m)| (u, m.clone()))
            .collect();
        for (u, m) in into_a {
            let corr = lam.mul(&m).unwrap().neg();
            let slot = w
                .diff
                .entry((u, b))
                .or_insert_with(|| Monomial::zero(w.ring));
            *slot = slot.add(&corr).unwrap();
            if slot.is_zero() {
                w.diff.remove(&(u, b));
            }
        }
    }
    w
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn decompose_recovers_shuffled_pieces(
        ring in arb_ring(),
        d in arb_ring().prop_flat_map(arb_multiplicity_free),
        moves in proptest::collection::vec((0usize..8, 0usize..8, -2i64..=2), 0..10),
    ) {
        let d = Decomposition { ring, ..d };
        let c = shuffle(&reassemble(&d), &moves);
        c.validate().unwrap();
        let back = decompose(&c).unwrap();
        prop_assert_eq!(back.pawn, d.pawn);
        prop_assert_eq!(back.knights, d.knights);
    }

    #[test]
    fn engines_agree_on_random_pairs(
        p in prop_oneof![Just(2u64), Just(3u64)],
        d1 in arb_ring().prop_flat_map(arb_multiplicity_free),
        d2 in arb_ring().prop_flat_map(arb_multiplicity_free),
    ) {
        let ring = RingTag::Fp(p);
        let d1 = Decomposition { ring, ..d1 };
        let d2 = Decomposition { ring, ..d2 };
        let structured = match lambda_region_structured(&d1, &d2).unwrap() {
            StructuredRegion::Exact(r) => r,
            StructuredRegion::Indeterminate { .. } => unreachable!("inputs are multiplicity-free"),
        };
        let caps = BruteCaps { max_generators: 24, max_map_dim: 16 };
        let brute = lambda_region_brute(&reassemble(&d1), &reassemble(&d2), caps).unwrap();
        prop_assert_eq!(structured, brute);
    }

    #[test]
    fn hom_basis_matches_chain_map_classes(
        p in prop_oneof![Just(2u64), Just(3u64), Just(5u64)],
        src_knight in proptest::option::of((1u32..=3, -2i64..=2, -3i64..=3)),
        tgt_knight in proptest::option::of((1u32..=3, -2i64..=2, -3i64..=3)),
        qdeg in -8i64..=4,
    ) {
        let ring = RingTag::Fp(p);
        let piece = |spec: Option<(u32, i64, i64)>| match spec {
            None => Piece::Pawn(Pawn { s: 0 }),
            Some((k, i, qh)) => Piece::Knight(Knight { k, i, q0: 2 * qh }),
        };
        let (src, tgt) = (piece(src_knight), piece(tgt_knight));
        let as_complex = |p: Piece| -> FreeComplex {
            let d = Decomposition {
                pawn: Pawn { s: 0 },
                knights: vec![],
                ring,
            };
            match p {
                Piece::Pawn(pw) => reassemble(&Decomposition { pawn: pw, ..d }),
                Piece::Knight(n) => {
                    // a bare knight: drop the pawn generator afterwards
                    let full = reassemble(&Decomposition {
                        knights: vec![n],
                        ..d
                    });
                    let gens: Vec<_> = full
                        .gens()
                        .iter()
                        .filter(|g| g.id != "p")
                        .cloned()
                        .collect();
                    let entries = vec![(
                        "k0s".to_string(),
                        "k0t".to_string(),
                        Monomial::new(Scalar::one(ring), n.k),
                    )];
                    FreeComplex::new(ring, gens, entries).unwrap()
                }
            }
        };
        let expected = hom_basis(src, tgt, qdeg, ring).dim();
        let actual = hom_class_dim(&as_complex(src), &as_complex(tgt), qdeg);
        prop_assert_eq!(expected, actual, "src {:?} tgt {:?} qdeg {}", src, tgt, qdeg);
    }
}
