//! Homotopy classes of homogeneous chain maps between single pawn/knight
//! pieces. Components are monomials forced by the gradings; the classes are
//! free over the base ring with the bases listed here.

use crate::gring::RingTag;
use crate::pieces::{Knight, Pawn};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Piece {
    Pawn(Pawn),
    Knight(Knight),
}

/// One basis chain map: G-exponents of its components, keyed by the
/// homological degree of the source slot (coefficients are 1).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PieceMap {
    pub components: Vec<(i64, u32)>,
}

/// A basis of Hom(src, tgt) in one quantum degree, modulo nullhomotopy.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomotopyHomSpace {
    pub src: Piece,
    pub tgt: Piece,
    pub qdeg: i64,
    pub ring: RingTag,
    pub basis: Vec<PieceMap>,
}

impl HomotopyHomSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// Basis of homotopy classes of chain maps src → tgt of quantum degree
/// `qdeg`.
///
/// Hom(P(s), P(s')) is free on Gᵐ, m ≥ 0. Any hom space involving a knight
/// of order k is annihilated by Gᵏ, and pieces interact only at homological
/// offsets 0 and −1 (pawns see knights only through the slot in degree 0).
pub fn hom_basis(src: Piece, tgt: Piece, qdeg: i64, ring: RingTag) -> HomotopyHomSpace {
    let exp = |d: i64| -> Option<u32> {
        // q-degree bookkeeping: component exponent from the degree gap
        (d >= 0 && d % 2 == 0).then_some((d / 2) as u32)
    };
    let basis = match (src, tgt) {
        (Piece::Pawn(p), Piece::Pawn(p2)) => exp(p2.s - p.s - qdeg)
            .map(|m| PieceMap {
                components: vec![(0, m)],
            })
            .into_iter()
            .collect(),
        (Piece::Pawn(p), Piece::Knight(n)) => {
            // only a knight with target slot in degree 0 receives a pawn
            if n.i == -1 {
                exp(n.q0 + 2 * n.k as i64 - p.s - qdeg)
                    .filter(|&m| m < n.k)
                    .map(|m| PieceMap {
                        components: vec![(0, m)],
                    })
                    .into_iter()
                    .collect()
            } else {
                Vec::new()
            }
        }
        (Piece::Knight(n), Piece::Pawn(p)) => {
            if n.i == 0 {
                exp(p.s - n.q0 - qdeg)
                    .filter(|&m| m < n.k)
                    .map(|m| PieceMap {
                        components: vec![(0, m)],
                    })
                    .into_iter()
                    .collect()
            } else {
                Vec::new()
            }
        }
        (Piece::Knight(a), Piece::Knight(b)) => {
            if b.i == a.i {
                // aligned: tied components (Gᵐ, G^{m+l−k}) with
                // max(0, k−l) ≤ m < k
                exp(b.q0 - a.q0 - qdeg)
                    .filter(|&m| {
                        let m = m as i64;
                        m >= 0i64.max(a.k as i64 - b.k as i64) && m < a.k as i64
                    })
                    .map(|m| PieceMap {
                        components: vec![
                            (a.i, m),
                            (a.i + 1, (m as i64 + b.k as i64 - a.k as i64) as u32),
                        ],
                    })
                    .into_iter()
                    .collect()
            } else if b.i == a.i - 1 {
                // source slot of a hits the target slot of b
                exp(b.q0 + 2 * b.k as i64 - a.q0 - qdeg)
                    .filter(|&m| m < a.k.min(b.k))
                    .map(|m| PieceMap {
                        components: vec![(a.i, m)],
                    })
                    .into_iter()
                    .collect()
            } else {
                Vec::new()
            }
        }
    };
    HomotopyHomSpace {
        src,
        tgt,
        qdeg,
        ring,
        basis,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pawn(s: i64) -> Piece {
        Piece::Pawn(Pawn { s })
    }

    fn knight(k: u32, i: i64, q0: i64) -> Piece {
        Piece::Knight(Knight { k, i, q0 })
    }

    #[test]
    fn pawn_to_pawn_identity() {
        let h = hom_basis(pawn(0), pawn(0), 0, RingTag::Q);
        assert_eq!(h.dim(), 1);
        assert_eq!(h.basis[0].components, vec![(0, 0)]);
        // odd degree: empty
        assert_eq!(hom_basis(pawn(0), pawn(1), 0, RingTag::Q).dim(), 0);
        // positive exponent
        let h = hom_basis(pawn(2), pawn(0), -4, RingTag::Q);
        assert_eq!(h.basis[0].components, vec![(0, 1)]);
    }

    #[test]
    fn g_id_dies_on_g_knight() {
        let n = knight(1, 2, 6);
        assert_eq!(hom_basis(n, n, -2, RingTag::Q).dim(), 0);
        assert_eq!(hom_basis(n, n, 0, RingTag::Q).dim(), 1);
    }

    #[test]
    fn g_id_survives_on_g2_knight() {
        let n = knight(2, 4, 12);
        let h = hom_basis(n, n, -2, RingTag::Fp(2));
        assert_eq!(h.dim(), 1);
        assert_eq!(h.basis[0].components, vec![(4, 1), (5, 1)]);
        assert_eq!(hom_basis(n, n, -4, RingTag::Fp(2)).dim(), 0);
    }

    #[test]
    fn forced_matching_components() {
        // G²-knight to an aligned G-knight: the only class is (G, 1).
        let a = knight(2, 4, 18);
        let b = knight(1, 4, 20);
        let h = hom_basis(a, b, 0, RingTag::Fp(2));
        assert_eq!(h.dim(), 1);
        assert_eq!(h.basis[0].components, vec![(4, 1), (5, 0)]);
        assert_eq!(hom_basis(a, b, -2, RingTag::Fp(2)).dim(), 0);
        // and back: the class (1, G)
        let h = hom_basis(b, a, -2, RingTag::Fp(2));
        assert_eq!(h.dim(), 1);
        assert_eq!(h.basis[0].components, vec![(4, 0), (5, 1)]);
    }

    #[test]
    fn offsets_beyond_one_vanish() {
        let a = knight(1, 2, 6);
        let b = knight(1, 5, 9);
        for d in [-6i64, -4, -2, 0, 2] {
            assert_eq!(hom_basis(a, b, d, RingTag::Q).dim(), 0);
        }
        // +1 offset (source slot of b one above a's target) also vanishes
        let c = knight(1, 3, 9);
        for d in [-4i64, -2, 0] {
            assert_eq!(hom_basis(a, c, d, RingTag::Q).dim(), 0);
        }
    }
}
