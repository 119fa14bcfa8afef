//! The 0-closure and internal-hom engine.
//!
//! `mor_complex` computes Mor(C₁, C₂) between graded zigzag complexes as a
//! free ℤ[G]-complex: one generator per (object of C₁, object of C₂, corner
//! basis path), with the differential (d₂ ∘ f, (−1)^{k+1} f ∘ d₁).
//! `zero_closure` specializes C₁ to the single object • and applies the
//! quantum shift by +1, producing the Bar-Natan complex of the 2-bridge knot
//! Q_{p/q}(0).

use crate::complex::{FreeComplex, Generator};
use crate::gring::{Monomial, RingTag};
use crate::quiver::{b_mul, hom_coordinates, hom_module_basis, BElement, Vertex};
use crate::rational::{connectivity, graded_zz, Connectivity, Slope, ZigzagComplex};
use crate::{Error, Result};

/// The internal hom Mor(c1, c2) as a free ℤ[G]-complex. A generator
/// (a, b, π) has t = t(b) − t(a) and q = q(b) − q(a) + q(π).
pub fn mor_complex(c1: &ZigzagComplex, c2: &ZigzagComplex) -> Result<FreeComplex> {
    if !c1.is_graded() || !c2.is_graded() {
        return Err(Error::Ungraded);
    }
    // Generator bookkeeping: ids carry (a, b, basis position).
    let mut gens = Vec::new();
    let mut index = std::collections::HashMap::new();
    for (ai, a) in c1.objects.iter().enumerate() {
        for (bi, b) in c2.objects.iter().enumerate() {
            let (basis, qdegs) = hom_module_basis(a.vertex, b.vertex);
            for (pi, qd) in qdegs.iter().enumerate().take(basis.len()) {
                let id = format!("m{ai}.{bi}.{pi}");
                index.insert((ai, bi, pi), gens.len());
                gens.push(Generator {
                    id,
                    t: b.t.unwrap() - a.t.unwrap(),
                    q: b.q.unwrap() - a.q.unwrap() + qd,
                });
            }
        }
    }
    let mut entries: Vec<(usize, usize, Monomial)> = Vec::new();
    let mut add_entry = |src: usize, tgt: usize, m: Monomial| {
        if !m.is_zero() {
            entries.push((src, tgt, m));
        }
    };
    for (ai, a) in c1.objects.iter().enumerate() {
        for (bi, b) in c2.objects.iter().enumerate() {
            let (basis, _) = hom_module_basis(a.vertex, b.vertex);
            let k = b.t.unwrap() - a.t.unwrap();
            for (pi, path) in basis.iter().enumerate() {
                let src = index[&(ai, bi, pi)];
                let f = BElement::from_path(*path);
                // Post-compose with each differential of c2 out of b.
                for arrow in c2.arrows.iter().filter(|ar| ar.from == bi) {
                    let prod = b_mul(&arrow.label.element(), &f);
                    let coords =
                        hom_coordinates(&prod, a.vertex, c2.objects[arrow.to].vertex)?;
                    for (ri, mon) in coords.into_iter().enumerate() {
                        add_entry(src, index[&(ai, arrow.to, ri)], mon);
                    }
                }
                // Pre-compose with each differential of c1 into a, with the
                // sign (−1)^{k+1}.
                for arrow in c1.arrows.iter().filter(|ar| ar.to == ai) {
                    let prod = b_mul(&f, &arrow.label.element());
                    let coords =
                        hom_coordinates(&prod, c1.objects[arrow.from].vertex, b.vertex)?;
                    let sign = if (k + 1) % 2 == 0 { 1 } else { -1 };
                    for (ri, mon) in coords.into_iter().enumerate() {
                        let mon = if sign < 0 { mon.neg() } else { mon };
                        add_entry(src, index[&(arrow.from, bi, ri)], mon);
                    }
                }
            }
        }
    }
    let entries = entries
        .into_iter()
        .map(|(s, t, m)| (gens[s].id.clone(), gens[t].id.clone(), m))
        .collect();
    FreeComplex::new(RingTag::Z, gens, entries)
}

/// Bar-Natan complex of the 0-closure Q_{p/q}(0): the internal hom from the
/// single • object, shifted by q¹, then reduced by Gaussian elimination.
pub fn zero_closure(z: &ZigzagComplex, s: Slope) -> Result<FreeComplex> {
    if connectivity(s) != Connectivity::X {
        return Err(Error::NotAKnotClosure(s.p(), s.q()));
    }
    let point = ZigzagComplex::single(Vertex::Bullet, 0, 0);
    let m = mor_complex(&point, z)?;
    Ok(m.shift(0, 1).gaussian_eliminate())
}

/// Convenience: the 2-bridge knot complex of a slope, over ℤ.
pub fn two_bridge_complex(s: Slope) -> Result<FreeComplex> {
    let z = graded_zz(s)?;
    zero_closure(&z, s)
}
