//! Brute-force Λ over a finite field.
//!
//! For each candidate point (q₁, q₂) inside the torsion/Rasmussen window
//! the engine builds the finite-dimensional space of homogeneous chain maps
//! f of bidegree (0, −2q₁), quotients by null-homotopic maps, enumerates
//! coset representatives, and for each f solves the linear system for g with
//! g∘f ≡ Gⁿ·id and f∘g ≡ Gⁿ·id modulo boundaries. Membership holds iff any
//! pair (f, g) exists. The window itself comes from the torsion orders and
//! the stable homology degree, both computed by direct linear algebra on
//! the complexes (no pawn/knight bookkeeping).

use crate::complex::FreeComplex;
use crate::gring::{Monomial, RingTag, Scalar};
use crate::linalg::FieldMat;
use crate::{Error, Result};

use super::region::Region;

/// Enumeration caps for the oracle.
#[derive(Debug, Clone, Copy)]
pub struct BruteCaps {
    pub max_generators: usize,
    pub max_map_dim: usize,
}

impl Default for BruteCaps {
    fn default() -> Self {
        BruteCaps {
            max_generators: 24,
            max_map_dim: 16,
        }
    }
}

/// Λ(c1, c2) over 𝔽_p by exhaustive chain-map search.
pub fn lambda_region_brute(
    c1: &FreeComplex,
    c2: &FreeComplex,
    caps: BruteCaps,
) -> Result<Region> {
    let ring = c1.ring;
    if ring != c2.ring {
        return Err(Error::MixedRings);
    }
    let RingTag::Fp(p) = ring else {
        return Err(Error::NotAUnit("brute engine needs a finite field".into()));
    };
    let total = c1.gens().len() + c2.gens().len();
    if total > caps.max_generators {
        return Err(Error::CapExceeded {
            what: "generator count".into(),
            dim: total,
            cap: caps.max_generators,
        });
    }
    let (u1, s1) = torsion_and_s(c1)?;
    let (u2, s2) = torsion_and_s(c2)?;
    if (s1 - s2) % 2 != 0 {
        return Ok(Region::empty());
    }
    let (corner1, corner2) = ((s1 - s2) / 2, (s2 - s1) / 2);
    let kf = u1.max(u2) as i64;
    let mut out = Region::half_plane(kf).intersect(&Region::quadrant(corner1, corner2));
    for n in 0..kf {
        for q1 in corner1..=(n - corner2) {
            let q2 = n - q1;
            if brute_member(c1, c2, q1, q2, p, caps)? {
                out = out.union(&Region::quadrant(q1, q2));
            }
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Window data: torsion orders and the stable degree
// ---------------------------------------------------------------------------

/// (𝔲, s) of a complex over 𝔽_p: the maximal invariant G-exponent among the
/// differentials' Smith forms, and the generating quantum degree of the free
/// part of H₀.
fn torsion_and_s(c: &FreeComplex) -> Result<(u32, i64)> {
    let u = max_torsion_order(c);
    let s = stable_degree(c, u)?;
    Ok((u, s))
}

/// Maximal G-torsion order of homology = the maximal invariant exponent of
/// any differential matrix over F[G].
pub(crate) fn max_torsion_order(c: &FreeComplex) -> u32 {
    let ts: std::collections::BTreeSet<i64> = c.gens().iter().map(|g| g.t).collect();
    ts.into_iter()
        .flat_map(|t| monomial_invariant_exponents(c, t))
        .max()
        .unwrap_or(0)
}

/// Invariant G-exponents of the differential out of homological degree t,
/// via minimal-exponent pivoting (valid because the matrix is graded, so
/// fill-in never mixes exponents within a slot).
fn monomial_invariant_exponents(c: &FreeComplex, t: i64) -> Vec<u32> {
    let srcs: Vec<usize> = (0..c.gens().len()).filter(|&i| c.gens()[i].t == t).collect();
    let mut entries: std::collections::BTreeMap<(usize, usize), Monomial> = c
        .diff
        .iter()
        .filter(|(&(s, _), _)| srcs.contains(&s))
        .map(|(&k, m)| (k, m.clone()))
        .collect();
    let mut exps = Vec::new();
    while !entries.is_empty() {
        let (&(pi, pj), pm) = entries
            .iter()
            .min_by_key(|(&(i, j), m)| (m.gexp, i, j))
            .unwrap();
        let (pi, pj, pm) = (pi, pj, pm.clone());
        let inv = pm.coeff.inverse().expect("nonzero field scalar");
        // clear the column of pj
        let col: Vec<(usize, Monomial)> = entries
            .iter()
            .filter(|(&(i, j), _)| j == pj && i != pi)
            .map(|(&(i, _), m)| (i, m.clone()))
            .collect();
        for (i, m) in col {
            let lam = Monomial::new(m.coeff.mul(&inv).unwrap(), m.gexp - pm.gexp);
            let prow: Vec<(usize, Monomial)> = entries
                .range((pi, 0)..(pi + 1, 0))
                .map(|(&(_, j), m)| (j, m.clone()))
                .collect();
            for (j, pm2) in prow {
                let corr = lam.mul(&pm2).unwrap().neg();
                let slot = entries
                    .entry((i, j))
                    .or_insert_with(|| Monomial::zero(c.ring));
                *slot = slot.add(&corr).unwrap();
                if slot.is_zero() {
                    entries.remove(&(i, j));
                }
            }
        }
        // row of pi now only interacts with the pivot column at pi
        let row: Vec<(usize, usize)> = entries
            .range((pi, 0)..(pi + 1, 0))
            .map(|(&k, _)| k)
            .collect();
        for k in row {
            entries.remove(&k);
        }
        entries.retain(|&(i, j), _| i != pi && j != pj);
        exps.push(pm.gexp);
    }
    exps
}

/// The generating degree of the free part of H₀: the largest q where
/// multiplication by G^{u+1} still has nonzero rank on H₀.
fn stable_degree(c: &FreeComplex, u: u32) -> Result<i64> {
    let gens0: Vec<&crate::complex::Generator> =
        c.gens().iter().filter(|g| g.t == 0).collect();
    if gens0.is_empty() {
        return Err(Error::NoPawn("no generators in homological degree 0".into()));
    }
    let qmax = gens0.iter().map(|g| g.q).max().unwrap();
    let span = 2 * (c.gens().len() as i64 + u as i64 + 2);
    for q in ((qmax - span)..=qmax).rev() {
        if stable_rank(c, 0, q, u + 1) > 0 {
            return Ok(q);
        }
    }
    Err(Error::NoPawn("H0 has no free part".into()))
}

/// Rank of the map H_{t,q} → H_{t,q−2n} induced by multiplication by Gⁿ.
fn stable_rank(c: &FreeComplex, t: i64, q: i64, n: u32) -> usize {
    let src = slice_basis(c, t, q);
    let tgt = slice_basis(c, t, q - 2 * n as i64);
    if src.is_empty() || tgt.is_empty() {
        return 0;
    }
    let ring = c.ring;
    // kernel of d_t on the source slice, as vectors in the source basis
    let kernel = {
        let after = slice_basis(c, t + 1, q);
        let m = slice_matrix(c, &src, &after);
        // transpose into equations-by-unknowns form
        let mut mt = FieldMat::zero(ring, after.len(), src.len());
        for r in 0..src.len() {
            for cx in 0..after.len() {
                mt.set(cx, r, m.at(r, cx).clone());
            }
        }
        mt.kernel()
    };
    if kernel.is_empty() {
        return 0;
    }
    // image of d_{t−1} into the target slice
    let before = slice_basis(c, t - 1, q - 2 * n as i64);
    let image: Vec<Vec<Scalar>> = {
        let m = slice_matrix(c, &before, &tgt);
        (0..before.len())
            .map(|r| (0..tgt.len()).map(|cidx| m.at(r, cidx).clone()).collect())
            .collect()
    };
    // G^n sends source slice basis (gen, m) to target basis (gen, m + n)
    let shift: Vec<Vec<Scalar>> = kernel
        .iter()
        .map(|v| {
            let mut w = vec![Scalar::zero(ring); tgt.len()];
            for (si, &(gi, m)) in src.iter().enumerate() {
                if let Some(ti) = tgt.iter().position(|&(gj, mj)| gj == gi && mj == m + n) {
                    w[ti] = w[ti].add(&v[si]).unwrap();
                }
            }
            w
        })
        .collect();
    let base = crate::linalg::span_rank(ring, &image);
    let both: Vec<Vec<Scalar>> = image.into_iter().chain(shift).collect();
    crate::linalg::span_rank(ring, &both) - base
}

fn slice_basis(c: &FreeComplex, t: i64, q: i64) -> Vec<(usize, u32)> {
    c.gens()
        .iter()
        .enumerate()
        .filter(|(_, g)| g.t == t && g.q >= q && (g.q - q) % 2 == 0)
        .map(|(i, g)| (i, ((g.q - q) / 2) as u32))
        .collect()
}

fn slice_matrix(c: &FreeComplex, src: &[(usize, u32)], tgt: &[(usize, u32)]) -> FieldMat {
    let mut m = FieldMat::zero(c.ring, src.len(), tgt.len());
    for (r, &(si, sm)) in src.iter().enumerate() {
        for (&(_, ti), mon) in c.diff.range((si, 0)..(si + 1, 0)) {
            if let Some(cpos) = tgt
                .iter()
                .position(|&(gi, gm)| gi == ti && gm == sm + mon.gexp)
            {
                m.set(r, cpos, mon.coeff.clone());
            }
        }
    }
    m
}

// ---------------------------------------------------------------------------
// Chain-map spaces
// ---------------------------------------------------------------------------

/// Variables of a homogeneous map space c → c' of bidegree (dt, dq):
/// one per generator pair with matching degrees and nonnegative exponent.
#[derive(Debug, Clone)]
struct MapSpace {
    vars: Vec<(usize, usize, u32)>,
}

impl MapSpace {
    fn new(c: &FreeComplex, c2: &FreeComplex, dt: i64, dq: i64) -> MapSpace {
        let mut vars = Vec::new();
        for (i, g) in c.gens().iter().enumerate() {
            for (j, h) in c2.gens().iter().enumerate() {
                if h.t != g.t + dt {
                    continue;
                }
                let gap = h.q - g.q - dq;
                if gap >= 0 && gap % 2 == 0 {
                    vars.push((i, j, (gap / 2) as u32));
                }
            }
        }
        MapSpace { vars }
    }

    fn index(&self, i: usize, j: usize) -> Option<usize> {
        self.vars.iter().position(|&(a, b, _)| a == i && b == j)
    }
}

/// Rows of the chain-map condition d₂∘f − f∘d₁ = 0, one per generator pair
/// at consecutive degrees.
fn chain_condition(
    c1: &FreeComplex,
    c2: &FreeComplex,
    space: &MapSpace,
    ring: RingTag,
) -> FieldMat {
    let mut rows: Vec<Vec<(usize, Scalar)>> = Vec::new();
    for (i, g) in c1.gens().iter().enumerate() {
        for (j, h) in c2.gens().iter().enumerate() {
            let dt = space_dt(space, c1, c2);
            if h.t != g.t + dt + 1 {
                continue;
            }
            let mut row: Vec<(usize, Scalar)> = Vec::new();
            // (d₂ f)[i,j] = Σ_b f[i,b]·d₂[b,j]
            for (&(b, j2), m) in c2.diff.iter() {
                if j2 != j {
                    continue;
                }
                if let Some(v) = space.index(i, b) {
                    row.push((v, m.coeff.clone()));
                }
            }
            // −(f d₁)[i,j] = −Σ_a d₁[i,a]·f[a,j]
            for (&(i2, a), m) in c1.diff.iter() {
                if i2 != i {
                    continue;
                }
                if let Some(v) = space.index(a, j) {
                    row.push((v, m.coeff.neg()));
                }
            }
            if !row.is_empty() {
                rows.push(row);
            }
        }
    }
    let mut mat = FieldMat::zero(ring, rows.len(), space.vars.len());
    for (r, row) in rows.iter().enumerate() {
        for (v, s) in row {
            mat.add_to(r, *v, s);
        }
    }
    mat
}

fn space_dt(space: &MapSpace, c1: &FreeComplex, c2: &FreeComplex) -> i64 {
    space
        .vars
        .first()
        .map(|&(i, j, _)| c2.gens()[j].t - c1.gens()[i].t)
        .unwrap_or(0)
}

/// The coefficient vector of dh + hd in `f_space` coordinates, for the
/// homotopy variable `v` of `h_space`.
fn boundary_column(
    c1: &FreeComplex,
    c2: &FreeComplex,
    h_space: &MapSpace,
    f_space: &MapSpace,
    v: usize,
    ring: RingTag,
) -> Vec<Scalar> {
    let (i, j, _) = h_space.vars[v];
    let mut col = vec![Scalar::zero(ring); f_space.vars.len()];
    // d₂∘h: component i → j2 for each entry j → j2
    for (&(j1, j2), m) in c2.diff.iter() {
        if j1 != j {
            continue;
        }
        if let Some(t) = f_space.index(i, j2) {
            col[t] = col[t].add(&m.coeff).unwrap();
        }
    }
    // h∘d₁: component i1 → j for each entry i1 → i
    for (&(i1, i2), m) in c1.diff.iter() {
        if i2 != i {
            continue;
        }
        if let Some(t) = f_space.index(i1, j) {
            col[t] = col[t].add(&m.coeff).unwrap();
        }
    }
    col
}

/// All F_p-combinations of the given basis vectors (p^k of them).
struct CosetIter {
    basis: Vec<Vec<Scalar>>,
    ring: RingTag,
    p: u64,
    counter: u64,
    total: u64,
    len: usize,
}

impl Iterator for CosetIter {
    type Item = Vec<Scalar>;

    fn next(&mut self) -> Option<Vec<Scalar>> {
        if self.counter >= self.total {
            return None;
        }
        let mut v = vec![Scalar::zero(self.ring); self.len];
        let mut c = self.counter;
        for b in &self.basis {
            let digit = (c % self.p) as i64;
            c /= self.p;
            if digit != 0 {
                let d = Scalar::from_i64(self.ring, digit);
                for (slot, x) in v.iter_mut().zip(b) {
                    *slot = slot.add(&x.mul(&d).unwrap()).unwrap();
                }
            }
        }
        self.counter += 1;
        Some(v)
    }
}

/// Dimension of the space of homogeneous chain maps c1 → c2 of bidegree
/// (0, qdeg) modulo null-homotopic maps. Used as an independent oracle for
/// the piece-level hom bases.
pub fn hom_class_dim(c1: &FreeComplex, c2: &FreeComplex, qdeg: i64) -> usize {
    let ring = c1.ring;
    let f_space = MapSpace::new(c1, c2, 0, qdeg);
    let f_chain = chain_condition(c1, c2, &f_space, ring);
    let f_kernel = if f_space.vars.is_empty() {
        Vec::new()
    } else {
        f_chain.kernel()
    };
    let h_space = MapSpace::new(c1, c2, -1, qdeg);
    let boundaries: Vec<Vec<Scalar>> = (0..h_space.vars.len())
        .map(|v| boundary_column(c1, c2, &h_space, &f_space, v, ring))
        .collect();
    coset_basis(ring, &f_kernel, &boundaries, f_space.vars.len()).len()
}

fn brute_member(
    c1: &FreeComplex,
    c2: &FreeComplex,
    q1: i64,
    q2: i64,
    p: u64,
    caps: BruteCaps,
) -> Result<bool> {
    let ring = c1.ring;
    let n = (q1 + q2) as u32;
    let f_space = MapSpace::new(c1, c2, 0, -2 * q1);
    let g_space = MapSpace::new(c2, c1, 0, -2 * q2);
    // f chain maps modulo boundaries
    let f_chain = chain_condition(c1, c2, &f_space, ring);
    let f_kernel = if f_space.vars.is_empty() {
        Vec::new()
    } else {
        f_chain.kernel()
    };
    let hf_space = MapSpace::new(c1, c2, -1, -2 * q1);
    let f_boundaries: Vec<Vec<Scalar>> = (0..hf_space.vars.len())
        .map(|v| boundary_column(c1, c2, &hf_space, &f_space, v, ring))
        .collect();
    // complement of the boundary span inside the kernel
    let reps = coset_basis(ring, &f_kernel, &f_boundaries, f_space.vars.len());
    if reps.len() > caps.max_map_dim {
        return Err(Error::CapExceeded {
            what: "chain-map class dimension".into(),
            dim: reps.len(),
            cap: caps.max_map_dim,
        });
    }
    let total = (p as u128).pow(reps.len() as u32);
    let iter = CosetIter {
        basis: reps,
        ring,
        p,
        counter: 0,
        total: total as u64,
        len: f_space.vars.len(),
    };
    // the homotopy ambiguity of f is absorbed by the h1/h2 unknowns below,
    // so enumerating coset representatives suffices
    for f in iter {
        if solve_for_g(c1, c2, &f_space, &g_space, &f, n, ring)? {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Basis of a complement of span(boundaries) inside span(kernel).
fn coset_basis(
    ring: RingTag,
    kernel: &[Vec<Scalar>],
    boundaries: &[Vec<Scalar>],
    len: usize,
) -> Vec<Vec<Scalar>> {
    if len == 0 || kernel.is_empty() {
        return Vec::new();
    }
    let mut rows: Vec<Vec<Scalar>> = boundaries.to_vec();
    let mut picked = Vec::new();
    let mut rank = crate::linalg::span_rank(ring, &rows);
    for k in kernel {
        rows.push(k.clone());
        let r2 = crate::linalg::span_rank(ring, &rows);
        if r2 > rank {
            rank = r2;
            picked.push(k.clone());
        } else {
            rows.pop();
        }
    }
    picked
}

/// Solves the linear system for g (and homotopies h₁, h₂) such that
/// g∘f = Gⁿ·id + dh₁ + h₁d and f∘g = Gⁿ·id + dh₂ + h₂d.
fn solve_for_g(
    c1: &FreeComplex,
    c2: &FreeComplex,
    f_space: &MapSpace,
    g_space: &MapSpace,
    f: &[Scalar],
    n: u32,
    ring: RingTag,
) -> Result<bool> {
    let end1 = MapSpace::new(c1, c1, 0, -2 * n as i64);
    let end2 = MapSpace::new(c2, c2, 0, -2 * n as i64);
    let h1_space = MapSpace::new(c1, c1, -1, -2 * n as i64);
    let h2_space = MapSpace::new(c2, c2, -1, -2 * n as i64);
    let g_chain = chain_condition(c2, c1, g_space, ring);
    let nv_g = g_space.vars.len();
    let nv_h1 = h1_space.vars.len();
    let nv_h2 = h2_space.vars.len();
    let rows_chain = g_chain.rows;
    let rows_e1 = end1.vars.len();
    let rows_e2 = end2.vars.len();
    let mut mat = FieldMat::zero(ring, rows_chain + rows_e1 + rows_e2, nv_g + nv_h1 + nv_h2);
    let mut rhs = vec![Scalar::zero(ring); rows_chain + rows_e1 + rows_e2];
    for r in 0..rows_chain {
        for v in 0..nv_g {
            mat.set(r, v, g_chain.at(r, v).clone());
        }
    }
    // rows: (g f)[a,a'] − (dh₁ + h₁d)[a,a'] = δ(a,a')·1  in End(C1)
    for (r, &(a, ap, _)) in end1.vars.iter().enumerate() {
        let row = rows_chain + r;
        // Σ_b f[a,b]·g[b,a']
        for (fi, &(fa, fb, _)) in f_space.vars.iter().enumerate() {
            if fa != a || f[fi].is_zero() {
                continue;
            }
            if let Some(gv) = g_space.index(fb, ap) {
                mat.add_to(row, gv, &f[fi]);
            }
        }
        for hv in 0..nv_h1 {
            let col = boundary_column(c1, c1, &h1_space, &end1, hv, ring);
            let v = col[r].neg();
            mat.add_to(row, nv_g + hv, &v);
        }
        if a == ap {
            rhs[row] = Scalar::one(ring);
        }
    }
    // rows: (f g)[b,b'] − (dh₂ + h₂d)[b,b'] = δ(b,b')·1 in End(C2)
    for (r, &(b, bp, _)) in end2.vars.iter().enumerate() {
        let row = rows_chain + rows_e1 + r;
        for (gi, &(gb, ga, _)) in g_space.vars.iter().enumerate() {
            if gb != b {
                continue;
            }
            if let Some(fv) = f_space.index(ga, bp) {
                if !f[fv].is_zero() {
                    mat.add_to(row, gi, &f[fv]);
                }
            }
        }
        for hv in 0..nv_h2 {
            let col = boundary_column(c2, c2, &h2_space, &end2, hv, ring);
            let v = col[r].neg();
            mat.add_to(row, nv_g + nv_h1 + hv, &v);
        }
        if b == bp {
            rhs[row] = Scalar::one(ring);
        }
    }
    Ok(mat.solve(&rhs).is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pairing::two_bridge_complex;
    use crate::pieces::{reassemble, torus_decomposition, TorusParams};
    use crate::rational::Slope;

    fn f2() -> RingTag {
        RingTag::Fp(2)
    }

    fn complex_of(params: TorusParams, ring: RingTag) -> FreeComplex {
        reassemble(&torus_decomposition(params, ring, true).unwrap())
    }

    #[test]
    fn torsion_and_stable_degree() {
        let tre = two_bridge_complex(Slope::new(-3, 1).unwrap())
            .unwrap()
            .base_change(f2())
            .unwrap();
        let (u, s) = torsion_and_s(&tre).unwrap();
        assert_eq!((u, s), (1, 2));
        let t34 = complex_of(TorusParams::ThreeStrand { n: 1, i: 1 }, f2());
        let (u, s) = torsion_and_s(&t34).unwrap();
        assert_eq!((u, s), (2, 6));
        let unknot = complex_of(TorusParams::TwoStrand { m: 0 }, f2());
        assert_eq!(torsion_and_s(&unknot).unwrap(), (0, 0));
    }

    #[test]
    fn unknot_region() {
        let u = complex_of(TorusParams::TwoStrand { m: 0 }, f2());
        let r = lambda_region_brute(&u, &u, BruteCaps::default()).unwrap();
        assert_eq!(r, Region::quadrant(0, 0));
    }

    #[test]
    fn trefoil_vs_unknot_brute() {
        let tre = complex_of(TorusParams::TwoStrand { m: 1 }, f2());
        let u = complex_of(TorusParams::TwoStrand { m: 0 }, f2());
        let r = lambda_region_brute(&tre, &u, BruteCaps::default()).unwrap();
        let expected = Region::half_plane(1).intersect(&Region::quadrant(1, -1));
        assert_eq!(r, expected);
    }

    #[test]
    fn cap_exceeded() {
        let big = complex_of(TorusParams::TwoStrand { m: 6 }, f2());
        let caps = BruteCaps {
            max_generators: 4,
            max_map_dim: 16,
        };
        assert!(matches!(
            lambda_region_brute(&big, &big, caps),
            Err(Error::CapExceeded { .. })
        ));
    }
}
