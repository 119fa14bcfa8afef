//! Bigraded chain complexes of free R[G]-modules with monomial differentials.
//!
//! Differentials are homogeneous of bidegree (1,0): every nonzero entry
//! src → tgt satisfies t(tgt) = t(src) + 1 and q(tgt) = q(src) + 2·gexp,
//! which together with q(G) = −2 forces each entry to be a single monomial.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::gring::{GradedFreeModule, Monomial, RingTag, Scalar};
pub use crate::gring::Generator;
use crate::linalg::FieldMat;
use crate::{snf, Error, Result};

/// A chain complex of graded free R[G]-modules with monomial differential
/// entries, keyed by (source index, target index) into `module.gens`.
#[derive(Debug, Clone, PartialEq)]
pub struct FreeComplex {
    pub ring: RingTag,
    pub module: GradedFreeModule,
    pub diff: BTreeMap<(usize, usize), Monomial>,
}

/// Description of one homology group H_{t,q}: free rank plus torsion orders
/// over ℤ, or the dimension over a field (torsion empty).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologySlice {
    pub t: i64,
    pub q: i64,
    pub free_rank: usize,
    pub torsion_orders: Vec<BigInt>,
}

impl FreeComplex {
    pub fn new(
        ring: RingTag,
        gens: Vec<Generator>,
        entries: Vec<(String, String, Monomial)>,
    ) -> Result<FreeComplex> {
        let module = GradedFreeModule::new(gens)?;
        let mut diff = BTreeMap::new();
        for (src, tgt, m) in entries {
            if m.is_zero() {
                continue;
            }
            let si = module
                .index_of(&src)
                .ok_or_else(|| Error::SchemaError(format!("unknown generator {src}")))?;
            let ti = module
                .index_of(&tgt)
                .ok_or_else(|| Error::SchemaError(format!("unknown generator {tgt}")))?;
            if diff.insert((si, ti), m).is_some() {
                return Err(Error::SchemaError(format!("duplicate entry {src} -> {tgt}")));
            }
        }
        let c = FreeComplex { ring, module, diff };
        c.validate()?;
        Ok(c)
    }

    pub fn empty(ring: RingTag) -> FreeComplex {
        FreeComplex {
            ring,
            module: GradedFreeModule::default(),
            diff: BTreeMap::new(),
        }
    }

    /// A single free generator at bigrading (t, q).
    pub fn pawn_complex(ring: RingTag, t: i64, q: i64) -> FreeComplex {
        FreeComplex {
            ring,
            module: GradedFreeModule::new(vec![Generator {
                id: "p".into(),
                t,
                q,
            }])
            .unwrap(),
            diff: BTreeMap::new(),
        }
    }

    pub fn gens(&self) -> &[Generator] {
        &self.module.gens
    }

    /// Asserts homogeneity of the differential, exponent consistency, ring
    /// consistency and d² = 0.
    pub fn validate(&self) -> Result<()> {
        for (&(si, ti), m) in &self.diff {
            let (s, t) = (&self.module.gens[si], &self.module.gens[ti]);
            if m.is_zero() {
                return Err(Error::SchemaError(format!(
                    "stored zero entry {} -> {}",
                    s.id, t.id
                )));
            }
            if m.ring() != self.ring {
                return Err(Error::MixedRings);
            }
            if t.t != s.t + 1 || t.q != s.q + 2 * m.gexp as i64 {
                return Err(Error::GradingViolation {
                    src: s.id.clone(),
                    tgt: t.id.clone(),
                });
            }
        }
        // d² = 0: group composite terms by (source, final target).
        let mut square: BTreeMap<(usize, usize), Monomial> = BTreeMap::new();
        for (&(a, b), m1) in &self.diff {
            for (&(b2, c), m2) in self.diff.range((b, 0)..(b + 1, 0)) {
                debug_assert_eq!(b, b2);
                let prod = m2.mul(m1)?;
                let slot = square
                    .entry((a, c))
                    .or_insert_with(|| Monomial::zero(self.ring));
                *slot = slot.add(&prod)?;
            }
        }
        for ((a, c), m) in square {
            if !m.is_zero() {
                return Err(Error::NotAComplex {
                    src: self.module.gens[a].id.clone(),
                    tgt: self.module.gens[c].id.clone(),
                });
            }
        }
        Ok(())
    }

    fn order_key(&self, i: usize) -> (i64, i64, usize) {
        let g = &self.module.gens[i];
        (g.t, g.q, i)
    }

    /// Cancels unit entries of G-exponent 0 until none remain. The result is
    /// chain homotopy equivalent to the input. Entry selection scans sources,
    /// then targets, in (t, q, insertion-index) order, so the output is
    /// deterministic.
    pub fn gaussian_eliminate(&self) -> FreeComplex {
        let mut c = self.clone();
        loop {
            let mut order: Vec<usize> = (0..c.module.len()).collect();
            order.sort_by_key(|&i| c.order_key(i));
            let mut found: Option<(usize, usize)> = None;
            'scan: for &src in &order {
                let mut tgts: Vec<usize> = c
                    .diff
                    .range((src, 0)..(src + 1, 0))
                    .map(|(&(_, t), _)| t)
                    .collect();
                tgts.sort_by_key(|&i| c.order_key(i));
                for tgt in tgts {
                    let m = &c.diff[&(src, tgt)];
                    if m.gexp == 0 && m.coeff.is_unit() {
                        found = Some((src, tgt));
                        break 'scan;
                    }
                }
            }
            let Some((a, b)) = found else {
                return c;
            };
            c.cancel_pair(a, b);
        }
    }

    /// One Gaussian elimination step on the unit entry a → b, with the usual
    /// zig-zag correction d[x][y] -= d[x][b] · e⁻¹ · d[a][y].
    fn cancel_pair(&mut self, a: usize, b: usize) {
        let e = self.diff[&(a, b)].clone();
        let e_inv = e.coeff.inverse().expect("pivot must be a unit");
        debug_assert_eq!(e.gexp, 0);
        let into_b: Vec<(usize, Monomial)> = self
            .diff
            .iter()
            .filter(|(&(x, t), _)| t == b && x != a)
            .map(|(&(x, _), m)| (x, m.clone()))
            .collect();
        let from_a: Vec<(usize, Monomial)> = self
            .diff
            .range((a, 0)..(a + 1, 0))
            .filter(|(&(_, y), _)| y != b)
            .map(|(&(_, y), m)| (y, m.clone()))
            .collect();
        for (x, alpha) in &into_b {
            for (y, beta) in &from_a {
                let corr = alpha
                    .mul(&Monomial::new(e_inv.clone(), 0))
                    .unwrap()
                    .mul(beta)
                    .unwrap();
                let slot = self
                    .diff
                    .entry((*x, *y))
                    .or_insert_with(|| Monomial::zero(self.ring));
                *slot = slot.add(&corr.neg()).unwrap();
                if slot.is_zero() {
                    self.diff.remove(&(*x, *y));
                }
            }
        }
        self.remove_gens(&[a, b]);
    }

    fn remove_gens(&mut self, dead: &[usize]) {
        let mut remap = vec![usize::MAX; self.module.len()];
        let mut next = 0usize;
        for i in 0..self.module.len() {
            if !dead.contains(&i) {
                remap[i] = next;
                next += 1;
            }
        }
        let mut gens = Vec::with_capacity(next);
        for (i, g) in self.module.gens.iter().enumerate() {
            if remap[i] != usize::MAX {
                gens.push(g.clone());
            }
        }
        let diff = std::mem::take(&mut self.diff)
            .into_iter()
            .filter(|&((s, t), _)| remap[s] != usize::MAX && remap[t] != usize::MAX)
            .map(|((s, t), m)| ((remap[s], remap[t]), m))
            .collect();
        self.module = GradedFreeModule { gens };
        self.diff = diff;
    }

    /// The dual complex: gradings negated, differentials reversed.
    pub fn dualize(&self) -> FreeComplex {
        let gens = self
            .module
            .gens
            .iter()
            .map(|g| Generator {
                id: g.id.clone(),
                t: -g.t,
                q: -g.q,
            })
            .collect();
        let diff = self
            .diff
            .iter()
            .map(|(&(s, t), m)| ((t, s), m.clone()))
            .collect();
        FreeComplex {
            ring: self.ring,
            module: GradedFreeModule { gens },
            diff,
        }
    }

    /// Reduces an integral complex into the target ring, dropping entries
    /// that become zero.
    pub fn base_change(&self, target: RingTag) -> Result<FreeComplex> {
        if self.ring != RingTag::Z {
            return Err(Error::MixedRings);
        }
        let diff = self
            .diff
            .iter()
            .map(|(&k, m)| Ok((k, Monomial::new(m.coeff.into_ring(target)?, m.gexp))))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .filter(|(_, m): &((usize, usize), Monomial)| !m.is_zero())
            .collect();
        Ok(FreeComplex {
            ring: target,
            module: self.module.clone(),
            diff,
        })
    }

    pub fn shift(&self, dt: i64, dq: i64) -> FreeComplex {
        let gens = self
            .module
            .gens
            .iter()
            .map(|g| Generator {
                id: g.id.clone(),
                t: g.t + dt,
                q: g.q + dq,
            })
            .collect();
        FreeComplex {
            ring: self.ring,
            module: GradedFreeModule { gens },
            diff: self.diff.clone(),
        }
    }

    pub fn direct_sum(&self, other: &FreeComplex) -> Result<FreeComplex> {
        if self.ring != other.ring {
            return Err(Error::MixedRings);
        }
        let mut gens = self.module.gens.clone();
        let off = gens.len();
        gens.extend(other.module.gens.iter().cloned());
        let module = GradedFreeModule::new(gens)?;
        let mut diff = self.diff.clone();
        for (&(s, t), m) in &other.diff {
            diff.insert((s + off, t + off), m.clone());
        }
        Ok(FreeComplex {
            ring: self.ring,
            module,
            diff,
        })
    }

    /// Basis of the quantum-degree-q slice of the chain module in homological
    /// degree t: pairs (generator index, G-exponent m) with q(gen) − 2m = q.
    fn slice_basis(&self, t: i64, q: i64) -> Vec<(usize, u32)> {
        self.module
            .gens
            .iter()
            .enumerate()
            .filter(|(_, g)| g.t == t && g.q >= q && (g.q - q) % 2 == 0)
            .map(|(i, g)| (i, ((g.q - q) / 2) as u32))
            .collect()
    }

    /// The matrix of the differential restricted to the (t, q) slice, as rows
    /// indexed by the source slice basis and columns by the target basis.
    fn slice_matrix_z(&self, src: &[(usize, u32)], tgt: &[(usize, u32)]) -> snf::IMat {
        let mut m = snf::zeros(src.len(), tgt.len());
        for (r, &(si, sm)) in src.iter().enumerate() {
            for (&(s2, ti), mon) in self.diff.range((si, 0)..(si + 1, 0)) {
                debug_assert_eq!(s2, si);
                if let Some(cpos) = tgt.iter().position(|&(gi, gm)| gi == ti && gm == sm + mon.gexp)
                {
                    let Scalar::Int(v) = &mon.coeff else {
                        unreachable!()
                    };
                    m[r][cpos] = v.clone();
                }
            }
        }
        m
    }

    fn slice_matrix_field(&self, src: &[(usize, u32)], tgt: &[(usize, u32)]) -> FieldMat {
        let mut m = FieldMat::zero(self.ring, src.len(), tgt.len());
        for (r, &(si, sm)) in src.iter().enumerate() {
            for (&(_, ti), mon) in self.diff.range((si, 0)..(si + 1, 0)) {
                if let Some(cpos) = tgt.iter().position(|&(gi, gm)| gi == ti && gm == sm + mon.gexp)
                {
                    m.set(r, cpos, mon.coeff.clone());
                }
            }
        }
        m
    }

    /// Homology of the (t, q) slice: exact kernel-mod-image computation, via
    /// Smith normal form over ℤ or Gaussian elimination over a field.
    pub fn homology_slice(&self, t: i64, q: i64) -> HomologySlice {
        let here = self.slice_basis(t, q);
        let before = self.slice_basis(t - 1, q);
        let after = self.slice_basis(t + 1, q);
        if here.is_empty() {
            return HomologySlice {
                t,
                q,
                free_rank: 0,
                torsion_orders: Vec::new(),
            };
        }
        if self.ring == RingTag::Z {
            // d_t as a matrix here → after (rows: here), d_{t-1}: before → here.
            let a = self.slice_matrix_z(&here, &after); // rows=here
            let b = self.slice_matrix_z(&before, &here); // rows=before
            // Transpose to column-vector convention: ker of a^T acting on here.
            let at = transpose_z(&a, here.len(), after.len());
            let bt = transpose_z(&b, before.len(), here.len());
            let kernel = if after.is_empty() {
                (0..here.len())
                    .map(|i| {
                        let mut v = vec![BigInt::zero(); here.len()];
                        v[i] = BigInt::one();
                        v
                    })
                    .collect()
            } else {
                snf::kernel_basis(&at)
            };
            // Express each image vector in kernel coordinates.
            let img_cols: Vec<Vec<BigInt>> = (0..before.len())
                .map(|j| (0..here.len()).map(|i| bt[i][j].clone()).collect())
                .collect();
            let mut coords = Vec::new();
            for col in &img_cols {
                if col.iter().all(Zero::is_zero) {
                    continue;
                }
                let x = snf::solve_in_lattice(&kernel, col)
                    .expect("image must lie in the kernel of a valid complex");
                coords.push(x);
            }
            let k = kernel.len();
            let rows = coords.len();
            let mat: snf::IMat = (0..k)
                .map(|i| (0..rows).map(|r| coords[r][i].clone()).collect())
                .collect();
            let inv = if rows == 0 {
                Vec::new()
            } else {
                snf::smith_invariants(&mat)
            };
            let rank_im = inv.len();
            let torsion: Vec<BigInt> = inv.into_iter().filter(|d| !d.is_one()).collect();
            HomologySlice {
                t,
                q,
                free_rank: k - rank_im,
                torsion_orders: torsion,
            }
        } else {
            let a = self.slice_matrix_field(&here, &after);
            let b = self.slice_matrix_field(&before, &here);
            // rank-nullity: dim ker d_t − rank d_{t-1}
            let rank_a = if here.is_empty() || after.is_empty() {
                0
            } else {
                a.rank()
            };
            let rank_b = if before.is_empty() || here.is_empty() {
                0
            } else {
                b.rank()
            };
            HomologySlice {
                t,
                q,
                free_rank: here.len() - rank_a - rank_b,
                torsion_orders: Vec::new(),
            }
        }
    }

    /// (t, q) window covering all slices where the homology of this complex
    /// can differ from a stabilized pattern; used by invariance tests.
    pub fn support_window(&self) -> (std::ops::RangeInclusive<i64>, std::ops::RangeInclusive<i64>) {
        if self.module.is_empty() {
            return (0..=0, 0..=0);
        }
        let tmin = self.gens().iter().map(|g| g.t).min().unwrap();
        let tmax = self.gens().iter().map(|g| g.t).max().unwrap();
        let qmax = self.gens().iter().map(|g| g.q).max().unwrap();
        let qmin = self.gens().iter().map(|g| g.q).min().unwrap();
        let maxg = self.diff.values().map(|m| m.gexp as i64).max().unwrap_or(0);
        (tmin..=tmax, (qmin - 2 * (maxg + 2))..=qmax)
    }
}

fn transpose_z(m: &snf::IMat, rows: usize, cols: usize) -> snf::IMat {
    let mut t = snf::zeros(cols, rows);
    for i in 0..rows {
        for j in 0..cols {
            t[j][i] = m[i][j].clone();
        }
    }
    t
}

// ---------------------------------------------------------------------------
// JSON interchange
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
struct ComplexJson {
    ring: String,
    generators: Vec<GenJson>,
    diff: Vec<EntryJson>,
}

#[derive(Serialize, Deserialize)]
struct GenJson {
    id: String,
    t: i64,
    q: i64,
}

#[derive(Serialize, Deserialize)]
struct EntryJson {
    src: String,
    tgt: String,
    coeff: serde_json::Value,
    gexp: u32,
}

fn coeff_to_json(s: &Scalar) -> serde_json::Value {
    match s {
        Scalar::Int(a) => serde_json::Value::Number(
            serde_json::Number::from_string_unchecked(a.to_string()),
        ),
        Scalar::Rat(a) => {
            if a.denom().is_one() {
                serde_json::Value::Number(serde_json::Number::from_string_unchecked(
                    a.numer().to_string(),
                ))
            } else {
                serde_json::Value::String(format!("{}/{}", a.numer(), a.denom()))
            }
        }
        Scalar::Fp { v, .. } => serde_json::Value::Number((*v).into()),
    }
}

fn coeff_from_json(ring: RingTag, v: &serde_json::Value) -> Result<Scalar> {
    let parse_int = |s: &str| -> Result<BigInt> {
        s.parse()
            .map_err(|_| Error::SchemaError(format!("bad integer {s:?}")))
    };
    match v {
        serde_json::Value::Number(n) => {
            let a = parse_int(&n.to_string())?;
            Scalar::Int(a).into_ring(ring)
        }
        serde_json::Value::String(s) => {
            let (num, den) = s
                .split_once('/')
                .ok_or_else(|| Error::SchemaError(format!("bad coefficient {s:?}")))?;
            if ring != RingTag::Q {
                return Err(Error::SchemaError(
                    "fractional coefficient outside Q".into(),
                ));
            }
            let r = BigRational::new(parse_int(num)?, parse_int(den)?);
            Ok(Scalar::Rat(r))
        }
        _ => Err(Error::SchemaError("coefficient must be int or \"a/b\"".into())),
    }
}

impl FreeComplex {
    pub fn write_json(&self) -> String {
        let doc = ComplexJson {
            ring: self.ring.to_string(),
            generators: self
                .gens()
                .iter()
                .map(|g| GenJson {
                    id: g.id.clone(),
                    t: g.t,
                    q: g.q,
                })
                .collect(),
            diff: self
                .diff
                .iter()
                .map(|(&(s, t), m)| EntryJson {
                    src: self.gens()[s].id.clone(),
                    tgt: self.gens()[t].id.clone(),
                    coeff: coeff_to_json(&m.coeff),
                    gexp: m.gexp,
                })
                .collect(),
        };
        serde_json::to_string_pretty(&doc).expect("serialization cannot fail")
    }

    pub fn read_json(text: &str) -> Result<FreeComplex> {
        let doc: ComplexJson =
            serde_json::from_str(text).map_err(|e| Error::SchemaError(e.to_string()))?;
        let ring = RingTag::parse(&doc.ring)?;
        let gens = doc
            .generators
            .into_iter()
            .map(|g| Generator {
                id: g.id,
                t: g.t,
                q: g.q,
            })
            .collect();
        let entries = doc
            .diff
            .into_iter()
            .map(|e| Ok((e.src, e.tgt, Monomial::new(coeff_from_json(ring, &e.coeff)?, e.gexp))))
            .collect::<Result<Vec<_>>>()?;
        FreeComplex::new(ring, gens, entries)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zmon(c: i64, k: u32) -> Monomial {
        Monomial::new(Scalar::from_i64(RingTag::Z, c), k)
    }

    fn gen(id: &str, t: i64, q: i64) -> Generator {
        Generator {
            id: id.into(),
            t,
            q,
        }
    }

    /// The two-generator complex with differential (2, G) (source in q⁰ and
    /// q⁻², target q⁰ in the next degree).
    fn remark_3_3_c1(ring: RingTag) -> FreeComplex {
        let base = FreeComplex::new(
            RingTag::Z,
            vec![gen("x1", 0, 0), gen("x2", 0, -2), gen("y", 1, 0)],
            vec![
                ("x1".into(), "y".into(), zmon(2, 0)),
                ("x2".into(), "y".into(), zmon(1, 1)),
            ],
        )
        .unwrap();
        if ring == RingTag::Z {
            base
        } else {
            base.base_change(ring).unwrap()
        }
    }

    #[test]
    fn validate_rejects_odd_gap() {
        let err = FreeComplex::new(
            RingTag::Z,
            vec![gen("a", 0, 0), gen("b", 1, 1)],
            vec![("a".into(), "b".into(), zmon(1, 1))],
        )
        .unwrap_err();
        assert!(matches!(err, Error::GradingViolation { .. }));
    }

    #[test]
    fn validate_accepts_trivial() {
        assert!(FreeComplex::empty(RingTag::Z).validate().is_ok());
        assert!(FreeComplex::pawn_complex(RingTag::Q, 0, 0).validate().is_ok());
    }

    #[test]
    fn eliminate_unit_over_q_not_over_z() {
        let cq = remark_3_3_c1(RingTag::Q).gaussian_eliminate();
        assert_eq!(cq.gens().len(), 1);
        assert_eq!((cq.gens()[0].t, cq.gens()[0].q), (0, -2));
        assert!(cq.diff.is_empty());

        let cz = remark_3_3_c1(RingTag::Z).gaussian_eliminate();
        assert_eq!(cz.gens().len(), 3);
        assert_eq!(cz.diff.len(), 2);
    }

    #[test]
    fn eliminate_delooped_circle() {
        // Four generators with entries 1 and G out of the same source; the
        // unit edge cancels and leaves the q^{l+1} generator free.
        let c = FreeComplex::new(
            RingTag::Z,
            vec![gen("s", -1, -1), gen("a", 0, -1), gen("b", 0, 1), gen("p", 0, 5)],
            vec![
                ("s".into(), "a".into(), zmon(1, 0)),
                ("s".into(), "b".into(), zmon(1, 1)),
            ],
        )
        .unwrap();
        let e = c.gaussian_eliminate();
        let ids: Vec<&str> = e.gens().iter().map(|g| g.id.as_str()).collect();
        assert_eq!(ids, vec!["b", "p"]);
        assert!(e.diff.is_empty());
    }

    #[test]
    fn dualize_involution_and_pawn() {
        let c = remark_3_3_c1(RingTag::Z);
        assert_eq!(c.dualize().dualize(), c);
        let p = FreeComplex::pawn_complex(RingTag::Z, 0, 4).dualize();
        assert_eq!((p.gens()[0].t, p.gens()[0].q), (0, -4));
    }

    #[test]
    fn base_change_drops_even_entries() {
        let f2 = remark_3_3_c1(RingTag::Fp(2));
        assert_eq!(f2.diff.len(), 1);
        let q = remark_3_3_c1(RingTag::Q);
        assert_eq!(q.gens().len(), 3);
    }

    /// Trefoil complex: pawn (0,2), knight (2,6) --G--> (3,8).
    pub(crate) fn trefoil_z() -> FreeComplex {
        FreeComplex::new(
            RingTag::Z,
            vec![gen("p", 0, 2), gen("ks", 2, 6), gen("kt", 3, 8)],
            vec![("ks".into(), "kt".into(), zmon(1, 1))],
        )
        .unwrap()
    }

    #[test]
    fn trefoil_homology_slices() {
        let c = trefoil_z();
        let h38 = c.homology_slice(3, 8);
        assert_eq!((h38.free_rank, h38.torsion_orders.len()), (1, 0));
        let h36 = c.homology_slice(3, 6);
        assert_eq!((h36.free_rank, h36.torsion_orders.len()), (0, 0));
        let u = FreeComplex::pawn_complex(RingTag::Z, 0, 0);
        assert_eq!(u.homology_slice(0, 0).free_rank, 1);
    }

    #[test]
    fn torsion_detected_in_slices() {
        // x --2--> y gives H at the target slice = Z/2.
        let c = FreeComplex::new(
            RingTag::Z,
            vec![gen("x", 0, 0), gen("y", 1, 0)],
            vec![("x".into(), "y".into(), zmon(2, 0))],
        )
        .unwrap();
        let h = c.homology_slice(1, 0);
        assert_eq!(h.free_rank, 0);
        assert_eq!(h.torsion_orders, vec![BigInt::from(2)]);
    }

    #[test]
    fn elimination_preserves_homology() {
        let c = remark_3_3_c1(RingTag::Q);
        let e = c.gaussian_eliminate();
        let (ts, qs) = c.support_window();
        for t in ts {
            for q in qs.clone() {
                let a = c.homology_slice(t, q);
                let b = e.homology_slice(t, q);
                assert_eq!((a.free_rank, a.torsion_orders), (b.free_rank, b.torsion_orders));
            }
        }
    }

    #[test]
    fn dual_of_eliminate_matches_eliminate_of_dual() {
        let c = remark_3_3_c1(RingTag::Z);
        let lhs = c.gaussian_eliminate().dualize();
        let rhs = c.dualize().gaussian_eliminate();
        let (ts, qs) = lhs.support_window();
        for t in ts {
            for q in qs.clone() {
                let a = lhs.homology_slice(t, q);
                let b = rhs.homology_slice(t, q);
                assert_eq!((a.free_rank, a.torsion_orders), (b.free_rank, b.torsion_orders));
            }
        }
    }

    #[test]
    fn shift_and_sum() {
        let p = FreeComplex::pawn_complex(RingTag::Z, 0, 0);
        let s = p.shift(2, 6);
        assert_eq!((s.gens()[0].t, s.gens()[0].q), (2, 6));
        assert_eq!(p.shift(0, 0), p);
        let extra = FreeComplex::new(RingTag::Z, vec![gen("u", 0, 0)], vec![]).unwrap();
        let d = extra.direct_sum(&trefoil_z()).unwrap();
        assert_eq!(d.gens().len(), 4);
        d.validate().unwrap();
        assert!(p.direct_sum(&trefoil_z()).is_err()); // id clash

    }

    #[test]
    fn json_round_trip() {
        let c = trefoil_z();
        let text = c.write_json();
        let back = FreeComplex::read_json(&text).unwrap();
        assert_eq!(back, c);

        let q = remark_3_3_c1(RingTag::Q);
        let back = FreeComplex::read_json(&q.write_json()).unwrap();
        assert_eq!(back, q);

        assert!(FreeComplex::read_json("{\"ring\":\"Z\"}").is_err());
    }
}
