//! Pawn/knight decomposition of knot complexes, torsion-order profiles, and
//! closed-form complexes of 2- and 3-stranded torus knots.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::complex::{FreeComplex, Generator};
use crate::gring::{Monomial, RingTag, Scalar};
use crate::{Error, Result};

/// The free summand t⁰qˢ R[G]; s is the Rasmussen invariant over fields.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Pawn {
    pub s: i64,
}

/// A two-step summand t^i q^{q0} R[G] --G^k--> t^{i+1} q^{q0+2k} R[G].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Knight {
    pub k: u32,
    pub i: i64,
    pub q0: i64,
}

/// A complex split into one pawn and a multiset of knights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub pawn: Pawn,
    pub knights: Vec<Knight>,
    pub ring: RingTag,
}

/// Per-degree maximal G-torsion orders 𝔲_i and their maximum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorsionProfile {
    pub u: BTreeMap<i64, u32>,
    pub umax: u32,
}

impl Decomposition {
    /// Homological degrees occupied by each piece are pairwise disjoint.
    pub fn is_multiplicity_free(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        if !seen.insert(0i64) {
            return false;
        }
        for n in &self.knights {
            if !seen.insert(n.i) || !seen.insert(n.i + 1) {
                return false;
            }
        }
        true
    }

    /// Maximal knight order, i.e. the G-torsion order 𝔲 of the complex.
    pub fn umax(&self) -> u32 {
        self.knights.iter().map(|n| n.k).max().unwrap_or(0)
    }

    /// Decomposition of the mirror-image complex: gradings negate and each
    /// knight's source slot moves to the dual position.
    pub fn dualize(&self) -> Decomposition {
        let mut knights: Vec<Knight> = self
            .knights
            .iter()
            .map(|n| Knight {
                k: n.k,
                i: -n.i - 1,
                q0: -n.q0 - 2 * n.k as i64,
            })
            .collect();
        knights.sort();
        Decomposition {
            pawn: Pawn { s: -self.pawn.s },
            knights,
            ring: self.ring,
        }
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Doc<'a> {
            pawn: i64,
            knights: Vec<[i64; 3]>,
            ring: &'a str,
        }
        let doc = Doc {
            pawn: self.pawn.s,
            knights: self
                .knights
                .iter()
                .map(|n| [n.k as i64, n.i, n.q0])
                .collect(),
            ring: &self.ring.to_string(),
        };
        serde_json::to_string_pretty(&doc).expect("serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Decomposition> {
        #[derive(Deserialize)]
        struct Doc {
            pawn: i64,
            knights: Vec<[i64; 3]>,
            ring: String,
        }
        let doc: Doc =
            serde_json::from_str(text).map_err(|e| Error::SchemaError(e.to_string()))?;
        let mut knights = Vec::new();
        for [k, i, q0] in doc.knights {
            if k < 1 {
                return Err(Error::SchemaError("knight order must be >= 1".into()));
            }
            knights.push(Knight {
                k: k as u32,
                i,
                q0,
            });
        }
        knights.sort();
        Ok(Decomposition {
            pawn: Pawn { s: doc.pawn },
            knights,
            ring: RingTag::parse(&doc.ring)?,
        })
    }
}

/// Rebuilds the direct-sum complex described by a decomposition.
pub fn reassemble(d: &Decomposition) -> FreeComplex {
    let mut gens = vec![Generator {
        id: "p".into(),
        t: 0,
        q: d.pawn.s,
    }];
    let mut entries = Vec::new();
    for (j, n) in d.knights.iter().enumerate() {
        gens.push(Generator {
            id: format!("k{j}s"),
            t: n.i,
            q: n.q0,
        });
        gens.push(Generator {
            id: format!("k{j}t"),
            t: n.i + 1,
            q: n.q0 + 2 * n.k as i64,
        });
        entries.push((
            format!("k{j}s"),
            format!("k{j}t"),
            Monomial::new(Scalar::one(d.ring), n.k),
        ));
    }
    FreeComplex::new(d.ring, gens, entries).expect("decompositions are valid complexes")
}

/// Splits a knot complex into a pawn and knights by greedy minimal-exponent
/// pivoting with unit clearing. Over ℤ the pivot coefficient must be ±1;
/// otherwise the complex is reported as not split.
pub fn decompose(c: &FreeComplex) -> Result<Decomposition> {
    let mut w = c.gaussian_eliminate();
    let mut knights = Vec::new();
    while !w.diff.is_empty() {
        // Minimal G-exponent, ties by (t, q, index) of source then target.
        let mut best: Option<((usize, usize), u32)> = None;
        for (&(s, t), m) in &w.diff {
            let key = (m.gexp, w.gens()[s].t, w.gens()[s].q, s, w.gens()[t].q, t);
            let better = match best {
                None => true,
                Some(((bs, bt), bg)) => {
                    let bkey = (
                        bg,
                        w.gens()[bs].t,
                        w.gens()[bs].q,
                        bs,
                        w.gens()[bt].q,
                        bt,
                    );
                    key < bkey
                }
            };
            if better && m.coeff.is_unit() {
                best = Some(((s, t), m.gexp));
            }
        }
        // A non-unit entry of strictly smaller exponent blocks the split.
        let min_gexp = w.diff.values().map(|m| m.gexp).min().unwrap();
        match best {
            Some(((s, t), g)) if g == min_gexp => {
                pivot_out(&mut w, s, t);
                let (sg, tg) = (&w.gens()[s], &w.gens()[t]);
                debug_assert_eq!(tg.t, sg.t + 1);
                knights.push(Knight {
                    k: g,
                    i: sg.t,
                    q0: sg.q,
                });
                let (s_id, t_id) = (sg.id.clone(), tg.id.clone());
                let si = w.module.index_of(&s_id).unwrap();
                let ti = w.module.index_of(&t_id).unwrap();
                remove_two(&mut w, si, ti);
            }
            _ => {
                let culprit = w
                    .diff
                    .iter()
                    .find(|(_, m)| m.gexp == min_gexp)
                    .map(|(&(s, t), m)| {
                        format!("{} -> {} entry {}", w.gens()[s].id, w.gens()[t].id, m)
                    })
                    .unwrap_or_default();
                return Err(Error::NotSplit(culprit));
            }
        }
    }
    // Remaining generators are free; exactly one pawn in degree 0 expected.
    match w.gens().len() {
        0 => Err(Error::NoPawn("no generators survive".into())),
        1 => {
            let g = &w.gens()[0];
            if g.t != 0 {
                return Err(Error::NoPawn(format!(
                    "free generator sits in degree {} instead of 0",
                    g.t
                )));
            }
            knights.sort();
            Ok(Decomposition {
                pawn: Pawn { s: g.q },
                knights,
                ring: c.ring,
            })
        }
        _ => Err(Error::MultiplePawns),
    }
}

/// Clears the row and column of the pivot (s, t) by homogeneous basis
/// changes; afterwards the pair {s, t} is a detached knight summand.
fn pivot_out(w: &mut FreeComplex, s: usize, t: usize) {
    let pivot = w.diff[&(s, t)].clone();
    let inv = pivot.coeff.inverse().expect("pivot checked to be a unit");
    // Column: other entries s' → t. Basis change s' ← s' − λ·s with
    // λ = coeff·inv·G^{k'−k}; updates outgoing rows of s' and incoming
    // entries u → s.
    let column: Vec<(usize, Monomial)> = w
        .diff
        .iter()
        .filter(|(&(x, y), _)| y == t && x != s)
        .map(|(&(x, _), m)| (x, m.clone()))
        .collect();
    for (sp, entry) in column {
        debug_assert!(entry.gexp >= pivot.gexp);
        let lambda = Monomial::new(
            entry.coeff.mul(&inv).unwrap(),
            entry.gexp - pivot.gexp,
        );
        // d(sp) -= λ·d(s)
        let srow: Vec<(usize, Monomial)> = w
            .diff
            .range((s, 0)..(s + 1, 0))
            .map(|(&(_, y), m)| (y, m.clone()))
            .collect();
        for (y, m) in srow {
            let corr = lambda.mul(&m).unwrap().neg();
            upsert(w, (sp, y), &corr);
        }
        // incoming: d[u][s] += λ·d[u][sp]
        let incoming: Vec<(usize, Monomial)> = w
            .diff
            .iter()
            .filter(|(&(_, y), _)| y == sp)
            .map(|(&(u, _), m)| (u, m.clone()))
            .collect();
        for (u, m) in incoming {
            let corr = lambda.mul(&m).unwrap();
            upsert(w, (u, s), &corr);
        }
    }
    // Row: other entries s → t'. Basis change t ← t + μ·t'; updates entries
    // v → t' and outgoing rows of t.
    let row: Vec<(usize, Monomial)> = w
        .diff
        .range((s, 0)..(s + 1, 0))
        .filter(|(&(_, y), _)| y != t)
        .map(|(&(_, y), m)| (y, m.clone()))
        .collect();
    for (tp, entry) in row {
        debug_assert!(entry.gexp >= pivot.gexp);
        let mu = Monomial::new(entry.coeff.mul(&inv).unwrap(), entry.gexp - pivot.gexp);
        // d[v][tp] -= μ·d[v][t]
        let vcol: Vec<(usize, Monomial)> = w
            .diff
            .iter()
            .filter(|(&(_, y), _)| y == t)
            .map(|(&(v, _), m)| (v, m.clone()))
            .collect();
        for (v, m) in vcol {
            let corr = mu.mul(&m).unwrap().neg();
            upsert(w, (v, tp), &corr);
        }
        // d(t) += μ·d(tp)
        let trow: Vec<(usize, Monomial)> = w
            .diff
            .range((tp, 0)..(tp + 1, 0))
            .map(|(&(_, y), m)| (y, m.clone()))
            .collect();
        for (y, m) in trow {
            let corr = mu.mul(&m).unwrap();
            upsert(w, (t, y), &corr);
        }
    }
    // After clearing, d² = 0 forces the pivot pair to be fully detached.
    debug_assert!(w
        .diff
        .iter()
        .all(|(&(x, y), _)| !((y == t && x != s) || (x == s && y != t) || y == s || x == t)));
}

fn upsert(w: &mut FreeComplex, key: (usize, usize), m: &Monomial) {
    if m.is_zero() {
        return;
    }
    let slot = w
        .diff
        .entry(key)
        .or_insert_with(|| Monomial::zero(m.ring()));
    *slot = slot.add(m).unwrap();
    if slot.is_zero() {
        w.diff.remove(&key);
    }
}

fn remove_two(w: &mut FreeComplex, a: usize, b: usize) {
    let keep: Vec<Generator> = w
        .gens()
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != a && *i != b)
        .map(|(_, g)| g.clone())
        .collect();
    let mut remap = vec![usize::MAX; w.gens().len()];
    let mut next = 0;
    for i in 0..w.gens().len() {
        if i != a && i != b {
            remap[i] = next;
            next += 1;
        }
    }
    w.diff = std::mem::take(&mut w.diff)
        .into_iter()
        .filter(|&((s, t), _)| remap[s] != usize::MAX && remap[t] != usize::MAX)
        .map(|((s, t), m)| ((remap[s], remap[t]), m))
        .collect();
    w.module = crate::gring::GradedFreeModule { gens: keep };
}

/// The per-degree torsion profile of a decomposition: 𝔲_{i+1} = max k over
/// knights with source degree i.
pub fn torsion_profile(d: &Decomposition) -> TorsionProfile {
    let mut u = BTreeMap::new();
    for n in &d.knights {
        let slot = u.entry(n.i + 1).or_insert(0u32);
        *slot = (*slot).max(n.k);
    }
    let umax = u.values().copied().max().unwrap_or(0);
    TorsionProfile { u, umax }
}

impl TorsionProfile {
    pub fn order_at(&self, i: i64) -> u32 {
        self.u.get(&i).copied().unwrap_or(0)
    }

    /// max_i |𝔲_i(self) − 𝔲_i(other)|
    pub fn max_gap(&self, other: &TorsionProfile) -> u32 {
        let keys: std::collections::BTreeSet<i64> =
            self.u.keys().chain(other.u.keys()).copied().collect();
        keys.into_iter()
            .map(|i| self.order_at(i).abs_diff(other.order_at(i)))
            .max()
            .unwrap_or(0)
    }
}

/// Parameters of the built-in torus-knot complexes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TorusParams {
    /// T(2, 2m+1), m ≥ 0.
    TwoStrand { m: u32 },
    /// T(3, 3n+i), n ≥ 1, i ∈ {1, 2}.
    ThreeStrand { n: u32, i: u32 },
}

/// Closed-form torus-knot complexes as decompositions.
///
/// The 2-strand family is integral, so every ring is obtained by base
/// change. The 3-strand family is established over 𝔽₂ and ℚ; other rings
/// are only emitted when `conjectural` is set.
pub fn torus_decomposition(
    params: TorusParams,
    ring: RingTag,
    conjectural: bool,
) -> Result<Decomposition> {
    match params {
        TorusParams::TwoStrand { m } => {
            let m = m as i64;
            let knights = (0..m)
                .map(|k| Knight {
                    k: 1,
                    i: 2 * k + 2,
                    q0: 2 * m + 4 * k + 4,
                })
                .collect();
            Ok(Decomposition {
                pawn: Pawn { s: 2 * m },
                knights,
                ring,
            })
        }
        TorusParams::ThreeStrand { n, i } => {
            if n < 1 || !(i == 1 || i == 2) {
                return Err(Error::BadParams(format!("T(3, 3·{n}+{i})")));
            }
            if !(ring == RingTag::Fp(2) || ring == RingTag::Q) && !conjectural {
                return Err(Error::ConjecturalRing);
            }
            let (n, i) = (n as i64, i as i64);
            let mut knights = Vec::new();
            for k in 0..=(n + i - 2) {
                knights.push(Knight {
                    k: 1,
                    i: 4 * k + 2,
                    q0: 6 * (n + k) + 2 * i + 2,
                });
            }
            for h in 0..n {
                knights.push(Knight {
                    k: 2,
                    i: 4 * h + 4,
                    q0: 6 * (n + h) + 2 * i + 4,
                });
            }
            knights.sort();
            Ok(Decomposition {
                pawn: Pawn {
                    s: 6 * n + 2 * (i - 1),
                },
                knights,
                ring,
            })
        }
    }
}

/// The torus-knot complex as a `FreeComplex` over the requested ring.
pub fn torus_complex(params: TorusParams, ring: RingTag, conjectural: bool) -> Result<FreeComplex> {
    Ok(reassemble(&torus_decomposition(params, ring, conjectural)?))
}

/// Parses "T(a,b)"-style parameters from strand count and index.
pub fn torus_params(strands: u32, b: u32) -> Result<TorusParams> {
    match strands {
        2 => {
            if b % 2 == 0 || b < 1 {
                return Err(Error::BadParams(format!("T(2,{b}) is not a knot")));
            }
            Ok(TorusParams::TwoStrand { m: (b - 1) / 2 })
        }
        3 => {
            if b % 3 == 0 || b < 4 {
                return Err(Error::BadParams(format!("T(3,{b}) is out of range")));
            }
            Ok(TorusParams::ThreeStrand { n: b / 3, i: b % 3 })
        }
        _ => Err(Error::BadParams(format!(
            "torus knots on {strands} strands are not built in"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pairing::two_bridge_complex;
    use crate::rational::Slope;

    fn t2(m: u32, ring: RingTag) -> Decomposition {
        torus_decomposition(TorusParams::TwoStrand { m }, ring, false).unwrap()
    }

    fn t3(n: u32, i: u32, ring: RingTag) -> Decomposition {
        torus_decomposition(TorusParams::ThreeStrand { n, i }, ring, false).unwrap()
    }

    #[test]
    fn trefoil_decomposes() {
        let c = two_bridge_complex(Slope::new(-3, 1).unwrap()).unwrap();
        let d = decompose(&c).unwrap();
        assert_eq!(d.pawn.s, 2);
        assert_eq!(d.knights, vec![Knight { k: 1, i: 2, q0: 6 }]);
    }

    #[test]
    fn non_split_over_z() {
        let c = FreeComplex::new(
            RingTag::Z,
            vec![
                Generator { id: "x1".into(), t: 0, q: 0 },
                Generator { id: "x2".into(), t: 0, q: -2 },
                Generator { id: "y".into(), t: 1, q: 0 },
            ],
            vec![
                ("x1".into(), "y".into(), Monomial::new(Scalar::from_i64(RingTag::Z, 2), 0)),
                ("x2".into(), "y".into(), Monomial::new(Scalar::from_i64(RingTag::Z, 1), 1)),
            ],
        )
        .unwrap();
        assert!(matches!(decompose(&c), Err(Error::NotSplit(_))));
        // over Q the unit 2 cancels first and the complex splits
        let d = decompose(&c.base_change(RingTag::Q).unwrap()).unwrap();
        assert_eq!(d.pawn.s, -2);
        assert!(d.knights.is_empty());
    }

    #[test]
    fn torus_builders() {
        let d = t2(1, RingTag::Z);
        assert_eq!(d.pawn.s, 2);
        assert_eq!(d.knights, vec![Knight { k: 1, i: 2, q0: 6 }]);

        let d = t2(0, RingTag::Z);
        assert_eq!(d.pawn.s, 0);
        assert!(d.knights.is_empty());

        let d = t3(1, 1, RingTag::Fp(2));
        assert_eq!(d.pawn.s, 6);
        assert_eq!(
            d.knights,
            vec![Knight { k: 1, i: 2, q0: 10 }, Knight { k: 2, i: 4, q0: 12 }]
        );

        assert_eq!(
            torus_decomposition(TorusParams::ThreeStrand { n: 1, i: 1 }, RingTag::Z, false),
            Err(Error::ConjecturalRing)
        );
        assert!(torus_decomposition(TorusParams::ThreeStrand { n: 1, i: 1 }, RingTag::Z, true).is_ok());
    }

    #[test]
    fn torus_params_parse() {
        assert_eq!(torus_params(2, 7).unwrap(), TorusParams::TwoStrand { m: 3 });
        assert_eq!(
            torus_params(3, 8).unwrap(),
            TorusParams::ThreeStrand { n: 2, i: 2 }
        );
        assert!(torus_params(2, 4).is_err());
        assert!(torus_params(3, 6).is_err());
        assert!(torus_params(5, 6).is_err());
    }

    #[test]
    fn two_bridge_equals_closed_form() {
        for m in 0..=10u32 {
            let s = Slope::new(-(2 * m as i64 + 1), 1).unwrap();
            let c = two_bridge_complex(s).unwrap();
            let d = decompose(&c).unwrap();
            assert_eq!(d, t2(m, RingTag::Z), "m = {m}");
        }
    }

    #[test]
    fn torsion_profiles() {
        let p37 = torsion_profile(&t3(2, 1, RingTag::Fp(2)));
        assert_eq!(p37.order_at(3), 1);
        assert_eq!(p37.order_at(5), 2);
        assert_eq!(p37.order_at(7), 1);
        assert_eq!(p37.order_at(9), 2);
        let p213 = torsion_profile(&t2(6, RingTag::Fp(2)));
        for k in 0..6i64 {
            assert_eq!(p213.order_at(2 * k + 3), 1);
        }
        assert_eq!(p37.max_gap(&p213), 1);

        let unknot = torsion_profile(&t2(0, RingTag::Z));
        assert_eq!(unknot.umax, 0);
        assert!(unknot.u.is_empty());

        let tref = torsion_profile(&t2(1, RingTag::Z));
        assert_eq!(tref.order_at(3), 1);
        assert_eq!(tref.umax, 1);
    }

    #[test]
    fn reassembly_preserves_homology() {
        for d in [t2(2, RingTag::Z), t3(1, 2, RingTag::Fp(2))] {
            let c = reassemble(&d);
            c.validate().unwrap();
            let d2 = decompose(&c).unwrap();
            assert_eq!(d2, d);
        }
        // reassemble ∘ decompose preserves homology slices of a closure
        let c = two_bridge_complex(Slope::new(-5, 1).unwrap()).unwrap();
        let r = reassemble(&decompose(&c).unwrap());
        let (ts, qs) = c.support_window();
        for t in ts {
            for q in qs.clone() {
                let a = c.homology_slice(t, q);
                let b = r.homology_slice(t, q);
                assert_eq!(
                    (a.free_rank, a.torsion_orders),
                    (b.free_rank, b.torsion_orders)
                );
            }
        }
    }

    #[test]
    fn closures_split_over_every_ring() {
        // base change of a split complex decomposes into the same pieces
        for (p, q) in [(-7i64, 1i64), (9, 5), (-11, 7)] {
            let c = two_bridge_complex(Slope::new(p, q).unwrap()).unwrap();
            let dz = decompose(&c).unwrap();
            for ring in [RingTag::Q, RingTag::Fp(2), RingTag::Fp(3)] {
                let d = decompose(&c.base_change(ring).unwrap()).unwrap();
                assert_eq!(d.pawn, dz.pawn, "{p}/{q} over {ring}");
                assert_eq!(d.knights, dz.knights, "{p}/{q} over {ring}");
                assert!(d.knights.iter().all(|n| n.k == 1));
            }
        }
    }

    #[test]
    fn decomposition_dual_matches_complex_dual() {
        for d in [t2(3, RingTag::Z), t3(2, 1, RingTag::Fp(2))] {
            let via_complex = decompose(&reassemble(&d).dualize()).unwrap();
            assert_eq!(via_complex, d.dualize());
            assert_eq!(d.dualize().dualize(), d);
        }
    }

    #[test]
    fn multiplicity_free_flags() {
        assert!(t3(2, 1, RingTag::Fp(2)).is_multiplicity_free());
        let clash = Decomposition {
            pawn: Pawn { s: 0 },
            knights: vec![Knight { k: 1, i: 2, q0: 4 }, Knight { k: 2, i: 2, q0: 6 }],
            ring: RingTag::Q,
        };
        assert!(!clash.is_multiplicity_free());
    }

    #[test]
    fn g_zero_specialization_is_thin() {
        // With G = 0 the knight differentials vanish, so the slot degrees of
        // the 3-strand complexes must be pairwise distinct.
        for n in 1..=5u32 {
            for i in 1..=2u32 {
                assert!(t3(n, i, RingTag::Fp(2)).is_multiplicity_free(), "T(3,{})", 3 * n + i);
            }
        }
    }

    #[test]
    fn decomposition_json_round_trip() {
        let d = t3(2, 2, RingTag::Fp(2));
        let back = Decomposition::from_json(&d.to_json()).unwrap();
        assert_eq!(back, d);
    }
}
