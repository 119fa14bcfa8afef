//! The acceptance suite: one callable check per shipping criterion, shared
//! by the `acceptance` integration test and the CLI `selftest` subcommand.
//! Every tolerance here is exact.

use std::fmt;

use crate::complex::FreeComplex;
use crate::gring::RingTag;
use crate::lambda::{
    closed_form_lambda, lambda_region_brute, lambda_region_structured, small_lambda,
    small_lambda0, BruteCaps, LambdaValue, Region, StructuredRegion,
};
use crate::obstruct::{admissible, alpha, beta, positive_crossing_bound};
use crate::pairing::{mor_complex, two_bridge_complex};
use crate::pieces::{
    decompose, reassemble, torsion_profile, torus_decomposition, Decomposition,
    TorusParams,
};
use crate::rational::{
    connectivity, graded_zz, two_bridge_signature, zz, ArrowLabel, Connectivity, Slope,
};
use crate::Vertex;
use num_integer::Integer;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Passed,
    Failed(String),
    Skipped(String),
}

#[derive(Debug, Clone)]
pub struct CriterionResult {
    pub id: usize,
    pub name: &'static str,
    pub outcome: Outcome,
}

impl fmt::Display for CriterionResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.line())
    }
}

impl CriterionResult {
    pub fn passed(&self) -> bool {
        !matches!(self.outcome, Outcome::Failed(_))
    }

    pub fn line(&self) -> String {
        match &self.outcome {
            Outcome::Passed => format!("criterion {:>2} PASS  {}", self.id, self.name),
            Outcome::Failed(m) => format!("criterion {:>2} FAIL  {}: {}", self.id, self.name, m),
            Outcome::Skipped(m) => {
                format!("criterion {:>2} PASS  {} (optional part skipped: {})", self.id, self.name, m)
            }
        }
    }
}

type Check = fn() -> Result<Option<String>, String>;

fn run(id: usize, name: &'static str, f: Check) -> CriterionResult {
    let outcome = match f() {
        Ok(None) => Outcome::Passed,
        Ok(Some(skip)) => Outcome::Skipped(skip),
        Err(m) => Outcome::Failed(m),
    };
    CriterionResult { id, name, outcome }
}

/// Runs the whole suite in order.
pub fn run_all() -> Vec<CriterionResult> {
    vec![
        run(1, "zigzag golden zz(3/2)", crit1_zigzag_golden),
        run(2, "signature loop |p|,|q| <= 21", crit2_signature_loop),
        run(3, "two-bridge closures vs closed form", crit3_two_bridge_closed_form),
        run(4, "torus pair classification over F2", crit4_classification),
        run(5, "trefoil region and verdicts", crit5_trefoil_region),
        run(6, "intro distances", crit6_intro_numbers),
        run(7, "mixed torus rows over Q", crit7_table_rows),
        run(8, "oracle agreement structured vs brute", crit8_oracle_agreement),
        run(9, "property suites", crit9_property_suites),
        run(10, "obstruction suite", crit10_obstruction_suite),
    ]
}

fn err(msg: String) -> Result<Option<String>, String> {
    Err(msg)
}

fn slope(p: i64, q: i64) -> Slope {
    Slope::new(p, q).expect("acceptance slopes are reduced")
}

fn f2() -> RingTag {
    RingTag::Fp(2)
}

fn t2(m: u32, ring: RingTag) -> Decomposition {
    torus_decomposition(TorusParams::TwoStrand { m }, ring, false).unwrap()
}

fn t3(n: u32, i: u32, ring: RingTag) -> Decomposition {
    torus_decomposition(TorusParams::ThreeStrand { n, i }, ring, false).unwrap()
}

fn exact_region(d1: &Decomposition, d2: &Decomposition) -> Result<Region, String> {
    match lambda_region_structured(d1, d2).map_err(|e| e.to_string())? {
        StructuredRegion::Exact(r) => Ok(r),
        StructuredRegion::Indeterminate { .. } => {
            Err("structured engine returned bounds on a built-in pair".into())
        }
    }
}

fn lam(v: LambdaValue) -> i64 {
    match v {
        LambdaValue::Finite(n) => n,
        LambdaValue::Infinite => i64::MAX,
    }
}

// criterion 1: zz(3/2) has the five-object shape with the displayed
// relative bigradings, up to one global shift.
fn crit1_zigzag_golden() -> Result<Option<String>, String> {
    let mut z = zz(slope(3, 2)).map_err(|e| e.to_string())?;
    let vertices: Vec<Vertex> = z.objects.iter().map(|o| o.vertex).collect();
    if vertices != vec![Vertex::Circ, Vertex::Bullet, Vertex::Bullet, Vertex::Circ, Vertex::Circ]
    {
        return err(format!("vertex sequence {vertices:?}"));
    }
    let arrows: Vec<(usize, usize, ArrowLabel)> =
        z.arrows.iter().map(|a| (a.from, a.to, a.label)).collect();
    let expected_arrows = vec![
        (0, 1, ArrowLabel::Scirc),
        (2, 1, ArrowLabel::Dbul),
        (3, 2, ArrowLabel::Scirc),
        (4, 3, ArrowLabel::Dcirc),
    ];
    if arrows != expected_arrows {
        return err(format!("arrows {arrows:?}"));
    }
    // anchor the last object at (0, 2) and compare all bigradings
    z.objects[4].t = Some(0);
    z.objects[4].q = Some(2);
    crate::rational::propagate_gradings(&mut z);
    let coords: Vec<(i64, i64)> = z
        .objects
        .iter()
        .map(|o| (o.t.unwrap(), o.q.unwrap()))
        .collect();
    let expected = vec![(2, 6), (3, 7), (2, 5), (1, 4), (0, 2)];
    if coords != expected {
        return err(format!("bigradings {coords:?}"));
    }
    Ok(None)
}

// criterion 2: the pawn degree of every odd/odd closure equals −σ.
fn crit2_signature_loop() -> Result<Option<String>, String> {
    for p in (-21..=21i64).step_by(2) {
        for q in (1..=21i64).step_by(2) {
            if p == 0 || p.abs().gcd(&q) != 1 {
                continue;
            }
            let s = slope(p, q);
            if connectivity(s) != Connectivity::X {
                continue;
            }
            let c = two_bridge_complex(s).map_err(|e| e.to_string())?;
            let d = decompose(&c).map_err(|e| format!("{p}/{q}: {e}"))?;
            let expect = -two_bridge_signature(s).unwrap();
            if d.pawn.s != expect {
                return err(format!("{p}/{q}: pawn {} vs -sigma {}", d.pawn.s, expect));
            }
            if d.knights.iter().any(|n| n.k != 1) {
                return err(format!("{p}/{q}: non-thin knight"));
            }
        }
    }
    Ok(None)
}

// criterion 3: closures of ∓(2m+1) match the closed-form T(2,2m+1) complex
// and its mirror.
fn crit3_two_bridge_closed_form() -> Result<Option<String>, String> {
    for m in 0..=10u32 {
        let n = 2 * m as i64 + 1;
        let c = two_bridge_complex(slope(-n, 1)).map_err(|e| e.to_string())?;
        let d = decompose(&c).map_err(|e| e.to_string())?;
        let expect = t2(m, RingTag::Z);
        if d != expect {
            return err(format!("m={m}: {:?} vs {:?}", d, expect));
        }
        let c = two_bridge_complex(slope(n, 1)).map_err(|e| e.to_string())?;
        let d = decompose(&c).map_err(|e| e.to_string())?;
        if d != expect.dualize() {
            return err(format!("m={m} (mirror): {:?}", d));
        }
    }
    Ok(None)
}

// The sample knots of the classification criterion.
fn classification_set(ring: RingTag) -> Vec<(String, Decomposition)> {
    let mut v = Vec::new();
    for m in 0..=8u32 {
        v.push((format!("T(2,{})", 2 * m + 1), t2(m, ring)));
    }
    for n in 1..=5u32 {
        for i in 1..=2u32 {
            v.push((format!("T(3,{})", 3 * n + i), t3(n, i, ring)));
        }
    }
    v
}

fn lambda0_is_one(a: &str, b: &str) -> bool {
    let torus = |s: &str| -> (u32, u32) {
        let inner = s.trim_start_matches("T(").trim_end_matches(')');
        let (x, y) = inner.split_once(',').unwrap();
        (x.parse().unwrap(), y.parse().unwrap())
    };
    let (pa, na) = torus(a);
    let (pb, nb) = torus(b);
    let pair = |x: (u32, u32), y: (u32, u32)| {
        (pa, na, pb, nb) == (x.0, x.1, y.0, y.1) || (pb, nb, pa, na) == (x.0, x.1, y.0, y.1)
    };
    // (i) adjacent 2-strand knots
    if pa == 2 && pb == 2 && na.abs_diff(nb) == 2 {
        return true;
    }
    // (ii) T(3,3n+1), T(3,3n+2)
    if pa == 3 && pb == 3 && na.abs_diff(nb) == 1 && na.min(nb) % 3 == 1 {
        return true;
    }
    // (iii) four sporadic pairs
    pair((3, 4), (2, 5)) || pair((3, 4), (2, 7)) || pair((3, 5), (2, 7)) || pair((3, 5), (2, 9))
}

fn lambda_is_one(a: &str, b: &str) -> bool {
    let torus = |s: &str| -> (u32, u32) {
        let inner = s.trim_start_matches("T(").trim_end_matches(')');
        let (x, y) = inner.split_once(',').unwrap();
        (x.parse().unwrap(), y.parse().unwrap())
    };
    let (pa, na) = torus(a);
    let (pb, nb) = torus(b);
    // (i') any two distinct 2-strand torus knots
    if pa == 2 && pb == 2 && na != nb {
        return true;
    }
    // (ii') T(3,3n+1), T(3,3n+2)
    if pa == 3 && pb == 3 && na.abs_diff(nb) == 1 && na.min(nb) % 3 == 1 {
        return true;
    }
    // (iii') T(3,4) or T(3,5) against T(2,2m+1), m ≥ 2
    let sporadic = |x: (u32, u32), y: (u32, u32)| {
        (x.0 == 3 && (x.1 == 4 || x.1 == 5)) && y.0 == 2 && y.1 >= 5
    };
    sporadic((pa, na), (pb, nb)) || sporadic((pb, nb), (pa, na))
}

// criterion 4: λ⁰ = 1 and λ = 1 exactly on the listed pairs; all other
// distinct pairs give ≥ 2.
fn crit4_classification() -> Result<Option<String>, String> {
    let knots = classification_set(f2());
    for (na, da) in &knots {
        for (nb, db) in &knots {
            let r = exact_region(da, db)?;
            let l0 = lam(small_lambda0(&r));
            let l = lam(small_lambda(&r));
            if na == nb {
                if l0 != 0 || l != 0 {
                    return err(format!("{na} vs itself: λ⁰={l0}, λ={l}"));
                }
                continue;
            }
            let expect0 = if lambda0_is_one(na, nb) { 1 } else { 2 };
            let expect = if lambda_is_one(na, nb) { 1 } else { 2 };
            if (l0 == 1) != (expect0 == 1) || l0 < 1 {
                return err(format!("λ⁰({na},{nb}) = {l0}, expected one-ness {}", expect0 == 1));
            }
            if (l == 1) != (expect == 1) || l < 1 {
                return err(format!("λ({na},{nb}) = {l}, expected one-ness {}", expect == 1));
            }
            if l0 != 1 && l0 < 2 {
                return err(format!("λ⁰({na},{nb}) = {l0} below 2"));
            }
        }
    }
    Ok(None)
}

// criterion 5: Λ(T(2,3), U; ℤ) = V₁ ∩ V(1,−1) with the three verdicts.
fn crit5_trefoil_region() -> Result<Option<String>, String> {
    let r = exact_region(&t2(1, RingTag::Z), &t2(0, RingTag::Z))?;
    let expected = Region::half_plane(1).intersect(&Region::quadrant(1, -1));
    if r != expected {
        return err(format!("region {}", r.to_json()));
    }
    if lam(small_lambda(&r)) != 1 || lam(small_lambda0(&r)) != 1 {
        return err("λ or λ⁰ differs from 1".into());
    }
    if r.member(0, 1) || !r.member(1, 0) || !r.member(2, -1) {
        return err("bullet verdicts differ".into());
    }
    Ok(None)
}

// criterion 6: λ⁰(T(3,4), T(2,9)) = 2; λ(T(3,7), T(2,13)) = 2 with torsion
// gap 1 and s-gap 0.
fn crit6_intro_numbers() -> Result<Option<String>, String> {
    let r = exact_region(&t3(1, 1, f2()), &t2(4, f2()))?;
    if lam(small_lambda0(&r)) != 2 {
        return err(format!("λ⁰(T(3,4),T(2,9)) = {}", small_lambda0(&r)));
    }
    let (a, b) = (t3(2, 1, f2()), t2(6, f2()));
    let r = exact_region(&a, &b)?;
    if lam(small_lambda(&r)) != 2 {
        return err(format!("λ(T(3,7),T(2,13)) = {}", small_lambda(&r)));
    }
    let gap = torsion_profile(&a).max_gap(&torsion_profile(&b));
    if gap != 1 {
        return err(format!("torsion gap {gap}"));
    }
    if (a.pawn.s - b.pawn.s) / 2 != 0 {
        return err("s-gap nonzero".into());
    }
    Ok(None)
}

// criterion 7: the two in-engine rows over ℚ, plus optional externally
// supplied rows gated on complex files.
fn crit7_table_rows() -> Result<Option<String>, String> {
    let q = RingTag::Q;
    let rows = [
        (t2(5, q), t3(2, 1, q), "T(2,11) vs T(3,7)"),
        (t2(6, q), t3(2, 2, q), "T(2,13) vs T(3,8)"),
    ];
    for (a, b, name) in &rows {
        let r = exact_region(a, b)?;
        if lam(small_lambda0(&r)) != 2 {
            return err(format!("{name}: λ⁰ = {}", small_lambda0(&r)));
        }
        if ((a.pawn.s - b.pawn.s) / 2).abs() != 1 {
            return err(format!("{name}: s-gap differs from 1"));
        }
    }
    match external_rows() {
        Ok(0) => Ok(Some("no external complex files present".into())),
        Ok(n) => {
            let _ = n;
            Ok(None)
        }
        Err(e) => Err(e),
    }
}

/// Optional golden rows that need externally computed complexes. Files are
/// looked up as `<dir>/T{a}_{b}.json` with ring Z, `dir` taken from
/// `GORDIAN_EXT_DIR`. Returns how many rows were checked.
fn external_rows() -> Result<usize, String> {
    let Ok(dir) = std::env::var("GORDIAN_EXT_DIR") else {
        return Ok(0);
    };
    let rows: [(&str, u32, u32, i64); 5] = [
        ("T6_7.json", 3, 16, 2),
        ("T5_9.json", 3, 17, 2),
        ("T4_5.json", 2, 11, 2),
        ("T5_8.json", 3, 14, 2),
        ("T5_8.json", 3, 16, 2),
    ];
    let mut checked = 0;
    for (file, strands, b, expect) in rows {
        let path = std::path::Path::new(&dir).join(file);
        let Ok(text) = std::fs::read_to_string(&path) else {
            continue;
        };
        let big = FreeComplex::read_json(&text).map_err(|e| format!("{file}: {e}"))?;
        let big_q = big.base_change(RingTag::Q).map_err(|e| e.to_string())?;
        let small = reassemble(
            &torus_decomposition(crate::pieces::torus_params(strands, b).map_err(|e| e.to_string())?, RingTag::Q, false)
                .map_err(|e| e.to_string())?,
        );
        let db = decompose(&big_q).map_err(|e| format!("{file}: {e}"))?;
        let ds = decompose(&small).map_err(|e| e.to_string())?;
        let r = match lambda_region_structured(&ds, &db).map_err(|e| e.to_string())? {
            StructuredRegion::Exact(r) => r,
            StructuredRegion::Indeterminate { inner, outer } => {
                // bounds must still pin the row value
                let lo = lam(small_lambda0(&outer));
                let hi = lam(small_lambda0(&inner));
                if lo != expect || hi != expect {
                    return Err(format!("{file}: λ⁰ ∈ [{lo}, {hi}], expected {expect}"));
                }
                checked += 1;
                continue;
            }
        };
        if lam(small_lambda0(&r)) != expect {
            return Err(format!("{file}: λ⁰ = {}", small_lambda0(&r)));
        }
        checked += 1;
    }
    Ok(checked)
}

fn oracle_set(ring: RingTag) -> Vec<Decomposition> {
    // Engine agreement is a statement about the two algorithms, so the
    // 3-strand complexes may be used over any field; the conjectural flag
    // only records that fields beyond F2 and Q are not established for them.
    let t3c = |n, i| torus_decomposition(TorusParams::ThreeStrand { n, i }, ring, true).unwrap();
    vec![
        t2(0, ring),
        t2(1, ring),
        t2(2, ring),
        t2(3, ring),
        t3c(1, 1),
        t3c(1, 2),
    ]
}

// criterion 8: the brute-force engine agrees with the structured engine
// over 𝔽₂ and 𝔽₃ on all ordered sample pairs.
fn crit8_oracle_agreement() -> Result<Option<String>, String> {
    for p in [2u64, 3] {
        let ring = RingTag::Fp(p);
        let set = oracle_set(ring);
        for (i, a) in set.iter().enumerate() {
            for (j, b) in set.iter().enumerate() {
                let structured = exact_region(a, b)?;
                let brute = lambda_region_brute(
                    &reassemble(a),
                    &reassemble(b),
                    BruteCaps::default(),
                )
                .map_err(|e| format!("pair ({i},{j}) over F{p}: {e}"))?;
                if structured != brute {
                    return err(format!(
                        "pair ({i},{j}) over F{p}: structured {} vs brute {}",
                        structured.to_json(),
                        brute.to_json()
                    ));
                }
            }
        }
    }
    Ok(None)
}

fn sample_set(ring: RingTag) -> Vec<Decomposition> {
    vec![
        t2(0, ring),
        t2(1, ring),
        t2(2, ring),
        t2(3, ring),
        t2(4, ring),
        t3(1, 1, ring),
        t3(1, 2, ring),
    ]
}

// criterion 9: pseudometric axioms, region laws, mirror symmetry, torsion
// and s bounds, the exact unknot region, and the End-space ranks.
fn crit9_property_suites() -> Result<Option<String>, String> {
    let set = sample_set(f2());
    let regions: Vec<Vec<Region>> = set
        .iter()
        .map(|a| {
            set.iter()
                .map(|b| exact_region(a, b))
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    for (i, a) in set.iter().enumerate() {
        for (j, b) in set.iter().enumerate() {
            let r = &regions[i][j];
            // symmetry via transposition
            if &regions[j][i].transpose() != r {
                return err(format!("transpose law fails at ({i},{j})"));
            }
            // λ, λ⁰ symmetry
            if small_lambda(r) != small_lambda(&regions[j][i])
                || small_lambda0(r) != small_lambda0(&regions[j][i])
            {
                return err(format!("λ symmetry fails at ({i},{j})"));
            }
            // self-distance vanishes
            if i == j && (lam(small_lambda(r)) != 0 || lam(small_lambda0(r)) != 0) {
                return err(format!("λ(K,K) nonzero at {i}"));
            }
            // upward closure on the canonical corners
            for &(x, y) in r.corners() {
                if !r.member(x + 1, y) || !r.member(x, y + 1) {
                    return err(format!("upward closure fails at ({i},{j})"));
                }
            }
            // s-bound and torsion window
            let s12 = (a.pawn.s - b.pawn.s) / 2;
            let outer = Region::quadrant(s12, -s12);
            if !r.subset_of(&outer) {
                return err(format!("s-corner bound fails at ({i},{j})"));
            }
            let kf = a.umax().max(b.umax()) as i64;
            let inner = Region::half_plane(kf).intersect(&outer);
            if !inner.subset_of(r) {
                return err(format!("torsion inner bound fails at ({i},{j})"));
            }
            // ½|s| ≤ λ⁰ and torsion gap ≤ λ
            if s12.abs() > lam(small_lambda0(r)) {
                return err(format!("s-bound on λ⁰ fails at ({i},{j})"));
            }
            let gap = torsion_profile(a).max_gap(&torsion_profile(b)) as i64;
            if gap > lam(small_lambda(r)) {
                return err(format!("torsion bound on λ fails at ({i},{j})"));
            }
            // mirror symmetry Λ(−K₂, −K₁) = Λ(K₁, K₂)
            let mirror = exact_region(&b.dualize(), &a.dualize())?;
            if &mirror != r {
                return err(format!("mirror law fails at ({i},{j})"));
            }
            // triangle inequality through every intermediate knot
            for (k, _) in set.iter().enumerate() {
                let sum_l = lam(small_lambda(&regions[i][k]))
                    .saturating_add(lam(small_lambda(&regions[k][j])));
                if lam(small_lambda(r)) > sum_l {
                    return err(format!("λ triangle fails at ({i},{k},{j})"));
                }
                let sum_l0 = lam(small_lambda0(&regions[i][k]))
                    .saturating_add(lam(small_lambda0(&regions[k][j])));
                if lam(small_lambda0(r)) > sum_l0 {
                    return err(format!("λ⁰ triangle fails at ({i},{k},{j})"));
                }
                // Minkowski law Λ(K₁,K₂) + Λ(K₂,K₃) ⊆ Λ(K₁,K₃)
                let sum = regions[i][k].minkowski_add(&regions[k][j]);
                if !sum.subset_of(&regions[i][j]) {
                    return err(format!("Minkowski law fails at ({i},{k},{j})"));
                }
            }
        }
        // Λ(K; F) = V_𝔲 ∩ V(s/2, −s/2) against the unknot (index 0)
        let r = &regions[i][0];
        let expected = Region::half_plane(a.umax() as i64)
            .intersect(&Region::quadrant(a.pawn.s / 2, -a.pawn.s / 2));
        if r != &expected {
            return err(format!("unknot region formula fails at {i}"));
        }
        // closed-form agreement
        let cf = closed_form_lambda(a, &set[0]).map_err(|e| e.to_string())?;
        if lam(small_lambda(r)) != cf.lambda_exact.unwrap()
            || lam(small_lambda0(r)) != cf.lambda0_exact.unwrap()
        {
            return err(format!("closed forms differ at {i}"));
        }
    }
    // End-space ranks for slopes 1, 3, 5/3
    for (p, q) in [(1i64, 1i64), (3, 1), (5, 3)] {
        let z = graded_zz(slope(p, q)).map_err(|e| e.to_string())?;
        let end = mor_complex(&z, &z).map_err(|e| e.to_string())?;
        let h0 = end.homology_slice(0, 0);
        if h0.free_rank != 1 || !h0.torsion_orders.is_empty() {
            return err(format!("End₀ rank for {p}/{q}"));
        }
        for n in 1..=3 {
            let h = end.homology_slice(0, -2 * n);
            if h.free_rank != 2 || !h.torsion_orders.is_empty() {
                return err(format!("End_{n} rank for {p}/{q}"));
            }
        }
    }
    Ok(None)
}

// criterion 10: α/β identities, the trefoil signature statement, and the
// positive crossing bound.
fn crit10_obstruction_suite() -> Result<Option<String>, String> {
    for p in (-21..=21i64).step_by(2) {
        for q in (1..=21i64).step_by(2) {
            if p == 0 || p.abs().gcd(&q) != 1 || p == q {
                continue;
            }
            let s = slope(p, q);
            let lhs = beta(s).map_err(|e| e.to_string())?;
            let rhs = alpha(s.negated()).map_err(|e| e.to_string())?;
            if lhs != rhs {
                return err(format!("β({p}/{q}) = {lhs} vs α = {rhs}"));
            }
        }
    }
    let lam_region = exact_region(&t2(1, RingTag::Z), &t2(0, RingTag::Z))?;
    let mut seen = std::collections::BTreeSet::new();
    for p in (-21..=21i64).step_by(2) {
        for q in (1..=21i64).step_by(2) {
            if p == 0 || p.abs().gcd(&q) != 1 || p == -q {
                continue;
            }
            let s = slope(p, q);
            if admissible(&lam_region, s).map_err(|e| e.to_string())? {
                let sigma = two_bridge_signature(s).unwrap();
                if ![0, 2, 4].contains(&sigma) {
                    return err(format!("admissible slope {p}/{q} with σ = {sigma}"));
                }
                seen.insert(sigma);
            }
        }
    }
    if seen.len() != 3 {
        return err(format!("trefoil signatures realized: {seen:?}"));
    }
    for n in 1..=5u32 {
        for i in 1..=2u32 {
            let prof = torsion_profile(&t3(n, i, f2()));
            let bound = positive_crossing_bound(&prof);
            if bound != 4 * n as i64 + 1 {
                return err(format!("c₊ bound for T(3,{}) = {bound}", 3 * n + i));
            }
        }
    }
    Ok(None)
}
