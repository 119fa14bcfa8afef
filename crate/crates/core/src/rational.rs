//! Rational tangles: reduced slopes, connectivity, the zigzag recursion
//! zz(r), end-shape queries, and absolute gradings for odd/odd slopes.
//!
//! zz(r) is built from zz(1) = ∘ → • by replaying the Euclid expansion of r
//! through two moves: r ↦ 1/r (swap vertices, reverse arrows) and r ↦ r + 1
//! (a local rewrite of every arrow). Gradings exist only for odd/odd slopes,
//! anchored at the •-end by the two-bridge signature.

use std::fmt;

use num_integer::Integer;

use crate::quiver::{b_mul, BElement, BPath, Vertex};
use crate::{Error, Result};

/// A reduced fraction p/q indexing the rational tangle Q_{p/q}. The sign
/// lives on p; q ≥ 0, and ∞ is represented as 1/0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Slope {
    p: i64,
    q: i64,
}

impl Slope {
    /// Accepts only a reduced fraction (up to sign normalization).
    pub fn new(p: i64, q: i64) -> Result<Slope> {
        let (mut p, mut q) = (p, q);
        if q < 0 {
            p = -p;
            q = -q;
        }
        if q == 0 {
            if p == 1 || p == -1 {
                return Ok(Slope { p: 1, q: 0 });
            }
            return Err(Error::InvalidSlope(p, q));
        }
        if p == 0 && q != 1 {
            return Err(Error::InvalidSlope(p, q));
        }
        if p != 0 && p.abs().gcd(&q) != 1 {
            return Err(Error::InvalidSlope(p, q));
        }
        Ok(Slope { p, q })
    }

    /// Reduces an arbitrary fraction to a slope.
    pub fn reduced(p: i64, q: i64) -> Result<Slope> {
        if p == 0 && q == 0 {
            return Err(Error::InvalidSlope(0, 0));
        }
        let g = p.abs().gcd(&q.abs()).max(1);
        Slope::new(p / g, q / g)
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    pub fn is_infinity(&self) -> bool {
        self.q == 0
    }

    pub fn negated(&self) -> Slope {
        if self.is_infinity() {
            *self
        } else {
            Slope {
                p: -self.p,
                q: self.q,
            }
        }
    }

    pub fn both_odd(&self) -> bool {
        self.p % 2 != 0 && self.q % 2 != 0
    }

    pub fn parse(s: &str) -> Result<Slope> {
        let bad = || Error::SchemaError(format!("bad slope {s:?}"));
        let (p, q) = match s.split_once('/') {
            Some((a, b)) => (a.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?),
            None => (s.parse().map_err(|_| bad())?, 1),
        };
        Slope::new(p, q)
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.q == 1 {
            write!(f, "{}", self.p)
        } else {
            write!(f, "{}/{}", self.p, self.q)
        }
    }
}

/// How the tangle connects its four ends.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Connectivity {
    /// ∞-like (vertical strands).
    NI,
    /// Crossed strands; the 0-closure is a knot.
    X,
    /// 0-like (horizontal strands).
    NO,
}

/// Connectivity from slope parities: X for odd/odd, NO for even p,
/// NI for even q.
pub fn connectivity(s: Slope) -> Connectivity {
    if s.q % 2 == 0 {
        Connectivity::NI
    } else if s.p % 2 == 0 {
        Connectivity::NO
    } else {
        Connectivity::X
    }
}

/// Arrow labels. The recursion itself only produces S∘-type saddles; duals
/// of graded zigzags may carry S•.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArrowLabel {
    Scirc,
    Sbul,
    ScircSbul,
    SbulScirc,
    Dcirc,
    Dbul,
}

impl ArrowLabel {
    pub fn parity(self) -> Parity {
        match self {
            ArrowLabel::Dcirc | ArrowLabel::Dbul => Parity::Even,
            _ => Parity::Odd,
        }
    }

    /// Quantum degree of the underlying algebra element.
    pub fn qdeg(self) -> i64 {
        match self {
            ArrowLabel::Scirc | ArrowLabel::Sbul => -1,
            _ => -2,
        }
    }

    pub fn element(self) -> BElement {
        let p = match self {
            ArrowLabel::Scirc => BPath::sword(Vertex::Circ, 1),
            ArrowLabel::Sbul => BPath::sword(Vertex::Bullet, 1),
            ArrowLabel::ScircSbul => BPath::sword(Vertex::Bullet, 2),
            ArrowLabel::SbulScirc => BPath::sword(Vertex::Circ, 2),
            ArrowLabel::Dcirc => BPath::dpower(Vertex::Circ, 1),
            ArrowLabel::Dbul => BPath::dpower(Vertex::Bullet, 1),
        };
        BElement::from_path(p)
    }

    /// Label of the transposed arrow (saddles swap flavour, loops persist).
    fn transpose(self) -> ArrowLabel {
        match self {
            ArrowLabel::Scirc => ArrowLabel::Sbul,
            ArrowLabel::Sbul => ArrowLabel::Scirc,
            other => other,
        }
    }
}

impl fmt::Display for ArrowLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ArrowLabel::Scirc => "So",
            ArrowLabel::Sbul => "S*",
            ArrowLabel::ScircSbul => "SoS*",
            ArrowLabel::SbulScirc => "S*So",
            ArrowLabel::Dcirc => "Do",
            ArrowLabel::Dbul => "D*",
        };
        write!(f, "{s}")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Odd,
    Even,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZigzagObject {
    pub vertex: Vertex,
    pub t: Option<i64>,
    pub q: Option<i64>,
}

/// An arrow between the adjacent objects `from` and `to` (|from − to| = 1).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZigzagArrow {
    pub from: usize,
    pub to: usize,
    pub label: ArrowLabel,
}

/// A linear zigzag complex over B. Arrow i connects objects i and i + 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZigzagComplex {
    pub objects: Vec<ZigzagObject>,
    pub arrows: Vec<ZigzagArrow>,
}

impl ZigzagComplex {
    /// A single graded object and no arrows.
    pub fn single(vertex: Vertex, t: i64, q: i64) -> ZigzagComplex {
        ZigzagComplex {
            objects: vec![ZigzagObject {
                vertex,
                t: Some(t),
                q: Some(q),
            }],
            arrows: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.objects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.objects.is_empty()
    }

    pub fn is_graded(&self) -> bool {
        self.objects.iter().all(|o| o.t.is_some() && o.q.is_some())
    }

    /// Checks the zigzag axioms: adjacency, parity alternation, label/vertex
    /// consistency, at least one saddle, exactly one saddle per monotone
    /// segment, and bidegree (1,0) wherever gradings are present.
    pub fn validate(&self) -> Result<()> {
        let n = self.objects.len();
        if n == 0 {
            return if self.arrows.is_empty() {
                Ok(())
            } else {
                Err(Error::SchemaError("arrows without objects".into()))
            };
        }
        if self.arrows.len() + 1 != n {
            return Err(Error::SchemaError("zigzag arrows must chain the objects".into()));
        }
        for (i, a) in self.arrows.iter().enumerate() {
            if !((a.from == i && a.to == i + 1) || (a.from == i + 1 && a.to == i)) {
                return Err(Error::SchemaError(format!("arrow {i} is not adjacent")));
            }
            let (sv, tv) = (self.objects[a.from].vertex, self.objects[a.to].vertex);
            let ok = match a.label {
                ArrowLabel::Scirc => sv == Vertex::Circ && tv == Vertex::Bullet,
                ArrowLabel::Sbul => sv == Vertex::Bullet && tv == Vertex::Circ,
                ArrowLabel::ScircSbul => sv == Vertex::Bullet && tv == Vertex::Bullet,
                ArrowLabel::SbulScirc => sv == Vertex::Circ && tv == Vertex::Circ,
                ArrowLabel::Dcirc => sv == Vertex::Circ && tv == Vertex::Circ,
                ArrowLabel::Dbul => sv == Vertex::Bullet && tv == Vertex::Bullet,
            };
            if !ok {
                return Err(Error::SchemaError(format!(
                    "label {} does not match vertices at arrow {i}",
                    a.label
                )));
            }
            if i + 1 < self.arrows.len()
                && a.label.parity() == self.arrows[i + 1].label.parity()
            {
                return Err(Error::SchemaError(format!(
                    "consecutive arrows {i}, {} have equal parity",
                    i + 1
                )));
            }
            if let (Some(ts), Some(tt), Some(qs), Some(qt)) = (
                self.objects[a.from].t,
                self.objects[a.to].t,
                self.objects[a.from].q,
                self.objects[a.to].q,
            ) {
                if tt != ts + 1 || qt != qs - a.label.qdeg() {
                    return Err(Error::GradingViolation {
                        src: format!("zz[{}]", a.from),
                        tgt: format!("zz[{}]", a.to),
                    });
                }
            }
        }
        if !self.arrows.is_empty()
            && !self
                .arrows
                .iter()
                .any(|a| matches!(a.label, ArrowLabel::Scirc | ArrowLabel::Sbul))
        {
            return Err(Error::SchemaError("zigzag must contain a saddle arrow".into()));
        }
        for seg in self.segments() {
            let saddles = seg
                .iter()
                .filter(|a| matches!(self.arrows[**a].label, ArrowLabel::Scirc | ArrowLabel::Sbul))
                .count();
            if saddles != 1 {
                return Err(Error::SchemaError(format!(
                    "segment with {saddles} saddles (expected exactly 1)"
                )));
            }
        }
        Ok(())
    }

    /// Indices of arrows grouped into maximal same-direction runs.
    fn segments(&self) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = Vec::new();
        for (i, a) in self.arrows.iter().enumerate() {
            let dir = a.to > a.from;
            let extend = out.last().is_some_and(|seg| {
                let prev = &self.arrows[*seg.last().unwrap()];
                (prev.to > prev.from) == dir
            });
            if extend {
                out.last_mut().unwrap().push(i);
            } else {
                out.push(vec![i]);
            }
        }
        out
    }

    /// Reverses arrows, swaps saddle flavours and negates all gradings.
    pub fn dualize(&self) -> ZigzagComplex {
        ZigzagComplex {
            objects: self
                .objects
                .iter()
                .map(|o| ZigzagObject {
                    vertex: o.vertex,
                    t: o.t.map(|t| -t),
                    q: o.q.map(|q| -q),
                })
                .collect(),
            arrows: self
                .arrows
                .iter()
                .map(|a| ZigzagArrow {
                    from: a.to,
                    to: a.from,
                    label: a.label.transpose(),
                })
                .collect(),
        }
    }

    /// Composites of consecutive same-direction arrows vanish in B.
    pub fn d_squared_is_zero(&self) -> bool {
        for w in self.arrows.windows(2) {
            let (a, b) = (&w[0], &w[1]);
            let prod = if a.to == b.from {
                b_mul(&b.label.element(), &a.label.element())
            } else if b.to == a.from {
                b_mul(&a.label.element(), &b.label.element())
            } else {
                continue;
            };
            if !prod.is_zero() {
                return false;
            }
        }
        true
    }
}

// ---------------------------------------------------------------------------
// The zz(r) recursion
// ---------------------------------------------------------------------------

/// Ungraded skeleton: vertices plus arrow directions; labels are assigned
/// afterwards from the parity alternation anchored at the saddle arrows.
#[derive(Clone)]
struct Skeleton {
    vertices: Vec<Vertex>,
    /// arrow i connects i and i+1; true = points right (i → i+1)
    right: Vec<bool>,
}

impl Skeleton {
    fn invert(&self) -> Skeleton {
        Skeleton {
            vertices: self.vertices.iter().map(|v| v.flip()).collect(),
            right: self.right.iter().map(|d| !d).collect(),
        }
    }

    /// Parity of arrow i: saddles (the unique ∘→• arrows) are odd and
    /// parities alternate along the line.
    fn parity_odd(&self, i: usize) -> bool {
        let anchor = (0..self.right.len())
            .find(|&j| {
                let (s, t) = self.endpoints(j);
                self.vertices[s] == Vertex::Circ && self.vertices[t] == Vertex::Bullet
            })
            .expect("every zigzag contains a saddle");
        (i as i64 - anchor as i64) % 2 == 0
    }

    fn endpoints(&self, i: usize) -> (usize, usize) {
        if self.right[i] {
            (i, i + 1)
        } else {
            (i + 1, i)
        }
    }

    /// The arrow-by-arrow rewrite taking zz(r) to zz(r + 1):
    /// odd •→• turns into src• ← ∘ → ∘ → tgt•; an even •→• into an end
    /// gains a reversed ∘ beyond the end; ∘→• becomes ∘→∘→•; ∘→∘ persists.
    fn plus_one(&self) -> Skeleton {
        use Vertex::*;
        let n = self.vertices.len();
        let mut vertices = vec![self.vertices[0]];
        let mut right: Vec<bool> = Vec::new();
        for i in 0..self.right.len() {
            let dir = self.right[i];
            let (sp, tp) = self.endpoints(i);
            let (sv, tv) = (self.vertices[sp], self.vertices[tp]);
            match (sv, tv) {
                (Bullet, Bullet) if self.parity_odd(i) => {
                    vertices.push(Circ);
                    vertices.push(Circ);
                    if dir {
                        // src• ← ∘ → ∘ → tgt•
                        right.extend([false, true, true]);
                    } else {
                        // tgt• ← ∘ ← ∘ → src•
                        right.extend([false, false, true]);
                    }
                    vertices.push(self.vertices[i + 1]);
                }
                (Bullet, Bullet) => {
                    let tgt_is_end = tp == 0 || tp == n - 1;
                    if tgt_is_end && dir {
                        // last arrow: ... src• → end• ← ∘
                        debug_assert_eq!(i, self.right.len() - 1);
                        right.push(true);
                        vertices.push(self.vertices[i + 1]);
                        right.push(false);
                        vertices.push(Circ);
                    } else if tgt_is_end {
                        // first arrow pointing into the left end: ∘ → end• ← src•
                        debug_assert_eq!(i, 0);
                        vertices.insert(0, Circ);
                        right.push(true);
                        right.push(false);
                        vertices.push(self.vertices[i + 1]);
                    } else {
                        right.push(dir);
                        vertices.push(self.vertices[i + 1]);
                    }
                }
                (Circ, Bullet) => {
                    vertices.push(Circ);
                    if dir {
                        right.extend([true, true]);
                    } else {
                        right.extend([false, false]);
                    }
                    vertices.push(self.vertices[i + 1]);
                }
                (Circ, Circ) => {
                    right.push(dir);
                    vertices.push(self.vertices[i + 1]);
                }
                (Bullet, Circ) => unreachable!("zigzags have no • → ∘ arrows"),
            }
        }
        Skeleton { vertices, right }
    }

    fn into_zigzag(self) -> ZigzagComplex {
        let objects = self
            .vertices
            .iter()
            .map(|&vertex| ZigzagObject {
                vertex,
                t: None,
                q: None,
            })
            .collect();
        let arrows = (0..self.right.len())
            .map(|i| {
                let (sp, tp) = self.endpoints(i);
                let label = label_for(self.vertices[sp], self.vertices[tp], self.parity_odd(i));
                ZigzagArrow {
                    from: sp,
                    to: tp,
                    label,
                }
            })
            .collect();
        ZigzagComplex { objects, arrows }
    }
}

fn label_for(sv: Vertex, tv: Vertex, odd: bool) -> ArrowLabel {
    match (sv, tv, odd) {
        (Vertex::Circ, Vertex::Bullet, true) => ArrowLabel::Scirc,
        (Vertex::Bullet, Vertex::Bullet, true) => ArrowLabel::ScircSbul,
        (Vertex::Circ, Vertex::Circ, true) => ArrowLabel::SbulScirc,
        (Vertex::Bullet, Vertex::Bullet, false) => ArrowLabel::Dbul,
        (Vertex::Circ, Vertex::Circ, false) => ArrowLabel::Dcirc,
        _ => unreachable!("even ∘→• arrows cannot occur"),
    }
}

/// The ungraded zigzag complex of Q_{p/q} for p/q > 0, from the Euclid move
/// sequence anchored at zz(1) = ∘ → •.
pub fn zz(s: Slope) -> Result<ZigzagComplex> {
    if s.is_infinity() || s.p <= 0 {
        return Err(Error::InvalidSlope(s.p, s.q));
    }
    // Strip moves greedily: subtract 1 while r > 1, else invert; replay back.
    let mut moves = Vec::new();
    let (mut p, mut q) = (s.p, s.q);
    while (p, q) != (1, 1) {
        if p > q {
            moves.push(true); // replayed as r ↦ r + 1
            p -= q;
        } else {
            moves.push(false); // replayed as r ↦ 1/r
            std::mem::swap(&mut p, &mut q);
        }
    }
    let mut skel = Skeleton {
        vertices: vec![Vertex::Circ, Vertex::Bullet],
        right: vec![true],
    };
    for &mv in moves.iter().rev() {
        skel = if mv { skel.plus_one() } else { skel.invert() };
    }
    let z = skel.into_zigzag();
    z.validate()?;
    Ok(z)
}

/// Two-bridge signature σ(Q_{p/q}(0)) = Σ_{i=1}^{p−1} (−1)^{⌊iq/p⌋} for
/// p > 0, extended by σ(−p/q) = −σ(p/q).
pub fn two_bridge_signature(s: Slope) -> Result<i64> {
    if !s.both_odd() || s.p == 0 {
        return Err(Error::BadParity(s.p, s.q));
    }
    if s.p < 0 {
        return Ok(-two_bridge_signature(s.negated())?);
    }
    let (p, q) = (s.p, s.q);
    let mut sigma = 0i64;
    for i in 1..p {
        let f = num_integer::Integer::div_floor(&(i * q), &p);
        sigma += if f % 2 == 0 { 1 } else { -1 };
    }
    Ok(sigma)
}

/// Rasmussen invariant s(Q_{p/q}(0)) = −σ; the 0-closures are alternating,
/// so this holds over every field.
pub fn s_invariant(s: Slope) -> Result<i64> {
    Ok(-two_bridge_signature(s)?)
}

/// The graded zigzag complex of Q_{p/q} for odd coprime p, q. For positive
/// slopes the •-end is anchored at (0, s − 1) with s the Rasmussen invariant
/// of the 0-closure; negative slopes are duals of their mirrors, putting the
/// •-end at (0, s + 1).
pub fn graded_zz(s: Slope) -> Result<ZigzagComplex> {
    if !s.both_odd() || s.p == 0 {
        return Err(Error::BadParity(s.p, s.q));
    }
    if s.p < 0 {
        return Ok(graded_zz(s.negated())?.dualize());
    }
    let mut z = zz(s)?;
    let ell = s_invariant(s)? - 1;
    let n = z.objects.len();
    let bullet_end = if z.objects[0].vertex == Vertex::Bullet {
        0
    } else {
        debug_assert_eq!(z.objects[n - 1].vertex, Vertex::Bullet);
        n - 1
    };
    z.objects[bullet_end].t = Some(0);
    z.objects[bullet_end].q = Some(ell);
    propagate_gradings(&mut z);
    z.validate()?;
    Ok(z)
}

/// Fills in all bigradings from any anchored object, using that every arrow
/// has bidegree (1,0).
pub fn propagate_gradings(z: &mut ZigzagComplex) {
    for _ in 0..z.objects.len() {
        for a in 0..z.arrows.len() {
            let ZigzagArrow { from, to, label } = z.arrows[a];
            if let (Some(t), Some(q)) = (z.objects[from].t, z.objects[from].q) {
                z.objects[to].t.get_or_insert(t + 1);
                z.objects[to].q.get_or_insert(q - label.qdeg());
            } else if let (Some(t), Some(q)) = (z.objects[to].t, z.objects[to].q) {
                z.objects[from].t.get_or_insert(t - 1);
                z.objects[from].q.get_or_insert(q + label.qdeg());
            }
        }
    }
}

/// Which local end shape applies, by slope range.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EndCase {
    GreaterThanOne,
    EqualOne,
    BetweenHalfAndOne,
    BelowHalf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EndKind {
    CircEnd,
    BulletEnd,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TangleEndInfo {
    pub end: EndKind,
    pub parity: Parity,
    pub case: EndCase,
}

/// End vertices and parities of zz(s) plus the applicable end-shape case.
pub fn end_info(z: &ZigzagComplex, s: Slope) -> Result<(TangleEndInfo, TangleEndInfo)> {
    if z.arrows.is_empty() || s.p <= 0 || s.is_infinity() {
        return Err(Error::InvalidSlope(s.p, s.q));
    }
    let case = if s.p == s.q {
        EndCase::EqualOne
    } else if s.p > s.q {
        EndCase::GreaterThanOne
    } else if 2 * s.p > s.q {
        EndCase::BetweenHalfAndOne
    } else {
        EndCase::BelowHalf
    };
    let n = z.objects.len();
    let info = |idx: usize, adj: usize| TangleEndInfo {
        end: match z.objects[idx].vertex {
            Vertex::Circ => EndKind::CircEnd,
            Vertex::Bullet => EndKind::BulletEnd,
        },
        parity: z.arrows[adj].label.parity(),
        case,
    };
    Ok((info(0, 0), info(n - 1, n - 2)))
}
