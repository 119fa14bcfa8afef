//! The quiver algebra B on two vertices ∘ and • with arrows S∘, S•, D∘, D•
//! and relations D•S∘ = S∘D∘ = D∘S• = S•D• = 0, together with the ℤ[G]-module
//! bases of the corner spaces ι_y B ι_x used by the pairing engine.
//!
//! Words are read right to left: `a · b` means "first b, then a". The center
//! is generated by D∘, D•, S, and G = S² − D acts with q(G) = −2.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::gring::{Monomial, RingTag, Scalar};
use crate::{Error, Result};

/// The two vertices of the quiver.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Vertex {
    /// ∘ — the vertical crossingless tangle.
    Circ,
    /// • — the horizontal crossingless tangle.
    Bullet,
}

impl Vertex {
    pub fn flip(self) -> Vertex {
        match self {
            Vertex::Circ => Vertex::Bullet,
            Vertex::Bullet => Vertex::Circ,
        }
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Vertex::Circ => write!(f, "o"),
            Vertex::Bullet => write!(f, "*"),
        }
    }
}

/// Shape of a basis path of B as a ℤ-module: an idempotent, a power of the
/// dot loop D_x, or an alternating saddle word (determined by source and
/// length, since the letters are forced).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PathShape {
    Idem,
    DPower(u32),
    SWord(u32),
}

/// A basis path of B, with its source and target vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BPath {
    pub src: Vertex,
    pub tgt: Vertex,
    pub shape: PathShape,
}

impl BPath {
    pub fn idem(v: Vertex) -> BPath {
        BPath {
            src: v,
            tgt: v,
            shape: PathShape::Idem,
        }
    }

    pub fn dpower(v: Vertex, k: u32) -> BPath {
        assert!(k >= 1);
        BPath {
            src: v,
            tgt: v,
            shape: PathShape::DPower(k),
        }
    }

    /// The alternating saddle word of length `n` starting at `src`.
    pub fn sword(src: Vertex, n: u32) -> BPath {
        assert!(n >= 1);
        let tgt = if n % 2 == 0 { src } else { src.flip() };
        BPath {
            src,
            tgt,
            shape: PathShape::SWord(n),
        }
    }

    /// Quantum degree: 0 for idempotents, −2k for D-powers, −n for S-words.
    pub fn qdeg(&self) -> i64 {
        match self.shape {
            PathShape::Idem => 0,
            PathShape::DPower(k) => -2 * k as i64,
            PathShape::SWord(n) => -(n as i64),
        }
    }
}

impl fmt::Display for BPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.shape {
            PathShape::Idem => write!(f, "i_{}", self.src),
            PathShape::DPower(1) => write!(f, "D{}", self.src),
            PathShape::DPower(k) => write!(f, "D{}^{}", self.src, k),
            PathShape::SWord(n) => {
                let mut v = self.src;
                let mut letters = Vec::new();
                for _ in 0..n {
                    letters.push(format!("S{v}"));
                    v = v.flip();
                }
                letters.reverse();
                write!(f, "{}", letters.join(""))
            }
        }
    }
}

/// A finite ℤ-linear combination of basis paths.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BElement {
    pub terms: BTreeMap<BPath, BigInt>,
}

impl BElement {
    pub fn zero() -> BElement {
        BElement::default()
    }

    pub fn from_path(p: BPath) -> BElement {
        let mut terms = BTreeMap::new();
        terms.insert(p, BigInt::from(1));
        BElement { terms }
    }

    pub fn scaled(p: BPath, c: i64) -> BElement {
        let mut e = BElement::zero();
        e.add_term(p, BigInt::from(c));
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, p: BPath, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(p).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&p);
        }
    }

    pub fn add(&self, other: &BElement) -> BElement {
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(*p, c.clone());
        }
        out
    }

    pub fn neg(&self) -> BElement {
        BElement {
            terms: self.terms.iter().map(|(p, c)| (*p, -c)).collect(),
        }
    }

    /// The unit ι_∘ + ι_•.
    pub fn unit() -> BElement {
        BElement::from_path(BPath::idem(Vertex::Circ)).add(&BElement::from_path(BPath::idem(
            Vertex::Bullet,
        )))
    }

    /// Homogeneous elements have all paths of equal q-degree and endpoints.
    pub fn homogeneous_data(&self) -> Result<Option<(Vertex, Vertex, i64)>> {
        let mut it = self.terms.keys();
        let Some(first) = it.next() else {
            return Ok(None);
        };
        for p in it {
            if p.src != first.src || p.tgt != first.tgt || p.qdeg() != first.qdeg() {
                return Err(Error::NotHomogeneous);
            }
        }
        Ok(Some((first.src, first.tgt, first.qdeg())))
    }
}

impl fmt::Display for BElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(p, c)| if c == &BigInt::from(1) {
                format!("{p}")
            } else {
                format!("{c}·{p}")
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Composes two basis paths, `a` after `b`, applying the relations.
fn path_mul(a: &BPath, b: &BPath) -> Option<BPath> {
    if a.src != b.tgt {
        return None;
    }
    match (a.shape, b.shape) {
        (PathShape::Idem, _) => Some(*b),
        (_, PathShape::Idem) => Some(*a),
        (PathShape::DPower(x), PathShape::DPower(y)) => Some(BPath::dpower(a.src, x + y)),
        (PathShape::SWord(x), PathShape::SWord(y)) => Some(BPath::sword(b.src, x + y)),
        // Any dot meeting a saddle composes through a killed pair:
        // D•S∘ = S∘D∘ = D∘S• = S•D• = 0.
        (PathShape::DPower(_), PathShape::SWord(_)) => None,
        (PathShape::SWord(_), PathShape::DPower(_)) => None,
    }
}

/// Multiplication in B: bilinear extension of path composition (right to
/// left), with non-composable pairs giving 0.
pub fn b_mul(a: &BElement, b: &BElement) -> BElement {
    let mut out = BElement::zero();
    for (pa, ca) in &a.terms {
        for (pb, cb) in &b.terms {
            if let Some(p) = path_mul(pa, pb) {
                out.add_term(p, ca * cb);
            }
        }
    }
    out
}

/// Named generators of the center Z(B), plus G = S² − D.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CenterElement {
    Dcirc,
    Dbullet,
    S,
    G,
}

pub fn center_element(name: CenterElement) -> BElement {
    match name {
        CenterElement::Dcirc => BElement::from_path(BPath::dpower(Vertex::Circ, 1)),
        CenterElement::Dbullet => BElement::from_path(BPath::dpower(Vertex::Bullet, 1)),
        CenterElement::S => BElement::from_path(BPath::sword(Vertex::Circ, 1))
            .add(&BElement::from_path(BPath::sword(Vertex::Bullet, 1))),
        CenterElement::G => {
            // G = S∘S• + S•S∘ − D• − D∘
            BElement::from_path(BPath::sword(Vertex::Bullet, 2))
                .add(&BElement::from_path(BPath::sword(Vertex::Circ, 2)))
                .add(&BElement::scaled(BPath::dpower(Vertex::Bullet, 1), -1))
                .add(&BElement::scaled(BPath::dpower(Vertex::Circ, 1), -1))
        }
    }
}

/// The free ℤ[G]-module basis of ι_y B ι_x together with its q-degrees:
/// {ι, D} on the diagonal, the single saddle off the diagonal.
pub fn hom_module_basis(x: Vertex, y: Vertex) -> (Vec<BPath>, Vec<i64>) {
    let basis = if x == y {
        vec![BPath::idem(x), BPath::dpower(x, 1)]
    } else {
        vec![BPath::sword(x, 1)]
    };
    let qdegs = basis.iter().map(BPath::qdeg).collect();
    (basis, qdegs)
}

/// Coordinates of an element of ι_y B ι_x in the `hom_module_basis(x, y)`
/// basis: a vector of ℤ[G]-monomials. Homogeneous elements always have
/// monomial coordinates.
pub fn hom_coordinates(e: &BElement, x: Vertex, y: Vertex) -> Result<Vec<Monomial>> {
    let (basis, _) = hom_module_basis(x, y);
    let mut coords = vec![Monomial::zero(RingTag::Z); basis.len()];
    for (p, c) in &e.terms {
        if p.src != x || p.tgt != y {
            return Err(Error::NotHomogeneous);
        }
        let (idx, mon) = match (p.shape, x == y) {
            (PathShape::Idem, true) => (0usize, Monomial::new(Scalar::Int(c.clone()), 0)),
            // D^k = (−G)^{k−1} D
            (PathShape::DPower(k), true) => {
                let sign = if (k - 1) % 2 == 0 { c.clone() } else { -c };
                (1, Monomial::new(Scalar::Int(sign), k - 1))
            }
            // (S²)^m = G^m·ι + G^{m−1}·D on the diagonal: two coordinates.
            (PathShape::SWord(n), true) => {
                debug_assert_eq!(n % 2, 0);
                let m = n / 2;
                coords[0] = coords[0].add(&Monomial::new(Scalar::Int(c.clone()), m))?;
                coords[1] = coords[1].add(&Monomial::new(Scalar::Int(c.clone()), m - 1))?;
                continue;
            }
            // S-words of odd length: G^m · S
            (PathShape::SWord(n), false) => {
                debug_assert_eq!(n % 2, 1);
                (0, Monomial::new(Scalar::Int(c.clone()), (n - 1) / 2))
            }
            _ => return Err(Error::NotHomogeneous),
        };
        coords[idx] = coords[idx].add(&mon)?;
    }
    Ok(coords)
}

/// The matrix of "compose with e on the left" as a ℤ[G]-linear map
/// ι_y B ι_x → ι_z B ι_x in the bases of `hom_module_basis`. Entry (r, c) is
/// the coordinate of e·basis[c] on the r-th basis vector of (x, z).
pub fn left_mul_matrix(
    e: &BElement,
    x: Vertex,
    y: Vertex,
    z: Vertex,
) -> Result<Vec<Vec<Monomial>>> {
    match e.homogeneous_data()? {
        None => {}
        Some((src, tgt, _)) => {
            if src != y || tgt != z {
                return Err(Error::NotHomogeneous);
            }
        }
    }
    let (basis_in, _) = hom_module_basis(x, y);
    let (basis_out, _) = hom_module_basis(x, z);
    let mut rows = vec![vec![Monomial::zero(RingTag::Z); basis_in.len()]; basis_out.len()];
    for (c, b) in basis_in.iter().enumerate() {
        let prod = b_mul(e, &BElement::from_path(*b));
        if prod.is_zero() {
            continue;
        }
        let coords = hom_coordinates(&prod, x, z)?;
        for (r, mon) in coords.into_iter().enumerate() {
            rows[r][c] = mon;
        }
    }
    Ok(rows)
}

/// The matrix of "compose with e on the right": ι_y B ι_x → ι_y B ι_w where
/// e maps w → x.
pub fn right_mul_matrix(
    e: &BElement,
    w: Vertex,
    x: Vertex,
    y: Vertex,
) -> Result<Vec<Vec<Monomial>>> {
    match e.homogeneous_data()? {
        None => {}
        Some((src, tgt, _)) => {
            if src != w || tgt != x {
                return Err(Error::NotHomogeneous);
            }
        }
    }
    let (basis_in, _) = hom_module_basis(x, y);
    let (basis_out, _) = hom_module_basis(w, y);
    let mut rows = vec![vec![Monomial::zero(RingTag::Z); basis_in.len()]; basis_out.len()];
    for (c, b) in basis_in.iter().enumerate() {
        let prod = b_mul(&BElement::from_path(*b), e);
        if prod.is_zero() {
            continue;
        }
        let coords = hom_coordinates(&prod, w, y)?;
        for (r, mon) in coords.into_iter().enumerate() {
            rows[r][c] = mon;
        }
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use CenterElement::*;
    use Vertex::*;

    fn path(p: BPath) -> BElement {
        BElement::from_path(p)
    }

    #[test]
    fn saddle_products() {
        // S∘ · S• = the length-2 word from • to •
        let p = b_mul(&path(BPath::sword(Circ, 1)), &path(BPath::sword(Bullet, 1)));
        assert_eq!(p, path(BPath::sword(Bullet, 2)));
        // S• · D• = 0
        let z = b_mul(&path(BPath::sword(Bullet, 1)), &path(BPath::dpower(Bullet, 1)));
        assert!(z.is_zero());
        // G·ι_• = S∘S• − D•
        let g_bullet = b_mul(&center_element(G), &path(BPath::idem(Bullet)));
        let expected = path(BPath::sword(Bullet, 2)).add(&BElement::scaled(BPath::dpower(Bullet, 1), -1));
        assert_eq!(g_bullet, expected);
    }

    #[test]
    fn g_is_central_and_q_minus_two() {
        let g = center_element(G);
        for (p, _) in &g.terms {
            assert_eq!(p.qdeg(), -2);
        }
        let s_circ = path(BPath::sword(Circ, 1));
        assert_eq!(b_mul(&g, &s_circ), b_mul(&s_circ, &g));
        // G·D• = −D•²
        let gd = b_mul(&g, &path(BPath::dpower(Bullet, 1)));
        assert_eq!(gd, BElement::scaled(BPath::dpower(Bullet, 2), -1));
    }

    #[test]
    fn unit_element() {
        let one = BElement::unit();
        for p in [
            BPath::idem(Circ),
            BPath::dpower(Bullet, 3),
            BPath::sword(Circ, 2),
            BPath::sword(Bullet, 5),
        ] {
            assert_eq!(b_mul(&one, &path(p)), path(p));
            assert_eq!(b_mul(&path(p), &one), path(p));
        }
    }

    #[test]
    fn corner_bases() {
        let (b, q) = hom_module_basis(Bullet, Bullet);
        assert_eq!(b, vec![BPath::idem(Bullet), BPath::dpower(Bullet, 1)]);
        assert_eq!(q, vec![0, -2]);
        let (b, q) = hom_module_basis(Bullet, Circ);
        assert_eq!(b, vec![BPath::sword(Bullet, 1)]);
        assert_eq!(q, vec![-1]);
        let (b, q) = hom_module_basis(Circ, Bullet);
        assert_eq!(b, vec![BPath::sword(Circ, 1)]);
        assert_eq!(q, vec![-1]);
    }

    fn zmon(c: i64, k: u32) -> Monomial {
        Monomial::new(Scalar::from_i64(RingTag::Z, c), k)
    }

    #[test]
    fn left_mul_examples() {
        // S∘ : ι_∘Bι_• → ι_•Bι_•  sends S• to G·ι_• + 1·D•.
        let m = left_mul_matrix(&path(BPath::sword(Circ, 1)), Bullet, Circ, Bullet).unwrap();
        assert_eq!(m, vec![vec![zmon(1, 1)], vec![zmon(1, 0)]]);
        // D∘ : kills S•.
        let m = left_mul_matrix(&path(BPath::dpower(Circ, 1)), Bullet, Circ, Circ).unwrap();
        assert_eq!(m, vec![vec![zmon(0, 0)]]);
        // D• : ι_• ↦ D•, D• ↦ −G·D•.
        let m = left_mul_matrix(&path(BPath::dpower(Bullet, 1)), Bullet, Bullet, Bullet).unwrap();
        assert_eq!(
            m,
            vec![vec![zmon(0, 0), zmon(0, 0)], vec![zmon(1, 0), zmon(-1, 1)]]
        );
    }

    #[test]
    fn g_action_closure_is_monomial() {
        // Multiplication by G acts diagonally as the monomial G in every
        // corner basis, so the bases are closed under the ℤ[G]-action.
        let g = center_element(G);
        for x in [Circ, Bullet] {
            for y in [Circ, Bullet] {
                let gy = b_mul(&g, &path(BPath::idem(y)));
                let m = left_mul_matrix(&gy, x, y, y).unwrap();
                let n = m.len();
                for (r, row) in m.iter().enumerate() {
                    assert_eq!(row.len(), n);
                    for (c, entry) in row.iter().enumerate() {
                        if r == c {
                            assert_eq!(entry, &zmon(1, 1));
                        } else {
                            assert!(entry.is_zero());
                        }
                    }
                }
            }
        }
    }

    fn arb_path() -> impl Strategy<Value = BPath> {
        prop_oneof![
            prop_oneof![Just(Circ), Just(Bullet)].prop_map(BPath::idem),
            (prop_oneof![Just(Circ), Just(Bullet)], 1u32..5)
                .prop_map(|(v, k)| BPath::dpower(v, k)),
            (prop_oneof![Just(Circ), Just(Bullet)], 1u32..7)
                .prop_map(|(v, n)| BPath::sword(v, n)),
        ]
    }

    proptest! {
        #[test]
        fn mul_associative(a in arb_path(), b in arb_path(), c in arb_path()) {
            let (a, b, c) = (path(a), path(b), path(c));
            let lhs = b_mul(&b_mul(&a, &b), &c);
            let rhs = b_mul(&a, &b_mul(&b, &c));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn center_commutes(p in arb_path(), which in 0usize..4) {
            // D∘, D•, S² and G are central; S itself only commutes inside
            // the subring it generates with the dots.
            let s = center_element(S);
            let z = match which {
                0 => center_element(Dcirc),
                1 => center_element(Dbullet),
                2 => b_mul(&s, &s),
                _ => center_element(G),
            };
            prop_assert_eq!(b_mul(&z, &path(p)), b_mul(&path(p), &z));
        }

        #[test]
        fn dot_saddle_subring_commutative(i in 0usize..3, j in 0usize..3) {
            let gens = [center_element(Dcirc), center_element(Dbullet), center_element(S)];
            prop_assert_eq!(
                b_mul(&gens[i], &gens[j]),
                b_mul(&gens[j], &gens[i])
            );
        }
    }
}
