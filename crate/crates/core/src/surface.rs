//! The fixed combinatorial model of the genus-g splitting S^3 = A u_T B:
//! surface-group presentation, standard curve atlas, homology with the
//! symplectic intersection form, and side detection for compressing curves.

use std::fmt;

use crate::error::ParseError;
use crate::word::{Letter, Word};

/// Genus of the splitting surface; all arguments here need `g >= 2`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Genus(usize);

impl Genus {
    pub fn new(g: usize) -> Result<Genus, ParseError> {
        if g < 2 {
            Err(ParseError::new(g.to_string(), "genus must be at least 2"))
        } else if g > 64 {
            Err(ParseError::new(g.to_string(), "genus out of supported range"))
        } else {
            Ok(Genus(g))
        }
    }

    pub fn get(self) -> usize {
        self.0
    }

    pub fn handles(self) -> impl Iterator<Item = usize> {
        1..=self.0
    }
}

impl fmt::Display for Genus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for Genus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Genus({})", self.0)
    }
}

/// The two handlebody sides of the splitting.  Curves `a_i` compress in
/// `A`, curves `b_i` compress in `B`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Side {
    A,
    B,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::A => Side::B,
            Side::B => Side::A,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::A => write!(f, "A"),
            Side::B => write!(f, "B"),
        }
    }
}

/// Names for the curves of the standard atlas: meridians `a_i`, longitudes
/// `b_i`, and the separating curves `c_i` (the boundary of a neighborhood
/// of the first `i` standard summands).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum AtlasCurve {
    A(usize),
    B(usize),
    C(usize),
}

impl AtlasCurve {
    pub fn parse(tok: &str) -> Result<AtlasCurve, ParseError> {
        let mut chars = tok.chars();
        let head = chars
            .next()
            .ok_or_else(|| ParseError::new(tok, "empty curve name"))?;
        let idx: usize = chars
            .as_str()
            .parse()
            .map_err(|_| ParseError::new(tok, "curve name needs an index, e.g. a1"))?;
        if idx == 0 {
            return Err(ParseError::new(tok, "curve index is 1-based"));
        }
        match head {
            'a' => Ok(AtlasCurve::A(idx)),
            'b' => Ok(AtlasCurve::B(idx)),
            'c' => Ok(AtlasCurve::C(idx)),
            _ => Err(ParseError::new(tok, "curve names are a<i>, b<i>, c<i>")),
        }
    }

    pub fn index(self) -> usize {
        match self {
            AtlasCurve::A(i) | AtlasCurve::B(i) | AtlasCurve::C(i) => i,
        }
    }
}

impl fmt::Display for AtlasCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AtlasCurve::A(i) => write!(f, "a{}", i),
            AtlasCurve::B(i) => write!(f, "b{}", i),
            AtlasCurve::C(i) => write!(f, "c{}", i),
        }
    }
}

/// Integer homology class in the basis `[a1],[b1],...,[ag],[bg]`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct HomologyClass {
    pub coeffs: Vec<i64>,
}

impl HomologyClass {
    pub fn zero(genus: Genus) -> HomologyClass {
        HomologyClass {
            coeffs: vec![0; 2 * genus.get()],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }
}

/// The standard atlas of the genus-g surface: curve words, the relator,
/// and the pairwise geometric intersection table for atlas curves.
#[derive(Clone, Debug)]
pub struct StandardAtlas {
    genus: Genus,
}

impl StandardAtlas {
    pub fn new(genus: Genus) -> StandardAtlas {
        StandardAtlas { genus }
    }

    pub fn genus(&self) -> Genus {
        self.genus
    }

    /// Meridian curve `a_i`, word `x_i`.
    pub fn meridian(&self, i: usize) -> Word {
        assert!(i >= 1 && i <= self.genus.get(), "meridian index out of range");
        Word::cyclic([Letter::x(i)])
    }

    /// Longitude curve `b_i`, word `y_i`.
    pub fn longitude(&self, i: usize) -> Word {
        assert!(i >= 1 && i <= self.genus.get(), "longitude index out of range");
        Word::cyclic([Letter::y(i)])
    }

    /// Separating curve `c_i = [x1,y1]...[xi,yi]`, `1 <= i <= g-1`.
    pub fn separating(&self, i: usize) -> Word {
        assert!(
            i >= 1 && i < self.genus.get(),
            "separating curve index out of range"
        );
        self.commutator_prefix(i).as_cyclic()
    }

    /// The relator `R = [x1,y1]...[xg,yg]` as a based word.
    pub fn relator(&self) -> Word {
        self.commutator_prefix(self.genus.get())
    }

    /// `[x1,y1]...[xi,yi]` as a based word.
    pub fn commutator_prefix(&self, i: usize) -> Word {
        let mut w = Word::empty();
        for k in 1..=i {
            w = w.mul(&self.handle_commutator(k));
        }
        w
    }

    /// `[x_k, y_k]` as a based word.
    pub fn handle_commutator(&self, k: usize) -> Word {
        Word::generator(Letter::x(k)).commutator(&Word::generator(Letter::y(k)))
    }

    pub fn curve(&self, c: AtlasCurve) -> Word {
        match c {
            AtlasCurve::A(i) => self.meridian(i),
            AtlasCurve::B(i) => self.longitude(i),
            AtlasCurve::C(i) => self.separating(i),
        }
    }

    pub fn curves(&self) -> Vec<AtlasCurve> {
        let g = self.genus.get();
        let mut out = Vec::new();
        for i in 1..=g {
            out.push(AtlasCurve::A(i));
            out.push(AtlasCurve::B(i));
        }
        for i in 1..g {
            out.push(AtlasCurve::C(i));
        }
        out
    }

    /// Geometric intersection number between atlas curves:
    /// `|a_i ∩ b_j| = δ_ij`, all other atlas pairs are disjoint.
    pub fn intersection(&self, u: AtlasCurve, v: AtlasCurve) -> usize {
        match (u, v) {
            (AtlasCurve::A(i), AtlasCurve::B(j)) | (AtlasCurve::B(i), AtlasCurve::A(j)) => {
                usize::from(i == j)
            }
            _ => 0,
        }
    }

    /// Abelianization: exponent sums in the basis `[a1],[b1],...`.
    pub fn homology(&self, w: &Word) -> HomologyClass {
        let mut coeffs = vec![0i64; 2 * self.genus.get()];
        for l in w.letters() {
            let handle = l.handle();
            assert!(
                handle <= self.genus.get(),
                "word mentions handle {handle} beyond genus {}",
                self.genus
            );
            let slot = if l.is_x() {
                2 * handle - 2
            } else {
                2 * handle - 1
            };
            coeffs[slot] += if l.is_positive() { 1 } else { -1 };
        }
        HomologyClass { coeffs }
    }

    /// The symplectic intersection pairing with `<[a_i],[b_i]> = +1`.
    pub fn pairing(&self, u: &HomologyClass, v: &HomologyClass) -> i64 {
        let g = self.genus.get();
        assert_eq!(u.coeffs.len(), 2 * g);
        assert_eq!(v.coeffs.len(), 2 * g);
        let mut total = 0;
        for i in 0..g {
            let (ua, ub) = (u.coeffs[2 * i], u.coeffs[2 * i + 1]);
            let (va, vb) = (v.coeffs[2 * i], v.coeffs[2 * i + 1]);
            total += ua * vb - ub * va;
        }
        total
    }

    /// True iff the image of `w` is trivial in the free quotient of the
    /// named side (kill all `x_i` for side A, all `y_i` for side B).
    ///
    /// For an embedded curve this decides whether it bounds a disk in that
    /// handlebody; embeddedness is the caller's responsibility.
    pub fn bounds_disk_in(&self, side: Side, w: &Word) -> bool {
        self.side_image(side, w).is_empty()
    }

    /// Image of `w` in the free group of the named side: delete the killed
    /// letters and freely reduce.  Side A kills the `x_i`, so the image is
    /// a word in the `y_i`; side B symmetrically.
    pub fn side_image(&self, side: Side, w: &Word) -> Word {
        let keep_x = matches!(side, Side::B);
        let kept = w
            .letters()
            .iter()
            .copied()
            .filter(|l| l.is_x() == keep_x);
        if w.is_cyclic() {
            Word::cyclic(kept)
        } else {
            Word::new(kept)
        }
    }

    /// True iff `w` is null-homologous (the curve-level proxy for being a
    /// separating curve).
    pub fn is_separating(&self, w: &Word) -> bool {
        self.homology(w).is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn atlas(g: usize) -> StandardAtlas {
        StandardAtlas::new(Genus::new(g).unwrap())
    }

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    #[test]
    fn genus_bounds() {
        assert!(Genus::new(1).is_err());
        assert!(Genus::new(2).is_ok());
    }

    #[test]
    fn atlas_side_table() {
        // All a_i bound only in A, all b_i only in B, all c_i in both.
        for g in [2usize, 3, 4] {
            let at = atlas(g);
            for i in 1..=g {
                assert!(at.bounds_disk_in(Side::A, &at.meridian(i)));
                assert!(!at.bounds_disk_in(Side::B, &at.meridian(i)));
                assert!(at.bounds_disk_in(Side::B, &at.longitude(i)));
                assert!(!at.bounds_disk_in(Side::A, &at.longitude(i)));
            }
            for i in 1..g {
                assert!(at.bounds_disk_in(Side::A, &at.separating(i)));
                assert!(at.bounds_disk_in(Side::B, &at.separating(i)));
            }
        }
    }

    #[test]
    fn homology_examples() {
        let at = atlas(2);
        // x1 y1 X1 abelianizes to [b1].
        let h = at.homology(&w("x1 y1 X1"));
        assert_eq!(h.coeffs, vec![0, 1, 0, 0]);
        // c-words abelianize to zero.
        let at3 = atlas(3);
        assert!(at3.homology(&at3.separating(2)).is_zero());
    }

    #[test]
    fn pairing_convention() {
        let at = atlas(2);
        let a1 = at.homology(&at.meridian(1));
        let b1 = at.homology(&at.longitude(1));
        let a2 = at.homology(&at.meridian(2));
        assert_eq!(at.pairing(&a1, &b1), 1);
        assert_eq!(at.pairing(&b1, &a1), -1);
        assert_eq!(at.pairing(&a1, &a2), 0);
    }

    #[test]
    fn pairing_antisymmetric_on_atlas() {
        let at = atlas(3);
        for u in at.curves() {
            for v in at.curves() {
                let hu = at.homology(&at.curve(u));
                let hv = at.homology(&at.curve(v));
                assert_eq!(at.pairing(&hu, &hv), -at.pairing(&hv, &hu));
            }
        }
    }

    #[test]
    fn separating_examples() {
        let at = atlas(3);
        assert!(at.is_separating(&at.separating(1)));
        assert!(!at.is_separating(&at.meridian(1)));
        assert!(!at.is_separating(&w("x1 x2")));
    }

    #[test]
    fn commutator_collapses_in_both_quotients() {
        let at = atlas(2);
        let c1 = at.separating(1);
        assert!(at.bounds_disk_in(Side::A, &c1));
        assert!(at.bounds_disk_in(Side::B, &c1));
    }

    #[test]
    fn relator_is_separating_and_dies_both_sides() {
        let at = atlas(3);
        let r = at.relator();
        assert!(at.homology(&r).is_zero());
        assert!(at.bounds_disk_in(Side::A, &r));
        assert!(at.bounds_disk_in(Side::B, &r));
    }
}
