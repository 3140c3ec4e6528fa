//! Finite-quotient screening: an independent test oracle for the word
//! problem.  Words are evaluated in a library of homomorphisms onto small
//! permutation groups; any nontrivial image certifies nontriviality.
//!
//! This ships as a cross-check for Dehn's algorithm, not as the production
//! decision path.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::surface::Genus;
use crate::word::Word;

/// A permutation of `{0, .., degree-1}` stored as the image vector.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Perm(Vec<u8>);

impl Perm {
    pub fn identity(degree: usize) -> Perm {
        Perm((0..degree as u8).collect())
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &v)| i as u8 == v)
    }

    pub fn compose(&self, other: &Perm) -> Perm {
        // (self * other)(i) = self(other(i))
        Perm(other.0.iter().map(|&i| self.0[i as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut out = vec![0u8; self.0.len()];
        for (i, &v) in self.0.iter().enumerate() {
            out[v as usize] = i as u8;
        }
        Perm(out)
    }

    fn random(degree: usize, rng: &mut impl Rng) -> Perm {
        let mut v: Vec<u8> = (0..degree as u8).collect();
        for i in (1..v.len()).rev() {
            let j = rng.gen_range(0..=i);
            v.swap(i, j);
        }
        Perm(v)
    }

    fn commutator(&self, other: &Perm) -> Perm {
        self.compose(other)
            .compose(&self.inverse())
            .compose(&other.inverse())
    }

    fn cycle_type(&self) -> Vec<usize> {
        let n = self.0.len();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut cur = start;
            while !seen[cur] {
                seen[cur] = true;
                cur = self.0[cur] as usize;
                len += 1;
            }
            cycles.push(len);
        }
        cycles.sort_unstable();
        cycles
    }

    /// Some permutation conjugating `self` to `target` (same cycle type
    /// required).
    fn conjugating_to(&self, target: &Perm) -> Option<Perm> {
        if self.cycle_type() != target.cycle_type() {
            return None;
        }
        let n = self.0.len();
        let collect_cycles = |p: &Perm| {
            let mut seen = vec![false; n];
            let mut cycles: Vec<Vec<u8>> = Vec::new();
            for start in 0..n {
                if seen[start] {
                    continue;
                }
                let mut cyc = Vec::new();
                let mut cur = start;
                while !seen[cur] {
                    seen[cur] = true;
                    cyc.push(cur as u8);
                    cur = p.0[cur] as usize;
                }
                cycles.push(cyc);
            }
            cycles.sort_by_key(|c| c.len());
            cycles
        };
        let cs = collect_cycles(self);
        let ct = collect_cycles(target);
        let mut out = vec![0u8; n];
        for (a, b) in cs.iter().zip(ct.iter()) {
            debug_assert_eq!(a.len(), b.len());
            for (i, &x) in a.iter().enumerate() {
                out[x as usize] = b[i];
            }
        }
        let conj = Perm(out);
        debug_assert_eq!(conj.compose(self).compose(&conj.inverse()), *target);
        Some(conj)
    }
}

/// A homomorphism from the surface group to a symmetric group, given by
/// generator images `(x1, y1, ..., xg, yg)` satisfying the relator.
#[derive(Clone, Debug)]
pub struct PermHom {
    images: Vec<Perm>,
}

impl PermHom {
    pub fn evaluate(&self, w: &Word) -> Perm {
        let degree = self.images[0].degree();
        let mut acc = Perm::identity(degree);
        for l in w.letters() {
            let img = &self.images[l.slot()];
            let img = if l.is_positive() {
                img.clone()
            } else {
                img.inverse()
            };
            acc = acc.compose(&img);
        }
        acc
    }
}

/// A library of quotient homomorphisms for one genus.
#[derive(Clone, Debug)]
pub struct ScreeningOracle {
    homs: Vec<PermHom>,
}

impl ScreeningOracle {
    /// Build `count` homomorphisms onto permutation groups of degree up to
    /// 8, deterministically from the seed.
    pub fn new(genus: Genus, count: usize, seed: u64) -> ScreeningOracle {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = genus.get();
        let mut homs = Vec::new();
        let mut degree = 4usize;
        while homs.len() < count {
            if let Some(hom) = Self::try_build(g, degree, &mut rng) {
                homs.push(hom);
            }
            degree += 1;
            if degree > 8 {
                degree = 4;
            }
        }
        ScreeningOracle { homs }
    }

    /// Pick the first g-1 handle image pairs freely, then solve
    /// `[x_g, y_g] = C` with `C` the inverse of the accumulated commutator
    /// product; solvable whenever `x_g^{-1}` and `x_g^{-1} C` share a cycle
    /// type.
    fn try_build(g: usize, degree: usize, rng: &mut impl Rng) -> Option<PermHom> {
        for _ in 0..64 {
            let mut images = Vec::new();
            let mut acc = Perm::identity(degree);
            for _ in 0..g - 1 {
                let x = Perm::random(degree, rng);
                let y = Perm::random(degree, rng);
                acc = acc.compose(&x.commutator(&y));
                images.push(x);
                images.push(y);
            }
            let c = acc.inverse();
            let x = Perm::random(degree, rng);
            // need y with y x^{-1} y^{-1} = x^{-1} c
            let lhs = x.inverse();
            let rhs = x.inverse().compose(&c);
            if let Some(y0) = lhs.conjugating_to(&rhs) {
                // Randomize within the solution coset: composing with a
                // centralizer element of `lhs` keeps the equation solved.
                let r = Perm::random(degree, rng);
                let y = if r.compose(&lhs).compose(&r.inverse()) == lhs {
                    y0.compose(&r)
                } else {
                    y0
                };
                debug_assert_eq!(y.compose(&lhs).compose(&y.inverse()), rhs);
                images.push(x);
                images.push(y);
                // verify the relator
                let mut total = Perm::identity(degree);
                for i in 0..g {
                    total = total.compose(&images[2 * i].commutator(&images[2 * i + 1]));
                }
                if total.is_identity() {
                    return Some(PermHom { images });
                }
            }
        }
        None
    }

    pub fn len(&self) -> usize {
        self.homs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.homs.is_empty()
    }

    /// True iff some quotient certifies that `w` is nontrivial.
    pub fn certifies_nontrivial(&self, w: &Word) -> bool {
        self.homs.iter().any(|h| !h.evaluate(w).is_identity())
    }

    /// True iff some quotient separates the conjugacy classes (distinct
    /// cycle-type data anywhere proves non-conjugacy).
    pub fn certifies_nonconjugate(&self, w1: &Word, w2: &Word) -> bool {
        self.homs.iter().any(|h| {
            let p1 = h.evaluate(w1);
            let p2 = h.evaluate(w2);
            p1.cycle_type() != p2.cycle_type()
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::Genus;
    use crate::word::Word;

    #[test]
    fn library_builds() {
        for g in [2usize, 3] {
            let oracle = ScreeningOracle::new(Genus::new(g).unwrap(), 16, 7);
            assert_eq!(oracle.len(), 16);
        }
    }

    #[test]
    fn relator_maps_to_identity() {
        let genus = Genus::new(2).unwrap();
        let oracle = ScreeningOracle::new(genus, 16, 7);
        let r = crate::surface::StandardAtlas::new(genus).relator();
        assert!(!oracle.certifies_nontrivial(&r));
    }

    #[test]
    fn generators_detected_nontrivial() {
        let genus = Genus::new(2).unwrap();
        let oracle = ScreeningOracle::new(genus, 16, 7);
        for s in ["x1", "y2", "x1 y1"] {
            assert!(oracle.certifies_nontrivial(&Word::parse(s).unwrap()));
        }
    }

    #[test]
    fn conjugates_share_cycle_data() {
        let genus = Genus::new(2).unwrap();
        let oracle = ScreeningOracle::new(genus, 16, 7);
        let w = Word::parse("x1 y1").unwrap();
        let c = Word::parse("y2 x2").unwrap();
        let conj = c.conjugate(&w);
        assert!(!oracle.certifies_nonconjugate(&w, &conj));
        assert!(oracle.certifies_nonconjugate(
            &Word::parse("x1").unwrap(),
            &Word::parse("x1 x1").unwrap()
        ));
    }
}
