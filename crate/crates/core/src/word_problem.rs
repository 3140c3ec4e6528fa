//! Exact decision procedures in the surface group
//! `<x1,y1,...,xg,yg | [x1,y1]...[xg,yg]>`: triviality, conjugacy with
//! conjugator extraction, and outer equality of automorphisms.
//!
//! The relator satisfies C'(1/6) for g >= 2 (every piece has length 1, and
//! 1 < |R|/6 = 4g/6), so Dehn's algorithm is a complete solution to the
//! word problem: greedily replace any subword matching more than half of a
//! cyclic rotation of R or R^{-1} by the shorter complement, and a freely
//! reduced word represents the identity iff this terminates at the empty
//! word.

use std::collections::{HashMap, VecDeque};

use crate::error::OracleError;
use crate::surface::{Genus, StandardAtlas};
use crate::word::{Letter, Word};

/// Witness for a conjugacy: `conjugator * w2 * conjugator^{-1} = w1` in the
/// surface group (re-checkable by `is_trivial`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyWitness {
    pub conjugator: Word,
}

/// Search bounds for the conjugacy and outer-equality procedures.
/// Bound-exceeded surfaces as an explicit error, never as a wrong answer.
#[derive(Clone, Debug)]
pub struct SearchBounds {
    /// Node cap for the conjugacy BFS over cyclic words.
    pub conjugacy_nodes: usize,
    /// Extra length allowed above the larger input during the BFS.
    pub length_slack: usize,
    /// Power range for centralizer candidates in `outer_equal`.
    pub centralizer_powers: i32,
}

impl Default for SearchBounds {
    fn default() -> Self {
        SearchBounds {
            conjugacy_nodes: 200_000,
            length_slack: 64,
            centralizer_powers: 24,
        }
    }
}

/// The surface group of a fixed genus, with its decision procedures.
#[derive(Clone, Debug)]
pub struct SurfaceGroup {
    atlas: StandardAtlas,
    /// All cyclic rotations of R and R^{-1}.
    relator_rotations: Vec<Vec<Letter>>,
    half: usize,
    bounds: SearchBounds,
}

impl SurfaceGroup {
    pub fn new(genus: Genus) -> SurfaceGroup {
        SurfaceGroup::with_bounds(genus, SearchBounds::default())
    }

    pub fn with_bounds(genus: Genus, bounds: SearchBounds) -> SurfaceGroup {
        let atlas = StandardAtlas::new(genus);
        let relator = atlas.relator();
        let mut rotations = Vec::new();
        for w in [relator.clone(), relator.inverse()] {
            let n = w.len();
            for k in 0..n {
                rotations.push(w.rotated(k).letters().to_vec());
            }
        }
        let half = 2 * genus.get();
        SurfaceGroup {
            atlas,
            relator_rotations: rotations,
            half,
            bounds,
        }
    }

    pub fn genus(&self) -> Genus {
        self.atlas.genus()
    }

    pub fn atlas(&self) -> &StandardAtlas {
        &self.atlas
    }

    pub fn bounds(&self) -> &SearchBounds {
        &self.bounds
    }

    pub fn relator_len(&self) -> usize {
        4 * self.genus().get()
    }

    /// Longest common prefix of `word[start..]` (not wrapping) with `rot`.
    fn match_len(&self, letters: &[Letter], start: usize, rot: &[Letter]) -> usize {
        let mut m = 0;
        while start + m < letters.len() && m < rot.len() && letters[start + m] == rot[m] {
            m += 1;
        }
        m
    }

    /// One pass of Dehn reduction on a based word: find any subword that
    /// matches more than half of a relator rotation and replace it by the
    /// shorter complement.  Returns the reduced word and whether a
    /// replacement happened.
    fn dehn_step(&self, w: &Word) -> Option<Word> {
        let letters = w.letters();
        let n = letters.len();
        if n <= self.half {
            return None;
        }
        for start in 0..n {
            for rot in &self.relator_rotations {
                let m = self.match_len(letters, start, rot);
                if m > self.half {
                    // rot = u v with u the matched prefix; u = v^{-1} in G.
                    let complement: Vec<Letter> =
                        rot[m..].iter().rev().map(|l| l.inverse()).collect();
                    let new: Vec<Letter> = letters[..start]
                        .iter()
                        .copied()
                        .chain(complement)
                        .chain(letters[start + m..].iter().copied())
                        .collect();
                    return Some(Word::new(new));
                }
            }
        }
        None
    }

    /// Dehn-reduce a based word: freely reduced and containing no subword
    /// longer than half of any relator rotation.
    pub fn dehn_reduce(&self, w: &Word) -> Word {
        let mut cur = w.as_based();
        while let Some(next) = self.dehn_step(&cur) {
            cur = next;
        }
        cur
    }

    /// True iff `w` represents the identity.
    pub fn is_trivial(&self, w: &Word) -> bool {
        if !self.atlas.homology(w).is_zero() {
            return false;
        }
        self.dehn_reduce(&w.as_based()).is_empty()
    }

    /// Cyclic Dehn reduction with a conjugator: returns `(c, u)` with
    /// `w = c * u * c^{-1}` in the group and `u` cyclically Dehn-reduced.
    fn cyclic_dehn_reduce_tracked(&self, w: &Word) -> (Word, Word) {
        let mut conj = Word::empty();
        let mut cur = w.as_based();
        'outer: loop {
            // Strip conjugation: cur = p * core * p^{-1} freely.
            loop {
                let l = cur.letters();
                if l.len() >= 2 && l[0] == l[l.len() - 1].inverse() {
                    conj = conj.mul(&Word::generator(l[0]));
                    cur = Word::new(l[1..l.len() - 1].to_vec());
                } else {
                    break;
                }
            }
            // Wrapping Dehn matches: treat cur as a cyclic word.
            let n = cur.len();
            if n > self.half {
                for start in 0..n {
                    let rotated = cur.rotated(start);
                    if let Some(next) = self.dehn_step(&rotated.as_based()) {
                        // rotate(start) conjugates by the prefix p:
                        // rotated = p^{-1} * cur * p.
                        let p = Word::new(cur.letters()[..start].to_vec());
                        conj = conj.mul(&p);
                        cur = next;
                        continue 'outer;
                    }
                }
            }
            break;
        }
        (conj, cur)
    }

    /// Moves on a cyclic word: every substitution of a cyclic subword that
    /// matches at least `min_match` letters of a relator rotation.  Returns
    /// `(prefix_len, new_based_word)` pairs; the new word equals
    /// `rotate(prefix_len)` of the old one in the group.
    fn cyclic_substitutions(&self, w: &Word, min_match: usize) -> Vec<(usize, Word)> {
        let letters = w.letters();
        let n = letters.len();
        let mut out = Vec::new();
        if n == 0 {
            return out;
        }
        // Doubled word to expose wrapping subwords.
        let doubled: Vec<Letter> = letters.iter().chain(letters.iter()).copied().collect();
        for start in 0..n {
            for rot in &self.relator_rotations {
                let mut m = 0;
                while m < rot.len() && m < n && doubled[start + m] == rot[m] {
                    m += 1;
                }
                for take in min_match..=m {
                    let complement: Vec<Letter> =
                        rot[take..].iter().rev().map(|l| l.inverse()).collect();
                    let rest: Vec<Letter> = doubled[start + take..start + n].to_vec();
                    let new = Word::new(complement.into_iter().chain(rest).collect::<Vec<_>>());
                    out.push((start, new));
                }
            }
        }
        out
    }

    /// Decide conjugacy, returning a verified witness when the classes
    /// agree.  Implements Dehn's conjugacy algorithm: cyclic Dehn
    /// reduction, then a bounded bidirectional search over cyclic words
    /// connected by half-relator substitutions.
    pub fn are_conjugate(
        &self,
        w1: &Word,
        w2: &Word,
    ) -> Result<Option<ConjugacyWitness>, OracleError> {
        if self.atlas.homology(w1) != self.atlas.homology(w2) {
            return Ok(None);
        }
        let (c1, u1) = self.cyclic_dehn_reduce_tracked(w1);
        let (c2, u2) = self.cyclic_dehn_reduce_tracked(w2);
        match (u1.is_empty(), u2.is_empty()) {
            (true, true) => {
                // Both trivial; w1 = c1 c1^{-1} etc., conjugator irrelevant.
                return Ok(Some(ConjugacyWitness {
                    conjugator: Word::empty(),
                }));
            }
            (true, false) | (false, true) => return Ok(None),
            _ => {}
        }

        let cap = self.bounds.conjugacy_nodes;
        let max_len = u1.len().max(u2.len()) + self.bounds.length_slack;
        // Length-preserving and slack-bounded substitutions need matches of
        // at least half-minus-one letters; shorter matches cannot occur on
        // the boundary of a reduced annular diagram.
        let min_match = self.half.saturating_sub(1).max(1);

        // Side 1 search: canonical cyclic form -> conjugator t with
        // w1 = t * form * t^{-1}.
        let explore = |seed_conj: &Word, seed: &Word| -> Result<HashMap<Vec<Letter>, Word>, OracleError> {
            let mut seen: HashMap<Vec<Letter>, Word> = HashMap::new();
            let mut queue: VecDeque<(Word, Word)> = VecDeque::new();
            let canon_conj = |w: &Word, t: &Word| -> (Vec<Letter>, Word) {
                // Rotate w to its canonical rotation; track the conjugator.
                let n = w.len();
                let mut best_k = 0;
                let mut best: Option<Vec<Letter>> = None;
                for k in 0..n.max(1) {
                    let v = w.rotated(k).letters().to_vec();
                    if best.as_ref().map_or(true, |b| v < *b) {
                        best = Some(v);
                        best_k = k;
                    }
                }
                let p = Word::new(w.letters()[..best_k].to_vec());
                (best.unwrap_or_default(), t.mul(&p))
            };
            let (k0, t0) = canon_conj(seed, seed_conj);
            seen.insert(k0.clone(), t0.clone());
            queue.push_back((Word::new(k0), t0));
            while let Some((cur, t)) = queue.pop_front() {
                if seen.len() > cap {
                    return Err(OracleError::CandidateBoundExceeded(format!(
                        "conjugacy search cap {cap}"
                    )));
                }
                for (prefix, next) in self.cyclic_substitutions(&cur, min_match) {
                    if next.len() > max_len {
                        continue;
                    }
                    let p = Word::new(cur.letters()[..prefix].to_vec());
                    let t_next = t.mul(&p);
                    // Re-reduce cyclically, tracking the conjugator.
                    let (extra, core) = self.strip_conjugation(&next);
                    let t_next = t_next.mul(&extra);
                    let (key, t_canon) = canon_conj(&core, &t_next);
                    if !seen.contains_key(&key) {
                        seen.insert(key.clone(), t_canon.clone());
                        queue.push_back((Word::new(key), t_canon));
                    }
                }
            }
            Ok(seen)
        };

        let side1 = explore(&c1, &u1)?;
        let side2 = explore(&c2, &u2)?;
        for (key, t1) in &side1 {
            if let Some(t2) = side2.get(key) {
                // w1 = t1 k t1^{-1}, w2 = t2 k t2^{-1}
                //   => w1 = (t1 t2^{-1}) w2 (t1 t2^{-1})^{-1}.
                let conj = t1.mul(&t2.inverse());
                let check = conj
                    .conjugate(&w2.as_based())
                    .mul(&w1.as_based().inverse());
                debug_assert!(self.is_trivial(&check));
                if self.is_trivial(&check) {
                    return Ok(Some(ConjugacyWitness { conjugator: conj }));
                }
            }
        }
        Ok(None)
    }

    /// Split `w = p * core * p^{-1}` freely, returning `(p, core)`.
    fn strip_conjugation(&self, w: &Word) -> (Word, Word) {
        let mut p = Vec::new();
        let mut letters = w.letters().to_vec();
        while letters.len() >= 2 && letters[0] == letters[letters.len() - 1].inverse() {
            p.push(letters[0]);
            letters = letters[1..letters.len() - 1].to_vec();
        }
        (Word::new(p), Word::new(letters))
    }

    /// True iff `u = v` in the surface group.
    pub fn equal_elements(&self, u: &Word, v: &Word) -> bool {
        self.is_trivial(&u.as_based().mul(&v.as_based().inverse()))
    }

    /// Conjugacy of unoriented curves: `w1` conjugate to `w2` or to
    /// `w2^{-1}` (isotopy of curves ignores orientation).
    pub fn same_curve_class(&self, w1: &Word, w2: &Word) -> Result<bool, OracleError> {
        Ok(self.are_conjugate(w1, w2)?.is_some()
            || self.are_conjugate(w1, &w2.inverse())?.is_some())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(g: usize) -> SurfaceGroup {
        SurfaceGroup::new(Genus::new(g).unwrap())
    }

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    #[test]
    fn relator_is_trivial() {
        for g in [2, 3] {
            let sg = group(g);
            assert!(sg.is_trivial(&sg.atlas().relator()));
        }
    }

    #[test]
    fn generator_is_nontrivial() {
        let sg = group(2);
        assert!(!sg.is_trivial(&w("x1")));
        assert!(!sg.is_trivial(&w("x1 y2")));
    }

    #[test]
    fn product_of_conjugates_of_relator_is_trivial() {
        // u R u^{-1} R^{-1} for u = x2 y1.
        let sg = group(2);
        let r = sg.atlas().relator();
        let u = w("x2 y1");
        let word = u.conjugate(&r).mul(&r.inverse());
        assert!(sg.is_trivial(&word));
    }

    #[test]
    fn conjugate_witness_examples() {
        let sg = group(2);
        // (x1, y2 x1 y2^{-1}) -> witness conjugating the second to the first.
        let got = sg
            .are_conjugate(&w("x1"), &w("y2 x1 Y2"))
            .unwrap()
            .expect("conjugate");
        let lhs = got.conjugator.conjugate(&w("y2 x1 Y2"));
        assert!(sg.equal_elements(&lhs, &w("x1")));
        // Distinct homology: not conjugate.
        assert!(sg
            .are_conjugate(&w("cyclic: x1"), &w("cyclic: x2"))
            .unwrap()
            .is_none());
    }

    #[test]
    fn relator_conjugation_rewriting() {
        let sg = group(2);
        let r = sg.atlas().relator();
        let c1 = sg.atlas().separating(1);
        let rewritten = r.mul(&c1.as_based()).mul(&r.inverse()).as_cyclic();
        let got = sg.are_conjugate(&c1, &rewritten).unwrap().expect("conjugate");
        let lhs = got.conjugator.conjugate(&rewritten.as_based());
        assert!(sg.equal_elements(&lhs, &c1.as_based()));
    }

    #[test]
    fn trivial_pair_conjugate() {
        let sg = group(2);
        let r = sg.atlas().relator();
        assert!(sg
            .are_conjugate(&Word::empty().as_cyclic(), &r.as_cyclic())
            .unwrap()
            .is_some());
        assert!(sg
            .are_conjugate(&w("cyclic: x1"), &r.as_cyclic())
            .unwrap()
            .is_none());
    }

    #[test]
    fn triviality_implies_zero_homology() {
        let sg = group(2);
        let r = sg.atlas().relator();
        assert!(sg.atlas().homology(&r).is_zero());
    }
}
