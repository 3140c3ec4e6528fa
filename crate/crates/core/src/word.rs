//! Words in the surface-group alphabet `x1, y1, ..., xg, yg` with formal
//! inverses.
//!
//! Text syntax: lowercase `x1 y3` for generators, uppercase `X1 Y3` for
//! their inverses, whitespace separated.  A `cyclic:` prefix marks
//! conjugacy-class semantics (the word is kept cyclically reduced and
//! compared as a cyclic word).

use std::fmt;

use crate::error::ParseError;

/// A single letter: one of the 2g surface-group generators or an inverse.
///
/// Encoding: `x_i` is `2i - 1`, `y_i` is `2i` (1-based handle index `i`);
/// the sign is the exponent.  Zero is not a valid letter.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter(i16);

impl Letter {
    pub fn x(handle: usize) -> Letter {
        Letter((2 * handle - 1) as i16)
    }

    pub fn y(handle: usize) -> Letter {
        Letter((2 * handle) as i16)
    }

    pub fn x_inv(handle: usize) -> Letter {
        Letter::x(handle).inverse()
    }

    pub fn y_inv(handle: usize) -> Letter {
        Letter::y(handle).inverse()
    }

    pub fn inverse(self) -> Letter {
        Letter(-self.0)
    }

    /// 1-based handle index this letter belongs to.
    pub fn handle(self) -> usize {
        ((self.0.unsigned_abs() as usize) + 1) / 2
    }

    pub fn is_x(self) -> bool {
        self.0.unsigned_abs() % 2 == 1
    }

    pub fn is_y(self) -> bool {
        !self.is_x()
    }

    pub fn is_positive(self) -> bool {
        self.0 > 0
    }

    /// Index into a length-2g generator array: `x_i -> 2i-2`, `y_i -> 2i-1`.
    pub fn slot(self) -> usize {
        (self.0.unsigned_abs() as usize) - 1
    }

    pub fn from_slot(slot: usize, positive: bool) -> Letter {
        let code = (slot + 1) as i16;
        Letter(if positive { code } else { -code })
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = if self.is_x() { "x" } else { "y" };
        let name = if self.is_positive() {
            name.to_string()
        } else {
            name.to_uppercase()
        };
        write!(f, "{}{}", name, self.handle())
    }
}

/// A word over the surface-group alphabet, kept freely reduced.
///
/// When `cyclic` is set the word represents a conjugacy class (an
/// unbased curve) and is also kept cyclically reduced.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Word {
    letters: Vec<Letter>,
    cyclic: bool,
}

fn free_reduce(letters: impl IntoIterator<Item = Letter>) -> Vec<Letter> {
    let mut out: Vec<Letter> = Vec::new();
    for l in letters {
        if out.last() == Some(&l.inverse()) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

fn cyclic_reduce(mut letters: Vec<Letter>) -> Vec<Letter> {
    while letters.len() >= 2 && *letters.first().unwrap() == letters.last().unwrap().inverse() {
        letters.pop();
        letters.remove(0);
    }
    letters
}

impl Word {
    /// Freely reduced based word.
    pub fn new(letters: impl IntoIterator<Item = Letter>) -> Word {
        Word {
            letters: free_reduce(letters),
            cyclic: false,
        }
    }

    /// Freely and cyclically reduced cyclic word (conjugacy class).
    pub fn cyclic(letters: impl IntoIterator<Item = Letter>) -> Word {
        Word {
            letters: cyclic_reduce(free_reduce(letters)),
            cyclic: true,
        }
    }

    pub fn empty() -> Word {
        Word::new([])
    }

    pub fn generator(letter: Letter) -> Word {
        Word::new([letter])
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_cyclic(&self) -> bool {
        self.cyclic
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    /// Same letters, reinterpreted as a conjugacy class.
    pub fn as_cyclic(&self) -> Word {
        Word::cyclic(self.letters.iter().copied())
    }

    /// Same letters, reinterpreted as a based word.
    pub fn as_based(&self) -> Word {
        Word::new(self.letters.iter().copied())
    }

    pub fn inverse(&self) -> Word {
        let inv = self.letters.iter().rev().map(|l| l.inverse());
        if self.cyclic {
            Word::cyclic(inv)
        } else {
            Word::new(inv)
        }
    }

    /// Concatenation (cyclic flag follows the left operand).
    pub fn mul(&self, rhs: &Word) -> Word {
        let cat = self
            .letters
            .iter()
            .chain(rhs.letters.iter())
            .copied();
        if self.cyclic {
            Word::cyclic(cat)
        } else {
            Word::new(cat)
        }
    }

    /// `self * rhs * self^{-1}` as a based word.
    pub fn conjugate(&self, inner: &Word) -> Word {
        Word::new(
            self.letters
                .iter()
                .copied()
                .chain(inner.letters.iter().copied())
                .chain(self.letters.iter().rev().map(|l| l.inverse())),
        )
    }

    pub fn pow(&self, n: i32) -> Word {
        if n < 0 {
            return self.inverse().pow(-n);
        }
        let mut out = Word::empty();
        for _ in 0..n {
            out = out.mul(self);
        }
        if self.cyclic {
            out.as_cyclic()
        } else {
            out
        }
    }

    /// Commutator `[self, rhs]` as a based word.
    pub fn commutator(&self, rhs: &Word) -> Word {
        self.as_based()
            .mul(rhs)
            .mul(&self.inverse().as_based())
            .mul(&rhs.inverse().as_based())
    }

    /// Rotation by `k` positions (meaningful for cyclic words).
    pub fn rotated(&self, k: usize) -> Word {
        if self.letters.is_empty() {
            return self.clone();
        }
        let n = self.letters.len();
        let k = k % n;
        let rot = self.letters[k..]
            .iter()
            .chain(self.letters[..k].iter())
            .copied();
        if self.cyclic {
            Word::cyclic(rot)
        } else {
            Word::new(rot)
        }
    }

    /// Lexicographically least rotation: canonical representative of the
    /// oriented cyclic class (free-group conjugacy class).
    pub fn canonical_rotation(&self) -> Vec<Letter> {
        let w = self.as_cyclic();
        let n = w.len();
        if n == 0 {
            return Vec::new();
        }
        let mut best: Option<Vec<Letter>> = None;
        for k in 0..n {
            let v = w.rotated(k).letters;
            if best.as_ref().map_or(true, |b| v < *b) {
                best = Some(v);
            }
        }
        best.unwrap()
    }

    /// Lexicographically least rotation of this word or its inverse is a
    /// canonical representative of the unoriented cyclic class.
    pub fn canonical_cyclic(&self) -> Vec<Letter> {
        let w = self.as_cyclic();
        let n = w.len();
        if n == 0 {
            return Vec::new();
        }
        let mut best: Option<Vec<Letter>> = None;
        for cand in [w.clone(), w.inverse()] {
            for k in 0..n {
                let rot = cand.rotated(k);
                let v = rot.letters;
                if best.as_ref().map_or(true, |b| v < *b) {
                    best = Some(v);
                }
            }
        }
        best.unwrap()
    }

    /// Largest handle index appearing in the word (0 for the empty word).
    pub fn max_handle(&self) -> usize {
        self.letters.iter().map(|l| l.handle()).max().unwrap_or(0)
    }

    pub fn parse(text: &str) -> Result<Word, ParseError> {
        let text = text.trim();
        let (cyclic, body) = match text.strip_prefix("cyclic:") {
            Some(rest) => (true, rest),
            None => (false, text),
        };
        let mut letters = Vec::new();
        for tok in body.split_whitespace() {
            letters.push(parse_letter(tok)?);
        }
        Ok(if cyclic {
            Word::cyclic(letters)
        } else {
            Word::new(letters)
        })
    }
}

fn parse_letter(tok: &str) -> Result<Letter, ParseError> {
    let mut chars = tok.chars();
    let head = chars
        .next()
        .ok_or_else(|| ParseError::new(tok, "empty letter"))?;
    let idx: usize = chars
        .as_str()
        .parse()
        .map_err(|_| ParseError::new(tok, "letter needs a 1-based handle index"))?;
    if idx == 0 || idx > 127 {
        return Err(ParseError::new(tok, "handle index out of range"));
    }
    match head {
        'x' => Ok(Letter::x(idx)),
        'y' => Ok(Letter::y(idx)),
        'X' => Ok(Letter::x_inv(idx)),
        'Y' => Ok(Letter::y_inv(idx)),
        _ => Err(ParseError::new(tok, "letters are x/y with optional capital for inverse")),
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.cyclic {
            write!(f, "cyclic:")?;
            if !self.letters.is_empty() {
                write!(f, " ")?;
            }
        }
        let mut first = true;
        for l in &self.letters {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{}", l)?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Free (and, for cyclic words, cyclic) reduction of an arbitrary letter
/// sequence.  Idempotent and length-nonincreasing.
pub fn reduce(w: &Word) -> Word {
    if w.cyclic {
        Word::cyclic(w.letters.iter().copied())
    } else {
        Word::new(w.letters.iter().copied())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    #[test]
    fn free_reduction() {
        assert!(w("x1 X1").is_empty());
        assert_eq!(w("x1 y2"), w("x1 y2"));
        assert_eq!(Word::new([Letter::x(1), Letter::x_inv(1)]), Word::empty());
    }

    #[test]
    fn cyclic_reduction() {
        assert_eq!(w("cyclic: y1 x2 Y1"), w("cyclic: x2"));
        assert_eq!(w("cyclic: x1 y1 X1"), w("cyclic: y1"));
    }

    #[test]
    fn reduce_idempotent() {
        let v = w("cyclic: y1 x2 Y1");
        assert_eq!(reduce(&v), v);
    }

    #[test]
    fn inverse_and_mul() {
        let a = w("x1 y1");
        assert_eq!(a.mul(&a.inverse()), Word::empty());
        assert_eq!(a.inverse(), w("Y1 X1"));
    }

    #[test]
    fn commutator_shape() {
        let k = Word::generator(Letter::x(1)).commutator(&Word::generator(Letter::y(1)));
        assert_eq!(k, w("x1 y1 X1 Y1"));
    }

    #[test]
    fn parse_display_round_trip() {
        for s in ["x1 y3 X1", "cyclic: x2 Y1", ""] {
            let v = Word::parse(s).unwrap();
            assert_eq!(Word::parse(&v.to_string()).unwrap(), v);
        }
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(Word::parse("z1").is_err());
        assert!(Word::parse("x0").is_err());
        assert!(Word::parse("x").is_err());
    }

    #[test]
    fn canonical_cyclic_is_rotation_invariant() {
        let a = w("cyclic: x1 y1 X1 Y1");
        for k in 0..4 {
            assert_eq!(a.rotated(k).canonical_cyclic(), a.canonical_cyclic());
        }
        assert_eq!(a.inverse().canonical_cyclic(), a.canonical_cyclic());
    }
}
