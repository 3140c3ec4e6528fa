//! The move alphabet of the Goeritz group (the five Powell generators,
//! Dehn twists about atlas curves, bubble slides), compilation of move
//! words to surface-group automorphisms, the action on curves and
//! homology, and certified mapping-class equality.

use std::collections::HashMap;
use std::fmt;
use std::sync::Mutex;

use crate::error::{OracleError, ParseError, TableError};
use crate::surface::{AtlasCurve, Genus, Side, StandardAtlas};
use crate::word::{Letter, Word};
use crate::word_problem::SurfaceGroup;

/// Kinds of moves in the alphabet.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum SymbolKind {
    Dnu,
    Deta,
    Deta12,
    Domega,
    Dtheta,
    /// Dehn twist about an atlas curve.
    Twist(AtlasCurve),
    /// Slide of the bubble around handle `handle` along the atlas curve
    /// `loop_curve` (a meridian or longitude of another handle).
    BubbleSlide { handle: usize, loop_curve: AtlasCurve },
}

impl SymbolKind {
    pub fn is_powell(self) -> bool {
        matches!(
            self,
            SymbolKind::Dnu
                | SymbolKind::Deta
                | SymbolKind::Deta12
                | SymbolKind::Domega
                | SymbolKind::Dtheta
        )
    }
}

/// A move-alphabet symbol with an exponent of +-1.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct GeneratorSymbol {
    pub kind: SymbolKind,
    pub power: i8,
}

impl GeneratorSymbol {
    pub fn new(kind: SymbolKind) -> GeneratorSymbol {
        GeneratorSymbol { kind, power: 1 }
    }

    pub fn inverse(self) -> GeneratorSymbol {
        GeneratorSymbol {
            kind: self.kind,
            power: -self.power,
        }
    }
}

impl fmt::Display for GeneratorSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            SymbolKind::Dnu => write!(f, "Dnu")?,
            SymbolKind::Deta => write!(f, "Deta")?,
            SymbolKind::Deta12 => write!(f, "Deta12")?,
            SymbolKind::Domega => write!(f, "Domega")?,
            SymbolKind::Dtheta => write!(f, "Dtheta")?,
            SymbolKind::Twist(c) => write!(f, "T[{}]", c)?,
            SymbolKind::BubbleSlide { handle, loop_curve } => {
                write!(f, "Slide[{};{}]", handle, loop_curve)?
            }
        }
        if self.power < 0 {
            write!(f, "'")?;
        }
        Ok(())
    }
}

/// A formal word in the move alphabet.  Composition convention: the
/// rightmost symbol acts first, as in function composition.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MCWord {
    pub symbols: Vec<GeneratorSymbol>,
}

impl MCWord {
    pub fn identity() -> MCWord {
        MCWord { symbols: vec![] }
    }

    pub fn single(kind: SymbolKind) -> MCWord {
        MCWord {
            symbols: vec![GeneratorSymbol::new(kind)],
        }
    }

    pub fn from_symbols(symbols: Vec<GeneratorSymbol>) -> MCWord {
        MCWord { symbols }
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// Concatenation: `self * rhs` acts by `rhs` first.
    pub fn compose(&self, rhs: &MCWord) -> MCWord {
        MCWord {
            symbols: self
                .symbols
                .iter()
                .chain(rhs.symbols.iter())
                .copied()
                .collect(),
        }
    }

    pub fn inverse(&self) -> MCWord {
        MCWord {
            symbols: self.symbols.iter().rev().map(|s| s.inverse()).collect(),
        }
    }

    /// `self * inner * self^{-1}`.
    pub fn conjugate(&self, inner: &MCWord) -> MCWord {
        self.compose(inner).compose(&self.inverse())
    }

    pub fn is_powell(&self) -> bool {
        self.symbols.iter().all(|s| s.kind.is_powell())
    }

    /// Move-word text syntax: `Dnu Deta Deta12 Domega Dtheta T[a1] T[b2]
    /// Slide[1;a2]`, inverse suffix `'`.
    pub fn parse(text: &str) -> Result<MCWord, ParseError> {
        let mut symbols = Vec::new();
        for tok in text.split_whitespace() {
            symbols.push(parse_symbol(tok)?);
        }
        Ok(MCWord { symbols })
    }
}

fn parse_symbol(tok: &str) -> Result<GeneratorSymbol, ParseError> {
    let (body, power) = match tok.strip_suffix('\'') {
        Some(b) => (b, -1),
        None => (tok, 1),
    };
    let kind = if let Some(rest) = body.strip_prefix("T[") {
        let inner = rest
            .strip_suffix(']')
            .ok_or_else(|| ParseError::new(tok, "missing closing bracket"))?;
        SymbolKind::Twist(AtlasCurve::parse(inner)?)
    } else if let Some(rest) = body.strip_prefix("Slide[") {
        let inner = rest
            .strip_suffix(']')
            .ok_or_else(|| ParseError::new(tok, "missing closing bracket"))?;
        let (h, c) = inner
            .split_once(';')
            .ok_or_else(|| ParseError::new(tok, "slide syntax is Slide[handle;curve]"))?;
        let handle: usize = h
            .parse()
            .map_err(|_| ParseError::new(tok, "bad handle index"))?;
        SymbolKind::BubbleSlide {
            handle,
            loop_curve: AtlasCurve::parse(c)?,
        }
    } else {
        match body {
            "Dnu" => SymbolKind::Dnu,
            "Deta" => SymbolKind::Deta,
            "Deta12" => SymbolKind::Deta12,
            "Domega" => SymbolKind::Domega,
            "Dtheta" => SymbolKind::Dtheta,
            _ => return Err(ParseError::new(tok, "unknown move symbol")),
        }
    };
    Ok(GeneratorSymbol { kind, power })
}

impl fmt::Display for MCWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for s in &self.symbols {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{}", s)?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for MCWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// An endomorphism of the surface group given by images of the 2g
/// generators; a valid one represents a mapping class.
#[derive(Clone, PartialEq, Eq)]
pub struct PiOneAuto {
    genus: Genus,
    /// Image of the generator in each slot (`x1, y1, ..., xg, yg`).
    images: Vec<Word>,
}

impl PiOneAuto {
    pub fn identity(genus: Genus) -> PiOneAuto {
        let images = (0..2 * genus.get())
            .map(|slot| Word::generator(Letter::from_slot(slot, true)))
            .collect();
        PiOneAuto { genus, images }
    }

    pub fn new(genus: Genus, images: Vec<Word>) -> PiOneAuto {
        assert_eq!(images.len(), 2 * genus.get());
        PiOneAuto {
            genus,
            images: images.into_iter().map(|w| w.as_based()).collect(),
        }
    }

    pub fn genus(&self) -> Genus {
        self.genus
    }

    pub fn images(&self) -> &[Word] {
        &self.images
    }

    pub fn image_of(&self, l: Letter) -> Word {
        let base = &self.images[l.slot()];
        if l.is_positive() {
            base.clone()
        } else {
            base.inverse()
        }
    }

    /// Apply the substitution to a word (free reduction included; cyclic
    /// words stay cyclic).
    pub fn apply(&self, w: &Word) -> Word {
        let letters = w
            .letters()
            .iter()
            .flat_map(|l| self.image_of(*l).letters().to_vec());
        if w.is_cyclic() {
            Word::cyclic(letters.collect::<Vec<_>>())
        } else {
            Word::new(letters.collect::<Vec<_>>())
        }
    }

    /// Composition `self . rhs` (rhs acts first).
    pub fn compose(&self, rhs: &PiOneAuto) -> PiOneAuto {
        let images = rhs.images.iter().map(|w| self.apply(w)).collect();
        PiOneAuto {
            genus: self.genus,
            images,
        }
    }

    /// Conjugation by `w`: `z -> w z w^{-1}` post-composed with self.
    pub fn then_inner(&self, w: &Word) -> PiOneAuto {
        let images = self.images.iter().map(|img| w.conjugate(img)).collect();
        PiOneAuto {
            genus: self.genus,
            images,
        }
    }

    /// The induced 2g x 2g integer matrix on homology (column `slot` is
    /// the class of the image of that generator).
    pub fn homology_matrix(&self, atlas: &StandardAtlas) -> Vec<Vec<i64>> {
        let n = 2 * self.genus.get();
        let mut m = vec![vec![0i64; n]; n];
        for (slot, img) in self.images.iter().enumerate() {
            let h = atlas.homology(img);
            for (row, item) in m.iter_mut().enumerate() {
                item[slot] = h.coeffs[row];
            }
        }
        m
    }

    /// Does the homology action preserve the symplectic pairing?
    pub fn is_symplectic(&self, atlas: &StandardAtlas) -> bool {
        let n = 2 * self.genus.get();
        let m = self.homology_matrix(atlas);
        // J has blocks [[0,1],[-1,0]] along the diagonal.
        let j_pair = |u: &[i64], v: &[i64]| -> i64 {
            let g = n / 2;
            let mut t = 0;
            for i in 0..g {
                t += u[2 * i] * v[2 * i + 1] - u[2 * i + 1] * v[2 * i];
            }
            t
        };
        let col = |k: usize| -> Vec<i64> { (0..n).map(|r| m[r][k]).collect() };
        for p in 0..n {
            for q in 0..n {
                let expect = if p / 2 == q / 2 {
                    match (p % 2, q % 2) {
                        (0, 1) => 1,
                        (1, 0) => -1,
                        _ => 0,
                    }
                } else {
                    0
                };
                if j_pair(&col(p), &col(q)) != expect {
                    return false;
                }
            }
        }
        true
    }

    /// Validity of a table entry: the relator maps to a conjugate of
    /// itself in the free group (orientation-preserving) and the homology
    /// action is symplectic.
    pub fn validate(&self, atlas: &StandardAtlas) -> Result<(), String> {
        let r = atlas.relator();
        let image = self.apply(&r);
        if image.as_cyclic().canonical_rotation() != r.as_cyclic().canonical_rotation() {
            return Err("relator image is not freely conjugate to the relator".into());
        }
        if !self.is_symplectic(atlas) {
            return Err("homology action is not symplectic".into());
        }
        if self.images.iter().any(|w| w.is_empty()) {
            return Err("a generator maps to the trivial word".into());
        }
        Ok(())
    }
}

impl fmt::Debug for PiOneAuto {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "PiOneAuto(genus {}):", self.genus)?;
        for (slot, img) in self.images.iter().enumerate() {
            writeln!(
                f,
                "  {} -> {}",
                Letter::from_slot(slot, true),
                img
            )?;
        }
        Ok(())
    }
}

/// Outer equality of two automorphisms: is there a single `u` with
/// `f(z) = u h(z) u^{-1}` for every generator `z`?
///
/// Candidate conjugators are harvested from the conjugacy of the images of
/// the first generator; since centralizers in the surface group are cyclic
/// and generator images are not proper powers, the candidate set is the
/// conjugator times powers of that image.
pub fn outer_equal(
    sg: &SurfaceGroup,
    f: &PiOneAuto,
    h: &PiOneAuto,
) -> Result<bool, OracleError> {
    assert_eq!(f.genus(), h.genus());
    if f.images == h.images {
        return Ok(true);
    }
    let atlas = sg.atlas();
    if f.homology_matrix(atlas) != h.homology_matrix(atlas) {
        // Inner automorphisms act trivially on homology.
        return Ok(false);
    }
    let n = 2 * f.genus().get();
    let f0 = &f.images[0];
    let h0 = &h.images[0];
    let witness = match sg.are_conjugate(f0, h0)? {
        Some(w) => w,
        None => return Ok(false),
    };
    let t0 = witness.conjugator;
    // All solutions of t h0 t^{-1} = f0 are f0^m * t0.
    let bound = sg.bounds().centralizer_powers;
    // Find m on the first slot where the naive candidate fails, if any.
    let check_all = |t: &Word| -> bool {
        (0..n).all(|slot| {
            let lhs = t.conjugate(&h.images[slot]);
            sg.equal_elements(&lhs, &f.images[slot])
        })
    };
    if check_all(&t0) {
        return Ok(true);
    }
    // Pick a slot where t0 fails and solve for the power there; the
    // solution power is unique, so the remaining slots decide.
    let fail_slot = (0..n)
        .find(|&slot| {
            let lhs = t0.conjugate(&h.images[slot]);
            !sg.equal_elements(&lhs, &f.images[slot])
        })
        .expect("some slot must fail");
    let a = t0.conjugate(&h.images[fail_slot]);
    let b = &f.images[fail_slot];
    // Definitive negative: if a and b are not even conjugate, no power of
    // f0 can fix things.
    if sg.are_conjugate(&a, b)?.is_none() {
        return Ok(false);
    }
    for m in 1..=bound {
        for sign in [1i32, -1] {
            let t = f0.pow(m * sign).mul(&t0);
            let lhs = t.conjugate(&h.images[fail_slot]);
            if sg.equal_elements(&lhs, &f.images[fail_slot]) {
                return Ok(check_all(&t));
            }
        }
    }
    Err(OracleError::CandidateBoundExceeded(format!(
        "outer-equality centralizer powers up to {bound}"
    )))
}

/// A single validated table entry: the automorphism and its inverse.
#[derive(Clone, Debug)]
pub struct TableEntry {
    pub auto: PiOneAuto,
    pub inverse: PiOneAuto,
}

/// The generator table: every symbol of the move alphabet compiled to a
/// surface-group automorphism.  Immutable after load.
pub struct GeneratorTable {
    genus: Genus,
    group: SurfaceGroup,
    entries: HashMap<SymbolKind, TableEntry>,
    /// Transported slide entries are derived on demand and memoized.
    derived: Mutex<HashMap<SymbolKind, TableEntry>>,
}

impl fmt::Debug for GeneratorTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GeneratorTable(genus {})", self.genus)
    }
}

impl GeneratorTable {
    pub fn genus(&self) -> Genus {
        self.genus
    }

    pub fn group(&self) -> &SurfaceGroup {
        &self.group
    }

    pub fn atlas(&self) -> &StandardAtlas {
        self.group.atlas()
    }

    /// Compile a move word to an automorphism (rightmost symbol first).
    pub fn compile(&self, w: &MCWord) -> Result<PiOneAuto, TableError> {
        let mut acc = PiOneAuto::identity(self.genus);
        for s in &w.symbols {
            let entry = self.entry(s.kind)?;
            let auto = if s.power >= 0 {
                &entry.auto
            } else {
                &entry.inverse
            };
            acc = acc.compose(auto);
        }
        Ok(acc)
    }

    /// Action of a compiled move on a curve (conjugacy class).
    pub fn act_on_curve(&self, f: &PiOneAuto, w: &Word) -> Word {
        f.apply(&w.as_cyclic())
    }

    /// Mapping-class equality of two move words: homology screen first,
    /// then the full outer-equality oracle.
    pub fn equals(&self, w1: &MCWord, w2: &MCWord) -> Result<bool, TableError> {
        let f = self.compile(w1)?;
        let h = self.compile(w2)?;
        if f.homology_matrix(self.atlas()) != h.homology_matrix(self.atlas()) {
            return Ok(false);
        }
        Ok(outer_equal(&self.group, &f, &h)?)
    }

    fn entry(&self, kind: SymbolKind) -> Result<TableEntry, TableError> {
        if let Some(e) = self.entries.get(&kind) {
            return Ok(e.clone());
        }
        if let Some(e) = self.derived.lock().unwrap().get(&kind) {
            return Ok(e.clone());
        }
        let e = self.derive(kind)?;
        self.derived
            .lock()
            .unwrap()
            .insert(kind, e.clone());
        Ok(e)
    }

    /// Derive non-base entries: bubble slides at arbitrary index pairs are
    /// transported from the (1,2) models by canonical permutation words.
    fn derive(&self, kind: SymbolKind) -> Result<TableEntry, TableError> {
        match kind {
            SymbolKind::BubbleSlide { handle, loop_curve } => {
                let g = self.genus.get();
                let j = loop_curve.index();
                if handle == 0 || handle > g || j == 0 || j > g {
                    return Err(TableError::GenusMismatch {
                        table: g,
                        used: handle.max(j),
                    });
                }
                if handle == j {
                    return Err(TableError::InvalidTableEntry {
                        symbol: format!("{}", GeneratorSymbol::new(kind)),
                        reason: "slide loop must go around a different handle".into(),
                    });
                }
                if matches!(loop_curve, AtlasCurve::C(_)) {
                    return Err(TableError::InvalidTableEntry {
                        symbol: format!("{}", GeneratorSymbol::new(kind)),
                        reason: "slide loops are meridians or longitudes".into(),
                    });
                }
                let model = match loop_curve {
                    AtlasCurve::A(_) => self.entry(SymbolKind::BubbleSlide {
                        handle: 1,
                        loop_curve: AtlasCurve::A(2),
                    })?,
                    AtlasCurve::B(_) => self.entry(SymbolKind::BubbleSlide {
                        handle: 1,
                        loop_curve: AtlasCurve::B(2),
                    })?,
                    AtlasCurve::C(_) => unreachable!(),
                };
                if (handle, j) == (1, 2) {
                    return Ok(model);
                }
                // Transport: P carries handle `handle` to 1 and `j` to 2.
                let p = self.compile(&relocation_word(self.genus, handle, j))?;
                let p_inv = self.compile(&relocation_word(self.genus, handle, j).inverse())?;
                let auto = p_inv.compose(&model.auto).compose(&p);
                let inverse = p_inv.compose(&model.inverse).compose(&p);
                Ok(TableEntry { auto, inverse })
            }
            _ => Err(TableError::UnknownSymbol(format!(
                "{}",
                GeneratorSymbol::new(kind)
            ))),
        }
    }

    /// Validate every base entry (relator conjugacy, symplectic homology,
    /// inverse consistency).
    pub fn validate(&self) -> Result<(), TableError> {
        for (kind, entry) in &self.entries {
            let name = format!("{}", GeneratorSymbol::new(*kind));
            entry
                .auto
                .validate(self.atlas())
                .map_err(|reason| TableError::InvalidTableEntry {
                    symbol: name.clone(),
                    reason,
                })?;
            entry
                .inverse
                .validate(self.atlas())
                .map_err(|reason| TableError::InvalidTableEntry {
                    symbol: name.clone(),
                    reason: format!("inverse: {reason}"),
                })?;
            let composed = entry.auto.compose(&entry.inverse);
            let id = PiOneAuto::identity(self.genus);
            for slot in 0..2 * self.genus.get() {
                if !self
                    .group
                    .equal_elements(&composed.images()[slot], &id.images()[slot])
                {
                    return Err(TableError::InvalidTableEntry {
                        symbol: name,
                        reason: format!(
                            "inverse fails on generator {}",
                            Letter::from_slot(slot, true)
                        ),
                    });
                }
            }
        }
        Ok(())
    }
}

/// Canonical permutation word carrying handle `i` to position 1 and handle
/// `j` to position 2 (`i != j`).  Built from `Deta` rotations and the
/// adjacent swap `Deta12` conjugated by rotations; deterministic.
pub fn relocation_word(genus: Genus, i: usize, j: usize) -> MCWord {
    let g = genus.get();
    assert!(i != j && i >= 1 && i <= g && j >= 1 && j <= g);
    // Represent the permutation as a sequence of moves on positions.
    // Track where each handle currently sits while emitting moves.
    let mut pos: Vec<usize> = (0..=g).collect(); // pos[h] = current position of handle h
    let mut word = MCWord::identity();
    let deta = GeneratorSymbol::new(SymbolKind::Deta);

    // Deta sends handle at position k to position k+1 (mod g);
    // Deta^(1 - p) brings position p to position 1.
    let rotate_to_front = |word: &mut MCWord, pos: &mut Vec<usize>, p: usize| {
        // Compose with Deta^(g + 1 - p): position p -> 1.
        let shift = (g + 1 - p) % g;
        for _ in 0..shift {
            word.symbols.insert(0, deta);
        }
        for v in pos.iter_mut().skip(1) {
            *v = (*v - 1 + shift) % g + 1;
        }
    };
    // Adjacent swap of positions 1 and 2.
    let swap12 = |word: &mut MCWord, pos: &mut Vec<usize>| {
        word.symbols.insert(0, GeneratorSymbol::new(SymbolKind::Deta12));
        for v in pos.iter_mut().skip(1) {
            if *v == 1 {
                *v = 2;
            } else if *v == 2 {
                *v = 1;
            }
        }
    };

    let pi = pos[i];
    rotate_to_front(&mut word, &mut pos, pi);
    if pos[j] != 2 {
        // Bring j's position to 2 without disturbing position 1: rotate j
        // to front, swap, repeat.  Simple scheme: while j is not at 2,
        // rotate so that j is at position 2's predecessor... use a direct
        // cycle: move j to 2 by conjugated swaps along the cycle.
        while pos[j] != 2 {
            let p = pos[j];
            // Move position p to p-1 (p >= 3): rotate p-1 to front, swap,
            // rotate back.  Equivalent permutation word built inline.
            let shift = (g + 1 - (p - 1)) % g;
            for _ in 0..shift {
                word.symbols.insert(0, deta);
            }
            for v in pos.iter_mut().skip(1) {
                *v = (*v - 1 + shift) % g + 1;
            }
            swap12(&mut word, &mut pos);
            // Rotate back so handle i returns to position 1.
            let back = (g - shift) % g;
            for _ in 0..back {
                word.symbols.insert(0, deta);
            }
            for v in pos.iter_mut().skip(1) {
                *v = (*v - 1 + back) % g + 1;
            }
        }
    }
    debug_assert_eq!(pos[i], 1);
    debug_assert_eq!(pos[j], 2);
    word
}
