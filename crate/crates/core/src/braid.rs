//! Braid words, their permutations, and the cabling operations used to build
//! parallelized knots.
//!
//! Conventions used throughout the crate:
//!
//! * A letter `i > 0` is the positive (right-handed) crossing `σ_i` of the
//!   strands in slots `i - 1` and `i` (slots are 0-based, slot 0 leftmost);
//!   `-i` is its inverse.
//! * Words are read top to bottom. The permutation of a word sends the top
//!   slot of a strand to its bottom slot, so `perm(w1 · w2) = perm(w2) ∘ perm(w1)`.
//! * The closure joins bottom slot `i` to top slot `i`.
//! * `T(p, q)` is `δ^q` with `δ = σ_{p-1} σ_{p-2} … σ_1`; its permutation is
//!   `i ↦ i + q (mod p)`. Negative `q` uses `δ^{-1} = σ_1^{-1} … σ_{p-1}^{-1}`.
//! * Twist regions of twisted torus knots sit on the leftmost slots; the
//!   parallelization cuts the two rightmost slots.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::modarith::gcd;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::OutOfRange("a braid needs at least one strand".into()));
        }
        for &g in &letters {
            if g == 0 || g.unsigned_abs() as usize >= strands {
                return Err(Error::BadLetter { letter: g, strands });
            }
        }
        Ok(Self { strands, letters })
    }

    pub fn identity(strands: usize) -> Self {
        Self::new(strands, Vec::new()).expect("identity braid")
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|&g| g.signum() as i64).sum()
    }

    pub fn positive_letters(&self) -> usize {
        self.letters.iter().filter(|&&g| g > 0).count()
    }

    /// Underlying permutation, top slot -> bottom slot.
    pub fn permutation(&self) -> Permutation {
        let mut at: Vec<usize> = (0..self.strands).collect(); // at[slot] = strand
        for &g in &self.letters {
            let i = g.unsigned_abs() as usize;
            at.swap(i - 1, i);
        }
        let mut image = vec![0; self.strands];
        for (slot, &strand) in at.iter().enumerate() {
            image[strand] = slot;
        }
        Permutation { image }
    }

    pub fn component_count(&self) -> usize {
        self.permutation().cycle_count()
    }

    pub fn is_knot(&self) -> bool {
        self.component_count() == 1
    }

    /// Concatenation `self · other` on a common strand count.
    pub fn concat(&self, other: &BraidWord) -> Result<Self> {
        if self.strands != other.strands {
            return Err(Error::OutOfRange(format!(
                "cannot concatenate braids on {} and {} strands",
                self.strands, other.strands
            )));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(Self { strands: self.strands, letters })
    }

    /// The same word on `strands` strands with every index shifted by `offset`.
    pub fn embed(&self, strands: usize, offset: usize) -> Result<Self> {
        if offset + self.strands > strands {
            return Err(Error::OutOfRange(format!(
                "cannot place {} strands at offset {offset} in a {strands}-strand braid",
                self.strands
            )));
        }
        let shift = offset as i32;
        let letters = self
            .letters
            .iter()
            .map(|&g| g + g.signum() * shift)
            .collect();
        Ok(Self { strands, letters })
    }

    pub fn inverse(&self) -> Self {
        Self {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|&g| -g).collect(),
        }
    }

    pub fn mirror(&self) -> Self {
        Self {
            strands: self.strands,
            letters: self.letters.iter().map(|&g| -g).collect(),
        }
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "strands: {}", self.strands)?;
        let mut first = true;
        for g in &self.letters {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{g}")?;
            first = false;
        }
        writeln!(f)
    }
}

impl FromStr for BraidWord {
    type Err = Error;

    /// Parses the two-line text form: `strands: <n>` then space-separated
    /// signed letters. The letter line may be absent for the identity braid.
    fn from_str(s: &str) -> Result<Self> {
        let mut lines = s.lines().map(str::trim).filter(|l| !l.is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty input".into()))?;
        let count = header
            .strip_prefix("strands:")
            .ok_or_else(|| Error::Parse(format!("expected `strands: <n>`, got `{header}`")))?
            .trim();
        let strands: usize = count
            .parse()
            .map_err(|_| Error::Parse(format!("bad strand count `{count}`")))?;
        let mut letters = Vec::new();
        for line in lines {
            for tok in line.split_whitespace() {
                let g: i32 = tok
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad letter `{tok}`")))?;
                letters.push(g);
            }
        }
        BraidWord::new(strands, letters)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn new(image: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; image.len()];
        for &i in &image {
            if i >= image.len() || std::mem::replace(&mut seen[i], true) {
                return Err(Error::OutOfRange(format!("{image:?} is not a bijection")));
            }
        }
        Ok(Self { image })
    }

    pub fn identity(n: usize) -> Self {
        Self { image: (0..n).collect() }
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.image[i]
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// `self ∘ inner`, i.e. apply `inner` first.
    pub fn compose(&self, inner: &Permutation) -> Permutation {
        Permutation {
            image: inner.image.iter().map(|&i| self.image[i]).collect(),
        }
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.image.len()];
        let mut out = Vec::new();
        for start in 0..self.image.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i);
                i = self.image[i];
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_count(&self) -> usize {
        self.cycles().len()
    }
}

/// Number of parallel strings carried by each slot.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MultiplicitySeq(Vec<usize>);

impl MultiplicitySeq {
    pub fn new(widths: Vec<usize>) -> Result<Self> {
        if widths.contains(&0) {
            return Err(Error::OutOfRange(format!("multiplicities must be >= 1: {widths:?}")));
        }
        Ok(Self(widths))
    }

    pub fn ones(n: usize) -> Self {
        Self(vec![1; n])
    }

    pub fn widths(&self) -> &[usize] {
        &self.0
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// One step of a framed braid: a crossing, or `twists` full twists applied to
/// the bundle that occupies `slot` at that height once the braid is cabled.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FramedStep {
    Letter(i32),
    BundleTwist { slot: usize, twists: i32 },
}

/// A braid word annotated with the framing its strands carry on a surface.
///
/// Cabling a plain word uses the blackboard framing. Strands of a torus knot
/// lying on the torus pick up one full twist per pass around the torus
/// relative to the blackboard, and strands inside a twist region pick up the
/// twists of the region; the annotations record exactly these corrections so
/// that a cabled torus braid is again a torus braid.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FramedBraid {
    strands: usize,
    steps: Vec<FramedStep>,
}

impl FramedBraid {
    pub fn new(strands: usize, steps: Vec<FramedStep>) -> Result<Self> {
        let word = Self::letters_of(&steps);
        BraidWord::new(strands, word)?;
        if let Some(bad) = steps.iter().find_map(|s| match *s {
            FramedStep::BundleTwist { slot, .. } if slot >= strands => Some(slot),
            _ => None,
        }) {
            return Err(Error::OutOfRange(format!("twist slot {bad} outside {strands} strands")));
        }
        Ok(Self { strands, steps })
    }

    fn letters_of(steps: &[FramedStep]) -> Vec<i32> {
        steps
            .iter()
            .filter_map(|s| match *s {
                FramedStep::Letter(g) => Some(g),
                FramedStep::BundleTwist { .. } => None,
            })
            .collect()
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn steps(&self) -> &[FramedStep] {
        &self.steps
    }

    /// The underlying braid word (framing annotations dropped).
    pub fn word(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: Self::letters_of(&self.steps),
        }
    }

    pub fn concat(&self, other: &FramedBraid) -> Result<Self> {
        if self.strands != other.strands {
            return Err(Error::OutOfRange(format!(
                "cannot concatenate braids on {} and {} strands",
                self.strands, other.strands
            )));
        }
        let mut steps = self.steps.clone();
        steps.extend_from_slice(&other.steps);
        Ok(Self { strands: self.strands, steps })
    }

    pub fn embed(&self, strands: usize, offset: usize) -> Result<Self> {
        if offset + self.strands > strands {
            return Err(Error::OutOfRange(format!(
                "cannot place {} strands at offset {offset} in a {strands}-strand braid",
                self.strands
            )));
        }
        let steps = self
            .steps
            .iter()
            .map(|s| match *s {
                FramedStep::Letter(g) => FramedStep::Letter(g + g.signum() * offset as i32),
                FramedStep::BundleTwist { slot, twists } => FramedStep::BundleTwist {
                    slot: slot + offset,
                    twists,
                },
            })
            .collect();
        Ok(Self { strands, steps })
    }
}

impl From<BraidWord> for FramedBraid {
    fn from(w: BraidWord) -> Self {
        FramedBraid {
            strands: w.strands,
            steps: w.letters.into_iter().map(FramedStep::Letter).collect(),
        }
    }
}

fn check_torus(p: i64, what: &str) -> Result<usize> {
    if p < 2 {
        return Err(Error::OutOfRange(format!("{what} needs at least 2 strands (got {p})")));
    }
    Ok(p as usize)
}

/// One pass `δ = σ_{p-1} … σ_1`, or `δ^{-1} = σ_1^{-1} … σ_{p-1}^{-1}`.
fn pass_letters(p: usize, positive: bool) -> Vec<i32> {
    let p = p as i32;
    if positive {
        (1..p).rev().collect()
    } else {
        (1..p).map(|g| -g).collect()
    }
}

/// `T(p, q)` as `δ^q` on `p` strands.
pub fn torus_braid(p: i64, q: i64) -> Result<BraidWord> {
    Ok(torus_framed(p, q)?.word())
}

/// `T(p, q)` with the framing of the standard torus: each pass of `δ^{±1}`
/// is followed by a `±1` twist on the bundle that went around.
pub fn torus_framed(p: i64, q: i64) -> Result<FramedBraid> {
    let n = check_torus(p, "a torus braid")?;
    let mut steps = Vec::with_capacity(q.unsigned_abs() as usize * n);
    for _ in 0..q.unsigned_abs() {
        steps.extend(pass_letters(n, q > 0).into_iter().map(FramedStep::Letter));
        let (slot, twists) = if q > 0 { (0, 1) } else { (n - 1, -1) };
        steps.push(FramedStep::BundleTwist { slot, twists });
    }
    Ok(FramedBraid { strands: n, steps })
}

/// `s` full twists `(σ_1 … σ_{r-1})^{r s}` on `r` strands.
pub fn full_twists(r: i64, s: i64) -> Result<BraidWord> {
    Ok(full_twists_framed(r, s)?.word())
}

/// Full twists followed by the same twist count on every one-slot bundle, so
/// that cabling yields full twists of the whole cabled region.
pub fn full_twists_framed(r: i64, s: i64) -> Result<FramedBraid> {
    let n = check_torus(r, "a twist region")?;
    let mut steps = Vec::with_capacity(n * (n - 1) * s.unsigned_abs() as usize + n);
    let sign = s.signum() as i32;
    for _ in 0..(r * s.abs()) {
        steps.extend((1..n as i32).map(|g| FramedStep::Letter(sign * g)));
    }
    if s != 0 {
        steps.extend((0..n).map(|slot| FramedStep::BundleTwist { slot, twists: s as i32 }));
    }
    Ok(FramedBraid { strands: n, steps })
}

fn check_twisted(p: i64, q: i64, r: i64) -> Result<()> {
    if !(p > r && r > 1) {
        return Err(Error::OutOfRange(format!("need p > r > 1 (got p = {p}, r = {r})")));
    }
    if q == 0 {
        return Err(Error::OutOfRange("need q != 0".into()));
    }
    Ok(())
}

/// `T(p, q; r, s)`: the torus braid followed by `s` full twists on slots
/// `0..r`.
pub fn twisted_torus_braid(p: i64, q: i64, r: i64, s: i64) -> Result<BraidWord> {
    check_twisted(p, q, r)?;
    torus_braid(p, q)?.concat(&full_twists(r, s)?.embed(p as usize, 0)?)
}

/// `T(p, q; r, s)` with surface framing annotations, the input expected by
/// [`parallelize_framed`].
pub fn twisted_torus_framed(p: i64, q: i64, r: i64, s: i64) -> Result<FramedBraid> {
    check_twisted(p, q, r)?;
    torus_framed(p, q)?.concat(&full_twists_framed(r, s)?.embed(p as usize, 0)?)
}

/// The cabled word together with the bundle widths at the bottom.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cabling {
    pub word: BraidWord,
    pub bottom: MultiplicitySeq,
}

/// Letters of the crossing of a `u`-bundle at strand offset `offset` with
/// the `v`-bundle to its right, every crossing of sign `sign`.
fn block_crossing(out: &mut Vec<i32>, offset: usize, u: usize, v: usize, sign: i32) {
    for j in (0..u).rev() {
        let pos = offset + j;
        for step in 0..v {
            out.push(sign * (pos + step + 1) as i32);
        }
    }
}

fn bundle_twist(out: &mut Vec<i32>, offset: usize, width: usize, twists: i32) {
    if width < 2 {
        return;
    }
    let sign = twists.signum();
    for _ in 0..(width as i64 * twists.unsigned_abs() as i64) {
        out.extend((1..width).map(|g| sign * (offset + g) as i32));
    }
}

/// Blackboard cabling: every slot of `w` is replaced by a bundle of parallel
/// strands and every crossing by the grid of crossings of its two bundles.
pub fn cable_expand(w: &BraidWord, top: &MultiplicitySeq) -> Result<Cabling> {
    let framed = FramedBraid::from(w.clone());
    cable_framed_inner(&framed, top, false)
}

/// Cabling that also realizes the framing annotations of `w` as full twists
/// inside the affected bundles.
pub fn cable_expand_framed(w: &FramedBraid, top: &MultiplicitySeq) -> Result<Cabling> {
    cable_framed_inner(w, top, true)
}

fn cable_framed_inner(w: &FramedBraid, top: &MultiplicitySeq, framed: bool) -> Result<Cabling> {
    if top.len() != w.strands {
        return Err(Error::OutOfRange(format!(
            "multiplicity sequence has {} entries for a braid on {} strands",
            top.len(),
            w.strands
        )));
    }
    let mut widths = top.widths().to_vec();
    let total = top.total();
    let mut letters = Vec::new();
    for step in &w.steps {
        match *step {
            FramedStep::Letter(g) => {
                let i = g.unsigned_abs() as usize;
                let offset: usize = widths[..i - 1].iter().sum();
                let (u, v) = (widths[i - 1], widths[i]);
                block_crossing(&mut letters, offset, u, v, g.signum());
                widths.swap(i - 1, i);
            }
            FramedStep::BundleTwist { slot, twists } if framed => {
                let offset: usize = widths[..slot].iter().sum();
                bundle_twist(&mut letters, offset, widths[slot], twists);
            }
            FramedStep::BundleTwist { .. } => {}
        }
    }
    Ok(Cabling {
        word: BraidWord::new(total, letters)?,
        bottom: MultiplicitySeq(widths),
    })
}

/// Arcs of a knot braid cut at the two rightmost slots: arc A follows the
/// permutation from slot `n - 1` until it reaches slot `n - 2`, arc B is the
/// rest. Returns slot -> arc label (0 for A, 1 for B).
pub fn arc_labels(base: &BraidWord) -> Result<Vec<u8>> {
    let n = base.strands();
    if n < 3 {
        return Err(Error::OutOfRange(format!(
            "parallelization needs at least 3 strands (got {n})"
        )));
    }
    let perm = base.permutation();
    let comps = perm.cycle_count();
    if comps != 1 {
        return Err(Error::NotAKnot(comps));
    }
    let (u, v) = (n - 1, n - 2);
    let mut labels = vec![1u8; n];
    let mut cur = u;
    while cur != v {
        labels[cur] = 0;
        cur = perm.apply(cur);
    }
    Ok(labels)
}

fn arc_multiplicities(base: &BraidWord, x1: i64, x2: i64) -> Result<MultiplicitySeq> {
    if x1 < 1 || x2 < 1 {
        return Err(Error::OutOfRange(format!(
            "string counts must be positive (got x1 = {x1}, x2 = {x2})"
        )));
    }
    let labels = arc_labels(base)?;
    MultiplicitySeq::new(
        labels
            .into_iter()
            .map(|l| if l == 0 { x1 as usize } else { x2 as usize })
            .collect(),
    )
}

/// Replaces arc A of the knot braid `base` by `x1` parallel strings and arc B
/// by `x2`, using blackboard framing. The two rightmost bottom slots carry
/// widths `(x1, x2)` and the matching top slots `(x2, x1)`; the identity
/// closure over that merged block joins the arcs.
pub fn parallelize(base: &BraidWord, x1: i64, x2: i64) -> Result<BraidWord> {
    let top = arc_multiplicities(base, x1, x2)?;
    Ok(cable_expand(base, &top)?.word)
}

/// [`parallelize`] for a framed base, realizing its surface framing.
pub fn parallelize_framed(base: &FramedBraid, x1: i64, x2: i64) -> Result<BraidWord> {
    let top = arc_multiplicities(&base.word(), x1, x2)?;
    Ok(cable_expand_framed(base, &top)?.word)
}

/// Braid whose closure is the connected sum of the two closures.
pub fn connected_sum(w1: &BraidWord, w2: &BraidWord) -> Result<BraidWord> {
    for w in [w1, w2] {
        let comps = w.component_count();
        if comps != 1 {
            return Err(Error::NotAKnot(comps));
        }
    }
    let n = w1.strands() + w2.strands() - 1;
    let left = w1.embed(n, 0)?;
    let right = w2.embed(n, w1.strands() - 1)?;
    left.concat(&right)
}

/// Number of closure components of `T(p, q)`.
pub fn torus_components(p: i64, q: i64) -> i64 {
    gcd(p, q)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(n: usize, letters: &[i32]) -> BraidWord {
        BraidWord::new(n, letters.to_vec()).unwrap()
    }

    #[test]
    fn letters_are_validated() {
        assert!(BraidWord::new(3, vec![1, -2]).is_ok());
        assert!(matches!(
            BraidWord::new(3, vec![3]),
            Err(Error::BadLetter { letter: 3, strands: 3 })
        ));
        assert!(BraidWord::new(3, vec![0]).is_err());
        assert!(BraidWord::new(0, vec![]).is_err());
    }

    #[test]
    fn torus_braid_examples() {
        assert_eq!(torus_braid(2, 3).unwrap(), word(2, &[1, 1, 1]));
        assert_eq!(torus_braid(4, 2).unwrap().component_count(), 2);
        let m = torus_braid(3, -4).unwrap();
        assert_eq!(m.len(), 8);
        assert!(m.letters().iter().all(|&g| g < 0));
        assert_eq!(m.component_count(), 1);
        assert!(torus_braid(1, 3).is_err());
    }

    #[test]
    fn torus_permutation_is_rotation() {
        for p in 2..=12i64 {
            for q in -12..=12i64 {
                let w = torus_braid(p, q).unwrap();
                let perm = w.permutation();
                for i in 0..p {
                    assert_eq!(perm.apply(i as usize) as i64, (i + q).rem_euclid(p));
                }
                let expected = if q == 0 { p } else { gcd(p, q) };
                assert_eq!(w.component_count() as i64, expected, "T({p},{q})");
            }
        }
        assert_eq!(torus_braid(6, 4).unwrap().component_count(), 2);
        assert_eq!(torus_braid(5, 3).unwrap().component_count(), 1);
    }

    #[test]
    fn full_twist_examples() {
        assert_eq!(full_twists(2, 1).unwrap(), word(2, &[1, 1]));
        let t = full_twists(3, -1).unwrap();
        assert_eq!(t.len(), 6);
        assert!(t.letters().iter().all(|&g| g < 0));
        assert!(t.permutation().is_identity());
        assert!(full_twists(5, 0).unwrap().is_empty());
        for r in 2..8 {
            for s in -2..=2 {
                assert!(full_twists(r, s).unwrap().permutation().is_identity());
            }
        }
    }

    #[test]
    fn twisted_torus_examples() {
        let w = twisted_torus_braid(20, 11, 15, -1).unwrap();
        assert_eq!(w.len(), 209 + 210);
        assert_eq!(w.component_count(), 1);
        let w = twisted_torus_braid(11, 6, 8, -1).unwrap();
        assert_eq!(w.len(), 60 + 56);
        assert_eq!(w.component_count(), 1);
        assert_eq!(
            twisted_torus_braid(7, 3, 4, 0).unwrap(),
            torus_braid(7, 3).unwrap()
        );
        assert!(twisted_torus_braid(5, 3, 5, 1).is_err());
        assert!(twisted_torus_braid(5, 3, 1, 1).is_err());
        assert!(twisted_torus_braid(5, 0, 3, 1).is_err());
    }

    #[test]
    fn exponent_sum_counts_signs() {
        assert_eq!(word(3, &[1, -2, 2, 2]).exponent_sum(), 2);
        assert_eq!(twisted_torus_braid(11, 6, 8, -1).unwrap().exponent_sum(), 60 - 56);
    }

    #[test]
    fn permutation_is_antihomomorphic() {
        let w1 = word(4, &[1, 2, -3, 1]);
        let w2 = word(4, &[3, 3, -2]);
        let joined = w1.concat(&w2).unwrap();
        assert_eq!(
            joined.permutation(),
            w2.permutation().compose(&w1.permutation())
        );
    }

    #[test]
    fn cabling_examples() {
        let c = cable_expand(&word(2, &[1]), &MultiplicitySeq::new(vec![2, 1]).unwrap()).unwrap();
        assert_eq!(c.word, word(3, &[2, 1]));
        assert_eq!(c.bottom.widths(), &[1, 2]);

        let w = word(4, &[1, -3, 2, 2, -1]);
        let c = cable_expand(&w, &MultiplicitySeq::ones(4)).unwrap();
        assert_eq!(c.word, w);

        let top = MultiplicitySeq::new(vec![2, 3, 1]).unwrap();
        let w = word(3, &[1, 2, -1]);
        let c = cable_expand(&w, &top).unwrap();
        // widths (2,3,1) -> 6 crossings, (3,2,1) -> 2, (3,1,2) -> 3
        assert_eq!(c.word.len(), 6 + 2 + 3);
        assert_eq!(c.bottom.widths(), &[1, 3, 2]);

        assert!(cable_expand(&w, &MultiplicitySeq::ones(2)).is_err());
        assert!(MultiplicitySeq::new(vec![1, 0]).is_err());
    }

    #[test]
    fn framed_cabling_of_torus_pass_is_torus_pass() {
        // One pass on 3 bundles of widths (1, 2, 2): the bundle of width 2 at
        // the right goes around, which is δ^2 on 5 strands.
        let base = torus_framed(3, 1).unwrap();
        let top = MultiplicitySeq::new(vec![1, 2, 2]).unwrap();
        let c = cable_expand_framed(&base, &top).unwrap();
        assert_eq!(c.word.permutation(), torus_braid(5, 2).unwrap().permutation());
        assert_eq!(c.word.len(), torus_braid(5, 2).unwrap().len());
        assert_eq!(c.bottom.widths(), &[2, 1, 2]);
    }

    #[test]
    fn parallelize_components_follow_gcd() {
        let base = torus_braid(9, 5).unwrap();
        assert_eq!(parallelize(&base, 2, 2).unwrap().component_count(), 2);
        assert_eq!(parallelize(&base, 1, 1).unwrap(), base);
        let base = torus_braid(3, 2).unwrap();
        let w = parallelize(&base, 1, 2).unwrap();
        assert_eq!(w.strands(), 5);
        assert!(w.is_knot());
        assert!(matches!(parallelize(&torus_braid(4, 2).unwrap(), 1, 1), Err(Error::NotAKnot(2))));
        assert!(parallelize(&torus_braid(2, 3).unwrap(), 1, 1).is_err());
        assert!(parallelize(&base, 0, 1).is_err());
    }

    #[test]
    fn arc_labels_match_slot_tracing() {
        let labels = arc_labels(&torus_braid(11, 6).unwrap()).unwrap();
        let t = crate::modarith::trace_arc_slots(11, 6).unwrap();
        assert_eq!(labels, t.labels());
    }

    #[test]
    fn connected_sum_examples() {
        let t = torus_braid(2, 3).unwrap();
        let granny = connected_sum(&t, &t).unwrap();
        assert_eq!(granny, word(3, &[1, 1, 1, 2, 2, 2]));
        assert!(granny.is_knot());
        let w = torus_braid(3, 4).unwrap();
        assert_eq!(connected_sum(&w, &BraidWord::identity(1)).unwrap(), w);
        assert!(connected_sum(&torus_braid(2, 2).unwrap(), &t).is_err());
    }

    #[test]
    fn text_format_round_trip() {
        let w = word(4, &[1, 2, -1, 3]);
        let text = w.to_string();
        assert_eq!(text, "strands: 4\n1 2 -1 3\n");
        assert_eq!(text.parse::<BraidWord>().unwrap(), w);
        assert_eq!("strands: 1\n".parse::<BraidWord>().unwrap(), BraidWord::identity(1));
        assert!("strand 3\n1".parse::<BraidWord>().is_err());
        assert!("strands: 3\n1 x".parse::<BraidWord>().is_err());
        assert!("strands: 3\n4".parse::<BraidWord>().is_err());
    }
}
