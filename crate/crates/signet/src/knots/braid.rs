//! Braid words on n strands and the permutation data of their closures.

use crate::error::{Error, Result};

/// A word in the braid group B_n: letters are (generator index, sign) with
/// 1 ≤ index ≤ strands − 1.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BraidWord {
    pub strands: usize,
    pub letters: Vec<(usize, i8)>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<(usize, i8)>) -> Result<BraidWord> {
        if strands < 2 {
            return Err(Error::BraidParse("need at least 2 strands".into()));
        }
        for &(i, s) in &letters {
            if i < 1 || i >= strands {
                return Err(Error::BraidParse(format!(
                    "generator index {i} out of range 1..{}",
                    strands - 1
                )));
            }
            if s != 1 && s != -1 {
                return Err(Error::BraidParse("letter sign must be ±1".into()));
            }
        }
        Ok(BraidWord { strands, letters })
    }

    /// All crossing signs flipped (the mirror image of the closure).
    pub fn mirror(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().map(|&(i, s)| (i, -s)).collect(),
        }
    }

    /// The same word viewed in B_m for m ≥ strands.
    pub fn widened(&self, strands: usize) -> Result<BraidWord> {
        if strands < self.strands {
            return Err(Error::BraidParse("cannot shrink strand count".into()));
        }
        BraidWord::new(strands, self.letters.clone())
    }
}

/// Parse "n: i₁ i₂ …" where each iₖ is a signed generator index, e.g.
/// "2: 1 1 1" for σ₁³ or "3: 1 -2 1 -2".
pub fn parse_braid(text: &str) -> Result<BraidWord> {
    let (head, tail) = text
        .split_once(':')
        .ok_or_else(|| Error::BraidParse("expected \"n: letters\"".into()))?;
    let strands: usize = head
        .trim()
        .parse()
        .map_err(|_| Error::BraidParse(format!("bad strand count {:?}", head.trim())))?;
    let mut letters = Vec::new();
    for tok in tail.split_whitespace() {
        let v: i64 = tok
            .parse()
            .map_err(|_| Error::BraidParse(format!("bad letter {tok:?}")))?;
        if v == 0 {
            return Err(Error::BraidParse("generator index 0 is not allowed".into()));
        }
        letters.push((v.unsigned_abs() as usize, if v < 0 { -1 } else { 1 }));
    }
    BraidWord::new(strands, letters)
}

/// Number of components of the closed braid: cycles of the underlying
/// permutation.
pub fn closure_components(b: &BraidWord) -> usize {
    let mut perm: Vec<usize> = (0..b.strands).collect();
    for &(i, _) in &b.letters {
        perm.swap(i - 1, i);
    }
    let mut seen = vec![false; b.strands];
    let mut cycles = 0;
    for start in 0..b.strands {
        if seen[start] {
            continue;
        }
        cycles += 1;
        let mut k = start;
        while !seen[k] {
            seen[k] = true;
            k = perm[k];
        }
    }
    cycles
}
