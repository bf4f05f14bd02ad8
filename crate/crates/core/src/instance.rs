//! Problem-domain types: alphabet, instance, cover, longest-match table, and
//! the greedy cover construction.
//!
//! Positions and dictionary indices are 1-based everywhere in the public
//! surface; that matches the external file formats. Symbols are stored as
//! alphabet indices (`0..K-1`), not raw bytes.

use crate::Error;
use serde::{Deserialize, Serialize};

/// An ordered finite symbol set with a byte -> index map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    symbols: Vec<u8>,
    index: [i16; 256],
}

impl Alphabet {
    /// Builds an alphabet from distinct bytes, kept in the given order.
    pub fn from_symbols(symbols: &[u8]) -> Self {
        let mut index = [-1i16; 256];
        let mut kept = Vec::with_capacity(symbols.len());
        for &b in symbols {
            if index[b as usize] < 0 {
                index[b as usize] = kept.len() as i16;
                kept.push(b);
            }
        }
        Alphabet {
            symbols: kept,
            index,
        }
    }

    pub fn binary() -> Self {
        Self::from_symbols(b"01")
    }

    pub fn dna() -> Self {
        Self::from_symbols(b"ACGT")
    }

    /// The 128 ASCII bytes, ordered by byte value.
    pub fn ascii() -> Self {
        let bytes: Vec<u8> = (0u8..128).collect();
        Self::from_symbols(&bytes)
    }

    /// Distinct bytes appearing in `texts`, ordered by byte value.
    pub fn infer<'a>(texts: impl IntoIterator<Item = &'a [u8]>) -> Self {
        let mut seen = [false; 256];
        for t in texts {
            for &b in t {
                seen[b as usize] = true;
            }
        }
        let bytes: Vec<u8> = (0u16..256)
            .filter(|&b| seen[b as usize])
            .map(|b| b as u8)
            .collect();
        Self::from_symbols(&bytes)
    }

    /// Alphabet size K.
    pub fn size(&self) -> usize {
        self.symbols.len()
    }

    pub fn index_of(&self, byte: u8) -> Option<usize> {
        let i = self.index[byte as usize];
        (i >= 0).then_some(i as usize)
    }

    pub fn symbol(&self, index: usize) -> u8 {
        self.symbols[index]
    }

    /// Encodes raw bytes into symbol indices; reports the first bad byte.
    pub fn encode(&self, bytes: &[u8]) -> Result<Vec<u8>, Error> {
        bytes
            .iter()
            .enumerate()
            .map(|(offset, &byte)| {
                self.index_of(byte)
                    .map(|i| i as u8)
                    .ok_or(Error::SymbolOutsideAlphabet { byte, offset })
            })
            .collect()
    }

    pub fn decode(&self, indices: &[u8]) -> Vec<u8> {
        indices.iter().map(|&i| self.symbol(i as usize)).collect()
    }
}

/// A problem instance: text `t` of length n and dictionary `s^1..s^m`,
/// both stored as symbol indices over a shared alphabet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    text: Vec<u8>,
    dict: Vec<Vec<u8>>,
    alphabet: Alphabet,
}

impl Instance {
    /// Validates and wraps pre-encoded symbol sequences.
    ///
    /// Dictionary strings longer than the text are accepted; they can never
    /// match and simply never contribute a piece.
    pub fn new(text: Vec<u8>, dict: Vec<Vec<u8>>, alphabet: Alphabet) -> Result<Self, Error> {
        if text.is_empty() {
            return Err(Error::EmptyText);
        }
        if dict.is_empty() {
            return Err(Error::EmptyDictionary);
        }
        let k = alphabet.size();
        let check = |seq: &[u8]| -> Result<(), Error> {
            for (offset, &s) in seq.iter().enumerate() {
                if s as usize >= k {
                    return Err(Error::SymbolOutsideAlphabet { byte: s, offset });
                }
            }
            Ok(())
        };
        check(&text)?;
        for (j, s) in dict.iter().enumerate() {
            if s.is_empty() {
                return Err(Error::EmptyDictionaryString { index: j + 1 });
            }
            check(s)?;
        }
        Ok(Instance {
            text,
            dict,
            alphabet,
        })
    }

    /// Encodes raw byte strings through the alphabet first.
    pub fn from_bytes(text: &[u8], dict: &[&[u8]], alphabet: Alphabet) -> Result<Self, Error> {
        let enc_text = alphabet.encode(text)?;
        let enc_dict = dict
            .iter()
            .map(|s| alphabet.encode(s))
            .collect::<Result<Vec<_>, _>>()?;
        Instance::new(enc_text, enc_dict, alphabet)
    }

    /// Text length n.
    pub fn text_len(&self) -> usize {
        self.text.len()
    }

    /// Dictionary size m.
    pub fn dict_len(&self) -> usize {
        self.dict.len()
    }

    /// Total dictionary length L.
    pub fn total_dict_len(&self) -> usize {
        self.dict.iter().map(Vec::len).sum()
    }

    pub fn text(&self) -> &[u8] {
        &self.text
    }

    /// Dictionary string `s^j`, 1-based.
    pub fn dict_string(&self, j: usize) -> &[u8] {
        &self.dict[j - 1]
    }

    pub fn dict(&self) -> &[Vec<u8>] {
        &self.dict
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    /// Character-exact test: does `s^j` occur in the text at 1-based `pos`?
    pub fn matches_at(&self, pos: usize, j: usize) -> bool {
        if j == 0 || j > self.dict.len() || pos == 0 {
            return false;
        }
        let s = &self.dict[j - 1];
        let end = pos + s.len() - 1;
        end <= self.text.len() && &self.text[pos - 1..end] == s.as_slice()
    }
}

/// A solution: pieces `(q_j, i_j)` tiling the text with overlaps.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cover {
    /// Start positions q_1..q_z, 1-based.
    pub positions: Vec<usize>,
    /// Dictionary indices i_1..i_z, 1-based.
    pub indices: Vec<usize>,
}

impl Cover {
    /// Piece count z.
    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }
}

/// The first condition a candidate cover violates, if any.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoverViolation {
    Empty,
    MismatchedLengths,
    IndexOutOfRange { piece: usize },
    PositionOutOfRange { piece: usize },
    FirstPieceNotAtStart,
    PieceDoesNotMatch { piece: usize },
    GapAfterPiece { piece: usize },
    LastPieceDoesNotEndAtText,
}

impl std::fmt::Display for CoverViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CoverViolation::Empty => write!(f, "cover has no pieces"),
            CoverViolation::MismatchedLengths => {
                write!(f, "positions and indices have different lengths")
            }
            CoverViolation::IndexOutOfRange { piece } => {
                write!(f, "piece {piece}: dictionary index out of range")
            }
            CoverViolation::PositionOutOfRange { piece } => {
                write!(f, "piece {piece}: position out of range")
            }
            CoverViolation::FirstPieceNotAtStart => {
                write!(f, "first piece must start at position 1")
            }
            CoverViolation::PieceDoesNotMatch { piece } => {
                write!(f, "piece {piece} does not match the text at its position")
            }
            CoverViolation::GapAfterPiece { piece } => {
                write!(
                    f,
                    "piece {} starts beyond the end of piece {piece}",
                    piece + 1
                )
            }
            CoverViolation::LastPieceDoesNotEndAtText => {
                write!(f, "last piece must end exactly at the last text position")
            }
        }
    }
}

/// Checks every cover condition by direct character comparison and names the
/// first violation. No hashing is involved.
pub fn check_cover(inst: &Instance, cover: &Cover) -> Result<(), CoverViolation> {
    let n = inst.text_len();
    let m = inst.dict_len();
    let z = cover.positions.len();
    if z == 0 {
        return Err(CoverViolation::Empty);
    }
    if cover.indices.len() != z {
        return Err(CoverViolation::MismatchedLengths);
    }
    for piece in 0..z {
        let q = cover.positions[piece];
        let i = cover.indices[piece];
        if i < 1 || i > m {
            return Err(CoverViolation::IndexOutOfRange { piece: piece + 1 });
        }
        let len = inst.dict_string(i).len();
        if q < 1 || q + len - 1 > n {
            return Err(CoverViolation::PositionOutOfRange { piece: piece + 1 });
        }
        if !inst.matches_at(q, i) {
            return Err(CoverViolation::PieceDoesNotMatch { piece: piece + 1 });
        }
    }
    if cover.positions[0] != 1 {
        return Err(CoverViolation::FirstPieceNotAtStart);
    }
    for piece in 1..z {
        let prev_end =
            cover.positions[piece - 1] + inst.dict_string(cover.indices[piece - 1]).len();
        if cover.positions[piece] > prev_end {
            return Err(CoverViolation::GapAfterPiece { piece });
        }
    }
    let last_q = cover.positions[z - 1];
    let last_len = inst.dict_string(cover.indices[z - 1]).len();
    if last_q != n - last_len + 1 {
        return Err(CoverViolation::LastPieceDoesNotEndAtText);
    }
    Ok(())
}

/// True iff `cover` is a valid tiling of the instance. Out-of-range indices
/// or positions make it invalid, never a panic.
pub fn validate_cover(inst: &Instance, cover: &Cover) -> bool {
    check_cover(inst, cover).is_ok()
}

/// Per text position, the 1-based index of the longest dictionary string that
/// matches there, or -1 when nothing matches.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LongestMatchTable {
    /// `entries[i]` describes 1-based position i+1.
    pub entries: Vec<i32>,
}

impl LongestMatchTable {
    pub fn new(entries: Vec<i32>) -> Self {
        LongestMatchTable { entries }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entry at 1-based position.
    pub fn at(&self, pos: usize) -> i32 {
        self.entries[pos - 1]
    }
}

/// Greedy cover construction from the longest-match table.
///
/// Scans windows of candidate start positions left to right; inside each
/// window keeps the start that reaches furthest, breaking reach ties in
/// favour of the later-scanned start. Returns `None` exactly when no valid
/// cover exists for this table, including the degenerate case where nothing
/// matches at position 1.
pub fn build_cover(table: &LongestMatchTable, inst: &Instance) -> Option<Cover> {
    let n = inst.text_len();
    debug_assert_eq!(table.len(), n);
    let first = table.at(1);
    if first < 0 {
        return None;
    }
    let mut positions = vec![1usize];
    let mut indices = vec![first as usize];
    // end of the piece chosen last; the cover is complete once it hits n
    let mut end = inst.dict_string(first as usize).len();
    let mut left = 2usize;
    while end < n {
        let right = end + 1; // <= n because end < n
        let mut best_start = 0usize;
        let mut best_reach = 0usize; // 0 = nothing found yet
        for j in left..=right {
            let entry = table.at(j);
            if entry > 0 {
                let reach = j + inst.dict_string(entry as usize).len() - 1;
                if reach >= best_reach {
                    best_start = j;
                    best_reach = reach;
                }
            }
        }
        if best_reach == 0 || best_reach < right {
            // no candidate extends coverage past the current window
            return None;
        }
        debug_assert!(
            best_start
                <= positions.last().unwrap() + inst.dict_string(*indices.last().unwrap()).len()
        );
        positions.push(best_start);
        indices.push(table.at(best_start) as usize);
        left = right + 1;
        end = best_reach;
    }
    Some(Cover { positions, indices })
}
