use std::fmt;

use super::McgError;

/// A generator or inverse generator of the free group on `x_1, ..., x_n`.
///
/// Stored as a nonzero signed index: `+i` is `x_i`, `-i` is `x_i^-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter(i32);

impl Letter {
    pub fn new(generator: usize, inverse: bool) -> Letter {
        assert!(generator >= 1, "generators are 1-based");
        let g = generator as i32;
        Letter(if inverse { -g } else { g })
    }

    pub fn from_signed(value: i32) -> Option<Letter> {
        (value != 0).then_some(Letter(value))
    }

    pub fn generator(self) -> usize {
        self.0.unsigned_abs() as usize
    }

    pub fn is_inverse(self) -> bool {
        self.0 < 0
    }

    pub fn signed(self) -> i32 {
        self.0
    }

    pub fn inverse(self) -> Letter {
        Letter(-self.0)
    }
}

/// Appends `letter` to a reduced buffer, cancelling against the last letter.
#[inline]
pub(crate) fn push_reduced(buf: &mut Vec<Letter>, letter: Letter) {
    if buf.last() == Some(&letter.inverse()) {
        buf.pop();
    } else {
        buf.push(letter);
    }
}

/// A freely reduced word in the free group.
///
/// The rank is not stored; constructors that take a rank validate indices
/// against it.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn identity() -> Word {
        Word(Vec::new())
    }

    pub fn generator(index: usize) -> Word {
        Word(vec![Letter::new(index, false)])
    }

    /// Freely reduces a raw letter sequence, rejecting indices outside `1..=rank`.
    pub fn reduce<I>(rank: usize, letters: I) -> Result<Word, McgError>
    where
        I: IntoIterator<Item = Letter>,
    {
        let mut buf = Vec::new();
        for l in letters {
            if l.generator() > rank {
                return Err(McgError::InvalidGenerator {
                    index: l.signed() as i64,
                    rank,
                });
            }
            push_reduced(&mut buf, l);
        }
        Ok(Word(buf))
    }

    /// Builds a word from signed indices (`-2` is `x_2^-1`).
    pub fn from_signed(rank: usize, letters: &[i32]) -> Result<Word, McgError> {
        let mut out = Vec::with_capacity(letters.len());
        for &v in letters {
            let l = Letter::from_signed(v).ok_or(McgError::InvalidGenerator { index: 0, rank })?;
            out.push(l);
        }
        Word::reduce(rank, out)
    }

    /// Product `x_a x_{a+1} ... x_b`.
    pub fn ascending(a: usize, b: usize) -> Word {
        Word((a..=b).map(|i| Letter::new(i, false)).collect())
    }

    /// The outer boundary word `x_1 x_2 ... x_n`.
    pub fn boundary(rank: usize) -> Word {
        Word::ascending(1, rank)
    }

    pub(crate) fn from_reduced_unchecked(letters: Vec<Letter>) -> Word {
        debug_assert!(letters.windows(2).all(|w| w[0] != w[1].inverse()));
        Word(letters)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut buf = self.0.clone();
        for &l in &other.0 {
            push_reduced(&mut buf, l);
        }
        Word(buf)
    }

    /// `self * w * self^-1`.
    pub fn conjugate(&self, w: &Word) -> Word {
        self.concat(w).concat(&self.inverse())
    }

    /// Exponent sum of each generator, i.e. the image in `Z^rank`.
    pub fn exponent_sums(&self, rank: usize) -> Vec<i64> {
        let mut sums = vec![0i64; rank];
        for l in &self.0 {
            let slot = &mut sums[l.generator() - 1];
            *slot += if l.is_inverse() { -1 } else { 1 };
        }
        sums
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (k, l) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            if l.is_inverse() {
                write!(f, "x{}^-1", l.generator())?;
            } else {
                write!(f, "x{}", l.generator())?;
            }
        }
        Ok(())
    }
}
