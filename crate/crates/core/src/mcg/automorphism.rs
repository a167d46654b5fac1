use super::word::{push_reduced, Letter, Word};
use super::McgError;

/// An automorphism of the free group of rank `n`, stored as the images of the
/// generators together with the images under its inverse.
///
/// Equality compares only `rank` and `images`; the inverse is determined by them.
#[derive(Clone, Debug)]
pub struct FreeAutomorphism {
    rank: usize,
    images: Vec<Word>,
    inverse_images: Vec<Word>,
}

impl PartialEq for FreeAutomorphism {
    fn eq(&self, other: &Self) -> bool {
        self.rank == other.rank && self.images == other.images
    }
}

impl Eq for FreeAutomorphism {}

impl std::hash::Hash for FreeAutomorphism {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.rank.hash(state);
        self.images.hash(state);
    }
}

fn substitute(images: &[Word], w: &Word) -> Word {
    let mut buf = Vec::new();
    for &l in w.letters() {
        let img = &images[l.generator() - 1];
        if l.is_inverse() {
            for &m in img.letters().iter().rev() {
                push_reduced(&mut buf, m.inverse());
            }
        } else {
            for &m in img.letters() {
                push_reduced(&mut buf, m);
            }
        }
    }
    Word::from_reduced_unchecked(buf)
}

impl FreeAutomorphism {
    /// Builds an automorphism from explicit images, checking that the two
    /// image lists are mutually inverse on every generator.
    pub fn new(
        rank: usize,
        images: Vec<Word>,
        inverse_images: Vec<Word>,
    ) -> Result<Self, McgError> {
        if images.len() != rank || inverse_images.len() != rank {
            return Err(McgError::RankMismatch {
                left: rank,
                right: images.len().max(inverse_images.len()),
            });
        }
        for w in images.iter().chain(&inverse_images) {
            if let Some(l) = w.letters().iter().find(|l| l.generator() > rank) {
                return Err(McgError::InvalidGenerator {
                    index: l.signed() as i64,
                    rank,
                });
            }
        }
        let f = FreeAutomorphism {
            rank,
            images,
            inverse_images,
        };
        for i in 1..=rank {
            let x = Word::generator(i);
            if f.apply(&f.apply_inverse(&x)) != x || f.apply_inverse(&f.apply(&x)) != x {
                return Err(McgError::NotInverse);
            }
        }
        Ok(f)
    }

    pub fn identity(rank: usize) -> Self {
        let gens: Vec<Word> = (1..=rank).map(Word::generator).collect();
        FreeAutomorphism {
            rank,
            images: gens.clone(),
            inverse_images: gens,
        }
    }

    /// Twist about the convex curve around holes `a..=b`:
    /// `x_i -> w x_i w^-1` for `a <= i <= b` with `w = x_a ... x_b`.
    pub fn contiguous_twist(rank: usize, a: usize, b: usize) -> Result<Self, McgError> {
        if a == 0 || a > b || b > rank {
            return Err(McgError::InvalidInterval { a, b, rank });
        }
        let w = Word::ascending(a, b);
        let w_inv = w.inverse();
        let mut images = Vec::with_capacity(rank);
        let mut inverse_images = Vec::with_capacity(rank);
        for i in 1..=rank {
            let x = Word::generator(i);
            if (a..=b).contains(&i) {
                images.push(w.conjugate(&x));
                inverse_images.push(w_inv.conjugate(&x));
            } else {
                images.push(x.clone());
                inverse_images.push(x);
            }
        }
        Ok(FreeAutomorphism {
            rank,
            images,
            inverse_images,
        })
    }

    /// Elementary half-twist exchanging holes `j` and `j+1`.
    ///
    /// Positive: `x_j -> x_j x_{j+1} x_j^-1`, `x_{j+1} -> x_j`; negative is its inverse.
    pub fn half_twist(rank: usize, j: usize, positive: bool) -> Result<Self, McgError> {
        if j == 0 || j >= rank {
            return Err(McgError::InvalidIndex { index: j, rank });
        }
        let xj = Letter::new(j, false);
        let xk = Letter::new(j + 1, false);
        let mut pos: Vec<Word> = (1..=rank).map(Word::generator).collect();
        let mut neg = pos.clone();
        pos[j - 1] = Word::from_reduced_unchecked(vec![xj, xk, xj.inverse()]);
        pos[j] = Word::generator(j);
        neg[j - 1] = Word::generator(j + 1);
        neg[j] = Word::from_reduced_unchecked(vec![xk.inverse(), xj, xk]);
        Ok(if positive {
            FreeAutomorphism {
                rank,
                images: pos,
                inverse_images: neg,
            }
        } else {
            FreeAutomorphism {
                rank,
                images: neg,
                inverse_images: pos,
            }
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn images(&self) -> &[Word] {
        &self.images
    }

    pub fn inverse_images(&self) -> &[Word] {
        &self.inverse_images
    }

    pub fn apply(&self, w: &Word) -> Word {
        substitute(&self.images, w)
    }

    pub fn apply_inverse(&self, w: &Word) -> Word {
        substitute(&self.inverse_images, w)
    }

    /// `self ∘ g`: applies `g` first, then `self`.
    pub fn compose(&self, g: &FreeAutomorphism) -> Result<Self, McgError> {
        if self.rank != g.rank {
            return Err(McgError::RankMismatch {
                left: self.rank,
                right: g.rank,
            });
        }
        let images = g.images.iter().map(|w| self.apply(w)).collect();
        let inverse_images = self
            .inverse_images
            .iter()
            .map(|w| g.apply_inverse(w))
            .collect();
        Ok(FreeAutomorphism {
            rank: self.rank,
            images,
            inverse_images,
        })
    }

    pub fn inverse(&self) -> Self {
        FreeAutomorphism {
            rank: self.rank,
            images: self.inverse_images.clone(),
            inverse_images: self.images.clone(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, w)| *w == Word::generator(i + 1))
    }

    /// Whether the outer boundary word `x_1 ... x_n` is fixed exactly.
    pub fn fixes_boundary(&self) -> bool {
        let delta = Word::boundary(self.rank);
        self.apply(&delta) == delta
    }

    /// Total letter count of all images; a size measure for diagnostics.
    pub fn weight(&self) -> usize {
        self.images.iter().map(Word::len).sum()
    }
}
