use super::{FreeAutomorphism, McgError};

/// An element of `Map(D_n, ∂D_n)`: the induced automorphism of `π1(D_n)`
/// together with the signed number of twists around each hole.
///
/// Equality of the pair is treated as equality of mapping classes: twists
/// parallel to the holes act trivially on `π1` and are tracked by `hole_mult`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MappingClass {
    aut: FreeAutomorphism,
    hole_mult: Vec<i64>,
}

impl MappingClass {
    pub fn new(aut: FreeAutomorphism, hole_mult: Vec<i64>) -> Result<Self, McgError> {
        if hole_mult.len() != aut.rank() {
            return Err(McgError::RankMismatch {
                left: aut.rank(),
                right: hole_mult.len(),
            });
        }
        if !aut.fixes_boundary() {
            return Err(McgError::ModelViolation(
                "automorphism does not fix the outer boundary word".into(),
            ));
        }
        Ok(MappingClass { aut, hole_mult })
    }

    pub(crate) fn from_parts_unchecked(aut: FreeAutomorphism, hole_mult: Vec<i64>) -> Self {
        debug_assert_eq!(aut.rank(), hole_mult.len());
        MappingClass { aut, hole_mult }
    }

    pub fn identity(rank: usize) -> Self {
        MappingClass {
            aut: FreeAutomorphism::identity(rank),
            hole_mult: vec![0; rank],
        }
    }

    pub fn rank(&self) -> usize {
        self.aut.rank()
    }

    pub fn aut(&self) -> &FreeAutomorphism {
        &self.aut
    }

    pub fn hole_mult(&self) -> &[i64] {
        &self.hole_mult
    }

    pub fn is_identity(&self) -> bool {
        self.aut.is_identity() && self.hole_mult.iter().all(|&m| m == 0)
    }

    /// `self · other` in factorization order: `other` acts first.
    pub fn product(&self, other: &MappingClass) -> Result<Self, McgError> {
        let aut = self.aut.compose(&other.aut)?;
        let hole_mult = self
            .hole_mult
            .iter()
            .zip(&other.hole_mult)
            .map(|(a, b)| a + b)
            .collect();
        Ok(MappingClass { aut, hole_mult })
    }

    pub fn inverse(&self) -> Self {
        MappingClass {
            aut: self.aut.inverse(),
            hole_mult: self.hole_mult.iter().map(|m| -m).collect(),
        }
    }

    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut acc = MappingClass::identity(self.rank());
        for _ in 0..k.unsigned_abs() {
            acc = acc.product(&base).expect("same rank");
        }
        acc
    }

    /// `g · self · g^-1`.
    pub fn conjugate_by(&self, g: &MappingClass) -> Result<Self, McgError> {
        g.product(self)?.product(&g.inverse())
    }
}

/// Product of a sequence of mapping classes, leftmost outermost.
pub fn product_of<'a, I>(rank: usize, items: I) -> Result<MappingClass, McgError>
where
    I: IntoIterator<Item = &'a MappingClass>,
{
    let mut acc = MappingClass::identity(rank);
    for g in items {
        acc = acc.product(g)?;
    }
    Ok(acc)
}
