//! Named monodromies: lens space families and the curious example on `D_4`.

use dehn_core::factorization::{Factorization, Twist};
use dehn_core::mcg::lantern::third_lantern_curve;
use dehn_core::mcg::{Curve, HoleSet, McgError};
use thiserror::Error;

use crate::dsl::{parse_monodromy, DslError, MonodromyScript};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
    #[error("unknown catalog id '{0}'")]
    UnknownId(String),
    #[error(transparent)]
    Dsl(#[from] DslError),
    #[error(transparent)]
    Mcg(#[from] McgError),
}

/// Families of planar open books on `D_{p-1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LensFamily {
    /// Universally tight `L(p,1)`: every boundary twist once.
    Ut { p: usize },
    /// Virtually overtwisted `L(p,1)`: `τ_α τ_β` and every `τ_{b_i}`, `i != k`.
    Vot { p: usize, k: usize },
    /// Universally tight `L(p(m+1)+1, m+1)`: `τ_{b_1}^{m+1}`, the other holes once, and the outer boundary.
    GenUt { p: usize, m: usize },
    /// Virtually overtwisted `L(p(m+1)+1, m+1)`: as `Vot` with the twist
    /// about `power_hole` raised to `m+1`.
    GenVot {
        p: usize,
        m: usize,
        k: usize,
        power_hole: usize,
    },
}

pub const DEFAULT_SPLIT: usize = 2;

impl LensFamily {
    pub fn holes(&self) -> usize {
        match *self {
            LensFamily::Ut { p }
            | LensFamily::Vot { p, .. }
            | LensFamily::GenUt { p, .. }
            | LensFamily::GenVot { p, .. } => p.saturating_sub(1),
        }
    }

    pub fn id(&self) -> String {
        match *self {
            LensFamily::Ut { p } => format!("L{p}1-ut"),
            LensFamily::Vot { p, k } => format!("L{p}1-vot-k{k}"),
            LensFamily::GenUt { p, m } => format!("Lgen-ut-p{p}-m{m}"),
            LensFamily::GenVot {
                p,
                m,
                k,
                power_hole,
            } => {
                let mut s = format!("Lgen-vot-p{p}-m{m}-k{k}");
                if power_hole != p - 1 {
                    s.push_str(&format!("-h{power_hole}"));
                }
                s
            }
        }
    }

    /// DSL text of the family member.
    pub fn script_text(&self) -> Result<String, CatalogError> {
        let n = self.holes();
        let range = |msg: String| Err(CatalogError::OutOfRange(msg));
        let boundary = |skip: Option<usize>, power: usize, exp: usize| -> String {
            (1..=n)
                .filter(|&i| Some(i) != skip)
                .map(|i| {
                    if i == power && exp > 1 {
                        format!("B{i}^{exp}")
                    } else {
                        format!("B{i}")
                    }
                })
                .collect::<Vec<_>>()
                .join(" ")
        };
        let curves = |k: usize| {
            let alpha: Vec<String> = (1..=k).map(|i| i.to_string()).collect();
            let beta: Vec<String> = (k..=n).map(|i| i.to_string()).collect();
            format!("T[{}] T[{}]", alpha.join(","), beta.join(","))
        };
        match *self {
            LensFamily::Ut { p } => {
                if p < 3 {
                    return range(format!("p = {p} must be at least 3"));
                }
                Ok(format!("n={n}; {} O", boundary(None, 0, 1)))
            }
            LensFamily::GenUt { p, m } => {
                if p < 3 {
                    return range(format!("p = {p} must be at least 3"));
                }
                Ok(format!("n={n}; {} O", boundary(None, 1, m + 1)))
            }
            LensFamily::Vot { p, k } => LensFamily::GenVot {
                p,
                m: 0,
                k,
                power_hole: p.saturating_sub(1),
            }
            .script_text(),
            LensFamily::GenVot {
                p,
                m,
                k,
                power_hole,
            } => {
                if p < 4 {
                    return range(format!("p = {p} must be at least 4"));
                }
                if k <= 1 || k >= n {
                    return range(format!("split k = {k} must satisfy 1 < k < {n}"));
                }
                if power_hole == 0 || power_hole > n || power_hole == k {
                    return range(format!(
                        "power hole {power_hole} must be in 1..={n} and differ from k"
                    ));
                }
                Ok(format!(
                    "n={n}; {} {}",
                    curves(k),
                    boundary(Some(k), power_hole, m + 1)
                ))
            }
        }
    }

    pub fn script(&self) -> Result<MonodromyScript, CatalogError> {
        Ok(parse_monodromy(&self.script_text()?)?)
    }
}

fn number_after(s: &str, prefix: &str) -> Option<(usize, String)> {
    let rest = s.strip_prefix(prefix)?;
    let end = rest
        .find(|c: char| !c.is_ascii_digit())
        .unwrap_or(rest.len());
    let v = rest[..end].parse().ok()?;
    Some((v, rest[end..].to_string()))
}

/// Parses ids such as `L41-ut`, `L51-vot`, `L51-vot-k3`, `Lgen-ut-p5-m1`,
/// `Lgen-vot-p5-m1-k2-h4`.
pub fn parse_catalog_id(id: &str) -> Result<LensFamily, CatalogError> {
    let unknown = || CatalogError::UnknownId(id.to_string());
    let optional = |rest: &str, key: &str| -> Result<(Option<usize>, String), CatalogError> {
        if rest.is_empty() {
            return Ok((None, String::new()));
        }
        let (v, r) = number_after(rest, key).ok_or_else(unknown)?;
        Ok((Some(v), r))
    };
    if let Some(rest) = id.strip_prefix("Lgen-ut-") {
        let (p, r) = number_after(rest, "p").ok_or_else(unknown)?;
        let (m, r) = number_after(&r, "-m").ok_or_else(unknown)?;
        return if r.is_empty() {
            Ok(LensFamily::GenUt { p, m })
        } else {
            Err(unknown())
        };
    }
    if let Some(rest) = id.strip_prefix("Lgen-vot-") {
        let (p, r) = number_after(rest, "p").ok_or_else(unknown)?;
        let (m, r) = number_after(&r, "-m").ok_or_else(unknown)?;
        let (k, r) = optional(&r, "-k")?;
        let (h, r) = optional(&r, "-h")?;
        if !r.is_empty() {
            return Err(unknown());
        }
        let k = k.unwrap_or(DEFAULT_SPLIT);
        return Ok(LensFamily::GenVot {
            p,
            m,
            k,
            power_hole: h.unwrap_or(p.saturating_sub(1)),
        });
    }
    let (p, r) = number_after(id, "L").ok_or_else(unknown)?;
    // The id glues p and q = 1 together, e.g. `L41`.
    if p < 10 || p % 10 != 1 {
        return Err(unknown());
    }
    let p = p / 10;
    match r.as_str() {
        "-ut" => Ok(LensFamily::Ut { p }),
        _ => {
            let rest = r.strip_prefix("-vot").ok_or_else(unknown)?;
            let (k, r) = optional(rest, "-k")?;
            if !r.is_empty() {
                return Err(unknown());
            }
            Ok(LensFamily::Vot {
                p,
                k: k.unwrap_or(DEFAULT_SPLIT),
            })
        }
    }
}

/// Curves of the curious example on `D_4`.
#[derive(Clone, Debug)]
pub struct CuriousConstants {
    pub a: Curve,
    pub b: Curve,
    pub c: Curve,
    pub gamma: Curve,
    /// Encloses holes 1 and 3, with `τ_a τ_b τ_d = τ_{b_1} τ_{b_2} τ_{b_3} τ_γ`.
    pub d: Curve,
}

pub const CURIOUS_RANK: usize = 4;

impl CuriousConstants {
    pub fn new() -> Result<Self, CatalogError> {
        let n = CURIOUS_RANK;
        Ok(CuriousConstants {
            a: Curve::canonical(n, HoleSet::interval(1, 2))?,
            b: Curve::canonical(n, HoleSet::interval(2, 3))?,
            c: Curve::canonical(n, HoleSet::interval(3, 4))?,
            gamma: Curve::canonical(n, HoleSet::interval(1, 3))?,
            d: third_lantern_curve(n)?,
        })
    }

    /// `τ_{τ_d^k(a)} τ_{τ_d^k(b)} τ_c τ_{b_1} τ_{b_3} τ_{b_4}`.
    pub fn member(&self, k: i64) -> Result<Factorization, CatalogError> {
        let n = CURIOUS_RANK;
        let g = self.d.twist_braid(1).pow(k);
        let mut factors = vec![
            Twist::positive(self.a.conjugate_by(&g)?),
            Twist::positive(self.b.conjugate_by(&g)?),
            Twist::positive(self.c.clone()),
        ];
        for i in [1, 3, 4] {
            factors.push(Twist::positive(Curve::hole(n, i)?));
        }
        Factorization::new(n, factors).map_err(|e| CatalogError::OutOfRange(e.to_string()))
    }
}

pub const CURIOUS_ID: &str = "curious";
pub const CURIOUS_SCRIPT: &str = "n=4; T[1,2] T[2,3] T[3,4] B1 B3 B4";

/// A catalog id resolved to its script.
pub fn catalog_script(id: &str) -> Result<MonodromyScript, CatalogError> {
    if id == CURIOUS_ID {
        return Ok(parse_monodromy(CURIOUS_SCRIPT)?);
    }
    parse_catalog_id(id)?.script()
}

/// Ids shown by `catalog list`.
pub fn preset_ids() -> Vec<String> {
    let mut ids: Vec<String> = (3..=7).map(|p| LensFamily::Ut { p }.id()).collect();
    ids.extend((4..=7).map(|p| {
        LensFamily::Vot {
            p,
            k: DEFAULT_SPLIT,
        }
        .id()
    }));
    for p in [3, 4, 5, 6] {
        for m in 0..=2 {
            ids.push(LensFamily::GenUt { p, m }.id());
        }
    }
    ids.push(
        LensFamily::GenVot {
            p: 5,
            m: 1,
            k: DEFAULT_SPLIT,
            power_hole: 4,
        }
        .id(),
    );
    ids.push(CURIOUS_ID.to_string());
    ids
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_words() {
        assert_eq!(
            LensFamily::Ut { p: 4 }.script_text().unwrap(),
            "n=3; B1 B2 B3 O"
        );
        assert_eq!(
            LensFamily::GenUt { p: 5, m: 1 }.script_text().unwrap(),
            "n=4; B1^2 B2 B3 B4 O"
        );
        assert_eq!(
            LensFamily::Vot { p: 5, k: 2 }.script_text().unwrap(),
            "n=4; T[1,2] T[2,3,4] B1 B3 B4"
        );
        assert_eq!(
            LensFamily::GenVot {
                p: 5,
                m: 2,
                k: 3,
                power_hole: 4
            }
            .script_text()
            .unwrap(),
            "n=4; T[1,2,3] T[3,4] B1 B2 B4^3"
        );
        assert!(LensFamily::Ut { p: 2 }.script_text().is_err());
        assert!(LensFamily::Vot { p: 4, k: 3 }.script_text().is_err());
        assert!(LensFamily::GenVot {
            p: 5,
            m: 1,
            k: 2,
            power_hole: 2
        }
        .script_text()
        .is_err());
    }

    #[test]
    fn ids_round_trip() {
        for id in preset_ids() {
            if id != CURIOUS_ID {
                assert_eq!(parse_catalog_id(&id).unwrap().id(), id);
            }
            catalog_script(&id).unwrap();
        }
        assert_eq!(parse_catalog_id("L41-ut").unwrap(), LensFamily::Ut { p: 4 });
        assert_eq!(
            parse_catalog_id("L51-vot").unwrap(),
            LensFamily::Vot { p: 5, k: 2 }
        );
        assert_eq!(
            parse_catalog_id("Lgen-vot-p6-m1").unwrap(),
            LensFamily::GenVot {
                p: 6,
                m: 1,
                k: 2,
                power_hole: 5
            }
        );
        assert!(parse_catalog_id("L42-ut").is_err());
        assert!(parse_catalog_id("Lgen-ut-p5").is_err());
    }

    #[test]
    fn curious_base_matches_script() {
        let k = CuriousConstants::new().unwrap();
        let base = k.member(0).unwrap();
        let script = catalog_script(CURIOUS_ID).unwrap();
        assert!(base.same_presentation(&script.factorization));
        assert_eq!(k.d.enclosed_set().to_vec(), vec![1, 3]);
    }
}
