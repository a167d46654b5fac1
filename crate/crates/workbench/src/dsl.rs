//! Text format for monodromy factorizations.
//!
//! ```text
//! script := "n=" INT ";" term*
//! term   := atom ("^" INT)?
//! atom   := "T[" INT ("," INT)* "]" | "B" INT | "O" | "conj(" word ";" atom ")"
//! word   := (atom ("^" INT)? | "s" INT "inv"?)+
//! ```
//!
//! `T[..]` is the canonical curve around the listed holes, `B i` the curve
//! around hole `i`, `O` the outer boundary. Inside `conj`, an atom stands for
//! its positive twist and `s j` / `s j inv` for half-twists; the word acts on
//! the final atom, leftmost letter outermost.

use std::fmt::Write as _;

use dehn_core::factorization::{Factorization, FactorizationError, Twist};
use dehn_core::mcg::{Braid, Curve, HalfTwist, HoleSet, McgError};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DslError {
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("hole {hole} at position {position} is outside 1..={rank}")]
    UnknownHole {
        position: usize,
        hole: usize,
        rank: usize,
    },
    #[error("zero exponent at position {position}")]
    ZeroExponent { position: usize },
    #[error("script is not a positive factorization: {0}")]
    NotPositive(FactorizationError),
    #[error("invalid curve at position {position}: {source}")]
    Curve { position: usize, source: McgError },
}

/// A parsed script together with its source text.
#[derive(Clone, Debug)]
pub struct MonodromyScript {
    pub rank: usize,
    pub source: String,
    pub factorization: Factorization,
}

impl MonodromyScript {
    /// Rejects scripts with negative exponents.
    pub fn positive(&self) -> Result<&Factorization, DslError> {
        self.factorization
            .require_positive()
            .map_err(DslError::NotPositive)?;
        Ok(&self.factorization)
    }

    pub fn canonical_text(&self) -> String {
        print_factorization(&self.factorization)
    }
}

/// Parses a full script with its `n=` header.
pub fn parse_monodromy(text: &str) -> Result<MonodromyScript, DslError> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        rank: 0,
    };
    p.ws();
    p.expect(b'n')?;
    p.ws();
    p.expect(b'=')?;
    p.ws();
    p.rank = p.uint()?;
    if p.rank > dehn_core::mcg::MAX_HOLES {
        return Err(p.error(format!(
            "rank {} exceeds {}",
            p.rank,
            dehn_core::mcg::MAX_HOLES
        )));
    }
    p.ws();
    p.expect(b';')?;
    let factors = p.terms()?;
    Ok(MonodromyScript {
        rank: p.rank,
        source: text.to_string(),
        factorization: build(p.rank, factors)?,
    })
}

/// Parses a term list over a rank given separately.
pub fn parse_terms(rank: usize, text: &str) -> Result<MonodromyScript, DslError> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        rank,
    };
    let factors = p.terms()?;
    Ok(MonodromyScript {
        rank,
        source: text.to_string(),
        factorization: build(rank, factors)?,
    })
}

fn build(rank: usize, factors: Vec<Twist>) -> Result<Factorization, DslError> {
    Factorization::new(rank, factors).map_err(|e| DslError::Syntax {
        position: 0,
        message: e.to_string(),
    })
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    rank: usize,
}

impl Parser<'_> {
    fn error(&self, message: impl Into<String>) -> DslError {
        DslError::Syntax {
            position: self.pos + 1,
            message: message.into(),
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn expect(&mut self, c: u8) -> Result<(), DslError> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(format!("expected '{}'", c as char)))
        }
    }

    fn eat(&mut self, lit: &str) -> bool {
        if self.src[self.pos..].starts_with(lit.as_bytes()) {
            self.pos += lit.len();
            true
        } else {
            false
        }
    }

    fn uint(&mut self) -> Result<usize, DslError> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| DslError::Syntax {
                position: start + 1,
                message: "integer too large".into(),
            })
    }

    fn int(&mut self) -> Result<i64, DslError> {
        let neg = self.peek() == Some(b'-');
        if neg {
            self.pos += 1;
        }
        let start = self.pos;
        let v = self.uint()?;
        let v = i64::try_from(v).map_err(|_| DslError::Syntax {
            position: start + 1,
            message: "integer too large".into(),
        })?;
        Ok(if neg { -v } else { v })
    }

    fn hole(&mut self) -> Result<usize, DslError> {
        let position = self.pos + 1;
        let hole = self.uint()?;
        if hole == 0 || hole > self.rank {
            return Err(DslError::UnknownHole {
                position,
                hole,
                rank: self.rank,
            });
        }
        Ok(hole)
    }

    /// Optional `^k`; returns 1 when absent.
    fn exponent(&mut self) -> Result<i64, DslError> {
        self.ws();
        if self.peek() != Some(b'^') {
            return Ok(1);
        }
        self.pos += 1;
        self.ws();
        let position = self.pos + 1;
        let k = self.int()?;
        if k == 0 {
            return Err(DslError::ZeroExponent { position });
        }
        Ok(k)
    }

    fn terms(&mut self) -> Result<Vec<Twist>, DslError> {
        let mut out = Vec::new();
        loop {
            self.ws();
            if self.peek().is_none() {
                return Ok(out);
            }
            let curve = self.atom()?;
            let k = self.exponent()?;
            let twist = if k > 0 {
                Twist::positive(curve)
            } else {
                Twist::negative(curve)
            };
            out.extend(std::iter::repeat_n(twist, k.unsigned_abs() as usize));
        }
    }

    fn curve_err(&self, position: usize) -> impl Fn(McgError) -> DslError {
        move |source| DslError::Curve { position, source }
    }

    fn atom(&mut self) -> Result<Curve, DslError> {
        let position = self.pos + 1;
        let n = self.rank;
        if self.eat("conj(") {
            let word = self.word()?;
            self.ws();
            self.expect(b';')?;
            self.ws();
            let inner = self.atom()?;
            self.ws();
            self.expect(b')')?;
            return inner.conjugate_by(&word).map_err(self.curve_err(position));
        }
        match self.peek() {
            Some(b'T') => {
                self.pos += 1;
                self.expect(b'[')?;
                let mut set = HoleSet::EMPTY;
                loop {
                    self.ws();
                    let at = self.pos + 1;
                    let h = self.hole()?;
                    if set.contains(h) {
                        return Err(DslError::Syntax {
                            position: at,
                            message: format!("hole {h} repeated"),
                        });
                    }
                    set = set.with(h);
                    self.ws();
                    if self.peek() == Some(b',') {
                        self.pos += 1;
                    } else {
                        break;
                    }
                }
                self.expect(b']')?;
                Curve::canonical(n, set).map_err(self.curve_err(position))
            }
            Some(b'B') => {
                self.pos += 1;
                self.ws();
                let h = self.hole()?;
                Curve::hole(n, h).map_err(self.curve_err(position))
            }
            Some(b'O') => {
                self.pos += 1;
                if n == 0 {
                    return Err(DslError::UnknownHole {
                        position,
                        hole: 0,
                        rank: 0,
                    });
                }
                Curve::outer(n).map_err(self.curve_err(position))
            }
            _ => Err(self.error("expected T[..], B, O or conj(")),
        }
    }

    fn word(&mut self) -> Result<Braid, DslError> {
        let mut braid = Braid::identity();
        let mut items = 0;
        loop {
            self.ws();
            match self.peek() {
                Some(b';') | None => break,
                Some(b's') => {
                    self.pos += 1;
                    self.ws();
                    let position = self.pos + 1;
                    let j = self.uint()?;
                    if j == 0 || j >= self.rank {
                        return Err(DslError::UnknownHole {
                            position,
                            hole: j,
                            rank: self.rank,
                        });
                    }
                    let h = if self.eat("inv") {
                        HalfTwist::neg(j)
                    } else {
                        HalfTwist::pos(j)
                    };
                    braid = braid.concat(&Braid::new([h]));
                }
                _ => {
                    let c = self.atom()?;
                    let k = self.exponent()?;
                    braid = braid.concat(&c.twist_braid(1).pow(k));
                }
            }
            items += 1;
        }
        if items == 0 {
            return Err(self.error("empty conjugating word"));
        }
        Ok(braid)
    }
}

fn set_atom(rank: usize, set: HoleSet) -> String {
    if set.len() == 1 {
        format!("B{}", set.min_hole().unwrap())
    } else if set == HoleSet::full(rank) {
        "O".to_string()
    } else {
        let holes: Vec<String> = set.iter().map(|h| h.to_string()).collect();
        format!("T[{}]", holes.join(","))
    }
}

fn half_twists(b: &Braid) -> String {
    let parts: Vec<String> = b
        .letters()
        .iter()
        .map(|h| {
            if h.positive {
                format!("s{}", h.index)
            } else {
                format!("s{}inv", h.index)
            }
        })
        .collect();
    parts.join(" ")
}

/// Canonical spelling of one curve.
pub fn print_curve(c: &Curve) -> String {
    let n = c.rank();
    if c.is_canonical_presentation() {
        set_atom(n, c.enclosed_set())
    } else {
        let (a, b) = c.block();
        format!(
            "conj({}; {})",
            half_twists(c.transporter()),
            set_atom(n, HoleSet::interval(a, b))
        )
    }
}

/// Canonical text; runs of identical factors are written with an exponent.
pub fn print_factorization(f: &Factorization) -> String {
    let mut out = format!("n={};", f.rank());
    let factors = f.factors();
    let mut i = 0;
    while i < factors.len() {
        let t = &factors[i];
        let mut j = i + 1;
        while j < factors.len()
            && factors[j].sign == t.sign
            && factors[j].curve.same_presentation(&t.curve)
        {
            j += 1;
        }
        let k = (j - i) as i64 * t.sign as i64;
        out.push(' ');
        out.push_str(&print_curve(&t.curve));
        if k != 1 {
            write!(out, "^{k}").unwrap();
        }
        i = j;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn blocks(f: &Factorization) -> Vec<Vec<usize>> {
        f.factors()
            .iter()
            .map(|t| t.enclosed_set().to_vec())
            .collect()
    }

    #[test]
    fn sugar_expands() {
        let s = parse_monodromy("n=3; B1 B2 B3 O").unwrap();
        assert_eq!(
            blocks(&s.factorization),
            vec![vec![1], vec![2], vec![3], vec![1, 2, 3]]
        );
        let s = parse_monodromy("n=4; T[1,2] T[2,3] B1 B3 B4").unwrap();
        assert_eq!(s.factorization.len(), 5);
        let s = parse_monodromy("n=3; B1^2 B2 B3 O").unwrap();
        assert_eq!(s.factorization.len(), 5);
        assert_eq!(s.factorization.profile().multiplicity(1), 3);
    }

    #[test]
    fn conj_words() {
        let s = parse_monodromy("n=3; conj(s2; T[1,2])").unwrap();
        let c = &s.factorization.factors()[0].curve;
        assert_eq!(c.enclosed_set().to_vec(), vec![1, 3]);
        assert_eq!(print_curve(c), "T[1,3]");
        let s = parse_monodromy("n=3; conj(s1 s1 s2; T[1,2])").unwrap();
        assert_eq!(s.canonical_text(), "n=3; conj(s1 s1 s2; T[1,2])");
        let s = parse_monodromy("n=3; conj(T[1,2]^-1 s2inv; B3)").unwrap();
        assert_eq!(s.factorization.len(), 1);
    }

    #[test]
    fn printer_groups_runs() {
        let s = parse_monodromy("n=2;  B1 B1   B2^-1 O").unwrap();
        assert_eq!(s.canonical_text(), "n=2; B1^2 B2^-1 O");
        assert!(s.positive().is_err());
        assert_eq!(parse_monodromy("n=3;").unwrap().canonical_text(), "n=3;");
        assert_eq!(
            parse_monodromy("n=3; T[3,1]").unwrap().canonical_text(),
            "n=3; T[1,3]"
        );
    }

    #[test]
    fn errors_carry_positions() {
        assert_eq!(
            parse_monodromy("n=3; B4").unwrap_err(),
            DslError::UnknownHole {
                position: 7,
                hole: 4,
                rank: 3
            }
        );
        assert_eq!(
            parse_monodromy("n=3; B1^0").unwrap_err(),
            DslError::ZeroExponent { position: 9 }
        );
        assert!(matches!(
            parse_monodromy("n=3; X"),
            Err(DslError::Syntax { position: 6, .. })
        ));
        assert!(matches!(
            parse_monodromy("n=3 B1"),
            Err(DslError::Syntax { .. })
        ));
        assert!(matches!(
            parse_monodromy("n=3; T[1,1]"),
            Err(DslError::Syntax { .. })
        ));
        assert!(matches!(
            parse_monodromy("n=3; conj(; B1)"),
            Err(DslError::Syntax { .. })
        ));
        assert!(matches!(
            parse_monodromy("n=3; conj(s3; B1)"),
            Err(DslError::UnknownHole { .. })
        ));
    }

    #[test]
    fn terms_without_header() {
        let s = parse_terms(3, "B1 B2 B3 O").unwrap();
        assert_eq!(s.canonical_text(), "n=3; B1 B2 B3 O");
    }
}
