//! Ring-expression DSL: Zn(n), Prod(e,...), M(n,e), T(n,e), S(n,e), Triv(e),
//! Rn(e,n), Anm(e,n,m), Bnm(e,n,m), Ks(e,s), Ms(n,e,s), TT(e1,e2,modspec),
//! RG(e, C(n)[xC(m)...]). Whitespace insensitive; parse then print is the
//! identity on canonical forms.

use std::fmt;
use std::str::FromStr;

use crate::construct::{self, BimoduleTable, BuildConfig, MatrixShape, Ring};
use crate::error::{Result, RingError};
use crate::iso;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModSpec {
    Regular,
    Zero,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RingExpr {
    Zn(usize),
    Prod(Vec<RingExpr>),
    Matrix {
        n: usize,
        shape: MatrixShape,
        base: Box<RingExpr>,
    },
    Triv(Box<RingExpr>),
    Rn(Box<RingExpr>, usize),
    Anm(Box<RingExpr>, usize, usize),
    Bnm(Box<RingExpr>, usize, usize),
    Ks(Box<RingExpr>, usize),
    Ms(usize, Box<RingExpr>, usize),
    Tt(Box<RingExpr>, Box<RingExpr>, ModSpec),
    Rg(Box<RingExpr>, Vec<usize>),
}

impl fmt::Display for RingExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingExpr::Zn(n) => write!(f, "Zn({n})"),
            RingExpr::Prod(es) => {
                write!(f, "Prod(")?;
                for (i, e) in es.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{e}")?;
                }
                write!(f, ")")
            }
            RingExpr::Matrix { n, shape, base } => {
                let tag = match shape {
                    MatrixShape::Full => "M",
                    MatrixShape::Upper => "T",
                    MatrixShape::UpperConstDiag => "S",
                };
                write!(f, "{tag}({n},{base})")
            }
            RingExpr::Triv(e) => write!(f, "Triv({e})"),
            RingExpr::Rn(e, n) => write!(f, "Rn({e},{n})"),
            RingExpr::Anm(e, n, m) => write!(f, "Anm({e},{n},{m})"),
            RingExpr::Bnm(e, n, m) => write!(f, "Bnm({e},{n},{m})"),
            RingExpr::Ks(e, s) => write!(f, "Ks({e},{s})"),
            RingExpr::Ms(n, e, s) => write!(f, "Ms({n},{e},{s})"),
            RingExpr::Tt(a, b, m) => {
                let tag = match m {
                    ModSpec::Regular => "regular",
                    ModSpec::Zero => "zero",
                };
                write!(f, "TT({a},{b},{tag})")
            }
            RingExpr::Rg(e, orders) => {
                write!(f, "RG({e},")?;
                for (i, n) in orders.iter().enumerate() {
                    if i > 0 {
                        write!(f, "x")?;
                    }
                    write!(f, "C({n})")?;
                }
                write!(f, ")")
            }
        }
    }
}

impl FromStr for RingExpr {
    type Err = RingError;
    fn from_str(s: &str) -> Result<RingExpr> {
        parse_ring_expr(s)
    }
}

pub fn parse_ring_expr(text: &str) -> Result<RingExpr> {
    let mut p = Parser::new(text);
    let expr = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.err("trailing input"));
    }
    Ok(expr)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Parser<'a> {
        Parser {
            src: text.as_bytes(),
            pos: 0,
        }
    }

    fn err(&self, msg: &str) -> RingError {
        RingError::input(format!("parse error at byte {}: {msg}", self.pos))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(&format!("expected '{}'", c as char)))
        }
    }

    fn ident(&mut self) -> Result<String> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphabetic() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected a constructor name"));
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos])
            .expect("ascii")
            .to_string())
    }

    fn int(&mut self) -> Result<usize> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected an integer"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .expect("ascii")
            .parse()
            .map_err(|_| self.err("integer out of range"))
    }

    fn expr(&mut self) -> Result<RingExpr> {
        let name = self.ident()?;
        self.expect(b'(')?;
        let node = match name.as_str() {
            "Zn" => RingExpr::Zn(self.int()?),
            "Prod" => {
                let mut es = vec![self.expr()?];
                while self.peek() == Some(b',') {
                    self.pos += 1;
                    es.push(self.expr()?);
                }
                RingExpr::Prod(es)
            }
            "M" | "T" | "S" => {
                let n = self.int()?;
                self.expect(b',')?;
                let base = Box::new(self.expr()?);
                let shape = match name.as_str() {
                    "M" => MatrixShape::Full,
                    "T" => MatrixShape::Upper,
                    _ => MatrixShape::UpperConstDiag,
                };
                RingExpr::Matrix { n, shape, base }
            }
            "Triv" => RingExpr::Triv(Box::new(self.expr()?)),
            "Rn" => {
                let e = Box::new(self.expr()?);
                self.expect(b',')?;
                RingExpr::Rn(e, self.int()?)
            }
            "Anm" | "Bnm" => {
                let e = Box::new(self.expr()?);
                self.expect(b',')?;
                let n = self.int()?;
                self.expect(b',')?;
                let m = self.int()?;
                if name == "Anm" {
                    RingExpr::Anm(e, n, m)
                } else {
                    RingExpr::Bnm(e, n, m)
                }
            }
            "Ks" => {
                let e = Box::new(self.expr()?);
                self.expect(b',')?;
                RingExpr::Ks(e, self.int()?)
            }
            "Ms" => {
                let n = self.int()?;
                self.expect(b',')?;
                let e = Box::new(self.expr()?);
                self.expect(b',')?;
                RingExpr::Ms(n, e, self.int()?)
            }
            "TT" => {
                let a = Box::new(self.expr()?);
                self.expect(b',')?;
                let b = Box::new(self.expr()?);
                self.expect(b',')?;
                let tag = self.ident()?;
                let m = match tag.as_str() {
                    "regular" => ModSpec::Regular,
                    "zero" => ModSpec::Zero,
                    other => return Err(self.err(&format!("unknown modspec '{other}'"))),
                };
                RingExpr::Tt(a, b, m)
            }
            "RG" => {
                let e = Box::new(self.expr()?);
                self.expect(b',')?;
                let mut orders = vec![self.group_factor()?];
                while self.peek() == Some(b'x') {
                    self.pos += 1;
                    orders.push(self.group_factor()?);
                }
                RingExpr::Rg(e, orders)
            }
            other => return Err(self.err(&format!("unknown constructor '{other}'"))),
        };
        self.expect(b')')?;
        Ok(node)
    }

    fn group_factor(&mut self) -> Result<usize> {
        let name = self.ident()?;
        if name != "C" {
            return Err(self.err("group factors must be C(n)"));
        }
        self.expect(b'(')?;
        let n = self.int()?;
        self.expect(b')')?;
        Ok(n)
    }
}

/// Build the ring an expression denotes. Labels follow the canonical
/// printed form of the expression.
pub fn build(expr: &RingExpr, cfg: &BuildConfig) -> Result<Ring> {
    match expr {
        RingExpr::Zn(n) => construct::build_zn(*n, cfg),
        RingExpr::Prod(es) => {
            let factors = es.iter().map(|e| build(e, cfg)).collect::<Result<Vec<_>>>()?;
            construct::build_product(factors, cfg)
        }
        RingExpr::Matrix { n, shape, base } => {
            construct::build_matrix(build(base, cfg)?, *n, *shape, cfg)
        }
        RingExpr::Triv(e) => construct::build_trivial_extension(build(e, cfg)?, None, cfg),
        RingExpr::Rn(e, n) => construct::build_rn(build(e, cfg)?, *n, cfg),
        RingExpr::Anm(e, n, m) => construct::build_anm(build(e, cfg)?, *n, *m, cfg),
        RingExpr::Bnm(e, n, m) => construct::build_bnm(build(e, cfg)?, *n, *m, cfg),
        RingExpr::Ks(e, s) => construct::build_ks(build(e, cfg)?, *s, cfg),
        RingExpr::Ms(n, e, s) => construct::build_formal_matrix(build(e, cfg)?, *n, *s, cfg),
        RingExpr::Tt(a, b, m) => {
            let r = build(a, cfg)?;
            let s = build(b, cfg)?;
            let module = match m {
                ModSpec::Zero => BimoduleTable::zero_module(r.size(), s.size()),
                ModSpec::Regular => {
                    // the regular bimodule is R acting on itself, so both
                    // rings must share operation tables
                    if !iso::tables_equal(&r, &s) {
                        return Err(RingError::input(format!(
                            "TT(...,regular) requires identical ring tables, got {} and {}",
                            r.label(),
                            s.label()
                        )));
                    }
                    BimoduleTable::regular(&r)
                }
            };
            construct::build_formal_triangular(r, s, module, cfg)
        }
        RingExpr::Rg(e, orders) => {
            let group = construct::build_group(orders)?;
            construct::build_group_ring(build(e, cfg)?, group, cfg)
        }
    }
}

/// Parse and build in one step.
pub fn build_from_text(text: &str, cfg: &BuildConfig) -> Result<Ring> {
    build(&parse_ring_expr(text)?, cfg)
}

/// Validate a freshly built ring under the configured bound; constructions
/// are trusted but this guards table bugs and externally loaded tables alike.
pub fn build_validated(text: &str, cfg: &BuildConfig) -> Result<Ring> {
    let ring: Ring = build_from_text(text, cfg)?;
    let report = ring.validate(cfg.validate_bound, cfg.seed);
    if let Some(v) = report.violation {
        return Err(RingError::Validation {
            label: ring.label().to_string(),
            law: v.law,
            witness: v.witness,
        });
    }
    Ok(ring)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parse_examples() {
        assert_eq!(parse_ring_expr("Zn(6)").unwrap(), RingExpr::Zn(6));
        assert_eq!(
            parse_ring_expr("M(2,Zn(2))").unwrap(),
            RingExpr::Matrix {
                n: 2,
                shape: MatrixShape::Full,
                base: Box::new(RingExpr::Zn(2)),
            }
        );
        assert_eq!(
            parse_ring_expr("RG(Zn(3),C(2))").unwrap(),
            RingExpr::Rg(Box::new(RingExpr::Zn(3)), vec![2])
        );
        assert_eq!(
            parse_ring_expr("RG(Zn(2),C(2)xC(2))").unwrap(),
            RingExpr::Rg(Box::new(RingExpr::Zn(2)), vec![2, 2])
        );
        assert_eq!(
            parse_ring_expr("Ms(2,Zn(4),2)").unwrap(),
            RingExpr::Ms(2, Box::new(RingExpr::Zn(4)), 2)
        );
        assert_eq!(
            parse_ring_expr(" TT( Zn(2) , Zn(2) , regular ) ").unwrap(),
            RingExpr::Tt(
                Box::new(RingExpr::Zn(2)),
                Box::new(RingExpr::Zn(2)),
                ModSpec::Regular
            )
        );
    }

    #[test]
    fn parse_errors_carry_position() {
        for bad in ["", "Zn", "Zn(", "Zn(2", "Zn(2))", "Q(3)", "Prod()", "TT(Zn(2),Zn(2),odd)"] {
            let err = parse_ring_expr(bad).unwrap_err();
            assert!(
                err.to_string().contains("parse error at byte"),
                "{bad}: {err}"
            );
        }
    }

    #[test]
    fn label_matches_canonical_print() {
        let cfg = BuildConfig::default();
        for text in [
            "Zn(6)",
            "Prod(Zn(2),Zn(3))",
            "M(2,Zn(2))",
            "T(2,Zn(3))",
            "S(3,Zn(2))",
            "Triv(Zn(3))",
            "Rn(Zn(2),3)",
            "Anm(Zn(2),2,2)",
            "Bnm(Zn(2),2,2)",
            "Ks(Zn(2),1)",
            "Ms(2,Zn(4),2)",
            "RG(Zn(3),C(2))",
            "RG(Zn(2),C(2)xC(2))",
        ] {
            let expr = parse_ring_expr(text).unwrap();
            assert_eq!(expr.to_string(), text);
            let ring = build(&expr, &cfg).unwrap();
            assert_eq!(ring.label(), text);
        }
    }

    #[test]
    fn regular_tt_requires_matching_tables() {
        let cfg = BuildConfig::default();
        assert!(build_from_text("TT(Zn(2),Zn(3),regular)", &cfg).is_err());
        assert!(build_from_text("TT(Zn(2),Zn(3),zero)", &cfg).is_ok());
    }

    fn arb_expr() -> impl Strategy<Value = RingExpr> {
        let leaf = (1usize..16).prop_map(RingExpr::Zn);
        leaf.prop_recursive(3, 12, 4, |inner| {
            prop_oneof![
                prop::collection::vec(inner.clone(), 1..4).prop_map(RingExpr::Prod),
                (1usize..4, inner.clone()).prop_map(|(n, e)| RingExpr::Matrix {
                    n,
                    shape: MatrixShape::Full,
                    base: Box::new(e),
                }),
                (1usize..4, inner.clone()).prop_map(|(n, e)| RingExpr::Matrix {
                    n,
                    shape: MatrixShape::Upper,
                    base: Box::new(e),
                }),
                inner.clone().prop_map(|e| RingExpr::Triv(Box::new(e))),
                (inner.clone(), 2usize..5).prop_map(|(e, n)| RingExpr::Rn(Box::new(e), n)),
                (inner.clone(), 2usize..4, 2usize..4)
                    .prop_map(|(e, n, m)| RingExpr::Anm(Box::new(e), n, m)),
                (inner.clone(), 0usize..8).prop_map(|(e, s)| RingExpr::Ks(Box::new(e), s)),
                (2usize..4, inner.clone(), 0usize..8)
                    .prop_map(|(n, e, s)| RingExpr::Ms(n, Box::new(e), s)),
                (inner.clone(), inner.clone(), prop_oneof![
                    Just(ModSpec::Regular),
                    Just(ModSpec::Zero)
                ])
                    .prop_map(|(a, b, m)| RingExpr::Tt(Box::new(a), Box::new(b), m)),
                (inner, prop::collection::vec(1usize..5, 1..3))
                    .prop_map(|(e, orders)| RingExpr::Rg(Box::new(e), orders)),
            ]
        })
    }

    proptest! {
        #[test]
        fn print_parse_round_trip(expr in arb_expr()) {
            let text = expr.to_string();
            let parsed = parse_ring_expr(&text).unwrap();
            prop_assert_eq!(parsed, expr);
        }
    }
}
