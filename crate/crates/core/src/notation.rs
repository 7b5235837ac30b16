//! Text notation for segments, parameters, tempered representations and data.
//!
//! ```text
//! cuspidal := ("1" | "chi:" label {"+" label} | "rho:" label ["*"] ":" int ":" (o|s|n)) [".chi:" ...]
//! segment  := "D(" cuspidal ";" half "," half ")" | "St(" int ")" [ "v^" half ]
//! param    := "{" [ cuspidal "*S" int [ "^" int ] { "," ... } ] "}"
//! tempered := "T" param [ "@" ("+" | "-") ]
//! datum    := "L(" [ segment { "," segment } ] ";" tempered ")" [ "twist" chi ] | tempered "twist" chi
//! ```

use std::fmt;

use thiserror::Error;

use crate::error::{Error, Result};
use crate::half::HalfInt;
use crate::param::LParameter;
use crate::rep::{normalize_datum, Flavor, LanglandsDatum, TemperedRep, TowerSign};
use crate::segment::Segment;
use crate::symbols::{Cuspidal, QuadChar, SelfDualType};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at column {column}: expected {expected}, found {found}")]
pub struct ParseError {
    pub column: usize,
    pub expected: String,
    pub found: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SegmentExpr {
    Delta { rho: Cuspidal, b: HalfInt, a: HalfInt },
    Steinberg { n: u32, exp: Option<HalfInt> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParamItem {
    pub rho: Cuspidal,
    pub a: u32,
    pub mult: Option<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParamExpr {
    pub items: Vec<ParamItem>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TemperedExpr {
    pub param: ParamExpr,
    pub sign: Option<TowerSign>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DatumExpr {
    pub factors: Vec<SegmentExpr>,
    pub tempered: TemperedExpr,
    pub twist: Option<QuadChar>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RepExpr {
    Datum(DatumExpr),
    Tempered(TemperedExpr),
    Segment(SegmentExpr),
    Param(ParamExpr),
}

impl SegmentExpr {
    pub fn to_segment(&self) -> Result<Segment> {
        match self {
            SegmentExpr::Delta { rho, b, a } => Ok(Segment::new(rho.clone(), *b, *a)?),
            SegmentExpr::Steinberg { n, exp } => {
                let s = exp.unwrap_or_default();
                let r = HalfInt::from_twice(*n as i64 - 1);
                Ok(Segment::new(Cuspidal::trivial(), s - r, s + r)?)
            }
        }
    }
}

impl ParamExpr {
    /// The multiset, not yet validated.
    pub fn to_param(&self) -> LParameter {
        LParameter::from_summands(self.items.iter().map(|i| (i.rho.clone(), i.a, i.mult.unwrap_or(1))))
    }
}

impl TemperedExpr {
    pub fn to_tempered(&self) -> Result<TemperedRep> {
        TemperedRep::new(Flavor::Metaplectic, self.param.to_param(), self.sign.unwrap_or(TowerSign::Plus))
    }
}

impl DatumExpr {
    pub fn to_datum(&self) -> Result<LanglandsDatum> {
        let factors = self.factors.iter().map(SegmentExpr::to_segment).collect::<Result<Vec<_>>>()?;
        let d = normalize_datum(factors, self.tempered.to_tempered()?)?;
        Ok(d.with_twist(self.twist.clone().unwrap_or_default()))
    }
}

impl RepExpr {
    /// Data and bare tempered representations resolve to a Langlands datum.
    pub fn to_datum(&self) -> Result<LanglandsDatum> {
        match self {
            RepExpr::Datum(d) => d.to_datum(),
            RepExpr::Tempered(t) => Ok(LanglandsDatum::tempered_only(t.to_tempered()?)),
            RepExpr::Segment(_) | RepExpr::Param(_) => {
                Err(Error::WrongFlavor { expected: "Langlands datum or tempered" })
            }
        }
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

type PResult<T> = std::result::Result<T, ParseError>;

impl<'a> Parser<'a> {
    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn fail<T>(&self, expected: &str) -> PResult<T> {
        let found = match self.rest().chars().next() {
            None => "end of input".to_string(),
            Some(_) => format!("{:?}", self.rest().chars().take(8).collect::<String>()),
        };
        let column = self.src[..self.pos].chars().count() + 1;
        Err(ParseError { column, expected: expected.to_string(), found })
    }

    fn ws(&mut self) {
        let t = self.rest().trim_start();
        self.pos = self.src.len() - t.len();
    }

    fn eat(&mut self, lit: &str) -> bool {
        if self.rest().starts_with(lit) {
            self.pos += lit.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, lit: &str) -> PResult<()> {
        self.ws();
        if self.eat(lit) {
            Ok(())
        } else {
            self.fail(&format!("{lit:?}"))
        }
    }

    fn take_while(&mut self, f: impl Fn(u8) -> bool) -> &'a str {
        let n = self.rest().bytes().take_while(|&b| f(b)).count();
        let s = &self.rest()[..n];
        self.pos += n;
        s
    }

    fn uint(&mut self, what: &str) -> PResult<u32> {
        let start = self.pos;
        let d = self.take_while(|b| b.is_ascii_digit());
        match d.parse::<u32>() {
            Ok(v) => Ok(v),
            Err(_) => {
                self.pos = start;
                self.fail(what)
            }
        }
    }

    fn half(&mut self) -> PResult<HalfInt> {
        self.ws();
        let start = self.pos;
        self.eat("-");
        self.take_while(|b| b.is_ascii_digit());
        if !self.eat("/2") && self.rest().starts_with('/') {
            self.pos = start;
            return self.fail("half-integer (k or p/2)");
        }
        let text = &self.src[start..self.pos];
        match text.parse::<HalfInt>() {
            Ok(h) => Ok(h),
            Err(_) => {
                self.pos = start;
                self.fail("half-integer (k or p/2)")
            }
        }
    }

    fn label(&mut self) -> PResult<&'a str> {
        let l = self.take_while(|b| b.is_ascii_alphanumeric() || b == b'_');
        if l.is_empty() {
            self.fail("label")
        } else {
            Ok(l)
        }
    }

    fn quad_char(&mut self) -> PResult<QuadChar> {
        if !self.eat("chi:") {
            return self.fail("\"chi:\"");
        }
        let mut chi = QuadChar::named(self.label()?).expect("label checked");
        while self.eat("+") {
            chi = chi.mul(&QuadChar::named(self.label()?).expect("label checked"));
        }
        Ok(chi)
    }

    fn cuspidal(&mut self) -> PResult<Cuspidal> {
        self.ws();
        let base = if self.eat("1") {
            Cuspidal::trivial()
        } else if self.rest().starts_with("chi:") {
            Cuspidal::quadratic(self.quad_char()?)
        } else if self.eat("rho:") {
            let start = self.pos;
            self.label()?;
            self.eat("*");
            let label = &self.src[start..self.pos];
            if !self.eat(":") {
                return self.fail("\":\"");
            }
            let dim = self.uint("dimension")?;
            if dim == 0 {
                return self.fail("positive dimension");
            }
            if !self.eat(":") {
                return self.fail("\":\"");
            }
            let kind = if self.eat("o") {
                SelfDualType::Orthogonal
            } else if self.eat("s") {
                SelfDualType::Symplectic
            } else if self.eat("n") {
                SelfDualType::NonSelfDual
            } else {
                return self.fail("o, s or n");
            };
            match Cuspidal::symbol(label, dim, kind) {
                Ok(c) => c,
                Err(_) => {
                    self.pos = start;
                    return self.fail("label ('*' only on non-self-dual symbols)");
                }
            }
        } else {
            return self.fail("cuspidal (1, chi:LABEL or rho:LABEL:DIM:TYPE)");
        };
        if self.eat(".") {
            let chi = self.quad_char()?;
            return Ok(base.twisted(&chi));
        }
        Ok(base)
    }

    fn segment(&mut self) -> PResult<SegmentExpr> {
        self.ws();
        if self.eat("D(") {
            let rho = self.cuspidal()?;
            self.expect(";")?;
            let b = self.half()?;
            self.expect(",")?;
            let a = self.half()?;
            self.expect(")")?;
            Ok(SegmentExpr::Delta { rho, b, a })
        } else if self.eat("St(") {
            self.ws();
            let n = self.uint("segment length")?;
            self.expect(")")?;
            let save = self.pos;
            self.ws();
            let exp = if self.eat("v^") {
                Some(self.half()?)
            } else {
                self.pos = save;
                None
            };
            Ok(SegmentExpr::Steinberg { n, exp })
        } else {
            self.fail("segment (D(...) or St(n))")
        }
    }

    fn param(&mut self) -> PResult<ParamExpr> {
        self.expect("{")?;
        let mut items = Vec::new();
        self.ws();
        if self.eat("}") {
            return Ok(ParamExpr { items });
        }
        loop {
            let rho = self.cuspidal()?;
            self.expect("*S")?;
            let a = self.uint("S_a index")?;
            let mult = if self.eat("^") {
                let m = self.uint("multiplicity")?;
                if m == 0 {
                    return self.fail("positive multiplicity");
                }
                Some(m)
            } else {
                None
            };
            items.push(ParamItem { rho, a, mult });
            self.ws();
            if self.eat("}") {
                return Ok(ParamExpr { items });
            }
            self.expect(",")?;
        }
    }

    fn tempered(&mut self) -> PResult<TemperedExpr> {
        self.expect("T")?;
        let param = self.param()?;
        let sign = if self.eat("@") {
            if self.eat("+") {
                Some(TowerSign::Plus)
            } else if self.eat("-") {
                Some(TowerSign::Minus)
            } else {
                return self.fail("+ or -");
            }
        } else {
            None
        };
        Ok(TemperedExpr { param, sign })
    }

    fn twist(&mut self) -> PResult<Option<QuadChar>> {
        let save = self.pos;
        self.ws();
        if self.eat("twist") {
            self.ws();
            return Ok(Some(self.quad_char()?));
        }
        self.pos = save;
        Ok(None)
    }

    fn datum(&mut self) -> PResult<DatumExpr> {
        self.expect("L(")?;
        let mut factors = Vec::new();
        self.ws();
        if !self.rest().starts_with(';') {
            loop {
                factors.push(self.segment()?);
                self.ws();
                if !self.eat(",") {
                    break;
                }
            }
        }
        self.expect(";")?;
        let tempered = self.tempered()?;
        self.expect(")")?;
        let twist = self.twist()?;
        Ok(DatumExpr { factors, tempered, twist })
    }

    fn top(&mut self) -> PResult<RepExpr> {
        self.ws();
        let r = self.rest();
        let e = if r.starts_with("L(") {
            RepExpr::Datum(self.datum()?)
        } else if r.starts_with('T') {
            let tempered = self.tempered()?;
            match self.twist()? {
                Some(t) => RepExpr::Datum(DatumExpr { factors: Vec::new(), tempered, twist: Some(t) }),
                None => RepExpr::Tempered(tempered),
            }
        } else if r.starts_with("D(") || r.starts_with("St(") {
            RepExpr::Segment(self.segment()?)
        } else if r.starts_with('{') {
            RepExpr::Param(self.param()?)
        } else {
            return self.fail("L(...), T{...}, a segment or a parameter");
        };
        self.ws();
        if !self.rest().is_empty() {
            return self.fail("end of input");
        }
        Ok(e)
    }
}

pub fn parse_rep(text: &str) -> std::result::Result<RepExpr, ParseError> {
    Parser { src: text, pos: 0 }.top()
}

impl fmt::Display for SegmentExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SegmentExpr::Delta { rho, b, a } => write!(f, "D({rho};{b},{a})"),
            SegmentExpr::Steinberg { n, exp } => {
                write!(f, "St({n})")?;
                if let Some(e) = exp {
                    write!(f, " v^{e}")?;
                }
                Ok(())
            }
        }
    }
}

impl fmt::Display for ParamExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, i) in self.items.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}*S{}", i.rho, i.a)?;
            if let Some(m) = i.mult {
                write!(f, "^{m}")?;
            }
        }
        f.write_str("}")
    }
}

impl fmt::Display for TemperedExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T{}", self.param)?;
        match self.sign {
            Some(TowerSign::Plus) => f.write_str("@+"),
            Some(TowerSign::Minus) => f.write_str("@-"),
            None => Ok(()),
        }
    }
}

impl fmt::Display for DatumExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            write!(f, "{}", self.tempered)?;
        } else {
            f.write_str("L(")?;
            for (k, s) in self.factors.iter().enumerate() {
                if k > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{s}")?;
            }
            write!(f, "; {})", self.tempered)?;
        }
        if let Some(t) = &self.twist {
            write!(f, " twist {t}")?;
        }
        Ok(())
    }
}

impl fmt::Display for RepExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RepExpr::Datum(d) => d.fmt(f),
            RepExpr::Tempered(t) => t.fmt(f),
            RepExpr::Segment(s) => s.fmt(f),
            RepExpr::Param(p) => p.fmt(f),
        }
    }
}

/// Parses and resolves a datum in one step.
pub fn parse_datum(text: &str) -> std::result::Result<LanglandsDatum, String> {
    let e = parse_rep(text).map_err(|e| e.to_string())?;
    e.to_datum().map_err(|e| e.to_string())
}
