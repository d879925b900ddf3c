//! Recursive-descent parser for Laurent polynomials and quotients of
//! polynomials in `X`, `Y`.
//!
//! ```text
//! func   := expr | "(" expr ")" "/" "(" expr ")"
//! expr   := term (("+" | "-") term)*
//! term   := "-" term | factor ("*" factor)*
//! factor := rational | var | var "^" int
//! ```
//!
//! Whitespace is ignored between tokens. Literals are unsigned; signs come
//! from unary or binary minus, except in exponents, which may be negative.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::laurent::{Function, LaurentPoly2, RationalFunction2};
use crate::qplaces::{fmt_rational, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Var {
    X,
    Y,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExprAst {
    /// Nonnegative rational.
    Literal(Rational),
    Var(Var),
    Power(Var, i64),
    /// At least two factors.
    Product(Vec<ExprAst>),
    /// At least two terms; subtraction is a `Neg` term.
    Sum(Vec<ExprAst>),
    Neg(Box<ExprAst>),
    /// Only at the top level.
    Quotient(Box<ExprAst>, Box<ExprAst>),
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Var::X => "X",
            Var::Y => "Y",
        })
    }
}

impl fmt::Display for ExprAst {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExprAst::Literal(r) => f.write_str(&fmt_rational(r)),
            ExprAst::Var(v) => write!(f, "{v}"),
            ExprAst::Power(v, e) => write!(f, "{v}^{e}"),
            ExprAst::Product(items) => {
                for (i, x) in items.iter().enumerate() {
                    if i > 0 {
                        f.write_str("*")?;
                    }
                    write!(f, "{x}")?;
                }
                Ok(())
            }
            ExprAst::Sum(items) => {
                for (i, x) in items.iter().enumerate() {
                    match (i, x) {
                        (0, _) => write!(f, "{x}")?,
                        (_, ExprAst::Neg(inner)) => write!(f, " - {inner}")?,
                        _ => write!(f, " + {x}")?,
                    }
                }
                Ok(())
            }
            ExprAst::Neg(x) => write!(f, "-{x}"),
            ExprAst::Quotient(n, d) => write!(f, "({n})/({d})"),
        }
    }
}

impl ExprAst {
    /// Lowers a quotient to a coprime pair and anything else to a
    /// Laurent polynomial.
    pub fn lower(&self) -> Result<Function> {
        match self {
            ExprAst::Quotient(n, d) => {
                let (n, d) = (n.lower_poly(), d.lower_poly());
                if d.is_zero() {
                    return Err(Error::ZeroDenominator);
                }
                Ok(Function::Rational(RationalFunction2::new(n, d)?))
            }
            e => Ok(Function::Laurent(e.lower_poly())),
        }
    }

    fn lower_poly(&self) -> LaurentPoly2 {
        match self {
            ExprAst::Literal(r) => LaurentPoly2::constant(r.clone()),
            ExprAst::Var(Var::X) => LaurentPoly2::x(),
            ExprAst::Var(Var::Y) => LaurentPoly2::y(),
            ExprAst::Power(Var::X, e) => LaurentPoly2::monomial(Rational::one(), *e, 0),
            ExprAst::Power(Var::Y, e) => LaurentPoly2::monomial(Rational::one(), 0, *e),
            ExprAst::Product(items) => {
                items.iter().fold(LaurentPoly2::one(), |acc, x| &acc * &x.lower_poly())
            }
            ExprAst::Sum(items) => {
                items.iter().fold(LaurentPoly2::zero(), |acc, x| &acc + &x.lower_poly())
            }
            ExprAst::Neg(x) => -&x.lower_poly(),
            ExprAst::Quotient(..) => unreachable!("quotient below the top level"),
        }
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

fn err<T>(offset: usize, message: impl Into<String>) -> Result<T> {
    Err(Error::Parse { offset, message: message.into() })
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.unexpected(&format!("'{}'", c as char))
        }
    }

    fn unexpected<T>(&mut self, wanted: &str) -> Result<T> {
        match self.peek() {
            None => err(self.pos, format!("expected {wanted}, found end of input")),
            Some(c) => err(self.pos, format!("expected {wanted}, found '{}'", c as char)),
        }
    }

    fn digits(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.unexpected("digits");
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(s.parse().expect("digits parse"))
    }

    fn func(&mut self) -> Result<ExprAst> {
        if self.peek() == Some(b'(') {
            self.pos += 1;
            let num = self.expr()?;
            self.expect(b')')?;
            self.expect(b'/')?;
            self.expect(b'(')?;
            let den = self.expr()?;
            self.expect(b')')?;
            return Ok(ExprAst::Quotient(Box::new(num), Box::new(den)));
        }
        self.expr()
    }

    fn expr(&mut self) -> Result<ExprAst> {
        let mut items = vec![self.term()?];
        loop {
            if self.eat(b'+') {
                items.push(self.term()?);
            } else if self.eat(b'-') {
                items.push(ExprAst::Neg(Box::new(self.term()?)));
            } else {
                break;
            }
        }
        Ok(if items.len() == 1 { items.pop().expect("one") } else { ExprAst::Sum(items) })
    }

    fn term(&mut self) -> Result<ExprAst> {
        if self.eat(b'-') {
            return Ok(ExprAst::Neg(Box::new(self.term()?)));
        }
        let mut items = vec![self.factor()?];
        while self.eat(b'*') {
            items.push(self.factor()?);
        }
        Ok(if items.len() == 1 { items.pop().expect("one") } else { ExprAst::Product(items) })
    }

    fn factor(&mut self) -> Result<ExprAst> {
        let var = match self.peek() {
            Some(b'X') => Var::X,
            Some(b'Y') => Var::Y,
            Some(c) if c.is_ascii_digit() => return self.rational(),
            _ => return self.unexpected("a number, X or Y"),
        };
        self.pos += 1;
        if !self.eat(b'^') {
            return Ok(ExprAst::Var(var));
        }
        let neg = self.eat(b'-');
        let at = self.pos;
        let e = self.digits()?;
        let e = if neg { -e } else { e };
        match i64::try_from(e) {
            Ok(e) => Ok(ExprAst::Power(var, e)),
            Err(_) => err(at, "exponent out of range"),
        }
    }

    fn rational(&mut self) -> Result<ExprAst> {
        let n = self.digits()?;
        if !self.eat(b'/') {
            return Ok(ExprAst::Literal(Rational::from_integer(n)));
        }
        self.skip_ws();
        let at = self.pos;
        let d = self.digits()?;
        if d.is_zero() {
            return err(at, "zero denominator");
        }
        Ok(ExprAst::Literal(Rational::new(n, d)))
    }
}

/// Parses the grammar above into an AST.
pub fn parse_ast(text: &str) -> Result<ExprAst> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    if p.peek().is_none() {
        return err(p.pos, "empty input");
    }
    let ast = p.func()?;
    if p.peek().is_some() {
        return p.unexpected("end of input");
    }
    Ok(ast)
}

/// Parses and lowers; quotients are checked for a common factor.
pub fn parse_function(text: &str) -> Result<Function> {
    parse_ast(text)?.lower()
}

/// A rational value written as a signed product of literals and integer
/// powers, e.g. `-2^4*3^-1` or `16/81`.
pub fn parse_value(text: &str) -> Result<Rational> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    if p.peek().is_none() {
        return err(p.pos, "empty input");
    }
    let neg = p.eat(b'-');
    let mut value = Rational::one();
    loop {
        let base = match p.rational()? {
            ExprAst::Literal(r) => r,
            _ => unreachable!(),
        };
        let factor = if p.eat(b'^') {
            let eneg = p.eat(b'-');
            let at = p.pos;
            let e: i64 = match i64::try_from(p.digits()?) {
                Ok(e) if e <= 1 << 20 => e,
                _ => return err(at, "exponent out of range"),
            };
            if base.is_zero() && eneg {
                return err(at, "zero to a negative power");
            }
            crate::qplaces::rpow(&base, if eneg { -e } else { e })
        } else {
            base
        };
        value *= factor;
        if !p.eat(b'*') {
            break;
        }
    }
    if p.peek().is_some() {
        return p.unexpected("end of input");
    }
    Ok(if neg { -value } else { value })
}

/// True for an AST the parser can produce (so that printing round-trips).
pub fn is_canonical(ast: &ExprAst) -> bool {
    fn factor_ok(a: &ExprAst) -> bool {
        match a {
            ExprAst::Literal(r) => !r.is_negative(),
            ExprAst::Var(_) | ExprAst::Power(..) => true,
            _ => false,
        }
    }
    fn term_ok(a: &ExprAst) -> bool {
        match a {
            ExprAst::Neg(x) => term_ok(x),
            ExprAst::Product(items) => items.len() >= 2 && items.iter().all(factor_ok),
            x => factor_ok(x),
        }
    }
    fn expr_ok(a: &ExprAst) -> bool {
        match a {
            ExprAst::Sum(items) => items.len() >= 2 && items.iter().all(term_ok),
            x => term_ok(x),
        }
    }
    match ast {
        ExprAst::Quotient(n, d) => expr_ok(n) && expr_ok(d),
        x => expr_ok(x),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qplaces::{int, rat};

    fn offset(text: &str) -> usize {
        match parse_function(text) {
            Err(Error::Parse { offset, .. }) => offset,
            other => panic!("{text:?} gave {other:?}"),
        }
    }

    #[test]
    fn quotient_example() {
        let f = parse_function("(X - 1)/(Y - 1)").unwrap();
        let (p, q) = f.as_fraction();
        assert_eq!(p, &LaurentPoly2::x() - &LaurentPoly2::one());
        assert_eq!(q, &LaurentPoly2::y() - &LaurentPoly2::one());
    }

    #[test]
    fn laurent_example() {
        match parse_function("1 + 2/3*X^2*Y^-1").unwrap() {
            Function::Laurent(f) => {
                assert_eq!(f.coeff(2, -1), rat(2, 3));
                assert_eq!(f.coeff(0, 0), int(1));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn common_factor_rejected() {
        assert_eq!(parse_function("(X+Y)/(2*X+2*Y)").unwrap_err(), Error::SharedFactor);
        assert_eq!(parse_function("(X)/(0)").unwrap_err(), Error::ZeroDenominator);
    }

    #[test]
    fn printing_round_trips() {
        for s in ["(X - 1)/(Y - 1)", "1 + 2/3*X^2*Y^-1", "-X - -Y", "X^-3*Y^0 + 0", "-5/7*X*X"] {
            let a = parse_ast(s).unwrap();
            assert_eq!(a.to_string(), s);
            assert!(is_canonical(&a));
        }
        assert_eq!(parse_ast(" X*  Y -2 ").unwrap().to_string(), "X*Y - 2");
    }

    #[test]
    fn error_offsets() {
        assert_eq!(offset(""), 0);
        assert_eq!(offset("X +"), 3);
        assert_eq!(offset("Z"), 0);
        assert_eq!(offset("2/0"), 2);
        assert_eq!(offset("(X-1)/(Y-1"), 10);
        assert_eq!(offset("X**2"), 2);
        assert_eq!(offset("X^Y"), 2);
        assert_eq!(offset("1/-2"), 2);
    }

    #[test]
    fn values() {
        assert_eq!(parse_value("16").unwrap(), int(16));
        assert_eq!(parse_value("-2^4*3^-1").unwrap(), rat(-16, 3));
        assert_eq!(parse_value("1/2").unwrap(), rat(1, 2));
        assert!(parse_value("0^-1").is_err());
        assert!(parse_value("X").is_err());
    }
}
