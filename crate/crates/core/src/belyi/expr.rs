//! Parser for rational-map literals such as `z^4*(z-1)^2*(z-a)` or
//! `(z^4-1)^2/(-4*z^4)`.
//!
//! Grammar: sums and differences of products and quotients of powers.
//! Atoms are decimal numbers, the variable `z`, the constants `i`, `a`
//! (`(−1−i√7)/4`) and `abar` (its conjugate), `sqrt(...)` of a constant, and
//! parenthesized expressions. Juxtaposition such as `4z` multiplies.

use num_complex::Complex64;

use super::poly::Polynomial;
use super::BelyiError;

/// `(−1 − i√7)/4`, root of `2a² + a + 1 = 0`.
pub fn fano_constant() -> Complex64 {
    Complex64::new(-0.25, -(7f64.sqrt()) / 4.0)
}

#[derive(Debug, Clone, PartialEq)]
pub(crate) struct Rational {
    pub num: Polynomial,
    pub den: Polynomial,
}

impl Rational {
    fn constant(c: Complex64) -> Self {
        Rational {
            num: Polynomial::constant(c),
            den: Polynomial::constant(Complex64::new(1.0, 0.0)),
        }
    }

    fn z() -> Self {
        Rational {
            num: Polynomial::monomial(Complex64::new(1.0, 0.0), 1),
            den: Polynomial::constant(Complex64::new(1.0, 0.0)),
        }
    }

    fn as_constant(&self) -> Option<Complex64> {
        (self.num.degree() == 0 && self.den.degree() == 0)
            .then(|| self.num.coeffs().first().copied().unwrap_or_default() / self.den.coeffs()[0])
    }

    /// Cancels a common power of `z`.
    fn normalized(self) -> Self {
        let k = self.num.zero_root_order().min(self.den.zero_root_order());
        if self.num.is_zero() {
            return Rational {
                num: Polynomial::zero(),
                den: Polynomial::constant(Complex64::new(1.0, 0.0)),
            };
        }
        Rational {
            num: self.num.shift_down(k),
            den: self.den.shift_down(k),
        }
    }

    fn add(&self, o: &Rational) -> Rational {
        if self.den == o.den {
            return Rational {
                num: &self.num + &o.num,
                den: self.den.clone(),
            }
            .normalized();
        }
        Rational {
            num: &(&self.num * &o.den) + &(&o.num * &self.den),
            den: &self.den * &o.den,
        }
        .normalized()
    }

    fn neg(&self) -> Rational {
        Rational {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    fn mul(&self, o: &Rational) -> Rational {
        Rational {
            num: &self.num * &o.num,
            den: &self.den * &o.den,
        }
        .normalized()
    }

    fn div(&self, o: &Rational) -> Result<Rational, BelyiError> {
        if o.num.is_zero() {
            return Err(BelyiError::Parse("division by zero".into()));
        }
        Ok(Rational {
            num: &self.num * &o.den,
            den: &self.den * &o.num,
        }
        .normalized())
    }

    fn pow(&self, e: i64) -> Result<Rational, BelyiError> {
        let base = if e < 0 {
            Rational::constant(Complex64::new(1.0, 0.0)).div(self)?
        } else {
            self.clone()
        };
        let e = e.unsigned_abs() as u32;
        Ok(Rational {
            num: base.num.pow(e),
            den: base.den.pow(e),
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(f64),
    Ident(String),
    Op(char),
}

fn lex(s: &str) -> Result<Vec<Tok>, BelyiError> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let ch = chars[i];
        if ch.is_whitespace() {
            i += 1;
        } else if ch.is_ascii_digit() || ch == '.' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '.') {
                i += 1;
            }
            if i < chars.len() && (chars[i] == 'e' || chars[i] == 'E') {
                let save = i;
                i += 1;
                if i < chars.len() && (chars[i] == '+' || chars[i] == '-') {
                    i += 1;
                }
                if i < chars.len() && chars[i].is_ascii_digit() {
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        i += 1;
                    }
                } else {
                    i = save;
                }
            }
            let text: String = chars[start..i].iter().collect();
            out.push(Tok::Num(
                text.parse().map_err(|_| BelyiError::Parse(format!("bad number {text:?}")))?,
            ));
        } else if ch.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Tok::Ident(chars[start..i].iter().collect()));
        } else if "+-*/^()".contains(ch) {
            out.push(Tok::Op(ch));
            i += 1;
        } else {
            return Err(BelyiError::Parse(format!("unexpected character {ch:?}")));
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
    mirror: bool,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Rational, BelyiError> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = acc.add(&self.term()?);
            } else if self.eat('-') {
                acc = acc.add(&self.term()?.neg());
            } else {
                return Ok(acc);
            }
        }
    }

    fn starts_atom(&self) -> bool {
        matches!(self.peek(), Some(Tok::Num(_)) | Some(Tok::Ident(_)) | Some(Tok::Op('(')))
    }

    fn term(&mut self) -> Result<Rational, BelyiError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = acc.mul(&self.unary()?);
            } else if self.eat('/') {
                acc = acc.div(&self.unary()?)?;
            } else if self.starts_atom() {
                acc = acc.mul(&self.power()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Rational, BelyiError> {
        if self.eat('-') {
            Ok(self.unary()?.neg())
        } else if self.eat('+') {
            self.unary()
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<Rational, BelyiError> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let paren = self.eat('(');
        let negative = self.eat('-');
        let e = match self.peek() {
            Some(Tok::Num(x)) if x.fract() == 0.0 && *x <= 64.0 => *x as i64,
            _ => return Err(BelyiError::Parse("exponent must be a small integer".into())),
        };
        self.pos += 1;
        if paren && !self.eat(')') {
            return Err(BelyiError::Parse("missing ')' after exponent".into()));
        }
        base.pow(if negative { -e } else { e })
    }

    fn atom(&mut self) -> Result<Rational, BelyiError> {
        match self.peek().cloned() {
            Some(Tok::Num(x)) => {
                self.pos += 1;
                Ok(Rational::constant(Complex64::new(x, 0.0)))
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return Err(BelyiError::Parse("missing ')'".into()));
                }
                Ok(e)
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                match name.as_str() {
                    "z" => Ok(Rational::z()),
                    "i" => Ok(Rational::constant(Complex64::new(0.0, 1.0))),
                    "a" => Ok(Rational::constant(fano_constant())),
                    "abar" => {
                        self.mirror = true;
                        Ok(Rational::constant(fano_constant().conj()))
                    }
                    "sqrt" => {
                        if !self.eat('(') {
                            return Err(BelyiError::Parse("sqrt needs '('".into()));
                        }
                        let e = self.expr()?;
                        if !self.eat(')') {
                            return Err(BelyiError::Parse("missing ')'".into()));
                        }
                        let c = e
                            .as_constant()
                            .ok_or_else(|| BelyiError::Parse("sqrt of a non-constant".into()))?;
                        Ok(Rational::constant(c.sqrt()))
                    }
                    other => Err(BelyiError::Parse(format!("unknown name {other:?}"))),
                }
            }
            Some(Tok::Op(c)) => Err(BelyiError::Parse(format!("unexpected {c:?}"))),
            None => Err(BelyiError::Parse("unexpected end of input".into())),
        }
    }
}

/// Numerator, denominator, and whether the conjugate constant was used.
pub(crate) fn parse_rational(text: &str) -> Result<(Rational, bool), BelyiError> {
    let mut p = Parser {
        toks: lex(text)?,
        pos: 0,
        mirror: false,
    };
    let r = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(BelyiError::Parse(format!("trailing input at token {}", p.pos)));
    }
    Ok((r, p.mirror))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fano_constant_is_a_root() {
        let a = fano_constant();
        assert!((2.0 * a * a + a + 1.0).norm() < 1e-15);
    }

    #[test]
    fn polynomial_literal() {
        let (r, mirror) = parse_rational("z^4*(z-1)^2*(z-a)").unwrap();
        assert!(!mirror);
        assert_eq!(r.num.degree(), 7);
        assert_eq!(r.den.degree(), 0);
        assert_eq!(r.num.zero_root_order(), 4);
        let (_, mirror) = parse_rational("z^4*(z-1)^2*(z-abar)").unwrap();
        assert!(mirror);
    }

    #[test]
    fn quotient_literal() {
        let (r, _) = parse_rational("(z^4-1)^2/(-4*z^4)").unwrap();
        assert_eq!(r.num.degree(), 8);
        assert_eq!(r.den.degree(), 4);
        let z = Complex64::new(0.3, 0.7);
        let want = (z.powu(4) - 1.0).powu(2) / (-4.0 * z.powu(4));
        assert!((r.num.eval(z) / r.den.eval(z) - want).norm() < 1e-12);
    }

    #[test]
    fn constants_and_juxtaposition() {
        let (r, _) = parse_rational("(-1 - i*sqrt(7))/4").unwrap();
        assert!((r.as_constant().unwrap() - fano_constant()).norm() < 1e-15);
        let (r, _) = parse_rational("4z^2 - 2.5e1").unwrap();
        assert_eq!(r.num, Polynomial::from_real(&[-25.0, 0.0, 4.0]));
        let (r, _) = parse_rational("z^(-2)").unwrap();
        assert_eq!(r.den.degree(), 2);
    }

    #[test]
    fn errors() {
        for bad in ["z^", "(z-1", "w+1", "z^1.5", "1/0", "sqrt(z)", "z $ 1", "z)"] {
            assert!(parse_rational(bad).is_err(), "{bad}");
        }
    }
}
