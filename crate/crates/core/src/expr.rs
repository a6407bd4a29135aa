//! Text and JSON encodings of monomials and polynomials.
//!
//! ```text
//! poly   = term { ("+"|"-") term } ;
//! term   = [ coeff [ "*" ] ] factor | coeff ;
//! factor = var | "(" factor factor ")" ;
//! var    = "x" digits | "x" ;
//! coeff  = [ "-" ] digits [ "/" digits ] ;
//! ```
//!
//! A bare leading `-` before a factor stands for the coefficient `-1`,
//! which is how negative unit coefficients print.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::{json, Value};
use thiserror::Error;

use crate::error::Error;
use crate::monomial::{Flavor, Monomial, Var};
use crate::polynomial::{Polynomial, Q};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at column {column}: {message}")]
pub struct ParseError {
    /// 1-based character column.
    pub column: usize,
    pub message: String,
}

fn err<T>(column: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        column,
        message: message.into(),
    })
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
    flavor: Flavor,
}

impl Parser {
    fn column(&self) -> usize {
        self.pos + 1
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn digits(&mut self) -> Option<BigInt> {
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| {
            self.chars[start..self.pos]
                .iter()
                .collect::<String>()
                .parse()
                .expect("ascii digits")
        })
    }

    /// Unsigned `digits [ "/" digits ]`.
    fn magnitude(&mut self) -> Result<Option<Q>, ParseError> {
        let Some(num) = self.digits() else {
            return Ok(None);
        };
        if self.peek() != Some('/') {
            return Ok(Some(Q::from_integer(num)));
        }
        self.pos += 1;
        self.skip_ws();
        let col = self.column();
        let Some(den) = self.digits() else {
            return err(col, "expected a denominator after '/'");
        };
        if den.is_zero() {
            return err(col, "zero denominator");
        }
        Ok(Some(Q::new(num, den)))
    }

    fn factor(&mut self) -> Result<Monomial, ParseError> {
        let col = self.column();
        match self.peek() {
            Some('x') => {
                self.pos += 1;
                let at = self.column();
                match self.digits() {
                    None => Ok(Monomial::var(1)),
                    Some(k) if k.is_zero() => err(at, "variable indices start at 1"),
                    Some(k) => match Var::try_from(k) {
                        Ok(v) => Ok(Monomial::var(v)),
                        Err(_) => err(at, "variable index too large"),
                    },
                }
            }
            Some('(') => {
                self.pos += 1;
                let left = self.factor()?;
                let right = self.factor()?;
                self.skip_ws();
                if self.peek() != Some(')') {
                    return err(self.column(), "expected ')' closing a product of two factors");
                }
                self.pos += 1;
                Ok(self.flavor.product(&left, &right))
            }
            Some(c) => err(self.column(), format!("unexpected '{c}', expected a variable or '('")),
            None => err(col.max(self.column()), "unexpected end of input, expected a factor"),
        }
    }

    fn starts_factor(&mut self) -> bool {
        matches!(self.peek(), Some('x') | Some('('))
    }

    /// A term; `sign` comes from the preceding `+`/`-` or a leading `-`.
    fn term(&mut self, mut sign: Q) -> Result<(Q, Monomial), ParseError> {
        if self.peek() == Some('-') {
            self.pos += 1;
            sign = -sign;
            self.skip_ws();
            if !self.chars.get(self.pos).is_some_and(char::is_ascii_digit) {
                return err(self.column(), "expected digits after '-'");
            }
        }
        self.skip_ws();
        let coeff = self.magnitude()?;
        match coeff {
            Some(c) => {
                if self.peek() == Some('*') {
                    self.pos += 1;
                    if !self.starts_factor() {
                        return err(self.column(), "expected a factor after '*'");
                    }
                }
                if self.starts_factor() {
                    Ok((sign * c, self.factor()?))
                } else {
                    Ok((sign * c, Monomial::Unit))
                }
            }
            None => Ok((sign, self.factor()?)),
        }
    }

    fn poly(&mut self) -> Result<Polynomial, ParseError> {
        let mut out = Polynomial::zero(self.flavor);
        let mut sign = Q::one();
        if self.peek() == Some('-') {
            self.pos += 1;
            sign = -Q::one();
        }
        loop {
            let (c, m) = self.term(sign)?;
            out.add_scaled(&Polynomial::monomial(self.flavor, m), &c);
            sign = match self.peek() {
                None => return Ok(out),
                Some('+') => Q::one(),
                Some('-') => -Q::one(),
                Some(c) => return err(self.column(), format!("unexpected '{c}', expected '+' or '-'")),
            };
            self.pos += 1;
        }
    }
}

/// Reports the first unbalanced parenthesis, if any.
fn check_parens(chars: &[char]) -> Result<(), ParseError> {
    let mut open = Vec::new();
    for (i, &c) in chars.iter().enumerate() {
        match c {
            '(' => open.push(i + 1),
            ')' if open.pop().is_none() => return err(i + 1, "unmatched ')'"),
            _ => {}
        }
    }
    match open.pop() {
        Some(col) => err(col, "unmatched '('"),
        None => Ok(()),
    }
}

/// Parses a polynomial, canonicalizing every monomial for `flavor`.
pub fn parse_polynomial(input: &str, flavor: Flavor) -> Result<Polynomial, ParseError> {
    let chars: Vec<char> = input.chars().collect();
    check_parens(&chars)?;
    let mut p = Parser { chars, pos: 0, flavor };
    if p.peek().is_none() {
        return err(1, "empty expression");
    }
    p.poly()
}

/// Parses a single monomial (`factor` or `1`).
pub fn parse_monomial(input: &str, flavor: Flavor) -> Result<Monomial, ParseError> {
    if input.trim() == "1" {
        return Ok(Monomial::Unit);
    }
    let chars: Vec<char> = input.chars().collect();
    check_parens(&chars)?;
    let mut p = Parser { chars, pos: 0, flavor };
    let m = p.factor()?;
    if p.peek().is_some() {
        return err(p.column(), "trailing input after monomial");
    }
    Ok(m)
}

/// Leaf index, `[left, right]`, or for associative monomials the flat word;
/// the unit is `[]`.
pub fn monomial_to_json(m: &Monomial, flavor: Flavor) -> Value {
    if m.is_unit() {
        return json!([]);
    }
    if flavor == Flavor::Associative {
        return json!(m.letters());
    }
    fn tree(m: &Monomial) -> Value {
        match m.children() {
            Some((a, b)) => json!([tree(a), tree(b)]),
            None => json!(m.letters()[0]),
        }
    }
    tree(m)
}

pub fn monomial_from_json(v: &Value, flavor: Flavor) -> Result<Monomial, Error> {
    let leaf = |v: &Value| -> Result<Monomial, Error> {
        match v.as_u64() {
            Some(k) if k >= 1 && k <= Var::MAX as u64 => Ok(Monomial::var(k as Var)),
            _ => Err(Error::Invalid(format!("bad variable index {v}"))),
        }
    };
    if flavor == Flavor::Associative {
        let Some(items) = v.as_array() else {
            return Err(Error::Invalid(format!("associative monomial must be an array, got {v}")));
        };
        let word: Vec<Var> = items
            .iter()
            .map(|x| leaf(x).map(|m| m.letters()[0]))
            .collect::<Result<_, _>>()?;
        return Ok(if word.is_empty() { Monomial::Unit } else { Monomial::left_normed(&word) });
    }
    fn tree(v: &Value, flavor: Flavor, leaf: &dyn Fn(&Value) -> Result<Monomial, Error>) -> Result<Monomial, Error> {
        match v.as_array().map(Vec::as_slice) {
            Some([a, b]) => Ok(flavor.product(&tree(a, flavor, leaf)?, &tree(b, flavor, leaf)?)),
            Some(_) => Err(Error::Invalid(format!("product must have two factors, got {v}"))),
            None => leaf(v),
        }
    }
    if v.as_array().is_some_and(Vec::is_empty) {
        return Ok(Monomial::Unit);
    }
    tree(v, flavor, &leaf)
}

/// `{"flavor": ..., "terms": [{"coeff": "p/q", "monomial": ...}]}` with
/// terms in ascending ≺ order.
pub fn polynomial_to_json(p: &Polynomial) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .map(|(m, c)| json!({"coeff": c.to_string(), "monomial": monomial_to_json(m, p.flavor())}))
        .collect();
    json!({"flavor": p.flavor().name(), "terms": terms})
}

pub fn polynomial_from_json(v: &Value) -> Result<Polynomial, Error> {
    let flavor: Flavor = v
        .get("flavor")
        .and_then(Value::as_str)
        .ok_or_else(|| Error::Invalid("missing flavor".into()))?
        .parse()
        .map_err(Error::Invalid)?;
    let terms = v
        .get("terms")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Invalid("missing terms".into()))?;
    let mut out = Polynomial::zero(flavor);
    for t in terms {
        let coeff: Q = t
            .get("coeff")
            .and_then(Value::as_str)
            .ok_or_else(|| Error::Invalid("term without coeff".into()))?
            .parse()
            .map_err(|_| Error::Invalid(format!("bad coefficient in {t}")))?;
        let m = monomial_from_json(
            t.get("monomial").ok_or_else(|| Error::Invalid("term without monomial".into()))?,
            flavor,
        )?;
        out.add_scaled(&Polynomial::monomial(flavor, m), &coeff);
    }
    Ok(out)
}
