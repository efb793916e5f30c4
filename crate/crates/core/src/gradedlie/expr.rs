//! Bracket expressions shared by the free Lie algebra and the Kohno algebra.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := '-' term | [int ['*']] factor
//! factor := '[' expr (',' expr)+ ']'     left-normed bracket
//!         | '(' expr ')'
//!         | atom
//! atom   := x<i> | B[i,j] | L[n] | G[q,n]
//! ```
//!
//! `L[n]` is `Λ_n` and `G[q,n]` is `γ_q(n)`.

use super::lie::{Alphabet, LieElement};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Atom {
    X(usize),
    B(usize, usize),
    Lambda(usize),
    Gamma(usize, usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Atom(Atom),
    /// Integer combination.
    Sum(Vec<(i64, Expr)>),
    /// Left-normed bracket `[..[e_1,e_2],..,e_r]`.
    Bracket(Vec<Expr>),
}

/// The operations an expression is evaluated with.
pub trait LieTarget: Sized + Clone {
    fn zero_like(&self) -> Self;
    fn axpy(&mut self, c: i64, other: &Self) -> Result<()>;
    fn lie_bracket(&self, other: &Self) -> Result<Self>;
}

impl Expr {
    pub fn eval<T: LieTarget>(&self, zero: &T, atom: &dyn Fn(Atom) -> Result<T>) -> Result<T> {
        match self {
            Expr::Atom(a) => atom(*a),
            Expr::Sum(parts) => {
                let mut acc = zero.zero_like();
                for (c, e) in parts {
                    acc.axpy(*c, &e.eval(zero, atom)?)?;
                }
                Ok(acc)
            }
            Expr::Bracket(items) => {
                let mut acc = items[0].eval(zero, atom)?;
                for e in &items[1..] {
                    acc = acc.lie_bracket(&e.eval(zero, atom)?)?;
                }
                Ok(acc)
            }
        }
    }

    pub fn atoms(&self) -> Vec<Atom> {
        let mut out = Vec::new();
        self.collect_atoms(&mut out);
        out
    }

    fn collect_atoms(&self, out: &mut Vec<Atom>) {
        match self {
            Expr::Atom(a) => out.push(*a),
            Expr::Sum(parts) => parts.iter().for_each(|(_, e)| e.collect_atoms(out)),
            Expr::Bracket(items) => items.iter().for_each(|e| e.collect_atoms(out)),
        }
    }
}

impl LieTarget for LieElement {
    fn zero_like(&self) -> Self {
        LieElement::zero(self.alphabet())
    }

    fn axpy(&mut self, c: i64, other: &Self) -> Result<()> {
        *self = self.add(&other.scale(c))?;
        Ok(())
    }

    fn lie_bracket(&self, other: &Self) -> Result<Self> {
        self.bracket(other)
    }
}

/// Lyndon normal form of a bracket expression in `x1..xn`.
pub fn lie_normalize(text: &str, n: usize) -> Result<LieElement> {
    let e = parse_expr(text)?;
    let a = Alphabet::Free(n);
    e.eval(&LieElement::zero(a), &|atom| match atom {
        Atom::X(i) => LieElement::gen(a, i),
        _ => Err(Error::Parse("only x generators belong to the free Lie algebra".into())),
    })
}

pub fn parse_expr(text: &str) -> Result<Expr> {
    let chars: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
    let mut p = Parser { chars, pos: 0 };
    if p.chars.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    let e = p.expr()?;
    if p.pos != p.chars.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(e)
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn error(&self, msg: &str) -> Error {
        let rest: String = self.chars[self.pos.min(self.chars.len())..].iter().collect();
        Error::Parse(format!("{msg} at '{rest}'"))
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&format!("expected '{c}'")))
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut parts = vec![(1, self.term()?)];
        while let Some(c) = self.peek() {
            let sign = match c {
                '+' => 1,
                '-' => -1,
                _ => break,
            };
            self.pos += 1;
            parts.push((sign, self.term()?));
        }
        Ok(if parts.len() == 1 && parts[0].0 == 1 {
            parts.pop().unwrap().1
        } else {
            Expr::Sum(parts)
        })
    }

    fn term(&mut self) -> Result<Expr> {
        if self.peek() == Some('-') {
            self.pos += 1;
            return Ok(Expr::Sum(vec![(-1, self.term()?)]));
        }
        if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            let c = self.integer()? as i64;
            if self.peek() == Some('*') {
                self.pos += 1;
            } else if c == 0 && !self.starts_factor() {
                return Ok(Expr::Sum(Vec::new()));
            }
            return Ok(Expr::Sum(vec![(c, self.factor()?)]));
        }
        self.factor()
    }

    fn starts_factor(&self) -> bool {
        matches!(self.peek(), Some('[' | '(' | 'x' | 'X' | 'B' | 'b' | 'L' | 'l' | 'G' | 'g'))
    }

    fn integer(&mut self) -> Result<usize> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse().map_err(|_| self.error("expected an integer"))
    }

    fn indices(&mut self, count: usize) -> Result<Vec<usize>> {
        self.expect('[')?;
        let mut out = vec![self.integer()?];
        for _ in 1..count {
            self.expect(',')?;
            out.push(self.integer()?);
        }
        self.expect(']')?;
        Ok(out)
    }

    fn factor(&mut self) -> Result<Expr> {
        match self.peek() {
            Some('[') => {
                self.pos += 1;
                let mut items = vec![self.expr()?];
                while self.peek() == Some(',') {
                    self.pos += 1;
                    items.push(self.expr()?);
                }
                self.expect(']')?;
                if items.len() < 2 {
                    return Err(self.error("a bracket needs at least two entries"));
                }
                Ok(Expr::Bracket(items))
            }
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Some('x' | 'X') => {
                self.pos += 1;
                let i = self.integer()?;
                if i == 0 {
                    return Err(self.error("generator indices start at 1"));
                }
                Ok(Expr::Atom(Atom::X(i)))
            }
            Some('B' | 'b') => {
                self.pos += 1;
                let v = self.indices(2)?;
                if v[0] == 0 || v[0] >= v[1] {
                    return Err(Error::Parse(format!("B[{},{}] needs 1 <= i < j", v[0], v[1])));
                }
                Ok(Expr::Atom(Atom::B(v[0], v[1])))
            }
            Some('L' | 'l') => {
                self.pos += 1;
                let v = self.indices(1)?;
                if v[0] == 0 {
                    return Err(Error::Parse("L[n] needs n >= 1".into()));
                }
                Ok(Expr::Atom(Atom::Lambda(v[0])))
            }
            Some('G' | 'g') => {
                self.pos += 1;
                let v = self.indices(2)?;
                if v[0] < 2 || v[0] > v[1] {
                    return Err(Error::Parse(format!("G[{},{}] needs 2 <= q <= n", v[0], v[1])));
                }
                Ok(Expr::Atom(Atom::Gamma(v[0], v[1])))
            }
            _ => Err(self.error("expected a bracket, parenthesis or generator")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_brackets_and_sums() {
        let e = parse_expr("[x1, x2, x2] - 2*[x1,x3]").unwrap();
        let Expr::Sum(parts) = e else { panic!() };
        assert_eq!(parts.len(), 2);
        assert_eq!(parts[1].0, -1);
        assert_eq!(parse_expr("B[1,2]").unwrap(), Expr::Atom(Atom::B(1, 2)));
        assert_eq!(parse_expr("G[2,3]").unwrap(), Expr::Atom(Atom::Gamma(2, 3)));
        assert_eq!(parse_expr("0").unwrap(), Expr::Sum(Vec::new()));
        assert_eq!(
            parse_expr("[L[3], G[3,3]]").unwrap().atoms(),
            vec![Atom::Lambda(3), Atom::Gamma(3, 3)]
        );
    }

    #[test]
    fn free_normal_form() {
        assert_eq!(lie_normalize("[x1,x2,x1]", 2).unwrap().to_string(), "-[x1,[x1,x2]]");
        assert!(lie_normalize("[x1,x1]", 1).unwrap().is_zero());
        assert!(lie_normalize("x3", 2).is_err());
        assert!(lie_normalize("B[1,2]", 2).is_err());
    }

    #[test]
    fn rejects_malformed() {
        for bad in ["", "[x1]", "x0", "B[2,1]", "G[1,3]", "x1 +", "[x1,x2", "y1", "x1)"] {
            assert!(parse_expr(bad).is_err(), "{bad}");
        }
    }
}
