//! Recursive-descent parser for the formula grammar
//!
//! ```text
//! formula  := [ "E" varlist "." ] conj
//! conj     := eq { "&" eq }
//! eq       := term { ("+"|"-") term } "=" "0"
//! term     := coeff "*" var | var
//! var      := ("w"|"x") digits
//! coeff    := integer | "(" integer { "," integer } ")"
//! ```

use crate::error::{Error, Result};
use crate::ring::{Ring, RingElement};

use super::PpFormula;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Exists,
    Dot,
    And,
    Plus,
    Minus,
    Eq,
    Star,
    LParen,
    RParen,
    Comma,
    Int(i64),
    Var(char, usize),
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn tokens(text: &'a str) -> Result<Vec<(Tok, usize)>> {
        let mut lx = Lexer { src: text.as_bytes(), pos: 0 };
        let mut out = Vec::new();
        while let Some(t) = lx.next_token()? {
            out.push(t);
        }
        Ok(out)
    }

    fn next_token(&mut self) -> Result<Option<(Tok, usize)>> {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        let start = self.pos;
        let Some(&c) = self.src.get(self.pos) else { return Ok(None) };
        self.pos += 1;
        let tok = match c {
            b'E' => Tok::Exists,
            b'.' => Tok::Dot,
            b'&' => Tok::And,
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'=' => Tok::Eq,
            b'*' => Tok::Star,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b',' => Tok::Comma,
            b'0'..=b'9' => {
                let digits = self.digits(start);
                let v: i64 = digits.parse().map_err(|_| syntax(start, "integer literal too large"))?;
                Tok::Int(v)
            }
            b'w' | b'x' => {
                let d = self.digits(self.pos);
                if d.is_empty() {
                    return Err(syntax(start, "variable name needs an index"));
                }
                let idx: usize = d.parse().map_err(|_| syntax(start, "variable index too large"))?;
                if idx == 0 {
                    return Err(syntax(start, "variable indices start at 1"));
                }
                Tok::Var(c as char, idx)
            }
            other => return Err(syntax(start, &format!("unexpected character '{}'", other as char))),
        };
        Ok(Some((tok, start)))
    }

    fn digits(&mut self, from: usize) -> String {
        self.pos = from;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[from..self.pos]).into_owned()
    }
}

fn syntax(pos: usize, msg: &str) -> Error {
    Error::Syntax { pos, msg: msg.to_string() }
}

struct Parser<'r> {
    toks: Vec<(Tok, usize)>,
    at: usize,
    end: usize,
    ring: &'r Ring,
}

enum Var {
    Free(usize),
    Bound(usize),
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|t| &t.0)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |t| t.1)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.at).map(|t| t.0.clone());
        self.at += 1;
        t
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<()> {
        let pos = self.pos();
        match self.bump() {
            Some(t) if t == want => Ok(()),
            _ => Err(syntax(pos, &format!("expected {what}"))),
        }
    }

    fn coeff(&mut self, negate: bool) -> Result<RingElement> {
        let pos = self.pos();
        let v = match self.bump() {
            Some(Tok::Int(k)) => self.ring.from_int(k),
            Some(Tok::Minus) => match self.bump() {
                Some(Tok::Int(k)) => self.ring.from_int(-k),
                _ => return Err(syntax(pos, "expected an integer after '-'")),
            },
            Some(Tok::LParen) => {
                let mut parts = Vec::new();
                loop {
                    let p = self.pos();
                    let neg = if self.peek() == Some(&Tok::Minus) {
                        self.bump();
                        true
                    } else {
                        false
                    };
                    match self.bump() {
                        Some(Tok::Int(k)) => parts.push(if neg { -k } else { k }),
                        _ => return Err(syntax(p, "expected an integer coordinate")),
                    }
                    match self.bump() {
                        Some(Tok::Comma) => continue,
                        Some(Tok::RParen) => break,
                        _ => return Err(syntax(self.toks.get(self.at - 1).map_or(self.end, |t| t.1), "expected ',' or ')'")),
                    }
                }
                if !self.ring.contains(&parts) {
                    let text: Vec<String> = parts.iter().map(|x| x.to_string()).collect();
                    return Err(Error::CoefficientNotInRing(format!("({})", text.join(","))));
                }
                parts
            }
            _ => return Err(syntax(pos, "expected a coefficient or variable")),
        };
        Ok(if negate { self.ring.neg(&v) } else { v })
    }

    fn var(&mut self, prefix: &[usize]) -> Result<Var> {
        let pos = self.pos();
        match self.bump() {
            Some(Tok::Var('x', i)) => Ok(Var::Free(i)),
            Some(Tok::Var(_, i)) => prefix
                .iter()
                .position(|&w| w == i)
                .map(Var::Bound)
                .ok_or_else(|| Error::UnknownVariable(format!("w{i}"))),
            _ => Err(syntax(pos, "expected a variable")),
        }
    }

    fn term(&mut self, negate: bool, prefix: &[usize]) -> Result<(RingElement, Var)> {
        match self.peek() {
            Some(Tok::Var(..)) => {
                let v = self.var(prefix)?;
                let one = self.ring.one();
                Ok((if negate { self.ring.neg(&one) } else { one }, v))
            }
            Some(Tok::Int(_)) | Some(Tok::LParen) | Some(Tok::Minus) => {
                let c = self.coeff(negate)?;
                self.expect(Tok::Star, "'*'")?;
                let v = self.var(prefix)?;
                Ok((c, v))
            }
            _ => Err(syntax(self.pos(), "expected a term")),
        }
    }
}

type RawEq = Vec<(RingElement, Var)>;

pub(super) fn parse(text: &str, ring: &Ring) -> Result<PpFormula> {
    let toks = Lexer::tokens(text)?;
    let mut p = Parser { toks, at: 0, end: text.len(), ring };
    let mut prefix: Vec<usize> = Vec::new();
    if p.peek() == Some(&Tok::Exists) {
        p.bump();
        loop {
            let pos = p.pos();
            match p.bump() {
                Some(Tok::Var('w', i)) => {
                    if prefix.contains(&i) {
                        return Err(syntax(pos, &format!("w{i} is quantified twice")));
                    }
                    prefix.push(i);
                }
                Some(Tok::Var(_, _)) => return Err(syntax(pos, "only w variables may be quantified")),
                Some(Tok::Comma) if !prefix.is_empty() => continue,
                Some(Tok::Dot) if !prefix.is_empty() => break,
                _ => return Err(syntax(pos, "expected a w variable or '.'")),
            }
        }
    }
    let mut eqs: Vec<RawEq> = Vec::new();
    loop {
        let mut terms: RawEq = vec![p.term(false, &prefix)?];
        loop {
            match p.peek() {
                Some(Tok::Plus) => {
                    p.bump();
                    terms.push(p.term(false, &prefix)?);
                }
                Some(Tok::Minus) => {
                    p.bump();
                    terms.push(p.term(true, &prefix)?);
                }
                Some(Tok::Eq) => break,
                _ => return Err(syntax(p.pos(), "expected '+', '-' or '='")),
            }
        }
        p.expect(Tok::Eq, "'='")?;
        let pos = p.pos();
        match p.bump() {
            Some(Tok::Int(0)) => {}
            _ => return Err(syntax(pos, "right-hand side must be 0")),
        }
        eqs.push(terms);
        match p.peek() {
            Some(Tok::And) => {
                p.bump();
            }
            None => break,
            _ => return Err(syntax(p.pos(), "expected '&' or end of formula")),
        }
    }
    let n = eqs
        .iter()
        .flat_map(|e| e.iter())
        .filter_map(|(_, v)| match v {
            Var::Free(i) => Some(*i),
            Var::Bound(_) => None,
        })
        .max()
        .unwrap_or(0);
    let l = prefix.len();
    let mut f = PpFormula::empty(ring, n, l);
    for terms in eqs {
        let mut free = vec![ring.zero(); n];
        let mut bound = vec![ring.zero(); l];
        for (c, v) in terms {
            let slot = match v {
                Var::Free(i) => &mut free[i - 1],
                Var::Bound(j) => &mut bound[j],
            };
            *slot = ring.add(slot, &c);
        }
        f.push_equation(free, bound);
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z4() -> Ring {
        Ring::zmod(4).unwrap()
    }

    #[test]
    fn divisibility_formula() {
        let f = PpFormula::parse("E w1 . 2*w1 - 1*x1 = 0", &z4()).unwrap();
        assert_eq!((f.free_vars(), f.bound_vars(), f.equations().len()), (1, 1, 1));
        assert_eq!(f.equations()[0].bound, vec![vec![2]]);
        assert_eq!(f.equations()[0].free, vec![vec![3]]);
    }

    #[test]
    fn trivial_formula() {
        let f = PpFormula::parse("0*x1 = 0", &z4()).unwrap();
        assert_eq!((f.free_vars(), f.bound_vars()), (1, 0));
    }

    #[test]
    fn dangling_operator() {
        let text = "E w1 . w1 + = 0";
        match PpFormula::parse(text, &z4()) {
            Err(Error::Syntax { pos, .. }) => assert_eq!(pos, text.find('=').unwrap()),
            other => panic!("expected syntax error, got {other:?}"),
        }
    }

    #[test]
    fn unknown_bound_variable() {
        assert_eq!(PpFormula::parse("w2 - x1 = 0", &z4()).unwrap_err(), Error::UnknownVariable("w2".into()));
    }

    #[test]
    fn tuple_coefficients() {
        let r = Ring::truncated_poly(2, 2, 2).unwrap();
        let f = PpFormula::parse("E w1 . (0,1,0)*w1 + x1 = 0", &r).unwrap();
        assert_eq!(f.equations()[0].bound, vec![vec![0, 1, 0]]);
        assert!(matches!(PpFormula::parse("(0,2,0)*x1 = 0", &r), Err(Error::CoefficientNotInRing(_))));
        assert!(matches!(PpFormula::parse("(0,1)*x1 = 0", &r), Err(Error::CoefficientNotInRing(_))));
    }

    #[test]
    fn repeated_terms_accumulate() {
        let f = PpFormula::parse("x1 + x1 + 3*x2 - x2 = 0", &z4()).unwrap();
        assert_eq!(f.equations()[0].free, vec![vec![2], vec![2]]);
    }
}
