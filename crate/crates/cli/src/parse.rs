//! Group expressions: `expr := atom ('+' atom)*`, `atom := Z | Z^k | Z/n | Z/n^k`.
//! A lone `0` is the trivial group, matching how it is printed.

use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;
use whitehead_core::FgAbGroup;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Atom {
    /// `None` for Z.
    pub modulus: Option<u64>,
    pub copies: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupExpression {
    pub atoms: Vec<Atom>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("semantic error at position {position}: {message}")]
    Semantic { position: usize, message: String },
}

struct Cursor<'a> {
    chars: Vec<(usize, char)>,
    at: usize,
    text: &'a str,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Self {
            chars: text
                .char_indices()
                .filter(|(_, c)| !c.is_whitespace())
                .collect(),
            at: 0,
            text,
        }
    }

    /// Position (0-based character offset into the original text) of the next token.
    fn position(&self) -> usize {
        let byte = self.chars.get(self.at).map_or(self.text.len(), |&(i, _)| i);
        self.text[..byte].chars().count()
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.at).map(|&(_, c)| c)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.syntax(format!("expected '{c}'")))
        }
    }

    fn syntax(&self, what: String) -> ParseError {
        let found = match self.peek() {
            Some(c) => format!("found '{c}'"),
            None => "found end of input".to_string(),
        };
        ParseError::Syntax {
            position: self.position(),
            message: format!("{what}, {found}"),
        }
    }

    fn integer(&mut self) -> Result<(usize, u64), ParseError> {
        let start = self.position();
        let mut digits = String::new();
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            digits.push(c);
            self.at += 1;
        }
        if digits.is_empty() {
            return Err(self.syntax("expected an integer".into()));
        }
        digits
            .parse()
            .map(|v| (start, v))
            .map_err(|_| ParseError::Semantic {
                position: start,
                message: format!("integer {digits} is too large"),
            })
    }
}

pub fn parse_group(text: &str) -> Result<GroupExpression, ParseError> {
    let mut cur = Cursor::new(text);
    if cur.eat('0') {
        return match cur.peek() {
            None => Ok(GroupExpression { atoms: vec![] }),
            Some(_) => Err(cur.syntax("expected end of input after '0'".into())),
        };
    }
    let mut atoms = vec![atom(&mut cur)?];
    while cur.eat('+') {
        atoms.push(atom(&mut cur)?);
    }
    if cur.peek().is_some() {
        return Err(cur.syntax("expected '+' or end of input".into()));
    }
    Ok(GroupExpression { atoms })
}

fn atom(cur: &mut Cursor) -> Result<Atom, ParseError> {
    cur.expect('Z')?;
    let modulus = if cur.eat('/') {
        let (pos, n) = cur.integer()?;
        if n < 2 {
            return Err(ParseError::Semantic {
                position: pos,
                message: format!("modulus must be at least 2, got {n}"),
            });
        }
        Some(n)
    } else {
        None
    };
    let copies = if cur.eat('^') {
        let (pos, k) = cur.integer()?;
        if k < 1 {
            return Err(ParseError::Semantic {
                position: pos,
                message: format!("exponent must be at least 1, got {k}"),
            });
        }
        u32::try_from(k).map_err(|_| ParseError::Semantic {
            position: pos,
            message: format!("exponent {k} is too large"),
        })?
    } else {
        1
    };
    Ok(Atom { modulus, copies })
}

impl GroupExpression {
    pub fn evaluate(&self) -> FgAbGroup {
        let mut orders = Vec::new();
        for a in &self.atoms {
            let d = BigInt::from(a.modulus.unwrap_or(0));
            orders.extend(std::iter::repeat_n(d, a.copies as usize));
        }
        FgAbGroup::from_cyclic_orders(&orders)
    }

    /// The canonical expression of a group: invariant factors, torsion first, repeats collapsed.
    pub fn canonical(g: &FgAbGroup) -> Self {
        let mut atoms: Vec<Atom> = Vec::new();
        for d in g.invariants() {
            let modulus = if d == &BigInt::from(0) {
                None
            } else {
                Some(u64::try_from(d).expect("modulus fits in 64 bits"))
            };
            match atoms.last_mut() {
                Some(last) if last.modulus == modulus => last.copies += 1,
                _ => atoms.push(Atom { modulus, copies: 1 }),
            }
        }
        Self { atoms }
    }
}

impl fmt::Display for GroupExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.atoms.is_empty() {
            return write!(f, "0");
        }
        for (i, a) in self.atoms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            match a.modulus {
                Some(n) => write!(f, "Z/{n}")?,
                None => write!(f, "Z")?,
            }
            if a.copies > 1 {
                write!(f, "^{}", a.copies)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inv(text: &str) -> Vec<i64> {
        parse_group(text)
            .unwrap()
            .evaluate()
            .invariants()
            .iter()
            .map(|d| i64::try_from(d).unwrap())
            .collect()
    }

    #[test]
    fn examples() {
        assert_eq!(inv("Z/4 + Z/6 + Z"), vec![2, 12, 0]);
        assert_eq!(inv("Z"), vec![0]);
        assert_eq!(inv(" Z / 2 ^ 3+Z^2 "), vec![2, 2, 2, 0, 0]);
    }

    #[test]
    fn errors() {
        assert!(matches!(
            parse_group("Z/1"),
            Err(ParseError::Semantic { position: 2, .. })
        ));
        assert!(matches!(
            parse_group("Z^0"),
            Err(ParseError::Semantic { .. })
        ));
        assert!(matches!(
            parse_group("0 + Z"),
            Err(ParseError::Syntax { position: 2, .. })
        ));
        assert!(matches!(
            parse_group("Z/"),
            Err(ParseError::Syntax { position: 2, .. })
        ));
        assert!(matches!(
            parse_group("Z + "),
            Err(ParseError::Syntax { position: 4, .. })
        ));
        assert!(matches!(
            parse_group("Q"),
            Err(ParseError::Syntax { position: 0, .. })
        ));
        assert!(matches!(
            parse_group("Z Z"),
            Err(ParseError::Syntax { position: 2, .. })
        ));
        assert!(matches!(
            parse_group("Z/99999999999999999999999"),
            Err(ParseError::Semantic { .. })
        ));
        assert!(parse_group("").is_err());
    }

    #[test]
    fn canonical_round_trip() {
        for text in ["Z/2^2 + Z/4 + Z^3", "Z/6", "Z", "0"] {
            let g = parse_group(text).unwrap().evaluate();
            let c = GroupExpression::canonical(&g);
            assert_eq!(parse_group(&c.to_string()).unwrap(), c);
            assert_eq!(c.evaluate(), g);
        }
        assert_eq!(
            GroupExpression::canonical(&parse_group("Z/4 + Z/6").unwrap().evaluate()).to_string(),
            "Z/2 + Z/12"
        );
    }
}
