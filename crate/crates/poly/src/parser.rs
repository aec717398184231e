//! Parser for the polynomial text grammar used on the command line.
//!
//! Terms look like `th1^2 - th1*th2 + th2^2 + 0.05`. Variables are
//! `th1..thK` (one-based), exponents are `^` followed by an unsigned
//! integer, factors in a term are joined with `*`, and whitespace is
//! ignored everywhere.

use crate::{MultiIndex, PolyError, Polynomial};

/// Parse `text` into a polynomial over `num_vars` simplex coordinates.
pub fn parse_polynomial(text: &str, num_vars: usize) -> Result<Polynomial, PolyError> {
    let compact: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
    let mut parser = Parser {
        chars: compact,
        pos: 0,
        num_vars,
    };
    let poly = parser.expression()?;
    if parser.pos != parser.chars.len() {
        return Err(parser.error("trailing input"));
    }
    Ok(poly)
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
    num_vars: usize,
}

impl Parser {
    fn error(&self, message: impl Into<String>) -> PolyError {
        PolyError::Parse {
            position: self.pos,
            message: message.into(),
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, expected: char) -> bool {
        if self.peek() == Some(expected) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expression(&mut self) -> Result<Polynomial, PolyError> {
        let mut poly = Polynomial::new(self.num_vars);
        if self.chars.is_empty() {
            return Err(self.error("empty polynomial"));
        }
        let mut sign = 1.0;
        if self.eat('-') {
            sign = -1.0;
        } else {
            self.eat('+');
        }
        loop {
            let (coeff, exponents) = self.term()?;
            poly.add_term(exponents, sign * coeff);
            match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    sign = 1.0;
                }
                Some('-') => {
                    self.pos += 1;
                    sign = -1.0;
                }
                _ => break,
            }
        }
        Ok(poly)
    }

    fn term(&mut self) -> Result<(f64, MultiIndex), PolyError> {
        let mut coeff = 1.0;
        let mut exponents = vec![0u32; self.num_vars];
        loop {
            self.factor(&mut coeff, &mut exponents)?;
            if !self.eat('*') {
                break;
            }
        }
        Ok((coeff, MultiIndex::new(exponents)))
    }

    fn factor(&mut self, coeff: &mut f64, exponents: &mut [u32]) -> Result<(), PolyError> {
        match self.peek() {
            Some('t') => {
                let slot = self.variable()?;
                let power = if self.eat('^') { self.integer()? } else { 1 };
                exponents[slot] += power;
                Ok(())
            }
            Some(c) if c.is_ascii_digit() || c == '.' => {
                *coeff *= self.number()?;
                Ok(())
            }
            Some(c) => Err(self.error(format!("unexpected character '{c}'"))),
            None => Err(self.error("expected a factor")),
        }
    }

    fn variable(&mut self) -> Result<usize, PolyError> {
        if self.peek() != Some('t') || self.chars.get(self.pos + 1) != Some(&'h') {
            return Err(self.error("expected variable 'thN'"));
        }
        self.pos += 2;
        let index = self.integer()? as usize;
        if index == 0 || index > self.num_vars {
            return Err(self.error(format!(
                "variable th{index} out of range 1..={}",
                self.num_vars
            )));
        }
        Ok(index - 1)
    }

    fn integer(&mut self) -> Result<u32, PolyError> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        let text: String = self.chars[start..self.pos].iter().collect();
        text.parse()
            .map_err(|_| self.error(format!("invalid integer '{text}'")))
    }

    fn number(&mut self) -> Result<f64, PolyError> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit() || c == '.') {
            self.pos += 1;
        }
        // optional exponent suffix such as 1e-3
        if matches!(self.peek(), Some('e') | Some('E')) {
            let mark = self.pos;
            self.pos += 1;
            if matches!(self.peek(), Some('+') | Some('-')) {
                self.pos += 1;
            }
            let digits_start = self.pos;
            while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
                self.pos += 1;
            }
            if self.pos == digits_start {
                self.pos = mark;
            }
        }
        let text: String = self.chars[start..self.pos].iter().collect();
        text.parse()
            .map_err(|_| self.error(format!("invalid number '{text}'")))
    }
}
