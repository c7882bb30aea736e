//! Time arguments: plain numbers, named protocol times, or small
//! arithmetic expressions over `pi` and `sqrt`.

use std::f64::consts::{PI, SQRT_2};

use wellsim_core::experiments::{
    FOUR_WELL_HALF_TIME, FOUR_WELL_REVIVAL_TIME, HOM_TIME, THREE_WELL_HALF_TIME, THREE_WELL_REVIVAL_TIME,
};

pub const NAMED_TIMES: &[(&str, f64)] = &[
    ("hom", HOM_TIME),
    ("bell", HOM_TIME),
    ("three-half", THREE_WELL_HALF_TIME),
    ("three-revival", THREE_WELL_REVIVAL_TIME),
    ("four-half", FOUR_WELL_HALF_TIME),
    ("four-revival", FOUR_WELL_REVIVAL_TIME),
];

/// Parses `0.75`, `pi/4`, `hom`, `pi/(2*sqrt2)`, `3*pi/sqrt(2)`, …
pub fn parse_time(s: &str) -> Result<f64, String> {
    let s = s.trim();
    if let Some(&(_, t)) = NAMED_TIMES.iter().find(|(name, _)| *name == s) {
        return Ok(t);
    }
    let mut p = Parser {
        src: s.as_bytes(),
        pos: 0,
    };
    let v = p.sum()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(format!("unexpected `{}` in time `{s}`", &s[p.pos..]));
    }
    if !v.is_finite() {
        return Err(format!("time `{s}` is not finite"));
    }
    Ok(v)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, word: &str) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(word.as_bytes()) {
            self.pos += word.len();
            true
        } else {
            false
        }
    }

    fn sum(&mut self) -> Result<f64, String> {
        let mut v = self.product()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    v += self.product()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    v -= self.product()?;
                }
                _ => return Ok(v),
            }
        }
    }

    fn product(&mut self) -> Result<f64, String> {
        let mut v = self.unary()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    v *= self.unary()?;
                }
                Some(b'/') => {
                    self.pos += 1;
                    v /= self.unary()?;
                }
                _ => return Ok(v),
            }
        }
    }

    fn unary(&mut self) -> Result<f64, String> {
        if self.peek() == Some(b'-') {
            self.pos += 1;
            return Ok(-self.unary()?);
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<f64, String> {
        if self.eat("pi") {
            return Ok(PI);
        }
        if self.eat("sqrt2") {
            return Ok(SQRT_2);
        }
        if self.eat("sqrt(") {
            let v = self.sum()?;
            return self.close().map(|_| v.sqrt());
        }
        if self.eat("(") {
            let v = self.sum()?;
            return self.close().map(|_| v);
        }
        let start = self.pos;
        while self.pos < self.src.len()
            && (self.src[self.pos].is_ascii_digit() || matches!(self.src[self.pos], b'.' | b'e' | b'E'))
        {
            // allow exponent sign right after e/E
            self.pos += 1;
            if matches!(self.src[self.pos - 1], b'e' | b'E') && matches!(self.src.get(self.pos), Some(b'+' | b'-')) {
                self.pos += 1;
            }
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
        text.parse::<f64>().map_err(|_| {
            format!(
                "expected a number, `pi`, `sqrt2`, `sqrt(...)` or a protocol name at `{}`",
                String::from_utf8_lossy(&self.src[start..])
            )
        })
    }

    fn close(&mut self) -> Result<(), String> {
        if self.peek() == Some(b')') {
            self.pos += 1;
            Ok(())
        } else {
            Err("missing `)`".into())
        }
    }
}
