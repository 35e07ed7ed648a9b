//! Text syntax for monomial ideals.
//!
//! ```text
//! input    := ("vars" ":" name ("," name)* (";" | newline))? ideal
//! ideal    := monomial ("," monomial)*
//! monomial := factor ("*"? factor)*
//! factor   := var ("^" nat)?
//! var      := letter (letter | digit | "_")*  |  "x[" nat "," nat "]"
//! ```
//!
//! Whitespace is ignored. Without a list of variables, names are collected
//! in order of first appearance, except that an input made only of letters,
//! commas and spaces is read one letter per variable (`xy, yz`). When every
//! variable is a polar `x[i,j]`, the ring is the full polar layout
//! `x[1,1..a_1], x[2,1..a_2], ...`. With a list of variables, juxtaposed
//! names such as `xyz` are split greedily into known names.

use std::collections::BTreeMap;

use crate::decomposition::MonomialPrime;
use crate::error::{Error, Result};
use crate::ideal::{minimalize, MonomialIdeal};
use crate::monomial::Monomial;
use crate::polar::{PolarRing, PolarVariable};
use crate::ring::Ring;

fn err(position: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        position,
        message: message.into(),
    }
}

/// Parses an ideal, taking the ring from a `vars:` header if present.
pub fn parse_ideal(text: &str) -> Result<MonomialIdeal> {
    parse_ideal_with(text, None)
}

/// Parses an ideal over an explicit ring, which overrides any header.
pub fn parse_ideal_in(text: &str, ring: &Ring) -> Result<MonomialIdeal> {
    parse_ideal_with(text, Some(ring))
}

fn parse_ideal_with(text: &str, ring: Option<&Ring>) -> Result<MonomialIdeal> {
    let chars: Vec<char> = text.chars().collect();
    let (header, body_start) = split_header(&chars)?;
    let ring = match (ring, header) {
        (Some(r), _) => Some(r.clone()),
        (None, Some(names)) => Some(Ring::new(names)?),
        (None, None) => None,
    };
    let body = &chars[body_start..];
    let mode = match &ring {
        Some(r) => Mode::Known(r.clone()),
        None if body
            .iter()
            .all(|c| c.is_alphabetic() || c.is_whitespace() || *c == ',') =>
        {
            Mode::Compact
        }
        None => Mode::Free,
    };
    let mut parser = Parser {
        chars: body,
        offset: body_start,
        pos: 0,
        mode,
        names: Vec::new(),
    };
    let monomials = parser.ideal()?;
    let ring = match ring {
        Some(r) => r,
        None => parser.free_ring()?,
    };
    let gens = monomials.into_iter().map(|powers| {
        let mut exps = vec![0u32; ring.len()];
        for (name, e) in powers {
            exps[ring.index_of(&name).expect("name collected")] += e;
        }
        Monomial::from_exponents(exps)
    });
    minimalize(&ring, gens)
}

/// Reads `vars: a, b, c;` and returns the names and where the ideal starts.
fn split_header(chars: &[char]) -> Result<(Option<Vec<String>>, usize)> {
    let start = chars
        .iter()
        .position(|c| !c.is_whitespace())
        .unwrap_or(chars.len());
    let rest: String = chars[start..].iter().take(4).collect();
    if rest != "vars" {
        return Ok((None, 0));
    }
    let mut i = start + 4;
    while i < chars.len() && chars[i].is_whitespace() && chars[i] != '\n' {
        i += 1;
    }
    if chars.get(i) != Some(&':') {
        return Ok((None, 0));
    }
    i += 1;
    let end = chars[i..]
        .iter()
        .position(|&c| c == ';' || c == '\n')
        .map_or(chars.len(), |p| i + p);
    let mut names = Vec::new();
    for (offset, name) in split_names(&chars[i..end]) {
        if name.is_empty() {
            return Err(err(i + offset, "empty variable name in header"));
        }
        names.push(name);
    }
    Ok((Some(names), (end + 1).min(chars.len())))
}

/// Splits at commas outside brackets, so `x[1,2]` stays whole. Each name
/// comes with the offset of its piece; whitespace is dropped.
fn split_names(chars: &[char]) -> Vec<(usize, String)> {
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut start = 0;
    let mut name = String::new();
    for (k, &c) in chars.iter().enumerate() {
        match c {
            ',' if depth == 0 => {
                out.push((start, std::mem::take(&mut name)));
                start = k + 1;
                continue;
            }
            '[' => depth += 1,
            ']' => depth = depth.saturating_sub(1),
            _ => {}
        }
        if !c.is_whitespace() {
            name.push(c);
        }
    }
    out.push((start, name));
    out
}

enum Mode {
    Known(Ring),
    Compact,
    Free,
}

struct Parser<'a> {
    chars: &'a [char],
    offset: usize,
    pos: usize,
    mode: Mode,
    /// Names in order of first appearance.
    names: Vec<(String, usize)>,
}

type Powers = Vec<(String, u32)>;

impl Parser<'_> {
    fn position(&self) -> usize {
        self.offset + self.pos
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

    fn ideal(&mut self) -> Result<Vec<Powers>> {
        if self.peek().is_none() {
            return Err(err(self.position(), "empty ideal"));
        }
        let mut out = vec![self.monomial()?];
        while let Some(c) = self.peek() {
            if c != ',' {
                return Err(err(self.position(), format!("unexpected `{c}`")));
            }
            self.pos += 1;
            out.push(self.monomial()?);
        }
        Ok(out)
    }

    fn monomial(&mut self) -> Result<Powers> {
        let mut powers = Powers::new();
        loop {
            match self.peek() {
                Some(c) if c.is_ascii_digit() => {
                    let at = self.position();
                    let n = self.nat()?;
                    if n == 1 && powers.is_empty() {
                        return Err(err(at, "constant monomial"));
                    }
                    return Err(err(at, format!("expected a variable, found `{n}`")));
                }
                Some(c) if c.is_alphabetic() => powers.extend(self.factor()?),
                Some(c) => {
                    return Err(err(
                        self.position(),
                        format!("expected a variable, found `{c}`"),
                    ))
                }
                None => return Err(err(self.position(), "expected a variable")),
            }
            match self.peek() {
                Some('*') => self.pos += 1,
                Some(c) if c.is_alphabetic() => {}
                _ => return Ok(powers),
            }
        }
    }

    /// One variable token with its exponent; in compact or known mode a
    /// token may stand for several variables.
    fn factor(&mut self) -> Result<Powers> {
        let start = self.position();
        let token = self.token()?;
        let mut names = match &self.mode {
            Mode::Compact => token.chars().map(String::from).collect(),
            Mode::Known(ring) => split_known(ring, &token)
                .ok_or_else(|| err(start, format!("unknown variable `{token}`")))?,
            Mode::Free => vec![token],
        };
        let exp = if self.peek() == Some('^') {
            self.pos += 1;
            self.skip_ws();
            let at = self.position();
            let e = self.nat()?;
            if e == 0 {
                return Err(err(at, "exponent must be positive"));
            }
            u32::try_from(e).map_err(|_| err(at, "exponent too large"))?
        } else {
            1
        };
        for name in &names {
            if !self.names.iter().any(|(n, _)| n == name) {
                self.names.push((name.clone(), start));
            }
        }
        // the exponent binds to the last variable only
        let last = names.pop().expect("token is nonempty");
        let mut out: Powers = names.into_iter().map(|n| (n, 1)).collect();
        out.push((last, exp));
        Ok(out)
    }

    fn token(&mut self) -> Result<String> {
        self.skip_ws();
        let mut token = String::new();
        while let Some(&c) = self.chars.get(self.pos) {
            if c.is_alphanumeric() || c == '_' {
                token.push(c);
                self.pos += 1;
            } else {
                break;
            }
        }
        if self.chars.get(self.pos) == Some(&'[') {
            let at = self.position();
            let close = self.chars[self.pos..]
                .iter()
                .position(|&c| c == ']')
                .ok_or_else(|| err(at, "unclosed `[`"))?;
            let inner: String = self.chars[self.pos..=self.pos + close]
                .iter()
                .filter(|c| !c.is_whitespace())
                .collect();
            self.pos += close + 1;
            token.push_str(&inner);
            if PolarVariable::parse(&token).is_none() {
                return Err(err(at, format!("malformed polar variable `{token}`")));
            }
        }
        Ok(token)
    }

    fn nat(&mut self) -> Result<u64> {
        let at = self.position();
        let mut digits = String::new();
        while let Some(&c) = self.chars.get(self.pos) {
            if c.is_ascii_digit() {
                digits.push(c);
                self.pos += 1;
            } else {
                break;
            }
        }
        digits.parse().map_err(|_| err(at, "expected a number"))
    }

    fn free_ring(&self) -> Result<Ring> {
        let polar: Option<Vec<PolarVariable>> = self
            .names
            .iter()
            .map(|(n, _)| PolarVariable::parse(n))
            .collect();
        match polar {
            Some(vars) if !vars.is_empty() => {
                let mut slots: BTreeMap<usize, u32> = BTreeMap::new();
                for v in &vars {
                    let s = slots.entry(v.base).or_insert(1);
                    *s = (*s).max(v.slot);
                }
                let n = vars.iter().map(|v| v.base + 1).max().expect("nonempty");
                let layout = (0..n)
                    .map(|i| slots.get(&i).copied().unwrap_or(1))
                    .collect();
                Ok(PolarRing::new(&Ring::indexed("x", n), layout)?
                    .ring()
                    .clone())
            }
            _ => Ring::new(self.names.iter().map(|(n, _)| n.clone())),
        }
    }
}

/// Greedy longest-prefix split of `token` into names of `ring`.
fn split_known(ring: &Ring, token: &str) -> Option<Vec<String>> {
    if ring.index_of(token).is_some() {
        return Some(vec![token.to_string()]);
    }
    let mut out = Vec::new();
    let mut rest = token;
    while !rest.is_empty() {
        let name = ring
            .names()
            .iter()
            .filter(|n| rest.starts_with(n.as_str()))
            .max_by_key(|n| n.len())?;
        out.push(name.clone());
        rest = &rest[name.len()..];
    }
    Some(out)
}

/// Parses a list of variables such as `x1, x3` or `(x1, x3)` into a prime.
pub fn parse_prime(text: &str, ring: &Ring) -> Result<MonomialPrime> {
    let trimmed = text.trim();
    let inner = trimmed
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .unwrap_or(trimmed);
    let mut vars = Vec::new();
    let chars: Vec<char> = inner.chars().collect();
    for (offset, name) in split_names(&chars) {
        let names = if name.is_empty() {
            None
        } else {
            split_known(ring, &name)
        };
        let names = names.ok_or_else(|| err(offset, format!("unknown variable `{name}`")))?;
        vars.extend(names.iter().filter_map(|n| ring.index_of(n)));
    }
    MonomialPrime::new(ring, vars)
}

/// Parses a comma-separated list of names into a ring.
pub fn parse_ring(text: &str) -> Result<Ring> {
    let chars: Vec<char> = text.chars().collect();
    let pieces = split_names(&chars);
    if let Some((offset, _)) = pieces.iter().find(|(_, n)| n.is_empty()) {
        return Err(err(*offset, "empty variable name"));
    }
    Ring::new(pieces.into_iter().map(|(_, n)| n))
}

/// Canonical text with a ring header, read back by [`parse_ideal`].
pub fn format_ideal(ideal: &MonomialIdeal) -> String {
    format!("vars: {}; {}", ideal.ring().names().join(", "), ideal)
}
