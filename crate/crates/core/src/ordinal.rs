//! Ordinals below `w^w` in Cantor normal form.
//!
//! An [`Ordinal`] is a finite sum `w^{n_0}*k_0 + ... + w^{n_r}*k_r` with
//! strictly decreasing exponents and positive coefficients; the empty sum is
//! zero. The operations are exactly the ones the largeness calculus needs:
//! comparison, the restricted sum (defined only when the left operand's
//! exponents dominate the right's), the maximal coefficient, and the
//! fundamental-sequence step `a[m]`.
//!
//! Coefficients are semantically unbounded naturals; this realization uses
//! 64-bit coefficients with checked arithmetic and reports overflow instead
//! of wrapping. The step operation itself never overflows, since it only
//! decrements a coefficient or installs `m` as a fresh one.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// A single Cantor-normal-form term `w^exp * coeff`.
///
/// Term order (exponent first, then coefficient) together with the
/// lexicographic order on term sequences gives exactly the ordinal order, so
/// [`Ordinal`] can derive its comparison.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Term {
    /// Exponent of omega.
    pub exp: u32,
    /// Coefficient, at least 1 in canonical form.
    pub coeff: u64,
}

impl Term {
    pub fn new(exp: u32, coeff: u64) -> Self {
        Term { exp, coeff }
    }
}

/// An ordinal below `w^w` in Cantor normal form.
///
/// Serializes as its grammar string (`"w^2*3 + w + 4"`), so JSON output stays
/// readable and re-parses through [`parse_ordinal`].
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Ordinal {
    terms: Vec<Term>,
}

impl TryFrom<String> for Ordinal {
    type Error = OrdinalError;

    fn try_from(s: String) -> Result<Self, Self::Error> {
        parse_ordinal(&s)
    }
}

impl From<Ordinal> for String {
    fn from(o: Ordinal) -> String {
        o.to_string()
    }
}

/// Errors from parsing or combining ordinals.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrdinalError {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("number at byte {pos} overflows the 64-bit realization")]
    Overflow { pos: usize },
    #[error("exponent at byte {pos} exceeds the supported range")]
    ExponentRange { pos: usize },
    #[error("sum undefined: every exponent of the left operand must be >= every exponent of the right operand")]
    IncompatibleSum,
    #[error("coefficient overflow while merging terms")]
    CoeffOverflow,
}

impl Ordinal {
    /// The ordinal 0 (empty term list).
    pub fn zero() -> Self {
        Ordinal { terms: Vec::new() }
    }

    /// The finite ordinal `k`.
    pub fn nat(k: u64) -> Self {
        if k == 0 {
            Self::zero()
        } else {
            Ordinal { terms: vec![Term::new(0, k)] }
        }
    }

    /// The ordinal 1.
    pub fn one() -> Self {
        Self::nat(1)
    }

    /// The ordinal `w`.
    pub fn omega() -> Self {
        Self::power(1)
    }

    /// The ordinal `w^n`.
    pub fn power(n: u32) -> Self {
        Ordinal { terms: vec![Term::new(n, 1)] }
    }

    /// The ordinal `w^n * k` (zero when `k == 0`).
    pub fn power_times(n: u32, k: u64) -> Self {
        if k == 0 {
            Self::zero()
        } else {
            Ordinal { terms: vec![Term::new(n, k)] }
        }
    }

    /// Builds the canonical form from arbitrary terms: zero-coefficient terms
    /// are dropped, equal exponents are merged, exponents are sorted
    /// decreasingly. Merging can overflow the 64-bit coefficients.
    pub fn from_terms<I: IntoIterator<Item = Term>>(terms: I) -> Result<Self, OrdinalError> {
        let mut ts: Vec<Term> = terms.into_iter().filter(|t| t.coeff > 0).collect();
        ts.sort_by(|a, b| b.exp.cmp(&a.exp));
        let mut merged: Vec<Term> = Vec::with_capacity(ts.len());
        for t in ts {
            match merged.last_mut() {
                Some(last) if last.exp == t.exp => {
                    last.coeff = last
                        .coeff
                        .checked_add(t.coeff)
                        .ok_or(OrdinalError::CoeffOverflow)?;
                }
                _ => merged.push(t),
            }
        }
        Ok(Ordinal { terms: merged })
    }

    /// The terms in decreasing exponent order.
    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest exponent, if nonzero.
    pub fn leading_exp(&self) -> Option<u32> {
        self.terms.first().map(|t| t.exp)
    }

    /// Smallest exponent, if nonzero.
    pub fn trailing_exp(&self) -> Option<u32> {
        self.terms.last().map(|t| t.exp)
    }

    /// `Some(n)` when the ordinal is exactly `w^n`.
    pub fn as_power(&self) -> Option<u32> {
        match self.terms.as_slice() {
            [t] if t.coeff == 1 => Some(t.exp),
            _ => None,
        }
    }

    /// The maximal coefficient over all base-omega positions; 0 for zero.
    pub fn max_coeff(&self) -> u64 {
        self.terms.iter().map(|t| t.coeff).max().unwrap_or(0)
    }

    /// True when every exponent of `self` is >= every exponent of `rhs`, the
    /// only orientation in which [`Ordinal::sum`] is defined. Every ordinal
    /// admits 0 on the right; 0 admits only 0.
    pub fn can_sum(&self, rhs: &Ordinal) -> bool {
        match (self.terms.last(), rhs.terms.first()) {
            (_, None) => true,
            (None, Some(_)) => false,
            (Some(lo), Some(hi)) => lo.exp >= hi.exp,
        }
    }

    /// Sum of `self` and `rhs`, defined when `self.can_sum(rhs)`: the term
    /// lists are concatenated, merging one shared boundary exponent.
    pub fn sum(&self, rhs: &Ordinal) -> Result<Ordinal, OrdinalError> {
        if !self.can_sum(rhs) {
            return Err(OrdinalError::IncompatibleSum);
        }
        let mut terms = self.terms.clone();
        for t in &rhs.terms {
            match terms.last_mut() {
                Some(last) if last.exp == t.exp => {
                    last.coeff = last
                        .coeff
                        .checked_add(t.coeff)
                        .ok_or(OrdinalError::CoeffOverflow)?;
                }
                _ => terms.push(*t),
            }
        }
        Ok(Ordinal { terms })
    }

    /// The fundamental-sequence step `a[m]`: the predecessor for successors,
    /// `b + w^{n-1}*m` when `a = b + w^n`, and 0 for 0. The result is
    /// strictly below `a` whenever `a > 0`, and monotone in `m`.
    pub fn step(&self, m: u64) -> Ordinal {
        let mut r = self.clone();
        r.step_assign(m);
        r
    }

    /// Removes `count` from the trailing coefficient. Callers guarantee the
    /// trailing exponent is 0 and `count <= coeff`; used to fast-forward runs
    /// of successor steps when consuming consecutive integer intervals.
    pub(crate) fn shrink_trailing(&mut self, count: u64) {
        let last = self.terms.last_mut().expect("shrink_trailing on zero");
        debug_assert_eq!(last.exp, 0);
        debug_assert!(count <= last.coeff);
        if last.coeff == count {
            self.terms.pop();
        } else {
            last.coeff -= count;
        }
    }

    /// In-place [`Ordinal::step`].
    pub fn step_assign(&mut self, m: u64) {
        let Some(last) = self.terms.last_mut() else {
            return; // 0[m] = 0
        };
        let exp = last.exp;
        if last.coeff > 1 {
            last.coeff -= 1;
        } else {
            self.terms.pop();
        }
        // Successor terms just lose the 1; limit terms expand to m copies of
        // the next-lower power, with the m = 0 term dropped to stay canonical.
        if exp > 0 && m > 0 {
            self.terms.push(Term::new(exp - 1, m));
        }
    }
}

impl fmt::Display for Ordinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if t.exp == 0 {
                write!(f, "{}", t.coeff)?;
                continue;
            }
            f.write_str("w")?;
            if t.exp != 1 {
                write!(f, "^{}", t.exp)?;
            }
            if t.coeff != 1 {
                write!(f, "*{}", t.coeff)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Ordinal {
    // Debug output matches the grammar the parser accepts.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser { bytes: text.as_bytes(), pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let b = self.peek()?;
        self.pos += 1;
        Some(b)
    }

    fn nat(&mut self) -> Result<u64, OrdinalError> {
        self.skip_ws();
        let start = self.pos;
        let mut val: u64 = 0;
        let mut seen = false;
        while let Some(b @ b'0'..=b'9') = self.bytes.get(self.pos).copied() {
            seen = true;
            val = val
                .checked_mul(10)
                .and_then(|v| v.checked_add(u64::from(b - b'0')))
                .ok_or(OrdinalError::Overflow { pos: start })?;
            self.pos += 1;
        }
        if !seen {
            return Err(OrdinalError::Syntax { pos: self.pos, msg: "expected a number".into() });
        }
        Ok(val)
    }

    fn term(&mut self) -> Result<Term, OrdinalError> {
        match self.peek() {
            Some(b'w') => {
                self.bump();
                let exp = if self.peek() == Some(b'^') {
                    self.bump();
                    let pos = self.pos;
                    let e = self.nat()?;
                    u32::try_from(e).map_err(|_| OrdinalError::ExponentRange { pos })?
                } else {
                    1
                };
                let coeff = if self.peek() == Some(b'*') {
                    self.bump();
                    self.nat()?
                } else {
                    1
                };
                Ok(Term::new(exp, coeff))
            }
            Some(b'0'..=b'9') => Ok(Term::new(0, self.nat()?)),
            _ => Err(OrdinalError::Syntax {
                pos: self.pos,
                msg: "expected 'w' or a number".into(),
            }),
        }
    }

    fn expr(&mut self) -> Result<Ordinal, OrdinalError> {
        let mut terms = vec![self.term()?];
        while self.peek() == Some(b'+') {
            self.bump();
            terms.push(self.term()?);
        }
        if self.peek().is_some() {
            return Err(OrdinalError::Syntax {
                pos: self.pos,
                msg: "trailing input after ordinal expression".into(),
            });
        }
        Ordinal::from_terms(terms)
    }
}

/// Parses the ordinal grammar `expr := term ("+" term)*`,
/// `term := "w" ("^" NAT)? ("*" NAT)? | NAT`, whitespace ignored.
/// Non-canonical input (repeated or increasing exponents) is merged and
/// sorted into canonical form.
pub fn parse_ordinal(text: &str) -> Result<Ordinal, OrdinalError> {
    Parser::new(text).expr()
}

/// Every ordinal whose exponents are at most `max_exp` and whose
/// coefficients are at most `max_coeff`, in increasing order. Exhaustive
/// sweeps in the verification suites run over these grids.
pub fn enumerate_ordinals(max_exp: u32, max_coeff: u64) -> Vec<Ordinal> {
    let mut out: Vec<Vec<Term>> = vec![Vec::new()];
    for exp in (0..=max_exp).rev() {
        let mut next = Vec::with_capacity(out.len() * (max_coeff as usize + 1));
        for terms in &out {
            for c in 0..=max_coeff {
                let mut t = terms.clone();
                if c > 0 {
                    t.push(Term::new(exp, c));
                }
                next.push(t);
            }
        }
        out = next;
    }
    let mut ordinals: Vec<Ordinal> = out
        .into_iter()
        .map(|t| Ordinal::from_terms(t).expect("grid coefficients cannot overflow"))
        .collect();
    ordinals.sort();
    ordinals
}

impl FromStr for Ordinal {
    type Err = OrdinalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_ordinal(s)
    }
}
