//! Leg colours `1±, …, g±`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::DiagramError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

/// A colour `i±`. Ordered by [`Label::code`]: `1+ < 1- < 2+ < 2- < …`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Label {
    index: u16,
    sign: Sign,
}

impl Label {
    pub fn new(index: u16, sign: Sign) -> Self {
        assert!(index >= 1, "label indices start at 1");
        Label { index, sign }
    }

    pub fn plus(index: u16) -> Self {
        Label::new(index, Sign::Plus)
    }

    pub fn minus(index: u16) -> Self {
        Label::new(index, Sign::Minus)
    }

    pub fn from_code(code: u16) -> Self {
        Label::new(code / 2 + 1, if code % 2 == 0 { Sign::Plus } else { Sign::Minus })
    }

    pub fn index(self) -> u16 {
        self.index
    }

    pub fn sign(self) -> Sign {
        self.sign
    }

    pub fn is_plus(self) -> bool {
        self.sign == Sign::Plus
    }

    /// Dense code `2(i−1) + [minus]`.
    pub fn code(self) -> u16 {
        (self.index - 1) * 2 + u16::from(self.sign == Sign::Minus)
    }

    /// The dual label `(i±)* = i∓`.
    pub fn star(self) -> Self {
        let sign = match self.sign {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        };
        Label { index: self.index, sign }
    }

    pub fn check_genus(self, genus: u16) -> Result<(), DiagramError> {
        if self.index > genus {
            Err(DiagramError::LabelOutOfRange { index: self.index, genus })
        } else {
            Ok(())
        }
    }

    /// All `2g` labels in code order.
    pub fn all(genus: u16) -> Vec<Label> {
        (0..2 * genus).map(Label::from_code).collect()
    }
}

impl PartialOrd for Label {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Label {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.code().cmp(&other.code())
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = if self.sign == Sign::Plus { '+' } else { '-' };
        write!(f, "{}{}", self.index, s)
    }
}

impl FromStr for Label {
    type Err = DiagramError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || DiagramError::UnknownLabel(s.to_string());
        let (num, sign) = match s.chars().last() {
            Some('+') => (&s[..s.len() - 1], Sign::Plus),
            Some('-') => (&s[..s.len() - 1], Sign::Minus),
            _ => return Err(bad()),
        };
        let index: u16 = num.parse().map_err(|_| bad())?;
        if index == 0 {
            return Err(bad());
        }
        Ok(Label::new(index, sign))
    }
}
