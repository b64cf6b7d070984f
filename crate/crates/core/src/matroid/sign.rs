use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Longest sign vector supported by the packed representation.
pub const MAX_SIGN_LENGTH: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Minus,
    Zero,
    Plus,
}

impl Sign {
    pub fn from_i8(x: i8) -> Self {
        match x.signum() {
            -1 => Sign::Minus,
            0 => Sign::Zero,
            _ => Sign::Plus,
        }
    }

    pub fn to_i8(self) -> i8 {
        match self {
            Sign::Minus => -1,
            Sign::Zero => 0,
            Sign::Plus => 1,
        }
    }

    pub fn neg(self) -> Self {
        Sign::from_i8(-self.to_i8())
    }

    pub fn mul(self, other: Sign) -> Self {
        Sign::from_i8(self.to_i8() * other.to_i8())
    }

    fn symbol(self) -> char {
        match self {
            Sign::Minus => '-',
            Sign::Zero => '0',
            Sign::Plus => '+',
        }
    }

    fn parse(c: char) -> Option<Self> {
        match c {
            '-' => Some(Sign::Minus),
            '0' => Some(Sign::Zero),
            '+' => Some(Sign::Plus),
            _ => None,
        }
    }
}

/// An element of `{-1, 0, +1}^m`, packed as a positive and a negative bitplane.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignVector {
    len: usize,
    plus: u64,
    minus: u64,
}

impl SignVector {
    pub fn zero(len: usize) -> Self {
        assert!(len <= MAX_SIGN_LENGTH, "sign vector longer than {MAX_SIGN_LENGTH}");
        Self { len, plus: 0, minus: 0 }
    }

    pub fn from_signs(signs: &[Sign]) -> Self {
        let mut s = Self::zero(signs.len());
        for (j, &x) in signs.iter().enumerate() {
            s.set(j, x);
        }
        s
    }

    pub fn from_i8s(values: &[i8]) -> Self {
        Self::from_signs(&values.iter().map(|&x| Sign::from_i8(x)).collect::<Vec<_>>())
    }

    pub(crate) fn from_planes(len: usize, plus: u64, minus: u64) -> Self {
        debug_assert_eq!(plus & minus, 0);
        Self { len, plus, minus }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn plus_mask(&self) -> u64 {
        self.plus
    }

    pub fn minus_mask(&self) -> u64 {
        self.minus
    }

    pub fn support(&self) -> u64 {
        self.plus | self.minus
    }

    pub fn is_zero(&self) -> bool {
        self.support() == 0
    }

    pub fn zero_count(&self) -> usize {
        self.len - self.support().count_ones() as usize
    }

    pub fn get(&self, j: usize) -> Sign {
        assert!(j < self.len);
        if self.plus >> j & 1 == 1 {
            Sign::Plus
        } else if self.minus >> j & 1 == 1 {
            Sign::Minus
        } else {
            Sign::Zero
        }
    }

    pub fn set(&mut self, j: usize, x: Sign) {
        assert!(j < self.len);
        let bit = 1u64 << j;
        self.plus &= !bit;
        self.minus &= !bit;
        match x {
            Sign::Plus => self.plus |= bit,
            Sign::Minus => self.minus |= bit,
            Sign::Zero => {}
        }
    }

    pub fn signs(&self) -> Vec<Sign> {
        (0..self.len).map(|j| self.get(j)).collect()
    }

    pub fn neg(&self) -> Self {
        Self { len: self.len, plus: self.minus, minus: self.plus }
    }

    /// Entry `j` of the twisted periodic extension, `s_{j+m} = (-1)^m s_j`.
    pub fn extended(&self, j: i64) -> Sign {
        let m = self.len as i64;
        let q = j.div_euclid(m);
        let r = j.rem_euclid(m) as usize;
        let x = self.get(r);
        if self.len % 2 == 1 && q.rem_euclid(2) == 1 {
            x.neg()
        } else {
            x
        }
    }

    /// Coordinatewise `s_j = 0 or s_j = t_j`.
    pub fn leq(&self, other: &Self) -> bool {
        self.len == other.len && self.plus & !other.plus == 0 && self.minus & !other.minus == 0
    }
}

impl fmt::Display for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.signs().into_iter().map(Sign::symbol).collect();
        f.write_str(&s)
    }
}

impl FromStr for SignVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let signs = s
            .chars()
            .map(|c| Sign::parse(c).ok_or_else(|| Error::Parse(format!("bad sign character {c:?} in {s:?}"))))
            .collect::<Result<Vec<_>>>()?;
        if signs.len() > MAX_SIGN_LENGTH {
            return Err(Error::Parse(format!("sign vector longer than {MAX_SIGN_LENGTH}")));
        }
        Ok(Self::from_signs(&signs))
    }
}

impl Serialize for SignVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for SignVector {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Coordinatewise partial order on sign vectors.
pub fn covector_leq(s: &SignVector, t: &SignVector) -> bool {
    s.leq(t)
}
