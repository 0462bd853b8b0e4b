//! Sparse multivariate polynomials with exact integer coefficients over the
//! fixed variable set `{x, p, q, u, v, s, t, y, z}`, rational generating
//! functions, and their truncated expansion in `x`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::ser::{SerializeMap, SerializeSeq, SerializeStruct};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::PolyError;

pub const NVARS: usize = 9;

/// The symbolic variables. `x` marks length; the rest mark statistics.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Var {
    X,
    P,
    Q,
    U,
    V,
    S,
    T,
    Y,
    Z,
}

impl Var {
    pub const ALL: [Var; NVARS] = [Var::X, Var::P, Var::Q, Var::U, Var::V, Var::S, Var::T, Var::Y, Var::Z];

    /// Every variable except `x`.
    pub const MARKERS: [Var; 8] = [Var::P, Var::Q, Var::U, Var::V, Var::S, Var::T, Var::Y, Var::Z];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> char {
        match self {
            Var::X => 'x',
            Var::P => 'p',
            Var::Q => 'q',
            Var::U => 'u',
            Var::V => 'v',
            Var::S => 's',
            Var::T => 't',
            Var::Y => 'y',
            Var::Z => 'z',
        }
    }

    pub fn from_char(c: char) -> Option<Var> {
        Var::ALL.into_iter().find(|v| v.name() == c)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// Exponent vector indexed by [`Var::index`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(pub [u32; NVARS]);

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn from_powers(powers: &[(Var, u32)]) -> Self {
        let mut e = [0; NVARS];
        for &(v, k) in powers {
            e[v.index()] += k;
        }
        Self(e)
    }

    pub fn exp(&self, v: Var) -> u32 {
        self.0[v.index()]
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn mul(&self, other: &Self) -> Self {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0.iter()) {
            *a += b;
        }
        Self(e)
    }

    fn with(&self, v: Var, k: u32) -> Self {
        let mut e = self.0;
        e[v.index()] = k;
        Self(e)
    }

    /// Print order: lexicographic in `(x, p, q, u, v, s, t, y, z)`, larger
    /// exponents first.
    pub fn display_cmp(&self, other: &Self) -> Ordering {
        other.0.cmp(&self.0)
    }
}

/// `p^2 y`; the empty monomial prints as `1`.
impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for v in Var::ALL {
            let k = self.exp(v);
            if k == 0 {
                continue;
            }
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            if k == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{k}")?;
            }
        }
        Ok(())
    }
}

/// Sparse polynomial; zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Self::term(BigInt::from(c), Monomial::one())
    }

    pub fn var(v: Var) -> Self {
        Self::term(BigInt::one(), Monomial::from_powers(&[(v, 1)]))
    }

    pub fn term(coeff: BigInt, mono: Monomial) -> Self {
        let mut p = Self::zero();
        p.add_term(mono, coeff);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, BigInt)>) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    /// Parses a formula such as `1 + q^2 s^2 v x^2 - q s x (1 + v + p v x)`.
    /// Variables are single letters, so `xuvst` is a product of five.
    /// Juxtaposition is multiplication; `*` is accepted too.
    pub fn parse(src: &str) -> Result<Self, PolyError> {
        Parser::new(src).parse_all()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    /// Terms in print order.
    pub fn sorted_terms(&self) -> Vec<(&Monomial, &BigInt)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| a.0.display_cmp(b.0));
        v
    }

    pub fn coeff(&self, mono: &Monomial) -> BigInt {
        self.terms.get(mono).cloned().unwrap_or_default()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(&Monomial::one())
    }

    pub fn add_term(&mut self, mono: Monomial, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Highest exponent of `v`, 0 for the zero polynomial.
    pub fn degree(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m.exp(v)).max().unwrap_or(0)
    }

    pub fn uses(&self, v: Var) -> bool {
        self.terms.keys().any(|m| m.exp(v) > 0)
    }

    pub fn vars(&self) -> Vec<Var> {
        Var::ALL.into_iter().filter(|&v| self.uses(v)).collect()
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Sets `v := 1`, merging like terms.
    pub fn substitute_one(&self, v: Var) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, c)| (m.with(v, 0), c.clone())))
    }

    pub fn substitute_ones(&self, vars: &[Var]) -> Self {
        vars.iter().fold(self.clone(), |p, &v| p.substitute_one(v))
    }

    /// Renames variables: every occurrence of `v` becomes `map[v.index()]`.
    /// The map must be a bijection of the variable set.
    pub fn rename(&self, map: &[Var; NVARS]) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, c)| {
            let mut e = [0; NVARS];
            for v in Var::ALL {
                e[map[v.index()].index()] += m.exp(v);
            }
            (Monomial(e), c.clone())
        }))
    }

    /// Multiplies by `v^k`.
    pub fn shift(&self, v: Var, k: u32) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, c)| (m.with(v, m.exp(v) + k), c.clone())))
    }

    /// Splits by the exponent of `x`: slot `k` is the `x`-free coefficient
    /// of `x^k`.
    pub fn x_slices(&self) -> Vec<MultiPoly> {
        let deg = self.degree(Var::X) as usize;
        let mut out = vec![MultiPoly::zero(); if self.is_zero() { 0 } else { deg + 1 }];
        for (m, c) in &self.terms {
            out[m.exp(Var::X) as usize].terms.insert(m.with(Var::X, 0), c.clone());
        }
        out
    }

    /// Drops every term of `x`-degree above `n`.
    pub fn truncate_x(&self, n: u32) -> Self {
        Self {
            terms: self.terms.iter().filter(|(m, _)| m.exp(Var::X) <= n).map(|(m, c)| (*m, c.clone())).collect(),
        }
    }

    /// Evaluates at an integer point indexed by [`Var::index`].
    pub fn eval(&self, point: &[i64; NVARS]) -> BigInt {
        let mut total = BigInt::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for v in Var::ALL {
                let k = m.exp(v);
                if k > 0 {
                    t *= num_traits::pow(BigInt::from(point[v.index()]), k as usize);
                }
            }
            total += t;
        }
        total
    }

    /// Sum of the coefficients (every variable set to 1).
    pub fn eval_ones(&self) -> BigInt {
        self.terms.values().sum()
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.sorted_terms().into_iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag} {m}")?;
            }
        }
        Ok(())
    }
}

impl AddAssign<&MultiPoly> for MultiPoly {
    fn add_assign(&mut self, rhs: &MultiPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl Add<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;

    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for MultiPoly {
    type Output = MultiPoly;

    fn add(mut self, rhs: MultiPoly) -> MultiPoly {
        self += &rhs;
        self
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;

    fn neg(self) -> MultiPoly {
        MultiPoly { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;

    fn neg(self) -> MultiPoly {
        -&self
    }
}

impl Sub<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;

    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c);
        }
        out
    }
}

impl Sub for MultiPoly {
    type Output = MultiPoly;

    fn sub(self, rhs: MultiPoly) -> MultiPoly {
        &self - &rhs
    }
}

impl Mul<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;

    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Mul for MultiPoly {
    type Output = MultiPoly;

    fn mul(self, rhs: MultiPoly) -> MultiPoly {
        &self * &rhs
    }
}

struct Exponents<'a>(&'a Monomial);

impl Serialize for Exponents<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let nonzero: Vec<Var> = Var::ALL.into_iter().filter(|&v| self.0.exp(v) > 0).collect();
        let mut map = serializer.serialize_map(Some(nonzero.len()))?;
        for v in nonzero {
            map.serialize_entry(&v.name().to_string(), &self.0.exp(v))?;
        }
        map.end()
    }
}

struct TermRef<'a>(&'a Monomial, &'a BigInt);

impl Serialize for TermRef<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("Term", 2)?;
        st.serialize_field("exponents", &Exponents(self.0))?;
        st.serialize_field("coeff", &self.1.to_string())?;
        st.end()
    }
}

/// A list of `{exponents: {var: int}, coeff: "decimal"}` in print order.
impl Serialize for MultiPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let terms = self.sorted_terms();
        let mut seq = serializer.serialize_seq(Some(terms.len()))?;
        for (m, c) in terms {
            seq.serialize_element(&TermRef(m, c))?;
        }
        seq.end()
    }
}

#[derive(Deserialize)]
struct TermRepr {
    exponents: BTreeMap<String, u32>,
    coeff: String,
}

impl<'de> Deserialize<'de> for MultiPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = Vec::<TermRepr>::deserialize(deserializer)?;
        let mut out = MultiPoly::zero();
        for t in raw {
            let mut e = [0; NVARS];
            for (name, k) in t.exponents {
                let mut chars = name.chars();
                let v = match (chars.next(), chars.next()) {
                    (Some(c), None) => Var::from_char(c),
                    _ => None,
                }
                .ok_or_else(|| D::Error::custom(format!("unknown variable {name:?}")))?;
                e[v.index()] = k;
            }
            let c: BigInt = t.coeff.parse().map_err(|_| D::Error::custom(format!("bad coefficient {:?}", t.coeff)))?;
            out.add_term(Monomial(e), c);
        }
        Ok(out)
    }
}

/// `num / den` with `den ≡ 1 (mod x)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RationalGF {
    pub num: MultiPoly,
    pub den: MultiPoly,
    pub vars: Vec<Var>,
}

impl RationalGF {
    pub fn new(num: MultiPoly, den: MultiPoly) -> Self {
        let vars = Var::ALL.into_iter().filter(|&v| num.uses(v) || den.uses(v)).collect();
        Self { num, den, vars }
    }

    pub fn parse(num: &str, den: &str) -> Result<Self, PolyError> {
        Ok(Self::new(MultiPoly::parse(num)?, MultiPoly::parse(den)?))
    }

    /// The `x`-free part of the denominator must be exactly 1.
    pub fn check_denominator(&self) -> Result<(), PolyError> {
        let d0 = self.den.x_slices().into_iter().next().unwrap_or_default();
        if d0 == MultiPoly::one() {
            Ok(())
        } else {
            Err(PolyError::DenominatorNotUnit(d0.to_string()))
        }
    }

    pub fn substitute_ones(&self, vars: &[Var]) -> Self {
        Self::new(self.num.substitute_ones(vars), self.den.substitute_ones(vars))
    }

    pub fn rename(&self, map: &[Var; NVARS]) -> Self {
        Self::new(self.num.rename(map), self.den.rename(map))
    }

    pub fn expand(&self, n_max: usize) -> Result<SeriesTable, PolyError> {
        expand(self, n_max)
    }
}

/// Coefficients of `x^0 … x^{n_max}`, each free of `x`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesTable {
    pub n_max: usize,
    pub coeffs: Vec<MultiPoly>,
}

impl SeriesTable {
    pub fn coeff(&self, n: usize) -> &MultiPoly {
        &self.coeffs[n]
    }

    /// Reassembles `Σ coeffs[k] x^k`.
    pub fn to_poly(&self) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (k, c) in self.coeffs.iter().enumerate() {
            out += &c.shift(Var::X, k as u32);
        }
        out
    }
}

/// Expands `gf` to order `n_max` in `x` by the convolution recurrence
/// `c_k = num_k − Σ_{j=1..k} den_j · c_{k−j}`.
pub fn expand(gf: &RationalGF, n_max: usize) -> Result<SeriesTable, PolyError> {
    gf.check_denominator()?;
    let num = gf.num.x_slices();
    let den = gf.den.x_slices();
    let mut coeffs: Vec<MultiPoly> = Vec::with_capacity(n_max + 1);
    for k in 0..=n_max {
        let mut c = num.get(k).cloned().unwrap_or_default();
        for j in 1..=k.min(den.len().saturating_sub(1)) {
            if den[j].is_zero() {
                continue;
            }
            let prod = &den[j] * &coeffs[k - j];
            c = &c - &prod;
        }
        coeffs.push(c);
    }
    Ok(SeriesTable { n_max, coeffs })
}

#[derive(Clone, Copy, Debug, PartialEq)]
enum Tok {
    Num(u64),
    Var(Var),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    err: Option<PolyError>,
    len: usize,
}

impl Parser {
    fn new(src: &str) -> Self {
        let mut toks = Vec::new();
        let mut err = None;
        let mut chars = src.char_indices().peekable();
        while let Some((i, c)) = chars.next() {
            let tok = match c {
                c if c.is_whitespace() => continue,
                '+' => Tok::Plus,
                '-' | '\u{2212}' => Tok::Minus,
                '*' | '\u{00b7}' => Tok::Star,
                '^' => Tok::Caret,
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                c if c.is_ascii_digit() => {
                    let mut n = c.to_digit(10).unwrap() as u64;
                    while let Some(&(_, d)) = chars.peek() {
                        match d.to_digit(10) {
                            Some(k) => {
                                n = n * 10 + k as u64;
                                chars.next();
                            }
                            None => break,
                        }
                    }
                    Tok::Num(n)
                }
                c => match Var::from_char(c) {
                    Some(v) => Tok::Var(v),
                    None => {
                        err.get_or_insert(PolyError::Parse { pos: i, msg: format!("unexpected {c:?}") });
                        continue;
                    }
                },
            };
            toks.push((i, tok));
        }
        Self { toks, pos: 0, err, len: src.len() }
    }

    fn peek(&self) -> Option<Tok> {
        self.toks.get(self.pos).map(|t| t.1)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.len, |t| t.0)
    }

    fn fail<T>(&self, msg: &str) -> Result<T, PolyError> {
        Err(PolyError::Parse { pos: self.offset(), msg: msg.to_string() })
    }

    fn parse_all(mut self) -> Result<MultiPoly, PolyError> {
        if let Some(e) = self.err.take() {
            return Err(e);
        }
        let p = self.expr()?;
        if self.pos != self.toks.len() {
            return self.fail("trailing input");
        }
        Ok(p)
    }

    fn expr(&mut self) -> Result<MultiPoly, PolyError> {
        let mut acc = MultiPoly::zero();
        let mut sign = match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                -1
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                1
            }
            _ => 1,
        };
        loop {
            let t = self.term()?;
            acc = if sign < 0 { &acc - &t } else { &acc + &t };
            match self.peek() {
                Some(Tok::Plus) => sign = 1,
                Some(Tok::Minus) => sign = -1,
                _ => return Ok(acc),
            }
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<MultiPoly, PolyError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                }
                Some(Tok::Num(_) | Tok::Var(_) | Tok::LParen) => {}
                _ => return Ok(acc),
            }
            let f = self.factor()?;
            acc = &acc * &f;
        }
    }

    fn factor(&mut self) -> Result<MultiPoly, PolyError> {
        let base = match self.peek() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                MultiPoly::term(BigInt::from(n), Monomial::one())
            }
            Some(Tok::Var(v)) => {
                self.pos += 1;
                MultiPoly::var(v)
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(Tok::RParen) {
                    return self.fail("expected ')'");
                }
                self.pos += 1;
                inner
            }
            _ => return self.fail("expected a number, variable or '('"),
        };
        if self.peek() == Some(Tok::Caret) {
            self.pos += 1;
            match self.peek() {
                Some(Tok::Num(k)) => {
                    self.pos += 1;
                    let k = u32::try_from(k).or_else(|_| self.fail("exponent too large"))?;
                    return Ok(base.pow(k));
                }
                _ => return self.fail("expected an exponent"),
            }
        }
        Ok(base)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(s: &str) -> MultiPoly {
        MultiPoly::parse(s).unwrap()
    }

    #[test]
    fn ring_examples() {
        assert_eq!(&poly("1 + x") * &poly("1 - x"), poly("1 - x^2"));
        let a = poly("3 p q^2 - 7 x y + 2");
        assert!((&a + &(-&a)).is_zero());
        assert_eq!(&poly("1 - q x") * &poly("1 - x - q x"), poly("1 - x - 2 q x + q x^2 + q^2 x^2"));
    }

    #[test]
    fn parser_forms() {
        assert_eq!(poly("xuvst"), poly("x u v s t"));
        assert_eq!(poly("2*p*q"), poly("2 p q"));
        assert_eq!(poly("(-1 + t)(-1 + u)"), poly("1 - t - u + t u"));
        assert_eq!(poly("(1 - p x)^3"), &(&poly("1 - p x") * &poly("1 - p x")) * &poly("1 - p x"));
        assert_eq!(poly("− x"), -poly("x"));
        assert!(MultiPoly::parse("1 + w").is_err());
        assert!(MultiPoly::parse("(1 + x").is_err());
        assert!(MultiPoly::parse("1 + ").is_err());
        assert!(MultiPoly::parse("x^").is_err());
    }

    #[test]
    fn substitution() {
        let a = poly("p^2 y + 2 p q y z + q^2 z");
        assert_eq!(a.substitute_ones(&[Var::Y, Var::Z]), poly("p^2 + 2 p q + q^2"));
        assert_eq!(a.substitute_one(Var::U), a);
        assert_eq!(poly("x p").substitute_one(Var::P), poly("x"));
    }

    #[test]
    fn display_order() {
        assert_eq!(poly("q^2 z + 2 p q y z + p^2 y").to_string(), "p^2 y + 2 p q y z + q^2 z");
        assert_eq!(poly("1 - x^2").to_string(), "-x^2 + 1");
        assert_eq!(MultiPoly::zero().to_string(), "0");
        assert_eq!(poly("-3").to_string(), "-3");
    }

    #[test]
    fn json_shape() {
        let a = poly("2 p^2 y - 1");
        let v = serde_json::to_value(&a).unwrap();
        assert_eq!(v, serde_json::json!([
            {"exponents": {"p": 2, "y": 1}, "coeff": "2"},
            {"exponents": {}, "coeff": "-1"}
        ]));
        let back: MultiPoly = serde_json::from_value(v).unwrap();
        assert_eq!(back, a);
    }

    #[test]
    fn expansion_examples() {
        let geo = RationalGF::parse("1", "1 - x").unwrap().expand(3).unwrap();
        assert_eq!(geo.coeffs, vec![MultiPoly::one(); 4]);

        // x^n coefficient is Σ q^des over S_n(231,312).
        let des = RationalGF::parse("1 - q x", "1 - x - q x").unwrap().expand(3).unwrap();
        let want: Vec<_> = ["1", "1", "1 + q", "1 + 2 q + q^2"].iter().map(|s| poly(s)).collect();
        assert_eq!(des.coeffs, want);
    }

    #[test]
    fn rejects_non_unit_denominator() {
        let gf = RationalGF::parse("1", "2 - x").unwrap();
        assert!(matches!(gf.expand(2), Err(PolyError::DenominatorNotUnit(_))));
        let gf = RationalGF::parse("1", "1 + p - x").unwrap();
        assert!(gf.expand(2).is_err());
    }

    #[test]
    fn slices_round_trip() {
        let a = poly("1 + x p + 3 x^3 q^2 - x^3");
        let s = a.x_slices();
        assert_eq!(s.len(), 4);
        assert!(s[2].is_zero());
        assert_eq!(s[3], poly("3 q^2 - 1"));
        let table = SeriesTable { n_max: 3, coeffs: s };
        assert_eq!(table.to_poly(), a);
    }
}
