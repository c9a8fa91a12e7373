//! Elements of the tower ℚ ⊂ ℚ(i) ⊂ ℚ(√d)(i).
//!
//! A scalar is stored as `p + q·w` with `w = √d` and `p`, `q` Gaussian
//! rationals. Values that do not use `w` carry `d = 0` and combine freely with
//! any tower; two values using different radicands cannot be combined.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use super::field::Field;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
struct Gauss {
    re: BigRational,
    im: BigRational,
}

impl Gauss {
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    fn add(&self, o: &Gauss) -> Gauss {
        Gauss { re: &self.re + &o.re, im: &self.im + &o.im }
    }

    fn sub(&self, o: &Gauss) -> Gauss {
        Gauss { re: &self.re - &o.re, im: &self.im - &o.im }
    }

    fn neg(&self) -> Gauss {
        Gauss { re: -&self.re, im: -&self.im }
    }

    fn mul(&self, o: &Gauss) -> Gauss {
        if self.is_zero() || o.is_zero() {
            return Gauss::default();
        }
        if self.im.is_zero() && o.im.is_zero() {
            return Gauss { re: &self.re * &o.re, im: BigRational::zero() };
        }
        Gauss {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }

    fn scale(&self, k: &BigRational) -> Gauss {
        Gauss { re: &self.re * k, im: &self.im * k }
    }

    fn inv(&self) -> Gauss {
        let n = &self.re * &self.re + &self.im * &self.im;
        Gauss { re: &self.re / &n, im: -&self.im / &n }
    }
}

/// Exact scalar `a + b·i + c·√d + e·√d·i` with rational coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Scalar {
    p: Gauss,
    q: Gauss,
    d: u32,
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic order on coordinates. Only used to make canonical forms
/// reproducible; it is not compatible with the field operations.
impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coords().cmp(&other.coords()).then(self.d.cmp(&other.d))
    }
}

impl Scalar {
    pub fn from_rational(r: BigRational) -> Self {
        Scalar { p: Gauss { re: r, im: BigRational::zero() }, q: Gauss::default(), d: 0 }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_frac(n: i64, m: i64) -> Self {
        Self::from_rational(BigRational::new(BigInt::from(n), BigInt::from(m)))
    }

    /// `re + im·i`
    pub fn gaussian(re: BigRational, im: BigRational) -> Self {
        Scalar { p: Gauss { re, im }, q: Gauss::default(), d: 0 }
    }

    pub fn i() -> Self {
        Self::gaussian(BigRational::zero(), BigRational::one())
    }

    /// The real radical `√d`. `d` must be square-free and greater than one.
    pub fn sqrt(d: u32) -> Self {
        assert!(is_valid_radicand(d), "radicand {d} is not square-free > 1");
        Scalar {
            p: Gauss::default(),
            q: Gauss { re: BigRational::one(), im: BigRational::zero() },
            d,
        }
    }

    /// Builds `c0 + c1·i + (c2 + c3·i)·√d` and normalizes the tower tag.
    pub fn from_coords(coords: [BigRational; 4], d: u32) -> Self {
        let [a, b, c, e] = coords;
        let mut s = Scalar { p: Gauss { re: a, im: b }, q: Gauss { re: c, im: e }, d };
        s.normalize();
        s
    }

    fn normalize(&mut self) {
        if self.q.is_zero() {
            self.d = 0;
        } else {
            assert!(self.d > 1, "radical part present without a radicand");
        }
    }

    /// Coordinates over the basis `{1, i, √d, √d·i}`.
    pub fn coords(&self) -> [BigRational; 4] {
        [self.p.re.clone(), self.p.im.clone(), self.q.re.clone(), self.q.im.clone()]
    }

    /// Radicand in use, `None` for elements of ℚ(i).
    pub fn radicand(&self) -> Option<u32> {
        (self.d > 1).then_some(self.d)
    }

    pub fn is_rational(&self) -> bool {
        self.p.im.is_zero() && self.q.is_zero()
    }

    pub fn to_rational(&self) -> Option<BigRational> {
        self.is_rational().then(|| self.p.re.clone())
    }

    /// Real part with respect to the real structure where `i` is imaginary and `√d` real.
    pub fn re(&self) -> Scalar {
        let mut s = Scalar {
            p: Gauss { re: self.p.re.clone(), im: BigRational::zero() },
            q: Gauss { re: self.q.re.clone(), im: BigRational::zero() },
            d: self.d,
        };
        s.normalize();
        s
    }

    pub fn im(&self) -> Scalar {
        let mut s = Scalar {
            p: Gauss { re: self.p.im.clone(), im: BigRational::zero() },
            q: Gauss { re: self.q.im.clone(), im: BigRational::zero() },
            d: self.d,
        };
        s.normalize();
        s
    }

    pub fn is_real(&self) -> bool {
        self.p.im.is_zero() && self.q.im.is_zero()
    }

    pub fn scale_rational(&self, k: &BigRational) -> Scalar {
        if k.is_zero() {
            return Scalar::zero();
        }
        Scalar { p: self.p.scale(k), q: self.q.scale(k), d: self.d }
    }

    pub fn scale_int(&self, k: i64) -> Scalar {
        match k {
            0 => Scalar::zero(),
            1 => self.clone(),
            -1 => -self.clone(),
            _ => self.scale_rational(&BigRational::from_integer(BigInt::from(k))),
        }
    }

    /// Complex value as `(re, im)` floating-point pair.
    pub fn to_f64_pair(&self) -> (f64, f64) {
        use num_traits::ToPrimitive;
        let w = (self.d as f64).sqrt();
        let f = |r: &BigRational| r.to_f64().unwrap_or(f64::NAN);
        (f(&self.p.re) + w * f(&self.q.re), f(&self.p.im) + w * f(&self.q.im))
    }

    /// Integer power; negative exponents invert.
    pub fn powi(&self, e: i64) -> Scalar {
        let base = if e < 0 { self.inv().expect("zero to a negative power") } else { self.clone() };
        let mut acc = Scalar::one();
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul_ref(&base);
        }
        acc
    }

    fn join_d(a: u32, b: u32) -> u32 {
        match (a, b) {
            (0, x) | (x, 0) => x,
            (x, y) if x == y => x,
            (x, y) => panic!("mixed-field operation: √{x} and √{y} in one expression"),
        }
    }
}

pub(crate) fn is_valid_radicand(d: u32) -> bool {
    if d < 2 {
        return false;
    }
    let mut k = 2u32;
    while k * k <= d {
        if d.is_multiple_of(k * k) {
            return false;
        }
        k += 1;
    }
    true
}

impl Zero for Scalar {
    fn zero() -> Self {
        Scalar::default()
    }

    fn is_zero(&self) -> bool {
        self.p.is_zero() && self.q.is_zero()
    }
}

impl One for Scalar {
    fn one() -> Self {
        Scalar::from_int(1)
    }
}

impl Neg for Scalar {
    type Output = Scalar;

    fn neg(self) -> Scalar {
        Scalar { p: self.p.neg(), q: self.q.neg(), d: self.d }
    }
}

impl Add for Scalar {
    type Output = Scalar;

    fn add(self, rhs: Scalar) -> Scalar {
        self.add_ref(&rhs)
    }
}

impl Sub for Scalar {
    type Output = Scalar;

    fn sub(self, rhs: Scalar) -> Scalar {
        let d = Scalar::join_d(self.d, rhs.d);
        let mut s = Scalar { p: self.p.sub(&rhs.p), q: self.q.sub(&rhs.q), d };
        s.normalize_after_op();
        s
    }
}

impl Mul for Scalar {
    type Output = Scalar;

    fn mul(self, rhs: Scalar) -> Scalar {
        self.mul_ref(&rhs)
    }
}

impl Div for Scalar {
    type Output = Scalar;

    fn div(self, rhs: Scalar) -> Scalar {
        self.mul_ref(&rhs.inv().expect("division by zero"))
    }
}

impl AddAssign for Scalar {
    fn add_assign(&mut self, rhs: Scalar) {
        *self = self.add_ref(&rhs);
    }
}

impl SubAssign for Scalar {
    fn sub_assign(&mut self, rhs: Scalar) {
        *self = std::mem::take(self) - rhs;
    }
}

impl Scalar {
    fn normalize_after_op(&mut self) {
        if self.q.is_zero() {
            self.d = 0;
        }
    }
}

impl Field for Scalar {
    fn mul_ref(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Scalar::zero();
        }
        if self.q.is_zero() && rhs.q.is_zero() {
            return Scalar { p: self.p.mul(&rhs.p), q: Gauss::default(), d: 0 };
        }
        let d = Scalar::join_d(self.d, rhs.d);
        let dq = BigRational::from_integer(BigInt::from(d));
        // (p + q w)(p' + q' w) = (pp' + d qq') + (pq' + qp') w
        let p = self.p.mul(&rhs.p).add(&self.q.mul(&rhs.q).scale(&dq));
        let q = self.p.mul(&rhs.q).add(&self.q.mul(&rhs.p));
        let mut s = Scalar { p, q, d };
        s.normalize_after_op();
        s
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        let d = Scalar::join_d(self.d, rhs.d);
        let mut s = Scalar { p: self.p.add(&rhs.p), q: self.q.add(&rhs.q), d };
        s.normalize_after_op();
        s
    }

    fn sub_mul_assign(&mut self, a: &Self, b: &Self) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        let prod = a.mul_ref(b);
        *self = std::mem::take(self) - prod;
    }

    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if self.q.is_zero() {
            return Some(Scalar { p: self.p.inv(), q: Gauss::default(), d: 0 });
        }
        // x = p + q w, x (p - q w) = p^2 - d q^2 ∈ ℚ(i), nonzero since √d ∉ ℚ(i)
        let dq = BigRational::from_integer(BigInt::from(self.d));
        let norm = self.p.mul(&self.p).sub(&self.q.mul(&self.q).scale(&dq));
        let ninv = norm.inv();
        let mut s = Scalar { p: self.p.mul(&ninv), q: self.q.neg().mul(&ninv), d: self.d };
        s.normalize_after_op();
        Some(s)
    }

    fn to_rational(&self) -> Option<BigRational> {
        Scalar::to_rational(self)
    }
}

impl From<BigRational> for Scalar {
    fn from(r: BigRational) -> Self {
        Scalar::from_rational(r)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

fn fmt_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Serialization: `"p/q"`, `"p/q+r/s*i"`, `"1/2+3/4*w*i"`; `w` stands for `√d`.
impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = [
            (&self.p.re, ""),
            (&self.p.im, "*i"),
            (&self.q.re, "*w"),
            (&self.q.im, "*w*i"),
        ];
        let mut out = String::new();
        for (c, suffix) in terms {
            if c.is_zero() {
                continue;
            }
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push(if c.is_negative() { '-' } else { '+' });
            }
            out.push_str(&fmt_rational(&c.abs()));
            out.push_str(suffix);
        }
        if out.is_empty() {
            out.push('0');
        }
        f.write_str(&out)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ScalarParseError {
    #[error("empty scalar literal")]
    Empty,
    #[error("malformed scalar literal `{0}`")]
    Malformed(String),
    #[error("literal `{0}` uses w but no radicand d was declared")]
    UndeclaredRadical(String),
    #[error("radicand {0} must be a square-free integer greater than 1")]
    BadRadicand(u32),
}

/// Field tower declared once per document/session.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct FieldSpec {
    pub d: Option<u32>,
}

impl FieldSpec {
    pub fn gaussian() -> Self {
        FieldSpec { d: None }
    }

    pub fn with_radical(d: u32) -> Result<Self, ScalarParseError> {
        if is_valid_radicand(d) {
            Ok(FieldSpec { d: Some(d) })
        } else {
            Err(ScalarParseError::BadRadicand(d))
        }
    }

    /// True when `s` lives in this tower.
    pub fn admits(&self, s: &Scalar) -> bool {
        match s.radicand() {
            None => true,
            Some(d) => self.d == Some(d),
        }
    }

    pub fn parse(&self, text: &str) -> Result<Scalar, ScalarParseError> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(ScalarParseError::Empty);
        }
        let bad = || ScalarParseError::Malformed(text.to_string());
        let chars: Vec<char> = compact.chars().collect();
        let mut terms: Vec<String> = Vec::new();
        let mut cur = String::new();
        for (k, &c) in chars.iter().enumerate() {
            let split = (c == '+' || c == '-') && k > 0 && !matches!(chars[k - 1], '/' | '*');
            if split {
                terms.push(std::mem::take(&mut cur));
            }
            cur.push(c);
        }
        terms.push(cur);

        let mut coords: [BigRational; 4] = Default::default();
        for term in terms {
            let (neg, body) = match term.strip_prefix('-') {
                Some(rest) => (true, rest),
                None => (false, term.strip_prefix('+').unwrap_or(&term)),
            };
            if body.is_empty() {
                return Err(bad());
            }
            let mut coef: Option<BigRational> = None;
            let (mut has_i, mut has_w) = (false, false);
            for factor in body.split('*') {
                match factor {
                    "i" if !has_i => has_i = true,
                    "w" if !has_w => has_w = true,
                    lit if coef.is_none() => coef = Some(parse_rational(lit).ok_or_else(bad)?),
                    _ => return Err(bad()),
                }
            }
            if has_w && self.d.is_none() {
                return Err(ScalarParseError::UndeclaredRadical(text.to_string()));
            }
            let mut c = coef.unwrap_or_else(BigRational::one);
            if neg {
                c = -c;
            }
            let slot = usize::from(has_i) + 2 * usize::from(has_w);
            coords[slot] += c;
        }
        Ok(Scalar::from_coords(coords, self.d.unwrap_or(0)))
    }
}

fn parse_rational(lit: &str) -> Option<BigRational> {
    let (n, d) = match lit.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (lit, None),
    };
    let n = BigInt::from_str(n).ok()?;
    let d = match d {
        Some(d) => BigInt::from_str(d).ok()?,
        None => BigInt::one(),
    };
    if d.is_zero() {
        return None;
    }
    Some(BigRational::new(n, d))
}

impl FromStr for Scalar {
    type Err = ScalarParseError;

    /// Parses elements of ℚ(i); use [`FieldSpec::parse`] for radical towers.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        FieldSpec::gaussian().parse(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(t: &str) -> Scalar {
        t.parse().unwrap()
    }

    #[test]
    fn gaussian_arithmetic() {
        let a = s("1+2*i");
        let b = s("3-1*i");
        assert_eq!(a.clone() * b.clone(), s("5+5*i"));
        assert_eq!((a.clone() / b.clone()) * b, a);
        assert_eq!(Scalar::i() * Scalar::i(), Scalar::from_int(-1));
    }

    #[test]
    fn radical_arithmetic() {
        let spec = FieldSpec::with_radical(2).unwrap();
        let w = spec.parse("w").unwrap();
        assert_eq!(w.clone() * w.clone(), Scalar::from_int(2));
        let x = spec.parse("1/2+3/4*w*i").unwrap();
        let y = x.inv().unwrap();
        assert_eq!(x * y, Scalar::one());
        assert_eq!((w.clone() - w).radicand(), None);
    }

    #[test]
    #[should_panic(expected = "mixed-field")]
    fn mixed_radicands_rejected() {
        let _ = Scalar::sqrt(2) + Scalar::sqrt(3);
    }

    #[test]
    fn display_parse_roundtrip() {
        let spec = FieldSpec::with_radical(3).unwrap();
        for t in ["0", "1/2", "-7", "1/2+3/4*i", "-1*i", "1/2+3/4*w*i", "2-1/3*w+5*w*i"] {
            let v = spec.parse(t).unwrap();
            assert_eq!(spec.parse(&v.to_string()).unwrap(), v, "{t}");
        }
        assert_eq!(s("i").to_string(), "1*i");
        assert_eq!(spec.parse("1/2+3/4*w*i").unwrap().to_string(), "1/2+3/4*w*i");
    }

    #[test]
    fn parse_errors() {
        assert_eq!("".parse::<Scalar>(), Err(ScalarParseError::Empty));
        assert!(matches!("w".parse::<Scalar>(), Err(ScalarParseError::UndeclaredRadical(_))));
        assert!("1/0".parse::<Scalar>().is_err());
        assert!("i*i".parse::<Scalar>().is_err());
        assert!(FieldSpec::with_radical(8).is_err());
        assert!(FieldSpec::with_radical(1).is_err());
    }

    #[test]
    fn real_imaginary_split() {
        let spec = FieldSpec::with_radical(2).unwrap();
        let x = spec.parse("1+2*i+3*w+4*w*i").unwrap();
        assert_eq!(x.re(), spec.parse("1+3*w").unwrap());
        assert_eq!(x.im(), spec.parse("2+4*w").unwrap());
        assert_eq!(x.re() + Scalar::i() * x.im(), x);
    }
}
