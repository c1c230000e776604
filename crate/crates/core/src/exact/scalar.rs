//! Exact scalar fields: arbitrary-precision rationals and Gaussian rationals.
//!
//! Everything downstream (polynomials, linear solving, verdicts) is generic
//! over [`Scalar`], so swapping the coefficient field is a type substitution.
//! The two fields provided here are `Q` (rationals) and `Q[i]` with `i^2 = -1`.

use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// An exact field of scalars.
///
/// All arithmetic must be closed and exact; there is no rounding anywhere in
/// this crate. `normalize_row` is a hook used by Gaussian elimination to keep
/// intermediate entries small; the default is a no-op.
pub trait Scalar:
    Clone
    + PartialEq
    + Eq
    + Hash
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + Sized
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Zero
    + One
    + 'static
{
    fn from_int(n: i64) -> Self;
    fn from_rational(q: &Rational) -> Self;
    /// Multiplicative inverse; `None` for zero.
    fn inv(&self) -> Option<Self>;
    /// The imaginary unit, if the field has one.
    fn imaginary_unit() -> Option<Self>;
    /// Rescale an augmented row by a nonzero constant to keep entries small.
    fn normalize_row(_row: &mut [Self]) {}
    /// Parse the serialization-format coefficient string.
    fn parse_coeff(s: &str) -> Result<Self>;
    /// Canonical coefficient string; `parse_coeff(render_coeff(x)) == x`.
    fn render_coeff(&self) -> String;
}

/// Arbitrary-precision rational number, always reduced with positive
/// denominator (maintained by the backing `BigRational`).
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Rational(BigRational::from_integer(n))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    /// Parse "p" or "p/q" with optional leading sign.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let (num_str, den_str) = match s.split_once('/') {
            Some((n, d)) => (n, d),
            None => (s, "1"),
        };
        let num: BigInt = num_str
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad numerator in {s:?}")))?;
        let den: BigInt = den_str
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad denominator in {s:?}")))?;
        if den.is_zero() {
            return Err(Error::Parse(format!("zero denominator in {s:?}")));
        }
        Ok(Rational(BigRational::new(num, den)))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

macro_rules! forward_binop {
    ($ty:ident, $trait:ident, $method:ident) => {
        impl $trait for $ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                $ty((self.0).$method(rhs.0))
            }
        }
    };
}

forward_binop!(Rational, Add, add);
forward_binop!(Rational, Sub, sub);
forward_binop!(Rational, Mul, mul);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Zero for Rational {
    fn zero() -> Self {
        Rational(BigRational::zero())
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl One for Rational {
    fn one() -> Self {
        Rational(BigRational::one())
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }
}

impl Scalar for Rational {
    fn from_int(n: i64) -> Self {
        Rational::from(n)
    }

    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }

    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Rational(self.0.recip()))
        }
    }

    fn imaginary_unit() -> Option<Self> {
        None
    }

    /// Scale the row to a primitive integer row: clear denominators, divide
    /// by the gcd of the numerators, and make the first nonzero entry
    /// positive. Bounds coefficient growth during elimination.
    fn normalize_row(row: &mut [Self]) {
        let mut lcm = BigInt::one();
        for x in row.iter() {
            if !x.is_zero() {
                lcm = lcm.lcm(x.denom());
            }
        }
        let mut gcd = BigInt::zero();
        for x in row.iter() {
            if !x.is_zero() {
                gcd = gcd.gcd(&(x.numer() * &lcm / x.denom()));
            }
        }
        if gcd.is_zero() {
            return;
        }
        let mut scale = BigRational::new(lcm, gcd);
        if let Some(first) = row.iter().find(|x| !x.is_zero()) {
            if first.numer().is_negative() {
                scale = -scale;
            }
        }
        for x in row.iter_mut() {
            x.0 *= &scale;
        }
    }

    fn parse_coeff(s: &str) -> Result<Self> {
        if s.contains('i') {
            return Err(Error::Parse(format!(
                "imaginary coefficient {s:?} not supported over the rationals"
            )));
        }
        Rational::parse(s)
    }

    fn render_coeff(&self) -> String {
        self.to_string()
    }
}

/// Gaussian rational `re + im*i`, with `i^2 = -1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussianRational { re, im }
    }

    pub fn i() -> Self {
        GaussianRational {
            re: Rational::zero(),
            im: Rational::one(),
        }
    }

    fn norm(&self) -> Rational {
        self.re.clone() * self.re.clone() + self.im.clone() * self.im.clone()
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render_coeff())
    }
}

impl Add for GaussianRational {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        GaussianRational::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl Sub for GaussianRational {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        GaussianRational::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl Mul for GaussianRational {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        GaussianRational::new(
            self.re.clone() * rhs.re.clone() - self.im.clone() * rhs.im.clone(),
            self.re * rhs.im + self.im * rhs.re,
        )
    }
}

impl Neg for GaussianRational {
    type Output = Self;
    fn neg(self) -> Self {
        GaussianRational::new(-self.re, -self.im)
    }
}

impl Zero for GaussianRational {
    fn zero() -> Self {
        GaussianRational::new(Rational::zero(), Rational::zero())
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussianRational {
    fn one() -> Self {
        GaussianRational::new(Rational::one(), Rational::zero())
    }
}

/// Parse the imaginary summand "bi", "bi/q", "i", "i/q" (no leading sign).
fn parse_unsigned_imag(s: &str) -> Result<Rational> {
    let idx = s
        .find('i')
        .ok_or_else(|| Error::Parse(format!("expected imaginary part in {s:?}")))?;
    let num_part = &s[..idx];
    let den_part = &s[idx + 1..];
    let num = if num_part.is_empty() {
        "1".to_string()
    } else {
        num_part.to_string()
    };
    let den = if den_part.is_empty() {
        "1".to_string()
    } else if let Some(d) = den_part.strip_prefix('/') {
        d.to_string()
    } else {
        return Err(Error::Parse(format!("malformed imaginary part {s:?}")));
    };
    Rational::parse(&format!("{num}/{den}"))
}

impl Scalar for GaussianRational {
    fn from_int(n: i64) -> Self {
        GaussianRational::new(Rational::from(n), Rational::zero())
    }

    fn from_rational(q: &Rational) -> Self {
        GaussianRational::new(q.clone(), Rational::zero())
    }

    fn inv(&self) -> Option<Self> {
        let n = self.norm();
        let ninv = n.inv()?;
        Some(GaussianRational::new(
            self.re.clone() * ninv.clone(),
            -(self.im.clone() * ninv),
        ))
    }

    fn imaginary_unit() -> Option<Self> {
        Some(GaussianRational::i())
    }

    fn normalize_row(row: &mut [Self]) {
        // Reuse the rational normalization on the interleaved components.
        let mut flat: Vec<Rational> = Vec::with_capacity(row.len() * 2);
        for x in row.iter() {
            flat.push(x.re.clone());
            flat.push(x.im.clone());
        }
        Rational::normalize_row(&mut flat);
        for (x, pair) in row.iter_mut().zip(flat.chunks(2)) {
            x.re = pair[0].clone();
            x.im = pair[1].clone();
        }
    }

    /// Grammar: `gauss := rat | [rat] ("+"|"-") uimag | ["-"] uimag` with
    /// `uimag := [uint] "i" ["/" uint]` and `rat := ["-"] uint ["/" uint]`.
    fn parse_coeff(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty coefficient".into()));
        }
        if !s.contains('i') {
            return Ok(GaussianRational::new(Rational::parse(s)?, Rational::zero()));
        }
        // Split at the last sign that is not the leading one.
        let split = s
            .char_indices()
            .filter(|&(idx, c)| idx > 0 && (c == '+' || c == '-'))
            .map(|(idx, _)| idx)
            .next_back();
        match split {
            Some(idx) if s[idx + 1..].contains('i') => {
                let re = Rational::parse(&s[..idx])?;
                let sign = &s[idx..idx + 1];
                let mut im = parse_unsigned_imag(&s[idx + 1..])?;
                if sign == "-" {
                    im = -im;
                }
                Ok(GaussianRational::new(re, im))
            }
            _ => {
                // Pure imaginary, possibly with a leading sign.
                let (neg, rest) = match s.strip_prefix('-') {
                    Some(r) => (true, r),
                    None => (false, s.strip_prefix('+').unwrap_or(s)),
                };
                let mut im = parse_unsigned_imag(rest)?;
                if neg {
                    im = -im;
                }
                Ok(GaussianRational::new(Rational::zero(), im))
            }
        }
    }

    fn render_coeff(&self) -> String {
        let imag = |q: &Rational| -> String {
            let mut num = q.numer().to_string();
            if num == "1" {
                num.clear();
            } else if num == "-1" {
                num = "-".into();
            }
            if q.denom().is_one() {
                format!("{num}i")
            } else {
                format!("{num}i/{}", q.denom())
            }
        };
        if self.im.is_zero() {
            self.re.to_string()
        } else if self.re.is_zero() {
            imag(&self.im)
        } else if self.im.numer().is_negative() {
            format!("{}{}", self.re, imag(&self.im))
        } else {
            format!("{}+{}", self.re, imag(&self.im))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_reduced_positive_denominator() {
        let q = Rational::new(6, -4);
        assert_eq!(q.to_string(), "-3/2");
        assert_eq!(Rational::parse("-3/2").unwrap(), q);
    }

    #[test]
    fn rational_exact_arithmetic() {
        let third = Rational::parse("1/3").unwrap();
        let sum = third.clone() + third.clone() + third;
        assert_eq!(sum, Rational::one());
    }

    #[test]
    fn gaussian_field_ops() {
        let i = GaussianRational::i();
        assert_eq!(i.clone() * i.clone(), -GaussianRational::one());
        let x = GaussianRational::parse_coeff("3/4+5i/7").unwrap();
        let y = x.inv().unwrap();
        assert_eq!(x * y, GaussianRational::one());
    }

    #[test]
    fn gaussian_coeff_round_trip() {
        for s in ["0", "1", "-2/3", "i", "-i", "2i", "-i/2", "1+i", "3/4+5i/7", "-1-2i/3"] {
            let v = GaussianRational::parse_coeff(s).unwrap();
            assert_eq!(v.render_coeff(), s, "canonical form of {s}");
            assert_eq!(GaussianRational::parse_coeff(&v.render_coeff()).unwrap(), v);
        }
    }

    #[test]
    fn row_normalization_primitive() {
        let mut row = vec![
            Rational::parse("2/3").unwrap(),
            Rational::parse("-4/9").unwrap(),
            Rational::zero(),
        ];
        Rational::normalize_row(&mut row);
        assert_eq!(row[0], Rational::from(3));
        assert_eq!(row[1], Rational::from(-2));
        assert!(row[2].is_zero());
    }
}
