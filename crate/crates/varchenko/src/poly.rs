//! Exact univariate polynomial arithmetic in the variable `q`.
//!
//! [`PolyZ`] has arbitrary-precision integer coefficients and is the entry
//! type of every matrix in this crate. [`PolyQ`] has rational coefficients
//! and carries the Euclidean structure of `Q[q]` (division with remainder,
//! gcd) needed for Smith normal form over a principal ideal domain.
//!
//! Both types keep coefficients in ascending degree order with no trailing
//! zeros, so equality is a plain coefficient comparison.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("gcd of two zero polynomials is undefined")]
    GcdOfZeros,
    #[error("cannot parse polynomial `{input}`: {reason}")]
    Parse { input: String, reason: String },
}

/// Polynomial in `q` with `BigInt` coefficients, ascending degree order.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct PolyZ {
    coeffs: Vec<BigInt>,
}

impl PolyZ {
    /// Build from ascending coefficients; trailing zeros are trimmed.
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        PolyZ { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        PolyZ { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Self::new(vec![BigInt::from(c)])
    }

    /// The monomial `c * q^deg`.
    pub fn monomial(c: BigInt, deg: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); deg + 1];
        coeffs[deg] = c;
        PolyZ { coeffs }
    }

    /// `q^k`.
    pub fn q_pow(k: usize) -> Self {
        Self::monomial(BigInt::one(), k)
    }

    /// `1 - q^2`, the unit of every Smith normal form in the model catalogue.
    pub fn one_minus_q_sq() -> Self {
        Self::from_i64(&[1, 0, -1])
    }

    /// `1 - q^k`.
    pub fn one_minus_q_pow(k: usize) -> Self {
        &Self::one() - &Self::q_pow(k)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `q^k` (zero beyond the stored range).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Exact Horner evaluation at a rational point.
    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from(c.clone());
        }
        acc
    }

    /// Horner evaluation at an integer point.
    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn to_rational(&self) -> PolyQ {
        PolyQ::new(
            self.coeffs
                .iter()
                .map(|c| BigRational::from(c.clone()))
                .collect(),
        )
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`
    /// in `Z[q]`.
    pub fn div_exact(&self, d: &PolyZ) -> Option<PolyZ> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(PolyZ::zero());
        }
        let (quot, rem) = self.to_rational().div_rem(&d.to_rational()).ok()?;
        if !rem.is_zero() {
            return None;
        }
        quot.to_integer()
    }

    /// Parse the textual rendering produced by `Display`, e.g. `1 - q^2`,
    /// `3*q + 2`, `q^5`. Whitespace and the `*` are optional.
    pub fn parse(input: &str) -> Result<Self, PolyError> {
        let err = |reason: &str| PolyError::Parse {
            input: input.to_owned(),
            reason: reason.to_owned(),
        };
        let chars: Vec<char> = input.chars().collect();
        let mut pos = 0usize;
        let mut coeffs: Vec<BigInt> = Vec::new();
        let mut any_term = false;

        let skip_ws = |pos: &mut usize| {
            while *pos < chars.len() && chars[*pos].is_whitespace() {
                *pos += 1;
            }
        };
        let read_uint = |pos: &mut usize| -> Option<BigInt> {
            let start = *pos;
            while *pos < chars.len() && chars[*pos].is_ascii_digit() {
                *pos += 1;
            }
            if *pos == start {
                return None;
            }
            let s: String = chars[start..*pos].iter().collect();
            Some(BigInt::from_str(&s).expect("digits"))
        };

        loop {
            skip_ws(&mut pos);
            if pos >= chars.len() {
                break;
            }
            // sign
            let mut negative = false;
            if chars[pos] == '+' || chars[pos] == '-' {
                negative = chars[pos] == '-';
                pos += 1;
                skip_ws(&mut pos);
            } else if any_term {
                return Err(err("expected `+` or `-` between terms"));
            }
            // coefficient and/or q-power
            let coeff = read_uint(&mut pos);
            skip_ws(&mut pos);
            if pos < chars.len() && chars[pos] == '*' {
                pos += 1;
                skip_ws(&mut pos);
            }
            let mut deg = 0usize;
            let mut has_q = false;
            if pos < chars.len() && chars[pos] == 'q' {
                has_q = true;
                pos += 1;
                skip_ws(&mut pos);
                if pos < chars.len() && chars[pos] == '^' {
                    pos += 1;
                    skip_ws(&mut pos);
                    let e = read_uint(&mut pos).ok_or_else(|| err("missing exponent after `^`"))?;
                    deg = e
                        .try_into()
                        .map_err(|_| err("exponent does not fit in usize"))?;
                } else {
                    deg = 1;
                }
            }
            let mut c = match (coeff, has_q) {
                (Some(c), _) => c,
                (None, true) => BigInt::one(),
                (None, false) => return Err(err("expected a coefficient or `q`")),
            };
            if negative {
                c = -c;
            }
            if coeffs.len() <= deg {
                coeffs.resize(deg + 1, BigInt::zero());
            }
            coeffs[deg] += c;
            any_term = true;
        }
        if !any_term {
            return Err(err("empty input"));
        }
        Ok(PolyZ::new(coeffs))
    }
}

impl FromStr for PolyZ {
    type Err = PolyError;
    fn from_str(s: &str) -> Result<Self, PolyError> {
        PolyZ::parse(s)
    }
}

fn add_coeffs<T: Clone + Zero>(a: &[T], b: &[T]) -> Vec<T>
where
    for<'x> &'x T: Add<&'x T, Output = T>,
{
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for k in 0..n {
        let x = a.get(k);
        let y = b.get(k);
        out.push(match (x, y) {
            (Some(x), Some(y)) => x + y,
            (Some(x), None) => x.clone(),
            (None, Some(y)) => y.clone(),
            (None, None) => unreachable!(),
        });
    }
    out
}

impl Add for &PolyZ {
    type Output = PolyZ;
    fn add(self, rhs: &PolyZ) -> PolyZ {
        PolyZ::new(add_coeffs(&self.coeffs, &rhs.coeffs))
    }
}

impl Sub for &PolyZ {
    type Output = PolyZ;
    fn sub(self, rhs: &PolyZ) -> PolyZ {
        self + &(-rhs)
    }
}

impl Neg for &PolyZ {
    type Output = PolyZ;
    fn neg(self) -> PolyZ {
        PolyZ {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &PolyZ {
    type Output = PolyZ;
    fn mul(self, rhs: &PolyZ) -> PolyZ {
        if self.is_zero() || rhs.is_zero() {
            return PolyZ::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        PolyZ::new(out)
    }
}

/// Shared term renderer: `1 - q^2`, `2 + 2*q`, `-q^3 + q`.
fn render_terms(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (usize, bool, String, bool)>,
) -> fmt::Result {
    // items: (degree, is_negative, |coeff| text, |coeff| == 1)
    let mut first = true;
    for (deg, neg, abs, is_one) in terms {
        if first {
            if neg {
                write!(f, "-")?;
            }
            first = false;
        } else if neg {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        match (deg, is_one) {
            (0, _) => write!(f, "{abs}")?,
            (1, true) => write!(f, "q")?,
            (1, false) => write!(f, "{abs}*q")?,
            (d, true) => write!(f, "q^{d}")?,
            (d, false) => write!(f, "{abs}*q^{d}")?,
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Display for PolyZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        render_terms(
            f,
            self.coeffs.iter().enumerate().filter_map(|(k, c)| {
                if c.is_zero() {
                    None
                } else {
                    Some((k, c.is_negative(), c.abs().to_string(), c.abs().is_one()))
                }
            }),
        )
    }
}

impl fmt::Debug for PolyZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyZ({self})")
    }
}

/// Polynomial in `q` with `BigRational` coefficients.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct PolyQ {
    coeffs: Vec<BigRational>,
}

impl PolyQ {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        PolyQ { coeffs }
    }

    pub fn zero() -> Self {
        PolyQ { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        PolyQ {
            coeffs: vec![BigRational::one()],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn leading_coeff(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(|c| c.is_one())
    }

    /// Scale to leading coefficient 1; zero stays zero.
    pub fn monic(&self) -> PolyQ {
        match self.leading_coeff() {
            None => PolyQ::zero(),
            Some(lead) => {
                let inv = BigRational::one() / lead.clone();
                PolyQ {
                    coeffs: self.coeffs.iter().map(|c| c * &inv).collect(),
                }
            }
        }
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Euclidean division: `self = quot * d + rem` with `deg rem < deg d`.
    pub fn div_rem(&self, d: &PolyQ) -> Result<(PolyQ, PolyQ), PolyError> {
        let d_deg = d.degree().ok_or(PolyError::DivisionByZero)?;
        let d_lead = d.leading_coeff().expect("nonzero divisor");
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigRational::zero(); self.coeffs.len().saturating_sub(d_deg)];
        while rem.len() > d_deg {
            let r_deg = rem.len() - 1;
            let factor = rem.last().expect("nonempty") / d_lead;
            let shift = r_deg - d_deg;
            for (k, dc) in d.coeffs.iter().enumerate() {
                let v = &factor * dc;
                rem[shift + k] -= v;
            }
            quot[shift] = factor;
            // the leading term cancels exactly
            while rem.last().is_some_and(|c| c.is_zero()) {
                rem.pop();
            }
            if rem.len() > d_deg && rem.len() - 1 == r_deg {
                unreachable!("leading term must cancel");
            }
        }
        Ok((PolyQ::new(quot), PolyQ::new(rem)))
    }

    pub fn divides(&self, other: &PolyQ) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other
            .div_rem(self)
            .map(|(_, rem)| rem.is_zero())
            .unwrap_or(false)
    }

    /// Monic greatest common divisor by the Euclidean algorithm.
    pub fn gcd(a: &PolyQ, b: &PolyQ) -> Result<PolyQ, PolyError> {
        if a.is_zero() && b.is_zero() {
            return Err(PolyError::GcdOfZeros);
        }
        let mut x = a.monic();
        let mut y = b.monic();
        while !y.is_zero() {
            let (_, rem) = x.div_rem(&y)?;
            x = y;
            y = rem.monic();
        }
        Ok(x.monic())
    }

    /// Back to `Z[q]` when every coefficient is an integer.
    pub fn to_integer(&self) -> Option<PolyZ> {
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            if !c.is_integer() {
                return None;
            }
            out.push(c.to_integer());
        }
        Some(PolyZ::new(out))
    }
}

impl From<&PolyZ> for PolyQ {
    fn from(p: &PolyZ) -> Self {
        p.to_rational()
    }
}

impl Add for &PolyQ {
    type Output = PolyQ;
    fn add(self, rhs: &PolyQ) -> PolyQ {
        PolyQ::new(add_coeffs(&self.coeffs, &rhs.coeffs))
    }
}

impl Sub for &PolyQ {
    type Output = PolyQ;
    fn sub(self, rhs: &PolyQ) -> PolyQ {
        self + &(-rhs)
    }
}

impl Neg for &PolyQ {
    type Output = PolyQ;
    fn neg(self) -> PolyQ {
        PolyQ {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &PolyQ {
    type Output = PolyQ;
    fn mul(self, rhs: &PolyQ) -> PolyQ {
        if self.is_zero() || rhs.is_zero() {
            return PolyQ::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        PolyQ::new(out)
    }
}

impl fmt::Display for PolyQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        render_terms(
            f,
            self.coeffs.iter().enumerate().filter_map(|(k, c)| {
                if c.is_zero() {
                    None
                } else {
                    Some((k, c.is_negative(), c.abs().to_string(), c.abs().is_one()))
                }
            }),
        )
    }
}

impl fmt::Debug for PolyQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyQ({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::FromPrimitive;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn add_cancellation_and_identity() {
        let one_minus_q2 = PolyZ::one_minus_q_sq();
        let q2 = PolyZ::q_pow(2);
        assert_eq!(&one_minus_q2 + &q2, PolyZ::one());
        let p = PolyZ::from_i64(&[3, -1, 7]);
        assert_eq!(&PolyZ::zero() + &p, p);
        let one_plus_q = PolyZ::from_i64(&[1, 1]);
        assert_eq!(&one_plus_q + &one_plus_q, PolyZ::from_i64(&[2, 2]));
    }

    #[test]
    fn mul_difference_of_squares() {
        let a = PolyZ::from_i64(&[1, -1]);
        let b = PolyZ::from_i64(&[1, 1]);
        assert_eq!(&a * &b, PolyZ::one_minus_q_sq());
        assert_eq!(&PolyZ::q_pow(3) * &PolyZ::q_pow(4), PolyZ::q_pow(7));
    }

    #[test]
    fn cube_of_snf_unit() {
        // (1-q^2)^3 expanded, spot-checked by evaluation at q=2: (1-4)^3 = -27
        let t3 = PolyZ::one_minus_q_sq().pow(3);
        assert_eq!(t3, PolyZ::from_i64(&[1, 0, -3, 0, 3, 0, -1]));
        assert_eq!(t3.eval_int(&BigInt::from(2)), BigInt::from(-27));
    }

    #[test]
    fn eval_examples() {
        let t = PolyZ::one_minus_q_sq();
        assert!(t.eval(&rat(1, 1)).is_zero());
        assert_eq!(t.eval(&rat(2, 1)), rat(-3, 1));
        assert_eq!(PolyZ::q_pow(5).eval(&rat(1, 2)), rat(1, 32));
    }

    #[test]
    fn divmod_examples() {
        let t = PolyZ::one_minus_q_sq().to_rational();
        let f = PolyZ::one_minus_q_pow(4).to_rational();
        let (quot, rem) = f.div_rem(&t).unwrap();
        assert_eq!(quot, PolyZ::from_i64(&[1, 0, 1]).to_rational());
        assert!(rem.is_zero());

        let q = PolyZ::q_pow(1).to_rational();
        let (quot, rem) = q.div_rem(&t).unwrap();
        assert!(quot.is_zero());
        assert_eq!(rem, q);

        // verified by multiplying back
        let f8 = PolyZ::one_minus_q_pow(8).to_rational();
        let (quot, rem) = f8.div_rem(&t).unwrap();
        assert!(rem.is_zero());
        assert_eq!(&quot * &t, f8);
        assert_eq!(quot, PolyZ::from_i64(&[1, 0, 1, 0, 1, 0, 1]).to_rational());

        assert_eq!(
            f.div_rem(&PolyQ::zero()),
            Err(PolyError::DivisionByZero)
        );
    }

    #[test]
    fn gcd_examples() {
        let t = PolyZ::one_minus_q_sq().to_rational();
        let f = PolyZ::one_minus_q_pow(4).to_rational();
        let g = PolyQ::gcd(&t, &f).unwrap();
        // monic normalization of 1 - q^2 is q^2 - 1
        assert_eq!(g, PolyZ::from_i64(&[-1, 0, 1]).to_rational());
        assert!(g.is_monic());

        let g = PolyQ::gcd(
            &PolyZ::q_pow(3).to_rational(),
            &PolyZ::q_pow(5).to_rational(),
        )
        .unwrap();
        assert_eq!(g, PolyZ::q_pow(3).to_rational());

        let g = PolyQ::gcd(&t, &PolyZ::q_pow(1).to_rational()).unwrap();
        assert!(g.is_one());

        assert_eq!(
            PolyQ::gcd(&PolyQ::zero(), &PolyQ::zero()),
            Err(PolyError::GcdOfZeros)
        );
    }

    #[test]
    fn display_and_parse_round_trip() {
        let cases = [
            PolyZ::zero(),
            PolyZ::one(),
            PolyZ::one_minus_q_sq(),
            PolyZ::from_i64(&[2, 2]),
            PolyZ::from_i64(&[0, -1, 0, 5]),
            PolyZ::q_pow(7),
            PolyZ::constant(-4),
        ];
        for p in &cases {
            let s = p.to_string();
            assert_eq!(&PolyZ::parse(&s).unwrap(), p, "round trip of `{s}`");
        }
        assert_eq!(PolyZ::one_minus_q_sq().to_string(), "1 - q^2");
        assert_eq!(PolyZ::parse("1-q^2").unwrap(), PolyZ::one_minus_q_sq());
        assert_eq!(PolyZ::parse("3*q").unwrap(), PolyZ::from_i64(&[0, 3]));
        assert_eq!(PolyZ::parse(" q ^ 2 ").unwrap(), PolyZ::q_pow(2));
        assert!(PolyZ::parse("").is_err());
        assert!(PolyZ::parse("q^").is_err());
        assert!(PolyZ::parse("1 1").is_err());
    }

    #[test]
    fn div_exact_integer_quotient() {
        let t = PolyZ::one_minus_q_sq();
        let t3 = t.pow(3);
        assert_eq!(t3.div_exact(&t), Some(t.pow(2)));
        assert_eq!(t.div_exact(&PolyZ::from_i64(&[0, 1])), None);
        assert_eq!(t.div_exact(&PolyZ::constant(2)), None);
        assert_eq!(t.div_exact(&PolyZ::zero()), None);
    }

    #[test]
    fn rational_display() {
        let p = PolyQ::new(vec![rat(1, 2), rat(-3, 4)]);
        assert_eq!(p.to_string(), "1/2 - 3/4*q");
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn arb_poly() -> impl Strategy<Value = PolyZ> {
            prop::collection::vec(-9i64..=9, 0..=13).prop_map(|v| PolyZ::from_i64(&v))
        }

        proptest! {
            #[test]
            fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
                prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
                prop_assert_eq!(&a + &b, &b + &a);
                prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
                prop_assert_eq!(&a * &b, &b * &a);
                prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
                prop_assert_eq!(&a + &(-&a), PolyZ::zero());
            }

            #[test]
            fn eval_is_ring_homomorphism(a in arb_poly(), b in arb_poly(), num in -20i64..=20, den in 1i64..=9) {
                let x = BigRational::new(BigInt::from(num), BigInt::from(den));
                prop_assert_eq!((&a * &b).eval(&x), a.eval(&x) * b.eval(&x));
                prop_assert_eq!((&a + &b).eval(&x), a.eval(&x) + b.eval(&x));
            }

            #[test]
            fn divmod_round_trip(a in arb_poly(), b in arb_poly()) {
                prop_assume!(!b.is_zero());
                let (aq, bq) = (a.to_rational(), b.to_rational());
                let (quot, rem) = aq.div_rem(&bq).unwrap();
                prop_assert_eq!(&(&quot * &bq) + &rem, aq);
                if !rem.is_zero() {
                    prop_assert!(rem.degree().unwrap() < bq.degree().unwrap());
                }
            }

            #[test]
            fn gcd_divides_both_and_is_monic(a in arb_poly(), b in arb_poly()) {
                prop_assume!(!a.is_zero() || !b.is_zero());
                let (aq, bq) = (a.to_rational(), b.to_rational());
                let g = PolyQ::gcd(&aq, &bq).unwrap();
                prop_assert!(g.is_monic());
                prop_assert!(g.divides(&aq));
                prop_assert!(g.divides(&bq));
            }
        }

        #[test]
        fn eval_matches_f64_probe() {
            // cheap cross-check of Horner order against an independent sum
            let p = PolyZ::from_i64(&[4, -3, 0, 2]);
            let x = rat(7, 3);
            let direct: BigRational = (0..4)
                .map(|k| {
                    BigRational::from_i64(p.coeff(k).try_into().unwrap_or(0)).unwrap()
                        * x.clone().pow(k as i32)
                })
                .sum();
            assert_eq!(p.eval(&x), direct);
        }

        fn rat(n: i64, d: i64) -> BigRational {
            BigRational::new(BigInt::from(n), BigInt::from(d))
        }
    }
}
