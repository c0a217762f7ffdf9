use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::laurent::LaurentPoly;
use super::poly::{
    bipoly_from_terms, bipoly_monomial, bipoly_shift, bipoly_single_term, bipoly_terms,
    bipoly_unshift, bipoly_valuations, BiPoly, DensePoly, GcdDomain,
};
use crate::error::{Error, Result};

/// An element of ℚ(r, s), stored as a reduced quotient of integer
/// polynomials.
///
/// The numerator and denominator are coprime (including integer content),
/// and the denominator's leading term in graded-lex order (total degree,
/// then `r`-degree) has a positive coefficient. Zero is `0/1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    num: BiPoly,
    den: BiPoly,
}

fn poly_gcd(a: &BiPoly, b: &BiPoly) -> BiPoly {
    if a.is_one() || b.is_one() {
        return BiPoly::one();
    }
    if let Some(((ea, eb), c)) = bipoly_single_term(b) {
        return monomial_gcd(a, ea, eb, &c);
    }
    if let Some(((ea, eb), c)) = bipoly_single_term(a) {
        return monomial_gcd(b, ea, eb, &c);
    }
    a.gcd(b)
}

fn monomial_gcd(p: &BiPoly, ea: usize, eb: usize, c: &BigInt) -> BiPoly {
    if p.is_zero() {
        return bipoly_monomial(c.abs(), ea, eb);
    }
    let (vr, vs) = bipoly_valuations(p);
    let mut g = c.clone();
    for (_, k) in bipoly_terms(p) {
        g = num_integer::Integer::gcd(&g, k);
    }
    bipoly_monomial(g, ea.min(vr), eb.min(vs))
}

fn exact(a: &BiPoly, b: &BiPoly) -> BiPoly {
    a.exact_div(b).expect("exact division by a common factor")
}

/// Leading coefficient sign in graded-lex order.
fn graded_lex_sign(p: &BiPoly) -> i8 {
    bipoly_terms(p)
        .max_by_key(|((a, b), _)| (a + b, *a))
        .map_or(0, |(_, c)| if c.is_negative() { -1 } else { 1 })
}

impl Scalar {
    fn from_parts_reduced(mut num: BiPoly, mut den: BiPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        if graded_lex_sign(&den) < 0 {
            num = GcdDomain::neg(&num);
            den = GcdDomain::neg(&den);
        }
        Scalar { num, den }
    }

    fn from_parts(num: BiPoly, den: BiPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let g = poly_gcd(&num, &den);
        if g.is_one() {
            Self::from_parts_reduced(num, den)
        } else {
            Self::from_parts_reduced(exact(&num, &g), exact(&den, &g))
        }
    }

    pub fn zero() -> Self {
        Scalar {
            num: BiPoly::zero(),
            den: BiPoly::one(),
        }
    }

    pub fn one() -> Self {
        Scalar {
            num: BiPoly::one(),
            den: BiPoly::one(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_bigint(BigInt::from(n))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Scalar {
            num: DensePoly::constant(DensePoly::constant(n)),
            den: BiPoly::one(),
        }
    }

    pub fn from_rational(q: &BigRational) -> Self {
        Self::from_parts_reduced(
            DensePoly::constant(DensePoly::constant(q.numer().clone())),
            DensePoly::constant(DensePoly::constant(q.denom().clone())),
        )
    }

    /// The parameter `r`.
    pub fn r() -> Self {
        Self::monomial(1, 0)
    }

    /// The parameter `s`.
    pub fn s() -> Self {
        Self::monomial(0, 1)
    }

    /// The Laurent monomial `r^a s^b`.
    pub fn monomial(a: i64, b: i64) -> Self {
        let part = |e: i64| e.unsigned_abs() as usize;
        let (na, da) = if a >= 0 { (part(a), 0) } else { (0, part(a)) };
        let (nb, db) = if b >= 0 { (part(b), 0) } else { (0, part(b)) };
        Scalar {
            num: bipoly_monomial(<BigInt as One>::one(), na, nb),
            den: bipoly_monomial(<BigInt as One>::one(), da, db),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// Numerator as a polynomial with integer coefficients.
    pub fn numerator(&self) -> LaurentPoly {
        LaurentPoly::from_bipoly(&self.num, 0, 0)
    }

    pub fn denominator(&self) -> LaurentPoly {
        LaurentPoly::from_bipoly(&self.den, 0, 0)
    }

    /// The value as a Laurent polynomial, when the denominator is a monomial.
    pub fn to_laurent(&self) -> Option<LaurentPoly> {
        let ((a, b), c) = bipoly_single_term(&self.den)?;
        let lp = LaurentPoly::from_bipoly(&self.num, -(a as i64), -(b as i64));
        Some(lp.scale(&BigRational::new(<BigInt as One>::one(), c)))
    }

    pub fn from_laurent(p: &LaurentPoly) -> Self {
        if p.is_zero() {
            return Self::zero();
        }
        let (min_a, min_b) = p.min_exponents();
        let (min_a, min_b) = (min_a.min(0), min_b.min(0));
        let mut den_int = <BigInt as One>::one();
        for c in p.terms().values() {
            den_int = num_integer::Integer::lcm(&den_int, c.denom());
        }
        let num = bipoly_from_terms(p.terms().iter().map(|(&(a, b), c)| {
            let scaled = c * BigRational::from_integer(den_int.clone());
            (
                ((a - min_a) as usize, (b - min_b) as usize),
                scaled.to_integer(),
            )
        }));
        let den = bipoly_monomial(den_int, (-min_a) as usize, (-min_b) as usize);
        Self::from_parts(num, den)
    }

    /// Is this a constant (an element of ℚ)?
    pub fn to_rational(&self) -> Option<BigRational> {
        if self.num.is_constant()
            && self.den.is_constant()
            && self.num.coeff(0).is_constant()
            && self.den.coeff(0).is_constant()
        {
            Some(BigRational::new(
                self.num.coeff(0).coeff(0),
                self.den.coeff(0).coeff(0),
            ))
        } else {
            None
        }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::from_parts_reduced(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, n: i64) -> Result<Self> {
        let base = if n < 0 { self.inv()? } else { self.clone() };
        let mut e = n.unsigned_abs();
        let mut acc = Scalar::one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }

    /// Exact evaluation at a rational point.
    pub fn substitute(&self, r: &BigRational, s: &BigRational) -> Result<BigRational> {
        let eval = |p: &BiPoly| -> BigRational {
            p.eval_with(s, |rp| {
                rp.eval_with(r, |c| BigRational::from_integer(c.clone()))
            })
        };
        let d = eval(&self.den);
        if d.is_zero() {
            return Err(Error::PoleAtPoint {
                r: r.to_string(),
                s: s.to_string(),
            });
        }
        Ok(eval(&self.num) / d)
    }

    /// Re-normalize from scratch; a no-op on every value built through the
    /// public API.
    pub fn renormalized(&self) -> Self {
        Self::from_parts(self.num.clone(), self.den.clone())
    }

    fn add_impl(&self, other: &Self, negate: bool) -> Self {
        let b_num = if negate {
            GcdDomain::neg(&other.num)
        } else {
            other.num.clone()
        };
        if self.is_zero() {
            return Scalar {
                num: b_num,
                den: other.den.clone(),
            };
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            let num = self.num.add(&b_num);
            if self.den.is_one() {
                return Self::from_parts_reduced(num, self.den.clone());
            }
            return Self::from_parts(num, self.den.clone());
        }
        let g = poly_gcd(&self.den, &other.den);
        let da = exact(&self.den, &g);
        let db = exact(&other.den, &g);
        let num = self.num.mul(&db).add(&b_num.mul(&da));
        if num.is_zero() {
            return Self::zero();
        }
        // Any common factor of num and the full denominator divides g.
        let h = poly_gcd(&num, &g);
        let (num, g) = if h.is_one() {
            (num, g)
        } else {
            (exact(&num, &h), exact(&g, &h))
        };
        Self::from_parts_reduced(num, da.mul(&db).mul(&g))
    }

    fn mul_impl(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.is_one() {
            return other.clone();
        }
        if other.is_one() {
            return self.clone();
        }
        if let (Some(m1), Some(m2)) = (self.monomial_parts(), other.monomial_parts()) {
            return Self::mul_monomials(m1, m2);
        }
        let g1 = poly_gcd(&self.num, &other.den);
        let g2 = poly_gcd(&other.num, &self.den);
        let (n1, d2) = (exact(&self.num, &g1), exact(&other.den, &g1));
        let (n2, d1) = (exact(&other.num, &g2), exact(&self.den, &g2));
        Self::from_parts_reduced(n1.mul(&n2), d1.mul(&d2))
    }

    /// `c r^a s^b` with `c` rational, when both parts are single terms.
    fn monomial_parts(&self) -> Option<(BigInt, BigInt, i64, i64)> {
        let ((na, nb), nc) = bipoly_single_term(&self.num)?;
        let ((da, db), dc) = bipoly_single_term(&self.den)?;
        Some((
            nc,
            dc,
            na as i64 - da as i64,
            nb as i64 - db as i64,
        ))
    }

    fn mul_monomials(m1: (BigInt, BigInt, i64, i64), m2: (BigInt, BigInt, i64, i64)) -> Self {
        let c = BigRational::new(m1.0 * m2.0, m1.1 * m2.1);
        let (a, b) = (m1.2 + m2.2, m1.3 + m2.3);
        let split = |e: i64| {
            if e >= 0 {
                (e as usize, 0)
            } else {
                (0, e.unsigned_abs() as usize)
            }
        };
        let (na, da) = split(a);
        let (nb, db) = split(b);
        Self::from_parts_reduced(
            bipoly_monomial(c.numer().clone(), na, nb),
            bipoly_monomial(c.denom().clone(), da, db),
        )
    }

    /// Multiply by `r^a s^b`.
    pub fn shift(&self, a: i64, b: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let (vr, vs) = bipoly_valuations(&self.den);
        let mut num = self.num.clone();
        let mut den = self.den.clone();
        // Cancel against denominator powers first, then grow the numerator.
        let apply = |e: i64, v: usize, num: &mut BiPoly, den: &mut BiPoly, is_r: bool| {
            let mono = |k: usize| if is_r { (k, 0) } else { (0, k) };
            if e >= 0 {
                let e = e as usize;
                let cancel = e.min(v);
                let (ca, cb) = mono(cancel);
                *den = bipoly_unshift(den, ca, cb);
                let (ga, gb) = mono(e - cancel);
                *num = bipoly_shift(num, ga, gb);
            } else {
                let e = e.unsigned_abs() as usize;
                let (nvr, nvs) = bipoly_valuations(num);
                let nv = if is_r { nvr } else { nvs };
                let cancel = e.min(nv);
                let (ca, cb) = mono(cancel);
                *num = bipoly_unshift(num, ca, cb);
                let (ga, gb) = mono(e - cancel);
                *den = bipoly_shift(den, ga, gb);
            }
        };
        apply(a, vr, &mut num, &mut den, true);
        apply(b, vs, &mut num, &mut den, false);
        Scalar { num, den }
    }

    fn fmt_poly(p: &BiPoly, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&LaurentPoly::from_bipoly(p, 0, 0), f)
    }

    fn is_single_term(p: &BiPoly) -> bool {
        bipoly_single_term(p).is_some()
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Self::zero()
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return Self::fmt_poly(&self.num, f);
        }
        if let Some(((_, _), c)) = bipoly_single_term(&self.den) {
            if One::is_one(&c) {
                return self.to_laurent().expect("monomial denominator").fmt(f);
            }
        }
        if Self::is_single_term(&self.num) {
            Self::fmt_poly(&self.num, f)?;
        } else {
            write!(f, "(")?;
            Self::fmt_poly(&self.num, f)?;
            write!(f, ")")?;
        }
        write!(f, "/")?;
        let den_atom = bipoly_single_term(&self.den)
            .is_some_and(|((a, b), c)| (a + b == 0) || (One::is_one(&c) && a + b == 1));
        if den_atom {
            Self::fmt_poly(&self.den, f)
        } else {
            write!(f, "(")?;
            Self::fmt_poly(&self.den, f)?;
            write!(f, ")")
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl<'a> $tr<&'a Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'a Scalar) -> Scalar {
                $body(self, rhs)
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                $body(&self, &rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'a Scalar) -> Scalar {
                $body(&self, rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a: &Scalar, b: &Scalar| a.add_impl(b, false));
forward_binop!(Sub, sub, |a: &Scalar, b: &Scalar| a.add_impl(b, true));
forward_binop!(Mul, mul, |a: &Scalar, b: &Scalar| a.mul_impl(b));

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            num: GcdDomain::neg(&self.num),
            den: self.den.clone(),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r() -> Scalar {
        Scalar::r()
    }
    fn s() -> Scalar {
        Scalar::s()
    }

    #[test]
    fn cancels_common_linear_factor() {
        let a = r().checked_div(&(r() - s())).unwrap();
        let b = (-s()).checked_div(&(r() - s())).unwrap();
        assert!((a + b).is_one());
    }

    #[test]
    fn laurent_units_cancel() {
        let x = Scalar::monomial(1, -1) * Scalar::monomial(-1, 1);
        assert!(x.is_one());
    }

    #[test]
    fn difference_of_squares_divides() {
        let num = &r() * &r() - &s() * &s();
        let q = num.checked_div(&(r() - s())).unwrap();
        assert_eq!(q, r() + s());
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(
            Scalar::one().checked_div(&Scalar::zero()),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn denominator_sign_is_normalized() {
        let a = Scalar::one().checked_div(&(s() - r())).unwrap();
        let b = (-Scalar::one()).checked_div(&(r() - s())).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.to_string(), "-1/(r - s)");
    }

    #[test]
    fn shift_matches_monomial_product() {
        let x = (r() + Scalar::from_int(3)).checked_div(&(r() * s() - s())).unwrap();
        for (a, b) in [(2, -1), (-3, 4), (0, 0), (-1, -1)] {
            assert_eq!(x.shift(a, b), &x * &Scalar::monomial(a, b));
        }
    }

    #[test]
    fn display_forms() {
        assert_eq!(Scalar::monomial(1, -1).to_string(), "r*s^-1");
        assert_eq!((Scalar::one() + Scalar::monomial(1, -1)).to_string(), "r*s^-1 + 1");
        assert_eq!(Scalar::zero().to_string(), "0");
        let half = Scalar::from_rational(&BigRational::new(1.into(), 2.into()));
        assert_eq!((half * r()).to_string(), "r/2");
    }

    #[test]
    fn substitution_and_poles() {
        let two = BigRational::from_integer(2.into());
        let three = BigRational::from_integer(3.into());
        let x = Scalar::one().checked_div(&(s() - r())).unwrap();
        assert_eq!(x.substitute(&two, &three).unwrap(), BigRational::one());
        let y = Scalar::one() + Scalar::monomial(1, -1);
        assert_eq!(
            y.substitute(&two, &three).unwrap(),
            BigRational::new(5.into(), 3.into())
        );
        let z = Scalar::one().checked_div(&(r() - s())).unwrap();
        assert!(matches!(
            z.substitute(&two, &two),
            Err(Error::PoleAtPoint { .. })
        ));
    }
}
