//! Dense univariate polynomials over a GCD domain.
//!
//! Nesting `DensePoly<DensePoly<BigInt>>` gives integer polynomials in two
//! variables, with the outer variable treated as the main one. GCDs use the
//! primitive polynomial remainder sequence, which keeps coefficient growth
//! under control by stripping contents after every pseudo-division.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Coefficient domain requirements for [`DensePoly`].
pub trait GcdDomain: Clone + PartialEq + Eq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Exact quotient, `None` when `other` does not divide `self`.
    fn exact_div(&self, other: &Self) -> Option<Self>;
    /// Greatest common divisor normalized to a positive leading sign.
    fn gcd(&self, other: &Self) -> Self;
    /// Sign of the leading coefficient (recursively): -1, 0 or 1.
    fn leading_sign(&self) -> i8;
}

impl GcdDomain for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn exact_div(&self, other: &Self) -> Option<Self> {
        if Zero::is_zero(other) {
            return None;
        }
        let (q, r) = self.div_rem(other);
        if Zero::is_zero(&r) {
            Some(q)
        } else {
            None
        }
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn leading_sign(&self) -> i8 {
        if self.is_negative() {
            -1
        } else if Zero::is_zero(self) {
            0
        } else {
            1
        }
    }
}

/// Polynomial `Σ coeffs[k] x^k` with no trailing zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DensePoly<C> {
    coeffs: Vec<C>,
}

impl<C: GcdDomain> DensePoly<C> {
    pub fn from_coeffs(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        DensePoly { coeffs }
    }

    pub fn constant(c: C) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c x^k`
    pub fn monomial(c: C, k: usize) -> Self {
        if c.is_zero() {
            return Self::from_coeffs(Vec::new());
        }
        let mut coeffs = vec![C::zero(); k + 1];
        coeffs[k] = c;
        DensePoly { coeffs }
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> C {
        self.coeffs.get(k).cloned().unwrap_or_else(C::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> C {
        self.coeffs.last().cloned().unwrap_or_else(C::zero)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return <Self as GcdDomain>::zero();
        }
        if c.is_one() {
            return self.clone();
        }
        Self::from_coeffs(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    pub fn shift(&self, k: usize) -> Self {
        if self.coeffs.is_empty() || k == 0 {
            return self.clone();
        }
        let mut coeffs = vec![C::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        DensePoly { coeffs }
    }

    /// Divide by `x^k`; the caller guarantees `k <= valuation`.
    pub fn unshift(&self, k: usize) -> Self {
        if k == 0 {
            return self.clone();
        }
        DensePoly {
            coeffs: self.coeffs[k..].to_vec(),
        }
    }

    pub fn div_scalar(&self, c: &C) -> Option<Self> {
        if c.is_one() {
            return Some(self.clone());
        }
        let coeffs = self
            .coeffs
            .iter()
            .map(|a| a.exact_div(c))
            .collect::<Option<Vec<_>>>()?;
        Some(DensePoly { coeffs })
    }

    /// GCD of the coefficients, with positive leading sign.
    pub fn content(&self) -> C {
        let mut g = C::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        if g.leading_sign() < 0 {
            g = g.neg();
        }
        g
    }

    pub fn primitive_part(&self) -> Self {
        if self.coeffs.is_empty() {
            return self.clone();
        }
        let c = self.content();
        let mut p = self.div_scalar(&c).expect("content divides every coefficient");
        if p.leading_sign() < 0 {
            p = GcdDomain::neg(&p);
        }
        p
    }

    /// Pseudo-remainder without the trailing power of the leading coefficient;
    /// only the primitive part of the result is ever used.
    fn sparse_prem(&self, divisor: &Self) -> Self {
        let dq = divisor.degree().expect("nonzero divisor");
        let lcq = divisor.leading();
        let mut rem = self.clone();
        while let Some(dr) = rem.degree() {
            if dr < dq {
                break;
            }
            let lcr = rem.leading();
            rem = GcdDomain::sub(&rem.scale(&lcq), &divisor.scale(&lcr).shift(dr - dq));
        }
        rem
    }

    pub fn eval_with<T, F>(&self, x: &T, mut map: F) -> T
    where
        T: Clone + Zero + std::ops::Mul<Output = T> + std::ops::Add<Output = T>,
        F: FnMut(&C) -> T,
    {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + map(c);
        }
        acc
    }
}

impl<C: GcdDomain> GcdDomain for DensePoly<C> {
    fn zero() -> Self {
        DensePoly { coeffs: Vec::new() }
    }

    fn one() -> Self {
        DensePoly {
            coeffs: vec![C::one()],
        }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            match (self.coeffs.get(k), other.coeffs.get(k)) {
                (Some(a), Some(b)) => out.push(a.add(b)),
                (Some(a), None) => out.push(a.clone()),
                (None, Some(b)) => out.push(b.clone()),
                (None, None) => unreachable!(),
            }
        }
        Self::from_coeffs(out)
    }

    fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            match (self.coeffs.get(k), other.coeffs.get(k)) {
                (Some(a), Some(b)) => out.push(a.sub(b)),
                (Some(a), None) => out.push(a.clone()),
                (None, Some(b)) => out.push(b.neg()),
                (None, None) => unreachable!(),
            }
        }
        Self::from_coeffs(out)
    }

    fn mul(&self, other: &Self) -> Self {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Self::zero();
        }
        if self.is_one() {
            return other.clone();
        }
        if other.is_one() {
            return self.clone();
        }
        let mut out = vec![C::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Self::from_coeffs(out)
    }

    fn neg(&self) -> Self {
        DensePoly {
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    fn exact_div(&self, other: &Self) -> Option<Self> {
        let dq = other.degree()?;
        if self.is_zero() {
            return Some(Self::zero());
        }
        if other.is_one() {
            return Some(self.clone());
        }
        let lc = other.leading();
        let mut rem = self.clone();
        let dr0 = rem.degree()?;
        if dr0 < dq {
            return None;
        }
        let mut quot = vec![C::zero(); dr0 - dq + 1];
        while let Some(dr) = rem.degree() {
            if dr < dq {
                return None;
            }
            let c = rem.leading().exact_div(&lc)?;
            rem = GcdDomain::sub(&rem, &other.scale(&c).shift(dr - dq));
            quot[dr - dq] = c;
        }
        Some(Self::from_coeffs(quot))
    }

    fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.primitive_part().scale(&normalize_sign(other.content()));
        }
        if other.is_zero() {
            return self.primitive_part().scale(&normalize_sign(self.content()));
        }
        let content_gcd = self.content().gcd(&other.content());
        let (mut a, mut b) = (self.primitive_part(), other.primitive_part());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        // Common powers of the variable come out cheaply.
        let v = a.valuation().unwrap_or(0).min(b.valuation().unwrap_or(0));
        if v > 0 {
            a = a.unshift(v);
            b = b.unshift(v);
        }
        while !b.is_zero() {
            if b.is_constant() {
                a = Self::one();
                break;
            }
            let rem = a.sparse_prem(&b);
            a = b;
            b = rem.primitive_part();
        }
        let mut g = a.primitive_part();
        if g.leading_sign() < 0 {
            g = GcdDomain::neg(&g);
        }
        g.shift(v).scale(&content_gcd)
    }

    fn leading_sign(&self) -> i8 {
        self.coeffs.last().map_or(0, |c| c.leading_sign())
    }
}

fn normalize_sign<C: GcdDomain>(c: C) -> C {
    if c.leading_sign() < 0 {
        c.neg()
    } else {
        c
    }
}

impl<C: GcdDomain> PartialOrd for DensePoly<C>
where
    C: Ord,
{
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<C: GcdDomain + Ord> Ord for DensePoly<C> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

impl<C: fmt::Debug> fmt::Debug for DensePoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.coeffs.iter()).finish()
    }
}

/// Integer polynomial in `r`.
pub type IntPoly = DensePoly<BigInt>;

/// Integer polynomial in `r` and `s`; outer index is the `s`-degree.
pub type BiPoly = DensePoly<IntPoly>;

/// Terms of a bivariate polynomial as `((r_exp, s_exp), coeff)`.
pub fn bipoly_terms(p: &BiPoly) -> impl Iterator<Item = ((usize, usize), &BigInt)> {
    p.coeffs().iter().enumerate().flat_map(|(j, rp)| {
        rp.coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !Zero::is_zero(*c))
            .map(move |(i, c)| ((i, j), c))
    })
}

/// `c r^a s^b`
pub fn bipoly_monomial(c: BigInt, a: usize, b: usize) -> BiPoly {
    DensePoly::monomial(DensePoly::monomial(c, a), b)
}

pub fn bipoly_from_terms<I>(terms: I) -> BiPoly
where
    I: IntoIterator<Item = ((usize, usize), BigInt)>,
{
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    for ((a, b), c) in terms {
        if rows.len() <= b {
            rows.resize(b + 1, Vec::new());
        }
        let row = &mut rows[b];
        if row.len() <= a {
            row.resize(a + 1, <BigInt as Zero>::zero());
        }
        row[a] += c;
    }
    DensePoly::from_coeffs(rows.into_iter().map(DensePoly::from_coeffs).collect())
}

/// Valuations `(v_r, v_s)` of a nonzero bivariate polynomial.
pub fn bipoly_valuations(p: &BiPoly) -> (usize, usize) {
    let vs = p.valuation().unwrap_or(0);
    let vr = p
        .coeffs()
        .iter()
        .filter_map(|c| c.valuation())
        .min()
        .unwrap_or(0);
    (vr, vs)
}

/// Divide by `r^a s^b`; caller guarantees divisibility.
pub fn bipoly_unshift(p: &BiPoly, a: usize, b: usize) -> BiPoly {
    let p = p.unshift(b);
    if a == 0 {
        return p;
    }
    DensePoly::from_coeffs(
        p.coeffs()
            .iter()
            .map(|c| if c.is_zero() { c.clone() } else { c.unshift(a) })
            .collect(),
    )
}

pub fn bipoly_shift(p: &BiPoly, a: usize, b: usize) -> BiPoly {
    let p = p.shift(b);
    if a == 0 {
        return p;
    }
    DensePoly::from_coeffs(p.coeffs().iter().map(|c| c.shift(a)).collect())
}

/// Is `p` a single term `c r^a s^b`?
pub fn bipoly_single_term(p: &BiPoly) -> Option<((usize, usize), BigInt)> {
    let mut it = bipoly_terms(p);
    let first = it.next()?;
    if it.next().is_some() {
        return None;
    }
    Some((first.0, first.1.clone()))
}
