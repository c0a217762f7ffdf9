use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly::{bipoly_terms, BiPoly};

/// Sparse Laurent polynomial in `r, s` with rational coefficients.
///
/// Keys are exponent pairs `(a, b)` for `r^a s^b`; zero coefficients are
/// never stored, so equality is map equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<(i64, i64), BigRational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_terms<I: IntoIterator<Item = ((i64, i64), BigRational)>>(terms: I) -> Self {
        let mut out = Self::zero();
        for (k, c) in terms {
            out.add_term(k, c);
        }
        out
    }

    pub(crate) fn from_bipoly(p: &BiPoly, shift_a: i64, shift_b: i64) -> Self {
        let mut terms = BTreeMap::new();
        for ((a, b), c) in bipoly_terms(p) {
            terms.insert(
                (a as i64 + shift_a, b as i64 + shift_b),
                BigRational::from_integer(c.clone()),
            );
        }
        LaurentPoly { terms }
    }

    pub fn terms(&self) -> &BTreeMap<(i64, i64), BigRational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, key: (i64, i64), c: BigRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(key).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    /// Componentwise minimum exponents; `(0, 0)` for the zero polynomial.
    pub fn min_exponents(&self) -> (i64, i64) {
        let a = self.terms.keys().map(|k| k.0).min().unwrap_or(0);
        let b = self.terms.keys().map(|k| k.1).min().unwrap_or(0);
        (a, b)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(*k, c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (ka, ca) in &self.terms {
            for (kb, cb) in &other.terms {
                out.add_term((ka.0 + kb.0, ka.1 + kb.1), ca * cb);
            }
        }
        out
    }

    /// Terms sorted for display: total degree descending, then `r`-degree
    /// descending.
    fn display_order(&self) -> Vec<(&(i64, i64), &BigRational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|(x, _), (y, _)| (y.0 + y.1, y.0).cmp(&(x.0 + x.1, x.0)));
        v
    }
}

fn fmt_power(f: &mut fmt::Formatter<'_>, var: char, e: i64) -> fmt::Result {
    if e == 1 {
        write!(f, "{var}")
    } else {
        write!(f, "{var}^{e}")
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, ((a, b), c)) in self.display_order().into_iter().enumerate() {
            let neg = c.is_negative();
            match (idx, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mag = c.abs();
            let mut wrote = false;
            if !mag.is_one() || (*a == 0 && *b == 0) {
                if mag.denom() == &BigInt::one() {
                    write!(f, "{}", mag.numer())?;
                } else {
                    write!(f, "{}/{}", mag.numer(), mag.denom())?;
                }
                wrote = true;
            }
            for (var, e) in [('r', *a), ('s', *b)] {
                if e != 0 {
                    if wrote {
                        write!(f, "*")?;
                    }
                    fmt_power(f, var, e)?;
                    wrote = true;
                }
            }
        }
        Ok(())
    }
}
