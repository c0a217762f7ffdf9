//! Cartan data, the Euler form, and two-parameter q-combinatorics.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Series {
    A,
    B,
    C,
    D,
    G,
}

/// A finite Cartan type together with its symmetrizing vector.
///
/// Shipped tables: `A_n` (any rank, all `d_i = 1`); `B_2` with
/// `a_12 = -2, a_21 = -1, d = (1, 2)` (so `α_1` is short); `G_2` with
/// `a_12 = -3, a_21 = -1, d = (1, 3)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CartanType {
    series: Series,
    rank: usize,
    matrix: Vec<Vec<i64>>,
    d: Vec<i64>,
}

impl CartanType {
    pub fn a(rank: usize) -> Self {
        assert!(rank >= 1, "rank must be positive");
        let matrix = (0..rank)
            .map(|i| {
                (0..rank)
                    .map(|j| match i.abs_diff(j) {
                        0 => 2,
                        1 => -1,
                        _ => 0,
                    })
                    .collect()
            })
            .collect();
        CartanType {
            series: Series::A,
            rank,
            matrix,
            d: vec![1; rank],
        }
    }

    pub fn b2() -> Self {
        CartanType {
            series: Series::B,
            rank: 2,
            matrix: vec![vec![2, -2], vec![-1, 2]],
            d: vec![1, 2],
        }
    }

    pub fn g2() -> Self {
        CartanType {
            series: Series::G,
            rank: 2,
            matrix: vec![vec![2, -3], vec![-1, 2]],
            d: vec![1, 3],
        }
    }

    pub fn series(&self) -> Series {
        self.series
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cartan(&self, i: usize, j: usize) -> i64 {
        self.matrix[i][j]
    }

    pub fn d(&self, i: usize) -> i64 {
        self.d[i]
    }

    pub fn name(&self) -> String {
        format!("{:?}{}", self.series, self.rank)
    }

    pub fn check_index(&self, i: usize) -> Result<()> {
        if i < self.rank {
            Ok(())
        } else {
            Err(Error::BadIndex(format!(
                "index {} out of range for {}",
                i + 1,
                self.name()
            )))
        }
    }

    /// Euler form on simple roots (0-based indices).
    pub fn euler(&self, i: usize, j: usize) -> i64 {
        match i.cmp(&j) {
            std::cmp::Ordering::Less => self.d[i] * self.matrix[i][j],
            std::cmp::Ordering::Equal => self.d[i],
            std::cmp::Ordering::Greater => 0,
        }
    }

    /// Bilinear extension of [`CartanType::euler`].
    pub fn euler_form(&self, mu: &Weight, nu: &Weight) -> i64 {
        let mut total = 0;
        for (i, &a) in mu.0.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in nu.0.iter().enumerate() {
                if b != 0 {
                    total += a * b * self.euler(i, j);
                }
            }
        }
        total
    }

    /// `q_i = r_i s_i^{-1}`.
    pub fn q(&self, i: usize) -> Scalar {
        Scalar::monomial(self.d[i], -self.d[i])
    }

    /// `r_i - s_i`.
    pub fn r_minus_s(&self, i: usize) -> Scalar {
        Scalar::monomial(self.d[i], 0) - Scalar::monomial(0, self.d[i])
    }

    /// `c_ij^k = q_i^{k(k-1)/2} r^{k<j,i>} s^{-k<i,j>}`.
    pub fn serre_coefficient(&self, i: usize, j: usize, k: i64) -> Result<Scalar> {
        self.check_index(i)?;
        self.check_index(j)?;
        if i == j {
            return Err(Error::BadIndex("Serre coefficient needs i != j".into()));
        }
        let top = 1 - self.matrix[i][j];
        if k < 0 || k > top {
            return Err(Error::BadIndex(format!("k = {k} outside 0..={top}")));
        }
        let tri = k * (k - 1) / 2;
        Ok(Scalar::monomial(
            self.d[i] * tri + k * self.euler(j, i),
            -self.d[i] * tri - k * self.euler(i, j),
        ))
    }

    /// Scalar by which `ω_ν` conjugates an element of weight `γ`:
    /// `ω_ν x ω_ν^{-1} = r^{<γ,ν>} s^{-<ν,γ>} x`.
    pub fn omega_char(&self, nu: &Weight, gamma: &Weight) -> (i64, i64) {
        (self.euler_form(gamma, nu), -self.euler_form(nu, gamma))
    }

    /// `ω'_μ x ω'_μ^{-1} = r^{-<μ,γ>} s^{<γ,μ>} x`.
    pub fn omega_prime_char(&self, mu: &Weight, gamma: &Weight) -> (i64, i64) {
        (-self.euler_form(mu, gamma), self.euler_form(gamma, mu))
    }

    /// Combined character of `ω_ν ω'_μ` on weight `γ`, as exponents of `r, s`.
    pub fn toral_char(&self, nu: &Weight, mu: &Weight, gamma: &Weight) -> (i64, i64) {
        let (a1, b1) = self.omega_char(nu, gamma);
        let (a2, b2) = self.omega_prime_char(mu, gamma);
        (a1 + a2, b1 + b2)
    }

    pub fn zero_weight(&self) -> Weight {
        Weight(vec![0; self.rank])
    }

    pub fn simple_root(&self, i: usize) -> Weight {
        let mut w = vec![0; self.rank];
        w[i] = 1;
        Weight(w)
    }

    /// All `β ∈ Q⁺` of the given height, in lexicographically decreasing
    /// coordinate order.
    pub fn weights_of_height(&self, h: usize) -> Vec<Weight> {
        let mut out = Vec::new();
        let mut cur = vec![0i64; self.rank];
        fn rec(i: usize, left: i64, cur: &mut Vec<i64>, out: &mut Vec<Weight>) {
            if i + 1 == cur.len() {
                cur[i] = left;
                out.push(Weight(cur.clone()));
                return;
            }
            for a in (0..=left).rev() {
                cur[i] = a;
                rec(i + 1, left - a, cur, out);
            }
        }
        rec(0, h as i64, &mut cur, &mut out);
        out
    }

    /// All `β ∈ Q⁺` with height at most `h`, ordered by height.
    pub fn weights_up_to(&self, h: usize) -> Vec<Weight> {
        (0..=h).flat_map(|k| self.weights_of_height(k)).collect()
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Config(format!("unknown Cartan type '{s}'"));
        let (head, tail) = s.split_at(s.chars().next().map_or(0, char::len_utf8));
        let rank: usize = tail.parse().map_err(|_| bad())?;
        match (head.to_ascii_uppercase().as_str(), rank) {
            ("A", n) if n >= 1 => Ok(CartanType::a(n)),
            ("B", 2) => Ok(CartanType::b2()),
            ("G", 2) => Ok(CartanType::g2()),
            _ => Err(bad()),
        }
    }
}

/// An element of the root lattice, in coordinates over the simple roots.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&m| m >= 0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&m| m == 0)
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, k: i64) -> Weight {
        Weight(self.0.iter().map(|a| a * k).collect())
    }

    /// Weight of a word of simple-root letters.
    pub fn of_word(rank: usize, word: &[u8]) -> Weight {
        let mut w = vec![0; rank];
        for &i in word {
            w[i as usize] += 1;
        }
        Weight(w)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|m| m.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl FromStr for Weight {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('[').trim_end_matches(']');
        s.split(',')
            .map(|p| {
                p.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::Config(format!("bad weight coordinate '{p}'")))
            })
            .collect::<Result<Vec<_>>>()
            .map(Weight)
    }
}

/// `(n)_v = 1 + v + ... + v^{n-1}`.
pub fn q_number(n: i64, v: &Scalar) -> Scalar {
    let mut acc = Scalar::zero();
    let mut p = Scalar::one();
    for _ in 0..n.max(0) {
        acc = &acc + &p;
        p = &p * v;
    }
    acc
}

/// `(n)_v! = (1)_v (2)_v ... (n)_v`.
pub fn q_factorial(n: i64, v: &Scalar) -> Scalar {
    (1..=n).fold(Scalar::one(), |acc, k| acc * q_number(k, v))
}

/// Gaussian binomial, computed by the Pascal recursion so no division occurs.
pub fn q_binomial(n: i64, k: i64, v: &Scalar) -> Result<Scalar> {
    if k < 0 || k > n {
        return Err(Error::BadIndex(format!("binomial ({n} choose {k})")));
    }
    // row[j] = binom(m, j)_v, built up with binom(m+1, j) = binom(m, j-1) + v^j binom(m, j)
    let mut row = vec![Scalar::one()];
    for m in 0..n {
        let mut next = vec![Scalar::one(); (m + 2) as usize];
        let mut vj = v.clone();
        for j in 1..=m as usize {
            next[j] = &row[j - 1] + &(&vj * &row[j]);
            vj = &vj * v;
        }
        row = next;
    }
    Ok(row[k as usize].clone())
}
