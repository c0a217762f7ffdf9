//! The extremal projector `Γ = Σ_β Σ_r k_β⁻¹ S⁻¹(y_r) φ(x_r)` of `B`.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::algebra::{Element, Engine, NormalMonomial, Parent};
use crate::canonical::{check_element_grades, TruncatedElement};
use crate::error::{Error, Result};
use crate::report::Report;
use crate::root_data::{q_factorial, Series, Weight};
use crate::scalar::Scalar;

impl Engine {
    /// Grade `β` of `Γ`, normalized in `B`.
    pub fn gamma_grade(&self, beta: &Weight) -> Result<Element> {
        let t = self
            .c_element_grade(beta)?
            .map_leg(0, Parent::B, |x| self.phi(x))?
            .flip();
        self.contract(&t, Parent::B)
    }

    /// `Γ` up to height `cutoff`.
    pub fn gamma(&self, cutoff: usize) -> Result<TruncatedElement> {
        let weights = self.cartan().weights_up_to(cutoff);
        for b in &weights {
            self.check_height(b)?;
        }
        let grades: Result<Vec<(Weight, Element)>> = weights
            .par_iter()
            .map(|b| self.gamma_grade(b).map(|x| (b.clone(), x)))
            .collect();
        Ok(TruncatedElement {
            cutoff,
            grades: grades?.into_iter().collect(),
        })
    }

    /// `Σ_{n ≤ cutoff} (-1)^n (rs⁻¹)^{n(n-1)/2} f^{(n)} e''^n` in rank one,
    /// with `f^{(n)} = f^n / (n)_{rs⁻¹}!`.
    pub fn gamma_rank_one(&self, cutoff: usize) -> Result<TruncatedElement> {
        let t = self.cartan();
        if t.series() != Series::A || t.rank() != 1 {
            return Err(Error::WrongType {
                expected: "A1".into(),
                got: t.name(),
            });
        }
        let q = Scalar::monomial(1, -1);
        let mut grades = BTreeMap::new();
        for n in 0..=cutoff {
            let n = n as i64;
            let sign = if n % 2 == 0 { Scalar::one() } else { -Scalar::one() };
            let c = sign * q.pow(n * (n - 1) / 2)? * q_factorial(n, &q).inv()?;
            let word = vec![0u8; n as usize];
            let mut m = NormalMonomial::identity(1);
            m.lower = word.clone();
            m.upper = word;
            grades.insert(Weight(vec![n]), Element::monomial(Parent::B, m, c));
        }
        Ok(TruncatedElement { cutoff, grades })
    }

    /// `Σ_k a_k Γ b_k`, where `𝒞⁻¹ = Σ_k b'_k ⊗ a_k` and `b_k = φ(b'_k)`,
    /// from the grades of `𝒞⁻¹` and `Γ` up to `cutoff`.
    pub fn partition_of_unity(&self, cutoff: usize) -> Result<Element> {
        let gamma = self.gamma(cutoff)?.total()?;
        let ci = self.c_inverse(cutoff)?.total()?;
        let t = ci.map_leg(0, Parent::B, |x| self.phi(x))?;
        let mut right: BTreeMap<NormalMonomial, Element> = BTreeMap::new();
        let mut acc = self.zero(Parent::B);
        for (ms, c) in t.terms() {
            let gb = match right.get(&ms[0]) {
                Some(x) => x.clone(),
                None => {
                    let b = Element::monomial(Parent::B, ms[0].clone(), Scalar::one());
                    let x = self.mul(&gamma, &b)?;
                    right.insert(ms[0].clone(), x.clone());
                    x
                }
            };
            let a = Element::monomial(Parent::B, ms[1].clone(), c.clone());
            acc = acc.add(&self.mul(&a, &gb)?)?;
        }
        Ok(acc)
    }

    /// Annihilation, idempotence, partition of unity and toral-free
    /// membership of `Γ` truncated at `cutoff`. In rank one the closed form
    /// is compared as well.
    pub fn verify_projector(&self, cutoff: usize) -> Result<Report> {
        let mut report = Report::new("thm61");
        let t = self.cartan().clone();
        let g = self.gamma(cutoff)?;
        let gamma = g.total()?;
        let inner = t.weights_up_to(cutoff.saturating_sub(1));
        let all = t.weights_up_to(cutoff);
        for i in 0..t.rank() {
            let prefix = format!("i={} ", i + 1);
            let left = self.mul(&self.epp(i), &gamma)?;
            check_element_grades(&mut report, "annihilate-left", "e''_i Gamma = 0", &prefix, &left, &inner);
            let right = self.mul(&gamma, &self.f(i).reparent(Parent::B)?)?;
            check_element_grades(&mut report, "annihilate-right", "Gamma f_i = 0", &prefix, &right, &inner);
        }
        let sq = self.mul(&gamma, &gamma)?.sub(&gamma)?;
        check_element_grades(&mut report, "idempotent", "Gamma^2 = Gamma", "", &sq, &all);

        let pu = self.partition_of_unity(cutoff)?.sub(&self.one(Parent::B))?;
        check_element_grades(
            &mut report,
            "partition-of-unity",
            "sum of a_k Gamma b_k from the inverse completed element is 1",
            "",
            &pu,
            &inner,
        );

        for (beta, x) in &g.grades {
            let inst = format!("grade {beta}");
            let anchor = "each grade of Gamma is a combination of f-words times e''-words";
            let bad = x.terms().keys().find(|m| {
                !m.toral.is_identity()
                    || Weight::of_word(t.rank(), &m.upper) != *beta
                    || Weight::of_word(t.rank(), &m.lower) != *beta
            });
            match bad {
                None => report.pass("toral-free", anchor, inst),
                Some(m) => report.fail("toral-free", anchor, inst, m.display(Parent::B)),
            }
        }

        if t.series() == Series::A && t.rank() == 1 {
            let closed = self.gamma_rank_one(cutoff)?;
            for beta in &all {
                let d = g.grades[beta].sub(&closed.grades[beta])?;
                report.zero(
                    "rank-one-closed-form",
                    "Gamma agrees with the rank-one divided-power series",
                    format!("grade {beta}"),
                    &d,
                    d.is_zero(),
                );
            }
        }
        Ok(report)
    }
}
