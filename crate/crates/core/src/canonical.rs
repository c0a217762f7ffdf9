//! Canonical tensors `C_β`, the completed element `𝒞` and its inverse, and
//! the quantum Casimir element `Ω`, all truncated at a height cutoff.
//!
//! Completed sums are stored grade by grade. A grade is the weight of the
//! upper word in the left leg (for tensors) or of the upper word (for
//! elements). Every check names the grades it fully determines.

use std::collections::BTreeMap;
use std::sync::Arc;

use rayon::prelude::*;

use crate::algebra::{Element, Engine, Parent, TensorElement};
use crate::error::{Error, Result};
use crate::report::Report;
use crate::root_data::Weight;
use crate::scalar::Scalar;

/// A completed tensor truncated at `cutoff`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedTensor {
    pub cutoff: usize,
    pub grades: BTreeMap<Weight, TensorElement>,
}

impl TruncatedTensor {
    /// Sum of all stored grades.
    pub fn total(&self) -> Result<TensorElement> {
        let mut it = self.grades.values();
        let first = it.next().ok_or_else(|| Error::Config("empty truncated tensor".into()))?;
        let mut acc = first.clone();
        for g in it {
            acc = acc.add(g)?;
        }
        Ok(acc)
    }
}

/// A completed element truncated at `cutoff`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedElement {
    pub cutoff: usize,
    pub grades: BTreeMap<Weight, Element>,
}

impl TruncatedElement {
    pub fn total(&self) -> Result<Element> {
        let mut it = self.grades.values();
        let first = it.next().ok_or_else(|| Error::Config("empty truncated element".into()))?;
        let mut acc = first.clone();
        for g in it {
            acc = acc.add(g)?;
        }
        Ok(acc)
    }

    pub fn grade(&self, beta: &Weight) -> Option<&Element> {
        self.grades.get(beta)
    }
}

/// Record one entry per weight in `weights`, comparing the grade of `diff`
/// (split by the upper weight of leg `leg`) against zero.
pub(crate) fn check_tensor_grades(
    report: &mut Report,
    id: &str,
    anchor: &str,
    prefix: &str,
    diff: &TensorElement,
    leg: usize,
    weights: &[Weight],
) {
    let grades = diff.grades_by_upper(leg);
    for w in weights {
        let inst = format!("{prefix}grade {w}");
        match grades.get(w) {
            Some(t) => report.zero(id, anchor, inst, t, t.is_zero()),
            None => report.pass(id, anchor, inst),
        }
    }
}

pub(crate) fn check_element_grades(
    report: &mut Report,
    id: &str,
    anchor: &str,
    prefix: &str,
    diff: &Element,
    weights: &[Weight],
) {
    let grades = diff.grades();
    for w in weights {
        let inst = format!("{prefix}grade {w}");
        match grades.get(w) {
            Some(t) => report.zero(id, anchor, inst, t, t.is_zero()),
            None => report.pass(id, anchor, inst),
        }
    }
}

fn pair2(a: &Element, b: &Element) -> TensorElement {
    TensorElement::pure(&[a, b])
}

/// `<β, β>` under the Euler form.
fn self_form(engine: &Engine, beta: &Weight) -> i64 {
    engine.cartan().euler_form(beta, beta)
}

impl Engine {
    /// `ω_ν` in `parent`.
    pub fn omega_weight(&self, parent: Parent, nu: &Weight) -> Element {
        self.toral(parent, nu, &self.cartan().zero_weight())
    }

    /// `ω'_μ` in `parent`.
    pub fn omega_p_weight(&self, parent: Parent, mu: &Weight) -> Element {
        self.toral(parent, &self.cartan().zero_weight(), mu)
    }

    /// `k_β = ω'_β⁻¹`.
    pub fn k(&self, parent: Parent, beta: &Weight) -> Element {
        self.omega_p_weight(parent, &beta.neg())
    }

    /// `C_β = Σ_r x_r ⊗ y_r` in `U ⊗ U`.
    pub fn canonical_tensor(&self, beta: &Weight) -> Result<TensorElement> {
        let cache = &self.pairing_cache().canonical;
        if let Some(c) = cache.read().expect("cache lock").get(beta) {
            return Ok((**c).clone());
        }
        let g = self.gram(beta)?;
        let xs: Vec<Element> = g.plus_basis.iter().map(|w| self.upper_word(Parent::U, w)).collect();
        let ys = self.dual_basis(beta)?;
        let c = self.sum_pure(&xs, &ys, [Parent::U, Parent::U]);
        cache
            .write()
            .expect("cache lock")
            .insert(beta.clone(), Arc::new(c.clone()));
        Ok(c)
    }

    /// `C_β` computed from an arbitrary basis of `U⁺_β`.
    pub fn canonical_tensor_from(&self, beta: &Weight, plus: &[Element]) -> Result<TensorElement> {
        self.check_height(beta)?;
        let minus = self.basis_of_weight_space(beta, crate::algebra::Side::Minus, Parent::U)?;
        if plus.len() != minus.len() {
            return Err(Error::SingularGram(format!(
                "weight {beta}: {} vectors for a space of dimension {}",
                plus.len(),
                minus.len()
            )));
        }
        let ys: Vec<Element> = minus.iter().map(|w| self.lower_word(Parent::U, w)).collect();
        let mut gram = Vec::with_capacity(plus.len());
        for x in plus {
            let row: Result<Vec<Scalar>> = ys.iter().map(|y| self.pair(x, y)).collect();
            gram.push(row?);
        }
        let inverse = crate::linalg::inverse(&gram)
            .map_err(|_| Error::SingularGram(format!("weight {beta}")))?;
        let dual = self.dual_from(&minus, &inverse);
        Ok(self.sum_pure(plus, &dual, [Parent::U, Parent::U]))
    }

    fn sum_pure(&self, xs: &[Element], ys: &[Element], parents: [Parent; 2]) -> TensorElement {
        let mut acc = TensorElement::zero(&parents, self.rank());
        for (x, y) in xs.iter().zip(ys) {
            let t = pair2(x, y).reparent(&parents).expect("legs fit their parents");
            acc = acc.add(&t).expect("same parents");
        }
        acc
    }

    /// `C'_β = (1 ⊗ S⁻¹)(C_β)`.
    pub fn c_prime(&self, beta: &Weight) -> Result<TensorElement> {
        self.canonical_tensor(beta)?.map_leg(1, Parent::U, |y| self.s_inv(y))
    }

    /// `C''_β = (φ ⊗ 1)(C_β)` in `B ⊗ U`.
    pub fn c_double_prime(&self, beta: &Weight) -> Result<TensorElement> {
        self.canonical_tensor(beta)?.map_leg(0, Parent::B, |x| self.phi(x))
    }

    /// Grade `β` of `𝒞`: `(1 ⊗ k_β⁻¹) C'_β` in `U ⊗ B`.
    pub fn c_element_grade(&self, beta: &Weight) -> Result<TensorElement> {
        let kinv = self.k(Parent::U, &beta.neg());
        self.c_prime(beta)?
            .map_leg(1, Parent::B, |y| self.mul(&kinv, y))
    }

    /// `𝒞` up to height `cutoff`.
    pub fn c_element(&self, cutoff: usize) -> Result<TruncatedTensor> {
        self.truncated_tensor(cutoff, |b| self.c_element_grade(b))
    }

    /// Grade `β` of `𝒞⁻¹`:
    /// `r^{-<β,β>} s^{<β,β>} (ω_β ⊗ k_β⁻¹)(S⁻¹ ⊗ S⁻¹)(C_β)` in `U ⊗ B`.
    pub fn c_inverse_grade(&self, beta: &Weight) -> Result<TensorElement> {
        let n = self_form(self, beta);
        let c = Scalar::monomial(-n, n);
        let w = self.omega_weight(Parent::U, beta);
        let kinv = self.k(Parent::U, &beta.neg());
        let t = self
            .canonical_tensor(beta)?
            .map_leg(0, Parent::U, |x| self.mul(&w, &self.s_inv(x)?))?
            .map_leg(1, Parent::B, |y| self.mul(&kinv, &self.s_inv(y)?))?;
        Ok(t.scale(&c))
    }

    pub fn c_inverse(&self, cutoff: usize) -> Result<TruncatedTensor> {
        self.truncated_tensor(cutoff, |b| self.c_inverse_grade(b))
    }

    /// Grade `β` of `𝒞̃ = Σ (rs⁻¹)^{<β,β>} (1 ⊗ k_β)(S ⊗ 1)(C_β)`.
    pub(crate) fn c_tilde_grade(&self, beta: &Weight) -> Result<TensorElement> {
        let n = self_form(self, beta);
        let k = self.k(Parent::U, beta);
        let t = self
            .canonical_tensor(beta)?
            .map_leg(0, Parent::U, |x| self.s(x))?
            .map_leg(1, Parent::U, |y| self.mul(&k, y))?;
        Ok(t.scale(&Scalar::monomial(n, -n)))
    }

    /// Grade `β` of `𝒞̃⁻¹ = Σ (rs⁻¹)^{<β,β>} (ω_β⁻¹ ⊗ k_β)(C_β)`.
    pub(crate) fn c_tilde_inverse_grade(&self, beta: &Weight) -> Result<TensorElement> {
        let n = self_form(self, beta);
        let w = self.omega_weight(Parent::U, &beta.neg());
        let k = self.k(Parent::U, beta);
        let t = self
            .canonical_tensor(beta)?
            .map_leg(0, Parent::U, |x| self.mul(&w, x))?
            .map_leg(1, Parent::U, |y| self.mul(&k, y))?;
        Ok(t.scale(&Scalar::monomial(n, -n)))
    }

    fn truncated_tensor<F>(&self, cutoff: usize, grade: F) -> Result<TruncatedTensor>
    where
        F: Fn(&Weight) -> Result<TensorElement> + Sync,
    {
        let weights = self.cartan().weights_up_to(cutoff);
        for b in &weights {
            self.check_height(b)?;
        }
        let grades: Result<Vec<(Weight, TensorElement)>> = weights
            .par_iter()
            .map(|b| grade(b).map(|t| (b.clone(), t)))
            .collect();
        Ok(TruncatedTensor {
            cutoff,
            grades: grades?.into_iter().collect(),
        })
    }

    /// `Ω_β = Σ_r S(y_r) x_r`.
    pub fn casimir_grade(&self, beta: &Weight) -> Result<Element> {
        let c = self.canonical_tensor(beta)?;
        let t = c.flip().map_leg(0, Parent::U, |y| self.s(y))?;
        self.contract(&t, Parent::U)
    }

    pub fn casimir(&self, cutoff: usize) -> Result<TruncatedElement> {
        let weights = self.cartan().weights_up_to(cutoff);
        for b in &weights {
            self.check_height(b)?;
        }
        let grades: Result<Vec<(Weight, Element)>> = weights
            .par_iter()
            .map(|b| self.casimir_grade(b).map(|x| (b.clone(), x)))
            .collect();
        Ok(TruncatedElement {
            cutoff,
            grades: grades?.into_iter().collect(),
        })
    }
}

/// Checks of the canonical-tensor identities.
impl Engine {
    /// The four commutator identities for `C_β` with `β` of height at most
    /// `commutator_height`, and the two telescoping sums up to
    /// `telescoping_height`.
    pub fn verify_canonical_identities(&self, commutator_height: usize, telescoping_height: usize) -> Result<Report> {
        let mut report = Report::new("lemma51");
        let t = self.cartan().clone();
        let u = Parent::U;
        let b = Parent::B;
        for beta in t.weights_up_to(commutator_height) {
            for i in 0..t.rank() {
                let up = beta.add(&t.simple_root(i));
                self.check_height(&up)?;
                let inst = format!("i={} β={beta} ", i + 1);
                let d = t.r_minus_s(i);

                // [ω_i⁻¹ ⊗ e''_i, (1 ⊗ k⁻¹) C'_{β+α_i}] = (1 ⊗ k⁻¹) C'_β (ω_i⁻¹ e_i ⊗ (r_i - s_i))
                let x = pair2(&self.omega(i, -1), &self.epp(i)).reparent(&[u, b])?;
                let cu = self.c_element_grade(&up)?;
                let lhs = self.tensor_mul(&x, &cu)?.sub(&self.tensor_mul(&cu, &x)?)?;
                let we = self.mul(&self.omega(i, -1), &self.e(i))?;
                let y = pair2(&we, &self.one(b)).scale(&d);
                let rhs = self.tensor_mul(&self.c_element_grade(&beta)?, &y)?;
                let diff = lhs.sub(&rhs)?;
                report.zero(
                    "kashiwara-commutator",
                    "commutator of w_i^-1 ⊗ e''_i with a grade of the completed canonical element",
                    &inst,
                    &diff,
                    diff.is_zero(),
                );

                // [f_i ⊗ ω'_i, C''_{β+α_i}(1 ⊗ k)] = -(1 ⊗ f_i) C''_β (1 ⊗ k)
                let x = pair2(&self.f(i).reparent(b)?, &self.omega_p(i, 1));
                let ku = self.k(u, &up);
                let cu = self.c_double_prime(&up)?.map_leg(1, u, |y| self.mul(y, &ku))?;
                let lhs = self.tensor_mul(&x, &cu)?.sub(&self.tensor_mul(&cu, &x)?)?;
                let kb = self.k(u, &beta);
                let cb = self.c_double_prime(&beta)?.map_leg(1, u, |y| self.mul(y, &kb))?;
                let fi = pair2(&self.one(b), &self.f(i));
                let rhs = self.tensor_mul(&fi, &cb)?.neg();
                let diff = lhs.sub(&rhs)?;
                report.zero(
                    "phi-commutator",
                    "commutator of f_i ⊗ w'_i with the phi-image of a canonical tensor",
                    &inst,
                    &diff,
                    diff.is_zero(),
                );

                // [1 ⊗ e_i, C_{β+α_i}] = C_β (e_i ⊗ ω'_i) - (e_i ⊗ ω_i) C_β
                let cu = self.canonical_tensor(&up)?;
                let cb = self.canonical_tensor(&beta)?;
                let x = pair2(&self.one(u), &self.e(i));
                let lhs = self.tensor_mul(&x, &cu)?.sub(&self.tensor_mul(&cu, &x)?)?;
                let rhs = self
                    .tensor_mul(&cb, &pair2(&self.e(i), &self.omega_p(i, 1)))?
                    .sub(&self.tensor_mul(&pair2(&self.e(i), &self.omega(i, 1)), &cb)?)?;
                let diff = lhs.sub(&rhs)?;
                report.zero(
                    "e-commutator",
                    "commutator of 1 ⊗ e_i with a canonical tensor",
                    &inst,
                    &diff,
                    diff.is_zero(),
                );

                // [f_i ⊗ 1, C_{β+α_i}] = C_β (ω_i ⊗ f_i) - (ω'_i ⊗ f_i) C_β
                let x = pair2(&self.f(i), &self.one(u));
                let lhs = self.tensor_mul(&x, &cu)?.sub(&self.tensor_mul(&cu, &x)?)?;
                let rhs = self
                    .tensor_mul(&cb, &pair2(&self.omega(i, 1), &self.f(i)))?
                    .sub(&self.tensor_mul(&pair2(&self.omega_p(i, 1), &self.f(i)), &cb)?)?;
                let diff = lhs.sub(&rhs)?;
                report.zero(
                    "f-commutator",
                    "commutator of f_i ⊗ 1 with a canonical tensor",
                    &inst,
                    &diff,
                    diff.is_zero(),
                );
            }
        }
        for beta in t.weights_up_to(telescoping_height) {
            let (left, right) = self.telescoping_sums(&beta)?;
            let one = TensorElement::one(&[u, u], t.rank());
            let want = if beta.is_zero() { one } else { TensorElement::zero(&[u, u], t.rank()) };
            let inst = format!("β={beta}");
            let d = left.sub(&want)?;
            report.zero(
                "antipode-telescoping-right",
                "sum of C_γ (w_δ ⊗ 1)(S ⊗ 1)(C_δ) over γ+δ=β is δ_β0",
                &inst,
                &d,
                d.is_zero(),
            );
            let d = right.sub(&want)?;
            report.zero(
                "antipode-telescoping-left",
                "sum of (w_γ ⊗ 1)(S ⊗ 1)(C_γ) C_δ over γ+δ=β is δ_β0",
                &inst,
                &d,
                d.is_zero(),
            );
        }
        Ok(report)
    }

    /// `Σ_{γ+δ=β} C_γ (ω_δ ⊗ 1)(S ⊗ 1)(C_δ)` and
    /// `Σ_{γ+δ=β} (ω_γ ⊗ 1)(S ⊗ 1)(C_γ) C_δ`.
    pub fn telescoping_sums(&self, beta: &Weight) -> Result<(TensorElement, TensorElement)> {
        let u = Parent::U;
        let rank = self.rank();
        let mut left = TensorElement::zero(&[u, u], rank);
        let mut right = TensorElement::zero(&[u, u], rank);
        for gamma in self.cartan().weights_up_to(beta.height() as usize) {
            let delta = beta.sub(&gamma);
            if !delta.is_nonnegative() {
                continue;
            }
            let twisted = |w: &Weight| -> Result<TensorElement> {
                let om = self.omega_weight(u, w);
                self.canonical_tensor(w)?
                    .map_leg(0, u, |x| self.mul(&om, &self.s(x)?))
            };
            let cg = self.canonical_tensor(&gamma)?;
            let cd = self.canonical_tensor(&delta)?;
            left = left.add(&self.tensor_mul(&cg, &twisted(&delta)?)?)?;
            right = right.add(&self.tensor_mul(&twisted(&gamma)?, &cd)?)?;
        }
        Ok((left, right))
    }

    /// The completed-element identities: the two intertwining relations
    /// checked on grades below `cutoff`, and both inverse products on all
    /// grades up to `cutoff`.
    pub fn verify_completed_element(&self, cutoff: usize) -> Result<Report> {
        let mut report = Report::new("prop51");
        let t = self.cartan().clone();
        let (u, b) = (Parent::U, Parent::B);
        let c = self.c_element(cutoff)?.total()?;
        let inner = t.weights_up_to(cutoff.saturating_sub(1));
        for i in 0..t.rank() {
            let prefix = format!("i={} ", i + 1);
            // (ω_i⁻¹ ⊗ e''_i) 𝒞 = 𝒞 (ω_i⁻¹ ⊗ e''_i + (r_i - s_i) ω_i⁻¹ e_i ⊗ 1)
            let x = pair2(&self.omega(i, -1), &self.epp(i)).reparent(&[u, b])?;
            let we = self.mul(&self.omega(i, -1), &self.e(i))?;
            let y = pair2(&we, &self.one(b)).scale(&t.r_minus_s(i));
            let lhs = self.tensor_mul(&x, &c)?;
            let rhs = self.tensor_mul(&c, &x.add(&y)?)?;
            check_tensor_grades(
                &mut report,
                "intertwine-kashiwara",
                "w_i^-1 ⊗ e''_i intertwines the completed canonical element",
                &prefix,
                &lhs.sub(&rhs)?,
                0,
                &inner,
            );

            // (f_i ⊗ ω'_i + 1 ⊗ f_i)(φ ⊗ S)(𝒞) = (φ ⊗ S)(𝒞)(f_i ⊗ ω'_i)
            let g = c
                .map_leg(0, b, |x| self.phi(x))?
                .map_leg(1, u, |y| self.s(y))?;
            let fw = pair2(&self.f(i).reparent(b)?, &self.omega_p(i, 1));
            let left = fw.add(&pair2(&self.one(b), &self.f(i)))?;
            let diff = self.tensor_mul(&left, &g)?.sub(&self.tensor_mul(&g, &fw)?)?;
            check_tensor_grades(
                &mut report,
                "intertwine-f",
                "f_i ⊗ w'_i + 1 ⊗ f_i intertwines the phi ⊗ S image of the completed element",
                &prefix,
                &diff,
                0,
                &inner,
            );
        }
        let ci = self.c_inverse(cutoff)?;
        let cc = self.c_element(cutoff)?;
        let all = t.weights_up_to(cutoff);
        let one = TensorElement::one(&[u, b], t.rank());
        for beta in &all {
            let mut l = TensorElement::zero(&[u, b], t.rank());
            let mut r = TensorElement::zero(&[u, b], t.rank());
            for (gamma, g) in &ci.grades {
                let delta = beta.sub(gamma);
                if let Some(d) = cc.grades.get(&delta) {
                    l = l.add(&self.tensor_mul(g, d)?)?;
                    r = r.add(&self.tensor_mul(d, g)?)?;
                }
            }
            if beta.is_zero() {
                l = l.sub(&one)?;
                r = r.sub(&one)?;
            }
            let inst = format!("grade {beta}");
            report.zero(
                "inverse-left",
                "product of the completed element's inverse with the completed element is 1 ⊗ 1",
                &inst,
                &l,
                l.is_zero(),
            );
            report.zero(
                "inverse-right",
                "product of the completed element with its inverse is 1 ⊗ 1",
                &inst,
                &r,
                r.is_zero(),
            );
        }
        // The auxiliary element 𝒞̃ and its inverse, in U ⊗ U.
        let one = TensorElement::one(&[u, u], t.rank());
        for beta in &all {
            let mut l = TensorElement::zero(&[u, u], t.rank());
            let mut r = TensorElement::zero(&[u, u], t.rank());
            for gamma in &all {
                let delta = beta.sub(gamma);
                if !delta.is_nonnegative() {
                    continue;
                }
                let ti = self.c_tilde_inverse_grade(gamma)?;
                l = l.add(&self.tensor_mul(&ti, &self.c_tilde_grade(&delta)?)?)?;
                r = r.add(&self.tensor_mul(&self.c_tilde_grade(gamma)?, &self.c_tilde_inverse_grade(&delta)?)?)?;
            }
            if beta.is_zero() {
                l = l.sub(&one)?;
                r = r.sub(&one)?;
            }
            let inst = format!("grade {beta}");
            report.zero("tilde-inverse-left", "auxiliary element times its inverse is 1 ⊗ 1", &inst, &l, l.is_zero());
            report.zero("tilde-inverse-right", "inverse times the auxiliary element is 1 ⊗ 1", &inst, &r, r.is_zero());
        }
        Ok(report)
    }

    /// `Ψ(u) Ω = Ω u` for every generator `u`, on grades below `cutoff`.
    pub fn verify_casimir(&self, cutoff: usize) -> Result<Report> {
        let mut report = Report::new("casimir");
        let omega = self.casimir(cutoff)?.total()?;
        let t = self.cartan().clone();
        let inner = t.weights_up_to(cutoff.saturating_sub(1));
        let mut gens: Vec<(String, Element)> = Vec::new();
        for i in 0..t.rank() {
            let k = i + 1;
            gens.push((format!("e[{k}]"), self.e(i)));
            gens.push((format!("f[{k}]"), self.f(i)));
            gens.push((format!("w[{k}]"), self.omega(i, 1)));
            gens.push((format!("w[{k}]^-1"), self.omega(i, -1)));
            gens.push((format!("v[{k}]"), self.omega_p(i, 1)));
            gens.push((format!("v[{k}]^-1"), self.omega_p(i, -1)));
        }
        for (name, g) in gens {
            let diff = self
                .mul(&self.psi(&g)?, &omega)?
                .sub(&self.mul(&omega, &g)?)?;
            check_element_grades(
                &mut report,
                "casimir-twist",
                "Psi(u) Omega = Omega u",
                &format!("u={name} "),
                &diff,
                &inner,
            );
        }
        Ok(report)
    }

    /// `C_β` does not depend on the basis: recompute it from reordered and
    /// recombined bases of `U⁺_β`.
    pub fn verify_basis_independence(&self, max_height: usize) -> Result<Report> {
        let mut report = Report::new("basis");
        for beta in self.cartan().weights_up_to(max_height) {
            let c = self.canonical_tensor(&beta)?;
            let g = self.gram(&beta)?;
            let xs: Vec<Element> = g.plus_basis.iter().map(|w| self.upper_word(Parent::U, w)).collect();
            let n = xs.len();
            let mut variants: Vec<(String, Vec<Element>)> = Vec::new();
            let mut rev = xs.clone();
            rev.reverse();
            variants.push(("reversed".into(), rev));
            let mut rot = xs.clone();
            rot.rotate_left(1.min(n));
            variants.push(("rotated".into(), rot));
            // x_k + r x_{k+1}: unitriangular, hence still a basis.
            let mut tri = xs.clone();
            for k in 0..n.saturating_sub(1) {
                tri[k] = xs[k].add(&xs[k + 1].scale(&Scalar::r()))?;
            }
            variants.push(("triangular".into(), tri));
            for (name, basis) in variants {
                let d = self.canonical_tensor_from(&beta, &basis)?.sub(&c)?;
                report.zero(
                    "basis-independence",
                    "the canonical tensor does not depend on the chosen basis",
                    format!("β={beta} {name}"),
                    &d,
                    d.is_zero(),
                );
            }
        }
        Ok(report)
    }
}
