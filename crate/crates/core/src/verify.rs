//! Verification suites and the dispatcher that runs them for a fixed
//! configuration. Entry order is deterministic for a given configuration.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::relations::defining_relations;
use crate::algebra::{Element, Engine, Letter, Mutation, Parent, TensorElement};
use crate::category_o::sample_lambdas;
use crate::error::{Error, Result};
use crate::hopf::Coproduct;
use crate::pairing::Strategy;
use crate::report::Report;
use crate::root_data::{CartanType, Weight};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Relations,
    Commutation,
    Hopf,
    Pairing,
    Lemma51,
    Prop51,
    Casimir,
    Thm61,
    CategoryO,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Relations,
        Suite::Commutation,
        Suite::Hopf,
        Suite::Pairing,
        Suite::Lemma51,
        Suite::Prop51,
        Suite::Casimir,
        Suite::Thm61,
        Suite::CategoryO,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Relations => "relations",
            Suite::Commutation => "commutation",
            Suite::Hopf => "hopf",
            Suite::Pairing => "pairing",
            Suite::Lemma51 => "lemma51",
            Suite::Prop51 => "prop51",
            Suite::Casimir => "casimir",
            Suite::Thm61 => "thm61",
            Suite::CategoryO => "categoryO",
        }
    }

    /// Parse a suite name; `all` expands to every suite.
    pub fn parse_list(s: &str) -> Result<Vec<Suite>> {
        if s == "all" {
            return Ok(Suite::ALL.to_vec());
        }
        Suite::ALL
            .into_iter()
            .find(|x| x.name().eq_ignore_ascii_case(s))
            .map(|x| vec![x])
            .ok_or_else(|| Error::Config(format!("unknown suite `{s}`")))
    }
}

/// Parameters shared by every suite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    pub cartan: CartanType,
    /// Truncation level `L`.
    pub height: usize,
    /// Module depth `D`.
    pub depth: usize,
    /// Highest weights for the category suite; five samples when empty.
    pub lambdas: Vec<Weight>,
    pub seed: u64,
    pub mutation: Mutation,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            cartan: CartanType::a(1),
            height: 3,
            depth: 4,
            lambdas: Vec::new(),
            seed: 0,
            mutation: Mutation::None,
        }
    }
}

impl SuiteConfig {
    pub fn validate(&self) -> Result<()> {
        if self.height == 0 {
            return Err(Error::Config("height must be at least 1".into()));
        }
        if self.depth == 0 {
            return Err(Error::Config("depth must be at least 1".into()));
        }
        if self.height > 8 || self.depth > 8 {
            return Err(Error::Config("height and depth are limited to 8".into()));
        }
        for l in &self.lambdas {
            if l.0.len() != self.cartan.rank() {
                return Err(Error::Config(format!(
                    "lambda {l} does not have {} coordinates",
                    self.cartan.rank()
                )));
            }
        }
        Ok(())
    }

    /// An engine whose height limit covers every suite of this config.
    pub fn engine(&self) -> Engine {
        let h = (self.height + 1).max(self.depth).max(6);
        Engine::with_options(self.cartan.clone(), h, self.mutation)
    }
}

/// Run `suites` in order on one engine and merge the reports.
pub fn run_suites(suites: &[Suite], config: &SuiteConfig) -> Result<Report> {
    config.validate()?;
    let engine = config.engine();
    let name = if suites.len() == 1 { suites[0].name() } else { "all" };
    let mut report = Report::new(name);
    for &s in suites {
        report.extend(run_suite(&engine, s, config)?);
    }
    Ok(report)
}

pub fn run_suite(engine: &Engine, suite: Suite, config: &SuiteConfig) -> Result<Report> {
    let l = config.height;
    match suite {
        Suite::Relations => engine.verify_relations(),
        Suite::Commutation => engine.verify_commutation(3),
        Suite::Hopf => engine.verify_hopf(l.min(3), config.seed),
        Suite::Pairing => engine.verify_pairing(l, config.seed),
        Suite::Lemma51 => engine.verify_canonical_identities(l - 1, l),
        Suite::Prop51 => engine.verify_completed_element(l),
        Suite::Casimir => engine.verify_casimir(l),
        Suite::Thm61 => engine.verify_projector(l),
        Suite::CategoryO => {
            let lambdas = if config.lambdas.is_empty() {
                sample_lambdas(engine.rank())
            } else {
                config.lambdas.clone()
            };
            engine.verify_category_o(&lambdas, config.depth)
        }
    }
}

fn upper_letter(parent: Parent, i: usize) -> Letter {
    if parent == Parent::B {
        Letter::Epp(i)
    } else {
        Letter::E(i)
    }
}

fn lower_letter(parent: Parent, i: usize) -> Letter {
    if parent == Parent::Bbar {
        Letter::Fp(i)
    } else {
        Letter::F(i)
    }
}

/// A random element of `U` of height at most `h`: up to three words, each
/// with at most `h` root letters and a few toral letters.
fn random_u_element(engine: &Engine, rng: &mut ChaCha8Rng, h: usize) -> Result<Element> {
    let n = engine.rank();
    let mut acc = engine.zero(Parent::U);
    for _ in 0..rng.gen_range(1..=3) {
        let mut word = Vec::new();
        let roots = rng.gen_range(0..=h);
        let torals = rng.gen_range(0..=2);
        for _ in 0..roots {
            let i = rng.gen_range(0..n);
            word.push(if rng.gen_bool(0.5) { Letter::E(i) } else { Letter::F(i) });
        }
        for _ in 0..torals {
            let i = rng.gen_range(0..n);
            let k = if rng.gen_bool(0.5) { 1 } else { -1 };
            let l = if rng.gen_bool(0.5) { Letter::W(i, k) } else { Letter::Wp(i, k) };
            let at = rng.gen_range(0..=word.len());
            word.insert(at, l);
        }
        let c = Scalar::from_int(rng.gen_range(1..=3)) * Scalar::monomial(rng.gen_range(-1..=1), rng.gen_range(-1..=1));
        acc = acc.add(&engine.normal_form(&word, Parent::U)?.scale(&c))?;
    }
    Ok(acc)
}

impl Engine {
    /// Every defining relation of `U`, `B` and `B̄` normalizes to zero, and
    /// so do the Serre elements multiplied out letter by letter.
    pub fn verify_relations(&self) -> Result<Report> {
        let mut report = Report::new("relations");
        let t = self.cartan().clone();
        for parent in [Parent::U, Parent::B, Parent::Bbar] {
            for rel in defining_relations(&t, parent)? {
                let x = rel.evaluate(self)?;
                report.zero(
                    "defining-relation",
                    "each defining relation normalizes to zero",
                    format!("{parent} {}", rel.name),
                    &x,
                    x.is_zero(),
                );
            }
        }
        for parent in [Parent::U, Parent::B, Parent::Bbar] {
            for upper in [true, false] {
                let family = if upper { parent.upper_family() } else { parent.lower_family() };
                for i in 0..t.rank() {
                    for j in 0..t.rank() {
                        if i == j {
                            continue;
                        }
                        let kind = if upper { upper_letter(parent, i) } else { lower_letter(parent, i) };
                        let x = self.serre_relation(parent, family, upper, i, j)?;
                        report.zero(
                            "serre-element",
                            "quantum Serre elements vanish",
                            format!("{parent} {} i={} j={}", kind_name(kind), i + 1, j + 1),
                            &x,
                            x.is_zero(),
                        );
                    }
                }
            }
        }
        Ok(report)
    }

    /// The closed form for `e''_i^n f_j^m` against rewriting the word
    /// itself, for all `n, m ≤ max` and all `i, j`.
    pub fn verify_commutation(&self, max: usize) -> Result<Report> {
        let mut report = Report::new("commutation");
        let n_rank = self.rank();
        for i in 0..n_rank {
            for j in 0..n_rank {
                for n in 0..=max {
                    for m in 0..=max {
                        let mut word = vec![Letter::Epp(i); n];
                        word.extend(std::iter::repeat_n(Letter::F(j), m));
                        let brute = self.normal_form(&word, Parent::B)?;
                        let closed = self.commutation_lemma(n, m, i, j)?;
                        let d = brute.sub(&closed)?;
                        report.zero(
                            "closed-form",
                            "closed form of e''_i^n f_j^m agrees with rewriting",
                            format!("n={n} m={m} i={} j={}", i + 1, j + 1),
                            &d,
                            d.is_zero(),
                        );
                    }
                }
            }
        }
        Ok(report)
    }

    /// Coproducts respect every defining relation of their source, `Δ` is
    /// coassociative, and the antipode axiom holds on generators and on 50
    /// random elements of height at most `h`.
    pub fn verify_hopf(&self, h: usize, seed: u64) -> Result<Report> {
        let mut report = Report::new("hopf");
        let t = self.cartan().clone();
        for variant in Coproduct::ALL {
            for rel in defining_relations(&t, variant.source())? {
                let mut acc = TensorElement::zero(&variant.targets(), t.rank());
                for (w, c) in &rel.terms {
                    acc = acc.add(&self.coproduct_word(variant, w)?.scale(c))?;
                }
                report.zero(
                    "homomorphism",
                    "each coproduct is an algebra homomorphism on defining relations",
                    format!("{} {}", variant.name(), rel.name),
                    &acc,
                    acc.is_zero(),
                );
            }
        }
        let mut samples: Vec<(String, Element)> = Vec::new();
        for i in 0..t.rank() {
            samples.push((format!("e[{}]", i + 1), self.e(i)));
            samples.push((format!("f[{}]", i + 1), self.f(i)));
            samples.push((format!("w[{}]", i + 1), self.omega(i, 1)));
            samples.push((format!("v[{}]", i + 1), self.omega_p(i, 1)));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for k in 0..50 {
            samples.push((format!("random #{k}"), random_u_element(self, &mut rng, h)?));
        }
        for (name, x) in &samples {
            let d = self.coproduct(Coproduct::Standard, x)?;
            let diff = self
                .expand_leg(&d, 0, Coproduct::Standard)?
                .sub(&self.expand_leg(&d, 1, Coproduct::Standard)?)?;
            report.zero("coassociativity", "(Δ ⊗ 1)Δ = (1 ⊗ Δ)Δ", name, &diff, diff.is_zero());
            let eps = self.scalar(Parent::U, self.counit(x)?);
            for (left, id) in [(true, "antipode-left"), (false, "antipode-right")] {
                let diff = self.antipode_convolution(x, left)?.sub(&eps)?;
                report.zero(id, "m(S ⊗ 1)Δ = m(1 ⊗ S)Δ = ε", name, &diff, diff.is_zero());
            }
        }
        Ok(report)
    }

    /// Nondegeneracy of every Gram matrix up to `max_height`, antipode
    /// invariance, toral factors and weight orthogonality on all basis
    /// pairs, the exchange formulas on generator-level elements, and
    /// recursion-order independence on 200 random pairs.
    pub fn verify_pairing(&self, max_height: usize, seed: u64) -> Result<Report> {
        let mut report = Report::new("pairing");
        let t = self.cartan().clone();
        let u = Parent::U;
        let weights = t.weights_up_to(max_height);
        let mut plus = Vec::new();
        let mut minus = Vec::new();
        for beta in &weights {
            let g = self.gram(beta)?;
            let det = g.determinant();
            report.zero(
                "nondegenerate",
                "the pairing is nondegenerate on each weight space",
                format!("β={beta} dim {}", g.dim()),
                &"det = 0",
                !det.is_zero(),
            );
            for w in &g.plus_basis {
                plus.push((beta.clone(), w.clone()));
            }
            for w in &g.minus_basis {
                minus.push((beta.clone(), w.clone()));
            }
        }
        let nu = t.simple_root(0);
        let mu = t.simple_root(t.rank() - 1).scale(-1);
        let factor = Scalar::monomial(t.euler_form(&mu, &nu), -t.euler_form(&nu, &mu));
        for (bx, wx) in &plus {
            let x = self.upper_word(u, wx);
            let sx = self.s(&x)?;
            let xo = self.mul(&x, &self.omega_weight(u, &nu))?;
            for (by, wy) in &minus {
                let y = self.lower_word(u, wy);
                let v = self.pair(&x, &y)?;
                let inst = format!("x={x} y={y}");
                if bx != by {
                    report.zero(
                        "orthogonal",
                        "distinct weight spaces pair to zero",
                        &inst,
                        &v,
                        v.is_zero(),
                    );
                    continue;
                }
                let d = &self.pair(&sx, &self.s(&y)?)? - &v;
                report.zero("antipode-invariant", "<S(x), S(y)> = <x, y>", &inst, &d, d.is_zero());
                let yo = self.mul(&y, &self.omega_p_weight(u, &mu))?;
                let d = &self.pair(&xo, &yo)? - &(&factor * &v);
                report.zero(
                    "toral-factor",
                    "<x w_nu, y w'_mu> = r^<mu,nu> s^-<nu,mu> <x, y>",
                    &inst,
                    &d,
                    d.is_zero(),
                );
            }
        }

        let n = t.rank();
        let mut xs = vec![self.one(u)];
        let mut ys = vec![self.one(u)];
        for i in 0..n {
            xs.push(self.e(i));
            ys.push(self.f(i));
            for j in 0..n {
                xs.push(self.normal_form(&[Letter::E(i), Letter::E(j)], u)?);
                ys.push(self.normal_form(&[Letter::F(i), Letter::F(j)], u)?);
            }
        }
        for x in &xs {
            for y in &ys {
                let inst = format!("x={x} y={y}");
                let d = self.exchange_yx(x, y)?.sub(&self.mul(y, x)?)?;
                report.zero(
                    "exchange-yx",
                    "yx = sum <x(1), S y(1)> <x(3), y(3)> x(2) y(2)",
                    &inst,
                    &d,
                    d.is_zero(),
                );
                let d = self.exchange_xy(x, y)?.sub(&self.mul(x, y)?)?;
                report.zero(
                    "exchange-xy",
                    "xy = sum <x(1), y(1)> <x(3), S y(3)> y(2) x(2)",
                    &inst,
                    &d,
                    d.is_zero(),
                );
            }
        }

        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for k in 0..200 {
            let mut word = |upper: bool| {
                let len = rng.gen_range(0..=4);
                (0..len)
                    .map(|_| {
                        let i = rng.gen_range(0..n);
                        let e = if rng.gen_bool(0.5) { 1 } else { -1 };
                        match (upper, rng.gen_range(0..3)) {
                            (true, 0) => Letter::W(i, e),
                            (false, 0) => Letter::Wp(i, e),
                            (true, _) => Letter::E(i),
                            (false, _) => Letter::F(i),
                        }
                    })
                    .collect::<Vec<_>>()
            };
            let (xw, yw) = (word(true), word(false));
            let x = self.normal_form(&xw, u)?;
            let y = self.normal_form(&yw, u)?;
            let v = self.pair_with(Strategy::Balanced, &x, &y)?;
            let a = self.pair_with(Strategy::XFirst, &x, &y)?;
            let b = self.pair_with(Strategy::YFirst, &x, &y)?;
            let inst = format!("random #{k}: x={x} y={y}");
            let d = &a - &v;
            let e = &b - &v;
            report.zero(
                "recursion-order",
                "splitting x first or y first gives the same value",
                inst,
                &format!("{d}, {e}"),
                d.is_zero() && e.is_zero(),
            );
        }
        Ok(report)
    }
}

fn kind_name(l: Letter) -> &'static str {
    match l {
        Letter::E(_) => "e",
        Letter::Epp(_) => "e''",
        Letter::F(_) => "f",
        Letter::Fp(_) => "f'",
        _ => "toral",
    }
}
