//! Acceptance run: one line per criterion, nonzero exit if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use kashiwara_core::category_o::sample_lambdas;
use kashiwara_core::{CartanType, Engine, Mutation, Report, Result};

struct Outcome {
    checks: usize,
    failures: Vec<String>,
}

impl Outcome {
    fn new() -> Self {
        Outcome {
            checks: 0,
            failures: Vec::new(),
        }
    }

    fn absorb(&mut self, label: &str, r: &Report) {
        self.checks += r.entries.len();
        if r.entries.is_empty() {
            self.failures.push(format!("{label}: empty report"));
        }
        for e in r.failures() {
            self.failures.push(format!(
                "{label}: {} {} {}: {}",
                e.suite,
                e.id,
                e.instance,
                e.witness.clone().unwrap_or_default()
            ));
        }
    }

    fn require(&mut self, label: &str, ok: bool, why: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(format!("{label}: {}", why()));
        }
    }
}

fn engine(t: &CartanType) -> Engine {
    Engine::new(t.clone())
}

fn relations() -> Result<Outcome> {
    let mut out = Outcome::new();
    for t in [CartanType::a(1), CartanType::a(2), CartanType::b2(), CartanType::g2()] {
        out.absorb(&t.name(), &engine(&t).verify_relations()?);
    }
    Ok(out)
}

fn commutation() -> Result<Outcome> {
    let mut out = Outcome::new();
    for t in [CartanType::a(1), CartanType::a(2), CartanType::b2(), CartanType::g2()] {
        out.absorb(&t.name(), &engine(&t).verify_commutation(3)?);
    }
    Ok(out)
}

fn hopf() -> Result<Outcome> {
    let mut out = Outcome::new();
    for t in [CartanType::a(1), CartanType::a(2), CartanType::b2()] {
        out.absorb(&t.name(), &engine(&t).verify_hopf(3, 7)?);
    }
    Ok(out)
}

fn pairing() -> Result<Outcome> {
    let mut out = Outcome::new();
    for (t, h) in [(CartanType::a(1), 4), (CartanType::a(2), 3), (CartanType::b2(), 3)] {
        let r = engine(&t).verify_pairing(h, 11)?;
        let random = r.entries.iter().filter(|e| e.id == "recursion-order").count();
        out.require(&t.name(), random == 200, || format!("{random} random pairs"));
        out.absorb(&t.name(), &r);
    }
    Ok(out)
}

fn canonical() -> Result<Outcome> {
    let mut out = Outcome::new();
    for (t, commutators, telescoping, completed) in [
        (CartanType::a(1), 4, 4, 5),
        (CartanType::a(2), 2, 3, 3),
        (CartanType::b2(), 2, 3, 3),
    ] {
        let e = engine(&t);
        out.absorb(&t.name(), &e.verify_canonical_identities(commutators, telescoping)?);
        out.absorb(&t.name(), &e.verify_completed_element(completed)?);
    }
    Ok(out)
}

fn casimir() -> Result<Outcome> {
    let mut out = Outcome::new();
    for (t, l) in [(CartanType::a(1), 4), (CartanType::a(2), 3)] {
        out.absorb(&t.name(), &engine(&t).verify_casimir(l)?);
    }
    Ok(out)
}

fn projector() -> Result<Outcome> {
    let mut out = Outcome::new();
    for (t, l) in [(CartanType::a(1), 5), (CartanType::a(2), 3), (CartanType::b2(), 3)] {
        out.absorb(&t.name(), &engine(&t).verify_projector(l)?);
    }
    let e = engine(&CartanType::a(1));
    let same = e.gamma(6)? == e.gamma_rank_one(6)?;
    out.require("A1 closed form to n = 6", same, || "grades differ".into());
    Ok(out)
}

fn category_o() -> Result<Outcome> {
    let mut out = Outcome::new();
    for t in [CartanType::a(1), CartanType::a(2), CartanType::b2(), CartanType::g2()] {
        let lambdas = sample_lambdas(t.rank());
        let r = engine(&t).verify_category_o(&lambdas, 4)?;
        for id in ["kernel-dim", "direct-sum", "gamma-image", "simplicity", "submodule-complement"] {
            let n = r.entries.iter().filter(|e| e.id == id).count();
            out.require(&t.name(), n > 0, || format!("no {id} entries"));
        }
        out.absorb(&t.name(), &r);
    }
    Ok(out)
}

/// Under the flipped sign the commutation, projector and category suites
/// must each report a failure carrying a nonzero witness.
fn mutation() -> Result<Outcome> {
    let mut out = Outcome::new();
    for t in [CartanType::a(1), CartanType::a(2)] {
        let e = Engine::with_options(t.clone(), 6, Mutation::KashiwaraDelta);
        let reports = [
            ("commutation", e.verify_commutation(3)?),
            ("thm61", e.verify_projector(3)?),
            ("categoryO", e.verify_category_o(&sample_lambdas(t.rank())[..2], 3)?),
        ];
        for (name, r) in &reports {
            let witnessed = r
                .failures()
                .filter(|f| f.witness.as_deref().is_some_and(|w| !w.is_empty() && w != "0"))
                .count();
            out.require(&format!("{} {name}", t.name()), witnessed > 0, || "no failure detected".into());
        }
    }
    Ok(out)
}

type Criterion = (&'static str, fn() -> Result<Outcome>, Duration);

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("relations normalize to zero (A1, A2, B2, G2)", relations, Duration::from_secs(10)),
        ("commutation closed form equals rewriting, n, m <= 3", commutation, Duration::MAX),
        ("coproduct homomorphisms, coassociativity, antipode axiom", hopf, Duration::MAX),
        ("pairing nondegenerate, invariant, orthogonal, order independent", pairing, Duration::from_secs(120)),
        ("canonical tensors and the completed element", canonical, Duration::MAX),
        ("Casimir twisted centrality", casimir, Duration::MAX),
        ("extremal projector properties and rank-one closed form", projector, Duration::from_secs(300)),
        ("category O decomposition, kernel, projector image, simplicity", category_o, Duration::MAX),
        ("flipped Kashiwara sign is caught with witnesses", mutation, Duration::MAX),
    ];
    let mut failed = 0;
    for (k, (name, run, budget)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let result = run();
        let took = start.elapsed();
        let (status, detail) = match result {
            Ok(o) if o.failures.is_empty() && took <= budget => ("PASS", format!("{} checks", o.checks)),
            Ok(o) if o.failures.is_empty() => ("FAIL", format!("over the time budget of {budget:?}")),
            Ok(o) => ("FAIL", format!("{} of {} checks failed; first: {}", o.failures.len(), o.checks, o.failures[0])),
            Err(e) => ("FAIL", format!("error: {e}")),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!("criterion {}: {status}  {name}  ({detail}, {:.2?})", k + 1, took);
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
