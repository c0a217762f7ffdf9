//! Explicit instances of the defining relations, as formal sums of words.
//!
//! Structure constants here are written out from the Euler form directly
//! rather than through the rewriting engine, so evaluating an instance is a
//! genuine check of the engine.

use super::serre::{serre_element, SerreFamily};
use super::{Element, Engine, Letter, Parent};
use crate::error::Result;
use crate::root_data::CartanType;
use crate::scalar::Scalar;

/// A formal sum of words that is zero in `parent`.
#[derive(Clone, Debug)]
pub struct RelationInstance {
    pub name: String,
    pub parent: Parent,
    pub terms: Vec<(Vec<Letter>, Scalar)>,
}

impl RelationInstance {
    fn new(name: String, parent: Parent) -> Self {
        RelationInstance {
            name,
            parent,
            terms: Vec::new(),
        }
    }

    fn push(mut self, word: Vec<Letter>, c: Scalar) -> Self {
        self.terms.push((word, c));
        self
    }

    /// Normal form of the sum; zero when the relation holds.
    pub fn evaluate(&self, engine: &Engine) -> Result<Element> {
        let mut acc = engine.zero(self.parent);
        for (w, c) in &self.terms {
            acc = acc.add(&engine.normal_form(w, self.parent)?.scale(c))?;
        }
        Ok(acc)
    }
}

fn mono(a: i64, b: i64) -> Scalar {
    Scalar::monomial(a, b)
}

/// Letters of `parent` as (upper, lower) constructors.
fn letter_kinds(parent: Parent) -> (fn(usize) -> Letter, fn(usize) -> Letter) {
    match parent {
        Parent::U => (Letter::E, Letter::F),
        Parent::B => (Letter::Epp, Letter::F),
        Parent::Bbar => (Letter::E, Letter::Fp),
    }
}

/// `T x_j T^{-1} = c x_j` for `T ∈ {ω_i, ω'_i}`, read off the relation table.
fn toral_constant(t: &CartanType, prime: bool, i: usize, j: usize, upper: bool) -> Scalar {
    let (ij, ji) = (t.euler(i, j), t.euler(j, i));
    match (prime, upper) {
        (false, true) => mono(ji, -ij),
        (false, false) => mono(-ji, ij),
        (true, true) => mono(-ij, ji),
        (true, false) => mono(ij, -ji),
    }
}

/// Every defining relation of `parent` for the given Cartan type.
pub fn defining_relations(t: &CartanType, parent: Parent) -> Result<Vec<RelationInstance>> {
    let n = t.rank();
    let (up, low) = letter_kinds(parent);
    let one = Scalar::one;
    let mut out = Vec::new();
    for i in 0..n {
        for (tor, name) in [(Letter::W as fn(usize, i64) -> Letter, 'w'), (Letter::Wp, 'v')] {
            out.push(
                RelationInstance::new(format!("toral inverse {name}[{}]", i + 1), parent)
                    .push(vec![tor(i, 1), tor(i, -1)], one())
                    .push(vec![], -one()),
            );
        }
        for j in 0..n {
            for (a, b, label) in [
                (Letter::W(i, 1), Letter::W(j, 1), "w w"),
                (Letter::Wp(i, 1), Letter::Wp(j, 1), "v v"),
                (Letter::W(i, 1), Letter::Wp(j, 1), "w v"),
            ] {
                if label != "w v" && i >= j {
                    continue;
                }
                out.push(
                    RelationInstance::new(format!("toral commute {label} {} {}", i + 1, j + 1), parent)
                        .push(vec![a, b], one())
                        .push(vec![b, a], -one()),
                );
            }
            for prime in [false, true] {
                let tor = |k| if prime { Letter::Wp(i, k) } else { Letter::W(i, k) };
                for (x, upper) in [(up(j), true), (low(j), false)] {
                    out.push(
                        RelationInstance::new(format!("toral action {} on {x}", tor(1)), parent)
                            .push(vec![tor(1), x, tor(-1)], one())
                            .push(vec![x], -toral_constant(t, prime, i, j, upper)),
                    );
                }
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            let delta = i == j;
            let inst = match parent {
                Parent::U => {
                    let r = RelationInstance::new(format!("cross e[{}] f[{}]", i + 1, j + 1), parent)
                        .push(vec![Letter::E(i), Letter::F(j)], one())
                        .push(vec![Letter::F(j), Letter::E(i)], -one());
                    if delta {
                        let d = t.r_minus_s(i).inv()?;
                        r.push(vec![Letter::W(i, 1)], -d.clone())
                            .push(vec![Letter::Wp(i, 1)], d)
                    } else {
                        r
                    }
                }
                Parent::B => {
                    let c = mono(t.euler(j, i), -t.euler(i, j));
                    let r = RelationInstance::new(format!("cross E[{}] f[{}]", i + 1, j + 1), parent)
                        .push(vec![Letter::Epp(i), Letter::F(j)], one())
                        .push(vec![Letter::F(j), Letter::Epp(i)], -c);
                    if delta {
                        r.push(vec![], -one())
                    } else {
                        r
                    }
                }
                Parent::Bbar => {
                    let c = mono(t.euler(i, j), -t.euler(j, i));
                    let r = RelationInstance::new(format!("cross P[{}] e[{}]", i + 1, j + 1), parent)
                        .push(vec![Letter::Fp(i), Letter::E(j)], one())
                        .push(vec![Letter::E(j), Letter::Fp(i)], -c);
                    if delta {
                        r.push(vec![], -one())
                    } else {
                        r
                    }
                }
            };
            out.push(inst);
        }
    }
    let families = [(true, parent.upper_family()), (false, parent.lower_family())];
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            for (upper, family) in families {
                let letter = if upper { up } else { low };
                let mut inst = RelationInstance::new(
                    format!(
                        "serre {} i={} j={}",
                        match family {
                            SerreFamily::Leading => "leading",
                            SerreFamily::Trailing => "trailing",
                        },
                        i + 1,
                        j + 1
                    ),
                    parent,
                );
                inst.name = format!("{} on {}", inst.name, letter(i).to_string().split('[').next().unwrap_or(""));
                for (w, c) in serre_element(t, family, i, j)? {
                    inst = inst.push(w.iter().map(|&k| letter(k as usize)).collect(), c);
                }
                out.push(inst);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a1_relation_counts() {
        let t = CartanType::a(1);
        let rels = defining_relations(&t, Parent::B).unwrap();
        // 2 inverses, 1 mixed commute, 4 toral actions, 1 cross, no Serre.
        assert_eq!(rels.len(), 8);
    }
}
