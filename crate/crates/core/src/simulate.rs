//! Seeded multiset dynamics over particles.
//!
//! Each step picks uniformly among the rules whose inputs are present in
//! the current census and applies it. The generator is ChaCha8 seeded with
//! `seed_from_u64(seed)` and the choice is `gen_range(0..applicable)`, so a
//! run is a pure function of `(initial state, rules, steps, seed)` on every
//! platform.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::elements::{basic_triangle_budget, validate_reaction, Element, FaceShape, Particle, Reaction};
use crate::exactnum::Rational;
use crate::{Error, Result};

/// Particle census; zero entries are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct State {
    census: BTreeMap<Particle, Rational>,
}

impl State {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, particle: Particle, qty: Rational) -> Result<Self> {
        self.credit(particle, qty)?;
        Ok(self)
    }

    /// Add a nonnegative quantity.
    pub fn credit(&mut self, particle: Particle, qty: Rational) -> Result<()> {
        if qty.is_negative() {
            return Err(Error::NotPositive("quantity"));
        }
        if qty.is_zero() {
            return Ok(());
        }
        *self.census.entry(particle).or_insert_with(Rational::zero) += qty;
        Ok(())
    }

    pub fn get(&self, particle: &Particle) -> Rational {
        self.census.get(particle).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Particle, &Rational)> {
        self.census.iter()
    }

    pub fn is_empty(&self) -> bool {
        self.census.is_empty()
    }

    pub fn budgets(&self) -> Budgets {
        let mut b = Budgets::default();
        for (p, q) in &self.census {
            let count = basic_triangle_budget(p, q).expect("stored quantities are positive").count;
            match p.element.face_shape() {
                FaceShape::Equilateral => b.scalene += count,
                FaceShape::Square => b.isosceles += count,
            }
            if p.element == Element::Earth {
                b.earth += q;
            }
        }
        b
    }

    pub fn can_apply(&self, r: &Reaction) -> bool {
        r.input_census().iter().all(|(p, q)| &self.get(p) >= q)
    }
}

/// Conserved totals of a state.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Budgets {
    /// Half-equilateral triangles in fire, air and water faces.
    pub scalene: Rational,
    /// Isosceles right triangles in earth faces.
    pub isosceles: Rational,
    /// Number of earth particles.
    pub earth: Rational,
}

/// Reactions that all pass [`validate_reaction`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RuleSet {
    rules: Vec<Reaction>,
}

impl RuleSet {
    pub fn new(rules: Vec<Reaction>) -> Result<Self> {
        if let Some(index) = rules.iter().position(|r| !validate_reaction(r).is_empty()) {
            return Err(Error::InvalidRule { index });
        }
        Ok(RuleSet { rules })
    }

    pub fn rules(&self) -> &[Reaction] {
        &self.rules
    }
}

/// Apply one reaction: debit inputs, credit outputs. Fails without change
/// when an input is short.
pub fn step(state: &State, r: &Reaction) -> Result<State> {
    let mut next = state.clone();
    for (p, q) in r.input_census() {
        let have = next.get(&p);
        if have < q {
            return Err(Error::InsufficientQuantity(alloc::format!("{}", p.element)));
        }
        let left = have - q;
        if left.is_zero() {
            next.census.remove(&p);
        } else {
            next.census.insert(p, left);
        }
    }
    for (p, q) in r.output_census() {
        next.credit(p, q)?;
    }
    Ok(next)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TraceStep {
    pub rule: usize,
    pub budgets: Budgets,
}

/// A recorded run.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Trace {
    pub seed: u64,
    pub requested_steps: usize,
    pub initial: State,
    pub steps: Vec<TraceStep>,
    pub final_state: State,
    /// No rule was applicable before `requested_steps` were taken.
    pub stopped_early: bool,
}

pub fn run(initial: &State, rules: &RuleSet, steps: usize, seed: u64) -> Trace {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut state = initial.clone();
    let mut record = Vec::with_capacity(steps);
    let mut stopped_early = false;
    for _ in 0..steps {
        let applicable: Vec<usize> = (0..rules.rules.len()).filter(|&i| state.can_apply(&rules.rules[i])).collect();
        if applicable.is_empty() {
            stopped_early = true;
            break;
        }
        let rule = applicable[rng.gen_range(0..applicable.len())];
        state = step(&state, &rules.rules[rule]).expect("rule was applicable");
        record.push(TraceStep { rule, budgets: state.budgets() });
    }
    Trace { seed, requested_steps: steps, initial: initial.clone(), steps: record, final_state: state, stopped_early }
}

/// Drift of the conserved totals along a trace.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConservationReport {
    pub baseline: Budgets,
    pub steps_checked: usize,
    /// Index of the first step whose recorded budgets differ from the
    /// initial state's.
    pub first_drift: Option<usize>,
    /// Budgets recorded at the first drifting step.
    pub drifted: Option<Budgets>,
    /// Recomputed final-state budgets equal the baseline.
    pub final_conserved: bool,
}

impl ConservationReport {
    pub fn conserved(&self) -> bool {
        self.first_drift.is_none() && self.final_conserved
    }
}

pub fn conservation_report(trace: &Trace) -> ConservationReport {
    let baseline = trace.initial.budgets();
    let drift = trace.steps.iter().position(|s| s.budgets != baseline);
    ConservationReport {
        steps_checked: trace.steps.len(),
        first_drift: drift,
        drifted: drift.map(|i| trace.steps[i].budgets.clone()),
        final_conserved: trace.final_state.budgets() == baseline,
        baseline,
    }
}
