use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::grade::{Grade, Rational};
use crate::ifs::IfSubset;
use crate::transform::{max_alpha, TransformParams};

/// How translation amounts are picked below the admissible bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AlphaChoice {
    Zero,
    Midpoint,
    Max,
    /// Every multiple of the grid step up to the bound.
    Grid,
}

impl AlphaChoice {
    pub fn name(self) -> &'static str {
        match self {
            AlphaChoice::Zero => "zero",
            AlphaChoice::Midpoint => "midpoint",
            AlphaChoice::Max => "max",
            AlphaChoice::Grid => "grid",
        }
    }
}

/// Parameters of the deterministic subject and parameter sampler.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SampleSpec {
    pub grid_step: Rational,
    pub beta_grid: Vec<Grade>,
    pub alpha_choices: Vec<AlphaChoice>,
    pub random_count: usize,
    pub seed: u64,
    /// Upper bound on the number of subject pairs examined per pairwise check.
    pub max_pairs: usize,
}

impl Default for SampleSpec {
    fn default() -> Self {
        let quarter = |n| Grade::from_fraction(n, 4).expect("grid grade");
        SampleSpec {
            grid_step: Rational::new(1, 4),
            beta_grid: vec![quarter(1), quarter(2), quarter(3), quarter(4)],
            alpha_choices: vec![AlphaChoice::Zero, AlphaChoice::Midpoint, AlphaChoice::Max],
            random_count: 16,
            seed: 0x5eed,
            max_pairs: 1024,
        }
    }
}

impl SampleSpec {
    pub fn validate(&self) -> Result<()> {
        let step = self.grid_step;
        if *step.numer() != 1 || *step.denom() < 1 {
            return Err(Error::InvalidSampleSpec(format!(
                "grid step must be 1/k for a positive integer k, got {step}"
            )));
        }
        if self.beta_grid.is_empty() {
            return Err(Error::InvalidSampleSpec("beta grid is empty".into()));
        }
        if let Some(b) = self.beta_grid.iter().find(|b| b.is_zero()) {
            return Err(Error::InvalidSampleSpec(format!("beta = {b} is not in (0, 1]")));
        }
        if self.alpha_choices.is_empty() {
            return Err(Error::InvalidSampleSpec("no alpha choices".into()));
        }
        if self.max_pairs == 0 {
            return Err(Error::InvalidSampleSpec("max_pairs must be positive".into()));
        }
        Ok(())
    }

    /// Grid grades 0, step, 2*step, ..., 1.
    pub fn grid_values(&self) -> Vec<Grade> {
        let k = *self.grid_step.denom();
        (0..=k)
            .map(|i| Grade::from_fraction(i, k).expect("grid grade"))
            .collect()
    }

    /// Grid (mu, nu) pairs with mu + nu <= 1, ordered by mu then nu.
    pub fn grid_pairs(&self) -> Vec<(Grade, Grade)> {
        let values = self.grid_values();
        let mut pairs = Vec::new();
        for &mu in &values {
            for &nu in &values {
                if mu.value() + nu.value() <= Rational::from_integer(1) {
                    pairs.push((mu, nu));
                }
            }
        }
        pairs
    }

    /// Sorted, deduplicated translation amounts in `[0, bound]`.
    pub fn alphas(&self, bound: Grade) -> Vec<Grade> {
        let mut out = Vec::new();
        for choice in &self.alpha_choices {
            match choice {
                AlphaChoice::Zero => out.push(Grade::ZERO),
                AlphaChoice::Max => out.push(bound),
                AlphaChoice::Midpoint => {
                    out.push(Grade::new(bound.value() / 2).expect("half of a grade"))
                }
                AlphaChoice::Grid => {
                    out.extend(self.grid_values().into_iter().take_while(|g| *g <= bound))
                }
            }
        }
        out.sort();
        out.dedup();
        out
    }

    /// Every (beta, alpha) combination admissible for all of `subjects` at once.
    pub fn params_for(&self, subjects: &[&IfSubset]) -> Result<Vec<TransformParams>> {
        let mut out = Vec::new();
        for &beta in &self.beta_grid {
            let mut bound = Grade::ONE;
            for a in subjects {
                bound = bound.min(max_alpha(a, beta)?);
            }
            out.extend(self.alphas(bound).into_iter().map(|alpha| TransformParams::new(beta, alpha)));
        }
        Ok(out)
    }

    /// Index pairs into two lists: all of them when few enough, otherwise a
    /// seeded sample of at most `max_pairs`, sorted.
    pub fn pair_indices(&self, left: usize, right: usize, salt: u64) -> Vec<(usize, usize)> {
        let total = left.saturating_mul(right);
        if total <= self.max_pairs {
            return (0..left).flat_map(|i| (0..right).map(move |j| (i, j))).collect();
        }
        let mut rng = ChaCha8Rng::seed_from_u64(mix(self.seed, salt));
        let mut picked: Vec<(usize, usize)> = sample(&mut rng, total, self.max_pairs)
            .into_iter()
            .map(|k| (k / right, k % right))
            .collect();
        picked.sort_unstable();
        picked
    }
}

pub(crate) fn mix(seed: u64, salt: u64) -> u64 {
    seed ^ salt.wrapping_add(1).wrapping_mul(0x9e37_79b9_7f4a_7c15)
}

/// Deterministic subject stream: every non-empty grid subject, then
/// `random_count` seeded subjects with small-denominator grades.
pub fn sample_ifs(carrier_order: usize, spec: &SampleSpec) -> Result<SubjectStream> {
    spec.validate()?;
    if carrier_order == 0 {
        return Err(Error::EmptyCarrier);
    }
    Ok(SubjectStream {
        pairs: spec.grid_pairs(),
        digits: Some(vec![0; carrier_order]),
        remaining_random: spec.random_count,
        rng: ChaCha8Rng::seed_from_u64(mix(spec.seed, carrier_order as u64)),
        order: carrier_order,
    })
}

/// `count` seeded random subjects on a carrier of the given order.
pub fn random_subjects(carrier_order: usize, count: usize, seed: u64) -> Vec<IfSubset> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_subject(carrier_order, &mut rng)).collect()
}

fn random_subject(order: usize, rng: &mut ChaCha8Rng) -> IfSubset {
    loop {
        let mut mu = Vec::with_capacity(order);
        let mut nu = Vec::with_capacity(order);
        for _ in 0..order {
            let d: i64 = rng.gen_range(2..=12);
            let m = rng.gen_range(0..=d);
            let n = rng.gen_range(0..=d - m);
            mu.push(Grade::from_fraction(m, d).expect("grade in range"));
            nu.push(Grade::from_fraction(n, d).expect("grade in range"));
        }
        let a = IfSubset::new(mu, nu).expect("sum at most one");
        if a.is_nonempty() {
            return a;
        }
    }
}

#[derive(Clone, Debug)]
pub struct SubjectStream {
    pairs: Vec<(Grade, Grade)>,
    digits: Option<Vec<usize>>,
    remaining_random: usize,
    rng: ChaCha8Rng,
    order: usize,
}

impl SubjectStream {
    fn next_grid(&mut self) -> Option<IfSubset> {
        loop {
            let digits = self.digits.as_mut()?;
            let mu: Vec<Grade> = digits.iter().map(|&d| self.pairs[d].0).collect();
            let nu: Vec<Grade> = digits.iter().map(|&d| self.pairs[d].1).collect();
            // odometer, element 0 most significant
            let mut i = digits.len();
            let exhausted = loop {
                if i == 0 {
                    break true;
                }
                i -= 1;
                digits[i] += 1;
                if digits[i] < self.pairs.len() {
                    break false;
                }
                digits[i] = 0;
            };
            if exhausted {
                self.digits = None;
            }
            let a = IfSubset::new(mu, nu).expect("grid pairs sum to at most one");
            if a.is_nonempty() {
                return Some(a);
            }
        }
    }
}

impl Iterator for SubjectStream {
    type Item = IfSubset;

    fn next(&mut self) -> Option<IfSubset> {
        if let Some(a) = self.next_grid() {
            return Some(a);
        }
        if self.remaining_random == 0 {
            return None;
        }
        self.remaining_random -= 1;
        Some(random_subject(self.order, &mut self.rng))
    }
}
