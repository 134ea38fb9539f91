//! Query-counted access to the input word and the cost model shared by the
//! search algorithms.
//!
//! Every indexed read of the input goes through [`ExecutionContext::read`]
//! and increments the ledger by one, repeated reads included. Three
//! backends share the same control flow:
//!
//! * [`Backend::Reference`]: search primitives are exact classical scans.
//! * [`Backend::Modeled`]: same answers and ledger as `Reference`, and the
//!   outermost operation additionally charges its modeled quantum cost.
//! * [`Backend::Sampled`]: search primitives fail with probability `ε`,
//!   driven by a seeded RNG.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::words::Word;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Backend {
    Reference,
    Modeled,
    Sampled,
}

impl fmt::Display for Backend {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Backend::Reference => "reference",
            Backend::Modeled => "modeled",
            Backend::Sampled => "sampled",
        })
    }
}

impl FromStr for Backend {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "reference" => Ok(Backend::Reference),
            "modeled" => Ok(Backend::Modeled),
            "sampled" => Ok(Backend::Sampled),
            _ => Err(Error::InvalidParams(format!("unknown backend {s:?}"))),
        }
    }
}

/// Constants of the modeled cost recurrences.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct CostConstants {
    /// Constant in front of `⌈√(N/T)⌉` for threshold search.
    pub c1: f64,
    /// Constant in front of `⌈√M⌉` for amplified choice over `M` candidates.
    pub c2: f64,
    /// Error level used to size the repetition factor `R`.
    pub repetition_eps: f64,
}

impl Default for CostConstants {
    fn default() -> Self {
        CostConstants {
            c1: 1.0,
            c2: 1.0,
            repetition_eps: 0.0,
        }
    }
}

impl CostConstants {
    pub fn repetition(&self) -> u32 {
        repetition_factor(self.repetition_eps)
    }
}

/// Number of odd repetitions needed to bring a procedure made of five
/// `ε`-error sub-calls back down to error `ε` by majority vote.
///
/// A single run fails with probability `p = 1 - (1-ε)^5`; the result is the
/// smallest odd `r` with `P[Bin(r, p) ≥ (r+1)/2] ≤ ε`. Returns 1 for `ε = 0`.
pub fn repetition_factor(eps: f64) -> u32 {
    if eps <= 0.0 {
        return 1;
    }
    let p = 1.0 - (1.0 - eps).powi(5);
    assert!(p < 0.5, "epsilon {eps} too large to amplify");
    let mut r = 1u32;
    loop {
        if majority_failure(r, p) <= eps {
            return r;
        }
        r += 2;
    }
}

/// Probability that at least half (rounded up) of `r` independent
/// `p`-failures occur.
pub fn majority_failure(r: u32, p: f64) -> f64 {
    let need = r.div_ceil(2);
    let mut total = 0.0;
    let mut binom = 1.0f64; // C(r, 0)
    for f in 0..=r {
        if f >= need {
            total += binom * p.powi(f as i32) * (1.0 - p).powi((r - f) as i32);
        }
        binom = binom * (r - f) as f64 / (f + 1) as f64;
    }
    total
}

/// What the oracle reads.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tape {
    Plain(Word),
    /// The virtual word `1^pad · word · 0^pad`; reads inside the pads are
    /// free because the pads are not oracle content.
    Padded {
        word: Word,
        pad: usize,
    },
}

impl Tape {
    pub fn len(&self) -> usize {
        match self {
            Tape::Plain(w) => w.len(),
            Tape::Padded { word, pad } => word.len() + 2 * pad,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Symbol at `i` and whether reading it is an oracle query.
    fn symbol(&self, i: usize) -> (bool, bool) {
        match self {
            Tape::Plain(w) => (w.get(i), true),
            Tape::Padded { word, pad } => {
                if i < *pad {
                    (true, false)
                } else if i < pad + word.len() {
                    (word.get(i - pad), true)
                } else {
                    (false, false)
                }
            }
        }
    }

    /// Materializes the tape as a word (no queries are counted).
    pub fn to_word(&self) -> Word {
        Word::from_bits((0..self.len()).map(|i| self.symbol(i).0))
    }
}

/// Backend selection and constants, reusable across runs.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub backend: Backend,
    pub epsilon: f64,
    pub seed: u64,
    pub constants: CostConstants,
    /// In `Sampled` mode, answer the "anything goes" branch of threshold
    /// search with a uniformly random index instead of the benign choice.
    pub adversarial: bool,
    /// Run the doubling prelude of `find_first` before its binary search.
    #[serde(default)]
    pub find_first_doubling: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            backend: Backend::Reference,
            epsilon: 0.0,
            seed: 0,
            constants: CostConstants::default(),
            adversarial: false,
            find_first_doubling: false,
        }
    }
}

impl RunConfig {
    pub fn reference() -> Self {
        RunConfig::default()
    }

    pub fn modeled() -> Self {
        RunConfig {
            backend: Backend::Modeled,
            ..RunConfig::default()
        }
    }

    pub fn sampled(epsilon: f64, seed: u64) -> Self {
        RunConfig {
            backend: Backend::Sampled,
            epsilon,
            seed,
            ..RunConfig::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(0.0..0.5).contains(&self.epsilon) {
            return Err(Error::InvalidParams(format!(
                "epsilon must lie in [0, 0.5), got {}",
                self.epsilon
            )));
        }
        if self.backend != Backend::Sampled && self.epsilon != 0.0 {
            return Err(Error::InvalidParams(
                "epsilon must be 0 unless the backend is sampled".into(),
            ));
        }
        if self.constants.c1 < 0.0 || self.constants.c2 < 0.0 {
            return Err(Error::InvalidParams(
                "cost constants must be nonnegative".into(),
            ));
        }
        Ok(())
    }
}

/// Oracle access for a single algorithm run.
#[derive(Debug)]
pub struct ExecutionContext {
    tape: Tape,
    config: RunConfig,
    ledger: u64,
    modeled_cost: f64,
    rng: ChaCha8Rng,
    depth: u32,
    exact: u32,
}

impl ExecutionContext {
    pub fn new(tape: Tape, config: RunConfig) -> Result<Self> {
        config.validate()?;
        Ok(ExecutionContext {
            tape,
            rng: ChaCha8Rng::seed_from_u64(config.seed),
            config,
            ledger: 0,
            modeled_cost: 0.0,
            depth: 0,
            exact: 0,
        })
    }

    pub fn reference(word: Word) -> Self {
        ExecutionContext::new(Tape::Plain(word), RunConfig::reference()).expect("valid config")
    }

    pub fn modeled(word: Word) -> Self {
        ExecutionContext::new(Tape::Plain(word), RunConfig::modeled()).expect("valid config")
    }

    pub fn len(&self) -> usize {
        self.tape.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tape.is_empty()
    }

    pub fn tape(&self) -> &Tape {
        &self.tape
    }

    pub fn config(&self) -> &RunConfig {
        &self.config
    }

    pub fn backend(&self) -> Backend {
        self.config.backend
    }

    pub fn epsilon(&self) -> f64 {
        self.config.epsilon
    }

    pub fn constants(&self) -> CostConstants {
        self.config.constants
    }

    pub fn adversarial(&self) -> bool {
        self.config.adversarial
    }

    /// Number of oracle queries made so far.
    pub fn ledger(&self) -> u64 {
        self.ledger
    }

    pub fn modeled_cost(&self) -> f64 {
        self.modeled_cost
    }

    /// Reads symbol `i`. Panics when `i` is outside the tape.
    pub fn read(&mut self, i: usize) -> bool {
        assert!(
            i < self.tape.len(),
            "oracle read at {i} outside word of length {}",
            self.tape.len()
        );
        let (bit, counted) = self.tape.symbol(i);
        if counted {
            self.ledger += 1;
        }
        bit
    }

    /// Adds `amount` to the modeled cost. Only meaningful for the modeled
    /// backend; elsewhere it is ignored with a warning.
    pub fn charge_modeled(&mut self, amount: f64) {
        assert!(amount >= 0.0, "negative charge {amount}");
        if self.config.backend != Backend::Modeled {
            log::warn!(
                "charge_modeled ignored under {} backend",
                self.config.backend
            );
            return;
        }
        self.modeled_cost += amount;
    }

    /// Charges `amount` when running modeled and not nested inside another
    /// charged operation.
    pub(crate) fn charge_outermost(&mut self, amount: impl FnOnce(&Self) -> f64) {
        if self.config.backend == Backend::Modeled && self.depth == 0 {
            let a = amount(self);
            self.modeled_cost += a;
        }
    }

    /// Runs `f` as a sub-call: charges made inside are suppressed because
    /// the caller charges for its whole call tree.
    pub(crate) fn nested<R>(&mut self, f: impl FnOnce(&mut Self) -> R) -> R {
        self.depth += 1;
        let out = f(self);
        self.depth -= 1;
        out
    }

    /// Evaluates `f` with fault injection suspended. Search primitives use
    /// this for their predicates: the search contract is stated over the
    /// predicates' true values, whose own bounded error the search absorbs.
    pub(crate) fn exact<R>(&mut self, f: impl FnOnce(&mut Self) -> R) -> R {
        self.exact += 1;
        let out = f(self);
        self.exact -= 1;
        out
    }

    /// Whether search outcomes are currently being corrupted.
    pub(crate) fn faults_active(&self) -> bool {
        self.config.backend == Backend::Sampled && self.config.epsilon > 0.0 && self.exact == 0
    }

    /// `true` with probability `ε` while faults are active, never otherwise.
    pub(crate) fn fault(&mut self) -> bool {
        self.faults_active() && self.rng.gen_bool(self.config.epsilon)
    }

    pub(crate) fn random_index(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(s: &str) -> ExecutionContext {
        ExecutionContext::reference(s.parse().unwrap())
    }

    #[test]
    fn read_counts_every_query() {
        let mut c = ctx("01");
        assert!(!c.read(0));
        assert_eq!(c.ledger(), 1);
        c.read(0);
        assert_eq!(c.ledger(), 2);
        assert!(c.read(1));
        assert_eq!(c.ledger(), 3);
    }

    #[test]
    #[should_panic(expected = "outside word")]
    fn read_out_of_range_aborts() {
        ctx("0101").read(5);
    }

    #[test]
    fn modeled_accumulator() {
        let mut c = ExecutionContext::modeled("01".parse().unwrap());
        c.charge_modeled(2.0);
        c.charge_modeled(2.0);
        assert_eq!(c.modeled_cost(), 4.0);
        c.charge_modeled(0.0);
        assert_eq!(c.modeled_cost(), 4.0);
        // threshold-search charge c1 * ceil(sqrt(16/4)) with c1 = 1
        c.charge_modeled(1.0 * (16.0f64 / 4.0).sqrt().ceil());
        assert_eq!(c.modeled_cost(), 6.0);
    }

    #[test]
    fn charge_ignored_outside_modeled() {
        let mut c = ctx("01");
        c.charge_modeled(3.0);
        assert_eq!(c.modeled_cost(), 0.0);
    }

    #[test]
    fn padded_tape_reads_pads_for_free() {
        let tape = Tape::Padded {
            word: "01".parse().unwrap(),
            pad: 1,
        };
        assert_eq!(tape.to_word().to_binary(), "1010");
        let mut c = ExecutionContext::new(tape, RunConfig::reference()).unwrap();
        assert!(c.read(0));
        assert!(!c.read(3));
        assert_eq!(c.ledger(), 0);
        assert!(!c.read(1));
        assert_eq!(c.ledger(), 1);
    }

    #[test]
    fn epsilon_only_for_sampled() {
        let mut cfg = RunConfig::reference();
        cfg.epsilon = 0.1;
        assert!(cfg.validate().is_err());
        assert!(RunConfig::sampled(0.1, 1).validate().is_ok());
        assert!(RunConfig::sampled(0.5, 1).validate().is_err());
    }

    #[test]
    fn repetition_factor_values() {
        assert_eq!(repetition_factor(0.0), 1);
        for eps in [0.001, 0.01, 0.02, 0.05] {
            let r = repetition_factor(eps);
            assert!(r % 2 == 1 && r > 1);
            let p = 1.0 - (1.0 - eps).powi(5);
            assert!(majority_failure(r, p) <= eps);
            assert!(majority_failure(r - 2, p) > eps);
        }
    }

    #[test]
    fn majority_failure_matches_enumeration() {
        // r = 3: P[>= 2 failures] = 3p^2(1-p) + p^3
        let p = 0.2;
        let expected = 3.0 * p * p * (1.0 - p) + p * p * p;
        assert!((majority_failure(3, p) - expected).abs() < 1e-12);
    }
}
