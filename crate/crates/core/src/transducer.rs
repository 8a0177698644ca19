//! Right-sequential normalization transducer for confluent quadratic bases
//! (d_beta(1) = a1): construction, execution on finite and left eventually
//! periodic words, and DOT/JSON export.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::words::{Digit, FiniteWord, LeftWord};

/// A state label: the memorized factor, in display order (high digit first).
/// The initial state is the empty label.
pub type StateLabel = Vec<Digit>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Edge {
    pub from: StateLabel,
    pub input: Digit,
    /// Output digits in display order (high digit first).
    pub output: Vec<Digit>,
    pub to: StateLabel,
}

/// Input-deterministic right-sequential transducer. Reads words from the
/// lowest digit upward and rewrites runs of the top digit `a` followed by a
/// smaller digit into their normalized equivalent, carrying into the digit
/// above.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Transducer {
    pub states: Vec<StateLabel>,
    pub initial: StateLabel,
    pub edges: Vec<Edge>,
    /// The consecutive-a bound C the machine was built for; runs of `a`
    /// of length >= C raise NoTransition.
    pub run_bound: usize,
    pub a: Digit,
}

/// Builds the normalization transducer for d_beta(1) = a1 with chains of
/// length C - 1. States: the empty word, each single nonzero letter h, and
/// the memorized forbidden prefixes a^k h for k = 1..C-1.
pub fn build_normalization_transducer(a: Digit, c: usize) -> Transducer {
    assert!(a >= 1 && c >= 1);
    let mut states: Vec<StateLabel> = vec![Vec::new()];
    for h in 1..=a {
        states.push(vec![h]);
    }
    for h in 1..=a {
        for k in 1..c {
            let mut label = vec![a; k];
            label.push(h);
            states.push(label);
        }
    }
    let mut edges = Vec::new();
    // Initial state: zeros stream through, a nonzero letter is memorized.
    edges.push(Edge { from: Vec::new(), input: 0, output: vec![0], to: Vec::new() });
    for h in 1..=a {
        edges.push(Edge { from: Vec::new(), input: h, output: Vec::new(), to: vec![h] });
    }
    for i in 1..=a {
        // A zero above a memorized letter flushes both.
        edges.push(Edge { from: vec![i], input: 0, output: vec![0, i], to: Vec::new() });
        // A smaller nonzero letter releases the memorized one. For i = j < a
        // this is the loop h -> h|h -> h.
        for j in 1..a {
            edges.push(Edge { from: vec![i], input: j, output: vec![i], to: vec![j] });
        }
        // Reading the top letter starts (or would start) a potential
        // forbidden factor a^k i.
        if c >= 2 {
            edges.push(Edge { from: vec![i], input: a, output: Vec::new(), to: vec![a, i] });
        }
    }
    for h in 1..=a {
        for k in 1..c {
            let mut from = vec![a; k];
            from.push(h);
            if k + 1 < c {
                let mut to = vec![a; k + 1];
                to.push(h);
                edges.push(Edge { from: from.clone(), input: a, output: Vec::new(), to });
            }
            // Reading i < a terminates the run a^k h: replace it by its
            // normalized equivalent u and carry 1 into the read digit.
            let u = replacement_word(a, h, k);
            for i in 0..a {
                edges.push(Edge {
                    from: from.clone(),
                    input: i,
                    output: u.clone(),
                    to: vec![i + 1],
                });
            }
        }
    }
    Transducer { states, initial: Vec::new(), edges, run_bound: c, a }
}

/// Normalized equivalent of the factor a^k h (without the carry, which goes
/// to the state): u = (0a)^m 0 (h-1) for k = 2m+1, u = (0a)^m 0 (a-1) h for
/// k = 2m+2. Display order, high digit first.
fn replacement_word(a: Digit, h: Digit, k: usize) -> Vec<Digit> {
    let m = (k - 1) / 2;
    let mut u = Vec::with_capacity(k + 1);
    for _ in 0..m {
        u.push(0);
        u.push(a);
    }
    u.push(0);
    if k % 2 == 1 {
        u.push(h - 1);
    } else {
        u.push(a - 1);
        u.push(h);
    }
    u
}

struct Runner<'a> {
    map: HashMap<(usize, Digit), usize>,
    t: &'a Transducer,
    state_ids: HashMap<&'a [Digit], usize>,
    state: usize,
    /// Emitted digits, lowest position first.
    emitted: Vec<Digit>,
}

impl<'a> Runner<'a> {
    fn new(t: &'a Transducer) -> Self {
        let state_ids: HashMap<&[Digit], usize> = t
            .states
            .iter()
            .enumerate()
            .map(|(i, s)| (s.as_slice(), i))
            .collect();
        let mut map = HashMap::new();
        for (ei, e) in t.edges.iter().enumerate() {
            let from = state_ids[e.from.as_slice()];
            let prev = map.insert((from, e.input), ei);
            debug_assert!(prev.is_none(), "nondeterministic transducer");
        }
        let state = state_ids[t.initial.as_slice()];
        Runner { map, t, state_ids, state, emitted: Vec::new() }
    }

    fn feed(&mut self, d: Digit) -> Result<()> {
        let Some(&ei) = self.map.get(&(self.state, d)) else {
            return Err(Error::NoTransition {
                state: crate::words::write_digit_string(&self.t.states[self.state]),
                letter: d,
            });
        };
        let e = &self.t.edges[ei];
        self.emitted.extend(e.output.iter().rev());
        self.state = self.state_ids[e.to.as_slice()];
        Ok(())
    }

    fn is_initial(&self) -> bool {
        self.t.states[self.state].is_empty()
    }
}

/// Runs the transducer on a finite word, reading from the lowest digit
/// upward, flushing with implicit leading zeros. The point is preserved:
/// the output has as many fractional digits as the input.
pub fn run_right_sequential(t: &Transducer, w: &FiniteWord) -> Result<FiniteWord> {
    let mut r = Runner::new(t);
    for &d in w.digits.iter().rev() {
        r.feed(d)?;
    }
    let mut flushes = 0;
    while !r.is_initial() {
        r.feed(0)?;
        flushes += 1;
        if flushes > t.run_bound + 2 {
            return Err(Error::NoTransition {
                state: crate::words::write_digit_string(&t.states[r.state]),
                letter: 0,
            });
        }
    }
    let frac = w.digits.len() - w.point;
    let mut digits: Vec<Digit> = r.emitted.into_iter().rev().collect();
    // Trim leading zeros, keeping at least one integer digit.
    while digits.len() > frac + 1 && digits.first() == Some(&0) {
        digits.remove(0);
    }
    let point = digits.len() - frac;
    Ok(FiniteWord { digits, point })
}

/// Runs the transducer on a left eventually periodic word: fraction, head,
/// then period copies until the machine state repeats at a period boundary;
/// the emitted digits between the repeated boundary states form the output
/// period.
pub fn run_left_word(t: &Transducer, w: &LeftWord) -> Result<LeftWord> {
    if w.period.is_empty() {
        let fw = w.as_finite().expect("finite left word");
        let out = run_right_sequential(t, &fw)?;
        return Ok(LeftWord::from_finite(&out).canonicalize());
    }
    let mut r = Runner::new(t);
    for &d in w.fraction.iter().rev() {
        r.feed(d)?;
    }
    for &d in w.head.iter().rev() {
        r.feed(d)?;
    }
    let f_len = w.fraction.len();
    let mut seen: HashMap<usize, usize> = HashMap::new(); // state -> emitted length
    loop {
        match seen.entry(r.state) {
            std::collections::hash_map::Entry::Occupied(prev) => {
                let e1 = *prev.get();
                let e2 = r.emitted.len();
                debug_assert_eq!((e2 - e1) % w.period.len(), 0);
                let period: Vec<Digit> = r.emitted[e1..e2].iter().rev().copied().collect();
                let head: Vec<Digit> = r.emitted[f_len..e1].iter().rev().copied().collect();
                let fraction: Vec<Digit> = r.emitted[..f_len].iter().rev().copied().collect();
                return Ok(LeftWord::new(period, head, fraction).canonicalize());
            }
            std::collections::hash_map::Entry::Vacant(slot) => {
                slot.insert(r.emitted.len());
            }
        }
        for &d in w.period.iter().rev() {
            r.feed(d)?;
        }
    }
}

/// Smallest admissible-run bound K for a rational with the given reduced
/// denominator: the smallest K with a^{K-2} > den (Prop 21's estimate); the
/// estimate degenerates at a = 1, where the safe pigeonhole bound den + 2
/// is used instead.
pub fn consecutive_a_bound(a: Digit, den: u64) -> usize {
    if a == 1 {
        return den as usize + 2;
    }
    let mut k: usize = 2;
    let mut pow: u128 = 1; // a^(k-2)
    while pow <= den as u128 {
        pow *= a as u128;
        k += 1;
    }
    k
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    Dot,
    Json,
}

pub fn export(t: &Transducer, format: ExportFormat) -> String {
    match format {
        ExportFormat::Json => serde_json::to_string_pretty(t).expect("serializable"),
        ExportFormat::Dot => {
            let name = |s: &[Digit]| {
                if s.is_empty() {
                    "eps".to_string()
                } else {
                    crate::words::write_digit_string(s)
                }
            };
            let mut out = String::from("digraph transducer {\n  rankdir=LR;\n");
            for s in &t.states {
                out.push_str(&format!("  \"{}\";\n", name(s)));
            }
            for e in &t.edges {
                out.push_str(&format!(
                    "  \"{}\" -> \"{}\" [label=\"{}|{}\"];\n",
                    name(&e.from),
                    name(&e.to),
                    e.input,
                    crate::words::write_digit_string(&e.output),
                ));
            }
            out.push_str("}\n");
            out
        }
    }
}

pub fn parse_json(text: &str) -> Result<Transducer> {
    serde_json::from_str(text).map_err(|e| Error::Parse(format!("transducer json: {e}")))
}
