//! Timed runs of several methods over random rectangles, with CSV output.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_bigint::BigUint;

use crate::budget::{Limits, DEFAULT_CAP};
use crate::error::AtopError;
use crate::generators::{default_moves, derive_seed, gen_set_a, gen_set_b_with_moves, RngStream};
use crate::group::AutotopismGroup;
use crate::methods::{compute_atop, requires_computation, MethodSpec};
use crate::plr::PartialLatinRectangle;
use crate::text::write_plr;

pub const CSV_HEADER: &str =
    "method,invariant,suite,r,s,n,x,entries,seed,time_us,group_order,computation_required,timeout";
pub const SUMMARY_HEADER: &str =
    "method,invariant,suite,r,s,n,x,samples,timeouts,mean_us,stddev_us,proportion_computed";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    A,
    B,
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::A => "a",
            Suite::B => "b",
        })
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "a" => Ok(Suite::A),
            "b" => Ok(Suite::B),
            other => Err(format!("unknown suite `{other}` (expected a or b)")),
        }
    }
}

/// One random rectangle of `suite`. For set A, `x` is the number of attempts;
/// for set B it is the number of entries kept.
pub fn generate(
    suite: Suite,
    r: usize,
    s: usize,
    n: usize,
    x: usize,
    moves: Option<usize>,
    rng: &mut RngStream,
) -> Result<PartialLatinRectangle, BenchError> {
    match suite {
        Suite::A => Ok(gen_set_a(r, s, n, x, rng)),
        Suite::B => {
            gen_set_b_with_moves(r, s, n, x, moves.unwrap_or_else(|| default_moves(n)), rng)
                .map_err(|e| BenchError::Config(e.to_string()))
        }
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum BenchError {
    #[error("bench config: {0}")]
    Config(String),
    #[error("bench csv: {0}")]
    Csv(String),
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchConfig {
    pub suite: Suite,
    pub r: usize,
    pub s: usize,
    pub n: usize,
    pub xs: Vec<usize>,
    pub samples: usize,
    pub methods: Vec<MethodSpec>,
    pub seed: u64,
    pub timeout: Duration,
    /// Untimed calls per method before measuring.
    pub warmup: usize,
    pub workers: usize,
    /// Markov chain moves for set B; `None` means the default for `n`.
    pub moves: Option<usize>,
    pub cap: usize,
}

impl BenchConfig {
    pub fn new(
        suite: Suite,
        r: usize,
        s: usize,
        n: usize,
        xs: Vec<usize>,
        methods: Vec<MethodSpec>,
    ) -> Self {
        Self {
            suite,
            r,
            s,
            n,
            xs,
            samples: 10_000,
            methods,
            seed: 0,
            timeout: Duration::from_secs(10),
            warmup: 10,
            workers: 1,
            moves: None,
            cap: DEFAULT_CAP,
        }
    }

    /// Reads `key = value` lines; `#` starts a comment. Keys: suite, r, s, n,
    /// x (`a..b`, `a..=b` or a comma list), samples, methods (comma list of
    /// method specs), seed, timeout_ms, warmup, workers, moves, cap.
    pub fn parse(text: &str) -> Result<Self, BenchError> {
        let err = |m: String| BenchError::Config(m);
        let mut map = BTreeMap::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| err(format!("line {}: expected key = value", idx + 1)))?;
            map.insert(k.trim().to_string(), v.trim().to_string());
        }
        let get = |k: &str| map.get(k).ok_or_else(|| err(format!("missing key `{k}`")));
        let num = |k: &str| -> Result<usize, BenchError> {
            get(k)?
                .parse()
                .map_err(|_| err(format!("`{k}` must be a nonnegative integer")))
        };
        let suite: Suite = get("suite")?.parse().map_err(err)?;
        let methods = get("methods")?
            .split(',')
            .map(|m| m.trim().parse::<MethodSpec>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(err)?;
        let mut cfg = Self::new(
            suite,
            num("r")?,
            num("s")?,
            num("n")?,
            parse_range(get("x")?).map_err(err)?,
            methods,
        );
        let optional = |k: &str| map.contains_key(k).then(|| num(k)).transpose();
        if let Some(v) = optional("samples")? {
            cfg.samples = v;
        }
        if let Some(v) = map.get("seed") {
            cfg.seed = v
                .parse()
                .map_err(|_| err("`seed` must be a 64-bit integer".into()))?;
        }
        if let Some(v) = optional("timeout_ms")? {
            cfg.timeout = Duration::from_millis(v as u64);
        }
        if let Some(v) = optional("warmup")? {
            cfg.warmup = v;
        }
        if let Some(v) = optional("workers")? {
            cfg.workers = v;
        }
        cfg.moves = optional("moves")?;
        if let Some(v) = optional("cap")? {
            cfg.cap = v;
        }
        if let Some(unknown) = map.keys().find(|k| !KNOWN_KEYS.contains(&k.as_str())) {
            return Err(err(format!("unknown key `{unknown}`")));
        }
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<(), BenchError> {
        let err = |m: &str| Err(BenchError::Config(m.to_string()));
        if self.r == 0 || self.s == 0 || self.n == 0 {
            return err("r, s and n must be positive");
        }
        if self.samples == 0 || self.workers == 0 || self.cap == 0 {
            return err("samples, workers and cap must be positive");
        }
        if self.methods.is_empty() {
            return err("at least one method is required");
        }
        if self.xs.is_empty() {
            return err("the x range is empty");
        }
        if self.suite == Suite::B {
            if self.n < self.r.max(self.s) {
                return err("set B needs n >= max(r, s)");
            }
            if self.xs.iter().any(|&x| x > self.r * self.s) {
                return err("x must lie in 0..=r*s");
            }
        }
        Ok(())
    }
}

const KNOWN_KEYS: [&str; 13] = [
    "suite",
    "r",
    "s",
    "n",
    "x",
    "samples",
    "methods",
    "seed",
    "timeout_ms",
    "warmup",
    "workers",
    "moves",
    "cap",
];

/// `a..b`, `a..=b`, `a` or `a,b,c`.
pub fn parse_range(text: &str) -> Result<Vec<usize>, String> {
    let bad = || format!("bad x range `{text}`");
    let int = |s: &str| s.trim().parse::<usize>().map_err(|_| bad());
    if let Some((a, b)) = text.split_once("..=") {
        Ok((int(a)?..=int(b)?).collect())
    } else if let Some((a, b)) = text.split_once("..") {
        Ok((int(a)?..int(b)?).collect())
    } else {
        text.split(',').map(int).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SampleRecord {
    pub method: MethodSpec,
    pub suite: Suite,
    pub r: usize,
    pub s: usize,
    pub n: usize,
    pub x: usize,
    pub entries: usize,
    pub seed: u64,
    pub time_ns: u64,
    /// `None` when the sample timed out.
    pub group_order: Option<BigUint>,
    pub computation_required: bool,
    pub timeout: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Aggregate {
    pub method: MethodSpec,
    pub suite: Suite,
    pub r: usize,
    pub s: usize,
    pub n: usize,
    pub x: usize,
    /// Samples that finished.
    pub samples: usize,
    pub timeouts: usize,
    pub mean_us: f64,
    pub stddev_us: f64,
    pub proportion_computed: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchReport {
    pub records: Vec<SampleRecord>,
    pub aggregates: Vec<Aggregate>,
}

/// Runs every method on the same samples. Records come out ordered by x,
/// sample index and method, whatever the number of workers.
pub fn run_bench(cfg: &BenchConfig) -> Result<BenchReport, BenchError> {
    cfg.validate()?;
    let jobs: Vec<(usize, usize)> = cfg
        .xs
        .iter()
        .flat_map(|&x| (0..cfg.samples).map(move |i| (x, i)))
        .collect();
    let sample = |x: usize, i: usize| -> Result<(u64, PartialLatinRectangle), BenchError> {
        let seed = derive_seed(cfg.seed, &[x as u64, i as u64]);
        let l = generate(
            cfg.suite,
            cfg.r,
            cfg.s,
            cfg.n,
            x,
            cfg.moves,
            &mut RngStream::new(seed),
        )?;
        Ok((seed, l))
    };

    let warm: Vec<PartialLatinRectangle> = jobs
        .iter()
        .take(cfg.warmup)
        .map(|&(x, i)| sample(x, i).map(|p| p.1))
        .collect::<Result<_, _>>()?;
    let run_job = |job: usize| -> Result<Vec<SampleRecord>, BenchError> {
        let (x, i) = jobs[job];
        let (seed, l) = sample(x, i)?;
        Ok(cfg
            .methods
            .iter()
            .map(|&method| {
                let start = Instant::now();
                let limits = Limits {
                    cap: cfg.cap,
                    deadline: Some(start + cfg.timeout),
                };
                let result = compute_atop(&l, method, &limits);
                let time_ns = start.elapsed().as_nanos() as u64;
                let (group_order, timeout) = match result {
                    Ok(g) => (Some(g.total_order), false),
                    Err(AtopError::Timeout | AtopError::CapExceeded { .. }) => (None, true),
                    Err(e) => panic!("{method} failed on a generated rectangle: {e}"),
                };
                SampleRecord {
                    method,
                    suite: cfg.suite,
                    r: cfg.r,
                    s: cfg.s,
                    n: cfg.n,
                    x,
                    entries: l.entry_count(),
                    seed,
                    time_ns,
                    group_order,
                    computation_required: requires_computation(&l, method.invariant),
                    timeout,
                }
            })
            .collect())
    };

    let workers = cfg.workers.min(jobs.len()).max(1);
    let mut per_job: Vec<Option<Vec<SampleRecord>>> = vec![None; jobs.len()];
    std::thread::scope(|scope| -> Result<(), BenchError> {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                let warm = &warm;
                let run_job = &run_job;
                let jobs_len = jobs.len();
                scope.spawn(
                    move || -> Result<Vec<(usize, Vec<SampleRecord>)>, BenchError> {
                        for l in warm {
                            for &method in &cfg.methods {
                                let limits = Limits {
                                    cap: cfg.cap,
                                    deadline: Some(Instant::now() + cfg.timeout),
                                };
                                let _ = compute_atop(l, method, &limits);
                            }
                        }
                        (w..jobs_len)
                            .step_by(workers)
                            .map(|job| run_job(job).map(|r| (job, r)))
                            .collect()
                    },
                )
            })
            .collect();
        for h in handles {
            for (job, recs) in h.join().expect("bench worker panicked")? {
                per_job[job] = Some(recs);
            }
        }
        Ok(())
    })?;
    let records: Vec<SampleRecord> = per_job
        .into_iter()
        .flat_map(|r| r.expect("job ran"))
        .collect();
    let aggregates = aggregate(&records);
    Ok(BenchReport {
        records,
        aggregates,
    })
}

/// Per (method, suite, dimensions, x) statistics, in first-seen order.
pub fn aggregate(records: &[SampleRecord]) -> Vec<Aggregate> {
    type Key = (MethodSpec, Suite, usize, usize, usize, usize);
    let mut order: Vec<Key> = Vec::new();
    let mut groups: BTreeMap<Key, Vec<&SampleRecord>> = BTreeMap::new();
    for rec in records {
        let key = (rec.method, rec.suite, rec.r, rec.s, rec.n, rec.x);
        groups
            .entry(key)
            .or_insert_with(|| {
                order.push(key);
                Vec::new()
            })
            .push(rec);
    }
    order
        .into_iter()
        .map(|key| {
            let recs = &groups[&key];
            let times: Vec<f64> = recs
                .iter()
                .filter(|r| !r.timeout)
                .map(|r| r.time_ns as f64 / 1000.0)
                .collect();
            let count = times.len();
            let mean = if count == 0 {
                0.0
            } else {
                times.iter().sum::<f64>() / count as f64
            };
            let var = if count < 2 {
                0.0
            } else {
                times.iter().map(|t| (t - mean) * (t - mean)).sum::<f64>() / (count - 1) as f64
            };
            let computed = recs.iter().filter(|r| r.computation_required).count();
            Aggregate {
                method: key.0,
                suite: key.1,
                r: key.2,
                s: key.3,
                n: key.4,
                x: key.5,
                samples: count,
                timeouts: recs.len() - count,
                mean_us: mean,
                stddev_us: var.sqrt(),
                proportion_computed: computed as f64 / recs.len() as f64,
            }
        })
        .collect()
}

fn format_us(ns: u64) -> String {
    format!("{}.{:03}", ns / 1000, ns % 1000)
}

fn parse_us(text: &str) -> Option<u64> {
    let (whole, frac) = text.split_once('.').unwrap_or((text, "0"));
    if frac.len() > 3 {
        return None;
    }
    let frac: u64 = format!("{frac:0<3}").parse().ok()?;
    Some(whole.parse::<u64>().ok()? * 1000 + frac)
}

pub fn emit_csv(records: &[SampleRecord]) -> String {
    let mut w = csv::WriterBuilder::new()
        .has_headers(false)
        .from_writer(Vec::new());
    w.write_record(CSV_HEADER.split(','))
        .expect("in-memory write");
    for rec in records {
        w.write_record([
            rec.method.family.name().to_string(),
            rec.method.invariant_name().to_string(),
            rec.suite.to_string(),
            rec.r.to_string(),
            rec.s.to_string(),
            rec.n.to_string(),
            rec.x.to_string(),
            rec.entries.to_string(),
            rec.seed.to_string(),
            format_us(rec.time_ns),
            rec.group_order
                .as_ref()
                .map_or(String::new(), |o| o.to_string()),
            rec.computation_required.to_string(),
            rec.timeout.to_string(),
        ])
        .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
}

pub fn parse_csv(text: &str) -> Result<Vec<SampleRecord>, BenchError> {
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(true)
        .from_reader(text.as_bytes());
    let headers = rdr
        .headers()
        .map_err(|e| BenchError::Csv(e.to_string()))?
        .clone();
    if headers.iter().collect::<Vec<_>>().join(",") != CSV_HEADER {
        return Err(BenchError::Csv("unexpected header".into()));
    }
    let mut out = Vec::new();
    for (idx, row) in rdr.records().enumerate() {
        let row = row.map_err(|e| BenchError::Csv(e.to_string()))?;
        let bad = |field: &str| BenchError::Csv(format!("record {}: bad {field}", idx + 1));
        let field = |i: usize| row.get(i).unwrap_or("");
        let int = |i: usize, name: &str| field(i).parse::<usize>().map_err(|_| bad(name));
        let flag = |i: usize, name: &str| field(i).parse::<bool>().map_err(|_| bad(name));
        let method = format!("{}:{}", field(0), field(1))
            .parse::<MethodSpec>()
            .map_err(|_| bad("method"))?;
        out.push(SampleRecord {
            method,
            suite: field(2).parse().map_err(|_| bad("suite"))?,
            r: int(3, "r")?,
            s: int(4, "s")?,
            n: int(5, "n")?,
            x: int(6, "x")?,
            entries: int(7, "entries")?,
            seed: field(8).parse().map_err(|_| bad("seed"))?,
            time_ns: parse_us(field(9)).ok_or_else(|| bad("time_us"))?,
            group_order: match field(10) {
                "" => None,
                v => Some(v.parse().map_err(|_| bad("group_order"))?),
            },
            computation_required: flag(11, "computation_required")?,
            timeout: flag(12, "timeout")?,
        });
    }
    Ok(out)
}

pub fn emit_summary_csv(aggregates: &[Aggregate]) -> String {
    let mut w = csv::WriterBuilder::new()
        .has_headers(false)
        .from_writer(Vec::new());
    w.write_record(SUMMARY_HEADER.split(','))
        .expect("in-memory write");
    for a in aggregates {
        w.write_record([
            a.method.family.name().to_string(),
            a.method.invariant_name().to_string(),
            a.suite.to_string(),
            a.r.to_string(),
            a.s.to_string(),
            a.n.to_string(),
            a.x.to_string(),
            a.samples.to_string(),
            a.timeouts.to_string(),
            a.mean_us.to_string(),
            a.stddev_us.to_string(),
            a.proportion_computed.to_string(),
        ])
        .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
}

/// Something that computes autotopism groups; lets the agreement check run
/// against substitutes.
pub trait AtopMethod {
    fn name(&self) -> String;
    fn compute(
        &self,
        l: &PartialLatinRectangle,
        limits: &Limits,
    ) -> Result<AutotopismGroup, AtopError>;
}

impl AtopMethod for MethodSpec {
    fn name(&self) -> String {
        self.to_string()
    }

    fn compute(
        &self,
        l: &PartialLatinRectangle,
        limits: &Limits,
    ) -> Result<AutotopismGroup, AtopError> {
        compute_atop(l, *self, limits)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Divergence {
    pub sample: usize,
    /// The offending rectangle in file format.
    pub plr: String,
    /// Each method with its order, or its error.
    pub results: Vec<(String, String)>,
}

impl fmt::Display for Divergence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "methods disagree on sample {}:", self.sample)?;
        for (name, result) in &self.results {
            writeln!(f, "  {name}: {result}")?;
        }
        write!(f, "{}", self.plr)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AgreementError {
    #[error("agreement needs at least two methods")]
    TooFewMethods,
    #[error("{0}")]
    DivergenceFound(Box<Divergence>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AgreementReport {
    pub samples: usize,
    pub methods: usize,
}

/// Checks that all methods give the same group on every sample, stopping at
/// the first disagreement. An error from any method counts as disagreement.
pub fn verify_agreement(
    methods: &[&dyn AtopMethod],
    samples: &[PartialLatinRectangle],
    limits: &Limits,
) -> Result<AgreementReport, AgreementError> {
    if methods.len() < 2 {
        return Err(AgreementError::TooFewMethods);
    }
    for (idx, l) in samples.iter().enumerate() {
        let results: Vec<Result<AutotopismGroup, AtopError>> =
            methods.iter().map(|m| m.compute(l, limits)).collect();
        let agree = results.iter().all(|r| r.is_ok()) && results.windows(2).all(|w| w[0] == w[1]);
        if !agree {
            return Err(AgreementError::DivergenceFound(Box::new(Divergence {
                sample: idx,
                plr: write_plr(l),
                results: methods
                    .iter()
                    .zip(&results)
                    .map(|(m, r)| {
                        let shown = match r {
                            Ok(g) => {
                                format!("order {} ({} reduced)", g.total_order, g.reduced_order())
                            }
                            Err(e) => format!("error: {e}"),
                        };
                        (m.name(), shown)
                    })
                    .collect(),
            })));
        }
    }
    Ok(AgreementReport {
        samples: samples.len(),
        methods: methods.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::InvariantKind;
    use crate::methods::Family;

    fn small_config() -> BenchConfig {
        let mut cfg = BenchConfig::new(
            Suite::A,
            5,
            5,
            5,
            vec![10, 25],
            vec![
                MethodSpec::new(Family::AlphaBeta, None),
                MethodSpec::new(Family::PlrExpanded, Some(InvariantKind::Square)),
            ],
        );
        cfg.samples = 50;
        cfg.warmup = 2;
        cfg
    }

    #[test]
    fn config_parsing() {
        let cfg = BenchConfig::parse(
            "# demo\nsuite = b\nr=5\ns=6\nn=7\nx=28\nsamples=3\nmethods=alpha-beta:sei, plr-expanded\nseed=9\ntimeout_ms=500\n",
        )
        .unwrap();
        assert_eq!(cfg.suite, Suite::B);
        assert_eq!(cfg.xs, vec![28]);
        assert_eq!(cfg.methods.len(), 2);
        assert_eq!(cfg.timeout, Duration::from_millis(500));
        assert!(
            BenchConfig::parse("suite=a\nr=2\ns=2\nn=2\nx=0..3\nmethods=mmm\nbogus=1\n").is_err()
        );
        assert!(BenchConfig::parse("suite=b\nr=3\ns=3\nn=2\nx=0\nmethods=mmm\n").is_err());
        assert_eq!(parse_range("0..=3").unwrap(), vec![0, 1, 2, 3]);
        assert_eq!(parse_range("4,7").unwrap(), vec![4, 7]);
    }

    #[test]
    fn methods_agree_and_aggregates_recompute() {
        let report = run_bench(&small_config()).unwrap();
        assert_eq!(report.records.len(), 2 * 50 * 2);
        for pair in report.records.chunks(2) {
            assert_eq!(pair[0].seed, pair[1].seed);
            assert_eq!(pair[0].group_order, pair[1].group_order);
        }
        let parsed = parse_csv(&emit_csv(&report.records)).unwrap();
        assert_eq!(parsed, report.records);
        assert_eq!(aggregate(&parsed), report.aggregates);
        for a in &report.aggregates {
            assert!((0.0..=1.0).contains(&a.proportion_computed));
        }
    }

    #[test]
    fn workers_do_not_change_results() {
        let mut cfg = small_config();
        cfg.samples = 10;
        let one = run_bench(&cfg).unwrap();
        cfg.workers = 3;
        let three = run_bench(&cfg).unwrap();
        let strip = |r: &BenchReport| {
            r.records
                .iter()
                .map(|x| (x.seed, x.group_order.clone(), x.computation_required))
                .collect::<Vec<_>>()
        };
        assert_eq!(strip(&one), strip(&three));
    }

    #[test]
    fn empty_samples_need_no_computation() {
        let mut cfg = small_config();
        cfg.xs = vec![0];
        cfg.samples = 3;
        let report = run_bench(&cfg).unwrap();
        assert!(report
            .records
            .iter()
            .all(|r| !r.computation_required && r.entries == 0));
    }

    #[test]
    fn csv_shapes() {
        assert_eq!(emit_csv(&[]), format!("{CSV_HEADER}\n"));
        let rec = SampleRecord {
            method: MethodSpec::new(Family::Mmm, Some(InvariantKind::Sei)),
            suite: Suite::B,
            r: 2,
            s: 3,
            n: 4,
            x: 5,
            entries: 5,
            seed: 42,
            time_ns: 1_234_567,
            group_order: Some(BigUint::from(6u8)),
            computation_required: true,
            timeout: false,
        };
        let text = emit_csv(std::slice::from_ref(&rec));
        assert_eq!(text.lines().count(), 2);
        assert_eq!(
            text.lines().nth(1).unwrap(),
            "mmm,sei,b,2,3,4,5,5,42,1234.567,6,true,false"
        );
        assert_eq!(parse_csv(&text).unwrap(), vec![rec]);
    }

    struct AlwaysTrivial;

    impl AtopMethod for AlwaysTrivial {
        fn name(&self) -> String {
            "always-trivial".into()
        }

        fn compute(
            &self,
            l: &PartialLatinRectangle,
            _: &Limits,
        ) -> Result<AutotopismGroup, AtopError> {
            Ok(AutotopismGroup::trivial(&l.reduce()))
        }
    }

    #[test]
    fn agreement_harness() {
        let samples: Vec<_> = (0..20)
            .map(|i| gen_set_a(4, 4, 4, 2 * i, &mut RngStream::new(i as u64)))
            .collect();
        let ab = MethodSpec::new(Family::AlphaBeta, None);
        assert!(verify_agreement(&[&ab, &ab], &samples, &Limits::default()).is_ok());
        assert_eq!(
            verify_agreement(&[&ab], &samples, &Limits::default()),
            Err(AgreementError::TooFewMethods)
        );
        let broken = verify_agreement(&[&ab, &AlwaysTrivial], &samples, &Limits::default());
        assert!(matches!(broken, Err(AgreementError::DivergenceFound(_))));
    }
}
