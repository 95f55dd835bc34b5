//! Wall clock, worker threads and the refutation log for the split search.

use std::io::Write;
use std::str::FromStr;
use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use dinterval_core::split::Mode;
use dinterval_core::split::{
    search_split_with, Clock, Decision, Observer, Partition, PruneRule, SearchLimits,
    SearchOptions, SearchOutcome, SearchResult, SearchStats, Silent, SplitError,
};
use dinterval_core::Graph;

pub struct WallClock<'a> {
    start: Instant,
    cancel: Option<&'a AtomicBool>,
}

impl<'a> WallClock<'a> {
    pub fn new(start: Instant, cancel: Option<&'a AtomicBool>) -> WallClock<'a> {
        WallClock { start, cancel }
    }
}

impl Clock for WallClock<'_> {
    fn elapsed_ms(&self) -> u64 {
        self.start.elapsed().as_millis() as u64
    }

    fn cancelled(&self) -> bool {
        self.cancel.is_some_and(|c| c.load(Ordering::Relaxed))
    }
}

/// `DINTERVAL_LOG`: `off`, `info` (one summary line per search) or `trace`
/// (every pruned decision).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum LogLevel {
    #[default]
    Off,
    Info,
    Trace,
}

impl FromStr for LogLevel {
    type Err = String;

    fn from_str(s: &str) -> Result<LogLevel, String> {
        match s.trim().to_ascii_lowercase().as_str() {
            "" | "off" => Ok(LogLevel::Off),
            "info" => Ok(LogLevel::Info),
            "trace" => Ok(LogLevel::Trace),
            other => Err(format!(
                "DINTERVAL_LOG must be off, info or trace, not `{other}`"
            )),
        }
    }
}

impl LogLevel {
    pub fn from_env() -> Result<LogLevel, String> {
        std::env::var("DINTERVAL_LOG").map_or(Ok(LogLevel::Off), |v| v.parse())
    }
}

/// Writes `depth<TAB>decision<TAB>rule` lines to a shared sink.
pub struct LogObserver<'a> {
    sink: &'a Mutex<dyn Write + Send + 'a>,
    worker: Option<usize>,
}

impl<'a> LogObserver<'a> {
    pub fn new(sink: &'a Mutex<dyn Write + Send + 'a>, worker: Option<usize>) -> LogObserver<'a> {
        LogObserver { sink, worker }
    }
}

impl Observer for LogObserver<'_> {
    fn record(&mut self, depth: usize, decision: &Decision, rule: PruneRule) {
        let mut sink = self.sink.lock().unwrap();
        let _ = match self.worker {
            Some(w) => writeln!(sink, "[{w}] {depth}\t{decision}\t{rule}"),
            None => writeln!(sink, "{depth}\t{decision}\t{rule}"),
        };
    }
}

/// `nodes=… k15=… claw-center=… …`
pub fn stats_line(stats: &SearchStats) -> String {
    let mut line = format!("nodes={}", stats.nodes);
    for rule in PruneRule::ALL {
        line.push_str(&format!(" {}={}", rule, stats.prunes[rule as usize]));
    }
    line
}

/// The split search on `threads` workers, each exploring its own share of
/// the branches. The node budget is divided among the workers; the time
/// budget applies to each. A Yes stops the others. The verdict does not
/// depend on scheduling, the witness may.
pub fn search_parallel(
    g: &Graph,
    mode: Mode,
    limits: SearchLimits,
    threads: usize,
    log: LogLevel,
    sink: &Mutex<dyn Write + Send + '_>,
) -> Result<SearchResult, SplitError> {
    let start = Instant::now();
    let threads = threads.max(1);
    let cancel = AtomicBool::new(false);
    let worker_limits = SearchLimits {
        node_budget: limits.node_budget.div_ceil(threads as u64),
        ..limits
    };
    let run = |index: usize| -> Result<SearchResult, SplitError> {
        let clock = WallClock::new(start, Some(&cancel));
        let options = SearchOptions {
            partition: Partition {
                index,
                count: threads,
            },
            ..SearchOptions::default()
        };
        let worker = (threads > 1).then_some(index);
        let result = if log == LogLevel::Trace {
            let mut obs = LogObserver::new(sink, worker);
            search_split_with(g, mode, worker_limits, &clock, &mut obs, options)
        } else {
            search_split_with(g, mode, worker_limits, &clock, &mut Silent, options)
        }?;
        if result.outcome.is_yes() {
            cancel.store(true, Ordering::Relaxed);
        }
        Ok(result)
    };
    let parts: Vec<Result<SearchResult, SplitError>> = if threads == 1 {
        vec![run(0)]
    } else {
        std::thread::scope(|s| {
            let handles: Vec<_> = (0..threads).map(|k| s.spawn(move || run(k))).collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("search worker panicked"))
                .collect()
        })
    };
    let mut stats = SearchStats::default();
    let mut outcomes = Vec::with_capacity(parts.len());
    for part in parts {
        let part = part?;
        stats.nodes += part.stats.nodes;
        for (total, p) in stats.prunes.iter_mut().zip(part.stats.prunes) {
            *total += p;
        }
        outcomes.push(part.outcome);
    }
    let result = SearchResult {
        outcome: SearchOutcome::merge(outcomes),
        stats,
    };
    if log != LogLevel::Off {
        let verdict = match result.outcome {
            SearchOutcome::Yes(_) => "yes",
            SearchOutcome::No => "no",
            SearchOutcome::Exhausted => "exhausted",
        };
        let _ = writeln!(
            sink.lock().unwrap(),
            "split search {mode}: {verdict} in {} ms, {}",
            start.elapsed().as_millis(),
            stats_line(&result.stats)
        );
    }
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use dinterval_core::generators::{complete_bipartite, counterexample_graph};
    use dinterval_core::split::verify_split;

    fn quiet() -> Mutex<Vec<u8>> {
        Mutex::new(Vec::new())
    }

    #[test]
    fn log_levels() {
        assert_eq!("TRACE".parse::<LogLevel>(), Ok(LogLevel::Trace));
        assert_eq!("off".parse::<LogLevel>(), Ok(LogLevel::Off));
        assert_eq!("info".parse::<LogLevel>(), Ok(LogLevel::Info));
        assert!("loud".parse::<LogLevel>().is_err());
    }

    #[test]
    fn threads_agree() {
        let cases = [
            (counterexample_graph(0).unwrap(), Mode::Disjoint),
            (complete_bipartite(3, 3), Mode::NonDisjoint),
            (complete_bipartite(5, 3), Mode::NonDisjoint),
        ];
        for (g, mode) in cases {
            let sink = quiet();
            let one = search_parallel(&g, mode, SearchLimits::unlimited(), 1, LogLevel::Off, &sink)
                .unwrap();
            for threads in [2, 4] {
                let many = search_parallel(
                    &g,
                    mode,
                    SearchLimits::unlimited(),
                    threads,
                    LogLevel::Off,
                    &sink,
                )
                .unwrap();
                assert_eq!(one.outcome.is_yes(), many.outcome.is_yes());
                assert_eq!(
                    one.outcome == SearchOutcome::No,
                    many.outcome == SearchOutcome::No
                );
                if let SearchOutcome::Yes(s) = &many.outcome {
                    assert!(verify_split(&g, s, mode).ok());
                }
            }
        }
    }

    #[test]
    fn trace_and_info_lines() {
        let star = Graph::from_edges(6, (2..=6).map(|l| (1, l))).unwrap();
        let sink = quiet();
        let r = search_parallel(
            &star,
            Mode::Disjoint,
            SearchLimits::default(),
            1,
            LogLevel::Trace,
            &sink,
        )
        .unwrap();
        assert_eq!(r.outcome, SearchOutcome::No);
        let text = String::from_utf8(sink.into_inner().unwrap()).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "0\troot\tk15");
        assert!(lines[1].starts_with("split search disjoint: no in "));
        assert!(lines[1].contains(" k15=1 "));
    }

    #[test]
    fn budget_is_shared() {
        let g = counterexample_graph(1).unwrap();
        let limits = SearchLimits {
            node_budget: 100,
            time_budget_ms: None,
        };
        let r = search_parallel(&g, Mode::Disjoint, limits, 2, LogLevel::Off, &quiet()).unwrap();
        assert_eq!(r.outcome, SearchOutcome::Exhausted);
        assert!(r.stats.nodes <= 102);
    }
}
