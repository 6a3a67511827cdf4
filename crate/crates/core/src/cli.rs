//! Command-line front end. `run` returns the process exit code:
//! 0 success, 1 a verification assertion failed, 2 bad input, 3 a search bound was hit.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::ops::RangeInclusive;

use clap::{Parser, Subcommand, ValueEnum};

use crate::actions::{GeneratingVector, OrbitSpace, SearchLimits};
use crate::error::Error;
use crate::extensions::{classify_genus_with, ClassificationReport, ClassifyOptions, Stratum};
use crate::geometry::Signature;
use crate::group::GroupSpec;
use crate::jacobian::{BuiltinCollection, DecompositionReport};
use crate::verify::{verify_range, VerifySummary};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ASSERTION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BOUND: i32 = 3;

/// Environment variable overriding `--workers`.
pub const WORKERS_ENV: &str = "SURFACE_ACTIONS_WORKERS";

#[derive(Debug, Parser)]
#[command(name = "surface-actions", version, about = "Large cyclic-by-cyclic automorphism groups of surfaces of genus q+1")]
pub struct Cli {
    /// Worker threads for the enumeration (default: all cores).
    #[arg(long, global = true)]
    pub workers: Option<usize>,

    /// Upper bound on stored canonical tuples per orbit space.
    #[arg(long, global = true, default_value_t = SearchLimits::default().max_nodes)]
    pub max_nodes: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify the actions of order λ(g−1) on surfaces of genus g.
    Classify {
        #[arg(long)]
        genus: u64,
        #[arg(long)]
        lambda: u64,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        /// Representatives printed per stratum.
        #[arg(long, default_value_t = 16, value_parser = clap::value_parser!(u64).range(1..))]
        orbit_cap: u64,
    },
    /// Enumerate the equivalence classes of generating vectors for one group and signature.
    Vectors {
        /// n,m,r or n,m,r,central for (C_n ⋊_r C_m) × C_2.
        #[arg(long, value_parser = parse_group)]
        group: GroupSpec,
        /// For example `0;5,5,5` or `1;3`.
        #[arg(long)]
        signature: Signature,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        #[arg(long, default_value_t = 16, value_parser = clap::value_parser!(u64).range(1..))]
        orbit_cap: u64,
    },
    /// Decompose the Jacobian of every action of a group with a signature.
    Jacobian {
        #[arg(long, value_parser = parse_group)]
        group: GroupSpec,
        #[arg(long)]
        signature: Signature,
        /// Defaults to {⟨a⟩, ⟨a^t c z⟩} when the group has a central involution, {⟨a⟩, ⟨a^t c⟩} otherwise.
        #[arg(long, value_enum)]
        collection: Option<CollectionArg>,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Re-check the predicted counts, extensions and Jacobian dimensions for every prime in a range.
    Verify {
        /// Inclusive range `lo..hi`.
        #[arg(long, value_parser = parse_range, default_value = "7..101")]
        q_range: RangeInclusive<u64>,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CollectionArg {
    Twist,
    CentralTwist,
}

fn parse_group(s: &str) -> Result<GroupSpec, String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if !(3..=4).contains(&parts.len()) {
        return Err(format!("expected n,m,r[,central], got {s:?}"));
    }
    let num = |t: &str| t.parse::<u32>().map_err(|e| format!("{t:?}: {e}"));
    let central = match parts.get(3) {
        None => false,
        Some(&("1" | "true" | "central")) => true,
        Some(&("0" | "false")) => false,
        Some(other) => return Err(format!("bad central flag {other:?}")),
    };
    GroupSpec::new(num(parts[0])?, num(parts[1])?, num(parts[2])?, central).map_err(|e| e.to_string())
}

fn parse_range(s: &str) -> Result<RangeInclusive<u64>, String> {
    let (lo, hi) = s.split_once("..").ok_or_else(|| format!("expected lo..hi, got {s:?}"))?;
    let lo: u64 = lo.trim().parse().map_err(|e| format!("{lo:?}: {e}"))?;
    let hi: u64 = hi.trim().trim_start_matches('=').parse().map_err(|e| format!("{hi:?}: {e}"))?;
    if lo > hi {
        return Err(format!("empty range {lo}..{hi}"));
    }
    Ok(lo..=hi)
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::BoundExceeded { .. } => EXIT_BOUND,
        _ => EXIT_USAGE,
    }
}

/// Worker count from the environment, then the flag.
fn worker_count(flag: Option<usize>) -> Option<usize> {
    std::env::var(WORKERS_ENV).ok().and_then(|v| v.trim().parse().ok()).filter(|&n| n > 0).or(flag)
}

/// Parses `args` (program name first), runs the command and returns the exit code.
pub fn run<I, T>(args: I, out: &mut impl std::io::Write, err: &mut impl std::io::Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(n) = worker_count(cli.workers) {
        pool = pool.num_threads(n);
    }
    let pool = match pool.build() {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_USAGE;
        }
    };
    let limits = SearchLimits { max_nodes: cli.max_nodes };
    let result = pool.install(|| execute(&cli.command, limits));
    match result {
        Ok((text, code)) => {
            let _ = out.write_all(text.as_bytes());
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn execute(command: &Command, limits: SearchLimits) -> Result<(String, i32), Error> {
    match command {
        Command::Classify { genus, lambda, format, orbit_cap } => {
            let opts = ClassifyOptions { orbit_cap: *orbit_cap as usize, limits };
            let report = classify_genus_with(*genus, *lambda, &opts)?;
            let text = match format {
                Format::Json => json(&report),
                Format::Table => classify_table(&report),
            };
            Ok((text, EXIT_OK))
        }
        Command::Vectors { group, signature, format, orbit_cap } => {
            let space = OrbitSpace::build(*group, signature, limits)?;
            let mut orbits = space.orbits();
            orbits.truncate(*orbit_cap as usize);
            let text = match format {
                Format::Json => json(&serde_json::json!({
                    "group": group,
                    "signature": signature,
                    "vector_count": space.total_vectors(),
                    "orbit_count": space.orbit_count(),
                    "orbits": orbits,
                })),
                Format::Table => {
                    let mut s = String::new();
                    let _ = writeln!(
                        s,
                        "{} with signature {}: {} vectors, {} orbits",
                        group,
                        signature,
                        space.total_vectors(),
                        space.orbit_count()
                    );
                    for (k, o) in orbits.iter().enumerate() {
                        let tag = if o.existence_only { " (existence only)" } else { "" };
                        let _ = writeln!(s, "  orbit {k}: size {}{tag}  {}", o.size, vector_text(&o.representative));
                    }
                    s
                }
            };
            Ok((text, EXIT_OK))
        }
        Command::Jacobian { group, signature, collection, format } => {
            let collection = match collection {
                Some(CollectionArg::Twist) => BuiltinCollection::TwistCosets,
                Some(CollectionArg::CentralTwist) => BuiltinCollection::CentralTwistCosets,
                None if group.has_central_involution() => BuiltinCollection::CentralTwistCosets,
                None => BuiltinCollection::TwistCosets,
            };
            let space = OrbitSpace::build(*group, signature, limits)?;
            if space.is_existence_only() {
                return Err(Error::UnsupportedGenus(signature.orbit_genus()));
            }
            let reports = (0..space.orbit_count())
                .map(|k| collection.decompose(&space.representative(k)))
                .collect::<Result<Vec<_>, _>>()?;
            let text = match format {
                Format::Json => json(&reports),
                Format::Table => jacobian_table(collection, &reports),
            };
            Ok((text, EXIT_OK))
        }
        Command::Verify { q_range, format } => {
            let opts = ClassifyOptions { limits, ..Default::default() };
            let summary = verify_range(*q_range.start(), *q_range.end(), &opts)?;
            let code = if summary.passed() { EXIT_OK } else { EXIT_ASSERTION };
            let text = match format {
                Format::Json => json(&summary),
                Format::Table => verify_table(&summary),
            };
            Ok((text, code))
        }
    }
}

fn json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}

fn vector_text(v: &GeneratingVector) -> String {
    let items: Vec<String> =
        v.handle_images().iter().chain(v.period_images()).map(ToString::to_string).collect();
    format!("[{}]", items.join(" "))
}

fn stratum_line(s: &mut String, st: &Stratum) {
    let _ = writeln!(
        s,
        "  {:<28} {:<16} {:>8} vectors {:>4} orbits{}",
        st.group_name,
        st.signature.to_string(),
        st.vector_count,
        st.orbit_count,
        if st.existence_only { " (existence only)" } else { "" }
    );
}

pub fn classify_table(r: &ClassificationReport) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "genus {} (q = {}), order {}q: {}; {} {}",
        r.genus,
        r.q,
        r.lambda,
        if r.existence { "actions exist" } else { "no actions" },
        r.condition,
        if r.condition_holds { "holds" } else { "fails" }
    );
    let _ = writeln!(s, "strata:");
    for st in &r.strata {
        stratum_line(&mut s, st);
        for v in &st.representatives {
            let _ = writeln!(s, "      {}", vector_text(v));
        }
        for e in &st.extends_to {
            let _ = writeln!(
                s,
                "    extends via {} into {} {}: {}",
                e.table,
                e.supergroup_name,
                e.super_signature,
                e.orbits
                    .iter()
                    .map(|o| format!("{}→{:?}", o.orbit, o.super_orbits))
                    .collect::<Vec<_>>()
                    .join(", ")
            );
        }
        if let Some(fa) = &st.full_aut {
            let _ = writeln!(s, "    full automorphism group {} (order {}, {:?}): {}", fa.group, fa.order, fa.provenance, fa.note);
        }
        for j in &st.jacobian {
            let factors: Vec<String> = j
                .factors
                .iter()
                .map(|f| format!("J(S/{})^{} [dim {}]", f.subgroup, f.multiplicity, f.genus))
                .collect();
            let _ = writeln!(
                s,
                "    orbit {} Jacobian ~ {} x P [dim {}]{}",
                j.orbit,
                factors.join(" x "),
                j.remainder,
                j.error.as_ref().map(|e| format!(" error: {e}")).unwrap_or_default()
            );
            for d in &j.deviation_notes {
                let _ = writeln!(
                    s,
                    "      note: {} has quotient genus {}, expected {}",
                    d.subgroup, d.computed_genus, d.expected_genus
                );
            }
        }
    }
    if !r.empty_strata.is_empty() {
        let _ = writeln!(s, "empty:");
        for e in &r.empty_strata {
            let _ = writeln!(s, "  {:<28} {}", e.group_name, e.signature);
        }
    }
    for t in &r.table_runs {
        let _ = writeln!(
            s,
            "table {}: {} evaluations, {} index violations, {} unmatched",
            t.table, t.evaluations, t.index_violations, t.unmatched
        );
    }
    for f in &r.facts {
        let _ = writeln!(s, "fact ({:?}, {}): {}", f.provenance, if f.holds { "holds" } else { "FAILS" }, f.statement);
    }
    for c in &r.excluded_by_citation {
        let _ = writeln!(s, "excluded: {} [{}]", c.claim, c.citation);
    }
    for c in &r.caveats {
        let _ = writeln!(s, "caveat: {c}");
    }
    s
}

fn jacobian_table(collection: BuiltinCollection, reports: &[DecompositionReport]) -> String {
    let mut s = String::new();
    for (k, r) in reports.iter().enumerate() {
        let _ = writeln!(s, "orbit {k}: genus {}, collection {}", r.genus, collection.name());
        for f in &r.factors {
            let _ = writeln!(s, "  J(S/{}) dim {} x{}", f.subgroup, f.genus, f.multiplicity);
        }
        let _ = writeln!(s, "  remainder dim {}", r.remainder_dim);
        for d in &r.deviation_notes {
            let _ = writeln!(s, "  note: {} has quotient genus {}, expected {}", d.subgroup, d.computed_genus, d.expected_genus);
        }
    }
    s
}

fn verify_table(v: &VerifySummary) -> String {
    let mut s = String::new();
    if v.primes.is_empty() {
        let _ = writeln!(s, "no primes in range");
        return s;
    }
    let primes: Vec<String> = v.primes.iter().map(u64::to_string).collect();
    let _ = writeln!(s, "primes: {}", primes.join(", "));
    for f in &v.flags {
        let _ = writeln!(s, "flag: {f}");
    }
    for f in &v.failures {
        let _ = writeln!(s, "FAILED q={} λ={}: {}", f.q, f.lambda, f.assertion);
    }
    if v.passed() {
        let _ = writeln!(s, "all assertions passed ({} checks)", v.checks);
    } else {
        let _ = writeln!(s, "{} of {} assertions failed", v.failures.len(), v.checks);
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(std::iter::once("surface-actions").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn classify_json_reports_four_orbits() {
        let (code, out, _) = run_args(&["classify", "--genus", "12", "--lambda", "5", "--format", "json"]);
        assert_eq!(code, 0);
        let r: ClassificationReport = serde_json::from_str(&out).unwrap();
        assert_eq!(r.strata.iter().find(|s| s.signature.to_string() == "(0; 5,5,5)").unwrap().orbit_count, 4);
        assert!(out.contains("\"orbit_count\": 4"));
    }

    #[test]
    fn composite_q_is_a_usage_error() {
        let (code, out, err) = run_args(&["classify", "--genus", "9", "--lambda", "5"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(out.is_empty());
        assert!(err.contains("q=8 is not prime"), "{err}");
        assert_eq!(run_args(&["classify", "--genus", "6", "--lambda", "5"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["classify", "--genus", "12", "--lambda", "5", "--orbit-cap", "0"]).0, EXIT_USAGE);
    }

    #[test]
    fn genus_fourteen_caveat() {
        let (code, out, _) = run_args(&["classify", "--genus", "14", "--lambda", "6", "--format", "json"]);
        assert_eq!(code, 0);
        assert!(out.contains("three non-isomorphic Riemann surfaces of genus 14"));
    }

    #[test]
    fn empty_verify_range() {
        let (code, out, _) = run_args(&["verify", "--q-range", "4..4"]);
        assert_eq!(code, 0);
        assert!(out.contains("no primes in range"));
        assert_eq!(run_args(&["verify", "--q-range", "9..4"]).0, EXIT_USAGE);
    }

    #[test]
    fn bound_exceeded_exit_code() {
        let (code, _, err) = run_args(&["--max-nodes", "3", "vectors", "--group", "11,5,3", "--signature", "0;5,5,5"]);
        assert_eq!(code, EXIT_BOUND, "{err}");
    }

    #[test]
    fn vectors_and_jacobian() {
        let (code, out, _) = run_args(&["vectors", "--group", "11,5,3", "--signature", "0;5,5,5"]);
        assert_eq!(code, 0);
        assert!(out.contains("4 orbits"), "{out}");
        let (code, out, _) = run_args(&["jacobian", "--group", "11,10,8", "--signature", "0;2,5,10", "--format", "json"]);
        assert_eq!(code, 0);
        let reports: Vec<DecompositionReport> = serde_json::from_str(&out).unwrap();
        assert_eq!(reports.len(), 4);
        assert!(reports.iter().all(|r| r.remainder_dim == 0 && r.genus == 12));
        assert_eq!(run_args(&["vectors", "--group", "11,5,2", "--signature", "0;5,5,5"]).0, EXIT_USAGE);
    }

    #[test]
    fn output_is_independent_of_worker_count() {
        let a = run_args(&["--workers", "1", "classify", "--genus", "8", "--lambda", "6", "--format", "json"]);
        let b = run_args(&["--workers", "4", "classify", "--genus", "8", "--lambda", "6", "--format", "json"]);
        assert_eq!(a, b);
    }
}
