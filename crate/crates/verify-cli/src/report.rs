//! Per-theorem verification reports and the run orchestrator.
//!
//! One [`BoundReport`] compares a claimed bound (always fetched from the
//! bound layer — no constant is duplicated here) against the empirical
//! extrema of the matching functional over the sample pool, then assesses
//! sharpness against the designated witness of the branch that fired.
//!
//! Verdict policy, in order:
//!
//! * an empirical value beyond a claimed bound (past the consistency
//!   tolerance), or a designated witness that misses its claimed value
//!   (past the sharpness tolerance), flags the report — discrepancies are
//!   reported, never papered over, and never abort the run;
//! * otherwise, if every designated witness lands on its bound, the
//!   verdict upgrades to sharpness-attained;
//! * otherwise the report is merely consistent — this is the honest
//!   verdict for statements whose extremal configuration lies outside
//!   the named catalog (the `|a₂a₃ − a₄|` bound on the starlike class is
//!   the one such case in the suite).

use std::time::{SystemTime, UNIX_EPOCH};

use bounds::{theorem_bound, Theorem};
use class_maps::{catalog, conjecture_extremal, extremal_member, ClassMember, ClassTag, Provenance};
use functionals::{evaluate, log_coeffs_via_series, FunctionalName};
use num_complex::Complex64;

use crate::config::{
    FunctionalSelector, OutputFormat, RunConfig, VerifyError, CONSISTENCY_TOL, SERIES_ORDER,
    SHARPNESS_TOL,
};
use crate::extrema::empirical_extrema;
use crate::sampler::{fs_witness_members, sample_members};

/// Outcome of comparing one statement against the samples.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    /// No violation; sharpness not certified by a designated witness.
    Consistent,
    /// No violation, and every designated witness attains its bound.
    SharpnessAttained,
    /// A violation, or a designated witness that misses its bound.
    DiscrepancyFlagged,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Consistent => "CONSISTENT",
            Verdict::SharpnessAttained => "SHARPNESS_ATTAINED",
            Verdict::DiscrepancyFlagged => "DISCREPANCY_FLAGGED",
        }
    }
}

/// One statement checked against one pool.
#[derive(Debug, Clone)]
pub struct BoundReport {
    /// Stable statement id (`gamma_1`, `toeplitz_t21`, …).
    pub theorem: String,
    pub class_tag: ClassTag,
    /// Which piecewise branch of the claimed bound fired.
    pub branch: String,
    /// The (λ, μ) pair, for the Fekete–Szegő statements.
    pub fs_pair: Option<(Complex64, f64)>,
    pub claimed_lower: Option<f64>,
    pub claimed_upper: Option<f64>,
    pub empirical_min: f64,
    pub empirical_max: f64,
    /// Replayable construction of the minimizing sample.
    pub attained_min_by: String,
    /// Replayable construction of the maximizing sample.
    pub attained_max_by: String,
    /// Claimed upper − empirical max (slack left under the bound).
    pub gap_upper: Option<f64>,
    /// Empirical min − claimed lower.
    pub gap_lower: Option<f64>,
    pub verdict: Verdict,
    /// Human-readable notes attached by the verdict logic; non-empty
    /// exactly on flagged reports.
    pub annotations: Vec<String>,
}

/// Everything a run produces: the reports, the flagged summaries, and the
/// serialized document that was (or would be) written.
#[derive(Debug, Clone)]
pub struct RunOutcome {
    pub reports: Vec<BoundReport>,
    pub discrepancies: Vec<String>,
    pub rendered: String,
}

impl RunOutcome {
    pub fn has_flags(&self) -> bool {
        !self.discrepancies.is_empty()
    }
}

/// The statements a selector expands to, in report order.
fn selected_theorems(cfg: &RunConfig) -> Vec<Theorem> {
    let fs_reports = |out: &mut Vec<Theorem>| {
        for (lambda, mu) in cfg.fs_pairs() {
            out.push(Theorem::FeketeSzegoUpper { lambda, mu });
            out.push(Theorem::FeketeSzegoLower { lambda, mu });
        }
    };
    let mut theorems = Vec::new();
    match cfg.selector {
        FunctionalSelector::Gamma(n) => theorems.push(Theorem::Gamma { n }),
        FunctionalSelector::T21 => theorems.push(Theorem::T21),
        FunctionalSelector::Zalcman => theorems.push(Theorem::Zalcman),
        FunctionalSelector::FeketeSzego => fs_reports(&mut theorems),
        FunctionalSelector::All => {
            for n in 1..=4 {
                theorems.push(Theorem::Gamma { n });
            }
            theorems.push(Theorem::T21);
            theorems.push(Theorem::Zalcman);
            fs_reports(&mut theorems);
        }
    }
    if let Some(n) = cfg.conjecture_n {
        theorems.push(Theorem::ConjectureGamma { n });
    }
    theorems
}

fn theorem_label(theorem: &Theorem) -> String {
    match theorem {
        Theorem::Gamma { n } => format!("gamma_{n}"),
        Theorem::ConjectureGamma { n } => format!("gamma_conjecture_{n}"),
        Theorem::T21 => "toeplitz_t21".into(),
        Theorem::Zalcman => "zalcman_23".into(),
        Theorem::FeketeSzegoUpper { .. } => "fekete_szego_upper".into(),
        Theorem::FeketeSzegoLower { .. } => "fekete_szego_lower".into(),
    }
}

fn fs_pair_of(theorem: &Theorem) -> Option<(Complex64, f64)> {
    match theorem {
        Theorem::FeketeSzegoUpper { lambda, mu } | Theorem::FeketeSzegoLower { lambda, mu } => {
            Some((*lambda, *mu))
        }
        _ => None,
    }
}

/// The functional evaluator for a statement. Coefficient indices up to 4
/// go through the polynomial evaluators; the conjecture probe reads the
/// series logarithm directly, which is the whole point of the probe — it
/// must not share a code path with the claims it checks.
fn make_eval(theorem: Theorem) -> Box<dyn Fn(&ClassMember) -> Result<f64, VerifyError>> {
    match theorem {
        Theorem::Gamma { n } => {
            Box::new(move |m| Ok(evaluate(FunctionalName::Gamma(n), m)?.value))
        }
        Theorem::ConjectureGamma { n } => Box::new(move |m| {
            let needed = n as usize + 1;
            if m.max_index() < needed {
                return Err(VerifyError::TruncationTooLow {
                    needed,
                    got: m.max_index(),
                });
            }
            let gammas = log_coeffs_via_series(&m.to_series(), n as usize)?;
            Ok(gammas[n as usize - 1].norm())
        }),
        Theorem::T21 => Box::new(|m| Ok(evaluate(FunctionalName::T21, m)?.value)),
        Theorem::Zalcman => Box::new(|m| Ok(evaluate(FunctionalName::Zalcman23, m)?.value)),
        Theorem::FeketeSzegoUpper { lambda, mu } | Theorem::FeketeSzegoLower { lambda, mu } => {
            Box::new(move |m| Ok(evaluate(FunctionalName::FeketeSzego { lambda, mu }, m)?.value))
        }
    }
}

/// Which side of a bound a witness is designated for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Side {
    Lower,
    Upper,
}

impl Side {
    fn as_str(&self) -> &'static str {
        match self {
            Side::Lower => "lower",
            Side::Upper => "upper",
        }
    }
}

/// The designated witnesses of a statement on the branch that fired:
/// members whose functional value is claimed to *equal* the bound.
///
/// The `|a₂a₃ − a₄|` bound on the starlike class designates none — its
/// extremal configuration is a two-atom generator outside the catalog, so
/// the best the report can certify is consistency.
fn designated_witnesses(
    theorem: &Theorem,
    class_tag: ClassTag,
    branch: &str,
) -> Result<Vec<(Side, ClassMember)>, VerifyError> {
    let from_catalog = |index: usize| -> Result<ClassMember, VerifyError> {
        let spec = &catalog(class_tag)[index];
        Ok(extremal_member(spec, SERIES_ORDER)?.0)
    };
    match theorem {
        Theorem::Gamma { n } => Ok(vec![(Side::Upper, from_catalog(*n as usize - 1)?)]),
        Theorem::ConjectureGamma { n } => {
            let spec = conjecture_extremal(*n);
            Ok(vec![(
                Side::Upper,
                extremal_member(&spec, SERIES_ORDER)?.0,
            )])
        }
        Theorem::T21 => Ok(vec![
            (Side::Upper, from_catalog(0)?),
            (Side::Lower, from_catalog(1)?),
        ]),
        Theorem::Zalcman => match class_tag {
            ClassTag::StarlikeE => Ok(vec![]),
            ClassTag::ConvexE => Ok(vec![(Side::Upper, from_catalog(2)?)]),
        },
        Theorem::FeketeSzegoUpper { .. } => {
            let index = if branch == "upper_difference" { 0 } else { 1 };
            Ok(vec![(Side::Upper, from_catalog(index)?)])
        }
        Theorem::FeketeSzegoLower { lambda, mu } => {
            if branch == "lower_linear" {
                return Ok(vec![(Side::Lower, from_catalog(0)?)]);
            }
            let witnesses = fs_witness_members(class_tag, *lambda, *mu)?;
            let index = if branch == "lower_radical" { 0 } else { 1 };
            Ok(vec![(Side::Lower, witnesses[index].clone())])
        }
    }
}

fn witness_id(member: &ClassMember) -> String {
    match member.provenance() {
        Provenance::Extremal(id) => id.clone(),
        other => provenance_label(other),
    }
}

/// Checks one statement against the pool: claimed bound, empirical
/// extrema (with the statement's own boundary witnesses merged into the
/// stream, so attainable bounds are actually attained), witness
/// assessment, verdict.
pub fn assess_theorem(
    cfg: &RunConfig,
    pool: &[ClassMember],
    theorem: &Theorem,
) -> Result<BoundReport, VerifyError> {
    let claimed = theorem_bound(theorem, cfg.class_tag)?;
    let eval = make_eval(*theorem);

    let extras = match theorem {
        Theorem::FeketeSzegoUpper { lambda, mu } | Theorem::FeketeSzegoLower { lambda, mu } => {
            fs_witness_members(cfg.class_tag, *lambda, *mu)?
        }
        Theorem::ConjectureGamma { n } => {
            vec![extremal_member(&conjecture_extremal(*n), SERIES_ORDER)?.0]
        }
        _ => Vec::new(),
    };

    let extrema = empirical_extrema(
        pool,
        &extras,
        cfg.class_tag,
        cfg.refine_iterations,
        eval.as_ref(),
    )?;

    let mut annotations = Vec::new();
    if let Some(upper) = claimed.upper {
        if extrema.max.value > upper + CONSISTENCY_TOL {
            annotations.push(format!(
                "empirical maximum {} exceeds the claimed upper bound {} by {:.3e}",
                fmt_f(extrema.max.value),
                fmt_f(upper),
                extrema.max.value - upper
            ));
        }
    }
    if let Some(lower) = claimed.lower {
        if extrema.min.value < lower - CONSISTENCY_TOL {
            annotations.push(format!(
                "empirical minimum {} undercuts the claimed lower bound {} by {:.3e}",
                fmt_f(extrema.min.value),
                fmt_f(lower),
                lower - extrema.min.value
            ));
        }
    }

    let witnesses = designated_witnesses(theorem, cfg.class_tag, &claimed.branch_taken)?;
    let mut any_witness = false;
    let mut all_attained = true;
    for (side, member) in &witnesses {
        any_witness = true;
        let value = eval(member)?;
        let target = match side {
            Side::Upper => claimed.upper,
            Side::Lower => claimed.lower,
        }
        .expect("witness designated for a side the bound does not have");
        if (value - target).abs() > SHARPNESS_TOL {
            all_attained = false;
            annotations.push(format!(
                "designated witness {} evaluates to {} but the claimed {} bound is {}; \
                 the stated sharpness conflicts with its own witness",
                witness_id(member),
                fmt_f(value),
                side.as_str(),
                fmt_f(target)
            ));
        }
    }

    let verdict = if !annotations.is_empty() {
        Verdict::DiscrepancyFlagged
    } else if any_witness && all_attained {
        Verdict::SharpnessAttained
    } else {
        Verdict::Consistent
    };

    Ok(BoundReport {
        theorem: theorem_label(theorem),
        class_tag: cfg.class_tag,
        branch: claimed.branch_taken.clone(),
        fs_pair: fs_pair_of(theorem),
        claimed_lower: claimed.lower,
        claimed_upper: claimed.upper,
        empirical_min: extrema.min.value,
        empirical_max: extrema.max.value,
        attained_min_by: provenance_label(&extrema.min.provenance),
        attained_max_by: provenance_label(&extrema.max.provenance),
        gap_upper: claimed.upper.map(|u| u - extrema.max.value),
        gap_lower: claimed.lower.map(|l| extrema.min.value - l),
        verdict,
        annotations,
    })
}

/// Probes a conjectured coefficient bound beyond the proved range,
/// n = 5..=7 on the starlike class: the coefficient comes straight off
/// the series logarithm, the claimed value from the bound layer with its
/// `conjectured` branch label.
pub fn conjecture_probe(
    cfg: &RunConfig,
    pool: &[ClassMember],
    n: u32,
) -> Result<BoundReport, VerifyError> {
    if !(5..=7).contains(&n) {
        return Err(VerifyError::Config(format!(
            "conjecture probe index must be 5..=7, got {n}"
        )));
    }
    if cfg.class_tag != ClassTag::StarlikeE {
        return Err(VerifyError::Config(
            "the conjectured coefficient bound is stated for star_e only".into(),
        ));
    }
    assess_theorem(cfg, pool, &Theorem::ConjectureGamma { n })
}

/// Runs the configured suite: builds the pool, assesses every selected
/// statement, serializes, and writes the report if a path is configured.
/// Flagged discrepancies do not abort — they are the run's findings.
pub fn run_report(cfg: &RunConfig) -> Result<RunOutcome, VerifyError> {
    cfg.validate()?;
    let pool = sample_members(cfg)?;
    run_report_with_pool(cfg, &pool)
}

/// [`run_report`] on a caller-supplied pool (the pool must come from
/// [`sample_members`] with the same config for the report to be
/// meaningful; split out so test suites can share one expensive pool).
pub fn run_report_with_pool(
    cfg: &RunConfig,
    pool: &[ClassMember],
) -> Result<RunOutcome, VerifyError> {
    cfg.validate()?;
    let mut reports = Vec::new();
    for theorem in selected_theorems(cfg) {
        reports.push(assess_theorem(cfg, pool, &theorem)?);
    }

    let mut discrepancies = Vec::new();
    for report in &reports {
        if report.verdict == Verdict::DiscrepancyFlagged {
            for note in &report.annotations {
                discrepancies.push(format!("{}: {}", report_key(report), note));
            }
        }
    }

    let generated_at = SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0);
    let rendered = match cfg.output_format {
        OutputFormat::Json => render_json(cfg, &reports, &discrepancies, generated_at),
        OutputFormat::Csv => render_csv(&reports),
        OutputFormat::Markdown => render_markdown(cfg, &reports, &discrepancies, generated_at),
    };
    if let Some(path) = &cfg.output_path {
        std::fs::write(path, &rendered)?;
    }
    Ok(RunOutcome {
        reports,
        discrepancies,
        rendered,
    })
}

/// Stable one-line identifier of a report, unique within a run.
fn report_key(report: &BoundReport) -> String {
    match report.fs_pair {
        Some((lambda, mu)) => format!(
            "{}(lambda=[{}, {}], mu={})",
            report.theorem,
            fmt_f(lambda.re),
            fmt_f(lambda.im),
            fmt_f(mu)
        ),
        None => report.theorem.clone(),
    }
}

/// Replayable text form of a sample's construction.
pub fn provenance_label(provenance: &Provenance) -> String {
    match provenance {
        Provenance::Extremal(id) => format!("extremal:{id}"),
        Provenance::Direct => "direct".into(),
        Provenance::FromSchwarz(spec) => {
            let zeros: Vec<String> = spec.zeros.iter().map(|z| fmt_c(*z)).collect();
            format!(
                "schwarz:phase={};zeros=[{}]",
                fmt_f(spec.phase),
                zeros.join(",")
            )
        }
        Provenance::FromTau { params, tail } => format!(
            "tau:t1={};t2={};t3={};t4={}",
            fmt_f(params.tau1()),
            fmt_c(params.tau2()),
            fmt_c(params.tau3()),
            tail.map_or_else(|| "none".into(), fmt_c),
        ),
    }
}

/// 17-significant-digit scientific form: enough to round-trip any f64.
fn fmt_f(v: f64) -> String {
    format!("{v:.16e}")
}

fn fmt_c(v: Complex64) -> String {
    format!("{:.16e}{:+.16e}i", v.re, v.im)
}

fn json_escaped(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    for ch in s.chars() {
        match ch {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            c if (c as u32) < 0x20 => out.push_str(&format!("\\u{:04x}", c as u32)),
            c => out.push(c),
        }
    }
    out
}

fn json_opt(v: Option<f64>) -> String {
    v.map_or_else(|| "null".into(), fmt_f)
}

/// Pretty JSON, one field per line so the timestamp can be excluded from
/// byte comparisons by dropping its line. The output path is deliberately
/// not echoed: two runs differing only in destination must serialize
/// identically.
fn render_json(
    cfg: &RunConfig,
    reports: &[BoundReport],
    discrepancies: &[String],
    generated_at: u64,
) -> String {
    let mut out = String::new();
    out.push_str("{\n");
    out.push_str("  \"config\": {\n");
    out.push_str(&format!(
        "    \"class\": \"{}\",\n",
        cfg.class_tag.as_str()
    ));
    out.push_str(&format!("    \"functional\": \"{}\",\n", cfg.selector));
    out.push_str(&format!("    \"sample_count\": {},\n", cfg.sample_count));
    out.push_str(&format!(
        "    \"schwarz_degree\": {},\n",
        cfg.schwarz_degree
    ));
    out.push_str(&format!(
        "    \"tau_grid_density\": {},\n",
        cfg.tau_grid_density
    ));
    out.push_str(&format!("    \"seed\": {},\n", cfg.seed));
    out.push_str(&format!(
        "    \"refine_iterations\": {},\n",
        cfg.refine_iterations
    ));
    let covers_fs = matches!(
        cfg.selector,
        FunctionalSelector::FeketeSzego | FunctionalSelector::All
    );
    let pairs: Vec<String> = if covers_fs {
        cfg.fs_pairs()
            .iter()
            .map(|(l, mu)| format!("[{}, {}, {}]", fmt_f(l.re), fmt_f(l.im), fmt_f(*mu)))
            .collect()
    } else {
        Vec::new()
    };
    out.push_str(&format!(
        "    \"fekete_szego_pairs\": [{}],\n",
        pairs.join(", ")
    ));
    out.push_str(&format!(
        "    \"conjecture_n\": {},\n",
        cfg.conjecture_n
            .map_or_else(|| "null".into(), |n| n.to_string())
    ));
    out.push_str(&format!(
        "    \"format\": \"{}\"\n",
        cfg.output_format.as_str()
    ));
    out.push_str("  },\n");
    out.push_str(&format!("  \"generated_at\": {generated_at},\n"));
    out.push_str("  \"reports\": [\n");
    for (i, r) in reports.iter().enumerate() {
        out.push_str("    {\n");
        out.push_str(&format!("      \"theorem\": \"{}\",\n", r.theorem));
        out.push_str(&format!(
            "      \"class\": \"{}\",\n",
            r.class_tag.as_str()
        ));
        out.push_str(&format!("      \"branch\": \"{}\",\n", r.branch));
        if let Some((lambda, mu)) = r.fs_pair {
            out.push_str(&format!(
                "      \"lambda\": [{}, {}],\n",
                fmt_f(lambda.re),
                fmt_f(lambda.im)
            ));
            out.push_str(&format!("      \"mu\": {},\n", fmt_f(mu)));
        }
        out.push_str(&format!(
            "      \"claimed\": {{\"lower\": {}, \"upper\": {}}},\n",
            json_opt(r.claimed_lower),
            json_opt(r.claimed_upper)
        ));
        out.push_str(&format!(
            "      \"empirical_min\": {},\n",
            fmt_f(r.empirical_min)
        ));
        out.push_str(&format!(
            "      \"empirical_max\": {},\n",
            fmt_f(r.empirical_max)
        ));
        out.push_str(&format!(
            "      \"attained_min_by\": \"{}\",\n",
            json_escaped(&r.attained_min_by)
        ));
        out.push_str(&format!(
            "      \"attained_max_by\": \"{}\",\n",
            json_escaped(&r.attained_max_by)
        ));
        out.push_str(&format!(
            "      \"gap\": {{\"lower\": {}, \"upper\": {}}},\n",
            json_opt(r.gap_lower),
            json_opt(r.gap_upper)
        ));
        out.push_str(&format!(
            "      \"verdict\": \"{}\",\n",
            r.verdict.as_str()
        ));
        out.push_str(&format!(
            "      \"tolerances\": {{\"consistency\": {}, \"sharpness\": {}}},\n",
            fmt_f(CONSISTENCY_TOL),
            fmt_f(SHARPNESS_TOL)
        ));
        let notes: Vec<String> = r
            .annotations
            .iter()
            .map(|a| format!("\"{}\"", json_escaped(a)))
            .collect();
        out.push_str(&format!("      \"annotations\": [{}]\n", notes.join(", ")));
        out.push_str(if i + 1 == reports.len() {
            "    }\n"
        } else {
            "    },\n"
        });
    }
    out.push_str("  ],\n");
    let flagged: Vec<String> = discrepancies
        .iter()
        .map(|d| format!("\"{}\"", json_escaped(d)))
        .collect();
    out.push_str(&format!(
        "  \"discrepancies\": [{}]\n",
        flagged.join(", ")
    ));
    out.push_str("}\n");
    out
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n', '\r']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn csv_opt(v: Option<f64>) -> String {
    v.map_or_else(String::new, fmt_f)
}

/// RFC-4180 rows, CRLF line endings, one row per report. No timestamp:
/// the CSV form is byte-deterministic outright.
fn render_csv(reports: &[BoundReport]) -> String {
    let mut out = String::new();
    out.push_str(
        "theorem,class,branch,lambda_re,lambda_im,mu,claimed_lower,claimed_upper,\
         empirical_min,empirical_max,gap_lower,gap_upper,verdict,attained_min_by,\
         attained_max_by,annotations\r\n",
    );
    for r in reports {
        let (l_re, l_im, mu) = match r.fs_pair {
            Some((lambda, mu)) => (fmt_f(lambda.re), fmt_f(lambda.im), fmt_f(mu)),
            None => (String::new(), String::new(), String::new()),
        };
        let row = [
            r.theorem.clone(),
            r.class_tag.as_str().to_string(),
            r.branch.clone(),
            l_re,
            l_im,
            mu,
            csv_opt(r.claimed_lower),
            csv_opt(r.claimed_upper),
            fmt_f(r.empirical_min),
            fmt_f(r.empirical_max),
            csv_opt(r.gap_lower),
            csv_opt(r.gap_upper),
            r.verdict.as_str().to_string(),
            r.attained_min_by.clone(),
            r.attained_max_by.clone(),
            r.annotations.join("; "),
        ];
        let quoted: Vec<String> = row.iter().map(|f| csv_field(f)).collect();
        out.push_str(&quoted.join(","));
        out.push_str("\r\n");
    }
    out
}

fn md_range(lower: Option<f64>, upper: Option<f64>) -> String {
    match (lower, upper) {
        (Some(l), Some(u)) => format!("[{l:.10e}, {u:.10e}]"),
        (None, Some(u)) => format!("<= {u:.10e}"),
        (Some(l), None) => format!(">= {l:.10e}"),
        (None, None) => "-".into(),
    }
}

/// Markdown summary for humans: config header, one table row per report,
/// attainment and discrepancy sections.
fn render_markdown(
    cfg: &RunConfig,
    reports: &[BoundReport],
    discrepancies: &[String],
    generated_at: u64,
) -> String {
    let mut out = String::new();
    out.push_str("# Coefficient-bound verification report\n\n");
    out.push_str(&format!(
        "- class: `{}`, functional: `{}`\n",
        cfg.class_tag.as_str(),
        cfg.selector
    ));
    out.push_str(&format!(
        "- samples: {} random draws (degree <= {}) + tau grid (density {}) + extremal catalog\n",
        cfg.sample_count, cfg.schwarz_degree, cfg.tau_grid_density
    ));
    out.push_str(&format!(
        "- seed: {}, refinement rounds: {}\n",
        cfg.seed, cfg.refine_iterations
    ));
    out.push_str(&format!(
        "- tolerances: consistency {CONSISTENCY_TOL:.1e}, sharpness {SHARPNESS_TOL:.1e}\n"
    ));
    out.push_str(&format!("- generated_at: {generated_at}\n"));
    out.push('\n');
    out.push_str(
        "| theorem | branch | lambda | mu | claimed | empirical [min, max] | gap [lower, upper] | verdict |\n",
    );
    out.push_str("|---|---|---|---|---|---|---|---|\n");
    for r in reports {
        let (lambda, mu) = match r.fs_pair {
            Some((l, mu)) => (format!("{:.3}{:+.3}i", l.re, l.im), format!("{mu:.3}")),
            None => ("-".into(), "-".into()),
        };
        out.push_str(&format!(
            "| {} | {} | {} | {} | {} | [{:.10e}, {:.10e}] | {} | {} |\n",
            r.theorem,
            r.branch,
            lambda,
            mu,
            md_range(r.claimed_lower, r.claimed_upper),
            r.empirical_min,
            r.empirical_max,
            md_range(r.gap_lower, r.gap_upper),
            r.verdict.as_str()
        ));
    }
    out.push_str("\n## Attainment\n\n");
    for r in reports {
        out.push_str(&format!(
            "- {}: max at `{}`, min at `{}`\n",
            report_key(r),
            r.attained_max_by,
            r.attained_min_by
        ));
    }
    out.push_str("\n## Discrepancies\n\n");
    if discrepancies.is_empty() {
        out.push_str("None.\n");
    } else {
        for d in discrepancies {
            out.push_str(&format!("- {d}\n"));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels_and_keys_are_stable() {
        assert_eq!(theorem_label(&Theorem::Gamma { n: 3 }), "gamma_3");
        assert_eq!(theorem_label(&Theorem::T21), "toeplitz_t21");
        assert_eq!(
            theorem_label(&Theorem::ConjectureGamma { n: 5 }),
            "gamma_conjecture_5"
        );
    }

    #[test]
    fn csv_quoting_follows_rfc4180() {
        assert_eq!(csv_field("plain"), "plain");
        assert_eq!(csv_field("a,b"), "\"a,b\"");
        assert_eq!(csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
    }

    #[test]
    fn selector_expansion_counts() {
        let cfg = RunConfig::baseline(ClassTag::StarlikeE, FunctionalSelector::All);
        // Four coefficient statements, the Toeplitz pair, the product
        // bound, and one Fekete-Szego pair in both directions.
        assert_eq!(selected_theorems(&cfg).len(), 8);

        let cfg = RunConfig::baseline(ClassTag::StarlikeE, FunctionalSelector::FeketeSzego);
        assert_eq!(selected_theorems(&cfg).len(), 70);
    }
}
