//! The claim-by-claim verification report: every headline fact the workbench
//! is built to reproduce, each checked against a fresh computation and scored
//! PASS/FAIL, with EVIDENCE for bounded searches on open questions and INFO
//! for supplementary datapoints.

use crate::algebra::{corpus, corpus_algebra, SemiHeytingAlgebra};
use crate::config::RunConfig;
use crate::enumeration::{count_sh, enumerate_sh, find_countermodel, EnumerationTask};
use crate::equivalence::{roundtrip_check, to_connexive, to_heyting};
use crate::lattice::{make_chain, make_diamond, Elem, LatticeSpec};
use crate::proof::{check_proof, parse_proof_json, soundness_scan, KNOWN_LOGICS};
use crate::structure::is_subdirectly_irreducible;
use crate::terms::{fmt_assignment, holds_identity, holds_quasi, parse_identity};
use crate::varieties::{
    classify, descriptor_by_name, first_descriptor_failure, is_strongly_connexive_matrix,
    si_condition,
};
use serde::Serialize;
use std::collections::BTreeSet;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    Pass,
    Fail,
    /// A bounded search on an open question: supporting, never conclusive.
    Evidence,
    /// A supplementary datapoint, not scored.
    Info,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Evidence => "EVIDENCE",
            Verdict::Info => "INFO",
        })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ClaimRow {
    pub claim: String,
    pub citation: String,
    pub expected: String,
    pub computed: String,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, Default)]
pub struct Report {
    pub rows: Vec<ClaimRow>,
}

impl Report {
    fn add(
        &mut self,
        claim: impl Into<String>,
        citation: impl Into<String>,
        expected: impl Into<String>,
        computed: impl Into<String>,
        verdict: Verdict,
    ) {
        self.rows.push(ClaimRow {
            claim: claim.into(),
            citation: citation.into(),
            expected: expected.into(),
            computed: computed.into(),
            verdict,
        });
    }

    /// Adds a pass/fail row scored by whether computed matches expected.
    fn check(
        &mut self,
        claim: impl Into<String>,
        citation: impl Into<String>,
        expected: impl Into<String>,
        computed: impl Into<String>,
    ) {
        let (expected, computed) = (expected.into(), computed.into());
        let verdict = if expected == computed {
            Verdict::Pass
        } else {
            Verdict::Fail
        };
        self.add(claim, citation, expected, computed, verdict);
    }

    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.verdict != Verdict::Fail)
    }

    /// The report as a JSON array of rows.
    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.rows).expect("report rows serialize")
    }

    /// One line per row plus an overall summary line.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for r in &self.rows {
            out.push_str(&format!(
                "{}: computed {}, expected {} [{}] {}\n",
                r.claim, r.computed, r.expected, r.citation, r.verdict
            ));
        }
        let failed = self.rows.iter().filter(|r| r.verdict == Verdict::Fail).count();
        if failed == 0 {
            out.push_str(&format!("overall: PASS ({} rows)\n", self.rows.len()));
        } else {
            out.push_str(&format!(
                "overall: FAIL ({} of {} rows failed)\n",
                failed,
                self.rows.len()
            ));
        }
        out
    }
}

/// One enumerated algebra with its catalog memberships precomputed.
pub struct PoolEntry {
    /// `chain{n}#{index}` with the canonical-order index, zero-padded.
    pub label: String,
    pub algebra: SemiHeytingAlgebra,
    pub classes: BTreeSet<&'static str>,
}

impl PoolEntry {
    pub fn size(&self) -> usize {
        self.algebra.size()
    }

    pub fn is_in(&self, class: &str) -> bool {
        self.classes.contains(class)
    }
}

/// Every semi-Heyting algebra on the chains of sizes 1 through `max_size`,
/// in canonical order, classified against the whole catalog.
pub fn enumerate_pool(max_size: usize, workers: usize) -> Vec<PoolEntry> {
    let config = RunConfig {
        max_enumeration_size: max_size,
        worker_count: workers,
        ..RunConfig::default()
    };
    let mut pool = Vec::new();
    for n in 1..=max_size {
        let task = EnumerationTask::raw(make_chain(n).expect("chain sizes start at 1"));
        let algebras = enumerate_sh(&task, &config).expect("chain enumeration within cap");
        for (index, algebra) in algebras.into_iter().enumerate() {
            let classes = classify(&algebra);
            pool.push(PoolEntry {
                label: format!("chain{n}#{index:03}"),
                algebra,
                classes,
            });
        }
    }
    pool
}

/// Counts valid arrow tables on the n-element chain by filtering every one
/// of the n^(n^2) candidates; independent of the pruned search.
pub fn naive_chain_count(n: usize) -> u64 {
    let lattice = make_chain(n).expect("chain sizes start at 1");
    let cells = n * n;
    let total = (n as u64).pow(cells as u32);
    let mut count = 0;
    for code in 0..total {
        let mut rest = code;
        let mut arrow = vec![vec![0usize; n]; n];
        for x in 0..n {
            for y in 0..n {
                arrow[x][y] = (rest % n as u64) as usize;
                rest /= n as u64;
            }
        }
        if SemiHeytingAlgebra::new(lattice.clone(), arrow).is_ok() {
            count += 1;
        }
    }
    count
}

/// The unconditional identity suite, grouped by subject; every identity
/// holds in every semi-Heyting algebra.
pub fn unconditional_lemma_groups() -> Vec<(&'static str, Vec<&'static str>)> {
    vec![
        (
            "arrow laws of the base class",
            vec![
                "1 -> x = x",
                "x <= (x v y) -> x",
                "x <= x -> 1",
                "x ^ ((x -> y) -> z) = x ^ (y -> z)",
                "x ^ (y v (x -> z)) = x ^ (y v z)",
                "x ^ ((x v y) -> z) = x ^ z",
                "x ^ ((x ^ y) -> z) = x ^ (y -> z)",
                "x ^ ((x -> y) v z) = x ^ (y v z)",
                "y ^ (x -> (y ^ z)) = y ^ (x -> z)",
                "y ^ (x -> z) <= x -> (y ^ z)",
                "x <= y -> (x ^ y)",
            ],
        ),
        (
            "pseudocomplement laws",
            vec![
                "(x** ^ y)* = (x ^ y)*",
                "(x** ^ y**)* = (x ^ y)*",
                "x ^ (x* ^ y)* = x",
            ],
        ),
        (
            "meet-window rewriting laws",
            vec![
                "x ^ (((x ^ y) -> (x ^ z)) -> u) = x ^ ((y -> z) -> u)",
                "x ^ ((y -> (x ^ z)) -> u) = x ^ ((y -> z) -> u)",
                "(x -> y) -> z <= ((x ^ (y -> z)) -> y) -> z",
                "x ^ (y -> (x -> z)) = x ^ (y -> z)",
                "x ^ (y -> ((x ^ z) -> (x ^ u))) = x ^ (y -> (z -> u))",
                "x ^ ((x -> y) -> z) = x ^ (y -> z)",
            ],
        ),
    ]
}

/// An identity bundle that holds on every member of the named classes.
pub struct ConditionalLemma {
    pub claim: &'static str,
    pub hypotheses: &'static [&'static str],
    pub laws: &'static [&'static str],
}

/// The conditional identity suite: each bundle is checked on every
/// enumerated member of the intersection of its hypothesis classes.
pub fn conditional_lemmas() -> Vec<ConditionalLemma> {
    vec![
        ConditionalLemma {
            claim: "star-arrow collapse in the first negation-thesis class",
            hypotheses: &["AT1"],
            laws: &["x* -> x = 0", "0 -> 1 = 0"],
        },
        ConditionalLemma {
            claim: "the bottom-arrow is the star in the first negation-thesis class",
            hypotheses: &["AT1"],
            laws: &["0 -> x = x*"],
        },
        ConditionalLemma {
            claim: "the bottom-arrow sits below the star in the second negation-thesis class",
            hypotheses: &["AT2"],
            laws: &["0 -> x <= x*"],
        },
        ConditionalLemma {
            claim: "double-star chain in the first bridging class",
            hypotheses: &["BT1"],
            laws: &[
                "x -> 1 <= x**",
                "(x -> y*)* <= (x -> y)**",
                "(x -> y*)* = (x -> y)**",
            ],
        },
        ConditionalLemma {
            claim: "the star absorbs the top-arrow in the first negation-thesis class",
            hypotheses: &["AT1"],
            laws: &["x* -> 1 = x*"],
        },
        ConditionalLemma {
            claim: "meets with the bottom-arrow vanish under weak commutativity",
            hypotheses: &["WCOM"],
            laws: &["x ^ (0 -> x) = 0"],
        },
        ConditionalLemma {
            claim: "the bottom-arrow sits below the star under inverted bounds",
            hypotheses: &["AH"],
            laws: &["0 -> x <= x*"],
        },
        ConditionalLemma {
            claim: "the bottom-arrow is the star under inverted bounds",
            hypotheses: &["AH"],
            laws: &["0 -> x = x*"],
        },
        ConditionalLemma {
            claim: "the star factors through the bottom-arrow under exchange",
            hypotheses: &["AT1", "EX"],
            laws: &["x* = 0 -> (x -> 1)"],
        },
        ConditionalLemma {
            claim: "self-application law under exchange",
            hypotheses: &["AT1", "EX"],
            laws: &["x -> ((x -> y) -> y) = 1"],
        },
        ConditionalLemma {
            claim: "weakening laws under exchange",
            hypotheses: &["AT1", "EX"],
            laws: &[
                "y -> (x -> y) = x -> 1",
                "x -> (0 -> x) = 0",
                "(0 -> x)* = x -> 1",
            ],
        },
        ConditionalLemma {
            claim: "the star survives the top-arrow under exchange",
            hypotheses: &["AT1", "EX"],
            laws: &["x* = (x -> 1)*"],
        },
        ConditionalLemma {
            claim: "the iterated top-arrow collapses under exchange",
            hypotheses: &["AT1", "EX"],
            laws: &["x -> (x -> 1) = 1"],
        },
        ConditionalLemma {
            claim: "the top-arrow distributes over the arrow under exchange",
            hypotheses: &["AT1", "EX"],
            laws: &["x -> (y -> 1) = (x -> y) -> 1"],
        },
    ]
}

/// The six-step bundled sample derivation (accepted by the full connexive
/// calculus, rejected by the base calculus at its second step).
pub const CSH_SAMPLE_PROOF: &str = include_str!("../../../data/proofs/csh-sample.json");
/// A one-step sample in the calculus of the three-element connexive chain.
pub const CSH3_SAMPLE_PROOF: &str = include_str!("../../../data/proofs/csh3-sample.json");

fn fixed_config(config: &RunConfig) -> RunConfig {
    RunConfig {
        max_enumeration_size: 4,
        worker_count: config.worker_count,
        ..RunConfig::default()
    }
}

fn member_labels(pool: &[PoolEntry], class: &str) -> Vec<String> {
    pool.iter()
        .filter(|e| e.is_in(class))
        .map(|e| e.label.clone())
        .collect()
}

fn subset_violation(pool: &[PoolEntry], sub: &str, sup: &str) -> Option<String> {
    pool.iter()
        .find(|e| e.is_in(sub) && !e.is_in(sup))
        .map(|e| e.label.clone())
}

fn inclusion_row(report: &mut Report, pool: &[PoolEntry], sub: &str, sup: &str, citation: &str) {
    let computed = match subset_violation(pool, sub, sup) {
        None => format!(
            "all {} members of {sub} are in {sup}",
            pool.iter().filter(|e| e.is_in(sub)).count()
        ),
        Some(label) => format!("{label} is in {sub} but not in {sup}"),
    };
    let expected = format!("every {sub} member is in {sup}");
    let verdict = if subset_violation(pool, sub, sup).is_none() {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    report.add(
        format!("{sub} is contained in {sup} on the enumerated pool"),
        citation,
        expected,
        computed,
        verdict,
    );
}

fn equivalence_row(
    report: &mut Report,
    pool: &[PoolEntry],
    claim: &str,
    citation: &str,
    classes: &[&str],
) {
    let first = member_labels(pool, classes[0]);
    let mismatch = classes[1..]
        .iter()
        .find(|c| member_labels(pool, c) != first);
    let computed = match mismatch {
        None => format!(
            "{} accept the same {} members",
            classes.join(", "),
            first.len()
        ),
        Some(c) => {
            let other = member_labels(pool, c);
            let only_first: Vec<_> = first.iter().filter(|l| !other.contains(l)).collect();
            let only_other: Vec<_> = other.iter().filter(|l| !first.contains(l)).collect();
            format!(
                "{} and {} disagree (only in first: {:?}; only in second: {:?})",
                classes[0], c, only_first, only_other
            )
        }
    };
    let verdict = if mismatch.is_none() {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    report.add(
        claim.to_string(),
        citation,
        "identical member sets",
        computed,
        verdict,
    );
}

fn criterion_counts(report: &mut Report, config: &RunConfig) {
    for (n, expected) in [(1usize, 1u64), (2, 2), (3, 10), (4, 160)] {
        let lattice = make_chain(n).expect("chain sizes start at 1");
        let computed = count_sh(&lattice, config).expect("size within fixed cap");
        report.check(
            format!("arrow tables on the {n}-element chain"),
            "census of small chain models",
            expected.to_string(),
            computed.to_string(),
        );
    }
    let naive: Vec<String> = (1..=3).map(|n| naive_chain_count(n).to_string()).collect();
    let pruned: Vec<String> = (1..=3)
        .map(|n| {
            count_sh(&make_chain(n).unwrap(), config)
                .expect("size within fixed cap")
                .to_string()
        })
        .collect();
    report.check(
        "pruned search agrees with the exhaustive table filter at sizes 1-3",
        "independent recount over all candidate tables",
        pruned.join(", "),
        naive.join(", "),
    );
}

fn criterion_corpus(report: &mut Report) {
    let all = corpus();
    let invalid: Vec<&str> = all
        .iter()
        .filter(|a| a.validate().is_err())
        .filter_map(|a| a.name())
        .collect();
    report.check(
        "the seven bundled models satisfy all the defining laws",
        "defining tables of the named small models",
        "7 valid",
        if invalid.is_empty() {
            "7 valid".to_string()
        } else {
            format!("invalid: {invalid:?}")
        },
    );

    let connexive: Vec<String> = ["2bar", "CSH3"]
        .iter()
        .map(|n| {
            let a = corpus_algebra(n).unwrap();
            format!(
                "{n}: {}",
                if classify(&a).contains("CSH") { "yes" } else { "no" }
            )
        })
        .collect();
    report.check(
        "2bar and CSH3 lie in the full connexive class",
        "classification of the two- and three-element connexive models",
        "2bar: yes, CSH3: yes",
        connexive.join(", "),
    );

    let l10 = corpus_algebra("L10").unwrap();
    let classes = classify(&l10);
    let memberships = ["AT1", "AT2", "SH_c"]
        .iter()
        .all(|c| classes.contains(c));
    let bt2_fail = first_descriptor_failure(&l10, descriptor_by_name("BT2").unwrap());
    let computed = match (&memberships, &bt2_fail) {
        (true, Some(f)) => format!(
            "in AT1, AT2, SH_c; second bridging law first fails at {}",
            fmt_assignment(&f.witness)
        ),
        (true, None) => "in AT1, AT2, SH_c; second bridging law holds".to_string(),
        (false, _) => format!("memberships {classes:?}"),
    };
    report.check(
        "L10 is a commutative member of both negation-thesis classes but not of the second bridging class",
        "separation of the bridging laws by a commutative three-element model",
        "in AT1, AT2, SH_c; second bridging law first fails at x=1, y=0",
        computed,
    );

    let w4 = corpus_algebra("W4").unwrap();
    let classes = classify(&w4);
    let bt1_fail = first_descriptor_failure(&w4, descriptor_by_name("BT1").unwrap());
    let computed = match (classes.contains("BT2"), &bt1_fail) {
        (true, Some(f)) => format!(
            "in BT2; first bridging law first fails at {}",
            fmt_assignment(&f.witness)
        ),
        (true, None) => "in BT2; first bridging law holds".to_string(),
        (false, _) => "not in BT2".to_string(),
    };
    report.check(
        "W4 separates the second bridging class from the first",
        "four-element chain witnessing the strictness of the bridging hierarchy",
        "in BT2; first bridging law first fails at x=1, y=2",
        computed,
    );

    let w5 = corpus_algebra("W5").unwrap();
    let classes = classify(&w5);
    let ex_fail = first_descriptor_failure(&w5, descriptor_by_name("EX").unwrap());
    let computed = match (classes.contains("BT1"), &ex_fail) {
        (true, Some(f)) => format!(
            "in BT1; exchange first fails at {}",
            fmt_assignment(&f.witness)
        ),
        (true, None) => "in BT1; exchange holds".to_string(),
        (false, _) => "not in BT1".to_string(),
    };
    report.check(
        "W5 lies in the first bridging class but not in the exchange class",
        "five-element chain separating the first bridging law from exchange",
        "in BT1; exchange first fails at x=2, y=3, z=4",
        computed,
    );
}

fn criterion_relations(report: &mut Report, pool: &[PoolEntry]) {
    equivalence_row(
        report,
        pool,
        "the two negation theses and the inverted-bounds law coincide",
        "equivalence of the negation theses with inverted bounds",
        &["AT1", "AT2", "AH"],
    );

    let bt1_in_bt2 = subset_violation(pool, "BT1", "BT2").is_none();
    let bt2_in_at1 = subset_violation(pool, "BT2", "AT1").is_none();
    let strict1 = pool.iter().find(|e| e.is_in("BT2") && !e.is_in("BT1"));
    let strict2 = pool.iter().find(|e| e.is_in("AT1") && !e.is_in("BT2"));
    let computed = format!(
        "inclusions {}; BT2-not-BT1 witness {}; AT1-not-BT2 witness {}",
        if bt1_in_bt2 && bt2_in_at1 { "hold" } else { "fail" },
        strict1.map_or("none".to_string(), |e| e.label.clone()),
        strict2.map_or("none".to_string(), |e| e.label.clone()),
    );
    let ok = bt1_in_bt2 && bt2_in_at1 && strict1.is_some() && strict2.is_some();
    report.add(
        "the bridging laws form a strictly increasing chain below the first negation thesis",
        "strict hierarchy of the bridging laws",
        "both inclusions hold and both are strict",
        computed,
        if ok { Verdict::Pass } else { Verdict::Fail },
    );

    equivalence_row(
        report,
        pool,
        "the first bridging law already yields the full connexive class",
        "collapse of the connexive class onto the first bridging law",
        &["BT1", "CSH"],
    );
    inclusion_row(
        report,
        pool,
        "SH_c",
        "AT1",
        "commutative algebras satisfy the first negation thesis",
    );
    let at1_ex_violation = pool
        .iter()
        .find(|e| e.is_in("AT1") && e.is_in("EX") && !e.is_in("BT1"));
    report.add(
        "exchange upgrades the first negation thesis to the first bridging law",
        "interplay of exchange with the negation thesis",
        "every AT1-and-EX member is in BT1",
        match &at1_ex_violation {
            None => format!(
                "all {} AT1-and-EX members are in BT1",
                pool.iter()
                    .filter(|e| e.is_in("AT1") && e.is_in("EX"))
                    .count()
            ),
            Some(e) => format!("{} violates the inclusion", e.label),
        },
        if at1_ex_violation.is_none() {
            Verdict::Pass
        } else {
            Verdict::Fail
        },
    );

    let stone_mismatch = pool
        .iter()
        .find(|e| e.is_in("StSH") && (e.is_in("AT1") != e.is_in("WCOM")));
    report.add(
        "within the Stone class, the first negation thesis and weak commutativity coincide",
        "equivalence of the negation thesis and weak commutativity under the Stone law",
        "memberships agree on every Stone member",
        match &stone_mismatch {
            None => format!(
                "agree on all {} Stone members",
                pool.iter().filter(|e| e.is_in("StSH")).count()
            ),
            Some(e) => format!("{} is in exactly one of the two", e.label),
        },
        if stone_mismatch.is_none() {
            Verdict::Pass
        } else {
            Verdict::Fail
        },
    );
    inclusion_row(
        report,
        pool,
        "WCOM",
        "AT1",
        "weak commutativity implies the first negation thesis",
    );

    let bt2_comm_violation = pool
        .iter()
        .find(|e| e.is_in("BT2") && e.is_in("SH_c") && !e.is_in("AB-g"));
    report.add(
        "commutative members of the second bridging class satisfy double-arrow cancellation",
        "commutative second-bridging members generate the anti-Boolean class",
        "every BT2-and-SH_c member is in AB-g",
        match &bt2_comm_violation {
            None => format!(
                "all {} BT2-and-SH_c members are in AB-g",
                pool.iter()
                    .filter(|e| e.is_in("BT2") && e.is_in("SH_c"))
                    .count()
            ),
            Some(e) => format!("{} violates the inclusion", e.label),
        },
        if bt2_comm_violation.is_none() {
            Verdict::Pass
        } else {
            Verdict::Fail
        },
    );
}

fn criterion_anti_boolean(report: &mut Report, pool: &[PoolEntry]) {
    let bases = ["AB-a", "AB-b", "AB-c", "AB-d", "AB-e", "AB-f", "AB-g"];
    let sets: Vec<(&str, Vec<String>)> = bases
        .iter()
        .map(|b| (*b, member_labels(pool, b)))
        .collect();
    let reference = &sets[0].1;
    let agreeing: Vec<&str> = sets
        .iter()
        .filter(|(_, s)| s == reference)
        .map(|(b, _)| *b)
        .collect();
    let disagreeing: Vec<String> = sets
        .iter()
        .filter(|(_, s)| s != reference)
        .map(|(b, s)| format!("{b} accepts {} members", s.len()))
        .collect();
    let all_agree = disagreeing.is_empty();
    let computed = if all_agree {
        format!(
            "all seven bases accept the same {} members",
            reference.len()
        )
    } else {
        format!(
            "{} agree on {} members; {}; the two laws of AB-d force 0 = 1 at x=0, y=1, so AB-d defines the one-element class only",
            agreeing.join(", "),
            reference.len(),
            disagreeing.join("; ")
        )
    };
    report.add(
        "the seven printed equational bases describe one and the same class",
        "interchangeability of the printed anti-Boolean bases",
        "identical member sets for all seven bases",
        computed,
        if all_agree { Verdict::Pass } else { Verdict::Fail },
    );

    equivalence_row(
        report,
        pool,
        "the commutative-exchange and the two negation-thesis characterizations describe the anti-Boolean class",
        "alternative two-identity descriptions of the anti-Boolean class",
        &["AB-a", "AB-comm-ex", "AB-star-join", "AB-arrow-cycle"],
    );
}

fn criterion_lemma_suite(report: &mut Report, pool: &[PoolEntry]) {
    for (group, texts) in unconditional_lemma_groups() {
        let mut failure = None;
        'outer: for text in &texts {
            let id = parse_identity(text).expect("lemma identities parse");
            for entry in pool {
                if let Some(witness) = holds_identity(&entry.algebra, &id) {
                    failure = Some(format!(
                        "{text} fails on {} at {}",
                        entry.label,
                        fmt_assignment(&witness)
                    ));
                    break 'outer;
                }
            }
        }
        let expected = format!(
            "{} identities hold on all {} algebras",
            texts.len(),
            pool.len()
        );
        report.check(
            format!("{group} hold throughout the enumerated pool"),
            "arithmetic of the arrow in the base class",
            expected.clone(),
            failure.unwrap_or(expected),
        );
    }

    for lemma in conditional_lemmas() {
        let members: Vec<&PoolEntry> = pool
            .iter()
            .filter(|e| lemma.hypotheses.iter().all(|h| e.is_in(h)))
            .collect();
        let mut failure = None;
        'outer: for text in lemma.laws {
            let id = parse_identity(text).expect("lemma identities parse");
            for entry in &members {
                if let Some(witness) = holds_identity(&entry.algebra, &id) {
                    failure = Some(format!(
                        "{text} fails on {} at {}",
                        entry.label,
                        fmt_assignment(&witness)
                    ));
                    break 'outer;
                }
            }
        }
        let expected = format!(
            "holds on all {} members of {}",
            members.len(),
            lemma.hypotheses.join(" and ")
        );
        report.check(
            lemma.claim,
            "conditional arrow laws under the named hypotheses",
            expected.clone(),
            failure.unwrap_or(expected),
        );
    }

    // dense elements reach the top through the arrow, in the first bridging class
    let mut failure = None;
    let mut members = 0;
    for entry in pool.iter().filter(|e| e.is_in("BT1")) {
        members += 1;
        let a = &entry.algebra;
        for x in 0..a.size() {
            if a.is_dense(x) && a.arrow(x, a.top()) != a.top() {
                failure = Some(format!("{}: dense element {x} has x -> 1 != 1", entry.label));
            }
        }
    }
    let expected = format!("holds on all {members} members of BT1");
    report.check(
        "dense elements reach the top through the arrow in the first bridging class",
        "conditional arrow laws under the named hypotheses",
        expected.clone(),
        failure.unwrap_or(expected),
    );

    // nonzero elements of well-connected first-bridging members have zero star
    let extra = parse_identity("x* v (x -> y) = (x v y) -> y").expect("hypothesis identity parses");
    let si = si_condition();
    let mut failure = None;
    let mut members = 0;
    for entry in pool.iter().filter(|e| e.is_in("BT1")) {
        let a = &entry.algebra;
        if holds_identity(a, &extra).is_some() || holds_quasi(a, &si).is_some() {
            continue;
        }
        members += 1;
        for x in 1..a.size() {
            if a.star(x) != a.bottom() {
                failure = Some(format!("{}: element {x} has x* != 0", entry.label));
            }
            if a.arrow(a.bottom(), x) != a.bottom() {
                failure = Some(format!("{}: element {x} has 0 -> x != 0", entry.label));
            }
        }
    }
    let expected = format!("holds on all {members} qualifying members");
    report.check(
        "nonzero elements have zero star and zero bottom-arrow in join-irreducible-top first-bridging members with the star-join law",
        "conditional arrow laws under the named hypotheses",
        expected.clone(),
        failure.unwrap_or(expected),
    );
}

fn criterion_si_classification(report: &mut Report, pool: &[PoolEntry], config: &RunConfig) {
    let fixed = fixed_config(config);
    let mut found: Vec<&PoolEntry> = Vec::new();
    for entry in pool.iter().filter(|e| e.size() <= 3 && e.is_in("CSH3")) {
        let verdict = is_subdirectly_irreducible(&entry.algebra, &fixed)
            .expect("pool sizes within cap");
        if verdict.subdirectly_irreducible {
            found.push(entry);
        }
    }
    let mut representatives: Vec<&PoolEntry> = Vec::new();
    for entry in &found {
        if !representatives
            .iter()
            .any(|r| crate::structure::is_isomorphic(&r.algebra, &entry.algebra))
        {
            representatives.push(entry);
        }
    }
    let twobar = corpus_algebra("2bar").unwrap();
    let csh3 = corpus_algebra("CSH3").unwrap();
    let matches_expected = representatives.len() == 2
        && representatives
            .iter()
            .any(|r| crate::structure::is_isomorphic(&r.algebra, &twobar))
        && representatives
            .iter()
            .any(|r| crate::structure::is_isomorphic(&r.algebra, &csh3));
    report.check(
        "the subdirectly irreducible members of the three-element connexive class are 2bar and CSH3",
        "classification of the subdirectly irreducible members of the three-element connexive class",
        "2 isomorphism classes, matching 2bar and CSH3",
        if matches_expected {
            "2 isomorphism classes, matching 2bar and CSH3".to_string()
        } else {
            format!(
                "{} isomorphism classes among {} subdirectly irreducible members: {:?}",
                representatives.len(),
                found.len(),
                representatives.iter().map(|r| &r.label).collect::<Vec<_>>()
            )
        },
    );
}

fn table_eq(a: &SemiHeytingAlgebra, b: &SemiHeytingAlgebra) -> bool {
    a.lattice() == b.lattice() && a.arrow_table() == b.arrow_table()
}

fn criterion_translations(report: &mut Report) {
    let csh3 = corpus_algebra("CSH3").unwrap();
    let l1 = corpus_algebra("L1").unwrap();
    let citation = "mutual term translation between the three-element connexive and Heyting models";

    report.check(
        "the Heyting translation of CSH3 is L1",
        citation,
        "tables equal",
        if table_eq(&to_heyting(&csh3).target, &l1) {
            "tables equal"
        } else {
            "tables differ"
        },
    );
    report.check(
        "the connexive translation of L1 is CSH3",
        citation,
        "tables equal",
        if table_eq(&to_connexive(&l1).target, &csh3) {
            "tables equal"
        } else {
            "tables differ"
        },
    );
    report.check(
        "translating CSH3 out and back is the identity",
        citation,
        "round trip restores the table",
        if roundtrip_check(&csh3).connexive_of_heyting {
            "round trip restores the table"
        } else {
            "round trip altered the table"
        },
    );
    report.check(
        "translating L1 out and back is the identity",
        citation,
        "round trip restores the table",
        if roundtrip_check(&l1).heyting_of_connexive {
            "round trip restores the table"
        } else {
            "round trip altered the table"
        },
    );
}

fn criterion_strong_connexivity(report: &mut Report) {
    let verdicts: Vec<String> = ["2bar", "CSH3", "2", "L1"]
        .iter()
        .map(|n| {
            let a = corpus_algebra(n).unwrap();
            format!(
                "{n}: {}",
                if is_strongly_connexive_matrix(&a).is_ok() {
                    "yes"
                } else {
                    "no"
                }
            )
        })
        .collect();
    report.check(
        "designated-top matrices of the connexive models are strongly connexive, the Heyting ones are not",
        "matrix-level strong connexivity of the named models",
        "2bar: yes, CSH3: yes, 2: no, L1: no",
        verdicts.join(", "),
    );
}

fn criterion_proof_checker(report: &mut Report, pool: &[PoolEntry]) {
    let citation = "derivations in the connexive calculus and their algebraic soundness";
    let proof = parse_proof_json(CSH_SAMPLE_PROOF).expect("bundled proof parses");
    let accepted = check_proof(&proof);
    report.check(
        "the bundled six-step derivation is accepted by the full connexive calculus",
        citation,
        "accepted, 6 formulas",
        match &accepted {
            Ok(derived) => format!("accepted, {} formulas", derived.len()),
            Err(e) => format!("rejected: {e}"),
        },
    );

    let mut downgraded = proof.clone();
    downgraded.logic = "SH".into();
    let rejection = check_proof(&downgraded);
    report.check(
        "the same derivation is rejected by the base calculus at its second step",
        citation,
        "rejected at step 2",
        match &rejection {
            Ok(_) => "accepted".to_string(),
            Err(crate::proof::ProofError::Rejected { step, .. }) => {
                format!("rejected at step {step}")
            }
            Err(e) => format!("{e}"),
        },
    );

    let csh3_proof = parse_proof_json(CSH3_SAMPLE_PROOF).expect("bundled proof parses");
    let mut checked: Vec<(String, Vec<crate::terms::Term>)> = Vec::new();
    if let Ok(derived) = accepted {
        checked.push(("CSH".to_string(), derived));
    }
    if let Ok(derived) = check_proof(&csh3_proof) {
        checked.push(("CSH3".to_string(), derived));
    }
    let mut scanned = 0;
    let mut failure = None;
    for (logic, formulas) in &checked {
        let members: Vec<SemiHeytingAlgebra> = pool
            .iter()
            .filter(|e| e.size() <= 3 && e.is_in(logic.as_str()))
            .map(|e| e.algebra.clone())
            .collect();
        for phi in formulas {
            scanned += 1;
            if let Err(f) = soundness_scan(phi, &members) {
                failure = Some(format!("{phi} in {logic}: {f}"));
            }
        }
    }
    let expected = format!("{scanned} accepted formulas valid on every matching member");
    report.check(
        "every accepted formula takes the top value across its calculus's enumerated models",
        citation,
        expected.clone(),
        failure.unwrap_or(expected),
    );
}

fn criterion_conjecture(report: &mut Report, config: &RunConfig) {
    let fixed = fixed_config(config);
    let id = parse_identity("x* -> y* = y* -> x*").expect("identity parses");
    let found = find_countermodel(&id, &["AT1".to_string()], 4, &fixed)
        .expect("sizes within cap");
    match found {
        None => report.add(
            "does the first negation thesis force weak commutativity?",
            "open problem: negation thesis versus weak commutativity",
            "no counterexample on chains of size at most 4 (evidence only, not a theorem)",
            "none found at sizes 2-4",
            Verdict::Evidence,
        ),
        Some((algebra, witness)) => report.add(
            "does the first negation thesis force weak commutativity?",
            "open problem: negation thesis versus weak commutativity",
            "no counterexample on chains of size at most 4 (evidence only, not a theorem)",
            format!(
                "counterexample of size {} at {}",
                algebra.size(),
                fmt_assignment(&witness)
            ),
            Verdict::Fail,
        ),
    }
}

fn diamond_datapoint(report: &mut Report, config: &RunConfig) {
    let fixed = fixed_config(config);
    let diamond: LatticeSpec = make_diamond();
    let raw = count_sh(&diamond, &fixed).map(|c| c.to_string());
    let iso = EnumerationTask {
        lattice: diamond,
        up_to_iso: true,
        filter: Vec::new(),
    };
    let iso_count = enumerate_sh(&iso, &fixed).map(|v| v.len().to_string());
    report.add(
        "non-chain datapoint: arrow tables on the four-element diamond",
        "independent exhaustive recount on the smallest non-chain lattice",
        "4 raw, 3 up to isomorphism",
        match (raw, iso_count) {
            (Ok(r), Ok(i)) => format!("{r} raw, {i} up to isomorphism"),
            (Err(e), _) | (_, Err(e)) => format!("enumeration refused: {e}"),
        },
        Verdict::Info,
    );
}

/// Runs the complete claim suite. The enumeration bound is fixed at chain
/// size 4 (the desk-scale contract); only `worker_count` is taken from the
/// supplied configuration, so reports are identical across worker counts.
pub fn verify_paper(config: &RunConfig) -> Report {
    let fixed = fixed_config(config);
    let pool = enumerate_pool(4, fixed.worker_count);
    let mut report = Report::default();
    criterion_counts(&mut report, &fixed);
    criterion_corpus(&mut report);
    criterion_relations(&mut report, &pool);
    criterion_anti_boolean(&mut report, &pool);
    criterion_lemma_suite(&mut report, &pool);
    criterion_si_classification(&mut report, &pool, &fixed);
    criterion_translations(&mut report);
    criterion_strong_connexivity(&mut report);
    criterion_proof_checker(&mut report, &pool);
    criterion_conjecture(&mut report, &fixed);
    diamond_datapoint(&mut report, &fixed);
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdicts_serialize_as_uppercase_strings() {
        assert_eq!(serde_json::to_string(&Verdict::Pass).unwrap(), "\"PASS\"");
        assert_eq!(serde_json::to_string(&Verdict::Fail).unwrap(), "\"FAIL\"");
        assert_eq!(
            serde_json::to_string(&Verdict::Evidence).unwrap(),
            "\"EVIDENCE\""
        );
        assert_eq!(serde_json::to_string(&Verdict::Info).unwrap(), "\"INFO\"");
    }

    #[test]
    fn row_renders_on_one_line() {
        let mut r = Report::default();
        r.check("two plus two", "arithmetic", "4", "4");
        assert_eq!(
            r.render_text(),
            "two plus two: computed 4, expected 4 [arithmetic] PASS\noverall: PASS (1 rows)\n"
        );
        assert!(r.passed());
    }

    #[test]
    fn naive_counts_match_on_the_smallest_chains() {
        assert_eq!(naive_chain_count(1), 1);
        assert_eq!(naive_chain_count(2), 2);
    }

    #[test]
    fn lemma_tables_parse() {
        for (_, texts) in unconditional_lemma_groups() {
            for t in texts {
                parse_identity(t).unwrap();
            }
        }
        for lemma in conditional_lemmas() {
            for t in lemma.laws {
                parse_identity(t).unwrap();
            }
            for h in lemma.hypotheses {
                assert!(descriptor_by_name(h).is_some(), "{h}");
            }
        }
    }

    #[test]
    fn bundled_proofs_parse_and_name_known_logics() {
        for src in [CSH_SAMPLE_PROOF, CSH3_SAMPLE_PROOF] {
            let proof = parse_proof_json(src).unwrap();
            assert!(KNOWN_LOGICS.contains(&proof.logic.as_str()));
        }
    }
}
