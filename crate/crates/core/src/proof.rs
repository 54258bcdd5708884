//! Hilbert-style derivation checking for the semi-intuitionistic base logic
//! and its connexive extensions, together with the formula/identity bridges
//! used to cross-check accepted theorems against algebra tables.
//!
//! The deduction apparatus is built around a weakened implication: writing
//! `h(a, b)` for `a -> (a ^ b)`, every axiom below whose statement uses the
//! deductive implication is stored with that expansion, and the single rule
//! of inference consumes implications of exactly that shape. Negation is
//! sugar: `~a` abbreviates `a -> 0`.

use crate::algebra::SemiHeytingAlgebra;
use crate::terms::{self, fmt_assignment, Assignment, Identity, Term};
use serde::Deserialize;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

/// The deductive implication: `h(a, b)` is `a -> (a ^ b)`.
pub fn h(a: Term, b: Term) -> Term {
    Term::arrow(a.clone(), Term::meet(a, b))
}

/// Deductive biconditional: both `h` directions, conjoined.
pub fn eq_h(a: Term, b: Term) -> Term {
    Term::meet(h(a.clone(), b.clone()), h(b, a))
}

/// An axiom pattern over the metavariables `alpha`, `beta`, `gamma`.
#[derive(Debug, Clone)]
pub struct AxiomSchema {
    pub id: &'static str,
    pub pattern: Term,
}

fn a() -> Term {
    Term::var("alpha")
}
fn b() -> Term {
    Term::var("beta")
}
fn g() -> Term {
    Term::var("gamma")
}

fn build_schemas() -> Vec<AxiomSchema> {
    let mk = |id, pattern| AxiomSchema { id, pattern };
    vec![
        mk("A1", h(a(), Term::join(a(), b()))),
        mk("A2", h(b(), Term::join(a(), b()))),
        mk(
            "A3",
            h(
                h(a(), g()),
                h(h(b(), g()), h(Term::join(a(), b()), g())),
            ),
        ),
        mk("A4", h(Term::meet(a(), b()), a())),
        mk(
            "A5",
            h(
                h(g(), a()),
                h(h(g(), b()), h(g(), Term::meet(a(), b()))),
            ),
        ),
        mk("A6", Term::ConstTop),
        mk("A7", h(Term::ConstBottom, a())),
        mk(
            "A8",
            h(h(Term::meet(a(), b()), g()), h(a(), h(b(), g()))),
        ),
        mk(
            "A9",
            h(h(a(), h(b(), g())), h(Term::meet(a(), b()), g())),
        ),
        // the last antecedent pair in A10/A11 uses the plain arrow
        mk(
            "A10",
            h(
                h(a(), b()),
                h(
                    h(b(), a()),
                    h(Term::arrow(a(), g()), Term::arrow(b(), g())),
                ),
            ),
        ),
        mk(
            "A11",
            h(
                h(a(), b()),
                h(
                    h(b(), a()),
                    h(Term::arrow(g(), b()), Term::arrow(g(), a())),
                ),
            ),
        ),
        mk("A12", Term::star(Term::arrow(Term::star(a()), a()))),
        mk("A13", Term::star(Term::arrow(a(), Term::star(a())))),
        mk(
            "A14",
            Term::arrow(
                Term::arrow(a(), b()),
                Term::star(Term::arrow(a(), Term::star(b()))),
            ),
        ),
        mk(
            "A15",
            Term::arrow(
                Term::arrow(a(), Term::star(b())),
                Term::star(Term::arrow(a(), b())),
            ),
        ),
        mk(
            "CSH3-i",
            eq_h(
                Term::join(a(), Term::arrow(a(), b())),
                Term::join(a(), Term::arrow(Term::arrow(a(), b()), Term::ConstTop)),
            ),
        ),
        mk(
            "CSH3-ii",
            eq_h(
                Term::join(Term::star(a()), Term::arrow(a(), b())),
                Term::arrow(Term::join(a(), b()), b()),
            ),
        ),
    ]
}

fn schemas() -> &'static [AxiomSchema] {
    static SCHEMAS: OnceLock<Vec<AxiomSchema>> = OnceLock::new();
    SCHEMAS.get_or_init(build_schemas)
}

/// Looks up one axiom schema by id.
pub fn axiom_schema(id: &str) -> Option<&'static AxiomSchema> {
    schemas().iter().find(|s| s.id == id)
}

const BASE: [&str; 11] = [
    "A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8", "A9", "A10", "A11",
];

/// The axiom ids of each registered logic, base axioms first.
pub fn logic_axioms(logic: &str) -> Option<Vec<&'static str>> {
    let extra: &[&str] = match logic {
        "SH" => &[],
        "AT1" => &["A12"],
        "AT2" => &["A13"],
        "BT1" => &["A14"],
        "BT2" => &["A15"],
        "CSH" => &["A12", "A13", "A14", "A15"],
        "CSH3" => &["A14", "CSH3-i", "CSH3-ii"],
        _ => return None,
    };
    Some(BASE.iter().chain(extra).copied().collect())
}

pub const KNOWN_LOGICS: [&str; 7] = ["SH", "AT1", "AT2", "BT1", "BT2", "CSH", "CSH3"];

/// The variety whose members soundly model the logic's theorems.
pub fn variety_for_logic(logic: &str) -> Option<&'static str> {
    match logic {
        "SH" => Some("SH"),
        "AT1" => Some("AT1"),
        "AT2" => Some("AT2"),
        "BT1" => Some("BT1"),
        "BT2" => Some("BT2"),
        "CSH" => Some("CSH"),
        "CSH3" => Some("CSH3"),
        _ => None,
    }
}

pub type Substitution = BTreeMap<String, Term>;

/// Uniform replacement of metavariables; every metavariable occurring in the
/// pattern must be bound (extra bindings are ignored).
pub fn instantiate(schema: &AxiomSchema, subst: &Substitution) -> Result<Term, String> {
    fn go(t: &Term, subst: &Substitution) -> Result<Term, String> {
        Ok(match t {
            Term::Variable(v) => subst
                .get(v)
                .ok_or_else(|| v.clone())?
                .clone(),
            Term::ConstBottom => Term::ConstBottom,
            Term::ConstTop => Term::ConstTop,
            Term::Meet(l, r) => Term::meet(go(l, subst)?, go(r, subst)?),
            Term::Join(l, r) => Term::join(go(l, subst)?, go(r, subst)?),
            Term::Arrow(l, r) => Term::arrow(go(l, subst)?, go(r, subst)?),
        })
    }
    go(&schema.pattern, subst)
}

/// One derivation step: an axiom instance, or the rule of inference applied
/// to two earlier steps (1-based indices; `premise` holds the antecedent,
/// `implication` the deductive implication it discharges).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Step {
    Axiom { id: String, subst: Substitution },
    Smp { premise: usize, implication: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Proof {
    pub logic: String,
    pub steps: Vec<Step>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RejectReason {
    UnknownAxiom(String),
    AxiomNotInLogic { axiom: String, logic: String },
    MissingBinding { metavar: String },
    DanglingIndex { index: usize },
    NotSemiImplication { index: usize, formula: String },
    PremiseMismatch { expected: String, found: String },
}

impl fmt::Display for RejectReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RejectReason::UnknownAxiom(id) => write!(f, "no axiom named {id:?}"),
            RejectReason::AxiomNotInLogic { axiom, logic } => {
                write!(f, "axiom {axiom} is not available in logic {logic}")
            }
            RejectReason::MissingBinding { metavar } => {
                write!(f, "substitution does not bind metavariable {metavar:?}")
            }
            RejectReason::DanglingIndex { index } => {
                write!(f, "index {index} does not refer to an earlier step")
            }
            RejectReason::NotSemiImplication { index, formula } => write!(
                f,
                "step {index} is {formula}, which does not have the shape a -> (a ^ b)"
            ),
            RejectReason::PremiseMismatch { expected, found } => write!(
                f,
                "the implication's antecedent is {expected}, but the cited premise is {found}"
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ProofError {
    #[error("unknown logic {0:?}; known logics: SH, AT1, AT2, BT1, BT2, CSH, CSH3")]
    UnknownLogic(String),
    #[error("step {step} rejected: {reason}")]
    Rejected { step: usize, reason: RejectReason },
}

/// Verifies a derivation and returns the formula established at each step.
/// The first bad step aborts the check; accepted prefixes stay accepted when
/// further steps are appended.
pub fn check_proof(proof: &Proof) -> Result<Vec<Term>, ProofError> {
    let axioms = logic_axioms(&proof.logic)
        .ok_or_else(|| ProofError::UnknownLogic(proof.logic.clone()))?;
    let mut derived: Vec<Term> = Vec::with_capacity(proof.steps.len());
    for (i, step) in proof.steps.iter().enumerate() {
        let number = i + 1;
        let reject = |reason| ProofError::Rejected {
            step: number,
            reason,
        };
        let formula = match step {
            Step::Axiom { id, subst } => {
                let schema = axiom_schema(id)
                    .ok_or_else(|| reject(RejectReason::UnknownAxiom(id.clone())))?;
                if !axioms.contains(&schema.id) {
                    return Err(reject(RejectReason::AxiomNotInLogic {
                        axiom: id.clone(),
                        logic: proof.logic.clone(),
                    }));
                }
                instantiate(schema, subst)
                    .map_err(|metavar| reject(RejectReason::MissingBinding { metavar }))?
            }
            Step::Smp {
                premise,
                implication,
            } => {
                for &index in [premise, implication] {
                    if index == 0 || index > i {
                        return Err(reject(RejectReason::DanglingIndex { index }));
                    }
                }
                let phi = &derived[premise - 1];
                let imp = &derived[implication - 1];
                match imp {
                    Term::Arrow(ante, body) => match body.as_ref() {
                        Term::Meet(again, conclusion)
                            if ante.as_ref() == again.as_ref() =>
                        {
                            if ante.as_ref() != phi {
                                return Err(reject(RejectReason::PremiseMismatch {
                                    expected: ante.to_string(),
                                    found: phi.to_string(),
                                }));
                            }
                            conclusion.as_ref().clone()
                        }
                        _ => {
                            return Err(reject(RejectReason::NotSemiImplication {
                                index: *implication,
                                formula: imp.to_string(),
                            }))
                        }
                    },
                    _ => {
                        return Err(reject(RejectReason::NotSemiImplication {
                            index: *implication,
                            formula: imp.to_string(),
                        }))
                    }
                }
            }
        };
        derived.push(formula);
    }
    Ok(derived)
}

/// A formula that failed to take the top value somewhere.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SoundnessFailure {
    pub algebra_index: usize,
    pub algebra_name: Option<String>,
    pub assignment: Assignment,
}

impl fmt::Display for SoundnessFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.algebra_name {
            Some(n) => write!(f, "fails in {} at {}", n, fmt_assignment(&self.assignment)),
            None => write!(
                f,
                "fails in algebra #{} at {}",
                self.algebra_index,
                fmt_assignment(&self.assignment)
            ),
        }
    }
}

/// Checks that the formula evaluates to top under every assignment in every
/// supplied algebra; the first failure is reported with its witness.
pub fn soundness_scan(
    phi: &Term,
    algebras: &[SemiHeytingAlgebra],
) -> Result<(), SoundnessFailure> {
    let id = tau(phi);
    for (index, algebra) in algebras.iter().enumerate() {
        if let Some(assignment) = terms::holds_identity(algebra, &id) {
            return Err(SoundnessFailure {
                algebra_index: index,
                algebra_name: algebra.name().map(str::to_owned),
                assignment,
            });
        }
    }
    Ok(())
}

/// The identity a formula validates: `phi = 1`.
pub fn tau(phi: &Term) -> Identity {
    Identity {
        lhs: phi.clone(),
        rhs: Term::ConstTop,
    }
}

/// The formula pair an identity corresponds to: both implications.
pub fn rho(id: &Identity) -> (Term, Term) {
    (
        Term::arrow(id.lhs.clone(), id.rhs.clone()),
        Term::arrow(id.rhs.clone(), id.lhs.clone()),
    )
}

/// Rewrites every arrow `a -> b` in the formula to `a -> (a ^ b)`,
/// innermost first.
pub fn formula_to_heyting(phi: &Term) -> Term {
    match phi {
        Term::Variable(_) | Term::ConstBottom | Term::ConstTop => phi.clone(),
        Term::Meet(l, r) => Term::meet(formula_to_heyting(l), formula_to_heyting(r)),
        Term::Join(l, r) => Term::join(formula_to_heyting(l), formula_to_heyting(r)),
        Term::Arrow(l, r) => h(formula_to_heyting(l), formula_to_heyting(r)),
    }
}

/// Rewrites every arrow `a -> b` in the formula to
/// `(a -> b) ^ (a* -> b*)`, innermost first.
pub fn formula_to_connexive(phi: &Term) -> Term {
    match phi {
        Term::Variable(_) | Term::ConstBottom | Term::ConstTop => phi.clone(),
        Term::Meet(l, r) => Term::meet(formula_to_connexive(l), formula_to_connexive(r)),
        Term::Join(l, r) => Term::join(formula_to_connexive(l), formula_to_connexive(r)),
        Term::Arrow(l, r) => {
            let (l, r) = (formula_to_connexive(l), formula_to_connexive(r));
            Term::meet(
                Term::arrow(l.clone(), r.clone()),
                Term::arrow(Term::star(l), Term::star(r)),
            )
        }
    }
}

#[derive(Deserialize)]
struct ProofJson {
    logic: String,
    steps: Vec<StepJson>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum StepJson {
    Axiom {
        axiom: String,
        #[serde(default)]
        subst: BTreeMap<String, String>,
    },
    Smp {
        smp: [usize; 2],
    },
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ProofJsonError {
    #[error("proof file is not valid JSON: {0}")]
    Json(String),
    #[error("step {step}: formula bound to {metavar:?} does not parse: {source}")]
    BadFormula {
        step: usize,
        metavar: String,
        source: terms::ParseError,
    },
}

/// Reads a proof from its JSON form: `{"logic": ..., "steps": [...]}` where a
/// step is `{"axiom": "A12", "subst": {"alpha": "p -> q"}}` or
/// `{"smp": [premise, implication]}` with 1-based indices.
pub fn parse_proof_json(src: &str) -> Result<Proof, ProofJsonError> {
    let raw: ProofJson =
        serde_json::from_str(src).map_err(|e| ProofJsonError::Json(e.to_string()))?;
    let mut steps = Vec::with_capacity(raw.steps.len());
    for (i, step) in raw.steps.into_iter().enumerate() {
        steps.push(match step {
            StepJson::Axiom { axiom, subst } => {
                let mut parsed = Substitution::new();
                for (metavar, formula) in subst {
                    let term = terms::parse_formula(&formula).map_err(|source| {
                        ProofJsonError::BadFormula {
                            step: i + 1,
                            metavar: metavar.clone(),
                            source,
                        }
                    })?;
                    parsed.insert(metavar, term);
                }
                Step::Axiom { id: axiom, subst: parsed }
            }
            StepJson::Smp { smp } => Step::Smp {
                premise: smp[0],
                implication: smp[1],
            },
        });
    }
    Ok(Proof {
        logic: raw.logic,
        steps,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::corpus_algebra;
    use crate::terms::parse_formula;

    fn subst(pairs: &[(&str, &str)]) -> Substitution {
        pairs
            .iter()
            .map(|(k, v)| (k.to_string(), parse_formula(v).unwrap()))
            .collect()
    }

    #[test]
    fn instantiation_examples() {
        let any = subst(&[("alpha", "p")]);
        assert_eq!(
            instantiate(axiom_schema("A6").unwrap(), &any).unwrap(),
            Term::ConstTop,
            "extra bindings are ignored"
        );
        assert_eq!(
            instantiate(axiom_schema("A12").unwrap(), &any)
                .unwrap()
                .to_string(),
            "(p* -> p)*"
        );
        assert_eq!(
            instantiate(axiom_schema("A14").unwrap(), &subst(&[("alpha", "p"), ("beta", "p")]))
                .unwrap()
                .to_string(),
            "(p -> p) -> (p -> p*)*"
        );
        assert_eq!(
            instantiate(axiom_schema("A14").unwrap(), &subst(&[("alpha", "p")])),
            Err("beta".to_string())
        );
    }

    #[test]
    fn every_logic_resolves_and_unknown_does_not() {
        for logic in KNOWN_LOGICS {
            let axioms = logic_axioms(logic).unwrap();
            assert!(axioms.len() >= 11, "{logic}");
            for id in axioms {
                assert!(axiom_schema(id).is_some(), "{logic}/{id}");
            }
        }
        assert_eq!(logic_axioms("IPC"), None);
    }

    #[test]
    fn two_axiom_steps_are_accepted_in_csh() {
        let proof = Proof {
            logic: "CSH".into(),
            steps: vec![
                Step::Axiom {
                    id: "A6".into(),
                    subst: Substitution::new(),
                },
                Step::Axiom {
                    id: "A12".into(),
                    subst: subst(&[("alpha", "T")]),
                },
            ],
        };
        let derived = check_proof(&proof).unwrap();
        assert_eq!(derived[0], Term::ConstTop);
        assert_eq!(derived[1].to_string(), "(1* -> 1)*");
    }

    #[test]
    fn axiom_outside_the_logic_is_rejected_at_its_step() {
        let proof = Proof {
            logic: "SH".into(),
            steps: vec![
                Step::Axiom {
                    id: "A6".into(),
                    subst: Substitution::new(),
                },
                Step::Axiom {
                    id: "A12".into(),
                    subst: subst(&[("alpha", "p")]),
                },
            ],
        };
        assert_eq!(
            check_proof(&proof),
            Err(ProofError::Rejected {
                step: 2,
                reason: RejectReason::AxiomNotInLogic {
                    axiom: "A12".into(),
                    logic: "SH".into(),
                },
            })
        );
    }

    #[test]
    fn fabricated_smp_is_rejected() {
        let proof = Proof {
            logic: "CSH".into(),
            steps: vec![
                Step::Axiom {
                    id: "A12".into(),
                    subst: subst(&[("alpha", "p")]),
                },
                Step::Smp {
                    premise: 1,
                    implication: 1,
                },
            ],
        };
        let err = check_proof(&proof).unwrap_err();
        assert_eq!(
            err,
            ProofError::Rejected {
                step: 2,
                reason: RejectReason::NotSemiImplication {
                    index: 1,
                    formula: "(p* -> p)*".into(),
                },
            }
        );
    }

    #[test]
    fn smp_discharges_the_deductive_implication() {
        // derive phi v T from phi by A1
        let phi = "(p* -> p)*";
        let proof = Proof {
            logic: "CSH".into(),
            steps: vec![
                Step::Axiom {
                    id: "A12".into(),
                    subst: subst(&[("alpha", "p")]),
                },
                Step::Axiom {
                    id: "A1".into(),
                    subst: subst(&[("alpha", phi), ("beta", "T")]),
                },
                Step::Smp {
                    premise: 1,
                    implication: 2,
                },
            ],
        };
        let derived = check_proof(&proof).unwrap();
        assert_eq!(derived[2].to_string(), "(p* -> p)* v 1");
    }

    #[test]
    fn smp_index_hygiene() {
        let forward = Proof {
            logic: "SH".into(),
            steps: vec![Step::Smp {
                premise: 1,
                implication: 1,
            }],
        };
        assert_eq!(
            check_proof(&forward),
            Err(ProofError::Rejected {
                step: 1,
                reason: RejectReason::DanglingIndex { index: 1 },
            })
        );
        let mismatch = Proof {
            logic: "SH".into(),
            steps: vec![
                Step::Axiom {
                    id: "A6".into(),
                    subst: Substitution::new(),
                },
                Step::Axiom {
                    id: "A1".into(),
                    subst: subst(&[("alpha", "p"), ("beta", "q")]),
                },
                Step::Smp {
                    premise: 1,
                    implication: 2,
                },
            ],
        };
        let err = check_proof(&mismatch).unwrap_err();
        assert!(matches!(
            err,
            ProofError::Rejected {
                step: 3,
                reason: RejectReason::PremiseMismatch { .. },
            }
        ));
    }

    #[test]
    fn prefixes_of_accepted_proofs_stay_accepted() {
        let proof = Proof {
            logic: "CSH".into(),
            steps: vec![
                Step::Axiom {
                    id: "A12".into(),
                    subst: subst(&[("alpha", "p")]),
                },
                Step::Axiom {
                    id: "A1".into(),
                    subst: subst(&[("alpha", "(p* -> p)*"), ("beta", "T")]),
                },
                Step::Smp {
                    premise: 1,
                    implication: 2,
                },
            ],
        };
        let full = check_proof(&proof).unwrap();
        for k in 0..=proof.steps.len() {
            let prefix = Proof {
                logic: proof.logic.clone(),
                steps: proof.steps[..k].to_vec(),
            };
            assert_eq!(check_proof(&prefix).unwrap(), full[..k].to_vec());
        }
    }

    #[test]
    fn soundness_scan_examples() {
        let phi = parse_formula("~(~p -> p)").unwrap();
        let connexive = [
            corpus_algebra("CSH3").unwrap(),
            corpus_algebra("2bar").unwrap(),
        ];
        assert_eq!(soundness_scan(&phi, &connexive), Ok(()));

        let classical = [corpus_algebra("2").unwrap()];
        let failure = soundness_scan(&phi, &classical).unwrap_err();
        assert_eq!(failure.algebra_name.as_deref(), Some("2"));
        assert_eq!(fmt_assignment(&failure.assignment), "p=1");

        assert_eq!(soundness_scan(&Term::ConstTop, &connexive), Ok(()));
    }

    #[test]
    fn tau_and_rho_shapes() {
        let phi = parse_formula("~(~a -> a)").unwrap();
        assert_eq!(tau(&phi).to_string(), "(a* -> a)* = 1");
        assert_eq!(tau(&Term::ConstTop).to_string(), "1 = 1");

        let id = terms::parse_identity("x = y").unwrap();
        let (fwd, back) = rho(&id);
        assert_eq!(fwd.to_string(), "x -> y");
        assert_eq!(back.to_string(), "y -> x");
    }

    #[test]
    fn formula_rewriters() {
        let phi = parse_formula("p -> q").unwrap();
        assert_eq!(formula_to_heyting(&phi).to_string(), "p -> p ^ q");
        assert_eq!(
            formula_to_connexive(&phi).to_string(),
            "(p -> q) ^ (p* -> q*)"
        );
        // nested arrows are rewritten innermost first
        let nested = parse_formula("(p -> q) -> r").unwrap();
        assert_eq!(
            formula_to_heyting(&nested).to_string(),
            "(p -> p ^ q) -> (p -> p ^ q) ^ r"
        );
        // variables and constants pass through
        let flat = parse_formula("p ^ q v F").unwrap();
        assert_eq!(formula_to_heyting(&flat), flat);
        assert_eq!(formula_to_connexive(&flat), flat);
    }

    #[test]
    fn proof_json_round_trip() {
        let src = r#"{
            "logic": "CSH",
            "steps": [
                {"axiom": "A12", "subst": {"alpha": "p"}},
                {"axiom": "A1", "subst": {"alpha": "~(~p -> p)", "beta": "T"}},
                {"smp": [1, 2]}
            ]
        }"#;
        let proof = parse_proof_json(src).unwrap();
        assert_eq!(proof.logic, "CSH");
        assert_eq!(proof.steps.len(), 3);
        let derived = check_proof(&proof).unwrap();
        assert_eq!(derived[2].to_string(), "(p* -> p)* v 1");

        assert!(matches!(
            parse_proof_json("{"),
            Err(ProofJsonError::Json(_))
        ));
        let bad = r#"{"logic": "CSH", "steps": [{"axiom": "A12", "subst": {"alpha": "p ->"}}]}"#;
        assert!(matches!(
            parse_proof_json(bad),
            Err(ProofJsonError::BadFormula { step: 1, .. })
        ));
    }

    #[test]
    fn csh3_axioms_validate_on_their_algebras() {
        let csh3 = [corpus_algebra("CSH3").unwrap(), corpus_algebra("2bar").unwrap()];
        for id in ["CSH3-i", "CSH3-ii"] {
            let inst = instantiate(
                axiom_schema(id).unwrap(),
                &subst(&[("alpha", "p"), ("beta", "q")]),
            )
            .unwrap();
            assert_eq!(soundness_scan(&inst, &csh3), Ok(()), "{id}");
        }
    }
}
