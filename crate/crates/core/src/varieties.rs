//! Catalog of equationally defined classes of semi-Heyting algebras,
//! classification of an algebra against it, and the matrix-level strong
//! connexivity check.

use crate::algebra::SemiHeytingAlgebra;
use crate::lattice::Elem;
use crate::terms::{
    holds_identity, holds_quasi, parse_identity, Assignment, Identity, QuasiIdentity,
};
use std::collections::BTreeSet;
use std::sync::OnceLock;

/// An identity together with the concrete-syntax text it was built from.
#[derive(Debug, Clone)]
pub struct Law {
    pub text: &'static str,
    pub identity: Identity,
}

/// A quasi-identity with a display text.
#[derive(Debug, Clone)]
pub struct QuasiLaw {
    pub text: &'static str,
    pub quasi: QuasiIdentity,
}

/// A named class of algebras cut out of the base class by identities (and,
/// rarely, quasi-identities).
#[derive(Debug, Clone)]
pub struct VarietyDescriptor {
    pub name: &'static str,
    pub identities: Vec<Law>,
    pub quasi_identities: Vec<QuasiLaw>,
    /// One-line account of what the laws say, for reports.
    pub source: &'static str,
}

fn law(text: &'static str) -> Law {
    let identity = parse_identity(text)
        .unwrap_or_else(|e| panic!("catalog identity {text:?} must parse: {e}"));
    Law { text, identity }
}

fn descriptor(
    name: &'static str,
    texts: &[&'static str],
    source: &'static str,
) -> VarietyDescriptor {
    VarietyDescriptor {
        name,
        identities: texts.iter().map(|t| law(t)).collect(),
        quasi_identities: Vec::new(),
        source,
    }
}

const AT1_ID: &str = "(x* -> x)* = 1";
const AT2_ID: &str = "(x -> x*)* = 1";
const BT1_ID: &str = "(x -> y) -> (x -> y*)* = 1";
const BT2_ID: &str = "(x -> y*) -> (x -> y)* = 1";
const AH_ID: &str = "0 -> 1 = 0";
const COMM_ID: &str = "x -> y = y -> x";
const EX_ID: &str = "x -> (y -> z) = y -> (x -> z)";
const STONE_ID: &str = "x* v x** = 1";

/// The full catalog. Names are unique; every descriptor is relative to the
/// base class of semi-Heyting algebras.
pub fn catalog() -> &'static [VarietyDescriptor] {
    static CATALOG: OnceLock<Vec<VarietyDescriptor>> = OnceLock::new();
    CATALOG.get_or_init(|| {
        vec![
            descriptor(
                "H",
                &["(x ^ y) -> x = 1"],
                "Heyting algebras, singled out inside the base class by one identity",
            ),
            descriptor(
                "AT1",
                &[AT1_ID],
                "negation of the implication from a negation to its own formula is valid",
            ),
            descriptor(
                "AT2",
                &[AT2_ID],
                "negation of the implication from a formula to its own negation is valid",
            ),
            descriptor(
                "BT1",
                &[BT1_ID],
                "an implication implies the negated implication to the negated consequent",
            ),
            descriptor(
                "BT2",
                &[BT2_ID],
                "an implication to a negation implies the negated plain implication",
            ),
            descriptor(
                "CSH",
                &[AT1_ID, AT2_ID, BT1_ID, BT2_ID],
                "all four connexive identities at once",
            ),
            descriptor("SH_c", &[COMM_ID], "commutative arrow"),
            descriptor("EX", &[EX_ID], "exchange of nested arrow arguments"),
            descriptor("StSH", &[STONE_ID], "Stone identity for the star"),
            descriptor("AH", &[AH_ID], "the arrow inverts the bounds"),
            descriptor(
                "WCOM",
                &["x* -> y* = y* -> x*"],
                "arrow commutes on star images",
            ),
            descriptor(
                "AB-a",
                &["x v x* = 1", AH_ID],
                "complemented plus inverted bounds",
            ),
            descriptor(
                "AB-b",
                &["x** = x", AH_ID],
                "involutive star plus inverted bounds",
            ),
            descriptor(
                "AB-c",
                &["x -> y <= x* v y", AH_ID],
                "arrow below the classical bound, plus inverted bounds",
            ),
            descriptor(
                "AB-d",
                &["x -> y = x* v y", AH_ID],
                "classical definition of the arrow, plus inverted bounds; note these two laws \
                 jointly force 0 = 1 (take x=0, y=1 in the first), so only the one-element \
                 algebra satisfies this descriptor",
            ),
            descriptor(
                "AB-e",
                &["x v (y -> z) = (x v y) -> (x v z)", AH_ID],
                "join distributes over the arrow, plus inverted bounds",
            ),
            descriptor(
                "AB-f",
                &["x -> (y -> z) = (x -> y) -> z"],
                "fully associative arrow",
            ),
            descriptor("AB-g", &["x = (x -> y) -> y"], "double-arrow cancellation"),
            descriptor(
                "AB-comm-ex",
                &[COMM_ID, EX_ID],
                "commutative plus exchange; an alternative description of the same class as AB-a..g",
            ),
            descriptor(
                "AB-star-join",
                &[AT1_ID, "x* v y* v (x -> y) = 1"],
                "first connexive identity plus a three-way join cover; same class as AB-a..g",
            ),
            descriptor(
                "AB-arrow-cycle",
                &[AT1_ID, "(x -> y) v (y -> z) v (z -> x) = 1"],
                "first connexive identity plus a cyclic arrow cover; same class as AB-a..g",
            ),
            descriptor(
                "CSH3",
                &[
                    BT1_ID,
                    "x v (x -> y) = x v ((x -> y) -> 1)",
                    "x* v (x -> y) = (x v y) -> y",
                ],
                "the class generated by the 3-element connexive chain algebra",
            ),
            descriptor(
                "H3",
                &[STONE_ID, "x v (x -> y) = (x -> y)* -> x"],
                "the class generated by the 3-element Heyting chain algebra",
            ),
            descriptor(
                "H3-I2",
                &["x v (x -> y) = (x -> y)* -> x"],
                "experimental: the second H3 law alone; whether the Stone identity is redundant is unsettled",
            ),
            descriptor(
                "CH",
                &[
                    "(x -> y) -> ((y -> z) -> (x -> z)) = 1",
                    BT1_ID,
                    "x ^ (x -> y) = x ^ y",
                    "x -> y <= (z ^ x) -> (z ^ y)",
                    "x -> y <= (z v x) -> (z v y)",
                ],
                "transitive, connexive, modus-ponens-compatible, monotone arrow",
            ),
        ]
    })
}

/// Looks up a catalog entry by name.
pub fn descriptor_by_name(name: &str) -> Option<&'static VarietyDescriptor> {
    catalog().iter().find(|d| d.name == name)
}

/// The subdirect-irreducibility quasi-identity: `x v y = 1` forces `x = 1`
/// or `y = 1`.
pub fn si_condition() -> QuasiIdentity {
    QuasiIdentity {
        premises: vec![parse_identity("x v y = 1").unwrap()],
        conclusions: vec![
            parse_identity("x = 1").unwrap(),
            parse_identity("y = 1").unwrap(),
        ],
    }
}

/// A law that failed in a given algebra, with its first counterassignment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FailedLaw {
    pub law: String,
    pub witness: Assignment,
}

/// True iff every identity and quasi-identity of the descriptor holds.
pub fn satisfies_descriptor(a: &SemiHeytingAlgebra, d: &VarietyDescriptor) -> bool {
    first_descriptor_failure(a, d).is_none()
}

/// The first law of the descriptor the algebra breaks, if any, with witness.
pub fn first_descriptor_failure(
    a: &SemiHeytingAlgebra,
    d: &VarietyDescriptor,
) -> Option<FailedLaw> {
    for l in &d.identities {
        if let Some(witness) = holds_identity(a, &l.identity) {
            return Some(FailedLaw {
                law: l.text.to_string(),
                witness,
            });
        }
    }
    for q in &d.quasi_identities {
        if let Some(witness) = holds_quasi(a, &q.quasi) {
            return Some(FailedLaw {
                law: q.text.to_string(),
                witness,
            });
        }
    }
    None
}

/// The names of every catalog class the algebra belongs to.
pub fn classify(a: &SemiHeytingAlgebra) -> BTreeSet<&'static str> {
    catalog()
        .iter()
        .filter(|d| satisfies_descriptor(a, d))
        .map(|d| d.name)
        .collect()
}

/// Why an algebra, read as a logical matrix with the top element designated,
/// fails to be strongly connexive.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConnexivityFailure {
    #[error("x -> x* is designated at x={x}")]
    NegationOfSelf { x: Elem },
    #[error("x -> y and x -> y* are both designated at x={x}, y={y}")]
    JointImplication { x: Elem, y: Elem },
}

/// Checks the two matrix conditions for strong connexivity: no element
/// implies its own star designatedly, and no element designatedly implies
/// both some element and that element's star.
pub fn is_strongly_connexive_matrix(a: &SemiHeytingAlgebra) -> Result<(), ConnexivityFailure> {
    let top = a.top();
    for x in 0..a.size() {
        if a.arrow(x, a.star(x)) == top {
            return Err(ConnexivityFailure::NegationOfSelf { x });
        }
    }
    for x in 0..a.size() {
        for y in 0..a.size() {
            if a.arrow(x, y) == top && a.arrow(x, a.star(y)) == top {
                return Err(ConnexivityFailure::JointImplication { x, y });
            }
        }
    }
    Ok(())
}
