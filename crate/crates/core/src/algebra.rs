//! Semi-Heyting algebras: a bounded lattice expanded with an arrow table.
//!
//! The arrow must satisfy three laws, referred to throughout by short names:
//!
//! * SH2: `x ^ (x -> y) = x ^ y`
//! * SH3: `x ^ (y -> z) = x ^ ((x ^ y) -> (x ^ z))`
//! * SH4: `x -> x = 1`
//!
//! Heyting algebras are exactly the members where `(x ^ y) -> x = 1` also
//! holds. `x*` abbreviates `x -> 0` and is always computed, never stored.

use crate::lattice::{self, Elem, LatticeError, LatticeSpec};
use serde::{Deserialize, Serialize};

/// A finite semi-Heyting algebra: validated lattice plus arrow table.
///
/// Construction through [`SemiHeytingAlgebra::new`] validates everything.
/// Deserializing from JSON does *not* validate; call
/// [`SemiHeytingAlgebra::validate`] on anything read from the outside world.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemiHeytingAlgebra {
    lattice: LatticeSpec,
    arrow: Vec<Vec<Elem>>,
    name: Option<String>,
}

/// Why a candidate table fails to be a semi-Heyting algebra.
///
/// Arrow shape problems are malformed input; `Sh2`/`Sh3`/`Sh4` carry the
/// first witnessing tuple in a fixed scan order (all of SH2, then SH3, then
/// SH4, each row-major).
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error("arrow table must be {size}x{size}")]
    ArrowBadShape { size: usize },
    #[error("arrow({x},{y}) = {value} is not an element index")]
    ArrowEntryOutOfRange { x: Elem, y: Elem, value: Elem },
    #[error("x ^ (x -> y) = x ^ y fails at x={x}, y={y}")]
    Sh2 { x: Elem, y: Elem },
    #[error("x ^ (y -> z) = x ^ ((x ^ y) -> (x ^ z)) fails at x={x}, y={y}, z={z}")]
    Sh3 { x: Elem, y: Elem, z: Elem },
    #[error("x -> x = 1 fails at x={x}")]
    Sh4 { x: Elem },
}

/// JSON image of an algebra; field declaration order is the wire key order.
#[derive(Serialize, Deserialize)]
struct AlgebraJson {
    size: usize,
    top: Elem,
    meet: Vec<Vec<Elem>>,
    join: Vec<Vec<Elem>>,
    arrow: Vec<Vec<Elem>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    name: Option<String>,
}

impl From<AlgebraJson> for SemiHeytingAlgebra {
    fn from(j: AlgebraJson) -> Self {
        SemiHeytingAlgebra {
            lattice: LatticeSpec {
                size: j.size,
                top: j.top,
                meet: j.meet,
                join: j.join,
            },
            arrow: j.arrow,
            name: j.name,
        }
    }
}

impl From<&SemiHeytingAlgebra> for AlgebraJson {
    fn from(a: &SemiHeytingAlgebra) -> Self {
        AlgebraJson {
            size: a.lattice.size,
            top: a.lattice.top,
            meet: a.lattice.meet.clone(),
            join: a.lattice.join.clone(),
            arrow: a.arrow.clone(),
            name: a.name.clone(),
        }
    }
}

impl Serialize for SemiHeytingAlgebra {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        AlgebraJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for SemiHeytingAlgebra {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        AlgebraJson::deserialize(d).map(Into::into)
    }
}

impl SemiHeytingAlgebra {
    /// Validates the lattice and the arrow laws, returning the algebra or the
    /// first violation.
    pub fn new(lattice: LatticeSpec, arrow: Vec<Vec<Elem>>) -> Result<Self, AlgebraError> {
        let a = SemiHeytingAlgebra {
            lattice,
            arrow,
            name: None,
        };
        a.validate()?;
        Ok(a)
    }

    /// For internal callers that produce tables already known to satisfy the
    /// laws (the enumerator checks them incrementally).
    pub(crate) fn from_parts_unchecked(lattice: LatticeSpec, arrow: Vec<Vec<Elem>>) -> Self {
        SemiHeytingAlgebra {
            lattice,
            arrow,
            name: None,
        }
    }

    /// Re-checks every law; needed after deserialization.
    pub fn validate(&self) -> Result<(), AlgebraError> {
        lattice::validate_lattice(&self.lattice)?;
        let n = self.lattice.size;
        if self.arrow.len() != n || self.arrow.iter().any(|r| r.len() != n) {
            return Err(AlgebraError::ArrowBadShape { size: n });
        }
        for (x, row) in self.arrow.iter().enumerate() {
            for (y, &value) in row.iter().enumerate() {
                if value >= n {
                    return Err(AlgebraError::ArrowEntryOutOfRange { x, y, value });
                }
            }
        }
        let m = |x, y| self.lattice.meet(x, y);
        for x in 0..n {
            for y in 0..n {
                if m(x, self.arrow[x][y]) != m(x, y) {
                    return Err(AlgebraError::Sh2 { x, y });
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if m(x, self.arrow[y][z]) != m(x, self.arrow[m(x, y)][m(x, z)]) {
                        return Err(AlgebraError::Sh3 { x, y, z });
                    }
                }
            }
        }
        for x in 0..n {
            if self.arrow[x][x] != self.lattice.top {
                return Err(AlgebraError::Sh4 { x });
            }
        }
        Ok(())
    }

    /// Attaches a display name (corpus entries and enumeration output use it).
    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn lattice(&self) -> &LatticeSpec {
        &self.lattice
    }

    /// The raw arrow table, row-major.
    pub fn arrow_table(&self) -> &Vec<Vec<Elem>> {
        &self.arrow
    }

    pub fn size(&self) -> usize {
        self.lattice.size
    }

    pub fn top(&self) -> Elem {
        self.lattice.top
    }

    pub fn bottom(&self) -> Elem {
        0
    }

    pub fn meet(&self, x: Elem, y: Elem) -> Elem {
        self.lattice.meet(x, y)
    }

    pub fn join(&self, x: Elem, y: Elem) -> Elem {
        self.lattice.join(x, y)
    }

    pub fn arrow(&self, x: Elem, y: Elem) -> Elem {
        self.arrow[x][y]
    }

    pub fn leq(&self, x: Elem, y: Elem) -> bool {
        self.lattice.leq(x, y)
    }

    /// `x* = x -> 0`.
    pub fn star(&self, x: Elem) -> Elem {
        self.arrow[x][0]
    }

    /// An element is dense when its star is bottom.
    pub fn is_dense(&self, x: Elem) -> bool {
        self.star(x) == 0
    }

    /// Compact single-line JSON with stable key order; the interchange format.
    pub fn to_json_string(&self) -> String {
        serde_json::to_string(self).expect("algebra serialization cannot fail")
    }

    /// Parses the JSON interchange format without validating the laws.
    pub fn from_json_str(s: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }
}

fn chain_algebra(name: &str, arrow: Vec<Vec<Elem>>) -> SemiHeytingAlgebra {
    let lat = lattice::make_chain(arrow.len()).expect("chain size is positive");
    SemiHeytingAlgebra::new(lat, arrow)
        .unwrap_or_else(|e| panic!("corpus algebra {name} must validate: {e}"))
        .with_name(name)
}

fn ordered_chain_algebra(name: &str, order: &[Elem], arrow: Vec<Vec<Elem>>) -> SemiHeytingAlgebra {
    let lat = lattice::chain_with_order(order).expect("order listing is a permutation");
    SemiHeytingAlgebra::new(lat, arrow)
        .unwrap_or_else(|e| panic!("corpus algebra {name} must validate: {e}"))
        .with_name(name)
}

/// The seven reference algebras, in a fixed order.
///
/// * `2`, `2bar`: the two algebras on the 2-element chain (`2` is the Boolean
///   arrow, `2bar` flips `0 -> 1` to `0`).
/// * `L1`, `CSH3`, `L10`: three of the ten algebras on the chain `0 < a < 1`,
///   with `a` at index 1.
/// * `W4`: the 4-element chain `0 < 2 < 3 < 1` whose algebra separates the
///   two one-sided connexive theses (it keeps `(x -> y*) -> (x -> y)* = 1`
///   but breaks `(x -> y) -> (x -> y*)* = 1`).
/// * `W5`: the 5-element chain `0 < 2 < 4 < 3 < 1` whose algebra keeps
///   `(x -> y) -> (x -> y*)* = 1` but breaks the exchange law
///   `x -> (y -> z) = y -> (x -> z)`.
pub fn corpus() -> Vec<SemiHeytingAlgebra> {
    vec![
        chain_algebra("2", vec![vec![1, 1], vec![0, 1]]),
        chain_algebra("2bar", vec![vec![1, 0], vec![0, 1]]),
        chain_algebra("L1", vec![vec![2, 2, 2], vec![0, 2, 2], vec![0, 1, 2]]),
        chain_algebra("CSH3", vec![vec![2, 0, 0], vec![0, 2, 2], vec![0, 1, 2]]),
        chain_algebra("L10", vec![vec![2, 0, 0], vec![0, 2, 1], vec![0, 1, 2]]),
        ordered_chain_algebra(
            "W4",
            &[0, 2, 3, 1],
            vec![
                vec![1, 0, 0, 0],
                vec![0, 1, 2, 3],
                vec![0, 3, 1, 1],
                vec![0, 1, 2, 1],
            ],
        ),
        ordered_chain_algebra(
            "W5",
            &[0, 2, 4, 3, 1],
            vec![
                vec![1, 0, 0, 0, 0],
                vec![0, 1, 2, 3, 4],
                vec![0, 1, 1, 1, 3],
                vec![0, 1, 2, 1, 4],
                vec![0, 1, 2, 1, 1],
            ],
        ),
    ]
}

/// Looks up a corpus algebra by its name.
pub fn corpus_algebra(name: &str) -> Option<SemiHeytingAlgebra> {
    corpus().into_iter().find(|a| a.name() == Some(name))
}
