//! Finite bounded lattices as explicit meet/join tables.

use itertools::Itertools;
use serde::{Deserialize, Serialize};
use std::fmt;

/// Element of a finite algebra, identified by its row/column index.
pub type Elem = usize;

/// A finite bounded lattice given by `size`-by-`size` meet and join tables.
///
/// Index `0` is always the bottom element. The top element's index is stored
/// explicitly so that tables whose labels do not follow the order (as happens
/// for hand-entered examples) can be used verbatim.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeSpec {
    pub size: usize,
    pub top: Elem,
    pub meet: Vec<Vec<Elem>>,
    pub join: Vec<Vec<Elem>>,
}

/// Lattice law names used in validation failure reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LatticeLaw {
    MeetIdempotent,
    JoinIdempotent,
    MeetCommutative,
    JoinCommutative,
    MeetAssociative,
    JoinAssociative,
    AbsorptionMeetJoin,
    AbsorptionJoinMeet,
    BottomLeast,
    TopGreatest,
}

impl fmt::Display for LatticeLaw {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            LatticeLaw::MeetIdempotent => "x ^ x = x",
            LatticeLaw::JoinIdempotent => "x v x = x",
            LatticeLaw::MeetCommutative => "x ^ y = y ^ x",
            LatticeLaw::JoinCommutative => "x v y = y v x",
            LatticeLaw::MeetAssociative => "x ^ (y ^ z) = (x ^ y) ^ z",
            LatticeLaw::JoinAssociative => "x v (y v z) = (x v y) v z",
            LatticeLaw::AbsorptionMeetJoin => "x ^ (x v y) = x",
            LatticeLaw::AbsorptionJoinMeet => "x v (x ^ y) = x",
            LatticeLaw::BottomLeast => "x ^ 0 = 0",
            LatticeLaw::TopGreatest => "x v 1 = 1",
        };
        f.write_str(s)
    }
}

/// Why a table fails to describe a bounded lattice.
///
/// The malformed variants (`InvalidSize`, `BadShape`, `EntryOutOfRange`,
/// `TopOutOfRange`, `NotAPermutation`) mean the input is not even a candidate
/// table; `LawViolation` means the tables are well-shaped but break a law, and
/// carries the first witness in row-major scan order.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LatticeError {
    #[error("size must be at least 1")]
    InvalidSize,
    #[error("{table} table must be {size}x{size}")]
    BadShape { table: &'static str, size: usize },
    #[error("{table}({x},{y}) = {value} is not an element index")]
    EntryOutOfRange {
        table: &'static str,
        x: Elem,
        y: Elem,
        value: Elem,
    },
    #[error("top index {top} is not an element index")]
    TopOutOfRange { top: Elem },
    #[error("order listing {order:?} is not a permutation of the element indices")]
    NotAPermutation { order: Vec<Elem> },
    #[error("{law} fails at {}", fmt_witness(witness))]
    LawViolation { law: LatticeLaw, witness: Vec<Elem> },
}

fn fmt_witness(w: &[Elem]) -> String {
    let names = ["x", "y", "z"];
    w.iter()
        .enumerate()
        .map(|(i, v)| format!("{}={v}", names[i]))
        .join(", ")
}

impl LatticeSpec {
    /// Meet (greatest lower bound) of two elements.
    pub fn meet(&self, x: Elem, y: Elem) -> Elem {
        self.meet[x][y]
    }

    /// Join (least upper bound) of two elements.
    pub fn join(&self, x: Elem, y: Elem) -> Elem {
        self.join[x][y]
    }

    /// The least element; by convention always index 0.
    pub fn bottom(&self) -> Elem {
        0
    }

    /// Lattice order: `x <= y` iff `x ^ y = x`.
    pub fn leq(&self, x: Elem, y: Elem) -> bool {
        self.meet[x][y] == x
    }
}

fn check_table(
    table: &'static str,
    rows: &[Vec<Elem>],
    size: usize,
) -> Result<(), LatticeError> {
    if rows.len() != size || rows.iter().any(|r| r.len() != size) {
        return Err(LatticeError::BadShape { table, size });
    }
    for (x, row) in rows.iter().enumerate() {
        for (y, &value) in row.iter().enumerate() {
            if value >= size {
                return Err(LatticeError::EntryOutOfRange { table, x, y, value });
            }
        }
    }
    Ok(())
}

/// Checks that `spec` describes a bounded lattice.
///
/// Shape and range problems are reported before any law is evaluated. Laws are
/// then checked in a fixed order (idempotence, commutativity, associativity,
/// absorption, bounds), each scanned row-major, so the reported violation and
/// witness are deterministic.
pub fn validate_lattice(spec: &LatticeSpec) -> Result<(), LatticeError> {
    let n = spec.size;
    if n == 0 {
        return Err(LatticeError::InvalidSize);
    }
    check_table("meet", &spec.meet, n)?;
    check_table("join", &spec.join, n)?;
    if spec.top >= n {
        return Err(LatticeError::TopOutOfRange { top: spec.top });
    }

    let fail = |law, witness: Vec<Elem>| Err(LatticeError::LawViolation { law, witness });
    for x in 0..n {
        if spec.meet[x][x] != x {
            return fail(LatticeLaw::MeetIdempotent, vec![x]);
        }
        if spec.join[x][x] != x {
            return fail(LatticeLaw::JoinIdempotent, vec![x]);
        }
    }
    for x in 0..n {
        for y in 0..n {
            if spec.meet[x][y] != spec.meet[y][x] {
                return fail(LatticeLaw::MeetCommutative, vec![x, y]);
            }
            if spec.join[x][y] != spec.join[y][x] {
                return fail(LatticeLaw::JoinCommutative, vec![x, y]);
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if spec.meet[x][spec.meet[y][z]] != spec.meet[spec.meet[x][y]][z] {
                    return fail(LatticeLaw::MeetAssociative, vec![x, y, z]);
                }
                if spec.join[x][spec.join[y][z]] != spec.join[spec.join[x][y]][z] {
                    return fail(LatticeLaw::JoinAssociative, vec![x, y, z]);
                }
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            if spec.meet[x][spec.join[x][y]] != x {
                return fail(LatticeLaw::AbsorptionMeetJoin, vec![x, y]);
            }
            if spec.join[x][spec.meet[x][y]] != x {
                return fail(LatticeLaw::AbsorptionJoinMeet, vec![x, y]);
            }
        }
    }
    for x in 0..n {
        if spec.meet[x][0] != 0 {
            return fail(LatticeLaw::BottomLeast, vec![x]);
        }
        if spec.join[x][spec.top] != spec.top {
            return fail(LatticeLaw::TopGreatest, vec![x]);
        }
    }
    Ok(())
}

/// The `n`-element chain `0 < 1 < ... < n-1`.
pub fn make_chain(n: usize) -> Result<LatticeSpec, LatticeError> {
    if n == 0 {
        return Err(LatticeError::InvalidSize);
    }
    let meet = (0..n).map(|x| (0..n).map(|y| x.min(y)).collect()).collect();
    let join = (0..n).map(|x| (0..n).map(|y| x.max(y)).collect()).collect();
    Ok(LatticeSpec {
        size: n,
        top: n - 1,
        meet,
        join,
    })
}

/// A chain whose elements, listed bottom-up, carry the given labels.
///
/// `order` must be a permutation of `0..order.len()` starting with 0, so that
/// label 0 stays the bottom element. Meet and join of two labels are the
/// earlier and later of their positions in the listing.
pub fn chain_with_order(order: &[Elem]) -> Result<LatticeSpec, LatticeError> {
    let n = order.len();
    if n == 0 {
        return Err(LatticeError::InvalidSize);
    }
    let mut position = vec![usize::MAX; n];
    for (pos, &label) in order.iter().enumerate() {
        if label >= n || position[label] != usize::MAX {
            return Err(LatticeError::NotAPermutation {
                order: order.to_vec(),
            });
        }
        position[label] = pos;
    }
    if order[0] != 0 {
        return Err(LatticeError::NotAPermutation {
            order: order.to_vec(),
        });
    }
    let mut meet = vec![vec![0; n]; n];
    let mut join = vec![vec![0; n]; n];
    for x in 0..n {
        for y in 0..n {
            let (lo, hi) = if position[x] <= position[y] { (x, y) } else { (y, x) };
            meet[x][y] = lo;
            join[x][y] = hi;
        }
    }
    Ok(LatticeSpec {
        size: n,
        top: order[n - 1],
        meet,
        join,
    })
}

/// The 4-element Boolean lattice: bottom 0, incomparable atoms 1 and 2, top 3.
pub fn make_diamond() -> LatticeSpec {
    LatticeSpec {
        size: 4,
        top: 3,
        meet: vec![
            vec![0, 0, 0, 0],
            vec![0, 1, 0, 1],
            vec![0, 0, 2, 2],
            vec![0, 1, 2, 3],
        ],
        join: vec![
            vec![0, 1, 2, 3],
            vec![1, 1, 3, 3],
            vec![2, 3, 2, 3],
            vec![3, 3, 3, 3],
        ],
    }
}

/// Number of covers in a longest chain from bottom to top, i.e. the length of
/// a maximum strictly increasing sequence minus 1.
pub fn height(spec: &LatticeSpec) -> usize {
    let n = spec.size;
    // longest[x] = length of the longest strictly increasing chain ending at x
    let mut longest = vec![0usize; n];
    // Process elements in a linear extension of the order: repeat until stable
    // (n passes suffice since each pass settles at least one more rank).
    for _ in 0..n {
        for x in 0..n {
            let mut best = 0;
            for y in 0..n {
                if y != x && spec.leq(y, x) {
                    best = best.max(longest[y] + 1);
                }
            }
            longest[x] = best;
        }
    }
    longest[spec.top]
}

/// All lattice automorphisms, as permutation vectors `p` with `p[x]` the image
/// of `x`, in lexicographic order. The identity is always present.
pub fn automorphisms(spec: &LatticeSpec) -> Vec<Vec<Elem>> {
    let n = spec.size;
    (0..n)
        .permutations(n)
        .filter(|p| {
            (0..n).all(|x| {
                (0..n).all(|y| {
                    p[spec.meet[x][y]] == spec.meet[p[x]][p[y]]
                        && p[spec.join[x][y]] == spec.join[p[x]][p[y]]
                })
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chains_validate() {
        for n in 1..=6 {
            let c = make_chain(n).unwrap();
            assert_eq!(c.size, n);
            assert_eq!(c.top, n - 1);
            assert_eq!(validate_lattice(&c), Ok(()));
        }
        assert_eq!(make_chain(0), Err(LatticeError::InvalidSize));
    }

    #[test]
    fn broken_meet_reports_absorption_first() {
        // Turning meet(0,1) into 1 (symmetrically) leaves idempotence,
        // commutativity and associativity intact, so the scan first trips on
        // absorption at (0,1).
        let mut c = make_chain(2).unwrap();
        c.meet[0][1] = 1;
        c.meet[1][0] = 1;
        assert_eq!(
            validate_lattice(&c),
            Err(LatticeError::LawViolation {
                law: LatticeLaw::AbsorptionMeetJoin,
                witness: vec![0, 1],
            })
        );
    }

    #[test]
    fn out_of_range_is_malformed_not_a_law_violation() {
        let mut c = make_chain(2).unwrap();
        c.meet[0][1] = 7;
        assert_eq!(
            validate_lattice(&c),
            Err(LatticeError::EntryOutOfRange {
                table: "meet",
                x: 0,
                y: 1,
                value: 7,
            })
        );
        let mut c = make_chain(2).unwrap();
        c.join.pop();
        assert_eq!(
            validate_lattice(&c),
            Err(LatticeError::BadShape {
                table: "join",
                size: 2,
            })
        );
    }

    #[test]
    fn relabeled_chain_matches_positionwise_min_max() {
        let c = chain_with_order(&[0, 2, 3, 1]).unwrap();
        assert_eq!(validate_lattice(&c), Ok(()));
        assert_eq!(c.top, 1);
        // 0 < 2 < 3 < 1: meet picks the earlier label, join the later.
        assert_eq!(c.meet(2, 1), 2);
        assert_eq!(c.join(2, 3), 3);
        assert_eq!(c.meet(3, 1), 3);
        assert!(c.leq(2, 3) && c.leq(3, 1) && !c.leq(1, 3));

        assert!(matches!(
            chain_with_order(&[1, 0]),
            Err(LatticeError::NotAPermutation { .. })
        ));
        assert!(matches!(
            chain_with_order(&[0, 0]),
            Err(LatticeError::NotAPermutation { .. })
        ));
    }

    #[test]
    fn height_of_chains_and_relabelings() {
        for n in 1..=6 {
            assert_eq!(height(&make_chain(n).unwrap()), n - 1);
        }
        assert_eq!(height(&chain_with_order(&[0, 2, 4, 3, 1]).unwrap()), 4);
    }

    #[test]
    fn diamond_has_two_automorphisms() {
        let d = make_diamond();
        assert_eq!(validate_lattice(&d), Ok(()));
        assert_eq!(height(&d), 2);
        let autos = automorphisms(&d);
        assert_eq!(autos, vec![vec![0, 1, 2, 3], vec![0, 2, 1, 3]]);
    }

    #[test]
    fn chains_are_rigid() {
        for n in 1..=5 {
            let c = make_chain(n).unwrap();
            assert_eq!(automorphisms(&c), vec![(0..n).collect::<Vec<_>>()]);
        }
    }

    #[test]
    fn json_field_order_is_declaration_order() {
        let c = make_chain(2).unwrap();
        let s = serde_json::to_string(&c).unwrap();
        assert_eq!(
            s,
            r#"{"size":2,"top":1,"meet":[[0,0],[0,1]],"join":[[0,1],[1,1]]}"#
        );
        let back: LatticeSpec = serde_json::from_str(&s).unwrap();
        assert_eq!(back, c);
    }
}
