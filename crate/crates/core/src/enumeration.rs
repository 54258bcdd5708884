//! Enumeration of every semi-Heyting arrow table over a fixed finite lattice,
//! by backtracking with incremental law checking, plus a countermodel finder
//! over the enumerated space.
//!
//! The diagonal is fixed to the top element up front (SH4); the remaining
//! cells are filled row-major with values tried ascending. A cell value must
//! pass its SH2 instance immediately, and every SH3 instance is checked as
//! soon as the last cell it mentions is filled. The resulting stream is in
//! canonical (lexicographic table) order and is reproduced exactly for any
//! worker count.

use crate::algebra::SemiHeytingAlgebra;
use crate::config::RunConfig;
use crate::lattice::{automorphisms, make_chain, validate_lattice, Elem, LatticeError, LatticeSpec};
use crate::terms::{holds_identity, Assignment, Identity};
use crate::varieties::{descriptor_by_name, satisfies_descriptor, VarietyDescriptor};
use std::thread;

/// What to enumerate and how to post-process the stream.
#[derive(Debug, Clone)]
pub struct EnumerationTask {
    pub lattice: LatticeSpec,
    /// Keep one representative per orbit of the lattice automorphism group
    /// (a no-op on rigid lattices such as chains).
    pub up_to_iso: bool,
    /// Catalog names; only algebras satisfying all of them are yielded.
    pub filter: Vec<String>,
}

impl EnumerationTask {
    /// Raw enumeration over a lattice: no isomorphism collapsing, no filter.
    pub fn raw(lattice: LatticeSpec) -> Self {
        EnumerationTask {
            lattice,
            up_to_iso: false,
            filter: Vec::new(),
        }
    }
}

/// Why an enumeration request was refused.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EnumerationError {
    #[error("lattice size {size} exceeds the enumeration cap {cap}")]
    SizeAboveCap { size: usize, cap: usize },
    #[error("unknown variety {0:?} in filter")]
    UnknownVariety(String),
    #[error(transparent)]
    InvalidLattice(#[from] LatticeError),
}

/// Immutable search plan: cell fill order, SH2-allowed values per cell, and
/// the SH3 triples to re-check at each fill depth.
struct Plan {
    cells: Vec<(Elem, Elem)>,
    allowed: Vec<Vec<Elem>>,
    triggers: Vec<Vec<(Elem, Elem, Elem)>>,
    base: Vec<Vec<Elem>>,
}

fn plan(lat: &LatticeSpec) -> Plan {
    let n = lat.size;
    let mut cells = Vec::new();
    let mut index = vec![vec![None; n]; n];
    for x in 0..n {
        for y in 0..n {
            if x != y {
                index[x][y] = Some(cells.len());
                cells.push((x, y));
            }
        }
    }
    // SH2 fixes the candidate set of each cell in isolation.
    let allowed: Vec<Vec<Elem>> = cells
        .iter()
        .map(|&(x, y)| (0..n).filter(|&v| lat.meet(x, v) == lat.meet(x, y)).collect())
        .collect();
    // Each SH3 triple reads two table cells; check it when the later one in
    // the fill order gets its value. Triples reading only diagonal cells hold
    // automatically (both sides reduce to meet with top).
    let mut triggers = vec![Vec::new(); cells.len()];
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let needed = [(b, c), (lat.meet(a, b), lat.meet(a, c))];
                if let Some(depth) = needed.iter().filter_map(|&(p, q)| index[p][q]).max() {
                    triggers[depth].push((a, b, c));
                }
            }
        }
    }
    let mut base = vec![vec![0; n]; n];
    for x in 0..n {
        base[x][x] = lat.top;
    }
    Plan {
        cells,
        allowed,
        triggers,
        base,
    }
}

fn sh3_ok(lat: &LatticeSpec, t: &[Vec<Elem>], a: Elem, b: Elem, c: Elem) -> bool {
    lat.meet(a, t[b][c]) == lat.meet(a, t[lat.meet(a, b)][lat.meet(a, c)])
}

fn dfs(
    plan: &Plan,
    lat: &LatticeSpec,
    table: &mut Vec<Vec<Elem>>,
    depth: usize,
    sink: &mut impl FnMut(&Vec<Vec<Elem>>),
) {
    if depth == plan.cells.len() {
        sink(table);
        return;
    }
    let (x, y) = plan.cells[depth];
    for &v in &plan.allowed[depth] {
        table[x][y] = v;
        if plan.triggers[depth].iter().all(|&(a, b, c)| sh3_ok(lat, table, a, b, c)) {
            dfs(plan, lat, table, depth + 1, sink);
        }
    }
}

/// Runs the search, splitting the first cell's candidate values round-robin
/// over workers, and merges into canonical (sorted) order.
fn run_search(lat: &LatticeSpec, workers: usize) -> Vec<Vec<Vec<Elem>>> {
    let plan = plan(lat);
    if plan.cells.is_empty() {
        return vec![plan.base.clone()];
    }
    let explore = |first_values: &[Elem]| -> Vec<Vec<Vec<Elem>>> {
        let mut out = Vec::new();
        let mut table = plan.base.clone();
        let (x, y) = plan.cells[0];
        for &v in first_values {
            table[x][y] = v;
            if plan.triggers[0].iter().all(|&(a, b, c)| sh3_ok(lat, &table, a, b, c)) {
                dfs(&plan, lat, &mut table, 1, &mut |t| out.push(t.clone()));
            }
        }
        out
    };
    let branches = &plan.allowed[0];
    let mut tables = if workers <= 1 || branches.len() <= 1 {
        explore(branches)
    } else {
        let explore = &explore;
        thread::scope(|s| {
            let handles: Vec<_> = (0..workers.min(branches.len()))
                .map(|w| {
                    let mine: Vec<Elem> = branches
                        .iter()
                        .copied()
                        .enumerate()
                        .filter(|(i, _)| i % workers == w)
                        .map(|(_, v)| v)
                        .collect();
                    s.spawn(move || explore(&mine))
                })
                .collect();
            handles
                .into_iter()
                .flat_map(|h| h.join().expect("search worker cannot panic"))
                .collect()
        })
    };
    tables.sort();
    tables
}

fn permuted(t: &[Vec<Elem>], p: &[Elem]) -> Vec<Vec<Elem>> {
    let n = t.len();
    let mut out = vec![vec![0; n]; n];
    for x in 0..n {
        for y in 0..n {
            out[p[x]][p[y]] = p[t[x][y]];
        }
    }
    out
}

fn is_orbit_minimum(t: &Vec<Vec<Elem>>, autos: &[Vec<Elem>]) -> bool {
    autos.iter().all(|p| permuted(t, p) >= *t)
}

fn check_task(lattice: &LatticeSpec, cap: usize) -> Result<(), EnumerationError> {
    validate_lattice(lattice)?;
    if lattice.size > cap {
        return Err(EnumerationError::SizeAboveCap {
            size: lattice.size,
            cap,
        });
    }
    Ok(())
}

fn resolve_filter(names: &[String]) -> Result<Vec<&'static VarietyDescriptor>, EnumerationError> {
    names
        .iter()
        .map(|name| {
            descriptor_by_name(name).ok_or_else(|| EnumerationError::UnknownVariety(name.clone()))
        })
        .collect()
}

/// Every semi-Heyting algebra on the task's lattice, in canonical order.
pub fn enumerate_sh(
    task: &EnumerationTask,
    config: &RunConfig,
) -> Result<Vec<SemiHeytingAlgebra>, EnumerationError> {
    check_task(&task.lattice, config.max_enumeration_size)?;
    let filters = resolve_filter(&task.filter)?;
    let mut tables = run_search(&task.lattice, config.worker_count);
    if task.up_to_iso {
        let autos = automorphisms(&task.lattice);
        if autos.len() > 1 {
            tables.retain(|t| is_orbit_minimum(t, &autos));
        }
    }
    Ok(tables
        .into_iter()
        .map(|t| SemiHeytingAlgebra::from_parts_unchecked(task.lattice.clone(), t))
        .filter(|a| filters.iter().all(|d| satisfies_descriptor(a, d)))
        .collect())
}

/// Raw count of arrow tables on the lattice (no filter, no isomorphism
/// collapsing), using the same search.
pub fn count_sh(lattice: &LatticeSpec, config: &RunConfig) -> Result<u64, EnumerationError> {
    check_task(lattice, config.max_enumeration_size)?;
    Ok(run_search(lattice, config.worker_count).len() as u64)
}

/// Scans chains of sizes `2..=max_size`, restricted to members of all the
/// `premises` varieties, for the first algebra (in size, then canonical
/// order) where `id` fails; returns it with the failing assignment.
pub fn find_countermodel(
    id: &Identity,
    premises: &[String],
    max_size: usize,
    config: &RunConfig,
) -> Result<Option<(SemiHeytingAlgebra, Assignment)>, EnumerationError> {
    if max_size > config.max_enumeration_size {
        return Err(EnumerationError::SizeAboveCap {
            size: max_size,
            cap: config.max_enumeration_size,
        });
    }
    resolve_filter(premises)?;
    for n in 2..=max_size {
        let task = EnumerationTask {
            lattice: make_chain(n)?,
            up_to_iso: false,
            filter: premises.to_vec(),
        };
        for a in enumerate_sh(&task, config)? {
            if let Some(witness) = holds_identity(&a, id) {
                return Ok(Some((a, witness)));
            }
        }
    }
    Ok(None)
}
