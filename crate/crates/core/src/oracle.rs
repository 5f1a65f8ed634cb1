//! Brute-force reference constructions used to validate the tree module's
//! structural claims.
//!
//! Everything here works over plain `i64` on bounded ranges and derives each
//! quantity from the raw defining predicates (vertex admissibility, the
//! intersection-number-2 relation, longitude growth) with none of the
//! extended-gcd or arithmetic-family shortcuts the fast paths use. The two
//! sides therefore share no code for any quantity they cross-check.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use serde::Serialize;
use serde_json::{json, Value};

use crate::slope::QuadrantSlope;
use crate::tree;

/// Hard cap on oracle bounds; keeps every product comfortably inside `i64`.
pub const MAX_BOUND: i64 = 1_000_000;

fn gcd(mut a: i64, mut b: i64) -> i64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.abs()
}

/// Raw vertex admissibility on machine integers; mirrors the definition, not
/// the library code.
pub fn is_vertex_raw(longitude: i64, meridian: i64) -> bool {
    if longitude == 0 {
        return meridian == 1;
    }
    longitude >= 2
        && longitude % 2 == 0
        && meridian >= 1
        && meridian % 2 == 1
        && gcd(longitude, meridian) == 1
        && !(longitude == 2 && meridian >= 3)
}

fn assert_bound(bound: i64) {
    assert!(
        (2..=MAX_BOUND).contains(&bound),
        "oracle bound must lie in 2..={MAX_BOUND}, got {bound}"
    );
}

/// The tree grown from `(0,1)` by scanning for admissible slopes at
/// intersection number 2 with increasing longitude.
pub struct BfsTree {
    pub bound: i64,
    /// Depth of every discovered vertex.
    pub depth: BTreeMap<(i64, i64), u64>,
    /// Parent of every non-root vertex.
    pub parent: BTreeMap<(i64, i64), (i64, i64)>,
}

impl BfsTree {
    /// Vertices in (longitude, meridian) order.
    pub fn vertices(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.depth.keys().copied()
    }
}

/// All admissible `(l', m')` with `l < l' <= bound` and
/// `|l'*m - m'*l| = 2`, found by solving the determinant condition for `m'`
/// at every candidate longitude.
fn raw_children(l: i64, m: i64, bound: i64) -> Vec<(i64, i64)> {
    if l == 0 {
        // every (2, m') meets the determinant condition; admissibility
        // excludes all but (2,1)
        return if bound >= 2 { vec![(2, 1)] } else { Vec::new() };
    }
    let mut out = Vec::new();
    let mut lp = l + 2;
    while lp <= bound {
        for det in [2i64, -2] {
            // l'*m - m'*l = det
            let num = lp * m - det;
            if num > 0 && num % l == 0 {
                let mp = num / l;
                if is_vertex_raw(lp, mp) {
                    out.push((lp, mp));
                }
            }
        }
        lp += 2;
    }
    out.sort_unstable();
    out.dedup();
    out
}

pub fn bfs_tree(bound: i64) -> BfsTree {
    assert_bound(bound);
    let mut depth = BTreeMap::new();
    let mut parent = BTreeMap::new();
    depth.insert((0, 1), 0u64);
    let mut frontier = vec![(0i64, 1i64)];
    let mut level = 0u64;
    while !frontier.is_empty() {
        level += 1;
        let mut next = Vec::new();
        for &(l, m) in &frontier {
            for child in raw_children(l, m, bound) {
                let fresh = depth.insert(child, level).is_none();
                debug_assert!(fresh, "vertex {child:?} discovered twice");
                parent.insert(child, (l, m));
                next.push(child);
            }
        }
        frontier = next;
    }
    BfsTree {
        bound,
        depth,
        parent,
    }
}

/// Outcome of one verification sweep: the plain-text summary comes from
/// [`CheckReport::summary`], the JSON detail from serialisation.
#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub check: &'static str,
    pub bound: i64,
    pub checked: u64,
    pub violations: Vec<Value>,
    /// Slopes whose only smaller det-2 neighbour is an excluded `(2,b)`
    /// slope. These sit in twist-images of the tree; they are reported, not
    /// counted as violations.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub excluded_class: Vec<[i64; 2]>,
}

impl CheckReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn summary(&self) -> String {
        let state = if self.is_clean() { "ok" } else { "FAIL" };
        let mut line = format!(
            "{}: {} — {} checked, {} violations",
            self.check,
            state,
            self.checked,
            self.violations.len()
        );
        if !self.excluded_class.is_empty() {
            line.push_str(&format!(
                " ({} twist-reducible slopes flagged)",
                self.excluded_class.len()
            ));
        }
        line
    }
}

/// The admissible smaller-longitude neighbours of `(l, m)` at intersection
/// number 2, found by trying every smaller longitude, together with any
/// excluded `(2,b)` slopes that met the determinant condition.
#[allow(clippy::type_complexity)]
pub fn exhaustive_parent_candidates(l: i64, m: i64) -> (Vec<(i64, i64)>, Vec<(i64, i64)>) {
    let mut admissible = Vec::new();
    let mut excluded = Vec::new();
    let mut lp = 0;
    while lp < l {
        if lp == 0 {
            // |det((l,m),(0,1))| = l
            if l == 2 {
                admissible.push((0, 1));
            }
        } else {
            for det in [2i64, -2] {
                // l*m' - lp*m = det  =>  m' = (lp*m + det) / l
                let num = lp * m + det;
                if num > 0 && num % l == 0 {
                    let mp = num / l;
                    if mp % 2 == 1 {
                        if lp == 2 && mp >= 3 {
                            excluded.push((lp, mp));
                        } else if is_vertex_raw(lp, mp) {
                            admissible.push((lp, mp));
                        }
                    }
                }
            }
        }
        lp += 2;
    }
    admissible.sort_unstable();
    admissible.dedup();
    excluded.sort_unstable();
    excluded.dedup();
    (admissible, excluded)
}

/// Checks that every admissible slope with longitude in `[4, bound]` (and
/// meridian up to the bound, which covers the twist-image classes) has
/// exactly one admissible smaller-longitude neighbour at intersection
/// number 2.
pub fn verify_parent_unique(bound: i64) -> CheckReport {
    assert_bound(bound);
    let mut report = CheckReport {
        check: "parent uniqueness",
        bound,
        checked: 0,
        violations: Vec::new(),
        excluded_class: Vec::new(),
    };
    let mut l = 4;
    while l <= bound {
        let mut m = 1;
        while m <= bound {
            if is_vertex_raw(l, m) {
                report.checked += 1;
                let (admissible, excluded) = exhaustive_parent_candidates(l, m);
                match (admissible.len(), excluded.len()) {
                    (1, 0) => {}
                    (0, 1) => report.excluded_class.push([l, m]),
                    _ => report.violations.push(json!({
                        "slope": [l, m],
                        "admissible_candidates": admissible,
                        "excluded_candidates": excluded,
                    })),
                }
            }
            m += 2;
        }
        l += 2;
    }
    report
}

fn oracle_path_hits(tree: &BfsTree, mut v: (i64, i64), target: (i64, i64)) -> bool {
    loop {
        if v == target {
            return true;
        }
        match tree.parent.get(&v) {
            Some(&p) => v = p,
            None => return false,
        }
    }
}

/// Compares, for every tree vertex, the path-membership predicate "the root
/// path passes through (4,1)" against the exact ratio predicate
/// `longitude > 3 * meridian`, and both against the fast-path implementation.
pub fn verify_ratio_claim(bound: i64) -> CheckReport {
    let tree = bfs_tree(bound);
    let mut report = CheckReport {
        check: "ratio-3 dichotomy",
        bound,
        checked: 0,
        violations: Vec::new(),
        excluded_class: Vec::new(),
    };
    for (l, m) in tree.vertices() {
        if (l, m) == (0, 1) {
            continue;
        }
        report.checked += 1;
        let by_path = oracle_path_hits(&tree, (l, m), (4, 1));
        let by_ratio = l > 3 * m;
        let slope = QuadrantSlope::new(l, m).expect("bfs vertices are valid slopes");
        let fast = tree::passes_through_41(&slope).expect("bfs vertices are tree vertices");
        if by_path != by_ratio || fast != by_path {
            report.violations.push(json!({
                "slope": [l, m],
                "path_membership": by_path,
                "ratio_predicate": by_ratio,
                "fast_path": fast,
            }));
        }
    }
    report
}

/// Compares the fast-path genus against breadth-first depth for every vertex
/// in range.
pub fn verify_genus_depth(bound: i64) -> CheckReport {
    let tree = bfs_tree(bound);
    let mut report = CheckReport {
        check: "genus equals BFS depth",
        bound,
        checked: 0,
        violations: Vec::new(),
        excluded_class: Vec::new(),
    };
    for ((l, m), &d) in &tree.depth {
        report.checked += 1;
        let slope = QuadrantSlope::new(*l, *m).expect("bfs vertices are valid slopes");
        let fast = tree::genus(&slope);
        if fast.as_ref().ok() != Some(&BigUint::from(d)) {
            report.violations.push(json!({
                "slope": [l, m],
                "bfs_depth": d,
                "fast_genus": fast.map(|g| g.to_string()).unwrap_or_else(|e| e.to_string()),
            }));
        }
    }
    report
}

/// Materialises the fast-path root path of every vertex in range and checks
/// the path invariants: strictly decreasing longitudes, intersection number
/// 2 between consecutive vertices, termination at the root, and length equal
/// to BFS depth.
pub fn verify_path_monotonic(bound: i64) -> CheckReport {
    let tree = bfs_tree(bound);
    let mut report = CheckReport {
        check: "root paths descend",
        bound,
        checked: 0,
        violations: Vec::new(),
        excluded_class: Vec::new(),
    };
    for ((l, m), &d) in &tree.depth {
        report.checked += 1;
        let slope = QuadrantSlope::new(*l, *m).expect("bfs vertices are valid slopes");
        let path = match tree::path_to_root(&slope) {
            Ok(p) => p,
            Err(e) => {
                report.violations.push(json!({
                    "slope": [l, m],
                    "error": e.to_string(),
                }));
                continue;
            }
        };
        let mut ok = path.genus() as u64 == d
            && path.vertices().last().map(|v| v.is_root()) == Some(true);
        for pair in path.vertices().windows(2) {
            let (hi, lo) = (&pair[0], &pair[1]);
            let det = crate::slope::intersection_number(
                &hi.slope().to_slope(),
                &lo.slope().to_slope(),
            );
            ok = ok
                && hi.longitude() > lo.longitude()
                && (det == BigInt::from(2) || det == BigInt::from(-2));
        }
        if !ok {
            report.violations.push(json!({
                "slope": [l, m],
                "path": path.to_string(),
                "bfs_depth": d,
            }));
        }
    }
    report
}

/// Runs every verification sweep at the given bound.
pub fn verify_all(bound: i64) -> Vec<CheckReport> {
    vec![
        verify_parent_unique(bound),
        verify_ratio_claim(bound),
        verify_genus_depth(bound),
        verify_path_monotonic(bound),
    ]
}
