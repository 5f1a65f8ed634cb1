//! The tree of boundary slopes of geometrically incompressible one-sided
//! surfaces in a solid torus.
//!
//! Vertices are first-quadrant slopes `(2a, b)`; two vertices are joined by an
//! edge when the surfaces they bound differ by a single Moebius band, which in
//! slope arithmetic means their intersection number is `+-2`. The root `(0,1)`
//! bounds the meridian disc and its only child is `(2,1)`; the number of edges
//! on the unique path from a vertex to the root is the non-orientable genus of
//! the surface the vertex bounds.
//!
//! Slopes `(2,b)` with `b >= 3` are excluded: a twist along the meridian disc
//! carries each of them, together with its entire would-be subtree, onto
//! `(2,1)` and its subtree, so they name no new surfaces. Slopes whose
//! compression chain runs into that excluded class (for example `(4,5)`, whose
//! only smaller neighbour at intersection number 2 is `(2,3)`) are reported
//! with [`TreeError::ExcludedParent`] rather than silently re-rooted.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::json;
use thiserror::Error;

use crate::slope::{intersection_number, QuadrantSlope, SlopeError};

/// Largest longitude bound accepted by the enumeration entry points. Vertex
/// count grows quadratically with the bound, so anything past this is a
/// resource mistake rather than a real query.
pub const MAX_ENUMERATION_BOUND: u64 = 1_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TreeError {
    #[error(transparent)]
    Slope(#[from] SlopeError),
    #[error("({longitude},{meridian}) is not a vertex of the tree")]
    NotAVertex { longitude: BigInt, meridian: BigInt },
    #[error("the root (0,1) has no parent")]
    RootHasNoParent,
    /// Two admissible smaller-longitude neighbours at intersection number 2
    /// would contradict uniqueness of the compression chain; fail loudly
    /// instead of choosing.
    #[error("ambiguous parent for ({longitude},{meridian}): both ({l1},{m1}) and ({l2},{m2}) qualify")]
    AmbiguousParent {
        longitude: BigInt,
        meridian: BigInt,
        l1: BigInt,
        m1: BigInt,
        l2: BigInt,
        m2: BigInt,
    },
    /// The compression chain of the slope reaches an excluded `(2,b)` slope,
    /// so the slope lies in a twist-image of the tree rather than the tree
    /// itself.
    #[error("({longitude},{meridian}) lies outside the tree: its compression chain reaches (2,{excluded_meridian}), which is twist-equivalent to (2,1) and excluded")]
    ExcludedParent {
        longitude: BigInt,
        meridian: BigInt,
        excluded_meridian: BigInt,
    },
    #[error("longitude bound must be at least 2, got {bound}")]
    BoundTooSmall { bound: BigInt },
    #[error("longitude bound {bound} exceeds the enumeration cap {cap}")]
    BoundTooLarge { bound: BigInt, cap: u64 },
    #[error("unknown tree format {got:?}: expected \"dot\" or \"json\"")]
    UnknownFormat { got: String },
}

/// True exactly when `(longitude, meridian)` satisfies the vertex conditions:
/// the root `(0,1)`, or `(2a,b)` with `a >= 1`, `b >= 1` odd, `gcd(2a,b) = 1`,
/// excluding `(2,b)` with `b >= 3`.
pub fn is_vertex(longitude: &BigInt, meridian: &BigInt) -> bool {
    if longitude.is_negative() || !meridian.is_positive() {
        return false;
    }
    if longitude.is_zero() {
        return meridian.is_one();
    }
    if longitude.is_odd() || meridian.is_even() {
        return false;
    }
    if !longitude.gcd(meridian).is_one() {
        return false;
    }
    !(*longitude == BigInt::from(2) && *meridian > BigInt::one())
}

/// A slope admitted to the tree.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TreeVertex {
    slope: QuadrantSlope,
}

impl TreeVertex {
    pub fn new(slope: QuadrantSlope) -> Result<Self, TreeError> {
        if !is_vertex(slope.longitude(), slope.meridian()) {
            return Err(TreeError::NotAVertex {
                longitude: slope.longitude().clone(),
                meridian: slope.meridian().clone(),
            });
        }
        Ok(TreeVertex { slope })
    }

    /// Convenience constructor from raw coefficients (any signs; the pair is
    /// canonicalised and projected first).
    pub fn from_coords(
        longitude: impl Into<BigInt>,
        meridian: impl Into<BigInt>,
    ) -> Result<Self, TreeError> {
        Self::new(QuadrantSlope::new(longitude, meridian)?)
    }

    /// The meridian disc vertex `(0,1)`.
    pub fn root() -> Self {
        TreeVertex {
            slope: QuadrantSlope::new(0, 1).expect("root slope"),
        }
    }

    pub fn is_root(&self) -> bool {
        self.slope.longitude().is_zero()
    }

    pub fn slope(&self) -> &QuadrantSlope {
        &self.slope
    }

    pub fn longitude(&self) -> &BigInt {
        self.slope.longitude()
    }

    pub fn meridian(&self) -> &BigInt {
        self.slope.meridian()
    }

    /// Reduced coordinates `(a, b)` with the slope being `(2a, b)`.
    fn reduced(&self) -> (BigInt, BigInt) {
        (self.slope.longitude() / 2, self.slope.meridian().clone())
    }

    fn from_reduced(a: BigInt, b: BigInt) -> Self {
        let v = TreeVertex {
            slope: QuadrantSlope::new(2 * &a, b).expect("reduced coordinates form a valid slope"),
        };
        debug_assert!(is_vertex(v.longitude(), v.meridian()));
        v
    }
}

impl fmt::Display for TreeVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.slope)
    }
}

impl fmt::Debug for TreeVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TreeVertex{}", self.slope)
    }
}

/// The two solutions `(a', b')` of `a*b' - a'*b = +-1` with `0 <= a' < a`,
/// returned as (determinant +1 candidate, determinant -1 candidate). Their
/// componentwise sum is `(a, b)`, so for odd `b` exactly one of them has an
/// odd second component.
fn parent_candidates(a: &BigInt, b: &BigInt) -> ((BigInt, BigInt), (BigInt, BigInt)) {
    debug_assert!(*a >= BigInt::from(2));
    let eg = a.extended_gcd(b);
    debug_assert!(eg.gcd.is_one());
    // a*b' - a'*b = 1 with a' = (-y) mod a, b' = (a'*b + 1) / a
    let a_plus = (-&eg.y).mod_floor(a);
    let b_plus: BigInt = (&a_plus * b + 1) / a;
    let a_minus = a - &a_plus;
    let b_minus = b - &b_plus;
    ((a_plus, b_plus), (a_minus, b_minus))
}

/// Unique smaller-longitude vertex at intersection number `+-2`.
pub fn parent(v: &TreeVertex) -> Result<TreeVertex, TreeError> {
    if v.is_root() {
        return Err(TreeError::RootHasNoParent);
    }
    let (a, b) = v.reduced();
    if a.is_one() {
        // (2,1): a single band compresses to the meridian disc.
        return Ok(TreeVertex::root());
    }
    let (plus, minus) = parent_candidates(&a, &b);
    let (pa, pb) = match (plus.1.is_odd(), minus.1.is_odd()) {
        (true, false) => plus,
        (false, true) => minus,
        (true, true) => {
            return Err(TreeError::AmbiguousParent {
                longitude: v.longitude().clone(),
                meridian: v.meridian().clone(),
                l1: 2 * plus.0,
                m1: plus.1,
                l2: 2 * minus.0,
                m2: minus.1,
            });
        }
        (false, false) => unreachable!("candidates sum to an odd meridian"),
    };
    if pa.is_one() && !pb.is_one() {
        return Err(TreeError::ExcludedParent {
            longitude: v.longitude().clone(),
            meridian: v.meridian().clone(),
            excluded_meridian: pb,
        });
    }
    let p = TreeVertex::from_reduced(pa, pb);
    debug_assert_eq!(
        intersection_number(&v.slope().to_slope(), &p.slope().to_slope()).abs(),
        BigInt::from(2)
    );
    Ok(p)
}

/// One maximal straight stretch of the compression chain: the members
/// `(a + k*da, b + k*db)` for `k = 0, .., count-1`, each the parent of its
/// predecessor.
struct Run {
    a: BigInt,
    b: BigInt,
    da: BigInt,
    db: BigInt,
    count: BigInt,
}

impl Run {
    /// Whether the reduced vertex `(ta, tb)` occurs among the run's members.
    fn contains(&self, ta: &BigInt, tb: &BigInt) -> bool {
        if self.da.is_zero() {
            return self.a == *ta && self.b == *tb && self.count.is_positive();
        }
        let diff = ta - &self.a;
        let (k, rem) = diff.div_rem(&self.da);
        rem.is_zero()
            && !k.is_negative()
            && k < self.count
            && &self.b + &k * &self.db == *tb
    }
}

/// Walks the compression chain from reduced coordinates `(a, b)` down to the
/// root, reporting maximal straight runs. The starting vertex itself is not
/// reported; the final run is the single root member `(0, 1)`.
fn descend(a0: &BigInt, b0: &BigInt, mut visit: impl FnMut(&Run)) -> Result<(), TreeError> {
    let mut a = a0.clone();
    let mut b = b0.clone();
    if a.is_zero() {
        return Ok(());
    }
    loop {
        if a.is_one() {
            debug_assert!(b.is_one());
            visit(&Run {
                a: BigInt::zero(),
                b: BigInt::one(),
                da: -BigInt::one(),
                db: BigInt::zero(),
                count: BigInt::one(),
            });
            return Ok(());
        }
        let (plus, minus) = parent_candidates(&a, &b);
        let (pa, pb) = if plus.1.is_odd() { plus } else { minus };
        if pa.is_one() && !pb.is_one() {
            return Err(TreeError::ExcludedParent {
                longitude: 2 * &a,
                meridian: b,
                excluded_meridian: pb,
            });
        }
        let da = &pa - &a;
        let db = &pb - &b;
        // members stay parents of their predecessors while the first
        // coordinate stays >= 1
        let k_max = (&pa - BigInt::one()).div_floor(&-&da);
        let last_a = &pa + &k_max * &da;
        let last_b = &pb + &k_max * &db;
        if last_a.is_one() && !last_b.is_one() {
            // the chain stops one member short of an excluded (2,b) slope
            let stop_a = &last_a - &da;
            let stop_b = &last_b - &db;
            return Err(TreeError::ExcludedParent {
                longitude: 2 * stop_a,
                meridian: stop_b,
                excluded_meridian: last_b,
            });
        }
        visit(&Run {
            a: pa,
            b: pb,
            da,
            db,
            count: &k_max + 1,
        });
        if last_a.is_one() {
            visit(&Run {
                a: BigInt::zero(),
                b: BigInt::one(),
                da: -BigInt::one(),
                db: BigInt::zero(),
                count: BigInt::one(),
            });
            return Ok(());
        }
        a = last_a;
        b = last_b;
    }
}

fn require_vertex(s: &QuadrantSlope) -> Result<(BigInt, BigInt), TreeError> {
    if !is_vertex(s.longitude(), s.meridian()) {
        return Err(TreeError::NotAVertex {
            longitude: s.longitude().clone(),
            meridian: s.meridian().clone(),
        });
    }
    Ok((s.longitude() / 2, s.meridian().clone()))
}

/// Edge count of the path from `s` to the root: the non-orientable genus of
/// the surface bounded by `s`. Runs of parallel compressions are collapsed,
/// so deep base-branch queries like `(2p,1)` cost O(log) parent computations
/// rather than `p`.
pub fn genus(s: &QuadrantSlope) -> Result<BigUint, TreeError> {
    let (a, b) = require_vertex(s)?;
    let mut edges = BigInt::zero();
    descend(&a, &b, |run| edges += &run.count)?;
    Ok(edges.to_biguint().expect("edge count is non-negative"))
}

/// The unique path from a vertex down to the root `(0,1)`.
pub struct TreePath {
    vertices: Vec<TreeVertex>,
}

impl TreePath {
    pub fn vertices(&self) -> &[TreeVertex] {
        &self.vertices
    }

    /// Edge count, which equals the genus of the head vertex's surface.
    pub fn genus(&self) -> usize {
        self.vertices.len() - 1
    }
}

impl fmt::Display for TreePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                write!(f, " -> ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Materialises the root path one parent step at a time.
pub fn path_to_root(s: &QuadrantSlope) -> Result<TreePath, TreeError> {
    require_vertex(s)?;
    let mut vertices = vec![TreeVertex::new(s.clone())?];
    while !vertices.last().expect("non-empty").is_root() {
        let next = parent(vertices.last().expect("non-empty"))?;
        vertices.push(next);
    }
    Ok(TreePath { vertices })
}

/// Whether the root path of `s` passes through the vertex `(4,1)`. Equivalent
/// to `longitude > 3 * meridian` for every tree vertex; both routes are
/// computed independently so the equivalence stays testable. The root itself
/// yields `false`.
pub fn passes_through_41(s: &QuadrantSlope) -> Result<bool, TreeError> {
    let (a, b) = require_vertex(s)?;
    let (ta, tb) = (BigInt::from(2), BigInt::one());
    if a == ta && b == tb {
        return Ok(true);
    }
    let mut found = false;
    descend(&a, &b, |run| found = found || run.contains(&ta, &tb))?;
    Ok(found)
}

/// The cross-multiplied ratio predicate `longitude/meridian > 3`, evaluated
/// exactly.
pub fn ratio_exceeds_three(s: &QuadrantSlope) -> bool {
    s.longitude() > &(3 * s.meridian())
}

/// All vertices `w` with `longitude(v) < longitude(w) <= longitude_bound` and
/// intersection number `+-2` with `v`. For `v = (2p,q)` these form two
/// arithmetic families stepping by `(4p, 2q)`; for the root the result is
/// `{(2,1)}` whenever the bound permits.
pub fn children(v: &TreeVertex, longitude_bound: &BigInt) -> BTreeSet<TreeVertex> {
    let mut out = BTreeSet::new();
    if v.is_root() {
        if *longitude_bound >= BigInt::from(2) {
            out.insert(TreeVertex::from_reduced(BigInt::one(), BigInt::one()));
        }
        return out;
    }
    let (p, q) = v.reduced();
    let bound_a = longitude_bound.div_floor(&BigInt::from(2));
    let (plus, minus) = if p.is_one() {
        // (2,1): the Bezout solutions with first coordinate below 1
        ((BigInt::zero(), BigInt::one()), (BigInt::one(), BigInt::zero()))
    } else {
        parent_candidates(&p, &q)
    };
    for (ca, cb) in [plus, minus] {
        // q is odd, so the meridian parity along (ca + k*p, cb + k*q)
        // alternates with k; start at the first odd member past v and step 2.
        let mut k = if (&cb + &q).is_odd() {
            BigInt::one()
        } else {
            BigInt::from(2)
        };
        loop {
            let wa = &ca + &k * &p;
            if wa > bound_a {
                break;
            }
            let wb = &cb + &k * &q;
            let w = TreeVertex::from_reduced(wa, wb);
            debug_assert_eq!(
                intersection_number(&v.slope().to_slope(), &w.slope().to_slope()).abs(),
                BigInt::from(2)
            );
            out.insert(w);
            k += 2;
        }
    }
    out
}

/// Tree serialisation format.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TreeFormat {
    Dot,
    Json,
}

impl FromStr for TreeFormat {
    type Err = TreeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "dot" => Ok(TreeFormat::Dot),
            "json" => Ok(TreeFormat::Json),
            other => Err(TreeError::UnknownFormat {
                got: other.to_string(),
            }),
        }
    }
}

/// Breadth-first enumeration of the tree up to a longitude bound, with the
/// parent edge and depth of every vertex. Depth equals genus.
pub struct TreeSlice {
    /// Sorted by (longitude, meridian).
    pub vertices: Vec<TreeVertex>,
    /// Depth of `vertices[i]`.
    pub depths: Vec<u64>,
    /// `(parent_index, child_index)` pairs, sorted by child index.
    pub edges: Vec<(usize, usize)>,
}

pub fn enumerate_tree(longitude_bound: &BigInt) -> Result<TreeSlice, TreeError> {
    if *longitude_bound < BigInt::from(2) {
        return Err(TreeError::BoundTooSmall {
            bound: longitude_bound.clone(),
        });
    }
    if *longitude_bound > BigInt::from(MAX_ENUMERATION_BOUND) {
        return Err(TreeError::BoundTooLarge {
            bound: longitude_bound.clone(),
            cap: MAX_ENUMERATION_BOUND,
        });
    }
    let mut found: Vec<(TreeVertex, u64, Option<TreeVertex>)> = Vec::new();
    let mut frontier = vec![TreeVertex::root()];
    found.push((TreeVertex::root(), 0, None));
    let mut depth = 0u64;
    while !frontier.is_empty() {
        depth += 1;
        let mut next = Vec::new();
        for v in &frontier {
            for child in children(v, longitude_bound) {
                found.push((child.clone(), depth, Some(v.clone())));
                next.push(child);
            }
        }
        frontier = next;
    }
    found.sort_by(|x, y| x.0.cmp(&y.0));
    let vertices: Vec<TreeVertex> = found.iter().map(|(v, _, _)| v.clone()).collect();
    let depths: Vec<u64> = found.iter().map(|&(_, d, _)| d).collect();
    let index_of = |v: &TreeVertex| -> usize {
        vertices
            .binary_search(v)
            .expect("parent enumerated alongside child")
    };
    let mut edges: Vec<(usize, usize)> = found
        .iter()
        .enumerate()
        .filter_map(|(i, (_, _, p))| p.as_ref().map(|p| (index_of(p), i)))
        .collect();
    edges.sort_by_key(|&(_, child)| child);
    Ok(TreeSlice {
        vertices,
        depths,
        edges,
    })
}

/// Renders the tree up to `longitude_bound` as DOT or JSON.
///
/// DOT pins the base branch (the root and the `(2p,1)` vertices) onto one
/// rank so it renders as a line with the nested-band subtrees growing off it.
/// JSON is `{"vertices":[{"longitude":..,"meridian":..,"genus":..}],
/// "edges":[[parent_index,child_index],..]}` with vertices sorted by
/// (longitude, meridian).
pub fn export_tree(longitude_bound: &BigInt, format: TreeFormat) -> Result<String, TreeError> {
    let slice = enumerate_tree(longitude_bound)?;
    match format {
        TreeFormat::Dot => Ok(render_dot(&slice)),
        TreeFormat::Json => Ok(render_json(&slice)),
    }
}

fn render_dot(slice: &TreeSlice) -> String {
    use fmt::Write;
    let mut out = String::from("graph moebius_tree {\n");
    let base: Vec<String> = slice
        .vertices
        .iter()
        .filter(|v| v.meridian().is_one())
        .map(|v| format!("\"{v}\""))
        .collect();
    let _ = writeln!(out, "    {{ rank=same; {}; }}", base.join("; "));
    for &(p, c) in &slice.edges {
        let _ = writeln!(
            out,
            "    \"{}\" -- \"{}\";",
            slice.vertices[p], slice.vertices[c]
        );
    }
    out.push_str("}\n");
    out
}

fn render_json(slice: &TreeSlice) -> String {
    let vertices: Vec<serde_json::Value> = slice
        .vertices
        .iter()
        .zip(&slice.depths)
        .map(|(v, &d)| {
            json!({
                "longitude": v.longitude().to_u64().expect("bounded by the enumeration cap"),
                "meridian": v.meridian().to_u64().expect("meridian below longitude bound"),
                "genus": d,
            })
        })
        .collect();
    let edges: Vec<serde_json::Value> = slice
        .edges
        .iter()
        .map(|&(p, c)| json!([p, c]))
        .collect();
    json!({ "vertices": vertices, "edges": edges }).to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(x: i64) -> BigInt {
        BigInt::from(x)
    }

    fn qslope(l: i64, m: i64) -> QuadrantSlope {
        QuadrantSlope::new(l, m).unwrap()
    }

    fn vertex(l: i64, m: i64) -> TreeVertex {
        TreeVertex::from_coords(l, m).unwrap()
    }

    fn vertex_set(pairs: &[(i64, i64)]) -> BTreeSet<TreeVertex> {
        pairs.iter().map(|&(l, m)| vertex(l, m)).collect()
    }

    #[test]
    fn vertex_predicate() {
        assert!(is_vertex(&big(4), &big(1)));
        assert!(is_vertex(&big(0), &big(1)));
        assert!(is_vertex(&big(4), &big(5))); // static conditions hold even off the tree
        assert!(!is_vertex(&big(6), &big(2)));
        assert!(!is_vertex(&big(2), &big(3)));
        assert!(!is_vertex(&big(3), &big(1)));
        assert!(!is_vertex(&big(0), &big(3)));
        assert!(!is_vertex(&big(4), &big(-1)));
    }

    #[test]
    fn children_of_root_and_base() {
        assert_eq!(
            children(&TreeVertex::root(), &big(100)),
            vertex_set(&[(2, 1)])
        );
        assert!(children(&TreeVertex::root(), &big(1)).is_empty());
        assert_eq!(
            children(&vertex(2, 1), &big(8)),
            vertex_set(&[(4, 1), (4, 3), (8, 3), (8, 5)])
        );
    }

    #[test]
    fn children_of_41() {
        // both arithmetic families, including the base continuation (6,1)
        assert_eq!(
            children(&vertex(4, 1), &big(22)),
            vertex_set(&[(6, 1), (10, 3), (14, 3), (18, 5), (22, 5)])
        );
    }

    #[test]
    fn children_of_61() {
        assert_eq!(
            children(&vertex(6, 1), &big(28)),
            vertex_set(&[(8, 1), (16, 3), (20, 3), (28, 5)])
        );
    }

    #[test]
    fn parent_examples() {
        assert_eq!(parent(&vertex(10, 3)).unwrap(), vertex(4, 1));
        assert_eq!(parent(&vertex(2, 1)).unwrap(), TreeVertex::root());
        assert_eq!(parent(&vertex(20, 7)).unwrap(), vertex(14, 5));
        assert_eq!(
            parent(&TreeVertex::root()),
            Err(TreeError::RootHasNoParent)
        );
    }

    #[test]
    fn parent_of_detached_slope_fails_loudly() {
        // (4,5) is admissible but its only smaller det-2 neighbour is the
        // excluded (2,3)
        let err = parent(&vertex(4, 5)).unwrap_err();
        assert!(matches!(
            err,
            TreeError::ExcludedParent { ref excluded_meridian, .. }
                if *excluded_meridian == big(3)
        ));
        assert!(matches!(
            genus(&qslope(4, 5)),
            Err(TreeError::ExcludedParent { .. })
        ));
    }

    #[test]
    fn genus_examples() {
        assert_eq!(genus(&qslope(0, 1)).unwrap(), BigUint::from(0u32));
        assert_eq!(genus(&qslope(4, 1)).unwrap(), BigUint::from(2u32));
        assert_eq!(genus(&qslope(10, 3)).unwrap(), BigUint::from(3u32));
        assert_eq!(genus(&qslope(20, 7)).unwrap(), BigUint::from(4u32));
    }

    #[test]
    fn genus_rejects_non_vertices() {
        assert!(matches!(
            QuadrantSlope::new(6, 3),
            Err(SlopeError::NonPrimitive { .. })
        ));
        // (2,3) is a valid quadrant slope but an excluded tree vertex
        assert_eq!(
            genus(&qslope(2, 3)),
            Err(TreeError::NotAVertex {
                longitude: big(2),
                meridian: big(3)
            })
        );
    }

    #[test]
    fn genus_on_base_branch_is_half_longitude() {
        for p in [1i64, 2, 7, 100, 12345] {
            assert_eq!(
                genus(&qslope(2 * p, 1)).unwrap(),
                BigUint::from(p as u64)
            );
        }
        // run collapsing keeps this instant at depth far beyond enumeration
        let deep = QuadrantSlope::new(BigInt::from(2) * BigInt::from(10u64.pow(15)), 1).unwrap();
        assert_eq!(genus(&deep).unwrap(), BigUint::from(10u64.pow(15)));
    }

    #[test]
    fn path_examples() {
        let p = path_to_root(&qslope(10, 3)).unwrap();
        assert_eq!(
            p.vertices(),
            &[vertex(10, 3), vertex(4, 1), vertex(2, 1), TreeVertex::root()]
        );
        assert_eq!(p.genus(), 3);
        assert_eq!(p.to_string(), "(10,3) -> (4,1) -> (2,1) -> (0,1)");

        let root = path_to_root(&qslope(0, 1)).unwrap();
        assert_eq!(root.vertices(), &[TreeVertex::root()]);

        let p = path_to_root(&qslope(22, 7)).unwrap();
        assert_eq!(
            p.vertices(),
            &[
                vertex(22, 7),
                vertex(16, 5),
                vertex(10, 3),
                vertex(4, 1),
                vertex(2, 1),
                TreeVertex::root()
            ]
        );
    }

    #[test]
    fn path_pass_through_41() {
        assert!(!passes_through_41(&qslope(8, 3)).unwrap());
        assert!(passes_through_41(&qslope(10, 3)).unwrap());
        assert!(!passes_through_41(&qslope(2, 1)).unwrap());
        assert!(passes_through_41(&qslope(4, 1)).unwrap());
        assert!(passes_through_41(&qslope(22, 7)).unwrap());
        assert!(!ratio_exceeds_three(&qslope(8, 3)));
        assert!(ratio_exceeds_three(&qslope(10, 3)));
    }

    #[test]
    fn export_json_bound_6() {
        let text = export_tree(&big(6), TreeFormat::Json).unwrap();
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        let vertices: Vec<(u64, u64, u64)> = v["vertices"]
            .as_array()
            .unwrap()
            .iter()
            .map(|x| {
                (
                    x["longitude"].as_u64().unwrap(),
                    x["meridian"].as_u64().unwrap(),
                    x["genus"].as_u64().unwrap(),
                )
            })
            .collect();
        assert_eq!(
            vertices,
            vec![
                (0, 1, 0),
                (2, 1, 1),
                (4, 1, 2),
                (4, 3, 2),
                (6, 1, 3),
                (6, 5, 3)
            ]
        );
        let edges: Vec<(u64, u64)> = v["edges"]
            .as_array()
            .unwrap()
            .iter()
            .map(|e| (e[0].as_u64().unwrap(), e[1].as_u64().unwrap()))
            .collect();
        assert_eq!(edges, vec![(0, 1), (1, 2), (1, 3), (2, 4), (3, 5)]);
    }

    #[test]
    fn export_dot_bound_2() {
        let text = export_tree(&big(2), TreeFormat::Dot).unwrap();
        assert!(text.starts_with("graph moebius_tree {"));
        assert!(text.contains("\"(0,1)\" -- \"(2,1)\";"));
        assert_eq!(text.matches("--").count(), 1);
    }

    #[test]
    fn export_rejects_bad_bounds() {
        assert!(matches!(
            export_tree(&big(0), TreeFormat::Dot),
            Err(TreeError::BoundTooSmall { .. })
        ));
        assert!(matches!(
            export_tree(&BigInt::from(10u64.pow(9)), TreeFormat::Json),
            Err(TreeError::BoundTooLarge { .. })
        ));
    }

    #[test]
    fn format_parsing() {
        assert_eq!("dot".parse::<TreeFormat>().unwrap(), TreeFormat::Dot);
        assert_eq!("json".parse::<TreeFormat>().unwrap(), TreeFormat::Json);
        assert!(matches!(
            "xml".parse::<TreeFormat>(),
            Err(TreeError::UnknownFormat { .. })
        ));
    }
}
