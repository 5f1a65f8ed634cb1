//! Classification of geometrically incompressible one-sided splitting
//! surfaces of the `(2p,q)` Dehn fillings of figure-eight knot space.
//!
//! Figure-eight knot space carries exactly three incompressible,
//! boundary-incompressible spanning surfaces: the Seifert surface with
//! boundary `(0,1)` and the two Klein bottle spanning surfaces with
//! boundaries `(4,1)` and `(4,-1)` (knot-space coordinates, written meridian
//! coefficient first). Filling along `(2p,q)` closes each of them with the
//! unique incompressible one-sided surface in the filling torus that shares
//! its boundary slope; the non-orientable genus of the closed surface is the
//! knot part's contribution plus the tree genus of the torus-side slope.
//! Comparing the three genera classifies the candidate splitting surfaces:
//! exactly one is minimal when `|2p/q| > 3`, and exactly two tie when
//! `|2p/q| < 3`.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive};
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::slope::Slope;
use crate::tree::{self, TreeError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Fig8Error {
    #[error("invalid filling parameters (p={p}, q={q}): {reason}")]
    InvalidSpec {
        p: BigInt,
        q: BigInt,
        reason: String,
    },
    #[error(transparent)]
    Tree(#[from] TreeError),
    /// The tree-computed genera contradict the ratio verdict. This cannot
    /// happen if the classification theorem holds; it must surface rather
    /// than be papered over.
    #[error("internal inconsistency for filling (p={p}, q={q}): {detail}")]
    InternalInconsistency {
        p: BigInt,
        q: BigInt,
        detail: String,
    },
}

/// Validated parameters of an even Dehn filling: the filling slope is
/// `(2p, q)` in knot-space coordinates.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FillingSpec {
    p: BigInt,
    q: BigInt,
}

impl FillingSpec {
    pub fn new(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Result<Self, Fig8Error> {
        let p = p.into();
        let q = q.into();
        let reject = |reason: &str| {
            Err(Fig8Error::InvalidSpec {
                p: p.clone(),
                q: q.clone(),
                reason: reason.to_string(),
            })
        };
        if q.is_even() {
            return reject("q must be odd so the filling slope (2p,q) is primitive");
        }
        if !p.gcd(&q).is_one() {
            return reject("p and q must be coprime");
        }
        if p.abs() <= q.abs() {
            return reject("|p| must exceed |q|");
        }
        if p.abs() <= BigInt::from(2) {
            return reject("|p| must exceed 2");
        }
        Ok(FillingSpec { p, q })
    }

    pub fn p(&self) -> &BigInt {
        &self.p
    }

    pub fn q(&self) -> &BigInt {
        &self.q
    }

    /// The filling slope `(2p, q)` as written in knot-space coordinates.
    pub fn filling_slope(&self) -> Slope {
        Slope::new(2 * &self.p, self.q.clone()).expect("q odd makes (2p,q) primitive")
    }

    fn same_sign(&self) -> bool {
        self.p.sign() == self.q.sign()
    }

    /// Exact evaluation of `|2p/q| > 3` by cross multiplication.
    pub fn ratio_exceeds_three(&self) -> bool {
        2 * self.p.abs() > 3 * self.q.abs()
    }
}

impl fmt::Display for FillingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(p={}, q={})", self.p, self.q)
    }
}

impl fmt::Debug for FillingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FillingSpec(p={}, q={})", self.p, self.q)
    }
}

/// The determinant-1 change of coordinates between the filling torus and the
/// knot space, `[[b, 2p], [a, q]]`, with `(a,b)` the unique minimal-norm
/// solution of `b*q - 2*p*a = 1`.
#[derive(Clone, PartialEq, Eq)]
pub struct TransitionMatrix {
    p: BigInt,
    q: BigInt,
    a: BigInt,
    b: BigInt,
}

impl TransitionMatrix {
    pub fn for_filling(spec: &FillingSpec) -> Self {
        let two_p = 2 * &spec.p;
        // base solution of b*q - 2p*a = 1 via the extended gcd
        let eg = spec.q.extended_gcd(&two_p);
        debug_assert!(eg.gcd.is_one());
        let b0 = eg.x;
        let a0 = -eg.y;
        debug_assert!((&b0 * &spec.q - &two_p * &a0).is_one());
        // minimise |(a0 + k*q, b0 + k*2p)| over k; the real minimiser is
        // -(a0*q + 2p*b0) / (q^2 + 4p^2), and strict convexity leaves only
        // its two integer neighbours
        let num = -(&a0 * &spec.q + &two_p * &b0);
        let den = &spec.q * &spec.q + &two_p * &two_p;
        let k_lo = num.div_floor(&den);
        let k_hi = &k_lo + 1;
        let at = |k: &BigInt| -> (BigInt, BigInt) { (&a0 + k * &spec.q, &b0 + k * &two_p) };
        let norm2 = |c: &(BigInt, BigInt)| -> BigInt { &c.0 * &c.0 + &c.1 * &c.1 };
        let lo = at(&k_lo);
        let hi = at(&k_hi);
        let (a, b) = match norm2(&lo).cmp(&norm2(&hi)) {
            std::cmp::Ordering::Less => lo,
            std::cmp::Ordering::Greater => hi,
            // unreachable for odd q; break toward positive b regardless
            std::cmp::Ordering::Equal => {
                if lo.1.is_positive() {
                    lo
                } else {
                    hi
                }
            }
        };
        TransitionMatrix {
            p: spec.p.clone(),
            q: spec.q.clone(),
            a,
            b,
        }
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    /// Always 1 by construction.
    pub fn det(&self) -> BigInt {
        &self.b * &self.q - 2 * &self.p * &self.a
    }

    /// Applies the inverse matrix `[[q, -2p], [-a, b]]` to a knot-space pair
    /// (components in written order) and canonicalises the resulting torus
    /// slope.
    pub fn knot_to_torus(&self, knot: &Slope) -> Slope {
        let (x, y) = (knot.longitude(), knot.meridian());
        let l = &self.q * x - 2 * &self.p * y;
        let m = -&self.a * x + &self.b * y;
        Slope::new(l, m).expect("unimodular image of a primitive pair is primitive")
    }
}

impl fmt::Debug for TransitionMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "TransitionMatrix[[{}, {}], [{}, {}]]",
            self.b,
            2 * &self.p,
            self.a,
            self.q
        )
    }
}

/// The three spanning surfaces of figure-eight knot space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum SurfaceTag {
    #[serde(rename = "Seifert_01")]
    Seifert01,
    #[serde(rename = "Klein_41")]
    Klein41,
    #[serde(rename = "Klein_4m1")]
    Klein4m1,
}

/// Euler characteristic of each spanning surface (once-punctured torus or
/// once-punctured Klein bottle).
pub const KNOT_PART_EULER: i64 = -1;

impl SurfaceTag {
    pub const ALL: [SurfaceTag; 3] = [SurfaceTag::Seifert01, SurfaceTag::Klein41, SurfaceTag::Klein4m1];

    /// Boundary slope in knot-space coordinates, components in written order.
    pub fn knot_slope(&self) -> Slope {
        let (x, y) = match self {
            SurfaceTag::Seifert01 => (0, 1),
            SurfaceTag::Klein41 => (4, 1),
            SurfaceTag::Klein4m1 => (4, -1),
        };
        Slope::new(x, y).expect("spanning surface slopes are primitive")
    }

    pub fn name(&self) -> &'static str {
        match self {
            SurfaceTag::Seifert01 => "Seifert_01",
            SurfaceTag::Klein41 => "Klein_41",
            SurfaceTag::Klein4m1 => "Klein_4m1",
        }
    }
}

impl fmt::Display for SurfaceTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn crosscap_from_tree_genus(tree_genus: &BigUint) -> BigUint {
    // chi(closed surface) = chi(knot part) + chi(torus part)
    //                     = KNOT_PART_EULER + (1 - tree_genus)
    // crosscap genus      = 2 - chi
    let chi = BigInt::from(KNOT_PART_EULER) + (BigInt::one() - BigInt::from(tree_genus.clone()));
    (BigInt::from(2) - chi)
        .to_biguint()
        .expect("crosscap genus is positive")
}

/// Total crosscap genus of the closed splitting surface obtained by capping
/// the spanning surface off with the one-sided surface bounded by
/// `torus_slope` in the filling torus.
pub fn total_genus(surface: SurfaceTag, torus_slope: &Slope) -> Result<BigUint, Fig8Error> {
    let _ = surface; // every spanning surface contributes the same Euler term
    let projected = torus_slope.quadrant_project().map_err(TreeError::from)?;
    let g = tree::genus(&projected)?;
    Ok(crosscap_from_tree_genus(&g))
}

/// Boundary slopes of the surfaces reached from the `(0,1)`-filling surface
/// by a single band move toward `(4,1)` and `(4,-1)` respectively:
/// `(2q-2p, -2a+b)` and `(2q+2p, -2a-b)`, canonicalised.
pub fn intermediate_slopes(spec: &FillingSpec, m: &TransitionMatrix) -> (Slope, Slope) {
    let (p, q, a, b) = (&spec.p, &spec.q, &m.a, &m.b);
    let first = Slope::new(2 * q - 2 * p, -2 * a + b).expect("intermediate slopes are primitive");
    let second = Slope::new(2 * q + 2 * p, -2 * a - b).expect("intermediate slopes are primitive");
    (first, second)
}

/// Checks the exact longitude inequality chain that orders the five relevant
/// slopes in the quadrant projection. For `p, q` of the same sign the chain
/// is `|2q-2p| < |2p| < |2q+2p| < |4q+2p|`; for opposite signs the mirrored
/// chain `|2q+2p| < |2p| < |2q-2p| < |4q-2p|`. Compared on squares, so no
/// roundoff is involved.
pub fn genus_order_check(spec: &FillingSpec) -> bool {
    let (p, q) = (&spec.p, &spec.q);
    let sq = |x: BigInt| -> BigInt { &x * &x };
    let k01 = sq(2 * p);
    let int_minus = sq(2 * q - 2 * p);
    let int_plus = sq(2 * q + 2 * p);
    let k41 = sq(4 * q - 2 * p);
    let k4m1 = sq(4 * q + 2 * p);
    if spec.same_sign() {
        int_minus < k01 && k01 < int_plus && int_plus < k4m1
    } else {
        int_plus < k01 && k01 < int_minus && int_minus < k41
    }
}

/// One classified surface: its boundary data and genus on both sides of the
/// splitting torus.
#[derive(Clone, Debug)]
pub struct SurfaceReport {
    pub tag: SurfaceTag,
    pub knot_slope: Slope,
    pub torus_slope: Slope,
    pub torus_genus: BigUint,
    pub total_genus: BigUint,
    pub minimal: bool,
}

/// Classification outcome for one filling.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    /// `|2p/q| > 3`: a unique geometrically incompressible splitting surface.
    UniqueIncompressible(SurfaceTag),
    /// `|2p/q| < 3`: two minimal-genus candidates; whether they are isotopic
    /// is not decided here.
    TwoCandidates(SurfaceTag, SurfaceTag),
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::UniqueIncompressible(s) => {
                write!(f, "unique geometrically incompressible splitting: {s}")
            }
            Verdict::TwoCandidates(s, t) => {
                write!(f, "two minimal-genus candidates: {s}, {t}")
            }
        }
    }
}

/// Full per-filling report.
#[derive(Clone, Debug)]
pub struct FillingReport {
    pub p: BigInt,
    pub q: BigInt,
    pub a: BigInt,
    pub b: BigInt,
    pub surfaces: [SurfaceReport; 3],
    pub verdict: Verdict,
    /// Geometric compressions, higher genus surface first.
    pub compressions: Vec<(SurfaceTag, SurfaceTag)>,
    pub intermediates: (Slope, Slope),
}

fn bigint_json(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) => json!(v),
        None => json!(x.to_string()),
    }
}

fn biguint_json(x: &BigUint) -> Value {
    match x.to_u64() {
        Some(v) => json!(v),
        None => json!(x.to_string()),
    }
}

fn slope_json(s: &Slope) -> Value {
    json!([bigint_json(s.longitude()), bigint_json(s.meridian())])
}

impl FillingReport {
    pub fn to_json(&self) -> Value {
        json!({
            "p": bigint_json(&self.p),
            "q": bigint_json(&self.q),
            "a": bigint_json(&self.a),
            "b": bigint_json(&self.b),
            "surfaces": self.surfaces.iter().map(|s| json!({
                "tag": s.tag.name(),
                "knot_slope": slope_json(&s.knot_slope),
                "torus_slope": slope_json(&s.torus_slope),
                "torus_genus": biguint_json(&s.torus_genus),
                "total_genus": biguint_json(&s.total_genus),
                "minimal": s.minimal,
            })).collect::<Vec<_>>(),
            "verdict": serde_json::to_value(&self.verdict).expect("verdict serialises"),
            "compressions": self.compressions.iter()
                .map(|(from, to)| json!([from.name(), to.name()]))
                .collect::<Vec<_>>(),
            "intermediates": [slope_json(&self.intermediates.0), slope_json(&self.intermediates.1)],
        })
    }
}

impl fmt::Display for FillingReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "filling (2p,q) = ({},{}) of figure-eight knot space  [p={}, q={}]",
            2 * &self.p,
            self.q,
            self.p,
            self.q
        )?;
        writeln!(
            f,
            "transition matrix [[b,2p],[a,q]] = [[{},{}],[{},{}]]",
            self.b,
            2 * &self.p,
            self.a,
            self.q
        )?;
        writeln!(
            f,
            "{:<12} {:>12} {:>14} {:>12} {:>14} {:>8}",
            "surface", "knot slope", "torus slope", "tree genus", "crosscap genus", "minimal"
        )?;
        for s in &self.surfaces {
            writeln!(
                f,
                "{:<12} {:>12} {:>14} {:>12} {:>14} {:>8}",
                s.tag.name(),
                s.knot_slope.to_string(),
                s.torus_slope.to_string(),
                s.torus_genus.to_string(),
                s.total_genus.to_string(),
                if s.minimal { "yes" } else { "no" }
            )?;
        }
        writeln!(
            f,
            "intermediates: {} and {}",
            self.intermediates.0, self.intermediates.1
        )?;
        for (from, to) in &self.compressions {
            writeln!(f, "compression: {from} -> {to}")?;
        }
        write!(f, "verdict: {}", self.verdict)
    }
}

/// Classifies the geometrically incompressible one-sided splitting surfaces
/// of the `(2p,q)` filling: converts the three spanning-surface boundaries to
/// torus coordinates, reads their genera off the tree, and cross-checks the
/// genus comparison against the exact ratio dichotomy. A disagreement is an
/// error, never a silent override.
pub fn classify(spec: &FillingSpec) -> Result<FillingReport, Fig8Error> {
    let inconsistent = |detail: String| Fig8Error::InternalInconsistency {
        p: spec.p.clone(),
        q: spec.q.clone(),
        detail,
    };
    let matrix = TransitionMatrix::for_filling(spec);
    debug_assert!(matrix.det().is_one());

    let mut surfaces = Vec::with_capacity(3);
    for tag in SurfaceTag::ALL {
        let knot_slope = tag.knot_slope();
        let torus_slope = matrix.knot_to_torus(&knot_slope);
        let projected = torus_slope
            .quadrant_project()
            .map_err(|e| inconsistent(format!("torus slope {torus_slope} rejected: {e}")))?;
        let torus_genus = tree::genus(&projected)
            .map_err(|e| inconsistent(format!("torus slope {torus_slope} has no tree genus: {e}")))?;
        let total_genus = crosscap_from_tree_genus(&torus_genus);
        surfaces.push(SurfaceReport {
            tag,
            knot_slope,
            torus_slope,
            torus_genus,
            total_genus,
            minimal: false,
        });
    }
    let mut surfaces: [SurfaceReport; 3] = surfaces.try_into().expect("three surfaces");

    let near = if spec.same_sign() {
        SurfaceTag::Klein41
    } else {
        SurfaceTag::Klein4m1
    };
    let far = if near == SurfaceTag::Klein41 {
        SurfaceTag::Klein4m1
    } else {
        SurfaceTag::Klein41
    };
    let ratio_verdict_unique = spec.ratio_exceeds_three();

    // tree-side: flag the surfaces of minimal total genus
    let min_total = surfaces
        .iter()
        .map(|s| s.total_genus.clone())
        .min()
        .expect("non-empty");
    for s in &mut surfaces {
        s.minimal = s.total_genus == min_total;
    }
    let minimal_tags: Vec<SurfaceTag> = surfaces
        .iter()
        .filter(|s| s.minimal)
        .map(|s| s.tag)
        .collect();

    // ratio-side expectation
    let expected_tags: Vec<SurfaceTag> = if ratio_verdict_unique {
        vec![near]
    } else {
        vec![SurfaceTag::Seifert01, near]
    };
    if minimal_tags != expected_tags {
        return Err(inconsistent(format!(
            "minimal-genus surfaces {minimal_tags:?} contradict the ratio verdict {expected_tags:?}"
        )));
    }

    // structural spacing of the genera around the (0,1) surface
    let g = |tag: SurfaceTag| -> &BigUint {
        &surfaces
            .iter()
            .find(|s| s.tag == tag)
            .expect("all tags present")
            .total_genus
    };
    let g0 = g(SurfaceTag::Seifert01).clone();
    let spacing_ok = if ratio_verdict_unique {
        g(near) + 2u32 == g0 && *g(far) == (&g0 + 2u32)
    } else {
        *g(near) == g0 && *g(far) == (&g0 + 2u32)
    };
    if !spacing_ok {
        return Err(inconsistent(format!(
            "genus spacing around the (0,1) surface is off: totals {:?}",
            surfaces
                .iter()
                .map(|s| s.total_genus.to_string())
                .collect::<Vec<_>>()
        )));
    }

    let verdict = if ratio_verdict_unique {
        Verdict::UniqueIncompressible(near)
    } else {
        Verdict::TwoCandidates(SurfaceTag::Seifert01, near)
    };
    let mut compressions = vec![(far, SurfaceTag::Seifert01)];
    if ratio_verdict_unique {
        compressions.push((SurfaceTag::Seifert01, near));
    }

    Ok(FillingReport {
        p: spec.p.clone(),
        q: spec.q.clone(),
        a: matrix.a.clone(),
        b: matrix.b.clone(),
        surfaces,
        verdict,
        compressions,
        intermediates: intermediate_slopes(spec, &matrix),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(p: i64, q: i64) -> FillingSpec {
        FillingSpec::new(p, q).unwrap()
    }

    fn slope(l: i64, m: i64) -> Slope {
        Slope::new(l, m).unwrap()
    }

    #[test]
    fn spec_validation() {
        assert!(FillingSpec::new(4, 3).is_ok());
        assert!(FillingSpec::new(-5, 3).is_ok());
        assert!(matches!(
            FillingSpec::new(4, 2),
            Err(Fig8Error::InvalidSpec { .. })
        ));
        assert!(matches!(
            FillingSpec::new(6, 3),
            Err(Fig8Error::InvalidSpec { .. })
        ));
        assert!(matches!(
            FillingSpec::new(3, 5),
            Err(Fig8Error::InvalidSpec { .. })
        ));
        assert!(matches!(
            FillingSpec::new(2, 1),
            Err(Fig8Error::InvalidSpec { .. })
        ));
    }

    #[test]
    fn matrix_for_8_3() {
        let m = TransitionMatrix::for_filling(&spec(4, 3));
        assert_eq!(m.a(), &BigInt::from(1));
        assert_eq!(m.b(), &BigInt::from(3));
        assert!(m.det().is_one());
    }

    #[test]
    fn matrix_for_10_3() {
        let m = TransitionMatrix::for_filling(&spec(5, 3));
        assert_eq!(m.a(), &BigInt::from(-1));
        assert_eq!(m.b(), &BigInt::from(-3));
        assert!(m.det().is_one());
    }

    #[test]
    fn conversions_for_8_3() {
        let m = TransitionMatrix::for_filling(&spec(4, 3));
        assert_eq!(m.knot_to_torus(&slope(0, 1)), slope(-8, 3));
        assert_eq!(m.knot_to_torus(&slope(4, 1)), slope(4, -1));
        assert_eq!(m.knot_to_torus(&slope(4, -1)), slope(20, -7));
    }

    #[test]
    fn total_genus_examples() {
        assert_eq!(
            total_genus(SurfaceTag::Seifert01, &slope(-8, 3)).unwrap(),
            BigUint::from(4u32)
        );
        assert_eq!(
            total_genus(SurfaceTag::Klein4m1, &slope(20, -7)).unwrap(),
            BigUint::from(6u32)
        );
        assert_eq!(
            total_genus(SurfaceTag::Klein41, &slope(2, 1)).unwrap(),
            BigUint::from(3u32)
        );
    }

    #[test]
    fn intermediates_for_8_3() {
        let s = spec(4, 3);
        let m = TransitionMatrix::for_filling(&s);
        let (first, second) = intermediate_slopes(&s, &m);
        assert_eq!(first, slope(-2, 1));
        assert_eq!(second, slope(14, -5));
        // one band short of the (0,1) surface's genus
        assert_eq!(
            tree::genus(&first.quadrant_project().unwrap()).unwrap(),
            BigUint::from(1u32)
        );
    }

    #[test]
    fn genus_order_examples() {
        assert!(genus_order_check(&spec(4, 3)));
        assert!(genus_order_check(&spec(5, 3)));
        assert!(genus_order_check(&spec(5, -3)));
        assert!(genus_order_check(&spec(-5, 3)));
        assert!(genus_order_check(&spec(-5, -3)));
    }

    #[test]
    fn classify_8_3() {
        let r = classify(&spec(4, 3)).unwrap();
        let totals: Vec<u32> = r
            .surfaces
            .iter()
            .map(|s| s.total_genus.to_u32_digits()[0])
            .collect();
        assert_eq!(totals, vec![4, 4, 6]);
        assert_eq!(
            r.verdict,
            Verdict::TwoCandidates(SurfaceTag::Seifert01, SurfaceTag::Klein41)
        );
        assert_eq!(
            r.compressions,
            vec![(SurfaceTag::Klein4m1, SurfaceTag::Seifert01)]
        );
        let minimal: Vec<SurfaceTag> = r
            .surfaces
            .iter()
            .filter(|s| s.minimal)
            .map(|s| s.tag)
            .collect();
        assert_eq!(minimal, vec![SurfaceTag::Seifert01, SurfaceTag::Klein41]);
    }

    #[test]
    fn classify_10_3() {
        let r = classify(&spec(5, 3)).unwrap();
        let torus: Vec<Slope> = r.surfaces.iter().map(|s| s.torus_slope.clone()).collect();
        assert_eq!(torus, vec![slope(10, 3), slope(2, 1), slope(22, 7)]);
        let totals: Vec<u32> = r
            .surfaces
            .iter()
            .map(|s| s.total_genus.to_u32_digits()[0])
            .collect();
        assert_eq!(totals, vec![5, 3, 7]);
        assert_eq!(
            r.verdict,
            Verdict::UniqueIncompressible(SurfaceTag::Klein41)
        );
        assert_eq!(
            r.compressions,
            vec![
                (SurfaceTag::Klein4m1, SurfaceTag::Seifert01),
                (SurfaceTag::Seifert01, SurfaceTag::Klein41)
            ]
        );
    }

    #[test]
    fn classify_10_m3_mirrors() {
        let r = classify(&spec(5, -3)).unwrap();
        assert_eq!(
            r.verdict,
            Verdict::UniqueIncompressible(SurfaceTag::Klein4m1)
        );
        assert_eq!(
            r.compressions,
            vec![
                (SurfaceTag::Klein41, SurfaceTag::Seifert01),
                (SurfaceTag::Seifert01, SurfaceTag::Klein4m1)
            ]
        );
    }

    #[test]
    fn report_json_schema() {
        let r = classify(&spec(4, 3)).unwrap();
        let v = r.to_json();
        assert_eq!(v["p"], json!(4));
        assert_eq!(v["q"], json!(3));
        assert_eq!(v["a"], json!(1));
        assert_eq!(v["b"], json!(3));
        assert_eq!(v["surfaces"][0]["tag"], json!("Seifert_01"));
        assert_eq!(v["surfaces"][0]["torus_slope"], json!([8, -3]));
        assert_eq!(v["surfaces"][0]["total_genus"], json!(4));
        assert_eq!(v["surfaces"][0]["minimal"], json!(true));
        assert_eq!(v["surfaces"][2]["minimal"], json!(false));
        assert_eq!(
            v["verdict"],
            json!({"TwoCandidates": ["Seifert_01", "Klein_41"]})
        );
        assert_eq!(v["compressions"], json!([["Klein_4m1", "Seifert_01"]]));
        assert_eq!(v["intermediates"], json!([[2, -1], [14, -5]]));
    }

    #[test]
    fn negated_parameters_agree() {
        let r1 = classify(&spec(4, 3)).unwrap();
        let r2 = classify(&spec(-4, -3)).unwrap();
        assert_eq!(r1.verdict, r2.verdict);
        for (s1, s2) in r1.surfaces.iter().zip(&r2.surfaces) {
            assert_eq!(s1.torus_slope, s2.torus_slope);
            assert_eq!(s1.total_genus, s2.total_genus);
        }
    }
}
