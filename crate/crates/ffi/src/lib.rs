//! C ABI over the mbtree library.
//!
//! Conventions: every fallible function returns an [`MbtStatus`] and writes
//! its result through out-pointers; classification results are held behind
//! the opaque [`MbtReport`] handle with accessor functions. Coefficients
//! cross the boundary as `int64_t` (the Rust core is arbitrary precision;
//! queries needing more than 64 bits should use the Rust API directly).
//! Strings returned through `char**` are NUL-terminated, UTF-8, and must be
//! released with [`mbtree_string_free`]; reports with [`mbtree_report_free`].

use std::ffi::{c_char, CString};
use std::ptr;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use mbtree::fig8::{classify, FillingReport, FillingSpec, Fig8Error, Verdict};
use mbtree::slope::{intersection_number, Slope, SlopeError};
use mbtree::tree::{self, TreeError, TreeFormat, TreeVertex};

/// Result codes for every fallible entry point.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MbtStatus {
    Ok = 0,
    /// A required pointer argument was NULL.
    NullArgument = 1,
    /// (0,0) names no curve.
    ZeroCurve = 2,
    /// The coefficients have a common factor.
    NonPrimitive = 3,
    /// The curve bounds no one-sided surface (odd longitude).
    NotOneSided = 4,
    /// The slope is not a vertex of the tree.
    NotAVertex = 5,
    /// The root (0,1) has no parent.
    RootHasNoParent = 6,
    /// Two parent candidates qualified; the structural uniqueness claim
    /// failed and the operation refused to choose.
    AmbiguousParent = 7,
    /// The slope's compression chain leaves the tree through an excluded
    /// (2,b) slope; it is twist-equivalent to a tree slope.
    DetachedSlope = 8,
    /// Enumeration bound below 2.
    BoundTooSmall = 9,
    /// Enumeration bound above the supported cap.
    BoundTooLarge = 10,
    /// Invalid Dehn filling parameters.
    InvalidSpec = 11,
    /// Tree-computed genera contradicted the ratio verdict.
    Inconsistent = 12,
    /// A result does not fit the 64-bit out-parameter.
    Overflow = 13,
}

fn status_of_slope_error(e: &SlopeError) -> MbtStatus {
    match e {
        SlopeError::ZeroCurve => MbtStatus::ZeroCurve,
        SlopeError::NonPrimitive { .. } => MbtStatus::NonPrimitive,
        SlopeError::NotOneSidedSlope { .. } => MbtStatus::NotOneSided,
    }
}

fn status_of_tree_error(e: &TreeError) -> MbtStatus {
    match e {
        TreeError::Slope(inner) => status_of_slope_error(inner),
        TreeError::NotAVertex { .. } => MbtStatus::NotAVertex,
        TreeError::RootHasNoParent => MbtStatus::RootHasNoParent,
        TreeError::AmbiguousParent { .. } => MbtStatus::AmbiguousParent,
        TreeError::ExcludedParent { .. } => MbtStatus::DetachedSlope,
        TreeError::BoundTooSmall { .. } => MbtStatus::BoundTooSmall,
        TreeError::BoundTooLarge { .. } => MbtStatus::BoundTooLarge,
        TreeError::UnknownFormat { .. } => MbtStatus::InvalidSpec,
    }
}

fn status_of_fig8_error(e: &Fig8Error) -> MbtStatus {
    match e {
        Fig8Error::InvalidSpec { .. } => MbtStatus::InvalidSpec,
        Fig8Error::Tree(inner) => status_of_tree_error(inner),
        Fig8Error::InternalInconsistency { .. } => MbtStatus::Inconsistent,
    }
}

/// Tree serialisation formats accepted by [`mbtree_tree_export`].
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MbtTreeFormat {
    Dot = 0,
    Json = 1,
}

/// Opaque classification result; create with [`mbtree_classify`], inspect
/// with the `mbtree_report_*` accessors, release with [`mbtree_report_free`].
pub struct MbtReport {
    inner: FillingReport,
}

fn emit_string(s: String, out: *mut *mut c_char) -> MbtStatus {
    match CString::new(s) {
        Ok(c) => {
            unsafe { *out = c.into_raw() };
            MbtStatus::Ok
        }
        Err(_) => MbtStatus::Overflow,
    }
}

/// Library version as a static NUL-terminated string; do not free.
#[no_mangle]
pub extern "C" fn mbtree_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Genus of the one-sided surface bounded by `(longitude, meridian)`.
///
/// # Safety
/// `out_genus` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn mbtree_genus(
    longitude: i64,
    meridian: i64,
    out_genus: *mut u64,
) -> MbtStatus {
    if out_genus.is_null() {
        return MbtStatus::NullArgument;
    }
    let projected = match Slope::new(longitude, meridian).and_then(|s| s.quadrant_project()) {
        Ok(p) => p,
        Err(e) => return status_of_slope_error(&e),
    };
    match tree::genus(&projected) {
        Ok(g) => match g.to_u64() {
            Some(v) => {
                *out_genus = v;
                MbtStatus::Ok
            }
            None => MbtStatus::Overflow,
        },
        Err(e) => status_of_tree_error(&e),
    }
}

/// Parent vertex in the tree: the unique smaller-longitude slope at
/// intersection number 2.
///
/// # Safety
/// `out_longitude` and `out_meridian` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn mbtree_parent(
    longitude: i64,
    meridian: i64,
    out_longitude: *mut i64,
    out_meridian: *mut i64,
) -> MbtStatus {
    if out_longitude.is_null() || out_meridian.is_null() {
        return MbtStatus::NullArgument;
    }
    let vertex = match TreeVertex::from_coords(longitude, meridian) {
        Ok(v) => v,
        Err(e) => return status_of_tree_error(&e),
    };
    match tree::parent(&vertex) {
        Ok(p) => match (p.longitude().to_i64(), p.meridian().to_i64()) {
            (Some(l), Some(m)) => {
                *out_longitude = l;
                *out_meridian = m;
                MbtStatus::Ok
            }
            _ => MbtStatus::Overflow,
        },
        Err(e) => status_of_tree_error(&e),
    }
}

/// Signed intersection number of the canonical representatives of two slopes.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn mbtree_intersection_number(
    u_longitude: i64,
    u_meridian: i64,
    v_longitude: i64,
    v_meridian: i64,
    out: *mut i64,
) -> MbtStatus {
    if out.is_null() {
        return MbtStatus::NullArgument;
    }
    let u = match Slope::new(u_longitude, u_meridian) {
        Ok(s) => s,
        Err(e) => return status_of_slope_error(&e),
    };
    let v = match Slope::new(v_longitude, v_meridian) {
        Ok(s) => s,
        Err(e) => return status_of_slope_error(&e),
    };
    match intersection_number(&u, &v).to_i64() {
        Some(d) => {
            *out = d;
            MbtStatus::Ok
        }
        None => MbtStatus::Overflow,
    }
}

/// Whether the root path of the slope passes through the vertex (4,1);
/// equivalently, whether longitude exceeds three times the meridian.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn mbtree_passes_through_41(
    longitude: i64,
    meridian: i64,
    out: *mut bool,
) -> MbtStatus {
    if out.is_null() {
        return MbtStatus::NullArgument;
    }
    let projected = match Slope::new(longitude, meridian).and_then(|s| s.quadrant_project()) {
        Ok(p) => p,
        Err(e) => return status_of_slope_error(&e),
    };
    match tree::passes_through_41(&projected) {
        Ok(v) => {
            *out = v;
            MbtStatus::Ok
        }
        Err(e) => status_of_tree_error(&e),
    }
}

/// Serialises the tree up to `longitude_bound` in the requested format. The
/// string must be released with [`mbtree_string_free`].
///
/// # Safety
/// `out_text` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn mbtree_tree_export(
    longitude_bound: u64,
    format: MbtTreeFormat,
    out_text: *mut *mut c_char,
) -> MbtStatus {
    if out_text.is_null() {
        return MbtStatus::NullArgument;
    }
    let format = match format {
        MbtTreeFormat::Dot => TreeFormat::Dot,
        MbtTreeFormat::Json => TreeFormat::Json,
    };
    match tree::export_tree(&BigInt::from(longitude_bound), format) {
        Ok(text) => emit_string(text, out_text),
        Err(e) => status_of_tree_error(&e),
    }
}

/// Classifies the splitting surfaces of the `(2p, q)` Dehn filling and hands
/// back an opaque report.
///
/// # Safety
/// `out_report` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn mbtree_classify(
    p: i64,
    q: i64,
    out_report: *mut *mut MbtReport,
) -> MbtStatus {
    if out_report.is_null() {
        return MbtStatus::NullArgument;
    }
    *out_report = ptr::null_mut();
    let spec = match FillingSpec::new(p, q) {
        Ok(s) => s,
        Err(e) => return status_of_fig8_error(&e),
    };
    match classify(&spec) {
        Ok(inner) => {
            *out_report = Box::into_raw(Box::new(MbtReport { inner }));
            MbtStatus::Ok
        }
        Err(e) => status_of_fig8_error(&e),
    }
}

/// Number of surfaces in a report; always 3 for valid reports.
///
/// # Safety
/// `report` must be a pointer returned by [`mbtree_classify`].
#[no_mangle]
pub unsafe extern "C" fn mbtree_report_surface_count(report: *const MbtReport) -> usize {
    if report.is_null() {
        return 0;
    }
    (*report).inner.surfaces.len()
}

/// Total crosscap genus of surface `index` (0 = the Seifert-slope surface,
/// 1 and 2 the two Klein-bottle-slope surfaces).
///
/// # Safety
/// `report` must come from [`mbtree_classify`]; `out_genus` must be valid.
#[no_mangle]
pub unsafe extern "C" fn mbtree_report_total_genus(
    report: *const MbtReport,
    index: usize,
    out_genus: *mut u64,
) -> MbtStatus {
    if report.is_null() || out_genus.is_null() {
        return MbtStatus::NullArgument;
    }
    let surfaces = &(*report).inner.surfaces;
    let Some(surface) = surfaces.get(index) else {
        return MbtStatus::InvalidSpec;
    };
    match surface.total_genus.to_u64() {
        Some(g) => {
            *out_genus = g;
            MbtStatus::Ok
        }
        None => MbtStatus::Overflow,
    }
}

/// Whether surface `index` is flagged minimal genus.
///
/// # Safety
/// `report` must come from [`mbtree_classify`]; `out_minimal` must be valid.
#[no_mangle]
pub unsafe extern "C" fn mbtree_report_is_minimal(
    report: *const MbtReport,
    index: usize,
    out_minimal: *mut bool,
) -> MbtStatus {
    if report.is_null() || out_minimal.is_null() {
        return MbtStatus::NullArgument;
    }
    let surfaces = &(*report).inner.surfaces;
    let Some(surface) = surfaces.get(index) else {
        return MbtStatus::InvalidSpec;
    };
    *out_minimal = surface.minimal;
    MbtStatus::Ok
}

/// True when the filling has a unique geometrically incompressible splitting
/// surface, false for the two-candidate case.
///
/// # Safety
/// `report` must come from [`mbtree_classify`]; `out_unique` must be valid.
#[no_mangle]
pub unsafe extern "C" fn mbtree_report_verdict_unique(
    report: *const MbtReport,
    out_unique: *mut bool,
) -> MbtStatus {
    if report.is_null() || out_unique.is_null() {
        return MbtStatus::NullArgument;
    }
    *out_unique = matches!((*report).inner.verdict, Verdict::UniqueIncompressible(_));
    MbtStatus::Ok
}

/// Full report as a JSON document; release with [`mbtree_string_free`].
///
/// # Safety
/// `report` must come from [`mbtree_classify`]; `out_json` must be valid.
#[no_mangle]
pub unsafe extern "C" fn mbtree_report_json(
    report: *const MbtReport,
    out_json: *mut *mut c_char,
) -> MbtStatus {
    if report.is_null() || out_json.is_null() {
        return MbtStatus::NullArgument;
    }
    emit_string((*report).inner.to_json().to_string(), out_json)
}

/// Releases a report returned by [`mbtree_classify`]. NULL is a no-op.
///
/// # Safety
/// `report` must come from [`mbtree_classify`] and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn mbtree_report_free(report: *mut MbtReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}

/// Releases a string returned by this library. NULL is a no-op.
///
/// # Safety
/// `s` must have been returned by an `mbtree_*` function and not freed yet.
#[no_mangle]
pub unsafe extern "C" fn mbtree_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::ffi::CStr;

    #[test]
    fn genus_roundtrip() {
        let mut g = 0u64;
        assert_eq!(unsafe { mbtree_genus(10, 3, &mut g) }, MbtStatus::Ok);
        assert_eq!(g, 3);
        assert_eq!(unsafe { mbtree_genus(20, -7, &mut g) }, MbtStatus::Ok);
        assert_eq!(g, 4);
    }

    #[test]
    fn genus_error_codes() {
        let mut g = 0u64;
        assert_eq!(
            unsafe { mbtree_genus(6, 2, &mut g) },
            MbtStatus::NonPrimitive
        );
        assert_eq!(
            unsafe { mbtree_genus(3, 1, &mut g) },
            MbtStatus::NotOneSided
        );
        assert_eq!(
            unsafe { mbtree_genus(4, 5, &mut g) },
            MbtStatus::DetachedSlope
        );
        assert_eq!(
            unsafe { mbtree_genus(0, 0, &mut g) },
            MbtStatus::ZeroCurve
        );
        assert_eq!(
            unsafe { mbtree_genus(10, 3, std::ptr::null_mut()) },
            MbtStatus::NullArgument
        );
    }

    #[test]
    fn parent_roundtrip() {
        let (mut l, mut m) = (0i64, 0i64);
        assert_eq!(
            unsafe { mbtree_parent(20, 7, &mut l, &mut m) },
            MbtStatus::Ok
        );
        assert_eq!((l, m), (14, 5));
        assert_eq!(
            unsafe { mbtree_parent(0, 1, &mut l, &mut m) },
            MbtStatus::RootHasNoParent
        );
    }

    #[test]
    fn intersection_roundtrip() {
        let mut d = 0i64;
        assert_eq!(
            unsafe { mbtree_intersection_number(4, 1, 10, 3, &mut d) },
            MbtStatus::Ok
        );
        assert_eq!(d, 2);
    }

    #[test]
    fn ratio_predicate() {
        let mut hit = false;
        assert_eq!(
            unsafe { mbtree_passes_through_41(10, 3, &mut hit) },
            MbtStatus::Ok
        );
        assert!(hit);
        assert_eq!(
            unsafe { mbtree_passes_through_41(8, 3, &mut hit) },
            MbtStatus::Ok
        );
        assert!(!hit);
    }

    #[test]
    fn tree_export_and_free() {
        let mut text: *mut c_char = std::ptr::null_mut();
        assert_eq!(
            unsafe { mbtree_tree_export(6, MbtTreeFormat::Json, &mut text) },
            MbtStatus::Ok
        );
        let json = unsafe { CStr::from_ptr(text) }.to_str().unwrap();
        let v: serde_json::Value = serde_json::from_str(json).unwrap();
        assert_eq!(v["vertices"].as_array().unwrap().len(), 6);
        unsafe { mbtree_string_free(text) };

        assert_eq!(
            unsafe { mbtree_tree_export(0, MbtTreeFormat::Dot, &mut text) },
            MbtStatus::BoundTooSmall
        );
    }

    #[test]
    fn classify_handle_lifecycle() {
        let mut report: *mut MbtReport = std::ptr::null_mut();
        assert_eq!(unsafe { mbtree_classify(4, 3, &mut report) }, MbtStatus::Ok);
        assert!(!report.is_null());

        assert_eq!(unsafe { mbtree_report_surface_count(report) }, 3);
        let mut unique = true;
        assert_eq!(
            unsafe { mbtree_report_verdict_unique(report, &mut unique) },
            MbtStatus::Ok
        );
        assert!(!unique);
        let mut genus = 0u64;
        let expected = [4u64, 4, 6];
        for (i, want) in expected.iter().enumerate() {
            assert_eq!(
                unsafe { mbtree_report_total_genus(report, i, &mut genus) },
                MbtStatus::Ok
            );
            assert_eq!(genus, *want);
        }
        let mut json: *mut c_char = std::ptr::null_mut();
        assert_eq!(
            unsafe { mbtree_report_json(report, &mut json) },
            MbtStatus::Ok
        );
        let text = unsafe { CStr::from_ptr(json) }.to_str().unwrap();
        assert!(text.contains("\"TwoCandidates\""));
        unsafe { mbtree_string_free(json) };
        unsafe { mbtree_report_free(report) };

        assert_eq!(
            unsafe { mbtree_classify(4, 2, &mut report) },
            MbtStatus::InvalidSpec
        );
        assert!(report.is_null());
    }

    #[test]
    fn version_is_static() {
        let v = unsafe { CStr::from_ptr(mbtree_version()) }.to_str().unwrap();
        assert_eq!(v, env!("CARGO_PKG_VERSION"));
    }
}
