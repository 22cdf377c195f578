//! The abstract commutator-parameter layer: the linear system the Jacobi
//! identity imposes on `[X,Z]` once `[X,Y]` = uX + vY + cI and
//! `[Y,Z]` = wY + zZ + dI are fixed, its classification into the thirteen
//! commutator-algebra types, and the affine solution families in (m, n, p, e).
//!
//! Classification is discontinuous, so every zero or equality test runs at a
//! declared tolerance; inputs inside the ambiguity band `[tol, 10 tol)` of a
//! boundary raise an error naming both candidate cases instead of guessing.

use crate::error::{Error, Result};
use crate::scalar::CScalar;
use num_complex::Complex64;
use serde_json::{json, Value};
use std::collections::BTreeMap;

/// Default classification tolerance.
pub const DEFAULT_TOL: f64 = 1e-9;

/// Width of the ambiguity band as a multiple of the tolerance.
const BAND: f64 = 10.0;

/// Parameters of a single commutator `[X,Y]` = uX + vY + cI.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PairParams {
    pub u: CScalar,
    pub v: CScalar,
    pub c: CScalar,
}

/// The ten commutator parameters of a three-factor problem:
/// `[X,Y]` = uX + vY + cI, `[Y,Z]` = wY + zZ + dI, `[X,Z]` = mX + nY + pZ + eI.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct TripleParams {
    pub u: CScalar,
    pub v: CScalar,
    pub c: CScalar,
    pub w: CScalar,
    pub z: CScalar,
    pub d: CScalar,
    pub m: CScalar,
    pub n: CScalar,
    pub p: CScalar,
    pub e: CScalar,
}

/// The four parameters of `[X,Z]` as an array in (m, n, p, e) order.
pub type XzVector = [CScalar; 4];

pub const XZ_NAMES: [&str; 4] = ["m", "n", "p", "e"];

impl TripleParams {
    pub fn all(&self) -> [(&'static str, CScalar); 10] {
        [
            ("u", self.u),
            ("v", self.v),
            ("c", self.c),
            ("w", self.w),
            ("z", self.z),
            ("d", self.d),
            ("m", self.m),
            ("n", self.n),
            ("p", self.p),
            ("e", self.e),
        ]
    }

    pub fn is_finite(&self) -> bool {
        self.all().iter().all(|(_, z)| z.re.is_finite() && z.im.is_finite())
    }

    pub fn with_xz(&self, xz: XzVector) -> TripleParams {
        TripleParams {
            m: xz[0],
            n: xz[1],
            p: xz[2],
            e: xz[3],
            ..*self
        }
    }

    /// Documented JSON shape: every parameter as a `[re, im]` pair.
    pub fn to_json(&self) -> Value {
        let mut map = serde_json::Map::new();
        for (name, z) in self.all() {
            map.insert(name.to_string(), json!([z.re, z.im]));
        }
        Value::Object(map)
    }
}

/// The four residuals of the Jacobi linear system, in order:
/// uw + mz, vm - wp + n(z-u), pu + zv, c(w+m) + e(z-u) - d(p+v).
pub fn jacobi_residuals(t: &TripleParams) -> [CScalar; 4] {
    [
        t.u * t.w + t.m * t.z,
        t.v * t.m - t.w * t.p + t.n * (t.z - t.u),
        t.p * t.u + t.z * t.v,
        t.c * (t.w + t.m) + t.e * (t.z - t.u) - t.d * (t.p + t.v),
    ]
}

/// Check the Jacobi system at an absolute tolerance scaled by
/// max(1, max-parameter-magnitude squared), since the residuals are
/// quadratic in the parameters. Returns (pass, residual magnitudes).
pub fn check_jacobi(t: &TripleParams, tol: f64) -> Result<(bool, [f64; 4])> {
    if !t.is_finite() {
        return Err(Error::NonFiniteInput("triple parameters".into()));
    }
    let r = jacobi_residuals(t);
    let mags = [r[0].norm(), r[1].norm(), r[2].norm(), r[3].norm()];
    let m = t.all().iter().map(|(_, z)| z.norm()).fold(0.0f64, f64::max);
    let scale = (m * m).max(1.0);
    Ok((mags.iter().all(|&x| x <= tol * scale), mags))
}

// ---------------------------------------------------------------- tolerance

#[derive(Debug, Clone, Copy, PartialEq)]
enum Tri {
    Zero,
    Ambiguous,
    NonZero,
}

fn tri(mag: f64, threshold: f64) -> Tri {
    if mag < threshold {
        Tri::Zero
    } else if mag < BAND * threshold {
        Tri::Ambiguous
    } else {
        Tri::NonZero
    }
}

fn ambiguous(quantity: &str, magnitude: f64, candidates: &[&str]) -> Error {
    Error::BoundaryAmbiguity {
        candidates: candidates.iter().map(|s| s.to_string()).collect(),
        quantity: quantity.to_string(),
        magnitude,
    }
}

// ------------------------------------------------------------------ TypeTag

/// Classification outcome: the case index of the thirteen-case table, the
/// subcase label, the constraint list, the unfixed `[X,Z]` parameters, and the
/// count D of commutator parameters left free.
#[derive(Debug, Clone, PartialEq)]
pub struct TypeTag {
    pub case_index: u8,
    pub subcase: String,
    pub jacobi_constraints: Vec<String>,
    pub unfixed: Vec<&'static str>,
    pub dimension: u32,
    /// True when the subcase label is this artifact's internal naming rather
    /// than a label printed in the source material (the five sub-conditions
    /// of case 1 with cw = dv = 0, except 1c-i).
    pub internal_label: bool,
}

impl TypeTag {
    pub fn to_json(&self) -> Value {
        json!({
            "case": self.case_index,
            "subcase": self.subcase,
            "constraints": self.jacobi_constraints,
            "unfixed": self.unfixed,
            "dimension": self.dimension,
            "internal_label": self.internal_label,
        })
    }
}

/// Affine family (m,n,p,e) = base + sum over free parameters t_k of
/// t_k * `dirs[k]`; `free` names the unfixed parameters in the same order.
#[derive(Debug, Clone)]
pub struct JacobiSolutionFamily {
    pub base: XzVector,
    pub free: Vec<&'static str>,
    pub dirs: Vec<XzVector>,
}

impl JacobiSolutionFamily {
    pub fn dim(&self) -> usize {
        self.free.len()
    }

    /// Substitute values for the free parameters.
    pub fn instantiate(&self, values: &BTreeMap<&str, CScalar>) -> XzVector {
        let mut out = self.base;
        for (k, name) in self.free.iter().enumerate() {
            let t = values.get(name).copied().unwrap_or_default();
            for i in 0..4 {
                out[i] += t * self.dirs[k][i];
            }
        }
        out
    }
}

// ----------------------------------------------------------------- classify

struct Flags {
    u: Tri,
    v: Tri,
    c: Tri,
    w: Tri,
    z: Tri,
    d: Tri,
}

fn zero_flags(t: &TripleParams, tol: f64) -> Flags {
    Flags {
        u: tri(t.u.norm(), tol),
        v: tri(t.v.norm(), tol),
        c: tri(t.c.norm(), tol),
        w: tri(t.w.norm(), tol),
        z: tri(t.z.norm(), tol),
        d: tri(t.d.norm(), tol),
    }
}

/// Classify the six case parameters (u, v, c, w, z, d) into the thirteen
/// cases. `tol` is the zero/equality tolerance (see `DEFAULT_TOL`).
pub fn classify(u: CScalar, v: CScalar, c: CScalar, w: CScalar, z: CScalar, d: CScalar, tol: f64) -> Result<TypeTag> {
    let t = TripleParams { u, v, c, w, z, d, ..Default::default() };
    if !t.is_finite() {
        return Err(Error::NonFiniteInput("classification parameters".into()));
    }
    let fl = zero_flags(&t, tol);
    if fl.u == Tri::Ambiguous {
        return Err(ambiguous("u", u.norm(), &["1 or 2 (u=0)", "3, 4 or 5 (u!=0)"]));
    }
    if fl.z == Tri::Ambiguous {
        return Err(ambiguous("z", z.norm(), &["1 or 3 (z=0)", "2, 4 or 5 (z!=0)"]));
    }

    match (fl.u == Tri::Zero, fl.z == Tri::Zero) {
        (true, true) => classify_case1(&t, &fl, tol),
        (true, false) => match fl.w {
            Tri::Zero => Ok(case2(&t, true)),
            Tri::NonZero => Ok(case2(&t, false)),
            Tri::Ambiguous => Err(ambiguous("w", w.norm(), &["2a (w=0)", "2b (w!=0)"])),
        },
        (false, true) => match fl.v {
            Tri::Zero => Ok(case3(&t, true)),
            Tri::NonZero => Ok(case3(&t, false)),
            Tri::Ambiguous => Err(ambiguous("v", v.norm(), &["3a (v=0)", "3b (v!=0)"])),
        },
        (false, false) => {
            let diff = (u - z).norm();
            let scale = u.norm().max(z.norm()).max(1.0);
            match tri(diff, tol * scale) {
                Tri::Zero => Ok(case4()),
                Tri::NonZero => Ok(case5()),
                Tri::Ambiguous => Err(ambiguous("u-z", diff, &["4 (u=z)", "5 (u!=z)"])),
            }
        }
    }
}

fn classify_case1(t: &TripleParams, fl: &Flags, tol: f64) -> Result<TypeTag> {
    let cw = t.c * t.w;
    let dv = t.d * t.v;
    let diff = (cw - dv).norm();
    let scale = cw.norm().max(dv.norm()).max(1.0);
    match tri(diff, tol * scale) {
        Tri::Ambiguous => {
            return Err(ambiguous("cw-dv", diff, &["1a (cw!=dv)", "1b/1c (cw=dv)"]));
        }
        Tri::NonZero => {
            return Ok(TypeTag {
                case_index: 1,
                subcase: "1a".into(),
                jacobi_constraints: vec!["m = -w".into(), "p = -v".into()],
                unfixed: vec!["n", "e"],
                dimension: 6,
                internal_label: false,
            });
        }
        Tri::Zero => {}
    }
    let prod = cw.norm().max(dv.norm());
    match tri(prod, tol) {
        Tri::Ambiguous => {
            return Err(ambiguous("cw (= dv)", prod, &["1b (cw=dv!=0)", "1c (cw=dv=0)"]));
        }
        Tri::NonZero => {
            return Ok(TypeTag {
                case_index: 1,
                subcase: "1b".into(),
                jacobi_constraints: vec!["m = (w/v) p".into()],
                unfixed: vec!["p", "n", "e"],
                dimension: 7,
                internal_label: false,
            });
        }
        Tri::Zero => {}
    }
    // cw = dv = 0: the five sub-conditions, resolved on the zero pattern of
    // (c, d, w, v). A product can vanish at tolerance with neither factor
    // flagged zero; that sits on a boundary and is reported as such.
    for (name, flag, mag) in [
        ("c", fl.c, t.c.norm()),
        ("d", fl.d, t.d.norm()),
        ("w", fl.w, t.w.norm()),
        ("v", fl.v, t.v.norm()),
    ] {
        if flag == Tri::Ambiguous {
            return Err(ambiguous(name, mag, &["1c sub-conditions"]));
        }
    }
    let zc = fl.c == Tri::Zero;
    let zd = fl.d == Tri::Zero;
    let zw = fl.w == Tri::Zero;
    let zv = fl.v == Tri::Zero;
    if (!zc && !zw) || (!zd && !zv) {
        return Err(ambiguous(
            "cw=dv=0 with no vanishing factor",
            prod,
            &["1c (product zero)", "1b (factors nonzero)"],
        ));
    }
    let tag = if zc && zd {
        if !zw {
            TypeTag {
                case_index: 1,
                subcase: "1c-i".into(),
                jacobi_constraints: vec!["p = m v / w".into()],
                unfixed: vec!["e", "m", "n"],
                dimension: 5,
                internal_label: false,
            }
        } else if !zv {
            TypeTag {
                case_index: 1,
                subcase: "1c-ii".into(),
                jacobi_constraints: vec!["m = 0".into()],
                unfixed: vec!["n", "p", "e"],
                dimension: 4,
                internal_label: true,
            }
        } else {
            TypeTag {
                case_index: 1,
                subcase: "1c-v".into(),
                jacobi_constraints: vec![],
                unfixed: vec!["m", "n", "p", "e"],
                dimension: 4,
                internal_label: true,
            }
        }
    } else if zc {
        // d != 0 forces v = 0 (already flagged zero here)
        TypeTag {
            case_index: 1,
            subcase: "1c-iii".into(),
            jacobi_constraints: vec!["p = 0".into()],
            unfixed: vec!["m", "n", "e"],
            dimension: 5,
            internal_label: true,
        }
    } else if zd {
        // c != 0 forces w = 0
        TypeTag {
            case_index: 1,
            subcase: "1c-iv".into(),
            jacobi_constraints: vec!["m = 0".into()],
            unfixed: vec!["n", "p", "e"],
            dimension: 5,
            internal_label: true,
        }
    } else {
        // c != 0 and d != 0 force w = v = 0
        TypeTag {
            case_index: 1,
            subcase: "1c-v".into(),
            jacobi_constraints: vec!["m = (d/c) p".into()],
            unfixed: vec!["p", "n", "e"],
            dimension: 5,
            internal_label: true,
        }
    };
    Ok(tag)
}

fn case2(_t: &TripleParams, w_zero: bool) -> TypeTag {
    if w_zero {
        TypeTag {
            case_index: 2,
            subcase: "2a".into(),
            jacobi_constraints: vec!["v = 0".into(), "m = 0".into(), "n = 0".into(), "e = d p / z".into()],
            unfixed: vec!["p"],
            dimension: 4,
            internal_label: false,
        }
    } else {
        TypeTag {
            case_index: 2,
            subcase: "2b".into(),
            jacobi_constraints: vec![
                "v = 0".into(),
                "m = 0".into(),
                "n = w p / z".into(),
                "e = (d p - c w) / z".into(),
            ],
            unfixed: vec!["p"],
            dimension: 5,
            internal_label: false,
        }
    }
}

fn case3(_t: &TripleParams, v_zero: bool) -> TypeTag {
    if v_zero {
        TypeTag {
            case_index: 3,
            subcase: "3a".into(),
            jacobi_constraints: vec!["w = 0".into(), "p = 0".into(), "n = 0".into(), "e = c m / u".into()],
            unfixed: vec!["m"],
            dimension: 4,
            internal_label: false,
        }
    } else {
        TypeTag {
            case_index: 3,
            subcase: "3b".into(),
            jacobi_constraints: vec![
                "w = 0".into(),
                "p = 0".into(),
                "n = v m / u".into(),
                "e = (c m - d v) / u".into(),
            ],
            unfixed: vec!["m"],
            dimension: 5,
            internal_label: false,
        }
    }
}

fn case4() -> TypeTag {
    TypeTag {
        case_index: 4,
        subcase: "4".into(),
        jacobi_constraints: vec!["m = -w".into(), "p = -v".into()],
        unfixed: vec!["e", "n"],
        dimension: 8,
        internal_label: false,
    }
}

fn case5() -> TypeTag {
    TypeTag {
        case_index: 5,
        subcase: "5".into(),
        jacobi_constraints: vec![
            "m = -u w / z".into(),
            "n = -v w (1/u + 1/z)".into(),
            "p = -v z / u".into(),
            "e = -c w / z - d v / u".into(),
        ],
        unfixed: vec![],
        dimension: 6,
        internal_label: false,
    }
}

// -------------------------------------------------------------- solve_jacobi

/// Solve the Jacobi linear system for (m, n, p, e) given the six case
/// parameters, as an affine family. Raises the same boundary errors as
/// `classify`, and an inconsistency error when the system has no solution
/// (u = 0, z != 0 with v != 0, or u != 0, z = 0 with w != 0).
pub fn solve_jacobi(u: CScalar, v: CScalar, c: CScalar, w: CScalar, z: CScalar, d: CScalar, tol: f64) -> Result<JacobiSolutionFamily> {
    let tag = classify(u, v, c, w, z, d, tol)?;
    let zero = Complex64::new(0.0, 0.0);
    let one = Complex64::new(1.0, 0.0);
    let fam = match tag.subcase.as_str() {
        "1a" => JacobiSolutionFamily {
            base: [-w, zero, -v, zero],
            free: vec!["n", "e"],
            dirs: vec![[zero, one, zero, zero], [zero, zero, zero, one]],
        },
        "1b" => JacobiSolutionFamily {
            base: [zero; 4],
            free: vec!["p", "n", "e"],
            dirs: vec![
                [w / v, zero, one, zero],
                [zero, one, zero, zero],
                [zero, zero, zero, one],
            ],
        },
        "1c-i" => JacobiSolutionFamily {
            base: [zero; 4],
            free: vec!["e", "m", "n"],
            dirs: vec![
                [zero, zero, zero, one],
                [one, zero, v / w, zero],
                [zero, one, zero, zero],
            ],
        },
        "1c-ii" | "1c-iv" => JacobiSolutionFamily {
            base: [zero; 4],
            free: vec!["n", "p", "e"],
            dirs: vec![
                [zero, one, zero, zero],
                [zero, zero, one, zero],
                [zero, zero, zero, one],
            ],
        },
        "1c-iii" => JacobiSolutionFamily {
            base: [zero; 4],
            free: vec!["m", "n", "e"],
            dirs: vec![
                [one, zero, zero, zero],
                [zero, one, zero, zero],
                [zero, zero, zero, one],
            ],
        },
        "1c-v" => {
            if c.norm() >= tol {
                JacobiSolutionFamily {
                    base: [zero; 4],
                    free: vec!["p", "n", "e"],
                    dirs: vec![
                        [d / c, zero, one, zero],
                        [zero, one, zero, zero],
                        [zero, zero, zero, one],
                    ],
                }
            } else {
                JacobiSolutionFamily {
                    base: [zero; 4],
                    free: vec!["m", "n", "p", "e"],
                    dirs: vec![
                        [one, zero, zero, zero],
                        [zero, one, zero, zero],
                        [zero, zero, one, zero],
                        [zero, zero, zero, one],
                    ],
                }
            }
        }
        "2a" | "2b" => {
            if v.norm() >= tol {
                return Err(Error::InconsistentSystem(format!(
                    "u = 0 with z != 0 requires v = 0 (third equation reads z v = {}), so no [X,Z] closes this triple",
                    (z * v).norm()
                )));
            }
            JacobiSolutionFamily {
                base: [zero, zero, zero, -c * w / z],
                free: vec!["p"],
                dirs: vec![[zero, w / z, one, d / z]],
            }
        }
        "3a" | "3b" => {
            if w.norm() >= tol {
                return Err(Error::InconsistentSystem(format!(
                    "z = 0 with u != 0 requires w = 0 (first equation reads u w = {}), so no [X,Z] closes this triple",
                    (u * w).norm()
                )));
            }
            JacobiSolutionFamily {
                base: [zero, zero, zero, -d * v / u],
                free: vec!["m"],
                dirs: vec![[one, v / u, zero, c / u]],
            }
        }
        "4" => JacobiSolutionFamily {
            base: [-w, zero, -v, zero],
            free: vec!["e", "n"],
            dirs: vec![[zero, zero, zero, one], [zero, one, zero, zero]],
        },
        "5" => JacobiSolutionFamily {
            base: [
                -u * w / z,
                -v * w * (1.0 / u + 1.0 / z),
                -v * z / u,
                -c * w / z - d * v / u,
            ],
            free: vec![],
            dirs: vec![],
        },
        other => unreachable!("unhandled subcase {other}"),
    };
    Ok(fam)
}
