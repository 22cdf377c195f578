//! Root-system and Cartan-Weyl machinery: the algebra catalog (sl2, sl3,
//! so5), structure constants extracted from faithful matrix representations,
//! and commutators of abstract elements.
//!
//! Algebras ship as data. Each catalog file lists generators with a name, a
//! kind (`cartan` or `step`, or `general` for closures without root data),
//! integer root coordinates in the simple-root basis, and a dense complex
//! representation matrix. The loader extracts all structure constants
//! numerically from the matrices and gates the result on the homomorphism
//! and root-system invariants, so a user file that fails to close or
//! misdeclares its roots is rejected at load time. An optional generator of
//! kind `central` extends the algebra by a center.

use crate::error::{Error, Result};
use crate::linalg::{frobenius, lstsq, CMat};
use crate::scalar::CScalar;
use ndarray::Array2;
use num_complex::Complex64;
use serde::Deserialize;
use std::collections::{BTreeMap, BTreeSet};

/// A lattice vector in the simple-root basis.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Root(pub Vec<i32>);

impl Root {
    pub fn neg(&self) -> Root {
        Root(self.0.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &Root) -> Root {
        Root(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn scaled_add(&self, k: i32, other: &Root) -> Root {
        Root(self.0.iter().zip(&other.0).map(|(a, b)| a + k * b).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GeneratorKind {
    /// H^alpha for a lattice vector alpha (coroot convention).
    Cartan(Root),
    /// Step operator E^beta, beta a root.
    Step(Root),
    /// Generator of a user-defined closure with no root data attached.
    General,
    /// Central element.
    Central,
}

#[derive(Debug, Clone)]
pub struct Generator {
    pub name: String,
    pub kind: GeneratorKind,
}

/// Finite linear combination of basis generators plus a central coefficient.
#[derive(Debug, Clone, Default)]
pub struct LieElement {
    pub coeffs: BTreeMap<usize, CScalar>,
    pub central: CScalar,
}

impl LieElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(index: usize) -> Self {
        let mut el = Self::default();
        el.coeffs.insert(index, Complex64::new(1.0, 0.0));
        el
    }

    pub fn central_element() -> Self {
        LieElement {
            coeffs: BTreeMap::new(),
            central: Complex64::new(1.0, 0.0),
        }
    }

    pub fn scaled(&self, k: CScalar) -> Self {
        let mut out = self.clone();
        for v in out.coeffs.values_mut() {
            *v *= k;
        }
        out.central *= k;
        out.prune()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&i, &v) in &other.coeffs {
            *out.coeffs.entry(i).or_insert(Complex64::new(0.0, 0.0)) += v;
        }
        out.central += other.central;
        out.prune()
    }

    pub fn add_scaled(&self, k: CScalar, other: &Self) -> Self {
        self.add(&other.scaled(k))
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add_scaled(Complex64::new(-1.0, 0.0), other)
    }

    fn prune(mut self) -> Self {
        self.coeffs.retain(|_, v| v.norm() > 0.0);
        self
    }

    /// Max-norm over all coefficients including the central one.
    pub fn coeff_norm(&self) -> f64 {
        self.coeffs
            .values()
            .map(|v| v.norm())
            .fold(self.central.norm(), f64::max)
    }

    pub fn is_finite(&self) -> bool {
        self.central.re.is_finite()
            && self.central.im.is_finite()
            && self
                .coeffs
                .values()
                .all(|v| v.re.is_finite() && v.im.is_finite())
    }

    /// Dense coordinate vector over (generators..., central).
    pub fn dense(&self, n_gens: usize) -> Vec<CScalar> {
        let mut out = vec![Complex64::new(0.0, 0.0); n_gens + 1];
        for (&i, &v) in &self.coeffs {
            out[i] = v;
        }
        out[n_gens] = self.central;
        out
    }
}

// ------------------------------------------------------------------ catalog

#[derive(Deserialize)]
struct GeneratorFile {
    name: String,
    kind: String,
    #[serde(default)]
    root: Vec<i32>,
    matrix: Vec<Vec<[f64; 2]>>,
}

#[derive(Deserialize)]
struct AlgebraFile {
    name: String,
    rank: usize,
    gram: Vec<Vec<f64>>,
    generators: Vec<GeneratorFile>,
}

const SL2_JSON: &str = include_str!("../data/sl2.json");
const SL3_JSON: &str = include_str!("../data/sl3.json");
const SO5_JSON: &str = include_str!("../data/so5.json");

/// Maximum representation dimension accepted by the loader and the oracle.
pub const MAX_REP_DIM: usize = 16;

/// An immutable algebra: basis, root data, structure constants, and a
/// faithful representation. Safe to share across threads once built.
#[derive(Debug, Clone)]
pub struct Algebra {
    pub name: String,
    pub rank: usize,
    gram: Vec<Vec<f64>>,
    pub generators: Vec<Generator>,
    rep: Vec<CMat>,
    central_rep: Option<CMat>,
    pub rep_dim: usize,
    roots: BTreeSet<Root>,
    step_index: BTreeMap<Root, usize>,
    simple_cartan: Vec<usize>,
    name_index: BTreeMap<String, usize>,
    bracket: Vec<Vec<LieElement>>,
}

/// Build one of the shipped algebras.
pub fn build_algebra(name: &str) -> Result<Algebra> {
    match name {
        "sl2" => Algebra::from_json(SL2_JSON),
        "sl3" => Algebra::from_json(SL3_JSON),
        "so5" => Algebra::from_json(SO5_JSON),
        other => Err(Error::UnsupportedAlgebra(other.to_string())),
    }
}

impl Algebra {
    pub fn from_json(text: &str) -> Result<Algebra> {
        let file: AlgebraFile = serde_json::from_str(text)
            .map_err(|e| Error::AlgebraLoad(format!("bad catalog JSON: {e}")))?;
        Self::from_file(file)
    }

    fn from_file(file: AlgebraFile) -> Result<Algebra> {
        if file.gram.len() != file.rank || file.gram.iter().any(|r| r.len() != file.rank) {
            return Err(Error::AlgebraLoad("gram matrix shape must equal rank".into()));
        }

        let mut generators = Vec::new();
        let mut rep = Vec::new();
        let mut central_rep = None;
        let mut rep_dim = 0usize;

        for g in &file.generators {
            let dim = g.matrix.len();
            if dim == 0 || g.matrix.iter().any(|row| row.len() != dim) {
                return Err(Error::AlgebraLoad(format!("matrix for {} is not square", g.name)));
            }
            if dim > MAX_REP_DIM {
                return Err(Error::DimensionLimit(dim, MAX_REP_DIM));
            }
            if rep_dim == 0 {
                rep_dim = dim;
            } else if dim != rep_dim {
                return Err(Error::AlgebraLoad(format!(
                    "matrix for {} has dimension {dim}, expected {rep_dim}",
                    g.name
                )));
            }
            let mut m = Array2::<Complex64>::zeros((dim, dim));
            for (i, row) in g.matrix.iter().enumerate() {
                for (j, &[re, im]) in row.iter().enumerate() {
                    if !re.is_finite() || !im.is_finite() {
                        return Err(Error::AlgebraLoad(format!("non-finite entry in {}", g.name)));
                    }
                    m[[i, j]] = Complex64::new(re, im);
                }
            }
            match g.kind.as_str() {
                "cartan" | "step" => {
                    if g.root.len() != file.rank {
                        return Err(Error::AlgebraLoad(format!(
                            "root coordinates for {} must have length {}",
                            g.name, file.rank
                        )));
                    }
                    let root = Root(g.root.clone());
                    let kind = if g.kind == "cartan" {
                        GeneratorKind::Cartan(root)
                    } else {
                        GeneratorKind::Step(root)
                    };
                    generators.push(Generator { name: g.name.clone(), kind });
                    rep.push(m);
                }
                "general" => {
                    generators.push(Generator { name: g.name.clone(), kind: GeneratorKind::General });
                    rep.push(m);
                }
                "central" => {
                    if central_rep.is_some() {
                        return Err(Error::AlgebraLoad("more than one central generator".into()));
                    }
                    central_rep = Some(m);
                }
                other => {
                    return Err(Error::AlgebraLoad(format!("unknown generator kind {other}")));
                }
            }
        }

        let mut roots = BTreeSet::new();
        let mut step_index = BTreeMap::new();
        let mut name_index = BTreeMap::new();
        let mut simple_cartan = vec![usize::MAX; file.rank];
        for (i, g) in generators.iter().enumerate() {
            if name_index.insert(g.name.clone(), i).is_some() {
                return Err(Error::AlgebraLoad(format!("duplicate generator name {}", g.name)));
            }
            match &g.kind {
                GeneratorKind::Step(r) => {
                    roots.insert(r.clone());
                    step_index.insert(r.clone(), i);
                }
                GeneratorKind::Cartan(r) => {
                    // simple-root Cartans carry a unit coordinate vector
                    let nonzero: Vec<usize> =
                        (0..file.rank).filter(|&k| r.0[k] != 0).collect();
                    if nonzero.len() == 1 && r.0[nonzero[0]] == 1 {
                        simple_cartan[nonzero[0]] = i;
                    }
                }
                GeneratorKind::General | GeneratorKind::Central => {}
            }
        }
        if simple_cartan.iter().any(|&i| i == usize::MAX) {
            return Err(Error::AlgebraLoad(
                "catalog must provide one Cartan generator per simple root".into(),
            ));
        }
        for r in &roots {
            if !roots.contains(&r.neg()) {
                return Err(Error::AlgebraLoad(format!("root system not symmetric: missing -{:?}", r.0)));
            }
        }

        let mut algebra = Algebra {
            name: file.name,
            rank: file.rank,
            gram: file.gram,
            generators,
            rep,
            central_rep,
            rep_dim,
            roots,
            step_index,
            simple_cartan,
            name_index,
            bracket: Vec::new(),
        };
        algebra.extract_structure()?;
        algebra.check_invariants()?;
        Ok(algebra)
    }

    /// Extract all structure constants from the representation by projecting
    /// matrix commutators onto the basis span.
    fn extract_structure(&mut self) -> Result<()> {
        let n = self.generators.len();
        let flat: Vec<Vec<Complex64>> = self
            .rep
            .iter()
            .map(|m| m.iter().copied().collect())
            .chain(self.central_rep.iter().map(|m| m.iter().copied().collect()))
            .collect();
        let scale = self.rep.iter().map(frobenius).fold(0.0f64, f64::max).max(1e-300);

        let mut bracket = vec![vec![LieElement::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                let k = self.rep[i].dot(&self.rep[j]) - self.rep[j].dot(&self.rep[i]);
                let rhs: Vec<Complex64> = k.iter().copied().collect();
                let (co, res) = lstsq(&flat, &rhs, 1e-13);
                if res > 1e-12 * scale.max(frobenius(&k)) {
                    return Err(Error::AlgebraLoad(format!(
                        "[{}, {}] does not close in the basis span (residual {res:.3e})",
                        self.generators[i].name, self.generators[j].name
                    )));
                }
                let mut el = LieElement::zero();
                for (idx, &c) in co.iter().take(n).enumerate() {
                    if c.norm() > 1e-12 {
                        el.coeffs.insert(idx, c);
                    }
                }
                if self.central_rep.is_some() {
                    let c = co[n];
                    if c.norm() > 1e-12 {
                        el.central = c;
                    }
                }
                bracket[i][j] = el;
            }
        }
        self.bracket = bracket;
        Ok(())
    }

    fn check_invariants(&self) -> Result<()> {
        let n = self.generators.len();
        // antisymmetry of the extracted table
        for i in 0..n {
            for j in 0..n {
                let s = self.bracket[i][j].add(&self.bracket[j][i]);
                if s.coeff_norm() > 1e-11 {
                    return Err(Error::AlgebraLoad(format!(
                        "bracket not antisymmetric at ({}, {})",
                        self.generators[i].name, self.generators[j].name
                    )));
                }
            }
        }
        // e_{alpha beta} nonzero iff alpha+beta is a root (alpha != -beta),
        // [E^alpha, E^-alpha] = H^alpha, and Cartan actions match the pairing
        for i in 0..n {
            for j in 0..n {
                match (&self.generators[i].kind, &self.generators[j].kind) {
                    (GeneratorKind::Step(a), GeneratorKind::Step(b)) => {
                        let sum = a.add(b);
                        let k = &self.bracket[i][j];
                        if sum.is_zero() {
                            let h = self.cartan_element(a)?;
                            if k.sub(&h).coeff_norm() > 1e-11 {
                                return Err(Error::AlgebraLoad(format!(
                                    "[{}, {}] != H^alpha",
                                    self.generators[i].name, self.generators[j].name
                                )));
                            }
                        } else {
                            let in_phi = self.roots.contains(&sum);
                            let coeff = self
                                .step_index
                                .get(&sum)
                                .and_then(|&t| k.coeffs.get(&t))
                                .map(|c| c.norm())
                                .unwrap_or(0.0);
                            if in_phi && coeff < 1e-11 {
                                return Err(Error::AlgebraLoad(format!(
                                    "e_({}, {}) vanishes although the root sum lies in Phi",
                                    self.generators[i].name, self.generators[j].name
                                )));
                            }
                            if !in_phi && k.coeff_norm() > 1e-11 {
                                return Err(Error::AlgebraLoad(format!(
                                    "[{}, {}] nonzero although the root sum is not in Phi",
                                    self.generators[i].name, self.generators[j].name
                                )));
                            }
                        }
                    }
                    (GeneratorKind::Cartan(a), GeneratorKind::Step(b)) => {
                        let expected = LieElement::basis(j).scaled(self.pairing(a, b)?.into());
                        if self.bracket[i][j].sub(&expected).coeff_norm() > 1e-11 {
                            return Err(Error::AlgebraLoad(format!(
                                "[{}, {}] != (alpha_v, beta) E^beta",
                                self.generators[i].name, self.generators[j].name
                            )));
                        }
                    }
                    (GeneratorKind::Cartan(_), GeneratorKind::Cartan(_)) => {
                        if self.bracket[i][j].coeff_norm() > 1e-11 {
                            return Err(Error::AlgebraLoad("Cartan subalgebra not abelian".into()));
                        }
                    }
                    _ => {}
                }
            }
        }
        Ok(())
    }

    // -------------------------------------------------------------- queries

    pub fn dim(&self) -> usize {
        self.generators.len()
    }

    pub fn has_central(&self) -> bool {
        self.central_rep.is_some()
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.name_index.get(name).copied()
    }

    pub fn generator_name(&self, index: usize) -> &str {
        &self.generators[index].name
    }

    pub fn roots(&self) -> impl Iterator<Item = &Root> {
        self.roots.iter()
    }

    pub fn is_root(&self, r: &Root) -> bool {
        self.roots.contains(r)
    }

    pub fn step(&self, r: &Root) -> Result<usize> {
        self.step_index
            .get(r)
            .copied()
            .ok_or_else(|| Error::RootError(format!("{:?} is not a root of {}", r.0, self.name)))
    }

    /// Invariant inner product of two lattice vectors.
    pub fn inner(&self, a: &Root, b: &Root) -> f64 {
        let mut acc = 0.0;
        for i in 0..self.rank {
            for j in 0..self.rank {
                acc += (a.0[i] as f64) * self.gram[i][j] * (b.0[j] as f64);
            }
        }
        acc
    }

    /// (alpha_v, beta) = 2 (alpha, beta) / (alpha, alpha).
    pub fn pairing(&self, alpha: &Root, beta: &Root) -> Result<f64> {
        let n2 = self.inner(alpha, alpha);
        if n2 == 0.0 {
            return Err(Error::RootError(format!("zero-norm vector {:?}", alpha.0)));
        }
        Ok(2.0 * self.inner(alpha, beta) / n2)
    }

    /// H^alpha as an element: expand alpha_v over the simple coroots, so that
    /// `[H^alpha, E^beta]` = (alpha_v, beta) E^beta and `[E^alpha, E^-alpha]` = H^alpha.
    pub fn cartan_element(&self, alpha: &Root) -> Result<LieElement> {
        let n2 = self.inner(alpha, alpha);
        if n2 == 0.0 {
            return Err(Error::RootError(format!("zero-norm vector {:?}", alpha.0)));
        }
        let mut el = LieElement::zero();
        for j in 0..self.rank {
            if alpha.0[j] == 0 {
                continue;
            }
            let simple = Root((0..self.rank).map(|k| i32::from(k == j)).collect());
            let cj = (alpha.0[j] as f64) * self.inner(&simple, &simple) / n2;
            el = el.add_scaled(Complex64::new(cj, 0.0), &LieElement::basis(self.simple_cartan[j]));
        }
        Ok(el)
    }

    /// E^beta as an element.
    pub fn step_element(&self, beta: &Root) -> Result<LieElement> {
        Ok(LieElement::basis(self.step(beta)?))
    }

    /// Structure constant e_{alpha beta}: the E^{alpha+beta} coefficient of
    /// `[E^alpha, E^beta]`. Zero when alpha+beta is not a root.
    pub fn structure_constant(&self, alpha: &Root, beta: &Root) -> Result<CScalar> {
        let i = self.step(alpha)?;
        let j = self.step(beta)?;
        let sum = alpha.add(beta);
        Ok(match self.step_index.get(&sum) {
            Some(&t) => self.bracket[i][j].coeffs.get(&t).copied().unwrap_or_default(),
            None => Complex64::new(0.0, 0.0),
        })
    }

    /// Bilinear commutator of two elements. Central coefficients never
    /// contribute. Errors on indices outside the basis.
    pub fn commutator(&self, a: &LieElement, b: &LieElement) -> Result<LieElement> {
        let n = self.dim();
        for &i in a.coeffs.keys().chain(b.coeffs.keys()) {
            if i >= n {
                return Err(Error::ForeignGenerator { index: i, algebra: self.name.clone() });
            }
        }
        let mut out = LieElement::zero();
        for (&i, &ca) in &a.coeffs {
            for (&j, &cb) in &b.coeffs {
                if self.bracket[i][j].coeffs.is_empty() && self.bracket[i][j].central.norm() == 0.0 {
                    continue;
                }
                out = out.add(&self.bracket[i][j].scaled(ca * cb));
            }
        }
        Ok(out)
    }

    /// Dense representation matrix of an element. A nonzero central
    /// coefficient requires the algebra to carry a central generator.
    pub fn represent(&self, el: &LieElement) -> Result<CMat> {
        let mut m = Array2::<Complex64>::zeros((self.rep_dim, self.rep_dim));
        for (&i, &c) in &el.coeffs {
            if i >= self.dim() {
                return Err(Error::ForeignGenerator { index: i, algebra: self.name.clone() });
            }
            m = m + self.rep[i].mapv(|z| z * c);
        }
        if el.central.norm() > 1e-12 {
            match &self.central_rep {
                Some(cm) => m = m + cm.mapv(|z| z * el.central),
                None => {
                    return Err(Error::RootError(format!(
                        "element has central coefficient {} but {} has no central generator",
                        el.central, self.name
                    )))
                }
            }
        }
        Ok(m)
    }

    /// Human-readable structure-constant table: for every ordered generator
    /// pair with a nonzero bracket, the expansion of `[a, b]`.
    pub fn commutator_table(&self) -> BTreeMap<String, BTreeMap<String, CScalar>> {
        let mut out = BTreeMap::new();
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                let el = &self.bracket[i][j];
                if el.coeffs.is_empty() && el.central.norm() == 0.0 {
                    continue;
                }
                let mut terms = BTreeMap::new();
                for (&t, &c) in &el.coeffs {
                    terms.insert(self.generators[t].name.clone(), c);
                }
                if el.central.norm() > 0.0 {
                    terms.insert("I".to_string(), el.central);
                }
                out.insert(
                    format!("[{},{}]", self.generators[i].name, self.generators[j].name),
                    terms,
                );
            }
        }
        out
    }

    /// Parse "coeff*Name" comma-separated element syntax, e.g.
    /// "1*E+1, -0.5+2i*H1". Coefficients are complex in `a+bi` form.
    pub fn parse_element(&self, text: &str) -> Result<LieElement> {
        let mut el = LieElement::zero();
        for term in text.split(',') {
            let term = term.trim();
            if term.is_empty() {
                continue;
            }
            let (coeff, name) = match term.rsplit_once('*') {
                Some((c, n)) => (parse_complex(c.trim())?, n.trim()),
                None => (Complex64::new(1.0, 0.0), term),
            };
            if name == "I" {
                el.central += coeff;
                continue;
            }
            let idx = self.generator_index(name).ok_or_else(|| {
                Error::RootError(format!("unknown generator {name} in algebra {}", self.name))
            })?;
            *el.coeffs.entry(idx).or_insert(Complex64::new(0.0, 0.0)) += coeff;
        }
        if !el.is_finite() {
            return Err(Error::NonFiniteInput(text.to_string()));
        }
        Ok(el.prune())
    }
}

/// Parse a complex scalar written as `a`, `bi`, or `a+bi` / `a-bi`.
pub fn parse_complex(s: &str) -> Result<CScalar> {
    let t = s.trim();
    let bad = || Error::NonFiniteInput(format!("cannot parse complex number from '{s}'"));
    if t.is_empty() {
        return Err(bad());
    }
    if let Ok(re) = t.parse::<f64>() {
        return Ok(Complex64::new(re, 0.0));
    }
    if let Some(imtext) = t.strip_suffix(['i', 'j']) {
        // pure imaginary or full a+bi form; find the split sign after position 0
        let chars: Vec<char> = imtext.chars().collect();
        let mut split = None;
        for k in (1..chars.len()).rev() {
            if (chars[k] == '+' || chars[k] == '-') && chars[k - 1] != 'e' && chars[k - 1] != 'E' {
                split = Some(k);
                break;
            }
        }
        match split {
            Some(k) => {
                let re: f64 = imtext[..k].trim().parse().map_err(|_| bad())?;
                let imstr = imtext[k..].trim();
                let im: f64 = if imstr == "+" {
                    1.0
                } else if imstr == "-" {
                    -1.0
                } else {
                    imstr.parse().map_err(|_| bad())?
                };
                Ok(Complex64::new(re, im))
            }
            None => {
                let imstr = imtext.trim();
                let im: f64 = if imstr.is_empty() {
                    1.0
                } else {
                    imstr.parse().map_err(|_| bad())?
                };
                Ok(Complex64::new(0.0, im))
            }
        }
    } else {
        Err(bad())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> CScalar {
        Complex64::new(re, im)
    }

    #[test]
    fn catalog_loads_and_gates_invariants() {
        for name in ["sl2", "sl3", "so5"] {
            let a = build_algebra(name).unwrap();
            assert_eq!(a.name, name);
        }
        assert!(matches!(build_algebra("g2"), Err(Error::UnsupportedAlgebra(_))));
    }

    #[test]
    fn sl2_defining_relations() {
        let a = build_algebra("sl2").unwrap();
        let h = a.parse_element("1*H").unwrap();
        let e = a.parse_element("1*E+").unwrap();
        let f = a.parse_element("1*E-").unwrap();
        let he = a.commutator(&h, &e).unwrap();
        assert!(he.sub(&e.scaled(c(2.0, 0.0))).coeff_norm() < 1e-12);
        let hf = a.commutator(&h, &f).unwrap();
        assert!(hf.sub(&f.scaled(c(-2.0, 0.0))).coeff_norm() < 1e-12);
        let ef = a.commutator(&e, &f).unwrap();
        assert!(ef.sub(&h).coeff_norm() < 1e-12);
    }

    #[test]
    fn sl3_printed_table_is_reproduced() {
        let a = build_algebra("sl3").unwrap();
        let el = |n: &str| a.parse_element(&format!("1*{n}")).unwrap();
        let pairs: Vec<(&str, &str, &str, f64)> = vec![
            ("H1", "H2", "", 0.0),
            ("E+1", "E-1", "H1", 1.0),
            ("E+2", "E-2", "H2", 1.0),
            ("H1", "E+1", "E+1", 2.0),
            ("H1", "E-1", "E-1", -2.0),
            ("H1", "E+2", "E+2", -1.0),
            ("H1", "E-2", "E-2", 1.0),
            ("H1", "E+theta", "E+theta", 1.0),
            ("H1", "E-theta", "E-theta", -1.0),
            ("H2", "E+1", "E+1", -1.0),
            ("H2", "E-1", "E-1", 1.0),
            ("H2", "E+2", "E+2", 2.0),
            ("H2", "E-2", "E-2", -2.0),
            ("H2", "E+theta", "E+theta", 1.0),
            ("H2", "E-theta", "E-theta", -1.0),
            ("E+1", "E+2", "E+theta", 1.0),
            ("E-1", "E-2", "E-theta", -1.0),
            ("E+1", "E-theta", "E-2", -1.0),
            ("E-1", "E+theta", "E+2", 1.0),
            ("E+2", "E-theta", "E-1", 1.0),
            ("E-2", "E+theta", "E+1", -1.0),
            // vanishing entries
            ("E+1", "E-2", "", 0.0),
            ("E-1", "E+2", "", 0.0),
            ("E+1", "E+theta", "", 0.0),
            ("E-1", "E-theta", "", 0.0),
            ("E+2", "E+theta", "", 0.0),
            ("E-2", "E-theta", "", 0.0),
        ];
        for (x, y, target, coeff) in pairs {
            let k = a.commutator(&el(x), &el(y)).unwrap();
            let expected = if target.is_empty() {
                LieElement::zero()
            } else {
                el(target).scaled(c(coeff, 0.0))
            };
            assert!(
                k.sub(&expected).coeff_norm() < 1e-12,
                "[{x},{y}] mismatch: got {k:?}"
            );
        }
        // [E+theta, E-theta] = H1 + H2
        let k = a
            .commutator(&el("E+theta"), &el("E-theta"))
            .unwrap();
        let expected = el("H1").add(&el("H2"));
        assert!(k.sub(&expected).coeff_norm() < 1e-12);
    }

    #[test]
    fn representation_is_a_homomorphism_on_all_pairs() {
        for name in ["sl2", "sl3", "so5"] {
            let a = build_algebra(name).unwrap();
            for i in 0..a.dim() {
                for j in 0..a.dim() {
                    let x = LieElement::basis(i);
                    let y = LieElement::basis(j);
                    let lhs = a.represent(&a.commutator(&x, &y).unwrap()).unwrap();
                    let rx = a.represent(&x).unwrap();
                    let ry = a.represent(&y).unwrap();
                    let rhs = rx.dot(&ry) - ry.dot(&rx);
                    let diff = (&lhs - &rhs).iter().map(|z| z.norm()).fold(0.0, f64::max);
                    assert!(diff < 1e-12, "{name} pair ({i},{j}) differs by {diff}");
                }
            }
        }
    }

    #[test]
    fn so5_has_the_long_short_string_and_no_excluded_strings() {
        let combo = |ka: i32, alpha: &Root, kb: i32, beta: &Root| {
            Root(alpha
                .0
                .iter()
                .zip(&beta.0)
                .map(|(a, b)| ka * a + kb * b)
                .collect())
        };
        for name in ["sl3", "so5"] {
            let a = build_algebra(name).unwrap();
            let mut found_a_plus_2b = false;
            let roots: Vec<Root> = a.roots().cloned().collect();
            for alpha in &roots {
                for beta in &roots {
                    if alpha.add(beta).is_zero() || !a.is_root(&alpha.add(beta)) {
                        continue;
                    }
                    found_a_plus_2b |= a.is_root(&combo(1, alpha, 2, beta));
                    // the length-five strings the catalog excludes never occur
                    assert!(!a.is_root(&combo(2, alpha, 3, beta)), "{name}: 2a+3b is a root");
                    assert!(!a.is_root(&combo(3, alpha, 2, beta)), "{name}: 3a+2b is a root");
                }
            }
            assert_eq!(found_a_plus_2b, name == "so5", "{name} string content");
        }
    }

    #[test]
    fn pairing_and_coroots() {
        let a = build_algebra("sl3").unwrap();
        let a1 = Root(vec![1, 0]);
        let a2 = Root(vec![0, 1]);
        let theta = Root(vec![1, 1]);
        assert_eq!(a.pairing(&a1, &a2).unwrap(), -1.0);
        assert_eq!(a.pairing(&a1, &a1).unwrap(), 2.0);
        assert_eq!(a.pairing(&theta, &a1).unwrap(), 1.0);
        // H^theta = H1 + H2
        let h = a.cartan_element(&theta).unwrap();
        let expected = LieElement::basis(0).add(&LieElement::basis(1));
        assert!(h.sub(&expected).coeff_norm() < 1e-12);
        // [E^alpha, E^-alpha] = H^alpha for every root
        for r in a.roots().cloned().collect::<Vec<_>>() {
            let e = a.step_element(&r).unwrap();
            let f = a.step_element(&r.neg()).unwrap();
            let k = a.commutator(&e, &f).unwrap();
            let h = a.cartan_element(&r).unwrap();
            assert!(k.sub(&h).coeff_norm() < 1e-12, "failed for {:?}", r.0);
        }
    }

    #[test]
    fn complex_parsing() {
        assert_eq!(parse_complex("2").unwrap(), c(2.0, 0.0));
        assert_eq!(parse_complex("-0.5").unwrap(), c(-0.5, 0.0));
        assert_eq!(parse_complex("2i").unwrap(), c(0.0, 2.0));
        assert_eq!(parse_complex("i").unwrap(), c(0.0, 1.0));
        assert_eq!(parse_complex("1+2i").unwrap(), c(1.0, 2.0));
        assert_eq!(parse_complex("1.5-0.25i").unwrap(), c(1.5, -0.25));
        assert_eq!(parse_complex("1e-3+2e-4i").unwrap(), c(1e-3, 2e-4));
        assert!(parse_complex("nonsense").is_err());
    }

    #[test]
    fn foreign_generator_is_rejected() {
        let sl2 = build_algebra("sl2").unwrap();
        let mut bad = LieElement::zero();
        bad.coeffs.insert(7, c(1.0, 0.0));
        assert!(matches!(
            sl2.commutator(&bad, &LieElement::basis(0)),
            Err(Error::ForeignGenerator { .. })
        ));
    }
}
