//! Matrix models of `su(p,q)`, `sp(2p)` and `so*(2p)` over the Gaussian
//! rationals, their complex structures, diagonal discs, the inclusions into
//! `su(p,p)` and the pairing used by the diagonal-disc test.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{int, rat, Rational};

/// `re + im·i` with rational parts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussianRational { re, im }
    }

    pub fn real(re: Rational) -> Self {
        GaussianRational::new(re, Rational::zero())
    }

    pub fn imag(im: Rational) -> Self {
        GaussianRational::new(Rational::zero(), im)
    }

    pub fn zero() -> Self {
        GaussianRational::real(Rational::zero())
    }

    pub fn one() -> Self {
        GaussianRational::real(Rational::one())
    }

    pub fn i() -> Self {
        GaussianRational::imag(Rational::one())
    }

    pub fn conj(self) -> Self {
        GaussianRational::new(self.re, -self.im)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn scale(self, k: Rational) -> Self {
        GaussianRational::new(self.re * k, self.im * k)
    }
}

impl Add for GaussianRational {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        GaussianRational::new(self.re + o.re, self.im + o.im)
    }
}

impl Sub for GaussianRational {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        GaussianRational::new(self.re - o.re, self.im - o.im)
    }
}

impl Mul for GaussianRational {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        GaussianRational::new(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )
    }
}

impl Neg for GaussianRational {
    type Output = Self;
    fn neg(self) -> Self {
        GaussianRational::new(-self.re, -self.im)
    }
}

fn frac(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

impl fmt::Display for GaussianRational {
    /// `a/b+c/d*i`, always with explicit denominators.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.im < Rational::zero() { "-" } else { "+" };
        let im = if self.im < Rational::zero() {
            -self.im
        } else {
            self.im
        };
        write!(f, "{}{sign}{}*i", frac(&self.re), frac(&im))
    }
}

/// Square complex-rational matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CMatrix {
    n: usize,
    data: Vec<GaussianRational>,
}

impl CMatrix {
    pub fn zeros(n: usize) -> Self {
        CMatrix {
            n,
            data: vec![GaussianRational::zero(); n * n],
        }
    }

    pub fn diag(entries: &[GaussianRational]) -> Self {
        let mut m = CMatrix::zeros(entries.len());
        for (i, &e) in entries.iter().enumerate() {
            m.set(i, i, e);
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<GaussianRational>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Dimension {
                expected: n,
                found: rows.iter().map(Vec::len).find(|&l| l != n).unwrap_or(n),
            });
        }
        Ok(CMatrix {
            n,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, r: usize, c: usize) -> GaussianRational {
        self.data[r * self.n + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: GaussianRational) {
        self.data[r * self.n + c] = v;
    }

    pub fn trace(&self) -> GaussianRational {
        (0..self.n).fold(GaussianRational::zero(), |acc, i| acc + self.get(i, i))
    }

    pub fn mul(&self, other: &CMatrix) -> Result<CMatrix> {
        self.same_size(other)?;
        let n = self.n;
        let mut out = CMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let v = out.get(i, j) + a * other.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    pub fn sub(&self, other: &CMatrix) -> Result<CMatrix> {
        self.same_size(other)?;
        Ok(CMatrix {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| *a - *b)
                .collect(),
        })
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(GaussianRational::is_zero)
    }

    fn same_size(&self, other: &CMatrix) -> Result<()> {
        if self.n != other.n {
            return Err(Error::Dimension {
                expected: self.n,
                found: other.n,
            });
        }
        Ok(())
    }

    /// Row-major dump, one row per line, entries as `a/b+c/d*i`.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for r in 0..self.n {
            let row: Vec<String> = (0..self.n).map(|c| format!("{}", self.get(r, c))).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }
}

/// The matrix models.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Model {
    Su { p: usize, q: usize },
    Sp { p: usize },
    SoStar { p: usize },
}

impl Model {
    pub fn size(&self) -> usize {
        match *self {
            Model::Su { p, q } => p + q,
            Model::Sp { p } | Model::SoStar { p } => 2 * p,
        }
    }

    /// The block conditions of the model.
    pub fn contains(&self, x: &CMatrix) -> bool {
        if x.size() != self.size() {
            return false;
        }
        let p = match *self {
            Model::Su { p, .. } | Model::Sp { p } | Model::SoStar { p } => p,
        };
        let n = self.size();
        // Upper-left and lower-right blocks skew-Hermitian, lower-left equal
        // to the adjoint of upper-right.
        for i in 0..n {
            for j in 0..n {
                let same_block = (i < p) == (j < p);
                if same_block && x.get(i, j) != -x.get(j, i).conj() {
                    return false;
                }
                if i >= p && j < p && x.get(i, j) != x.get(j, i).conj() {
                    return false;
                }
            }
        }
        match *self {
            Model::Su { .. } => x.trace().is_zero(),
            Model::Sp { p } | Model::SoStar { p } => {
                let sign = if matches!(self, Model::Sp { .. }) {
                    GaussianRational::one()
                } else {
                    -GaussianRational::one()
                };
                for i in 0..p {
                    for j in 0..p {
                        // lower-right is the conjugate of upper-left
                        if x.get(p + i, p + j) != x.get(i, j).conj() {
                            return false;
                        }
                        // B^t = ±B
                        if x.get(j, p + i) != sign * x.get(i, p + j) {
                            return false;
                        }
                    }
                }
                true
            }
        }
    }
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Model::Su { p, q } => write!(f, "su({p},{q})"),
            Model::Sp { p } => write!(f, "sp({})", 2 * p),
            Model::SoStar { p } => write!(f, "so*({})", 2 * p),
        }
    }
}

/// A matrix known to lie in its model.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModelElement {
    model: Model,
    matrix: CMatrix,
}

impl ModelElement {
    pub fn new(model: Model, matrix: CMatrix) -> Result<Self> {
        if !model.contains(&matrix) {
            return Err(Error::Internal(format!(
                "matrix is not in the {model} model"
            )));
        }
        Ok(ModelElement { model, matrix })
    }

    pub fn model(&self) -> Model {
        self.model
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.matrix
    }
}

fn i_times(k: Rational) -> GaussianRational {
    GaussianRational::imag(k)
}

/// `Z_{p,q} = i/(p+q)·diag(q·1_p, -p·1_q)` for `su(p,q)`, and
/// `Z = i/2·diag(1_p, -1_p)` for `sp(2p)` and `so*(2p)`.
pub fn complex_structure(model: Model) -> ModelElement {
    let entries: Vec<GaussianRational> = match model {
        Model::Su { p, q } => {
            let n = (p + q) as i64;
            (0..p)
                .map(|_| i_times(rat(q as i64, n)))
                .chain((0..q).map(|_| i_times(rat(-(p as i64), n))))
                .collect()
        }
        Model::Sp { p } | Model::SoStar { p } => (0..p)
            .map(|_| i_times(rat(1, 2)))
            .chain((0..p).map(|_| i_times(rat(-1, 2))))
            .collect(),
    };
    ModelElement::new(model, CMatrix::diag(&entries)).expect("complex structure lies in its model")
}

/// `Z_{1,1} = i/2·diag(1,-1)`, the complex structure of the disc.
pub fn z_disc() -> ModelElement {
    complex_structure(Model::Su { p: 1, q: 1 })
}

fn check_disc_input(x: &ModelElement) -> Result<()> {
    if x.model != (Model::Su { p: 1, q: 1 }) {
        return Err(Error::Domain(format!(
            "expected an su(1,1) element, got {}",
            x.model
        )));
    }
    Ok(())
}

/// The diagonal disc `su(1,1) → su(p,q)`. For `p ≥ q` the first `p-q`
/// coordinates are left out; for `p < q` the last `q-p`.
pub fn disc_su(p: usize, q: usize, x: &ModelElement) -> Result<ModelElement> {
    check_disc_input(x)?;
    let m = &x.matrix;
    let (x00, x01, x10, x11) = (m.get(0, 0), m.get(0, 1), m.get(1, 0), m.get(1, 1));
    let r = p.min(q);
    let pos0 = p - r;
    let mut out = CMatrix::zeros(p + q);
    for j in 0..r {
        let (a, b) = (pos0 + j, p + j);
        out.set(a, a, x00);
        out.set(a, b, x01);
        out.set(b, a, x10);
        out.set(b, b, x11);
    }
    ModelElement::new(Model::Su { p, q }, out)
}

/// The disc `d_p: su(1,1) → so*(2p)` for odd `p = 2l+1`, in blocks of
/// sizes `(l,1,l | l,1,l)`.
pub fn disc_sostar(p: usize, x: &ModelElement) -> Result<ModelElement> {
    check_disc_input(x)?;
    if p % 2 == 0 || p < 3 {
        return Err(Error::Domain(format!("d_p needs odd p >= 3, got p = {p}")));
    }
    let l = (p - 1) / 2;
    let m = &x.matrix;
    let (x00, x01, x10, x11) = (m.get(0, 0), m.get(0, 1), m.get(1, 0), m.get(1, 1));
    // start offsets of the six blocks
    let b = [0, l, l + 1, p, p + l, p + l + 1];
    let mut out = CMatrix::zeros(2 * p);
    for j in 0..l {
        out.set(b[0] + j, b[0] + j, x00);
        out.set(b[0] + j, b[5] + j, x01);
        out.set(b[2] + j, b[2] + j, x00);
        out.set(b[2] + j, b[3] + j, -x01);
        out.set(b[3] + j, b[2] + j, -x10);
        out.set(b[3] + j, b[3] + j, x11);
        out.set(b[5] + j, b[0] + j, x10);
        out.set(b[5] + j, b[5] + j, x11);
    }
    ModelElement::new(Model::SoStar { p }, out)
}

/// A diagonal disc of `so*(2p)` for even `p = 2m`: `x00·1_p` and `x11·1_p`
/// on the diagonal, with the skew block `x01·[[0,1_m],[-1_m,0]]`.
pub fn disc_sostar_even(p: usize, x: &ModelElement) -> Result<ModelElement> {
    check_disc_input(x)?;
    if p % 2 == 1 {
        return Err(Error::Domain(format!("even p required, got p = {p}")));
    }
    let half = p / 2;
    let m = &x.matrix;
    let (x00, x01, x10, x11) = (m.get(0, 0), m.get(0, 1), m.get(1, 0), m.get(1, 1));
    let mut out = CMatrix::zeros(2 * p);
    for j in 0..p {
        out.set(j, j, x00);
        out.set(p + j, p + j, x11);
    }
    for j in 0..half {
        out.set(j, p + half + j, x01);
        out.set(half + j, p + j, -x01);
        out.set(p + half + j, j, x10);
        out.set(p + j, half + j, -x10);
    }
    ModelElement::new(Model::SoStar { p }, out)
}

/// A diagonal disc of `sp(2p)`: the same matrix as `d_{p,p}`.
pub fn disc_sp(p: usize, x: &ModelElement) -> Result<ModelElement> {
    let d = disc_su(p, p, x)?;
    ModelElement::new(Model::Sp { p }, d.matrix)
}

/// `ι₁: sp(2p) → su(p,p)` and `ι₂: so*(2p) → su(p,p)`, both the identity on
/// matrices in these bases.
pub fn include(x: &ModelElement) -> Result<ModelElement> {
    match x.model {
        Model::Sp { p } | Model::SoStar { p } => {
            ModelElement::new(Model::Su { p, q: p }, x.matrix.clone())
        }
        Model::Su { .. } => Err(Error::Domain("include expects sp or so* elements".into())),
    }
}

/// `2(n₁+n₂)·Re Tr(XY)` on `su(n₁,n₂)`; with `n₁ = n₂ = p` this is `4p·Tr`.
pub fn killing_pairing(x: &ModelElement, y: &ModelElement) -> Result<Rational> {
    scaled_pairing(x, y, None)
}

/// The trace pairing with an explicit scale in place of `2(n₁+n₂)`.
pub fn scaled_pairing(
    x: &ModelElement,
    y: &ModelElement,
    scale: Option<Rational>,
) -> Result<Rational> {
    let Model::Su { p, q } = x.model else {
        return Err(Error::Domain(format!(
            "pairing is defined on su models, got {}",
            x.model
        )));
    };
    if y.model != x.model {
        return Err(Error::Domain(format!(
            "model mismatch: {} vs {}",
            x.model, y.model
        )));
    }
    let t = x.matrix.mul(&y.matrix)?.trace();
    if !t.im.is_zero() {
        return Err(Error::Domain(format!("trace {t} is not real")));
    }
    Ok(scale.unwrap_or_else(|| int(2 * (p + q) as i64)) * t.re)
}

/// `⟨ρdZ - d′Z, Z′⟩`; zero exactly when the map is tight.
pub fn diagd_value(
    rho_d_z: &ModelElement,
    dprime_z: &ModelElement,
    zprime: &ModelElement,
) -> Result<Rational> {
    if rho_d_z.model != dprime_z.model || dprime_z.model != zprime.model {
        return Err(Error::Domain(format!(
            "model mismatch: {}, {}, {}",
            rho_d_z.model, dprime_z.model, zprime.model
        )));
    }
    let diff = ModelElement {
        model: rho_d_z.model,
        matrix: rho_d_z.matrix.sub(&dprime_z.matrix)?,
    };
    killing_pairing(&diff, zprime)
}

/// Which inclusion into `su(p,p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Inclusion {
    /// `sp(2p) → su(p,p)`.
    Iota1,
    /// `so*(2p) → su(p,p)`.
    Iota2,
}

/// The diagonal-disc value of `ι₁` or `ι₂` for a given `p`. For `ι₂` with
/// odd `p` the source disc is `d_p`.
pub fn inclusion_value(which: Inclusion, p: usize) -> Result<Rational> {
    let z = z_disc();
    let source = match which {
        Inclusion::Iota1 => disc_sp(p, &z)?,
        Inclusion::Iota2 if p % 2 == 1 => disc_sostar(p, &z)?,
        Inclusion::Iota2 => disc_sostar_even(p, &z)?,
    };
    let rho_d_z = include(&source)?;
    let dprime_z = disc_su(p, p, &z)?;
    let zprime = complex_structure(Model::Su { p, q: p });
    diagd_value(&rho_d_z, &dprime_z, &zprime)
}

/// Block-diagonal `su(l,s) ⊕ su(p-l,q-s) → su(p,q)`: positive coordinates
/// are those of the first factor then the second, likewise the negative
/// ones.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BlockInclusion {
    pub l: usize,
    pub s: usize,
    pub p: usize,
    pub q: usize,
}

pub fn block_inclusion_su(l: usize, s: usize, p: usize, q: usize) -> Result<BlockInclusion> {
    if l > p || s > q || l > s || p - l > q - s {
        return Err(Error::Constraint(format!(
            "block inclusion needs l <= s and p-l <= q-s, got l={l}, s={s}, p={p}, q={q}"
        )));
    }
    Ok(BlockInclusion { l, s, p, q })
}

/// The same placement without the ordering constraints, for any
/// `l ≤ p`, `s ≤ q`; either block may then be compact.
pub fn block_inclusion_general(l: usize, s: usize, p: usize, q: usize) -> Result<BlockInclusion> {
    if l > p || s > q {
        return Err(Error::Constraint(format!(
            "block inclusion needs l <= p and s <= q, got l={l}, s={s}, p={p}, q={q}"
        )));
    }
    Ok(BlockInclusion { l, s, p, q })
}

impl BlockInclusion {
    fn embed(&self, first: &CMatrix, second: &CMatrix) -> Result<ModelElement> {
        let (l, s, p, q) = (self.l, self.s, self.p, self.q);
        let coord1: Vec<usize> = (0..l).chain(p..p + s).collect();
        let coord2: Vec<usize> = (l..p).chain(p + s..p + q).collect();
        let mut out = CMatrix::zeros(p + q);
        for (m, coords) in [(first, &coord1), (second, &coord2)] {
            for (i, &ci) in coords.iter().enumerate() {
                for (j, &cj) in coords.iter().enumerate() {
                    out.set(ci, cj, m.get(i, j));
                }
            }
        }
        ModelElement::new(Model::Su { p, q }, out)
    }

    pub fn apply(&self, first: &ModelElement, second: &ModelElement) -> Result<ModelElement> {
        let m1 = Model::Su {
            p: self.l,
            q: self.s,
        };
        let m2 = Model::Su {
            p: self.p - self.l,
            q: self.q - self.s,
        };
        if first.model != m1 || second.model != m2 {
            return Err(Error::Domain(format!(
                "expected elements of {m1} and {m2}, got {} and {}",
                first.model, second.model
            )));
        }
        self.embed(&first.matrix, &second.matrix)
    }

    /// The diagonal-disc value of the inclusion, using the diagonal disc of
    /// each factor.
    pub fn diagd_value(&self) -> Result<Rational> {
        let z = z_disc();
        let d1 = disc_su(self.l, self.s, &z)?;
        let d2 = disc_su(self.p - self.l, self.q - self.s, &z)?;
        let rho_d_z = self.apply(&d1, &d2)?;
        let dprime_z = disc_su(self.p, self.q, &z)?;
        let zprime = complex_structure(Model::Su {
            p: self.p,
            q: self.q,
        });
        diagd_value(&rho_d_z, &dprime_z, &zprime)
    }
}
