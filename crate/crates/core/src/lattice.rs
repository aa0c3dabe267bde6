//! Planar lattices: generator matrices, adjoint and dual lattices, the
//! standard symplectic form, and certified point enumeration.
//!
//! A lattice Λ = MZ² is stored through the four entries of a generator
//! matrix M whose *columns* are the basis vectors v1, v2. Generators are not
//! unique — M and M·B generate the same point set for every integer matrix B
//! of determinant 1 — so all set-level comparisons in this crate go through
//! enumerated point sets, never through matrix entries.
//!
//! The key quantities attached to a lattice:
//!
//! - volume  vol(Λ) = |det M|, density δ(Λ) = 1/vol(Λ)
//! - dual    Λ⊥ = M^{-T} Z²
//! - adjoint Λ° = J M^{-T} Z², J = [[0,1],[-1,0]] (a 90°-rotated dual; for
//!   any planar lattice Λ° coincides with vol(Λ)^{-1} Λ up to basis change)
//!
//! `points_in_radius` is the enumeration backend for every lattice sum. It
//! reduces the basis (Lagrange/Gauss), bounds the integer coordinates with
//! the rows of the inverse generator and filters by the exact radius, so the
//! returned set is provably complete.

use crate::error::{Error, Result};
use crate::precision::Precision;

/// A point of the time-frequency plane.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Vec2 {
    pub x: f64,
    pub y: f64,
}

impl Vec2 {
    pub fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    pub fn norm_sq(self) -> f64 {
        self.x * self.x + self.y * self.y
    }

    pub fn norm(self) -> f64 {
        self.norm_sq().sqrt()
    }

    pub fn add(self, o: Vec2) -> Vec2 {
        Vec2::new(self.x + o.x, self.y + o.y)
    }

    pub fn sub(self, o: Vec2) -> Vec2 {
        Vec2::new(self.x - o.x, self.y - o.y)
    }

    pub fn scale(self, c: f64) -> Vec2 {
        Vec2::new(c * self.x, c * self.y)
    }

    pub fn dot(self, o: Vec2) -> f64 {
        self.x * o.x + self.y * o.y
    }
}

/// Standard symplectic form σ(z, z') = x·ω' − ω·x'.
///
/// Antisymmetric, so σ(z, z) = 0, and invariant under symplectic matrices
/// (in the plane: all matrices of determinant 1).
pub fn symplectic_form(z: Vec2, zp: Vec2) -> f64 {
    z.x * zp.y - z.y * zp.x
}

/// Generator determinants below this magnitude are rejected at construction.
pub const MIN_DET: f64 = 1e-14;

/// A full-rank lattice Λ = MZ² in the plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Lattice2D {
    m11: f64,
    m12: f64,
    m21: f64,
    m22: f64,
}

impl Lattice2D {
    /// Build from matrix entries; columns (m11, m21) and (m12, m22) are the
    /// basis vectors.
    pub fn new(m11: f64, m12: f64, m21: f64, m22: f64) -> Result<Self> {
        for v in [m11, m12, m21, m22] {
            if !v.is_finite() {
                return Err(Error::InvalidInput(
                    "generator entries must be finite".into(),
                ));
            }
        }
        let det = m11 * m22 - m12 * m21;
        if det.abs() < MIN_DET {
            return Err(Error::DegenerateLattice { det });
        }
        Ok(Self { m11, m12, m21, m22 })
    }

    pub fn from_basis(v1: Vec2, v2: Vec2) -> Result<Self> {
        Self::new(v1.x, v2.x, v1.y, v2.y)
    }

    /// Square lattice α Z × α Z of the given density (α = δ^{-1/2}).
    pub fn square(density: f64) -> Result<Self> {
        if !(density.is_finite() && density > 0.0) {
            return Err(Error::InvalidInput(format!(
                "density must be positive, got {density}"
            )));
        }
        let a = density.sqrt().recip();
        Self::new(a, 0.0, 0.0, a)
    }

    /// Hexagonal lattice of the given density, with basis
    /// v1 = a(1, 0), v2 = a(1/2, √3/2) scaled so vol(Λ) = 1/density.
    /// The deep hole sits at (v1 + v2)/3.
    pub fn hexagonal(density: f64) -> Result<Self> {
        if !(density.is_finite() && density > 0.0) {
            return Err(Error::InvalidInput(format!(
                "density must be positive, got {density}"
            )));
        }
        let volume = density.recip();
        // |det| = a^2 * sqrt(3)/2
        let a = (2.0 * volume / 3.0_f64.sqrt()).sqrt();
        Self::new(a, 0.5 * a, 0.0, a * 3.0_f64.sqrt() / 2.0)
    }

    pub fn v1(&self) -> Vec2 {
        Vec2::new(self.m11, self.m21)
    }

    pub fn v2(&self) -> Vec2 {
        Vec2::new(self.m12, self.m22)
    }

    pub fn det(&self) -> f64 {
        self.m11 * self.m22 - self.m12 * self.m21
    }

    pub fn volume(&self) -> f64 {
        self.det().abs()
    }

    pub fn density(&self) -> f64 {
        self.volume().recip()
    }

    /// Adjoint lattice Λ° = J M^{-T} Z².
    pub fn adjoint(&self) -> Lattice2D {
        let d = self.det();
        // M^{-T} = (1/det) [[m22, -m21], [-m12, m11]]; left-multiply by J.
        Lattice2D {
            m11: -self.m12 / d,
            m12: self.m11 / d,
            m21: -self.m22 / d,
            m22: self.m21 / d,
        }
    }

    /// Dual lattice Λ⊥ = M^{-T} Z².
    pub fn dual(&self) -> Lattice2D {
        let d = self.det();
        Lattice2D {
            m11: self.m22 / d,
            m12: -self.m21 / d,
            m21: -self.m12 / d,
            m22: self.m11 / d,
        }
    }

    /// The lattice cΛ.
    pub fn scaled(&self, c: f64) -> Result<Lattice2D> {
        if !(c.is_finite() && c > 0.0) {
            return Err(Error::InvalidInput(format!(
                "scale factor must be positive, got {c}"
            )));
        }
        Lattice2D::new(c * self.m11, c * self.m12, c * self.m21, c * self.m22)
    }

    /// The lattice point k·v1 + l·v2.
    pub fn point(&self, k: i64, l: i64) -> Vec2 {
        let (k, l) = (k as f64, l as f64);
        Vec2::new(
            k * self.m11 + l * self.m12,
            k * self.m21 + l * self.m22,
        )
    }

    /// Map generator coordinates (u, v) to the plane point u·v1 + v·v2.
    pub fn coords_to_point(&self, u: f64, v: f64) -> Vec2 {
        Vec2::new(
            u * self.m11 + v * self.m12,
            u * self.m21 + v * self.m22,
        )
    }

    /// A Lagrange-reduced basis (w1, w2) for the same point set, with
    /// |w1| <= |w2| and |<w1,w2>| <= |w1|²/2.
    pub(crate) fn reduced_basis(&self) -> (Vec2, Vec2) {
        let mut w1 = self.v1();
        let mut w2 = self.v2();
        for _ in 0..64 {
            if w2.norm_sq() < w1.norm_sq() {
                std::mem::swap(&mut w1, &mut w2);
            }
            let mu = (w1.dot(w2) / w1.norm_sq()).round();
            if mu == 0.0 {
                break;
            }
            w2 = w2.sub(w1.scale(mu));
        }
        if w2.norm_sq() < w1.norm_sq() {
            std::mem::swap(&mut w1, &mut w2);
        }
        (w1, w2)
    }

    /// Norm of a shortest nonzero lattice vector.
    pub fn shortest_nonzero_norm(&self) -> f64 {
        self.reduced_basis().0.norm()
    }

    /// Upper bound for the covering radius: every plane point is within this
    /// distance of a lattice point. (Half the basis-length sum of a reduced
    /// basis.)
    pub(crate) fn covering_radius_bound(&self) -> f64 {
        let (w1, w2) = self.reduced_basis();
        0.5 * (w1.norm() + w2.norm())
    }

    /// Smallest radius R with a certified bound
    /// sum over |λ + z| > R of e^{-c |λ+z|²}  <  eps
    /// for every shift z. Derived by comparing cells of area vol(Λ) against
    /// the radial Gaussian integral:
    /// tail(R) <= π/(c·vol) · e^{-c v²} · (1 + ρ/v),  v = R − 2ρ,
    /// where ρ is the covering-radius bound.
    pub(crate) fn gaussian_tail_radius(&self, c: f64, eps: f64) -> f64 {
        debug_assert!(c > 0.0 && eps > 0.0);
        let vol = self.volume();
        let rho = self.covering_radius_bound();
        let lead = std::f64::consts::PI / (c * vol);
        let mut v = ((lead / eps).ln().max(0.0) / c).sqrt().max(0.5).max(rho);
        for _ in 0..1000 {
            let bound = lead * (-c * v * v).exp() * (1.0 + rho / v);
            if bound < eps {
                break;
            }
            v = v * 1.05 + 0.1;
        }
        v + 2.0 * rho
    }

    /// Exactly the set {λ ∈ Λ : |λ| <= r}, without duplicates.
    ///
    /// Integer coordinates are bounded through the rows of the inverse of the
    /// reduced generator, then filtered by the exact radius.
    pub fn points_in_radius(&self, r: f64, p: &Precision) -> Result<Vec<Vec2>> {
        if !(r.is_finite() && r > 0.0) {
            return Err(Error::InvalidInput(format!(
                "radius must be positive, got {r}"
            )));
        }
        if r > p.max_radius {
            return Err(Error::CapExceeded {
                what: "radius",
                needed: r,
                cap: p.max_radius,
            });
        }
        let (w1, w2) = self.reduced_basis();
        let d = w1.x * w2.y - w1.y * w2.x;
        // Rows of the inverse of [w1 w2]; |k| <= |row1| r, |l| <= |row2| r.
        let row1 = Vec2::new(w2.y / d, -w2.x / d);
        let row2 = Vec2::new(-w1.y / d, w1.x / d);
        let kmax = (row1.norm() * r).floor() as i64 + 1;
        let lmax = (row2.norm() * r).floor() as i64 + 1;
        let count = (2 * kmax + 1) as f64 * (2 * lmax + 1) as f64;
        if count > p.max_terms as f64 {
            return Err(Error::CapExceeded {
                what: "terms",
                needed: count,
                cap: p.max_terms as f64,
            });
        }
        let r_sq = r * r * (1.0 + 1e-14);
        let mut pts = Vec::new();
        for k in -kmax..=kmax {
            for l in -lmax..=lmax {
                let pt = w1.scale(k as f64).add(w2.scale(l as f64));
                if pt.norm_sq() <= r_sq {
                    pts.push(pt);
                }
            }
        }
        Ok(pts)
    }
}

/// A separable (rectangular) lattice αZ × βZ.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeparableLattice {
    alpha: f64,
    beta: f64,
}

impl SeparableLattice {
    pub fn new(alpha: f64, beta: f64) -> Result<Self> {
        if !(alpha.is_finite() && alpha > 0.0 && beta.is_finite() && beta > 0.0) {
            return Err(Error::InvalidInput(format!(
                "lattice parameters must be positive, got ({alpha}, {beta})"
            )));
        }
        Ok(Self { alpha, beta })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn volume(&self) -> f64 {
        self.alpha * self.beta
    }

    pub fn density(&self) -> f64 {
        (self.alpha * self.beta).recip()
    }

    pub fn as_lattice2d(&self) -> Lattice2D {
        Lattice2D {
            m11: self.alpha,
            m12: 0.0,
            m21: 0.0,
            m22: self.beta,
        }
    }

    /// Adjoint lattice (1/β)Z × (1/α)Z.
    pub fn adjoint(&self) -> SeparableLattice {
        SeparableLattice {
            alpha: self.beta.recip(),
            beta: self.alpha.recip(),
        }
    }

    /// Dual lattice (1/α)Z × (1/β)Z.
    pub fn dual(&self) -> SeparableLattice {
        SeparableLattice {
            alpha: self.alpha.recip(),
            beta: self.beta.recip(),
        }
    }

    pub fn scaled(&self, c: f64) -> Result<SeparableLattice> {
        SeparableLattice::new(c * self.alpha, c * self.beta)
    }
}

/// Lattice specification grammar shared with the command line:
/// `square:<density>`, `hex:<density>`, `rect:<alpha>,<beta>`,
/// `mat:<m11>,<m12>,<m21>,<m22>`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum LatticeSpec {
    Square { density: f64 },
    Hex { density: f64 },
    Rect { alpha: f64, beta: f64 },
    Mat { m11: f64, m12: f64, m21: f64, m22: f64 },
}

impl LatticeSpec {
    pub fn parse(s: &str) -> Result<Self> {
        let bad = |msg: &str| Error::InvalidInput(format!("lattice spec `{s}`: {msg}"));
        let (head, rest) = s
            .split_once(':')
            .ok_or_else(|| bad("expected `<kind>:<params>`"))?;
        let nums: Vec<f64> = rest
            .split(',')
            .map(|t| t.trim().parse::<f64>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| bad("parameters must be numbers"))?;
        match (head, nums.as_slice()) {
            ("square", [d]) => Ok(LatticeSpec::Square { density: *d }),
            ("hex", [d]) => Ok(LatticeSpec::Hex { density: *d }),
            ("rect", [a, b]) => Ok(LatticeSpec::Rect {
                alpha: *a,
                beta: *b,
            }),
            ("mat", [m11, m12, m21, m22]) => Ok(LatticeSpec::Mat {
                m11: *m11,
                m12: *m12,
                m21: *m21,
                m22: *m22,
            }),
            ("square" | "hex", _) => Err(bad("expected one parameter")),
            ("rect", _) => Err(bad("expected two parameters")),
            ("mat", _) => Err(bad("expected four parameters")),
            _ => Err(bad("kind must be square, hex, rect or mat")),
        }
    }

    pub fn to_lattice(&self) -> Result<Lattice2D> {
        match *self {
            LatticeSpec::Square { density } => Lattice2D::square(density),
            LatticeSpec::Hex { density } => Lattice2D::hexagonal(density),
            LatticeSpec::Rect { alpha, beta } => {
                Ok(SeparableLattice::new(alpha, beta)?.as_lattice2d())
            }
            LatticeSpec::Mat { m11, m12, m21, m22 } => Lattice2D::new(m11, m12, m21, m22),
        }
    }

    /// The separable form, when the spec describes a rectangular lattice.
    pub fn separable(&self) -> Option<Result<SeparableLattice>> {
        match *self {
            LatticeSpec::Square { density } => {
                if density <= 0.0 {
                    return Some(Err(Error::InvalidInput(format!(
                        "density must be positive, got {density}"
                    ))));
                }
                let a = density.sqrt().recip();
                Some(SeparableLattice::new(a, a))
            }
            LatticeSpec::Rect { alpha, beta } => Some(SeparableLattice::new(alpha, beta)),
            _ => None,
        }
    }
}

impl std::str::FromStr for LatticeSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        LatticeSpec::parse(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn sorted_points(mut pts: Vec<Vec2>) -> Vec<Vec2> {
        pts.sort_by(|a, b| (a.x, a.y).partial_cmp(&(b.x, b.y)).unwrap());
        pts
    }

    /// Set equality of two enumerations up to 1e-12 per coordinate.
    fn same_point_set(a: Vec<Vec2>, b: Vec<Vec2>) -> bool {
        if a.len() != b.len() {
            return false;
        }
        let (a, b) = (sorted_points(a), sorted_points(b));
        a.iter()
            .zip(&b)
            .all(|(p, q)| (p.x - q.x).abs() < 1e-12 && (p.y - q.y).abs() < 1e-12)
    }

    #[test]
    fn rejects_degenerate_generator() {
        assert!(matches!(
            Lattice2D::new(1.0, 2.0, 2.0, 4.0),
            Err(Error::DegenerateLattice { .. })
        ));
        assert!(Lattice2D::new(1.0, 0.0, 0.0, f64::NAN).is_err());
    }

    #[test]
    fn adjoint_of_separable_swaps_and_inverts() {
        let l = SeparableLattice::new(2.0, 0.5).unwrap();
        let adj = l.adjoint();
        assert!((adj.alpha() - 2.0).abs() < 1e-15); // 1/beta
        assert!((adj.beta() - 0.5).abs() < 1e-15); // 1/alpha
        // Against the matrix route: point sets agree.
        let p = Precision::default();
        let via_mat = l.as_lattice2d().adjoint().points_in_radius(5.0, &p).unwrap();
        let via_sep = adj.as_lattice2d().points_in_radius(5.0, &p).unwrap();
        assert!(same_point_set(via_mat, via_sep));
    }

    #[test]
    fn adjoint_of_z2_is_z2() {
        let z2 = Lattice2D::square(1.0).unwrap();
        let p = Precision::default();
        let a = z2.adjoint().points_in_radius(4.0, &p).unwrap();
        let b = z2.points_in_radius(4.0, &p).unwrap();
        assert!(same_point_set(a, b));
    }

    #[test]
    fn adjoint_of_hexagonal_is_scaled_hexagonal() {
        // Hexagonal lattice of volume 1/2 has adjoint = 2 * (same shape):
        // the adjoint of any planar lattice is vol^{-1} Λ up to basis change.
        let hex = Lattice2D::hexagonal(2.0).unwrap();
        assert!((hex.volume() - 0.5).abs() < 1e-15);
        let p = Precision::default();
        let a = hex.adjoint().points_in_radius(5.0, &p).unwrap();
        let b = hex.scaled(2.0).unwrap().points_in_radius(5.0, &p).unwrap();
        assert!(same_point_set(a, b));
    }

    #[test]
    fn dual_examples() {
        let l = SeparableLattice::new(2.0, 0.5).unwrap().dual();
        assert!((l.alpha() - 0.5).abs() < 1e-15 && (l.beta() - 2.0).abs() < 1e-15);

        let z2 = Lattice2D::square(1.0).unwrap();
        let p = Precision::default();
        assert!(same_point_set(
            z2.dual().points_in_radius(3.0, &p).unwrap(),
            z2.points_in_radius(3.0, &p).unwrap()
        ));

        // (1, 1/2): dual = (1, 2), adjoint = (2, 1).
        let l = SeparableLattice::new(1.0, 0.5).unwrap();
        assert!((l.dual().alpha() - 1.0).abs() < 1e-15);
        assert!((l.dual().beta() - 2.0).abs() < 1e-15);
        assert!((l.adjoint().alpha() - 2.0).abs() < 1e-15);
        assert!((l.adjoint().beta() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn symplectic_form_values() {
        assert_eq!(symplectic_form(Vec2::new(1.0, 0.0), Vec2::new(0.0, 1.0)), 1.0);
        let z = Vec2::new(0.3, -0.7);
        assert_eq!(symplectic_form(z, z), 0.0);
        assert_eq!(
            symplectic_form(Vec2::new(2.0, 3.0), Vec2::new(5.0, 7.0)),
            -1.0
        );
    }

    #[test]
    fn points_in_radius_z2() {
        let z2 = Lattice2D::square(1.0).unwrap();
        let p = Precision::default();
        assert_eq!(z2.points_in_radius(1.0, &p).unwrap().len(), 5);
        assert_eq!(z2.points_in_radius(1.5, &p).unwrap().len(), 9);
    }

    #[test]
    fn points_in_radius_hexagonal_matches_brute_force() {
        let hex = Lattice2D::hexagonal(1.0).unwrap();
        let p = Precision::default();
        let pts = hex.points_in_radius(1.1, &p).unwrap();
        assert_eq!(pts.len(), 7); // origin + first shell of 6

        // Brute-force oracle: integer box [-4, 4]² on the original basis.
        let mut oracle = Vec::new();
        for k in -4..=4i64 {
            for l in -4..=4i64 {
                let pt = hex.point(k, l);
                if pt.norm() <= 1.1 {
                    oracle.push(pt);
                }
            }
        }
        assert!(same_point_set(pts, oracle));
    }

    #[test]
    fn points_in_radius_caps() {
        let z2 = Lattice2D::square(1.0).unwrap();
        let tight = Precision::new(1e-12, 50.0, 50).unwrap();
        assert!(matches!(
            z2.points_in_radius(10.0, &tight),
            Err(Error::CapExceeded { what: "terms", .. })
        ));
        let p = Precision::default();
        assert!(matches!(
            z2.points_in_radius(100.0, &p),
            Err(Error::CapExceeded { what: "radius", .. })
        ));
    }

    #[test]
    fn adjoint_involution_and_volume() {
        let p = Precision::default();
        let lattices = [
            Lattice2D::square(2.0).unwrap(),
            Lattice2D::hexagonal(1.0).unwrap(),
            Lattice2D::new(1.0, 0.3, -0.2, 0.8).unwrap(),
        ];
        for l in lattices {
            let a = l.adjoint();
            assert!((a.volume() - 1.0 / l.volume()).abs() < 1e-12);
            let back = a.adjoint();
            assert!(same_point_set(
                back.points_in_radius(4.0, &p).unwrap(),
                l.points_in_radius(4.0, &p).unwrap()
            ));
        }
    }

    #[test]
    fn gaussian_tail_radius_is_certified() {
        // Brute residual beyond R must stay below eps.
        let lats = [
            Lattice2D::square(1.0).unwrap(),
            Lattice2D::hexagonal(1.0).unwrap(),
            Lattice2D::new(1.3, 0.4, 0.1, 0.9).unwrap(),
        ];
        for l in &lats {
            for c in [0.2, 1.0, 5.0] {
                let eps = 1e-10;
                let r = l.gaussian_tail_radius(c, eps);
                let p = Precision::new(1e-12, 1e4, 100_000_000).unwrap();
                let big = l.points_in_radius(r + 8.0 / c.sqrt(), &p).unwrap();
                let resid: f64 = big
                    .iter()
                    .filter(|q| q.norm() > r)
                    .map(|q| (-c * q.norm_sq()).exp())
                    .sum();
                assert!(resid < eps, "residual {resid} vs eps {eps}");
            }
        }
    }

    #[test]
    fn parse_lattice_specs() {
        assert_eq!(
            LatticeSpec::parse("square:2").unwrap(),
            LatticeSpec::Square { density: 2.0 }
        );
        assert_eq!(
            LatticeSpec::parse("rect:1,0.5").unwrap(),
            LatticeSpec::Rect {
                alpha: 1.0,
                beta: 0.5
            }
        );
        assert!(LatticeSpec::parse("hex:2").is_ok());
        assert!(LatticeSpec::parse("mat:1,0,0,1").is_ok());
        assert!(LatticeSpec::parse("mat:1,0").is_err());
        assert!(LatticeSpec::parse("circle:3").is_err());
        assert!(LatticeSpec::parse("rect:a,b").is_err());

        let sq = LatticeSpec::parse("square:2").unwrap().to_lattice().unwrap();
        assert!((sq.density() - 2.0).abs() < 1e-12);
        let hx = LatticeSpec::parse("hex:2").unwrap().to_lattice().unwrap();
        assert!((hx.density() - 2.0).abs() < 1e-12);
    }

    proptest! {
        /// σ(Sz, Sz') = σ(z, z') for determinant-1 matrices S.
        #[test]
        fn symplectic_invariance(
            a in 0.2f64..3.0, b in -2.0f64..2.0, c in -2.0f64..2.0,
            zx in -3.0f64..3.0, zy in -3.0f64..3.0,
            wx in -3.0f64..3.0, wy in -3.0f64..3.0,
        ) {
            // S = [[a, b], [c, (1+bc)/a]] has det 1.
            let d = (1.0 + b * c) / a;
            let s = |v: Vec2| Vec2::new(a * v.x + b * v.y, c * v.x + d * v.y);
            let z = Vec2::new(zx, zy);
            let w = Vec2::new(wx, wy);
            let lhs = symplectic_form(s(z), s(w));
            let rhs = symplectic_form(z, w);
            prop_assert!((lhs - rhs).abs() < 1e-10 * (1.0 + rhs.abs()));
        }

        /// M and M·B generate identical point sets for B in SL(2, Z).
        #[test]
        fn basis_change_invariance(
            n1 in -3i64..=3, m1 in -3i64..=3, n2 in -3i64..=3,
            which in 0usize..3,
        ) {
            // B as a product of unit shears: always integer, det 1.
            let (mut a, mut b, mut c, mut d) = (1i64, 0, 0, 1);
            for (upper, t) in [(true, n1), (false, m1), (true, n2)] {
                if upper {
                    // right-multiply by [[1, t], [0, 1]]
                    b += a * t;
                    d += c * t;
                } else {
                    // right-multiply by [[1, 0], [t, 1]]
                    a += b * t;
                    c += d * t;
                }
            }
            let lat = [
                Lattice2D::square(2.0).unwrap(),
                Lattice2D::hexagonal(1.0).unwrap(),
                Lattice2D::new(0.9, 0.2, -0.3, 1.1).unwrap(),
            ][which];
            let m = [lat.v1(), lat.v2()];
            let w1 = m[0].scale(a as f64).add(m[1].scale(c as f64));
            let w2 = m[0].scale(b as f64).add(m[1].scale(d as f64));
            let changed = Lattice2D::from_basis(w1, w2).unwrap();
            let p = Precision::new(1e-12, 50.0, 10_000_000).unwrap();
            let s1 = lat.points_in_radius(3.5, &p).unwrap();
            let s2 = changed.points_in_radius(3.5, &p).unwrap();
            prop_assert!(same_point_set(s1, s2));
        }
    }
}
