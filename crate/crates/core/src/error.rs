//! Error type shared by all numerical routines in this crate.

/// Error indicating why a lattice construction or a certified evaluation
/// could not be carried out.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Generator matrix is (numerically) singular; |det| below 1e-14.
    DegenerateLattice { det: f64 },
    /// A precondition on an argument was violated.
    InvalidInput(String),
    /// A certified truncation would need more terms (or a larger radius)
    /// than the `Precision` budget allows.
    CapExceeded {
        what: &'static str,
        needed: f64,
        cap: f64,
    },
    /// The power-law tail of a lattice sum cannot reach the requested
    /// accuracy within the radius budget.
    SlowConvergence { s: f64, required_radius: f64 },
    /// Evaluation too close to a pole of the regularized zeta function.
    PoleProximity { s: f64 },
    /// Operation defined only for separable lattices of integer density.
    NotIntegerDensity { density: f64 },
    /// Operation defined only for separable lattices of even integer density.
    NotEvenDensity { density: f64 },
    /// Input outside the supported parameter region.
    Unsupported(String),
}

impl std::fmt::Display for Error {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Error::DegenerateLattice { det } => {
                write!(f, "generator matrix is singular (det = {det:e})")
            }
            Error::InvalidInput(msg) => write!(f, "invalid input: {msg}"),
            Error::CapExceeded { what, needed, cap } => {
                write!(f, "{what} cap exceeded: need {needed:e}, cap is {cap:e}")
            }
            Error::SlowConvergence { s, required_radius } => write!(
                f,
                "lattice sum at s = {s} converges too slowly (radius {required_radius:e} needed)"
            ),
            Error::PoleProximity { s } => {
                write!(f, "s = {s} is too close to a pole of the zeta function")
            }
            Error::NotIntegerDensity { density } => {
                write!(f, "lattice density {density} is not a positive integer")
            }
            Error::NotEvenDensity { density } => {
                write!(f, "lattice density {density} is not an even positive integer")
            }
            Error::Unsupported(msg) => write!(f, "unsupported: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

/// A `Result` with this crate's error type.
pub type Result<T> = std::result::Result<T, Error>;
