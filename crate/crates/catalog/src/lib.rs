//! Built-in verified instances addressable by name.
//!
//! Finite-dimensional Hopf algebras (group algebras, the superline) and
//! degree-truncated graded families (braided line, quantum plane). Every
//! constructor routes through the checked structure constructors, so a
//! returned instance has already passed its full axiom suite; graded
//! instances pass with skips on the blocks above their cutoff.

#![forbid(unsafe_code)]

mod basics;
mod graded;

pub use basics::{make_group_bialgebra, make_superline};
pub use graded::{
    check_graded_up_to, make_braided_line_truncated, make_quantum_plane_truncated, q_binomial,
    GradedFamily, GradedStructure,
};

use braided_structures::{BraidedBialgebra, BraidedHopf, CheckReport, StructureError};
use exact_linalg::{parse_scalar, LinError};

#[derive(Debug, thiserror::Error)]
pub enum CatalogError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error(transparent)]
    Structure(#[from] StructureError),
}

impl From<LinError> for CatalogError {
    fn from(e: LinError) -> CatalogError {
        CatalogError::Structure(e.into())
    }
}

/// A named instance: either an ordinary Hopf algebra or a graded one.
pub enum CatalogInstance {
    Hopf(BraidedHopf),
    Graded(GradedStructure),
}

impl CatalogInstance {
    pub fn hopf(&self) -> &BraidedHopf {
        match self {
            CatalogInstance::Hopf(h) => h,
            CatalogInstance::Graded(g) => g.hopf(),
        }
    }

    pub fn bialgebra(&self) -> &BraidedBialgebra {
        self.hopf().bialgebra()
    }

    pub fn check(&self) -> CheckReport {
        self.hopf().check()
    }
}

/// Resolves a catalog name such as `zn:3`, `superline`,
/// `bline:q=2:deg=4` or `qplane:q=1/2:deg=3`.
pub fn instance(name: &str) -> Result<CatalogInstance, CatalogError> {
    let parts: Vec<&str> = name.split(':').collect();
    match parts.as_slice() {
        ["superline"] => Ok(CatalogInstance::Hopf(make_superline())),
        ["zn", n] => {
            let n: usize = n.parse().map_err(|_| {
                CatalogError::InvalidParameter(format!("`{n}` is not a group order"))
            })?;
            Ok(CatalogInstance::Hopf(make_group_bialgebra(n)?))
        }
        ["bline", q, deg] => {
            let (q, deg) = parse_graded_args(q, deg)?;
            Ok(CatalogInstance::Graded(make_braided_line_truncated(q, deg)?))
        }
        ["qplane", q, deg] => {
            let (q, deg) = parse_graded_args(q, deg)?;
            Ok(CatalogInstance::Graded(make_quantum_plane_truncated(q, deg)?))
        }
        _ => Err(CatalogError::InvalidParameter(format!(
            "unknown catalog name `{name}`; try `catalog list`"
        ))),
    }
}

fn parse_graded_args(q: &str, deg: &str) -> Result<(exact_linalg::Scalar, usize), CatalogError> {
    let q = q.strip_prefix("q=").ok_or_else(|| {
        CatalogError::InvalidParameter(format!("expected `q=<p/q>`, got `{q}`"))
    })?;
    let q = parse_scalar(q).map_err(|e| CatalogError::InvalidParameter(e.to_string()))?;
    let deg = deg.strip_prefix("deg=").ok_or_else(|| {
        CatalogError::InvalidParameter(format!("expected `deg=<d>`, got `{deg}`"))
    })?;
    let deg: usize = deg.parse().map_err(|_| {
        CatalogError::InvalidParameter(format!("`{deg}` is not a degree bound"))
    })?;
    Ok((q, deg))
}

/// Name patterns with short descriptions, for `catalog list`.
pub fn listing() -> Vec<(&'static str, &'static str)> {
    vec![
        ("zn:<n>", "group algebra of Z_n with the flip braiding"),
        ("superline", "one nilpotent generator with the sign braiding"),
        (
            "bline:q=<p/q>:deg=<d>",
            "braided line, q-binomial coproduct, truncated above degree d",
        ),
        (
            "qplane:q=<p/q>:deg=<d>",
            "quantum plane yx = q xy, truncated above total degree d",
        ),
    ]
}
