//! Structured check reports: per-equation verdicts with witnesses.
//!
//! Every axiom checker in this workspace reports against a fixed registry of
//! equation identifiers, so reports from different layers can be merged,
//! filtered and serialized uniformly. A verdict is `Pass` only when every
//! basis input of the identity was evaluable and agreed exactly; inputs that
//! touch undefined blocks of a degree-truncated structure are counted and
//! the verdict degrades to `Skipped` (never `Pass`).

use exact_linalg::{format_scalar, Scalar};
use std::fmt;

/// Equation identifiers used across all checkers.
pub mod eq {
    /// Yang–Baxter equation for a braiding.
    pub const YBE: &str = "YBE";
    /// Hexagon for a left-braided space.
    pub const VW: &str = "VW";
    /// Hexagon for a right-braided space.
    pub const WV: &str = "WV";
    /// Cross-braiding versus multiplication of the left factor.
    pub const AWM: &str = "AWm";
    /// Cross-braiding sends 1⊗w to w⊗1.
    pub const UNIT_W: &str = "1W";
    /// Cross-braiding versus multiplication of the right factor.
    pub const VAM: &str = "VAm";
    /// Cross-braiding sends v⊗1 to 1⊗v.
    pub const V_UNIT: &str = "V1";
    /// Braiding versus mult⊗mult (derived).
    pub const PMM: &str = "Pmm";
    /// Cross-braiding versus comultiplication of the left factor.
    pub const PHW: &str = "PHW";
    /// Cross-braiding versus comultiplication of the right factor.
    pub const PVH: &str = "PVH";
    /// Braiding versus comult⊗comult (derived).
    pub const PDD: &str = "PDD";
    /// The coproduct is multiplicative up to the braiding.
    pub const DCM: &str = "Dcm";
    /// Antipode interchange identities (five of them, see context).
    pub const SBRAID: &str = "Sbraid";

    /// Associativity of a multiplication.
    pub const ASSOC: &str = "assoc";
    /// Two-sided unit laws.
    pub const UNIT: &str = "unit";
    /// Coassociativity of a comultiplication.
    pub const COASSOC: &str = "coassoc";
    /// Two-sided counit laws.
    pub const COUNIT: &str = "counit";
    /// The counit is multiplicative.
    pub const EPS_MULT: &str = "eps-mult";
    /// The unit is grouplike.
    pub const UNIT_COMULT: &str = "unit-comult";
    /// Antipode equations (left and right convolution inverse of id).
    pub const ANTIPODE: &str = "antipode";
    /// Stored inverse maps invert exactly.
    pub const INVERSE: &str = "inverse";

    /// Left module: action associativity and unit law.
    pub const ANU: &str = "anu";
    /// Left module: action versus braiding.
    pub const BNU: &str = "bnu";
    /// Right module: action associativity and unit law.
    pub const AMU: &str = "amu";
    /// Right module: action versus braiding.
    pub const BMU: &str = "bmu";
    /// Left action versus inverse braidings (derived).
    pub const NULINV: &str = "nulinv";
    /// Right action versus inverse braidings (derived).
    pub const NURINV: &str = "nurinv";
    /// Left comodule: coaction coassociativity and counit law.
    pub const DROH: &str = "Droh";
    /// Left coaction versus braiding.
    pub const BRL: &str = "brL";
    /// Right comodule: coaction coassociativity and counit law.
    pub const ROHD: &str = "rohD";
    /// Right coaction versus braiding.
    pub const BRR: &str = "brR";
    /// Coactions versus inverse braidings (derived).
    pub const INVPHV: &str = "invPHV";
    /// Module algebra: action versus carrier multiplication.
    pub const NUM: &str = "num";
    /// Module algebra: action on the carrier unit.
    pub const NU1: &str = "nu1";
    /// Comodule algebra: coaction versus carrier multiplication.
    pub const RHORM: &str = "rhoRm";
    /// Comodule algebra: coaction on the carrier unit.
    pub const RR1: &str = "rR1";

    /// Antipode powers as homomorphisms between twists.
    pub const CORS: &str = "corS";

    /// Defining identity of the induced braiding on the dual.
    pub const UU: &str = "UU";
    /// Defining identity of the induced dual-by-primal braiding.
    pub const PSIHH: &str = "PsiHH";
    /// Same with the inverse braiding (the ° variant).
    pub const PSIHH_CIRC: &str = "PsiHHcirc";
    /// Defining identity of the induced primal-by-dual braiding.
    pub const PHU: &str = "PHU";
    /// Sweedler-leg consistency of the induced braidings.
    pub const PHH_ID: &str = "phh";
    /// Sweedler-leg consistency of the ° variants.
    pub const CPHH: &str = "cphh";
    /// Mixed-leg consistency identity.
    pub const PHCPH: &str = "phcph";
    /// Mixed-leg consistency identity, ° variant.
    pub const OPHCPH: &str = "ophcph";
    /// Dual pairing versus the product of the first argument.
    pub const MD: &str = "mD";
    /// Dual pairing versus the product of the second argument.
    pub const DM: &str = "Dm";
    /// Dual pairing of units with counits.
    pub const ONE_A: &str = "1a";
    /// Dual pairing versus antipodes.
    pub const SPAIR: &str = "Spair";
    /// Dual product with the direct braiding (the ∗ variant).
    pub const UST: &str = "ust";
    /// Dual product with the inverse braiding (the bialgebra variant).
    pub const US: &str = "us";
    /// Dual coproduct with the direct braiding.
    pub const BRCOP: &str = "brcop";
    /// Dual coproduct with the inverse braiding (the ° variant).
    pub const CUD: &str = "cuD";
    /// Non-degeneracy of a pairing.
    pub const NONDEG: &str = "nondeg";
    /// Double-dual evaluation intertwines products and coproducts.
    pub const DUD: &str = "dud";

    /// Braiding between a space and the dual of another, first form.
    pub const BHV: &str = "bHV";
    /// Braiding between a dual and a primal space, second form.
    pub const BHPV: &str = "bHpV";
    /// Inverse-induced variant of bHV.
    pub const CBWH: &str = "cbWH";
    /// Inverse-induced variant of bHpV.
    pub const CHV: &str = "cHV";
    /// Evaluation identity for dual-space braidings.
    pub const EVA: &str = "eva";
    /// Braiding of the dual algebra past a module carrier, first form.
    pub const BUVW: &str = "bUVW";
    /// Braiding of a carrier past the dual algebra, second form.
    pub const BVPH: &str = "bVpH";
    /// Inverse-induced variant of bUVW.
    pub const CBVU: &str = "cbVU";
    /// Inverse-induced variant of bVpH.
    pub const CPHV: &str = "cPHV";
    /// The ° braiding used by comodule-to-module conversion.
    pub const CPUV: &str = "cPUV";
    /// Bullet braiding from the dual-pairing side.
    pub const VUB: &str = "VUb";
    /// Bullet braiding from the coefficient side.
    pub const WHB: &str = "WHb";
    /// The two bullet constructions agree.
    pub const BUW: &str = "bUW";
    /// Action induced from a right coaction.
    pub const NUL: &str = "nuL";
    /// Action induced from a left coaction.
    pub const NUR: &str = "nuR";
    /// Natural left action on the primal space.
    pub const GLAA: &str = "glaa";
    /// Natural right action on the primal space.
    pub const GRAA: &str = "graa";
    /// Coaction induced from a left action.
    pub const RR: &str = "rR";
    /// Coaction induced from a right action.
    pub const MUR: &str = "muR";
    /// Twisted dual product recovers the ∗ product.
    pub const VUST: &str = "vust";
    /// Double-circ braiding on the primal side.
    pub const PHVCC: &str = "PHVcc";
    /// One-shot coaction of the round trip.
    pub const COACT_UH: &str = "coactUH";
    /// Double-circ braiding for the action round trip.
    pub const PWHCC: &str = "PWHcc";
    /// One-shot action of the round trip.
    pub const ACT_UH: &str = "actUH";
    /// Dualized coaction formula.
    pub const VRWU: &str = "vRWU";
    /// Dualized action formula.
    pub const RLW: &str = "rLW";

    /// The fixed registry of every equation id a report may carry.
    pub const REGISTRY: &[&str] = &[
        YBE, VW, WV, AWM, UNIT_W, VAM, V_UNIT, PMM, PHW, PVH, PDD, DCM, SBRAID, ASSOC, UNIT,
        COASSOC, COUNIT, EPS_MULT, UNIT_COMULT, ANTIPODE, INVERSE, ANU, BNU, AMU, BMU, NULINV,
        NURINV, DROH, BRL, ROHD, BRR, INVPHV, NUM, NU1, RHORM, RR1, CORS, UU, PSIHH, PSIHH_CIRC,
        PHU, PHH_ID, CPHH, PHCPH, OPHCPH, MD, DM, ONE_A, SPAIR, UST, US, BRCOP, CUD, NONDEG, DUD,
        BHV, BHPV, CBWH, CHV, EVA, BUVW, BVPH, CBVU, CPHV, CPUV, VUB, WHB, BUW, NUL, NUR, GLAA,
        GRAA, RR, MUR, VUST, PHVCC, COACT_UH, PWHCC, ACT_UH, VRWU, RLW,
    ];
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Verdict {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Pass => write!(f, "pass"),
            Verdict::Fail => write!(f, "FAIL"),
            Verdict::Skipped => write!(f, "skipped"),
        }
    }
}

/// First point of disagreement of a failed identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    /// Domain basis index where the two sides differ.
    pub input: usize,
    /// Codomain basis index of the first differing coefficient.
    pub output: usize,
    pub lhs: Scalar,
    pub rhs: Scalar,
    /// Human-readable basis labels for the two indices.
    pub input_label: String,
    pub output_label: String,
}

#[derive(Clone, Debug)]
pub struct CheckEntry {
    /// Equation id from [`eq::REGISTRY`].
    pub equation: &'static str,
    /// Which instance of the equation this is (side, twist amount, ...).
    pub context: String,
    pub verdict: Verdict,
    /// Number of basis inputs compared exactly.
    pub checked: usize,
    /// Number of basis inputs that touched undefined blocks.
    pub skipped: usize,
    pub witness: Option<Witness>,
}

impl fmt::Display for CheckEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:<10} {:<8}", self.equation, self.verdict)?;
        if self.skipped > 0 {
            write!(f, " [{} checked, {} skipped]", self.checked, self.skipped)?;
        }
        if !self.context.is_empty() {
            write!(f, " ({})", self.context)?;
        }
        if let Some(w) = &self.witness {
            write!(
                f,
                " witness: input {} -> output {}: lhs {} != rhs {}",
                w.input_label,
                w.output_label,
                format_scalar(&w.lhs),
                format_scalar(&w.rhs)
            )?;
        }
        Ok(())
    }
}

/// An ordered collection of per-equation verdicts.
#[derive(Clone, Debug, Default)]
pub struct CheckReport {
    entries: Vec<CheckEntry>,
}

impl CheckReport {
    pub fn new() -> CheckReport {
        CheckReport::default()
    }

    pub fn push(&mut self, entry: CheckEntry) {
        debug_assert!(
            eq::REGISTRY.contains(&entry.equation),
            "unregistered equation id {}",
            entry.equation
        );
        self.entries.push(entry);
    }

    pub fn merge(&mut self, other: CheckReport) {
        self.entries.extend(other.entries);
    }

    pub fn entries(&self) -> &[CheckEntry] {
        &self.entries
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// No failures (skips allowed).
    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.verdict != Verdict::Fail)
    }

    /// Every entry fully verified.
    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(|e| e.verdict == Verdict::Pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckEntry> {
        self.entries.iter().filter(|e| e.verdict == Verdict::Fail)
    }

    /// First entry for the given equation id, if any.
    pub fn entry(&self, equation: &str) -> Option<&CheckEntry> {
        self.entries.iter().find(|e| e.equation == equation)
    }

    /// All entries for the given equation id.
    pub fn entries_for<'a>(
        &'a self,
        equation: &'a str,
    ) -> impl Iterator<Item = &'a CheckEntry> + 'a {
        self.entries.iter().filter(move |e| e.equation == equation)
    }

    /// Prepends a label to every entry's context, for merging reports
    /// from several sub-structures into one.
    pub fn prefixed(mut self, label: &str) -> CheckReport {
        for entry in &mut self.entries {
            entry.context = if entry.context.is_empty() {
                label.to_string()
            } else {
                format!("{label}: {}", entry.context)
            };
        }
        self
    }

    /// Keeps only entries whose equation id is in `axioms`.
    pub fn filtered(&self, axioms: &[String]) -> CheckReport {
        CheckReport {
            entries: self
                .entries
                .iter()
                .filter(|e| axioms.iter().any(|a| a == e.equation))
                .cloned()
                .collect(),
        }
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for entry in &self.entries {
            writeln!(f, "{entry}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_ids_are_unique() {
        let mut seen = std::collections::BTreeSet::new();
        for id in eq::REGISTRY {
            assert!(seen.insert(id), "duplicate equation id {id}");
        }
    }

    #[test]
    fn report_aggregation() {
        let mut r = CheckReport::new();
        r.push(CheckEntry {
            equation: eq::YBE,
            context: String::new(),
            verdict: Verdict::Pass,
            checked: 8,
            skipped: 0,
            witness: None,
        });
        assert!(r.passed() && r.all_pass());
        r.push(CheckEntry {
            equation: eq::DCM,
            context: String::new(),
            verdict: Verdict::Skipped,
            checked: 3,
            skipped: 1,
            witness: None,
        });
        assert!(r.passed());
        assert!(!r.all_pass());
        assert_eq!(r.entry(eq::DCM).unwrap().skipped, 1);
    }
}
