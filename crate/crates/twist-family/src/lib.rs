//! Twists a braided bialgebra by powers of its own braiding: the product
//! becomes m ∘ Ψ^k and the coproduct Ψ^n ∘ Δ, keeping the unit and counit.
//! The exponent pairings k + n = 0 (checked against Ψ) and k + n = -1
//! (checked against Ψ⁻¹) produce bialgebras for every base, Hopf when the
//! base is; the antipode powers S^k connect the levels of the paired
//! family as morphisms. Everything else assembles too, but only survives
//! the checkers when the base has extra symmetry.

#![forbid(unsafe_code)]

use braided_structures::{
    chain, check_bialgebra, compare, eq, BraidedAlgebra, BraidedBialgebra, BraidedCoalgebra,
    BraidedHopf, Braiding, CheckEntry, CheckReport, PartialMap, StructureError, Verdict,
};
use exact_linalg::{lin_compose, LinMap};

/// Largest twist exponent magnitude the command line accepts. The library
/// itself computes any exponent.
pub const DEFAULT_TWIST_BOUND: i64 = 4;

/// Ambient braiding a twisted structure is checked against.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WhichBraiding {
    Psi,
    PsiInv,
}

/// A bialgebra with its product twisted to m ∘ Ψ^k and its coproduct to
/// Ψ^n ∘ Δ, together with the ambient braiding to judge it against.
#[derive(Clone, Debug)]
pub struct TwistedStructure {
    base: BraidedBialgebra,
    k: i64,
    n: i64,
    which_braiding: WhichBraiding,
    mult: PartialMap,
    comult: PartialMap,
}

/// Forms the (k, n) twist of `h`. The ambient braiding defaults to Ψ⁻¹ for
/// the pairing k + n = -1 and to Ψ otherwise; override it with
/// [`TwistedStructure::with_braiding`].
pub fn twist(h: &BraidedBialgebra, k: i64, n: i64) -> TwistedStructure {
    let past_k = PartialMap::total(h.braiding().power(k));
    let past_n = PartialMap::total(h.braiding().power(n));
    let mult = PartialMap::compose(h.mult(), &past_k).expect("twist shapes agree");
    let comult = PartialMap::compose(&past_n, h.comult()).expect("twist shapes agree");
    let which_braiding = if k + n == -1 {
        WhichBraiding::PsiInv
    } else {
        WhichBraiding::Psi
    };
    TwistedStructure {
        base: h.clone(),
        k,
        n,
        which_braiding,
        mult,
        comult,
    }
}

impl TwistedStructure {
    pub fn base(&self) -> &BraidedBialgebra {
        &self.base
    }

    pub fn k(&self) -> i64 {
        self.k
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    pub fn which_braiding(&self) -> WhichBraiding {
        self.which_braiding
    }

    pub fn mult(&self) -> &PartialMap {
        &self.mult
    }

    pub fn comult(&self) -> &PartialMap {
        &self.comult
    }

    /// The ambient braiding under which this exponent pairing is a
    /// bialgebra for every base, if there is one: Ψ for k + n = 0 and
    /// Ψ⁻¹ for k + n = -1.
    pub fn guaranteed_braiding(&self) -> Option<WhichBraiding> {
        match self.k + self.n {
            0 => Some(WhichBraiding::Psi),
            -1 => Some(WhichBraiding::PsiInv),
            _ => None,
        }
    }

    pub fn with_braiding(mut self, which: WhichBraiding) -> TwistedStructure {
        self.which_braiding = which;
        self
    }

    fn ambient_braiding(&self) -> Braiding {
        match self.which_braiding {
            WhichBraiding::Psi => self.base.braiding().clone(),
            WhichBraiding::PsiInv => self.base.braiding().inverse(),
        }
    }

    /// Builds the twisted bialgebra through the checked constructors, so a
    /// mispaired twist surfaces as a `CheckFailed` error.
    pub fn assemble(&self) -> Result<BraidedBialgebra, StructureError> {
        let braiding = self.ambient_braiding();
        let algebra = BraidedAlgebra::new_partial(
            braiding.clone(),
            self.mult.clone(),
            self.base.algebra().unit().cloned(),
        )?;
        let coalgebra =
            BraidedCoalgebra::new_partial(braiding, self.comult.clone(), self.base.counit().clone())?;
        BraidedBialgebra::new(algebra, coalgebra)
    }

    /// Builds without running any checks, so a mispaired twist can be
    /// inspected through a report instead of a constructor error.
    pub fn assemble_unchecked(&self) -> BraidedBialgebra {
        let braiding = self.ambient_braiding();
        let algebra = BraidedAlgebra::from_parts_unchecked(
            braiding.clone(),
            self.mult.clone(),
            self.base.algebra().unit().cloned(),
        );
        let coalgebra = BraidedCoalgebra::from_parts_unchecked(
            braiding,
            self.comult.clone(),
            self.base.counit().clone(),
        );
        BraidedBialgebra::from_parts_unchecked(algebra, coalgebra)
    }
}

/// Runs the full bialgebra suite on both guaranteed members at level n:
/// the (n, -n) twist against Ψ and the (n-1, -n) twist against Ψ⁻¹.
pub fn check_twist_bialgebra(h: &BraidedBialgebra, n: i64) -> CheckReport {
    let mut report = CheckReport::new();
    report.merge(
        check_bialgebra(&twist(h, n, -n).assemble_unchecked())
            .prefixed(&format!("H^({},{}) under psi", n, -n)),
    );
    report.merge(
        check_bialgebra(&twist(h, n - 1, -n).assemble_unchecked())
            .prefixed(&format!("H^({},{}) under psi inverse", n - 1, -n)),
    );
    report
}

/// As [`check_twist_bialgebra`], but on Hopf structures: the Ψ member
/// keeps the antipode and the Ψ⁻¹ member takes its inverse. When no
/// inverse is available that antipode check degrades to a skipped entry.
pub fn check_twist_hopf(h: &BraidedHopf, n: i64) -> CheckReport {
    let mut report = CheckReport::new();
    let same = BraidedHopf::from_parts_unchecked(
        twist(h.bialgebra(), n, -n).assemble_unchecked(),
        h.antipode().clone(),
        h.antipode_inv().cloned(),
    );
    report.merge(same.check().prefixed(&format!("H^({},{}) under psi", n, -n)));

    let mirrored = twist(h.bialgebra(), n - 1, -n).assemble_unchecked();
    let label = format!("H^({},{}) under psi inverse", n - 1, -n);
    match h.antipode_inv() {
        Some(s_inv) => {
            let hopf =
                BraidedHopf::from_parts_unchecked(mirrored, s_inv.clone(), Some(h.antipode().clone()));
            report.merge(hopf.check().prefixed(&label));
        }
        None => {
            let mut partial = check_bialgebra(&mirrored);
            partial.push(CheckEntry {
                equation: eq::ANTIPODE,
                context: "needs the inverse antipode".to_string(),
                verdict: Verdict::Skipped,
                checked: 0,
                skipped: h.shape().dim(),
                witness: None,
            });
            report.merge(partial.prefixed(&label));
        }
    }
    report
}

/// S^k, going through the inverse antipode for negative k.
pub fn antipode_power(h: &BraidedHopf, k: i64) -> Result<LinMap, StructureError> {
    let base = if k >= 0 {
        h.antipode()
    } else {
        h.antipode_inv().ok_or_else(|| {
            StructureError::AntipodeNotInvertible(format!("S^{k} needs an inverse antipode"))
        })?
    };
    let mut acc = LinMap::identity(&h.shape());
    for _ in 0..k.unsigned_abs() {
        acc = lin_compose(base, &acc).expect("antipode powers compose");
    }
    Ok(acc)
}

/// Checks that S^k carries the level-n member of the Ψ family onto the
/// level-(n+k) member: it swaps products and coproducts across the two
/// levels, fixes unit and counit, and commutes with the braiding.
pub fn antipode_power_morphism(
    h: &BraidedHopf,
    k: i64,
    n: i64,
) -> Result<CheckReport, StructureError> {
    let sk = PartialMap::total(antipode_power(h, k)?);
    let sksk = PartialMap::tensor(&sk, &sk);
    let b = h.bialgebra();
    let lo = twist(b, n, -n);
    let hi = twist(b, n + k, -(n + k));
    let mut report = CheckReport::new();

    let lhs = chain(&[&sk, lo.mult()]).expect("shapes agree");
    let rhs = chain(&[hi.mult(), &sksk]).expect("shapes agree");
    report.push(compare(eq::CORS, format!("products, k = {k}, n = {n}"), &lhs, &rhs));

    let lhs = chain(&[hi.comult(), &sk]).expect("shapes agree");
    let rhs = chain(&[&sksk, lo.comult()]).expect("shapes agree");
    report.push(compare(
        eq::CORS,
        format!("coproducts, k = {k}, n = {n}"),
        &lhs,
        &rhs,
    ));

    match b.unit_map() {
        Some(unit) => {
            let unit = PartialMap::total(unit);
            let lhs = chain(&[&sk, &unit]).expect("shapes agree");
            report.push(compare(eq::CORS, format!("unit, k = {k}"), &lhs, &unit));
        }
        None => report.push(CheckEntry {
            equation: eq::CORS,
            context: format!("unit, k = {k}"),
            verdict: Verdict::Skipped,
            checked: 0,
            skipped: 1,
            witness: None,
        }),
    }

    let counit = PartialMap::total(b.counit().clone());
    let lhs = chain(&[&counit, &sk]).expect("shapes agree");
    report.push(compare(eq::CORS, format!("counit, k = {k}"), &lhs, &counit));

    let psi = PartialMap::total(b.braiding().psi().clone());
    let lhs = chain(&[&psi, &sksk]).expect("shapes agree");
    let rhs = chain(&[&sksk, &psi]).expect("shapes agree");
    report.push(compare(eq::CORS, format!("braiding, k = {k}"), &lhs, &rhs));
    Ok(report)
}
