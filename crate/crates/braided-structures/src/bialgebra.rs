//! Braided bialgebras, Hopf algebras, convolution and antipode solving.

use crate::algebra::{skipped_entry, BraidedAlgebra};
use crate::braiding::Braiding;
use crate::coalgebra::BraidedCoalgebra;
use crate::partial::{chain, compare, PartialMap};
use crate::report::{eq, CheckReport, Verdict};
use crate::StructureError;
use exact_linalg::{
    lin_compose, lin_tensor, LinError, LinMap, LinearSystem, Scalar, SolveResult, Space,
    TensorShape,
};

/// A braided algebra and coalgebra on the same space, over the same
/// braiding, whose coproduct is multiplicative up to the braiding.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraidedBialgebra {
    algebra: BraidedAlgebra,
    coalgebra: BraidedCoalgebra,
}

impl BraidedBialgebra {
    pub fn new(
        algebra: BraidedAlgebra,
        coalgebra: BraidedCoalgebra,
    ) -> Result<BraidedBialgebra, StructureError> {
        if algebra.braiding() != coalgebra.braiding() {
            return Err(LinError::ShapeMismatch(format!(
                "algebra on {} and coalgebra on {} carry different braidings",
                algebra.space(),
                coalgebra.space()
            ))
            .into());
        }
        let h = BraidedBialgebra { algebra, coalgebra };
        let report = check_bialgebra(&h);
        if !report.passed() {
            return Err(StructureError::CheckFailed(report));
        }
        Ok(h)
    }

    pub fn from_parts_unchecked(
        algebra: BraidedAlgebra,
        coalgebra: BraidedCoalgebra,
    ) -> BraidedBialgebra {
        BraidedBialgebra { algebra, coalgebra }
    }

    pub fn algebra(&self) -> &BraidedAlgebra {
        &self.algebra
    }

    pub fn coalgebra(&self) -> &BraidedCoalgebra {
        &self.coalgebra
    }

    pub fn space(&self) -> &Space {
        self.algebra.space()
    }

    pub fn shape(&self) -> TensorShape {
        self.algebra.shape()
    }

    pub fn braiding(&self) -> &Braiding {
        self.algebra.braiding()
    }

    pub fn mult(&self) -> &PartialMap {
        self.algebra.mult()
    }

    pub fn comult(&self) -> &PartialMap {
        self.coalgebra.comult()
    }

    pub fn counit(&self) -> &LinMap {
        self.coalgebra.counit()
    }

    pub fn unit_map(&self) -> Option<LinMap> {
        self.algebra.unit_map()
    }
}

/// The full axiom suite: braiding, algebra, coalgebra, multiplicativity of
/// the coproduct and of the counit, and grouplikeness of the unit.
pub fn check_bialgebra(h: &BraidedBialgebra) -> CheckReport {
    let mut report = h.braiding().check();
    report.merge(h.algebra().check());
    report.merge(h.coalgebra().check());
    let id = PartialMap::identity(&h.shape());
    let psi = PartialMap::total(h.braiding().psi().clone());
    let m = h.mult();
    let d = h.comult();
    let mid = PartialMap::tensor(&PartialMap::tensor(&id, &psi), &id);
    let lhs = chain(&[d, m]).expect("shapes agree");
    let rhs = chain(&[
        &PartialMap::tensor(m, m),
        &mid,
        &PartialMap::tensor(d, d),
    ])
    .expect("shapes agree");
    report.push(compare(eq::DCM, h.space().to_string(), &lhs, &rhs));
    let e = PartialMap::total(h.counit().clone());
    let lhs = chain(&[&e, m]).expect("shapes agree");
    let rhs = PartialMap::tensor(&e, &e);
    report.push(compare(eq::EPS_MULT, "products".to_string(), &lhs, &rhs));
    match h.unit_map() {
        Some(u) => {
            let u = PartialMap::total(u);
            let lhs = chain(&[&e, &u]).expect("shapes agree");
            let one = PartialMap::identity(&TensorShape::unit());
            report.push(compare(eq::EPS_MULT, "on the unit".to_string(), &lhs, &one));
            let lhs = chain(&[d, &u]).expect("shapes agree");
            let rhs = PartialMap::tensor(&u, &u);
            report.push(compare(eq::UNIT_COMULT, h.space().to_string(), &lhs, &rhs));
        }
        None => report.push(skipped_entry(
            eq::UNIT_COMULT,
            "no unit present".to_string(),
            1,
        )),
    }
    report
}

/// A braided bialgebra with a (two-sided) convolution inverse of the
/// identity, and optionally the inverse of that antipode.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraidedHopf {
    bialgebra: BraidedBialgebra,
    antipode: LinMap,
    antipode_inv: Option<LinMap>,
}

impl BraidedHopf {
    pub fn new(
        bialgebra: BraidedBialgebra,
        antipode: LinMap,
        antipode_inv: Option<LinMap>,
    ) -> Result<BraidedHopf, StructureError> {
        let shape = bialgebra.shape();
        for (name, s) in std::iter::once(("antipode", &antipode))
            .chain(antipode_inv.iter().map(|s| ("antipode inverse", s)))
        {
            if *s.domain() != shape || *s.codomain() != shape {
                return Err(LinError::ShapeMismatch(format!(
                    "{name} must map {shape} to itself, got {} -> {}",
                    s.domain(),
                    s.codomain()
                ))
                .into());
            }
        }
        let h = BraidedHopf {
            bialgebra,
            antipode,
            antipode_inv,
        };
        let report = h.check();
        if !report.passed() {
            return Err(StructureError::CheckFailed(report));
        }
        Ok(h)
    }

    pub fn from_parts_unchecked(
        bialgebra: BraidedBialgebra,
        antipode: LinMap,
        antipode_inv: Option<LinMap>,
    ) -> BraidedHopf {
        BraidedHopf {
            bialgebra,
            antipode,
            antipode_inv,
        }
    }

    pub fn bialgebra(&self) -> &BraidedBialgebra {
        &self.bialgebra
    }

    pub fn antipode(&self) -> &LinMap {
        &self.antipode
    }

    pub fn antipode_inv(&self) -> Option<&LinMap> {
        self.antipode_inv.as_ref()
    }

    pub fn space(&self) -> &Space {
        self.bialgebra.space()
    }

    pub fn shape(&self) -> TensorShape {
        self.bialgebra.shape()
    }

    pub fn braiding(&self) -> &Braiding {
        self.bialgebra.braiding()
    }

    /// Bialgebra suite, antipode equations, interchange identities, and
    /// exactness of the stored antipode inverse.
    pub fn check(&self) -> CheckReport {
        let mut report = check_bialgebra(&self.bialgebra);
        let id = PartialMap::identity(&self.shape());
        let s = PartialMap::total(self.antipode.clone());
        let m = self.bialgebra.mult();
        let d = self.bialgebra.comult();
        let e = PartialMap::total(self.bialgebra.counit().clone());
        match self.bialgebra.unit_map() {
            Some(u) => {
                let u = PartialMap::total(u);
                let rhs = chain(&[&u, &e]).expect("shapes agree");
                let left = chain(&[m, &PartialMap::tensor(&s, &id), d]).expect("shapes agree");
                let right = chain(&[m, &PartialMap::tensor(&id, &s), d]).expect("shapes agree");
                report.push(compare(eq::ANTIPODE, "left".to_string(), &left, &rhs));
                report.push(compare(eq::ANTIPODE, "right".to_string(), &right, &rhs));
            }
            None => report.push(skipped_entry(
                eq::ANTIPODE,
                "no unit present".to_string(),
                self.shape().dim(),
            )),
        }
        report.merge(check_antipode_identities(self));
        if let Some(s_inv) = &self.antipode_inv {
            let s_inv = PartialMap::total(s_inv.clone());
            let lhs = chain(&[&s, &s_inv]).expect("shapes agree");
            report.push(compare(eq::INVERSE, "antipode right inverse".to_string(), &lhs, &id));
            let lhs = chain(&[&s_inv, &s]).expect("shapes agree");
            report.push(compare(eq::INVERSE, "antipode left inverse".to_string(), &lhs, &id));
        }
        report
    }
}

/// The five interchange identities between the antipode, braiding,
/// (co)multiplication and counit.
pub fn check_antipode_identities(h: &BraidedHopf) -> CheckReport {
    let id = PartialMap::identity(&h.shape());
    let s = PartialMap::total(h.antipode().clone());
    let psi = PartialMap::total(h.braiding().psi().clone());
    let m = h.bialgebra().mult();
    let d = h.bialgebra().comult();
    let e = PartialMap::total(h.bialgebra().counit().clone());
    let ss = PartialMap::tensor(&s, &s);
    let s_left = PartialMap::tensor(&s, &id);
    let s_right = PartialMap::tensor(&id, &s);
    let mut report = CheckReport::new();
    let lhs = chain(&[&psi, &s_left]).expect("shapes agree");
    let rhs = chain(&[&s_right, &psi]).expect("shapes agree");
    report.push(compare(eq::SBRAID, "left leg".to_string(), &lhs, &rhs));
    let lhs = chain(&[&psi, &s_right]).expect("shapes agree");
    let rhs = chain(&[&s_left, &psi]).expect("shapes agree");
    report.push(compare(eq::SBRAID, "right leg".to_string(), &lhs, &rhs));
    let lhs = chain(&[&s, m]).expect("shapes agree");
    let rhs = chain(&[m, &psi, &ss]).expect("shapes agree");
    report.push(compare(eq::SBRAID, "products".to_string(), &lhs, &rhs));
    let lhs = chain(&[d, &s]).expect("shapes agree");
    let rhs = chain(&[&psi, &ss, d]).expect("shapes agree");
    report.push(compare(eq::SBRAID, "coproducts".to_string(), &lhs, &rhs));
    let lhs = chain(&[&e, &s]).expect("shapes agree");
    report.push(compare(eq::SBRAID, "counit".to_string(), &lhs, &e));
    report
}

/// The convolution product m∘(φ⊗ψ)∘Δ of two maps H→A.
pub fn convolution(
    phi: &LinMap,
    psi: &LinMap,
    coalg: &BraidedCoalgebra,
    alg: &BraidedAlgebra,
) -> Result<LinMap, LinError> {
    let h = coalg.shape();
    let a = alg.shape();
    for f in [phi, psi] {
        if *f.domain() != h || *f.codomain() != a {
            return Err(LinError::ShapeMismatch(format!(
                "convolution operands must map {h} to {a}, got {} -> {}",
                f.domain(),
                f.codomain()
            )));
        }
    }
    let d = total_of(coalg.comult(), "comultiplication")?;
    let m = total_of(alg.mult(), "multiplication")?;
    lin_compose(m, &lin_compose(&lin_tensor(phi, psi), d)?)
}

/// The unit of the convolution algebra, h ↦ ε(h)·1.
pub fn convolution_unit(
    coalg: &BraidedCoalgebra,
    alg: &BraidedAlgebra,
) -> Result<LinMap, LinError> {
    let u = alg.unit_map().ok_or_else(|| {
        LinError::ShapeMismatch("the convolution unit needs a unital algebra".to_string())
    })?;
    lin_compose(&u, coalg.counit())
}

fn total_of<'a>(map: &'a PartialMap, name: &str) -> Result<&'a LinMap, LinError> {
    map.as_total().ok_or_else(|| {
        LinError::ShapeMismatch(format!("{name} is only partially defined"))
    })
}

/// Solves for the convolution inverse of the identity. The left-inverse
/// equation is a square linear system in the matrix entries of S; a unique
/// solution that also passes the right-inverse equation is the antipode.
pub fn solve_antipode(h: &BraidedBialgebra) -> Result<LinMap, StructureError> {
    let shape = h.shape();
    let n = shape.dim();
    let d = total_of(h.comult(), "comultiplication")?;
    let m = total_of(h.mult(), "multiplication")?;
    let Some(u) = h.algebra().unit() else {
        return Err(StructureError::NoAntipode(
            "a convolution inverse needs a unital algebra".to_string(),
        ));
    };
    // Unknown s_{p,q} = coefficient of e_p in S(e_q), flattened p·n + q.
    // Left equation on input e_q, output row i:
    //   sum_{(a,b) in supp Δe_q} sum_p Δ[(a,b),q]·m[i,(p,b)]·s_{p,a} = ε(e_q)·u_i.
    let mut system = LinearSystem::new(n * n);
    for q in 0..n {
        let mut rows: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); n];
        for (ab, dcoef) in d.column(q).iter() {
            let (a, b) = (ab / n, ab % n);
            for p in 0..n {
                for (i, mcoef) in m.column(p * n + b).iter() {
                    rows[i].push((p * n + a, dcoef * mcoef));
                }
            }
        }
        let eps_q = h.counit().coeff(0, q);
        for (i, terms) in rows.into_iter().enumerate() {
            system.push_sparse(terms, &eps_q * &u.coeff(i));
        }
    }
    let entries = match system.solve() {
        SolveResult::Unique(sol) => sol,
        SolveResult::Inconsistent => {
            return Err(StructureError::NoAntipode(
                "the left-inverse system is inconsistent".to_string(),
            ))
        }
        SolveResult::Underdetermined(_) => {
            // Several left inverses: a right inverse would force them all
            // equal, so none exists.
            return Err(StructureError::NoAntipode(
                "the left-inverse system is underdetermined".to_string(),
            ));
        }
    };
    let s = LinMap::from_entries(
        shape.clone(),
        shape.clone(),
        entries
            .into_iter()
            .enumerate()
            .map(|(k, c)| (k / n, k % n, c)),
    )
    .expect("solution entries are in range");
    let candidate = BraidedHopf::from_parts_unchecked(h.clone(), s, None);
    let report = candidate.check();
    for side in ["left", "right"] {
        let bad = report
            .entries_for(eq::ANTIPODE)
            .any(|e| e.context == side && e.verdict != Verdict::Pass);
        if bad {
            return Err(StructureError::NoAntipode(format!(
                "the solved map fails the {side}-inverse equation"
            )));
        }
    }
    Ok(candidate.antipode)
}
