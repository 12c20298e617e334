//! Degree-truncated graded families: the braided line and the quantum
//! plane. Blocks above the cutoff are left undefined, never guessed.

use std::collections::BTreeSet;

use braided_structures::{
    tensor_all, BraidedAlgebra, BraidedBialgebra, BraidedCoalgebra, BraidedHopf, Braiding,
    CheckReport, PartialMap, StructureError,
};
use exact_linalg::{int, lin_invert, LinMap, Scalar, Space, TensorShape, Vect};

use crate::CatalogError;

const MAX_CUTOFF: usize = 8;

/// Which graded family a structure belongs to, with its parameter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GradedFamily {
    BraidedLine(Scalar),
    QuantumPlane(Scalar),
}

/// A Hopf structure on the span of the monomials of total degree at most
/// `cutoff`, together with its grading. Products that would leave that
/// range are undefined columns of the multiplication.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedStructure {
    family: GradedFamily,
    cutoff: usize,
    grades: Vec<Space>,
    degrees: Vec<usize>,
    hopf: BraidedHopf,
}

impl GradedStructure {
    pub fn from_parts_unchecked(
        family: GradedFamily,
        cutoff: usize,
        grades: Vec<Space>,
        degrees: Vec<usize>,
        hopf: BraidedHopf,
    ) -> GradedStructure {
        GradedStructure {
            family,
            cutoff,
            grades,
            degrees,
            hopf,
        }
    }

    pub fn family(&self) -> &GradedFamily {
        &self.family
    }

    pub fn cutoff(&self) -> usize {
        self.cutoff
    }

    /// One space per degree, in increasing order, whose labels partition
    /// the basis of the full space.
    pub fn grades(&self) -> &[Space] {
        &self.grades
    }

    /// Total degree of each basis vector; indices are sorted by degree.
    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn hopf(&self) -> &BraidedHopf {
        &self.hopf
    }

    pub fn bialgebra(&self) -> &BraidedBialgebra {
        self.hopf.bialgebra()
    }

    pub fn space(&self) -> &Space {
        self.hopf.space()
    }
}

/// Gaussian binomial coefficient by the recursion
/// C(n, k) = q^k·C(n−1, k) + C(n−1, k−1).
pub fn q_binomial(n: usize, k: usize, q: &Scalar) -> Scalar {
    if k > n {
        return int(0);
    }
    if k == 0 || k == n {
        return int(1);
    }
    &qpow(q, k as i64) * &q_binomial(n - 1, k, q) + q_binomial(n - 1, k - 1, q)
}

/// q^e for nonzero q, with negative exponents through the reciprocal.
fn qpow(q: &Scalar, e: i64) -> Scalar {
    let base = if e < 0 { q.recip() } else { q.clone() };
    let mut out = int(1);
    for _ in 0..e.unsigned_abs() {
        out = &out * &base;
    }
    out
}

/// The braided line truncated above `cutoff`: one generator x with
/// Ψ(x^i⊗x^j) = q^{ij}·x^j⊗x^i, whose multiplicative coproduct has
/// Gaussian binomial coefficients.
pub fn make_braided_line_truncated(
    q: Scalar,
    cutoff: usize,
) -> Result<GradedStructure, CatalogError> {
    validate(&q, cutoff)?;
    let dim = cutoff + 1;
    let labels: Vec<String> = (0..dim).map(bline_label).collect();
    let degrees: Vec<usize> = (0..dim).collect();
    let mut prod = vec![vec![None; dim]; dim];
    let mut braid = vec![vec![int(0); dim]; dim];
    for i in 0..dim {
        for j in 0..dim {
            if i + j <= cutoff {
                prod[i][j] = Some((i + j, int(1)));
            }
            braid[i][j] = qpow(&q, (i * j) as i64);
        }
    }
    let split = (0..dim)
        .map(|d| if d >= 2 { Some((1, d - 1)) } else { None })
        .collect();
    let grades = (0..dim)
        .map(|d| Space::new(format!("BLine{d}"), vec![bline_label(d)]))
        .collect();
    assemble(
        MonomialModel {
            name: "BLine",
            labels,
            degrees,
            prod,
            braid,
            split,
        },
        GradedFamily::BraidedLine(q),
        cutoff,
        grades,
    )
}

fn bline_label(d: usize) -> String {
    match d {
        0 => "1".to_string(),
        1 => "x".to_string(),
        _ => format!("x{d}"),
    }
}

/// The quantum plane yx = q·xy truncated above total degree `cutoff`. The
/// braiding scales the flip by q^{bc−ad} on (x^a y^b)⊗(x^c y^d), the one
/// exponent pattern compatible with the coproduct on products.
pub fn make_quantum_plane_truncated(
    q: Scalar,
    cutoff: usize,
) -> Result<GradedStructure, CatalogError> {
    validate(&q, cutoff)?;
    let mut mons: Vec<(usize, usize)> = Vec::new();
    for d in 0..=cutoff {
        for b in 0..=d {
            mons.push((d - b, b));
        }
    }
    let dim = mons.len();
    let index = |a: usize, b: usize| (a + b) * (a + b + 1) / 2 + b;
    let labels: Vec<String> = mons.iter().map(|&(a, b)| qp_label(a, b)).collect();
    let degrees: Vec<usize> = mons.iter().map(|&(a, b)| a + b).collect();
    let mut prod = vec![vec![None; dim]; dim];
    let mut braid = vec![vec![int(0); dim]; dim];
    for (i, &(a, b)) in mons.iter().enumerate() {
        for (j, &(c, d)) in mons.iter().enumerate() {
            if a + b + c + d <= cutoff {
                prod[i][j] = Some((index(a + c, b + d), qpow(&q, (b * c) as i64)));
            }
            braid[i][j] = qpow(&q, (b * c) as i64 - (a * d) as i64);
        }
    }
    let split = mons
        .iter()
        .map(|&(a, b)| {
            if a + b < 2 {
                None
            } else if a >= 1 {
                Some((index(1, 0), index(a - 1, b)))
            } else {
                Some((index(0, 1), index(0, b - 1)))
            }
        })
        .collect();
    let grades = (0..=cutoff)
        .map(|d| {
            Space::new(
                format!("QPlane{d}"),
                (0..=d).map(|b| qp_label(d - b, b)).collect(),
            )
        })
        .collect();
    assemble(
        MonomialModel {
            name: "QPlane",
            labels,
            degrees,
            prod,
            braid,
            split,
        },
        GradedFamily::QuantumPlane(q),
        cutoff,
        grades,
    )
}

fn qp_label(a: usize, b: usize) -> String {
    if a == 0 && b == 0 {
        return "1".to_string();
    }
    let part = |sym: &str, e: usize| match e {
        0 => String::new(),
        1 => sym.to_string(),
        _ => format!("{sym}{e}"),
    };
    format!("{}{}", part("x", a), part("y", b))
}

fn validate(q: &Scalar, cutoff: usize) -> Result<(), CatalogError> {
    if *q == int(0) {
        return Err(CatalogError::InvalidParameter(
            "the parameter q must be nonzero".into(),
        ));
    }
    if cutoff > MAX_CUTOFF {
        return Err(CatalogError::InvalidParameter(format!(
            "cutoff {cutoff} exceeds the supported bound {MAX_CUTOFF}"
        )));
    }
    Ok(())
}

/// A basis of monomials sorted by total degree, with a product table, a
/// scaled-flip braiding and a factorization of every composite monomial.
struct MonomialModel {
    name: &'static str,
    labels: Vec<String>,
    degrees: Vec<usize>,
    /// e_i·e_j as (target, coefficient); None above the cutoff.
    prod: Vec<Vec<Option<(usize, Scalar)>>>,
    /// Ψ(e_i⊗e_j) = braid\[i\]\[j\]·(e_j⊗e_i).
    braid: Vec<Vec<Scalar>>,
    /// Each monomial of degree at least 2 as generator·rest, coefficient 1.
    split: Vec<Option<(usize, usize)>>,
}

fn assemble(
    model: MonomialModel,
    family: GradedFamily,
    cutoff: usize,
    grades: Vec<Space>,
) -> Result<GradedStructure, CatalogError> {
    let dim = model.labels.len();
    let space = Space::new(model.name, model.labels);
    let h = TensorShape::of(&space);
    let hh = TensorShape::pair(&space, &space);

    // A scaled flip inverts entrywise, so skip the dense inversion but
    // still run the braiding checker before building on top of it.
    let mut psi_entries = Vec::with_capacity(dim * dim);
    let mut psi_inv_entries = Vec::with_capacity(dim * dim);
    for i in 0..dim {
        for j in 0..dim {
            let c = &model.braid[i][j];
            psi_entries.push((j * dim + i, i * dim + j, c.clone()));
            psi_inv_entries.push((i * dim + j, j * dim + i, c.recip()));
        }
    }
    let psi = LinMap::from_entries(hh.clone(), hh.clone(), psi_entries)?;
    let psi_inv = LinMap::from_entries(hh.clone(), hh.clone(), psi_inv_entries)?;
    let braiding = Braiding::from_parts_unchecked(space, psi, psi_inv);
    let report = braiding.check();
    if !report.passed() {
        return Err(StructureError::CheckFailed(report).into());
    }

    let mut mult_entries = Vec::new();
    let mut undefined = BTreeSet::new();
    for i in 0..dim {
        for j in 0..dim {
            match &model.prod[i][j] {
                Some((t, c)) => mult_entries.push((*t, i * dim + j, c.clone())),
                None => {
                    undefined.insert(i * dim + j);
                }
            }
        }
    }
    let mult = PartialMap::with_undefined(
        LinMap::from_entries(hh.clone(), h.clone(), mult_entries)?,
        undefined,
    );

    // Coproduct: generators are primitive and everything else extends
    // multiplicatively along the factorization, using the square product
    // on H⊗H. Factor coproducts keep the total degree, so every product
    // involved stays below the cutoff.
    let id = PartialMap::identity(&h);
    let psi_p = PartialMap::total(braiding.psi().clone());
    let square = PartialMap::compose(
        &PartialMap::tensor(&mult, &mult),
        &tensor_all(&[&id, &psi_p, &id]),
    )?;
    let mut dcols: Vec<Vect> = Vec::with_capacity(dim);
    for j in 0..dim {
        let v = match model.degrees[j] {
            0 => Vect::basis(&hh, 0),
            1 => Vect::basis(&hh, j * dim).add(&Vect::basis(&hh, j))?,
            _ => {
                let (g, r) = model.split[j].expect("composite monomials factor");
                square
                    .apply(&dcols[g].tensor(&dcols[r]))?
                    .expect("factor coproducts stay within the cutoff")
            }
        };
        dcols.push(v);
    }
    let comult = LinMap::from_basis_images(h.clone(), hh, |j| dcols[j].clone())?;
    let counit = LinMap::from_entries(h.clone(), TensorShape::unit(), vec![(0, 0, int(1))])?;

    // The counit identity m∘(S⊗id)∘Δ = u∘ε pins S(u) as minus the sum of
    // S(v)·w over the terms v⊗w of Δ(u) with w of positive degree. Those
    // v are of lower degree, hence lower index, so one pass suffices.
    let mut scols: Vec<Vect> = Vec::with_capacity(dim);
    for (j, dcol) in dcols.iter().enumerate() {
        if model.degrees[j] == 0 {
            scols.push(Vect::basis(&h, 0));
            continue;
        }
        let mut acc = Vect::zero(&h);
        for (vw, c) in dcol.iter() {
            let (v, w) = (vw / dim, vw % dim);
            if w == 0 {
                continue;
            }
            let term = mult
                .apply(&scols[v].tensor(&Vect::basis(&h, w)))?
                .expect("antipode recursion stays within the cutoff");
            acc = acc.sub(&term.scale(c))?;
        }
        scols.push(acc);
    }
    let antipode = LinMap::from_basis_images(h.clone(), h.clone(), |j| scols[j].clone())?;
    let antipode_inv = lin_invert(&antipode).ok();

    let algebra = BraidedAlgebra::new_partial(braiding.clone(), mult, Some(Vect::basis(&h, 0)))?;
    let coalgebra = BraidedCoalgebra::new(braiding, comult, counit)?;
    let bialgebra = BraidedBialgebra::new(algebra, coalgebra)?;
    let hopf = BraidedHopf::new(bialgebra, antipode, antipode_inv)?;
    Ok(GradedStructure {
        family,
        cutoff,
        grades,
        degrees: model.degrees,
        hopf,
    })
}

/// Shrinks the structure to the span of the degrees ≤ `cutoff` and runs
/// the full suite there. Identities that leave the shrunk range degrade
/// to skipped entries, never to passes.
pub fn check_graded_up_to(
    g: &GradedStructure,
    cutoff: usize,
) -> Result<CheckReport, CatalogError> {
    if cutoff > g.cutoff {
        return Err(CatalogError::InvalidParameter(format!(
            "the structure is truncated above degree {}, cannot check up to {cutoff}",
            g.cutoff
        )));
    }
    let old = g.space();
    let n = old.dim();
    let keep: Vec<usize> = (0..n).filter(|&i| g.degrees[i] <= cutoff).collect();
    let k = keep.len();
    let mut pos = vec![None; n];
    for (new, &i) in keep.iter().enumerate() {
        pos[i] = Some(new);
    }
    let labels = keep.iter().map(|&i| old.labels()[i].clone()).collect();
    let space = Space::new(old.name(), labels);
    let h = TensorShape::of(&space);
    let hh = TensorShape::pair(&space, &space);
    let single = |i: usize| pos[i];
    let pair = |ab: usize| match (pos[ab / n], pos[ab % n]) {
        (Some(a), Some(b)) => Some(a * k + b),
        _ => None,
    };
    let kept_pair: Vec<usize> = keep
        .iter()
        .flat_map(|&a| keep.iter().map(move |&b| a * n + b))
        .collect();

    let b = g.hopf.bialgebra();
    let (psi, psi_esc) =
        restrict_columns(b.braiding().psi(), hh.clone(), hh.clone(), &kept_pair, &pair)?;
    let (psi_inv, inv_esc) = restrict_columns(
        b.braiding().psi_inv(),
        hh.clone(),
        hh.clone(),
        &kept_pair,
        &pair,
    )?;
    if !psi_esc.is_empty() || !inv_esc.is_empty() {
        return Err(CatalogError::InvalidParameter(format!(
            "the braiding does not preserve degrees up to {cutoff}"
        )));
    }

    let (mult_lin, mut mult_undef) =
        restrict_columns(b.mult().lin(), hh.clone(), h.clone(), &kept_pair, &single)?;
    for (jnew, &jold) in kept_pair.iter().enumerate() {
        if !b.mult().is_defined_at(jold) {
            mult_undef.insert(jnew);
        }
    }
    let (comult_lin, mut comult_undef) =
        restrict_columns(b.comult().lin(), h.clone(), hh.clone(), &keep, &pair)?;
    for (jnew, &jold) in keep.iter().enumerate() {
        if !b.comult().is_defined_at(jold) {
            comult_undef.insert(jnew);
        }
    }
    let (counit, _) =
        restrict_columns(b.counit(), h.clone(), TensorShape::unit(), &keep, &|i| Some(i))?;

    let unit = match b.algebra().unit() {
        Some(u) => {
            let mut coeffs = Vec::new();
            for (i, c) in u.iter() {
                match single(i) {
                    Some(inew) => coeffs.push((inew, c.clone())),
                    None => {
                        return Err(CatalogError::InvalidParameter(format!(
                            "the unit leaves the degrees up to {cutoff}"
                        )))
                    }
                }
            }
            Some(Vect::from_coeffs(&h, coeffs))
        }
        None => None,
    };

    let (s, s_esc) = restrict_columns(g.hopf.antipode(), h.clone(), h.clone(), &keep, &single)?;
    if !s_esc.is_empty() {
        return Err(CatalogError::InvalidParameter(format!(
            "the antipode does not preserve degrees up to {cutoff}"
        )));
    }
    let s_inv = match g.hopf.antipode_inv() {
        Some(si) => {
            let (si, esc) = restrict_columns(si, h.clone(), h.clone(), &keep, &single)?;
            if !esc.is_empty() {
                return Err(CatalogError::InvalidParameter(format!(
                    "the antipode inverse does not preserve degrees up to {cutoff}"
                )));
            }
            Some(si)
        }
        None => None,
    };

    let braiding = Braiding::from_parts_unchecked(space, psi, psi_inv);
    let algebra = BraidedAlgebra::from_parts_unchecked(
        braiding.clone(),
        PartialMap::with_undefined(mult_lin, mult_undef),
        unit,
    );
    let coalgebra = BraidedCoalgebra::from_parts_unchecked(
        braiding,
        PartialMap::with_undefined(comult_lin, comult_undef),
        counit,
    );
    let hopf = BraidedHopf::from_parts_unchecked(
        BraidedBialgebra::from_parts_unchecked(algebra, coalgebra),
        s,
        s_inv,
    );
    Ok(hopf.check())
}

/// Restricts a map to a subspace: kept columns whose image has support
/// outside the kept set are reported separately instead of truncated.
fn restrict_columns(
    src: &LinMap,
    dom_new: TensorShape,
    cod_new: TensorShape,
    dom_old_cols: &[usize],
    cod_map: &dyn Fn(usize) -> Option<usize>,
) -> Result<(LinMap, BTreeSet<usize>), CatalogError> {
    let mut entries = Vec::new();
    let mut escaped = BTreeSet::new();
    for (jnew, &jold) in dom_old_cols.iter().enumerate() {
        let col = src.column(jold);
        let mut mapped = Vec::new();
        let mut inside = true;
        for (iold, c) in col.iter() {
            match cod_map(iold) {
                Some(inew) => mapped.push((inew, jnew, c.clone())),
                None => {
                    inside = false;
                    break;
                }
            }
        }
        if inside {
            entries.extend(mapped);
        } else {
            escaped.insert(jnew);
        }
    }
    Ok((
        LinMap::from_entries(dom_new, cod_new, entries)?,
        escaped,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use braided_structures::{eq, Verdict};
    use exact_linalg::{ratio, shape_permutation};

    fn bline(q: i64, cutoff: usize) -> GradedStructure {
        make_braided_line_truncated(int(q), cutoff).unwrap()
    }

    #[test]
    fn gaussian_binomials_match_frozen_values() {
        let q = int(2);
        assert_eq!(q_binomial(2, 1, &q), int(3));
        assert_eq!(q_binomial(4, 2, &q), int(35));
        assert_eq!(q_binomial(4, 2, &int(1)), int(6));
        assert_eq!(q_binomial(3, 5, &q), int(0));
        assert_eq!(q_binomial(3, 2, &ratio(1, 2)), ratio(7, 4));
        for n in 0..=6usize {
            for k in 0..=n {
                assert_eq!(q_binomial(n, k, &q), q_binomial(n, n - k, &q));
            }
        }
    }

    #[test]
    fn coproduct_coefficients_are_gaussian_binomials() {
        let g = bline(2, 4);
        let d = g.bialgebra().comult().lin();
        let q = int(2);
        let n = g.space().dim();
        for total in 0..=4usize {
            assert_eq!(d.column(total).support().count(), total + 1);
            for k in 0..=total {
                assert_eq!(
                    d.coeff(k * n + (total - k), total),
                    q_binomial(total, k, &q),
                    "x{k}⊗x{} in Δ(x{total})",
                    total - k
                );
            }
        }
    }

    #[test]
    fn antipode_matches_the_closed_form() {
        // S(x^n) = (−1)^n·q^{n(n−1)/2}·x^n, frozen at q = 2
        let g = bline(2, 4);
        let s = g.hopf().antipode();
        for (n, c) in [1i64, -1, 2, -8, 64].iter().enumerate() {
            let col = s.column(n);
            assert_eq!(col.support().count(), 1);
            assert_eq!(col.coeff(n), int(*c));
        }
        assert!(g.hopf().antipode_inv().is_some());
    }

    #[test]
    fn classical_line_is_the_flip_with_pascal_coefficients() {
        let g = bline(1, 3);
        let hh = g.bialgebra().mult().domain().clone();
        assert_eq!(*g.bialgebra().braiding().psi(), shape_permutation(&hh, &[1, 0]));
        let n = g.space().dim();
        assert_eq!(g.bialgebra().comult().lin().coeff(n + 2, 3), int(3));
    }

    #[test]
    fn parameters_are_validated() {
        for bad in [
            make_braided_line_truncated(int(0), 3),
            make_braided_line_truncated(int(2), 9),
            make_quantum_plane_truncated(int(0), 3),
            make_quantum_plane_truncated(ratio(1, 2), 11),
        ] {
            assert!(matches!(bad, Err(CatalogError::InvalidParameter(_))));
        }
    }

    #[test]
    fn quantum_plane_relations_and_grading() {
        let g = make_quantum_plane_truncated(int(2), 3).unwrap();
        let n = g.space().dim();
        assert_eq!(n, 10);
        assert_eq!(g.grades()[2].dim(), 3);
        assert_eq!(g.degrees()[4], 2);
        // with 1, x, y, x², xy, y² at indices 0..6: yx = q·xy, xy stays 1
        let m = g.bialgebra().mult().lin();
        assert_eq!(m.coeff(4, 2 * n + 1), int(2));
        assert_eq!(m.coeff(4, n + 2), int(1));
        // braiding eigenvalue q^{bc−ad} on xy⊗x² is q²
        assert_eq!(g.bialgebra().braiding().psi().coeff(3 * n + 4, 4 * n + 3), int(4));
        // Δ(xy) = xy⊗1 + x⊗y + q⁻¹·y⊗x + 1⊗xy
        let d = g.bialgebra().comult().lin();
        assert_eq!(d.column(4).support().count(), 4);
        assert_eq!(d.coeff(n + 2, 4), int(1));
        assert_eq!(d.coeff(2 * n + 1, 4), ratio(1, 2));
        // the antipode reduces to the parity sign of the total degree
        let s = g.hopf().antipode();
        for j in 0..n {
            let col = s.column(j);
            assert_eq!(col.support().count(), 1);
            let sign = if g.degrees()[j].is_multiple_of(2) { 1 } else { -1 };
            assert_eq!(col.coeff(j), int(sign));
        }
    }

    #[test]
    fn full_depth_check_passes_with_skips_only() {
        let report = check_graded_up_to(&bline(2, 4), 4).unwrap();
        assert!(report.passed());
        assert!(!report.all_pass());
    }

    #[test]
    fn depth_zero_shrinks_to_the_ground_field() {
        assert!(check_graded_up_to(&bline(2, 4), 0).unwrap().all_pass());
    }

    #[test]
    fn depth_beyond_the_cutoff_is_rejected() {
        assert!(matches!(
            check_graded_up_to(&bline(2, 3), 4),
            Err(CatalogError::InvalidParameter(_))
        ));
    }

    #[test]
    fn corrupted_coproduct_fails_exactly_from_its_degree() {
        let g = bline(2, 3);
        let b = g.bialgebra();
        let n = g.space().dim();
        // overwrite the x⊗x coefficient of Δ(x²), 3 becomes 2
        let d = b.comult().lin();
        let entries: Vec<_> = d
            .entries()
            .map(|(i, j, c)| {
                if (i, j) == (n + 1, 2) {
                    (i, j, int(2))
                } else {
                    (i, j, c.clone())
                }
            })
            .collect();
        let comult =
            LinMap::from_entries(d.domain().clone(), d.codomain().clone(), entries).unwrap();
        let coalgebra = BraidedCoalgebra::from_parts_unchecked(
            b.braiding().clone(),
            PartialMap::total(comult),
            b.counit().clone(),
        );
        let bad = GradedStructure::from_parts_unchecked(
            g.family().clone(),
            g.cutoff(),
            g.grades().to_vec(),
            g.degrees().to_vec(),
            BraidedHopf::from_parts_unchecked(
                BraidedBialgebra::from_parts_unchecked(b.algebra().clone(), coalgebra),
                g.hopf().antipode().clone(),
                g.hopf().antipode_inv().cloned(),
            ),
        );
        // invisible while the corrupted degree is out of range
        assert!(check_graded_up_to(&bad, 1).unwrap().passed());
        // caught from degree 2 on, at the first affected product
        let report = check_graded_up_to(&bad, 2).unwrap();
        let dcm = report.entry(eq::DCM).unwrap();
        assert_eq!(dcm.verdict, Verdict::Fail);
        assert_eq!(dcm.witness.as_ref().unwrap().input_label, "x⊗x");
    }
}
