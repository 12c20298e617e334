use braided_structures::{
    check_comult_compat, check_hexagons, check_mult_compat, compare, eq, Braiding,
    BraidedBialgebra, CheckEntry, CheckReport, HexSide, PartialMap, Side, Verdict,
};
use exact_linalg::{LinMap, Space, TensorShape};

use crate::{BraidedComodule, BraidedModule, ComoduleAlgebra, ModComError, ModuleAlgebra};

fn id_on(space: &Space) -> PartialMap {
    PartialMap::identity(&TensorShape::of(space))
}

fn total(lin: &LinMap) -> PartialMap {
    PartialMap::total(lin.clone())
}

fn skip_entry(equation: &'static str, context: &str, skipped: usize) -> CheckEntry {
    CheckEntry {
        equation,
        context: context.to_string(),
        verdict: Verdict::Skipped,
        checked: 0,
        skipped,
        witness: None,
    }
}

/// All laws a braided module must satisfy: the cross-braiding hexagon and
/// multiplicativity, associativity and unitality of the action, the
/// braiding law for the action, and its inverse-braiding companion.
pub fn check_module(module: &BraidedModule) -> CheckReport {
    let mut report = CheckReport::new();
    let alg = module.algebra();
    let x = module.cross();
    let nu = module.action();
    let id_a = id_on(alg.space());
    let id_v = id_on(module.carrier());
    let psi = total(x.psi());
    let psi_inv = total(x.psi_inv());
    let psi_aa_inv = total(alg.braiding().psi_inv());
    let dummy = Braiding::flip(module.carrier());

    match module.side() {
        Side::Left => {
            report.merge(
                check_hexagons(x, HexSide::LeftVBraided, alg.braiding(), &dummy)
                    .expect("shapes validated at construction"),
            );
            report.merge(
                check_mult_compat(x, Side::Left, alg).expect("shapes validated at construction"),
            );
            let assoc_lhs = PartialMap::compose(nu, &PartialMap::tensor(&id_a, nu))
                .expect("shapes validated at construction");
            let assoc_rhs = PartialMap::compose(nu, &PartialMap::tensor(alg.mult(), &id_v))
                .expect("shapes validated at construction");
            report.push(compare(eq::ANU, "associativity", &assoc_lhs, &assoc_rhs));
            match alg.unit_map() {
                Some(unit) => {
                    let lhs = PartialMap::compose(nu, &PartialMap::tensor(&total(&unit), &id_v))
                        .expect("shapes validated at construction");
                    report.push(compare(eq::ANU, "unit", &lhs, &id_v));
                }
                None => report.push(skip_entry(eq::ANU, "unit (no unit)", module.carrier().dim())),
            }
            let b_lhs = PartialMap::compose(&psi, &PartialMap::tensor(&id_a, nu))
                .expect("shapes validated at construction");
            let b_rhs = braided_structures::chain(&[
                &PartialMap::tensor(nu, &id_a),
                &PartialMap::tensor(&id_a, &psi),
                &PartialMap::tensor(&total(alg.braiding().psi()), &id_v),
            ])
            .expect("shapes validated at construction");
            report.push(compare(eq::BNU, "action braiding", &b_lhs, &b_rhs));
            let inv_lhs = braided_structures::chain(&[
                &PartialMap::tensor(&id_a, nu),
                &PartialMap::tensor(&psi_aa_inv, &id_v),
                &PartialMap::tensor(&id_a, &psi_inv),
            ])
            .expect("shapes validated at construction");
            let inv_rhs = PartialMap::compose(&psi_inv, &PartialMap::tensor(nu, &id_a))
                .expect("shapes validated at construction");
            report.push(compare(eq::NULINV, "inverse braiding", &inv_lhs, &inv_rhs));
        }
        Side::Right => {
            report.merge(
                check_hexagons(x, HexSide::RightWBraided, &dummy, alg.braiding())
                    .expect("shapes validated at construction"),
            );
            report.merge(
                check_mult_compat(x, Side::Right, alg).expect("shapes validated at construction"),
            );
            let assoc_lhs = PartialMap::compose(nu, &PartialMap::tensor(nu, &id_a))
                .expect("shapes validated at construction");
            let assoc_rhs = PartialMap::compose(nu, &PartialMap::tensor(&id_v, alg.mult()))
                .expect("shapes validated at construction");
            report.push(compare(eq::AMU, "associativity", &assoc_lhs, &assoc_rhs));
            match alg.unit_map() {
                Some(unit) => {
                    let lhs = PartialMap::compose(nu, &PartialMap::tensor(&id_v, &total(&unit)))
                        .expect("shapes validated at construction");
                    report.push(compare(eq::AMU, "unit", &lhs, &id_v));
                }
                None => report.push(skip_entry(eq::AMU, "unit (no unit)", module.carrier().dim())),
            }
            let b_lhs = PartialMap::compose(&psi, &PartialMap::tensor(nu, &id_a))
                .expect("shapes validated at construction");
            let b_rhs = braided_structures::chain(&[
                &PartialMap::tensor(&id_a, nu),
                &PartialMap::tensor(&psi, &id_a),
                &PartialMap::tensor(&id_v, &total(alg.braiding().psi())),
            ])
            .expect("shapes validated at construction");
            report.push(compare(eq::BMU, "action braiding", &b_lhs, &b_rhs));
            let inv_lhs = braided_structures::chain(&[
                &PartialMap::tensor(nu, &id_a),
                &PartialMap::tensor(&id_v, &psi_aa_inv),
                &PartialMap::tensor(&psi_inv, &id_a),
            ])
            .expect("shapes validated at construction");
            let inv_rhs = PartialMap::compose(&psi_inv, &PartialMap::tensor(&id_a, nu))
                .expect("shapes validated at construction");
            report.push(compare(eq::NURINV, "inverse braiding", &inv_lhs, &inv_rhs));
        }
    }
    report
}

/// All laws a braided comodule must satisfy, mirroring [`check_module`] on
/// the coalgebra side.
pub fn check_comodule(comodule: &BraidedComodule) -> CheckReport {
    let mut report = CheckReport::new();
    let coalg = comodule.coalgebra();
    let x = comodule.cross();
    let rho = comodule.coaction();
    let id_h = id_on(coalg.space());
    let id_v = id_on(comodule.carrier());
    let psi = total(x.psi());
    let psi_inv = total(x.psi_inv());
    let psi_hh_inv = total(coalg.braiding().psi_inv());
    let eps = total(coalg.counit());
    let dummy = Braiding::flip(comodule.carrier());

    match comodule.side() {
        Side::Left => {
            report.merge(
                check_hexagons(x, HexSide::RightWBraided, &dummy, coalg.braiding())
                    .expect("shapes validated at construction"),
            );
            report.merge(
                check_comult_compat(x, Side::Right, coalg)
                    .expect("shapes validated at construction"),
            );
            let co_lhs = PartialMap::compose(&PartialMap::tensor(&id_h, rho), rho)
                .expect("shapes validated at construction");
            let co_rhs = PartialMap::compose(&PartialMap::tensor(coalg.comult(), &id_v), rho)
                .expect("shapes validated at construction");
            report.push(compare(eq::DROH, "coassociativity", &co_lhs, &co_rhs));
            let cu_lhs = PartialMap::compose(&PartialMap::tensor(&eps, &id_v), rho)
                .expect("shapes validated at construction");
            report.push(compare(eq::DROH, "counit", &cu_lhs, &id_v));
            let b_lhs = PartialMap::compose(&PartialMap::tensor(&id_h, rho), &psi)
                .expect("shapes validated at construction");
            let b_rhs = braided_structures::chain(&[
                &PartialMap::tensor(&total(coalg.braiding().psi()), &id_v),
                &PartialMap::tensor(&id_h, &psi),
                &PartialMap::tensor(rho, &id_h),
            ])
            .expect("shapes validated at construction");
            report.push(compare(eq::BRL, "coaction braiding", &b_lhs, &b_rhs));
            let inv_lhs = braided_structures::chain(&[
                &PartialMap::tensor(&id_h, &psi_inv),
                &PartialMap::tensor(&psi_hh_inv, &id_v),
                &PartialMap::tensor(&id_h, rho),
            ])
            .expect("shapes validated at construction");
            let inv_rhs = PartialMap::compose(&PartialMap::tensor(rho, &id_h), &psi_inv)
                .expect("shapes validated at construction");
            report.push(compare(eq::INVPHV, "inverse braiding", &inv_lhs, &inv_rhs));
        }
        Side::Right => {
            report.merge(
                check_hexagons(x, HexSide::LeftVBraided, coalg.braiding(), &dummy)
                    .expect("shapes validated at construction"),
            );
            report.merge(
                check_comult_compat(x, Side::Left, coalg)
                    .expect("shapes validated at construction"),
            );
            let co_lhs = PartialMap::compose(&PartialMap::tensor(rho, &id_h), rho)
                .expect("shapes validated at construction");
            let co_rhs = PartialMap::compose(&PartialMap::tensor(&id_v, coalg.comult()), rho)
                .expect("shapes validated at construction");
            report.push(compare(eq::ROHD, "coassociativity", &co_lhs, &co_rhs));
            let cu_lhs = PartialMap::compose(&PartialMap::tensor(&id_v, &eps), rho)
                .expect("shapes validated at construction");
            report.push(compare(eq::ROHD, "counit", &cu_lhs, &id_v));
            let b_lhs = PartialMap::compose(&PartialMap::tensor(rho, &id_h), &psi)
                .expect("shapes validated at construction");
            let b_rhs = braided_structures::chain(&[
                &PartialMap::tensor(&id_v, &total(coalg.braiding().psi())),
                &PartialMap::tensor(&psi, &id_h),
                &PartialMap::tensor(&id_h, rho),
            ])
            .expect("shapes validated at construction");
            report.push(compare(eq::BRR, "coaction braiding", &b_lhs, &b_rhs));
            let inv_lhs = braided_structures::chain(&[
                &PartialMap::tensor(&psi_inv, &id_h),
                &PartialMap::tensor(&id_v, &psi_hh_inv),
                &PartialMap::tensor(rho, &id_h),
            ])
            .expect("shapes validated at construction");
            let inv_rhs = PartialMap::compose(&PartialMap::tensor(&id_h, rho), &psi_inv)
                .expect("shapes validated at construction");
            report.push(compare(eq::INVPHV, "inverse braiding", &inv_lhs, &inv_rhs));
        }
    }
    report
}

fn ensure_acting_algebra(
    module: &BraidedModule,
    acting: &BraidedBialgebra,
) -> Result<(), ModComError> {
    let alg = module.algebra();
    if acting.braiding() != alg.braiding()
        || acting.mult() != alg.mult()
        || acting.unit_map() != alg.unit_map()
    {
        return Err(ModComError::Mismatch(
            "acting bialgebra does not restrict to the module's algebra".into(),
        ));
    }
    Ok(())
}

fn ensure_acting_coalgebra(
    comodule: &BraidedComodule,
    acting: &BraidedBialgebra,
) -> Result<(), ModComError> {
    let coalg = comodule.coalgebra();
    if acting.braiding() != coalg.braiding()
        || acting.comult() != coalg.comult()
        || acting.counit() != coalg.counit()
    {
        return Err(ModComError::Mismatch(
            "acting bialgebra does not restrict to the comodule's coalgebra".into(),
        ));
    }
    Ok(())
}

fn ensure_carrier_algebra(
    carrier: &Space,
    carrier_algebra: &braided_structures::BraidedAlgebra,
) -> Result<(), ModComError> {
    if carrier_algebra.space() != carrier {
        return Err(ModComError::Mismatch(
            "carrier algebra does not live on the module carrier".into(),
        ));
    }
    Ok(())
}

/// Module laws plus equivariance of the carrier's product and unit under
/// the action of a bialgebra.
pub fn check_module_algebra(
    ma: &ModuleAlgebra,
    acting: &BraidedBialgebra,
) -> Result<CheckReport, ModComError> {
    let module = ma.module();
    let b = ma.carrier_algebra();
    ensure_acting_algebra(module, acting)?;
    ensure_carrier_algebra(module.carrier(), b)?;

    let mut report = check_module(module);
    let x = module.cross();
    let nu = module.action();
    let id_h = id_on(acting.space());
    let id_b = id_on(module.carrier());
    let psi = total(x.psi());

    match module.side() {
        Side::Left => {
            report.merge(check_mult_compat(x, Side::Right, b)?);
            report.merge(check_comult_compat(x, Side::Left, acting.coalgebra())?);
            let lhs = PartialMap::compose(nu, &PartialMap::tensor(&id_h, b.mult()))
                .expect("shapes validated at construction");
            let rhs = braided_structures::chain(&[
                &PartialMap::compose(b.mult(), &PartialMap::tensor(nu, nu))
                    .expect("shapes validated at construction"),
                &braided_structures::tensor_all(&[&id_h, &psi, &id_b]),
                &braided_structures::tensor_all(&[acting.comult(), &id_b, &id_b]),
            ])
            .expect("shapes validated at construction");
            report.push(compare(eq::NUM, "left", &lhs, &rhs));
            match b.unit_map() {
                Some(unit_b) => {
                    let lhs = PartialMap::compose(nu, &PartialMap::tensor(&id_h, &total(&unit_b)))
                        .expect("shapes validated at construction");
                    let rhs = PartialMap::compose(&total(&unit_b), &total(acting.counit()))
                        .expect("shapes validated at construction");
                    report.push(compare(eq::NU1, "left", &lhs, &rhs));
                }
                None => report.push(skip_entry(eq::NU1, "left (no unit)", acting.space().dim())),
            }
        }
        Side::Right => {
            report.merge(check_mult_compat(x, Side::Left, b)?);
            report.merge(check_comult_compat(x, Side::Right, acting.coalgebra())?);
            let lhs = PartialMap::compose(nu, &PartialMap::tensor(b.mult(), &id_h))
                .expect("shapes validated at construction");
            let rhs = braided_structures::chain(&[
                &PartialMap::compose(b.mult(), &PartialMap::tensor(nu, nu))
                    .expect("shapes validated at construction"),
                &braided_structures::tensor_all(&[&id_b, &psi, &id_h]),
                &braided_structures::tensor_all(&[&id_b, &id_b, acting.comult()]),
            ])
            .expect("shapes validated at construction");
            report.push(compare(eq::NUM, "right", &lhs, &rhs));
            match b.unit_map() {
                Some(unit_b) => {
                    let lhs = PartialMap::compose(nu, &PartialMap::tensor(&total(&unit_b), &id_h))
                        .expect("shapes validated at construction");
                    let rhs = PartialMap::compose(&total(&unit_b), &total(acting.counit()))
                        .expect("shapes validated at construction");
                    report.push(compare(eq::NU1, "right", &lhs, &rhs));
                }
                None => report.push(skip_entry(eq::NU1, "right (no unit)", acting.space().dim())),
            }
        }
    }
    Ok(report)
}

/// Comodule laws plus multiplicativity of the coaction with respect to the
/// carrier's product and unit.
pub fn check_comodule_algebra(
    ca: &ComoduleAlgebra,
    acting: &BraidedBialgebra,
) -> Result<CheckReport, ModComError> {
    let comodule = ca.comodule();
    let b = ca.carrier_algebra();
    ensure_acting_coalgebra(comodule, acting)?;
    ensure_carrier_algebra(comodule.carrier(), b)?;

    let mut report = check_comodule(comodule);
    let x = comodule.cross();
    let rho = comodule.coaction();
    let id_h = id_on(acting.space());
    let id_b = id_on(comodule.carrier());
    let psi = total(x.psi());

    match comodule.side() {
        Side::Left => {
            report.merge(check_mult_compat(x, Side::Left, b)?);
            report.merge(check_mult_compat(x, Side::Right, acting.algebra())?);
            let lhs = PartialMap::compose(rho, b.mult()).expect("shapes validated at construction");
            let rhs = braided_structures::chain(&[
                &PartialMap::tensor(acting.mult(), b.mult()),
                &braided_structures::tensor_all(&[&id_h, &psi, &id_b]),
                &PartialMap::tensor(rho, rho),
            ])
            .expect("shapes validated at construction");
            report.push(compare(eq::RHORM, "left", &lhs, &rhs));
            match (b.unit_map(), acting.unit_map()) {
                (Some(unit_b), Some(unit_h)) => {
                    let lhs = PartialMap::compose(rho, &total(&unit_b))
                        .expect("shapes validated at construction");
                    let rhs = PartialMap::tensor(&total(&unit_h), &total(&unit_b));
                    report.push(compare(eq::RR1, "left", &lhs, &rhs));
                }
                _ => report.push(skip_entry(eq::RR1, "left (no unit)", 1)),
            }
        }
        Side::Right => {
            report.merge(check_mult_compat(x, Side::Left, acting.algebra())?);
            report.merge(check_mult_compat(x, Side::Right, b)?);
            let lhs = PartialMap::compose(rho, b.mult()).expect("shapes validated at construction");
            let rhs = braided_structures::chain(&[
                &PartialMap::tensor(b.mult(), acting.mult()),
                &braided_structures::tensor_all(&[&id_b, &psi, &id_h]),
                &PartialMap::tensor(rho, rho),
            ])
            .expect("shapes validated at construction");
            report.push(compare(eq::RHORM, "right", &lhs, &rhs));
            match (b.unit_map(), acting.unit_map()) {
                (Some(unit_b), Some(unit_h)) => {
                    let lhs = PartialMap::compose(rho, &total(&unit_b))
                        .expect("shapes validated at construction");
                    let rhs = PartialMap::tensor(&total(&unit_b), &total(&unit_h));
                    report.push(compare(eq::RR1, "right", &lhs, &rhs));
                }
                _ => report.push(skip_entry(eq::RR1, "right (no unit)", 1)),
            }
        }
    }
    Ok(report)
}
