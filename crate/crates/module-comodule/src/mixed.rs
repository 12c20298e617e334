//! Cross-braidings between a space and the dual of its partner, induced
//! from an existing cross-braiding through the evaluation pairing.
//!
//! Throughout, the input cross lives on H⊗V or V⊗H; U is the dual of H
//! and W the dual of V. All induced maps are defined by transposing the
//! inverse of the input along the pairing, so they compose with the
//! evaluation the same way the primal braiding composes with coevaluation.

use braided_structures::{eq, CrossBraiding, Provenance};
use exact_linalg::{LinMap, TensorShape};

use crate::ModComError;

/// Ψ: H⊗V → V⊗H induces U⊗V → V⊗U. Entrywise the image is the
/// pairing-transpose of Ψ⁻¹.
pub(crate) fn dualize_left_factor(x: &CrossBraiding) -> Result<CrossBraiding, ModComError> {
    let h = x.left_space();
    let v = x.right_space();
    let u = h.dual();
    let (nh, nv) = (h.dim(), v.dim());
    let psi = LinMap::from_entries(
        TensorShape::pair(&u, v),
        TensorShape::pair(v, &u),
        x.psi_inv().entries().map(|(out, inp, c)| {
            let (r, k) = (out / nv, out % nv);
            let (i, a) = (inp / nh, inp % nh);
            (k * nh + a, r * nv + i, c.clone())
        }),
    )?;
    Ok(CrossBraiding::new(
        u,
        v.clone(),
        psi,
        Provenance::InducedDualCirc,
    )?)
}

/// Ψ: V⊗H → H⊗V induces V⊗U → U⊗V.
pub(crate) fn dualize_right_factor(x: &CrossBraiding) -> Result<CrossBraiding, ModComError> {
    let v = x.left_space();
    let h = x.right_space();
    let u = h.dual();
    let (nh, nv) = (h.dim(), v.dim());
    let psi = LinMap::from_entries(
        TensorShape::pair(v, &u),
        TensorShape::pair(&u, v),
        x.psi_inv().entries().map(|(out, inp, c)| {
            let (k, r) = (out / nh, out % nh);
            let (a, i) = (inp / nv, inp % nv);
            (a * nv + k, i * nh + r, c.clone())
        }),
    )?;
    Ok(CrossBraiding::new(
        v.clone(),
        u,
        psi,
        Provenance::InducedDualCirc,
    )?)
}

/// Ψ: H⊗V → V⊗H induces H⊗W → W⊗H, dualizing the carrier instead of the
/// acting factor.
pub(crate) fn dualize_carrier_left(x: &CrossBraiding) -> Result<CrossBraiding, ModComError> {
    let h = x.left_space();
    let v = x.right_space();
    let w = v.dual();
    let (nh, nv) = (h.dim(), v.dim());
    let psi = LinMap::from_entries(
        TensorShape::pair(h, &w),
        TensorShape::pair(&w, h),
        x.psi_inv().entries().map(|(out, inp, c)| {
            let (b, k) = (out / nv, out % nv);
            let (i, a) = (inp / nh, inp % nh);
            (i * nh + b, a * nv + k, c.clone())
        }),
    )?;
    Ok(CrossBraiding::new(
        h.clone(),
        w,
        psi,
        Provenance::InducedDualCirc,
    )?)
}

/// Ψ: V⊗H → H⊗V induces W⊗H → H⊗W.
pub(crate) fn dualize_carrier_right(x: &CrossBraiding) -> Result<CrossBraiding, ModComError> {
    let v = x.left_space();
    let h = x.right_space();
    let w = v.dual();
    let (nh, nv) = (h.dim(), v.dim());
    let psi = LinMap::from_entries(
        TensorShape::pair(&w, h),
        TensorShape::pair(h, &w),
        x.psi_inv().entries().map(|(out, inp, c)| {
            let (k, b) = (out / nh, out % nh);
            let (a, i) = (inp / nv, inp % nv);
            (b * nv + i, k * nh + a, c.clone())
        }),
    )?;
    Ok(CrossBraiding::new(
        w,
        h.clone(),
        psi,
        Provenance::InducedDualCirc,
    )?)
}

/// Ψ: H⊗V → V⊗H induces W⊗U → U⊗W by dualizing both factors. The two
/// orders of dualizing must agree; the construction checks that they do.
pub(crate) fn bullet_from_left_arrangement(
    x: &CrossBraiding,
) -> Result<CrossBraiding, ModComError> {
    let h = x.left_space();
    let v = x.right_space();
    let u = h.dual();
    let w = v.dual();
    let (nh, nv) = (h.dim(), v.dim());
    let dom = TensorShape::pair(&w, &u);
    let cod = TensorShape::pair(&u, &w);
    let via_acting = dualize_left_factor(x)?;
    let via_carrier = dualize_carrier_left(x)?;
    let form1 = LinMap::from_entries(
        dom.clone(),
        cod.clone(),
        via_acting.psi().entries().map(|(out, inp, c)| {
            let (k, a) = (out / nh, out % nh);
            let (r, i) = (inp / nv, inp % nv);
            (a * nv + i, k * nh + r, c.clone())
        }),
    )?;
    let form2 = LinMap::from_entries(
        dom,
        cod,
        via_carrier.psi().entries().map(|(out, inp, c)| {
            let (i, r) = (out / nh, out % nh);
            let (a, k) = (inp / nv, inp % nv);
            (a * nv + i, k * nh + r, c.clone())
        }),
    )?;
    if form1 != form2 {
        return Err(ModComError::Inconsistent(format!(
            "the two defining expressions for the doubly dualized braiding on {w}⊗{u} disagree ({})",
            eq::BUW
        )));
    }
    Ok(CrossBraiding::new(
        w,
        u,
        form1,
        Provenance::DoubleDualBullet,
    )?)
}

/// Ψ: V⊗H → H⊗V induces U⊗W → W⊗U by dualizing both factors, again
/// checking that both orders agree.
pub(crate) fn bullet_from_right_arrangement(
    x: &CrossBraiding,
) -> Result<CrossBraiding, ModComError> {
    let v = x.left_space();
    let h = x.right_space();
    let u = h.dual();
    let w = v.dual();
    let (nh, nv) = (h.dim(), v.dim());
    let dom = TensorShape::pair(&u, &w);
    let cod = TensorShape::pair(&w, &u);
    let via_acting = dualize_right_factor(x)?;
    let via_carrier = dualize_carrier_right(x)?;
    let form1 = LinMap::from_entries(
        dom.clone(),
        cod.clone(),
        via_acting.psi().entries().map(|(out, inp, c)| {
            let (a, k) = (out / nv, out % nv);
            let (i, r) = (inp / nh, inp % nh);
            (i * nh + a, r * nv + k, c.clone())
        }),
    )?;
    let form2 = LinMap::from_entries(
        dom,
        cod,
        via_carrier.psi().entries().map(|(out, inp, c)| {
            let (r, i) = (out / nv, out % nv);
            let (k, a) = (inp / nh, inp % nh);
            (i * nh + a, r * nv + k, c.clone())
        }),
    )?;
    if form1 != form2 {
        return Err(ModComError::Inconsistent(format!(
            "the two defining expressions for the doubly dualized braiding on {u}⊗{w} disagree ({})",
            eq::BUW
        )));
    }
    Ok(CrossBraiding::new(
        u,
        w,
        form1,
        Provenance::DoubleDualBullet,
    )?)
}

/// Partner of a doubly induced cross on H⊗V: the corresponding W⊗H → H⊗W
/// map, transposed along the forward direction rather than the inverse.
pub(crate) fn carrier_transpose_forward(y: &CrossBraiding) -> Result<LinMap, ModComError> {
    let h = y.left_space();
    let v = y.right_space();
    let w = v.dual();
    let (nh, nv) = (h.dim(), v.dim());
    Ok(LinMap::from_entries(
        TensorShape::pair(&w, h),
        TensorShape::pair(h, &w),
        y.psi().entries().map(|(out, inp, c)| {
            let (k, b) = (out / nh, out % nh);
            let (a, i) = (inp / nv, inp % nv);
            (b * nv + i, k * nh + a, c.clone())
        }),
    )?)
}

/// Mirror of [`carrier_transpose_forward`] for a doubly induced cross on
/// V⊗H: the corresponding H⊗W → W⊗H map.
pub(crate) fn carrier_transpose_forward_mirror(
    y: &CrossBraiding,
) -> Result<LinMap, ModComError> {
    let v = y.left_space();
    let h = y.right_space();
    let w = v.dual();
    let (nh, nv) = (h.dim(), v.dim());
    Ok(LinMap::from_entries(
        TensorShape::pair(h, &w),
        TensorShape::pair(&w, h),
        y.psi().entries().map(|(out, inp, c)| {
            let (b, i) = (out / nv, out % nv);
            let (k, a) = (inp / nh, inp % nh);
            (i * nh + b, a * nv + k, c.clone())
        }),
    )?)
}
