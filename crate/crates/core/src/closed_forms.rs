//! Closed-form F-index expressions evaluated from invariant bundles, without
//! building the composite graph.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::indices::InvariantBundle;
use crate::scalar::{Checked, ExactInt};
use crate::transforms::SubdivisionOp;

/// Which closed form a value came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum FormulaId {
    /// F of a generalized hierarchical product.
    Thm1,
    Prop1S,
    Prop1R,
    Prop1Q,
    Prop1T,
    Thm2S,
    Thm3R,
    Thm4Q,
    Thm5T,
    /// `C_n +_S H`.
    Cor1,
    /// `P_n +_S H` with the coefficients as originally printed.
    Cor2Printed,
    /// `P_n +_S H` re-derived from the `S`-sum formula.
    Cor2Corrected,
    Ex3S,
    Ex3R,
    Ex3Q,
    Ex3T,
}

impl FormulaId {
    pub const ALL: [FormulaId; 16] = [
        Self::Thm1,
        Self::Prop1S,
        Self::Prop1R,
        Self::Prop1Q,
        Self::Prop1T,
        Self::Thm2S,
        Self::Thm3R,
        Self::Thm4Q,
        Self::Thm5T,
        Self::Cor1,
        Self::Cor2Printed,
        Self::Cor2Corrected,
        Self::Ex3S,
        Self::Ex3R,
        Self::Ex3Q,
        Self::Ex3T,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Self::Thm1 => "THM1",
            Self::Prop1S => "PROP1_S",
            Self::Prop1R => "PROP1_R",
            Self::Prop1Q => "PROP1_Q",
            Self::Prop1T => "PROP1_T",
            Self::Thm2S => "THM2_S",
            Self::Thm3R => "THM3_R",
            Self::Thm4Q => "THM4_Q",
            Self::Thm5T => "THM5_T",
            Self::Cor1 => "COR1",
            Self::Cor2Printed => "COR2_PRINTED",
            Self::Cor2Corrected => "COR2_CORRECTED",
            Self::Ex3S => "EX3_S",
            Self::Ex3R => "EX3_R",
            Self::Ex3Q => "EX3_Q",
            Self::Ex3T => "EX3_T",
        }
    }

    pub fn prop1(op: SubdivisionOp) -> Self {
        match op {
            SubdivisionOp::S => Self::Prop1S,
            SubdivisionOp::R => Self::Prop1R,
            SubdivisionOp::Q => Self::Prop1Q,
            SubdivisionOp::T => Self::Prop1T,
        }
    }

    pub fn fsum(op: SubdivisionOp) -> Self {
        match op {
            SubdivisionOp::S => Self::Thm2S,
            SubdivisionOp::R => Self::Thm3R,
            SubdivisionOp::Q => Self::Thm4Q,
            SubdivisionOp::T => Self::Thm5T,
        }
    }

    pub fn example3(op: SubdivisionOp) -> Self {
        match op {
            SubdivisionOp::S => Self::Ex3S,
            SubdivisionOp::R => Self::Ex3R,
            SubdivisionOp::Q => Self::Ex3Q,
            SubdivisionOp::T => Self::Ex3T,
        }
    }
}

impl fmt::Display for FormulaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

type C<T> = Checked<T>;

fn c<T: ExactInt>(v: &T) -> C<T> {
    Checked::new(v)
}

fn k<T: ExactInt>(v: i64) -> C<T> {
    Checked::lit(v)
}

/// `F(G(U)ΠH) = |V(H)|F(G) + 6|E(H)|Σ_U d² + 3M1(H)Σ_U d + |U|F(H)`.
///
/// `bg` carries the subset `U`; only the whole-graph fields of `bh` are read.
pub fn thm1_f_hierarchical<T: ExactInt>(
    bg: &InvariantBundle<T>,
    bh: &InvariantBundle<T>,
) -> Result<T> {
    if bg.subset_size.is_zero() {
        return Err(Error::EmptySubset);
    }
    (c(&bh.n_vertices) * c(&bg.f)
        + k(6) * c(&bh.n_edges) * c(&bg.sum_deg2_u)
        + k(3) * c(&bh.m1) * c(&bg.sum_deg_u)
        + c(&bg.subset_size) * c(&bh.f))
    .finish("hierarchical product closed form")
}

/// F-index of `S/R/Q/T(G)` from the invariants of `G`.
pub fn prop1_f_transformed<T: ExactInt>(b: &InvariantBundle<T>, op: SubdivisionOp) -> Result<T> {
    let value = match op {
        SubdivisionOp::S => c(&b.f) + k(8) * c(&b.n_edges),
        SubdivisionOp::R => k(8) * c(&b.f) + k(8) * c(&b.n_edges),
        SubdivisionOp::Q => c(&b.f) + c(&b.xi4) + k(3) * c(&b.rezm),
        SubdivisionOp::T => k(8) * c(&b.f) + c(&b.xi4) + k(3) * c(&b.rezm),
    };
    value.finish("transformed graph closed form")
}

fn require_two_vertices<T: ExactInt>(b: &InvariantBundle<T>) -> Result<()> {
    let two = T::from_u8(2).expect("2 is representable");
    if b.n_vertices >= two {
        Ok(())
    } else if b.n_vertices.is_zero() {
        Err(Error::TooSmall(0))
    } else {
        Err(Error::TooSmall(1))
    }
}

/// F-index of the F-sum `G +_op H`. Both bundles are read as whole-graph
/// invariants.
pub fn thm_fsum_f<T: ExactInt>(
    bg: &InvariantBundle<T>,
    bh: &InvariantBundle<T>,
    op: SubdivisionOp,
) -> Result<T> {
    require_two_vertices(bg)?;
    let (vg, eg, fg, m1g) = (c(&bg.n_vertices), c(&bg.n_edges), c(&bg.f), c(&bg.m1));
    let (vh, eh, fh, m1h) = (c(&bh.n_vertices), c(&bh.n_edges), c(&bh.f), c(&bh.m1));
    let value = match op {
        SubdivisionOp::S => {
            vh.clone() * fg + vg * fh + k(6) * eh * m1g + k(6) * eg.clone() * m1h + k(8) * vh * eg
        }
        SubdivisionOp::R => {
            k(8) * vh.clone() * fg
                + vg * fh
                + k(24) * eh * m1g
                + k(12) * eg.clone() * m1h
                + k(8) * vh * eg
        }
        SubdivisionOp::Q => {
            vh.clone() * fg
                + vg * fh
                + k(6) * eh * m1g
                + k(6) * eg * m1h
                + vh.clone() * c(&bg.xi4)
                + k(3) * vh * c(&bg.rezm)
        }
        SubdivisionOp::T => {
            k(8) * vh.clone() * fg
                + vg * fh
                + k(24) * eh * m1g
                + k(12) * eg * m1h
                + vh.clone() * c(&bg.xi4)
                + k(3) * vh * c(&bg.rezm)
        }
    };
    value.finish("F-sum closed form")
}

/// `F(C_n +_S H) = nF(H) + 6nM1(H) + 24n|E(H)| + 16n|V(H)|`, `n ≥ 3`.
pub fn cor1_cycle_s<T: ExactInt>(n: usize, bh: &InvariantBundle<T>) -> Result<T> {
    if n < 3 {
        return Err(Error::BadParam(format!(
            "cycle order must be >= 3, got {n}"
        )));
    }
    let n = C::<T>::count(n);
    (n.clone() * c(&bh.f)
        + k(6) * n.clone() * c(&bh.m1)
        + k(24) * n.clone() * c(&bh.n_edges)
        + k(16) * n * c(&bh.n_vertices))
    .finish("C_n +_S H closed form")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Cor2Variant {
    /// `nF(H) + 6nM1(H) + 12n(2n−3)|E(H)| + 2n(8n−11)|V(H)|`; does not agree
    /// with direct construction.
    Printed,
    /// `nF(H) + 6(n−1)M1(H) + (24n−36)|E(H)| + (16n−22)|V(H)|`.
    Corrected,
}

/// `F(P_n +_S H)` for `n ≥ 2`, in either variant.
pub fn cor2_path_s<T: ExactInt>(
    n: usize,
    bh: &InvariantBundle<T>,
    variant: Cor2Variant,
) -> Result<T> {
    if n < 2 {
        return Err(Error::BadParam(format!("path order must be >= 2, got {n}")));
    }
    let nn = C::<T>::count(n);
    let (fh, m1h, eh, vh) = (c(&bh.f), c(&bh.m1), c(&bh.n_edges), c(&bh.n_vertices));
    let value = match variant {
        Cor2Variant::Printed => {
            nn.clone() * fh
                + k(6) * nn.clone() * m1h
                + k(12) * nn.clone() * (k(2) * nn.clone() - k(3)) * eh
                + k(2) * nn.clone() * (k(8) * nn - k(11)) * vh
        }
        Cor2Variant::Corrected => {
            nn.clone() * fh
                + k(6) * (nn.clone() - k(1)) * m1h
                + (k(24) * nn.clone() - k(36)) * eh
                + (k(16) * nn - k(22)) * vh
        }
    };
    value.finish("P_n +_S H closed form")
}

/// The bivariate polynomials for `F(P_n +_op P_m)` as printed.
///
/// For `Q` and `T` these were obtained with `ReZM(P_n) = 16n − 36`, which is
/// only true for `n ≥ 3`; at `n = 2` they undershoot the true value by `18m`.
pub fn example3_path_path<T: ExactInt>(n: usize, m: usize, op: SubdivisionOp) -> Result<T> {
    if n < 2 || m < 2 {
        return Err(Error::BadParam(format!(
            "path orders must be >= 2, got ({n}, {m})"
        )));
    }
    let (n, m) = (C::<T>::count(n), C::<T>::count(m));
    let nm = n.clone() * m.clone();
    let value = match op {
        SubdivisionOp::S => k(72) * nm - k(74) * n - k(82) * m + k(72),
        SubdivisionOp::R => k(224) * nm - k(182) * n - k(312) * m + k(216),
        SubdivisionOp::Q => k(128) * nm - k(74) * n - k(212) * m + k(72),
        SubdivisionOp::T => k(280) * nm - k(182) * n - k(442) * m + k(216),
    };
    value.finish("P_n +_F P_m polynomial")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BasicFamily {
    Path,
    Cycle,
}

/// Closed-form invariants of `P_n` or `C_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyInvariants<T> {
    pub family: BasicFamily,
    pub n: usize,
    pub n_edges: T,
    pub f: T,
    pub m1: T,
    pub xi4: T,
    pub rezm: T,
}

pub fn family_invariants<T: ExactInt>(
    family: BasicFamily,
    n: usize,
) -> Result<FamilyInvariants<T>> {
    let nn = C::<T>::count(n);
    let what = "family invariants";
    let inv = match family {
        BasicFamily::Path => {
            if n < 2 {
                return Err(Error::BadParam(format!("path order must be >= 2, got {n}")));
            }
            // P_2 has no internal vertex; its single edge is 1·1·(1+1).
            let (xi4, rezm) = if n == 2 {
                (k(2), k(2))
            } else {
                (k(16) * nn.clone() - k(30), k(16) * nn.clone() - k(36))
            };
            FamilyInvariants {
                family,
                n,
                n_edges: (nn.clone() - k(1)).finish(what)?,
                f: (k(8) * nn.clone() - k(14)).finish(what)?,
                m1: (k(4) * nn - k(6)).finish(what)?,
                xi4: xi4.finish(what)?,
                rezm: rezm.finish(what)?,
            }
        }
        BasicFamily::Cycle => {
            if n < 3 {
                return Err(Error::BadParam(format!(
                    "cycle order must be >= 3, got {n}"
                )));
            }
            FamilyInvariants {
                family,
                n,
                n_edges: nn.clone().finish(what)?,
                f: (k(8) * nn.clone()).finish(what)?,
                m1: (k(4) * nn.clone()).finish(what)?,
                xi4: (k(16) * nn.clone()).finish(what)?,
                rezm: (k(16) * nn).finish(what)?,
            }
        }
    };
    Ok(inv)
}
