//! Degree-based topological indices, computed exactly.
//!
//! Every index is available for any [`ExactInt`]; overflow surfaces as
//! [`Error::Overflow`]. Where an index has both a vertex-sum and an edge-sum
//! form, both are provided.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSubset};
use crate::scalar::{checked_pow, checked_sum, from_count, ExactInt};

fn degree_values<T: ExactInt>(g: &Graph) -> Result<Vec<T>> {
    g.degrees()
        .into_iter()
        .map(|d| from_count(d, "degree"))
        .collect()
}

fn vertex_power_sum<T: ExactInt>(g: &Graph, exp: u32, what: &'static str) -> Result<T> {
    let degs = degree_values::<T>(g)?;
    checked_sum(degs.iter().map(|d| checked_pow(d, exp, what)), what)
}

/// Sums `f(d(u), d(v))` over the edges.
fn edge_sum<T, F>(g: &Graph, what: &'static str, f: F) -> Result<T>
where
    T: ExactInt,
    F: Fn(&T, &T) -> Option<T>,
{
    let degs = degree_values::<T>(g)?;
    checked_sum(
        g.edges()
            .map(|(u, v)| f(&degs[u], &degs[v]).ok_or(Error::Overflow(what))),
        what,
    )
}

/// `M1(G) = Σ_v d(v)²`. The edge form is evaluated as well in debug builds
/// and must agree.
pub fn first_zagreb<T: ExactInt>(g: &Graph) -> Result<T> {
    let value = vertex_power_sum(g, 2, "first Zagreb index")?;
    debug_assert_eq!(Ok(&value), first_zagreb_edge_form::<T>(g).as_ref());
    Ok(value)
}

/// `Σ_{uv∈E} [d(u) + d(v)]`.
pub fn first_zagreb_edge_form<T: ExactInt>(g: &Graph) -> Result<T> {
    edge_sum(g, "first Zagreb index", |a: &T, b: &T| a.checked_add(b))
}

/// `M2(G) = Σ_{uv∈E} d(u)·d(v)`.
pub fn second_zagreb<T: ExactInt>(g: &Graph) -> Result<T> {
    edge_sum(g, "second Zagreb index", |a: &T, b: &T| a.checked_mul(b))
}

/// The forgotten index `F(G) = Σ_v d(v)³`.
pub fn f_index<T: ExactInt>(g: &Graph) -> Result<T> {
    vertex_power_sum(g, 3, "F-index")
}

/// `Σ_{uv∈E} [d(u)² + d(v)²]`, equal to [`f_index`].
pub fn f_index_edge_form<T: ExactInt>(g: &Graph) -> Result<T> {
    edge_sum(g, "F-index", |a: &T, b: &T| {
        a.checked_mul(a)?.checked_add(&b.checked_mul(b)?)
    })
}

fn check_exponent(a: i64) -> Result<u32> {
    if a < 2 {
        return Err(Error::BadExponent(a));
    }
    u32::try_from(a).map_err(|_| Error::BadExponent(a))
}

/// General first Zagreb index `ξ_a(G) = Σ_v d(v)^a` for integer `a ≥ 2`.
pub fn general_first_zagreb<T: ExactInt>(g: &Graph, a: i64) -> Result<T> {
    let exp = check_exponent(a)?;
    vertex_power_sum(g, exp, "general first Zagreb index")
}

/// `Σ_{uv∈E} [d(u)^(a-1) + d(v)^(a-1)]`, equal to [`general_first_zagreb`].
pub fn general_first_zagreb_edge_form<T: ExactInt>(g: &Graph, a: i64) -> Result<T> {
    let exp = check_exponent(a)? - 1;
    let what = "general first Zagreb index";
    let degs = degree_values::<T>(g)?;
    checked_sum(
        g.edges().map(|(u, v)| {
            let x = checked_pow(&degs[u], exp, what)?;
            let y = checked_pow(&degs[v], exp, what)?;
            x.checked_add(&y).ok_or(Error::Overflow(what))
        }),
        what,
    )
}

/// Redefined Zagreb index `ReZM(G) = Σ_{uv∈E} d(u)d(v)[d(u)+d(v)]`
/// (also written ReZG).
pub fn redefined_zagreb<T: ExactInt>(g: &Graph) -> Result<T> {
    edge_sum(g, "redefined Zagreb index", |a: &T, b: &T| {
        a.checked_mul(b)?.checked_mul(&a.checked_add(b)?)
    })
}

/// `Σ_{uv∈E} [d(u) + d(v)]³`, the F-contribution of the edge vertices of
/// `Q(G)` and `T(G)`.
pub fn edge_degree_sum_cubed<T: ExactInt>(g: &Graph) -> Result<T> {
    edge_sum(g, "cubed edge degree sum", |a: &T, b: &T| {
        let s = a.checked_add(b)?;
        s.checked_mul(&s)?.checked_mul(&s)
    })
}

/// Every quantity the hierarchical-product and F-sum closed forms consume,
/// for a graph together with a vertex subset `U`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantBundle<T> {
    pub n_vertices: T,
    pub n_edges: T,
    pub m1: T,
    pub m2: T,
    pub f: T,
    pub xi4: T,
    pub rezm: T,
    /// `|U|`
    pub subset_size: T,
    /// `Σ_{u∈U} d(u)`
    pub sum_deg_u: T,
    /// `Σ_{u∈U} d(u)²`
    pub sum_deg2_u: T,
}

pub fn invariant_bundle<T: ExactInt>(
    g: &Graph,
    subset: &VertexSubset,
) -> Result<InvariantBundle<T>> {
    subset.check_owner(g)?;
    let degs = degree_values::<T>(g)?;
    let sum_deg_u = checked_sum(
        subset.iter().map(|u| Ok(degs[u].clone())),
        "subset degree sum",
    )?;
    let sum_deg2_u = checked_sum(
        subset
            .iter()
            .map(|u| checked_pow(&degs[u], 2, "subset squared degree sum")),
        "subset squared degree sum",
    )?;
    Ok(InvariantBundle {
        n_vertices: from_count(g.vertex_count(), "vertex count")?,
        n_edges: from_count(g.edge_count(), "edge count")?,
        m1: first_zagreb(g)?,
        m2: second_zagreb(g)?,
        f: f_index(g)?,
        xi4: general_first_zagreb(g, 4)?,
        rezm: redefined_zagreb(g)?,
        subset_size: from_count(subset.len(), "subset size")?,
        sum_deg_u,
        sum_deg2_u,
    })
}

/// Bundle with `U = V(G)`.
pub fn full_bundle<T: ExactInt>(g: &Graph) -> Result<InvariantBundle<T>> {
    invariant_bundle(g, &VertexSubset::all(g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{build_family, FamilySpec};
    use num_bigint::BigInt;

    fn fam(spec: FamilySpec) -> Graph {
        build_family(&spec).unwrap()
    }

    // Independent oracle: degrees by scanning the edge list, not adjacency.
    fn oracle_degrees(g: &Graph) -> Vec<i64> {
        let mut d = vec![0i64; g.vertex_count()];
        for (u, v) in g.edges() {
            d[u] += 1;
            d[v] += 1;
        }
        d
    }

    #[test]
    fn first_zagreb_values() {
        let p4 = fam(FamilySpec::Path(4));
        let oracle: i64 = oracle_degrees(&p4).iter().map(|d| d * d).sum();
        assert_eq!(oracle, 10);
        assert_eq!(first_zagreb::<i64>(&p4).unwrap(), 10);
        for n in 3..10 {
            assert_eq!(
                first_zagreb::<i64>(&fam(FamilySpec::Cycle(n))).unwrap(),
                4 * n as i64
            );
        }
        assert_eq!(first_zagreb::<i64>(&Graph::new(5)).unwrap(), 0);
    }

    #[test]
    fn second_zagreb_values() {
        assert_eq!(
            second_zagreb::<i64>(&fam(FamilySpec::Cycle(7))).unwrap(),
            28
        );
        assert_eq!(second_zagreb::<i64>(&fam(FamilySpec::Path(3))).unwrap(), 4);
        assert_eq!(
            second_zagreb::<i64>(&fam(FamilySpec::Complete(4))).unwrap(),
            54
        );
    }

    #[test]
    fn f_index_values() {
        assert_eq!(f_index::<i64>(&fam(FamilySpec::Cycle(6))).unwrap(), 48);
        for n in 2..15usize {
            let p = fam(FamilySpec::Path(n));
            let oracle: i64 = oracle_degrees(&p).iter().map(|d| d * d * d).sum();
            assert_eq!(oracle, 8 * n as i64 - 14);
            assert_eq!(f_index::<i64>(&p).unwrap(), oracle);
        }
        assert_eq!(f_index::<i64>(&fam(FamilySpec::Complete(4))).unwrap(), 108);
        assert_eq!(
            f_index_edge_form::<i64>(&fam(FamilySpec::Cycle(6))).unwrap(),
            48
        );
        assert_eq!(
            f_index_edge_form::<i64>(&fam(FamilySpec::Path(2))).unwrap(),
            2
        );
    }

    #[test]
    fn general_first_zagreb_values() {
        assert_eq!(
            general_first_zagreb::<i64>(&fam(FamilySpec::Path(3)), 4).unwrap(),
            18
        );
        assert_eq!(
            general_first_zagreb::<i64>(&fam(FamilySpec::Cycle(5)), 4).unwrap(),
            80
        );
        let k4 = fam(FamilySpec::Complete(4));
        assert_eq!(
            general_first_zagreb::<i64>(&k4, 2),
            first_zagreb::<i64>(&k4)
        );
        assert_eq!(general_first_zagreb::<i64>(&k4, 3), f_index::<i64>(&k4));
        assert_eq!(
            general_first_zagreb_edge_form::<i64>(&k4, 4),
            general_first_zagreb::<i64>(&k4, 4)
        );
    }

    #[test]
    fn bad_exponents_rejected() {
        let g = fam(FamilySpec::Path(3));
        for a in [-3, -1, 0, 1] {
            assert_eq!(
                general_first_zagreb::<i64>(&g, a),
                Err(Error::BadExponent(a))
            );
        }
    }

    #[test]
    fn redefined_zagreb_values() {
        assert_eq!(
            redefined_zagreb::<i64>(&fam(FamilySpec::Path(2))).unwrap(),
            2
        );
        assert_eq!(
            redefined_zagreb::<i64>(&fam(FamilySpec::Path(3))).unwrap(),
            12
        );
        assert_eq!(
            redefined_zagreb::<i64>(&fam(FamilySpec::Cycle(9))).unwrap(),
            144
        );
    }

    #[test]
    fn bundle_of_c4() {
        let c4 = fam(FamilySpec::Cycle(4));
        let b = full_bundle::<i64>(&c4).unwrap();
        assert_eq!(
            b,
            InvariantBundle {
                n_vertices: 4,
                n_edges: 4,
                m1: 16,
                m2: 16,
                f: 32,
                xi4: 64,
                rezm: 64,
                subset_size: 4,
                sum_deg_u: 8,
                sum_deg2_u: 16,
            }
        );
    }

    #[test]
    fn bundle_of_subset() {
        let p2 = fam(FamilySpec::Path(2));
        let b = invariant_bundle::<i64>(&p2, &VertexSubset::new(&p2, [0]).unwrap()).unwrap();
        assert_eq!((b.subset_size, b.sum_deg_u, b.sum_deg2_u), (1, 1, 1));
        let p3 = fam(FamilySpec::Path(3));
        let u = VertexSubset::new(&p3, [0, 1, 2]).unwrap();
        assert_eq!(
            invariant_bundle::<i64>(&p2, &u),
            Err(Error::OutOfRange { vertex: 2, n: 2 })
        );
    }

    #[test]
    fn edgeless_graph_has_zero_indices() {
        let g = Graph::new(6);
        let b = full_bundle::<i64>(&g).unwrap();
        assert_eq!(b.n_vertices, 6);
        for v in [
            b.n_edges,
            b.m1,
            b.m2,
            b.f,
            b.xi4,
            b.rezm,
            b.sum_deg_u,
            b.sum_deg2_u,
        ] {
            assert_eq!(v, 0);
        }
    }

    #[test]
    fn overflow_is_detected() {
        // F(K_5) = 5 * 4^3 = 320 does not fit in i8.
        let k5 = fam(FamilySpec::Complete(5));
        assert!(matches!(f_index::<i8>(&k5), Err(Error::Overflow(_))));
        assert_eq!(f_index::<i16>(&k5).unwrap(), 320);
        assert_eq!(f_index::<i8>(&fam(FamilySpec::Complete(4))).unwrap(), 108);
        assert_eq!(f_index::<BigInt>(&k5).unwrap(), BigInt::from(320));
    }
}
