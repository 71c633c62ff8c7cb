//! Named graph families.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::transforms::{f_sum, SubdivisionOp};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    /// `P_n`, `n ≥ 1`.
    Path(usize),
    /// `C_n`, `n ≥ 3`.
    Cycle(usize),
    /// `K_n`, `n ≥ 1`.
    Complete(usize),
    /// `K_{1,n}` with `n ≥ 1` leaves; the centre is vertex 0.
    Star(usize),
    /// `K_{a,b}`, `a, b ≥ 1`; the `a` side comes first.
    CompleteBipartite(usize, usize),
    /// Zigzag polyhex nanotube `TUHC6[2n,2] ≅ C_n +_S P_2`, `n ≥ 3`.
    Nanotube(usize),
    /// Linear hexagonal chain `L_n ≅ P_{n+1} +_S P_2`, `n ≥ 1`.
    HexagonalChain(usize),
}

impl FamilySpec {
    /// Parses a family name with its parameters as given on the command line.
    pub fn from_name(name: &str, n: usize, m: Option<usize>) -> Result<Self> {
        let spec = match name.to_ascii_lowercase().as_str() {
            "path" => FamilySpec::Path(n),
            "cycle" => FamilySpec::Cycle(n),
            "complete" => FamilySpec::Complete(n),
            "star" => FamilySpec::Star(n),
            "complete_bipartite" | "bipartite" => {
                let b = m.ok_or_else(|| {
                    Error::BadParam("complete_bipartite needs a second parameter".into())
                })?;
                FamilySpec::CompleteBipartite(n, b)
            }
            "nanotube" | "nanotube_tuhc6" | "tuhc6" => FamilySpec::Nanotube(n),
            "hexagonal_chain" | "hex_chain" => FamilySpec::HexagonalChain(n),
            other => return Err(Error::BadParam(format!("unknown family `{other}`"))),
        };
        Ok(spec)
    }

    fn validate(&self) -> Result<()> {
        let (ok, rule) = match *self {
            FamilySpec::Path(n) => (n >= 1, "path needs n >= 1"),
            FamilySpec::Cycle(n) => (n >= 3, "cycle needs n >= 3"),
            FamilySpec::Complete(n) => (n >= 1, "complete needs n >= 1"),
            FamilySpec::Star(n) => (n >= 1, "star needs n >= 1"),
            FamilySpec::CompleteBipartite(a, b) => {
                (a >= 1 && b >= 1, "complete_bipartite needs a, b >= 1")
            }
            FamilySpec::Nanotube(n) => (n >= 3, "nanotube needs n >= 3"),
            FamilySpec::HexagonalChain(n) => (n >= 1, "hexagonal_chain needs n >= 1"),
        };
        if ok {
            Ok(())
        } else {
            Err(Error::BadParam(format!("{rule}, got {self}")))
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::Path(n) => write!(f, "P_{n}"),
            FamilySpec::Cycle(n) => write!(f, "C_{n}"),
            FamilySpec::Complete(n) => write!(f, "K_{n}"),
            FamilySpec::Star(n) => write!(f, "K_{{1,{n}}}"),
            FamilySpec::CompleteBipartite(a, b) => write!(f, "K_{{{a},{b}}}"),
            FamilySpec::Nanotube(n) => write!(f, "TUHC6[{},2]", 2 * n),
            FamilySpec::HexagonalChain(n) => write!(f, "L_{n}"),
        }
    }
}

fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("path edges are distinct")
}

fn cycle(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle edges are distinct")
}

pub fn build_family(spec: &FamilySpec) -> Result<Graph> {
    spec.validate()?;
    let g = match *spec {
        FamilySpec::Path(n) => path(n),
        FamilySpec::Cycle(n) => cycle(n),
        FamilySpec::Complete(n) => {
            Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))?
        }
        FamilySpec::Star(n) => Graph::from_edges(n + 1, (1..=n).map(|v| (0, v)))?,
        FamilySpec::CompleteBipartite(a, b) => {
            Graph::from_edges(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))?
        }
        FamilySpec::Nanotube(n) => f_sum(&cycle(n), &path(2), SubdivisionOp::S)?,
        FamilySpec::HexagonalChain(n) => f_sum(&path(n + 1), &path(2), SubdivisionOp::S)?,
    };
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::indices::f_index;

    #[test]
    fn cycle_four() {
        let g = build_family(&FamilySpec::Cycle(4)).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (4, 4));
        assert!(g.degrees().iter().all(|&d| d == 2));
    }

    #[test]
    fn paths_have_two_leaves() {
        for n in 2..12 {
            let g = build_family(&FamilySpec::Path(n)).unwrap();
            assert_eq!(g.edge_count(), n - 1);
            let degs = g.degrees();
            assert_eq!(degs.iter().filter(|&&d| d == 1).count(), 2);
            assert_eq!(degs.iter().filter(|&&d| d == 2).count(), n - 2);
        }
        assert_eq!(build_family(&FamilySpec::Path(1)).unwrap(), Graph::new(1));
    }

    #[test]
    fn nanotube_sizes_and_f_index() {
        for n in 3..10 {
            let g = build_family(&FamilySpec::Nanotube(n)).unwrap();
            // (|V(C_n)| + |E(C_n)|) * |V(P_2)| vertices, 2n*2 + 1*n edges.
            assert_eq!(g.vertex_count(), 4 * n);
            assert_eq!(g.edge_count(), 5 * n);
            assert!(g.is_connected());
        }
        let g = build_family(&FamilySpec::Nanotube(3)).unwrap();
        assert_eq!(f_index::<i64>(&g).unwrap(), 210);
    }

    #[test]
    fn hexagonal_chain_f_index() {
        let g = build_family(&FamilySpec::HexagonalChain(2)).unwrap();
        assert_eq!(f_index::<i64>(&g).unwrap(), 118);
        // L_1 is a single hexagon.
        let hex = build_family(&FamilySpec::HexagonalChain(1)).unwrap();
        assert_eq!((hex.vertex_count(), hex.edge_count()), (6, 6));
    }

    #[test]
    fn other_families() {
        let k4 = build_family(&FamilySpec::Complete(4)).unwrap();
        assert_eq!(k4.edge_count(), 6);
        let star = build_family(&FamilySpec::Star(4)).unwrap();
        assert_eq!(star.degree(0).unwrap(), 4);
        let k23 = build_family(&FamilySpec::CompleteBipartite(2, 3)).unwrap();
        assert_eq!(k23.degrees(), vec![3, 3, 2, 2, 2]);
    }

    #[test]
    fn bad_parameters() {
        for spec in [
            FamilySpec::Path(0),
            FamilySpec::Cycle(2),
            FamilySpec::Complete(0),
            FamilySpec::Star(0),
            FamilySpec::CompleteBipartite(0, 3),
            FamilySpec::Nanotube(2),
            FamilySpec::HexagonalChain(0),
        ] {
            assert!(
                matches!(build_family(&spec), Err(Error::BadParam(_))),
                "{spec}"
            );
        }
    }

    #[test]
    fn names() {
        assert_eq!(
            FamilySpec::from_name("cycle", 4, None).unwrap(),
            FamilySpec::Cycle(4)
        );
        assert_eq!(
            FamilySpec::from_name("nanotube_TUHC6", 5, None).unwrap(),
            FamilySpec::Nanotube(5)
        );
        assert_eq!(
            FamilySpec::from_name("complete_bipartite", 2, Some(3)).unwrap(),
            FamilySpec::CompleteBipartite(2, 3)
        );
        assert!(FamilySpec::from_name("complete_bipartite", 2, None).is_err());
        assert!(FamilySpec::from_name("petersen", 10, None).is_err());
    }
}
