//! Odd wheel graphs `W_n` and their distance matrices.
//!
//! Vertex 0 is the hub; vertices `1..n` form the rim cycle in order, with
//! vertex `n−1` adjacent to vertex 1. Documentation and serialized output use
//! 1-based labels (`w₁` the hub, `w₂..wₙ` the rim).

use crate::circulant::Circulant;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matrix::RatMatrix;
use crate::rational::{int, one, rat, zero, Rational};

/// Validates that `n` is an odd wheel order (`n ≥ 5`) and returns
/// `m = (n − 1)/2`.
pub fn check_order(n: usize) -> Result<usize> {
    if n < 5 || n.is_multiple_of(2) {
        return Err(Error::invalid(format!(
            "wheel order must be odd and at least 5, got {n}"
        )));
    }
    Ok((n - 1) / 2)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WheelGraph {
    n: usize,
    graph: Graph,
}

impl WheelGraph {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub const HUB: usize = 0;
}

pub fn build_wheel(n: usize) -> Result<WheelGraph> {
    check_order(n)?;
    let mut graph = Graph::new(n);
    for v in 1..n {
        graph.add_edge(WheelGraph::HUB, v)?;
        let next = if v + 1 < n { v + 1 } else { 1 };
        graph.add_edge(v, next)?;
    }
    Ok(WheelGraph { n, graph })
}

/// Distance matrix of a wheel together with its order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    pub n: usize,
    pub mat: RatMatrix,
}

impl DistanceMatrix {
    /// The `(n−1)×(n−1)` rim block `D̃`.
    pub fn rim_block(&self) -> RatMatrix {
        self.mat.block(1, 1, self.n - 1, self.n - 1)
    }
}

/// `u = (0, 1, 2, …, 2, 1)` with `n − 1` entries; `D̃ = Circ(u)`.
pub fn u_vector(n: usize) -> Result<Vec<Rational>> {
    check_order(n)?;
    let l = n - 1;
    Ok((0..l)
        .map(|j| match j {
            0 => zero(),
            1 => one(),
            _ if j == l - 1 => one(),
            _ => int(2),
        })
        .collect())
}

pub fn rim_circulant(n: usize) -> Result<Circulant> {
    Circulant::new(u_vector(n)?)
}

/// Entries by cases: 0 on the diagonal, 1 for adjacent vertices (hub to
/// anything, or rim neighbours), 2 otherwise.
pub fn distance_matrix_closed(n: usize) -> Result<DistanceMatrix> {
    check_order(n)?;
    let rim = n - 1;
    let mat = RatMatrix::from_fn(n, n, |i, j| {
        if i == j {
            zero()
        } else if i == 0 || j == 0 {
            one()
        } else {
            let gap = (i + rim - j) % rim;
            if gap == 1 || gap == rim - 1 {
                one()
            } else {
                int(2)
            }
        }
    });
    Ok(DistanceMatrix { n, mat })
}

/// All-pairs shortest paths by BFS; knows nothing about wheels.
pub fn distance_matrix_bfs(g: &WheelGraph) -> DistanceMatrix {
    let n = g.order();
    let dist = g.graph().all_pairs_bfs();
    let mat = RatMatrix::from_fn(n, n, |i, j| {
        let d = dist[i][j].expect("wheels are connected");
        int(d as i64)
    });
    DistanceMatrix { n, mat }
}

/// `d = (0, 1, −1, 1, −1, …, −1)'` with `Dd = 0`.
pub fn null_vector_d(n: usize) -> Result<Vec<Rational>> {
    check_order(n)?;
    Ok((0..n)
        .map(|i| match i {
            0 => zero(),
            _ if i % 2 == 1 => one(),
            _ => -one(),
        })
        .collect())
}

/// Centering matrix `P = I − J/n`.
pub fn centering_p(n: usize) -> Result<RatMatrix> {
    if n == 0 {
        return Err(Error::invalid("centering matrix needs n ≥ 1"));
    }
    let c = rat(1, n as i64);
    Ok(RatMatrix::from_fn(n, n, |i, j| {
        if i == j {
            one() - &c
        } else {
            -c.clone()
        }
    }))
}

/// `G = −½·P·D·P`.
pub fn gram_g(d: &RatMatrix) -> Result<RatMatrix> {
    if !d.is_square() {
        return Err(Error::invalid("Gram transform needs a square matrix"));
    }
    let p = centering_p(d.rows())?;
    Ok(p.mul(d)?.mul(&p)?.scale(&rat(-1, 2)))
}
