//! Exact Moore–Penrose inverse of the distance matrix of an odd wheel graph.
//!
//! For odd `n ≥ 5`, the distance matrix `D` of the wheel `W_n` is singular,
//! and its Moore–Penrose inverse has the closed form
//!
//! ```text
//! D† = −½L̃ + (4/(n−1))ww',   w = ¼(5 − n, 1, …, 1)'
//! ```
//!
//! where `L̃` is a Laplacian-like matrix built from circulants (see
//! [`laplacian`]). Everything here is computed in exact rational arithmetic,
//! and every structural fact used along the way can be checked against an
//! independent route: BFS distances, rank-factorization pseudoinverse,
//! fraction-free rank, characteristic-polynomial PSD test.
//!
//! ```
//! use wheel_pinv::{closed_form_pinv, mp_pinv_oracle, distance_matrix_closed};
//!
//! let d = distance_matrix_closed(9).unwrap();
//! let k = closed_form_pinv(9).unwrap().k;
//! assert_eq!(k, mp_pinv_oracle(&d.mat));
//! ```

pub mod bench;
pub mod certificate;
pub mod charpoly;
pub mod circulant;
pub mod elimination;
pub mod error;
pub mod graph;
pub mod identities;
pub mod inverse;
pub mod io;
pub mod laplacian;
pub mod lemmas;
pub mod matrix;
pub mod model;
pub mod pinv;
pub mod rational;
pub mod verify;
pub mod wheel;

pub use bench::{bench_csv, run_bench, BenchConfig, BenchRecord, Method};
pub use certificate::{
    build_rank_witness, rank_of_special_laplacian, verify_rank_certificate, RankWitness,
};
pub use charpoly::{charpoly, is_psd_symmetric};
pub use circulant::{circ_mul_row, circ_to_dense, Circulant};
pub use elimination::rank;
pub use error::{Error, Result};
pub use identities::{identity_check, Identity};
pub use inverse::{closed_form_pinv, w_vector, ClosedFormInverse};
pub use io::{
    parse_csv, parse_json, write_alphas, write_csv, write_json, write_latex, write_matrix, Format,
};
pub use laplacian::{
    alpha_table, special_laplacian, special_matrix, special_vector, v_matrix, v_vector, AlphaTable,
    SpecialLaplacian,
};
pub use lemmas::{
    f_vector, kd_product, ld_product, m_matrix, row_product_ck_dtilde, theta_identity, FVector,
};
pub use matrix::RatMatrix;
pub use model::WheelModel;
pub use pinv::{mp_pinv_oracle, penrose_check, PinvReport};
pub use rational::Rational;
pub use verify::{run_verification, CheckRecord, VerificationReport, VerifyOptions};

pub use wheel::{
    build_wheel, centering_p, distance_matrix_bfs, distance_matrix_closed, gram_g, null_vector_d,
    DistanceMatrix, WheelGraph,
};
