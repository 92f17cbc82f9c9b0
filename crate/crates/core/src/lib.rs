//! Exact combinatorics of cores and quotients of Young diagrams, torus
//! fixed points on affine type-A quiver varieties, equivariant localization
//! over the rationals, and truncated q-series generating functions.

pub mod algebra;
pub mod characters;
pub mod coloring;
pub mod corequot;
pub mod error;
pub mod localization;
pub mod maya;
pub mod partition;
pub mod qseries;

pub use algebra::{FactoredRational, LinearForm, MultiPoly, RationalFunction};
pub use characters::{
    delta_mod, hilbert_tangent_character, tangent_character, CharacterSum, ChartMonomial,
    WeightMonomial,
};
pub use coloring::{
    color_counts, common_core, dim_quiver_variety, enumerate_p_w_v, residue, tableau_cores,
    tableau_to_k, ColorSpec, DimVector,
};
pub use corequot::{core_from_k, core_weight, decompose, is_core, reconstruct, CoreQuotient};
pub use error::{CombError, Result};
pub use localization::{
    ale_charts, chart_factor, equivariant_integral, euler_factor, hilbert_series_z, n_y_factor,
    plane_chart, rank_one_closed_form, rational_functions_agree, verify_identity_a6, VerifyMode,
};
pub use maya::{from_maya, to_maya, MayaDiagram};
pub use partition::{
    enumerate_partitions, partitions_up_to, relative_hook, Cell, Partition,
};
pub use qseries::{
    betti_exponent, euler_generating, gottsche, poincare_polynomial, theta_core, z_bruteforce,
    z_bruteforce_par, z_bruteforce_with, z_closed, z_quot_closed, Exponents, QSeries,
};
