//! Graph toolkit for small connected simple graphs: BFS metric, intervals,
//! convexity, semicubes, the θ relation, partial-cube recognition,
//! hypercube embeddings, median testing, box products and peripheral
//! expansion.

pub mod cycles;
pub mod embed;
pub mod error;
pub mod graph;
pub mod io;
pub mod median;
pub mod metric;
pub mod ops;
pub mod theta;

pub use cycles::{classify_cycle, four_cycles, geodesics, isometric_cycles, CycleClass, CycleSample};
pub use embed::{embed_hypercube, HypercubeEmbedding};
pub use error::GraphError;
pub use graph::Graph;
pub use io::{parse_edge_list, EdgeEntry, EdgeLabel, GraphDocument};
pub use median::{is_median_graph, median_triple, MedianVerdict, MEDIAN_VERTEX_CAP};
pub use metric::{all_pairs, diameter, distance, interval, is_convex, semicube, Metric, SemicubePair};
pub use ops::{box_product, peripheral_expansion};
pub use theta::{
    is_partial_cube, isometric_dimension, theta_classes, PartialCubeCertificate,
    PartialCubeWitness, ThetaPartition, ThetaRelation,
};
