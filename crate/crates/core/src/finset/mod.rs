//! Finite sets: the props `F` of functions and `PF` of partial functions.
//!
//! Corelations of `F` are partitions of `ord(n) ⊎ ord(m)` (equivalence
//! relations); corelations of `PF` are partial equivalence relations.
//! Relations of `F` are ordinary binary relations.

mod engine;
mod func;
mod partial;
mod partition;
mod relation;
mod union_find;

pub use engine::{
    corel_canonical, corel_to_partition, partition_to_corel, rel_canonical, rel_to_table,
    table_to_rel, FinSet, FinSubcat,
};
pub use func::{Classification, FinFn, PartialFn};
pub use partial::{corel_to_partial_partition, partial_partition_to_corel, PartialFinSet};
pub use partition::{bell, PartialPartition, Partition};
pub use relation::RelationTable;
pub use union_find::UnionFind;
