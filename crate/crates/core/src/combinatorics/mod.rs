//! Partitions, permutations, tableaux and the counting functions built on them.

pub mod character;
pub mod counting;
mod partition;
mod permutation;
mod tableau;
pub mod unimodal;

pub use character::mn_character;
pub use counting::{beta, enumerate_ssyt, enumerate_syt, f_lambda, hook_length_count, kostka, skew_count, skew_standard_count};
pub use partition::{enumerate_partitions, partition_stats, Partition, PartitionStats};
pub use permutation::{permutation_stats, DescentSet, Permutation, PermutationStats};
pub use tableau::Tableau;
pub use unimodal::{enumerate_unimodal, unimodal_max_position};
