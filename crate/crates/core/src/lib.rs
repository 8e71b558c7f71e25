//! Efficient points of finite sets and Minkowski sums over groups.
//!
//! The crate is organised around four layers:
//! - `group`: carriers (integer vectors, permutations, cyclic integers,
//!   finite sets under symmetric difference, explicit Cayley tables) and
//!   Minkowski sums of finite subsets;
//! - `relation`: preference oracles, efficient-set computation and the
//!   nonemptiness witness construction for transitive relations;
//! - `audit`: bounded verification of the relation properties the verdict
//!   rules rely on;
//! - `verdict` / `proof`: the rule engine deciding whether the efficient
//!   set survives translation by a summand set, and replayable derivation
//!   traces for the index-cycle arguments behind the negative rules.

pub mod audit;
pub mod error;
pub mod group;
pub mod proof;
pub mod relation;
pub mod verdict;

pub use audit::{
    audit_property, probe_closure, replay_violation, run_audits, AuditConfig, ProbeSet,
    PropertyId, PropertyReport, PropertyStatus, ViolationWitness,
};
pub use error::{Error, Result};
pub use group::{
    minkowski_sum, minkowski_sum_many, CayleyTable, FiniteSet, GroupContext, GroupElement,
};
pub use proof::{
    bridge, derive_dominated_cycle, derive_dominator_cycle, derive_equation_cycle,
    eliminate_representations, find_index_cycle, mixed_from_instance, project_s5, BridgeOutcome,
    CycleWitness, DerivationTrace, Elimination, Expr, Fact, FactRel, IndexMap, Representation,
    RowRel, RuleId, SystemInstance, SystemKind, TraceStep,
};
pub use relation::{
    compare, efficient_set, is_stable, white_witness, Comparison, EfficiencyPartition,
    RelationOracle, TransitivityClaim,
};
pub use verdict::{
    combined_verdict, oracle_verdict, theorem_verdict, verdict, ConditionCheck, Direction,
    OracleVerdict, TheoremRule, TheoremVerdict, Verdict,
};
