//! The five-phase backbone construction.
//!
//! Isolation picks a maximal independent set, domination joins it into a
//! connected dominating set, synergy stacks further independent layers for
//! k-fold domination, diversification lifts the backbone to 2-connectivity
//! and sustainability lifts it to 3-connectivity. Phases only ever add
//! vertices.

mod augment;
mod domination;
mod isolation;
mod synergy;

use std::fmt;
use std::time::{Duration, Instant};

use crate::connectivity::is_m_connected;
use crate::error::PlutusError;
use crate::graph::{Graph, VertexSet};

pub use augment::{
    default_iteration_cap, diversification, lowest_bad_point, sustainability, AugmentOutput,
};
pub use domination::{domination, DominationOutput, MAX_PAIR_DISTANCE};
pub use isolation::{isolation, IsolationOutput};
pub use synergy::{enforce_k_dominance, synergy, SynergyMode, SynergyOutput};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Role {
    Dominator,
    DominationReluctant,
    DominationProne,
}

impl Role {
    pub fn as_str(self) -> &'static str {
        match self {
            Role::Dominator => "dominator",
            Role::DominationReluctant => "reluctant",
            Role::DominationProne => "prone",
        }
    }

    pub fn parse(s: &str) -> Option<Role> {
        match s {
            "dominator" => Some(Role::Dominator),
            "reluctant" => Some(Role::DominationReluctant),
            "prone" => Some(Role::DominationProne),
            _ => None,
        }
    }

    /// Roles only move toward `Dominator`.
    pub fn can_become(self, next: Role) -> bool {
        matches!(
            (self, next),
            (Role::DominationProne, _)
                | (
                    Role::DominationReluctant,
                    Role::DominationReluctant | Role::Dominator
                )
                | (Role::Dominator, Role::Dominator)
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Phase {
    Isolation,
    Domination,
    Synergy,
    Diversification,
    Sustainability,
}

impl Phase {
    pub const ALL: [Phase; 5] = [
        Phase::Isolation,
        Phase::Domination,
        Phase::Synergy,
        Phase::Diversification,
        Phase::Sustainability,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Phase::Isolation => "isolation",
            Phase::Domination => "domination",
            Phase::Synergy => "synergy",
            Phase::Diversification => "diversification",
            Phase::Sustainability => "sustainability",
        }
    }

    pub fn parse(s: &str) -> Option<Phase> {
        Phase::ALL.into_iter().find(|p| p.as_str() == s)
    }
}

impl fmt::Display for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PlutusConfig {
    /// Every node outside the backbone needs this many backbone neighbors.
    pub k: usize,
    /// Target connectivity of the backbone, 1 to 3.
    pub m: u8,
    /// Cap on augmentation steps per phase; `None` means ten per node.
    pub max_augmentation_iterations: Option<usize>,
    pub synergy_mode: SynergyMode,
}

impl PlutusConfig {
    pub fn new(k: usize, m: u8) -> Self {
        PlutusConfig {
            k,
            m,
            max_augmentation_iterations: None,
            synergy_mode: SynergyMode::BestEffort,
        }
    }

    pub fn validate(&self) -> Result<(), PlutusError> {
        if self.k == 0 {
            return Err(PlutusError::InvalidConfig("k must be positive".into()));
        }
        if !(1..=3).contains(&self.m) {
            return Err(PlutusError::InvalidConfig(format!(
                "m must be 1, 2 or 3, got {}",
                self.m
            )));
        }
        if self.max_augmentation_iterations == Some(0) {
            return Err(PlutusError::InvalidConfig(
                "iteration cap must be positive".into(),
            ));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhaseRecord {
    pub phase: Phase,
    /// Backbone size after the phase.
    pub size: usize,
    pub added: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlutusResult {
    pub k: usize,
    pub m: u8,
    pub dominating_set: VertexSet,
    pub phase_trace: Vec<PhaseRecord>,
    pub roles: Vec<Role>,
}

impl PlutusResult {
    pub fn size_after(&self, phase: Phase) -> Option<usize> {
        self.phase_trace
            .iter()
            .find(|r| r.phase == phase)
            .map(|r| r.size)
    }
}

/// Wall-clock time spent in each phase that ran.
pub type PhaseTimings = Vec<(Phase, Duration)>;

struct Tracker {
    set: VertexSet,
    roles: Vec<Role>,
    trace: Vec<PhaseRecord>,
    timings: PhaseTimings,
    started: Instant,
}

impl Tracker {
    fn record(&mut self, phase: Phase, set: VertexSet, added: Vec<usize>) {
        debug_assert!(set.is_superset(&self.set), "phases never demote");
        for &v in &added {
            debug_assert!(self.roles[v].can_become(Role::Dominator));
            self.roles[v] = Role::Dominator;
        }
        self.set = set;
        self.trace.push(PhaseRecord {
            phase,
            size: self.set.len(),
            added,
        });
        let now = Instant::now();
        self.timings.push((phase, now - self.started));
        self.started = now;
    }
}

/// Runs the configured phases and returns the backbone with its trace.
pub fn run_plutus(g: &Graph, cfg: &PlutusConfig) -> Result<PlutusResult, PlutusError> {
    run_plutus_timed(g, cfg).map(|(result, _)| result)
}

/// [`run_plutus`] that also reports per-phase wall time. Timings are kept
/// out of [`PlutusResult`] so results stay reproducible.
pub fn run_plutus_timed(
    g: &Graph,
    cfg: &PlutusConfig,
) -> Result<(PlutusResult, PhaseTimings), PlutusError> {
    cfg.validate()?;
    let started = Instant::now();
    if g.node_count() == 0 {
        return Err(PlutusError::EmptyGraph);
    }
    if !g.is_connected() {
        return Err(PlutusError::DisconnectedInput);
    }
    if cfg.m >= 2 && !is_m_connected(g, &g.nodes().collect(), cfg.m) {
        return Err(PlutusError::GraphNotMConnected { m: cfg.m });
    }
    let cap = cfg
        .max_augmentation_iterations
        .unwrap_or_else(|| default_iteration_cap(g));

    let isolated = isolation(g)?;
    let mut tracker = Tracker {
        set: VertexSet::new(),
        roles: vec![Role::DominationProne; g.node_count()],
        trace: Vec::new(),
        timings: Vec::new(),
        started,
    };
    tracker.record(
        Phase::Isolation,
        isolated.mis.clone(),
        isolated.order.clone(),
    );
    tracker.roles = isolated.roles;

    let dominated = domination(g, &isolated.mis)?;
    tracker.record(Phase::Domination, dominated.set, dominated.added);

    let layered = synergy(g, &tracker.set, &isolated.mis, cfg.k, cfg.synergy_mode)?;
    tracker.record(Phase::Synergy, layered.set, layered.added);

    if cfg.m >= 2 {
        let out = diversification(g, &tracker.set, cap)?;
        tracker.record(Phase::Diversification, out.set, out.added);
    }
    if cfg.m >= 3 {
        let out = sustainability(g, &tracker.set, cap)?;
        tracker.record(Phase::Sustainability, out.set, out.added);
    }

    let result = PlutusResult {
        k: cfg.k,
        m: cfg.m,
        dominating_set: tracker.set,
        phase_trace: tracker.trace,
        roles: tracker.roles,
    };
    Ok((result, tracker.timings))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(n: usize) -> Graph {
        let edges: Vec<_> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        Graph::from_edge_list(n, &edges).unwrap()
    }

    #[test]
    fn p3_single_dominator() {
        let g = Graph::from_edge_list(3, &[(0, 1), (1, 2)]).unwrap();
        let r = run_plutus(&g, &PlutusConfig::new(1, 1)).unwrap();
        assert_eq!(r.dominating_set, [1].into());
        let sizes: Vec<usize> = r.phase_trace.iter().map(|p| p.size).collect();
        assert_eq!(sizes, vec![1, 1, 1]);
    }

    #[test]
    fn k4_three_connected_takes_everything() {
        let r = run_plutus(&complete(4), &PlutusConfig::new(1, 3)).unwrap();
        assert_eq!(r.dominating_set, (0..4).collect());
        let phases: Vec<Phase> = r.phase_trace.iter().map(|p| p.phase).collect();
        assert_eq!(phases, Phase::ALL.to_vec());
        assert_eq!(r.phase_trace[3].added, vec![1, 2]);
        assert_eq!(r.phase_trace[4].added, vec![3]);
        assert!(r.roles.iter().all(|&role| role == Role::Dominator));
    }

    #[test]
    fn preflight_rejects_weak_graphs() {
        let p3 = Graph::from_edge_list(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(
            run_plutus(&p3, &PlutusConfig::new(1, 3)),
            Err(PlutusError::GraphNotMConnected { m: 3 })
        );
        assert_eq!(
            run_plutus(&Graph::empty(0), &PlutusConfig::new(1, 1)),
            Err(PlutusError::EmptyGraph)
        );
        assert_eq!(
            run_plutus(&Graph::empty(2), &PlutusConfig::new(1, 1)),
            Err(PlutusError::DisconnectedInput)
        );
    }

    #[test]
    fn config_validation() {
        assert!(PlutusConfig::new(0, 1).validate().is_err());
        assert!(PlutusConfig::new(1, 4).validate().is_err());
        assert!(PlutusConfig::new(1, 0).validate().is_err());
        let mut cfg = PlutusConfig::new(2, 2);
        cfg.max_augmentation_iterations = Some(0);
        assert!(cfg.validate().is_err());
    }

    #[test]
    fn roles_match_backbone() {
        let g = Graph::from_edge_list(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        let r = run_plutus(&g, &PlutusConfig::new(1, 1)).unwrap();
        for v in g.nodes() {
            assert_eq!(r.roles[v] == Role::Dominator, r.dominating_set.contains(&v));
        }
    }

    #[test]
    fn role_transitions() {
        use Role::*;
        assert!(DominationProne.can_become(Dominator));
        assert!(DominationProne.can_become(DominationReluctant));
        assert!(DominationReluctant.can_become(Dominator));
        assert!(!DominationReluctant.can_become(DominationProne));
        assert!(!Dominator.can_become(DominationReluctant));
        for role in [Dominator, DominationReluctant, DominationProne] {
            assert_eq!(Role::parse(role.as_str()), Some(role));
        }
    }
}
