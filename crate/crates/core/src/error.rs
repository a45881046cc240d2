//! Error types shared across the crate.

use thiserror::Error;

use crate::world::{RobotId, Visibility};

/// Errors raised while parsing scalars, schedules, traces or manifests.
#[derive(Debug, Error)]
pub enum ParseError {
    #[error("invalid rational literal '{0}' (use n or n/d)")]
    Scalar(String),

    #[error("invalid sense '{0}' (use +x, -x, +y or -y)")]
    Sense(String),

    #[error("unknown light '{0}' for alphabet {1}")]
    Light(String, String),

    #[error("invalid motion choice '{0}' (use full, delta, mid or a rational)")]
    MotionChoice(String),

    #[error("invalid schedule token '{0}'")]
    Schedule(String),

    #[error("invalid event token '{0}'")]
    Event(String),

    #[error("trace line {line}: {msg}")]
    Trace { line: usize, msg: String },

    #[error("manifest line {line}: {msg}")]
    Manifest { line: usize, msg: String },

    #[error("invalid interval '{0}'")]
    Interval(String),

    #[error("invalid class-L table '{0}': {1}")]
    ClassLTable(String, String),

    #[error("unknown protocol '{0}'")]
    Protocol(String),
}

/// Errors raised by the execution engines.
#[derive(Debug, Error)]
pub enum EngineError {
    #[error("protocol requires {required:?} visibility but world is {actual:?}")]
    VisibilityMismatch {
        required: Visibility,
        actual: Visibility,
    },

    #[error("empty activation set in round {round}")]
    EmptyActivation { round: usize },

    #[error("schedule is unfair: robot {robot:?} absent from rounds {from}..{to} (window {window})")]
    UnfairSchedule {
        robot: RobotId,
        from: usize,
        to: usize,
        window: usize,
    },

    #[error("local destination ({x}, {y}) leaves the line through the robots")]
    OffAxisDestination { x: String, y: String },

    #[error("compute produced a non-collinear destination for {robot:?}: ({x}, {y})")]
    NonCollinearCompute { robot: RobotId, x: String, y: String },

    #[error("protocol moved at distance zero for {robot:?} (destination ({x}, {y}))")]
    MoveAtZeroDistance { robot: RobotId, x: String, y: String },

    #[error("interrupting stop choice in a rigid world")]
    RigidStopChoice,

    #[error("explicit stop progress {progress} below the non-rigid guarantee delta={delta}")]
    StopBelowDelta { progress: String, delta: String },

    #[error("world is non-rigid but has no delta")]
    MissingDelta,

    #[error("invalid timeline: {0}")]
    Timeline(String),

    #[error("protocol {protocol} cannot run under {scheduler}: {reason}")]
    SchedulerMismatch {
        protocol: String,
        scheduler: String,
        reason: String,
    },

    #[error("enumeration budget exceeded ({nodes} nodes)")]
    EnumerationBudget { nodes: usize },
}
