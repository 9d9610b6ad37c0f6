use crate::action::ActionError;
use crate::engine::EngineError;
use crate::field::FieldError;
use crate::linalg::LinalgError;
use crate::quiver::QuiverError;
use crate::reptype::ReptypeError;

/// Any failure of the invariant pipeline.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Quiver(#[from] QuiverError),
    #[error(transparent)]
    Action(#[from] ActionError),
    #[error(transparent)]
    Engine(#[from] EngineError),
    #[error(transparent)]
    Reptype(#[from] ReptypeError),
}
