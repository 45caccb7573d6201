use qsg_core::expr::ExprError;
use qsg_core::{AlgebraError, RewriteError};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Rewrite(#[from] RewriteError),
    #[error(transparent)]
    Expr(#[from] ExprError),
    #[error("relation `{0}` must have exactly one `=`")]
    BadRelation(String),
    #[error("relation `{0}`: {1}")]
    Relation(String, String),
    #[error("unknown presentation `{0}`")]
    UnknownPresentation(String),
    #[error("`{0}` is not a composite of {1}")]
    UnknownComposite(String, String),
    #[error("no image for generator `{0}` under {1}")]
    NoImage(String, &'static str),
    #[error("{0}")]
    Other(String),
}
