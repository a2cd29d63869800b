use repvol::chartab::CharTableError;
use repvol::fingroup::GroupError;
use repvol::homcount::HomCountError;
use repvol::mobius::GraphError;
use repvol::words::WordError;
use repvol::wzeta::WzetaError;

/// Error category; decides the exit code and the stderr tag.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Usage,
    Input,
    Divergent,
    Budget,
    Numeric,
}

impl Kind {
    pub fn tag(self) -> &'static str {
        match self {
            Kind::Usage => "usage",
            Kind::Input => "input",
            Kind::Divergent => "divergent",
            Kind::Budget => "budget",
            Kind::Numeric => "numeric",
        }
    }

    pub fn exit_code(self) -> i32 {
        match self {
            Kind::Usage | Kind::Input | Kind::Divergent => 2,
            Kind::Budget => 3,
            Kind::Numeric => 1,
        }
    }
}

#[derive(Debug, thiserror::Error)]
#[error("{message}")]
pub struct CliError {
    pub kind: Kind,
    pub message: String,
}

impl CliError {
    pub fn new(kind: Kind, message: impl Into<String>) -> Self {
        Self {
            kind,
            message: message.into(),
        }
    }

    pub fn usage(message: impl Into<String>) -> Self {
        Self::new(Kind::Usage, message)
    }

    pub fn input(message: impl Into<String>) -> Self {
        Self::new(Kind::Input, message)
    }
}

impl From<GroupError> for CliError {
    fn from(e: GroupError) -> Self {
        let kind = match e {
            GroupError::OrderBudgetExceeded { .. } => Kind::Budget,
            _ => Kind::Input,
        };
        Self::new(kind, e.to_string())
    }
}

impl From<WordError> for CliError {
    fn from(e: WordError) -> Self {
        Self::input(e.to_string())
    }
}

impl From<GraphError> for CliError {
    fn from(e: GraphError) -> Self {
        Self::input(e.to_string())
    }
}

impl From<CharTableError> for CliError {
    fn from(e: CharTableError) -> Self {
        Self::new(Kind::Numeric, e.to_string())
    }
}

impl From<HomCountError> for CliError {
    fn from(e: HomCountError) -> Self {
        let kind = match &e {
            HomCountError::BudgetExceeded { .. } => Kind::Budget,
            HomCountError::InvalidSurface(_) => Kind::Usage,
            HomCountError::NotSingleRelator(_) | HomCountError::Word(_) => Kind::Input,
            HomCountError::NotIntegral(_) | HomCountError::DistributionCheck(_) | HomCountError::Character(_) => {
                Kind::Numeric
            }
        };
        Self::new(kind, e.to_string())
    }
}

impl From<WzetaError> for CliError {
    fn from(e: WzetaError) -> Self {
        let kind = match e {
            WzetaError::Divergent(_) => Kind::Divergent,
            WzetaError::InvalidFamily(_) => Kind::Usage,
            WzetaError::ToleranceNotReached { .. } => Kind::Budget,
        };
        Self::new(kind, e.to_string())
    }
}
