use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph order {n} exceeds the supported maximum {max}")]
    TooManyVertices { n: usize, max: usize },
    #[error("vertex {vertex} out of range for a graph of order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {vertex}")]
    SelfLoop { vertex: usize },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InstanceError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("{lists} lists given for {n} vertices")]
    ListCount { lists: usize, n: usize },
    #[error("vertex {vertex}: color {color} outside the palette [1,{kappa}]")]
    ColorOutOfRange { vertex: usize, color: u32, kappa: u32 },
}

/// What went wrong on a given line of an instance file.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    #[error("malformed header, expected `p lc <n> <m> <kappa>`")]
    MalformedHeader,
    #[error("missing `p lc` header")]
    MissingHeader,
    #[error("second header")]
    DuplicateHeader,
    #[error("order {n} exceeds the configured maximum {max}")]
    TooManyVertices { n: usize, max: usize },
    #[error("malformed `{0}` line")]
    Malformed(char),
    #[error("not a number: `{0}`")]
    BadNumber(String),
    #[error("unknown line type `{0}`")]
    UnknownLine(String),
    #[error("vertex {vertex} out of range [1,{n}]")]
    VertexOutOfRange { vertex: u64, n: usize },
    #[error("self-loop at vertex {vertex}")]
    SelfLoop { vertex: usize },
    #[error("color {color} outside the palette [1,{kappa}]")]
    ColorOutOfRange { color: u64, kappa: u32 },
    #[error("second list for vertex {vertex}")]
    DuplicateList { vertex: usize },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ColoringError {
    #[error("coloring covers {got} vertices, graph has {n}")]
    WrongLength { got: usize, n: usize },
    #[error("vertex {vertex} is uncolored")]
    NotTotal { vertex: usize },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("color level {level} outside [1,{kappa}]")]
pub struct LevelOutOfRange {
    pub level: u32,
    pub kappa: u32,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolveError {
    /// The tables claimed colorability but no witness could be recovered.
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("{what} on {size} vertices exceeds the budget of {budget}")]
pub struct BudgetExceeded {
    pub what: &'static str,
    pub size: usize,
    pub budget: usize,
}
