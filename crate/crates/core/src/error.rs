use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex count {0} outside 1..=64")]
    VertexCount(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("({0}, {1}) is not an edge")]
    NotAnEdge(usize, usize),

    #[error("empty graph6 string")]
    Graph6Empty,
    #[error("graph6 long form (n > 62) is not supported")]
    Graph6LongForm,
    #[error("malformed graph6 length byte {0:#04x}")]
    Graph6LengthByte(u8),
    #[error("graph6 byte {byte:#04x} at offset {offset} outside 63..=126")]
    Graph6InvalidByte { offset: usize, byte: u8 },
    #[error("graph6 payload has {found} bytes, expected {expected}")]
    Graph6PayloadLength { expected: usize, found: usize },
    #[error("graph6 padding bits are nonzero")]
    Graph6Padding,

    #[error("{what} supports at most {max} vertices, got {n}")]
    TooLarge { what: &'static str, max: usize, n: usize },
    #[error("graph is not chordal")]
    NotChordal,
    #[error("graph is not connected")]
    NotConnected,
    #[error("graph is complete")]
    Complete,
    #[error("invalid clique tree: {0}")]
    InvalidCliqueTree(String),
    #[error("parameter {name} = {value} below minimum {min}")]
    ParameterTooSmall { name: &'static str, value: usize, min: usize },
    #[error("parameter {name} = {value} out of range {min}..={max}")]
    ParameterOutOfRange { name: &'static str, value: usize, min: usize, max: usize },
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
    #[error("u and v must be distinct (both {0})")]
    SameVertex(usize),
}
