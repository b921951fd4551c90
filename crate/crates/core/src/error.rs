use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid rule word: {0}")]
    Rule(String),
    #[error("pattern parse error at line {line}: {msg}")]
    Pattern { line: usize, msg: String },
    #[error("pattern state {state} at ({i},{j}) out of range for modulus {m}")]
    StateOutOfRange { state: u8, i: i64, j: i64, m: u8 },
    #[error("background state {state} out of range for modulus {m}")]
    BackgroundOutOfRange { state: u8, m: u8 },
    #[error("catalog error at line {line}: {msg}")]
    Catalog { line: usize, msg: String },
    #[error("empty word")]
    EmptyWord,
}
