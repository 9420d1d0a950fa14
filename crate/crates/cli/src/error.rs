use spanmu::construct::ConstructError;
use spanmu::format::FormatError;
use spanmu::oracle::OracleError;

pub const VERIFY_FAILED: u8 = 1;
pub const PARSE: u8 = 2;
pub const DISCONNECTED: u8 = 3;
pub const MISMATCH: u8 = 4;
pub const OVERFLOW: u8 = 5;

#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    pub fn new(code: u8, message: impl Into<String>) -> Self {
        CliError { code, message: message.into() }
    }
}

impl From<FormatError> for CliError {
    fn from(e: FormatError) -> Self {
        CliError::new(PARSE, format!("error: {e}"))
    }
}

impl From<OracleError> for CliError {
    fn from(e: OracleError) -> Self {
        let code = match e {
            OracleError::Overflow { .. } => OVERFLOW,
            OracleError::Disconnected => DISCONNECTED,
            _ => PARSE,
        };
        CliError::new(code, format!("error: {e}"))
    }
}

impl From<ConstructError> for CliError {
    fn from(e: ConstructError) -> Self {
        let code = match e {
            ConstructError::Disconnected => DISCONNECTED,
            ConstructError::Internal(_) => VERIFY_FAILED,
            _ => PARSE,
        };
        CliError::new(code, format!("error: {e}"))
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::new(PARSE, format!("error: {e}"))
    }
}
