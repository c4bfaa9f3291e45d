//! Error and validation-failure types.

use alloc::string::String;
use core::fmt;

/// Anything that can go wrong constructing or analyzing a group.
///
/// Internal impossibilities (e.g. a set of automorphisms failing to close
/// under composition) are bugs, not errors, and panic instead.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A size cap was exceeded: `what` names the quantity, `value` is the
    /// offending size, `cap` the configured limit.
    SizeExceeded {
        what: &'static str,
        value: usize,
        cap: usize,
    },
    /// A caller-supplied argument is outside the documented domain.
    InvalidArgument { what: &'static str, detail: String },
    /// A multiplication table failed the validation suite.
    Invariant(InvariantViolation),
    /// The subgroup handed to `quotient` is not normal; conjugating by the
    /// witness element moves it.
    NotNormal { witness: usize },
    /// The subgroup is not stable under the action; the witness operator
    /// moves it.
    NotAdmissible { operator: usize },
    /// A theorem precondition fails, so the criterion does not apply to
    /// this input. Distinct from a `false` verdict.
    NotApplicable { requirement: &'static str },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::SizeExceeded { what, value, cap } => {
                write!(f, "{what} is {value}, exceeding the cap of {cap}")
            }
            Error::InvalidArgument { what, detail } => write!(f, "invalid {what}: {detail}"),
            Error::Invariant(v) => write!(f, "table invariant violated: {v}"),
            Error::NotNormal { witness } => {
                write!(
                    f,
                    "subgroup is not normal: conjugation by element {witness} moves it"
                )
            }
            Error::NotAdmissible { operator } => {
                write!(
                    f,
                    "subgroup is not action-stable: operator {operator} moves it"
                )
            }
            Error::NotApplicable { requirement } => {
                write!(f, "criterion precondition fails: {requirement}")
            }
        }
    }
}

impl core::error::Error for Error {}

impl From<InvariantViolation> for Error {
    fn from(v: InvariantViolation) -> Self {
        Error::Invariant(v)
    }
}

/// First violated multiplication-table invariant, with the offending indices.
///
/// Validation reports violations in a fixed order (shape, entry range,
/// identity, Latin square, inverses, associativity) so the "first" violation
/// is deterministic for a given table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InvariantViolation {
    /// The table has no elements.
    Empty,
    /// Row `row` has `len` entries instead of `order`.
    RowLength {
        row: usize,
        len: usize,
        order: usize,
    },
    /// Entry at (row, col) is outside 0..order.
    EntryRange {
        row: usize,
        col: usize,
        value: usize,
    },
    /// table[0][col] != col, so element 0 is not a left identity.
    IdentityRow { col: usize },
    /// table[row][0] != row, so element 0 is not a right identity.
    IdentityColumn { row: usize },
    /// Row `row` repeats the value `value` (not a permutation).
    RowRepeats { row: usize, value: usize },
    /// Column `col` repeats the value `value` (not a permutation).
    ColumnRepeats { col: usize, value: usize },
    /// Element has no right inverse (no h with g·h = 0).
    NoInverse { element: usize },
    /// (a·b)·c != a·(b·c).
    Associativity { a: usize, b: usize, c: usize },
}

impl fmt::Display for InvariantViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use InvariantViolation::*;
        match *self {
            Empty => write!(f, "table is empty"),
            RowLength { row, len, order } => {
                write!(f, "row {row} has {len} entries, expected {order}")
            }
            EntryRange { row, col, value } => {
                write!(f, "entry ({row},{col}) = {value} is out of range")
            }
            IdentityRow { col } => write!(f, "element 0 is not a left identity at column {col}"),
            IdentityColumn { row } => write!(f, "element 0 is not a right identity at row {row}"),
            RowRepeats { row, value } => write!(f, "row {row} repeats value {value}"),
            ColumnRepeats { col, value } => write!(f, "column {col} repeats value {value}"),
            NoInverse { element } => write!(f, "element {element} has no inverse"),
            Associativity { a, b, c } => {
                write!(f, "associativity fails at ({a},{b},{c})")
            }
        }
    }
}
