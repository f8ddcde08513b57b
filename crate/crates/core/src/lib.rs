//! Symbols and fingerprints of rigid semisimple operators in the classical
//! families B, C and D.

pub mod blocks;
pub mod catalog;
pub mod error;
pub mod fingerprint;
pub mod partition;
pub mod represent;
pub mod rigidity;
pub mod symbol;
pub mod table;
pub mod theory;

pub use error::{Error, Result};
pub use fingerprint::{fingerprint, Fingerprint};
pub use partition::Partition;
pub use symbol::{symbol_of, symbol_of_pair, Symbol};
pub use theory::{Family, OperatorPair, TheoryLabel};
