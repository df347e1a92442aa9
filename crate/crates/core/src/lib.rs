pub mod charring;
pub mod demazure;
pub mod error;
pub mod flags;
pub mod lspath;
pub mod root_data;
pub mod weight;

pub use error::{Error, Result};
pub use root_data::{AffineDatum, Datum, RootDatum, Series, ShortEmbedding, TieBreak, Q};
pub use weight::{Weight, WeylWord};
pub use charring::{FormalCharacter, GradedClassicalCharacter, GradedWeight};
pub use demazure::DemazureLabel;
pub use lspath::{LSPath, PathSet};
pub use flags::{DominantLWeight, FlagDecomposition, FlagPiece};
