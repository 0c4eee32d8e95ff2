pub mod json;
pub mod patch;
pub mod schema;

pub use json::{to_text, SCHEMA_VERSION};
pub use patch::{patch_from_json, patch_to_json};
pub use schema::*;
