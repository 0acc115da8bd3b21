pub mod agj;
pub mod error;
pub mod fpmod;
pub mod freyd;
pub mod json;
pub mod linkage;
pub mod ring;
pub mod selftest;
pub mod testkit;

pub use error::{Error, Result};
pub use ring::{kernel_matrix, smith_normal_form, solve_linear, Mat, Ring, RingSpec, Side, Smith};
