use std::fmt::Debug;

use num_traits::{Float, FloatConst, FromPrimitive, Num};

/// Coefficient ring for polynomial containers: exact integers, rationals,
/// or complex floats for the numeric idempotents.
pub trait Coefficient: Num + Clone + FromPrimitive + Debug {}

impl<T> Coefficient for T where T: Num + Clone + FromPrimitive + Debug {}

/// Floating-point type for the root-of-unity layer.
pub trait Real: Float + FloatConst + FromPrimitive + Debug + Default + Send + Sync + 'static {}

impl<T> Real for T where T: Float + FloatConst + FromPrimitive + Debug + Default + Send + Sync + 'static {}
