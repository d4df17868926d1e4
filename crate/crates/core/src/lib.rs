pub mod budget;
pub mod complexes;
pub mod coxeter;
pub mod diagram;

pub use budget::Budget;

pub type GramMatrixF32 = coxeter::GramMatrix<f32>;
pub type GramMatrixF64 = coxeter::GramMatrix<f64>;
