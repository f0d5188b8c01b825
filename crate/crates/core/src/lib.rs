pub mod cli;
pub mod coordalg;
pub mod dual;
pub mod fodc;
pub mod linalg;
pub mod rmat;
pub mod scalar;
