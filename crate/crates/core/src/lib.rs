pub mod cli;
pub mod construct;
pub mod entangle;
pub mod equiv;
pub mod gf2;
pub mod oracle;
pub mod poly;
