pub mod ast;
pub mod parser;
pub mod printer;
pub mod report;
pub mod runner;
