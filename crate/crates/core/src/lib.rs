pub mod linalg;
pub mod roots;
pub mod forms;
pub mod restriction;
pub mod catalog;
pub mod verdict;
pub mod oracle;
pub mod harness;
pub mod report;
pub mod cli;
