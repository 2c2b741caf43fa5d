pub mod catalog;
pub mod cli;
pub mod cr;
pub mod embed;
pub mod flat;
pub mod forms;
pub mod liealg;
pub mod linalg;
pub mod report;
pub mod scalar;
pub mod sugrp;
pub mod suites;
