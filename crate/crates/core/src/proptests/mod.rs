//! Property tests against independent oracles, one file per module.

mod char_classes;
mod exact_arith;
mod f2_forms;
mod icosa_group;
mod seifert;
