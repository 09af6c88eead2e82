//! Rendering for the three output formats.

use clap::ValueEnum;
use lucastrick_core::Integer;
use serde_json::{json, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    JsonLines,
    Bfile,
}

/// `(index, value)` pairs in the chosen format. Text is one line separated by
/// spaces.
pub fn print_indexed(format: Format, command: &str, first_index: u64, values: &[Integer]) {
    match format {
        Format::Text => {
            let line: Vec<String> = values.iter().map(Integer::to_string).collect();
            println!("{}", line.join(" "));
        }
        Format::Bfile => {
            for (j, v) in values.iter().enumerate() {
                println!("{} {v}", first_index + j as u64);
            }
        }
        Format::JsonLines => {
            for (j, v) in values.iter().enumerate() {
                emit(json!({ "command": command, "index": first_index + j as u64, "value": v.to_string() }));
            }
        }
    }
}

pub fn emit(record: Value) {
    println!("{record}");
}
