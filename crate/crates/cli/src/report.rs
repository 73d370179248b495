//! Report assembly. The body is deterministic for a fixed input and seed;
//! anything time-dependent lives in the header.

use std::path::Path;
use std::time::{SystemTime, UNIX_EPOCH};

use anyhow::{Context, Result};
use serde_json::{json, Value};

#[derive(Debug)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub warning: Option<String>,
    pub witness: Value,
}

impl Check {
    pub fn new(name: &str, pass: bool, witness: Value) -> Self {
        Check { name: name.to_string(), pass, warning: None, witness }
    }

    pub fn warn(name: &str, warning: Option<String>, witness: Value) -> Self {
        Check { name: name.to_string(), pass: true, warning, witness }
    }
}

pub fn body_from_checks(input_echo: &Value, checks: &[Check]) -> Value {
    let failed = checks.iter().filter(|c| !c.pass).count();
    let warnings = checks.iter().filter(|c| c.warning.is_some()).count();
    json!({
        "version": 1,
        "input": input_echo,
        "checks": checks.iter().map(|c| {
            let mut v = json!({
                "name": c.name,
                "pass": c.pass,
                "witness": c.witness,
            });
            if let Some(w) = &c.warning {
                v["warning"] = json!(w);
            }
            v
        }).collect::<Vec<_>>(),
        "summary": {
            "total": checks.len(),
            "passed": checks.len() - failed,
            "failed": failed,
            "warnings": warnings,
        }
    })
}

pub fn wrap(body: Value) -> Value {
    let now = SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0);
    json!({
        "header": {
            "tool": "endoscopy",
            "tool_version": env!("CARGO_PKG_VERSION"),
            "generated_unix": now,
        },
        "body": body,
    })
}

/// Prints the full report to stdout and optionally writes it to a file.
pub fn emit(report: &Value, json_out: Option<&Path>) -> Result<()> {
    let pretty = serde_json::to_string_pretty(report).context("serializing report")?;
    println!("{pretty}");
    if let Some(path) = json_out {
        std::fs::write(path, format!("{pretty}\n"))
            .with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(())
}
