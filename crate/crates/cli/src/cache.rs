//! Append-only JSON-lines cache of λ reports.

use std::collections::HashMap;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::PathBuf;

use serde::{Deserialize, Serialize};

use lambda_power::exact::{ExactOptions, LambdaReport};

#[derive(Serialize, Deserialize)]
struct Entry {
    key: String,
    report: LambdaReport,
}

pub struct Cache {
    path: PathBuf,
    entries: HashMap<String, LambdaReport>,
}

impl Cache {
    /// Loads every well-formed line; later lines win. A missing file is an
    /// empty cache.
    pub fn open(path: PathBuf) -> Result<Cache, String> {
        let mut entries = HashMap::new();
        match File::open(&path) {
            Ok(f) => {
                for line in BufReader::new(f).lines() {
                    let line = line.map_err(|e| format!("{}: {e}", path.display()))?;
                    if let Ok(entry) = serde_json::from_str::<Entry>(&line) {
                        entries.insert(entry.key, entry.report);
                    }
                }
            }
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => {}
            Err(e) => return Err(format!("{}: {e}", path.display())),
        }
        Ok(Cache { path, entries })
    }

    pub fn key(canonical_spec: &str, opts: &ExactOptions) -> String {
        let budget = opts.budget.map_or("none".to_string(), |b| b.as_millis().to_string());
        format!(
            "{canonical_spec}|method={}|verify={}|witness={}|clique={}|dp={}|backtrack={}|budget_ms={budget}",
            opts.method.tag(),
            opts.verify,
            opts.witness,
            opts.limits.clique,
            opts.limits.dp,
            opts.limits.backtrack,
        )
    }

    pub fn get(&self, key: &str) -> Option<&LambdaReport> {
        self.entries.get(key)
    }

    pub fn insert(&mut self, key: String, report: &LambdaReport) -> Result<(), String> {
        let line = serde_json::to_string(&Entry {
            key: key.clone(),
            report: report.clone(),
        })
        .map_err(|e| e.to_string())?;
        let mut f = OpenOptions::new()
            .create(true)
            .append(true)
            .open(&self.path)
            .map_err(|e| format!("{}: {e}", self.path.display()))?;
        writeln!(f, "{line}").map_err(|e| format!("{}: {e}", self.path.display()))?;
        self.entries.insert(key, report.clone());
        Ok(())
    }
}
