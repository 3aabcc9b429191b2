use std::fs;
use std::io::Read;
use std::path::Path;

use clap::Args;
use tree_backbones::{Error, LabeledTree, PruferSequence};

use crate::Failure;

/// Where a tree comes from: an edge-list file or a Prüfer code.
#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct TreeInput {
    /// Edge-list file (`n` on the first line, then one `u v` pair per line); `-` reads stdin.
    #[arg(long, value_name = "FILE")]
    pub edges: Option<String>,
    /// Prüfer code, inline (`"5 1 1 2"` or `5,1,1,2`: n first) or as a file path.
    #[arg(long, value_name = "CODE|FILE")]
    pub prufer: Option<String>,
}

fn read_source(source: &str) -> Result<String, Failure> {
    if source == "-" {
        let mut text = String::new();
        std::io::stdin().read_to_string(&mut text).map_err(|e| Failure::input(format!("reading stdin: {e}")))?;
        return Ok(text);
    }
    fs::read_to_string(source).map_err(|e| Failure::input(format!("reading {source}: {e}")))
}

impl TreeInput {
    pub fn load(&self) -> Result<LabeledTree, Failure> {
        if let Some(path) = &self.edges {
            let text = read_source(path)?;
            return LabeledTree::parse_edge_text(&text).map_err(|e| Failure::lib(e, Some(path)));
        }
        let code = self.prufer.as_deref().expect("clap enforces one input");
        let text = if code == "-" || Path::new(code).is_file() { read_source(code)? } else { code.replace(',', " ") };
        let seq: PruferSequence = text.parse().map_err(|e: Error| Failure::lib(e, None))?;
        Ok(seq.to_tree())
    }
}
